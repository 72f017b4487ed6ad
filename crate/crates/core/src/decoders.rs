//! Standard and modified decoders built on the BP engine.
//!
//! Every modified decoder starts with one attempt of its standard
//! counterpart and only retries when the estimate's syndrome differs from
//! the measured one.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;

use crate::bp::{supernode_syndrome, BpConfig, BpOutput, BpWorkspace, FactorGraph};
use crate::channel::{Adjust, ChannelKind, PauliChannel};
use crate::construct::CodeKind;
use crate::error::{Error, Result};
use crate::gf::{BinaryMatrix, Gf4};
use crate::stabilizer::{PauliErrorVec, StabilizerCode, Syndrome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecoderId {
    Gf2,
    Gf4,
    Supernode,
    Adjusted,
    EfbGf4,
    EfbSupernode,
    PerturbGf4,
    PerturbSupernode,
    AugGf2,
    AugGf4,
    AugSupernode,
    Combined,
}

impl DecoderId {
    pub const ALL: [DecoderId; 12] = [
        DecoderId::Gf2,
        DecoderId::Gf4,
        DecoderId::Supernode,
        DecoderId::Adjusted,
        DecoderId::EfbGf4,
        DecoderId::EfbSupernode,
        DecoderId::PerturbGf4,
        DecoderId::PerturbSupernode,
        DecoderId::AugGf2,
        DecoderId::AugGf4,
        DecoderId::AugSupernode,
        DecoderId::Combined,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DecoderId::Gf2 => "gf2",
            DecoderId::Gf4 => "gf4",
            DecoderId::Supernode => "supernode",
            DecoderId::Adjusted => "adjusted",
            DecoderId::EfbGf4 => "efb-gf4",
            DecoderId::EfbSupernode => "efb-supernode",
            DecoderId::PerturbGf4 => "perturb-gf4",
            DecoderId::PerturbSupernode => "perturb-supernode",
            DecoderId::AugGf2 => "aug-gf2",
            DecoderId::AugGf4 => "aug-gf4",
            DecoderId::AugSupernode => "aug-supernode",
            DecoderId::Combined => "combined",
        }
    }

    /// The standard decoder whose first attempt this one reuses.
    pub fn baseline(self) -> DecoderId {
        match self {
            DecoderId::Gf2 | DecoderId::Adjusted | DecoderId::AugGf2 | DecoderId::Combined => DecoderId::Gf2,
            DecoderId::Gf4 | DecoderId::EfbGf4 | DecoderId::PerturbGf4 | DecoderId::AugGf4 => DecoderId::Gf4,
            DecoderId::Supernode | DecoderId::EfbSupernode | DecoderId::PerturbSupernode | DecoderId::AugSupernode => {
                DecoderId::Supernode
            }
        }
    }

    pub fn is_standard(self) -> bool {
        self.baseline() == self
    }

    /// Decodes the X and Z components separately.
    pub fn is_gf2_based(self) -> bool {
        self.baseline() == DecoderId::Gf2
    }

    pub fn uses_augmentation(self) -> bool {
        matches!(
            self,
            DecoderId::AugGf2 | DecoderId::AugGf4 | DecoderId::AugSupernode | DecoderId::Combined
        )
    }

    pub fn uses_perturbation(self) -> bool {
        matches!(self, DecoderId::PerturbGf4 | DecoderId::PerturbSupernode)
    }
}

impl fmt::Display for DecoderId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DecoderId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        DecoderId::ALL
            .into_iter()
            .find(|d| d.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown decoder {s:?}")))
    }
}

/// Tuned δ per code family and decoder. Zero where δ is unused.
pub fn default_delta(code: CodeKind, id: DecoderId, xz_channel: bool) -> f64 {
    use DecoderId::*;
    if xz_channel {
        return match id {
            AugGf2 | AugGf4 | AugSupernode | Combined => 0.15,
            PerturbGf4 | PerturbSupernode => 100.0,
            _ => 0.0,
        };
    }
    match (code, id) {
        (CodeKind::Bicycle, AugGf2 | Combined) => 0.1,
        (CodeKind::Bicycle, AugGf4 | AugSupernode) => 0.15,
        (CodeKind::Bicycle, PerturbGf4) => 100.0,
        (CodeKind::Bicycle, PerturbSupernode) => 200.0,
        (CodeKind::Bibd, AugGf2 | AugGf4 | AugSupernode | Combined) => 0.3,
        (CodeKind::Bibd, PerturbGf4) => 200.0,
        (CodeKind::Bibd, PerturbSupernode) => 400.0,
        (CodeKind::QuasiCyclic, AugGf2 | Combined) => 0.07,
        (CodeKind::QuasiCyclic, AugGf4) => 0.05,
        (CodeKind::QuasiCyclic, PerturbGf4) => 50.0,
        (CodeKind::BicycleLike, AugGf2 | Combined) => 0.1,
        (CodeKind::BicycleLike, AugGf4) => 0.15,
        (CodeKind::BicycleLike, PerturbGf4) => 100.0,
        (CodeKind::NcssA, AugGf4) => 0.1,
        (CodeKind::NcssA, PerturbGf4) => 25.0,
        (CodeKind::NcssB, AugGf4) => 0.05,
        (CodeKind::NcssB, PerturbGf4) => 25.0,
        _ => 0.0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoderConfig {
    pub id: DecoderId,
    /// Maximum attempts `N` (per component for GF(2)-based decoders).
    pub attempts: usize,
    /// Augmentation density or perturbation strength.
    pub delta: f64,
    pub bp: BpConfig,
}

impl DecoderConfig {
    pub fn standard(id: DecoderId) -> Self {
        Self {
            id,
            attempts: 1,
            delta: 0.0,
            bp: BpConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub estimate: PauliErrorVec,
    /// Estimate's syndrome equals the measured one.
    pub converged: bool,
    /// Check rounds; for GF(2)-based decoders the larger component count
    /// of each attempt, summed over attempts.
    pub iterations: usize,
    pub attempts: usize,
}

/// Scales the non-identity entries of a prior in message order
/// `(I, X, Z, Y)` by `1 + δ` and renormalizes.
pub fn perturb_priors(prior: [f64; 4], delta_x: f64, delta_y: f64, delta_z: f64) -> [f64; 4] {
    let v = [
        prior[0],
        (1.0 + delta_x) * prior[1],
        (1.0 + delta_z) * prior[2],
        (1.0 + delta_y) * prior[3],
    ];
    let s: f64 = v.iter().sum();
    v.map(|x| x / s)
}

/// Enhanced-feedback prior for one qubit, message order `(I, X, Z, Y)`.
///
/// `missed` is the case `z_i = 1, ẑ_i = 0`; otherwise `z_i = 0, ẑ_i = 1`.
/// `generator` is the generator's symbol on the qubit.
pub fn efb_prior(p: f64, generator: Gf4, missed: bool) -> [f64; 4] {
    let (commuting, other) = if missed {
        (p / 2.0, (1.0 - p) / 2.0)
    } else {
        ((1.0 - p) / 2.0, p / 2.0)
    };
    let mut v = [other; 4];
    v[0] = commuting;
    v[generator.index()] = commuting;
    v
}

/// Number of rows duplicated at density `δ`: `δm` rounded half up, at
/// least one when `δ > 0`.
pub fn augmentation_count(m: usize, delta: f64) -> usize {
    if delta <= 0.0 || m == 0 {
        return 0;
    }
    ((delta * m as f64 + 0.5).floor() as usize).clamp(1, m)
}

/// Distinct rows chosen uniformly for duplication, ascending.
pub fn select_augmented_rows<R: Rng + ?Sized>(m: usize, delta: f64, rng: &mut R) -> Vec<usize> {
    let mut rows = index::sample(rng, m, augmentation_count(m, delta)).into_vec();
    rows.sort_unstable();
    rows
}

/// `H_A = (H; H_δ)` and the duplicated row indices, so that
/// `z_A = (z; z[rows])`.
pub fn augment_matrix<R: Rng + ?Sized>(h: &BinaryMatrix, delta: f64, rng: &mut R) -> Result<(BinaryMatrix, Vec<usize>)> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::InvalidParameter(format!("augmentation density {delta} outside [0, 1]")));
    }
    let rows = select_augmented_rows(h.rows(), delta, rng);
    let extra = h.select_rows(&rows)?;
    Ok((BinaryMatrix::vstack(&[h, &extra])?, rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Component {
    X,
    Z,
}

#[derive(Clone, Debug)]
struct Gf2Part {
    /// Graph of H̃_Z, decodes e_X from z_X.
    x_graph: FactorGraph,
    /// Graph of H̃_X, decodes e_Z from z_Z.
    z_graph: FactorGraph,
    x_rows: Vec<usize>,
    z_rows: Vec<usize>,
    prior_x: [f64; 2],
    prior_z: [f64; 2],
}

#[derive(Clone, Debug)]
struct SupernodePart {
    graph: FactorGraph,
    x_rows: Vec<usize>,
    z_rows: Vec<usize>,
}

/// Reusable per-worker buffers.
#[derive(Clone, Debug, Default)]
pub struct DecoderState {
    ws2: BpWorkspace<2>,
    ws4: BpWorkspace<4>,
    copies: Vec<u8>,
}

impl DecoderState {
    pub fn new() -> Self {
        Self::default()
    }
}

/// A decoder bound to one code and channel. Immutable and shareable
/// across threads; mutable state lives in [`DecoderState`].
#[derive(Clone, Debug)]
pub struct Decoder {
    cfg: DecoderConfig,
    channel: PauliChannel,
    n: usize,
    m: usize,
    gf4_prior: [f64; 4],
    gf2: Option<Gf2Part>,
    gf4: Option<FactorGraph>,
    supernode: Option<SupernodePart>,
}

struct Gf2State {
    ex: Vec<u8>,
    ez: Vec<u8>,
    ok_x: bool,
    ok_z: bool,
}

impl Decoder {
    pub fn new(code: &StabilizerCode, channel: PauliChannel, cfg: DecoderConfig) -> Result<Self> {
        let id = cfg.id;
        if cfg.attempts == 0 {
            return Err(Error::InvalidParameter("attempts must be at least 1".into()));
        }
        if cfg.bp.max_iter == 0 {
            return Err(Error::InvalidParameter("iteration cap must be at least 1".into()));
        }
        if id.uses_augmentation() && !(0.0..=1.0).contains(&cfg.delta) {
            return Err(Error::InvalidParameter(format!("augmentation density {} outside [0, 1]", cfg.delta)));
        }
        if id.uses_perturbation() && !(cfg.delta >= 0.0) {
            return Err(Error::InvalidParameter(format!("perturbation strength {} is negative", cfg.delta)));
        }
        let efb = matches!(id, DecoderId::EfbGf4 | DecoderId::EfbSupernode);
        if efb && !matches!(channel.kind(), ChannelKind::Depolarizing { .. }) {
            return Err(Error::Incompatible(format!("{id} requires the depolarizing channel")));
        }

        let mut gf2 = None;
        let mut gf4 = None;
        let mut supernode = None;
        match id.baseline() {
            DecoderId::Gf2 => {
                let css = code
                    .css()
                    .ok_or_else(|| Error::Incompatible(format!("{id} needs a CSS code")))?;
                let (px, pz) = channel.gf2_priors();
                gf2 = Some(Gf2Part {
                    x_graph: FactorGraph::binary(&css.hz, &[])?,
                    z_graph: FactorGraph::binary(&css.hx, &[])?,
                    x_rows: css.x_rows.clone(),
                    z_rows: css.z_rows.clone(),
                    prior_x: [1.0 - px, px],
                    prior_z: [1.0 - pz, pz],
                });
            }
            DecoderId::Supernode => {
                if !code.is_dual_containing() {
                    return Err(Error::Incompatible(format!("{id} needs a dual-containing CSS code")));
                }
                let css = code.css().expect("dual-containing codes are CSS");
                supernode = Some(SupernodePart {
                    graph: FactorGraph::supernode(&css.hx, &[])?,
                    x_rows: css.x_rows.clone(),
                    z_rows: css.z_rows.clone(),
                });
            }
            _ => {}
        }
        if id.baseline() == DecoderId::Gf4 || efb {
            gf4 = Some(FactorGraph::gf4(code.gf4(), &[])?);
        }
        Ok(Self {
            cfg,
            channel,
            n: code.n(),
            m: code.m(),
            gf4_prior: channel.gf4_prior(),
            gf2,
            gf4,
            supernode,
        })
    }

    pub fn config(&self) -> &DecoderConfig {
        &self.cfg
    }

    pub fn channel(&self) -> &PauliChannel {
        &self.channel
    }

    pub fn decode<R: Rng + ?Sized>(&self, state: &mut DecoderState, z: &Syndrome, rng: &mut R) -> Result<DecodeOutcome> {
        if z.len() != self.m {
            return Err(Error::LengthMismatch { expected: self.m, found: z.len() });
        }
        match self.cfg.id {
            DecoderId::Gf2 => self.decode_gf2(state, z),
            DecoderId::Adjusted => self.decode_adjusted(state, z),
            DecoderId::AugGf2 => self.decode_aug_gf2(state, z, rng),
            DecoderId::Combined => self.decode_combined(state, z, rng),
            DecoderId::Gf4 | DecoderId::Supernode => self.decode_q4(state, z, Retry::None, rng),
            DecoderId::PerturbGf4 | DecoderId::PerturbSupernode => self.decode_q4(state, z, Retry::Perturb, rng),
            DecoderId::EfbGf4 | DecoderId::EfbSupernode => self.decode_q4(state, z, Retry::Efb, rng),
            DecoderId::AugGf4 | DecoderId::AugSupernode => self.decode_q4(state, z, Retry::Augment, rng),
        }
    }

    // GF(2) family

    fn gf2(&self) -> &Gf2Part {
        self.gf2.as_ref().expect("gf2 graphs built for gf2-based decoders")
    }

    fn component_syndrome(&self, z: &Syndrome, c: Component) -> Vec<u8> {
        let part = self.gf2();
        match c {
            Component::X => z.select(&part.z_rows),
            Component::Z => z.select(&part.x_rows),
        }
    }

    fn graph(&self, c: Component) -> &FactorGraph {
        let part = self.gf2();
        match c {
            Component::X => &part.x_graph,
            Component::Z => &part.z_graph,
        }
    }

    fn run_component(
        &self,
        ws: &mut BpWorkspace<2>,
        c: Component,
        syndrome: &[u8],
        priors: &[[f64; 2]],
        copies: Option<&[u8]>,
    ) -> Result<BpOutput> {
        ws.decode(self.graph(c), syndrome, priors, copies, &self.cfg.bp)
    }

    fn run_augmented<R: Rng + ?Sized>(
        &self,
        state: &mut DecoderState,
        c: Component,
        syndrome: &[u8],
        priors: &[[f64; 2]],
        rng: &mut R,
    ) -> Result<BpOutput> {
        fill_copies(&mut state.copies, self.graph(c).m(), self.cfg.delta, rng);
        self.run_component(&mut state.ws2, c, syndrome, priors, Some(&state.copies))
    }

    fn standard_priors(&self, c: Component) -> Vec<[f64; 2]> {
        let part = self.gf2();
        let p = match c {
            Component::X => part.prior_x,
            Component::Z => part.prior_z,
        };
        vec![p; self.n]
    }

    fn adjusted_priors(&self, c: Component, st: &Gf2State) -> Vec<[f64; 2]> {
        let q = match c {
            Component::Z => self.channel.adjusted_priors(&st.ex, Adjust::ZgivenX),
            Component::X => self.channel.adjusted_priors(&st.ez, Adjust::XgivenZ),
        };
        q.into_iter().map(|p| [1.0 - p, p]).collect()
    }

    fn gf2_first(&self, state: &mut DecoderState, z: &Syndrome) -> Result<(Gf2State, usize)> {
        let rx = self.run_component(
            &mut state.ws2,
            Component::X,
            &self.component_syndrome(z, Component::X),
            &self.standard_priors(Component::X),
            None,
        )?;
        let rz = self.run_component(
            &mut state.ws2,
            Component::Z,
            &self.component_syndrome(z, Component::Z),
            &self.standard_priors(Component::Z),
            None,
        )?;
        let iters = rx.iterations.max(rz.iterations);
        Ok((
            Gf2State {
                ex: rx.estimate,
                ez: rz.estimate,
                ok_x: rx.converged,
                ok_z: rz.converged,
            },
            iters,
        ))
    }

    fn gf2_outcome(&self, st: Gf2State, iterations: usize, attempts: usize) -> Result<DecodeOutcome> {
        Ok(DecodeOutcome {
            converged: st.ok_x && st.ok_z,
            estimate: PauliErrorVec::new(st.ex, st.ez)?,
            iterations,
            attempts,
        })
    }

    fn apply(st: &mut Gf2State, c: Component, out: BpOutput) {
        match c {
            Component::X => {
                st.ex = out.estimate;
                st.ok_x = out.converged;
            }
            Component::Z => {
                st.ez = out.estimate;
                st.ok_z = out.converged;
            }
        }
    }

    fn decode_gf2(&self, state: &mut DecoderState, z: &Syndrome) -> Result<DecodeOutcome> {
        let (st, iters) = self.gf2_first(state, z)?;
        self.gf2_outcome(st, iters, 1)
    }

    fn decode_adjusted(&self, state: &mut DecoderState, z: &Syndrome) -> Result<DecodeOutcome> {
        let (mut st, mut iters) = self.gf2_first(state, z)?;
        let mut attempts = 1;
        if st.ok_x != st.ok_z {
            let c = if st.ok_x { Component::Z } else { Component::X };
            let priors = self.adjusted_priors(c, &st);
            let out = self.run_component(&mut state.ws2, c, &self.component_syndrome(z, c), &priors, None)?;
            iters += out.iterations;
            attempts += 1;
            Self::apply(&mut st, c, out);
        }
        self.gf2_outcome(st, iters, attempts)
    }

    fn decode_aug_gf2<R: Rng + ?Sized>(&self, state: &mut DecoderState, z: &Syndrome, rng: &mut R) -> Result<DecodeOutcome> {
        let (mut st, mut iters) = self.gf2_first(state, z)?;
        let mut attempts = 1;
        let zx = self.component_syndrome(z, Component::X);
        let zz = self.component_syndrome(z, Component::Z);
        let px = self.standard_priors(Component::X);
        let pz = self.standard_priors(Component::Z);
        while attempts < self.cfg.attempts && !(st.ok_x && st.ok_z) {
            attempts += 1;
            let mut rounds = 0;
            if !st.ok_x {
                let out = self.run_augmented(state, Component::X, &zx, &px, rng)?;
                rounds = rounds.max(out.iterations);
                Self::apply(&mut st, Component::X, out);
            }
            if !st.ok_z {
                let out = self.run_augmented(state, Component::Z, &zz, &pz, rng)?;
                rounds = rounds.max(out.iterations);
                Self::apply(&mut st, Component::Z, out);
            }
            iters += rounds;
        }
        self.gf2_outcome(st, iters, attempts)
    }

    fn decode_combined<R: Rng + ?Sized>(&self, state: &mut DecoderState, z: &Syndrome, rng: &mut R) -> Result<DecodeOutcome> {
        let (mut st, mut iters) = self.gf2_first(state, z)?;
        let mut attempts = 1;
        let n_max = self.cfg.attempts;
        let ok = |st: &Gf2State, c: Component| match c {
            Component::X => st.ok_x,
            Component::Z => st.ok_z,
        };

        if !st.ok_x && !st.ok_z {
            for c in [Component::X, Component::Z] {
                let zc = self.component_syndrome(z, c);
                let priors = self.standard_priors(c);
                for _ in 0..n_max {
                    let out = self.run_augmented(state, c, &zc, &priors, rng)?;
                    iters += out.iterations;
                    attempts += 1;
                    Self::apply(&mut st, c, out);
                    if ok(&st, c) {
                        break;
                    }
                }
                if ok(&st, c) {
                    break;
                }
            }
            if !st.ok_x && !st.ok_z {
                return self.gf2_outcome(st, iters, attempts);
            }
        }

        if st.ok_x != st.ok_z {
            let c = if st.ok_x { Component::Z } else { Component::X };
            let zc = self.component_syndrome(z, c);
            let priors = self.adjusted_priors(c, &st);
            let out = self.run_component(&mut state.ws2, c, &zc, &priors, None)?;
            iters += out.iterations;
            attempts += 1;
            Self::apply(&mut st, c, out);
            for _ in 0..n_max {
                if ok(&st, c) {
                    break;
                }
                let out = self.run_augmented(state, c, &zc, &priors, rng)?;
                iters += out.iterations;
                attempts += 1;
                Self::apply(&mut st, c, out);
            }
        }
        self.gf2_outcome(st, iters, attempts)
    }

    // GF(4) and supernode family

    fn decode_q4<R: Rng + ?Sized>(&self, state: &mut DecoderState, z: &Syndrome, retry: Retry, rng: &mut R) -> Result<DecodeOutcome> {
        let (graph, syndrome) = match (&self.supernode, &self.gf4) {
            (Some(sn), _) => {
                let zz = z.select(&sn.x_rows);
                let zx = z.select(&sn.z_rows);
                (&sn.graph, supernode_syndrome(&zz, &zx))
            }
            (None, Some(g)) => (g, z.bits().to_vec()),
            (None, None) => unreachable!("a GF(4) graph is built for every GF(4)-based decoder"),
        };
        let base = vec![self.gf4_prior; self.n];
        let bp = &self.cfg.bp;
        let mut out = state.ws4.decode(graph, &syndrome, &base, None, bp)?;
        let mut iters = out.iterations;
        let mut attempts = 1;

        if !out.converged && self.cfg.attempts > 1 {
            match retry {
                Retry::None => {}
                Retry::Perturb => {
                    let mut priors = base.clone();
                    while !out.converged && attempts < self.cfg.attempts {
                        let frustrated: Vec<usize> = (0..graph.m())
                            .filter(|&i| graph.check_syndrome(i, &out.estimate) != syndrome[i])
                            .collect();
                        let i = frustrated[rng.gen_range(0..frustrated.len())];
                        priors.copy_from_slice(&base);
                        for j in graph.check_vars(i) {
                            let dx = rng.gen::<f64>() * self.cfg.delta;
                            let dy = rng.gen::<f64>() * self.cfg.delta;
                            let dz = rng.gen::<f64>() * self.cfg.delta;
                            priors[j] = perturb_priors(self.gf4_prior, dx, dy, dz);
                        }
                        out = state.ws4.decode(graph, &syndrome, &priors, None, bp)?;
                        iters += out.iterations;
                        attempts += 1;
                    }
                }
                Retry::Efb => {
                    let ChannelKind::Depolarizing { p } = self.channel.kind() else {
                        unreachable!("checked in Decoder::new")
                    };
                    let full = self.gf4.as_ref().expect("EFB builds the GF(4) graph");
                    let z_hat = full.syndrome(&out.estimate);
                    let frustrated: Vec<usize> = (0..full.m()).filter(|&i| z_hat[i] != z.bits()[i]).collect();
                    let mut priors = base.clone();
                    'outer: for &i in &frustrated {
                        let missed = z.bits()[i] == 1;
                        for e in full.check_edges(i) {
                            if out.converged || attempts >= self.cfg.attempts {
                                break 'outer;
                            }
                            let j = full.edge_var(e);
                            priors.copy_from_slice(&base);
                            priors[j] = efb_prior(p, full.edge_coeff(e), missed);
                            out = state.ws4.decode(graph, &syndrome, &priors, None, bp)?;
                            iters += out.iterations;
                            attempts += 1;
                        }
                    }
                }
                Retry::Augment => {
                    while !out.converged && attempts < self.cfg.attempts {
                        fill_copies(&mut state.copies, graph.m(), self.cfg.delta, rng);
                        out = state.ws4.decode(graph, &syndrome, &base, Some(&state.copies), bp)?;
                        iters += out.iterations;
                        attempts += 1;
                    }
                }
            }
        }

        let symbols: Vec<Gf4> = out.estimate.iter().map(|&c| Gf4::from_code(c)).collect();
        Ok(DecodeOutcome {
            estimate: PauliErrorVec::from_gf4(&symbols),
            converged: out.converged,
            iterations: iters,
            attempts,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Retry {
    None,
    Perturb,
    Efb,
    Augment,
}

fn fill_copies<R: Rng + ?Sized>(copies: &mut Vec<u8>, m: usize, delta: f64, rng: &mut R) {
    copies.clear();
    copies.resize(m, 0);
    for r in select_augmented_rows(m, delta, rng) {
        copies[r] = 1;
    }
}

/// Runs the two independent binary decodes of a CSS code and returns the
/// X- and Z-component results.
pub fn gf2_pair_decode(
    code: &StabilizerCode,
    z: &Syndrome,
    priors_x: &[[f64; 2]],
    priors_z: &[[f64; 2]],
    cfg: &BpConfig,
) -> Result<(BpOutput, BpOutput)> {
    let css = code
        .css()
        .ok_or_else(|| Error::Incompatible("GF(2) decoding needs a CSS code".into()))?;
    let (z_z, z_x) = css.split_syndrome(z);
    let mut ws = BpWorkspace::<2>::new();
    let x = ws.decode(&FactorGraph::binary(&css.hz, &[])?, &z_x, priors_x, None, cfg)?;
    let zc = ws.decode(&FactorGraph::binary(&css.hx, &[])?, &z_z, priors_z, None, cfg)?;
    Ok((x, zc))
}
