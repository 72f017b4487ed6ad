//! Pauli channels and the prior vectors fed to the decoders.

use rand::Rng;

use crate::error::{Error, Result};
use crate::stabilizer::PauliErrorVec;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChannelKind {
    Depolarizing { p: f64 },
    Xz { p: f64 },
    Custom,
}

/// Independent, identically distributed single-qubit Pauli noise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliChannel {
    pub p_i: f64,
    pub p_x: f64,
    pub p_y: f64,
    pub p_z: f64,
    kind: ChannelKind,
}

/// Which component an adjusted prior is for, given an estimate of the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjust {
    ZgivenX,
    XgivenZ,
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Probability(p))
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if den > 0.0 {
        num / den
    } else {
        0.0
    }
}

impl PauliChannel {
    pub fn new(p_i: f64, p_x: f64, p_y: f64, p_z: f64) -> Result<Self> {
        for p in [p_i, p_x, p_y, p_z] {
            check_probability(p)?;
        }
        let total = p_i + p_x + p_y + p_z;
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "channel probabilities sum to {total}"
            )));
        }
        Ok(Self {
            p_i,
            p_x,
            p_y,
            p_z,
            kind: ChannelKind::Custom,
        })
    }

    pub fn depolarizing(p: f64) -> Result<Self> {
        check_probability(p)?;
        Ok(Self {
            p_i: 1.0 - p,
            p_x: p / 3.0,
            p_y: p / 3.0,
            p_z: p / 3.0,
            kind: ChannelKind::Depolarizing { p },
        })
    }

    /// Independent X and Z flips, each with probability `q = 1 - sqrt(1 - p)`.
    pub fn xz(p: f64) -> Result<Self> {
        check_probability(p)?;
        let s = (1.0 - p).sqrt();
        let q = 1.0 - s;
        Ok(Self {
            p_i: s * s,
            p_x: s * q,
            p_y: q * q,
            p_z: s * q,
            kind: ChannelKind::Xz { p },
        })
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    /// Total error probability `p = 1 - p_I`.
    pub fn p(&self) -> f64 {
        match self.kind {
            ChannelKind::Depolarizing { p } | ChannelKind::Xz { p } => p,
            ChannelKind::Custom => 1.0 - self.p_i,
        }
    }

    pub fn probs(&self) -> [f64; 4] {
        [self.p_i, self.p_x, self.p_y, self.p_z]
    }

    /// Prior over GF(4) symbols in message order (0, 1, ω, ω̄) = (I, X, Z, Y).
    pub fn gf4_prior(&self) -> [f64; 4] {
        [self.p_i, self.p_x, self.p_z, self.p_y]
    }

    /// `(P(e_X = 1), P(e_Z = 1))`.
    pub fn gf2_priors(&self) -> (f64, f64) {
        match self.kind {
            ChannelKind::Xz { p } => {
                let q = 1.0 - (1.0 - p).sqrt();
                (q, q)
            }
            _ => (self.p_x + self.p_y, self.p_y + self.p_z),
        }
    }

    /// Per-qubit probability that the adjusted component is 1, conditioned
    /// on the estimate of the other component.
    pub fn adjusted_priors(&self, other_estimate: &[u8], which: Adjust) -> Vec<f64> {
        if let ChannelKind::Xz { .. } = self.kind {
            // X and Z components are independent: conditioning changes nothing.
            let (px, pz) = self.gf2_priors();
            let q = if which == Adjust::ZgivenX { pz } else { px };
            return vec![q; other_estimate.len()];
        }
        let (given_one, given_zero) = match which {
            Adjust::ZgivenX => (
                ratio(self.p_y, self.p_x + self.p_y),
                ratio(self.p_z, 1.0 - (self.p_x + self.p_y)),
            ),
            Adjust::XgivenZ => (
                ratio(self.p_y, self.p_y + self.p_z),
                ratio(self.p_x, 1.0 - (self.p_y + self.p_z)),
            ),
        };
        other_estimate
            .iter()
            .map(|&b| if b == 1 { given_one } else { given_zero })
            .collect()
    }

    /// Draws one Pauli per qubit from a single uniform against the
    /// cumulative distribution in order I, X, Y, Z.
    pub fn sample_error<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> PauliErrorVec {
        let c1 = self.p_i;
        let c2 = c1 + self.p_x;
        let c3 = c2 + self.p_y;
        let mut e = PauliErrorVec::zeros(n);
        for j in 0..n {
            let u: f64 = rng.gen();
            if u < c1 {
                continue;
            } else if u < c2 {
                e.x[j] = 1;
            } else if u < c3 {
                e.x[j] = 1;
                e.z[j] = 1;
            } else {
                e.z[j] = 1;
            }
        }
        e
    }
}
