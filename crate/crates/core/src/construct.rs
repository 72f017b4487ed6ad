//! Builders for the six code families: bicycle, BIBD, quasi-cyclic,
//! bicycle-like and the two non-CSS circulant constructions.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{circulant_from_support, shifted_identity, BinaryMatrix};
use crate::stabilizer::StabilizerCode;

const RESAMPLE_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeKind {
    Bicycle,
    Bibd,
    QuasiCyclic,
    BicycleLike,
    NcssA,
    NcssB,
}

impl CodeKind {
    pub const ALL: [CodeKind; 6] = [
        CodeKind::Bicycle,
        CodeKind::Bibd,
        CodeKind::QuasiCyclic,
        CodeKind::BicycleLike,
        CodeKind::NcssA,
        CodeKind::NcssB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CodeKind::Bicycle => "bicycle",
            CodeKind::Bibd => "bibd",
            CodeKind::QuasiCyclic => "quasicyclic",
            CodeKind::BicycleLike => "bicycle_like",
            CodeKind::NcssA => "ncss_a",
            CodeKind::NcssB => "ncss_b",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        CodeKind::ALL
            .into_iter()
            .find(|k| k.as_str() == norm || (norm == "quasi_cyclic" && *k == CodeKind::QuasiCyclic))
            .ok_or_else(|| Error::Parse(format!("unknown code kind {s:?}")))
    }
}

/// Kind plus parameters of a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    Bicycle { n: usize, m: usize, w: usize },
    Bibd { t: u64, alpha: u64 },
    QuasiCyclic { p: u64, sigma: u64, tau: u64, j: usize, k: usize },
    BicycleLike { v: usize, a: usize, weight: usize },
    NcssA { a: usize, block: usize, weight: usize },
    NcssB { a: usize, block: usize, weight: usize },
}

impl ConstructionSpec {
    pub fn kind(&self) -> CodeKind {
        match self {
            ConstructionSpec::Bicycle { .. } => CodeKind::Bicycle,
            ConstructionSpec::Bibd { .. } => CodeKind::Bibd,
            ConstructionSpec::QuasiCyclic { .. } => CodeKind::QuasiCyclic,
            ConstructionSpec::BicycleLike { .. } => CodeKind::BicycleLike,
            ConstructionSpec::NcssA { .. } => CodeKind::NcssA,
            ConstructionSpec::NcssB { .. } => CodeKind::NcssB,
        }
    }

    /// Builds the code. `seed` is ignored by the deterministic kinds.
    pub fn build(&self, seed: u64) -> Result<StabilizerCode> {
        match *self {
            ConstructionSpec::Bicycle { n, m, w } => build_bicycle(n, m, w, seed),
            ConstructionSpec::Bibd { t, alpha } => build_bibd_bose(t, alpha),
            ConstructionSpec::QuasiCyclic { p, sigma, tau, j, k } => build_quasicyclic(p, sigma, tau, j, k),
            ConstructionSpec::BicycleLike { v, a, weight } => build_bicycle_like(v, a, weight, seed),
            ConstructionSpec::NcssA { a, block, weight } => build_ncss_a(a, block, weight, seed),
            ConstructionSpec::NcssB { a, block, weight } => build_ncss_b(a, block, weight, seed),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::Bicycle { n, m, w } => write!(f, "bicycle n={n} m={m} w={w}"),
            ConstructionSpec::Bibd { t, alpha } => write!(f, "bibd t={t} alpha={alpha}"),
            ConstructionSpec::QuasiCyclic { p, sigma, tau, j, k } => {
                write!(f, "quasicyclic P={p} sigma={sigma} tau={tau} J={j} K={k}")
            }
            ConstructionSpec::BicycleLike { v, a, weight } => write!(f, "bicycle_like v={v} a={a} weight={weight}"),
            ConstructionSpec::NcssA { a, block, weight } => write!(f, "ncss_a a={a} block={block} weight={weight}"),
            ConstructionSpec::NcssB { a, block, weight } => write!(f, "ncss_b a={a} block={block} weight={weight}"),
        }
    }
}

/// A reference code: parameters, seed and the `[[n, k]]` it must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Preset {
    pub spec: ConstructionSpec,
    pub seed: u64,
    pub n: usize,
    pub k: usize,
}

impl Preset {
    pub fn for_kind(kind: CodeKind) -> Preset {
        let (spec, seed, n, k) = match kind {
            CodeKind::Bicycle => (ConstructionSpec::Bicycle { n: 400, m: 200, w: 20 }, 20, 400, 200),
            CodeKind::Bibd => (ConstructionSpec::Bibd { t: 10, alpha: 2 }, 0, 610, 490),
            CodeKind::QuasiCyclic => (
                ConstructionSpec::QuasiCyclic { p: 23, sigma: 8, tau: 20, j: 6, k: 6 },
                0,
                506,
                240,
            ),
            CodeKind::BicycleLike => (ConstructionSpec::BicycleLike { v: 100, a: 4, weight: 5 }, 8, 400, 200),
            CodeKind::NcssA => (ConstructionSpec::NcssA { a: 2, block: 100, weight: 3 }, 1, 400, 202),
            CodeKind::NcssB => (ConstructionSpec::NcssB { a: 1, block: 200, weight: 6 }, 1, 400, 201),
        };
        Preset { spec, seed, n, k }
    }

    /// Builds the preset and checks `[[n, k]]`.
    pub fn build(&self) -> Result<StabilizerCode> {
        self.build_with_seed(self.seed)
    }

    pub fn build_with_seed(&self, seed: u64) -> Result<StabilizerCode> {
        let code = self.spec.build(seed)?;
        if code.n() != self.n || code.k() != self.k {
            return Err(Error::Construction(format!(
                "{} with seed {seed} gave [[{}, {}]], expected [[{}, {}]]",
                self.spec,
                code.n(),
                code.k(),
                self.n,
                self.k
            )));
        }
        Ok(code)
    }
}

fn random_circulant(rng: &mut ChaCha8Rng, v: usize, weight: usize) -> Result<BinaryMatrix> {
    if weight == 0 || weight > v {
        return Err(Error::InvalidParameter(format!("circulant weight {weight} for size {v}")));
    }
    let support = index::sample(rng, v, weight).into_vec();
    Ok(circulant_from_support(v, &support))
}

fn random_permutation(rng: &mut ChaCha8Rng, v: usize) -> BinaryMatrix {
    let mut perm: Vec<usize> = (0..v).collect();
    perm.shuffle(rng);
    BinaryMatrix::new(v, v, perm.into_iter().map(|c| vec![c]).collect()).expect("permutation is valid")
}

fn validated(code: StabilizerCode, what: &str) -> Result<StabilizerCode> {
    if let Some(v) = code.commutation_violation() {
        return Err(Error::Construction(format!(
            "{what}: generators {} and {} anticommute",
            v.row_a, v.row_b
        )));
    }
    Ok(code)
}

/// Removes `count` rows one at a time, each time dropping the row whose
/// removal leaves the most uniform column weights (lowest index on ties).
fn remove_rows_uniformly(h: &BinaryMatrix, count: usize) -> Result<BinaryMatrix> {
    let mut weights = h.col_weights();
    let mut alive = vec![true; h.rows()];
    for _ in 0..count {
        // Dropping row r lowers the sum of squared column weights by
        // sum_{c in r} (2 w_c - 1), so maximize sum_{c in r} w_c.
        let mut best: Option<(usize, usize)> = None;
        for r in (0..h.rows()).filter(|&r| alive[r]) {
            let score: usize = h.row(r).iter().map(|&c| weights[c]).sum();
            if best.map_or(true, |(_, s)| score > s) {
                best = Some((r, score));
            }
        }
        let (r, _) = best.ok_or_else(|| Error::InvalidParameter("cannot remove more rows than exist".into()))?;
        alive[r] = false;
        for &c in h.row(r) {
            weights[c] -= 1;
        }
    }
    // Swap kept and removed rows while that lowers the sum of squares.
    let delta = |weights: &[usize], out: usize, into: usize| -> i64 {
        let mut d = 0i64;
        for &c in h.row(out) {
            d -= 2 * weights[c] as i64 - 1;
        }
        for &c in h.row(into) {
            let w = weights[c] as i64 - i64::from(h.row(out).binary_search(&c).is_ok());
            d += 2 * w + 1;
        }
        d
    };
    let mut improved = true;
    while improved {
        improved = false;
        for out in 0..h.rows() {
            if !alive[out] {
                continue;
            }
            let best = (0..h.rows())
                .filter(|&r| !alive[r])
                .map(|r| (delta(&weights, out, r), r))
                .min();
            if let Some((d, into)) = best {
                if d < 0 {
                    alive[out] = false;
                    alive[into] = true;
                    for &c in h.row(out) {
                        weights[c] -= 1;
                    }
                    for &c in h.row(into) {
                        weights[c] += 1;
                    }
                    improved = true;
                }
            }
        }
    }
    let keep: Vec<usize> = (0..h.rows()).filter(|&r| alive[r]).collect();
    h.select_rows(&keep)
}

/// `H₀ = [A Aᵀ]` with `A` a random circulant, thinned to `m/2` rows.
pub fn bicycle_base(n: usize, w: usize, seed: u64) -> Result<BinaryMatrix> {
    if n % 2 != 0 || w % 2 != 0 || w == 0 || w / 2 > n / 2 {
        return Err(Error::InvalidParameter(format!("bicycle needs even n, even w <= n (n={n}, w={w})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_circulant(&mut rng, n / 2, w / 2)?;
    BinaryMatrix::hstack(&[&a, &a.transpose()])
}

/// `(H₀, H̃)`: the full `[A Aᵀ]` and the `m/2`-row matrix kept from it.
/// `A` is redrawn until `H̃` has full rank and column weights within one.
pub fn bicycle_parts(n: usize, m: usize, w: usize, seed: u64) -> Result<(BinaryMatrix, BinaryMatrix)> {
    if m % 2 != 0 || m > n {
        return Err(Error::InvalidParameter(format!("bicycle needs even m <= n (m={m})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_BUDGET {
        let h0 = bicycle_base(n, w, rand::Rng::gen(&mut rng))?;
        let h = remove_rows_uniformly(&h0, (n - m) / 2)?;
        let cw = h.col_weights();
        let spread = cw.iter().max().unwrap_or(&0) - cw.iter().min().unwrap_or(&0);
        if spread <= 1 && h.rank() == h.rows() {
            return Ok((h0, h));
        }
    }
    Err(Error::Construction("no full-rank bicycle matrix with uniform column weights found".into()))
}

pub fn build_bicycle(n: usize, m: usize, w: usize, seed: u64) -> Result<StabilizerCode> {
    let (_, h) = bicycle_parts(n, m, w, seed)?;
    validated(StabilizerCode::from_css(h.clone(), h)?, "bicycle")
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Multiplicative order of `x` modulo `p`, if `x` is a unit.
fn order_mod(x: u64, p: u64) -> Option<u64> {
    if p < 2 || gcd(x % p, p) != 1 {
        return None;
    }
    let mut acc = x % p;
    let mut ord = 1;
    while acc != 1 % p {
        acc = acc * x % p;
        ord += 1;
    }
    Some(ord)
}

/// Base blocks `{0, α^i, α^(2t+i), α^(4t+i)}` of the Bose design on `GF(6t+1)`.
pub fn bose_base_blocks(t: u64, alpha: u64) -> Result<Vec<[u64; 4]>> {
    let v = 6 * t + 1;
    if t == 0 || !is_prime(v) {
        return Err(Error::InvalidParameter(format!("6t+1 = {v} is not prime")));
    }
    if order_mod(alpha, v) != Some(v - 1) {
        return Err(Error::InvalidParameter(format!("{alpha} is not primitive modulo {v}")));
    }
    Ok((0..t)
        .map(|i| {
            [
                0,
                pow_mod(alpha, i, v),
                pow_mod(alpha, 2 * t + i, v),
                pow_mod(alpha, 4 * t + i, v),
            ]
        })
        .collect())
}

/// Incidence matrix `(A_1 ... A_t)` of the Bose `(6t+1, 4, 2)` design.
pub fn bibd_incidence(t: u64, alpha: u64) -> Result<BinaryMatrix> {
    let v = (6 * t + 1) as usize;
    let blocks = bose_base_blocks(t, alpha)?;
    let mut rows = vec![Vec::new(); v];
    for (i, block) in blocks.iter().enumerate() {
        // column beta of A_i is the block B_i + beta
        for beta in 0..v {
            for &x in block {
                rows[(x as usize + beta) % v].push(i * v + beta);
            }
        }
    }
    BinaryMatrix::new(v, blocks.len() * v, rows)
}

pub fn build_bibd_bose(t: u64, alpha: u64) -> Result<StabilizerCode> {
    let h = bibd_incidence(t, alpha)?;
    validated(StabilizerCode::from_css(h.clone(), h)?, "bibd")
}

/// `(P, σ, τ)` is a perfume: σ is a fulfillment of P, τ is a unit and τ is
/// not a power of σ.
pub fn is_perfume(p: u64, sigma: u64, tau: u64) -> bool {
    let Some(ord) = order_mod(sigma, p) else {
        return false;
    };
    let fulfilled = (1..ord).all(|i| gcd((1 + p - pow_mod(sigma, i, p)) % p, p) == 1);
    let tau_unit = gcd(tau % p, p) == 1;
    let tau_outside = (1..=ord).all(|i| pow_mod(sigma, i, p) != tau % p);
    fulfilled && tau_unit && tau_outside
}

/// Base matrices `(c_jl)` (J × L) and `(d_kl)` (K × L) of the quasi-cyclic
/// construction, entries reduced modulo P.
pub fn quasicyclic_base(p: u64, sigma: u64, tau: u64, j: usize, k: usize) -> Result<(Vec<Vec<u64>>, Vec<Vec<u64>>)> {
    if !is_perfume(p, sigma, tau) {
        return Err(Error::InvalidParameter(format!("({p}, {sigma}, {tau}) is not a perfume")));
    }
    let ord = order_mod(sigma, p).expect("perfume implies unit") as i64;
    let l = 2 * ord as usize;
    if j == 0 || k == 0 || j > l / 2 || k > l / 2 {
        return Err(Error::InvalidParameter(format!("J and K must lie in 1..={}", l / 2)));
    }
    let sig = |e: i64| pow_mod(sigma, e.rem_euclid(ord) as u64, p);
    let neg = |x: u64| (p - x % p) % p;
    let c = (0..j as i64)
        .map(|jj| {
            (0..l as i64)
                .map(|ll| {
                    let s = sig(ll - jj);
                    if (ll as usize) < l / 2 {
                        s
                    } else {
                        tau * s % p
                    }
                })
                .collect()
        })
        .collect();
    let d = (0..k as i64)
        .map(|kk| {
            (0..l as i64)
                .map(|ll| {
                    let s = sig(kk - ll);
                    if (ll as usize) < l / 2 {
                        neg(tau * s % p)
                    } else {
                        neg(s)
                    }
                })
                .collect()
        })
        .collect();
    Ok((c, d))
}

/// Replaces each entry `s` with the identity shifted right by `s`.
pub fn lift(base: &[Vec<u64>], p: usize) -> Result<BinaryMatrix> {
    let rows: Vec<BinaryMatrix> = base
        .iter()
        .map(|row| {
            let blocks: Vec<BinaryMatrix> = row.iter().map(|&s| shifted_identity(p, s as usize)).collect();
            BinaryMatrix::hstack(&blocks.iter().collect::<Vec<_>>())
        })
        .collect::<Result<_>>()?;
    BinaryMatrix::vstack(&rows.iter().collect::<Vec<_>>())
}

pub fn build_quasicyclic(p: u64, sigma: u64, tau: u64, j: usize, k: usize) -> Result<StabilizerCode> {
    let (c, d) = quasicyclic_base(p, sigma, tau, j, k)?;
    let hx = lift(&c, p as usize)?;
    let hz = lift(&d, p as usize)?;
    validated(StabilizerCode::from_css(hx, hz)?, "quasicyclic")
}

/// Random circulants `A_1..A_a`; `H̃_X = (A_1 ... A_a)` and `H̃_Z` is the
/// half-shifted sequence of transposes `(A_{a/2+1}ᵀ ... A_aᵀ A_1ᵀ ... A_{a/2}ᵀ)`.
pub fn bicycle_like_blocks(v: usize, a: usize, weight: usize, seed: u64) -> Result<(BinaryMatrix, BinaryMatrix)> {
    if a == 0 || a % 2 != 0 {
        return Err(Error::InvalidParameter(format!("a must be even and positive (a={a})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks: Vec<BinaryMatrix> = (0..a).map(|_| random_circulant(&mut rng, v, weight)).collect::<Result<_>>()?;
    let shifted: Vec<BinaryMatrix> = (0..a).map(|i| blocks[(i + a / 2) % a].transpose()).collect();
    let hx = BinaryMatrix::hstack(&blocks.iter().collect::<Vec<_>>())?;
    let hz = BinaryMatrix::hstack(&shifted.iter().collect::<Vec<_>>())?;
    Ok((hx, hz))
}

pub fn build_bicycle_like(v: usize, a: usize, weight: usize, seed: u64) -> Result<StabilizerCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_BUDGET {
        let (hx, hz) = bicycle_like_blocks(v, a, weight, rand::Rng::gen(&mut rng))?;
        if hx.rank() == v && hz.rank() == v {
            return validated(StabilizerCode::from_css(hx, hz)?, "bicycle_like");
        }
    }
    Err(Error::Construction("no full-rank bicycle-like pair found".into()))
}

fn ncss_blocks(
    a: usize,
    block: usize,
    weight: usize,
    seed: u64,
    assemble: impl Fn(&BinaryMatrix, &BinaryMatrix) -> Result<BinaryMatrix>,
) -> Result<StabilizerCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_permutation(&mut rng, block);
    let mut xs = Vec::with_capacity(a);
    let mut zs = Vec::with_capacity(a);
    for _ in 0..a {
        let bx = random_circulant(&mut rng, block, weight)?;
        let bz = random_circulant(&mut rng, block, weight)?;
        xs.push(assemble(&bx, &p)?);
        zs.push(assemble(&bz, &p)?);
    }
    let hx = BinaryMatrix::hstack(&xs.iter().collect::<Vec<_>>())?;
    let hz = BinaryMatrix::hstack(&zs.iter().collect::<Vec<_>>())?;
    StabilizerCode::new(hx, hz)
}

/// `A^(i) = (B_i  B_iᵀPᵀ; PB_iᵀ  PB_iPᵀ)` over `a` random circulants and
/// one random permutation `P` shared by every block.
pub fn build_ncss_a(a: usize, block: usize, weight: usize, seed: u64) -> Result<StabilizerCode> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be positive".into()));
    }
    let code = ncss_blocks(a, block, weight, seed, |b, p| {
        let bt = b.transpose();
        let pt = p.transpose();
        let top = BinaryMatrix::hstack(&[b, &bt.mul(&pt)?])?;
        let bottom = BinaryMatrix::hstack(&[&p.mul(&bt)?, &p.mul(b)?.mul(&pt)?])?;
        BinaryMatrix::vstack(&[&top, &bottom])
    })?;
    validated(code, "ncss_a")
}

/// `A^(i) = (B_i  B_iᵀPᵀ)` with one shared random permutation `P`.
pub fn build_ncss_b(a: usize, block: usize, weight: usize, seed: u64) -> Result<StabilizerCode> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be positive".into()));
    }
    let code = ncss_blocks(a, block, weight, seed, |b, p| {
        BinaryMatrix::hstack(&[b, &b.transpose().mul(&p.transpose())?])
    })?;
    validated(code, "ncss_b")
}

/// Number of 4-cycles in the factor graph of `m`: pairs of rows sharing
/// `s` columns contribute `s(s-1)/2`.
pub fn count_4cycles(m: &BinaryMatrix) -> u64 {
    let t = m.transpose();
    let mut overlap = vec![0u32; m.rows()];
    let mut total = 0u64;
    for r in 0..m.rows() {
        let mut touched = Vec::new();
        for &c in m.row(r) {
            for &r2 in t.row(c) {
                if r2 > r {
                    if overlap[r2] == 0 {
                        touched.push(r2);
                    }
                    overlap[r2] += 1;
                }
            }
        }
        for r2 in touched {
            let s = overlap[r2] as u64;
            total += s * (s - 1) / 2;
            overlap[r2] = 0;
        }
    }
    total
}

/// 4-cycles of each component graph of a CSS code, or of the GF(4)
/// support graph otherwise.
pub fn component_4cycles(code: &StabilizerCode) -> Vec<u64> {
    match code.css() {
        Some(c) if code.is_dual_containing() => vec![count_4cycles(&c.hx)],
        Some(c) => vec![count_4cycles(&c.hx), count_4cycles(&c.hz)],
        None => vec![count_4cycles(&code.gf4().support())],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfume_examples() {
        assert!(is_perfume(23, 8, 20));
        assert!(!is_perfume(23, 8, 8));
        assert!(is_perfume(23, 2, 5));
        assert_eq!(order_mod(2, 23), Some(11));
        assert!(!is_perfume(22, 3, 5));
    }

    #[test]
    fn bose_small() {
        assert_eq!(bose_base_blocks(1, 3).unwrap(), vec![[0, 1, 2, 4]]);
        assert!(bose_base_blocks(1, 2).is_err());
        assert!(bose_base_blocks(4, 2).is_err());
        let h = bibd_incidence(1, 3).unwrap();
        assert_eq!((h.rows(), h.cols()), (7, 7));
        assert!(h.mul(&h.transpose()).unwrap().is_zero());
    }

    #[test]
    fn four_cycle_examples() {
        assert_eq!(count_4cycles(&BinaryMatrix::identity(5)), 0);
        assert_eq!(count_4cycles(&BinaryMatrix::from_dense(&[vec![1, 1], vec![1, 1]]).unwrap()), 1);
        let hamming = BinaryMatrix::from_dense(&[
            vec![1, 0, 1, 0, 1, 0, 1],
            vec![0, 1, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ])
        .unwrap();
        // every pair of rows shares two columns; rows 0 and 2 share v5, v7
        assert_eq!(count_4cycles(&hamming), 3);
    }

    #[test]
    fn uniform_removal_prefers_heavy_columns() {
        let h = BinaryMatrix::from_dense(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 0, 1]]).unwrap();
        let kept = remove_rows_uniformly(&h, 1).unwrap();
        assert_eq!(kept.to_dense(), vec![vec![1, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in CodeKind::ALL {
            assert_eq!(k.as_str().parse::<CodeKind>().unwrap(), k);
        }
        assert!("torus".parse::<CodeKind>().is_err());
    }
}
