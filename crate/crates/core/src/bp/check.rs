//! Check-to-error messages computed in the Hadamard domain.
//!
//! For a check with incoming messages `μ_k`, each message is first permuted
//! so the constraint becomes a plain sum of symbols, transformed, and the
//! leave-one-out products are transformed back to give `λ̃`. The outgoing
//! message is then read off `λ̃` by a per-kind index map.

use super::graph::CheckKind;
use crate::error::{Error, Result};
use crate::gf::{wht, Gf4};

/// Scratch space reused across check updates.
#[derive(Clone, Debug, Default)]
pub(crate) struct CheckScratch<const Q: usize> {
    transformed: Vec<[f64; Q]>,
    prefix: Vec<[f64; Q]>,
}

impl<const Q: usize> CheckScratch<Q> {
    pub(crate) fn new() -> Self {
        Self {
            transformed: Vec::new(),
            prefix: Vec::new(),
        }
    }
}

#[inline]
fn mul_assign<const Q: usize>(a: &mut [f64; Q], b: &[f64; Q]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x *= y;
    }
}

/// Clamps entries to `floor` and rescales to sum to one.
#[inline]
pub(crate) fn normalize<const Q: usize>(v: &mut [f64; Q], floor: f64) {
    let mut sum = 0.0;
    for x in v.iter_mut() {
        if !(*x >= floor) {
            *x = floor;
        }
        sum += *x;
    }
    let inv = 1.0 / sum;
    for x in v.iter_mut() {
        *x *= inv;
    }
}

/// Computes all outgoing messages of one check.
///
/// `syndrome` is the check's target: a bit for `Binary`/`Trace`, a GF(4)
/// code for `Supernode`. `coeffs` is only read for `Trace`.
pub(crate) fn check_kernel<const Q: usize>(
    kind: CheckKind,
    incoming: &[[f64; Q]],
    coeffs: &[Gf4],
    syndrome: u8,
    outgoing: &mut [[f64; Q]],
    scratch: &mut CheckScratch<Q>,
    floor: f64,
) {
    let d = incoming.len();
    debug_assert_eq!(Q, kind.q());
    scratch.transformed.clear();
    for (k, mu) in incoming.iter().enumerate() {
        let mut t = match kind {
            // μ̃^t = μ^{H · conj(t)} turns tr(Σ H ē) into tr(Σ t).
            CheckKind::Trace => {
                let h = coeffs[k];
                let mut t = [0.0; Q];
                for (s, slot) in t.iter_mut().enumerate() {
                    *slot = mu[(h * Gf4::from_code(s as u8).conj()).index()];
                }
                t
            }
            CheckKind::Binary | CheckKind::Supernode => *mu,
        };
        wht(&mut t);
        scratch.transformed.push(t);
    }

    // prefix[k] = product of transforms 0..k
    scratch.prefix.clear();
    let mut acc = [1.0; Q];
    for t in &scratch.transformed {
        scratch.prefix.push(acc);
        mul_assign(&mut acc, t);
    }

    let mut suffix = [1.0; Q];
    for k in (0..d).rev() {
        let mut lt = scratch.prefix[k];
        mul_assign(&mut lt, &suffix);
        wht(&mut lt);
        let out = &mut outgoing[k];
        match kind {
            CheckKind::Binary | CheckKind::Supernode => {
                for (a, slot) in out.iter_mut().enumerate() {
                    *slot = lt[a ^ syndrome as usize];
                }
            }
            CheckKind::Trace => {
                let h = coeffs[k];
                let base = (syndrome as usize) << 1;
                for (a, slot) in out.iter_mut().enumerate() {
                    let s = base ^ (h * Gf4::from_code(a as u8).conj()).index();
                    *slot = 0.5 * (lt[s] + lt[s ^ 1]);
                }
            }
        }
        normalize(out, floor);
        mul_assign(&mut suffix, &scratch.transformed[k]);
    }
}

fn run_kernel<const Q: usize>(kind: CheckKind, incoming: &[[f64; Q]], coeffs: &[Gf4], syndrome: u8) -> Result<Vec<[f64; Q]>> {
    if incoming.is_empty() {
        return Err(Error::InvalidParameter("check node has no neighbours".into()));
    }
    let mut out = vec![[0.0; Q]; incoming.len()];
    let mut scratch = CheckScratch::new();
    check_kernel(kind, incoming, coeffs, syndrome, &mut out, &mut scratch, 0.0);
    Ok(out)
}

/// Binary check update for target bit `z`.
pub fn check_update_gf2(incoming: &[[f64; 2]], z: u8) -> Result<Vec<[f64; 2]>> {
    run_kernel(CheckKind::Binary, incoming, &[], z & 1)
}

/// GF(4) stabilizer check update with edge coefficients `coeffs` and
/// syndrome bit `z`.
pub fn check_update_gf4(incoming: &[[f64; 4]], coeffs: &[Gf4], z: u8) -> Result<Vec<[f64; 4]>> {
    if coeffs.len() != incoming.len() {
        return Err(Error::LengthMismatch {
            expected: incoming.len(),
            found: coeffs.len(),
        });
    }
    if coeffs.iter().any(|c| c.is_zero()) {
        return Err(Error::InvalidParameter("zero coefficient on a check edge".into()));
    }
    run_kernel(CheckKind::Trace, incoming, coeffs, z & 1)
}

/// Supernode check update for combined syndrome `z̃`.
pub fn check_update_supernode(incoming: &[[f64; 4]], z_tilde: Gf4) -> Result<Vec<[f64; 4]>> {
    run_kernel(CheckKind::Supernode, incoming, &[], z_tilde.code())
}
