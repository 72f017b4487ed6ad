//! Exhaustive reference decoder for small graphs.

use super::graph::FactorGraph;
use crate::error::{Error, Result};

/// Largest configuration count `q^n` the brute-force decoder accepts.
pub const MAX_CONFIGS: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq)]
pub struct ExactResult<const Q: usize> {
    /// Posterior marginals given the syndrome.
    pub marginals: Vec<[f64; Q]>,
    /// Most likely error; ties go to the lexicographically smallest.
    pub ml: Vec<u8>,
    /// Total probability of the syndrome.
    pub evidence: f64,
}

/// Enumerates every error consistent with `syndrome`.
pub fn brute_force_exact<const Q: usize>(
    graph: &FactorGraph,
    syndrome: &[u8],
    priors: &[[f64; Q]],
) -> Result<ExactResult<Q>> {
    if graph.q() != Q {
        return Err(Error::Incompatible("alphabet mismatch".into()));
    }
    let n = graph.n();
    if priors.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: priors.len() });
    }
    if syndrome.len() != graph.m() {
        return Err(Error::LengthMismatch { expected: graph.m(), found: syndrome.len() });
    }
    let total = (Q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > MAX_CONFIGS {
        return Err(Error::TooLarge(total));
    }
    let mut marginals = vec![[0.0; Q]; n];
    let mut ml = Vec::new();
    let mut best = -1.0;
    let mut evidence = 0.0;
    let mut e = vec![0u8; n];
    for _ in 0..total {
        if graph.syndrome(&e) == syndrome {
            let w: f64 = e.iter().enumerate().map(|(j, &a)| priors[j][a as usize]).product();
            evidence += w;
            for (j, &a) in e.iter().enumerate() {
                marginals[j][a as usize] += w;
            }
            if w > best {
                best = w;
                ml = e.clone();
            }
        }
        // first position is the most significant digit
        for j in (0..n).rev() {
            e[j] += 1;
            if (e[j] as usize) < Q {
                break;
            }
            e[j] = 0;
        }
    }
    if evidence > 0.0 {
        for m in &mut marginals {
            m.iter_mut().for_each(|x| *x /= evidence);
        }
    }
    Ok(ExactResult { marginals, ml, evidence })
}
