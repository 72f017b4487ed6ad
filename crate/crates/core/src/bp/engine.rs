//! Flooding belief propagation.

use super::check::{check_kernel, normalize, CheckScratch};
use super::graph::FactorGraph;
use crate::error::{Error, Result};

/// Iteration limit and numerical floor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BpConfig {
    pub max_iter: usize,
    /// Smallest value any normalized message entry may take.
    pub floor: f64,
    /// Stop as soon as the hard decision matches the syndrome.
    pub early_stop: bool,
}

impl Default for BpConfig {
    fn default() -> Self {
        Self {
            max_iter: 100,
            floor: 1e-30,
            early_stop: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpOutput {
    /// Hard decision, one symbol code per error node.
    pub estimate: Vec<u8>,
    pub converged: bool,
    /// Number of check rounds run.
    pub iterations: usize,
}

/// Message buffers for one decoder. Reusable across graphs of any size.
#[derive(Clone, Debug, Default)]
pub struct BpWorkspace<const Q: usize> {
    mu: Vec<[f64; Q]>,
    lambda: Vec<[f64; Q]>,
    marginals: Vec<[f64; Q]>,
    estimate: Vec<u8>,
    suffix: Vec<[f64; Q]>,
    groups: Vec<(usize, usize, u32)>,
    scratch: CheckScratch<Q>,
}

const RESCALE_BELOW: f64 = 1e-150;

#[inline]
fn mul_pow<const Q: usize>(acc: &mut [f64; Q], v: &[f64; Q], power: u32) {
    for _ in 0..power {
        let mut max = 0.0f64;
        for (a, b) in acc.iter_mut().zip(v) {
            *a *= b;
            max = max.max(*a);
        }
        if max < RESCALE_BELOW && max > 0.0 {
            let inv = 1.0 / max;
            acc.iter_mut().for_each(|a| *a *= inv);
        }
    }
}

#[inline]
fn argmax<const Q: usize>(v: &[f64; Q]) -> u8 {
    let mut best = 0;
    for a in 1..Q {
        if v[a] > v[best] {
            best = a;
        }
    }
    best as u8
}

impl<const Q: usize> BpWorkspace<Q> {
    pub fn new() -> Self {
        Self {
            mu: Vec::new(),
            lambda: Vec::new(),
            marginals: Vec::new(),
            estimate: Vec::new(),
            suffix: Vec::new(),
            groups: Vec::new(),
            scratch: CheckScratch::new(),
        }
    }

    /// Normalized marginals from the last check round of the most recent
    /// decode.
    pub fn marginals(&self) -> &[[f64; Q]] {
        &self.marginals
    }

    /// Runs BP on `graph` for `syndrome` with per-node `priors`.
    ///
    /// `extra_copies[i] = r` makes check `i` count as `1 + r` identical
    /// copies of itself.
    pub fn decode(
        &mut self,
        graph: &FactorGraph,
        syndrome: &[u8],
        priors: &[[f64; Q]],
        extra_copies: Option<&[u8]>,
        cfg: &BpConfig,
    ) -> Result<BpOutput> {
        if graph.q() != Q {
            return Err(Error::Incompatible(format!(
                "graph alphabet {} does not match workspace alphabet {Q}",
                graph.q()
            )));
        }
        let (n, m, ne) = (graph.n(), graph.m(), graph.num_edges());
        if syndrome.len() != m {
            return Err(Error::LengthMismatch { expected: m, found: syndrome.len() });
        }
        if priors.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: priors.len() });
        }
        if let Some(r) = extra_copies {
            if r.len() != m {
                return Err(Error::LengthMismatch { expected: m, found: r.len() });
            }
        }
        let copies = |i: usize| extra_copies.map_or(0, |r| r[i] as u32);

        self.mu.clear();
        self.mu.extend((0..ne).map(|e| priors[graph.edge_var(e)]));
        self.lambda.clear();
        self.lambda.resize(ne, [0.0; Q]);
        self.marginals.clear();
        self.marginals.extend_from_slice(priors);
        self.estimate.clear();
        self.estimate.extend(priors.iter().map(argmax));

        let grouped = extra_copies.is_some() || graph.has_duplicates();
        let mut converged = false;
        let mut iterations = 0;
        while iterations < cfg.max_iter {
            iterations += 1;

            for i in 0..m {
                let edges = graph.check_edges(i);
                check_kernel(
                    graph.kind(),
                    &self.mu[edges.clone()],
                    graph.check_coeffs(i),
                    syndrome[i],
                    &mut self.lambda[edges],
                    &mut self.scratch,
                    cfg.floor,
                );
            }

            // Marginals and next variable messages in one pass. Edges to
            // copies of one row form a group and receive the same message:
            // prior · ∏_{g<G} λ_g^{c_g} · (λ_G^{c_G - 1} · ∏_{g>G} λ_g^{c_g}).
            // The final prefix is the unnormalized marginal.
            for j in 0..n {
                let ve = graph.var_edges(j);
                self.groups.clear();
                if grouped {
                    let mut k = 0;
                    while k < ve.len() {
                        let lead = graph.edge_check(ve[k]);
                        let origin = graph.check_origin(lead);
                        let start = k;
                        let mut mult = 0;
                        while k < ve.len()
                            && graph.check_origin(graph.edge_check(ve[k])) == origin
                            && syndrome[graph.edge_check(ve[k])] == syndrome[lead]
                        {
                            mult += 1 + copies(graph.edge_check(ve[k]));
                            k += 1;
                        }
                        self.groups.push((start, k, mult));
                    }
                } else {
                    self.groups.extend((0..ve.len()).map(|k| (k, k + 1, 1)));
                }
                let ng = self.groups.len();
                self.suffix.clear();
                self.suffix.resize(ng + 1, [1.0; Q]);
                for g in (0..ng).rev() {
                    let (start, _, mult) = self.groups[g];
                    let mut s = self.suffix[g + 1];
                    mul_pow(&mut s, &self.lambda[ve[start]], mult);
                    self.suffix[g] = s;
                }
                let mut prefix = priors[j];
                for g in 0..ng {
                    let (start, end, mult) = self.groups[g];
                    let lam = self.lambda[ve[start]];
                    let mut t = self.suffix[g + 1];
                    mul_pow(&mut t, &lam, mult - 1);
                    let mut p = prefix;
                    mul_pow(&mut p, &t, 1);
                    normalize(&mut p, cfg.floor);
                    for &e in &ve[start..end] {
                        self.mu[e] = p;
                    }
                    mul_pow(&mut prefix, &lam, mult);
                }
                normalize(&mut prefix, 0.0);
                self.marginals[j] = prefix;
                self.estimate[j] = argmax(&prefix);
            }

            converged = (0..m).all(|i| graph.check_syndrome(i, &self.estimate) == syndrome[i]);
            if converged && cfg.early_stop {
                break;
            }
        }

        Ok(BpOutput {
            estimate: self.estimate.clone(),
            converged,
            iterations,
        })
    }
}

/// One-shot decode with a fresh workspace.
pub fn decode<const Q: usize>(
    graph: &FactorGraph,
    syndrome: &[u8],
    priors: &[[f64; Q]],
    cfg: &BpConfig,
) -> Result<BpOutput> {
    BpWorkspace::<Q>::new().decode(graph, syndrome, priors, None, cfg)
}
