use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf::{BinaryMatrix, Gf4, Gf4Matrix};

/// The constraint each check node enforces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// GF(2): `Σ e_j = z_i`.
    Binary,
    /// GF(4) stabilizer check: `tr(Σ H_ij ē_j) = z_i`.
    Trace,
    /// Merged X/Z check of a dual-containing code: `Σ e_j = z̃_i` in GF(4).
    Supernode,
}

impl CheckKind {
    /// Alphabet size of the error symbols.
    pub fn q(self) -> usize {
        match self {
            CheckKind::Binary => 2,
            CheckKind::Trace | CheckKind::Supernode => 4,
        }
    }
}

/// Bipartite check/error-node graph in compressed form.
///
/// Edges are numbered in ascending `(check, variable)` order. Each
/// variable's edge list is sorted by originating row, so copies of a
/// duplicated row sit next to the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorGraph {
    kind: CheckKind,
    n: usize,
    m: usize,
    check_ptr: Vec<usize>,
    edge_var: Vec<usize>,
    edge_check: Vec<usize>,
    edge_coeff: Vec<Gf4>,
    check_origin: Vec<usize>,
    var_ptr: Vec<usize>,
    var_edges: Vec<usize>,
}

impl FactorGraph {
    fn from_rows(kind: CheckKind, n: usize, rows: Vec<Vec<(usize, Gf4)>>, duplication: &[usize]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidParameter("parity-check matrix has no rows".into()));
        }
        let base = rows.len();
        for &d in duplication {
            if d >= base {
                return Err(Error::OutOfRange { index: d, size: base });
            }
        }
        let all_rows = rows.iter().chain(duplication.iter().map(|&d| &rows[d]));
        let mut check_ptr = vec![0];
        let mut edge_var = Vec::new();
        let mut edge_check = Vec::new();
        let mut edge_coeff = Vec::new();
        for (i, row) in all_rows.enumerate() {
            for &(j, h) in row {
                edge_var.push(j);
                edge_check.push(i);
                edge_coeff.push(h);
            }
            check_ptr.push(edge_var.len());
        }
        let m = check_ptr.len() - 1;
        let mut var_count = vec![0usize; n];
        for &j in &edge_var {
            var_count[j] += 1;
        }
        let mut var_ptr = vec![0usize; n + 1];
        for j in 0..n {
            var_ptr[j + 1] = var_ptr[j] + var_count[j];
        }
        let mut fill = var_ptr.clone();
        let mut var_edges = vec![0usize; edge_var.len()];
        for (e, &j) in edge_var.iter().enumerate() {
            var_edges[fill[j]] = e;
            fill[j] += 1;
        }
        // identical rows, appended or already present, share the index of
        // their first occurrence
        let mut first = HashMap::new();
        let origin: Vec<usize> = rows
            .iter()
            .chain(duplication.iter().map(|&d| &rows[d]))
            .enumerate()
            .map(|(i, r)| *first.entry(r).or_insert(i))
            .collect();
        for j in 0..n {
            var_edges[var_ptr[j]..var_ptr[j + 1]].sort_by_key(|&e| (origin[edge_check[e]], edge_check[e]));
        }
        Ok(Self {
            kind,
            n,
            m,
            check_ptr,
            edge_var,
            edge_check,
            edge_coeff,
            check_origin: origin,
            var_ptr,
            var_edges,
        })
    }

    /// Row of the original matrix that check `i` copies.
    pub fn check_origin(&self, i: usize) -> usize {
        self.check_origin[i]
    }

    /// Binary graph of `h`, with each index in `duplication` appended as an
    /// extra copy of that row.
    pub fn binary(h: &BinaryMatrix, duplication: &[usize]) -> Result<Self> {
        let rows = h
            .supports()
            .iter()
            .map(|s| s.iter().map(|&c| (c, Gf4::ONE)).collect())
            .collect();
        Self::from_rows(CheckKind::Binary, h.cols(), rows, duplication)
    }

    /// GF(4) graph with trace checks.
    pub fn gf4(h: &Gf4Matrix, duplication: &[usize]) -> Result<Self> {
        let rows = (0..h.rows()).map(|i| h.row(i).to_vec()).collect();
        Self::from_rows(CheckKind::Trace, h.cols(), rows, duplication)
    }

    /// Supernode graph on `H̃` of a dual-containing code.
    pub fn supernode(h_tilde: &BinaryMatrix, duplication: &[usize]) -> Result<Self> {
        let rows = h_tilde
            .supports()
            .iter()
            .map(|s| s.iter().map(|&c| (c, Gf4::ONE)).collect())
            .collect();
        Self::from_rows(CheckKind::Supernode, h_tilde.cols(), rows, duplication)
    }

    pub fn kind(&self) -> CheckKind {
        self.kind
    }

    pub fn q(&self) -> usize {
        self.kind.q()
    }

    /// Number of error nodes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of check nodes.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_edges(&self) -> usize {
        self.edge_var.len()
    }

    /// Edge index range of check `i`.
    #[inline]
    pub fn check_edges(&self, i: usize) -> std::ops::Range<usize> {
        self.check_ptr[i]..self.check_ptr[i + 1]
    }

    /// Edge indices incident to variable `j`.
    #[inline]
    pub fn var_edges(&self, j: usize) -> &[usize] {
        &self.var_edges[self.var_ptr[j]..self.var_ptr[j + 1]]
    }

    #[inline]
    pub fn edge_var(&self, e: usize) -> usize {
        self.edge_var[e]
    }

    #[inline]
    pub fn edge_check(&self, e: usize) -> usize {
        self.edge_check[e]
    }

    #[inline]
    pub fn edge_coeff(&self, e: usize) -> Gf4 {
        self.edge_coeff[e]
    }

    /// Coefficients of check `i`'s edges, in edge order.
    #[inline]
    pub fn check_coeffs(&self, i: usize) -> &[Gf4] {
        &self.edge_coeff[self.check_edges(i)]
    }

    /// Some row appears more than once.
    pub fn has_duplicates(&self) -> bool {
        self.check_origin.iter().enumerate().any(|(i, &o)| o != i)
    }

    pub fn check_degree(&self, i: usize) -> usize {
        self.check_ptr[i + 1] - self.check_ptr[i]
    }

    pub fn var_degree(&self, j: usize) -> usize {
        self.var_ptr[j + 1] - self.var_ptr[j]
    }

    pub fn max_check_degree(&self) -> usize {
        (0..self.m).map(|i| self.check_degree(i)).max().unwrap_or(0)
    }

    pub fn max_var_degree(&self) -> usize {
        (0..self.n).map(|j| self.var_degree(j)).max().unwrap_or(0)
    }

    /// Neighbouring variables of check `i`.
    pub fn check_vars(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.check_edges(i).map(move |e| self.edge_var[e])
    }

    /// Syndrome value of check `i` for a hard-decision error (symbol codes).
    #[inline]
    pub fn check_syndrome(&self, i: usize, symbols: &[u8]) -> u8 {
        let mut acc = 0u8;
        match self.kind {
            CheckKind::Binary => {
                for e in self.check_edges(i) {
                    acc ^= symbols[self.edge_var[e]];
                }
            }
            CheckKind::Trace => {
                for e in self.check_edges(i) {
                    let s = Gf4::from_code(symbols[self.edge_var[e]]);
                    acc ^= (self.edge_coeff[e] * s.conj()).trace();
                }
            }
            CheckKind::Supernode => {
                for e in self.check_edges(i) {
                    acc ^= symbols[self.edge_var[e]];
                }
            }
        }
        acc
    }

    /// Syndrome of a hard-decision error over all checks.
    pub fn syndrome(&self, symbols: &[u8]) -> Vec<u8> {
        (0..self.m).map(|i| self.check_syndrome(i, symbols)).collect()
    }
}

/// Extends a syndrome to match a graph built with `duplication`.
pub fn expand_syndrome(z: &[u8], duplication: &[usize]) -> Vec<u8> {
    let mut out = z.to_vec();
    out.extend(duplication.iter().map(|&d| z[d]));
    out
}

/// Combined supernode syndrome `z̃_i = z_X^(i) + ω z_Z^(i)` as symbol codes.
pub fn supernode_syndrome(z_z: &[u8], z_x: &[u8]) -> Vec<u8> {
    z_z.iter()
        .zip(z_x)
        .map(|(&zz, &zx)| Gf4::from_bits(zx, zz).code())
        .collect()
}
