//! Sparse binary and GF(4) matrices, with a bit-packed companion used for
//! elimination.

use std::fmt::Write as _;

use super::gf4::Gf4;
use crate::error::{Error, Result};

/// A binary matrix stored as sorted column supports per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    supports: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    pub fn new(rows: usize, cols: usize, mut supports: Vec<Vec<usize>>) -> Result<Self> {
        if supports.len() != rows {
            return Err(Error::Dimension(format!(
                "{} row supports given for {rows} rows",
                supports.len()
            )));
        }
        for (r, support) in supports.iter_mut().enumerate() {
            support.sort_unstable();
            if let Some(&c) = support.last() {
                if c >= cols {
                    return Err(Error::OutOfRange { index: c, size: cols });
                }
            }
            if support.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Dimension(format!("duplicate position in row {r}")));
            }
        }
        Ok(Self { rows, cols, supports })
    }

    /// Builds from supports where a repeated column cancels (GF(2) sum).
    pub fn from_xor_supports(rows: usize, cols: usize, supports: Vec<Vec<usize>>) -> Result<Self> {
        let reduced = supports
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                let mut out: Vec<usize> = Vec::with_capacity(s.len());
                for c in s {
                    if out.last() == Some(&c) {
                        out.pop();
                    } else {
                        out.push(c);
                    }
                }
                out
            })
            .collect();
        Self::new(rows, cols, reduced)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            supports: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            supports: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn from_dense(dense: &[Vec<u8>]) -> Result<Self> {
        let cols = dense.first().map_or(0, Vec::len);
        let mut supports = Vec::with_capacity(dense.len());
        for row in dense {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            supports.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b & 1 == 1)
                    .map(|(c, _)| c)
                    .collect(),
            );
        }
        Self::new(dense.len(), cols, supports)
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.supports
            .iter()
            .map(|s| {
                let mut row = vec![0u8; self.cols];
                for &c in s {
                    row[c] = 1;
                }
                row
            })
            .collect()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[usize] {
        &self.supports[i]
    }

    pub fn supports(&self) -> &[Vec<usize>] {
        &self.supports
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.supports[i].binary_search(&j).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.supports.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.supports.iter().all(Vec::is_empty)
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.supports.iter().map(Vec::len).collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for s in &self.supports {
            for &c in s {
                w[c] += 1;
            }
        }
        w
    }

    pub fn transpose(&self) -> Self {
        let mut supports = vec![Vec::new(); self.cols];
        for (r, s) in self.supports.iter().enumerate() {
            for &c in s {
                supports[c].push(r);
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            supports,
        }
    }

    /// Product over GF(2).
    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let packed = BitMatrix::from_sparse(other);
        let words = packed.words_per_row;
        let mut out = Vec::with_capacity(self.rows);
        let mut acc = vec![0u64; words];
        for s in &self.supports {
            acc.iter_mut().for_each(|w| *w = 0);
            for &k in s {
                for (a, b) in acc.iter_mut().zip(packed.row(k)) {
                    *a ^= b;
                }
            }
            out.push(bits_to_support(&acc, other.cols));
        }
        Ok(BinaryMatrix {
            rows: self.rows,
            cols: other.cols,
            supports: out,
        })
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .supports
            .iter()
            .map(|s| s.iter().fold(0u8, |acc, &c| acc ^ (v[c] & 1)))
            .collect())
    }

    pub fn add(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("matrix sum with different shapes".into()));
        }
        let supports = self
            .supports
            .iter()
            .zip(&other.supports)
            .map(|(a, b)| symmetric_difference(a, b))
            .collect();
        Ok(BinaryMatrix {
            rows: self.rows,
            cols: self.cols,
            supports,
        })
    }

    /// Horizontal concatenation `(A B ...)`.
    pub fn hstack(blocks: &[&BinaryMatrix]) -> Result<BinaryMatrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Dimension("hstack blocks differ in row count".into()));
        }
        let mut supports = vec![Vec::new(); rows];
        let mut offset = 0;
        for b in blocks {
            for (r, s) in b.supports.iter().enumerate() {
                supports[r].extend(s.iter().map(|c| c + offset));
            }
            offset += b.cols;
        }
        Ok(BinaryMatrix {
            rows,
            cols: offset,
            supports,
        })
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&BinaryMatrix]) -> Result<BinaryMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Dimension("vstack blocks differ in column count".into()));
        }
        let supports: Vec<Vec<usize>> = blocks.iter().flat_map(|b| b.supports.iter().cloned()).collect();
        Ok(BinaryMatrix {
            rows: supports.len(),
            cols,
            supports,
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Result<BinaryMatrix> {
        let mut supports = Vec::with_capacity(rows.len());
        for &r in rows {
            if r >= self.rows {
                return Err(Error::OutOfRange {
                    index: r,
                    size: self.rows,
                });
            }
            supports.push(self.supports[r].clone());
        }
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols: self.cols,
            supports,
        })
    }

    pub fn rank(&self) -> usize {
        BitMatrix::from_sparse(self).rank()
    }

    /// Serializes in the `rows cols` / one-line-per-row index format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for s in &self.supports {
            let line: Vec<String> = s.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text format from a line iterator, consuming exactly
    /// `1 + rows` lines.
    pub fn parse_lines<'a, I: Iterator<Item = &'a str>>(lines: &mut I) -> Result<BinaryMatrix> {
        let (rows, cols) = parse_header(lines)?;
        let mut supports = Vec::with_capacity(rows);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
            let support = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad column index {t:?} in row {r}")))
                })
                .collect::<Result<Vec<_>>>()?;
            supports.push(support);
        }
        BinaryMatrix::new(rows, cols, supports)
    }

    pub fn from_text(text: &str) -> Result<BinaryMatrix> {
        Self::parse_lines(&mut text.lines())
    }
}

fn parse_header<'a, I: Iterator<Item = &'a str>>(lines: &mut I) -> Result<(usize, usize)> {
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing matrix header".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad matrix header {header:?}")))?;
    match dims[..] {
        [r, c] => Ok((r, c)),
        _ => Err(Error::Parse(format!("bad matrix header {header:?}"))),
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn bits_to_support(words: &[u64], len: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in words.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let t = bits.trailing_zeros() as usize;
            let c = w * 64 + t;
            if c < len {
                out.push(c);
            }
            bits &= bits - 1;
        }
    }
    out
}

/// Row-major bit-packed binary matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn from_sparse(m: &BinaryMatrix) -> Self {
        let mut out = Self::zeros(m.rows, m.cols);
        for (r, s) in m.supports.iter().enumerate() {
            for &c in s {
                out.set(r, c);
            }
        }
        out
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words_per_row + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        RowSpace::from_bits(self.clone()).rank()
    }
}

/// Packs a 0/1 vector into 64-bit words.
pub fn pack_bits(v: &[u8]) -> Vec<u64> {
    let mut out = vec![0u64; v.len().div_ceil(64)];
    for (i, &b) in v.iter().enumerate() {
        if b & 1 == 1 {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

/// Reduced row-echelon basis of a binary row space, for rank and
/// membership queries.
#[derive(Clone, Debug)]
pub struct RowSpace {
    cols: usize,
    words_per_row: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &BinaryMatrix) -> Self {
        Self::from_bits(BitMatrix::from_sparse(m))
    }

    fn from_bits(m: BitMatrix) -> Self {
        let words = m.words_per_row;
        let mut rows: Vec<Vec<u64>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
        let mut basis: Vec<Vec<u64>> = Vec::new();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.cols {
            let (w, bit) = (col / 64, 1u64 << (col % 64));
            let Some(found) = (next..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
                continue;
            };
            rows.swap(next, found);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row[w] & bit != 0 {
                    for (a, b) in row.iter_mut().zip(&pivot_row) {
                        *a ^= b;
                    }
                }
            }
            next += 1;
            pivots.push(col);
            if next == rows.len() {
                break;
            }
        }
        // Fully reduced: each pivot column is clear in every other basis row.
        rows.truncate(next);
        basis.extend(rows);
        Self {
            cols: m.cols,
            words_per_row: words,
            basis,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.contains_packed(&pack_bits(v)))
    }

    pub fn contains_packed(&self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.words_per_row);
        let mut acc = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if acc[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in acc.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        acc.iter().all(|&w| w == 0)
    }
}

pub fn binary_rank(m: &BinaryMatrix) -> usize {
    m.rank()
}

pub fn row_space_contains(m: &BinaryMatrix, v: &[u8]) -> Result<bool> {
    RowSpace::new(m).contains(v)
}

/// Square circulant whose row `i` is `first_row` cyclically shifted right by `i`.
pub fn circulant(first_row: &[u8]) -> Result<BinaryMatrix> {
    if first_row.is_empty() {
        return Err(Error::InvalidParameter("circulant needs a nonempty first row".into()));
    }
    let v = first_row.len();
    let support: Vec<usize> = (0..v).filter(|&c| first_row[c] & 1 == 1).collect();
    Ok(circulant_from_support(v, &support))
}

/// Circulant of size `v` from the support of its first row.
pub fn circulant_from_support(v: usize, support: &[usize]) -> BinaryMatrix {
    let supports = (0..v)
        .map(|r| {
            let mut s: Vec<usize> = support.iter().map(|&c| (c + r) % v).collect();
            s.sort_unstable();
            s
        })
        .collect();
    BinaryMatrix {
        rows: v,
        cols: v,
        supports,
    }
}

/// The `v x v` identity shifted circularly right by `s`.
pub fn shifted_identity(v: usize, s: usize) -> BinaryMatrix {
    circulant_from_support(v, &[s % v])
}

/// A sparse matrix over GF(4) with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, Gf4)>>,
}

impl Gf4Matrix {
    pub fn new(rows: usize, cols: usize, mut entries: Vec<Vec<(usize, Gf4)>>) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::Dimension(format!(
                "{} rows given for {rows} rows",
                entries.len()
            )));
        }
        for (r, row) in entries.iter_mut().enumerate() {
            row.sort_unstable_by_key(|&(c, _)| c);
            if row.iter().any(|&(c, _)| c >= cols) {
                return Err(Error::Dimension(format!("column out of range in row {r}")));
            }
            if row.iter().any(|&(_, v)| v.is_zero()) {
                return Err(Error::Dimension(format!("zero coefficient stored in row {r}")));
            }
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Dimension(format!("duplicate position in row {r}")));
            }
        }
        Ok(Self { rows, cols, entries })
    }

    /// `H = H_X + ω H_Z`.
    pub fn from_symplectic(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<Self> {
        if hx.rows != hz.rows || hx.cols != hz.cols {
            return Err(Error::Dimension("H_X and H_Z shapes differ".into()));
        }
        let entries = (0..hx.rows)
            .map(|r| {
                let mut row: Vec<(usize, Gf4)> = Vec::new();
                let (a, b) = (hx.row(r), hz.row(r));
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let ca = a.get(i).copied().unwrap_or(usize::MAX);
                    let cb = b.get(j).copied().unwrap_or(usize::MAX);
                    if ca == cb {
                        row.push((ca, Gf4::OMEGA_BAR));
                        i += 1;
                        j += 1;
                    } else if ca < cb {
                        row.push((ca, Gf4::ONE));
                        i += 1;
                    } else {
                        row.push((cb, Gf4::OMEGA));
                        j += 1;
                    }
                }
                row
            })
            .collect();
        Ok(Self {
            rows: hx.rows,
            cols: hx.cols,
            entries,
        })
    }

    /// Splits back into `(H_X, H_Z)`.
    pub fn to_symplectic(&self) -> (BinaryMatrix, BinaryMatrix) {
        let mut hx = Vec::with_capacity(self.rows);
        let mut hz = Vec::with_capacity(self.rows);
        for row in &self.entries {
            hx.push(row.iter().filter(|(_, v)| v.x_bit() == 1).map(|&(c, _)| c).collect());
            hz.push(row.iter().filter(|(_, v)| v.z_bit() == 1).map(|&(c, _)| c).collect());
        }
        (
            BinaryMatrix {
                rows: self.rows,
                cols: self.cols,
                supports: hx,
            },
            BinaryMatrix {
                rows: self.rows,
                cols: self.cols,
                supports: hz,
            },
        )
    }

    /// Scales every entry of a binary matrix by `coeff`.
    pub fn scaled(m: &BinaryMatrix, coeff: Gf4) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::InvalidParameter("zero scale factor".into()));
        }
        let entries = m
            .supports
            .iter()
            .map(|s| s.iter().map(|&c| (c, coeff)).collect())
            .collect();
        Ok(Self {
            rows: m.rows,
            cols: m.cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Gf4)] {
        &self.entries[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.entries[i]
            .binary_search_by_key(&j, |&(c, _)| c)
            .map_or(Gf4::ZERO, |k| self.entries[i][k].1)
    }

    /// Support pattern as a binary matrix (edges of the factor graph).
    pub fn support(&self) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.rows,
            cols: self.cols,
            supports: self
                .entries
                .iter()
                .map(|r| r.iter().map(|&(c, _)| c).collect())
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for row in &self.entries {
            let mut line = String::new();
            for (k, &(c, v)) in row.iter().enumerate() {
                if k > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{c}:{}", v.symbol());
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let (rows, cols) = parse_header(&mut lines)?;
        let mut entries = Vec::with_capacity(rows);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    let (c, s) = tok
                        .split_once(':')
                        .ok_or_else(|| Error::Parse(format!("entry {tok:?} lacks ':symbol'")))?;
                    let c = c
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad column {c:?}")))?;
                    Ok((c, Gf4::from_symbol(s)?))
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        Self::new(rows, cols, entries)
    }
}
