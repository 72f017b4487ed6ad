//! Arithmetic in GF(4) = {0, 1, ω, ω̄}.
//!
//! Elements are stored as a 2-bit pair `x | (z << 1)` so that the field
//! element of a single-qubit Pauli is its binary symplectic pair:
//!
//! | symbol | bits (x, z) | Pauli |
//! |--------|-------------|-------|
//! | 0      | (0, 0)      | I     |
//! | 1      | (1, 0)      | X     |
//! | ω      | (0, 1)      | Z     |
//! | ω̄      | (1, 1)      | Y     |
//!
//! Addition is XOR of the codes and the trace is the z bit.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

// Multiplication table indexed by code, rows/cols in order 0, 1, ω, ω̄.
const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

const CONJ: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA_BAR: Gf4 = Gf4(3);

    /// All four elements in the canonical message order (0, 1, ω, ω̄).
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];

    /// Builds an element from its 2-bit code; only the low two bits are kept.
    #[inline]
    pub const fn from_code(code: u8) -> Gf4 {
        Gf4(code & 3)
    }

    #[inline]
    pub const fn from_bits(x: u8, z: u8) -> Gf4 {
        Gf4((x & 1) | ((z & 1) << 1))
    }

    #[inline]
    pub const fn code(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub const fn x_bit(self) -> u8 {
        self.0 & 1
    }

    #[inline]
    pub const fn z_bit(self) -> u8 {
        self.0 >> 1
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn conj(self) -> Gf4 {
        Gf4(CONJ[self.0 as usize])
    }

    /// tr(x) = x + x̄, which is 0 on {0, 1} and 1 on {ω, ω̄}.
    #[inline]
    pub const fn trace(self) -> u8 {
        self.0 >> 1
    }

    /// Multiplicative inverse. Coincides with conjugation on nonzero elements.
    pub fn inv(self) -> Option<Gf4> {
        if self.is_zero() {
            None
        } else {
            Some(self.conj())
        }
    }

    /// Symbol used by the matrix text format: `0`, `1`, `w`, `W`.
    pub fn symbol(self) -> char {
        ['0', '1', 'w', 'W'][self.index()]
    }

    pub fn from_symbol(c: &str) -> Result<Gf4> {
        match c {
            "0" => Ok(Gf4::ZERO),
            "1" => Ok(Gf4::ONE),
            "w" => Ok(Gf4::OMEGA),
            "W" => Ok(Gf4::OMEGA_BAR),
            other => Err(Error::Parse(format!("unknown GF(4) symbol {other:?}"))),
        }
    }

    /// Pauli letter for this element under the X=1, Z=ω, Y=ω̄ isomorphism.
    pub fn pauli(self) -> char {
        ['I', 'X', 'Z', 'Y'][self.index()]
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.index()][rhs.index()])
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = ["0", "1", "ω", "ω̄"][self.index()];
        f.write_str(s)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `tr(a · b̄)` summed over the vectors; 0 iff the Paulis commute.
pub fn trace_inner_product(a: &[Gf4], b: &[Gf4]) -> Result<u8> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let sum = a
        .iter()
        .zip(b)
        .fold(Gf4::ZERO, |acc, (&x, &y)| acc + x * y.conj());
    Ok(sum.trace())
}

/// Binary symplectic product of `(u|v)` and `(u'|v')`, each of length 2n.
pub fn symplectic_inner_product(a: &[u8], b: &[u8]) -> Result<u8> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if a.len() % 2 != 0 {
        return Err(Error::OddLength(a.len()));
    }
    let n = a.len() / 2;
    let (u, v) = a.split_at(n);
    let (u2, v2) = b.split_at(n);
    let mut acc = 0u8;
    for i in 0..n {
        acc ^= (u[i] & v2[i]) ^ (u2[i] & v[i]);
    }
    Ok(acc & 1)
}

/// Maps a binary symplectic vector `(u|v)` to `u + ω v` in GF(4)^n.
pub fn symplectic_to_gf4(a: &[u8]) -> Result<Vec<Gf4>> {
    if a.len() % 2 != 0 {
        return Err(Error::OddLength(a.len()));
    }
    let n = a.len() / 2;
    Ok((0..n).map(|i| Gf4::from_bits(a[i], a[n + i])).collect())
}
