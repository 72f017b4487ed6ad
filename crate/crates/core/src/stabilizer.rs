//! Stabilizer codes in binary symplectic and GF(4) form, syndromes, and
//! decoding outcome classification.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{pack_bits, BinaryMatrix, Gf4, Gf4Matrix, RowSpace};

/// A Pauli error up to phase, stored as its X and Z bit vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PauliErrorVec {
    pub x: Vec<u8>,
    pub z: Vec<u8>,
}

impl PauliErrorVec {
    pub fn zeros(n: usize) -> Self {
        Self {
            x: vec![0; n],
            z: vec![0; n],
        }
    }

    pub fn new(x: Vec<u8>, z: Vec<u8>) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self { x, z })
    }

    pub fn from_gf4(e: &[Gf4]) -> Self {
        Self {
            x: e.iter().map(|s| s.x_bit()).collect(),
            z: e.iter().map(|s| s.z_bit()).collect(),
        }
    }

    /// Parses a string of `I`, `X`, `Y`, `Z` letters.
    pub fn from_paulis(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                'I' => Ok(Gf4::ZERO),
                'X' => Ok(Gf4::ONE),
                'Z' => Ok(Gf4::OMEGA),
                'Y' => Ok(Gf4::OMEGA_BAR),
                other => Err(Error::Parse(format!("not a Pauli letter: {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gf4(&symbols))
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn symbol(&self, j: usize) -> Gf4 {
        Gf4::from_bits(self.x[j], self.z[j])
    }

    pub fn to_gf4(&self) -> Vec<Gf4> {
        (0..self.len()).map(|j| self.symbol(j)).collect()
    }

    /// `(x | z)` as a length-2n binary vector.
    pub fn to_symplectic(&self) -> Vec<u8> {
        let mut v = self.x.clone();
        v.extend_from_slice(&self.z);
        v
    }

    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).filter(|(a, b)| **a | **b != 0).count()
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }

    /// Product of Paulis up to phase.
    pub fn add(&self, other: &PauliErrorVec) -> Result<PauliErrorVec> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
        })
    }
}

impl fmt::Display for PauliErrorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len() {
            write!(f, "{}", self.symbol(j).pauli())?;
        }
        Ok(())
    }
}

/// Syndrome bits, one per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Syndrome(pub Vec<u8>);

impl Syndrome {
    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn select(&self, rows: &[usize]) -> Vec<u8> {
        rows.iter().map(|&r| self.0[r]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Success,
    Detected,
    Undetected,
}

impl Outcome {
    pub fn is_failure(self) -> bool {
        self != Outcome::Success
    }
}

/// Row blocks of a CSS code: X-type rows `(H̃_X | 0)` and Z-type rows
/// `(0 | H̃_Z)`.
#[derive(Clone, Debug)]
pub struct CssBlocks {
    /// Generator indices of the X-type rows, in order.
    pub x_rows: Vec<usize>,
    /// Generator indices of the Z-type rows, in order.
    pub z_rows: Vec<usize>,
    /// H̃_X: detects Z errors, producing z_Z.
    pub hx: BinaryMatrix,
    /// H̃_Z: detects X errors, producing z_X.
    pub hz: BinaryMatrix,
}

impl CssBlocks {
    /// Splits a full syndrome into `(z_Z, z_X)`.
    pub fn split_syndrome(&self, z: &Syndrome) -> (Vec<u8>, Vec<u8>) {
        (z.select(&self.x_rows), z.select(&self.z_rows))
    }
}

/// First pair of generators that fail to commute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommutationViolation {
    pub row_a: usize,
    pub row_b: usize,
}

impl fmt::Display for CommutationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generators {} and {} anticommute", self.row_a, self.row_b)
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    hx: BinaryMatrix,
    hz: BinaryMatrix,
    gf4: Gf4Matrix,
    k: usize,
    css: Option<CssBlocks>,
    dual_containing: bool,
    row_space: RowSpace,
}

impl StabilizerCode {
    /// Builds a code from `H = (H_X | H_Z)`. Commutation is not checked
    /// here; see [`StabilizerCode::validate`].
    pub fn new(hx: BinaryMatrix, hz: BinaryMatrix) -> Result<Self> {
        if hx.rows() != hz.rows() || hx.cols() != hz.cols() {
            return Err(Error::Dimension(format!(
                "H_X is {}x{} but H_Z is {}x{}",
                hx.rows(),
                hx.cols(),
                hz.rows(),
                hz.cols()
            )));
        }
        let n = hx.cols();
        let gf4 = Gf4Matrix::from_symplectic(&hx, &hz)?;
        let full = BinaryMatrix::hstack(&[&hx, &hz])?;
        let row_space = RowSpace::new(&full);
        let k = n.saturating_sub(row_space.rank());
        let css = css_blocks(&hx, &hz);
        let dual_containing = css.as_ref().is_some_and(|c| c.hx == c.hz && c.hx.rows() > 0);
        Ok(Self {
            n,
            hx,
            hz,
            gf4,
            k,
            css,
            dual_containing,
            row_space,
        })
    }

    /// CSS code with generators `(H̃_X 0; 0 H̃_Z)`.
    pub fn from_css(hx_tilde: BinaryMatrix, hz_tilde: BinaryMatrix) -> Result<Self> {
        if hx_tilde.cols() != hz_tilde.cols() {
            return Err(Error::Dimension("H̃_X and H̃_Z differ in length".into()));
        }
        let n = hx_tilde.cols();
        let hx = BinaryMatrix::vstack(&[&hx_tilde, &BinaryMatrix::zeros(hz_tilde.rows(), n)])?;
        let hz = BinaryMatrix::vstack(&[&BinaryMatrix::zeros(hx_tilde.rows(), n), &hz_tilde])?;
        Self::new(hx, hz)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators.
    pub fn m(&self) -> usize {
        self.hx.rows()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn hx(&self) -> &BinaryMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BinaryMatrix {
        &self.hz
    }

    pub fn gf4(&self) -> &Gf4Matrix {
        &self.gf4
    }

    pub fn is_css(&self) -> bool {
        self.css.is_some()
    }

    pub fn is_dual_containing(&self) -> bool {
        self.dual_containing
    }

    pub fn css(&self) -> Option<&CssBlocks> {
        self.css.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.row_space.rank()
    }

    /// First anticommuting generator pair, if any.
    pub fn commutation_violation(&self) -> Option<CommutationViolation> {
        let prod = self.hx.mul(&self.hz.transpose()).ok()?;
        let sym = prod.add(&prod.transpose()).ok()?;
        (0..sym.rows()).find_map(|r| {
            sym.row(r)
                .first()
                .map(|&c| CommutationViolation { row_a: r, row_b: c })
        })
    }

    /// True iff all generators commute and the derived representations agree.
    pub fn validate(&self) -> bool {
        if self.commutation_violation().is_some() {
            return false;
        }
        let (gx, gz) = self.gf4.to_symplectic();
        if gx != self.hx || gz != self.hz {
            return false;
        }
        let full = BinaryMatrix::hstack(&[&self.hx, &self.hz]).expect("shapes checked in new");
        if self.k != self.n - full.rank() {
            return false;
        }
        if let Some(c) = &self.css {
            if self.k + c.hx.rank() + c.hz.rank() != self.n {
                return false;
            }
        }
        true
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }

    /// `z_i = row_i(H_X) · e_Z + row_i(H_Z) · e_X`.
    pub fn binary_syndrome(&self, e: &PauliErrorVec) -> Result<Syndrome> {
        self.check_len(e.len())?;
        let a = self.hx.mul_vec(&e.z)?;
        let b = self.hz.mul_vec(&e.x)?;
        Ok(Syndrome(a.iter().zip(&b).map(|(p, q)| p ^ q).collect()))
    }

    /// `z = tr(H ē)` evaluated in GF(4).
    pub fn gf4_syndrome(&self, e: &[Gf4]) -> Result<Syndrome> {
        self.check_len(e.len())?;
        let bits = (0..self.gf4.rows())
            .map(|i| {
                self.gf4
                    .row(i)
                    .iter()
                    .fold(Gf4::ZERO, |acc, &(j, h)| acc + h * e[j].conj())
                    .trace()
            })
            .collect();
        Ok(Syndrome(bits))
    }

    pub fn in_stabilizer(&self, v: &PauliErrorVec) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.row_space.contains_packed(&pack_bits(&v.to_symplectic())))
    }

    pub fn classify_outcome(&self, e: &PauliErrorVec, estimate: &PauliErrorVec) -> Result<Outcome> {
        self.check_len(e.len())?;
        self.check_len(estimate.len())?;
        if self.binary_syndrome(e)? != self.binary_syndrome(estimate)? {
            return Ok(Outcome::Detected);
        }
        let residual = e.add(estimate)?;
        if self.in_stabilizer(&residual)? {
            Ok(Outcome::Success)
        } else {
            Ok(Outcome::Undetected)
        }
    }

    /// True iff `v` commutes with every generator but is not a stabilizer;
    /// its weight then bounds the distance from above.
    pub fn verify_logical(&self, v: &PauliErrorVec) -> Result<bool> {
        Ok(self.binary_syndrome(v)?.is_zero() && !self.in_stabilizer(v)?)
    }
}

fn css_blocks(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Option<CssBlocks> {
    let mut x_rows = Vec::new();
    let mut z_rows = Vec::new();
    for r in 0..hx.rows() {
        match (hx.row(r).is_empty(), hz.row(r).is_empty()) {
            (false, true) => x_rows.push(r),
            (true, false) => z_rows.push(r),
            (true, true) => {}
            (false, false) => return None,
        }
    }
    Some(CssBlocks {
        hx: hx.select_rows(&x_rows).ok()?,
        hz: hz.select_rows(&z_rows).ok()?,
        x_rows,
        z_rows,
    })
}

/// Header line of the serialized code format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeHeader {
    pub kind: String,
    pub seed: u64,
}

/// Writes `# comment` lines, the `n m kind seed` header, then the H_X and
/// H_Z blocks.
pub fn write_code(code: &StabilizerCode, header: &CodeHeader, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{} {} {} {}\n", code.n(), code.m(), header.kind, header.seed));
    out.push_str(&code.hx().to_text());
    out.push_str(&code.hz().to_text());
    out
}

pub fn read_code(text: &str) -> Result<(StabilizerCode, CodeHeader)> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
    let parts: Vec<&str> = head.split_whitespace().collect();
    let [n, m, kind, seed] = parts[..] else {
        return Err(Error::Parse(format!("bad code header {head:?}")));
    };
    let parse = |s: &str| {
        s.parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad number {s:?} in code header")))
    };
    let (n, m, seed) = (parse(n)? as usize, parse(m)? as usize, parse(seed)?);
    let hx = BinaryMatrix::parse_lines(&mut lines)?;
    let hz = BinaryMatrix::parse_lines(&mut lines)?;
    if hx.cols() != n || hx.rows() != m {
        return Err(Error::Parse(format!(
            "header says {m}x{n} but H_X is {}x{}",
            hx.rows(),
            hx.cols()
        )));
    }
    let code = StabilizerCode::new(hx, hz)?;
    Ok((
        code,
        CodeHeader {
            kind: kind.to_string(),
            seed,
        },
    ))
}

/// The two-qubit code with generators XX and ZZ.
pub fn two_qubit_code() -> StabilizerCode {
    let hx = BinaryMatrix::from_dense(&[vec![1, 1], vec![0, 0]]).expect("static");
    let hz = BinaryMatrix::from_dense(&[vec![0, 0], vec![1, 1]]).expect("static");
    StabilizerCode::new(hx, hz).expect("static")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn steane() -> StabilizerCode {
        let h = BinaryMatrix::from_dense(&[
            vec![1, 0, 1, 0, 1, 0, 1],
            vec![0, 1, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ])
        .unwrap();
        StabilizerCode::from_css(h.clone(), h).unwrap()
    }

    #[test]
    fn two_qubit_example() {
        let code = two_qubit_code();
        assert!(code.validate());
        assert!(code.is_css());
        assert!(code.is_dual_containing());
        assert_eq!(code.k(), 0);
        let e = PauliErrorVec::from_paulis("IX").unwrap();
        assert_eq!(code.binary_syndrome(&e).unwrap().bits(), &[0, 1]);
        assert_eq!(code.gf4_syndrome(&e.to_gf4()).unwrap().bits(), &[0, 1]);
        assert_eq!(code.gf4().row(0), &[(0, Gf4::ONE), (1, Gf4::ONE)]);
        assert_eq!(code.gf4().row(1), &[(0, Gf4::OMEGA), (1, Gf4::OMEGA)]);

        let est = PauliErrorVec::from_paulis("XI").unwrap();
        assert_eq!(code.classify_outcome(&e, &est).unwrap(), Outcome::Success);
        assert_eq!(code.classify_outcome(&e, &e).unwrap(), Outcome::Success);
        let wrong = PauliErrorVec::from_paulis("II").unwrap();
        assert_eq!(code.classify_outcome(&e, &wrong).unwrap(), Outcome::Detected);
    }

    #[test]
    fn dual_containing_is_valid() {
        let code = steane();
        assert!(code.validate());
        assert!(code.is_dual_containing());
        assert_eq!(code.k(), 1);
    }

    #[test]
    fn anticommuting_rows_fail_validation() {
        let hx = BinaryMatrix::from_dense(&[vec![1], vec![0]]).unwrap();
        let hz = BinaryMatrix::from_dense(&[vec![0], vec![1]]).unwrap();
        let code = StabilizerCode::new(hx, hz).unwrap();
        assert!(!code.validate());
        assert_eq!(
            code.commutation_violation(),
            Some(CommutationViolation { row_a: 0, row_b: 1 })
        );
    }

    #[test]
    fn undetected_error() {
        let hx = BinaryMatrix::from_dense(&[vec![1, 1]]).unwrap();
        let hz = BinaryMatrix::from_dense(&[vec![0, 0]]).unwrap();
        let code = StabilizerCode::new(hx, hz).unwrap();
        let e = PauliErrorVec::from_paulis("ZZ").unwrap();
        let est = PauliErrorVec::zeros(2);
        assert_eq!(code.classify_outcome(&e, &est).unwrap(), Outcome::Undetected);
        assert!(code.verify_logical(&e).unwrap());
        assert!(!code.verify_logical(&PauliErrorVec::from_paulis("XX").unwrap()).unwrap());
        assert!(!code.verify_logical(&PauliErrorVec::from_paulis("ZI").unwrap()).unwrap());
    }

    #[test]
    fn length_mismatch() {
        let code = steane();
        assert!(code.binary_syndrome(&PauliErrorVec::zeros(3)).is_err());
        assert!(code.gf4_syndrome(&[Gf4::ONE]).is_err());
        assert!(code.classify_outcome(&PauliErrorVec::zeros(7), &PauliErrorVec::zeros(6)).is_err());
    }

    #[test]
    fn serialization() {
        let code = steane();
        let header = CodeHeader {
            kind: "steane".into(),
            seed: 7,
        };
        let text = write_code(&code, &header, &["k=1".into()]);
        let (back, h) = read_code(&text).unwrap();
        assert_eq!(h, header);
        assert_eq!(back.hx(), code.hx());
        assert_eq!(back.hz(), code.hz());
        assert!(read_code("2 1 x\n").is_err());
    }

    fn random_error(n: usize, bits: &[u8]) -> PauliErrorVec {
        PauliErrorVec::new(bits[..n].to_vec(), bits[n..2 * n].to_vec()).unwrap()
    }

    proptest! {
        #[test]
        fn syndromes_agree_and_are_coset_invariant(
            bits in prop::collection::vec(0u8..2, 14),
            coeffs in prop::collection::vec(0u8..2, 6),
        ) {
            let code = steane();
            let e = random_error(7, &bits);
            let zb = code.binary_syndrome(&e).unwrap();
            prop_assert_eq!(&zb, &code.gf4_syndrome(&e.to_gf4()).unwrap());
            let mut s = PauliErrorVec::zeros(7);
            for (r, c) in coeffs.iter().enumerate() {
                if *c == 1 {
                    let row = PauliErrorVec::new(code.hx().to_dense()[r].clone(), code.hz().to_dense()[r].clone()).unwrap();
                    s = s.add(&row).unwrap();
                }
            }
            let shifted = e.add(&s).unwrap();
            prop_assert_eq!(&zb, &code.binary_syndrome(&shifted).unwrap());
            prop_assert_eq!(code.classify_outcome(&e, &shifted).unwrap(), Outcome::Success);
        }
    }
}
