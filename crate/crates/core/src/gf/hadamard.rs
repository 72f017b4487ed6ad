//! Walsh-Hadamard transforms over Z2 and Z2 x Z2.
//!
//! Vectors are indexed by the 2-bit field code, so for GF(4) the order is
//! (0, 1, ω, ω̄) and group addition is XOR of indices. Transforms are
//! unnormalized: applying one twice scales the input by its length.

use crate::error::{Error, Result};

#[inline]
pub fn wht2(v: [f64; 2]) -> [f64; 2] {
    [v[0] + v[1], v[0] - v[1]]
}

#[inline]
pub fn wht4(v: [f64; 4]) -> [f64; 4] {
    let (a, b) = (v[0] + v[1], v[0] - v[1]);
    let (c, d) = (v[2] + v[3], v[2] - v[3]);
    [a + c, b + d, a - c, b - d]
}

/// In-place transform of a length-2 or length-4 array.
#[inline]
pub fn wht<const Q: usize>(v: &mut [f64; Q]) {
    match Q {
        2 => {
            let (a, b) = (v[0], v[1]);
            v[0] = a + b;
            v[1] = a - b;
        }
        4 => {
            let (a, b) = (v[0] + v[1], v[0] - v[1]);
            let (c, d) = (v[2] + v[3], v[2] - v[3]);
            v[0] = a + c;
            v[1] = b + d;
            v[2] = a - c;
            v[3] = b - d;
        }
        _ => unreachable!("transform length must be 2 or 4"),
    }
}

/// Multiplies `v` by the Hadamard matrix of matching size.
pub fn hadamard_transform(v: &[f64]) -> Result<Vec<f64>> {
    match *v {
        [a, b] => Ok(wht2([a, b]).to_vec()),
        [a, b, c, d] => Ok(wht4([a, b, c, d]).to_vec()),
        _ => Err(Error::UnsupportedLength(v.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
        let q = a.len();
        let mut out = vec![0.0; q];
        for i in 0..q {
            for j in 0..q {
                out[i ^ j] += a[i] * b[j];
            }
        }
        out
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        let scale = b.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * scale)
    }

    #[test]
    fn examples() {
        assert_eq!(hadamard_transform(&[1.0, 1.0]).unwrap(), vec![2.0, 0.0]);
        assert_eq!(hadamard_transform(&[1.0, 0.0]).unwrap(), vec![1.0, 1.0]);
        assert_eq!(hadamard_transform(&[1.0, 0.0, 0.0, 0.0]).unwrap(), vec![1.0; 4]);
        assert!(hadamard_transform(&[1.0, 2.0, 3.0]).is_err());
        assert!(hadamard_transform(&[]).is_err());
    }

    #[test]
    fn matches_tensor_square_matrix() {
        let f = [[1.0, 1.0, 1.0, 1.0], [1.0, -1.0, 1.0, -1.0], [1.0, 1.0, -1.0, -1.0], [1.0, -1.0, -1.0, 1.0]];
        let v = [0.3, -1.2, 2.5, 0.7];
        let want: Vec<f64> = f.iter().map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
        assert!(close(&hadamard_transform(&v).unwrap(), &want, 1e-12));
    }

    proptest! {
        #[test]
        fn involution_up_to_scale(v in prop::array::uniform4(-10.0f64..10.0)) {
            let twice = wht4(wht4(v));
            let scaled: Vec<f64> = v.iter().map(|x| 4.0 * x).collect();
            prop_assert!(close(&twice, &scaled, 1e-12));
            let v2 = [v[0], v[1]];
            let twice2 = wht2(wht2(v2));
            prop_assert!(close(&twice2, &[2.0 * v[0], 2.0 * v[1]], 1e-12));
        }

        #[test]
        fn product_of_transforms_is_convolution(a in prop::array::uniform4(0.0f64..1.0), b in prop::array::uniform4(0.0f64..1.0)) {
            let (fa, fb) = (wht4(a), wht4(b));
            let prod = [fa[0] * fb[0], fa[1] * fb[1], fa[2] * fb[2], fa[3] * fb[3]];
            let back: Vec<f64> = wht4(prod).iter().map(|x| x / 4.0).collect();
            prop_assert!(close(&back, &convolve(&a, &b), 1e-12));

            let (fa, fb) = (wht2([a[0], a[1]]), wht2([b[0], b[1]]));
            let back: Vec<f64> = wht2([fa[0] * fb[0], fa[1] * fb[1]]).iter().map(|x| x / 2.0).collect();
            prop_assert!(close(&back, &convolve(&a[..2], &b[..2]), 1e-12));
        }
    }
}
