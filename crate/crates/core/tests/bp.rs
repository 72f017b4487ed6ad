use qldpc::bp::{
    brute_force_exact, check_update_gf2, check_update_gf4, check_update_supernode, decode, supernode_syndrome, BpConfig,
    BpWorkspace, FactorGraph,
};
use qldpc::channel::PauliChannel;
use qldpc::gf::{BinaryMatrix, Gf4};
use qldpc::stabilizer::{two_qubit_code, Outcome, PauliErrorVec, StabilizerCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_dist<const Q: usize>(rng: &mut ChaCha8Rng) -> [f64; Q] {
    let mut v = [0.0; Q];
    for x in v.iter_mut() {
        *x = rng.gen_range(0.01..1.0);
    }
    let s: f64 = v.iter().sum();
    v.map(|x| x / s)
}

/// Direct evaluation of a check's outgoing messages by enumerating every
/// assignment of the other neighbours.
fn brute_check<const Q: usize>(incoming: &[[f64; Q]], satisfied: impl Fn(&[usize]) -> bool) -> Vec<[f64; Q]> {
    let d = incoming.len();
    let mut out = vec![[0.0; Q]; d];
    let total = Q.pow(d as u32);
    let mut assign = vec![0usize; d];
    for idx in 0..total {
        let mut r = idx;
        for a in assign.iter_mut() {
            *a = r % Q;
            r /= Q;
        }
        if !satisfied(&assign) {
            continue;
        }
        for k in 0..d {
            let w: f64 = (0..d).filter(|&l| l != k).map(|l| incoming[l][assign[l]]).product();
            out[k][assign[k]] += w;
        }
    }
    for o in &mut out {
        let s: f64 = o.iter().sum();
        o.iter_mut().for_each(|x| *x /= s);
    }
    out
}

fn rel_err<const Q: usize>(got: &[[f64; Q]], want: &[[f64; Q]]) -> f64 {
    let scale = want.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    let diff = got.iter().flatten().zip(want.iter().flatten()).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    diff / scale
}

#[test]
fn gf2_check_update_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let d = rng.gen_range(1..=8);
        let z: u8 = rng.gen_range(0..2);
        let inc: Vec<[f64; 2]> = (0..d).map(|_| random_dist(&mut rng)).collect();
        let want = brute_check(&inc, |a| a.iter().fold(0, |s, &x| s ^ x) == z as usize);
        let got = check_update_gf2(&inc, z).unwrap();
        assert!(rel_err(&got, &want) <= 1e-12);
    }
}

#[test]
fn gf4_check_update_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let d = rng.gen_range(1..=8);
        let z: u8 = rng.gen_range(0..2);
        let inc: Vec<[f64; 4]> = (0..d).map(|_| random_dist(&mut rng)).collect();
        let coeffs: Vec<Gf4> = (0..d).map(|_| Gf4::from_code(rng.gen_range(1..4))).collect();
        let want = brute_check(&inc, |a| {
            let t = a
                .iter()
                .zip(&coeffs)
                .fold(0, |s, (&x, &h)| s ^ (h * Gf4::from_code(x as u8).conj()).trace());
            t == z
        });
        let got = check_update_gf4(&inc, &coeffs, z).unwrap();
        assert!(rel_err(&got, &want) <= 1e-12);
    }
}

#[test]
fn supernode_check_update_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let d = rng.gen_range(1..=8);
        let zt = Gf4::from_code(rng.gen_range(0..4));
        let inc: Vec<[f64; 4]> = (0..d).map(|_| random_dist(&mut rng)).collect();
        let want = brute_check(&inc, |a| {
            a.iter().fold(Gf4::ZERO, |s, &x| s + Gf4::from_code(x as u8)) == zt
        });
        let got = check_update_supernode(&inc, zt).unwrap();
        assert!(rel_err(&got, &want) <= 1e-12);
    }
}

fn hamming() -> BinaryMatrix {
    BinaryMatrix::from_dense(&[
        vec![1, 0, 1, 0, 1, 0, 1],
        vec![0, 1, 1, 0, 0, 1, 1],
        vec![0, 0, 0, 1, 1, 1, 1],
    ])
    .unwrap()
}

#[test]
fn zero_syndrome_converges_in_one_round() {
    let g = FactorGraph::binary(&hamming(), &[]).unwrap();
    let out = decode(&g, &[0, 0, 0], &[[0.95, 0.05]; 7], &BpConfig::default()).unwrap();
    assert_eq!(out.estimate, vec![0; 7]);
    assert!(out.converged);
    assert_eq!(out.iterations, 1);
}

#[test]
fn hamming_single_errors() {
    let h = hamming();
    let g = FactorGraph::binary(&h, &[]).unwrap();
    let priors = [[0.95, 0.05]; 7];
    for j in 0..7 {
        let mut e = vec![0u8; 7];
        e[j] = 1;
        let z = h.mul_vec(&e).unwrap();
        let exact = brute_force_exact(&g, &z, &priors).unwrap();
        assert_eq!(exact.ml, e);
        // BP settles on a syndrome-matching error, though not always the
        // coset leader: for e_7 every check fires and it returns e_7 plus a
        // weight-3 codeword.
        let out = decode(&g, &z, &priors, &BpConfig::default()).unwrap();
        assert!(out.converged);
        assert_eq!(h.mul_vec(&out.estimate).unwrap(), z);
    }
}

#[test]
fn two_qubit_symmetric_degeneracy() {
    let code = two_qubit_code();
    let ch = PauliChannel::depolarizing(0.1).unwrap();
    let g = FactorGraph::gf4(code.gf4(), &[]).unwrap();
    let e = PauliErrorVec::from_paulis("IX").unwrap();
    let z = code.binary_syndrome(&e).unwrap();
    assert_eq!(z.bits(), &[0, 1]);
    let priors = [ch.gf4_prior(); 2];

    let exact = brute_force_exact(&g, z.bits(), &priors).unwrap();
    let k = 1.0 / (2.0 * ch.p_i * ch.p_x + 2.0 * ch.p_y * ch.p_z);
    let want = [k * ch.p_i * ch.p_x, k * ch.p_i * ch.p_x, k * ch.p_z * ch.p_y, k * ch.p_y * ch.p_z];
    for m in &exact.marginals {
        for a in 0..4 {
            assert!((m[a] - want[a]).abs() < 1e-12);
        }
    }

    let mut ws = BpWorkspace::<4>::new();
    let out = ws.decode(&g, z.bits(), &priors, None, &BpConfig::default()).unwrap();
    assert!(!out.converged);
    let est = PauliErrorVec::from_gf4(&out.estimate.iter().map(|&c| Gf4::from_code(c)).collect::<Vec<_>>());
    assert_eq!(code.classify_outcome(&e, &est).unwrap(), Outcome::Detected);
}

/// Random bipartite tree with `n` variables and `m` checks.
fn random_tree(rng: &mut ChaCha8Rng, n: usize, m: usize) -> BinaryMatrix {
    let mut order: Vec<bool> = std::iter::repeat(true).take(n - 1).chain(std::iter::repeat(false).take(m)).collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    // the first node added after variable 0 must be a check
    if let Some(pos) = order.iter().position(|&is_var| !is_var) {
        order.swap(0, pos);
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut vars = 1;
    for is_var in order {
        if is_var {
            let c = rng.gen_range(0..rows.len());
            rows[c].push(vars);
            vars += 1;
        } else {
            rows.push(vec![rng.gen_range(0..vars)]);
        }
    }
    BinaryMatrix::new(m, n, rows).unwrap()
}

#[test]
fn tree_marginals_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(2..=18);
        let m = rng.gen_range(1..n);
        let h = random_tree(&mut rng, n, m);
        let g = FactorGraph::binary(&h, &[]).unwrap();
        let priors: Vec<[f64; 2]> = (0..n)
            .map(|_| {
                let p = rng.gen_range(0.02..0.45);
                [1.0 - p, p]
            })
            .collect();
        let e: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
        let z = h.mul_vec(&e).unwrap();
        let exact = brute_force_exact(&g, &z, &priors).unwrap();
        let cfg = BpConfig { max_iter: n + m, floor: 1e-30, early_stop: false };
        let mut ws = BpWorkspace::<2>::new();
        ws.decode(&g, &z, &priors, None, &cfg).unwrap();
        for (bp, ex) in ws.marginals().iter().zip(&exact.marginals) {
            assert!((bp[0] - ex[0]).abs() < 1e-9, "{bp:?} vs {ex:?}");
        }
    }
}

#[test]
fn exponent_form_matches_literal_duplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cfg = BpConfig::default();
    for _ in 0..300 {
        let n = rng.gen_range(4..=16);
        let m = rng.gen_range(2..n);
        let dense: Vec<Vec<u8>> = (0..m)
            .map(|_| {
                let mut r: Vec<u8> = (0..n).map(|_| u8::from(rng.gen_bool(0.3))).collect();
                r[rng.gen_range(0..n)] = 1;
                r
            })
            .collect();
        let h = BinaryMatrix::from_dense(&dense).unwrap();
        let dup: Vec<usize> = (0..rng.gen_range(1..=m)).map(|_| rng.gen_range(0..m)).collect();
        let mut copies = vec![0u8; m];
        for &d in &dup {
            copies[d] += 1;
        }
        let e: Vec<u8> = (0..n).map(|_| u8::from(rng.gen_bool(0.15))).collect();
        let z = h.mul_vec(&e).unwrap();
        let priors: Vec<[f64; 2]> = (0..n)
            .map(|_| {
                let p = rng.gen_range(0.05..0.3);
                [1.0 - p, p]
            })
            .collect();

        let literal = FactorGraph::binary(&h, &dup).unwrap();
        let zl = qldpc::bp::expand_syndrome(&z, &dup);
        let a = decode(&literal, &zl, &priors, &cfg).unwrap();
        let plain = FactorGraph::binary(&h, &[]).unwrap();
        let b = BpWorkspace::<2>::new().decode(&plain, &z, &priors, Some(&copies), &cfg).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn supernode_matches_single_error_syndromes_on_steane() {
    let h = hamming();
    let code = StabilizerCode::from_css(h.clone(), h.clone()).unwrap();
    let g = FactorGraph::supernode(&h, &[]).unwrap();
    let ch = PauliChannel::depolarizing(0.03).unwrap();
    let priors = [ch.gf4_prior(); 7];
    for j in 0..7 {
        for sym in 1..4u8 {
            let mut e = vec![0u8; 7];
            e[j] = sym;
            let ex: Vec<u8> = e.iter().map(|&c| c & 1).collect();
            let ez: Vec<u8> = e.iter().map(|&c| c >> 1).collect();
            let zt = supernode_syndrome(&h.mul_vec(&ez).unwrap(), &h.mul_vec(&ex).unwrap());
            assert_eq!(g.syndrome(&e), zt);
            let out = decode(&g, &zt, &priors, &BpConfig::default()).unwrap();
            assert!(out.converged);
            let as_pauli = |v: &[u8]| PauliErrorVec::from_gf4(&v.iter().map(|&c| Gf4::from_code(c)).collect::<Vec<_>>());
            assert_ne!(code.classify_outcome(&as_pauli(&e), &as_pauli(&out.estimate)).unwrap(), Outcome::Detected);
        }
    }
}

#[test]
fn size_and_alphabet_errors() {
    let g = FactorGraph::binary(&hamming(), &[]).unwrap();
    assert!(decode(&g, &[0, 0], &[[0.9, 0.1]; 7], &BpConfig::default()).is_err());
    assert!(decode(&g, &[0, 0, 0], &[[0.9, 0.1]; 6], &BpConfig::default()).is_err());
    assert!(decode(&g, &[0, 0, 0], &[[0.25; 4]; 7], &BpConfig::default()).is_err());
    let big = BinaryMatrix::new(1, 21, vec![vec![0]]).unwrap();
    let g = FactorGraph::binary(&big, &[]).unwrap();
    assert!(brute_force_exact(&g, &[0], &[[0.9, 0.1]; 21]).is_err());
}
