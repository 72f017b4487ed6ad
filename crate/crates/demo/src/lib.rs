//! Browser bindings: a GF(4) check-node explorer, the two-qubit
//! degeneracy example, and a small frame-error-rate simulation.

use std::cell::RefCell;

use qldpc::bp::{brute_force_exact, check_update_gf4, BpConfig, FactorGraph};
use qldpc::channel::PauliChannel;
use qldpc::construct::ConstructionSpec;
use qldpc::decoders::{Decoder, DecoderConfig, DecoderId, DecoderState};
use qldpc::gf::Gf4;
use qldpc::sim::{decode_error, run_fixed, trial_rng, Parallelism};
use qldpc::stabilizer::{two_qubit_code, PauliErrorVec, StabilizerCode};
use wasm_bindgen::prelude::*;

fn js_err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Outgoing messages of one trace check. `incoming` holds four
/// probabilities per edge in order (I, X, Z, Y); `coeffs` holds symbol
/// codes 1, 2, 3 for 1, ω, ω̄. Returns the flattened outgoing messages.
#[wasm_bindgen]
pub fn gf4_check(incoming: &[f64], coeffs: &[u8], syndrome: u8) -> Result<Vec<f64>, JsValue> {
    if incoming.len() != 4 * coeffs.len() {
        return Err(js_err("need four probabilities per coefficient"));
    }
    let msgs: Vec<[f64; 4]> = incoming
        .chunks_exact(4)
        .map(|c| {
            let s: f64 = c.iter().sum();
            [c[0] / s, c[1] / s, c[2] / s, c[3] / s]
        })
        .collect();
    let coeffs: Vec<Gf4> = coeffs.iter().map(|&c| Gf4::from_code(c)).collect();
    let out = check_update_gf4(&msgs, &coeffs, syndrome).map_err(js_err)?;
    Ok(out.into_iter().flatten().collect())
}

/// Two-qubit code {XX, ZZ} under depolarizing noise `p` with error IX.
/// Returns exact posterior marginals of both qubits (8 numbers, order
/// I, X, Z, Y), then the BP outcome code (0 success, 1 detected,
/// 2 undetected) and BP's iteration count.
#[wasm_bindgen]
pub fn two_qubit_example(p: f64) -> Result<Vec<f64>, JsValue> {
    let code = two_qubit_code();
    let ch = PauliChannel::depolarizing(p).map_err(js_err)?;
    let e = PauliErrorVec::from_paulis("IX").map_err(js_err)?;
    let z = code.binary_syndrome(&e).map_err(js_err)?;
    let graph = FactorGraph::gf4(code.gf4(), &[]).map_err(js_err)?;
    let exact = brute_force_exact(&graph, z.bits(), &[ch.gf4_prior(); 2]).map_err(js_err)?;
    let decoder = Decoder::new(&code, ch, DecoderConfig::standard(DecoderId::Gf4)).map_err(js_err)?;
    let mut rng = trial_rng(0, 0);
    let r = decode_error(&code, &decoder, &mut DecoderState::new(), &e, &mut rng).map_err(js_err)?;
    let mut out: Vec<f64> = exact.marginals.into_iter().flatten().collect();
    out.push(r.outcome as u8 as f64);
    out.push(r.iterations as f64);
    Ok(out)
}

thread_local! {
    static CODE: RefCell<Option<StabilizerCode>> = const { RefCell::new(None) };
}

fn demo_code() -> Result<StabilizerCode, JsValue> {
    CODE.with(|c| {
        let mut c = c.borrow_mut();
        if c.is_none() {
            *c = Some(
                ConstructionSpec::Bicycle { n: 120, m: 60, w: 10 }
                    .build(0)
                    .map_err(js_err)?,
            );
        }
        Ok(c.clone().expect("just built"))
    })
}

/// Runs `trials` trials of `decoder` on a [[120, 60]] bicycle code under
/// depolarizing noise. Returns (trials, detected, undetected, fer,
/// avg_iterations, avg_attempts).
#[wasm_bindgen]
pub fn simulate(decoder: &str, p: f64, trials: u32, attempts: u32, delta: f64, seed: u64) -> Result<Vec<f64>, JsValue> {
    let code = demo_code()?;
    let id: DecoderId = decoder.parse().map_err(js_err)?;
    let ch = PauliChannel::depolarizing(p).map_err(js_err)?;
    let cfg = DecoderConfig {
        id,
        attempts: attempts.max(1) as usize,
        delta,
        bp: BpConfig::default(),
    };
    let dec = Decoder::new(&code, ch, cfg).map_err(js_err)?;
    let t = run_fixed(&code, &ch, &dec, seed, trials as u64, Parallelism::default()).map_err(js_err)?;
    let n = t.trials.max(1) as f64;
    Ok(vec![
        t.trials as f64,
        t.detected as f64,
        t.undetected as f64,
        t.errors() as f64 / n,
        t.iterations as f64 / n,
        t.attempts as f64 / n,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_explorer_normalizes_and_matches_core() {
        let out = gf4_check(&[0.25; 8], &[1, 2], 1).unwrap();
        assert_eq!(out.len(), 8);
        assert!((out[..4].iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_qubit_example_is_detected() {
        let v = two_qubit_example(0.1).unwrap();
        assert!((v[1] - v[0]).abs() < 1e-12);
        assert!((v[4] - v[5]).abs() < 1e-12);
        assert_eq!(v[8], 1.0);
    }

    #[test]
    fn small_simulation_runs() {
        let v = simulate("supernode", 0.01, 64, 1, 0.0, 1).unwrap();
        assert_eq!(v[0], 64.0);
        assert!(v[3] >= 0.0 && v[3] <= 1.0);
    }
}
