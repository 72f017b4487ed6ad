//! Seeded Monte Carlo frame-error-rate estimation.
//!
//! Trial `t` draws everything (error, then decoder randomness) from a
//! ChaCha8 stream seeded with [`mix_seed`]`(base_seed, t)`, so results do
//! not depend on how trials are spread over threads. Trials run in batches
//! of [`BATCH`]; the stopping rule is evaluated after each whole batch.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel::PauliChannel;
use crate::decoders::{DecodeOutcome, Decoder, DecoderConfig, DecoderState};
use crate::error::{Error, Result};
use crate::stabilizer::{Outcome, PauliErrorVec, StabilizerCode};

pub const BATCH: u64 = 256;

/// SplitMix64 finalizer applied to `base ^ (t * golden)`.
pub fn mix_seed(base_seed: u64, trial: u64) -> u64 {
    let mut z = base_seed ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_rng(base_seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(base_seed, trial))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChannelName {
    Depolarizing,
    Xz,
}

impl ChannelName {
    pub fn as_str(self) -> &'static str {
        match self {
            ChannelName::Depolarizing => "depolarizing",
            ChannelName::Xz => "xz",
        }
    }

    pub fn at(self, p: f64) -> Result<PauliChannel> {
        match self {
            ChannelName::Depolarizing => PauliChannel::depolarizing(p),
            ChannelName::Xz => PauliChannel::xz(p),
        }
    }
}

impl FromStr for ChannelName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "depolarizing" | "depol" => Ok(ChannelName::Depolarizing),
            "xz" => Ok(ChannelName::Xz),
            _ => Err(Error::Parse(format!("unknown channel {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialResult {
    pub outcome: Outcome,
    pub iterations: usize,
    pub attempts: usize,
}

/// Samples an error, decodes its syndrome and classifies the estimate.
pub fn run_trial(
    code: &StabilizerCode,
    channel: &PauliChannel,
    decoder: &Decoder,
    state: &mut DecoderState,
    rng: &mut ChaCha8Rng,
) -> Result<TrialResult> {
    let e = channel.sample_error(code.n(), rng);
    decode_error(code, decoder, state, &e, rng)
}

/// Decodes a given error; the outcome is Detected whenever the estimate's
/// syndrome differs from the measured one.
pub fn decode_error(
    code: &StabilizerCode,
    decoder: &Decoder,
    state: &mut DecoderState,
    e: &PauliErrorVec,
    rng: &mut ChaCha8Rng,
) -> Result<TrialResult> {
    let z = code.binary_syndrome(e)?;
    let DecodeOutcome {
        estimate,
        converged,
        iterations,
        attempts,
    } = decoder.decode(state, &z, rng)?;
    let outcome = if converged {
        code.classify_outcome(e, &estimate)?
    } else {
        Outcome::Detected
    };
    Ok(TrialResult {
        outcome,
        iterations,
        attempts,
    })
}

/// Check rounds charged to a decode: per attempt the larger of the two
/// component counts (use 0 for an absent component), summed.
pub fn iterations_metric(per_attempt: &[(usize, usize)]) -> usize {
    per_attempt.iter().map(|&(a, b)| a.max(b)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StoppingRule {
    pub min_errors: u64,
    pub max_trials: u64,
}

impl Default for StoppingRule {
    fn default() -> Self {
        Self {
            min_errors: 100,
            max_trials: 10_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub trials: u64,
    pub detected: u64,
    pub undetected: u64,
    pub iterations: u64,
    pub attempts: u64,
}

impl Tally {
    pub fn push(&mut self, r: &TrialResult) {
        self.trials += 1;
        match r.outcome {
            Outcome::Success => {}
            Outcome::Detected => self.detected += 1,
            Outcome::Undetected => self.undetected += 1,
        }
        self.iterations += r.iterations as u64;
        self.attempts += r.attempts as u64;
    }

    pub fn merge(&mut self, o: &Tally) {
        self.trials += o.trials;
        self.detected += o.detected;
        self.undetected += o.undetected;
        self.iterations += o.iterations;
        self.attempts += o.attempts;
    }

    pub fn errors(&self) -> u64 {
        self.detected + self.undetected
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointSummary {
    pub trials: u64,
    pub detected: u64,
    pub undetected: u64,
    pub fer: f64,
    pub fer_stderr: f64,
    pub avg_iterations: f64,
    pub avg_attempts: f64,
    /// Seconds, when timing is on.
    pub wall_time: Option<f64>,
    /// Hit `max_trials` before `min_errors`.
    pub low_confidence: bool,
}

impl PointSummary {
    pub fn from_tally(t: &Tally, min_errors: u64, wall_time: Option<f64>) -> Self {
        let n = t.trials.max(1) as f64;
        let fer = t.errors() as f64 / n;
        Self {
            trials: t.trials,
            detected: t.detected,
            undetected: t.undetected,
            fer,
            fer_stderr: (fer * (1.0 - fer) / n).sqrt(),
            avg_iterations: t.iterations as f64 / n,
            avg_attempts: t.attempts as f64 / n,
            wall_time,
            low_confidence: t.errors() < min_errors,
        }
    }
}

/// Worker pool settings. `threads = 0` uses the global pool.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Parallelism {
    pub threads: usize,
}

/// Results of trials `range` in trial order.
pub fn run_trials(
    code: &StabilizerCode,
    channel: &PauliChannel,
    decoder: &Decoder,
    base_seed: u64,
    range: std::ops::Range<u64>,
    par: Parallelism,
) -> Result<Vec<TrialResult>> {
    let one = |state: &mut DecoderState, t: u64| {
        let mut rng = trial_rng(base_seed, t);
        run_trial(code, channel, decoder, state, &mut rng)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let work = || {
            range
                .clone()
                .into_par_iter()
                .map_init(DecoderState::new, |s, t| one(s, t))
                .collect::<Result<Vec<_>>>()
        };
        if par.threads == 0 {
            work()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(par.threads)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?
                .install(work)
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = par;
        let mut state = DecoderState::new();
        range.map(|t| one(&mut state, t)).collect()
    }
}

/// Runs whole batches until `min_errors` errors or `max_trials` trials.
pub fn run_point(
    code: &StabilizerCode,
    channel: &PauliChannel,
    decoder: &Decoder,
    base_seed: u64,
    rule: StoppingRule,
    par: Parallelism,
) -> Result<(PointSummary, Tally)> {
    if rule.min_errors == 0 || rule.max_trials == 0 {
        return Err(Error::InvalidParameter("min_errors and max_trials must be positive".into()));
    }
    let start = Instant::now();
    let mut tally = Tally::default();
    // batches evaluated together; results past the stopping batch are discarded
    let round = 8 * BATCH * par_width(par) as u64;
    'rounds: while tally.trials < rule.max_trials && tally.errors() < rule.min_errors {
        let hi = (tally.trials + round).min(rule.max_trials);
        let results = run_trials(code, channel, decoder, base_seed, tally.trials..hi, par)?;
        for batch in results.chunks(BATCH as usize) {
            for r in batch {
                tally.push(r);
            }
            if tally.errors() >= rule.min_errors {
                break 'rounds;
            }
        }
    }
    let wall = start.elapsed().as_secs_f64();
    Ok((PointSummary::from_tally(&tally, rule.min_errors, Some(wall)), tally))
}

fn par_width(par: Parallelism) -> usize {
    #[cfg(feature = "parallel")]
    {
        if par.threads == 0 {
            rayon::current_num_threads()
        } else {
            par.threads
        }
        .max(1)
        .min(8)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = par;
        1
    }
}

/// Tally of trials `0..trials` for a fixed count (no stopping rule).
pub fn run_fixed(
    code: &StabilizerCode,
    channel: &PauliChannel,
    decoder: &Decoder,
    base_seed: u64,
    trials: u64,
    par: Parallelism,
) -> Result<Tally> {
    let mut tally = Tally::default();
    for r in run_trials(code, channel, decoder, base_seed, 0..trials, par)? {
        tally.push(&r);
    }
    Ok(tally)
}

/// One sweep: a decoder over a list of physical error rates.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    /// Label for the `code` column.
    pub code_name: String,
    /// Label for the `kind` column.
    pub kind: String,
    pub channel: ChannelName,
    pub ps: Vec<f64>,
    pub decoder: DecoderConfig,
    /// Standard decoder run on the same seeds for the normalized FER.
    pub baseline: Option<DecoderConfig>,
    pub base_seed: u64,
    pub rule: StoppingRule,
    pub par: Parallelism,
    /// Record wall time; off gives byte-reproducible output.
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub code: String,
    pub kind: String,
    pub n: usize,
    pub k: usize,
    pub channel: ChannelName,
    pub p: f64,
    pub decoder: String,
    pub delta: f64,
    pub attempts: usize,
    pub imax: usize,
    pub seed: u64,
    pub summary: PointSummary,
    pub norm_fer: Option<f64>,
}

pub const CSV_HEADER: [&str; 20] = [
    "code",
    "kind",
    "n",
    "k",
    "channel",
    "p",
    "decoder",
    "delta",
    "N",
    "imax",
    "seed",
    "trials",
    "detected",
    "undetected",
    "fer",
    "fer_stderr",
    "norm_fer",
    "avg_iters",
    "avg_attempts",
    "wall_s",
];

impl SweepRow {
    pub fn record(&self) -> Vec<String> {
        let s = &self.summary;
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            self.code.clone(),
            self.kind.clone(),
            self.n.to_string(),
            self.k.to_string(),
            self.channel.as_str().to_string(),
            self.p.to_string(),
            self.decoder.clone(),
            self.delta.to_string(),
            self.attempts.to_string(),
            self.imax.to_string(),
            self.seed.to_string(),
            s.trials.to_string(),
            s.detected.to_string(),
            s.undetected.to_string(),
            s.fer.to_string(),
            s.fer_stderr.to_string(),
            opt(self.norm_fer),
            s.avg_iterations.to_string(),
            s.avg_attempts.to_string(),
            opt(s.wall_time),
        ]
    }
}

/// Runs every `p` in order. With a baseline, the baseline decoder is run
/// on exactly the trials the main decoder used and `norm_fer` is their FER
/// ratio (empty when the baseline made no errors).
pub fn run_sweep(code: &StabilizerCode, spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(spec.ps.len());
    for &p in &spec.ps {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Probability(p));
        }
        let channel = spec.channel.at(p)?;
        let decoder = Decoder::new(code, channel, spec.decoder)?;
        let (mut summary, tally) = run_point(code, &channel, &decoder, spec.base_seed, spec.rule, spec.par)?;
        if !spec.timing {
            summary.wall_time = None;
        }
        let norm_fer = match &spec.baseline {
            None => None,
            Some(b) => {
                let base = Decoder::new(code, channel, *b)?;
                let bt = run_fixed(code, &channel, &base, spec.base_seed, tally.trials, spec.par)?;
                (bt.errors() > 0).then(|| tally.errors() as f64 / bt.errors() as f64)
            }
        };
        rows.push(SweepRow {
            code: spec.code_name.clone(),
            kind: spec.kind.clone(),
            n: code.n(),
            k: code.k(),
            channel: spec.channel,
            p,
            decoder: spec.decoder.id.to_string(),
            delta: spec.decoder.delta,
            attempts: spec.decoder.attempts,
            imax: spec.decoder.bp.max_iter,
            seed: spec.base_seed,
            summary,
            norm_fer,
        });
    }
    Ok(rows)
}

/// Writes the header and rows as CSV.
pub fn write_csv<W: Write>(out: W, rows: &[SweepRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in rows {
        w.write_record(r.record()).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}
