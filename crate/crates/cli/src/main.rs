use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use qldpc::bp::BpConfig;
use qldpc::construct::{component_4cycles, CodeKind, ConstructionSpec, Preset};
use qldpc::decoders::{default_delta, DecoderConfig, DecoderId};
use qldpc::sim::{run_sweep, write_csv, ChannelName, Parallelism, StoppingRule, SweepSpec};
use qldpc::stabilizer::{read_code, write_code, CodeHeader, StabilizerCode};

#[derive(Parser)]
#[command(name = "qldpc", version, about = "Quantum LDPC codes and BP decoder simulations")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code and write it to a file.
    BuildCode(BuildArgs),
    /// Estimate frame error rates over a list of error probabilities.
    Sim(SimArgs),
    /// Check commutation and print code parameters.
    Validate {
        #[arg(long)]
        code: PathBuf,
    },
}

/// Unset parameters take the reference value for the kind.
#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    kind: CodeKind,
    /// Block length (bicycle).
    #[arg(long)]
    n: Option<usize>,
    /// Rows of the base matrix before row removal (bicycle).
    #[arg(long)]
    m: Option<usize>,
    /// Row weight (bicycle), circulant weight (bicycle_like, ncss).
    #[arg(long)]
    w: Option<usize>,
    /// Design parameter t (bibd).
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    alpha: Option<u64>,
    /// Circulant size P (quasicyclic).
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long)]
    sigma: Option<u64>,
    #[arg(long)]
    tau: Option<u64>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Circulant size (bicycle_like).
    #[arg(long)]
    v: Option<usize>,
    /// Number of circulant blocks (bicycle_like, ncss).
    #[arg(long)]
    a: Option<usize>,
    /// Circulant size (ncss).
    #[arg(long)]
    block: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SimArgs {
    #[arg(long)]
    code: PathBuf,
    #[arg(long)]
    decoder: DecoderId,
    /// Augmentation density or perturbation strength; defaults per code kind.
    #[arg(long)]
    delta: Option<f64>,
    /// Maximum decoding attempts N.
    #[arg(long)]
    attempts: Option<usize>,
    #[arg(long, default_value_t = 100)]
    imax: usize,
    #[arg(long, default_value = "depolarizing")]
    channel: ChannelName,
    /// Comma-separated physical error probabilities.
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<f64>,
    #[arg(long, default_value_t = 100)]
    min_errors: u64,
    #[arg(long, default_value_t = 10_000_000)]
    max_trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Standard decoder rerun on the same trials for the normalized FER.
    #[arg(long)]
    baseline: Option<DecoderId>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Leave wall_s empty so output is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

fn main() -> Result<()> {
    match Cli::parse().cmd {
        Command::BuildCode(a) => build_code(a),
        Command::Sim(a) => sim(a),
        Command::Validate { code } => validate(&code),
    }
}

fn construction(a: &BuildArgs) -> (ConstructionSpec, u64) {
    let preset = Preset::for_kind(a.kind);
    let spec = match preset.spec {
        ConstructionSpec::Bicycle { n, m, w } => ConstructionSpec::Bicycle {
            n: a.n.unwrap_or(n),
            m: a.m.unwrap_or(m),
            w: a.w.unwrap_or(w),
        },
        ConstructionSpec::Bibd { t, alpha } => ConstructionSpec::Bibd {
            t: a.t.unwrap_or(t),
            alpha: a.alpha.unwrap_or(alpha),
        },
        ConstructionSpec::QuasiCyclic { p, sigma, tau, j, k } => ConstructionSpec::QuasiCyclic {
            p: a.prime.unwrap_or(p),
            sigma: a.sigma.unwrap_or(sigma),
            tau: a.tau.unwrap_or(tau),
            j: a.j.unwrap_or(j),
            k: a.k.unwrap_or(k),
        },
        ConstructionSpec::BicycleLike { v, a: blocks, weight } => ConstructionSpec::BicycleLike {
            v: a.v.unwrap_or(v),
            a: a.a.unwrap_or(blocks),
            weight: a.w.unwrap_or(weight),
        },
        ConstructionSpec::NcssA { a: blocks, block, weight } => ConstructionSpec::NcssA {
            a: a.a.unwrap_or(blocks),
            block: a.block.unwrap_or(block),
            weight: a.w.unwrap_or(weight),
        },
        ConstructionSpec::NcssB { a: blocks, block, weight } => ConstructionSpec::NcssB {
            a: a.a.unwrap_or(blocks),
            block: a.block.unwrap_or(block),
            weight: a.w.unwrap_or(weight),
        },
    };
    (spec, a.seed.unwrap_or(preset.seed))
}

fn build_code(a: BuildArgs) -> Result<()> {
    let (spec, seed) = construction(&a);
    let code = spec.build(seed).with_context(|| format!("building {spec}"))?;
    if !code.validate() {
        bail!("constructed generators do not commute");
    }
    let cycles = component_4cycles(&code);
    let comments = vec![
        format!("{spec} seed={seed}"),
        format!("[[{}, {}]] rank={}", code.n(), code.k(), code.rank()),
        format!(
            "4-cycles per component graph: {}",
            cycles.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        ),
    ];
    let header = CodeHeader {
        kind: spec.kind().to_string(),
        seed,
    };
    fs::write(&a.out, write_code(&code, &header, &comments)).with_context(|| format!("writing {}", a.out.display()))?;
    eprintln!("wrote [[{}, {}]] {} code to {}", code.n(), code.k(), spec.kind(), a.out.display());
    Ok(())
}

fn load(path: &PathBuf) -> Result<(StabilizerCode, CodeHeader)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_code(&text).with_context(|| format!("parsing {}", path.display()))
}

fn sim(a: SimArgs) -> Result<()> {
    let (code, header) = load(&a.code)?;
    if !code.validate() {
        bail!("{}: generators do not commute", a.code.display());
    }
    let delta = match a.delta {
        Some(d) => d,
        None => match header.kind.parse::<CodeKind>() {
            Ok(kind) => default_delta(kind, a.decoder, a.channel == ChannelName::Xz),
            Err(_) => 0.0,
        },
    };
    let attempts = a.attempts.unwrap_or(if a.decoder.is_standard() { 1 } else { 10 });
    let bp = BpConfig {
        max_iter: a.imax,
        ..BpConfig::default()
    };
    let baseline = match a.baseline {
        None => None,
        Some(b) if b.is_standard() => Some(DecoderConfig { bp, ..DecoderConfig::standard(b) }),
        Some(b) => bail!("baseline must be a standard decoder (gf2, gf4 or supernode), got {b}"),
    };
    let spec = SweepSpec {
        code_name: a
            .code
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        kind: header.kind,
        channel: a.channel,
        ps: a.p,
        decoder: DecoderConfig {
            id: a.decoder,
            attempts,
            delta,
            bp,
        },
        baseline,
        base_seed: a.seed,
        rule: StoppingRule {
            min_errors: a.min_errors,
            max_trials: a.max_trials,
        },
        par: Parallelism { threads: a.threads },
        timing: !a.no_timing,
    };
    let rows = run_sweep(&code, &spec)?;
    for r in &rows {
        if r.summary.low_confidence {
            eprintln!(
                "warning: p={} stopped at {} trials with only {} errors",
                r.p,
                r.summary.trials,
                r.summary.detected + r.summary.undetected
            );
        }
    }
    match &a.out {
        Some(path) => {
            let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(io::BufWriter::new(f), &rows)?;
        }
        None => write_csv(io::stdout().lock(), &rows)?,
    }
    Ok(())
}

fn validate(path: &PathBuf) -> Result<()> {
    let (code, header) = load(path)?;
    let mut out = io::stdout().lock();
    writeln!(out, "kind: {} seed: {}", header.kind, header.seed)?;
    writeln!(out, "n: {} generators: {} rank: {} k: {}", code.n(), code.m(), code.rank(), code.k())?;
    writeln!(out, "css: {} dual-containing: {}", code.is_css(), code.is_dual_containing())?;
    let cycles = component_4cycles(&code);
    writeln!(
        out,
        "4-cycles: {}",
        cycles.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
    )?;
    match code.commutation_violation() {
        None => {
            writeln!(out, "commutation: ok")?;
            Ok(())
        }
        Some(v) => {
            writeln!(out, "commutation: FAILED ({v})")?;
            bail!("{v}")
        }
    }
}
