use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pclink_census::{
    census_oriented, census_unoriented, jones_for_word, jones_partition, verify_facts, CensusConfig, FactStatus,
    JonesCaps, ResultCache,
};
use pclink_invariant::{jones_with, Engine, EngineConfig, OrderStrategy, Poly};
use pclink_shadow::{family_shadow, orient_positive, Family, PDCode};
use pclink_word::{pi_image, GroupKind, Word, WordGroup};
use serde_json::json;

#[derive(Parser)]
#[command(name = "pclink", version, about = "Positive links on the ring, boot and flower arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
struct Opts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Jones cache file (JSON lines).
    #[arg(long, global = true, env = "PCLINK_CACHE")]
    cache: Option<PathBuf>,
    /// Crossing cap of the naive engine.
    #[arg(long, global = true, default_value_t = pclink_invariant::DEFAULT_MAX_CROSSINGS)]
    max_crossings: usize,
    /// Open-arc cap of the sweep engine.
    #[arg(long, global = true, default_value_t = pclink_invariant::DEFAULT_MAX_WIDTH)]
    max_width: usize,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Natural)]
    order: OrderArg,
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Sweep)]
    engine: EngineArg,
    /// Worker threads for censuses (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Allow flower arrangements with an odd number of circles.
    #[arg(long, global = true)]
    allow_odd_flower: bool,
    /// Raise the size cap of Jones partitions to this value for every family.
    #[arg(long, global = true)]
    jones_cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Natural,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Naive,
    Sweep,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Ring,
    Boot,
    Flower,
    Custom,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Ring => Family::Ring,
            FamilyArg::Boot => Family::Boot,
            FamilyArg::Flower => Family::Flower,
            FamilyArg::Custom => Family::Custom,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WordOp {
    Rank,
    Negate,
    Reverse,
    Ve,
    Rotate,
    Decompose,
    Orbit,
    PiImage,
}

#[derive(Subcommand)]
enum Command {
    /// Word operations: rank, negation, reversal, ve, rotation, run
    /// decomposition, group orbit, π-image.
    Word {
        #[arg(value_enum)]
        op: WordOp,
        word: String,
        /// Family whose group is used by `orbit`.
        #[arg(long, value_enum, default_value_t = FamilyArg::Ring)]
        family: FamilyArg,
        /// Extend the orbit group by global negation.
        #[arg(long)]
        unoriented: bool,
        /// Shift used by `rotate`.
        #[arg(long, default_value_t = 1)]
        by: usize,
        /// Run permutation for `pi-image`, 1-based, comma separated.
        #[arg(long, value_delimiter = ',')]
        pi: Vec<usize>,
        /// Leading letter of the `pi-image` result (default: that of the word).
        #[arg(long)]
        leading: Option<u8>,
    },
    /// Emit a family shadow (JSON with validation) or, given a word, the PD
    /// code of its positive link.
    Shadow {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Jones polynomial of one word, several words, every word of length n,
    /// or a PD code.
    Jones {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        word: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        /// PD code file for the custom family (JSON or X(a,b,c,d) lines).
        #[arg(long)]
        pd: Option<PathBuf>,
    },
    /// Orbit counts and, optionally, Jones partitions of a family.
    Census {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unoriented: bool,
        #[arg(long)]
        with_jones: bool,
    },
    /// Run the fact checklist; exits with status 3 if any check fails.
    Verify,
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse::<Word>().map_err(|e| format!("{e} (in {s:?})"))
}

fn engine_config(o: &Opts) -> EngineConfig {
    EngineConfig {
        engine: match o.engine {
            EngineArg::Naive => Engine::Naive,
            EngineArg::Sweep => Engine::Sweep,
            EngineArg::Both => Engine::Both,
        },
        order: match o.order {
            OrderArg::Natural => OrderStrategy::Natural,
            OrderArg::Greedy => OrderStrategy::Greedy,
        },
        max_crossings: o.max_crossings,
        max_width: o.max_width,
    }
}

fn census_config(o: &Opts, with_jones: bool) -> Result<CensusConfig, String> {
    let cache = match &o.cache {
        Some(p) => Some(Arc::new(ResultCache::open(p).map_err(|e| e.to_string())?)),
        None => None,
    };
    Ok(CensusConfig {
        with_jones,
        engine: engine_config(o),
        workers: o.workers,
        allow_odd_flower: o.allow_odd_flower,
        jones_caps: o.jones_cap.map(JonesCaps::uniform).unwrap_or_default(),
        cache,
    })
}

fn group_for(family: Family, unoriented: bool, n: usize) -> Result<WordGroup, String> {
    let kind = match family {
        Family::Ring => GroupKind::Ring4,
        Family::Boot => GroupKind::Boot,
        Family::Flower => GroupKind::Flower2n,
        Family::Custom => return Err("the custom family has no word group".into()),
    };
    Ok(WordGroup::new(if unoriented { kind.with_negation() } else { kind }, n))
}

fn poly_line(p: &Poly, format: Format) -> String {
    match format {
        Format::Text => p.to_t_string(),
        _ => p.to_json(),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, String> {
    let o = &cli.opts;
    let mut emit = |s: String| writeln!(out, "{s}").map_err(|e| e.to_string());
    match cli.command {
        Command::Word { op, word, family, unoriented, by, pi, leading } => {
            let a = parse_word(&word)?;
            let text = match op {
                WordOp::Rank => a.rank().to_string(),
                WordOp::Negate => a.negate().to_string(),
                WordOp::Reverse => a.reverse().to_string(),
                WordOp::Ve => a.ve().to_string(),
                WordOp::Rotate => a.rotate(by).to_string(),
                WordOp::Decompose => {
                    let d = a.canonical_decomposition();
                    match o.format {
                        Format::Text => {
                            let runs: Vec<String> = d.run_lengths().iter().map(|r| r.to_string()).collect();
                            format!("leading {} runs {}", u8::from(d.leading_letter()), runs.join(" "))
                        }
                        _ => json!({
                            "leading": u8::from(d.leading_letter()),
                            "runs": d.run_lengths(),
                            "rank": d.rank(),
                        })
                        .to_string(),
                    }
                }
                WordOp::Orbit => {
                    let g = group_for(family.into(), unoriented, a.len())?;
                    let orbit: Vec<String> = g.orbit(&a).map_err(|e| e.to_string())?.iter().map(Word::to_string).collect();
                    match o.format {
                        Format::Text => orbit.join(" "),
                        _ => json!(orbit).to_string(),
                    }
                }
                WordOp::PiImage => {
                    let d = a.canonical_decomposition();
                    let zero_based: Vec<usize> = pi.iter().map(|&k| k.wrapping_sub(1)).collect();
                    let lead = match leading {
                        None => d.leading_letter(),
                        Some(0) => false,
                        Some(1) => true,
                        Some(x) => return Err(format!("leading letter must be 0 or 1, got {x}")),
                    };
                    pi_image(&d, &zero_based, lead).map_err(|e| e.to_string())?.to_string()
                }
            };
            emit(text)?;
        }
        Command::Shadow { family, n, word } => {
            let family: Family = family.into();
            let n = match (n, &word) {
                (Some(n), _) => n,
                (None, Some(w)) => w.len(),
                (None, None) => return Err("shadow needs --n or --word".into()),
            };
            let s = family_shadow(family, n, o.allow_odd_flower).map_err(|e| e.to_string())?;
            match word {
                None => {
                    let report = s.validate();
                    let shadow: serde_json::Value = serde_json::from_str(&s.to_json()).expect("shadow JSON parses");
                    match o.format {
                        Format::Text => {
                            for c in &report.checks {
                                emit(format!("{}\t{}\t{}", c.name, if c.passed { "ok" } else { "FAILED" }, c.detail))?;
                            }
                        }
                        _ => emit(json!({ "shadow": shadow, "validation": report }).to_string())?,
                    }
                }
                Some(w) => {
                    let a = parse_word(&w)?;
                    let d = orient_positive(&s, &a).map_err(|e| e.to_string())?;
                    let pd = d.pd_code();
                    match o.format {
                        Format::Text => write!(out, "{}", pd.to_text()).map_err(|e| e.to_string())?,
                        _ => emit(pd.to_json())?,
                    }
                }
            }
        }
        Command::Jones { family, word, n, pd } => {
            let family: Family = family.into();
            let cfg = census_config(o, false)?;
            if family == Family::Custom {
                let path = pd.ok_or("the custom family needs --pd FILE")?;
                let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                let code = if text.trim_start().starts_with('{') {
                    PDCode::from_json(&text)
                } else {
                    PDCode::parse_text(&text, 0)
                }
                .map_err(|e| e.to_string())?;
                let d = code.to_diagram().map_err(|e| e.to_string())?;
                let v = jones_with::<num_bigint::BigInt>(&d, &cfg.engine).map_err(|e| e.to_string())?;
                emit(poly_line(&v, o.format))?;
                return Ok(ExitCode::SUCCESS);
            }
            let words: Vec<Word> = match (n, word.is_empty()) {
                (Some(n), true) => {
                    if !(1..=24).contains(&n) {
                        return Err(format!("batch mode enumerates 1 <= n <= 24 words, got {n}"));
                    }
                    Word::all(n).collect()
                }
                (None, false) => word.iter().map(|w| parse_word(w)).collect::<Result<_, _>>()?,
                _ => return Err("jones needs either --word (repeatable) or --n".into()),
            };
            if words.len() == 1 && n.is_none() {
                let v = jones_for_word(family, &words[0], &cfg).map_err(|e| e.to_string())?;
                emit(poly_line(&v, o.format))?;
            } else {
                if o.format == Format::Csv {
                    emit("word,jones".into())?;
                }
                for a in &words {
                    let v = jones_for_word(family, a, &cfg).map_err(|e| e.to_string())?;
                    let line = match o.format {
                        Format::Json => json!({
                            "family": family,
                            "n": a.len(),
                            "word": a.to_string(),
                            "jones": serde_json::from_str::<serde_json::Value>(&v.to_json()).unwrap(),
                        })
                        .to_string(),
                        Format::Csv => format!("{a},\"{}\"", v.to_json().replace('"', "\"\"")),
                        Format::Text => format!("{a}\t{}", v.to_t_string()),
                    };
                    emit(line)?;
                }
            }
        }
        Command::Census { family, n, unoriented, with_jones } => {
            let family: Family = family.into();
            let cfg = census_config(o, with_jones)?;
            let report = if unoriented { census_unoriented(family, n, &cfg) } else { census_oriented(family, n, &cfg) }
                .map_err(|e| e.to_string())?;
            match o.format {
                Format::Json => emit(serde_json::to_string(&report).expect("report serialises"))?,
                Format::Csv => {
                    if !with_jones {
                        return Err("--format csv exports the Jones partition and needs --with-jones".into());
                    }
                    let p = jones_partition(family, n, &cfg).map_err(|e| e.to_string())?;
                    write!(out, "{}", p.to_csv()).map_err(|e| e.to_string())?;
                }
                Format::Text => {
                    emit(format!("family\t{}\nn\t{}\nunoriented\t{}", report.family, report.n, report.unoriented))?;
                    emit(format!("words\t{}\norbits\t{}\nratio\t{}", report.total_words, report.orbit_count, report.ratio))?;
                    emit(format!("theoretical_ratio\t{}", report.theoretical_ratio))?;
                    emit(format!("low_rank_words\t{}", report.low_rank_word_count))?;
                    if let Some(c) = report.jones_cell_count {
                        emit(format!("jones_cells\t{c}\nconfirmed\t{}", report.confirmed))?;
                        let p = jones_partition(family, n, &cfg).map_err(|e| e.to_string())?;
                        write!(out, "{}", p.to_text()).map_err(|e| e.to_string())?;
                    }
                }
            }
        }
        Command::Verify => {
            let cfg = census_config(o, false)?;
            let report = verify_facts(&cfg);
            match o.format {
                Format::Text | Format::Csv => {
                    for c in &report.checks {
                        let status = match c.status {
                            FactStatus::Pass => "pass",
                            FactStatus::Fail => "FAIL",
                            FactStatus::Skipped => "skipped",
                        };
                        emit(format!("{status}\t{}\t{}", c.name, c.detail))?;
                    }
                }
                Format::Json => emit(json!({ "passed": report.passed(), "checks": report.checks }).to_string())?,
            }
            if !report.passed() {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
