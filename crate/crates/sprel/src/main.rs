use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sprel::captions::{filter_captions, CaptionRecord, ObjectLexicon};
use sprel::config::FileConfig;
use sprel::records::{load_record, quadruple, EvalRecordWire, RelationWire};
use sprel::scene::load_scene;
use sprel::stub::{stub_generate, StubGeneratorConfig};
use sprel::{profile, report};
use sprel_core::eval::{evaluate, EvalRecord};
use sprel_core::extract::{extract_all, AmbiguityPolicy, BetweenSides, ExtractionConfig};
use sprel_core::prompt::{
    augment_inversions, parse_prompt, render_prompt, sample_prompt_set, PhraseLexicon,
    SampleRequest, URBAN_CONTEXTS, URBAN_OBJECTS,
};
use sprel_core::tore::{
    compute_bias_profile, transform_prompt, BiasProfile, OppositePair, ToreConfig,
};
use sprel_core::{RelationKind, Strictness};

#[derive(Debug, Parser)]
#[command(
    name = "sprel",
    version,
    about = "Geometric spatial relations, spatial prompts and benchmark scoring"
)]
struct Cli {
    /// Strictness of the geometric checks (default 3).
    #[arg(long, global = true, allow_negative_numbers = true)]
    tau: Option<f64>,
    /// TOML configuration file.
    #[arg(long, global = true, env = "SPREL_CONFIG")]
    config: Option<PathBuf>,
    /// Seed for every random choice (default 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Phrase lexicon JSON replacing the built-in relation phrases.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sides {
    Either,
    Ordered,
}

#[derive(Debug, Args)]
struct Filters {
    /// Minimum detection score.
    #[arg(long)]
    min_score: Option<f64>,
    /// Minimum box area as a fraction of the image.
    #[arg(long)]
    min_rel_area: Option<f64>,
    /// Maximum center distance as a fraction of the image diagonal.
    #[arg(long)]
    max_center_dist: Option<f64>,
    /// Keep pairs that pass both a horizontal and a vertical check.
    #[arg(long)]
    keep_ambiguous: bool,
    /// Largest object count for triplet enumeration.
    #[arg(long)]
    triplet_cap: Option<usize>,
    /// Flank order accepted for `between` clauses when scoring.
    #[arg(long, value_enum)]
    between_sides: Option<Sides>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extract relations from a detections file (one scene per line).
    Extract {
        input: PathBuf,
        #[command(flatten)]
        filters: Filters,
    },
    /// Sample prompts from the relations found in a detections file.
    GenPrompts {
        input: PathBuf,
        /// Simple prompts per kind, e.g. `right=10,top=5`.
        #[arg(long, value_delimiter = ',', value_parser = kind_count)]
        simple: Vec<(RelationKind, usize)>,
        /// Two-clause prompts per kind of the first clause.
        #[arg(long, value_delimiter = ',', value_parser = kind_count)]
        complex: Vec<(RelationKind, usize)>,
        /// Skip augmenting the pool with inverted relations.
        #[arg(long)]
        no_inversions: bool,
        #[command(flatten)]
        filters: Filters,
    },
    /// Rewrite prompts towards the sides a model renders better.
    Tore {
        input: PathBuf,
        /// Built-in profile name or bias-profile JSON path.
        #[arg(long, default_value = "flux1")]
        profile: String,
        /// Opposite pairs to flip (default all).
        #[arg(long, value_delimiter = ',')]
        pairs: Vec<OppositePair>,
        /// Pass prompts outside the grammar through unchanged.
        #[arg(long)]
        lenient: bool,
    },
    /// Score evaluation records (one per line).
    Evaluate {
        input: PathBuf,
        #[command(flatten)]
        filters: Filters,
    },
    /// Opposite-pair bias profile from evaluation records or a built-in table.
    BiasReport {
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        input: Option<PathBuf>,
        /// One of flux1, flux1-esplora, sdxl, sdxl-esplora.
        #[arg(long)]
        builtin: Option<String>,
        #[command(flatten)]
        filters: Filters,
    },
    /// Keep captions naming an urban object and context.
    FilterCaptions {
        input: PathBuf,
        /// Newline-delimited object phrases (default: built-in urban list).
        #[arg(long)]
        objects: Option<PathBuf>,
        /// Newline-delimited context phrases (default: built-in contexts).
        #[arg(long)]
        contexts: Option<PathBuf>,
    },
    /// Generate evaluation records from prompts with a biased stub model.
    StubGen {
        input: PathBuf,
        /// Satisfaction probability per kind, e.g. `top=0.8,bottom=0.4`.
        #[arg(long = "p", value_delimiter = ',', value_parser = kind_prob)]
        probabilities: Vec<(RelationKind, f64)>,
        /// Probability for kinds not listed.
        #[arg(long, default_value_t = 0.5)]
        default_p: f64,
        #[arg(long, default_value_t = 64)]
        width: u32,
        #[arg(long, default_value_t = 64)]
        height: u32,
    },
}

fn split_pair(s: &str) -> Result<(RelationKind, &str), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KIND=VALUE, got `{s}`"))?;
    let kind = k.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((kind, v.trim()))
}

fn kind_count(s: &str) -> Result<(RelationKind, usize), String> {
    let (k, v) = split_pair(s)?;
    Ok((k, v.parse().map_err(|e| format!("`{v}`: {e}"))?))
}

fn kind_prob(s: &str) -> Result<(RelationKind, f64), String> {
    let (k, v) = split_pair(s)?;
    Ok((k, v.parse().map_err(|e| format!("`{v}`: {e}"))?))
}

/// Errors that should exit with the usage status.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

struct Ctx {
    file: FileConfig,
    tau: Option<f64>,
    seed: u64,
    format: Option<Format>,
    lexicon: PhraseLexicon,
}

impl Ctx {
    fn load(cli: &Cli) -> anyhow::Result<Self> {
        let file = match &cli.config {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .with_context(|| format!("reading {}", p.display()))?;
                FileConfig::parse(&text).with_context(|| p.display().to_string())?
            }
            None => FileConfig::default(),
        };
        let lex_path = cli.lexicon.clone().or_else(|| file.lexicon.clone());
        let lexicon = match lex_path {
            Some(p) => {
                let text = std::fs::read_to_string(&p)
                    .with_context(|| format!("reading {}", p.display()))?;
                profile::parse_lexicon(&text).with_context(|| p.display().to_string())?
            }
            None => PhraseLexicon::default(),
        };
        Ok(Self {
            seed: cli.seed.or(file.seed).unwrap_or(0),
            tau: cli.tau,
            format: cli.format,
            file,
            lexicon,
        })
    }

    fn extraction(&self, f: Option<&Filters>) -> anyhow::Result<ExtractionConfig> {
        let mut cfg = self.file.extraction()?;
        if let Some(t) = self.tau {
            cfg.tau = Strictness::new(t)?;
        }
        if let Some(f) = f {
            if let Some(v) = f.min_score {
                cfg.min_score = v;
            }
            if let Some(v) = f.min_rel_area {
                cfg.min_rel_area = v;
            }
            if let Some(v) = f.max_center_dist {
                cfg.max_center_dist = v;
            }
            if f.keep_ambiguous {
                cfg.ambiguity_policy = AmbiguityPolicy::KeepAll;
            }
            if let Some(v) = f.triplet_cap {
                cfg.triplet_cap = v;
            }
            if let Some(s) = f.between_sides {
                cfg.between_sides = match s {
                    Sides::Either => BetweenSides::Either,
                    Sides::Ordered => BetweenSides::Ordered,
                };
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

/// Non-empty lines with their 1-based numbers. `-` reads stdin.
fn lines(path: &Path) -> anyhow::Result<impl Iterator<Item = anyhow::Result<(usize, String)>>> {
    let reader: Box<dyn BufRead> = if path == Path::new("-") {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(
            File::open(path).with_context(|| format!("opening {}", path.display()))?,
        ))
    };
    let name = path.display().to_string();
    Ok(reader.lines().enumerate().map(move |(i, l)| {
        l.map(|l| (i + 1, l))
            .with_context(|| format!("reading {name}"))
    }))
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn load_records(path: &Path, lex: &PhraseLexicon) -> anyhow::Result<Vec<EvalRecord>> {
    let base = base_dir(path);
    let mut out = Vec::new();
    for item in lines(path)? {
        let (n, line) = item?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(load_record(&line, n, &base, lex).with_context(|| path.display().to_string())?);
    }
    Ok(out)
}

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    let ctx = Ctx::load(&cli)?;
    match &cli.command {
        Command::Extract { input, filters } => {
            let cfg = ctx.extraction(Some(filters))?;
            let format = ctx.format_or(Format::Json);
            let base = base_dir(input);
            for item in lines(input)? {
                let (n, line) = item?;
                if line.trim().is_empty() {
                    continue;
                }
                let scene =
                    load_scene(&line, n, &base).with_context(|| input.display().to_string())?;
                let rels = extract_all(&scene, &cfg)
                    .with_context(|| format!("{}: line {n}", input.display()))?;
                for r in &rels {
                    let w = RelationWire::new(&scene, r);
                    match format {
                        Format::Json => writeln!(out, "{}", serde_json::to_string(&w)?)?,
                        Format::Text => {
                            let objects: Vec<String> = w
                                .object_labels
                                .iter()
                                .zip(&w.objects)
                                .map(|(l, i)| format!("{l}#{i}"))
                                .collect();
                            writeln!(
                                out,
                                "{}\t{}#{}\t{}\t{}",
                                w.image_id,
                                w.subject_label,
                                w.subject,
                                w.kind,
                                objects.join(" ")
                            )?
                        }
                    }
                }
            }
        }
        Command::GenPrompts {
            input,
            simple,
            complex,
            no_inversions,
            filters,
        } => {
            if simple.is_empty() && complex.is_empty() {
                return Err(Usage("request prompts with --simple and/or --complex".into()).into());
            }
            let cfg = ctx.extraction(Some(filters))?;
            let base = base_dir(input);
            let mut seen = BTreeSet::new();
            let mut pool = Vec::new();
            for item in lines(input)? {
                let (n, line) = item?;
                if line.trim().is_empty() {
                    continue;
                }
                let scene =
                    load_scene(&line, n, &base).with_context(|| input.display().to_string())?;
                for r in extract_all(&scene, &cfg)
                    .with_context(|| format!("{}: line {n}", input.display()))?
                {
                    let q = quadruple(&scene, &r)?;
                    if seen.insert(q.clone()) {
                        pool.push(q);
                    }
                }
            }
            if !no_inversions {
                pool = augment_inversions(&pool);
            }
            let request = SampleRequest {
                simple: simple.iter().copied().collect::<BTreeMap<_, _>>(),
                complex: complex.iter().copied().collect::<BTreeMap<_, _>>(),
            };
            let specs = sample_prompt_set(&pool, &request, ctx.seed)?;
            for spec in &specs {
                let text = render_prompt(spec, &ctx.lexicon)?;
                match ctx.format_or(Format::Text) {
                    Format::Text => writeln!(out, "{text}")?,
                    Format::Json => {
                        let kinds: Vec<&str> =
                            spec.clauses().iter().map(|c| c.kind().as_str()).collect();
                        writeln!(
                            out,
                            "{}",
                            json!({"prompt": text, "kinds": kinds, "simple": spec.is_simple()})
                        )?
                    }
                }
            }
        }
        Command::Tore {
            input,
            profile: name,
            pairs,
            lenient,
        } => {
            let bias = match BiasProfile::builtin(name) {
                Some(p) => p,
                None => {
                    let text = std::fs::read_to_string(name).with_context(|| {
                        format!(
                            "`{name}` is neither a built-in profile ({}) nor a readable file",
                            BiasProfile::BUILTIN_NAMES.join(", ")
                        )
                    })?;
                    profile::parse_profile(&text).with_context(|| name.clone())?
                }
            };
            let mut cfg = ToreConfig::new(bias);
            if !pairs.is_empty() {
                cfg.enabled = pairs.iter().copied().collect();
            }
            cfg.lenient = *lenient;
            let format = ctx.format_or(Format::Text);
            for item in lines(input)? {
                let (n, line) = item?;
                let rewritten = if line.trim().is_empty() {
                    line.clone()
                } else {
                    transform_prompt(&line, &cfg, &ctx.lexicon)
                        .with_context(|| format!("{}: line {n}", input.display()))?
                };
                match format {
                    Format::Text => writeln!(out, "{rewritten}")?,
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({"input": line, "output": rewritten, "changed": rewritten != line})
                    )?,
                }
            }
        }
        Command::Evaluate { input, filters } => {
            let cfg = ctx.extraction(Some(filters))?;
            let records = load_records(input, &ctx.lexicon)?;
            let rep = evaluate(&records, &cfg, Some(ctx.seed))?;
            match ctx.format_or(Format::Text) {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report::report_json(&rep))?
                )?,
                Format::Text => write!(out, "{}", report::report_text(&rep))?,
            }
        }
        Command::BiasReport {
            input,
            builtin,
            filters,
        } => {
            let bias = match (builtin, input) {
                (Some(name), _) => BiasProfile::builtin(name).ok_or_else(|| {
                    Usage(format!(
                        "unknown profile `{name}`; expected one of {}",
                        BiasProfile::BUILTIN_NAMES.join(", ")
                    ))
                })?,
                (None, Some(input)) => {
                    let cfg = ctx.extraction(Some(filters))?;
                    let records = load_records(input, &ctx.lexicon)?;
                    compute_bias_profile(&evaluate(&records, &cfg, Some(ctx.seed))?)?
                }
                (None, None) => unreachable!("clap requires an input or --builtin"),
            };
            match ctx.format_or(Format::Json) {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&profile::profile_to_json(&bias))?
                )?,
                Format::Text => write!(out, "{}", report::profile_text(&bias))?,
            }
        }
        Command::FilterCaptions {
            input,
            objects,
            contexts,
        } => {
            let read_list =
                |p: &Option<PathBuf>, default: &[&str]| -> anyhow::Result<Vec<String>> {
                    match p {
                        Some(p) => Ok(profile::parse_phrase_list(
                            &std::fs::read_to_string(p)
                                .with_context(|| format!("reading {}", p.display()))?,
                        )),
                        None => Ok(default.iter().map(|s| s.to_string()).collect()),
                    }
                };
            let lex = ObjectLexicon::new(
                &read_list(objects, URBAN_OBJECTS)?,
                &read_list(contexts, &URBAN_CONTEXTS)?,
            )
            .ok_or_else(|| anyhow!("object and context lists must both be non-empty"))?;
            let format = ctx.format_or(Format::Json);
            for item in lines(input)? {
                let (n, line) = item?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CaptionRecord = serde_json::from_str(&line)
                    .map_err(|e| anyhow!("{}: line {n}: {e}", input.display()))?;
                if rec.caption.trim().is_empty() {
                    bail!("{}: line {n}: caption is empty", input.display());
                }
                for kept in filter_captions([&rec], &lex) {
                    match format {
                        Format::Json => writeln!(out, "{}", serde_json::to_string(kept)?)?,
                        Format::Text => writeln!(out, "{}", kept.caption)?,
                    }
                }
            }
        }
        Command::StubGen {
            input,
            probabilities,
            default_p,
            width,
            height,
        } => {
            if ctx.format == Some(Format::Text) {
                return Err(Usage("stub-gen writes JSON records only".into()).into());
            }
            let mut cfg = StubGeneratorConfig::new(ctx.seed)
                .with_default_probability(*default_p)?
                .with_size(*width, *height)?;
            for &(k, p) in probabilities {
                cfg = cfg.with_probability(k, p)?;
            }
            let mut specs = Vec::new();
            for item in lines(input)? {
                let (n, line) = item?;
                if line.trim().is_empty() {
                    continue;
                }
                specs.push(
                    parse_prompt(&line, &ctx.lexicon)
                        .with_context(|| format!("{}: line {n}", input.display()))?,
                );
            }
            for rec in stub_generate(&specs, &cfg)? {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&EvalRecordWire::from_record(&rec, &ctx.lexicon)?)?
                )?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(2));
        }
    };
    let result = (|| -> anyhow::Result<()> {
        let mut out: Box<dyn Write> = match &cli.output {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).with_context(|| format!("creating {}", p.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        run(cli, &mut out)?;
        out.flush()?;
        Ok(())
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
