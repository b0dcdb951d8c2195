//! Command-line front end: precompute, encode, corrupt, decode, recover,
//! roundtrip, compare-scaling. Flags mirror config-file keys (`key = value`
//! per line); flags override the file.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rslist::error::{Error, Result};
use rslist::gf::{Elem, MulCounter};
use rslist::harness::{
    self, ErrorModel, Experiment, ExperimentConfig, FieldParams, GenSource, TrialReport,
};
use rslist::listdec::{DecoderConfig, DecoderKind, Multiplicity, Radius};
use rslist::textio;

#[derive(Parser)]
#[command(name = "rslist", about = "Reed-Solomon list-decoding toolkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the recovery transform for a generator matrix and export it
    Precompute(CommonArgs),
    /// Encode messages through the registered generator matrix
    Encode(CommonArgs),
    /// Inject channel errors into codewords
    Corrupt(CommonArgs),
    /// Scale received words into the narrow-sense domain and list decode
    Decode(CommonArgs),
    /// Apply a precomputed transform to list elements
    Recover(CommonArgs),
    /// Full encode/corrupt/decode/recover simulation with a report
    Roundtrip(CommonArgs),
    /// Run scaling-based and transform-based recovery on identical trials
    #[command(name = "compare-scaling")]
    CompareScaling(CommonArgs),
}

#[derive(Args, Default)]
struct CommonArgs {
    /// Config file with one key = value per line; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Field descriptor, e.g. "m=3,poly=0xb,n=7"
    #[arg(long)]
    field: Option<String>,
    /// Code parameters n,k,b
    #[arg(long)]
    code: Option<String>,
    /// Generator source: banded | grs:<vfile> | random:<seed> | <matrix file>
    #[arg(long)]
    gen: Option<String>,
    /// Decoder: brute | gs
    #[arg(long)]
    decoder: Option<String>,
    /// Decoding radius: auto | <int>
    #[arg(long)]
    radius: Option<String>,
    /// Interpolation multiplicity: auto | <int>
    #[arg(long)]
    multiplicity: Option<String>,
    /// Error model: <t> for fixed weight or p=<prob>
    #[arg(long)]
    errors: Option<String>,
    /// Number of trials
    #[arg(long)]
    trials: Option<u64>,
    /// Master seed
    #[arg(long)]
    seed: Option<u64>,
    /// Input file (messages, codewords, or candidate lists)
    #[arg(long, name = "in")]
    input: Option<PathBuf>,
    /// Inline message, hex elements separated by spaces or commas
    #[arg(long)]
    msg: Option<String>,
    /// Transform file produced by precompute
    #[arg(long)]
    transform: Option<PathBuf>,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Flags merged over the config file.
struct Merged {
    kv: BTreeMap<String, String>,
    input: Option<PathBuf>,
    msg: Option<String>,
    transform: Option<PathBuf>,
    out: Option<PathBuf>,
}

impl Merged {
    fn new(args: &CommonArgs) -> Result<Merged> {
        let mut kv = match &args.config {
            Some(p) => textio::parse_config_file(&fs::read_to_string(p)?)?,
            None => BTreeMap::new(),
        };
        let overrides: [(&str, Option<String>); 8] = [
            ("field", args.field.clone()),
            ("code", args.code.clone()),
            ("gen", args.gen.clone()),
            ("decoder", args.decoder.clone()),
            ("radius", args.radius.clone()),
            ("multiplicity", args.multiplicity.clone()),
            ("errors", args.errors.clone()),
            ("trials", args.trials.map(|t| t.to_string())),
        ];
        for (key, val) in overrides {
            if let Some(v) = val {
                kv.insert(key.into(), v);
            }
        }
        if let Some(s) = args.seed {
            kv.insert("seed".into(), s.to_string());
        }
        let path_or = |flag: &Option<PathBuf>, key: &str, kv: &BTreeMap<String, String>| {
            flag.clone().or_else(|| kv.get(key).map(PathBuf::from))
        };
        Ok(Merged {
            input: path_or(&args.input, "in", &kv),
            msg: args.msg.clone().or_else(|| kv.get("msg").cloned()),
            transform: path_or(&args.transform, "transform", &kv),
            out: path_or(&args.out, "out", &kv),
            kv,
        })
    }

    fn get(&self, key: &str) -> Result<&str> {
        self.kv
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Parse(format!("missing required option --{key}")))
    }

    fn field(&self) -> Result<FieldParams> {
        let raw = self.get("field")?;
        let line = if raw.trim_start().starts_with("field") {
            raw.to_string()
        } else {
            format!("field {raw}")
        };
        let (m, poly, n) = textio::parse_field_descriptor(&line)?;
        Ok(FieldParams { m, poly, n })
    }

    fn code(&self) -> Result<(usize, usize, usize)> {
        let raw = self.get("code")?;
        let parts: Vec<usize> = raw
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad code triple {raw:?}"))))
            .collect::<Result<_>>()?;
        if parts.len() != 3 {
            return Err(Error::Parse(format!("--code wants n,k,b; got {raw:?}")));
        }
        Ok((parts[0], parts[1], parts[2]))
    }

    fn gen(&self) -> Result<GenSource> {
        let raw = self.kv.get("gen").map(String::as_str).unwrap_or("banded");
        if raw == "banded" {
            return Ok(GenSource::Banded);
        }
        if let Some(vfile) = raw.strip_prefix("grs:") {
            let text = fs::read_to_string(vfile)?;
            let line = textio::next_content_line(&mut text.lines())
                .ok_or_else(|| Error::Parse(format!("empty multiplier file {vfile}")))?;
            return Ok(GenSource::Grs(textio::parse_vector(line)?));
        }
        if let Some(seed) = raw.strip_prefix("random:") {
            let seed = seed
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator seed {seed:?}")))?;
            return Ok(GenSource::RandomBasis(seed));
        }
        let text = fs::read_to_string(raw)?;
        let mat = textio::parse_matrix(&mut text.lines())?;
        Ok(GenSource::Matrix(mat))
    }

    fn decoder(&self) -> Result<DecoderConfig> {
        let kind = match self.kv.get("decoder").map(String::as_str).unwrap_or("brute") {
            "brute" => DecoderKind::BruteForce,
            "gs" => DecoderKind::GuruswamiSudan,
            other => return Err(Error::Parse(format!("unknown decoder {other:?}"))),
        };
        let radius = match self.kv.get("radius").map(String::as_str).unwrap_or("auto") {
            "auto" => Radius::Auto,
            t => Radius::Fixed(
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad radius {t:?}")))?,
            ),
        };
        let multiplicity = match self
            .kv
            .get("multiplicity")
            .map(String::as_str)
            .unwrap_or("auto")
        {
            "auto" => Multiplicity::Auto,
            m => Multiplicity::Fixed(
                m.parse()
                    .map_err(|_| Error::Parse(format!("bad multiplicity {m:?}")))?,
            ),
        };
        Ok(DecoderConfig { kind, radius, multiplicity })
    }

    fn errors(&self) -> Result<ErrorModel> {
        let raw = self.kv.get("errors").map(String::as_str).unwrap_or("0");
        if let Some(p) = raw.strip_prefix("p=") {
            let p: f64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad probability {p:?}")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Parse(format!("probability {p} outside [0,1]")));
            }
            return Ok(ErrorModel::SymbolProb(p));
        }
        Ok(ErrorModel::FixedWeight(raw.parse().map_err(|_| {
            Error::Parse(format!("bad error weight {raw:?}"))
        })?))
    }

    fn experiment(&self) -> Result<ExperimentConfig> {
        Ok(ExperimentConfig {
            field: self.field()?,
            code: self.code()?,
            gen: self.gen()?,
            decoder: self.decoder()?,
            errors: self.errors()?,
            trials: self
                .kv
                .get("trials")
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad trials {t:?}"))))
                .transpose()?
                .unwrap_or(100),
            seed: self
                .kv
                .get("seed")
                .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad seed {s:?}"))))
                .transpose()?
                .unwrap_or(0),
        })
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }

    fn input_vectors(&self) -> Result<Vec<Vec<Elem>>> {
        if let Some(inline) = &self.msg {
            let line = inline.replace(',', " ");
            return Ok(vec![textio::parse_vector(&line)?]);
        }
        let path = self
            .input
            .as_ref()
            .ok_or_else(|| Error::Parse("missing --in (or --msg)".into()))?;
        let text = fs::read_to_string(path)?;
        let mut out = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            out.push(textio::parse_vector(line)?);
        }
        Ok(out)
    }
}

fn prepare(merged: &Merged) -> Result<Experiment> {
    let cfg = merged.experiment()?;
    let (exp, _) = Experiment::prepare(&cfg)?;
    if exp.spec.zeros_wrap() {
        eprintln!(
            "warning: zero set of g(x) wraps past alpha^{}; exponents reduced mod n",
            exp.spec.n()
        );
    }
    Ok(exp)
}

fn cmd_precompute(merged: &Merged) -> Result<()> {
    let exp = prepare(merged)?;
    let text = textio::format_transform(&exp.field, &exp.transform);
    match &merged.out {
        Some(p) => {
            fs::write(p, &text)?;
            print!("{}", textio::format_matrix(exp.transform.b_matrix()));
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_encode(merged: &Merged) -> Result<()> {
    let exp = prepare(merged)?;
    let mut out = String::new();
    for msg in merged.input_vectors()? {
        let word = harness::encode_message(&exp, &msg)?;
        out.push_str(&textio::format_vector(&word));
        out.push('\n');
    }
    merged.emit(&out)
}

fn cmd_corrupt(merged: &Merged) -> Result<()> {
    let field = merged.field()?.build()?;
    let model = merged.errors()?;
    let seed = merged
        .kv
        .get("seed")
        .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad seed {s:?}"))))
        .transpose()?
        .unwrap_or(0);
    let mut master = rslist::rng::SplitMix64::new(seed);
    let mut out = String::new();
    for mut word in merged.input_vectors()? {
        let trial_seed = master.next_u64();
        let mut rng = rslist::rng::SplitMix64::new(trial_seed);
        harness::inject_errors(&mut rng, &mut word, &model, field.q());
        out.push_str(&textio::format_vector(&word));
        out.push('\n');
    }
    merged.emit(&out)
}

fn cmd_decode(merged: &Merged) -> Result<()> {
    let exp = prepare(merged)?;
    let ctr = MulCounter::schematic();
    let mut out = String::new();
    for (i, word) in merged.input_vectors()?.iter().enumerate() {
        let list = harness::decode_received(&exp, word, Some(&ctr))?;
        out.push_str(&format!("word {i} candidates {}\n", list.len()));
        for cand in &list.candidates {
            out.push_str(&textio::format_vector(cand));
            out.push('\n');
        }
    }
    merged.emit(&out)?;
    eprintln!("mult_total={}", ctr.count());
    Ok(())
}

fn cmd_recover(merged: &Merged) -> Result<()> {
    let path = merged
        .transform
        .as_ref()
        .ok_or_else(|| Error::Parse("missing --transform".into()))?;
    let (field, transform) = textio::parse_transform(&fs::read_to_string(path)?)?;
    let input = fs::read_to_string(
        merged
            .input
            .as_ref()
            .ok_or_else(|| Error::Parse("missing --in".into()))?,
    )?;
    let ctr = MulCounter::schematic();
    let mut out = String::new();
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with("word ") {
            // structural lines from decode pass through with a new label
            out.push_str(&line.replace("candidates", "messages"));
            out.push('\n');
            continue;
        }
        let f = textio::parse_vector(line)?;
        let m = transform.recover_message(&field, &f, Some(&ctr))?;
        out.push_str(&textio::format_vector(&m));
        out.push('\n');
    }
    merged.emit(&out)?;
    eprintln!("mult_total={}", ctr.count());
    Ok(())
}

fn emit_report(merged: &Merged, report: &TrialReport) -> Result<()> {
    print!("{}", report.render());
    if let Some(p) = &merged.out {
        fs::write(p, report.to_json())?;
    }
    Ok(())
}

fn cmd_roundtrip(merged: &Merged) -> Result<()> {
    let cfg = merged.experiment()?;
    let report = harness::run_roundtrip(&cfg)?;
    emit_report(merged, &report)
}

fn cmd_compare_scaling(merged: &Merged) -> Result<()> {
    let cfg = merged.experiment()?;
    let report = harness::run_compare_scaling(&cfg)?;
    emit_report(merged, &report)
}

fn run(cli: Cli) -> Result<()> {
    let (args, f): (&CommonArgs, fn(&Merged) -> Result<()>) = match &cli.cmd {
        Cmd::Precompute(a) => (a, cmd_precompute),
        Cmd::Encode(a) => (a, cmd_encode),
        Cmd::Corrupt(a) => (a, cmd_corrupt),
        Cmd::Decode(a) => (a, cmd_decode),
        Cmd::Recover(a) => (a, cmd_recover),
        Cmd::Roundtrip(a) => (a, cmd_roundtrip),
        Cmd::CompareScaling(a) => (a, cmd_compare_scaling),
    };
    f(&Merged::new(args)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
