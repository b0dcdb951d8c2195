//! Simulation pipeline: build a code, register a generator matrix,
//! precompute the recovery transform, then per trial draw a message, encode,
//! inject channel errors, list decode, and recover every list element.
//! Reports carry schematic multiplication counts per phase and the seeds of
//! failed trials for replay.

use std::fmt::Write as _;

use serde::Serialize;

use crate::code::{
    build_code, build_grs_generator, encode_generator, narrow_sense_transform, validate_generator,
    RsCodeSpec,
};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, MulCounter};
use crate::gfft::GfftPlan;
use crate::linalg::Matrix;
use crate::listdec::{Codebook, DecoderConfig, DecoderKind, ListDecodeOutput};
use crate::recovery::{precompute, recover_by_scaling, RecoveryTransform};
use crate::rng::SplitMix64;

/// Field parameters in plain data form, as they appear in descriptors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldParams {
    pub m: u32,
    pub poly: u32,
    pub n: usize,
}

impl FieldParams {
    pub fn build(&self) -> Result<Field> {
        Field::new(self.m, self.poly, self.n)
    }
}

/// Where the generator matrix comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSource {
    /// The banded matrix G built from g(x).
    Banded,
    /// An explicit k x n matrix, validated at registration.
    Matrix(Matrix),
    /// Column-scaled generator built from the multiplier vector v.
    Grs(Vec<Elem>),
    /// A G_a = A G with A drawn invertible from the given seed.
    RandomBasis(u64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorModel {
    /// Exactly t distinct positions, each replaced by a uniformly random
    /// different symbol.
    FixedWeight(usize),
    /// Each position independently hit with probability p.
    SymbolProb(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub field: FieldParams,
    pub code: (usize, usize, usize), // n, k, b
    pub gen: GenSource,
    pub decoder: DecoderConfig,
    pub errors: ErrorModel,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MultCounts {
    pub w_transform: u64,
    pub decode: u64,
    pub recovery: u64,
}

/// Aggregate over all trials of a run. `list_total` is the numerator of the
/// average list size (denominator = trials); reports print it unreduced so
/// the exact count is preserved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub trials: u64,
    pub recovery_successes: u64,
    pub list_total: u64,
    pub mult: MultCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult_scaling: Option<u64>,
    pub failures: Vec<u64>,
}

impl TrialReport {
    /// Line-oriented key=value text; byte-identical for identical runs.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "trials={}", self.trials);
        let _ = writeln!(s, "recovery_successes={}", self.recovery_successes);
        let _ = writeln!(s, "average_list_size={}/{}", self.list_total, self.trials);
        let _ = writeln!(s, "mult_w_transform={}", self.mult.w_transform);
        let _ = writeln!(s, "mult_decode={}", self.mult.decode);
        let _ = writeln!(s, "mult_recovery={}", self.mult.recovery);
        if let Some(ms) = self.mult_scaling {
            let _ = writeln!(s, "mult_scaling={ms}");
        }
        let _ = writeln!(
            s,
            "failures={}",
            self.failures
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn average_list_size(&self) -> f64 {
        self.list_total as f64 / self.trials as f64
    }
}

/// A registered experiment: everything derived from the config once.
pub struct Experiment {
    pub field: Field,
    pub spec: RsCodeSpec,
    pub g_a: Matrix,
    pub grs_v: Option<Vec<Elem>>,
    pub plan: GfftPlan,
    pub transform: RecoveryTransform,
    decoder_cfg: DecoderConfig,
    codebook: Option<Codebook>,
}

impl Experiment {
    pub fn prepare(cfg: &ExperimentConfig) -> Result<(Experiment, MultCounts)> {
        let field = cfg.field.build()?;
        let (n, k, b) = cfg.code;
        let spec = build_code(&field, n, k, b)?;
        let (g_a, grs_v) = resolve_generator(&field, &spec, &cfg.gen)?;
        validate_generator(&field, &spec, &g_a)?;
        let plan = GfftPlan::new(&field);
        let transform = precompute(&field, &spec, &g_a, &plan)?;

        // brute-force decoding reuses one codebook across all trials; its
        // construction cost is attributed to the decode phase
        let mut counts = MultCounts::default();
        let codebook = match cfg.decoder.kind {
            DecoderKind::BruteForce => {
                let ctr = MulCounter::schematic();
                let book = Codebook::build(&field, &spec, Some(&ctr))?;
                counts.decode += ctr.count();
                Some(book)
            }
            DecoderKind::GuruswamiSudan => None,
        };

        Ok((
            Experiment {
                field,
                spec,
                g_a,
                grs_v,
                plan,
                transform,
                decoder_cfg: cfg.decoder,
                codebook,
            },
            counts,
        ))
    }

    fn decode(&self, received: &[Elem], ctr: Option<&MulCounter>) -> Result<ListDecodeOutput> {
        match (&self.codebook, self.decoder_cfg.kind) {
            (Some(book), _) => {
                let radius = self
                    .decoder_cfg
                    .resolve_radius(self.spec.n(), self.spec.k());
                Ok(book.decode(received, radius))
            }
            (None, _) => crate::listdec::decode(
                &self.field,
                &self.spec,
                received,
                &self.decoder_cfg,
                ctr,
            ),
        }
    }
}

fn resolve_generator(
    field: &Field,
    spec: &RsCodeSpec,
    gen: &GenSource,
) -> Result<(Matrix, Option<Vec<Elem>>)> {
    match gen {
        GenSource::Banded => Ok((spec.generator_matrix(), None)),
        GenSource::Matrix(m) => Ok((m.clone(), None)),
        GenSource::Grs(v) => {
            let g = build_grs_generator(field, spec.n(), spec.k(), v)?;
            Ok((g, Some(v.clone())))
        }
        GenSource::RandomBasis(seed) => {
            let mut rng = SplitMix64::new(*seed);
            let k = spec.k();
            let a = loop {
                let data: Vec<Elem> = (0..k * k)
                    .map(|_| Elem(rng.next_below(field.q() as u64) as u16))
                    .collect();
                let cand = Matrix::new(k, k, data);
                if cand.inverse(field).is_ok() {
                    break cand;
                }
            };
            Ok((a.mul(field, &spec.generator_matrix())?, None))
        }
    }
}

/// Applies the error model in place, deterministically from the trial RNG.
pub fn inject_errors(rng: &mut SplitMix64, word: &mut [Elem], model: &ErrorModel, q: usize) {
    match *model {
        ErrorModel::FixedWeight(t) => {
            let n = word.len();
            let t = t.min(n);
            // partial Fisher-Yates for t distinct positions
            let mut idx: Vec<usize> = (0..n).collect();
            for i in 0..t {
                let j = i + rng.next_below((n - i) as u64) as usize;
                idx.swap(i, j);
            }
            for &p in &idx[..t] {
                // xor with a uniform nonzero delta = uniform different symbol
                word[p] = Elem(word[p].0 ^ (1 + rng.next_below(q as u64 - 1) as u16));
            }
        }
        ErrorModel::SymbolProb(p) => {
            for w in word.iter_mut() {
                if rng.bernoulli(p) {
                    *w = Elem(w.0 ^ (1 + rng.next_below(q as u64 - 1) as u16));
                }
            }
        }
    }
}

struct TrialOutcome {
    success: bool,
    list_size: u64,
    aborted: bool,
}

fn run_trial(
    exp: &Experiment,
    model: &ErrorModel,
    trial_seed: u64,
    w_ctr: &MulCounter,
    dec_ctr: &MulCounter,
    rec_ctr: &MulCounter,
) -> Result<TrialOutcome> {
    let mut rng = SplitMix64::new(trial_seed);
    let q = exp.field.q();
    let k = exp.spec.k();

    let msg: Vec<Elem> = (0..k)
        .map(|_| Elem(rng.next_below(q as u64) as u16))
        .collect();
    let mut word = encode_generator(&exp.field, &exp.spec, &exp.g_a, &msg)?;
    inject_errors(&mut rng, &mut word, model, q);

    // step 1: scale into the narrow-sense domain
    let rbar = narrow_sense_transform(&exp.field, &exp.spec, &word, Some(w_ctr))?;

    // step 2: list decode; guard violations abort the trial, not the run
    let list = match exp.decode(&rbar, Some(dec_ctr)) {
        Ok(l) => l,
        Err(Error::InstanceTooLarge(_)) => {
            return Ok(TrialOutcome { success: false, list_size: 0, aborted: true })
        }
        Err(e) => return Err(e),
    };

    // step 3: recover every list element
    let mut success = false;
    for cand in &list.candidates {
        let rec = exp
            .transform
            .recover_message(&exp.field, cand, Some(rec_ctr))?;
        if rec == msg {
            success = true;
        }
    }
    Ok(TrialOutcome { success, list_size: list.len() as u64, aborted: false })
}

/// Encode, corrupt, decode, recover over `trials` independent trials.
pub fn run_roundtrip(cfg: &ExperimentConfig) -> Result<TrialReport> {
    let (exp, base_counts) = Experiment::prepare(cfg)?;
    let w_ctr = MulCounter::schematic();
    let dec_ctr = MulCounter::schematic();
    let rec_ctr = MulCounter::schematic();

    let mut master = SplitMix64::new(cfg.seed);
    let mut successes = 0u64;
    let mut list_total = 0u64;
    let mut failures = Vec::new();
    for _ in 0..cfg.trials {
        let trial_seed = master.next_u64();
        let outcome = run_trial(&exp, &cfg.errors, trial_seed, &w_ctr, &dec_ctr, &rec_ctr)?;
        if outcome.success {
            successes += 1;
        } else {
            failures.push(trial_seed);
        }
        if outcome.aborted {
            continue;
        }
        list_total += outcome.list_size;
    }
    failures.sort_unstable();

    Ok(TrialReport {
        trials: cfg.trials,
        recovery_successes: successes,
        list_total,
        mult: MultCounts {
            w_transform: w_ctr.count(),
            decode: base_counts.decode + dec_ctr.count(),
            recovery: rec_ctr.count(),
        },
        mult_scaling: None,
        failures,
    })
}

/// Runs the column-scaling recovery and the transform recovery on identical
/// trials; the recovered message sets must agree exactly. Requires a GRS
/// generator whose multiplier vector is geometric over the subgroup
/// generated by alpha, since that is precisely when the column-scaled code
/// is an RS code and both methods apply.
pub fn run_compare_scaling(cfg: &ExperimentConfig) -> Result<TrialReport> {
    let v = match &cfg.gen {
        GenSource::Grs(v) => v.clone(),
        _ => {
            return Err(Error::InvalidCodeParameters(
                "compare-scaling requires a GRS generator (--gen grs:<vfile>)".into(),
            ))
        }
    };
    let field = cfg.field.build()?;
    let (n, k, _) = cfg.code;
    let b = grs_code_offset(&field, &v)?;
    let effective = ExperimentConfig {
        code: (n, k, b),
        ..cfg.clone()
    };
    let (exp, base_counts) = Experiment::prepare(&effective)?;

    let w_ctr = MulCounter::schematic();
    let dec_ctr = MulCounter::schematic();
    let rec_ctr = MulCounter::schematic();
    let scale_ctr = MulCounter::schematic();

    let q = exp.field.q();
    let mut master = SplitMix64::new(cfg.seed);
    let mut successes = 0u64;
    let mut list_total = 0u64;
    let mut failures = Vec::new();

    for trial in 0..cfg.trials {
        let trial_seed = master.next_u64();
        let mut rng = SplitMix64::new(trial_seed);
        let msg: Vec<Elem> = (0..k)
            .map(|_| Elem(rng.next_below(q as u64) as u16))
            .collect();
        let mut word = encode_generator(&exp.field, &exp.spec, &exp.g_a, &msg)?;
        inject_errors(&mut rng, &mut word, &cfg.errors, q);

        // prior-art path: scale by 1/v_i (n multiplications), decode, and the
        // list elements are the messages themselves
        let scaled = recover_by_scaling(&exp.field, &v, &word, Some(&scale_ctr))?;
        let list_a = exp.decode(&scaled, Some(&dec_ctr))?;
        let mut messages_a = list_a.candidates.clone();
        messages_a.sort();

        // transform path: steps 1-3
        let rbar = narrow_sense_transform(&exp.field, &exp.spec, &word, Some(&w_ctr))?;
        let list_b = exp.decode(&rbar, Some(&dec_ctr))?;
        let mut messages_b = Vec::with_capacity(list_b.len());
        for cand in &list_b.candidates {
            messages_b.push(exp.transform.recover_message(&exp.field, cand, Some(&rec_ctr))?);
        }
        messages_b.sort();

        if messages_a != messages_b {
            return Err(Error::RecoveryMismatch(format!(
                "trial {trial} (seed {trial_seed}): scaling path recovered {} messages, transform path {}",
                messages_a.len(),
                messages_b.len()
            )));
        }

        list_total += list_b.len() as u64;
        if messages_b.binary_search_by(|c| c.as_slice().cmp(&msg)).is_ok() {
            successes += 1;
        } else {
            failures.push(trial_seed);
        }
    }
    failures.sort_unstable();

    Ok(TrialReport {
        trials: cfg.trials,
        recovery_successes: successes,
        list_total,
        mult: MultCounts {
            w_transform: w_ctr.count(),
            decode: base_counts.decode + dec_ctr.count(),
            recovery: rec_ctr.count(),
        },
        mult_scaling: Some(scale_ctr.count()),
        failures,
    })
}

/// Derives the RS first-zero exponent b from a geometric multiplier vector
/// v_i = s * rho^i with rho in the subgroup generated by alpha: b = 1 - t
/// mod n where rho = alpha^t. Rejects non-geometric v, for which the
/// column-scaled code is not an RS code and no recovery transform exists.
pub fn grs_code_offset(field: &Field, v: &[Elem]) -> Result<usize> {
    let n = field.n();
    if v.len() != n {
        return Err(Error::DimensionError(format!(
            "multiplier vector of length {}, n={n}",
            v.len()
        )));
    }
    if let Some(i) = v.iter().position(|x| x.is_zero()) {
        return Err(Error::ZeroMultiplier(i));
    }
    if n == 1 {
        return Ok(1);
    }
    let rho = field.mul(v[1], field.inv(v[0])?);
    for i in 0..n - 1 {
        if field.mul(v[i], rho) != v[i + 1] {
            return Err(Error::InvalidCodeParameters(
                "GRS multiplier vector is not geometric, so the scaled code is not an RS code"
                    .into(),
            ));
        }
    }
    let t = (0..n)
        .find(|&t| field.pow_alpha(t as i64) == rho)
        .ok_or_else(|| {
            Error::InvalidCodeParameters(
                "GRS ratio lies outside the subgroup generated by alpha".into(),
            )
        })?;
    let b = (1 + n - t) % n;
    Ok(if b == 0 { n } else { b })
}

/// Messages a received word decodes to, ranked by candidate distance; used
/// by the decode/recover CLI steps.
pub fn decode_received(
    exp: &Experiment,
    received: &[Elem],
    ctr: Option<&MulCounter>,
) -> Result<ListDecodeOutput> {
    let rbar = narrow_sense_transform(&exp.field, &exp.spec, received, ctr)?;
    exp.decode(&rbar, ctr)
}

// Re-export for CLI use: encoding a batch of messages via the registered
// generator.
pub fn encode_message(exp: &Experiment, msg: &[Elem]) -> Result<Vec<Elem>> {
    encode_generator(&exp.field, &exp.spec, &exp.g_a, msg)
}

/// Random geometric multiplier vector for compare-scaling experiments:
/// v_i = s * alpha^(t i) with random nonzero s and random t.
pub fn random_geometric_v(field: &Field, seed: u64) -> Vec<Elem> {
    let mut rng = SplitMix64::new(seed);
    let s = Elem(1 + rng.next_below(field.q() as u64 - 1) as u16);
    let t = rng.next_below(field.n() as u64) as i64;
    (0..field.n())
        .map(|i| field.mul(s, field.pow_alpha(t * i as i64)))
        .collect()
}
