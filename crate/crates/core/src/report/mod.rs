//! End-to-end runs and their serializable reports.
//!
//! A run goes catalog curve -> seeded smooth surface -> class by both paths
//! where possible -> reconstruction and criterion checks -> perfectness over
//! the liaison pool -> pairwise class comparisons. Every verdict in a
//! [`RunReport`] carries the dimension table it was decided from.

pub mod fixture;
pub mod table;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::annihilator::{
    annihilator, annihilator_acm, annihilator_apolar, classes_equal, liaison_pool, perfect_check, reconstruct_check,
    socle_space, AnnihilatorClass, Path, PerfectVerdict, ReconstructionVerdict,
};
use crate::error::{Error, Result};
use crate::geometry::{
    acm_bound_holds, catalog, lattice_classification, lattice_scan, random_surface_containing,
    reconstruction_criterion, CatalogName, CriterionReport, CurveModel, LatticeSolution, Link, SurfaceModel,
};
use crate::resolution::hilbert_burch;
use crate::ring::{dim_r, PrimeField};

/// Degrees shown in the curve Hilbert function table.
pub const HF_DEGREES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionSummary {
    pub r: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSummary {
    pub name: String,
    pub degree: i64,
    pub genus: i64,
    pub s_c: usize,
    pub e_c: Option<i64>,
    pub acm: bool,
    pub resolution: Option<ResolutionSummary>,
    pub generator_degrees: Vec<usize>,
    /// `dim (R/I_C)_n` for `n = 0..=8`.
    pub hilbert_function: Vec<usize>,
    pub link: Option<Link>,
}

impl CurveSummary {
    pub fn of(c: &CurveModel) -> Self {
        let resolution = hilbert_burch(&c.ideal)
            .ok()
            .map(|hb| ResolutionSummary { r: hb.rank(), a: hb.a_degrees.clone(), b: hb.b_degrees.clone() });
        let mut generator_degrees: Vec<usize> =
            c.ideal.minimal_generators().iter().filter_map(|g| g.degree()).collect();
        generator_degrees.sort_unstable();
        CurveSummary {
            name: c.name.clone(),
            degree: c.degree,
            genus: c.genus,
            s_c: c.s_c,
            e_c: c.e_c,
            acm: c.acm,
            resolution,
            generator_degrees,
            hilbert_function: (0..=HF_DEGREES as i64).map(|n| c.ideal.hilbert_function(n)).collect(),
            link: c.link.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub zero_class: bool,
    pub path: Path,
    pub socle_degree: usize,
    /// Corank of `(I_C + J_S)_{2s-4}` before any linked curves are added.
    pub socle_corank: usize,
    pub linked: Vec<String>,
    pub alpha_dims: Vec<usize>,
    pub quotient_hf: Vec<usize>,
    pub curve_dims: Vec<usize>,
    pub jacobian_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEquality {
    pub left: String,
    pub right: String,
    pub equal: bool,
    /// `dim ker α` for each side and of their intersection; the zero class
    /// has all of `R_{2s-4}` as kernel.
    pub left_dim: usize,
    pub right_dim: usize,
    pub common_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub max_deg: i64,
    pub scanned: usize,
    pub rejections: BTreeMap<String, usize>,
    pub survivors: Vec<LatticeSolution>,
    /// `(H.D0, C.D0, D0^2 / 2)` of the quadric residual, from its degree and
    /// genus via `D0 ~ 2H - C` on a quartic.
    pub residual_triple: Option<(i64, i64, i64)>,
    pub residual_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossPrime {
    pub prime: u32,
    pub consistent: bool,
    pub mismatched: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectationResult {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub kind: &'static str,
    pub command: String,
    pub prime: u32,
    pub seed: u64,
    pub curve: CurveSummary,
    pub s: Option<usize>,
    pub surface_fingerprint: Option<String>,
    pub class: Option<ClassSummary>,
    /// Minors and apolar classes agree in every degree (ACM curves only).
    pub paths_agree: Option<bool>,
    pub apolar_error: Option<String>,
    pub reconstruction: Option<ReconstructionVerdict>,
    pub criterion: Option<CriterionReport>,
    pub acm_bound: Option<bool>,
    pub perfect: Option<PerfectVerdict>,
    pub class_equal: Vec<ClassEquality>,
    pub lattice: Option<LatticeReport>,
    pub cross_prime: Option<CrossPrime>,
    pub expectations: Vec<ExpectationResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl RunReport {
    fn bare(command: &str, prime: u32, seed: u64, curve: CurveSummary) -> Self {
        RunReport {
            kind: "run",
            command: command.to_string(),
            prime,
            seed,
            curve,
            s: None,
            surface_fingerprint: None,
            class: None,
            paths_agree: None,
            apolar_error: None,
            reconstruction: None,
            criterion: None,
            acm_bound: None,
            perfect: None,
            class_equal: Vec::new(),
            lattice: None,
            cross_prime: None,
            expectations: Vec::new(),
            timings_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The prime-independent part of the report, used for cross-prime
    /// comparison: everything except the prime, surface fingerprint,
    /// expectations and timings.
    pub fn signature(&self) -> BTreeMap<&'static str, serde_json::Value> {
        let v = |x: serde_json::Result<serde_json::Value>| x.expect("report serializes");
        let mut out = BTreeMap::new();
        out.insert("curve", v(serde_json::to_value(&self.curve)));
        out.insert("class", v(serde_json::to_value(&self.class)));
        out.insert("paths_agree", v(serde_json::to_value(self.paths_agree)));
        out.insert("reconstruction", v(serde_json::to_value(&self.reconstruction)));
        out.insert("criterion", v(serde_json::to_value(&self.criterion)));
        out.insert("acm_bound", v(serde_json::to_value(self.acm_bound)));
        out.insert("perfect", v(serde_json::to_value(&self.perfect)));
        out.insert("class_equal", v(serde_json::to_value(&self.class_equal)));
        out.insert("lattice", v(serde_json::to_value(&self.lattice)));
        out
    }

    /// Value of an expectation key, or `None` if the report lacks it.
    ///
    /// Keys: `reconstructed`, `perfect`, `paths_agree`, `zero_class`,
    /// `criterion`, `acm_bound`, `class_equal` (all comparisons with
    /// curves), `cross_prime`, `alpha_dim.N`, `ledger_total.J`.
    pub fn lookup(&self, key: &str) -> Option<String> {
        let b = |x: bool| x.to_string();
        if let Some(n) = key.strip_prefix("alpha_dim.") {
            let n: usize = n.parse().ok()?;
            return self.class.as_ref()?.alpha_dims.get(n).map(|d| d.to_string());
        }
        if let Some(j) = key.strip_prefix("ledger_total.") {
            let j: usize = j.parse().ok()?;
            return self.perfect.as_ref()?.ledger.get(j).map(|r| r.total.to_string());
        }
        match key {
            "reconstructed" => self.reconstruction.as_ref().map(|r| b(r.reconstructed)),
            "perfect" => self.perfect.as_ref().map(|p| b(p.perfect)),
            "paths_agree" => self.paths_agree.map(b),
            "zero_class" => self.class.as_ref().map(|c| b(c.zero_class)),
            "criterion" => self.criterion.as_ref().map(|c| b(c.holds)),
            "acm_bound" => self.acm_bound.map(b),
            "class_equal" => {
                let curves: Vec<_> = self.class_equal.iter().filter(|e| e.right != ZERO_NAME).collect();
                (!curves.is_empty()).then(|| b(curves.iter().all(|e| e.equal)))
            }
            "cross_prime" => self.cross_prime.as_ref().map(|c| b(c.consistent)),
            "acm" => Some(b(self.curve.acm)),
            _ => None,
        }
    }

    /// Evaluates and records `key=value` expectations; returns whether all
    /// of them hold. Unknown or malformed keys are usage errors.
    pub fn check_expectations(&mut self, expect: &[Expectation]) -> Result<bool> {
        let mut all = true;
        for e in expect {
            let actual = self.lookup(&e.key).unwrap_or_else(|| "absent".to_string());
            let ok = actual == e.value;
            all &= ok;
            self.expectations.push(ExpectationResult { key: e.key.clone(), expected: e.value.clone(), actual, ok });
        }
        Ok(all)
    }
}

const ZERO_NAME: &str = "zero";

/// A parsed `--expect key=value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub key: String,
    pub value: String,
}

const EXPECT_KEYS: [&str; 9] =
    ["reconstructed", "perfect", "paths_agree", "zero_class", "criterion", "acm_bound", "class_equal", "cross_prime", "acm"];

impl std::str::FromStr for Expectation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (key, value) =
            s.split_once('=').ok_or_else(|| Error::Argument(format!("expectation '{s}' is not key=value")))?;
        let (key, value) = (key.trim(), value.trim().to_ascii_lowercase());
        let indexed = ["alpha_dim.", "ledger_total."]
            .iter()
            .any(|p| key.strip_prefix(p).is_some_and(|n| n.parse::<usize>().is_ok()));
        if !indexed && !EXPECT_KEYS.contains(&key) {
            return Err(Error::Argument(format!("unknown expectation key '{key}'")));
        }
        let value = match value.as_str() {
            "yes" => "true".to_string(),
            "no" => "false".to_string(),
            _ => value,
        };
        Ok(Expectation { key: key.to_string(), value })
    }
}

/// Everything a single run needs besides the prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub curve: CatalogName,
    pub s: usize,
    pub seed: u64,
    /// Reconstruction level `m` (`I_{α,≤m}`).
    pub level: usize,
    pub perfect_level: usize,
    pub max_link_degree: usize,
    pub lattice: bool,
    pub timings: bool,
}

impl PipelineConfig {
    /// Defaults for a catalog curve on a degree-`s` surface: reconstruction
    /// at `e(C) + 3` for ACM curves and at the top generator degree
    /// otherwise; perfectness up to `2s - 4` for ACM curves and up to the top
    /// generator degree otherwise; links of degree `s(C)`.
    pub fn for_curve(k: PrimeField, curve: CatalogName, s: usize, seed: u64) -> Result<Self> {
        let c = catalog(k, curve)?;
        let top = c.ideal.generator_degrees().into_iter().max().unwrap_or(1);
        let (level, perfect_level) = match (c.acm, c.e_c) {
            (true, Some(e)) => ((e + 3).max(1) as usize, (2 * s).saturating_sub(4)),
            _ => (top, top),
        };
        Ok(PipelineConfig {
            curve,
            s,
            seed,
            level,
            perfect_level,
            max_link_degree: c.s_c,
            lattice: curve == CatalogName::RationalQuartic31 && s == 4,
            timings: false,
        })
    }
}

/// Named demos.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Demo {
    TwistedCubic,
    RationalQuartic,
    AcmCi { d1: usize, d2: usize, s: usize },
}

impl Demo {
    pub fn name(&self) -> &'static str {
        match self {
            Demo::TwistedCubic => "twisted-cubic",
            Demo::RationalQuartic => "rational-quartic",
            Demo::AcmCi { .. } => "acm-ci",
        }
    }

    pub fn config(&self, k: PrimeField, seed: u64) -> Result<PipelineConfig> {
        match *self {
            Demo::TwistedCubic => PipelineConfig::for_curve(k, CatalogName::TwistedCubic, 4, seed),
            Demo::RationalQuartic => PipelineConfig::for_curve(k, CatalogName::RationalQuartic31, 4, seed),
            Demo::AcmCi { d1, d2, s } => PipelineConfig::for_curve(k, CatalogName::CompleteIntersection(d1, d2), s, seed),
        }
    }
}

/// Lap timer; never reads the clock when off, so runs without `--timings`
/// also work where no clock is available.
struct Clock {
    start: Option<Instant>,
    laps: BTreeMap<String, f64>,
}

impl Clock {
    fn new(on: bool) -> Self {
        Clock { start: on.then(Instant::now), laps: BTreeMap::new() }
    }

    fn lap(&mut self, name: &str) {
        if let Some(start) = self.start {
            let now = Instant::now();
            let ms = (now - start).as_secs_f64() * 1e3;
            self.laps.insert(name.to_string(), (ms * 1e3).round() / 1e3);
            self.start = Some(now);
        }
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.start.map(|_| self.laps)
    }
}

fn class_summary(c: &CurveModel, surface: &SurfaceModel, a: &AnnihilatorClass) -> Result<ClassSummary> {
    let e = a.socle_degree;
    Ok(ClassSummary {
        zero_class: a.zero_class,
        path: a.path,
        socle_degree: e,
        socle_corank: socle_space(c, surface)?.codim(),
        linked: a.linked.clone(),
        alpha_dims: a.dims(),
        quotient_hf: a.quotient_hf(),
        curve_dims: (0..=e).map(|n| c.ideal.graded_piece(n).dim()).collect(),
        jacobian_dims: (0..=e).map(|n| surface.jacobian.graded_piece(n).dim()).collect(),
    })
}

fn kernel_dim(a: &AnnihilatorClass) -> usize {
    a.kernel_hyperplane.as_ref().map_or(dim_r(a.socle_degree as i64), |h| h.dim())
}

/// Compares two classes on the same surface, with the hyperplane dimensions
/// as evidence.
pub fn compare_classes(left: (&str, &AnnihilatorClass), right: (&str, &AnnihilatorClass)) -> Result<ClassEquality> {
    let equal = classes_equal(left.1, right.1)?;
    let common_dim = match (&left.1.kernel_hyperplane, &right.1.kernel_hyperplane) {
        (Some(x), Some(y)) => x.intersect(y)?.dim(),
        _ => kernel_dim(left.1).min(kernel_dim(right.1)),
    };
    Ok(ClassEquality {
        left: left.0.to_string(),
        right: right.0.to_string(),
        equal,
        left_dim: kernel_dim(left.1),
        right_dim: kernel_dim(right.1),
        common_dim,
    })
}

/// Exhaustive lattice scan with `1 <= x <= max_deg`, plus the check that the
/// quadric residual's numerical class is the surviving one.
pub fn lattice_report(max_deg: i64, c: Option<&CurveModel>, pool: &[CurveModel]) -> LatticeReport {
    let scan = lattice_scan(max_deg, 10 * max_deg + 10);
    let mut rejections = BTreeMap::new();
    for cand in &scan {
        if let Some(r) = cand.rejection {
            let key = serde_json::to_value(r).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            *rejections.entry(key).or_insert(0) += 1;
        }
    }
    let survivors = lattice_classification(max_deg);
    // D ~ 2H - C on a K3 quartic: C.D = 2 deg C - C^2 with C^2 = 2g - 2
    let residual_triple = c.and_then(|c| {
        pool.iter()
            .find(|d| d.link.as_ref().is_some_and(|l| l.link_degree == 2))
            .map(|d| (d.degree, 2 * c.degree - (2 * c.genus - 2), d.genus - 1))
    });
    let residual_matches =
        residual_triple.is_some_and(|(x, y, q)| survivors.iter().any(|s| (s.x, s.y, s.q) == (x, y, q)));
    LatticeReport { max_deg, scanned: scan.len(), rejections, survivors, residual_triple, residual_matches }
}

/// The full pipeline on one seeded surface.
pub fn run_pipeline(k: PrimeField, cfg: &PipelineConfig, command: &str) -> Result<RunReport> {
    let mut clock = Clock::new(cfg.timings);
    let c = catalog(k, cfg.curve)?;
    let mut report = RunReport::bare(command, k.prime(), cfg.seed, CurveSummary::of(&c));
    clock.lap("curve");
    let surface = random_surface_containing(&c, cfg.s, cfg.seed)?;
    report.s = Some(cfg.s);
    report.surface_fingerprint = Some(surface.fingerprint());
    clock.lap("surface");

    let a = annihilator(&c, &surface)?;
    a.validate(Some(&c), &surface)?;
    if c.acm {
        match annihilator_apolar(&c, &surface) {
            Ok(b) => report.paths_agree = Some(a.pieces == b.pieces && classes_equal(&a, &b)?),
            Err(e) => {
                report.paths_agree = Some(false);
                report.apolar_error = Some(e.to_string());
            }
        }
    }
    report.class = Some(class_summary(&c, &surface, &a)?);
    clock.lap("class");

    report.reconstruction = Some(reconstruct_check(&c, &a, cfg.level)?);
    if c.rules.is_some() {
        report.criterion = Some(reconstruction_criterion(&c, &surface, cfg.level)?);
        if c.acm {
            report.acm_bound = Some(acm_bound_holds(&c, cfg.s)?);
        }
    }
    clock.lap("reconstruction");

    let pool = liaison_pool(&c, &surface, cfg.max_link_degree)?;
    let mut members = vec![c.clone()];
    members.extend(pool.iter().cloned());
    report.perfect = Some(perfect_check(&a, &members, &surface, cfg.perfect_level)?);
    clock.lap("perfect");

    for d in &pool {
        if let Ok(b) = annihilator(d, &surface) {
            report.class_equal.push(compare_classes((&c.name, &a), (&d.name, &b))?);
        }
    }
    let zero = AnnihilatorClass::zero(&surface, a.path);
    report.class_equal.push(compare_classes((&c.name, &a), (ZERO_NAME, &zero))?);
    clock.lap("class_equal");

    if cfg.lattice {
        report.lattice = Some(lattice_report(6, Some(&c), &pool));
        clock.lap("lattice");
    }
    report.timings_ms = clock.finish();
    Ok(report)
}

/// Runs the pipeline under `check` and records whether the prime-independent
/// part of the report agrees.
pub fn attach_cross_prime(report: &mut RunReport, cfg: &PipelineConfig, check: PrimeField) -> Result<()> {
    let other = run_pipeline(check, &PipelineConfig { timings: false, ..cfg.clone() }, &report.command)?;
    let (mine, theirs) = (report.signature(), other.signature());
    let mismatched: Vec<String> =
        mine.iter().filter(|(key, v)| theirs.get(*key) != Some(*v)).map(|(key, _)| key.to_string()).collect();
    report.cross_prime = Some(CrossPrime { prime: check.prime(), consistent: mismatched.is_empty(), mismatched });
    Ok(())
}

/// One row of a trials run.
#[derive(Clone, Debug, Serialize)]
pub struct TrialOutcome {
    pub seed: u64,
    pub report: Option<RunReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TrialCounts {
    pub completed: usize,
    pub errors: usize,
    pub reconstructed: usize,
    pub perfect: usize,
    pub paths_agree: usize,
    pub zero_class: usize,
    pub cross_prime_consistent: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialsReport {
    pub kind: &'static str,
    pub command: String,
    pub prime: u32,
    pub seed: u64,
    pub curve: String,
    pub s: usize,
    pub count: usize,
    pub level: usize,
    pub perfect_level: usize,
    pub counts: TrialCounts,
    /// Distinct `alpha_dims` tables, each with the number of trials showing it.
    pub alpha_dims: Vec<(Vec<usize>, usize)>,
    /// Disagreements between trials; the theory predicts none.
    pub anomalies: Vec<String>,
    pub expectations: Vec<ExpectationResult>,
    #[serde(skip)]
    pub outcomes: Vec<TrialOutcome>,
}

impl TrialsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `count` independent trials with seeds `seed, seed + 1, ...`, run in
/// parallel and aggregated in seed order.
pub fn run_trials(
    k: PrimeField,
    cfg: &PipelineConfig,
    count: usize,
    check: Option<PrimeField>,
    expect: &[Expectation],
) -> Result<TrialsReport> {
    if count == 0 {
        return Err(Error::Argument("count must be at least 1".into()));
    }
    let mut outcomes: Vec<TrialOutcome> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let trial = PipelineConfig { seed, ..cfg.clone() };
            let run = run_pipeline(k, &trial, "trials").and_then(|mut r| {
                if let Some(check) = check {
                    attach_cross_prime(&mut r, &trial, check)?;
                }
                r.check_expectations(expect)?;
                Ok(r)
            });
            match run {
                Ok(r) => TrialOutcome { seed, report: Some(r), error: None },
                Err(e) => TrialOutcome { seed, report: None, error: Some(e.to_string()) },
            }
        })
        .collect();
    outcomes.sort_by_key(|o| o.seed);

    let mut counts = TrialCounts::default();
    let mut tables: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut verdicts: BTreeMap<&str, BTreeMap<String, Vec<u64>>> = BTreeMap::new();
    let mut anomalies = Vec::new();
    let mut expectations: BTreeMap<String, ExpectationResult> = BTreeMap::new();
    for o in &outcomes {
        let Some(r) = &o.report else {
            counts.errors += 1;
            anomalies.push(format!("seed {}: {}", o.seed, o.error.as_deref().unwrap_or("error")));
            continue;
        };
        counts.completed += 1;
        let tally = |b: Option<bool>| usize::from(b == Some(true));
        counts.reconstructed += tally(r.reconstruction.as_ref().map(|x| x.reconstructed));
        counts.perfect += tally(r.perfect.as_ref().map(|x| x.perfect));
        counts.paths_agree += tally(r.paths_agree);
        counts.zero_class += tally(r.class.as_ref().map(|x| x.zero_class));
        counts.cross_prime_consistent += tally(r.cross_prime.as_ref().map(|x| x.consistent));
        if let Some(cl) = &r.class {
            *tables.entry(cl.alpha_dims.clone()).or_insert(0) += 1;
        }
        for key in ["reconstructed", "perfect", "paths_agree", "zero_class", "criterion", "cross_prime"] {
            if let Some(v) = r.lookup(key) {
                verdicts.entry(key).or_default().entry(v).or_default().push(o.seed);
            }
        }
        for e in &r.expectations {
            let entry = expectations.entry(e.key.clone()).or_insert_with(|| e.clone());
            if !e.ok && entry.ok {
                *entry = ExpectationResult { actual: format!("{} (seed {})", e.actual, o.seed), ..e.clone() };
            }
        }
    }
    for (key, values) in &verdicts {
        if values.len() > 1 {
            let split: Vec<String> = values.iter().map(|(v, seeds)| format!("{v}: {} trials", seeds.len())).collect();
            anomalies.push(format!("{key} differs across trials ({})", split.join(", ")));
        }
    }
    if tables.len() > 1 {
        anomalies.push(format!("alpha_dims differs across trials ({} distinct tables)", tables.len()));
    }
    // no completed trial means no expectation can hold
    if counts.completed == 0 {
        for e in expect {
            expectations.insert(
                e.key.clone(),
                ExpectationResult { key: e.key.clone(), expected: e.value.clone(), actual: "absent".into(), ok: false },
            );
        }
    }
    Ok(TrialsReport {
        kind: "aggregate",
        command: "trials".into(),
        prime: k.prime(),
        seed: cfg.seed,
        curve: cfg.curve.to_string(),
        s: cfg.s,
        count,
        level: cfg.level,
        perfect_level: cfg.perfect_level,
        counts,
        alpha_dims: tables.into_iter().collect(),
        anomalies,
        expectations: expectations.into_values().collect(),
        outcomes,
    })
}

/// Where `inspect` gets its surface from.
#[derive(Clone, Debug)]
pub enum SurfaceSource {
    None,
    Given(crate::ring::Polynomial),
    Random { s: usize, seed: u64 },
}

/// Report for a curve given by its ideal, optionally on a given surface.
///
/// The ideal is saturated first. When the fixture names a catalog curve and
/// the ideals agree, the catalog's cohomology rules are attached so that the
/// criterion can be evaluated.
pub fn inspect(
    k: PrimeField,
    fx: &fixture::Fixture,
    surface: SurfaceSource,
    level: Option<usize>,
) -> Result<RunReport> {
    let ideal = crate::ideal::IdealHandle::new(k, fx.polys.clone())?.saturation();
    if ideal.is_unit() {
        return Err(Error::Argument("the ideal defines the empty set".into()));
    }
    let name = fx.name().unwrap_or("fixture").to_string();
    let rules = name
        .parse::<CatalogName>()
        .ok()
        .and_then(|n| catalog(k, n).ok())
        .filter(|cat| cat.ideal.equals(&ideal))
        .and_then(|cat| cat.rules);
    let c = CurveModel::from_ideal(name, ideal, rules)?;
    check_header(fx, &c)?;
    let (seed, surface) = match surface {
        SurfaceSource::None => return Ok(RunReport::bare("inspect", k.prime(), 0, CurveSummary::of(&c))),
        SurfaceSource::Given(f) => (0, SurfaceModel::smooth(f)?),
        SurfaceSource::Random { s, seed } => (seed, random_surface_containing(&c, s, seed)?),
    };
    let mut report = RunReport::bare("inspect", k.prime(), seed, CurveSummary::of(&c));
    if !c.ideal.contains(&surface.f) {
        return Err(Error::NotMember { remainder: c.ideal.gb().normal_form(&surface.f).to_string() });
    }
    report.s = Some(surface.s);
    report.surface_fingerprint = Some(surface.fingerprint());
    let a = annihilator(&c, &surface)?;
    a.validate(Some(&c), &surface)?;
    if c.acm {
        let b = annihilator_apolar(&c, &surface);
        report.paths_agree = Some(b.as_ref().is_ok_and(|b| b.pieces == a.pieces));
        report.apolar_error = b.err().map(|e| e.to_string());
    } else if let Ok(b) = annihilator_acm(&c, &surface) {
        report.paths_agree = Some(b.pieces == a.pieces);
    }
    report.class = Some(class_summary(&c, &surface, &a)?);
    if let Some(m) = level {
        report.reconstruction = Some(reconstruct_check(&c, &a, m)?);
        if c.rules.is_some() {
            report.criterion = Some(reconstruction_criterion(&c, &surface, m)?);
        }
    }
    Ok(report)
}

/// Header values that disagree with the computed invariants are errors.
fn check_header(fx: &fixture::Fixture, c: &CurveModel) -> Result<()> {
    let checks = [("d", Some(c.degree)), ("g", Some(c.genus)), ("sC", Some(c.s_c as i64)), ("eC", c.e_c)];
    for (key, actual) in checks {
        if let (Some(claimed), Some(actual)) = (fx.int(key)?, actual) {
            if claimed != actual {
                return Err(Error::Invariant(format!("fixture header {key} = {claimed}, computed {actual}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn twisted_cubic_demo() {
        let cfg = Demo::TwistedCubic.config(k(), 7).unwrap();
        assert_eq!((cfg.level, cfg.perfect_level, cfg.max_link_degree), (2, 4, 2));
        let mut r = run_pipeline(k(), &cfg, "demo").unwrap();
        assert_eq!(r.lookup("reconstructed").as_deref(), Some("true"));
        assert_eq!(r.lookup("perfect").as_deref(), Some("true"));
        assert_eq!(r.lookup("paths_agree").as_deref(), Some("true"));
        assert_eq!(r.lookup("alpha_dim.2").as_deref(), Some("3"));
        assert_eq!(r.lookup("class_equal").as_deref(), Some("true"));
        let exp: Vec<Expectation> = ["perfect=yes", "alpha_dim.1=0"].iter().map(|s| s.parse().unwrap()).collect();
        assert!(r.check_expectations(&exp).unwrap());
        assert!(r.timings_ms.is_none());
        let again = run_pipeline(k(), &cfg, "demo").unwrap();
        let mut again = again;
        again.check_expectations(&exp).unwrap();
        assert_eq!(r.to_json(), again.to_json());
    }

    #[test]
    fn rational_quartic_demo() {
        let cfg = Demo::RationalQuartic.config(k(), 7).unwrap();
        assert_eq!((cfg.level, cfg.perfect_level), (3, 3));
        let r = run_pipeline(k(), &cfg, "demo").unwrap();
        let p = r.perfect.as_ref().unwrap();
        assert!(!p.perfect);
        assert_eq!((p.ledger[3].total, p.ledger[3].alpha), (14, 16));
        assert_eq!(r.lookup("class_equal").as_deref(), Some("true"));
        let zero = r.class_equal.iter().find(|e| e.right == ZERO_NAME).unwrap();
        assert!(!zero.equal);
        let lat = r.lattice.as_ref().unwrap();
        assert_eq!(lat.residual_triple, Some((4, 10, -1)));
        assert!(lat.residual_matches);
        assert_eq!(lat.survivors.len(), 1);
    }

    #[test]
    fn expectation_parsing() {
        assert!("perfect".parse::<Expectation>().is_err());
        assert!("bogus=1".parse::<Expectation>().is_err());
        assert!("alpha_dim.x=1".parse::<Expectation>().is_err());
        let e: Expectation = "ledger_total.3 = 14".parse().unwrap();
        assert_eq!((e.key.as_str(), e.value.as_str()), ("ledger_total.3", "14"));
    }

    #[test]
    fn trials_are_uniform() {
        let cfg = Demo::TwistedCubic.config(k(), 100).unwrap();
        let t = run_trials(k(), &cfg, 4, None, &[]).unwrap();
        assert_eq!(t.counts.completed, 4);
        assert_eq!(t.counts.reconstructed, 4);
        assert!(t.anomalies.is_empty(), "{:?}", t.anomalies);
        let seeds: Vec<u64> = t.outcomes.iter().map(|o| o.seed).collect();
        assert_eq!(seeds, [100, 101, 102, 103]);
        assert!(run_trials(k(), &cfg, 0, None, &[]).is_err());
    }

    #[test]
    fn cross_prime_twisted_cubic() {
        let cfg = Demo::TwistedCubic.config(k(), 3).unwrap();
        let mut r = run_pipeline(k(), &cfg, "demo").unwrap();
        attach_cross_prime(&mut r, &cfg, PrimeField::new(65521).unwrap()).unwrap();
        let cp = r.cross_prime.unwrap();
        assert!(cp.consistent, "{:?}", cp.mismatched);
    }

    #[test]
    fn inspect_twisted_cubic() {
        let c = catalog(k(), CatalogName::TwistedCubic).unwrap();
        let fx = fixture::Fixture::for_curve(&c);
        let r = inspect(k(), &fx, SurfaceSource::None, None).unwrap();
        assert_eq!(r.curve.hilbert_function[..5], [1, 4, 7, 10, 13]);
        let res = r.curve.resolution.unwrap();
        assert_eq!((res.r, res.a, res.b), (2, vec![2, 2, 2], vec![3, 3]));

        let rq = catalog(k(), CatalogName::RationalQuartic31).unwrap();
        let r = inspect(k(), &fixture::Fixture::for_curve(&rq), SurfaceSource::None, None).unwrap();
        assert!(!r.curve.acm && r.curve.resolution.is_none());

        let mut bad = fx.clone();
        bad.header.insert("d".into(), "4".into());
        let r = inspect(k(), &fx, SurfaceSource::Random { s: 4, seed: 7 }, Some(2)).unwrap();
        assert_eq!(r.class.unwrap().alpha_dims, [0, 0, 3, 16, 34]);
        assert!(r.reconstruction.unwrap().reconstructed);
        assert_eq!(r.paths_agree, Some(true));
        assert!(matches!(inspect(k(), &bad, SurfaceSource::None, None), Err(Error::Invariant(_))));
    }
}
