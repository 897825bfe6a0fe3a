//! Brute-force verification: seeded orbit sampling, exhaustive small-rank
//! scans and the empirical check of the sum-root sign rule.
//!
//! Everything here is deterministic in the seed and uses exact arithmetic.

use crate::basic::{self, BasicMap, BasicSubset};
use crate::error::{Error, Result};
use crate::liealg::{coadjoint_apply, Functional, GroupWord};
use crate::orbits::{self, orbit_chart, orbit_chart_with, SignConvention, SumSignRule};
use crate::rational::{self, frac, int, Rational};
use crate::rootsys::{PositiveRoot, RootSystem, RootSystemKind};
use crate::schema::values_map;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Samples per sum root when certifying the sign rule.
pub const SIGN_SAMPLES: usize = 50;

/// Seeded source of words, functionals and basic subsets.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform on `{-3, ..., 3} \ {0}`.
    pub fn param(&mut self) -> Rational {
        let v = self.rng.random_range(1..=6i64);
        int(if v <= 3 { v - 4 } else { v - 3 })
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    pub fn root(&mut self, system: &RootSystem) -> PositiveRoot {
        system.root(self.index(system.len()))
    }

    pub fn word(&mut self, system: &RootSystem, len: usize) -> GroupWord {
        let letters = (0..len).map(|_| (self.root(system), self.param())).collect();
        GroupWord::new(letters)
    }

    /// Each coordinate is zero or a nonzero parameter with equal odds.
    pub fn functional(&mut self, system: &Arc<RootSystem>) -> Functional {
        let values: Vec<Rational> = (0..system.len())
            .map(|_| if self.coin() { self.param() } else { int(0) })
            .collect();
        Functional::from_dense(system.clone(), values).expect("length matches")
    }

    pub fn basic_map(&mut self, subset: &BasicSubset) -> BasicMap {
        let phi = subset.roots().map(|r| (r, self.param())).collect();
        BasicMap::new(subset, phi).expect("nonzero values on the subset")
    }
}

pub fn default_word_length(system: &RootSystem) -> usize {
    2 * system.len()
}

/// `(w . c e_alpha^*, w)` for a random word `w`; `word_length` defaults to `2 |Phi+|`.
pub fn random_orbit_point(
    system: &Arc<RootSystem>,
    alpha: PositiveRoot,
    c: &Rational,
    seed: u64,
    word_length: Option<usize>,
) -> Result<(Functional, GroupWord)> {
    sample_orbit_point(&mut Sampler::new(seed), system, alpha, c, word_length)
}

fn sample_orbit_point(
    sampler: &mut Sampler,
    system: &Arc<RootSystem>,
    alpha: PositiveRoot,
    c: &Rational,
    word_length: Option<usize>,
) -> Result<(Functional, GroupWord)> {
    use num_traits::Zero;
    if c.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let base = Functional::basis(system.clone(), alpha, c.clone())?;
    let len = word_length.unwrap_or_else(|| default_word_length(system));
    let word = sampler.word(system, len);
    Ok((coadjoint_apply(&word, &base)?, word))
}

/// Failure counts of every candidate rule on shared samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionSurvey {
    pub n_max: usize,
    pub seed: u64,
    pub samples: BTreeMap<RootSystemKind, usize>,
    pub failures: BTreeMap<RootSystemKind, BTreeMap<String, usize>>,
}

impl ConventionSurvey {
    pub fn survivors(&self, kind: RootSystemKind) -> Vec<SumSignRule> {
        SumSignRule::CANDIDATES
            .into_iter()
            .filter(|rule| self.failures[&kind][&rule.to_string()] == 0)
            .collect()
    }
}

/// Tests every candidate sign rule against sampled orbit points of every
/// sum root, types B and D, ranks `2..=n_max`.
pub fn survey_sign_conventions(n_max: usize, seed: u64) -> Result<ConventionSurvey> {
    if n_max < 3 {
        return Err(Error::RankOutOfRange {
            kind: RootSystemKind::B,
            n: n_max,
            min: 3,
        });
    }
    let mut samples = BTreeMap::new();
    let mut failures = BTreeMap::new();
    for kind in [RootSystemKind::B, RootSystemKind::D] {
        let mut sampler = Sampler::new(seed);
        let mut count = 0;
        let mut fails: BTreeMap<String, usize> =
            SumSignRule::CANDIDATES.iter().map(|r| (r.to_string(), 0)).collect();
        for n in kind.min_rank()..=n_max {
            let system = RootSystem::shared(kind, n)?;
            for &alpha in system.roots() {
                if !matches!(alpha, PositiveRoot::Sum(..)) {
                    continue;
                }
                let charts = SumSignRule::CANDIDATES
                    .iter()
                    .map(|&rule| {
                        let conv = SignConvention {
                            type_b: rule,
                            type_d: rule,
                        };
                        orbit_chart_with(&system, alpha, int(1), conv).map(|ch| (rule, ch))
                    })
                    .collect::<Result<Vec<_>>>()?;
                for _ in 0..SIGN_SAMPLES {
                    let (f, _) = sample_orbit_point(&mut sampler, &system, alpha, &int(1), None)?;
                    count += 1;
                    for (rule, chart) in &charts {
                        if !chart.contains(&f)? {
                            *fails.get_mut(&rule.to_string()).expect("candidate") += 1;
                        }
                    }
                }
            }
        }
        samples.insert(kind, count);
        failures.insert(kind, fails);
    }
    Ok(ConventionSurvey {
        n_max,
        seed,
        samples,
        failures,
    })
}

/// The unique sign rule per kind with no failures on the survey.
pub fn resolve_sign_conventions(n_max: usize, seed: u64) -> Result<SignConvention> {
    let survey = survey_sign_conventions(n_max, seed)?;
    let pick = |kind| {
        let survivors = survey.survivors(kind);
        match survivors.as_slice() {
            [rule] => Ok(*rule),
            [] => Err(Error::NoConvention { kind }),
            _ => Err(Error::AmbiguousConvention {
                kind,
                survivors: survivors.iter().map(ToString::to_string).collect(),
            }),
        }
    };
    Ok(SignConvention {
        type_b: pick(RootSystemKind::B)?,
        type_d: pick(RootSystemKind::D)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A failing trial, stored with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub seed: u64,
    pub kind: RootSystemKind,
    pub n: usize,
    pub inputs: BTreeMap<String, String>,
    pub word: Vec<(String, String)>,
    pub functional: BTreeMap<String, String>,
    pub detail: String,
}

impl Counterexample {
    fn new(seed: u64, system: &RootSystem, detail: impl Into<String>) -> Self {
        Counterexample {
            seed,
            kind: system.kind(),
            n: system.rank(),
            inputs: BTreeMap::new(),
            word: Vec::new(),
            functional: BTreeMap::new(),
            detail: detail.into(),
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    fn with_word(mut self, word: &GroupWord) -> Self {
        self.word = word
            .letters
            .iter()
            .map(|(r, t)| (r.to_string(), rational::format(t)))
            .collect();
        self
    }

    fn with_functional(mut self, f: &Functional) -> Self {
        self.functional = values_map(f);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub check_name: String,
    pub kind: Option<RootSystemKind>,
    pub n: Vec<usize>,
    pub parameters: BTreeMap<String, String>,
    pub trials: usize,
    pub failures: Vec<Counterexample>,
    pub observations: BTreeMap<String, String>,
    pub verdict: Verdict,
}

impl OracleReport {
    fn new(suite: Suite, config: &SuiteConfig) -> Self {
        let mut parameters = BTreeMap::new();
        parameters.insert("seed".to_string(), config.seed.to_string());
        if let Some(a) = config.alpha {
            parameters.insert("alpha".to_string(), a.to_string());
        }
        if let Some(c) = &config.c {
            parameters.insert("c".to_string(), rational::format(c));
        }
        if let Some(t) = config.trials {
            parameters.insert("trials".to_string(), t.to_string());
        }
        OracleReport {
            check_name: suite.name().to_string(),
            kind: config.kind,
            n: Vec::new(),
            parameters,
            trials: 0,
            failures: Vec::new(),
            observations: BTreeMap::new(),
            verdict: Verdict::Pass,
        }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.trials += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    fn finish(mut self) -> Self {
        self.verdict = if self.failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    ChartSoundness,
    DimensionFormulas,
    DecomposeRoundtrip,
    SingleOrbitScan,
    TwoDimSupport,
    AchievableDims,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::ChartSoundness,
        Suite::DimensionFormulas,
        Suite::DecomposeRoundtrip,
        Suite::SingleOrbitScan,
        Suite::TwoDimSupport,
        Suite::AchievableDims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ChartSoundness => "chart-soundness",
            Suite::DimensionFormulas => "dimension-formulas",
            Suite::DecomposeRoundtrip => "decompose-roundtrip",
            Suite::SingleOrbitScan => "single-orbit-scan",
            Suite::TwoDimSupport => "two-dim-support",
            Suite::AchievableDims => "achievable-dims",
        }
    }

    /// Largest rank exercised when neither `n` nor `max_n` is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::ChartSoundness => 4,
            Suite::SingleOrbitScan => 5,
            _ => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Scope of a suite run. Unset fields fall back to the suite's defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub kind: Option<RootSystemKind>,
    pub n: Option<usize>,
    pub max_n: Option<usize>,
    pub alpha: Option<PositiveRoot>,
    pub c: Option<Rational>,
    pub seed: u64,
    pub trials: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            kind: None,
            n: None,
            max_n: None,
            alpha: None,
            c: None,
            seed: DEFAULT_SEED,
            trials: None,
        }
    }
}

impl SuiteConfig {
    fn kinds(&self) -> Vec<RootSystemKind> {
        match self.kind {
            Some(k) => vec![k],
            None => RootSystemKind::ALL.to_vec(),
        }
    }

    fn ranks(&self, kind: RootSystemKind, default_max: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (kind.min_rank()..=self.max_n.unwrap_or(default_max)).collect(),
        }
    }

    fn scalars(&self) -> Vec<Rational> {
        match &self.c {
            Some(c) => vec![c.clone()],
            None => vec![int(1), int(2), frac(-3, 5)],
        }
    }

    fn alphas(&self, system: &RootSystem) -> Vec<PositiveRoot> {
        match self.alpha {
            Some(a) => vec![a],
            None => system.roots().to_vec(),
        }
    }
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<OracleReport> {
    let suite: Suite = name.parse()?;
    let mut report = OracleReport::new(suite, config);
    match suite {
        Suite::ChartSoundness => chart_soundness(config, &mut report)?,
        Suite::DimensionFormulas => dimension_formulas(config, &mut report)?,
        Suite::DecomposeRoundtrip => decompose_roundtrip(config, &mut report)?,
        Suite::SingleOrbitScan => single_orbit_scan(config, &mut report)?,
        Suite::TwoDimSupport => two_dim_support(config, &mut report)?,
        Suite::AchievableDims => achievable_dims(config, &mut report)?,
    }
    Ok(report.finish())
}

fn type_a_ranks(config: &SuiteConfig, suite: Suite) -> Result<Vec<usize>> {
    if let Some(kind) = config.kind {
        if kind != RootSystemKind::A {
            return Err(Error::WrongKind(kind));
        }
    }
    Ok(config.ranks(RootSystemKind::A, suite.default_max_n()))
}

/// Random images of `c e_alpha^*` satisfy the chart; chart points map back
/// through `construct_group_word`.
fn chart_soundness(config: &SuiteConfig, report: &mut OracleReport) -> Result<()> {
    let trials = config.trials.unwrap_or(100);
    let round_trips = config.trials.map_or(50, |t| t.div_ceil(2));
    let mut sampler = Sampler::new(config.seed);
    for kind in config.kinds() {
        for n in config.ranks(kind, Suite::ChartSoundness.default_max_n()) {
            report.n.push(n);
            let system = RootSystem::shared(kind, n)?;
            for alpha in config.alphas(&system) {
                system.require(alpha)?;
                let scalars = config.scalars();
                for t in 0..trials {
                    let c = &scalars[t % scalars.len()];
                    let chart = orbit_chart(&system, alpha, c.clone())?;
                    let (f, w) = sample_orbit_point(&mut sampler, &system, alpha, c, None)?;
                    report.check(chart.contains(&f)?, || {
                        Counterexample::new(config.seed, &system, "image violates the chart")
                            .input("alpha", alpha)
                            .input("c", rational::format(c))
                            .with_word(&w)
                            .with_functional(&f)
                    });
                }
                let chart = orbit_chart(&system, alpha, int(1))?;
                let base = Functional::basis(system.clone(), alpha, int(1))?;
                for _ in 0..round_trips {
                    let assignment: BTreeMap<PositiveRoot, Rational> = chart
                        .singular()
                        .singular
                        .iter()
                        .map(|&r| (r, sampler.param()))
                        .collect();
                    let f = chart.point(&assignment)?;
                    let w = orbits::construct_group_word(&system, alpha, &f)?;
                    let image = coadjoint_apply(&w, &base)?;
                    report.check(image == f, || {
                        Counterexample::new(config.seed, &system, "round trip through the group word differs")
                            .input("alpha", alpha)
                            .with_word(&w)
                            .with_functional(&f)
                    });
                }
            }
        }
    }
    Ok(())
}

/// Closed-form root counts and singular-set sizes, and `rank = |S(alpha)|`.
fn dimension_formulas(config: &SuiteConfig, report: &mut OracleReport) -> Result<()> {
    for kind in config.kinds() {
        for n in config.ranks(kind, Suite::DimensionFormulas.default_max_n()) {
            report.n.push(n);
            let system = RootSystem::shared(kind, n)?;
            let expected_count = match kind {
                RootSystemKind::A => n * (n - 1) / 2,
                RootSystemKind::B => n * n,
                RootSystemKind::D => n * n - n,
            };
            report.check(system.len() == expected_count, || {
                Counterexample::new(config.seed, &system, format!("{} positive roots", system.len()))
            });
            for alpha in config.alphas(&system) {
                let s = orbits::singular_set(&system, alpha)?.singular.len();
                let closed = singular_closed_form(kind, n, alpha);
                report.check(s == closed, || {
                    Counterexample::new(config.seed, &system, format!("|S| = {s}, closed form {closed}"))
                        .input("alpha", alpha)
                });
                for c in config.scalars() {
                    let f = Functional::basis(system.clone(), alpha, c.clone())?;
                    let dim = f.orbit_dimension();
                    report.check(dim == s, || {
                        Counterexample::new(config.seed, &system, format!("rank {dim}, |S| = {s}"))
                            .input("alpha", alpha)
                            .input("c", rational::format(&c))
                            .with_functional(&f)
                    });
                }
            }
        }
    }
    Ok(())
}

fn singular_closed_form(kind: RootSystemKind, n: usize, alpha: PositiveRoot) -> usize {
    match (kind, alpha) {
        (_, PositiveRoot::Diff(i, j)) => 2 * (j - i - 1),
        (_, PositiveRoot::Short(i)) => 2 * (n - i),
        (RootSystemKind::B, PositiveRoot::Sum(i, j)) => 2 * (2 * n - i - j),
        (_, PositiveRoot::Sum(i, j)) => 2 * (2 * n - i - j - 1),
    }
}

/// `decompose(w . sum phi(alpha) e_alpha^*) = (D, phi)` for random triples.
fn decompose_roundtrip(config: &SuiteConfig, report: &mut OracleReport) -> Result<()> {
    let trials = config.trials.unwrap_or(200);
    let mut sampler = Sampler::new(config.seed);
    for n in type_a_ranks(config, Suite::DecomposeRoundtrip)? {
        report.n.push(n);
        let system = RootSystem::shared(RootSystemKind::A, n)?;
        let subsets: Vec<BasicSubset> = basic::enumerate_basic_subsets(n)?.collect();
        for _ in 0..trials {
            let d = &subsets[sampler.index(subsets.len())];
            let map = sampler.basic_map(d);
            let word = sampler.word(&system, default_word_length(&system));
            let f = coadjoint_apply(&word, &d.basic_functional(&system, &map)?)?;
            let outcome = basic::decompose(&f);
            let ok = matches!(&outcome, Ok(res) if res.subset == *d && res.map == map);
            report.check(ok, || {
                let detail = match &outcome {
                    Ok(res) => format!("recovered {} instead", res.subset),
                    Err(e) => e.to_string(),
                };
                let mut ce = Counterexample::new(config.seed, &system, detail)
                    .input("subset", d)
                    .with_word(&word)
                    .with_functional(&f);
                for (r, v) in map.iter() {
                    ce = ce.input(&format!("phi({r})"), rational::format(v));
                }
                ce
            });
        }
    }
    Ok(())
}

/// `dim(sum phi e_alpha^*) = s(D)` exactly when `D'` is empty, for every basic `D`.
fn single_orbit_scan(config: &SuiteConfig, report: &mut OracleReport) -> Result<()> {
    let random_maps = config.trials.unwrap_or(20);
    let mut sampler = Sampler::new(config.seed);
    for n in type_a_ranks(config, Suite::SingleOrbitScan)? {
        report.n.push(n);
        let system = RootSystem::shared(RootSystemKind::A, n)?;
        for d in basic::enumerate_basic_subsets(n)? {
            let single = basic::is_single_orbit(&d);
            let s = d.s();
            let mut maps = vec![BasicMap::ones(&d)];
            maps.extend((0..random_maps).map(|_| sampler.basic_map(&d)));
            for map in maps {
                let f = d.basic_functional(&system, &map)?;
                let dim = f.orbit_dimension();
                report.check(dim <= s && (dim == s) == single, || {
                    Counterexample::new(
                        config.seed,
                        &system,
                        format!("dim {dim}, s(D) = {s}, single orbit {single}"),
                    )
                    .input("subset", &d)
                    .with_functional(&f)
                });
            }
        }
    }
    Ok(())
}

/// Support on a root `e_r - e_s` with `s - r > 2` forces dimension at least 4,
/// and two-dimensional orbit points come from basic subsets with `s(D)` in `{2, 3}`.
fn two_dim_support(config: &SuiteConfig, report: &mut OracleReport) -> Result<()> {
    let trials = config.trials.unwrap_or(100);
    let mut sampler = Sampler::new(config.seed);
    let mut two_dim_seen = 0usize;
    for n in type_a_ranks(config, Suite::TwoDimSupport)? {
        report.n.push(n);
        let system = RootSystem::shared(RootSystemKind::A, n)?;
        let long: Vec<PositiveRoot> = system
            .roots()
            .iter()
            .copied()
            .filter(|r| matches!(r, PositiveRoot::Diff(i, j) if j - i > 2))
            .collect();
        if !long.is_empty() {
            for _ in 0..trials {
                let mut values = sampler.functional(&system).values().to_vec();
                let root = long[sampler.index(long.len())];
                values[system.require(root)?] = sampler.param();
                let f = Functional::from_dense(system.clone(), values)?;
                let dim = f.orbit_dimension();
                report.check(dim >= 4, || {
                    Counterexample::new(config.seed, &system, format!("dimension {dim}"))
                        .input("long_root", root)
                        .with_functional(&f)
                });
            }
        }
        let subsets: Vec<BasicSubset> = basic::enumerate_basic_subsets(n)?
            .filter(|d| d.s() <= 4)
            .collect();
        for _ in 0..trials {
            let d = &subsets[sampler.index(subsets.len())];
            let map = sampler.basic_map(d);
            let word = sampler.word(&system, default_word_length(&system));
            let f = coadjoint_apply(&word, &d.basic_functional(&system, &map)?)?;
            if f.orbit_dimension() != 2 {
                continue;
            }
            two_dim_seen += 1;
            let s = basic::decompose(&f)?.subset.s();
            report.check((2..=3).contains(&s), || {
                Counterexample::new(config.seed, &system, format!("two-dimensional orbit with s(D) = {s}"))
                    .input("subset", d)
                    .with_word(&word)
                    .with_functional(&f)
            });
        }
    }
    report
        .observations
        .insert("two_dimensional_samples".to_string(), two_dim_seen.to_string());
    Ok(())
}

/// Exhaustive scan of `{s(D) : D' empty}` and `max s(D)`, plus the witness families.
fn achievable_dims(config: &SuiteConfig, report: &mut OracleReport) -> Result<()> {
    for n in type_a_ranks(config, Suite::AchievableDims)? {
        report.n.push(n);
        let system = RootSystem::shared(RootSystemKind::A, n)?;
        let mut single = BTreeSet::new();
        let mut max_s = 0;
        for d in basic::enumerate_basic_subsets(n)? {
            let s = d.s();
            max_s = max_s.max(s);
            if basic::is_single_orbit(&d) {
                single.insert(s);
            }
        }
        let expected: BTreeSet<usize> = basic::achievable_dimensions(n)?.into_iter().collect();
        let render = |set: &BTreeSet<usize>| {
            set.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
        };
        report.observations.insert(format!("n={n}"), render(&single));
        report.check(single == expected, || {
            Counterexample::new(config.seed, &system, format!("scan gave {}", render(&single)))
        });
        let max_dim = basic::max_dimension(n)?;
        report.check(max_s == max_dim, || {
            Counterexample::new(config.seed, &system, format!("max s(D) = {max_s}, expected {max_dim}"))
        });
        let witness = basic::max_singular_witness(n)?;
        report.check(witness.s() == max_s, || {
            Counterexample::new(config.seed, &system, "nested witness is not maximal").input("subset", &witness)
        });
        for (m, d) in basic::witness_basic_subsets(n)? {
            report.check(d.s() == 2 * m && basic::is_single_orbit(&d), || {
                Counterexample::new(config.seed, &system, format!("witness for m = {m} fails"))
                    .input("subset", &d)
            });
        }
    }
    Ok(())
}
