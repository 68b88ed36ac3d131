//! Job orchestration and the machine-readable report.

pub mod cache;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{format_rational, IntPoly, PowerSeriesPrefix, RatFunc};
use crate::arrangement::{faces, io, Arrangement, FaceLattice, IntersectionLattice, TopeGraph};
use crate::error::{Error, Result};
use crate::homology::checks::{four_cut_min, shifted_interior_pairs};
use crate::homology::{
    conjecture_probes, fitted_length, magnitude_homology, run_checks, BettiTable, CheckInputs, CheckMap, CheckStatus,
    ConjectureReport, HomologyOptions, HomologyResult, DEFAULT_BUDGET,
};
use crate::magnitude::{
    check_varchenko_det, magnitude_by_face_decomposition, magnitude_direct, rank3_magnitude, uniform_magnitude,
    MagnitudeResult, Rank3Stats, SolveStrategy,
};
use cache::{CacheOutcome, LatticeCache};

pub const SCHEMA_VERSION: u32 = 1;
/// Series coefficients reported by default, `c_0..=c_10`.
pub const DEFAULT_SERIES_ORDER: usize = 10;
/// Above this many chambers the Varchenko determinant runs only on request.
pub const DET_CHECK_LIMIT: usize = 32;
/// Above this many chambers the 4-cut search is skipped.
pub const FOUR_CUT_LIMIT: usize = 130;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Lattice,
    Mag,
    Homology,
    Conjectures,
    Verify,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub source: String,
    pub tasks: BTreeSet<Task>,
    pub max_length: Option<usize>,
    pub series_order: usize,
    pub budget: u64,
    pub det_check: bool,
    pub face_check: bool,
    pub geodesic_check: bool,
    pub cache_dir: Option<PathBuf>,
    /// Wall-clock timings make the output nondeterministic, so they are opt-in.
    pub timings: bool,
}

impl JobSpec {
    pub fn new(source: impl Into<String>, tasks: impl IntoIterator<Item = Task>) -> Self {
        JobSpec {
            source: source.into(),
            tasks: tasks.into_iter().collect(),
            max_length: None,
            series_order: DEFAULT_SERIES_ORDER,
            budget: DEFAULT_BUDGET,
            det_check: false,
            face_check: true,
            geodesic_check: true,
            cache_dir: None,
            timings: false,
        }
    }

    fn wants(&self, t: Task) -> bool {
        self.tasks.contains(&t)
    }

    fn needs_homology(&self) -> bool {
        self.wants(Task::Homology) || self.wants(Task::Conjectures) || self.wants(Task::Verify)
    }

    fn needs_magnitude(&self) -> bool {
        self.wants(Task::Mag) || self.wants(Task::Conjectures) || self.wants(Task::Verify)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Stage { stage: "job".into(), message: m.into() });
        if self.tasks.is_empty() {
            return bad("no task given");
        }
        if self.max_length.is_some() && !self.needs_homology() {
            return bad("a length cap only applies to homology, conjectures or verify");
        }
        if self.det_check && !self.needs_magnitude() {
            return bad("the determinant check needs the mag or verify task");
        }
        Ok(())
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyDoc(pub Vec<String>);

impl From<&IntPoly> for PolyDoc {
    fn from(p: &IntPoly) -> Self {
        PolyDoc(strings(p.coeffs()))
    }
}

/// Ascending coefficient lists.
#[derive(Clone, Debug, Serialize)]
pub struct RatFuncDoc {
    pub num: PolyDoc,
    pub den: PolyDoc,
}

impl From<&RatFunc> for RatFuncDoc {
    fn from(f: &RatFunc) -> Self {
        RatFuncDoc { num: f.num().into(), den: f.den().into() }
    }
}

fn series_doc(s: &PowerSeriesPrefix) -> Vec<String> {
    s.rationals().iter().map(format_rational).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementSummary {
    pub dimension: usize,
    pub hyperplanes: usize,
    pub rank: usize,
    pub essential: bool,
    pub chambers: usize,
    pub labels: Vec<String>,
    pub normals: Vec<Vec<String>>,
    /// `chi(A, t)`, ascending.
    pub characteristic_polynomial: PolyDoc,
    pub canonical_hash: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatDoc {
    pub id: usize,
    pub rank: usize,
    pub hyperplanes: Vec<usize>,
    pub mobius: i64,
    pub c_upper: u64,
    pub c_lower: u64,
    pub beta: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeSection {
    pub flats_by_rank: Vec<usize>,
    pub faces: u64,
    /// Rank-2 flats: `#A_X -> sum c^X`.
    pub rank2_counts: BTreeMap<usize, u64>,
    pub flats: Vec<FlatDoc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MagnitudeSection {
    pub mag: RatFuncDoc,
    pub interior: RatFuncDoc,
    pub display: String,
    pub series: Vec<String>,
    pub interior_series: Vec<String>,
    /// `[k, multiplicity]` for each `Phi_k` in the denominator.
    pub cyclotomic: Vec<[u64; 2]>,
    pub varchenko_determinant: Option<PolyDoc>,
    pub checks: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainCount {
    pub k: usize,
    pub l: usize,
    pub count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologySection {
    pub max_length: usize,
    pub budget: u64,
    pub blocks: usize,
    pub table: BettiTable,
    pub interior: BettiTable,
    pub geodesic: BettiTable,
    pub euler: Vec<i64>,
    pub interior_euler: Vec<i64>,
    pub chain_counts: Vec<ChainCount>,
    /// `null` when not searched, `"infinity"` when there is no 4-cut.
    pub four_cut_min: serde_json::Value,
    /// `[k, l, beta_{k,l}, beta°_{k+r,l+n}]`.
    pub shifted_interior: Vec<[u64; 4]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportBundle {
    pub schema_version: u32,
    pub source: String,
    pub tasks: Vec<Task>,
    pub arrangement: ArrangementSummary,
    pub lattice: Option<LatticeSection>,
    pub magnitude: Option<MagnitudeSection>,
    pub homology: Option<HomologySection>,
    pub conjectures: Option<ConjectureReport>,
    pub checks: CheckMap,
    pub timings: Option<BTreeMap<String, f64>>,
    #[serde(skip)]
    pub betti: Option<HomologyResult>,
    #[serde(skip)]
    pub mag_result: Option<MagnitudeResult>,
}

impl ReportBundle {
    pub fn failed_checks(&self) -> Vec<(&str, &str)> {
        self.checks
            .iter()
            .filter_map(|(k, v)| match v {
                CheckStatus::Fail(d) => Some((k.as_str(), d.as_str())),
                _ => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn status(ok: bool, detail: impl FnOnce() -> String) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(detail())
    }
}

struct Timer {
    on: bool,
    laps: BTreeMap<String, f64>,
    t: Instant,
}

impl Timer {
    fn lap(&mut self, name: &str) {
        if self.on {
            self.laps.insert(name.into(), self.t.elapsed().as_secs_f64());
            self.t = Instant::now();
        }
    }
}

fn arrangement_checks(a: &Arrangement, g: &TopeGraph, l: &IntersectionLattice, full: bool, checks: &mut CheckMap) {
    let n = g.len();
    checks.insert(
        "arrangement.zaslavsky".into(),
        status(l.top().c_lower == n as u64, || format!("{} chambers, sum |mu| = {}", n, l.top().c_lower)),
    );
    checks.insert(
        "arrangement.faces_mobius".into(),
        status(l.flats().iter().all(|f| l.c_upper_mobius(f.id) == f.c_upper), || {
            "geometric c^X differs from the Möbius count".into()
        }),
    );
    checks.insert("arrangement.isometric".into(), status(g.is_isometric(), || "tope graph is not a partial cube".into()));
    checks.insert("arrangement.antipodal".into(), status(g.antipodal_ok(), || "antipodal map fails".into()));
    if full {
        let faces = FaceLattice::build(a, l);
        let v = faces::gate_identity_violation(g, &faces);
        checks.insert(
            "arrangement.gates".into(),
            status(v.is_none(), || format!("gate identity fails at {:?}", v.unwrap())),
        );
        checks.insert(
            "arrangement.face_count".into(),
            status(faces.len() as u64 == l.face_count(), || {
                format!("{} faces enumerated, {} from the lattice", faces.len(), l.face_count())
            }),
        );
    }
}

fn magnitude_checks(job: &JobSpec, g: &TopeGraph, l: &IntersectionLattice, m: &MagnitudeResult, checks: &mut CheckMap) -> Option<IntPoly> {
    for (k, &v) in &m.checks {
        checks.insert(format!("magnitude.{k}"), status(v, || "identity fails".into()));
    }
    if job.face_check {
        let fd = magnitude_by_face_decomposition(l);
        checks.insert(
            "magnitude.face_decomposition".into(),
            status(fd == m.mag, || format!("face decomposition gives {fd}")),
        );
    }
    if let Some(stats) = Rank3Stats::from_lattice(l) {
        let r3 = rank3_magnitude(&stats);
        checks.insert("magnitude.rank3_formula".into(), status(r3 == m.mag, || format!("rank-3 formula gives {r3}")));
    }
    if let Some(u) = uniform_magnitude(g) {
        checks.insert(
            "magnitude.uniform_generating".into(),
            status(u == m.mag, || format!("#Ch / D gives {u}")),
        );
    }
    let det_wanted = job.det_check || (job.wants(Task::Verify) && g.len() <= DET_CHECK_LIMIT);
    if det_wanted {
        match check_varchenko_det(g, l) {
            Ok(d) => {
                checks.insert("magnitude.varchenko_det".into(), CheckStatus::Pass);
                return Some(d);
            }
            Err(e) => {
                checks.insert("magnitude.varchenko_det".into(), CheckStatus::Fail(e.detail));
            }
        }
    } else if job.wants(Task::Verify) {
        checks.insert(
            "magnitude.varchenko_det".into(),
            CheckStatus::Skipped(format!("more than {DET_CHECK_LIMIT} chambers; pass --det-check")),
        );
    }
    None
}

pub fn load_structures(a: &Arrangement, cache_dir: Option<&std::path::Path>) -> Result<(TopeGraph, IntersectionLattice)> {
    match LatticeCache::resolve(cache_dir) {
        Some(cache) => {
            let (g, l, outcome) = cache.get_or_compute(a)?;
            if outcome == CacheOutcome::Hit {
                log::info!("lattice loaded from {}", cache.path_for(a).display());
            }
            Ok((g, l))
        }
        None => Ok((TopeGraph::enumerate(a), IntersectionLattice::build(a))),
    }
}

/// Runs the tasks in dependency order: lattice, magnitude, homology, checks.
pub fn run(job: &JobSpec) -> Result<ReportBundle> {
    job.validate()?;
    let mut timer = Timer { on: job.timings, laps: BTreeMap::new(), t: Instant::now() };
    let a = io::load_source(&job.source)?;
    let (g, l) = load_structures(&a, job.cache_dir.as_deref())?;
    timer.lap("lattice");
    let verify = job.wants(Task::Verify);
    let mut checks = CheckMap::new();
    arrangement_checks(&a, &g, &l, verify, &mut checks);

    let arrangement = ArrangementSummary {
        dimension: a.dim(),
        hyperplanes: a.len(),
        rank: a.rank(),
        essential: a.is_essential(),
        chambers: g.len(),
        labels: a.labels().to_vec(),
        normals: a.normals().iter().map(|r| strings(r)).collect(),
        characteristic_polynomial: (&l.characteristic_polynomial()).into(),
        canonical_hash: a.canonical_hash(),
    };
    let lattice = (job.wants(Task::Lattice) || verify).then(|| LatticeSection {
        flats_by_rank: (0..=l.rank()).map(|k| l.of_rank(k).count()).collect(),
        faces: l.face_count(),
        rank2_counts: l.rank2_counts(),
        flats: l
            .flats()
            .iter()
            .map(|f| FlatDoc {
                id: f.id,
                rank: f.rank,
                hyperplanes: (0..a.len()).filter(|i| f.hyperplanes >> i & 1 == 1).collect(),
                mobius: f.mobius,
                c_upper: f.c_upper,
                c_lower: f.c_lower,
                beta: f.beta,
            })
            .collect(),
    });

    let lmax = match job.max_length {
        Some(l) => l,
        None if job.needs_homology() => fitted_length(&g, job.budget),
        None => 0,
    };
    let mag_result = if job.needs_magnitude() {
        let order = job.series_order.max(if job.needs_homology() { lmax } else { 0 });
        Some(magnitude_direct(&a, &g, order, SolveStrategy::Auto)?)
    } else {
        None
    };
    let magnitude = mag_result.as_ref().map(|m| {
        let det = magnitude_checks(job, &g, &l, m, &mut checks);
        MagnitudeSection {
            mag: (&m.mag).into(),
            interior: (&m.interior).into(),
            display: m.mag.to_string(),
            series: series_doc(&m.series),
            interior_series: series_doc(&m.interior_series),
            cyclotomic: m.cyclotomic.as_pairs(),
            varchenko_determinant: det.as_ref().map(Into::into),
            checks: m.checks.clone(),
        }
    });
    timer.lap("magnitude");

    let betti = if job.needs_homology() {
        let mut opts = HomologyOptions::new(lmax);
        opts.budget = job.budget;
        opts.check_d2 = true;
        Some(magnitude_homology(&g, &l, &opts).map_err(|e| match e {
            Error::Budget { .. } | Error::Stage { .. } => e,
            other => Error::Stage { stage: "homology".into(), message: other.to_string() },
        })?)
    } else {
        None
    };
    timer.lap("homology");
    let homology = match &betti {
        Some(r) => {
            let hc = run_checks(&CheckInputs {
                arrangement: &a,
                graph: &g,
                lattice: &l,
                result: r,
                series: mag_result.as_ref().map(|m| &m.series),
                interior_series: mag_result.as_ref().map(|m| &m.interior_series),
                face_check: job.face_check,
                geodesic_check: job.geodesic_check,
                budget: job.budget,
            })?;
            for (k, v) in hc {
                checks.insert(format!("homology.{k}"), v);
            }
            let four_cut = if g.len() <= FOUR_CUT_LIMIT {
                match four_cut_min(&g) {
                    Some(m) => serde_json::Value::from(m),
                    None => serde_json::Value::from("infinity"),
                }
            } else {
                serde_json::Value::Null
            };
            Some(HomologySection {
                max_length: lmax,
                budget: job.budget,
                blocks: r.blocks,
                table: r.table.clone(),
                interior: r.interior.clone(),
                geodesic: r.geodesic.clone(),
                euler: r.table.euler_row(),
                interior_euler: r.interior.euler_row(),
                chain_counts: r.chain_counts.iter().map(|(&(k, l), &count)| ChainCount { k, l, count }).collect(),
                four_cut_min: four_cut,
                shifted_interior: shifted_interior_pairs(r, l.rank(), a.len())
                    .into_iter()
                    .map(|(k, l, b, bo)| [k as u64, l as u64, b, bo])
                    .collect(),
            })
        }
        None => None,
    };
    timer.lap("checks");

    let conjectures = (job.wants(Task::Conjectures) || verify)
        .then(|| conjecture_probes(&g, &l, mag_result.as_ref(), betti.as_ref()));

    Ok(ReportBundle {
        schema_version: SCHEMA_VERSION,
        source: job.source.clone(),
        tasks: job.tasks.iter().copied().collect(),
        arrangement,
        lattice,
        magnitude,
        homology,
        conjectures,
        checks,
        timings: job.timings.then_some(timer.laps),
        betti,
        mag_result,
    })
}

/// Human-readable summary.
pub fn render_text(r: &ReportBundle) -> String {
    let mut s = String::new();
    let a = &r.arrangement;
    writeln!(s, "{}: d = {}, n = {}, rank = {}, chambers = {}", r.source, a.dimension, a.hyperplanes, a.rank, a.chambers).unwrap();
    if let Some(lat) = &r.lattice {
        writeln!(s, "flats by rank: {:?}, faces: {}", lat.flats_by_rank, lat.faces).unwrap();
        if !lat.rank2_counts.is_empty() {
            writeln!(s, "rank-2 flats (#A_X: sum c^X): {:?}", lat.rank2_counts).unwrap();
        }
    }
    if let (Some(m), Some(mr)) = (&r.magnitude, &r.mag_result) {
        writeln!(s, "Mag = {}", mr.mag).unwrap();
        let pairs: Vec<String> = m.cyclotomic.iter().map(|[k, e]| if *e == 1 { format!("Phi_{k}") } else { format!("Phi_{k}^{e}") }).collect();
        writeln!(s, "denominator = {}", pairs.join(" ")).unwrap();
        writeln!(s, "series: {}", m.series.join(", ")).unwrap();
    }
    if let Some(h) = &r.homology {
        writeln!(s, "magnitude Betti numbers (rows k, columns l):").unwrap();
        s.push_str(&h.table.to_tsv());
        writeln!(s, "interior:").unwrap();
        s.push_str(&h.interior.to_tsv());
    }
    if let Some(c) = &r.conjectures {
        let verdict = if c.any_counterexample() { "COUNTEREXAMPLE FOUND" } else { "no counterexample found" };
        writeln!(s, "conjecture probes: {verdict}").unwrap();
    }
    let failed = r.failed_checks();
    let passed = r.checks.values().filter(|v| **v == CheckStatus::Pass).count();
    let skipped = r.checks.values().filter(|v| matches!(v, CheckStatus::Skipped(_))).count();
    writeln!(s, "checks: {passed} passed, {} failed, {skipped} skipped", failed.len()).unwrap();
    for (k, d) in failed {
        writeln!(s, "  FAIL {k}: {d}").unwrap();
    }
    s
}
