//! Probes for the open conjectures on magnitude and magnitude homology.
//! Probes report; they never fail a run.

use serde::Serialize;

use super::engine::HomologyResult;
use crate::algebra::{cyclotomic, IntPoly};
use crate::arrangement::{IntersectionLattice, TopeGraph};
use crate::magnitude::probes::{alternating_probe, uniform_check, AlternationReport};
use crate::magnitude::MagnitudeResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum ProbeStatus {
    NoCounterexample,
    Counterexample(String),
    /// The available data cannot decide the instance.
    Undecided(String),
    NotApplicable(String),
    NotAssessed,
}

impl ProbeStatus {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, ProbeStatus::Counterexample(_))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclotomicProbe {
    /// `2n` for odd rank, `n` for even rank.
    pub index: usize,
    pub divides_denominator: bool,
    /// Every chamber has the same `D_{A,B}`; necessary for vertex-transitivity.
    pub uniform_generating: bool,
    pub status: ProbeStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub rank: usize,
    pub hyperplanes: usize,
    pub cyclotomic: Option<CyclotomicProbe>,
    pub sign_pattern: Option<AlternationReport>,
    pub sign_status: ProbeStatus,
    pub lattice_determinacy: ProbeStatus,
    pub torsion_cells: Vec<(usize, usize, Vec<u64>)>,
    pub torsion_status: ProbeStatus,
    /// Nonzero beta invariant, i.e. not a direct sum.
    pub indecomposable: bool,
    pub beta_00: Option<u64>,
    pub beta_rn: Option<u64>,
    pub corner_status: ProbeStatus,
}

impl ConjectureReport {
    pub fn any_counterexample(&self) -> bool {
        [&self.sign_status, &self.torsion_status, &self.corner_status]
            .into_iter()
            .chain(self.cyclotomic.as_ref().map(|c| &c.status))
            .any(ProbeStatus::is_counterexample)
    }
}

fn cyclotomic_probe(rank: usize, n: usize, den: &IntPoly, g: &TopeGraph) -> Option<CyclotomicProbe> {
    let index = match rank {
        r if r >= 3 && r % 2 == 1 => 2 * n,
        r if r >= 4 && r % 2 == 0 => n,
        _ => return None,
    };
    let divides_denominator = den.div_exact(&cyclotomic(index)).is_some();
    let uniform_generating = uniform_check(g).is_some();
    // non-uniform D certifies non-transitivity; uniform D proves nothing
    let status = match (uniform_generating, divides_denominator) {
        (false, true) => ProbeStatus::NoCounterexample,
        (false, false) => ProbeStatus::Counterexample(format!(
            "tope graph is not vertex-transitive but Phi_{index} does not divide the denominator"
        )),
        (true, false) => ProbeStatus::NoCounterexample,
        (true, true) => ProbeStatus::Undecided(format!(
            "Phi_{index} divides the denominator and D is uniform; transitivity not tested"
        )),
    };
    Some(CyclotomicProbe { index, divides_denominator, uniform_generating, status })
}

pub fn conjecture_probes(
    g: &TopeGraph,
    lattice: &IntersectionLattice,
    magnitude: Option<&MagnitudeResult>,
    homology: Option<&HomologyResult>,
) -> ConjectureReport {
    let top = lattice.top();
    let (rank, n) = (top.rank, lattice.hyperplanes());
    let cyclotomic = magnitude.and_then(|m| cyclotomic_probe(rank, n, m.mag.den(), g));

    // The series usually reaches further than the table; both give chi_l.
    let chi: Option<Vec<i64>> = match (magnitude, homology) {
        (Some(m), _) => m.series.to_i128().iter().map(|&c| i64::try_from(c).ok()).collect(),
        (None, Some(h)) => Some(h.table.euler_row()),
        _ => None,
    };
    let sign_pattern = magnitude.map(|m| alternating_probe(&m.series));
    let sign_status = match &chi {
        None => ProbeStatus::NotApplicable("no series or table".into()),
        Some(chi) => {
            let half = chi.len().div_ceil(2);
            let bad: Vec<usize> = (half..chi.len()).filter(|&l| if l % 2 == 0 { chi[l] < 0 } else { chi[l] > 0 }).collect();
            if bad.is_empty() {
                ProbeStatus::NoCounterexample
            } else {
                ProbeStatus::Undecided(format!("(-1)^l chi_l < 0 late in the window at l = {bad:?}"))
            }
        }
    };

    let (torsion_cells, torsion_status) = match homology {
        Some(h) => {
            let cells = h.table.torsion_cells();
            let status = if cells.is_empty() {
                ProbeStatus::NoCounterexample
            } else {
                ProbeStatus::Counterexample(format!("torsion in {} cells", cells.len()))
            };
            (cells, status)
        }
        None => (Vec::new(), ProbeStatus::NotApplicable("no homology computed".into())),
    };

    let indecomposable = top.beta.is_some_and(|b| b != 0);
    let (beta_00, beta_rn, corner_status) = match homology {
        None => (None, None, ProbeStatus::NotApplicable("no homology computed".into())),
        Some(h) => {
            let b00 = h.table.beta(0, 0);
            if h.table.max_length < n {
                (Some(b00), None, ProbeStatus::NotApplicable(format!("needs length {n}")))
            } else {
                let brn = h.table.beta(rank, n);
                let status = if rank < 2 || !indecomposable {
                    ProbeStatus::NotApplicable("rank below 2 or decomposable".into())
                } else if b00 == brn {
                    ProbeStatus::NoCounterexample
                } else {
                    ProbeStatus::Counterexample(format!("beta_00 = {b00}, beta_({rank},{n}) = {brn}"))
                };
                (Some(b00), Some(brn), status)
            }
        }
    };

    ConjectureReport {
        rank,
        hyperplanes: n,
        cyclotomic,
        sign_pattern,
        sign_status,
        lattice_determinacy: ProbeStatus::NotAssessed,
        torsion_cells,
        torsion_status,
        indecomposable,
        beta_00,
        beta_rn,
        corner_status,
    }
}
