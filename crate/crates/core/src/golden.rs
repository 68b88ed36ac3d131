//! Reference Betti tables shipped with the crate.

use crate::algebra::{cyclotomic, IntPoly, RatFunc};
use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Serialize;

use crate::arrangement::{io, Arrangement, IntersectionLattice, TopeGraph};
use crate::error::Result;
use crate::homology::{magnitude_homology, BettiTable, CheckStatus, HomologyOptions, DEFAULT_BUDGET};
use crate::magnitude::{magnitude_direct, SolveStrategy};

pub struct GoldenTable {
    pub name: &'static str,
    /// Catalog name of the arrangement, or `None` when normals must be supplied.
    pub source: Option<&'static str>,
    pub max_length: usize,
    /// Chain budget per length needed to reach `max_length`.
    pub budget: u64,
    pub tsv: &'static str,
}

impl GoldenTable {
    pub fn table(&self) -> BettiTable {
        BettiTable::from_tsv(self.tsv).expect("shipped table parses")
    }
}

pub const TABLES: &[GoldenTable] = &[
    GoldenTable { name: "bl2", source: Some("boolean:2"), max_length: 8, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/bl2.tsv") },
    GoldenTable { name: "a2", source: Some("braid:3"), max_length: 8, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/a2.tsv") },
    GoldenTable { name: "b2", source: Some("coxeter:B2"), max_length: 8, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/b2.tsv") },
    GoldenTable { name: "a3", source: Some("braid:4"), max_length: 8, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/a3.tsv") },
    GoldenTable { name: "u34", source: Some("u34"), max_length: 8, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/u34.tsv") },
    GoldenTable { name: "k4me", source: Some("k4me"), max_length: 8, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/k4me.tsv") },
    GoldenTable { name: "a4", source: Some("braid:5"), max_length: 6, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/a4.tsv") },
    GoldenTable { name: "u45", source: Some("u45"), max_length: 6, budget: DEFAULT_BUDGET, tsv: include_str!("../golden/u45.tsv") },
    GoldenTable { name: "a7_1", source: None, max_length: 8, budget: 20_000_000, tsv: include_str!("../golden/a7_1.tsv") },
    GoldenTable { name: "a8_1", source: None, max_length: 8, budget: 20_000_000, tsv: include_str!("../golden/a8_1.tsv") },
    GoldenTable { name: "a9_1", source: Some("coxeter:B3"), max_length: 8, budget: 20_000_000, tsv: include_str!("../golden/a9_1.tsv") },
];

pub fn find(name: &str) -> Option<&'static GoldenTable> {
    TABLES.iter().find(|t| t.name == name)
}

/// Reference magnitude: numerator coefficients (ascending), the
/// denominator as cyclotomic factors `(k, multiplicity)`, and a series prefix.
pub struct GoldenMagnitude {
    pub name: &'static str,
    pub source: Option<&'static str>,
    pub num: &'static [i64],
    pub den: &'static [(usize, u32)],
    pub series: &'static [i64],
}

impl GoldenMagnitude {
    pub fn ratfunc(&self) -> RatFunc {
        let den = self.den.iter().fold(IntPoly::one(), |acc, &(k, m)| &acc * &cyclotomic(k).pow(m));
        RatFunc::reduce(IntPoly::from_i64(self.num), den).expect("nonzero denominator")
    }
}

macro_rules! mag {
    ($name:expr, $src:expr, [$($n:expr),*], [$($d:expr),*], [$($s:expr),*]) => {
        GoldenMagnitude { name: $name, source: $src, num: &[$($n),*], den: &[$($d),*], series: &[$($s),*] }
    };
}

pub const MAGNITUDES: &[GoldenMagnitude] = &[
    mag!("bl1", Some("boolean:1"), [2], [(2, 1)], []),
    mag!("bl2", Some("boolean:2"), [4], [(2, 2)], []),
    mag!("bl3", Some("boolean:3"), [8], [(2, 3)], []),
    mag!("bl4", Some("boolean:4"), [16], [(2, 4)], []),
    mag!("a4_0", Some("nearpencil:4"), [12], [(2, 2), (3, 1)], []),
    mag!("a5_0", Some("nearpencil:5"), [16], [(2, 3), (4, 1)], []),
    mag!("a6_1", Some("braid:4"), [24], [(2, 2), (3, 1), (4, 1)],
        [24, -72, 96, -72, 48, -72, 120, -144, 144, -144, 144]),
    mag!("a9_1", Some("coxeter:B3"), [48], [(2, 3), (3, 1), (4, 1), (6, 1)],
        [48, -144, 192, -192, 240, -336, 432, -528, 624, -720, 816]),
    mag!("u34", Some("u34"), [14, -20, 14], [(2, 2), (8, 1)],
        [14, -48, 96, -144, 178, -192, 192, -192, 206, -240, 288]),
    mag!("k4me", Some("k4me"), [18, -2, -8, -2, 18], [(2, 3), (3, 1), (10, 1)],
        [18, -56, 88, -96, 104, -154, 248, -336, 376, -392, 450]),
    mag!("k5me", Some("k5me"), [96, -108, 48, 36, 0, 36, 48, -108, 96], [(2, 3), (3, 1), (4, 1), (9, 1), (10, 1)],
        [96, -396, 756, -924, 996, -1320, 1956, -2652, 3252, -3756, 4212]),
    mag!("bracelet", Some("bracelet"), [102, -24, -48, -54, 264, -54, -48, -24, 102], [(2, 3), (3, 2), (9, 1), (10, 1)],
        [102, -432, 864, -1176, 1584, -2628, 4344, -6048, 7200, -8130, 9684]),
    mag!("a7_1", None, [32, 0, -40, 0, 32], [(2, 3), (3, 1), (14, 1)],
        [32, -96, 120, -72, 24, -48, 144, -272, 360, -336, 240]),
    mag!("a8_1", None, [40, 0, -8, -16, -8, 0, 40], [(2, 2), (3, 1), (4, 1), (16, 1)],
        [40, -120, 152, -112, 88, -136, 240, -344, 352, -248, 176]),
    mag!("a10_1", None, [60, 60, -20, -40, 0, -40, -20, 60, 60], [(2, 2), (3, 1), (4, 1), (5, 1), (20, 1)],
        [60, -180, 220, -140, 60, -80, 220, -380, 420, -340, 220]),
    mag!("a10_2", None, [60, 0, -12, -48, -12, 0, 60], [(2, 2), (3, 1), (4, 2), (20, 1)],
        [60, -180, 228, -192, 204, -300, 432, -564, 660, -672, 576]),
    mag!("a10_3", None, [60, 0, -12, -48, -12, 0, 60], [(2, 2), (3, 1), (4, 2), (20, 1)],
        [60, -180, 228, -192, 204, -300, 432, -564, 660, -672, 576]),
    mag!("a11_1", None, [72, 0, -16, -64, -16, 0, 72], [(2, 3), (3, 1), (4, 1), (22, 1)],
        [72, -216, 272, -232, 256, -376, 528, -680, 800, -824, 784]),
    mag!("a12_1", None, [84, -84, -36, 96, -36, -84, 84], [(2, 2), (3, 1), (6, 1), (8, 1), (24, 1)],
        [84, -252, 300, -168, 36, -84, 336, -588, 636, -504, 372]),
    mag!("a12_2", None, [84, 84, 64, -4, -44, -128, -44, -4, 64, 84, 84], [(2, 2), (3, 1), (4, 1), (5, 1), (8, 1), (24, 1)],
        [84, -252, 316, -260, 252, -344, 508, -692, 804, -796, 760]),
    mag!("a12_3", None, [84, 0, -12, -96, -12, 0, 84], [(2, 2), (3, 1), (4, 1), (8, 1), (24, 1)],
        [84, -252, 324, -312, 396, -564, 720, -876, 1044, -1128, 1116]),
    mag!("a13_1", None, [96, -96, 72, -48, 0, -48, 72, -96, 96], [(2, 3), (3, 1), (4, 1), (6, 1), (26, 1)],
        [96, -288, 360, -288, 264, -384, 624, -864, 984, -960, 888]),
    mag!("a13_2", None, [96, 0, 0, -144, 0, 0, 96], [(2, 3), (3, 1), (4, 1), (26, 1)],
        [96, -288, 384, -432, 624, -864, 1008, -1152, 1392, -1584, 1632]),
    mag!("a13_3", None, [96, 96, 80, -8, -64, -160, -64, -8, 80, 96, 96], [(2, 3), (3, 1), (4, 1), (5, 1), (26, 1)],
        [96, -288, 368, -328, 336, -424, 584, -784, 912, -920, 920]),
    mag!("a13_4", None, [104, 0, -56, -48, -56, 0, 104], [(2, 3), (3, 1), (4, 1), (26, 1)],
        [104, -312, 360, -192, 72, -168, 432, -696, 792, -672, 504]),
];

pub fn find_magnitude(name: &str) -> Option<&'static GoldenMagnitude> {
    MAGNITUDES.iter().find(|m| m.name == name)
}

/// Series coefficients compared for every magnitude fixture.
pub const SERIES_TERMS: usize = 11;

#[derive(Clone, Debug, Serialize)]
pub struct GoldenOutcome {
    pub name: String,
    pub kind: &'static str,
    pub status: CheckStatus,
}

pub fn verify_magnitude(m: &GoldenMagnitude, a: &Arrangement) -> Result<CheckStatus> {
    let g = TopeGraph::enumerate(a);
    let r = magnitude_direct(a, &g, SERIES_TERMS - 1, SolveStrategy::Auto)?;
    let want = m.ratfunc();
    let mut diffs = Vec::new();
    if r.mag != want {
        diffs.push(format!("magnitude {} vs {}", r.mag, want));
    }
    let want_series = if m.series.is_empty() {
        want.series(SERIES_TERMS - 1)?.to_i128()
    } else {
        m.series.iter().map(|&c| c as i128).collect()
    };
    let got = r.series.to_i128();
    for (l, (x, y)) in got.iter().zip(&want_series).enumerate() {
        if x != y {
            diffs.push(format!("c_{l}: {x} vs {y}"));
        }
    }
    Ok(if diffs.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail(diffs.join("; ")) })
}

pub fn verify_table(t: &GoldenTable, a: &Arrangement) -> Result<CheckStatus> {
    let g = TopeGraph::enumerate(a);
    let l = IntersectionLattice::build(a);
    let mut opts = HomologyOptions::new(t.max_length);
    opts.budget = t.budget;
    let r = magnitude_homology(&g, &l, &opts)?;
    let want = t.table();
    let mut diffs = Vec::new();
    for k in 0..=t.max_length {
        for ll in 0..=t.max_length {
            let (x, y) = (r.table.get(k, ll), want.get(k, ll));
            if x != y {
                diffs.push(format!("({k},{ll}): {} vs {}", x.free_rank, y.free_rank));
            }
        }
    }
    for (k, ll, tors) in r.table.torsion_cells() {
        diffs.push(format!("torsion {tors:?} at ({k},{ll})"));
    }
    Ok(if diffs.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail(diffs.join("; ")) })
}

/// Runs every fixture that has a catalog source or a supplied normals file.
/// `only` restricts to the named fixtures.
pub fn verify_all(normals: &BTreeMap<String, PathBuf>, only: &[String]) -> Result<Vec<GoldenOutcome>> {
    let selected = |name: &str| only.is_empty() || only.iter().any(|o| o == name);
    let arrangement = |name: &str, source: Option<&str>| -> Result<Option<Arrangement>> {
        match (normals.get(name), source) {
            (Some(path), _) => Ok(Some(io::load_source(&path.to_string_lossy())?)),
            (None, Some(src)) => Ok(Some(io::load_source(src)?)),
            (None, None) => Ok(None),
        }
    };
    let mut out = Vec::new();
    for m in MAGNITUDES.iter().filter(|m| selected(m.name)) {
        let status = match arrangement(m.name, m.source)? {
            Some(a) => verify_magnitude(m, &a)?,
            None => CheckStatus::Skipped("needs a normals file".into()),
        };
        out.push(GoldenOutcome { name: m.name.into(), kind: "magnitude", status });
    }
    for t in TABLES.iter().filter(|t| selected(t.name)) {
        let status = match arrangement(t.name, t.source)? {
            Some(a) => verify_table(t, &a)?,
            None => CheckStatus::Skipped("needs a normals file".into()),
        };
        out.push(GoldenOutcome { name: t.name.into(), kind: "betti", status });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn shipped_tables_parse() {
        for t in TABLES {
            let b = t.table();
            assert_eq!(b.max_length, t.max_length, "{}", t.name);
            assert!(b.is_torsion_free());
        }
    }

    #[test]
    fn rational_functions_match_their_series() {
        for m in MAGNITUDES.iter().filter(|m| !m.series.is_empty()) {
            let s = m.ratfunc().series(m.series.len() - 1).unwrap().integers().unwrap();
            let want: Vec<BigInt> = m.series.iter().map(|&c| c.into()).collect();
            assert_eq!(s, want, "{}", m.name);
        }
    }
}
