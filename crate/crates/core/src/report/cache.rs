//! On-disk cache of tope graphs and intersection lattices, keyed by the
//! canonical hash of the normals.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, Flat, IntersectionLattice, TopeGraph};
use crate::error::Result;

pub const CACHE_ENV: &str = "MAGARR_CACHE";
const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct FlatEntry {
    rank: usize,
    hyperplanes: u64,
    basis: Vec<Vec<String>>,
    mobius: i64,
    c_upper: u64,
    c_lower: u64,
    beta: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct ChamberEntry {
    mask: u64,
    witness: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: u32,
    hash: String,
    dimension: usize,
    normals: Vec<Vec<String>>,
    chambers: Vec<ChamberEntry>,
    flats: Vec<FlatEntry>,
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn ints(v: &[String]) -> Option<Vec<BigInt>> {
    v.iter().map(|s| s.parse().ok()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
    /// An unreadable or inconsistent entry was replaced.
    Replaced,
}

#[derive(Clone, Debug)]
pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        LatticeCache { dir: dir.into() }
    }

    /// The explicit directory if given, else `MAGARR_CACHE` if set.
    pub fn resolve(dir: Option<&Path>) -> Option<Self> {
        dir.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(LatticeCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, a: &Arrangement) -> PathBuf {
        self.dir.join(format!("{}.json", a.canonical_hash()))
    }

    pub fn serialize(a: &Arrangement, g: &TopeGraph, l: &IntersectionLattice) -> String {
        let entry = CacheEntry {
            version: CACHE_VERSION,
            hash: a.canonical_hash(),
            dimension: a.dim(),
            normals: a.normals().iter().map(|n| strings(n)).collect(),
            chambers: (0..g.len())
                .map(|i| ChamberEntry { mask: g.chamber(i), witness: strings(g.witness(i)) })
                .collect(),
            flats: l
                .flats()
                .iter()
                .map(|f| FlatEntry {
                    rank: f.rank,
                    hyperplanes: f.hyperplanes,
                    basis: f.basis.iter().map(|b| strings(b)).collect(),
                    mobius: f.mobius,
                    c_upper: f.c_upper,
                    c_lower: f.c_lower,
                    beta: f.beta,
                })
                .collect(),
        };
        serde_json::to_string(&entry).expect("cache entry serializes")
    }

    /// Parses and validates an entry for `a`; `None` if anything is off.
    pub fn deserialize(a: &Arrangement, text: &str) -> Option<(TopeGraph, IntersectionLattice)> {
        let e: CacheEntry = serde_json::from_str(text).ok()?;
        if e.version != CACHE_VERSION || e.hash != a.canonical_hash() || e.dimension != a.dim() {
            return None;
        }
        let normals: Vec<Vec<BigInt>> = e.normals.iter().map(|n| ints(n)).collect::<Option<_>>()?;
        if normals != a.normals() {
            return None;
        }
        Self::rebuild(a, e)
    }

    /// Same hash but the hyperplanes listed in another order.
    fn other_order(a: &Arrangement, text: &str) -> bool {
        serde_json::from_str::<CacheEntry>(text).is_ok_and(|e| {
            e.hash == a.canonical_hash() && e.normals.iter().map(|n| ints(n)).collect::<Option<Vec<_>>>().as_deref() != Some(a.normals())
        })
    }

    fn rebuild(a: &Arrangement, e: CacheEntry) -> Option<(TopeGraph, IntersectionLattice)> {
        let mut pairs = Vec::with_capacity(e.chambers.len());
        for c in &e.chambers {
            let w = ints(&c.witness)?;
            if w.len() != a.dim() || a.sign_vector(&w).chamber_mask() != Some(c.mask) {
                return None;
            }
            pairs.push((c.mask, w));
        }
        if pairs.windows(2).any(|p| p[0].0 >= p[1].0) {
            return None;
        }
        let g = TopeGraph::from_chambers(a.len(), pairs);
        let flats = e
            .flats
            .into_iter()
            .enumerate()
            .map(|(id, f)| {
                Some(Flat {
                    id,
                    rank: f.rank,
                    hyperplanes: f.hyperplanes,
                    basis: f.basis.iter().map(|b| ints(b)).collect::<Option<_>>()?,
                    mobius: f.mobius,
                    c_upper: f.c_upper,
                    c_lower: f.c_lower,
                    beta: f.beta,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        let l = IntersectionLattice::from_parts(a.dim(), a.len(), flats)?;
        (l.top().c_lower == g.len() as u64).then_some((g, l))
    }

    pub fn load(&self, a: &Arrangement) -> Option<std::result::Result<(TopeGraph, IntersectionLattice), String>> {
        let path = self.path_for(a);
        let text = fs::read_to_string(&path).ok()?;
        if Self::other_order(a, &text) {
            return None;
        }
        Some(Self::deserialize(a, &text).ok_or_else(|| format!("corrupt cache entry {}", path.display())))
    }

    /// Writes through a temporary file and renames it into place.
    pub fn store(&self, a: &Arrangement, g: &TopeGraph, l: &IntersectionLattice) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(a);
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        fs::write(&tmp, Self::serialize(a, g, l))?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn get_or_compute(&self, a: &Arrangement) -> Result<(TopeGraph, IntersectionLattice, CacheOutcome)> {
        let outcome = match self.load(a) {
            Some(Ok((g, l))) => return Ok((g, l, CacheOutcome::Hit)),
            Some(Err(msg)) => {
                log::warn!("{msg}; recomputing");
                CacheOutcome::Replaced
            }
            None => CacheOutcome::Miss,
        };
        let g = TopeGraph::enumerate(a);
        let l = IntersectionLattice::build(a);
        self.store(a, &g, &l)?;
        Ok((g, l, outcome))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::catalog;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        let a = catalog::u34();
        let (g, l, o) = cache.get_or_compute(&a).unwrap();
        assert_eq!(o, CacheOutcome::Miss);
        let (g2, l2, o2) = cache.get_or_compute(&a).unwrap();
        assert_eq!(o2, CacheOutcome::Hit);
        assert_eq!(g, g2);
        assert_eq!(l.flats(), l2.flats());
        assert_eq!(LatticeCache::serialize(&a, &g2, &l2), LatticeCache::serialize(&a, &g, &l));

        fs::write(cache.path_for(&a), "{not json").unwrap();
        let (_, _, o3) = cache.get_or_compute(&a).unwrap();
        assert_eq!(o3, CacheOutcome::Replaced);
        assert_eq!(cache.get_or_compute(&a).unwrap().2, CacheOutcome::Hit);
    }

    #[test]
    fn reordered_rows_are_not_confused() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let b = Arrangement::from_integers(2, &[vec![1, 1], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(a.canonical_hash(), b.canonical_hash());
        cache.get_or_compute(&a).unwrap();
        let (g, _, o) = cache.get_or_compute(&b).unwrap();
        assert_eq!(o, CacheOutcome::Miss);
        assert_eq!(g, TopeGraph::enumerate(&b));
    }
}
