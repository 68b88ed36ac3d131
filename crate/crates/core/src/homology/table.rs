//! Bigraded homology tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::snf::invariant_factors;

/// `Z^free_rank ⊕ ⊕ Z/d_i`, with `d_1 | d_2 | ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummand {
    pub free_rank: u64,
    pub torsion: Vec<u64>,
}

impl HomologySummand {
    pub fn free(rank: u64) -> Self {
        HomologySummand { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn add(&mut self, other: &HomologySummand) {
        self.free_rank += other.free_rank;
        if !other.torsion.is_empty() {
            let mut all = std::mem::take(&mut self.torsion);
            all.extend_from_slice(&other.torsion);
            self.torsion = invariant_factors(&all);
        }
    }

    /// Direct sum of `c` copies.
    pub fn times(&self, c: u64) -> HomologySummand {
        let mut t = Vec::new();
        for _ in 0..c {
            t.extend_from_slice(&self.torsion);
        }
        HomologySummand {
            free_rank: self.free_rank * c,
            torsion: invariant_factors(&t),
        }
    }
}

/// Entries `(k, l) -> MH_{k,l}` for `l <= max_length`; zero groups omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub max_length: usize,
    #[serde(with = "entry_list")]
    pub entries: BTreeMap<(usize, usize), HomologySummand>,
}

mod entry_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        k: usize,
        l: usize,
        rank: u64,
        torsion: Vec<u64>,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, usize), HomologySummand>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|(&(k, l), h)| Entry { k, l, rank: h.free_rank, torsion: h.torsion.clone() })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), HomologySummand>, D::Error> {
        let v: Vec<Entry> = Vec::deserialize(d)?;
        Ok(v.into_iter()
            .map(|e| ((e.k, e.l), HomologySummand { free_rank: e.rank, torsion: e.torsion }))
            .collect())
    }
}

impl BettiTable {
    pub fn new(max_length: usize) -> Self {
        BettiTable { max_length, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, k: usize, l: usize, h: &HomologySummand) {
        if h.is_zero() {
            return;
        }
        self.entries.entry((k, l)).or_default().add(h);
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (&(k, l), h) in &other.entries {
            self.add(k, l, h);
        }
    }

    pub fn times(&self, c: u64) -> BettiTable {
        let mut t = BettiTable::new(self.max_length);
        for (&(k, l), h) in &self.entries {
            t.add(k, l, &h.times(c));
        }
        t
    }

    pub fn get(&self, k: usize, l: usize) -> HomologySummand {
        self.entries.get(&(k, l)).cloned().unwrap_or_default()
    }

    pub fn beta(&self, k: usize, l: usize) -> u64 {
        self.entries.get(&(k, l)).map_or(0, |h| h.free_rank)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.entries.values().all(|h| h.torsion.is_empty())
    }

    /// Cells with torsion, `(k, l, invariant factors)`.
    pub fn torsion_cells(&self) -> Vec<(usize, usize, Vec<u64>)> {
        self.entries
            .iter()
            .filter(|(_, h)| !h.torsion.is_empty())
            .map(|(&(k, l), h)| (k, l, h.torsion.clone()))
            .collect()
    }

    /// `chi_l = sum_k (-1)^k beta_{k,l}` for `l = 0..=max_length`.
    pub fn euler_row(&self) -> Vec<i64> {
        let mut row = vec![0i64; self.max_length + 1];
        for (&(k, l), h) in &self.entries {
            let b = h.free_rank as i64;
            row[l] += if k % 2 == 0 { b } else { -b };
        }
        row
    }

    /// Free ranks only, as in the reference TSV tables.
    pub fn ranks(&self) -> BTreeMap<(usize, usize), u64> {
        self.entries
            .iter()
            .filter(|(_, h)| h.free_rank > 0)
            .map(|(&kl, h)| (kl, h.free_rank))
            .collect()
    }

    /// Rows `k`, columns `l`; a header row and a leading `k` column.
    pub fn to_tsv(&self) -> String {
        let l_max = self.max_length;
        let mut s = String::from("k\\l");
        for l in 0..=l_max {
            write!(s, "\t{l}").unwrap();
        }
        s.push('\n');
        for k in 0..=l_max {
            write!(s, "{k}").unwrap();
            for l in 0..=l_max {
                let h = self.get(k, l);
                s.push('\t');
                if h.torsion.is_empty() {
                    write!(s, "{}", h.free_rank).unwrap();
                } else {
                    let t: Vec<String> = h.torsion.iter().map(|d| format!("Z/{d}")).collect();
                    write!(s, "{}+{}", h.free_rank, t.join("+")).unwrap();
                }
            }
            s.push('\n');
        }
        s
    }

    /// Parses [`BettiTable::to_tsv`] output; blank cells count as zero.
    pub fn from_tsv(text: &str) -> Result<BettiTable, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or("empty table")?;
        let ls: Vec<usize> = header
            .split('\t')
            .skip(1)
            .map(|x| x.trim().parse().map_err(|_| format!("bad header cell {x:?}")))
            .collect::<Result<_, _>>()?;
        let mut t = BettiTable::new(ls.iter().copied().max().unwrap_or(0));
        for line in lines {
            let mut cells = line.split('\t');
            let k: usize = cells.next().unwrap().trim().parse().map_err(|_| format!("bad row {line:?}"))?;
            for (&l, cell) in ls.iter().zip(cells) {
                let cell = cell.trim();
                if cell.is_empty() {
                    continue;
                }
                let mut parts = cell.split('+');
                let free: u64 = parts.next().unwrap().parse().map_err(|_| format!("bad cell {cell:?}"))?;
                let torsion = parts
                    .map(|p| p.trim_start_matches("Z/").parse::<u64>().map_err(|_| format!("bad cell {cell:?}")))
                    .collect::<Result<Vec<_>, _>>()?;
                t.add(k, l, &HomologySummand { free_rank: free, torsion });
            }
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_round_trip() {
        let mut t = BettiTable::new(3);
        t.add(0, 0, &HomologySummand::free(6));
        t.add(2, 3, &HomologySummand::free(6));
        t.add(3, 3, &HomologySummand { free_rank: 1, torsion: vec![2] });
        let back = BettiTable::from_tsv(&t.to_tsv()).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.euler_row(), vec![6, 0, 0, 5]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<BettiTable>(&json).unwrap(), t);
    }

    #[test]
    fn summand_arithmetic() {
        let mut h = HomologySummand { free_rank: 1, torsion: vec![2] };
        h.add(&HomologySummand { free_rank: 2, torsion: vec![3] });
        assert_eq!(h, HomologySummand { free_rank: 3, torsion: vec![6] });
        assert_eq!(h.times(2).torsion, vec![6, 6]);
    }
}
