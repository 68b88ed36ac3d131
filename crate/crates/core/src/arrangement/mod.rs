//! Central hyperplane arrangements over Q: chambers, faces, flats.

pub mod catalog;
pub mod chambers;
pub mod faces;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod lp;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use sha2::{Digest, Sha256};

use crate::error::ArrangementError;

pub use chambers::TopeGraph;
pub use faces::{tits_product, FaceLattice};
pub use lattice::{Flat, IntersectionLattice};
pub use lp::sign_feasible;

/// Bitmask over hyperplane indices.
pub type HyperplaneSet = u64;

pub const MAX_HYPERPLANES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        if x.is_positive() {
            Sign::Plus
        } else if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Full-support vector from a chamber bitmask (bit set means `-`).
    pub fn from_chamber(mask: u64, n: usize) -> Self {
        SignVector((0..n).map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect())
    }

    /// Bitmask form if every entry is nonzero.
    pub fn chamber_mask(&self) -> Option<u64> {
        let mut m = 0u64;
        for (i, s) in self.0.iter().enumerate() {
            match s {
                Sign::Zero => return None,
                Sign::Minus => m |= 1 << i,
                Sign::Plus => {}
            }
        }
        Some(m)
    }

    /// Indices where the sign is zero.
    pub fn zero_set(&self) -> HyperplaneSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Zero)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn negated(&self) -> Self {
        SignVector(self.0.iter().map(|s| s.neg()).collect())
    }

    /// Face order: `self <= other` iff every nonzero sign of `self` agrees with `other`.
    pub fn is_face_of(&self, other: &SignVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == Sign::Zero || a == b)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// A central arrangement in `Q^d`, normals stored as primitive integer covectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    normals: Vec<Vec<BigInt>>,
    labels: Vec<String>,
}

impl Arrangement {
    /// Validates and content-normalizes the rows.
    pub fn new(dim: usize, rows: Vec<Vec<BigRational>>, labels: Option<Vec<String>>) -> Result<Self, ArrangementError> {
        if rows.len() > MAX_HYPERPLANES {
            return Err(ArrangementError::TooManyHyperplanes(rows.len()));
        }
        let mut normals = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(ArrangementError::Ragged);
            }
            if row.iter().all(|x| x.is_zero()) {
                return Err(ArrangementError::ZeroNormal(i));
            }
            normals.push(linalg::primitive(row));
        }
        for i in 0..normals.len() {
            for j in 0..i {
                if linalg::proportional(&normals[i], &normals[j]) {
                    return Err(ArrangementError::DuplicateHyperplane(j, i));
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() != normals.len() => {
                return Err(ArrangementError::Input(format!(
                    "{} labels for {} hyperplanes",
                    l.len(),
                    normals.len()
                )))
            }
            Some(l) => l,
            None => (1..=normals.len()).map(|i| format!("H{i}")).collect(),
        };
        Ok(Arrangement { dim, normals, labels })
    }

    pub fn from_integers(dim: usize, rows: &[Vec<i64>]) -> Result<Self, ArrangementError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        Arrangement::new(dim, rows, None)
    }

    /// Trusted constructor for normals already primitive and pairwise independent.
    pub(crate) fn from_primitive(dim: usize, normals: Vec<Vec<BigInt>>, labels: Vec<String>) -> Self {
        debug_assert_eq!(normals.len(), labels.len());
        Arrangement { dim, normals, labels }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn full_set(&self) -> HyperplaneSet {
        full_mask(self.len())
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.normals, self.dim)
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim
    }

    /// Sign vector of a point.
    pub fn sign_vector(&self, x: &[BigInt]) -> SignVector {
        SignVector(self.normals.iter().map(|n| Sign::of(&linalg::dot(n, x))).collect())
    }

    pub fn sign_feasible(&self, sigma: &SignVector) -> Option<Vec<BigInt>> {
        lp::sign_feasible(&self.normals, self.dim, &sigma.0)
    }

    /// Subarrangement on the hyperplanes in `set`, same ambient space.
    pub fn subarrangement(&self, set: HyperplaneSet) -> Arrangement {
        let idx: Vec<usize> = (0..self.len()).filter(|i| set >> i & 1 == 1).collect();
        Arrangement {
            dim: self.dim,
            normals: idx.iter().map(|&i| self.normals[i].clone()).collect(),
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Quotient by the center: normals in the coordinates of their row space.
    pub fn essentialize(&self) -> Arrangement {
        let rows = self.normals.iter().map(|r| linalg::to_rational(r)).collect();
        let (_, pivots) = linalg::rref(rows, self.dim);
        if pivots.len() == self.dim {
            return self.clone();
        }
        // in RREF coordinates alpha = sum_i alpha[p_i] R_i
        let normals = self
            .normals
            .iter()
            .map(|n| linalg::primitive_int(pivots.iter().map(|&p| n[p].clone()).collect()))
            .collect();
        Arrangement {
            dim: pivots.len(),
            normals,
            labels: self.labels.clone(),
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Arrangement) -> Arrangement {
        let dim = self.dim + other.dim;
        let mut normals = Vec::with_capacity(self.len() + other.len());
        for n in &self.normals {
            let mut r = n.clone();
            r.resize(dim, BigInt::zero());
            normals.push(r);
        }
        for n in &other.normals {
            let mut r = vec![BigInt::zero(); self.dim];
            r.extend(n.iter().cloned());
            normals.push(r);
        }
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{l}.1"))
            .chain(other.labels.iter().map(|l| format!("{l}.2")))
            .collect();
        Arrangement { dim, normals, labels }
    }

    /// Normals oriented and sorted; independent of row order and sign.
    pub fn canonical_normals(&self) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = self.normals.iter().map(|n| linalg::orient(n.clone())).collect();
        rows.sort();
        rows
    }

    /// Hex SHA-256 of the canonical normal matrix.
    pub fn canonical_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("d={};", self.dim));
        for r in self.canonical_normals() {
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            h.update(s.join(","));
            h.update(";");
        }
        hex::encode(h.finalize())
    }
}

pub fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_validation() {
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!((a.dim(), a.len(), a.rank()), (2, 2, 2));
        assert!(matches!(
            Arrangement::from_integers(2, &[vec![1, 0], vec![2, 0]]),
            Err(ArrangementError::DuplicateHyperplane(0, 1))
        ));
        assert!(matches!(
            Arrangement::from_integers(2, &[vec![0, 0]]),
            Err(ArrangementError::ZeroNormal(0))
        ));
        let b = Arrangement::from_integers(2, &[vec![2, 4], vec![-3, 0]]).unwrap();
        assert_eq!(b.normals()[0], vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(b.normals()[1], vec![BigInt::from(-1), BigInt::from(0)]);
    }

    #[test]
    fn essentialize_drops_center() {
        let a = Arrangement::from_integers(3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let e = a.essentialize();
        assert_eq!(e.dim(), 2);
        assert_eq!(e, Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1]]).unwrap());
        assert_eq!(e.essentialize(), e);
    }

    #[test]
    fn hash_ignores_order_and_orientation() {
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let b = Arrangement::from_integers(2, &[vec![-1, -1], vec![1, 0], vec![0, 3]]).unwrap();
        assert_eq!(a.canonical_hash(), b.canonical_hash());
        let c = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, -1]]).unwrap();
        assert_ne!(a.canonical_hash(), c.canonical_hash());
    }

    #[test]
    fn sign_vectors() {
        let s = SignVector::from_chamber(0b101, 3);
        assert_eq!(s.to_string(), "-+-");
        assert_eq!(s.chamber_mask(), Some(0b101));
        let f = SignVector(vec![Sign::Zero, Sign::Plus, Sign::Minus]);
        assert!(f.is_face_of(&s));
        assert_eq!(f.zero_set(), 0b001);
        assert_eq!(f.negated().to_string(), "0-+");
    }
}
