//! Faces as sign vectors, indexed by (flat, chamber of the restriction).

use super::chambers::TopeGraph;
use super::lattice::IntersectionLattice;
use super::linalg::combine;
use super::{Arrangement, Sign, SignVector};

/// `(FG)_H = F_H` if `F_H != 0`, else `G_H`.
pub fn tits_product(f: &SignVector, g: &SignVector) -> SignVector {
    assert_eq!(f.len(), g.len());
    SignVector(f.0.iter().zip(&g.0).map(|(a, b)| if *a == Sign::Zero { *b } else { *a }).collect())
}

#[derive(Clone, Debug)]
pub struct FaceLattice {
    /// `faces[x]` lists the faces with support flat `x`, in the order of the
    /// chambers of the restriction `A^X`.
    faces: Vec<Vec<SignVector>>,
}

impl FaceLattice {
    pub fn build(a: &Arrangement, lattice: &IntersectionLattice) -> FaceLattice {
        let faces = lattice
            .flats()
            .iter()
            .map(|f| {
                let r = lattice.restrict(a, f.hyperplanes).expect("lattice flat");
                let g = TopeGraph::enumerate(&r.arrangement);
                (0..g.len())
                    .map(|i| a.sign_vector(&combine(&r.basis, g.witness(i), a.dim())))
                    .collect()
            })
            .collect();
        FaceLattice { faces }
    }

    pub fn with_support(&self, flat: usize) -> &[SignVector] {
        &self.faces[flat]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &SignVector)> {
        self.faces.iter().enumerate().flat_map(|(x, fs)| fs.iter().map(move |f| (x, f)))
    }

    pub fn len(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Checks `d(D, C) = d(D, FD) + d(FD, C)` for every face `F`, chamber `D`
/// and chamber `C >= F`; returns the first failing triple.
pub fn gate_identity_violation(
    graph: &TopeGraph,
    faces: &FaceLattice,
) -> Option<(SignVector, usize, usize)> {
    for (_, f) in faces.iter() {
        let above: Vec<usize> = (0..graph.len()).filter(|&c| f.is_face_of(&graph.sign_vector(c))).collect();
        for d in 0..graph.len() {
            let fd = tits_product(f, &graph.sign_vector(d));
            let Some(gate) = fd.chamber_mask().and_then(|m| graph.index_of(m)) else {
                return Some((f.clone(), d, usize::MAX));
            };
            for &c in &above {
                if graph.distance(d, c) != graph.distance(d, gate) + graph.distance(gate, c) {
                    return Some((f.clone(), d, c));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_faces() {
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let l = IntersectionLattice::build(&a);
        let faces = FaceLattice::build(&a, &l);
        assert_eq!(faces.len(), 13);
        assert_eq!(faces.with_support(l.top().id), &[SignVector(vec![Sign::Zero; 3])]);
        let g = TopeGraph::enumerate(&a);
        assert!(gate_identity_violation(&g, &faces).is_none());
    }

    #[test]
    fn product_laws() {
        let p = |s: &str| {
            SignVector(
                s.chars()
                    .map(|c| match c {
                        '+' => Sign::Plus,
                        '-' => Sign::Minus,
                        _ => Sign::Zero,
                    })
                    .collect(),
            )
        };
        let f = p("0+0");
        let g = p("-+-");
        assert_eq!(tits_product(&f, &g), p("-+-"));
        assert_eq!(tits_product(&p("000"), &g), g);
        assert_eq!(tits_product(&g, &f), g);
        assert_eq!(tits_product(&f, &f), f);
    }
}
