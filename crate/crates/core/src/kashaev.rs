//! Assembly of the Kashaev matrix `tau_D`: the symmetric face-indexed
//! matrix over `Z[2x]` obtained by summing a signed local 4x4 table over
//! the crossings of the diagram.
//!
//! The local table, in role order `(a, b, c, d)` with `a` between the two
//! outgoing strand ends and `c` between the two incoming ends:
//!
//! ```text
//!       a        b    c        d
//! a   2x^2-1     x    1        x
//! b     x        1    x        1
//! c     1        x    2x^2-1   x
//! d     x        1    x        1
//! ```
//!
//! When two roles land on the same face the values are summed as if the
//! faces were distinct, so a merged diagonal accumulates all four pairings.

use std::collections::BTreeMap;

use num::Zero;

use crate::algebra::{substitute_u, sym_signature, LaurentS, Mat, Rational, UPoly, XPoly};
use crate::diagram::{Diagram, DiagramError, FaceId, FaceStructure, VertexFaceRoles};

/// `tau_D` together with the diagram data needed downstream.
#[derive(Debug, Clone)]
pub struct KashaevMatrix {
    pub mat: Mat<UPoly>,
    pub writhe: i64,
    pub vertex_count: usize,
    pub positive_count: usize,
    pub exterior: FaceId,
    adjacent: Vec<(FaceId, FaceId)>,
}

fn table() -> [[XPoly; 4]; 4] {
    let q = XPoly::two_x_sq_minus_one;
    let x = XPoly::x;
    let one = || XPoly::constant(crate::algebra::rat(1));
    [
        [q(), x(), one(), x()],
        [x(), one(), x(), one()],
        [one(), x(), q(), x()],
        [x(), one(), x(), one()],
    ]
}

/// The sparse contribution of one crossing, with merged roles summed.
/// Entries come back in `x`-coefficients and are half-integral in
/// isolation.
pub fn local_tau(roles: &VertexFaceRoles) -> Vec<((FaceId, FaceId), XPoly)> {
    let t = table();
    let mut acc: BTreeMap<(FaceId, FaceId), XPoly> = BTreeMap::new();
    for i in 0..4 {
        for j in 0..4 {
            let key = (roles.roles[i], roles.roles[j]);
            let entry = acc.entry(key).or_insert_with(XPoly::zero);
            *entry = std::mem::take(entry) + t[i][j].clone();
        }
    }
    acc.into_iter().collect()
}

/// Assemble `tau_D` from a diagram with its face structure.
pub fn build_tau_from(d: &Diagram, fs: &FaceStructure) -> KashaevMatrix {
    let n = fs.face_count();
    let mut acc: Mat<XPoly> = Mat::zeros(n, n);
    for vr in fs.roles() {
        let sign = d.crossings()[vr.crossing].sign;
        for ((fi, fj), p) in local_tau(vr) {
            let signed = match sign {
                crate::diagram::Sign::Positive => p,
                crate::diagram::Sign::Negative => -p,
            };
            let e = &mut acc[(fi.0, fj.0)];
            *e = std::mem::take(e) + signed;
        }
    }
    let mat = acc.map(|p| {
        p.to_upoly()
            .expect("assembled Kashaev entries lie in Z[2x]; a half-integral sum is a bug")
    });
    debug_assert!(mat.is_symmetric());
    KashaevMatrix {
        mat,
        writhe: d.writhe(),
        vertex_count: d.crossings().len(),
        positive_count: d.positive_crossings(),
        exterior: fs.exterior(),
        adjacent: fs.adjacent_pairs().collect(),
    }
}

pub fn build_tau(d: &Diagram) -> Result<KashaevMatrix, DiagramError> {
    Ok(build_tau_from(d, &d.faces()?))
}

impl KashaevMatrix {
    pub fn face_count(&self) -> usize {
        self.mat.nrows()
    }

    pub fn adjacent_pairs(&self) -> &[(FaceId, FaceId)] {
        &self.adjacent
    }

    pub fn is_adjacent(&self, fi: FaceId, fj: FaceId) -> bool {
        let key = (fi.min(fj), fi.max(fj));
        self.adjacent.contains(&key)
    }

    /// Deterministic reduction pair: exterior plus its lowest-id neighbour.
    pub fn default_reduce_pair(&self) -> Option<(FaceId, FaceId)> {
        let ext = self.exterior;
        self.adjacent
            .iter()
            .find(|&&(a, b)| a == ext || b == ext)
            .map(|&(a, b)| if a == ext { (ext, b) } else { (ext, a) })
    }
}

/// Remove the rows and columns of two faces sharing an edge, giving the
/// reduced matrix whose determinant computes the Alexander polynomial.
pub fn reduce_tau(
    k: &KashaevMatrix,
    fi: FaceId,
    fj: FaceId,
) -> Result<Mat<UPoly>, DiagramError> {
    if !k.is_adjacent(fi, fj) {
        return Err(DiagramError::FacesNotAdjacent(fi.0, fj.0));
    }
    let keep: Vec<usize> = (0..k.face_count()).filter(|&f| f != fi.0 && f != fj.0).collect();
    Ok(k.mat.submatrix(&keep, &keep))
}

/// Entrywise evaluation at a rational `x`.
pub fn eval_tau(k: &KashaevMatrix, x: &Rational) -> Mat<Rational> {
    k.mat.map(|p| p.eval_at_x(x))
}

/// Entrywise substitution `2x = t^{1/2} + t^{-1/2}`.
pub fn tau_laurent(k: &KashaevMatrix) -> Mat<LaurentS> {
    k.mat.map(substitute_u)
}

/// `sign(tau_D(x)) - wr_D`, the diagram invariant.
pub fn kashaev_invariant_of(k: &KashaevMatrix, x: &Rational) -> i64 {
    let sig = sym_signature(&eval_tau(k, x)).expect("tau_D is symmetric");
    sig - k.writhe
}

pub fn kashaev_invariant(d: &Diagram, x: &Rational) -> Result<i64, DiagramError> {
    Ok(kashaev_invariant_of(&build_tau(d)?, x))
}

#[cfg(test)]
mod tests {
    use num::Zero;

    use super::*;
    use crate::algebra::{rat, rat_frac};
    use crate::diagram::parse_pd;

    const TREFOIL_R: &str = "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)";
    const FIG8: &str = "X(8,4,1,3),X(6,1,7,2),X(4,8,5,7),X(2,5,3,6)";

    #[test]
    fn unknot_tau_is_zero() {
        let d = parse_pd("U").unwrap();
        let k = build_tau(&d).unwrap();
        assert_eq!(k.face_count(), 2);
        assert!(k.mat.is_zero_matrix());
        assert_eq!(kashaev_invariant_of(&k, &rat(0)), 0);
    }

    #[test]
    fn local_table_injective_roles() {
        let roles = VertexFaceRoles { crossing: 0, roles: [FaceId(0), FaceId(1), FaceId(2), FaceId(3)] };
        let contrib = local_tau(&roles);
        assert_eq!(contrib.len(), 16);
        let get = |i: usize, j: usize| -> XPoly {
            contrib.iter().find(|((a, b), _)| (a.0, b.0) == (i, j)).unwrap().1.clone()
        };
        assert_eq!(get(0, 0), XPoly::two_x_sq_minus_one());
        assert_eq!(get(0, 2), XPoly::constant(rat(1)));
        assert_eq!(get(1, 0), XPoly::x());
        assert_eq!(get(3, 1), XPoly::constant(rat(1)));
        // single-vertex tables are half-integral in u
        assert!(XPoly::two_x_sq_minus_one().to_upoly().is_none());
    }

    #[test]
    fn merged_roles_sum() {
        // b = d merged: diagonal picks up all four unit pairings
        let roles = VertexFaceRoles { crossing: 0, roles: [FaceId(0), FaceId(1), FaceId(2), FaceId(1)] };
        let contrib = local_tau(&roles);
        let get = |i: usize, j: usize| -> XPoly {
            contrib.iter().find(|((a, b), _)| (a.0, b.0) == (i, j)).unwrap().1.clone()
        };
        assert_eq!(get(1, 1), XPoly::constant(rat(4)));
        assert_eq!(get(0, 1), XPoly::x() + XPoly::x());

        // a = c merged: 2(2x^2-1) + 2 = 4x^2
        let roles = VertexFaceRoles { crossing: 0, roles: [FaceId(0), FaceId(1), FaceId(0), FaceId(2)] };
        let contrib = local_tau(&roles);
        let get = |i: usize, j: usize| -> XPoly {
            contrib.iter().find(|((a, b), _)| (a.0, b.0) == (i, j)).unwrap().1.clone()
        };
        let four_x_sq = XPoly::from_coeffs(vec![rat(0), rat(0), rat(4)]);
        assert_eq!(get(0, 0), four_x_sq);
    }

    #[test]
    fn positive_kink_tau() {
        let d = parse_pd("X(1,1,2,2)").unwrap();
        let fs = d.faces().unwrap();
        let k = build_tau_from(&d, &fs);
        assert_eq!(k.face_count(), 3);
        let [a, b, _c, dd] = fs.roles()[0].roles;
        let m = a; // merged a = c face
        let u = UPoly::u();
        let u_sq = UPoly::from_ints(&[0, 0, 1]);
        assert_eq!(k.mat[(m.0, m.0)], u_sq);
        assert_eq!(k.mat[(m.0, b.0)], u);
        assert_eq!(k.mat[(m.0, dd.0)], u);
        assert_eq!(k.mat[(b.0, b.0)], UPoly::constant(1));
        assert_eq!(k.mat[(b.0, dd.0)], UPoly::constant(1));
        assert_eq!(k.mat[(dd.0, dd.0)], UPoly::constant(1));
        // the kink unknot has invariant 0 everywhere
        for x in [rat(0), rat(1), rat_frac(-3, 4), rat(2)] {
            assert_eq!(kashaev_invariant_of(&k, &x), 0);
        }
    }

    #[test]
    fn trefoil_invariant_values() {
        let d = parse_pd(TREFOIL_R).unwrap();
        let k = build_tau(&d).unwrap();
        assert_eq!(k.face_count(), 5);
        assert!(k.mat.is_symmetric());
        // sigma(-1) = -2 for the right trefoil, so the invariant at x = 0
        // (omega = -1) is -4
        assert_eq!(kashaev_invariant_of(&k, &rat(0)), -4);
        // near omega = 1 the signature vanishes
        assert_eq!(kashaev_invariant_of(&k, &rat_frac(99, 100)), 0);
    }

    #[test]
    fn figure_eight_invariant_values() {
        let d = parse_pd(FIG8).unwrap();
        let k = build_tau(&d).unwrap();
        assert_eq!(k.face_count(), 6);
        assert_eq!(kashaev_invariant_of(&k, &rat(0)), 0);
    }

    #[test]
    fn reduce_dimensions_and_adjacency() {
        let d = parse_pd(TREFOIL_R).unwrap();
        let k = build_tau(&d).unwrap();
        let (fi, fj) = k.default_reduce_pair().unwrap();
        let r = reduce_tau(&k, fi, fj).unwrap();
        assert_eq!(r.nrows(), 3);

        let d = parse_pd("U").unwrap();
        let k = build_tau(&d).unwrap();
        let (fi, fj) = k.default_reduce_pair().unwrap();
        let r = reduce_tau(&k, fi, fj).unwrap();
        assert_eq!(r.nrows(), 0);

        // the two loop faces of a kink do not share an edge
        let d = parse_pd("X(1,1,2,2)").unwrap();
        let fs = d.faces().unwrap();
        let k = build_tau_from(&d, &fs);
        let [_, b, _, dd] = fs.roles()[0].roles;
        assert!(matches!(
            reduce_tau(&k, b, dd),
            Err(DiagramError::FacesNotAdjacent(..))
        ));
    }

    #[test]
    fn zero_rows_do_not_shift_signature() {
        // a split circle adds a zero row and column to tau_D
        let plain = parse_pd(TREFOIL_R).unwrap();
        let padded = parse_pd(&format!("{TREFOIL_R},U")).unwrap();
        let (kp, kq) = (build_tau(&plain).unwrap(), build_tau(&padded).unwrap());
        assert_eq!(kq.face_count(), kp.face_count() + 1);
        for x in [rat(0), rat_frac(1, 2), rat(2)] {
            assert_eq!(kashaev_invariant_of(&kp, &x), kashaev_invariant_of(&kq, &x));
        }
    }

    #[test]
    fn face_role_parity() {
        // every face takes the a role as often as the c role
        for pd in [TREFOIL_R, FIG8, "X(1,1,2,2)", "X(2,3,1,4),X(3,2,4,1)"] {
            let d = parse_pd(pd).unwrap();
            let fs = d.faces().unwrap();
            let mut a_count = vec![0i64; fs.face_count()];
            let mut c_count = vec![0i64; fs.face_count()];
            for vr in fs.roles() {
                a_count[vr.roles[0].0] += 1;
                c_count[vr.roles[2].0] += 1;
            }
            assert_eq!(a_count, c_count, "{pd}");
        }
    }

    #[test]
    fn laurent_substitution_is_integral_and_symmetric() {
        for pd in [TREFOIL_R, FIG8] {
            let k = build_tau(&parse_pd(pd).unwrap()).unwrap();
            let l = tau_laurent(&k);
            for i in 0..l.nrows() {
                for j in 0..l.ncols() {
                    assert!(l[(i, j)].is_integral());
                    assert_eq!(l[(i, j)], l[(i, j)].bar());
                }
            }
        }
    }

    #[test]
    fn mutation_invariance_spot_check() {
        use crate::diagram::{r1_insert, R1Site, Sign};
        let d = parse_pd(TREFOIL_R).unwrap();
        let k = build_tau(&d).unwrap();
        let xs = [rat(0), rat_frac(1, 2), rat_frac(-3, 4), rat(2), rat(-2)];
        for e in d.edge_labels().collect::<Vec<_>>() {
            for sign in [Sign::Positive, Sign::Negative] {
                let m = r1_insert(&d, R1Site::Edge(e), sign).unwrap();
                let km = build_tau(&m).unwrap();
                for x in &xs {
                    assert_eq!(
                        kashaev_invariant_of(&km, x),
                        kashaev_invariant_of(&k, x),
                        "edge {e:?} sign {sign:?} x {x}"
                    );
                }
            }
        }
    }
}
