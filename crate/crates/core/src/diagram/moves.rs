//! Reidemeister mutations used by the invariance harness: kink insertion
//! (R1), pokes across a face (R2), and diagram mirroring.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{CircleOrientation, Diagram, DiagramError, EdgeLabel, FaceId, Side, Sign};

/// Where an R1 kink is inserted: on a labelled edge or on a crossing-free
/// circle (which PD cannot address by edge label).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R1Site {
    Edge(EdgeLabel),
    Unknot(usize),
}

fn raw_tuples(d: &Diagram) -> Vec<[u32; 4]> {
    d.crossings()
        .iter()
        .map(|c| [c.tuple[0].0, c.tuple[1].0, c.tuple[2].0, c.tuple[3].0])
        .collect()
}

/// Insert a kink on the given site.  The writhe shifts by `sign`; the link
/// is unchanged.
pub fn r1_insert(d: &Diagram, site: R1Site, sign: Sign) -> Result<Diagram, DiagramError> {
    match site {
        R1Site::Unknot(i) => {
            if i >= d.unknot_count() {
                return Err(DiagramError::NoSuchUnknot(i));
            }
            let m = d.max_label() + 1;
            let mut tuples = raw_tuples(d);
            tuples.push(match sign {
                Sign::Positive => [m, m, m + 1, m + 1],
                Sign::Negative => [m, m + 1, m + 1, m],
            });
            let mut unknots = d.unknots().to_vec();
            unknots.remove(i);
            Diagram::from_crossings(tuples, unknots)
        }
        R1Site::Edge(e) => {
            let ei = d.edge_index(e).ok_or(DiagramError::NoSuchEdge(e.0))?;
            let inc = d.edges[ei].inc;
            let mut tuples = raw_tuples(d);
            for t in &mut tuples {
                for l in t.iter_mut() {
                    if *l > e.0 {
                        *l += 2;
                    }
                }
            }
            // the arriving occurrence of e becomes the third arc
            tuples[inc.0][inc.1] = e.0 + 2;
            tuples.push(match sign {
                Sign::Positive => [e.0, e.0 + 2, e.0 + 1, e.0 + 1],
                Sign::Negative => [e.0, e.0 + 1, e.0 + 1, e.0 + 2],
            });
            Diagram::from_crossings(tuples, d.unknots().to_vec())
        }
    }
}

/// Poke the strand of `e1` over the strand of `e2` across a face they both
/// bound, producing one positive and one negative crossing.
pub fn r2_insert(d: &Diagram, e1: EdgeLabel, e2: EdgeLabel) -> Result<Diagram, DiagramError> {
    if e1 == e2 {
        return Err(DiagramError::EdgesNotCofacial(e1.0, e2.0));
    }
    let fs = d.faces()?;
    let sides = |e: EdgeLabel| -> Vec<(FaceId, Side)> {
        [Side::Left, Side::Right]
            .into_iter()
            .filter_map(|s| fs.side_face(d, e, s).map(|f| (f, s)))
            .collect()
    };
    let s1 = sides(e1);
    let s2 = sides(e2);
    if s1.is_empty() {
        return Err(DiagramError::NoSuchEdge(e1.0));
    }
    if s2.is_empty() {
        return Err(DiagramError::NoSuchEdge(e2.0));
    }
    let mut shared = None;
    'search: for &(f1, side1) in &s1 {
        for &(f2, side2) in &s2 {
            if f1 == f2 {
                shared = Some((side1, side2));
                break 'search;
            }
        }
    }
    let Some((side1, side2)) = shared else {
        return Err(DiagramError::EdgesNotCofacial(e1.0, e2.0));
    };

    // relabel: both strands gain two arcs after their split edge
    let bump = |l: u32| -> u32 {
        l + 2 * u32::from(l > e1.0) + 2 * u32::from(l > e2.0)
    };
    let a1 = bump(e1.0);
    let b1 = bump(e2.0);
    let (a2, a3) = (a1 + 1, a1 + 2);
    let (b2, b3) = (b1 + 1, b1 + 2);

    let inc1 = d.edges[d.edge_index(e1).unwrap()].inc;
    let inc2 = d.edges[d.edge_index(e2).unwrap()].inc;
    let mut tuples = raw_tuples(d);
    for t in &mut tuples {
        for l in t.iter_mut() {
            *l = bump(*l);
        }
    }
    tuples[inc1.0][inc1.1] = a3;
    tuples[inc2.0][inc2.1] = b3;

    // tuple patterns per (side of e1 facing the face, side of e2)
    let (c1, c2) = match (side1, side2) {
        (Side::Left, Side::Left) => ([b2, a2, b3, a1], [b1, a2, b2, a3]),
        (Side::Left, Side::Right) => ([b1, a1, b2, a2], [b2, a3, b3, a2]),
        (Side::Right, Side::Left) => ([b1, a2, b2, a1], [b2, a2, b3, a3]),
        (Side::Right, Side::Right) => ([b2, a1, b3, a2], [b1, a3, b2, a2]),
    };
    tuples.push(c1);
    tuples.push(c2);
    Diagram::from_crossings(tuples, d.unknots().to_vec())
}

/// Poke a crossing-free circle over itself, yielding the two-crossing
/// unknot diagram.
pub fn r2_circle_self(d: &Diagram, i: usize) -> Result<Diagram, DiagramError> {
    if i >= d.unknot_count() {
        return Err(DiagramError::NoSuchUnknot(i));
    }
    let m = d.max_label() + 1;
    let mut tuples = raw_tuples(d);
    tuples.push([m + 2, m, m + 3, m + 3]);
    tuples.push([m + 1, m, m + 2, m + 1]);
    let mut unknots = d.unknots().to_vec();
    unknots.remove(i);
    Diagram::from_crossings(tuples, unknots)
}

/// Swap over and under strands at every crossing.  Each tuple rotates so
/// the old over-in strand becomes the incoming under strand.
pub fn mirror(d: &Diagram) -> Result<Diagram, DiagramError> {
    let tuples = d
        .crossings()
        .iter()
        .map(|c| {
            let t = &c.tuple;
            match c.sign {
                // positive: over arrives at slot 3
                Sign::Positive => [t[3].0, t[0].0, t[1].0, t[2].0],
                Sign::Negative => [t[1].0, t[2].0, t[3].0, t[0].0],
            }
        })
        .collect();
    Diagram::from_crossings(tuples, d.unknots().to_vec())
}

/// One random R1 or R2 mutation.  The resulting diagram represents the
/// same link.
pub fn random_mutation<R: Rng>(d: &Diagram, rng: &mut R) -> Result<Diagram, DiagramError> {
    let edges: Vec<EdgeLabel> = d.edge_labels().collect();
    let n_unknots = d.unknot_count();
    for _ in 0..40 {
        match rng.gen_range(0..3) {
            0 => {
                // R1 on a random site
                let sign = if rng.gen() { Sign::Positive } else { Sign::Negative };
                let total = edges.len() + n_unknots;
                if total == 0 {
                    continue;
                }
                let k = rng.gen_range(0..total);
                let site = if k < edges.len() {
                    R1Site::Edge(edges[k])
                } else {
                    R1Site::Unknot(k - edges.len())
                };
                return r1_insert(d, site, sign);
            }
            1 if !edges.is_empty() => {
                // R2 between two random distinct edges if cofacial
                let e1 = *edges.choose(rng).unwrap();
                let e2 = *edges.choose(rng).unwrap();
                if e1 == e2 {
                    continue;
                }
                match r2_insert(d, e1, e2) {
                    Ok(out) => return Ok(out),
                    Err(DiagramError::EdgesNotCofacial(..)) => continue,
                    Err(e) => return Err(e),
                }
            }
            _ if n_unknots > 0 => {
                return r2_circle_self(d, rng.gen_range(0..n_unknots));
            }
            _ => continue,
        }
    }
    // dense random choices failed; fall back to a kink on the first edge
    match edges.first() {
        Some(&e) => r1_insert(d, R1Site::Edge(e), Sign::Positive),
        None => r1_insert(d, R1Site::Unknot(0), Sign::Positive),
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;

    use super::*;
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)";

    #[test]
    fn r1_on_circle() {
        let d = parse_pd("U").unwrap();
        let k = r1_insert(&d, R1Site::Unknot(0), Sign::Positive).unwrap();
        assert_eq!(k.to_pd_string(), "X(1,1,2,2)");
        assert_eq!(k.writhe(), 1);
        let k = r1_insert(&d, R1Site::Unknot(0), Sign::Negative).unwrap();
        assert_eq!(k.writhe(), -1);
    }

    #[test]
    fn r1_shifts_writhe() {
        let d = parse_pd(TREFOIL).unwrap();
        for e in d.edge_labels().collect::<Vec<_>>() {
            for sign in [Sign::Positive, Sign::Negative] {
                let m = r1_insert(&d, R1Site::Edge(e), sign).unwrap();
                assert_eq!(m.writhe(), d.writhe() + sign.value(), "edge {e:?}");
                assert_eq!(m.crossings().len(), 4);
                assert_eq!(m.faces().unwrap().face_count(), 6);
            }
        }
    }

    #[test]
    fn r2_preserves_writhe() {
        let d = parse_pd(TREFOIL).unwrap();
        let fs = d.faces().unwrap();
        let mut tried = 0;
        for e1 in d.edge_labels().collect::<Vec<_>>() {
            for e2 in d.edge_labels().collect::<Vec<_>>() {
                if e1 == e2 {
                    continue;
                }
                match r2_insert(&d, e1, e2) {
                    Ok(m) => {
                        tried += 1;
                        assert_eq!(m.writhe(), d.writhe());
                        assert_eq!(m.crossings().len(), 5);
                        // two extra faces
                        assert_eq!(m.faces().unwrap().face_count(), fs.face_count() + 2);
                    }
                    Err(DiagramError::EdgesNotCofacial(..)) => {}
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
        assert!(tried > 0);
    }

    #[test]
    fn r2_circle_self_gives_two_crossing_unknot() {
        let d = parse_pd("U").unwrap();
        let m = r2_circle_self(&d, 0).unwrap();
        assert_eq!(m.crossings().len(), 2);
        assert_eq!(m.writhe(), 0);
        assert_eq!(m.unknot_count(), 0);
        assert_eq!(m.components().len(), 1);
        assert_eq!(m.faces().unwrap().face_count(), 4);
    }

    #[test]
    fn mirror_flips_writhe() {
        for pd in [TREFOIL, "X(8,4,1,3),X(6,1,7,2),X(4,8,5,7),X(2,5,3,6)", "X(2,3,1,4),X(3,2,4,1)"] {
            let d = parse_pd(pd).unwrap();
            let m = mirror(&d).unwrap();
            assert_eq!(m.writhe(), -d.writhe());
            assert_eq!(mirror(&m).unwrap(), d);
        }
    }

    #[test]
    fn random_mutations_stay_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for pd in [TREFOIL, "U", "U,U", "X(2,3,1,4),X(3,2,4,1)"] {
            let mut d = parse_pd(pd).unwrap();
            let w0 = d.writhe() ; // tracked only through R1 deltas
            let mut delta = 0;
            for _ in 0..6 {
                let before = d.writhe();
                d = random_mutation(&d, &mut rng).unwrap();
                delta += d.writhe() - before;
            }
            assert_eq!(d.writhe(), w0 + delta);
            d.faces().unwrap();
        }
    }
}
