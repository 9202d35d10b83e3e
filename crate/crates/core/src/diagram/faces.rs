//! Faces of a diagram through the rotation system, winding numbers, and
//! the four face roles at each crossing.
//!
//! Traversal keeps the face on the left: a directed edge arriving at slot
//! `s` of a crossing continues along the edge leaving from slot `s - 1`
//! (mod 4, slots counterclockwise).  Components of the diagram are placed
//! side by side in the plane, so each crossing component contributes all
//! of its faces except one local outer face, all of which merge into the
//! shared exterior.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{CircleOrientation, Diagram, DiagramError, EdgeLabel, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FaceId(pub usize);

/// Which side of an oriented edge a face occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// What a face is interior to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceComponent {
    /// the shared exterior face
    Exterior,
    /// interior face of the given crossing component
    Crossing(usize),
    /// interior of the given crossing-free circle
    Circle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: FaceId,
    /// edge sides around the face boundary, one entry per dart
    pub boundary: Vec<(EdgeLabel, Side)>,
    /// crossing-free circles bounding this face from inside
    pub circles: Vec<usize>,
    pub component: FaceComponent,
    pub winding: i64,
}

/// The face roles `a, b, c, d` at one crossing: `a` sits between the two
/// outgoing strand ends, `c` between the two incoming ends, `b` on the left
/// of both strands and `d` on the right.  Roles need not be distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexFaceRoles {
    pub crossing: usize,
    /// `[a, b, c, d]`
    pub roles: [FaceId; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStructure {
    faces: Vec<Face>,
    exterior: FaceId,
    roles: Vec<VertexFaceRoles>,
    /// unordered face pairs sharing an edge or a circle
    adjacency: BTreeSet<(usize, usize)>,
    /// final face of each dart (2*edge + 0 forward, +1 backward)
    dart_face: Vec<usize>,
}

impl FaceStructure {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id.0]
    }

    pub fn exterior(&self) -> FaceId {
        self.exterior
    }

    pub fn winding(&self, id: FaceId) -> i64 {
        self.faces[id.0].winding
    }

    pub fn windings(&self) -> Vec<i64> {
        self.faces.iter().map(|f| f.winding).collect()
    }

    pub fn roles(&self) -> &[VertexFaceRoles] {
        &self.roles
    }

    pub fn adjacent(&self, a: FaceId, b: FaceId) -> bool {
        let key = (a.0.min(b.0), a.0.max(b.0));
        a != b && self.adjacency.contains(&key)
    }

    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (FaceId, FaceId)> + '_ {
        self.adjacency.iter().map(|&(a, b)| (FaceId(a), FaceId(b)))
    }

    /// Deterministic reduction pair: the exterior face and the lowest-id
    /// face sharing an edge with it.
    pub fn default_reduce_pair(&self) -> Option<(FaceId, FaceId)> {
        let ext = self.exterior;
        self.adjacent_pairs().find(|&(a, b)| a == ext || b == ext).map(|(a, b)| {
            if a == ext {
                (ext, b)
            } else {
                (ext, a)
            }
        })
    }

    /// Face on the given side of an edge.
    pub fn side_face(&self, d: &Diagram, label: EdgeLabel, side: Side) -> Option<FaceId> {
        let e = d.edge_index(label)?;
        let dart = 2 * e + if side == Side::Left { 0 } else { 1 };
        Some(FaceId(self.dart_face[dart]))
    }

    /// Re-base the winding numbers so the given face becomes the exterior.
    /// All windings shift by a common constant; the face partition is
    /// unchanged.
    pub fn with_exterior(&self, f: FaceId) -> Result<FaceStructure, DiagramError> {
        if f.0 >= self.faces.len() {
            return Err(DiagramError::NoSuchFace(f.0));
        }
        let base = self.faces[f.0].winding;
        let mut out = self.clone();
        out.exterior = f;
        for face in &mut out.faces {
            face.winding -= base;
        }
        Ok(out)
    }

    /// Interior face sets per diagram component, crossing components first
    /// and then crossing-free circles.
    pub fn interior_faces_by_component(&self) -> Vec<Vec<FaceId>> {
        let mut by_comp: BTreeMap<(u8, usize), Vec<FaceId>> = BTreeMap::new();
        for f in &self.faces {
            match f.component {
                FaceComponent::Exterior => {}
                FaceComponent::Crossing(i) => by_comp.entry((0, i)).or_default().push(f.id),
                FaceComponent::Circle(i) => by_comp.entry((1, i)).or_default().push(f.id),
            }
        }
        by_comp.into_values().collect()
    }

    /// Stable JSON view with fields `faces`, `winding`, `exterior`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "faces": self.faces.iter().map(|f| serde_json::json!({
                "id": f.id.0,
                "boundary": f.boundary.iter().map(|(l, s)| serde_json::json!([l.0, match s { Side::Left => "L", Side::Right => "R" }])).collect::<Vec<_>>(),
                "circles": f.circles,
                "winding": f.winding,
            })).collect::<Vec<_>>(),
            "winding": self.faces.iter().map(|f| f.winding).collect::<Vec<_>>(),
            "exterior": self.exterior.0,
        })
    }
}

pub(super) fn build(d: &Diagram) -> Result<FaceStructure, DiagramError> {
    let ne = d.edges.len();
    let nc = d.crossings().len();

    // slot -> edge index
    let mut slot_edge = vec![[usize::MAX; 4]; nc];
    for (ei, e) in d.edges.iter().enumerate() {
        slot_edge[e.out.0][e.out.1] = ei;
        slot_edge[e.inc.0][e.inc.1] = ei;
    }

    // darts: 2e forward (out -> in), 2e+1 backward
    let head = |dart: usize| -> (usize, usize) {
        let e = &d.edges[dart / 2];
        if dart % 2 == 0 {
            e.inc
        } else {
            e.out
        }
    };
    // dart arriving at a slot
    let arriving = |c: usize, s: usize| -> usize {
        let ei = slot_edge[c][s];
        if d.edges[ei].inc == (c, s) {
            2 * ei
        } else {
            2 * ei + 1
        }
    };
    let next_dart = |dart: usize| -> usize {
        let (c, s) = head(dart);
        let s2 = (s + 3) % 4;
        let ei = slot_edge[c][s2];
        if d.edges[ei].out == (c, s2) {
            2 * ei
        } else {
            2 * ei + 1
        }
    };

    // trace raw faces
    let mut raw_of_dart = vec![usize::MAX; 2 * ne];
    let mut raw_faces: Vec<Vec<usize>> = Vec::new();
    for start in 0..2 * ne {
        if raw_of_dart[start] != usize::MAX {
            continue;
        }
        let id = raw_faces.len();
        let mut cycle = Vec::new();
        let mut dart = start;
        loop {
            raw_of_dart[dart] = id;
            cycle.push(dart);
            dart = next_dart(dart);
            if dart == start {
                break;
            }
        }
        raw_faces.push(cycle);
    }

    // crossing components and the per-component Euler check
    let comps = d.crossing_components();
    let comp_of_crossing: BTreeMap<usize, usize> = comps
        .iter()
        .enumerate()
        .flat_map(|(i, g)| g.iter().map(move |&c| (c, i)))
        .collect();
    let raw_comp: Vec<usize> = raw_faces
        .iter()
        .map(|cycle| comp_of_crossing[&head(cycle[0]).0])
        .collect();
    for (i, g) in comps.iter().enumerate() {
        let v = g.len() as i64;
        let f = raw_comp.iter().filter(|&&c| c == i).count() as i64;
        if v - 2 * v + f != 2 {
            return Err(DiagramError::NonPlanar);
        }
    }

    // local outer face of a component: the face on the right of its
    // minimum edge label (edges iterate in label order, first hit wins)
    let mut local_ext = vec![usize::MAX; comps.len()];
    for (ei, e) in d.edges.iter().enumerate() {
        let comp = comp_of_crossing[&e.out.0];
        if local_ext[comp] == usize::MAX {
            local_ext[comp] = raw_of_dart[2 * ei + 1];
        }
    }

    // final ids: merged exterior is 0, interiors follow in raw order, then
    // circle interiors
    let mut face_map = vec![usize::MAX; raw_faces.len()];
    let mut faces: Vec<Face> = Vec::new();
    faces.push(Face {
        id: FaceId(0),
        boundary: Vec::new(),
        circles: (0..d.unknots().len()).collect(),
        component: FaceComponent::Exterior,
        winding: 0,
    });
    for (raw, cycle) in raw_faces.iter().enumerate() {
        let is_ext = local_ext[raw_comp[raw]] == raw;
        let boundary: Vec<(EdgeLabel, Side)> = cycle
            .iter()
            .map(|&dart| {
                let e = &d.edges[dart / 2];
                (e.label, if dart % 2 == 0 { Side::Left } else { Side::Right })
            })
            .collect();
        if is_ext {
            face_map[raw] = 0;
            faces[0].boundary.extend(boundary);
        } else {
            let id = FaceId(faces.len());
            face_map[raw] = id.0;
            faces.push(Face {
                id,
                boundary,
                circles: Vec::new(),
                component: FaceComponent::Crossing(raw_comp[raw]),
                winding: 0,
            });
        }
    }
    let mut circle_face = Vec::new();
    for u in 0..d.unknots().len() {
        let id = FaceId(faces.len());
        circle_face.push(id);
        faces.push(Face {
            id,
            boundary: Vec::new(),
            circles: vec![u],
            component: FaceComponent::Circle(u),
            winding: 0,
        });
    }

    let dart_face: Vec<usize> = raw_of_dart.iter().map(|&r| face_map[r]).collect();

    // windings: crossing an edge from its right side to its left adds 1
    let mut winding: Vec<Option<i64>> = vec![None; faces.len()];
    winding[0] = Some(0);
    let mut relations: Vec<(usize, usize)> = Vec::new(); // (left, right)
    for ei in 0..ne {
        relations.push((dart_face[2 * ei], dart_face[2 * ei + 1]));
    }
    for (u, orient) in d.unknots().iter().enumerate() {
        match orient {
            CircleOrientation::Ccw => relations.push((circle_face[u].0, 0)),
            CircleOrientation::Cw => relations.push((0, circle_face[u].0)),
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(l, r) in &relations {
            match (winding[l], winding[r]) {
                (Some(wl), None) => {
                    winding[r] = Some(wl - 1);
                    changed = true;
                }
                (None, Some(wr)) => {
                    winding[l] = Some(wr + 1);
                    changed = true;
                }
                (Some(wl), Some(wr)) => {
                    if wl != wr + 1 {
                        return Err(DiagramError::InconsistentWinding);
                    }
                }
                (None, None) => {}
            }
        }
    }
    for (f, w) in winding.iter().enumerate() {
        faces[f].winding = w.ok_or(DiagramError::InconsistentWinding)?;
    }

    // face roles at each crossing: corner k lies between slots k and k+1
    // and belongs to the face of the dart arriving at slot k+1
    let mut roles = Vec::with_capacity(nc);
    for (ci, cr) in d.crossings().iter().enumerate() {
        let corner =
            |k: usize| -> FaceId { FaceId(dart_face[arriving(ci, (k + 1) % 4)]) };
        let r = match cr.sign {
            Sign::Positive => [corner(1), corner(2), corner(3), corner(0)],
            Sign::Negative => [corner(2), corner(3), corner(0), corner(1)],
        };
        roles.push(VertexFaceRoles { crossing: ci, roles: r });
    }

    let mut adjacency = BTreeSet::new();
    for &(l, r) in &relations {
        if l != r {
            adjacency.insert((l.min(r), l.max(r)));
        }
    }

    Ok(FaceStructure { faces, exterior: FaceId(0), roles, adjacency, dart_face })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn unknot_faces() {
        let d = parse_pd("U").unwrap();
        let fs = d.faces().unwrap();
        assert_eq!(fs.face_count(), 2);
        assert_eq!(fs.winding(FaceId(0)), 0);
        assert_eq!(fs.winding(FaceId(1)), 1);

        let d = parse_pd("U-").unwrap();
        let fs = d.faces().unwrap();
        assert_eq!(fs.winding(FaceId(1)), -1);
    }

    #[test]
    fn trefoil_faces() {
        let d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)").unwrap();
        let fs = d.faces().unwrap();
        assert_eq!(fs.face_count(), 5);
    }

    #[test]
    fn kink_faces() {
        let d = parse_pd("X(1,1,2,2)").unwrap();
        let fs = d.faces().unwrap();
        assert_eq!(fs.face_count(), 3);
        // one merged opposite pair at the single crossing
        let r = &fs.roles()[0].roles;
        assert_eq!(r[0], r[2]);
        assert_ne!(r[1], r[3]);
    }

    #[test]
    fn disjoint_trefoils_share_exterior() {
        let d = parse_pd(
            "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5),X(10,8,11,7),X(12,10,7,9),X(8,12,9,11)",
        )
        .unwrap();
        let fs = d.faces().unwrap();
        assert_eq!(fs.face_count(), 9);
        assert_eq!(d.component_count(), 2);
        let by_comp = fs.interior_faces_by_component();
        assert_eq!(by_comp.len(), 2);
        assert!(by_comp.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn two_circles() {
        let d = parse_pd("U,U").unwrap();
        let fs = d.faces().unwrap();
        assert_eq!(fs.face_count(), 3);
        assert_eq!(fs.windings(), vec![0, 1, 1]);
    }

    #[test]
    fn winding_shift_under_exterior_change() {
        let d = parse_pd("X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)").unwrap();
        let fs = d.faces().unwrap();
        for f in 0..fs.face_count() {
            let alt = fs.with_exterior(FaceId(f)).unwrap();
            let shift = fs.winding(FaceId(f));
            for g in 0..fs.face_count() {
                assert_eq!(alt.winding(FaceId(g)), fs.winding(FaceId(g)) - shift);
            }
            assert_eq!(alt.winding(FaceId(f)), 0);
        }
    }

    #[test]
    fn winding_pattern_at_roles() {
        // at every crossing the windings read (k-1, k, k-1, k-2) in role
        // order (a, b, c, d)
        for pd in [
            "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)",
            "X(8,4,1,3),X(6,1,7,2),X(4,8,5,7),X(2,5,3,6)",
            "X(1,1,2,2)",
            "X(1,2,2,1)",
            "X(2,3,1,4),X(3,2,4,1)",
        ] {
            let d = parse_pd(pd).unwrap();
            let fs = d.faces().unwrap();
            for vr in fs.roles() {
                let [a, b, c, dd] = vr.roles;
                let k = fs.winding(b);
                assert_eq!(fs.winding(a), k - 1, "{pd} crossing {}", vr.crossing);
                assert_eq!(fs.winding(c), k - 1);
                assert_eq!(fs.winding(dd), k - 2);
            }
        }
    }

    #[test]
    fn boundary_partitions_edge_sides() {
        let d = parse_pd("X(8,4,1,3),X(6,1,7,2),X(4,8,5,7),X(2,5,3,6)").unwrap();
        let fs = d.faces().unwrap();
        let mut seen = BTreeSet::new();
        for f in fs.faces() {
            for &(l, s) in &f.boundary {
                assert!(seen.insert((l, s == Side::Left)), "duplicated edge side");
            }
        }
        assert_eq!(seen.len(), 2 * d.edges.len());
    }

    #[test]
    fn euler_rejects_impossible_rotation() {
        // two circles crossing exactly once cannot be planar
        assert_eq!(parse_pd("X(1,2,1,2)"), Err(DiagramError::NonPlanar));
    }
}
