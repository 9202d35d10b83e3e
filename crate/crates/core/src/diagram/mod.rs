//! Oriented link diagrams as PD-coded 4-valent planar graphs: parsing and
//! validation, faces via the rotation system, winding numbers, crossing
//! signs, connected components and Reidemeister mutations.

mod faces;
mod moves;
mod parse;

pub use faces::{Face, FaceComponent, FaceId, FaceStructure, Side, VertexFaceRoles};
pub use moves::{mirror, r1_insert, r2_insert, random_mutation, R1Site};
pub use parse::parse_pd;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed PD syntax: {0}")]
    MalformedSyntax(String),
    #[error("edge label {0} appears {1} times, expected exactly 2")]
    LabelCount(u32, usize),
    #[error("face traversal contradicts the Euler formula")]
    NonPlanar,
    #[error("component orientations are inconsistent with the edge numbering")]
    OrientationInconsistent,
    #[error("edges {0} and {1} do not bound a common face")]
    EdgesNotCofacial(u32, u32),
    #[error("winding numbers are path dependent")]
    InconsistentWinding,
    #[error("no such edge label: {0}")]
    NoSuchEdge(u32),
    #[error("no such face: {0}")]
    NoSuchFace(usize),
    #[error("no such unknot component: {0}")]
    NoSuchUnknot(usize),
    #[error("faces {0} and {1} do not share an edge")]
    FacesNotAdjacent(usize, usize),
}

/// Label of one diagram arc between two crossing passages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeLabel(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A crossing `X(a, b, c, d)`: the four incident edges counterclockwise
/// starting from the incoming under-strand.  The sign is derived from the
/// tuple and the component orientations during validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub tuple: [EdgeLabel; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn sign(&self) -> Sign {
        self.sign
    }
}

/// Orientation of a crossing-free circle component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CircleOrientation {
    Ccw,
    Cw,
}

/// Where an edge passage attaches to a crossing: `(crossing, slot)`.
pub(crate) type SlotRef = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct EdgeInfo {
    pub label: EdgeLabel,
    /// slot where the edge leaves a crossing
    pub out: SlotRef,
    /// slot where the edge arrives at a crossing
    pub inc: SlotRef,
}

/// A validated oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    /// oriented cycles of consecutive labels, sorted by minimum label
    components: Vec<Vec<EdgeLabel>>,
    unknots: Vec<CircleOrientation>,
    pub(crate) edges: Vec<EdgeInfo>,
}

impl Diagram {
    /// Validate raw crossing tuples plus crossing-free circles into a
    /// diagram.  Checks label counts, orientation consistency with the
    /// numbering, and planarity.
    pub fn from_crossings(
        tuples: Vec<[u32; 4]>,
        unknots: Vec<CircleOrientation>,
    ) -> Result<Self, DiagramError> {
        parse::validate(tuples, unknots)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<EdgeLabel>] {
        &self.components
    }

    pub fn unknots(&self) -> &[CircleOrientation] {
        &self.unknots
    }

    pub fn unknot_count(&self) -> usize {
        self.unknots.len()
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = EdgeLabel> + '_ {
        self.edges.iter().map(|e| e.label)
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn positive_crossings(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign == Sign::Positive).count()
    }

    /// Faces, windings and crossing face-roles by rotation-system traversal.
    pub fn faces(&self) -> Result<FaceStructure, DiagramError> {
        faces::build(self)
    }

    /// PD text round-tripping through [`parse_pd`].
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                format!("X({},{},{},{})", c.tuple[0].0, c.tuple[1].0, c.tuple[2].0, c.tuple[3].0)
            })
            .collect();
        for u in &self.unknots {
            parts.push(match u {
                CircleOrientation::Ccw => "U".to_string(),
                CircleOrientation::Cw => "U-".to_string(),
            });
        }
        parts.join(",")
    }

    pub(crate) fn edge_index(&self, label: EdgeLabel) -> Option<usize> {
        self.edges.binary_search_by_key(&label, |e| e.label).ok()
    }

    pub fn max_label(&self) -> u32 {
        self.edges.last().map_or(0, |e| e.label.0)
    }

    /// Partition of crossings into connected components of the underlying
    /// 4-valent graph, sorted by minimum crossing index.
    pub fn crossing_components(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.out.0), find(&mut parent, e.inc.0));
            if a != b {
                parent[a] = b;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for c in 0..n {
            let root = find(&mut parent, c);
            groups.entry(root).or_default().push(c);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort_by_key(|g| g[0]);
        comps
    }

    /// Total number of diagram components (crossing components plus
    /// crossing-free circles).
    pub fn component_count(&self) -> usize {
        self.crossing_components().len() + self.unknots.len()
    }

    /// Stable JSON view with fields `crossings`, `components`, `unknots`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "crossings": self.crossings.iter().map(|c| [c.tuple[0].0, c.tuple[1].0, c.tuple[2].0, c.tuple[3].0]).collect::<Vec<_>>(),
            "components": self.components.iter().map(|c| c.iter().map(|l| l.0).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "unknots": self.unknots.iter().map(|u| match u { CircleOrientation::Ccw => "ccw", CircleOrientation::Cw => "cw" }).collect::<Vec<_>>(),
        })
    }
}
