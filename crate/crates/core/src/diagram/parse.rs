//! PD text parsing and structural validation.
//!
//! Accepted syntax: comma separated `X(a,b,c,d)` terms plus `U` (a
//! counterclockwise crossing-free circle) and `U-` (clockwise).  Validation
//! resolves strand orientations from the convention that edge labels run
//! consecutively along each component, derives crossing signs, and rejects
//! non-planar rotation systems through the face-count Euler check.

use std::collections::BTreeMap;

use super::{
    CircleOrientation, Crossing, Diagram, DiagramError, EdgeInfo, EdgeLabel, Sign, SlotRef,
};

pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let mut tuples = Vec::new();
    let mut unknots = Vec::new();
    let src = text.trim();
    if src.is_empty() {
        return Err(DiagramError::MalformedSyntax("empty diagram".into()));
    }
    let mut rest = src;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if let Some(tail) = rest.strip_prefix('X') {
            let tail = tail.trim_start();
            let Some(tail) = tail.strip_prefix('(') else {
                return Err(DiagramError::MalformedSyntax(format!("expected '(' in {rest:?}")));
            };
            let Some(close) = tail.find(')') else {
                return Err(DiagramError::MalformedSyntax("unclosed X(...)".into()));
            };
            let inner = &tail[..close];
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            if parts.len() != 4 {
                return Err(DiagramError::MalformedSyntax(format!(
                    "crossing needs 4 labels, got {}",
                    parts.len()
                )));
            }
            let mut tuple = [0u32; 4];
            for (slot, p) in parts.iter().enumerate() {
                tuple[slot] = p
                    .parse::<u32>()
                    .ok()
                    .filter(|&l| l > 0)
                    .ok_or_else(|| DiagramError::MalformedSyntax(format!("bad label {p:?}")))?;
            }
            tuples.push(tuple);
            rest = &tail[close + 1..];
        } else if let Some(tail) = rest.strip_prefix("U-") {
            unknots.push(CircleOrientation::Cw);
            rest = tail;
        } else if let Some(tail) = rest.strip_prefix("U+") {
            unknots.push(CircleOrientation::Ccw);
            rest = tail;
        } else if let Some(tail) = rest.strip_prefix('U') {
            unknots.push(CircleOrientation::Ccw);
            rest = tail;
        } else {
            return Err(DiagramError::MalformedSyntax(format!("unexpected input at {rest:?}")));
        }
        rest = rest.trim_start();
        if let Some(tail) = rest.strip_prefix(',') {
            rest = tail;
        } else if !rest.is_empty() {
            return Err(DiagramError::MalformedSyntax(format!("expected ',' at {rest:?}")));
        }
    }
    validate(tuples, unknots)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    In,
    Out,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::In => Dir::Out,
            Dir::Out => Dir::In,
        }
    }
}

pub(super) fn validate(
    tuples: Vec<[u32; 4]>,
    unknots: Vec<CircleOrientation>,
) -> Result<Diagram, DiagramError> {
    if tuples.is_empty() && unknots.is_empty() {
        return Err(DiagramError::MalformedSyntax("empty diagram".into()));
    }

    // every label appears exactly twice
    let mut occ: BTreeMap<u32, Vec<SlotRef>> = BTreeMap::new();
    for (ci, t) in tuples.iter().enumerate() {
        for (slot, &l) in t.iter().enumerate() {
            occ.entry(l).or_default().push((ci, slot));
        }
    }
    for (&l, slots) in &occ {
        if slots.len() != 2 {
            return Err(DiagramError::LabelCount(l, slots.len()));
        }
    }

    // resolve passage directions: the under strand arrives at slot 0 and
    // leaves at slot 2; over slots are settled by propagation, falling back
    // to the numbering for components that pass over everywhere
    let nc = tuples.len();
    let mut dir: Vec<[Option<Dir>; 4]> = vec![[None; 4]; nc];
    let mut queue: Vec<(usize, usize, Dir)> = Vec::new();
    for ci in 0..nc {
        queue.push((ci, 0, Dir::In));
        queue.push((ci, 2, Dir::Out));
    }
    let mut settle =
        |dir: &mut Vec<[Option<Dir>; 4]>, queue: &mut Vec<(usize, usize, Dir)>| -> Result<(), DiagramError> {
            while let Some((ci, slot, d)) = queue.pop() {
                match dir[ci][slot] {
                    Some(existing) if existing == d => continue,
                    Some(_) => return Err(DiagramError::OrientationInconsistent),
                    None => dir[ci][slot] = Some(d),
                }
                // the partner occurrence of the same label runs the other way
                let label = tuples[ci][slot];
                for &(cj, sj) in &occ[&label] {
                    if (cj, sj) != (ci, slot) {
                        queue.push((cj, sj, d.flip()));
                    }
                }
                // the over strand passes through slots 1 and 3
                if slot == 1 || slot == 3 {
                    queue.push((ci, 4 - slot, d.flip()));
                }
            }
            Ok(())
        };
    settle(&mut dir, &mut queue)?;
    // undecided over pairs: orient by consecutive numbering (smaller label
    // arrives), taking the larger label as arriving on a wraparound
    for ci in 0..nc {
        if dir[ci][1].is_some() {
            continue;
        }
        let (l1, l3) = (tuples[ci][1], tuples[ci][3]);
        let in_slot = if l3 == l1 + 1 {
            1
        } else if l1 == l3 + 1 {
            3
        } else if l1 > l3 {
            1
        } else {
            3
        };
        queue.push((ci, in_slot, Dir::In));
        settle(&mut dir, &mut queue)?;
    }

    // successor map: the out label continuing each in label
    let mut succ: BTreeMap<u32, u32> = BTreeMap::new();
    for ci in 0..nc {
        let t = tuples[ci];
        let mut link = |a: u32, b: u32| -> Result<(), DiagramError> {
            if succ.insert(a, b).is_some() {
                return Err(DiagramError::OrientationInconsistent);
            }
            Ok(())
        };
        link(t[0], t[2])?;
        match (dir[ci][1], dir[ci][3]) {
            (Some(Dir::In), Some(Dir::Out)) => link(t[1], t[3])?,
            (Some(Dir::Out), Some(Dir::In)) => link(t[3], t[1])?,
            _ => return Err(DiagramError::OrientationInconsistent),
        }
    }

    // cycles must be consecutive runs of labels
    let mut components: Vec<Vec<EdgeLabel>> = Vec::new();
    let mut seen: BTreeMap<u32, bool> = occ.keys().map(|&l| (l, false)).collect();
    for &start in occ.keys() {
        if seen[&start] {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start, true);
        let mut cur = start;
        loop {
            let next = *succ.get(&cur).ok_or(DiagramError::OrientationInconsistent)?;
            if next == start {
                break;
            }
            if seen[&next] {
                return Err(DiagramError::OrientationInconsistent);
            }
            seen.insert(next, true);
            cycle.push(next);
            cur = next;
        }
        let min = *cycle.iter().min().unwrap();
        let max = *cycle.iter().max().unwrap();
        if (max - min + 1) as usize != cycle.len() {
            return Err(DiagramError::OrientationInconsistent);
        }
        // start == min by iteration order, so the walk must read min..=max
        for (k, &l) in cycle.iter().enumerate() {
            if l != min + k as u32 {
                return Err(DiagramError::OrientationInconsistent);
            }
        }
        components.push(cycle.into_iter().map(EdgeLabel).collect());
    }

    // signs: positive exactly when the over strand arrives at slot 3
    let crossings: Vec<Crossing> = tuples
        .iter()
        .enumerate()
        .map(|(ci, t)| Crossing {
            tuple: [EdgeLabel(t[0]), EdgeLabel(t[1]), EdgeLabel(t[2]), EdgeLabel(t[3])],
            sign: if dir[ci][3] == Some(Dir::In) { Sign::Positive } else { Sign::Negative },
        })
        .collect();

    // edge table keyed by label
    let mut edges = Vec::with_capacity(occ.len());
    for (&label, slots) in &occ {
        let mut out = None;
        let mut inc = None;
        for &(ci, slot) in slots {
            match dir[ci][slot] {
                Some(Dir::In) => inc = Some((ci, slot)),
                Some(Dir::Out) => out = Some((ci, slot)),
                None => return Err(DiagramError::OrientationInconsistent),
            }
        }
        match (out, inc) {
            (Some(out), Some(inc)) => {
                edges.push(EdgeInfo { label: EdgeLabel(label), out, inc })
            }
            _ => return Err(DiagramError::OrientationInconsistent),
        }
    }

    let d = Diagram { crossings, components, unknots, edges };
    d.faces()?; // planarity gate
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_token() {
        let d = parse_pd("U").unwrap();
        assert_eq!(d.crossings().len(), 0);
        assert_eq!(d.unknot_count(), 1);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
    }

    #[test]
    fn trefoil_left() {
        let d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)").unwrap();
        assert_eq!(d.crossings().len(), 3);
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.writhe(), -3);
        assert!(d.crossings().iter().all(|c| c.sign == Sign::Negative));
    }

    #[test]
    fn trefoil_right_all_positive() {
        let d = parse_pd("X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)").unwrap();
        assert_eq!(d.writhe(), 3);
        assert!(d.crossings().iter().all(|c| c.sign == Sign::Positive));
    }

    #[test]
    fn repeated_crossing_is_inconsistent() {
        let err = parse_pd("X(1,2,3,4),X(1,2,3,4)").unwrap_err();
        assert!(matches!(
            err,
            DiagramError::OrientationInconsistent | DiagramError::LabelCount(..)
        ));
    }

    #[test]
    fn kinks() {
        let pos = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(pos.writhe(), 1);
        let neg = parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!(neg.writhe(), -1);
    }

    #[test]
    fn figure_eight_writhe_zero() {
        let d = parse_pd("X(8,4,1,3),X(6,1,7,2),X(4,8,5,7),X(2,5,3,6)").unwrap();
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.positive_crossings(), 2);
        assert_eq!(d.components().len(), 1);
    }

    #[test]
    fn hopf_links() {
        let pos = parse_pd("X(2,3,1,4),X(3,2,4,1)").unwrap();
        assert_eq!(pos.writhe(), 2);
        assert_eq!(pos.components().len(), 2);
        let neg = parse_pd("X(4,2,3,1),X(1,3,2,4)").unwrap();
        assert_eq!(neg.writhe(), -2);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_pd("X(1,2,3)"), Err(DiagramError::MalformedSyntax(_))));
        assert!(matches!(parse_pd(""), Err(DiagramError::MalformedSyntax(_))));
        assert!(matches!(parse_pd("X(1,2,3,4) X(5,6,7,8)"), Err(DiagramError::MalformedSyntax(_))));
        assert!(matches!(parse_pd("Y(1,2,3,4)"), Err(DiagramError::MalformedSyntax(_))));
        assert!(matches!(parse_pd("X(0,1,2,3)"), Err(DiagramError::MalformedSyntax(_))));
    }

    #[test]
    fn label_count_errors() {
        assert!(matches!(parse_pd("X(1,1,1,2)"), Err(DiagramError::LabelCount(1, 3))));
        assert!(matches!(parse_pd("X(1,2,3,4)"), Err(DiagramError::LabelCount(_, 1))));
    }

    #[test]
    fn round_trip() {
        for pd in [
            "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)",
            "X(1,1,2,2),U,U-",
            "X(2,3,1,4),X(3,2,4,1)",
        ] {
            let d = parse_pd(pd).unwrap();
            assert_eq!(d.to_pd_string(), pd);
            assert_eq!(parse_pd(&d.to_pd_string()).unwrap(), d);
        }
    }

    #[test]
    fn whitespace_tolerated() {
        let d = parse_pd(" X(4,2,5,1), X(6,4,1,3) ,X(2,6,3,5) ").unwrap();
        assert_eq!(d.crossings().len(), 3);
    }
}
