//! Oriented link diagrams in planar-diagram form.
//!
//! A crossing lists its four incident edges counterclockwise, rotated so
//! that slots 0 and 1 carry the two incoming edges. The strands run
//! `0 -> 2` and `1 -> 3`; `over_first` tells whether the `0 -> 2` strand is
//! on top, which is exactly the case of a positive crossing.
//!
//! Edges are numbered in traversal order: the edges of one component occupy
//! a contiguous range and edge `e` flows into `e + 1` (the last edge of a
//! range flows back into the first). Crossingless circles come last, one
//! edge each.

mod pd;
mod seifert;
pub mod tangle;

use thiserror::Error;

pub use pd::{PdCode, PdCrossing};
pub use seifert::{MultiEdge, SeifertDecomposition, SeifertGraph};

pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("edge {0} does not appear exactly once as incoming and once as outgoing")]
    DanglingEdge(EdgeId),
    #[error("edge {0} is out of range")]
    UnknownEdge(EdgeId),
    #[error("crossing {0} does not have two adjacent incoming slots")]
    BadCrossing(usize),
    #[error("PD code: {0}")]
    Format(String),
    #[error("a Seifert circle meets itself at crossing {0}")]
    SelfTouchingCircle(usize),
    #[error("elementary torus link needs at least one crossing")]
    EmptyTorus,
    #[error("an antiparallel elementary torus link needs an even number of crossings")]
    OddAntiparallelTorus,
    #[error("expected {expected} orientation flags, got {got}")]
    OrientationCount { expected: usize, got: usize },
}

/// A crossing in normalized form: slots counterclockwise, 0 and 1 incoming.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [EdgeId; 4],
    pub over_first: bool,
}

impl Crossing {
    pub fn sign(&self) -> i32 {
        if self.over_first {
            1
        } else {
            -1
        }
    }

    /// Normalizes a crossing given in arbitrary counterclockwise rotation.
    ///
    /// `over_even` marks the strand through slots 0 and 2 as the upper one;
    /// `incoming` flags the slots whose edge enters the crossing.
    pub(crate) fn normalize(
        edges: [EdgeId; 4],
        over_even: bool,
        incoming: [bool; 4],
    ) -> Option<Self> {
        let r = (0..4).find(|&r| incoming[r] && incoming[(r + 1) % 4])?;
        if incoming[(r + 2) % 4] || incoming[(r + 3) % 4] {
            return None;
        }
        Some(Crossing {
            edges: std::array::from_fn(|i| edges[(i + r) % 4]),
            over_first: over_even == (r % 2 == 0),
        })
    }
}

/// Position of an edge end: crossing index and slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Port {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDiagram {
    crossings: Vec<Crossing>,
    /// `(first edge, length)` of each component that passes a crossing.
    ranges: Vec<(EdgeId, usize)>,
    free_loops: usize,
    heads: Vec<Port>,
    tails: Vec<Port>,
}

impl OrientedDiagram {
    /// The crossingless unknot: one closed edge.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(n: usize) -> Self {
        OrientedDiagram {
            crossings: Vec::new(),
            ranges: Vec::new(),
            free_loops: n,
            heads: Vec::new(),
            tails: Vec::new(),
        }
    }

    /// Builds a diagram from normalized crossings with arbitrary edge labels
    /// and relabels the edges in traversal order.
    ///
    /// Components are ordered by the first crossing (and incoming slot) they
    /// enter; each starts with that incoming edge.
    pub fn from_crossings(
        crossings: Vec<Crossing>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let n_edges = 2 * crossings.len();
        let mut head: Vec<Option<Port>> = vec![None; n_edges];
        let mut tail: Vec<Option<Port>> = vec![None; n_edges];
        for (x, c) in crossings.iter().enumerate() {
            for (slot, &e) in c.edges.iter().enumerate() {
                let table = if slot < 2 { &mut head } else { &mut tail };
                let cell = table.get_mut(e).ok_or(DiagramError::UnknownEdge(e))?;
                if cell.is_some() {
                    return Err(DiagramError::DanglingEdge(e));
                }
                *cell = Some(Port { crossing: x, slot });
            }
        }
        for e in 0..n_edges {
            if head[e].is_none() || tail[e].is_none() {
                return Err(DiagramError::DanglingEdge(e));
            }
        }
        let mut label: Vec<Option<EdgeId>> = vec![None; n_edges];
        let mut ranges = Vec::new();
        let mut next = 0;
        for x in 0..crossings.len() {
            for s in 0..2 {
                let start = crossings[x].edges[s];
                if label[start].is_some() {
                    continue;
                }
                let first = next;
                let mut e = start;
                loop {
                    label[e] = Some(next);
                    next += 1;
                    let h = head[e].unwrap();
                    e = crossings[h.crossing].edges[h.slot + 2];
                    if e == start {
                        break;
                    }
                }
                ranges.push((first, next - first));
            }
        }
        let crossings: Vec<Crossing> = crossings
            .into_iter()
            .map(|c| Crossing {
                edges: c.edges.map(|e| label[e].unwrap()),
                over_first: c.over_first,
            })
            .collect();
        Ok(Self::assemble(crossings, ranges, free_loops))
    }

    fn assemble(crossings: Vec<Crossing>, ranges: Vec<(EdgeId, usize)>, free_loops: usize) -> Self {
        let n = 2 * crossings.len();
        let dummy = Port {
            crossing: usize::MAX,
            slot: 0,
        };
        let mut heads = vec![dummy; n];
        let mut tails = vec![dummy; n];
        for (x, c) in crossings.iter().enumerate() {
            for (slot, &e) in c.edges.iter().enumerate() {
                if slot < 2 {
                    heads[e] = Port { crossing: x, slot };
                } else {
                    tails[e] = Port { crossing: x, slot };
                }
            }
        }
        OrientedDiagram {
            crossings,
            ranges,
            free_loops,
            heads,
            tails,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn negative_count(&self) -> usize {
        self.crossings.iter().filter(|c| !c.over_first).count()
    }

    /// Edges attached to crossings; free loops are numbered after these.
    pub fn crossing_edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.crossing_edge_count() + self.free_loops
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.ranges.len() + self.free_loops
    }

    /// Edge ids of every component in traversal order.
    pub fn components(&self) -> Vec<Vec<EdgeId>> {
        let mut out: Vec<Vec<EdgeId>> = self
            .ranges
            .iter()
            .map(|&(s, l)| (s..s + l).collect())
            .collect();
        let base = self.crossing_edge_count();
        out.extend((0..self.free_loops).map(|i| vec![base + i]));
        out
    }

    /// Component index of a crossing edge.
    pub fn component_of(&self, e: EdgeId) -> usize {
        self.ranges
            .iter()
            .position(|&(s, l)| e >= s && e < s + l)
            .unwrap_or_else(|| self.ranges.len() + (e - self.crossing_edge_count()))
    }

    /// Crossing slot where the edge ends.
    pub fn head(&self, e: EdgeId) -> Option<Port> {
        self.heads.get(e).copied()
    }

    /// Crossing slot where the edge starts.
    pub fn tail(&self, e: EdgeId) -> Option<Port> {
        self.tails.get(e).copied()
    }

    /// Sum of crossing signs, `c(D) - 2c^-(D)`.
    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(Crossing::sign).sum()
    }

    /// Flips every crossing; orientation is kept.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for c in &mut d.crossings {
            c.over_first = !c.over_first;
        }
        d
    }

    /// Reverses the orientation of every component flagged `true`, in the
    /// order reported by [`components`](Self::components).
    pub fn reverse_components(&self, flags: &[bool]) -> Result<Self, DiagramError> {
        if flags.len() != self.component_count() {
            return Err(DiagramError::OrientationCount {
                expected: self.component_count(),
                got: flags.len(),
            });
        }
        let flipped: Vec<bool> = (0..self.crossing_edge_count())
            .map(|e| flags[self.component_of(e)])
            .collect();
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(x, c)| {
                let incoming: [bool; 4] = std::array::from_fn(|s| (s < 2) != flipped[c.edges[s]]);
                Crossing::normalize(c.edges, c.over_first, incoming)
                    .ok_or(DiagramError::BadCrossing(x))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_crossings(crossings, self.free_loops)
    }

    /// Connected sum along edge `arc1` of `self` and edge `arc2` of `other`.
    ///
    /// The two edges are cut and reconnected crosswise, which keeps the
    /// orientations consistent. Summing along a crossingless circle simply
    /// absorbs it.
    pub fn connected_sum(
        &self,
        other: &Self,
        arc1: EdgeId,
        arc2: EdgeId,
    ) -> Result<Self, DiagramError> {
        if arc1 >= self.edge_count() {
            return Err(DiagramError::UnknownEdge(arc1));
        }
        if arc2 >= other.edge_count() {
            return Err(DiagramError::UnknownEdge(arc2));
        }
        let off = self.crossing_edge_count();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            edges: c.edges.map(|e| e + off),
            over_first: c.over_first,
        }));
        let mut loops = self.free_loops + other.free_loops;
        let loop1 = arc1 >= self.crossing_edge_count();
        let loop2 = arc2 >= other.crossing_edge_count();
        if loop1 || loop2 {
            loops -= 1;
        } else {
            let h1 = self.heads[arc1];
            let h2 = other.heads[arc2];
            let x2 = self.crossings.len() + h2.crossing;
            crossings[h1.crossing].edges[h1.slot] = arc2 + off;
            crossings[x2].edges[h2.slot] = arc1;
        }
        Self::from_crossings(crossings, loops)
    }

    /// Disjoint union, `other` placed beside `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.crossing_edge_count();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            edges: c.edges.map(|e| e + off),
            over_first: c.over_first,
        }));
        Self::from_crossings(crossings, self.free_loops + other.free_loops)
            .expect("union of valid diagrams is valid")
    }

    /// Switches crossing `x` from over to under; used for skein triples.
    pub fn switch_crossing(&self, x: usize) -> Self {
        let mut d = self.clone();
        d.crossings[x].over_first = !d.crossings[x].over_first;
        d
    }

    /// Oriented smoothing of crossing `x`.
    pub fn smooth_crossing(&self, x: usize) -> Self {
        // edge in slot 0 continues into slot 3, slot 1 into slot 2
        let c = self.crossings[x];
        let mut loops = self.free_loops;
        let mut crossings: Vec<Crossing> = self.crossings.clone();
        let mut merge = |crossings: &mut Vec<Crossing>, into: EdgeId, out: EdgeId| {
            if into == out {
                loops += 1;
                return;
            }
            // the head of `out` becomes the head of `into`
            for (y, cy) in crossings.iter_mut().enumerate() {
                if y == x {
                    continue;
                }
                for s in 0..2 {
                    if cy.edges[s] == out {
                        cy.edges[s] = into;
                    }
                }
            }
        };
        let (in0, in1, out2, out3) = (c.edges[0], c.edges[1], c.edges[2], c.edges[3]);
        merge(&mut crossings, in0, out3);
        let in1 = if out3 == in1 { in0 } else { in1 };
        merge(&mut crossings, in1, out2);
        crossings.remove(x);
        // relabel to a dense range before validation
        let mut used: Vec<EdgeId> = crossings.iter().flat_map(|c| c.edges).collect();
        used.sort_unstable();
        used.dedup();
        let crossings = crossings
            .into_iter()
            .map(|c| Crossing {
                edges: c.edges.map(|e| used.binary_search(&e).unwrap()),
                over_first: c.over_first,
            })
            .collect();
        Self::from_crossings(crossings, loops).expect("smoothing keeps a valid diagram")
    }

    /// Whether over and under alternate along every edge.
    pub fn is_alternating(&self) -> bool {
        let over = |p: Port| {
            let c = self.crossings[p.crossing];
            p.slot.is_multiple_of(2) == c.over_first
        };
        (0..self.crossing_edge_count()).all(|e| over(self.heads[e]) != over(self.tails[e]))
    }

    pub fn seifert_decompose(&self) -> Result<SeifertDecomposition, DiagramError> {
        SeifertDecomposition::new(self)
    }

    pub fn seifert_circle_count(&self) -> usize {
        self.seifert_decompose()
            .map(|s| s.circle_count())
            .unwrap_or(0)
    }

    /// Crossings with their edges relabeled into a fresh range; used by the
    /// HOMFLY engine.
    pub(crate) fn raw_parts(&self) -> (&[Crossing], usize) {
        (&self.crossings, self.free_loops)
    }
}

/// Two strands twisted `m` times with all crossings positive.
///
/// With `parallel` both strands run the same way through the twists and the
/// diagram has two Seifert circles; otherwise (`m` even) they run opposite.
pub fn build_elementary_torus(m: usize, parallel: bool) -> Result<OrientedDiagram, DiagramError> {
    if m == 0 {
        return Err(DiagramError::EmptyTorus);
    }
    if !parallel && m % 2 == 1 {
        return Err(DiagramError::OddAntiparallelTorus);
    }
    // closure of the 2-braid sigma^m: strand i enters crossing i on slot 0 or 1
    let mut crossings = Vec::with_capacity(m);
    for i in 0..m {
        let (a_in, b_in) = (2 * i, 2 * i + 1);
        let (a_out, b_out) = ((2 * i + 2) % (2 * m), (2 * i + 3) % (2 * m));
        // the left strand crosses to the right: in slots (0,1) ccw, out (2,3)
        crossings.push(Crossing {
            edges: [a_in, b_in, b_out, a_out],
            over_first: true,
        });
    }
    let d = OrientedDiagram::from_crossings(crossings, 0)?;
    if parallel {
        return Ok(d);
    }
    let mut flags = vec![false; d.component_count()];
    flags[1] = true;
    let r = d.reverse_components(&flags)?;
    // reversing one strand flips every sign
    Ok(r.mirror())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> OrientedDiagram {
        build_elementary_torus(3, true).unwrap()
    }

    #[test]
    fn torus_builder_counts() {
        let hopf = build_elementary_torus(2, true).unwrap();
        assert_eq!(hopf.writhe(), 2);
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.seifert_circle_count(), 2);

        let t = trefoil();
        assert_eq!(t.writhe(), 3);
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.seifert_circle_count(), 2);

        let one = build_elementary_torus(1, true).unwrap();
        assert_eq!(one.component_count(), 1);
        let sd = one.seifert_decompose().unwrap();
        assert_eq!(sd.circle_count(), 2);
        let g = sd.graph();
        assert_eq!(g.lone_edges().count(), 1);

        assert_eq!(
            build_elementary_torus(0, true),
            Err(DiagramError::EmptyTorus)
        );
        assert_eq!(
            build_elementary_torus(3, false),
            Err(DiagramError::OddAntiparallelTorus)
        );

        let anti = build_elementary_torus(4, false).unwrap();
        assert_eq!(anti.writhe(), 4);
        assert_eq!(anti.seifert_circle_count(), 4);
    }

    #[test]
    fn writhe_identity_and_mirror() {
        let t = trefoil();
        let m = t.mirror();
        assert_eq!(m.writhe(), -3);
        assert_eq!(m.seifert_circle_count(), t.seifert_circle_count());
        for d in [t, m] {
            let c = d.crossing_count() as i32;
            assert_eq!(d.writhe(), c - 2 * d.negative_count() as i32);
        }
    }

    #[test]
    fn unknot_is_one_closed_edge() {
        let u = OrientedDiagram::unknot();
        assert_eq!(u.edge_count(), 1);
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.writhe(), 0);
        assert_eq!(u.seifert_circle_count(), 1);
    }

    #[test]
    fn connected_sums() {
        let t = trefoil();
        let tt = t.connected_sum(&t, 0, 0).unwrap();
        assert_eq!(tt.crossing_count(), 6);
        assert_eq!(tt.component_count(), 1);
        assert_eq!(tt.seifert_circle_count(), 3);
        let tm = t.connected_sum(&t.mirror(), 2, 5).unwrap();
        assert_eq!(tm.writhe(), 0);
        let ut = OrientedDiagram::unknot().connected_sum(&t, 0, 1).unwrap();
        assert_eq!(ut, t);
        assert!(t.connected_sum(&t, 99, 0).is_err());
    }

    #[test]
    fn hopf_chain_seifert_graph() {
        let h = build_elementary_torus(2, true).unwrap();
        let hh = h.connected_sum(&h, 0, 0).unwrap();
        let g = hh.seifert_decompose().unwrap().graph();
        assert_eq!(g.vertex_count(), 3);
        let mut mult: Vec<usize> = g.edges().iter().map(|m| m.crossings.len()).collect();
        mult.sort();
        assert_eq!(mult, vec![2, 2]);
        assert!(g.is_connected());
        assert!(g.is_bipartite());
    }

    #[test]
    fn reversing_a_component_of_hopf_flips_signs() {
        let h = build_elementary_torus(2, true).unwrap();
        let r = h.reverse_components(&[false, true]).unwrap();
        assert_eq!(r.writhe(), -2);
        let both = h.reverse_components(&[true, true]).unwrap();
        assert_eq!(both.writhe(), 2);
        assert!(h.reverse_components(&[true]).is_err());
    }

    #[test]
    fn smoothing_a_hopf_crossing_gives_an_unknot_diagram() {
        let h = build_elementary_torus(2, true).unwrap();
        let s = h.smooth_crossing(0);
        assert_eq!(s.crossing_count(), 1);
        assert_eq!(s.component_count(), 1);
        let ss = s.smooth_crossing(0);
        assert_eq!(ss.crossing_count(), 0);
        assert_eq!(ss.component_count(), 2);
    }
}
