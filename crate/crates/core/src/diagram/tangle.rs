//! Planar tangles with four ends and their closures.
//!
//! A tangle is a set of crossings joined by wires through auxiliary nodes.
//! The four ends NW, NE, SW, SE are always auxiliary nodes of degree one
//! until they are wired to something else. Twisting adds one crossing on
//! the right (horizontal) or at the bottom (vertical); all crossings share a
//! single over/under type, so twisting with positive counts keeps the
//! diagram alternating.

use super::{Crossing, DiagramError, EdgeId, OrientedDiagram};

pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SW: usize = 2;
pub const SE: usize = 3;

/// Over/under type shared by every built crossing: with the local slots
/// `NW, SW, SE, NE` counterclockwise, the SW-NE strand is on top.
const OVER_EVEN: bool = false;

/// Where a crossing came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingTag {
    /// Entry `entry` (0-based) of the continued fraction of tangle `tangle`.
    Entry { tangle: usize, entry: usize },
    /// One of the extra horizontal half twists.
    Twist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Slot(usize, usize),
    Aux,
}

#[derive(Clone, Debug)]
struct Marked {
    tangle: usize,
    ports: [usize; 4],
    inner: [usize; 4],
}

#[derive(Clone, Debug)]
pub struct Tangle {
    nodes: Vec<Node>,
    wires: Vec<(usize, usize)>,
    crossings: Vec<CrossingTag>,
    ports: [usize; 4],
    marked: Vec<Marked>,
}

impl Tangle {
    fn aux(&mut self) -> usize {
        self.nodes.push(Node::Aux);
        self.nodes.len() - 1
    }

    fn empty() -> Self {
        let mut t = Tangle {
            nodes: Vec::new(),
            wires: Vec::new(),
            crossings: Vec::new(),
            ports: [0; 4],
            marked: Vec::new(),
        };
        for i in 0..4 {
            t.ports[i] = t.aux();
        }
        t
    }

    /// Two vertical arcs, NW-SW and NE-SE.
    pub fn infinity() -> Self {
        let mut t = Self::empty();
        t.wires.push((t.ports[NW], t.ports[SW]));
        t.wires.push((t.ports[NE], t.ports[SE]));
        t
    }

    /// Two horizontal arcs, NW-NE and SW-SE.
    pub fn zero() -> Self {
        let mut t = Self::empty();
        t.wires.push((t.ports[NW], t.ports[NE]));
        t.wires.push((t.ports[SW], t.ports[SE]));
        t
    }

    /// Adds a crossing and returns the nodes of its local `NW, SW, SE, NE`.
    fn add_crossing(&mut self, tag: CrossingTag) -> [usize; 4] {
        let x = self.crossings.len();
        self.crossings.push(tag);
        std::array::from_fn(|s| {
            self.nodes.push(Node::Slot(x, s));
            self.nodes.len() - 1
        })
    }

    /// One crossing to the right of the tangle.
    pub fn twist_horizontal(&mut self, tag: CrossingTag) {
        let [c_nw, c_sw, c_se, c_ne] = self.add_crossing(tag);
        self.wires.push((self.ports[NE], c_nw));
        self.wires.push((self.ports[SE], c_sw));
        let (ne, se) = (self.aux(), self.aux());
        self.wires.push((ne, c_ne));
        self.wires.push((se, c_se));
        self.ports[NE] = ne;
        self.ports[SE] = se;
    }

    /// One crossing below the tangle.
    pub fn twist_vertical(&mut self, tag: CrossingTag) {
        let [c_nw, c_sw, c_se, c_ne] = self.add_crossing(tag);
        self.wires.push((self.ports[SW], c_nw));
        self.wires.push((self.ports[SE], c_ne));
        let (sw, se) = (self.aux(), self.aux());
        self.wires.push((sw, c_sw));
        self.wires.push((se, c_se));
        self.ports[SW] = sw;
        self.ports[SE] = se;
    }

    /// The rational tangle of a positive continued fraction `(a_1, ..., a_n)`
    /// with odd `n`: starting from the vertical arcs, entry `a_i` adds
    /// vertical twists for odd `i` and horizontal twists for even `i`, from
    /// `a_n` down to `a_1`.
    pub fn rational(entries: &[u32], tangle: usize) -> Self {
        let mut t = Self::infinity();
        for (i, &a) in entries.iter().enumerate().rev() {
            let tag = CrossingTag::Entry { tangle, entry: i };
            for _ in 0..a {
                if i % 2 == 0 {
                    t.twist_vertical(tag);
                } else {
                    t.twist_horizontal(tag);
                }
            }
        }
        t.mark(tangle);
        t
    }

    /// `e` horizontal half twists.
    pub fn integer(e: u32) -> Self {
        let mut t = Self::zero();
        for _ in 0..e {
            t.twist_horizontal(CrossingTag::Twist);
        }
        t
    }

    /// Records the current ends as the boundary of tangle `tangle`.
    fn mark(&mut self, tangle: usize) {
        let inner = self.ports.map(|p| {
            let w = self
                .wires
                .iter()
                .find(|w| w.0 == p || w.1 == p)
                .expect("every end is wired");
            if w.0 == p {
                w.1
            } else {
                w.0
            }
        });
        self.marked.push(Marked {
            tangle,
            ports: self.ports,
            inner,
        });
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Places `other` to the right, joining NE to NW and SE to SW.
    pub fn sum(mut self, other: Tangle) -> Tangle {
        let off = self.nodes.len();
        let xoff = self.crossings.len();
        self.nodes.extend(other.nodes.iter().map(|n| match *n {
            Node::Slot(x, s) => Node::Slot(x + xoff, s),
            Node::Aux => Node::Aux,
        }));
        self.wires
            .extend(other.wires.iter().map(|&(a, b)| (a + off, b + off)));
        self.crossings.extend(other.crossings);
        self.marked.extend(other.marked.into_iter().map(|m| Marked {
            tangle: m.tangle,
            ports: m.ports.map(|p| p + off),
            inner: m.inner.map(|p| p + off),
        }));
        let op = other.ports.map(|p| p + off);
        self.wires.push((self.ports[NE], op[NW]));
        self.wires.push((self.ports[SE], op[SW]));
        self.ports[NE] = op[NE];
        self.ports[SE] = op[SE];
        self
    }

    /// Joins NW to NE and SW to SE. The top arc is the reference strand,
    /// oriented from NE to NW.
    pub fn numerator(mut self) -> ClosedTangle {
        self.wires.push((self.ports[NE], self.ports[NW]));
        self.wires.push((self.ports[SW], self.ports[SE]));
        let reference = (self.ports[NE], self.ports[NW]);
        ClosedTangle::new(self, reference)
    }

    /// Joins NW to SW and NE to SE. The left arc is the reference strand,
    /// oriented from NW to SW.
    pub fn denominator(mut self) -> ClosedTangle {
        self.wires.push((self.ports[NW], self.ports[SW]));
        self.wires.push((self.ports[NE], self.ports[SE]));
        let reference = (self.ports[NW], self.ports[SW]);
        ClosedTangle::new(self, reference)
    }
}

/// A crossing-to-crossing path through auxiliary nodes.
#[derive(Clone, Debug)]
struct Path {
    a: (usize, usize),
    b: (usize, usize),
    /// Nodes from the `a` slot to the `b` slot, both slot nodes included.
    nodes: Vec<usize>,
}

/// A closed tangle diagram without orientation.
#[derive(Clone, Debug)]
pub struct ClosedTangle {
    crossings: Vec<CrossingTag>,
    paths: Vec<Path>,
    /// `path_at[x][s]`: path ending at slot `s` of crossing `x`.
    path_at: Vec<[usize; 4]>,
    free_loops: usize,
    /// Components as `(path, forward)` runs in their base direction.
    components: Vec<Vec<(usize, bool)>>,
    reference: usize,
    marked: Vec<Marked>,
    /// For every auxiliary node on a path, `(path, position)`.
    node_pos: Vec<Option<(usize, usize)>>,
}

impl ClosedTangle {
    fn new(t: Tangle, reference: (usize, usize)) -> Self {
        let n = t.nodes.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (w, &(a, b)) in t.wires.iter().enumerate() {
            adj[a].push((b, w));
            adj[b].push((a, w));
        }
        let mut used_wire = vec![false; t.wires.len()];
        let mut paths = Vec::new();
        let mut path_at = vec![[usize::MAX; 4]; t.crossings.len()];
        let mut node_pos = vec![None; n];
        for start in 0..n {
            let Node::Slot(x0, s0) = t.nodes[start] else {
                continue;
            };
            if path_at[x0][s0] != usize::MAX {
                continue;
            }
            let id = paths.len();
            let mut nodes = vec![start];
            let (mut cur, mut w) = adj[start][0];
            used_wire[w] = true;
            while let Node::Aux = t.nodes[cur] {
                node_pos[cur] = Some((id, nodes.len()));
                nodes.push(cur);
                let &(next, nw) = adj[cur]
                    .iter()
                    .find(|&&(_, ww)| ww != w)
                    .expect("aux nodes have degree two");
                used_wire[nw] = true;
                cur = next;
                w = nw;
            }
            let Node::Slot(x1, s1) = t.nodes[cur] else {
                unreachable!()
            };
            nodes.push(cur);
            path_at[x0][s0] = id;
            path_at[x1][s1] = id;
            paths.push(Path {
                a: (x0, s0),
                b: (x1, s1),
                nodes,
            });
        }
        // closed wires that never meet a crossing
        let mut free_loops = 0;
        for w0 in 0..t.wires.len() {
            if used_wire[w0] {
                continue;
            }
            free_loops += 1;
            let (mut cur, mut w) = (t.wires[w0].1, w0);
            used_wire[w0] = true;
            loop {
                let &(next, nw) = adj[cur]
                    .iter()
                    .find(|&&(_, ww)| ww != w)
                    .unwrap_or(&adj[cur][0]);
                if used_wire[nw] {
                    break;
                }
                used_wire[nw] = true;
                cur = next;
                w = nw;
            }
        }
        // strands: leave slot s, arrive at slot s', continue from s' + 2
        let mut visited = vec![false; paths.len()];
        let mut components = Vec::new();
        for x in 0..t.crossings.len() {
            for s in 0..4 {
                let p0 = path_at[x][s];
                if visited[p0] {
                    continue;
                }
                let mut comp = Vec::new();
                let (mut cx, mut cs) = (x, s);
                loop {
                    let p = path_at[cx][cs];
                    if visited[p] {
                        break;
                    }
                    visited[p] = true;
                    let forward = paths[p].a == (cx, cs);
                    comp.push((p, forward));
                    let (hx, hs) = if forward { paths[p].b } else { paths[p].a };
                    cx = hx;
                    cs = (hs + 2) % 4;
                }
                components.push(comp);
            }
        }
        let mut closed = ClosedTangle {
            crossings: t.crossings,
            paths,
            path_at,
            free_loops,
            components,
            reference: usize::MAX,
            marked: t.marked,
            node_pos,
        };
        if let (Some((p, i)), Some((q, j))) =
            (closed.node_pos[reference.0], closed.node_pos[reference.1])
        {
            debug_assert_eq!(p, q);
            let k = closed
                .components
                .iter()
                .position(|c| c.iter().any(|&(pp, _)| pp == p))
                .unwrap();
            let fwd = closed.components[k]
                .iter()
                .find(|&&(pp, _)| pp == p)
                .unwrap()
                .1;
            if (i < j) != fwd {
                closed.components[k] = reverse_run(&closed.components[k]);
            }
            // reference component first
            let c = closed.components.remove(k);
            closed.components.insert(0, c);
            closed.reference = 0;
        }
        closed
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Components including crossingless circles.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    /// Number of orientations with the reference strand fixed.
    pub fn orientation_count(&self) -> usize {
        1 << self.components.len().saturating_sub(1)
    }

    /// Orients the diagram. Bit `i` of `choice` reverses the `(i + 1)`-th
    /// component relative to its base direction.
    pub fn orient(&self, choice: usize) -> Result<TangleDiagram, DiagramError> {
        if choice >= self.orientation_count() {
            return Err(DiagramError::OrientationCount {
                expected: self.orientation_count(),
                got: choice,
            });
        }
        let mut forward = vec![true; self.paths.len()];
        for (k, comp) in self.components.iter().enumerate() {
            let flip = k > 0 && (choice >> (k - 1)) & 1 == 1;
            for &(p, f) in comp {
                forward[p] = f != flip;
            }
        }
        let mut incoming = vec![[false; 4]; self.crossings.len()];
        for (p, path) in self.paths.iter().enumerate() {
            let (x, s) = if forward[p] { path.b } else { path.a };
            incoming[x][s] = true;
        }
        let raw: Vec<Crossing> = (0..self.crossings.len())
            .map(|x| {
                Crossing::normalize(self.path_at[x], OVER_EVEN, incoming[x])
                    .ok_or(DiagramError::BadCrossing(x))
            })
            .collect::<Result<_, _>>()?;
        let diagram = OrientedDiagram::from_crossings(raw.clone(), self.free_loops)?;
        let mut label = vec![0; self.paths.len()];
        for (x, c) in raw.iter().enumerate() {
            for s in 0..4 {
                label[c.edges[s]] = diagram.crossings()[x].edges[s];
            }
        }
        let mut edge_ports = vec![Vec::new(); diagram.crossing_edge_count()];
        for (p, path) in self.paths.iter().enumerate() {
            let mut hits = Vec::new();
            for (i, &node) in path.nodes.iter().enumerate() {
                for m in &self.marked {
                    if let Some(q) = m.ports.iter().position(|&n| n == node) {
                        let next = if forward[p] {
                            path.nodes[i + 1]
                        } else {
                            path.nodes[i - 1]
                        };
                        hits.push(PortHit {
                            tangle: m.tangle,
                            port: q,
                            inward: next == m.inner[q],
                        });
                    }
                }
            }
            if !forward[p] {
                hits.reverse();
            }
            edge_ports[label[p]] = hits;
        }
        Ok(TangleDiagram {
            diagram,
            tags: self.crossings.clone(),
            edge_ports,
            choice,
            tangles: self.marked.iter().map(|m| m.tangle).collect(),
        })
    }

    /// Every orientation with the reference strand fixed.
    pub fn orientations(&self) -> Vec<TangleDiagram> {
        (0..self.orientation_count())
            .map(|c| self.orient(c).expect("built diagrams orient"))
            .collect()
    }
}

fn reverse_run(run: &[(usize, bool)]) -> Vec<(usize, bool)> {
    run.iter().rev().map(|&(p, f)| (p, !f)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PortHit {
    pub tangle: usize,
    pub port: usize,
    pub inward: bool,
}

/// How Seifert arcs cross a marked tangle: the exit port for every entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PortPattern {
    /// `exit[p]` for every inward port `p`, `None` at outward ports.
    pub exit: [Option<usize>; 4],
}

impl PortPattern {
    pub fn inward(&self, p: usize) -> bool {
        self.exit[p].is_some()
    }
}

/// An oriented closed tangle diagram with crossing provenance.
#[derive(Clone, Debug)]
pub struct TangleDiagram {
    pub diagram: OrientedDiagram,
    pub tags: Vec<CrossingTag>,
    /// Ends of marked tangles met along each edge, in flow order.
    edge_ports: Vec<Vec<PortHit>>,
    pub choice: usize,
    tangles: Vec<usize>,
}

impl TangleDiagram {
    /// Signs of the crossings of every entry of tangle `tangle`, in entry
    /// order.
    pub fn entry_signs(&self, tangle: usize) -> Vec<Vec<i32>> {
        let mut out: Vec<Vec<i32>> = Vec::new();
        for (x, tag) in self.tags.iter().enumerate() {
            if let CrossingTag::Entry { tangle: t, entry } = *tag {
                if t == tangle {
                    if out.len() <= entry {
                        out.resize(entry + 1, Vec::new());
                    }
                    out[entry].push(self.diagram.crossings()[x].sign());
                }
            }
        }
        out
    }

    /// Signs of the extra twists.
    pub fn twist_signs(&self) -> Vec<i32> {
        self.tags
            .iter()
            .zip(self.diagram.crossings())
            .filter(|(t, _)| **t == CrossingTag::Twist)
            .map(|(_, c)| c.sign())
            .collect()
    }

    pub fn tangle_ids(&self) -> &[usize] {
        &self.tangles
    }

    fn find_port(&self, tangle: usize, port: usize) -> Option<(EdgeId, bool)> {
        self.edge_ports.iter().enumerate().find_map(|(e, hits)| {
            hits.iter()
                .find(|h| h.tangle == tangle && h.port == port)
                .map(|h| (e, h.inward))
        })
    }

    /// Follows the Seifert smoothing inside `tangle` from each entry port.
    pub fn port_pattern(&self, tangle: usize) -> Option<PortPattern> {
        let d = &self.diagram;
        let mut exit = [None; 4];
        for (p, slot) in exit.iter_mut().enumerate() {
            let (e0, inward) = self.find_port(tangle, p)?;
            if !inward {
                continue;
            }
            let mut e = e0;
            for _ in 0..d.crossing_edge_count() {
                let h = d.head(e)?;
                e = d.crossings()[h.crossing].edges[3 - h.slot];
                if let Some(hit) = self.edge_ports[e].iter().find(|h| h.tangle == tangle) {
                    *slot = Some(hit.port);
                    break;
                }
            }
            (*slot)?;
        }
        Some(PortPattern { exit })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_closures_are_alternating() {
        for cf in [
            &[2u32][..],
            &[3],
            &[1, 1, 1],
            &[2, 1, 2, 1, 1],
            &[4, 4, 3, 2, 1, 3, 3, 2, 3],
        ] {
            let n: u32 = cf.iter().sum();
            let closed = Tangle::rational(cf, 0).denominator();
            assert_eq!(closed.crossing_count(), n as usize);
            for o in closed.orientations() {
                assert!(o.diagram.is_alternating(), "{cf:?}");
                assert!(o.diagram.seifert_decompose().is_ok());
            }
        }
    }

    #[test]
    fn component_counts() {
        // b(2,1) Hopf link, b(3,1) trefoil, b(4,1)
        assert_eq!(Tangle::rational(&[2], 0).denominator().component_count(), 2);
        assert_eq!(Tangle::rational(&[3], 0).denominator().component_count(), 1);
        assert_eq!(Tangle::rational(&[4], 0).denominator().component_count(), 2);
        assert_eq!(
            Tangle::rational(&[2], 0).denominator().orientation_count(),
            2
        );
        assert_eq!(Tangle::infinity().denominator().component_count(), 2);
        assert_eq!(Tangle::infinity().numerator().component_count(), 1);
    }

    #[test]
    fn sums_close_to_alternating_links() {
        let t = Tangle::rational(&[2, 1, 2, 1, 1], 0)
            .sum(Tangle::rational(&[3], 1))
            .sum(Tangle::rational(&[2], 2))
            .sum(Tangle::integer(1));
        let closed = t.numerator();
        assert_eq!(closed.crossing_count(), 13);
        for o in closed.orientations() {
            assert!(o.diagram.is_alternating());
            assert_eq!(o.twist_signs().len(), 1);
            for j in 0..3 {
                let p = o.port_pattern(j).unwrap();
                assert_eq!(p.exit.iter().flatten().count(), 2);
            }
        }
    }
}
