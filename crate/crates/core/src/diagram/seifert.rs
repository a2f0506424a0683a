//! Seifert circles and the crossing multigraph between them.

use std::collections::BTreeMap;

use super::{DiagramError, EdgeId, OrientedDiagram};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertDecomposition {
    /// Each circle as the cyclic list of edges it runs through.
    circles: Vec<Vec<EdgeId>>,
    circle_of_edge: Vec<usize>,
    /// The two circles and the sign at each crossing.
    crossings: Vec<(usize, usize, i32)>,
}

impl SeifertDecomposition {
    pub fn new(d: &OrientedDiagram) -> Result<Self, DiagramError> {
        let n = d.edge_count();
        let mut circle_of_edge = vec![usize::MAX; n];
        let mut circles = Vec::new();
        for start in 0..n {
            if circle_of_edge[start] != usize::MAX {
                continue;
            }
            let id = circles.len();
            let mut circle = Vec::new();
            let mut e = start;
            loop {
                circle_of_edge[e] = id;
                circle.push(e);
                e = match d.head(e) {
                    Some(p) => d.crossings()[p.crossing].edges[3 - p.slot],
                    None => e,
                };
                if e == start {
                    break;
                }
            }
            circles.push(circle);
        }
        let crossings = d
            .crossings()
            .iter()
            .enumerate()
            .map(|(x, c)| {
                let (p, q) = (circle_of_edge[c.edges[0]], circle_of_edge[c.edges[1]]);
                if p == q {
                    Err(DiagramError::SelfTouchingCircle(x))
                } else {
                    Ok((p.min(q), p.max(q), c.sign()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SeifertDecomposition {
            circles,
            circle_of_edge,
            crossings,
        })
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn circles(&self) -> &[Vec<EdgeId>] {
        &self.circles
    }

    pub fn circle_of_edge(&self, e: EdgeId) -> usize {
        self.circle_of_edge[e]
    }

    /// Circles `(lo, hi)` and sign at crossing `x`.
    pub fn crossing_assignment(&self, x: usize) -> (usize, usize, i32) {
        self.crossings[x]
    }

    pub fn graph(&self) -> SeifertGraph {
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (x, &(p, q, _)) in self.crossings.iter().enumerate() {
            groups.entry((p, q)).or_default().push(x);
        }
        let edges = groups
            .into_iter()
            .map(|(circles, crossings)| {
                let s0 = self.crossings[crossings[0]].2;
                let uniform = crossings.iter().all(|&x| self.crossings[x].2 == s0);
                MultiEdge {
                    circles,
                    sign: uniform.then_some(s0),
                    crossings,
                }
            })
            .collect();
        SeifertGraph {
            vertices: self.circles.len(),
            edges,
        }
    }
}

/// Crossings shared by one pair of Seifert circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiEdge {
    pub circles: (usize, usize),
    pub crossings: Vec<usize>,
    /// Common sign, `None` when the group mixes signs.
    pub sign: Option<i32>,
}

impl MultiEdge {
    pub fn multiplicity(&self) -> usize {
        self.crossings.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertGraph {
    vertices: usize,
    edges: Vec<MultiEdge>,
}

impl SeifertGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    /// Groups of multiplicity one.
    pub fn lone_edges(&self) -> impl Iterator<Item = &MultiEdge> {
        self.edges.iter().filter(|m| m.multiplicity() == 1)
    }

    /// Circle pairs sharing two or more positive crossings.
    pub fn sigma_plus(&self) -> usize {
        self.edges
            .iter()
            .filter(|m| m.multiplicity() > 1 && m.sign == Some(1))
            .count()
    }

    /// Circle pairs sharing two or more negative crossings.
    pub fn sigma_minus(&self) -> usize {
        self.edges
            .iter()
            .filter(|m| m.multiplicity() > 1 && m.sign == Some(-1))
            .count()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for m in &self.edges {
            adj[m.circles.0].push(m.circles.1);
            adj[m.circles.1].push(m.circles.0);
        }
        adj
    }

    /// Two-coloring of the circles, `None` when an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.vertices];
        for root in 0..self.vertices {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertices
    }
}
