//! JSON planar-diagram codes.
//!
//! ```json
//! {"components": 1,
//!  "crossings": [{"edges": [0, 3, 4, 1], "over": 0}, ...],
//!  "orientations": [1]}
//! ```
//!
//! Edges are listed counterclockwise with `e0` and `e1` entering the
//! crossing when every component is run in increasing edge order. `over`
//! is 0 when the strand `e0 -> e2` is on top and 1 otherwise. A component
//! flagged 0 in `orientations` is traversed backwards; components are
//! counted in order of their smallest edge, and any beyond those met at
//! crossings are crossingless circles.

use serde::{Deserialize, Serialize};

use super::{Crossing, DiagramError, OrientedDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCrossing {
    pub edges: [usize; 4],
    pub over: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    pub components: usize,
    pub crossings: Vec<PdCrossing>,
    pub orientations: Vec<u8>,
}

impl PdCode {
    pub fn from_json(s: &str) -> Result<Self, DiagramError> {
        serde_json::from_str(s).map_err(|e| DiagramError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("PD code serializes")
    }
}

impl OrientedDiagram {
    pub fn from_pd(pd: &PdCode) -> Result<Self, DiagramError> {
        let mut raw = Vec::with_capacity(pd.crossings.len());
        for c in &pd.crossings {
            if c.over > 1 {
                return Err(DiagramError::Format(format!(
                    "over flag must be 0 or 1, got {}",
                    c.over
                )));
            }
            raw.push(Crossing {
                edges: c.edges,
                over_first: c.over == 0,
            });
        }
        let traced = OrientedDiagram::from_crossings(raw.clone(), 0)?;
        let n_traced = traced.component_count();
        if pd.components < n_traced {
            return Err(DiagramError::Format(format!(
                "{} components declared but {} found at crossings",
                pd.components, n_traced
            )));
        }
        if pd.orientations.len() != pd.components {
            return Err(DiagramError::OrientationCount {
                expected: pd.components,
                got: pd.orientations.len(),
            });
        }
        if let Some(&f) = pd.orientations.iter().find(|&&f| f > 1) {
            return Err(DiagramError::Format(format!(
                "orientation flag must be 0 or 1, got {f}"
            )));
        }
        // components of the input labeling, ordered by smallest edge
        let mut head = vec![(0usize, 0usize); 2 * raw.len()];
        for (x, c) in raw.iter().enumerate() {
            head[c.edges[0]] = (x, 0);
            head[c.edges[1]] = (x, 1);
        }
        let mut comp = vec![usize::MAX; head.len()];
        let mut count = 0;
        for start in 0..head.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut e = start;
            loop {
                comp[e] = count;
                let (x, s) = head[e];
                e = raw[x].edges[s + 2];
                if e == start {
                    break;
                }
            }
            count += 1;
        }
        let reversed: Vec<bool> = comp.iter().map(|&k| pd.orientations[k] == 0).collect();
        let crossings = raw
            .iter()
            .enumerate()
            .map(|(x, c)| {
                let incoming = std::array::from_fn(|s| (s < 2) != reversed[c.edges[s]]);
                Crossing::normalize(c.edges, c.over_first, incoming)
                    .ok_or(DiagramError::BadCrossing(x))
            })
            .collect::<Result<Vec<_>, _>>()?;
        OrientedDiagram::from_crossings(crossings, pd.components - n_traced)
    }

    pub fn to_pd(&self) -> PdCode {
        PdCode {
            components: self.component_count(),
            crossings: self
                .crossings()
                .iter()
                .map(|c| PdCrossing {
                    edges: c.edges,
                    over: if c.over_first { 0 } else { 1 },
                })
                .collect(),
            orientations: vec![1; self.component_count()],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_elementary_torus;

    #[test]
    fn round_trip_is_exact() {
        let h = build_elementary_torus(2, true).unwrap();
        let d = h
            .connected_sum(&build_elementary_torus(3, true).unwrap().mirror(), 1, 2)
            .unwrap();
        let pd = d.to_pd();
        let text = pd.to_json();
        let back = PdCode::from_json(&text).unwrap();
        assert_eq!(back, pd);
        assert_eq!(back.to_json(), text);
        let d2 = OrientedDiagram::from_pd(&back).unwrap();
        assert_eq!(d2, d);
        assert_eq!(d2.to_pd(), pd);
    }

    #[test]
    fn orientation_flags_reverse_components() {
        let h = build_elementary_torus(2, true).unwrap();
        let mut pd = h.to_pd();
        pd.orientations = vec![1, 0];
        let r = OrientedDiagram::from_pd(&pd).unwrap();
        assert_eq!(r.writhe(), -2);
    }

    #[test]
    fn free_loops_and_errors() {
        let pd = PdCode {
            components: 2,
            crossings: vec![],
            orientations: vec![1, 1],
        };
        let d = OrientedDiagram::from_pd(&pd).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.crossing_count(), 0);

        let bad = PdCode {
            components: 1,
            crossings: vec![PdCrossing {
                edges: [0, 0, 1, 1],
                over: 0,
            }],
            orientations: vec![1],
        };
        assert!(OrientedDiagram::from_pd(&bad).is_err());
        assert!(PdCode::from_json("{\"components\": 1}").is_err());
    }
}
