//! HOMFLY polynomial by skein resolving trees.
//!
//! Normalization: `a·H(D+) - a⁻¹·H(D-) = z·H(D0)`, `H(unknot) = 1`.
//! At each node the diagram is simplified (curls and clasp bigons are
//! removed), split into separated pieces, and otherwise the first crossing
//! met on its under strand while walking the components from fixed
//! basepoints is resolved:
//!
//! ```text
//! H(D+) = a⁻²·H(D-) + a⁻¹z·H(D0)
//! H(D-) = a²·H(D+) - az·H(D0)
//! ```
//!
//! A diagram with no such crossing is descending and hence an unlink.
//! Results are memoized under a canonical code of the diagram.

mod cache;
mod work;

use std::io::Write;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::OrientedDiagram;
use crate::polynomial::{Coeff, Laurent2, PolyError};
use cache::MemoCache;
use work::Work;

pub const DEFAULT_CAP: usize = 20;
pub const DEFAULT_CACHE_CAPACITY: usize = 1 << 20;

#[derive(Debug, Error)]
pub enum HomflyError {
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("E - e = {0} is odd")]
    OddSpan(i32),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Morton bound violated: E = {e_max} > {upper} or e = {e_min} < {lower}")]
    BoundViolation {
        e_max: i32,
        e_min: i32,
        upper: i32,
        lower: i32,
    },
    #[error("trace output: {0}")]
    Trace(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomflyConfig {
    /// Largest crossing number accepted.
    pub cap: usize,
    /// Memo entries kept; 0 disables the cache.
    pub cache_capacity: usize,
    /// Resolving-tree depth down to which sibling branches run in parallel.
    pub parallel_depth: usize,
}

impl Default for HomflyConfig {
    fn default() -> Self {
        HomflyConfig {
            cap: DEFAULT_CAP,
            cache_capacity: DEFAULT_CACHE_CAPACITY,
            parallel_depth: 6,
        }
    }
}

pub struct HomflyEngine {
    config: HomflyConfig,
    cache: Option<MemoCache>,
}

enum Step {
    Unlink(usize),
    Split(Vec<Work>),
    Resolve {
        pos: bool,
        switched: Work,
        smoothed: Work,
    },
}

fn expand(w: &Work) -> Step {
    let parts = w.split();
    if parts.len() > 1 {
        return Step::Split(parts);
    }
    match w.first_bad() {
        None => Step::Unlink(w.crossing_components()),
        Some(x) => Step::Resolve {
            pos: w.xs[x].pos,
            switched: w.switched(x),
            smoothed: w.smoothed(x),
        },
    }
}

/// `((a - a⁻¹)z⁻¹)^n`.
fn delta_pow(n: usize) -> Laurent2 {
    static TABLE: OnceLock<Vec<Laurent2>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let d = Laurent2::unlink_factor();
        let mut v = vec![Laurent2::one()];
        for i in 1..32 {
            let next = &v[i - 1] * &d;
            v.push(next);
        }
        v
    });
    table
        .get(n)
        .cloned()
        .unwrap_or_else(|| Laurent2::unlink_factor().pow(n))
}

/// Skein weights `(switched, smoothed)` as `(coeff, z, a)`.
fn weights(pos: bool) -> [(i64, i32, i32); 2] {
    if pos {
        [(1, 0, -2), (1, 1, -1)]
    } else {
        [(1, 0, 2), (-1, 1, 1)]
    }
}

fn combine(pos: bool, h_switched: &Laurent2, h_smoothed: &Laurent2) -> Laurent2 {
    let [(c1, z1, a1), (c0, z0, a0)] = weights(pos);
    &h_switched.shifted(&Coeff::from(c1), z1, a1) + &h_smoothed.shifted(&Coeff::from(c0), z0, a0)
}

struct Tracer<'a> {
    out: &'a mut dyn Write,
    next: u64,
}

#[derive(Serialize)]
struct TraceLine<'a> {
    node: u64,
    parent: Option<u64>,
    weight: TraceWeight,
    crossings: usize,
    kind: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    leaf: Option<String>,
}

#[derive(Serialize)]
struct TraceWeight {
    coeff: i64,
    z: i32,
    a: i32,
}

impl HomflyEngine {
    pub fn new(config: HomflyConfig) -> Self {
        let cache = (config.cache_capacity > 0).then(|| MemoCache::new(config.cache_capacity));
        HomflyEngine { config, cache }
    }

    pub fn config(&self) -> HomflyConfig {
        self.config
    }

    /// Entries currently memoized.
    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, MemoCache::len)
    }

    pub fn clear_cache(&self) {
        if let Some(c) = &self.cache {
            c.clear();
        }
    }

    fn check_cap(&self, d: &OrientedDiagram) -> Result<(), HomflyError> {
        if d.crossing_count() > self.config.cap {
            return Err(HomflyError::CapExceeded {
                crossings: d.crossing_count(),
                cap: self.config.cap,
            });
        }
        Ok(())
    }

    pub fn homfly(&self, d: &OrientedDiagram) -> Result<Laurent2, HomflyError> {
        self.check_cap(d)?;
        Ok(self.eval(Work::from_diagram(d), 0))
    }

    /// Evaluates without the cache or threads and writes the resolving tree
    /// as JSON lines: node id, parent, edge weight, crossing count after
    /// simplification, and the value at leaves.
    pub fn homfly_traced(
        &self,
        d: &OrientedDiagram,
        out: &mut dyn Write,
    ) -> Result<Laurent2, HomflyError> {
        self.check_cap(d)?;
        let mut t = Tracer { out, next: 0 };
        self.eval_traced(Work::from_diagram(d), &mut t, None, (1, 0, 0), "root")
    }

    fn eval(&self, mut w: Work, depth: usize) -> Laurent2 {
        let changed = w.simplify();
        let loops = std::mem::take(&mut w.loops) as usize;
        if w.xs.is_empty() {
            return delta_pow(loops - 1);
        }
        let core = self.eval_core(w, changed, depth);
        if loops == 0 {
            core
        } else {
            &core * &delta_pow(loops)
        }
    }

    /// `w` has crossings and no free loops.
    fn eval_core(&self, w: Work, relabel: bool, depth: usize) -> Laurent2 {
        let (canon, key) = w.canonical();
        let w = if relabel { canon } else { w };
        if let Some(v) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            return v;
        }
        let value = match expand(&w) {
            Step::Unlink(n) => delta_pow(n - 1),
            Step::Split(parts) => {
                let n = parts.len();
                parts
                    .into_iter()
                    .map(|p| self.eval_core(p, true, depth + 1))
                    .fold(delta_pow(n - 1), |acc, h| &acc * &h)
            }
            Step::Resolve {
                pos,
                switched,
                smoothed,
            } => {
                let (h1, h0) = if depth < self.config.parallel_depth {
                    rayon::join(
                        || self.eval(switched, depth + 1),
                        || self.eval(smoothed, depth + 1),
                    )
                } else {
                    (
                        self.eval(switched, depth + 1),
                        self.eval(smoothed, depth + 1),
                    )
                };
                combine(pos, &h1, &h0)
            }
        };
        match &self.cache {
            Some(c) => c.insert(key, value),
            None => value,
        }
    }

    fn eval_traced(
        &self,
        mut w: Work,
        t: &mut Tracer,
        parent: Option<u64>,
        weight: (i64, i32, i32),
        kind: &str,
    ) -> Result<Laurent2, HomflyError> {
        let node = t.next;
        t.next += 1;
        w.simplify();
        let loops = std::mem::take(&mut w.loops) as usize;
        let emit = |t: &mut Tracer, leaf: Option<&Laurent2>| -> Result<(), HomflyError> {
            let line = TraceLine {
                node,
                parent,
                weight: TraceWeight {
                    coeff: weight.0,
                    z: weight.1,
                    a: weight.2,
                },
                crossings: w.xs.len(),
                kind,
                leaf: leaf.map(|p| p.to_string()),
            };
            writeln!(
                t.out,
                "{}",
                serde_json::to_string(&line).expect("trace line serializes")
            )?;
            Ok(())
        };
        if w.xs.is_empty() {
            let v = delta_pow(loops - 1);
            emit(t, Some(&v))?;
            return Ok(v);
        }
        let w = w.canonical().0;
        let core = match expand(&w) {
            Step::Unlink(n) => {
                let v = delta_pow(n - 1);
                emit(t, Some(&v))?;
                v
            }
            Step::Split(parts) => {
                emit(t, None)?;
                let n = parts.len();
                let mut acc = delta_pow(n - 1);
                for p in parts {
                    let h = self.eval_traced(p, t, Some(node), (1, 0, 0), "piece")?;
                    acc = &acc * &h;
                }
                acc
            }
            Step::Resolve {
                pos,
                switched,
                smoothed,
            } => {
                emit(t, None)?;
                let [w1, w0] = weights(pos);
                let h1 = self.eval_traced(switched, t, Some(node), w1, "switch")?;
                let h0 = self.eval_traced(smoothed, t, Some(node), w0, "smooth")?;
                combine(pos, &h1, &h0)
            }
        };
        Ok(if loops == 0 {
            core
        } else {
            &core * &delta_pow(loops)
        })
    }
}

impl Default for HomflyEngine {
    fn default() -> Self {
        Self::new(HomflyConfig::default())
    }
}

fn shared_engine() -> &'static HomflyEngine {
    static ENGINE: OnceLock<HomflyEngine> = OnceLock::new();
    ENGINE.get_or_init(HomflyEngine::default)
}

/// HOMFLY polynomial with the default configuration and a process-wide
/// cache.
pub fn homfly(d: &OrientedDiagram) -> Result<Laurent2, HomflyError> {
    shared_engine().homfly(d)
}

/// `(E - e)/2 + 1` from the extreme `a`-degrees.
pub fn mwf_lower_bound(p: &Laurent2) -> Result<i32, HomflyError> {
    let span = p.a_span().ok_or(PolyError::ZeroPolynomial)?;
    if span % 2 != 0 {
        return Err(HomflyError::OddSpan(span));
    }
    Ok(span / 2 + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MortonReport {
    pub s: i32,
    pub w: i32,
    #[serde(rename = "E")]
    pub e_max: i32,
    #[serde(rename = "e")]
    pub e_min: i32,
    /// `s - w - 1 - E`.
    pub upper_slack: i32,
    /// `e - (-s - w + 1)`.
    pub lower_slack: i32,
}

impl MortonReport {
    pub fn tight(&self) -> bool {
        self.upper_slack == 0 && self.lower_slack == 0
    }
}

/// Checks `E <= s - w - 1` and `e >= -s - w + 1` for `p = H(d)`.
pub fn morton_bounds_check(d: &OrientedDiagram, p: &Laurent2) -> Result<MortonReport, HomflyError> {
    let ex = p.a_extremes()?;
    let s = d.seifert_circle_count() as i32;
    let w = d.writhe();
    let (upper, lower) = (s - w - 1, -s - w + 1);
    if ex.e_max > upper || ex.e_min < lower {
        return Err(HomflyError::BoundViolation {
            e_max: ex.e_max,
            e_min: ex.e_min,
            upper,
            lower,
        });
    }
    Ok(MortonReport {
        s,
        w,
        e_max: ex.e_max,
        e_min: ex.e_min,
        upper_slack: upper - ex.e_max,
        lower_slack: ex.e_min - lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_elementary_torus;

    fn trefoil() -> OrientedDiagram {
        build_elementary_torus(3, true).unwrap()
    }

    #[test]
    fn unknot_and_unlinks() {
        assert_eq!(homfly(&OrientedDiagram::unknot()).unwrap(), Laurent2::one());
        assert_eq!(
            homfly(&OrientedDiagram::unlink(2)).unwrap(),
            Laurent2::unlink_factor()
        );
        assert_eq!(
            homfly(&OrientedDiagram::unlink(3)).unwrap(),
            Laurent2::unlink_factor().pow(2)
        );
        let one = build_elementary_torus(1, true).unwrap();
        assert_eq!(homfly(&one).unwrap(), Laurent2::one());
    }

    #[test]
    fn trefoil_value() {
        // hand expansion: 2a^-2 - a^-4 + z^2 a^-2
        let want: Laurent2 = "-1 z^0 a^-4 + 2 z^0 a^-2 + 1 z^2 a^-2".parse().unwrap();
        let h = homfly(&trefoil()).unwrap();
        assert_eq!(h, want);
        let ex = h.a_extremes().unwrap();
        assert_eq!((ex.e_max, ex.e_min), (-2, -4));
        assert_eq!(mwf_lower_bound(&h).unwrap(), 2);
        let r = morton_bounds_check(&trefoil(), &h).unwrap();
        assert!(r.tight());
    }

    #[test]
    fn hopf_value() {
        // H(D+) = a^-2 H(unlink) + a^-1 z H(unknot)
        let h = homfly(&build_elementary_torus(2, true).unwrap()).unwrap();
        let want = &Laurent2::unlink_factor().mul_monomial(1, 0, -2).unwrap()
            + &Laurent2::monomial(1, 1, -1);
        assert_eq!(h, want);
        assert_eq!(h.a_span(), Some(2));
    }

    #[test]
    fn cache_and_trace_agree() {
        let d = trefoil()
            .connected_sum(&build_elementary_torus(4, true).unwrap().mirror(), 0, 3)
            .unwrap();
        let cached = HomflyEngine::default().homfly(&d).unwrap();
        let bare = HomflyEngine::new(HomflyConfig {
            cache_capacity: 0,
            parallel_depth: 0,
            ..Default::default()
        })
        .homfly(&d)
        .unwrap();
        let mut buf = Vec::new();
        let traced = HomflyEngine::default().homfly_traced(&d, &mut buf).unwrap();
        assert_eq!(cached, bare);
        assert_eq!(cached, traced);
        let text = String::from_utf8(buf).unwrap();
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["node"], 0);
        assert!(first["parent"].is_null());
        assert!(text.lines().any(|l| l.contains("\"leaf\"")));
    }

    #[test]
    fn cap_is_enforced() {
        let engine = HomflyEngine::new(HomflyConfig {
            cap: 2,
            ..Default::default()
        });
        assert!(matches!(
            engine.homfly(&trefoil()),
            Err(HomflyError::CapExceeded {
                crossings: 3,
                cap: 2
            })
        ));
    }

    #[test]
    fn odd_span_is_rejected() {
        assert!(matches!(
            mwf_lower_bound(&(Laurent2::monomial(1, 0, 1) + Laurent2::one())),
            Err(HomflyError::OddSpan(1))
        ));
        assert!(mwf_lower_bound(&Laurent2::zero()).is_err());
    }
}
