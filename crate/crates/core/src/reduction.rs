//! Seifert circle reduction numbers of standard diagrams.
//!
//! Lone crossings let strands be rerouted so that Seifert circles merge.
//! Positive lone crossings count towards `r_plus`, negative ones towards
//! `r_minus`. The counts are bookkeeping only; no diagram is rewritten.

use serde::Serialize;
use thiserror::Error;

use crate::diagram::OrientedDiagram;
use crate::homfly::{HomflyEngine, HomflyError};
use crate::montesinos::{Class, OrientedMontesinos};
use crate::rational::{entry_circles, SignedVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("a cycle of 2n Seifert circles needs n >= 2, got n = {0}")]
    ShortCycle(u32),
    #[error("{0} lone crossings do not fit on a cycle of {1} circles")]
    TooManyLone(u32, u32),
}

/// Reduction from `k` lone crossings on a cycle of `2n` circles.
pub fn cycle_reduction(n: u32, k: u32) -> Result<u32, ReductionError> {
    if n < 2 {
        return Err(ReductionError::ShortCycle(n));
    }
    if k > 2 * n {
        return Err(ReductionError::TooManyLone(k, 2 * n));
    }
    Ok(k.min(n - 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockContribution {
    /// Tangle index, or `None` for a two-bridge diagram or the twist cycle.
    pub tangle: Option<usize>,
    /// Entries of the block, or the twist count for the cycle.
    pub entries: Vec<i32>,
    pub sign: i32,
    pub reduction: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub r_plus: u32,
    pub r_minus: u32,
    pub r_total: u32,
    pub per_block: Vec<BlockContribution>,
}

impl ReductionReport {
    fn push(&mut self, c: BlockContribution) {
        if c.sign > 0 {
            self.r_plus += c.reduction;
        } else {
            self.r_minus += c.reduction;
        }
        self.r_total += c.reduction;
        self.per_block.push(c);
    }
}

/// Block contributions of a signed vector. `ends` adds the half circles
/// saved where a positive block meets an end of the long arc.
fn block_split(sv: &SignedVector, tangle: Option<usize>, ends: bool, out: &mut ReductionReport) {
    let blocks = sv.blocks();
    let last = blocks.len() - 1;
    for (k, r) in blocks.into_iter().enumerate() {
        let b = &sv.entries()[r.clone()];
        let sign = b[0].signum();
        let circles: i64 = r
            .clone()
            .map(|i| entry_circles(i, sv.entries()[i]) as i64)
            .sum();
        // twice the formula's share of the block
        let mut kept: i64 = r
            .clone()
            .filter(|&i| (sign > 0) == (i % 2 == 1))
            .map(|i| sv.entries()[i].unsigned_abs() as i64)
            .sum();
        if sign > 0 && ends {
            kept += (k == 0) as i64 + (k == last) as i64;
        }
        let twice = 2 * circles - kept;
        debug_assert!(twice >= 0 && twice % 2 == 0, "block {b:?} of {sv}");
        out.push(BlockContribution {
            tangle,
            entries: b.to_vec(),
            sign,
            reduction: (twice / 2).max(0) as u32,
        });
    }
}

/// Reduction numbers of an oriented standard 4-plat.
pub fn reduction_rational(sv: &SignedVector) -> ReductionReport {
    let mut out = ReductionReport::default();
    block_split(sv, None, true, &mut out);
    out
}

/// Reduction numbers of an oriented standard Montesinos diagram.
pub fn reduction_montesinos(m: &OrientedMontesinos, e: u32) -> ReductionReport {
    let mut out = ReductionReport::default();
    for (j, t) in m.tangles.iter().enumerate() {
        let mut v = t.signed.entries().to_vec();
        if t.parity == 1 {
            v[0] -= 1;
        }
        let sv = SignedVector::new(v).expect("nonzero entries");
        block_split(&sv, Some(j), true, &mut out);
    }
    if m.class.class == Class::M2 {
        out.push(BlockContribution {
            tangle: None,
            entries: Vec::new(),
            sign: -1,
            reduction: 1,
        });
    }
    if m.class.class == Class::B {
        let n = (m.class.eta + e) / 2;
        let reduction = if n >= 2 {
            cycle_reduction(n, e).expect("e <= eta + e")
        } else {
            0
        };
        out.push(BlockContribution {
            tangle: None,
            entries: vec![e as i32],
            sign: 1,
            reduction,
        });
    }
    out
}

/// The two base equations checked against the HOMFLY extremes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseEquations {
    pub s: u32,
    pub w: i64,
    pub r_plus: u32,
    pub r_minus: u32,
    #[serde(rename = "E")]
    pub e_max: i64,
    #[serde(rename = "e")]
    pub e_min: i64,
    pub upper_holds: bool,
    pub lower_holds: bool,
}

impl BaseEquations {
    pub fn hold(&self) -> bool {
        self.upper_holds && self.lower_holds
    }
}

/// Compares the extremes with `s - w - 1 - 2 r_minus` and
/// `-s - w + 1 + 2 r_plus`.
pub fn check_base_equations(
    d: &OrientedDiagram,
    e_max: i64,
    e_min: i64,
    r_plus: u32,
    r_minus: u32,
) -> BaseEquations {
    let s = d.seifert_circle_count() as u32;
    let w = d.writhe() as i64;
    BaseEquations {
        s,
        w,
        r_plus,
        r_minus,
        e_max,
        e_min,
        upper_holds: e_max == s as i64 - w - 1 - 2 * r_minus as i64,
        lower_holds: e_min == -(s as i64) - w + 1 + 2 * r_plus as i64,
    }
}

pub fn verify_base_equations(
    engine: &HomflyEngine,
    d: &OrientedDiagram,
    r_plus: u32,
    r_minus: u32,
) -> Result<BaseEquations, HomflyError> {
    let ex = engine.homfly(d)?.a_extremes()?;
    Ok(check_base_equations(
        d,
        ex.e_max as i64,
        ex.e_min as i64,
        r_plus,
        r_minus,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i32]) -> SignedVector {
        SignedVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_reduction(4, 6).unwrap(), 3);
        assert_eq!(cycle_reduction(3, 0).unwrap(), 0);
        assert_eq!(cycle_reduction(2, 2).unwrap(), 1);
        assert!(cycle_reduction(1, 0).is_err());
        assert!(cycle_reduction(2, 5).is_err());
        for n in 2..8 {
            let r: Vec<u32> = (0..=2 * n)
                .map(|k| cycle_reduction(n, k).unwrap())
                .collect();
            assert!(r.windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(*r.last().unwrap(), n - 1);
        }
    }

    #[test]
    fn rational_blocks() {
        let r = reduction_rational(&sv(&[-4, 4, -3, -2, -1, 3, 3, 2, 3]));
        assert_eq!(r.r_total, 5);
        assert_eq!(r.per_block.len(), 4);
        assert_eq!(reduction_rational(&sv(&[2])).r_total, 0);
        assert_eq!(reduction_rational(&sv(&[3])).r_total, 0);
    }

    #[test]
    fn unknot_equations() {
        let b = check_base_equations(&OrientedDiagram::unknot(), 0, 0, 0, 0);
        assert!(b.hold());
    }
}
