//! Alternating Montesinos links `M(β_1/α_1, ..., β_k/α_k, e)`.
//!
//! The standard diagram places the rational tangles left to right, then `e`
//! horizontal half twists, and takes the numerator closure. The top arc is
//! the reference strand, oriented right to left.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::tangle::{ClosedTangle, Tangle, TangleDiagram, NE, NW, SE, SW};
use crate::rational::{
    odd_continued_fraction, signed_vector_of, Fraction, OddCf, RationalError, SignedVector,
};
use crate::reduction::{self, ReductionReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MontesinosError {
    #[error("need at least two tangles, got {0}")]
    TooFewTangles(usize),
    #[error("cannot parse Montesinos list `{0}`")]
    Parse(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("fractions and twists do not give an alternating presentation")]
    NotAlternating,
    #[error(transparent)]
    Rational(#[from] RationalError),
    #[error("tangle {0} has an impossible Seifert pattern")]
    ImpossiblePattern(usize),
    #[error("tangle {tangle}: parity {parity} does not match the sign of its first entry")]
    ParitySign { tangle: usize, parity: u8 },
    #[error("tangles of parity 1 and 3 cannot coexist")]
    MixedParity,
    #[error("twist crossings have the wrong sign for class {0}")]
    TwistSign(Class),
    #[error("class B needs an even cycle, got eta + e = {0}")]
    OddCycle(u32),
    #[error("formula gives {0}/4, not an integer")]
    NonInteger(i64),
}

/// A normalized presentation: every fraction in `(0, 1)` and `e >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MontesinosPresentation {
    pub tangles: Vec<Fraction>,
    pub e: u32,
    /// The input was the all-negative family and got mirrored.
    pub mirror: bool,
}

impl MontesinosPresentation {
    pub fn new(tangles: Vec<Fraction>, e: u32) -> Result<Self, MontesinosError> {
        if tangles.len() < 2 {
            return Err(MontesinosError::TooFewTangles(tangles.len()));
        }
        Ok(MontesinosPresentation {
            tangles,
            e,
            mirror: false,
        })
    }

    /// Normalizes signed fractions `p/q`: integer parts are moved into the
    /// twist count, and an all-negative input is mirrored.
    pub fn from_signed(items: &[(i64, i64)], e: i64) -> Result<Self, MontesinosError> {
        let attempt = |sign: i64| -> Option<(Vec<Fraction>, i64)> {
            let mut e = sign * e;
            let mut out = Vec::new();
            for &(p, q) in items {
                let (p, q) = if q < 0 {
                    (-p * sign, -q)
                } else {
                    (p * sign, q)
                };
                let (whole, rest) = p.div_mod_floor(&q);
                e += whole;
                if rest != 0 {
                    let g = rest.gcd(&q);
                    out.push(Fraction::new((q / g) as u64, (rest / g) as u64).ok()?);
                }
            }
            (e >= 0).then_some((out, e))
        };
        for (sign, mirror) in [(1, false), (-1, true)] {
            if let Some((tangles, e)) = attempt(sign) {
                let mut p = Self::new(tangles, e as u32)?;
                p.mirror = mirror;
                return Ok(p);
            }
        }
        Err(MontesinosError::NotAlternating)
    }

    pub fn cfs(&self) -> Vec<OddCf> {
        self.tangles
            .iter()
            .map(|&f| odd_continued_fraction(f))
            .collect()
    }

    pub fn crossing_count(&self) -> u32 {
        self.cfs().iter().map(OddCf::crossing_count).sum::<u32>() + self.e
    }

    /// The standard diagram, before orientation.
    pub fn build(&self) -> ClosedTangle {
        let cfs = self.cfs();
        let mut t = Tangle::rational(cfs[0].entries(), 0);
        for (j, cf) in cfs.iter().enumerate().skip(1) {
            t = t.sum(Tangle::rational(cf.entries(), j));
        }
        t.sum(Tangle::integer(self.e)).numerator()
    }
}

impl fmt::Display for MontesinosPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.mirror { "-" } else { "" };
        write!(f, "M(")?;
        for t in &self.tangles {
            write!(f, "{sign}{t},")?;
        }
        write!(f, "{sign}{})", self.e)
    }
}

/// Parsed from `b1/a1,b2/a2,...,e=n`. Bare integers add to `e`.
impl FromStr for MontesinosPresentation {
    type Err = MontesinosError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MontesinosError::Parse(s.to_string());
        let mut items = Vec::new();
        let mut e = 0i64;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if let Some(v) = part.strip_prefix("e=") {
                e += v.trim().parse::<i64>().map_err(|_| err())?;
            } else if let Some((p, q)) = part.split_once('/') {
                let p: i64 = p.trim().parse().map_err(|_| err())?;
                let q: i64 = q.trim().parse().map_err(|_| err())?;
                if q == 0 {
                    return Err(MontesinosError::ZeroDenominator(part.to_string()));
                }
                items.push((p, q));
            } else {
                e += part.parse::<i64>().map_err(|_| err())?;
            }
        }
        Self::from_signed(&items, e)
    }
}

/// Whether inputs needed reducing to lowest terms.
pub fn has_unreduced(s: &str) -> bool {
    s.split(',')
        .filter_map(|p| p.split_once('/'))
        .any(
            |(p, q)| match (p.trim().parse::<i64>(), q.trim().parse::<i64>()) {
                (Ok(p), Ok(q)) => p.gcd(&q) > 1,
                _ => false,
            },
        )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Class {
    M1,
    M2,
    B,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One tangle under an inherited orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangleAnalysis {
    pub fraction: Fraction,
    pub cf: OddCf,
    pub signed: SignedVector,
    pub parity: u8,
    /// Four times the contribution to the formula.
    #[serde(skip)]
    pub delta_x4: i64,
}

impl TangleAnalysis {
    pub fn delta(&self) -> f64 {
        self.delta_x4 as f64 / 4.0
    }
}

/// Seifert parity from how smoothed arcs cross the tangle boundary.
pub fn seifert_parity(td: &TangleDiagram, tangle: usize) -> Result<u8, MontesinosError> {
    let p = td
        .port_pattern(tangle)
        .ok_or(MontesinosError::ImpossiblePattern(tangle))?;
    let pair = |a: usize, b: usize| p.exit[a] == Some(b) || p.exit[b] == Some(a);
    if pair(NW, SW) && pair(NE, SE) {
        return Ok(3);
    }
    if pair(NW, NE) && pair(SW, SE) {
        return match (p.inward(NW), p.inward(SW)) {
            (true, true) => Ok(1),
            (false, false) => Err(MontesinosError::ImpossiblePattern(tangle)),
            _ => Ok(2),
        };
    }
    Err(MontesinosError::ImpossiblePattern(tangle))
}

/// Four times `Δ_parity` of a signed vector.
pub fn delta_x4(parity: u8, sv: &SignedVector) -> i64 {
    let b = sv.entries();
    let base = if parity == 2 { 1 } else { -1 };
    let mut q = base + b[b.len() - 1].signum() as i64;
    for (i, &v) in b.iter().enumerate() {
        let even = i % 2 == 1;
        if (even && v > 0) || (!even && v < 0) {
            q += 2 * v.unsigned_abs() as i64;
        }
    }
    q
}

pub fn delta0(eta: u32, e: u32) -> Result<u32, MontesinosError> {
    let m = eta + e;
    if m % 2 == 1 || m < 2 {
        return Err(MontesinosError::OddCycle(m));
    }
    Ok(m - (m / 2 - 1).min(e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassTag {
    pub class: Class,
    pub eta: u32,
    pub omega2: Vec<usize>,
    pub omega3: Vec<usize>,
}

/// Class from parities and the signs of the twist crossings.
pub fn classify(parities: &[u8], twist_signs: &[i32]) -> Result<ClassTag, MontesinosError> {
    let idx = |p: u8| {
        parities
            .iter()
            .enumerate()
            .filter(|(_, &q)| q == p)
            .map(|(j, _)| j)
            .collect::<Vec<_>>()
    };
    let (omega1, omega2, omega3) = (idx(1), idx(2), idx(3));
    let neg = twist_signs.iter().any(|&s| s < 0);
    let pos = twist_signs.iter().any(|&s| s > 0);
    let class = if !omega1.is_empty() || neg {
        if !omega3.is_empty() {
            return Err(MontesinosError::MixedParity);
        }
        Class::M1
    } else if !omega3.is_empty() || pos {
        Class::B
    } else {
        Class::M2
    };
    let bad_twists = match class {
        Class::M1 => pos,
        Class::B => neg,
        Class::M2 => !twist_signs.is_empty(),
    };
    if bad_twists {
        return Err(MontesinosError::TwistSign(class));
    }
    Ok(ClassTag {
        class,
        eta: omega3.len() as u32,
        omega2,
        omega3,
    })
}

/// The formula applied to one oriented standard diagram.
#[derive(Clone, Debug, Serialize)]
pub struct OrientedMontesinos {
    pub choice: usize,
    #[serde(flatten)]
    pub class: ClassTag,
    pub tangles: Vec<TangleAnalysis>,
    pub delta0: Option<u32>,
    pub braid_index: u32,
    #[serde(skip)]
    pub diagram: TangleDiagram,
}

impl OrientedMontesinos {
    pub fn reduction(&self, e: u32) -> ReductionReport {
        reduction::reduction_montesinos(self, e)
    }
}

pub fn analyze(
    p: &MontesinosPresentation,
    td: TangleDiagram,
) -> Result<OrientedMontesinos, MontesinosError> {
    let cfs = p.cfs();
    let mut tangles = Vec::with_capacity(cfs.len());
    for (j, cf) in cfs.into_iter().enumerate() {
        let signed = signed_vector_of(&td, j, &cf)?;
        let parity = seifert_parity(&td, j)?;
        if (parity == 3) != (signed.entries()[0] > 0) {
            return Err(MontesinosError::ParitySign { tangle: j, parity });
        }
        let delta_x4 = delta_x4(parity, &signed);
        tangles.push(TangleAnalysis {
            fraction: p.tangles[j],
            cf,
            signed,
            parity,
            delta_x4,
        });
    }
    let parities: Vec<u8> = tangles.iter().map(|t| t.parity).collect();
    let class = classify(&parities, &td.twist_signs())?;
    let sum = |js: &mut dyn Iterator<Item = usize>| js.map(|j| tangles[j].delta_x4).sum::<i64>();
    let (q, delta0) = match class.class {
        Class::M1 => (8 + sum(&mut (0..tangles.len())), None),
        Class::M2 => (4 + sum(&mut (0..tangles.len())), None),
        Class::B => {
            let d0 = delta0(class.eta, p.e)?;
            let q = 4 * d0 as i64
                + sum(&mut class.omega2.iter().copied())
                + sum(&mut class.omega3.iter().copied());
            (q, Some(d0))
        }
    };
    if q % 4 != 0 {
        return Err(MontesinosError::NonInteger(q));
    }
    Ok(OrientedMontesinos {
        choice: td.choice,
        class,
        tangles,
        delta0,
        braid_index: (q / 4) as u32,
        diagram: td,
    })
}

/// An orientation whose Seifert structure fits none of the classes.
#[derive(Clone, Debug, Serialize)]
pub struct Inadmissible {
    pub choice: usize,
    pub reason: String,
    #[serde(skip)]
    pub diagram: TangleDiagram,
}

/// The formula for every orientation with the top strand fixed.
#[derive(Clone, Debug, Serialize)]
pub struct MontesinosResult {
    pub presentation: MontesinosPresentation,
    pub orientations: Vec<OrientedMontesinos>,
    pub inadmissible: Vec<Inadmissible>,
    /// Minimum over admissible orientations.
    pub braid_index: u32,
}

pub fn braid_index_montesinos(
    p: &MontesinosPresentation,
) -> Result<MontesinosResult, MontesinosError> {
    let mut orientations = Vec::new();
    let mut inadmissible = Vec::new();
    let mut first_err = None;
    for td in p.build().orientations() {
        match analyze(p, td.clone()) {
            Ok(o) => orientations.push(o),
            Err(
                e @ (MontesinosError::MixedParity
                | MontesinosError::TwistSign(_)
                | MontesinosError::OddCycle(_)),
            ) => {
                inadmissible.push(Inadmissible {
                    choice: td.choice,
                    reason: e.to_string(),
                    diagram: td,
                });
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    let braid_index = match orientations.iter().map(|o| o.braid_index).min() {
        Some(b) => b,
        None => return Err(first_err.expect("at least one orientation")),
    };
    Ok(MontesinosResult {
        presentation: p.clone(),
        orientations,
        inadmissible,
        braid_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> MontesinosPresentation {
        s.parse().unwrap()
    }

    fn sv(v: &[i32]) -> SignedVector {
        SignedVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn parsing_and_normalization() {
        let p = pres("7/19,1/3,1/2,e=0");
        assert_eq!(p.tangles.len(), 3);
        assert_eq!(p.e, 0);
        assert_eq!(p.crossing_count(), 12);
        let p = pres("12/19, 2/3, 2");
        assert_eq!(p.e, 2);
        let p = pres("26/19,2/3,e=1");
        assert_eq!((p.tangles[0], p.e), (Fraction::new(19, 7).unwrap(), 2));
        let p = pres("-7/19,-1/3,-1/2");
        assert!(p.mirror);
        assert_eq!(p.e, 0);
        let p = pres("-1/3,1/2,e=1");
        assert_eq!(
            (p.tangles[0], p.e, p.mirror),
            (Fraction::new(3, 2).unwrap(), 0, false)
        );
        assert!(matches!(
            "1/2".parse::<MontesinosPresentation>(),
            Err(MontesinosError::TooFewTangles(1))
        ));
        assert!(matches!(
            "1/2,x".parse::<MontesinosPresentation>(),
            Err(MontesinosError::Parse(_))
        ));
        assert!(matches!(
            "1/2,1/0".parse::<MontesinosPresentation>(),
            Err(MontesinosError::ZeroDenominator(_))
        ));
        assert!(has_unreduced("2/4,1/3"));
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_x4(3, &sv(&[2, 1, -2, 1, 1])), 8);
        assert_eq!(delta_x4(2, &sv(&[-2])), 4);
        assert_eq!(delta_x4(1, &sv(&[-1, 1, 1, 2, 2])), 8);
        assert_eq!(delta0(2, 0).unwrap(), 2);
        assert_eq!(delta0(3, 1).unwrap(), 3);
        assert_eq!(delta0(2, 2).unwrap(), 3);
        assert!(delta0(2, 1).is_err());
    }

    #[test]
    fn classes() {
        assert_eq!(classify(&[3, 3, 2], &[]).unwrap().class, Class::B);
        assert_eq!(classify(&[1, 1], &[-1, -1]).unwrap().class, Class::M1);
        assert_eq!(classify(&[2, 2, 2], &[]).unwrap().class, Class::M2);
        assert_eq!(classify(&[2, 2], &[-1]).unwrap().class, Class::M1);
        assert!(classify(&[1, 3], &[]).is_err());
        assert!(classify(&[3, 2], &[-1]).is_err());
        let b = classify(&[2, 2], &[1]).unwrap();
        assert_eq!((b.class, b.eta), (Class::B, 0));
        assert!(classify(&[2, 2, 2], &[1, -1]).is_err());
    }

    fn find<'a>(r: &'a MontesinosResult, vectors: &[&[i32]]) -> &'a OrientedMontesinos {
        r.orientations
            .iter()
            .find(|o| {
                o.tangles
                    .iter()
                    .zip(vectors)
                    .all(|(t, v)| t.signed.entries() == *v)
            })
            .expect("orientation with the given vectors")
    }

    #[test]
    fn worked_examples() {
        let r = braid_index_montesinos(&pres("7/19,1/3,1/2,e=0")).unwrap();
        assert_eq!(r.braid_index, 5);
        let o = find(&r, &[&[2, 1, -2, 1, 1], &[3], &[-2]]);
        assert_eq!(o.class.class, Class::B);
        assert_eq!(o.class.eta, 2);
        assert_eq!(
            o.tangles.iter().map(|t| t.parity).collect::<Vec<_>>(),
            vec![3, 3, 2]
        );

        assert_eq!(
            braid_index_montesinos(&pres("1/4,3/5,1/3,1"))
                .unwrap()
                .braid_index,
            4
        );

        let r = braid_index_montesinos(&pres("12/19,2/3,2")).unwrap();
        let o = find(&r, &[&[-1, 1, 1, 2, 2], &[-1, 1, 1]]);
        assert_eq!((o.class.class, o.braid_index), (Class::M1, 5));

        let r = braid_index_montesinos(&pres("12/19,2/3,1/2,e=0")).unwrap();
        let o = find(&r, &[&[-1, -1, -1, 2, -2], &[-1, -1, -1], &[-2]]);
        assert_eq!((o.class.class, o.braid_index), (Class::M2, 6));

        let r = braid_index_montesinos(&pres("17/44,7/10,19/26,2")).unwrap();
        let o = find(&r, &[&[2, 1, -1, -2, -3], &[1, 2, 3], &[-1, -2, -1, 2, -2]]);
        assert_eq!(
            (o.class.class, o.delta0, o.braid_index),
            (Class::B, Some(3), 9)
        );
        assert_eq!(o.diagram.diagram.seifert_circle_count(), 12);
    }
}
