//! Two-bridge links `b(α, β)` through their standard 4-plat diagrams.
//!
//! The diagram is the denominator closure of the rational tangle of the
//! odd-length continued fraction of `β/α`. Crossing signs are read off the
//! oriented diagram, never inferred from the fraction.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::tangle::{ClosedTangle, Tangle, TangleDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("need 0 < beta < alpha, got {alpha}/{beta}")]
    OutOfRange { alpha: u64, beta: u64 },
    #[error("{alpha}/{beta} is not in lowest terms")]
    NotCoprime { alpha: u64, beta: u64 },
    #[error("cannot parse fraction `{0}`")]
    Parse(String),
    #[error("continued fraction entries must be positive and of odd count")]
    BadContinuedFraction,
    #[error("entry {0} mixes crossing signs")]
    MixedSigns(usize),
    #[error("signed vector does not match the continued fraction")]
    VectorMismatch,
    #[error("braid index formula gives {0}/4, not an integer")]
    NonInteger(i64),
    #[error("orientation {0} is not available for this link")]
    BadChoice(Choice),
}

/// `β/α` with `0 < β < α` and `gcd(α, β) = 1`. Serialized as `"β/α"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    pub alpha: u64,
    pub beta: u64,
}

impl Fraction {
    pub fn new(alpha: u64, beta: u64) -> Result<Self, RationalError> {
        if beta == 0 || beta >= alpha {
            return Err(RationalError::OutOfRange { alpha, beta });
        }
        if alpha.gcd(&beta) != 1 {
            return Err(RationalError::NotCoprime { alpha, beta });
        }
        Ok(Fraction { alpha, beta })
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

impl Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `num/den` into a pair of integers.
pub fn parse_pair(s: &str) -> Result<(u64, u64), RationalError> {
    let err = || RationalError::Parse(s.to_string());
    let (a, b) = s.trim().split_once('/').ok_or_else(err)?;
    Ok((
        a.trim().parse().map_err(|_| err())?,
        b.trim().parse().map_err(|_| err())?,
    ))
}

/// Positive continued fraction `β/α = 1/(a_1 + 1/(a_2 + ...))` of odd length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OddCf {
    entries: Vec<u32>,
}

impl OddCf {
    pub fn new(entries: Vec<u32>) -> Result<Self, RationalError> {
        if entries.is_empty() || entries.len().is_multiple_of(2) || entries.contains(&0) {
            return Err(RationalError::BadContinuedFraction);
        }
        Ok(OddCf { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn crossing_count(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// The fraction `β/α` the entries expand to.
    pub fn value(&self) -> Fraction {
        // x = a_i + 1/x from the last entry inward, as num/den
        let (mut num, mut den) = (1u128, 0u128);
        for &a in self.entries.iter().rev() {
            (num, den) = (a as u128 * num + den, num);
        }
        // β/α = 1/x = den/num
        Fraction {
            alpha: num as u64,
            beta: den as u64,
        }
    }
}

impl fmt::Display for OddCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn odd_continued_fraction(f: Fraction) -> OddCf {
    let (mut p, mut q) = (f.alpha, f.beta);
    let mut entries = Vec::new();
    while q != 0 {
        entries.push((p / q) as u32);
        (p, q) = (q, p % q);
    }
    if entries.len() % 2 == 0 {
        let last = entries.pop().unwrap();
        if last >= 2 {
            entries.push(last - 1);
            entries.push(1);
        } else {
            *entries.last_mut().unwrap() += 1;
        }
    }
    OddCf { entries }
}

/// Entries of a continued fraction with the crossing sign attached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SignedVector {
    entries: Vec<i32>,
}

impl SignedVector {
    pub fn new(entries: Vec<i32>) -> Result<Self, RationalError> {
        if entries.is_empty() || entries.len().is_multiple_of(2) || entries.contains(&0) {
            return Err(RationalError::BadContinuedFraction);
        }
        Ok(SignedVector { entries })
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn negated(&self) -> SignedVector {
        SignedVector {
            entries: self.entries.iter().map(|b| -b).collect(),
        }
    }

    /// Maximal runs of equal sign.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.entries.len() {
            if i == self.entries.len() || self.entries[i].signum() != self.entries[start].signum() {
                out.push(start..i);
                start = i;
            }
        }
        out
    }

    pub fn block_values(&self) -> Vec<Vec<i32>> {
        self.blocks()
            .into_iter()
            .map(|r| self.entries[r].to_vec())
            .collect()
    }
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Orientation of the component not carrying the reference strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Choice {
    /// A knot: one orientation up to reversal.
    Knot,
    /// The orientation whose signed vector is lexicographically smaller.
    A,
    B,
}

impl fmt::Display for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Choice::Knot => "knot",
            Choice::A => "A",
            Choice::B => "B",
        })
    }
}

impl FromStr for Choice {
    type Err = RationalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Choice::A),
            "B" | "b" => Ok(Choice::B),
            "knot" => Ok(Choice::Knot),
            _ => Err(RationalError::Parse(s.to_string())),
        }
    }
}

/// Standard diagram of the denominator closure.
pub fn build_4plat(cf: &OddCf) -> ClosedTangle {
    Tangle::rational(cf.entries(), 0).denominator()
}

/// Reads the signed vector of tangle `tangle` off an oriented diagram.
pub fn signed_vector_of(
    td: &TangleDiagram,
    tangle: usize,
    cf: &OddCf,
) -> Result<SignedVector, RationalError> {
    let signs = td.entry_signs(tangle);
    if signs.len() != cf.entries().len() {
        return Err(RationalError::VectorMismatch);
    }
    let entries = signs
        .iter()
        .zip(cf.entries())
        .enumerate()
        .map(|(i, (s, &a))| {
            if s.len() != a as usize {
                return Err(RationalError::VectorMismatch);
            }
            if s.iter().any(|&x| x != s[0]) {
                return Err(RationalError::MixedSigns(i + 1));
            }
            Ok(s[0] * a as i32)
        })
        .collect::<Result<Vec<_>, _>>()?;
    SignedVector::new(entries)
}

pub fn signed_vector(td: &TangleDiagram, cf: &OddCf) -> Result<SignedVector, RationalError> {
    signed_vector_of(td, 0, cf)
}

#[derive(Clone, Debug)]
pub struct OrientedRational {
    pub choice: Choice,
    pub diagram: TangleDiagram,
    pub signed: SignedVector,
}

/// Every orientation of the standard diagram, labeled.
pub fn orientations(cf: &OddCf) -> Result<Vec<OrientedRational>, RationalError> {
    let closed = build_4plat(cf);
    let mut out = closed
        .orientations()
        .into_iter()
        .map(|d| {
            let signed = signed_vector(&d, cf)?;
            Ok(OrientedRational {
                choice: Choice::Knot,
                diagram: d,
                signed,
            })
        })
        .collect::<Result<Vec<_>, RationalError>>()?;
    if out.len() == 2 {
        out.sort_by(|x, y| x.signed.cmp(&y.signed));
        out[0].choice = Choice::A;
        out[1].choice = Choice::B;
    }
    Ok(out)
}

/// The standard diagram oriented as `choice`.
pub fn orient_4plat(cf: &OddCf, choice: Choice) -> Result<OrientedRational, RationalError> {
    orientations(cf)?
        .into_iter()
        .find(|o| o.choice == choice)
        .ok_or(RationalError::BadChoice(choice))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// The built handedness.
    Standard,
    /// Its mirror image.
    Mirror,
}

/// Four times the braid index from the formula, before the integrality
/// check.
pub fn braid_index_rational_x4(sv: &SignedVector, form: Form) -> i64 {
    let sv = match form {
        Form::Standard => sv.clone(),
        Form::Mirror => sv.negated(),
    };
    let b = sv.entries();
    let n = b.len();
    let mut q = 4 + 2 + b[0].signum() as i64 + b[n - 1].signum() as i64;
    for (i, &v) in b.iter().enumerate() {
        // 1-based entry i + 1
        let even = i % 2 == 1;
        if (even && v > 0) || (!even && v < 0) {
            q += 2 * v.unsigned_abs() as i64;
        }
    }
    q
}

/// Braid index of the oriented two-bridge link with signed vector `sv`.
pub fn braid_index_rational(sv: &SignedVector, form: Form) -> Result<u32, RationalError> {
    let q = braid_index_rational_x4(sv, form);
    if q % 4 != 0 {
        return Err(RationalError::NonInteger(q));
    }
    Ok((q / 4) as u32)
}

/// Seifert circles of the standard diagram, predicted from the signs.
///
/// Entries that smooth along the long arc add one circle each; the others
/// add `|b| - 1`; the long arc's own circle adds one.
pub fn predicted_seifert_circles(sv: &SignedVector) -> u32 {
    1 + sv
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &b)| entry_circles(i, b))
        .sum::<u32>()
}

/// Whether entry `i` (0-based) smooths parallel to the long arc.
pub(crate) fn attaches(i: usize, b: i32) -> bool {
    (i.is_multiple_of(2) && b > 0) || (i % 2 == 1 && b < 0)
}

pub(crate) fn entry_circles(i: usize, b: i32) -> u32 {
    if attaches(i, b) {
        1
    } else {
        b.unsigned_abs() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i32]) -> SignedVector {
        SignedVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn continued_fractions() {
        let cf = odd_continued_fraction(Fraction::new(17426, 4117).unwrap());
        assert_eq!(cf.entries(), &[4, 4, 3, 2, 1, 3, 3, 2, 3]);
        assert_eq!(
            odd_continued_fraction(Fraction::new(191, 56).unwrap()).entries(),
            &[3, 2, 2, 3, 3]
        );
        assert_eq!(
            odd_continued_fraction(Fraction::new(2, 1).unwrap()).entries(),
            &[2]
        );
        assert_eq!(
            odd_continued_fraction(Fraction::new(19, 7).unwrap()).entries(),
            &[2, 1, 2, 1, 1]
        );
        assert_eq!(
            odd_continued_fraction(Fraction::new(3, 2).unwrap()).entries(),
            &[1, 1, 1]
        );
    }

    #[test]
    fn reconstruction_up_to_1000() {
        for alpha in 2..=1000u64 {
            for beta in 1..alpha {
                if let Ok(f) = Fraction::new(alpha, beta) {
                    let cf = odd_continued_fraction(f);
                    assert_eq!(cf.entries().len() % 2, 1);
                    assert_eq!(cf.value(), f);
                }
            }
        }
    }

    #[test]
    fn fraction_validation() {
        assert!(matches!(
            Fraction::new(4, 2),
            Err(RationalError::NotCoprime { .. })
        ));
        assert!(matches!(
            Fraction::new(3, 3),
            Err(RationalError::OutOfRange { .. })
        ));
        assert!(matches!(
            Fraction::new(3, 0),
            Err(RationalError::OutOfRange { .. })
        ));
        assert_eq!(parse_pair("17426/4117").unwrap(), (17426, 4117));
        assert!(parse_pair("17426").is_err());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(
            braid_index_rational(&sv(&[-4, 4, -3, -2, -1, 3, 3, 2, 3]), Form::Standard).unwrap(),
            10
        );
        assert_eq!(
            braid_index_rational(&sv(&[4, 4, 3, 2, 1, 3, -3, -2, -3]), Form::Standard).unwrap(),
            9
        );
        assert_eq!(
            braid_index_rational(&sv(&[2, 2, 1, 1, -1, -2, -1, 1, 1]), Form::Standard).unwrap(),
            5
        );
    }

    #[test]
    fn mirror_form_matches_standard() {
        for v in [
            &[-4, 4, -3, -2, -1, 3, 3, 2, 3][..],
            &[3],
            &[-2],
            &[1, -1, 1],
        ] {
            let s = sv(v);
            assert_eq!(
                braid_index_rational_x4(&s, Form::Standard),
                braid_index_rational_x4(&s.negated(), Form::Mirror)
            );
        }
    }

    #[test]
    fn blocks() {
        let s = sv(&[-4, 4, -3, -2, -1, 3, 3, 2, 3]);
        assert_eq!(
            s.block_values(),
            vec![vec![-4], vec![4], vec![-3, -2, -1], vec![3, 3, 2, 3]]
        );
    }

    #[test]
    fn worked_orientations() {
        let cf = odd_continued_fraction(Fraction::new(17426, 4117).unwrap());
        let os = orientations(&cf).unwrap();
        assert_eq!(os.len(), 2);
        assert_eq!(os[0].choice, Choice::A);
        assert_eq!(os[0].signed.entries(), &[-4, 4, -3, -2, -1, 3, 3, 2, 3]);
        assert_eq!(os[1].signed.entries(), &[4, 4, 3, 2, 1, 3, -3, -2, -3]);
        for o in &os {
            assert_eq!(o.diagram.diagram.seifert_circle_count(), 15);
            assert_eq!(predicted_seifert_circles(&o.signed), 15);
        }
        assert!(orient_4plat(&cf, Choice::Knot).is_err());
        let trefoil = odd_continued_fraction(Fraction::new(3, 1).unwrap());
        assert_eq!(
            orient_4plat(&trefoil, Choice::Knot)
                .unwrap()
                .signed
                .entries(),
            &[3]
        );
    }
}
