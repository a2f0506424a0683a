//! Exact two-variable Laurent polynomials in `z` and `a` with integer
//! coefficients, the value domain of the HOMFLY invariant.
//!
//! A [`Laurent2`] is a sparse list of terms kept sorted by `(a, z)` exponent
//! pair with no zero coefficients, so structural equality is polynomial
//! equality and the textual form is deterministic.

mod coeff;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use coeff::Coeff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("monomial coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("the zero polynomial has no a-degree")]
    ZeroPolynomial,
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
}

/// One term `coeff · z^z · a^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub z: i32,
    pub a: i32,
    pub coeff: Coeff,
}

impl Term {
    fn key(&self) -> (i32, i32) {
        (self.a, self.z)
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent2 {
    terms: Vec<Term>,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Laurent2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff · z^z · a^a`; a zero coefficient yields the zero polynomial.
    pub fn monomial(coeff: impl Into<Coeff>, z: i32, a: i32) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        Laurent2 {
            terms: vec![Term { z, a, coeff }],
        }
    }

    /// The value `(a - a^{-1}) z^{-1}` of a two-component unlink.
    pub fn unlink_factor() -> Self {
        Laurent2 {
            terms: vec![
                Term {
                    z: -1,
                    a: -1,
                    coeff: Coeff::from(-1),
                },
                Term {
                    z: -1,
                    a: 1,
                    coeff: Coeff::from(1),
                },
            ],
        }
    }

    /// HOMFLY value of the `n`-component unlink, `n >= 1`.
    pub fn unlink(n: usize) -> Self {
        assert!(n >= 1, "an unlink has at least one component");
        Self::unlink_factor().pow(n - 1)
    }

    /// Builds a polynomial from arbitrary `(coeff, z, a)` triples, combining
    /// like terms and dropping zeros.
    pub fn from_terms<C: Into<Coeff>>(items: impl IntoIterator<Item = (C, i32, i32)>) -> Self {
        let mut acc: BTreeMap<(i32, i32), Coeff> = BTreeMap::new();
        for (c, z, a) in items {
            let c = c.into();
            let slot = acc.entry((a, z)).or_insert_with(|| Coeff::from(0));
            *slot += &c;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, z), coeff)| Term { z, a, coeff })
            .collect();
        Laurent2 { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `z^z a^a`.
    pub fn coeff(&self, z: i32, a: i32) -> Coeff {
        match self.terms.binary_search_by(|t| t.key().cmp(&(a, z))) {
            Ok(i) => self.terms[i].coeff.clone(),
            Err(_) => Coeff::from(0),
        }
    }

    /// Shifts every exponent by `(z, a)` and scales by `coeff`.
    pub fn mul_monomial(&self, coeff: impl Into<Coeff>, z: i32, a: i32) -> Result<Self, PolyError> {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Err(PolyError::ZeroCoefficient);
        }
        Ok(self.shifted(&coeff, z, a))
    }

    pub(crate) fn shifted(&self, coeff: &Coeff, z: i32, a: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                z: t.z + z,
                a: t.a + a,
                coeff: match coeff.to_i64() {
                    Some(1) => t.coeff.clone(),
                    Some(k) => t.coeff.scale(k),
                    None => &t.coeff * coeff,
                },
            })
            .collect();
        // a uniform shift preserves the (a, z) order
        Laurent2 { terms }
    }

    /// Substitutes `a -> -a^{-1}`: the HOMFLY value of the mirror diagram.
    pub fn mirror_substitute(&self) -> Self {
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term {
                z: t.z,
                a: -t.a,
                coeff: if t.a.rem_euclid(2) == 1 {
                    -&t.coeff
                } else {
                    t.coeff.clone()
                },
            })
            .collect();
        terms.sort_by_key(Term::key);
        Laurent2 { terms }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Largest and smallest powers of `a` together with their `z`
    /// coefficient polynomials.
    pub fn a_extremes(&self) -> Result<AExtremes, PolyError> {
        let first = self.terms.first().ok_or(PolyError::ZeroPolynomial)?;
        let last = self.terms.last().ok_or(PolyError::ZeroPolynomial)?;
        let (e_min, e_max) = (first.a, last.a);
        let slice = |deg: i32| {
            ZPoly::from_sorted(
                self.terms
                    .iter()
                    .filter(|t| t.a == deg)
                    .map(|t| (t.z, t.coeff.clone()))
                    .collect(),
            )
        };
        let p_h = slice(e_max);
        let p_l = slice(e_min);
        Ok(AExtremes {
            e_max,
            e_min,
            p0_h: p_h.leading().expect("extreme slice is nonzero"),
            p0_l: p_l.leading().expect("extreme slice is nonzero"),
            p_h,
            p_l,
        })
    }

    /// Spread `E - e` of the `a`-degrees, `None` for the zero polynomial.
    pub fn a_span(&self) -> Option<i32> {
        Some(self.terms.last()?.a - self.terms.first()?.a)
    }
}

impl Add<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &Laurent2) -> Laurent2 {
        let (l, r) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(l.len() + r.len());
        let (mut i, mut j) = (0, 0);
        while i < l.len() && j < r.len() {
            match l[i].key().cmp(&r[j].key()) {
                std::cmp::Ordering::Less => {
                    out.push(l[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(r[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &l[i].coeff + &r[j].coeff;
                    if !c.is_zero() {
                        out.push(Term {
                            z: l[i].z,
                            a: l[i].a,
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&l[i..]);
        out.extend_from_slice(&r[j..]);
        Laurent2 { terms: out }
    }
}

impl Add for Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: Laurent2) -> Laurent2 {
        &self + &rhs
    }
}

impl Neg for &Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        Laurent2 {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    z: t.z,
                    a: t.a,
                    coeff: -&t.coeff,
                })
                .collect(),
        }
    }
}

impl Sub<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: &Laurent2) -> Laurent2 {
        self + &(-rhs)
    }
}

impl Mul<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        Laurent2::from_terms(self.terms.iter().flat_map(|s| {
            rhs.terms
                .iter()
                .map(move |t| (&s.coeff * &t.coeff, s.z + t.z, s.a + t.a))
        }))
    }
}

impl Mul for Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: Laurent2) -> Laurent2 {
        &self * &rhs
    }
}

impl fmt::Display for Laurent2 {
    /// Terms `c z^i a^j` joined by ` + `, ordered by `(a, z)` ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} z^{} a^{}", t.coeff, t.z, t.a)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent2({self})")
    }
}

impl FromStr for Laurent2 {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut items = Vec::new();
        for chunk in s.split(" + ") {
            let bad = || PolyError::Parse(chunk.to_string());
            let mut parts = chunk.split_whitespace();
            let c: Coeff = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let z = parts
                .next()
                .and_then(|p| p.strip_prefix("z^"))
                .and_then(|p| p.parse::<i32>().ok())
                .ok_or_else(bad)?;
            let a = parts
                .next()
                .and_then(|p| p.strip_prefix("a^"))
                .and_then(|p| p.parse::<i32>().ok())
                .ok_or_else(bad)?;
            if parts.next().is_some() {
                return Err(bad());
            }
            items.push((c, z, a));
        }
        Ok(Self::from_terms(items))
    }
}

impl Serialize for Laurent2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Laurent2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Univariate Laurent polynomial in `z`, terms sorted by ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    terms: Vec<(i32, Coeff)>,
}

impl ZPoly {
    fn from_sorted(terms: Vec<(i32, Coeff)>) -> Self {
        ZPoly { terms }
    }

    pub fn from_terms(items: impl IntoIterator<Item = (i64, i32)>) -> Self {
        let mut acc: BTreeMap<i32, Coeff> = BTreeMap::new();
        for (c, z) in items {
            *acc.entry(z).or_insert_with(|| Coeff::from(0)) += &Coeff::from(c);
        }
        ZPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(i32, Coeff)] {
        &self.terms
    }

    /// `(coefficient, degree)` of the highest power of `z`.
    pub fn leading(&self) -> Option<(Coeff, i32)> {
        self.terms.last().map(|(z, c)| (c.clone(), *z))
    }
}

/// Extreme `a`-degree data of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AExtremes {
    /// Maximum power of `a`.
    pub e_max: i32,
    /// Minimum power of `a`.
    pub e_min: i32,
    pub p_h: ZPoly,
    pub p_l: ZPoly,
    pub p0_h: (Coeff, i32),
    pub p0_l: (Coeff, i32),
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Laurent2 {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels_and_combines() {
        let a_plus_inv = Laurent2::from_terms([(1, 0, 1), (1, 0, -1)]);
        assert_eq!(
            &a_plus_inv + &Laurent2::monomial(-1, 0, -1),
            Laurent2::monomial(1, 0, 1)
        );
        assert_eq!(&a_plus_inv + &Laurent2::zero(), a_plus_inv);
        let za2 = Laurent2::monomial(1, 1, 2);
        assert_eq!(&za2 + &za2, Laurent2::monomial(2, 1, 2));
    }

    #[test]
    fn square_of_unlink_factor() {
        let d = Laurent2::unlink_factor();
        let expected = Laurent2::from_terms([(1, -2, 2), (-2, -2, 0), (1, -2, -2)]);
        assert_eq!(&d * &d, expected);
        assert_eq!(&d * &Laurent2::one(), d);
        assert_eq!(&Laurent2::one() * &Laurent2::one(), Laurent2::one());
    }

    #[test]
    fn monomial_shift() {
        assert_eq!(
            Laurent2::one().mul_monomial(1, 1, -1).unwrap(),
            Laurent2::monomial(1, 1, -1)
        );
        assert_eq!(
            Laurent2::monomial(1, 0, 1).mul_monomial(-1, 1, -1).unwrap(),
            Laurent2::monomial(-1, 1, 0)
        );
        assert_eq!(
            Laurent2::unlink(2).mul_monomial(1, 0, 0).unwrap(),
            Laurent2::unlink_factor()
        );
        assert_eq!(
            Laurent2::one().mul_monomial(0, 1, 1),
            Err(PolyError::ZeroCoefficient)
        );
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(
            Laurent2::monomial(1, 0, 2).mirror_substitute(),
            Laurent2::monomial(1, 0, -2)
        );
        assert_eq!(
            Laurent2::monomial(1, 0, 1).mirror_substitute(),
            Laurent2::monomial(-1, 0, -1)
        );
        // the unlink factor is mirror-symmetric
        let d = Laurent2::unlink_factor();
        assert_eq!(d.mirror_substitute(), d);
    }

    #[test]
    fn extremes_of_unlink_factor() {
        let x = Laurent2::unlink_factor().a_extremes().unwrap();
        assert_eq!((x.e_max, x.e_min), (1, -1));
        assert_eq!(x.p_h, ZPoly::from_terms([(1, -1)]));
        assert_eq!(x.p_l, ZPoly::from_terms([(-1, -1)]));
        assert_eq!(x.p0_h, (Coeff::from(1), -1));
        assert_eq!(x.p0_l, (Coeff::from(-1), -1));

        let one = Laurent2::one().a_extremes().unwrap();
        assert_eq!((one.e_max, one.e_min), (0, 0));
        assert_eq!(
            Laurent2::zero().a_extremes(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn text_form_is_ordered_by_a_then_z() {
        let trefoil = Laurent2::from_terms([(2, 0, -2), (-1, 0, -4), (1, 2, -2)]);
        assert_eq!(trefoil.to_string(), "-1 z^0 a^-4 + 2 z^0 a^-2 + 1 z^2 a^-2");
        assert_eq!(p(&trefoil.to_string()), trefoil);
        assert_eq!(Laurent2::zero().to_string(), "0");
        assert!("3 z^1".parse::<Laurent2>().is_err());
    }

    fn small_poly() -> impl Strategy<Value = Laurent2> {
        prop::collection::vec((-4i64..=4, -3i32..=3, -3i32..=3), 0..6)
            .prop_map(Laurent2::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p - &p, Laurent2::zero());
        }

        #[test]
        fn canonical_form(p in small_poly(), q in small_poly()) {
            for t in (&p * &q).terms().iter().chain((&p + &q).terms()) {
                prop_assert!(!t.coeff.is_zero());
            }
            let s = &p + &q;
            let keys: Vec<_> = s.terms().iter().map(|t| (t.a, t.z)).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(keys, sorted);
        }

        #[test]
        fn mirror_is_involutive_homomorphism(p in small_poly(), q in small_poly()) {
            prop_assert_eq!(p.mirror_substitute().mirror_substitute(), p.clone());
            prop_assert_eq!((&p + &q).mirror_substitute(), &p.mirror_substitute() + &q.mirror_substitute());
            prop_assert_eq!((&p * &q).mirror_substitute(), &p.mirror_substitute() * &q.mirror_substitute());
        }

        #[test]
        fn text_round_trip(p in small_poly()) {
            prop_assert_eq!(p.to_string().parse::<Laurent2>().unwrap(), p);
        }
    }
}
