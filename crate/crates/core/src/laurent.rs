//! Sparse Laurent polynomials over an arbitrary coefficient ring.
//!
//! A [`Laurent`] value is a sorted list of `(exponent, coefficient)` pairs
//! with no zero coefficients, so structural equality is ring equality. The
//! two instances used throughout the crate are [`LaurentPoly`]
//! (`Z[r^±1, t^±1]`, the ring of the representation) and [`TPoly`]
//! (`Q[t^±1]`, what remains after specialising `r` to a rational number).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Exponent, Ring};

/// Exponent of a monomial `t^t r^r`.
///
/// Ordered by `t` first, then `r`, which is also the storage and
/// serialization order of [`LaurentPoly`].
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiExp {
    pub t: i32,
    pub r: i32,
}

impl BiExp {
    pub const fn new(r: i32, t: i32) -> Self {
        BiExp { t, r }
    }
}

impl fmt::Debug for BiExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}r^{}", self.t, self.r)
    }
}

impl Add for BiExp {
    type Output = BiExp;
    fn add(self, o: BiExp) -> BiExp {
        BiExp { t: self.t + o.t, r: self.r + o.r }
    }
}

impl Sub for BiExp {
    type Output = BiExp;
    fn sub(self, o: BiExp) -> BiExp {
        BiExp { t: self.t - o.t, r: self.r - o.r }
    }
}

impl Exponent for BiExp {
    fn meet(self, other: Self) -> Self {
        BiExp { t: self.t.min(other.t), r: self.r.min(other.r) }
    }
}

impl Neg for BiExp {
    type Output = BiExp;
    fn neg(self) -> BiExp {
        BiExp { t: -self.t, r: -self.r }
    }
}

/// Sparse Laurent polynomial with coefficients in `C` and exponents in `E`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C, E> {
    terms: Vec<(E, C)>,
}

impl<C: Coefficient, E: Exponent> Laurent<C, E> {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), E::default())
    }

    pub fn monomial(coeff: C, exp: E) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(exp, coeff)] }
        }
    }

    pub fn constant(coeff: C) -> Self {
        Self::monomial(coeff, E::default())
    }

    /// Builds a canonical polynomial from arbitrary terms; repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = (E, C)>>(terms: I) -> Self {
        let mut v: Vec<(E, C)> = terms.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(E, C)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = last.1.clone() + c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if out.last().is_some_and(|l| l.1.is_zero()) {
            out.pop();
        }
        Laurent { terms: out }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(E, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == E::default() && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, exp: &E) -> C {
        match self.terms.binary_search_by(|(e, _)| e.cmp(exp)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Term with the largest exponent.
    pub fn leading(&self) -> Option<&(E, C)> {
        self.terms.last()
    }

    /// Term with the smallest exponent.
    pub fn trailing(&self) -> Option<&(E, C)> {
        self.terms.first()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies by the monomial with exponent `by`.
    pub fn shift(&self, by: E) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e + by, c.clone())).collect() }
    }

    /// Applies `f` to every exponent. `f` must be injective.
    pub fn map_exponents<F: Fn(E) -> E>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs_c = |c: &C| if negate_rhs { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, rhs_c(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.clone() + rhs_c(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(e, c)| (*e, rhs_c(c))));
        Laurent { terms: out }
    }
}

impl<C: Coefficient + Integer, E: Exponent> Laurent<C, E> {
    /// Exact division; `None` when `divisor` does not divide `self`.
    ///
    /// Long division on leading terms. Every quotient exponent of an exact
    /// quotient is at least `trailing(self) - trailing(divisor)`, which
    /// bounds the loop when the division is not exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading()?.clone();
        if self.is_zero() {
            return Some(Self::zero());
        }
        let floor = self.trailing()?.0 - divisor.trailing()?.0;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((e, c)) = rem.leading().cloned() {
            let qe = e - lead_e;
            if qe < floor {
                return None;
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            let step = Laurent { terms: divisor.terms.iter().map(|(de, dc)| (*de + qe, dc.clone() * qc.clone())).collect() };
            rem = rem.merge(&step, true);
            quotient.push((qe, qc));
        }
        Some(Self::from_terms(quotient))
    }
}

impl<C: Coefficient, E: Exponent> Default for Laurent<C, E> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient, E: Exponent> Ring for Laurent<C, E> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return Laurent { terms: self.terms.iter().map(|(x, d)| (*x + *e, d.clone() * c.clone())).collect() };
        }
        if self.terms.len() == 1 {
            return rhs.mul_ref(self);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                prod.push((*e1 + *e2, c1.clone() * c2.clone()));
            }
        }
        Self::from_terms(prod)
    }

    fn neg_ref(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Coefficient, E: Exponent> Zero for Laurent<C, E> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient, E: Exponent> One for Laurent<C, E> {
    fn one() -> Self {
        Laurent::one()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coefficient, E: Exponent> $tr<&Laurent<C, E>> for &Laurent<C, E> {
            type Output = Laurent<C, E>;
            fn $method(self, rhs: &Laurent<C, E>) -> Laurent<C, E> {
                self.$inner(rhs)
            }
        }
        impl<C: Coefficient, E: Exponent> $tr for Laurent<C, E> {
            type Output = Laurent<C, E>;
            fn $method(self, rhs: Laurent<C, E>) -> Laurent<C, E> {
                self.$inner(&rhs)
            }
        }
        impl<C: Coefficient, E: Exponent> $tr<&Laurent<C, E>> for Laurent<C, E> {
            type Output = Laurent<C, E>;
            fn $method(self, rhs: &Laurent<C, E>) -> Laurent<C, E> {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<C: Coefficient, E: Exponent> Neg for Laurent<C, E> {
    type Output = Laurent<C, E>;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<C: Coefficient, E: Exponent> Neg for &Laurent<C, E> {
    type Output = Laurent<C, E>;
    fn neg(self) -> Laurent<C, E> {
        self.neg_ref()
    }
}

/// Element of `Z[r^±1, t^±1]`.
pub type LaurentPoly = Laurent<BigInt, BiExp>;

/// Exact rational number.
pub type Rational = BigRational;

/// Element of `Q[t^±1]`.
pub type TPoly = Laurent<BigRational, i32>;

impl LaurentPoly {
    /// `coeff · r^e_r · t^e_t`
    pub fn term(coeff: i64, e_r: i32, e_t: i32) -> Self {
        Self::monomial(BigInt::from(coeff), BiExp::new(e_r, e_t))
    }

    pub fn r() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::term(1, 0, 1)
    }

    pub fn r_pow(e: i32) -> Self {
        Self::term(1, e, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::term(c, 0, 0)
    }

    /// Lowest and highest power of `t` carrying a nonzero coefficient.
    pub fn t_degree_range(&self) -> Result<(i32, i32)> {
        match (self.terms.first(), self.terms.last()) {
            (Some(lo), Some(hi)) => Ok((lo.0.t, hi.0.t)),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    /// Lowest and highest power of `r`, or `None` for zero.
    pub fn r_degree_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.iter().map(|(e, _)| e.r).min()?;
        let hi = self.terms.iter().map(|(e, _)| e.r).max()?;
        Some((lo, hi))
    }

    /// The ring automorphism `r ↦ r⁻¹, t ↦ t⁻¹`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect();
        terms.reverse();
        Laurent { terms }
    }

    /// Substitutes `r = r0`, keeping `t` formal.
    pub fn eval_r(&self, r0: &Rational) -> Result<TPoly> {
        if r0.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        Ok(TPoly::from_terms(
            self.terms.iter().map(|(e, c)| (e.t, r0.pow(e.r) * BigRational::from_integer(c.clone()))),
        ))
    }
}

impl TPoly {
    /// Coefficient of `t⁰`.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&0)
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, var: &str, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit_monomial = e.t == 0 && e.r == 0;
            let mut first = true;
            if !abs.is_one() || unit_monomial {
                write!(f, "{abs}")?;
                first = false;
            }
            write_monomial(f, "t", e.t, &mut first)?;
            write_monomial(f, "r", e.r, &mut first)?;
        }
        Ok(())
    }
}

impl<C: fmt::Debug, E: fmt::Debug> fmt::Debug for Laurent<C, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}·{e:?}")?;
        }
        Ok(())
    }
}

/// Parses expressions such as `"1 - r^2"`, `"t*r^4"`, `"-3*r^-1*t"`.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        pieces.push(&s[start..]);

        let mut terms = Vec::new();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'-' => (-1, &piece[1..]),
                b'+' => (1, &piece[1..]),
                _ => (1, piece),
            };
            let mut coeff = BigInt::from(sign);
            let mut exp = BiExp::default();
            for factor in body.split('*') {
                let bad = || Error::Parse(format!("bad factor {factor:?}"));
                match factor.chars().next() {
                    Some(v @ ('r' | 't')) => {
                        let e: i32 = match factor[1..].strip_prefix('^') {
                            Some(n) => n.parse().map_err(|_| bad())?,
                            None if factor.len() == 1 => 1,
                            None => return Err(bad()),
                        };
                        if v == 'r' {
                            exp.r += e;
                        } else {
                            exp.t += e;
                        }
                    }
                    Some(_) => coeff *= factor.parse::<BigInt>().map_err(|_| bad())?,
                    None => return Err(bad()),
                }
            }
            terms.push((exp, coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

/// JSON form: `[[coeff_string, e_r, e_t], ...]` sorted by `(e_t, e_r)`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(c.to_string(), e.r, e.t))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(String, i32, i32)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (c, e_r, e_t) in raw {
            let c: BigInt = c.parse().map_err(|_| de::Error::custom(format!("invalid integer {c:?}")))?;
            terms.push((BiExp::new(e_r, e_t), c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn add_examples() {
        assert!((p("r^4") + p("-r^4")).is_zero());
        assert_eq!(p("r^5 - r^3") + p("r^3"), p("r^5"));
        assert_eq!(p("1 - r^2") + p("r^2 - r^4"), p("1 - r^4"));
        assert_eq!(p("r^2 + t") + LaurentPoly::zero(), p("t + r^2"));
    }

    #[test]
    fn mul_examples() {
        assert!((p("r") * p("r^-1")).is_one());
        assert_eq!(p("1 - r^2") * p("1 + r^2"), p("1 - r^4"));
        // r^(ht+1)(r^2 - 1) at height 1
        assert_eq!(p("r^2") * p("r^2 - 1"), p("r^4 - r^2"));
    }

    #[test]
    fn t_degree_range_examples() {
        assert_eq!(p("t*r^6").t_degree_range(), Ok((1, 1)));
        assert_eq!(p("1 + t^2*r").t_degree_range(), Ok((0, 2)));
        assert_eq!(p("r^-1*t^-1 + r").t_degree_range(), Ok((-1, 0)));
        assert_eq!(LaurentPoly::zero().t_degree_range(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("r^4").bar(), p("r^-4"));
        assert_eq!(p("t*r^9").bar(), p("t^-1*r^-9"));
        assert_eq!(p("1 - r^2").bar(), p("1 - r^-2"));
    }

    #[test]
    fn eval_r_examples() {
        let half = q(1, 2);
        assert_eq!(p("r^2 - 1").eval_r(&half).unwrap(), TPoly::constant(q(-3, 4)));
        assert_eq!(p("t*r^4").eval_r(&half).unwrap(), TPoly::monomial(q(1, 16), 1));
        assert!(LaurentPoly::zero().eval_r(&half).unwrap().is_zero());
        assert_eq!(p("r").eval_r(&q(0, 1)), Err(Error::ZeroSubstitution));
        assert_eq!(p("r^-2").eval_r(&half).unwrap(), TPoly::constant(q(4, 1)));
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let x = LaurentPoly::from_terms(vec![
            (BiExp::new(1, 0), BigInt::from(2)),
            (BiExp::new(1, 0), BigInt::from(-2)),
            (BiExp::new(0, 1), BigInt::from(0)),
        ]);
        assert!(x.is_zero());
        assert_eq!(p("r + r - 2*r"), LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        let a = p("r^5 - r^3");
        assert_eq!(a.exact_div(&p("r^2 - 1")), Some(p("r^3")));
        assert_eq!(p("1 - r^4").exact_div(&p("1 + r^2")), Some(p("1 - r^2")));
        assert_eq!(p("r^4").exact_div(&p("r^2 - 1")), None);
        assert_eq!(p("2*r").exact_div(&p("4")), None);
        let big = p("t*r^3 - 2*t^2 + r^-1") * p("r - t^-1 + 7");
        assert_eq!(big.exact_div(&p("r - t^-1 + 7")), Some(p("t*r^3 - 2*t^2 + r^-1")));
    }

    #[test]
    fn display_and_parse_agree() {
        for s in ["0", "1", "-t*r^6", "r^-1 - r", "3*t^-2*r + 5"] {
            let x = p(s);
            assert_eq!(p(&x.to_string()), x);
        }
        assert_eq!(p("t*r^4").to_string(), "t*r^4");
        assert_eq!(p("1 - r^2").to_string(), "1 - r^2");
        assert_eq!(p("r^-1 - r").to_string(), "r^-1 - r");
    }

    #[test]
    fn json_format() {
        let x = p("t*r^4 - r^3 + r^5");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"[["-1",3,0],["1",5,0],["1",4,1]]"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&LaurentPoly::zero()).unwrap(), "[]");
        assert!(serde_json::from_str::<LaurentPoly>(r#"[["x",1,1]]"#).is_err());
    }

    #[test]
    fn huge_coefficients_survive() {
        let x = p("123456789012345678901234567890*r");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"[["123456789012345678901234567890",1,0]]"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), x);
    }
}
