use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::det::DetRing;
use super::upoly::UPoly;
use crate::error::Error;

/// Element of `Z[t, t^-1]`: exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &BigInt::from(c));
        }
        p
    }

    /// From ascending integer coefficients starting at `t^0`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    pub(crate) fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    /// `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().next().unwrap().abs().is_one()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// `self = t^shift * poly` with `poly(0) != 0`.
    pub fn split_unit_power(&self) -> (UPoly, i64) {
        let Some(lo) = self.min_exponent() else { return (UPoly::default(), 0) };
        let hi = self.max_exponent().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.coeffs {
            v[(e - lo) as usize] = c.clone();
        }
        (UPoly::new(v), lo)
    }

    pub fn from_upoly(p: &UPoly, shift: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as i64 + shift, c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e, x) in &self.coeffs {
            out.add_term(e, &(x * c));
        }
        out
    }

    /// Canonical associate under units `±t^k`: lowest exponent 0 and a positive
    /// constant term. Zero stays zero.
    pub fn normalize(&self) -> Self {
        let Some(lo) = self.min_exponent() else { return LaurentPoly::zero() };
        let p = self.shift(-lo);
        if p.coeff(0).is_negative() { -p } else { p }
    }

    /// Normalized gcd in `Z[t, t^-1]`. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (a, _) = self.split_unit_power();
        let (b, _) = other.split_unit_power();
        LaurentPoly::from_upoly(&a.gcd(&b), 0).normalize()
    }

    /// Exact quotient in `Z[t, t^-1]`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (a, sa) = self.split_unit_power();
        let (b, sb) = d.split_unit_power();
        a.exact_div(&b).map(|q| LaurentPoly::from_upoly(&q, sa - sb))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Evaluation at an integer point (test helper; `t != 0` when negative exponents occur).
    pub fn eval(&self, t: &num_rational::BigRational) -> num_rational::BigRational {
        self.coeffs
            .iter()
            .map(|(&e, c)| num_rational::BigRational::from_integer(c.clone()) * t.pow(e as i32))
            .fold(num_rational::BigRational::zero(), |a, b| a + b)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                <&LaurentPoly as $tr>::$m(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl DetRing for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        LaurentPoly::exact_div(self, other)
    }
}

impl fmt::Display for LaurentPoly {
    /// Expanded, ascending exponents: `1 - 3*t + 2*t^2`, `-t^-2 + t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if e == 1 { f.write_str("t")? } else { write!(f, "t^{e}")? }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Inverse of `Display`; also accepts `c*t^e` terms in any order.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::PolyParse(s.to_string());
        let pieces: Vec<&str> = s.split_whitespace().collect();
        let glued = |a: &str, b: &str| {
            a.ends_with(|c: char| c.is_ascii_alphanumeric()) && b.starts_with(|c: char| c.is_ascii_alphanumeric())
        };
        if pieces.windows(2).any(|w| glued(w[0], w[1])) {
            return Err(bad());
        }
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(bad());
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        let int = |i: &mut usize| -> Option<BigInt> {
            let start = *i;
            if *i < src.len() && src[*i] == '-' {
                *i += 1;
            }
            while *i < src.len() && src[*i].is_ascii_digit() {
                *i += 1;
            }
            src[start..*i].iter().collect::<String>().parse().ok()
        };
        while i < src.len() {
            let mut sign = BigInt::one();
            if src[i] == '+' || src[i] == '-' {
                if src[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let mut coeff = BigInt::one();
            let mut have = false;
            if i < src.len() && src[i].is_ascii_digit() {
                coeff = int(&mut i).ok_or_else(bad)?;
                have = true;
                if i < src.len() && src[i] == '*' {
                    i += 1;
                    if i >= src.len() || src[i] != 't' {
                        return Err(bad());
                    }
                }
            }
            let mut e = 0;
            if i < src.len() && src[i] == 't' {
                i += 1;
                e = 1;
                have = true;
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    e = int(&mut i).and_then(|v| i64::try_from(v).ok()).ok_or_else(bad)?;
                }
            }
            if !have {
                return Err(bad());
            }
            out.add_term(e, &(sign * coeff));
        }
        Ok(out)
    }
}
