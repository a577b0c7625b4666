use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::det::{bareiss_det, DetRing};
use crate::error::{Error, Result};

/// Polynomial over `Q` in a fixed, named list of variables.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// Graded lexicographic order: total degree first, then the earlier variable
/// with the larger exponent wins.
fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &Arc<Vec<String>>) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The `i`-th variable (0-based).
    pub fn var(vars: &Arc<Vec<String>>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, BigRational::one(), e)
    }

    pub fn monomial(vars: &Arc<Vec<String>>, c: BigRational, exponents: Vec<u32>) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exponents, c);
        p
    }

    /// Variables `prefix1 .. prefixN`.
    pub fn indexed_vars(prefix: &str, n: usize) -> Arc<Vec<String>> {
        Arc::new((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists"
        );
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.vars), |acc, _| &acc * self)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// `∂f/∂v_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * BigRational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Determinant of the matrix of second partials over all declared variables.
    pub fn hessian(&self) -> Self {
        let m = self.vars.len();
        let first: Vec<Self> = (0..m).map(|i| self.derivative(i)).collect();
        let matrix: Vec<Vec<Self>> =
            first.iter().map(|d| (0..m).map(|j| d.derivative(j)).collect()).collect();
        bareiss_det(matrix, Self::one(&self.vars))
    }

    /// Replaces variable `i` by `Σ_j b[i][j] v_j`.
    pub fn substitute_linear(&self, b: &[Vec<BigRational>]) -> Result<Self> {
        let m = self.vars.len();
        if b.len() != m || b.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {m}x{m} matrix for {} variables",
                m
            )));
        }
        let forms: Vec<Self> = b
            .iter()
            .map(|row| {
                let mut f = Self::zero(&self.vars);
                for (j, c) in row.iter().enumerate() {
                    let mut e = vec![0; m];
                    e[j] = 1;
                    f.add_term(e, c.clone());
                }
                f
            })
            .collect();
        let mut powers: Vec<Vec<Self>> = forms.iter().map(|f| vec![Self::one(&self.vars), f.clone()]).collect();
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(&self.vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &forms[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `Some((c, exponents))` when the polynomial is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(&BigRational, &[u32])> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, e.as_slice()))
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        self.check_vars(d);
        let (de, dc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone())).expect("division by zero");
        let mut rem = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let t = Self::monomial(&self.vars, rc / &dc, e);
            rem = &rem - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Parses a polynomial such as `y1^2*y4 - 3/2*y2*y3 + 7` over `vars`.
    pub fn parse(text: &str, vars: &Arc<Vec<String>>) -> Result<Self> {
        let bad = |why: &str| Error::PolyParse(format!("{text}: {why}"));
        let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = Self::zero(vars);
        let mut rest = src.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = BigRational::one();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if !first {
                return Err(bad("expected '+' or '-'"));
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = sign;
            let mut e = vec![0u32; vars.len()];
            for factor in term.split('*') {
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let q: BigRational = factor.parse().map_err(|_| bad("bad coefficient"))?;
                    coeff *= q;
                    continue;
                }
                let (name, k) = match factor.split_once('^') {
                    Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                let i = vars.iter().position(|v| v == name).ok_or_else(|| bad("unknown variable"))?;
                e[i] += k;
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars, terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl DetRing for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
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
        MultiPoly::exact_div(self, other)
    }
}

impl fmt::Display for MultiPoly {
    /// Expanded, descending graded lexicographic order: `64*y1^2*y2^2*y3^2`,
    /// `y1^2*y4 - y2^2*y5 - y1*y2*y3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex(b.0, a.0));
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { self.vars[v].clone() } else { format!("{}^{k}", self.vars[v]) })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
