//! Class-2 nilpotent Lie algebras, the alternating-sum invariant in the
//! universal enveloping algebra, and the Hessian test for non-equivalence.
//!
//! In class 2 every double bracket vanishes, so the Jacobi identity holds for
//! any bracket table and is never checked.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::alexander::Verdict;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Largest `n` for which the alternating sum over `S_n` is evaluated.
pub const MAX_GENERATORS: usize = 8;

/// Lie algebra with basis `x_1..x_n, y_1..y_r`, where the `y` span the centre
/// and contain every bracket `[x_i, x_j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NilLie2 {
    n: usize,
    y_vars: Arc<Vec<String>>,
    /// Row-major over pairs `i < j`; each entry is the y-vector of `[x_i, x_j]`.
    brackets: BTreeMap<(usize, usize), Vec<BigRational>>,
}

impl NilLie2 {
    /// Abelian algebra of the given shape, variables named `y1..yr`.
    pub fn abelian(n: usize, r: usize) -> Self {
        NilLie2 { n, y_vars: MultiPoly::indexed_vars("y", r), brackets: BTreeMap::new() }
    }

    pub fn x_count(&self) -> usize {
        self.n
    }

    pub fn y_count(&self) -> usize {
        self.y_vars.len()
    }

    pub fn y_vars(&self) -> &Arc<Vec<String>> {
        &self.y_vars
    }

    /// Sets `[x_i, x_j]` (0-based); `i > j` stores the negated vector.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<BigRational>) -> Result<()> {
        if i >= self.n || j >= self.n || i == j {
            return Err(Error::OutOfRange { what: "bracket index", detail: format!("({i}, {j}) with n = {}", self.n) });
        }
        if value.len() != self.y_count() {
            return Err(Error::DimensionMismatch(format!("bracket vector must have length {}", self.y_count())));
        }
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), value.into_iter().map(|c| -c).collect()) };
        if value.iter().all(Zero::is_zero) {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, value);
        }
        Ok(())
    }

    /// Sets `[x_i, x_j] = sign * y_k` (all 0-based).
    pub fn set_bracket_basis(&mut self, i: usize, j: usize, sign: i64, k: usize) -> Result<()> {
        let mut v = vec![BigRational::zero(); self.y_count()];
        if k >= v.len() {
            return Err(Error::OutOfRange { what: "central basis index", detail: format!("{k}") });
        }
        v[k] = BigRational::from_integer(BigInt::from(sign));
        self.set_bracket(i, j, v)
    }

    /// y-vector of `[x_i, x_j]` for any ordered pair.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<BigRational> {
        let zero = || vec![BigRational::zero(); self.y_count()];
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).cloned().unwrap_or_else(zero),
            std::cmp::Ordering::Greater => {
                self.brackets.get(&(j, i)).map(|v| v.iter().map(|c| -c).collect()).unwrap_or_else(zero)
            }
            std::cmp::Ordering::Equal => zero(),
        }
    }

    /// `[x_i, x_j]` as a linear polynomial in the `y` variables.
    pub fn bracket_poly(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.y_vars);
        for (k, c) in self.bracket(i, j).into_iter().enumerate() {
            let mut e = vec![0; self.y_count()];
            e[k] = 1;
            out.add_term(e, c);
        }
        out
    }
}

/// Element of `U(L)` in ordered normal form: x-monomials `x_1^{e_1}⋯x_n^{e_n}`
/// with coefficients in the polynomial ring of the centre.
#[derive(Clone, PartialEq, Eq)]
pub struct UElement {
    n: usize,
    y_vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, MultiPoly>,
}

impl UElement {
    pub fn zero(l: &NilLie2) -> Self {
        UElement { n: l.n, y_vars: l.y_vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(l: &NilLie2) -> Self {
        Self::central(l, MultiPoly::one(&l.y_vars))
    }

    /// A central element (no x-part).
    pub fn central(l: &NilLie2, p: MultiPoly) -> Self {
        let mut out = Self::zero(l);
        out.add_term(vec![0; l.n], p);
        out
    }

    /// The basis element `x_i` (0-based).
    pub fn x(l: &NilLie2, i: usize) -> Self {
        let mut e = vec![0; l.n];
        e[i] = 1;
        let mut out = Self::zero(l);
        out.add_term(e, MultiPoly::one(&l.y_vars));
        out
    }

    /// The basis element `y_k` (0-based).
    pub fn y(l: &NilLie2, k: usize) -> Self {
        Self::central(l, MultiPoly::var(&l.y_vars, k))
    }

    /// `coeff * x^exponents`.
    pub fn term(l: &NilLie2, exponents: Vec<u32>, coeff: MultiPoly) -> Self {
        let mut out = Self::zero(l);
        out.add_term(exponents, coeff);
        out
    }

    fn add_term(&mut self, e: Vec<u32>, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, p) in &other.terms {
            out.add_term(e.clone(), p.clone());
        }
        out
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        let mut out = UElement { n: self.n, y_vars: self.y_vars.clone(), terms: BTreeMap::new() };
        for (e, p) in &self.terms {
            out.add_term(e.clone(), p * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-MultiPoly::one(&self.y_vars)))
    }

    /// Right multiplication by a single `x_k`. Moving `x_k` left past
    /// `x_j^{e}` (`j > k`) uses `x_j^e x_k = x_k x_j^e - e [x_k, x_j] x_j^{e-1}`.
    fn mul_x(&self, k: usize, l: &NilLie2) -> Self {
        let mut out = UElement { n: self.n, y_vars: self.y_vars.clone(), terms: BTreeMap::new() };
        let corrections: Vec<(usize, MultiPoly)> =
            (k + 1..self.n).map(|j| (j, l.bracket_poly(k, j))).filter(|(_, c)| !c.is_zero()).collect();
        for (e, p) in &self.terms {
            let mut main = e.clone();
            main[k] += 1;
            out.add_term(main, p.clone());
            for (j, c) in &corrections {
                if e[*j] == 0 {
                    continue;
                }
                let mut lowered = e.clone();
                lowered[*j] -= 1;
                let factor = c.scale(&BigRational::from_integer(BigInt::from(e[*j])));
                out.add_term(lowered, -(p * &factor));
            }
        }
        out
    }
}

/// Product in `U(L)`, returned in normal form.
pub fn u_multiply(a: &UElement, b: &UElement, l: &NilLie2) -> Result<UElement> {
    if a.n != l.n || b.n != l.n || a.y_vars.len() != l.y_count() || b.y_vars.len() != l.y_count() {
        return Err(Error::DimensionMismatch("element and algebra shapes differ".into()));
    }
    let mut out = UElement::zero(l);
    for (e, p) in &b.terms {
        let mut partial = a.scale(p);
        for (k, &count) in e.iter().enumerate() {
            for _ in 0..count {
                partial = partial.mul_x(k, l);
            }
        }
        out = out.add(&partial);
    }
    Ok(out)
}

/// `Σ_{σ ∈ S_n} sign(σ) x_{σ(1)} ⋯ x_{σ(n)}` in normal form. Permutations are
/// enumerated depth-first in lexicographic order; choosing the element at
/// position `p` of the remaining sorted list contributes `(-1)^p` to the sign.
pub fn scheuneman_invariant(l: &NilLie2) -> Result<UElement> {
    if l.n == 0 || l.n > MAX_GENERATORS {
        return Err(Error::TooManyGenerators { n: l.n, max: MAX_GENERATORS });
    }
    fn walk(l: &NilLie2, prefix: &UElement, remaining: &mut Vec<usize>, negative: bool, acc: &mut UElement) {
        if remaining.is_empty() {
            *acc = if negative { acc.sub(prefix) } else { acc.add(prefix) };
            return;
        }
        for p in 0..remaining.len() {
            let k = remaining.remove(p);
            let next = prefix.mul_x(k, l);
            walk(l, &next, remaining, negative ^ (p % 2 == 1), acc);
            remaining.insert(p, k);
        }
    }
    let mut acc = UElement::zero(l);
    walk(l, &UElement::one(l), &mut (0..l.n).collect(), false, &mut acc);
    Ok(acc)
}

/// The coefficient of the empty x-monomial, and whether any other term remains.
pub fn central_part(u: &UElement) -> (MultiPoly, bool) {
    let central = u.terms.get(&vec![0; u.n]).cloned().unwrap_or_else(|| MultiPoly::zero(&u.y_vars));
    let has_noncentral = u.terms.keys().any(|e| e.iter().any(|&k| k > 0));
    (central, has_noncentral)
}

/// A choice `α_i = [t_a, t_b]` (1-based `t` indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TBracket(pub usize, pub usize);

impl TBracket {
    /// `sign * y_k` (0-based `k`) with `y1 = [t1,t2]`, `y2 = [t1,t3]`, `y3 = [t2,t3]`.
    pub fn as_signed_basis(self) -> Option<(i64, usize)> {
        let (sign, lo, hi) = if self.0 < self.1 { (1, self.0, self.1) } else { (-1, self.1, self.0) };
        let k = match (lo, hi) {
            (1, 2) => 0,
            (1, 3) => 1,
            (2, 3) => 2,
            _ => return None,
        };
        Some((sign, k))
    }
}

impl fmt::Display for TBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[t{},t{}]", self.0, self.1)
    }
}

/// Admissible values of `α_1, α_2, α_3`.
pub const ALLOWED_ALPHA: [[TBracket; 3]; 3] = [
    [TBracket(1, 2), TBracket(2, 3), TBracket(1, 3)],
    [TBracket(2, 1), TBracket(2, 3), TBracket(1, 3)],
    [TBracket(1, 2), TBracket(3, 2), TBracket(3, 1)],
];

/// Parses `[t2,t3]` or a signed basis name such as `-y3`.
pub fn parse_alpha(text: &str) -> Result<TBracket> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::InvalidAlpha(text.to_string());
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let idx = |t: &str| t.strip_prefix('t').and_then(|d| d.parse::<usize>().ok()).ok_or_else(bad);
        return Ok(TBracket(idx(a)?, idx(b)?));
    }
    let (negative, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('+').unwrap_or(&s)),
    };
    let pair = match rest {
        "y1" => (1, 2),
        "y2" => (1, 3),
        "y3" => (2, 3),
        _ => return Err(bad()),
    };
    Ok(if negative { TBracket(pair.1, pair.0) } else { TBracket(pair.0, pair.1) })
}

/// Parses `a1=[t2,t3];a2=[t1,t3];a3=[t1,t2]` (keys optional, in order).
pub fn parse_alpha_triple(text: &str) -> Result<[TBracket; 3]> {
    let parts: Vec<&str> = text.split(';').map(str::trim).filter(|p| !p.is_empty()).collect();
    if parts.len() != 3 {
        return Err(Error::InvalidAlpha(format!("{text}: expected three values")));
    }
    let mut out = [TBracket(0, 0); 3];
    for (i, part) in parts.iter().enumerate() {
        let value = match part.split_once('=') {
            Some((key, v)) => {
                if key.trim() != format!("a{}", i + 1) {
                    return Err(Error::InvalidAlpha(format!("{text}: expected key a{}", i + 1)));
                }
                v
            }
            None => part,
        };
        out[i] = parse_alpha(value)?;
    }
    Ok(out)
}

/// The 12-dimensional algebra with `x`-basis `(t1,t2,t3,u1,u2,u3)`, centre
/// `y1=[t1,t2], y2=[t1,t3], y3=[t2,t3], y4=[u1,u2], y5=[u1,u3], y6=[u2,u3]`,
/// `[t_i,u_i] = α_i` and all other `[t_i,u_j] = 0`.
pub fn build_l_alpha(alpha: &[TBracket; 3]) -> Result<NilLie2> {
    for (i, a) in alpha.iter().enumerate() {
        if !ALLOWED_ALPHA[i].contains(a) {
            return Err(Error::InvalidAlpha(format!("a{} = {a} is not one of the admissible brackets", i + 1)));
        }
    }
    let mut l = NilLie2::abelian(6, 6);
    for (k, (i, j)) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)].into_iter().enumerate() {
        l.set_bracket_basis(i, j, 1, k)?;
    }
    for (i, a) in alpha.iter().enumerate() {
        let (sign, k) = a.as_signed_basis().expect("admissible brackets are basis elements");
        l.set_bracket_basis(i, i + 3, sign, k)?;
    }
    Ok(l)
}

/// Multiset (sorted) of the nonzero exponents of a monomial; `None` for zero or
/// a polynomial with more than one term.
pub fn hessian_signature(f: &MultiPoly) -> Option<Vec<u32>> {
    let (_, e) = f.as_monomial()?;
    let mut out: Vec<u32> = e.iter().copied().filter(|&k| k > 0).collect();
    out.sort_unstable();
    Some(out)
}

/// Invariant data computed for one form or algebra.
#[derive(Clone, Debug)]
pub struct FormReport {
    pub form: MultiPoly,
    pub has_noncentral: bool,
    pub hessian: MultiPoly,
    pub signature: Option<Vec<u32>>,
}

impl FormReport {
    pub fn of_form(form: MultiPoly) -> Self {
        let hessian = form.hessian();
        let signature = hessian_signature(&hessian);
        FormReport { form, has_noncentral: false, hessian, signature }
    }

    /// A non-central remainder leaves the signature undefined.
    pub fn of_algebra(l: &NilLie2) -> Result<Self> {
        let (form, has_noncentral) = central_part(&scheuneman_invariant(l)?);
        let mut report = Self::of_form(form);
        report.has_noncentral = has_noncentral;
        if has_noncentral {
            report.signature = None;
        }
        Ok(report)
    }
}

/// `Distinguished` only when both signatures are defined and differ.
pub fn compare_signatures(a: &FormReport, b: &FormReport) -> Verdict {
    match (&a.signature, &b.signature) {
        (Some(x), Some(y)) if x != y => Verdict::Distinguished,
        _ => Verdict::Inconclusive,
    }
}

/// Both reports and the verdict.
#[derive(Clone, Debug)]
pub struct AlgebraComparison {
    pub left: FormReport,
    pub right: FormReport,
    pub verdict: Verdict,
}

pub fn distinguish_algebras(l1: &NilLie2, l2: &NilLie2) -> Result<AlgebraComparison> {
    if l1.x_count() != l2.x_count() || l1.y_count() != l2.y_count() {
        return Err(Error::DimensionMismatch("algebras of different shapes".into()));
    }
    let left = FormReport::of_algebra(l1)?;
    let right = FormReport::of_algebra(l2)?;
    let verdict = compare_signatures(&left, &right);
    Ok(AlgebraComparison { left, right, verdict })
}

pub fn distinguish_forms(f1: &MultiPoly, f2: &MultiPoly) -> AlgebraComparison {
    let left = FormReport::of_form(f1.clone());
    let right = FormReport::of_form(f2.clone());
    let verdict = compare_signatures(&left, &right);
    AlgebraComparison { left, right, verdict }
}

impl fmt::Display for UElement {
    /// `coeff*x1^2*x3` terms, central term last; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, p) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            let coeff_is_one = p.as_monomial().is_some_and(|(c, ex)| c.is_one() && ex.iter().all(|&k| k == 0));
            match (mono.is_empty(), coeff_is_one) {
                (true, _) => write!(f, "({p})")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "({p})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UElement({self})")
    }
}
