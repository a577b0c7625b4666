//! Alexander matrices and Alexander polynomials of finite presentations.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::fox::{word_weight, GroupRingElement};
use crate::poly::{bareiss_det, LaurentPoly};
use crate::presentation::Presentation;

/// Dense matrix over `Z[t, t^-1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl LaurentMatrix {
    pub fn new(entries: Vec<Vec<LaurentPoly>>, cols: usize) -> Result<Self> {
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("every row must have {cols} entries")));
        }
        Ok(LaurentMatrix { rows: entries.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i]
    }

    /// Checks `Σ_j m[i][j] (t^{w_j} - 1) = 0` for every row.
    pub fn row_identity_holds(&self, weights: &[i64]) -> bool {
        let one = LaurentPoly::one();
        self.entries.iter().all(|row| {
            row.iter()
                .zip(weights)
                .fold(LaurentPoly::zero(), |acc, (e, &w)| &acc + &(e * &(&LaurentPoly::t_pow(w) - &one)))
                .is_zero()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.entries.swap(a, b);
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.entries {
            row.swap(a, b);
        }
    }

    /// `row[dst] += factor * row[src]`.
    pub fn add_row_multiple(&mut self, src: usize, dst: usize, factor: &LaurentPoly) {
        assert_ne!(src, dst);
        for j in 0..self.cols {
            let add = &self.entries[src][j] * factor;
            self.entries[dst][j] = &self.entries[dst][j] + &add;
        }
    }

    /// `col[dst] += factor * col[src]`.
    pub fn add_col_multiple(&mut self, src: usize, dst: usize, factor: &LaurentPoly) {
        assert_ne!(src, dst);
        for row in &mut self.entries {
            let add = &row[src] * factor;
            row[dst] = &row[dst] + &add;
        }
    }

    pub fn scale_row(&mut self, i: usize, factor: &LaurentPoly) {
        for e in &mut self.entries[i] {
            *e = &*e * factor;
        }
    }

    pub fn scale_col(&mut self, j: usize, factor: &LaurentPoly) {
        for row in &mut self.entries {
            row[j] = &row[j] * factor;
        }
    }

    /// Determinant of the submatrix on the given rows and columns. Each row is
    /// first shifted by a power of `t` so its entries are ordinary polynomials;
    /// the result is therefore correct up to a unit `t^k`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> LaurentPoly {
        let sub: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .map(|&i| {
                let row: Vec<LaurentPoly> = cols.iter().map(|&j| self.entries[i][j].clone()).collect();
                let lo = row.iter().filter_map(LaurentPoly::min_exponent).min().unwrap_or(0);
                row.into_iter().map(|e| e.shift(-lo)).collect()
            })
            .collect();
        bareiss_det(sub, LaurentPoly::one())
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "[{}]", row.iter().join(", "))?;
        }
        Ok(())
    }
}

/// Matrix, normalized polynomial and the minor size that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderResult {
    pub matrix: LaurentMatrix,
    pub polynomial: LaurentPoly,
    pub minor_size: usize,
}

/// Outcome of comparing two invariants. Equal invariants never prove isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Distinguished,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinguished => "distinguished",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Checks that `g ↦ t^{weights[g]}` kills every relator.
pub fn check_weights(p: &Presentation, weights: &[i64]) -> Result<()> {
    if weights.len() < p.generator_count() {
        return Err(Error::MissingWeight(p.alphabet().names()[weights.len()].clone()));
    }
    for (index, r) in p.relators().iter().enumerate() {
        let sum = word_weight(r, weights);
        if sum != 0 {
            return Err(Error::NotAHomomorphism { index, relator: r.to_string(), sum });
        }
    }
    Ok(())
}

/// Entry `(i, j)` is the specialization of `∂r_i/∂x_j`.
pub fn alexander_matrix(p: &Presentation, weights: &[i64]) -> Result<LaurentMatrix> {
    check_weights(p, weights)?;
    let entries = p
        .relators()
        .iter()
        .map(|r| {
            let v = GroupRingElement::from_word(r);
            p.alphabet().generators().map(|g| v.fox_derivative(g)?.specialize(weights)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LaurentMatrix::new(entries, p.generator_count())
}

/// Normalized gcd of all `k × k` minors; `0` when there are fewer than `k` rows.
/// Minors are visited in lexicographic order and the scan stops once the gcd is 1.
pub fn minors_gcd(m: &LaurentMatrix, k: usize) -> Result<LaurentPoly> {
    if k > m.cols {
        return Err(Error::OutOfRange { what: "minor size", detail: format!("{k} exceeds {} columns", m.cols) });
    }
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    if m.rows < k {
        return Ok(LaurentPoly::zero());
    }
    let mut acc = LaurentPoly::zero();
    for rows in (0..m.rows).combinations(k) {
        for cols in (0..m.cols).combinations(k) {
            let d = m.minor(&rows, &cols);
            if d.is_zero() {
                continue;
            }
            acc = acc.gcd(&d);
            if acc.is_one() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

/// Gcd of the `(g-1) × (g-1)` minors of the Alexander matrix, `g` the generator count.
pub fn alexander_polynomial(p: &Presentation, weights: &[i64]) -> Result<AlexanderResult> {
    let matrix = alexander_matrix(p, weights)?;
    let minor_size = p.generator_count().saturating_sub(1);
    let polynomial = minors_gcd(&matrix, minor_size)?;
    Ok(AlexanderResult { matrix, polynomial, minor_size })
}

/// Both results and the verdict from comparing their polynomials.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub left: AlexanderResult,
    pub right: AlexanderResult,
    pub verdict: Verdict,
}

pub fn distinguish(p1: &Presentation, w1: &[i64], p2: &Presentation, w2: &[i64]) -> Result<Comparison> {
    let left = alexander_polynomial(p1, w1)?;
    let right = alexander_polynomial(p2, w2)?;
    let verdict = if left.polynomial == right.polynomial { Verdict::Inconclusive } else { Verdict::Distinguished };
    Ok(Comparison { left, right, verdict })
}
