//! Integral group ring of a free group and Fox derivatives.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::word::{same_alphabet, Alphabet, Generator, Word};

/// Finite integer combination of reduced words.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        GroupRingElement { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::from_word(&Word::identity(alphabet))
    }

    pub fn from_word(w: &Word) -> Self {
        Self::monomial(w, 1)
    }

    pub fn monomial(w: &Word, c: i64) -> Self {
        let mut out = Self::zero(w.alphabet());
        out.add_term(w.clone(), c);
        out
    }

    /// Sum of `c * w`; all words must share one alphabet.
    pub fn from_terms<'a, I>(alphabet: &Arc<Alphabet>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a Word, i64)>,
    {
        let mut out = Self::zero(alphabet);
        for (w, c) in terms {
            if !same_alphabet(alphabet, w.alphabet()) {
                return Err(Error::AlphabetMismatch);
            }
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) { Ok(()) } else { Err(Error::AlphabetMismatch) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (w, &x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Ring product; word products are reduced eagerly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.alphabet);
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                out.add_term(u.mul_unchecked(v), a * b);
            }
        }
        Ok(out)
    }

    /// The augmentation `τ`: sum of coefficients.
    pub fn augment(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `∂v/∂g`, computed word by word by peeling letters from the left.
    pub fn fox_derivative(&self, g: Generator) -> Result<Self> {
        if g.index() >= self.alphabet.len() {
            return Err(Error::UnknownGenerator(format!("#{}", g.index())));
        }
        let mut out = Self::zero(&self.alphabet);
        for (w, &c) in &self.terms {
            for (d, s) in word_derivative_terms(w, g) {
                out.add_term(d, c * s);
            }
        }
        Ok(out)
    }

    /// Checks `v - τ(v) = Σ_j ∂v/∂x_j (x_j - 1)` exactly.
    pub fn fundamental_check(&self) -> bool {
        let one = Self::one(&self.alphabet);
        let mut rhs = Self::zero(&self.alphabet);
        for g in self.alphabet.generators() {
            let x = Self::from_word(&Word::generator(&self.alphabet, g));
            let factor = x.sub(&one).expect("same alphabet");
            let term = self.fox_derivative(g).expect("generator in range").mul(&factor).expect("same alphabet");
            rhs = rhs.add(&term).expect("same alphabet");
        }
        let lhs = self.sub(&one.scale(self.augment())).expect("same alphabet");
        lhs == rhs
    }

    /// Image under `g ↦ t^{weights[g]}` in `Z[t, t^-1]`.
    pub fn specialize(&self, weights: &[i64]) -> Result<LaurentPoly> {
        if weights.len() < self.alphabet.len() {
            let missing = self.alphabet.names()[weights.len()].clone();
            return Err(Error::MissingWeight(missing));
        }
        let mut out = LaurentPoly::zero();
        for (w, &c) in &self.terms {
            out.add_term(word_weight(w, weights), &BigInt::from(c));
        }
        Ok(out)
    }

    /// As [`specialize`](Self::specialize) with weights looked up by generator name.
    pub fn specialize_named(&self, weights: &HashMap<String, i64>) -> Result<LaurentPoly> {
        self.specialize(&weight_vector(&self.alphabet, weights)?)
    }
}

/// Signed weight sum of the letters of `w`.
pub fn word_weight(w: &Word, weights: &[i64]) -> i64 {
    w.letters().iter().map(|l| l.sign() * weights[l.generator.index()]).sum()
}

/// Weight vector in alphabet order from a name map; every generator must be present.
pub fn weight_vector(alphabet: &Alphabet, weights: &HashMap<String, i64>) -> Result<Vec<i64>> {
    alphabet
        .names()
        .iter()
        .map(|n| weights.get(n).copied().ok_or_else(|| Error::MissingWeight(n.clone())))
        .collect()
}

/// `(word, ±1)` pairs whose sum is `∂w/∂g` for a single word `w`.
fn word_derivative_terms(w: &Word, g: Generator) -> Vec<(Word, i64)> {
    let letters = w.letters();
    let mut out = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        if l.generator != g {
            continue;
        }
        let end = if l.inverse { i + 1 } else { i };
        out.push((Word::reduce(w.alphabet(), letters[..end].iter().copied()), if l.inverse { -1 } else { 1 }));
    }
    out
}

impl fmt::Display for GroupRingElement {
    /// Terms in shortlex order: `-1*x1^-1 + 1*x1^-1*x2^-1`; the identity word prints as its coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if w.is_identity() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}
