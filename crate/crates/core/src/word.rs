//! Free group words over an explicit alphabet.
//!
//! A [`Word`] is always freely reduced. Every word carries a shared reference
//! to its [`Alphabet`], so that mixing words from unrelated free groups is
//! reported as [`Error::AlphabetMismatch`] instead of silently producing junk.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of uniquely named free generators.
#[derive(Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Arc::new(Alphabet { names, lookup }))
    }

    /// `prefix1, ..., prefixN`, e.g. the free basis `x1..xn`.
    pub fn indexed(prefix: &str, n: usize) -> Arc<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("indexed names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.names[g.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Option<Generator> {
        self.lookup.get(name).copied().map(Generator)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (0..self.names.len()).map(Generator)
    }
}

/// Position of a generator in its alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(pub usize);

impl Generator {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn pos(g: usize) -> Self {
        Letter::new(Generator(g), false)
    }

    pub fn neg(g: usize) -> Self {
        Letter::new(Generator(g), true)
    }

    pub fn inv(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }

    pub fn sign(self) -> i64 {
        if self.inverse { -1 } else { 1 }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

// x1 < x1^-1 < x2 < x2^-1 < ...
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.generator, self.inverse).cmp(&(other.generator, other.inverse))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Free reduction of a letter sequence (single stack pass).
pub fn free_reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in raw {
        match out.last() {
            Some(&last) if last.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// A freely reduced element of the free group on an alphabet.
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        Word { alphabet: alphabet.clone(), letters: Vec::new() }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, g: Generator) -> Self {
        Word { alphabet: alphabet.clone(), letters: vec![Letter::new(g, false)] }
    }

    /// Freely reduces `raw`; panics if a letter is outside the alphabet.
    pub fn reduce<I: IntoIterator<Item = Letter>>(alphabet: &Arc<Alphabet>, raw: I) -> Self {
        let letters = free_reduce(raw);
        assert!(
            letters.iter().all(|l| l.generator.0 < alphabet.len()),
            "letter outside alphabet"
        );
        Word { alphabet: alphabet.clone(), letters }
    }

    /// Looks up generators by name; `(name, exponent)` pairs.
    pub fn from_powers(alphabet: &Arc<Alphabet>, powers: &[(&str, i64)]) -> Result<Self> {
        let mut raw = Vec::new();
        for &(name, e) in powers {
            let g = alphabet
                .generator(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            let l = Letter::new(g, e < 0);
            raw.extend(std::iter::repeat(l).take(e.unsigned_abs() as usize));
        }
        Ok(Word::reduce(alphabet, raw))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet)
    }

    fn check(&self, other: &Word) -> Result<()> {
        if self.same_alphabet(other) { Ok(()) } else { Err(Error::AlphabetMismatch) }
    }

    pub fn inverse(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            match letters.last() {
                Some(&last) if last.cancels(l) => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        Word { alphabet: self.alphabet.clone(), letters }
    }

    /// Product of several words; all must share one alphabet.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(alphabet: &Arc<Alphabet>, words: I) -> Result<Word> {
        let mut acc = Word::identity(alphabet);
        for w in words {
            acc = acc.multiply(w)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity(&self.alphabet);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_unchecked(&base);
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.check(other)?;
        Ok(self
            .inverse()
            .mul_unchecked(&other.inverse())
            .mul_unchecked(self)
            .mul_unchecked(other))
    }

    /// `b^-1 a b`.
    pub fn conjugate_by(&self, by: &Word) -> Result<Word> {
        self.check(by)?;
        Ok(by.inverse().mul_unchecked(self).mul_unchecked(by))
    }

    /// Splits `w = conjugator^-1 * core * conjugator` with `core` cyclically reduced.
    pub fn cyclically_reduce(&self) -> (Word, Word) {
        let l = &self.letters;
        let mut k = 0;
        while l.len() >= 2 * (k + 1) && l[k].cancels(l[l.len() - 1 - k]) {
            k += 1;
        }
        let core = l[k..l.len() - k].to_vec();
        let conjugator = l[l.len() - k..].to_vec();
        (
            Word { alphabet: self.alphabet.clone(), letters: core },
            Word { alphabet: self.alphabet.clone(), letters: conjugator },
        )
    }

    /// Signed letter count of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.alphabet.len()];
        for l in &self.letters {
            sums[l.generator.0] += l.sign();
        }
        sums
    }

    /// Reinterprets the letters over an alphabet at least as large.
    pub fn rebase(&self, alphabet: &Arc<Alphabet>) -> Result<Word> {
        if alphabet.len() < self.alphabet.len() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Word { alphabet: alphabet.clone(), letters: self.letters.clone() })
    }
}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.same_alphabet(other)
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

/// Shortlex: length first, then letterwise.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// `x1^-1*x2*x1`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.alphabet.name(l.generator))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
