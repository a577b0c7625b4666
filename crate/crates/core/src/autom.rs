//! Endomorphisms of free groups given by generator images.
//!
//! Conventions:
//! * `e1.compose(&e2)` is `e1 ∘ e2`: apply `e2` first, then `e1`.
//! * A group word `g1 g2 ... gk` evaluated under an assignment of
//!   endomorphisms acts on the right: `g1` is applied first, so the word maps
//!   to `e_k ∘ ... ∘ e_1`. This is the convention under which the Artin tables
//!   for `σ_i` and `a_rs` satisfy the braid and pure braid relations.
//! * `conj(w)` is `x ↦ w^-1 x w`, matching `ε_ij: x_i ↦ x_j^-1 x_i x_j`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::parse::parse_word;
use crate::presentation::Presentation;
use crate::word::{same_alphabet, Alphabet, Generator, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct Endomorphism {
    alphabet: Arc<Alphabet>,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(alphabet: &Arc<Alphabet>, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::RankMismatch { left: alphabet.len(), right: images.len() });
        }
        if images.iter().any(|w| !same_alphabet(w.alphabet(), alphabet)) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Endomorphism { alphabet: alphabet.clone(), images })
    }

    /// Images given in word syntax, one per generator.
    pub fn from_images(alphabet: &Arc<Alphabet>, images: &[&str]) -> Result<Self> {
        let images = images.iter().map(|s| parse_word(s, alphabet)).collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, images)
    }

    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        let images = alphabet.generators().map(|g| Word::generator(alphabet, g)).collect();
        Endomorphism { alphabet: alphabet.clone(), images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters().len() == 1 && w.letters()[0].generator.0 == i && !w.letters()[0].inverse)
    }

    fn check(&self, other: &Endomorphism) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if !same_alphabet(w.alphabet(), &self.alphabet) {
            return Err(if w.alphabet().len() != self.rank() {
                Error::RankMismatch { left: self.rank(), right: w.alphabet().len() }
            } else {
                Error::AlphabetMismatch
            });
        }
        let mut out = Word::identity(&self.alphabet);
        for l in w.letters() {
            let img = &self.images[l.generator.0];
            out = if l.inverse { out.mul_unchecked(&img.inverse()) } else { out.mul_unchecked(img) };
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        self.check(other)?;
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism { alphabet: self.alphabet.clone(), images })
    }

    pub fn commutes(&self, other: &Endomorphism) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("images:[")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An endomorphism together with an optional caller-supplied inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assigned {
    pub map: Endomorphism,
    pub inverse: Option<Endomorphism>,
}

impl Assigned {
    pub fn new(map: Endomorphism, inverse: Endomorphism) -> Self {
        Assigned { map, inverse: Some(inverse) }
    }

    pub fn without_inverse(map: Endomorphism) -> Self {
        Assigned { map, inverse: None }
    }

    /// Swaps map and inverse. Panics without an inverse.
    pub fn inverted(&self) -> Assigned {
        Assigned { map: self.inverse.clone().expect("inverse supplied"), inverse: Some(self.map.clone()) }
    }
}

fn x(alphabet: &Arc<Alphabet>, i: usize) -> Word {
    Word::generator(alphabet, Generator(i - 1))
}

fn check_index(what: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok { Ok(()) } else { Err(Error::OutOfRange { what, detail: detail() }) }
}

fn with_images(n: usize, f: impl Fn(&Arc<Alphabet>, usize) -> Word) -> Endomorphism {
    let a = Alphabet::indexed("x", n);
    let images = (1..=n).map(|i| f(&a, i)).collect();
    Endomorphism { alphabet: a, images }
}

/// `σ_i`: `x_i ↦ x_i x_{i+1} x_i^-1`, `x_{i+1} ↦ x_i`.
pub fn sigma(i: usize, n: usize) -> Result<Assigned> {
    check_index("braid generator", 1 <= i && i < n, || format!("sigma {i} for n = {n}"))?;
    let map = with_images(n, |a, l| {
        if l == i {
            x(a, i).mul_unchecked(&x(a, i + 1)).mul_unchecked(&x(a, i).inverse())
        } else if l == i + 1 {
            x(a, i)
        } else {
            x(a, l)
        }
    });
    // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^-1 x_i x_{i+1}
    let inverse = with_images(n, |a, l| {
        if l == i {
            x(a, i + 1)
        } else if l == i + 1 {
            x(a, i).conjugate_by(&x(a, i + 1)).unwrap()
        } else {
            x(a, l)
        }
    });
    Ok(Assigned::new(map, inverse))
}

/// Pure braid generator `a_rs` (r < s).
pub fn pure_braid_generator(r: usize, s: usize, n: usize) -> Result<Assigned> {
    check_index("pure braid generator", 1 <= r && r < s && s <= n, || format!("a {r} {s} for n = {n}"))?;
    let map = with_images(n, |a, i| {
        let (xr, xs) = (x(a, r), x(a, s));
        if i == r {
            Word::product(a, [&xr, &xs, &xr, &xs.inverse(), &xr.inverse()]).unwrap()
        } else if r < i && i < s {
            let c = xr.inverse().commutator(&xs.inverse()).unwrap();
            c.mul_unchecked(&x(a, i)).mul_unchecked(&c.inverse())
        } else if i == s {
            Word::product(a, [&xr, &xs, &xr.inverse()]).unwrap()
        } else {
            x(a, i)
        }
    });
    // a_rs fixes P = x_r x_s, acts on x_r, x_s as conjugation by P and sends
    // [x_s, x_r] to [x_r^-1, x_s^-1]^-1, so the inverse is
    // x_r ↦ x_s^-1 x_r x_s, x_s ↦ P^-1 x_s P, x_i ↦ [x_r,x_s]^-1 x_i [x_r,x_s]
    let inverse = with_images(n, |a, i| {
        let (xr, xs) = (x(a, r), x(a, s));
        if i == r {
            xr.conjugate_by(&xs).unwrap()
        } else if r < i && i < s {
            x(a, i).conjugate_by(&xr.commutator(&xs).unwrap()).unwrap()
        } else if i == s {
            xs.conjugate_by(&xr.multiply(&xs).unwrap()).unwrap()
        } else {
            x(a, i)
        }
    });
    Ok(Assigned::new(map, inverse))
}

/// `ε_ij`: `x_i ↦ x_j^-1 x_i x_j`.
pub fn eps(i: usize, j: usize, n: usize) -> Result<Assigned> {
    check_index("basis-conjugating generator", i != j && (1..=n).contains(&i) && (1..=n).contains(&j), || {
        format!("eps {i} {j} for n = {n}")
    })?;
    let map = with_images(n, |a, l| if l == i { x(a, i).conjugate_by(&x(a, j)).unwrap() } else { x(a, l) });
    let inverse =
        with_images(n, |a, l| if l == i { x(a, i).conjugate_by(&x(a, j).inverse()).unwrap() } else { x(a, l) });
    Ok(Assigned::new(map, inverse))
}

/// `ε_ijk`: `x_i ↦ x_i [x_j, x_k]`, with `k` different from `i` and `j`.
pub fn eps_k(i: usize, j: usize, k: usize, n: usize) -> Result<Assigned> {
    let ok = [i, j, k].iter().all(|v| (1..=n).contains(v)) && k != i && k != j && i != j;
    check_index("IA generator", ok, || format!("epsk {i} {j} {k} for n = {n}"))?;
    let map = with_images(n, |a, l| {
        if l == i { x(a, i).mul_unchecked(&x(a, j).commutator(&x(a, k)).unwrap()) } else { x(a, l) }
    });
    let inverse = with_images(n, |a, l| {
        if l == i { x(a, i).mul_unchecked(&x(a, k).commutator(&x(a, j)).unwrap()) } else { x(a, l) }
    });
    Ok(Assigned::new(map, inverse))
}

/// Inner automorphism `x ↦ w^-1 x w`.
pub fn conj(w: &Word) -> Assigned {
    let a = w.alphabet();
    let by = |c: &Word| {
        let images = a.generators().map(|g| Word::generator(a, g).conjugate_by(c).unwrap()).collect();
        Endomorphism { alphabet: a.clone(), images }
    };
    Assigned::new(by(w), by(&w.inverse()))
}

/// `x_i ↦ x_i w`, other generators fixed; `w` must not involve `x_i`.
pub fn right_multiplier(i: usize, w: &Word) -> Result<Assigned> {
    let a = w.alphabet();
    check_index("generator", (1..=a.len()).contains(&i), || format!("x{i} for rank {}", a.len()))?;
    if w.letters().iter().any(|l| l.generator.0 == i - 1) {
        return Err(Error::AutomSpec(format!("right multiplier for x{i} must not involve it: {w}")));
    }
    let build = |m: &Word| {
        let images = (1..=a.len()).map(|l| if l == i { x(a, i).mul_unchecked(m) } else { x(a, l) }).collect();
        Endomorphism { alphabet: a.clone(), images }
    };
    Ok(Assigned::new(build(w), build(&w.inverse())))
}

/// Named tables: `sigma` (i), `a` (r, s), `eps` (i, j), `epsk` (i, j, k).
pub fn builtin_autom(name: &str, indices: &[usize], n: usize) -> Result<Assigned> {
    match (name, indices) {
        ("sigma", &[i]) => sigma(i, n),
        ("a", &[r, s]) => pure_braid_generator(r, s, n),
        ("eps", &[i, j]) => eps(i, j, n),
        ("epsk", &[i, j, k]) => eps_k(i, j, k, n),
        _ => Err(Error::AutomSpec(format!("builtin:{name} with indices {indices:?}"))),
    }
}

/// Parses `builtin:sigma:i:n`, `builtin:a:r:s:n`, `builtin:eps:i:j:n`,
/// `builtin:epsk:i:j:k:n`, `conj:<word>:n`, `rmul:i:<word>:n` or
/// `images:[w1;w2;...]` (over `x1..xn`, no inverse).
pub fn parse_autom_spec(spec: &str) -> Result<Assigned> {
    let bad = || Error::AutomSpec(spec.to_string());
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("builtin:") {
        let mut parts: Vec<&str> = rest.split(':').collect();
        if parts.len() < 2 {
            return Err(bad());
        }
        let name = parts.remove(0);
        let nums = parts.iter().map(|p| p.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>().map_err(|_| bad())?;
        let (n, idx) = nums.split_last().ok_or_else(bad)?;
        builtin_autom(name, idx, *n)
    } else if let Some(rest) = spec.strip_prefix("conj:") {
        let (word, n) = rest.rsplit_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        Ok(conj(&parse_word(word, &Alphabet::indexed("x", n))?))
    } else if let Some(rest) = spec.strip_prefix("rmul:") {
        let (i, rest) = rest.split_once(':').ok_or_else(bad)?;
        let (word, n) = rest.rsplit_once(':').ok_or_else(bad)?;
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        right_multiplier(i, &parse_word(word, &Alphabet::indexed("x", n))?)
    } else if let Some(rest) = spec.strip_prefix("images:") {
        let inner = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(';').map(str::trim).collect();
        let a = Alphabet::indexed("x", parts.len());
        Ok(Assigned::without_inverse(Endomorphism::from_images(&a, &parts)?))
    } else {
        Err(bad())
    }
}

/// Families of generator names that map to built-in automorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutoFamily {
    /// `e_i_j` ↦ `ε_ij`.
    Eps,
    /// `a_i_j` ↦ `a_ij`.
    PureBraid,
    /// `s<i>` ↦ `σ_i`.
    Sigma,
}

/// Assigns each generator of `p` its built-in automorphism by name. The rank is
/// the largest index that occurs (`+1` for `σ`).
pub fn auto_assignment(p: &Presentation, family: AutoFamily) -> Result<HashMap<String, Assigned>> {
    let parse_indices = |name: &str| -> Result<Vec<usize>> {
        let bad = || Error::AutomSpec(format!("generator `{name}` does not fit the {family:?} naming scheme"));
        let (prefix, rest) = match family {
            AutoFamily::Eps => ("e_", name.strip_prefix("e_")),
            AutoFamily::PureBraid => ("a_", name.strip_prefix("a_")),
            AutoFamily::Sigma => ("s", name.strip_prefix('s')),
        };
        let rest = rest.ok_or_else(bad)?;
        let sep = if prefix == "s" { None } else { Some('_') };
        let parts: Vec<&str> = match sep {
            Some(c) => rest.split(c).collect(),
            None => vec![rest],
        };
        parts.iter().map(|d| d.parse::<usize>().map_err(|_| bad())).collect()
    };
    let indexed: Vec<(String, Vec<usize>)> = p
        .alphabet()
        .names()
        .iter()
        .map(|n| parse_indices(n).map(|ix| (n.clone(), ix)))
        .collect::<Result<_>>()?;
    let top = indexed.iter().flat_map(|(_, ix)| ix.iter().copied()).max().unwrap_or(0);
    let n = if family == AutoFamily::Sigma { top + 1 } else { top };
    indexed
        .into_iter()
        .map(|(name, ix)| {
            let a = match (family, ix.as_slice()) {
                (AutoFamily::Eps, &[i, j]) => eps(i, j, n),
                (AutoFamily::PureBraid, &[r, s]) => pure_braid_generator(r, s, n),
                (AutoFamily::Sigma, &[i]) => sigma(i, n),
                _ => Err(Error::AutomSpec(format!("generator `{name}` has the wrong number of indices"))),
            }?;
            Ok((name, a))
        })
        .collect()
}

/// Evaluates a group word under an assignment (right action: first letter first).
pub fn evaluate(word: &Word, assignment: &[Assigned]) -> Result<Endomorphism> {
    let first = assignment.first().ok_or_else(|| Error::MissingAssignment("<any>".into()))?;
    let mut acc = Endomorphism::identity(first.map.alphabet());
    for l in word.letters() {
        let a = &assignment[l.generator.0];
        let e = if l.inverse {
            a.inverse
                .as_ref()
                .ok_or_else(|| Error::MissingInverse { generator: word.alphabet().name(l.generator).into(), relator: 0 })?
        } else {
            &a.map
        };
        acc = e.compose(&acc)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorCheck {
    pub index: usize,
    pub relator: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseCheck {
    pub generator: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub relators: Vec<RelatorCheck>,
    pub inverses: Vec<InverseCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.relators.iter().all(|r| r.holds) && self.inverses.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelatorCheck> {
        self.relators.iter().filter(|r| !r.holds)
    }
}

/// Checks that the assignment kills every relator of `p`, and that every
/// supplied inverse really is a two-sided inverse.
pub fn verify_homomorphism(p: &Presentation, assignment: &HashMap<String, Assigned>) -> Result<VerificationReport> {
    let names = p.alphabet().names();
    let ordered = names
        .iter()
        .map(|n| assignment.get(n).cloned().ok_or_else(|| Error::MissingAssignment(n.clone())))
        .collect::<Result<Vec<_>>>()?;
    let rank = ordered[0].map.rank();
    for a in &ordered {
        if a.map.rank() != rank {
            return Err(Error::RankMismatch { left: rank, right: a.map.rank() });
        }
    }

    let mut inverses = Vec::new();
    for (name, a) in names.iter().zip(&ordered) {
        if let Some(inv) = &a.inverse {
            let holds = a.map.compose(inv)?.is_identity() && inv.compose(&a.map)?.is_identity();
            inverses.push(InverseCheck { generator: name.clone(), holds });
        }
    }

    let mut relators = Vec::new();
    for (index, r) in p.relators().iter().enumerate() {
        if let Some(l) = r.letters().iter().find(|l| l.inverse && ordered[l.generator.0].inverse.is_none()) {
            return Err(Error::MissingInverse { generator: names[l.generator.0].clone(), relator: index });
        }
        let holds = evaluate(r, &ordered)?.is_identity();
        relators.push(RelatorCheck { index, relator: r.to_string(), holds });
    }
    Ok(VerificationReport { relators, inverses })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidReport {
    pub is_candidate: bool,
    /// `π(i)` as 1-based indices, when condition 1 holds.
    pub permutation: Option<Vec<usize>>,
    /// `a_i` with `e(x_i) = a_i^-1 x_{π(i)} a_i`, when condition 1 holds.
    pub conjugators: Option<Vec<Word>>,
    pub fixes_product: bool,
}

/// Artin's two conditions: every image is a conjugate of a distinct generator,
/// and `x_1 x_2 ... x_n` is fixed.
pub fn braid_membership(e: &Endomorphism) -> BraidReport {
    let n = e.rank();
    let a = e.alphabet();
    let mut perm = Vec::with_capacity(n);
    let mut conjugators = Vec::with_capacity(n);
    for w in e.images() {
        let (core, c) = w.cyclically_reduce();
        match core.letters() {
            [l] if !l.inverse => {
                perm.push(l.generator.0 + 1);
                conjugators.push(c);
            }
            _ => break,
        }
    }
    let mut seen = vec![false; n];
    let is_perm = perm.len() == n && perm.iter().all(|&p| !std::mem::replace(&mut seen[p - 1], true));

    let product = Word::reduce(a, a.generators().map(|g| crate::word::Letter::new(g, false)));
    let fixes_product = e.apply(&product).map(|w| w == product).unwrap_or(false);

    BraidReport {
        is_candidate: is_perm && fixes_product,
        permutation: is_perm.then_some(perm),
        conjugators: is_perm.then_some(conjugators),
        fixes_product,
    }
}
