//! Finite group presentations and the built-in families.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::autom::Endomorphism;
use crate::error::{Error, Result};
use crate::parse::parse_presentation;
use crate::word::{same_alphabet, Alphabet, Generator, Letter, Word};

/// Generators plus an ordered list of nonempty, freely reduced relators.
#[derive(Clone, Debug)]
pub struct Presentation {
    alphabet: Arc<Alphabet>,
    relators: Vec<Word>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet.names() == other.alphabet.names() && self.relators == other.relators
    }
}

impl Eq for Presentation {}

impl Presentation {
    pub fn new(alphabet: Arc<Alphabet>, relators: Vec<Word>) -> Result<Self> {
        for (index, r) in relators.iter().enumerate() {
            if !same_alphabet(r.alphabet(), &alphabet) {
                return Err(Error::AlphabetMismatch);
            }
            if r.is_identity() {
                return Err(Error::EmptyRelator { index });
            }
        }
        Ok(Presentation { alphabet, relators })
    }

    pub fn free(alphabet: Arc<Alphabet>) -> Self {
        Presentation { alphabet, relators: Vec::new() }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        crate::parse::parse_word(text, &self.alphabet)
    }

    /// Appends a relator (e.g. a consequence of the existing ones).
    pub fn with_relator(mut self, r: Word) -> Result<Self> {
        if !same_alphabet(r.alphabet(), &self.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        if r.is_identity() {
            return Err(Error::EmptyRelator { index: self.relators.len() });
        }
        self.relators.push(r);
        Ok(self)
    }
}

impl fmt::Display for Presentation {
    /// Emits the DSL: `gens: a, t; rels: w1; w2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}; rels:", self.alphabet.names().join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "; " })?;
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

pub const FAMILIES: &[&str] = &["mccool", "pure_braid", "braid", "poison_free", "paper_G", "paper_H", "h_z", "index2_H"];

/// Built-in presentations. `n` is required by `mccool`, `pure_braid`, `braid`
/// and `poison_free` (the poison group of the free group on `x1..xn`).
pub fn builtin(family: &str, n: Option<usize>) -> Result<Presentation> {
    let need_n = |min: usize| -> Result<usize> {
        match n {
            Some(n) if n >= min => Ok(n),
            Some(n) => Err(Error::OutOfRange { what: "rank", detail: format!("{family} needs n >= {min}, got {n}") }),
            None => Err(Error::OutOfRange { what: "rank", detail: format!("{family} needs a rank, e.g. {family}:4") }),
        }
    };
    match family {
        "mccool" => Ok(mccool(need_n(2)?)),
        "pure_braid" => Ok(pure_braid(need_n(2)?)),
        "braid" => Ok(braid(need_n(2)?)),
        "poison_free" => poison(&Presentation::free(Alphabet::indexed("x", need_n(1)?))),
        "paper_G" => parse_presentation(PAPER_G),
        "paper_H" => parse_presentation(PAPER_H),
        "h_z" => parse_presentation("gens: a, t; rels: [a,[a,t]]"),
        "index2_H" => parse_presentation(INDEX2_H),
        _ => Err(Error::UnknownFamily(family.to_string())),
    }
}

/// `G = D_3^+ ⋊ D_2^+`, the quotient of the basis-conjugating group by its center.
/// Relators in the order r11, r21, r31, r12, r22, r32.
pub const PAPER_G: &str = "gens: e_3_1, e_3_2, e_4_1, e_4_2, e_4_3; rels:
    e_4_1^-1*e_3_1^-1*e_4_1*e_3_1;
    e_4_2^-1*e_3_1^-1*e_4_2*e_3_1;
    e_4_3^-1*e_4_1^-1*e_3_1^-1*e_4_3*e_3_1*e_4_1;
    e_4_1^-1*e_3_2^-1*e_4_1*e_3_2;
    e_4_2^-1*e_3_2^-1*e_4_2*e_3_2;
    e_4_3^-1*e_4_2^-1*e_3_2^-1*e_4_3*e_3_2*e_4_2";

/// `H = U_4 ⋊ U_3`, the quotient of `P_4` by its center.
/// Relators in the order q11, q21, q12, q22, q31, q32.
pub const PAPER_H: &str = "gens: a_1_3, a_2_3, a_1_4, a_2_4, a_3_4; rels:
    a_1_3*a_1_4*a_1_3^-1*a_3_4^-1*a_1_4^-1*a_3_4;
    a_1_3^-1*a_2_4*a_1_3*a_1_4*a_3_4*a_1_4^-1*a_3_4^-1*a_2_4^-1*a_3_4*a_1_4*a_3_4^-1*a_1_4^-1;
    a_1_4^-1*a_2_3^-1*a_1_4*a_2_3;
    a_2_3*a_2_4*a_2_3^-1*a_3_4^-1*a_2_4^-1*a_3_4;
    a_1_3^-1*a_3_4*a_1_3*a_1_4*a_3_4^-1*a_1_4^-1;
    a_2_3^-1*a_3_4*a_2_3*a_2_4*a_3_4^-1*a_2_4^-1";

/// Index-2 normal subgroup of the poison group `H(F_2)`; `x^y` read as `y^-1 x y`.
pub const INDEX2_H: &str = "gens: x1, x2, x3, x4, x5; rels:
    [x1,x3]; [x2,x4];
    [x5^-1*x1*x5, x3]; [x5^-1*x2*x5, x4];
    [x1*x3, x2]; [x2*x4, x1];
    [x5^-1*x1*x5*x3, x4]; [x5^-1*x2*x5*x4, x3]";

/// `A = B` encoded as the relator `A B^-1`.
fn relation(lhs: &Word, rhs: &Word) -> Word {
    lhs.mul_unchecked(&rhs.inverse())
}

/// McCool's presentation of the basis-conjugating group `Cb_n`.
///
/// Generators `e_i_j` (i != j) in lexicographic order. Relators, schema by
/// schema, over all ordered tuples of pairwise-distinct indices in
/// lexicographic order:
///
/// 1. `e_ij e_kl = e_kl e_ij` over (i, j, k, l),
/// 2. `e_ij e_kj = e_kj e_ij` over (i, j, k),
/// 3. `(e_ij e_kj) e_ik = e_ik (e_ij e_kj)` over (i, j, k).
///
/// Relator count: `n(n-1)(n-2)(n-3) + 2 n(n-1)(n-2)`.
pub fn mccool(n: usize) -> Presentation {
    let pairs: Vec<(usize, usize)> = (1..=n).cartesian_product(1..=n).filter(|(i, j)| i != j).collect();
    let alphabet = Alphabet::new(pairs.iter().map(|(i, j)| format!("e_{i}_{j}"))).unwrap();
    let e = |i: usize, j: usize| Word::from_powers(&alphabet, &[(&format!("e_{i}_{j}"), 1)]).unwrap();

    let mut relators = Vec::new();
    for t in (1..=n).permutations(4) {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        relators.push(relation(&e(i, j).mul_unchecked(&e(k, l)), &e(k, l).mul_unchecked(&e(i, j))));
    }
    for t in (1..=n).permutations(3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        relators.push(relation(&e(i, j).mul_unchecked(&e(k, j)), &e(k, j).mul_unchecked(&e(i, j))));
    }
    for t in (1..=n).permutations(3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let p = e(i, j).mul_unchecked(&e(k, j));
        relators.push(relation(&p.mul_unchecked(&e(i, k)), &e(i, k).mul_unchecked(&p)));
    }
    Presentation::new(alphabet, relators).unwrap()
}

/// Pure braid group `P_n` on generators `a_i_j` (i < j), ordered by `j` then `i`
/// (`a_1_2, a_1_3, a_2_3, a_1_4, ...`).
///
/// For `nu = +1` then `nu = -1`, the four relation schemas are emitted in turn,
/// each over its index tuples in lexicographic order:
///
/// 1. `a_ik^-nu a_kj a_ik^nu = (a_ij a_kj)^nu a_kj (a_ij a_kj)^-nu`, i < k < j
/// 2. `a_km^-nu a_kj a_km^nu = (a_kj a_mj)^nu a_kj (a_kj a_mj)^-nu`, k < m < j
/// 3. `a_im^-nu a_kj a_im^nu = [a_ij^-nu, a_mj^-nu]^nu a_kj [a_ij^-nu, a_mj^-nu]^-nu`, i < k < m < j
/// 4. `a_im^-nu a_kj a_im^nu = a_kj`, distinct indices with k < i < m < j or i < m < k < j
pub fn pure_braid(n: usize) -> Presentation {
    let names: Vec<String> = (2..=n).flat_map(|j| (1..j).map(move |i| format!("a_{i}_{j}"))).collect();
    let alphabet = Alphabet::new(names).unwrap();
    let a = |i: usize, j: usize, e: i64| Word::from_powers(&alphabet, &[(&format!("a_{i}_{j}"), e)]).unwrap();

    let mut relators = Vec::new();
    let mut push = |lhs: Word, rhs: Word| {
        let r = relation(&lhs, &rhs);
        if !r.is_identity() {
            relators.push(r);
        }
    };
    for nu in [1i64, -1] {
        for (i, k, j) in (1..=n).tuple_combinations() {
            let p = a(i, j, 1).mul_unchecked(&a(k, j, 1)).pow(nu);
            push(
                a(i, k, -nu).mul_unchecked(&a(k, j, 1)).mul_unchecked(&a(i, k, nu)),
                p.mul_unchecked(&a(k, j, 1)).mul_unchecked(&p.inverse()),
            );
        }
        for (k, m, j) in (1..=n).tuple_combinations() {
            let p = a(k, j, 1).mul_unchecked(&a(m, j, 1)).pow(nu);
            push(
                a(k, m, -nu).mul_unchecked(&a(k, j, 1)).mul_unchecked(&a(k, m, nu)),
                p.mul_unchecked(&a(k, j, 1)).mul_unchecked(&p.inverse()),
            );
        }
        for (i, k, m, j) in (1..=n).tuple_combinations() {
            let c = a(i, j, -nu).commutator(&a(m, j, -nu)).unwrap().pow(nu);
            push(
                a(i, m, -nu).mul_unchecked(&a(k, j, 1)).mul_unchecked(&a(i, m, nu)),
                c.mul_unchecked(&a(k, j, 1)).mul_unchecked(&c.inverse()),
            );
        }
        for (i, m) in (1..=n).tuple_combinations() {
            for (k, j) in (1..=n).tuple_combinations() {
                let distinct = [i, m, k, j].iter().all_unique();
                if distinct && ((k < i && m < j) || m < k) {
                    push(a(i, m, -nu).mul_unchecked(&a(k, j, 1)).mul_unchecked(&a(i, m, nu)), a(k, j, 1));
                }
            }
        }
    }
    Presentation::new(alphabet, relators).unwrap()
}

/// Artin's presentation of `B_n` on `s1..s_{n-1}`: braid relations for adjacent
/// generators, then commutation for `|i - j| >= 2`.
pub fn braid(n: usize) -> Presentation {
    let alphabet = Alphabet::indexed("s", n - 1);
    let s = |i: usize| Word::generator(&alphabet, Generator(i - 1));
    let mut relators = Vec::new();
    for i in 1..n.saturating_sub(1) {
        let lhs = s(i).mul_unchecked(&s(i + 1)).mul_unchecked(&s(i));
        let rhs = s(i + 1).mul_unchecked(&s(i)).mul_unchecked(&s(i + 1));
        relators.push(relation(&lhs, &rhs));
    }
    for i in 1..n {
        for j in i + 2..n {
            relators.push(relation(&s(i).mul_unchecked(&s(j)), &s(j).mul_unchecked(&s(i))));
        }
    }
    Presentation::new(alphabet, relators).unwrap()
}

/// Presentation of `F_k ⋊ F_n`. `action[j]` is the image of the `j`-th base
/// generator, an endomorphism of the free group on `fiber`.
///
/// Generators: fiber then base. Relators `u_j x_i u_j^-1 (action[j](x_i))^-1`,
/// base index outer, fiber index inner.
pub fn semidirect(fiber: &Arc<Alphabet>, base: &Arc<Alphabet>, action: &[Endomorphism]) -> Result<Presentation> {
    if action.len() != base.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} base generators but {} action images",
            base.len(),
            action.len()
        )));
    }
    for name in base.names() {
        if fiber.generator(name).is_some() {
            return Err(Error::NameCollision(name.clone()));
        }
    }
    let alphabet = Alphabet::new(fiber.names().iter().chain(base.names()).cloned())?;
    let k = fiber.len();
    let lift = |w: &Word| Word::reduce(&alphabet, w.letters().iter().copied());

    let mut relators = Vec::new();
    for (j, phi) in action.iter().enumerate() {
        if !same_alphabet(phi.alphabet(), fiber) {
            return Err(Error::AlphabetMismatch);
        }
        let u = Word::generator(&alphabet, Generator(k + j));
        for i in 0..k {
            let x = Word::generator(&alphabet, Generator(i));
            let image = lift(&phi.images()[i]);
            relators.push(u.mul_unchecked(&x).mul_unchecked(&u.inverse()).mul_unchecked(&image.inverse()));
        }
    }
    Presentation::new(alphabet, relators)
}

/// The HNN extension `H(G) = <G x G, t | t (g, g) t^-1 = (g, 1)>`.
///
/// Generators: `g_1..g_m`, primed copies `g_1'..g_m'`, then `t`. Relators: those
/// of both copies, every `[g_i, g_j']`, and `t g_i g_i' t^-1 g_i^-1` for each `i`.
/// Imposing the stable-letter relation on generators suffices: if it holds for
/// `g` and `h` then `t (gh)(gh)' t^-1 = t g g' t^-1 t h h' t^-1 = gh`, because
/// the copies commute.
pub fn poison(g: &Presentation) -> Result<Presentation> {
    let m = g.generator_count();
    let names = g.alphabet().names();
    let primed: Vec<String> = names.iter().map(|n| format!("{n}'")).collect();
    for n in primed.iter().chain(std::iter::once(&"t".to_string())) {
        if g.alphabet().generator(n).is_some() {
            return Err(Error::NameCollision(n.clone()));
        }
    }
    let alphabet = Alphabet::new(names.iter().cloned().chain(primed).chain(std::iter::once("t".to_string())))?;
    let shift = |w: &Word, by: usize| {
        Word::reduce(
            &alphabet,
            w.letters().iter().map(|l| Letter::new(Generator(l.generator.0 + by), l.inverse)),
        )
    };
    let gen = |i: usize| Word::generator(&alphabet, Generator(i));
    let t = gen(2 * m);

    let mut relators: Vec<Word> = g.relators().iter().map(|r| shift(r, 0)).collect();
    relators.extend(g.relators().iter().map(|r| shift(r, m)));
    for i in 0..m {
        for j in 0..m {
            relators.push(gen(i).commutator(&gen(m + j))?);
        }
    }
    for i in 0..m {
        let (x, xp) = (gen(i), gen(m + i));
        relators.push(
            t.mul_unchecked(&x)
                .mul_unchecked(&xp)
                .mul_unchecked(&t.inverse())
                .mul_unchecked(&x.inverse()),
        );
    }
    Presentation::new(alphabet, relators)
}
