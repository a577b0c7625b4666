use std::sync::Arc;

use foxforge_core::alexander::{alexander_matrix, alexander_polynomial, distinguish, minors_gcd, Verdict};
use foxforge_core::fox::GroupRingElement;
use foxforge_core::poly::LaurentPoly;
use foxforge_core::presentation::{builtin, Presentation};
use foxforge_core::{Alphabet, Generator, Letter, Word};
use proptest::prelude::*;

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn ones(p: &Presentation) -> Vec<i64> {
    vec![1; p.generator_count()]
}

fn delta_g() -> LaurentPoly {
    lp("1 - t").pow(4) * lp("1 + t")
}

fn delta_h() -> LaurentPoly {
    lp("1 - t").pow(4) * lp("t^2 + t + 1")
}

#[test]
fn paper_g_and_h_polynomials() {
    let g = builtin("paper_G", None).unwrap();
    let h = builtin("paper_H", None).unwrap();
    let rg = alexander_polynomial(&g, &ones(&g)).unwrap();
    let rh = alexander_polynomial(&h, &ones(&h)).unwrap();
    assert_eq!(rg.minor_size, 4);
    assert_eq!(rg.polynomial, delta_g());
    assert_eq!(rg.polynomial.to_string(), "1 - 3*t + 2*t^2 + 2*t^3 - 3*t^4 + t^5");
    assert_eq!(rh.polynomial, delta_h());
    assert_eq!(rh.polynomial.to_string(), "1 - 3*t + 3*t^2 - 2*t^3 + 3*t^4 - 3*t^5 + t^6");
    assert!(rg.matrix.row_identity_holds(&ones(&g)));
    assert!(rh.matrix.row_identity_holds(&ones(&h)));
    let c = distinguish(&g, &ones(&g), &h, &ones(&h)).unwrap();
    assert_eq!(c.verdict, Verdict::Distinguished);
    assert_eq!(distinguish(&g, &ones(&g), &g, &ones(&g)).unwrap().verdict, Verdict::Inconclusive);
}

/// Hand computation of every nonzero specialized derivative of the relators of
/// `G` (rows r11, r21, r31, r12, r22, r32; columns e31, e32, e41, e42, e43).
/// For an all-weight-1 map a letter `x` after a prefix of exponent `p`
/// contributes `t^p`, and `x^-1` contributes `-t^(p-1)`.
#[test]
fn paper_g_matrix_entries() {
    let g = builtin("paper_G", None).unwrap();
    let m = alexander_matrix(&g, &ones(&g)).unwrap();
    let up = "t^-2 - t^-1"; // t^-2 (1 - t)
    let down = "-t^-2 + t^-1"; // t^-2 (t - 1)
    let expected: [[&str; 5]; 6] = [
        [down, "0", up, "0", "0"],
        [down, "0", "0", up, "0"],
        ["-t^-3 + t^-2", "0", down, "0", "t^-3 - t^-1"],
        ["0", down, up, "0", "0"],
        ["0", down, "0", up, "0"],
        ["0", "-t^-3 + t^-2", "0", down, "t^-3 - t^-1"],
    ];
    for (i, row) in expected.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            assert_eq!(m.get(i, j), &lp(e), "entry ({i}, {j})");
        }
    }
}

#[test]
fn paper_h_selected_entries() {
    let h = builtin("paper_H", None).unwrap();
    let m = alexander_matrix(&h, &ones(&h)).unwrap();
    // columns a13, a23, a14, a24, a34; q11 is row 0, q21 row 1, q32 row 5
    assert_eq!(m.get(0, 0), &lp("1 - t"));
    assert_eq!(m.get(0, 2), &lp("-t^-1 + t"));
    assert_eq!(m.get(1, 4), &lp("1 - 2*t + t^2"));
    assert_eq!(m.get(1, 2), &lp("-1 + 2*t - t^2"));
    assert_eq!(m.get(5, 3), &lp("t - 1"));
}

#[test]
fn relators_are_balanced_per_generator() {
    for name in ["paper_G", "paper_H"] {
        let p = builtin(name, None).unwrap();
        for r in p.relators() {
            assert!(r.exponent_sums().iter().all(|&s| s == 0), "{name}: {r}");
        }
        let mut weights = ones(&p);
        weights[0] = 2;
        let r = alexander_polynomial(&p, &weights).unwrap();
        assert!(r.matrix.row_identity_holds(&weights));
    }
}

#[test]
fn trefoil_oracle() {
    // ∂(a b a b^-1 a^-1 b^-1)/∂a = 1 + ab - abab^-1a^-1 ↦ 1 + t^2 - t
    let p: Presentation = "gens: a, b; rels: a*b*a*b^-1*a^-1*b^-1".parse().unwrap();
    let r = alexander_polynomial(&p, &[1, 1]).unwrap();
    assert_eq!(r.matrix.get(0, 0), &lp("1 - t + t^2"));
    assert_eq!(r.matrix.get(0, 1).normalize(), lp("1 - t + t^2"));
    assert_eq!(r.polynomial, lp("1 - t + t^2"));
    let z2: Presentation = "gens: a, b; rels: [a,b]".parse().unwrap();
    assert_eq!(alexander_polynomial(&z2, &[1, 1]).unwrap().polynomial, lp("1 - t"));
    assert_eq!(distinguish(&p, &[1, 1], &z2, &[1, 1]).unwrap().verdict, Verdict::Distinguished);
}

#[test]
fn redundant_relator_changes_nothing() {
    let g = builtin("paper_G", None).unwrap();
    let rel = g.relators();
    let c = g.word("e_4_3").unwrap();
    let consequence = c.multiply(&rel[0]).unwrap().multiply(&c.inverse()).unwrap().multiply(&rel[1].inverse()).unwrap();
    let bigger = g.clone().with_relator(consequence).unwrap();
    assert_eq!(bigger.relators().len(), 7);
    assert_eq!(alexander_polynomial(&bigger, &ones(&bigger)).unwrap().polynomial, delta_g());
}

fn word_strategy(gens: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0..gens, any::<bool>()), 0..=max_len)
}

fn to_word(a: &Arc<Alphabet>, raw: &[(usize, bool)]) -> Word {
    Word::reduce(a, raw.iter().map(|&(g, inv)| Letter::new(Generator(g), inv)))
}

fn element_strategy() -> impl Strategy<Value = Vec<(Vec<(usize, bool)>, i64)>> {
    prop::collection::vec((word_strategy(4, 20), -3i64..=3), 0..4)
}

fn to_element(a: &Arc<Alphabet>, raw: &[(Vec<(usize, bool)>, i64)]) -> GroupRingElement {
    let words: Vec<(Word, i64)> = raw.iter().map(|(w, c)| (to_word(a, w), *c)).collect();
    GroupRingElement::from_terms(a, words.iter().map(|(w, c)| (w, *c))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fundamental_formula(raw in element_strategy()) {
        let a = Alphabet::indexed("x", 4);
        prop_assert!(to_element(&a, &raw).fundamental_check());
    }

    #[test]
    fn product_rule_on_elements(u in element_strategy(), v in element_strategy(), g in 0usize..4) {
        let a = Alphabet::indexed("x", 4);
        let (u, v) = (to_element(&a, &u), to_element(&a, &v));
        let g = Generator(g);
        let lhs = u.mul(&v).unwrap().fox_derivative(g).unwrap();
        let rhs = u.fox_derivative(g).unwrap().scale(v.augment())
            .add(&u.mul(&v.fox_derivative(g).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linearity(u in element_strategy(), v in element_strategy(), g in 0usize..4) {
        let a = Alphabet::indexed("x", 4);
        let (u, v) = (to_element(&a, &u), to_element(&a, &v));
        let g = Generator(g);
        let lhs = u.add(&v).unwrap().fox_derivative(g).unwrap();
        prop_assert_eq!(lhs, u.fox_derivative(g).unwrap().add(&v.fox_derivative(g).unwrap()).unwrap());
    }

    #[test]
    fn specialize_is_multiplicative(u in element_strategy(), v in element_strategy(),
                                    w in prop::collection::vec(-3i64..=3, 4)) {
        let a = Alphabet::indexed("x", 4);
        let (u, v) = (to_element(&a, &u), to_element(&a, &v));
        let lhs = u.mul(&v).unwrap().specialize(&w).unwrap();
        prop_assert_eq!(lhs, u.specialize(&w).unwrap() * v.specialize(&w).unwrap());
    }

    #[test]
    fn specialized_formula_for_balanced_words(raw in word_strategy(3, 16), w in prop::collection::vec(-3i64..=3, 3)) {
        // append a correcting power of the last generator so the weight sum vanishes
        let a = Alphabet::indexed("x", 4);
        let mut word = to_word(&a, &raw);
        let sum: i64 = word.letters().iter().map(|l| l.sign() * w[l.generator.0]).sum();
        let mut weights = w.clone();
        weights.push(1);
        word = word.multiply(&Word::generator(&a, Generator(3)).pow(-sum)).unwrap();
        let v = GroupRingElement::from_word(&word);
        let one = LaurentPoly::one();
        let total = a.generators().fold(LaurentPoly::zero(), |acc, g| {
            let d = v.fox_derivative(g).unwrap().specialize(&weights).unwrap();
            acc + d * (LaurentPoly::t_pow(weights[g.0]) - one.clone())
        });
        prop_assert!(total.is_zero());
    }
}

#[derive(Clone, Debug)]
enum Op {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    AddRow(usize, usize, i64, bool),
    AddCol(usize, usize, i64, bool),
    ScaleRow(usize, i64, bool),
    ScaleCol(usize, i64, bool),
}

fn unit(k: i64, negative: bool) -> LaurentPoly {
    let u = LaurentPoly::t_pow(k);
    if negative { -u } else { u }
}

fn op_strategy() -> impl Strategy<Value = Op> {
    prop_oneof![
        (0usize..6, 0usize..6).prop_map(|(a, b)| Op::SwapRows(a, b)),
        (0usize..5, 0usize..5).prop_map(|(a, b)| Op::SwapCols(a, b)),
        (0usize..6, 0usize..6, -2i64..=2, any::<bool>()).prop_map(|(a, b, k, s)| Op::AddRow(a, b, k, s)),
        (0usize..5, 0usize..5, -2i64..=2, any::<bool>()).prop_map(|(a, b, k, s)| Op::AddCol(a, b, k, s)),
        (0usize..6, -2i64..=2, any::<bool>()).prop_map(|(a, k, s)| Op::ScaleRow(a, k, s)),
        (0usize..5, -2i64..=2, any::<bool>()).prop_map(|(a, k, s)| Op::ScaleCol(a, k, s)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minors_gcd_invariant_under_elementary_operations(ops in prop::collection::vec(op_strategy(), 1..8)) {
        let g = builtin("paper_G", None).unwrap();
        let mut m = alexander_matrix(&g, &ones(&g)).unwrap();
        for op in ops {
            match op {
                Op::SwapRows(a, b) => m.swap_rows(a, b),
                Op::SwapCols(a, b) => m.swap_cols(a, b),
                Op::AddRow(a, b, k, s) if a != b => m.add_row_multiple(a, b, &unit(k, s)),
                Op::AddCol(a, b, k, s) if a != b => m.add_col_multiple(a, b, &unit(k, s)),
                Op::ScaleRow(a, k, s) => m.scale_row(a, &unit(k, s)),
                Op::ScaleCol(a, k, s) => m.scale_col(a, &unit(k, s)),
                _ => {}
            }
        }
        prop_assert_eq!(minors_gcd(&m, 4).unwrap(), delta_g());
    }
}
