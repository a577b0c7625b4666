//! Stated values that `reproduce` recomputes and compares against.
//!
//! The tables are copied verbatim as published. Each entry keeps the printed
//! text next to a structured encoding, so a mismatch names the exact entry.

use foxforge_core::poly::LaurentPoly;

/// A stated specialized Fox derivative `sign * t^shift * (base)^power`.
#[derive(Clone, Copy, Debug)]
pub struct DerivativeRef {
    /// Built-in presentation holding the relator.
    pub presentation: &'static str,
    /// Relator label as printed, e.g. `r31`.
    pub relator: &'static str,
    /// Position of that relator in the built-in presentation.
    pub row: usize,
    /// Generator differentiated by.
    pub generator: &'static str,
    /// The value as printed.
    pub stated: &'static str,
    pub sign: i64,
    pub shift: i64,
    pub base: &'static str,
    pub power: u32,
}

impl DerivativeRef {
    pub fn value(&self) -> LaurentPoly {
        let base: LaurentPoly = self.base.parse().expect("reference literal");
        let v = LaurentPoly::t_pow(self.shift) * base.pow(self.power);
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }
}

const fn g(relator: &'static str, row: usize, generator: &'static str, stated: &'static str, shift: i64, base: &'static str) -> DerivativeRef {
    DerivativeRef { presentation: "paper_G", relator, row, generator, stated, sign: 1, shift, base, power: 1 }
}

#[allow(clippy::too_many_arguments)]
const fn h(
    relator: &'static str,
    row: usize,
    generator: &'static str,
    stated: &'static str,
    sign: i64,
    shift: i64,
    base: &'static str,
    power: u32,
) -> DerivativeRef {
    DerivativeRef { presentation: "paper_H", relator, row, generator, stated, sign, shift, base, power }
}

/// Rows of `paper_G`: r11, r21, r31, r12, r22, r32. Rows of `paper_H`: q11,
/// q21, q12, q22, q31, q32. All derivatives under `g ↦ t`.
pub const DERIVATIVES: [DerivativeRef; 24] = [
    g("r11", 0, "e_3_1", "t^-2(t-1)", -2, "t - 1"),
    g("r11", 0, "e_4_1", "t^-2(1-t)", -2, "1 - t"),
    g("r12", 3, "e_3_2", "t^-2(t-1)", -2, "t - 1"),
    g("r12", 3, "e_4_1", "t^-2(1-t)", -2, "1 - t"),
    g("r21", 1, "e_3_1", "t^-2(t-1)", -2, "t - 1"),
    g("r21", 1, "e_4_2", "t^-2(1-t)", -2, "1 - t"),
    g("r22", 4, "e_3_2", "t^-2(t-1)", -2, "t - 1"),
    g("r22", 4, "e_4_2", "t^-2(1-t)", -2, "1 - t"),
    g("r31", 2, "e_3_1", "t^-1(t-1)", -1, "t - 1"),
    g("r31", 2, "e_4_1", "t^-2(t-1)", -2, "t - 1"),
    g("r31", 2, "e_4_3", "t^-3(1-t^2)", -3, "1 - t^2"),
    g("r32", 5, "e_3_2", "t^-1(t-1)", -1, "t - 1"),
    g("r32", 5, "e_4_2", "t^-2(t-1)", -2, "t - 1"),
    g("r32", 5, "e_4_3", "t^-3(1-t^2)", -3, "1 - t^2"),
    h("q11", 0, "a_1_3", "1-t", 1, 0, "1 - t", 1),
    h("q11", 0, "a_1_4", "t^-1(t^2-1)", 1, -1, "t^2 - 1", 1),
    h("q11", 0, "a_3_4", "t^-1(1-t)", 1, -1, "1 - t", 1),
    h("q21", 1, "a_1_3", "t^-1(t-1)", 1, -1, "t - 1", 1),
    h("q21", 1, "a_1_4", "-(1-t)^2", -1, 0, "1 - t", 2),
    h("q21", 1, "a_2_4", "t^-1(1-t)", 1, -1, "1 - t", 1),
    h("q21", 1, "a_3_4", "(t-1)^2", 1, 0, "t - 1", 2),
    h("q32", 5, "a_2_3", "t^-1(t-1)", 1, -1, "t - 1", 1),
    h("q32", 5, "a_2_4", "t-1", 1, 0, "t - 1", 1),
    h("q32", 5, "a_3_4", "t^-1(1-t^2)", 1, -1, "1 - t^2", 1),
];

/// Stated normalized Alexander polynomials, in product form and expanded.
pub const POLYNOMIAL_G: (&str, &str) = ("(1-t)^4(1+t)", "1 - 3*t + 2*t^2 + 2*t^3 - 3*t^4 + t^5");
pub const POLYNOMIAL_H: (&str, &str) = ("(1-t)^4(t^2+t+1)", "1 - 3*t + 3*t^2 - 2*t^3 + 3*t^4 - 3*t^5 + t^6");

/// One displayed cubic form in `y1..y6` with its stated Hessian.
#[derive(Clone, Copy, Debug)]
pub struct FormRef {
    pub name: &'static str,
    /// Bracket triple the form is stated to come from. The third case repeats
    /// the second triple with a different form, so no triple is attached to it.
    pub alpha: Option<&'static str>,
    pub form: &'static str,
    pub hessian: &'static str,
    pub signature: &'static [u32],
}

pub const FORMS: [FormRef; 3] = [
    FormRef {
        name: "P_a1",
        alpha: Some("a1=[t2,t3];a2=[t1,t3];a3=[t1,t2]"),
        form: "y1^2*y4 - y2^2*y5 + y3^2*y6 - y1*y2*y3",
        hessian: "64*y1^2*y2^2*y3^2",
        signature: &[2, 2, 2],
    },
    FormRef {
        name: "P_a2",
        alpha: Some("a1=[t2,t3];a2=[t2,t3];a3=[t1,t2]"),
        form: "y1^2*y4 - y2*y5*y3 + y3^2*y6 - y1*y3^2",
        hessian: "16*y1^2*y3^4",
        signature: &[2, 4],
    },
    FormRef {
        name: "P_a3",
        alpha: None,
        form: "y1*y4*y3 - y2*y5*y3 + y3^2*y5 - y3^3",
        hessian: "4*y3^6",
        signature: &[6],
    },
];

/// Generators of the poison group of F2 and the automorphisms of F3 they are
/// sent to: `g_i ↦ (x3 ↦ x3 a_i^-1)`, `g_i' ↦ conjugation by a_i`, `t ↦
/// conjugation by x3`, with `a1 = [x1,x2]`, `a2 = [x1,x2^-1]`.
pub const POISON_ASSIGNMENT: &str =
    "x1=rmul:3:[x1,x2]^-1:3,x2=rmul:3:[x1,x2^-1]^-1:3,x1'=conj:[x1,x2]:3,x2'=conj:[x1,x2^-1]:3,t=conj:x3:3";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values_decode() {
        assert_eq!(DERIVATIVES[10].value(), "t^-3 - t^-1".parse().unwrap());
        assert_eq!(DERIVATIVES[18].value(), "-1 + 2*t - t^2".parse().unwrap());
        let g: LaurentPoly = "1 - t".parse::<LaurentPoly>().unwrap().pow(4) * "1 + t".parse().unwrap();
        assert_eq!(g.to_string(), POLYNOMIAL_G.1);
        let h: LaurentPoly = "1 - t".parse::<LaurentPoly>().unwrap().pow(4) * "1 + t + t^2".parse().unwrap();
        assert_eq!(h.to_string(), POLYNOMIAL_H.1);
    }
}
