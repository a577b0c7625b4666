//! `present`, `fox` and `alexander`.

use std::collections::BTreeMap;
use std::io::Write;

use foxforge_core::alexander::{alexander_polynomial, AlexanderResult, LaurentMatrix, Verdict};
use foxforge_core::fox::GroupRingElement;
use foxforge_core::poly::LaurentPoly;
use foxforge_core::presentation::Presentation;
use serde::Serialize;

use crate::input::{load_presentation, weights_for};
use crate::{CliError, Out, Status};

#[derive(Serialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<String>,
}

impl PresentationJson {
    fn of(p: &Presentation) -> Self {
        PresentationJson {
            generators: p.alphabet().names().to_vec(),
            relators: p.relators().iter().map(ToString::to_string).collect(),
        }
    }
}

pub(crate) fn present(source: &str, out: &mut Out<'_>) -> Result<Status, CliError> {
    let p = load_presentation(source)?;
    if out.json {
        out.json(&PresentationJson::of(&p))?;
    } else {
        writeln!(out.w, "{p}")?;
        writeln!(out.w, "{} generators, {} relators", p.generator_count(), p.relators().len())?;
    }
    Ok(Status::Success)
}

#[derive(Serialize)]
struct DerivativeJson {
    generator: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    specialized: Option<String>,
}

#[derive(Serialize)]
struct FoxRowJson {
    index: usize,
    relator: String,
    derivatives: Vec<DerivativeJson>,
}

pub(crate) fn fox(source: &str, specialize: bool, weights: Option<&str>, out: &mut Out<'_>) -> Result<Status, CliError> {
    let p = load_presentation(source)?;
    let weights = weights_for(&p, weights)?;
    let specialize = specialize || weights.iter().any(|&w| w != 1);
    let mut rows = Vec::new();
    for (index, r) in p.relators().iter().enumerate() {
        let element = GroupRingElement::from_word(r);
        let mut derivatives = Vec::new();
        for g in p.alphabet().generators() {
            let d = element.fox_derivative(g)?;
            if d.is_zero() {
                continue;
            }
            let specialized = if specialize { Some(d.specialize(&weights)?.to_string()) } else { None };
            derivatives.push(DerivativeJson {
                generator: p.alphabet().name(g).to_string(),
                value: d.to_string(),
                specialized,
            });
        }
        rows.push(FoxRowJson { index, relator: r.to_string(), derivatives });
    }
    if out.json {
        out.json(&rows)?;
        return Ok(Status::Success);
    }
    for row in &rows {
        writeln!(out.w, "relator {}: {}", row.index, row.relator)?;
        for d in &row.derivatives {
            writeln!(out.w, "  d/d{}: {}", d.generator, d.value)?;
            if let Some(s) = &d.specialized {
                writeln!(out.w, "    specialized: {s}")?;
            }
        }
    }
    Ok(Status::Success)
}

/// A Laurent polynomial as an exponent → coefficient map.
pub(crate) fn exponent_map(p: &LaurentPoly) -> BTreeMap<i64, serde_json::Value> {
    p.terms()
        .map(|(e, c)| {
            let v = match i64::try_from(c) {
                Ok(c) => serde_json::Value::from(c),
                Err(_) => serde_json::Value::from(c.to_string()),
            };
            (e, v)
        })
        .collect()
}

#[derive(Serialize)]
pub(crate) struct AlexanderJson {
    generators: Vec<String>,
    relators: Vec<String>,
    weights: Vec<i64>,
    matrix: Vec<Vec<BTreeMap<i64, serde_json::Value>>>,
    minor_size: usize,
    polynomial: String,
    normalized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    factored_hint: Option<String>,
}

impl AlexanderJson {
    pub(crate) fn of(p: &Presentation, weights: &[i64], r: &AlexanderResult, hint: bool) -> Self {
        let m = &r.matrix;
        AlexanderJson {
            generators: p.alphabet().names().to_vec(),
            relators: p.relators().iter().map(ToString::to_string).collect(),
            weights: weights.to_vec(),
            matrix: (0..m.rows()).map(|i| m.row(i).iter().map(exponent_map).collect()).collect(),
            minor_size: r.minor_size,
            polynomial: r.polynomial.to_string(),
            normalized: true,
            factored_hint: hint.then(|| factored_hint(&r.polynomial)),
        }
    }
}

#[derive(Serialize)]
struct ComparisonJson {
    left: AlexanderJson,
    right: AlexanderJson,
    verdict: String,
}

pub(crate) fn alexander(
    source: &str,
    weights: Option<&str>,
    hint: bool,
    against: Option<(&str, Option<&str>)>,
    out: &mut Out<'_>,
) -> Result<Status, CliError> {
    let p = load_presentation(source)?;
    let w = weights_for(&p, weights)?;
    let left = alexander_polynomial(&p, &w)?;
    let Some((source2, weights2)) = against else {
        if out.json {
            out.json(&AlexanderJson::of(&p, &w, &left, hint))?;
        } else {
            write_result(out.w, &p, &left, hint)?;
        }
        return Ok(Status::Success);
    };
    let q = load_presentation(source2)?;
    let w2 = weights_for(&q, weights2)?;
    let right = alexander_polynomial(&q, &w2)?;
    let verdict = if left.polynomial == right.polynomial { Verdict::Inconclusive } else { Verdict::Distinguished };
    if out.json {
        out.json(&ComparisonJson {
            left: AlexanderJson::of(&p, &w, &left, hint),
            right: AlexanderJson::of(&q, &w2, &right, hint),
            verdict: verdict.to_string(),
        })?;
    } else {
        writeln!(out.w, "left: {source}")?;
        write_result(out.w, &p, &left, hint)?;
        writeln!(out.w, "right: {source2}")?;
        write_result(out.w, &q, &right, hint)?;
        writeln!(out.w, "verdict: {verdict}")?;
    }
    Ok(Status::from_verdict(verdict))
}

pub(crate) fn write_matrix(w: &mut dyn Write, p: &Presentation, m: &LaurentMatrix) -> std::io::Result<()> {
    for i in 0..m.rows() {
        for (j, entry) in m.row(i).iter().enumerate() {
            if !entry.is_zero() {
                writeln!(w, "  ({i}, {}): {entry}", p.alphabet().names()[j])?;
            }
        }
    }
    Ok(())
}

fn write_result(w: &mut dyn Write, p: &Presentation, r: &AlexanderResult, hint: bool) -> std::io::Result<()> {
    writeln!(w, "matrix ({} x {}), nonzero entries:", r.matrix.rows(), r.matrix.cols())?;
    write_matrix(w, p, &r.matrix)?;
    writeln!(w, "minor size: {}", r.minor_size)?;
    writeln!(w, "polynomial: {}", r.polynomial)?;
    if hint {
        writeln!(w, "factored hint: {}", factored_hint(&r.polynomial))?;
    }
    Ok(())
}

/// Strips off powers of a few small factors by exact division. The expanded
/// polynomial stays the canonical value; this is display only.
pub(crate) fn factored_hint(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut rest = p.clone();
    let mut parts = Vec::new();
    for f in ["1 - t", "1 + t", "1 + t + t^2", "1 - t + t^2", "1 + t^2"] {
        let f: LaurentPoly = f.parse().expect("factor literal");
        let mut k = 0;
        while let Some(q) = rest.exact_div(&f) {
            rest = q;
            k += 1;
        }
        match k {
            0 => {}
            1 => parts.push(format!("({f})")),
            _ => parts.push(format!("({f})^{k}")),
        }
    }
    let mut text = parts.join("*");
    if rest == -LaurentPoly::one() {
        text.insert(0, '-');
    } else if !rest.is_one() {
        let r = format!("({rest})");
        text = if text.is_empty() { r } else { format!("{text}*{r}") };
    }
    if text.is_empty() {
        text = "1".into();
    }
    text
}
