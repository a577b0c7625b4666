//! `reproduce`: recompute stated results and compare them entry by entry.

use foxforge_core::alexander::{alexander_polynomial, AlexanderResult, Verdict};
use foxforge_core::poly::{LaurentPoly, MultiPoly};
use foxforge_core::presentation::{builtin, Presentation};
use foxforge_core::scheuneman::{build_l_alpha, compare_signatures, parse_alpha_triple, FormReport};
use foxforge_core::Error;
use serde::Serialize;

use crate::groups::{write_matrix, AlexanderJson};
use crate::input::parse_weight_map;
use crate::lie::{parse_form, signature_text};
use crate::reference::{FormRef, DERIVATIVES, FORMS, POISON_ASSIGNMENT, POLYNOMIAL_G, POLYNOMIAL_H};
use crate::{verify, CliError, Out, Status};

/// One stated value next to the recomputed one.
#[derive(Serialize)]
struct Check {
    item: String,
    stated: String,
    computed: String,
    matches: bool,
}

impl Check {
    fn new(item: impl Into<String>, stated: impl Into<String>, computed: impl Into<String>, matches: bool) -> Self {
        Check { item: item.into(), stated: stated.into(), computed: computed.into(), matches }
    }

    fn line(&self) -> String {
        let mark = if self.matches { "match" } else { "MISMATCH" };
        format!("{}: stated {}, computed {} ... {mark}", self.item, self.stated, self.computed)
    }
}

fn first_mismatch<'a>(checks: impl IntoIterator<Item = &'a Check>) -> Option<String> {
    checks.into_iter().find(|c| !c.matches).map(Check::line)
}

#[derive(Serialize)]
struct GroupsJson {
    g: AlexanderJson,
    h: AlexanderJson,
    polynomials: Vec<Check>,
    derivatives: Vec<Check>,
    matched: usize,
    total: usize,
    verdict: String,
}

fn weights_for_pair(g: &Presentation, h: &Presentation, spec: Option<&str>) -> Result<(Vec<i64>, Vec<i64>), CliError> {
    let mut wg = vec![1; g.generator_count()];
    let mut wh = vec![1; h.generator_count()];
    for (name, value) in parse_weight_map(spec)? {
        let mut found = false;
        for (p, w) in [(g, &mut wg), (h, &mut wh)] {
            if let Some(x) = p.alphabet().generator(&name) {
                w[x.0] = value;
                found = true;
            }
        }
        if !found {
            return Err(Error::UnknownGenerator(name).into());
        }
    }
    Ok((wg, wh))
}

pub(crate) fn thm21(weights: Option<&str>, out: &mut Out<'_>) -> Result<Status, CliError> {
    let g = builtin("paper_G", None)?;
    let h = builtin("paper_H", None)?;
    let (wg, wh) = weights_for_pair(&g, &h, weights)?;
    let rg = alexander_polynomial(&g, &wg)?;
    let rh = alexander_polynomial(&h, &wh)?;

    let polynomials: Vec<Check> = [("paper_G", &rg, POLYNOMIAL_G), ("paper_H", &rh, POLYNOMIAL_H)]
        .into_iter()
        .map(|(name, r, (stated, expanded))| {
            let expected: LaurentPoly = expanded.parse().expect("reference literal");
            Check::new(format!("{name} polynomial"), format!("{stated} = {expected}"), r.polynomial.to_string(), r.polynomial == expected)
        })
        .collect();

    let derivatives: Vec<Check> = DERIVATIVES
        .iter()
        .map(|d| {
            let (p, r): (&Presentation, &AlexanderResult) = if d.presentation == "paper_G" { (&g, &rg) } else { (&h, &rh) };
            let col = p.alphabet().generator(d.generator).expect("reference generator").0;
            let computed = r.matrix.get(d.row, col);
            let expected = d.value();
            Check::new(
                format!("{} / {}", d.relator, d.generator),
                format!("{} = {expected}", d.stated),
                computed.to_string(),
                *computed == expected,
            )
        })
        .collect();

    let verdict = if rg.polynomial == rh.polynomial { Verdict::Inconclusive } else { Verdict::Distinguished };
    let matched = derivatives.iter().filter(|c| c.matches).count();
    let report = GroupsJson {
        g: AlexanderJson::of(&g, &wg, &rg, false),
        h: AlexanderJson::of(&h, &wh, &rh, false),
        total: derivatives.len(),
        matched,
        polynomials,
        derivatives,
        verdict: verdict.to_string(),
    };

    if out.json {
        out.json(&report)?;
    } else {
        for (name, p, r) in [("paper_G", &g, &rg), ("paper_H", &h, &rh)] {
            writeln!(out.w, "{name}: Alexander matrix, nonzero entries:")?;
            write_matrix(out.w, p, &r.matrix)?;
            writeln!(out.w, "{name}: polynomial {}", r.polynomial)?;
        }
        for c in &report.polynomials {
            writeln!(out.w, "{}", c.line())?;
        }
        for c in &report.derivatives {
            writeln!(out.w, "{}", c.line())?;
        }
        writeln!(out.w, "{matched}/{} derivative values match", report.total)?;
        writeln!(out.w, "verdict: {verdict}")?;
    }

    if let Some(m) = first_mismatch(report.polynomials.iter().chain(&report.derivatives)) {
        return Ok(Status::Failed(format!("first mismatch: {m}")));
    }
    if verdict != Verdict::Distinguished {
        return Ok(Status::Failed("the two polynomials coincide".into()));
    }
    Ok(Status::Success)
}

#[derive(Serialize)]
struct AlgebrasJson {
    checks: Vec<Check>,
    passed: bool,
}

/// Checks for one displayed form; returns its report and, when a bracket
/// triple is attached, the report of the algebra's invariant.
fn form_checks(
    f: &FormRef,
    vars: &std::sync::Arc<Vec<String>>,
    checks: &mut Vec<Check>,
) -> Result<(FormReport, Option<FormReport>), CliError> {
    let mut algebra = None;
    if let Some(alpha) = f.alpha {
        let l = build_l_alpha(&parse_alpha_triple(alpha)?)?;
        let computed = FormReport::of_algebra(&l)?;
        let stated = MultiPoly::parse(f.form, vars)?;
        checks.push(Check::new(
            format!("central part of I for {alpha}"),
            f.form,
            computed.form.to_string(),
            computed.form == stated && !computed.has_noncentral,
        ));
        algebra = Some(computed);
    }
    let report = FormReport::of_form(parse_form(f.form, vars.len())?);
    let stated = MultiPoly::parse(f.hessian, vars)?;
    checks.push(Check::new(format!("Hes({})", f.name), f.hessian, report.hessian.to_string(), report.hessian == stated));
    let stated_sig = Some(f.signature.to_vec());
    checks.push(Check::new(
        format!("signature of Hes({})", f.name),
        signature_text(&stated_sig),
        signature_text(&report.signature),
        report.signature == stated_sig,
    ));
    Ok((report, algebra))
}

pub(crate) fn sec33(out: &mut Out<'_>) -> Result<Status, CliError> {
    let vars = MultiPoly::indexed_vars("y", 6);
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    let mut algebras = Vec::new();
    for f in &FORMS {
        let (report, algebra) = form_checks(f, &vars, &mut checks)?;
        reports.push(report);
        algebras.extend(algebra.map(|a| (f.name, a)));
    }
    for (i, (n1, a1)) in algebras.iter().enumerate() {
        for (n2, a2) in &algebras[i + 1..] {
            let verdict = compare_signatures(a1, a2);
            checks.push(Check::new(
                format!("algebras of {n1} vs {n2}"),
                Verdict::Distinguished.to_string(),
                verdict.to_string(),
                verdict == Verdict::Distinguished,
            ));
        }
    }
    for i in 0..FORMS.len() {
        for j in i + 1..FORMS.len() {
            let verdict = compare_signatures(&reports[i], &reports[j]);
            checks.push(Check::new(
                format!("{} vs {}", FORMS[i].name, FORMS[j].name),
                Verdict::Distinguished.to_string(),
                verdict.to_string(),
                verdict == Verdict::Distinguished,
            ));
        }
    }
    let report = AlgebrasJson { passed: checks.iter().all(|c| c.matches), checks };
    if out.json {
        out.json(&report)?;
    } else {
        for c in &report.checks {
            writeln!(out.w, "{}", c.line())?;
        }
        let held = report.checks.iter().filter(|c| c.matches).count();
        writeln!(out.w, "{held}/{} checks match", report.checks.len())?;
    }
    match first_mismatch(&report.checks) {
        Some(m) => Ok(Status::Failed(format!("first mismatch: {m}"))),
        None => Ok(Status::Success),
    }
}

pub(crate) fn prop32(out: &mut Out<'_>) -> Result<Status, CliError> {
    verify::relators("builtin:poison_free:2", POISON_ASSIGNMENT, None, out)
}
