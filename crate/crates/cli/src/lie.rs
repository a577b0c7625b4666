//! `scheuneman`.

use std::io::Write;

use foxforge_core::poly::MultiPoly;
use foxforge_core::scheuneman::{
    build_l_alpha, distinguish_algebras, distinguish_forms, parse_alpha_triple, AlgebraComparison, FormReport, NilLie2,
};
use serde::Serialize;

use crate::{CliError, Out, Status};

pub(crate) fn signature_text(s: &Option<Vec<u32>>) -> String {
    match s {
        Some(v) => format!("{{{}}}", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
        None => "undefined".into(),
    }
}

#[derive(Serialize)]
pub(crate) struct ReportJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    central_part: String,
    noncentral_remainder: bool,
    hessian: String,
    signature: Option<Vec<u32>>,
}

impl ReportJson {
    pub(crate) fn of(r: &FormReport, alpha: Option<String>) -> Self {
        ReportJson {
            alpha,
            central_part: r.form.to_string(),
            noncentral_remainder: r.has_noncentral,
            hessian: r.hessian.to_string(),
            signature: r.signature.clone(),
        }
    }

    fn write(&self, w: &mut dyn Write) -> std::io::Result<()> {
        if let Some(a) = &self.alpha {
            writeln!(w, "alpha: {a}")?;
        }
        writeln!(w, "central part: {}", self.central_part)?;
        writeln!(w, "non-central remainder: {}", if self.noncentral_remainder { "yes" } else { "no" })?;
        writeln!(w, "hessian: {}", self.hessian)?;
        writeln!(w, "signature: {}", signature_text(&self.signature))
    }
}

fn algebra(spec: &str) -> Result<(NilLie2, String), CliError> {
    let alpha = parse_alpha_triple(spec)?;
    let text = format!("a1={};a2={};a3={}", alpha[0], alpha[1], alpha[2]);
    Ok((build_l_alpha(&alpha)?, text))
}

pub(crate) fn parse_form(text: &str, vars: usize) -> Result<MultiPoly, CliError> {
    Ok(MultiPoly::parse(text, &MultiPoly::indexed_vars("y", vars))?)
}

pub(crate) fn alpha(spec: &str, out: &mut Out<'_>) -> Result<Status, CliError> {
    let (l, text) = algebra(spec)?;
    let report = ReportJson::of(&FormReport::of_algebra(&l)?, Some(text));
    if out.json {
        out.json(&report)?;
    } else {
        report.write(out.w)?;
    }
    Ok(Status::Success)
}

pub(crate) fn form(text: &str, vars: usize, out: &mut Out<'_>) -> Result<Status, CliError> {
    let report = ReportJson::of(&FormReport::of_form(parse_form(text, vars)?), None);
    if out.json {
        out.json(&report)?;
    } else {
        report.write(out.w)?;
    }
    Ok(Status::Success)
}

#[derive(Serialize)]
struct ComparisonJson {
    left: ReportJson,
    right: ReportJson,
    verdict: String,
}

fn emit(c: AlgebraComparison, labels: (Option<String>, Option<String>), out: &mut Out<'_>) -> Result<Status, CliError> {
    let json = ComparisonJson {
        left: ReportJson::of(&c.left, labels.0),
        right: ReportJson::of(&c.right, labels.1),
        verdict: c.verdict.to_string(),
    };
    if out.json {
        out.json(&json)?;
    } else {
        writeln!(out.w, "left:")?;
        json.left.write(out.w)?;
        writeln!(out.w, "right:")?;
        json.right.write(out.w)?;
        writeln!(out.w, "verdict: {}", json.verdict)?;
    }
    Ok(Status::from_verdict(c.verdict))
}

pub(crate) fn compare(a: &str, b: &str, out: &mut Out<'_>) -> Result<Status, CliError> {
    let (l1, t1) = algebra(a)?;
    let (l2, t2) = algebra(b)?;
    emit(distinguish_algebras(&l1, &l2)?, (Some(t1), Some(t2)), out)
}

pub(crate) fn compare_forms(f: &str, g: &str, vars: usize, out: &mut Out<'_>) -> Result<Status, CliError> {
    let c = distinguish_forms(&parse_form(f, vars)?, &parse_form(g, vars)?);
    emit(c, (None, None), out)
}
