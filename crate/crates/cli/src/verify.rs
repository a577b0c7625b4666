//! `verify relators`, `verify braid` and `verify center`.

use foxforge_core::autom::{auto_assignment, braid_membership, evaluate, parse_autom_spec, verify_homomorphism, AutoFamily};
use foxforge_core::{Alphabet, Letter, Word};
use serde::Serialize;

use crate::input::{load_presentation, parse_assignment_list, split_spec_product, split_top_level};
use crate::{CliError, Out, Status};

#[derive(Serialize)]
struct RelatorJson {
    index: usize,
    relator: String,
    holds: bool,
}

#[derive(Serialize)]
struct InverseJson {
    generator: String,
    holds: bool,
}

#[derive(Serialize)]
struct RelatorsJson {
    relators: Vec<RelatorJson>,
    inverses: Vec<InverseJson>,
    passed: bool,
}

pub(crate) fn relators(source: &str, assign: &str, inverses: Option<&str>, out: &mut Out<'_>) -> Result<Status, CliError> {
    let p = load_presentation(source)?;
    let family = match assign.trim() {
        "auto-eps" => Some(AutoFamily::Eps),
        "auto-a" => Some(AutoFamily::PureBraid),
        "auto-sigma" => Some(AutoFamily::Sigma),
        _ => None,
    };
    let mut assignment = match family {
        Some(f) => auto_assignment(&p, f)?,
        None => parse_assignment_list(assign)?,
    };
    if let Some(text) = inverses {
        for (name, inv) in parse_assignment_list(text)? {
            let entry = assignment
                .get_mut(&name)
                .ok_or_else(|| CliError::Input(format!("inverse given for unassigned generator `{name}`")))?;
            entry.inverse = Some(inv.map);
        }
    }
    let report = verify_homomorphism(&p, &assignment)?;
    let json = RelatorsJson {
        relators: report
            .relators
            .iter()
            .map(|r| RelatorJson { index: r.index, relator: r.relator.clone(), holds: r.holds })
            .collect(),
        inverses: report.inverses.iter().map(|i| InverseJson { generator: i.generator.clone(), holds: i.holds }).collect(),
        passed: report.passed(),
    };
    if out.json {
        out.json(&json)?;
    } else {
        for r in &json.relators {
            writeln!(out.w, "relator {}: {} ... {}", r.index, r.relator, if r.holds { "holds" } else { "FAILS" })?;
        }
        for i in &json.inverses {
            writeln!(out.w, "inverse of {}: {}", i.generator, if i.holds { "holds" } else { "FAILS" })?;
        }
        let held = json.relators.iter().filter(|r| r.holds).count();
        writeln!(out.w, "{held}/{} relators hold", json.relators.len())?;
    }
    if json.passed {
        return Ok(Status::Success);
    }
    let message = match report.failures().next() {
        Some(r) => format!("relator {} ({}) is not killed by the assignment", r.index, r.relator),
        None => "a supplied inverse is not a two-sided inverse".to_string(),
    };
    Ok(Status::Failed(message))
}

#[derive(Serialize)]
struct BraidJson {
    automorphism: String,
    is_candidate: bool,
    permutation: Option<Vec<usize>>,
    conjugators: Option<Vec<String>>,
    fixes_product: bool,
}

pub(crate) fn braid(spec: &str, out: &mut Out<'_>) -> Result<Status, CliError> {
    let e = parse_autom_spec(spec)?.map;
    let report = braid_membership(&e);
    let json = BraidJson {
        automorphism: e.to_string(),
        is_candidate: report.is_candidate,
        permutation: report.permutation.clone(),
        conjugators: report.conjugators.as_ref().map(|c| c.iter().map(ToString::to_string).collect()),
        fixes_product: report.fixes_product,
    };
    if out.json {
        out.json(&json)?;
    } else {
        writeln!(out.w, "automorphism: {}", json.automorphism)?;
        match (&json.permutation, &json.conjugators) {
            (Some(perm), Some(conj)) => {
                let perm: Vec<String> = perm.iter().map(ToString::to_string).collect();
                writeln!(out.w, "images are conjugates of generators: yes, permutation ({})", perm.join(" "))?;
                writeln!(out.w, "conjugators: {}", conj.join(", "))?;
            }
            _ => writeln!(out.w, "images are conjugates of generators: no")?,
        }
        writeln!(out.w, "fixes x1*...*xn: {}", if json.fixes_product { "yes" } else { "no" })?;
        writeln!(out.w, "braid automorphism: {}", if json.is_candidate { "yes" } else { "no" })?;
    }
    if report.is_candidate {
        Ok(Status::Success)
    } else {
        Ok(Status::Failed(format!("`{spec}` fails Artin's conditions")))
    }
}

/// Expands `all-eps:N` and `all-a:N`, or splits a comma-separated list.
fn against_specs(text: &str) -> Result<Vec<String>, CliError> {
    let rank = |rest: &str| rest.trim().parse::<usize>().map_err(|_| CliError::Input(format!("bad rank in `{text}`")));
    if let Some(rest) = text.trim().strip_prefix("all-eps:") {
        let n = rank(rest)?;
        return Ok((1..=n)
            .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| format!("builtin:eps:{i}:{j}:{n}")))
            .collect());
    }
    if let Some(rest) = text.trim().strip_prefix("all-a:") {
        let n = rank(rest)?;
        return Ok((1..=n).flat_map(|r| (r + 1..=n).map(move |s| format!("builtin:a:{r}:{s}:{n}"))).collect());
    }
    Ok(split_top_level(text, ',').into_iter().map(str::to_string).collect())
}

#[derive(Serialize)]
struct CommuteJson {
    automorphism: String,
    commutes: bool,
}

#[derive(Serialize)]
struct CenterJson {
    candidate: String,
    results: Vec<CommuteJson>,
    commutes_with_all: bool,
}

pub(crate) fn center(candidate: &str, against: &str, out: &mut Out<'_>) -> Result<Status, CliError> {
    let factors = split_spec_product(candidate).into_iter().map(parse_autom_spec).collect::<Result<Vec<_>, _>>()?;
    if factors.is_empty() {
        return Err(CliError::Input("empty candidate".into()));
    }
    let labels = Alphabet::indexed("c", factors.len());
    let product = Word::reduce(&labels, labels.generators().map(|g| Letter::new(g, false)));
    let z = evaluate(&product, &factors)?;

    let mut results = Vec::new();
    for spec in against_specs(against)? {
        let e = parse_autom_spec(&spec)?.map;
        results.push(CommuteJson { commutes: z.commutes(&e)?, automorphism: spec });
    }
    let json = CenterJson {
        candidate: z.to_string(),
        commutes_with_all: results.iter().all(|r| r.commutes),
        results,
    };
    if out.json {
        out.json(&json)?;
    } else {
        writeln!(out.w, "candidate: {}", json.candidate)?;
        for r in &json.results {
            writeln!(out.w, "  {}: {}", r.automorphism, if r.commutes { "commutes" } else { "does not commute" })?;
        }
        let held = json.results.iter().filter(|r| r.commutes).count();
        writeln!(out.w, "commutes with {held}/{}", json.results.len())?;
    }
    match json.results.iter().find(|r| !r.commutes) {
        None => Ok(Status::Success),
        Some(r) => Ok(Status::Failed(format!("candidate does not commute with {}", r.automorphism))),
    }
}
