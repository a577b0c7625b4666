//! Resolution of presentation sources, weight maps and spec lists.

use std::collections::HashMap;

use foxforge_core::autom::{parse_autom_spec, Assigned};
use foxforge_core::presentation::{builtin, Presentation};
use foxforge_core::Error;

use crate::CliError;

/// Loads `builtin:NAME[:N]` or a presentation file in the DSL.
pub fn load_presentation(source: &str) -> Result<Presentation, CliError> {
    if let Some(rest) = source.strip_prefix("builtin:") {
        let (name, n) = match rest.split_once(':') {
            Some((name, n)) => {
                let n = n.trim().parse::<usize>().map_err(|_| CliError::Input(format!("bad rank in `{source}`")))?;
                (name, Some(n))
            }
            None => (rest, None),
        };
        return Ok(builtin(name, n)?);
    }
    let text = std::fs::read_to_string(source).map_err(|e| CliError::Read { path: source.to_string(), source: e })?;
    Ok(text.parse()?)
}

/// Splits at `sep` outside any `[...]` or `(...)` nesting.
pub fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    split_where(text, |c, _| c == sep)
}

/// Splits a product of automorphism specs at the `*` signs that start a new spec.
pub fn split_spec_product(text: &str) -> Vec<&str> {
    const PREFIXES: [&str; 4] = ["builtin:", "conj:", "rmul:", "images:"];
    split_where(text, |c, rest| c == '*' && PREFIXES.iter().any(|p| rest.trim_start().starts_with(p)))
}

fn split_where(text: &str, is_sep: impl Fn(char, &str) -> bool) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ if depth == 0 && is_sep(c, &text[i + c.len_utf8()..]) => {
                parts.push(text[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

/// Weight vector from `g=k,...`; unspecified generators get weight 1.
pub fn weights_for(p: &Presentation, spec: Option<&str>) -> Result<Vec<i64>, CliError> {
    let mut weights = vec![1; p.generator_count()];
    for (name, value) in parse_weight_map(spec)? {
        let g = p.alphabet().generator(&name).ok_or(Error::UnknownGenerator(name))?;
        weights[g.0] = value;
    }
    Ok(weights)
}

/// Parses `g=k,...` without resolving the names.
pub fn parse_weight_map(spec: Option<&str>) -> Result<Vec<(String, i64)>, CliError> {
    let Some(spec) = spec else { return Ok(Vec::new()) };
    split_top_level(spec, ',')
        .into_iter()
        .map(|item| {
            let (name, value) =
                item.split_once('=').ok_or_else(|| CliError::Input(format!("weight `{item}` is not of the form g=k")))?;
            let value = value.trim().parse::<i64>().map_err(|_| CliError::Input(format!("weight `{item}` is not an integer")))?;
            Ok((name.trim().to_string(), value))
        })
        .collect()
}

/// Parses `g=spec,...` into named automorphisms.
pub fn parse_assignment_list(text: &str) -> Result<HashMap<String, Assigned>, CliError> {
    let mut out = HashMap::new();
    for item in split_top_level(text, ',') {
        let (name, spec) =
            item.split_once('=').ok_or_else(|| CliError::Input(format!("assignment `{item}` is not of the form g=spec")))?;
        let name = name.trim().to_string();
        if out.insert(name.clone(), parse_autom_spec(spec)?).is_some() {
            return Err(CliError::Input(format!("generator `{name}` assigned twice")));
        }
    }
    Ok(out)
}
