use std::fmt::Write as _;
use std::str::FromStr;

use super::{Presentation, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Gap,
    Magma,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "gap" => Ok(Format::Gap),
            "magma" => Ok(Format::Magma),
            "text" => Ok(Format::Text),
            other => Err(Error::Domain(format!("unknown presentation format `{other}`"))),
        }
    }
}

pub fn serialize(p: &Presentation, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(p).expect("presentation serializes"),
        Format::Gap => to_gap(p),
        Format::Magma => to_magma(p),
        Format::Text => to_text(p),
    }
}

/// Parses and validates a JSON presentation.
pub fn from_json(s: &str) -> Result<Presentation> {
    let p: Presentation = serde_json::from_str(s)?;
    p.validate()?;
    Ok(p)
}

fn star_word(p: &Presentation, w: &Word) -> Option<String> {
    if w.is_empty() {
        return None;
    }
    Some(
        w.letters()
            .iter()
            .map(|l| {
                let name = &p.generators[l.generator()];
                if l.is_inverse() {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*"),
    )
}

fn to_gap(p: &Presentation) -> String {
    let mut out = String::new();
    let quoted: Vec<String> = p.generators.iter().map(|g| format!("\"{g}\"")).collect();
    writeln!(out, "F := FreeGroup({});;", quoted.join(", ")).unwrap();
    for (k, g) in p.generators.iter().enumerate() {
        writeln!(out, "{g} := F.{};;", k + 1).unwrap();
    }
    let rels: Vec<String> = p
        .relations
        .iter()
        .map(|r| star_word(p, &r.relator()).unwrap_or_else(|| "One(F)".into()))
        .collect();
    writeln!(out, "rels := [\n  {}\n];;", rels.join(",\n  ")).unwrap();
    writeln!(out, "G := F / rels;;").unwrap();
    out
}

fn to_magma(p: &Presentation) -> String {
    let gens = p.generators.join(", ");
    let rels: Vec<String> = p
        .relations
        .iter()
        .map(|r| {
            let lhs = star_word(p, &r.lhs).unwrap_or_else(|| "1".into());
            let rhs = star_word(p, &r.rhs).unwrap_or_else(|| "1".into());
            format!("{lhs} = {rhs}")
        })
        .collect();
    format!(
        "F<{gens}> := FreeGroup({});\nG<{gens}> := quo< F |\n  {}\n>;\n",
        p.generators.len(),
        rels.join(",\n  ")
    )
}

fn text_name(name: &str) -> String {
    match name.split_once('_') {
        Some((head, rest)) => format!("{head}_{{{}}}", rest.replace('_', ",")),
        None => name.to_string(),
    }
}

fn text_word(p: &Presentation, w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.letters()
        .iter()
        .map(|l| {
            let name = text_name(&p.generators[l.generator()]);
            if l.is_inverse() {
                format!("{name}^-1")
            } else {
                name
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn to_text(p: &Presentation) -> String {
    let mut out = String::new();
    let meta = &p.meta;
    write!(out, "# variant={}", meta.variant).unwrap();
    if let Some(n) = meta.n {
        write!(out, " n={n}").unwrap();
    }
    if let Some(d) = meta.d {
        write!(out, " d={d}").unwrap();
    }
    if let Some(l) = meta.l {
        write!(out, " l={l}").unwrap();
    }
    if let Some(e) = meta.pact_exponent {
        write!(out, " pact_exponent={e}").unwrap();
    }
    out.push('\n');
    let gens: Vec<String> = p.generators.iter().map(|g| text_name(g)).collect();
    writeln!(out, "generators: {}", gens.join(", ")).unwrap();
    for r in &p.relations {
        writeln!(out, "{} = {}", text_word(p, &r.lhs), text_word(p, &r.rhs)).unwrap();
    }
    out
}
