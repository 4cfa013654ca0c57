//! Text format for presentations.
//!
//! ```text
//! [format]
//! version = 1
//! [params]
//! p               # symbolic
//! q = 1/2         # specialised
//! [generators]
//! dx 1 x          # name degree [base]
//! x 0
//! [precedence]
//! dx < x          # ascending; defaults to declaration order
//! [weights]
//! x = 1
//! [relations]
//! ...
//! [differential]
//! x = dx
//! [differential_ideal]
//! ...
//! [consequences]
//! ...
//! ```

use std::collections::BTreeMap;

use super::confluence::require_confluent;
use super::parse::parse_element;
use super::poly::NCPoly;
use super::presentation::{Generator, Presentation};
use super::symbol::Sym;
use crate::error::{Error, Result};
use crate::expr::is_identifier;
use crate::scalars::{Assignment, Param, Scalar};

pub const FORMAT_VERSION: u32 = 1;

const SECTIONS: [&str; 9] = [
    "format",
    "params",
    "generators",
    "precedence",
    "weights",
    "relations",
    "differential",
    "differential_ideal",
    "consequences",
];

/// Substitutes parameter values into every coefficient.
pub fn specialize(e: &NCPoly, values: &Assignment) -> Result<NCPoly> {
    if values.is_empty() {
        return Ok(e.clone());
    }
    let mut out = NCPoly::zero();
    for (w, c) in e.terms() {
        out.add_term(w.clone(), c.substitute(values)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
struct Sections {
    order: Vec<String>,
    lines: BTreeMap<String, Vec<(usize, String)>>,
}

fn split_sections(text: &str) -> Result<Sections> {
    let mut s = Sections::default();
    let mut current: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let name = rest.strip_suffix(']').ok_or_else(|| Error::Format {
                line: line_no,
                msg: "unterminated section header".into(),
            })?;
            let name = name.trim().to_string();
            if !SECTIONS.contains(&name.as_str()) {
                return Err(Error::Format {
                    line: line_no,
                    msg: format!("unknown section [{name}]"),
                });
            }
            if s.lines.contains_key(&name) {
                return Err(Error::Format {
                    line: line_no,
                    msg: format!("section [{name}] appears twice"),
                });
            }
            s.order.push(name.clone());
            s.lines.insert(name.clone(), Vec::new());
            current = Some(name);
            continue;
        }
        let sec = current.as_ref().ok_or_else(|| Error::Format {
            line: line_no,
            msg: "content before the first section".into(),
        })?;
        s.lines.get_mut(sec).expect("section exists").push((line_no, line.to_string()));
    }
    Ok(s)
}

pub(crate) fn key_value(line_no: usize, line: &str) -> Result<(String, String)> {
    let (k, v) = line.split_once('=').ok_or_else(|| Error::Format {
        line: line_no,
        msg: format!("expected `name = value`, found `{line}`"),
    })?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

pub(crate) fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Format { .. } => e,
        other => Error::Format {
            line,
            msg: other.to_string(),
        },
    })
}

/// A parsed presentation file before the differential closure is applied.
#[derive(Clone, Debug)]
pub struct PresentationFile {
    pub presentation: Presentation,
    /// Parameter values fixed by the file, merged with the caller's.
    pub values: Assignment,
}

/// Parses, specialises and closes a presentation; does not check confluence.
pub fn parse_presentation(name: &str, text: &str, overrides: &Assignment) -> Result<PresentationFile> {
    let sec = split_sections(text)?;
    let get = |n: &str| sec.lines.get(n).cloned().unwrap_or_default();

    for (line, l) in get("format") {
        let (k, v) = key_value(line, &l)?;
        if k != "version" {
            return Err(Error::Format { line, msg: format!("unknown format key `{k}`") });
        }
        if v.parse::<u32>().ok() != Some(FORMAT_VERSION) {
            return Err(Error::Format { line, msg: format!("unsupported format version `{v}`") });
        }
    }

    let mut values = Assignment::new();
    for (line, l) in get("params") {
        let (name, value) = match l.split_once('=') {
            Some((k, v)) => (k.trim().to_string(), Some(v.trim().to_string())),
            None => (l.clone(), None),
        };
        if !is_identifier(&name) || name.contains('.') {
            return Err(Error::Format { line, msg: format!("invalid parameter name `{name}`") });
        }
        let p = Param::named(&name);
        if let Some(v) = value {
            let s = at_line(line, Scalar::parse(&v))?;
            let r = s.as_rational().ok_or_else(|| Error::Format {
                line,
                msg: format!("value of `{name}` is not a rational number"),
            })?;
            values.insert(p, r);
        }
    }
    for (p, v) in overrides {
        values.insert(*p, v.clone());
    }

    let gen_lines = get("generators");
    if gen_lines.is_empty() {
        return Err(Error::Format { line: 0, msg: "missing or empty [generators] section".into() });
    }
    let mut decl: Vec<(usize, Generator)> = Vec::new();
    for (line, l) in &gen_lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.is_empty() || parts.len() > 3 {
            return Err(Error::Format { line: *line, msg: "expected `name degree [base]`".into() });
        }
        if !is_identifier(parts[0]) {
            return Err(Error::Format { line: *line, msg: format!("invalid generator name `{}`", parts[0]) });
        }
        if Param::lookup(parts[0]).is_some() {
            return Err(Error::Format {
                line: *line,
                msg: format!("generator `{}` shadows a parameter", parts[0]),
            });
        }
        let degree = match parts.get(1) {
            Some(d) => d.parse::<u32>().map_err(|_| Error::Format {
                line: *line,
                msg: format!("invalid degree `{d}`"),
            })?,
            None => 0,
        };
        decl.push((
            *line,
            Generator {
                sym: Sym::new(parts[0]),
                degree,
                base: parts.get(2).map(|b| Sym::new(b)),
                weight: 1,
            },
        ));
    }

    let prec = get("precedence");
    let mut gens: Vec<Generator> = if prec.is_empty() {
        decl.iter().map(|(_, g)| g.clone()).collect()
    } else {
        let names: Vec<String> = prec
            .iter()
            .flat_map(|(_, l)| l.split(|c: char| c == '<' || c.is_whitespace() || c == ','))
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        let line = prec[0].0;
        if names.len() != decl.len() {
            return Err(Error::Format {
                line,
                msg: format!("[precedence] lists {} names for {} generators", names.len(), decl.len()),
            });
        }
        names
            .iter()
            .map(|n| {
                decl.iter()
                    .find(|(_, g)| g.sym.name() == n)
                    .map(|(_, g)| g.clone())
                    .ok_or_else(|| Error::Format { line, msg: format!("unknown generator `{n}` in [precedence]") })
            })
            .collect::<Result<_>>()?
    };
    for (line, l) in get("weights") {
        let (k, v) = key_value(line, &l)?;
        let w: u32 = v
            .parse()
            .map_err(|_| Error::Format { line, msg: format!("invalid weight `{v}`") })?;
        let g = gens
            .iter_mut()
            .find(|g| g.sym.name() == k)
            .ok_or_else(|| Error::Format { line, msg: format!("unknown generator `{k}` in [weights]") })?;
        g.weight = w;
    }

    let mut pres = at_line(decl[0].0, Presentation::free(name, std::mem::take(&mut gens)))?;
    let parse = |line: usize, src: &str, p: &Presentation| -> Result<NCPoly> {
        at_line(line, parse_element(src, p).and_then(|e| specialize(&e, &values)))
    };

    let diff = get("differential");
    if diff.is_empty() {
        if pres.generators().iter().any(|g| g.base.is_some()) {
            pres.set_standard_differential();
        }
    } else {
        let mut d = BTreeMap::new();
        for g in pres.generators() {
            if let Some(b) = g.base {
                d.insert(b, NCPoly::gen(g.sym));
            }
        }
        for (line, l) in &diff {
            let (k, v) = key_value(*line, l)?;
            let s = at_line(*line, pres.sym(&k))?;
            d.insert(s, parse(*line, &v, &pres)?);
        }
        at_line(diff[0].0, pres.set_differential(d))?;
    }

    for (line, l) in get("relations") {
        let e = parse(line, &l, &pres)?;
        at_line(line, pres.add_relations(&[e]))?;
    }
    let ideal = get("differential_ideal");
    if !ideal.is_empty() {
        let gens = ideal
            .iter()
            .map(|(line, l)| parse(*line, l, &pres))
            .collect::<Result<Vec<_>>>()?;
        pres = at_line(ideal[0].0, crate::dga::close_differential_ideal(&pres, &gens))?;
    }
    for (line, l) in get("consequences") {
        let e = parse(line, &l, &pres)?;
        at_line(line, pres.add_relations(&[e]))?;
    }
    Ok(PresentationFile { presentation: pres, values })
}

/// Parses a presentation and rejects it unless it is locally confluent.
pub fn load_presentation(name: &str, text: &str, overrides: &Assignment) -> Result<PresentationFile> {
    let f = parse_presentation(name, text, overrides)?;
    require_confluent(&f.presentation)?;
    Ok(f)
}
