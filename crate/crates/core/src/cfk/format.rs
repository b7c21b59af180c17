use std::collections::HashMap;
use std::fmt::Write;

use super::{staircase, Entry, Generator, KnotComplex, Sign};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the line-based CFK format:
///
/// ```text
/// # trefoil
/// gen x0 -1
/// gen x1 0
/// gen x2 1
/// d x1 = x0 + U^1 x2
/// ```
///
/// or a single `staircase <+|-> b1 ... b2k` line.
pub fn parse_complex(text: &str) -> Result<KnotComplex> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    if let Some(&(no, first)) = lines.first() {
        if first.split_whitespace().next() == Some("staircase") {
            if lines.len() > 1 {
                return Err(parse_err(lines[1].0, "a staircase file holds a single line"));
            }
            return parse_staircase(no, first);
        }
    }

    let mut generators = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for &(no, line) in &lines {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("gen") => {
                let name = words.next().ok_or_else(|| parse_err(no, "missing generator name"))?;
                let a = words
                    .next()
                    .ok_or_else(|| parse_err(no, "missing Alexander grading"))?
                    .parse::<i64>()
                    .map_err(|e| parse_err(no, format!("bad Alexander grading: {e}")))?;
                if words.next().is_some() {
                    return Err(parse_err(no, "trailing tokens after gen"));
                }
                if index.insert(name.to_string(), generators.len()).is_some() {
                    return Err(parse_err(no, format!("generator `{name}` declared twice")));
                }
                generators.push(Generator {
                    name: name.to_string(),
                    alexander: a,
                });
            }
            Some("d") => {}
            Some("staircase") => return Err(parse_err(no, "staircase must be the only line")),
            Some(other) => return Err(parse_err(no, format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }

    let lookup = |no: usize, name: &str| {
        index.get(name).copied().ok_or_else(|| Error::UnknownGenerator {
            line: no,
            name: name.to_string(),
        })
    };

    let mut entries = Vec::new();
    for &(no, line) in &lines {
        let Some(rest) = line.strip_prefix("d ").or_else(|| line.strip_prefix("d\t")) else {
            continue;
        };
        let (lhs, rhs) = rest
            .split_once('=')
            .ok_or_else(|| parse_err(no, "expected `d <name> = <terms>`"))?;
        let src = lookup(no, lhs.trim())?;
        let rhs = rhs.trim();
        if rhs.is_empty() || rhs == "0" {
            continue;
        }
        for term in rhs.split('+') {
            let words: Vec<&str> = term.split_whitespace().collect();
            let (u_power, name) = match words.as_slice() {
                [name] => (0, *name),
                [u, name] => (parse_u(no, u)?, *name),
                _ => return Err(parse_err(no, format!("malformed term `{}`", term.trim()))),
            };
            entries.push(Entry {
                src,
                dst: lookup(no, name)?,
                u_power,
            });
        }
    }
    KnotComplex::new(generators, entries)
}

fn parse_u(no: usize, token: &str) -> Result<u32> {
    if token == "U" {
        return Ok(1);
    }
    let exp = token
        .strip_prefix("U^")
        .ok_or_else(|| parse_err(no, format!("expected `U^<k>`, found `{token}`")))?;
    let k: i64 = exp
        .parse()
        .map_err(|e| parse_err(no, format!("bad U exponent `{exp}`: {e}")))?;
    if k < 0 {
        return Err(parse_err(no, format!("negative u_power {k}")));
    }
    u32::try_from(k).map_err(|_| parse_err(no, format!("u_power {k} too large")))
}

fn parse_staircase(no: usize, line: &str) -> Result<KnotComplex> {
    let mut words = line.split_whitespace().skip(1);
    let sign = match words.next() {
        Some("+") => Sign::Plus,
        Some("-") => Sign::Minus,
        Some(other) => return Err(parse_err(no, format!("staircase sign must be + or -, found `{other}`"))),
        None => return Err(parse_err(no, "missing staircase sign")),
    };
    let steps = words
        .map(|w| {
            w.parse::<u32>()
                .map_err(|e| parse_err(no, format!("bad step `{w}`: {e}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    staircase(&steps, sign)
}

/// Writes explicit `gen`/`d` lines; `parse_complex` reads them back exactly.
pub fn serialize_complex(c: &KnotComplex) -> String {
    let mut out = String::new();
    for g in c.generators() {
        writeln!(out, "gen {} {}", g.name, g.alexander).unwrap();
    }
    for (i, g) in c.generators().iter().enumerate() {
        let terms: Vec<String> = c
            .entries()
            .iter()
            .filter(|e| e.src == i)
            .map(|e| {
                let name = &c.generators()[e.dst].name;
                if e.u_power == 0 {
                    name.clone()
                } else {
                    format!("U^{} {}", e.u_power, name)
                }
            })
            .collect();
        if !terms.is_empty() {
            writeln!(out, "d {} = {}", g.name, terms.join(" + ")).unwrap();
        }
    }
    out
}
