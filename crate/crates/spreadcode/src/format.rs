//! Plain-text format for spread and code files.
//!
//! A document is UTF-8 lines: blank lines and `#` comments are ignored, the
//! first significant line must be the header `ambient <n>` (exactly once),
//! and every following line is one entry — `l <tok> <tok>` spans a line from
//! two generator tuples, `p <tok> <tok> <tok>` a plane from three. Tokens use
//! the tuple notation of [`Vector::parse_tuple`]. Serialization emits the
//! canonical basis of each entry, so parse ∘ serialize is the identity on
//! subspaces and serialize ∘ parse ∘ serialize is byte-stable.

use crate::code::SubspaceCode;
use crate::error::{Error, Result};
use crate::gf2::{Subspace, Vector};
use crate::spread::PartialSpread;

/// A parsed file: the ambient dimension and the entries in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub ambient: u8,
    pub entries: Vec<Subspace>,
}

fn parse_error(source: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { file: source.to_string(), line, msg: msg.into() }
}

/// Parses a document; `source` names the input in error messages.
pub fn parse_document(text: &str, source: &str) -> Result<Document> {
    let mut ambient: Option<u8> = None;
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "ambient" => {
                if ambient.is_some() {
                    return Err(parse_error(source, lineno, "duplicate ambient header"));
                }
                let [_, n] = tokens[..] else {
                    return Err(parse_error(source, lineno, "usage: ambient <n>"));
                };
                let n: u8 = n
                    .parse()
                    .map_err(|_| parse_error(source, lineno, format!("bad dimension {n:?}")))?;
                if !(1..=9).contains(&n) {
                    return Err(parse_error(source, lineno, "ambient dimension must be 1..=9"));
                }
                ambient = Some(n);
            }
            kind @ ("l" | "p") => {
                let n = ambient
                    .ok_or_else(|| parse_error(source, lineno, "entry before ambient header"))?;
                let want = if kind == "l" { 2 } else { 3 };
                if tokens.len() != want + 1 {
                    return Err(parse_error(
                        source,
                        lineno,
                        format!("{kind} takes {want} generator tuples"),
                    ));
                }
                let gens: Vec<Vector> = tokens[1..]
                    .iter()
                    .map(|t| {
                        Vector::parse_tuple(t, n)
                            .map_err(|e| parse_error(source, lineno, e.to_string()))
                    })
                    .collect::<Result<_>>()?;
                let s = Subspace::span(n, &gens);
                if s.dim() != want {
                    return Err(parse_error(
                        source,
                        lineno,
                        format!("generators are dependent; span has dimension {}", s.dim()),
                    ));
                }
                entries.push(s);
            }
            other => {
                return Err(parse_error(
                    source,
                    lineno,
                    format!("unknown directive {other:?} (expected ambient, l, or p)"),
                ));
            }
        }
    }
    let ambient =
        ambient.ok_or_else(|| parse_error(source, text.lines().count() + 1, "missing ambient header"))?;
    Ok(Document { ambient, entries })
}

/// Interprets every entry as a spread line (ambient 5, all dimension 2).
pub fn spread_from_document(doc: &Document) -> Result<PartialSpread> {
    if doc.ambient != 5 {
        return Err(Error::AmbientNotFive(doc.ambient));
    }
    for e in &doc.entries {
        if e.dim() != 2 {
            return Err(Error::WrongDimension { expected: 2, got: e.dim() });
        }
    }
    PartialSpread::new(doc.entries.clone())
}

/// Interprets the entries as codewords.
pub fn code_from_document(doc: &Document) -> Result<SubspaceCode> {
    SubspaceCode::new(doc.entries.clone())
}

fn serialize_entries(ambient: u8, entries: &[&Subspace]) -> Result<String> {
    let mut out = format!("ambient {ambient}\n");
    for e in entries {
        assert_eq!(e.ambient(), ambient, "mixed ambient dimensions");
        let kind = match e.dim() {
            2 => "l",
            3 => "p",
            d => return Err(Error::UnserializableDimension(d)),
        };
        out.push_str(kind);
        for v in e.basis() {
            out.push(' ');
            out.push_str(&v.tuple()?);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Renders a spread, one `l` entry per line of the spread.
pub fn serialize_spread(s: &PartialSpread) -> String {
    serialize_entries(5, &s.lines().iter().collect::<Vec<_>>())
        .expect("spread lines always serialize")
}

/// Renders a code; only line/plane codewords fit the format.
pub fn serialize_code(c: &SubspaceCode) -> Result<String> {
    serialize_entries(c.ambient(), &c.members().iter().collect::<Vec<_>>())
}
