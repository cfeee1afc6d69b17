//! Identity records and their text format.
//!
//! ```text
//! # comment
//! @record M-2
//! anchor: (M-2)
//! relation: eq
//! order: 8
//! lhs: dissect(pbar, 8, 7)
//! rhs: 64*f2^22/f1^23
//! ```
//!
//! Lines starting with `#` are comments and indented lines continue the
//! previous field. `fidelity: corrected` needs a `note:` and may keep the
//! printed right-hand side under `printed:`.
//! `${ID.lhs}` and `${ID.rhs}` splice in the (parenthesised) source of an
//! earlier record in the same file.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use thiserror::Error;

use crate::qlang::{parse, Expr};

const BUILTIN: &str = include_str!("catalog.qcat");

/// Smallest `min_order` a record may declare.
pub const MIN_ORDER_FLOOR: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equality,
    Congruence(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fidelity {
    Verbatim,
    /// The stored sides differ from the printed source; `printed` holds the
    /// right-hand side as printed, when it is expressible.
    Corrected { note: String, printed: Option<Expr> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub id: String,
    pub anchor: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub relation: Relation,
    pub min_order: usize,
    pub fidelity: Fidelity,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("record {id}: {message}")]
    Invalid { id: String, message: String },
}

impl IdentityRecord {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        lhs: Expr,
        rhs: Expr,
        relation: Relation,
        min_order: usize,
        fidelity: Fidelity,
    ) -> Result<Self, CatalogError> {
        let id = id.into();
        let anchor = anchor.into();
        let invalid = |message: &str| {
            Err(CatalogError::Invalid {
                id: id.clone(),
                message: message.to_string(),
            })
        };
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return invalid("id must be a nonempty word");
        }
        if anchor.trim().is_empty() {
            return invalid("anchor is empty");
        }
        if min_order < MIN_ORDER_FLOOR {
            return invalid("min_order must be at least 8");
        }
        if let Relation::Congruence(m) = relation {
            if m < 2 {
                return invalid("congruence modulus must be at least 2");
            }
        }
        if let Fidelity::Corrected { note, .. } = &fidelity {
            if note.trim().is_empty() {
                return invalid("corrected records need a note");
            }
        }
        Ok(IdentityRecord {
            id,
            anchor,
            lhs,
            rhs,
            relation,
            min_order,
            fidelity,
        })
    }

    /// The record as printed in its source, if it was corrected and the
    /// printed form is stored.
    pub fn as_verbatim(&self) -> Option<IdentityRecord> {
        match &self.fidelity {
            Fidelity::Corrected {
                printed: Some(rhs), ..
            } => Some(IdentityRecord {
                rhs: rhs.clone(),
                fidelity: Fidelity::Verbatim,
                ..self.clone()
            }),
            _ => None,
        }
    }

    pub fn is_corrected(&self) -> bool {
        matches!(self.fidelity, Fidelity::Corrected { .. })
    }
}

/// The built-in catalog.
pub fn catalog() -> &'static [IdentityRecord] {
    static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(BUILTIN).expect("built-in catalog is well formed"))
}

/// Looks up a built-in record.
pub fn find(id: &str) -> Option<&'static IdentityRecord> {
    catalog().iter().find(|r| r.id == id)
}

/// The built-in catalog source text.
pub fn builtin_source() -> &'static str {
    BUILTIN
}

#[derive(Default)]
struct Draft {
    id: String,
    line: usize,
    fields: Vec<(String, String, usize)>,
}

pub fn parse_catalog(text: &str) -> Result<Vec<IdentityRecord>, CatalogError> {
    let mut drafts: Vec<Draft> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim_end();
        if content.trim().is_empty() || content.trim_start().starts_with('#') {
            continue;
        }
        let syntax = |message: String| CatalogError::Syntax { line, message };
        if let Some(id) = content.strip_prefix("@record") {
            let id = id.trim();
            if id.is_empty() {
                return Err(syntax("`@record` needs an id".into()));
            }
            drafts.push(Draft {
                id: id.to_string(),
                line,
                fields: Vec::new(),
            });
            continue;
        }
        let Some(draft) = drafts.last_mut() else {
            return Err(syntax("field outside of a `@record` block".into()));
        };
        if content.starts_with([' ', '\t']) {
            let Some(last) = draft.fields.last_mut() else {
                return Err(syntax("continuation line without a field".into()));
            };
            last.1.push(' ');
            last.1.push_str(content.trim());
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            return Err(syntax(format!("expected `key: value`, found `{}`", content.trim())));
        };
        let key = key.trim();
        if draft.fields.iter().any(|(k, _, _)| k == key) {
            return Err(syntax(format!("duplicate field `{key}`")));
        }
        draft.fields.push((key.to_string(), value.trim().to_string(), line));
    }

    let mut sources: HashMap<String, (String, String)> = HashMap::new();
    let mut out = Vec::with_capacity(drafts.len());
    for d in drafts {
        if sources.contains_key(&d.id) {
            return Err(CatalogError::Syntax {
                line: d.line,
                message: format!("duplicate record id `{}`", d.id),
            });
        }
        let (record, lhs, rhs) = build(&d, &sources)?;
        sources.insert(d.id.clone(), (lhs, rhs));
        out.push(record);
    }
    Ok(out)
}

fn expand_refs(
    text: &str,
    line: usize,
    sources: &HashMap<String, (String, String)>,
) -> Result<String, CatalogError> {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(i) = rest.find("${") {
        out.push_str(&rest[..i]);
        let tail = &rest[i + 2..];
        let end = tail.find('}').ok_or_else(|| CatalogError::Syntax {
            line,
            message: "unterminated `${`".into(),
        })?;
        let reference = &tail[..end];
        let bad = || CatalogError::Syntax {
            line,
            message: format!("unknown reference `${{{reference}}}`"),
        };
        let (id, side) = reference.rsplit_once('.').ok_or_else(bad)?;
        let (l, r) = sources.get(id).ok_or_else(bad)?;
        let body = match side {
            "lhs" => l,
            "rhs" => r,
            _ => return Err(bad()),
        };
        write!(out, "({body})").expect("string write");
        rest = &tail[end + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

fn build(
    d: &Draft,
    sources: &HashMap<String, (String, String)>,
) -> Result<(IdentityRecord, String, String), CatalogError> {
    let get = |key: &str| d.fields.iter().find(|(k, _, _)| k == key);
    let invalid = |message: String| CatalogError::Invalid {
        id: d.id.clone(),
        message,
    };
    for (k, _, line) in &d.fields {
        if !matches!(
            k.as_str(),
            "anchor" | "relation" | "order" | "fidelity" | "note" | "lhs" | "rhs" | "printed"
        ) {
            return Err(CatalogError::Syntax {
                line: *line,
                message: format!("unknown field `{k}`"),
            });
        }
    }
    let required = |key: &str| get(key).ok_or_else(|| invalid(format!("missing field `{key}`")));
    let expr = |key: &str| -> Result<(Expr, String), CatalogError> {
        let (_, text, line) = required(key)?;
        let src = expand_refs(text, *line, sources)?;
        let e = parse(&src).map_err(|e| CatalogError::Syntax {
            line: *line,
            message: format!("{key}: {e}"),
        })?;
        Ok((e, src))
    };

    let anchor = required("anchor")?.1.clone();
    let (lhs, lhs_src) = expr("lhs")?;
    let (rhs, rhs_src) = expr("rhs")?;
    let relation = match get("relation").map(|f| f.1.as_str()) {
        None | Some("eq") => Relation::Equality,
        Some(s) => {
            let m = s
                .strip_prefix("mod")
                .and_then(|m| m.trim().parse::<u64>().ok())
                .ok_or_else(|| invalid(format!("bad relation `{s}`")))?;
            Relation::Congruence(m)
        }
    };
    let min_order = match get("order") {
        Some((_, v, _)) => v
            .parse::<usize>()
            .map_err(|_| invalid(format!("bad order `{v}`")))?,
        None => MIN_ORDER_FLOOR,
    };
    let fidelity = match get("fidelity").map(|f| f.1.as_str()) {
        None | Some("verbatim") => {
            if get("printed").is_some() {
                return Err(invalid("`printed` is only allowed on corrected records".into()));
            }
            Fidelity::Verbatim
        }
        Some("corrected") => Fidelity::Corrected {
            note: get("note").map(|f| f.1.clone()).unwrap_or_default(),
            printed: match get("printed") {
                Some(_) => Some(expr("printed")?.0),
                None => None,
            },
        },
        Some(other) => return Err(invalid(format!("bad fidelity `{other}`"))),
    };
    let record = IdentityRecord::new(d.id.clone(), anchor, lhs, rhs, relation, min_order, fidelity)?;
    Ok((record, lhs_src, rhs_src))
}

/// Writes records in the format read by [`parse_catalog`].
pub fn export_catalog(records: &[IdentityRecord]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        writeln!(out, "@record {}", r.id).unwrap();
        writeln!(out, "anchor: {}", r.anchor).unwrap();
        match r.relation {
            Relation::Equality => writeln!(out, "relation: eq").unwrap(),
            Relation::Congruence(m) => writeln!(out, "relation: mod {m}").unwrap(),
        }
        writeln!(out, "order: {}", r.min_order).unwrap();
        if let Fidelity::Corrected { note, .. } = &r.fidelity {
            writeln!(out, "fidelity: corrected").unwrap();
            writeln!(out, "note: {}", note).unwrap();
        }
        writeln!(out, "lhs: {}", r.lhs).unwrap();
        writeln!(out, "rhs: {}", r.rhs).unwrap();
        if let Fidelity::Corrected {
            printed: Some(p), ..
        } = &r.fidelity
        {
            writeln!(out, "printed: {p}").unwrap();
        }
    }
    out
}
