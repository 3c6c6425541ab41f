//! Plain-text input for ideals and modules.
//!
//! ```text
//! ring a,b,c,d;
//! I = a^4*d^4, a^2*b^3, b^3*c^2, b^3*d;
//! J = a^3*d^3, a^3*b, b^2;
//! module quotient J I t=(4,3,2,4);
//! ```
//!
//! A presentation module is declared with `module presentation t=(...);`
//! followed by `rows = (..),(..);`, `cols = ...;` and entries
//! `(j,k) = c * x^(v);`. Several modules in one document are summed.
//! `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::boxmod::{BoxModule, ModuleError, MonomialMatrix};
use crate::ideal::{default_names, monomial_string, IdealError, MonomialIdeal};
use crate::lattice::{BoundVector, ExponentVector, LatticeError};
use crate::linalg::{DenseMatrix, Field, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no `ring` declaration before line {0}")]
    MissingRing(usize),
    #[error("document declares neither a module nor an ideal")]
    Empty,
    #[error("modules in one document must share the bound t")]
    BoundMismatch,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One presentation entry `(row, col) = numerator/denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntrySpec {
    pub row: usize,
    pub col: usize,
    pub num: i64,
    pub den: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// `J/I`.
    Quotient {
        j: MonomialIdeal,
        i: MonomialIdeal,
        t: BoundVector,
    },
    Presentation {
        t: BoundVector,
        rows: Vec<ExponentVector>,
        cols: Vec<ExponentVector>,
        entries: Vec<EntrySpec>,
    },
}

impl ModuleSpec {
    pub fn bound(&self) -> &BoundVector {
        match self {
            ModuleSpec::Quotient { t, .. } | ModuleSpec::Presentation { t, .. } => t,
        }
    }

    pub fn build(&self, field: Field) -> Result<BoxModule, FormatError> {
        match self {
            ModuleSpec::Quotient { j, i, t } => Ok(BoxModule::from_ideal_pair(i, j, t, field)?),
            ModuleSpec::Presentation {
                t,
                rows,
                cols,
                entries,
            } => {
                let mut scalars = DenseMatrix::zeros(field, rows.len(), cols.len());
                for e in entries {
                    scalars.set(e.row, e.col, field.from_fraction(e.num, e.den)?);
                }
                let phi = MonomialMatrix::new(rows.clone(), cols.clone(), scalars)?;
                Ok(BoxModule::from_presentation(&phi, t, field)?)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub variables: Vec<String>,
    pub ideals: Vec<(String, MonomialIdeal)>,
    pub modules: Vec<ModuleSpec>,
}

impl Document {
    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn ideal(&self, name: &str) -> Option<&MonomialIdeal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    /// The module described by the document: the direct sum of all module
    /// statements, or `S/I` for the last ideal (with its tightest bound)
    /// when there are none.
    pub fn module(&self, field: Field) -> Result<BoxModule, FormatError> {
        if self.modules.is_empty() {
            let (_, i) = self.ideals.last().ok_or(FormatError::Empty)?;
            let t = if i.is_unit() {
                BoundVector::ones(self.arity())
            } else {
                i.tight_bound()
            };
            return Ok(BoxModule::quotient_ring(i, &t, field)?);
        }
        let t = self.modules[0].bound();
        if self.modules.iter().any(|m| m.bound() != t) {
            return Err(FormatError::BoundMismatch);
        }
        let mut acc = self.modules[0].build(field)?;
        for m in &self.modules[1..] {
            acc = acc.direct_sum(&m.build(field)?)?;
        }
        Ok(acc)
    }

    pub fn to_text(&self) -> String {
        let names = &self.variables;
        let mut out = format!("ring {};\n", names.join(","));
        for (name, ideal) in &self.ideals {
            let _ = writeln!(out, "{name} = {};", ideal.display_with(names));
        }
        let ideal_ref = |target: &MonomialIdeal| -> String {
            if let Some((n, _)) = self.ideals.iter().find(|(_, i)| i == target) {
                n.clone()
            } else if target.is_unit() {
                "1".into()
            } else if target.is_zero() {
                "0".into()
            } else {
                format!("[{}]", target.display_with(names))
            }
        };
        for m in &self.modules {
            match m {
                ModuleSpec::Quotient { j, i, t } => {
                    let _ = writeln!(out, "module quotient {} {} t={};", ideal_ref(j), ideal_ref(i), t.as_vector());
                }
                ModuleSpec::Presentation {
                    t,
                    rows,
                    cols,
                    entries,
                } => {
                    let list = |v: &[ExponentVector]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
                    let _ = writeln!(out, "module presentation t={};", t.as_vector());
                    let _ = writeln!(out, "rows = {};", list(rows));
                    let _ = writeln!(out, "cols = {};", list(cols));
                    for e in entries {
                        let exp = &cols[e.col] - &rows[e.row];
                        let c = if e.den == 1 {
                            e.num.to_string()
                        } else {
                            format!("{}/{}", e.num, e.den)
                        };
                        let _ = writeln!(out, "({},{}) = {c} * x^{exp};", e.row, e.col);
                    }
                }
            }
        }
        out
    }
}

/// Splits into `;`-terminated statements with their starting line numbers.
fn statements(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start = 1;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for ch in line.chars() {
            if current.trim().is_empty() && !ch.is_whitespace() {
                start = k + 1;
            }
            if ch == ';' {
                out.push((start, current.trim().to_string()));
                current.clear();
            } else {
                current.push(ch);
            }
        }
        current.push(' ');
    }
    if !current.trim().is_empty() {
        out.push((start, current.trim().to_string()));
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_vector(line: usize, s: &str) -> Result<ExponentVector, FormatError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| syntax(line, format!("expected a vector like (1,0), got `{s}`")))?;
    inner
        .split(',')
        .map(|x| x.parse::<i64>().map_err(|_| syntax(line, format!("bad integer `{x}`"))))
        .collect::<Result<Vec<_>, _>>()
        .map(ExponentVector::new)
}

fn parse_vector_list(line: usize, s: &str) -> Result<Vec<ExponentVector>, FormatError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let close = rest.find(')').ok_or_else(|| syntax(line, "unclosed vector"))?;
        out.push(parse_vector(line, &rest[..=close])?);
        rest = &rest[close + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    Ok(out)
}

fn parse_bound(line: usize, s: &str, n: usize) -> Result<BoundVector, FormatError> {
    let v = s
        .trim()
        .strip_prefix("t=")
        .ok_or_else(|| syntax(line, "expected t=(...)"))?;
    let t = parse_vector(line, v)?;
    if t.len() != n {
        return Err(syntax(line, format!("bound has {} entries, ring has {n} variables", t.len())));
    }
    Ok(BoundVector::new(t)?)
}

fn parse_monomial(line: usize, s: &str, names: &[String]) -> Result<ExponentVector, FormatError> {
    let n = names.len();
    let mut v = vec![0i64; n];
    if s == "1" {
        return Ok(ExponentVector::new(v));
    }
    for factor in s.split('*') {
        let (var, exp) = match factor.split_once('^') {
            Some((var, e)) => (var, e.parse::<i64>().map_err(|_| syntax(line, format!("bad exponent `{e}`")))?),
            None => (factor, 1),
        };
        let i = names
            .iter()
            .position(|x| x == var)
            .ok_or_else(|| syntax(line, format!("unknown variable `{var}`")))?;
        if exp < 0 {
            return Err(syntax(line, format!("negative exponent in `{factor}`")));
        }
        v[i] += exp;
    }
    Ok(ExponentVector::new(v))
}

fn parse_ideal(line: usize, s: &str, names: &[String]) -> Result<MonomialIdeal, FormatError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let n = names.len();
    if s == "0" || s.is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    let gens = s
        .split(',')
        .map(|m| parse_monomial(line, m, names))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MonomialIdeal::minimalize(n, gens)?)
}

fn parse_scalar(line: usize, s: &str) -> Result<(i64, i64), FormatError> {
    let bad = || syntax(line, format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let den: i64 = b.parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Ok((a.parse().map_err(|_| bad())?, den))
        }
        None => Ok((s.parse().map_err(|_| bad())?, 1)),
    }
}

struct PendingPresentation {
    line: usize,
    t: BoundVector,
    rows: Option<Vec<ExponentVector>>,
    cols: Option<Vec<ExponentVector>>,
    entries: Vec<(usize, EntrySpec, ExponentVector)>,
}

impl PendingPresentation {
    fn finish(self) -> Result<ModuleSpec, FormatError> {
        let rows = self.rows.ok_or_else(|| syntax(self.line, "presentation without `rows`"))?;
        let cols = self.cols.unwrap_or_default();
        for v in rows.iter().chain(&cols) {
            if v.len() != self.t.len() {
                return Err(syntax(self.line, format!("shift {v} has the wrong length")));
            }
        }
        let mut entries = Vec::new();
        for (line, e, exp) in self.entries {
            if e.row >= rows.len() || e.col >= cols.len() {
                return Err(syntax(line, format!("entry ({},{}) out of range", e.row, e.col)));
            }
            if exp != &cols[e.col] - &rows[e.row] {
                return Err(syntax(
                    line,
                    format!("exponent {exp} must equal column shift minus row shift"),
                ));
            }
            entries.push(e);
        }
        Ok(ModuleSpec::Presentation {
            t: self.t,
            rows,
            cols,
            entries,
        })
    }
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let mut doc = Document::default();
    let mut pending: Option<PendingPresentation> = None;
    for (line, stmt) in statements(text) {
        if stmt.is_empty() {
            continue;
        }
        let (head, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt.as_str(), ""));
        if head == "ring" {
            let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
            if names.iter().any(|s| !is_identifier(s)) {
                return Err(syntax(line, "variable names must be identifiers"));
            }
            doc.variables = names;
            continue;
        }
        if doc.variables.is_empty() {
            return Err(FormatError::MissingRing(line));
        }
        let n = doc.arity();
        if head == "module" {
            if let Some(p) = pending.take() {
                doc.modules.push(p.finish()?);
            }
            let words: Vec<&str> = rest.split_whitespace().collect();
            match words.first() {
                Some(&"quotient") if words.len() == 3 || words.len() == 4 => {
                    let resolve = |w: &str| -> Result<MonomialIdeal, FormatError> {
                        match w {
                            "1" => Ok(MonomialIdeal::unit(n)),
                            "0" => Ok(MonomialIdeal::zero(n)),
                            name => doc
                                .ideal(name)
                                .cloned()
                                .ok_or_else(|| syntax(line, format!("unknown ideal `{name}`"))),
                        }
                    };
                    let j = resolve(words[1])?;
                    let i = resolve(words[2])?;
                    let t = match words.get(3) {
                        Some(w) => parse_bound(line, w, n)?,
                        None => {
                            let joined = i
                                .generators()
                                .iter()
                                .chain(j.generators())
                                .fold(ExponentVector::one(n), |acc, g| acc.join(g));
                            BoundVector::new(joined)?
                        }
                    };
                    doc.modules.push(ModuleSpec::Quotient { j, i, t });
                }
                Some(&"presentation") if words.len() == 2 => {
                    pending = Some(PendingPresentation {
                        line,
                        t: parse_bound(line, words[1], n)?,
                        rows: None,
                        cols: None,
                        entries: Vec::new(),
                    });
                }
                _ => return Err(syntax(line, "expected `module quotient J I t=(..)` or `module presentation t=(..)`")),
            }
            continue;
        }
        if let Some(p) = pending.as_mut() {
            if let Some(list) = stmt.strip_prefix("rows").and_then(|r| r.trim_start().strip_prefix('=')) {
                p.rows = Some(parse_vector_list(line, list)?);
                continue;
            }
            if let Some(list) = stmt.strip_prefix("cols").and_then(|r| r.trim_start().strip_prefix('=')) {
                p.cols = Some(parse_vector_list(line, list)?);
                continue;
            }
            if stmt.starts_with('(') {
                let compact: String = stmt.chars().filter(|c| !c.is_whitespace()).collect();
                let (pos, value) = compact
                    .split_once('=')
                    .ok_or_else(|| syntax(line, "expected `(j,k) = c * x^(v)`"))?;
                let idx = parse_vector(line, pos)?;
                if idx.len() != 2 || !idx.is_nonnegative() {
                    return Err(syntax(line, "entry position must be (row,col)"));
                }
                let (coef, exp) = match value.split_once("*x^") {
                    Some((c, e)) => (c, parse_vector(line, e)?),
                    None => (value, ExponentVector::zero(n)),
                };
                let (num, den) = parse_scalar(line, coef)?;
                p.entries.push((
                    line,
                    EntrySpec {
                        row: idx[0] as usize,
                        col: idx[1] as usize,
                        num,
                        den,
                    },
                    exp,
                ));
                continue;
            }
        }
        let (name, body) = stmt
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("unrecognised statement `{stmt}`")))?;
        let name = name.trim();
        if !is_identifier(name) || ["ring", "module", "rows", "cols"].contains(&name) {
            return Err(syntax(line, format!("bad ideal name `{name}`")));
        }
        let ideal = parse_ideal(line, body, &doc.variables)?;
        doc.ideals.retain(|(n, _)| n != name);
        doc.ideals.push((name.to_string(), ideal));
    }
    if let Some(p) = pending.take() {
        doc.modules.push(p.finish()?);
    }
    if doc.variables.is_empty() {
        return Err(FormatError::MissingRing(1));
    }
    Ok(doc)
}

/// A document whose variables are `x1, ..., xn`.
pub fn document_with_default_names(n: usize) -> Document {
    Document {
        variables: default_names(n),
        ..Document::default()
    }
}

/// Formats a single monomial over the document's variables.
pub fn format_monomial(g: &ExponentVector, names: &[String]) -> String {
    monomial_string(g, names)
}
