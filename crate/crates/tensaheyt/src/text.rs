//! Line-oriented text formats for algebras, spaces, maps, and assignments.
//!
//! An algebra file:
//!
//! ```text
//! elements: 0 a b c d 1
//! leq: 0<a 0<b a<c b<c b<d c<1 d<1
//! op g: 0->d a->d b->d c->b d->d 1->0
//! op h: 0->1 a->1 b->c c->c d->0 1->0
//! op f: 0->1 a->a b->c c->a d->a 1->a
//! op p: 0->1 a->1 b->b c->b d->0 1->0
//! ```
//!
//! `leq:` lists covering pairs; the reflexive-transitive closure is taken.
//! Operator lines are optional, but partial operator sets are rejected:
//! give all four or none. `#` starts a comment. A space file uses
//! `points:`, `leq:`, and `rel R:` with `x->y` edges. A map file is
//! `a->x` entries over display names.
//!
//! Parsing stops at the first problem and reports its line number. The
//! document types are purely syntactic; turning a document into an
//! algebra can still fail mathematically, and those failures are kept
//! separate from format errors so callers can tell them apart.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::heyting::{heyting_implication, HeytingAlgebra, HeytingError};
use crate::lattice::{build_lattice, LatticeError};
use crate::logic::Assignment;
use crate::poset::{FinitePoset, PosetError};
use crate::space::TenseHSpace;
use crate::tense::{TenseError, TenseHAlgebra, TenseOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("line {line}: unknown element name {name:?}")]
    UnknownName { line: usize, name: String },
    #[error("line {line}: duplicate {what} {name:?}")]
    Duplicate { line: usize, what: &'static str, name: String },
    #[error("line {line}: malformed entry {token:?}, expected {expected}")]
    Malformed { line: usize, token: String, expected: &'static str },
    #[error("line {line}: element name {name:?} contains a reserved character")]
    ReservedCharacter { line: usize, name: String },
    #[error("line {line}: missing {what}")]
    MissingEntry { line: usize, what: String },
    #[error("missing {what} directive")]
    MissingDirective { what: &'static str },
    #[error("line {line}: unrecognized directive {key:?}")]
    UnknownDirective { line: usize, key: String },
    #[error("operator tables given for {present} of 4 operators; give all or none")]
    PartialOps { present: usize },
    #[error("{count} elements exceeds the cap of {cap}")]
    TooMany { count: usize, cap: usize },
}

/// A parsed algebra file. Syntax only: the order axioms and operator laws
/// have not been looked at yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub names: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub ops: Option<[Vec<u32>; 4]>,
}

/// A parsed space file, same contract as [`AlgebraDoc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDoc {
    pub names: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub edges: Vec<(usize, usize)>,
}

/// Mathematical failure while turning a document into an algebra.
/// Distinct from [`TextError`]: the file was well formed.
#[derive(Debug, Error)]
pub enum StructureError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Heyting(#[from] HeytingError),
    #[error(transparent)]
    Tense(#[from] TenseError),
    #[error("the file has no operator tables")]
    NoOps,
}

impl AlgebraDoc {
    pub fn heyting(&self) -> Result<HeytingAlgebra, StructureError> {
        let poset = FinitePoset::from_pairs(self.names.clone(), &self.covers)?;
        let lat = build_lattice(poset)?;
        Ok(heyting_implication(lat)?)
    }

    pub fn tense(&self) -> Result<TenseHAlgebra, StructureError> {
        let ops = self.ops.clone().ok_or(StructureError::NoOps)?;
        Ok(TenseHAlgebra::new(self.heyting()?, ops)?)
    }
}

impl SpaceDoc {
    pub fn space(&self) -> Result<TenseHSpace, StructureError> {
        let poset = FinitePoset::from_pairs(self.names.clone(), &self.covers)?;
        Ok(TenseHSpace::new(poset, &self.edges))
    }
}

const RESERVED: [char; 6] = ['<', '>', ':', ',', '=', '#'];

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

struct NameTable {
    ids: BTreeMap<String, usize>,
    names: Vec<String>,
}

fn parse_names(value: &str, line: usize, cap: usize) -> Result<NameTable, TextError> {
    let mut ids = BTreeMap::new();
    let mut names = Vec::new();
    for tok in value.split_whitespace() {
        if tok.chars().any(|c| RESERVED.contains(&c)) {
            return Err(TextError::ReservedCharacter { line, name: tok.to_string() });
        }
        if ids.insert(tok.to_string(), names.len()).is_some() {
            return Err(TextError::Duplicate { line, what: "element", name: tok.to_string() });
        }
        names.push(tok.to_string());
    }
    if names.is_empty() {
        return Err(TextError::MissingEntry { line, what: "at least one element".to_string() });
    }
    if names.len() > cap {
        return Err(TextError::TooMany { count: names.len(), cap });
    }
    Ok(NameTable { ids, names })
}

fn lookup(t: &NameTable, name: &str, line: usize) -> Result<usize, TextError> {
    t.ids
        .get(name)
        .copied()
        .ok_or_else(|| TextError::UnknownName { line, name: name.to_string() })
}

fn parse_pairs(
    value: &str,
    line: usize,
    sep: &str,
    expected: &'static str,
    t: &NameTable,
) -> Result<Vec<(usize, usize)>, TextError> {
    let mut out = Vec::new();
    for tok in value.split_whitespace() {
        let (l, r) = tok.split_once(sep).ok_or_else(|| TextError::Malformed {
            line,
            token: tok.to_string(),
            expected,
        })?;
        out.push((lookup(t, l, line)?, lookup(t, r, line)?));
    }
    Ok(out)
}

fn parse_op_line(value: &str, line: usize, t: &NameTable) -> Result<Vec<u32>, TextError> {
    let n = t.names.len();
    let mut table = vec![None; n];
    for tok in value.split_whitespace() {
        let (l, r) = tok.split_once("->").ok_or_else(|| TextError::Malformed {
            line,
            token: tok.to_string(),
            expected: "source->target",
        })?;
        let src = lookup(t, l, line)?;
        let dst = lookup(t, r, line)?;
        if table[src].is_some() {
            return Err(TextError::Duplicate { line, what: "operator entry for", name: l.to_string() });
        }
        table[src] = Some(dst as u32);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| TextError::MissingEntry {
                line,
                what: format!("an entry for element {}", t.names[i]),
            })
        })
        .collect()
}

// directive lines, split at the first ':'; keys listed by the caller
fn split_directives<'a>(
    text: &'a str,
    keys: &[&str],
) -> Result<Vec<(usize, &'a str, &'a str)>, TextError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body.split_once(':').ok_or_else(|| TextError::Malformed {
            line,
            token: body.to_string(),
            expected: "a `key: ...` directive",
        })?;
        let key = key.trim();
        if !keys.contains(&key) {
            return Err(TextError::UnknownDirective { line, key: key.to_string() });
        }
        if out.iter().any(|&(_, k, _)| k == key) {
            return Err(TextError::Duplicate { line, what: "directive", name: key.to_string() });
        }
        out.push((line, key, value));
    }
    Ok(out)
}

fn find<'a>(dirs: &[(usize, &'a str, &'a str)], key: &str) -> Option<(usize, &'a str)> {
    dirs.iter().find(|&&(_, k, _)| k == key).map(|&(l, _, v)| (l, v))
}

pub fn parse_algebra(text: &str, cap: usize) -> Result<AlgebraDoc, TextError> {
    let dirs = split_directives(text, &["elements", "leq", "op g", "op h", "op f", "op p"])?;
    let (eline, evalue) =
        find(&dirs, "elements").ok_or(TextError::MissingDirective { what: "elements" })?;
    let table = parse_names(evalue, eline, cap)?;
    let covers = match find(&dirs, "leq") {
        Some((l, v)) => parse_pairs(v, l, "<", "lower<upper", &table)?,
        None => Vec::new(),
    };
    let mut ops = Vec::new();
    for op in TenseOp::ALL {
        if let Some((l, v)) = find(&dirs, &format!("op {}", op.symbol())) {
            ops.push(parse_op_line(v, l, &table)?);
        }
    }
    let ops = match ops.len() {
        0 => None,
        4 => {
            let mut it = ops.into_iter();
            Some([
                it.next().unwrap(),
                it.next().unwrap(),
                it.next().unwrap(),
                it.next().unwrap(),
            ])
        }
        present => return Err(TextError::PartialOps { present }),
    };
    Ok(AlgebraDoc { names: table.names, covers, ops })
}

pub fn parse_space(text: &str, cap: usize) -> Result<SpaceDoc, TextError> {
    let dirs = split_directives(text, &["points", "leq", "rel R"])?;
    let (pline, pvalue) =
        find(&dirs, "points").ok_or(TextError::MissingDirective { what: "points" })?;
    let table = parse_names(pvalue, pline, cap)?;
    let covers = match find(&dirs, "leq") {
        Some((l, v)) => parse_pairs(v, l, "<", "lower<upper", &table)?,
        None => Vec::new(),
    };
    let edges = match find(&dirs, "rel R") {
        Some((l, v)) => parse_pairs(v, l, "->", "source->target", &table)?,
        None => Vec::new(),
    };
    Ok(SpaceDoc { names: table.names, covers, edges })
}

/// Total map between two name universes, `a->x` per entry.
pub fn parse_map(text: &str, src: &[String], dst: &[String]) -> Result<Vec<u32>, TextError> {
    let src_tab = NameTable {
        ids: src.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect(),
        names: src.to_vec(),
    };
    let dst_tab = NameTable {
        ids: dst.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect(),
        names: dst.to_vec(),
    };
    let mut map = vec![None; src.len()];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        for tok in body.split_whitespace() {
            let (l, r) = tok.split_once("->").ok_or_else(|| TextError::Malformed {
                line,
                token: tok.to_string(),
                expected: "source->target",
            })?;
            let s = lookup(&src_tab, l, line)?;
            let d = lookup(&dst_tab, r, line)?;
            if map[s].is_some() {
                return Err(TextError::Duplicate { line, what: "map entry for", name: l.to_string() });
            }
            map[s] = Some(d as u32);
        }
    }
    map.into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| TextError::MissingEntry {
                line: 1,
                what: format!("a map entry for element {}", src[i]),
            })
        })
        .collect()
}

/// `x1=a,x2=b` against an algebra's element names.
pub fn parse_assignment(s: &str, a: &TenseHAlgebra) -> Result<Assignment, TextError> {
    let mut out = Assignment::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let bad = || TextError::Malformed {
            line: 1,
            token: tok.to_string(),
            expected: "x<digits>=<element>",
        };
        let (var, val) = tok.split_once('=').ok_or_else(bad)?;
        let idx: u32 = var
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let elem = (0..a.n())
            .find(|&e| a.name(e) == val)
            .ok_or_else(|| TextError::UnknownName { line: 1, name: val.to_string() })?;
        if out.insert(idx, elem).is_some() {
            return Err(TextError::Duplicate { line: 1, what: "assignment for", name: var.to_string() });
        }
    }
    Ok(out)
}

/// Comma-separated element names resolved to ids; empty input is the
/// empty list.
pub fn resolve_elements(s: &str, a: &TenseHAlgebra) -> Result<Vec<usize>, TextError> {
    let mut out = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let elem = (0..a.n())
            .find(|&e| a.name(e) == tok)
            .ok_or_else(|| TextError::UnknownName { line: 1, name: tok.to_string() })?;
        out.push(elem);
    }
    Ok(out)
}

pub fn serialize_algebra(a: &TenseHAlgebra) -> String {
    let poset = a.alg.lattice().poset();
    let mut out = String::new();
    out.push_str("elements:");
    for i in 0..a.n() {
        out.push(' ');
        out.push_str(a.name(i));
    }
    out.push('\n');
    out.push_str("leq:");
    for (l, u) in poset.covers() {
        out.push_str(&format!(" {}<{}", a.name(l), a.name(u)));
    }
    out.push('\n');
    for op in TenseOp::ALL {
        out.push_str(&format!("op {}:", op.symbol()));
        for x in 0..a.n() {
            out.push_str(&format!(" {}->{}", a.name(x), a.name(a.op(op, x))));
        }
        out.push('\n');
    }
    out
}

pub fn serialize_space(x: &TenseHSpace) -> String {
    let mut out = String::new();
    out.push_str("points:");
    for i in 0..x.n() {
        out.push(' ');
        out.push_str(x.name(i));
    }
    out.push('\n');
    out.push_str("leq:");
    for (l, u) in x.poset().covers() {
        out.push_str(&format!(" {}<{}", x.name(l), x.name(u)));
    }
    out.push('\n');
    out.push_str("rel R:");
    for (s, t) in x.edges() {
        out.push_str(&format!(" {}->{}", x.name(s), x.name(t)));
    }
    out.push('\n');
    out
}
