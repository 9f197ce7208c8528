//! The plain-text complex document:
//!
//! ```text
//! # comment
//! ground: [1,2,3]
//! blocks: [2,1]
//! facets: [[1,2],[3]]
//! ```
//!
//! `facets: []` is the void complex and `facets: [[]]` is `{∅}`.

use std::fmt::Write as _;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexDocument {
    pub ground: Vec<u32>,
    pub blocks: Option<Vec<usize>>,
    pub facets: Vec<Vec<u32>>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses `[1,2]` or `[[1,2],[3]]` style values.
enum Value {
    Int(u64),
    List(Vec<Value>),
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn value(&mut self) -> Result<Value> {
        self.skip_ws();
        match self.s.get(self.pos) {
            Some(b'[') => {
                self.pos += 1;
                let mut items = Vec::new();
                self.skip_ws();
                if self.s.get(self.pos) == Some(&b']') {
                    self.pos += 1;
                    return Ok(Value::List(items));
                }
                loop {
                    items.push(self.value()?);
                    self.skip_ws();
                    match self.s.get(self.pos) {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(Value::List(items));
                        }
                        _ => return Err(perr(self.line, "expected `,` or `]`")),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
                text.parse().map(Value::Int).map_err(|_| perr(self.line, format!("integer `{text}` too large")))
            }
            _ => Err(perr(self.line, "expected `[` or an integer")),
        }
    }
}

fn parse_value(text: &str, line: usize) -> Result<Value> {
    let mut c = Cursor { s: text.as_bytes(), pos: 0, line };
    let v = c.value()?;
    c.skip_ws();
    if c.pos != text.len() {
        return Err(perr(line, "trailing characters after value"));
    }
    Ok(v)
}

fn int_list(v: Value, line: usize, what: &str) -> Result<Vec<u64>> {
    match v {
        Value::List(items) => items
            .into_iter()
            .map(|i| match i {
                Value::Int(n) => Ok(n),
                Value::List(_) => Err(perr(line, format!("{what} must be a list of integers"))),
            })
            .collect(),
        Value::Int(_) => Err(perr(line, format!("{what} must be a list"))),
    }
}

fn label(n: u64, line: usize) -> Result<u32> {
    if (1..=crate::complex::MAX_LABEL as u64).contains(&n) {
        Ok(n as u32)
    } else {
        Err(perr(line, format!("vertex label {n} is outside 1..=64")))
    }
}

fn render_list(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let (mut ground, mut blocks, mut facets) = (None, None, None);
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body.split_once(':').ok_or_else(|| perr(line, "expected `key: value`"))?;
            let value = parse_value(value.trim(), line)?;
            let slot_taken = |line| perr(line, format!("duplicate key `{}`", key.trim()));
            match key.trim() {
                "ground" => {
                    if ground.is_some() {
                        return Err(slot_taken(line));
                    }
                    let g = int_list(value, line, "ground")?
                        .into_iter()
                        .map(|n| label(n, line))
                        .collect::<Result<Vec<u32>>>()?;
                    ground = Some((g, line));
                }
                "blocks" => {
                    if blocks.is_some() {
                        return Err(slot_taken(line));
                    }
                    let b: Vec<usize> = int_list(value, line, "blocks")?.into_iter().map(|n| n as usize).collect();
                    blocks = Some((b, line));
                }
                "facets" => {
                    if facets.is_some() {
                        return Err(slot_taken(line));
                    }
                    let Value::List(items) = value else {
                        return Err(perr(line, "facets must be a list of lists"));
                    };
                    let f = items
                        .into_iter()
                        .map(|v| int_list(v, line, "a facet")?.into_iter().map(|n| label(n, line)).collect())
                        .collect::<Result<Vec<Vec<u32>>>>()?;
                    facets = Some(f);
                }
                other => return Err(perr(line, format!("unknown key `{other}`"))),
            }
        }
        let (ground, gline) = ground.ok_or_else(|| perr(0, "missing `ground:` line"))?;
        let facets = facets.ok_or_else(|| perr(0, "missing `facets:` line"))?;
        let mut sorted = ground.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != ground.len() {
            return Err(perr(gline, "ground has repeated vertices"));
        }
        let blocks = match blocks {
            Some((b, line)) => {
                if b.iter().sum::<usize>() != ground.len() || b.contains(&0) {
                    return Err(perr(line, "blocks must be positive and sum to the ground size"));
                }
                Some(b)
            }
            None => None,
        };
        let doc = ComplexDocument { ground, blocks, facets };
        doc.to_complex()?;
        Ok(doc)
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let ground = VertexSet::from_labels(self.ground.iter().copied())?;
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let s = VertexSet::from_labels(f.iter().copied())?;
                match s.difference(ground).min() {
                    Some(v) => Err(Error::NotInGround { vertex: v }),
                    None => Ok(s),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(ground, &facets)
    }

    /// Canonical document: sorted ground, maximal faces sorted within and
    /// across.
    pub fn from_complex(k: &SimplicialComplex, blocks: Option<Vec<usize>>) -> Self {
        let mut facets: Vec<Vec<u32>> = if k.is_void() { Vec::new() } else { k.facets().into_iter().map(VertexSet::to_vec).collect() };
        facets.sort();
        ComplexDocument { ground: k.ground().to_vec(), blocks, facets }
    }

    /// Block grounds, `k`-th block on consecutive ground vertices.
    pub fn block_grounds(&self) -> Option<Vec<VertexSet>> {
        let mut sorted = self.ground.clone();
        sorted.sort_unstable();
        let blocks = self.blocks.as_ref()?;
        let mut out = Vec::new();
        let mut start = 0;
        for &b in blocks {
            out.push(VertexSet::from_labels(sorted[start..start + b].iter().copied()).expect("valid labels"));
            start += b;
        }
        Some(out)
    }

    fn render_with(&self, sep: &str) -> String {
        let mut out = String::new();
        write!(out, "ground: {}", render_list(&self.ground)).unwrap();
        if let Some(b) = &self.blocks {
            let b: Vec<u32> = b.iter().map(|&x| x as u32).collect();
            write!(out, "{sep}blocks: {}", render_list(&b)).unwrap();
        }
        let facets: Vec<String> = self.facets.iter().map(|f| render_list(f)).collect();
        write!(out, "{sep}facets: [{}]", facets.join(",")).unwrap();
        out
    }

    /// Multi-line form with a trailing newline.
    pub fn render(&self) -> String {
        self.render_with("\n") + "\n"
    }

    /// Single-line form for reports.
    pub fn render_inline(&self) -> String {
        self.render_with("; ")
    }
}
