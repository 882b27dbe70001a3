//! Line-oriented instance files.
//!
//! ```text
//! c <comment>
//! p <kind> <n> <m> <k> [ell]
//! v <id> <label>
//! cap <id> <capacity>
//! red <id>
//! part <id> <index>
//! e <u> <v>
//! ```
//!
//! Ids are dense `0..n`. `v` lines are optional and default each label to
//! its id. The header must precede every other non-comment line, and
//! exactly `m` distinct edges must follow.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, ProblemKind};

struct Cursor<'a> {
    line: usize,
    tokens: Vec<(usize, &'a str)>,
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        let tokens = text
            .split_ascii_whitespace()
            .map(|t| (t.as_ptr() as usize - text.as_ptr() as usize + 1, t))
            .collect();
        Cursor { line, tokens }
    }

    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |(c, t)| c + t.len())
    }

    fn arity(&self, allowed: &[usize]) -> Result<()> {
        let got = self.tokens.len() - 1;
        if allowed.contains(&got) {
            Ok(())
        } else if got > *allowed.iter().max().expect("nonempty") {
            Err(self.err(self.tokens[allowed.iter().max().unwrap() + 1].0, "unexpected trailing field"))
        } else {
            Err(self.err(self.end_column(), format!("`{}` expects {} fields", self.tokens[0].1, allowed[0])))
        }
    }

    fn num<T: std::str::FromStr>(&self, i: usize, what: &str) -> Result<T> {
        let (col, tok) = self.tokens[i];
        tok.parse().map_err(|_| self.err(col, format!("expected {what}, found `{tok}`")))
    }

    fn vertex(&self, i: usize, n: usize) -> Result<usize> {
        let v: usize = self.num(i, "vertex id")?;
        if v >= n {
            return Err(self.err(self.tokens[i].0, format!("vertex {v} out of range for n = {n}")));
        }
        Ok(v)
    }
}

struct Header {
    kind: ProblemKind,
    n: usize,
    m: usize,
    k: usize,
    ell: Option<usize>,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<Header> = None;
    let mut labels: Vec<Option<usize>> = Vec::new();
    let mut caps: Vec<Option<i64>> = Vec::new();
    let mut red: Vec<bool> = Vec::new();
    let mut parts: Vec<Option<usize>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let cur = Cursor::new(line, raw);
        let Some(&(col, tag)) = cur.tokens.first() else { continue };
        if tag == "c" {
            continue;
        }
        if tag == "p" {
            if header.is_some() {
                return Err(cur.err(col, "duplicate header"));
            }
            cur.arity(&[4, 5])?;
            let kind_tok = cur.tokens[1];
            let kind: ProblemKind = kind_tok
                .1
                .parse()
                .map_err(|_| cur.err(kind_tok.0, format!("unknown problem kind `{}`", kind_tok.1)))?;
            let n: usize = cur.num(2, "vertex count")?;
            let h = Header {
                kind,
                n,
                m: cur.num(3, "edge count")?,
                k: cur.num(4, "budget")?,
                ell: if cur.tokens.len() == 6 { Some(cur.num(5, "ell")?) } else { None },
            };
            labels = vec![None; n];
            caps = vec![None; n];
            red = vec![false; n];
            parts = vec![None; n];
            header = Some(h);
            continue;
        }
        let Some(h) = &header else {
            return Err(cur.err(col, "expected header line `p <kind> <n> <m> <k> [ell]`"));
        };
        let n = h.n;
        match tag {
            "v" => {
                cur.arity(&[2])?;
                let v = cur.vertex(1, n)?;
                if labels[v].replace(cur.num(2, "label")?).is_some() {
                    return Err(cur.err(col, format!("duplicate label line for vertex {v}")));
                }
            }
            "cap" => {
                cur.arity(&[2])?;
                let v = cur.vertex(1, n)?;
                if caps[v].replace(cur.num(2, "capacity")?).is_some() {
                    return Err(cur.err(col, format!("duplicate capacity for vertex {v}")));
                }
            }
            "red" => {
                cur.arity(&[1])?;
                let v = cur.vertex(1, n)?;
                red[v] = true;
            }
            "part" => {
                cur.arity(&[2])?;
                let v = cur.vertex(1, n)?;
                if parts[v].replace(cur.num(2, "part index")?).is_some() {
                    return Err(cur.err(col, format!("duplicate part for vertex {v}")));
                }
            }
            "e" => {
                cur.arity(&[2])?;
                let u = cur.vertex(1, n)?;
                let v = cur.vertex(2, n)?;
                if u == v {
                    return Err(cur.err(cur.tokens[2].0, format!("self-loop on vertex {u}")));
                }
                edges.push((u.min(v), u.max(v)));
                if edges.len() > h.m {
                    return Err(cur.err(col, format!("more than the declared {} edges", h.m)));
                }
            }
            other => return Err(cur.err(col, format!("unknown line type `{other}`"))),
        }
    }

    let eof = |message: String| Error::Parse {
        line: last_line.max(1),
        column: 1,
        message,
    };
    let h = header.ok_or_else(|| eof("missing header line".into()))?;
    if edges.len() != h.m {
        return Err(eof(format!("declared {} edges, found {}", h.m, edges.len())));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(eof(format!("duplicate edge {} {}", w[0].0, w[0].1)));
    }
    let graph = Graph::from_edges(h.n, edges)?;
    let mut inst = Instance::new(h.kind, graph, h.k);
    inst.ell = h.ell;
    inst.labels = labels.iter().enumerate().map(|(v, l)| l.unwrap_or(v)).collect();
    inst.red = red;
    if caps.iter().any(Option::is_some) || h.kind == ProblemKind::CapVc {
        inst.caps = Some(
            caps.iter()
                .enumerate()
                .map(|(v, c)| c.ok_or_else(|| eof(format!("vertex {v} has no capacity"))))
                .collect::<Result<_>>()?,
        );
    }
    if parts.iter().any(Option::is_some) || h.kind == ProblemKind::Mcis {
        inst.parts = Some(
            parts
                .iter()
                .enumerate()
                .map(|(v, p)| p.ok_or_else(|| eof(format!("vertex {v} has no part"))))
                .collect::<Result<_>>()?,
        );
    }
    inst.validate().map_err(|e| eof(e.to_string()))?;
    Ok(inst)
}

/// Canonical text form; `parse_instance` inverts it exactly.
pub fn write_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    write!(out, "p {} {} {} {}", inst.kind, g.n(), g.m(), inst.k).unwrap();
    if let Some(ell) = inst.ell {
        write!(out, " {ell}").unwrap();
    }
    out.push('\n');
    if inst.labels.iter().enumerate().any(|(v, &l)| v != l) {
        for (v, l) in inst.labels.iter().enumerate() {
            writeln!(out, "v {v} {l}").unwrap();
        }
    }
    if let Some(caps) = &inst.caps {
        for (v, c) in caps.iter().enumerate() {
            writeln!(out, "cap {v} {c}").unwrap();
        }
    }
    for (v, _) in inst.red.iter().enumerate().filter(|(_, &r)| r) {
        writeln!(out, "red {v}").unwrap();
    }
    if let Some(parts) = &inst.parts {
        for (v, p) in parts.iter().enumerate() {
            writeln!(out, "part {v} {p}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn read_instance(path: &std::path::Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text)
}
