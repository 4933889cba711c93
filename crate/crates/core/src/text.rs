//! Plain-text MAP, GRAPH and FAMILY formats.
//!
//! ```text
//! map torus1v
//! flags 8
//! R: 0-1 2-3 4-5 6-7
//! G: 0-3 1-2 4-7 5-6
//! B: 0-7 1-4 2-5 3-6
//! ```
//!
//! ```text
//! graph k4
//! vertices a b c d
//! edge 1 a b
//! edge 2 a c
//! ```
//!
//! A FAMILY file has one set per line, `{1,3,4}`, with `{}` for the empty
//! set. All three formats skip blank lines and lines starting with `#`.

use std::fmt::Write;

use thiserror::Error;

use crate::edgeset::{EdgeId, EdgeSet, SetFamily, MAX_EDGE_ID};
use crate::graph::{GraphError, LabeledEdge, LabeledGraph};
use crate::map::{validate_map, Color, CombinatorialMap, Flag, MapError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// First content word of a text, used to tell formats apart.
pub fn leading_keyword(text: &str) -> Option<&str> {
    content_lines(text)
        .next()
        .and_then(|(_, l)| l.split_whitespace().next())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFile {
    pub name: String,
    pub map: CombinatorialMap,
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<(usize, &'a str), ParseError> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| syntax(1, format!("expected `{keyword} …`, found end of input")))?;
    match text.split_once(char::is_whitespace) {
        Some((k, rest)) if k == keyword && !rest.trim().is_empty() => Ok((line, rest.trim())),
        _ if text == keyword => Err(syntax(line, format!("`{keyword}` needs a value"))),
        _ => Err(syntax(line, format!("expected `{keyword} …`"))),
    }
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

pub fn parse_map(text: &str) -> Result<MapFile, ParseError> {
    let mut lines = content_lines(text);
    let (_, name) = header(&mut lines, "map")?;
    let (flag_line, count) = header(&mut lines, "flags")?;
    let n: usize = number(flag_line, count, "flag count")?;
    let mut pairings: [Option<Vec<(Flag, Flag)>>; 3] = [None, None, None];
    for (line, text) in lines {
        let (label, rest) = text
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `R:`, `G:` or `B:`"))?;
        let slot = match label.trim() {
            "R" => 0,
            "G" => 1,
            "B" => 2,
            other => return Err(syntax(line, format!("unknown color `{other}`"))),
        };
        if pairings[slot].is_some() {
            return Err(syntax(line, format!("color {} given twice", label.trim())));
        }
        let mut pairs = Vec::new();
        for token in rest.split_whitespace() {
            let (a, b) = token
                .split_once('-')
                .ok_or_else(|| syntax(line, format!("expected a pair `a-b`, found `{token}`")))?;
            let (a, b): (Flag, Flag) = (number(line, a, "flag")?, number(line, b, "flag")?);
            if a >= n || b >= n {
                return Err(syntax(line, format!("flag in `{token}` is outside 0..{n}")));
            }
            pairs.push((a, b));
        }
        pairings[slot] = Some(pairs);
    }
    let [r, g, b] = pairings;
    let missing = |c: Color| syntax(text.lines().count().max(1), format!("missing {} line", c.letter()));
    let r = r.ok_or_else(|| missing(Color::Red))?;
    let g = g.ok_or_else(|| missing(Color::Green))?;
    let b = b.ok_or_else(|| missing(Color::Black))?;
    let map = validate_map(n, &r, &g, &b)?;
    Ok(MapFile {
        name: name.to_string(),
        map,
    })
}

/// Canonical MAP text: pairs written `low-high`, sorted by the low flag.
pub fn emit_map(name: &str, map: &CombinatorialMap) -> String {
    let mut out = format!("map {name}\nflags {}\n", map.flag_count());
    for c in Color::ALL {
        out.push(c.letter());
        out.push(':');
        let inv = map.involution(c);
        for (x, &y) in inv.iter().enumerate() {
            if x < y {
                write!(out, " {x}-{y}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub name: String,
    pub graph: LabeledGraph,
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut lines = content_lines(text);
    let (_, name) = header(&mut lines, "graph")?;
    let (vline, names) = header(&mut lines, "vertices")?;
    let vertices: Vec<String> = names.split_whitespace().map(str::to_string).collect();
    for (i, v) in vertices.iter().enumerate() {
        if vertices[..i].contains(v) {
            return Err(syntax(vline, format!("vertex `{v}` declared twice")));
        }
    }
    let index = |line: usize, v: &str| {
        vertices
            .iter()
            .position(|w| w == v)
            .ok_or_else(|| syntax(line, format!("undeclared vertex `{v}`")))
    };
    let mut edges = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [kw, id, u, v] = tokens[..] else {
            return Err(syntax(line, "expected `edge <id> <u> <v>`"));
        };
        if kw != "edge" {
            return Err(syntax(line, "expected `edge <id> <u> <v>`"));
        }
        edges.push(LabeledEdge {
            id: EdgeId(number(line, id, "edge label")?),
            ends: [index(line, u)?, index(line, v)?],
        });
    }
    Ok(GraphFile {
        name: name.to_string(),
        graph: LabeledGraph::new(vertices, edges)?,
    })
}

pub fn emit_graph(name: &str, g: &LabeledGraph) -> String {
    let names = g.vertex_names();
    let mut out = format!("graph {name}\nvertices {}\n", names.join(" "));
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", e.id, names[e.ends[0]], names[e.ends[1]]).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedFamily {
    pub family: SetFamily,
    /// Sets that appeared more than once, with the line of the repeat.
    pub duplicates: Vec<(usize, EdgeSet)>,
}

pub fn parse_family(text: &str) -> Result<ParsedFamily, ParseError> {
    let mut sets = Vec::new();
    let mut duplicates = Vec::new();
    for (line, text) in content_lines(text) {
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| syntax(line, "expected a set in braces, e.g. `{1,2}`"))?;
        let mut set = EdgeSet::EMPTY;
        for token in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let id: u32 = number(line, token, "edge label")?;
            if id == 0 || id > MAX_EDGE_ID {
                return Err(syntax(line, format!("edge label {id} is outside 1..={MAX_EDGE_ID}")));
            }
            set.insert(EdgeId(id));
        }
        if sets.contains(&set) {
            duplicates.push((line, set));
        } else {
            sets.push(set);
        }
    }
    Ok(ParsedFamily {
        family: SetFamily::from_sets(sets),
        duplicates,
    })
}

pub fn emit_family(family: &SetFamily) -> String {
    family.iter().map(|s| format!("{s}\n")).collect()
}
