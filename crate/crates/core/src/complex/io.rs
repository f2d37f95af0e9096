//! Reading and writing complexes.
//!
//! Text format: one facet per line, vertex names separated by whitespace,
//! `#` starts a comment. Structured format: a JSON object with a `vertices`
//! name list and a `facets` list of name lists. In both, vertex indices
//! follow the order in which names are listed.
//!
//! Inline specs (used by the command line) are `+`-separated terms:
//! `cycle(n)`, `skeleton(d,n)`, `simplex(n)` and `facets(a b c; c d)`,
//! joined by disjoint union.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{vertices_of, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl From<&SimplicialComplex> for ComplexDoc {
    fn from(c: &SimplicialComplex) -> Self {
        let facets = c
            .facets()
            .iter()
            .map(|&m| vertices_of(m).iter().map(|&v| c.labels()[v].clone()).collect())
            .collect();
        ComplexDoc {
            vertices: c.labels().to_vec(),
            facets,
        }
    }
}

impl SimplicialComplex {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &m in self.facets() {
            let names: Vec<&str> = vertices_of(m).iter().map(|&v| self.labels()[v].as_str()).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ComplexDoc::from(self)).expect("plain data serializes")
    }
}

/// Parses either format, picking JSON when the input starts with `{`.
pub fn parse_complex(input: &str) -> Result<SimplicialComplex> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_text(input: &str) -> Result<SimplicialComplex> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut facet = Vec::new();
        for (col, token) in tokens_with_columns(line) {
            if token.contains(['{', '}', '[', ']', '"']) {
                return Err(Error::parse(lineno + 1, col, format!("unexpected token `{token}`")));
            }
            let next = names.len();
            let id = *index.entry(token.to_string()).or_insert_with(|| {
                names.push(token.to_string());
                next
            });
            if !facet.contains(&id) {
                facet.push(id);
            }
        }
        if !facet.is_empty() {
            facets.push(facet);
        }
    }
    if facets.is_empty() {
        return Err(Error::parse(1, 1, "no facets found"));
    }
    if names.len() > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(names.len()));
    }
    SimplicialComplex::from_facets(names.len(), facets)?.with_labels(names)
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn position_of(input: &str, needle: &str, after: usize) -> (usize, usize) {
    let offset = input[after..].find(needle).map_or(after, |p| p + after);
    let before = &input[..offset];
    let line = before.matches('\n').count() + 1;
    let column = offset - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, column)
}

pub fn parse_json(input: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDoc = serde_json::from_str(input)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let facets_at = input.find("\"facets\"").unwrap_or(0);
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, name) in doc.vertices.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            let (line, column) = position_of(input, &format!("\"{name}\""), 0);
            return Err(Error::parse(line, column, format!("duplicate vertex `{name}`")));
        }
    }
    let mut facets = Vec::with_capacity(doc.facets.len());
    for facet in &doc.facets {
        let mut ids = Vec::with_capacity(facet.len());
        for name in facet {
            match index.get(name.as_str()) {
                Some(&i) => ids.push(i),
                None => {
                    let (line, column) = position_of(input, &format!("\"{name}\""), facets_at);
                    return Err(Error::parse(line, column, format!("unknown vertex `{name}`")));
                }
            }
        }
        facets.push(ids);
    }
    if doc.vertices.len() > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(doc.vertices.len()));
    }
    SimplicialComplex::from_facets(doc.vertices.len(), facets)?.with_labels(doc.vertices)
}

/// Parses an inline spec such as `cycle(4) + skeleton(2,3)`.
pub fn parse_inline(spec: &str) -> Result<SimplicialComplex> {
    let mut result: Option<SimplicialComplex> = None;
    let mut offset = 0;
    for term in split_top_level(spec) {
        let column = offset + 1 + (term.len() - term.trim_start().len());
        offset += term.len() + 1;
        let c = parse_term(term.trim(), column)?;
        result = Some(match result {
            None => c,
            Some(acc) => SimplicialComplex::disjoint_union(&acc, &c)?,
        });
    }
    result.ok_or_else(|| Error::parse(1, 1, "empty complex spec"))
}

fn split_top_level(spec: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in spec.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&spec[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&spec[start..]);
    parts
}

fn parse_term(term: &str, column: usize) -> Result<SimplicialComplex> {
    let err = |msg: String| Error::parse(1, column, msg);
    let open = term.find('(').ok_or_else(|| err(format!("expected `name(...)`, got `{term}`")))?;
    if !term.ends_with(')') {
        return Err(err(format!("missing `)` in `{term}`")));
    }
    let name = term[..open].trim().to_ascii_lowercase();
    let args = &term[open + 1..term.len() - 1];
    let numbers = || -> Result<Vec<usize>> {
        args.split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| err(format!("bad number `{}`", a.trim()))))
            .collect()
    };
    match name.as_str() {
        "cycle" => match numbers()?.as_slice() {
            [n] => SimplicialComplex::cycle(*n),
            _ => Err(err("cycle takes one argument".into())),
        },
        "skeleton" => match numbers()?.as_slice() {
            [d, n] => SimplicialComplex::complete_skeleton(*d, *n),
            _ => Err(err("skeleton takes two arguments d,n".into())),
        },
        "simplex" => match numbers()?.as_slice() {
            [n] => SimplicialComplex::simplex(*n),
            _ => Err(err("simplex takes one argument".into())),
        },
        "facets" => {
            let text = args.replace([';', '|'], "\n").replace(',', " ");
            parse_text(&text).map_err(|e| match e {
                Error::Parse { message, .. } => err(message),
                other => other,
            })
        }
        other => Err(err(format!("unknown complex `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format_names_in_listed_order() {
        let c = parse_text("v1 v2 v3\nv3 v4\n").unwrap();
        assert_eq!(c.labels(), ["v1", "v2", "v3", "v4"]);
        assert_eq!(c.facet_vertices(), vec![vec![0, 1, 2], vec![2, 3]]);
    }

    #[test]
    fn text_comments_and_blank_lines() {
        let c = parse_text("# two points\n\nx\n  y  # second\n").unwrap();
        assert_eq!(c.n_vertices(), 2);
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn text_errors_carry_position() {
        assert_eq!(parse_text("").unwrap_err(), Error::parse(1, 1, "no facets found"));
        match parse_text("a b\nc [d]").unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (2, 3)),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn json_format() {
        let c = parse_json(r#"{"vertices": ["x","y","z"], "facets": [["x","z"],["y","z"]]}"#).unwrap();
        assert_eq!(c.facet_vertices(), vec![vec![0, 2], vec![1, 2]]);
        let back = parse_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.labels(), c.labels());
    }

    #[test]
    fn json_errors() {
        let input = "{\"vertices\": [\"x\"],\n \"facets\": [[\"x\", \"w\"]]}";
        match parse_json(input).unwrap_err() {
            Error::Parse { line, column, message } => {
                assert_eq!((line, column), (2, 19));
                assert!(message.contains("`w`"));
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(parse_json("{\"vertices\": 3}"), Err(Error::Parse { .. })));
        assert_eq!(
            parse_json(r#"{"vertices": ["x","y"], "facets": [["x"]]}"#).unwrap_err(),
            Error::UncoveredVertex(1)
        );
    }

    #[test]
    fn inline_specs() {
        assert_eq!(parse_inline("cycle(4)").unwrap(), SimplicialComplex::cycle(4).unwrap());
        let u = parse_inline("skeleton(2,3) + simplex(1)").unwrap();
        assert_eq!(u.n_vertices(), 4);
        assert_eq!(u.connected_components().len(), 2);
        let f = parse_inline("facets(a b c; c d)").unwrap();
        assert_eq!(f.labels(), ["a", "b", "c", "d"]);
        assert!(parse_inline("torus(3)").is_err());
        assert!(parse_inline("cycle(2)").is_err());
        assert!(parse_inline("cycle(x)").is_err());
    }

    #[test]
    fn text_round_trip() {
        let c = parse_inline("facets(a b c; c d)").unwrap();
        let back = parse_complex(&c.to_text()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.labels(), c.labels());
    }
}
