use std::fs;
use std::sync::Arc;

use starcore::complex::{parse_complex, parse_inline};
use starcore::reductions::{linearize, parse_generator};
use starcore::{Error, Field, LinearIdeal, SimplicialComplex, StanleyReisnerRing};

use crate::{Common, WithMatrix};

pub fn load_complex(c: &Common) -> Result<SimplicialComplex, String> {
    if let Some(path) = &c.facets {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return parse_complex(&text).map_err(|e| format!("{}: {e}", path.display()));
    }
    if let Some(n) = c.cycle {
        return SimplicialComplex::cycle(n).map_err(|e| e.to_string());
    }
    if let Some(s) = &c.skeleton {
        return parse_inline(&format!("skeleton({s})")).map_err(|e| e.to_string());
    }
    if let Some(s) = &c.complex {
        return parse_inline(s).map_err(|e| e.to_string());
    }
    Err("no complex given; use --facets, --cycle, --skeleton or --complex".into())
}

/// Rows separated by `;`, entries by `,` or whitespace.
pub fn parse_matrix<F: Field>(field: &F, s: &str) -> Result<Vec<Vec<F::Elem>>, Error> {
    let mut rows = Vec::new();
    let mut offset = 0;
    for row in s.split(';') {
        let mut entries = Vec::new();
        let mut col = offset;
        for tok in row.split(|ch: char| ch == ',' || ch.is_whitespace()) {
            if !tok.is_empty() {
                let v = field
                    .parse_elem(tok)
                    .ok_or_else(|| Error::parse(1, col + 1, format!("bad matrix entry `{tok}`")))?;
                entries.push(v);
            }
            col += tok.len() + 1;
        }
        offset += row.len() + 1;
        if !entries.is_empty() {
            rows.push(entries);
        }
    }
    Ok(rows)
}

pub fn load_ideal<F: Field>(r: &Arc<StanleyReisnerRing<F>>, a: &WithMatrix) -> Result<LinearIdeal<F>, String> {
    if let Some(m) = &a.matrix {
        let rows = parse_matrix(r.field(), m).map_err(|e| e.to_string())?;
        return LinearIdeal::from_rows(r.clone(), rows).map_err(|e| e.to_string());
    }
    if let Some(g) = &a.generators {
        let labels = r.complex().labels();
        let descs = g
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_generator(r.field(), s, labels))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        return linearize(r.clone(), &descs).map_err(|e| e.to_string());
    }
    Err("no ideal given; use --matrix or --generators".into())
}
