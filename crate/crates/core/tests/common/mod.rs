#![allow(dead_code)]

use std::sync::Arc;

use starcore::algebra::{PrimeField, DEFAULT_MODULUS};
use starcore::{SimplicialComplex, StanleyReisnerRing};

/// The small complexes exercised throughout: cycles, complete skeleta,
/// the two-facet figure on four vertices, and two-component unions.
pub fn family() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push((format!("cycle({n})"), SimplicialComplex::cycle(n).unwrap()));
    }
    for n in 2..=6 {
        for d in 1..n {
            out.push((format!("skeleton({d},{n})"), SimplicialComplex::complete_skeleton(d, n).unwrap()));
        }
    }
    out.push(("figure".into(), figure()));
    let parts: [(&str, SimplicialComplex); 3] = [
        ("edge", SimplicialComplex::simplex(2).unwrap()),
        ("filled-triangle", SimplicialComplex::simplex(3).unwrap()),
        ("triangle-graph", SimplicialComplex::cycle(3).unwrap()),
    ];
    for i in 0..parts.len() {
        for j in i..parts.len() {
            let u = SimplicialComplex::disjoint_union(&parts[i].1, &parts[j].1).unwrap();
            if u.n_vertices() <= 6 {
                out.push((format!("{}+{}", parts[i].0, parts[j].0), u));
            }
        }
    }
    out
}

/// Facets {v1 v2 v3} and {v3 v4}.
pub fn figure() -> SimplicialComplex {
    SimplicialComplex::from_facets(4, [vec![0, 1, 2], vec![2, 3]]).unwrap()
}

pub fn labeled(n: usize, facets: &[&[usize]], names: &str) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, facets.iter().map(|f| f.to_vec()))
        .unwrap()
        .with_labels(names.split(' ').map(String::from).collect())
        .unwrap()
}

pub fn ring_mod(c: SimplicialComplex, p: u64) -> Arc<StanleyReisnerRing<PrimeField>> {
    Arc::new(StanleyReisnerRing::new(c, PrimeField::new(p).unwrap()))
}

pub fn ring(c: SimplicialComplex) -> Arc<StanleyReisnerRing<PrimeField>> {
    ring_mod(c, DEFAULT_MODULUS)
}
