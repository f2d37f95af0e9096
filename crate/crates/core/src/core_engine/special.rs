use std::fmt;

use serde::Serialize;

use super::report::{CoreReport, Exclusion, Mode, References, RingInfo};
use super::candidate_monomials;
use crate::algebra::Field;
use crate::complex::SimplicialComplex;
use crate::monomial_ideals::{Ambient, MonomialIdeal};
use crate::sr_ring::StanleyReisnerRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialRule {
    /// One facet: 𝔪 has no proper reduction.
    Simplex,
    /// All facets are points.
    DimensionOne,
    TwoFacets,
    Cycle,
    DisjointUnion,
}

impl fmt::Display for SpecialRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialRule::Simplex => "simplex",
            SpecialRule::DimensionOne => "dimension-one",
            SpecialRule::TwoFacets => "two-facets",
            SpecialRule::Cycle => "cycle",
            SpecialRule::DisjointUnion => "disjoint-union",
        })
    }
}

/// *core(𝔪) by closed form, when one of the known families matches.
pub fn special_core(c: &SimplicialComplex) -> Option<(MonomialIdeal, SpecialRule)> {
    let amb = Ambient::of(c);
    let m = MonomialIdeal::maximal(amb.clone());
    if c.is_simplex() {
        return Some((m, SpecialRule::Simplex));
    }
    if c.max_facet_size() == 1 {
        return Some((m.power(2), SpecialRule::DimensionOne));
    }
    if c.facets().len() == 2 {
        return Some((m.power(2), SpecialRule::TwoFacets));
    }
    if c.is_cycle_graph() {
        return Some((m.power(3), SpecialRule::Cycle));
    }
    if !c.is_connected() {
        let mut acc = MonomialIdeal::zero(amb.clone());
        for comp in c.connected_components() {
            let part = if comp.complex.is_simplex() {
                MonomialIdeal::from_variables(amb.clone(), &comp.vertices).power(2)
            } else {
                special_core(&comp.complex)?.0.extend(amb.clone(), &comp.vertices)
            };
            acc = acc.sum(&part).expect("same ring");
        }
        return Some((acc, SpecialRule::DisjointUnion));
    }
    None
}

/// Report for the closed-form case, or `None` when no rule applies.
pub fn core_special<F: Field>(r: &StanleyReisnerRing<F>) -> Option<CoreReport> {
    let (ideal, rule) = special_core(r.complex())?;
    let ideal = ideal.reinterpret(r.ambient()).expect("same variables");
    let certified_out = candidate_monomials(r)
        .into_iter()
        .filter(|m| !ideal.contains(m))
        .map(|monomial| Exclusion { monomial, witness: None })
        .collect();
    Some(CoreReport {
        ring: RingInfo::of(r),
        mode: Mode::Special,
        rule: Some(rule),
        certified_in: ideal,
        certified_out,
        probable_in: Vec::new(),
        samples: 0,
        seed: None,
        exact: true,
        confirmed_by_special: false,
        qualifier: "*core".into(),
        references: References::of(r),
        brute_force: None,
    })
}
