use std::ops::ControlFlow;
use std::sync::Arc;

use super::report::{BruteForceInfo, CoreReport, Exclusion, GradedDim, Mode, References, RingInfo, Witness};
use crate::algebra::{PrimeField, Subspace};
use crate::error::{Error, Result};
use crate::monomial_ideals::{Monomial, MonomialIdeal};
use crate::reductions::{for_each_row_space, LinearIdeal};
use crate::sr_ring::StanleyReisnerRing;

/// Default cap on p^(d·n), the number of d×n matrices over GF(p).
pub const BRUTE_FORCE_BUDGET: u128 = 10_000_000;

const EXAMPLES_KEPT: usize = 8;

pub fn core_bruteforce(r: &Arc<StanleyReisnerRing<PrimeField>>) -> Result<CoreReport> {
    core_bruteforce_with_budget(r, BRUTE_FORCE_BUDGET)
}

/// The intersection of every linear reduction with d generators over GF(p),
/// found by visiting each d-dimensional row space once.
pub fn core_bruteforce_with_budget(r: &Arc<StanleyReisnerRing<PrimeField>>, budget: u128) -> Result<CoreReport> {
    let field = *r.field();
    let p = field.modulus();
    let d = r.dim();
    let n = r.n_vars();
    let needed = (p as u128).checked_pow((d * n) as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    // degrees 1..=d+1; index 0 unused
    let bases: Vec<Vec<Monomial>> = (0..=d + 1).map(|q| r.graded_basis(q).basis().to_vec()).collect();
    let mut running: Vec<Option<Subspace<PrimeField>>> = vec![None; d + 2];
    let mut witnesses: Vec<Vec<Option<Witness>>> = bases.iter().map(|b| vec![None; b.len()]).collect();
    let mut count = 0usize;
    let mut examples = Vec::new();

    let _ = for_each_row_space(field, n, d, |m| {
        let j = LinearIdeal::new(r.clone(), m.clone()).expect("echelon rows are nonzero");
        if !j.is_star_reduction().verdict {
            return ControlFlow::Continue(());
        }
        let w = Witness {
            rows: m.row_iter().map(|row| row.to_vec()).collect(),
            modulus: p,
            sample: None,
        };
        for q in 1..=d + 1 {
            let jq = j.graded_component(q);
            for (k, slot) in witnesses[q].iter_mut().enumerate() {
                if slot.is_none() && !jq.contains_unit(k) {
                    *slot = Some(w.clone());
                }
            }
            running[q] = Some(match running[q].take() {
                None => jq,
                Some(acc) => acc.intersect(&jq),
            });
        }
        if examples.len() < EXAMPLES_KEPT {
            examples.push(w);
        }
        count += 1;
        ControlFlow::Continue(())
    });
    if count == 0 {
        return Err(Error::NoReductions(p));
    }

    let mut graded = Vec::new();
    for q in 1..=d + 1 {
        let space = running[q].as_ref().expect("at least one reduction");
        let units = (0..bases[q].len()).filter(|&k| space.contains_unit(k)).count();
        graded.push(GradedDim {
            degree: q,
            ambient: bases[q].len(),
            dim: space.dim(),
            monomial: units == space.dim(),
        });
    }
    let monomial = graded.iter().all(|g| g.monomial);

    let mut inside = Vec::new();
    let mut certified_out = Vec::new();
    for q in 2..=d + 1 {
        for (k, m) in bases[q].iter().enumerate() {
            match &witnesses[q][k] {
                None => inside.push(m.clone()),
                Some(w) if q <= d => certified_out.push(Exclusion {
                    monomial: m.clone(),
                    witness: Some(w.clone()),
                }),
                Some(_) => {}
            }
        }
    }
    // variables can only be in the intersection if J_1 is shared by all reductions
    for (k, m) in bases[1].iter().enumerate() {
        if witnesses[1][k].is_none() {
            inside.push(m.clone());
        }
    }

    Ok(CoreReport {
        ring: RingInfo::of(r),
        mode: Mode::BruteForce,
        rule: None,
        certified_in: MonomialIdeal::new(r.ambient(), inside),
        certified_out,
        probable_in: Vec::new(),
        samples: count,
        seed: None,
        exact: true,
        confirmed_by_special: false,
        qualifier: format!("l*core over GF({p})"),
        references: References::of(r),
        brute_force: Some(BruteForceInfo {
            modulus: p,
            reductions: count,
            graded,
            monomial,
            examples,
        }),
    })
}
