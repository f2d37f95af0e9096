use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{CoreReport, Exclusion, Mode, References, RingInfo, Witness};
use super::{candidate_monomials, lower_bound, special::special_core};
use crate::algebra::{Matrix, PrimeField};
use crate::error::{Error, Result};
use crate::monomial_ideals::{Monomial, MonomialIdeal};
use crate::reductions::{random_reduction_with, sample_stream, LinearIdeal, ATTEMPT_CAP};
use crate::sr_ring::StanleyReisnerRing;

pub const DEFAULT_SAMPLES: usize = 50;

fn witness(m: &Matrix<PrimeField>, sample: usize) -> Witness {
    Witness {
        rows: m.row_iter().map(|r| r.to_vec()).collect(),
        modulus: m.field().modulus(),
        sample: Some(sample),
    }
}

/// Draws sample `i`: a random reduction with dim k[Δ] generators.
fn draw(r: &Arc<StanleyReisnerRing<PrimeField>>, seed: u64, i: usize) -> Result<LinearIdeal<PrimeField>> {
    let mut rng = sample_stream(seed, i as u64);
    Ok(random_reduction_with(r, r.dim(), &mut rng, ATTEMPT_CAP)?.ideal)
}

/// Estimates the intersection of all linear minimal reductions by sampling.
///
/// A candidate missing from one sample is excluded for good, with that
/// sample as witness; candidates present in every sample are only probable.
pub fn core_monte_carlo(r: &Arc<StanleyReisnerRing<PrimeField>>, samples: usize, seed: u64) -> Result<CoreReport> {
    if samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let certified_in = lower_bound(r);
    let candidates: Vec<Monomial> = candidate_monomials(r)
        .into_iter()
        .filter(|m| !certified_in.contains(m))
        .collect();

    let drawn: Vec<(Matrix<PrimeField>, Vec<bool>)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let j = draw(r, seed, i)?;
            let mut tester = j.membership();
            let flags = candidates.iter().map(|m| tester.contains(m)).collect();
            Ok((j.coeffs().clone(), flags))
        })
        .collect::<Result<_>>()?;

    let mut certified_out = Vec::new();
    let mut probable_in = Vec::new();
    for (k, m) in candidates.iter().enumerate() {
        match drawn.iter().position(|(_, flags)| !flags[k]) {
            Some(i) => certified_out.push(Exclusion {
                monomial: m.clone(),
                witness: Some(witness(&drawn[i].0, i)),
            }),
            None => probable_in.push(m.clone()),
        }
    }

    let mut report = CoreReport {
        ring: RingInfo::of(r),
        mode: Mode::MonteCarlo,
        rule: None,
        certified_in,
        certified_out,
        exact: probable_in.is_empty(),
        probable_in,
        samples,
        seed: Some(seed),
        confirmed_by_special: false,
        qualifier: if r.dim() <= 2 { "*core".into() } else { "l*core (sampled)".into() },
        references: References::of(r),
        brute_force: None,
    };
    if r.dim() <= 2 {
        if let Some((ideal, _)) = special_core(r.complex()) {
            let ideal = ideal.reinterpret(r.ambient()).expect("same variables");
            if ideal == report.result() {
                report.exact = true;
                report.confirmed_by_special = true;
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub ring: RingInfo,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<BoundCheck>,
    pub violations: usize,
    pub passed: bool,
}

/// Checks 𝔪^{d+1} ⊆ J and τ𝔪 ⊆ J for sampled reductions J, and that every
/// variable is missing from at least one of them.
pub fn verify_bounds(r: &Arc<StanleyReisnerRing<PrimeField>>, samples: usize, seed: u64) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let labels = r.complex().labels().to_vec();
    let top = r.maximal_power(r.dim() + 1);
    let tau_m = r.test_ideal().product(&r.maximal_ideal()).expect("same ring");
    let n = r.n_vars();
    let variables: Vec<Monomial> = (0..n).map(|i| Monomial::var(n, i)).collect();

    let per_sample: Vec<(Vec<BoundCheck>, Vec<bool>)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let j = draw(r, seed, i)?;
            let mut tester = j.membership();
            let mut check = |name: &str, ideal: &MonomialIdeal| {
                let missing: Vec<String> = ideal
                    .generators()
                    .iter()
                    .filter(|g| !tester.contains(g))
                    .map(|g| g.format(&labels))
                    .collect();
                BoundCheck {
                    name: format!("sample {i}: {name} in J"),
                    passed: missing.is_empty(),
                    detail: if missing.is_empty() { String::new() } else { format!("missing {}", missing.join(", ")) },
                }
            };
            let checks = vec![check("m^(d+1)", &top), check("tau*m", &tau_m)];
            let vars = variables.iter().map(|v| tester.contains(v)).collect();
            Ok((checks, vars))
        })
        .collect::<Result<_>>()?;

    let mut checks: Vec<BoundCheck> = Vec::with_capacity(2 * samples + 1);
    let mut in_all = vec![true; n];
    for (c, vars) in per_sample {
        checks.extend(c);
        for (acc, v) in in_all.iter_mut().zip(vars) {
            *acc &= v;
        }
    }
    if r.complex().is_simplex() {
        checks.push(BoundCheck {
            name: "no variable in the sampled intersection".into(),
            passed: true,
            detail: "not applicable: the only reduction of a simplex is m itself".into(),
        });
    } else {
        let stuck: Vec<String> = (0..n).filter(|&i| in_all[i]).map(|i| labels[i].clone()).collect();
        checks.push(BoundCheck {
            name: "no variable in the sampled intersection".into(),
            passed: stuck.is_empty(),
            detail: if stuck.is_empty() { String::new() } else { format!("in every sample: {}", stuck.join(", ")) },
        });
    }
    let violations = checks.iter().filter(|c| !c.passed).count();
    Ok(VerifyReport {
        ring: RingInfo::of(r),
        samples,
        seed,
        checks,
        violations,
        passed: violations == 0,
    })
}
