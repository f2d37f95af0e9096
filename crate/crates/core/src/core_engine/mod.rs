//! *core(𝔪): closed forms, random sampling and exhaustive search.

mod brute;
mod monte_carlo;
mod report;
mod special;

pub use brute::{core_bruteforce, core_bruteforce_with_budget, BRUTE_FORCE_BUDGET};
pub use monte_carlo::{core_monte_carlo, verify_bounds, BoundCheck, VerifyReport, DEFAULT_SAMPLES};
pub use report::{
    BruteForceInfo, CoreReport, CoreReportDoc, Exclusion, GradedDim, Mode, References, RingInfo, Witness,
};
pub use special::{core_special, special_core, SpecialRule};

use std::sync::Arc;

use crate::algebra::{Field, PrimeField};
use crate::error::Result;
use crate::monomial_ideals::Monomial;
use crate::sr_ring::StanleyReisnerRing;

/// Closed form when one applies, sampling otherwise.
pub fn core_auto(r: &Arc<StanleyReisnerRing<PrimeField>>, samples: usize, seed: u64) -> Result<CoreReport> {
    match core_special(&**r) {
        Some(report) => Ok(report),
        None => core_monte_carlo(r, samples, seed),
    }
}

/// Nonzero monomials of degree 2..=d: the region the bounds leave open.
pub fn candidate_monomials<F: Field>(r: &StanleyReisnerRing<F>) -> Vec<Monomial> {
    (2..=r.dim()).flat_map(|q| r.graded_basis(q).basis().to_vec()).collect()
}

/// 𝔪^{d+1} + τ𝔪.
pub fn lower_bound<F: Field>(r: &StanleyReisnerRing<F>) -> crate::monomial_ideals::MonomialIdeal {
    let tau_m = r.test_ideal().product(&r.maximal_ideal()).expect("same ring");
    r.maximal_power(r.dim() + 1).sum(&tau_m).expect("same ring")
}

/// All monomials x_{v_1}^{e_1}···x_{v_k}^{e_k} over distinct vertices v_i.
fn shape_monomials(n: usize, shape: &[u32]) -> Vec<Monomial> {
    fn rec(n: usize, shape: &[u32], used: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if used.len() == shape.len() {
            let mut exps = vec![0; n];
            for (&v, &e) in used.iter().zip(shape) {
                exps[v] = e;
            }
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for v in 0..n {
            if !used.contains(&v) {
                used.push(v);
                rec(n, shape, used, out);
                used.pop();
            }
        }
    }
    let mut out = Vec::new();
    if shape.len() <= n {
        rec(n, shape, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions of `total` into at most `max_len` parts, largest part first.
fn partitions(total: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, max_len, &mut Vec::new(), &mut out);
    out
}

/// Consistency of a report with the partition lemma: for each partition
/// (α_1..α_s) of d+1 with s ≤ d, if every monomial of shape
/// (α_1−1, α_2, .., α_s, 1) is in the reported ideal, then so is every
/// monomial of shape (α_1, .., α_s).
pub fn check_partition_propagation<F: Field>(r: &StanleyReisnerRing<F>, report: &CoreReport) -> bool {
    let d = r.dim();
    let n = r.n_vars();
    let ideal = report.result();
    for alpha in partitions(d as u32 + 1, d) {
        let mut premise_shape = alpha.clone();
        premise_shape[0] -= 1;
        premise_shape.push(1);
        let premise = shape_monomials(n, &premise_shape).iter().all(|m| ideal.contains(m));
        if premise && !shape_monomials(n, &alpha).iter().all(|m| ideal.contains(m)) {
            return false;
        }
    }
    true
}
