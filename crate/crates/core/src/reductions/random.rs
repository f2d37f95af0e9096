use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::LinearIdeal;
use crate::algebra::{Field, Matrix, PrimeField};
use crate::error::{Error, Result};
use crate::sr_ring::StanleyReisnerRing;

/// Default number of draws before a sampler gives up.
pub const ATTEMPT_CAP: usize = 64;

/// A sampled reduction and the number of draws it took.
#[derive(Debug, Clone)]
pub struct Sampled<F: Field> {
    pub ideal: LinearIdeal<F>,
    pub attempts: usize,
}

/// The random stream used for sample `index` under `seed`.
pub fn sample_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_matrix<R: Rng + ?Sized>(field: PrimeField, rows: usize, cols: usize, rng: &mut R) -> Matrix<PrimeField> {
    let data = (0..rows * cols).map(|_| field.sample(rng)).collect();
    Matrix::new(field, rows, cols, data).expect("sizes agree")
}

/// A uniformly random s×n coefficient matrix, redrawn until it has no zero
/// row and passes the facet-rank test.
pub fn random_reduction(
    ring: &Arc<StanleyReisnerRing<PrimeField>>,
    s: usize,
    seed: u64,
) -> Result<Sampled<PrimeField>> {
    random_reduction_with(ring, s, &mut ChaCha8Rng::seed_from_u64(seed), ATTEMPT_CAP)
}

pub fn random_reduction_with<R: Rng + ?Sized>(
    ring: &Arc<StanleyReisnerRing<PrimeField>>,
    s: usize,
    rng: &mut R,
    cap: usize,
) -> Result<Sampled<PrimeField>> {
    if s < ring.dim() {
        return Err(Error::TooFewGenerators {
            required: ring.dim(),
            actual: s,
        });
    }
    let field = *ring.field();
    for attempt in 1..=cap {
        let m = random_matrix(field, s, ring.n_vars(), rng);
        if (0..s).any(|r| m.is_zero_row(r)) {
            continue;
        }
        let j = LinearIdeal::new(ring.clone(), m)?;
        if j.is_star_reduction().verdict {
            return Ok(Sampled { ideal: j, attempts: attempt });
        }
    }
    Err(Error::SamplingFailed { attempts: cap })
}

/// Cuts a *-reduction down to dim k[Δ] generators, each a random
/// combination of the given ones.
pub fn shrink(j: &LinearIdeal<PrimeField>, seed: u64) -> Result<LinearIdeal<PrimeField>> {
    if !j.is_star_reduction().verdict {
        return Err(Error::NotAStarReduction);
    }
    let d = j.ring().dim();
    let s = j.n_generators();
    if s <= d {
        return Ok(j.clone());
    }
    let field = *j.ring().field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPT_CAP {
        let combo = random_matrix(field, d, s, &mut rng);
        let rows = combo.mul(j.coeffs())?;
        if (0..d).any(|r| rows.is_zero_row(r)) {
            continue;
        }
        let candidate = LinearIdeal::new(j.ring().clone(), rows)?;
        if candidate.is_star_reduction().verdict {
            return Ok(candidate);
        }
    }
    Err(Error::SamplingFailed { attempts: ATTEMPT_CAP })
}
