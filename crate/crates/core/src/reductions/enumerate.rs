//! Exhaustive enumeration of row spaces over a small prime field.
//!
//! Every question asked of a linear ideal here depends only on its row
//! space, so enumerating reduced echelon forms visits each ideal once.

use std::ops::ControlFlow;

use crate::algebra::{Matrix, PrimeField};

/// Number of k-dimensional subspaces of F_p^n (a Gaussian binomial).
pub fn count_row_spaces(p: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= p.pow((n - i) as u32) - 1;
        den *= p.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Calls `visit` with the reduced echelon basis of every k-dimensional
/// subspace of F_p^n. Stops early when `visit` breaks.
pub fn for_each_row_space<V>(field: PrimeField, n: usize, k: usize, mut visit: V) -> ControlFlow<()>
where
    V: FnMut(&Matrix<PrimeField>) -> ControlFlow<()>,
{
    if k > n {
        return ControlFlow::Continue(());
    }
    let p = field.modulus();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| ((pc + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let mut m = Matrix::zeros(field, k, n);
        for (r, &pc) in pivots.iter().enumerate() {
            m.set(r, pc, 1);
        }
        let mut digits = vec![0u64; free.len()];
        loop {
            for (&(r, c), &v) in free.iter().zip(&digits) {
                m.set(r, c, v);
            }
            visit(&m)?;
            // odometer increment
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
        if !next_combination(&mut pivots, n) {
            return ControlFlow::Continue(());
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
