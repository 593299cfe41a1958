//! Standard Young tableaux counts.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Default weight bound for [`brute_force_syt`].
pub const DEFAULT_BRUTE_FORCE_BOUND: u32 = 12;

/// Hook length at 0-based cell `(r, c)`: arm + leg + 1.
pub fn hook_length(lambda: &Partition, conj: &Partition, r: usize, c: usize) -> u32 {
    let arm = lambda.part(r) - c as u32 - 1;
    let leg = conj.part(c) - r as u32 - 1;
    arm + leg + 1
}

/// `f_lambda = n! / prod h(x)`, via exact big-integer division.
pub fn hook_length_f(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let n = lambda.weight();
    let numer: BigUint = (1..=n).map(BigUint::from).product();
    let denom: BigUint = lambda
        .cells()
        .map(|(r, c)| BigUint::from(hook_length(lambda, &conj, r, c)))
        .product();
    let (q, rem) = numer.div_rem(&denom);
    assert!(rem.is_zero(), "hook product does not divide n! for {lambda}");
    q
}

/// Counts standard Young tableaux of shape `lambda` by placing `1, 2, ...,
/// n` one at a time on an addable corner inside `lambda`.
pub fn brute_force_syt_bounded(lambda: &Partition, bound: u32) -> Result<BigUint> {
    let n = lambda.weight();
    if n > bound {
        return Err(Error::BoundExceeded { weight: n, bound });
    }
    fn fill(target: &[u32], rows: &mut [u32], placed: u32, n: u32) -> BigUint {
        if placed == n {
            return BigUint::one();
        }
        let mut total = BigUint::zero();
        for r in 0..target.len() {
            let fits_row = rows[r] < target[r];
            let fits_col = r == 0 || rows[r - 1] > rows[r];
            if fits_row && fits_col {
                rows[r] += 1;
                total += fill(target, rows, placed + 1, n);
                rows[r] -= 1;
            }
        }
        total
    }
    let mut rows = vec![0; lambda.len()];
    Ok(fill(lambda.parts(), &mut rows, 0, n))
}

/// [`brute_force_syt_bounded`] with the default bound.
pub fn brute_force_syt(lambda: &Partition) -> Result<BigUint> {
    brute_force_syt_bounded(lambda, DEFAULT_BRUTE_FORCE_BOUND)
}
