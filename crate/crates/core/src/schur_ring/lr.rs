//! Littlewood-Richardson coefficients by skew-tableau enumeration.
//!
//! `c^nu_{lambda mu}` counts semistandard fillings of `nu / lambda` with
//! content `mu` whose reverse reading word (rows top to bottom, each row
//! right to left) is a lattice word. The filling is grown one letter at a
//! time: the cells holding letter `t` form a horizontal strip, and the
//! lattice condition between letters `t-1` and `t` reads row by row
//!
//! ```text
//! #t in rows 0..=r  <=  #(t-1) in rows 0..r
//! ```
//!
//! since in each row the `t`s sit to the right of the `t-1`s and are read
//! first.

use std::collections::BTreeMap;

use crate::partitions::{Partition, Rectangle};

struct Search<'a> {
    mu: &'a [u32],
    max_rows: usize,
    max_cols: u32,
    out: BTreeMap<Partition, u64>,
}

impl Search<'_> {
    fn letter(&mut self, t: usize, shape: &mut Vec<u32>, prev: &[u32]) {
        if t == self.mu.len() {
            let nu = Partition::new(shape.clone()).expect("strips keep a partition");
            *self.out.entry(nu).or_insert(0) += 1;
            return;
        }
        let old = shape.clone();
        let mut counts = vec![0u32; self.max_rows];
        self.row(t, 0, self.mu[t], shape, &old, prev, &mut counts, 0, 0);
    }

    #[allow(clippy::too_many_arguments)]
    fn row(
        &mut self,
        t: usize,
        r: usize,
        remaining: u32,
        shape: &mut Vec<u32>,
        old: &[u32],
        prev: &[u32],
        counts: &mut Vec<u32>,
        placed: u32,
        prev_above: u32,
    ) {
        if remaining == 0 {
            let counts_now = counts.clone();
            self.letter(t + 1, shape, &counts_now);
            return;
        }
        if r == self.max_rows {
            return;
        }
        let base = old[r];
        let cap = if r == 0 { self.max_cols } else { old[r - 1].min(self.max_cols) };
        if cap < base {
            return;
        }
        let mut most = remaining.min(cap - base);
        if t > 0 {
            // lattice: placed + n <= #(t-1) strictly above row r
            most = most.min(prev_above.saturating_sub(placed));
        }
        let above_next = prev_above + if t > 0 { prev[r] } else { 0 };
        for n in (0..=most).rev() {
            shape[r] = base + n;
            counts[r] = n;
            self.row(t, r + 1, remaining - n, shape, old, prev, counts, placed + n, above_next);
        }
        shape[r] = base;
        counts[r] = 0;
    }
}

/// All nonzero `c^nu_{lambda mu}`, keyed by `nu`.
///
/// With `bound = Some(rect)` only `nu` inside the box are produced; this
/// is exact truncation since every intermediate shape is contained in `nu`.
pub fn lr_coefficients(
    lambda: &Partition,
    mu: &Partition,
    bound: Option<Rectangle>,
) -> BTreeMap<Partition, u64> {
    let unbounded_rows = lambda.len() + mu.len();
    let (max_rows, max_cols) = match bound {
        Some(r) => (r.k as usize, r.l),
        None => (unbounded_rows, u32::MAX),
    };
    let mut out = BTreeMap::new();
    if !lambda.fits_in(Rectangle { k: max_rows as u32, l: max_cols }) {
        return out;
    }
    let mut search = Search {
        mu: mu.parts(),
        max_rows,
        max_cols,
        out: BTreeMap::new(),
    };
    let mut shape: Vec<u32> = (0..max_rows).map(|r| lambda.part(r)).collect();
    let prev = vec![0u32; max_rows];
    search.letter(0, &mut shape, &prev);
    out.append(&mut search.out);
    out
}

/// Single coefficient `c^nu_{lambda mu}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let rect = Rectangle {
        k: nu.len() as u32,
        l: nu.first(),
    };
    lr_coefficients(lambda, mu, Some(rect)).get(nu).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{horizontal_strips, partitions_of, vertical_strips};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn classic_values() {
        // s_21 * s_21 has c^{321}_{21,21} = 2
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 2, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[6])), 0);
        let all = lr_coefficients(&p(&[2, 1]), &p(&[2, 1]), None);
        let total: u64 = all.values().sum();
        assert_eq!(all.len(), 7);
        assert_eq!(total, 8);
    }

    #[test]
    fn pieri_special_cases() {
        for n in 0..=5 {
            for lam in partitions_of(n, n, n as usize) {
                for r in 0..=3 {
                    let h = lr_coefficients(&lam, &Partition::row(r), None);
                    let want = horizontal_strips(&lam, r, None);
                    assert!(h.values().all(|&c| c == 1));
                    assert_eq!(h.keys().cloned().collect::<Vec<_>>(), want);
                    let e = lr_coefficients(&lam, &Partition::column(r), None);
                    let want = vertical_strips(&lam, r, None);
                    assert_eq!(e.keys().cloned().collect::<Vec<_>>(), want);
                }
            }
        }
    }

    #[test]
    fn symmetric_in_factors() {
        for a in partitions_of(3, 3, 3) {
            for b in partitions_of(4, 4, 4) {
                assert_eq!(lr_coefficients(&a, &b, None), lr_coefficients(&b, &a, None));
            }
        }
    }

    #[test]
    fn bounded_equals_filtered() {
        let rect = Rectangle { k: 3, l: 3 };
        for a in partitions_of(3, 3, 3) {
            for b in partitions_of(3, 3, 3) {
                let full: BTreeMap<_, _> = lr_coefficients(&a, &b, None)
                    .into_iter()
                    .filter(|(nu, _)| nu.fits_in(rect))
                    .collect();
                assert_eq!(lr_coefficients(&a, &b, Some(rect)), full);
            }
        }
    }
}
