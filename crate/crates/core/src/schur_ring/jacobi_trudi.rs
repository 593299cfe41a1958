//! Jacobi-Trudi determinants in the elementary generators.
//!
//! `s_mu = det(e_{mu'_i - i + j})` and `h_r = det(e_{1 - i + j})` (the
//! `r x r` matrix with `e_1, e_2, ...` along the first row and `1`s on the
//! subdiagonal). Determinants are expanded symbolically into signed sums of
//! `e`-monomials ([`EPoly`]) and then evaluated in the ring by Pieri's rule.
//! This is the oracle path against the Littlewood-Richardson product.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BoxContext, Element, EMonomials};
use crate::error::Result;
use crate::partitions::Partition;
use crate::scalar::Field;

/// Polynomial in `e_1, e_2, ...`: integer combination of `e_lambda`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EPoly(BTreeMap<Partition, BigInt>);

impl EPoly {
    pub fn zero() -> Self {
        EPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::e(0)
    }

    /// The generator `e_i`, with `e_0 = 1`.
    pub fn e(i: u32) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Partition::row(i), BigInt::one());
        EPoly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.0.iter()
    }

    fn add_term(&mut self, p: Partition, c: BigInt) {
        let slot = self.0.entry(p.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&p);
        }
    }

    pub fn add(&self, other: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (p, c) in &other.0 {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> EPoly {
        EPoly(self.0.iter().map(|(p, c)| (p.clone(), -c)).collect())
    }

    pub fn mul(&self, other: &EPoly) -> EPoly {
        let mut out = EPoly::zero();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), x * y);
            }
        }
        out
    }

    /// Evaluates in `R^{k,l}` (where `e_i = 0` for `i > k`).
    pub fn evaluate<T: Field>(&self, memo: &mut EMonomials<T>) -> Element<T> {
        let ctx = memo.context();
        let mut out = Element::zero(ctx);
        for (lam, c) in &self.0 {
            let c = T::from_int(i64::try_from(c).expect("Jacobi-Trudi coefficient fits in i64"));
            out = &out + &memo.get(lam).scale(&c);
        }
        out
    }
}

/// Determinant of a square matrix of [`EPoly`] entries, by Laplace
/// expansion along successive rows with memoization on the set of used
/// columns.
pub fn determinant(entries: &[Vec<EPoly>]) -> EPoly {
    let n = entries.len();
    assert!(n < 64, "determinant size {n} too large");
    fn go(entries: &[Vec<EPoly>], row: usize, used: u64, memo: &mut HashMap<u64, EPoly>) -> EPoly {
        let n = entries.len();
        if row == n {
            return EPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = EPoly::zero();
        let mut sign_pos = 0;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let a = &entries[row][col];
            if !a.is_zero() {
                let minor = go(entries, row + 1, used | (1 << col), memo);
                let term = a.mul(&minor);
                acc = if sign_pos % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
            }
            sign_pos += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(entries, 0, 0, &mut HashMap::new())
}

fn e_entry(idx: i64) -> EPoly {
    if idx < 0 {
        EPoly::zero()
    } else {
        EPoly::e(idx as u32)
    }
}

/// The `r x r` Jacobi-Trudi determinant for `h_r` in the `e`'s.
pub fn h_as_epoly(r: u32) -> EPoly {
    let n = r as usize;
    let entries: Vec<Vec<EPoly>> = (0..n)
        .map(|i| (0..n).map(|j| e_entry(1 - i as i64 + j as i64)).collect())
        .collect();
    determinant(&entries)
}

/// `s_mu = det(e_{mu'_i - i + j})`.
pub fn schur_as_epoly(mu: &Partition) -> EPoly {
    let conj = mu.conjugate();
    let n = conj.len();
    let entries: Vec<Vec<EPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| e_entry(conj.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&entries)
}

/// `h_r` evaluated in the ring through its Jacobi-Trudi expansion.
pub fn jacobi_trudi_h<T: Field>(ctx: BoxContext, r: u32) -> Element<T> {
    h_as_epoly(r).evaluate(&mut EMonomials::new(ctx))
}

/// `s_mu` evaluated in the ring through its Jacobi-Trudi expansion.
pub fn schur_via_jacobi_trudi<T: Field>(ctx: BoxContext, mu: &Partition) -> Element<T> {
    schur_as_epoly(mu).evaluate(&mut EMonomials::new(ctx))
}

/// `e_lambda` computed on the `h` side: each `e_r` is the Jacobi-Trudi
/// determinant `det(h_{1-i+j})` (the `h_r` expansion with the roles of `e`
/// and `h` exchanged), and the resulting signed `h`-monomials are evaluated
/// by horizontal-strip Pieri steps.
pub fn e_monomial_via_h<T: Field>(ctx: BoxContext, lambda: &Partition) -> Element<T> {
    let poly = lambda
        .parts()
        .iter()
        .fold(EPoly::one(), |acc, &r| acc.mul(&h_as_epoly(r)));
    let mut out = Element::zero(ctx);
    for (hmono, c) in poly.terms() {
        let c = T::from_int(i64::try_from(c).expect("Jacobi-Trudi coefficient fits in i64"));
        let term = hmono
            .parts()
            .iter()
            .fold(Element::one(ctx), |acc, &j| acc.pieri_h(j));
        out = &out + &term.scale(&c);
    }
    out
}

/// `x * y`, expanding each `s_mu` of `y` into signed `e`-monomials and
/// multiplying `x` by each monomial via iterated Pieri.
pub fn multiply_via_jacobi_trudi<T: Field>(x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
    x.check_same(y)?;
    let mut out = Element::zero(x.context());
    for (mu, b) in y.terms() {
        for (lam, c) in schur_as_epoly(mu).terms() {
            let c = T::from_int(i64::try_from(c).expect("Jacobi-Trudi coefficient fits in i64"));
            let term = x.times_e_monomial(lam).scale(&(c * b.clone()));
            out = &out + &term;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_in_box, partitions_of};
    use crate::Rational;

    type E = Element<Rational>;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_expansions() {
        // h_2 = e_1^2 - e_2
        let h2 = h_as_epoly(2);
        let want = EPoly::e(1).mul(&EPoly::e(1)).add(&EPoly::e(2).neg());
        assert_eq!(h2, want);
        assert_eq!(h_as_epoly(1), EPoly::e(1));
        assert_eq!(schur_as_epoly(&p(&[1, 1])), EPoly::e(2));
        assert_eq!(schur_as_epoly(&p(&[])), EPoly::one());
    }

    #[test]
    fn jacobi_trudi_h_examples() {
        let c = BoxContext::new(2, 2).unwrap();
        assert_eq!(jacobi_trudi_h::<Rational>(c, 1), E::e(c, 1));
        assert_eq!(jacobi_trudi_h::<Rational>(c, 2), E::h(c, 2));
        assert!(jacobi_trudi_h::<Rational>(c, 3).is_zero());
    }

    #[test]
    fn defining_relations_vanish() {
        for k in 1..=4 {
            for l in 1..=4 {
                let c = BoxContext::new(k, l).unwrap();
                for r in 1..=l {
                    assert_eq!(jacobi_trudi_h::<Rational>(c, r), E::h(c, r));
                }
                for r in l + 1..=l + k {
                    assert!(jacobi_trudi_h::<Rational>(c, r).is_zero(), "h_{r} in {k}x{l}");
                }
            }
        }
    }

    #[test]
    fn schur_expansion_is_identity_on_basis() {
        let c = BoxContext::new(3, 3).unwrap();
        for mu in enumerate_in_box(c.rect(), None) {
            assert_eq!(schur_via_jacobi_trudi::<Rational>(c, &mu), E::schur(c, mu.clone()).unwrap());
        }
    }

    #[test]
    fn e_monomials_on_the_h_side() {
        for (k, l) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let c = BoxContext::new(k, l).unwrap();
            let mut memo = EMonomials::<Rational>::new(c);
            for n in 0..=k * l {
                for lam in partitions_of(n, k, n as usize) {
                    assert_eq!(e_monomial_via_h::<Rational>(c, &lam), memo.get(&lam), "{lam}");
                }
            }
        }
    }

    #[test]
    fn products_agree_with_lr() {
        let c = BoxContext::new(3, 3).unwrap();
        let shapes: Vec<_> = (0..=4).flat_map(|n| partitions_of(n, 3, 3)).collect();
        for a in &shapes {
            for b in &shapes {
                let x = E::schur(c, a.clone()).unwrap();
                let y = E::schur(c, b.clone()).unwrap();
                assert_eq!(x.multiply(&y).unwrap(), multiply_via_jacobi_trudi(&x, &y).unwrap());
            }
        }
    }
}
