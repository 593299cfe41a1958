//! The ring `R^{k,l}` in the Schur basis `{s_lambda : lambda inside the
//! k x l box}`.
//!
//! Products are computed in the ring of symmetric functions and truncated:
//! any `s_nu` with `nu` outside the box is dropped. Because a nonzero
//! Littlewood-Richardson coefficient `c^nu_{lambda mu}` forces
//! `lambda, mu` inside `nu`, truncating after every step agrees with
//! truncating once at the end.
//!
//! Two independent product paths exist: [`Element::multiply`] uses the
//! Littlewood-Richardson rule ([`lr`]), and
//! [`jacobi_trudi::multiply_via_jacobi_trudi`] expands the right factor as a
//! signed sum of `e`-monomials and applies Pieri's rule.

pub mod jacobi_trudi;
pub mod lr;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::partitions::{enumerate_in_box, horizontal_strips, vertical_strips, Partition, Rectangle};
use crate::scalar::Field;
use crate::Rational;

/// The box every element of one ring lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxContext {
    rect: Rectangle,
}

impl BoxContext {
    pub fn new(k: u32, l: u32) -> Result<Self> {
        Ok(BoxContext {
            rect: Rectangle::new(k, l)?,
        })
    }

    pub fn from_rect(rect: Rectangle) -> Self {
        BoxContext { rect }
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    pub fn k(&self) -> u32 {
        self.rect.k
    }

    pub fn l(&self) -> u32 {
        self.rect.l
    }

    /// `kl`, the top degree.
    pub fn top_degree(&self) -> u32 {
        self.rect.area()
    }

    /// The top class `l^k`.
    pub fn top(&self) -> Partition {
        self.rect.top()
    }

    /// Schur basis of the degree-`d` component, canonical order.
    pub fn basis(&self, d: u32) -> Vec<Partition> {
        enumerate_in_box(self.rect, Some(d))
    }
}

/// Homogeneity of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// A finite combination `sum c_lambda s_lambda` in `R^{k,l}`.
#[derive(Clone, PartialEq)]
pub struct Element<T> {
    ctx: BoxContext,
    terms: BTreeMap<Partition, T>,
}

impl<T: Field> Element<T> {
    pub fn zero(ctx: BoxContext) -> Self {
        Element {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: BoxContext) -> Self {
        Self::basis_unchecked(ctx, Partition::empty())
    }

    fn basis_unchecked(ctx: BoxContext, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, T::one());
        Element { ctx, terms }
    }

    /// `s_lambda`; errors when `lambda` leaves the box.
    pub fn schur(ctx: BoxContext, lambda: Partition) -> Result<Self> {
        lambda.require_in(ctx.rect)?;
        Ok(Self::basis_unchecked(ctx, lambda))
    }

    /// `e_i = s_{1^i}`; zero for `i > k`.
    pub fn e(ctx: BoxContext, i: u32) -> Self {
        let lambda = Partition::column(i);
        if lambda.fits_in(ctx.rect) {
            Self::basis_unchecked(ctx, lambda)
        } else {
            Self::zero(ctx)
        }
    }

    /// `h_j = s_(j)`; zero for `j > l`.
    pub fn h(ctx: BoxContext, j: u32) -> Self {
        let lambda = Partition::row(j);
        if lambda.fits_in(ctx.rect) {
            Self::basis_unchecked(ctx, lambda)
        } else {
            Self::zero(ctx)
        }
    }

    /// Builds an element from arbitrary terms, dropping zero coefficients and
    /// out-of-box partitions (truncation).
    pub fn from_terms(ctx: BoxContext, terms: impl IntoIterator<Item = (Partition, T)>) -> Self {
        let mut out = Self::zero(ctx);
        for (p, c) in terms {
            if p.fits_in(ctx.rect) {
                out.add_term(p, c);
            }
        }
        out
    }

    fn add_term(&mut self, p: Partition, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(v) => {
                let sum = v.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&p);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn context(&self) -> BoxContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `s_nu`; errors when `nu` leaves the box.
    pub fn coefficient(&self, nu: &Partition) -> Result<T> {
        nu.require_in(self.ctx.rect)?;
        Ok(self.terms.get(nu).cloned().unwrap_or_else(T::zero))
    }

    /// Coefficient of the top class `s_{l^k}`.
    pub fn top_coefficient(&self) -> T {
        self.terms.get(&self.ctx.top()).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Degree {
        let mut weights = self.terms.keys().map(Partition::weight);
        match weights.next() {
            None => Degree::Zero,
            Some(w) if weights.all(|v| v == w) => Degree::Homogeneous(w),
            Some(_) => Degree::Mixed,
        }
    }

    /// Coordinates in the given basis list; terms outside the list are an
    /// error.
    pub fn coordinates(&self, basis: &[Partition]) -> Result<Vec<T>> {
        let mut found = 0;
        let coords = basis
            .iter()
            .map(|b| match self.terms.get(b) {
                Some(c) => {
                    found += 1;
                    c.clone()
                }
                None => T::zero(),
            })
            .collect();
        if found != self.terms.len() {
            return Err(precondition("element has support outside the requested basis"));
        }
        Ok(coords)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        Element {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v.clone() * c.clone())).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.rect,
                right: other.ctx.rect,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    fn map_strips(&self, f: impl Fn(&Partition) -> Vec<Partition>) -> Self {
        let mut out = Self::zero(self.ctx);
        for (lambda, c) in &self.terms {
            for mu in f(lambda) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// Multiplication by `e_i`: add vertical strips of `i` cells.
    pub fn pieri_e(&self, i: u32) -> Self {
        let rect = self.ctx.rect;
        self.map_strips(|lambda| vertical_strips(lambda, i, Some(rect)))
    }

    /// Multiplication by `h_j`: add horizontal strips of `j` cells.
    pub fn pieri_h(&self, j: u32) -> Self {
        let rect = self.ctx.rect;
        self.map_strips(|lambda| horizontal_strips(lambda, j, Some(rect)))
    }

    /// Multiplication by `e_1^n`.
    pub fn times_e1_pow(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |acc, _| {
            if acc.is_zero() {
                acc
            } else {
                acc.pieri_e(1)
            }
        })
    }

    /// Multiplication by `e_lambda = e_{lambda_1} e_{lambda_2} ...`,
    /// left to right.
    pub fn times_e_monomial(&self, lambda: &Partition) -> Self {
        lambda.parts().iter().fold(self.clone(), |acc, &p| acc.pieri_e(p))
    }

    /// Product by the Littlewood-Richardson rule, truncated to the box.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let rect = self.ctx.rect;
        let mut out = Self::zero(self.ctx);
        let mut cache: HashMap<(&Partition, &Partition), BTreeMap<Partition, u64>> = HashMap::new();
        for (lambda, a) in &self.terms {
            for (mu, b) in &other.terms {
                let coeffs = cache
                    .entry((lambda, mu))
                    .or_insert_with(|| lr::lr_coefficients(lambda, mu, Some(rect)));
                let ab = a.clone() * b.clone();
                for (nu, c) in coeffs.iter() {
                    out.add_term(nu.clone(), ab.clone() * T::from_int(*c as i64));
                }
            }
        }
        Ok(out)
    }

    /// The involution `s_lambda -> s_lambda'`; only defined for square boxes.
    pub fn omega(&self) -> Result<Self> {
        if self.ctx.k() != self.ctx.l() {
            return Err(precondition(format!(
                "omega needs a square box, got {}",
                self.ctx.rect
            )));
        }
        Ok(Element {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
        })
    }
}

/// `e_lambda` by iterated Pieri with truncation after every factor.
pub fn e_monomial<T: Field>(ctx: BoxContext, lambda: &Partition) -> Element<T> {
    Element::one(ctx).times_e_monomial(lambda)
}

/// `e_lambda` expanded in the full ring of symmetric functions (no box),
/// with integer coefficients.
pub fn e_monomial_untruncated(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut cur: BTreeMap<Partition, BigInt> = BTreeMap::new();
    cur.insert(Partition::empty(), BigInt::from(1));
    for &p in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (nu, c) in &cur {
            for mu in vertical_strips(nu, p, None) {
                *next.entry(mu).or_insert_with(BigInt::zero) += c;
            }
        }
        cur = next;
    }
    cur
}

/// Lazily memoized `e`-monomials for one box.
///
/// `e_lambda` is built from `e_{lambda without its first part}` by one
/// Pieri step, so a whole family shares work.
pub struct EMonomials<T> {
    ctx: BoxContext,
    memo: HashMap<Partition, Element<T>>,
}

impl<T: Field> EMonomials<T> {
    pub fn new(ctx: BoxContext) -> Self {
        EMonomials {
            ctx,
            memo: HashMap::new(),
        }
    }

    pub fn context(&self) -> BoxContext {
        self.ctx
    }

    pub fn get(&mut self, lambda: &Partition) -> Element<T> {
        if let Some(e) = self.memo.get(lambda) {
            return e.clone();
        }
        let value = match lambda.parts().split_first() {
            None => Element::one(self.ctx),
            Some((&first, rest)) => {
                let tail = Partition::new(rest.to_vec()).expect("tail of a partition");
                self.get(&tail).pieri_e(first)
            }
        };
        self.memo.insert(lambda.clone(), value.clone());
        value
    }
}

impl<T: Field> Add for &Element<T> {
    type Output = Element<T>;

    /// Panics when the contexts differ; see [`Element::checked_add`].
    fn add(self, rhs: &Element<T>) -> Element<T> {
        self.checked_add(rhs).expect("adding elements of different rings")
    }
}

impl<T: Field> Sub for &Element<T> {
    type Output = Element<T>;

    fn sub(self, rhs: &Element<T>) -> Element<T> {
        self.checked_sub(rhs).expect("subtracting elements of different rings")
    }
}

impl<T: Field> Neg for &Element<T> {
    type Output = Element<T>;

    fn neg(self) -> Element<T> {
        Element {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c.clone())).collect(),
        }
    }
}

impl<T: Field> fmt::Display for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (p, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "s{p}")?;
            } else {
                write!(f, "({c})*s{p}")?;
            }
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ctx.rect, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    #[serde(rename = "box")]
    rect: [u32; 2],
    terms: Vec<TermRepr>,
}

/// `"p/q"`, always with an explicit denominator.
pub fn fraction_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_fraction(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

impl Serialize for Element<Rational> {
    /// `{"box": [k, l], "terms": [{"partition": [...], "coeff": "p/q"}, ...]}`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            rect: [self.ctx.k(), self.ctx.l()],
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermRepr {
                    partition: p.clone(),
                    coeff: fraction_string(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ElementRepr::deserialize(d)?;
        let ctx = BoxContext::new(repr.rect[0], repr.rect[1]).map_err(D::Error::custom)?;
        let mut out = Element::zero(ctx);
        for t in repr.terms {
            t.partition.require_in(ctx.rect).map_err(D::Error::custom)?;
            let c = parse_fraction(&t.coeff)
                .ok_or_else(|| D::Error::custom(format!("bad coefficient '{}'", t.coeff)))?;
            out.add_term(t.partition, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::hook_length_f;
    use num_traits::One;

    type E = Element<Rational>;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ctx(k: u32, l: u32) -> BoxContext {
        BoxContext::new(k, l).unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn s(c: BoxContext, parts: &[u32]) -> E {
        E::schur(c, p(parts)).unwrap()
    }

    fn sum(c: BoxContext, terms: &[(&[u32], i64)]) -> E {
        E::from_terms(c, terms.iter().map(|(pp, v)| (p(pp), q(*v))))
    }

    #[test]
    fn generators() {
        let c = ctx(2, 2);
        assert_eq!(E::e(c, 1), s(c, &[1]));
        assert!(E::e(c, 3).is_zero());
        assert_eq!(E::h(ctx(2, 3), 2), s(ctx(2, 3), &[2]));
        assert_eq!(E::e(c, 0), E::one(c));
        assert_eq!(E::h(c, 0), E::one(c));
        assert!(E::schur(c, p(&[3])).is_err());
    }

    #[test]
    fn pieri_examples() {
        let c = ctx(2, 2);
        assert_eq!(E::one(c).pieri_e(1), s(c, &[1]));
        assert_eq!(s(c, &[1]).pieri_e(1), sum(c, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(s(c, &[2, 1]).pieri_e(1), s(c, &[2, 2]));
        assert_eq!(E::one(ctx(2, 3)).pieri_h(2), s(ctx(2, 3), &[2]));
        assert_eq!(s(c, &[1]).pieri_h(1), sum(c, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(s(c, &[2]).pieri_h(2), s(c, &[2, 2]));
        assert!(s(c, &[2, 1]).pieri_h(2).is_zero());
    }

    #[test]
    fn multiply_examples() {
        let c = ctx(3, 3);
        let x = s(c, &[1, 1]);
        assert_eq!(x.multiply(&x).unwrap(), sum(c, &[(&[2, 2], 1), (&[2, 1, 1], 1)]));
        let y = sum(c, &[(&[2, 1], 3), (&[1], -2)]);
        assert_eq!(y.multiply(&E::one(c)).unwrap(), y);
        assert!(x.multiply(&E::one(ctx(2, 3))).is_err());
    }

    #[test]
    fn duality_in_2x3() {
        let c = ctx(2, 3);
        let all = c.rect().top();
        for lam in enumerate_in_box(c.rect(), None) {
            let comp = lam.complement_in(c.rect()).unwrap();
            let prod = s(c, lam.parts()).multiply(&s(c, comp.parts())).unwrap();
            assert_eq!(prod.coefficient(&all).unwrap(), q(1), "{lam}");
        }
    }

    #[test]
    fn e_monomial_examples() {
        let c = ctx(2, 2);
        assert_eq!(e_monomial::<Rational>(c, &p(&[])), E::one(c));
        assert_eq!(e_monomial::<Rational>(c, &p(&[1, 1, 1, 1])), sum(c, &[(&[2, 2], 2)]));
        // e_2 e_1 = s_21 + s_111 -> s_21
        assert_eq!(e_monomial::<Rational>(c, &p(&[2, 1])), s(c, &[2, 1]));
        let x = e_monomial::<Rational>(c, &p(&[1, 1, 1, 1]));
        assert_eq!(x.coefficient(&p(&[2, 2])).unwrap(), q(2));
        assert_eq!(E::one(c).coefficient(&p(&[])).unwrap(), q(1));
        assert_eq!(s(c, &[1]).coefficient(&p(&[2])).unwrap(), q(0));
        assert!(s(c, &[1]).coefficient(&p(&[3])).is_err());
    }

    #[test]
    fn e_monomials_have_nonnegative_integer_coefficients() {
        let c = ctx(3, 3);
        let mut memo = EMonomials::<Rational>::new(c);
        for n in 0..=9 {
            for lam in crate::partitions::partitions_of(n, 3, n as usize) {
                let x = memo.get(&lam);
                assert_eq!(x, e_monomial(c, &lam));
                for (_, v) in x.terms() {
                    assert!(v.is_integer() && *v > q(0));
                }
            }
        }
    }

    #[test]
    fn truncation_consistency() {
        for k in 1..=3 {
            for l in 1..=3 {
                let c = ctx(k, l);
                for n in 0..=6 {
                    for lam in crate::partitions::partitions_of(n, n, n as usize) {
                        let stepwise: E = e_monomial(c, &lam);
                        let once = E::from_terms(
                            c,
                            e_monomial_untruncated(&lam)
                                .into_iter()
                                .map(|(p, v)| (p, Rational::from_integer(v))),
                        );
                        assert_eq!(stepwise, once, "{lam} in {k}x{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn top_power_of_e1() {
        for k in 1..=4u32 {
            for l in 1..=4u32 {
                let c = ctx(k, l);
                let top = E::one(c).times_e1_pow(k * l);
                let f = hook_length_f(&c.top());
                assert_eq!(top, E::from_terms(c, [(c.top(), Rational::from_integer(f.into()))]));
                assert!(top.pieri_e(1).is_zero());
            }
        }
    }

    #[test]
    fn e2_cubed_multiplicities() {
        let c = ctx(6, 3);
        let e2 = E::e(c, 2);
        let cube = e2.multiply(&e2).unwrap().multiply(&e2).unwrap();
        let want = sum(
            c,
            &[
                (&[1, 1, 1, 1, 1, 1], 1),
                (&[2, 1, 1, 1, 1], 2),
                (&[2, 2, 1, 1], 3),
                (&[2, 2, 2], 1),
                (&[3, 1, 1, 1], 1),
                (&[3, 2, 1], 2),
                (&[3, 3], 1),
            ],
        );
        assert_eq!(cube, want);
        assert_eq!(cube, e_monomial(c, &p(&[2, 2, 2])));
    }

    #[test]
    fn omega_examples() {
        let c = ctx(2, 2);
        assert_eq!(E::e(c, 2).omega().unwrap(), E::h(c, 2));
        assert_eq!(s(c, &[2, 1]).omega().unwrap(), s(c, &[2, 1]));
        let x = sum(c, &[(&[2], 3), (&[1], 1), (&[1, 1], -1)]);
        assert_eq!(x.omega().unwrap().omega().unwrap(), x);
        assert!(s(ctx(2, 3), &[1]).omega().is_err());
    }

    #[test]
    fn omega_is_multiplicative() {
        let c = ctx(3, 3);
        let basis = enumerate_in_box(c.rect(), None);
        for a in basis.iter().step_by(3) {
            for b in basis.iter().step_by(2) {
                let (x, y) = (s(c, a.parts()), s(c, b.parts()));
                let lhs = x.multiply(&y).unwrap().omega().unwrap();
                let rhs = x.omega().unwrap().multiply(&y.omega().unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        for i in 0..=3 {
            assert_eq!(E::e(c, i).omega().unwrap(), E::h(c, i));
        }
    }

    #[test]
    fn degree_reports() {
        let c = ctx(2, 2);
        assert_eq!(E::zero(c).degree(), Degree::Zero);
        assert_eq!(s(c, &[2, 1]).degree(), Degree::Homogeneous(3));
        assert_eq!((&s(c, &[1]) + &E::one(c)).degree(), Degree::Mixed);
    }

    #[test]
    fn json_shape() {
        let c = ctx(2, 3);
        let x = E::from_terms(c, [(p(&[2, 1]), Rational::new(3.into(), 2.into())), (p(&[]), Rational::one())]);
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(
            js,
            r#"{"box":[2,3],"terms":[{"partition":[],"coeff":"1/1"},{"partition":[2,1],"coeff":"3/2"}]}"#
        );
        let back: E = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<E>(r#"{"box":[1,1],"terms":[{"partition":[2],"coeff":"1"}]}"#).is_err());
    }
}
