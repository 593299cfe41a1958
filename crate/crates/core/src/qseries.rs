//! Integer polynomials in `q` and the closed-form Hilbert series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use crate::error::{precondition, Result};
use crate::partitions::{enumerate_in_box, prop5_compose, prop5_decompose, Rectangle};
use crate::report::{self, Claim, ConjectureReport, Identity};

/// Polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Sparse: zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = QPoly::zero();
        p.add_term(exp, c.into());
        p
    }

    /// From dense coefficients, lowest degree first.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = QPoly::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(e as u32, c.into());
        }
        p
    }

    /// `1 + q + ... + q^n`.
    pub fn geometric(n: u32) -> Self {
        Self::from_coeffs((0..=n).map(|_| 1))
    }

    fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms, ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Dense coefficient vector up to the degree.
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    /// Multiplication by `q^n`.
    pub fn shift(&self, n: u32) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Coefficients read the same forwards and backwards (from exponent 0 up
    /// to the degree).
    pub fn is_palindromic(&self) -> bool {
        let dense = self.to_dense();
        dense.iter().eq(dense.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    fn mul_ref(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QPoly {
    /// `1 + q + 2q^2 - q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match *e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if *e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

fn json_int(c: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&c.to_string()).expect("integers are valid JSON numbers")
}

impl Serialize for QPoly {
    /// `{"<exponent>": <integer>, ...}`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            map.serialize_entry(&e.to_string(), &json_int(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, serde_json::Number>::deserialize(d)?;
        let mut p = QPoly::zero();
        for (e, c) in raw {
            let e: u32 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.to_string().parse().map_err(D::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

type QBinomTable = Vec<Vec<QPoly>>;

fn qbinom_cache() -> &'static RwLock<QBinomTable> {
    static CACHE: OnceLock<RwLock<QBinomTable>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![vec![QPoly::one()]]))
}

/// Gaussian binomial `[n choose r]_q`, zero when `r > n`.
///
/// Rows of the q-Pascal triangle
/// `[n, r] = [n-1, r-1] + q^r [n-1, r]` are computed once and shared.
pub fn qbinomial(n: u32, r: u32) -> QPoly {
    if r > n {
        return QPoly::zero();
    }
    let n = n as usize;
    {
        let table = qbinom_cache().read().expect("qbinomial cache poisoned");
        if let Some(row) = table.get(n) {
            return row[r as usize].clone();
        }
    }
    let mut table = qbinom_cache().write().expect("qbinomial cache poisoned");
    while table.len() <= n {
        let prev = table.last().expect("row 0 is seeded");
        let m = prev.len();
        let row: Vec<QPoly> = (0..=m)
            .map(|r| {
                let left = if r == 0 { QPoly::zero() } else { prev[r - 1].clone() };
                let right = prev.get(r).map(|p| p.shift(r as u32)).unwrap_or_default();
                &left + &right
            })
            .collect();
        table.push(row);
    }
    table[n][r as usize].clone()
}

/// Hilbert series of `R^{k,l}`: `[k+l choose k]_q`.
pub fn grassmannian_hilb(k: u32, l: u32) -> QPoly {
    qbinomial(k + l, k)
}

/// The inner sum `sum_{j=0}^{k-i} q^{j(l-i+1)} [i+j-1 choose j]_q` for `1 <= i <= l`.
fn inner_sum(k: u32, l: u32, i: u32) -> QPoly {
    debug_assert!(1 <= i && i <= l);
    (0..=k - i).fold(QPoly::zero(), |acc, j| {
        &acc + &qbinomial(i + j - 1, j).shift(j * (l + 1 - i))
    })
}

fn check_kl(k: u32, l: u32) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(precondition(format!("k, l must be positive, got ({k}, {l})")));
    }
    Ok(())
}

/// Predicted Hilbert series of the subalgebra generated by `e_1..e_m`:
/// `1 + sum_{i=1}^m q^i [l choose i]_q sum_{j=0}^{k-i} q^{j(l-i+1)} [i+j-1 choose j]_q`.
pub fn conj1_rhs(k: u32, l: u32, m: u32) -> Result<QPoly> {
    check_kl(k, l)?;
    if m > k {
        return Err(precondition(format!("m = {m} exceeds k = {k}")));
    }
    // terms with i > l carry the factor [l choose i]_q = 0
    Ok((1..=m.min(l)).fold(QPoly::one(), |acc, i| {
        let outer = qbinomial(l, i).shift(i);
        &acc + &(&outer * &inner_sum(k, l, i))
    }))
}

/// The printed quotient formula set against the difference of consecutive
/// [`conj1_rhs`] values.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientComparison {
    /// `sum_j q^{j(l-p+1)+p} [p+j-1 choose j]_q * q^p [l choose p]_q`.
    pub printed: QPoly,
    /// `conj1_rhs(k, l, p) - conj1_rhs(k, l, p - 1)`.
    pub difference: QPoly,
    /// `printed - difference`.
    pub discrepancy: QPoly,
}

impl QuotientComparison {
    pub fn agrees(&self) -> bool {
        self.discrepancy.is_zero()
    }
}

/// Evaluates the quotient Hilbert series formula exactly as printed and
/// compares it with the difference it is meant to equal.
pub fn quotient_hilb_formula(k: u32, l: u32, p: u32) -> Result<QuotientComparison> {
    check_kl(k, l)?;
    if p < 1 || p > k {
        return Err(precondition(format!("p = {p} outside 1..={k}")));
    }
    let factor = qbinomial(l, p).shift(p);
    let terms = if p > l { 0..0 } else { 0..k - p + 1 };
    let printed = terms.fold(QPoly::zero(), |acc, j| {
        let term = qbinomial(p + j - 1, j).shift(j * (l - p + 1) + p);
        &acc + &(&term * &factor)
    });
    let difference = &conj1_rhs(k, l, p)? - &conj1_rhs(k, l, p - 1)?;
    let discrepancy = &printed - &difference;
    Ok(QuotientComparison {
        printed,
        difference,
        discrepancy,
    })
}

/// `f^{k,l}_i(q)`: `f^{k,l}_i = f^{k-1,l}_{i-1} + q^{l-i+1} f^{k-1,l}_i`,
/// with `f^{k,l}_0 = f^{k,l}_k = 1`, for `0 <= i <= k <= l`.
pub fn f_recurrence(k: u32, l: u32, i: u32) -> Result<QPoly> {
    if i > k || k > l {
        return Err(precondition(format!(
            "need 0 <= i <= k <= l, got i = {i}, k = {k}, l = {l}"
        )));
    }
    // rows[kk][ii] for kk = 0..=k
    let mut row = vec![QPoly::one()];
    for kk in 1..=k {
        let next = (0..=kk)
            .map(|ii| {
                if ii == 0 || ii == kk {
                    QPoly::one()
                } else {
                    &row[ii as usize - 1] + &row[ii as usize].shift(l - ii + 1)
                }
            })
            .collect();
        row = next;
    }
    Ok(row[i as usize].clone())
}

/// `1 + sum_{i=1}^m q^i [l choose i]_q f^{k,l}_i(q)`.
pub fn conj1_rhs_via_f(k: u32, l: u32, m: u32) -> Result<QPoly> {
    if m > k || k > l {
        return Err(precondition(format!(
            "need 0 <= m <= k <= l, got m = {m}, k = {k}, l = {l}"
        )));
    }
    let mut acc = QPoly::one();
    for i in 1..=m {
        let term = &qbinomial(l, i).shift(i) * &f_recurrence(k, l, i)?;
        acc = &acc + &term;
    }
    Ok(acc)
}

fn poly_json(p: &QPoly) -> serde_json::Value {
    serde_json::to_value(p).expect("QPoly serializes")
}

/// `[k+l choose k]_q = 1 + sum_{i=1}^k sum_{j=0}^{k-i} q^i [l choose i]_q q^{j(l-i+1)} [i+j-1 choose j]_q`.
pub fn prop5_check(k: u32, l: u32) -> ConjectureReport {
    report::timed(|| {
        if k == 0 || l == 0 {
            return ConjectureReport::not_applicable(Claim::Prop5, k, l, None, "k, l >= 1");
        }
        let lhs = grassmannian_hilb(k, l);
        let mut rhs = QPoly::one();
        for i in 1..=k.min(l) {
            for j in 0..=k - i {
                let term = &qbinomial(l, i).shift(i) * &qbinomial(i + j - 1, j).shift(j * (l - i + 1));
                rhs = &rhs + &term;
            }
        }
        if lhs == rhs {
            ConjectureReport::holds(Claim::Prop5, k, l, None)
        } else {
            ConjectureReport::fails(
                Claim::Prop5,
                k,
                l,
                None,
                json!({ "lhs": poly_json(&lhs), "rhs": poly_json(&rhs), "difference": poly_json(&(&lhs - &rhs)) }),
            )
        }
    })
}

/// Exhaustive check of the rectangle decomposition on one box: every
/// nonempty partition round-trips, its weight splits as
/// `i + j(l-i+1) + |c| + |d|`, and for each `(i, j)` the weights of its
/// class are counted by `q^i [l choose i]_q q^{j(l-i+1)} [i+j-1 choose j]_q`.
/// Returns the first offending partition or class on failure.
pub fn prop5_bijection_check(k: u32, l: u32) -> Result<std::result::Result<(), String>> {
    let rect = Rectangle::new(k, l)?;
    let mut classes: BTreeMap<(u32, u32), BTreeMap<u32, i64>> = BTreeMap::new();
    for lam in enumerate_in_box(rect, None).into_iter().filter(|p| !p.is_empty()) {
        let dec = prop5_decompose(&lam, rect)?;
        if prop5_compose(&dec, rect)? != lam {
            return Ok(Err(format!("{lam} does not round-trip")));
        }
        if dec.weight(rect) != lam.weight() {
            return Ok(Err(format!("weight of {lam} does not split")));
        }
        *classes.entry((dec.i, dec.j)).or_default().entry(lam.weight()).or_insert(0) += 1;
    }
    for i in 1..=k.min(l) {
        for j in 0..=k - i {
            let want = &qbinomial(l, i).shift(i) * &qbinomial(i + j - 1, j).shift(j * (l - i + 1));
            let got = classes
                .get(&(i, j))
                .map(|h| QPoly::from_coeffs((0..=k * l).map(|d| h.get(&d).copied().unwrap_or(0))))
                .unwrap_or_else(QPoly::zero);
            if got != want {
                return Ok(Err(format!("class (i, j) = ({i}, {j}) counts {got}, expected {want}")));
            }
        }
    }
    Ok(Ok(()))
}

/// Machine check of the claim that the `f`-recurrence form equals
/// [`conj1_rhs`].
pub fn rhs_via_f_check(k: u32, l: u32, m: u32) -> ConjectureReport {
    let claim = Claim::Identity(Identity::RhsViaF);
    report::timed(|| match (conj1_rhs(k, l, m), conj1_rhs_via_f(k, l, m)) {
        (Ok(a), Ok(b)) if a == b => ConjectureReport::holds(claim, k, l, Some(m)),
        (Ok(a), Ok(b)) => ConjectureReport::fails(
            claim,
            k,
            l,
            Some(m),
            json!({ "conj1_rhs": poly_json(&a), "via_f": poly_json(&b) }),
        ),
        (Err(e), _) | (_, Err(e)) => ConjectureReport::not_applicable(claim, k, l, Some(m), e.to_string()),
    })
}

/// Reports whether the printed quotient formula matches the difference of
/// consecutive Hilbert series; the witness records the exact discrepancy
/// and whether it is accounted for by one extra factor of `q^p`.
pub fn quotient_hilb_check(k: u32, l: u32, p: u32) -> ConjectureReport {
    let claim = Claim::Identity(Identity::QuotientHilb);
    report::timed(|| match quotient_hilb_formula(k, l, p) {
        Err(e) => ConjectureReport::not_applicable(claim, k, l, Some(p), e.to_string()),
        Ok(cmp) if cmp.agrees() => ConjectureReport::holds(claim, k, l, Some(p)),
        Ok(cmp) => ConjectureReport::fails(
            claim,
            k,
            l,
            Some(p),
            json!({
                "printed": poly_json(&cmp.printed),
                "difference": poly_json(&cmp.difference),
                "discrepancy": poly_json(&cmp.discrepancy),
                "printed_equals_q^p_times_difference": cmp.printed == cmp.difference.shift(p),
            }),
        ),
    })
}

/// Degree of the difference of consecutive predicted Hilbert series.
pub fn quotient_degree(k: u32, l: u32, p: u32) -> Result<Option<u32>> {
    Ok(quotient_hilb_formula(k, l, p)?.difference.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn decomposition_classes() {
        for k in 1..=4 {
            for l in 1..=4 {
                assert_eq!(prop5_bijection_check(k, l).unwrap(), Ok(()));
            }
        }
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(5, 0), QPoly::one());
        assert_eq!(qbinomial(2, 1), poly(&[1, 1]));
        assert_eq!(qbinomial(4, 2), poly(&[1, 1, 2, 1, 1]));
        assert!(qbinomial(2, 3).is_zero());
    }

    #[test]
    fn qbinomial_structure() {
        for n in 0..=16u32 {
            for r in 0..=n {
                let b = qbinomial(n, r);
                assert_eq!(b, qbinomial(n, n - r));
                assert!(b.is_palindromic());
                assert_eq!(b.degree(), Some(r * (n - r)));
                if n > 0 && r > 0 {
                    assert_eq!(b, &qbinomial(n - 1, r - 1) + &qbinomial(n - 1, r).shift(r));
                }
            }
        }
        // value at q = 1 is the ordinary binomial
        assert_eq!(qbinomial(10, 4).eval_at_one(), BigInt::from(210));
    }

    #[test]
    fn hilbert_series_examples() {
        assert_eq!(grassmannian_hilb(1, 1), poly(&[1, 1]));
        assert_eq!(grassmannian_hilb(2, 2), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(grassmannian_hilb(2, 3), poly(&[1, 1, 2, 2, 2, 1, 1]));
    }

    #[test]
    fn hilbert_series_counts_box_partitions() {
        for k in 1..=4 {
            for l in 1..=4 {
                let h = grassmannian_hilb(k, l);
                let rect = Rectangle::new(k, l).unwrap();
                for d in 0..=k * l + 1 {
                    let n = enumerate_in_box(rect, Some(d)).len();
                    assert_eq!(h.coeff(d), BigInt::from(n));
                }
            }
        }
    }

    #[test]
    fn conj1_rhs_boundaries() {
        assert_eq!(conj1_rhs(3, 4, 0).unwrap(), QPoly::one());
        for k in 1..=5 {
            for l in 1..=5 {
                assert_eq!(conj1_rhs(k, l, 1).unwrap(), QPoly::geometric(k * l));
                assert_eq!(conj1_rhs(k, l, k).unwrap(), grassmannian_hilb(k, l));
            }
        }
        assert!(conj1_rhs(2, 2, 3).is_err());
    }

    #[test]
    fn quotient_formula_vs_difference() {
        let c = quotient_hilb_formula(1, 1, 1).unwrap();
        assert_eq!(c.difference, QPoly::monomial(1, 1));
        // the printed formula carries one extra q^p
        for k in 1..=5 {
            for l in 1..=5 {
                for p in 1..=k {
                    let c = quotient_hilb_formula(k, l, p).unwrap();
                    assert_eq!(c.printed, c.difference.shift(p));
                }
            }
        }
        let c = quotient_hilb_formula(2, 2, 2).unwrap();
        assert_eq!(c.difference, QPoly::monomial(1, 2));
        assert!(!c.agrees());
        assert!(quotient_hilb_formula(2, 2, 0).is_err());
    }

    #[test]
    fn quotient_degree_law() {
        assert_eq!(quotient_degree(3, 3, 2).unwrap(), Some(7));
        for k in 1..=6 {
            for l in 1..=6 {
                for p in 1..=k {
                    let want = (p <= l).then(|| k * l - p * p + p);
                    assert_eq!(quotient_degree(k, l, p).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn f_recurrence_examples() {
        assert_eq!(f_recurrence(3, 5, 0).unwrap(), QPoly::one());
        assert_eq!(f_recurrence(3, 5, 3).unwrap(), QPoly::one());
        assert_eq!(f_recurrence(2, 2, 1).unwrap(), poly(&[1, 0, 1]));
        assert_eq!(f_recurrence(5, 6, 2).unwrap().eval_at_one(), BigInt::from(10));
        assert!(f_recurrence(3, 2, 1).is_err());
        assert!(f_recurrence(2, 3, 3).is_err());
    }

    #[test]
    fn via_f_examples() {
        assert_eq!(conj1_rhs_via_f(2, 3, 0).unwrap(), QPoly::one());
        assert_eq!(conj1_rhs_via_f(2, 2, 1).unwrap(), poly(&[1, 1, 1, 1, 1]));
        assert_eq!(conj1_rhs_via_f(3, 4, 2).unwrap(), conj1_rhs(3, 4, 2).unwrap());
    }

    #[test]
    fn prop5_examples() {
        for (k, l) in [(1, 1), (2, 2), (4, 6)] {
            assert!(prop5_check(k, l).is_holds());
        }
    }

    #[test]
    fn display_and_json() {
        assert_eq!(poly(&[1, 1, 2]).to_string(), "1 + q + 2q^2");
        assert_eq!(poly(&[0, -1, 0, 3]).to_string(), "-q + 3q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        let s = serde_json::to_string(&poly(&[1, 0, 2])).unwrap();
        assert_eq!(s, r#"{"0":1,"2":2}"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, poly(&[1, 0, 2]));
        let big = QPoly::monomial(BigInt::from(10).pow(30), 3);
        let back: QPoly = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &QPoly::one(), a.clone());
        }
    }
}
