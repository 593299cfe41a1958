//! The subalgebras `R^{k,l,m}` generated by `e_1, ..., e_m` and the
//! instance checkers for the conjectures about them.
//!
//! In degree `d` the subalgebra is spanned by the `e`-monomials `e_lambda`
//! with `lambda |- d` and all parts `<= m`. Each check builds one matrix per
//! degree (rows are monomials, columns the box partitions of weight `d` in
//! canonical order) and reads ranks or span membership from it.

use serde_json::{json, Value};

use crate::error::{precondition, Result};
use crate::exact_linalg::{in_span, Matrix, SpanMembership};
use crate::partitions::{partitions_of, Partition};
use crate::qseries::{conj1_rhs, QPoly};
use crate::report::{self, Claim, ConjectureReport};
use crate::schur_ring::jacobi_trudi::e_monomial_via_h;
use crate::schur_ring::{fraction_string, BoxContext, EMonomials};
use crate::{Rational, RingElement};

/// One box together with a cache of its `e`-monomials.
pub struct Filtration {
    ctx: BoxContext,
    memo: EMonomials<Rational>,
}

impl Filtration {
    pub fn new(k: u32, l: u32) -> Result<Self> {
        let ctx = BoxContext::new(k, l)?;
        Ok(Filtration {
            ctx,
            memo: EMonomials::new(ctx),
        })
    }

    pub fn context(&self) -> BoxContext {
        self.ctx
    }

    pub fn dim(&self, d: u32) -> usize {
        self.ctx.basis(d).len()
    }

    /// Exponent vectors of the degree-`d` spanning set of `R^{k,l,m}`.
    /// Generators `e_i` with `i > k` vanish and are left out.
    pub fn generators(&self, d: u32, m: u32) -> Vec<Partition> {
        if d > self.ctx.top_degree() {
            return Vec::new();
        }
        partitions_of(d, m.min(self.ctx.k()), d as usize)
    }

    fn vectors(&mut self, d: u32, gens: &[Partition]) -> Vec<Vec<Rational>> {
        let basis = self.ctx.basis(d);
        gens.iter()
            .map(|lam| {
                self.memo
                    .get(lam)
                    .coordinates(&basis)
                    .expect("e-monomial is homogeneous of its weight")
            })
            .collect()
    }

    /// Degree-`d` dimension of `R^{k,l,m}`.
    pub fn rank(&mut self, d: u32, m: u32) -> usize {
        let gens = self.generators(d, m);
        let rows = self.vectors(d, &gens);
        rank_of_rows(rows, self.dim(d))
    }

    /// Same rank with every `e_lambda` rebuilt from the `h` side through
    /// Jacobi-Trudi; an independent path through the ring.
    pub fn rank_via_h(&self, d: u32, m: u32) -> usize {
        let basis = self.ctx.basis(d);
        let rows = self
            .generators(d, m)
            .iter()
            .map(|lam| {
                e_monomial_via_h::<Rational>(self.ctx, lam)
                    .coordinates(&basis)
                    .expect("e-monomial is homogeneous of its weight")
            })
            .collect();
        rank_of_rows(rows, basis.len())
    }

    /// Whether a homogeneous degree-`d` element lies in `R^{k,l,m}_d`; on
    /// success the certificate lists the coefficient of each `e_lambda`.
    pub fn membership(&mut self, target: &RingElement, d: u32, m: u32) -> Result<Membership> {
        let basis = self.ctx.basis(d);
        let coords = target.coordinates(&basis)?;
        let gens = self.generators(d, m);
        let rows = self.vectors(d, &gens);
        Ok(match in_span(&rows, &coords)? {
            SpanMembership::Member(c) => Membership::Member(gens.into_iter().zip(c).collect()),
            SpanMembership::NotMember => Membership::NotMember,
        })
    }

    /// `e_lambda` in the Schur basis.
    pub fn e_monomial(&mut self, lambda: &Partition) -> RingElement {
        self.memo.get(lambda)
    }
}

fn rank_of_rows(rows: Vec<Vec<Rational>>, cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    Matrix::from_rows(rows).expect("rows share the basis length").rank()
}

/// Outcome of a span-membership test in the subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// Coefficients on the spanning `e`-monomials reproducing the target.
    Member(Vec<(Partition, Rational)>),
    NotMember,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    /// Nonzero certificate entries as JSON.
    pub fn certificate_json(&self) -> Value {
        match self {
            Membership::Member(c) => Value::Array(
                c.iter()
                    .filter(|(_, v)| !num_traits::Zero::is_zero(v))
                    .map(|(p, v)| json!({ "e": p, "coeff": fraction_string(v) }))
                    .collect(),
            ),
            Membership::NotMember => Value::Null,
        }
    }
}

/// `sum_d dim R^{k,l,m}_d q^d`.
pub fn subalgebra_hilb(k: u32, l: u32, m: u32) -> Result<QPoly> {
    if m > k {
        return Err(precondition(format!("m = {m} exceeds k = {k}")));
    }
    let mut f = Filtration::new(k, l)?;
    Ok(hilb_with(&mut f, m))
}

fn hilb_with(f: &mut Filtration, m: u32) -> QPoly {
    let top = f.context().top_degree();
    QPoly::from_coeffs((0..=top).map(|d| f.rank(d, m) as i64))
}

/// Checks that per-degree ranks of `R^{k,l,m}` agree between the Pieri and
/// the Jacobi-Trudi constructions of the spanning set.
pub fn spanning_rank_oracle(k: u32, l: u32, m: u32) -> Result<bool> {
    let mut f = Filtration::new(k, l)?;
    let top = f.context().top_degree();
    Ok((0..=top).all(|d| f.rank(d, m) == f.rank_via_h(d, m)))
}

fn poly_json(p: &QPoly) -> Value {
    serde_json::to_value(p).expect("QPoly serializes")
}

pub fn check_conj1(k: u32, l: u32, m: u32) -> ConjectureReport {
    report::timed(|| {
        let computed = match subalgebra_hilb(k, l, m) {
            Ok(h) => h,
            Err(e) => return ConjectureReport::not_applicable(Claim::Conj1, k, l, Some(m), e.to_string()),
        };
        let predicted = conj1_rhs(k, l, m).expect("same preconditions as subalgebra_hilb");
        if computed == predicted {
            ConjectureReport::holds(Claim::Conj1, k, l, Some(m))
        } else {
            let diff = &computed - &predicted;
            ConjectureReport::fails(
                Claim::Conj1,
                k,
                l,
                Some(m),
                json!({
                    "degree": diff.terms().next().map(|(d, _)| d),
                    "computed": poly_json(&computed),
                    "predicted": poly_json(&predicted),
                    "difference": poly_json(&diff),
                }),
            )
        }
    })
}

fn check_m(claim: Claim, k: u32, l: u32, m: u32, min_m: u32) -> std::result::Result<Filtration, ConjectureReport> {
    if m < min_m || m > k {
        return Err(ConjectureReport::not_applicable(
            claim,
            k,
            l,
            Some(m),
            format!("need {min_m} <= m <= k, got m = {m}, k = {k}"),
        ));
    }
    Filtration::new(k, l).map_err(|e| ConjectureReport::not_applicable(claim, k, l, Some(m), e.to_string()))
}

/// First degree `d` in `from..=kl` where `R^{k,l,m-1}_d` is a proper
/// subspace, as `(d, rank, dim)`.
fn first_unsaturated(f: &mut Filtration, m: u32, from: u32) -> Option<(u32, usize, usize)> {
    let top = f.context().top_degree();
    (from..=top).find_map(|d| {
        let (r, n) = (f.rank(d, m - 1), f.dim(d));
        (r != n).then_some((d, r, n))
    })
}

fn saturation_report(claim: Claim, k: u32, l: u32, m: u32, f: &mut Filtration, from: i64) -> ConjectureReport {
    let from = from.max(0) as u32;
    match first_unsaturated(f, m, from) {
        None => ConjectureReport::holds(claim, k, l, Some(m)),
        Some((d, rank, dim)) => ConjectureReport::fails(
            claim,
            k,
            l,
            Some(m),
            json!({ "degree": d, "rank": rank, "dim": dim, "gap": dim - rank, "from_degree": from }),
        ),
    }
}

/// `R^{k,l,m-1}_d = R^{k,l}_d` for every `d >= kl - m^2 + m + 1`.
pub fn check_conj2(k: u32, l: u32, m: u32) -> ConjectureReport {
    report::timed(|| match check_m(Claim::Conj2, k, l, m, 1) {
        Err(r) => r,
        Ok(mut f) => {
            let from = (k * l) as i64 - (m * m) as i64 + m as i64 + 1;
            saturation_report(Claim::Conj2, k, l, m, &mut f, from)
        }
    })
}

/// Membership of `e_m e_1^power` in `R^{k,l,m-1}`, with the certificate
/// kept in the witness when it holds.
fn membership_report(claim: Claim, k: u32, l: u32, m: u32, f: &mut Filtration, power: u32) -> ConjectureReport {
    let mut parts = vec![m];
    parts.extend(std::iter::repeat_n(1, power as usize));
    let lambda = Partition::from_unsorted(parts);
    let d = lambda.weight();
    let target = f.e_monomial(&lambda);
    if d > f.context().top_degree() || target.is_zero() {
        return ConjectureReport::holds(claim, k, l, Some(m))
            .with_witness(json!({ "degree": d, "target_is_zero": true, "certificate": [] }));
    }
    let membership = f.membership(&target, d, m - 1).expect("target is homogeneous of degree d");
    if membership.is_member() {
        ConjectureReport::holds(claim, k, l, Some(m))
            .with_witness(json!({ "degree": d, "certificate": membership.certificate_json() }))
    } else {
        ConjectureReport::fails(
            claim,
            k,
            l,
            Some(m),
            json!({
                "degree": d,
                "target": target,
                "rank": f.rank(d, m - 1),
                "dim": f.dim(d),
            }),
        )
    }
}

/// `e_m e_1^{kl-m^2+1}` lies in `R^{k,l,m-1}`.
pub fn check_conj3(k: u32, l: u32, m: u32) -> ConjectureReport {
    report::timed(|| {
        let mut f = match check_m(Claim::Conj3, k, l, m, 1) {
            Err(r) => return r,
            Ok(f) => f,
        };
        let power = (k * l) as i64 - (m * m) as i64 + 1;
        if power < 0 {
            return ConjectureReport::not_applicable(
                Claim::Conj3,
                k,
                l,
                Some(m),
                format!("exponent kl - m^2 + 1 = {power} is negative"),
            );
        }
        membership_report(Claim::Conj3, k, l, m, &mut f, power as u32)
    })
}

fn conj4_preconditions(claim: Claim, k: u32, l: u32, m: u32) -> std::result::Result<Filtration, ConjectureReport> {
    let f = check_m(claim, k, l, m, 3)?;
    if k * l < 2 * m {
        return Err(ConjectureReport::not_applicable(
            claim,
            k,
            l,
            Some(m),
            format!("need kl >= 2m, got kl = {}, m = {m}", k * l),
        ));
    }
    Ok(f)
}

/// `e_m e_1^{kl-2m}` lies in `R^{k,l,m-1}`.
pub fn check_conj4(k: u32, l: u32, m: u32) -> ConjectureReport {
    report::timed(|| match conj4_preconditions(Claim::Conj4, k, l, m) {
        Err(r) => r,
        Ok(mut f) => membership_report(Claim::Conj4, k, l, m, &mut f, k * l - 2 * m),
    })
}

/// Saturation `R^{k,l,m-1}_d = R^{k,l}_d` for all `d >= kl - m`, cross-checked
/// against [`check_conj4`].
///
/// By Hard Lefschetz, `R_{kl-m} = e_1^{kl-2m} R_m`, and `R_m` is spanned by
/// the `e_lambda` with `lambda |- m`, all of which lie in `R^{m-1}` except
/// `e_m`; so membership of `e_m e_1^{kl-2m}` is saturation from degree
/// `kl - m` upward. Saturation from `kl - 2m` (see
/// [`check_conj4prime_literal`]) already fails at `(3, 3, 3)`.
pub fn check_conj4prime(k: u32, l: u32, m: u32) -> ConjectureReport {
    report::timed(|| {
        let mut f = match conj4_preconditions(Claim::Conj4Prime, k, l, m) {
            Err(r) => return r,
            Ok(f) => f,
        };
        let from = (k * l - m) as i64;
        let saturation = saturation_report(Claim::Conj4Prime, k, l, m, &mut f, from);
        let membership = check_conj4(k, l, m);
        if saturation.verdict == membership.verdict {
            saturation
        } else {
            ConjectureReport::fails(
                Claim::Conj4Prime,
                k,
                l,
                Some(m),
                json!({
                    "equivalence_violated": true,
                    "saturation": saturation.verdict,
                    "saturation_witness": saturation.witness,
                    "conj4": membership.verdict,
                    "conj4_witness": membership.witness,
                }),
            )
        }
    })
}

/// Saturation from degree `kl - 2m`, the threshold as literally printed.
pub fn check_conj4prime_literal(k: u32, l: u32, m: u32) -> ConjectureReport {
    report::timed(|| match conj4_preconditions(Claim::Conj4Prime, k, l, m) {
        Err(r) => r,
        Ok(mut f) => saturation_report(Claim::Conj4Prime, k, l, m, &mut f, (k * l - 2 * m) as i64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::grassmannian_hilb;
    use crate::report::Verdict;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn hilbert_series_examples() {
        assert_eq!(subalgebra_hilb(3, 3, 0).unwrap(), QPoly::one());
        assert_eq!(subalgebra_hilb(2, 2, 1).unwrap(), poly(&[1, 1, 1, 1, 1]));
        assert!(subalgebra_hilb(2, 2, 3).is_err());
        for (k, l) in [(1, 3), (2, 2), (2, 3), (3, 3), (3, 2)] {
            assert_eq!(subalgebra_hilb(k, l, k).unwrap(), grassmannian_hilb(k, l));
        }
    }

    #[test]
    fn monotone_in_m() {
        let (k, l) = (3, 4);
        let series: Vec<_> = (0..=k).map(|m| subalgebra_hilb(k, l, m).unwrap()).collect();
        for w in series.windows(2) {
            for d in 0..=k * l {
                assert!(w[0].coeff(d) <= w[1].coeff(d));
            }
        }
    }

    #[test]
    fn conjecture_one_boundary_and_interior() {
        for (k, l) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            assert!(check_conj1(k, l, 1).is_holds());
            assert!(check_conj1(k, l, k).is_holds());
        }
        assert!(check_conj1(3, 3, 2).is_holds());
        assert_eq!(check_conj1(2, 2, 3).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn conjecture_two_examples() {
        assert!(check_conj2(4, 5, 1).is_holds());
        assert!(check_conj2(2, 2, 2).is_holds());
        assert!(check_conj2(3, 3, 2).is_holds());
        assert_eq!(check_conj2(2, 2, 0).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn conjecture_three_examples() {
        let r = check_conj3(2, 2, 2);
        assert!(r.is_holds());
        assert_eq!(r.witness.as_ref().unwrap()["degree"], 3);
        assert!(check_conj3(3, 3, 3).is_holds());
        assert!(check_conj3(2, 3, 1).is_holds());
        // exponent kl - m^2 + 1 < 0
        assert_eq!(check_conj3(3, 2, 3).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn conjecture_three_certificate_reproduces_target() {
        let mut f = Filtration::new(3, 3).unwrap();
        let target = f.e_monomial(&Partition::new(vec![3, 1]).unwrap());
        let Membership::Member(cert) = f.membership(&target, 4, 2).unwrap() else {
            panic!("e_3 e_1 should lie in R^{{3,3,2}}");
        };
        let mut sum = RingElement::zero(f.context());
        for (lam, c) in &cert {
            sum = &sum + &f.e_monomial(lam).scale(c);
        }
        assert_eq!(sum, target);
    }

    #[test]
    fn conjecture_four_and_saturation_agree() {
        for (k, l, m) in [(3, 3, 3), (3, 4, 3), (4, 4, 3), (4, 4, 4), (3, 5, 3)] {
            let a = check_conj4(k, l, m);
            let b = check_conj4prime(k, l, m);
            assert!(a.is_holds(), "{k} {l} {m}");
            assert_eq!(a.verdict, b.verdict);
        }
        assert_eq!(check_conj4(2, 5, 2).verdict, Verdict::NotApplicable);
        assert_eq!(check_conj4prime(3, 1, 3).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn literal_threshold_fails_in_three_by_three() {
        // R_3 of the 3x3 box has dimension 3, but e_1^3 and e_2 e_1 span only 2
        let r = check_conj4prime_literal(3, 3, 3);
        assert!(r.is_fails());
        let w = r.witness.unwrap();
        assert_eq!(w["degree"], 3);
        assert_eq!(w["rank"], 2);
        assert_eq!(w["dim"], 3);
    }

    #[test]
    fn spanning_ranks_agree_across_paths() {
        for (k, l) in [(2, 2), (2, 3), (3, 3)] {
            for m in 0..=k {
                assert!(spanning_rank_oracle(k, l, m).unwrap());
            }
        }
    }

    #[test]
    fn rank_is_bounded_by_dimension() {
        let mut f = Filtration::new(3, 4).unwrap();
        for d in 0..=12 {
            for m in 0..=3 {
                assert!(f.rank(d, m) <= f.dim(d));
            }
        }
        assert_eq!(f.rank(13, 3), 0);
    }
}
