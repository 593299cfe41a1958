//! Oracle cross-checks at desk scale, each reduced to pass or fail.

use num_bigint::BigInt;

use crate::endo;
use crate::error::Result;
use crate::filtration;
use crate::lefschetz;
use crate::partitions::{enumerate_in_box, partitions_of, Partition};
use crate::qseries;
use crate::schur_ring::jacobi_trudi::multiply_via_jacobi_trudi;
use crate::schur_ring::BoxContext;
use crate::tableaux::{brute_force_syt, hook_length_f};
use crate::{Rational, RingElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestResult {
    pub name: &'static str,
    pub passed: bool,
    /// Error text when the check could not run.
    pub detail: Option<String>,
}

type Check = fn() -> Result<bool>;

const CHECKS: &[(&str, Check)] = &[
    ("qbinomial counts box partitions", qbinomial_counts),
    ("prop5 identity and bijection", prop5),
    ("f-recurrence form of the predicted series", rhs_via_f),
    ("hook length vs brute force", hooks),
    ("LR product vs Jacobi-Trudi", lr_vs_jt),
    ("Poincare pairing", pairing),
    ("top power of e_1", top_power),
    ("subalgebra ranks via e and h sides", spanning_ranks),
    ("Lefschetz maps invertible", hard_lefschetz),
    ("pairing matrix vs its dual reading", section4_dual),
    ("gamma via complements", gammas),
    ("binomial expansion of phi(e_2)^r", binomial_expansion),
];

pub fn run() -> Vec<SelftestResult> {
    CHECKS
        .iter()
        .map(|(name, check)| match check() {
            Ok(passed) => SelftestResult {
                name,
                passed,
                detail: None,
            },
            Err(e) => SelftestResult {
                name,
                passed: false,
                detail: Some(e.to_string()),
            },
        })
        .collect()
}

fn qbinomial_counts() -> Result<bool> {
    for k in 1..=4 {
        for l in 1..=4 {
            let h = qseries::grassmannian_hilb(k, l);
            let rect = crate::Rectangle::new(k, l)?;
            for d in 0..=k * l {
                if h.coeff(d) != BigInt::from(enumerate_in_box(rect, Some(d)).len()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn prop5() -> Result<bool> {
    for k in 1..=4 {
        for l in 1..=4 {
            if !qseries::prop5_check(k, l).is_holds() || qseries::prop5_bijection_check(k, l)?.is_err() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn rhs_via_f() -> Result<bool> {
    for l in 0..=5 {
        for k in 0..=l {
            for m in 0..=k {
                if k > 0 && qseries::conj1_rhs(k, l, m)? != qseries::conj1_rhs_via_f(k, l, m)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn hooks() -> Result<bool> {
    for n in 0..=6 {
        for lam in partitions_of(n, n, n as usize) {
            if hook_length_f(&lam) != brute_force_syt(&lam)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn lr_vs_jt() -> Result<bool> {
    let ctx = BoxContext::new(3, 3)?;
    let shapes: Vec<Partition> = (0..=3).flat_map(|n| partitions_of(n, 3, 3)).collect();
    for a in &shapes {
        for b in &shapes {
            let x = RingElement::schur(ctx, a.clone())?;
            let y = RingElement::schur(ctx, b.clone())?;
            if x.multiply(&y)? != multiply_via_jacobi_trudi(&x, &y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn pairing() -> Result<bool> {
    let ctx = BoxContext::new(2, 3)?;
    let all = enumerate_in_box(ctx.rect(), None);
    for a in &all {
        for b in &all {
            let c = RingElement::schur(ctx, a.clone())?
                .multiply(&RingElement::schur(ctx, b.clone())?)?
                .top_coefficient();
            let want = if *b == a.complement_in(ctx.rect())? { 1 } else { 0 };
            if c != Rational::from_integer(BigInt::from(want)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn top_power() -> Result<bool> {
    for (k, l) in [(1, 4), (2, 2), (2, 3), (3, 3)] {
        let ctx = BoxContext::new(k, l)?;
        let p = RingElement::one(ctx).times_e1_pow(k * l);
        let f = Rational::from_integer(BigInt::from(hook_length_f(&ctx.top())));
        if p != RingElement::schur(ctx, ctx.top())?.scale(&f) || !p.pieri_e(1).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn spanning_ranks() -> Result<bool> {
    for (k, l) in [(2, 3), (3, 3)] {
        for m in 0..=k {
            if !filtration::spanning_rank_oracle(k, l, m)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn hard_lefschetz() -> Result<bool> {
    Ok([(2, 2), (2, 3), (3, 3)].iter().all(|&(k, l)| lefschetz::check_hard_lefschetz(k, l).is_holds()))
}

fn section4_dual() -> Result<bool> {
    for (k, l, m) in [(2, 2, 2), (3, 3, 2), (3, 3, 3)] {
        if lefschetz::section4_matrix(k, l, m)? != lefschetz::section4_matrix_via_duality(k, l, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn gammas() -> Result<bool> {
    for (k, l) in [(2, 3), (3, 3)] {
        let table = endo::GammaTable::new(k, l)?;
        for r in 0..=3u32.min(k * l / 2) {
            if Some(&endo::gamma_via_complements(k, l, r)?) != table.get(r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn binomial_expansion() -> Result<bool> {
    endo::binomial_expansion_holds(2, 3)
}
