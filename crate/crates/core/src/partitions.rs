//! Integer partitions and the `k x l` box.
//!
//! A [`Partition`] is stored as its weakly decreasing sequence of positive
//! parts. The derived `Ord` is lexicographic on that sequence (a proper
//! prefix sorts first), and this is the canonical order used to index every
//! matrix row and column in the crate:
//!
//! ```text
//! () < (1) < (1,1) < (2) < (2,1) < (2,2)
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// `(cols^rows)`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition(vec![cols; rows as usize])
        }
    }

    /// Sorts arbitrary nonnegative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_in(&self, rect: Rectangle) -> bool {
        self.len() <= rect.k as usize && self.first() <= rect.l
    }

    /// Containment of Ferrers diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// Complement inside the box, rotated by 180 degrees.
    pub fn complement_in(&self, rect: Rectangle) -> Result<Partition> {
        self.require_in(rect)?;
        let k = rect.k as usize;
        let parts = (0..k).map(|i| rect.l - self.part(k - 1 - i)).collect();
        Partition::new(parts)
    }

    /// Side of the largest square inside the diagram.
    pub fn durfee(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count() as u32
    }

    /// Dominance order: `self` dominates `other` (same weight assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
    }

    pub(crate) fn require_in(&self, rect: Rectangle) -> Result<()> {
        if self.fits_in(rect) {
            Ok(())
        } else {
            Err(Error::NotInBox {
                partition: self.clone(),
                rect,
            })
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The `k x l` box: at most `k` rows, at most `l` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rectangle {
    pub k: u32,
    pub l: u32,
}

impl Rectangle {
    pub fn new(k: u32, l: u32) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::Precondition(format!(
                "box dimensions must be positive, got {k}x{l}"
            )));
        }
        Ok(Rectangle { k, l })
    }

    pub fn area(&self) -> u32 {
        self.k * self.l
    }

    /// The full box `(l^k)`.
    pub fn top(&self) -> Partition {
        Partition::rectangle(self.k, self.l)
    }

    pub fn transpose(&self) -> Rectangle {
        Rectangle {
            k: self.l,
            l: self.k,
        }
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.k, self.l)
    }
}

/// All partitions of `n` with parts at most `max_part` and at most `max_len`
/// parts, in canonical order.
pub fn partitions_of(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in 1..=max_part.min(rem) {
            cur.push(p);
            go(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions inside the box, optionally restricted to one weight, in
/// canonical (lexicographic) order.
pub fn enumerate_in_box(rect: Rectangle, weight: Option<u32>) -> Vec<Partition> {
    match weight {
        Some(d) => partitions_of(d, rect.l, rect.k as usize),
        None => {
            let mut all: Vec<Partition> = (0..=rect.area())
                .flat_map(|d| partitions_of(d, rect.l, rect.k as usize))
                .collect();
            all.sort();
            all
        }
    }
}

/// Partitions of `m` inside the box; the index set `P_{k,l}(m)`.
pub fn box_partitions_of(rect: Rectangle, m: u32) -> Vec<Partition> {
    enumerate_in_box(rect, Some(m))
}

/// Every `mu` with `mu / lambda` a vertical strip of `size` cells.
///
/// With `bound = Some(rect)` shapes leaving the box are never produced.
pub fn vertical_strips(lambda: &Partition, size: u32, bound: Option<Rectangle>) -> Vec<Partition> {
    let max_rows = match bound {
        Some(r) => r.k as usize,
        None => lambda.len() + size as usize,
    };
    let max_cols = bound.map_or(u32::MAX, |r| r.l);
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(max_rows);
    fn go(
        lambda: &Partition,
        row: usize,
        rem: u32,
        max_rows: usize,
        max_cols: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            let mut parts = cur.clone();
            parts.extend((row..lambda.len()).map(|r| lambda.part(r)));
            out.push(Partition::new(parts).expect("strip keeps shape"));
            return;
        }
        if row >= max_rows {
            return;
        }
        let base = lambda.part(row);
        // cells left in rows below must be able to absorb `rem`
        if (max_rows - row) < rem as usize {
            return;
        }
        let above = if row == 0 { u32::MAX } else { cur[row - 1] };
        if base < above && base < max_cols {
            cur.push(base + 1);
            go(lambda, row + 1, rem - 1, max_rows, max_cols, cur, out);
            cur.pop();
        }
        if base > 0 || row < lambda.len() {
            cur.push(base);
            go(lambda, row + 1, rem, max_rows, max_cols, cur, out);
            cur.pop();
        }
    }
    go(lambda, 0, size, max_rows, max_cols, &mut cur, &mut out);
    out.sort();
    out
}

/// Every `mu` with `mu / lambda` a horizontal strip of `size` cells.
pub fn horizontal_strips(
    lambda: &Partition,
    size: u32,
    bound: Option<Rectangle>,
) -> Vec<Partition> {
    let max_rows = match bound {
        Some(r) => r.k as usize,
        None => lambda.len() + 1,
    };
    let max_cols = bound.map_or(u32::MAX, |r| r.l);
    let rows = max_rows.min(lambda.len() + 1);
    let mut out = Vec::new();
    fn go(
        lambda: &Partition,
        row: usize,
        rows: usize,
        rem: u32,
        max_cols: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).expect("strip keeps shape"));
            }
            return;
        }
        let base = lambda.part(row);
        let cap = if row == 0 {
            max_cols
        } else {
            lambda.part(row - 1).min(max_cols)
        };
        if cap < base {
            return;
        }
        for add in 0..=rem.min(cap - base) {
            cur.push(base + add);
            go(lambda, row + 1, rows, rem - add, max_cols, cur, out);
            cur.pop();
        }
    }
    go(lambda, 0, rows, size, max_cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The four pieces of a nonempty partition used to prove the `m = k`
/// Hilbert series identity: a `j x (l-i+1)` rectangle, a column of length
/// `i` above it, `c` inside a `j x (i-1)` box and `d` inside an `i x (l-i)`
/// box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Prop5Decomposition {
    pub i: u32,
    pub j: u32,
    pub c: Partition,
    pub d: Partition,
}

impl Prop5Decomposition {
    /// `i + j(l-i+1) + |c| + |d|`.
    pub fn weight(&self, rect: Rectangle) -> u32 {
        self.i + self.j * (rect.l - self.i + 1) + self.c.weight() + self.d.weight()
    }

    fn validate(&self, rect: Rectangle) -> Result<()> {
        let bad = |msg: String| Err(Error::Precondition(msg));
        if self.i < 1 || self.i > rect.k || self.i > rect.l {
            return bad(format!("i = {} outside 1..=min(k, l)", self.i));
        }
        if self.j > rect.k - self.i {
            return bad(format!("j = {} exceeds k - i", self.j));
        }
        if !self.c.fits_in(Rectangle { k: self.j, l: self.i - 1 }) {
            return bad(format!("c = {} not inside {}x{}", self.c, self.j, self.i - 1));
        }
        if !self.d.fits_in(Rectangle { k: self.i, l: rect.l - self.i }) {
            return bad(format!("d = {} not inside {}x{}", self.d, self.i, rect.l - self.i));
        }
        Ok(())
    }
}

/// Splits a nonempty `lambda` in the box into the pieces of
/// [`Prop5Decomposition`].
///
/// With `s` parts, `i - 1` is the Durfee size of the complement of
/// `(lambda_1, ..., lambda_{s-1})` in an `(s-1) x l` rectangle, and
/// `j = s - i`. Rows `1..=j` hold the rectangle plus `c`; rows `j+1..=s`
/// hold the column plus `d`.
pub fn prop5_decompose(lambda: &Partition, rect: Rectangle) -> Result<Prop5Decomposition> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    lambda.require_in(rect)?;
    let s = lambda.len();
    let head = Partition(lambda.0[..s - 1].to_vec());
    let bar = head.complement_in(Rectangle {
        k: (s - 1) as u32,
        l: rect.l,
    })?;
    let i = bar.durfee() + 1;
    let j = s as u32 - i;
    let width = rect.l - i + 1;
    let c = Partition::new(lambda.0[..j as usize].iter().map(|p| p - width).collect())?;
    let d = Partition::new(lambda.0[j as usize..].iter().map(|p| p - 1).collect())?;
    Ok(Prop5Decomposition { i, j, c, d })
}

/// Inverse of [`prop5_decompose`].
pub fn prop5_compose(dec: &Prop5Decomposition, rect: Rectangle) -> Result<Partition> {
    dec.validate(rect)?;
    let width = rect.l - dec.i + 1;
    let mut parts: Vec<u32> = (0..dec.j as usize).map(|t| width + dec.c.part(t)).collect();
    parts.extend((0..dec.i as usize).map(|t| 1 + dec.d.part(t)));
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rect(k: u32, l: u32) -> Rectangle {
        Rectangle::new(k, l).unwrap()
    }

    fn binomial(n: u64, r: u64) -> u64 {
        (0..r).fold(1, |acc, t| acc * (n - t) / (t + 1))
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn enumerate_small_boxes() {
        assert_eq!(enumerate_in_box(rect(1, 1), None), vec![p(&[]), p(&[1])]);
        let b22 = enumerate_in_box(rect(2, 2), None);
        let mut want = vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2])];
        want.sort();
        assert_eq!(b22, want);
        assert_eq!(enumerate_in_box(rect(2, 3), None).len(), 10);
    }

    #[test]
    fn enumerate_is_sorted_and_counted() {
        for k in 1..=5 {
            for l in 1..=5 {
                let all = enumerate_in_box(rect(k, l), None);
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(all.len() as u64, binomial((k + l) as u64, k as u64));
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn complement_examples() {
        let b = rect(2, 2);
        assert_eq!(p(&[]).complement_in(b).unwrap(), p(&[2, 2]));
        assert_eq!(p(&[1]).complement_in(b).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[2, 2]).complement_in(b).unwrap(), p(&[]));
        assert!(p(&[3]).complement_in(b).is_err());
    }

    #[test]
    fn complement_reverses_containment() {
        let b = rect(3, 3);
        let all = enumerate_in_box(b, None);
        for x in &all {
            for y in &all {
                if x.contains(y) {
                    let (xc, yc) = (x.complement_in(b).unwrap(), y.complement_in(b).unwrap());
                    assert!(yc.contains(&xc));
                }
            }
        }
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p(&[]).durfee(), 0);
        assert_eq!(p(&[2, 2]).durfee(), 2);
        assert_eq!(p(&[3, 1]).durfee(), 1);
    }

    #[test]
    fn dominance() {
        assert!(p(&[2, 1]).dominates(&p(&[1, 1, 1])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
    }

    #[test]
    fn prop5_examples() {
        let b = rect(3, 4);
        let dec = prop5_decompose(&p(&[1]), b).unwrap();
        assert_eq!(dec, Prop5Decomposition { i: 1, j: 0, c: p(&[]), d: p(&[]) });
        assert_eq!(prop5_compose(&dec, b).unwrap(), p(&[1]));

        let dec = prop5_decompose(&p(&[4]), b).unwrap();
        assert_eq!(dec, Prop5Decomposition { i: 1, j: 0, c: p(&[]), d: p(&[3]) });

        let full = b.top();
        let dec = prop5_decompose(&full, b).unwrap();
        assert_eq!(dec, Prop5Decomposition { i: 1, j: 2, c: p(&[]), d: p(&[3]) });
        assert_eq!(dec.weight(b), 1 + 2 * 4 + 3);
        assert_eq!(prop5_compose(&dec, b).unwrap(), full);
    }

    #[test]
    fn prop5_rejects_empty_and_bad_pieces() {
        assert!(matches!(
            prop5_decompose(&p(&[]), rect(2, 2)),
            Err(Error::EmptyPartition)
        ));
        let bad = Prop5Decomposition { i: 1, j: 0, c: p(&[]), d: p(&[5]) };
        assert!(prop5_compose(&bad, rect(2, 2)).is_err());
    }

    #[test]
    fn prop5_roundtrip_3x3() {
        let b = rect(3, 3);
        let nonempty: Vec<_> = enumerate_in_box(b, None).into_iter().filter(|x| !x.is_empty()).collect();
        assert_eq!(nonempty.len(), 19);
        for lam in nonempty {
            let dec = prop5_decompose(&lam, b).unwrap();
            assert_eq!(dec.weight(b), lam.weight());
            assert_eq!(prop5_compose(&dec, b).unwrap(), lam);
        }
    }

    #[test]
    fn strips_small() {
        let b = rect(2, 2);
        assert_eq!(vertical_strips(&p(&[]), 1, Some(b)), vec![p(&[1])]);
        assert_eq!(vertical_strips(&p(&[1]), 1, Some(b)), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(vertical_strips(&p(&[2, 1]), 1, Some(b)), vec![p(&[2, 2])]);
        assert_eq!(
            vertical_strips(&p(&[2, 1]), 1, None),
            vec![p(&[2, 1, 1]), p(&[2, 2]), p(&[3, 1])]
        );
        assert_eq!(horizontal_strips(&p(&[2]), 2, Some(b)), vec![p(&[2, 2])]);
        assert_eq!(horizontal_strips(&p(&[2, 1]), 2, Some(b)), Vec::<Partition>::new());
        assert_eq!(horizontal_strips(&p(&[2]), 2, None), vec![p(&[2, 2]), p(&[3, 1]), p(&[4])]);
        assert_eq!(horizontal_strips(&p(&[1]), 1, Some(b)), vec![p(&[1, 1]), p(&[2])]);
    }

    #[test]
    fn strips_are_conjugate() {
        for n in 0..=5 {
            for lam in partitions_of(n, n, n as usize) {
                for s in 0..=3 {
                    let mut v: Vec<_> = vertical_strips(&lam, s, None)
                        .into_iter()
                        .map(|m| m.conjugate())
                        .collect();
                    v.sort();
                    assert_eq!(v, horizontal_strips(&lam.conjugate(), s, None));
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(serde_json::to_string(&p(&[])).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[2,2,1]").unwrap();
        assert_eq!(back, p(&[2, 2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
