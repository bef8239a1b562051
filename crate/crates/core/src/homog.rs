//! The homogenized monoid `S ⊂ ℕ²` spanned by `(a_i, d - a_i)`, `i = 0..n`.
//!
//! A point `(y1, y2)` lies in `S` iff `m = (y1 + y2) / d` is integral and `y1`
//! is a sum of at most `m` terms of the sequence (the missing summands are the
//! zero vector's first coordinate `a_0 = 0`). So membership reduces to the
//! minimum number of terms needed to write `y1`, which is tabulated lazily.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numsg::{NumericalSemigroup, Sequence};

const UNREACHABLE: u32 = u32::MAX;

/// A point of `ℕ²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point2(pub u64, pub u64);

impl Point2 {
    pub fn total(&self) -> u64 {
        self.0 + self.1
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// `(y1 + y2) / d`, the rank of a point in the projective Apery poset.
pub fn rank2(y: Point2, d: u64) -> Result<u64> {
    if d == 0 || !y.total().is_multiple_of(d) {
        return Err(Error::NotGradedPoint(y.0, y.1, d));
    }
    Ok(y.total() / d)
}

#[derive(Debug)]
pub struct HomogeneousMonoid {
    base: Sequence,
    min_terms: RwLock<Vec<u32>>,
}

impl Clone for HomogeneousMonoid {
    fn clone(&self) -> Self {
        Self {
            base: self.base.clone(),
            min_terms: RwLock::new(self.min_terms.read().unwrap().clone()),
        }
    }
}

impl HomogeneousMonoid {
    pub fn new(base: &Sequence) -> Self {
        let initial = (base.d() * (base.len() as u64 + 2)).max(64);
        let monoid = Self {
            base: base.clone(),
            min_terms: RwLock::new(Vec::new()),
        };
        monoid.ensure(initial);
        monoid
    }

    pub fn base(&self) -> &Sequence {
        &self.base
    }

    pub fn d(&self) -> u64 {
        self.base.d()
    }

    /// `a_0 = (0, d), a_1 = (a_1, d - a_1), ..., a_n = (d, 0)`.
    pub fn vectors(&self) -> Vec<Point2> {
        let d = self.d();
        std::iter::once(0)
            .chain(self.base.terms().iter().copied())
            .map(|a| Point2(a, d - a))
            .collect()
    }

    fn ensure(&self, upto: u64) {
        if (upto as usize) < self.min_terms.read().unwrap().len() {
            return;
        }
        let mut table = self.min_terms.write().unwrap();
        let old = table.len();
        if (upto as usize) < old {
            return;
        }
        let new_len = (upto as usize + 1).max(old * 2);
        table.resize(new_len, UNREACHABLE);
        if old == 0 {
            table[0] = 0;
        }
        let terms = self.base.terms();
        for x in old.max(1)..new_len {
            let mut best = UNREACHABLE;
            for &a in terms {
                let a = a as usize;
                if a > x {
                    break;
                }
                let prev = table[x - a];
                if prev != UNREACHABLE && prev + 1 < best {
                    best = prev + 1;
                }
            }
            table[x] = best;
        }
    }

    /// Minimum number of sequence terms summing to `y`, `None` if `y ∉ S_1`.
    pub fn min_terms(&self, y: u64) -> Option<u32> {
        self.ensure(y);
        match self.min_terms.read().unwrap()[y as usize] {
            UNREACHABLE => None,
            m => Some(m),
        }
    }

    /// Snapshot of `min_terms` on `0..=upto`, `None` marking non-members of `S_1`.
    pub fn min_terms_table(&self, upto: u64) -> Vec<Option<u32>> {
        self.ensure(upto);
        self.min_terms.read().unwrap()[..=upto as usize]
            .iter()
            .map(|&m| (m != UNREACHABLE).then_some(m))
            .collect()
    }

    pub fn member2(&self, y: Point2) -> bool {
        let d = self.d();
        if !y.total().is_multiple_of(d) {
            return false;
        }
        let m = y.total() / d;
        matches!(self.min_terms(y.0), Some(k) if k as u64 <= m)
    }

    /// `y - v` for a generator vector, if it stays in `ℕ²`.
    fn minus(y: Point2, v: Point2) -> Option<Point2> {
        Some(Point2(y.0.checked_sub(v.0)?, y.1.checked_sub(v.1)?))
    }

    pub fn in_apery(&self, y: Point2) -> bool {
        let d = self.d();
        self.member2(y)
            && !Self::minus(y, Point2(0, d)).is_some_and(|z| self.member2(z))
            && !Self::minus(y, Point2(d, 0)).is_some_and(|z| self.member2(z))
    }

    /// The projective Apery set `{y ∈ S : y - a_0 ∉ S, y - a_n ∉ S}`.
    ///
    /// Every element has degree `min_terms(y1)` and satisfies
    /// `min_terms(y1 - d) >= min_terms(y1)`. Once `min_terms(y) = min_terms(y - d) + 1`
    /// holds on `d` consecutive values above the Frobenius number, it holds
    /// for all larger values, so the scan can stop there with a complete answer.
    pub fn apery_projective(&self, max_degree: u64) -> Result<ProjectiveAperySet> {
        let d = self.d();
        let s1 = NumericalSemigroup::new(&self.base)?;
        let f = s1.frobenius().max(0) as u64;
        let limit = max_degree.saturating_mul(d);
        let mut top = f + 2 * d;
        loop {
            if top > limit {
                return Err(Error::BoundExhausted(format!(
                    "no periodicity certificate for AP_S below degree {max_degree}"
                )));
            }
            self.ensure(top);
            if self.periodic_window(top) {
                break;
            }
            top = top.saturating_mul(2);
        }
        let mut elements = BTreeSet::new();
        for y1 in 0..=top {
            let Some(m) = self.min_terms(y1) else { continue };
            let below = if y1 >= d { self.min_terms(y1 - d) } else { None };
            if below.is_none_or(|k| k >= m) {
                elements.insert(Point2(y1, m as u64 * d - y1));
            }
        }
        Ok(ProjectiveAperySet {
            elements,
            exhaustive_degree_bound: top / d,
        })
    }

    fn periodic_window(&self, top: u64) -> bool {
        let d = self.d();
        let table = self.min_terms.read().unwrap();
        (top + 1 - d..=top).all(|y| {
            let here = table[y as usize];
            let below = table[(y - d) as usize];
            here != UNREACHABLE && below != UNREACHABLE && here == below + 1
        })
    }

    /// Reference enumeration by total degree using only `member2`: for
    /// `m = 0..=max_degree` collect every degree-`m` point of `S` failing both
    /// subtraction tests.
    pub fn apery_by_degree_scan(&self, max_degree: u64) -> BTreeSet<Point2> {
        let d = self.d();
        let mut out = BTreeSet::new();
        for m in 0..=max_degree {
            for y1 in 0..=m * d {
                let y = Point2(y1, m * d - y1);
                if self.in_apery(y) {
                    out.insert(y);
                }
            }
        }
        out
    }

    /// `{(0,0)} ∪ {(r_i, t_{d-i}) : 1 ≤ i < d}` from the Apery sets of both charts.
    pub fn residue_pairs(&self) -> Result<Vec<Point2>> {
        let d = self.d();
        let ap1 = NumericalSemigroup::new(&self.base)?.apery(d)?;
        let ap2 = NumericalSemigroup::new(&self.base.dual())?.apery(d)?;
        let mut out = vec![Point2(0, 0)];
        out.extend((1..d).map(|i| Point2(ap1.by_residue(i), ap2.by_residue(d - i))));
        Ok(out)
    }

    /// Cohen-Macaulay test: every residue pair `(r_i, t_{d-i})` lies in `S`.
    pub fn cm_by_residue_pairs(&self) -> Result<bool> {
        Ok(self.residue_pairs()?.into_iter().all(|p| self.member2(p)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveAperySet {
    pub elements: BTreeSet<Point2>,
    /// Every point of total degree up to this bound was examined directly.
    pub exhaustive_degree_bound: u64,
}

impl ProjectiveAperySet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}
