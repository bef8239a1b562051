//! Graded Betti numbers of `k[C_1]` and `k[C]` from the reduced homology of
//! squarefree divisor complexes: `β_{i,b} = dim H̃_{i-1}(Δ_b)`.

mod complex;
mod field;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use complex::DivisorComplex;
pub use field::Field;

use crate::error::{Error, Result};
use crate::homog::HomogeneousMonoid;
use crate::numsg::{NumericalSemigroup, Sequence};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub projective: bool,
    /// `(i, b) -> β_{i,b}` with `b = [s]` (affine) or `b = [y1, y2]` (projective).
    pub graded: BTreeMap<(usize, Vec<u64>), u64>,
    pub totals: Vec<u64>,
    pub pd: usize,
    pub cm_type: u64,
    /// `max{m - i : β_{i,m} ≠ 0}` in the standard grading; projective tables only.
    pub regularity: Option<u64>,
    pub field_char: u64,
    /// Largest degree examined (`s` for affine, total degree `m` for projective).
    pub degree_bound: u64,
}

impl BettiTable {
    fn assemble(
        projective: bool,
        d: u64,
        graded: BTreeMap<(usize, Vec<u64>), u64>,
        field: Field,
        degree_bound: u64,
    ) -> Self {
        let pd = graded.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let mut totals = vec![0u64; pd + 1];
        for ((i, _), v) in &graded {
            totals[*i] += v;
        }
        let mut table = Self {
            projective,
            graded,
            totals,
            pd,
            cm_type: 0,
            regularity: None,
            field_char: field.characteristic(),
            degree_bound,
        };
        table.cm_type = table.totals[pd];
        if projective {
            table.regularity = table
                .graded
                .keys()
                .map(|(i, b)| (b[0] + b[1]) / d - *i as u64)
                .max();
        }
        table
    }

    /// `β_{i,m}` keyed by the standard degree: `s` (affine) or `(y1 + y2) / d` (projective).
    pub fn by_degree(&self, d: u64) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, b), v) in &self.graded {
            let key = if self.projective { (b[0] + b[1]) / d } else { b[0] };
            *out.entry((*i, key)).or_insert(0) += v;
        }
        out
    }

    /// `Σ (-1)^i β_{i,m} t^m` for `m ≤ upto`.
    pub fn k_polynomial(&self, d: u64, upto: u64) -> Vec<i64> {
        let mut out = vec![0i64; upto as usize + 1];
        for ((i, m), v) in self.by_degree(d) {
            if m <= upto {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out[m as usize] += sign * v as i64;
            }
        }
        out
    }
}

fn semigroup(seq: &Sequence) -> Result<NumericalSemigroup> {
    if seq.len() < 2 && seq.d() != 1 {
        return Err(Error::InvalidSequence("at least two terms are needed".into()));
    }
    NumericalSemigroup::new(seq)
}

/// Affine Betti numbers over `k[x_1..x_n]` with one variable per presented
/// term. Beyond `F + Σ a_i` every divisor complex is a full simplex.
pub fn betti_affine(seq: &Sequence, field: Field) -> Result<BettiTable> {
    let s = semigroup(seq)?;
    let terms = seq.terms().to_vec();
    let bound = (s.frobenius() + seq.sum() as i64).max(0) as u64;
    let rows: Vec<(u64, Vec<u64>)> = (0..=bound)
        .into_par_iter()
        .filter(|&b| s.contains(b))
        .filter_map(|b| {
            let complex = DivisorComplex::new(terms.len(), |mask| {
                let used: u64 = (0..terms.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| terms[i])
                    .sum();
                used <= b && s.contains(b - used)
            });
            let ranks = complex.reduced_homology_ranks(field);
            ranks.iter().any(|&r| r > 0).then_some((b, ranks))
        })
        .collect();
    let mut graded = BTreeMap::new();
    for (b, ranks) in rows {
        for (i, r) in ranks.into_iter().enumerate() {
            if r > 0 {
                graded.insert((i, vec![b]), r);
            }
        }
    }
    Ok(BettiTable::assemble(false, seq.d(), graded, field, bound))
}

/// Default total-degree bound `d + 2` for projective Betti numbers
/// (regularity of a nondegenerate curve is at most `d - n + 2`, and `pd ≤ n`).
pub fn projective_degree_bound(seq: &Sequence) -> u64 {
    seq.d() + 2
}

/// Projective Betti numbers over `k[x_0..x_n]`, graded by `ℕ²`.
///
/// With `degree_bound` below the default, the bound is accepted only if the
/// Hilbert-series numerator has no terms beyond it up to the default bound.
pub fn betti_projective(
    seq: &Sequence,
    field: Field,
    degree_bound: Option<u64>,
) -> Result<BettiTable> {
    semigroup(seq)?;
    let d = seq.d();
    let default = projective_degree_bound(seq);
    let bound = degree_bound.unwrap_or(default);
    if bound < default {
        let numerator = hilbert_numerator_projective(seq, default);
        if let Some(m) = (bound + 1..=default).find(|&m| numerator[m as usize] != 0) {
            return Err(Error::BoundExhausted(format!(
                "Hilbert-series numerator has a term in degree {m} beyond the bound {bound}"
            )));
        }
    }
    let monoid = HomogeneousMonoid::new(seq);
    let table = monoid.min_terms_table(bound * d);
    let member = |y1: i64, y2: i64| -> bool {
        if y1 < 0 || y2 < 0 || !((y1 + y2) as u64).is_multiple_of(d) {
            return false;
        }
        let m = (y1 + y2) as u64 / d;
        matches!(table[y1 as usize], Some(k) if k as u64 <= m)
    };
    let vectors: Vec<(i64, i64)> = monoid
        .vectors()
        .into_iter()
        .map(|p| (p.0 as i64, p.1 as i64))
        .collect();
    let points: Vec<(u64, u64)> = (0..=bound)
        .flat_map(|m| (0..=m * d).map(move |y1| (y1, m * d - y1)))
        .collect();
    let rows: Vec<((u64, u64), Vec<u64>)> = points
        .into_par_iter()
        .filter(|&(y1, y2)| member(y1 as i64, y2 as i64))
        .filter_map(|(y1, y2)| {
            let complex = DivisorComplex::new(vectors.len(), |mask| {
                let (mut r1, mut r2) = (y1 as i64, y2 as i64);
                for (i, v) in vectors.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        r1 -= v.0;
                        r2 -= v.1;
                    }
                }
                member(r1, r2)
            });
            let ranks = complex.reduced_homology_ranks(field);
            ranks.iter().any(|&r| r > 0).then_some(((y1, y2), ranks))
        })
        .collect();
    let mut graded = BTreeMap::new();
    for ((y1, y2), ranks) in rows {
        for (i, r) in ranks.into_iter().enumerate() {
            if r > 0 {
                graded.insert((i, vec![y1, y2]), r);
            }
        }
    }
    Ok(BettiTable::assemble(true, d, graded, field, bound))
}

fn multiply_truncated(a: &[i64], b: &[i64], upto: usize) -> Vec<i64> {
    let mut out = vec![0i64; upto + 1];
    for (i, &x) in a.iter().enumerate().take(upto + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(upto + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `Π (1 - t^{a_i}) · Σ_{s∈S_1} t^s` up to `t^upto`.
pub fn hilbert_numerator_affine(s: &NumericalSemigroup, upto: u64) -> Vec<i64> {
    let upto = upto as usize;
    let mut acc: Vec<i64> = (0..=upto).map(|x| i64::from(s.contains(x as u64))).collect();
    for &a in s.generators().terms() {
        let mut factor = vec![0i64; upto + 1];
        factor[0] = 1;
        if (a as usize) <= upto {
            factor[a as usize] = -1;
        }
        acc = multiply_truncated(&acc, &factor, upto);
    }
    acc
}

/// Coefficients of `(1 - z)^{n+1} · Σ_m |{y ∈ S : (y1 + y2)/d = m}| z^m` up to `z^upto`.
pub fn hilbert_numerator_projective(seq: &Sequence, upto: u64) -> Vec<i64> {
    let d = seq.d();
    let table = HomogeneousMonoid::new(seq).min_terms_table(upto * d);
    let mut acc: Vec<i64> = (0..=upto)
        .map(|m| {
            table[..=(m * d) as usize]
                .iter()
                .filter(|k| matches!(k, Some(k) if *k as u64 <= m))
                .count() as i64
        })
        .collect();
    for _ in 0..=seq.len() {
        let factor = [1i64, -1];
        acc = multiply_truncated(&acc, &factor, upto as usize);
    }
    acc
}
