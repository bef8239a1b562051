//! Toric ideals of monomial curves and their degrevlex Gröbner bases.
//!
//! Variables are `x_1..x_n` for the affine curve and `x_0..x_n` for the
//! projective one; exponent vectors are indexed from 0 in both cases.

mod binomial;
mod buchberger;
mod lattice;

use std::collections::BTreeMap;

pub use binomial::{divides, Binomial, DisplayBinomial, Monomial, TermOrder};
pub use buchberger::{buchberger, GroebnerBasis};
pub use lattice::{kernel_basis, lll};

use crate::numsg::Sequence;

/// Multidegree of each variable: `a_i` (affine) or `(a_i, d - a_i)` (projective).
pub fn variable_degrees(seq: &Sequence, projective: bool) -> Vec<Vec<u64>> {
    let d = seq.d();
    if projective {
        std::iter::once(0)
            .chain(seq.terms().iter().copied())
            .map(|a| vec![a, d - a])
            .collect()
    } else {
        seq.terms().iter().map(|&a| vec![a]).collect()
    }
}

fn lattice_binomials(degrees: &[Vec<u64>]) -> Vec<(Monomial, Monomial)> {
    let n = degrees.len();
    let dim = degrees[0].len();
    let rows: Vec<Vec<i64>> = (0..dim)
        .map(|k| degrees.iter().map(|v| v[k] as i64).collect())
        .collect();
    lll(kernel_basis(&rows, n))
        .into_iter()
        .map(|u| {
            let plus = u.iter().map(|&x| x.max(0) as u32).collect();
            let minus = u.iter().map(|&x| (-x).max(0) as u32).collect();
            (plus, minus)
        })
        .collect()
}

/// Saturates the lattice basis ideal by each variable in turn. A Gröbner
/// basis in a weighted reverse-lex order with `x_i` cheapest, divided by the
/// largest power of `x_i` in each element, generates `J : x_i^∞`.
fn saturate(mut gens: Vec<(Monomial, Monomial)>, weights: &[u64]) -> Vec<(Monomial, Monomial)> {
    for var in 0..weights.len() {
        let order = TermOrder::weighted(weights.to_vec(), var);
        gens = buchberger(&gens, &order)
            .into_elements()
            .into_iter()
            .map(|mut g| {
                g.cancel_common();
                (g.lead, g.trail)
            })
            .collect();
    }
    gens
}

/// Reduced degrevlex Gröbner basis of the toric ideal `I_{A_1}` or `I_A`.
pub fn toric_groebner(seq: &Sequence, projective: bool) -> GroebnerBasis {
    let degrees = variable_degrees(seq, projective);
    let n = degrees.len();
    if n == 1 {
        return buchberger(&[], &TermOrder::degrevlex(1));
    }
    let weights: Vec<u64> = if projective {
        vec![1; n]
    } else {
        seq.terms().to_vec()
    };
    let gens = saturate(lattice_binomials(&degrees), &weights);
    buchberger(&gens, &TermOrder::degrevlex(n))
}

/// Generators of the toric ideal (its reduced degrevlex Gröbner basis).
pub fn toric_ideal(seq: &Sequence, projective: bool) -> Vec<Binomial> {
    toric_groebner(seq, projective).into_elements()
}

/// All monomials of the given multidegree.
pub fn fiber(degrees: &[Vec<u64>], target: &[u64]) -> Vec<Monomial> {
    fn go(
        degrees: &[Vec<u64>],
        i: usize,
        rest: &mut Vec<u64>,
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if i == degrees.len() {
            if rest.iter().all(|&r| r == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let v = &degrees[i];
        if v.iter().all(|&x| x == 0) {
            go(degrees, i + 1, rest, cur, out);
            return;
        }
        let mut e = 0u32;
        loop {
            go(degrees, i + 1, rest, cur, out);
            if rest.iter().zip(v).any(|(r, x)| r < x) {
                break;
            }
            for (r, x) in rest.iter_mut().zip(v) {
                *r -= x;
            }
            e += 1;
            cur[i] = e;
        }
        for (r, x) in rest.iter_mut().zip(v) {
            *r += x * e as u64;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut rest = target.to_vec();
    let mut cur = vec![0; degrees.len()];
    go(degrees, 0, &mut rest, &mut cur, &mut out);
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// A minimal generating set selected from the Gröbner basis. In each degree,
/// monomials of the fiber sharing a variable are already connected by
/// lower-degree elements; a basis element is kept when it joins two
/// remaining components.
pub fn minimal_generators(seq: &Sequence, projective: bool) -> Vec<Binomial> {
    let degrees = variable_degrees(seq, projective);
    let gb = toric_groebner(seq, projective);
    let mut by_degree: BTreeMap<Vec<u64>, Vec<&Binomial>> = BTreeMap::new();
    for g in gb.elements() {
        let mut key = Binomial::graded_degree(&g.lead, &degrees);
        key.insert(0, key.iter().sum());
        by_degree.entry(key).or_default().push(g);
    }
    let mut out = Vec::new();
    for (key, elements) in by_degree {
        let monomials = fiber(&degrees, &key[1..]);
        let index: BTreeMap<&Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut uf = UnionFind::new(monomials.len());
        for var in 0..degrees.len() {
            let mut first = None;
            for (i, m) in monomials.iter().enumerate() {
                if m[var] > 0 {
                    match first {
                        None => first = Some(i),
                        Some(f) => {
                            uf.union(f, i);
                        }
                    }
                }
            }
        }
        for g in elements {
            if uf.union(index[&g.lead], index[&g.trail]) {
                out.push(g.clone());
            }
        }
    }
    out
}

/// The last variable divides no minimal generator of the degrevlex initial
/// ideal of `I_{A_1}`.
pub fn cm_via_groebner(seq: &Sequence) -> bool {
    cm_from_basis(&toric_groebner(seq, false))
}

pub fn cm_from_basis(gb: &GroebnerBasis) -> bool {
    let n = gb.order().nvars();
    gb.elements().iter().all(|g| g.lead[n - 1] == 0)
}

/// The last variable appears in every non-homogeneous element of the reduced
/// degrevlex basis of `I_{A_1}`.
pub fn sengupta_criterion(seq: &Sequence) -> bool {
    sengupta_from_basis(&toric_groebner(seq, false))
}

pub fn sengupta_from_basis(gb: &GroebnerBasis) -> bool {
    let n = gb.order().nvars();
    gb.elements()
        .iter()
        .filter(|g| !g.is_homogeneous())
        .all(|g| g.involves(n - 1))
}
