//! Numerical semigroups generated by a coprime sequence of positive integers.
//!
//! Membership is answered from a table that covers `0..=F + Σ generators`;
//! everything above the Frobenius number is a member, so queries past the
//! table never need to recompute anything.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| gcd(g, v))
}

/// A strictly increasing list of positive integers `a_1 < ... < a_n`.
///
/// The last term is the degree `d` of the associated projective curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Sequence {
    terms: Vec<u64>,
}

impl Sequence {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidSequence("empty sequence".into()));
        }
        if terms[0] == 0 {
            return Err(Error::InvalidSequence("terms must be positive".into()));
        }
        if let Some(w) = terms.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!(
                "terms must be strictly increasing ({} is followed by {})",
                w[0], w[1]
            )));
        }
        Ok(Self { terms })
    }

    /// Like [`Sequence::new`] but also rejects sequences whose gcd is not 1.
    pub fn coprime(terms: Vec<u64>) -> Result<Self> {
        let seq = Self::new(terms)?;
        match seq.gcd() {
            1 => Ok(seq),
            g => Err(Error::Gcd(g)),
        }
    }

    /// Divides every term by the gcd. Returns the normalized sequence and the divisor.
    pub fn normalized(&self) -> (Self, u64) {
        let g = self.gcd();
        let terms = self.terms.iter().map(|t| t / g).collect();
        (Self { terms }, g)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn d(&self) -> u64 {
        *self.terms.last().expect("sequence is never empty")
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.terms)
    }

    pub fn sum(&self) -> u64 {
        self.terms.iter().sum()
    }

    /// `d - a_{n-1} < ... < d - a_1 < d`, the sequence of the second affine chart.
    pub fn dual(&self) -> Sequence {
        let d = self.d();
        let mut terms: Vec<u64> = self.terms[..self.len() - 1]
            .iter()
            .rev()
            .map(|a| d - a)
            .collect();
        terms.push(d);
        Sequence { terms }
    }
}

impl TryFrom<Vec<u64>> for Sequence {
    type Error = Error;

    fn try_from(terms: Vec<u64>) -> Result<Self> {
        Sequence::new(terms)
    }
}

impl From<Sequence> for Vec<u64> {
    fn from(seq: Sequence) -> Self {
        seq.terms
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

pub fn dual_sequence(seq: &Sequence) -> Sequence {
    seq.dual()
}

/// The Apery set of a semigroup with respect to one of its elements `c`:
/// the smallest member of every residue class modulo `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    modulus: u64,
    elements: Vec<u64>,
}

impl AperySet {
    pub(crate) fn from_residues(modulus: u64, elements: Vec<u64>) -> Self {
        debug_assert_eq!(elements.len() as u64, modulus);
        Self { modulus, elements }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Elements in residue order: index `i` holds the element congruent to `i`.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, y: u64) -> bool {
        self.elements[(y % self.modulus) as usize] == y
    }

    /// The element congruent to `residue`.
    pub fn by_residue(&self, residue: u64) -> u64 {
        self.elements[(residue % self.modulus) as usize]
    }

    pub fn max(&self) -> u64 {
        self.elements.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Sequence,
    msg: Vec<u64>,
    frobenius: i64,
    gaps: Vec<u64>,
    table: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &Sequence) -> Result<Self> {
        let g = generators.gcd();
        if g != 1 {
            return Err(Error::Gcd(g));
        }
        let terms = generators.terms();
        let frobenius = frobenius_by_residues(terms);
        let limit = (frobenius + 1) as u64 + generators.sum();
        let mut table = vec![false; limit as usize + 1];
        table[0] = true;
        for x in 1..table.len() {
            table[x] = terms
                .iter()
                .any(|&a| a as usize <= x && table[x - a as usize]);
        }
        let gaps = (1..=frobenius.max(0) as u64)
            .filter(|&x| !table[x as usize])
            .collect();
        let msg = minimal_generators(terms);
        Ok(Self {
            generators: generators.clone(),
            msg,
            frobenius,
            gaps,
            table,
        })
    }

    /// Builds the semigroup from generators in any order (duplicates allowed).
    pub fn from_generators(generators: &[u64]) -> Result<Self> {
        let set: BTreeSet<u64> = generators.iter().copied().collect();
        Self::new(&Sequence::new(set.into_iter().collect())?)
    }

    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        Self::new(&Sequence { terms: vec![1] }).expect("gcd of {1} is 1")
    }

    pub fn generators(&self) -> &Sequence {
        &self.generators
    }

    pub fn msg(&self) -> &[u64] {
        &self.msg
    }

    /// Largest integer outside the semigroup, `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        match self.table.get(x as usize) {
            Some(&b) => b,
            None => true,
        }
    }

    pub fn member(&self, x: i64) -> bool {
        x >= 0 && self.contains(x as u64)
    }

    pub fn apery(&self, c: u64) -> Result<AperySet> {
        if c == 0 || !self.contains(c) {
            return Err(Error::NotMember(c as i64));
        }
        let mut elements = vec![u64::MAX; c as usize];
        let mut missing = c;
        let mut x = 0u64;
        while missing > 0 {
            if self.contains(x) {
                let slot = &mut elements[(x % c) as usize];
                if *slot == u64::MAX {
                    *slot = x;
                    missing -= 1;
                }
            }
            x += 1;
        }
        Ok(AperySet::from_residues(c, elements))
    }

    /// Apery set with respect to the largest presented generator `d`.
    pub fn apery_d(&self) -> AperySet {
        self.apery(self.generators.d())
            .expect("every generator is a member")
    }

    /// All lengths `Σ α_i` of factorizations `b = Σ α_i g_i` over the minimal generators.
    pub fn factorization_lengths(&self, b: u64) -> Result<BTreeSet<u32>> {
        if !self.contains(b) {
            return Err(Error::NotMember(b as i64));
        }
        Ok(self.length_table(b).pop().unwrap_or_default())
    }

    /// Factorization length sets over the minimal generators for every `x` in `0..=upto`.
    pub fn length_table(&self, upto: u64) -> Vec<BTreeSet<u32>> {
        let mut table: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); upto as usize + 1];
        table[0].insert(0);
        for x in 1..=upto as usize {
            let mut here = BTreeSet::new();
            for &g in &self.msg {
                if g as usize <= x {
                    here.extend(table[x - g as usize].iter().map(|l| l + 1));
                }
            }
            table[x] = here;
        }
        table
    }

    /// For every integer `b`, exactly one of `b` and `F - b` lies in the semigroup.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|b| self.member(b) != self.member(f - b))
    }
}

/// Kunz-style shortest paths over the residues modulo the smallest generator.
fn frobenius_by_residues(terms: &[u64]) -> i64 {
    let m = terms[0];
    let mut dist = vec![u64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0u64)));
    while let Some(Reverse((w, r))) = heap.pop() {
        if w > dist[r as usize] {
            continue;
        }
        for &g in &terms[1..] {
            let next = (r + g) % m;
            let nw = w + g;
            if nw < dist[next as usize] {
                dist[next as usize] = nw;
                heap.push(Reverse((nw, next)));
            }
        }
    }
    let max = dist.iter().copied().max().unwrap_or(0);
    max as i64 - m as i64
}

/// Removes, from the largest down, every generator expressible through the others.
fn minimal_generators(terms: &[u64]) -> Vec<u64> {
    let mut kept: Vec<u64> = terms.to_vec();
    for &g in terms.iter().rev() {
        let others: Vec<u64> = kept.iter().copied().filter(|&x| x < g).collect();
        let mut reach = vec![false; g as usize + 1];
        reach[0] = true;
        for x in 1..=g as usize {
            reach[x] = others
                .iter()
                .any(|&a| a as usize <= x && reach[x - a as usize]);
        }
        if reach[g as usize] {
            kept.retain(|&x| x != g);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(terms: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(&Sequence::new(terms.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn frobenius_of_known_semigroups() {
        assert_eq!(sg(&[4, 9, 10]).frobenius(), 15);
        let s = sg(&[6, 7, 8, 15, 16]);
        assert_eq!(s.frobenius(), 17);
        assert_eq!(s.msg(), &[6, 7, 8]);
        let n = sg(&[1]);
        assert_eq!(n.frobenius(), -1);
        assert!(n.gaps().is_empty());
    }

    #[test]
    fn sequence_validation() {
        assert!(Sequence::new(vec![]).is_err());
        assert!(Sequence::new(vec![0, 3]).is_err());
        assert!(Sequence::new(vec![3, 3]).is_err());
        assert!(Sequence::new(vec![5, 3]).is_err());
        assert_eq!(Sequence::coprime(vec![4, 6]), Err(Error::Gcd(2)));
        let (s, g) = Sequence::new(vec![4, 6, 10]).unwrap().normalized();
        assert_eq!((s.terms(), g), (&[2u64, 3, 5][..], 2));
    }

    #[test]
    fn gcd_is_rejected_by_construction() {
        let seq = Sequence::new(vec![6, 9]).unwrap();
        assert_eq!(NumericalSemigroup::new(&seq).unwrap_err(), Error::Gcd(3));
    }

    #[test]
    fn membership() {
        let s = sg(&[5, 11, 13]);
        assert!(!s.member(19));
        assert!(s.member(32));
        assert!(s.member(0));
        assert!(!s.member(-4));
        assert!(s.member(10_000));
    }

    #[test]
    fn apery_sets() {
        let s = sg(&[5, 11, 13]);
        assert_eq!(
            s.apery(13).unwrap().elements(),
            &[0, 27, 15, 16, 30, 5, 32, 20, 21, 22, 10, 11, 25]
        );
        assert_eq!(sg(&[1]).apery(7).unwrap().elements(), &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(
            sg(&[4, 9, 10]).apery(10).unwrap().elements(),
            &[0, 21, 12, 13, 4, 25, 16, 17, 8, 9]
        );
        assert_eq!(s.apery(7), Err(Error::NotMember(7)));
        assert_eq!(s.apery(0), Err(Error::NotMember(0)));
    }

    #[test]
    fn factorization_lengths() {
        let s = sg(&[5, 7, 8, 9]);
        assert_eq!(s.factorization_lengths(15).unwrap(), BTreeSet::from([2, 3]));
        let t = sg(&[4, 9, 10]);
        assert_eq!(t.factorization_lengths(13).unwrap(), BTreeSet::from([2]));
        assert_eq!(t.factorization_lengths(0).unwrap(), BTreeSet::from([0]));
        assert_eq!(t.factorization_lengths(11), Err(Error::NotMember(11)));
    }

    #[test]
    fn symmetry() {
        assert!(sg(&[4, 9, 10]).is_symmetric());
        assert!(sg(&[6, 7, 8, 15, 16]).is_symmetric());
        assert!(!sg(&[5, 11, 13]).is_symmetric());
        assert!(sg(&[1]).is_symmetric());
    }

    #[test]
    fn duals() {
        let s = Sequence::new(vec![6, 7, 8, 15, 16]).unwrap();
        assert_eq!(s.dual().terms(), &[1, 8, 9, 10, 16]);
        assert_eq!(sg(s.dual().terms()).frobenius(), -1);
        let t = Sequence::new(vec![4, 5, 6, 7, 8]).unwrap();
        assert_eq!(t.dual().terms(), &[1, 2, 3, 4, 8]);
        let u = Sequence::new(vec![4, 9, 10]).unwrap();
        assert_eq!(u.dual().dual(), u);
    }
}
