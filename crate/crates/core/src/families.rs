//! Closed-form results for arithmetic and punctured arithmetic sequences,
//! shifted-family bounds, canonical projections, and Gorenstein curves.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::homog::{HomogeneousMonoid, Point2};
use crate::numsg::{gcd, AperySet, NumericalSemigroup, Sequence};

/// `a_i = a_1 + (i - 1) e` for `i = 1..n`, with `gcd(a_1, e) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArithmeticParams {
    a1: u64,
    e: u64,
    n: usize,
}

impl ArithmeticParams {
    pub fn new(a1: u64, e: u64, n: usize) -> Result<Self> {
        if a1 == 0 || e == 0 {
            return Err(Error::InvalidSequence("a1 and e must be positive".into()));
        }
        if n < 2 {
            return Err(Error::InvalidSequence("at least two terms are needed".into()));
        }
        match gcd(a1, e) {
            1 => Ok(Self { a1, e, n }),
            g => Err(Error::Gcd(g)),
        }
    }

    pub fn a1(&self) -> u64 {
        self.a1
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_i`, 1-based.
    pub fn term(&self, i: usize) -> u64 {
        self.a1 + (i as u64 - 1) * self.e
    }

    pub fn d(&self) -> u64 {
        self.term(self.n)
    }

    pub fn sequence(&self) -> Sequence {
        Sequence::new((1..=self.n).map(|i| self.term(i)).collect()).expect("increasing")
    }

    /// `q_b = ⌈b / (n - 1)⌉`.
    pub fn q_b(&self, b: u64) -> u64 {
        b.div_ceil(self.n as u64 - 1)
    }

    /// `r_b = q_b (n - 1) - b`, so `b = q_b (n - 1) - r_b` with `0 ≤ r_b ≤ n - 2`.
    pub fn r_b(&self, b: u64) -> u64 {
        self.q_b(b) * (self.n as u64 - 1) - b
    }

    /// `q = ⌊(a_1 - 1) / (n - 1)⌋`.
    pub fn q(&self) -> u64 {
        (self.a1 - 1) / (self.n as u64 - 1)
    }

    /// `ℓ = a_1 - q (n - 1)`, in `1..=n-1`.
    pub fn ell(&self) -> u64 {
        self.a1 - self.q() * (self.n as u64 - 1)
    }

    /// `v_μ = μ a_1 + a_2`.
    pub fn v(&self, mu: u64) -> u64 {
        mu * self.a1 + self.term(2)
    }
}

/// `Ap(⟨a_1..a_n⟩, a_n) = {q_b a_1 + r_b e : 0 ≤ b < d}`.
pub fn arithmetic_apery(p: &ArithmeticParams) -> AperySet {
    let d = p.d();
    let elements = (0..d).map(|b| p.q_b(b) * p.a1 + p.r_b(b) * p.e);
    apery_from_values(d, elements)
}

fn apery_from_values(d: u64, values: impl IntoIterator<Item = u64>) -> AperySet {
    let mut by_residue = vec![u64::MAX; d as usize];
    for v in values {
        let slot = &mut by_residue[(v % d) as usize];
        assert_eq!(*slot, u64::MAX, "two closed-form values share residue {}", v % d);
        *slot = v;
    }
    AperySet::from_residues(d, by_residue)
}

/// The posets are isomorphic iff `a_1 > n - 2`.
pub fn arithmetic_iso_check(p: &ArithmeticParams) -> bool {
    p.a1 + 2 > p.n as u64
}

fn check_puncture(p: &ArithmeticParams, r: usize) -> Result<()> {
    if p.n < 4 {
        return Err(Error::Hypothesis(format!("need n >= 4, got n = {}", p.n)));
    }
    if r < 2 || r > p.n - 1 {
        return Err(Error::Hypothesis(format!("r must lie in 2..={}, got {r}", p.n - 1)));
    }
    Ok(())
}

/// Apery set of `⟨a_1..a_n⟩ ∖ {a_r}` with respect to `a_n`, from the Apery
/// set `A` of the full arithmetic semigroup.
pub fn punctured_apery(p: &ArithmeticParams, r: usize) -> Result<AperySet> {
    check_puncture(p, r)?;
    if p.a1 < r as u64 {
        return Err(Error::Hypothesis(format!("need a1 >= r, got a1 = {} < {r}", p.a1)));
    }
    let d = p.d();
    let divisible = p.a1.is_multiple_of(p.n as u64 - 1);
    let mut set: BTreeSet<u64> = arithmetic_apery(p).elements().iter().copied().collect();
    let mut swap = |old: u64, new: u64| {
        assert!(set.remove(&old), "{old} is not in the arithmetic Apery set");
        set.insert(new);
    };
    if r == 2 {
        let top = if divisible { p.q() + p.e } else { p.q() + p.e - 1 };
        for mu in 0..=top {
            swap(p.v(mu), p.v(mu) + d);
        }
    } else if r <= p.n - 2 {
        swap(p.term(r), p.term(r) + d);
    } else {
        let k = if divisible { p.q() + 1 } else { p.q() };
        swap(p.term(p.n - 1), p.term(p.n - 1) + k * d);
    }
    Ok(apery_from_values(d, set))
}

/// The sequence with `a_r` removed.
pub fn punctured_sequence(p: &ArithmeticParams, r: usize) -> Result<Sequence> {
    projection(&p.sequence(), r, false)
}

/// Poset isomorphism criterion for a punctured arithmetic sequence (`n ≥ 4`).
pub fn punctured_iso_check(p: &ArithmeticParams, r: usize) -> Result<bool> {
    check_puncture(p, r)?;
    let (a1, n, r64) = (p.a1, p.n as u64, r as u64);
    Ok(if r == 2 {
        a1 + 2 > n && a1 != n
    } else if r <= p.n - 2 {
        a1 >= n && r64 + n <= a1 + 1
    } else {
        a1 + 2 >= n
    })
}

/// Removes `a_r` (1-based). With `normalize`, the result is divided by its gcd.
pub fn projection(seq: &Sequence, r: usize, normalize: bool) -> Result<Sequence> {
    if r == 0 || r > seq.len() {
        return Err(Error::InvalidSequence(format!(
            "projection index {r} outside 1..={}",
            seq.len()
        )));
    }
    if seq.len() <= 2 {
        return Err(Error::Degenerate(format!(
            "removing a term of {seq} leaves fewer than two terms"
        )));
    }
    let terms: Vec<u64> = seq
        .terms()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i + 1 != r)
        .map(|(_, &t)| t)
        .collect();
    let out = Sequence::new(terms)?;
    Ok(if normalize { out.normalized().0 } else { out })
}

fn check_offsets(offsets: &[u64]) -> Result<()> {
    if offsets.first() != Some(&0) {
        return Err(Error::InvalidSequence("offsets must start with 0".into()));
    }
    if offsets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSequence("offsets must be strictly increasing".into()));
    }
    Ok(())
}

/// `N = (c_n - 1) Σ_{i=2}^{n-1} c_i`.
pub fn vu_bound(offsets: &[u64]) -> Result<u64> {
    check_offsets(offsets)?;
    let n = offsets.len();
    if n < 2 {
        return Ok(0);
    }
    let inner: u64 = offsets[1..n - 1].iter().sum();
    Ok((offsets[n - 1] - 1) * inner)
}

/// `M = a_n + (a_n - 1) Σ_{i=1}^{n-1} (a_n - a_i)`.
pub fn cm_threshold(seq: &Sequence) -> u64 {
    let d = seq.d();
    let spread: u64 = seq.terms()[..seq.len() - 1].iter().map(|a| d - a).sum();
    d + (d - 1) * spread
}

/// The shifted sequence `j + c_1 < ... < j + c_n`.
pub fn shifted(offsets: &[u64], j: u64) -> Result<Sequence> {
    check_offsets(offsets)?;
    if j == 0 {
        return Err(Error::InvalidSequence("shift must be positive".into()));
    }
    Sequence::new(offsets.iter().map(|c| c + j).collect())
}

/// CM, both charts symmetric, and `d | F(S_1) + F(S_2)`.
pub fn gorenstein_check(seq: &Sequence) -> Result<bool> {
    let s1 = NumericalSemigroup::new(seq)?;
    let s2 = NumericalSemigroup::new(&seq.dual())?;
    let cm = HomogeneousMonoid::new(seq).cm_by_residue_pairs()?;
    let divides = (s1.frobenius() + s2.frobenius()).rem_euclid(seq.d() as i64) == 0;
    Ok(cm && s1.is_symmetric() && s2.is_symmetric() && divides)
}

/// Small elements `T ∩ [1, F(T) - 1]` of a symmetric semigroup without 2,
/// whose projective curve is arithmetically Gorenstein.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinConstruction {
    pub sequence: Sequence,
    /// The `d` points of `AP_S` exhibited in the construction, all checked to lie in `S`.
    pub witness: Vec<Point2>,
}

pub fn gorenstein_construct(t: &NumericalSemigroup) -> Result<GorensteinConstruction> {
    if t.contains(2) {
        return Err(Error::TwoInSemigroup);
    }
    if !t.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let f = t.frobenius() as u64;
    let small: Vec<u64> = (1..f).filter(|&x| t.contains(x)).collect();
    let sequence = Sequence::new(small)?;
    let d = sequence.d();
    if d + 1 != f {
        return Err(Error::Inconsistent(format!("expected d = F - 1, got d = {d}, F = {f}")));
    }
    let s1 = NumericalSemigroup::new(&sequence)?;
    let mut witness = vec![Point2(0, 0)];
    witness.extend((2..d).filter(|&a| s1.contains(a)).map(|a| Point2(a, d - a)));
    witness.extend((2..d).filter(|&g| !s1.contains(g)).map(|g| Point2(d + g, d - g)));
    witness.push(Point2(2 * d + 1, d - 1));
    let monoid = HomogeneousMonoid::new(&sequence);
    if witness.len() as u64 != d {
        return Err(Error::Inconsistent(format!("witness has {} points, expected {d}", witness.len())));
    }
    if let Some(p) = witness.iter().find(|&&p| !monoid.member2(p)) {
        return Err(Error::Inconsistent(format!("witness point {p} is not in S")));
    }
    Ok(GorensteinConstruction { sequence, witness })
}

/// The unique `t ∈ {1..n-1}` with `t ≡ a_1 - 1 (mod n - 1)`.
pub fn arithmetic_cm_type(a1: u64, n: usize) -> u64 {
    assert!(n >= 2, "need n >= 2");
    let m = n as i64 - 1;
    (a1 as i64 - 2).rem_euclid(m) as u64 + 1
}
