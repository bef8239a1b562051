use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

/// `m / den * num`, assuming `den | m`.
pub fn replace(m: &[u32], den: &[u32], num: &[u32]) -> Monomial {
    m.iter()
        .zip(den)
        .zip(num)
        .map(|((x, y), z)| x - y + z)
        .collect()
}

/// Weighted degree followed by reverse lexicographic tie-breaking.
///
/// `revlex` lists the variables from cheapest to most expensive: on equal
/// weighted degree, the first listed variable where the exponents differ
/// decides, and the larger exponent gives the smaller monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    weights: Vec<u64>,
    revlex: Vec<usize>,
}

impl TermOrder {
    /// Degrevlex with `x_1 > x_2 > ... > x_n`.
    pub fn degrevlex(nvars: usize) -> Self {
        Self {
            weights: vec![1; nvars],
            revlex: (0..nvars).rev().collect(),
        }
    }

    /// Weighted degrevlex with `cheapest` moved to the bottom of the order.
    pub fn weighted(weights: Vec<u64>, cheapest: usize) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let n = weights.len();
        let revlex = std::iter::once(cheapest)
            .chain((0..n).rev().filter(|&i| i != cheapest))
            .collect();
        Self { weights, revlex }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weighted_degree(&self, a: &[u32]) -> u64 {
        a.iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.weighted_degree(a)
            .cmp(&self.weighted_degree(b))
            .then_with(|| {
                for &i in &self.revlex {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            })
    }
}

/// A pure binomial `x^lead - x^trail` with `lead` the larger term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    /// Orients `x^a - x^b`; `None` when the two terms coincide.
    pub fn new(a: Monomial, b: Monomial, order: &TermOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Self { lead: a, trail: b }),
            Ordering::Less => Some(Self { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn nvars(&self) -> usize {
        self.lead.len()
    }

    /// Divides both terms by their gcd.
    pub fn cancel_common(&mut self) {
        for (x, y) in self.lead.iter_mut().zip(self.trail.iter_mut()) {
            let c = (*x).min(*y);
            *x -= c;
            *y -= c;
        }
    }

    /// Same total degree on both sides.
    pub fn is_homogeneous(&self) -> bool {
        degree(&self.lead) == degree(&self.trail)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.lead[var] > 0 || self.trail[var] > 0
    }

    /// Integer combination `Σ e_i v_i` of the given degree vectors.
    pub fn graded_degree(m: &[u32], degrees: &[Vec<u64>]) -> Vec<u64> {
        let dim = degrees.first().map_or(0, Vec::len);
        let mut out = vec![0u64; dim];
        for (e, v) in m.iter().zip(degrees) {
            for (o, x) in out.iter_mut().zip(v) {
                *o += *e as u64 * x;
            }
        }
        out
    }

    /// Both terms map to the same monomial under the parametrization.
    pub fn is_homogeneous_for(&self, degrees: &[Vec<u64>]) -> bool {
        Self::graded_degree(&self.lead, degrees) == Self::graded_degree(&self.trail, degrees)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[u32], offset: usize) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + offset)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Display helper carrying the index of the first variable.
pub struct DisplayBinomial<'a> {
    pub binomial: &'a Binomial,
    pub offset: usize,
}

impl fmt::Display for DisplayBinomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.binomial.lead, self.offset)?;
        f.write_str(" - ")?;
        write_monomial(f, &self.binomial.trail, self.offset)
    }
}
