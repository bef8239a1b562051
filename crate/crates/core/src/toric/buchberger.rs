use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::binomial::{coprime, degree, divides, lcm, replace, Binomial, Monomial, TermOrder};

/// Reduced Gröbner basis of a pure binomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Minimal generators of the initial ideal (the leading terms of a reduced basis).
    pub fn initial_ideal(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lead.clone()).collect()
    }

    pub fn normal_form(&self, m: &[u32]) -> Monomial {
        normal_form(m, &self.elements)
    }

    /// Membership of `x^a - x^b` in the ideal.
    pub fn reduces_to_zero(&self, a: &[u32], b: &[u32]) -> bool {
        self.normal_form(a) == self.normal_form(b)
    }

    /// Every S-pair reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| {
                let (a, b) = s_pair(&g[i], &g[j]);
                self.reduces_to_zero(&a, &b)
            })
        })
    }

    /// Leading terms pairwise non-dividing and no trailing term reducible.
    pub fn is_reduced(&self) -> bool {
        let g = &self.elements;
        g.iter().enumerate().all(|(i, f)| {
            g.iter().enumerate().all(|(j, h)| {
                i == j || (!divides(&h.lead, &f.lead) && !divides(&h.lead, &f.trail))
            }) && self.order.cmp(&f.lead, &f.trail).is_gt()
        })
    }
}

fn normal_form(m: &[u32], basis: &[Binomial]) -> Monomial {
    let mut m = m.to_vec();
    'outer: loop {
        for g in basis {
            if divides(&g.lead, &m) {
                m = replace(&m, &g.lead, &g.trail);
                continue 'outer;
            }
        }
        return m;
    }
}

fn s_pair(f: &Binomial, g: &Binomial) -> (Monomial, Monomial) {
    let l = lcm(&f.lead, &g.lead);
    (replace(&l, &f.lead, &f.trail), replace(&l, &g.lead, &g.trail))
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first), the coprime-lead criterion and the chain criterion. The
/// result is minimalized and inter-reduced.
pub fn buchberger(generators: &[(Monomial, Monomial)], order: &TermOrder) -> GroebnerBasis {
    let mut basis: Vec<Binomial> = Vec::new();
    let mut queue: BinaryHeap<Reverse<(u64, usize, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut counter = 0usize;

    let mut add = |basis: &mut Vec<Binomial>,
                   queue: &mut BinaryHeap<Reverse<(u64, usize, usize, usize)>>,
                   pending: &mut HashSet<(usize, usize)>,
                   g: Binomial| {
        let k = basis.len();
        for (i, f) in basis.iter().enumerate() {
            let deg = degree(&lcm(&f.lead, &g.lead));
            queue.push(Reverse((deg, counter, i, k)));
            counter += 1;
            pending.insert((i, k));
        }
        basis.push(g);
    };

    for (a, b) in generators {
        let a = normal_form(a, &basis);
        let b = normal_form(b, &basis);
        if let Some(g) = Binomial::new(a, b, order) {
            add(&mut basis, &mut queue, &mut pending, g);
        }
    }

    while let Some(Reverse((_, _, i, j))) = queue.pop() {
        pending.remove(&(i, j));
        let (f, g) = (&basis[i], &basis[j]);
        if coprime(&f.lead, &g.lead) {
            continue;
        }
        let l = lcm(&f.lead, &g.lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead, &l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let (a, b) = s_pair(f, g);
        let a = normal_form(&a, &basis);
        let b = normal_form(&b, &basis);
        if let Some(h) = Binomial::new(a, b, order) {
            add(&mut basis, &mut queue, &mut pending, h);
        }
    }

    GroebnerBasis {
        order: order.clone(),
        elements: reduce(basis, order),
    }
}

fn reduce(mut basis: Vec<Binomial>, order: &TermOrder) -> Vec<Binomial> {
    basis.sort_by(|f, g| order.cmp(&f.lead, &g.lead));
    let mut minimal: Vec<Binomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| divides(&h.lead, &g.lead)) {
            minimal.push(g);
        }
    }
    let leads: Vec<Binomial> = minimal.clone();
    for g in &mut minimal {
        g.trail = normal_form(&g.trail, &leads);
    }
    minimal.sort_by(|f, g| order.cmp(&g.lead, &f.lead));
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_generator_is_its_own_basis() {
        let o = TermOrder::degrevlex(2);
        let gb = buchberger(&[(vec![3, 0], vec![0, 2])], &o);
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0].lead, vec![3, 0]);
        assert!(gb.is_groebner() && gb.is_reduced());
    }

    #[test]
    fn twisted_cubic() {
        // x0 x2 - x1^2, x0 x3 - x1 x2, x1 x3 - x2^2
        let o = TermOrder::degrevlex(4);
        let gens = vec![
            (vec![1, 0, 1, 0], vec![0, 2, 0, 0]),
            (vec![1, 0, 0, 1], vec![0, 1, 1, 0]),
            (vec![0, 1, 0, 1], vec![0, 0, 2, 0]),
        ];
        let gb = buchberger(&gens, &o);
        assert!(gb.is_groebner() && gb.is_reduced());
        let mut leads = gb.initial_ideal();
        leads.sort();
        assert_eq!(leads, vec![vec![0, 0, 2, 0], vec![0, 1, 1, 0], vec![0, 2, 0, 0]]);
    }

    #[test]
    fn redundant_input_is_removed() {
        let o = TermOrder::degrevlex(2);
        let gb = buchberger(
            &[(vec![3, 0], vec![0, 2]), (vec![6, 0], vec![0, 4]), (vec![1, 1], vec![1, 1])],
            &o,
        );
        assert_eq!(gb.len(), 1);
    }
}
