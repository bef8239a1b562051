//! Randomized invariants checked against brute-force oracles written here
//! independently of the library.

use std::collections::BTreeSet;

use monocurve::families::{
    arithmetic_apery, arithmetic_cm_type, gorenstein_check, gorenstein_construct, punctured_apery,
    punctured_iso_check, punctured_sequence, ArithmeticParams,
};
use monocurve::homog::{HomogeneousMonoid, Point2};
use monocurve::numsg::{NumericalSemigroup, Sequence};
use monocurve::poset::{are_isomorphic, graded_via_sumsets, hasse_affine, hasse_projective, is_graded};
use monocurve::report::{analyze, AnalyzeOptions, CurveReport};
use monocurve::resolve::{betti_affine, betti_projective, Field};
use monocurve::toric::{minimal_generators, toric_groebner, variable_degrees};
use proptest::prelude::*;

/// Bounded knapsack: is `x` a nonnegative combination of `gens`?
fn oracle_member(gens: &[u64], x: u64) -> bool {
    let mut reach = vec![false; x as usize + 1];
    reach[0] = true;
    for v in 1..=x as usize {
        reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[x as usize]
}

/// All factorization lengths of `b` over `gens`, by exhaustive recursion.
fn oracle_lengths(gens: &[u64], b: u64) -> BTreeSet<u32> {
    fn go(gens: &[u64], b: u64, used: u32, out: &mut BTreeSet<u32>) {
        if b == 0 {
            out.insert(used);
            return;
        }
        let Some((&g, rest)) = gens.split_first() else { return };
        let mut k = 0;
        while k * g <= b {
            go(rest, b - k * g, used + k as u32, out);
            k += 1;
        }
    }
    let mut out = BTreeSet::new();
    go(gens, b, 0, &mut out);
    out
}

/// `(y1, y2) ∈ S` by enumerating multisets of exactly `m` vectors.
fn oracle_member2(terms: &[u64], y: Point2) -> bool {
    let d = *terms.last().unwrap();
    if !(y.0 + y.1).is_multiple_of(d) {
        return false;
    }
    let m = (y.0 + y.1) / d;
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for _ in 0..m {
        level = level
            .iter()
            .flat_map(|&s| std::iter::once(0).chain(terms.iter().copied()).map(move |a| s + a))
            .filter(|&s| s <= y.0)
            .collect();
    }
    level.contains(&y.0)
}

fn sequences(max_d: u64, max_n: usize) -> impl Strategy<Value = Sequence> {
    (2..=max_d)
        .prop_flat_map(move |d| {
            let k = (max_n - 1).min(d as usize - 1);
            (Just(d), prop::collection::btree_set(1..d, 1..=k.max(1)))
        })
        .prop_filter_map("gcd must be 1", |(d, mut set)| {
            set.insert(d);
            let s = Sequence::new(set.into_iter().collect()).ok()?;
            (s.gcd() == 1).then_some(s)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_knapsack(s in sequences(40, 6)) {
        let sg = NumericalSemigroup::new(&s).unwrap();
        let f = sg.frobenius();
        for x in 0..=(f + 2 * s.d() as i64).max(0) as u64 {
            prop_assert_eq!(sg.contains(x), oracle_member(s.terms(), x), "x = {}", x);
        }
        prop_assert!(!sg.member(-1));
        if f >= 0 {
            prop_assert!(!sg.contains(f as u64));
            prop_assert_eq!(sg.gaps().last().copied(), Some(f as u64));
        }
        prop_assert_eq!(sg.genus(), sg.gaps().len());
    }

    #[test]
    fn minimal_generators_are_minimal(s in sequences(40, 6)) {
        let sg = NumericalSemigroup::new(&s).unwrap();
        for &g in sg.msg() {
            let others: Vec<u64> = sg.msg().iter().copied().filter(|&h| h != g).collect();
            prop_assert!(!oracle_member(&others, g));
        }
        for &a in s.terms() {
            prop_assert!(oracle_member(sg.msg(), a));
        }
    }

    #[test]
    fn apery_sets(s in sequences(40, 6), pick in 0usize..100) {
        let sg = NumericalSemigroup::new(&s).unwrap();
        let members: Vec<u64> = (1..=3 * s.d()).filter(|&x| oracle_member(s.terms(), x)).collect();
        let c = members[pick % members.len()];
        let ap = sg.apery(c).unwrap();
        prop_assert_eq!(ap.elements().len() as u64, c);
        prop_assert_eq!(ap.elements()[0], 0);
        for (i, &y) in ap.elements().iter().enumerate() {
            prop_assert_eq!(y % c, i as u64);
            prop_assert!(oracle_member(s.terms(), y));
            prop_assert!(y < c || !oracle_member(s.terms(), y - c));
        }
    }

    #[test]
    fn symmetry_by_gap_count(s in sequences(40, 6)) {
        let sg = NumericalSemigroup::new(&s).unwrap();
        let f = sg.frobenius();
        if f >= 1 {
            let by_count = f % 2 == 1 && sg.genus() as i64 == (f + 1) / 2;
            let by_definition = (0..=f).all(|b| sg.member(b) != sg.member(f - b));
            prop_assert_eq!(sg.is_symmetric(), by_count);
            prop_assert_eq!(sg.is_symmetric(), by_definition);
        }
    }

    #[test]
    fn dual_is_involution(s in sequences(40, 8)) {
        prop_assert_eq!(s.dual().dual(), s.clone());
        prop_assert_eq!(s.dual().d(), s.d());
    }

    #[test]
    fn factorization_lengths_match(s in sequences(30, 5), b in 0u64..80) {
        let sg = NumericalSemigroup::new(&s).unwrap();
        if sg.contains(b) {
            prop_assert_eq!(sg.factorization_lengths(b).unwrap(), oracle_lengths(sg.msg(), b));
        } else {
            prop_assert!(sg.factorization_lengths(b).is_err());
        }
    }

    #[test]
    fn homogeneous_membership(s in sequences(20, 5)) {
        let m = HomogeneousMonoid::new(&s);
        let d = s.d();
        for v in m.vectors() {
            prop_assert!(m.member2(v));
        }
        for total in 0..=4 * d {
            for y1 in 0..=total {
                let y = Point2(y1, total - y1);
                prop_assert_eq!(m.member2(y), oracle_member2(s.terms(), y), "{}", y);
            }
        }
        let pts: Vec<Point2> = (0..=3 * d).flat_map(|y1| (0..=3 * d).map(move |y2| Point2(y1, y2)))
            .filter(|&p| m.member2(p)).take(40).collect();
        for &p in &pts {
            for &q in &pts {
                prop_assert!(m.member2(Point2(p.0 + q.0, p.1 + q.1)));
            }
        }
    }

    #[test]
    fn projective_apery_set(s in sequences(20, 5)) {
        let m = HomogeneousMonoid::new(&s);
        let aps = m.apery_projective(100_000).unwrap();
        let d = s.d();
        prop_assert!(aps.elements.contains(&Point2(0, 0)));
        prop_assert!(aps.len() as u64 >= d);
        let top = aps.elements.iter().map(|p| p.total() / d).max().unwrap();
        prop_assert_eq!(&m.apery_by_degree_scan(top + s.len() as u64 + 1), &aps.elements);
        let cm = m.cm_by_residue_pairs().unwrap();
        prop_assert_eq!(aps.len() as u64 == d, cm);
        if cm {
            let pairs: BTreeSet<Point2> = m.residue_pairs().unwrap().into_iter().collect();
            prop_assert_eq!(&pairs, &aps.elements);
        }
    }

    #[test]
    fn poset_invariants(s in sequences(20, 5)) {
        let sg = NumericalSemigroup::new(&s).unwrap();
        let m = HomogeneousMonoid::new(&s);
        let ap = sg.apery_d();
        let a = hasse_affine(&sg, &ap);
        let p = hasse_projective(&m, &m.apery_projective(100_000).unwrap());
        prop_assert_eq!(is_graded(&sg, &ap).0, graded_via_sumsets(&sg, &ap));
        let steps: BTreeSet<u64> = sg.msg().iter().copied().filter(|&g| g != s.d()).collect();
        for (y, z) in a.edges() {
            prop_assert!(steps.contains(&(z - y)));
        }
        if let Some(rank) = a.rank() {
            for &(i, j) in a.hasse_edges() {
                prop_assert_eq!(rank[j], rank[i] + 1);
            }
        }
        let inner: BTreeSet<Point2> = m.vectors()[1..s.len()].iter().copied().collect();
        let rank = p.rank().unwrap();
        for &(i, j) in p.hasse_edges() {
            let (y, z) = (p.elements()[i], p.elements()[j]);
            prop_assert!(inner.contains(&Point2(z.0 - y.0, z.1 - y.1)));
            prop_assert_eq!(rank[j], rank[i] + 1);
        }
        // longest chain to each element equals its rank, and so does the shortest
        prop_assert_eq!(p.heights(), rank.to_vec());
        // comparability closure equals ≤_S restricted to AP_S
        let le = p.order_relation();
        for (i, y) in p.elements().iter().enumerate() {
            for (j, z) in p.elements().iter().enumerate() {
                let related = z.0 >= y.0 && z.1 >= y.1 && m.member2(Point2(z.0 - y.0, z.1 - y.1));
                prop_assert_eq!(le[i][j], related);
            }
        }
        if let Some(map) = are_isomorphic(&a, &p) {
            prop_assert_eq!(a.profile(), p.profile());
            let image: BTreeSet<(usize, usize)> =
                a.hasse_edges().iter().map(|&(i, j)| (map[i], map[j])).collect();
            let target: BTreeSet<(usize, usize)> = p.hasse_edges().iter().copied().collect();
            prop_assert_eq!(image, target);
        }
    }

    #[test]
    fn groebner_bases(s in sequences(20, 5), projective in any::<bool>()) {
        let gb = toric_groebner(&s, projective);
        let degrees = variable_degrees(&s, projective);
        prop_assert!(gb.is_groebner());
        prop_assert!(gb.is_reduced());
        for g in gb.elements() {
            prop_assert!(g.is_homogeneous_for(&degrees));
            if projective {
                prop_assert!(g.is_homogeneous());
            }
        }
        let nvars = degrees.len();
        if !projective {
            let d = s.d() as u32;
            // x_i^{a_j} and x_j^{a_i} always have the same degree
            for (j, &aj) in s.terms().iter().enumerate() {
                let mut lhs = vec![0u32; nvars];
                lhs[0] = aj as u32;
                let mut rhs = vec![0u32; nvars];
                rhs[j] = s.terms()[0] as u32;
                prop_assert!(gb.reduces_to_zero(&lhs, &rhs));
            }
            for (i, &ai) in s.terms().iter().enumerate() {
                let mut lhs = vec![0u32; nvars];
                lhs[i] = d;
                let mut rhs = vec![0u32; nvars];
                rhs[nvars - 1] = ai as u32;
                prop_assert!(gb.reduces_to_zero(&lhs, &rhs));
            }
        }
    }

    #[test]
    fn betti_tables(s in sequences(14, 5)) {
        let n = s.len();
        let a = betti_affine(&s, Field::default()).unwrap();
        let p = betti_projective(&s, Field::default(), None).unwrap();
        let cm = HomogeneousMonoid::new(&s).cm_by_residue_pairs().unwrap();
        prop_assert_eq!(a.totals[0], 1);
        prop_assert_eq!(p.totals[0], 1);
        prop_assert!(a.totals.iter().all(|&b| b > 0));
        prop_assert!(p.totals.iter().all(|&b| b > 0));
        prop_assert_eq!(a.pd, n - 1);
        prop_assert!(p.pd == n - 1 || p.pd == n);
        prop_assert_eq!(p.pd == n - 1, cm);
        for (i, &b) in a.totals.iter().enumerate() {
            prop_assert!(p.totals.get(i).copied().unwrap_or(0) >= b);
        }
        prop_assert_eq!(a.totals.get(1).copied().unwrap_or(0), minimal_generators(&s, false).len() as u64);
        prop_assert_eq!(p.totals.get(1).copied().unwrap_or(0), minimal_generators(&s, true).len() as u64);
        let g = gorenstein_check(&s).unwrap();
        prop_assert_eq!(g, cm && p.cm_type == 1);
    }

    #[test]
    fn arithmetic_closed_form(a1 in 1u64..30, e in 1u64..10, n in 2usize..10) {
        if let Ok(p) = ArithmeticParams::new(a1, e, n) {
            prop_assume!(p.d() <= 60);
            let oracle = NumericalSemigroup::new(&p.sequence()).unwrap().apery_d();
            prop_assert_eq!(arithmetic_apery(&p), oracle);
            for b in 0..p.d() {
                prop_assert!(p.r_b(b) <= n as u64 - 2);
            }
            prop_assert!((1..n as u64).contains(&p.ell()));
        }
    }

    #[test]
    fn punctured_closed_form(a1 in 1u64..40, e in 1u64..6, n in 4usize..9, r in 2usize..8) {
        prop_assume!(r < n && a1 >= r as u64);
        if let Ok(p) = ArithmeticParams::new(a1, e, n) {
            prop_assume!(p.d() <= 60);
            let gens = punctured_sequence(&p, r).unwrap();
            let oracle = NumericalSemigroup::new(&gens).unwrap().apery(p.d()).unwrap();
            prop_assert_eq!(punctured_apery(&p, r).unwrap(), oracle);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn arithmetic_families(a1 in 2u64..12, e in 1u64..4, n in 3usize..6) {
        if let Ok(p) = ArithmeticParams::new(a1, e, n) {
            prop_assume!(p.d() <= 24);
            let s = p.sequence();
            let a = betti_affine(&s, Field::default()).unwrap();
            let b = betti_projective(&s, Field::default(), None).unwrap();
            let t = arithmetic_cm_type(a1, n);
            prop_assert_eq!(b.cm_type, t);
            prop_assert_eq!(a.cm_type, t);
            let sg = NumericalSemigroup::new(&s).unwrap();
            let m = HomogeneousMonoid::new(&s);
            let iso = are_isomorphic(
                &hasse_affine(&sg, &sg.apery_d()),
                &hasse_projective(&m, &m.apery_projective(100_000).unwrap()),
            ).is_some();
            prop_assert_eq!(iso, a1 + 2 > n as u64);
            if iso {
                prop_assert_eq!(a.totals, b.totals);
            }
        }
    }

    #[test]
    fn punctured_families(a1 in 2u64..14, e in 1u64..3, n in 4usize..7, r in 2usize..6) {
        prop_assume!(r < n && a1 >= r as u64);
        if let Ok(p) = ArithmeticParams::new(a1, e, n) {
            prop_assume!(p.d() <= 24);
            let s = punctured_sequence(&p, r).unwrap();
            let sg = NumericalSemigroup::new(&s).unwrap();
            let m = HomogeneousMonoid::new(&s);
            let iso = are_isomorphic(
                &hasse_affine(&sg, &sg.apery_d()),
                &hasse_projective(&m, &m.apery_projective(100_000).unwrap()),
            ).is_some();
            let predicted = punctured_iso_check(&p, r).unwrap();
            let cm = m.cm_by_residue_pairs().unwrap();
            if predicted {
                prop_assert!(iso);
                let a = betti_affine(&s, Field::default()).unwrap();
                let b = betti_projective(&s, Field::default(), None).unwrap();
                prop_assert_eq!(a.totals, b.totals);
            } else if cm {
                prop_assert!(!iso);
            }
        }
    }

    #[test]
    fn gorenstein_from_symmetric(gens in prop::collection::btree_set(3u64..9, 2..4)) {
        let gens: Vec<u64> = gens.into_iter().collect();
        if let Ok(t) = NumericalSemigroup::from_generators(&gens) {
            prop_assume!(t.is_symmetric() && !t.contains(2) && t.frobenius() <= 14);
            let c = gorenstein_construct(&t).unwrap();
            prop_assert!(gorenstein_check(&c.sequence).unwrap());
            let b = betti_projective(&c.sequence, Field::default(), None).unwrap();
            prop_assert_eq!(b.regularity, Some(3));
            prop_assert_eq!(b.cm_type, 1);
        }
    }

    #[test]
    fn reports_round_trip(s in sequences(14, 5)) {
        let report = analyze(&s, &AnalyzeOptions::default()).unwrap();
        let json = report.to_json();
        let back = CurveReport::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
    }
}
