//! Full analysis of one sequence, with every verdict cross-checked.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::gorenstein_check;
use crate::homog::{HomogeneousMonoid, Point2};
use crate::numsg::{NumericalSemigroup, Sequence};
use crate::poset::{are_isomorphic, graded_via_sumsets, hasse_affine, hasse_projective, is_graded};
use crate::resolve::{
    betti_affine, betti_projective, hilbert_numerator_affine, hilbert_numerator_projective,
    BettiTable, Field,
};
use crate::toric::{cm_from_basis, minimal_generators, sengupta_from_basis, toric_groebner};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub field: Field,
    pub normalize: bool,
    pub betti_bound: Option<u64>,
    /// Largest total degree searched for the projective Apery set.
    pub apery_bound: u64,
    pub skip_betti: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            field: Field::default(),
            normalize: false,
            betti_bound: None,
            apery_bound: 100_000,
            skip_betti: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub generators: Vec<u64>,
    pub msg: Vec<u64>,
    pub frobenius: i64,
    pub genus: usize,
    pub symmetric: bool,
}

impl SemigroupSummary {
    fn new(s: &NumericalSemigroup) -> Self {
        Self {
            generators: s.generators().terms().to_vec(),
            msg: s.msg().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            symmetric: s.is_symmetric(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperySummary {
    /// `Ap_1` in residue order modulo `d`.
    pub affine: Vec<u64>,
    /// `Ap_2` in residue order modulo `d`.
    pub dual: Vec<u64>,
    pub projective: Vec<Point2>,
    pub projective_size: usize,
    pub projective_degree_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSummary {
    pub affine_graded: bool,
    pub affine_graded_via_sumsets: bool,
    pub affine_hasse_edges: usize,
    pub projective_hasse_edges: usize,
    pub msg_contains_inner_terms: bool,
    pub isomorphic: bool,
    /// Pairs `(y, φ(y))` of an order isomorphism `Ap_1 → AP_S`.
    pub witness: Option<Vec<(u64, Point2)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmSummary {
    pub apery_size: bool,
    pub residue_pairs: bool,
    pub groebner: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricSummary {
    pub affine_groebner_size: usize,
    pub projective_groebner_size: usize,
    pub affine_minimal_generators: usize,
    pub projective_minimal_generators: usize,
    pub sengupta: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBetti {
    pub i: usize,
    pub degree: Vec<u64>,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSummary {
    pub totals: Vec<u64>,
    pub pd: usize,
    pub cm_type: u64,
    pub regularity: Option<u64>,
    pub field_char: u64,
    pub degree_bound: u64,
    pub graded: Vec<GradedBetti>,
}

impl From<&BettiTable> for BettiSummary {
    fn from(t: &BettiTable) -> Self {
        Self {
            totals: t.totals.clone(),
            pd: t.pd,
            cm_type: t.cm_type,
            regularity: t.regularity,
            field_char: t.field_char,
            degree_bound: t.degree_bound,
            graded: t
                .graded
                .iter()
                .map(|((i, b), v)| GradedBetti {
                    i: *i,
                    degree: b.clone(),
                    value: *v,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiComparison {
    pub affine: BettiSummary,
    pub projective: BettiSummary,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub input: Vec<u64>,
    pub sequence: Vec<u64>,
    pub divided_by: u64,
    pub semigroup: SemigroupSummary,
    pub dual: SemigroupSummary,
    pub apery: AperySummary,
    pub posets: PosetSummary,
    pub cm: bool,
    pub cm_tests: CmSummary,
    pub gorenstein: bool,
    pub toric: ToricSummary,
    pub betti: Option<BettiComparison>,
    /// Name of each cross-check and whether it held (all must hold).
    pub checks: BTreeMap<String, bool>,
}

impl CurveReport {
    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }
}

/// Runs the whole pipeline. Any disagreement between independent routes is
/// an [`Error::Inconsistent`].
pub fn analyze(input: &Sequence, opts: &AnalyzeOptions) -> Result<CurveReport> {
    let (seq, divided_by) = if opts.normalize {
        input.normalized()
    } else {
        (input.clone(), 1)
    };
    if seq.len() < 2 {
        return Err(Error::InvalidSequence("at least two terms are needed".into()));
    }
    let n = seq.len();
    let d = seq.d();
    let s1 = NumericalSemigroup::new(&seq)?;
    let s2 = NumericalSemigroup::new(&seq.dual())?;
    let monoid = HomogeneousMonoid::new(&seq);
    let ap1 = s1.apery(d)?;
    let ap2 = s2.apery(d)?;
    let aps = monoid.apery_projective(opts.apery_bound)?;

    let affine_poset = hasse_affine(&s1, &ap1);
    let projective_poset = hasse_projective(&monoid, &aps);
    let (graded, _) = is_graded(&s1, &ap1);
    let graded_sumsets = graded_via_sumsets(&s1, &ap1);
    let msg: BTreeSet<u64> = s1.msg().iter().copied().collect();
    let msg_condition = seq.terms()[..n - 1].iter().all(|a| msg.contains(a));
    let iso = are_isomorphic(&affine_poset, &projective_poset);
    let witness = iso.as_ref().map(|map| {
        let mut pairs: Vec<(u64, Point2)> = map
            .iter()
            .enumerate()
            .map(|(i, &k)| (affine_poset.elements()[i], projective_poset.elements()[k]))
            .collect();
        pairs.sort();
        pairs
    });

    let pairs = monoid.residue_pairs()?;
    let cm_pairs = pairs.iter().all(|&p| monoid.member2(p));
    let cm_size = aps.len() as u64 == d;
    let gb_affine = toric_groebner(&seq, false);
    let gb_projective = toric_groebner(&seq, true);
    let cm_gb = cm_from_basis(&gb_affine);
    let sengupta = sengupta_from_basis(&gb_affine);
    let mingens_affine = minimal_generators(&seq, false).len();
    let mingens_projective = minimal_generators(&seq, true).len();
    let gorenstein = gorenstein_check(&seq)?;

    let mut checks = BTreeMap::new();
    let mut check = |name: &str, ok: bool| {
        checks.insert(name.to_string(), ok);
    };
    check("cm_apery_size_vs_residue_pairs", cm_size == cm_pairs);
    check("cm_residue_pairs_vs_groebner", cm_pairs == cm_gb);
    if cm_pairs {
        let expected: BTreeSet<Point2> = pairs.iter().copied().collect();
        check("cm_apery_equals_residue_pairs", aps.elements == expected);
    }
    check("apery_size_at_least_d", aps.len() as u64 >= d);
    check("graded_factorizations_vs_sumsets", graded == graded_sumsets);
    check("iso_iff_cm_graded_msg", iso.is_some() == (cm_pairs && graded && msg_condition));
    check("sengupta_implies_graded_and_msg", !sengupta || (graded && msg_condition));
    if cm_pairs {
        check("sengupta_iff_iso_under_cm", sengupta == iso.is_some());
    }
    check("dual_apery_is_ap2", ap2.elements().len() as u64 == d);

    let betti = if opts.skip_betti {
        None
    } else {
        let affine = betti_affine(&seq, opts.field)?;
        let projective = betti_projective(&seq, opts.field, opts.betti_bound)?;
        let equal = affine.totals == projective.totals;
        check("iso_implies_betti_equal", iso.is_none() || equal);
        check("betti0_is_one", affine.totals[0] == 1 && projective.totals[0] == 1);
        check("affine_pd_is_n_minus_1", affine.pd == n - 1);
        check("projective_pd_is_n_minus_1_iff_cm", (projective.pd == n - 1) == cm_pairs);
        check(
            "projective_dominates_affine",
            affine.totals.iter().enumerate().all(|(i, &b)| projective.totals.get(i).copied().unwrap_or(0) >= b),
        );
        check(
            "betti1_equals_minimal_generators",
            affine.totals.get(1).copied().unwrap_or(0) == mingens_affine as u64
                && projective.totals.get(1).copied().unwrap_or(0) == mingens_projective as u64,
        );
        check(
            "gorenstein_iff_cm_type_one",
            gorenstein == (projective.pd == n - 1 && projective.cm_type == 1),
        );
        check(
            "k_polynomial_affine",
            affine.k_polynomial(d, affine.degree_bound)
                == hilbert_numerator_affine(&s1, affine.degree_bound),
        );
        check(
            "k_polynomial_projective",
            projective.k_polynomial(d, projective.degree_bound)
                == hilbert_numerator_projective(&seq, projective.degree_bound),
        );
        Some(BettiComparison {
            affine: (&affine).into(),
            projective: (&projective).into(),
            equal,
        })
    };

    let failed: Vec<&String> = checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
    if !failed.is_empty() {
        return Err(Error::Inconsistent(format!(
            "{seq}: failed checks {}",
            failed.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
        )));
    }

    Ok(CurveReport {
        input: input.terms().to_vec(),
        sequence: seq.terms().to_vec(),
        divided_by,
        semigroup: SemigroupSummary::new(&s1),
        dual: SemigroupSummary::new(&s2),
        apery: AperySummary {
            affine: ap1.elements().to_vec(),
            dual: ap2.elements().to_vec(),
            projective: aps.elements.iter().copied().collect(),
            projective_size: aps.len(),
            projective_degree_bound: aps.exhaustive_degree_bound,
        },
        posets: PosetSummary {
            affine_graded: graded,
            affine_graded_via_sumsets: graded_sumsets,
            affine_hasse_edges: affine_poset.hasse_edges().len(),
            projective_hasse_edges: projective_poset.hasse_edges().len(),
            msg_contains_inner_terms: msg_condition,
            isomorphic: iso.is_some(),
            witness,
        },
        cm: cm_pairs,
        cm_tests: CmSummary {
            apery_size: cm_size,
            residue_pairs: cm_pairs,
            groebner: cm_gb,
        },
        gorenstein,
        toric: ToricSummary {
            affine_groebner_size: gb_affine.len(),
            projective_groebner_size: gb_projective.len(),
            affine_minimal_generators: mingens_affine,
            projective_minimal_generators: mingens_projective,
            sengupta,
        },
        betti,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let seq = Sequence::new(vec![4, 9, 10]).unwrap();
        let report = analyze(&seq, &AnalyzeOptions::default()).unwrap();
        assert!(!report.cm);
        let json = report.to_json();
        let back = CurveReport::from_json(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn normalization() {
        let seq = Sequence::new(vec![6, 8]).unwrap();
        assert_eq!(analyze(&seq, &AnalyzeOptions::default()).unwrap_err(), Error::Gcd(2));
        let opts = AnalyzeOptions {
            normalize: true,
            ..Default::default()
        };
        let report = analyze(&seq, &opts).unwrap();
        assert_eq!(report.sequence, vec![3, 4]);
        assert_eq!(report.divided_by, 2);
        assert_eq!(report.betti.unwrap().affine.totals, vec![1, 1]);
    }
}
