//! Sweeps over shifted families `j + c_1 < ... < j + c_n` and appended
//! sequences `a_1 < ... < a_n < j`.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{cm_threshold, shifted, vu_bound};
use crate::homog::HomogeneousMonoid;
use crate::numsg::Sequence;
use crate::resolve::{betti_affine, betti_projective, Field};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftRow {
    pub j: u64,
    pub sequence: String,
    pub cm: bool,
    pub betti_affine: String,
    pub betti_projective: String,
    pub betti_equal: bool,
    pub j_ge_n: bool,
    pub j_ge_m: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendRow {
    pub j: u64,
    pub sequence: String,
    pub cm: bool,
    pub j_ge_m: bool,
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Threshold for the shifted family from the appended-term bound applied to
/// the dual chart: the dual of `j + c_1 < ... < j + c_n` is
/// `c_n - c_{n-1} < ... < c_n - c_2 < c_n < j + c_n`.
pub fn shift_cm_threshold(offsets: &[u64]) -> Result<u64> {
    vu_bound(offsets)?;
    let cn = *offsets.last().unwrap();
    let mut base: Vec<u64> = offsets[1..offsets.len() - 1].iter().rev().map(|c| cn - c).collect();
    base.push(cn);
    let m = cm_threshold(&Sequence::new(base)?);
    Ok(m.saturating_sub(cn))
}

/// One row per `j` in `j_min..=j_max`, sorted by `j`. Non-coprime shifted
/// sequences are divided by their gcd first.
pub fn shift_sweep(offsets: &[u64], j_min: u64, j_max: u64, field: Field) -> Result<Vec<ShiftRow>> {
    if offsets.len() < 2 {
        return Err(Error::InvalidSequence("need at least two offsets".into()));
    }
    let n_bound = vu_bound(offsets)?;
    let m_bound = shift_cm_threshold(offsets)?;
    let mut rows = (j_min.max(1)..=j_max)
        .into_par_iter()
        .map(|j| {
            let seq = shifted(offsets, j)?.normalized().0;
            let cm = HomogeneousMonoid::new(&seq).cm_by_residue_pairs()?;
            let affine = betti_affine(&seq, field)?;
            let projective = betti_projective(&seq, field, None)?;
            Ok(ShiftRow {
                j,
                sequence: seq.to_string(),
                cm,
                betti_affine: join(&affine.totals),
                betti_projective: join(&projective.totals),
                betti_equal: affine.totals == projective.totals,
                j_ge_n: j >= n_bound,
                j_ge_m: j >= m_bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.j);
    Ok(rows)
}

/// One row per `j` in `j_min..=j_max` (all above `a_n`) for `base ∪ {j}`.
pub fn append_sweep(base: &Sequence, j_min: u64, j_max: u64) -> Result<Vec<AppendRow>> {
    if j_min <= base.d() {
        return Err(Error::InvalidSequence(format!(
            "appended term must exceed {}, got {j_min}",
            base.d()
        )));
    }
    let m_bound = cm_threshold(base);
    let mut rows = (j_min..=j_max)
        .into_par_iter()
        .map(|j| {
            let mut terms = base.terms().to_vec();
            terms.push(j);
            let seq = Sequence::new(terms)?.normalized().0;
            Ok(AppendRow {
                j,
                sequence: seq.to_string(),
                cm: HomogeneousMonoid::new(&seq).cm_by_residue_pairs()?,
                j_ge_m: j >= m_bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.j);
    Ok(rows)
}

pub fn write_csv<W: Write, R: Serialize>(rows: &[R], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| Error::Parse(format!("csv: {e}")))?;
    }
    writer.flush().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intro_examples() {
        let rows = shift_sweep(&[0, 1, 2, 3, 4, 5], 4, 4, Field::default()).unwrap();
        assert_eq!(rows[0].sequence, "4,5,6,7,8,9");
        assert!(!rows[0].betti_equal);
        let rows = shift_sweep(&[0, 1, 2, 3, 4], 4, 4, Field::default()).unwrap();
        assert!(rows[0].betti_equal);
        assert_eq!(rows[0].betti_affine, "1,7,14,11,3");
    }

    #[test]
    fn csv_header() {
        let rows = shift_sweep(&[0, 1], 2, 3, Field::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "j,sequence,cm,betti_affine,betti_projective,betti_equal,j_ge_n,j_ge_m"
        );
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn append_rows() {
        let base = Sequence::new(vec![4, 9, 10]).unwrap();
        let rows = append_sweep(&base, 73, 75).unwrap();
        assert!(rows.iter().all(|r| r.cm && r.j_ge_m));
        assert!(append_sweep(&base, 10, 12).is_err());
    }

    #[test]
    fn shift_threshold() {
        // dual base of offsets (0,1,2,3,4,5) is 1,2,3,4,5
        assert_eq!(shift_cm_threshold(&[0, 1, 2, 3, 4, 5]).unwrap(), 5 + 4 * 10 - 5);
    }
}
