//! Replays the checked-in fuzz corpus through the same entry points the fuzz
//! targets exercise, so the seeds stay meaningful on a stable toolchain.

use std::fs;
use std::path::PathBuf;

use monocurve::input::{parse_list, parse_offsets, parse_sequence};
use monocurve::numsg::NumericalSemigroup;
use monocurve::report::CurveReport;

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| fs::read(entry.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn text(bytes: &[u8]) -> &str {
    std::str::from_utf8(bytes).unwrap()
}

#[test]
fn parser_seeds() {
    let lists: Vec<_> = seeds("parse_list").iter().map(|s| parse_list(text(s)).is_ok()).collect();
    assert!(lists.contains(&true) && lists.contains(&false));
    for s in seeds("parse_sequence") {
        if let Ok(seq) = parse_sequence(text(&s)) {
            assert_eq!(parse_sequence(&seq.to_string()).unwrap(), seq);
        }
    }
    for s in seeds("parse_offsets") {
        if let Ok(offsets) = parse_offsets(text(&s)) {
            assert_eq!(offsets[0], 0);
        }
    }
}

#[test]
fn report_seeds() {
    let mut parsed = 0;
    for s in seeds("report_json") {
        if let Ok(report) = CurveReport::from_json(text(&s)) {
            assert_eq!(report.to_json(), text(&s).trim_end());
            parsed += 1;
        }
    }
    assert!(parsed >= 2);
}

#[test]
fn semigroup_seeds() {
    for s in seeds("semigroup_bytes") {
        let gens: Vec<u64> = s.iter().take(6).map(|&b| u64::from(b)).collect();
        let Ok(sg) = NumericalSemigroup::from_generators(&gens) else { continue };
        assert!(!sg.member(sg.frobenius()));
        let m = sg.msg()[0];
        assert_eq!(sg.apery(m).unwrap().elements().len() as u64, m);
    }
}
