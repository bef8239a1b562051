#![no_main]

use libfuzzer_sys::fuzz_target;
use monocurve::numsg::NumericalSemigroup;

// Each byte is a generator; at most six are used so construction stays cheap.
fuzz_target!(|data: &[u8]| {
    let gens: Vec<u64> = data.iter().take(6).map(|&b| u64::from(b)).collect();
    let Ok(s) = NumericalSemigroup::from_generators(&gens) else { return };
    let f = s.frobenius();
    assert!(!s.member(f));
    assert!((f + 1..f + 300).all(|x| s.member(x)));
    assert_eq!(s.genus(), s.gaps().len());
    let m = s.msg()[0];
    let ap = s.apery(m).unwrap();
    assert_eq!(ap.elements().len() as u64, m);
    for &y in ap.elements() {
        assert!(s.contains(y));
        assert!(y < m || !s.contains(y - m));
    }
});
