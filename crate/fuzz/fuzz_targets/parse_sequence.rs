#![no_main]

use libfuzzer_sys::fuzz_target;
use monocurve::input::parse_sequence;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(seq) = parse_sequence(text) {
            assert!(seq.terms().windows(2).all(|w| w[0] < w[1]));
            assert!(seq.terms()[0] > 0);
            assert_eq!(parse_sequence(&seq.to_string()).unwrap(), seq);
        }
    }
});
