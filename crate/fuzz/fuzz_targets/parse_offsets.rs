#![no_main]

use libfuzzer_sys::fuzz_target;
use monocurve::input::parse_offsets;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(offsets) = parse_offsets(text) {
            assert_eq!(offsets[0], 0);
            assert!(offsets.windows(2).all(|w| w[0] < w[1]));
        }
    }
});
