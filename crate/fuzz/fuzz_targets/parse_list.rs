#![no_main]

use libfuzzer_sys::fuzz_target;
use monocurve::input::parse_list;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(values) = parse_list(text) {
            let joined = values.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            assert_eq!(parse_list(&joined).unwrap(), values);
        }
    }
});
