#![no_main]

use libfuzzer_sys::fuzz_target;
use monocurve::report::CurveReport;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(report) = CurveReport::from_json(text) {
            let once = report.to_json();
            let again = CurveReport::from_json(&once).unwrap();
            assert_eq!(again.to_json(), once);
        }
    }
});
