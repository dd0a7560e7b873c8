#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(s) = maxplus::io::parse_scalar(text) {
            // Canonical display re-parses to the same scalar.
            let shown = s.to_string();
            assert_eq!(maxplus::io::parse_scalar(&shown), Ok(s));
        }
    }
});
