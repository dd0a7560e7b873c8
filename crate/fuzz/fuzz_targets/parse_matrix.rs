#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        // The parser must never panic; it returns Ok or a positioned error.
        if let Ok(m) = maxplus::io::parse_matrix(text) {
            // Round-trip: written output re-parses to the same matrix.
            let written = maxplus::io::write_matrix(&m);
            let reparsed = maxplus::io::parse_matrix(&written).expect("writer output must parse");
            assert_eq!(reparsed, m);
        }
    }
});
