#![no_main]

use bistellar::complex::{format_facets, parse_facets};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(k) = parse_facets(text) {
        let again = parse_facets(&format_facets(&k)).expect("formatted facets parse");
        assert_eq!(again, k);
    }
});
