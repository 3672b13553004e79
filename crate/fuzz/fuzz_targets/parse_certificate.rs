#![no_main]

use bistellar::flip::Certificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = Certificate::parse(text) {
        let again = Certificate::parse(&c.to_string()).expect("formatted certificate parses");
        assert_eq!(again.bijection, c.bijection);
    }
});
