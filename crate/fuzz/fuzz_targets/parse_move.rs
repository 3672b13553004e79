#![no_main]

use bistellar::Move;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(mv) = text.parse::<Move>() {
        assert_eq!(mv.to_string().parse::<Move>().expect("formatted move parses"), mv);
        assert_eq!(mv.invert().invert(), mv);
    }
});
