#![no_main]

use bistellar::Transcript;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = Transcript::parse(text) {
        let again = Transcript::parse(&t.to_string()).expect("formatted transcript parses");
        assert_eq!(again, t);
        assert_eq!(t.inverted().inverted().moves().collect::<Vec<_>>(), t.moves().collect::<Vec<_>>());
    }
});
