#![no_main]

//! Input: a facet list, a line `---`, then a transcript. Small complexes
//! only, so that replay stays cheap.

use bistellar::complex::parse_facets;
use bistellar::{check_move, Transcript};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Some((facets, moves)) = text.split_once("\n---\n") else { return };
    let (Ok(k), Ok(t)) = (parse_facets(facets), Transcript::parse(moves)) else { return };
    if k.facet_count() > 64 || k.vertices().len() > 16 || k.dim() > 4 || t.len() > 16 {
        return;
    }
    if t.labels().iter().any(|&v| v > 64) {
        return;
    }
    let mut cur = k.clone();
    for mv in t.moves() {
        let report = check_move(&cur, mv);
        if !report.legal {
            return;
        }
        let Ok(next) = bistellar::apply_move(&cur, mv) else { panic!("legal move failed: {report}") };
        let back = bistellar::apply_move(&next, &mv.invert()).expect("inverse of a legal move is legal");
        assert_eq!(back, cur);
        cur = next;
    }
});
