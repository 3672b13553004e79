//! Plain-text facet lists.
//!
//! One facet per line as space-separated decimal labels. Lines whose first
//! non-blank character is `#` are comments; blank lines are ignored. A line
//! holding the single token `-` stands for the empty simplex, so that `{∅}`
//! survives a round trip.

use super::{Complex, Simplex};
use crate::error::{Error, Result};

pub fn parse_facets(text: &str) -> Result<Complex> {
    let mut simplices = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "-" {
            simplices.push(Simplex::empty());
            continue;
        }
        let labels = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::parse(idx + 1, format!("bad vertex label `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = Simplex::new(labels).map_err(|e| Error::parse(idx + 1, e.to_string()))?;
        simplices.push(s);
    }
    Ok(Complex::from_simplices(simplices))
}

pub fn format_facets(k: &Complex) -> String {
    let mut out = String::new();
    for f in k.facets() {
        if f.is_empty() {
            out.push_str("-\n");
            continue;
        }
        let line: Vec<String> = f.vertices().iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
