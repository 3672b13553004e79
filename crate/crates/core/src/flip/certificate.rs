//! Certificates of bistellar equivalence and their text format.
//!
//! ```text
//! [first]
//! FLIP [0 1 2] ; [4]
//! [second]
//! [bijection]
//! 0 3
//! 1 0
//! ```
//!
//! Replaying `first` on the first complex and `second` on the second, then
//! renaming the first endpoint by the bijection, must give identical face
//! sets.

use std::collections::HashMap;
use std::fmt;

use super::{reduce, Schedule};
use crate::complex::{isomorphic, Bijection, Complex};
use crate::error::{Error, Result};
use crate::moves::Transcript;
use crate::recognize::homology;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub first: Transcript,
    pub second: Transcript,
    /// Maps the vertices of the first endpoint onto those of the second.
    pub bijection: Bijection,
}

/// Outcome of [`prove_equivalent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Proved(Certificate),
    /// The homology profiles differ, so the complexes are not equivalent.
    Disproved,
    /// The search ended without a certificate; this is not a disproof.
    Unknown,
}

impl Equivalence {
    pub fn certificate(self) -> Option<Certificate> {
        match self {
            Equivalence::Proved(c) => Some(c),
            _ => None,
        }
    }
}

/// Reduces both complexes with `sched` and compares the endpoints.
pub fn prove_equivalent(m1: &Complex, m2: &Complex, sched: &Schedule) -> Result<Equivalence> {
    if m1.dim() != m2.dim() || homology(m1)? != homology(m2)? {
        return Ok(Equivalence::Disproved);
    }
    let r1 = reduce(m1, sched);
    let r2 = reduce(m2, sched);
    Ok(match isomorphic(&r1.complex, &r2.complex) {
        Some(bijection) => Equivalence::Proved(Certificate {
            first: r1.transcript,
            second: r2.transcript,
            bijection,
        }),
        None => Equivalence::Unknown,
    })
}

/// Replays a certificate; `Ok(())` means it proves `m1 ≈ m2`.
pub fn verify_certificate(m1: &Complex, m2: &Complex, cert: &Certificate) -> Result<()> {
    let e1 = cert.first.apply(m1)?;
    let e2 = cert.second.apply(m2)?;
    let map: HashMap<u32, u32> = cert.bijection.iter().copied().collect();
    let vertices = e1.vertices();
    if map.len() != cert.bijection.len() || vertices.iter().any(|v| !map.contains_key(v)) {
        return Err(Error::InvalidWitness(
            "bijection does not cover the first endpoint".into(),
        ));
    }
    let mut images: Vec<u32> = vertices.iter().map(|v| map[v]).collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != vertices.len() {
        return Err(Error::InvalidWitness("bijection is not injective".into()));
    }
    if e1.relabel(|v| map[&v]) != e2 {
        return Err(Error::InvalidWitness("endpoints differ after relabeling".into()));
    }
    Ok(())
}

impl Certificate {
    pub fn parse(text: &str) -> Result<Certificate> {
        #[derive(PartialEq)]
        enum Section {
            None,
            First,
            Second,
            Bijection,
        }
        let mut section = Section::None;
        let mut first = String::new();
        let mut second = String::new();
        let mut bijection = Vec::new();
        let mut seen = [false; 3];
        let mut first_line = 0;
        let mut second_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            match line {
                "[first]" | "[second]" | "[bijection]" => {
                    let (s, i) = match line {
                        "[first]" => (Section::First, 0),
                        "[second]" => (Section::Second, 1),
                        _ => (Section::Bijection, 2),
                    };
                    if seen[i] {
                        return Err(Error::parse(lineno, format!("repeated section {line}")));
                    }
                    seen[i] = true;
                    if i == 0 {
                        first_line = lineno;
                    } else if i == 1 {
                        second_line = lineno;
                    }
                    section = s;
                    continue;
                }
                _ => {}
            }
            match section {
                // Every line is kept so transcript line numbers stay aligned.
                Section::First => {
                    first.push_str(raw);
                    first.push('\n');
                }
                Section::Second => {
                    second.push_str(raw);
                    second.push('\n');
                }
                Section::Bijection => {
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let mut parts = line.split_whitespace();
                    let mut label = |what: &str| -> Result<u32> {
                        parts
                            .next()
                            .ok_or_else(|| Error::parse(lineno, format!("missing {what} label")))?
                            .parse::<u32>()
                            .map_err(|_| Error::parse(lineno, format!("bad {what} label")))
                    };
                    let from = label("source")?;
                    let to = label("target")?;
                    if parts.next().is_some() {
                        return Err(Error::parse(lineno, "expected two labels"));
                    }
                    bijection.push((from, to));
                }
                Section::None => {
                    if !line.is_empty() && !line.starts_with('#') {
                        return Err(Error::parse(lineno, "content before the first section"));
                    }
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::parse(
                text.lines().count().max(1),
                "missing [first], [second] or [bijection] section",
            ));
        }
        let shift = |e: Error, base: usize| match e {
            Error::Parse { line, message } => Error::Parse {
                line: line + base,
                message,
            },
            e => e,
        };
        let first = Transcript::parse(&first).map_err(|e| shift(e, first_line))?;
        let second = Transcript::parse(&second).map_err(|e| shift(e, second_line))?;
        bijection.sort_unstable();
        Ok(Certificate {
            first,
            second,
            bijection,
        })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[first]")?;
        write!(f, "{}", self.first)?;
        writeln!(f, "[second]")?;
        write!(f, "{}", self.second)?;
        writeln!(f, "[bijection]")?;
        for (a, b) in &self.bijection {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}
