//! Move transcripts and their line format.
//!
//! ```text
//! STAR [0 1 2] 4
//! WELD 4 [0 1 2]
//! FLIP [0 1] ; [2 3]
//! XCHG [0] ; [1 2]
//! SHELL [1 2] ; [0]
//! UNSHELL [1 2] ; [0]
//! ```
//!
//! A `#` after a move starts its annotation; a line starting with `#` is a
//! comment and is dropped. Formatting a parsed canonical transcript
//! reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt;

use super::{apply_move, Move};
use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub mv: Move,
    pub note: Option<String>,
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.note {
            Some(n) => write!(f, "{} # {n}", self.mv),
            None => write!(f, "{}", self.mv),
        }
    }
}

/// An ordered sequence of moves, replayed left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Transcript {
    steps: Vec<Step>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_moves<I: IntoIterator<Item = Move>>(moves: I) -> Self {
        Transcript {
            steps: moves.into_iter().map(|mv| Step { mv, note: None }).collect(),
        }
    }

    pub fn push(&mut self, mv: Move) {
        self.steps.push(Step { mv, note: None });
    }

    pub fn push_noted(&mut self, mv: Move, note: impl Into<String>) {
        self.steps.push(Step {
            mv,
            note: Some(note.into()),
        });
    }

    pub fn extend(&mut self, other: Transcript) {
        self.steps.extend(other.steps);
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn moves(&self) -> impl Iterator<Item = &Move> {
        self.steps.iter().map(|s| &s.mv)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn truncate(&mut self, len: usize) {
        self.steps.truncate(len);
    }

    /// Reversed, with every move inverted. Notes stay with their moves.
    pub fn inverted(&self) -> Transcript {
        Transcript {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step {
                    mv: s.mv.invert(),
                    note: s.note.clone(),
                })
                .collect(),
        }
    }

    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Transcript {
        Transcript {
            steps: self
                .steps
                .iter()
                .map(|s| Step {
                    mv: s.mv.relabel(&f),
                    note: s.note.clone(),
                })
                .collect(),
        }
    }

    /// Sets the note of every step that has none.
    pub fn annotate(mut self, note: &str) -> Transcript {
        for s in &mut self.steps {
            if s.note.is_none() {
                s.note = Some(note.to_string());
            }
        }
        self
    }

    /// Labels appearing in the transcript.
    pub fn labels(&self) -> BTreeSet<VertexId> {
        self.moves().flat_map(Move::labels).collect()
    }

    /// Replays the transcript on `m`; see [`apply_transcript`].
    pub fn apply(&self, m: &Complex) -> Result<Complex> {
        apply_transcript(m, self)
    }

    pub fn parse(text: &str) -> Result<Transcript> {
        let mut steps = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (body, note) = match line.split_once('#') {
                Some((body, note)) => (body, Some(note.trim().to_string())),
                None => (line, None),
            };
            let mv = parse_move(body, idx + 1)?;
            steps.push(Step {
                mv,
                note: note.filter(|n| !n.is_empty()),
            });
        }
        Ok(Transcript { steps })
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            match &s.note {
                Some(n) => writeln!(f, "{} # {n}", s.mv)?,
                None => writeln!(f, "{}", s.mv)?,
            }
        }
        Ok(())
    }
}

impl FromIterator<Move> for Transcript {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        Transcript::from_moves(iter)
    }
}

/// Left fold of [`apply_move`]; stops at the first illegal step and reports
/// its zero-based index. The input is never partially modified.
pub fn apply_transcript(m: &Complex, t: &Transcript) -> Result<Complex> {
    let mut cur = m.clone();
    for (index, step) in t.steps.iter().enumerate() {
        cur = match apply_move(&cur, &step.mv) {
            Ok(next) => next,
            Err(Error::IllegalMove(report)) => return Err(Error::IllegalAtStep { index, report }),
            Err(e) => return Err(e),
        };
    }
    Ok(cur)
}

#[derive(Debug, PartialEq)]
enum Token {
    Word(String),
    Number(u32),
    Open,
    Close,
    Semicolon,
}

fn tokenize(s: &str, line: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '[' => {
                chars.next();
                out.push(Token::Open);
            }
            ']' => {
                chars.next();
                out.push(Token::Close);
            }
            ';' => {
                chars.next();
                out.push(Token::Semicolon);
            }
            c if c.is_ascii_digit() => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + d.len_utf8();
                    chars.next();
                }
                let n = s[i..end]
                    .parse::<u32>()
                    .map_err(|_| Error::parse(line, format!("label `{}` out of range", &s[i..end])))?;
                out.push(Token::Number(n));
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_alphabetic() {
                        break;
                    }
                    end = j + d.len_utf8();
                    chars.next();
                }
                out.push(Token::Word(s[i..end].to_string()));
            }
            other => return Err(Error::parse(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Cursor {
    tokens: std::vec::IntoIter<Token>,
    line: usize,
}

impl Cursor {
    fn next(&mut self, what: &str) -> Result<Token> {
        self.tokens
            .next()
            .ok_or_else(|| Error::parse(self.line, format!("expected {what}")))
    }

    fn number(&mut self) -> Result<u32> {
        match self.next("a vertex label")? {
            Token::Number(n) => Ok(n),
            t => Err(Error::parse(self.line, format!("expected a vertex label, found {t:?}"))),
        }
    }

    fn semicolon(&mut self) -> Result<()> {
        match self.next("`;`")? {
            Token::Semicolon => Ok(()),
            t => Err(Error::parse(self.line, format!("expected `;`, found {t:?}"))),
        }
    }

    fn simplex(&mut self) -> Result<Simplex> {
        match self.next("`[`")? {
            Token::Open => {}
            t => return Err(Error::parse(self.line, format!("expected `[`, found {t:?}"))),
        }
        let mut labels = Vec::new();
        loop {
            match self.next("`]`")? {
                Token::Close => break,
                Token::Number(n) => labels.push(n),
                t => return Err(Error::parse(self.line, format!("unexpected {t:?} in simplex"))),
            }
        }
        Simplex::new(labels).map_err(|e| Error::parse(self.line, e.to_string()))
    }

    fn pair(&mut self) -> Result<(Simplex, Simplex)> {
        let a = self.simplex()?;
        self.semicolon()?;
        let b = self.simplex()?;
        Ok((a, b))
    }

    fn finish(mut self) -> Result<()> {
        match self.tokens.next() {
            None => Ok(()),
            Some(t) => Err(Error::parse(self.line, format!("trailing {t:?}"))),
        }
    }
}

pub(crate) fn parse_move(text: &str, line: usize) -> Result<Move> {
    let mut cur = Cursor {
        tokens: tokenize(text, line)?.into_iter(),
        line,
    };
    let keyword = match cur.next("a move keyword")? {
        Token::Word(w) => w,
        t => return Err(Error::parse(line, format!("expected a move keyword, found {t:?}"))),
    };
    let mv = match keyword.as_str() {
        "STAR" => {
            let face = cur.simplex()?;
            let apex = cur.number()?;
            Move::Star { face, apex }
        }
        "WELD" => {
            let apex = cur.number()?;
            let face = cur.simplex()?;
            Move::Weld { apex, face }
        }
        "FLIP" => {
            let (a, b) = cur.pair()?;
            Move::Bistellar { a, b }
        }
        "XCHG" => {
            let (a, b) = cur.pair()?;
            Move::Exchange { a, b }
        }
        "SHELL" => {
            let (a, b) = cur.pair()?;
            Move::Shell { a, b }
        }
        "UNSHELL" => {
            let (a, b) = cur.pair()?;
            Move::Unshell { a, b }
        }
        other => return Err(Error::parse(line, format!("unknown move `{other}`"))),
    };
    cur.finish()?;
    Ok(mv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_every_keyword() {
        let text = "STAR [0 1 2] 4\nWELD 4 [0 1 2]\nFLIP [0 1] ; [2 3]\nXCHG [0] ; [1 2]\nSHELL [1 2] ; [0]\nUNSHELL [1 2] ; [0]\n";
        let t = Transcript::parse(text).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.to_string(), text);
    }

    #[test]
    fn notes_and_comments() {
        let text = "# header comment\nFLIP [0 1 2] ; [4] # ball-to-cone\n\nSTAR [0] 9\n";
        let t = Transcript::parse(text).unwrap();
        assert_eq!(t.steps()[0].note.as_deref(), Some("ball-to-cone"));
        assert_eq!(t.steps()[1].note, None);
        assert_eq!(t.to_string(), "FLIP [0 1 2] ; [4] # ball-to-cone\nSTAR [0] 9\n");
    }

    #[test]
    fn lenient_spacing() {
        let t = Transcript::parse("  FLIP [ 1 0 ];[3  2]\n").unwrap();
        assert_eq!(t.to_string(), "FLIP [0 1] ; [2 3]\n");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "HOP [0] ; [1]",
            "FLIP [0 1] [2]",
            "STAR [0 1]",
            "STAR [0 0] 3",
            "WELD [1] 2",
            "FLIP [0 1] ; [2] extra",
            "FLIP [0 1 ; [2]",
            "STAR [0] 4294967296",
            "STAR [0] -1",
        ] {
            assert!(
                matches!(Transcript::parse(bad), Err(Error::Parse { line: 1, .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn empty_transcript_is_identity() {
        let s = Complex::standard_simplex_boundary(3);
        assert_eq!(Transcript::new().apply(&s).unwrap(), s);
    }

    #[test]
    fn inverse_pair_is_identity() {
        let s = Complex::standard_simplex_boundary(3);
        let t = Transcript::from_moves([Move::star([0, 1], 4), Move::weld(4, [0, 1])]);
        assert_eq!(t.apply(&s).unwrap(), s);
    }

    #[test]
    fn two_one_to_three_moves() {
        let s = Complex::standard_simplex_boundary(3);
        let t = Transcript::from_moves([
            Move::bistellar([0, 1, 2], [4]),
            Move::bistellar([0, 1, 4], [5]),
        ]);
        assert_eq!(t.apply(&s).unwrap().f_vector().counts, vec![6, 12, 8]);
    }

    #[test]
    fn failure_reports_index() {
        let s = Complex::standard_simplex_boundary(3);
        let t = Transcript::from_moves([
            Move::bistellar([0, 1, 2], [4]),
            Move::bistellar([0, 1, 2], [5]),
        ]);
        assert!(matches!(
            t.apply(&s),
            Err(Error::IllegalAtStep { index: 1, .. })
        ));
    }

    #[test]
    fn inversion_reverses_order() {
        let m1 = Move::star([0], 5);
        let m2 = Move::bistellar([1, 2], [3, 4]);
        let t = Transcript::from_moves([m1.clone(), m2.clone()]);
        let inv: Vec<Move> = t.inverted().moves().cloned().collect();
        assert_eq!(inv, vec![m2.invert(), m1.invert()]);
    }

    fn simplex_strategy() -> impl Strategy<Value = Simplex> {
        proptest::collection::btree_set(0u32..40, 1..5).prop_map(Simplex::from_set)
    }

    fn move_strategy() -> impl Strategy<Value = Move> {
        (0u8..6, simplex_strategy(), simplex_strategy(), 0u32..100).prop_map(|(k, a, b, v)| match k {
            0 => Move::Star { face: a, apex: v },
            1 => Move::Weld { apex: v, face: a },
            2 => Move::Bistellar { a, b },
            3 => Move::Exchange { a, b },
            4 => Move::Shell { a, b },
            _ => Move::Unshell { a, b },
        })
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(moves in proptest::collection::vec(move_strategy(), 0..12),
                                      notes in proptest::collection::vec(proptest::option::of("[a-z0-9:.-]{1,12}"), 12)) {
            let mut t = Transcript::new();
            for (mv, note) in moves.into_iter().zip(notes) {
                match note {
                    Some(n) => t.push_noted(mv, n),
                    None => t.push(mv),
                }
            }
            let text = t.to_string();
            let back = Transcript::parse(&text).unwrap();
            prop_assert_eq!(&back, &t);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
