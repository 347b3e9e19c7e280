//! Words over the generators `S`, `T`, `L`, `R` and their inverses.
//!
//! Grammar: tokens `S`, `T`, `t` (T⁻¹), `L`, `l` (L⁻¹), `R` (= T), `r`
//! (= T⁻¹), each optionally followed by `^` and a signed decimal exponent.
//! Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::ProjectiveMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    T,
    TInv,
    L,
    LInv,
    R,
    RInv,
}

impl Letter {
    fn from_char(ch: char) -> Option<Letter> {
        Some(match ch {
            'S' => Letter::S,
            'T' => Letter::T,
            't' => Letter::TInv,
            'L' => Letter::L,
            'l' => Letter::LInv,
            'R' => Letter::R,
            'r' => Letter::RInv,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::S => 'S',
            Letter::T => 'T',
            Letter::TInv => 't',
            Letter::L => 'L',
            Letter::LInv => 'l',
            Letter::R => 'R',
            Letter::RInv => 'r',
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::S => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
            Letter::L => Letter::LInv,
            Letter::LInv => Letter::L,
            Letter::R => Letter::RInv,
            Letter::RInv => Letter::R,
        }
    }

    pub fn matrix(self) -> ProjectiveMatrix {
        match self {
            Letter::S => ProjectiveMatrix::s(),
            Letter::T | Letter::R => ProjectiveMatrix::t(),
            Letter::TInv | Letter::RInv => ProjectiveMatrix::t_inv(),
            Letter::L => ProjectiveMatrix::l(),
            Letter::LInv => ProjectiveMatrix::l_inv(),
        }
    }

    /// R and T are the same generator.
    fn generator(self) -> (u8, i8) {
        match self {
            Letter::S => (0, 1),
            Letter::T | Letter::R => (1, 1),
            Letter::TInv | Letter::RInv => (1, -1),
            Letter::L => (2, 1),
            Letter::LInv => (2, -1),
        }
    }

    fn cancels(self, next: Letter) -> bool {
        let (g1, e1) = self.generator();
        let (g2, e2) = next.generator();
        g1 == g2 && (g1 == 0 || e1 == -e2)
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from letters, cancelling adjacent inverse pairs.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&prev) if prev.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        GroupWord { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> ProjectiveMatrix {
        self.letters
            .iter()
            .fold(ProjectiveMatrix::identity(), |acc, l| acc.compose(&l.matrix()))
    }

    pub fn inverse(&self) -> Self {
        GroupWord::from_letters(self.letters.iter().rev().map(|l| l.inverse()))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

pub fn parse_word(text: &str) -> Result<GroupWord> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut letters = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i >= chars.len() {
            break;
        }
        let (pos, ch) = chars[i];
        let letter = Letter::from_char(ch).ok_or_else(|| Error::Syntax {
            position: pos,
            message: format!("unexpected character {ch:?}"),
        })?;
        i += 1;
        skip_ws(&mut i);
        let mut exponent: i64 = 1;
        if i < chars.len() && chars[i].1 == '^' {
            i += 1;
            skip_ws(&mut i);
            let start = i;
            let start_pos = chars.get(i).map_or(text.len(), |c| c.0);
            if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                i += 1;
            }
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let end_pos = chars.get(i).map_or(text.len(), |c| c.0);
            let digits = &text[start_pos..end_pos];
            exponent = digits.parse().map_err(|_| Error::Syntax {
                position: chars.get(start).map_or(text.len(), |c| c.0),
                message: format!("malformed exponent {digits:?}"),
            })?;
        }
        let token = if exponent < 0 { letter.inverse() } else { letter };
        letters.extend(std::iter::repeat_n(token, exponent.unsigned_abs() as usize));
    }
    Ok(GroupWord::from_letters(letters))
}

/// Parses either a word or a matrix literal `[a,b,c,d]`.
pub fn parse_element(text: &str) -> Result<ProjectiveMatrix> {
    let trimmed = text.trim();
    if let Some(inner) = trimmed.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| Error::Syntax {
            position: text.len(),
            message: "unterminated matrix literal".into(),
        })?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Syntax { position: 0, message: "matrix literal needs four entries".into() });
        }
        let mut e = Vec::with_capacity(4);
        for p in parts {
            let v: num_bigint::BigInt = p.parse().map_err(|_| Error::Syntax {
                position: 0,
                message: format!("bad integer {p:?}"),
            })?;
            e.push(v);
        }
        let mut it = e.into_iter();
        let (a, b, c, d) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        return ProjectiveMatrix::new(a, b, c, d);
    }
    Ok(parse_word(text)?.evaluate())
}

pub fn evaluate(w: &GroupWord) -> ProjectiveMatrix {
    w.evaluate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn parses_example_words() {
        assert_eq!(parse_word("TSTT").unwrap().letters(), &[T, S, T, T]);
        assert!(parse_word("").unwrap().is_empty());
        assert_eq!(
            parse_word("T^3 S T^-2 T^-1").unwrap().letters(),
            &[T, T, T, S, TInv, TInv, TInv]
        );
    }

    #[test]
    fn free_reduction() {
        assert!(parse_word("TtSSRr").unwrap().is_empty());
        assert!(parse_word("Rt").unwrap().is_empty());
        assert_eq!(parse_word("LlT").unwrap().letters(), &[T]);
        assert_eq!(parse_word("S^-1").unwrap().letters(), &[S]);
        assert!(parse_word("T^0").unwrap().is_empty());
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_word("TXS"), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_word("T^"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("T^-"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("T^x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn evaluation() {
        let m = |a, b, c, d| ProjectiveMatrix::from_i64(a, b, c, d).unwrap();
        assert_eq!(parse_word("S").unwrap().evaluate(), m(0, -1, 1, 0));
        assert_eq!(parse_word("").unwrap().evaluate(), ProjectiveMatrix::identity());
        assert_eq!(parse_word("TSTT").unwrap().evaluate(), m(1, 1, 1, 2));
        assert_eq!(parse_word("TTTSTTT").unwrap().evaluate(), m(3, 8, 1, 3));
        assert_eq!(parse_word("LR").unwrap().evaluate(), m(1, 1, 1, 2));
        assert_eq!(parse_word("RRLRR").unwrap().evaluate(), m(3, 8, 1, 3));
    }

    #[test]
    fn render_round_trip() {
        for s in ["TSTT", "tSLlR", "T^5 S r^2 L"] {
            let w = parse_word(s).unwrap();
            assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn matrix_literals() {
        assert_eq!(parse_element("[1, 1, 1, 2]").unwrap(), parse_element("TSTT").unwrap());
        assert!(parse_element("[1,1,1,1]").is_err());
        assert!(parse_element("[1,1,1]").is_err());
    }
}
