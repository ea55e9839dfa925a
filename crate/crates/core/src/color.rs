use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Leg color. White legs carry the fundamental representation, black legs its conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn inverted(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::White => 'w',
            Color::Black => 'b',
        }
    }

    pub fn from_char(c: char) -> Result<Color> {
        match c {
            'w' | 'W' | 'o' => Ok(Color::White),
            'b' | 'B' | 'x' => Ok(Color::Black),
            other => Err(Error::Parse(format!("invalid color letter `{other}`"))),
        }
    }

    /// Exponent of the torus generator attached to a leg: +1 white, -1 black.
    pub fn sign(self) -> i64 {
        match self {
            Color::White => 1,
            Color::Black => -1,
        }
    }
}

/// A finite word over {white, black}; the "colored integer" labelling one row of a diagram.
///
/// Words are ordered by length first, then lexicographically with white < black.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ColoredWord(Vec<Color>);

impl ColoredWord {
    pub fn new(letters: Vec<Color>) -> Self {
        ColoredWord(letters)
    }

    pub fn empty() -> Self {
        ColoredWord(Vec::new())
    }

    pub fn white(len: usize) -> Self {
        ColoredWord(vec![Color::White; len])
    }

    /// The alternating word `wbwb...` of the given length.
    pub fn alternating(len: usize) -> Self {
        ColoredWord(
            (0..len)
                .map(|i| if i % 2 == 0 { Color::White } else { Color::Black })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Color> {
        self.0.get(i).copied()
    }

    pub fn count(&self, color: Color) -> usize {
        self.0.iter().filter(|&&c| c == color).count()
    }

    pub fn inverted(&self) -> Self {
        ColoredWord(self.0.iter().map(|c| c.inverted()).collect())
    }

    pub fn reversed(&self) -> Self {
        ColoredWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &ColoredWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ColoredWord(v)
    }

    /// All words of the given length, in canonical order.
    pub fn all_of_length(len: usize) -> Vec<ColoredWord> {
        (0..1usize << len)
            .map(|bits| {
                ColoredWord(
                    (0..len)
                        .map(|i| {
                            if bits >> (len - 1 - i) & 1 == 1 {
                                Color::Black
                            } else {
                                Color::White
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

impl PartialOrd for ColoredWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ColoredWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<Color>> for ColoredWord {
    fn from(v: Vec<Color>) -> Self {
        ColoredWord(v)
    }
}

impl FromStr for ColoredWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s == "0" {
            return Ok(ColoredWord::empty());
        }
        s.chars().map(Color::from_char).collect::<Result<Vec<_>>>().map(ColoredWord)
    }
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for ColoredWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ColoredWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_is_an_involution() {
        for c in [Color::White, Color::Black] {
            assert_eq!(c.inverted().inverted(), c);
            assert_ne!(c.inverted(), c);
        }
    }

    #[test]
    fn parse_and_print() {
        let w: ColoredWord = "wbbw".parse().unwrap();
        assert_eq!(w.to_string(), "wbbw");
        assert_eq!(w.inverted().to_string(), "bwwb");
        assert_eq!("".parse::<ColoredWord>().unwrap(), ColoredWord::empty());
        assert!("wq".parse::<ColoredWord>().is_err());
    }

    #[test]
    fn order_is_length_first() {
        let a: ColoredWord = "bb".parse().unwrap();
        let b: ColoredWord = "www".parse().unwrap();
        assert!(a < b);
        let words = ColoredWord::all_of_length(2);
        let printed: Vec<_> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, ["ww", "wb", "bw", "bb"]);
    }
}
