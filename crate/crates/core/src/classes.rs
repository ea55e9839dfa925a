//! Named categories of pairings, given by predicates on the flattened diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::color::{Color, ColoredWord};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};

/// The nine pairing categories attached to the basic geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassName {
    P2,
    NC2,
    #[serde(rename = "calP2")]
    CalP2,
    #[serde(rename = "calNC2")]
    CalNC2,
    #[serde(rename = "P2star")]
    P2Star,
    #[serde(rename = "P2bar")]
    P2Bar,
    #[serde(rename = "calP2starstar")]
    CalP2StarStar,
    #[serde(rename = "P2barstar")]
    P2BarStar,
    #[serde(rename = "NC2bar")]
    NC2Bar,
}

impl ClassName {
    pub const ALL: [ClassName; 9] = [
        ClassName::P2,
        ClassName::NC2,
        ClassName::CalP2,
        ClassName::CalNC2,
        ClassName::P2Star,
        ClassName::P2Bar,
        ClassName::CalP2StarStar,
        ClassName::P2BarStar,
        ClassName::NC2Bar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassName::P2 => "P2",
            ClassName::NC2 => "NC2",
            ClassName::CalP2 => "calP2",
            ClassName::CalNC2 => "calNC2",
            ClassName::P2Star => "P2star",
            ClassName::P2Bar => "P2bar",
            ClassName::CalP2StarStar => "calP2starstar",
            ClassName::P2BarStar => "P2barstar",
            ClassName::NC2Bar => "NC2bar",
        }
    }

    /// Whether membership ignores leg colors entirely.
    pub fn is_color_blind(self) -> bool {
        matches!(self, ClassName::P2 | ClassName::NC2 | ClassName::P2Star)
    }

    /// Evaluates the predicate on a flattened pairing given as colors and
    /// pairs `(p, q)` with `p < q` (0-based positions).
    fn holds_on(self, colors: &[Color], pairs: &[(usize, usize)]) -> bool {
        let noncrossing = || {
            pairs.iter().enumerate().all(|(i, &(p, q))| {
                pairs[i + 1..]
                    .iter()
                    .all(|&(r, s)| !((p < r && r < q && q < s) || (r < p && p < s && s < q)))
            })
        };
        let matching = || pairs.iter().all(|&(p, q)| colors[p] != colors[q]);
        let even = || pairs.iter().all(|&(p, q)| (q - p) % 2 == 1);
        let balanced = || {
            let w = colors.iter().filter(|&&c| c == Color::White).count();
            2 * w == colors.len()
        };
        match self {
            ClassName::P2 => true,
            ClassName::NC2 => noncrossing(),
            ClassName::CalP2 => matching(),
            ClassName::CalNC2 => matching() && noncrossing(),
            ClassName::P2Star => even(),
            ClassName::P2Bar => balanced(),
            ClassName::CalP2StarStar => matching() && even(),
            ClassName::P2BarStar => balanced() && even(),
            ClassName::NC2Bar => balanced() && noncrossing(),
        }
    }

    /// Membership test. Fails with `NotAPairing` on diagrams with a block of size other than two.
    pub fn contains(self, d: &PartitionDiagram) -> Result<bool> {
        d.ensure_pairing()?;
        let (colors, labels) = flat_parts(d);
        Ok(self.holds_on(&colors, &pairs_of(&labels)))
    }
}

/// Flattened colors and block labels, computed directly rather than by rotating.
pub(crate) fn flat_parts(d: &PartitionDiagram) -> (Vec<Color>, Vec<u16>) {
    let k = d.upper().len();
    let colors = d
        .upper()
        .letters()
        .iter()
        .rev()
        .map(|c| c.inverted())
        .chain(d.lower().letters().iter().copied())
        .collect();
    let labels = d.labels()[..k]
        .iter()
        .rev()
        .chain(&d.labels()[k..])
        .copied()
        .collect();
    (colors, labels)
}

fn pairs_of(labels: &[u16]) -> Vec<(usize, usize)> {
    let mut first = vec![usize::MAX; labels.len()];
    let mut pairs = Vec::with_capacity(labels.len() / 2);
    for (i, &b) in labels.iter().enumerate() {
        let b = b as usize;
        if first[b] == usize::MAX {
            first[b] = i;
        } else {
            pairs.push((first[b], i));
        }
    }
    pairs
}

/// Free-function form of [`ClassName::contains`].
pub fn is_in_class(name: ClassName, d: &PartitionDiagram) -> Result<bool> {
    name.contains(d)
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '-' | ' '))
            .collect::<String>()
            .to_ascii_lowercase()
            .replace('*', "star");
        let found = match key.as_str() {
            "p2" => ClassName::P2,
            "nc2" => ClassName::NC2,
            "calp2" => ClassName::CalP2,
            "calnc2" => ClassName::CalNC2,
            "p2star" => ClassName::P2Star,
            "p2bar" => ClassName::P2Bar,
            "calp2starstar" => ClassName::CalP2StarStar,
            "p2barstar" => ClassName::P2BarStar,
            "nc2bar" => ClassName::NC2Bar,
            _ => return Err(Error::UnknownClass(s.to_string())),
        };
        Ok(found)
    }
}

/// Calls `f` with every perfect matching of `0..n`, as a label vector, in a fixed order.
pub(crate) fn for_each_matching(n: usize, mut f: impl FnMut(&[u16])) {
    fn go(labels: &mut Vec<u16>, next: u16, f: &mut dyn FnMut(&[u16])) {
        let Some(first) = labels.iter().position(|&x| x == u16::MAX) else {
            f(labels);
            return;
        };
        labels[first] = next;
        for j in first + 1..labels.len() {
            if labels[j] == u16::MAX {
                labels[j] = next;
                go(labels, next + 1, f);
                labels[j] = u16::MAX;
            }
        }
        labels[first] = u16::MAX;
    }
    if n % 2 == 1 {
        return;
    }
    let mut labels = vec![u16::MAX; n];
    go(&mut labels, 0, &mut f);
}

/// All pairings on the given words satisfying the class predicate, sorted canonically.
pub fn enumerate_pairings(
    upper: &ColoredWord,
    lower: &ColoredWord,
    name: ClassName,
) -> Vec<PartitionDiagram> {
    let mut out = Vec::new();
    let n = upper.len() + lower.len();
    for_each_matching(n, |labels| {
        let d = PartitionDiagram::from_raw_parts(upper.clone(), lower.clone(), labels.to_vec());
        if name.contains(&d).unwrap_or(false) {
            out.push(d);
        }
    });
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color::{Black as B, White as W};

    fn d(s: &str) -> PartitionDiagram {
        s.parse().unwrap()
    }

    fn w(s: &str) -> ColoredWord {
        s.parse().unwrap()
    }

    #[test]
    fn predicate_examples() {
        let x3 = d("www|www;u1-l3,u2-l2,u3-l1");
        assert!(ClassName::P2Star.contains(&x3).unwrap());
        assert!(!ClassName::NC2.contains(&x3).unwrap());
        let cup = PartitionDiagram::cup(W, B);
        assert!(ClassName::CalNC2.contains(&cup).unwrap());
        let cross = d("|wwww;l1-l3,l2-l4");
        assert!(ClassName::P2.contains(&cross).unwrap());
        assert!(!ClassName::NC2.contains(&cross).unwrap());
        assert!(!ClassName::P2Star.contains(&cross).unwrap());
        let triple = d("www|;u1-u2-u3");
        assert!(matches!(ClassName::P2.contains(&triple), Err(Error::NotAPairing(_))));
    }

    #[test]
    fn flat_parts_match_rotation() {
        let x = d("wbbw|bwwb;u1-l3,u2-l4,u3-l1,u4-l2");
        let flat = x.flatten();
        let (colors, labels) = flat_parts(&x);
        assert_eq!(flat.lower().letters(), &colors[..]);
        let rebuilt = PartitionDiagram::from_raw_parts(ColoredWord::empty(), flat.lower().clone(), labels);
        assert_eq!(rebuilt, flat);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_pairings(&ColoredWord::empty(), &w("wwwwww"), ClassName::P2).len(), 15);
        assert_eq!(enumerate_pairings(&ColoredWord::empty(), &w("wbwbwb"), ClassName::CalNC2).len(), 5);
        for c in ClassName::ALL {
            assert!(enumerate_pairings(&ColoredWord::empty(), &w("w"), c).is_empty());
        }
    }

    #[test]
    fn class_names_round_trip() {
        for c in ClassName::ALL {
            assert_eq!(c.name().parse::<ClassName>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.name()));
        }
        assert_eq!("P2*".parse::<ClassName>().unwrap(), ClassName::P2Star);
        assert!("P3".parse::<ClassName>().is_err());
    }
}
