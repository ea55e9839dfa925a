//! Two-row colored partition diagrams and the category operations on them.
//!
//! Points are numbered `u1..uk` on the upper row and `l1..ll` on the lower
//! row, both left to right. A diagram stores one block label per point in
//! the order `u1..uk, l1..ll`; labels are kept canonical (first-occurrence
//! numbering), so structural equality is equality of diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::color::{Color, ColoredWord};
use crate::error::{Error, Result};

/// A leg of a diagram, 1-based as in the text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Upper(usize),
    Lower(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Upper(i) => write!(f, "u{i}"),
            Point::Lower(i) => write!(f, "l{i}"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (row, idx) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("invalid point `{s}`")))?;
        if idx == 0 {
            return Err(Error::Parse(format!("points are 1-based, got `{s}`")));
        }
        match row {
            "u" | "U" => Ok(Point::Upper(idx)),
            "l" | "L" => Ok(Point::Lower(idx)),
            _ => Err(Error::Parse(format!("invalid point `{s}`"))),
        }
    }
}

/// Which colors the upside-down turning operation assigns to the turned legs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InvolutionConvention {
    /// Legs keep their colors; matches `T(π*) = T(π)†` on Hom-spaces.
    #[default]
    PreserveColors,
    /// Legs swap colors while turning.
    ReverseColors,
}

/// A set partition of the `k + l` legs of a two-row diagram with colored legs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    upper: ColoredWord,
    lower: ColoredWord,
    labels: Vec<u16>,
}

fn canonical_labels<I: IntoIterator<Item = usize>>(raw: I) -> Vec<u16> {
    let mut map: Vec<(usize, u16)> = Vec::new();
    raw.into_iter()
        .map(|r| {
            if let Some(&(_, c)) = map.iter().find(|(x, _)| *x == r) {
                c
            } else {
                let c = map.len() as u16;
                map.push((r, c));
                c
            }
        })
        .collect()
}

impl PartitionDiagram {
    /// Builds a diagram from explicit blocks, validating that they partition all legs.
    pub fn new(upper: ColoredWord, lower: ColoredWord, blocks: &[Vec<Point>]) -> Result<Self> {
        let k = upper.len();
        let l = lower.len();
        let mut raw: Vec<Option<usize>> = vec![None; k + l];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            for &p in block {
                let idx = match p {
                    Point::Upper(i) if (1..=k).contains(&i) => i - 1,
                    Point::Lower(i) if (1..=l).contains(&i) => k + i - 1,
                    other => {
                        return Err(Error::MalformedPartition(format!(
                            "point {other} does not exist on a {k}/{l} diagram"
                        )))
                    }
                };
                if raw[idx].is_some() {
                    return Err(Error::MalformedPartition(format!(
                        "point {p} belongs to more than one block"
                    )));
                }
                raw[idx] = Some(b);
            }
        }
        if let Some(missing) = raw.iter().position(Option::is_none) {
            return Err(Error::MalformedPartition(format!(
                "point {} is not covered by any block",
                Self::point_at(k, missing)
            )));
        }
        Self::from_labels(upper, lower, raw.into_iter().map(|r| r.unwrap_or(0)).collect())
    }

    /// Builds a diagram from one (arbitrary) block label per leg, `u1..uk` then `l1..ll`.
    pub fn from_labels(upper: ColoredWord, lower: ColoredWord, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != upper.len() + lower.len() {
            return Err(Error::MalformedPartition(format!(
                "{} labels for {} points",
                labels.len(),
                upper.len() + lower.len()
            )));
        }
        if labels.len() > u16::MAX as usize {
            return Err(Error::MalformedPartition("too many points".into()));
        }
        Ok(PartitionDiagram {
            upper,
            lower,
            labels: canonical_labels(labels),
        })
    }

    pub(crate) fn from_raw_parts(upper: ColoredWord, lower: ColoredWord, labels: Vec<u16>) -> Self {
        debug_assert_eq!(labels.len(), upper.len() + lower.len());
        let labels = canonical_labels(labels.into_iter().map(usize::from));
        PartitionDiagram { upper, lower, labels }
    }

    /// The empty diagram, unit of the tensor product.
    pub fn empty() -> Self {
        PartitionDiagram {
            upper: ColoredWord::empty(),
            lower: ColoredWord::empty(),
            labels: Vec::new(),
        }
    }

    /// The straight strand on a single leg of the given color.
    pub fn identity(color: Color) -> Self {
        Self::identity_on(&ColoredWord::new(vec![color]))
    }

    /// Parallel straight strands on a word.
    pub fn identity_on(word: &ColoredWord) -> Self {
        let n = word.len();
        let labels = (0..n).chain(0..n).collect();
        Self::from_labels(word.clone(), word.clone(), labels).expect("identity is well formed")
    }

    /// Single vertical strand from an upper leg of color `top` to a lower leg of color `bottom`.
    /// With `top != bottom` this is a color-flip strand.
    pub fn strand(top: Color, bottom: Color) -> Self {
        Self::from_labels(
            ColoredWord::new(vec![top]),
            ColoredWord::new(vec![bottom]),
            vec![0, 0],
        )
        .expect("strand is well formed")
    }

    /// A cup: no upper legs, two lower legs joined.
    pub fn cup(left: Color, right: Color) -> Self {
        Self::from_labels(
            ColoredWord::empty(),
            ColoredWord::new(vec![left, right]),
            vec![0, 0],
        )
        .expect("cup is well formed")
    }

    /// A cap: two upper legs joined, no lower legs.
    pub fn cap(left: Color, right: Color) -> Self {
        Self::from_labels(
            ColoredWord::new(vec![left, right]),
            ColoredWord::empty(),
            vec![0, 0],
        )
        .expect("cap is well formed")
    }

    pub fn upper(&self) -> &ColoredWord {
        &self.upper
    }

    pub fn lower(&self) -> &ColoredWord {
        &self.lower
    }

    /// Canonical block label of every leg, `u1..uk` then `l1..ll`.
    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn num_points(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    fn point_at(k: usize, idx: usize) -> Point {
        if idx < k {
            Point::Upper(idx + 1)
        } else {
            Point::Lower(idx - k + 1)
        }
    }

    /// Blocks sorted by least point, points sorted within blocks.
    pub fn blocks(&self) -> Vec<Vec<Point>> {
        let k = self.upper.len();
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (idx, &b) in self.labels.iter().enumerate() {
            blocks[b as usize].push(Self::point_at(k, idx));
        }
        blocks
    }

    pub fn is_pairing(&self) -> bool {
        let mut sizes = vec![0usize; self.num_blocks()];
        for &b in &self.labels {
            sizes[b as usize] += 1;
        }
        sizes.iter().all(|&s| s == 2)
    }

    pub(crate) fn ensure_pairing(&self) -> Result<()> {
        if self.is_pairing() {
            Ok(())
        } else {
            Err(Error::NotAPairing(self.to_string()))
        }
    }

    /// Same blocks on different words of the same lengths.
    pub fn recolored(&self, upper: ColoredWord, lower: ColoredWord) -> Result<Self> {
        if upper.len() != self.upper.len() || lower.len() != self.lower.len() {
            return Err(Error::MalformedPartition(
                "recoloring must keep the row lengths".into(),
            ));
        }
        Ok(PartitionDiagram {
            upper,
            lower,
            labels: self.labels.clone(),
        })
    }

    /// Horizontal concatenation: `self` on the left, `other` on the right.
    pub fn tensor(&self, other: &PartitionDiagram) -> PartitionDiagram {
        let (k1, l1) = (self.upper.len(), self.lower.len());
        let (k2, _) = (other.upper.len(), other.lower.len());
        let off = self.num_blocks();
        let lab = |d: &PartitionDiagram, i: usize, shift: usize| d.labels[i] as usize + shift;
        let raw = (0..k1)
            .map(|i| lab(self, i, 0))
            .chain((0..k2).map(|i| lab(other, i, off)))
            .chain((0..l1).map(|i| lab(self, k1 + i, 0)))
            .chain((0..other.lower.len()).map(|i| lab(other, k2 + i, off)));
        PartitionDiagram {
            upper: self.upper.concat(&other.upper),
            lower: self.lower.concat(&other.lower),
            labels: canonical_labels(raw),
        }
    }

    /// Vertical concatenation with `self` on top of `bottom`.
    ///
    /// Returns the glued diagram and the number of closed components that
    /// lived entirely on the middle row and were removed.
    pub fn compose(&self, bottom: &PartitionDiagram) -> Result<(PartitionDiagram, usize)> {
        if self.lower != bottom.upper {
            return Err(Error::ColorMismatch {
                lower: self.lower.to_string(),
                upper: bottom.upper.to_string(),
            });
        }
        let k = self.upper.len();
        let l = self.lower.len();
        let m = bottom.lower.len();
        let mut uf = UnionFind::new(k + l + m);
        // top: points 0..k+l map to themselves; bottom: points 0..l+m map to k..k+l+m.
        let mut first = vec![usize::MAX; self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = i;
            } else {
                uf.union(first[b], i);
            }
        }
        let mut first = vec![usize::MAX; bottom.num_blocks()];
        for (i, &b) in bottom.labels.iter().enumerate() {
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = k + i;
            } else {
                uf.union(first[b], k + i);
            }
        }
        let outer: Vec<usize> = (0..k).chain(k + l..k + l + m).collect();
        let roots: Vec<usize> = outer.iter().map(|&p| uf.find(p)).collect();
        let mut middle_roots: Vec<usize> = (k..k + l)
            .map(|p| uf.find(p))
            .filter(|r| !roots.contains(r))
            .collect();
        middle_roots.sort_unstable();
        middle_roots.dedup();
        let diagram = PartitionDiagram {
            upper: self.upper.clone(),
            lower: bottom.lower.clone(),
            labels: canonical_labels(roots),
        };
        Ok((diagram, middle_roots.len()))
    }

    /// Upside-down turning with the default (color-preserving) convention.
    pub fn involute(&self) -> PartitionDiagram {
        self.involute_with(InvolutionConvention::PreserveColors)
    }

    pub fn involute_with(&self, convention: InvolutionConvention) -> PartitionDiagram {
        let k = self.upper.len();
        let raw = self.labels[k..]
            .iter()
            .chain(&self.labels[..k])
            .map(|&b| b as usize);
        let (upper, lower) = match convention {
            InvolutionConvention::PreserveColors => (self.lower.clone(), self.upper.clone()),
            InvolutionConvention::ReverseColors => (self.lower.inverted(), self.upper.inverted()),
        };
        PartitionDiagram {
            upper,
            lower,
            labels: canonical_labels(raw),
        }
    }

    /// Moves the leftmost upper leg to the leftmost lower position, inverting its color.
    pub fn rotate(&self) -> Result<PartitionDiagram> {
        let k = self.upper.len();
        if k == 0 {
            return Err(Error::EmptyUpperRow);
        }
        let up = self.upper.letters();
        let mut lower = Vec::with_capacity(self.lower.len() + 1);
        lower.push(up[0].inverted());
        lower.extend_from_slice(self.lower.letters());
        let raw = self.labels[1..k]
            .iter()
            .chain(std::iter::once(&self.labels[0]))
            .chain(&self.labels[k..])
            .map(|&b| b as usize);
        Ok(PartitionDiagram {
            upper: ColoredWord::new(up[1..].to_vec()),
            lower: ColoredWord::new(lower),
            labels: canonical_labels(raw),
        })
    }

    /// Inverse of [`rotate`](Self::rotate): leftmost lower leg moves to the leftmost upper position.
    pub fn unrotate(&self) -> Result<PartitionDiagram> {
        let k = self.upper.len();
        if self.lower.is_empty() {
            return Err(Error::MalformedPartition(
                "cannot unrotate a diagram with an empty lower row".into(),
            ));
        }
        let low = self.lower.letters();
        let mut upper = Vec::with_capacity(k + 1);
        upper.push(low[0].inverted());
        upper.extend_from_slice(self.upper.letters());
        let raw = std::iter::once(&self.labels[k])
            .chain(&self.labels[..k])
            .chain(&self.labels[k + 1..])
            .map(|&b| b as usize);
        Ok(PartitionDiagram {
            upper: ColoredWord::new(upper),
            lower: ColoredWord::new(low[1..].to_vec()),
            labels: canonical_labels(raw),
        })
    }

    /// Rotates every upper leg down; the result has an empty upper row and
    /// lower word `reverse(inverse(upper)) ++ lower`.
    pub fn flatten(&self) -> PartitionDiagram {
        let mut d = self.clone();
        while !d.upper.is_empty() {
            d = d.rotate().expect("upper row is nonempty");
        }
        d
    }

    /// Re-splits a one-row diagram so that its first `k` legs become the upper row.
    /// Inverse of [`flatten`](Self::flatten) for that `k`.
    pub fn unflatten(&self, k: usize) -> Result<PartitionDiagram> {
        if !self.upper.is_empty() || k > self.lower.len() {
            return Err(Error::MalformedPartition(format!(
                "cannot lift {k} legs of {self}"
            )));
        }
        let mut d = self.clone();
        for _ in 0..k {
            d = d.unrotate()?;
        }
        Ok(d)
    }

    /// True when two blocks cross in the flattened one-row picture.
    pub fn has_crossing(&self) -> bool {
        self.crossing_number() > 0
    }

    /// Number of crossing pairs of two-point blocks in the flattened picture.
    ///
    /// Blocks of other sizes are compared by their extreme points.
    pub fn crossing_number(&self) -> usize {
        let flat = self.flatten();
        let spans: Vec<(usize, usize)> = flat
            .blocks()
            .iter()
            .map(|b| {
                let idx: Vec<usize> = b.iter().map(|p| match p {
                    Point::Lower(i) => *i,
                    Point::Upper(i) => *i,
                }).collect();
                (idx[0], idx[idx.len() - 1])
            })
            .collect();
        let mut count = 0;
        for (i, &(p, q)) in spans.iter().enumerate() {
            for &(r, s) in &spans[i + 1..] {
                if (p < r && r < q && q < s) || (r < p && p < s && s < q) {
                    count += 1;
                }
            }
        }
        count
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{};", self.upper, self.lower)?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for (j, p) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str("-")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for PartitionDiagram {
    type Err = Error;

    /// Parses `UPPER|LOWER;BLOCKS`, e.g. `www|www;u1-l3,u2-l2,u3-l1`.
    fn from_str(s: &str) -> Result<Self> {
        let (words, blocks) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing `;` in `{s}`")))?;
        let (upper, lower) = words
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing `|` in `{s}`")))?;
        let upper: ColoredWord = upper.parse()?;
        let lower: ColoredWord = lower.parse()?;
        let blocks = blocks
            .split(',')
            .map(str::trim)
            .filter(|b| !b.is_empty())
            .map(|b| b.split('-').map(str::parse).collect::<Result<Vec<Point>>>())
            .collect::<Result<Vec<_>>>()?;
        PartitionDiagram::new(upper, lower, &blocks)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    upper: ColoredWord,
    lower: ColoredWord,
    blocks: Vec<Vec<String>>,
}

impl Serialize for PartitionDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            upper: self.upper.clone(),
            lower: self.lower.clone(),
            blocks: self
                .blocks()
                .iter()
                .map(|b| b.iter().map(Point::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartitionDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        let blocks = j
            .blocks
            .iter()
            .map(|b| b.iter().map(|p| p.parse()).collect::<Result<Vec<Point>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        PartitionDiagram::new(j.upper, j.lower, &blocks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color::{Black as B, White as W};

    fn d(s: &str) -> PartitionDiagram {
        s.parse().unwrap()
    }

    fn x3() -> PartitionDiagram {
        d("www|www;u1-l3,u2-l2,u3-l1")
    }

    #[test]
    fn make_diagram_examples() {
        let id = PartitionDiagram::new(
            "w".parse().unwrap(),
            "w".parse().unwrap(),
            &[vec![Point::Upper(1), Point::Lower(1)]],
        )
        .unwrap();
        assert_eq!(id, PartitionDiagram::identity(W));
        assert_eq!(x3().to_string(), "www|www;u1-l3,u2-l2,u3-l1");
        let cap = d("wb|;u1-u2");
        assert_eq!(cap, PartitionDiagram::cap(W, B));
        assert_eq!(cap.num_points(), 2);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let w: ColoredWord = "ww".parse().unwrap();
        let overlap = PartitionDiagram::new(
            w.clone(),
            ColoredWord::empty(),
            &[vec![Point::Upper(1), Point::Upper(2)], vec![Point::Upper(2)]],
        );
        assert!(matches!(overlap, Err(Error::MalformedPartition(_))));
        let missing =
            PartitionDiagram::new(w.clone(), ColoredWord::empty(), &[vec![Point::Upper(1)]]);
        assert!(matches!(missing, Err(Error::MalformedPartition(_))));
        let unknown = PartitionDiagram::new(
            w,
            ColoredWord::empty(),
            &[vec![Point::Upper(1), Point::Upper(2), Point::Lower(1)]],
        );
        assert!(matches!(unknown, Err(Error::MalformedPartition(_))));
        assert!("ww|ww".parse::<PartitionDiagram>().is_err());
        assert!("ww|;u1-u0".parse::<PartitionDiagram>().is_err());
    }

    #[test]
    fn tensor_examples() {
        let id = PartitionDiagram::identity(W);
        assert_eq!(id.tensor(&id), d("ww|ww;u1-l1,u2-l2"));
        let t = x3().tensor(&id);
        assert_eq!(t, d("wwww|wwww;u1-l3,u2-l2,u3-l1,u4-l4"));
        assert_eq!(PartitionDiagram::empty().tensor(&x3()), x3());
        assert_eq!(x3().tensor(&PartitionDiagram::empty()), x3());
    }

    #[test]
    fn compose_examples() {
        let (r, loops) = PartitionDiagram::cup(W, B)
            .compose(&PartitionDiagram::cap(W, B))
            .unwrap();
        assert_eq!((r, loops), (PartitionDiagram::empty(), 1));
        let (r, loops) = x3().compose(&x3()).unwrap();
        assert_eq!(r, PartitionDiagram::identity_on(&"www".parse().unwrap()));
        assert_eq!(loops, 0);
        let id = PartitionDiagram::identity(W);
        assert_eq!(id.compose(&id).unwrap(), (id.clone(), 0));
        assert!(matches!(
            id.compose(&PartitionDiagram::identity(B)),
            Err(Error::ColorMismatch { .. })
        ));
    }

    #[test]
    fn involute_examples() {
        assert_eq!(PartitionDiagram::cup(W, B).involute(), PartitionDiagram::cap(W, B));
        let id = PartitionDiagram::identity(W);
        assert_eq!(id.involute(), id);
        let h = d("wbbw|bwwb;u1-l3,u2-l4,u3-l1,u4-l2");
        assert_eq!(h.involute().involute(), h);
        let rev = PartitionDiagram::strand(W, B).involute_with(InvolutionConvention::ReverseColors);
        assert_eq!(rev, PartitionDiagram::strand(W, B));
        assert_eq!(PartitionDiagram::strand(W, B).involute(), PartitionDiagram::strand(B, W));
    }

    #[test]
    fn rotate_examples() {
        let r = PartitionDiagram::identity(W).rotate().unwrap();
        assert_eq!(r, d("|bw;l1-l2"));
        assert_eq!(PartitionDiagram::cup(W, B).rotate(), Err(Error::EmptyUpperRow));
        let r = x3().rotate().unwrap();
        assert_eq!((r.upper().len(), r.lower().len()), (2, 4));
        assert_eq!(r.unrotate().unwrap(), x3());
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(PartitionDiagram::identity(W).flatten(), PartitionDiagram::cup(B, W));
        // Hand iteration of three rotations on the half-classical crossing.
        assert_eq!(x3().flatten(), d("|bbbwww;l1-l4,l2-l5,l3-l6"));
        let one_row = d("|wbwb;l1-l4,l2-l3");
        assert_eq!(one_row.flatten(), one_row);
        assert_eq!(x3().flatten().unflatten(3).unwrap(), x3());
    }

    #[test]
    fn crossings() {
        assert!(x3().has_crossing());
        assert_eq!(x3().crossing_number(), 3);
        assert!(!d("|wwww;l1-l4,l2-l3").has_crossing());
        assert_eq!(d("|wwww;l1-l3,l2-l4").crossing_number(), 1);
    }

    #[test]
    fn text_and_json_round_trip() {
        for s in [
            "|;",
            "w|w;u1-l1",
            "www|www;u1-l3,u2-l2,u3-l1",
            "wbbw|bwwb;u1-l3,u2-l4,u3-l1,u4-l2",
            "ww|b;u1-u2-l1",
        ] {
            let p = d(s);
            assert_eq!(p.to_string(), s);
            let json = serde_json::to_string(&p).unwrap();
            let back: PartitionDiagram = serde_json::from_str(&json).unwrap();
            assert_eq!(back, p);
        }
        let json = serde_json::to_value(x3()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"upper": "www", "lower": "www",
                "blocks": [["u1","l3"],["u2","l2"],["u3","l1"]]})
        );
        // non-canonical block order parses to the canonical form
        assert_eq!(d("www|www;u3-l1,l3-u1,u2-l2"), x3());
    }
}
