//! Fixed-size diagram encoding for the closure engine: at most 16 legs,
//! one color bit and one 4-bit block label per leg.

use crate::color::{Color, ColoredWord};
use crate::diagram::PartitionDiagram;

pub(crate) const MAX_PACKED_POINTS: usize = 16;

/// Bit `i` of `colors` is set when leg `i` is black; legs are ordered `u1..uk, l1..ll`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Packed {
    pub k: u8,
    pub l: u8,
    pub colors: u16,
    pub labels: u64,
}

/// A row key: word length and color bits.
pub(crate) type WordKey = (u8, u16);

#[inline]
fn mask(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

impl Packed {
    #[inline]
    pub fn n(self) -> usize {
        self.k as usize + self.l as usize
    }

    #[inline]
    pub fn label(self, i: usize) -> u8 {
        ((self.labels >> (4 * i)) & 0xF) as u8
    }

    #[inline]
    pub fn color_bit(self, i: usize) -> u16 {
        (self.colors >> i) & 1
    }

    pub fn upper_key(self) -> WordKey {
        (self.k, self.colors & mask(self.k as usize))
    }

    pub fn lower_key(self) -> WordKey {
        (self.l, (self.colors >> self.k) & mask(self.l as usize))
    }

    pub fn num_blocks(self) -> usize {
        (0..self.n()).map(|i| self.label(i) as usize + 1).max().unwrap_or(0)
    }

    /// Canonicalizes raw labels (any values below 64) into first-occurrence order.
    pub fn encode(k: usize, l: usize, colors: u16, raw: &[u8]) -> Packed {
        debug_assert!(k + l <= MAX_PACKED_POINTS && raw.len() == k + l);
        let mut map = [u8::MAX; 64];
        let mut next = 0u8;
        let mut labels = 0u64;
        for (i, &r) in raw.iter().enumerate() {
            let slot = &mut map[r as usize];
            if *slot == u8::MAX {
                *slot = next;
                next += 1;
            }
            labels |= (*slot as u64) << (4 * i);
        }
        Packed {
            k: k as u8,
            l: l as u8,
            colors: colors & mask(k + l),
            labels,
        }
    }

    pub fn from_diagram(d: &PartitionDiagram) -> Option<Packed> {
        let (k, l) = (d.upper().len(), d.lower().len());
        if k + l > MAX_PACKED_POINTS {
            return None;
        }
        let mut colors = 0u16;
        for (i, c) in d.upper().letters().iter().chain(d.lower().letters()).enumerate() {
            if *c == Color::Black {
                colors |= 1 << i;
            }
        }
        let raw: Vec<u8> = d.labels().iter().map(|&x| x as u8).collect();
        Some(Packed::encode(k, l, colors, &raw))
    }

    pub fn to_diagram(self) -> PartitionDiagram {
        let color = |i: usize| if self.color_bit(i) == 1 { Color::Black } else { Color::White };
        let (k, n) = (self.k as usize, self.n());
        let upper = ColoredWord::new((0..k).map(color).collect());
        let lower = ColoredWord::new((k..n).map(color).collect());
        let labels = (0..n).map(|i| self.label(i) as u16).collect();
        PartitionDiagram::from_raw_parts(upper, lower, labels)
    }

    pub fn with_colors(self, colors: u16) -> Packed {
        Packed {
            colors: colors & mask(self.n()),
            ..self
        }
    }

    pub fn tensor(self, other: Packed) -> Packed {
        let (k1, l1, k2, l2) = (self.k as usize, self.l as usize, other.k as usize, other.l as usize);
        let off = self.num_blocks() as u8;
        let mut raw = [0u8; MAX_PACKED_POINTS];
        let mut colors = 0u16;
        let mut pos = 0;
        let mut push = |lab: u8, bit: u16| {
            raw[pos] = lab;
            colors |= bit << pos;
            pos += 1;
        };
        for i in 0..k1 {
            push(self.label(i), self.color_bit(i));
        }
        for i in 0..k2 {
            push(other.label(i) + off, other.color_bit(i));
        }
        for i in k1..k1 + l1 {
            push(self.label(i), self.color_bit(i));
        }
        for i in k2..k2 + l2 {
            push(other.label(i) + off, other.color_bit(i));
        }
        Packed::encode(k1 + k2, l1 + l2, colors, &raw[..k1 + k2 + l1 + l2])
    }

    /// Vertical gluing with `self` on top; `None` when the rows do not match.
    /// Loops are discarded.
    pub fn compose(self, bottom: Packed) -> Option<Packed> {
        if self.lower_key() != bottom.upper_key() {
            return None;
        }
        let (k, l, m) = (self.k as usize, self.l as usize, bottom.l as usize);
        // Nodes 0..16 are top blocks, 16..32 are bottom blocks.
        let mut parent: [u8; 32] = std::array::from_fn(|i| i as u8);
        fn find(p: &mut [u8; 32], mut x: u8) -> u8 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for j in 0..l {
            let a = find(&mut parent, self.label(k + j));
            let b = find(&mut parent, 16 + bottom.label(j));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
        let mut raw = [0u8; MAX_PACKED_POINTS];
        for (i, slot) in raw.iter_mut().enumerate().take(k) {
            *slot = find(&mut parent, self.label(i));
        }
        for j in 0..m {
            raw[k + j] = find(&mut parent, 16 + bottom.label(l + j));
        }
        let colors = (self.colors & mask(k)) | (((bottom.colors >> l) & mask(m)) << k);
        Some(Packed::encode(k, m, colors, &raw[..k + m]))
    }

    pub fn involute(self) -> Packed {
        let (k, l) = (self.k as usize, self.l as usize);
        let mut raw = [0u8; MAX_PACKED_POINTS];
        let mut colors = 0u16;
        for (pos, i) in (k..k + l).chain(0..k).enumerate() {
            raw[pos] = self.label(i);
            colors |= self.color_bit(i) << pos;
        }
        Packed::encode(l, k, colors, &raw[..k + l])
    }

    /// Leftmost upper leg becomes the leftmost lower leg with inverted color.
    pub fn rotate(self) -> Option<Packed> {
        let (k, l) = (self.k as usize, self.l as usize);
        if k == 0 {
            return None;
        }
        let mut raw = [0u8; MAX_PACKED_POINTS];
        let mut colors = 0u16;
        for (pos, i) in (1..k).chain(std::iter::once(0)).chain(k..k + l).enumerate() {
            raw[pos] = self.label(i);
            let bit = if i == 0 { self.color_bit(0) ^ 1 } else { self.color_bit(i) };
            colors |= bit << pos;
        }
        Some(Packed::encode(k - 1, l + 1, colors, &raw[..k + l]))
    }

    /// Leftmost lower leg becomes the leftmost upper leg with inverted color.
    #[cfg(test)]
    pub fn unrotate(self) -> Option<Packed> {
        self.involute().rotate().map(Packed::involute)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Packed {
        Packed::from_diagram(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        for s in ["|;", "w|w;u1-l1", "wbbw|bwwb;u1-l3,u2-l4,u3-l1,u4-l2", "ww|b;u1-u2-l1"] {
            let d: PartitionDiagram = s.parse().unwrap();
            assert_eq!(p(s).to_diagram(), d);
        }
    }

    #[test]
    fn operations_agree_with_diagram_ops() {
        let x3 = "www|www;u1-l3,u2-l2,u3-l1";
        let h = "wbbw|bwwb;u1-l3,u2-l4,u3-l1,u4-l2";
        let dx: PartitionDiagram = x3.parse().unwrap();
        let dh: PartitionDiagram = h.parse().unwrap();
        assert_eq!(p(x3).tensor(p(h)).to_diagram(), dx.tensor(&dh));
        assert_eq!(p(h).involute().to_diagram(), dh.involute());
        assert_eq!(p(h).rotate().unwrap().to_diagram(), dh.rotate().unwrap());
        assert_eq!(p(h).unrotate().unwrap().to_diagram(), dh.unrotate().unwrap());
        assert_eq!(p(x3).compose(p(x3)).unwrap().to_diagram(), dx.compose(&dx).unwrap().0);
        assert!(p(x3).compose(p(h)).is_none());
    }

    fn arb_pair(max_side: usize) -> impl proptest::strategy::Strategy<Value = (PartitionDiagram, PartitionDiagram)> {
        use crate::color::{Color, ColoredWord};
        use proptest::prelude::*;
        let word = move || {
            prop::collection::vec(any::<bool>(), 0..=max_side).prop_map(|v| {
                ColoredWord::new(v.into_iter().map(|b| if b { Color::Black } else { Color::White }).collect())
            })
        };
        let on = |u: ColoredWord, l: ColoredWord| {
            let n = u.len() + l.len();
            prop::collection::vec(0..n.max(1), n)
                .prop_map(move |labels| PartitionDiagram::from_labels(u.clone(), l.clone(), labels).unwrap())
        };
        (word(), word(), word()).prop_flat_map(move |(u, m, w)| (on(u, m.clone()), on(m, w)))
    }

    proptest::proptest! {
        #[test]
        fn packed_matches_diagram((a, b) in arb_pair(4), (c, _) in arb_pair(3)) {
            let (pa, pb) = (Packed::from_diagram(&a).unwrap(), Packed::from_diagram(&b).unwrap());
            proptest::prop_assert_eq!(pa.to_diagram(), a.clone());
            proptest::prop_assert_eq!(pa.num_blocks(), a.num_blocks());
            proptest::prop_assert_eq!(pa.involute().to_diagram(), a.involute());
            if a.num_points() + c.num_points() <= MAX_PACKED_POINTS {
                let pc = Packed::from_diagram(&c).unwrap();
                proptest::prop_assert_eq!(pa.tensor(pc).to_diagram(), a.tensor(&c));
                proptest::prop_assert!(pa.compose(pc).is_some() == a.compose(&c).is_ok());
            }
            if !a.upper().is_empty() {
                proptest::prop_assert_eq!(pa.rotate().unwrap().to_diagram(), a.rotate().unwrap());
            }
            let (ab, _) = a.compose(&b).unwrap();
            proptest::prop_assert_eq!(pa.compose(pb).map(Packed::to_diagram), Some(ab));
        }
    }
}
