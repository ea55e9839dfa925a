//! Text and SVG drawings of diagrams.

use std::fmt::Write;

use crate::color::Color;
use crate::diagram::PartitionDiagram;

fn block_letter(b: u16) -> String {
    let c = (b'a' + (b % 26) as u8) as char;
    if b < 26 {
        c.to_string()
    } else {
        format!("{c}{}", b / 26)
    }
}

/// Two rows of colored legs, each tagged with the letter of its block.
///
/// ```text
/// u  w  w  w
///    a  b  c
///    |  |  |
///    c  b  a
/// l  w  w  w
/// ```
pub fn render_ascii(d: &PartitionDiagram) -> String {
    let (k, l) = (d.upper().len(), d.lower().len());
    let width = k.max(l);
    let labels = d.labels();
    let cell = labels
        .iter()
        .map(|&b| block_letter(b).len())
        .max()
        .unwrap_or(1)
        .max(1)
        + 2;
    let row = |prefix: &str, items: Vec<String>| {
        let mut s = format!("{prefix:<3}");
        for it in items {
            let _ = write!(s, "{it:<cell$}");
        }
        s.trim_end().to_string()
    };
    let colors = |w: &[Color]| w.iter().map(|c| c.as_char().to_string()).collect::<Vec<_>>();
    let mut lines = vec![
        row("u", colors(d.upper().letters())),
        row("", labels[..k].iter().map(|&b| block_letter(b)).collect()),
        row("", (0..width).map(|_| "|".to_string()).collect()),
        row("", labels[k..].iter().map(|&b| block_letter(b)).collect()),
        row("l", colors(d.lower().letters())),
    ];
    let blocks: Vec<String> = d
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let pts: Vec<String> = b.iter().map(ToString::to_string).collect();
            format!("{}: {}", block_letter(i as u16), pts.join(" "))
        })
        .collect();
    lines.push(blocks.join("; "));
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 150.0;

/// Deterministic SVG: legs as circles (filled for black), blocks as curves.
pub fn render_svg(d: &PartitionDiagram) -> String {
    let (k, l) = (d.upper().len(), d.lower().len());
    let width = 2.0 * MARGIN + STEP * (k.max(l).max(1) - 1) as f64;
    let height = BOTTOM + TOP;
    let pos = |p: usize| -> (f64, f64) {
        if p < k {
            (MARGIN + STEP * p as f64, TOP)
        } else {
            (MARGIN + STEP * (p - k) as f64, BOTTOM)
        }
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    );
    let _ = writeln!(s, "  <title>{d}</title>");
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); d.num_blocks()];
    for (p, &b) in d.labels().iter().enumerate() {
        members[b as usize].push(p);
    }
    for pts in &members {
        for w in pts.windows(2) {
            let ((x1, y1), (x2, y2)) = (pos(w[0]), pos(w[1]));
            let path = if y1 == y2 {
                let bend = if y1 == TOP { 1.0 } else { -1.0 } * (20.0 + 0.25 * (x2 - x1).abs());
                format!("M {x1:.1} {y1:.1} C {x1:.1} {:.1}, {x2:.1} {:.1}, {x2:.1} {y2:.1}", y1 + bend, y2 + bend)
            } else {
                let my = (y1 + y2) / 2.0;
                format!("M {x1:.1} {y1:.1} C {x1:.1} {my:.1}, {x2:.1} {my:.1}, {x2:.1} {y2:.1}")
            };
            let _ = writeln!(s, "  <path d=\"{path}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>");
        }
    }
    let colors = d.upper().letters().iter().chain(d.lower().letters());
    for (p, c) in colors.enumerate() {
        let (x, y) = pos(p);
        let fill = if *c == Color::Black { "black" } else { "white" };
        let _ = writeln!(
            s,
            "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"6\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"2\"/>"
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_crossing() {
        let d: PartitionDiagram = "www|www;u1-l3,u2-l2,u3-l1".parse().unwrap();
        let a = render_ascii(&d);
        assert_eq!(a.lines().next().unwrap(), "u  w  w  w");
        assert_eq!(a.lines().nth(3).unwrap(), "   c  b  a");
        assert!(a.contains("a: u1 l3"));
    }

    #[test]
    fn svg_is_deterministic() {
        let d: PartitionDiagram = "wb|bw;u1-u2,l1-l2".parse().unwrap();
        let s = render_svg(&d);
        assert_eq!(s, render_svg(&d));
        assert_eq!(s.matches("<circle").count(), 4);
        assert_eq!(s.matches("<path").count(), 2);
        assert!(s.starts_with("<svg"));
    }
}
