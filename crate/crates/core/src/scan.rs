//! Scan of the categories generated by the noncrossing pairings plus one crossing pairing.

use serde::Serialize;

use crate::classes::{for_each_matching, ClassName};
use crate::closure::{CategoryClosure, ClassComparison, ClosureBudget};
use crate::color::ColoredWord;
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::geometry::flip_strands;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScanClass {
    #[serde(rename = "P2*")]
    P2Star,
    #[serde(rename = "P2")]
    P2,
    #[serde(rename = "OTHER")]
    Other,
}

impl ScanClass {
    pub fn label(self) -> &'static str {
        match self {
            ScanClass::P2Star => "P2*",
            ScanClass::P2 => "P2",
            ScanClass::Other => "OTHER",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub diagram: PartitionDiagram,
    pub classification: ScanClass,
    pub saturated: bool,
    pub closure_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub max_points: usize,
    pub entries: Vec<ScanEntry>,
    pub p2star_count: usize,
    pub p2_count: usize,
    pub other_count: usize,
}

/// One-row, all-white crossing pairings on up to `max_points` legs.
///
/// Every two-row crossing pairing is a rotation of one of these, and a
/// closure containing the color flips is invariant under rotation and recoloring.
pub fn crossing_representatives(max_points: usize) -> Vec<PartitionDiagram> {
    let mut out = Vec::new();
    for n in (4..=max_points).step_by(2) {
        let lower = ColoredWord::white(n);
        let mut batch = Vec::new();
        for_each_matching(n, |labels| {
            let d = PartitionDiagram::from_raw_parts(ColoredWord::empty(), lower.clone(), labels.to_vec());
            if !ClassName::NC2.contains(&d).expect("pairing") {
                batch.push(d);
            }
        });
        batch.sort();
        out.extend(batch);
    }
    out
}

fn classify(closure: &CategoryClosure, max_points: usize) -> Result<ScanClass> {
    let cmp = |class| -> Result<ClassComparison> { closure.compare_with_class(class, max_points) };
    if cmp(ClassName::P2Star)?.equal() {
        Ok(ScanClass::P2Star)
    } else if cmp(ClassName::P2)?.equal() {
        Ok(ScanClass::P2)
    } else {
        Ok(ScanClass::Other)
    }
}

/// Classifies `<NC2, flips, π>` for every crossing pairing π within the budget.
pub fn intermediate_scan(budget: ClosureBudget) -> Result<ScanReport> {
    if budget.max_points < 6 {
        return Err(Error::InvalidArgument("the scan needs a budget of at least 6 points".into()));
    }
    let mut entries = Vec::new();
    for pi in crossing_representatives(budget.max_points) {
        let mut gens = flip_strands();
        gens.push(pi.clone());
        let closure = CategoryClosure::close(&gens, budget, true)?;
        let classification = if closure.saturated() {
            classify(&closure, budget.max_points)?
        } else {
            ScanClass::Other
        };
        entries.push(ScanEntry {
            diagram: pi,
            classification,
            saturated: closure.saturated(),
            closure_size: closure.len(),
        });
    }
    let count = |c| entries.iter().filter(|e| e.classification == c).count();
    Ok(ScanReport {
        max_points: budget.max_points,
        p2star_count: count(ScanClass::P2Star),
        p2_count: count(ScanClass::P2),
        other_count: count(ScanClass::Other),
        entries,
    })
}

/// Classification of the category generated by the flips and one given diagram.
pub fn classify_generator(pi: &PartitionDiagram, budget: ClosureBudget) -> Result<ScanClass> {
    let mut gens = flip_strands();
    gens.push(pi.clone());
    let closure = CategoryClosure::close(&gens, budget, true)?;
    if !closure.saturated() {
        return Ok(ScanClass::Other);
    }
    classify(&closure, budget.max_points)
}
