//! Budgeted category closures: the smallest family of diagrams containing the
//! generators and the identity strands that is stable under tensor product,
//! composition, involution and rotation, truncated to a maximal number of legs.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::classes::{enumerate_pairings, ClassName};
use crate::color::{Color, ColoredWord};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::packed::{Packed, WordKey, MAX_PACKED_POINTS};

pub const MAX_CLOSURE_POINTS: usize = MAX_PACKED_POINTS;

pub const DEFAULT_MAX_ROUNDS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureBudget {
    pub max_points: usize,
    pub max_rounds: usize,
}

impl ClosureBudget {
    pub fn new(max_points: usize, max_rounds: usize) -> Result<Self> {
        let b = ClosureBudget {
            max_points,
            max_rounds,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn points(max_points: usize) -> Self {
        ClosureBudget {
            max_points,
            max_rounds: DEFAULT_MAX_ROUNDS,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_points < 2 {
            return Err(Error::InvalidArgument("max_points must be at least 2".into()));
        }
        if self.max_points > MAX_PACKED_POINTS {
            return Err(Error::SizeOverflow {
                size: self.max_points,
                cap: MAX_PACKED_POINTS,
            });
        }
        if self.max_rounds == 0 {
            return Err(Error::InvalidArgument("max_rounds must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of a membership query against a truncated closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Membership {
    In,
    NotFoundWithinBudget,
}

impl Membership {
    pub fn is_in(self) -> bool {
        self == Membership::In
    }

    pub fn label(self) -> &'static str {
        match self {
            Membership::In => "IN",
            Membership::NotFoundWithinBudget => "NOT-FOUND-WITHIN-BUDGET",
        }
    }
}

/// A category generated by diagrams, truncated to a budget.
///
/// When both color-flip strands belong to the closure, every recoloring of a
/// member is again a member, so the table is stored as one uncolored
/// representative per block structure and expanded on demand.
#[derive(Debug, Clone)]
pub struct CategoryClosure {
    generators: Vec<PartitionDiagram>,
    budget: ClosureBudget,
    seed_matching_base: bool,
    saturated: bool,
    rounds: usize,
    color_blind: bool,
    reps: BTreeSet<Packed>,
}

const FLIP_WB: Packed = Packed {
    k: 1,
    l: 1,
    colors: 0b10,
    labels: 0,
};
const FLIP_BW: Packed = Packed {
    k: 1,
    l: 1,
    colors: 0b01,
    labels: 0,
};

fn base_diagrams(seed_matching_base: bool) -> Vec<PartitionDiagram> {
    let mut base = vec![
        PartitionDiagram::identity(Color::White),
        PartitionDiagram::identity(Color::Black),
    ];
    if seed_matching_base {
        for (a, b) in [(Color::White, Color::Black), (Color::Black, Color::White)] {
            base.push(PartitionDiagram::cap(a, b));
            base.push(PartitionDiagram::cup(a, b));
        }
    }
    base
}

struct Engine {
    max_points: usize,
    color_blind: bool,
    table: HashSet<Packed>,
    by_upper: HashMap<WordKey, Vec<Packed>>,
    by_lower: HashMap<WordKey, Vec<Packed>>,
    by_size: Vec<Vec<Packed>>,
    next: Vec<Packed>,
    flips_seen: bool,
}

impl Engine {
    fn new(max_points: usize, color_blind: bool) -> Self {
        Engine {
            max_points,
            color_blind,
            table: HashSet::new(),
            by_upper: HashMap::new(),
            by_lower: HashMap::new(),
            by_size: vec![Vec::new(); max_points + 1],
            next: Vec::new(),
            flips_seen: false,
        }
    }

    fn offer(&mut self, p: Packed) {
        if p.n() > self.max_points {
            return;
        }
        let p = if self.color_blind { p.with_colors(0) } else { p };
        if self.table.insert(p) {
            self.next.push(p);
            if !self.color_blind
                && (p == FLIP_WB || p == FLIP_BW)
                && self.table.contains(&FLIP_WB)
                && self.table.contains(&FLIP_BW)
            {
                self.flips_seen = true;
            }
        }
    }

    fn process(&mut self, x: Packed) {
        self.by_upper.entry(x.upper_key()).or_default().push(x);
        self.by_lower.entry(x.lower_key()).or_default().push(x);
        self.by_size[x.n()].push(x);

        let mut found = Vec::new();
        found.push(x.involute());
        if let Some(r) = x.rotate() {
            found.push(r);
        }
        let room = self.max_points - x.n();
        for bucket in &self.by_size[..=room] {
            for &y in bucket {
                found.push(x.tensor(y));
                found.push(y.tensor(x));
            }
        }
        let (k, l) = (x.k as usize, x.l as usize);
        if let Some(bottoms) = self.by_upper.get(&x.lower_key()) {
            for &y in bottoms {
                if k + y.l as usize <= self.max_points {
                    if let Some(c) = x.compose(y) {
                        found.push(c);
                    }
                }
            }
        }
        if let Some(tops) = self.by_lower.get(&x.upper_key()) {
            for &y in tops {
                if y.k as usize + l <= self.max_points {
                    if let Some(c) = y.compose(x) {
                        found.push(c);
                    }
                }
            }
        }
        for p in found {
            self.offer(p);
        }
    }

    /// Runs generations until the fixpoint or the round cap. Returns
    /// `(saturated, rounds)`, or `None` if both flips appeared in colored mode.
    fn run(&mut self, max_rounds: usize) -> Option<(bool, usize)> {
        let mut rounds = 0;
        while !self.next.is_empty() {
            if rounds == max_rounds {
                return Some((false, rounds));
            }
            let mut gen = std::mem::take(&mut self.next);
            gen.sort_unstable_by_key(|p| (p.n(), *p));
            for x in gen {
                self.process(x);
                if self.flips_seen {
                    return None;
                }
            }
            rounds += 1;
        }
        Some((true, rounds))
    }
}

impl CategoryClosure {
    /// Generates the closure of `generators` together with the identity strands and,
    /// if requested, the color-matching caps and cups.
    pub fn close(
        generators: &[PartitionDiagram],
        budget: ClosureBudget,
        seed_matching_base: bool,
    ) -> Result<Self> {
        budget.validate()?;
        let mut seeds = Vec::new();
        for g in generators {
            if g.num_points() > budget.max_points {
                return Err(Error::BudgetExceeded(format!(
                    "generator {g} has {} points, budget is {}",
                    g.num_points(),
                    budget.max_points
                )));
            }
            seeds.push(Packed::from_diagram(g).expect("within packed size"));
        }
        for b in base_diagrams(seed_matching_base) {
            seeds.push(Packed::from_diagram(&b).expect("base is small"));
        }
        let flips = seeds.contains(&FLIP_WB) && seeds.contains(&FLIP_BW);
        let mut engine = Engine::new(budget.max_points, flips);
        for &s in &seeds {
            engine.offer(s);
        }
        let (saturated, rounds, color_blind) = match engine.run(budget.max_rounds) {
            Some((sat, r)) => (sat, r, engine.color_blind),
            None => {
                let known: Vec<Packed> = engine.table.iter().copied().collect();
                let mut blind = Engine::new(budget.max_points, true);
                for p in known {
                    blind.offer(p);
                }
                let (sat, r) = blind.run(budget.max_rounds).expect("color-blind run");
                engine = blind;
                (sat, r, true)
            }
        };
        Ok(CategoryClosure {
            generators: generators.to_vec(),
            budget,
            seed_matching_base,
            saturated,
            rounds,
            color_blind,
            reps: engine.table.into_iter().collect(),
        })
    }

    pub fn generators(&self) -> &[PartitionDiagram] {
        &self.generators
    }

    pub fn budget(&self) -> ClosureBudget {
        self.budget
    }

    pub fn seed_matching_base(&self) -> bool {
        self.seed_matching_base
    }

    pub fn saturated(&self) -> bool {
        self.saturated
    }

    /// Fails with `BudgetExceeded` when the fixpoint was not reached.
    pub fn ensure_saturated(&self) -> Result<&Self> {
        if self.saturated {
            Ok(self)
        } else {
            Err(Error::BudgetExceeded(format!(
                "no fixpoint after {} rounds",
                self.rounds
            )))
        }
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// True when the table is stored up to recoloring.
    pub fn is_color_blind(&self) -> bool {
        self.color_blind
    }

    /// Number of (colored) diagrams in the table.
    pub fn len(&self) -> usize {
        if self.color_blind {
            self.reps.iter().map(|p| 1usize << p.n()).sum()
        } else {
            self.reps.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn contains(&self, d: &PartitionDiagram) -> Result<Membership> {
        if d.num_points() > self.budget.max_points {
            return Err(Error::BudgetExceeded(format!(
                "diagram has {} points, closure budget is {}",
                d.num_points(),
                self.budget.max_points
            )));
        }
        let mut p = Packed::from_diagram(d).expect("within packed size");
        if self.color_blind {
            p = p.with_colors(0);
        }
        Ok(if self.reps.contains(&p) {
            Membership::In
        } else {
            Membership::NotFoundWithinBudget
        })
    }

    pub(crate) fn packed_set(&self, max_points: usize) -> BTreeSet<Packed> {
        let mut out = BTreeSet::new();
        for &p in self.reps.iter().filter(|p| p.n() <= max_points) {
            if self.color_blind {
                for c in 0..(1u32 << p.n()) {
                    out.insert(p.with_colors(c as u16));
                }
            } else {
                out.insert(p);
            }
        }
        out
    }

    /// The diagrams between two words, sorted.
    pub fn hom(&self, upper: &ColoredWord, lower: &ColoredWord) -> Vec<PartitionDiagram> {
        let (k, l) = (upper.len(), lower.len());
        if k + l > self.budget.max_points {
            return Vec::new();
        }
        let mut out: Vec<PartitionDiagram> = if self.color_blind {
            self.reps
                .iter()
                .filter(|p| p.k as usize == k && p.l as usize == l)
                .map(|p| {
                    p.to_diagram()
                        .recolored(upper.clone(), lower.clone())
                        .expect("lengths agree")
                })
                .collect()
        } else {
            self.reps
                .iter()
                .filter(|p| p.k as usize == k && p.l as usize == l)
                .map(|p| p.to_diagram())
                .filter(|d| d.upper() == upper && d.lower() == lower)
                .collect()
        };
        out.sort();
        out
    }

    /// Every diagram in the table, sorted.
    pub fn diagrams(&self) -> Vec<PartitionDiagram> {
        let mut out: Vec<PartitionDiagram> = self
            .packed_set(self.budget.max_points)
            .into_iter()
            .map(Packed::to_diagram)
            .collect();
        out.sort();
        out
    }

    /// The table grouped by `(upper, lower)` words.
    pub fn table(&self) -> BTreeMap<(ColoredWord, ColoredWord), Vec<PartitionDiagram>> {
        let mut table: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for d in self.diagrams() {
            table
                .entry((d.upper().clone(), d.lower().clone()))
                .or_default()
                .push(d);
        }
        table
    }

    /// Compares the table with the predicate set of a class on all words up to `max_points`.
    pub fn compare_with_class(&self, class: ClassName, max_points: usize) -> Result<ClassComparison> {
        if max_points > self.budget.max_points {
            return Err(Error::BudgetExceeded(format!(
                "comparison at {max_points} points exceeds closure budget {}",
                self.budget.max_points
            )));
        }
        if self.color_blind && class.is_color_blind() {
            // Both sides are unions of full recoloring orbits; compare white representatives.
            let ours: BTreeSet<Packed> = self.reps.iter().copied().filter(|p| p.n() <= max_points).collect();
            let mut theirs = BTreeSet::new();
            for n in 0..=max_points {
                for k in 0..=n {
                    for d in enumerate_pairings(&ColoredWord::white(k), &ColoredWord::white(n - k), class) {
                        theirs.insert(Packed::from_diagram(&d).expect("small"));
                    }
                }
            }
            let orbit = |s: &BTreeSet<Packed>| s.iter().map(|p| 1usize << p.n()).sum::<usize>();
            return Ok(ClassComparison {
                class,
                max_points,
                closure_size: orbit(&ours),
                class_size: orbit(&theirs),
                missing: theirs.difference(&ours).take(8).map(|p| p.to_diagram()).collect(),
                extra: ours.difference(&theirs).take(8).map(|p| p.to_diagram()).collect(),
            });
        }
        self.compare_with_class_colored(class, max_points)
    }

    /// Same as [`compare_with_class`](Self::compare_with_class) but always over every coloring.
    pub fn compare_with_class_colored(&self, class: ClassName, max_points: usize) -> Result<ClassComparison> {
        if max_points > self.budget.max_points {
            return Err(Error::BudgetExceeded(format!(
                "comparison at {max_points} points exceeds closure budget {}",
                self.budget.max_points
            )));
        }
        let ours = self.packed_set(max_points);
        let mut theirs = BTreeSet::new();
        for n in 0..=max_points {
            for word in ColoredWord::all_of_length(n) {
                for k in 0..=n {
                    let upper = ColoredWord::new(word.letters()[..k].to_vec());
                    let lower = ColoredWord::new(word.letters()[k..].to_vec());
                    for d in enumerate_pairings(&upper, &lower, class) {
                        theirs.insert(Packed::from_diagram(&d).expect("small"));
                    }
                }
            }
        }
        Ok(ClassComparison {
            class,
            max_points,
            closure_size: ours.len(),
            class_size: theirs.len(),
            missing: theirs.difference(&ours).take(8).map(|p| p.to_diagram()).collect(),
            extra: ours.difference(&theirs).take(8).map(|p| p.to_diagram()).collect(),
        })
    }

    /// Diagrams of `self` (up to `max_points`) that `other` lacks, at most `limit` of them.
    pub fn difference_up_to(&self, other: &CategoryClosure, max_points: usize, limit: usize) -> Vec<PartitionDiagram> {
        let theirs = other.packed_set(max_points);
        self.packed_set(max_points)
            .difference(&theirs)
            .take(limit)
            .map(|p| p.to_diagram())
            .collect()
    }

    pub fn to_json(&self) -> ClosureJson {
        let entries = if self.color_blind {
            let mut groups: BTreeMap<(usize, usize), Vec<PartitionDiagram>> = BTreeMap::new();
            for p in &self.reps {
                groups.entry((p.k as usize, p.l as usize)).or_default().push(p.to_diagram());
            }
            groups
                .into_iter()
                .map(|((k, l), mut diagrams)| {
                    diagrams.sort();
                    HomEntry {
                        upper: ColoredWord::white(k),
                        lower: ColoredWord::white(l),
                        diagrams,
                    }
                })
                .collect()
        } else {
            self.table()
                .into_iter()
                .map(|((upper, lower), diagrams)| HomEntry {
                    upper,
                    lower,
                    diagrams,
                })
                .collect()
        };
        ClosureJson {
            generators: self.generators.clone(),
            budget: self.budget,
            seed_matching_base: self.seed_matching_base,
            saturated: self.saturated,
            rounds: self.rounds,
            color_blind: self.color_blind,
            size: self.len(),
            entries,
        }
    }

    pub fn from_json(j: &ClosureJson) -> Result<Self> {
        j.budget.validate()?;
        let mut reps = BTreeSet::new();
        for entry in &j.entries {
            for d in &entry.diagrams {
                if d.upper() != &entry.upper || d.lower() != &entry.lower {
                    return Err(Error::Parse(format!(
                        "diagram {d} listed under {}|{}",
                        entry.upper, entry.lower
                    )));
                }
                if d.num_points() > j.budget.max_points {
                    return Err(Error::BudgetExceeded(format!("diagram {d} exceeds the budget")));
                }
                let p = Packed::from_diagram(d).expect("within budget");
                reps.insert(if j.color_blind { p.with_colors(0) } else { p });
            }
        }
        Ok(CategoryClosure {
            generators: j.generators.clone(),
            budget: j.budget,
            seed_matching_base: j.seed_matching_base,
            saturated: j.saturated,
            rounds: j.rounds,
            color_blind: j.color_blind,
            reps,
        })
    }
}

impl PartialEq for CategoryClosure {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.budget == other.budget
            && self.seed_matching_base == other.seed_matching_base
            && self.saturated == other.saturated
            && self.color_blind == other.color_blind
            && self.reps == other.reps
    }
}

/// Serialized closure. In color-blind tables every entry lists uncolored
/// representatives on all-white words; all recolorings are members too.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClosureJson {
    pub generators: Vec<PartitionDiagram>,
    pub budget: ClosureBudget,
    pub seed_matching_base: bool,
    pub saturated: bool,
    pub rounds: usize,
    pub color_blind: bool,
    pub size: usize,
    pub entries: Vec<HomEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomEntry {
    pub upper: ColoredWord,
    pub lower: ColoredWord,
    pub diagrams: Vec<PartitionDiagram>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassComparison {
    pub class: ClassName,
    pub max_points: usize,
    pub closure_size: usize,
    pub class_size: usize,
    pub missing: Vec<PartitionDiagram>,
    pub extra: Vec<PartitionDiagram>,
}

impl ClassComparison {
    pub fn equal(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Convenience wrapper for [`CategoryClosure::close`].
pub fn close(
    generators: &[PartitionDiagram],
    budget: ClosureBudget,
    seed_matching_base: bool,
) -> Result<CategoryClosure> {
    CategoryClosure::close(generators, budget, seed_matching_base)
}

pub fn contains(c: &CategoryClosure, d: &PartitionDiagram) -> Result<Membership> {
    c.contains(d)
}

/// Whether two saturated closures agree on every word pair within `budget`.
pub fn equals_up_to(a: &CategoryClosure, b: &CategoryClosure, budget: ClosureBudget) -> Result<bool> {
    if !a.saturated || !b.saturated {
        return Err(Error::NotSaturated);
    }
    let cap = a.budget.max_points.min(b.budget.max_points);
    if budget.max_points > cap {
        return Err(Error::BudgetExceeded(format!(
            "comparison at {} points exceeds a closure budget of {cap}",
            budget.max_points
        )));
    }
    if a.color_blind && b.color_blind {
        let restrict = |c: &CategoryClosure| -> BTreeSet<Packed> {
            c.reps.iter().copied().filter(|p| p.n() <= budget.max_points).collect()
        };
        return Ok(restrict(a) == restrict(b));
    }
    Ok(a.packed_set(budget.max_points) == b.packed_set(budget.max_points))
}
