//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All checks are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use easycat::linalg::{brauer_check, check_functor, sample, BrauerReport, SampleKind, SampleSource};
use easycat::sphere::sphere_sweep;
use easycat::torus::{check_relation_in_image, free_pair, freeness_witness, gamma_times_relations};
use easycat::{
    enumerate_pairings, implication_check, intermediate_scan, ClassName, ClosureBudget, Color, ColoredWord, Geometry,
    Implication, PartitionDiagram, RelationSpec,
};

/// Zero tolerance: every comparison below is between exact integers or exact rationals.
const EXACT: &str = "exact";

const BRAUER_SEEDS: [u64; 3] = [1, 1001, 2001];
const SPHERE_SEEDS: u64 = 20;

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass_if(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// All set partitions of `n` points as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur.push(b);
            go(i + 1, n, cur, max.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

fn all_diagrams(upper: &ColoredWord, lower: &ColoredWord) -> Vec<PartitionDiagram> {
    set_partitions(upper.len() + lower.len())
        .into_iter()
        .map(|l| PartitionDiagram::from_labels(upper.clone(), lower.clone(), l).unwrap())
        .collect()
}

/// Colors do not enter `T_π`, and a colored pair composes exactly when its
/// underlying white pair does, so the white pairs cover every colored one.
fn functoriality() -> Outcome {
    let mut pairs = 0usize;
    let mut bad = Vec::new();
    for a in 0..=8 {
        for b in 0..=(8 - a) / 2 {
            for c in 0..=(8 - a - 2 * b) {
                let (w0, w1, w2) = (ColoredWord::white(a), ColoredWord::white(b), ColoredWord::white(c));
                let tops = all_diagrams(&w0, &w1);
                let bottoms = all_diagrams(&w1, &w2);
                for p in &tops {
                    for q in &bottoms {
                        pairs += 1;
                        for n in [2, 3] {
                            let ok = check_functor(p, q, n).map(|f| f.all()).unwrap_or(false);
                            if !ok && bad.len() < 3 {
                                bad.push(format!("{p} / {q} at N={n}"));
                            }
                        }
                    }
                }
            }
        }
    }
    pass_if(bad.is_empty(), format!("{pairs} composable pairs x N in {{2,3}}; failures: {bad:?}"))
}

fn words_up_to(max: usize, white_only: bool) -> Vec<ColoredWord> {
    (0..=max)
        .flat_map(|n| {
            if white_only {
                vec![ColoredWord::white(n)]
            } else {
                ColoredWord::all_of_length(n)
            }
        })
        .collect()
}

fn class_closed(class: ClassName, max: usize) -> std::result::Result<usize, String> {
    let white = class.is_color_blind();
    let words = words_up_to(max, white);
    let hom = |u: &ColoredWord, l: &ColoredWord| enumerate_pairings(u, l, class);
    let contains = |d: &PartitionDiagram| class.contains(d).unwrap();
    let mut checked = 0usize;
    let mut members: Vec<PartitionDiagram> = Vec::new();
    for u in &words {
        for l in &words {
            if u.len() + l.len() <= max {
                members.extend(hom(u, l));
            }
        }
    }
    for d in &members {
        checked += 1;
        if !contains(&d.involute()) {
            return Err(format!("involution of {d}"));
        }
        if !d.upper().is_empty() && !contains(&d.rotate().unwrap()) {
            return Err(format!("rotation of {d}"));
        }
        if !d.lower().is_empty() && !contains(&d.unrotate().unwrap()) {
            return Err(format!("inverse rotation of {d}"));
        }
    }
    for a in &members {
        for b in members.iter().filter(|b| a.num_points() + b.num_points() <= max) {
            checked += 1;
            if !contains(&a.tensor(b)) {
                return Err(format!("{a} ⊗ {b}"));
            }
        }
    }
    for w0 in &words {
        for w1 in &words {
            if w0.len() + w1.len() > max {
                continue;
            }
            let tops = hom(w0, w1);
            if tops.is_empty() {
                continue;
            }
            for w2 in words.iter().filter(|w2| w1.len() + w2.len() <= max) {
                for q in hom(w1, w2) {
                    for p in &tops {
                        checked += 1;
                        if !contains(&p.compose(&q).unwrap().0) {
                            return Err(format!("{p} ∘ {q}"));
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}

fn category_axioms() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for class in ClassName::ALL {
        match class_closed(class, 8) {
            Ok(n) => notes.push(format!("{}:{n}", class.name())),
            Err(e) => {
                ok = false;
                notes.push(format!("{} not closed under {e}", class.name()));
            }
        }
    }
    let mut geometries = 0;
    for g in Geometry::ALL {
        let spec = g.spec();
        let Some(class) = spec.class_predicate else { continue };
        geometries += 1;
        let equal = spec
            .close(ClosureBudget::points(8))
            .and_then(|c| c.compare_with_class(class, 8))
            .map(|cmp| cmp.equal())
            .unwrap_or(false);
        if !equal {
            ok = false;
            notes.push(format!("closure of {g} differs from {}", class.name()));
        }
    }
    pass_if(ok, format!("{geometries} geometries equal their predicate sets; checks {}", notes.join(" ")))
}

fn brauer(g: Geometry, n: usize, points: usize) -> (BrauerReport, bool) {
    let r = brauer_check(&g.spec(), n, ClosureBudget::points(points), &BRAUER_SEEDS).expect("brauer run");
    let ok = if r.containment_only { r.all_contained() } else { r.passed() };
    (r, ok)
}

fn brauer_o_n() -> Outcome {
    let (r, ok) = brauer(Geometry::ON, 3, 6);
    let fix4 = r
        .entries
        .iter()
        .find(|e| e.upper.is_empty() && e.lower == ColoredWord::white(4))
        .map(|e| e.outcomes.iter().map(|o| o.sampled_dimension).collect::<Vec<_>>());
    let fix_ok = fix4.as_ref().is_some_and(|d| d.iter().all(|&x| x == 3));
    pass_if(
        ok && fix_ok,
        format!("{} word pairs all EQUAL: {}; dim Fix(u^⊗4) per seed = {fix4:?}", r.entries.len(), r.passed()),
    )
}

fn brauer_u_n_to_n() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for g in [Geometry::UN, Geometry::TON] {
        for n in [2, 3] {
            let (r, good) = brauer(g, n, 4);
            ok &= good;
            notes.push(format!("{g} N={n}: {} pairs EQUAL={}", r.entries.len(), r.passed()));
        }
    }
    pass_if(ok, notes.join("; "))
}

fn half_classical() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for kind in [SampleKind::AntidiagRealPair, SampleKind::AntidiagComplexPair] {
        let good = BRAUER_SEEDS.iter().all(|&s| {
            let m = sample(&SampleSource::new(kind, 2, s));
            m.is_unitary() && m.satisfies_relations()
        });
        ok &= good;
        notes.push(format!("{} samples satisfy relations: {good}", kind.name()));
    }
    for g in [Geometry::ONStar, Geometry::UNStar] {
        let (r, contained) = brauer(g, 2, 4);
        ok &= contained;
        notes.push(format!(
            "{g}: span ⊆ sampled on {} pairs: {contained}, equality (reported): {}",
            r.entries.len(),
            r.all_equal()
        ));
    }
    pass_if(ok, notes.join("; "))
}

fn uniqueness_scan() -> Outcome {
    let r = intermediate_scan(ClosureBudget::points(8)).expect("scan");
    pass_if(
        r.other_count == 0,
        format!(
            "{} crossings: P2* {}, P2 {}, OTHER {}",
            r.entries.len(),
            r.p2star_count,
            r.p2_count,
            r.other_count
        ),
    )
}

fn relation_logic() -> Outcome {
    let one = RelationSpec::reversal("www").unwrap();
    let two = RelationSpec::reversal("wbw").unwrap();
    let three = RelationSpec::reversal("wwb").unwrap();
    let four = RelationSpec::permutation("wwww".parse().unwrap(), vec![3, 4, 1, 2]).unwrap();
    let at = |h: &[RelationSpec], c: &RelationSpec, p: usize| implication_check(h, c, ClosureBudget::points(p)).unwrap();
    let checks = [
        ("(1)⟹(3)", at(std::slice::from_ref(&one), &three, 8), Implication::Implied),
        ("(3)⟹(1)", at(std::slice::from_ref(&three), &one, 8), Implication::Implied),
        ("(1,3)⟹(2)", at(&[one.clone(), three.clone()], &two, 8), Implication::Implied),
        ("abc=cba⟹abcd=cdab", at(std::slice::from_ref(&one), &four, 8), Implication::Implied),
        ("abcd=cdab⟹abc=cba", at(std::slice::from_ref(&four), &one, 8), Implication::Implied),
        ("(2)⟹(1) at 10 points", at(&[two], &one, 10), Implication::NotFoundWithinBudget),
    ];
    let ok = checks.iter().all(|(_, got, want)| got == want);
    let notes: Vec<String> = checks.iter().map(|(name, got, _)| format!("{name}: {got:?}")).collect();
    pass_if(ok, notes.join("; "))
}

fn torus_witness() -> Outcome {
    let mut relations = 0;
    let mut ok = true;
    for n in 1..=4 {
        for r in gamma_times_relations(n) {
            relations += 1;
            ok &= check_relation_in_image(&r, n).unwrap();
        }
    }
    let f = freeness_witness(&free_pair(2), 10).unwrap();
    let counts_ok = f.per_length.iter().enumerate().all(|(i, &c)| c == 4 * 3usize.pow(i as u32));
    let top = f.per_length.last().copied().unwrap_or(0);
    pass_if(
        ok && f.passed() && counts_ok && top / 2 == 2 * 3usize.pow(9),
        format!(
            "{relations} relations hold in the image; {} reduced words up to length 10 nontrivial, {} of length 10 ({} up to inversion)",
            f.checked,
            top,
            top / 2
        ),
    )
}

fn sphere_model() -> Outcome {
    let seeds: Vec<u64> = (0..SPHERE_SEEDS).collect();
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=5 {
        let rs = sphere_sweep(n, &seeds).unwrap();
        let good = rs.iter().all(|r| r.passed());
        ok &= good;
        notes.push(format!("N={n}: {good}"));
    }
    pass_if(ok, format!("{} seeds each; {}", SPHERE_SEEDS, notes.join(", ")))
}

/// Pairings of a row of `n` points: the first point pairs with any other.
fn count_pairings(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    if n % 2 == 1 {
        return 0;
    }
    (1..n).map(|_| count_pairings(n - 2)).sum()
}

/// Noncrossing pairings of a one-row word joining opposite colors.
fn count_nc_matching(w: &[Color]) -> u64 {
    if w.is_empty() {
        return 1;
    }
    (1..w.len())
        .step_by(2)
        .filter(|&j| w[j] != w[0])
        .map(|j| count_nc_matching(&w[1..j]) * count_nc_matching(&w[j + 1..]))
        .sum()
}

fn counting_oracles() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for k in 1..=6 {
        let empty = ColoredWord::empty();
        let p2 = enumerate_pairings(&empty, &ColoredWord::white(2 * k), ClassName::P2).len() as u64;
        let wb = ColoredWord::alternating(2 * k);
        let nc = enumerate_pairings(&empty, &wb, ClassName::CalNC2).len() as u64;
        let (p2_oracle, nc_oracle) = (count_pairings(2 * k), count_nc_matching(wb.letters()));
        ok &= p2 == p2_oracle && nc == nc_oracle;
        notes.push(format!("k={k}: {p2}/{p2_oracle} {nc}/{nc_oracle}"));
    }
    pass_if(ok, notes.join(", "))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("functoriality", Duration::from_secs(120), functoriality),
        ("category axioms", Duration::from_secs(300), category_axioms),
        ("Brauer O_N", Duration::from_secs(300), brauer_o_n),
        ("Brauer U_N and TO_N", Duration::from_secs(300), brauer_u_n_to_n),
        ("half-classical models", Duration::from_secs(180), half_classical),
        ("uniqueness scan", Duration::from_secs(600), uniqueness_scan),
        ("relation logic", Duration::from_secs(300), relation_logic),
        ("torus free subgroup", Duration::from_secs(60), torus_witness),
        ("sphere model", Duration::from_secs(60), sphere_model),
        ("counting oracles", Duration::from_secs(60), counting_oracles),
    ];
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        if only.is_some_and(|o| o != i + 1) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let passed = out.passed && took <= *limit;
        failed += usize::from(!passed);
        println!(
            "{} {:>2} {name} [tolerance {EXACT}, {:.1}s of {}s] {}",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            took.as_secs_f64(),
            limit.as_secs(),
            out.detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
