//! Diagonal tori as quotients of free groups, with exact word problems in
//! `Z * Z^N` and in a monomial 2×2 matrix model.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::closure::CategoryClosure;
use crate::color::Color;
use crate::error::{Error, Result};

/// A word in `g_1, …, g_N` and their inverses; letters are `(index, ±1)` with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TorusWord {
    letters: Vec<(usize, i8)>,
}

impl TorusWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Result<Self> {
        for &(i, e) in &letters {
            if i == 0 || (e != 1 && e != -1) {
                return Err(Error::InvalidArgument(format!("bad letter g{i}^{e}")));
            }
        }
        Ok(TorusWord { letters })
    }

    pub fn identity() -> Self {
        TorusWord::default()
    }

    pub fn gen(i: usize) -> Self {
        TorusWord { letters: vec![(i, 1)] }
    }

    pub fn gen_inv(i: usize) -> Self {
        TorusWord { letters: vec![(i, -1)] }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.0).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &TorusWord) -> TorusWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TorusWord { letters }
    }

    pub fn inverse(&self) -> TorusWord {
        TorusWord {
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    /// Free reduction.
    pub fn reduced(&self) -> TorusWord {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(i, e) in &self.letters {
            if out.last() == Some(&(i, -e)) {
                out.pop();
            } else {
                out.push((i, e));
            }
        }
        TorusWord { letters: out }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &TorusWord, b: &TorusWord) -> TorusWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }
}

impl fmt::Display for TorusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e == 1 { format!("g{i}") } else { format!("g{i}^-1") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for TorusWord {
    type Err = Error;

    /// Parses `g1 g2^-1 g3`, with `e` or an empty string for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let bad = || Error::Parse(format!("invalid letter `{tok}`"));
            let body = tok.strip_prefix('g').ok_or_else(bad)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i8>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            letters.push((idx, exp));
        }
        TorusWord::new(letters)
    }
}

impl Serialize for TorusWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupRelation {
    pub lhs: TorusWord,
    pub rhs: TorusWord,
}

impl GroupRelation {
    pub fn new(lhs: TorusWord, rhs: TorusWord) -> Self {
        GroupRelation { lhs, rhs }
    }

    /// `lhs · rhs⁻¹` freely reduced.
    pub fn key(&self) -> TorusWord {
        self.lhs.concat(&self.rhs.inverse()).reduced()
    }

    /// True when the relation holds in the free group.
    pub fn is_trivial(&self) -> bool {
        self.key().is_empty()
    }
}

impl fmt::Display for GroupRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Relations read off every diagram of a saturated closure with at most `max_points` legs.
///
/// White legs contribute `g_i`, black legs `g_i⁻¹`; relations are deduplicated
/// by the freely reduced `lhs · rhs⁻¹`.
pub fn torus_relations_up_to(c: &CategoryClosure, n: usize, max_points: usize) -> Result<Vec<GroupRelation>> {
    let mut seen: BTreeMap<TorusWord, GroupRelation> = BTreeMap::new();
    for_each_relation(c, n, max_points, |r| {
        seen.entry(r.key()).or_insert(r);
    })?;
    Ok(seen.into_values().collect())
}

/// Every literal instance `lhs = rhs` with `lhs ≠ rhs` as words, before free reduction.
pub fn torus_relation_instances(c: &CategoryClosure, n: usize, max_points: usize) -> Result<Vec<GroupRelation>> {
    let mut seen: BTreeMap<(TorusWord, TorusWord), GroupRelation> = BTreeMap::new();
    for_each_relation(c, n, max_points, |r| {
        if r.lhs != r.rhs {
            seen.entry((r.lhs.clone(), r.rhs.clone())).or_insert(r);
        }
    })?;
    Ok(seen.into_values().collect())
}

fn for_each_relation(c: &CategoryClosure, n: usize, max_points: usize, mut f: impl FnMut(GroupRelation)) -> Result<()> {
    c.ensure_saturated()?;
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    for d in c.diagrams().into_iter().filter(|d| d.num_points() <= max_points) {
        let k = d.upper().len();
        let colors: Vec<Color> = d.upper().letters().iter().chain(d.lower().letters()).copied().collect();
        let nb = d.num_blocks();
        let mut vals = vec![1usize; nb];
        loop {
            let letter = |p: usize| (vals[d.labels()[p] as usize], if colors[p] == Color::White { 1 } else { -1 });
            let lhs = TorusWord {
                letters: (0..k).map(letter).collect(),
            };
            let rhs = TorusWord {
                letters: (k..colors.len()).map(letter).collect(),
            };
            f(GroupRelation::new(lhs, rhs));
            let mut b = 0;
            while b < nb {
                vals[b] += 1;
                if vals[b] <= n {
                    break;
                }
                vals[b] = 1;
                b += 1;
            }
            if b == nb {
                break;
            }
        }
    }
    Ok(())
}

pub fn torus_relations(c: &CategoryClosure, n: usize) -> Result<Vec<GroupRelation>> {
    torus_relations_up_to(c, n, c.budget().max_points)
}

/// Plain-text presentation, one relation per line.
pub fn presentation_text(relations: &[GroupRelation], n: usize) -> String {
    let gens: Vec<String> = (1..=n).map(|i| format!("g{i}")).collect();
    let mut out = format!("generators: {}\n", gens.join(" "));
    for r in relations {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// `g_a g_b⁻¹ g_c = g_c g_b⁻¹ g_a` over all triples.
pub fn gamma_times_relations(n: usize) -> Vec<GroupRelation> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                let w = |x, y, z| TorusWord {
                    letters: vec![(x, 1), (y, -1), (z, 1)],
                };
                out.push(GroupRelation::new(w(a, b, c), w(c, b, a)));
            }
        }
    }
    out
}

/// Commutation of all `g_a g_b⁻¹` and `g_a⁻¹ g_b` with each other, over all index choices.
pub fn t_star_relations(n: usize) -> Vec<GroupRelation> {
    let right = |a, b| TorusWord {
        letters: vec![(a, 1), (b, -1)],
    };
    let left = |a, b| TorusWord {
        letters: vec![(a, -1), (b, 1)],
    };
    let mut out = Vec::new();
    let idx: Vec<(usize, usize)> = (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).collect();
    for &(a, b) in &idx {
        for &(c, d) in &idx {
            for (x, y) in [
                (right(a, b), right(c, d)),
                (left(a, b), left(c, d)),
                (right(a, b), left(c, d)),
            ] {
                out.push(GroupRelation::new(TorusWord::commutator(&x, &y), TorusWord::identity()));
            }
        }
    }
    out
}

/// A syllable of `Z * Z^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    Z(i64),
    H(Vec<i64>),
}

impl Syllable {
    fn is_identity(&self) -> bool {
        match self {
            Syllable::Z(e) => *e == 0,
            Syllable::H(v) => v.iter().all(|&x| x == 0),
        }
    }

    fn inverse(&self) -> Syllable {
        match self {
            Syllable::Z(e) => Syllable::Z(-e),
            Syllable::H(v) => Syllable::H(v.iter().map(|x| -x).collect()),
        }
    }

    /// `h_i^e` in `Z^n`.
    pub fn h(n: usize, i: usize, e: i64) -> Syllable {
        let mut v = vec![0; n];
        v[i - 1] = e;
        Syllable::H(v)
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Syllable::Z(e) => write!(f, "z^{e}"),
            Syllable::H(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "h({})", parts.join(","))
            }
        }
    }
}

/// Normal form in `Z * Z^N`: alternating nontrivial syllables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeProductElement {
    syllables: Vec<Syllable>,
}

impl FreeProductElement {
    pub fn identity() -> Self {
        FreeProductElement::default()
    }

    pub fn z(e: i64) -> Self {
        reduce_free_product(vec![Syllable::Z(e)])
    }

    pub fn h(v: Vec<i64>) -> Self {
        reduce_free_product(vec![Syllable::H(v)])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn mul(&self, other: &FreeProductElement) -> FreeProductElement {
        let mut out = self.syllables.clone();
        for s in &other.syllables {
            push_syllable(&mut out, s.clone());
        }
        FreeProductElement { syllables: out }
    }

    pub fn inverse(&self) -> FreeProductElement {
        FreeProductElement {
            syllables: self.syllables.iter().rev().map(Syllable::inverse).collect(),
        }
    }
}

fn push_syllable(out: &mut Vec<Syllable>, s: Syllable) {
    if s.is_identity() {
        return;
    }
    let merged = match (out.last(), &s) {
        (Some(Syllable::Z(a)), Syllable::Z(b)) => Some(Syllable::Z(a + b)),
        (Some(Syllable::H(a)), Syllable::H(b)) => {
            let len = a.len().max(b.len());
            Some(Syllable::H(
                (0..len)
                    .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
                    .collect(),
            ))
        }
        _ => None,
    };
    match merged {
        Some(m) => {
            out.pop();
            if !m.is_identity() {
                out.push(m);
            }
        }
        None => out.push(s),
    }
}

impl fmt::Display for FreeProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.syllables.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for FreeProductElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Merges adjacent syllables of the same factor and drops identities.
pub fn reduce_free_product(w: Vec<Syllable>) -> FreeProductElement {
    let mut out = Vec::with_capacity(w.len());
    for s in w {
        push_syllable(&mut out, s);
    }
    FreeProductElement { syllables: out }
}

/// Image of a word under `g_i ↦ z h_i`.
pub fn embed_zh(w: &TorusWord, n: usize) -> Result<FreeProductElement> {
    if w.max_index() > n {
        return Err(Error::InvalidArgument(format!("word {w} uses generators beyond N={n}")));
    }
    let mut raw = Vec::with_capacity(2 * w.len());
    for &(i, e) in w.letters() {
        if e == 1 {
            raw.push(Syllable::Z(1));
            raw.push(Syllable::h(n, i, 1));
        } else {
            raw.push(Syllable::h(n, i, -1));
            raw.push(Syllable::Z(-1));
        }
    }
    Ok(reduce_free_product(raw))
}

/// Whether both sides of `r` have the same image under `g_i ↦ z h_i`.
pub fn check_relation_in_image(r: &GroupRelation, n: usize) -> Result<bool> {
    Ok(embed_zh(&r.lhs, n)? == embed_zh(&r.rhs, n)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct FreenessReport {
    pub max_len: usize,
    /// Number of reduced words checked, by length `1..=max_len`.
    pub per_length: Vec<usize>,
    pub checked: usize,
    /// First reduced word evaluating to the identity, in letters `a, A, b, B, …`.
    pub offending: Option<String>,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.offending.is_none()
    }
}

fn letter_name(i: usize, inverse: bool) -> String {
    let c = (b'a' + (i % 26) as u8) as char;
    let c = if inverse { c.to_ascii_uppercase() } else { c };
    if i < 26 {
        c.to_string()
    } else {
        format!("{c}{}", i / 26)
    }
}

/// Evaluates every reduced word of length `1..=max_len` in the elements and
/// their inverses, shortest first, and stops at the first trivial one.
pub fn freeness_witness(elements: &[FreeProductElement], max_len: usize) -> Result<FreenessReport> {
    if elements.iter().any(FreeProductElement::is_identity) {
        return Err(Error::InvalidArgument("freeness needs nontrivial elements".into()));
    }
    // Letter 2i is element i, letter 2i+1 its inverse.
    let letters: Vec<FreeProductElement> = elements.iter().flat_map(|e| [e.clone(), e.inverse()]).collect();
    let mut per_length = Vec::new();
    for len in 1..=max_len {
        let mut count = 0usize;
        let mut word = Vec::with_capacity(len);
        let mut found = None;
        dfs(&letters, len, &mut word, &FreeProductElement::identity(), &mut count, &mut found);
        per_length.push(count);
        if let Some(w) = found {
            let name = w.iter().map(|&x: &usize| letter_name(x / 2, x % 2 == 1)).collect::<Vec<_>>().join(" ");
            return Ok(FreenessReport {
                max_len,
                checked: per_length.iter().sum(),
                per_length,
                offending: Some(name),
            });
        }
    }
    Ok(FreenessReport {
        max_len,
        checked: per_length.iter().sum(),
        per_length,
        offending: None,
    })
}

fn dfs(
    letters: &[FreeProductElement],
    len: usize,
    word: &mut Vec<usize>,
    value: &FreeProductElement,
    count: &mut usize,
    found: &mut Option<Vec<usize>>,
) {
    if found.is_some() {
        return;
    }
    if word.len() == len {
        *count += 1;
        if value.is_identity() {
            *found = Some(word.clone());
        }
        return;
    }
    for (x, el) in letters.iter().enumerate() {
        if word.last().is_some_and(|&last| last ^ 1 == x) {
            continue;
        }
        word.push(x);
        dfs(letters, len, word, &value.mul(el), count, found);
        word.pop();
        if found.is_some() {
            return;
        }
    }
}

/// `[[x, 0], [0, y]]` or, when `swap`, `[[0, x], [y, 0]]`, with `x`, `y`
/// Laurent monomials in the commuting symbols `s_1..s_N, t_1..t_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialElement {
    pub swap: bool,
    /// Exponents of `x` over `s_1..s_N, t_1..t_N`.
    pub upper: Vec<i64>,
    /// Exponents of `y` over `s_1..s_N, t_1..t_N`.
    pub lower: Vec<i64>,
}

impl MonomialElement {
    pub fn identity(n: usize) -> Self {
        MonomialElement {
            swap: false,
            upper: vec![0; 2 * n],
            lower: vec![0; 2 * n],
        }
    }

    /// `g_i ↦ [[0, s_i], [t_i, 0]]`.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut m = MonomialElement::identity(n);
        m.swap = true;
        m.upper[i - 1] = 1;
        m.lower[n + i - 1] = 1;
        m
    }

    pub fn is_identity(&self) -> bool {
        !self.swap && self.upper.iter().chain(&self.lower).all(|&x| x == 0)
    }

    pub fn mul(&self, o: &MonomialElement) -> MonomialElement {
        let (ou, ol) = if self.swap { (&o.lower, &o.upper) } else { (&o.upper, &o.lower) };
        MonomialElement {
            swap: self.swap ^ o.swap,
            upper: self.upper.iter().zip(ou).map(|(a, b)| a + b).collect(),
            lower: self.lower.iter().zip(ol).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> MonomialElement {
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        if self.swap {
            MonomialElement {
                swap: true,
                upper: neg(&self.lower),
                lower: neg(&self.upper),
            }
        } else {
            MonomialElement {
                swap: false,
                upper: neg(&self.upper),
                lower: neg(&self.lower),
            }
        }
    }

    fn monomial(v: &[i64]) -> String {
        let n = v.len() / 2;
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                let sym = if i < n { format!("s{}", i + 1) } else { format!("t{}", i - n + 1) };
                if e == 1 {
                    sym
                } else {
                    format!("{sym}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        let kind = if self.swap { "antidiag" } else { "diag" };
        write!(f, "{kind}({}, {})", Self::monomial(&self.upper), Self::monomial(&self.lower))
    }
}

pub fn monomial_eval(w: &TorusWord, n: usize) -> Result<MonomialElement> {
    if w.max_index() > n {
        return Err(Error::InvalidArgument(format!("word {w} uses generators beyond N={n}")));
    }
    let mut acc = MonomialElement::identity(n);
    for &(i, e) in w.letters() {
        let g = MonomialElement::generator(n, i);
        acc = acc.mul(&if e == 1 { g } else { g.inverse() });
    }
    Ok(acc)
}

pub fn check_relation_monomial(r: &GroupRelation, n: usize) -> Result<bool> {
    Ok(monomial_eval(&r.lhs, n)? == monomial_eval(&r.rhs, n)?)
}

/// A trivial image in a model is not a proof of triviality in the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModelVerdict {
    #[serde(rename = "TRIVIAL-IN-MODEL")]
    TrivialInModel,
    /// The model is a homomorphic image of the group, so this is conclusive.
    #[serde(rename = "NONTRIVIAL")]
    Nontrivial,
}

impl ModelVerdict {
    fn of(trivial: bool) -> Self {
        if trivial {
            ModelVerdict::TrivialInModel
        } else {
            ModelVerdict::Nontrivial
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparationReport {
    pub n: usize,
    pub word: TorusWord,
    pub monomial: MonomialElement,
    pub monomial_verdict: ModelVerdict,
    pub zh_image: FreeProductElement,
    pub zh_verdict: ModelVerdict,
}

impl SeparationReport {
    /// Trivial in the monomial model and nontrivial in `Z * Z^N`.
    pub fn separates(&self) -> bool {
        self.monomial_verdict == ModelVerdict::TrivialInModel && self.zh_verdict == ModelVerdict::Nontrivial
    }
}

/// The word `[g1 g2⁻¹, g1⁻¹ g2]`.
pub fn separating_word() -> TorusWord {
    let a = TorusWord {
        letters: vec![(1, 1), (2, -1)],
    };
    let b = TorusWord {
        letters: vec![(1, -1), (2, 1)],
    };
    TorusWord::commutator(&a, &b)
}

pub fn separate_tori_with(word: &TorusWord, n: usize) -> Result<SeparationReport> {
    let monomial = monomial_eval(word, n)?;
    let zh_image = embed_zh(word, n)?;
    Ok(SeparationReport {
        n,
        word: word.clone(),
        monomial_verdict: ModelVerdict::of(monomial.is_identity()),
        monomial,
        zh_verdict: ModelVerdict::of(zh_image.is_identity()),
        zh_image,
    })
}

pub fn separate_tori(n: usize) -> Result<SeparationReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("separating the tori needs N >= 2".into()));
    }
    separate_tori_with(&separating_word(), n)
}

/// `h1⁻¹ h2` and `z h1 h2⁻¹ z⁻¹` in `Z * Z^n`.
pub fn free_pair(n: usize) -> Vec<FreeProductElement> {
    let mut v = vec![0; n.max(2)];
    v[0] = -1;
    v[1] = 1;
    let a = FreeProductElement::h(v.clone());
    let b = FreeProductElement::z(1)
        .mul(&FreeProductElement::h(v.iter().map(|x| -x).collect()))
        .mul(&FreeProductElement::z(-1));
    vec![a, b]
}
