//! Exact intertwiner spaces of sampled matrices.
//!
//! Unknowns are coefficients over a basis of candidate matrices. The reduced
//! basis uses orbit sums under the permutations, sign changes, phases or
//! scalars that every sampled group contains, which shrinks the system without
//! changing its solution set.

use serde::Serialize;

use super::gaussian::GaussianRational;
use super::matrix::{Echelon, ExactMatrix};
use super::sample::{sample, Sample, SampleKind, SampleSource};
use super::tmap::{checked_pow, DEFAULT_SIZE_CAP};
use crate::color::{Color, ColoredWord};
use crate::error::{Error, Result};

/// Bound on the number of unknowns of one system.
pub const DEFAULT_UNKNOWN_CAP: usize = 6561;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BasisMode {
    /// Orbit sums compatible with the symmetries of the sampled kind.
    Reduced,
    /// All matrix units.
    Full,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomSpace {
    pub kind: SampleKind,
    pub n: usize,
    pub upper: ColoredWord,
    pub lower: ColoredWord,
    /// Each element is `N^l × N^k`.
    pub basis: Vec<ExactMatrix>,
    pub samples_used: usize,
    pub dimension_history: Vec<usize>,
    pub stable: bool,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis elements flattened row-major.
    pub fn vectors(&self) -> Vec<Vec<GaussianRational>> {
        self.basis.iter().map(|m| m.data().to_vec()).collect()
    }
}

fn set_partitions(m: usize, max_blocks: usize, f: &mut impl FnMut(&[u16])) {
    fn rec(labels: &mut Vec<u16>, m: usize, used: u16, max_blocks: usize, f: &mut impl FnMut(&[u16])) {
        if labels.len() == m {
            f(labels);
            return;
        }
        let top = if (used as usize) < max_blocks { used + 1 } else { used };
        for b in 0..top {
            labels.push(b);
            rec(labels, m, used.max(b + 1), max_blocks, f);
            labels.pop();
        }
    }
    rec(&mut Vec::with_capacity(m), m, 0, max_blocks, f);
}

/// Whether an orbit given by the kernel `labels` can carry intertwiners of `kind`.
fn admissible(kind: SampleKind, labels: &[u16], signs: &[i64], k: usize) -> bool {
    let nb = labels.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    let mut size = vec![0usize; nb];
    let mut balance = vec![0i64; nb];
    for (p, &b) in labels.iter().enumerate() {
        size[b as usize] += 1;
        balance[b as usize] += if p < k { signs[p] } else { -signs[p] };
    }
    let even = size.iter().all(|s| s % 2 == 0);
    let global = balance.iter().sum::<i64>() == 0;
    match kind {
        SampleKind::Orthogonal => even,
        SampleKind::CircleOrthogonal => even && global,
        SampleKind::Unitary => balance.iter().all(|&x| x == 0),
        SampleKind::CircleScalar | SampleKind::AntidiagRealPair | SampleKind::AntidiagComplexPair => true,
    }
}

/// Incremental solver for `(T ⊗ I_d) ρ_k(u) = ρ_l(u) (T ⊗ I_d)` over a sequence of samples.
#[derive(Debug, Clone)]
pub struct IntertwinerSolver {
    kind: SampleKind,
    n: usize,
    upper: ColoredWord,
    lower: ColoredWord,
    rows: usize,
    cols: usize,
    /// Nonzero `(row, col)` positions of each 0/1 basis matrix.
    basis: Vec<Vec<(usize, usize)>>,
    echelon: Echelon,
    history: Vec<usize>,
}

impl IntertwinerSolver {
    pub fn new(kind: SampleKind, n: usize, upper: &ColoredWord, lower: &ColoredWord, mode: BasisMode) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        let (k, l) = (upper.len(), lower.len());
        let d = kind.block_size();
        let cols = checked_pow(n, k, DEFAULT_SIZE_CAP / d)?;
        let rows = checked_pow(n, l, DEFAULT_SIZE_CAP / d)?;
        let signs: Vec<i64> = upper.letters().iter().chain(lower.letters()).map(|c| c.sign()).collect();
        let mut basis = Vec::new();
        let full = mode == BasisMode::Full
            || matches!(
                kind,
                SampleKind::CircleScalar | SampleKind::AntidiagRealPair | SampleKind::AntidiagComplexPair
            );
        if full {
            let total = checked_pow(n, k + l, DEFAULT_UNKNOWN_CAP)?;
            let global = signs[..k].iter().sum::<i64>() == signs[k..].iter().sum::<i64>();
            if kind != SampleKind::CircleScalar || mode == BasisMode::Full || global {
                basis = (0..total).map(|x| vec![(x / cols, x % cols)]).collect();
            }
        } else {
            let mut overflow = false;
            set_partitions(k + l, n, &mut |labels| {
                if overflow || !admissible(kind, labels, &signs, k) {
                    return;
                }
                basis.push(orbit_positions(labels, n, k));
                overflow = basis.len() > DEFAULT_UNKNOWN_CAP;
            });
            if overflow {
                return Err(Error::SizeOverflow {
                    size: basis.len(),
                    cap: DEFAULT_UNKNOWN_CAP,
                });
            }
        }
        let m = basis.len();
        Ok(IntertwinerSolver {
            kind,
            n,
            upper: upper.clone(),
            lower: lower.clone(),
            rows,
            cols,
            basis,
            echelon: Echelon::new(m),
            history: Vec::new(),
        })
    }

    pub fn num_unknowns(&self) -> usize {
        self.basis.len()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len() - self.echelon.rank()
    }

    pub fn history(&self) -> &[usize] {
        &self.history
    }

    /// Imposes the equations of one sample and returns the new dimension.
    pub fn add_sample(&mut self, s: &Sample) -> Result<usize> {
        if s.n != self.n || s.block != self.kind.block_size() {
            return Err(Error::InvalidArgument(format!(
                "sample of size {}x{} blocks {} does not match N={} blocks {}",
                s.n,
                s.n,
                s.block,
                self.n,
                self.kind.block_size()
            )));
        }
        if !self.echelon.is_full() {
            let legs = LegBlocks::new(s);
            let residuals: Vec<Vec<GaussianRational>> = self.basis.iter().map(|e| self.residual(e, &legs)).collect();
            let len = residuals.first().map_or(0, Vec::len);
            for q in 0..len {
                if self.echelon.is_full() {
                    break;
                }
                if residuals.iter().all(|r| r[q].is_zero()) {
                    continue;
                }
                self.echelon.insert(residuals.iter().map(|r| r[q].clone()).collect());
            }
        }
        let dim = self.dimension();
        self.history.push(dim);
        Ok(dim)
    }

    /// `(E ⊗ I) ρ_k − ρ_l (E ⊗ I)` flattened row-major.
    fn residual(&self, e: &[(usize, usize)], legs: &LegBlocks) -> Vec<GaussianRational> {
        let d = legs.d;
        let (r, c) = (self.rows * d, self.cols * d);
        let mut x = vec![GaussianRational::zero(); r * c];
        for &(row, col) in e {
            for a in 0..d {
                x[(row * d + a) * c + col * d + a] = GaussianRational::one();
            }
        }
        let mut right = x.clone();
        for (t, &color) in self.upper.letters().iter().enumerate() {
            right = legs.apply_right(&right, r, self.upper.len(), t, color);
        }
        let mut left = x;
        for (t, &color) in self.lower.letters().iter().enumerate().rev() {
            left = legs.apply_left(&left, c, self.lower.len(), t, color);
        }
        right.iter().zip(&left).map(|(a, b)| a - b).collect()
    }

    /// Current solution space as matrices.
    pub fn hom_space(&self) -> HomSpace {
        let basis = self
            .echelon
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut m = ExactMatrix::zeros(self.rows, self.cols);
                for (coef, e) in v.iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for &(row, col) in e {
                        let cur = m.get(row, col) + coef;
                        m.set(row, col, cur);
                    }
                }
                m
            })
            .collect();
        HomSpace {
            kind: self.kind,
            n: self.n,
            upper: self.upper.clone(),
            lower: self.lower.clone(),
            basis,
            samples_used: self.history.len(),
            dimension_history: self.history.clone(),
            stable: false,
        }
    }
}

/// Positions of the index pairs whose kernel is exactly `labels`.
fn orbit_positions(labels: &[u16], n: usize, k: usize) -> Vec<(usize, usize)> {
    let nb = labels.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    let mut out = Vec::new();
    let mut vals = vec![0usize; nb];
    let mut used = vec![false; n];
    fn rec(
        b: usize,
        vals: &mut [usize],
        used: &mut [bool],
        n: usize,
        emit: &mut impl FnMut(&[usize]),
    ) {
        if b == vals.len() {
            emit(vals);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                vals[b] = v;
                rec(b + 1, vals, used, n, emit);
                used[v] = false;
            }
        }
    }
    rec(0, &mut vals, &mut used, n, &mut |vals| {
        let (mut row, mut col) = (0, 0);
        for (p, &b) in labels.iter().enumerate() {
            if p < k {
                col = col * n + vals[b as usize];
            } else {
                row = row * n + vals[b as usize];
            }
        }
        out.push((row, col));
    });
    out.sort_unstable();
    out
}

/// Entry blocks `u_ij` and `u_ij^*` of one sample.
struct LegBlocks {
    n: usize,
    d: usize,
    /// `[white, black][i][j]`, each `d×d` row-major.
    blocks: [Vec<Vec<Vec<GaussianRational>>>; 2],
}

impl LegBlocks {
    fn new(s: &Sample) -> Self {
        let (n, d) = (s.n, s.block);
        let mk = |adj: bool| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let e = s.entry(i, j);
                            let e = if adj { e.adjoint() } else { e };
                            e.data().to_vec()
                        })
                        .collect()
                })
                .collect()
        };
        LegBlocks {
            n,
            d,
            blocks: [mk(false), mk(true)],
        }
    }

    fn block(&self, color: Color, i: usize, j: usize) -> &[GaussianRational] {
        &self.blocks[(color == Color::Black) as usize][i][j]
    }

    /// `X · U_[t]` for an `rows × (N^legs d)` matrix `X`.
    fn apply_right(&self, x: &[GaussianRational], rows: usize, legs: usize, t: usize, color: Color) -> Vec<GaussianRational> {
        let (n, d) = (self.n, self.d);
        let cols = x.len() / rows.max(1);
        let stride = n.pow((legs - 1 - t) as u32);
        let mut y = vec![GaussianRational::zero(); x.len()];
        for r in 0..rows {
            let xr = &x[r * cols..(r + 1) * cols];
            if xr.iter().all(GaussianRational::is_zero) {
                continue;
            }
            for col in 0..cols {
                let (jm, beta) = (col / d, col % d);
                let jt = (jm / stride) % n;
                let base = jm - jt * stride;
                let mut acc = GaussianRational::zero();
                for i in 0..n {
                    let b = self.block(color, i, jt);
                    for a in 0..d {
                        let xv = &xr[(base + i * stride) * d + a];
                        let bv = &b[a * d + beta];
                        if !xv.is_zero() && !bv.is_zero() {
                            acc += &(xv * bv);
                        }
                    }
                }
                y[r * cols + col] = acc;
            }
        }
        y
    }

    /// `U_[t] · X` for an `(N^legs d) × cols` matrix `X`.
    fn apply_left(&self, x: &[GaussianRational], cols: usize, legs: usize, t: usize, color: Color) -> Vec<GaussianRational> {
        let (n, d) = (self.n, self.d);
        let rows = x.len() / cols.max(1);
        let stride = n.pow((legs - 1 - t) as u32);
        let mut y = vec![GaussianRational::zero(); x.len()];
        for row in 0..rows {
            let (im, alpha) = (row / d, row % d);
            let it = (im / stride) % n;
            let base = im - it * stride;
            for j in 0..n {
                let b = self.block(color, it, j);
                for beta in 0..d {
                    let bv = &b[alpha * d + beta];
                    if bv.is_zero() {
                        continue;
                    }
                    let src = ((base + j * stride) * d + beta) * cols;
                    for c in 0..cols {
                        let xv = &x[src + c];
                        if !xv.is_zero() {
                            y[row * cols + c] += &(bv * xv);
                        }
                    }
                }
            }
        }
        y
    }
}

/// Solution space across exactly `num_samples` samples with seeds `seed, seed + 1, ...`.
pub fn intertwiner_space(
    src: &SampleSource,
    upper: &ColoredWord,
    lower: &ColoredWord,
    num_samples: usize,
) -> Result<HomSpace> {
    if num_samples == 0 {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    let mut solver = IntertwinerSolver::new(src.kind, src.n, upper, lower, BasisMode::Reduced)?;
    for t in 0..num_samples {
        solver.add_sample(&sample(&src.with_seed(src.seed.wrapping_add(t as u64))))?;
    }
    let mut h = solver.hom_space();
    h.stable = is_stable(&h.dimension_history);
    Ok(h)
}

/// True once two consecutive samples left the dimension unchanged.
fn is_stable(history: &[usize]) -> bool {
    history.len() >= 3 && history[history.len() - 3..].windows(2).all(|w| w[0] == w[1])
}

/// Adds samples until the dimension is unchanged for two consecutive samples.
pub fn intertwiner_space_stable(
    src: &SampleSource,
    upper: &ColoredWord,
    lower: &ColoredWord,
    max_samples: usize,
) -> Result<HomSpace> {
    let mut solver = IntertwinerSolver::new(src.kind, src.n, upper, lower, BasisMode::Reduced)?;
    for t in 0..max_samples.max(1) {
        solver.add_sample(&sample(&src.with_seed(src.seed.wrapping_add(t as u64))))?;
        if is_stable(solver.history()) || (solver.dimension() == 0 && !solver.history().is_empty()) {
            break;
        }
    }
    let mut h = solver.hom_space();
    h.stable = is_stable(&h.dimension_history) || h.dimension() == 0;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sample::structured_elements;

    fn w(s: &str) -> ColoredWord {
        s.parse().unwrap()
    }

    #[test]
    fn set_partition_counts() {
        let mut c = 0;
        set_partitions(4, 4, &mut |_| c += 1);
        assert_eq!(c, 15);
        c = 0;
        set_partitions(4, 2, &mut |_| c += 1);
        assert_eq!(c, 8);
    }

    #[test]
    fn orthogonal_examples() {
        let src = SampleSource::new(SampleKind::Orthogonal, 3, 1);
        assert_eq!(intertwiner_space(&src, &w("w"), &w("w"), 3).unwrap().dimension(), 1);
        let fix = intertwiner_space_stable(&src, &w("-"), &w("wwww"), 8).unwrap();
        assert_eq!(fix.dimension(), 3);
        assert!(fix.stable);
    }

    #[test]
    fn unitary_unbalanced_word_has_no_fixed_vectors() {
        let src = SampleSource::new(SampleKind::Unitary, 2, 1);
        assert_eq!(intertwiner_space(&src, &w("-"), &w("wwww"), 2).unwrap().dimension(), 0);
        assert_eq!(intertwiner_space_stable(&src, &w("-"), &w("wbwb"), 8).unwrap().dimension(), 2);
    }

    #[test]
    fn reduced_and_full_routes_agree() {
        let cases = [
            (SampleKind::Orthogonal, "ww", "ww"),
            (SampleKind::Unitary, "wb", "bw"),
            (SampleKind::CircleOrthogonal, "w", "wwb"),
            (SampleKind::CircleScalar, "wb", "ww"),
            (SampleKind::CircleScalar, "w", "w"),
        ];
        for (kind, up, lo) in cases {
            let mut red = IntertwinerSolver::new(kind, 2, &w(up), &w(lo), BasisMode::Reduced).unwrap();
            let mut full = IntertwinerSolver::new(kind, 2, &w(up), &w(lo), BasisMode::Full).unwrap();
            for seed in 0..4 {
                let s = sample(&SampleSource::new(kind, 2, seed));
                red.add_sample(&s).unwrap();
                full.add_sample(&s).unwrap();
            }
            for s in structured_elements(kind, 2) {
                full.add_sample(&s).unwrap();
            }
            assert_eq!(red.dimension(), full.dimension(), "{kind:?} {up}->{lo}");
            assert!(red.num_unknowns() <= full.num_unknowns());
        }
    }

    #[test]
    fn solutions_commute_with_samples_and_symmetries() {
        let src = SampleSource::new(SampleKind::Unitary, 2, 9);
        let h = intertwiner_space_stable(&src, &w("wb"), &w("wb"), 8).unwrap();
        assert_eq!(h.dimension(), 2);
        let mut checks: Vec<Sample> = (20..22).map(|s| sample(&src.with_seed(s))).collect();
        checks.extend(structured_elements(SampleKind::Unitary, 2));
        for s in checks {
            let u = &s.fundamental;
            let rho = u.kron(&u.conj());
            for t in &h.basis {
                assert_eq!(t.mul(&rho).unwrap(), rho.mul(t).unwrap());
            }
        }
    }

    #[test]
    fn dimension_is_non_increasing() {
        let src = SampleSource::new(SampleKind::AntidiagRealPair, 2, 4);
        let h = intertwiner_space(&src, &w("ww"), &w("ww"), 4).unwrap();
        assert!(h.dimension_history.windows(2).all(|x| x[0] >= x[1]));
    }
}
