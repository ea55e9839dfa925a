//! The linear map `T_π` attached to a diagram and its functoriality checks.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use super::gaussian::GaussianRational;
use super::matrix::ExactMatrix;
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};

/// Default bound on `N^k` and `N^l` for a single map.
pub const DEFAULT_SIZE_CAP: usize = 10_000;

/// Bound on the length `N^(k+l)` of a vectorized map.
pub const DEFAULT_VECTOR_CAP: usize = 1 << 20;

pub(crate) fn checked_pow(n: usize, e: usize, cap: usize) -> Result<usize> {
    let mut acc = 1usize;
    for _ in 0..e {
        acc = acc.saturating_mul(n);
        if acc > cap {
            return Err(Error::SizeOverflow { size: acc, cap });
        }
    }
    Ok(acc)
}

/// `1` when every block of `pi` carries a single index value, `0` otherwise.
/// Indices are 1-based.
pub fn delta(pi: &PartitionDiagram, upper_index: &[usize], lower_index: &[usize]) -> Result<u8> {
    if upper_index.len() != pi.upper().len() || lower_index.len() != pi.lower().len() {
        return Err(Error::InvalidArgument(format!(
            "index tuples of length {}/{} for a diagram with {}/{} points",
            upper_index.len(),
            lower_index.len(),
            pi.upper().len(),
            pi.lower().len()
        )));
    }
    if upper_index.iter().chain(lower_index).any(|&i| i == 0) {
        return Err(Error::InvalidArgument("indices are 1-based".into()));
    }
    let mut value = vec![0usize; pi.num_blocks()];
    for (&b, &i) in pi.labels().iter().zip(upper_index.iter().chain(lower_index)) {
        let slot = &mut value[b as usize];
        if *slot == 0 {
            *slot = i;
        } else if *slot != i {
            return Ok(0);
        }
    }
    Ok(1)
}

/// A sparse matrix with nonnegative integer entries, sorted by `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseT {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, u64)>,
}

impl SparseT {
    /// `T_π` at dimension `n`: row index is the lower multi-index, column index the
    /// upper one, both read lexicographically with the first leg most significant.
    pub fn of(pi: &PartitionDiagram, n: usize, cap: usize) -> Result<SparseT> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        let (k, l) = (pi.upper().len(), pi.lower().len());
        let cols = checked_pow(n, k, cap)?;
        let rows = checked_pow(n, l, cap)?;
        let nb = pi.num_blocks();
        // Contribution of block b taking value v: v * weight[b] to column / row.
        let mut col_w = vec![0usize; nb];
        let mut row_w = vec![0usize; nb];
        for (p, &b) in pi.labels().iter().enumerate() {
            if p < k {
                col_w[b as usize] += n.pow((k - 1 - p) as u32);
            } else {
                row_w[b as usize] += n.pow((l - 1 - (p - k)) as u32);
            }
        }
        let mut entries = Vec::new();
        let mut vals = vec![0usize; nb];
        loop {
            let c = vals.iter().zip(&col_w).map(|(v, w)| v * w).sum();
            let r = vals.iter().zip(&row_w).map(|(v, w)| v * w).sum();
            entries.push((r, c, 1));
            let mut b = 0;
            while b < nb {
                vals[b] += 1;
                if vals[b] < n {
                    break;
                }
                vals[b] = 0;
                b += 1;
            }
            if b == nb {
                break;
            }
        }
        entries.sort_unstable();
        Ok(SparseT { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, u64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn from_map(rows: usize, cols: usize, map: HashMap<(usize, usize), u64>) -> SparseT {
        let mut entries: Vec<_> = map.into_iter().filter(|e| e.1 != 0).map(|((r, c), v)| (r, c, v)).collect();
        entries.sort_unstable();
        SparseT { rows, cols, entries }
    }

    pub fn transpose(&self) -> SparseT {
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect();
        entries.sort_unstable();
        SparseT {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn scale(&self, s: u64) -> SparseT {
        if s == 0 {
            return SparseT {
                rows: self.rows,
                cols: self.cols,
                entries: Vec::new(),
            };
        }
        SparseT {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&(r, c, v)| (r, c, v * s)).collect(),
        }
    }

    /// Kronecker product; row `(r1, r2)` maps to `r1 * other.rows + r2`.
    pub fn kron(&self, other: &SparseT) -> SparseT {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for &(r1, c1, v1) in &self.entries {
            for &(r2, c2, v2) in &other.entries {
                entries.push((r1 * other.rows + r2, c1 * other.cols + c2, v1 * v2));
            }
        }
        entries.sort_unstable();
        SparseT {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            entries,
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseT) -> Result<SparseT> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
        for &(r, c, v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: HashMap<(usize, usize), u64> = HashMap::new();
        for &(r, m, v) in &self.entries {
            if let Some(row) = by_row.get(&m) {
                for &(c, w) in row {
                    *acc.entry((r, c)).or_insert(0) += v * w;
                }
            }
        }
        Ok(SparseT::from_map(self.rows, other.cols, acc))
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, self.cols);
        for &(r, c, v) in &self.entries {
            m.set(r, c, GaussianRational::from(BigRational::from_integer(BigInt::from(v))));
        }
        m
    }

    /// Frobenius inner product.
    pub fn inner(&self, other: &SparseT) -> u64 {
        let (mut i, mut j, mut acc) = (0, 0, 0u64);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (&self.entries[i], &other.entries[j]);
            match (a.0, a.1).cmp(&(b.0, b.1)) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += a.2 * b.2;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

/// Dense `T_π` under the default size cap.
pub fn t_matrix(pi: &PartitionDiagram, n: usize) -> Result<ExactMatrix> {
    t_matrix_capped(pi, n, DEFAULT_SIZE_CAP)
}

pub fn t_matrix_capped(pi: &PartitionDiagram, n: usize, cap: usize) -> Result<ExactMatrix> {
    Ok(SparseT::of(pi, n, cap)?.to_dense())
}

/// Outcome of the three functoriality identities for one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctorCheck {
    pub tensor: bool,
    pub composition: bool,
    pub involution: bool,
    pub loops: usize,
}

impl FunctorCheck {
    pub fn all(&self) -> bool {
        self.tensor && self.composition && self.involution
    }
}

/// Checks the identities for `pi` on top of `sigma` with sparse integer matrices.
pub fn check_functor(pi: &PartitionDiagram, sigma: &PartitionDiagram, n: usize) -> Result<FunctorCheck> {
    let (comp, loops) = pi.compose(sigma)?;
    let cap = DEFAULT_SIZE_CAP;
    let tp = SparseT::of(pi, n, cap)?;
    let ts = SparseT::of(sigma, n, cap)?;
    let tensor = SparseT::of(&pi.tensor(sigma), n, cap)? == tp.kron(&ts);
    let scale = (n as u64).pow(loops as u32);
    let composition = ts.mul(&tp)? == SparseT::of(&comp, n, cap)?.scale(scale);
    let involution =
        SparseT::of(&pi.involute(), n, cap)? == tp.transpose() && SparseT::of(&sigma.involute(), n, cap)? == ts.transpose();
    Ok(FunctorCheck {
        tensor,
        composition,
        involution,
        loops,
    })
}

pub fn verify_functor(pi: &PartitionDiagram, sigma: &PartitionDiagram, n: usize) -> Result<bool> {
    Ok(check_functor(pi, sigma, n)?.all())
}

/// The same identities evaluated with dense exact matrices.
pub fn check_functor_dense(pi: &PartitionDiagram, sigma: &PartitionDiagram, n: usize) -> Result<FunctorCheck> {
    let (comp, loops) = pi.compose(sigma)?;
    let tp = t_matrix(pi, n)?;
    let ts = t_matrix(sigma, n)?;
    let tensor = t_matrix(&pi.tensor(sigma), n)? == tp.kron(&ts);
    let factor = GaussianRational::from(BigRational::from_integer(BigInt::from(n).pow(loops)));
    let composition = ts.mul(&tp)? == t_matrix(&comp, n)?.scale(&factor);
    let involution = t_matrix(&pi.involute(), n)? == tp.adjoint() && t_matrix(&sigma.involute(), n)? == ts.adjoint();
    Ok(FunctorCheck {
        tensor,
        composition,
        involution,
        loops,
    })
}

fn check_shared_words(diagrams: &[PartitionDiagram]) -> Result<()> {
    if let Some(first) = diagrams.first() {
        for d in diagrams {
            if d.upper() != first.upper() || d.lower() != first.lower() {
                return Err(Error::InvalidArgument(format!(
                    "diagrams on different words: {}|{} and {}|{}",
                    first.upper(),
                    first.lower(),
                    d.upper(),
                    d.lower()
                )));
            }
        }
    }
    Ok(())
}

/// `T_π` flattened to a vector of length `N^(k+l)`, entry `row * cols + col`.
pub fn vectorize(pi: &PartitionDiagram, n: usize) -> Result<Vec<GaussianRational>> {
    let t = SparseT::of(pi, n, DEFAULT_SIZE_CAP)?;
    let len = t.rows() * t.cols();
    if len > DEFAULT_VECTOR_CAP {
        return Err(Error::SizeOverflow {
            size: len,
            cap: DEFAULT_VECTOR_CAP,
        });
    }
    let mut v = vec![GaussianRational::zero(); len];
    for &(r, c, x) in t.entries() {
        v[r * t.cols() + c] = GaussianRational::from_int(x as i64);
    }
    Ok(v)
}

/// Rank of `{T_π}` by exact elimination on the vectorized maps.
pub fn span_rank(diagrams: &[PartitionDiagram], n: usize) -> Result<usize> {
    check_shared_words(diagrams)?;
    if diagrams.is_empty() {
        return Ok(0);
    }
    let rows = diagrams.iter().map(|d| vectorize(d, n)).collect::<Result<Vec<_>>>()?;
    let len = rows[0].len();
    let data = rows.into_iter().flatten().collect();
    Ok(ExactMatrix::from_vec(diagrams.len(), len, data)?.rank())
}

/// Number of blocks of the join of two partitions of the same points.
fn join_blocks(a: &PartitionDiagram, b: &PartitionDiagram) -> usize {
    let na = a.num_blocks();
    let mut parent: Vec<usize> = (0..na + b.num_blocks()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (&x, &y) in a.labels().iter().zip(b.labels()) {
        let (rx, ry) = (find(&mut parent, x as usize), find(&mut parent, na + y as usize));
        if rx != ry {
            parent[rx] = ry;
        }
    }
    (0..parent.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Gram matrix `⟨T_π, T_σ⟩ = N^(blocks of π ∨ σ)`.
pub fn gram_matrix(diagrams: &[PartitionDiagram], n: usize) -> Result<ExactMatrix> {
    check_shared_words(diagrams)?;
    let m = diagrams.len();
    let big = BigInt::from(n);
    Ok(ExactMatrix::from_fn(m, m, |i, j| {
        let e = join_blocks(&diagrams[i], &diagrams[j]) as u32;
        GaussianRational::from(BigRational::from_integer(Pow::pow(&big, e)))
    }))
}
