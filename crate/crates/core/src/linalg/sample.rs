//! Seeded exact samples of classical groups and of the antidiagonal matrix models.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::gaussian::GaussianRational;
use super::matrix::ExactMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    Orthogonal,
    Unitary,
    CircleScalar,
    /// `z·O` with independent circle scalar `z` and orthogonal `O`.
    CircleOrthogonal,
    AntidiagRealPair,
    AntidiagComplexPair,
}

impl SampleKind {
    pub const ALL: [SampleKind; 6] = [
        SampleKind::Orthogonal,
        SampleKind::Unitary,
        SampleKind::CircleScalar,
        SampleKind::CircleOrthogonal,
        SampleKind::AntidiagRealPair,
        SampleKind::AntidiagComplexPair,
    ];

    /// Size of the matrix entries: 2 for the antidiagonal models, 1 otherwise.
    pub fn block_size(self) -> usize {
        match self {
            SampleKind::AntidiagRealPair | SampleKind::AntidiagComplexPair => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SampleKind::Orthogonal => "orthogonal",
            SampleKind::Unitary => "unitary",
            SampleKind::CircleScalar => "circle_scalar",
            SampleKind::CircleOrthogonal => "circle_orthogonal",
            SampleKind::AntidiagRealPair => "antidiag_real_pair",
            SampleKind::AntidiagComplexPair => "antidiag_complex_pair",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SampleSource {
    pub kind: SampleKind,
    pub n: usize,
    pub seed: u64,
}

impl SampleSource {
    pub fn new(kind: SampleKind, n: usize, seed: u64) -> Self {
        SampleSource { kind, n, seed }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SampleSource { seed, ..self }
    }
}

/// An `N×N` matrix whose entries are `d×d` blocks, stored as an `Nd×Nd`
/// matrix with index `i * d + α`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub kind: SampleKind,
    pub n: usize,
    pub block: usize,
    pub fundamental: ExactMatrix,
    /// The ingredients: `[O]`, `[U]`, `[z]`, `[z, O]`, `[v]` or `[a, b]`.
    pub parts: Vec<ExactMatrix>,
}

impl Sample {
    pub fn entry(&self, i: usize, j: usize) -> ExactMatrix {
        let d = self.block;
        ExactMatrix::from_fn(d, d, |a, b| self.fundamental.get(i * d + a, j * d + b).clone())
    }

    /// All `N²` block entries in row-major order.
    pub fn entries(&self) -> Vec<ExactMatrix> {
        (0..self.n).flat_map(|i| (0..self.n).map(move |j| (i, j))).map(|(i, j)| self.entry(i, j)).collect()
    }

    pub fn is_unitary(&self) -> bool {
        self.fundamental.mul(&self.fundamental.adjoint()).map(|m| m.is_identity()).unwrap_or(false)
    }

    /// `ū · uᵀ = I`, i.e. the entrywise conjugate is the inverse transpose.
    pub fn conjugate_is_inverse_transpose(&self) -> bool {
        self.fundamental.conj().mul(&self.fundamental.transpose()).map(|m| m.is_identity()).unwrap_or(false)
    }

    /// Checks the defining relations of the sampled object exactly.
    pub fn satisfies_relations(&self) -> bool {
        let unitary = self.is_unitary();
        match self.kind {
            SampleKind::Orthogonal => {
                unitary && self.fundamental.data().iter().all(GaussianRational::is_real) && self.conjugate_is_inverse_transpose()
            }
            SampleKind::Unitary | SampleKind::CircleScalar | SampleKind::CircleOrthogonal => {
                unitary && self.conjugate_is_inverse_transpose()
            }
            SampleKind::AntidiagRealPair => unitary && self.half_commutes(),
            SampleKind::AntidiagComplexPair => unitary && self.star_products_commute(),
        }
    }

    /// Self-adjoint entries with `ab* = a*b` and `abc = cba` for all entries.
    pub fn half_commutes(&self) -> bool {
        let xs = self.entries();
        if xs.iter().any(|x| *x != x.adjoint()) {
            return false;
        }
        let prod = |a: &ExactMatrix, b: &ExactMatrix| a.mul(b).expect("square blocks");
        for a in &xs {
            for b in &xs {
                if prod(a, &b.adjoint()) != prod(&a.adjoint(), b) {
                    return false;
                }
                let ab = prod(a, b);
                for c in &xs {
                    if prod(&ab, c) != prod(&prod(c, b), a) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The products `a b*` and `a* b` over all entries pairwise commute.
    pub fn star_products_commute(&self) -> bool {
        let xs = self.entries();
        let prod = |a: &ExactMatrix, b: &ExactMatrix| a.mul(b).expect("square blocks");
        let mut ps = Vec::new();
        for a in &xs {
            for b in &xs {
                ps.push(prod(a, &b.adjoint()));
                ps.push(prod(&a.adjoint(), b));
            }
        }
        ps.iter().all(|p| ps.iter().all(|q| prod(p, q) == prod(q, p)))
    }
}

fn rand_rational(rng: &mut ChaCha8Rng) -> GaussianRational {
    let num: i64 = rng.gen_range(-6..=6);
    let den: i64 = rng.gen_range(1..=5);
    GaussianRational::from_ratio(num, den)
}

fn rand_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re = rand_rational(rng);
    let im = rand_rational(rng);
    &re + &(&im * &GaussianRational::i())
}

/// `(I − A)(I + A)^{-1}`; `A` must have no eigenvalue `−1`.
fn cayley(a: &ExactMatrix) -> ExactMatrix {
    let id = ExactMatrix::identity(a.rows());
    let plus = id.add(a).expect("square");
    let minus = id.sub(a).expect("square");
    minus.mul(&plus.inverse().expect("I + A is invertible for skew A")).expect("square")
}

fn sample_orthogonal(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut a = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = rand_rational(rng);
            a.set(j, i, -&x);
            a.set(i, j, x);
        }
    }
    let signs = ExactMatrix::from_fn(n, n, |i, j| {
        if i != j {
            GaussianRational::zero()
        } else if rng.gen_bool(0.5) {
            GaussianRational::one()
        } else {
            GaussianRational::from_int(-1)
        }
    });
    cayley(&a).mul(&signs).expect("square")
}

fn sample_unitary(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut s = ExactMatrix::zeros(n, n);
    for i in 0..n {
        s.set(i, i, &rand_rational(rng) * &GaussianRational::i());
        for j in i + 1..n {
            let x = rand_gaussian(rng);
            s.set(j, i, -x.conj());
            s.set(i, j, x);
        }
    }
    cayley(&s)
}

fn sample_circle(rng: &mut ChaCha8Rng) -> GaussianRational {
    let mut t = rand_rational(rng);
    while t.is_zero() {
        t = rand_rational(rng);
    }
    let t2 = &t * &t;
    let one = GaussianRational::one();
    let den = &one + &t2;
    let num = &(&one - &t2) + &(&(&t + &t) * &GaussianRational::i());
    &num / &den
}

/// Entries `[[0, x_ij], [y_ij, 0]]`.
fn antidiag(x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
    let n = x.rows();
    let mut m = ExactMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m.set(2 * i, 2 * j + 1, x.get(i, j).clone());
            m.set(2 * i + 1, 2 * j, y.get(i, j).clone());
        }
    }
    m
}

/// Deterministic in `(kind, n, seed)`.
pub fn sample(src: &SampleSource) -> Sample {
    let mut rng = ChaCha8Rng::seed_from_u64(src.seed);
    let n = src.n;
    let (fundamental, parts) = match src.kind {
        SampleKind::Orthogonal => {
            let o = sample_orthogonal(n, &mut rng);
            (o.clone(), vec![o])
        }
        SampleKind::Unitary => {
            let u = sample_unitary(n, &mut rng);
            (u.clone(), vec![u])
        }
        SampleKind::CircleScalar => {
            let z = sample_circle(&mut rng);
            (ExactMatrix::identity(n).scale(&z), vec![ExactMatrix::from_vec(1, 1, vec![z]).expect("1x1")])
        }
        SampleKind::CircleOrthogonal => {
            let z = sample_circle(&mut rng);
            let o = sample_orthogonal(n, &mut rng);
            (o.scale(&z), vec![ExactMatrix::from_vec(1, 1, vec![z]).expect("1x1"), o])
        }
        SampleKind::AntidiagRealPair => {
            let v = sample_unitary(n, &mut rng);
            (antidiag(&v, &v.conj()), vec![v])
        }
        SampleKind::AntidiagComplexPair => {
            let a = sample_unitary(n, &mut rng);
            let b = sample_unitary(n, &mut rng);
            (antidiag(&a, &b), vec![a, b])
        }
    };
    Sample {
        kind: src.kind,
        n,
        block: src.kind.block_size(),
        fundamental,
        parts,
    }
}

fn permutation_matrix(n: usize, perm: &[usize]) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| if perm[j] == i { GaussianRational::one() } else { GaussianRational::zero() })
}

fn diagonal(entries: Vec<GaussianRational>) -> ExactMatrix {
    let n = entries.len();
    let mut m = ExactMatrix::zeros(n, n);
    for (i, x) in entries.into_iter().enumerate() {
        m.set(i, i, x);
    }
    m
}

/// Explicit group elements generating the symmetries used to reduce the
/// intertwiner basis: permutations, sign changes, diagonal phases and scalars.
pub fn structured_elements(kind: SampleKind, n: usize) -> Vec<Sample> {
    let wrap = |m: ExactMatrix| Sample {
        kind,
        n,
        block: 1,
        fundamental: m.clone(),
        parts: vec![m],
    };
    let mut out = Vec::new();
    let perms = || {
        let mut v = Vec::new();
        if n >= 2 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            v.push(permutation_matrix(n, &swap));
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            v.push(permutation_matrix(n, &cycle));
        }
        v
    };
    // Quotients of conjugate Gaussian primes have infinite order.
    let phase = |re: i64, im: i64| {
        let p = GaussianRational::from_parts((re, 1), (im, 1));
        &p / &p.conj()
    };
    let primes = [(2, 1), (3, 2), (4, 1), (5, 2), (6, 1), (5, 4), (7, 2), (6, 5)];
    let z = GaussianRational::from_parts((3, 5), (4, 5));
    match kind {
        SampleKind::Orthogonal | SampleKind::CircleOrthogonal => {
            out.extend(perms().into_iter().map(wrap));
            let mut signs = vec![GaussianRational::one(); n];
            signs[0] = GaussianRational::from_int(-1);
            out.push(wrap(diagonal(signs)));
            if kind == SampleKind::CircleOrthogonal {
                out.push(wrap(ExactMatrix::identity(n).scale(&z)));
            }
        }
        SampleKind::Unitary => {
            out.extend(perms().into_iter().map(wrap));
            let ph: Vec<_> = (0..n).map(|i| phase(primes[i % 8].0, primes[i % 8].1)).collect();
            out.push(wrap(diagonal(ph)));
        }
        SampleKind::CircleScalar => out.push(wrap(ExactMatrix::identity(n).scale(&z))),
        SampleKind::AntidiagRealPair | SampleKind::AntidiagComplexPair => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_satisfy_their_relations() {
        for kind in SampleKind::ALL {
            for n in 1..=3 {
                for seed in 0..3 {
                    let s = sample(&SampleSource::new(kind, n, seed));
                    assert!(s.satisfies_relations(), "{kind:?} N={n} seed={seed}");
                    assert_eq!(s.fundamental.rows(), n * kind.block_size());
                }
            }
        }
    }

    #[test]
    fn named_examples() {
        let o = sample(&SampleSource::new(SampleKind::Orthogonal, 3, 1)).fundamental;
        assert!(o.mul(&o.transpose()).unwrap().is_identity());
        let z = sample(&SampleSource::new(SampleKind::CircleScalar, 1, 7)).fundamental;
        assert!((z.get(0, 0) * &z.get(0, 0).conj()).is_one());
        let a = sample(&SampleSource::new(SampleKind::AntidiagRealPair, 2, 3));
        assert!(a.is_unitary() && a.half_commutes());
    }

    #[test]
    fn deterministic_and_seed_sensitive() {
        let src = SampleSource::new(SampleKind::Unitary, 3, 42);
        assert_eq!(sample(&src), sample(&src));
        assert_ne!(sample(&src), sample(&src.with_seed(43)));
    }

    #[test]
    fn complex_model_does_not_half_commute() {
        let s = sample(&SampleSource::new(SampleKind::AntidiagComplexPair, 2, 5));
        assert!(s.star_products_commute());
        assert!(!s.half_commutes());
    }

    #[test]
    fn structured_elements_are_unitary() {
        for kind in SampleKind::ALL {
            for s in structured_elements(kind, 3) {
                assert!(s.is_unitary(), "{kind:?}");
            }
        }
    }
}
