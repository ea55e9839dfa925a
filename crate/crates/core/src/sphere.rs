//! The 2×2 antidiagonal model of the half-classical sphere, checked exactly.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::GaussianRational;

/// A 2×2 matrix `[[a, b], [c, d]]` over the Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Block2 {
    pub m: [[GaussianRational; 2]; 2],
}

impl Block2 {
    pub fn new(a: GaussianRational, b: GaussianRational, c: GaussianRational, d: GaussianRational) -> Self {
        Block2 { m: [[a, b], [c, d]] }
    }

    pub fn zero() -> Self {
        let z = GaussianRational::zero;
        Block2::new(z(), z(), z(), z())
    }

    pub fn identity() -> Self {
        Block2::diag(GaussianRational::one(), GaussianRational::one())
    }

    pub fn diag(a: GaussianRational, d: GaussianRational) -> Self {
        Block2::new(a, GaussianRational::zero(), GaussianRational::zero(), d)
    }

    pub fn antidiag(b: GaussianRational, c: GaussianRational) -> Self {
        Block2::new(GaussianRational::zero(), b, c, GaussianRational::zero())
    }

    pub fn mul(&self, o: &Block2) -> Block2 {
        let e = |i: usize, j: usize| &(&self.m[i][0] * &o.m[0][j]) + &(&self.m[i][1] * &o.m[1][j]);
        Block2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, o: &Block2) -> Block2 {
        let e = |i: usize, j: usize| &self.m[i][j] + &o.m[i][j];
        Block2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn adjoint(&self) -> Block2 {
        let e = |i: usize, j: usize| self.m[j][i].conj();
        Block2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn commutes_with(&self, o: &Block2) -> bool {
        self.mul(o) == o.mul(self)
    }
}

impl fmt::Display for Block2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1])
    }
}

/// A pair of unnormalized vectors `u, v ∈ Q(i)^N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelPoint {
    pub u: Vec<GaussianRational>,
    pub v: Vec<GaussianRational>,
    pub seed: Option<u64>,
}

fn rand_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    let mut part = || GaussianRational::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7));
    let re = part();
    let im = part();
    &re + &(&im * &GaussianRational::i())
}

/// A rational point of the unit sphere in `R^(m+1)` by inverse stereographic projection.
fn rational_sphere_point(m: usize, rng: &mut ChaCha8Rng) -> Vec<GaussianRational> {
    let y: Vec<GaussianRational> = (0..m)
        .map(|_| GaussianRational::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7)))
        .collect();
    let norm = y.iter().fold(GaussianRational::zero(), |acc, t| &acc + &(t * t));
    let one = GaussianRational::one();
    let den = &norm + &one;
    let mut out: Vec<GaussianRational> = y.iter().map(|t| &(t + t) / &den).collect();
    out.push(&(&norm - &one) / &den);
    out
}

impl ModelPoint {
    pub fn new(u: Vec<GaussianRational>, v: Vec<GaussianRational>) -> Result<Self> {
        if u.len() != v.len() || u.is_empty() {
            return Err(Error::InvalidArgument("u and v must be nonempty and of equal length".into()));
        }
        if u.iter().chain(&v).all(GaussianRational::is_zero) {
            return Err(Error::InvalidArgument("u and v are both zero".into()));
        }
        Ok(ModelPoint { u, v, seed: None })
    }

    pub fn from_ints(u: &[i64], v: &[i64]) -> Result<Self> {
        let g = |x: &[i64]| x.iter().map(|&t| GaussianRational::from_int(t)).collect();
        ModelPoint::new(g(u), g(v))
    }

    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let u: Vec<_> = (0..n).map(|_| rand_gaussian(&mut rng)).collect();
            let v: Vec<_> = (0..n).map(|_| rand_gaussian(&mut rng)).collect();
            if let Ok(mut p) = ModelPoint::new(u, v) {
                p.seed = Some(seed);
                return p;
            }
        }
    }

    /// A point with `Σ|u_i|² = Σ|v_i|² = 1` exactly.
    pub fn random_normalized(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let complex = |rng: &mut ChaCha8Rng| {
            let x = rational_sphere_point(2 * n - 1, rng);
            x.chunks(2)
                .map(|c| &c[0] + &(&c[1] * &GaussianRational::i()))
                .collect::<Vec<_>>()
        };
        let u = complex(&mut rng);
        let v = complex(&mut rng);
        ModelPoint {
            u,
            v,
            seed: Some(seed),
        }
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn rescaled(&self, lambda: &GaussianRational, mu: &GaussianRational) -> ModelPoint {
        ModelPoint {
            u: self.u.iter().map(|x| x * lambda).collect(),
            v: self.v.iter().map(|x| x * mu).collect(),
            seed: self.seed,
        }
    }
}

/// `X_i = [[0, u_i], [v_i, 0]]`.
pub fn build_model(p: &ModelPoint) -> Vec<Block2> {
    p.u.iter().zip(&p.v).map(|(a, b)| Block2::antidiag(a.clone(), b.clone())).collect()
}

/// `X_i X_j* = diag(u_i ū_j, v_i v̄_j)` and `X_j* X_i = diag(v_i v̄_j, u_i ū_j)` for all `i, j`.
pub fn check_block_formulae(x: &[Block2]) -> bool {
    let u = |i: usize| &x[i].m[0][1];
    let v = |i: usize| &x[i].m[1][0];
    if x.iter().any(|b| !b.m[0][0].is_zero() || !b.m[1][1].is_zero()) {
        return false;
    }
    (0..x.len()).all(|i| {
        (0..x.len()).all(|j| {
            let uu = u(i) * &u(j).conj();
            let vv = v(i) * &v(j).conj();
            x[i].mul(&x[j].adjoint()) == Block2::diag(uu.clone(), vv.clone()) && x[j].adjoint().mul(&x[i]) == Block2::diag(vv, uu)
        })
    })
}

/// All products `X_i X_j*` and `X_i* X_j` pairwise commute.
pub fn check_half_commutation(x: &[Block2]) -> bool {
    let mut ps = Vec::with_capacity(2 * x.len() * x.len());
    for a in x {
        for b in x {
            ps.push(a.mul(&b.adjoint()));
            ps.push(a.adjoint().mul(b));
        }
    }
    ps.iter().all(|p| ps.iter().all(|q| p.commutes_with(q)))
}

/// `abc = cba` for every `a, b, c ∈ {X_i, X_i*}`.
pub fn check_starstar_relations(x: &[Block2]) -> bool {
    let letters: Vec<Block2> = x.iter().flat_map(|b| [b.clone(), b.adjoint()]).collect();
    letters.iter().all(|a| {
        letters.iter().all(|b| {
            let ab = a.mul(b);
            letters.iter().all(|c| ab.mul(c) == c.mul(b).mul(a))
        })
    })
}

/// First pair `(i, j)`, 1-based, with `X_i X_j ≠ X_j X_i`.
pub fn noncommutativity_witness(x: &[Block2]) -> Option<(usize, usize)> {
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if !x[i].commutes_with(&x[j]) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// `Σ X_i X_i* = Σ X_i* X_i = I`.
pub fn check_normalization(x: &[Block2]) -> bool {
    let left = x.iter().fold(Block2::zero(), |acc, b| acc.add(&b.mul(&b.adjoint())));
    let right = x.iter().fold(Block2::zero(), |acc, b| acc.add(&b.adjoint().mul(b)));
    left == Block2::identity() && right == Block2::identity()
}

#[derive(Debug, Clone, Serialize)]
pub struct SphereSeedReport {
    pub seed: u64,
    pub n: usize,
    pub block_formulae: bool,
    pub half_commutation: bool,
    pub starstar_relations: bool,
    /// The three checks after independent rescalings of `u` and `v`.
    pub rescaled: bool,
    /// Normalization on an exact unit-norm point from the same seed.
    pub normalization: bool,
    pub witness: Option<(usize, usize)>,
}

impl SphereSeedReport {
    pub fn passed(&self) -> bool {
        self.block_formulae
            && self.half_commutation
            && self.starstar_relations
            && self.rescaled
            && self.normalization
            && (self.n < 2 || self.witness.is_some())
    }
}

pub fn sphere_check(n: usize, seed: u64) -> Result<SphereSeedReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let p = ModelPoint::random(n, seed);
    let x = build_model(&p);
    let all = |x: &[Block2]| check_block_formulae(x) && check_half_commutation(x) && check_starstar_relations(x);
    let lambda = GaussianRational::from_parts((2, 3), (-5, 7));
    let mu = GaussianRational::from_parts((-4, 1), (1, 2));
    let rescaled = all(&build_model(&p.rescaled(&lambda, &mu)));
    Ok(SphereSeedReport {
        seed,
        n,
        block_formulae: check_block_formulae(&x),
        half_commutation: check_half_commutation(&x),
        starstar_relations: check_starstar_relations(&x),
        rescaled,
        normalization: check_normalization(&build_model(&ModelPoint::random_normalized(n, seed))),
        witness: noncommutativity_witness(&x),
    })
}

/// One report per seed.
pub fn sphere_sweep(n: usize, seeds: &[u64]) -> Result<Vec<SphereSeedReport>> {
    seeds.iter().map(|&s| sphere_check(n, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_examples() {
        let p = ModelPoint::from_ints(&[1, 0], &[0, 1]).unwrap();
        let x = build_model(&p);
        assert_eq!(x[0], Block2::antidiag(GaussianRational::one(), GaussianRational::zero()));
        assert_eq!(x[1], Block2::antidiag(GaussianRational::zero(), GaussianRational::one()));
        assert_eq!(x[0].mul(&x[0].adjoint()), Block2::diag(GaussianRational::one(), GaussianRational::zero()));
        assert_eq!(noncommutativity_witness(&x), Some((1, 2)));
        let q = build_model(&ModelPoint::from_ints(&[1, 1], &[1, 1]).unwrap());
        assert_eq!(q[0].mul(&q[1].adjoint()), Block2::identity());
        assert!(ModelPoint::from_ints(&[0], &[0]).is_err());
        assert_eq!(noncommutativity_witness(&build_model(&ModelPoint::random(1, 3))), None);
    }

    #[test]
    fn seeded_points_pass() {
        for n in 1..=4 {
            for seed in 0..3 {
                assert!(sphere_check(n, seed).unwrap().passed(), "N={n} seed={seed}");
            }
        }
    }

    #[test]
    fn generic_matrices_fail() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x: Vec<Block2> = (0..2)
            .map(|_| {
                Block2::new(
                    rand_gaussian(&mut rng),
                    rand_gaussian(&mut rng),
                    rand_gaussian(&mut rng),
                    rand_gaussian(&mut rng),
                )
            })
            .collect();
        assert!(!check_half_commutation(&x));
        assert!(!check_starstar_relations(&x));
        assert!(!check_block_formulae(&x));
    }

    #[test]
    fn normalized_points_are_unit() {
        let p = ModelPoint::random_normalized(3, 5);
        let s = p.u.iter().fold(GaussianRational::zero(), |a, x| &a + &(x * &x.conj()));
        assert!(s.is_one());
        assert!(!check_normalization(&build_model(&ModelPoint::random(3, 5))));
    }
}
