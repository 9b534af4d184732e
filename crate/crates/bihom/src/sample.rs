//! Named small instances and randomized generators.
//!
//! The randomized constructions only produce *valid* algebras and
//! representations: abelian algebras with arbitrary commuting twists, and
//! twisted versions of classical Lie algebras where the new bracket is
//! δ(x,y) = [α(x), β(y)] for commuting algebra morphisms α, β. The latter
//! family reaches the genuinely BiHom regime (α ≠ β, both ≠ id, bracket not
//! classically skew).

use rand::Rng;

use crate::algebra::BiHomLieAlgebra;
use crate::linalg::{rat, zero_vec, Matrix, Rat, SubspaceBasis};
use crate::rep::{ActionPair, BiHomModule};
use crate::Result;

/// Abelian algebra with identity twists.
pub fn abelian(dim: usize) -> BiHomLieAlgebra {
    BiHomLieAlgebra::abelian(format!("abelian{dim}"), dim, Matrix::identity(dim), Matrix::identity(dim))
        .unwrap()
}

/// The 2-dimensional nonabelian Lie algebra [e1,e2] = e2, identity twists.
pub fn solvable2() -> BiHomLieAlgebra {
    let mut bracket = vec![vec![zero_vec(2); 2]; 2];
    bracket[0][1] = vec![rat(0), rat(1)];
    bracket[1][0] = vec![rat(0), rat(-1)];
    BiHomLieAlgebra::new("solvable2", 2, bracket, Matrix::identity(2), Matrix::identity(2)).unwrap()
}

/// The 3-dimensional Heisenberg algebra [e1,e2] = e3, identity twists.
pub fn heisenberg() -> BiHomLieAlgebra {
    let mut bracket = vec![vec![zero_vec(3); 3]; 3];
    bracket[0][1] = vec![rat(0), rat(0), rat(1)];
    bracket[1][0] = vec![rat(0), rat(0), rat(-1)];
    BiHomLieAlgebra::new("heisenberg", 3, bracket, Matrix::identity(3), Matrix::identity(3)).unwrap()
}

/// Twist a classical Lie algebra by two commuting algebra morphisms:
/// the new bracket is δ(x,y) = [α(x), β(y)] with twists (α, β).
pub fn twisted(
    name: impl Into<String>,
    base: &BiHomLieAlgebra,
    alpha: Matrix,
    beta: Matrix,
) -> Result<BiHomLieAlgebra> {
    let n = base.dim();
    let mut bracket = vec![vec![zero_vec(n); n]; n];
    for (i, row) in bracket.iter_mut().enumerate() {
        for (j, val) in row.iter_mut().enumerate() {
            *val = base.bracket_eval(&alpha.col(i), &beta.col(j))?;
        }
    }
    BiHomLieAlgebra::new(name, n, bracket, alpha, beta)
}

/// A multiplicative BiHom-Lie algebra with α ≠ β, both ≠ id: the twist of
/// [e1,e2] = e2 by the diagonal morphisms diag(1,2) and diag(1,3). Its
/// bracket is δ(e1,e2) = 3e2, δ(e2,e1) = −2e2, which is not classically
/// skew-symmetric.
pub fn bihom2() -> BiHomLieAlgebra {
    twisted(
        "bihom2",
        &solvable2(),
        Matrix::from_i64(&[&[1, 0], &[0, 2]]),
        Matrix::from_i64(&[&[1, 0], &[0, 3]]),
    )
    .unwrap()
}

/// Trivial actions on a module with identity twists.
pub fn trivial_rep(algebra: &BiHomLieAlgebra, module_dim: usize) -> (BiHomModule, ActionPair) {
    (
        BiHomModule::trivial_twists(module_dim),
        ActionPair::trivial(algebra.dim(), module_dim),
    )
}

/// The adjoint representation: V = L with the same twists,
/// λ_l(x,v) = [x,v] and λ_r(v,x) = [v,x].
pub fn adjoint_rep(algebra: &BiHomLieAlgebra) -> (BiHomModule, ActionPair) {
    let n = algebra.dim();
    let module = BiHomModule::new(n, algebra.alpha().clone(), algebra.beta().clone()).unwrap();
    let lambda_l = (0..n)
        .map(|i| (0..n).map(|p| algebra.bracket_basis(i, p).to_vec()).collect())
        .collect();
    let lambda_r = (0..n)
        .map(|p| (0..n).map(|i| algebra.bracket_basis(p, i).to_vec()).collect())
        .collect();
    (module, ActionPair::new(n, n, lambda_l, lambda_r).unwrap())
}

fn small(rng: &mut impl Rng) -> Rat {
    rat(rng.gen_range(-2..=2))
}

/// A pair of commuting matrices: both are affine in one shared random
/// matrix, c₀I + c₁A and d₀I + d₁A.
pub fn random_commuting_pair(rng: &mut impl Rng, dim: usize) -> (Matrix, Matrix) {
    let a = Matrix::from_fn(dim, dim, |_, _| small(rng));
    let scale = |c0: Rat, c1: Rat| {
        let mut m = Matrix::from_fn(dim, dim, |i, j| &c1 * a.get(i, j));
        for i in 0..dim {
            let v = m.get(i, i) + &c0;
            m.set(i, i, v);
        }
        m
    };
    (
        scale(small(rng), small(rng)),
        scale(small(rng), small(rng)),
    )
}

/// A random valid multiplicative BiHom-Lie algebra of dimension ≤ max_dim.
pub fn random_algebra(rng: &mut impl Rng, max_dim: usize) -> BiHomLieAlgebra {
    match rng.gen_range(0..3u8) {
        0 => {
            let n = rng.gen_range(1..=max_dim);
            let (a, b) = random_commuting_pair(rng, n);
            BiHomLieAlgebra::abelian("random_abelian", n, a, b).unwrap()
        }
        1 if max_dim >= 2 => {
            // morphisms of [e1,e2]=e2 are e1 -> e1 + b e2, e2 -> d e2;
            // two of them commute iff b(1-d') = b'(1-d), arranged here by
            // taking b = t(1-d), b' = t(1-d') with a shared t.
            let t = small(rng);
            let d = small(rng);
            let dp = small(rng);
            let one = rat(1);
            let morph = |d: &Rat| {
                Matrix::from_rows(vec![
                    vec![rat(1), rat(0)],
                    vec![&t * (&one - d), d.clone()],
                ])
                .unwrap()
            };
            twisted("random_solvable2", &solvable2(), morph(&d), morph(&dp)).unwrap()
        }
        2 if max_dim >= 3 => {
            // diagonal morphisms of the Heisenberg algebra: e3 scales by the
            // product of the e1, e2 factors
            let (a1, a2) = (small(rng), small(rng));
            let (b1, b2) = (small(rng), small(rng));
            let diag3 = |x: &Rat, y: &Rat| {
                let mut m = Matrix::zero(3, 3);
                m.set(0, 0, x.clone());
                m.set(1, 1, y.clone());
                m.set(2, 2, x * y);
                m
            };
            twisted("random_heisenberg", &heisenberg(), diag3(&a1, &a2), diag3(&b1, &b2)).unwrap()
        }
        _ => {
            let n = rng.gen_range(1..=max_dim);
            let (a, b) = random_commuting_pair(rng, n);
            BiHomLieAlgebra::abelian("random_abelian", n, a, b).unwrap()
        }
    }
}

/// A random valid representation of the given algebra: either trivial
/// actions with random commuting module twists, or the adjoint action.
pub fn random_rep(
    rng: &mut impl Rng,
    algebra: &BiHomLieAlgebra,
    max_module_dim: usize,
) -> (BiHomModule, ActionPair) {
    if rng.gen_bool(0.5) && algebra.dim() <= max_module_dim {
        adjoint_rep(algebra)
    } else {
        let m = rng.gen_range(1..=max_module_dim);
        let (a, b) = random_commuting_pair(rng, m);
        let module = BiHomModule::new(m, a, b).unwrap();
        (module, ActionPair::trivial(algebra.dim(), m))
    }
}

/// A random element of a subspace: small integer combination of the basis.
pub fn random_combination(rng: &mut impl Rng, basis: &SubspaceBasis) -> Vec<Rat> {
    let mut out = zero_vec(basis.ambient_dim());
    for v in basis.vectors() {
        let c = small(rng);
        for (o, x) in out.iter_mut().zip(v) {
            *o = &*o + &(&c * x);
        }
    }
    out
}

/// A random bilinear map M×M → M as a structure-constant tensor with small
/// integer entries. No axioms are imposed.
pub fn random_bilinear(rng: &mut impl Rng, dim: usize) -> Vec<Vec<Vec<Rat>>> {
    (0..dim)
        .map(|_| (0..dim).map(|_| (0..dim).map(|_| small(rng)).collect()).collect())
        .collect()
}
