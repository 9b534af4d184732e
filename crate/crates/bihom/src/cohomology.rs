//! The circle product and bracket on cochains, the coboundary operators D₁
//! and D₂, the spaces Z² and B², the group H² = Z²/B², and cocycle
//! equivalence.
//!
//! D₂ is implemented in the alternating-sign form of the 2-cocycle
//! definition, with the cyclic operator form `[δ+λ, θ]` available separately
//! for cross-checking; the two can disagree only for non-invertible twists.

use num::{One, Zero};

use crate::algebra::BiHomLieAlgebra;
use crate::linalg::{quotient_dim, vec_add, vec_is_zero, vec_neg, vec_sub, zero_vec, Matrix, Rat, SubspaceBasis};
use crate::rep::{cochain1_basis, cochain2_basis, ActionPair, BiHomModule, Cochain1, Cochain2};
use crate::{Error, Result};

/// A bilinear map M×M → M as a structure-constant tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    dim: usize,
    tensor: Vec<Vec<Vec<Rat>>>,
}

impl BilinearMap {
    pub fn new(dim: usize, tensor: Vec<Vec<Vec<Rat>>>) -> Result<Self> {
        let ok = tensor.len() == dim
            && tensor.iter().all(|r| r.len() == dim)
            && tensor.iter().flatten().all(|v| v.len() == dim);
        if !ok {
            return Err(Error::DimensionMismatch(format!(
                "bilinear tensor must be {dim}x{dim}x{dim}"
            )));
        }
        Ok(BilinearMap { dim, tensor })
    }

    pub fn zero(dim: usize) -> Self {
        BilinearMap {
            dim,
            tensor: vec![vec![zero_vec(dim); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (o, t) in out.iter_mut().zip(&self.tensor[i][j]) {
                    *o = &*o + &(xi * yj) * t;
                }
            }
        }
        out
    }
}

/// A trilinear map X×X×X → Y by its values on basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trilinear {
    in_dim: usize,
    out_dim: usize,
    values: Vec<Vec<Vec<Vec<Rat>>>>,
}

impl Trilinear {
    fn from_fn(
        in_dim: usize,
        out_dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vec<Rat>,
    ) -> Self {
        let values = (0..in_dim)
            .map(|i| {
                (0..in_dim)
                    .map(|j| (0..in_dim).map(|k| f(i, j, k)).collect())
                    .collect()
            })
            .collect();
        Trilinear {
            in_dim,
            out_dim,
            values,
        }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> &[Rat] {
        &self.values[i][j][k]
    }

    pub fn is_zero(&self) -> bool {
        self.values
            .iter()
            .flatten()
            .flatten()
            .all(|v| vec_is_zero(v))
    }

    pub fn add(&self, other: &Trilinear) -> Trilinear {
        assert_eq!(self.in_dim, other.in_dim);
        assert_eq!(self.out_dim, other.out_dim);
        Trilinear::from_fn(self.in_dim, self.out_dim, |i, j, k| {
            vec_add(&self.values[i][j][k], &other.values[i][j][k])
        })
    }

    /// Flatten to ℚ^{in³·out}, index ((i·n + j)·n + k)·out + p.
    pub fn to_flat(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.in_dim.pow(3) * self.out_dim);
        for plane in &self.values {
            for row in plane {
                for v in row {
                    out.extend(v.iter().cloned());
                }
            }
        }
        out
    }
}

/// A 3-cochain: trilinear L×L×L → V.
pub type Cochain3 = Trilinear;

fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = zero_vec(dim);
    v[i] = Rat::one();
    v
}

/// The circle product of two bilinear maps on M:
/// (a,b,c) ↦ f(β²a, g(βb, αc)) + f(β²b, g(βc, αa)) + f(β²c, g(βa, αb)),
/// with g in the inner slot of all three terms.
pub fn circle(f: &BilinearMap, g: &BilinearMap, alpha: &Matrix, beta: &Matrix) -> Trilinear {
    let n = f.dim();
    assert_eq!(g.dim(), n);
    let beta2 = beta.mul(beta);
    let term = |a: usize, b: usize, c: usize| {
        f.eval(
            &beta2.col(a),
            &g.eval(&beta.col(b), &alpha.col(c)),
        )
    };
    Trilinear::from_fn(n, n, |i, j, k| {
        vec_add(&vec_add(&term(i, j, k), &term(j, k, i)), &term(k, i, j))
    })
}

/// [f,g] = f∘g + g∘f; symmetric in f and g.
pub fn bracket2(f: &BilinearMap, g: &BilinearMap, alpha: &Matrix, beta: &Matrix) -> Trilinear {
    circle(f, g, alpha, beta).add(&circle(g, f, alpha, beta))
}

/// [f,f] = 0, the operator-form characterization of the BiHom-Jacobi
/// condition for a (β,α)-twisted skew bilinear map.
pub fn is_bihom_bracket(f: &BilinearMap, alpha: &Matrix, beta: &Matrix) -> bool {
    bracket2(f, f, alpha, beta).is_zero()
}

/// D₁(f)(x,y) = −f(δ(x,y)) + λ_l(x, f(y)) + λ_r(f(x), y).
pub fn d1(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
    f: &Cochain1,
) -> Result<Cochain2> {
    let n = algebra.dim();
    let m = module.dim();
    let mut theta = vec![vec![zero_vec(m); n]; n];
    for (i, row) in theta.iter_mut().enumerate() {
        for (j, val) in row.iter_mut().enumerate() {
            let e_i = basis_vec(n, i);
            let e_j = basis_vec(n, j);
            let mut t = vec_neg(&f.apply(algebra.bracket_basis(i, j)));
            t = vec_add(&t, &act.eval_left(&e_i, &f.apply(&e_j))?);
            t = vec_add(&t, &act.eval_right(&f.apply(&e_i), &e_j)?);
            *val = t;
        }
    }
    Cochain2::new(n, m, theta)
}

/// The alternating-sign cocycle operator: D₂(θ)(x,y,z) =
///   θ(β²x, δ(βy,αz)) − θ(β²y, δ(βx,αz)) + θ(β²z, δ(βx,αy))
/// + λ_l(β²x, θ(βy,αz)) − λ_l(β²y, θ(βx,αz)) + λ_l(β²z, θ(βx,αy)).
///
/// θ ∈ Z² ⟺ the returned trilinear map is zero.
pub fn d2(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
    theta: &Cochain2,
) -> Result<Cochain3> {
    let n = algebra.dim();
    let m = module.dim();
    if theta.algebra_dim() != n || theta.module_dim() != m {
        return Err(Error::DimensionMismatch(
            "d2: cochain does not match algebra/module dimensions".to_string(),
        ));
    }
    let a = algebra.alpha();
    let b = algebra.beta();
    let b2 = b.mul(b);
    let mut values = vec![vec![vec![zero_vec(m); n]; n]; n];
    for (i, plane) in values.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            for (k, val) in row.iter_mut().enumerate() {
                let pair = |x: usize, y: usize, z: usize| -> Result<Vec<Rat>> {
                    // theta(b^2 x, delta(b y, a z)) + lambda_l(b^2 x, theta(b y, a z))
                    let delta = algebra.bracket_eval(&b.col(y), &a.col(z))?;
                    let t1 = theta.eval(&b2.col(x), &delta)?;
                    let t2 = act.eval_left(&b2.col(x), &theta.eval(&b.col(y), &a.col(z))?)?;
                    Ok(vec_add(&t1, &t2))
                };
                let mut v = pair(i, j, k)?;
                v = vec_sub(&v, &pair(j, i, k)?);
                v = vec_add(&v, &pair(k, i, j)?);
                *val = v;
            }
        }
    }
    Ok(Trilinear {
        in_dim: n,
        out_dim: m,
        values,
    })
}

/// The cyclic operator form of D₂: [δ+λ_l+λ_r, θ] computed on the
/// semidirect space L⊕V with block-diagonal twists. Agrees with the
/// alternating form whenever the twists are invertible.
pub fn d2_operator_form(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
    theta: &Cochain2,
) -> Result<Trilinear> {
    let n = algebra.dim();
    let m = module.dim();
    let total = n + m;
    let embed = |l_part: &[Rat], v_part: &[Rat]| {
        let mut out = zero_vec(total);
        out[..n].clone_from_slice(l_part);
        out[n..].clone_from_slice(v_part);
        out
    };
    let mut d_tensor = vec![vec![zero_vec(total); total]; total];
    let mut theta_tensor = vec![vec![zero_vec(total); total]; total];
    for (x, row) in d_tensor.iter_mut().enumerate() {
        for (y, val) in row.iter_mut().enumerate() {
            *val = match (x < n, y < n) {
                (true, true) => embed(algebra.bracket_basis(x, y), &zero_vec(m)),
                (true, false) => embed(&zero_vec(n), &act.lambda_l()[x][y - n]),
                (false, true) => embed(&zero_vec(n), &act.lambda_r()[x - n][y]),
                (false, false) => zero_vec(total),
            };
        }
    }
    for (x, row) in theta_tensor.iter_mut().enumerate() {
        for (y, val) in row.iter_mut().enumerate() {
            if x < n && y < n {
                *val = embed(&zero_vec(n), theta.value(x, y));
            }
        }
    }
    let d = BilinearMap::new(total, d_tensor)?;
    let th = BilinearMap::new(total, theta_tensor)?;
    let alpha_m = algebra.alpha().block_diag(module.alpha_v());
    let beta_m = algebra.beta().block_diag(module.beta_v());
    Ok(bracket2(&d, &th, &alpha_m, &beta_m))
}

/// Bases of Z² and B², the dimension of H², and chosen coset
/// representatives. All live in the ambient ℚ^{m·n²} coordinate system of
/// bilinear maps L×L → V.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub z2: SubspaceBasis,
    pub b2: SubspaceBasis,
    pub h2_dim: usize,
    pub representatives: Vec<Cochain2>,
}

/// Z² = ker(D₂) inside the cochain-2 subspace.
pub fn compute_z2(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
) -> Result<SubspaceBasis> {
    let n = algebra.dim();
    let m = module.dim();
    let ambient = m * n * n;
    let c2 = cochain2_basis(algebra, module);
    if c2.dim() == 0 {
        return Ok(SubspaceBasis::empty(ambient));
    }
    // columns: D2 applied to each C2 basis cochain
    let images: Vec<Vec<Rat>> = c2
        .vectors()
        .iter()
        .map(|flat| {
            let theta = Cochain2::from_flat(n, m, flat)?;
            Ok(d2(algebra, module, act, &theta)?.to_flat())
        })
        .collect::<Result<_>>()?;
    let d2_matrix = Matrix::from_col_vectors(n.pow(3) * m, &images);
    let kernel = d2_matrix.kernel_basis();
    // map kernel coordinates back through the inclusion basis
    let vectors = kernel
        .vectors()
        .iter()
        .map(|coords| {
            let mut v = zero_vec(ambient);
            for (c, basis_vec) in coords.iter().zip(c2.vectors()) {
                for (o, x) in v.iter_mut().zip(basis_vec) {
                    *o = &*o + &(c * x);
                }
            }
            v
        })
        .collect();
    Ok(SubspaceBasis::from_spanning(ambient, vectors))
}

/// B² = Im(D₁) inside the same ambient coordinate space.
pub fn compute_b2(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
) -> Result<SubspaceBasis> {
    let n = algebra.dim();
    let m = module.dim();
    let ambient = m * n * n;
    let c1 = cochain1_basis(algebra, module);
    let images: Vec<Vec<Rat>> = c1
        .vectors()
        .iter()
        .map(|flat| {
            let f = Cochain1::from_flat(algebra, module, flat)?;
            Ok(d1(algebra, module, act, &f)?.to_flat())
        })
        .collect::<Result<_>>()?;
    Ok(SubspaceBasis::from_spanning(ambient, images))
}

/// H² = Z²/B², with representatives extending a basis of B² to Z² selected
/// by rref pivoting (deterministic).
pub fn compute_h2(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
) -> Result<CohomologyResult> {
    let n = algebra.dim();
    let m = module.dim();
    let z2 = compute_z2(algebra, module, act)?;
    let b2 = compute_b2(algebra, module, act)?;
    if !z2.contains_subspace(&b2)? {
        return Err(Error::Containment(
            "B2 is not contained in Z2: D2 after D1 is nonzero, the representation is invalid"
                .to_string(),
        ));
    }
    let h2_dim = quotient_dim(&z2, &b2)?;
    // stack B2 then Z2 vectors as columns; pivots landing in the Z2 block
    // pick the coset representatives
    let mut cols: Vec<Vec<Rat>> = b2.vectors().to_vec();
    cols.extend(z2.vectors().iter().cloned());
    let stacked = Matrix::from_col_vectors(m * n * n, &cols);
    let (_, pivots) = stacked.rref();
    let representatives = pivots
        .iter()
        .filter(|&&c| c >= b2.dim())
        .map(|&c| Cochain2::from_flat(n, m, &z2.vectors()[c - b2.dim()]))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(representatives.len(), h2_dim);
    Ok(CohomologyResult {
        z2,
        b2,
        h2_dim,
        representatives,
    })
}

/// D₂(D₁(f)) = 0, the composite-vanishing theorem, checked on one cochain.
pub fn verify_d2_d1_zero(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
    f: &Cochain1,
) -> Result<bool> {
    let df = d1(algebra, module, act, f)?;
    Ok(d2(algebra, module, act, &df)?.is_zero())
}

/// Find h ∈ C¹(L,V) with D₁(h) = θ′ − θ, when the cocycles are
/// cohomologous. Errors if either input fails the cocycle condition.
pub fn cocycles_cohomologous(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
    theta: &Cochain2,
    theta_prime: &Cochain2,
) -> Result<Option<Cochain1>> {
    for (which, t) in [("theta", theta), ("theta_prime", theta_prime)] {
        if !d2(algebra, module, act, t)?.is_zero() {
            return Err(Error::Precondition(format!(
                "{which} is not a 2-cocycle"
            )));
        }
    }
    let n = algebra.dim();
    let m = module.dim();
    let c1 = cochain1_basis(algebra, module);
    let target = theta_prime.sub(theta).to_flat();
    if c1.dim() == 0 {
        return Ok(if vec_is_zero(&target) {
            Some(Cochain1::zero(algebra, module))
        } else {
            None
        });
    }
    let images: Vec<Vec<Rat>> = c1
        .vectors()
        .iter()
        .map(|flat| {
            let f = Cochain1::from_flat(algebra, module, flat)?;
            Ok(d1(algebra, module, act, &f)?.to_flat())
        })
        .collect::<Result<_>>()?;
    let d1_matrix = Matrix::from_col_vectors(m * n * n, &images);
    let Some(coords) = d1_matrix.solve(&target)? else {
        return Ok(None);
    };
    let mut flat = zero_vec(m * n);
    for (c, basis_vec) in coords.iter().zip(c1.vectors()) {
        for (o, x) in flat.iter_mut().zip(basis_vec) {
            *o = &*o + &(c * x);
        }
    }
    Ok(Some(Cochain1::from_flat(algebra, module, &flat)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::sample;

    fn solvable_bracket_map() -> BilinearMap {
        BilinearMap::new(2, sample::solvable2().bracket_tensor().clone()).unwrap()
    }

    #[test]
    fn circle_examples() {
        let id = Matrix::identity(2);
        let f = solvable_bracket_map();
        let z = BilinearMap::zero(2);
        assert!(circle(&f, &z, &id, &id).is_zero());
        assert!(circle(&z, &f, &id, &id).is_zero());
        // hand evaluation at (e1, e1, e2):
        // f(e1, f(e1,e2)) + f(e1, f(e2,e1)) + f(e2, f(e1,e1)) = e2 - e2 + 0
        let c = circle(&f, &f, &id, &id);
        assert!(vec_is_zero(c.value(0, 0, 1)));
    }

    #[test]
    fn bracket2_identities() {
        let id = Matrix::identity(2);
        let f = solvable_bracket_map();
        let z = BilinearMap::zero(2);
        assert!(bracket2(&f, &z, &id, &id).is_zero());
        let g = BilinearMap::new(
            2,
            vec![
                vec![vec![rat(1), rat(0)], vec![rat(0), rat(2)]],
                vec![vec![rat(-1), rat(1)], vec![rat(2), rat(0)]],
            ],
        )
        .unwrap();
        assert_eq!(bracket2(&f, &g, &id, &id), bracket2(&g, &f, &id, &id));
        // [f,f] = 2 f∘f
        let ff = bracket2(&f, &f, &id, &id);
        let cff = circle(&f, &f, &id, &id);
        assert_eq!(ff, cff.add(&cff));
    }

    #[test]
    fn is_bihom_bracket_agrees_with_jacobi() {
        let id2 = Matrix::identity(2);
        assert!(is_bihom_bracket(&BilinearMap::zero(2), &id2, &id2));
        assert!(is_bihom_bracket(&solvable_bracket_map(), &id2, &id2));

        // skew but non-Jacobi on 3-dim: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e3
        let mut t = vec![vec![zero_vec(3); 3]; 3];
        t[0][1] = vec![rat(0), rat(0), rat(1)];
        t[1][0] = vec![rat(0), rat(0), rat(-1)];
        t[1][2] = vec![rat(1), rat(0), rat(0)];
        t[2][1] = vec![rat(-1), rat(0), rat(0)];
        t[2][0] = vec![rat(0), rat(0), rat(1)];
        t[0][2] = vec![rat(0), rat(0), rat(-1)];
        let id3 = Matrix::identity(3);
        let f = BilinearMap::new(3, t.clone()).unwrap();
        let alg =
            crate::algebra::BiHomLieAlgebra::new("nj", 3, t, id3.clone(), id3.clone()).unwrap();
        // cross-module agreement with the basis-tuple Jacobi check
        assert_eq!(
            is_bihom_bracket(&f, &id3, &id3),
            alg.check_bihom_jacobi().passed()
        );
        assert!(!is_bihom_bracket(&f, &id3, &id3));
    }

    #[test]
    fn d1_examples() {
        let l = sample::solvable2();
        let (module, act) = sample::trivial_rep(&l, 1);
        // f(e1) = 0, f(e2) = 1: D1(f)(e1,e2) = -f([e1,e2]) = -1
        let f = Cochain1::new(&l, &module, Matrix::from_i64(&[&[0, 1]])).unwrap();
        let df = d1(&l, &module, &act, &f).unwrap();
        assert_eq!(df.value(0, 1), &[rat(-1)]);
        assert_eq!(df.value(1, 0), &[rat(1)]);
        assert!(crate::rep::is_cochain2(&l, &df).unwrap());

        // abelian L with adjoint-style zero bracket and trivial actions:
        // everything vanishes
        let ab = sample::abelian(2);
        let (module, act) = sample::trivial_rep(&ab, 1);
        let f = Cochain1::new(&ab, &module, Matrix::from_i64(&[&[1, 2]])).unwrap();
        assert!(d1(&ab, &module, &act, &f).unwrap().is_zero());
    }

    #[test]
    fn d2_examples() {
        let l = sample::solvable2();
        let (module, act) = sample::trivial_rep(&l, 1);
        assert!(d2(&l, &module, &act, &Cochain2::zero(2, 1)).unwrap().is_zero());

        // theta(e1,e2) = 1 on the solvable algebra is a cocycle
        let mut t = vec![vec![zero_vec(1); 2]; 2];
        t[0][1] = vec![rat(1)];
        t[1][0] = vec![rat(-1)];
        let theta = Cochain2::new(2, 1, t).unwrap();
        assert!(d2(&l, &module, &act, &theta).unwrap().is_zero());

        // abelian L, trivial actions: every theta is closed
        let ab = sample::abelian(2);
        let (module, act) = sample::trivial_rep(&ab, 1);
        let mut t = vec![vec![zero_vec(1); 2]; 2];
        t[0][1] = vec![rat(3)];
        t[1][0] = vec![rat(5)]; // not even skew; still annihilated here
        let theta = Cochain2::new(2, 1, t).unwrap();
        assert!(d2(&ab, &module, &act, &theta).unwrap().is_zero());
    }

    #[test]
    fn z2_b2_h2_examples() {
        // abelian dim 2, trivial 1-dim module: (Z2, B2, H2) = (1, 0, 1)
        let ab = sample::abelian(2);
        let (module, act) = sample::trivial_rep(&ab, 1);
        let result = compute_h2(&ab, &module, &act).unwrap();
        assert_eq!(
            (result.z2.dim(), result.b2.dim(), result.h2_dim),
            (1, 0, 1)
        );
        assert_eq!(result.representatives.len(), 1);

        // solvable2, trivial 1-dim module: (1, 1, 0)
        let l = sample::solvable2();
        let (module, act) = sample::trivial_rep(&l, 1);
        let result = compute_h2(&l, &module, &act).unwrap();
        assert_eq!(
            (result.z2.dim(), result.b2.dim(), result.h2_dim),
            (1, 1, 0)
        );

        // n = 1: skewness kills all 2-cochains on a line
        let line = sample::abelian(1);
        let (module, act) = sample::trivial_rep(&line, 1);
        assert_eq!(compute_z2(&line, &module, &act).unwrap().dim(), 0);

        // C1 empty => B2 = 0
        let l = crate::algebra::BiHomLieAlgebra::abelian(
            "z",
            1,
            Matrix::zero(1, 1),
            Matrix::identity(1),
        )
        .unwrap();
        let module = BiHomModule::trivial_twists(1);
        let act = ActionPair::trivial(1, 1);
        assert_eq!(compute_b2(&l, &module, &act).unwrap().dim(), 0);
    }

    #[test]
    fn abelian_scaling_law() {
        // abelian L dim n, trivial module dim m: H2 = m n (n-1) / 2
        for n in 1..=4 {
            for m in 1..=2 {
                let l = sample::abelian(n);
                let (module, act) = sample::trivial_rep(&l, m);
                let result = compute_h2(&l, &module, &act).unwrap();
                assert_eq!(result.h2_dim, m * n * (n - 1) / 2, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn cohomologous_examples() {
        let l = sample::solvable2();
        let (module, act) = sample::trivial_rep(&l, 1);
        let mut t = vec![vec![zero_vec(1); 2]; 2];
        t[0][1] = vec![rat(1)];
        t[1][0] = vec![rat(-1)];
        let theta = Cochain2::new(2, 1, t).unwrap();
        // theta' = theta: h = 0 works
        let h = cocycles_cohomologous(&l, &module, &act, &theta, &theta)
            .unwrap()
            .expect("equal cocycles are cohomologous");
        assert!(d1(&l, &module, &act, &h).unwrap().is_zero());

        // theta' = theta + d1(g)
        let g = Cochain1::new(&l, &module, Matrix::from_i64(&[&[0, 3]])).unwrap();
        let dg = d1(&l, &module, &act, &g).unwrap();
        let theta_prime = theta.add(&dg);
        let h = cocycles_cohomologous(&l, &module, &act, &theta, &theta_prime)
            .unwrap()
            .expect("differ by a coboundary");
        assert_eq!(d1(&l, &module, &act, &h).unwrap(), dg);

        // abelian L: B2 = 0, so the basis alternating form is not
        // cohomologous to zero
        let ab = sample::abelian(2);
        let (module, act) = sample::trivial_rep(&ab, 1);
        let mut t = vec![vec![zero_vec(1); 2]; 2];
        t[0][1] = vec![rat(1)];
        t[1][0] = vec![rat(-1)];
        let theta = Cochain2::new(2, 1, t).unwrap();
        let zero = Cochain2::zero(2, 1);
        assert!(cocycles_cohomologous(&ab, &module, &act, &theta, &zero)
            .unwrap()
            .is_none());
    }

    #[test]
    fn operator_form_agrees_on_invertible_twists() {
        // identity twists: the cyclic [d, theta] form and the alternating
        // cocycle condition must agree
        let l = sample::solvable2();
        let (module, act) = sample::adjoint_rep(&l);
        let c2 = cochain2_basis(&l, &module);
        for flat in c2.vectors() {
            let theta = Cochain2::from_flat(2, 2, flat).unwrap();
            let alt = d2(&l, &module, &act, &theta).unwrap().is_zero();
            let op = d2_operator_form(&l, &module, &act, &theta)
                .unwrap()
                .is_zero();
            assert_eq!(alt, op);
        }
    }

    #[test]
    fn d2_d1_zero_smoke() {
        let l = sample::solvable2();
        let (module, act) = sample::adjoint_rep(&l);
        let c1 = cochain1_basis(&l, &module);
        for flat in c1.vectors() {
            let f = Cochain1::from_flat(&l, &module, flat).unwrap();
            assert!(verify_d2_d1_zero(&l, &module, &act, &f).unwrap());
        }
    }
}
