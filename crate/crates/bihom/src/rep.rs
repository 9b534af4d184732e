//! BiHom-modules, left/right actions, the representation axioms, and the
//! constrained cochain spaces C¹(L,V) and C²(L,V).
//!
//! Cochains are represented both structurally (tensors / matrices) and as
//! coordinate vectors in the full multilinear space, so kernels, images and
//! quotients downstream all live in one ambient coordinate system.
//!
//! Flattening conventions, used everywhere downstream:
//! - a linear map F: L→V (m×n matrix) flattens row-major, index p·n + i;
//! - a bilinear map θ: L×L→V flattens as index (i·n + j)·m + p.

use num::{One, Zero};

use crate::algebra::{AxiomReport, BiHomLieAlgebra};
use crate::linalg::{vec_add, vec_is_zero, vec_scale, zero_vec, Matrix, Rat, SubspaceBasis};
use crate::{Error, Result};

/// A space V with commuting twists α_V, β_V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomModule {
    dim: usize,
    alpha_v: Matrix,
    beta_v: Matrix,
}

impl BiHomModule {
    /// Commutativity of the twists is checked at load.
    pub fn new(dim: usize, alpha_v: Matrix, beta_v: Matrix) -> Result<Self> {
        for (m, which) in [(&alpha_v, "alpha_v"), (&beta_v, "beta_v")] {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "{which} must be {dim}x{dim}"
                )));
            }
        }
        if alpha_v.mul(&beta_v) != beta_v.mul(&alpha_v) {
            return Err(Error::Invalid(
                "module twists alpha_v and beta_v do not commute".to_string(),
            ));
        }
        Ok(BiHomModule {
            dim,
            alpha_v,
            beta_v,
        })
    }

    pub fn trivial_twists(dim: usize) -> Self {
        BiHomModule::new(dim, Matrix::identity(dim), Matrix::identity(dim)).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha_v(&self) -> &Matrix {
        &self.alpha_v
    }

    pub fn beta_v(&self) -> &Matrix {
        &self.beta_v
    }
}

/// Left and right action tensors: `lambda_l[i][p]` = λ_l(e_i, f_p) ∈ ℚᵐ,
/// `lambda_r[p][i]` = λ_r(f_p, e_i) ∈ ℚᵐ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionPair {
    algebra_dim: usize,
    module_dim: usize,
    lambda_l: Vec<Vec<Vec<Rat>>>,
    lambda_r: Vec<Vec<Vec<Rat>>>,
}

impl ActionPair {
    pub fn new(
        algebra_dim: usize,
        module_dim: usize,
        lambda_l: Vec<Vec<Vec<Rat>>>,
        lambda_r: Vec<Vec<Vec<Rat>>>,
    ) -> Result<Self> {
        let shape_ok = lambda_l.len() == algebra_dim
            && lambda_l.iter().all(|r| r.len() == module_dim)
            && lambda_l.iter().flatten().all(|v| v.len() == module_dim)
            && lambda_r.len() == module_dim
            && lambda_r.iter().all(|r| r.len() == algebra_dim)
            && lambda_r.iter().flatten().all(|v| v.len() == module_dim);
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "action tensors must have shapes {algebra_dim}x{module_dim}x{module_dim} and {module_dim}x{algebra_dim}x{module_dim}"
            )));
        }
        Ok(ActionPair {
            algebra_dim,
            module_dim,
            lambda_l,
            lambda_r,
        })
    }

    pub fn trivial(algebra_dim: usize, module_dim: usize) -> Self {
        ActionPair {
            algebra_dim,
            module_dim,
            lambda_l: vec![vec![zero_vec(module_dim); module_dim]; algebra_dim],
            lambda_r: vec![vec![zero_vec(module_dim); algebra_dim]; module_dim],
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn lambda_l(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.lambda_l
    }

    pub fn lambda_r(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.lambda_r
    }

    /// λ_l(x, v) by bilinear extension.
    pub fn eval_left(&self, x: &[Rat], v: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.algebra_dim || v.len() != self.module_dim {
            return Err(Error::DimensionMismatch(
                "action_eval_left: wrong vector lengths".to_string(),
            ));
        }
        let mut out = zero_vec(self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (p, vp) in v.iter().enumerate() {
                if vp.is_zero() {
                    continue;
                }
                out = vec_add(&out, &vec_scale(&(xi * vp), &self.lambda_l[i][p]));
            }
        }
        Ok(out)
    }

    /// λ_r(v, x) by bilinear extension.
    pub fn eval_right(&self, v: &[Rat], x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.algebra_dim || v.len() != self.module_dim {
            return Err(Error::DimensionMismatch(
                "action_eval_right: wrong vector lengths".to_string(),
            ));
        }
        let mut out = zero_vec(self.module_dim);
        for (p, vp) in v.iter().enumerate() {
            if vp.is_zero() {
                continue;
            }
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                out = vec_add(&out, &vec_scale(&(vp * xi), &self.lambda_r[p][i]));
            }
        }
        Ok(out)
    }
}

/// The two well-typed readings of the second representation axiom's last
/// summand (the source formula applies λ_r to two algebra arguments, which
/// does not typecheck; some repair is forced).
///
/// Under the first axiom the readings differ by the sign of that summand,
/// so a pair (λ_l, λ_r) can satisfy one and not the other.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Axiom2Reading {
    /// Last summand λ_l(β²(y), λ_r(β_V(v), α(x))): keep the right action in
    /// the inner slot with the displayed plus sign.
    #[default]
    RightAction,
    /// Last summand λ_l(β²(y), λ_l(β(x), α_V(v))): swap the ill-typed inner
    /// term to the left action. This is the reading under which the
    /// semidirect sum of a representation is a BiHom-Lie algebra.
    LeftAction,
}

/// Check the two representation axioms on all basis tuples.
///
/// Axiom 1: λ_r(β_V(v), α(y)) = −λ_l(β(y), α_V(v)).
/// Axiom 2: λ_r(β_V²(v), δ(β(x), α(y))) =
///   λ_l(β²(x), λ_r(β_V(v), α(y))) + (last summand per `reading`).
pub fn check_representation(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
    reading: Axiom2Reading,
) -> Result<AxiomReport> {
    let n = algebra.dim();
    let m = module.dim();
    if act.algebra_dim() != n || act.module_dim() != m {
        return Err(Error::DimensionMismatch(
            "action pair does not match algebra/module dimensions".to_string(),
        ));
    }
    let mut report = AxiomReport::pass();
    let f = |p: usize| {
        let mut v = zero_vec(m);
        v[p] = Rat::one();
        v
    };
    let beta2 = algebra.beta().mul(algebra.beta());
    let beta_v2 = module.beta_v().mul(module.beta_v());

    for p in 0..m {
        for j in 0..n {
            let lhs = act.eval_right(&module.beta_v().mul_vec(&f(p)), &algebra.alpha_basis(j))?;
            let rhs = crate::linalg::vec_neg(
                &act.eval_left(&algebra.beta_basis(j), &module.alpha_v().mul_vec(&f(p)))?,
            );
            if lhs != rhs {
                report.push("representation_axiom_1", vec![p, j], lhs, rhs);
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for p in 0..m {
                let delta = algebra.bracket_eval(&algebra.beta_basis(i), &algebra.alpha_basis(j))?;
                let lhs = act.eval_right(&beta_v2.mul_vec(&f(p)), &delta)?;
                let first = act.eval_left(
                    &beta2.col(i),
                    &act.eval_right(&module.beta_v().mul_vec(&f(p)), &algebra.alpha_basis(j))?,
                )?;
                let last_inner = match reading {
                    Axiom2Reading::RightAction => {
                        act.eval_right(&module.beta_v().mul_vec(&f(p)), &algebra.alpha_basis(i))?
                    }
                    Axiom2Reading::LeftAction => {
                        act.eval_left(&algebra.beta_basis(i), &module.alpha_v().mul_vec(&f(p)))?
                    }
                };
                let last = act.eval_left(&beta2.col(j), &last_inner)?;
                let rhs = vec_add(&first, &last);
                if lhs != rhs {
                    report.push("representation_axiom_2", vec![i, j, p], lhs, rhs);
                }
            }
        }
    }
    Ok(report)
}

/// Run [`check_representation`] under both readings; they differ exactly by
/// the axiom-2 sign rule, so callers can report disagreements.
pub fn check_representation_both(
    algebra: &BiHomLieAlgebra,
    module: &BiHomModule,
    act: &ActionPair,
) -> Result<(AxiomReport, AxiomReport)> {
    Ok((
        check_representation(algebra, module, act, Axiom2Reading::RightAction)?,
        check_representation(algebra, module, act, Axiom2Reading::LeftAction)?,
    ))
}

/// A 1-cochain: a linear map L → V intertwining both twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    matrix: Matrix, // m x n
}

impl Cochain1 {
    /// Validates the intertwining invariants F·α = α_V·F and F·β = β_V·F.
    pub fn new(algebra: &BiHomLieAlgebra, module: &BiHomModule, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != module.dim() || matrix.cols() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "1-cochain matrix must be {}x{}",
                module.dim(),
                algebra.dim()
            )));
        }
        if matrix.mul(algebra.alpha()) != module.alpha_v().mul(&matrix)
            || matrix.mul(algebra.beta()) != module.beta_v().mul(&matrix)
        {
            return Err(Error::Precondition(
                "1-cochain does not intertwine the twists".to_string(),
            ));
        }
        Ok(Cochain1 { matrix })
    }

    pub fn zero(algebra: &BiHomLieAlgebra, module: &BiHomModule) -> Self {
        Cochain1 {
            matrix: Matrix::zero(module.dim(), algebra.dim()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.matrix.mul_vec(x)
    }

    /// Row-major flattening into ℚ^{m·n}, index p·n + i.
    pub fn to_flat(&self) -> Vec<Rat> {
        self.matrix.row_vectors().concat()
    }

    /// Rebuild from flat coordinates, re-validating the intertwining.
    pub fn from_flat(
        algebra: &BiHomLieAlgebra,
        module: &BiHomModule,
        flat: &[Rat],
    ) -> Result<Self> {
        let (m, n) = (module.dim(), algebra.dim());
        if flat.len() != m * n {
            return Err(Error::DimensionMismatch(
                "1-cochain flat vector has wrong length".to_string(),
            ));
        }
        let matrix = Matrix::from_fn(m, n, |p, i| flat[p * n + i].clone());
        Cochain1::new(algebra, module, matrix)
    }
}

/// A 2-cochain candidate: a bilinear map L×L → V as the coefficient tensor
/// `theta[i][j]` = θ(e_i, e_j) ∈ ℚᵐ. Shape-checked on construction; the
/// (β,α)-twisted skew constraint is checked by [`is_cochain2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    algebra_dim: usize,
    module_dim: usize,
    theta: Vec<Vec<Vec<Rat>>>,
}

impl Cochain2 {
    pub fn new(algebra_dim: usize, module_dim: usize, theta: Vec<Vec<Vec<Rat>>>) -> Result<Self> {
        let shape_ok = theta.len() == algebra_dim
            && theta.iter().all(|r| r.len() == algebra_dim)
            && theta.iter().flatten().all(|v| v.len() == module_dim);
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "2-cochain tensor must be {algebra_dim}x{algebra_dim}x{module_dim}"
            )));
        }
        Ok(Cochain2 {
            algebra_dim,
            module_dim,
            theta,
        })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Cochain2 {
            algebra_dim,
            module_dim,
            theta: vec![vec![zero_vec(module_dim); algebra_dim]; algebra_dim],
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn tensor(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.theta
    }

    pub fn value(&self, i: usize, j: usize) -> &[Rat] {
        &self.theta[i][j]
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.algebra_dim || y.len() != self.algebra_dim {
            return Err(Error::DimensionMismatch(
                "2-cochain eval: wrong vector lengths".to_string(),
            ));
        }
        let mut out = zero_vec(self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out = vec_add(&out, &vec_scale(&(xi * yj), &self.theta[i][j]));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        assert_eq!(self.algebra_dim, other.algebra_dim);
        assert_eq!(self.module_dim, other.module_dim);
        let theta = (0..self.algebra_dim)
            .map(|i| {
                (0..self.algebra_dim)
                    .map(|j| vec_add(&self.theta[i][j], &other.theta[i][j]))
                    .collect()
            })
            .collect();
        Cochain2 {
            algebra_dim: self.algebra_dim,
            module_dim: self.module_dim,
            theta,
        }
    }

    pub fn sub(&self, other: &Cochain2) -> Cochain2 {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Cochain2 {
        let theta = self
            .theta
            .iter()
            .map(|row| row.iter().map(|v| vec_scale(c, v)).collect())
            .collect();
        Cochain2 {
            algebra_dim: self.algebra_dim,
            module_dim: self.module_dim,
            theta,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.theta.iter().flatten().all(|v| vec_is_zero(v))
    }

    /// Flatten into ℚ^{m·n²}, index (i·n + j)·m + p.
    pub fn to_flat(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.module_dim * self.algebra_dim * self.algebra_dim);
        for row in &self.theta {
            for v in row {
                out.extend(v.iter().cloned());
            }
        }
        out
    }

    pub fn from_flat(algebra_dim: usize, module_dim: usize, flat: &[Rat]) -> Result<Self> {
        if flat.len() != module_dim * algebra_dim * algebra_dim {
            return Err(Error::DimensionMismatch(
                "2-cochain flat vector has wrong length".to_string(),
            ));
        }
        let theta = (0..algebra_dim)
            .map(|i| {
                (0..algebra_dim)
                    .map(|j| {
                        let base = (i * algebra_dim + j) * module_dim;
                        flat[base..base + module_dim].to_vec()
                    })
                    .collect()
            })
            .collect();
        Cochain2::new(algebra_dim, module_dim, theta)
    }
}

/// θ(β(e_i), α(e_j)) + θ(β(e_j), α(e_i)) = 0 on all basis pairs.
pub fn is_cochain2(algebra: &BiHomLieAlgebra, theta: &Cochain2) -> Result<bool> {
    if theta.algebra_dim() != algebra.dim() {
        return Err(Error::DimensionMismatch(
            "2-cochain has wrong algebra dimension".to_string(),
        ));
    }
    for i in 0..algebra.dim() {
        for j in i..algebra.dim() {
            let a = theta.eval(&algebra.beta_basis(i), &algebra.alpha_basis(j))?;
            let b = theta.eval(&algebra.beta_basis(j), &algebra.alpha_basis(i))?;
            if !vec_is_zero(&vec_add(&a, &b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Basis of C¹(L,V): the solution space of {F·α = α_V·F, F·β = β_V·F}
/// inside the m·n-dimensional space of all linear maps L → V.
pub fn cochain1_basis(algebra: &BiHomLieAlgebra, module: &BiHomModule) -> SubspaceBasis {
    let n = algebra.dim();
    let m = module.dim();
    let dim = m * n;
    // rows: one scalar equation per (twist, output row p, input column j)
    let mut rows = Vec::with_capacity(2 * dim);
    for (twist, twist_v) in [
        (algebra.alpha(), module.alpha_v()),
        (algebra.beta(), module.beta_v()),
    ] {
        for p in 0..m {
            for j in 0..n {
                let mut row = zero_vec(dim);
                // (F·twist)[p][j] = sum_i F[p][i] twist[i][j]
                for i in 0..n {
                    row[p * n + i] = &row[p * n + i] + twist.get(i, j);
                }
                // -(twist_v·F)[p][j] = -sum_q twist_v[p][q] F[q][j]
                for q in 0..m {
                    row[q * n + j] = &row[q * n + j] - twist_v.get(p, q);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_row_vectors(dim, &rows).kernel_basis()
}

/// Basis of C²(L,V): the solution space of the twisted-skew constraints
/// inside the m·n²-dimensional space of all bilinear maps L×L → V.
pub fn cochain2_basis(algebra: &BiHomLieAlgebra, module: &BiHomModule) -> SubspaceBasis {
    let n = algebra.dim();
    let m = module.dim();
    let dim = m * n * n;
    let a = algebra.alpha();
    let b = algebra.beta();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            // theta(b e_i, a e_j) + theta(b e_j, a e_i) = 0, one row per
            // output coordinate p
            for p in 0..m {
                let mut row = zero_vec(dim);
                for s in 0..n {
                    for t in 0..n {
                        let coeff = b.get(s, i) * a.get(t, j) + b.get(s, j) * a.get(t, i);
                        let idx = (s * n + t) * m + p;
                        row[idx] = &row[idx] + &coeff;
                    }
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_row_vectors(dim, &rows).kernel_basis()
}
