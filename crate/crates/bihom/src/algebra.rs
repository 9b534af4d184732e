//! BiHom-Lie algebras as structure-constant data, with axiom verification,
//! morphism checks, and subalgebra/ideal predicates.
//!
//! A BiHom-Lie algebra is a space with a bilinear bracket and two commuting
//! linear twists α, β satisfying twisted skew-symmetry and a twisted Jacobi
//! identity. All axioms are checked on basis tuples only; bilinearity makes
//! that sufficient.

use num::Zero;

use crate::linalg::{vec_add, vec_is_zero, vec_neg, vec_scale, zero_vec, Matrix, Rat, SubspaceBasis};
use crate::{Error, Result};

/// One failed identity: which axiom, at which basis indices, with both sides
/// of the identity for debuggability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
}

/// Outcome of an axiom check: passed iff there are no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn pass() -> Self {
        AxiomReport::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: &str, indices: Vec<usize>, lhs: Vec<Rat>, rhs: Vec<Rat>) {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            indices,
            lhs,
            rhs,
        });
    }

    pub fn merge(mut self, other: AxiomReport) -> AxiomReport {
        self.violations.extend(other.violations);
        self
    }
}

/// Aggregate verdict for a full algebra check. The BiHom-Lie axioms
/// (commuting twists, twisted skew-symmetry, BiHom-Jacobi) and
/// multiplicativity are reported separately: multiplicative algebras are a
/// named subclass, and non-multiplicative ones stay representable.
#[derive(Clone, Debug)]
pub struct LieCheck {
    /// All violations, BiHom-Lie axioms first, multiplicativity after.
    pub report: AxiomReport,
    /// Commuting twists + skew-symmetry + BiHom-Jacobi.
    pub is_bihom_lie: bool,
    /// Both twists are bracket homomorphisms.
    pub is_multiplicative: bool,
}

impl LieCheck {
    pub fn passed(&self) -> bool {
        self.is_bihom_lie && self.is_multiplicative
    }
}

/// A finite-dimensional BiHom-Lie algebra given by structure constants:
/// `bracket[i][j]` holds the coordinates of [e_i, e_j].
///
/// Construction validates shapes only; the axioms are checked by
/// [`BiHomLieAlgebra::check_bihom_lie`] so that deliberately broken
/// instances remain constructible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomLieAlgebra {
    name: String,
    dim: usize,
    bracket: Vec<Vec<Vec<Rat>>>,
    alpha: Matrix,
    beta: Matrix,
}

impl BiHomLieAlgebra {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        bracket: Vec<Vec<Vec<Rat>>>,
        alpha: Matrix,
        beta: Matrix,
    ) -> Result<Self> {
        if bracket.len() != dim || bracket.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "bracket tensor must be {dim}x{dim} vectors"
            )));
        }
        if bracket.iter().flatten().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "bracket values must have length {dim}"
            )));
        }
        for (m, which) in [(&alpha, "alpha"), (&beta, "beta")] {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "{which} must be {dim}x{dim}"
                )));
            }
        }
        Ok(BiHomLieAlgebra {
            name: name.into(),
            dim,
            bracket,
            alpha,
            beta,
        })
    }

    /// Trivial bracket with the given twists.
    pub fn abelian(name: impl Into<String>, dim: usize, alpha: Matrix, beta: Matrix) -> Result<Self> {
        let bracket = vec![vec![zero_vec(dim); dim]; dim];
        BiHomLieAlgebra::new(name, dim, bracket, alpha, beta)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn bracket_tensor(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.bracket
    }

    /// [e_i, e_j] as coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rat] {
        &self.bracket[i][j]
    }

    /// Bilinear extension of the structure constants: Σᵢⱼ xᵢ yⱼ c[i][j].
    pub fn bracket_eval(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket_eval expects vectors of length {}",
                self.dim
            )));
        }
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                out = vec_add(&out, &vec_scale(&c, &self.bracket[i][j]));
            }
        }
        Ok(out)
    }

    fn basis_vec(&self, i: usize) -> Vec<Rat> {
        let mut v = zero_vec(self.dim);
        v[i] = num::One::one();
        v
    }

    /// α(e_i) as a vector (column i of α).
    pub fn alpha_basis(&self, i: usize) -> Vec<Rat> {
        self.alpha.col(i)
    }

    pub fn beta_basis(&self, i: usize) -> Vec<Rat> {
        self.beta.col(i)
    }

    /// αβ = βα.
    pub fn check_commuting(&self) -> AxiomReport {
        let ab = self.alpha.mul(&self.beta);
        let ba = self.beta.mul(&self.alpha);
        let mut report = AxiomReport::pass();
        if ab != ba {
            'outer: for i in 0..self.dim {
                for j in 0..self.dim {
                    if ab.get(i, j) != ba.get(i, j) {
                        report.push(
                            "commuting_twists",
                            vec![i, j],
                            vec![ab.get(i, j).clone()],
                            vec![ba.get(i, j).clone()],
                        );
                        break 'outer;
                    }
                }
            }
        }
        report
    }

    /// [β(x), α(y)] = −[β(y), α(x)] on basis pairs.
    pub fn check_skew(&self) -> AxiomReport {
        let mut report = AxiomReport::pass();
        for i in 0..self.dim {
            for j in i..self.dim {
                let lhs = self
                    .bracket_eval(&self.beta_basis(i), &self.alpha_basis(j))
                    .unwrap();
                let rhs = vec_neg(
                    &self
                        .bracket_eval(&self.beta_basis(j), &self.alpha_basis(i))
                        .unwrap(),
                );
                if lhs != rhs {
                    report.push("skew_symmetry", vec![i, j], lhs, rhs);
                }
            }
        }
        report
    }

    /// The BiHom-Jacobi cyclic sum at arbitrary vectors.
    pub fn jacobiator(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Vec<Rat>> {
        let b2 = self.beta.mul(&self.beta);
        let term = |a: &[Rat], b: &[Rat], c: &[Rat]| -> Result<Vec<Rat>> {
            let inner = self.bracket_eval(&self.beta.mul_vec(b), &self.alpha.mul_vec(c))?;
            self.bracket_eval(&b2.mul_vec(a), &inner)
        };
        let mut out = term(x, y, z)?;
        out = vec_add(&out, &term(y, z, x)?);
        out = vec_add(&out, &term(z, x, y)?);
        Ok(out)
    }

    /// [β²x,[βy,αz]] + [β²y,[βz,αx]] + [β²z,[βx,αy]] = 0 on basis triples.
    pub fn check_bihom_jacobi(&self) -> AxiomReport {
        let mut report = AxiomReport::pass();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let jac = self
                        .jacobiator(&self.basis_vec(i), &self.basis_vec(j), &self.basis_vec(k))
                        .unwrap();
                    if !vec_is_zero(&jac) {
                        report.push("bihom_jacobi", vec![i, j, k], jac, zero_vec(self.dim));
                    }
                }
            }
        }
        report
    }

    /// α[x,y] = [αx,αy] and β[x,y] = [βx,βy] on basis pairs.
    pub fn check_multiplicative(&self) -> AxiomReport {
        let mut report = AxiomReport::pass();
        for (twist, name) in [(&self.alpha, "multiplicative_alpha"), (&self.beta, "multiplicative_beta")] {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let lhs = twist.mul_vec(self.bracket_basis(i, j));
                    let rhs = self
                        .bracket_eval(&twist.col(i), &twist.col(j))
                        .unwrap();
                    if lhs != rhs {
                        report.push(name, vec![i, j], lhs, rhs);
                    }
                }
            }
        }
        report
    }

    /// Conjunction of all four checks, with the BiHom-Lie /
    /// multiplicative-BiHom-Lie statuses reported separately.
    pub fn check_bihom_lie(&self) -> LieCheck {
        let core = self
            .check_commuting()
            .merge(self.check_skew())
            .merge(self.check_bihom_jacobi());
        let mult = self.check_multiplicative();
        let is_bihom_lie = core.passed();
        let is_multiplicative = mult.passed();
        LieCheck {
            report: core.merge(mult),
            is_bihom_lie,
            is_multiplicative,
        }
    }
}

/// f∘α = α′∘f, f∘β = β′∘f, and f[x,y] = [fx,fy]′ for a linear map given by
/// a (target dim)×(source dim) matrix.
pub fn is_morphism(
    source: &BiHomLieAlgebra,
    target: &BiHomLieAlgebra,
    f: &Matrix,
) -> Result<AxiomReport> {
    if f.rows() != target.dim() || f.cols() != source.dim() {
        return Err(Error::DimensionMismatch(format!(
            "morphism matrix must be {}x{}",
            target.dim(),
            source.dim()
        )));
    }
    let mut report = AxiomReport::pass();
    let fa = f.mul(source.alpha());
    let af = target.alpha().mul(f);
    if fa != af {
        report.push("morphism_alpha", vec![], fa.row_vectors().concat(), af.row_vectors().concat());
    }
    let fb = f.mul(source.beta());
    let bf = target.beta().mul(f);
    if fb != bf {
        report.push("morphism_beta", vec![], fb.row_vectors().concat(), bf.row_vectors().concat());
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = f.mul_vec(source.bracket_basis(i, j));
            let rhs = target.bracket_eval(&f.col(i), &f.col(j))?;
            if lhs != rhs {
                report.push("morphism_bracket", vec![i, j], lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// α(H) ⊂ H, β(H) ⊂ H, [H,H] ⊂ H for a subspace given by a basis.
pub fn is_subalgebra(algebra: &BiHomLieAlgebra, h: &SubspaceBasis) -> Result<bool> {
    if h.ambient_dim() != algebra.dim() {
        return Err(Error::DimensionMismatch(
            "subalgebra basis has wrong ambient dimension".to_string(),
        ));
    }
    for v in h.vectors() {
        if !h.contains(&algebra.alpha().mul_vec(v))? {
            return Ok(false);
        }
        if !h.contains(&algebra.beta().mul_vec(v))? {
            return Ok(false);
        }
    }
    for v in h.vectors() {
        for w in h.vectors() {
            if !h.contains(&algebra.bracket_eval(v, w)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Twist-stability plus two-sided bracket absorption: [L, I] ⊂ I, [I, L] ⊂ I.
pub fn is_ideal(algebra: &BiHomLieAlgebra, ideal: &SubspaceBasis) -> Result<bool> {
    if ideal.ambient_dim() != algebra.dim() {
        return Err(Error::DimensionMismatch(
            "ideal basis has wrong ambient dimension".to_string(),
        ));
    }
    for v in ideal.vectors() {
        if !ideal.contains(&algebra.alpha().mul_vec(v))? {
            return Ok(false);
        }
        if !ideal.contains(&algebra.beta().mul_vec(v))? {
            return Ok(false);
        }
    }
    for q in 0..algebra.dim() {
        let mut e = zero_vec(algebra.dim());
        e[q] = num::One::one();
        for v in ideal.vectors() {
            if !ideal.contains(&algebra.bracket_eval(&e, v)?)? {
                return Ok(false);
            }
            if !ideal.contains(&algebra.bracket_eval(v, &e)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
