//! Exact rational linear algebra: matrices, reduced row echelon form,
//! kernels, images, solving, and subspace bases.
//!
//! All arithmetic is over `BigRational`, so every result is exact. Pivoting
//! always selects the first nonzero entry in column order, which makes every
//! output deterministic and golden-testable.

use num::{BigInt, BigRational, One, Zero};

use crate::{Error, Result};

/// Exact rational scalar. `BigRational` keeps the canonical form invariant
/// for us: positive denominator, coprime numerator and denominator.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics on q = 0.
pub fn ratq(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse a rational from the wire format `"p/q"` or `"p"`.
///
/// Zero denominators and malformed integers are rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let q: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Render a rational in the wire format: `"p"` when integral, else `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vec(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

/// Dense row-major matrix over ℚ. Zero rows or columns are legal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch(
                    "ragged rows in matrix".to_string(),
                ));
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Stack row vectors into a matrix; `ambient` fixes the column count even
    /// when there are no rows.
    pub fn from_row_vectors(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        let mut m = Matrix::zero(vectors.len(), ambient);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient, "vector length != ambient dimension");
            for (j, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Columns are the given vectors.
    pub fn from_col_vectors(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        Matrix::from_row_vectors(ambient, vectors).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Block-diagonal sum of two square matrices.
    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let (n, m) = (self.rows, rhs.rows);
        assert!(self.is_square() && rhs.is_square());
        Matrix::from_fn(n + m, n + m, |i, j| {
            if i < n && j < n {
                self.get(i, j).clone()
            } else if i >= n && j >= n {
                rhs.get(i - n, j - n).clone()
            } else {
                Rat::zero()
            }
        })
    }

    /// Reduced row echelon form, together with the strictly increasing list
    /// of pivot columns. Pivots are the first nonzero entry in column order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space {x : m·x = 0}, in increasing free-column order.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref();
        let mut vectors = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            // pivot column -> its row index
            let mut map = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                map[c] = Some(row);
            }
            map
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = zero_vec(self.cols);
            v[free] = Rat::one();
            for (c, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[c] = -r.get(*row, free).clone();
                }
            }
            vectors.push(v);
        }
        SubspaceBasis {
            ambient_dim: self.cols,
            vectors,
        }
    }

    /// Basis of the column space: the pivot columns of the original matrix.
    pub fn image_basis(&self) -> SubspaceBasis {
        let (_, pivots) = self.rref();
        SubspaceBasis {
            ambient_dim: self.rows,
            vectors: pivots.iter().map(|&c| self.col(c)).collect(),
        }
    }

    /// Solve a·x = b exactly. Returns `None` when inconsistent; free
    /// variables are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: rhs length {} != {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = zero_vec(self.cols);
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// A list of linearly independent vectors spanning a subspace of ℚⁿ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rat>>,
}

impl SubspaceBasis {
    pub fn empty(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis::from_spanning(
            ambient_dim,
            Matrix::identity(ambient_dim).row_vectors(),
        )
    }

    /// Reduce a spanning set to a basis: rref of the stacked rows, dropping
    /// zero rows. Output is deterministic (rows of a rref matrix).
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<Rat>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length != ambient dimension");
        }
        let (r, pivots) = Matrix::from_row_vectors(ambient_dim, &vectors).rref();
        let vectors = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        SubspaceBasis {
            ambient_dim,
            vectors,
        }
    }

    /// Wrap vectors that are already known independent. Checked.
    pub fn from_independent(ambient_dim: usize, vectors: Vec<Vec<Rat>>) -> Result<Self> {
        let rank = Matrix::from_row_vectors(ambient_dim, &vectors).rank();
        if rank != vectors.len() {
            return Err(Error::Invalid(
                "basis vectors are linearly dependent".to_string(),
            ));
        }
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    /// True iff v is a rational linear combination of the basis vectors.
    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "in_span: vector length {} != ambient {}",
                v.len(),
                self.ambient_dim
            )));
        }
        if self.vectors.is_empty() {
            return Ok(vec_is_zero(v));
        }
        let m = Matrix::from_col_vectors(self.ambient_dim, &self.vectors);
        Ok(m.solve(v)?.is_some())
    }

    /// Coordinates of v in this basis, when v lies in the span.
    pub fn coordinates(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(
                "coordinates: vector length != ambient".to_string(),
            ));
        }
        if self.vectors.is_empty() {
            return Ok(if vec_is_zero(v) { Some(Vec::new()) } else { None });
        }
        let m = Matrix::from_col_vectors(self.ambient_dim, &self.vectors);
        m.solve(v)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> Result<bool> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch(
                "subspace containment: different ambient dimensions".to_string(),
            ));
        }
        for v in &other.vectors {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// dim(z) − dim(b), after checking span(b) ⊆ span(z).
pub fn quotient_dim(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize> {
    if !z.contains_subspace(b)? {
        return Err(Error::Containment(
            "quotient_dim: second subspace is not contained in the first".to_string(),
        ));
    }
    Ok(z.dim() - b.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);

        let z = Matrix::zero(2, 2);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(3).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zero(2, 3).kernel_basis().dim(), 3);

        let m = Matrix::from_i64(&[&[1, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.vectors()[0], vec![rat(-2), rat(1)]);
    }

    #[test]
    fn kernel_of_empty_matrix_is_everything() {
        let m = Matrix::zero(0, 4);
        assert_eq!(m.kernel_basis().dim(), 4);
        let m = Matrix::zero(3, 0);
        assert_eq!(m.kernel_basis().dim(), 0);
    }

    #[test]
    fn image_examples() {
        assert_eq!(Matrix::identity(2).image_basis().dim(), 2);
        assert_eq!(Matrix::zero(2, 2).image_basis().dim(), 0);
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let im = m.image_basis();
        assert_eq!(im.dim(), 1);
        assert!(im.contains(&[rat(1), rat(2)]).unwrap());
    }

    #[test]
    fn solve_examples() {
        let a = Matrix::from_i64(&[&[2]]);
        assert_eq!(a.solve(&[rat(3)]).unwrap(), Some(vec![ratq(3, 2)]));

        let a = Matrix::from_i64(&[&[1], &[1]]);
        assert_eq!(a.solve(&[rat(0), rat(1)]).unwrap(), None);

        let a = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            a.solve(&[rat(3), rat(1)]).unwrap(),
            Some(vec![rat(2), rat(1)])
        );

        assert!(a.solve(&[rat(1)]).is_err());
    }

    #[test]
    fn in_span_examples() {
        let empty = SubspaceBasis::empty(2);
        assert!(empty.contains(&[rat(0), rat(0)]).unwrap());
        assert!(!empty.contains(&[rat(1), rat(0)]).unwrap());

        let s = SubspaceBasis::from_spanning(2, vec![vec![rat(1), rat(2)]]);
        assert!(s.contains(&[rat(2), rat(4)]).unwrap());
        assert!(!s.contains(&[rat(1), rat(0)]).unwrap());
        assert!(s.contains(&[rat(1)]).is_err());
    }

    #[test]
    fn quotient_dim_examples() {
        let z = SubspaceBasis::full(3);
        let b = SubspaceBasis::from_spanning(3, vec![vec![rat(1), rat(0), rat(0)]]);
        assert_eq!(quotient_dim(&z, &b).unwrap(), 2);
        assert_eq!(quotient_dim(&z, &z).unwrap(), 0);
        assert_eq!(quotient_dim(&b, &SubspaceBasis::empty(3)).unwrap(), 1);

        let outside = SubspaceBasis::from_spanning(3, vec![vec![rat(0), rat(1), rat(0)]]);
        assert!(matches!(
            quotient_dim(&b, &outside),
            Err(Error::Containment(_))
        ));
    }

    #[test]
    fn rational_wire_format() {
        assert_eq!(parse_rat("3/2").unwrap(), ratq(3, 2));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(parse_rat("4/6").unwrap(), ratq(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a").is_err());
        assert_eq!(format_rat(&ratq(-3, 2)), "-3/2");
        assert_eq!(format_rat(&rat(5)), "5");
        // canonical: positive denominator
        assert_eq!(format_rat(&parse_rat("1/-2").unwrap()), "-1/2");
    }
}
