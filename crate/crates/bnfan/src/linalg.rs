//! Exact rational linear algebra: dense matrices, row reduction, rank,
//! nullspace, and primitive integer normalisation of rational vectors.
//!
//! Everything is computed over [`Rat`] (arbitrary-precision rationals); no
//! floating point is used anywhere.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer literal.
pub fn rat(i: i64) -> Rat {
    Rat::from_integer(BigInt::from(i))
}

/// Rational vector from integer literals.
pub fn rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Standard scalar product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product of unequal lengths");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// `a - c * b`, elementwise.
pub fn sub_scaled(a: &[Rat], b: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - c * y).collect()
}

/// Dense matrix over the rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Mat::zero(k, k);
        for i in 0..k {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Test helper: build from integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| rat_vec(r)).collect()).expect("rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * other.at(k, j);
                    *out.at_mut(i, j) += term;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }
}

/// Reduced row echelon form in place. Returns the pivot columns; zero rows
/// sink to the bottom and are truncated.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                rows[i] = sub_scaled(&rows[i], &rows[r], &f);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Rank of the span of the given vectors.
pub fn rank(vectors: &[Vec<Rat>]) -> usize {
    let mut rows: Vec<Vec<Rat>> = vectors.to_vec();
    rref(&mut rows).len()
}

/// Basis of `{x : M x = 0}` where `M` has the given rows in `dim` columns.
/// The basis is the standard free-column one from the RREF, so it is
/// deterministic.
pub fn nullspace(rows_in: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = rows_in.to_vec();
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); dim];
        v[free] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rows[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scale a rational vector to a primitive integer vector, preserving its
/// direction (the scale factor is strictly positive). The zero vector maps to
/// zeros.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    if v.iter().all(|x| x.is_zero()) {
        return vec![BigInt::zero(); v.len()];
    }
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Primitive integer vector with the first nonzero entry positive. Only for
/// direction-free data (hyperplane normals, lineality generators); rays must
/// keep their orientation.
pub fn sign_normalized_primitive(v: &[Rat]) -> Vec<BigInt> {
    let ints = primitive_integer(v);
    match ints.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => ints.into_iter().map(|x| -x).collect(),
        _ => ints,
    }
}

/// Canonical basis of the span of the given vectors: RREF rows scaled to
/// primitive integer vectors. Deterministic for any generating set of the
/// same subspace.
pub fn canonical_basis(vectors: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<Rat>> = vectors.to_vec();
    rref(&mut rows);
    rows.iter().map(|r| sign_normalized_primitive(r)).collect()
}

/// View of an integer vector as rationals.
pub fn ints_to_rats(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_nullspace() {
        let rows = vec![
            rat_vec(&[1, 2, 3]),
            rat_vec(&[2, 4, 6]),
            rat_vec(&[0, 1, 1]),
        ];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(dot(r, &ns[0]).is_zero());
        }
    }

    #[test]
    fn primitive_preserves_direction() {
        let v = vec![Rat::new(BigInt::from(-2), BigInt::from(4)), rat(1)];
        let p = primitive_integer(&v);
        assert_eq!(p, vec![BigInt::from(-1), BigInt::from(2)]);
        let s = sign_normalized_primitive(&v);
        assert_eq!(s, vec![BigInt::from(1), BigInt::from(-2)]);
    }

    #[test]
    fn matrix_product_shapes() {
        let a = Mat::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        let b = Mat::from_int_rows(&[&[2], &[3]]);
        let c = a.mul(&b).unwrap();
        assert_eq!((c.rows(), c.cols()), (3, 1));
        assert_eq!(c.at(2, 0), &rat(5));
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn canonical_basis_is_generating_set_independent() {
        let b1 = canonical_basis(&[rat_vec(&[1, 1, 0]), rat_vec(&[0, 0, 1])]);
        let b2 = canonical_basis(&[
            rat_vec(&[2, 2, 2]),
            rat_vec(&[0, 0, 5]),
            rat_vec(&[1, 1, 3]),
        ]);
        assert_eq!(b1, b2);
    }
}
