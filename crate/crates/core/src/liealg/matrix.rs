use std::fmt;

use super::StructureConstants;
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

/// 3×3 matrix; `m[r][c]` is row `r`, column `c`. As a change of basis,
/// `m[k][i]` is the component `A^k_i` in `X'_i = X_k A^k_i`.
#[derive(Clone, PartialEq)]
pub struct Matrix3<S = Rational>(pub [[S; 3]; 3]);

impl<S: Scalar> Matrix3<S> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Matrix3(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn identity() -> Self {
        Matrix3::from_fn(|r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn diag(d: [S; 3]) -> Self {
        let mut d = d.map(Some);
        Matrix3::from_fn(|r, c| if r == c { d[r].take().unwrap() } else { S::zero() })
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.0[r][c]
    }

    pub fn transpose(&self) -> Self {
        Matrix3::from_fn(|r, c| self.0[c][r].clone())
    }

    pub fn mul(&self, rhs: &Matrix3<S>) -> Matrix3<S> {
        Matrix3::from_fn(|r, c| (0..3).fold(S::zero(), |acc, k| acc.add_ref(&self.0[r][k].mul_ref(&rhs.0[k][c]))))
    }

    pub fn mul_vec(&self, v: &[S; 3]) -> [S; 3] {
        std::array::from_fn(|r| (0..3).fold(S::zero(), |acc, k| acc.add_ref(&self.0[r][k].mul_ref(&v[k]))))
    }

    fn minor(&self, r: usize, c: usize) -> S {
        let rows: Vec<usize> = (0..3).filter(|&x| x != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&x| x != c).collect();
        let m = |a: usize, b: usize| &self.0[rows[a]][cols[b]];
        m(0, 0).mul_ref(m(1, 1)).sub_ref(&m(0, 1).mul_ref(m(1, 0)))
    }

    pub fn det(&self) -> S {
        (0..3).fold(S::zero(), |acc, c| {
            let t = self.0[0][c].mul_ref(&self.minor(0, c));
            if c % 2 == 0 {
                acc.add_ref(&t)
            } else {
                acc.sub_ref(&t)
            }
        })
    }

    /// Exact inverse via the adjugate.
    pub fn inverse(&self) -> Result<Matrix3<S>> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix3::identity();
        for r in 0..3 {
            for c in 0..3 {
                let cof = self.minor(c, r);
                let cof = if (r + c) % 2 == 0 { cof } else { cof.neg_ref() };
                out.0[r][c] = cof.try_div(&det)?;
            }
        }
        Ok(out)
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Matrix3<T> {
        Matrix3::from_fn(|r, c| f(&self.0[r][c]))
    }
}

impl Matrix3<Rational> {
    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Matrix3::from_fn(|r, c| Rational::from(rows[r][c]))
    }
}

impl<S: Scalar> fmt::Debug for Matrix3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for Matrix3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Structure constants in the basis `X'_i = X_k A^k_i`:
/// `f'_ij^k = A^m_i A^n_j f_mn^p (A^-1)^k_p`.
pub fn change_basis<S: Scalar>(f: &StructureConstants<S>, a: &Matrix3<S>) -> Result<StructureConstants<S>> {
    assert_eq!(f.dim(), 3, "change_basis acts on 3-dimensional algebras");
    let inv = a.inverse()?;
    // g[i][j][p] = A^m_i A^n_j f_mn^p
    let mut g = vec![S::zero(); 27];
    for i in 0..3 {
        for j in 0..3 {
            for m in 0..3 {
                if a.0[m][i].is_zero() {
                    continue;
                }
                for n in 0..3 {
                    let w = a.0[m][i].mul_ref(&a.0[n][j]);
                    if w.is_zero() {
                        continue;
                    }
                    for p in 0..3 {
                        let c = f.get(m, n, p);
                        if !c.is_zero() {
                            g[(i * 3 + j) * 3 + p] = g[(i * 3 + j) * 3 + p].add_ref(&w.mul_ref(c));
                        }
                    }
                }
            }
        }
    }
    StructureConstants::from_fn(3, |i, j, k| {
        (0..3).fold(S::zero(), |acc, p| {
            acc.add_ref(&g[(i * 3 + j) * 3 + p].mul_ref(&inv.0[k][p]))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        let id = Matrix3::<Rational>::identity();
        assert_eq!(id.inverse().unwrap(), id);
        let d = Matrix3::diag([Rational::from(2), Rational::one(), Rational::one()]);
        assert_eq!(
            d.inverse().unwrap(),
            Matrix3::diag([Rational::frac(1, 2), Rational::one(), Rational::one()])
        );
        let a = Matrix3::from_i64([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(
            a.inverse().unwrap(),
            Matrix3::from_i64([[1, -1, 0], [0, 1, 0], [0, 0, 1]])
        );
        let b = Matrix3::from_i64([[2, -1, 0], [1, 1, 2], [0, -2, 1]]);
        assert_eq!(b.mul(&b.inverse().unwrap()), id);
    }

    #[test]
    fn singular() {
        let s = Matrix3::from_i64([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert!(s.det().is_zero());
        assert!(matches!(s.inverse(), Err(Error::SingularMatrix)));
    }
}
