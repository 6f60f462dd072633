use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Assignment, RatFunc, Rational, Scalar};

/// Dense family of scalars indexed by a fixed-length tuple, row-major.
#[derive(Clone, PartialEq)]
pub struct IndexedFamily<S> {
    shape: Vec<usize>,
    data: Vec<S>,
}

impl<S: Scalar> IndexedFamily<S> {
    pub fn from_fn(shape: &[usize], mut f: impl FnMut(&[usize]) -> S) -> Self {
        let len = shape.iter().product();
        let mut data = Vec::with_capacity(len);
        let mut idx = vec![0; shape.len()];
        for _ in 0..len {
            data.push(f(&idx));
            for axis in (0..shape.len()).rev() {
                idx[axis] += 1;
                if idx[axis] < shape[axis] {
                    break;
                }
                idx[axis] = 0;
            }
        }
        IndexedFamily {
            shape: shape.to_vec(),
            data,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "index arity");
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            assert!(i < n, "index out of range");
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.offset(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// All entries together with their index tuples, in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &S)> + '_ {
        self.data.iter().enumerate().map(|(mut flat, s)| {
            let mut idx = vec![0; self.shape.len()];
            for axis in (0..self.shape.len()).rev() {
                idx[axis] = flat % self.shape[axis];
                flat /= self.shape[axis];
            }
            (idx, s)
        })
    }

    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &S)> {
        self.iter().find(|(_, s)| !s.is_zero())
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> IndexedFamily<T> {
        IndexedFamily {
            shape: self.shape.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn values(&self) -> &[S] {
        &self.data
    }
}

impl<S: Scalar> fmt::Debug for IndexedFamily<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<String> = self
            .iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| format!("{i:?}={s}"))
            .collect();
        write!(f, "IndexedFamily{:?}{{{}}}", self.shape, nonzero.join(", "))
    }
}

/// Structure constants `f[i][j][k] = f_ij^k` of a Lie bracket
/// `[e_i, e_j] = f_ij^k e_k`, antisymmetric in `i, j`. Indices are 0-based.
#[derive(Clone, PartialEq)]
pub struct StructureConstants<S = Rational> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> StructureConstants<S> {
    pub fn zero(dim: usize) -> Self {
        StructureConstants {
            dim,
            data: vec![S::zero(); dim * dim * dim],
        }
    }

    /// Builds the tensor from every entry; rejects non-antisymmetric input.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> S) -> Result<Self> {
        let mut t = StructureConstants::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.data[(i * dim + j) * dim + k] = f(i, j, k);
                }
            }
        }
        t.check_antisymmetric()?;
        Ok(t)
    }

    /// Builds the tensor from brackets `[e_i, e_j] ∋ c e_k` with `i != j`;
    /// the antisymmetric partner is filled in and repeated entries add up.
    pub fn from_brackets(dim: usize, brackets: impl IntoIterator<Item = (usize, usize, usize, S)>) -> Self {
        let mut t = StructureConstants::<S>::zero(dim);
        for (i, j, k, c) in brackets {
            assert!(i != j, "bracket of a basis vector with itself");
            let cur = t.get(i, j, k).add_ref(&c);
            t.set(i, j, k, cur);
        }
        t
    }

    /// Three-dimensional tensor from the coefficient vectors of
    /// `[e1, e2]`, `[e2, e3]` and `[e3, e1]`.
    pub fn from_cyclic(rows: [[S; 3]; 3]) -> Self {
        let pairs = [(0, 1), (1, 2), (2, 0)];
        let mut t = StructureConstants::zero(3);
        for ((i, j), row) in pairs.into_iter().zip(rows) {
            for (k, c) in row.into_iter().enumerate() {
                t.set(i, j, k, c);
            }
        }
        t
    }

    fn set(&mut self, i: usize, j: usize, k: usize, c: S) {
        let d = self.dim;
        self.data[(j * d + i) * d + k] = c.neg_ref();
        self.data[(i * d + j) * d + k] = c;
    }

    fn check_antisymmetric(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i..self.dim {
                for k in 0..self.dim {
                    if !self.get(i, j, k).add_ref(self.get(j, i, k)).is_zero() {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries with `i < j`, in lexicographic order.
    pub fn brackets(&self) -> Vec<(usize, usize, usize, S)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Coordinates of `[x, y]`.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].mul_ref(&y[j]);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o = o.add_ref(&xy.mul_ref(c));
                    }
                }
            }
        }
        out
    }

    /// Entrywise map; antisymmetry is preserved by any additive map.
    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> StructureConstants<T> {
        StructureConstants {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar>(&self, f: impl FnMut(&S) -> Result<T>) -> Result<StructureConstants<T>> {
        Ok(StructureConstants {
            dim: self.dim,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn to_rational(&self) -> Result<StructureConstants<Rational>> {
        self.try_map(crate::exact::require_rational)
    }

    pub fn to_ratfunc(&self) -> StructureConstants<RatFunc> {
        self.map(Scalar::to_ratfunc)
    }

    /// Evaluates every parametric entry at the assignment.
    pub fn eval(&self, values: &Assignment) -> Result<StructureConstants<Rational>> {
        self.try_map(|s| s.to_ratfunc().eval(values))
    }

    pub fn substitute(&self, subs: &BTreeMap<String, RatFunc>) -> Result<Self> {
        self.try_map(|s| s.substitute(subs))
    }

    /// Names of parameters occurring in any entry.
    pub fn parameters(&self) -> Vec<String> {
        let mut names: Vec<String> = self.data.iter().flat_map(|s| s.to_ratfunc().variables()).collect();
        names.sort();
        names.dedup();
        names
    }
}

impl<S: Scalar> fmt::Debug for StructureConstants<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for StructureConstants<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let rhs = crate::liealg::format_combination(
                    (0..self.dim).map(|k| (self.get(i, j, k).clone(), format!("e{}", k + 1))),
                    "*",
                );
                if rhs == "0" {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "[e{},e{}] = {rhs}", i + 1, j + 1)?;
            }
        }
        if first {
            write!(f, "abelian({})", self.dim)?;
        }
        Ok(())
    }
}

/// `R[i][j][m][n] = Σ_l (f_ij^l f_lm^n + f_jm^l f_li^n + f_mi^l f_lj^n)`;
/// the tensor defines a Lie algebra exactly when every entry vanishes.
pub fn jacobi_residual<S: Scalar>(f: &StructureConstants<S>) -> IndexedFamily<S> {
    let d = f.dim();
    let term = |i: usize, j: usize, m: usize, n: usize| {
        let mut acc = S::zero();
        for l in 0..d {
            let a = f.get(i, j, l);
            if a.is_zero() {
                continue;
            }
            let b = f.get(l, m, n);
            if !b.is_zero() {
                acc = acc.add_ref(&a.mul_ref(b));
            }
        }
        acc
    };
    IndexedFamily::from_fn(&[d, d, d, d], |idx| {
        let (i, j, m, n) = (idx[0], idx[1], idx[2], idx[3]);
        term(i, j, m, n).add_ref(&term(j, m, i, n)).add_ref(&term(m, i, j, n))
    })
}

/// First violated Jacobi identity, if any.
pub fn check_jacobi<S: Scalar>(f: &StructureConstants<S>) -> Option<([usize; 4], S)> {
    jacobi_residual(f)
        .first_nonzero()
        .map(|(idx, s)| ([idx[0], idx[1], idx[2], idx[3]], s.clone()))
}
