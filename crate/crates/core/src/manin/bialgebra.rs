use super::ManinTriple;
use crate::exact::Scalar;
use crate::liealg::{IndexedFamily, StructureConstants};

/// Cobracket `δ(X_i) = delta[i][j][k] X_j ⊗ X_k` with `delta[i][j][k] = f~^jk_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cobracket<S: Scalar> {
    pub delta: IndexedFamily<S>,
}

impl<S: Scalar> Cobracket<S> {
    pub fn from_dual(fd: &StructureConstants<S>) -> Self {
        Cobracket {
            delta: IndexedFamily::from_fn(&[3, 3, 3], |i| fd.get(i[1], i[2], i[0]).clone()),
        }
    }

    pub fn of(t: &ManinTriple<S>) -> Self {
        Cobracket::from_dual(t.f_dual())
    }

    fn d(&self, i: usize, j: usize, k: usize) -> &S {
        self.delta.get(&[i, j, k])
    }

    /// `(id ⊗ δ)∘δ(X_m)` plus cyclic permutations of the tensor factors:
    /// `C[m][a][b][c] = Σ_l δ_m^{al} δ_l^{bc} + δ_m^{bl} δ_l^{ca} + δ_m^{cl} δ_l^{ab}`.
    pub fn co_jacobi_residual(&self) -> IndexedFamily<S> {
        IndexedFamily::from_fn(&[3, 3, 3, 3], |idx| {
            let (m, a, b, c) = (idx[0], idx[1], idx[2], idx[3]);
            let mut acc = S::zero();
            for l in 0..3 {
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    let p = self.d(m, x, l);
                    if !p.is_zero() {
                        acc = acc.add_ref(&p.mul_ref(self.d(l, y, z)));
                    }
                }
            }
            acc
        })
    }

    /// The 1-cocycle condition
    /// `δ([x,y]) = [x,y₁]⊗y₂ + y₁⊗[x,y₂] − [y,x₁]⊗x₂ − x₁⊗[y,x₂]`
    /// for `x = X_m`, `y = X_i`, as the coefficient `C[m][i][j][k]` of
    /// `X_j ⊗ X_k` in left minus right side.
    pub fn cocycle_residual(&self, f: &StructureConstants<S>) -> IndexedFamily<S> {
        IndexedFamily::from_fn(&[3, 3, 3, 3], |idx| {
            let (m, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
            let mut acc = S::zero();
            let mut add = |a: &S, b: &S, sign: bool| {
                if !a.is_zero() && !b.is_zero() {
                    let t = a.mul_ref(b);
                    acc = if sign { acc.add_ref(&t) } else { acc.sub_ref(&t) };
                }
            };
            for l in 0..3 {
                add(f.get(m, i, l), self.d(l, j, k), true);
                add(self.d(i, l, k), f.get(m, l, j), false);
                add(self.d(i, j, l), f.get(m, l, k), false);
                add(self.d(m, l, k), f.get(i, l, j), true);
                add(self.d(m, j, l), f.get(i, l, k), true);
            }
            acc
        })
    }
}

/// Dictionary between the cobracket residuals and the tensor identities:
/// `co_jacobi[m][k][i][j] = E[i][j][k][m]` and
/// `cocycle[m][i][j][k] = mixed[j][k][m][i]`.
pub fn co_jacobi_index(i: usize, j: usize, k: usize, m: usize) -> [usize; 4] {
    [m, k, i, j]
}

pub fn cocycle_index(j: usize, k: usize, m: usize, i: usize) -> [usize; 4] {
    [m, i, j, k]
}
