use super::ManinTriple;
use crate::error::Result;
use crate::exact::Scalar;
use crate::liealg::{check_jacobi, format_combination, IndexedFamily, StructureConstants};

/// Basis labels of the double: `X1, X2, X3, X̃¹, X̃², X̃³`.
pub const DOUBLE_BASIS: [&str; 6] = ["X1", "X2", "X3", "X̃¹", "X̃²", "X̃³"];

/// Six-dimensional Lie algebra of a Manin triple with its invariant pairing.
/// Indices 0..3 are `X_i`, 3..6 are `X̃^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleAlgebra<S: Scalar> {
    pub g: StructureConstants<S>,
    pub pairing: [[S; 6]; 6],
}

/// Canonical pairing: zero on each subalgebra, identity across.
pub fn canonical_pairing<S: Scalar>() -> [[S; 6]; 6] {
    std::array::from_fn(|r| std::array::from_fn(|c| if r.abs_diff(c) == 3 { S::one() } else { S::zero() }))
}

impl<S: Scalar> DoubleAlgebra<S> {
    /// `[X_i,X~^j] = f_ki^j X~^k + f~^jk_i X_k`, the other brackets being
    /// those of the two subalgebras. The triple is validated first.
    pub fn build(t: &ManinTriple<S>) -> Result<Self> {
        t.validate()?;
        Ok(DoubleAlgebra::assemble(t))
    }

    /// Assembles the brackets without checking the triple.
    pub fn assemble(t: &ManinTriple<S>) -> Self {
        let (f, fd) = (t.f(), t.f_dual());
        let entry = |p: usize, q: usize, r: usize| -> S {
            match (p < 3, q < 3, r < 3) {
                (true, true, true) => f.get(p, q, r).clone(),
                (false, false, false) => fd.get(p - 3, q - 3, r - 3).clone(),
                (true, false, false) => f.get(r - 3, p, q - 3).clone(),
                (true, false, true) => fd.get(q - 3, r, p).clone(),
                _ => S::zero(),
            }
        };
        let g = StructureConstants::from_fn(6, |p, q, r| match (p < 3, q < 3) {
            (false, true) => entry(q, p, r).neg_ref(),
            _ => entry(p, q, r),
        })
        .expect("double brackets are antisymmetric");
        DoubleAlgebra {
            g,
            pairing: canonical_pairing(),
        }
    }

    /// `T[z][u][v] = <[Z,U],V> + <U,[Z,V]>`; zero exactly when the pairing
    /// is ad-invariant.
    pub fn pairing_ad_invariance_residual(&self) -> IndexedFamily<S> {
        let g = &self.g;
        let p = &self.pairing;
        IndexedFamily::from_fn(&[6, 6, 6], |idx| {
            let (z, u, v) = (idx[0], idx[1], idx[2]);
            let mut acc = S::zero();
            for r in 0..6 {
                if !p[r][v].is_zero() {
                    acc = acc.add_ref(&g.get(z, u, r).mul_ref(&p[r][v]));
                }
                if !p[u][r].is_zero() {
                    acc = acc.add_ref(&p[u][r].mul_ref(g.get(z, v, r)));
                }
            }
            acc
        })
    }

    pub fn is_lie_algebra(&self) -> bool {
        check_jacobi(&self.g).is_none()
    }

    /// All nonzero brackets `[Z,U]` with `Z` before `U`, as text lines.
    pub fn bracket_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in 0..6 {
            for q in p + 1..6 {
                let rhs = format_combination(
                    (0..6).map(|r| (self.g.get(p, q, r).clone(), DOUBLE_BASIS[r].to_string())),
                    " ",
                );
                if rhs != "0" {
                    out.push(format!("[{},{}] = {rhs}", DOUBLE_BASIS[p], DOUBLE_BASIS[q]));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::liealg::{jacobi_residual, BianchiClass};

    #[test]
    fn ix_with_abelian_dual() {
        let ix = BianchiClass::IX.standard_form().unwrap();
        let t = ManinTriple::new(ix, StructureConstants::zero(3), vec![]).unwrap();
        let d = DoubleAlgebra::build(&t).unwrap();
        // [X1, X~2] = X~3 since f_31^2 = 1
        assert_eq!(d.g.get(0, 4, 5), &Rational::one());
        assert!(jacobi_residual(&d.g).is_zero());
        assert!(d.pairing_ad_invariance_residual().is_zero());
        assert!(d.bracket_lines().contains(&"[X1,X̃²] = X̃³".to_string()));
    }

    #[test]
    fn abelian_double() {
        let z = StructureConstants::<Rational>::zero(3);
        let t = ManinTriple::new(z.clone(), z, vec![]).unwrap();
        let d = DoubleAlgebra::build(&t).unwrap();
        assert!(d.g.is_zero());
        assert!(d.pairing_ad_invariance_residual().is_zero());
    }

    #[test]
    fn corrupted_double_breaks_invariance() {
        let ix = BianchiClass::IX.standard_form().unwrap();
        let t = ManinTriple::new(ix, StructureConstants::zero(3), vec![]).unwrap();
        let d = DoubleAlgebra::build(&t).unwrap();
        let g = StructureConstants::from_fn(6, |p, q, r| {
            let c = d.g.get(p, q, r).clone();
            if (p, q, r) == (0, 4, 5) || (p, q, r) == (4, 0, 5) {
                -c
            } else {
                c
            }
        })
        .unwrap();
        let bad = DoubleAlgebra {
            g,
            pairing: d.pairing.clone(),
        };
        assert!(!bad.pairing_ad_invariance_residual().is_zero());
    }
}
