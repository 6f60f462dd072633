use super::bianchi::{na_decompose, BianchiClass, BianchiType};
use super::{check_jacobi, StructureConstants};
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

/// Rank and inertia `(positive, negative)` of a symmetric rational matrix,
/// by exact congruence diagonalization.
pub fn congruence_signature(m: &[[Rational; 3]; 3]) -> (usize, usize) {
    let mut a: Vec<Vec<Rational>> = m.iter().map(|r| r.to_vec()).collect();
    let n = a.len();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // Zero diagonal: add a row/column with a nonzero off-diagonal
                // coupling so that a diagonal entry becomes nonzero.
                let Some((i, j)) = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero())
                else {
                    break;
                };
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += &v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += &v;
                }
                i
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&x| x != p);
        for &r in &active {
            let factor = &a[r][p] / &d;
            if factor.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = &factor * &a[p][c];
                a[r][c] -= &v;
            }
        }
        for &c in &active {
            a[p][c] = Rational::zero();
            a[c][p] = Rational::zero();
        }
    }
    (pos, neg)
}

/// Matrix of `ad_x` restricted to the abelian ideal `ker(a·)`, in the basis
/// `u_q = e_q − (a_q/a_p) e_p` (q ≠ p) where `p` is the first index with
/// `a_p ≠ 0`. Returns `None` for unimodular algebras.
pub fn ad_on_ideal(f: &StructureConstants<Rational>, x: &[Rational; 3]) -> Result<Option<[[Rational; 2]; 2]>> {
    let dec = na_decompose(f)?;
    let Some(p) = (0..3).find(|&i| !dec.a_vec[i].is_zero()) else {
        return Ok(None);
    };
    let qs: Vec<usize> = (0..3).filter(|&q| q != p).collect();
    let basis: Vec<Vec<Rational>> = qs
        .iter()
        .map(|&q| {
            let mut u = vec![Rational::zero(); 3];
            u[q] = Rational::one();
            u[p] = -(&dec.a_vec[q] / &dec.a_vec[p]);
            u
        })
        .collect();
    let mut m: [[Rational; 2]; 2] = Default::default();
    for (c, u) in basis.iter().enumerate() {
        let image = f.bracket(x, u);
        for (r, &q) in qs.iter().enumerate() {
            m[r][c] = image[q].clone();
        }
    }
    Ok(Some(m))
}

/// `tr(M)^2 / det(M)` for `M = ad_x` on the abelian ideal; `None` when the
/// algebra is unimodular or `det(M) = 0`.
pub fn chi_invariant(f: &StructureConstants<Rational>, x: &[Rational; 3]) -> Result<Option<Rational>> {
    let Some(m) = ad_on_ideal(f, x)? else {
        return Ok(None);
    };
    let tr = &m[0][0] + &m[1][1];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    Ok(tr.pow(2).checked_div(&det).ok())
}

/// Bianchi type of a numeric 3-dimensional Lie algebra. Invariant under any
/// invertible change of basis, including orientation reversal.
pub fn classify_bianchi<S: Scalar>(f: &StructureConstants<S>) -> Result<BianchiType> {
    let f = f.to_rational()?;
    if f.dim() != 3 || check_jacobi(&f).is_some() {
        return Err(Error::NotLieAlgebra);
    }
    let dec = na_decompose(&f)?;
    let (pos, neg) = congruence_signature(&dec.n_mat);
    let rank = pos + neg;
    let definite = pos == 0 || neg == 0;
    let Some(p) = (0..3).find(|&i| !dec.a_vec[i].is_zero()) else {
        let class = match (rank, definite) {
            (0, _) => BianchiClass::I,
            (1, _) => BianchiClass::II,
            (2, false) => BianchiClass::VI0,
            (2, true) => BianchiClass::VII0,
            (_, true) => BianchiClass::IX,
            (_, false) => BianchiClass::VIII,
        };
        return Ok(BianchiType::fixed(class));
    };
    let mut x = [Rational::zero(), Rational::zero(), Rational::zero()];
    x[p] = Rational::one();
    let m = ad_on_ideal(&f, &x)?.expect("non-unimodular");
    let tr = &m[0][0] + &m[1][1];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return Ok(BianchiType::fixed(BianchiClass::III));
    }
    match rank {
        0 => return Ok(BianchiType::fixed(BianchiClass::V)),
        1 => return Ok(BianchiType::fixed(BianchiClass::IV)),
        _ => {}
    }
    let chi = &tr.pow(2) / &det;
    let four = Rational::from(4);
    if chi.is_positive() && chi < four {
        Ok(BianchiType::with_a_squared(BianchiClass::VIIa, &chi / &(&four - &chi)))
    } else {
        Ok(BianchiType::with_a_squared(BianchiClass::VIa, &chi / &(&chi - &four)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{change_basis, from_bianchi, BianchiParams, Matrix3};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn signature() {
        let m = |r: [[i64; 3]; 3]| r.map(|row| row.map(Rational::from));
        assert_eq!(congruence_signature(&m([[0, 1, 0], [1, 0, 0], [0, 0, 0]])), (1, 1));
        assert_eq!(congruence_signature(&m([[1, 0, 0], [0, 1, 0], [0, 0, -1]])), (2, 1));
        assert_eq!(congruence_signature(&m([[1, 1, 1], [1, 1, 1], [1, 1, 1]])), (1, 0));
        assert_eq!(congruence_signature(&m([[0, 0, 0], [0, 0, 0], [0, 0, 0]])), (0, 0));
        assert_eq!(congruence_signature(&m([[2, 1, 0], [1, 2, 0], [0, 0, 3]])), (3, 0));
    }

    #[test]
    fn examples() {
        let viii = from_bianchi(&BianchiParams::from_i64(0, 1, 1, -1));
        assert_eq!(classify_bianchi(&viii).unwrap().class, BianchiClass::VIII);
        let zero = StructureConstants::<Rational>::zero(3);
        assert_eq!(classify_bianchi(&zero).unwrap().class, BianchiClass::I);
        let via = BianchiClass::VIa.form_at(q(2));
        let t = classify_bianchi(&via).unwrap();
        assert_eq!(t, BianchiType::with_a_squared(BianchiClass::VIa, q(4)));
        let x = [q(1), q(0), q(0)];
        assert_eq!(
            ad_on_ideal(&via, &x).unwrap().unwrap(),
            [[q(-2), q(-1)], [q(-1), q(-2)]]
        );
        assert_eq!(chi_invariant(&via, &x).unwrap(), Some(Rational::frac(16, 3)));
    }

    #[test]
    fn all_standard_forms() {
        for c in BianchiClass::ALL {
            for a in [q(2), q(3), Rational::frac(1, 2)] {
                let t = classify_bianchi(&c.form_at(a.clone())).unwrap();
                assert_eq!(t.class, c);
                if c.is_parametric() {
                    assert_eq!(t.param_a_squared, Some(a.pow(2)));
                }
            }
        }
    }

    #[test]
    fn orientation_and_permutation() {
        let ix = BianchiClass::IX.standard_form().unwrap();
        let flip = Matrix3::diag([q(1), q(1), q(-1)]);
        assert_eq!(
            classify_bianchi(&change_basis(&ix, &flip).unwrap()).unwrap().class,
            BianchiClass::IX
        );
        let viii = BianchiClass::VIII.standard_form().unwrap();
        let perm = Matrix3::from_i64([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        assert_eq!(
            classify_bianchi(&change_basis(&viii, &perm).unwrap()).unwrap().class,
            BianchiClass::VIII
        );
        assert_eq!(change_basis(&viii, &Matrix3::identity()).unwrap(), viii);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = StructureConstants::from_brackets(3, [(0, 1, 0, q(1)), (0, 2, 2, q(1))]);
        assert!(matches!(classify_bianchi(&bad), Err(Error::NotLieAlgebra)));
        let sym = BianchiClass::VIa.symbolic_form();
        assert!(matches!(classify_bianchi(&sym), Err(Error::ParametricInput(_))));
    }
}
