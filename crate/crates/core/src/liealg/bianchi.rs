use std::fmt;
use std::str::FromStr;

use super::StructureConstants;
use crate::error::{Error, Result};
use crate::exact::{RatFunc, Rational, Scalar};

/// Parameters `(a, n1, n2, n3)` of the Bianchi form
/// `[X1,X2] = -a X2 + n3 X3`, `[X2,X3] = n1 X1`, `[X3,X1] = n2 X2 + a X3`.
#[derive(Clone, Debug, PartialEq)]
pub struct BianchiParams<S = Rational> {
    pub a: S,
    pub n1: S,
    pub n2: S,
    pub n3: S,
}

impl<S: Scalar> BianchiParams<S> {
    pub fn new(a: S, n1: S, n2: S, n3: S) -> Self {
        BianchiParams { a, n1, n2, n3 }
    }
}

impl BianchiParams<Rational> {
    pub fn from_i64(a: i64, n1: i64, n2: i64, n3: i64) -> Self {
        BianchiParams::new(a.into(), n1.into(), n2.into(), n3.into())
    }
}

pub fn from_bianchi<S: Scalar>(p: &BianchiParams<S>) -> StructureConstants<S> {
    StructureConstants::from_cyclic([
        [S::zero(), p.a.neg_ref(), p.n3.clone()],
        [p.n1.clone(), S::zero(), S::zero()],
        [S::zero(), p.n2.clone(), p.a.clone()],
    ])
}

/// The eleven classes of real 3-dimensional Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BianchiClass {
    I,
    II,
    III,
    IV,
    V,
    VI0,
    VIa,
    VII0,
    VIIa,
    VIII,
    IX,
}

impl BianchiClass {
    pub const ALL: [BianchiClass; 11] = [
        BianchiClass::I,
        BianchiClass::II,
        BianchiClass::III,
        BianchiClass::IV,
        BianchiClass::V,
        BianchiClass::VI0,
        BianchiClass::VIa,
        BianchiClass::VII0,
        BianchiClass::VIIa,
        BianchiClass::VIII,
        BianchiClass::IX,
    ];

    /// True for the one-parameter classes VIa and VIIa.
    pub fn is_parametric(self) -> bool {
        matches!(self, BianchiClass::VIa | BianchiClass::VIIa)
    }

    /// Bianchi parameters of the standard form; `a` is only used by VIa and VIIa.
    pub fn params<S: Scalar>(self, a: S) -> BianchiParams<S> {
        use BianchiClass::*;
        let (fixed_a, n1, n2, n3) = match self {
            I => (0, 0, 0, 0),
            II => (0, 1, 0, 0),
            VII0 => (0, 1, 1, 0),
            VI0 => (0, 1, -1, 0),
            IX => (0, 1, 1, 1),
            VIII => (0, 1, 1, -1),
            V => (1, 0, 0, 0),
            IV => (1, 0, 0, 1),
            VIIa => (0, 0, 1, 1),
            III => (1, 0, 1, -1),
            VIa => (0, 0, 1, -1),
        };
        let a = if self.is_parametric() { a } else { S::from_i64(fixed_a) };
        BianchiParams::new(a, S::from_i64(n1), S::from_i64(n2), S::from_i64(n3))
    }

    /// Standard form of a class without a continuous parameter.
    pub fn standard_form(self) -> Option<StructureConstants<Rational>> {
        (!self.is_parametric()).then(|| from_bianchi(&self.params(Rational::zero())))
    }

    /// Standard form at a rational value of `a` (ignored for fixed classes).
    pub fn form_at(self, a: Rational) -> StructureConstants<Rational> {
        from_bianchi(&self.params(a))
    }

    /// Standard form with `a` kept as a symbol.
    pub fn symbolic_form(self) -> StructureConstants<RatFunc> {
        from_bianchi(&self.params(RatFunc::var("a")))
    }

    pub fn name(self) -> &'static str {
        use BianchiClass::*;
        match self {
            I => "I",
            II => "II",
            III => "III",
            IV => "IV",
            V => "V",
            VI0 => "VI0",
            VIa => "VIa",
            VII0 => "VII0",
            VIIa => "VIIa",
            VIII => "VIII",
            IX => "IX",
        }
    }
}

impl fmt::Display for BianchiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BianchiClass {
    type Err = Error;

    /// Accepts `VI0`, `VI_0`, `VIa`, `VI_a` and similar spellings.
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.trim().chars().filter(|&c| c != '_').collect();
        BianchiClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Isomorphism class of a real 3-dimensional Lie algebra. For VIa and VIIa
/// the parameter is recorded as the exact rational `a^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BianchiType {
    pub class: BianchiClass,
    pub param_a_squared: Option<Rational>,
}

impl BianchiType {
    pub fn fixed(class: BianchiClass) -> Self {
        assert!(!class.is_parametric(), "{class} needs a parameter");
        BianchiType {
            class,
            param_a_squared: None,
        }
    }

    pub fn with_a_squared(class: BianchiClass, a_squared: Rational) -> Self {
        assert!(class.is_parametric(), "{class} has no parameter");
        BianchiType {
            class,
            param_a_squared: Some(a_squared),
        }
    }
}

impl fmt::Display for BianchiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param_a_squared {
            Some(q) => write!(f, "{}(a^2={q})", self.class),
            None => write!(f, "{}", self.class),
        }
    }
}

/// `f_ij^k = ε_ijl n^lk + δ^k_i a_j − δ^k_j a_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct NADecomposition<S = Rational> {
    pub a_vec: [S; 3],
    pub n_mat: [[S; 3]; 3],
}

fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

pub fn na_decompose<S: Scalar>(f: &StructureConstants<S>) -> Result<NADecomposition<S>> {
    assert_eq!(f.dim(), 3, "decomposition is defined in dimension 3");
    let half = S::from_rational(Rational::frac(1, 2));
    let a_vec: [S; 3] = std::array::from_fn(|i| {
        let tr = (0..3).fold(S::zero(), |acc, j| acc.add_ref(f.get(i, j, j)));
        tr.mul_ref(&half).neg_ref()
    });
    let n_mat: [[S; 3]; 3] = std::array::from_fn(|m| {
        std::array::from_fn(|k| {
            let mut acc = S::zero();
            for i in 0..3 {
                for j in 0..3 {
                    match levi_civita(i, j, m) {
                        1 => acc = acc.add_ref(f.get(i, j, k)),
                        -1 => acc = acc.sub_ref(f.get(i, j, k)),
                        _ => {}
                    }
                }
            }
            let mut acc = acc.mul_ref(&half);
            for (j, aj) in a_vec.iter().enumerate() {
                match levi_civita(k, j, m) {
                    1 => acc = acc.sub_ref(aj),
                    -1 => acc = acc.add_ref(aj),
                    _ => {}
                }
            }
            acc
        })
    });
    for m in 0..3 {
        for k in m + 1..3 {
            if n_mat[m][k] != n_mat[k][m] {
                return Err(Error::NonSymmetricN);
            }
        }
    }
    Ok(NADecomposition { a_vec, n_mat })
}

impl<S: Scalar> NADecomposition<S> {
    pub fn recompose(&self) -> StructureConstants<S> {
        StructureConstants::from_fn(3, |i, j, k| {
            let mut acc = S::zero();
            for l in 0..3 {
                match levi_civita(i, j, l) {
                    1 => acc = acc.add_ref(&self.n_mat[l][k]),
                    -1 => acc = acc.sub_ref(&self.n_mat[l][k]),
                    _ => {}
                }
            }
            if k == i {
                acc = acc.add_ref(&self.a_vec[j]);
            }
            if k == j {
                acc = acc.sub_ref(&self.a_vec[i]);
            }
            acc
        })
        .expect("recomposed tensor is antisymmetric")
    }

    /// `n · a`, which vanishes exactly when the tensor satisfies Jacobi.
    pub fn n_times_a(&self) -> [S; 3] {
        std::array::from_fn(|m| {
            (0..3).fold(S::zero(), |acc, k| {
                acc.add_ref(&self.n_mat[m][k].mul_ref(&self.a_vec[k]))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::jacobi_residual;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn bianchi_forms() {
        let ix = BianchiClass::IX.standard_form().unwrap();
        assert_eq!(ix.to_string(), "[e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = e1");
        assert!(BianchiClass::I.standard_form().unwrap().is_zero());
        let v = BianchiClass::V.standard_form().unwrap();
        assert_eq!(v.get(0, 1, 1), &q(-1));
        assert_eq!(v.get(2, 0, 2), &q(1));
        assert_eq!(v.brackets().len(), 2);
        for c in BianchiClass::ALL {
            assert!(jacobi_residual(&c.form_at(q(2))).is_zero(), "{c}");
            assert!(jacobi_residual(&c.symbolic_form()).is_zero(), "{c}");
        }
    }

    #[test]
    fn decomposition_examples() {
        let ix = na_decompose(&BianchiClass::IX.standard_form().unwrap()).unwrap();
        assert_eq!(ix.a_vec, [q(0), q(0), q(0)]);
        assert_eq!(ix.n_mat, [[q(1), q(0), q(0)], [q(0), q(1), q(0)], [q(0), q(0), q(1)]]);
        let v = na_decompose(&BianchiClass::V.standard_form().unwrap()).unwrap();
        assert_eq!(v.a_vec, [q(1), q(0), q(0)]);
        assert!(v.n_mat.iter().flatten().all(|x| x.is_zero()));
        let z = na_decompose(&StructureConstants::<Rational>::zero(3)).unwrap();
        assert!(z.recompose().is_zero());
        for c in BianchiClass::ALL {
            let f = c.symbolic_form();
            assert_eq!(na_decompose(&f).unwrap().recompose(), f);
        }
    }

    #[test]
    fn class_names_parse() {
        for c in BianchiClass::ALL {
            assert_eq!(c.name().parse::<BianchiClass>().unwrap(), c);
        }
        assert_eq!("VI_a".parse::<BianchiClass>().unwrap(), BianchiClass::VIa);
        assert_eq!("VII_0".parse::<BianchiClass>().unwrap(), BianchiClass::VII0);
        assert!("X".parse::<BianchiClass>().is_err());
    }
}
