use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Identity, Result};
use crate::exact::{Assignment, MultiPoly, RatFunc, Rational, Scalar};
use crate::liealg::{change_basis, format_combination, jacobi_residual, IndexedFamily, Matrix3, StructureConstants};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Positive,
    NonZero,
    Zero,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Positive => ">0",
            Relation::NonZero => "!=0",
            Relation::Zero => "=0",
        }
    }

    pub fn holds(self, value: &Rational) -> bool {
        match self {
            Relation::Positive => value.is_positive(),
            Relation::NonZero => !value.is_zero(),
            Relation::Zero => value.is_zero(),
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            ">0" | "> 0" => Ok(Relation::Positive),
            "!=0" | "≠0" | "!= 0" | "≠ 0" => Ok(Relation::NonZero),
            "=0" | "= 0" | "==0" => Ok(Relation::Zero),
            other => Err(Error::parse(other, "expected `>0`, `!=0` or `=0`")),
        }
    }
}

/// Side condition `poly rel 0` on the parameters of a triple.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub poly: RatFunc,
    pub rel: Relation,
}

impl Constraint {
    pub fn new(poly: RatFunc, rel: Relation) -> Self {
        Constraint { poly, rel }
    }

    /// Parses e.g. `"b"` with `">0"`.
    pub fn parse(poly: &str, rel: &str) -> Result<Self> {
        Ok(Constraint::new(poly.parse()?, rel.parse()?))
    }

    pub fn check(&self, values: &Assignment) -> Result<()> {
        let v = self.poly.eval(values)?;
        if self.rel.holds(&v) {
            Ok(())
        } else {
            Err(Error::ConstraintViolation {
                constraint: self.to_string(),
                values: format_assignment(values),
            })
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.rel {
            Relation::Positive => ">",
            Relation::NonZero => "!=",
            Relation::Zero => "=",
        };
        write!(f, "{} {op} 0", self.poly)
    }
}

pub(crate) fn format_assignment(values: &Assignment) -> String {
    let parts: Vec<String> = values.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Manin triple given by the structure constants of both isotropic
/// subalgebras in dual bases: `f[i][j][k] = f_ij^k` for `[X_i,X_j]` and
/// `f_dual[i][j][k] = f~^ij_k` for `[X~^i,X~^j]`.
#[derive(Clone, Debug)]
pub struct ManinTriple<S: Scalar = Rational> {
    f: StructureConstants<S>,
    f_dual: StructureConstants<S>,
    constraints: Vec<Constraint>,
}

impl<S: Scalar> PartialEq for ManinTriple<S> {
    /// Exact entrywise equality of both tensors.
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f && self.f_dual == other.f_dual
    }
}

/// `R[j][k][m][i] = Σ_l ( f~^jk_l f_mi^l + f~^kl_m f_li^j + f~^jl_i f_lm^k
/// + f~^jl_m f_il^k + f~^kl_i f_ml^j )`, the coefficient of `X~^l` terms in
/// the Jacobi identity `[X_m,[X~^j,X~^k]] + cyclic` of the double.
pub fn mixed_jacobi_residual<S: Scalar>(f: &StructureConstants<S>, fd: &StructureConstants<S>) -> IndexedFamily<S> {
    let prod = |a: &S, b: &S| {
        if a.is_zero() || b.is_zero() {
            S::zero()
        } else {
            a.mul_ref(b)
        }
    };
    IndexedFamily::from_fn(&[3, 3, 3, 3], |idx| {
        let (j, k, m, i) = (idx[0], idx[1], idx[2], idx[3]);
        let mut acc = S::zero();
        for l in 0..3 {
            for t in [
                prod(fd.get(j, k, l), f.get(m, i, l)),
                prod(fd.get(k, l, m), f.get(l, i, j)),
                prod(fd.get(j, l, i), f.get(l, m, k)),
                prod(fd.get(j, l, m), f.get(i, l, k)),
                prod(fd.get(k, l, i), f.get(m, l, j)),
            ] {
                if !t.is_zero() {
                    acc = acc.add_ref(&t);
                }
            }
        }
        acc
    })
}

/// `E[i][j][k][m] = Σ_l f~^kl_m f~^ij_l + f~^il_m f~^jk_l + f~^jl_m f~^ki_l`,
/// the Jacobi identity of the dual algebra written with upper indices. It
/// is the negated [`jacobi_residual`] of the same tensor.
pub fn dual_jacobi_residual<S: Scalar>(fd: &StructureConstants<S>) -> IndexedFamily<S> {
    jacobi_residual(fd).map(Scalar::neg_ref)
}

impl<S: Scalar> ManinTriple<S> {
    /// Validates antisymmetry (by construction of the tensors), both Jacobi
    /// identities and the mixed identities. Parametric residuals must vanish
    /// as rational functions once the `=0` constraints are eliminated.
    pub fn new(f: StructureConstants<S>, f_dual: StructureConstants<S>, constraints: Vec<Constraint>) -> Result<Self> {
        let t = ManinTriple::unchecked(f, f_dual, constraints);
        t.validate()?;
        Ok(t)
    }

    /// Builds a triple without checking any identity.
    pub fn unchecked(f: StructureConstants<S>, f_dual: StructureConstants<S>, constraints: Vec<Constraint>) -> Self {
        assert_eq!(f.dim(), 3, "first subalgebra must be 3-dimensional");
        assert_eq!(f_dual.dim(), 3, "second subalgebra must be 3-dimensional");
        ManinTriple { f, f_dual, constraints }
    }

    pub fn validate(&self) -> Result<()> {
        let subs = equality_substitutions(&self.constraints)?;
        let families = [
            (Identity::Jacobi, jacobi_residual(&self.f)),
            (Identity::DualJacobi, dual_jacobi_residual(&self.f_dual)),
            (Identity::Mixed, self.mixed_jacobi_residual()),
        ];
        for (identity, fam) in families {
            for (idx, r) in fam.iter() {
                if r.is_zero() {
                    continue;
                }
                let reduced = if subs.is_empty() {
                    r.to_ratfunc()
                } else {
                    r.to_ratfunc().substitute(&subs)?
                };
                if !reduced.is_zero() {
                    return Err(Error::JacobiViolation {
                        identity,
                        indices: [idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1],
                        residual: reduced.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn f(&self) -> &StructureConstants<S> {
        &self.f
    }

    pub fn f_dual(&self) -> &StructureConstants<S> {
        &self.f_dual
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn mixed_jacobi_residual(&self) -> IndexedFamily<S> {
        mixed_jacobi_residual(&self.f, &self.f_dual)
    }

    pub fn dual_jacobi_residual(&self) -> IndexedFamily<S> {
        dual_jacobi_residual(&self.f_dual)
    }

    /// Swaps the roles of the two subalgebras.
    pub fn dual(&self) -> ManinTriple<S> {
        ManinTriple {
            f: self.f_dual.clone(),
            f_dual: self.f.clone(),
            constraints: self.constraints.clone(),
        }
    }

    /// Applies `X'_i = X_k A^k_i`, `X~'^j = (A^-1)^j_k X~^k`.
    pub fn transform(&self, a: &Matrix3<S>) -> Result<ManinTriple<S>> {
        let f = change_basis(&self.f, a)?;
        let inv = a.inverse()?;
        // h[i][j][p] = (A^-1)^i_m (A^-1)^j_n f~^mn_p
        let mut h = vec![S::zero(); 27];
        for i in 0..3 {
            for j in 0..3 {
                for m in 0..3 {
                    if inv.0[i][m].is_zero() {
                        continue;
                    }
                    for n in 0..3 {
                        let w = inv.0[i][m].mul_ref(&inv.0[j][n]);
                        if w.is_zero() {
                            continue;
                        }
                        for p in 0..3 {
                            let c = self.f_dual.get(m, n, p);
                            if !c.is_zero() {
                                h[(i * 3 + j) * 3 + p] = h[(i * 3 + j) * 3 + p].add_ref(&w.mul_ref(c));
                            }
                        }
                    }
                }
            }
        }
        let f_dual = StructureConstants::from_fn(3, |i, j, k| {
            (0..3).fold(S::zero(), |acc, p| {
                acc.add_ref(&h[(i * 3 + j) * 3 + p].mul_ref(&a.0[p][k]))
            })
        })?;
        Ok(ManinTriple {
            f,
            f_dual,
            constraints: self.constraints.clone(),
        })
    }

    pub fn parameters(&self) -> Vec<String> {
        let mut names = self.f.parameters();
        names.extend(self.f_dual.parameters());
        for c in &self.constraints {
            names.extend(c.poly.variables());
        }
        names.sort();
        names.dedup();
        names
    }

    /// Checks the constraints at `values` and returns the numeric triple,
    /// validated.
    pub fn instantiate(&self, values: &Assignment) -> Result<ManinTriple<Rational>> {
        for c in &self.constraints {
            c.check(values)?;
        }
        ManinTriple::new(self.f.eval(values)?, self.f_dual.eval(values)?, Vec::new())
    }

    pub fn to_ratfunc(&self) -> ManinTriple<RatFunc> {
        ManinTriple {
            f: self.f.to_ratfunc(),
            f_dual: self.f_dual.to_ratfunc(),
            constraints: self.constraints.clone(),
        }
    }

    pub fn to_rational(&self) -> Result<ManinTriple<Rational>> {
        Ok(ManinTriple {
            f: self.f.to_rational()?,
            f_dual: self.f_dual.to_rational()?,
            constraints: self.constraints.clone(),
        })
    }

    /// Brackets in the form `[X̃¹,X̃²] = -b X̃²`, one per line, the first
    /// subalgebra followed by the second.
    pub fn pretty(&self) -> String {
        let mut lines = Vec::new();
        let pairs = [(0, 1), (1, 2), (2, 0)];
        for (tensor, names) in [(&self.f, ["X1", "X2", "X3"]), (&self.f_dual, ["X̃¹", "X̃²", "X̃³"])] {
            for (i, j) in pairs {
                let rhs = format_combination((0..3).map(|k| (tensor.get(i, j, k).clone(), names[k].to_string())), " ");
                lines.push(format!("[{},{}] = {rhs}", names[i], names[j]));
            }
        }
        if !self.constraints.is_empty() {
            let cs: Vec<String> = self.constraints.iter().map(|c| c.to_string()).collect();
            lines.push(format!("where {}", cs.join(", ")));
        }
        lines.join("\n")
    }
}

/// Turns each `p = 0` constraint that is linear in some variable with a
/// constant coefficient into a substitution for that variable.
fn equality_substitutions(constraints: &[Constraint]) -> Result<BTreeMap<String, RatFunc>> {
    let mut subs = BTreeMap::new();
    for c in constraints.iter().filter(|c| c.rel == Relation::Zero) {
        let poly = c.poly.substitute(&subs)?;
        let num = poly.numer().clone();
        let solved = num.variables().iter().find_map(|v| {
            if num.degree_in(v) != 1 {
                return None;
            }
            let x = MultiPoly::var(v);
            let at0 = num.eval_partial(&Assignment::from([(v.clone(), Rational::zero())]));
            let coeff = (&num - &at0).div_exact(&x)?;
            let c = coeff.as_constant()?;
            Some((v.clone(), RatFunc::from(at0.scale(&(-c.recip().ok()?)))))
        });
        match solved {
            Some((v, value)) => {
                for existing in subs.values_mut() {
                    *existing = RatFunc::substitute(existing, &BTreeMap::from([(v.clone(), value.clone())]))?;
                }
                subs.insert(v, value);
            }
            None if num.is_zero() => {}
            None => return Err(Error::UnsupportedConstraint(c.to_string())),
        }
    }
    Ok(subs)
}

impl<S: Scalar> fmt::Display for ManinTriple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}
