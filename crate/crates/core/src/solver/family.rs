use std::collections::BTreeMap;

use super::elimination::{
    bareiss_rref, component_name, dual_components, dual_from_components, mixed_jacobi_system, Rref,
};
use crate::error::{Error, Result};
use crate::exact::{Assignment, RatFunc, Rational, Scalar};
use crate::liealg::{format_combination, StructureConstants};
use crate::manin::ManinTriple;

/// Solution space of the mixed identities for a fixed first algebra: every
/// dual tensor `f~` compatible with `f`, as a linear family
/// `f~ = Σ t_q · basis_q` over free components.
#[derive(Clone, Debug)]
pub struct DualFamily<S: Scalar = Rational> {
    f: StructureConstants<S>,
    rref: Rref<S>,
    free: Vec<usize>,
}

/// Solves the 27×9 mixed system for `f`. With symbolic coefficients the
/// parameters are treated as transcendental; the pivots used are kept as
/// assumptions (see [`DualFamily::check_pivots`]).
pub fn solve_dual_family<S: Scalar>(f: &StructureConstants<S>) -> Result<DualFamily<S>> {
    let sys = mixed_jacobi_system(f);
    let rref = bareiss_rref(sys.matrix, 9)?;
    let free = (0..9).filter(|c| !rref.pivot_columns.contains(c)).collect();
    Ok(DualFamily {
        f: f.clone(),
        rref,
        free,
    })
}

impl<S: Scalar> DualFamily<S> {
    pub fn algebra(&self) -> &StructureConstants<S> {
        &self.f
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn pivots(&self) -> &[S] {
        &self.rref.pivots
    }

    /// Parameter names `t1..tk`, one per free component.
    pub fn parameter_names(&self) -> Vec<String> {
        (1..=self.dim()).map(|q| format!("t{q}")).collect()
    }

    /// Nine components as linear forms in the free parameters:
    /// `forms[c][q]` is the coefficient of `t_{q+1}` in component `c`.
    pub fn component_forms(&self) -> Vec<Vec<S>> {
        let mut forms = vec![vec![S::zero(); self.dim()]; 9];
        for (q, &c) in self.free.iter().enumerate() {
            forms[c][q] = S::one();
        }
        for (row, &c) in self.rref.rows.iter().zip(&self.rref.pivot_columns) {
            for (q, &fc) in self.free.iter().enumerate() {
                forms[c][q] = row[fc].neg_ref();
            }
        }
        forms
    }

    /// Basis of the solution space: free component `q` set to one.
    pub fn basis(&self) -> Vec<StructureConstants<S>> {
        let forms = self.component_forms();
        (0..self.dim())
            .map(|q| dual_from_components(&forms.iter().map(|f| f[q].clone()).collect::<Vec<_>>()))
            .collect()
    }

    /// The family member with the given parameter values.
    pub fn member(&self, values: &[S]) -> StructureConstants<S> {
        assert_eq!(values.len(), self.dim(), "one value per free parameter");
        let comps: Vec<S> = self
            .component_forms()
            .iter()
            .map(|form| {
                form.iter()
                    .zip(values)
                    .fold(S::zero(), |acc, (c, v)| acc.add_ref(&c.mul_ref(v)))
            })
            .collect();
        dual_from_components(&comps)
    }

    /// Member with symbolic parameters `t1..tk`.
    pub fn generic(&self) -> StructureConstants<RatFunc> {
        let forms = self.component_forms();
        let names = self.parameter_names();
        let comps: Vec<RatFunc> = forms
            .iter()
            .map(|form| {
                form.iter().zip(&names).fold(RatFunc::zero(), |acc, (c, t)| {
                    &acc + &(&c.to_ratfunc() * &RatFunc::var(t))
                })
            })
            .collect();
        dual_from_components(&comps)
    }

    /// Linear relations `pivot = combination of free components`.
    pub fn relations(&self) -> Vec<(usize, Vec<(usize, S)>)> {
        self.rref
            .rows
            .iter()
            .zip(&self.rref.pivot_columns)
            .map(|(row, &c)| {
                let rhs = self
                    .free
                    .iter()
                    .filter(|&&fc| !row[fc].is_zero())
                    .map(|&fc| (fc, row[fc].neg_ref()))
                    .collect();
                (c, rhs)
            })
            .collect()
    }

    /// Relations written out, e.g. `f23_3 = -f12_1`.
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations()
            .into_iter()
            .map(|(c, rhs)| {
                let terms = rhs.into_iter().map(|(fc, s)| (s, component_name(fc)));
                format!("{} = {}", component_name(c), format_combination(terms, " "))
            })
            .collect()
    }

    /// Free parameter values of `fd` when it lies in the family.
    pub fn coordinates_of(&self, fd: &StructureConstants<S>) -> Option<Vec<S>> {
        let comps = dual_components(fd);
        let coords: Vec<S> = self.free.iter().map(|&c| comps[c].clone()).collect();
        (dual_components(&self.member(&coords)) == comps).then_some(coords)
    }

    pub fn contains(&self, fd: &StructureConstants<S>) -> bool {
        self.coordinates_of(fd).is_some()
    }

    /// The triple `(f, member(values))`; fails unless the dual Jacobi
    /// identity holds there.
    pub fn specialize(&self, values: &[S]) -> Result<ManinTriple<S>> {
        ManinTriple::new(self.f.clone(), self.member(values), vec![])
    }
}

impl DualFamily<RatFunc> {
    /// Fails with a parametric-pivot error when a pivot used during
    /// elimination vanishes at `values`; otherwise evaluates the family.
    pub fn evaluate(&self, values: &Assignment) -> Result<DualFamily<Rational>> {
        self.check_pivots(values)?;
        let rows = self
            .rref
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.eval(values)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let pivots = self
            .rref
            .pivots
            .iter()
            .map(|x| x.eval(values))
            .collect::<Result<Vec<_>>>()?;
        Ok(DualFamily {
            f: self.f.eval(values)?,
            rref: Rref {
                rows,
                pivot_columns: self.rref.pivot_columns.clone(),
                pivots,
            },
            free: self.free.clone(),
        })
    }

    pub fn check_pivots(&self, values: &Assignment) -> Result<()> {
        for (&column, pivot) in self.rref.pivot_columns.iter().zip(&self.rref.pivots) {
            if pivot.numer().eval(values)?.is_zero() {
                return Err(Error::ParametricPivot {
                    column: component_name(column),
                    pivot: pivot.to_string(),
                    at: crate::manin::format_assignment(values),
                });
            }
        }
        Ok(())
    }

    /// Rational values of `var` at which some pivot vanishes (pivots of
    /// degree at most two in `var`).
    pub fn singular_values(&self, var: &str) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .rref
            .pivots
            .iter()
            .filter_map(|p| p.numer().rational_roots(var))
            .flatten()
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Substitution sending each component name (`f12_1`, …) to its value in `fd`.
pub fn component_substitution(fd: &StructureConstants<RatFunc>) -> BTreeMap<String, RatFunc> {
    dual_components(fd)
        .into_iter()
        .enumerate()
        .map(|(c, v)| (component_name(c), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::BianchiClass;

    #[test]
    fn dimensions() {
        let expected = [
            (BianchiClass::I, 9),
            (BianchiClass::II, 6),
            (BianchiClass::III, 4),
            (BianchiClass::IV, 4),
            (BianchiClass::V, 6),
            (BianchiClass::VI0, 4),
            (BianchiClass::VIa, 4),
            (BianchiClass::VII0, 4),
            (BianchiClass::VIIa, 4),
            (BianchiClass::VIII, 3),
            (BianchiClass::IX, 3),
        ];
        for (c, d) in expected {
            let fam = solve_dual_family(&c.symbolic_form()).unwrap();
            assert_eq!(fam.dim(), d, "{}", c.name());
            for a in [2, 3] {
                let fam = solve_dual_family(&c.form_at(Rational::from(a))).unwrap();
                assert_eq!(fam.dim(), d, "{} at a={a}", c.name());
            }
        }
    }

    #[test]
    fn members_satisfy_mixed_identities() {
        for c in BianchiClass::ALL {
            let fam = solve_dual_family(&c.symbolic_form()).unwrap();
            let res = crate::manin::mixed_jacobi_residual(&fam.algebra().clone(), &fam.generic());
            assert!(res.is_zero(), "{}", c.name());
        }
    }

    #[test]
    fn ix_relations() {
        let fam = solve_dual_family(&BianchiClass::IX.standard_form().unwrap()).unwrap();
        assert_eq!(fam.dim(), 3);
        let rels = fam.relation_strings();
        assert_eq!(rels.len(), 6);
        let b = fam.basis();
        assert_eq!(
            fam.coordinates_of(&b[1]),
            Some(vec![Rational::zero(), Rational::one(), Rational::zero()])
        );
        let bad = StructureConstants::from_brackets(3, [(0, 1, 2, Rational::one())]);
        assert!(!fam.contains(&bad));
    }

    #[test]
    fn row_order_does_not_change_solution_space() {
        let f = BianchiClass::VIa.form_at(Rational::from(3));
        let mut sys = mixed_jacobi_system(&f);
        let base = bareiss_rref(sys.matrix.clone(), 9).unwrap();
        sys.matrix.reverse();
        sys.matrix.rotate_left(5);
        let shuffled = bareiss_rref(sys.matrix, 9).unwrap();
        assert_eq!(base.pivot_columns, shuffled.pivot_columns);
        assert_eq!(base.rows, shuffled.rows);
    }

    #[test]
    fn symbolic_family_matches_numeric_solves() {
        for c in [BianchiClass::VIa, BianchiClass::VIIa] {
            let sym = solve_dual_family(&c.symbolic_form()).unwrap();
            for a in [
                Rational::from(2),
                Rational::from(3),
                Rational::from(5),
                Rational::frac(1, 2),
            ] {
                let vals = Assignment::from([("a".to_string(), a.clone())]);
                let at = sym.evaluate(&vals).unwrap();
                let num = solve_dual_family(&c.form_at(a)).unwrap();
                assert_eq!(at.dim(), num.dim());
                assert!(at.basis().iter().all(|b| num.contains(b)));
                assert!(num.basis().iter().all(|b| at.contains(b)));
            }
        }
    }
}
