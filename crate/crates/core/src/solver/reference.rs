//! Published per-algebra relations among the dual components and the
//! quadratic conditions that remain, used as an independent reference for
//! the solver. Components are named `fIJ_K` for `f~^IJ_K`; `a` is the
//! Bianchi parameter.

use super::elimination::{bareiss_rref, component_name};
use super::family::{component_substitution, solve_dual_family};
use super::ideal::{dual_jacobi_ideal, ideal_equivalent, IdealComparison, QuadraticIdeal, SamplingConfig};
use crate::error::Result;
use crate::exact::{MultiPoly, RatFunc};
use crate::liealg::{na_decompose, BianchiClass};

pub struct ReferenceRelations {
    pub class: BianchiClass,
    /// Linear forms that vanish on every compatible dual.
    pub linear: &'static [&'static str],
    /// Remaining dual Jacobi conditions; `None` for type I, where they are
    /// the conditions `n·a = 0` on the dual algebra itself.
    pub quadratic: Option<&'static [&'static str]>,
}

pub const REFERENCE: [ReferenceRelations; 11] = [
    ReferenceRelations {
        class: BianchiClass::IX,
        linear: &["f23_3+f12_1", "f23_2-f13_1", "f13_3-f12_2", "f23_1", "f12_3", "f13_2"],
        quadratic: Some(&[]),
    },
    ReferenceRelations {
        class: BianchiClass::VIII,
        linear: &["f12_1+f23_3", "f13_1-f23_2", "f12_2-f13_3", "f23_1", "f13_2", "f12_3"],
        quadratic: Some(&[]),
    },
    ReferenceRelations {
        class: BianchiClass::VIIa,
        linear: &[
            "f13_2-a*f13_3",
            "f12_3+a*f13_3",
            "f23_3+(a^2*f23_2+a^2*f13_1-f23_2+f13_1)/(2*a)",
            "f12_1+(a^2*f23_2+a^2*f13_1+f23_2-f13_1)/(2*a)",
            "f12_2-f13_3",
        ],
        quadratic: Some(&["4*a*f23_1*f13_3+(a*f23_2)^2+2*a^2*f23_2*f13_1+f23_2^2-2*f23_2*f13_1+(a*f13_1)^2+f13_1^2"]),
    },
    ReferenceRelations {
        class: BianchiClass::VII0,
        linear: &["f12_1+f23_3", "f12_2-f13_3", "f23_2-f13_1", "f13_2", "f23_1"],
        quadratic: Some(&["f12_3*f13_1"]),
    },
    ReferenceRelations {
        class: BianchiClass::VIa,
        linear: &[
            "f13_1+(-a^2*f12_1+a^2*f23_3-f23_3-f12_1)/(2*a)",
            "f12_3-a*f12_2",
            "f13_2-a*f12_2",
            "f13_3-f12_2",
            "f23_2-(-a^2*f12_1+a^2*f23_3+f23_3+f12_1)/(2*a)",
        ],
        quadratic: Some(&["4*a*f23_1*f12_2+(a*f12_1)^2-2*a^2*f12_1*f23_3-2*f12_1*f23_3-f12_1^2+(a*f23_3)^2-f23_3^2"]),
    },
    ReferenceRelations {
        class: BianchiClass::VI0,
        linear: &["f13_3-f12_2", "f13_1-f23_2", "f12_1+f23_3", "f13_2", "f23_1"],
        quadratic: Some(&["f12_3*f23_2"]),
    },
    ReferenceRelations {
        class: BianchiClass::V,
        linear: &["f12_1-f23_3", "f13_3+f12_2", "f23_2+f13_1"],
        quadratic: Some(&[]),
    },
    ReferenceRelations {
        class: BianchiClass::IV,
        linear: &["f12_3", "f12_2", "f23_2+f13_1+2*f12_1", "f23_3-f12_1", "f13_3"],
        quadratic: Some(&["f12_1^2"]),
    },
    ReferenceRelations {
        class: BianchiClass::III,
        linear: &[
            "f13_3-f12_2",
            "f12_1-f13_1",
            "f12_3-f12_2",
            "f13_2-f12_2",
            "f23_3-f23_2",
        ],
        quadratic: Some(&["f23_1*f12_2-f13_1*f23_3"]),
    },
    ReferenceRelations {
        class: BianchiClass::II,
        linear: &["f13_1-f23_2", "f23_1", "f12_1+f23_3"],
        quadratic: Some(&[
            "-f13_3*f23_3+f23_3*f12_2-2*f12_3*f23_2",
            "-2*f13_2*f23_3-f12_2*f23_2+f23_2*f13_3",
        ]),
    },
    ReferenceRelations {
        class: BianchiClass::I,
        linear: &[],
        quadratic: None,
    },
];

pub fn reference_for(class: BianchiClass) -> &'static ReferenceRelations {
    REFERENCE
        .iter()
        .find(|r| r.class == class)
        .expect("every class is listed")
}

#[derive(Clone, Debug)]
pub struct ReferenceMatch {
    pub class: BianchiClass,
    pub nullspace_dim: usize,
    /// All reference linear forms vanish on the solved family.
    pub linear_vanish: bool,
    /// Reference forms are independent and as many as the solver's rank.
    pub linear_rank_matches: bool,
    pub ideal: IdealComparison,
}

impl ReferenceMatch {
    pub fn matches(&self) -> bool {
        self.linear_vanish && self.linear_rank_matches && self.ideal.is_equivalent()
    }
}

fn parse(s: &str) -> Result<RatFunc> {
    s.parse()
}

/// Solves the symbolic Bianchi form of `class` and compares the result with
/// the reference relations and quadratic conditions.
pub fn compare_with_reference(class: BianchiClass, config: &SamplingConfig) -> Result<ReferenceMatch> {
    let reference = reference_for(class);
    let fam = solve_dual_family(&class.symbolic_form())?;
    let generic = fam.generic();
    let subs = component_substitution(&generic);

    let linear: Vec<RatFunc> = reference.linear.iter().map(|s| parse(s)).collect::<Result<_>>()?;
    let mut linear_vanish = true;
    for form in &linear {
        linear_vanish &= form.substitute(&subs)?.is_zero();
    }
    // Coefficient rows of the reference forms, by unit substitution.
    let rows = linear
        .iter()
        .map(|form| {
            (0..9)
                .map(|c| {
                    let unit = (0..9)
                        .map(|d| (component_name(d), RatFunc::from(i64::from(c == d))))
                        .collect();
                    form.substitute(&unit)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let rank = bareiss_rref(rows, 9)?.pivot_columns.len();
    let linear_rank_matches = rank == linear.len() && rank == 9 - fam.dim();

    let ours = dual_jacobi_ideal(&fam);
    let polys: Vec<MultiPoly> = match reference.quadratic {
        Some(gens) => gens
            .iter()
            .map(|s| Ok(parse(s)?.substitute(&subs)?.numer().clone()))
            .collect::<Result<_>>()?,
        None => na_decompose(&generic)?
            .n_times_a()
            .iter()
            .map(|x| x.numer().clone())
            .collect(),
    };
    let theirs = QuadraticIdeal::new(fam.parameter_names(), polys);
    let ideal = ideal_equivalent(&ours, &theirs, config)?;
    Ok(ReferenceMatch {
        class,
        nullspace_dim: fam.dim(),
        linear_vanish,
        linear_rank_matches,
        ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_classes_match_reference() {
        let cfg = SamplingConfig::default();
        for class in BianchiClass::ALL {
            let m = compare_with_reference(class, &cfg).unwrap();
            assert!(m.linear_vanish, "{} linear", class.name());
            assert!(m.linear_rank_matches, "{} rank", class.name());
            assert!(m.ideal.is_equivalent(), "{} ideal {:?}", class.name(), m.ideal);
        }
    }

    #[test]
    fn wrong_reference_is_detected() {
        // Dropping the product condition of VII0 must be caught.
        let fam = solve_dual_family(&BianchiClass::VII0.standard_form().unwrap()).unwrap();
        let ours = dual_jacobi_ideal(&fam);
        let empty = QuadraticIdeal::new(fam.parameter_names(), []);
        assert!(!ideal_equivalent(&ours, &empty, &SamplingConfig::default())
            .unwrap()
            .is_equivalent());
    }

    #[test]
    fn sign_slip_in_parametric_condition_is_detected() {
        let fam = solve_dual_family(&BianchiClass::VIIa.symbolic_form()).unwrap();
        let subs = component_substitution(&fam.generic());
        let slipped = "4*a*f23_1*f13_3+(a*f23_2)^2-2*a^2*f23_2*f13_1+f23_2^2-2*f23_2*f13_1+(a*f13_1)^2+f13_1^2";
        let poly = parse(slipped).unwrap().substitute(&subs).unwrap().numer().clone();
        let theirs = QuadraticIdeal::new(fam.parameter_names(), [poly]);
        let cmp = ideal_equivalent(&dual_jacobi_ideal(&fam), &theirs, &SamplingConfig::default()).unwrap();
        assert!(!cmp.is_equivalent());
    }
}
