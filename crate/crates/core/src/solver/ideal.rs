use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::family::DualFamily;
use crate::exact::{Assignment, MultiPoly, RatFunc, Rational, Scalar};
use crate::manin::dual_jacobi_residual;

/// Name of the symbolic Bianchi parameter.
pub const PARAM_A: &str = "a";

/// Polynomial conditions on the free parameters of a family (coefficients
/// may involve the Bianchi parameter `a`). The family member is a Lie
/// algebra exactly where all generators vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticIdeal {
    pub vars: Vec<String>,
    pub generators: Vec<MultiPoly>,
}

impl QuadraticIdeal {
    /// Normalizes and deduplicates the given polynomials: the Q[a]-content
    /// is removed and the result made monic, so scalar multiples collapse.
    pub fn new(vars: Vec<String>, polys: impl IntoIterator<Item = MultiPoly>) -> Self {
        let mut seen = BTreeSet::new();
        let mut generators = Vec::new();
        for p in polys {
            if p.is_zero() {
                continue;
            }
            let g = p.primitive_part_in(PARAM_A);
            if seen.insert(format!("{g}")) {
                generators.push(g);
            }
        }
        generators.sort_by_key(|g| format!("{g}"));
        QuadraticIdeal { vars, generators }
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn involves_a(&self) -> bool {
        self.generators.iter().any(|g| g.degree_in(PARAM_A) > 0)
    }

    /// Whether every generator vanishes at `point`, which must assign all
    /// variables (and `a` when it occurs).
    pub fn vanishes_at(&self, point: &Assignment) -> crate::Result<bool> {
        for g in &self.generators {
            if !g.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

/// Dual Jacobi identities of the generic family member, as polynomials in
/// the free parameters `t1..tk`.
pub fn dual_jacobi_ideal<S: Scalar>(fam: &DualFamily<S>) -> QuadraticIdeal {
    let residual = dual_jacobi_residual(&fam.generic());
    QuadraticIdeal::new(
        fam.parameter_names(),
        residual.values().iter().map(|r: &RatFunc| r.numer().clone()),
    )
}

/// Reproducible sampling setup for [`ideal_equivalent`].
#[derive(Clone, Debug)]
pub struct SamplingConfig {
    pub samples: usize,
    pub seed: u64,
    /// Values of `a` cycled through when an ideal involves it.
    pub a_values: Vec<Rational>,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            samples: 200,
            seed: 0x6d61_6e69_6e33,
            a_values: vec![
                Rational::from(2),
                Rational::from(3),
                Rational::from(5),
                Rational::frac(1, 2),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IdealComparison {
    Equivalent {
        points: usize,
    },
    /// A point where exactly one of the two ideals vanishes.
    Counterexample(Assignment),
}

impl IdealComparison {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, IdealComparison::Equivalent { .. })
    }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    if rng.random_ratio(1, 3) {
        return Rational::zero();
    }
    Rational::frac(rng.random_range(-5..=5), rng.random_range(1..=3))
}

/// Tries to build a point of `V(gens)` by repeatedly taking a generator,
/// giving random values to all but one of its variables and solving for
/// the last one (preferring a variable of degree one).
fn point_on(gens: &[MultiPoly], vars: &[String], base: &Assignment, rng: &mut ChaCha8Rng) -> Option<Assignment> {
    'attempt: for _ in 0..20 {
        let mut point = base.clone();
        loop {
            let mut pending = Vec::new();
            for g in gens {
                let p = g.eval_partial(&point);
                if let Some(c) = p.as_constant() {
                    if !c.is_zero() {
                        continue 'attempt;
                    }
                } else {
                    pending.push(p);
                }
            }
            let Some(g) = pending.first() else {
                break;
            };
            let mut gvars: Vec<String> = vars.iter().filter(|v| g.degree_in(v) > 0).cloned().collect();
            gvars.shuffle(rng);
            let solve_for = gvars.iter().position(|v| g.degree_in(v) == 1).unwrap_or(0);
            let target = gvars.remove(solve_for);
            for v in gvars {
                point.insert(v, small_rational(rng));
            }
            let uni = g.eval_partial(&point);
            if uni.is_zero() {
                point.insert(target, small_rational(rng));
                continue;
            }
            let roots = uni.rational_roots(&target)?;
            if roots.is_empty() {
                continue 'attempt;
            }
            let r = roots[rng.random_range(0..roots.len())].clone();
            point.insert(target, r);
        }
        for v in vars {
            if !point.contains_key(v) {
                point.insert(v.clone(), small_rational(rng));
            }
        }
        return Some(point);
    }
    None
}

/// Compares vanishing sets by sampling: uniform small rational points plus
/// points constructed on each variety. Returns the first point where one
/// ideal vanishes and the other does not.
pub fn ideal_equivalent(
    i1: &QuadraticIdeal,
    i2: &QuadraticIdeal,
    config: &SamplingConfig,
) -> crate::Result<IdealComparison> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut vars: Vec<String> = i1.vars.iter().chain(&i2.vars).cloned().collect();
    vars.sort();
    vars.dedup();
    vars.retain(|v| v != PARAM_A);
    let with_a = i1.involves_a() || i2.involves_a();
    for n in 0..config.samples {
        let mut base = Assignment::new();
        if with_a {
            base.insert(PARAM_A.to_string(), config.a_values[n % config.a_values.len()].clone());
        }
        let target = match n % 3 {
            1 => Some(&i1.generators),
            2 => Some(&i2.generators),
            _ => None,
        };
        let constructed = target.and_then(|gens| point_on(gens, &vars, &base, &mut rng));
        let point = match constructed {
            Some(p) => p,
            None => {
                let mut p = base;
                for v in &vars {
                    p.insert(v.clone(), small_rational(&mut rng));
                }
                p
            }
        };
        if i1.vanishes_at(&point)? != i2.vanishes_at(&point)? {
            return Ok(IdealComparison::Counterexample(point));
        }
    }
    Ok(IdealComparison::Equivalent { points: config.samples })
}
