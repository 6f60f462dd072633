use std::fmt;

use super::entries::{CatalogEntry, TypeClaim};
use crate::error::{Error, Result};
use crate::exact::{Assignment, RatFunc, Rational, Scalar};
use crate::liealg::{check_jacobi, classify_bianchi, BianchiClass, BianchiType, StructureConstants};
use crate::manin::{format_assignment, mixed_jacobi_residual, DoubleAlgebra, ManinTriple, Relation};

/// Default sample values: `a ∈ {2, 3}`, `b ∈ {1, 2}` and additionally
/// `b = -1` when negative `b` is admissible.
pub fn default_samples(e: &CatalogEntry) -> Vec<Assignment> {
    let params = e.parameters();
    let mut samples = vec![Assignment::new()];
    if params.iter().any(|p| p == "a") {
        samples = expand(samples, "a", &[2, 3]);
    }
    if params.iter().any(|p| p == "b") {
        let positive_only = e
            .param_constraints()
            .iter()
            .any(|c| c.rel == Relation::Positive && c.poly == RatFunc::var("b"));
        let bs: &[i64] = if positive_only { &[1, 2] } else { &[1, 2, -1] };
        samples = expand(samples, "b", bs);
    }
    samples
}

fn expand(samples: Vec<Assignment>, name: &str, values: &[i64]) -> Vec<Assignment> {
    samples
        .into_iter()
        .flat_map(|s| {
            values.iter().map(move |&v| {
                let mut s = s.clone();
                s.insert(name.to_string(), Rational::from(v));
                s
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub values: Assignment,
    /// Each failed check, naming the identity or claim and the values.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct EntryReport {
    pub id: String,
    pub samples: Vec<SampleReport>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(|s| s.failures.is_empty())
    }

    pub fn failures(&self) -> impl Iterator<Item = String> + '_ {
        self.samples.iter().flat_map(move |s| {
            s.failures
                .iter()
                .map(move |f| format!("{} at {}: {f}", self.id, format_assignment(&s.values)))
        })
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: ok ({} samples)", self.id, self.samples.len());
        }
        let lines: Vec<String> = self.failures().collect();
        write!(f, "{}", lines.join("\n"))
    }
}

fn antisymmetry_failure(name: &str, t: &StructureConstants<Rational>) -> Option<String> {
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if t.get(i, j, k) != &-t.get(j, i, k).clone() {
                    return Some(format!("{name} not antisymmetric at ({},{},{})", i + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

fn type_failure(
    what: &str,
    t: &StructureConstants<Rational>,
    claim: &TypeClaim,
    values: &Assignment,
) -> Option<String> {
    let expected = match claim.at(values) {
        Ok(x) => x,
        Err(err) => return Some(format!("{what} claim cannot be evaluated: {err}")),
    };
    match classify_bianchi(t) {
        Ok(found) if found == expected => None,
        Ok(found) => Some(format!("{what} classifies as {found}, claimed {expected}")),
        Err(err) => Some(format!("{what} cannot be classified: {err}")),
    }
}

/// Every check on one numeric sample; an empty list means it passed.
pub fn check_sample(e: &CatalogEntry, values: &Assignment) -> Vec<String> {
    let mut failures = Vec::new();
    for c in e.param_constraints() {
        if let Err(err) = c.check(values) {
            failures.push(err.to_string());
        }
    }
    if !failures.is_empty() {
        return failures;
    }
    let (f, fd) = match (e.triple.f().eval(values), e.triple.f_dual().eval(values)) {
        (Ok(f), Ok(fd)) => (f, fd),
        (Err(err), _) | (_, Err(err)) => return vec![format!("cannot evaluate: {err}")],
    };
    failures.extend(antisymmetry_failure("g", &f));
    failures.extend(antisymmetry_failure("g~", &fd));
    if let Some((idx, r)) = check_jacobi(&f) {
        failures.push(format!("Jacobi identity in g fails at {:?}: {r}", idx.map(|x| x + 1)));
    }
    if let Some((idx, r)) = check_jacobi(&fd) {
        failures.push(format!("Jacobi identity in g~ fails at {:?}: {r}", idx.map(|x| x + 1)));
    }
    if let Some((idx, r)) = mixed_jacobi_residual(&f, &fd).first_nonzero() {
        let idx: Vec<usize> = idx.iter().map(|x| x + 1).collect();
        failures.push(format!("mixed Jacobi identity fails at (j,k,m,i)={idx:?}: {r}"));
    }
    failures.extend(type_failure("g", &f, &e.g_type, values));
    failures.extend(type_failure("g~", &fd, &e.g_dual_type, values));
    let double = DoubleAlgebra::assemble(&ManinTriple::unchecked(f, fd, vec![]));
    if !double.is_lie_algebra() {
        failures.push("double is not a Lie algebra".to_string());
    }
    if let Some((idx, r)) = double.pairing_ad_invariance_residual().first_nonzero() {
        failures.push(format!(
            "pairing not ad-invariant at {:?}: {r}",
            idx.iter().map(|x| x + 1).collect::<Vec<_>>()
        ));
    }
    failures
}

pub fn verify_entry(e: &CatalogEntry, samples: &[Assignment]) -> EntryReport {
    EntryReport {
        id: e.id.clone(),
        samples: samples
            .iter()
            .map(|v| SampleReport {
                values: v.clone(),
                failures: check_sample(e, v),
            })
            .collect(),
    }
}

/// Verifies every entry at its default samples, spread over the available
/// cores. Reports come back in list order.
pub fn verify_catalog(list: &[CatalogEntry]) -> Vec<EntryReport> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = list.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = list
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|e| verify_entry(e, &default_samples(e)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification thread"))
            .collect()
    })
}

/// Bianchi type with its parameter invariant kept symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeInvariant {
    pub class: BianchiClass,
    pub a_squared: Option<RatFunc>,
}

impl fmt::Display for TypeInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.a_squared {
            Some(p) => write!(f, "{}(a^2={p})", self.class.name()),
            None => write!(f, "{}", self.class.name()),
        }
    }
}

/// Types of both subalgebras. Different fingerprints prove two entries
/// inequivalent; equal ones prove nothing.
#[derive(Clone, Debug, PartialEq)]
pub struct Fingerprint {
    pub g: TypeInvariant,
    pub g_dual: TypeInvariant,
    /// Both subalgebras are of the same class, so the dual triple has the
    /// same fingerprint up to the value of `a`.
    pub dual_pair: bool,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.g_dual)
    }
}

/// Classifies both subalgebras at `values`.
pub fn fingerprint_at(e: &CatalogEntry, values: &Assignment) -> Result<(BianchiType, BianchiType)> {
    let t = e.instantiate(values)?;
    Ok((classify_bianchi(t.f())?, classify_bianchi(t.f_dual())?))
}

/// Fingerprint from classifying every default sample; the symbolic
/// parameter invariant is taken from the claim once every sample agrees
/// with it.
pub fn fingerprint(e: &CatalogEntry) -> Result<Fingerprint> {
    for values in default_samples(e) {
        let (g, gd) = fingerprint_at(e, &values)?;
        let (cg, cgd) = (e.g_type.at(&values)?, e.g_dual_type.at(&values)?);
        if g != cg || gd != cgd {
            return Err(Error::ClaimMismatch {
                id: e.id.clone(),
                detail: format!(
                    "found ({g}, {gd}), claimed ({cg}, {cgd}) at {}",
                    format_assignment(&values)
                ),
            });
        }
    }
    let inv = |c: &TypeClaim| TypeInvariant {
        class: c.class,
        a_squared: c.a_squared(),
    };
    Ok(Fingerprint {
        g: inv(&e.g_type),
        g_dual: inv(&e.g_dual_type),
        dual_pair: e.g_type.class == e.g_dual_type.class,
    })
}

/// Killing form `K_ij = f_ik^l f_jl^k`.
pub fn killing_form<S: Scalar>(f: &StructureConstants<S>) -> [[S; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = S::zero();
            for k in 0..3 {
                for l in 0..3 {
                    acc = acc.add_ref(&f.get(i, k, l).mul_ref(f.get(j, l, k)));
                }
            }
            acc
        })
    })
}

fn trace_vector(f: &StructureConstants<Rational>) -> [Rational; 3] {
    std::array::from_fn(|i| -(0..3).map(|j| f.get(i, j, j).clone()).sum::<Rational>() / Rational::from(2))
}

/// Signs of `K(ã, ã)` and `K~(a, a)`: the trace vector of each subalgebra
/// is a vector of the other one, paired with its Killing form. Both are
/// unchanged by the transformations relating equivalent triples, and by
/// positive rescaling of either algebra.
pub fn killing_signs(t: &ManinTriple<Rational>) -> (i32, i32) {
    let sign = |f: &StructureConstants<Rational>, v: [Rational; 3]| {
        let k = killing_form(f);
        let mut s = Rational::zero();
        for i in 0..3 {
            for j in 0..3 {
                s += &(&k[i][j] * &v[i] * &v[j]);
            }
        }
        s.signum()
    };
    (
        sign(t.f(), trace_vector(t.f_dual())),
        sign(t.f_dual(), trace_vector(t.f())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entries::{entries, entry};

    #[test]
    fn every_entry_passes_at_default_samples() {
        let list = entries();
        let reports = verify_catalog(&list);
        assert_eq!(reports.len(), list.len());
        for (e, report) in list.iter().zip(&reports) {
            assert_eq!(e.id, report.id);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn sign_flip_is_reported() {
        // [X~1,X~2] = +b X~2 instead of -b X~2.
        let mut e = entry("IX.b").unwrap();
        let b = RatFunc::var("b");
        let z = RatFunc::zero();
        let flipped = StructureConstants::from_cyclic([
            [z.clone(), b.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), b],
        ]);
        e.triple = ManinTriple::unchecked(e.triple.f().clone(), flipped, e.param_constraints().to_vec());
        let report = verify_entry(&e, &default_samples(&e));
        assert!(!report.passed());
        assert!(report.failures().any(|f| f.contains("mixed Jacobi")), "{report}");
    }

    #[test]
    fn fingerprints() {
        let fp = fingerprint(&entry("IX.a").unwrap()).unwrap();
        assert_eq!(fp.to_string(), "(IX, I)");
        let i = fingerprint(&entry("VIII.b.i").unwrap()).unwrap();
        let ii = fingerprint(&entry("VIII.b.ii").unwrap()).unwrap();
        assert_eq!(i, ii);
        let e = entry("VI_a.c.i").unwrap();
        let at = fingerprint_at(
            &e,
            &Assignment::from([("a".into(), Rational::from(2)), ("b".into(), Rational::one())]),
        );
        let (g, gd) = at.unwrap();
        assert_eq!(g, BianchiType::with_a_squared(BianchiClass::VIa, Rational::from(4)));
        assert_eq!(gd, BianchiType::with_a_squared(BianchiClass::VIa, Rational::frac(1, 4)));
    }

    #[test]
    fn killing_signs_separate_viii_duals() {
        let b1 = Assignment::from([("b".into(), Rational::one())]);
        let s = |id: &str, v: &Assignment| killing_signs(&entry(id).unwrap().instantiate(v).unwrap()).0;
        assert_eq!(s("VIII.b.i", &b1), 1);
        assert_eq!(s("VIII.b.ii", &b1), -1);
        assert_eq!(s("VIII.b.iii", &Assignment::new()), 0);
    }
}
