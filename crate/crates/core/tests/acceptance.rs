//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line with
//! its runtime; the test fails if any criterion fails or exceeds its budget.

mod common;

use std::time::{Duration, Instant};

use manin::catalog::{
    broken_dual_links, count_classes, entries, entries_for, entry, fixed_points, killing_signs, verify_catalog,
    SELF_DUAL,
};
use manin::exact::{Assignment, Rational};
use manin::liealg::{
    change_basis, check_jacobi, classify_bianchi, na_decompose, BianchiClass, NADecomposition, StructureConstants,
};
use manin::manin::{co_jacobi_index, cocycle_index, search_witness, Cobracket, ManinTriple};
use manin::solver::{
    check_printed_solutions, compare_with_reference, dual_from_rows, dual_jacobi_ideal, solve_dual_family,
    SamplingConfig, PRINTED_SOLUTIONS,
};

/// Search bound for the worked-example witnesses.
const WITNESS_BOUND: u32 = 2;
const CONJUGATIONS_PER_FORM: usize = 100;
const RANDOM_TENSORS: usize = 1000;
const RANDOM_PAIRS: usize = 100;

type Outcome = Result<String, String>;
/// Name, check and runtime budget.
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn nullspace_dimensions() -> Outcome {
    use BianchiClass::*;
    let expected = [
        (I, 9),
        (II, 6),
        (III, 4),
        (IV, 4),
        (V, 6),
        (VI0, 4),
        (VIa, 4),
        (VII0, 4),
        (VIIa, 4),
        (VIII, 3),
        (IX, 3),
    ];
    for (class, dim) in expected {
        let symbolic = solve_dual_family(&class.symbolic_form()).map_err(|e| e.to_string())?;
        ensure(symbolic.dim() == dim, || {
            format!("{class}: dimension {} instead of {dim}", symbolic.dim())
        })?;
        if class.is_parametric() {
            for a in [q(2), q(3), q(5), Rational::frac(1, 2)] {
                let fam = solve_dual_family(&class.form_at(a.clone())).map_err(|e| e.to_string())?;
                ensure(fam.dim() == dim, || {
                    format!("{class} at a={a}: dimension {}", fam.dim())
                })?;
            }
        }
    }
    Ok("I:9 II:6 III:4 IV:4 V:6 VI0:4 VIa:4 VII0:4 VIIa:4 VIII:3 IX:3".into())
}

fn quadratic_conditions() -> Outcome {
    let config = SamplingConfig::default();
    for class in BianchiClass::ALL {
        let m = compare_with_reference(class, &config).map_err(|e| e.to_string())?;
        ensure(m.matches(), || format!("{class}: {m:?}"))?;
    }
    let generators = |class: BianchiClass| {
        let fam = solve_dual_family(&class.symbolic_form()).expect("solvable");
        dual_jacobi_ideal(&fam).generator_strings()
    };
    for class in [BianchiClass::IX, BianchiClass::VIII, BianchiClass::V] {
        let g = generators(class);
        ensure(g.is_empty(), || format!("{class}: expected no conditions, found {g:?}"))?;
    }
    let vii0 = generators(BianchiClass::VII0);
    ensure(vii0.len() == 1, || format!("VII0: {vii0:?}"))?;
    let iv = generators(BianchiClass::IV);
    ensure(iv.len() == 1 && iv[0].ends_with("^2") && !iv[0].contains('*'), || {
        format!("IV: {iv:?}")
    })?;
    Ok(format!(
        "all 11 ideals sampling-equivalent ({} samples, seed {:#x}); VII0: {} = 0, IV: {} = 0",
        config.samples, config.seed, vii0[0], iv[0]
    ))
}

fn catalog_verification() -> Outcome {
    let list = entries();
    let reports = verify_catalog(&list);
    let failures: Vec<String> = reports.iter().flat_map(|r| r.failures()).collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let checks = check_printed_solutions().map_err(|e| e.to_string())?;
    ensure(checks.len() == PRINTED_SOLUTIONS.len(), || {
        "printed solutions missing".into()
    })?;
    let mut flagged = Vec::new();
    for c in &checks {
        ensure(c.resolved(), || format!("{} fails even after correction", c.label))?;
        if let Some((_, what)) = c.corrected {
            println!("    flagged: {} fails as printed; passes with {what}", c.label);
            flagged.push(c.label);
        }
    }
    Ok(format!(
        "{} entries pass; corrected printed forms: {}",
        reports.len(),
        flagged.join(", ")
    ))
}

fn counts() -> Outcome {
    let list = entries();
    let c = count_classes(&list);
    ensure((c.total, c.up_to_duality, c.self_dual) == (78, 44, 10), || {
        format!("{c:?}")
    })?;
    let broken = broken_dual_links(&list);
    ensure(broken.is_empty(), || format!("broken dual links: {broken:?}"))?;
    let mut found = fixed_points(&list).map_err(|e| e.to_string())?;
    found.sort();
    let mut expected: Vec<String> = SELF_DUAL.iter().map(|s| s.to_string()).collect();
    expected.sort();
    ensure(found == expected, || {
        format!("fixed points {found:?}, flagged {expected:?}")
    })?;
    Ok(format!("78 / 44 / 10; self-dual: {}", found.join(", ")))
}

fn worked_example() -> Outcome {
    let sl2 = BianchiClass::VIII.standard_form().expect("fixed form");
    let fam = solve_dual_family(&sl2).map_err(|e| e.to_string())?;
    ensure(fam.dim() == 3, || format!("family dimension {}", fam.dim()))?;
    let general = &PRINTED_SOLUTIONS
        .iter()
        .find(|s| s.class == BianchiClass::VIII)
        .expect("VIII general form")
        .printed;
    let general = dual_from_rows(general).map_err(|e| e.to_string())?;
    let at = |alpha: i64, beta: i64, gamma: i64| -> Result<ManinTriple<Rational>, String> {
        let v = Assignment::from([
            ("alpha".into(), q(alpha)),
            ("beta".into(), q(beta)),
            ("gamma".into(), q(gamma)),
        ]);
        let fd = general.eval(&v).map_err(|e| e.to_string())?;
        ensure(fam.contains(&fd), || {
            format!("({alpha},{beta},{gamma}) not in the solved family")
        })?;
        ManinTriple::new(sl2.clone(), fd, vec![]).map_err(|e| e.to_string())
    };
    let zero = at(0, 0, 0)?;
    let ty = classify_bianchi(zero.f_dual()).map_err(|e| e.to_string())?;
    ensure(ty.class == BianchiClass::I, || format!("(0,0,0) gives {ty}"))?;

    let b1 = Assignment::from([("b".into(), q(1))]);
    let cases = [
        ((1, 0, 0), "VIII.b.i", b1.clone()),
        ((0, 0, 1), "VIII.b.ii", b1),
        ((1, 0, 1), "VIII.b.iii", Assignment::new()),
    ];
    let mut lines = Vec::new();
    for ((alpha, beta, gamma), id, values) in cases {
        let t = at(alpha, beta, gamma)?;
        let ty = classify_bianchi(t.f_dual()).map_err(|e| e.to_string())?;
        ensure(ty.class == BianchiClass::V, || {
            format!("({alpha},{beta},{gamma}) gives {ty}")
        })?;
        let target = entry(id)
            .expect("listed")
            .instantiate(&values)
            .map_err(|e| e.to_string())?;
        let w = search_witness(&t, &target, WITNESS_BOUND)
            .ok_or_else(|| format!("no witness from ({alpha},{beta},{gamma}) to {id} within bound {WITNESS_BOUND}"))?;
        lines.push(format!("({alpha},{beta},{gamma})->{id} via {:?}", w.0));
    }
    let list = entries();
    let nonabelian: Vec<_> = entries_for(&list, BianchiClass::VIII)
        .into_iter()
        .filter(|e| e.g_dual_type.class != BianchiClass::I)
        .collect();
    ensure(nonabelian.len() == 3, || {
        format!("{} non-abelian VIII classes", nonabelian.len())
    })?;
    let mut signs = Vec::new();
    for e in &nonabelian {
        let values = if e.parameters().is_empty() {
            Assignment::new()
        } else {
            Assignment::from([("b".into(), q(1))])
        };
        signs.push(killing_signs(&e.instantiate(&values).map_err(|err| err.to_string())?));
    }
    ensure(
        signs[0] != signs[1] && signs[1] != signs[2] && signs[0] != signs[2],
        || format!("signs {signs:?}"),
    )?;
    Ok(format!(
        "{}; 3 classes separated by Killing signs {signs:?}",
        lines.join("; ")
    ))
}

fn classifier_robustness() -> Outcome {
    let mut rng = common::rng();
    let mut forms: Vec<StructureConstants<Rational>> = Vec::new();
    for class in BianchiClass::ALL {
        match class.standard_form() {
            Some(f) => forms.push(f),
            None => forms.extend([q(2), Rational::frac(1, 3)].map(|a| class.form_at(a))),
        }
    }
    for f in &forms {
        let ty = classify_bianchi(f).map_err(|e| e.to_string())?;
        for _ in 0..CONJUGATIONS_PER_FORM {
            let a = common::invertible(&mut rng);
            let g = change_basis(f, &a).map_err(|e| e.to_string())?;
            let ty2 = classify_bianchi(&g).map_err(|e| e.to_string())?;
            ensure(ty == ty2, || format!("{ty} became {ty2} under {:?}", a.0))?;
        }
    }
    let mut lie = 0;
    for _ in 0..RANDOM_TENSORS {
        let f = common::antisymmetric(&mut rng, -2, 2);
        let na = na_decompose(&f).map_err(|e| e.to_string())?;
        ensure(na.recompose() == f, || "decomposition does not recompose".into())?;
        let jacobi = check_jacobi(&f).is_none();
        let orthogonal = na.n_times_a().iter().all(Rational::is_zero);
        ensure(jacobi == orthogonal, || {
            format!("Jacobi {jacobi} but n·a = 0 is {orthogonal}")
        })?;
        lie += usize::from(jacobi);
    }
    // Built from (n, a); every other one has n projected so that n·a = 0.
    for round in 0..RANDOM_TENSORS {
        let a_vec: [Rational; 3] = std::array::from_fn(|_| common::small(&mut rng, -2, 2));
        let s = common::antisymmetric(&mut rng, -2, 2);
        let mut n_mat: [[Rational; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i <= j {
                    s.get(i, j, 0).clone()
                } else {
                    s.get(j, i, 0).clone()
                }
            })
        });
        if round % 2 == 0 {
            // P n P with P = |a|² I − a aᵀ annihilates a and keeps n symmetric.
            let norm: Rational = a_vec.iter().map(|x| x * x).sum();
            let p: [[Rational; 3]; 3] = std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { norm.clone() } else { q(0) } - &a_vec[i] * &a_vec[j])
            });
            let mul = |x: &[[Rational; 3]; 3], y: &[[Rational; 3]; 3]| -> [[Rational; 3]; 3] {
                std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &x[i][k] * &y[k][j]).sum()))
            };
            n_mat = mul(&mul(&p, &n_mat), &p);
        }
        let na = NADecomposition { a_vec, n_mat };
        let f = na.recompose();
        let back = na_decompose(&f).map_err(|e| e.to_string())?;
        ensure(back == na, || format!("(n, a) round trip failed: {na:?}"))?;
        let orthogonal = na.n_times_a().iter().all(Rational::is_zero);
        ensure(check_jacobi(&f).is_none() == orthogonal, || {
            format!("Jacobi disagrees with n·a for {na:?}")
        })?;
        lie += usize::from(orthogonal);
    }
    Ok(format!(
        "{} forms x {CONJUGATIONS_PER_FORM} conjugations; {} tensors ({lie} Lie algebras)",
        forms.len(),
        2 * RANDOM_TENSORS
    ))
}

fn check_dictionaries(t: &ManinTriple<Rational>) -> Result<bool, String> {
    let c = Cobracket::of(t);
    let co = c.co_jacobi_residual();
    let cocycle = c.cocycle_residual(t.f());
    let e7 = t.dual_jacobi_residual();
    let e8 = t.mixed_jacobi_residual();
    for (idx, v) in e7.iter() {
        ensure(co.get(&co_jacobi_index(idx[0], idx[1], idx[2], idx[3])) == v, || {
            format!("co-Jacobi differs at {idx:?}")
        })?;
    }
    for (idx, v) in e8.iter() {
        ensure(cocycle.get(&cocycle_index(idx[0], idx[1], idx[2], idx[3])) == v, || {
            format!("cocycle differs at {idx:?}")
        })?;
    }
    Ok(e7.is_zero() && e8.is_zero())
}

fn bialgebra_equivalences() -> Outcome {
    let mut rng = common::rng();
    let list = entries();
    for _ in 0..RANDOM_PAIRS {
        let t = common::valid_pair(&mut rng, &list);
        ensure(check_dictionaries(&t)?, || "valid pair has nonzero residuals".into())?;
    }
    let mut invalid = 0;
    while invalid < RANDOM_PAIRS {
        let f = common::antisymmetric(&mut rng, -2, 2);
        let fd = common::antisymmetric(&mut rng, -2, 2);
        let t = ManinTriple::unchecked(f, fd, vec![]);
        if !check_dictionaries(&t)? {
            invalid += 1;
        }
    }
    Ok(format!(
        "{RANDOM_PAIRS} valid and {RANDOM_PAIRS} invalid pairs agree entrywise"
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("1 nullspace dimensions", nullspace_dimensions, Duration::from_secs(1)),
        ("2 quadratic conditions", quadratic_conditions, Duration::from_secs(5)),
        ("3 catalog verification", catalog_verification, Duration::from_secs(30)),
        ("4 class counts", counts, Duration::MAX),
        ("5 sl(2,R) worked example", worked_example, Duration::from_secs(60)),
        (
            "6 classifier robustness",
            classifier_robustness,
            Duration::from_secs(30),
        ),
        ("7 bialgebra equivalences", bialgebra_equivalences, Duration::MAX),
    ];
    let mut failed = Vec::new();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("took {elapsed:.2?}, budget {budget:?}; {detail}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                println!("FAIL {name} ({elapsed:.2?}): {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
