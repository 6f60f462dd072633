mod common;

use manin::catalog::{entries, entry};
use manin::exact::Rational;
use manin::liealg::{change_basis, Matrix3};
use manin::manin::{search_witness, verify_witness};
use proptest::prelude::*;

fn invertible() -> impl Strategy<Value = Matrix3> {
    prop::array::uniform9(-2i64..=2)
        .prop_map(|v| Matrix3::from_fn(|r, c| Rational::from(v[r * 3 + c])))
        .prop_filter("invertible", |m| !m.det().is_zero())
}

fn entry_index() -> impl Strategy<Value = usize> {
    0..entries().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transforms_compose(i in entry_index(), a in invertible(), b in invertible()) {
        let e = &entries()[i];
        let t = e.instantiate(&manin::catalog::default_samples(e)[0]).unwrap();
        let stepwise = t.transform(&a).unwrap().transform(&b).unwrap();
        prop_assert_eq!(stepwise, t.transform(&a.mul(&b)).unwrap());
        prop_assert_eq!(t.transform(&Matrix3::identity()).unwrap(), t.clone());
        // Transformed triples stay valid and classify as before.
        let moved = t.transform(&a).unwrap();
        prop_assert!(moved.validate().is_ok());
        prop_assert_eq!(
            manin::liealg::classify_bianchi(moved.f()).unwrap(),
            manin::liealg::classify_bianchi(t.f()).unwrap()
        );
    }

    #[test]
    fn change_basis_inverts(a in invertible()) {
        let mut rng = common::rng();
        let f = common::antisymmetric(&mut rng, -3, 3);
        let back = change_basis(&change_basis(&f, &a).unwrap(), &a.inverse().unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn duality_commutes_with_transforms(i in entry_index(), a in invertible()) {
        let e = &entries()[i];
        let t = e.instantiate(&manin::catalog::default_samples(e)[0]).unwrap();
        prop_assert_eq!(t.dual().dual(), t.clone());
        // Swapping the subalgebras turns A into the inverse transpose.
        let inv_t = a.inverse().unwrap().transpose();
        prop_assert_eq!(t.transform(&a).unwrap().dual(), t.dual().transform(&inv_t).unwrap());
    }
}

#[test]
fn witnesses_verify_and_recover_known_transforms() {
    let t = entry("VIII.b.i")
        .unwrap()
        .instantiate(&[("b".to_string(), Rational::from(1))].into())
        .unwrap();
    let a = Matrix3::from_i64([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]);
    let moved = t.transform(&a).unwrap();
    assert!(verify_witness(&t, &moved, &a).unwrap());
    let found = search_witness(&t, &moved, 2).expect("a witness within bound 2 exists");
    assert!(verify_witness(&t, &moved, &found).unwrap());
    assert!(!verify_witness(&t, &moved, &Matrix3::identity()).unwrap());
}

#[test]
fn dual_links_are_involutive() {
    let list = entries();
    for e in &list {
        let Some(d) = &e.dual_of else { continue };
        let back = list.iter().find(|x| &x.id == d).and_then(|x| x.dual_of.clone());
        assert_eq!(back.as_deref(), Some(e.id.as_str()), "{}", e.id);
        assert_eq!(e.self_dual, d == &e.id, "{}", e.id);
    }
}
