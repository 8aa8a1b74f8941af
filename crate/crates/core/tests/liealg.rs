use eqcoh::liealg::{
    centralizer_dimension, conjugates_to, embed, solve_kostant_conjugator, solve_unipotent_conjugator, weyl_orbit,
    KostantSection, LieElement, PrincipalTriple, TorusElement,
};
use eqcoh::matrix::Matrix;
use eqcoh::{q, qq, Error, QMatrix, Rational};
use proptest::prelude::*;

fn mat(rows: Vec<Vec<Rational>>) -> QMatrix {
    Matrix::from_rows(&q(0), rows).unwrap()
}

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| qq(n, d))
}

#[test]
fn brackets() {
    let t3 = PrincipalTriple::new(3);
    assert_eq!(t3.h.bracket(&t3.e).unwrap(), t3.e.scale(&q(2)));
    let t4 = PrincipalTriple::new(4);
    let ef = t4.e.bracket(&t4.f).unwrap();
    // ef - fe by hand: f has subdiagonal 3, 4, 3.
    assert_eq!(ef, LieElement::diagonal(&[q(3), q(1), q(-1), q(-3)]).unwrap());
    assert_eq!(t4.e.bracket(&t4.e).unwrap(), LieElement::zero(4));
    assert_eq!(t3.e.bracket(&t4.e), Err(Error::SizeMismatch { expected: 3, got: 4 }));
}

#[test]
fn elements_must_be_traceless() {
    assert!(LieElement::diagonal(&[q(1), q(1)]).is_err());
}

#[test]
fn regularity() {
    for n in 2..=6 {
        assert!(PrincipalTriple::new(n).e.is_regular());
    }
    assert!(!LieElement::zero(2).is_regular());
    assert!(LieElement::diagonal(&[q(1), q(-1)]).unwrap().is_regular());
    assert!(!LieElement::diagonal(&[q(1), q(1), q(-2)]).unwrap().is_regular());
    assert_eq!(centralizer_dimension(LieElement::zero(3).matrix()), 8);
}

#[test]
fn kostant_sections() {
    let s3 = KostantSection::new(3);
    let c2 = q(5);
    let c3 = q(7);
    let point = s3.point(&q(0), &[c2.clone(), c3.clone()]);
    assert_eq!(point, mat(vec![vec![q(0), q(1), q(0)], vec![c2.clone(), q(0), q(1)], vec![c3, c2, q(0)]]));
    assert_eq!(s3.params, vec![("c2".to_string(), 4), ("c3".to_string(), 6)]);
    let s2 = KostantSection::new(2);
    assert_eq!(s2.basis, vec![LieElement::elementary(2, 1, 0)]);
    for n in 2..=6 {
        let s = KostantSection::new(n);
        assert_eq!(s.rank(), n - 1);
        for b in &s.basis {
            assert_eq!(s.triple.f.bracket(b).unwrap(), LieElement::zero(n));
        }
    }
}

#[test]
fn kostant_grading() {
    for n in 2..=6 {
        let s = KostantSection::new(n);
        for (k, b) in s.basis.iter().enumerate() {
            let weight = b.weight_under(&s.triple.h).unwrap();
            assert_eq!(weight, q(-2 * (k as i64 + 1)));
            assert_eq!(q(s.params[k].1 as i64), q(2) - weight);
        }
    }
}

#[test]
fn unipotent_conjugators() {
    let w = TorusElement::from_ints(&[1, 2]).unwrap();
    let m = solve_unipotent_conjugator(&w).unwrap();
    assert_eq!(m, mat(vec![vec![q(1), q(1), qq(1, 2)], vec![q(0), q(1), q(1)], vec![q(0), q(0), q(1)]]));
    // diag(1, -1): the single equation m12 * (d2 - d1) = 1 gives -1/2.
    let w = TorusElement::from_diagonal(&[q(1), q(-1)]).unwrap();
    let m = solve_unipotent_conjugator(&w).unwrap();
    assert_eq!(m, mat(vec![vec![q(1), qq(-1, 2)], vec![q(0), q(1)]]));
    let e = PrincipalTriple::new(2).e.matrix().clone();
    assert!(conjugates_to(&m, &w.matrix(), &w.matrix().try_add(&e).unwrap()));
    let bad = TorusElement::from_ints(&[1, 1]).unwrap();
    assert_eq!(solve_unipotent_conjugator(&bad), Err(Error::NonRegular { root: "v2 - v1".into() }));
    let bad = TorusElement::from_ints(&[0, 3]).unwrap();
    assert_eq!(solve_unipotent_conjugator(&bad), Err(Error::NonRegular { root: "v1".into() }));
}

#[test]
fn kostant_conjugators() {
    let s2 = KostantSection::new(2);
    for a in [q(0), q(3), qq(-5, 2)] {
        let w = TorusElement::from_diagonal(&[a.clone(), -a.clone()]).unwrap();
        let k = solve_kostant_conjugator(&w, &s2).unwrap();
        assert_eq!(k.coords, vec![a.clone() * a.clone()]);
        if a == q(0) {
            assert_eq!(k.a, QMatrix::identity(2));
            assert_eq!(k.chi, s2.triple.e.matrix().clone());
        }
    }
    let s3 = KostantSection::new(3);
    let w = TorusElement::from_ints(&[3, -3]).unwrap();
    let chi = solve_kostant_conjugator(&w, &s3).unwrap().chi;
    let orbit = weyl_orbit(&w);
    assert_eq!(orbit.len(), 6);
    for w2 in orbit {
        assert_eq!(solve_kostant_conjugator(&w2, &s3).unwrap().chi, chi);
    }
    let w4 = TorusElement::from_ints(&[1, 2, 3]).unwrap();
    assert!(matches!(solve_kostant_conjugator(&w4, &s3), Err(Error::SizeMismatch { .. })));
}

#[test]
fn weyl_orbits() {
    let a = TorusElement::from_ints(&[4]).unwrap();
    let orbit = weyl_orbit(&a);
    assert_eq!(orbit, vec![a.clone(), TorusElement::from_ints(&[-4]).unwrap()]);
    assert_eq!(weyl_orbit(&TorusElement::from_ints(&[0, 0]).unwrap()).len(), 1);
    assert_eq!(weyl_orbit(&TorusElement::from_ints(&[1, 2]).unwrap()).len(), 6);
    assert_eq!(weyl_orbit(&TorusElement::from_ints(&[1, 1]).unwrap()).len(), 3);
}

#[test]
fn triples_satisfy_their_relations() {
    for n in 2..=8 {
        assert!(PrincipalTriple::new(n).relations_hold(), "n = {n}");
    }
}

fn distinct(d: &[Rational]) -> bool {
    d.iter().enumerate().all(|(i, x)| d[i + 1..].iter().all(|y| x != y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unipotent_conjugator_is_unique(coords in (1usize..=3).prop_flat_map(|r| proptest::collection::vec(rat(), r))) {
        let w = TorusElement::new(coords).unwrap();
        let d = w.diagonal();
        prop_assume!(distinct(&d));
        let n = w.n();
        let m = solve_unipotent_conjugator(&w).unwrap();
        let target = w.matrix().try_add(PrincipalTriple::new(n).e.matrix()).unwrap();
        prop_assert!(conjugates_to(&m, &w.matrix(), &target));
        for i in 0..n {
            prop_assert_eq!(m.get(i, i), &q(1));
            for j in 0..i {
                prop_assert_eq!(m.get(i, j), &q(0));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut moved = m.clone();
                moved.set(i, j, m.get(i, j).clone() + q(1));
                prop_assert!(!conjugates_to(&moved, &w.matrix(), &target));
            }
        }
    }

    #[test]
    fn kostant_conjugation_lands_in_the_slice(coords in (1usize..=3).prop_flat_map(|r| proptest::collection::vec(rat(), r))) {
        let w = TorusElement::new(coords).unwrap();
        let n = w.n();
        let s = KostantSection::new(n);
        let k = solve_kostant_conjugator(&w, &s).unwrap();
        let x = w.matrix().try_add(s.triple.e.matrix()).unwrap();
        prop_assert!(conjugates_to(&k.a, &x, &k.chi));
        prop_assert!(s.contains(&k.chi));
        for i in 0..n {
            prop_assert_eq!(k.a.get(i, i), &q(1));
            for j in i + 1..n {
                prop_assert_eq!(k.a.get(i, j), &q(0));
            }
        }
        for w2 in weyl_orbit(&w) {
            prop_assert_eq!(&solve_kostant_conjugator(&w2, &s).unwrap().chi, &k.chi);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn slice_points_are_regular(values in (2usize..=5).prop_flat_map(|n| proptest::collection::vec(rat(), n - 1))) {
        let s = KostantSection::new(values.len() + 1);
        let x = s.rational_point(&values);
        prop_assert!(x.is_regular());
        prop_assert_eq!(s.coordinates(&embed(&q(0), x.matrix())), Some(values));
    }
}
