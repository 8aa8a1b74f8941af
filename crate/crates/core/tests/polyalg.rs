use std::collections::HashMap;

use eqcoh::polyalg::{hilbert_series_monomial_quotient, HilbertSeries, RingContext, Role, Variable};
use eqcoh::{q, qq, Error, Poly};
use proptest::prelude::*;

fn ctx(spec: &[(&str, u32)]) -> eqcoh::polyalg::Ctx {
    RingContext::with_weights(spec).unwrap()
}

fn p(c: &eqcoh::polyalg::Ctx, s: &str) -> Poly {
    Poly::parse(c, s).unwrap()
}

#[test]
fn difference_of_squares() {
    let c = ctx(&[("v", 2), ("x", 2)]);
    assert_eq!(&p(&c, "x + v") * &p(&c, "x - v"), p(&c, "x^2 - v^2"));
    assert_eq!(&p(&c, "x + v") + &Poly::zero(&c), p(&c, "x + v"));
}

#[test]
fn product_checked_by_evaluation() {
    let c = ctx(&[("v", 2), ("x", 2)]);
    let prod = &p(&c, "x + 2*v") * &p(&c, "x + 4*v");
    assert_eq!(prod, p(&c, "x^2 + 6*v*x + 8*v^2"));
    let at: HashMap<String, _> = [("x".to_string(), q(1)), ("v".to_string(), q(1))].into();
    assert_eq!(prod.evaluate(&at).unwrap(), q(15));
}

#[test]
fn context_mismatch_is_an_error() {
    let a = ctx(&[("x", 2)]);
    let b = ctx(&[("y", 2)]);
    assert_eq!(Poly::var(&a, "x").unwrap().try_add(&Poly::var(&b, "y").unwrap()), Err(Error::ContextMismatch));
}

#[test]
fn weighted_degrees() {
    let c = ctx(&[("x1", 2), ("x2", 4)]);
    assert_eq!(p(&c, "x1").weighted_degree(), Ok(2));
    assert_eq!(p(&c, "x2 - x1^2").weighted_degree(), Ok(4));
    assert_eq!(Poly::zero(&c).weighted_degree(), Err(Error::ZeroPolynomial));
    let d = ctx(&[("x", 2), ("v", 2)]);
    assert!(matches!(p(&d, "x + v^2").weighted_degree(), Err(Error::Inhomogeneous(_))));
}

#[test]
fn odd_and_duplicate_weights_are_rejected() {
    assert!(matches!(RingContext::with_weights(&[("x", 3)]), Err(Error::BadWeight { .. })));
    assert!(matches!(RingContext::with_weights(&[("x", 2), ("x", 2)]), Err(Error::DuplicateVariable(_))));
}

#[test]
fn substitution() {
    let c = ctx(&[("v", 2), ("x", 2)]);
    let one: HashMap<String, Poly> = [("v".to_string(), Poly::one(&c))].into();
    assert_eq!(p(&c, "x*(x + 2*v)").substitute(&one).unwrap(), p(&c, "x^2 + 2*x"));
    assert_eq!(p(&c, "x + v").substitute(&HashMap::new()).unwrap(), p(&c, "x + v"));

    let d = ctx(&[("v1", 2), ("v2", 2), ("x1", 2), ("x2", 4), ("x3", 6)]);
    let b: HashMap<String, Poly> = [("x2".to_string(), p(&d, "x1*(x1 - v1)"))].into();
    assert_eq!(p(&d, "x3 - x2*(x1 - v2)").substitute(&b).unwrap(), p(&d, "x3 - x1*(x1 - v1)*(x1 - v2)"));
}

#[test]
fn evaluation_needs_every_variable() {
    let c = ctx(&[("v", 2), ("x", 2)]);
    let at: HashMap<String, _> = [("x".to_string(), q(1))].into();
    assert!(matches!(p(&c, "x*v").evaluate(&at), Err(Error::UnboundVariable(_))));
}

#[test]
fn canonical_text() {
    let c = RingContext::new(vec![
        Variable::new("c2", 4, Role::InvariantParam),
        Variable::new("c3", 6, Role::InvariantParam),
        Variable::new("x1", 2, Role::Cell),
    ])
    .unwrap();
    let r = p(&c, "-c3 + x1^3 - 2 * c2 * x1");
    assert_eq!(r.to_string(), "x1^3 - 2*c2*x1 - c3");
    assert_eq!(p(&c, "1/2*x1 - 3/4").to_string(), "1/2*x1 - 3/4");
    assert_eq!(p(&c, "x1^2 − 2·c2").to_string(), "x1^2 - 2*c2");
    assert_eq!(Poly::zero(&c).to_string(), "0");
}

#[test]
fn parse_errors_carry_positions() {
    let c = ctx(&[("x", 2)]);
    assert!(matches!(Poly::parse(&c, "x + y"), Err(Error::Parse { pos: 4, .. })));
    assert!(matches!(Poly::parse(&c, "x + "), Err(Error::Parse { .. })));
    assert!(matches!(Poly::parse(&c, "(x"), Err(Error::Parse { .. })));
}

/// Counts monomials by degree that avoid every generator, by enumeration.
fn brute_hilbert(gens: &[Vec<u32>], weights: &[u32], upto: usize) -> Vec<i64> {
    let mut out = vec![0i64; upto + 1];
    fn rec(i: usize, deg: usize, m: &mut Vec<u32>, gens: &[Vec<u32>], w: &[u32], upto: usize, out: &mut [i64]) {
        if i == w.len() {
            if !gens.iter().any(|g| g.iter().zip(m.iter()).all(|(a, b)| a <= b)) {
                out[deg] += 1;
            }
            return;
        }
        let mut e = 0;
        while deg + e * w[i] as usize <= upto {
            m.push(e as u32);
            rec(i + 1, deg + e * w[i] as usize, m, gens, w, upto, out);
            m.pop();
            e += 1;
        }
    }
    rec(0, 0, &mut Vec::new(), gens, weights, upto, &mut out);
    out
}

#[test]
fn hilbert_series_examples() {
    let hs = hilbert_series_monomial_quotient(&[vec![0, 2]], &[2, 2]);
    assert_eq!(hs, HilbertSeries::new(vec![1, 0, 1], vec![2]));
    assert_eq!(hs.expand(20), brute_hilbert(&[vec![0, 2]], &[2, 2], 20));
    assert_eq!(hs.over(&[2]).unwrap().to_string(), "(1 + t^2)/(1 - t^2)");
    assert!(hilbert_series_monomial_quotient(&[vec![0]], &[2]).is_zero());
    assert_eq!(hilbert_series_monomial_quotient(&[], &[2]), HilbertSeries::new(vec![1], vec![2]));
}

#[test]
fn non_minimal_generators_are_minimalized() {
    let gens = vec![vec![1, 1], vec![2, 1], vec![1, 3], vec![0, 4]];
    let hs = hilbert_series_monomial_quotient(&gens, &[2, 4]);
    assert_eq!(hs.expand(24), brute_hilbert(&gens, &[2, 4], 24));
}

fn small_poly(c: eqcoh::polyalg::Ctx) -> impl Strategy<Value = Poly> {
    let n = c.len();
    prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..=5, 1i64..=3), 0..5)
        .prop_map(move |terms| Poly::from_terms(&c, terms.into_iter().map(|(m, a, b)| (m, qq(a, b)))))
}

fn homogeneous(c: eqcoh::polyalg::Ctx, deg: u32) -> impl Strategy<Value = Poly> {
    // Variables of weight 2: degree-`deg` monomials in three variables.
    prop::collection::vec((0..=deg, 0..=deg, -4i64..=4), 1..4).prop_map(move |terms| {
        let t = terms.into_iter().filter(|(a, b, _)| a + b <= deg).map(|(a, b, k)| (vec![a, b, deg - a - b], q(k)));
        Poly::from_terms(&c, t)
    })
}

proptest! {
    #[test]
    fn distributivity(
        (a, b, r) in {
            let c = ctx(&[("v", 2), ("x", 2), ("y", 4)]);
            (small_poly(c.clone()), small_poly(c.clone()), small_poly(c))
        }
    ) {
        prop_assert_eq!(&(&a + &b) * &r, &(&a * &r) + &(&b * &r));
    }

    #[test]
    fn degree_is_additive(
        (a, b) in {
            let c = ctx(&[("v", 2), ("x", 2), ("y", 2)]);
            (homogeneous(c.clone(), 2), homogeneous(c, 3))
        }
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).weighted_degree().unwrap(), 10);
    }

    #[test]
    fn hilbert_series_matches_enumeration(
        (weights, gens) in (1usize..=6).prop_flat_map(|n| (
            prop::collection::vec(prop::sample::select(vec![2u32, 4, 6]), n),
            prop::collection::vec(prop::collection::vec(0u32..4, n), 0..5),
        ))
    ) {
        let hs = hilbert_series_monomial_quotient(&gens, &weights);
        prop_assert_eq!(hs.expand(24), brute_hilbert(&gens, &weights, 24));
    }

    #[test]
    fn text_round_trips(a in small_poly(ctx(&[("v", 2), ("x", 2), ("y", 4)]))) {
        let back = Poly::parse(a.ctx(), &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }
}
