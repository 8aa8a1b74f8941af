use eqcoh::charts::ChartDescriptor;
use eqcoh::golden::in_scope_pairs;
use eqcoh::groebner::{
    buchberger, eliminate, hilbert_series_ideal, ideals_equal, negate_vars, quotient_dimension,
    quotient_dimension_with, MonomialOrder, QuotientDimension,
};
use eqcoh::polyalg::{Ctx, HilbertSeries, RingContext, Role, Variable};
use eqcoh::zeroscheme::{rational_points, zero_scheme_ideal, MatrixFamily, ZeroSchemeIdeal};
use eqcoh::{q, qq, Error, Poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ctx(spec: &[(&str, u32)]) -> Ctx {
    RingContext::with_weights(spec).unwrap()
}

fn p(c: &Ctx, s: &str) -> Poly {
    Poly::parse(c, s).unwrap()
}

fn zs(variety: &str, family: &str) -> ZeroSchemeIdeal {
    let chart = ChartDescriptor::parse(variety).unwrap();
    let family: MatrixFamily = family.parse().unwrap();
    zero_scheme_ideal(&chart, &family).unwrap()
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let c = ctx(&[("x", 2)]);
    let gb = buchberger(&[p(&c, "x^2")], &MonomialOrder::lex(&c)).unwrap();
    assert_eq!(gb.generators(), &[p(&c, "x^2")]);
    assert!(gb.is_reduced());
}

#[test]
fn hand_computed_lex_basis() {
    // Lex with x2 > x1 > v. S(x2 - x1^2, -x1*x2) reduces to x1^3.
    let c = ctx(&[("v", 2), ("x1", 2), ("x2", 4)]);
    let order = MonomialOrder::lex_with(vec![2, 1, 0]);
    let gb = buchberger(&[p(&c, "x2 - x1^2"), p(&c, "-x1*x2")], &order).unwrap();
    assert_eq!(gb.generators(), &[p(&c, "x2 - x1^2"), p(&c, "x1^3")]);
}

#[test]
fn principal_ideal_is_made_monic() {
    let c = ctx(&[("v", 2), ("x", 2)]);
    let gb = buchberger(&[p(&c, "3*x*(x + 2*v)")], &MonomialOrder::lex_with(vec![1, 0])).unwrap();
    assert_eq!(gb.generators(), &[p(&c, "x^2 + 2*v*x")]);
    // Under degrevlex with v before x the leading monomial is v*x.
    let gb = buchberger(&[p(&c, "3*x*(x + 2*v)")], &MonomialOrder::weighted_degrevlex(&c)).unwrap();
    assert_eq!(gb.generators(), &[p(&c, "v*x + 1/2*x^2")]);
}

#[test]
fn normal_forms() {
    let c = ctx(&[("v", 2), ("x", 2)]);
    let gb = buchberger(&[p(&c, "x^2 + 2*v*x")], &MonomialOrder::lex_with(vec![1, 0])).unwrap();
    assert_eq!(gb.normal_form(&p(&c, "x^2")).unwrap(), p(&c, "-2*v*x"));
    assert!(gb.normal_form(&gb.generators()[0]).unwrap().is_zero());
    let other = ctx(&[("y", 2)]);
    assert_eq!(gb.normal_form(&p(&other, "y")), Err(Error::ContextMismatch));
}

#[test]
fn kostant_cubic_lies_in_the_eliminated_ideal() {
    let id = zs("pn:2", "kostant:sl3");
    let x2 = id.ctx.require("x2").unwrap();
    let elim = eliminate(&id.generators, &[x2]).unwrap();
    let gb = buchberger(&elim, &MonomialOrder::weighted_degrevlex(&id.ctx)).unwrap();
    assert!(gb.normal_form(&p(&id.ctx, "x1^3 - 2*c2*x1 - c3")).unwrap().is_zero());
}

#[test]
fn projective_plane_elimination() {
    let id = zs("pn:2", "borel:sl3");
    let x2 = id.ctx.require("x2").unwrap();
    let elim = eliminate(&id.generators, &[x2]).unwrap();
    assert!(ideals_equal(&elim, &[p(&id.ctx, "x1*(x1 - v1)*(x1 - v2)")]).unwrap());
}

#[test]
fn grassmannian_elimination_up_to_sign() {
    let id = zs("gr:2,4", "psl2-borel:4");
    let drop = [id.ctx.require("x2").unwrap(), id.ctx.require("y2").unwrap()];
    let elim = eliminate(&id.generators, &drop).unwrap();
    let v = [id.ctx.require("v").unwrap()];
    let flipped: Vec<Poly> = elim.iter().map(|g| negate_vars(g, &v)).collect();
    let want = [p(&id.ctx, "x1*(x1 + 24*v^2 - 8*v*y1 + y1^2)"), p(&id.ctx, "(y1 - 4*v)*(2*x1 - 2*v*y1 + y1^2)")];
    assert!(ideals_equal(&flipped, &want).unwrap());
    assert!(!ideals_equal(&elim, &want).unwrap());
}

#[test]
fn empty_drop_gives_the_basis() {
    let id = zs("pn:2", "borel:sl3");
    let elim = eliminate(&id.generators, &[]).unwrap();
    let gb = buchberger(&id.generators, &MonomialOrder::weighted_degrevlex(&id.ctx)).unwrap();
    let primitive: Vec<Poly> = gb.generators().iter().map(|g| g.primitive()).collect();
    assert_eq!(elim, primitive);
}

#[test]
fn quotient_dimensions() {
    let c = ctx(&[("x1", 2)]);
    assert_eq!(quotient_dimension(&[p(&c, "x1^3")]).unwrap(), QuotientDimension::Finite(3));
    let d = ctx(&[("x", 2)]);
    assert_eq!(quotient_dimension(&[p(&d, "x*(x + 2)*(x + 4)*(x + 6)")]).unwrap(), QuotientDimension::Finite(4));
    let e = ctx(&[("x", 2), ("y", 2)]);
    assert_eq!(quotient_dimension(&[p(&e, "x"), p(&e, "y")]).unwrap(), QuotientDimension::Finite(1));
    assert_eq!(quotient_dimension(&[p(&e, "x*y")]).unwrap(), QuotientDimension::Infinite);
    assert_eq!(quotient_dimension(&[p(&e, "x + 1"), p(&e, "x")]).unwrap(), QuotientDimension::Finite(0));
}

#[test]
fn hilbert_series_of_ideals() {
    let c = ctx(&[("v", 2), ("x", 2)]);
    let hs = hilbert_series_ideal(&[p(&c, "x*(x + 2*v)")]).unwrap();
    assert_eq!(hs, HilbertSeries::new(vec![1, 0, 1], vec![2]));
    let k = RingContext::new(vec![
        Variable::new("c2", 4, Role::InvariantParam),
        Variable::new("c3", 6, Role::InvariantParam),
        Variable::new("x1", 2, Role::Cell),
    ])
    .unwrap();
    let hs = hilbert_series_ideal(&[p(&k, "x1^3 - 2*c2*x1 - c3")]).unwrap();
    assert_eq!(hs, HilbertSeries::new(vec![1, 0, 1, 0, 1], vec![4, 6]));
    assert!(hilbert_series_ideal(&[Poly::one(&c)]).unwrap().is_zero());
    assert!(matches!(hilbert_series_ideal(&[p(&c, "x + v^2")]), Err(Error::Inhomogeneous(_))));
}

fn random_poly(rng: &mut ChaCha8Rng, c: &Ctx, terms: usize, maxdeg: u32) -> Poly {
    let mut out = Poly::zero(c);
    for _ in 0..terms {
        let m: Vec<u32> = (0..c.len()).map(|_| rng.gen_range(0..=maxdeg)).collect();
        out = &out + &Poly::monomial(c, m, qq(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
    }
    out
}

#[test]
fn normal_form_does_not_depend_on_the_reduction_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (variety, family) in [("flag:3", "borel:sl3"), ("gr:2,4", "psl2-borel:4"), ("pn:3", "kostant:sl4")] {
        let id = zs(variety, family);
        let gb = buchberger(&id.generators, &MonomialOrder::weighted_degrevlex(&id.ctx)).unwrap();
        for _ in 0..34 {
            let f = random_poly(&mut rng, &id.ctx, 4, 2);
            let canonical = gb.normal_form(&f).unwrap();
            let mut a = ChaCha8Rng::seed_from_u64(rng.gen());
            let mut b = ChaCha8Rng::seed_from_u64(rng.gen());
            let first = gb.normal_form_by(&f, &mut |k| a.gen_range(0..k)).unwrap();
            let last = gb.normal_form_by(&f, &mut |k| if b.gen_bool(0.5) { k - 1 } else { 0 }).unwrap();
            assert_eq!(first, canonical);
            assert_eq!(last, canonical);
        }
    }
}

#[test]
fn elimination_gives_the_contraction() {
    // Every eliminated generator is in the ideal, and vanishes on every
    // solution of a specialized fiber.
    let id = zs("gr:2,4", "psl2-borel:4");
    let drop = [id.ctx.require("x2").unwrap(), id.ctx.require("y2").unwrap()];
    let elim = eliminate(&id.generators, &drop).unwrap();
    let gb = buchberger(&id.generators, &MonomialOrder::weighted_degrevlex(&id.ctx)).unwrap();
    assert!(elim.iter().all(|g| gb.contains(g).unwrap()));
    let (cells, fiber) = id.fiber_generators(&[q(3)]).unwrap();
    let points = rational_points(&fiber, &cells).unwrap();
    assert_eq!(points.len(), 6);
    for pt in points {
        let mut at: std::collections::HashMap<String, _> = cells.names().into_iter().zip(pt).collect();
        at.insert("v".into(), q(3));
        for g in &elim {
            assert_eq!(g.evaluate(&at).unwrap(), q(0));
        }
    }
}

#[test]
fn quotient_dimension_is_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (variety, family) in in_scope_pairs() {
        let id = zs(&variety, &family);
        let values: Vec<_> = id.params().iter().map(|_| qq(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
        let (cells, fiber) = id.fiber_generators(&values).unwrap();
        let lex = quotient_dimension_with(&fiber, &MonomialOrder::lex(&cells)).unwrap();
        let wdrl = quotient_dimension_with(&fiber, &MonomialOrder::weighted_degrevlex(&cells)).unwrap();
        assert_eq!(lex, wdrl, "{variety} {family}");
    }
}

/// Standard monomials under the given leading monomials, by enumeration.
fn brute_standard(leads: &[Vec<u32>], weights: &[u32], upto: usize) -> Vec<i64> {
    let mut out = vec![0i64; upto + 1];
    let mut stack = vec![(0usize, 0usize, Vec::<u32>::new())];
    while let Some((i, deg, m)) = stack.pop() {
        if i == weights.len() {
            if !leads.iter().any(|l| l.iter().zip(&m).all(|(a, b)| a <= b)) {
                out[deg] += 1;
            }
            continue;
        }
        let mut e = 0usize;
        while deg + e * weights[i] as usize <= upto {
            let mut next = m.clone();
            next.push(e as u32);
            stack.push((i + 1, deg + e * weights[i] as usize, next));
            e += 1;
        }
    }
    out
}

#[test]
fn hilbert_series_matches_standard_monomials_for_every_zero_scheme() {
    for (variety, family) in in_scope_pairs() {
        let id = zs(&variety, &family);
        let hs = hilbert_series_ideal(&id.generators).unwrap();
        let gb = buchberger(&id.generators, &MonomialOrder::weighted_degrevlex(&id.ctx)).unwrap();
        let brute = brute_standard(&gb.leading_monomials(), &id.ctx.weights(), 24);
        assert_eq!(hs.expand(24), brute, "{variety} {family}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bases_reduce_their_generators(seed in any::<u64>()) {
        let c = ctx(&[("v", 2), ("x", 2), ("y", 2)]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Poly> = (0..3).map(|_| random_poly(&mut rng, &c, 3, 1)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        for order in [MonomialOrder::lex(&c), MonomialOrder::weighted_degrevlex(&c)] {
            let gb = buchberger(&gens, &order).unwrap();
            for g in &gens {
                prop_assert!(gb.contains(g).unwrap());
            }
            let rebuilt = buchberger(gb.generators(), &order).unwrap();
            prop_assert_eq!(rebuilt.generators(), gb.generators());
        }
    }
}
