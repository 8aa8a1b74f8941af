use std::collections::{BTreeMap, BTreeSet, HashMap};

use eqcoh::charts::ChartDescriptor;
use eqcoh::groebner::{ideals_equal, negate_vars, QuotientDimension};
use eqcoh::zeroscheme::{
    build_report, components_over_regular, fiber_is_reduced, fixed_point_components, parameter_ctx, poincare_check,
    present, solve_fiber, zero_scheme_ideal, MatrixFamily, Report, ReportOptions, Strategy, ZeroSchemeIdeal,
};
use eqcoh::{q, qq, Error, Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zs(variety: &str, family: &str) -> ZeroSchemeIdeal {
    let chart = ChartDescriptor::parse(variety).unwrap();
    let family: MatrixFamily = family.parse().unwrap();
    zero_scheme_ideal(&chart, &family).unwrap()
}

fn polys(id: &ZeroSchemeIdeal, xs: &[&str]) -> Vec<Poly> {
    xs.iter().map(|s| Poly::parse(&id.ctx, s).unwrap()).collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    qq(rng.gen_range(-20..=20), rng.gen_range(1..=7))
}

#[test]
fn torus_family_generators() {
    let id = zs("pn:3", "psl2-borel:4");
    assert_eq!(id.generators, polys(&id, &["x2 - x1*(x1 + 2*v)", "x3 - x2*(x1 + 4*v)", "-x3*(x1 + 6*v)"]));
    let id = zs("pn:3", "borel:sl4");
    assert_eq!(id.generators, polys(&id, &["x2 - x1*(x1 - v1)", "x3 - x2*(x1 - v2)", "-x3*(x1 - v3)"]));
    let id = zs("flag:3", "borel:sl3");
    assert_eq!(id.generators, polys(&id, &["-a^2 + b + v1*a", "-a*b + v2*b", "-b + a*c - c^2 + (v2 - v1)*c"]));
}

#[test]
fn kostant_family_generators() {
    let id = zs("pn:2", "kostant:sl3");
    assert_eq!(id.generators, polys(&id, &["x2 - x1^2 + c2", "-x1*x2 + c2*x1 + c3"]));
    let id = zs("gr:2,4", "psl2-kostant:4");
    let want = ["x2 - x1*y1 - 3*t*y1", "-x1 - y1^2 + y2 + 4*t", "-x1*y2 + 3*t*x1 - 3*t*y2", "-x2 - y1*y2 + 3*t*y1"];
    assert_eq!(id.generators, polys(&id, &want));
    let id = zs("flag:3", "kostant:sl3");
    assert_eq!(id.generators, polys(&id, &["-a^2 + b + c2", "-a*b + a*c2 + c3", "-b + a*c - c^2 + c2"]));
}

#[test]
fn principal_torus_presentations() {
    for n in 1..=4 {
        let id = zs(&format!("pn:{n}"), &format!("psl2-borel:{}", n + 1));
        let p = present(&id, Strategy::Auto).unwrap();
        assert_eq!(p.ctx.names(), ["v", "x1"]);
        let want: Vec<String> = (0..=n).map(|k| format!("(x1 + {}*v)", 2 * k)).collect();
        let want = Poly::parse(&p.ctx, &want.join("*")).unwrap();
        assert!(ideals_equal(&p.relations, &[want]).unwrap(), "n = {n}");
        assert_eq!(p.rank().unwrap(), n as i64 + 1);
    }
}

#[test]
fn principal_kostant_presentations() {
    for n in 2..=5 {
        let id = zs(&format!("pn:{n}"), &format!("psl2-kostant:{}", n + 1));
        let p = present(&id, Strategy::Auto).unwrap();
        let mut factors: Vec<String> = (1..=n).rev().step_by(2).map(|k| format!("(x1^2 - {}*t)", k * k)).collect();
        if n % 2 == 0 {
            factors.push("x1".into());
        }
        let want = Poly::parse(&p.ctx, &factors.join("*")).unwrap();
        assert!(ideals_equal(&p.relations, &[want]).unwrap(), "n = {n}");
    }
}

#[test]
fn flag_kostant_presentation() {
    // Substituting b = a^2 - c2 into the second generator gives
    // -a^3 + 2*c2*a + c3 by hand.
    let id = zs("flag:3", "kostant:sl3");
    let p = present(&id, Strategy::Auto).unwrap();
    assert_eq!(p.ctx.names(), ["c2", "c3", "a", "c"]);
    assert_eq!(p.kept, ["a", "c"]);
    let want = ["a^3 - 2*c2*a - c3", "a^2 - a*c + c^2 - 2*c2"].map(|s| Poly::parse(&p.ctx, s).unwrap());
    assert!(ideals_equal(&p.relations, &want).unwrap());
    let other_sign = ["a^3 - 2*c2*a + c3", "a^2 - a*c + c^2 - 2*c2"].map(|s| Poly::parse(&p.ctx, s).unwrap());
    assert!(!ideals_equal(&p.relations, &other_sign).unwrap());
}

#[test]
fn strategies_agree() {
    for (v, f) in [
        ("pn:3", "borel:sl4"),
        ("gr:2,4", "psl2-borel:4"),
        ("flag:3", "borel:sl3"),
        ("flag:3", "kostant:sl3"),
        ("bs:1,2,1@sl3", "borel:sl3"),
    ] {
        let id = zs(v, f);
        let t = present(&id, Strategy::Triangular).unwrap();
        let g = present(&id, Strategy::Groebner).unwrap();
        assert_eq!(t.kept, g.kept);
        assert!(ideals_equal(&t.relations, &g.relations).unwrap(), "{v} {f}");
        assert_eq!(present(&id, Strategy::Auto).unwrap().relations, t.relations);
    }
}

#[test]
fn homogeneity() {
    assert_eq!(zs("pn:3", "psl2-borel:4").homogeneity_report().unwrap(), vec![4, 6, 8]);
    assert_eq!(zs("gr:2,4", "psl2-borel:4").homogeneity_report().unwrap(), vec![6, 4, 8, 6]);
    let id = zs("flag:4", "borel:sl4");
    let degrees: Vec<u64> = id.generators.iter().map(|g| g.weighted_degree().unwrap()).collect();
    assert_eq!(id.homogeneity_report().unwrap(), degrees);
}

#[test]
fn fiber_dimensions() {
    let id = zs("pn:2", "borel:sl3");
    assert_eq!(id.fiber_dimension(&[q(1), q(2)]).unwrap(), 3);
    assert_eq!(id.fiber_dimension(&[q(0), q(0)]).unwrap(), 3);
    assert_eq!(zs("gr:2,4", "psl2-kostant:4").fiber_dimension(&[q(1)]).unwrap(), 6);
    assert!(matches!(id.fiber_dimension(&[q(1)]), Err(Error::SizeMismatch { .. })));
}

#[test]
fn fibers_are_flat() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (v, f) in [
        ("pn:3", "borel:sl4"),
        ("gr:2,4", "borel:sl4"),
        ("flag:3", "kostant:sl3"),
        ("bs:1,2,1@sl3", "borel:sl3"),
        ("gr:2,4", "psl2-kostant:4"),
    ] {
        let id = zs(v, f);
        let chi = id.chart.kind.euler_characteristic();
        let np = id.params().len();
        assert_eq!(id.fiber_dimension(&vec![q(0); np]).unwrap(), chi);
        for _ in 0..20 {
            let w: Vec<Rational> = (0..np).map(|_| random_rational(&mut rng)).collect();
            assert_eq!(id.fiber_dimension(&w).unwrap(), chi, "{v} {f} at {w:?}");
        }
        assert!(matches!(id.regular_sequence_staircase().unwrap(), QuotientDimension::Finite(_)));
    }
}

#[test]
fn poincare_checks() {
    for n in 1..=4 {
        let id = zs(&format!("pn:{n}"), &format!("psl2-borel:{}", n + 1));
        let betti: Vec<i64> = (0..=2 * n).map(|d| i64::from(d % 2 == 0)).collect();
        assert!(poincare_check(&id, &betti).unwrap().pass);
    }
    // (1 - t^6)(1 - t^8) / ((1 - t^2)(1 - t^4)) expanded by hand.
    let gr = [1, 0, 1, 0, 2, 0, 1, 0, 1];
    assert!(poincare_check(&zs("gr:2,4", "psl2-borel:4"), &gr).unwrap().pass);
    assert!(poincare_check(&zs("gr:2,4", "kostant:sl4"), &gr).unwrap().pass);
    assert!(poincare_check(&zs("bs:1,2,1@sl3", "borel:sl3"), &[1, 0, 3, 0, 3, 0, 1]).unwrap().pass);
    let wrong = poincare_check(&zs("pn:2", "borel:sl3"), &[1, 0, 1]).unwrap();
    assert!(!wrong.pass);
    assert_eq!(wrong.numerator, Some(vec![1, 0, 1, 0, 1]));
}

fn component_set(id: &ZeroSchemeIdeal, flip: bool) -> BTreeSet<BTreeMap<String, String>> {
    let pctx = parameter_ctx(id);
    let all: Vec<usize> = (0..pctx.len()).collect();
    components_over_regular(id)
        .unwrap()
        .into_iter()
        .map(|c| {
            c.values.into_iter().map(|(k, p)| (k, if flip { negate_vars(&p, &all) } else { p }.to_string())).collect()
        })
        .collect()
}

fn expected(rows: &[&[(&str, &str)]]) -> BTreeSet<BTreeMap<String, String>> {
    rows.iter().map(|r| r.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()).collect()
}

fn restrict(set: BTreeSet<BTreeMap<String, String>>, keys: &[&str]) -> BTreeSet<BTreeMap<String, String>> {
    set.into_iter().map(|m| m.into_iter().filter(|(k, _)| keys.contains(&k.as_str())).collect()).collect()
}

#[test]
fn flag_components() {
    let got = restrict(component_set(&zs("flag:3", "borel:sl3"), false), &["a", "c"]);
    let want = expected(&[
        &[("a", "0"), ("c", "0")],
        &[("a", "v1"), ("c", "0")],
        &[("a", "v1"), ("c", "v2")],
        &[("a", "v2"), ("c", "v2")],
        &[("a", "0"), ("c", "v2 - v1")],
        &[("a", "v2"), ("c", "v2 - v1")],
    ]);
    assert_eq!(got, want);
}

#[test]
fn grassmannian_components() {
    let got = restrict(component_set(&zs("gr:2,4", "psl2-borel:4"), true), &["x1", "y1"]);
    let want = expected(&[
        &[("x1", "0"), ("y1", "0")],
        &[("x1", "0"), ("y1", "2*v")],
        &[("x1", "-8*v^2"), ("y1", "4*v")],
        &[("x1", "0"), ("y1", "4*v")],
        &[("x1", "-12*v^2"), ("y1", "6*v")],
        &[("x1", "-24*v^2"), ("y1", "8*v")],
    ]);
    assert_eq!(got, want);
}

#[test]
fn line_components() {
    let got = component_set(&zs("pn:1", "psl2-borel:2"), false);
    assert_eq!(got, expected(&[&[("x1", "0")], &[("x1", "-2*v")]]));
    assert!(matches!(components_over_regular(&zs("pn:2", "kostant:sl3")), Err(Error::ComponentsUnavailable(_))));
}

#[test]
fn components_match_fixed_points() {
    for (v, f) in [("pn:3", "borel:sl4"), ("gr:2,4", "borel:sl4"), ("flag:3", "borel:sl3"), ("flag:1,3@4", "borel:sl4")]
    {
        let id = zs(v, f);
        let solved = components_over_regular(&id).unwrap();
        let fixed = fixed_point_components(&id).unwrap();
        assert_eq!(solved.len() as u64, id.chart.kind.euler_characteristic());
        let labels: BTreeSet<_> = solved.iter().map(|c| c.label.clone()).collect();
        assert_eq!(labels.len(), solved.len(), "{v}: labels are distinct");
        for c in &solved {
            let twin = fixed.iter().find(|d| d.label == c.label).expect("every component is labeled");
            assert_eq!(twin.values, c.values, "{v} {f}");
        }
        for c in &fixed {
            for g in &id.generators {
                let mut at: HashMap<String, Poly> =
                    c.values.iter().map(|(k, p)| (k.clone(), p.transport(&id.ctx).unwrap())).collect();
                for i in id.params() {
                    let name = id.ctx.var(i).name.clone();
                    at.insert(name.clone(), Poly::var(&id.ctx, &name).unwrap());
                }
                assert!(g.substitute(&at).unwrap().is_zero(), "{v}: component zeroes {g}");
            }
        }
    }
}

#[test]
fn fibers_are_reduced_at_regular_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for (v, f) in [("pn:2", "borel:sl3"), ("flag:3", "borel:sl3"), ("gr:2,4", "psl2-borel:4")] {
        let id = zs(v, f);
        let mut tested = 0;
        while tested < 20 {
            let w: Vec<Rational> = id.params().iter().map(|_| random_rational(&mut rng)).collect();
            let fiber = solve_fiber(&id, &w);
            let Ok(fiber) = fiber else {
                continue;
            };
            if fiber.points.len() as u64 != id.chart.kind.euler_characteristic() {
                continue;
            }
            assert!(fiber_is_reduced(&id, &w).unwrap());
            assert!(fiber.labels.is_some());
            tested += 1;
        }
    }
    // At w = 0 the fiber is a single fat point.
    let id = zs("pn:2", "borel:sl3");
    assert!(!fiber_is_reduced(&id, &[q(0), q(0)]).unwrap());
}

#[test]
fn kostant_and_borel_relations_agree() {
    // K(v^2, x1 + n v) is the principal torus relation up to a scalar: the
    // roots x1 = -2k v shift to the roots ±(n - 2k) v.
    for n in 1..=5 {
        let b = present(&zs(&format!("pn:{n}"), &format!("psl2-borel:{}", n + 1)), Strategy::Auto).unwrap();
        let k = present(&zs(&format!("pn:{n}"), &format!("psl2-kostant:{}", n + 1)), Strategy::Auto).unwrap();
        let bindings: HashMap<String, Poly> = [
            ("t".to_string(), Poly::parse(&b.ctx, "v^2").unwrap()),
            ("x1".to_string(), Poly::parse(&b.ctx, &format!("x1 + {n}*v")).unwrap()),
        ]
        .into();
        let moved: Vec<Poly> = k.relations.iter().map(|r| r.map_into(&b.ctx, &bindings).unwrap()).collect();
        assert_eq!(moved.len(), 1);
        assert_eq!(moved[0].primitive(), b.relations[0].primitive(), "n = {n}");
    }
}

#[test]
fn report_round_trip() {
    let id = zs("flag:3", "borel:sl3");
    let opts = ReportOptions { components: true, ..ReportOptions::default() };
    let report = build_report(&id, opts).unwrap();
    assert_eq!(report.rank, 6);
    assert_eq!(report.hilbert_numerator, vec![1, 0, 2, 0, 2, 0, 1]);
    assert_eq!(report.components.as_ref().map(Vec::len), Some(6));
    let json = serde_json::to_string(&report).unwrap();
    let back: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
    let plain = build_report(&id, ReportOptions::default()).unwrap();
    assert!(!serde_json::to_string(&plain).unwrap().contains("components"));
    let text = report.to_string();
    assert!(text.contains("hilbert numerator: "));
}

#[test]
fn sign_flip_negates_torus_parameters() {
    let id = zs("pn:1", "psl2-borel:2");
    let engine = build_report(&id, ReportOptions::default()).unwrap();
    let flipped = build_report(&id, ReportOptions { flip_sign: true, ..ReportOptions::default() }).unwrap();
    assert_eq!(engine.presentation.relations, ["x1^2 + 2*v*x1"]);
    assert_eq!(flipped.presentation.relations, ["x1^2 - 2*v*x1"]);
}
