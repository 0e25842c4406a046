//! Small worked instances, checked by hand.

use std::collections::BTreeSet;

use num_rational::Ratio;
use wonderful_core::catalog::{Catalog, Params};
use wonderful_core::curves::{CocharacterCurve, CurveClasses};
use wonderful_core::kac::{AffineDiagram, KacDiagram};
use wonderful_core::names::{Factor, SpaceName, Style};
use wonderful_core::record::Record;
use wonderful_core::report::Report;
use wonderful_core::validate::validate;
use wonderful_core::vmrt::{dim_p, kappa, OrbitType, VmrtInvariants};
use wonderful_core::{
    CartanType, Coweight, Involution, RestrictedRootSystem, RestrictedType, RootSystem, SatakeData,
    SimpleRootClass, Weight,
};

type Q = Ratio<i64>;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn cw(v: &[(i64, i64)]) -> Coweight {
    Coweight(v.iter().map(|&(a, b)| Q::new(a, b)).collect())
}

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn satake(black: &[usize], diagram: &[usize]) -> SatakeData {
    SatakeData { black: black.iter().copied().collect(), diagram: diagram.to_vec() }
}

/// A₃ with α₂ black and the flip: SL₄/S(GL₁×GL₃).
fn aiii() -> Involution {
    Involution::new(RootSystem::simple(ty("A3")).unwrap(), satake(&[1], &[2, 1, 0])).unwrap()
}

/// B₂ with α₂ black: SO₅/S(O₁×O₄).
fn bdii() -> Involution {
    Involution::new(RootSystem::simple(ty("B2")).unwrap(), satake(&[1], &[0, 1])).unwrap()
}

/// A₁×A₁ with the swap: PSL₂ as a symmetric space.
fn group_a1() -> Involution {
    Involution::new(RootSystem::new(&[ty("A1"), ty("A1")]).unwrap(), satake(&[], &[1, 0])).unwrap()
}

fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn root_counts() {
    for (t, n) in [("A5", 30), ("B4", 32), ("C4", 32), ("D5", 40), ("G2", 12), ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240)] {
        assert_eq!(RootSystem::simple(ty(t)).unwrap().num_roots(), n, "{t}");
    }
    let rs = RootSystem::new(&[ty("A1"), ty("A1")]).unwrap();
    assert_eq!(rs.num_roots(), 4);
}

#[test]
fn highest_roots_and_rho() {
    let a3 = RootSystem::simple(ty("A3")).unwrap();
    assert_eq!(a3.highest_root(), w(&[1, 1, 1]));
    let b2 = RootSystem::simple(ty("B2")).unwrap();
    assert_eq!(b2.highest_root(), w(&[1, 2]));
    assert_eq!(b2.highest_short_roots(), vec![Some(w(&[1, 1]))]);
    assert_eq!(b2.rho2(), w(&[3, 4]));
    assert_eq!(b2.pair(1, &w(&[1, 0])), -2);
    assert_eq!(b2.reflect(1, &w(&[1, 0])), w(&[1, 2]));
    let g2 = RootSystem::simple(ty("G2")).unwrap();
    assert_eq!(g2.highest_root(), w(&[3, 2]));
    assert_eq!(a3.dim_minimal_orbit(), 6);
    assert_eq!(b2.dim_minimal_orbit(), 4);
    assert_eq!(g2.dim_minimal_orbit(), 6);
}

#[test]
fn longest_words() {
    let a2 = RootSystem::simple(ty("A2")).unwrap();
    let word = a2.longest_subsystem_word(&[0, 1].into_iter().collect());
    assert_eq!(word.len(), 3);
    assert_eq!(a2.apply_word(&word, &w(&[1, 0])), w(&[0, -1]));
    let a3 = RootSystem::simple(ty("A3")).unwrap();
    let word = a3.longest_subsystem_word(&[1].into_iter().collect());
    assert_eq!(word, vec![1]);
    assert_eq!(a3.apply_word(&word, &w(&[1, 0, 0])), w(&[1, 1, 0]));
}

#[test]
fn involutions() {
    let aii = Involution::new(RootSystem::simple(ty("A3")).unwrap(), satake(&[0, 2], &[0, 1, 2])).unwrap();
    assert_eq!(aii.sigma(&w(&[0, 1, 0])), w(&[-1, -1, -1]));
    let inv = aiii();
    assert_eq!(inv.sigma(&w(&[1, 0, 0])), w(&[0, -1, -1]));
    assert_eq!(inv.sigma_bar(0), 2);
    assert_eq!(inv.classify(0).unwrap(), SimpleRootClass::Nonreduced);
    let g = group_a1();
    assert_eq!(g.sigma_bar(0), 1);
    assert_eq!(g.classify(0).unwrap(), SimpleRootClass::Orthogonal);
    let split = Involution::new(RootSystem::simple(ty("A4")).unwrap(), SatakeData::split(4)).unwrap();
    assert_eq!(split.classify(2).unwrap(), SimpleRootClass::Real);
}

#[test]
fn bad_satake_data_is_rejected() {
    // a lone black α₂ in A₃ needs the flip
    let rs = RootSystem::simple(ty("A3")).unwrap();
    assert!(Involution::new(rs.clone(), satake(&[1], &[0, 1, 2])).is_err());
    // black nodes must be stable under the diagram map
    assert!(Involution::new(rs.clone(), satake(&[0], &[2, 1, 0])).is_err());
    assert!(Involution::new(rs, satake(&[], &[1, 0, 2])).is_err());
}

#[test]
fn restricted_systems() {
    let aii = Involution::new(RootSystem::simple(ty("A3")).unwrap(), satake(&[0, 2], &[0, 1, 2])).unwrap();
    let r = RestrictedRootSystem::new(&aii).unwrap();
    assert_eq!(r.restricted_type(), "A1".parse().unwrap());
    assert_eq!(r.simple_roots(), &[w(&[1, 2, 1])]);

    let r = RestrictedRootSystem::new(&aiii()).unwrap();
    assert_eq!(r.restricted_type(), RestrictedType::BC(1));
    assert!(r.is_exceptional());
    assert_eq!(r.exceptional_witness(), Some(0));
    assert_eq!(r.coroots_hat()[0], cw(&[(1, 2), (1, 2), (1, 2)]));
    assert_eq!(r.theta_bar_coweight(), &cw(&[(1, 2), (1, 2), (1, 2)]));

    let r = RestrictedRootSystem::new(&bdii()).unwrap();
    assert_eq!(r.restricted_type(), "A1".parse().unwrap());
    assert_eq!(r.simple_roots(), &[w(&[2, 2])]);
    assert_eq!(r.theta_bar_coweight(), &cw(&[(1, 1), (1, 2)]));
    assert_eq!(r.theta_expansion(), &[1]);

    let r = RestrictedRootSystem::new(&group_a1()).unwrap();
    assert_eq!(r.theta_bar_coweight(), &cw(&[(1, 2), (1, 2)]));
}

#[test]
fn colors_and_curves() {
    let inv = group_a1();
    let rrs = RestrictedRootSystem::new(&inv).unwrap();
    let cc = CurveClasses::new(&inv, &rrs).unwrap();
    assert_eq!(cc.picard_rank(), 1);
    assert_eq!(cc.colors()[0].nodes, vec![0, 1]);
    assert_eq!(cc.colors()[0].lambda, vec![1, 1]);
    assert_eq!(cc.boundary_pairing(), &[vec![2]]);
    assert_eq!(cc.minimal_classes(), &[vec![1]]);

    let inv = aiii();
    let rrs = RestrictedRootSystem::new(&inv).unwrap();
    let cc = CurveClasses::new(&inv, &rrs).unwrap();
    assert_eq!(cc.picard_rank(), 2);
    assert_eq!(cc.colors()[0].lambda, vec![1, 0, 0]);
    assert_eq!(cc.boundary_pairing(), &[vec![1, 1]]);
    assert_eq!(cc.minimal_classes(), &[vec![1, 0], vec![0, 1]]);
    assert_eq!(cc.psi(&rrs, &[1, -1]), Coweight::zero(3));
    assert_eq!(cc.theta_curve_class(), vec![1, 1]);
    let curve = CocharacterCurve::new(&inv, &rrs, rrs.theta_bar_coweight().clone()).unwrap();
    assert!(curve.is_embedding);

    let inv = bdii();
    let rrs = RestrictedRootSystem::new(&inv).unwrap();
    let cc = CurveClasses::new(&inv, &rrs).unwrap();
    assert_eq!(cc.boundary_pairing(), &[vec![2]]);
    assert_eq!(cc.psi(&rrs, &[1]), cw(&[(1, 1), (1, 2)]));
    let curve = CocharacterCurve::new(&inv, &rrs, rrs.theta_bar_coweight().clone()).unwrap();
    assert!(!curve.is_embedding);
    let zero = CocharacterCurve::new(&inv, &rrs, Coweight::zero(2)).unwrap();
    assert!(zero.zero_side.is_empty() && zero.infinity_side.is_empty());
}

#[test]
fn vmrt_numbers() {
    let cases: [(Involution, [i64; 4], i64, Weight, Weight); 3] = [
        (bdii(), [2, 3, 6, 2], 4, w(&[3, 3]), w(&[2, 2])),
        (aiii(), [1, 2, 6, 2], 6, w(&[3, 3, 3]), w(&[1, 1, 1])),
        (group_a1(), [2, 2, 4, 1], 3, w(&[1, 1]), w(&[1, 1])),
    ];
    for (inv, dims, p, k, s) in cases {
        let rrs = RestrictedRootSystem::new(&inv).unwrap();
        let v = VmrtInvariants::new(&inv, &rrs).unwrap();
        assert_eq!([v.boundary_degree, v.dim_family, v.dim_nilpotent_orbit, v.dim_hc], dims);
        assert_eq!(dim_p(&inv, &rrs), p);
        assert_eq!(kappa(&inv), k);
        assert_eq!(v.sigma_sum, s);
    }
    let split = Involution::new(RootSystem::simple(ty("A1")).unwrap(), SatakeData::split(1)).unwrap();
    let rrs = RestrictedRootSystem::new(&split).unwrap();
    assert_eq!(dim_p(&split, &rrs), 2);
    assert_eq!(VmrtInvariants::new(&bdii(), &RestrictedRootSystem::new(&bdii()).unwrap()).unwrap().orbit_type, OrbitType::SumSigma);
}

#[test]
fn kac_examples() {
    let cat = Catalog::embedded();
    let names = |label: &str, p: Params| -> Vec<String> {
        let rec = Record::build(cat.instantiate(label, &p).unwrap()).unwrap();
        rec.marked.iter().map(|m| m.name.to_string()).collect()
    };
    assert_eq!(names("FII", params(&[])), vec!["OG(4,9)"]);
    assert_eq!(names("CI", params(&[("r", 6)])), vec!["P⁵", "(P⁵)∨"]);
    assert_eq!(names("AI", params(&[("r", 1)])), vec!["pt", "pt"]);
    assert_eq!(names("AIII", params(&[("n", 8), ("r", 3)])), vec!["P²×(P⁴)∨", "(P²)∨×P⁴"]);
    let aff = AffineDiagram::untwisted(ty("F4")).unwrap();
    let k = KacDiagram::new(aff, BTreeSet::from([4])).unwrap();
    assert_eq!(k.factors().unwrap().len(), 1);
}

#[test]
fn factor_names() {
    let f = |t: &str, c: &[usize]| Factor::new(ty(t), c).unwrap();
    assert_eq!(SpaceName::new(vec![f("A4", &[1])]).to_string(), "P⁴");
    assert_eq!(SpaceName::new(vec![f("B4", &[4])]).to_string(), "OG(4,9)");
    assert_eq!(SpaceName::new(vec![f("A1", &[1]), f("A1", &[1])]).to_string(), "P¹×P¹");
    assert_eq!(SpaceName::new(vec![f("E7", &[7])]).render(Style::Ascii), "E7/P7");
}

#[test]
fn catalog_examples() {
    let cat = Catalog::embedded();
    let ci = cat.instantiate("CI", &params(&[("r", 3)])).unwrap();
    assert!(validate(&ci).iter().all(|c| c.passed));
    let rec = Record::build(ci).unwrap();
    let rep = Report::new(&rec, &cat.version, Style::Unicode).unwrap();
    assert!(!rep.fano);
    assert_eq!(rep.vmrt, "P² ⊔ P²");
    assert_eq!(rep.vmrt_components.len(), 2);

    let eiv = Record::build(cat.instantiate("EIV", &params(&[])).unwrap()).unwrap();
    let rep = Report::new(&eiv, &cat.version, Style::Unicode).unwrap();
    assert_eq!(rep.restricted_type, "A₂");
    assert_eq!(rep.orbit_type, "O_sum_sigma");
    assert_eq!(rep.vmrt, "E6/P6");
    assert!(rep.checks.failed.is_empty());

    let aiii = Record::build(cat.instantiate("AIII", &params(&[("n", 4), ("r", 1)])).unwrap()).unwrap();
    let rep = Report::new(&aiii, &cat.version, Style::Unicode).unwrap();
    assert_eq!(rep.vmrt_components.len(), 1);
    assert_eq!(rep.vmrt_components[0].name, "P⁰×P²");
    assert_eq!(rep.minimal_classes.len(), 2);

    let bdii = cat.instantiate("BDII", &params(&[("n", 5)])).unwrap();
    assert_eq!(bdii.group, vec![ty("B2")]);

    let eight = cat.enumerate(8).unwrap();
    for l in ["EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"] {
        assert!(eight.iter().any(|i| i.label == l), "{l}");
    }
}

#[test]
fn split_families_are_minus_identity() {
    let cat = Catalog::embedded();
    for inst in cat.enumerate(8).unwrap() {
        if !["AI", "CI", "DI", "EI", "EV", "EVIII", "FI", "G"].contains(&inst.label.as_str()) {
            continue;
        }
        let rec = Record::build(inst.clone()).unwrap();
        let n = rec.involution.rank();
        for i in 0..n {
            let a = Weight::simple(n, i);
            assert_eq!(rec.involution.sigma(&a), -&a, "{}", inst.id());
        }
        let group = RestrictedType::Reduced(inst.group[0]);
        assert!(rec.restricted.restricted_type().isomorphic(&group), "{}", inst.id());
    }
}

#[test]
fn tampered_arrow_fails_restricted_type() {
    let cat = Catalog::embedded();
    let mut inst = cat.instantiate("AIII", &params(&[("n", 4), ("r", 2)])).unwrap();
    inst.satake.diagram = vec![0, 1, 2];
    let failed: Vec<_> = validate(&inst).into_iter().filter(|c| !c.passed).map(|c| c.name).collect();
    assert!(failed.contains(&"restricted-type"), "{failed:?}");
}

#[test]
fn unbuildable_record_is_a_failed_check() {
    let cat = Catalog::embedded();
    let mut inst = cat.instantiate("AIII", &params(&[("n", 6), ("r", 1)])).unwrap();
    inst.satake.diagram = (0..5).collect();
    let res = validate(&inst);
    assert_eq!(res.len(), 1);
    assert_eq!(res[0].name, "build");
    assert!(!res[0].passed);
    assert!(res[0].detail.starts_with("satake"), "{}", res[0].detail);
}
