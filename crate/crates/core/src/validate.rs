//! Computed-versus-stored checks for catalog instances.
//!
//! Failures are results, not errors: a record that cannot even be built
//! yields one failing check named after the stage that broke.

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::catalog::Instance;
use crate::curves::CocharacterCurve;
use crate::linalg::{q, Q};
use crate::names::unions_isomorphic;
use crate::record::Record;
use crate::restricted::restricted_coroot;
use crate::roots::Weight;
use crate::vmrt::{orthogonal_simple_nodes, sigma_negates_highest_roots};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// All check names, in reporting order.
pub const CHECKS: [&str; 16] = [
    "build",
    "restricted-type",
    "exceptional",
    "hermitian",
    "sigma-theta",
    "fano",
    "boundary-degree",
    "dimensions",
    "nilpotent-orbit",
    "picard-rank",
    "hc-names",
    "hc-dimension",
    "vmrt-names",
    "vmrt-dimension",
    "restricted-roots",
    "curve-classes",
];

struct Out(Vec<CheckResult>);

impl Out {
    fn check(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        let detail = if passed { String::new() } else { detail.into() };
        self.0.push(CheckResult { name, passed, detail });
    }

    /// Folds several conditions into one named check; the detail lists the
    /// first failure.
    fn all(&mut self, name: &'static str, conds: Vec<(bool, String)>) {
        let first = conds.iter().find(|(ok, _)| !ok).map(|(_, d)| d.clone());
        self.check(name, first.is_none(), first.unwrap_or_default());
    }
}

/// Builds the record and runs every check.
pub fn validate(instance: &Instance) -> Vec<CheckResult> {
    match Record::build(instance.clone()) {
        Ok(rec) => validate_record(&rec),
        Err(f) => vec![CheckResult {
            name: "build",
            passed: false,
            detail: format!("{}: {}", f.stage, f.error),
        }],
    }
}

pub fn validate_record(rec: &Record) -> Vec<CheckResult> {
    let mut out = Out(Vec::new());
    out.check("build", true, "");
    let inst = &rec.instance;
    let inv = &rec.involution;
    let rrs = &rec.restricted;
    let v = &rec.vmrt;
    let rs = inv.root_system();
    let ty = rrs.restricted_type();

    out.check(
        "restricted-type",
        ty.isomorphic(&inst.restricted),
        format!("computed {ty}, stored {}", inst.restricted),
    );
    let exc = rrs.is_exceptional();
    out.all(
        "exceptional",
        vec![
            (exc == inst.exceptional, format!("computed {exc}, stored {}", inst.exceptional)),
            (!exc || inst.hermitian, "exceptional but not Hermitian".into()),
        ],
    );
    let whites = inst.white.len();
    out.check(
        "hermitian",
        (whites == 2) == inst.hermitian,
        format!("{whites} white Kac nodes, stored Hermitian = {}", inst.hermitian),
    );
    let st = sigma_negates_highest_roots(inv);
    out.check("sigma-theta", st == inst.sigma_theta, format!("computed {st}, stored {}", inst.sigma_theta));
    out.check("fano", v.fano == inst.fano, format!("computed {}, stored {}", v.fano, inst.fano));

    let bd = v.boundary_degree;
    out.all(
        "boundary-degree",
        vec![
            (bd == 1 || bd == 2, format!("∂X·C = {bd}")),
            ((bd == 2) == ty.is_type_a(), format!("∂X·C = {bd} for restricted type {ty}")),
        ],
    );

    let tb = rrs.theta_bar_coweight();
    let tks = rs.pair_coweight(tb, &(&v.kappa + &v.sigma_sum));
    out.all(
        "dimensions",
        vec![
            (q(v.dim_family + 2) == tks, format!("dim K_x = {} but <Θ̄^∨, κ+Σ> = {tks}", v.dim_family)),
            (v.dim_family == v.dim_hc + bd - 1, format!("dim K_x = {} vs dim H·C + ∂X·C - 1", v.dim_family)),
            (v.dim_nilpotent_orbit % 2 == 0, format!("dim G·m = {} is odd", v.dim_nilpotent_orbit)),
            (v.dim_hc == v.dim_nilpotent_orbit / 2 - 1, "dim H·C ≠ dim G·m / 2 - 1".into()),
            (
                !(ty.is_type_a() && ty.rank() == 1) || v.dim_family == v.dim_p - 1,
                format!("A₁ branch: dim K_x = {} but dim 𝔭 = {}", v.dim_family, v.dim_p),
            ),
        ],
    );

    let nil = if st {
        let m = rs.dim_minimal_orbit();
        (v.dim_nilpotent_orbit == m, format!("dim G·m = {} but dim O_min = {m}", v.dim_nilpotent_orbit))
    } else {
        let r2 = rs.pair_coweight(tb, &rs.rho2());
        let k = rs.pair_coweight(tb, &v.kappa);
        (k == r2, format!("<Θ̄^∨, κ> = {k} but <Θ̄^∨, 2ρ> = {r2}"))
    };
    out.all("nilpotent-orbit", vec![nil]);

    let pic = rec.curves.picard_rank();
    let want = rrs.rank() + exc as usize;
    out.check("picard-rank", pic == want, format!("{pic} colors, expected {want}"));

    let marked: Vec<_> = rec.marked.iter().map(|m| m.name.clone()).collect();
    let hc_ok = if exc {
        inst.hc.len() == 1 && marked.iter().all(|m| m.isomorphic(&inst.hc[0]))
    } else {
        unions_isomorphic(&marked, &inst.hc)
    };
    let shown: Vec<String> = marked.iter().map(|m| m.to_string()).collect();
    out.check(
        "hc-names",
        hc_ok,
        format!("Kac diagram gives [{}], stored [{}]", shown.join(", "), render(&inst.hc)),
    );
    let dims: Vec<usize> = marked.iter().chain(&inst.hc).map(|m| m.dimension()).collect();
    out.check(
        "hc-dimension",
        dims.iter().all(|&d| d as i64 == v.dim_hc),
        format!("dimensions {dims:?}, dim H·C = {}", v.dim_hc),
    );

    match rec.vmrt_components() {
        Ok(comps) => {
            let computed: Vec<_> = comps.iter().map(|c| c.computed.clone()).collect();
            let stored = rec.stored_vmrt();
            out.check(
                "vmrt-names",
                unions_isomorphic(&computed, &stored),
                format!("computed [{}], stored [{}]", render(&computed), render(&stored)),
            );
            let two = inst.hermitian && !exc && !ty.is_type_a();
            out.all(
                "vmrt-dimension",
                vec![
                    (
                        comps.iter().all(|c| c.dimension as i64 == v.dim_family),
                        format!("component dimensions differ from dim K_x = {}", v.dim_family),
                    ),
                    (comps.len() == if two { 2 } else { 1 }, format!("{} components", comps.len())),
                ],
            );
        }
        Err(e) => {
            out.check("vmrt-names", false, e.to_string());
            out.check("vmrt-dimension", false, e.to_string());
        }
    }

    out.all("restricted-roots", restricted_conditions(rec));
    out.all("curve-classes", curve_conditions(rec));
    out.0
}

fn render(names: &[crate::names::SpaceName]) -> String {
    names.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
}

fn restricted_conditions(rec: &Record) -> Vec<(bool, String)> {
    let inv = &rec.involution;
    let rrs = &rec.restricted;
    let rs = inv.root_system();
    let n = rs.rank();
    let ty = rrs.restricted_type();
    let mut c = Vec::new();

    let tb = rrs.theta_bar();
    let dominant = rrs.roots().iter().all(|x| tb.iter().zip(x).all(|(a, b)| a >= b));
    c.push((dominant, "Θ̄ is not dominance-maximal".to_string()));

    let w0 = rs.longest_element();
    let commute = (0..n).all(|j| {
        let a = Weight::simple(n, j);
        w0.apply(&inv.sigma(&a)) == inv.sigma(&w0.apply(&a))
    });
    c.push((commute, "w₀σ ≠ σw₀".into()));
    let tba = rrs.theta_bar_ambient();
    c.push((w0.apply(&tba) == -&tba, "w₀Θ̄ ≠ -Θ̄".into()));

    for (k, beta) in rrs.simple_roots().iter().enumerate() {
        let a = rrs.fibers()[k][0];
        let case = restricted_coroot(inv, &Weight::simple(n, a));
        let dual = rs.dual(beta);
        let scaled_ok = match &case {
            Ok(cw) => *cw == dual,
            Err(_) => false,
        };
        c.push((scaled_ok, format!("case formula for ᾱ_{} differs from 2ᾱ/(ᾱ,ᾱ)", k + 1)));
        let p = rs.pair_coweight(&dual, beta);
        c.push((p == q(2), format!("<ᾱ^∨, ᾱ> = {p}")));
    }

    let mut doubled = 0;
    let mut any_one = false;
    for &a in inv.white() {
        let k = rrs.fibers().iter().position(|f| f.contains(&a)).expect("white node in a fiber");
        let mut unit = vec![0i64; rrs.rank()];
        unit[k] = 2;
        let has_double = rrs.contains(&unit);
        let one = inv.self_pairing(a) == 1;
        any_one |= one;
        c.push((has_double == one, format!("2ᾱ ∈ R̄ disagrees with <α^∨, σα> at node {}", a + 1)));
    }
    for k in 0..rrs.rank() {
        let mut unit = vec![0i64; rrs.rank()];
        unit[k] = 2;
        doubled += rrs.contains(&unit) as usize;
    }
    c.push((doubled <= 1, format!("{doubled} doubled simple restricted roots")));
    c.push((!rrs.is_reduced() == any_one, "BC type disagrees with <α^∨, σα> = 1".into()));
    let laced = rs.components().iter().all(|comp| comp.ty.is_simply_laced());
    c.push((
        rrs.is_exceptional() == (laced && !rrs.is_reduced()),
        "exceptional ≠ simply laced and non-reduced".into(),
    ));

    if rs.is_simple() {
        let theta = rs.highest_root();
        let st = inv.sigma(&theta);
        if st != -&theta {
            let p = rs.pair_root(&theta, &st);
            c.push((p.is_zero(), format!("<Θ^∨, σΘ> = {p}")));
            c.push((!rs.is_root(&(&theta + &st)) && !rs.is_root(&(&theta - &st)), "Θ, -σΘ not strongly orthogonal".into()));
            let perp = orthogonal_simple_nodes(rs, &theta);
            let sub = crate::dynkin::recognize_all(rs.cartan(), &perp.iter().copied().collect::<Vec<_>>());
            let ms = -&st;
            let is_top = match sub {
                Ok(comps) => comps.iter().any(|comp| {
                    let nodes: std::collections::BTreeSet<usize> = comp.nodes.iter().copied().collect();
                    ms.support().is_subset(&nodes)
                        && rs.positive_roots().iter().filter(|r| r.support().is_subset(&nodes)).all(|r| {
                            r.0.iter().zip(&ms.0).all(|(a, b)| a <= b)
                        })
                }),
                Err(_) => false,
            };
            c.push((is_top, "-σΘ is not the highest root of a component of Θ^⊥".into()));
        }
    }

    if !(ty.is_type_a() && ty.rank() == 1) {
        let tbc = rrs.theta_bar_coweight();
        let some_one = rrs.simple_roots().iter().any(|b| rs.pair_coweight(tbc, b) == q(1));
        c.push((some_one, "no ᾱ with <Θ̄^∨, ᾱ> = 1".into()));
        let vals: Vec<Q> = (0..n).map(|i| rs.pair_coweight(&tbc.scale(q(2)), &Weight::simple(n, i))).collect();
        let integral = vals.iter().all(|x| x.is_integer());
        let g = vals.iter().fold(0i64, |g, x| g.gcd(&x.to_integer()));
        c.push((integral && g == 1, format!("2Θ̄^∨ pairs to {vals:?} with the simple roots")));
    }
    c
}

fn curve_conditions(rec: &Record) -> Vec<(bool, String)> {
    let inv = &rec.involution;
    let rrs = &rec.restricted;
    let cc = &rec.curves;
    let rs = inv.root_system();
    let mut c = Vec::new();
    let tb = rrs.theta_bar_coweight();
    for g in cc.minimal_classes() {
        c.push((&cc.psi(rrs, g) == tb, format!("ψ({g:?}) ≠ Θ̄^∨")));
        c.push((g.iter().all(|&x| x >= 0), format!("negative coefficient in {g:?}")));
    }
    let m = cc.minimal_classes();
    if rrs.is_exceptional() {
        let ok = m.len() == 2 && {
            let diff: Vec<usize> = (0..m[0].len()).filter(|&d| m[0][d] != m[1][d]).collect();
            diff.len() == 2 && m[0][diff[0]] == 1 && m[0][diff[1]] == 0 && m[1][diff[0]] == 0 && m[1][diff[1]] == 1
        };
        c.push((ok, format!("exceptional minimal classes {m:?}")));
    } else {
        c.push((m.len() == 1, format!("{} minimal classes", m.len())));
    }

    let theta = cc.theta_curve_class();
    match (rs.opposition(), CocharacterCurve::new(inv, rrs, tb.clone())) {
        (Ok(eps), Ok(curve)) => {
            for (d, col) in cc.colors().iter().enumerate() {
                let deg = curve.degree(&eps, &col.lambda);
                c.push((deg == q(theta[d]), format!("λ_D has degree {deg} on the Θ̄^∨ curve, class gives {}", theta[d])));
            }
            for k in 0..rrs.rank() {
                let beta = &rrs.simple_roots()[k];
                let lam = rs.to_fundamental(beta);
                let deg = curve.degree(&eps, &lam);
                let want = cc.boundary_degree(k, &theta);
                c.push((deg == q(want), format!("boundary divisor {} has degree {deg}, class gives {want}", k + 1)));
            }
        }
        (Err(e), _) | (_, Err(e)) => c.push((false, e.to_string())),
    }
    c
}
