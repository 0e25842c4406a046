//! Acceptance criteria 1-7. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use num_rational::Ratio;
use wonderful_core::catalog::{Catalog, Instance, Params, EMBEDDED};
use wonderful_core::record::Record;
use wonderful_core::restricted::RestrictedType;
use wonderful_core::validate::validate;
use wonderful_core::{Coweight, Involution, RootSystem, Weight};

type Q = Ratio<i64>;

fn wonderful(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wonderful")).args(args).output().expect("binary runs")
}

fn records(max_rank: usize) -> Vec<Record> {
    Catalog::embedded()
        .enumerate(max_rank)
        .unwrap()
        .into_iter()
        .map(|i| {
            let id = i.id();
            Record::build(i).unwrap_or_else(|f| panic!("{id}: {} {}", f.stage, f.error))
        })
        .collect()
}

fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Family of a table row; the parameter splits of one family share it.
fn family_of(inst: &Instance) -> String {
    match inst.row.as_str() {
        r if r.starts_with("group-") => "Group".into(),
        "AI-1" => "AI".into(),
        r => r.into(),
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

type Outcome = Result<String, String>;

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let out = wonderful(&["check", "--max-rank", "8"]);
    let secs = start.elapsed().as_secs_f64();
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    ensure!(out.status.code() == Some(0), "check exited {:?}:\n{text}", out.status.code());
    ensure!(text.contains("all checks passed"), "check output lacks the summary");
    ensure!(!text.contains("FAIL"), "failures reported:\n{text}");
    let insts = Catalog::embedded().enumerate(8).unwrap();
    let fams: BTreeSet<String> = insts.iter().map(family_of).collect();
    ensure!(fams.len() == 26, "{} families: {fams:?}", fams.len());
    ensure!(insts.len() >= 60, "only {} instances", insts.len());
    for name in ["restricted-type", "exceptional", "sigma-theta", "fano", "boundary-degree", "picard-rank", "vmrt-names", "vmrt-dimension"] {
        let line = text.lines().find(|l| l.starts_with(name)).ok_or(format!("no {name} line"))?;
        ensure!(line.contains(&format!("{} passed", insts.len())), "{line}");
    }
    ensure!(secs < 60.0, "took {secs:.1}s");
    Ok(format!("{} instances, 26 families, 0 failures, {secs:.2}s", insts.len()))
}

fn kappa(inv: &Involution) -> Weight {
    let rs = inv.root_system();
    let mut k = Weight::zero(rs.rank());
    for a in rs.positive_roots() {
        if inv.sigma(a).0.iter().any(|&c| c < 0) {
            k = &k + a;
        }
    }
    k
}

fn sigma_sum(inv: &Involution) -> Weight {
    let rs = inv.root_system();
    let n = rs.rank();
    let distinct: BTreeSet<Weight> = inv
        .white()
        .iter()
        .map(|&i| {
            let a = Weight::simple(n, i);
            &a - &inv.sigma(&a)
        })
        .collect();
    distinct.iter().fold(Weight::zero(n), |acc, w| &acc + w)
}

fn criterion_2() -> Outcome {
    let recs = records(8);
    for r in &recs {
        let id = r.instance.id();
        let rs = r.involution.root_system();
        let tb = r.restricted.theta_bar_coweight();
        let k = rs.pair_coweight(tb, &kappa(&r.involution));
        let s = rs.pair_coweight(tb, &sigma_sum(&r.involution));
        let v = &r.vmrt;
        ensure!(Q::from(v.dim_family) == k + s - 2, "{id}: dim K_x {} vs <Θ̄∨,κ+Σ>-2 = {}", v.dim_family, k + s - 2);
        ensure!(Q::from(v.dim_hc) == k - 1, "{id}: dim H·C {} vs <Θ̄∨,κ>-1 = {}", v.dim_hc, k - 1);
        ensure!(v.dim_family == v.dim_hc + v.boundary_degree - 1, "{id}: dim K_x ≠ dim H·C + ∂X·C - 1");
        ensure!(Q::from(v.boundary_degree) == s, "{id}: ∂X·C {} vs <Θ̄∨,Σ> {s}", v.boundary_degree);
        ensure!(v.dim_nilpotent_orbit % 2 == 0, "{id}: dim G·m odd");
    }
    Ok(format!("{} instances", recs.len()))
}

fn sum_pairing(rs: &RootSystem, c: &Coweight) -> Q {
    rs.positive_roots().iter().map(|a| rs.pair_coweight(c, a)).sum()
}

fn criterion_3() -> Outcome {
    let recs = records(8);
    let (mut min, mut sum) = (0, 0);
    for r in &recs {
        let id = r.instance.id();
        let inv = &r.involution;
        let rs = inv.root_system();
        let highest = rs.highest_roots();
        let minus_theta = highest.iter().all(|t| highest.contains(&-&inv.sigma(t)));
        let got = Q::from(r.vmrt.dim_nilpotent_orbit);
        if minus_theta {
            // 2<Θ∨, ρ> summed over simple factors
            let want: Q = highest.iter().map(|t| sum_pairing(rs, &rs.coroot(t))).sum();
            ensure!(got == want, "{id}: dim G·m {got} vs dim O_min {want}");
            min += 1;
        } else {
            ensure!(rs.is_simple(), "{id}: σ(Θ) ≠ -Θ for a non-simple group");
            let theta = rs.highest_root();
            let h = &rs.coroot(&theta) - &rs.coroot(&inv.sigma(&theta));
            let (mut g1, mut g2) = (0i64, 0i64);
            for a in rs.roots() {
                let g = rs.pair_coweight(&h, &a);
                ensure!(g.is_integer() && g <= Q::from(2) && g >= Q::from(-2), "{id}: grading {g}");
                if g == Q::from(1) {
                    g1 += 1;
                } else if g == Q::from(2) {
                    g2 += 1;
                }
            }
            ensure!(got == Q::from(g1 + 2 * g2), "{id}: dim G·m {got} vs #g(1)+2#g(2) = {}", g1 + 2 * g2);
            sum += 1;
        }
    }
    Ok(format!("{min} instances against O_min, {sum} against the grading"))
}

fn unit2(r: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[k] = 2;
    v
}

fn criterion_4() -> Outcome {
    let recs = records(8);
    for rec in &recs {
        let id = rec.instance.id();
        let inv = &rec.involution;
        let rrs = &rec.restricted;
        let rs = inv.root_system();
        let n = rs.rank();
        let r = rrs.rank();

        let tb = rrs.theta_bar();
        for x in rrs.roots() {
            ensure!(tb.iter().zip(x).all(|(a, b)| a >= b), "{id}: Θ̄ not above {x:?}");
        }
        let w0 = rs.longest_element();
        for j in 0..n {
            let a = Weight::simple(n, j);
            ensure!(w0.apply(&inv.sigma(&a)) == inv.sigma(&w0.apply(&a)), "{id}: w₀σ ≠ σw₀");
        }
        for b in rrs.simple_roots() {
            let p = rs.pair_coweight(&rs.dual(b), b);
            ensure!(p == Q::from(2), "{id}: <ᾱ∨, ᾱ> = {p}");
        }
        let one = inv.white().iter().any(|&a| inv.self_pairing(a) == 1);
        let bc = matches!(rrs.restricted_type(), RestrictedType::BC(_));
        ensure!(bc == one, "{id}: BC = {bc} but some <α∨,σα> = 1 is {one}");
        let doubled = (0..r).filter(|&k| rrs.contains(&unit2(r, k))).count();
        ensure!(doubled <= 1, "{id}: {doubled} doubled simple roots");
        let laced = rs.components().iter().all(|c| c.ty.is_simply_laced());
        ensure!(rrs.is_exceptional() == (laced && bc), "{id}: exceptional ≠ simply laced ∧ non-reduced");

        if rs.is_simple() {
            let theta = rs.highest_root();
            let st = inv.sigma(&theta);
            if st != -&theta {
                let p = rs.pair_root(&theta, &st);
                ensure!(p == Q::from(0), "{id}: <Θ∨, σΘ> = {p}");
                ensure!(!rs.is_root(&(&theta + &st)) && !rs.is_root(&(&theta - &st)), "{id}: Θ, -σΘ not strongly orthogonal");
            }
        }
        let ty = rrs.restricted_type();
        if !(ty.is_type_a() && ty.rank() == 1) {
            let c = rrs.theta_bar_coweight();
            ensure!(
                rrs.simple_roots().iter().any(|b| rs.pair_coweight(c, b) == Q::from(1)),
                "{id}: no ᾱ with <Θ̄∨, ᾱ> = 1"
            );
            let vals: Vec<Q> = (0..n).map(|i| rs.pair_coweight(c, &Weight::simple(n, i)) * 2).collect();
            ensure!(vals.iter().all(|v| v.is_integer()), "{id}: 2Θ̄∨ not integral");
            let g = vals.iter().fold(0i64, |g, v| gcd(g, v.to_integer().abs()));
            ensure!(g == 1, "{id}: 2Θ̄∨ divisible by {g}");
        }
    }
    Ok(format!("{} instances", recs.len()))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_5() -> Outcome {
    let recs = records(8);
    let mut exceptional = 0;
    for rec in &recs {
        let id = rec.instance.id();
        let inv = &rec.involution;
        let rrs = &rec.restricted;
        let cc = &rec.curves;
        let rs = inv.root_system();
        let tb = rrs.theta_bar_coweight();
        let m = cc.minimal_classes();
        for g in m {
            ensure!(g.iter().all(|&x| x >= 0), "{id}: negative class {g:?}");
            let psi = g
                .iter()
                .zip(cc.colors())
                .fold(Coweight::zero(rs.rank()), |acc, (&x, c)| &acc + &rrs.coroots_hat()[c.restricted].scale(Q::from(x)));
            ensure!(&psi == tb, "{id}: ψ({g:?}) ≠ Θ̄∨");
        }
        if rrs.is_exceptional() {
            exceptional += 1;
            ensure!(m.len() == 2, "{id}: {} minimal classes", m.len());
            let diff: Vec<usize> = (0..m[0].len()).filter(|&d| m[0][d] != m[1][d]).collect();
            ensure!(
                diff.len() == 2 && [m[0][diff[0]], m[0][diff[1]], m[1][diff[0]], m[1][diff[1]]] == [1, 0, 0, 1],
                "{id}: classes {m:?}"
            );
        } else {
            ensure!(m.len() == 1, "{id}: {} minimal classes", m.len());
        }
        for (k, b) in rrs.simple_roots().iter().enumerate() {
            for (d, c) in cc.colors().iter().enumerate() {
                let v = rs.pair_coweight(&rrs.coroots_hat()[c.restricted], b);
                ensure!(v.is_integer(), "{id}: boundary pairing {v}");
                ensure!(v.to_integer() == cc.boundary_pairing()[k][d], "{id}: boundary matrix entry ({k},{d})");
            }
        }
        // degree of λ_D on the Θ̄∨ cocharacter curve is <Θ̄∨, λ_D - w₀λ_D>
        let theta = cc.theta_curve_class();
        let want: Vec<i64> = if m.len() == 2 {
            m[0].iter().zip(&m[1]).map(|(a, b)| a + b).collect()
        } else {
            m[0].iter().map(|a| 2 * a).collect()
        };
        ensure!(theta == want, "{id}: Θ̄∨ class {theta:?}, expected {want:?}");
        for (d, c) in cc.colors().iter().enumerate() {
            let mu = lambda_minus_w0_lambda(rs, &c.lambda);
            let deg = rs.pair_coweight(tb, &mu);
            ensure!(deg == Q::from(theta[d]), "{id}: color {d} degree {deg} vs class {}", theta[d]);
        }
    }
    Ok(format!("{} instances, {exceptional} exceptional", recs.len()))
}

/// `λ - w₀λ` in the root basis for `λ = Σ c_j ω_j`. Its coroot pairings
/// are `c_i + c_{ε(i)}`; solve the Cartan system for it.
fn lambda_minus_w0_lambda(rs: &RootSystem, coeffs: &[i64]) -> Weight {
    let n = rs.rank();
    let eps = rs.opposition().unwrap();
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = (0..n).map(|k| Q::from(rs.cartan()[i][k])).collect();
            row.push(Q::from(coeffs[i] + coeffs[eps[i]]));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| m[r][col] != Q::from(0)).unwrap();
        m.swap(p, col);
        let piv = m[col][col];
        for x in m[col].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != col && m[r][col] != Q::from(0) {
                let f = m[r][col];
                for k in 0..=n {
                    let v = m[col][k] * f;
                    m[r][k] -= v;
                }
            }
        }
    }
    assert!((0..n).all(|i| m[i][n].is_integer()), "λ - w₀λ outside the root lattice");
    Weight((0..n).map(|i| m[i][n].to_integer()).collect())
}

fn criterion_6() -> Outcome {
    let cat = Catalog::embedded();
    let anchors: [(&str, Params, [i64; 4], usize); 3] = [
        ("BDII", params(&[("n", 5)]), [2, 3, 6, 2], 1),
        ("AIII", params(&[("n", 4), ("r", 1)]), [1, 2, 6, 2], 2),
        ("Group-A", params(&[("r", 1)]), [2, 2, 4, 1], 1),
    ];
    let mut shown = Vec::new();
    for (label, p, want, families) in anchors {
        let rec = Record::build(cat.instantiate(label, &p).unwrap()).map_err(|f| f.error.to_string())?;
        let v = &rec.vmrt;
        let got = [v.boundary_degree, v.dim_family, v.dim_nilpotent_orbit, v.dim_hc];
        let id = rec.instance.id();
        ensure!(got == want, "{id}: {got:?} ≠ {want:?}");
        ensure!(rec.curves.minimal_classes().len() == families, "{id}: {} minimal families", rec.curves.minimal_classes().len());
        shown.push(format!("{id} {got:?}"));
    }
    let grp = Record::build(cat.instantiate("Group-A", &params(&[("r", 1)])).unwrap()).unwrap();
    ensure!(grp.curves.picard_rank() == 1, "SL₂×SL₂ Picard rank {}", grp.curves.picard_rank());
    Ok(shown.join("; "))
}

fn corrupted(name: &str, from: &str, to: &str, after: &str) -> PathBuf {
    let start = EMBEDDED.find(after).expect("anchor row present");
    let off = EMBEDDED[start..].find(from).expect("line present") + start;
    let text = format!("{}{}{}", &EMBEDDED[..off], to, &EMBEDDED[off + from.len()..]);
    let path = std::env::temp_dir().join(format!("wonderful-{}-{name}.txt", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn criterion_7() -> Outcome {
    let cases = [
        // drop the arrow of SL_4/S(GL_2 x GL_2)
        ("satake", corrupted("satake", "diagram = flip", "diagram = id", "[row AIII-equal]"), "restricted-type"),
        // recolor a Kac node of Sp_2r/GL_r
        ("kac", corrupted("kac", "white = 0, {r}", "white = 0, 1", "[row CI]"), "hc-names"),
    ];
    let mut shown = Vec::new();
    for (what, path, check) in cases {
        let out = wonderful(&["check", "--max-rank", "4", "--catalog", path.to_str().unwrap()]);
        let text = String::from_utf8_lossy(&out.stdout).to_string();
        std::fs::remove_file(&path).ok();
        ensure!(out.status.code() == Some(1), "{what}: exit {:?}", out.status.code());
        ensure!(text.contains(&format!("[{check}]")), "{what}: no failing `{check}` check in\n{text}");
        shown.push(format!("{what} -> [{check}] exit 1"));
    }
    // the same corruption in memory
    let cat = Catalog::embedded();
    let mut inst = cat.instantiate("AIII", &params(&[("n", 4), ("r", 2)])).unwrap();
    inst.satake.diagram = vec![0, 1, 2];
    let res = validate(&inst);
    ensure!(res.iter().any(|c| c.name == "restricted-type" && !c.passed), "in-memory Satake corruption not caught");
    Ok(shown.join("; "))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("table reproduction", criterion_1),
        ("dimension identities", criterion_2),
        ("nilpotent orbit oracle", criterion_3),
        ("restricted root invariants", criterion_4),
        ("curve classes", criterion_5),
        ("regression anchors", criterion_6),
        ("negative controls", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(f) {
            Ok(Ok(msg)) => println!("criterion {} ({name}): PASS - {msg}", i + 1),
            Ok(Err(msg)) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {msg}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - panicked", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
