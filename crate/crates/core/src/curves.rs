//! Colors, the Picard lattice and minimal rational curves.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{invariant, Error, Result};
use crate::involution::{Involution, SimpleRootClass};
use crate::linalg::{q, Q};
use crate::restricted::RestrictedRootSystem;
use crate::roots::{Coweight, Weight};

/// A color: a class of white simple roots under `α ~ -σ(α)` when the two
/// are orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub nodes: Vec<usize>,
    /// Index of the restricted simple root `ᾱ`.
    pub restricted: usize,
    /// The dominant weight `λ_D` in fundamental-weight coordinates.
    pub lambda: Vec<i64>,
}

/// A curve class in coordinates dual to the colors.
pub type CurveClass = Vec<i64>;

#[derive(Debug, Clone)]
pub struct CurveClasses {
    colors: Vec<Color>,
    boundary: Vec<Vec<i64>>,
    minimal: Vec<CurveClass>,
}

pub fn colors(inv: &Involution, rrs: &RestrictedRootSystem) -> Result<Vec<Color>> {
    let rs = inv.root_system();
    let n = rs.rank();
    let mut node_to_simple = vec![None; n];
    for (k, f) in rrs.fibers().iter().enumerate() {
        for &a in f {
            node_to_simple[a] = Some(k);
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &a in inv.white() {
        if seen.contains(&a) {
            continue;
        }
        let mut nodes = vec![a];
        let neg = -&inv.sigma(&Weight::simple(n, a));
        if let Some(b) = (0..n).find(|&b| neg == Weight::simple(n, b)) {
            if b != a && rs.pair(a, &neg) == 0 {
                nodes.push(b);
            }
        }
        nodes.sort_unstable();
        seen.extend(nodes.iter().copied());
        let ks: BTreeSet<_> = nodes.iter().map(|&v| node_to_simple[v]).collect();
        invariant!(ks.len() == 1, "color {nodes:?} spans several restricted roots");
        let restricted = node_to_simple[a].ok_or_else(|| Error::Invariant("black node in a color".into()))?;
        let mut lambda = vec![0i64; n];
        let sb = inv.sigma_bar(a);
        match inv.classify(a)? {
            SimpleRootClass::Real => lambda[a] = 2,
            SimpleRootClass::Orthogonal if neg == Weight::simple(n, sb) => {
                lambda[a] += 1;
                lambda[sb] += 1;
            }
            _ => lambda[a] = 1,
        }
        out.push(Color { nodes, restricted, lambda });
    }
    out.sort_by_key(|c| c.nodes[0]);
    Ok(out)
}

impl CurveClasses {
    pub fn new(inv: &Involution, rrs: &RestrictedRootSystem) -> Result<Self> {
        let rs = inv.root_system();
        let colors = colors(inv, rrs)?;
        let r = rrs.rank();
        let mut boundary = vec![vec![0i64; colors.len()]; r];
        for (k, beta) in rrs.simple_roots().iter().enumerate() {
            for (d, c) in colors.iter().enumerate() {
                let v = rs.pair_coweight(&rrs.coroots_hat()[c.restricted], beta);
                invariant!(v.is_integer(), "boundary pairing {v} is not integral");
                boundary[k][d] = v.to_integer();
            }
        }
        // preimages of Θ̄^∨ among effective classes
        let mut minimal: Vec<CurveClass> = vec![vec![0; colors.len()]];
        for (k, &ck) in rrs.theta_expansion().iter().enumerate() {
            let over: Vec<usize> = (0..colors.len()).filter(|&d| colors[d].restricted == k).collect();
            invariant!(!over.is_empty() && over.len() <= 2, "{} colors over a restricted root", over.len());
            let mut next = Vec::new();
            for g in &minimal {
                if over.len() == 1 {
                    let mut g = g.clone();
                    g[over[0]] = ck;
                    next.push(g);
                } else {
                    for a in (0..=ck).rev() {
                        let mut g = g.clone();
                        g[over[0]] = a;
                        g[over[1]] = ck - a;
                        next.push(g);
                    }
                }
            }
            minimal = next;
        }
        Ok(CurveClasses { colors, boundary, minimal })
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn picard_rank(&self) -> usize {
        self.colors.len()
    }

    /// `M[k][d] = <α̂_D^∨, ᾱ_k>`, the degree of the boundary divisor `X_k`
    /// on the curve dual to color `D`.
    pub fn boundary_pairing(&self) -> &[Vec<i64>] {
        &self.boundary
    }

    /// Classes `γ` with `ψ(γ) = Θ̄^∨`. Two classes exactly in the
    /// exceptional case, the one on the lower node first.
    pub fn minimal_classes(&self) -> &[CurveClass] {
        &self.minimal
    }

    /// `ψ(γ) = Σ γ_D α̂_D^∨`
    pub fn psi(&self, rrs: &RestrictedRootSystem, gamma: &[i64]) -> Coweight {
        let n = rrs.coroots_hat()[0].0.len();
        gamma.iter().zip(&self.colors).fold(Coweight::zero(n), |acc, (&g, c)| {
            &acc + &rrs.coroots_hat()[c.restricted].scale(q(g))
        })
    }

    /// Intersection of the boundary divisor `X_k` with a class.
    pub fn boundary_degree(&self, k: usize, gamma: &[i64]) -> i64 {
        self.boundary[k].iter().zip(gamma).map(|(m, g)| m * g).sum()
    }

    /// Class of the closure of the orbit of a cocharacter through the base
    /// point in the `Θ̄^∨` direction: `2γ₀`, or `γ⁺ + γ⁻` when exceptional.
    pub fn theta_curve_class(&self) -> CurveClass {
        if self.minimal.len() == 2 {
            self.minimal[0].iter().zip(&self.minimal[1]).map(|(a, b)| a + b).collect()
        } else {
            self.minimal[0].iter().map(|a| 2 * a).collect()
        }
    }
}

/// The closure of `η(C*)·x₀` for a cocharacter η.
#[derive(Debug, Clone)]
pub struct CocharacterCurve {
    pub eta: Coweight,
    /// Restricted simple roots with `<η, ᾱ_i> ≠ 0`.
    pub zero_side: BTreeSet<usize>,
    /// Restricted simple roots with `<η, w₀ᾱ_j> ≠ 0`.
    pub infinity_side: BTreeSet<usize>,
    pub is_embedding: bool,
}

impl CocharacterCurve {
    pub fn new(inv: &Involution, rrs: &RestrictedRootSystem, eta: Coweight) -> Result<Self> {
        let rs = inv.root_system();
        let w0 = rs.longest_element();
        let mut zero_side = BTreeSet::new();
        let mut infinity_side = BTreeSet::new();
        let mut is_embedding = false;
        for (k, a) in rrs.simple_roots().iter().enumerate() {
            let v = rs.pair_coweight(&eta, a);
            if !v.is_zero() {
                zero_side.insert(k);
            }
            if v == q(1) {
                is_embedding = true;
            }
            if !rs.pair_coweight(&eta, &w0.apply(a)).is_zero() {
                infinity_side.insert(k);
            }
        }
        Ok(CocharacterCurve { eta, zero_side, infinity_side, is_embedding })
    }

    /// `<η, λ - w₀λ>` for λ in fundamental-weight coordinates, given the
    /// opposition permutation `ε`.
    pub fn degree(&self, opposition: &[usize], lambda: &[i64]) -> Q {
        lambda
            .iter()
            .enumerate()
            .map(|(j, &l)| q(l) * (self.eta.0[j] + self.eta.0[opposition[j]]))
            .sum()
    }
}
