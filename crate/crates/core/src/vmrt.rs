//! Numerical invariants of the family of minimal rational curves.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{invariant, Result};
use crate::involution::Involution;
use crate::linalg::Q;
use crate::restricted::{RestrictedRootSystem, RestrictedType};
use crate::roots::{Coweight, RootSystem, Weight};

/// Nilpotent orbit of `e_Θ - σ(e_Θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitType {
    /// The minimal orbit, when `σ(Θ) = -Θ`.
    Minimal,
    /// The orbit through `e_Θ + e_{-σ(Θ)}` otherwise.
    SumSigma,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VmrtInvariants {
    /// Sum of positive roots sent to negative roots by σ.
    pub kappa: Weight,
    /// Sum of the restricted simple roots.
    pub sigma_sum: Weight,
    /// `∂X · C`
    pub boundary_degree: i64,
    /// `dim K_x`
    pub dim_family: i64,
    /// `dim G·m`
    pub dim_nilpotent_orbit: i64,
    /// `dim H·C`
    pub dim_hc: i64,
    /// `dim 𝔭`
    pub dim_p: i64,
    pub sigma_theta_is_minus_theta: bool,
    pub orbit_type: OrbitType,
    pub fano: bool,
}

fn integral(v: Q, what: &str) -> Result<i64> {
    invariant!(v.is_integer(), "{what} = {v} is not an integer");
    Ok(v.to_integer())
}

/// Whether σ sends each highest root to minus a highest root. For a simple
/// group this is `σ(Θ) = -Θ`; for `H × H` it compares the two factors.
pub fn sigma_negates_highest_roots(inv: &Involution) -> bool {
    let rs = inv.root_system();
    let highest = rs.highest_roots();
    highest.iter().all(|t| highest.contains(&-&inv.sigma(t)))
}

/// `dim 𝔭 = r + #{α : σα ≠ α}/2`
pub fn dim_p(inv: &Involution, rrs: &RestrictedRootSystem) -> i64 {
    let moved = inv.root_system().roots().filter(|a| inv.sigma(a) != *a).count();
    (rrs.rank() + moved / 2) as i64
}

pub fn kappa(inv: &Involution) -> Weight {
    let rs = inv.root_system();
    rs.positive_roots()
        .iter()
        .filter(|a| !inv.sigma(a).is_nonnegative())
        .fold(Weight::zero(rs.rank()), |acc, a| &acc + a)
}

/// Non-Fano exactly for split restricted types other than A and B whose
/// Satake diagram is all white without arrows.
pub fn is_fano(inv: &Involution, ty: RestrictedType) -> bool {
    let plain = inv.black().is_empty() && (0..inv.rank()).all(|i| inv.satake().diagram[i] == i);
    ty.is_type_a() || ty.is_type_b() || !plain
}

impl VmrtInvariants {
    pub fn new(inv: &Involution, rrs: &RestrictedRootSystem) -> Result<Self> {
        let rs = inv.root_system();
        let tb: &Coweight = rrs.theta_bar_coweight();
        let kappa = kappa(inv);
        let sigma_sum = rrs
            .simple_roots()
            .iter()
            .fold(Weight::zero(rs.rank()), |acc, a| &acc + a);
        let tk = integral(rs.pair_coweight(tb, &kappa), "<Θ̄^∨, κ>")?;
        let boundary_degree = integral(rs.pair_coweight(tb, &sigma_sum), "<Θ̄^∨, Σ>")?;
        let dim_family = tk + boundary_degree - 2;
        let dim_nilpotent_orbit = 2 * tk;
        let dim_hc = tk - 1;
        let st = sigma_negates_highest_roots(inv);
        let ty = rrs.restricted_type();
        Ok(VmrtInvariants {
            kappa,
            sigma_sum,
            boundary_degree,
            dim_family,
            dim_nilpotent_orbit,
            dim_hc,
            dim_p: dim_p(inv, rrs),
            sigma_theta_is_minus_theta: st,
            orbit_type: if st { OrbitType::Minimal } else { OrbitType::SumSigma },
            fano: is_fano(inv, ty),
        })
    }
}

/// Simple roots orthogonal to a dominant Θ; they span `R ∩ Θ^⊥`.
pub fn orthogonal_simple_nodes(rs: &RootSystem, theta: &Weight) -> BTreeSet<usize> {
    (0..rs.rank()).filter(|&i| rs.pair(i, theta) == 0).collect()
}
