//! Lattice involutions built from Satake data.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::roots::{LatticeMap, RootSystem, Weight};

/// Black nodes and the diagram involution of a Satake diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeData {
    pub black: BTreeSet<usize>,
    /// A Dynkin diagram automorphism of order at most two; on white nodes
    /// it gives the arrows.
    pub diagram: Vec<usize>,
}

impl SatakeData {
    pub fn split(rank: usize) -> Self {
        SatakeData { black: BTreeSet::new(), diagram: (0..rank).collect() }
    }
}

/// Classification of a white simple root by `<α^∨, σ(α)>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SimpleRootClass {
    /// `σ(α) = -α`
    Real,
    /// `<α^∨, σ(α)> = 0`
    Orthogonal,
    /// `<α^∨, σ(α)> = 1`
    Nonreduced,
}

#[derive(Debug, Clone)]
pub struct Involution {
    rs: RootSystem,
    satake: SatakeData,
    sigma: LatticeMap,
    white: Vec<usize>,
    sigma_bar: Vec<usize>,
}

fn bad(msg: String) -> Error {
    Error::InconsistentSatake(msg)
}

impl Involution {
    /// Builds `σ = -w_L ∘ τ` and checks that it is the involution of a
    /// Satake diagram.
    pub fn new(rs: RootSystem, satake: SatakeData) -> Result<Self> {
        let n = rs.rank();
        let tau = &satake.diagram;
        if tau.len() != n {
            return Err(bad(format!("diagram involution has {} entries for rank {n}", tau.len())));
        }
        if let Some(&b) = satake.black.iter().find(|&&b| b >= n) {
            return Err(bad(format!("black node {} out of range", b + 1)));
        }
        for i in 0..n {
            if tau[i] >= n || tau[tau[i]] != i {
                return Err(bad("diagram map is not an involutive permutation".into()));
            }
            for j in 0..n {
                if rs.cartan()[tau[i]][tau[j]] != rs.cartan()[i][j] {
                    return Err(bad("diagram map does not preserve the Cartan matrix".into()));
                }
            }
        }
        if satake.black.iter().any(|b| !satake.black.contains(&tau[*b])) {
            return Err(bad("black nodes are not stable under the diagram map".into()));
        }
        let word = rs.longest_subsystem_word(&satake.black);
        let wl = rs.word_map(&word);
        let sigma = LatticeMap::from_columns(
            (0..n).map(|j| -&wl.apply(&Weight::simple(n, tau[j]))).collect(),
        );
        if !sigma.compose(&sigma).is_identity() {
            return Err(bad("σ is not an involution".into()));
        }
        for r in rs.positive_roots() {
            if !rs.is_root(&sigma.apply(r)) {
                return Err(bad(format!("σ sends the root {r} outside the root system")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (Weight::simple(n, i), Weight::simple(n, j));
                if rs.inner(&sigma.apply(&a), &sigma.apply(&b)) != rs.inner(&a, &b) {
                    return Err(bad("σ does not preserve the inner product".into()));
                }
            }
        }
        let white: Vec<usize> = (0..n).filter(|i| !satake.black.contains(i)).collect();
        for &b in &satake.black {
            if sigma.column(b) != &Weight::simple(n, b) {
                return Err(bad(format!("σ moves the black node {}", b + 1)));
            }
        }
        let mut sigma_bar: Vec<usize> = (0..n).collect();
        for &a in &white {
            let m = -sigma.column(a);
            if !m.is_nonnegative() {
                return Err(bad(format!("σ(α_{}) is not a negative root", a + 1)));
            }
            let ones: Vec<usize> =
                white.iter().copied().filter(|&w| m.0[w] != 0).collect();
            if ones.len() != 1 || m.0[ones[0]] != 1 {
                return Err(bad(format!(
                    "-σ(α_{}) does not have a single white node with coefficient 1",
                    a + 1
                )));
            }
            sigma_bar[a] = ones[0];
            if tau[a] != ones[0] {
                return Err(bad(format!(
                    "arrow at node {} disagrees with σ (expected node {})",
                    a + 1,
                    ones[0] + 1
                )));
            }
        }
        // parity condition: <ρ_L^∨, α_i> is an integer for white i fixed by τ
        for &a in white.iter().filter(|&&a| tau[a] == a) {
            let alpha = Weight::simple(n, a);
            let two_rho: Q = rs
                .positive_roots()
                .iter()
                .filter(|b| b.support().is_subset(&satake.black))
                .map(|b| rs.pair_root(b, &alpha))
                .sum();
            if !(two_rho / 2).is_integer() {
                return Err(bad(format!("node {} is fixed by τ but needs an arrow", a + 1)));
            }
        }
        Ok(Involution { rs, satake, sigma, white, sigma_bar })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn satake(&self) -> &SatakeData {
        &self.satake
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn sigma_map(&self) -> &LatticeMap {
        &self.sigma
    }

    pub fn sigma(&self, w: &Weight) -> Weight {
        self.sigma.apply(w)
    }

    /// White nodes, ascending.
    pub fn white(&self) -> &[usize] {
        &self.white
    }

    pub fn black(&self) -> &BTreeSet<usize> {
        &self.satake.black
    }

    /// The permutation `σ̄` of the white nodes; identity on black nodes.
    pub fn sigma_bar(&self, i: usize) -> usize {
        self.sigma_bar[i]
    }

    /// `<α_i^∨, σ(α_i)>`
    pub fn self_pairing(&self, i: usize) -> i64 {
        self.rs.pair(i, self.sigma.column(i))
    }

    pub fn classify(&self, i: usize) -> Result<SimpleRootClass> {
        let n = self.rank();
        if -self.sigma.column(i) == Weight::simple(n, i) {
            return Ok(SimpleRootClass::Real);
        }
        match self.self_pairing(i) {
            0 => Ok(SimpleRootClass::Orthogonal),
            1 => Ok(SimpleRootClass::Nonreduced),
            c => Err(Error::Invariant(format!("<α^∨, σα> = {c} at node {}", i + 1))),
        }
    }

    /// Whether the diagram map exchanges two simple factors.
    pub fn swaps_factors(&self) -> bool {
        self.rs.components().iter().any(|c| {
            let i = c.offset;
            !c.nodes().contains(&self.satake.diagram[i])
        })
    }
}
