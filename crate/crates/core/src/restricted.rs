//! Restricted root systems `R̄ = {α - σ(α)}` and their coroots.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dynkin;
use crate::error::{invariant, Error, Result};
use crate::involution::{Involution, SimpleRootClass};
use crate::linalg::{q, solve, Q};
use crate::roots::{CartanType, Coweight, Family, Weight};

/// Type of a possibly non-reduced irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RestrictedType {
    Reduced(CartanType),
    BC(usize),
}

impl RestrictedType {
    pub fn rank(&self) -> usize {
        match self {
            RestrictedType::Reduced(t) => t.rank,
            RestrictedType::BC(r) => *r,
        }
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self, RestrictedType::Reduced(t) if t.family == Family::A)
    }

    pub fn is_type_b(&self) -> bool {
        matches!(self, RestrictedType::Reduced(t) if t.family == Family::B)
    }

    /// Representative up to isomorphism: `C2 = B2`, `D3 = A3`.
    pub fn canonical(&self) -> RestrictedType {
        match *self {
            RestrictedType::Reduced(CartanType { family: Family::C, rank: 2 }) => {
                RestrictedType::Reduced(CartanType { family: Family::B, rank: 2 })
            }
            RestrictedType::Reduced(CartanType { family: Family::D, rank: 3 }) => {
                RestrictedType::Reduced(CartanType { family: Family::A, rank: 3 })
            }
            other => other,
        }
    }

    pub fn isomorphic(&self, other: &RestrictedType) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for RestrictedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictedType::Reduced(t) => write!(f, "{t}"),
            RestrictedType::BC(r) => write!(f, "BC{r}"),
        }
    }
}

impl FromStr for RestrictedType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("BC") {
            let r: usize = rest
                .trim_start_matches('_')
                .parse()
                .map_err(|_| Error::Input(format!("bad restricted type `{s}`")))?;
            if r == 0 {
                return Err(Error::Input(format!("bad restricted type `{s}`")));
            }
            return Ok(RestrictedType::BC(r));
        }
        // low ranks of B and C are accepted as their isomorphic types
        let mut chars = s.chars();
        let fam = chars.next().and_then(Family::from_letter);
        let rank: Option<usize> = chars.as_str().trim_start_matches('_').parse().ok();
        match (fam, rank) {
            (Some(Family::B | Family::C), Some(1)) => {
                Ok(RestrictedType::Reduced(CartanType { family: Family::A, rank: 1 }))
            }
            (Some(Family::C), Some(2)) => Ok(RestrictedType::Reduced(CartanType { family: Family::C, rank: 2 })),
            _ => Ok(RestrictedType::Reduced(s.parse()?)),
        }
    }
}

/// The restricted coroot attached to a root β by the case formula:
/// `½β^∨` if `σβ = -β`, `½(β^∨ - σ(β)^∨)` if `<β^∨, σβ> = 0` and
/// `β^∨ - σ(β)^∨` if `<β^∨, σβ> = 1`.
pub fn restricted_coroot(inv: &Involution, beta: &Weight) -> Result<Coweight> {
    let rs = inv.root_system();
    let sb = inv.sigma(beta);
    let bc = rs.coroot(beta);
    if sb == -beta {
        return Ok(bc.scale(Q::new(1, 2)));
    }
    let sc = rs.coroot(&sb);
    let c = rs.pair_root(beta, &sb);
    if c.is_zero() {
        Ok((&bc - &sc).scale(Q::new(1, 2)))
    } else if c == q(1) {
        Ok(&bc - &sc)
    } else {
        Err(Error::Invariant(format!("<β^∨, σβ> = {c} for β = {beta}")))
    }
}

#[derive(Debug, Clone)]
pub struct RestrictedRootSystem {
    /// White nodes over each restricted simple root, ordered by smallest node.
    fibers: Vec<Vec<usize>>,
    simple: Vec<Weight>,
    classes: Vec<SimpleRootClass>,
    /// Restricted roots in the basis of restricted simple roots.
    roots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    ty: RestrictedType,
    theta_bar: Vec<i64>,
    theta_bar_coweight: Coweight,
    coroots_hat: Vec<Coweight>,
    theta_expansion: Vec<i64>,
    exceptional: Option<usize>,
}

impl RestrictedRootSystem {
    pub fn new(inv: &Involution) -> Result<Self> {
        let rs = inv.root_system();
        let n = rs.rank();
        // group white nodes by their restricted simple root
        let mut fibers: Vec<Vec<usize>> = Vec::new();
        let mut simple: Vec<Weight> = Vec::new();
        for &a in inv.white() {
            let al = Weight::simple(n, a);
            let bar = &al - &inv.sigma(&al);
            match simple.iter().position(|s| *s == bar) {
                Some(k) => fibers[k].push(a),
                None => {
                    simple.push(bar);
                    fibers.push(vec![a]);
                }
            }
        }
        let r = simple.len();
        invariant!(r > 0, "no white nodes");
        for f in &fibers {
            invariant!(
                f.len() == 1 || (f.len() == 2 && inv.sigma_bar(f[0]) == f[1]),
                "restricted simple root over nodes {f:?} is not a σ̄-orbit"
            );
        }
        let mut classes = Vec::with_capacity(r);
        for f in &fibers {
            classes.push(inv.classify(f[0])?);
        }
        let mut node_to_simple = vec![None; n];
        for (k, f) in fibers.iter().enumerate() {
            for &a in f {
                node_to_simple[a] = Some(k);
            }
        }
        let mut roots = BTreeSet::new();
        for alpha in rs.roots() {
            let bar = &alpha - &inv.sigma(&alpha);
            let mut coords = vec![0i64; r];
            for (i, &c) in alpha.0.iter().enumerate() {
                if let Some(k) = node_to_simple[i] {
                    coords[k] += c;
                }
            }
            let recon = coords
                .iter()
                .enumerate()
                .fold(Weight::zero(n), |acc, (k, &c)| &acc + &(c * &simple[k]));
            invariant!(recon == bar, "restricted root of {alpha} is not Σ c_β β̄");
            invariant!(bar.is_zero() == coords.iter().all(|&c| c == 0), "fixed root with white support");
            if !bar.is_zero() {
                roots.insert(coords);
            }
        }
        let roots: Vec<Vec<i64>> = roots.into_iter().collect();

        let mut cartan = vec![vec![0i64; r]; r];
        for k in 0..r {
            for l in 0..r {
                let v = q(2) * rs.inner(&simple[k], &simple[l]) / rs.norm(&simple[k]);
                invariant!(v.is_integer(), "restricted Cartan entry {v} is not integral");
                cartan[k][l] = v.to_integer();
            }
        }
        let all: Vec<usize> = (0..r).collect();
        let comps = dynkin::recognize_all(&cartan, &all)?;
        invariant!(comps.len() == 1, "restricted root system is reducible");
        let unit = |k: usize| {
            let mut v = vec![0i64; r];
            v[k] = 1;
            v
        };
        let doubled: Vec<usize> = (0..r)
            .filter(|&k| roots.contains(&unit(k).iter().map(|c| 2 * c).collect::<Vec<_>>()))
            .collect();
        let ty = if doubled.is_empty() {
            RestrictedType::Reduced(comps[0].ty)
        } else {
            let red = comps[0].ty;
            invariant!(
                (red.family == Family::B && red.rank == r) || (r == 1 && red.family == Family::A),
                "non-reduced restricted system with reduced part {red}"
            );
            RestrictedType::BC(r)
        };

        let theta_bar = roots
            .iter()
            .find(|m| roots.iter().all(|x| m.iter().zip(x).all(|(a, b)| a >= b)))
            .cloned()
            .ok_or_else(|| Error::Invariant("no dominance-maximal restricted root".into()))?;
        let theta = rs.highest_root();
        let theta_bar_amb = &theta - &inv.sigma(&theta);
        let recon = theta_bar
            .iter()
            .enumerate()
            .fold(Weight::zero(n), |acc, (k, &c)| &acc + &(c * &simple[k]));
        invariant!(recon == theta_bar_amb, "Θ̄ differs from Θ - σ(Θ)");

        let mut coroots_hat = Vec::with_capacity(r);
        for (k, f) in fibers.iter().enumerate() {
            let mut hats = Vec::new();
            for &a in f {
                let c = restricted_coroot(inv, &Weight::simple(n, a))?;
                let c = if classes[k] == SimpleRootClass::Nonreduced { c.scale(Q::new(1, 2)) } else { c };
                hats.push(c);
            }
            invariant!(hats.windows(2).all(|w| w[0] == w[1]), "α̂^∨ depends on the representative");
            coroots_hat.push(hats.swap_remove(0));
        }
        let theta_bar_coweight = restricted_coroot(inv, &theta)?;
        let cols: Vec<Vec<Q>> = coroots_hat.iter().map(|c| c.0.clone()).collect();
        let x = solve(&cols, &theta_bar_coweight.0)
            .ok_or_else(|| Error::Invariant("Θ̄^∨ is not in the span of the α̂^∨".into()))?;
        invariant!(
            x.iter().all(|c| c.is_integer() && *c >= Q::zero()),
            "Θ̄^∨ has coefficients {x:?} over the α̂^∨"
        );
        let theta_expansion = x.iter().map(|c| c.to_integer()).collect();

        let exceptional = inv
            .white()
            .iter()
            .copied()
            .find(|&a| inv.self_pairing(a) == 1 && inv.sigma_bar(a) != a);

        Ok(RestrictedRootSystem {
            fibers,
            simple,
            classes,
            roots,
            cartan,
            ty,
            theta_bar,
            theta_bar_coweight,
            coroots_hat,
            theta_expansion,
            exceptional,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn restricted_type(&self) -> RestrictedType {
        self.ty
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    /// Restricted simple roots `ᾱ` in ambient coordinates.
    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn simple_class(&self, k: usize) -> SimpleRootClass {
        self.classes[k]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.roots.binary_search_by(|r| r.as_slice().cmp(coords)).is_ok()
    }

    /// Ambient vector of a restricted root given in restricted coordinates.
    pub fn ambient(&self, coords: &[i64]) -> Weight {
        let n = self.simple[0].0.len();
        coords
            .iter()
            .enumerate()
            .fold(Weight::zero(n), |acc, (k, &c)| &acc + &(c * &self.simple[k]))
    }

    pub fn theta_bar(&self) -> &[i64] {
        &self.theta_bar
    }

    pub fn theta_bar_ambient(&self) -> Weight {
        self.ambient(&self.theta_bar)
    }

    /// `Θ̄^∨`, from the case formula applied to Θ.
    pub fn theta_bar_coweight(&self) -> &Coweight {
        &self.theta_bar_coweight
    }

    /// `α̂^∨` for each restricted simple root.
    pub fn coroots_hat(&self) -> &[Coweight] {
        &self.coroots_hat
    }

    /// Coefficients of `Θ̄^∨` over the `α̂^∨`.
    pub fn theta_expansion(&self) -> &[i64] {
        &self.theta_expansion
    }

    pub fn is_exceptional(&self) -> bool {
        self.exceptional.is_some()
    }

    /// Smallest white node with `<α^∨, σα> = 1` and `σ̄α ≠ α`.
    pub fn exceptional_witness(&self) -> Option<usize> {
        self.exceptional
    }

    pub fn is_reduced(&self) -> bool {
        !matches!(self.ty, RestrictedType::BC(_))
    }

    /// Pairing of a coweight with a restricted root in restricted coordinates.
    pub fn pair(&self, inv: &Involution, c: &Coweight, coords: &[i64]) -> Q {
        inv.root_system().pair_coweight(c, &self.ambient(coords))
    }
}
