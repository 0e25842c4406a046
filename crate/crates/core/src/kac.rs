//! Kac diagrams of involutions and the homogeneous spaces they encode.

use std::collections::BTreeSet;
use std::fmt;

use crate::dynkin::{self, Recognized};
use crate::error::{Error, Result};
use crate::names::{Factor, SpaceName};
use crate::roots::{CartanType, Family, RootSystem, Weight};

/// Which affine diagram carries the Kac coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineKind {
    /// Extended Dynkin diagram of `X_n`.
    Untwisted(CartanType),
    /// Twisted diagram `X_n^(2)` for a simply laced `X_n`.
    Twisted(CartanType),
}

impl fmt::Display for AffineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineKind::Untwisted(t) => write!(f, "{t}~"),
            AffineKind::Twisted(t) => write!(f, "{t}^2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDiagram {
    pub kind: AffineKind,
    /// Generalized Cartan matrix; node 0 is the affine node.
    pub cartan: Vec<Vec<i64>>,
}

fn matrix(nodes: usize, bonds: &[(usize, usize, i64, i64)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; nodes]; nodes];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j, aij, aji) in bonds {
        a[i][j] = aij;
        a[j][i] = aji;
    }
    a
}

impl AffineDiagram {
    pub fn new(kind: AffineKind) -> Result<Self> {
        match kind {
            AffineKind::Untwisted(t) => Self::untwisted(t),
            AffineKind::Twisted(t) => Self::twisted(t),
        }
    }

    /// Adjoins `α₀ = -Θ` to the simple roots.
    pub fn untwisted(ty: CartanType) -> Result<Self> {
        let rs = RootSystem::simple(ty)?;
        let n = rs.rank();
        let neg_theta = -&rs.highest_root();
        let mut a = vec![vec![0; n + 1]; n + 1];
        a[0][0] = 2;
        for j in 0..n {
            let aj = Weight::simple(n, j);
            a[0][j + 1] = rs.pair_root(&neg_theta, &aj).to_integer();
            a[j + 1][0] = rs.pair(j, &neg_theta);
            for k in 0..n {
                a[j + 1][k + 1] = rs.cartan()[j][k];
            }
        }
        Ok(AffineDiagram { kind: AffineKind::Untwisted(ty), cartan: a })
    }

    /// Twisted affine diagrams in the numbering where node 0 is the affine
    /// node: `A_{2l}^(2)`, `A_{2l-1}^(2)`, `D_{l+1}^(2)` and `E_6^(2)`.
    pub fn twisted(ty: CartanType) -> Result<Self> {
        let n = ty.rank;
        let chain = |from: usize, to: usize| (from..to).map(|i| (i, i + 1, -1, -1));
        let (nodes, bonds): (usize, Vec<_>) = match ty.family {
            Family::A if n == 2 => (2, vec![(0, 1, -4, -1)]),
            Family::A if n.is_multiple_of(2) => {
                let l = n / 2;
                let mut b = vec![(0, 1, -2, -1)];
                b.extend(chain(1, l - 1));
                b.push((l - 1, l, -2, -1));
                (l + 1, b)
            }
            Family::A if n == 3 => (3, vec![(0, 2, -2, -1), (1, 2, -2, -1)]),
            Family::A if n >= 5 => {
                let l = n.div_ceil(2);
                let mut b = vec![(0, 2, -1, -1), (1, 2, -1, -1)];
                b.extend(chain(2, l - 1));
                b.push((l - 1, l, -2, -1));
                (l + 1, b)
            }
            Family::D => {
                let l = n - 1;
                let mut b = vec![(0, 1, -2, -1)];
                b.extend(chain(1, l - 1));
                b.push((l - 1, l, -1, -2));
                (l + 1, b)
            }
            Family::E if n == 6 => (5, vec![(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]),
            _ => return Err(Error::Catalog(format!("no twisted affine diagram for {ty}"))),
        };
        Ok(AffineDiagram { kind: AffineKind::Twisted(ty), cartan: matrix(nodes, &bonds) })
    }

    pub fn num_nodes(&self) -> usize {
        self.cartan.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && (self.cartan[i][j] != 0 || self.cartan[j][i] != 0)
    }
}

/// An affine diagram with white nodes; the rest are black.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacDiagram {
    pub affine: AffineDiagram,
    pub white: BTreeSet<usize>,
}

/// The space `H⁰/Q_δ` for a white node `δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSpace {
    pub delta: usize,
    pub name: SpaceName,
}

impl KacDiagram {
    pub fn new(affine: AffineDiagram, white: BTreeSet<usize>) -> Result<Self> {
        if white.is_empty() {
            return Err(Error::Catalog("Kac diagram without white nodes".into()));
        }
        if let Some(w) = white.iter().find(|&&w| w >= affine.num_nodes()) {
            return Err(Error::Catalog(format!("white node {w} out of range")));
        }
        Ok(KacDiagram { affine, white })
    }

    pub fn black(&self) -> Vec<usize> {
        (0..self.affine.num_nodes()).filter(|v| !self.white.contains(v)).collect()
    }

    /// Simple factors of `H⁰`, one per component of the black subdiagram.
    pub fn factors(&self) -> Result<Vec<Recognized>> {
        dynkin::recognize_all(&self.affine.cartan, &self.black())
    }

    /// `H⁰/Q_δ` where `Q_δ` is cut out by the black nodes adjacent to δ.
    pub fn marked_space(&self, delta: usize) -> Result<MarkedSpace> {
        if !self.white.contains(&delta) {
            return Err(Error::Catalog(format!("node {delta} is not white")));
        }
        let mut factors = Vec::new();
        for comp in self.factors()? {
            let crossed: Vec<usize> = comp
                .nodes
                .iter()
                .filter(|&&v| self.affine.adjacent(delta, v))
                .map(|&v| comp.label_of(v).expect("node in component"))
                .collect();
            if !crossed.is_empty() {
                factors.push(Factor::new(comp.ty, &crossed)?);
            }
        }
        Ok(MarkedSpace { delta, name: SpaceName::new(factors) })
    }

    pub fn marked_spaces(&self) -> Result<Vec<MarkedSpace>> {
        self.white.iter().map(|&d| self.marked_space(d)).collect()
    }
}
