//! Root systems of reductive types, in Bourbaki numbering.
//!
//! Weights are integer vectors in the basis of simple roots. Coweights are
//! rational vectors in the basis of simple coroots. Node `i` (0-based) is
//! Bourbaki node `i + 1` inside its simple component.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Cartan type such as `E6` or `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRootSystem(format!(
                "rank {rank} is out of range for type {}",
                family.letter()
            )))
        }
    }

    /// Edges of the Dynkin diagram as `(i, j, a_ij, a_ji)` with 0-based nodes.
    fn bonds(&self) -> Vec<(usize, usize, i64, i64)> {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1, -1, -1));
        match self.family {
            Family::A => chain(n).collect(),
            Family::B => {
                let mut b: Vec<_> = chain(n - 1).collect();
                b.push((n - 2, n - 1, -1, -2));
                b
            }
            Family::C => {
                let mut b: Vec<_> = chain(n - 1).collect();
                b.push((n - 2, n - 1, -2, -1));
                b
            }
            Family::D => {
                let mut b: Vec<_> = chain(n - 1).collect();
                b.push((n - 3, n - 1, -1, -1));
                b
            }
            Family::E => {
                let mut b = vec![(0, 2, -1, -1), (1, 3, -1, -1)];
                b.extend((2..n - 1).map(|i| (i, i + 1, -1, -1)));
                b
            }
            Family::F => vec![(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)],
            Family::G => vec![(0, 1, -3, -1)],
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j, aij, aji) in self.bonds() {
            a[i][j] = aij;
            a[j][i] = aji;
        }
        a
    }

    /// Squared lengths of the simple roots, long roots normalized to 2.
    pub fn simple_norms(&self) -> Vec<Q> {
        let n = self.rank;
        match self.family {
            Family::B => (0..n).map(|i| if i == n - 1 { q(1) } else { q(2) }).collect(),
            Family::C => (0..n).map(|i| if i == n - 1 { q(2) } else { q(1) }).collect(),
            Family::F => vec![q(2), q(2), q(1), q(1)],
            Family::G => vec![Q::new(2, 3), q(2)],
            _ => vec![q(2); n],
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Number of roots, from the closed-form count.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => [72, 126, 240][n - 6],
            Family::F => 48,
            Family::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::InvalidRootSystem(format!("unknown type `{s}`")))?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank = digits
            .parse()
            .map_err(|_| Error::InvalidRootSystem(format!("bad rank in `{s}`")))?;
        CartanType::new(family, rank)
    }
}

/// An element of the root lattice, coordinates on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Weight(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_positive_root_like(&self) -> bool {
        self.is_nonnegative() && !self.is_zero()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: &Weight) -> Weight {
        Weight(w.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A rational combination of simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight(pub Vec<Q>);

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(vec![Q::zero(); n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut c = Coweight::zero(n);
        c.0[i] = q(1);
        c
    }

    pub fn scale(&self, s: Q) -> Coweight {
        Coweight(self.0.iter().map(|x| x * s).collect())
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, o: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, o: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An integer linear map of the root lattice. Column `j` is the image of
/// the simple root `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    cols: Vec<Weight>,
}

impl LatticeMap {
    pub fn identity(n: usize) -> Self {
        LatticeMap { cols: (0..n).map(|i| Weight::simple(n, i)).collect() }
    }

    pub fn from_columns(cols: Vec<Weight>) -> Self {
        LatticeMap { cols }
    }

    pub fn column(&self, j: usize) -> &Weight {
        &self.cols[j]
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.cols.len();
        let mut out = vec![0; n];
        for (j, &c) in w.0.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(&self.cols[j].0) {
                    *o += c * x;
                }
            }
        }
        Weight(out)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LatticeMap) -> LatticeMap {
        LatticeMap { cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn negate(&self) -> LatticeMap {
        LatticeMap { cols: self.cols.iter().map(|c| -c).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == LatticeMap::identity(self.cols.len())
    }
}

/// A simple factor of a root system together with its node offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub ty: CartanType,
    pub offset: usize,
}

impl Component {
    pub fn nodes(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.ty.rank
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    norms: Vec<Q>,
    positive: Vec<Weight>,
    index: HashMap<Weight, usize>,
}

impl RootSystem {
    /// Builds the root system of a product of simple types.
    pub fn new(types: &[CartanType]) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::InvalidRootSystem("empty type list".into()));
        }
        for t in types {
            CartanType::new(t.family, t.rank)?;
        }
        let n: usize = types.iter().map(|t| t.rank).sum();
        let mut cartan = vec![vec![0; n]; n];
        let mut norms = Vec::with_capacity(n);
        let mut components = Vec::new();
        let mut offset = 0;
        for t in types {
            let a = t.cartan_matrix();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    cartan[offset + i][offset + j] = a[i][j];
                }
            }
            norms.extend(t.simple_norms());
            components.push(Component { ty: *t, offset });
            offset += t.rank;
        }
        let mut rs = RootSystem { components, cartan, norms, positive: Vec::new(), index: HashMap::new() };
        rs.enumerate_roots();
        for c in &rs.components {
            let count = rs.positive.iter().filter(|r| rs.component_of(r) == Some(c.offset)).count();
            if 2 * count != c.ty.root_count() {
                return Err(Error::Invariant(format!(
                    "{} has {} roots, expected {}",
                    c.ty,
                    2 * count,
                    c.ty.root_count()
                )));
            }
        }
        Ok(rs)
    }

    pub fn simple(ty: CartanType) -> Result<Self> {
        RootSystem::new(&[ty])
    }

    /// Root strings through each known root, processed by height.
    fn enumerate_roots(&mut self) {
        let n = self.rank();
        let mut layer: Vec<Weight> = (0..n).map(|i| Weight::simple(n, i)).collect();
        let mut known: std::collections::HashSet<Weight> = layer.iter().cloned().collect();
        let mut all = Vec::new();
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for beta in &layer {
                for i in 0..n {
                    let ai = Weight::simple(n, i);
                    if *beta == ai {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = beta - &ai;
                    while known.contains(&down) {
                        p += 1;
                        down = &down - &ai;
                    }
                    let qn = p - self.pair(i, beta);
                    if qn > 0 {
                        next.insert(beta + &ai);
                    }
                }
            }
            all.append(&mut layer);
            for w in &next {
                known.insert(w.clone());
            }
            layer = next.into_iter().collect();
        }
        all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        self.index = HashMap::new();
        for (k, r) in all.iter().enumerate() {
            self.index.insert(r.clone(), k);
        }
        let np = all.len();
        for (k, r) in all.iter().enumerate() {
            self.index.insert(-r, np + k);
        }
        self.positive = all;
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared length of simple root `i`.
    pub fn norm_simple(&self, i: usize) -> Q {
        self.norms[i]
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    /// All roots: the positive ones followed by their negatives.
    pub fn roots(&self) -> impl Iterator<Item = Weight> + '_ {
        self.positive.iter().cloned().chain(self.positive.iter().map(|r| -r))
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.index.contains_key(w)
    }

    /// Offset of the simple component containing the support of `w`, if the
    /// support lies in a single component.
    pub fn component_of(&self, w: &Weight) -> Option<usize> {
        let supp = w.support();
        self.components
            .iter()
            .find(|c| !supp.is_empty() && supp.iter().all(|i| c.nodes().contains(i)))
            .map(|c| c.offset)
    }

    /// `<α_i^∨, w>`
    pub fn pair(&self, i: usize, w: &Weight) -> i64 {
        self.cartan[i].iter().zip(&w.0).map(|(a, b)| a * b).sum()
    }

    /// Pairing of a coweight with a weight.
    pub fn pair_coweight(&self, c: &Coweight, w: &Weight) -> Q {
        let mut s = Q::zero();
        for (i, ci) in c.0.iter().enumerate() {
            if !ci.is_zero() {
                s += ci * q(self.pair(i, w));
            }
        }
        s
    }

    /// Invariant inner product with long roots of squared length 2.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Q {
        // 2(α_i, b) = |α_i|^2 <α_i^∨, b>
        let mut s = Q::zero();
        for (i, &ai) in a.0.iter().enumerate() {
            if ai != 0 {
                s += q(ai) * self.norms[i] * q(self.pair(i, b)) / q(2);
            }
        }
        s
    }

    pub fn norm(&self, a: &Weight) -> Q {
        self.inner(a, a)
    }

    /// The coweight `2v/(v,v)`; the coroot when `v` is a root.
    pub fn dual(&self, v: &Weight) -> Coweight {
        let nv = self.norm(v);
        Coweight(v.0.iter().zip(&self.norms).map(|(&c, &n)| q(c) * n / nv).collect())
    }

    pub fn coroot(&self, beta: &Weight) -> Coweight {
        self.dual(beta)
    }

    /// `<β^∨, w>` for a root β.
    pub fn pair_root(&self, beta: &Weight, w: &Weight) -> Q {
        q(2) * self.inner(beta, w) / self.norm(beta)
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let c = self.pair(i, w);
        let mut out = w.clone();
        out.0[i] -= c;
        out
    }

    /// Applies the word `s_{w[0]} s_{w[1]} ... s_{w[k-1]}`, rightmost first.
    pub fn apply_word(&self, word: &[usize], w: &Weight) -> Weight {
        word.iter().rev().fold(w.clone(), |acc, &i| self.reflect(i, &acc))
    }

    pub fn word_map(&self, word: &[usize]) -> LatticeMap {
        let n = self.rank();
        LatticeMap::from_columns((0..n).map(|j| self.apply_word(word, &Weight::simple(n, j))).collect())
    }

    /// Twice the half-sum of the positive roots.
    pub fn rho2(&self) -> Weight {
        self.positive.iter().fold(Weight::zero(self.rank()), |acc, r| &acc + r)
    }

    /// Twice ρ of the subsystem spanned by `nodes`.
    pub fn rho2_of(&self, nodes: &BTreeSet<usize>) -> Weight {
        self.positive
            .iter()
            .filter(|r| r.support().is_subset(nodes))
            .fold(Weight::zero(self.rank()), |acc, r| &acc + r)
    }

    /// Reduced word for the longest element of the parabolic subgroup
    /// generated by `nodes`, found by greedy descent from ρ of the subsystem.
    pub fn longest_subsystem_word(&self, nodes: &BTreeSet<usize>) -> Vec<usize> {
        let mut v = self.rho2_of(nodes);
        let mut word = Vec::new();
        while let Some(&i) = nodes.iter().find(|&&i| self.pair(i, &v) > 0) {
            v = self.reflect(i, &v);
            word.push(i);
        }
        word
    }

    pub fn longest_element(&self) -> LatticeMap {
        let all: BTreeSet<usize> = (0..self.rank()).collect();
        self.word_map(&self.longest_subsystem_word(&all))
    }

    /// The permutation ε with `-w_0(α_j) = α_{ε(j)}`.
    pub fn opposition(&self) -> Result<Vec<usize>> {
        let w0 = self.longest_element();
        let n = self.rank();
        (0..n)
            .map(|j| {
                let img = -w0.column(j);
                (0..n)
                    .find(|&k| img == Weight::simple(n, k))
                    .ok_or_else(|| Error::Invariant("-w0 does not permute simple roots".into()))
            })
            .collect()
    }

    /// Highest root of each simple component, in component order.
    pub fn highest_roots(&self) -> Vec<Weight> {
        self.components
            .iter()
            .map(|c| {
                self.positive
                    .iter()
                    .filter(|r| self.component_of(r) == Some(c.offset))
                    .max_by_key(|r| r.height())
                    .cloned()
                    .expect("component has roots")
            })
            .collect()
    }

    /// Highest short root of each component, `None` when simply laced.
    pub fn highest_short_roots(&self) -> Vec<Option<Weight>> {
        self.components
            .iter()
            .map(|c| {
                if c.ty.is_simply_laced() {
                    return None;
                }
                let long = q(2);
                self.positive
                    .iter()
                    .filter(|r| self.component_of(r) == Some(c.offset) && self.norm(r) < long)
                    .max_by_key(|r| r.height())
                    .cloned()
            })
            .collect()
    }

    /// Highest root of the (first) simple component.
    pub fn highest_root(&self) -> Weight {
        self.highest_roots().swap_remove(0)
    }

    /// Coordinates of a weight in the fundamental-weight basis.
    pub fn to_fundamental(&self, w: &Weight) -> Vec<i64> {
        (0..self.rank()).map(|i| self.pair(i, w)).collect()
    }

    /// Sum over components of `2<Θ^∨, ρ>`, the dimension of the minimal
    /// nilpotent orbit.
    pub fn dim_minimal_orbit(&self) -> i64 {
        let rho2 = self.rho2();
        self.highest_roots()
            .iter()
            .map(|t| {
                let v = self.pair_coweight(&self.coroot(t), &rho2);
                assert!(v.is_integer());
                v.to_integer()
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn small_systems() {
        let a2 = RootSystem::simple(ty("A2")).unwrap();
        assert_eq!(a2.num_roots(), 6);
        assert_eq!(a2.highest_root(), Weight(vec![1, 1]));
        let g2 = RootSystem::simple(ty("G2")).unwrap();
        assert_eq!(g2.highest_root(), Weight(vec![3, 2]));
        assert_eq!(g2.highest_short_roots()[0], Some(Weight(vec![2, 1])));
        let b2 = RootSystem::simple(ty("B2")).unwrap();
        assert_eq!(b2.rho2(), Weight(vec![3, 4]));
        assert_eq!(b2.highest_root(), Weight(vec![1, 2]));
    }

    #[test]
    fn reject_bad_ranks() {
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!("G3".parse::<CartanType>().is_err());
    }

    #[test]
    fn longest_word_lengths() {
        for s in ["A4", "B3", "C4", "D5", "E6", "F4", "G2"] {
            let rs = RootSystem::simple(ty(s)).unwrap();
            let all: BTreeSet<usize> = (0..rs.rank()).collect();
            assert_eq!(rs.longest_subsystem_word(&all).len(), rs.positive_roots().len(), "{s}");
        }
    }
}
