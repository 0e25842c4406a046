//! Recognition of finite-type Cartan matrices up to relabeling.

use crate::error::{Error, Result};
use crate::roots::{CartanType, Family};

/// A connected finite-type diagram matched to a standard type.
/// `nodes[b]` is the input node playing Bourbaki node `b + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognized {
    pub ty: CartanType,
    pub nodes: Vec<usize>,
}

impl Recognized {
    /// Bourbaki label (1-based) of an input node.
    pub fn label_of(&self, node: usize) -> Option<usize> {
        self.nodes.iter().position(|&n| n == node).map(|b| b + 1)
    }
}

/// Connected components of the diagram restricted to `subset`, each sorted
/// and ordered by smallest node.
pub fn connected_components(cartan: &[Vec<i64>], subset: &[usize]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = subset.to_vec();
    remaining.sort_unstable();
    remaining.dedup();
    let mut out = Vec::new();
    while let Some(&start) = remaining.first() {
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for &u in &remaining {
                if !comp.contains(&u) && (cartan[v][u] != 0 || cartan[u][v] != 0) {
                    comp.push(u);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        remaining.retain(|x| !comp.contains(x));
        out.push(comp);
    }
    out
}

fn candidates(n: usize) -> Vec<CartanType> {
    [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G]
        .into_iter()
        .filter_map(|f| CartanType::new(f, n).ok())
        .collect()
}

fn search(
    std: &[Vec<i64>],
    cartan: &[Vec<i64>],
    nodes: &[usize],
    assign: &mut Vec<usize>,
) -> bool {
    let b = assign.len();
    if b == std.len() {
        return true;
    }
    for &v in nodes {
        if assign.contains(&v) {
            continue;
        }
        let ok = assign
            .iter()
            .enumerate()
            .all(|(b2, &u)| std[b][b2] == cartan[v][u] && std[b2][b] == cartan[u][v]);
        if ok {
            assign.push(v);
            if search(std, cartan, nodes, assign) {
                return true;
            }
            assign.pop();
        }
    }
    false
}

/// Matches a connected set of nodes against the standard types. Among
/// matchings, the lexicographically smallest assignment is returned.
pub fn recognize(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<Recognized> {
    let mut nodes = nodes.to_vec();
    nodes.sort_unstable();
    if nodes.iter().any(|&v| cartan[v][v] != 2) {
        return Err(Error::Invariant("diagonal Cartan entry is not 2".into()));
    }
    for ty in candidates(nodes.len()) {
        let std = ty.cartan_matrix();
        let mut assign = Vec::new();
        if search(&std, cartan, &nodes, &mut assign) {
            return Ok(Recognized { ty, nodes: assign });
        }
    }
    Err(Error::Invariant(format!("nodes {nodes:?} do not form a finite-type diagram")))
}

/// Recognizes every connected component of the diagram on `subset`.
pub fn recognize_all(cartan: &[Vec<i64>], subset: &[usize]) -> Result<Vec<Recognized>> {
    connected_components(cartan, subset)
        .iter()
        .map(|c| recognize(cartan, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_permuted_types() {
        for s in ["A5", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2", "D4"] {
            let ty: CartanType = s.parse().unwrap();
            let a = ty.cartan_matrix();
            let n = a.len();
            // reverse the labels
            let p: Vec<usize> = (0..n).rev().collect();
            let mut b = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..n {
                    b[p[i]][p[j]] = a[i][j];
                }
            }
            let all: Vec<usize> = (0..n).collect();
            let r = recognize(&b, &all).unwrap();
            assert_eq!(r.ty, ty);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(b[r.nodes[i]][r.nodes[j]], a[i][j]);
                }
            }
        }
    }

    #[test]
    fn chain_starts_at_lowest_endpoint() {
        let a = CartanType::new(Family::A, 3).unwrap().cartan_matrix();
        let r = recognize(&a, &[0, 1, 2]).unwrap();
        assert_eq!(r.nodes, vec![0, 1, 2]);
    }

    #[test]
    fn components_split() {
        let a = CartanType::new(Family::A, 5).unwrap().cartan_matrix();
        assert_eq!(connected_components(&a, &[0, 1, 3, 4]), vec![vec![0, 1], vec![3, 4]]);
    }
}
