//! Names of rational homogeneous spaces `G/P`.
//!
//! A factor is a simple type with a set of crossed nodes. Names are printed
//! in classical notation where one exists and compared up to diagram
//! automorphisms and the standard coincidences between low-rank spaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{CartanType, Family, RootSystem};

/// `G/P` for a simple `G`, with `P` given by crossed nodes (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub ty: CartanType,
    pub crossed: Vec<usize>,
}

/// A product of factors; the empty product is a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceName {
    pub factors: Vec<Factor>,
}

/// Output style for names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Unicode,
    Ascii,
}

fn ct(family: Family, rank: usize) -> Result<CartanType> {
    CartanType::new(family, rank).map_err(|e| Error::Name(e.to_string()))
}

impl Factor {
    pub fn new(ty: CartanType, crossed: &[usize]) -> Result<Self> {
        let mut crossed = crossed.to_vec();
        crossed.sort_unstable();
        crossed.dedup();
        if crossed.iter().any(|&c| c == 0 || c > ty.rank) {
            return Err(Error::Name(format!("crossed nodes {crossed:?} out of range for {ty}")));
        }
        Ok(Factor { ty, crossed })
    }

    /// Dimension: positive roots with a crossed node in their support.
    pub fn dimension(&self) -> usize {
        let rs = RootSystem::simple(self.ty).expect("valid type");
        rs.positive_roots()
            .iter()
            .filter(|r| self.crossed.iter().any(|&c| r.0[c - 1] != 0))
            .count()
    }

    fn render(&self, style: Style) -> String {
        let n = self.ty.rank;
        let c = &self.crossed;
        let dual = |s: String| match style {
            Style::Unicode => format!("{s}∨"),
            Style::Ascii => format!("{s}*"),
        };
        let proj = |m: usize| match style {
            Style::Unicode => format!("P{}", superscript(m)),
            Style::Ascii => format!("P^{m}"),
        };
        let quad = |m: usize| match style {
            Style::Unicode => format!("Q{}", subscript(m)),
            Style::Ascii => format!("Q_{m}"),
        };
        if c.is_empty() {
            return proj(0);
        }
        let single = if c.len() == 1 { Some(c[0]) } else { None };
        match (self.ty.family, single) {
            (Family::A, Some(1)) => proj(n),
            (Family::A, Some(k)) if k == n => match style {
                Style::Unicode => dual(format!("({})", proj(n))),
                Style::Ascii => dual(proj(n)),
            },
            (Family::A, Some(k)) if 2 * k <= n + 1 => format!("Gr({k},{})", n + 1),
            (Family::A, Some(k)) => dual(format!("Gr({},{})", n + 1 - k, n + 1)),
            (Family::A, None) if n >= 2 && *c == [1, n] => format!("Flag(1,{n})"),
            (Family::B, Some(1)) => quad(2 * n - 1),
            (Family::B, Some(k)) if k == n && n == 2 => proj(3),
            (Family::B, Some(k)) if k == n && n == 3 => quad(6),
            (Family::B, Some(k)) => format!("OG({k},{})", 2 * n + 1),
            (Family::C, Some(1)) => proj(2 * n - 1),
            (Family::C, Some(k)) if k == n => format!("LG({n},{})", 2 * n),
            (Family::C, Some(k)) => format!("IG({k},{})", 2 * n),
            (Family::D, Some(1)) => quad(2 * n - 2),
            (Family::D, Some(k)) if n == 4 && k >= 3 => quad(6),
            (Family::D, Some(k)) if k + 1 >= n => format!("OG({n},{})", 2 * n),
            (Family::D, Some(k)) => format!("OG({k},{})", 2 * n),
            _ => {
                let list: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("{}/P{}", self.ty, list.join(","))
            }
        }
    }
}

fn superscript(m: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    m.to_string().chars().map(|d| SUP[d as usize - '0' as usize]).collect()
}

fn subscript(m: usize) -> String {
    const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    m.to_string().chars().map(|d| SUB[d as usize - '0' as usize]).collect()
}

/// Rewrites Unicode notation into the ASCII grammar.
fn to_ascii(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        let sup = "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|c| c == ch);
        let sub = "₀₁₂₃₄₅₆₇₈₉".chars().position(|c| c == ch);
        if let Some(d) = sup {
            out.push('^');
            out.push(char::from(b'0' + d as u8));
            while let Some(d) = chars.peek().and_then(|c| "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|x| x == *c)) {
                out.push(char::from(b'0' + d as u8));
                chars.next();
            }
        } else if let Some(d) = sub {
            out.push('_');
            out.push(char::from(b'0' + d as u8));
            while let Some(d) = chars.peek().and_then(|c| "₀₁₂₃₄₅₆₇₈₉".chars().position(|x| x == *c)) {
                out.push(char::from(b'0' + d as u8));
                chars.next();
            }
        } else {
            match ch {
                '×' => out.push_str(" x "),
                '⊔' => out.push_str(" | "),
                '∨' => out.push('*'),
                _ => out.push(ch),
            }
        }
    }
    out
}

fn num(s: &str) -> Result<usize> {
    s.trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .parse()
        .map_err(|_| Error::Name(format!("expected a number, found `{s}`")))
}

fn pair_args(s: &str, head: &str) -> Option<(String, bool)> {
    let rest = s.strip_prefix(head)?.strip_prefix('(')?;
    let (inner, tail) = rest.split_once(')')?;
    Some((inner.to_string(), tail.trim() == "*"))
}

fn two(inner: &str) -> Result<(usize, usize)> {
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::Name(format!("expected two arguments in `{inner}`")))?;
    Ok((num(a)?, num(b)?))
}

/// Parses one factor; may expand into several (`Q_2 = P^1 x P^1`).
fn parse_factor(tok: &str) -> Result<Vec<Factor>> {
    let t = tok.trim();
    let err = || Error::Name(format!("unknown space `{t}`"));
    // (P^n)* is accepted as P^n*
    let t = if t.starts_with("(P") && t.ends_with(")*") {
        format!("{}*", &t[1..t.len() - 2])
    } else {
        t.to_string()
    };
    let t = t.as_str();
    if t == "pt" {
        return Ok(vec![]);
    }
    if let Some(rest) = t.strip_prefix("P^") {
        let (body, dual) = match rest.strip_suffix('*') {
            Some(b) => (b, true),
            None => (rest, false),
        };
        let n = num(body)?;
        if n == 0 {
            // kept as a factor so that `P^0 x P^2` prints back unchanged
            return Ok(vec![Factor::new(ct(Family::A, 1)?, &[])?]);
        }
        let ty = ct(Family::A, n)?;
        return Ok(vec![Factor::new(ty, &[if dual { n } else { 1 }])?]);
    }
    if let Some(rest) = t.strip_prefix("Q_") {
        let k = num(rest)?;
        return match k {
            0 => Err(Error::Name("Q_0 is not connected".into())),
            1 => Ok(vec![Factor::new(ct(Family::A, 1)?, &[1])?]),
            2 => {
                let p1 = Factor::new(ct(Family::A, 1)?, &[1])?;
                Ok(vec![p1.clone(), p1])
            }
            4 => Ok(vec![Factor::new(ct(Family::D, 3)?, &[1])?]),
            k if k % 2 == 1 => Ok(vec![Factor::new(ct(Family::B, k.div_ceil(2))?, &[1])?]),
            k => Ok(vec![Factor::new(ct(Family::D, (k + 2) / 2)?, &[1])?]),
        };
    }
    if let Some((inner, dual)) = pair_args(t, "Gr") {
        let (k, n) = two(&inner)?;
        if k == 0 || k >= n {
            return Err(err());
        }
        let node = if dual { n - k } else { k };
        return Ok(vec![Factor::new(ct(Family::A, n - 1)?, &[node])?]);
    }
    if let Some((inner, false)) = pair_args(t, "OG") {
        let (k, n) = two(&inner)?;
        if n % 2 == 1 {
            return Ok(vec![Factor::new(ct(Family::B, (n - 1) / 2)?, &[k])?]);
        }
        let m = n / 2;
        return Ok(vec![Factor::new(ct(Family::D, m)?, &[k])?]);
    }
    if let Some((inner, false)) = pair_args(t, "IG") {
        let (k, n) = two(&inner)?;
        if n % 2 == 1 {
            return Err(err());
        }
        if n == 2 {
            return Ok(vec![Factor::new(ct(Family::A, 1)?, &[1])?]);
        }
        return Ok(vec![Factor::new(ct(Family::C, n / 2)?, &[k])?]);
    }
    if let Some((inner, false)) = pair_args(t, "LG") {
        let (k, n) = two(&inner)?;
        if n != 2 * k {
            return Err(err());
        }
        if k == 1 {
            return Ok(vec![Factor::new(ct(Family::A, 1)?, &[1])?]);
        }
        return Ok(vec![Factor::new(ct(Family::C, k)?, &[k])?]);
    }
    if let Some((inner, false)) = pair_args(t, "Flag") {
        let (one, r) = two(&inner)?;
        if one != 1 || r < 2 {
            return Err(err());
        }
        return Ok(vec![Factor::new(ct(Family::A, r)?, &[1, r])?]);
    }
    if let Some((ty, nodes)) = t.split_once("/P") {
        let ty: CartanType = ty.parse().map_err(|_| err())?;
        let nodes: Vec<usize> = nodes.split(',').map(num).collect::<Result<_>>()?;
        return Ok(vec![Factor::new(ty, &nodes)?]);
    }
    Err(err())
}

/// Diagram automorphisms of a simple type, as permutations of 1..=n.
fn automorphisms(ty: CartanType) -> Vec<Vec<usize>> {
    let n = ty.rank;
    let id: Vec<usize> = (0..=n).collect();
    let mut out = vec![id.clone()];
    match ty.family {
        Family::A if n >= 2 => out.push((0..=n).map(|i| if i == 0 { 0 } else { n + 1 - i }).collect()),
        Family::D if n == 4 => {
            for p in [[1, 4, 3], [3, 1, 4], [3, 4, 1], [4, 1, 3], [4, 3, 1]] {
                let mut v = id.clone();
                v[1] = p[0];
                v[3] = p[1];
                v[4] = p[2];
                out.push(v);
            }
        }
        Family::D => {
            let mut v = id.clone();
            v.swap(n - 1, n);
            out.push(v);
        }
        Family::E if n == 6 => out.push(vec![0, 6, 2, 5, 4, 3, 1]),
        _ => {}
    }
    out
}

/// Rewrites a factor into a canonical representative of its isomorphism
/// class as a variety.
fn normalize(f: &Factor) -> Vec<Factor> {
    let n = f.ty.rank;
    let single = if f.crossed.len() == 1 { Some(f.crossed[0]) } else { None };
    let mk = |fam, rank, crossed: &[usize]| Factor::new(CartanType { family: fam, rank }, crossed).expect("valid");
    if f.crossed.is_empty() {
        return vec![];
    }
    let next = match (f.ty.family, single) {
        (Family::C, Some(k)) if n == 2 => Some(mk(Family::B, 2, &[3 - k])),
        (Family::C, Some(1)) => Some(mk(Family::A, 2 * n - 1, &[1])),
        (Family::B, Some(k)) if k == n => Some(mk(Family::D, n + 1, &[n + 1])),
        (Family::D, _) if n == 3 => {
            let map = [0, 2, 1, 3];
            let c: Vec<usize> = f.crossed.iter().map(|&k| map[k]).collect();
            Some(mk(Family::A, 3, &c))
        }
        (Family::G, Some(1)) => Some(mk(Family::B, 3, &[1])),
        _ => None,
    };
    if let Some(g) = next {
        return normalize(&g);
    }
    let best = automorphisms(f.ty)
        .iter()
        .map(|p| {
            let mut c: Vec<usize> = f.crossed.iter().map(|&k| p[k]).collect();
            c.sort_unstable();
            c
        })
        .min()
        .expect("identity present");
    vec![Factor { ty: f.ty, crossed: best }]
}

impl SpaceName {
    pub fn point() -> Self {
        SpaceName { factors: vec![] }
    }

    pub fn new(factors: Vec<Factor>) -> Self {
        SpaceName { factors }
    }

    pub fn dimension(&self) -> usize {
        self.factors.iter().map(Factor::dimension).sum()
    }

    /// Comparison key: normalized factors as a sorted multiset.
    pub fn key(&self) -> Vec<Factor> {
        let mut k: Vec<Factor> = self.factors.iter().flat_map(normalize).collect();
        k.sort();
        k
    }

    pub fn isomorphic(&self, other: &SpaceName) -> bool {
        self.key() == other.key()
    }

    pub fn render(&self, style: Style) -> String {
        if self.factors.is_empty() {
            return "pt".into();
        }
        let sep = match style {
            Style::Unicode => "×",
            Style::Ascii => " x ",
        };
        self.factors.iter().map(|f| f.render(style)).collect::<Vec<_>>().join(sep)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let a = to_ascii(s);
        let mut factors = Vec::new();
        for tok in a.split(" x ") {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::Name(format!("empty factor in `{s}`")));
            }
            factors.extend(parse_factor(tok)?);
        }
        Ok(SpaceName { factors })
    }
}

impl fmt::Display for SpaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Unicode))
    }
}

/// Parses `A | B | ...` into its components.
pub fn parse_union(s: &str) -> Result<Vec<SpaceName>> {
    to_ascii(s).split(" | ").map(SpaceName::parse).collect()
}

pub fn render_union(parts: &[SpaceName], style: Style) -> String {
    let sep = match style {
        Style::Unicode => " ⊔ ",
        Style::Ascii => " | ",
    };
    parts.iter().map(|p| p.render(style)).collect::<Vec<_>>().join(sep)
}

/// Multiset comparison of two disjoint unions up to isomorphism.
pub fn unions_isomorphic(a: &[SpaceName], b: &[SpaceName]) -> bool {
    let mut ka: Vec<_> = a.iter().map(SpaceName::key).collect();
    let mut kb: Vec<_> = b.iter().map(SpaceName::key).collect();
    ka.sort();
    kb.sort();
    ka == kb
}

/// Renders a restricted-root type label such as `BC₂` or `A2`.
pub fn render_type(label: &str, style: Style) -> String {
    match style {
        Style::Ascii => label.to_string(),
        Style::Unicode => {
            let split = label.find(|c: char| c.is_ascii_digit()).unwrap_or(label.len());
            let (head, digits) = label.split_at(split);
            let d: usize = digits.parse().unwrap_or(0);
            if digits.is_empty() {
                head.to_string()
            } else {
                format!("{head}{}", subscript(d))
            }
        }
    }
}
