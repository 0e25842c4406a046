//! The table of irreducible symmetric spaces, loaded from a text file.
//!
//! Each `[row]` record holds one parameter range of a family together with
//! its Satake data, Kac data and the stored classification columns. Several
//! rows may share a label; `instantiate` routes parameters to the first row
//! whose `when` guard holds.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::error::{Error, Result};
use crate::expr::{substitute, Env, Expr};
use crate::involution::SatakeData;
use crate::kac::AffineKind;
use crate::names::{parse_union, SpaceName};
use crate::restricted::RestrictedType;
use crate::roots::{CartanType, Family};

pub const SCHEMA: &str = "wonderful-catalog/1";

/// The catalog shipped with the crate.
pub const EMBEDDED: &str = include_str!("../data/catalog.txt");

pub type Params = BTreeMap<String, i64>;

const KEYS: [&str; 21] = [
    "label", "type", "space", "params", "condition", "when", "rank", "group", "black", "diagram",
    "kac", "white", "restricted", "hc", "vmrt", "embedding", "sigma-theta", "herm", "fano",
    // accepted for forward compatibility, ignored
    "note", "source",
];

const REQUIRED: [&str; 19] = [
    "label", "type", "space", "params", "condition", "when", "rank", "group", "black", "diagram",
    "kac", "white", "restricted", "hc", "vmrt", "embedding", "sigma-theta", "herm", "fano",
];

#[derive(Debug, Clone)]
struct Entry {
    guard: Option<Expr>,
    value: String,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub id: String,
    pub label: String,
    pub params: Vec<String>,
    lets: Vec<(String, Expr)>,
    when: Expr,
    condition: String,
    entries: BTreeMap<String, Vec<Entry>>,
    line: usize,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub version: String,
    rows: Vec<Row>,
}

/// Data of one table row at concrete parameters. Nothing is computed yet.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub row: String,
    pub label: String,
    pub type_label: String,
    pub space: String,
    pub params: Params,
    pub condition: String,
    pub rank: usize,
    pub group: Vec<CartanType>,
    pub satake: SatakeData,
    pub kac: AffineKind,
    /// Affine node indices, 0 being the affine node.
    pub white: BTreeSet<usize>,
    pub restricted: RestrictedType,
    pub hc: Vec<SpaceName>,
    /// `None` when the VMRT is `H·C`.
    pub vmrt: Option<Vec<SpaceName>>,
    pub embedding: String,
    pub sigma_theta: bool,
    pub hermitian: bool,
    pub exceptional: bool,
    pub fano: bool,
}

fn cat_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Catalog(format!("line {line}: {msg}"))
}

fn yes_no(v: &str, what: &str) -> Result<bool> {
    match v {
        "yes" => Ok(true),
        "no" => Ok(false),
        _ => Err(Error::Catalog(format!("{what}: expected yes/no, found `{v}`"))),
    }
}

impl Catalog {
    pub fn embedded() -> Catalog {
        Catalog::parse(EMBEDDED).expect("embedded catalog parses")
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Catalog::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Catalog> {
        let mut schema = None;
        let mut version = None;
        let mut rows: Vec<Row> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if let Some(rest) = t.strip_prefix("[row").and_then(|r| r.strip_suffix(']')) {
                let id = rest.trim();
                if id.is_empty() {
                    return Err(cat_err(line, "row without id"));
                }
                if rows.iter().any(|r| r.id == id) {
                    return Err(cat_err(line, format!("duplicate row `{id}`")));
                }
                rows.push(Row {
                    id: id.to_string(),
                    label: String::new(),
                    params: vec![],
                    lets: vec![],
                    when: Expr::Num(1),
                    condition: String::new(),
                    entries: BTreeMap::new(),
                    line,
                });
                continue;
            }
            if let Some(rest) = t.strip_prefix("let ") {
                let row = rows.last_mut().ok_or_else(|| cat_err(line, "`let` outside a row"))?;
                let (name, e) = rest.split_once('=').ok_or_else(|| cat_err(line, "expected `let x = expr`"))?;
                row.lets.push((name.trim().to_string(), Expr::parse(e).map_err(|e| cat_err(line, e))?));
                continue;
            }
            // a guard may itself contain `=`, so split after its `]`
            let split_from = match (t.find('['), t.find('=')) {
                (Some(b), Some(e)) if b < e => t.find(']').unwrap_or(0),
                _ => 0,
            };
            let eq = t[split_from..]
                .find('=')
                .map(|i| i + split_from)
                .ok_or_else(|| cat_err(line, format!("expected `key = value`, found `{t}`")))?;
            let (key, value) = (&t[..eq], &t[eq + 1..]);
            let (key, value) = (key.trim(), value.trim());
            let Some(row) = rows.last_mut() else {
                match key {
                    "schema" => schema = Some(value.to_string()),
                    "version" => version = Some(value.to_string()),
                    _ => return Err(cat_err(line, format!("unknown header key `{key}`"))),
                }
                continue;
            };
            let (name, guard) = match key.split_once('[') {
                Some((n, g)) => {
                    let g = g.strip_suffix(']').ok_or_else(|| cat_err(line, "unclosed guard"))?;
                    (n.trim(), Some(Expr::parse(g).map_err(|e| cat_err(line, e))?))
                }
                None => (key, None),
            };
            if !KEYS.contains(&name) {
                return Err(cat_err(line, format!("unknown key `{name}`")));
            }
            match name {
                "label" => row.label = value.to_string(),
                "params" => {
                    row.params = value.split(',').map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect()
                }
                "when" => row.when = Expr::parse(value).map_err(|e| cat_err(line, e))?,
                "condition" => row.condition = value.to_string(),
                _ => {}
            }
            row.entries.entry(name.to_string()).or_default().push(Entry { guard, value: value.to_string() });
        }
        match schema.as_deref() {
            Some(SCHEMA) => {}
            other => return Err(Error::Catalog(format!("unsupported schema {other:?}, expected `{SCHEMA}`"))),
        }
        let version = version.ok_or_else(|| Error::Catalog("missing version".into()))?;
        for row in &rows {
            if let Some(k) = REQUIRED.iter().find(|k| !row.entries.contains_key(**k)) {
                return Err(cat_err(row.line, format!("row `{}` lacks `{k}`", row.id)));
            }
        }
        Ok(Catalog { version, rows })
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Family labels in file order, without repetitions.
    pub fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.label.as_str()) {
                out.push(&r.label);
            }
        }
        out
    }

    pub fn instantiate(&self, label: &str, params: &Params) -> Result<Instance> {
        let rows: Vec<&Row> = self.rows.iter().filter(|r| r.label.eq_ignore_ascii_case(label)).collect();
        if rows.is_empty() {
            return Err(Error::Params(format!("unknown family `{label}`; known: {}", self.labels().join(", "))));
        }
        let mut conditions = Vec::new();
        for row in &rows {
            let mut want: Vec<&String> = row.params.iter().collect();
            want.sort();
            let got: Vec<&String> = params.keys().collect();
            if want != got {
                return Err(Error::Params(format!(
                    "{label} takes parameters [{}], got [{}]",
                    row.params.join(", "),
                    params.keys().cloned().collect::<Vec<_>>().join(", ")
                )));
            }
            let env = row.env(params)?;
            if row.when.holds(&env)? {
                return row.build(params, &env);
            }
            conditions.push(if row.condition.is_empty() { "none".to_string() } else { row.condition.clone() });
        }
        let shown: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        Err(Error::Params(format!(
            "{label} with {} violates the condition: {}",
            shown.join(","),
            conditions.join(" or ")
        )))
    }

    /// Every row at every admissible parameter value of ambient rank at
    /// most `max_rank`, in file order and then ascending parameters.
    pub fn enumerate(&self, max_rank: usize) -> Result<Vec<Instance>> {
        if max_rank < 2 {
            return Err(Error::Input(format!("max rank must be at least 2, got {max_rank}")));
        }
        let bound = 2 * max_rank as i64 + 2;
        let mut out = Vec::new();
        for row in &self.rows {
            for values in tuples(row.params.len(), bound) {
                let params: Params = row.params.iter().cloned().zip(values).collect();
                let env = row.env(&params)?;
                if !row.when.holds(&env)? {
                    continue;
                }
                let rank = Expr::parse(row.get("rank", &env)?)?.eval(&env)?;
                if rank >= 1 && rank as usize <= max_rank {
                    out.push(row.build(&params, &env)?);
                }
            }
        }
        Ok(out)
    }
}

impl Row {
    fn env(&self, params: &Params) -> Result<Env> {
        let mut env: Env = params.clone();
        for (name, e) in &self.lets {
            let v = e.eval(&env)?;
            env.insert(name.clone(), v);
        }
        Ok(env)
    }

    /// Value of a key after guards and placeholder substitution.
    fn get(&self, key: &str, env: &Env) -> Result<&str> {
        let entries = self
            .entries
            .get(key)
            .ok_or_else(|| Error::Catalog(format!("row `{}` lacks `{key}`", self.id)))?;
        for e in entries {
            match &e.guard {
                Some(g) if !g.holds(env)? => continue,
                _ => return Ok(&e.value),
            }
        }
        Err(Error::Catalog(format!("row `{}`: no `{key}` entry applies", self.id)))
    }

    fn value(&self, key: &str, env: &Env) -> Result<String> {
        substitute(self.get(key, env)?, env)
    }

    fn build(&self, params: &Params, env: &Env) -> Result<Instance> {
        let ctx = |e: Error| Error::Catalog(format!("row `{}`: {e}", self.id));
        let rank = Expr::parse(self.get("rank", env)?)?.eval(env)?;
        let group = parse_group(&self.value("group", env)?).map_err(ctx)?;
        let n: usize = group.iter().map(|t| t.rank).sum();
        let black = parse_nodes(&self.value("black", env)?, n).map_err(ctx)?;
        let diagram = parse_diagram(&self.value("diagram", env)?, &group).map_err(ctx)?;
        let kac = parse_affine(&self.value("kac", env)?).map_err(ctx)?;
        let white = self
            .value("white", env)?
            .split(',')
            .map(|w| w.trim().parse::<usize>().map_err(|_| Error::Catalog(format!("bad white node `{w}`"))))
            .collect::<Result<BTreeSet<_>>>()
            .map_err(ctx)?;
        let restricted: RestrictedType = self.value("restricted", env)?.parse().map_err(ctx)?;
        let hc = parse_union(&self.value("hc", env)?).map_err(ctx)?;
        let vmrt = match self.value("vmrt", env)?.as_str() {
            "H.C" => None,
            v => Some(parse_union(v).map_err(ctx)?),
        };
        let (hermitian, exceptional) = match self.value("herm", env)?.as_str() {
            "" => (false, false),
            "H.n.e" => (true, false),
            "H.e" => (true, true),
            v => return Err(ctx(Error::Catalog(format!("herm: expected ``, H.n.e or H.e, found `{v}`")))),
        };
        Ok(Instance {
            row: self.id.clone(),
            label: self.label.clone(),
            type_label: self.value("type", env)?,
            space: self.value("space", env)?,
            params: params.clone(),
            condition: self.condition.clone(),
            rank: rank as usize,
            group,
            satake: SatakeData { black, diagram },
            kac,
            white,
            restricted,
            hc,
            vmrt,
            embedding: self.value("embedding", env)?,
            sigma_theta: yes_no(&self.value("sigma-theta", env)?, "sigma-theta")?,
            hermitian,
            exceptional,
            fano: yes_no(&self.value("fano", env)?, "fano")?,
        })
    }
}

impl Instance {
    /// `AIII n=4,r=1` style identifier.
    pub fn id(&self) -> String {
        if self.params.is_empty() {
            return self.label.clone();
        }
        let p: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{} {}", self.label, p.join(","))
    }
}

/// All `k`-tuples over `0..=bound` in lexicographic order.
fn tuples(k: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..k).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..=bound).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect()
    })
}

/// `B{r} x B{r}` after substitution, e.g. `B3 x B3`.
fn parse_group(s: &str) -> Result<Vec<CartanType>> {
    s.split(" x ").map(|t| t.trim().parse()).collect()
}

/// Node list of `a`, `a..b` and `a..b:step` items, 1-based. Empty ranges
/// contribute nothing.
fn parse_nodes(s: &str, n: usize) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| Error::Catalog(format!("bad node `{t}`")));
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (range, step) = match item.split_once(':') {
            Some((r, st)) => (r, num(st)?),
            None => (item, 1),
        };
        let (a, b) = match range.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(range)?, num(range)?),
        };
        if step <= 0 {
            return Err(Error::Catalog(format!("bad step in `{item}`")));
        }
        let mut i = a;
        while i <= b {
            if i < 1 || i as usize > n {
                return Err(Error::Catalog(format!("node {i} out of range 1..{n}")));
            }
            out.insert(i as usize - 1);
            i += step;
        }
    }
    Ok(out)
}

/// The nontrivial automorphism of a simple diagram, if any (`D4` uses the
/// swap of the last two nodes).
fn flip(ty: CartanType) -> Option<Vec<usize>> {
    let n = ty.rank;
    let mut p: Vec<usize> = (0..n).collect();
    match ty.family {
        Family::A if n >= 2 => p.reverse(),
        Family::D => p.swap(n - 2, n - 1),
        Family::E if n == 6 => p = vec![5, 1, 4, 3, 2, 0],
        _ => return None,
    }
    Some(p)
}

fn parse_diagram(s: &str, group: &[CartanType]) -> Result<Vec<usize>> {
    let n: usize = group.iter().map(|t| t.rank).sum();
    match s {
        "id" => Ok((0..n).collect()),
        "flip" => {
            let mut out = Vec::with_capacity(n);
            let mut off = 0;
            for &t in group {
                let p = flip(t).ok_or_else(|| Error::Catalog(format!("{t} has no diagram flip")))?;
                out.extend(p.iter().map(|i| i + off));
                off += t.rank;
            }
            Ok(out)
        }
        "swap" => {
            if group.len() != 2 || group[0] != group[1] {
                return Err(Error::Catalog("swap needs two equal factors".into()));
            }
            let h = group[0].rank;
            Ok((0..n).map(|i| (i + h) % n).collect())
        }
        _ => Err(Error::Catalog(format!("diagram must be id, flip or swap, found `{s}`"))),
    }
}

fn parse_affine(s: &str) -> Result<AffineKind> {
    if let Some(t) = s.strip_suffix('~') {
        return Ok(AffineKind::Untwisted(t.trim().parse()?));
    }
    if let Some(t) = s.strip_suffix("^2") {
        return Ok(AffineKind::Twisted(t.trim().parse()?));
    }
    Err(Error::Catalog(format!("kac must end in `~` or `^2`, found `{s}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(&str, i64)]) -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn node_lists() {
        assert_eq!(parse_nodes("1..5:2", 5).unwrap(), [0, 2, 4].into_iter().collect());
        assert_eq!(parse_nodes("3..2", 5).unwrap(), BTreeSet::new());
        assert_eq!(parse_nodes("1..3:2, 5..6", 6).unwrap(), [0, 2, 4, 5].into_iter().collect());
        assert!(parse_nodes("7", 6).is_err());
    }

    #[test]
    fn routing() {
        let c = Catalog::embedded();
        let aii = c.instantiate("AII", &p(&[("r", 2)])).unwrap();
        assert_eq!(aii.group, vec!["A5".parse().unwrap()]);
        assert_eq!(aii.satake.black, [0, 2, 4].into_iter().collect());
        let eq = c.instantiate("AIII", &p(&[("n", 4), ("r", 2)])).unwrap();
        assert_eq!(eq.row, "AIII-equal");
        let err = c.instantiate("AI", &p(&[("r", 0)])).unwrap_err().to_string();
        assert!(err.contains("r >= 2"), "{err}");
        assert!(c.instantiate("AI", &p(&[("n", 3)])).is_err());
        assert!(c.instantiate("XX", &p(&[])).is_err());
    }

    #[test]
    fn enumeration_bounds() {
        let c = Catalog::embedded();
        assert!(c.enumerate(1).is_err());
        let two: Vec<String> = c.enumerate(2).unwrap().iter().map(Instance::id).collect();
        for want in ["Group-A r=1", "Group-A r=2", "AI r=1", "AI r=2", "BDII n=4", "BDII n=5", "G"] {
            assert!(two.contains(&want.to_string()), "{want} missing from {two:?}");
        }
        let eight = c.enumerate(8).unwrap();
        assert!(eight.len() >= 60, "{}", eight.len());
        assert!(eight.iter().all(|i| i.rank <= 8));
    }

    #[test]
    fn bad_files() {
        assert!(Catalog::parse("schema = other/1\nversion = 1").is_err());
        assert!(Catalog::parse("schema = wonderful-catalog/1\nversion = 1\n[row x]\nlabel = X").is_err());
        assert!(Catalog::parse("schema = wonderful-catalog/1\nversion = 1\n[row x]\nbogus = 1").is_err());
    }
}
