//! Serializable summaries of records: per-instance reports and table rows.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::Instance;
use crate::error::Result;
use crate::names::{render_type, render_union, SpaceName, Style};
use crate::record::Record;
use crate::validate::validate_record;
use crate::vmrt::OrbitType;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Table name of the component.
    pub name: String,
    /// Name read off the computation (marked Kac diagram or `P(𝔭)`).
    pub computed: String,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub passed: usize,
    pub failed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub catalog_version: String,
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub row: String,
    pub space: String,
    pub group: String,
    /// 1-based black nodes.
    pub black: Vec<usize>,
    /// Diagram involution as a 1-based permutation.
    pub diagram: Vec<usize>,
    pub restricted_type: String,
    pub rank: usize,
    pub sigma_theta_is_minus_theta: bool,
    pub orbit_type: String,
    pub boundary_degree: i64,
    pub dim_family: i64,
    pub dim_nilpotent_orbit: i64,
    pub dim_hc: i64,
    pub dim_p: i64,
    pub hermitian: bool,
    pub exceptional: bool,
    pub fano: bool,
    pub picard_rank: usize,
    pub minimal_classes: Vec<Vec<i64>>,
    pub hc: String,
    pub vmrt: String,
    pub vmrt_components: Vec<ComponentReport>,
    pub embedding_degree: String,
    pub kac: String,
    pub kac_white: Vec<usize>,
    pub checks: CheckSummary,
}

fn group_name(inst: &Instance) -> String {
    inst.group.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" x ")
}

/// Pairs each computed component with an isomorphic stored name, if any.
fn match_names(computed: &[SpaceName], stored: &[SpaceName]) -> Vec<Option<SpaceName>> {
    let mut free: Vec<Option<&SpaceName>> = stored.iter().map(Some).collect();
    computed
        .iter()
        .map(|c| {
            let slot = free.iter_mut().find(|s| s.is_some_and(|s| s.isomorphic(c)))?;
            slot.take().cloned()
        })
        .collect()
}

impl Report {
    pub fn new(rec: &Record, catalog_version: &str, style: Style) -> Result<Report> {
        let inst = &rec.instance;
        let v = &rec.vmrt;
        let comps = rec.vmrt_components()?;
        let computed: Vec<SpaceName> = comps.iter().map(|c| c.computed.clone()).collect();
        let stored = rec.stored_vmrt();
        let matched = match_names(&computed, &stored);
        let vmrt_components = comps
            .iter()
            .zip(&matched)
            .map(|(c, m)| ComponentReport {
                name: m.as_ref().unwrap_or(&c.computed).render(style),
                computed: c.computed.render(style),
                dimension: c.dimension,
            })
            .collect();
        let checks = validate_record(rec);
        Ok(Report {
            tool_version: TOOL_VERSION.to_string(),
            catalog_version: catalog_version.to_string(),
            family: inst.label.clone(),
            params: inst.params.clone(),
            row: inst.row.clone(),
            space: inst.space.clone(),
            group: group_name(inst),
            black: inst.satake.black.iter().map(|b| b + 1).collect(),
            diagram: inst.satake.diagram.iter().map(|b| b + 1).collect(),
            restricted_type: render_type(&rec.restricted.restricted_type().to_string(), style),
            rank: rec.restricted.rank(),
            sigma_theta_is_minus_theta: v.sigma_theta_is_minus_theta,
            orbit_type: match v.orbit_type {
                OrbitType::Minimal => "O_min",
                OrbitType::SumSigma => "O_sum_sigma",
            }
            .to_string(),
            boundary_degree: v.boundary_degree,
            dim_family: v.dim_family,
            dim_nilpotent_orbit: v.dim_nilpotent_orbit,
            dim_hc: v.dim_hc,
            dim_p: v.dim_p,
            hermitian: inst.hermitian,
            exceptional: rec.restricted.is_exceptional(),
            fano: v.fano,
            picard_rank: rec.curves.picard_rank(),
            minimal_classes: rec.curves.minimal_classes().to_vec(),
            hc: render_union(&inst.hc, style),
            vmrt: render_union(&stored, style),
            vmrt_components,
            embedding_degree: inst.embedding.clone(),
            kac: inst.kac.to_string(),
            kac_white: inst.white.iter().copied().collect(),
            checks: CheckSummary {
                passed: checks.iter().filter(|c| c.passed).count(),
                failed: checks.iter().filter(|c| !c.passed).map(|c| c.name.to_string()).collect(),
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = |k: &str, v: String| s.push_str(&format!("{k:<22}{v}\n"));
        line("family", format!("{} {}", self.family, params.join(",")).trim_end().to_string());
        line("space", self.space.clone());
        line("group", self.group.clone());
        line("black nodes", format!("{:?}", self.black));
        line("diagram", format!("{:?}", self.diagram));
        line("restricted type", self.restricted_type.clone());
        line("rank", self.rank.to_string());
        line("sigma(Theta) = -Theta", yes(self.sigma_theta_is_minus_theta));
        line("orbit", self.orbit_type.clone());
        line("boundary degree", self.boundary_degree.to_string());
        line("dim family", self.dim_family.to_string());
        line("dim nilpotent orbit", self.dim_nilpotent_orbit.to_string());
        line("dim H.C", self.dim_hc.to_string());
        line("dim p", self.dim_p.to_string());
        line("hermitian", yes(self.hermitian));
        line("exceptional", yes(self.exceptional));
        line("fano", yes(self.fano));
        line("picard rank", self.picard_rank.to_string());
        line("minimal classes", format!("{:?}", self.minimal_classes));
        line("H.C", self.hc.clone());
        line("VMRT", self.vmrt.clone());
        for c in &self.vmrt_components {
            line("  component", format!("{} (computed {}, dim {})", c.name, c.computed, c.dimension));
        }
        line("embedding", self.embedding_degree.clone());
        line("Kac diagram", format!("{} white {:?}", self.kac, self.kac_white));
        let status = if self.checks.failed.is_empty() {
            format!("{} passed", self.checks.passed)
        } else {
            format!("{} passed, failed: {}", self.checks.passed, self.checks.failed.join(", "))
        };
        line("checks", status);
        s
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// One line of the classification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub type_label: String,
    pub space: String,
    pub restricted_type: String,
    pub hc: String,
    pub vmrt: String,
    pub embedding: String,
    pub sigma_theta: bool,
    /// `H.n.e`, `H.e` or empty.
    pub herm_exc: String,
    pub fano: bool,
}

impl TableRow {
    /// Computed columns where they are computable, stored names otherwise.
    pub fn new(rec: &Record, style: Style) -> TableRow {
        let inst = &rec.instance;
        let exc = rec.restricted.is_exceptional();
        TableRow {
            family: inst.label.clone(),
            params: inst.params.clone(),
            type_label: inst.type_label.clone(),
            space: inst.space.clone(),
            restricted_type: render_type(&rec.restricted.restricted_type().to_string(), style),
            hc: render_union(&inst.hc, style),
            vmrt: render_union(&rec.stored_vmrt(), style),
            embedding: inst.embedding.clone(),
            sigma_theta: rec.vmrt.sigma_theta_is_minus_theta,
            herm_exc: match (inst.hermitian, exc) {
                (true, true) => "H.e",
                (true, false) => "H.n.e",
                _ => "",
            }
            .to_string(),
            fano: rec.vmrt.fano,
        }
    }

    pub fn header() -> &'static str {
        "Type | params | G/H | R | H.C | VMRT | embedding | sigma(Theta)=-Theta | Herm/Exc | Fano"
    }

    pub fn to_text(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let cells = [
            self.type_label.clone(),
            params.join(","),
            self.space.clone(),
            self.restricted_type.clone(),
            self.hc.clone(),
            self.vmrt.clone(),
            self.embedding.clone(),
            yes(self.sigma_theta),
            self.herm_exc.clone(),
            yes(self.fano),
        ];
        let mut line = cells.join(" | ");
        // empty cells print as `| |`
        while line.contains("|  |") {
            line = line.replace("|  |", "| |");
        }
        line
    }
}
