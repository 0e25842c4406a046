//! Everything computed from one catalog instance.

use crate::catalog::Instance;
use crate::curves::CurveClasses;
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::kac::{AffineDiagram, KacDiagram, MarkedSpace};
use crate::names::{Factor, SpaceName};
use crate::restricted::RestrictedRootSystem;
use crate::roots::{CartanType, Family, RootSystem};
use crate::vmrt::VmrtInvariants;

#[derive(Debug, Clone)]
pub struct Record {
    pub instance: Instance,
    pub involution: Involution,
    pub restricted: RestrictedRootSystem,
    pub curves: CurveClasses,
    pub vmrt: VmrtInvariants,
    pub kac: KacDiagram,
    pub marked: Vec<MarkedSpace>,
}

/// The stage at which building a record failed.
#[derive(Debug, Clone)]
pub struct BuildFailure {
    pub stage: &'static str,
    pub error: Error,
}

/// One irreducible component of the VMRT at a general point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VmrtComponent {
    /// Name as computed: from `P(𝔭)`, a marked Kac diagram, or the stored
    /// closed-orbit name for restricted type `A_r`, `r ≥ 2`.
    pub computed: SpaceName,
    pub dimension: usize,
}

fn stage<T>(stage: &'static str, r: Result<T>) -> std::result::Result<T, BuildFailure> {
    r.map_err(|error| BuildFailure { stage, error })
}

impl Record {
    pub fn build(instance: Instance) -> std::result::Result<Record, BuildFailure> {
        let rs = stage("root-system", RootSystem::new(&instance.group))?;
        let involution = stage("satake", Involution::new(rs, instance.satake.clone()))?;
        let restricted = stage("restricted-roots", RestrictedRootSystem::new(&involution))?;
        let curves = stage("curve-classes", CurveClasses::new(&involution, &restricted))?;
        let vmrt = stage("vmrt-invariants", VmrtInvariants::new(&involution, &restricted))?;
        let kac = stage(
            "kac-diagram",
            AffineDiagram::new(instance.kac).and_then(|a| KacDiagram::new(a, instance.white.clone())),
        )?;
        let marked = stage("kac-diagram", kac.marked_spaces())?;
        Ok(Record { instance, involution, restricted, curves, vmrt, kac, marked })
    }

    /// VMRT components: `P(𝔭)` for restricted type `A₁`, the stored closed
    /// orbit for `A_r` with `r ≥ 2`, and otherwise `H·C` read off the
    /// marked Kac diagrams; two of them for Hermitian non-exceptional
    /// spaces, one otherwise.
    pub fn vmrt_components(&self) -> Result<Vec<VmrtComponent>> {
        let ty = self.restricted.restricted_type();
        let one = |name: SpaceName| VmrtComponent { dimension: name.dimension(), computed: name };
        if ty.is_type_a() && ty.rank() == 1 {
            let m = self.vmrt.dim_p as usize - 1;
            let name = if m == 0 {
                SpaceName::point()
            } else {
                let a = CartanType::new(Family::A, m)?;
                SpaceName::new(vec![Factor::new(a, &[1])?])
            };
            return Ok(vec![one(name)]);
        }
        if ty.is_type_a() {
            let stored = self.instance.vmrt.as_ref().ok_or_else(|| {
                Error::Catalog(format!("{}: type A rows need a stored VMRT", self.instance.id()))
            })?;
            return Ok(stored.iter().cloned().map(one).collect());
        }
        let two = self.instance.hermitian && !self.restricted.is_exceptional();
        let take = if two { self.marked.len() } else { 1 };
        Ok(self.marked.iter().take(take).map(|m| one(m.name.clone())).collect())
    }

    /// Stored VMRT names, resolving the `H·C` shorthand.
    pub fn stored_vmrt(&self) -> Vec<SpaceName> {
        match &self.instance.vmrt {
            Some(v) => v.clone(),
            None if self.restricted.is_exceptional() => self.instance.hc.iter().take(1).cloned().collect(),
            None => self.instance.hc.clone(),
        }
    }
}
