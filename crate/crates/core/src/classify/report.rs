//! One JSON report per system, and the batch runner over a catalog. Field
//! names and order are stable; reports for the same input are byte-stable
//! across runs.

use serde::Serialize;

use crate::bounds::Bounds;
use crate::classify::theorems::{suite_with_context, TheoremVerdict};
use crate::error::Result;
use crate::fusion::quotient::p_length;
use crate::fusion::saturation::check_saturation;
use crate::fusion::system::FusionSystem;
use crate::group::catalog::catalog_table;

#[derive(Debug, Clone, Serialize)]
pub struct SystemReport {
    pub system: String,
    pub p: u64,
    pub saturated: bool,
    pub essential_rank: usize,
    pub sparse: bool,
    pub extremely_sparse: bool,
    pub strict_sparse: bool,
    pub strict_extremely_sparse: bool,
    pub constrained: bool,
    pub o_p_order: usize,
    pub z_f_order: usize,
    pub focal_order: usize,
    pub p_length: Option<u32>,
    pub theorems: Vec<TheoremVerdict>,
}

pub fn build_report(name: &str, f: &FusionSystem, bounds: &Bounds) -> Result<SystemReport> {
    let saturated = check_saturation(f).saturated;
    let (theorems, ctx) = suite_with_context(f, bounds)?;
    Ok(SystemReport {
        system: name.to_string(),
        p: f.p,
        saturated,
        essential_rank: ctx.classification.essential_rank,
        sparse: ctx.sparse.sparse,
        extremely_sparse: ctx.sparse.extremely_sparse,
        strict_sparse: ctx.sparse.strict_sparse,
        strict_extremely_sparse: ctx.sparse.strict_extremely_sparse,
        constrained: ctx.constraint.constrained,
        o_p_order: ctx.o_p.order(),
        z_f_order: ctx.z_f.order(),
        focal_order: ctx.focal.focal.order(),
        p_length: p_length(f, bounds)?,
        theorems,
    })
}

pub fn report_to_json(r: &SystemReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

/// Builds a report per (catalog name, prime) pair, capturing per-entry
/// errors instead of aborting the batch. Output order follows input order.
pub fn run_catalog_suite(
    pairs: &[(String, u64)],
    bounds: &Bounds,
) -> Vec<(String, u64, Result<SystemReport>)> {
    pairs
        .iter()
        .map(|(name, p)| {
            let report = catalog_table(name, bounds)
                .and_then(|g| FusionSystem::from_group(&g, *p, bounds))
                .and_then(|f| build_report(name, &f, bounds));
            (name.clone(), *p, report)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::default_catalog;

    fn system(name: &str, p: u64) -> FusionSystem {
        let g = catalog_table(name, &Bounds::default()).unwrap();
        FusionSystem::from_group(&g, p, &Bounds::default()).unwrap()
    }

    fn report(name: &str, p: u64) -> SystemReport {
        build_report(name, &system(name, p), &Bounds::default()).unwrap()
    }

    #[test]
    fn default_catalog_has_no_met_theorem_failures() {
        let results = run_catalog_suite(&default_catalog(), &Bounds::default());
        assert_eq!(results.len(), default_catalog().len());
        for (name, p, r) in results {
            let r = r.unwrap_or_else(|e| panic!("{name} at {p}: {e}"));
            assert!(r.saturated, "{name} at {p} not saturated");
            for t in &r.theorems {
                assert!(
                    !t.hypotheses_met || t.conclusion_holds,
                    "{name} at {p}: {} met but failed: {}",
                    t.id,
                    t.witness
                );
            }
        }
    }

    #[test]
    fn s4_report_values() {
        let r = report("s4", 2);
        assert!(r.saturated);
        assert_eq!(r.essential_rank, 1);
        assert!(r.sparse && !r.extremely_sparse);
        assert!(!r.strict_sparse);
        assert!(r.constrained);
        assert_eq!(r.o_p_order, 4);
        assert_eq!(r.z_f_order, 1);
        assert_eq!(r.focal_order, 4);
        assert_eq!(r.p_length, Some(2));
        assert_eq!(r.theorems.len(), 10);
    }

    #[test]
    fn pgl27_report_values() {
        let r = report("pgl27", 2);
        assert!(r.saturated);
        assert_eq!(r.essential_rank, 1);
        assert!(r.sparse && !r.extremely_sparse);
        assert!(!r.constrained);
        assert_eq!(r.o_p_order, 1);
        assert_eq!(r.z_f_order, 1);
        assert_eq!(r.p_length, None);
    }

    #[test]
    fn s3_report_values() {
        let r = report("s3", 3);
        assert!(r.sparse && r.extremely_sparse);
        assert!(r.strict_sparse && r.strict_extremely_sparse);
        assert!(r.constrained);
        assert_eq!(r.o_p_order, 3);
        assert_eq!(r.z_f_order, 1);
        assert_eq!(r.focal_order, 3);
        assert_eq!(r.p_length, Some(1));
    }

    #[test]
    fn trivial_report_values() {
        let r = report("d8", 2);
        assert!(r.saturated && !r.sparse && r.constrained);
        assert_eq!(r.essential_rank, 0);
        assert_eq!(r.o_p_order, 8);
        assert_eq!(r.z_f_order, 2);
        assert_eq!(r.focal_order, 2);
        assert_eq!(r.p_length, Some(1));
    }

    #[test]
    fn reports_are_byte_stable() {
        let a = report_to_json(&report("s4", 2));
        let b = report_to_json(&report("s4", 2));
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["system"], "s4");
        assert_eq!(v["theorems"].as_array().unwrap().len(), 10);
    }

    #[test]
    fn empty_catalog_runs_to_an_empty_batch() {
        assert!(run_catalog_suite(&[], &Bounds::default()).is_empty());
    }
}
