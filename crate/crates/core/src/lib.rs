//! Finite p-group machinery and saturated fusion systems, exhaustively
//! represented: explicit multiplication tables, explicit morphism sets.
//! Everything is bounded, deterministic, and brute-force verifiable.

pub mod bounds;
pub mod error;
pub mod num;
pub mod perm;

pub mod classify;
pub mod fusion;
pub mod group;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use perm::Perm;

pub use group::{
    automorphism_group, build_y, catalog, catalog_names, catalog_table, characteristic_subgroups,
    default_catalog, homomorphisms, is_isomorphic, is_slim, o_p_group, parse_group_json,
    quotient_group, section_free, strongly_p_embedded, subgroup_lattice, sylow, sylow_within,
    CharacteristicSubgroups, GroupMap, GroupTable, Lattice, LocalData, QuotientGroup, Subgroup,
};

pub use fusion::{
    alperin_decompose, alperin_decompose_all, alperin_hosts, check_saturation, classify_subgroups,
    dump_to_json, focal_series, from_dump, local_system, n_phi, o_p, p_length, quotient_system,
    recompose, subgroup_status, to_dump, z_f, Classification, DecompStep, Dump, DumpMorphism,
    FClasses, FocalSeries, FusionSystem, LocalKind, LocalSystem, MorphMap, Morphism,
    SaturationReport, SubgroupStatus, Violation,
};

pub use classify::{
    build_report, closed_subsystem_census, enumerate_subsystems, is_constrained, report_to_json,
    run_catalog_suite, run_theorem_suite, sparseness, Constraint, SearchStats, Sparseness,
    SubsystemCensus, SubsystemWitness, SystemReport, TheoremVerdict,
};
