pub mod alperin;
pub mod dump;
pub mod focal;
pub mod local;
pub mod morphism;
pub mod quotient;
pub mod saturation;
pub mod status;
pub mod system;

pub use alperin::{alperin_decompose, alperin_decompose_all, alperin_hosts, recompose, DecompStep};
pub use dump::{dump_to_json, from_dump, to_dump, Dump, DumpMorphism};
pub use focal::{focal_series, FocalSeries};
pub use local::{local_system, LocalKind, LocalSystem};
pub use morphism::{MorphMap, Morphism};
pub use quotient::{p_length, quotient_system};
pub use saturation::{check_saturation, n_phi, SaturationReport, Violation};
pub use status::{classify_subgroups, o_p, subgroup_status, z_f, Classification, SubgroupStatus};
pub use system::{FClasses, FusionSystem};
