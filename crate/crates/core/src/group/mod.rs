pub mod catalog;
pub mod homs;
pub mod input;
pub mod lattice;
pub mod special;
pub mod subgroup;
pub mod table;

pub use catalog::{catalog, catalog_names, catalog_table, default_catalog};
pub use homs::{automorphism_group, homomorphisms, is_isomorphic, GroupMap};
pub use input::parse_group_json;
pub use lattice::{subgroup_lattice, Lattice};
pub use special::{
    build_y, characteristic_subgroups, is_slim, o_p_group, quotient_group, section_free,
    strongly_p_embedded, sylow, sylow_within, CharacteristicSubgroups, QuotientGroup,
};
pub use subgroup::{LocalData, Subgroup};
pub use table::GroupTable;
