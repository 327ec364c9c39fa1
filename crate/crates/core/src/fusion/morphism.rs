use serde::{Deserialize, Serialize};

/// Image vector of a morphism, aligned to the sorted member list of its
/// domain subgroup. Values are element indices of the fusion system's table.
pub type MorphMap = Vec<u32>;

/// A morphism between two objects of a fusion system, identified by object
/// indices into the system's subgroup lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub domain: usize,
    pub codomain: usize,
    pub map: MorphMap,
}
