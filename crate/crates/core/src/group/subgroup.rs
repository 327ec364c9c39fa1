use serde::{Deserialize, Serialize};

use crate::group::table::GroupTable;

/// Sorted element indices into an ambient GroupTable. Always contains 0
/// (the identity) and is closed under the ambient multiplication when built
/// through the constructors here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    pub members: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Position of x in the sorted member list.
    pub fn position(&self, x: u32) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }
}

pub struct LocalData {
    pub normalizer: Subgroup,
    pub centralizer: Subgroup,
    pub center_of_q: Subgroup,
}

impl GroupTable {
    pub fn subgroup(&self, seed: &[u32]) -> Subgroup {
        Subgroup {
            members: self.closure_members(seed),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order() as u32).collect(),
        }
    }

    /// Membership-only check: sorted, in range, closed, contains identity.
    pub fn is_subgroup(&self, s: &Subgroup) -> bool {
        if s.members.is_empty() || s.members[0] != 0 {
            return false;
        }
        if s.members.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if s.members.iter().any(|&m| m as usize >= self.order()) {
            return false;
        }
        for &a in &s.members {
            for &b in &s.members {
                if !s.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn conjugate_subgroup(&self, q: &Subgroup, g: u32) -> Subgroup {
        let mut members: Vec<u32> = q.members.iter().map(|&m| self.conj(m, g)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// {u in within : Q^u = Q}.
    pub fn normalizer(&self, q: &Subgroup, within: &Subgroup) -> Subgroup {
        let members = within
            .members
            .iter()
            .copied()
            .filter(|&u| q.members.iter().all(|&m| q.contains(self.conj(m, u))))
            .collect();
        Subgroup { members }
    }

    /// {u in within : uq = qu for all q in Q}.
    pub fn centralizer(&self, q: &Subgroup, within: &Subgroup) -> Subgroup {
        let members = within
            .members
            .iter()
            .copied()
            .filter(|&u| q.members.iter().all(|&m| self.mul(u, m) == self.mul(m, u)))
            .collect();
        Subgroup { members }
    }

    pub fn local_data(&self, q: &Subgroup, within: &Subgroup) -> LocalData {
        let normalizer = self.normalizer(q, within);
        let centralizer = self.centralizer(q, within);
        let center_of_q = self.intersect(q, &centralizer);
        LocalData {
            normalizer,
            centralizer,
            center_of_q,
        }
    }

    pub fn is_normal_in(&self, q: &Subgroup, within: &Subgroup) -> bool {
        within
            .members
            .iter()
            .all(|&u| q.members.iter().all(|&m| q.contains(self.conj(m, u))))
    }

    pub fn intersect(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let members = a
            .members
            .iter()
            .copied()
            .filter(|&m| b.contains(m))
            .collect();
        Subgroup { members }
    }

    /// Subgroup generated by the union; equals the set product QR whenever
    /// one factor normalizes the other.
    pub fn product(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut seed = a.members.clone();
        seed.extend_from_slice(&b.members);
        self.subgroup(&seed)
    }

    pub fn subgroup_is_abelian(&self, q: &Subgroup) -> bool {
        q.members
            .iter()
            .all(|&a| q.members.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn subgroup_is_cyclic(&self, q: &Subgroup) -> bool {
        q.members
            .iter()
            .any(|&m| self.element_order(m) as usize == q.order())
    }

    pub fn subgroup_derived_members(&self, q: &Subgroup) -> Subgroup {
        let mut comms: Vec<u32> = Vec::new();
        for &x in &q.members {
            for &y in &q.members {
                comms.push(self.commutator(x, y));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup(&comms)
    }
}
