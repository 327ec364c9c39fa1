use std::collections::BTreeSet;

use fusionkit::{GroupTable, Subgroup};

/// Every function from q to r checked against the homomorphism equation by
/// sheer enumeration. Returns the image vectors (aligned with q.members)
/// sorted, so the result can be compared verbatim with the searcher.
pub fn brute_force_homs(
    t: &GroupTable,
    q: &Subgroup,
    r: &Subgroup,
    injective_only: bool,
) -> Vec<Vec<u32>> {
    let n = q.order();
    let k = r.order();
    let mut choice = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        let images: Vec<u32> = choice.iter().map(|&c| r.members[c]).collect();
        if (!injective_only || distinct(&images)) && respects_products(t, q, &images) {
            out.push(images);
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            choice[i] += 1;
            if choice[i] < k {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn distinct(images: &[u32]) -> bool {
    let set: BTreeSet<u32> = images.iter().copied().collect();
    set.len() == images.len()
}

fn respects_products(t: &GroupTable, q: &Subgroup, images: &[u32]) -> bool {
    for (i, &a) in q.members.iter().enumerate() {
        for (j, &b) in q.members.iter().enumerate() {
            let ab = t.mul(a, b);
            let k = q.members.binary_search(&ab).expect("subgroup is closed");
            if t.mul(images[i], images[j]) != images[k] {
                return false;
            }
        }
    }
    true
}

/// Commutator subgroup computed from scratch: all commutators, then a
/// fixed-point closure under multiplication using only the raw table.
pub fn derived_members(t: &GroupTable) -> BTreeSet<u32> {
    let n = t.order() as u32;
    let mut set = BTreeSet::new();
    for g in 0..n {
        for h in 0..n {
            let c = t.mul(t.mul(t.inv(g), t.inv(h)), t.mul(g, h));
            set.insert(c);
        }
    }
    loop {
        let mut grew = false;
        let snapshot: Vec<u32> = set.iter().copied().collect();
        for &a in &snapshot {
            for &b in &snapshot {
                if set.insert(t.mul(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Members rendered as permutation image arrays, the common language for
/// comparing subgroups across differently indexed tables.
pub fn perm_set(t: &GroupTable, members: &[u32]) -> BTreeSet<Vec<usize>> {
    members
        .iter()
        .map(|&m| t.perm(m).images().to_vec())
        .collect()
}
