use std::collections::{HashMap, HashSet, VecDeque};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::subgroup::Subgroup;
use crate::group::table::GroupTable;

/// Every subgroup of `within`, with the conjugation-orbit partition under
/// `within` and per-subgroup normality flags. Subgroups are sorted by
/// (order, member list), so the trivial subgroup is first and `within` last.
#[derive(Debug, Clone)]
pub struct Lattice {
    pub subgroups: Vec<Subgroup>,
    index: HashMap<Vec<u32>, usize>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub normal: Vec<bool>,
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn index_of(&self, members: &[u32]) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Maximal proper subgroups of `within`.
    pub fn maximal_indices(&self) -> Vec<usize> {
        let n = self.subgroups.len();
        let top = n - 1;
        (0..n)
            .filter(|&i| {
                i != top
                    && (0..n).all(|j| {
                        j == i
                            || j == top
                            || !self.subgroups[i].is_subset_of(&self.subgroups[j])
                            || self.subgroups[i].order() == self.subgroups[j].order()
                    })
            })
            .collect()
    }
}

/// Cyclic-extension enumeration: start from the trivial subgroup and keep
/// extending every known subgroup by one element until nothing new appears.
/// Complete because any H = <x1,...,xk> is reached by the chain of
/// one-element extensions <x1>, <x1,x2>, ...
pub fn subgroup_lattice(t: &GroupTable, within: &Subgroup, bounds: &Bounds) -> Result<Lattice> {
    if within.order() > bounds.max_enumeration {
        return Err(Error::OrderBoundExceeded {
            bound: bounds.max_enumeration,
        });
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
    let trivial = vec![0u32];
    seen.insert(trivial.clone());
    queue.push_back(trivial);
    while let Some(h) = queue.pop_front() {
        let hs = Subgroup { members: h.clone() };
        for &g in &within.members {
            if hs.contains(g) {
                continue;
            }
            let mut seed = h.clone();
            seed.push(g);
            let k = t.closure_members(&seed);
            if !seen.contains(&k) {
                seen.insert(k.clone());
                queue.push_back(k);
            }
        }
    }

    let mut subgroups: Vec<Subgroup> = seen
        .into_iter()
        .map(|members| Subgroup { members })
        .collect();
    subgroups.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    let index: HashMap<Vec<u32>, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members.clone(), i))
        .collect();

    // Conjugation orbits under `within`; a conjugate of a subgroup must be in
    // the lattice, so a failed lookup means the enumeration is incomplete.
    let n = subgroups.len();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut Vec<usize>, mut i: usize) -> usize {
        while root[i] != i {
            root[i] = root[root[i]];
            i = root[i];
        }
        i
    }
    for i in 0..n {
        for &g in &within.members {
            let conj = t.conjugate_subgroup(&subgroups[i], g);
            let j = index
                .get(&conj.members)
                .copied()
                .ok_or_else(|| Error::InternalInvariant("conjugate subgroup not enumerated".into()))?;
            let (ri, rj) = (find(&mut root, i), find(&mut root, j));
            if ri != rj {
                root[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut class_map: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0usize; n];
    for i in 0..n {
        let r = find(&mut root, i);
        let c = *class_map.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[i] = c;
        classes[c].push(i);
    }
    let normal: Vec<bool> = (0..n).map(|i| classes[class_of[i]].len() == 1).collect();

    Ok(Lattice {
        subgroups,
        index,
        class_of,
        classes,
        normal,
    })
}
