use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fusion::morphism::{MorphMap, Morphism};
use crate::group::lattice::{subgroup_lattice, Lattice};
use crate::group::special::sylow;
use crate::group::subgroup::Subgroup;
use crate::group::table::GroupTable;

/// A fusion system on a finite p-group, stored as the complete set of
/// morphisms. Morphisms are kept by domain only: a stored image vector on Q
/// represents the morphism Q -> R for every object R containing its image.
///
/// `base` is the group the system lives on. It equals the table's full group
/// for systems built by `from_group` and for quotients; local systems
/// (normalizers, centralizers) keep the ambient table and shrink the base, so
/// object indices stay comparable across a system and its subsystems.
#[derive(Debug, Clone)]
pub struct FusionSystem {
    pub p: u64,
    pub table: Arc<GroupTable>,
    pub lattice: Arc<Lattice>,
    /// For each object, the indices of the objects contained in it.
    pub sub_objects: Arc<Vec<Vec<usize>>>,
    pub base: Subgroup,
    pub base_obj: usize,
    maps: Vec<Vec<MorphMap>>,
}

impl FusionSystem {
    /// F_P(G) on P = sylow(G, p): all restrictions of G-conjugations between
    /// subgroups of P, rebuilt over P's own multiplication table.
    pub fn from_group(g: &GroupTable, p: u64, bounds: &Bounds) -> Result<FusionSystem> {
        let s = sylow(g, p);
        let p_table = GroupTable::from_elements(
            s.members.iter().map(|&m| g.perm(m).clone()).collect(),
        )?;
        let mut to_p: HashMap<u32, u32> = HashMap::new();
        for (pi, e) in p_table.elements().iter().enumerate() {
            to_p.insert(g.index_of(e).expect("sylow member in g"), pi as u32);
        }
        let to_g: Vec<u32> = p_table
            .elements()
            .iter()
            .map(|e| g.index_of(e).expect("sylow member in g"))
            .collect();

        let table = Arc::new(p_table);
        let lattice = Arc::new(subgroup_lattice(&table, &table.full_subgroup(), bounds)?);
        let sub_objects = Arc::new(containment(&lattice));
        let base = table.full_subgroup();
        let base_obj = lattice.len() - 1;

        let mut map_sets: Vec<HashSet<MorphMap>> = vec![HashSet::new(); lattice.len()];
        for (qi, q) in lattice.subgroups.iter().enumerate() {
            'conj: for gg in 0..g.order() as u32 {
                let mut images = Vec::with_capacity(q.order());
                for &m in &q.members {
                    let img = g.conj(to_g[m as usize], gg);
                    match to_p.get(&img) {
                        Some(&pi) => images.push(pi),
                        None => continue 'conj,
                    }
                }
                map_sets[qi].insert(images);
            }
        }
        let maps = freeze(map_sets);
        Ok(FusionSystem {
            p,
            table,
            lattice,
            sub_objects,
            base,
            base_obj,
            maps,
        })
    }

    /// The trivial system F_P(P) for a p-group table.
    pub fn trivial_system(t: &GroupTable, p: u64, bounds: &Bounds) -> Result<FusionSystem> {
        if !t.is_p_group(p) {
            return Err(Error::NotAPGroup {
                p,
                order: t.order(),
            });
        }
        Self::from_group(t, p, bounds)
    }

    /// The inner subsystem F_B(B) on a subgroup B of this system's base,
    /// sharing this system's table and object indexing.
    pub fn inner_subsystem(&self, b: &Subgroup) -> FusionSystem {
        assert!(b.is_subset_of(&self.base), "inner base not within base");
        let bi = self
            .lattice
            .index_of(&b.members)
            .expect("inner base is an object");
        let mut map_sets: Vec<HashSet<MorphMap>> = vec![HashSet::new(); self.lattice.len()];
        for &qi in &self.sub_objects[bi] {
            let q = &self.lattice.subgroups[qi];
            for &u in &b.members {
                let images: Vec<u32> =
                    q.members.iter().map(|&m| self.table.conj(m, u)).collect();
                map_sets[qi].insert(images);
            }
        }
        FusionSystem {
            p: self.p,
            table: Arc::clone(&self.table),
            lattice: Arc::clone(&self.lattice),
            sub_objects: Arc::clone(&self.sub_objects),
            base: b.clone(),
            base_obj: bi,
            maps: freeze(map_sets),
        }
    }

    /// An empty morphism table over a fresh group table, base = the whole
    /// group; callers fill maps via `with_maps`.
    pub(crate) fn empty_on(p: u64, table: GroupTable, bounds: &Bounds) -> Result<FusionSystem> {
        let table = Arc::new(table);
        let lattice = Arc::new(subgroup_lattice(&table, &table.full_subgroup(), bounds)?);
        let sub_objects = Arc::new(containment(&lattice));
        let base = table.full_subgroup();
        let base_obj = lattice.len() - 1;
        let maps = vec![Vec::new(); lattice.len()];
        Ok(FusionSystem {
            p,
            table,
            lattice,
            sub_objects,
            base,
            base_obj,
            maps,
        })
    }

    /// Builds a system over the same table from an explicit per-domain map
    /// collection; maps are deduplicated and sorted.
    pub(crate) fn with_maps(&self, base: Subgroup, map_sets: Vec<HashSet<MorphMap>>) -> FusionSystem {
        let base_obj = self
            .lattice
            .index_of(&base.members)
            .expect("base is an object");
        FusionSystem {
            p: self.p,
            table: Arc::clone(&self.table),
            lattice: Arc::clone(&self.lattice),
            sub_objects: Arc::clone(&self.sub_objects),
            base,
            base_obj,
            maps: freeze(map_sets),
        }
    }

    pub fn object_count(&self) -> usize {
        self.lattice.len()
    }

    pub fn object(&self, qi: usize) -> &Subgroup {
        &self.lattice.subgroups[qi]
    }

    pub fn object_index(&self, q: &Subgroup) -> Option<usize> {
        self.lattice.index_of(&q.members)
    }

    /// Object indices lying inside the base, in lattice order.
    pub fn base_objects(&self) -> &[usize] {
        &self.sub_objects[self.base_obj]
    }

    pub fn maps_on(&self, qi: usize) -> &[MorphMap] {
        &self.maps[qi]
    }

    pub fn contains_map(&self, qi: usize, m: &MorphMap) -> bool {
        self.maps[qi].binary_search(m).is_ok()
    }

    pub fn total_map_count(&self) -> usize {
        self.maps.iter().map(Vec::len).sum()
    }

    pub fn identity_map(&self, qi: usize) -> MorphMap {
        self.lattice.subgroups[qi].members.clone()
    }

    /// Restriction of P-conjugation by u to Q; defined whenever u normalizes
    /// nothing in particular (the image is just Q^u).
    pub fn conjugation_map(&self, qi: usize, u: u32) -> MorphMap {
        self.lattice.subgroups[qi]
            .members
            .iter()
            .map(|&m| self.table.conj(m, u))
            .collect()
    }

    pub fn image_members(&self, m: &MorphMap) -> Vec<u32> {
        let mut v = m.clone();
        v.sort_unstable();
        v
    }

    pub fn image_object(&self, m: &MorphMap) -> usize {
        self.lattice
            .index_of(&self.image_members(m))
            .expect("morphism image is a subgroup")
    }

    /// Value of the map at a domain element.
    pub fn apply_map(&self, qi: usize, m: &MorphMap, x: u32) -> u32 {
        let pos = self.lattice.subgroups[qi]
            .members
            .binary_search(&x)
            .expect("element in domain");
        m[pos]
    }

    /// Restriction of a map on Q to a sub-object.
    pub fn restrict_map(&self, qi: usize, m: &MorphMap, sub: usize) -> MorphMap {
        self.lattice.subgroups[sub]
            .members
            .iter()
            .map(|&x| self.apply_map(qi, m, x))
            .collect()
    }

    /// Composite x -> second(first(x)), where `second` is defined on an
    /// object containing the image of `first`.
    pub fn compose_maps(&self, first: &MorphMap, second_domain: usize, second: &MorphMap) -> MorphMap {
        first
            .iter()
            .map(|&x| self.apply_map(second_domain, second, x))
            .collect()
    }

    /// Inverse of the induced isomorphism Q -> image; returned with its
    /// domain object (the image).
    pub fn invert_map(&self, qi: usize, m: &MorphMap) -> (usize, MorphMap) {
        let q = &self.lattice.subgroups[qi];
        let mut pairs: Vec<(u32, u32)> = m
            .iter()
            .zip(q.members.iter())
            .map(|(&img, &dom)| (img, dom))
            .collect();
        pairs.sort_unstable();
        let obj = self
            .lattice
            .index_of(&pairs.iter().map(|p| p.0).collect::<Vec<_>>())
            .expect("image is a subgroup");
        (obj, pairs.into_iter().map(|p| p.1).collect())
    }

    /// All automorphisms of Q present in the system.
    pub fn aut_maps(&self, qi: usize) -> Vec<MorphMap> {
        let members = &self.lattice.subgroups[qi].members;
        self.maps[qi]
            .iter()
            .filter(|m| &self.image_members(m) == members)
            .cloned()
            .collect()
    }

    /// Morphisms Q -> R: stored maps on Q with image inside R.
    pub fn hom_set(&self, qi: usize, ri: usize) -> Vec<Morphism> {
        let r = &self.lattice.subgroups[ri];
        self.maps[qi]
            .iter()
            .filter(|m| m.iter().all(|&x| r.contains(x)))
            .map(|m| Morphism {
                domain: qi,
                codomain: ri,
                map: m.clone(),
            })
            .collect()
    }

    /// Every stored morphism, with its image object as the codomain.
    pub fn morphisms(&self) -> Vec<Morphism> {
        let mut out = Vec::with_capacity(self.total_map_count());
        for qi in 0..self.lattice.len() {
            for m in &self.maps[qi] {
                out.push(Morphism {
                    domain: qi,
                    codomain: self.image_object(m),
                    map: m.clone(),
                });
            }
        }
        out
    }

    pub fn same_table(&self, other: &FusionSystem) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
            || self.table.elements() == other.table.elements()
    }

    /// Morphism-table containment; meaningful only over a shared table.
    pub fn is_sub_table_of(&self, other: &FusionSystem) -> bool {
        assert!(self.same_table(other), "systems live on different tables");
        self.maps
            .iter()
            .enumerate()
            .all(|(qi, ms)| ms.iter().all(|m| other.contains_map(qi, m)))
    }

    pub fn same_system(&self, other: &FusionSystem) -> bool {
        self.same_table(other) && self.base == other.base && self.maps == other.maps
    }

    pub fn is_trivial(&self) -> bool {
        self.same_system(&self.inner_subsystem(&self.base.clone()))
    }

    /// Smallest sub-table of this system containing all inclusions, all
    /// base-conjugations, and the seed morphisms; closed under composition,
    /// restriction, and inversion of induced isomorphisms.
    pub fn generate(&self, seed: &[Morphism]) -> FusionSystem {
        let nobj = self.lattice.len();
        let mut sets: Vec<HashSet<MorphMap>> = vec![HashSet::new(); nobj];
        let mut stored: Vec<(usize, MorphMap)> = Vec::new();
        let push = |sets: &mut Vec<HashSet<MorphMap>>,
                        stored: &mut Vec<(usize, MorphMap)>,
                        qi: usize,
                        m: MorphMap| {
            if sets[qi].insert(m.clone()) {
                stored.push((qi, m));
            }
        };

        for &qi in &self.sub_objects[self.base_obj].clone() {
            push(&mut sets, &mut stored, qi, self.identity_map(qi));
            for &u in &self.base.members {
                let m = self.conjugation_map(qi, u);
                push(&mut sets, &mut stored, qi, m);
            }
        }
        for s in seed {
            assert!(
                self.contains_map(s.domain, &s.map),
                "seed morphism not in the ambient system"
            );
            push(&mut sets, &mut stored, s.domain, s.map.clone());
        }

        let mut k = 0;
        while k < stored.len() {
            let (qi, m) = stored[k].clone();
            for &sub in &self.sub_objects[qi].clone() {
                if sub != qi {
                    let r = self.restrict_map(qi, &m, sub);
                    push(&mut sets, &mut stored, sub, r);
                }
            }
            let (im_obj, inv) = self.invert_map(qi, &m);
            push(&mut sets, &mut stored, im_obj, inv);

            let image: Vec<u32> = self.image_members(&m);
            let snapshot = stored.len();
            for j in 0..snapshot {
                let (dj, m2) = stored[j].clone();
                // m then m2
                let d = &self.lattice.subgroups[dj];
                if image.iter().all(|&x| d.contains(x)) {
                    let c = self.compose_maps(&m, dj, &m2);
                    push(&mut sets, &mut stored, qi, c);
                }
                // m2 then m
                let image2 = self.image_members(&m2);
                let q = &self.lattice.subgroups[qi];
                if image2.iter().all(|&x| q.contains(x)) {
                    let c = self.compose_maps(&m2, qi, &m);
                    push(&mut sets, &mut stored, dj, c);
                }
            }
            k += 1;
        }

        self.with_maps(self.base.clone(), sets)
    }

    /// True when every morphism defined on any subgroup of Q has image
    /// inside Q.
    pub fn is_strongly_closed(&self, qi: usize) -> bool {
        let q = &self.lattice.subgroups[qi];
        self.sub_objects[qi].iter().all(|&ri| {
            self.maps[ri]
                .iter()
                .all(|m| m.iter().all(|&x| q.contains(x)))
        })
    }

    /// F-isomorphism classes of the objects inside the base, together with
    /// the fully-normalized and fully-centralized flags.
    pub fn f_classes(&self) -> FClasses {
        let nobj = self.lattice.len();
        let mut parent: Vec<usize> = (0..nobj).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for qi in 0..nobj {
            for m in &self.maps[qi] {
                let im = self.image_object(m);
                let (a, b) = (find(&mut parent, qi), find(&mut parent, im));
                if a != b {
                    let lo = a.min(b);
                    parent[a.max(b)] = lo;
                }
            }
        }
        let mut class_of = vec![usize::MAX; nobj];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut roots: HashMap<usize, usize> = HashMap::new();
        for &qi in self.base_objects() {
            let r = find(&mut parent, qi);
            let cid = *roots.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of[qi] = cid;
            classes[cid].push(qi);
        }

        let norm_order: Vec<usize> = (0..nobj)
            .map(|qi| {
                if class_of[qi] == usize::MAX {
                    0
                } else {
                    self.table
                        .normalizer(&self.lattice.subgroups[qi], &self.base)
                        .order()
                }
            })
            .collect();
        let cent_order: Vec<usize> = (0..nobj)
            .map(|qi| {
                if class_of[qi] == usize::MAX {
                    0
                } else {
                    self.table
                        .centralizer(&self.lattice.subgroups[qi], &self.base)
                        .order()
                }
            })
            .collect();
        let mut fully_normalized = vec![false; nobj];
        let mut fully_centralized = vec![false; nobj];
        for class in &classes {
            let max_n = class.iter().map(|&qi| norm_order[qi]).max().unwrap();
            let max_c = class.iter().map(|&qi| cent_order[qi]).max().unwrap();
            for &qi in class {
                fully_normalized[qi] = norm_order[qi] == max_n;
                fully_centralized[qi] = cent_order[qi] == max_c;
            }
        }
        FClasses {
            class_of,
            classes,
            fully_normalized,
            fully_centralized,
        }
    }
}

/// F-class data for the objects inside the base. Objects outside the base
/// have class_of = usize::MAX.
pub struct FClasses {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub fully_normalized: Vec<bool>,
    pub fully_centralized: Vec<bool>,
}

fn containment(lat: &Lattice) -> Vec<Vec<usize>> {
    let n = lat.len();
    let mut out = vec![Vec::new(); n];
    for qi in 0..n {
        for ri in 0..n {
            if lat.subgroups[ri].is_subset_of(&lat.subgroups[qi]) {
                out[qi].push(ri);
            }
        }
    }
    out
}

fn freeze(sets: Vec<HashSet<MorphMap>>) -> Vec<Vec<MorphMap>> {
    sets.into_iter()
        .map(|s| {
            let mut v: Vec<MorphMap> = s.into_iter().collect();
            v.sort_unstable();
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::catalog_table;

    fn system(name: &str, p: u64) -> FusionSystem {
        let g = catalog_table(name, &Bounds::default()).unwrap();
        FusionSystem::from_group(&g, p, &Bounds::default()).unwrap()
    }

    #[test]
    fn s4_fusion_on_d8() {
        let f = system("s4", 2);
        assert_eq!(f.base.order(), 8);
        assert_eq!(f.object_count(), 10);
        // The S4-normal Klein four group carries all six automorphisms.
        let v4b = f
            .base_objects()
            .iter()
            .copied()
            .find(|&qi| {
                let q = f.object(qi);
                q.order() == 4 && f.aut_maps(qi).len() == 6
            })
            .expect("an order-4 object with six automorphisms");
        assert_eq!(f.aut_maps(v4b).len(), 6);
        // Aut_F(P) is inner: N_{S4}(D8) = D8.
        assert_eq!(f.aut_maps(f.base_obj).len(), 8 / 2);
        assert!(!f.is_trivial());
    }

    #[test]
    fn trivial_system_is_trivial() {
        let f = system("d8", 2);
        assert!(f.is_trivial());
        let g = system("d16", 2);
        assert!(g.is_trivial());
    }

    #[test]
    fn fusion_of_s3_at_2_is_trivial() {
        // N_{S3}(C2) = C2.
        let f = system("s3", 2);
        assert_eq!(f.base.order(), 2);
        assert!(f.is_trivial());
    }

    #[test]
    fn fusion_of_s3_at_3_is_not_trivial() {
        let f = system("s3", 3);
        assert_eq!(f.base.order(), 3);
        assert_eq!(f.aut_maps(f.base_obj).len(), 2);
        assert!(!f.is_trivial());
    }

    #[test]
    fn generate_nothing_gives_inner() {
        let f = system("s4", 2);
        let gen = f.generate(&[]);
        assert!(gen.same_system(&f.inner_subsystem(&f.base.clone())));
        assert!(gen.is_sub_table_of(&f));
    }

    #[test]
    fn generate_everything_is_idempotent() {
        let f = system("s4", 2);
        let all = f.morphisms();
        let gen = f.generate(&all);
        assert!(gen.same_system(&f));
    }

    #[test]
    fn hom_sets_respect_codomains() {
        let f = system("s4", 2);
        // Z(D8) maps into each of the three order-2 subgroups of V4b.
        let z = f
            .base_objects()
            .iter()
            .copied()
            .find(|&qi| {
                f.object(qi).order() == 2 && f.maps_on(qi).len() == 3
            })
            .expect("central order-2 object with three images");
        let homs_to_base = f.hom_set(z, f.base_obj);
        assert_eq!(homs_to_base.len(), 3);
        let self_homs = f.hom_set(z, z);
        assert_eq!(self_homs.len(), 1);
    }

    #[test]
    fn inverse_and_composition_consistency() {
        let f = system("pgl27", 2);
        assert_eq!(f.base.order(), 16);
        for qi in f.base_objects().iter().copied() {
            for m in f.maps_on(qi) {
                let (im_obj, inv) = f.invert_map(qi, m);
                assert!(f.contains_map(im_obj, &inv), "inverse stored");
                let round = f.compose_maps(m, im_obj, &inv);
                assert_eq!(round, f.identity_map(qi), "inverse composes to identity");
            }
        }
    }

    #[test]
    fn f_classes_of_s4_system() {
        let f = system("s4", 2);
        let cls = f.f_classes();
        // 10 objects fall into: 1, Z~refl-pair... the classes by size:
        // {1}, {Z, two products}, {two reflections}, {V4a}, {V4b}, {C4}, {D8}.
        let mut sizes: Vec<usize> = cls.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 1, 2, 3]);
    }
}
