use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::fusion::morphism::MorphMap;
use crate::fusion::system::FusionSystem;
use crate::group::subgroup::Subgroup;

/// Which local subsystem at Q: the normalizer system N_F(Q), the partly
/// constrained N_P(Q)C_F(Q), or the centralizer system C_F(Q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalKind {
    N,
    Pc,
    C,
}

pub struct LocalSystem {
    pub system: FusionSystem,
    /// Whether Q was fully normalized (kind N) or fully centralized (kinds
    /// PC, C); only then is the local system guaranteed saturated.
    pub precondition_met: bool,
}

/// The local system at Q. A morphism phi on R survives iff some extension
/// phi' on QR exists in F whose action on Q is: an automorphism of Q
/// (kind N), a P-conjugation of Q (kind PC), or the identity (kind C).
pub fn local_system(f: &FusionSystem, q: &Subgroup, kind: LocalKind) -> Result<LocalSystem> {
    let qi = match f.object_index(q) {
        Some(i) if q.is_subset_of(&f.base) => i,
        _ => return Err(Error::NotASubgroup),
    };
    let t = &f.table;
    let classes = f.f_classes();
    let precondition_met = match kind {
        LocalKind::N => classes.fully_normalized[qi],
        LocalKind::Pc | LocalKind::C => classes.fully_centralized[qi],
    };

    let new_base = match kind {
        LocalKind::N | LocalKind::Pc => t.normalizer(q, &f.base),
        LocalKind::C => t.centralizer(q, &f.base),
    };
    let base_obj = f
        .object_index(&new_base)
        .expect("normalizer and centralizer are objects");

    let inner_q: HashSet<MorphMap> = {
        let n_q = t.normalizer(q, &f.base);
        n_q.members
            .iter()
            .map(|&u| f.conjugation_map(qi, u))
            .collect()
    };
    let id_q = f.identity_map(qi);

    let mut sets: Vec<HashSet<MorphMap>> = vec![HashSet::new(); f.object_count()];
    for &ri in &f.sub_objects[base_obj] {
        let r = f.object(ri);
        let qr = t.product(q, r);
        let qri = f.object_index(&qr).expect("QR is an object");
        'maps: for m in f.maps_on(ri) {
            if !m.iter().all(|&x| new_base.contains(x)) {
                continue;
            }
            for ext in f.maps_on(qri) {
                if f.restrict_map(qri, ext, ri) != *m {
                    continue;
                }
                let on_q = f.restrict_map(qri, ext, qi);
                let ok = match kind {
                    LocalKind::N => {
                        let mut im = on_q.clone();
                        im.sort_unstable();
                        im == q.members
                    }
                    LocalKind::Pc => inner_q.contains(&on_q),
                    LocalKind::C => on_q == id_q,
                };
                if ok {
                    sets[ri].insert(m.clone());
                    continue 'maps;
                }
            }
        }
    }

    Ok(LocalSystem {
        system: f.with_maps(new_base, sets),
        precondition_met,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Bounds;
    use crate::fusion::saturation::check_saturation;
    use crate::group::catalog::catalog_table;

    fn system(name: &str, p: u64) -> FusionSystem {
        let g = catalog_table(name, &Bounds::default()).unwrap();
        FusionSystem::from_group(&g, p, &Bounds::default()).unwrap()
    }

    #[test]
    fn centralizer_of_trivial_subgroup_is_everything() {
        let f = system("s4", 2);
        let one = f.table.trivial_subgroup();
        let local = local_system(&f, &one, LocalKind::C).unwrap();
        assert!(local.precondition_met);
        assert!(local.system.same_system(&f));
    }

    #[test]
    fn normalizer_of_base_is_trivial_for_s4() {
        // N_{S4}(D8) = D8, so N_F(P) keeps only inner morphisms.
        let f = system("s4", 2);
        let local = local_system(&f, &f.base.clone(), LocalKind::N).unwrap();
        assert!(local.precondition_met);
        assert_eq!(local.system.base, f.base);
        assert!(local.system.is_trivial());
        assert!(!local.system.same_system(&f));
    }

    #[test]
    fn local_chain_is_ascending() {
        for (name, p) in [("s4", 2), ("sl23", 2), ("s3", 3)] {
            let f = system(name, p);
            for &qi in f.base_objects() {
                let q = f.object(qi).clone();
                let c = local_system(&f, &q, LocalKind::C).unwrap().system;
                let pc = local_system(&f, &q, LocalKind::Pc).unwrap().system;
                let n = local_system(&f, &q, LocalKind::N).unwrap().system;
                assert!(c.is_sub_table_of(&pc), "{name}: C inside PC at {qi}");
                assert!(pc.is_sub_table_of(&n), "{name}: PC inside N at {qi}");
                assert!(n.is_sub_table_of(&f), "{name}: N inside F at {qi}");
            }
        }
    }

    #[test]
    fn normalizer_system_of_normal_subgroup_is_whole() {
        // The S4-normal Klein four group: N_F(V4b) = F.
        let f = system("s4", 2);
        let v4b = f
            .base_objects()
            .iter()
            .copied()
            .find(|&qi| f.aut_maps(qi).len() == 6)
            .unwrap();
        let q = f.object(v4b).clone();
        let local = local_system(&f, &q, LocalKind::N).unwrap();
        assert!(local.system.same_system(&f));
    }

    #[test]
    fn local_systems_at_fully_normalized_objects_are_saturated() {
        let f = system("s4", 2);
        let classes = f.f_classes();
        for &qi in f.base_objects() {
            let q = f.object(qi).clone();
            if classes.fully_normalized[qi] {
                let local = local_system(&f, &q, LocalKind::N).unwrap();
                assert!(local.precondition_met);
                let report = check_saturation(&local.system);
                assert!(report.saturated, "N_F at {qi}: {:?}", report.violations);
            }
            if classes.fully_centralized[qi] {
                let local = local_system(&f, &q, LocalKind::C).unwrap();
                let report = check_saturation(&local.system);
                assert!(report.saturated, "C_F at {qi}: {:?}", report.violations);
            }
        }
    }

    #[test]
    fn rejects_subgroups_outside_the_base() {
        let f = system("s4", 2);
        let bogus = Subgroup {
            members: vec![0, 999],
        };
        assert!(matches!(
            local_system(&f, &bogus, LocalKind::N),
            Err(Error::NotASubgroup)
        ));
    }
}
