use serde::Serialize;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fusion::local::{local_system, LocalKind};
use crate::fusion::system::FusionSystem;
use crate::group::special::{quotient_group, strongly_p_embedded};
use crate::group::subgroup::Subgroup;
use crate::group::table::GroupTable;
use crate::perm::Perm;

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupStatus {
    pub subgroup: Subgroup,
    pub f_class: usize,
    pub fully_normalized: bool,
    pub fully_centralized: bool,
    pub centric: bool,
    pub essential: bool,
    pub weakly_closed: bool,
    pub strongly_closed: bool,
    pub normal_in_f: bool,
    pub central_in_f: bool,
}

pub struct Classification {
    /// Status per object inside the base, in lattice order.
    pub statuses: Vec<SubgroupStatus>,
    /// Object indices (into the system's lattice) in the same order.
    pub object_indices: Vec<usize>,
    pub essential_rank: usize,
}

/// Aut_F(Q) materialized as a permutation group on the positions of Q's
/// sorted member list.
pub fn aut_f_table(f: &FusionSystem, qi: usize) -> Result<GroupTable> {
    let members = &f.object(qi).members;
    let perms: Vec<Perm> = f
        .aut_maps(qi)
        .iter()
        .map(|m| {
            let images: Vec<usize> = m
                .iter()
                .map(|v| members.binary_search(v).expect("image inside Q") )
                .collect();
            Perm::from_images(images)
        })
        .collect::<Result<_>>()?;
    GroupTable::from_elements(perms)
}

/// Out_F(Q) = Aut_F(Q) / Aut_Q(Q), where Aut_Q(Q) is conjugation by Q
/// itself.
fn out_f_table(f: &FusionSystem, qi: usize) -> Result<GroupTable> {
    let aut = aut_f_table(f, qi)?;
    let members = &f.object(qi).members;
    let mut inner: Vec<u32> = Vec::new();
    for &u in members.iter() {
        let m = f.conjugation_map(qi, u);
        let images: Vec<usize> = m
            .iter()
            .map(|v| members.binary_search(v).expect("image inside Q"))
            .collect();
        let perm = Perm::from_images(images)?;
        let idx = aut.index_of(&perm).ok_or_else(|| {
            Error::InternalInvariant("inner automorphism missing from Aut_F".into())
        })?;
        inner.push(idx);
    }
    inner.sort_unstable();
    inner.dedup();
    let inner_sub = Subgroup { members: inner };
    Ok(quotient_group(&aut, &inner_sub)?.quotient)
}

/// Full status scan. Expensive flags are gated on their cheap necessary
/// conditions: normality behind strong closure, centrality behind central
/// position and a trivial automorphism set.
pub fn classify_subgroups(f: &FusionSystem, bounds: &Bounds) -> Result<Classification> {
    let t = &f.table;
    let classes = f.f_classes();
    let object_indices: Vec<usize> = f.base_objects().to_vec();

    let mut centric = vec![false; f.object_count()];
    for &qi in &object_indices {
        let class_id = classes.class_of[qi];
        let all_self_centralizing = classes.classes[class_id].iter().all(|&ri| {
            let r = f.object(ri);
            t.centralizer(r, &f.base).is_subset_of(r)
        });
        centric[qi] = all_self_centralizing;
    }

    let mut essential = vec![false; f.object_count()];
    for &qi in &object_indices {
        if !centric[qi] || qi == f.base_obj {
            continue;
        }
        let out = out_f_table(f, qi)?;
        essential[qi] = strongly_p_embedded(&out, f.p, bounds)?.is_some();
    }
    let mut essential_rank = 0;
    for class in &classes.classes {
        let flags: Vec<bool> = class.iter().map(|&qi| essential[qi]).collect();
        if flags.iter().any(|&b| b) {
            if !flags.iter().all(|&b| b) {
                return Err(Error::InternalInvariant(
                    "essential flag differs within an F-class".into(),
                ));
            }
            essential_rank += 1;
        }
    }

    let z_base = Subgroup {
        members: centralizer_members(t, &f.base),
    };
    let mut statuses = Vec::with_capacity(object_indices.len());
    for &qi in &object_indices {
        let q = f.object(qi).clone();
        let weakly_closed = classes.classes[classes.class_of[qi]].len() == 1;
        let strongly_closed = weakly_closed && f.is_strongly_closed(qi);
        let normal_in_f = strongly_closed && {
            let local = local_system(f, &q, LocalKind::N)?;
            local.system.same_system(f)
        };
        let central_in_f = q.is_subset_of(&z_base)
            && f.maps_on(qi).len() == 1
            && {
                let local = local_system(f, &q, LocalKind::C)?;
                local.system.same_system(f)
            };
        statuses.push(SubgroupStatus {
            subgroup: q,
            f_class: classes.class_of[qi],
            fully_normalized: classes.fully_normalized[qi],
            fully_centralized: classes.fully_centralized[qi],
            centric: centric[qi],
            essential: essential[qi],
            weakly_closed,
            strongly_closed,
            normal_in_f,
            central_in_f,
        });
    }

    Ok(Classification {
        statuses,
        object_indices,
        essential_rank,
    })
}

fn centralizer_members(t: &GroupTable, base: &Subgroup) -> Vec<u32> {
    t.centralizer(base, base).members.clone()
}

/// Status flags for one subgroup of the base.
pub fn subgroup_status(f: &FusionSystem, q: &Subgroup, bounds: &Bounds) -> Result<SubgroupStatus> {
    let qi = match f.object_index(q) {
        Some(i) if q.is_subset_of(&f.base) => i,
        _ => return Err(Error::NotASubgroup),
    };
    let c = classify_subgroups(f, bounds)?;
    let pos = c
        .object_indices
        .iter()
        .position(|&i| i == qi)
        .expect("object inside base");
    Ok(c.statuses[pos].clone())
}

/// Largest subgroup normal in F. Verified to contain every other normal
/// subgroup.
pub fn o_p(f: &FusionSystem, bounds: &Bounds) -> Result<Subgroup> {
    let c = classify_subgroups(f, bounds)?;
    largest_with(f, &c, |s| s.normal_in_f, "normal")
}

/// Largest subgroup central in F.
pub fn z_f(f: &FusionSystem, bounds: &Bounds) -> Result<Subgroup> {
    let c = classify_subgroups(f, bounds)?;
    largest_with(f, &c, |s| s.central_in_f, "central")
}

fn largest_with(
    f: &FusionSystem,
    c: &Classification,
    pred: impl Fn(&SubgroupStatus) -> bool,
    what: &str,
) -> Result<Subgroup> {
    let mut best: Option<&SubgroupStatus> = None;
    for s in &c.statuses {
        if pred(s) {
            let better = match best {
                None => true,
                Some(b) => s.subgroup.order() > b.subgroup.order(),
            };
            if better {
                best = Some(s);
            }
        }
    }
    let best = best.ok_or_else(|| {
        Error::InternalInvariant(format!("trivial subgroup is not {what} in F"))
    })?;
    for s in &c.statuses {
        if pred(s) && !s.subgroup.is_subset_of(&best.subgroup) {
            return Err(Error::InternalInvariant(format!(
                "{what} subgroups of F are not all inside the largest one"
            )));
        }
    }
    let _ = f;
    Ok(best.subgroup.clone())
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
    fn s4_classification() {
        let f = system("s4", 2);
        let c = classify_subgroups(&f, &Bounds::default()).unwrap();
        assert_eq!(c.statuses.len(), 10);
        // Exactly one essential class: the S4-normal Klein four group. The
        // other Klein four group has a 2-group of F-automorphisms, and
        // cyclic subgroups are never essential.
        assert_eq!(c.essential_rank, 1);
        let essentials: Vec<&SubgroupStatus> =
            c.statuses.iter().filter(|s| s.essential).collect();
        assert_eq!(essentials.len(), 1);
        let ess = essentials[0];
        assert_eq!(ess.subgroup.order(), 4);
        assert!(ess.normal_in_f);
        assert!(ess.centric);

        for s in &c.statuses {
            if s.essential {
                assert!(s.centric, "essential implies centric");
            }
            if s.normal_in_f {
                assert!(s.strongly_closed);
            }
            if s.strongly_closed {
                assert!(s.weakly_closed);
            }
            if f.table.subgroup_is_cyclic(&s.subgroup) {
                assert!(!s.essential, "cyclic subgroups are never essential");
            }
        }
    }

    #[test]
    fn o2_of_s4_system_is_the_normal_klein_four() {
        let f = system("s4", 2);
        let o = o_p(&f, &Bounds::default()).unwrap();
        assert_eq!(o.order(), 4);
        // It is normal in P and carries six automorphisms.
        let qi = f.object_index(&o).unwrap();
        assert_eq!(f.aut_maps(qi).len(), 6);
        let z = z_f(&f, &Bounds::default()).unwrap();
        assert_eq!(z.order(), 1);
    }

    #[test]
    fn trivial_system_normality_matches_group_normality() {
        let f = system("d8", 2);
        let o = o_p(&f, &Bounds::default()).unwrap();
        assert_eq!(o, f.base);
        let z = z_f(&f, &Bounds::default()).unwrap();
        let center = f.table.centralizer(&f.base, &f.base);
        assert_eq!(z, center);
        let c = classify_subgroups(&f, &Bounds::default()).unwrap();
        assert_eq!(c.essential_rank, 0);
        for (s, &qi) in c.statuses.iter().zip(&c.object_indices) {
            let group_normal = f.lattice.normal[qi];
            assert_eq!(s.weakly_closed, group_normal);
            assert_eq!(s.normal_in_f, group_normal);
        }
    }

    #[test]
    fn sl23_has_no_proper_essentials_and_alternating_base_automorphisms() {
        // Aut_F(Q8) = A4: the base is not essential (it never is), and the
        // only candidate subgroups are cyclic. rk_e counts classes of proper
        // essentials, which for SL(2,3) fusion is zero: fusion is controlled
        // by Aut_F(P).
        let f = system("sl23", 2);
        let c = classify_subgroups(&f, &Bounds::default()).unwrap();
        assert_eq!(c.essential_rank, 0);
        assert_eq!(f.aut_maps(f.base_obj).len(), 12);
        let o = o_p(&f, &Bounds::default()).unwrap();
        assert_eq!(o, f.base);
    }

    #[test]
    fn pgl27_has_one_essential_class_and_trivial_o2() {
        let f = system("pgl27", 2);
        let c = classify_subgroups(&f, &Bounds::default()).unwrap();
        assert_eq!(c.essential_rank, 1);
        let essentials: Vec<&SubgroupStatus> =
            c.statuses.iter().filter(|s| s.essential).collect();
        assert_eq!(essentials.len(), 2, "one class of two Klein four groups");
        for e in &essentials {
            assert_eq!(e.subgroup.order(), 4);
        }
        let o = o_p(&f, &Bounds::default()).unwrap();
        assert_eq!(o.order(), 1);
        let z = z_f(&f, &Bounds::default()).unwrap();
        assert_eq!(z.order(), 1);
    }

    #[test]
    fn status_rejects_non_objects() {
        let f = system("s4", 2);
        let bogus = Subgroup {
            members: vec![0, 77],
        };
        assert!(matches!(
            subgroup_status(&f, &bogus, &Bounds::default()),
            Err(Error::NotASubgroup)
        ));
    }
}
