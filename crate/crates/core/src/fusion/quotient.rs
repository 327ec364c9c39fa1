use std::collections::HashSet;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fusion::morphism::MorphMap;
use crate::fusion::status::o_p;
use crate::fusion::system::FusionSystem;
use crate::group::special::quotient_group;
use crate::group::subgroup::Subgroup;

/// F/Q on P/Q for a strongly F-closed Q: morphisms are the maps induced on
/// cosets by morphisms between subgroups containing Q. Well-definedness of
/// every induced map is asserted, not assumed.
pub fn quotient_system(f: &FusionSystem, q: &Subgroup, bounds: &Bounds) -> Result<FusionSystem> {
    let qi = match f.object_index(q) {
        Some(i) if q.is_subset_of(&f.base) => i,
        _ => return Err(Error::NotASubgroup),
    };
    if f.base.order() != f.table.order() {
        return Err(Error::InternalInvariant(
            "quotients are taken over full-base systems only".into(),
        ));
    }
    if !f.is_strongly_closed(qi) {
        return Err(Error::NotStronglyClosed);
    }

    let qg = quotient_group(&f.table, q)?;
    let shell = FusionSystem::empty_on(f.p, qg.quotient.clone(), bounds)?;

    let mut sets: Vec<HashSet<MorphMap>> = vec![HashSet::new(); shell.object_count()];
    for (new_ri, r_bar) in shell.lattice.subgroups.iter().enumerate() {
        let r = qg.preimage_subgroup(r_bar);
        let ri = f
            .object_index(&r)
            .ok_or_else(|| Error::InternalInvariant("preimage is not an object".into()))?;
        for m in f.maps_on(ri) {
            let mut slots: Vec<Option<u32>> = vec![None; r_bar.order()];
            for (pos, &x) in f.object(ri).members.iter().enumerate() {
                let src = qg.projection[x as usize];
                let dst = qg.projection[m[pos] as usize];
                let slot = r_bar
                    .members
                    .binary_search(&src)
                    .expect("projected member in projected subgroup");
                match slots[slot] {
                    None => slots[slot] = Some(dst),
                    Some(v) if v == dst => {}
                    Some(_) => {
                        return Err(Error::InternalInvariant(
                            "induced quotient morphism is not well-defined".into(),
                        ))
                    }
                }
            }
            let induced: MorphMap = slots
                .into_iter()
                .map(|s| s.expect("every coset of the new object is hit"))
                .collect();
            sets[new_ri].insert(induced);
        }
    }

    Ok(shell.with_maps(shell.base.clone(), sets))
}

/// Length of the greedy ascending strongly-closed chain 1 = P_0 < P_1 < ...
/// built by repeatedly taking O_p of the quotient; None when the chain stalls
/// below P. Greedy is complete: O_p dominates the next step of any valid
/// chain at every stage.
pub fn p_length(f: &FusionSystem, bounds: &Bounds) -> Result<Option<u32>> {
    let mut cur = f.clone();
    let mut len = 0u32;
    loop {
        if cur.base.order() == 1 {
            return Ok(Some(len));
        }
        let o = o_p(&cur, bounds)?;
        if o.order() == 1 {
            return Ok(None);
        }
        cur = quotient_system(&cur, &o, bounds)?;
        len += 1;
    }
}
