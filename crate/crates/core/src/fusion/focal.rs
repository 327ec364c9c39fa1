use crate::error::{Error, Result};
use crate::fusion::system::FusionSystem;
use crate::group::subgroup::Subgroup;

#[derive(Debug, Clone)]
pub struct FocalSeries {
    pub focal: Subgroup,
    /// [Q,F], [Q,F;2], ... up to and including the first repeat.
    pub iterates: Vec<Subgroup>,
    /// Intersection of all iterates; for the descending case (Q = P) this is
    /// the stable value.
    pub limit: Subgroup,
}

/// [S, F] = < x^{-1} phi(x) : x in S, phi defined on <x> >.
pub fn focal_of(f: &FusionSystem, s: &Subgroup) -> Subgroup {
    let t = &f.table;
    let mut gens: Vec<u32> = Vec::new();
    for &x in &s.members {
        let cyc = t.closure_members(&[x]);
        let qi = f
            .lattice
            .index_of(&cyc)
            .expect("cyclic subgroups are objects");
        let pos = cyc.binary_search(&x).expect("generator inside its closure");
        for m in f.maps_on(qi) {
            gens.push(t.mul(t.inv(x), m[pos]));
        }
    }
    t.subgroup(&gens)
}

pub fn focal_series(f: &FusionSystem, q: &Subgroup) -> Result<FocalSeries> {
    if f.object_index(q).is_none() || !q.is_subset_of(&f.base) {
        return Err(Error::NotASubgroup);
    }
    let focal = focal_of(f, q);
    let mut iterates = vec![focal.clone()];
    loop {
        let next = focal_of(f, iterates.last().unwrap());
        let repeat = iterates.iter().any(|s| *s == next);
        iterates.push(next);
        if repeat {
            break;
        }
    }
    let mut limit = iterates[0].clone();
    for s in &iterates[1..] {
        limit = f.table.intersect(&limit, s);
    }
    Ok(FocalSeries {
        focal,
        iterates,
        limit,
    })
}
