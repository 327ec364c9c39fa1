//! Subsystem censuses over a fixed ambient system. Two independent
//! enumerations of the sub-tables living on a subgroup Q:
//!
//! * the assignment census picks an automorphism group per object and keeps
//!   the saturated closures;
//! * the closed census walks every sub-table closed under composition,
//!   restriction, and inversion, one added morphism at a time.
//!
//! Completeness of the assignment census: a saturated subsystem T on Q is
//! generated by its automorphism groups (Alperin's fusion theorem inside T:
//! every T-morphism factors through automorphisms of T-essential objects and
//! of Q), and the assignment A(S) = Aut_T(S) for every object S is among the
//! visited ones, because Aut_T(S) is a subgroup of the ambient automorphism
//! group containing the Q-conjugations. That assignment generates exactly T:
//! the closure contains every generator and stays inside T since T is
//! closed. The argument is machine-checked against the closed census
//! (filtered by saturation) for subgroups with at most 6 subgroups; beyond
//! that it is a recorded proof obligation, not a verified fact.
//!
//! Completeness of the closed census: any closed sub-table T containing the
//! inner system is reached from the inner system by adding T's morphisms one
//! at a time, since each intermediate closure stays inside T and the last
//! one contains all of T's generators.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fusion::dump::DumpMorphism;
use crate::fusion::morphism::{MorphMap, Morphism};
use crate::fusion::saturation::check_saturation;
use crate::fusion::system::FusionSystem;
use crate::group::lattice::subgroup_lattice;
use crate::group::subgroup::Subgroup;
use crate::group::table::GroupTable;
use crate::perm::Perm;

#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchStats {
    /// Assignment vectors visited.
    pub assignments: u64,
    /// Distinct closed tables among their closures.
    pub closures: u64,
    /// Closures that passed the saturation check.
    pub saturated: u64,
}

/// Result of the assignment census on one subgroup.
#[derive(Debug)]
pub struct SubsystemCensus {
    pub base: FusionSystem,
    pub on_subgroup: Subgroup,
    /// Saturated subsystems on `on_subgroup`, ordered by (size, table).
    /// Always contains the trivial system; contains the full restriction
    /// exactly when that restriction is itself saturated.
    pub found: Vec<FusionSystem>,
    pub search_stats: SearchStats,
}

/// Everything of `f` that lives on subgroups of the object `qi`, rebased to
/// that subgroup.
fn restricted_ambient(f: &FusionSystem, qi: usize) -> FusionSystem {
    let q = f.object(qi);
    let mut sets: Vec<HashSet<MorphMap>> = vec![HashSet::new(); f.object_count()];
    for &si in &f.sub_objects[qi] {
        for m in f.maps_on(si) {
            if m.iter().all(|&x| q.contains(x)) {
                sets[si].insert(m.clone());
            }
        }
    }
    f.with_maps(q.clone(), sets)
}

/// The automorphism groups available at one object: every subgroup of the
/// ambient automorphism group that contains the base-conjugation
/// automorphisms, each returned as a sorted set of maps. A single entry
/// means the object cannot branch.
fn aut_choices(amb: &FusionSystem, si: usize, bounds: &Bounds) -> Result<Vec<Vec<MorphMap>>> {
    let members = amb.object(si).members.clone();
    let auts = amb.aut_maps(si);
    let mut inner: Vec<MorphMap> = amb
        .base
        .members
        .iter()
        .map(|&u| amb.conjugation_map(si, u))
        .filter(|m| amb.image_members(m) == members)
        .collect();
    inner.sort_unstable();
    inner.dedup();
    if auts.len() == inner.len() {
        return Ok(vec![inner]);
    }

    let to_perm = |m: &MorphMap| -> Result<Perm> {
        Perm::from_images(
            m.iter()
                .map(|v| members.binary_search(v).expect("image inside the object"))
                .collect(),
        )
    };
    let a = GroupTable::from_elements(auts.iter().map(to_perm).collect::<Result<_>>()?)?;
    let mut inner_idx: Vec<u32> = inner
        .iter()
        .map(|m| {
            a.index_of(&to_perm(m)?).ok_or_else(|| {
                Error::InternalInvariant("base conjugations missing from the automorphisms".into())
            })
        })
        .collect::<Result<_>>()?;
    inner_idx.sort_unstable();
    let inner_sub = Subgroup { members: inner_idx };

    let lat = subgroup_lattice(&a, &a.full_subgroup(), bounds)?;
    let mut out = Vec::new();
    for s in &lat.subgroups {
        if !inner_sub.is_subset_of(s) {
            continue;
        }
        let mut maps: Vec<MorphMap> = s
            .members
            .iter()
            .map(|&k| a.perm(k).images().iter().map(|&i| members[i]).collect())
            .collect();
        maps.sort_unstable();
        out.push(maps);
    }
    Ok(out)
}

fn table_key(s: &FusionSystem) -> Vec<Vec<MorphMap>> {
    (0..s.object_count()).map(|qi| s.maps_on(qi).to_vec()).collect()
}

fn sort_systems(found: &mut [FusionSystem]) {
    found.sort_by(|a, b| {
        (a.total_map_count(), table_key(a)).cmp(&(b.total_map_count(), table_key(b)))
    });
}

/// Census of the saturated subsystems of `f` on the subgroup `q`, via the
/// assignment walk described in the module docs.
pub fn enumerate_subsystems(
    f: &FusionSystem,
    q: &Subgroup,
    bounds: &Bounds,
) -> Result<SubsystemCensus> {
    let qi = match f.object_index(q) {
        Some(i) if q.is_subset_of(&f.base) => i,
        _ => return Err(Error::NotASubgroup),
    };
    let amb = restricted_ambient(f, qi);

    let mut branch: Vec<(usize, Vec<Vec<MorphMap>>)> = Vec::new();
    for &si in &f.sub_objects[qi] {
        let choices = aut_choices(&amb, si, bounds)?;
        if choices.len() > 1 {
            branch.push((si, choices));
        }
    }
    let mut total: u128 = 1;
    for (_, c) in &branch {
        total *= c.len() as u128;
    }
    if total > bounds.max_census_states as u128 {
        return Err(Error::SearchBoundExceeded(format!(
            "census on a subgroup of order {} has {} assignments, cap {}",
            q.order(),
            total,
            bounds.max_census_states
        )));
    }

    let mut stats = SearchStats::default();
    let mut seen: BTreeSet<Vec<Vec<MorphMap>>> = BTreeSet::new();
    let mut found: Vec<FusionSystem> = Vec::new();
    let mut idx = vec![0usize; branch.len()];
    loop {
        stats.assignments += 1;
        let mut seeds: Vec<Morphism> = Vec::new();
        for (k, (si, choices)) in branch.iter().enumerate() {
            for m in &choices[idx[k]] {
                seeds.push(Morphism {
                    domain: *si,
                    codomain: *si,
                    map: m.clone(),
                });
            }
        }
        let closure = amb.generate(&seeds);
        if seen.insert(table_key(&closure)) {
            stats.closures += 1;
            if check_saturation(&closure).saturated {
                stats.saturated += 1;
                found.push(closure);
            }
        }

        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < branch[k].1.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }

    sort_systems(&mut found);
    let trivial = amb.inner_subsystem(q);
    if !found.iter().any(|s| s.same_system(&trivial)) {
        return Err(Error::InternalInvariant(
            "census lost the trivial system".into(),
        ));
    }
    Ok(SubsystemCensus {
        base: f.clone(),
        on_subgroup: q.clone(),
        found,
        search_stats: stats,
    })
}

/// Every sub-table of `f` on the subgroup `q` that contains the inner system
/// and is closed under composition, restriction, and inversion. Saturation
/// is not required; this is the strict-mode census.
pub fn closed_subsystem_census(
    f: &FusionSystem,
    q: &Subgroup,
    bounds: &Bounds,
) -> Result<Vec<FusionSystem>> {
    let qi = match f.object_index(q) {
        Some(i) if q.is_subset_of(&f.base) => i,
        _ => return Err(Error::NotASubgroup),
    };
    let amb = restricted_ambient(f, qi);
    let all = amb.morphisms();

    let inner = amb.inner_subsystem(q);
    let mut seen: BTreeSet<Vec<Vec<MorphMap>>> = BTreeSet::new();
    seen.insert(table_key(&inner));
    let mut states = vec![inner];
    let mut head = 0;
    while head < states.len() {
        let cur = states[head].clone();
        head += 1;
        for m in &all {
            if cur.contains_map(m.domain, &m.map) {
                continue;
            }
            let mut seeds = cur.morphisms();
            seeds.push(m.clone());
            let next = amb.generate(&seeds);
            if seen.insert(table_key(&next)) {
                if seen.len() > bounds.max_census_states {
                    return Err(Error::SearchBoundExceeded(format!(
                        "closed census on a subgroup of order {} exceeded {} states",
                        q.order(),
                        bounds.max_census_states
                    )));
                }
                states.push(next);
            }
        }
    }
    sort_systems(&mut states);
    Ok(states)
}

/// A found subsystem, flattened for reports: the subgroup it lives on and
/// its full morphism table. Domain and codomain are subgroup-lattice indices
/// of the ambient system.
#[derive(Debug, Clone, Serialize)]
pub struct SubsystemWitness {
    pub on_subgroup: Vec<u32>,
    pub map_count: usize,
    pub morphisms: Vec<DumpMorphism>,
}

fn witness_of(s: &FusionSystem) -> SubsystemWitness {
    let mut morphisms = Vec::with_capacity(s.total_map_count());
    for qi in 0..s.object_count() {
        for m in s.maps_on(qi) {
            morphisms.push(DumpMorphism {
                domain: qi,
                codomain: s.image_object(m),
                images: m.clone(),
            });
        }
    }
    SubsystemWitness {
        on_subgroup: s.base.members.clone(),
        map_count: morphisms.len(),
        morphisms,
    }
}

/// Sparseness verdicts. The default pair quantifies over saturated
/// subsystems, the strict pair over all closed sub-tables; a trivial system
/// is never sparse in either sense. Witnesses are the nontrivial proper
/// saturated subsystems the censuses ran into, in census order.
#[derive(Debug, Clone, Serialize)]
pub struct Sparseness {
    pub sparse: bool,
    pub extremely_sparse: bool,
    pub strict_sparse: bool,
    pub strict_extremely_sparse: bool,
    pub witnesses: Vec<SubsystemWitness>,
}

pub fn sparseness(f: &FusionSystem, bounds: &Bounds) -> Result<Sparseness> {
    if f.is_trivial() {
        return Ok(Sparseness {
            sparse: false,
            extremely_sparse: false,
            strict_sparse: false,
            strict_extremely_sparse: false,
            witnesses: Vec::new(),
        });
    }

    let base = f.base.clone();
    let mut witnesses = Vec::new();

    let on_p = enumerate_subsystems(f, &base, bounds)?;
    for s in &on_p.found {
        if !s.is_trivial() && !s.same_system(f) {
            witnesses.push(witness_of(s));
        }
    }
    let sparse = on_p.found.len() == 2;

    let mut extremely_sparse = sparse;
    if sparse {
        for &qi in f.base_objects() {
            if qi == f.base_obj {
                continue;
            }
            let census = enumerate_subsystems(f, &f.object(qi).clone(), bounds)?;
            for s in &census.found {
                if !s.is_trivial() {
                    extremely_sparse = false;
                    witnesses.push(witness_of(s));
                }
            }
        }
    }

    let strict_sparse = closed_subsystem_census(f, &base, bounds)?.len() == 2;
    let mut strict_extremely_sparse = strict_sparse;
    if strict_sparse {
        for &qi in f.base_objects() {
            if qi == f.base_obj {
                continue;
            }
            let closed = closed_subsystem_census(f, &f.object(qi).clone(), bounds)?;
            if closed.len() != 1 {
                strict_extremely_sparse = false;
            }
        }
    }

    Ok(Sparseness {
        sparse,
        extremely_sparse,
        strict_sparse,
        strict_extremely_sparse,
        witnesses,
    })
}
