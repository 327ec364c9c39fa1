use std::collections::HashMap;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fusion::morphism::{MorphMap, Morphism};
use crate::fusion::status::classify_subgroups;
use crate::fusion::system::FusionSystem;

/// One step of an Alperin decomposition: an automorphism of a host object
/// (the base or an essential subgroup), to be restricted to the running
/// image.
#[derive(Debug, Clone)]
pub struct DecompStep {
    pub host: usize,
    pub aut: MorphMap,
}

/// Hosts allowed by the fusion theorem: the base and every essential object.
pub fn alperin_hosts(f: &FusionSystem, bounds: &Bounds) -> Result<Vec<usize>> {
    let c = classify_subgroups(f, bounds)?;
    let mut hosts = vec![f.base_obj];
    for (s, &qi) in c.statuses.iter().zip(&c.object_indices) {
        if s.essential {
            hosts.push(qi);
        }
    }
    hosts.sort_unstable();
    hosts.dedup();
    Ok(hosts)
}

struct DomainPaths {
    /// state map -> index into parents
    states: HashMap<MorphMap, usize>,
    /// parent state index and the step taken; None at the root.
    parents: Vec<Option<(usize, DecompStep)>>,
}

/// Breadth-first closure of the identity on Q under post-composition with
/// restricted host automorphisms.
fn domain_paths(f: &FusionSystem, qi: usize, hosts: &[usize], host_auts: &[Vec<MorphMap>]) -> DomainPaths {
    let mut states: HashMap<MorphMap, usize> = HashMap::new();
    let mut parents: Vec<Option<(usize, DecompStep)>> = Vec::new();
    let mut keys: Vec<MorphMap> = Vec::new();
    let root = f.identity_map(qi);
    states.insert(root.clone(), 0);
    parents.push(None);
    keys.push(root);

    let mut k = 0;
    while k < keys.len() {
        let m = keys[k].clone();
        let image = f.image_members(&m);
        for (hi, &h) in hosts.iter().enumerate() {
            let host_sub = f.object(h);
            if !image.iter().all(|&x| host_sub.contains(x)) {
                continue;
            }
            for aut in &host_auts[hi] {
                let next: MorphMap = m.iter().map(|&x| f.apply_map(h, aut, x)).collect();
                if !states.contains_key(&next) {
                    states.insert(next.clone(), keys.len());
                    parents.push(Some((
                        k,
                        DecompStep {
                            host: h,
                            aut: aut.clone(),
                        },
                    )));
                    keys.push(next);
                }
            }
        }
        k += 1;
    }
    DomainPaths { states, parents }
}

fn read_path(paths: &DomainPaths, target: &MorphMap) -> Option<Vec<DecompStep>> {
    let mut idx = *paths.states.get(target)?;
    let mut steps = Vec::new();
    while let Some((prev, step)) = &paths.parents[idx] {
        steps.push(step.clone());
        idx = *prev;
    }
    steps.reverse();
    Some(steps)
}

/// Composes the identity on the morphism's domain with the restricted steps;
/// used to confirm a decomposition recomposes to its morphism.
pub fn recompose(f: &FusionSystem, domain: usize, steps: &[DecompStep]) -> MorphMap {
    let mut m = f.identity_map(domain);
    for s in steps {
        m = m.iter().map(|&x| f.apply_map(s.host, &s.aut, x)).collect();
    }
    m
}

/// Alperin's fusion theorem, executed: writes an F-isomorphism as a
/// composite of restrictions of automorphisms of the base and the essential
/// subgroups. Fails with NoDecomposition only if F is not saturated.
pub fn alperin_decompose(
    f: &FusionSystem,
    m: &Morphism,
    bounds: &Bounds,
) -> Result<Vec<DecompStep>> {
    if !f.contains_map(m.domain, &m.map) {
        return Err(Error::InternalInvariant(
            "decomposing a morphism outside the system".into(),
        ));
    }
    let hosts = alperin_hosts(f, bounds)?;
    let host_auts: Vec<Vec<MorphMap>> = hosts.iter().map(|&h| f.aut_maps(h)).collect();
    let paths = domain_paths(f, m.domain, &hosts, &host_auts);
    read_path(&paths, &m.map).ok_or(Error::NoDecomposition)
}

/// Decompositions for every stored morphism, sharing one search per domain.
pub fn alperin_decompose_all(
    f: &FusionSystem,
    bounds: &Bounds,
) -> Result<Vec<(Morphism, Vec<DecompStep>)>> {
    let hosts = alperin_hosts(f, bounds)?;
    let host_auts: Vec<Vec<MorphMap>> = hosts.iter().map(|&h| f.aut_maps(h)).collect();
    let mut out = Vec::new();
    for &qi in f.base_objects() {
        let paths = domain_paths(f, qi, &hosts, &host_auts);
        for m in f.maps_on(qi) {
            let steps = read_path(&paths, m).ok_or(Error::NoDecomposition)?;
            out.push((
                Morphism {
                    domain: qi,
                    codomain: f.image_object(m),
                    map: m.clone(),
                },
                steps,
            ));
        }
    }
    Ok(out)
}
