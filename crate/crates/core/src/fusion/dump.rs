use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fusion::morphism::MorphMap;
use crate::fusion::system::FusionSystem;
use crate::group::subgroup::Subgroup;
use crate::group::table::GroupTable;
use crate::perm::Perm;

/// One stored morphism: indices into the dump's subgroup list plus the image
/// of each domain member (ambient element indices, aligned with the sorted
/// member array).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DumpMorphism {
    pub domain: usize,
    pub codomain: usize,
    pub images: Vec<u32>,
}

/// Flat interchange form of a fusion system on a full p-group table.
/// Elements are permutation image arrays in table order; subgroups are
/// sorted member arrays covering the whole lattice.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Dump {
    pub p: u64,
    pub degree: usize,
    pub elements: Vec<Vec<usize>>,
    pub subgroups: Vec<Vec<u32>>,
    pub morphisms: Vec<DumpMorphism>,
}

pub fn to_dump(f: &FusionSystem) -> Result<Dump> {
    if f.base != f.table.full_subgroup() {
        return Err(Error::InternalInvariant(
            "only full-base systems are dumped".into(),
        ));
    }
    let elements = (0..f.table.order())
        .map(|i| f.table.perm(i as u32).images().to_vec())
        .collect();
    let subgroups: Vec<Vec<u32>> = (0..f.object_count())
        .map(|qi| f.object(qi).members.clone())
        .collect();
    let mut morphisms = Vec::new();
    for qi in 0..f.object_count() {
        for m in f.maps_on(qi) {
            morphisms.push(DumpMorphism {
                domain: qi,
                codomain: f.image_object(m),
                images: m.clone(),
            });
        }
    }
    Ok(Dump {
        p: f.p,
        degree: f.table.degree(),
        elements,
        subgroups,
        morphisms,
    })
}

pub fn dump_to_json(d: &Dump) -> String {
    let mut s = serde_json::to_string_pretty(d).expect("dump serializes");
    s.push('\n');
    s
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Reconstructs a fusion system from its dump, taking the morphism list
/// literally: nothing is closed up or repaired, so a dump edited to remove
/// morphisms loads as a (typically unsaturated) system with exactly the
/// remaining maps. All structural defects are Parse errors.
pub fn from_dump(text: &str, bounds: &Bounds) -> Result<FusionSystem> {
    let d: Dump =
        serde_json::from_str(text).map_err(|e| parse_err(format!("malformed dump: {e}")))?;
    if !is_prime(d.p) {
        return Err(parse_err(format!("p = {} is not prime", d.p)));
    }
    if d.elements.is_empty() {
        return Err(parse_err("empty element list"));
    }
    let mut perms = Vec::with_capacity(d.elements.len());
    for (i, images) in d.elements.iter().enumerate() {
        if images.len() != d.degree {
            return Err(parse_err(format!(
                "element {i} has length {}, expected degree {}",
                images.len(),
                d.degree
            )));
        }
        let p = Perm::from_images(images.clone())
            .map_err(|e| parse_err(format!("element {i} is not a permutation: {e}")))?;
        perms.push(p);
    }
    let table = GroupTable::from_elements(perms)
        .map_err(|e| parse_err(format!("element list is not a group: {e}")))?;
    for (i, images) in d.elements.iter().enumerate() {
        if table.perm(i as u32).images() != images.as_slice() {
            return Err(parse_err(
                "elements are not listed in canonical (sorted) order",
            ));
        }
    }
    let mut n = table.order() as u64;
    while n % d.p == 0 {
        n /= d.p;
    }
    if n != 1 {
        return Err(parse_err(format!(
            "group of order {} is not a {}-group",
            table.order(),
            d.p
        )));
    }

    let shell = FusionSystem::empty_on(d.p, table, bounds)?;
    if d.subgroups.len() != shell.object_count() {
        return Err(parse_err(format!(
            "dump lists {} subgroups, the group has {}",
            d.subgroups.len(),
            shell.object_count()
        )));
    }
    // Dump subgroup index -> lattice object index.
    let mut to_object = Vec::with_capacity(d.subgroups.len());
    let mut seen = HashSet::new();
    for (i, members) in d.subgroups.iter().enumerate() {
        let s = Subgroup {
            members: members.clone(),
        };
        if !shell.table.is_subgroup(&s) {
            return Err(parse_err(format!("entry {i} is not a subgroup")));
        }
        let qi = shell
            .object_index(&s)
            .ok_or_else(|| parse_err(format!("subgroup {i} missing from the lattice")))?;
        if !seen.insert(qi) {
            return Err(parse_err(format!("subgroup {i} listed twice")));
        }
        to_object.push(qi);
    }

    let mut map_sets: Vec<HashSet<MorphMap>> = vec![HashSet::new(); shell.object_count()];
    for (k, dm) in d.morphisms.iter().enumerate() {
        if dm.domain >= d.subgroups.len() || dm.codomain >= d.subgroups.len() {
            return Err(parse_err(format!("morphism {k} has a bad subgroup index")));
        }
        let qi = to_object[dm.domain];
        let ri = to_object[dm.codomain];
        let q = shell.object(qi).clone();
        let r = shell.object(ri);
        if dm.images.len() != q.order() {
            return Err(parse_err(format!(
                "morphism {k} maps {} elements, domain has {}",
                dm.images.len(),
                q.order()
            )));
        }
        let mut hit = HashSet::new();
        for &y in &dm.images {
            if !r.contains(y) {
                return Err(parse_err(format!(
                    "morphism {k} sends an element outside its codomain"
                )));
            }
            if !hit.insert(y) {
                return Err(parse_err(format!("morphism {k} is not injective")));
            }
        }
        for (a, &x) in q.members.iter().enumerate() {
            for (b, &y) in q.members.iter().enumerate() {
                let xy = shell.table.mul(x, y);
                let pos = q.position(xy).expect("domain is closed");
                if shell.table.mul(dm.images[a], dm.images[b]) != dm.images[pos] {
                    return Err(parse_err(format!("morphism {k} is not a homomorphism")));
                }
            }
        }
        map_sets[qi].insert(dm.images.clone());
    }
    let base = shell.table.full_subgroup();
    Ok(shell.with_maps(base, map_sets))
}
