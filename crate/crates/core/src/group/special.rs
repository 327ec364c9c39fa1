use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::homs::is_isomorphic;
use crate::group::lattice::subgroup_lattice;
use crate::group::subgroup::Subgroup;
use crate::group::table::GroupTable;
use crate::num::{pow_usize, v_p};
use crate::perm::Perm;

/// One Sylow p-subgroup of `within`, found deterministically by normalizer
/// climbing: starting from the trivial subgroup, repeatedly adjoin the least
/// element of the normalizer whose coset has p-power order.
pub fn sylow_within(t: &GroupTable, within: &Subgroup, p: u64) -> Subgroup {
    let target = v_p(within.order(), p);
    let mut h = t.trivial_subgroup();
    let mut k = 0;
    while k < target {
        let n = t.normalizer(&h, within);
        let mut extended = false;
        for &y in &n.members {
            if h.contains(y) {
                continue;
            }
            // Order of the coset yH in N/H: least m with y^m in H.
            let mut m = 1usize;
            let mut acc = y;
            while !h.contains(acc) {
                acc = t.mul(acc, y);
                m += 1;
            }
            let mut mm = m;
            let p_usize = p as usize;
            while mm % p_usize == 0 {
                mm /= p_usize;
            }
            if m > 1 && mm == 1 {
                let mut seed = h.members.clone();
                seed.push(y);
                h = t.subgroup(&seed);
                k = v_p(h.order(), p);
                extended = true;
                break;
            }
        }
        if !extended {
            // A proper p-subgroup always grows inside its normalizer.
            panic!("sylow climb stalled below the full p-part");
        }
    }
    h
}

pub fn sylow(t: &GroupTable, p: u64) -> Subgroup {
    sylow_within(t, &t.full_subgroup(), p)
}

#[derive(Debug, Clone)]
pub struct CharacteristicSubgroups {
    pub derived: Subgroup,
    pub frattini: Subgroup,
    pub thompson: Subgroup,
}

/// Derived, Frattini, and Thompson subgroups of a p-group. The Frattini
/// subgroup is computed both as the intersection of the maximal subgroups and
/// as <commutators, p-th powers> (the smallest normal subgroup with
/// elementary abelian quotient); disagreement is an internal error.
pub fn characteristic_subgroups(
    t: &GroupTable,
    p_sub: &Subgroup,
    p: u64,
    bounds: &Bounds,
) -> Result<CharacteristicSubgroups> {
    let mut rest = p_sub.order();
    while rest % p as usize == 0 {
        rest /= p as usize;
    }
    if rest != 1 {
        return Err(Error::NotAPGroup {
            p,
            order: p_sub.order(),
        });
    }

    let derived = t.subgroup_derived_members(p_sub);

    let lat = subgroup_lattice(t, p_sub, bounds)?;
    let mut frattini = p_sub.clone();
    for i in lat.maximal_indices() {
        frattini = t.intersect(&frattini, &lat.subgroups[i]);
    }
    let mut seed = derived.members.clone();
    for &x in &p_sub.members {
        seed.push(t.pow(x, p as u32));
    }
    let agree = t.subgroup(&seed);
    if agree != frattini {
        return Err(Error::InternalInvariant(
            "frattini computations disagree".into(),
        ));
    }

    let max_abelian = lat
        .subgroups
        .iter()
        .filter(|s| t.subgroup_is_abelian(s))
        .map(|s| s.order())
        .max()
        .unwrap_or(1);
    let mut thompson_seed: Vec<u32> = Vec::new();
    for s in &lat.subgroups {
        if s.order() == max_abelian && t.subgroup_is_abelian(s) {
            thompson_seed.extend_from_slice(&s.members);
        }
    }
    let thompson = t.subgroup(&thompson_seed);

    Ok(CharacteristicSubgroups {
        derived,
        frattini,
        thompson,
    })
}

/// Direct definitional scan: a proper subgroup H containing a full Sylow
/// p-subgroup P0 of G with H meeting every outside conjugate of P0 trivially.
/// Returns the first witness in (order, members) order.
pub fn strongly_p_embedded(t: &GroupTable, p: u64, bounds: &Bounds) -> Result<Option<Subgroup>> {
    let full = t.full_subgroup();
    let v = v_p(t.order(), p);
    if v == 0 {
        return Ok(None);
    }
    let syl_order = pow_usize(p, v);
    let lat = subgroup_lattice(t, &full, bounds)?;
    'candidates: for h in &lat.subgroups {
        if h.order() == t.order() || h.order() % syl_order != 0 {
            continue;
        }
        let p0 = sylow_within(t, h, p);
        debug_assert_eq!(p0.order(), syl_order);
        for x in 0..t.order() as u32 {
            if h.contains(x) {
                continue;
            }
            let conj = t.conjugate_subgroup(&p0, x);
            if t.intersect(h, &conj).order() > 1 {
                continue 'candidates;
            }
        }
        return Ok(Some(h.clone()));
    }
    Ok(None)
}

/// Largest normal p-subgroup of the whole table.
pub fn o_p_group(t: &GroupTable, p: u64, bounds: &Bounds) -> Result<Subgroup> {
    let full = t.full_subgroup();
    let lat = subgroup_lattice(t, &full, bounds)?;
    let mut best = t.trivial_subgroup();
    for (i, s) in lat.subgroups.iter().enumerate() {
        if lat.normal[i] && s.order() > best.order() {
            let mut rest = s.order();
            while rest % p as usize == 0 {
                rest /= p as usize;
            }
            if rest == 1 {
                best = s.clone();
            }
        }
    }
    for (i, s) in lat.subgroups.iter().enumerate() {
        let mut rest = s.order();
        while rest % p as usize == 0 {
            rest /= p as usize;
        }
        if lat.normal[i] && rest == 1 && !s.is_subset_of(&best) {
            return Err(Error::InternalInvariant(
                "normal p-subgroups not contained in the largest one".into(),
            ));
        }
    }
    Ok(best)
}

#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub quotient: GroupTable,
    /// element index -> quotient element index
    pub projection: Vec<u32>,
}

/// G/N realized as the permutation action of G on the right cosets of N.
/// Cosets are numbered by their least element, ascending.
pub fn quotient_group(t: &GroupTable, n: &Subgroup) -> Result<QuotientGroup> {
    let full = t.full_subgroup();
    if !t.is_normal_in(n, &full) {
        return Err(Error::NotNormal);
    }
    let order = t.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<u32> = Vec::new();
    for g in 0..order as u32 {
        if coset_of[g as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(g);
        for &m in &n.members {
            coset_of[t.mul(m, g) as usize] = c;
        }
    }
    let m = reps.len();
    let mut perms: Vec<Perm> = Vec::with_capacity(order);
    for g in 0..order as u32 {
        let images: Vec<usize> = reps
            .iter()
            .map(|&r| coset_of[t.mul(r, g) as usize] as usize)
            .collect();
        perms.push(Perm::from_images(images).map_err(|_| {
            Error::InternalInvariant("coset action is not a permutation".into())
        })?);
    }
    let mut distinct = perms.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != m {
        return Err(Error::InternalInvariant(
            "coset action has wrong kernel".into(),
        ));
    }
    let quotient = GroupTable::from_elements(distinct)?;
    let projection: Vec<u32> = perms
        .iter()
        .map(|p| quotient.index_of(p).expect("projected element present"))
        .collect();
    Ok(QuotientGroup {
        quotient,
        projection,
    })
}

impl QuotientGroup {
    /// Image in the quotient of a subgroup of the source (need not contain
    /// the kernel).
    pub fn project_subgroup(&self, s: &Subgroup) -> Subgroup {
        let mut members: Vec<u32> = s.members.iter().map(|&m| self.projection[m as usize]).collect();
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    /// Full preimage of a quotient subgroup.
    pub fn preimage_subgroup(&self, s: &Subgroup) -> Subgroup {
        let members: Vec<u32> = (0..self.projection.len() as u32)
            .filter(|&g| s.contains(self.projection[g as usize]))
            .collect();
        Subgroup { members }
    }
}

/// True iff no section K/L of `p_sub` (L normal in K) is isomorphic to `h`.
pub fn section_free(
    t: &GroupTable,
    p_sub: &Subgroup,
    h: &GroupTable,
    bounds: &Bounds,
) -> Result<bool> {
    let lat = subgroup_lattice(t, p_sub, bounds)?;
    for k in &lat.subgroups {
        if k.order() % h.order() != 0 {
            continue;
        }
        let k_table = GroupTable::from_elements(
            k.members.iter().map(|&m| t.perm(m).clone()).collect(),
        )?;
        let k_lat = subgroup_lattice(&k_table, &k_table.full_subgroup(), bounds)?;
        for (i, l) in k_lat.subgroups.iter().enumerate() {
            if !k_lat.normal[i] || k.order() / l.order() != h.order() {
                continue;
            }
            let q = quotient_group(&k_table, l)?;
            if is_isomorphic(&q.quotient, h) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Y_1 = C_p wr C_p on p^2 points. For m > 1, Y_m is the pull-back of
/// C_p wr C_p -> C_p <- C_{p^m}: pairs moving the wreath points and the
/// p^m-cycle points in lock-step modulo p. |Y_m| = p^(p+m), asserted.
pub fn build_y(p: u64, m: u32, bounds: &Bounds) -> Result<GroupTable> {
    assert!(m >= 1);
    let pu = p as usize;
    let expected = pow_usize(p, p as u32 + m);
    if expected > bounds.max_group_order {
        return Err(Error::OrderBoundExceeded {
            bound: bounds.max_group_order,
        });
    }
    let wreath_pts = pu * pu;
    let degree = if m == 1 { wreath_pts } else { wreath_pts + pow_usize(p, m) };

    // First-block p-cycle.
    let mut b0: Vec<usize> = (0..degree).collect();
    for i in 0..pu {
        b0[i] = (i + 1) % pu;
    }
    // Block rotation, coupled (for m > 1) to the long cycle.
    let mut w: Vec<usize> = (0..degree).collect();
    for i in 0..wreath_pts {
        w[i] = (i + pu) % wreath_pts;
    }
    if m > 1 {
        let cm = pow_usize(p, m);
        for i in 0..cm {
            w[wreath_pts + i] = wreath_pts + (i + 1) % cm;
        }
    }
    let gens = vec![Perm::from_images(b0)?, Perm::from_images(w)?];
    let y = GroupTable::closure(&gens, degree, bounds)?;
    if y.order() != expected {
        return Err(Error::InternalInvariant(format!(
            "pull-back order {} differs from p^(p+m) = {}",
            y.order(),
            expected
        )));
    }
    Ok(y)
}

/// P is slim iff it has no subgroup isomorphic to any Y_m; only m with
/// p^(p+m) <= |P| can occur, by order.
pub fn is_slim(t: &GroupTable, p_sub: &Subgroup, p: u64, bounds: &Bounds) -> Result<bool> {
    let lat = subgroup_lattice(t, p_sub, bounds)?;
    let mut m = 1u32;
    loop {
        let y_order = pow_usize(p, p as u32 + m);
        if y_order > p_sub.order() {
            return Ok(true);
        }
        let y = build_y(p, m, bounds)?;
        for k in &lat.subgroups {
            if k.order() != y_order {
                continue;
            }
            let k_table = GroupTable::from_elements(
                k.members.iter().map(|&x| t.perm(x).clone()).collect(),
            )?;
            if is_isomorphic(&k_table, &y) {
                return Ok(false);
            }
        }
        m += 1;
    }
}
