use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::subgroup::Subgroup;
use crate::group::table::GroupTable;
use crate::perm::Perm;

/// Group homomorphism between subgroups, as a full element map.
/// `images[i]` is the image of `domain[i]`; domain is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMap {
    pub domain: Vec<u32>,
    pub images: Vec<u32>,
}

impl GroupMap {
    pub fn apply(&self, x: u32) -> Option<u32> {
        self.domain.binary_search(&x).ok().map(|i| self.images[i])
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted = self.images.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// Backtracking over generator images. Domain and codomain may live in
/// different tables (used for isomorphism testing across tables); the two
/// tables coincide for the subgroup-to-subgroup searches.
struct Search<'a> {
    ta: &'a GroupTable,
    tb: &'a GroupTable,
    gens: Vec<u32>,
    codomain: Vec<u32>,
    injective: bool,
    surjective: bool,
    first_only: bool,
    found: Vec<Vec<u32>>, // dense element->image maps over ta, u32::MAX = unset
}

const UNSET: u32 = u32::MAX;

impl<'a> Search<'a> {
    /// Extends the current partial map by gen -> image and closes under
    /// products with all assigned generators. `map` is dense over ta's
    /// elements; `elems` lists the mapped elements in discovery order.
    fn extend(
        &self,
        map: &mut Vec<u32>,
        elems: &mut Vec<u32>,
        assigned: &[(u32, u32)],
    ) -> bool {
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for &(g, img_g) in assigned {
                let y = self.ta.mul(x, g);
                let img_y = self.tb.mul(map[x as usize], img_g);
                let slot = &mut map[y as usize];
                if *slot == UNSET {
                    *slot = img_y;
                    elems.push(y);
                } else if *slot != img_y {
                    return false;
                }
            }
        }
        if self.injective {
            let mut sorted: Vec<u32> = elems.iter().map(|&e| map[e as usize]).collect();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }

    fn recurse(&mut self, pos: usize, map: Vec<u32>, elems: Vec<u32>, assigned: Vec<(u32, u32)>) {
        if self.first_only && !self.found.is_empty() {
            return;
        }
        if pos == self.gens.len() {
            if self.surjective {
                let mut images: Vec<u32> = elems.iter().map(|&e| map[e as usize]).collect();
                images.sort_unstable();
                images.dedup();
                if images.len() != self.codomain.len() {
                    return;
                }
            }
            self.found.push(map);
            return;
        }
        let g = self.gens[pos];
        let g_order = self.ta.element_order(g);
        let candidates = self.codomain.clone();
        for y in candidates {
            let y_order = self.tb.element_order(y);
            let ok = if self.injective {
                y_order == g_order
            } else {
                g_order % y_order == 0
            };
            if !ok {
                continue;
            }
            let mut map2 = map.clone();
            let mut elems2 = elems.clone();
            let mut assigned2 = assigned.clone();
            if map2[g as usize] == UNSET {
                map2[g as usize] = y;
                elems2.push(g);
            } else if map2[g as usize] != y {
                continue;
            }
            assigned2.push((g, y));
            if self.extend(&mut map2, &mut elems2, &assigned2) {
                self.recurse(pos + 1, map2, elems2, assigned2);
            }
        }
    }
}

fn greedy_subgroup_generators(t: &GroupTable, members: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut cur = vec![0u32];
    for &m in members {
        if cur.binary_search(&m).is_err() {
            gens.push(m);
            cur = t.closure_members(&gens);
            if cur.len() == members.len() {
                break;
            }
        }
    }
    gens
}

fn hom_search(
    ta: &GroupTable,
    q: &[u32],
    tb: &GroupTable,
    r: &[u32],
    injective: bool,
    surjective: bool,
    first_only: bool,
) -> Vec<GroupMap> {
    if injective && r.len() < q.len() {
        return Vec::new();
    }
    if surjective && (q.len() < r.len() || (injective && q.len() != r.len())) {
        return Vec::new();
    }
    let gens = greedy_subgroup_generators(ta, q);
    let mut s = Search {
        ta,
        tb,
        gens,
        codomain: r.to_vec(),
        injective,
        surjective,
        first_only,
        found: Vec::new(),
    };
    let mut map = vec![UNSET; ta.order()];
    map[0] = 0;
    s.recurse(0, map, vec![0], Vec::new());
    let mut out: Vec<GroupMap> = s
        .found
        .iter()
        .map(|m| GroupMap {
            domain: q.to_vec(),
            images: q.iter().map(|&x| m[x as usize]).collect(),
        })
        .collect();
    out.sort_by(|a, b| a.images.cmp(&b.images));
    out.dedup();
    out
}

/// All homomorphisms Q -> R, injective only when flagged. Search is over
/// generator images with order-profile pruning; the homomorphism law is
/// enforced on every (element, generator) product during extension.
pub fn homomorphisms(
    t: &GroupTable,
    q: &Subgroup,
    r: &Subgroup,
    injective_only: bool,
    bounds: &Bounds,
) -> Result<Vec<GroupMap>> {
    if q.order() > bounds.max_hom_domain {
        return Err(Error::SearchBoundExceeded(format!(
            "hom domain of order {} exceeds {}",
            q.order(),
            bounds.max_hom_domain
        )));
    }
    Ok(hom_search(t, &q.members, t, &r.members, injective_only, false, false))
}

/// Aut(Q) materialized as a permutation group on Q's member list:
/// position i moves to the position of the image of members[i].
pub fn automorphism_group(t: &GroupTable, q: &Subgroup, bounds: &Bounds) -> Result<GroupTable> {
    if q.order() > bounds.max_hom_domain {
        return Err(Error::SearchBoundExceeded(format!(
            "automorphism domain of order {} exceeds {}",
            q.order(),
            bounds.max_hom_domain
        )));
    }
    let autos = hom_search(t, &q.members, t, &q.members, true, true, false);
    let perms: Vec<Perm> = autos
        .iter()
        .map(|a| {
            let images: Vec<usize> = a
                .images
                .iter()
                .map(|im| q.position(*im).expect("image inside subgroup"))
                .collect();
            Perm::from_images(images).expect("automorphism is a bijection")
        })
        .collect();
    GroupTable::from_elements(perms)
}

/// Isomorphism test between standalone tables. Order and element-order
/// profiles prune first; then a backtracking search for one bijective
/// homomorphism decides.
pub fn is_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let mut pa: Vec<u32> = (0..a.order() as u32).map(|i| a.element_order(i)).collect();
    let mut pb: Vec<u32> = (0..b.order() as u32).map(|i| b.element_order(i)).collect();
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return false;
    }
    let qa: Vec<u32> = (0..a.order() as u32).collect();
    let rb: Vec<u32> = (0..b.order() as u32).collect();
    !hom_search(a, &qa, b, &rb, true, true, true).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(specs: &[&str], degree: usize) -> GroupTable {
        let gens: Vec<Perm> = specs
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        GroupTable::closure(&gens, degree, &Bounds::default()).unwrap()
    }

    #[test]
    fn unique_injection_between_c2s() {
        let t = table(&["(0 1)", "(2 3)"], 4);
        let q = t.subgroup(&[t.index_of(&Perm::parse_cycles("(0 1)", 4).unwrap()).unwrap()]);
        let r = t.subgroup(&[t.index_of(&Perm::parse_cycles("(2 3)", 4).unwrap()).unwrap()]);
        let homs = homomorphisms(&t, &q, &r, true, &Bounds::default()).unwrap();
        assert_eq!(homs.len(), 1);
        let all = homomorphisms(&t, &q, &r, false, &Bounds::default()).unwrap();
        assert_eq!(all.len(), 2); // trivial map and the injection
    }

    #[test]
    fn no_injection_c4_into_c2() {
        let t = table(&["(0 1 2 3)", "(4 5)"], 6);
        let c4 = t.subgroup(&[t.index_of(&Perm::parse_cycles("(0 1 2 3)", 6).unwrap()).unwrap()]);
        let c2 = t.subgroup(&[t.index_of(&Perm::parse_cycles("(4 5)", 6).unwrap()).unwrap()]);
        let homs = homomorphisms(&t, &c4, &c2, true, &Bounds::default()).unwrap();
        assert!(homs.is_empty());
        // Non-injective: trivial map plus the one killing the square.
        let all = homomorphisms(&t, &c4, &c2, false, &Bounds::default()).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn klein_four_has_six_automorphisms() {
        let t = table(&["(0 1)", "(2 3)"], 4);
        let v4 = t.full_subgroup();
        let aut = automorphism_group(&t, &v4, &Bounds::default()).unwrap();
        assert_eq!(aut.order(), 6);
        assert!(!aut.is_abelian());
    }

    #[test]
    fn d8_has_eight_automorphisms() {
        let t = table(&["(0 1 2 3)", "(1 3)"], 4);
        let aut = automorphism_group(&t, &t.full_subgroup(), &Bounds::default()).unwrap();
        assert_eq!(aut.order(), 8);
    }

    #[test]
    fn hom_domain_bound() {
        let t = table(&["(0 1 2 3)", "(1 3)"], 4);
        let b = Bounds {
            max_hom_domain: 4,
            ..Bounds::default()
        };
        let full = t.full_subgroup();
        assert!(matches!(
            homomorphisms(&t, &full, &full, true, &b),
            Err(Error::SearchBoundExceeded(_))
        ));
    }

    #[test]
    fn isomorphism_separates_the_order_four_groups() {
        let c4 = table(&["(0 1 2 3)"], 4);
        let v4 = table(&["(0 1)", "(2 3)"], 4);
        let c4b = table(&["(0 1 2 3 4 5)"], 6); // C6, different order
        assert!(!is_isomorphic(&c4, &v4));
        assert!(!is_isomorphic(&c4, &c4b));
        let c4_again = table(&["(2 3 4 5)"], 6);
        assert!(is_isomorphic(&c4, &c4_again));
    }

    #[test]
    fn d8_isomorphic_to_c2_wreath_c2() {
        let d8 = table(&["(0 1 2 3)", "(1 3)"], 4);
        let wreath = table(&["(0 1)", "(0 2)(1 3)"], 4);
        assert_eq!(wreath.order(), 8);
        assert!(is_isomorphic(&d8, &wreath));
    }

    #[test]
    fn hom_law_holds_for_all_found_maps() {
        let t = table(&["(0 1)", "(0 1 2 3)"], 4);
        let d8 = t.subgroup(&[
            t.index_of(&Perm::parse_cycles("(0 1 2 3)", 4).unwrap()).unwrap(),
            t.index_of(&Perm::parse_cycles("(1 3)", 4).unwrap()).unwrap(),
        ]);
        let s3 = t.subgroup(&[
            t.index_of(&Perm::parse_cycles("(0 1)", 4).unwrap()).unwrap(),
            t.index_of(&Perm::parse_cycles("(0 1 2)", 4).unwrap()).unwrap(),
        ]);
        for m in homomorphisms(&t, &d8, &s3, false, &Bounds::default()).unwrap() {
            for &x in &m.domain {
                for &y in &m.domain {
                    let lhs = m.apply(t.mul(x, y)).unwrap();
                    let rhs = t.mul(m.apply(x).unwrap(), m.apply(y).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
