use std::collections::HashMap;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Full multiplication tables are stored only up to this many elements;
/// larger groups multiply by composing permutations on the fly.
const DENSE_LIMIT: usize = 2048;

/// A finite permutation group, fully materialized. Elements are sorted
/// lexicographically by image vector, which puts the identity at index 0
/// (the first moved point of a non-identity permutation must move up).
/// All other component types refer to elements by index into this table.
#[derive(Debug, Clone)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    mult: Option<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    generator_indices: Vec<u32>,
}

impl GroupTable {
    /// Breadth-first closure of the generators, identity first, right
    /// multiplication by generators in input order. Deterministic.
    pub fn closure(generators: &[Perm], degree: usize, bounds: &Bounds) -> Result<GroupTable> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let mut queue: Vec<Perm> = vec![Perm::identity(degree)];
        seen.insert(queue[0].clone(), ());
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head].clone();
            head += 1;
            for g in generators {
                let next = cur.then(g);
                if !seen.contains_key(&next) {
                    if queue.len() >= bounds.max_group_order {
                        return Err(Error::OrderBoundExceeded {
                            bound: bounds.max_group_order,
                        });
                    }
                    seen.insert(next.clone(), ());
                    queue.push(next);
                }
            }
        }
        Self::finalize(queue, generators)
    }

    /// Builds a table from an explicit element list, verifying that the set
    /// is a group (identity present, closed under multiplication).
    pub fn from_elements(elements: Vec<Perm>) -> Result<GroupTable> {
        if elements.is_empty() {
            return Err(Error::InternalInvariant("empty element list".into()));
        }
        Self::finalize(elements, &[])
    }

    fn finalize(mut elements: Vec<Perm>, generators: &[Perm]) -> Result<GroupTable> {
        let degree = elements[0].degree();
        for e in &elements {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: e.degree(),
                });
            }
        }
        elements.sort();
        let before = elements.len();
        elements.dedup();
        if elements.len() != before {
            return Err(Error::InternalInvariant("duplicate elements".into()));
        }
        if !elements[0].is_identity() {
            return Err(Error::InternalInvariant("identity missing".into()));
        }
        let n = elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.clone(), i as u32);
        }

        let mut t = GroupTable {
            degree,
            elements,
            index,
            mult: None,
            inverse: Vec::new(),
            orders: Vec::new(),
            generator_indices: Vec::new(),
        };

        if n <= DENSE_LIMIT {
            let mut mult = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    let prod = t.elements[i].then(&t.elements[j]);
                    match t.index.get(&prod) {
                        Some(&k) => mult[i * n + j] = k,
                        None => {
                            return Err(Error::InternalInvariant(
                                "element set not closed under multiplication".into(),
                            ))
                        }
                    }
                }
            }
            t.mult = Some(mult);
        } else {
            // Too big for a dense table: prove closure by reproducing the set
            // from a greedy generating subset (a finite subset containing the
            // identity equals the group it generates iff the sizes match).
            let gens = t.greedy_generator_indices();
            let reached = t.closure_members(&gens);
            if reached.len() != n {
                return Err(Error::InternalInvariant(
                    "element set not closed under multiplication".into(),
                ));
            }
        }

        let mut inverse = Vec::with_capacity(n);
        for i in 0..n {
            let inv = t.elements[i].inverse();
            match t.index.get(&inv) {
                Some(&j) => inverse.push(j),
                None => {
                    return Err(Error::InternalInvariant(
                        "inverse missing from element set".into(),
                    ))
                }
            }
        }
        t.inverse = inverse;

        t.orders = (0..n as u32)
            .map(|i| {
                let mut ord = 1;
                let mut x = i;
                while x != 0 {
                    x = t.mul(x, i);
                    ord += 1;
                }
                ord
            })
            .collect();

        t.generator_indices = generators
            .iter()
            .filter_map(|g| t.index.get(g).copied())
            .collect();

        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn perm(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generator_indices
    }

    pub fn mul(&self, i: u32, j: u32) -> u32 {
        match &self.mult {
            Some(m) => m[i as usize * self.elements.len() + j as usize],
            None => {
                let prod = self.elements[i as usize].then(&self.elements[j as usize]);
                self.index[&prod]
            }
        }
    }

    pub fn inv(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    pub fn element_order(&self, i: u32) -> u32 {
        self.orders[i as usize]
    }

    /// g^{-1} x g.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// x^{-1} y^{-1} x y.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: u32, k: u32) -> u32 {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order() as u32;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Subgroup generated by the seed indices, as a sorted member list.
    /// Breadth-first inside the table; cost O(result * seeds).
    pub fn closure_members(&self, seed: &[u32]) -> Vec<u32> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0u32];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in seed {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Greedy generating sequence: walk elements in index order, keeping
    /// those outside the subgroup generated so far.
    pub fn greedy_generator_indices(&self) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut cur_len = 1;
        for i in 1..self.order() as u32 {
            if cur_len == self.order() {
                break;
            }
            let mut trial = gens.clone();
            trial.push(i);
            let reached = self.closure_members(&trial);
            if reached.len() > cur_len {
                gens = trial;
                cur_len = reached.len();
            }
        }
        gens
    }

    pub fn center_members(&self) -> Vec<u32> {
        let n = self.order() as u32;
        (0..n)
            .filter(|&x| (0..n).all(|g| self.mul(x, g) == self.mul(g, x)))
            .collect()
    }

    pub fn derived_members(&self) -> Vec<u32> {
        let n = self.order() as u32;
        let mut comms: Vec<u32> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                comms.push(self.commutator(x, y));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.closure_members(&comms)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        let p = p as usize;
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(specs: &[&str], degree: usize) -> Vec<Perm> {
        specs
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect()
    }

    #[test]
    fn closure_of_empty_is_trivial() {
        let t = GroupTable::closure(&[], 4, &Bounds::default()).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.degree(), 4);
    }

    #[test]
    fn closure_s4() {
        let t = GroupTable::closure(&perms(&["(0 1)", "(0 1 2 3)"], 4), 4, &Bounds::default())
            .unwrap();
        assert_eq!(t.order(), 24);
        assert!(!t.is_abelian());
        assert_eq!(t.center_members(), vec![0]);
        // A4 is the derived subgroup of S4.
        assert_eq!(t.derived_members().len(), 12);
    }

    #[test]
    fn closure_respects_bound() {
        let b = Bounds::default().with_max_order(10);
        let err = GroupTable::closure(&perms(&["(0 1)", "(0 1 2 3)"], 4), 4, &b).unwrap_err();
        assert!(matches!(err, Error::OrderBoundExceeded { bound: 10 }));
    }

    #[test]
    fn closure_rejects_mixed_degrees() {
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let err = GroupTable::closure(&[a], 4, &Bounds::default()).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn identity_sits_at_zero_and_mult_is_consistent() {
        let t = GroupTable::closure(&perms(&["(0 1 2 3)", "(1 3)"], 4), 4, &Bounds::default())
            .unwrap();
        assert_eq!(t.order(), 8);
        assert!(t.perm(0).is_identity());
        for i in 0..t.order() as u32 {
            assert_eq!(t.mul(i, t.inv(i)), 0);
            assert_eq!(t.mul(t.inv(i), i), 0);
            assert_eq!(t.mul(i, 0), i);
        }
    }

    #[test]
    fn element_orders_dihedral() {
        let t = GroupTable::closure(&perms(&["(0 1 2 3)", "(1 3)"], 4), 4, &Bounds::default())
            .unwrap();
        let mut orders: Vec<u32> = (0..8).map(|i| t.element_order(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 2, 2, 4, 4]);
    }

    #[test]
    fn from_elements_accepts_groups_and_rejects_nongroups() {
        let c3 = GroupTable::closure(&perms(&["(0 1 2)"], 3), 3, &Bounds::default()).unwrap();
        let rebuilt = GroupTable::from_elements(c3.elements().to_vec()).unwrap();
        assert_eq!(rebuilt.order(), 3);

        let not_closed = vec![
            Perm::identity(3),
            Perm::parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        assert!(GroupTable::from_elements(not_closed).is_err());

        let no_identity = vec![
            Perm::parse_cycles("(0 1)", 3).unwrap(),
            Perm::parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        assert!(GroupTable::from_elements(no_identity).is_err());
    }

    #[test]
    fn closure_members_generates_subgroups() {
        let t = GroupTable::closure(&perms(&["(0 1)", "(0 1 2 3)"], 4), 4, &Bounds::default())
            .unwrap();
        let four_cycle = t.index_of(&Perm::parse_cycles("(0 1 2 3)", 4).unwrap()).unwrap();
        assert_eq!(t.closure_members(&[four_cycle]).len(), 4);
        assert_eq!(t.closure_members(&[]).len(), 1);
    }

    #[test]
    fn conjugation_matches_perm_level() {
        let t = GroupTable::closure(&perms(&["(0 1)", "(0 1 2 3)"], 4), 4, &Bounds::default())
            .unwrap();
        for x in 0..t.order() as u32 {
            for g in 0..t.order() as u32 {
                let expect = t.perm(x).conjugate_by(t.perm(g));
                assert_eq!(t.conj(x, g), t.index_of(&expect).unwrap());
            }
        }
    }
}
