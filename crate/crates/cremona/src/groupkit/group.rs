use std::collections::{BTreeMap, HashMap, VecDeque};

use num_integer::Integer;
use rand::Rng;

use super::{GroupElement, GroupError, Perm};

/// A finite group, materialized as an explicit element list.
///
/// Built either by closing a generating set under the operation
/// ([`FiniteGroup::closure`]) or by verifying that a given set is already
/// closed ([`FiniteGroup::from_closed_set`]). Element order in `elements()`
/// is the deterministic discovery order, so reports are reproducible.
#[derive(Clone, Debug)]
pub struct FiniteGroup<E: GroupElement> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<E>,
    identity: E,
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Close `generators` under the operation (breadth-first, right
    /// multiplication). Fails with `CapExceeded` if more than `cap` distinct
    /// elements appear.
    pub fn closure(generators: &[E], cap: usize) -> Result<FiniteGroup<E>, GroupError> {
        let first = generators.first().ok_or(GroupError::NoGenerators)?;
        let identity = first.op(&first.inv());
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity.clone(), 0);
        let mut queue = VecDeque::from([identity.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.op(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(FiniteGroup {
            elements,
            index,
            generators: generators.to_vec(),
            identity,
        })
    }

    /// Wrap a set that is claimed to be a full group: verifies pairwise
    /// closure, the presence of inverses and of an identity. O(n^2) ops.
    pub fn from_closed_set(elements: Vec<E>) -> Result<FiniteGroup<E>, GroupError> {
        let mut dedup = Vec::new();
        let mut index = HashMap::new();
        for e in elements {
            if !index.contains_key(&e) {
                index.insert(e.clone(), dedup.len());
                dedup.push(e);
            }
        }
        let identity = dedup
            .iter()
            .find(|e| e.op(e) == **e)
            .cloned()
            .ok_or(GroupError::NoIdentity)?;
        for a in &dedup {
            if !index.contains_key(&a.inv()) {
                return Err(GroupError::NotClosed);
            }
            if identity.op(a) != *a || a.op(&identity) != *a {
                return Err(GroupError::NoIdentity);
            }
            for b in &dedup {
                if !index.contains_key(&a.op(b)) {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        Ok(FiniteGroup {
            generators: dedup.clone(),
            elements: dedup,
            index,
            identity,
        })
    }

    /// Closure that additionally checks the defining relations of a
    /// presentation and the expected order. Relation words are lists of
    /// nonzero integers: `k > 0` stands for `generators[k-1]`, `k < 0` for
    /// its inverse.
    pub fn verify_presentation(
        generators: &[E],
        relations: &[Vec<i32>],
        expected_order: usize,
    ) -> Result<FiniteGroup<E>, GroupError> {
        let group = FiniteGroup::closure(generators, expected_order)?;
        if group.order() != expected_order {
            return Err(GroupError::OrderMismatch {
                want: expected_order,
                got: group.order(),
            });
        }
        for (index, word) in relations.iter().enumerate() {
            let mut acc = group.identity.clone();
            for &k in word {
                assert!(k != 0 && k.unsigned_abs() as usize <= generators.len());
                let g = &generators[k.unsigned_abs() as usize - 1];
                acc = if k > 0 { acc.op(g) } else { acc.op(&g.inv()) };
            }
            if acc != group.identity {
                return Err(GroupError::RelationFails { index });
            }
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    /// Multiplicative order of an element of this group.
    pub fn element_order(&self, e: &E) -> usize {
        assert!(self.contains(e), "element order of a non-member");
        let mut acc = e.clone();
        let mut n = 1;
        while acc != self.identity {
            acc = acc.op(e);
            n += 1;
            assert!(n <= self.order(), "operation is not associative?");
        }
        n
    }

    /// How many elements have each multiplicative order. A cheap
    /// isomorphism-class fingerprint: isomorphic groups have equal
    /// histograms (the converse can fail, so treat it as a consistency
    /// check, not a proof of isomorphism).
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for e in &self.elements {
            *hist.entry(self.element_order(e)).or_insert(0) += 1;
        }
        hist
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements
            .iter()
            .map(|e| self.element_order(e))
            .fold(1, |a, b| a.lcm(&b))
    }

    /// Elements commuting with every generator (equivalently, with the whole
    /// group).
    pub fn center(&self) -> Vec<E> {
        self.elements
            .iter()
            .filter(|e| self.generators.iter().all(|g| e.op(g) == g.op(e)))
            .cloned()
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.op(b) == b.op(a)))
    }

    /// Is `self` a normal subgroup of `ambient`? Checks membership and
    /// invariance under conjugation by the ambient generators.
    pub fn is_normal_in(&self, ambient: &FiniteGroup<E>) -> Result<bool, GroupError> {
        if self.elements.iter().any(|e| !ambient.contains(e)) {
            return Err(GroupError::NotASubgroup);
        }
        for g in &ambient.generators {
            let g_inv = g.inv();
            for h in &self.elements {
                if !self.contains(&g.op(h).op(&g_inv)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The action of this group on the left cosets of a normal subgroup,
    /// returned as a permutation group. For normal `n` the action's image is
    /// isomorphic to the quotient group, so this is how quotient structure
    /// gets inspected.
    pub fn coset_action(&self, normal: &FiniteGroup<E>) -> Result<FiniteGroup<Perm>, GroupError> {
        if normal.is_normal_in(self) != Ok(true) {
            return Err(GroupError::NotASubgroup);
        }
        let mut coset_of: HashMap<E, usize> = HashMap::new();
        let mut reps: Vec<E> = Vec::new();
        for x in &self.elements {
            if coset_of.contains_key(x) {
                continue;
            }
            let c = reps.len();
            for n in normal.elements() {
                coset_of.insert(x.op(n), c);
            }
            reps.push(x.clone());
        }
        assert!(reps.len() <= u8::MAX as usize, "too many cosets for Perm");
        let images: Vec<Perm> = self
            .generators
            .iter()
            .map(|g| {
                Perm::from_images(
                    reps.iter()
                        .map(|r| coset_of[&g.op(r)] as u8)
                        .collect(),
                )
            })
            .collect();
        FiniteGroup::closure(&images, reps.len())
    }

    /// Spot-check the latin-square property on random pairs: `a * x = b`
    /// must have the solution `x = a^-1 b` inside the group. Always true
    /// for an actual group; useful as a randomized self-test of an element
    /// type's `op`/`inv` implementation.
    pub fn latin_square_sample(&self, rng: &mut impl Rng, samples: usize) -> bool {
        for _ in 0..samples {
            let a = &self.elements[rng.gen_range(0..self.order())];
            let b = &self.elements[rng.gen_range(0..self.order())];
            let x = a.inv().op(b);
            if !self.contains(&x) || a.op(&x) != *b {
                return false;
            }
        }
        true
    }
}
