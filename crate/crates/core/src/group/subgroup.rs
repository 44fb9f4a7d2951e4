use std::collections::HashSet;

use crate::error::{Error, Result};

use super::Group;

/// Default cap on the group order accepted by [`Subgroup::all`].
pub const DEFAULT_SUBGROUP_SWEEP_CAP: usize = 48;

/// A closed subset of a group's element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elems: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Subgroup {
    pub(crate) fn from_sorted_unchecked(g: &Group, elems: Vec<usize>) -> Self {
        let mut position = vec![None; g.order()];
        for (k, &e) in elems.iter().enumerate() {
            position[e] = Some(k);
        }
        Subgroup { elems, position }
    }

    /// Closure of `gens` (and the identity) under multiplication.
    pub(crate) fn generate(g: &Group, gens: &[usize]) -> Self {
        let mut member = vec![false; g.order()];
        member[0] = true;
        let mut found = vec![0];
        let mut k = 0;
        while k < found.len() {
            let x = found[k];
            for &s in gens {
                let y = g.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    found.push(y);
                }
            }
            k += 1;
        }
        found.sort_unstable();
        Self::from_sorted_unchecked(g, found)
    }

    /// Accept an explicit element list after checking it is a subgroup.
    pub fn from_elems(g: &Group, elems: &[usize]) -> Result<Self> {
        let mut sorted = elems.to_vec();
        for &e in &sorted {
            g.check_index(e)?;
        }
        sorted.sort_unstable();
        sorted.dedup();
        let h = Self::from_sorted_unchecked(g, sorted);
        if !h.contains(0) {
            return Err(Error::NotASubgroup { reason: "identity 0 is missing".into() });
        }
        for &a in h.elems() {
            for &b in h.elems() {
                if !h.contains(g.mul(a, b)) {
                    return Err(Error::NotASubgroup { reason: format!("{a}*{b} = {} is missing", g.mul(a, b)) });
                }
            }
        }
        Ok(h)
    }

    /// Every subgroup of `g` exactly once, sorted by size then element list.
    ///
    /// Starts from the cyclic subgroups and repeatedly extends each known
    /// subgroup by one outside element until nothing new appears.
    pub fn all(g: &Group, order_cap: usize) -> Result<Vec<Subgroup>> {
        if g.order() > order_cap {
            return Err(Error::GroupTooLarge { order: g.order(), cap: order_cap });
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut frontier: Vec<Subgroup> = Vec::new();
        for x in g.elements() {
            let c = Self::generate(g, &[x]);
            if seen.insert(c.elems.clone()) {
                frontier.push(c);
            }
        }
        let mut all = frontier.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for x in g.elements().filter(|&x| !h.contains(x)) {
                    let mut gens = h.elems.clone();
                    gens.push(x);
                    let k = Self::generate(g, &gens);
                    if seen.insert(k.elems.clone()) {
                        next.push(k);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
        Ok(all)
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.position.get(g).is_some_and(Option::is_some)
    }

    /// Position of `g` in [`Subgroup::elems`].
    #[inline]
    pub fn position(&self, g: usize) -> Option<usize> {
        self.position.get(g).copied().flatten()
    }
}
