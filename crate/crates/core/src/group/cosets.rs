use serde::Serialize;

use super::{Group, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Cosets `Hx`.
    Right,
    /// Cosets `xH`.
    Left,
}

/// Partition of a group into cosets of a subgroup.
///
/// Coset `k` is the coset of the smallest element not in cosets `0..k`, so the
/// subgroup itself is always coset 0. Each coset lists its elements in
/// increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    side: Side,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl CosetDecomposition {
    pub fn new(g: &Group, h: &Subgroup, side: Side) -> Self {
        let n = g.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets = Vec::with_capacity(n / h.order());
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let k = cosets.len();
            let mut coset: Vec<usize> = h
                .elems()
                .iter()
                .map(|&s| match side {
                    Side::Right => g.mul(s, x),
                    Side::Left => g.mul(x, s),
                })
                .collect();
            coset.sort_unstable();
            for &y in &coset {
                coset_of[y] = k;
            }
            cosets.push(coset);
        }
        CosetDecomposition { side, cosets, coset_of }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    #[inline]
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// Number of the coset containing the identity. Always 0.
    pub fn subgroup_coset(&self) -> usize {
        self.coset_of[0]
    }

    /// Same blocks, ignoring numbering.
    pub fn same_partition(&self, other: &CosetDecomposition) -> bool {
        let mut a = self.cosets.clone();
        let mut b = other.cosets.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// A group together with a subgroup and both coset decompositions: the
/// ambient data every transversal refers back to.
#[derive(Clone, Debug)]
pub struct CosetSpace<'g> {
    group: &'g Group,
    subgroup: Subgroup,
    right: CosetDecomposition,
    left: CosetDecomposition,
}

impl<'g> CosetSpace<'g> {
    pub fn new(group: &'g Group, subgroup: Subgroup) -> Self {
        let right = CosetDecomposition::new(group, &subgroup, Side::Right);
        let left = CosetDecomposition::new(group, &subgroup, Side::Left);
        CosetSpace { group, subgroup, right, left }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn right(&self) -> &CosetDecomposition {
        &self.right
    }

    pub fn left(&self) -> &CosetDecomposition {
        &self.left
    }

    /// `[G:H]`
    pub fn index(&self) -> usize {
        self.right.len()
    }

    pub fn is_normal(&self) -> bool {
        self.group.is_normal(&self.subgroup)
    }
}
