//! The right loop induced on a transversal by `{x ∘ y} = Hxy ∩ S`, and the
//! c-groupoid data describing how the transversal and the subgroup multiply.

mod cgroupoid;

use std::collections::{HashMap, HashSet};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::transversal::Transversal;

pub use cgroupoid::{c_groupoid, CGroupoid, CGroupoidViolation};

/// A right loop on `0..size` with identity 0. Entry `(i, j)` of the table is
/// `i ∘ j`; column `x` is the right translation `R_x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightLoop {
    size: usize,
    table: Vec<usize>,
}

impl RightLoop {
    /// Validate a table: two-sided identity at 0 and bijective columns.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidLoop { reason: "table must be square and nonempty".into() });
        }
        if let Some(v) = rows.iter().flatten().find(|&&v| v >= size) {
            return Err(Error::InvalidLoop { reason: format!("entry {v} out of range") });
        }
        let l = RightLoop { size, table: rows.concat() };
        l.check_axioms()?;
        Ok(l)
    }

    pub(crate) fn from_flat(size: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        RightLoop { size, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.size..(a + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// `R_x : y ↦ y ∘ x` as an image list.
    pub fn right_translation(&self, x: usize) -> Vec<usize> {
        (0..self.size).map(|y| self.op(y, x)).collect()
    }

    pub fn right_translations(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|x| self.right_translation(x)).collect()
    }

    /// Identity on both sides, bijective right translations, and the identity
    /// as the only idempotent.
    pub fn check_axioms(&self) -> Result<()> {
        let bad = |reason: String| Err(Error::InvalidLoop { reason });
        for x in 0..self.size {
            if self.op(0, x) != x || self.op(x, 0) != x {
                return bad(format!("0 is not a two-sided identity at {x}"));
            }
        }
        for x in 0..self.size {
            if !is_permutation(&self.right_translation(x)) {
                return bad(format!("right translation R_{x} is not a bijection"));
            }
        }
        if let Some(x) = (1..self.size).find(|&x| self.op(x, x) == x) {
            return bad(format!("{x} is a non-identity idempotent"));
        }
        Ok(())
    }

    pub fn is_associative(&self) -> bool {
        let n = self.size;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c)))))
    }

    /// A map `r` with `R_x^{-1} = R_{r(x)}` for every `x`, if one exists.
    /// Picks the smallest such `r(x)`.
    pub fn has_rip(&self) -> Option<Vec<usize>> {
        let columns = self.right_translations();
        let mut first: HashMap<&[usize], usize> = HashMap::new();
        for (z, c) in columns.iter().enumerate() {
            first.entry(c.as_slice()).or_insert(z);
        }
        columns.iter().map(|c| first.get(invert(c).as_slice()).copied()).collect()
    }

    /// Every `R_x R_y R_x^{-1}` (rightmost map applied first) is some `R_z`.
    pub fn is_rcc(&self) -> bool {
        let columns = self.right_translations();
        let set: HashSet<&[usize]> = columns.iter().map(Vec::as_slice).collect();
        let inverses: Vec<Vec<usize>> = columns.iter().map(|c| invert(c)).collect();
        let mut conj = vec![0; self.size];
        for (rx, rx_inv) in columns.iter().zip(&inverses) {
            for ry in &columns {
                for (s, slot) in conj.iter_mut().enumerate() {
                    *slot = rx[ry[rx_inv[s]]];
                }
                if !set.contains(conj.as_slice()) {
                    return false;
                }
            }
        }
        true
    }

    /// `x ∘ X = 1` is solvable for every `x`: each row contains 0.
    pub fn solves_unit_equation(&self) -> bool {
        (0..self.size).all(|x| self.row(x).contains(&0))
    }

    /// Relabel along a bijection `p`: the result satisfies
    /// `p(a ∘ b) = p(a) ∘' p(b)`.
    pub fn transport(&self, p: &[usize]) -> RightLoop {
        let n = self.size;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[p[a] * n + p[b]] = p[self.op(a, b)];
            }
        }
        RightLoop { size: n, table }
    }
}

impl Serialize for RightLoop {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            size: usize,
            table: Vec<Vec<usize>>,
        }
        Repr { size: self.size, table: self.rows() }.serialize(serializer)
    }
}

pub(crate) fn is_permutation(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&v| v < images.len() && !std::mem::replace(&mut seen[v], true))
}

pub(crate) fn invert(images: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; images.len()];
    for (p, &q) in images.iter().enumerate() {
        inv[q] = p;
    }
    inv
}

/// `i ∘ j` is the coset number of `reps[i] * reps[j]`, so loop indices are
/// right-coset numbers and the identity coset is 0.
pub fn induced_loop(s: &Transversal<'_>) -> RightLoop {
    let g = s.space().group();
    let reps = s.reps();
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &x in reps {
        for &y in reps {
            table.push(s.loop_index_of(g.mul(x, y)));
        }
    }
    RightLoop::from_flat(m, table)
}

/// The three conditions that each characterize a both-sided transversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BothSidedCriteria {
    pub sigma_surjective: bool,
    pub unit_solvable: bool,
    pub both_sided: bool,
}

impl BothSidedCriteria {
    pub fn agree(&self) -> bool {
        self.sigma_surjective == self.unit_solvable && self.unit_solvable == self.both_sided
    }
}

pub fn both_sided_criteria(s: &Transversal<'_>) -> BothSidedCriteria {
    BothSidedCriteria {
        sigma_surjective: c_groupoid(s).sigma_surjective_all(),
        unit_solvable: induced_loop(s).solves_unit_equation(),
        both_sided: s.is_left_transversal(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, CosetSpace, Group};
    use crate::transversal::enumerate_nrts;

    fn cyclic_loop(n: usize) -> RightLoop {
        RightLoop::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()).unwrap()
    }

    /// All right loops of order 3 with identity 0.
    fn order3_right_loops() -> Vec<RightLoop> {
        let mut out = Vec::new();
        for c1 in [[0, 2], [2, 0]] {
            for c2 in [[0, 1], [1, 0]] {
                let rows = vec![vec![0, 1, 2], vec![1, c1[0], c2[0]], vec![2, c1[1], c2[1]]];
                if let Ok(l) = RightLoop::from_table(rows) {
                    out.push(l);
                }
            }
        }
        out
    }

    #[test]
    fn validation() {
        assert!(RightLoop::from_table(vec![vec![0]]).is_ok());
        assert!(RightLoop::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(RightLoop::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(RightLoop::from_table(vec![]).is_err());
    }

    #[test]
    fn trivial_and_whole_subgroups() {
        let g = named_group("symmetric", 3).unwrap();
        let triv = CosetSpace::new(&g, g.trivial_subgroup());
        let l = induced_loop(&crate::transversal::Transversal::canonical(&triv));
        assert_eq!(l.rows(), g.rows());
        let whole = CosetSpace::new(&g, g.whole());
        let l = induced_loop(&crate::transversal::Transversal::canonical(&whole));
        assert_eq!(l.size(), 1);
    }

    #[test]
    fn normal_index_two_gives_c2() {
        let g = named_group("symmetric", 3).unwrap();
        let a3 = CosetSpace::new(&g, g.subgroup_generated(&g.parse_elements("(1 2 3)").unwrap()).unwrap());
        for s in enumerate_nrts(&a3, 10).unwrap() {
            assert_eq!(induced_loop(&s).rows(), vec![vec![0, 1], vec![1, 0]]);
        }
    }

    #[test]
    fn right_translations() {
        let c2 = cyclic_loop(2);
        assert_eq!(c2.right_translation(0), vec![0, 1]);
        assert_eq!(c2.right_translation(1), vec![1, 0]);
        let c3 = cyclic_loop(3);
        assert_eq!(c3.right_translation(1), vec![1, 2, 0]);
        assert_eq!(c3.right_translation(2), vec![2, 0, 1]);
    }

    #[test]
    fn groups_have_rip_and_rcc() {
        for g in [named_group("symmetric", 3).unwrap(), named_group("dihedral", 5).unwrap()] {
            let l = RightLoop::from_table(g.rows()).unwrap();
            let r = l.has_rip().unwrap();
            assert!(g.elements().all(|x| r[x] == g.inv(x)));
            assert!(l.is_rcc());
            assert!(l.solves_unit_equation());
        }
        let one = RightLoop::from_table(vec![vec![0]]).unwrap();
        assert!(one.has_rip().is_some() && one.is_rcc() && one.solves_unit_equation());
        assert!(cyclic_loop(6).is_rcc());
    }

    #[test]
    fn order3_right_loops_include_a_row_without_identity() {
        let loops = order3_right_loops();
        assert_eq!(loops.len(), 4);
        assert!(loops.iter().any(|l| !l.solves_unit_equation()));
        assert!(loops.iter().any(RightLoop::solves_unit_equation));
    }

    #[test]
    fn non_normal_sym3_has_loops_without_rip_or_rcc() {
        let g: Group = named_group("symmetric", 3).unwrap();
        let h = CosetSpace::new(&g, g.subgroup_generated(&g.parse_elements("(1 2)").unwrap()).unwrap());
        let loops: Vec<_> = enumerate_nrts(&h, 10).unwrap().map(|s| induced_loop(&s)).collect();
        assert_eq!(loops.len(), 4);
        assert!(loops.iter().any(|l| l.has_rip().is_none()));
        assert!(loops.iter().any(|l| !l.is_rcc()));
        for l in &loops {
            l.check_axioms().unwrap();
        }
    }

    #[test]
    fn transport_preserves_axioms() {
        let l = order3_right_loops().pop().unwrap();
        let t = l.transport(&[0, 2, 1]);
        t.check_axioms().unwrap();
        assert_eq!(t.transport(&[0, 2, 1]), l);
    }
}
