//! Isomorphism of right loops: invariant fingerprints, a backtracking search
//! with forced-image propagation, and greedy classification of loop streams.

use std::collections::HashMap;

use serde::Serialize;

use crate::induced_loop::{is_permutation, RightLoop};

/// Isomorphism invariants of a right loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LoopFingerprint {
    pub size: usize,
    /// Cycle type of each right translation (descending), as a sorted list.
    pub rt_cycle_types: Vec<Vec<usize>>,
    pub left_bijective: usize,
    pub unit_solvable_rows: usize,
    pub rt_orders: Vec<u64>,
}

fn cycle_type(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lens = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = images[p];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn perm_order(cycle_type: &[usize]) -> u64 {
    cycle_type.iter().fold(1, |acc, &l| acc / gcd(acc, l as u64) * l as u64)
}

pub fn fingerprint(l: &RightLoop) -> LoopFingerprint {
    let mut rt_cycle_types: Vec<Vec<usize>> =
        (0..l.size()).map(|x| cycle_type(&l.right_translation(x))).collect();
    let mut rt_orders: Vec<u64> = rt_cycle_types.iter().map(|c| perm_order(c)).collect();
    rt_cycle_types.sort();
    rt_orders.sort_unstable();
    LoopFingerprint {
        size: l.size(),
        rt_cycle_types,
        left_bijective: (0..l.size()).filter(|&x| is_permutation(l.row(x))).count(),
        unit_solvable_rows: (0..l.size()).filter(|&x| l.row(x).contains(&0)).count(),
        rt_orders,
    }
}

/// Per-element invariant: any isomorphism maps `x` to an element with the same
/// value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ElementClass {
    rt_cycles: Vec<usize>,
    row_cycles: Option<Vec<usize>>,
    row_has_unit: bool,
    square_is_unit: bool,
}

fn element_classes(l: &RightLoop) -> Vec<ElementClass> {
    (0..l.size())
        .map(|x| {
            let row = l.row(x);
            ElementClass {
                rt_cycles: cycle_type(&l.right_translation(x)),
                row_cycles: is_permutation(row).then(|| cycle_type(row)),
                row_has_unit: row.contains(&0),
                square_is_unit: l.op(x, x) == 0,
            }
        })
        .collect()
}

const NONE: usize = usize::MAX;

struct Search<'l> {
    a: &'l RightLoop,
    b: &'l RightLoop,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
    map: Vec<usize>,
    inv: Vec<usize>,
    assigned: Vec<usize>,
}

impl Search<'_> {
    /// Assign `x ↦ y` and everything it forces. Leaves partial state behind on
    /// failure; the caller rolls back via [`Search::undo_to`].
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if self.map[x] != NONE {
                if self.map[x] != y {
                    return false;
                }
                continue;
            }
            if self.inv[y] != NONE || self.class_a[x] != self.class_b[y] {
                return false;
            }
            self.map[x] = y;
            self.inv[y] = x;
            self.assigned.push(x);
            for k in 0..self.assigned.len() {
                let z = self.assigned[k];
                queue.push((self.a.op(x, z), self.b.op(y, self.map[z])));
                queue.push((self.a.op(z, x), self.b.op(self.map[z], y)));
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.assigned.len() > len {
            let x = self.assigned.pop().unwrap();
            self.inv[self.map[x]] = NONE;
            self.map[x] = NONE;
        }
    }

    fn solve(&mut self) -> bool {
        let Some(x) = (0..self.map.len()).find(|&x| self.map[x] == NONE) else {
            return true;
        };
        let len = self.assigned.len();
        for y in 0..self.map.len() {
            if self.inv[y] != NONE || self.class_a[x] != self.class_b[y] {
                continue;
            }
            if self.assign(x, y) && self.solve() {
                return true;
            }
            self.undo_to(len);
        }
        false
    }
}

/// A bijection `p` with `p(x ∘ y) = p(x) ∘' p(y)`, if one exists. The identity
/// is the only idempotent of a right loop, so `p(0) = 0` is fixed up front.
pub fn are_isomorphic(a: &RightLoop, b: &RightLoop) -> Option<Vec<usize>> {
    if a.size() != b.size() || fingerprint(a) != fingerprint(b) {
        return None;
    }
    isomorphism_unchecked(a, b)
}

fn isomorphism_unchecked(a: &RightLoop, b: &RightLoop) -> Option<Vec<usize>> {
    let ca = element_classes(a);
    let cb = element_classes(b);
    let mut ids: HashMap<ElementClass, usize> = HashMap::new();
    let mut intern = |c: ElementClass| {
        let next = ids.len();
        *ids.entry(c).or_insert(next)
    };
    let class_a: Vec<usize> = ca.into_iter().map(&mut intern).collect();
    let class_b: Vec<usize> = cb.into_iter().map(&mut intern).collect();
    let n = a.size();
    let mut search =
        Search { a, b, class_a, class_b, map: vec![NONE; n], inv: vec![NONE; n], assigned: Vec::with_capacity(n) };
    if !search.assign(0, 0) || !search.solve() {
        return None;
    }
    Some(search.map)
}

/// Result of partitioning a stream of loops into isomorphism classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoClassification {
    #[serde(rename = "classes")]
    pub class_count: usize,
    pub sizes: Vec<usize>,
    #[serde(serialize_with = "serialize_tables")]
    pub representatives: Vec<RightLoop>,
    /// Stream position → class id.
    #[serde(skip)]
    pub assignment: Vec<usize>,
}

fn serialize_tables<S: serde::Serializer>(loops: &[RightLoop], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(loops.iter().map(RightLoop::rows))
}

/// Incremental greedy classifier: each loop is compared with the
/// representatives sharing its fingerprint, in order of first appearance.
#[derive(Debug, Default)]
pub struct Classifier {
    buckets: HashMap<LoopFingerprint, Vec<usize>>,
    representatives: Vec<RightLoop>,
    sizes: Vec<usize>,
    assignment: Vec<usize>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Classify one loop, returning its class id.
    pub fn push(&mut self, l: RightLoop) -> usize {
        let fp = fingerprint(&l);
        let bucket = self.buckets.entry(fp).or_default();
        let found = bucket
            .iter()
            .copied()
            .find(|&c| isomorphism_unchecked(&self.representatives[c], &l).is_some());
        let class = match found {
            Some(c) => c,
            None => {
                let c = self.representatives.len();
                bucket.push(c);
                self.representatives.push(l);
                self.sizes.push(0);
                c
            }
        };
        self.sizes[class] += 1;
        self.assignment.push(class);
        class
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn finish(self) -> IsoClassification {
        IsoClassification {
            class_count: self.representatives.len(),
            sizes: self.sizes,
            representatives: self.representatives,
            assignment: self.assignment,
        }
    }
}

pub fn classify<I: IntoIterator<Item = RightLoop>>(loops: I) -> IsoClassification {
    let mut c = Classifier::new();
    for l in loops {
        c.push(l);
    }
    c.finish()
}

/// Every loop is isomorphic to the first. Stops at the first mismatch; an
/// empty stream counts as true.
pub fn all_isomorphic<I: IntoIterator<Item = RightLoop>>(loops: I) -> bool {
    let mut it = loops.into_iter();
    let Some(first) = it.next() else {
        return true;
    };
    let fp = fingerprint(&first);
    it.all(|l| fingerprint(&l) == fp && isomorphism_unchecked(&first, &l).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, CosetSpace};
    use crate::induced_loop::induced_loop;
    use crate::transversal::enumerate_nrts;

    fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> RightLoop {
        RightLoop::from_table((0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()).unwrap()
    }

    fn order3_right_loops() -> Vec<RightLoop> {
        let mut out = Vec::new();
        for c1 in [[0, 2], [2, 0]] {
            for c2 in [[0, 1], [1, 0]] {
                out.push(
                    RightLoop::from_table(vec![vec![0, 1, 2], vec![1, c1[0], c2[0]], vec![2, c1[1], c2[1]]])
                        .unwrap(),
                );
            }
        }
        out
    }

    #[test]
    fn fingerprint_examples() {
        let one = table(1, |_, _| 0);
        let fp = fingerprint(&one);
        assert_eq!(fp.rt_cycle_types, vec![vec![1]]);
        assert_eq!(fp.rt_orders, vec![1]);
        let c3 = table(3, |a, b| (a + b) % 3);
        let fp = fingerprint(&c3);
        assert_eq!(fp.rt_cycle_types, vec![vec![1, 1, 1], vec![3], vec![3]]);
        assert_eq!(fp.rt_orders, vec![1, 3, 3]);
        let mut fps: Vec<_> = order3_right_loops().iter().map(fingerprint).collect();
        fps.sort_by_key(|f| format!("{f:?}"));
        fps.dedup();
        assert!(fps.len() >= 2);
    }

    #[test]
    fn self_and_size_mismatch() {
        let c4 = table(4, |a, b| (a + b) % 4);
        assert_eq!(are_isomorphic(&c4, &c4), Some(vec![0, 1, 2, 3]));
        assert_eq!(are_isomorphic(&c4, &table(3, |a, b| (a + b) % 3)), None);
        let v4 = table(4, |a, b| a ^ b);
        assert_eq!(are_isomorphic(&c4, &v4), None);
    }

    #[test]
    fn isomorphism_found_across_relabeling() {
        let g = named_group("dihedral", 5).unwrap();
        let l = RightLoop::from_table(g.rows()).unwrap();
        let p = [0, 3, 1, 2, 9, 8, 7, 6, 5, 4];
        let t = l.transport(&p);
        let q = are_isomorphic(&l, &t).unwrap();
        for a in 0..10 {
            for b in 0..10 {
                assert_eq!(q[l.op(a, b)], t.op(q[a], q[b]));
            }
        }
    }

    #[test]
    fn sym3_non_normal_classes() {
        let g = named_group("symmetric", 3).unwrap();
        let h = CosetSpace::new(&g, g.subgroup_generated(&g.parse_elements("(1 2)").unwrap()).unwrap());
        let nrts: Vec<_> = enumerate_nrts(&h, 10).unwrap().collect();
        let loops: Vec<_> = nrts.iter().map(induced_loop).collect();
        let c = classify(loops.clone());
        assert!(c.class_count >= 2);
        assert_eq!(c.sizes.iter().sum::<usize>(), 4);
        assert!(!all_isomorphic(loops.clone()));
        for (s, ls) in nrts.iter().zip(&loops) {
            for (t, lt) in nrts.iter().zip(&loops) {
                if s.is_left_transversal() != t.is_left_transversal() {
                    assert!(are_isomorphic(ls, lt).is_none());
                }
            }
        }
    }

    #[test]
    fn normal_streams_are_one_class() {
        let g = named_group("symmetric", 3).unwrap();
        let a3 = CosetSpace::new(&g, g.subgroup_generated(&g.parse_elements("(1 2 3)").unwrap()).unwrap());
        let loops: Vec<_> = enumerate_nrts(&a3, 10).unwrap().map(|s| induced_loop(&s)).collect();
        assert_eq!(classify(loops.clone()).class_count, 1);
        assert!(all_isomorphic(loops));
        assert!(all_isomorphic([table(1, |_, _| 0)]));
        assert_eq!(classify([table(1, |_, _| 0)]).class_count, 1);
    }
}
