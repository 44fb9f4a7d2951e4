//! Cross-checks against brute-force oracles that only use the raw
//! multiplication table.

use nrt_core::group::{GroupId, Subgroup};
use nrt_core::induced_loop::induced_loop;
use nrt_core::loop_iso::are_isomorphic;
use nrt_core::transversal::{enumerate_nrts, nrt_count, Transversal};
use nrt_core::{CosetSpace, Group, RightLoop};

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn closed_subsets(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if set.iter().all(|&a| set.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1)) {
            out.push(set);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

#[test]
fn subgroup_sweep_matches_power_set() {
    for id in nrt_core::builtin_catalog().into_iter().filter(|id| id.order() <= 12) {
        let g = id.build().unwrap();
        let fast: Vec<Vec<usize>> = Subgroup::all(&g, 48).unwrap().iter().map(|h| h.elems().to_vec()).collect();
        assert_eq!(fast, closed_subsets(&g), "{id}");
    }
}

#[test]
fn cyclic_subgroups_follow_divisors() {
    for n in 1..=24usize {
        let g = GroupId::Cyclic(n).build().unwrap();
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(Subgroup::all(&g, 48).unwrap().len(), divisors, "cyc:{n}");
    }
}

#[test]
fn closure_by_repeated_multiplication() {
    let g = GroupId::Symmetric(3).build().unwrap();
    let c = g.parse_elements("(1 2 3)").unwrap()[0];
    let mut powers = vec![0];
    let mut x = c;
    while x != 0 {
        powers.push(x);
        x = g.mul(x, c);
    }
    powers.sort_unstable();
    assert_eq!(g.subgroup_generated(&[c]).unwrap().elems(), powers);
}

/// Every NRT by subset scan, compared as sets with the odometer stream, and
/// both-sidedness by the definition `a^{-1} b ∈ H`.
#[test]
fn enumeration_matches_subset_scan() {
    for id in [GroupId::Symmetric(3), GroupId::Dihedral(4), GroupId::Quaternion8, GroupId::Alternating(4)] {
        let g = id.build().unwrap();
        for h in Subgroup::all(&g, 48).unwrap() {
            let space = CosetSpace::new(&g, h.clone());
            if u64::try_from(nrt_count(&space)).unwrap() > 5000 {
                continue;
            }
            let mut fast: Vec<(Vec<usize>, bool)> = enumerate_nrts(&space, 5000)
                .unwrap()
                .map(|t| {
                    let mut s = t.reps().to_vec();
                    s.sort_unstable();
                    (s, t.is_left_transversal())
                })
                .collect();
            fast.sort();
            let mut slow = Vec::new();
            let n = g.order();
            let index = n / h.order();
            let in_h = |x: usize| h.contains(x);
            // choose one element per right coset by scanning candidate sets coset by coset
            let mut partial = vec![vec![0usize]];
            for x in 1..n {
                let mut next = Vec::new();
                for set in &partial {
                    next.push(set.clone());
                    if set.iter().all(|&a| !in_h(g.mul(a, g.inv(x)))) {
                        let mut bigger = set.clone();
                        bigger.push(x);
                        next.push(bigger);
                    }
                }
                partial = next;
            }
            for set in partial.into_iter().filter(|s| s.len() == index) {
                let left = set
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| set[i + 1..].iter().all(|&b| !in_h(g.mul(g.inv(a), b))));
                slow.push((set, left));
            }
            slow.sort();
            assert_eq!(fast, slow, "{id} {:?}", h.elems());
        }
    }
}

/// Left-transversal test by counting representatives per left coset, built
/// directly from the definition rather than the stored decomposition.
#[test]
fn left_transversal_two_ways() {
    let g = GroupId::Symmetric(4).build().unwrap();
    for h in Subgroup::all(&g, 48).unwrap() {
        let space = CosetSpace::new(&g, h.clone());
        let Ok(stream) = enumerate_nrts(&space, 3000) else { continue };
        for t in stream {
            let by_count = (0..g.order()).all(|x| {
                let coset: Vec<usize> = h.elems().iter().map(|&e| g.mul(x, e)).collect();
                t.reps().iter().filter(|r| coset.contains(r)).count() == 1
            });
            assert_eq!(by_count, t.is_left_transversal());
        }
    }
}

#[test]
fn normalizer_by_definition() {
    let g = GroupId::Symmetric(4).build().unwrap();
    let sets: [&[usize]; 4] = [&[0], &[0, 1, 5], &[0, 3, 7, 12], &[2, 9, 17, 23]];
    for set in sets {
        let expected: Vec<usize> = g
            .elements()
            .filter(|&x| {
                let mut conj: Vec<usize> = set.iter().map(|&s| g.mul(g.mul(g.inv(x), s), x)).collect();
                conj.sort_unstable();
                conj == set
            })
            .collect();
        let n = g.normalizer(set);
        assert_eq!(n.elems(), expected);
        assert!(Subgroup::from_elems(&g, n.elems()).is_ok());
    }
}

#[test]
fn cosets_agree_with_normality() {
    for id in nrt_core::builtin_catalog().into_iter().filter(|id| id.order() <= 16) {
        let g = id.build().unwrap();
        for h in Subgroup::all(&g, 48).unwrap() {
            let space = CosetSpace::new(&g, h.clone());
            assert_eq!(space.right().same_partition(space.left()), g.is_normal(&h));
            assert!(space.right().cosets().iter().all(|c| c.len() == h.order()));
            assert_eq!(space.index() * h.order(), g.order());
        }
    }
}

fn brute_isomorphic(a: &RightLoop, b: &RightLoop) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let rest: Vec<usize> = (1..a.size()).collect();
    permutations(&rest).into_iter().any(|tail| {
        let mut p = vec![0];
        p.extend(tail);
        (0..a.size()).all(|x| (0..a.size()).all(|y| p[a.op(x, y)] == b.op(p[x], p[y])))
    })
}

#[test]
fn isomorphism_matches_exhaustive_search() {
    let g = GroupId::Symmetric(4).build().unwrap();
    for gens in ["(1 2), (1 2 3)", "(1 2 3 4), (1 3)", "(1 2)(3 4), (1 3)(2 4), (1 2 3)"] {
        let h = g.subgroup_generated(&g.parse_elements(gens).unwrap()).unwrap();
        let space = CosetSpace::new(&g, h);
        let loops: Vec<RightLoop> = enumerate_nrts(&space, 1000).unwrap().step_by(7).map(|t| induced_loop(&t)).collect();
        for a in &loops {
            for b in &loops {
                assert_eq!(are_isomorphic(a, b).is_some(), brute_isomorphic(a, b));
            }
        }
    }
}

#[test]
fn sym3_non_normal_iso_pairs_by_exhaustion() {
    let g = GroupId::Symmetric(3).build().unwrap();
    let h = g.subgroup_generated(&g.parse_elements("(1 2)").unwrap()).unwrap();
    let space = CosetSpace::new(&g, h);
    let nrts: Vec<Transversal> = enumerate_nrts(&space, 10).unwrap().collect();
    for s in &nrts {
        for t in &nrts {
            let (ls, lt) = (induced_loop(s), induced_loop(t));
            assert_eq!(are_isomorphic(&ls, &lt).is_some(), brute_isomorphic(&ls, &lt));
            if s.is_left_transversal() != t.is_left_transversal() {
                assert!(!brute_isomorphic(&ls, &lt));
            }
        }
    }
}

#[test]
fn sym3_non_normal_class_count() {
    let g = GroupId::Symmetric(3).build().unwrap();
    let h = g.subgroup_generated(&g.parse_elements("(1 2)").unwrap()).unwrap();
    let space = CosetSpace::new(&g, h);
    let loops: Vec<RightLoop> = enumerate_nrts(&space, 10).unwrap().map(|t| induced_loop(&t)).collect();
    // classes by exhaustive pairwise search
    let mut reps: Vec<&RightLoop> = Vec::new();
    for l in &loops {
        if !reps.iter().any(|r| brute_isomorphic(r, l)) {
            reps.push(l);
        }
    }
    let c = nrt_core::classify(loops.clone());
    assert_eq!(c.class_count, reps.len());
    assert!(c.class_count >= 2);
}
