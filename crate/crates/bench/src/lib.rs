//! Fixtures shared by the benchmarks.

use nrt_core::{CosetSpace, Group, GroupId};

/// `sym:4` and a subgroup generated by the given cycle-notation string.
pub fn sym4_with(gens: &str) -> (Group, Vec<usize>) {
    let g = GroupId::Symmetric(4).build().expect("sym:4");
    let h = g.subgroup_generated(&g.parse_elements(gens).expect("generators")).expect("subgroup");
    let elems = h.elems().to_vec();
    (g, elems)
}

pub fn space<'g>(g: &'g Group, elems: &[usize]) -> CosetSpace<'g> {
    CosetSpace::new(g, nrt_core::Subgroup::from_elems(g, elems).expect("subgroup"))
}
