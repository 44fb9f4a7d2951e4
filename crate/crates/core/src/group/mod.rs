//! Finite groups as index-based multiplication tables.
//!
//! Every [`Group`] keeps its identity at index 0 and is validated when it is
//! built, so the rest of the crate can rely on the group axioms.

mod cosets;
mod named;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub use cosets::{CosetDecomposition, CosetSpace, Side};
pub use named::{builtin_catalog, named_group, GroupId};
pub use subgroup::{Subgroup, DEFAULT_SUBGROUP_SWEEP_CAP};

/// Default cap on the size of a group generated by permutations.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// The permutations realizing each element, when the group came from them.
#[derive(Clone, Debug)]
struct PermRep {
    degree: usize,
    elements: Vec<Perm>,
    lookup: HashMap<Perm, usize>,
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    name: Option<String>,
    perms: Option<PermRep>,
}

impl Group {
    /// Validate a multiplication table and build a group from it.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::MalformedTable { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, order: n });
                }
            }
            table.extend_from_slice(entries);
        }
        Self::validated(table, n, true, None)
    }

    fn validated(table: Vec<usize>, n: usize, check_assoc: bool, perms: Option<PermRep>) -> Result<Self> {
        for j in 0..n {
            if table[j] != j {
                return Err(Error::NoIdentityAtZero { row: 0, col: j });
            }
            if table[j * n] != j {
                return Err(Error::NoIdentityAtZero { row: j, col: 0 });
            }
        }
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = table[i * n + j];
                if seen[v] == i {
                    return Err(Error::NotLatinSquare { line: "row", index: i, value: v });
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let v = table[i * n + j];
                if seen[v] == j {
                    return Err(Error::NotLatinSquare { line: "column", index: j, value: v });
                }
                seen[v] = j;
            }
        }
        if check_assoc {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a * n + b];
                    for c in 0..n {
                        if table[ab * n + c] != table[a * n + table[b * n + c]] {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        }
        let mut inv = vec![0; n];
        for (i, slot) in inv.iter_mut().enumerate() {
            let row = &table[i * n..(i + 1) * n];
            let j = row.iter().position(|&v| v == 0).expect("latin row contains 0");
            if table[j * n + i] != 0 {
                return Err(Error::MissingInverse { element: i });
            }
            *slot = j;
        }
        Ok(Group { order: n, table, inv, name: None, perms })
    }

    /// Close `gens` under composition. Elements are numbered in breadth-first
    /// discovery order from the identity, right-multiplying by the generators
    /// in the order given.
    pub fn from_generators(degree: usize, gens: &[Perm], closure_cap: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::NotAPermutation { degree, images: g.images().to_vec() });
            }
        }
        let elements = close_perms(degree, gens, closure_cap)?;
        Self::from_perm_list(degree, elements)
    }

    /// Build a group from a closed list of permutations whose first entry is
    /// the identity. Composition of permutations is associative, so only the
    /// identity, latin-square and inverse axioms are re-checked.
    pub(crate) fn from_perm_list(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        let n = elements.len();
        let lookup: HashMap<Perm, usize> = elements.iter().cloned().zip(0..).collect();
        if lookup.len() != n {
            return Err(Error::NotASubgroup { reason: "duplicate permutations".into() });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let ab = a.compose(b);
                match lookup.get(&ab) {
                    Some(&k) => table.push(k),
                    None => {
                        return Err(Error::NotASubgroup { reason: format!("{ab} is missing from the list") })
                    }
                }
            }
        }
        Self::validated(table, n, false, Some(PermRep { degree, elements, lookup }))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `name` if set, otherwise a description by order.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("group of order {}", self.order))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g^{-1} x g`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { index, order: self.order })
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p.degree)
    }

    pub fn perm(&self, a: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p.elements[a])
    }

    pub fn index_of_perm(&self, perm: &Perm) -> Result<usize> {
        let rep = self.perms.as_ref().ok_or(Error::NoPermutationRepresentation)?;
        let perm = if perm.degree() < rep.degree { perm.extended(rep.degree) } else { perm.clone() };
        rep.lookup.get(&perm).copied().ok_or_else(|| Error::NotAnElement(perm.to_string()))
    }

    /// Element indices for a generator string in cycle notation.
    pub fn parse_elements(&self, cycles: &str) -> Result<Vec<usize>> {
        let degree = self.degree().ok_or(Error::NoPermutationRepresentation)?;
        Perm::parse_list(cycles, degree)?.iter().map(|p| self.index_of_perm(p)).collect()
    }

    /// Cycle notation when the group is a permutation group, `#index` otherwise.
    pub fn element_label(&self, a: usize) -> String {
        match self.perm(a) {
            Some(p) => p.to_string(),
            None => format!("#{a}"),
        }
    }

    /// Parse the text table format: the order on the first line, then one
    /// whitespace-separated row per line.
    pub fn parse_table_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let bad = |reason: String| Error::TableParse { reason };
        let n: usize = lines
            .next()
            .ok_or_else(|| bad("missing order line".into()))?
            .parse()
            .map_err(|_| bad("first line must be the group order".into()))?;
        let mut rows = Vec::with_capacity(n);
        for (k, line) in lines.enumerate() {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| bad(format!("row {k}: bad entry `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(bad(format!("expected {n} rows, found {}", rows.len())));
        }
        Self::from_table(rows)
    }

    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.elements()
            .all(|g| h.elems().iter().all(|&x| h.contains(self.conjugate(x, g))))
    }

    /// `{ g : g^{-1} S g = S }` for an arbitrary nonempty set of indices.
    pub fn normalizer(&self, set: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        for &s in set {
            member[s] = true;
        }
        let size = member.iter().filter(|&&m| m).count();
        let elems: Vec<usize> = self
            .elements()
            .filter(|&g| {
                // conjugation is injective, so image inside S means image equals S
                member.iter().enumerate().filter(|(_, &m)| m).all(|(s, _)| member[self.conjugate(s, g)])
            })
            .collect();
        debug_assert!(size > 0);
        Subgroup::from_sorted_unchecked(self, elems)
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            self.check_index(g)?;
        }
        Ok(Subgroup::generate(self, gens))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self, self.elements().collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self, vec![0])
    }
}

fn close_perms(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashMap<Perm, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in gens {
            let next = elements[k].compose(g);
            if !seen.contains_key(&next) {
                if elements.len() == cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                seen.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}
