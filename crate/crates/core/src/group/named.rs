use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Perm;

use super::{close_perms, Group};

/// Identifier of a built-in group, written `sym:N`, `alt:N`, `cyc:N`,
/// `dih:N` or `q8`.
///
/// Every family is realized as a permutation group whose elements are sorted
/// lexicographically by their one-line image tuples, so the identity is
/// always index 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupId {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
}

const MAX_SYMMETRIC: usize = 6;
const MAX_CYCLIC: usize = 720;
const MAX_DIHEDRAL: usize = 360;

impl GroupId {
    fn check(family: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
        if (min..=max).contains(&n) {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange { family, parameter: n, min, max })
        }
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            GroupId::Cyclic(n) => Self::check("cyclic", n, 1, MAX_CYCLIC)?,
            GroupId::Dihedral(n) => Self::check("dihedral", n, 1, MAX_DIHEDRAL)?,
            GroupId::Symmetric(n) => Self::check("symmetric", n, 1, MAX_SYMMETRIC)?,
            GroupId::Alternating(n) => Self::check("alternating", n, 1, MAX_SYMMETRIC)?,
            GroupId::Quaternion8 => {}
        }
        Ok(self)
    }

    /// Group order, computed without building the table.
    pub fn order(self) -> usize {
        match self {
            GroupId::Cyclic(n) => n,
            GroupId::Dihedral(n) => 2 * n,
            GroupId::Symmetric(n) => (1..=n).product(),
            GroupId::Alternating(n) => ((1..=n).product::<usize>() / 2).max(1),
            GroupId::Quaternion8 => 8,
        }
    }

    pub fn build(self) -> Result<Group> {
        self.validate()?;
        let (degree, elements) = match self {
            GroupId::Cyclic(n) => {
                let rot = Perm::from_images((0..n).map(|p| (p + 1) % n).collect())?;
                (n, close_perms(n, &[rot], usize::MAX)?)
            }
            GroupId::Dihedral(1) => (2, close_perms(2, &[Perm::parse_cycles("(1 2)", 2)?], usize::MAX)?),
            GroupId::Dihedral(2) => {
                (4, close_perms(4, &Perm::parse_list("(1 2); (3 4)", 4)?, usize::MAX)?)
            }
            GroupId::Dihedral(n) => {
                let rot = Perm::from_images((0..n).map(|p| (p + 1) % n).collect())?;
                let refl = Perm::from_images((0..n).map(|p| (n - p) % n).collect())?;
                (n, close_perms(n, &[rot, refl], usize::MAX)?)
            }
            GroupId::Symmetric(n) => (n, all_perms(n)),
            GroupId::Alternating(n) => (n, all_perms(n).into_iter().filter(Perm::is_even).collect()),
            GroupId::Quaternion8 => (8, close_perms(8, &quaternion_generators(), usize::MAX)?),
        };
        let mut elements = elements;
        elements.sort();
        Ok(Group::from_perm_list(degree, elements)?.with_name(self.to_string()))
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Cyclic(n) => write!(f, "cyc:{n}"),
            GroupId::Dihedral(n) => write!(f, "dih:{n}"),
            GroupId::Symmetric(n) => write!(f, "sym:{n}"),
            GroupId::Alternating(n) => write!(f, "alt:{n}"),
            GroupId::Quaternion8 => f.write_str("q8"),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q8" {
            return Ok(GroupId::Quaternion8);
        }
        let (family, param) = s.split_once(':').ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let n: usize = param.parse().map_err(|_| Error::UnknownFamily(s.to_string()))?;
        let id = match family {
            "cyc" => GroupId::Cyclic(n),
            "dih" => GroupId::Dihedral(n),
            "sym" => GroupId::Symmetric(n),
            "alt" => GroupId::Alternating(n),
            _ => return Err(Error::UnknownFamily(family.to_string())),
        };
        id.validate()
    }
}

/// Build a named group from its family name and parameter. The parameter of
/// `quaternion8` is ignored.
pub fn named_group(family: &str, parameter: usize) -> Result<Group> {
    let id = match family {
        "cyclic" | "cyc" => GroupId::Cyclic(parameter),
        "dihedral" | "dih" => GroupId::Dihedral(parameter),
        "symmetric" | "sym" => GroupId::Symmetric(parameter),
        "alternating" | "alt" => GroupId::Alternating(parameter),
        "quaternion8" | "q8" => GroupId::Quaternion8,
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    id.build()
}

/// The built-in catalog, sorted by group order (ties keep listing order).
pub fn builtin_catalog() -> Vec<GroupId> {
    let mut ids: Vec<GroupId> = Vec::new();
    ids.extend((1..=24).map(GroupId::Cyclic));
    ids.extend((1..=12).map(GroupId::Dihedral));
    ids.push(GroupId::Quaternion8);
    ids.extend((3..=6).map(GroupId::Symmetric));
    ids.extend((4..=6).map(GroupId::Alternating));
    ids.sort_by_key(|id| id.order());
    ids
}

fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm::from_images(current.clone()).expect("permutation"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Left-regular representation of Q8 on the points `±1, ±i, ±j, ±k`.
fn quaternion_generators() -> Vec<Perm> {
    // point 2*u + s encodes (-1)^s * unit[u], units ordered 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let left_mul = |g: usize| {
        let images = (0..8)
            .map(|x| {
                let (u, s) = UNIT[g / 2][x / 2];
                2 * u + (s ^ (g % 2) ^ (x % 2))
            })
            .collect();
        Perm::from_images(images).expect("regular representation")
    };
    vec![left_mul(2), left_mul(4)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(named_group("symmetric", 3).unwrap().order(), 6);
        assert_eq!(named_group("cyclic", 1).unwrap().order(), 1);
        assert_eq!(named_group("quaternion8", 0).unwrap().order(), 8);
        for id in builtin_catalog() {
            if id.order() <= 120 {
                assert_eq!(id.build().unwrap().order(), id.order(), "{id}");
            }
        }
    }

    #[test]
    fn dihedral4_has_two_elements_of_order_four() {
        let g = named_group("dihedral", 4).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.elements().filter(|&a| g.element_order(a) == 4).count(), 2);
    }

    #[test]
    fn quaternion_structure() {
        let g = GroupId::Quaternion8.build().unwrap();
        let orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn small_dihedral_cases() {
        let d1 = GroupId::Dihedral(1).build().unwrap();
        assert_eq!(d1.order(), 2);
        let d2 = GroupId::Dihedral(2).build().unwrap();
        assert!(d2.elements().all(|a| d2.element_order(a) <= 2));
        assert_eq!(d2.order(), 4);
    }

    #[test]
    fn lexicographic_order() {
        let g = GroupId::Symmetric(3).build().unwrap();
        let labels: Vec<String> = g.elements().map(|a| g.element_label(a)).collect();
        assert_eq!(labels, ["()", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"]);
        let c = GroupId::Cyclic(5).build().unwrap();
        // rotation by k sits at index k, so the table is addition mod n
        assert!((0..5).all(|a| (0..5).all(|b| c.mul(a, b) == (a + b) % 5)));
    }

    #[test]
    fn identifiers() {
        assert_eq!("sym:4".parse::<GroupId>().unwrap(), GroupId::Symmetric(4));
        assert_eq!("q8".parse::<GroupId>().unwrap().to_string(), "q8");
        assert!(matches!("foo:3".parse::<GroupId>(), Err(Error::UnknownFamily(_))));
        assert!(matches!("sym:7".parse::<GroupId>(), Err(Error::ParameterOutOfRange { .. })));
        assert!(matches!(named_group("cyclic", 0), Err(Error::ParameterOutOfRange { .. })));
        assert!(matches!(named_group("free", 2), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn catalog_is_sorted_and_stable() {
        let a = builtin_catalog();
        assert_eq!(a, builtin_catalog());
        assert!(a.windows(2).all(|w| w[0].order() <= w[1].order()));
        assert!(a.contains(&GroupId::Symmetric(3)));
        assert!(a.contains(&GroupId::Quaternion8));
    }
}
