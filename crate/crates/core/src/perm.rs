//! Permutations of `0..degree` in one-line form, with 1-based cycle notation
//! for input and display.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored as its list of images.
///
/// Products compose right-to-left: `a.compose(&b)` maps `p` to `a(b(p))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &p in &images {
            if p >= degree || seen[p] {
                return Err(Error::NotAPermutation { degree, images });
            }
            seen[p] = true;
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&p| self.0[p]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (p, &q) in self.0.iter().enumerate() {
            inv[q] = p;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.0[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.0[p];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Extend to a larger degree by fixing the new points.
    pub fn extended(&self, degree: usize) -> Perm {
        let mut images = self.0.clone();
        images.extend(self.degree()..degree.max(self.degree()));
        Perm(images)
    }

    /// Parse a single permutation in cycle notation over the 1-based points
    /// `1..=degree`, e.g. `"(1 2)(3 4)"`. Points inside a cycle may be
    /// separated by whitespace or commas. The empty string and `"()"` denote
    /// the identity.
    pub fn parse_cycles(input: &str, degree: usize) -> Result<Perm> {
        let err = |reason: String| Error::PermParse { input: input.to_string(), reason };
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = input.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(err(format!("expected `(` at `{rest}`")));
            };
            let Some(close) = body.find(')') else {
                return Err(err("unclosed cycle".into()));
            };
            let mut cycle = Vec::new();
            for tok in body[..close].split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let point: usize = tok.parse().map_err(|_| err(format!("bad point `{tok}`")))?;
                if point == 0 || point > degree {
                    return Err(err(format!("point {point} is outside 1..={degree}")));
                }
                let p = point - 1;
                if moved[p] {
                    return Err(err(format!("point {point} appears twice")));
                }
                moved[p] = true;
                cycle.push(p);
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    /// Parse a list of generators. Generators are separated by `;` or by a
    /// top-level `,`; juxtaposed cycles belong to the same generator.
    pub fn parse_list(input: &str, degree: usize) -> Result<Vec<Perm>> {
        let mut gens = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        let bytes = input.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b';' | b',' if depth == 0 => {
                    gens.push(&input[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        gens.push(&input[start..]);
        gens.into_iter()
            .filter(|g| !g.trim().is_empty())
            .map(|g| Perm::parse_cycles(g, degree))
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
