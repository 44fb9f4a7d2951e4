//! Normalized right transversals (NRTs): one representative per right coset,
//! with the identity representing the subgroup itself.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::CosetSpace;

/// Default cap on the number of transversals an enumeration may produce.
pub const DEFAULT_NRT_CAP: u64 = 1_000_000;

/// A normalized right transversal, stored as one representative per right
/// coset in coset order.
#[derive(Clone, Debug)]
pub struct Transversal<'a> {
    space: &'a CosetSpace<'a>,
    reps: Vec<usize>,
}

impl PartialEq for Transversal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.reps == other.reps
    }
}

impl Eq for Transversal<'_> {}

impl<'a> Transversal<'a> {
    /// Check that `reps[k]` lies in right coset `k` and that the subgroup's
    /// coset is represented by the identity.
    pub fn new(space: &'a CosetSpace<'a>, reps: Vec<usize>) -> Result<Self> {
        let right = space.right();
        if reps.len() != right.len() {
            return Err(Error::InvalidTransversal {
                reason: format!("{} representatives for {} cosets", reps.len(), right.len()),
            });
        }
        for (k, &r) in reps.iter().enumerate() {
            space.group().check_index(r)?;
            if right.coset_of(r) != k {
                return Err(Error::InvalidTransversal { reason: format!("element {r} is not in right coset {k}") });
            }
        }
        if reps[right.subgroup_coset()] != 0 {
            return Err(Error::InvalidTransversal { reason: "subgroup coset is not represented by 0".into() });
        }
        Ok(Transversal { space, reps })
    }

    /// Build from an unordered set of elements, one per right coset.
    pub fn from_set(space: &'a CosetSpace<'a>, set: &[usize]) -> Result<Self> {
        let mut reps = vec![usize::MAX; space.index()];
        for &s in set {
            space.group().check_index(s)?;
            let k = space.right().coset_of(s);
            if reps[k] != usize::MAX {
                return Err(Error::InvalidTransversal { reason: format!("two elements in right coset {k}") });
            }
            reps[k] = s;
        }
        if reps.contains(&usize::MAX) {
            return Err(Error::InvalidTransversal { reason: "some right coset is not represented".into() });
        }
        Self::new(space, reps)
    }

    /// Smallest element of every right coset.
    pub fn canonical(space: &'a CosetSpace<'a>) -> Self {
        let reps = space.right().cosets().iter().map(|c| c[0]).collect();
        Transversal { space, reps }
    }

    pub fn space(&self) -> &'a CosetSpace<'a> {
        self.space
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The representative of the right coset containing `g`.
    #[inline]
    pub fn rep_of(&self, g: usize) -> usize {
        self.reps[self.space.right().coset_of(g)]
    }

    /// Loop index (coset number) of the coset containing `g`.
    #[inline]
    pub fn loop_index_of(&self, g: usize) -> usize {
        self.space.right().coset_of(g)
    }

    /// Two representatives sharing a left coset, if any.
    pub fn left_coset_collision(&self) -> Option<(usize, usize)> {
        let left = self.space.left();
        let mut owner = vec![usize::MAX; left.len()];
        for &r in &self.reps {
            let k = left.coset_of(r);
            if owner[k] != usize::MAX {
                return Some((owner[k], r));
            }
            owner[k] = r;
        }
        None
    }

    /// True when the representatives also form a left transversal.
    pub fn is_left_transversal(&self) -> bool {
        self.left_coset_collision().is_none()
    }

    /// True when conjugation by every `h` in the subgroup maps the set of
    /// representatives onto itself.
    pub fn is_ar_transversal(&self) -> bool {
        let g = self.space.group();
        let mut member = vec![false; g.order()];
        for &r in &self.reps {
            member[r] = true;
        }
        self.space
            .subgroup()
            .elems()
            .iter()
            .all(|&h| self.reps.iter().all(|&s| member[g.conjugate(s, h)]))
    }

    pub fn labels(&self) -> Vec<String> {
        self.reps.iter().map(|&r| self.space.group().element_label(r)).collect()
    }

    pub fn record(&self) -> TransversalRecord {
        TransversalRecord { reps: self.reps.clone(), labels: self.labels() }
    }
}

/// Serialized transversal: element indices in coset order plus readable labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalRecord {
    pub reps: Vec<usize>,
    pub labels: Vec<String>,
}

/// `|H|^([G:H] - 1)`
pub fn nrt_count(space: &CosetSpace<'_>) -> BigUint {
    BigUint::from(space.subgroup().order()).pow(space.index() as u32 - 1)
}

fn checked_count(space: &CosetSpace<'_>, cap: u64) -> Result<u64> {
    let count = nrt_count(space);
    match u64::try_from(&count) {
        Ok(c) if c <= cap => Ok(c),
        _ => Err(Error::EnumerationTooLarge { count: count.to_string(), cap }),
    }
}

/// Every NRT exactly once, in odometer order: the free cosets `1..[G:H]` are
/// the digits, coset 1 most significant, each digit running over its coset's
/// elements in increasing index order.
pub fn enumerate_nrts<'a>(space: &'a CosetSpace<'a>, cap: u64) -> Result<NrtEnumerator<'a>> {
    let total = checked_count(space, cap)?;
    Ok(NrtEnumerator::new(space, total, 0, total))
}

/// The odometer sub-range `start..end` of [`enumerate_nrts`].
pub fn enumerate_nrt_range<'a>(space: &'a CosetSpace<'a>, cap: u64, start: u64, end: u64) -> Result<NrtEnumerator<'a>> {
    let total = checked_count(space, cap)?;
    let end = end.min(total);
    if start > end {
        return Err(Error::OdometerOutOfRange { index: start, count: total });
    }
    Ok(NrtEnumerator::new(space, total, start, end))
}

/// The transversal at a given odometer index.
pub fn nrt_at<'a>(space: &'a CosetSpace<'a>, index: u64) -> Result<Transversal<'a>> {
    let total = checked_count(space, u64::MAX)?;
    if index >= total {
        return Err(Error::OdometerOutOfRange { index, count: total });
    }
    let mut it = NrtEnumerator::new(space, total, index, index + 1);
    Ok(it.next().expect("index in range"))
}

#[derive(Clone, Debug)]
pub struct NrtEnumerator<'a> {
    space: &'a CosetSpace<'a>,
    digits: Vec<usize>,
    position: u64,
    end: u64,
    total: u64,
}

impl<'a> NrtEnumerator<'a> {
    fn new(space: &'a CosetSpace<'a>, total: u64, start: u64, end: u64) -> Self {
        let radix = space.subgroup().order() as u64;
        let free = space.index() - 1;
        let mut digits = vec![0; free];
        let mut rest = start;
        for d in digits.iter_mut().rev() {
            *d = (rest % radix) as usize;
            rest /= radix;
        }
        NrtEnumerator { space, digits, position: start, end, total }
    }

    /// Total number of NRTs, independent of the range being walked.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Odometer index of the next transversal to be yielded.
    pub fn position(&self) -> u64 {
        self.position
    }
}

impl<'a> Iterator for NrtEnumerator<'a> {
    type Item = Transversal<'a>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.position >= self.end {
            return None;
        }
        let cosets = self.space.right().cosets();
        let mut reps = Vec::with_capacity(cosets.len());
        reps.push(0);
        reps.extend(self.digits.iter().enumerate().map(|(k, &d)| cosets[k + 1][d]));
        self.position += 1;
        let radix = self.space.subgroup().order();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < radix {
                break;
            }
            *d = 0;
        }
        Some(Transversal { space: self.space, reps })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.position) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for NrtEnumerator<'_> {}

/// An NRT that is not a left transversal, for a non-normal subgroup.
///
/// Takes the first `x` (by index) with `xH != Hx`, inverting it if `xH` lies
/// inside `Hx`, then the smallest `y` in `xH` outside `Hx`. The result
/// contains `1`, `x` and `y`; every other right coset gets its smallest
/// element. `x` and `y` share a left coset but not a right one.
pub fn non_left_transversal_witness<'a>(space: &'a CosetSpace<'a>) -> Result<Transversal<'a>> {
    let g = space.group();
    let right = space.right();
    let left = space.left();
    let left_coset = |x: usize| &left.cosets()[left.coset_of(x)];
    let right_coset = |x: usize| &right.cosets()[right.coset_of(x)];
    let mut x = g
        .elements()
        .find(|&x| left_coset(x) != right_coset(x))
        .ok_or(Error::SubgroupIsNormal)?;
    let outside = |x: usize| -> Vec<usize> {
        let rc = right.coset_of(x);
        left_coset(x).iter().copied().filter(|&y| right.coset_of(y) != rc).collect()
    };
    let mut candidates = outside(x);
    if candidates.is_empty() {
        x = g.inv(x);
        candidates = outside(x);
    }
    let y = *candidates.first().ok_or(Error::SubgroupIsNormal)?;
    let mut reps: Vec<usize> = right.cosets().iter().map(|c| c[0]).collect();
    reps[right.coset_of(x)] = x;
    reps[right.coset_of(y)] = y;
    Transversal::new(space, reps)
}
