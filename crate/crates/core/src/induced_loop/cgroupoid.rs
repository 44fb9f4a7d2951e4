use serde::Serialize;

use crate::transversal::Transversal;

/// How a transversal `S` and subgroup `H` multiply inside `G`:
/// `x·y = f(x, y)·(x ∘ y)` and `x·h = σ_x(h)·(x θ h)`.
///
/// Subgroup elements are stored by their position in the subgroup's element
/// list; transversal elements by loop index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CGroupoid {
    #[serde(skip)]
    size: usize,
    #[serde(skip)]
    h_order: usize,
    /// `sigma[x][h]`
    sigma: Vec<Vec<usize>>,
    /// `f[x][y]`
    f: Vec<Vec<usize>>,
    /// `theta[x][h]`
    theta: Vec<Vec<usize>>,
}

/// A defining identity of [`CGroupoid`] that failed, with the offending
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum CGroupoidViolation {
    Product { x: usize, y: usize },
    SubgroupAction { x: usize, h: usize },
    RightAction { x: usize, h: usize, k: usize },
    ActionIdentity { x: usize },
    SigmaOfIdentity { h: usize },
    Normalization { x: usize, y: usize },
}

pub fn c_groupoid(s: &Transversal<'_>) -> CGroupoid {
    let space = s.space();
    let g = space.group();
    let h = space.subgroup();
    let reps = s.reps();
    let pos = |e: usize| h.position(e).expect("element lies in the subgroup");
    let f = reps
        .iter()
        .map(|&x| {
            reps.iter()
                .map(|&y| {
                    let xy = g.mul(x, y);
                    pos(g.mul(xy, g.inv(s.rep_of(xy))))
                })
                .collect()
        })
        .collect();
    let mut sigma = Vec::with_capacity(reps.len());
    let mut theta = Vec::with_capacity(reps.len());
    for &x in reps {
        let (sx, tx): (Vec<usize>, Vec<usize>) = h
            .elems()
            .iter()
            .map(|&e| {
                let xh = g.mul(x, e);
                (pos(g.mul(xh, g.inv(s.rep_of(xh)))), s.loop_index_of(xh))
            })
            .unzip();
        sigma.push(sx);
        theta.push(tx);
    }
    CGroupoid { size: reps.len(), h_order: h.order(), sigma, f, theta }
}

impl CGroupoid {
    pub fn sigma(&self, x: usize, h: usize) -> usize {
        self.sigma[x][h]
    }

    pub fn f(&self, x: usize, y: usize) -> usize {
        self.f[x][y]
    }

    pub fn theta(&self, x: usize, h: usize) -> usize {
        self.theta[x][h]
    }

    /// Every `σ_x : H → H` is onto; checked as injectivity.
    pub fn sigma_surjective_all(&self) -> bool {
        self.sigma.iter().all(|row| super::is_permutation(row))
    }

    pub fn sigma_is_identity(&self, x: usize) -> bool {
        self.sigma[x].iter().enumerate().all(|(h, &v)| h == v)
    }

    /// Check every defining identity against the ambient group.
    pub fn verify(&self, s: &Transversal<'_>) -> Result<(), CGroupoidViolation> {
        let space = s.space();
        let g = space.group();
        let h = space.subgroup().elems();
        let reps = s.reps();
        let op = |x: usize, y: usize| s.loop_index_of(g.mul(reps[x], reps[y]));
        for x in 0..self.size {
            for y in 0..self.size {
                if g.mul(reps[x], reps[y]) != g.mul(h[self.f[x][y]], reps[op(x, y)]) {
                    return Err(CGroupoidViolation::Product { x, y });
                }
                if (x == 0 || y == 0) && self.f[x][y] != 0 {
                    return Err(CGroupoidViolation::Normalization { x, y });
                }
            }
            for k in 0..self.h_order {
                let lhs = g.mul(reps[x], h[k]);
                if lhs != g.mul(h[self.sigma[x][k]], reps[self.theta[x][k]]) {
                    return Err(CGroupoidViolation::SubgroupAction { x, h: k });
                }
            }
            if self.theta[x][0] != x {
                return Err(CGroupoidViolation::ActionIdentity { x });
            }
            for a in 0..self.h_order {
                for b in 0..self.h_order {
                    let ab = space.subgroup().position(g.mul(h[a], h[b])).expect("closed");
                    if self.theta[x][ab] != self.theta[self.theta[x][a]][b] {
                        return Err(CGroupoidViolation::RightAction { x, h: a, k: b });
                    }
                }
            }
        }
        if let Some(k) = (0..self.h_order).find(|&k| self.sigma[0][k] != k) {
            return Err(CGroupoidViolation::SigmaOfIdentity { h: k });
        }
        Ok(())
    }
}
