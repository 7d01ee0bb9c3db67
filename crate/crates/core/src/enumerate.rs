//! Enumeration of I(S)-semigroups: the genus tree, the fibre of a fixed
//! Frobenius element and the fibre of fixed ray multiplicities.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{isemigroup_from_ideal, minimals_leq, ISemigroup, Ideal};
use crate::lattice::{check_dim, enumerate_cone_points, Grading, MonomialOrder, Point};
use crate::semigroup::{arrange_on_rays, GapSemigroup, Membership};

/// Largest `B` whose power set is scanned.
pub const MAX_SUBSET_BITS: usize = 24;

/// `𝒪_S(T) = max(S ∖ T)`, or `None` (below every point) when `T = S`.
pub fn big_o(s: &GapSemigroup, t: &GapSemigroup, order: &MonomialOrder) -> Option<Point> {
    order
        .max(t.gaps().iter().filter(|x| !s.is_gap(x)))
        .cloned()
}

/// Children of `t` in the genus tree: `T ∖ {x}` for `x ∈ imsg_S(T ∖ {0})`
/// with `x ≻ 𝒪_S(T)`.
pub fn children(t: &ISemigroup, order: &MonomialOrder) -> Vec<ISemigroup> {
    let o = big_o(t.base(), t.semigroup(), order);
    t.imsg()
        .iter()
        .filter(|x| o.as_ref().is_none_or(|o| order.cmp(x, o) == Ordering::Greater))
        .map(|x| {
            let child = ISemigroup::from_gaps(t.base().clone(), t.semigroup().without(x));
            debug_assert!(crate::ideal::verify_isemigroup(t.base(), child.semigroup().cone(), child.gaps()).unwrap());
            child
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub semigroup: ISemigroup,
    /// The element removed from the parent; `None` at the root.
    pub removed: Option<Point>,
    /// Index of the parent in the previous level.
    pub parent: Option<usize>,
    pub genus: usize,
}

/// BFS levels of the genus tree, level `k` holding the nodes of genus `g(S) + k`.
#[derive(Clone, Debug)]
pub struct Tree {
    pub order: MonomialOrder,
    pub levels: Vec<Vec<TreeNode>>,
}

impl Tree {
    pub fn total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &TreeNode> {
        self.levels.iter().flatten()
    }
}

/// All I(S)-semigroups of genus at most `max_genus`.
pub fn enumerate_tree(s: Arc<GapSemigroup>, max_genus: usize, order: &MonomialOrder) -> Result<Tree> {
    let genus = s.genus();
    if max_genus < genus {
        return Err(Error::GenusBelowRoot { max_genus, genus });
    }
    let root = TreeNode { semigroup: ISemigroup::root(s), removed: None, parent: None, genus };
    let mut levels = vec![vec![root]];
    for g in genus + 1..=max_genus {
        let prev = levels.last().expect("root level");
        let mut next: Vec<TreeNode> = prev
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, node)| {
                children(&node.semigroup, order).into_iter().map(move |c| {
                    let removed = c.gaps().iter().find(|x| !node.semigroup.semigroup().is_gap(x)).cloned();
                    TreeNode { semigroup: c, removed, parent: Some(i), genus: g }
                })
            })
            .collect();
        next.sort_by(|a, b| a.semigroup.gaps().cmp(b.semigroup.gaps()));
        log::debug!("genus {g}: {} I(S)-semigroups", next.len());
        levels.push(next);
    }
    Ok(Tree { order: order.clone(), levels })
}

/// Output of the fixed-Frobenius enumeration.
#[derive(Clone, Debug)]
pub struct FrobeniusFiber {
    pub f: Point,
    /// `L = {s ∈ S : s ≺ f}`.
    pub l: Vec<Point>,
    /// `A_S(f) = {x ∈ L : f - x ∉ S}`.
    pub a_s_f: Vec<Point>,
    /// `B = A_S(f) ∖ {0}`, the candidates for the X-parts.
    pub b: Vec<Point>,
    pub results: Vec<ISemigroup>,
    /// The X-part of each result, parallel to `results`.
    pub x_parts: Vec<Vec<Point>>,
}

/// All I(S)-semigroups `T` with `Fb(T) = f`.
pub fn with_frobenius(s: Arc<GapSemigroup>, f: &Point, order: &MonomialOrder) -> Result<FrobeniusFiber> {
    if !order.is_degree_compatible() {
        return Err(Error::NotDegreeCompatible);
    }
    check_dim(s.dim(), f.dim())?;
    if f.is_zero() {
        return Err(Error::ZeroPoint("f"));
    }
    if !s.cone().contains(f) {
        return Err(Error::NotInCone(f.clone()));
    }
    let empty = |l, a_s_f, b| FrobeniusFiber { f: f.clone(), l, a_s_f, b, results: vec![], x_parts: vec![] };
    if let Ok(fb) = s.frobenius(order) {
        if order.cmp(f, &fb) == Ordering::Less {
            return Ok(empty(vec![], vec![], vec![]));
        }
    }
    // Degree compatibility confines everything below f to grades ≤ deg f.
    let below: Vec<Point> = enumerate_cone_points(s.cone(), &Grading::standard(s.dim()), f.degree())?
        .into_iter()
        .filter(|x| order.cmp(x, f) == Ordering::Less)
        .collect();
    let mut l: Vec<Point> = below.iter().filter(|x| s.contains(x)).cloned().collect();
    l.sort();
    let a_s_f: Vec<Point> = l.iter().filter(|x| !s.contains_difference(f, x)).cloned().collect();
    let b: Vec<Point> = a_s_f.iter().filter(|x| !x.is_zero()).cloned().collect();
    if b.len() > MAX_SUBSET_BITS {
        return Err(Error::TooLarge(format!("|B| = {} exceeds {MAX_SUBSET_BITS}", b.len())));
    }
    // requires[j]: bits that must accompany b[j]; None if b[j] can never be chosen.
    let requires: Vec<Option<u32>> = b
        .iter()
        .map(|x| {
            let mut mask = 0u32;
            for s_elem in l.iter().filter(|e| !e.is_zero()) {
                let y = x.add(s_elem);
                if order.cmp(&y, f) == Ordering::Less {
                    mask |= 1 << b.binary_search(&y).ok()?;
                }
            }
            Some(mask)
        })
        .collect();
    let masks: Vec<u32> = (0u32..1 << b.len())
        .into_par_iter()
        .filter(|&mask| {
            (0..b.len())
                .filter(|j| mask >> j & 1 == 1)
                .all(|j| requires[j].is_some_and(|r| r & !mask == 0))
        })
        .collect();
    let mut fibre: Vec<(Vec<Point>, ISemigroup)> = masks
        .par_iter()
        .map(|&mask| {
            let x: Vec<Point> = (0..b.len()).filter(|j| mask >> j & 1 == 1).map(|j| b[j].clone()).collect();
            let mut gaps: Vec<Point> = below
                .iter()
                .filter(|p| !p.is_zero() && x.binary_search(p).is_err())
                .cloned()
                .collect();
            gaps.push(f.clone());
            gaps.sort();
            let t = ISemigroup::from_gaps(s.clone(), GapSemigroup::from_parts(s.cone().clone(), gaps));
            (x, t)
        })
        .collect();
    fibre.sort_by(|a, b| (a.1.genus(), a.1.gaps()).cmp(&(b.1.genus(), b.1.gaps())));
    let (x_parts, results) = fibre.into_iter().unzip();
    Ok(FrobeniusFiber { f: f.clone(), l, a_s_f, b, results, x_parts })
}

/// Output of the fixed-multiplicity enumeration.
#[derive(Clone, Debug)]
pub struct MultiplicityFiber {
    /// `M` in ray order.
    pub m: Vec<Point>,
    /// `B = ℋ((M + S) ∪ {0}) ∩ S`.
    pub b: Vec<Point>,
    pub subsets_scanned: u64,
    /// Distinct I(S)-semigroups over all of `𝒫(B)`.
    pub distinct: usize,
    /// Distinct I(S)-semigroups over the non-empty subsets of `B`.
    pub distinct_nonempty: usize,
    /// How many distinct results have ray multiplicities exactly `M`.
    pub strict: usize,
    pub verified: bool,
    /// Sorted by genus and gap set; restricted to the strict results when verified.
    pub results: Vec<ISemigroup>,
}

/// All `((M ⊔ X) + S) ∪ {0}` for `X ⊆ B`, deduplicated by canonical generators.
pub fn with_multiplicities(s: Arc<GapSemigroup>, m: &[Point], verify: bool) -> Result<MultiplicityFiber> {
    let m = arrange_on_rays(s.cone(), m)?;
    for x in &m {
        if !s.contains(x) {
            return Err(Error::NotInSemigroup(x.clone()));
        }
    }
    let h = isemigroup_from_ideal(&Ideal::from_set(s.clone(), &m)?)?;
    let b = h.removed();
    if b.len() > MAX_SUBSET_BITS {
        return Err(Error::TooLarge(format!("|B| = {} exceeds {MAX_SUBSET_BITS}", b.len())));
    }
    let scanned = 1u64 << b.len();
    let keys = |range: std::ops::Range<u64>| -> BTreeSet<Vec<Point>> {
        range
            .into_par_iter()
            .map(|mask| {
                let mut x = m.clone();
                x.extend((0..b.len()).filter(|j| mask >> j & 1 == 1).map(|j| b[j].clone()));
                minimals_leq(s.as_ref(), &x).expect("M ∪ B lies in S")
            })
            .collect()
    };
    let nonempty = keys(1..scanned);
    let mut all = nonempty.clone();
    all.extend(keys(0..1));
    let mut results: Vec<ISemigroup> = all
        .par_iter()
        .map(|imsg| {
            let ideal = Ideal::from_set(s.clone(), imsg).expect("canonical sets are valid");
            isemigroup_from_ideal(&ideal).expect("M meets every ray")
        })
        .collect();
    let is_strict = |t: &ISemigroup| t.semigroup().ray_elements() == &m[..];
    let strict = results.iter().filter(|t| is_strict(t)).count();
    if verify {
        results.retain(is_strict);
    }
    results.sort_by(|a, b| (a.genus(), a.gaps()).cmp(&(b.genus(), b.gaps())));
    Ok(MultiplicityFiber {
        m,
        b,
        subsets_scanned: scanned,
        distinct: all.len(),
        distinct_nonempty: nonempty.len(),
        strict,
        verified: verify,
        results,
    })
}
