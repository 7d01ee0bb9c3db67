//! Affine semigroups in two representations: by a finite generating set and,
//! for 𝒞-semigroups, by the cone together with the finite set of gaps.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{check_dim, cone_points_of_grade, enumerate_cone_points, Basis, Cone, Grading, MonomialOrder, Point};

/// Default exploration budget (maximum grade scanned) for gap computations.
pub const DEFAULT_BUDGET: u64 = 512;

/// Default cap on the `q_j` search of an Apery context.
pub const DEFAULT_Q_CAP: u64 = 10_000;

/// Largest Γ-set materialised.
pub const GAMMA_LIMIT: usize = 2_000_000;

/// Work bound when validating a gap set for closure under addition.
const CLOSURE_CHECK_LIMIT: u128 = 5_000_000;

/// Bound on the number of minors inspected by the lattice saturation precheck.
const MINOR_LIMIT: usize = 100_000;

/// Anything that can decide membership of lattice points.
pub trait Membership {
    fn cone(&self) -> &Cone;

    fn contains(&self, x: &Point) -> bool;

    /// `x - y ∈ S`, treating differences outside `ℕ^p` as non-members.
    fn contains_difference(&self, x: &Point, y: &Point) -> bool {
        x.checked_sub(y).is_some_and(|d| self.contains(&d))
    }
}

impl<T: Membership + ?Sized> Membership for &T {
    fn cone(&self) -> &Cone {
        (**self).cone()
    }
    fn contains(&self, x: &Point) -> bool {
        (**self).contains(x)
    }
}

/// Memoized descent deciding `x ∈ ⟨generators⟩`.
///
/// The memo maps a point to the index of the generator used in one
/// representation, or `None` for non-members.
struct Oracle {
    generators: Vec<Point>,
    prune: Option<Basis>,
    memo: RwLock<HashMap<Point, Option<u32>>>,
}

impl Oracle {
    fn new(generators: Vec<Point>, prune: Option<Basis>) -> Self {
        Self { generators, prune, memo: RwLock::new(HashMap::new()) }
    }

    fn member(&self, x: &Point) -> bool {
        if x.is_zero() {
            return true;
        }
        if let Some(hit) = self.memo.read().expect("memo lock").get(x) {
            return hit.is_some();
        }
        let mut memo = self.memo.write().expect("memo lock");
        self.search(x, &mut memo)
    }

    fn search(&self, x: &Point, memo: &mut HashMap<Point, Option<u32>>) -> bool {
        if let Some(hit) = memo.get(x) {
            return hit.is_some();
        }
        if self.prune.as_ref().is_some_and(|b| !b.in_cone(x)) {
            memo.insert(x.clone(), None);
            return false;
        }
        // Frames hold a pending point and the next generator index to try.
        let mut stack: Vec<(Point, usize)> = vec![(x.clone(), 0)];
        'outer: while let Some((y, start)) = stack.last().cloned() {
            for j in start..self.generators.len() {
                let Some(z) = y.checked_sub(&self.generators[j]) else {
                    continue;
                };
                let known = if z.is_zero() { Some(true) } else { memo.get(&z).map(Option::is_some) };
                match known {
                    Some(true) => {
                        // Every pending frame now has a representation.
                        stack.last_mut().unwrap().1 = j;
                        for (p, idx) in stack.drain(..) {
                            memo.insert(p, Some(idx as u32));
                        }
                        break 'outer;
                    }
                    Some(false) => continue,
                    None => {
                        if self.prune.as_ref().is_some_and(|b| !b.in_cone(&z)) {
                            memo.insert(z, None);
                            continue;
                        }
                        stack.last_mut().unwrap().1 = j;
                        stack.push((z, 0));
                        continue 'outer;
                    }
                }
            }
            let (dead, _) = stack.pop().unwrap();
            memo.insert(dead, None);
            if let Some(parent) = stack.last_mut() {
                parent.1 += 1;
            }
        }
        memo.get(x).is_some_and(Option::is_some)
    }

    fn witness(&self, x: &Point) -> Option<Vec<u64>> {
        if !self.member(x) {
            return None;
        }
        let memo = self.memo.read().expect("memo lock");
        let mut lambda = vec![0u64; self.generators.len()];
        let mut y = x.clone();
        while !y.is_zero() {
            let j = memo.get(&y).copied().flatten().expect("members have recorded steps") as usize;
            lambda[j] += 1;
            y = y.checked_sub(&self.generators[j]).expect("recorded step stays in ℕ^p");
        }
        Some(lambda)
    }
}

/// An affine semigroup given by its minimal generating set.
pub struct GenSemigroup {
    generators: Vec<Point>,
    cone: Cone,
    ray_elements: Vec<Point>,
    oracle: Oracle,
}

impl GenSemigroup {
    /// Builds the semigroup, dropping (with a warning) zero and redundant
    /// generators so that the stored set is minimal.
    pub fn new(generators: Vec<Point>) -> Result<Self> {
        let before = generators.len();
        let s = Self::minimized(generators)?;
        if s.generators.len() < before {
            log::warn!(
                "removed {} redundant generator(s); minimal generating set has {} element(s)",
                before - s.generators.len(),
                s.generators.len()
            );
        }
        Ok(s)
    }

    /// Like [`GenSemigroup::new`] without the warning, for generating sets that
    /// are expected to be redundant.
    pub fn minimized(generators: Vec<Point>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyInput("generators"))?;
        let dim = first.dim();
        for g in &generators {
            check_dim(dim, g.dim())?;
        }
        let cone = Cone::from_generators(&generators)?;
        let grading = Grading::standard(dim);
        let candidates: Vec<Point> = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .sorted_by_key(|g| (grading.grade(g), g.clone()))
            .dedup()
            .collect();
        // A generator is redundant iff it lies in the semigroup spanned by the
        // candidates of strictly smaller grade, which the kept ones already span.
        let prune = cone.basis().ok().cloned();
        let mut kept: Vec<Point> = Vec::new();
        let mut prefix = Oracle::new(Vec::new(), prune.clone());
        let mut start = 0;
        while start < candidates.len() {
            let g = grading.grade(&candidates[start]);
            let end = start + candidates[start..].iter().take_while(|c| grading.grade(c) == g).count();
            if prefix.generators.len() != kept.len() {
                prefix = Oracle::new(kept.clone(), prune.clone());
            }
            for c in &candidates[start..end] {
                if kept.is_empty() || !prefix.member(c) {
                    kept.push(c.clone());
                }
            }
            start = end;
        }
        kept.sort();
        Ok(Self::from_minimal(kept, cone))
    }

    fn from_minimal(generators: Vec<Point>, cone: Cone) -> Self {
        let grading = Grading::standard(cone.dim());
        let ray_elements = cone
            .rays()
            .iter()
            .map(|r| {
                generators
                    .iter()
                    .filter(|g| g.primitive() == *r)
                    .min_by_key(|g| grading.grade(g))
                    .cloned()
                    .expect("every extremal ray of the generated cone carries a generator")
            })
            .collect();
        let oracle = Oracle::new(generators.clone(), cone.basis().ok().cloned());
        Self { generators, cone, ray_elements, oracle }
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// The minimal generating set, sorted lexicographically.
    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// `multᵢ(S)` for every extremal ray, in ray order.
    pub fn ray_elements(&self) -> &[Point] {
        &self.ray_elements
    }

    /// Minimal generators that are not ray multiplicities.
    pub fn off_ray_generators(&self) -> Vec<Point> {
        self.generators
            .iter()
            .filter(|g| !self.ray_elements.contains(g))
            .cloned()
            .collect()
    }

    /// Brute-force membership with one representation `x = Σ λⱼ nⱼ`,
    /// coefficients indexed like [`GenSemigroup::generators`].
    pub fn oracle_member(&self, x: &Point) -> Result<Option<Vec<u64>>> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.oracle.witness(x))
    }

    /// Computes the gap set, certifying that it is complete.
    pub fn compute_gaps(&self, budget: u64) -> Result<GapSemigroup> {
        self.compute_gaps_graded(&Grading::standard(self.dim()), budget)
    }

    /// Gap computation with an explicit grading for the scan. The budget is
    /// the largest grade explored.
    pub fn compute_gaps_graded(&self, grading: &Grading, budget: u64) -> Result<GapSemigroup> {
        check_dim(self.dim(), grading.dim())?;
        self.cone.basis()?;
        self.check_ray_gcds()?;
        self.check_saturation()?;
        let weights: Vec<i64> = self.ray_elements.iter().map(|n| grading.grade(n)).collect();
        let sum_w: i64 = weights.iter().sum();
        let max_w: i64 = *weights.iter().max().expect("at least one ray");
        let mut gaps = Vec::new();
        let mut last_gap: i64 = -1;
        let mut g: i64 = 0;
        loop {
            if g as u64 > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            for x in cone_points_of_grade(&self.cone, grading, g) {
                if !self.oracle.member(&x) {
                    gaps.push(x);
                    last_gap = g;
                }
            }
            // A gap-free slab [w, w + max_w) above Σ w(nᵢ) rules out all larger gaps.
            let w = sum_w.max(last_gap + 1);
            if g >= w + max_w - 1 {
                break;
            }
            g += 1;
        }
        gaps.sort();
        Ok(GapSemigroup::from_parts(self.cone.clone(), gaps))
    }

    /// On every ray the semigroup is generated by the generators lying on it,
    /// so their multiples must have gcd 1.
    fn check_ray_gcds(&self) -> Result<()> {
        for (i, r) in self.cone.rays().iter().enumerate() {
            let k = r.iter().position(|&c| c != 0).expect("rays are non-zero");
            let g = self
                .generators
                .iter()
                .filter(|g| g.primitive() == *r)
                .fold(0i64, |acc, gen| acc.gcd(&(gen[k] / r[k])));
            if g != 1 {
                return Err(Error::NotCSemigroup(format!(
                    "only multiples of {g}·{r} lie in S on extremal ray {i}"
                )));
            }
        }
        Ok(())
    }

    /// The group generated by S must be saturated in its span, i.e. the gcd of
    /// the maximal minors of the generator matrix is 1.
    fn check_saturation(&self) -> Result<()> {
        let t = self.cone.rays().len();
        let p = self.dim();
        let mut g = BigInt::zero();
        let mut inspected = 0usize;
        for cols in (0..p).combinations(t) {
            for rows in self.generators.iter().combinations(t) {
                inspected += 1;
                if inspected > MINOR_LIMIT {
                    log::debug!("saturation precheck skipped: too many minors");
                    return Ok(());
                }
                let m: Vec<Vec<i64>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
                g = g.gcd(&determinant(&m));
                if g.is_one() {
                    return Ok(());
                }
            }
        }
        Err(Error::NotCSemigroup(format!(
            "the generated group has index {g} in the lattice of its span"
        )))
    }

    /// Converts to the gap representation, assuming it is a 𝒞-semigroup.
    pub fn to_gap_semigroup(&self) -> Result<GapSemigroup> {
        self.compute_gaps(DEFAULT_BUDGET)
    }
}

impl Membership for GenSemigroup {
    fn cone(&self) -> &Cone {
        &self.cone
    }

    fn contains(&self, x: &Point) -> bool {
        self.oracle.member(x)
    }
}

impl Clone for GenSemigroup {
    fn clone(&self) -> Self {
        Self::from_minimal(self.generators.clone(), self.cone.clone())
    }
}

impl std::fmt::Debug for GenSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenSemigroup").field("generators", &self.generators).finish()
    }
}

impl PartialEq for GenSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for GenSemigroup {}

fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(sel) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigInt::zero();
        };
        if sel != col {
            a.swap(sel, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for i in col + 1..n {
            let factor = &a[i][col] / &pivot;
            for k in col..n {
                let d = &factor * &a[col][k];
                a[i][k] -= d;
            }
        }
    }
    det.to_integer().abs()
}

/// A 𝒞-semigroup: the lattice points of a simplicial cone minus a finite,
/// addition-closed-complement set of gaps.
pub struct GapSemigroup {
    cone: Cone,
    gaps: Vec<Point>,
    gap_set: HashSet<Point>,
    ray_elements: Vec<Point>,
    msg: OnceLock<Vec<Point>>,
}

impl GapSemigroup {
    /// Validates that the gaps lie in the cone and that their complement is
    /// closed under addition.
    pub fn new(cone: Cone, gaps: Vec<Point>) -> Result<Self> {
        cone.basis()?;
        let mut sorted = gaps;
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGapSet("duplicate gap".into()));
        }
        for h in &sorted {
            check_dim(cone.dim(), h.dim())?;
            if h.is_zero() {
                return Err(Error::InvalidGapSet("0 cannot be a gap".into()));
            }
            if !cone.contains(h) {
                return Err(Error::InvalidGapSet(format!("gap {h} lies outside the cone")));
            }
        }
        let work: u128 = sorted
            .iter()
            .map(|h| h.iter().fold(1u128, |acc, &c| acc.saturating_mul(c as u128 + 1)))
            .fold(0u128, u128::saturating_add);
        if work > CLOSURE_CHECK_LIMIT {
            return Err(Error::TooLarge("gap set too large to validate".into()));
        }
        let s = Self::from_parts(cone, sorted);
        if let Some((a, b)) = s.closure_violation() {
            return Err(Error::InvalidGapSet(format!(
                "complement is not closed: {a} + {b} is listed as a gap"
            )));
        }
        Ok(s)
    }

    /// `ℕ^p ∩ cone` itself.
    pub fn full_cone(cone: Cone) -> Result<Self> {
        Self::new(cone, Vec::new())
    }

    /// Trusted constructor for gap sets produced by the algorithms.
    pub(crate) fn from_parts(cone: Cone, gaps: Vec<Point>) -> Self {
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
        let gap_set: HashSet<Point> = gaps.iter().cloned().collect();
        let ray_elements = cone
            .rays()
            .iter()
            .map(|r| {
                (1..)
                    .map(|k| r.scale(k))
                    .find(|x| !gap_set.contains(x))
                    .expect("finitely many gaps")
            })
            .collect();
        Self { cone, gaps, gap_set, ray_elements, msg: OnceLock::new() }
    }

    fn closure_violation(&self) -> Option<(Point, Point)> {
        for h in &self.gaps {
            let mut ranges = h.iter().map(|&c| 0..=c).multi_cartesian_product();
            if let Some(a) = ranges.find_map(|coords| {
                let a = Point::from_raw(coords);
                (!a.is_zero() && a != *h && self.contains(&a) && self.contains_difference(h, &a)).then_some(a)
            }) {
                let b = h.checked_sub(&a).unwrap();
                return Some((a, b));
            }
        }
        None
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// Gaps sorted lexicographically.
    pub fn gaps(&self) -> &[Point] {
        &self.gaps
    }

    pub fn is_gap(&self, x: &Point) -> bool {
        self.gap_set.contains(x)
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// `multᵢ(S)` for every extremal ray, in ray order.
    pub fn ray_elements(&self) -> &[Point] {
        &self.ray_elements
    }

    pub fn max_gap_grade(&self) -> i64 {
        self.gaps.iter().map(Point::degree).max().unwrap_or(0)
    }

    /// Elements above this grade are never minimal generators.
    pub fn decomposability_bound(&self) -> i64 {
        self.ray_elements.iter().map(Point::degree).sum::<i64>() + self.max_gap_grade()
    }

    /// The minimal generating set, sorted lexicographically.
    pub fn minimal_generators(&self) -> &[Point] {
        self.msg.get_or_init(|| self.compute_msg())
    }

    fn compute_msg(&self) -> Vec<Point> {
        let grading = Grading::standard(self.dim());
        let bound = self.decomposability_bound();
        let mut msg: Vec<Point> = Vec::new();
        for x in enumerate_cone_points(&self.cone, &grading, bound).expect("simplicial cone") {
            if x.is_zero() || self.is_gap(&x) {
                continue;
            }
            let decomposable = msg.iter().any(|g| {
                x.checked_sub(g).is_some_and(|rest| !rest.is_zero() && self.contains(&rest))
            });
            if !decomposable {
                msg.push(x);
            }
        }
        msg.sort();
        msg
    }

    pub fn frobenius(&self, order: &MonomialOrder) -> Result<Point> {
        order.max(&self.gaps).cloned().ok_or(Error::EmptyGaps)
    }

    /// Gaps `x` with `x + n ∈ S` for every minimal generator `n`.
    pub fn pseudo_frobenius(&self) -> Vec<Point> {
        let msg = self.minimal_generators();
        self.gaps
            .iter()
            .filter(|h| msg.iter().all(|n| self.contains(&h.add(n))))
            .cloned()
            .collect()
    }

    /// The semigroup with one more gap `x` (which must be a minimal generator
    /// for the result to be a semigroup).
    pub fn without(&self, x: &Point) -> GapSemigroup {
        let mut gaps = self.gaps.clone();
        let pos = gaps.binary_search(x).expect_err("element is already a gap");
        gaps.insert(pos, x.clone());
        GapSemigroup::from_parts(self.cone.clone(), gaps)
    }

    /// The same semigroup presented by its minimal generators.
    pub fn to_generated(&self) -> GenSemigroup {
        GenSemigroup::from_minimal(self.minimal_generators().to_vec(), self.cone.clone())
    }
}

impl Membership for GapSemigroup {
    fn cone(&self) -> &Cone {
        &self.cone
    }

    fn contains(&self, x: &Point) -> bool {
        self.cone.contains(x) && !self.gap_set.contains(x)
    }
}

impl Clone for GapSemigroup {
    fn clone(&self) -> Self {
        let s = Self::from_parts(self.cone.clone(), self.gaps.clone());
        if let Some(msg) = self.msg.get() {
            let _ = s.msg.set(msg.clone());
        }
        s
    }
}

impl PartialEq for GapSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.cone == other.cone && self.gaps == other.gaps
    }
}

impl Eq for GapSemigroup {}

impl std::hash::Hash for GapSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cone.rays().hash(state);
        self.gaps.hash(state);
    }
}

impl std::fmt::Debug for GapSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GapSemigroup")
            .field("rays", &self.cone.rays())
            .field("gaps", &self.gaps)
            .finish()
    }
}

/// Orders `m` so that its i-th element lies on the i-th extremal ray.
pub fn arrange_on_rays(cone: &Cone, m: &[Point]) -> Result<Vec<Point>> {
    let t = cone.rays().len();
    if m.len() != t {
        return Err(Error::NotOnRays);
    }
    let mut slots: Vec<Option<Point>> = vec![None; t];
    for x in m {
        check_dim(cone.dim(), x.dim())?;
        let i = cone.ray_index(x).ok_or(Error::NotOnRays)?;
        if slots[i].replace(x.clone()).is_some() {
            return Err(Error::NotOnRays);
        }
    }
    Ok(slots.into_iter().map(|s| s.expect("one point per ray")).collect())
}

/// The finite data attached to `M = {m₁,…,m_t}`, one non-zero element of S
/// per extremal ray: the exponents `q_j`, the Γ-set and `∩ᵢ Ap(S, mᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyContext {
    m: Vec<Point>,
    generators: Vec<Point>,
    q: Vec<u64>,
    gamma: Vec<Point>,
    apery: Vec<Point>,
}

impl AperyContext {
    pub fn new(s: &GenSemigroup, m: &[Point]) -> Result<Self> {
        Self::with_cap(s, m, DEFAULT_Q_CAP)
    }

    pub fn with_cap(s: &GenSemigroup, m: &[Point], q_cap: u64) -> Result<Self> {
        s.cone().basis()?;
        let m = arrange_on_rays(s.cone(), m)?;
        for x in &m {
            if !s.contains(x) {
                return Err(Error::NotInSemigroup(x.clone()));
            }
        }
        let basis = Basis::new(&m).expect("points on distinct rays of a simplicial cone are independent");
        let q = s
            .generators()
            .iter()
            .map(|n| {
                (1..=q_cap)
                    .find(|&q| {
                        basis
                            .integer_coordinates(&n.scale(q as i64))
                            .is_some_and(|mu| mu.iter().all(|&c| c >= 0))
                    })
                    .ok_or(Error::CapExceeded(q_cap))
            })
            .collect::<Result<Vec<u64>>>()?;
        let size = q.iter().fold(1u128, |acc, &x| acc.saturating_mul(x as u128));
        if size > GAMMA_LIMIT as u128 {
            return Err(Error::TooLarge(format!("Γ would exceed {GAMMA_LIMIT} elements")));
        }
        let mut gamma: BTreeSet<Point> = BTreeSet::from([Point::zero(s.dim())]);
        for (n, &qj) in s.generators().iter().zip(&q) {
            gamma = gamma
                .iter()
                .flat_map(|g| (0..qj as i64).map(move |l| g.add(&n.scale(l))))
                .collect();
        }
        let gamma: Vec<Point> = gamma.into_iter().collect();
        let apery = gamma
            .iter()
            .filter(|x| m.iter().all(|mi| !s.contains_difference(x, mi)))
            .cloned()
            .collect();
        Ok(Self { m, generators: s.generators().to_vec(), q, gamma, apery })
    }

    /// `M` in ray order.
    pub fn m(&self) -> &[Point] {
        &self.m
    }

    /// Minimal positive `q_j` with `q_j nⱼ ∈ ⟨M⟩`, indexed like the generators of S.
    pub fn q(&self) -> &[u64] {
        &self.q
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// `Γ = {Σ λⱼ nⱼ : 0 ≤ λⱼ < q_j}`, sorted.
    pub fn gamma(&self) -> &[Point] {
        &self.gamma
    }

    /// `∩ᵢ Ap(S, mᵢ)`, sorted; always contains 0.
    pub fn apery(&self) -> &[Point] {
        &self.apery
    }

    /// Generators `⋃ᵢ {mᵢ + γ : γ ∈ Γ}` of `(M + S) ∪ {0}`.
    pub fn translate_generators(&self) -> Vec<Point> {
        self.m
            .iter()
            .flat_map(|mi| self.gamma.iter().map(move |g| mi.add(g)))
            .sorted()
            .dedup()
            .collect()
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::lattice::pt;

    /// Unmemoized bounded enumeration of ℕ-combinations, independent of the oracle.
    fn brute_member(gens: &[Point], x: &Point) -> bool {
        if x.is_zero() {
            return true;
        }
        gens.iter().any(|g| x.checked_sub(g).is_some_and(|r| brute_member(gens, &r)))
    }

    #[test]
    fn oracle_examples() {
        let s2 = s2();
        let w = s2.oracle_member(&pt(&[31, 8])).unwrap().expect("member");
        let sum = s2
            .generators()
            .iter()
            .zip(&w)
            .fold(Point::zero(2), |acc, (g, &l)| acc.add(&g.scale(l as i64)));
        assert_eq!(sum, pt(&[31, 8]));
        assert_eq!(s2.oracle_member(&pt(&[0, 0])).unwrap(), Some(vec![0; 5]));
        assert_eq!(s1().oracle_member(&pt(&[8, 2])).unwrap(), None);
        assert!(s1().oracle_member(&pt(&[8, 2, 1])).is_err());
    }

    #[test]
    fn oracle_matches_brute_force() {
        let s = s1();
        for x in 0..=25 {
            for y in 0..=8 {
                let p = pt(&[x, y]);
                assert_eq!(s.contains(&p), brute_member(s.generators(), &p), "{p}");
            }
        }
    }

    #[test]
    fn redundant_generators_dropped() {
        let s = GenSemigroup::new(points(&[[5, 1], [10, 2], [6, 2], [11, 3], [0, 0]])).unwrap();
        assert_eq!(s.generators(), &points(&[[5, 1], [6, 2]])[..]);
        assert_eq!(s1().generators().len(), 8);
    }

    #[test]
    fn gaps_of_s1() {
        let g = s1_gaps();
        assert_eq!(g.genus(), 4);
        assert_eq!(g.gaps(), &points(&[[3, 1], [4, 1], [7, 2], [8, 2]])[..]);
    }

    #[test]
    fn s2_is_not_a_c_semigroup() {
        match s2().compute_gaps(DEFAULT_BUDGET) {
            Err(Error::NotCSemigroup(msg)) => assert!(msg.contains("2·(3,1)"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unsaturated_group_detected() {
        // ⟨(1,0),(1,2)⟩ misses every (k,1): the ray gcds are 1 but the group has index 2.
        let s = GenSemigroup::new(points(&[[1, 0], [1, 2]])).unwrap();
        assert!(matches!(s.compute_gaps(64), Err(Error::NotCSemigroup(_))));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        assert_eq!(s1().compute_gaps(5).unwrap_err(), Error::BudgetExceeded(5));
    }

    #[test]
    fn minimal_generators_from_gaps() {
        let g = s1_gaps();
        assert_eq!(g.minimal_generators(), s1().generators());
        let orth = GapSemigroup::full_cone(Cone::orthant(2)).unwrap();
        assert_eq!(orth.minimal_generators(), &points(&[[0, 1], [1, 0]])[..]);
        assert_eq!(orth.genus(), 0);
    }

    #[test]
    fn removing_a_generator() {
        let t = s1_gaps().without(&pt(&[5, 1]));
        let msg = t.minimal_generators();
        assert!(msg.contains(&pt(&[10, 2])));
        assert!(!msg.contains(&pt(&[5, 1])));
        // Brute-force decomposability over the box of grade ≤ 40.
        let elems: Vec<Point> = enumerate_cone_points(t.cone(), &Grading::standard(2), 40)
            .unwrap()
            .into_iter()
            .filter(|x| !x.is_zero() && t.contains(x))
            .collect();
        let brute: Vec<Point> = elems
            .iter()
            .filter(|x| !elems.iter().any(|a| a != *x && t.contains_difference(x, a) && x.checked_sub(a).is_some_and(|d| !d.is_zero())))
            .cloned()
            .sorted()
            .collect();
        assert_eq!(msg, &brute[..]);
    }

    #[test]
    fn frobenius_examples() {
        let g = s1_gaps();
        assert_eq!(g.frobenius(&MonomialOrder::deglex()).unwrap(), pt(&[8, 2]));
        assert_eq!(g.frobenius(&MonomialOrder::lex()).unwrap(), pt(&[8, 2]));
        let full = GapSemigroup::full_cone(g.cone().clone()).unwrap();
        assert_eq!(full.frobenius(&MonomialOrder::deglex()).unwrap_err(), Error::EmptyGaps);
        let single = GapSemigroup::new(g.cone().clone(), vec![pt(&[3, 1])]).unwrap();
        assert_eq!(single.frobenius(&MonomialOrder::deglex()).unwrap(), pt(&[3, 1]));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(s1().ray_elements(), &points(&[[6, 2], [5, 1]])[..]);
        assert_eq!(s1_gaps().ray_elements(), &points(&[[6, 2], [5, 1]])[..]);
        assert_eq!(s2().ray_elements(), &points(&[[6, 2], [5, 1]])[..]);
        assert_eq!(n2().ray_elements(), &points(&[[0, 1], [1, 0]])[..]);
    }

    #[test]
    fn gap_set_validation() {
        let cone = s1_gaps().cone().clone();
        assert!(GapSemigroup::new(cone.clone(), vec![pt(&[0, 0])]).is_err());
        assert!(GapSemigroup::new(cone.clone(), vec![pt(&[2, 1])]).is_err());
        // (8,2) = (4,1) + (4,1) cannot be a gap unless (4,1) is.
        assert!(GapSemigroup::new(cone.clone(), vec![pt(&[8, 2])]).is_err());
        assert!(GapSemigroup::new(cone, points(&[[3, 1], [4, 1], [7, 2], [8, 2]])).is_ok());
    }

    #[test]
    fn apery_context_of_s2() {
        let s2 = s2();
        let ctx = AperyContext::new(&s2, &points(&[[5, 1], [6, 2]])).unwrap();
        assert_eq!(ctx.m(), &points(&[[6, 2], [5, 1]])[..]);
        // Generators are sorted lexicographically: (5,1),(6,2),(8,2),(9,2),(12,3).
        assert_eq!(ctx.q(), &[1, 1, 2, 4, 4]);
        assert_eq!(ctx.gamma().len(), 32);
        assert_eq!(ctx.apery(), &points(&[[0, 0], [8, 2], [9, 2], [12, 3]])[..]);
    }

    /// q_j by brute force: smallest q ≤ 16 with q·nⱼ an ℕ-combination of M.
    #[test]
    fn q_matches_brute_force() {
        let s2 = s2();
        let m = points(&[[5, 1], [6, 2]]);
        let ctx = AperyContext::new(&s2, &m).unwrap();
        for (n, &q) in s2.generators().iter().zip(ctx.q()) {
            let brute = (1..=16).find(|&k| brute_member(&m, &n.scale(k))).unwrap();
            assert_eq!(q, brute as u64, "{n}");
        }
    }

    #[test]
    fn apery_context_errors() {
        let s1 = s1();
        assert_eq!(AperyContext::new(&s1, &points(&[[5, 1]])).unwrap_err(), Error::NotOnRays);
        assert_eq!(AperyContext::new(&s1, &points(&[[5, 1], [10, 2]])).unwrap_err(), Error::NotOnRays);
        assert_eq!(
            AperyContext::new(&s1, &points(&[[5, 1], [3, 1]])).unwrap_err(),
            Error::NotInSemigroup(pt(&[3, 1]))
        );
        assert_eq!(
            AperyContext::with_cap(&s1, &points(&[[50, 10], [6, 2]]), 3).unwrap_err(),
            Error::CapExceeded(3)
        );
    }

    #[test]
    fn pseudo_frobenius_examples() {
        let g = s1_gaps();
        let pf = g.pseudo_frobenius();
        for h in g.gaps() {
            let expected = s1().generators().iter().all(|n| g.contains(&h.add(n)));
            assert_eq!(pf.contains(h), expected);
        }
        let full = GapSemigroup::full_cone(g.cone().clone()).unwrap();
        assert!(full.pseudo_frobenius().is_empty());
        let single = GapSemigroup::new(g.cone().clone(), vec![pt(&[3, 1])]).unwrap();
        assert_eq!(single.pseudo_frobenius(), vec![pt(&[3, 1])]);
    }
}
