//! Ideals `P = X + S` of a 𝒞-semigroup and the I(S)-semigroups `P ∪ {0}`.

use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::lattice::{check_dim, enumerate_cone_points, Cone, Grading, Point};
use crate::semigroup::{GapSemigroup, Membership};

/// The `≤_S`-minimal elements of `x`, sorted; `a ≤_S b` iff `b - a ∈ S`.
pub fn minimals_leq<S: Membership + ?Sized>(s: &S, x: &[Point]) -> Result<Vec<Point>> {
    if x.is_empty() {
        return Err(Error::EmptyInput("X"));
    }
    let mut xs = x.to_vec();
    xs.sort();
    xs.dedup();
    for p in &xs {
        check_dim(s.cone().dim(), p.dim())?;
        if !s.contains(p) {
            return Err(Error::NotInSemigroup(p.clone()));
        }
    }
    Ok(xs
        .iter()
        .filter(|y| !xs.iter().any(|a| a != *y && s.contains_difference(y, a)))
        .cloned()
        .collect())
}

/// An ideal of a 𝒞-semigroup, stored by its canonical generating set.
#[derive(Clone, Debug)]
pub struct Ideal {
    base: Arc<GapSemigroup>,
    imsg: Vec<Point>,
}

impl Ideal {
    /// The ideal `X + S`, normalized to `Minimals_{≤_S}(X)`.
    pub fn from_set(base: Arc<GapSemigroup>, x: &[Point]) -> Result<Self> {
        let imsg = minimals_leq(base.as_ref(), x)?;
        Ok(Self { base, imsg })
    }

    pub fn base(&self) -> &Arc<GapSemigroup> {
        &self.base
    }

    /// `imsg_S(P)`, sorted.
    pub fn imsg(&self) -> &[Point] {
        &self.imsg
    }

    /// Whether the ideal is all of S, which happens iff `0 ∈ P`.
    pub fn is_whole(&self) -> bool {
        self.imsg.len() == 1 && self.imsg[0].is_zero()
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.imsg.iter().any(|g| self.base.contains_difference(x, g))
    }

    /// Whether `P ∪ {0}` is a 𝒞-semigroup, i.e. P meets every extremal ray.
    ///
    /// Rays are faces of the cone, so `x + s` lands on a ray only when both
    /// summands do; P meets a ray iff some generator in `imsg` lies on it.
    pub fn is_c_semigroup(&self) -> bool {
        self.is_whole() || (0..self.base.cone().rays().len()).all(|i| self.ray_generator(i).is_some())
    }

    /// The lowest-grade generator on ray `i`.
    fn ray_generator(&self, i: usize) -> Option<&Point> {
        self.imsg
            .iter()
            .filter(|x| self.base.cone().ray_index(x) == Some(i))
            .min_by_key(|x| x.degree())
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.imsg == other.imsg
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.imsg.hash(state);
    }
}

/// An I(S)-semigroup `T = P ∪ {0}` in gap representation.
#[derive(Clone, Debug)]
pub struct ISemigroup {
    base: Arc<GapSemigroup>,
    semigroup: GapSemigroup,
    imsg: OnceLock<Vec<Point>>,
}

impl ISemigroup {
    /// The whole base semigroup, the root of the genus tree.
    pub fn root(base: Arc<GapSemigroup>) -> Self {
        let semigroup = base.as_ref().clone();
        Self::from_gaps(base, semigroup)
    }

    /// Trusted constructor; `semigroup` must be an I(S)-semigroup of `base`.
    pub(crate) fn from_gaps(base: Arc<GapSemigroup>, semigroup: GapSemigroup) -> Self {
        Self { base, semigroup, imsg: OnceLock::new() }
    }

    pub fn base(&self) -> &Arc<GapSemigroup> {
        &self.base
    }

    pub fn semigroup(&self) -> &GapSemigroup {
        &self.semigroup
    }

    pub fn gaps(&self) -> &[Point] {
        self.semigroup.gaps()
    }

    pub fn genus(&self) -> usize {
        self.semigroup.genus()
    }

    /// `S ∖ T`, sorted.
    pub fn removed(&self) -> Vec<Point> {
        self.semigroup
            .gaps()
            .iter()
            .filter(|x| !self.base.is_gap(x))
            .cloned()
            .collect()
    }

    /// `imsg_S(T ∖ {0})` computed as `Minimals_{≤_S}(msg(T))`.
    pub fn imsg(&self) -> &[Point] {
        self.imsg.get_or_init(|| {
            minimals_leq(self.base.as_ref(), self.semigroup.minimal_generators())
                .expect("minimal generators of T lie in S")
        })
    }

    /// `imsg_S(T ∖ {0})` computed as `Minimals_{≤_S}(T ∖ {0})`. Elements of
    /// `T` above the decomposability bound of `T` are never minimal.
    pub fn imsg_from_elements(&self) -> Vec<Point> {
        let t = &self.semigroup;
        let elements: Vec<Point> =
            enumerate_cone_points(t.cone(), &Grading::standard(t.dim()), t.decomposability_bound())
                .expect("simplicial cone")
                .into_iter()
                .filter(|x| !x.is_zero() && t.contains(x))
                .collect();
        minimals_leq(self.base.as_ref(), &elements).expect("T ∖ {0} lies in S")
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal { base: self.base.clone(), imsg: self.imsg().to_vec() }
    }
}

impl PartialEq for ISemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.semigroup == other.semigroup
    }
}

impl Eq for ISemigroup {}

impl Membership for ISemigroup {
    fn cone(&self) -> &Cone {
        self.semigroup.cone()
    }

    fn contains(&self, x: &Point) -> bool {
        self.semigroup.contains(x)
    }
}

/// Builds `T = P ∪ {0}` with `ℋ(T) = ℋ(S) ∪ (S ∖ P)`.
pub fn isemigroup_from_ideal(p: &Ideal) -> Result<ISemigroup> {
    let base = p.base.clone();
    if p.is_whole() {
        return Ok(ISemigroup::root(base));
    }
    let cone = base.cone();
    let ray_gens: Vec<&Point> = (0..cone.rays().len())
        .map(|i| p.ray_generator(i).ok_or_else(|| Error::NotCSemigroup(format!("the ideal misses extremal ray {i}"))))
        .collect::<Result<_>>()?;
    // Past this grade some yᵢ can be subtracted and the rest lies above every gap of S.
    let bound = ray_gens.iter().map(|y| y.degree()).sum::<i64>() + base.max_gap_grade();
    let mut gaps: Vec<Point> = base.gaps().to_vec();
    for x in enumerate_cone_points(cone, &Grading::standard(cone.dim()), bound)? {
        if !x.is_zero() && base.contains(&x) && !p.contains(&x) {
            gaps.push(x);
        }
    }
    gaps.sort();
    let semigroup = GapSemigroup::from_parts(cone.clone(), gaps);
    let t = ISemigroup::from_gaps(base, semigroup);
    let _ = t.imsg.set(p.imsg.clone());
    Ok(t)
}

/// Checks that the gap set `gaps` over `cone` describes an I(S)-semigroup:
/// `T ⊆ S` and `(T ∖ {0}) + msg(S) ⊆ T ∖ {0}`.
pub fn verify_isemigroup(s: &GapSemigroup, cone: &Cone, gaps: &[Point]) -> Result<bool> {
    if s.cone() != cone {
        return Err(Error::ConeMismatch);
    }
    let mut sorted = gaps.to_vec();
    sorted.sort();
    sorted.dedup();
    for h in &sorted {
        check_dim(cone.dim(), h.dim())?;
        if h.is_zero() || !cone.contains(h) {
            return Ok(false);
        }
    }
    if !s.gaps().iter().all(|h| sorted.binary_search(h).is_ok()) {
        return Ok(false);
    }
    let t = GapSemigroup::from_parts(cone.clone(), sorted);
    // A failure of the ideal axiom means x + n is a gap of T for some x ∈ T ∖ {0}.
    let ok = t.gaps().iter().all(|h| {
        s.minimal_generators().iter().all(|n| {
            h.checked_sub(n)
                .is_none_or(|x| x.is_zero() || !t.contains(&x))
        })
    });
    debug_assert!(!ok || sandwich_holds(s, &t));
    Ok(ok)
}

/// `T ⊆ S ⊆ T ∪ PF(T)`.
pub fn sandwich_holds(s: &GapSemigroup, t: &GapSemigroup) -> bool {
    if s.gaps().iter().any(|h| !t.is_gap(h)) {
        return false;
    }
    let pf = t.pseudo_frobenius();
    t.gaps()
        .iter()
        .filter(|x| !s.is_gap(x))
        .all(|x| pf.binary_search(x).is_ok())
}
