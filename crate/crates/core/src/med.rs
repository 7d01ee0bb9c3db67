//! Maximal embedding dimension: the three equivalent predicates, the
//! `(M + S) ∪ {0}` construction and the `S₀ ∪ ⋃ (nᵢ + Sᵢ)` decomposition.

use crate::error::{Error, Result};
use crate::ideal::{isemigroup_from_ideal, minimals_leq, Ideal};
use crate::lattice::{enumerate_cone_points, Basis, Grading, Point};
use crate::semigroup::{AperyContext, GapSemigroup, GenSemigroup, Membership};

/// Default grade of the boxes used for closure tests and identity checks.
pub const DEFAULT_BOX_GRADE: i64 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedReport {
    pub is_med: bool,
    /// For a negative answer, a pair `nᵢ, nⱼ ∈ A` with `nᵢ + nⱼ - n_k ∉ S` for every k.
    pub witness: Option<(Point, Point)>,
    /// `∩ᵢ Ap(S, nᵢ)`.
    pub apery_core: Vec<Point>,
    /// The minimal generators off the extremal rays.
    pub a_part: Vec<Point>,
}

/// `∩ᵢ Ap(S, nᵢ) = A ⊔ {0}`.
pub fn is_med_definition(s: &GenSemigroup) -> Result<MedReport> {
    let ctx = AperyContext::new(s, s.ray_elements())?;
    let a_part = s.off_ray_generators();
    let mut expected = a_part.clone();
    expected.push(Point::zero(s.dim()));
    expected.sort();
    let is_med = ctx.apery() == &expected[..];
    let witness = if is_med { None } else { pairwise_witness(s) };
    Ok(MedReport { is_med, witness, apery_core: ctx.apery().to_vec(), a_part })
}

fn pairwise_witness(s: &GenSemigroup) -> Option<(Point, Point)> {
    let a = s.off_ray_generators();
    let e = s.ray_elements();
    for (i, x) in a.iter().enumerate() {
        for y in &a[i..] {
            let sum = x.add(y);
            if !e.iter().any(|n| s.contains_difference(&sum, n)) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// Every pair of off-ray generators `nᵢ, nⱼ` (including `i = j`) has some
/// `n_k ∈ E` with `nᵢ + nⱼ - n_k ∈ S`. Returns a failing pair otherwise.
pub fn is_med_pairwise(s: &GenSemigroup) -> (bool, Option<(Point, Point)>) {
    let w = pairwise_witness(s);
    (w.is_none(), w)
}

/// `T = (M + S) ∪ {0}`, generated by the Γ-translates of M.
#[derive(Clone, Debug)]
pub struct MedConstruction {
    pub context: AperyContext,
    pub semigroup: GenSemigroup,
}

impl MedConstruction {
    /// `msg(T)`.
    pub fn minimal_generators(&self) -> &[Point] {
        self.semigroup.generators()
    }

    /// `ℋ(T) = ℋ(S) ⊔ (∩ᵢ Ap(S, mᵢ) ∖ {0})` for a 𝒞-semigroup S.
    pub fn gap_representation(&self, base: &GapSemigroup) -> Result<GapSemigroup> {
        if base.cone() != self.semigroup.cone() {
            return Err(Error::ConeMismatch);
        }
        let mut gaps = base.gaps().to_vec();
        gaps.extend(self.context.apery().iter().filter(|x| !x.is_zero()).cloned());
        gaps.sort();
        Ok(GapSemigroup::from_parts(base.cone().clone(), gaps))
    }
}

pub fn med_construct(s: &GenSemigroup, m: &[Point]) -> Result<MedConstruction> {
    let context = AperyContext::new(s, m)?;
    let semigroup = GenSemigroup::minimized(context.translate_generators())?;
    Ok(MedConstruction { context, semigroup })
}

/// Decides `(E + S) ∪ {0} = S ∖ A`.
///
/// For 𝒞-semigroups both sides are compared as gap sets. Otherwise every
/// element of S outside Γ already lies in `E + S` and outside A, so the
/// comparison runs over Γ only.
pub fn med_via_theorem(s: &GenSemigroup, budget: u64) -> Result<bool> {
    let a = s.off_ray_generators();
    match s.compute_gaps(budget) {
        Ok(gs) => {
            let base = std::sync::Arc::new(gs);
            let t = isemigroup_from_ideal(&Ideal::from_set(base.clone(), s.ray_elements())?)?;
            let mut expected: Vec<Point> = base.gaps().iter().chain(&a).cloned().collect();
            expected.sort();
            Ok(t.gaps() == &expected[..])
        }
        Err(Error::NotCSemigroup(_)) => {
            let t = med_construct(s, s.ray_elements())?;
            Ok(t.context
                .gamma()
                .iter()
                .all(|g| t.semigroup.contains(g) == (g.is_zero() || !a.contains(g))))
        }
        Err(e) => Err(e),
    }
}

/// `S₀ = {s ∈ S : s - nᵢ ∉ 𝒞 for all i}` together with the predicates of the
/// sets `Sᵢ = {x ∈ 𝒞 : x + nᵢ ∈ S}`.
pub struct Decomposition<'a> {
    s: &'a GenSemigroup,
    ray_elements: Vec<Point>,
    s0: Vec<Point>,
}

impl<'a> Decomposition<'a> {
    pub fn ray_elements(&self) -> &[Point] {
        &self.ray_elements
    }

    /// `S₀`, sorted.
    pub fn s0(&self) -> &[Point] {
        &self.s0
    }

    pub fn in_s_i(&self, i: usize, x: &Point) -> bool {
        self.s.cone().contains(x) && self.s.contains(&x.add(&self.ray_elements[i]))
    }

    /// `x ∈ nᵢ + Sᵢ`.
    pub fn in_shifted(&self, i: usize, x: &Point) -> bool {
        x.checked_sub(&self.ray_elements[i]).is_some_and(|y| self.in_s_i(i, &y))
    }

    pub fn in_union(&self, x: &Point) -> bool {
        self.s0.binary_search(x).is_ok() || (0..self.ray_elements.len()).any(|i| self.in_shifted(i, x))
    }

    fn box_points(&self, max_grade: i64) -> Vec<Point> {
        enumerate_cone_points(self.s.cone(), &Grading::standard(self.s.dim()), max_grade).expect("simplicial cone")
    }

    /// `S = S₀ ∪ ⋃ᵢ (nᵢ + Sᵢ)` on the cone points of grade ≤ `max_grade`.
    pub fn verify_union(&self, max_grade: i64) -> bool {
        self.box_points(max_grade).iter().all(|x| self.s.contains(x) == self.in_union(x))
    }

    /// `Minimals_{≤_S}` of the part of `⋃ᵢ (nᵢ + Sᵢ)` with grade ≤ `max_grade`.
    pub fn corollary_generators(&self, max_grade: i64) -> Vec<Point> {
        let shifted: Vec<Point> = self
            .box_points(max_grade)
            .into_iter()
            .filter(|x| (0..self.ray_elements.len()).any(|i| self.in_shifted(i, x)))
            .collect();
        minimals_leq(self.s, &shifted).expect("shifted sets lie in S")
    }

    /// `S = S₀ ∪ (X + S)` on the box, with X from [`Self::corollary_generators`].
    pub fn verify_corollary(&self, max_grade: i64) -> bool {
        let x = self.corollary_generators(max_grade);
        self.box_points(max_grade).iter().all(|p| {
            let rhs = self.s0.binary_search(p).is_ok() || x.iter().any(|g| self.s.contains_difference(p, g));
            self.s.contains(p) == rhs
        })
    }
}

pub fn decompose(s: &GenSemigroup) -> Result<Decomposition<'_>> {
    let cone = s.cone();
    cone.basis()?;
    let e = s.ray_elements().to_vec();
    // s - nᵢ ∉ 𝒞 for all i forces every ray coordinate below that of nᵢ.
    let bound: i64 = e.iter().map(Point::degree).sum();
    let s0 = enumerate_cone_points(cone, &Grading::standard(s.dim()), bound)?
        .into_iter()
        .filter(|x| s.contains(x) && e.iter().all(|n| x.checked_sub(n).is_none_or(|y| !cone.contains(&y))))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(Decomposition { s, ray_elements: e, s0 })
}

/// Outcome of the sufficient MED criterion through a single closed `S_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Type2Verdict {
    /// A is empty.
    Vacuous,
    /// `S_k = 𝒞` exactly for the given ray element.
    Certified { ray_element: Point },
    /// `S_k` is closed on the test box but not known to be a semigroup.
    ClosedOnBox { ray_element: Point },
    /// Some off-ray generator `m` has `m - n_k ∉ 𝒞` for every k.
    HypothesisFails { generator: Point },
    /// Every common `S_k` has a sum leaving it on the test box.
    NotClosed { ray_element: Point, x: Point, y: Point },
    /// Each generator has a valid k but no single k serves all of them.
    MixedRays,
}

impl Type2Verdict {
    /// `Some(true)` when the criterion applies, `Some(false)` when it provably
    /// does not, `None` when inconclusive.
    pub fn holds(&self) -> Option<bool> {
        match self {
            Type2Verdict::Vacuous | Type2Verdict::Certified { .. } => Some(true),
            Type2Verdict::HypothesisFails { .. } | Type2Verdict::NotClosed { .. } => Some(false),
            Type2Verdict::ClosedOnBox { .. } | Type2Verdict::MixedRays => None,
        }
    }
}

pub fn med_type2_check(s: &GenSemigroup, box_grade: i64) -> Result<Type2Verdict> {
    let cone = s.cone();
    cone.basis()?;
    let a = s.off_ray_generators();
    if a.is_empty() {
        return Ok(Type2Verdict::Vacuous);
    }
    let e = s.ray_elements();
    let mut common: Vec<usize> = (0..e.len()).collect();
    for m in &a {
        let ks: Vec<usize> = (0..e.len())
            .filter(|&k| m.checked_sub(&e[k]).is_some_and(|y| cone.contains(&y)))
            .collect();
        if ks.is_empty() {
            return Ok(Type2Verdict::HypothesisFails { generator: m.clone() });
        }
        common.retain(|k| ks.contains(k));
    }
    if common.is_empty() {
        return Ok(Type2Verdict::MixedRays);
    }
    let grading = Grading::standard(s.dim());
    // Every cone point is d + Σ cᵢnᵢ with d in the half-open parallelepiped of E.
    let basis_e = Basis::new(e).expect("ray elements are independent");
    let bound: i64 = e.iter().map(Point::degree).sum();
    let parallelepiped: Vec<Point> = enumerate_cone_points(cone, &grading, bound)?
        .into_iter()
        .filter(|d| basis_e.floor_coordinates(d).is_some_and(|f| f.iter().all(|&c| c == 0)))
        .collect();
    let mut failure = None;
    let mut closed = None;
    for &k in &common {
        if parallelepiped.iter().all(|d| s.contains(&d.add(&e[k]))) {
            return Ok(Type2Verdict::Certified { ray_element: e[k].clone() });
        }
        let sk: Vec<Point> = enumerate_cone_points(cone, &grading, box_grade)?
            .into_iter()
            .filter(|x| s.contains(&x.add(&e[k])))
            .collect();
        let bad = sk.iter().enumerate().find_map(|(i, x)| {
            sk[i..]
                .iter()
                .find(|y| !s.contains(&x.add(y).add(&e[k])))
                .map(|y| (x.clone(), y.clone()))
        });
        match bad {
            Some((x, y)) => {
                failure.get_or_insert(Type2Verdict::NotClosed { ray_element: e[k].clone(), x, y });
            }
            None => {
                closed.get_or_insert(Type2Verdict::ClosedOnBox { ray_element: e[k].clone() });
            }
        }
    }
    Ok(closed.or(failure).expect("at least one common ray"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;
    use crate::semigroup::fixtures::*;
    use crate::semigroup::DEFAULT_BUDGET;

    /// Apery core straight from the definition, over the box of grade ≤ 60.
    fn brute_core(s: &GenSemigroup) -> Vec<Point> {
        enumerate_cone_points(s.cone(), &Grading::standard(s.dim()), 60)
            .unwrap()
            .into_iter()
            .filter(|x| s.contains(x) && s.ray_elements().iter().all(|n| !s.contains_difference(x, n)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    #[test]
    fn s2_is_med() {
        let s2 = s2();
        let r = is_med_definition(&s2).unwrap();
        assert!(r.is_med);
        assert_eq!(r.apery_core, points(&[[0, 0], [8, 2], [9, 2], [12, 3]]));
        assert_eq!(r.apery_core, brute_core(&s2));
        assert_eq!(is_med_pairwise(&s2), (true, None));
        assert!(s2.contains(&pt(&[8, 2]).add(&pt(&[9, 2])).checked_sub(&pt(&[5, 1])).unwrap()));
        assert!(med_via_theorem(&s2, DEFAULT_BUDGET).unwrap());
    }

    /// The Apery core of S₁ with respect to E is A ∪ {0}.
    #[test]
    fn s1_is_med() {
        let s1 = s1();
        let r = is_med_definition(&s1).unwrap();
        assert_eq!(r.apery_core, brute_core(&s1));
        let mut expected = s1.off_ray_generators();
        expected.push(Point::zero(2));
        expected.sort();
        assert_eq!(r.apery_core, expected);
        assert!(r.is_med);
        // (18,4) = (9,2) + (9,2) is not in the core: (18,4) - (5,1) = (13,3) ∈ S₁.
        assert!(s1.contains_difference(&pt(&[18, 4]), &pt(&[5, 1])));
        assert_eq!(is_med_pairwise(&s1).0, r.is_med);
        assert_eq!(med_via_theorem(&s1, DEFAULT_BUDGET).unwrap(), r.is_med);
    }

    #[test]
    fn orthant_is_med() {
        let n2 = n2();
        let r = is_med_definition(&n2).unwrap();
        assert!(r.is_med);
        assert_eq!(r.apery_core, vec![Point::zero(2)]);
        assert!(r.a_part.is_empty());
        assert!(is_med_pairwise(&n2).0);
        assert!(med_via_theorem(&n2, DEFAULT_BUDGET).unwrap());
        assert_eq!(med_type2_check(&n2, DEFAULT_BOX_GRADE).unwrap(), Type2Verdict::Vacuous);
    }

    #[test]
    fn non_med_example() {
        // ⟨3, 5, 7⟩ ⊂ ℕ is MED, ⟨4, 5, 6⟩ is not: 5 + 5 - 4 = 6 ∈ S but 6 + 6 - 4 = 8 ∉ S.
        let s = GenSemigroup::new(vec![pt(&[4]), pt(&[5]), pt(&[6])]).unwrap();
        let r = is_med_definition(&s).unwrap();
        assert!(!r.is_med);
        assert_eq!(r.witness, Some((pt(&[5]), pt(&[6]))));
        assert_eq!(is_med_pairwise(&s), (false, Some((pt(&[5]), pt(&[6])))));
        assert!(!med_via_theorem(&s, DEFAULT_BUDGET).unwrap());
        let med = GenSemigroup::new(vec![pt(&[3]), pt(&[5]), pt(&[7])]).unwrap();
        assert!(is_med_definition(&med).unwrap().is_med);
        assert!(med_via_theorem(&med, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn construction_of_s2() {
        let c = med_construct(&s2(), &points(&[[5, 1], [6, 2]])).unwrap();
        assert_eq!(
            c.minimal_generators(),
            &points(&[[5, 1], [6, 2], [13, 3], [14, 3], [14, 4], [15, 4], [17, 4], [18, 5]])[..]
        );
        assert!(is_med_definition(&c.semigroup).unwrap().is_med);
        // S₂ is not a 𝒞-semigroup and neither is T.
        assert!(matches!(c.semigroup.compute_gaps(DEFAULT_BUDGET), Err(Error::NotCSemigroup(_))));
    }

    #[test]
    fn construction_gap_law_s1() {
        let s1 = s1();
        let base = s1.compute_gaps(DEFAULT_BUDGET).unwrap();
        let c = med_construct(&s1, s1.ray_elements()).unwrap();
        let computed = c.semigroup.compute_gaps(DEFAULT_BUDGET).unwrap();
        assert_eq!(c.gap_representation(&base).unwrap(), computed);
        assert_eq!(computed.genus(), base.genus() + c.context.apery().len() - 1);
        assert!(is_med_definition(&c.semigroup).unwrap().is_med);
        // msg(T) = M ⊔ (∩ Ap(T, mᵢ) ∖ {0}).
        let ctx_t = AperyContext::new(&c.semigroup, c.context.m()).unwrap();
        let mut expected: Vec<Point> = c.context.m().iter().chain(ctx_t.apery().iter().filter(|x| !x.is_zero())).cloned().collect();
        expected.sort();
        assert_eq!(c.minimal_generators(), &expected[..]);
    }

    #[test]
    fn construction_over_orthant() {
        let n2 = n2();
        let c = med_construct(&n2, n2.ray_elements()).unwrap();
        assert_eq!(c.minimal_generators(), n2.generators());
        assert!(is_med_definition(&c.semigroup).unwrap().is_med);
    }

    #[test]
    fn decomposition_identity() {
        for s in [s1(), s2(), n2()] {
            let d = decompose(&s).unwrap();
            assert!(d.verify_union(DEFAULT_BOX_GRADE));
            assert!(d.verify_corollary(DEFAULT_BOX_GRADE));
        }
        assert_eq!(decompose(&n2()).unwrap().s0(), &[Point::zero(2)]);
    }

    #[test]
    fn decomposition_s0_is_exact() {
        let s = s2();
        let d = decompose(&s).unwrap();
        let brute: Vec<Point> = enumerate_cone_points(s.cone(), &Grading::standard(2), 60)
            .unwrap()
            .into_iter()
            .filter(|x| s.contains(x) && s.ray_elements().iter().all(|n| x.checked_sub(n).is_none_or(|y| !s.cone().contains(&y))))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(d.s0(), &brute[..]);
    }

    #[test]
    fn type2_on_s2_certified() {
        let v = med_type2_check(&s2(), DEFAULT_BOX_GRADE).unwrap();
        assert_eq!(v, Type2Verdict::Certified { ray_element: pt(&[5, 1]) });
        assert_eq!(v.holds(), Some(true));
    }

    #[test]
    fn type2_on_s1_mixed() {
        // (9,2) only reaches the cone through (5,1), (9,3) only through (6,2).
        let v = med_type2_check(&s1(), DEFAULT_BOX_GRADE).unwrap();
        assert_eq!(v, Type2Verdict::MixedRays);
        assert_eq!(v.holds(), None);
    }

    #[test]
    fn type2_implies_med() {
        for s in [s1(), s2(), n2(), GenSemigroup::new(vec![pt(&[4]), pt(&[5]), pt(&[6])]).unwrap()] {
            if med_type2_check(&s, DEFAULT_BOX_GRADE).unwrap().holds() == Some(true) {
                assert!(is_med_definition(&s).unwrap().is_med);
            }
        }
    }

    /// S₂ is MED but is not `(M + H) ∪ {0}`: (8,2) would need (8,2) - a(5,1) or
    /// (8,2) - b(6,2) in the cone, leaving only (3,1), and (3,1) + (6,2) ∉ S₂.
    #[test]
    fn s2_is_not_a_translate() {
        let s = s2();
        let cone = s.cone();
        let x = pt(&[8, 2]);
        let reachable: Vec<Point> = (1..=10)
            .flat_map(|k| [pt(&[5, 1]).scale(k), pt(&[6, 2]).scale(k)])
            .filter_map(|m| x.checked_sub(&m))
            .filter(|y| cone.contains(y))
            .collect();
        assert_eq!(reachable, vec![pt(&[3, 1])]);
        assert!(!s.contains(&pt(&[3, 1]).add(&pt(&[6, 2]))));
    }
}
