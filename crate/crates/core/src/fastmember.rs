//! Membership for simplicial affine semigroups through the Apery core
//! `𝒜 = ∩ᵢ Ap(S, nᵢ)`.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{check_dim, Cone, Point};
use crate::semigroup::{AperyContext, GenSemigroup, Membership};

/// Precomputed data for repeated membership queries.
#[derive(Clone, Debug)]
pub struct FastContext {
    cone: Cone,
    ray_elements: Vec<Point>,
    core: Vec<Point>,
    core_set: HashSet<Point>,
}

/// Result of one query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FastAnswer {
    pub member: bool,
    pub outside_cone: bool,
    /// Ray elements in the order they were processed.
    pub ray_order: Vec<Point>,
    /// Copies of each ray element removed by the descent.
    pub v: Vec<u64>,
    /// Coefficients of the ray elements in a witness `x = remainder + Σ λᵢ nᵢ`.
    pub lambda: Option<Vec<u64>>,
    /// The element of `𝒜` reached.
    pub remainder: Option<Point>,
    /// Whether the descent itself hit `𝒜 ∖ {0}`.
    pub early: bool,
}

impl FastContext {
    /// Rays processed in canonical (lexicographic) order.
    pub fn precompute(s: &GenSemigroup) -> Result<Self> {
        Self::with_ray_order(s, s.ray_elements())
    }

    /// `order` must list the ray elements of `s` in the desired processing order.
    pub fn with_ray_order(s: &GenSemigroup, order: &[Point]) -> Result<Self> {
        s.cone().basis()?;
        let mut sorted = order.to_vec();
        sorted.sort();
        let mut expected = s.ray_elements().to_vec();
        expected.sort();
        if sorted != expected {
            return Err(Error::NotOnRays);
        }
        let ctx = AperyContext::new(s, s.ray_elements())?;
        let core = ctx.apery().to_vec();
        Ok(Self {
            cone: s.cone().clone(),
            ray_elements: order.to_vec(),
            core_set: core.iter().cloned().collect(),
            core,
        })
    }

    /// `𝒜`, including 0, sorted.
    pub fn core(&self) -> &[Point] {
        &self.core
    }

    pub fn ray_elements(&self) -> &[Point] {
        &self.ray_elements
    }

    pub fn fast_member(&self, x: &Point) -> Result<FastAnswer> {
        check_dim(self.cone.dim(), x.dim())?;
        let t = self.ray_elements.len();
        let mut answer = FastAnswer {
            member: false,
            outside_cone: false,
            ray_order: self.ray_elements.clone(),
            v: vec![0; t],
            lambda: None,
            remainder: None,
            early: false,
        };
        if x.is_zero() {
            answer.member = true;
            answer.lambda = Some(vec![0; t]);
            answer.remainder = Some(x.clone());
            return Ok(answer);
        }
        if !self.cone.contains(x) {
            answer.outside_cone = true;
            return Ok(answer);
        }
        let mut y = x.clone();
        for (i, n) in self.ray_elements.iter().enumerate() {
            while let Some(z) = y.checked_sub(n).filter(|z| self.cone.contains(z)) {
                answer.v[i] += 1;
                if !z.is_zero() && self.core_set.contains(&z) {
                    answer.member = true;
                    answer.early = true;
                    answer.lambda = Some(answer.v.clone());
                    answer.remainder = Some(z);
                    return Ok(answer);
                }
                y = z;
            }
        }
        // The remainder may be 0 itself, e.g. for x = nᵢ.
        let hit = answer
            .v
            .iter()
            .map(|&vi| 0..=vi)
            .multi_cartesian_product()
            .find_map(|lambda| {
                let shift = self
                    .ray_elements
                    .iter()
                    .zip(&lambda)
                    .fold(Point::zero(x.dim()), |acc, (n, &l)| acc.add(&n.scale(l as i64)));
                x.checked_sub(&shift)
                    .filter(|r| self.core_set.contains(r))
                    .map(|r| (lambda, r))
            });
        if let Some((lambda, r)) = hit {
            answer.member = true;
            answer.lambda = Some(lambda);
            answer.remainder = Some(r);
        }
        Ok(answer)
    }
}
