//! Brute-force oracles that share no code with the library's own searches.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use affine_semigroup::lattice::{pt, Point};
use affine_semigroup::semigroup::{GapSemigroup, GenSemigroup, Membership};

pub fn points(coords: &[[i64; 2]]) -> Vec<Point> {
    coords.iter().map(|c| pt(c)).collect()
}

pub const S1_GENS: [[i64; 2]; 8] = [[5, 1], [6, 2], [9, 2], [9, 3], [10, 3], [12, 3], [13, 4], [13, 3]];
pub const S2_GENS: [[i64; 2]; 5] = [[5, 1], [6, 2], [8, 2], [9, 2], [12, 3]];

pub fn s1() -> GenSemigroup {
    GenSemigroup::new(points(&S1_GENS)).unwrap()
}

pub fn s2() -> GenSemigroup {
    GenSemigroup::new(points(&S2_GENS)).unwrap()
}

pub fn n2() -> GenSemigroup {
    GenSemigroup::new(points(&[[1, 0], [0, 1]])).unwrap()
}

pub fn s1_gaps() -> GapSemigroup {
    s1().compute_gaps(512).unwrap()
}

/// Membership in the monoid generated by `gens`, by memoized descent over
/// componentwise-smaller points.
pub struct Dp {
    gens: Vec<Vec<i64>>,
    memo: HashMap<Vec<i64>, bool>,
}

impl Dp {
    pub fn new(gens: &[Point]) -> Self {
        Self { gens: gens.iter().map(|g| g.coords().to_vec()).collect(), memo: HashMap::new() }
    }

    pub fn contains(&mut self, x: &[i64]) -> bool {
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if let Some(&b) = self.memo.get(x) {
            return b;
        }
        let mut found = false;
        for i in 0..self.gens.len() {
            let g = self.gens[i].clone();
            if g.iter().zip(x).all(|(a, b)| a <= b) {
                let y: Vec<i64> = x.iter().zip(&g).map(|(a, b)| a - b).collect();
                if self.contains(&y) {
                    found = true;
                    break;
                }
            }
        }
        self.memo.insert(x.to_vec(), found);
        found
    }
}

/// Points of `[0, w] × [0, h]` lying in the cone of `s`.
pub fn box_points<S: Membership + ?Sized>(s: &S, w: i64, h: i64) -> Vec<Point> {
    (0..=w)
        .flat_map(|x| (0..=h).map(move |y| pt(&[x, y])))
        .filter(|p| s.cone().contains(p))
        .collect()
}

/// Planar points of total degree at most `g`.
pub fn graded_points(g: i64) -> Vec<Point> {
    (0..=g).flat_map(|x| (0..=g - x).map(move |y| pt(&[x, y]))).collect()
}

/// `{y ∈ S ∖ {0} : y ≤ g}` under total degree, from the DP oracle.
pub fn elements_up_to(gens: &[Point], g: i64) -> Vec<Point> {
    let mut dp = Dp::new(gens);
    graded_points(g).into_iter().filter(|p| !p.is_zero() && dp.contains(p)).collect()
}

/// All k-subsets of `items`.
pub fn subsets_of_size<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Whether `H(S) ∪ Y` is the gap set of an I(S)-semigroup: `Y ⊆ S ∖ {0}` and
/// no `y ∈ Y` equals `x + n` with `x ∈ S ∖ ({0} ∪ Y)` and `n` a generator.
pub fn is_ideal_complement(s: &GapSemigroup, y: &BTreeSet<Point>) -> bool {
    y.iter().all(|h| {
        !h.is_zero()
            && s.contains(h)
            && s.minimal_generators().iter().all(|n| match h.checked_sub(n) {
                Some(x) => x.is_zero() || !s.contains(&x) || y.contains(&x),
                None => true,
            })
    })
}
