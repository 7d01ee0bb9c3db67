//! Integer lattice primitives: points of `ℕ^p`, monomial orders, gradings and
//! rational polyhedral cones described by their extremal rays.
//!
//! Coordinates are stored as `i64` and bounded by [`MAX_COORD`] on input, so
//! every sum formed by the algorithms in this crate stays far from overflow.
//! Anything involving division (cone coordinates, basis changes) is computed
//! exactly, with an `i128` fast path that falls back to big integers.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest coordinate accepted from callers.
pub const MAX_COORD: i64 = 1 << 32;

/// Upper bound on the number of basis solves spent deciding extremality when
/// building a cone from generators.
const EXTREMALITY_WORK_LIMIT: usize = 200_000;

/// An element of `ℕ^p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        for &c in &coords {
            if c < 0 {
                return Err(Error::NegativeCoordinate(c));
            }
            if c > MAX_COORD {
                return Err(Error::CoordinateTooLarge(c));
            }
        }
        Ok(Point(coords))
    }

    /// Builds a point from coordinates already known to be valid.
    pub(crate) fn from_raw(coords: Vec<i64>) -> Self {
        debug_assert!(!coords.is_empty() && coords.iter().all(|&c| c >= 0));
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when the difference stays in `ℕ^p`.
    pub fn checked_sub(&self, other: &Point) -> Option<Point> {
        debug_assert_eq!(self.dim(), other.dim());
        let mut out = Vec::with_capacity(self.dim());
        for (a, b) in self.0.iter().zip(&other.0) {
            let d = a - b;
            if d < 0 {
                return None;
            }
            out.push(d);
        }
        Some(Point(out))
    }

    pub fn scale(&self, k: i64) -> Point {
        debug_assert!(k >= 0);
        Point(self.0.iter().map(|c| c * k).collect())
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Coordinate sum.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The primitive vector on the same ray (coordinates divided by their gcd).
    pub fn primitive(&self) -> Point {
        let g = self.0.iter().fold(0i64, |g, &c| g.gcd(&c));
        if g <= 1 {
            return self.clone();
        }
        Point(self.0.iter().map(|c| c / g).collect())
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl TryFrom<Vec<i64>> for Point {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Point::new(v)
    }
}

impl From<Point> for Vec<i64> {
    fn from(p: Point) -> Self {
        p.0
    }
}

impl std::ops::Deref for Point {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shorthand used heavily in tests and fixtures.
///
/// # Panics
/// If the coordinates are not a valid point.
pub fn pt(coords: &[i64]) -> Point {
    Point::new(coords.to_vec()).expect("valid point literal")
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

/// A monomial order on `ℕ^p`. `priority` lists coordinate indices from most
/// to least significant; an empty list means the natural order `0, 1, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        Self { kind: OrderKind::Lex, priority: Vec::new() }
    }

    pub fn deglex() -> Self {
        Self { kind: OrderKind::DegLex, priority: Vec::new() }
    }

    pub fn degrevlex() -> Self {
        Self { kind: OrderKind::DegRevLex, priority: Vec::new() }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= priority.len() || seen[i] {
                return Err(Error::InvalidOrder(format!(
                    "priority {priority:?} is not a permutation of 0..{}",
                    priority.len()
                )));
            }
            seen[i] = true;
        }
        let identity = priority.iter().enumerate().all(|(k, &i)| k == i);
        Ok(Self { kind, priority: if identity { Vec::new() } else { priority } })
    }

    /// Checks that the priority (if any) fits dimension `dim`.
    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if !self.priority.is_empty() {
            check_dim(dim, self.priority.len())?;
        }
        Ok(())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self.kind, OrderKind::DegLex | OrderKind::DegRevLex)
    }

    pub fn compare(&self, a: &[i64], b: &[i64]) -> Result<Ordering> {
        check_dim(a.len(), b.len())?;
        if !self.priority.is_empty() {
            check_dim(self.priority.len(), a.len())?;
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; dimensions must agree.
    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        let degree = || a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::DegLex => degree().then_with(|| self.lex_cmp(a, b)),
            OrderKind::DegRevLex => degree().then_with(|| {
                for k in self.indices(a.len()).rev() {
                    match a[k].cmp(&b[k]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex_cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        for k in self.indices(a.len()) {
            match a[k].cmp(&b[k]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn indices(&self, dim: usize) -> Box<dyn DoubleEndedIterator<Item = usize> + '_> {
        if self.priority.is_empty() {
            Box::new(0..dim)
        } else {
            Box::new(self.priority.iter().copied())
        }
    }

    /// `⪯`-maximum of a collection.
    pub fn max<'a, I: IntoIterator<Item = &'a Point>>(&self, points: I) -> Option<&'a Point> {
        points.into_iter().max_by(|a, b| self.cmp(a, b))
    }
}

/// A positive linear functional `w(x) = Σ wᵢ xᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<i64>,
}

impl Grading {
    /// Coordinate sum.
    pub fn standard(dim: usize) -> Self {
        Self { weights: vec![1; dim] }
    }

    pub fn weighted(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if weights.iter().any(|&w| w <= 0 || w > 1 << 16) {
            return Err(Error::InvalidGrading("weights must lie in 1..=65536"));
        }
        Ok(Self { weights })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn grade(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.weights).map(|(c, w)| c * w).sum()
    }

    /// All points of `ℕ^p` of grade exactly `g`, in lexicographic order.
    pub fn points_of_grade(&self, g: i64) -> Vec<Point> {
        let mut out = Vec::new();
        if g < 0 {
            return out;
        }
        let mut current = vec![0i64; self.dim()];
        self.fill(0, g, &mut current, &mut out);
        out
    }

    fn fill(&self, k: usize, remaining: i64, current: &mut Vec<i64>, out: &mut Vec<Point>) {
        let w = self.weights[k];
        if k + 1 == self.dim() {
            if remaining % w == 0 {
                current[k] = remaining / w;
                out.push(Point(current.clone()));
            }
            return;
        }
        for c in 0..=remaining / w {
            current[k] = c;
            self.fill(k + 1, remaining - c * w, current, out);
        }
    }
}

/// Exact rational coordinates of a vector in a lattice basis.
enum Coords {
    Small(Vec<i128>, i128),
    Big(Vec<BigInt>, BigInt),
}

impl Coords {
    fn all_nonneg(&self) -> bool {
        match self {
            Coords::Small(n, _) => n.iter().all(|&c| c >= 0),
            Coords::Big(n, _) => n.iter().all(|c| !c.is_negative()),
        }
    }

    fn floors(&self) -> Vec<BigInt> {
        match self {
            Coords::Small(n, d) => n.iter().map(|c| BigInt::from(c.div_euclid(*d))).collect(),
            Coords::Big(n, d) => n.iter().map(|c| c.div_floor(d)).collect(),
        }
    }

    fn integral(&self) -> Option<Vec<BigInt>> {
        match self {
            Coords::Small(n, d) => n
                .iter()
                .map(|c| (c % d == 0).then(|| BigInt::from(c / d)))
                .collect(),
            Coords::Big(n, d) => n
                .iter()
                .map(|c| c.is_multiple_of(d).then(|| c / d))
                .collect(),
        }
    }

    fn rationals(self) -> Vec<BigRational> {
        match self {
            Coords::Small(n, d) => n
                .into_iter()
                .map(|c| BigRational::new(c.into(), d.into()))
                .collect(),
            Coords::Big(n, d) => n.into_iter().map(|c| BigRational::new(c, d.clone())).collect(),
        }
    }
}

/// A family of linearly independent integer vectors together with the data
/// needed to express any vector of their span in exact coordinates.
#[derive(Clone, Debug)]
pub struct Basis {
    vectors: Vec<Point>,
    /// Coordinates where the square submatrix is invertible.
    pivots: Vec<usize>,
    /// Positive determinant of the pivot submatrix and its adjugate, sign-adjusted.
    det: BigInt,
    adj: Vec<Vec<BigInt>>,
    small: Option<(i128, Vec<Vec<i128>>)>,
}

impl Basis {
    /// Fails with `None` when the vectors are linearly dependent.
    pub fn new(vectors: &[Point]) -> Option<Basis> {
        let t = vectors.len();
        if t == 0 {
            return None;
        }
        let p = vectors[0].dim();
        let (rank, pivots) = rank_and_pivots(vectors, p);
        if rank != t {
            return None;
        }
        // Square matrix with rows indexed by pivot coordinates, columns by vectors.
        let square: Vec<Vec<BigRational>> = pivots
            .iter()
            .map(|&row| {
                vectors
                    .iter()
                    .map(|v| BigRational::from_integer(v[row].into()))
                    .collect()
            })
            .collect();
        let (det, inverse) = invert(square)?;
        let mut det = det.to_integer();
        let mut adj: Vec<Vec<BigInt>> = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        let v = e * BigRational::from_integer(det.clone());
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        if det.is_negative() {
            det = -det;
            for row in &mut adj {
                for e in row.iter_mut() {
                    *e = -e.clone();
                }
            }
        }
        let small = det.to_i128().and_then(|d| {
            let rows: Option<Vec<Vec<i128>>> = adj
                .iter()
                .map(|row| row.iter().map(|e| e.to_i128()).collect())
                .collect();
            rows.map(|r| (d, r))
        });
        Some(Basis { vectors: vectors.to_vec(), pivots, det, adj, small })
    }

    pub fn vectors(&self) -> &[Point] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Absolute value of the pivot determinant (a multiple of the lattice index).
    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    fn coords(&self, x: &[i64]) -> Option<Coords> {
        if let Some(c) = self.small_coords(x) {
            return c;
        }
        let num: Vec<BigInt> = self
            .adj
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.pivots)
                    .map(|(a, &k)| a * BigInt::from(x[k]))
                    .sum()
            })
            .collect();
        for j in 0..x.len() {
            if self.pivots.contains(&j) {
                continue;
            }
            let lhs = &self.det * BigInt::from(x[j]);
            let rhs: BigInt = self
                .vectors
                .iter()
                .zip(&num)
                .map(|(v, c)| BigInt::from(v[j]) * c)
                .sum();
            if lhs != rhs {
                return None;
            }
        }
        Some(Coords::Big(num, self.det.clone()))
    }

    /// `Some(result)` when the computation fits in `i128`.
    fn small_coords(&self, x: &[i64]) -> Option<Option<Coords>> {
        let (det, adj) = self.small.as_ref()?;
        let mut num = Vec::with_capacity(adj.len());
        for row in adj {
            let mut acc: i128 = 0;
            for (a, &k) in row.iter().zip(&self.pivots) {
                acc = acc.checked_add(a.checked_mul(x[k] as i128)?)?;
            }
            num.push(acc);
        }
        for j in 0..x.len() {
            if self.pivots.contains(&j) {
                continue;
            }
            let lhs = det.checked_mul(x[j] as i128)?;
            let mut rhs: i128 = 0;
            for (v, c) in self.vectors.iter().zip(&num) {
                rhs = rhs.checked_add((v[j] as i128).checked_mul(*c)?)?;
            }
            if lhs != rhs {
                return Some(None);
            }
        }
        Some(Some(Coords::Small(num, *det)))
    }

    /// Exact coordinates of `x`, or `None` if `x` is outside the span.
    pub fn coordinates(&self, x: &[i64]) -> Option<Vec<BigRational>> {
        self.coords(x).map(Coords::rationals)
    }

    /// `x` is a non-negative rational combination of the basis.
    pub fn in_cone(&self, x: &[i64]) -> bool {
        self.coords(x).is_some_and(|c| c.all_nonneg())
    }

    /// Componentwise floor of the coordinates of `x`.
    pub fn floor_coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        let c = self.coords(x)?;
        c.floors().into_iter().map(|f| f.to_i64()).collect()
    }

    /// Integer coordinates of `x`, if all of them are integers.
    pub fn integer_coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        let c = self.coords(x)?;
        c.integral()?.into_iter().map(|f| f.to_i64()).collect()
    }
}

fn rank_and_pivots(vectors: &[Point], p: usize) -> (usize, Vec<usize>) {
    let mut rows: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| v.iter().map(|&c| BigRational::from_integer(c.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..p {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let pivot = rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = &rows[i][col] / &pivot;
                for k in col..p {
                    let delta = &factor * &rows[r][k];
                    rows[i][k] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (r, pivots)
}

/// Gauss-Jordan inverse of a square rational matrix with its determinant.
fn invert(mut m: Vec<Vec<BigRational>>) -> Option<(BigRational, Vec<Vec<BigRational>>)> {
    let n = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let sel = (col..n).find(|&i| !m[i][col].is_zero())?;
        if sel != col {
            m.swap(sel, col);
            inv.swap(sel, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for k in 0..n {
            m[col][k] /= &pivot;
            inv[col][k] /= &pivot;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for k in 0..n {
                    let a = &factor * &m[col][k];
                    m[i][k] -= a;
                    let b = &factor * &inv[col][k];
                    inv[i][k] -= b;
                }
            }
        }
    }
    Some((det, inv))
}

/// Rank of a family of integer vectors.
pub fn rank(vectors: &[Point]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => rank_and_pivots(vectors, v.dim()).0,
    }
}

struct ConeInner {
    dim: usize,
    rays: Vec<Point>,
    basis: Option<Basis>,
}

/// A pointed rational cone in `ℝ^p_{≥0}` given by primitive extremal rays,
/// sorted lexicographically. Cheap to clone.
#[derive(Clone)]
pub struct Cone {
    inner: Arc<ConeInner>,
}

/// Result of an exact cone membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeMembership {
    pub contains: bool,
    /// Coordinates in the ray basis whenever the point lies in the span.
    pub coefficients: Option<Vec<BigRational>>,
}

impl Cone {
    /// The cone spanned by a finite set of points.
    pub fn from_generators(points: &[Point]) -> Result<Cone> {
        let first = points.first().ok_or(Error::EmptyInput("generators"))?;
        let dim = first.dim();
        for q in points {
            check_dim(dim, q.dim())?;
        }
        let dirs: Vec<Point> = points
            .iter()
            .filter(|q| !q.is_zero())
            .map(Point::primitive)
            .sorted()
            .dedup()
            .collect();
        if dirs.is_empty() {
            return Err(Error::AllZero);
        }
        // Incremental: the extremal rays of cone(R ∪ {d}) lie in R ∪ {d}, and R stays small.
        let mut work = 0usize;
        let mut rays: Vec<Point> = Vec::new();
        for d in &dirs {
            if in_cone_of(d, &rays, rank(&rays), &mut work)? {
                continue;
            }
            let mut candidate = rays.clone();
            candidate.push(d.clone());
            let r = rank(&candidate);
            let mut kept = Vec::with_capacity(candidate.len());
            for (i, q) in candidate.iter().enumerate() {
                let others: Vec<Point> = candidate
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, o)| o.clone())
                    .collect();
                if !in_cone_of(q, &others, r, &mut work)? {
                    kept.push(q.clone());
                }
            }
            rays = kept;
        }
        rays.sort();
        Ok(Self::assemble(dim, rays))
    }

    /// A cone from explicitly given rays, each checked to be primitive and extremal.
    pub fn from_rays(rays: &[Point]) -> Result<Cone> {
        let first = rays.first().ok_or(Error::EmptyInput("rays"))?;
        let dim = first.dim();
        for r in rays {
            check_dim(dim, r.dim())?;
            if r.is_zero() {
                return Err(Error::InvalidRay { ray: r.clone(), reason: "ray is zero" });
            }
            if r.primitive() != *r {
                return Err(Error::InvalidRay { ray: r.clone(), reason: "ray is not primitive" });
            }
        }
        let sorted: Vec<Point> = rays.iter().cloned().sorted().collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRay { ray: sorted[0].clone(), reason: "duplicate ray" });
        }
        let r = rank(&sorted);
        let mut work = 0usize;
        for (i, d) in sorted.iter().enumerate() {
            let others: Vec<Point> = sorted
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if in_cone_of(d, &others, r, &mut work)? {
                return Err(Error::InvalidRay { ray: d.clone(), reason: "ray is not extremal" });
            }
        }
        Ok(Self::assemble(dim, sorted))
    }

    /// `ℝ^p_{≥0}`, spanned by the unit vectors.
    pub fn orthant(dim: usize) -> Cone {
        let rays = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                Point(v)
            })
            .sorted()
            .collect();
        Self::assemble(dim, rays)
    }

    fn assemble(dim: usize, rays: Vec<Point>) -> Cone {
        let basis = Basis::new(&rays);
        Cone { inner: Arc::new(ConeInner { dim, rays, basis }) }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn rays(&self) -> &[Point] {
        &self.inner.rays
    }

    pub fn is_simplicial(&self) -> bool {
        self.inner.basis.is_some()
    }

    /// The ray basis of a simplicial cone.
    pub fn basis(&self) -> Result<&Basis> {
        self.inner.basis.as_ref().ok_or(Error::UnsupportedCone)
    }

    /// Exact membership together with the coordinates in the ray basis.
    pub fn membership(&self, x: &[i64]) -> Result<ConeMembership> {
        check_dim(self.dim(), x.len())?;
        let basis = self.basis()?;
        let coefficients = basis.coordinates(x);
        let contains = coefficients
            .as_ref()
            .is_some_and(|c| c.iter().all(|a| !a.is_negative()));
        Ok(ConeMembership { contains, coefficients })
    }

    pub fn try_contains(&self, x: &[i64]) -> Result<bool> {
        check_dim(self.dim(), x.len())?;
        Ok(self.basis()?.in_cone(x))
    }

    /// Fast membership test.
    ///
    /// # Panics
    /// If the cone is not simplicial or `x` has the wrong dimension; the
    /// semigroup types only ever call this on validated input.
    pub fn contains(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.dim(), "dimension mismatch in cone membership");
        self.inner
            .basis
            .as_ref()
            .expect("cone membership requires a simplicial cone")
            .in_cone(x)
    }

    /// Index of the extremal ray a non-zero point lies on.
    pub fn ray_index(&self, x: &Point) -> Option<usize> {
        if x.is_zero() || x.dim() != self.dim() {
            return None;
        }
        let dir = x.primitive();
        self.rays().iter().position(|r| *r == dir)
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.dim == other.inner.dim && self.inner.rays == other.inner.rays)
    }
}

impl Eq for Cone {}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cone")
            .field("rays", &self.inner.rays)
            .field("simplicial", &self.is_simplicial())
            .finish()
    }
}

/// Carathéodory: `d` is in the cone of `others` iff it is in the cone of some
/// linearly independent subfamily.
fn in_cone_of(d: &Point, others: &[Point], rank: usize, work: &mut usize) -> Result<bool> {
    for k in 1..=rank.min(others.len()) {
        for subset in others.iter().cloned().combinations(k) {
            *work += 1;
            if *work > EXTREMALITY_WORK_LIMIT {
                return Err(Error::TooLarge("too many generator directions to compute extremal rays".into()));
            }
            if let Some(b) = Basis::new(&subset) {
                if b.in_cone(d) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// All lattice points of a simplicial cone up to `max_grade`, ordered by grade
/// and lexicographically within a grade.
pub fn enumerate_cone_points(cone: &Cone, grading: &Grading, max_grade: i64) -> Result<Vec<Point>> {
    check_dim(cone.dim(), grading.dim())?;
    let basis = cone.basis()?;
    Ok((0..=max_grade)
        .flat_map(|g| grading.points_of_grade(g))
        .filter(|x| basis.in_cone(x))
        .collect())
}

/// Cone points of grade exactly `g`, lexicographically.
pub fn cone_points_of_grade(cone: &Cone, grading: &Grading, g: i64) -> Vec<Point> {
    grading
        .points_of_grade(g)
        .into_iter()
        .filter(|x| cone.contains(x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn running_cone() -> Cone {
        Cone::from_generators(&[pt(&[5, 1]), pt(&[3, 1])]).unwrap()
    }

    #[test]
    fn deglex_examples() {
        let o = MonomialOrder::deglex();
        assert_eq!(o.compare(&[5, 1], &[6, 2]).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&[10, 2], &[9, 3]).unwrap(), Ordering::Greater);
        for o in [MonomialOrder::lex(), MonomialOrder::deglex(), MonomialOrder::degrevlex()] {
            assert_eq!(o.compare(&[0, 0], &[3, 1]).unwrap(), Ordering::Less);
        }
        assert!(o.compare(&[1, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn degree_compatibility_flag() {
        assert!(!MonomialOrder::lex().is_degree_compatible());
        assert!(MonomialOrder::deglex().is_degree_compatible());
        assert!(MonomialOrder::degrevlex().is_degree_compatible());
    }

    #[test]
    fn priority_must_be_permutation() {
        assert!(MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]).is_ok());
        assert!(MonomialOrder::with_priority(OrderKind::Lex, vec![0, 0]).is_err());
        let o = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(o.cmp(&[9, 1], &[1, 2]), Ordering::Less);
    }

    #[test]
    fn cone_of_running_example() {
        let gens: Vec<Point> = [[5, 1], [6, 2], [9, 2], [9, 3], [10, 3], [12, 3], [13, 4], [13, 3]]
            .iter()
            .map(|c| pt(c))
            .collect();
        let cone = Cone::from_generators(&gens).unwrap();
        assert_eq!(cone.rays(), &[pt(&[3, 1]), pt(&[5, 1])]);
        assert!(cone.is_simplicial());
    }

    #[test]
    fn trivial_cones() {
        let c = Cone::from_generators(&[pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert_eq!(c.rays(), &[pt(&[0, 1]), pt(&[1, 0])]);
        let c = Cone::from_generators(&[pt(&[2, 2])]).unwrap();
        assert_eq!(c.rays(), &[pt(&[1, 1])]);
        assert!(c.is_simplicial());
        assert_eq!(Cone::from_generators(&[pt(&[0, 0])]).unwrap_err(), Error::AllZero);
        assert!(Cone::from_generators(&[]).is_err());
    }

    #[test]
    fn non_simplicial_cone_rejected_for_membership() {
        // Square pyramid over (1,0,1),(0,1,1),(-1,0,1)… shifted into the orthant.
        let gens = [[1, 0, 1], [0, 1, 1], [1, 2, 1], [2, 1, 1]].map(|c| pt(&c));
        let c = Cone::from_generators(&gens).unwrap();
        assert_eq!(c.rays().len(), 4);
        assert!(!c.is_simplicial());
        assert_eq!(c.membership(&[1, 1, 1]).unwrap_err(), Error::UnsupportedCone);
    }

    #[test]
    fn from_rays_validation() {
        assert!(Cone::from_rays(&[pt(&[5, 1]), pt(&[3, 1])]).is_ok());
        assert!(Cone::from_rays(&[pt(&[10, 2]), pt(&[3, 1])]).is_err());
        assert!(Cone::from_rays(&[pt(&[5, 1]), pt(&[3, 1]), pt(&[4, 1])]).is_err());
    }

    #[test]
    fn membership_with_coefficients() {
        let c = running_cone();
        let m = c.membership(&[4, 1]).unwrap();
        assert!(m.contains);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(m.coefficients.unwrap(), vec![half.clone(), half]);
        assert!(!c.membership(&[2, 1]).unwrap().contains);
        let z = c.membership(&[0, 0]).unwrap();
        assert!(z.contains);
        assert!(z.coefficients.unwrap().iter().all(|a| a.is_zero()));
        assert!(c.membership(&[1, 2, 3]).is_err());
    }

    #[test]
    fn lower_dimensional_simplicial_cone() {
        let c = Cone::from_generators(&[pt(&[1, 1, 0]), pt(&[2, 2, 0])]).unwrap();
        assert_eq!(c.rays(), &[pt(&[1, 1, 0])]);
        assert!(c.contains(&[3, 3, 0]));
        assert!(!c.contains(&[3, 2, 0]));
        assert!(!c.contains(&[1, 1, 1]));
    }

    #[test]
    fn enumerate_examples() {
        let g = Grading::standard(2);
        let pts = enumerate_cone_points(&running_cone(), &g, 6).unwrap();
        assert_eq!(pts, vec![pt(&[0, 0]), pt(&[3, 1]), pt(&[4, 1]), pt(&[5, 1])]);
        let orth = Cone::orthant(2);
        let pts = enumerate_cone_points(&orth, &g, 1).unwrap();
        assert_eq!(pts, vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0])]);
        assert_eq!(enumerate_cone_points(&orth, &g, 0).unwrap(), vec![pt(&[0, 0])]);
    }

    #[test]
    fn weighted_grading() {
        let g = Grading::weighted(vec![2, 1]).unwrap();
        assert_eq!(g.points_of_grade(3), vec![pt(&[0, 3]), pt(&[1, 1])]);
        assert!(Grading::weighted(vec![0, 1]).is_err());
    }

    #[test]
    fn point_validation() {
        assert!(Point::new(vec![]).is_err());
        assert_eq!(Point::new(vec![1, -1]).unwrap_err(), Error::NegativeCoordinate(-1));
        assert!(Point::new(vec![MAX_COORD + 1]).is_err());
        assert_eq!(pt(&[6, 4]).primitive(), pt(&[3, 2]));
        assert_eq!(pt(&[5, 1]).checked_sub(&pt(&[6, 0])), None);
    }

    /// Independent check of cone membership for the running example: `3y ≤ x ≤ 5y`.
    fn slab_rule(x: i64, y: i64) -> bool {
        3 * y <= x && x <= 5 * y
    }

    #[test]
    fn cone_contains_matches_inequalities() {
        let c = running_cone();
        for x in 0..=30 {
            for y in 0..=30 - x {
                assert_eq!(c.contains(&[x, y]), slab_rule(x, y), "({x},{y})");
            }
        }
    }

    #[test]
    fn enumeration_matches_box_scan() {
        let c = running_cone();
        let g = Grading::standard(2);
        for max in [0, 5, 17, 30] {
            let mut expected: Vec<Point> = (0..=max)
                .flat_map(|x| (0..=max).map(move |y| (x, y)))
                .filter(|&(x, y)| x + y <= max && slab_rule(x, y))
                .map(|(x, y)| pt(&[x, y]))
                .collect();
            expected.sort_by_key(|q| (q.degree(), q.clone()));
            assert_eq!(enumerate_cone_points(&c, &g, max).unwrap(), expected);
        }
    }

    fn arb_point(dim: usize) -> impl Strategy<Value = Point> {
        proptest::collection::vec(0i64..40, dim).prop_map(Point)
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        (0usize..3, any::<bool>()).prop_map(|(k, swap)| {
            let kind = [OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex][k];
            let prio = if swap { vec![2, 0, 1] } else { vec![0, 1, 2] };
            MonomialOrder::with_priority(kind, prio).unwrap()
        })
    }

    proptest! {
        #[test]
        fn order_axioms(o in arb_order(), a in arb_point(3), b in arb_point(3), c in arb_point(3)) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a.add(&c), &b.add(&c)), ab);
            prop_assert_ne!(o.cmp(&Point::zero(3), &c), Ordering::Greater);
            if o.is_degree_compatible() && a.degree() < b.degree() {
                prop_assert_eq!(ab, Ordering::Less);
            }
        }

        #[test]
        fn order_transitive(o in arb_order(), a in arb_point(3), b in arb_point(3), c in arb_point(3)) {
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn rays_are_primitive(gens in proptest::collection::vec(arb_point(3), 1..6)) {
            if let Ok(cone) = Cone::from_generators(&gens) {
                for r in cone.rays() {
                    prop_assert_eq!(r.primitive(), r.clone());
                }
                prop_assert_eq!(cone.is_simplicial(), rank(cone.rays()) == cone.rays().len());
            }
        }
    }
}
