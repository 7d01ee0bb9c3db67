//! JSON semigroup files and textual point lists.
//!
//! A file is either `{"p": 2, "generators": [[5,1], ...]}` or
//! `{"p": 2, "rays": [[3,1],[5,1]], "gaps": [[3,1], ...]}`, optionally with
//! `"order": "deglex" | "degrevlex" | "lex"` and `"priority": [1, 0]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Cone, MonomialOrder, OrderKind, Point};
use crate::semigroup::{GapSemigroup, GenSemigroup, Membership};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rays: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gaps: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<OrderKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    priority: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    Generated(GenSemigroup),
    Gaps(GapSemigroup),
}

/// A validated semigroup description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupFile {
    pub semigroup: Representation,
    pub order: Option<MonomialOrder>,
}

fn to_points(p: usize, raw: Vec<Vec<i64>>) -> Result<Vec<Point>> {
    raw.into_iter()
        .map(|c| {
            if c.len() != p {
                return Err(Error::DimensionMismatch { expected: p, found: c.len() });
            }
            Point::new(c)
        })
        .collect()
}

impl SemigroupFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.p == 0 {
            return Err(Error::ZeroDimension);
        }
        let order = match (raw.order, raw.priority) {
            (None, None) => None,
            (None, Some(_)) => return Err(Error::InvalidOrder("priority given without an order".into())),
            (Some(kind), None) => Some(MonomialOrder::with_priority(kind, Vec::new())?),
            (Some(kind), Some(pr)) => {
                if pr.len() != raw.p {
                    return Err(Error::InvalidOrder(format!("priority must list all {} coordinates", raw.p)));
                }
                Some(MonomialOrder::with_priority(kind, pr)?)
            }
        };
        let semigroup = match (raw.generators, raw.rays, raw.gaps) {
            (Some(g), None, None) => {
                if g.is_empty() {
                    return Err(Error::EmptyInput("generators"));
                }
                Representation::Generated(GenSemigroup::new(to_points(raw.p, g)?)?)
            }
            (None, Some(r), Some(g)) => {
                if r.is_empty() {
                    return Err(Error::EmptyInput("rays"));
                }
                let cone = Cone::from_rays(&to_points(raw.p, r)?)?;
                Representation::Gaps(GapSemigroup::new(cone, to_points(raw.p, g)?)?)
            }
            _ => {
                return Err(Error::Parse(
                    "exactly one of \"generators\" or \"rays\" together with \"gaps\" is required".into(),
                ))
            }
        };
        Ok(Self { semigroup, order })
    }

    pub fn to_json(&self) -> String {
        let coords = |v: &[Point]| v.iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>();
        let mut raw = RawFile { p: 0, generators: None, rays: None, gaps: None, order: None, priority: None };
        match &self.semigroup {
            Representation::Generated(s) => {
                raw.p = s.dim();
                raw.generators = Some(coords(s.generators()));
            }
            Representation::Gaps(s) => {
                raw.p = s.dim();
                raw.rays = Some(coords(s.cone().rays()));
                raw.gaps = Some(coords(s.gaps()));
            }
        }
        if let Some(o) = &self.order {
            raw.order = Some(o.kind());
            if !o.priority().is_empty() {
                raw.priority = Some(o.priority().to_vec());
            }
        }
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }

    pub fn dim(&self) -> usize {
        match &self.semigroup {
            Representation::Generated(s) => s.dim(),
            Representation::Gaps(s) => s.dim(),
        }
    }

    /// The order named in the file, or deglex.
    pub fn order_or_default(&self) -> MonomialOrder {
        self.order.clone().unwrap_or_else(MonomialOrder::deglex)
    }

    pub fn generated(&self) -> GenSemigroup {
        match &self.semigroup {
            Representation::Generated(s) => s.clone(),
            Representation::Gaps(s) => s.to_generated(),
        }
    }

    /// The gap representation, computed within `budget` when the file lists generators.
    pub fn gap_semigroup(&self, budget: u64) -> Result<GapSemigroup> {
        match &self.semigroup {
            Representation::Generated(s) => s.compute_gaps(budget),
            Representation::Gaps(s) => Ok(s.clone()),
        }
    }
}

/// Parses `"31,8"`, also accepting surrounding parentheses or brackets.
pub fn parse_point(text: &str) -> Result<Point> {
    let t = text.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
        .unwrap_or(t);
    if t.trim().is_empty() {
        return Err(Error::EmptyInput("point"));
    }
    let coords = t
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad coordinate {c:?}: {e}"))))
        .collect::<Result<Vec<i64>>>()?;
    Point::new(coords)
}

/// Parses a `;`-separated list such as `"10,2;6,2"`; all points must share a dimension.
pub fn parse_point_list(text: &str) -> Result<Vec<Point>> {
    let pts = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_point)
        .collect::<Result<Vec<Point>>>()?;
    let first = pts.first().ok_or(Error::EmptyInput("point list"))?;
    if let Some(bad) = pts.iter().find(|x| x.dim() != first.dim()) {
        return Err(Error::DimensionMismatch { expected: first.dim(), found: bad.dim() });
    }
    Ok(pts)
}
