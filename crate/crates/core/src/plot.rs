//! Diagrams of planar semigroups: filled circles for elements, empty circles
//! for gaps, and the extremal rays of the cone.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lattice::{pt, Point};
use crate::semigroup::Membership;

const UNIT: i64 = 20;
const MARGIN: i64 = 30;
const RADIUS: i64 = 5;

/// Inclusive lattice window `[x_min, x_max] × [y_min, y_max]`; empty when a
/// minimum exceeds its maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlotWindow {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl PlotWindow {
    pub fn new(x_min: i64, x_max: i64, y_min: i64, y_max: i64) -> Self {
        Self { x_min, x_max, y_min, y_max }
    }

    /// `[0, w] × [0, h]`.
    pub fn origin(w: i64, h: i64) -> Self {
        Self::new(0, w, 0, h)
    }

    /// A window from the origin reaching well past the given ray multiplicities.
    pub fn around(ray_elements: &[Point]) -> Self {
        let span = 2 * ray_elements.iter().map(Point::degree).sum::<i64>();
        let x = ray_elements.iter().map(|n| n[0]).max().unwrap_or(0).max(1);
        let y = ray_elements.iter().map(|n| n[1]).max().unwrap_or(0).max(1);
        let k = (span / x.max(y)).max(2);
        Self::origin(x * k, y * k)
    }

    pub fn is_empty(&self) -> bool {
        self.x_min > self.x_max || self.y_min > self.y_max
    }

    fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.y_min..=self.y_max)
            .rev()
            .flat_map(move |y| (self.x_min..=self.x_max).map(move |x| (x, y)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Element,
    Gap,
    Outside,
}

fn classify<S: Membership + ?Sized>(s: &S, x: i64, y: i64) -> Cell {
    if x < 0 || y < 0 {
        return Cell::Outside;
    }
    let p = pt(&[x, y]);
    if !s.cone().contains(&p) {
        Cell::Outside
    } else if s.contains(&p) {
        Cell::Element
    } else {
        Cell::Gap
    }
}

fn check_planar<S: Membership + ?Sized>(s: &S) -> Result<()> {
    match s.cone().dim() {
        2 => Ok(()),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// An SVG 1.1 document; identical input gives identical bytes.
pub fn plot_svg<S: Membership + ?Sized>(s: &S, window: &PlotWindow) -> Result<String> {
    check_planar(s)?;
    let (w, h) = if window.is_empty() {
        (0, 0)
    } else {
        (window.x_max - window.x_min, window.y_max - window.y_min)
    };
    let width = w * UNIT + 2 * MARGIN;
    let height = h * UNIT + 2 * MARGIN;
    let px = |x: i64| MARGIN + (x - window.x_min) * UNIT;
    let py = |y: i64| MARGIN + (window.y_max - y) * UNIT;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);
    let (left, bottom) = (MARGIN, height - MARGIN);
    let _ = writeln!(
        out,
        r#"<g id="axes" stroke="black" stroke-width="1"><line x1="{left}" y1="{bottom}" x2="{}" y2="{bottom}"/><line x1="{left}" y1="{bottom}" x2="{left}" y2="{}"/></g>"#,
        width - MARGIN / 2,
        MARGIN / 2
    );
    if !window.is_empty() {
        let _ = writeln!(out, r#"<g id="labels" font-family="sans-serif" font-size="10" text-anchor="middle">"#);
        for x in (window.x_min..=window.x_max).filter(|x| x % 5 == 0) {
            let _ = writeln!(out, r#"<text x="{}" y="{}">{x}</text>"#, px(x), bottom + 15);
        }
        for y in (window.y_min..=window.y_max).filter(|y| y % 5 == 0) {
            let _ = writeln!(out, r#"<text x="{}" y="{}">{y}</text>"#, left - 15, py(y) + 4);
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r#"<g id="rays" stroke="gray" stroke-width="1" stroke-dasharray="4 2">"#);
        for r in s.cone().rays() {
            // Last multiple of the ray inside the window.
            let k = [(r[0], window.x_max), (r[1], window.y_max)]
                .iter()
                .filter(|(d, _)| *d > 0)
                .map(|(d, m)| m / d)
                .min()
                .unwrap_or(0);
            if k > 0 && window.x_min <= 0 && window.y_min <= 0 {
                let _ = writeln!(
                    out,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    px(0),
                    py(0),
                    px(k * r[0]),
                    py(k * r[1])
                );
            }
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r#"<g id="points" stroke="red" stroke-width="1.5">"#);
        for (x, y) in window.points() {
            match classify(s, x, y) {
                Cell::Element => {
                    let _ = writeln!(out, r#"<circle class="element" cx="{}" cy="{}" r="{RADIUS}" fill="red"/>"#, px(x), py(y));
                }
                Cell::Gap => {
                    let _ = writeln!(out, r#"<circle class="gap" cx="{}" cy="{}" r="{RADIUS}" fill="white"/>"#, px(x), py(y));
                }
                Cell::Outside => {}
            }
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

/// One text row per `y`, top row first: `*` element, `o` gap, `.` outside the cone.
pub fn plot_ascii<S: Membership + ?Sized>(s: &S, window: &PlotWindow) -> Result<String> {
    check_planar(s)?;
    let mut out = String::new();
    if window.is_empty() {
        return Ok(out);
    }
    for y in (window.y_min..=window.y_max).rev() {
        for x in window.x_min..=window.x_max {
            out.push(match classify(s, x, y) {
                Cell::Element => '*',
                Cell::Gap => 'o',
                Cell::Outside => '.',
            });
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;
    use crate::lattice::Cone;
    use crate::semigroup::GapSemigroup;

    #[test]
    fn ascii_of_s1() {
        let art = plot_ascii(&s1_gaps(), &PlotWindow::origin(10, 2)).unwrap();
        assert_eq!(art, "......*oo**\n...oo*.....\n*..........\n");
    }

    #[test]
    fn svg_marks_points() {
        let s = s1_gaps();
        let svg = plot_svg(&s, &PlotWindow::origin(25, 6)).unwrap();
        let gaps = svg.matches(r#"class="gap""#).count();
        assert_eq!(gaps, 4);
        assert_eq!(svg.matches(r#"class="element""#).count(), 1 + svg_elements(&s, 25, 6));
        assert_eq!(svg, plot_svg(&s, &PlotWindow::origin(25, 6)).unwrap());
    }

    fn svg_elements(s: &GapSemigroup, w: i64, h: i64) -> usize {
        (0..=w)
            .flat_map(|x| (0..=h).map(move |y| pt(&[x, y])))
            .filter(|p| !p.is_zero() && s.contains(p))
            .count()
    }

    #[test]
    fn empty_window_has_axes_only() {
        let svg = plot_svg(&s1_gaps(), &PlotWindow::new(1, 0, 0, 5)).unwrap();
        assert!(svg.contains(r#"id="axes""#));
        assert!(!svg.contains("circle"));
        assert_eq!(plot_ascii(&s1_gaps(), &PlotWindow::new(1, 0, 0, 5)).unwrap(), "");
    }

    #[test]
    fn only_planar() {
        let s = GapSemigroup::full_cone(Cone::orthant(3)).unwrap();
        assert_eq!(plot_svg(&s, &PlotWindow::origin(3, 3)).unwrap_err(), Error::UnsupportedDimension(3));
    }
}
