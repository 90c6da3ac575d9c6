//! SVG output of a planar level set.

use std::fmt::Write as _;

use crate::error::{domain, Result};
use crate::geometry::{corner_intersection, step_sizes, CornerRegion, HoleRegion, SymbolWord};

use super::holes::is_radial;
use super::level::LevelSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// Pixel width of the image.
    pub width: u32,
    pub background: String,
    pub outline: String,
    pub fill: String,
    /// Fill for the radial holes `f_i^k(H_0)`, `k < n`; not drawn when `None`.
    pub radial_hole_fill: Option<String>,
    /// Fill for the pairwise overlaps `f_i(Δ) ∩ f_j(Δ)`; not drawn when `None`.
    pub overlap_fill: Option<String>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 800,
            background: "#ffffff".into(),
            outline: "#000000".into(),
            fill: "#303030".into(),
            radial_hole_fill: None,
            overlap_fill: None,
        }
    }
}

/// Vertices `p_k = (2/3)(cos 2πk/3, sin 2πk/3)` of the triangle.
fn vertex(k: usize) -> (f64, f64) {
    let a = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
    (2.0 / 3.0 * a.cos(), 2.0 / 3.0 * a.sin())
}

fn to_plane(x: &[f64]) -> (f64, f64) {
    (0..3).fold((0.0, 0.0), |(px, py), k| {
        let (vx, vy) = vertex(k);
        (px + x[k] * vx, py + x[k] * vy)
    })
}

fn path(out: &mut String, pts: &[Vec<f64>]) {
    out.push_str("<path d=\"");
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = to_plane(p);
        let cmd = if i == 0 { 'M' } else { 'L' };
        // the SVG y axis points down
        let _ = write!(out, "{cmd}{:.6} {:.6} ", x, -y);
    }
    out.push_str("Z\"/>\n");
}

/// SVG document showing the regions of the level set on the outline of `Δ`.
pub fn render_svg(level: &LevelSet, options: &RenderOptions) -> Result<String> {
    if level.d != 2 {
        return domain("rendering is implemented for d = 2");
    }
    let lambda = &level.lambda;
    let (x0, x1) = (-1.0 / 3.0 - 0.05, 2.0 / 3.0 + 0.05);
    let (y0, y1) = (-(3f64.sqrt()) / 3.0 - 0.05, 3f64.sqrt() / 3.0 + 0.05);
    let height = (options.width as f64 * (y1 - y0) / (x1 - x0)).round() as u32;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(out, "<!-- gasket {} -->", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        options.width,
        height,
        x0,
        y0,
        x1 - x0,
        y1 - y0
    );
    let _ = writeln!(out, "<title>lambda = {}, level {}</title>", lambda, level.level);
    let _ = writeln!(
        out,
        "<rect x=\"{:.6}\" y=\"{:.6}\" width=\"{:.6}\" height=\"{:.6}\" fill=\"{}\"/>",
        x0,
        y0,
        x1 - x0,
        y1 - y0,
        options.background
    );
    let _ = writeln!(
        out,
        "<g fill=\"{}\" fill-rule=\"nonzero\" stroke=\"none\">",
        options.fill
    );
    for r in &level.regions {
        path(&mut out, &r.vertices_approx(lambda));
    }
    out.push_str("</g>\n");
    if let Some(color) = &options.overlap_fill {
        let _ = writeln!(out, "<g fill=\"{color}\" fill-opacity=\"0.5\" stroke=\"none\">");
        let firsts: Vec<CornerRegion> = (0..3u8)
            .map(|i| crate::geometry::image_region(&SymbolWord::new(vec![i], 2).unwrap(), lambda))
            .collect();
        for i in 0..3 {
            for j in i + 1..3 {
                if let Some(lower) = corner_intersection(&firsts[i], &firsts[j], lambda)? {
                    let base: Vec<f64> = lower.iter().map(|x| x.approx()).collect();
                    let side = 1.0 - base.iter().sum::<f64>();
                    let pts: Vec<Vec<f64>> = (0..3)
                        .map(|t| {
                            let mut v = base.clone();
                            v[t] += side;
                            v
                        })
                        .collect();
                    path(&mut out, &pts);
                }
            }
        }
        out.push_str("</g>\n");
    }
    if let Some(color) = &options.radial_hole_fill {
        let _ = writeln!(out, "<g fill=\"{color}\" stroke=\"none\">");
        let steps = step_sizes(lambda, level.level);
        for k in 0..level.level {
            for i in 0..3u8 {
                let w = SymbolWord::repeat(i, k, 2)?;
                debug_assert!(is_radial(&w));
                let r = crate::geometry::image_region(&w, lambda);
                let h = HoleRegion::from_corner(&r, &steps[k], lambda);
                if !h.is_empty(lambda)? {
                    path(&mut out, &h.vertices_approx());
                }
                if k == 0 {
                    break;
                }
            }
        }
        out.push_str("</g>\n");
    }
    let outline: Vec<Vec<f64>> = (0..3)
        .map(|k| (0..3).map(|t| f64::from(u8::from(t == k))).collect())
        .collect();
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"{}\" stroke-width=\"0.002\">",
        options.outline
    );
    path(&mut out, &outline);
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::ExactReal;
    use crate::attractor::level::{build_level, Limits};

    #[test]
    fn one_path_per_region() {
        let h = ExactReal::ratio(1, 2);
        let lv = build_level(&h, 2, 3, Limits::default()).unwrap();
        let svg = render_svg(&lv, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 27 + 1);
        assert!(svg.contains("fill-rule=\"nonzero\""));
        assert!(svg.starts_with("<?xml"));
    }

    #[test]
    fn output_is_deterministic() {
        let l = ExactReal::ratio(13, 20);
        let lv = build_level(&l, 2, 4, Limits::default()).unwrap();
        let opts = RenderOptions {
            radial_hole_fill: Some("#c00000".into()),
            overlap_fill: Some("#0000c0".into()),
            ..RenderOptions::default()
        };
        let a = render_svg(&lv, &opts).unwrap();
        let b = render_svg(&lv, &opts).unwrap();
        assert_eq!(a, b);
        // 81 regions, 3 overlaps, 1 + 3·3 radial holes, 1 outline
        assert_eq!(a.matches("<path").count(), 81 + 3 + 10 + 1);
    }

    #[test]
    fn vertices_on_circumcircle() {
        for k in 0..3 {
            let (x, y) = vertex(k);
            assert!(((x * x + y * y).sqrt() - 2.0 / 3.0).abs() < 1e-15);
        }
    }
}
