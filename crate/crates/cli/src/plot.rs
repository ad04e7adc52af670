//! Normalized bar graphs rendered as standalone SVG.
//!
//! Every graph has the same pixel width and the tallest bar always reaches
//! the full pixel height, so graphs of different degree compare by shape.

use std::fmt::Write as _;

/// Fill colours for regions `0, 1, 2, ...`: red, yellow, green, blue, then
/// further hues for `k > 4`, cycling past the end.
pub const REGION_PALETTE: [&str; 10] = [
    "#d62728", "#f2c12e", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
    "#bcbd22",
];
pub const TRANSITION_COLOR: &str = "#000000";
pub const DEFAULT_BAR_COLOR: &str = "#4878a8";
pub const OVERLAY_COLOR: &str = "#222222";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarColor {
    Region(usize),
    Transition,
}

impl BarColor {
    pub fn fill(self) -> &'static str {
        match self {
            BarColor::Region(r) => REGION_PALETTE[r % REGION_PALETTE.len()],
            BarColor::Transition => TRANSITION_COLOR,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotSpec {
    pub bar_heights: Vec<f64>,
    pub width_px: u32,
    pub height_px: u32,
    /// Points `(x, y)` with `x` in `[0, 1]` across the bar range and `y` in
    /// the same units as `bar_heights`.
    pub overlay: Option<Vec<(f64, f64)>>,
    pub region_colors: Option<Vec<BarColor>>,
    pub title: String,
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders `spec` as SVG. Output depends only on `spec`.
pub fn render_svg(spec: &PlotSpec) -> String {
    let (w, h) = (spec.width_px as f64, spec.height_px as f64);
    let count = spec.bar_heights.len().max(1) as f64;
    let bar_w = w / count;
    let max = spec.bar_heights.iter().cloned().fold(0.0_f64, f64::max);
    let scale = if max > 0.0 { h / max } else { 0.0 };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        spec.width_px, spec.height_px, spec.width_px, spec.height_px
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(&spec.title));
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##);
    svg.push_str("<g id=\"bars\">\n");
    for (i, &value) in spec.bar_heights.iter().enumerate() {
        let bar_h = value * scale;
        let fill = spec
            .region_colors
            .as_ref()
            .and_then(|c| c.get(i))
            .map_or(DEFAULT_BAR_COLOR, |c| c.fill());
        let _ = writeln!(
            svg,
            r#"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="{fill}"/>"#,
            i as f64 * bar_w,
            h - bar_h,
            bar_w,
            bar_h
        );
    }
    svg.push_str("</g>\n");

    if let Some(curve) = &spec.overlay {
        let points: Vec<String> = curve
            .iter()
            .map(|&(x, y)| {
                let px = (x * (count - 1.0) + 0.5) * bar_w;
                format!("{:.3},{:.3}", px, h - y * scale)
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{OVERLAY_COLOR}" stroke-width="2" points="{}"/>"#,
            points.join(" ")
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Bar heights `f(0), ..., f(last)` for the two-branch quasipolynomial
/// `f(x) = 10x` for even `x` and `(x^2 - x) / 2` for odd `x`. Its even and
/// odd bars follow different curves and do not blend into one shape.
pub fn nonsmooth_demo_heights(last: u32) -> Vec<f64> {
    (0..=last)
        .map(|x| {
            let x = x as f64;
            if x as u64 % 2 == 0 {
                10.0 * x
            } else {
                (x * x - x) / 2.0
            }
        })
        .collect()
}
