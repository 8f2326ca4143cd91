//! Static SVG line charts: axes, ticks, and polyline traces. Output is a
//! pure function of the data, so identical jobs give identical bytes.

use std::fmt::Write;

const WIDTH: f64 = 960.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 18.0;
const MARGIN_TOP: f64 = 34.0;
const MARGIN_BOTTOM: f64 = 46.0;
/// Paths longer than this are strided down; the plot stays legible and the
/// file bounded even for 500-unit survey windows.
const MAX_PATH_POINTS: usize = 2400;

pub struct Series<'a> {
    pub label: &'a str,
    pub color: &'a str,
    pub points: &'a [(f64, f64)],
}

/// Tick label: plain decimals in a middle range, scientific outside it.
fn tick(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if (1e-3..1e5).contains(&a) {
        let mut s = format!("{x:.3}");
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
        s
    } else {
        format!("{x:.2e}")
    }
}

fn finite_range(values: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values.filter(|v| v.is_finite()) {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo <= hi).then_some((lo, hi))
}

/// One chart panel as an SVG group at vertical offset `y0`.
pub fn panel(
    out: &mut String,
    y0: f64,
    height: f64,
    title: &str,
    y_label: &str,
    series: &[Series],
) {
    let x_range = finite_range(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)))
        .unwrap_or((0.0, 1.0));
    let y_range = finite_range(series.iter().flat_map(|s| s.points.iter().map(|p| p.1)))
        .unwrap_or((0.0, 1.0));
    let (x0, x1) = if x_range.0 < x_range.1 {
        x_range
    } else {
        (x_range.0 - 0.5, x_range.0 + 0.5)
    };
    let (mut y0r, mut y1r) = if y_range.0 < y_range.1 {
        y_range
    } else {
        (y_range.0 - 0.5, y_range.0 + 0.5)
    };
    let pad = 0.05 * (y1r - y0r);
    y0r -= pad;
    y1r += pad;

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = height - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w;
    let py = |y: f64| MARGIN_TOP + (y1r - y) / (y1r - y0r) * plot_h;

    let _ = writeln!(out, r##"<g transform="translate(0,{y0})">"##);
    let _ = writeln!(
        out,
        r##"<rect x="{:.2}" y="{:.2}" width="{plot_w:.2}" height="{plot_h:.2}" fill="none" stroke="#333" stroke-width="1"/>"##,
        MARGIN_LEFT, MARGIN_TOP
    );
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="13" fill="#111">{title}</text>"##,
        MARGIN_LEFT,
        MARGIN_TOP - 12.0
    );
    let _ = writeln!(
        out,
        r##"<text x="12" y="{:.2}" font-family="monospace" font-size="11" fill="#333" transform="rotate(-90 12 {:.2})">{y_label}</text>"##,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    );

    for i in 0..=4 {
        let xv = x0 + (x1 - x0) * i as f64 / 4.0;
        let yv = y0r + (y1r - y0r) * i as f64 / 4.0;
        let _ = writeln!(
            out,
            r##"<line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}" stroke="#bbb" stroke-width="0.5"/>"##,
            px(xv),
            py(y0r),
            py(y1r)
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11" fill="#333" text-anchor="middle">{}</text>"##,
            px(xv),
            MARGIN_TOP + plot_h + 16.0,
            tick(xv)
        );
        let _ = writeln!(
            out,
            r##"<line x1="{1:.2}" y1="{0:.2}" x2="{2:.2}" y2="{0:.2}" stroke="#bbb" stroke-width="0.5"/>"##,
            py(yv),
            px(x0),
            px(x1)
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11" fill="#333" text-anchor="end">{}</text>"##,
            MARGIN_LEFT - 6.0,
            py(yv) + 4.0,
            tick(yv)
        );
    }

    for (k, s) in series.iter().enumerate() {
        let stride = s.points.len().div_ceil(MAX_PATH_POINTS).max(1);
        // Non-finite samples split the trace into separate segments.
        let mut segment: Vec<String> = Vec::new();
        let flush = |seg: &mut Vec<String>, out: &mut String| {
            if seg.len() >= 2 {
                let _ = writeln!(
                    out,
                    r##"<polyline points="{}" fill="none" stroke="{}" stroke-width="1.2"/>"##,
                    seg.join(" "),
                    s.color
                );
            }
            seg.clear();
        };
        for (i, &(x, y)) in s.points.iter().enumerate() {
            if i % stride != 0 && i != s.points.len() - 1 {
                continue;
            }
            if x.is_finite() && y.is_finite() {
                segment.push(format!("{:.2},{:.2}", px(x), py(y)));
            } else {
                flush(&mut segment, out);
            }
        }
        flush(&mut segment, out);
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11" fill="{}">{}</text>"##,
            MARGIN_LEFT + plot_w - 150.0,
            MARGIN_TOP + 16.0 + 14.0 * k as f64,
            s.color,
            s.label
        );
    }
    let _ = writeln!(out, "</g>");
}

pub fn document(panels: impl FnOnce(&mut String), total_height: f64) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{total_height}" viewBox="0 0 {WIDTH} {total_height}">"##
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##);
    panels(&mut out);
    out.push_str("</svg>\n");
    out
}
