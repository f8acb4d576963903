use std::fmt::Write;

use crate::error::{Error, Result};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 55.0;
const TICKS: usize = 5;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// One named polyline in data coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<[f64; 2]>,
}

impl Series {
    pub fn new(name: impl Into<String>, points: Vec<[f64; 2]>) -> Self {
        Self {
            name: name.into(),
            points,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axes {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    /// Same scale on both axes (for planar traces).
    pub equal_aspect: bool,
}

impl Axes {
    pub fn new(
        title: impl Into<String>,
        x_label: impl Into<String>,
        y_label: impl Into<String>,
    ) -> Self {
        Self {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            equal_aspect: false,
        }
    }

    pub fn equal(mut self) -> Self {
        self.equal_aspect = true;
        self
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn tick_label(x: f64) -> String {
    let s = format!("{:.4}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".into()
    } else {
        s.into()
    }
}

#[derive(Debug, Clone, Copy)]
struct Range {
    lo: f64,
    hi: f64,
}

impl Range {
    fn of(values: impl Iterator<Item = f64>) -> Self {
        let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
            (a.min(v), b.max(v))
        });
        if hi - lo > 1e-12 * lo.abs().max(hi.abs()).max(1.0) {
            Range { lo, hi }
        } else {
            let pad = 0.5 * lo.abs().max(1.0);
            Range {
                lo: lo - pad,
                hi: hi + pad,
            }
        }
    }

    fn span(&self) -> f64 {
        self.hi - self.lo
    }

    fn widen(&self, span: f64) -> Self {
        let mid = 0.5 * (self.lo + self.hi);
        Range {
            lo: mid - 0.5 * span,
            hi: mid + 0.5 * span,
        }
    }
}

/// Renders the series as an SVG line chart. Output depends only on the
/// inputs, so identical calls produce identical bytes.
pub fn render_svg(series: &[Series], axes: &Axes) -> Result<String> {
    if series.is_empty() {
        return Err(Error::InvalidInput("nothing to plot".into()));
    }
    for s in series {
        if s.points.is_empty() {
            return Err(Error::InvalidInput(format!(
                "series `{}` has no points",
                s.name
            )));
        }
        if s.points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "series `{}` has non-finite points",
                s.name
            )));
        }
    }
    let all = || series.iter().flat_map(|s| s.points.iter());
    let mut xr = Range::of(all().map(|p| p[0]));
    let mut yr = Range::of(all().map(|p| p[1]));
    let pw = WIDTH - LEFT - RIGHT;
    let ph = HEIGHT - TOP - BOTTOM;
    if axes.equal_aspect {
        let scale = (xr.span() / pw).max(yr.span() / ph);
        xr = xr.widen(scale * pw);
        yr = yr.widen(scale * ph);
    }
    let sx = |x: f64| LEFT + (x - xr.lo) / xr.span() * pw;
    let sy = |y: f64| TOP + ph - (y - yr.lo) / yr.span() * ph;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#,
        w = WIDTH,
        h = HEIGHT
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
        num(WIDTH / 2.0),
        escape(&axes.title)
    )
    .unwrap();

    // Grid and tick labels.
    for i in 0..=TICKS {
        let f = i as f64 / TICKS as f64;
        let xv = xr.lo + f * xr.span();
        let yv = yr.lo + f * yr.span();
        let (x, y) = (sx(xv), sy(yv));
        writeln!(
            out,
            r##"<line x1="{x}" y1="{t}" x2="{x}" y2="{b}" stroke="#ddd"/>"##,
            x = num(x),
            t = num(TOP),
            b = num(TOP + ph)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            num(x),
            num(TOP + ph + 16.0),
            tick_label(xv)
        )
        .unwrap();
        writeln!(
            out,
            r##"<line x1="{l}" y1="{y}" x2="{r}" y2="{y}" stroke="#ddd"/>"##,
            y = num(y),
            l = num(LEFT),
            r = num(LEFT + pw)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            num(LEFT - 6.0),
            num(y + 4.0),
            tick_label(yv)
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        num(LEFT),
        num(TOP),
        num(pw),
        num(ph)
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        num(LEFT + pw / 2.0),
        num(HEIGHT - 14.0),
        escape(&axes.x_label)
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="16" y="{y}" text-anchor="middle" transform="rotate(-90 16 {y})">{}</text>"#,
        escape(&axes.y_label),
        y = num(TOP + ph / 2.0)
    )
    .unwrap();

    for (i, s) in series.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|p| format!("{},{}", num(sx(p[0])), num(sy(p[1]))))
            .collect();
        writeln!(
            out,
            r#"<polyline fill="none" stroke="{colour}" stroke-width="2" points="{}"/>"#,
            pts.join(" ")
        )
        .unwrap();
        let ly = TOP + 14.0 + 16.0 * i as f64;
        let lx = LEFT + pw - 130.0;
        writeln!(
            out,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="{colour}" stroke-width="2"/>"#,
            num(lx),
            num(lx + 20.0),
            y = num(ly)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}">{}</text>"#,
            num(lx + 26.0),
            num(ly + 4.0),
            escape(&s.name)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
