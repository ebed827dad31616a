//! Quiver plot with defect markers as a standalone SVG 1.1 document.

use std::fmt::Write;

use num_complex::Complex64;

use super::grid::FieldGrid;
use crate::defects::{DefectSet, HaloReport, HaloStatus};

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 24.0;
const HALO_COLORS: [&str; 4] = ["#d62728", "#2ca02c", "#1f77b4", "#8c564b"];
const LEFTOVER_COLOR: &str = "#9467bd";
const ZERO_COLOR: &str = "#000000";

struct Frame {
    x_min: f64,
    y_max: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    fn px(&self, z: Complex64) -> (f64, f64) {
        (
            MARGIN + (z.re - self.x_min) * self.scale,
            MARGIN + (self.y_max - z.im) * self.scale,
        )
    }
}

fn halo_color(j: usize) -> &'static str {
    HALO_COLORS[j % HALO_COLORS.len()]
}

fn circle(out: &mut String, f: &Frame, z: Complex64, class: &str, fill: &str, extra: &str) {
    let (x, y) = f.px(z);
    let _ = writeln!(
        out,
        r##"<circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="4.500" fill="{fill}" stroke="#000000" stroke-width="0.800"{extra}/>"##
    );
}

/// Renders arrows for every unclipped-or-clipped sample, white diamonds at
/// poles and filled circles at zeros. With a halo report, halo zeros are
/// colored by the index of their basis defect and unassigned zeros are drawn
/// as leftover. Output bytes depend only on the inputs.
pub fn render_svg(grid: &FieldGrid, defects: &DefectSet, halos: Option<&HaloReport>) -> String {
    let b = grid.bbox;
    let scale = (WIDTH - 2.0 * MARGIN) / b.width();
    let height = b.height() * scale + 2.0 * MARGIN;
    let frame = Frame {
        x_min: b.x_min,
        y_max: b.y_max,
        scale,
        height,
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{height:.3}" viewBox="0 0 {WIDTH:.0} {height:.3}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);

    // arrows, longest one spans ~0.9 of a lattice cell
    let cell = if grid.nx > 1 && grid.ny > 1 {
        (b.width() / (grid.nx - 1) as f64).min(b.height() / (grid.ny - 1) as f64)
    } else {
        0.0
    };
    let vmax = grid.samples.iter().map(|s| s.u.hypot(s.v)).fold(0.0, f64::max);
    let _ = writeln!(
        out,
        r##"<g class="quiver" stroke="#555555" stroke-width="0.900" fill="#555555">"##
    );
    if vmax > 0.0 {
        for s in &grid.samples {
            let mag = s.u.hypot(s.v);
            if mag == 0.0 {
                continue;
            }
            let len = 0.9 * cell * mag / vmax;
            let dir = Complex64::new(s.u, s.v) / mag;
            let tail = Complex64::new(s.x, s.y) - dir * (len / 2.0);
            let head = tail + dir * len;
            let (x1, y1) = frame.px(tail);
            let (x2, y2) = frame.px(head);
            let back = head - dir * (0.3 * len);
            let side = dir * Complex64::new(0.0, 0.15 * len);
            let (lx, ly) = frame.px(back + side);
            let (rx, ry) = frame.px(back - side);
            let class = if s.clipped { "arrow clipped" } else { "arrow" };
            let _ = writeln!(
                out,
                r#"<g class="{class}"><line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/><polygon points="{x2:.3},{y2:.3} {lx:.3},{ly:.3} {rx:.3},{ry:.3}"/></g>"#
            );
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g class="markers">"#);
    for p in &defects.poles {
        let (x, y) = frame.px(p.location);
        let r = 6.0;
        let _ = writeln!(
            out,
            r##"<polygon class="pole" data-order="{}" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3} {:.3},{:.3}" fill="#ffffff" stroke="#000000" stroke-width="1.200"/>"##,
            p.multiplicity,
            x,
            y - r,
            x + r,
            y,
            x,
            y + r,
            x - r,
            y
        );
    }
    match halos {
        Some(report) => {
            for (j, h) in report.halos.iter().enumerate() {
                let class = format!("zero halo halo-{}", j + 1);
                match h.status {
                    HaloStatus::Regular => {
                        for &z in &h.zeros {
                            circle(&mut out, &frame, z, &class, halo_color(j), "");
                        }
                    }
                    HaloStatus::Collapsed => {
                        circle(
                            &mut out,
                            &frame,
                            h.center,
                            &format!("{class} collapsed"),
                            halo_color(j),
                            "",
                        );
                    }
                    HaloStatus::AtInfinity | HaloStatus::Absent => {}
                }
            }
            for &z in &report.leftover {
                circle(&mut out, &frame, z, "zero leftover", LEFTOVER_COLOR, "");
            }
        }
        None => {
            for r in &defects.zeros {
                let extra = format!(r#" data-multiplicity="{}""#, r.multiplicity);
                circle(&mut out, &frame, r.location, "zero", ZERO_COLOR, &extra);
            }
        }
    }
    let _ = writeln!(out, "</g>");

    // unit scale bar in the lower left corner
    let x0 = MARGIN;
    let y0 = frame.height - MARGIN / 2.0;
    let x1 = x0 + scale;
    let _ = writeln!(
        out,
        r##"<g class="scale-bar"><line x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y0:.3}" stroke="#000000" stroke-width="2.000"/><text x="{:.3}" y="{:.3}" font-size="10" text-anchor="middle">1</text></g>"##,
        (x0 + x1) / 2.0,
        y0 - 3.0
    );
    let _ = writeln!(out, "</svg>");
    out
}
