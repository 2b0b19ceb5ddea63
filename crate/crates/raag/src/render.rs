//! SVG rendering of pilings.
//!
//! Each column hangs on a vertical string with its beads stacked bottom to
//! top: `+` beads default to red, `-` beads to blue and `0` beads to grey,
//! with a `+`/`-` glyph on the signed ones. Output is a standalone SVG 1.1
//! document and is byte-for-byte deterministic for a fixed piling and
//! options.

use std::fmt::Write;

use crate::pilings::Piling;
use crate::Error;

/// Rendering parameters. `scale` is the horizontal distance between
/// strings; the whole drawing grows linearly with it.
#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub scale: f64,
    pub plus_colour: String,
    pub zero_colour: String,
    pub minus_colour: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 100.0,
            plus_colour: "red".to_owned(),
            zero_colour: "grey".to_owned(),
            minus_colour: "blue".to_owned(),
        }
    }
}

/// Renders a piling as an SVG document string.
pub fn draw_piling(p: &Piling, opts: &RenderOptions) -> Result<String, Error> {
    let columns = p.columns();
    if columns.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let s = opts.scale;
    let n = columns.len();
    let max_height = columns.iter().map(|c| c.len()).max().unwrap_or(0);

    let width = s * (n as f64 + 1.0);
    let height = s * (0.8 * max_height as f64 + 2.0);
    let baseline = height - s;
    let string_top = baseline - 0.8 * s * max_height as f64 - 0.2 * s;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(
        svg,
        r#"  <rect width="{width:.2}" height="{height:.2}" fill="white"/>"#
    );

    for (i, _) in columns.iter().enumerate() {
        let x = s * (i as f64 + 1.0);
        let _ = writeln!(
            svg,
            r#"  <line x1="{x:.2}" y1="{baseline:.2}" x2="{x:.2}" y2="{string_top:.2}" stroke="black" stroke-width="{:.2}"/>"#,
            0.03 * s
        );
        let _ = writeln!(
            svg,
            r#"  <text x="{x:.2}" y="{:.2}" font-size="{:.2}" text-anchor="middle" dominant-baseline="central" fill="black">a{}</text>"#,
            baseline + 0.5 * s,
            0.4 * s,
            i + 1
        );
    }

    for (i, column) in columns.iter().enumerate() {
        let x = s * (i as f64 + 1.0);
        for (j, &bead) in column.iter().enumerate() {
            let y = baseline - 0.8 * s * j as f64 - 0.4 * s;
            let colour = match bead {
                1 => &opts.plus_colour,
                -1 => &opts.minus_colour,
                _ => &opts.zero_colour,
            };
            let _ = writeln!(
                svg,
                r#"  <circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="{colour}" stroke="black" stroke-width="{:.2}"/>"#,
                0.35 * s,
                0.02 * s
            );
            if bead != 0 {
                let glyph = if bead > 0 { "+" } else { "-" };
                let _ = writeln!(
                    svg,
                    r#"  <text x="{x:.2}" y="{y:.2}" font-size="{:.2}" text-anchor="middle" dominant-baseline="central" fill="black">{glyph}</text>"#,
                    0.5 * s
                );
            }
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
