//! Deterministic SVG rendering of polygons and unfolded surfaces.
//!
//! Paired edges are labeled with the same letter (the image edge gets a
//! prime) plus the rotation multiple; unfolded faces are laid out on a
//! ring so the k copies and their gluing labels stay readable. Layout
//! translations do not change the translation structure.

use std::fmt::Write as _;
use std::path::Path;

use super::{KPolygon, TranslationSurface};
use crate::error::Result;

const PALETTE: [&str; 12] = [
    "#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2", "#eeca3b", "#b279a2", "#ff9da6",
    "#9d755d", "#bab0ac", "#638ccc", "#bf8558",
];

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

struct Canvas {
    body: String,
    min: [f64; 2],
    max: [f64; 2],
}

impl Canvas {
    fn new() -> Self {
        Canvas {
            body: String::new(),
            min: [f64::INFINITY; 2],
            max: [f64::NEG_INFINITY; 2],
        }
    }

    fn see(&mut self, p: [f64; 2]) {
        for (axis, &coord) in p.iter().enumerate() {
            self.min[axis] = self.min[axis].min(coord);
            self.max[axis] = self.max[axis].max(coord);
        }
    }

    // SVG's y axis points down; flip so the pictures match the math.
    fn polygon(&mut self, verts: &[[f64; 2]], fill: &str) {
        let mut points = String::new();
        for v in verts {
            self.see(*v);
            let _ = write!(points, "{},{} ", fmt(v[0]), fmt(-v[1]));
        }
        let _ = writeln!(
            self.body,
            r##"  <polygon points="{}" fill="{fill}" fill-opacity="0.35" stroke="#333" stroke-width="0.012"/>"##,
            points.trim_end()
        );
    }

    fn label(&mut self, at: [f64; 2], text: &str, size: f64) {
        self.see(at);
        let _ = writeln!(
            self.body,
            r#"  <text x="{}" y="{}" font-size="{}" font-family="monospace" text-anchor="middle">{}</text>"#,
            fmt(at[0]),
            fmt(-at[1]),
            fmt(size),
            text
        );
    }

    fn finish(self, title: &str) -> String {
        let pad = 0.35;
        let (w, h) = (
            self.max[0] - self.min[0] + 2.0 * pad,
            self.max[1] - self.min[1] + 2.0 * pad,
        );
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n  <title>{title}</title>\n{}</svg>\n",
            fmt(self.min[0] - pad),
            fmt(-self.max[1] - pad),
            fmt(w),
            fmt(h),
            self.body
        )
    }
}

fn edge_midpoint(verts: &[[f64; 2]], e: usize) -> [f64; 2] {
    let n = verts.len();
    let (a, b) = (verts[e], verts[(e + 1) % n]);
    [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0]
}

fn pair_letter(idx: usize) -> char {
    (b'a' + (idx % 26) as u8) as char
}

/// Render a k-differential polygon with labeled side identifications.
pub fn polygon_svg(p: &KPolygon) -> String {
    let verts = p.vertices();
    let mut canvas = Canvas::new();
    canvas.polygon(&verts, PALETTE[0]);
    for (idx, pairing) in p.pairings().iter().enumerate() {
        let letter = pair_letter(idx);
        let note = format!("{letter} (rot {}*2pi/{})", pairing.rotation, p.k());
        canvas.label(edge_midpoint(&verts, pairing.from), &note, 0.09);
        canvas.label(
            edge_midpoint(&verts, pairing.to),
            &format!("{letter}'"),
            0.09,
        );
    }
    canvas.finish(&format!("{}-differential polygon", p.k()))
}

/// Render an unfolded surface: the faces on a ring, paired edges carrying
/// matching labels.
pub fn surface_svg(s: &TranslationSurface) -> String {
    let k = s.faces().len();
    let radius = s
        .faces()
        .iter()
        .flatten()
        .map(|v| (v[0] * v[0] + v[1] * v[1]).sqrt())
        .fold(0.0f64, f64::max);
    let ring = 2.2 * radius.max(1.0);
    let offset = |f: usize| -> [f64; 2] {
        let angle = std::f64::consts::TAU * f as f64 / k as f64;
        [ring * angle.cos(), ring * angle.sin()]
    };
    let placed: Vec<Vec<[f64; 2]>> = s
        .faces()
        .iter()
        .enumerate()
        .map(|(f, verts)| {
            let o = offset(f);
            verts.iter().map(|v| [v[0] + o[0], v[1] + o[1]]).collect()
        })
        .collect();

    let mut canvas = Canvas::new();
    for (f, verts) in placed.iter().enumerate() {
        canvas.polygon(verts, PALETTE[f % PALETTE.len()]);
        let centroid = verts.iter().fold([0.0, 0.0], |acc, v| {
            [acc[0] + v[0] / verts.len() as f64, acc[1] + v[1] / verts.len() as f64]
        });
        canvas.label(centroid, &format!("{f}"), 0.16);
    }
    for (idx, g) in s.gluings().iter().enumerate() {
        let note = format!("{idx}");
        canvas.label(edge_midpoint(&placed[g.from[0]], g.from[1]), &note, 0.08);
        canvas.label(edge_midpoint(&placed[g.to[0]], g.to[1]), &note, 0.08);
    }
    canvas.finish(&format!(
        "translation surface: {k} faces, genus {}",
        s.genus()
    ))
}

/// Write the polygon picture to `path`.
pub fn emit_polygon_svg(p: &KPolygon, path: &Path) -> Result<()> {
    std::fs::write(path, polygon_svg(p))?;
    Ok(())
}

/// Write the unfolded-surface picture to `path`.
pub fn emit_surface_svg(s: &TranslationSurface, path: &Path) -> Result<()> {
    std::fs::write(path, surface_svg(s))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flat::{c10_base, turtle_base, unfold};
    use num_complex::Complex64;

    #[test]
    fn polygon_svg_labels_all_side_pairs() {
        let p = turtle_base(Complex64::new(1.0, 0.3)).unwrap();
        let svg = polygon_svg(&p);
        assert!(svg.starts_with("<svg"));
        for letter in ["a", "b", "c"] {
            assert!(svg.contains(&format!(">{letter} ")), "missing label {letter}");
            assert!(svg.contains(&format!(">{letter}'<")), "missing label {letter}'");
        }
    }

    #[test]
    fn surface_svg_draws_every_face_and_is_deterministic() {
        let s = unfold(&c10_base(), 10).unwrap();
        let svg = surface_svg(&s);
        assert_eq!(svg.matches("<polygon").count(), 10);
        assert_eq!(svg, surface_svg(&s));
    }

    #[test]
    fn emit_writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let p = turtle_base(Complex64::new(1.0, 0.3)).unwrap();
        let path = dir.path().join("turtle.svg");
        emit_polygon_svg(&p, &path).unwrap();
        assert!(path.exists());
        let s = unfold(&p, 4).unwrap();
        let path = dir.path().join("turtle_cover.svg");
        emit_surface_svg(&s, &path).unwrap();
        let written = std::fs::read_to_string(&path).unwrap();
        assert!(written.contains("genus 4"));
    }
}
