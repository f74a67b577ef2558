//! Flat polygonal models of the orbifold-point loci and their unfolded
//! translation-surface covers.
//!
//! Each model is a planar polygon whose sides are identified in pairs by a
//! translation composed with a rotation by a multiple of 2π/k (a
//! k-differential picture). Unfolding takes k rotated copies of the
//! polygon, after which every identification becomes a pure translation,
//! and the result is a genuine translation surface whose genus and cone
//! angles are computed combinatorially from the corner cycles.
//!
//! The four families:
//!
//! - **Turtle** (k = 4): a hexagon with three side pairs rotated by 2π/4,
//!   one corner of angle 2π/4 (the pole) and the remaining five corners
//!   forming a single class of angle 7·2π/4 (the zero). The side `c` is a
//!   free complex parameter.
//! - **Hurricane** (k = 6): a hexagon with corner classes of angles
//!   7·2π/6, 2π/6, 2π/3 and 2π/3; the side `b` is a free complex
//!   parameter.
//! - **C₁₀** (k = 10): the parameter-free quadrilateral with corners
//!   2π/10, 2π/5 and two corners of 7π/10 forming one class of 7·2π/10.
//! - **C₁₂** (k = 12): the parameter-free quadrilateral with corners
//!   2π/12, 2π/3 and two corners of 7π/12 forming one class of 7·2π/12.
//!
//! All four unfold to genus 4 with exactly one cone point of angle 14π,
//! the flat picture of a single zero of order 6.

mod svg;

pub use svg::{emit_polygon_svg, emit_surface_svg, polygon_svg, surface_svg};

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

/// Tolerance for all floating-point geometry assertions.
pub const GEOM_TOL: f64 = 1e-9;

/// One side identification: edge `to` is the image of edge `from` under
/// rotation by 2π·rotation/k followed by a translation (as boundary
/// vectors, e_to = −rot(2π·rotation/k)·e_from).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePairing {
    pub from: usize,
    pub to: usize,
    pub rotation: u32,
}

// exported as the index triple [from, to, rotation]
impl Serialize for EdgePairing {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        (self.from, self.to, self.rotation).serialize(serializer)
    }
}

/// A polygon with rotational side identifications (a k-differential chart).
#[derive(Debug, Clone, Serialize)]
pub struct KPolygon {
    k: u32,
    edges: Vec<[f64; 2]>,
    pairings: Vec<EdgePairing>,
    /// Intended cone angles at the vertex classes, in multiples of 2π/k,
    /// sorted descending.
    cone_spec: Vec<u32>,
}

fn cx(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

fn arr(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn rot(multiple: u32, k: u32) -> Complex64 {
    Complex64::from_polar(1.0, TAU * multiple as f64 / k as f64)
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Whether segments pq and rs share any point (used with non-adjacent
/// polygon edges, where any contact at all makes the polygon non-simple).
fn segments_touch(p: [f64; 2], q: [f64; 2], r: [f64; 2], s: [f64; 2], eps: f64) -> bool {
    let d1 = cross(r, s, p);
    let d2 = cross(r, s, q);
    let d3 = cross(p, q, r);
    let d4 = cross(p, q, s);
    if ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps))
        && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
    {
        return true;
    }
    let on = |a: [f64; 2], b: [f64; 2], c: [f64; 2], d: f64| -> bool {
        d.abs() <= eps
            && c[0] >= a[0].min(b[0]) - eps
            && c[0] <= a[0].max(b[0]) + eps
            && c[1] >= a[1].min(b[1]) - eps
            && c[1] <= a[1].max(b[1]) + eps
    };
    on(r, s, p, d1) || on(r, s, q, d2) || on(p, q, r, d3) || on(p, q, s, d4)
}

fn angle_normalize(a: f64) -> f64 {
    let mut a = a % TAU;
    if a <= -PI {
        a += TAU;
    } else if a > PI {
        a -= TAU;
    }
    a
}

impl KPolygon {
    /// Validate and build a polygon. `cone_spec` lists the intended vertex
    /// class angles in multiples of 2π/k (any order).
    pub fn new(
        k: u32,
        edges: Vec<[f64; 2]>,
        pairings: Vec<EdgePairing>,
        cone_spec: Vec<u32>,
    ) -> Result<Self> {
        let n = edges.len();
        let fail = |msg: String| Err(Error::DegenerateParameter(msg));
        if k < 2 || n < 3 {
            return fail(format!("need k >= 2 and at least 3 edges, got k={k}, n={n}"));
        }
        let scale = edges
            .iter()
            .map(|e| cx(*e).norm())
            .fold(0.0f64, f64::max)
            .max(1.0);
        let tol = GEOM_TOL * scale;
        if edges.iter().any(|e| cx(*e).norm() < tol) {
            return fail("zero-length edge".into());
        }
        let total: Complex64 = edges.iter().map(|e| cx(*e)).sum();
        if total.norm() > tol {
            return fail(format!("polygon does not close, defect {}", total.norm()));
        }
        // every edge in exactly one pairing
        if pairings.len() * 2 != n {
            return fail("pairings must cover each edge exactly once".into());
        }
        let mut seen = vec![false; n];
        for p in &pairings {
            if p.from >= n || p.to >= n || p.from == p.to || p.rotation >= k {
                return fail(format!("invalid pairing {p:?}"));
            }
            for idx in [p.from, p.to] {
                if seen[idx] {
                    return fail(format!("edge {idx} appears in two pairings"));
                }
                seen[idx] = true;
            }
            let expected = -rot(p.rotation, k) * cx(edges[p.from]);
            let actual = cx(edges[p.to]);
            if (expected - actual).norm() > tol {
                return fail(format!(
                    "pairing {p:?} is not a rotation by 2pi*{}/{k} (defect {})",
                    p.rotation,
                    (expected - actual).norm()
                ));
            }
            if (cx(edges[p.from]).norm() - cx(edges[p.to]).norm()).abs() > tol {
                return fail(format!("paired edges {p:?} differ in length"));
            }
        }
        let poly = KPolygon {
            k,
            edges,
            pairings,
            cone_spec: {
                let mut spec = cone_spec;
                spec.sort_unstable_by(|a, b| b.cmp(a));
                spec
            },
        };
        // simplicity, orientation, angles
        let verts = poly.vertices();
        let area2: f64 = (0..n)
            .map(|i| {
                let a = verts[i];
                let b = verts[(i + 1) % n];
                a[0] * b[1] - b[0] * a[1]
            })
            .sum();
        if area2 <= tol * scale {
            return fail("polygon is not positively oriented".into());
        }
        for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue; // adjacent edges share a vertex by construction
                }
                let (p, q) = (verts[i], verts[(i + 1) % n]);
                let (r, s) = (verts[j], verts[(j + 1) % n]);
                if segments_touch(p, q, r, s, tol) {
                    return fail(format!("edges {i} and {j} intersect"));
                }
            }
        }
        let angles = poly.interior_angles();
        for (v, &a) in angles.iter().enumerate() {
            if !(tol..TAU - tol).contains(&a) {
                return fail(format!("interior angle at vertex {v} is degenerate ({a})"));
            }
        }
        let sum: f64 = angles.iter().sum();
        let expected = (n as f64 - 2.0) * PI;
        if (sum - expected).abs() > GEOM_TOL * n as f64 {
            return fail(format!("interior angles sum to {sum}, expected {expected}"));
        }
        // vertex classes must realize the cone spec
        let step = TAU / k as f64;
        let mut multiples: Vec<u32> = Vec::new();
        for class in poly.vertex_classes() {
            let angle: f64 = class.iter().map(|&v| angles[v]).sum();
            let m = (angle / step).round();
            if (angle - m * step).abs() > GEOM_TOL * class.len() as f64 || m < 1.0 {
                return fail(format!(
                    "vertex class {class:?} has angle {angle}, not a multiple of 2pi/{k}"
                ));
            }
            multiples.push(m as u32);
        }
        multiples.sort_unstable_by(|a, b| b.cmp(a));
        if multiples != poly.cone_spec {
            return fail(format!(
                "vertex classes give cone angles {multiples:?} (in units of 2pi/{k}), expected {:?}",
                poly.cone_spec
            ));
        }
        Ok(poly)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn edges(&self) -> &[[f64; 2]] {
        &self.edges
    }

    pub fn pairings(&self) -> &[EdgePairing] {
        &self.pairings
    }

    pub fn cone_spec(&self) -> &[u32] {
        &self.cone_spec
    }

    /// Vertices of the polygon, starting at the origin; vertex v is the
    /// start of edge v.
    pub fn vertices(&self) -> Vec<[f64; 2]> {
        let mut verts = Vec::with_capacity(self.edges.len());
        let mut p = Complex64::new(0.0, 0.0);
        for e in &self.edges {
            verts.push(arr(p));
            p += cx(*e);
        }
        verts
    }

    /// Interior angle at each vertex (between edge v−1 and edge v).
    pub fn interior_angles(&self) -> Vec<f64> {
        let n = self.edges.len();
        (0..n)
            .map(|v| {
                let incoming = cx(self.edges[(v + n - 1) % n]);
                let outgoing = cx(self.edges[v]);
                let turn = angle_normalize(outgoing.arg() - incoming.arg());
                PI - turn
            })
            .collect()
    }

    fn partner(&self) -> Vec<usize> {
        let mut sigma = vec![usize::MAX; self.edges.len()];
        for p in &self.pairings {
            sigma[p.from] = p.to;
            sigma[p.to] = p.from;
        }
        sigma
    }

    /// Vertex classes of the identified polygon: corner v is followed by
    /// corner σ(v) + 1, where σ is the edge pairing.
    pub fn vertex_classes(&self) -> Vec<Vec<usize>> {
        let n = self.edges.len();
        let sigma = self.partner();
        let mut visited = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            loop {
                visited[v] = true;
                cycle.push(v);
                v = (sigma[v] + 1) % n;
                if v == start {
                    break;
                }
            }
            classes.push(cycle);
        }
        classes
    }

    /// Serialize the polygon (edges as coordinate pairs, pairings as index
    /// triples) to pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("polygon serializes")
    }
}

/// One glued edge pair of the unfolded surface: `from` and `to` are
/// (face, edge) index pairs identified by a pure translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub from: [usize; 2],
    pub to: [usize; 2],
}

/// A closed translation surface: polygon faces glued edge-to-edge by
/// translations.
#[derive(Debug, Clone, Serialize)]
pub struct TranslationSurface {
    faces: Vec<Vec<[f64; 2]>>,
    gluings: Vec<Gluing>,
    vertex_cycles: Vec<Vec<[usize; 2]>>,
    cone_angles: Vec<f64>,
    genus: u32,
}

impl TranslationSurface {
    pub fn faces(&self) -> &[Vec<[f64; 2]>] {
        &self.faces
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Corner cycles (face, corner) of the glued complex, one per vertex.
    pub fn vertex_cycles(&self) -> &[Vec<[usize; 2]>] {
        &self.vertex_cycles
    }

    /// Total angle around each vertex, aligned with `vertex_cycles`.
    pub fn cone_angles(&self) -> &[f64] {
        &self.cone_angles
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Vertices whose total angle differs from 2π: (cycle index, angle).
    pub fn cone_points(&self) -> Vec<(usize, f64)> {
        self.cone_angles
            .iter()
            .enumerate()
            .filter(|(_, &a)| (a - TAU).abs() > 1e-6)
            .map(|(i, &a)| (i, a))
            .collect()
    }

    /// Σ (cone angle − 2π) over all vertices; equals 2π(2g − 2).
    pub fn gauss_bonnet_defect(&self) -> f64 {
        self.cone_angles.iter().map(|a| a - TAU).sum()
    }

    /// Whether rotating the plane by 2π/k is an automorphism: it must send
    /// face r to face r+1 (as edge vectors) and permute the vertex cycles,
    /// fixing every cone point class.
    pub fn cyclic_rotation_is_automorphism(&self) -> bool {
        use std::collections::BTreeSet;
        let k = self.faces.len();
        let n = self.faces[0].len();
        let r1 = rot(1, k as u32);
        let scale = self
            .faces
            .iter()
            .flatten()
            .map(|v| cx(*v).norm())
            .fold(1.0f64, f64::max);
        for f in 0..k {
            let g = (f + 1) % k;
            for v in 0..n {
                let ev = cx(self.faces[f][(v + 1) % n]) - cx(self.faces[f][v]);
                let eg = cx(self.faces[g][(v + 1) % n]) - cx(self.faces[g][v]);
                if (r1 * ev - eg).norm() > GEOM_TOL * scale {
                    return false;
                }
            }
        }
        let cycle_sets: Vec<BTreeSet<[usize; 2]>> = self
            .vertex_cycles
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        for (idx, set) in cycle_sets.iter().enumerate() {
            let shifted: BTreeSet<[usize; 2]> =
                set.iter().map(|&[f, v]| [(f + 1) % k, v]).collect();
            match cycle_sets.iter().position(|s| *s == shifted) {
                None => return false,
                Some(j) => {
                    // cone classes must be fixed, not merely permuted
                    if (self.cone_angles[idx] - TAU).abs() > 1e-6 && j != idx {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Serialize faces, gluings and vertex data to pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("surface serializes")
    }
}

/// Unfold the canonical k-cover of a k-differential polygon: k rotated
/// copies glued so that every identification is a pure translation.
/// `k` must equal the polygon's own order.
pub fn unfold(p: &KPolygon, k: u32) -> Result<TranslationSurface> {
    if k != p.k() {
        return Err(Error::Domain(format!(
            "only the full canonical cover is built: requested degree {k}, polygon has k = {}",
            p.k()
        )));
    }
    let k = k as usize;
    let n = p.edges().len();
    let base = p.vertices();
    let faces: Vec<Vec<[f64; 2]>> = (0..k)
        .map(|r| {
            let w = rot(r as u32, p.k());
            base.iter().map(|v| arr(w * cx(*v))).collect()
        })
        .collect();

    // rotation offset per directed edge: edge i of face r glues to edge
    // sigma(i) of face r - mu(i) (mod k)
    let mut mu = vec![0i64; n];
    let sigma = {
        let mut sigma = vec![usize::MAX; n];
        for pr in p.pairings() {
            sigma[pr.from] = pr.to;
            sigma[pr.to] = pr.from;
            mu[pr.from] = pr.rotation as i64;
            mu[pr.to] = -(pr.rotation as i64);
        }
        sigma
    };
    let partner = |f: usize, e: usize| -> (usize, usize) {
        let pf = (f as i64 - mu[e]).rem_euclid(k as i64) as usize;
        (pf, sigma[e])
    };

    let scale = base.iter().map(|v| cx(*v).norm()).fold(1.0f64, f64::max);
    let edge_vec = |f: usize, e: usize| -> Complex64 {
        cx(faces[f][(e + 1) % n]) - cx(faces[f][e])
    };
    let mut gluings = Vec::with_capacity(k * n / 2);
    for pr in p.pairings() {
        for r in 0..k {
            let (pf, pe) = partner(r, pr.from);
            let defect = (edge_vec(r, pr.from) + edge_vec(pf, pe)).norm();
            if defect > GEOM_TOL * scale {
                return Err(Error::Gluing(format!(
                    "edge {} of face {r} and edge {pe} of face {pf} are not translates \
                     (defect {defect})",
                    pr.from
                )));
            }
            gluings.push(Gluing {
                from: [r, pr.from],
                to: [pf, pe],
            });
        }
    }

    // corner walk: the corner at the start of edge e in face f continues at
    // the corner after the partner edge
    let angles = p.interior_angles();
    let mut visited = vec![vec![false; n]; k];
    let mut vertex_cycles = Vec::new();
    let mut cone_angles = Vec::new();
    for f0 in 0..k {
        for v0 in 0..n {
            if visited[f0][v0] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut total = 0.0;
            let (mut f, mut v) = (f0, v0);
            loop {
                visited[f][v] = true;
                cycle.push([f, v]);
                total += angles[v];
                let (pf, pe) = partner(f, v);
                f = pf;
                v = (pe + 1) % n;
                if (f, v) == (f0, v0) {
                    break;
                }
            }
            vertex_cycles.push(cycle);
            cone_angles.push(total);
        }
    }

    let vertices = vertex_cycles.len() as i64;
    let edges = (k * n / 2) as i64;
    let faces_count = k as i64;
    let euler = vertices - edges + faces_count;
    if euler > 2 || (2 - euler) % 2 != 0 {
        return Err(Error::Internal(format!(
            "glued complex has Euler characteristic {euler}"
        )));
    }
    let genus = ((2 - euler) / 2) as u32;

    let surface = TranslationSurface {
        faces,
        gluings,
        vertex_cycles,
        cone_angles,
        genus,
    };
    let defect = surface.gauss_bonnet_defect();
    let expected = TAU * (2.0 * genus as f64 - 2.0);
    if (defect - expected).abs() > GEOM_TOL * (k * n) as f64 {
        return Err(Error::Internal(format!(
            "angle defect {defect} disagrees with Euler genus {genus}"
        )));
    }
    Ok(surface)
}

/// The Turtle polygon: genus-1 picture of a 4-differential with a zero and
/// a pole of order 3. The hexagon has sides
/// (1, c, i, i·c, −(1+c), −i(1+c)) with pairs (0,2), (1,3), (4,5) each
/// identified by a quarter turn; `c` is the free complex parameter.
pub fn turtle_base(c: Complex64) -> Result<KPolygon> {
    let e0 = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let e4 = -(e0 + c);
    let edges = vec![e0, c, i * e0, i * c, e4, i * e4];
    KPolygon::new(
        4,
        edges.into_iter().map(arr).collect(),
        vec![
            EdgePairing { from: 0, to: 2, rotation: 3 },
            EdgePairing { from: 1, to: 3, rotation: 3 },
            EdgePairing { from: 4, to: 5, rotation: 3 },
        ],
        vec![7, 1],
    )
    .map_err(|e| parameter_error("turtle", c, e))
}

/// The Hurricane polygon: genus-0 picture of a 6-differential with a zero
/// of order 1, a pole of order 5 and two poles of order 4. The hexagon has
/// sides (1, ω², b, ω·b, −b−ω/(1+ω), ω·(−b−ω/(1+ω))) with ω = e^{iπ/3};
/// `b` is the free complex parameter.
pub fn hurricane_base(b: Complex64) -> Result<KPolygon> {
    let w = Complex64::from_polar(1.0, PI / 3.0);
    let e0 = Complex64::new(1.0, 0.0);
    let e4 = -b - w / (Complex64::new(1.0, 0.0) + w);
    let edges = vec![e0, w * w, b, w * b, e4, w * e4];
    KPolygon::new(
        6,
        edges.into_iter().map(arr).collect(),
        vec![
            EdgePairing { from: 0, to: 1, rotation: 5 },
            EdgePairing { from: 2, to: 3, rotation: 4 },
            EdgePairing { from: 4, to: 5, rotation: 4 },
        ],
        vec![7, 2, 2, 1],
    )
    .map_err(|e| parameter_error("hurricane", b, e))
}

fn parameter_error(family: &str, param: Complex64, err: Error) -> Error {
    match err {
        Error::DegenerateParameter(msg) => Error::DegenerateParameter(format!(
            "{family} parameter {param}: {msg}"
        )),
        other => other,
    }
}

fn parameter_free_quadrilateral(k: u32, m01: u32, m23: u32, cone_spec: Vec<u32>) -> KPolygon {
    let e0 = Complex64::new(1.0, 0.0);
    let e1 = -rot(m01, k) * e0;
    let e2 = -(e0 + e1) / (Complex64::new(1.0, 0.0) - rot(m23, k));
    let e3 = -rot(m23, k) * e2;
    KPolygon::new(
        k,
        [e0, e1, e2, e3].into_iter().map(arr).collect(),
        vec![
            EdgePairing { from: 0, to: 1, rotation: m01 },
            EdgePairing { from: 2, to: 3, rotation: m23 },
        ],
        cone_spec,
    )
    .expect("fixed quadrilateral is valid")
}

/// The parameter-free C₁₀ quadrilateral: the unique (up to scale)
/// 10-differential picture with poles of order 3, 8 and 9; corners
/// 7π/10, 2π/10, 7π/10, 2π/5.
pub fn c10_base() -> KPolygon {
    parameter_free_quadrilateral(10, 9, 8, vec![7, 2, 1])
}

/// The parameter-free C₁₂ quadrilateral: the unique (up to scale)
/// 12-differential picture with poles of order 5, 8 and 11; corners
/// 7π/12, 2π/12, 7π/12, 2π/3.
pub fn c12_base() -> KPolygon {
    parameter_free_quadrilateral(12, 11, 8, vec![7, 4, 1])
}
