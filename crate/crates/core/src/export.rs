//! Graphviz DOT export of any map and SVG drawings of the plane construction.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use crate::map::{FlagMap, VertexId};
use crate::planar::arrangement::to_f64;
use crate::planar::quad::{RADIUS_C, RADIUS_C1, RADIUS_C2};
use crate::planar::{boundary_order, Color, MarkedQuadMap, VertexRole};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExportError {
    #[error("the map carries no drawing coordinates; SVG is only available for the plane construction")]
    NoGeometry,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// An undirected DOT multigraph with one node per vertex and one edge per
/// edge. Nodes show vertex labels where present; other marks are listed on
/// the vertex, edge and face of their flag.
pub fn export_dot(m: &FlagMap) -> String {
    let c = m.cells();
    let mut on_vertex: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    let mut on_edge: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    let mut faces: Vec<String> = Vec::new();
    // vertex labels are stored as marks `v:<label>` and shown as node labels
    for (name, &x) in m.marks().iter().filter(|(k, _)| !k.starts_with("v:")) {
        on_vertex.entry(c.vertex_of(x).0).or_default().push(name);
        on_edge.entry(c.edge_of(x).0).or_default().push(name);
        faces.push(format!("{name}={}", c.face_of(x)));
    }
    let mut out = String::from("graph map {\n");
    let _ = writeln!(
        out,
        "  graph [vertices={}, edges={}, faces={}, euler={}, orientable={}];",
        m.vertex_count(),
        m.edge_count(),
        m.face_count(),
        m.euler_characteristic(),
        m.is_orientable()
    );
    if !faces.is_empty() {
        let _ = writeln!(out, "  graph [mark_faces={}];", quote(&faces.join(" ")));
    }
    for v in c.vertices() {
        let mut label = m.vertex_label(v).map_or_else(|| v.to_string(), str::to_string);
        if let Some(names) = on_vertex.get(&v.0) {
            label = format!("{label} [{}]", names.join(","));
        }
        let _ = writeln!(out, "  v{} [label={}];", v.0, quote(&label));
    }
    for e in c.edges() {
        let (a, b) = m.edge_ends(c.edge_flags(e)[0]);
        let mut attrs = format!("id={}", quote(&e.to_string()));
        if let Some(names) = on_edge.get(&e.0) {
            let _ = write!(attrs, ", marks={}", quote(&names.join(",")));
        }
        let _ = writeln!(out, "  v{} -- v{} [{attrs}];", a.0, b.0);
    }
    out.push_str("}\n");
    out
}

/// Number of drawing units per unit of construction coordinates.
const SCALE: f64 = 100.0;
const MARGIN: f64 = 40.0;
const B_FILL: &str = "#c8c8c8";
const W_FILL: &str = "#ffffff";
const GRID: &str = "#777777";

fn screen((x, y): (f64, f64)) -> (f64, f64) {
    (x * SCALE, -y * SCALE)
}

fn fmt_point(p: (f64, f64)) -> String {
    let (x, y) = screen(p);
    format!("{x:.2},{y:.2}")
}

fn circle(out: &mut String, r: f64, class: &str) {
    let _ = writeln!(
        out,
        r#"  <circle class="{class}" cx="0" cy="0" r="{:.2}" fill="none" stroke="{GRID}" stroke-dasharray="4 3"/>"#,
        r * SCALE
    );
}

fn label(out: &mut String, class: &str, at: (f64, f64), text: &str) {
    let (x, y) = screen(at);
    let _ = writeln!(
        out,
        r#"  <text class="{class}" x="{x:.2}" y="{y:.2}" font-size="13" text-anchor="middle" dominant-baseline="middle">{text}</text>"#
    );
}

/// Pushes `p` outwards from the centre by `by` units.
fn outwards(p: (f64, f64), by: f64) -> (f64, f64) {
    let r = (p.0 * p.0 + p.1 * p.1).sqrt();
    if r == 0.0 {
        return p;
    }
    (p.0 * (r + by) / r, p.1 * (r + by) / r)
}

/// Boundary walk of the face containing `x` as a closed polyline.
fn face_polygon(q: &MarkedQuadMap, x: usize) -> Vec<(f64, f64)> {
    let m = &q.map;
    let c = m.cells();
    let walk = m.face_walk(x);
    let mut points = Vec::new();
    for &y in walk.iter().step_by(2) {
        let tail: VertexId = c.vertex_of(y);
        let (start, path) = &q.edge_paths[c.edge_of(y).0];
        if *start == tail {
            points.extend(path.iter().copied());
        } else {
            points.extend(path.iter().rev().copied());
        }
    }
    points
}

/// Draws the construction: the circles C, C′ and C″, the chess-coloured
/// faces of G, its edges, and the labels p_i, a_{i,i+1}, l_i and r_i.
pub fn export_svg(q: &MarkedQuadMap) -> String {
    let half = RADIUS_C * SCALE + MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.2} {:.2} {:.2} {:.2}">"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half
    );
    let m = &q.map;
    let c = m.cells();
    for f in c.faces() {
        if f == q.outer_face {
            continue;
        }
        let fill = match q.coloring.color(f) {
            Color::B => B_FILL,
            Color::W => W_FILL,
        };
        let pts: Vec<String> = face_polygon(q, c.face_flags(f)[0])
            .into_iter()
            .map(fmt_point)
            .collect();
        let _ = writeln!(
            out,
            r#"  <polygon class="face {}" points="{}" fill="{fill}" stroke="none"/>"#,
            match q.coloring.color(f) {
                Color::B => "b",
                Color::W => "w",
            },
            pts.join(" ")
        );
    }
    circle(&mut out, RADIUS_C, "circle-c");
    circle(&mut out, RADIUS_C1, "circle-c1");
    circle(&mut out, RADIUS_C2, "circle-c2");
    for (_, path) in &q.edge_paths {
        let pts: Vec<String> = path.iter().copied().map(fmt_point).collect();
        let _ = writeln!(
            out,
            r#"  <polyline class="edge" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            pts.join(" ")
        );
    }
    let k = q.k;
    for (v, role) in q.roles.iter().enumerate() {
        let (x, y) = screen(q.coords[v]);
        let _ = writeln!(out, r#"  <circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
        match *role {
            VertexRole::P(i) => label(&mut out, "vertex-label", outwards(q.coords[v], 0.2), &format!("p{i}")),
            VertexRole::A(i) => label(
                &mut out,
                "vertex-label",
                outwards(q.coords[v], 0.2),
                &format!("a{i}{}", i % k + 1),
            ),
            VertexRole::Crossing(_) => {}
        }
    }
    for pt in boundary_order(k) {
        let (px, py) = to_f64(q.arrangement.point(pt));
        let at = (px * RADIUS_C2, py * RADIUS_C2);
        let (x, y) = screen(at);
        let _ = writeln!(out, r#"  <circle class="boundary-point" cx="{x:.2}" cy="{y:.2}" r="2" fill="{GRID}"/>"#);
        label(&mut out, "boundary", outwards(at, -0.18), &pt.to_string());
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::cube_map;
    use crate::monodromy::MonodromyCandidate;
    use crate::planar::assemble_quad_map;

    #[test]
    fn cube_dot_lists_cells() {
        let dot = export_dot(&cube_map());
        assert_eq!(dot.matches(" [label=").count(), 8);
        assert_eq!(dot.matches(" -- ").count(), 12);
    }

    #[test]
    fn marks_are_annotated() {
        let m = cube_map().with_mark("here", 0).unwrap();
        let dot = export_dot(&m);
        assert!(dot.contains("label=\"1 [here]\""), "{dot}");
        assert!(dot.contains("marks=\"here\""));
    }

    #[test]
    fn edge_paths_join_their_ends() {
        let s = MonodromyCandidate::parse("(1,-6,-4,2)(3,-5)(5,-3)(-2,4,6,-1)", 6).unwrap();
        let q = assemble_quad_map(&s, 0).unwrap();
        let close = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0).abs() + (a.1 - b.1).abs() < 1e-9;
        for e in q.map.cells().edges() {
            let x = q.map.cells().edge_flags(e)[0];
            let (u, v) = q.map.edge_ends(x);
            let (start, path) = &q.edge_paths[e.0];
            let (first, last) = (path[0], *path.last().unwrap());
            let other = if *start == u { v } else { u };
            assert!(close(first, q.coords[start.0]), "{e}");
            assert!(close(last, q.coords[other.0]), "{e}");
        }
    }
}
