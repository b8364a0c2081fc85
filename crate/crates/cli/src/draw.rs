//! Deterministic SVG rendering of Levi graphs: black point vertices, white
//! block vertices. Stitched inputs (detected by a ring cut) get a radial
//! three-sector layout; everything else gets a seeded spring layout.

use symcfg::embed::ring_cut_certificate;
use symcfg::levi::LeviGraph;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Auto,
    Spring,
    Radial,
}

/// Fruchterman-Reingold with fixed iteration count and a circular start, so
/// identical inputs draw identically.
fn spring_positions(n: usize, edges: &[(usize, usize)], extent: f64) -> Vec<(f64, f64)> {
    let mut pos: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            (extent * 0.4 * a.cos(), extent * 0.4 * a.sin())
        })
        .collect();
    if n <= 1 {
        return pos;
    }
    let k = extent / (n as f64).sqrt();
    let mut temp = extent / 8.0;
    for _ in 0..300 {
        let mut disp = vec![(0.0f64, 0.0f64); n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let dx = pos[i].0 - pos[j].0;
                let dy = pos[i].1 - pos[j].1;
                let d2 = (dx * dx + dy * dy).max(1e-6);
                let d = d2.sqrt();
                let f = k * k / d;
                disp[i].0 += dx / d * f;
                disp[i].1 += dy / d * f;
            }
        }
        for &(u, w) in edges {
            let dx = pos[u].0 - pos[w].0;
            let dy = pos[u].1 - pos[w].1;
            let d = (dx * dx + dy * dy).sqrt().max(1e-6);
            let f = d * d / k;
            disp[u].0 -= dx / d * f;
            disp[u].1 -= dy / d * f;
            disp[w].0 += dx / d * f;
            disp[w].1 += dy / d * f;
        }
        for i in 0..n {
            let d = (disp[i].0 * disp[i].0 + disp[i].1 * disp[i].1).sqrt().max(1e-6);
            let step = d.min(temp);
            pos[i].0 += disp[i].0 / d * step;
            pos[i].1 += disp[i].1 / d * step;
            let half = extent / 2.0;
            pos[i].0 = pos[i].0.clamp(-half, half);
            pos[i].1 = pos[i].1.clamp(-half, half);
        }
        temp *= 0.98;
    }
    pos
}

fn positions(levi: &LeviGraph, layout: Layout) -> Vec<(f64, f64)> {
    let g = levi.graph();
    let n = g.n();
    let ring = match layout {
        Layout::Spring => None,
        Layout::Auto | Layout::Radial => ring_cut_certificate(g),
    };
    match ring {
        Some(cert) => {
            // One 120-degree sector per part, laid out independently.
            let mut pos = vec![(0.0, 0.0); n];
            for (pi, part) in cert.parts.iter().enumerate() {
                let angle = std::f64::consts::PI * (0.5 + 2.0 * pi as f64 / 3.0);
                let cx = (SIZE / 3.2) * angle.cos();
                let cy = (SIZE / 3.2) * angle.sin();
                let local: Vec<usize> = part.vertices.clone();
                let index_of = |x: usize| local.iter().position(|&y| y == x).unwrap();
                let local_edges: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .filter(|&&(u, w)| local.contains(&u) && local.contains(&w))
                    .map(|&(u, w)| (index_of(u), index_of(w)))
                    .collect();
                let local_pos = spring_positions(local.len(), &local_edges, SIZE / 2.4);
                for (li, &x) in local.iter().enumerate() {
                    pos[x] = (cx + local_pos[li].0, cy + local_pos[li].1);
                }
            }
            pos
        }
        None => spring_positions(n, g.edges(), SIZE - 2.0 * MARGIN),
    }
}

/// Renders the Levi graph; `annotation` lines end up in a legend block.
pub fn render_svg(levi: &LeviGraph, layout: Layout, annotation: &[String], manifest_comment: &str) -> String {
    let g = levi.graph();
    let raw = positions(levi, layout);
    // Fit to canvas.
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &raw {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span_x = (max_x - min_x).max(1e-6);
    let span_y = (max_y - min_y).max(1e-6);
    let scale = ((SIZE - 2.0 * MARGIN) / span_x).min((SIZE - 2.0 * MARGIN) / span_y);
    let fit = |&(x, y): &(f64, f64)| {
        (
            MARGIN + (x - min_x) * scale,
            MARGIN + (y - min_y) * scale,
        )
    };
    let pos: Vec<(f64, f64)> = raw.iter().map(fit).collect();
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    svg.push_str(&format!("<!-- manifest: {manifest_comment} -->\n"));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for &(u, w) in g.edges() {
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#555\" stroke-width=\"1.2\"/>\n",
            pos[u].0, pos[u].1, pos[w].0, pos[w].1
        ));
    }
    for u in 0..g.n() {
        let (fill, stroke) = if levi.is_point_vertex(u) {
            ("black", "black")
        } else {
            ("white", "black")
        };
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"7\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"1.5\"/>\n",
            pos[u].0, pos[u].1
        ));
    }
    for (i, line) in annotation.iter().enumerate() {
        svg.push_str(&format!(
            "<text x=\"10\" y=\"{}\" font-family=\"monospace\" font-size=\"13\">{}</text>\n",
            18 + 16 * i,
            line
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
