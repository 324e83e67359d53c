//! Deterministic SVG and ASCII drawings of tilings and socks.
//!
//! Rows are drawn in file order: cell `(x, y)` appears `y` rows below the
//! top, the same layout as the base file. The picture is therefore the
//! mirror image of the right-handed frame used for winding numbers; a
//! counterclockwise cycle is drawn turning clockwise.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::charges::{angle, metric_weight, topological_weight, HalfPoint};
use crate::lattice::{vertex_color, Axis, Cell, Quarter};
use crate::region::DuplexRegion;
use crate::sock::Sock;
use crate::tiling::Tiling;

const CELL: i32 = 40;
const MARGIN: i32 = 20;
const LABEL: i32 = 20;
const GAP: i32 = 40;

/// Extra per-vertex information drawn on a sock.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum Annotation {
    #[default]
    None,
    /// Turning angle at each cycle vertex.
    Angles,
    /// The four face centers around each cycle vertex, with the topological
    /// and metric weights summed over cycles.
    Weights,
}

fn extent(region: &DuplexRegion) -> (i32, i32) {
    let (_, hi) = region.base().bounds();
    (hi.x + 1, hi.y + 1)
}

fn header(out: &mut String, width: i32, height: i32) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##
    );
}

/// Both floors side by side, floor 0 on the left.
pub fn tiling_svg(region: &DuplexRegion, tiling: &Tiling) -> String {
    let (w, h) = extent(region);
    let panel = w * CELL;
    let width = 2 * MARGIN + 2 * panel + GAP;
    let height = 2 * MARGIN + LABEL + h * CELL;
    let top = MARGIN + LABEL;
    let mut out = String::new();
    header(&mut out, width, height);
    for z in 0..2 {
        let left = MARGIN + z * (panel + GAP);
        let _ = writeln!(
            out,
            r#"<text x="{left}" y="{}" font-family="monospace" font-size="14">z = {z}</text>"#,
            MARGIN + 12
        );
        for c in region.base().cells() {
            let _ = writeln!(
                out,
                r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="#eeeeee" stroke="#cccccc"/>"##,
                left + c.x * CELL,
                top + c.y * CELL
            );
        }
        for d in tiling.dominoes() {
            let [a, b] = d.cubes();
            if d.axis() != Axis::K && a.z != z {
                continue;
            }
            let (x0, y0) = (a.x.min(b.x), a.y.min(b.y));
            let (x1, y1) = (a.x.max(b.x), a.y.max(b.y));
            let _ = writeln!(
                out,
                r##"<rect x="{}" y="{}" width="{}" height="{}" rx="4" fill="#ffffff" stroke="#000000" stroke-width="2"/>"##,
                left + x0 * CELL + 4,
                top + y0 * CELL + 4,
                (x1 - x0 + 1) * CELL - 8,
                (y1 - y0 + 1) * CELL - 8
            );
            if d.is_vertical() {
                let _ = writeln!(
                    out,
                    r##"<circle cx="{}" cy="{}" r="5" fill="#000000"/>"##,
                    left + a.x * CELL + CELL / 2,
                    top + a.y * CELL + CELL / 2
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn center(c: Cell) -> (i32, i32) {
    (
        MARGIN + c.x * CELL + CELL / 2,
        MARGIN + c.y * CELL + CELL / 2,
    )
}

fn vertex_fill(v: Cell) -> &'static str {
    if vertex_color(v) > 0 {
        "#000000"
    } else {
        "#ffffff"
    }
}

/// The plane graph with the sock's cycles as arrows and its jewels as dots.
/// Floor-0 edges are solid, floor-1 edges dashed.
pub fn sock_svg(region: &DuplexRegion, sock: &Sock, annotation: Annotation) -> String {
    let (w, h) = extent(region);
    let width = 2 * MARGIN + w * CELL;
    let height = 2 * MARGIN + h * CELL;
    let mut out = String::new();
    header(&mut out, width, height);
    out.push_str(
        r##"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="#000000"/></marker></defs>"##,
    );
    out.push('\n');

    let base = region.base();
    for &c in base.cells() {
        for n in [Cell::new(c.x + 1, c.y), Cell::new(c.x, c.y + 1)] {
            if base.contains(n) {
                let ((x1, y1), (x2, y2)) = (center(c), center(n));
                let _ = writeln!(
                    out,
                    r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#dddddd" stroke-width="1"/>"##
                );
            }
        }
    }

    if annotation == Annotation::Weights {
        let mut points: Vec<HalfPoint> = sock
            .cycles()
            .iter()
            .flat_map(|c| c.vertices().iter().flat_map(|&v| HalfPoint::around(v)))
            .collect();
        points.sort_unstable();
        points.dedup();
        for p in points {
            let (cx, cy) = center(p.corners()[0]);
            let _ = writeln!(
                out,
                r##"<circle cx="{}" cy="{}" r="2" fill="#999999"/>"##,
                cx + CELL / 2,
                cy + CELL / 2
            );
        }
    }

    for cycle in sock.cycles() {
        for (a, b, floor) in cycle.edges() {
            let ((x1, y1), (x2, y2)) = (center(a), center(b));
            let (dx, dy) = ((x2 - x1).signum() * 8, (y2 - y1).signum() * 8);
            let dash = if floor == 1 {
                r#" stroke-dasharray="5,3""#
            } else {
                ""
            };
            let _ = writeln!(
                out,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-width="2"{dash} marker-end="url(#arrow)"/>"##,
                x1 + dx,
                y1 + dy,
                x2 - dx,
                y2 - dy
            );
        }
        for &v in cycle.vertices() {
            let (cx, cy) = center(v);
            let _ = writeln!(
                out,
                r##"<circle cx="{cx}" cy="{cy}" r="3" fill="{}" stroke="#000000"/>"##,
                vertex_fill(v)
            );
        }
    }

    for &v in sock.jewels() {
        let (cx, cy) = center(v);
        let _ = writeln!(
            out,
            r##"<circle cx="{cx}" cy="{cy}" r="7" fill="{}" stroke="#000000" stroke-width="2"/>"##,
            vertex_fill(v)
        );
    }

    match annotation {
        Annotation::None => {}
        Annotation::Angles => {
            for cycle in sock.cycles() {
                for &v in cycle.vertices() {
                    let a = angle(cycle, v).expect("vertex of the cycle");
                    label(&mut out, v, &a.to_string());
                }
            }
        }
        Annotation::Weights => {
            let mut weights: BTreeMap<Cell, (Quarter, Quarter)> = BTreeMap::new();
            for cycle in sock.cycles() {
                for &v in cycle.vertices() {
                    weights.insert(v, (Quarter::ZERO, Quarter::ZERO));
                }
            }
            for (v, (top, metric)) in weights.iter_mut() {
                for cycle in sock.cycles() {
                    *top += topological_weight(cycle, *v);
                    *metric += metric_weight(cycle, *v);
                }
            }
            for (v, (top, metric)) in weights {
                label(&mut out, v, &format!("{top}|{metric}"));
            }
        }
    }

    out.push_str("</svg>\n");
    out
}

fn label(out: &mut String, v: Cell, text: &str) {
    let (cx, cy) = center(v);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="monospace" font-size="9">{text}</text>"#,
        cx + 5,
        cy - 5
    );
}

fn cell_glyph(tiling_cover: &BTreeMap<(i32, i32, i32), char>, x: i32, y: i32, z: i32) -> char {
    tiling_cover.get(&(x, y, z)).copied().unwrap_or('.')
}

/// Both floors side by side: `o` for a vertical domino, `[` `]` for an
/// i-domino, `n` over `u` for a j-domino, `.` outside the base.
pub fn tiling_ascii(region: &DuplexRegion, tiling: &Tiling) -> String {
    let (w, h) = extent(region);
    let mut cover = BTreeMap::new();
    for d in tiling.dominoes() {
        let [a, b] = d.cubes();
        let (ga, gb) = match d.axis() {
            Axis::I => ('[', ']'),
            Axis::J => ('n', 'u'),
            Axis::K => ('o', 'o'),
        };
        cover.insert((a.x, a.y, a.z), ga);
        cover.insert((b.x, b.y, b.z), gb);
    }
    let pad = (w as usize).max(3);
    let mut out = format!("{:<pad$}   {}\n", "z=0", "z=1");
    for y in 0..h {
        let floor = |z| {
            (0..w)
                .map(|x| cell_glyph(&cover, x, y, z))
                .collect::<String>()
        };
        let _ = writeln!(out, "{:<pad$}   {}", floor(0), floor(1));
    }
    out
}

/// Vertices on a doubled grid: `*` jewel, `+` cycle vertex; edges as arrows
/// `<` `>` `^` `v` in screen orientation.
pub fn sock_ascii(region: &DuplexRegion, sock: &Sock) -> String {
    let (w, h) = extent(region);
    let (cols, rows) = ((2 * w - 1) as usize, (2 * h - 1) as usize);
    let mut grid = vec![vec![' '; cols]; rows];
    for &c in region.base().cells() {
        grid[2 * c.y as usize][2 * c.x as usize] = '.';
    }
    for &v in sock.jewels() {
        grid[2 * v.y as usize][2 * v.x as usize] = '*';
    }
    for cycle in sock.cycles() {
        for (a, b, _) in cycle.edges() {
            grid[2 * a.y as usize][2 * a.x as usize] = '+';
            let (gx, gy) = ((a.x + b.x) as usize, (a.y + b.y) as usize);
            grid[gy][gx] = match (b.x - a.x, b.y - a.y) {
                (1, _) => '>',
                (-1, _) => '<',
                (_, 1) => 'v',
                _ => '^',
            };
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{build_duplex, BaseShape};
    use crate::sock::project_sock;
    use crate::tiling::enumerate_tilings;

    #[test]
    fn ascii_of_two_cells() {
        let r = build_duplex(BaseShape::rectangle(2, 1).unwrap());
        let tilings: Vec<_> = enumerate_tilings(&r).collect();
        assert_eq!(tiling_ascii(&r, &tilings[0]), "z=0   z=1\n[]    []\n");
        assert_eq!(tiling_ascii(&r, &tilings[1]), "z=0   z=1\noo    oo\n");
        assert_eq!(sock_ascii(&r, &project_sock(&tilings[0])), "* *\n");
    }

    #[test]
    fn ring_sock_drawing() {
        let r = build_duplex(BaseShape::rectangle(3, 3).unwrap());
        let t = enumerate_tilings(&r)
            .find(|t| {
                let s = project_sock(t);
                s.cycles().len() == 1 && s.cycles()[0].len() == 8
            })
            .unwrap();
        let s = project_sock(&t);
        let art = sock_ascii(&r, &s);
        assert_eq!(art.matches('+').count(), 8);
        assert_eq!(art.matches('*').count(), 1);
        let svg = sock_svg(&r, &s, Annotation::None);
        assert_eq!(svg.matches("marker-end").count(), 8);
        assert_eq!(svg.matches(r#"r="7""#).count(), 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        let r = build_duplex(BaseShape::rectangle(3, 2).unwrap());
        for t in enumerate_tilings(&r) {
            let s = project_sock(&t);
            assert_eq!(tiling_svg(&r, &t), tiling_svg(&r, &t));
            for a in [Annotation::None, Annotation::Angles, Annotation::Weights] {
                assert_eq!(sock_svg(&r, &s, a), sock_svg(&r, &s, a));
            }
        }
    }
}
