//! Plain-text drawing of a path triple.
//!
//! Lattice point `(x, y)` sits at column `2x`, with `y` growing upward.
//! Start points are drawn as `B`, `M`, `T`; the remaining vertices of the
//! bottom, middle and top paths as `b`, `m`, `t`. Unused lattice points are
//! `.`; edges are `-` and `|`.

use crate::lattice::{GridPoint, LatticePath, PathTriple, Step};

pub fn render_ascii(t: &PathTriple) -> String {
    let paths = [
        (&t.bottom, 'B', 'b'),
        (&t.middle, 'M', 'm'),
        (&t.top, 'T', 't'),
    ];
    let all: Vec<GridPoint> = paths.iter().flat_map(|(p, _, _)| p.vertices()).collect();
    let max_x = all.iter().map(|p| p.x).max().unwrap_or(0);
    let max_y = all.iter().map(|p| p.y).max().unwrap_or(0);
    let width = 2 * max_x + 1;
    let height = 2 * max_y + 1;

    let mut canvas = vec![vec![' '; width]; height];
    for y in 0..=max_y {
        for x in 0..=max_x {
            canvas[2 * (max_y - y)][2 * x] = '.';
        }
    }
    for (path, start_mark, mark) in paths {
        draw(&mut canvas, path, max_y, start_mark, mark);
    }
    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn draw(canvas: &mut [Vec<char>], path: &LatticePath, max_y: usize, start_mark: char, mark: char) {
    let cell = |p: GridPoint| (2 * (max_y - p.y), 2 * p.x);
    let verts = path.vertices();
    for (v, step) in verts.iter().zip(&path.steps) {
        let (r, c) = cell(*v);
        match step {
            Step::H => canvas[r][c + 1] = '-',
            Step::V => canvas[r - 1][c] = '|',
        }
    }
    for (i, v) in verts.iter().enumerate() {
        let (r, c) = cell(*v);
        canvas[r][c] = if i == 0 { start_mark } else { mark };
    }
}
