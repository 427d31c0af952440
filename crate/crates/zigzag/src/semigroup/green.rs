//! Green's relations and eggbox diagrams.
//!
//! For an inverse semigroup the relations have a concrete form: `s L t` iff
//! `s*s = t*t`, `s R t` iff `ss* = tt*`, `H = L ∩ R`, and `s D t` iff the
//! domain idempotents `s*s` and `t*t` are connected by elements `a` with
//! `a*a = s*s`, `aa* = t*t`.  The zero, when present, is left out of the
//! classes: its Green structure is trivial and drawing it only clutters the
//! diagrams.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Element, FiniteInverseSemigroup};

/// Green's class data over the nonzero elements.
///
/// Class ids are assigned in order of each class's smallest member, and the
/// members of every class are ascending.  `NONE` marks the zero's slot in
/// the `*_of` maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenData {
    pub l_of: Vec<u32>,
    pub r_of: Vec<u32>,
    pub h_of: Vec<u32>,
    pub d_of: Vec<u32>,
    pub l_classes: Vec<Vec<u32>>,
    pub r_classes: Vec<Vec<u32>>,
    pub h_classes: Vec<Vec<u32>>,
    pub d_classes: Vec<Vec<u32>>,
}

impl GreenData {
    pub const NONE: u32 = u32::MAX;

    pub fn compute<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> GreenData {
        let n = sgp.order();
        let mut data = GreenData {
            l_of: vec![Self::NONE; n],
            r_of: vec![Self::NONE; n],
            h_of: vec![Self::NONE; n],
            d_of: vec![Self::NONE; n],
            l_classes: Vec::new(),
            r_classes: Vec::new(),
            h_classes: Vec::new(),
            d_classes: Vec::new(),
        };

        let dom = |s: u32| sgp.product(sgp.inverse_of(s), s);
        let ran = |s: u32| sgp.product(s, sgp.inverse_of(s));

        let mut l_ids: HashMap<u32, u32> = HashMap::new();
        let mut r_ids: HashMap<u32, u32> = HashMap::new();
        let mut h_ids: HashMap<(u32, u32), u32> = HashMap::new();
        for s in sgp.nonzero() {
            let (d, r) = (dom(s), ran(s));
            let li = *l_ids.entry(d).or_insert_with(|| {
                data.l_classes.push(Vec::new());
                data.l_classes.len() as u32 - 1
            });
            data.l_of[s as usize] = li;
            data.l_classes[li as usize].push(s);
            let ri = *r_ids.entry(r).or_insert_with(|| {
                data.r_classes.push(Vec::new());
                data.r_classes.len() as u32 - 1
            });
            data.r_of[s as usize] = ri;
            data.r_classes[ri as usize].push(s);
            let hi = *h_ids.entry((d, r)).or_insert_with(|| {
                data.h_classes.push(Vec::new());
                data.h_classes.len() as u32 - 1
            });
            data.h_of[s as usize] = hi;
            data.h_classes[hi as usize].push(s);
        }

        // D glues the domain idempotents of the nonzero elements: each s
        // links s*s with ss*.  Union-find over idempotent indices.
        let mut parent: HashMap<u32, u32> = HashMap::new();
        fn root(parent: &mut HashMap<u32, u32>, mut x: u32) -> u32 {
            loop {
                let p = *parent.entry(x).or_insert(x);
                if p == x {
                    return x;
                }
                let gp = *parent.entry(p).or_insert(p);
                parent.insert(x, gp);
                x = gp;
            }
        }
        for s in sgp.nonzero() {
            let (a, b) = (root(&mut parent, dom(s)), root(&mut parent, ran(s)));
            if a != b {
                // Keep the smaller idempotent as the root so ids stay stable.
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent.insert(hi, lo);
            }
        }
        let mut d_ids: HashMap<u32, u32> = HashMap::new();
        for s in sgp.nonzero() {
            let key = root(&mut parent, dom(s));
            let di = *d_ids.entry(key).or_insert_with(|| {
                data.d_classes.push(Vec::new());
                data.d_classes.len() as u32 - 1
            });
            data.d_of[s as usize] = di;
            data.d_classes[di as usize].push(s);
        }
        data
    }
}

/// One D-class laid out as a grid: rows are range idempotents `ss*`,
/// columns are domain idempotents `s*s`, and the cell at `(e, f)` is the
/// H-class `{s : ss* = e, s*s = f}`.  In an inverse semigroup every cell of
/// the grid is nonempty and the diagonal cells are exactly the idempotents.
#[derive(Clone, Debug)]
pub struct DClassGrid {
    pub d_class: u32,
    /// Range idempotents labelling the rows, ascending.
    pub rows: Vec<u32>,
    /// Domain idempotents labelling the columns, ascending.
    pub cols: Vec<u32>,
    /// `cells[i][j]` lists the elements with `ss* = rows[i]`, `s*s = cols[j]`.
    pub cells: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug)]
pub struct EggboxDiagram {
    pub grids: Vec<DClassGrid>,
}

impl EggboxDiagram {
    pub fn build<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> EggboxDiagram {
        let green = sgp.green();
        let dom = |s: u32| sgp.product(sgp.inverse_of(s), s);
        let ran = |s: u32| sgp.product(s, sgp.inverse_of(s));
        let mut grids = Vec::new();
        for (di, members) in green.d_classes.iter().enumerate() {
            let mut rows: Vec<u32> = members.iter().map(|&s| ran(s)).collect();
            rows.sort_unstable();
            rows.dedup();
            let mut cols: Vec<u32> = members.iter().map(|&s| dom(s)).collect();
            cols.sort_unstable();
            cols.dedup();
            let row_pos: HashMap<u32, usize> =
                rows.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let col_pos: HashMap<u32, usize> =
                cols.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let mut cells = vec![vec![Vec::new(); cols.len()]; rows.len()];
            for &s in members {
                cells[row_pos[&ran(s)]][col_pos[&dom(s)]].push(s);
            }
            grids.push(DClassGrid {
                d_class: di as u32,
                rows,
                cols,
                cells,
            });
        }
        EggboxDiagram { grids }
    }

    /// Plain-text rendering: one bordered grid per D-class, maximal
    /// idempotents tagged with `*`.
    pub fn render_text<E: Element>(&self, sgp: &FiniteInverseSemigroup<E>) -> String {
        let maximal = sgp.maximal_idempotents();
        let label = |s: u32| {
            let mut t = sgp.name(s);
            if maximal.contains(&s) {
                t.push_str(" *");
            }
            t
        };
        let mut out = String::new();
        for grid in &self.grids {
            let size: usize = grid.cells.iter().flatten().map(|c| c.len()).sum();
            let _ = writeln!(
                out,
                "D-class {} ({} x {}, {} element{}):",
                grid.d_class + 1,
                grid.rows.len(),
                grid.cols.len(),
                size,
                if size == 1 { "" } else { "s" },
            );
            let texts: Vec<Vec<String>> = grid
                .cells
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|cell| {
                            cell.iter()
                                .map(|&s| label(s))
                                .collect::<Vec<_>>()
                                .join(", ")
                        })
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = (0..grid.cols.len())
                .map(|j| texts.iter().map(|row| row[j].len()).max().unwrap_or(0))
                .collect();
            let rule = {
                let mut r = String::from("  +");
                for w in &widths {
                    r.push_str(&"-".repeat(w + 2));
                    r.push('+');
                }
                r
            };
            let _ = writeln!(out, "{rule}");
            for row in &texts {
                let mut line = String::from("  |");
                for (j, cell) in row.iter().enumerate() {
                    let _ = write!(line, " {:<1$} |", cell, widths[j]);
                }
                let _ = writeln!(out, "{line}");
                let _ = writeln!(out, "{rule}");
            }
        }
        out
    }

    /// Graphviz rendering: one record-shaped node per D-class.
    pub fn render_dot<E: Element>(&self, sgp: &FiniteInverseSemigroup<E>) -> String {
        let maximal = sgp.maximal_idempotents();
        let escape = |s: &str| {
            s.replace('&', "&amp;")
                .replace('<', "&lt;")
                .replace('>', "&gt;")
        };
        let mut out = String::from("digraph eggbox {\n");
        out.push_str("  node [shape=plaintext];\n");
        for grid in &self.grids {
            let _ = write!(out, "  d{} [label=<", grid.d_class);
            out.push_str("<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">");
            for row in &grid.cells {
                out.push_str("<tr>");
                for cell in row {
                    let text = cell
                        .iter()
                        .map(|&s| {
                            let mut t = escape(&sgp.name(s));
                            if maximal.contains(&s) {
                                t.push_str(" *");
                            }
                            t
                        })
                        .collect::<Vec<_>>()
                        .join(", ");
                    let _ = write!(out, "<td>{text}</td>");
                }
                out.push_str("</tr>");
            }
            out.push_str("</table>>];\n");
        }
        out.push_str("}\n");
        out
    }
}
