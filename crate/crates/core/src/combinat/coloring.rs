//! Vertex colourings: the modular construction, a verifier, DSATUR and an
//! exact chromatic number search.

use serde::{Deserialize, Serialize};

use super::max_clique;
use crate::graph::Graph;
use crate::limits::{Budget, SearchLimits};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// Number of colours available; every entry of `color` is below it.
    pub k: usize,
    pub color: Vec<usize>,
}

impl Coloring {
    /// Colouring of a board given row by row, top row first.
    pub fn from_rows(rows: &[Vec<usize>]) -> Self {
        let color: Vec<usize> = rows.iter().flatten().copied().collect();
        let k = color.iter().max().map_or(0, |&m| m + 1);
        Coloring { k, color }
    }

    /// Number of colours actually used.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.color {
            if c < self.k {
                seen[c] = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.color.iter().enumerate() {
            if c < self.k {
                out[c].push(v);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringCheck {
    Proper,
    /// The colouring does not have one entry per vertex.
    WrongLength { expected: usize, got: usize },
    ColorOutOfRange { vertex: usize, color: usize },
    /// Adjacent vertices share a colour.
    Monochromatic { u: usize, v: usize },
}

impl ColoringCheck {
    pub fn is_proper(&self) -> bool {
        matches!(self, ColoringCheck::Proper)
    }
}

/// `c(i, j) = (j - 2i) mod n` on 0-based coordinates. Proper exactly when
/// `n mod 6` is 1 or 5, but the verifier decides.
pub fn modular_coloring(n: usize) -> Coloring {
    let m = n as i64;
    let color = (0..n * n)
        .map(|v| {
            let (i, j) = ((v / n) as i64, (v % n) as i64);
            (j - 2 * i).rem_euclid(m) as usize
        })
        .collect();
    Coloring { k: n, color }
}

/// Checks properness; reports the first problem in vertex order.
pub fn verify_coloring<G: Graph + ?Sized>(g: &G, c: &Coloring) -> ColoringCheck {
    if c.color.len() != g.order() {
        return ColoringCheck::WrongLength {
            expected: g.order(),
            got: c.color.len(),
        };
    }
    if let Some((vertex, &color)) = c.color.iter().enumerate().find(|(_, &x)| x >= c.k) {
        return ColoringCheck::ColorOutOfRange { vertex, color };
    }
    for u in 0..g.order() {
        for &v in g.neighbors(u) {
            if u < v && c.color[u] == c.color[v] {
                return ColoringCheck::Monochromatic { u, v };
            }
        }
    }
    ColoringCheck::Proper
}

/// Colouring state shared by greedy DSATUR and the exact search.
struct State<'a, G: Graph + ?Sized> {
    g: &'a G,
    k: usize,
    color: Vec<Option<usize>>,
    /// `seen[v][c]`: coloured neighbours of `v` with colour `c`.
    seen: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl<'a, G: Graph + ?Sized> State<'a, G> {
    fn new(g: &'a G, k: usize) -> Self {
        State {
            g,
            k,
            color: vec![None; g.order()],
            seen: vec![vec![0; k]; g.order()],
            saturation: vec![0; g.order()],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for &u in self.g.neighbors(v) {
            if self.seen[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.seen[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().expect("vertex is coloured");
        for &u in self.g.neighbors(v) {
            self.seen[u][c] -= 1;
            if self.seen[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Uncoloured vertex of largest saturation, ties by degree then index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| {
                (
                    self.saturation[v],
                    self.g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
    }

    fn finish(&self) -> Coloring {
        Coloring {
            k: self.k,
            color: self.color.iter().map(|c| c.expect("complete")).collect(),
        }
    }

    fn search(&mut self, used: usize, budget: &mut Budget) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if !budget.tick() {
            return false;
        }
        // a fresh colour is interchangeable with any other fresh colour
        for c in 0..self.k.min(used + 1) {
            if self.seen[v][c] == 0 {
                self.assign(v, c);
                if self.search(used.max(c + 1), budget) {
                    return true;
                }
                self.unassign(v);
                if budget.exhausted {
                    return false;
                }
            }
        }
        false
    }
}

/// Greedy DSATUR colouring.
pub fn dsatur_coloring<G: Graph + ?Sized>(g: &G) -> Coloring {
    let order = g.order();
    let mut st = State::new(g, order.max(1));
    while let Some(v) = st.pick() {
        let c = (0..st.k).find(|&c| st.seen[v][c] == 0).expect("order colours suffice");
        st.assign(v, c);
    }
    let mut out = st.finish();
    out.k = out.color.iter().max().map_or(0, |&m| m + 1);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub lower: usize,
    pub upper: usize,
    pub optimal: bool,
    /// A proper colouring with `upper` colours.
    pub coloring: Coloring,
    pub nodes: u64,
    pub millis: u128,
}

/// Exact chromatic number by increasing `k` from the clique number, each
/// step a DSATUR-ordered backtracking search with a maximum clique
/// pre-coloured. On budget exhaustion `[lower, upper]` brackets the answer.
pub fn chromatic_number_exact<G: Graph + ?Sized>(g: &G, limits: SearchLimits) -> ChromaticResult {
    let mut budget = limits.start();
    let clique = max_clique(g, limits);
    let clique_vs = clique.vertices();
    let mut coloring = dsatur_coloring(g);
    let mut lower = clique.value;
    let mut upper = coloring.k;
    let mut nodes = clique.nodes;
    while lower < upper {
        let k = lower;
        let mut st = State::new(g, k);
        for (c, &v) in clique_vs.iter().enumerate() {
            st.assign(v, c);
        }
        if st.search(clique_vs.len(), &mut budget) {
            coloring = st.finish();
            upper = k;
        } else if budget.exhausted {
            break;
        } else {
            lower = k + 1;
        }
    }
    nodes += budget.nodes;
    ChromaticResult {
        lower,
        upper,
        optimal: lower == upper,
        coloring,
        nodes,
        millis: budget.millis(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::QueensGraph;

    #[test]
    fn modular_properness_pattern() {
        for n in 1..=20 {
            let g = QueensGraph::new(n).unwrap();
            let proper = verify_coloring(&g, &modular_coloring(n)).is_proper();
            assert_eq!(proper, n % 6 == 1 || n % 6 == 5, "n = {n}");
        }
    }

    #[test]
    fn six_has_a_monochromatic_edge() {
        let g = QueensGraph::new(6).unwrap();
        match verify_coloring(&g, &modular_coloring(6)) {
            ColoringCheck::Monochromatic { u, v } => {
                assert!(g.is_adjacent(u, v));
                assert_eq!(modular_coloring(6).color[u], modular_coloring(6).color[v]);
            }
            other => panic!("expected a conflict, got {other:?}"),
        }
    }

    #[test]
    fn bad_colourings() {
        let g = QueensGraph::new(2).unwrap();
        let same = Coloring { k: 1, color: vec![0; 4] };
        assert!(matches!(verify_coloring(&g, &same), ColoringCheck::Monochromatic { .. }));
        let short = Coloring { k: 4, color: vec![0, 1] };
        assert!(matches!(verify_coloring(&g, &short), ColoringCheck::WrongLength { .. }));
        let wide = Coloring { k: 2, color: vec![0, 1, 2, 3] };
        assert!(matches!(verify_coloring(&g, &wide), ColoringCheck::ColorOutOfRange { vertex: 2, .. }));
    }

    #[test]
    fn dsatur_is_proper() {
        for n in 2..=9 {
            let g = QueensGraph::new(n).unwrap();
            assert!(verify_coloring(&g, &dsatur_coloring(&g)).is_proper());
        }
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(dsatur_coloring(&c5).k, 3);
    }

    #[test]
    fn chromatic_small() {
        for (n, chi) in [(1, 1), (2, 4), (3, 5), (4, 5), (5, 5)] {
            let g = QueensGraph::new(n).unwrap();
            let r = chromatic_number_exact(&g, SearchLimits::UNLIMITED);
            assert!(r.optimal);
            assert_eq!(r.upper, chi, "n = {n}");
            assert!(verify_coloring(&g, &r.coloring).is_proper());
        }
        let r = chromatic_number_exact(&SimpleGraph::cycle(7), SearchLimits::UNLIMITED);
        assert_eq!((r.lower, r.upper), (3, 3));
    }
}
