//! Proper colorings: first-fit greedy, exact chromatic number, critical
//! subgraphs, and the halving decomposition coloring whose palette is
//! bounded by `(dim + 1) * ceil(log2 n)`.

use serde::Serialize;

use crate::dimension::{half_witness, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph};
use crate::vertex_set::VertexSet;

/// A total vertex coloring with colors `0..palette_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    /// Wraps raw colors, relabeling them in order of first appearance so
    /// that no palette entry is left unused.
    pub fn from_colors(raw: Vec<usize>) -> Coloring {
        let mut relabel = std::collections::HashMap::new();
        let colors: Vec<usize> = raw
            .into_iter()
            .map(|c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            palette_size: relabel.len(),
        }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// True when the map covers `g` and no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.palette_size)
            && g.edges()
                .into_iter()
                .all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }
}

/// First-fit greedy coloring in the given vertex order.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    check_permutation(order, g.n())?;
    let mut colors = vec![usize::MAX; g.n()];
    let mut palette = 0;
    for &v in order {
        let c = first_free(g, g.vertices(), &colors, v);
        colors[v] = c;
        palette = palette.max(c + 1);
    }
    Ok(Coloring {
        colors,
        palette_size: palette,
    })
}

/// Smallest color not used by any colored neighbor of `v` inside `within`.
fn first_free(g: &Graph, within: VertexSet, colors: &[usize], v: usize) -> usize {
    let mut used = 0u128;
    for u in g.neighbors(v).intersection(within) {
        if colors[u] < 128 {
            used |= 1 << colors[u];
        }
    }
    (!used).trailing_zeros() as usize
}

/// Chromatic number with the default cap.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    chromatic_number_capped(g, DEFAULT_CAP)
}

/// Exact chromatic number with an optimal coloring as certificate.
///
/// A largest-degree-first greedy coloring gives the starting upper bound
/// and a maximum clique the lower bound; the gap is closed by backtracking
/// in DSATUR order.
pub fn chromatic_number_capped(g: &Graph, cap: usize) -> Result<(usize, Coloring)> {
    if g.n() > cap {
        return Err(Error::Cap {
            what: "chromatic_number",
            size: g.n(),
            cap,
        });
    }
    if g.n() == 0 {
        return Ok((0, Coloring::from_colors(Vec::new())));
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = greedy_coloring(g, &order)?;
    let lower = max_clique(g, g.vertices()).len();

    for k in lower..best.palette_size {
        if let Some(colors) = k_coloring(g, k) {
            best = Coloring::from_colors(colors);
            break;
        }
    }
    Ok((best.palette_size, best))
}

/// A largest clique of `G[within]`, by simple branch and bound.
pub fn max_clique(g: &Graph, within: VertexSet) -> VertexSet {
    fn expand(g: &Graph, current: VertexSet, cand: VertexSet, best: &mut VertexSet) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current;
            }
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            if current.len() + cand.len() <= best.len() {
                return;
            }
            expand(g, current.with(v), cand.intersection(g.neighbors(v)), best);
            cand.remove(v);
        }
        if current.len() > best.len() {
            *best = current;
        }
    }
    let mut best = VertexSet::EMPTY;
    expand(
        g,
        VertexSet::EMPTY,
        within.intersection(g.vertices()),
        &mut best,
    );
    best
}

/// Backtracking `k`-coloring: next vertex by saturation, then degree,
/// then id; a fresh color is only ever the next unused index.
fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, k: usize, colors: &mut [usize], left: usize, used: usize) -> bool {
        if left == 0 {
            return true;
        }
        let mut pick = None;
        let mut pick_key = (0usize, 0usize);
        for v in 0..g.n() {
            if colors[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u64;
            for u in g.neighbors(v) {
                if colors[u] != usize::MAX {
                    seen |= 1 << colors[u];
                }
            }
            let key = (seen.count_ones() as usize, g.degree(v));
            if pick.is_none() || key > pick_key {
                pick = Some((v, seen));
                pick_key = key;
            }
        }
        let (v, seen) = pick.expect("an uncolored vertex remains");
        for c in 0..k.min(used + 1) {
            if seen >> c & 1 == 0 {
                colors[v] = c;
                if go(g, k, colors, left - 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        colors[v] = usize::MAX;
        false
    }
    if k > 64 {
        return None;
    }
    let mut colors = vec![usize::MAX; g.n()];
    go(g, k, &mut colors, g.n(), 0).then_some(colors)
}

/// `χ(G[set])`.
pub fn chromatic_number_within(g: &Graph, set: VertexSet, cap: usize) -> Result<usize> {
    let (h, _) = g.induced_subgraph(set);
    chromatic_number_capped(&h, cap).map(|(k, _)| k)
}

/// Shrinks the vertex set to a color-critical induced subgraph with the
/// same chromatic number: scan ids upward, drop the first vertex whose
/// removal keeps χ, restart; stop when no vertex can go.
pub fn critical_subgraph(g: &Graph) -> Result<VertexSet> {
    critical_subgraph_capped(g, DEFAULT_CAP)
}

pub fn critical_subgraph_capped(g: &Graph, cap: usize) -> Result<VertexSet> {
    if g.n() == 0 {
        return Err(Error::domain("critical subgraph of the empty graph"));
    }
    let target = chromatic_number_capped(g, cap)?.0;
    let mut set = g.vertices();
    'outer: loop {
        for v in set {
            if chromatic_number_within(g, set.without(v), cap)? == target {
                set.remove(v);
                continue 'outer;
            }
        }
        return Ok(set);
    }
}

/// Every member of `set` has induced degree at least `χ(G[set]) - 1`.
pub fn min_degree_check(g: &Graph, set: VertexSet) -> Result<bool> {
    g.check_set(set)?;
    if set.is_empty() {
        return Err(Error::domain("min-degree check on an empty set"));
    }
    let chi = chromatic_number_within(g, set, crate::vertex_set::MAX_VERTICES)?;
    Ok(set
        .iter()
        .all(|v| g.neighbors(v).intersection(set).len() + 1 >= chi))
}

/// One halving round of [`decomposition_coloring`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Round {
    pub chunk: VertexSet,
    /// Maximum induced degree of the chunk.
    pub chunk_delta: usize,
    /// First color index of this round's palette.
    pub palette_offset: usize,
    /// Colors actually used inside the chunk (at most `chunk_delta + 1`).
    pub colors_used: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecompositionTrace {
    pub rounds: Vec<Round>,
}

impl DecompositionTrace {
    /// Checks the trace against `g`: chunks partition the vertices, each
    /// chunk is at least half-plus-one of what remained, and the palettes
    /// are contiguous.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        let mut remaining = g.vertices();
        let mut offset = 0;
        for r in &self.rounds {
            if !r.chunk.is_subset(remaining)
                || r.chunk.len() < remaining.len() / 2 + 1
                || r.palette_offset != offset
                || g.max_degree_within(r.chunk) != r.chunk_delta
                || r.colors_used > r.chunk_delta + 1
            {
                return false;
            }
            remaining = remaining.difference(r.chunk);
            offset += r.colors_used;
        }
        remaining.is_empty()
    }
}

/// `max(1, ceil(log2 n))` for `n >= 1`; 0 for `n = 0`.
///
/// The plain `ceil(log2 1) = 0` would make the decomposition bound
/// vacuous on a single vertex, so one round is allowed there.
pub fn log2_ceil_rounds(n: usize) -> usize {
    match n {
        0 => 0,
        1 => 1,
        _ => (usize::BITS - (n - 1).leading_zeros()) as usize,
    }
}

/// Colors `g` by repeated halving: take the minimizing half-plus-one
/// subset of the remaining vertices, color it greedily by ascending id
/// with a fresh block of colors, remove it, and repeat.
pub fn decomposition_coloring(g: &Graph) -> Result<(Coloring, DecompositionTrace)> {
    decomposition_coloring_capped(g, DEFAULT_CAP)
}

pub fn decomposition_coloring_capped(
    g: &Graph,
    cap: usize,
) -> Result<(Coloring, DecompositionTrace)> {
    if g.n() == 0 {
        return Err(Error::domain("decomposition coloring of the empty graph"));
    }
    if g.n() > cap {
        return Err(Error::Cap {
            what: "decomposition_coloring",
            size: g.n(),
            cap,
        });
    }
    let mut colors = vec![usize::MAX; g.n()];
    let mut remaining = g.vertices();
    let mut trace = DecompositionTrace::default();
    let mut offset = 0;
    while !remaining.is_empty() {
        let chunk = half_witness(g, remaining)?;
        let mut local = vec![usize::MAX; g.n()];
        let mut used = 0;
        for v in chunk {
            let c = first_free(g, chunk, &local, v);
            local[v] = c;
            used = used.max(c + 1);
        }
        for v in chunk {
            colors[v] = offset + local[v];
        }
        trace.rounds.push(Round {
            chunk,
            chunk_delta: g.max_degree_within(chunk),
            palette_offset: offset,
            colors_used: used,
        });
        offset += used;
        remaining = remaining.difference(chunk);
    }
    Ok((
        Coloring {
            colors,
            palette_size: offset,
        },
        trace,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::dim_exact;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn identity(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    fn k4_plus_pendant() -> Graph {
        let mut edges: Vec<_> = Graph::complete(4).unwrap().edges();
        edges.push((3, 4));
        Graph::from_edges(5, edges).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let col = greedy_coloring(&c5, &identity(5)).unwrap();
        assert!(col.is_proper(&c5) && col.palette_size <= 3);

        let k4 = Graph::complete(4).unwrap();
        let col = greedy_coloring(&k4, &[3, 1, 0, 2]).unwrap();
        assert!(col.is_proper(&k4));
        assert_eq!(col.palette_size, 4);

        let e = Graph::empty(6).unwrap();
        assert_eq!(greedy_coloring(&e, &identity(6)).unwrap().palette_size, 1);
    }

    #[test]
    fn greedy_rejects_bad_order() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(
            greedy_coloring(&c5, &[0, 1, 2, 3]),
            Err(Error::Domain(_))
        ));
        assert!(greedy_coloring(&c5, &[0, 1, 2, 3, 3]).is_err());
    }

    #[test]
    fn chromatic_examples() {
        let check = |g: Graph, k: usize| {
            let (chi, col) = chromatic_number(&g).unwrap();
            assert_eq!(chi, k);
            assert!(col.is_proper(&g));
            assert_eq!(col.palette_size, k);
        };
        check(Graph::cycle(5).unwrap(), 3);
        check(Graph::complete_bipartite(3, 3).unwrap(), 2);
        check(Graph::hypercube(3).unwrap(), 2);
        check(Graph::complete(6).unwrap(), 6);
        check(Graph::empty(4).unwrap(), 1);
        check(Graph::empty(0).unwrap(), 0);
        // Grötzsch-free sanity: odd wheel W_5 (hub 5) needs 4
        let mut w = Graph::cycle(5).unwrap().edges();
        w.extend((0..5).map(|i| (i, 5)));
        check(Graph::from_edges(6, w).unwrap(), 4);
    }

    #[test]
    fn chromatic_cap() {
        let g = Graph::path(17).unwrap();
        assert!(matches!(chromatic_number(&g), Err(Error::Cap { .. })));
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(
            max_clique(&k4_plus_pendant(), set(&[0, 1, 2, 3, 4])).len(),
            4
        );
        assert_eq!(
            max_clique(&Graph::cycle(5).unwrap(), VertexSet::full(5)).len(),
            2
        );
    }

    #[test]
    fn critical_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(critical_subgraph(&c5).unwrap(), c5.vertices());

        let g = k4_plus_pendant();
        assert_eq!(critical_subgraph(&g).unwrap(), set(&[0, 1, 2, 3]));

        let star = Graph::complete_bipartite(1, 3).unwrap();
        let s = critical_subgraph(&star).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(star.edge_count_within(s), 1);
    }

    #[test]
    fn min_degree_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(min_degree_check(&c5, critical_subgraph(&c5).unwrap()).unwrap());
        let g = k4_plus_pendant();
        assert!(min_degree_check(&g, critical_subgraph(&g).unwrap()).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert!(min_degree_check(&p3, p3.vertices()).unwrap());
        // pendant vertex breaks the condition on the whole graph
        assert!(!min_degree_check(&g, g.vertices()).unwrap());
        assert!(min_degree_check(&g, VertexSet::EMPTY).is_err());
    }

    #[test]
    fn log2_rounds() {
        let got: Vec<_> = (0..=9).map(log2_ceil_rounds).collect();
        assert_eq!(got, vec![0, 1, 1, 2, 2, 3, 3, 3, 3, 4]);
        assert_eq!(log2_ceil_rounds(64), 6);
        assert_eq!(log2_ceil_rounds(65), 7);
    }

    #[test]
    fn decomposition_examples() {
        let k4 = Graph::complete(4).unwrap();
        let (col, trace) = decomposition_coloring(&k4).unwrap();
        assert!(col.is_proper(&k4) && trace.is_consistent(&k4));
        assert!(col.palette_size <= 6);

        let p8 = Graph::path(8).unwrap();
        let (col, trace) = decomposition_coloring(&p8).unwrap();
        assert!(col.is_proper(&p8) && trace.is_consistent(&p8));
        assert!(col.palette_size <= 6);
        assert!(trace.rounds.len() <= 3);
        assert!(chromatic_number(&p8).unwrap().0 <= col.palette_size);

        let k1 = Graph::complete(1).unwrap();
        let (col, trace) = decomposition_coloring(&k1).unwrap();
        assert_eq!((col.palette_size, trace.rounds.len()), (1, 1));
    }

    #[test]
    fn decomposition_chunks_stay_below_dim() {
        for g in [
            Graph::hypercube(3).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::cycle(7).unwrap(),
        ] {
            let dim = dim_exact(&g).unwrap().value;
            let (_, trace) = decomposition_coloring(&g).unwrap();
            assert!(trace.rounds.iter().all(|r| r.chunk_delta <= dim));
        }
    }

    #[test]
    fn from_colors_closes_gaps() {
        let c = Coloring::from_colors(vec![4, 4, 9, 0]);
        assert_eq!(c.colors, vec![0, 0, 1, 2]);
        assert_eq!(c.palette_size, 3);
        assert_eq!(c.class(0), set(&[0, 1]));
    }
}
