//! Unit-distance embeddings built from proper colorings.
//!
//! Color `c` owns coordinates `2c` and `2c + 1`. Its vertices sit on the
//! circle of radius `1/sqrt(2)` in that plane at equally spaced angles, so
//! two differently colored vertices are exactly at distance one.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt::Write as _;

use serde::Serialize;

use crate::coloring::{
    chromatic_number_capped, decomposition_coloring_capped, log2_ceil_rounds, Coloring,
};
use crate::dimension::dim_exact_capped;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Embedding {
    pub ambient_dim: usize,
    pub colors: Vec<usize>,
    pub points: Vec<Vec<f64>>,
}

impl Embedding {
    /// One line per vertex: `v c x_0 .. x_{2k-1}`, 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, (c, p)) in self.colors.iter().zip(&self.points).enumerate() {
            write!(out, "{v} {c}").unwrap();
            for x in p {
                write!(out, " {x:.16e}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Places every vertex on its color's circle.
pub fn eht_embed(g: &Graph, col: &Coloring) -> Result<Embedding> {
    if !col.is_proper(g) {
        return Err(Error::domain("coloring is not proper for this graph"));
    }
    let k = col.palette_size;
    let mut class_size = vec![0usize; k];
    for &c in &col.colors {
        class_size[c] += 1;
    }
    let mut seen = vec![0usize; k];
    let points = col
        .colors
        .iter()
        .map(|&c| {
            let j = seen[c];
            seen[c] += 1;
            let angle = TAU * j as f64 / class_size[c] as f64;
            let mut p = vec![0.0; 2 * k];
            p[2 * c] = FRAC_1_SQRT_2 * angle.cos();
            p[2 * c + 1] = FRAC_1_SQRT_2 * angle.sin();
            p
        })
        .collect();
    Ok(Embedding {
        ambient_dim: 2 * k,
        colors: col.colors.clone(),
        points,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddingCheck {
    pub ambient_dim: usize,
    /// Largest `| |p_u - p_v| - 1 |` over edges; 0 without edges.
    pub max_edge_error: f64,
    /// Smallest distance between two points; absent below two vertices.
    pub min_point_distance: Option<f64>,
    pub unit_edges: bool,
    pub distinct: bool,
}

impl EmbeddingCheck {
    pub fn passed(&self) -> bool {
        self.unit_edges && self.distinct
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Measures edge lengths against one and point separation against `tol`.
pub fn verify_embedding(g: &Graph, emb: &Embedding, tol: f64) -> EmbeddingCheck {
    let pts = &emb.points;
    let covered = pts.len() == g.n() && pts.iter().all(|p| p.len() == emb.ambient_dim);
    let max_edge_error = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| u < pts.len() && v < pts.len())
        .map(|(u, v)| (distance(&pts[u], &pts[v]) - 1.0).abs())
        .fold(0.0, f64::max);
    let mut min_point_distance: Option<f64> = None;
    for u in 0..pts.len() {
        for v in u + 1..pts.len() {
            let d = distance(&pts[u], &pts[v]);
            min_point_distance = Some(min_point_distance.map_or(d, |m| m.min(d)));
        }
    }
    EmbeddingCheck {
        ambient_dim: emb.ambient_dim,
        max_edge_error,
        min_point_distance,
        unit_edges: covered && max_edge_error <= tol,
        distinct: covered && min_point_distance.is_none_or(|d| d > tol),
    }
}

/// Default verification tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EhtBoundReport {
    pub chi: usize,
    pub dim: usize,
    pub log2_ceil: usize,
    /// `2 χ`.
    pub bound_via_chi: usize,
    /// `2 (dim + 1) ceil(log2 n)`.
    pub bound_via_dim: usize,
    pub holds: bool,
    /// Embedding from an optimal coloring; its dimension is `bound_via_chi`.
    pub exact_embedding: Embedding,
    /// Embedding from the halving decomposition coloring.
    pub decomposition_embedding: Embedding,
}

/// Compares the two upper bounds on the unit-distance embedding dimension
/// and builds an embedding for each coloring.
pub fn eht_bound_report(g: &Graph, cap: usize) -> Result<EhtBoundReport> {
    if g.n() == 0 {
        return Err(Error::domain("embedding bound for the empty graph"));
    }
    let (chi, exact) = chromatic_number_capped(g, cap)?;
    let dim = dim_exact_capped(g, cap)?.value;
    let (decomp, _) = decomposition_coloring_capped(g, cap)?;
    let log2_ceil = log2_ceil_rounds(g.n());
    let bound_via_chi = 2 * chi;
    let bound_via_dim = 2 * (dim + 1) * log2_ceil;
    Ok(EhtBoundReport {
        chi,
        dim,
        log2_ceil,
        bound_via_chi,
        bound_via_dim,
        holds: bound_via_chi <= bound_via_dim,
        exact_embedding: eht_embed(g, &exact)?,
        decomposition_embedding: eht_embed(g, &decomp)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{chromatic_number, greedy_coloring};
    use crate::dimension::DEFAULT_CAP;

    #[test]
    fn k2_two_colors() {
        let k2 = Graph::complete(2).unwrap();
        let col = Coloring::from_colors(vec![0, 1]);
        let emb = eht_embed(&k2, &col).unwrap();
        assert_eq!(emb.ambient_dim, 4);
        assert_eq!(emb.points[0], vec![FRAC_1_SQRT_2, 0.0, 0.0, 0.0]);
        assert_eq!(emb.points[1], vec![0.0, 0.0, FRAC_1_SQRT_2, 0.0]);
        assert!((distance(&emb.points[0], &emb.points[1]) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn edgeless_single_circle() {
        let g = Graph::empty(5).unwrap();
        let col = greedy_coloring(&g, &[0, 1, 2, 3, 4]).unwrap();
        let emb = eht_embed(&g, &col).unwrap();
        assert_eq!(emb.ambient_dim, 2);
        let chk = verify_embedding(&g, &emb, DEFAULT_TOL);
        assert!(chk.passed());
        for p in &emb.points {
            assert!((p[0] * p[0] + p[1] * p[1] - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn c5_three_colors() {
        let c5 = Graph::cycle(5).unwrap();
        let (_, col) = chromatic_number(&c5).unwrap();
        let emb = eht_embed(&c5, &col).unwrap();
        assert_eq!(emb.ambient_dim, 6);
        let chk = verify_embedding(&c5, &emb, DEFAULT_TOL);
        assert!(chk.passed(), "{chk:?}");
        assert!(chk.max_edge_error <= 1e-9);
    }

    #[test]
    fn rejects_improper_coloring() {
        let k2 = Graph::complete(2).unwrap();
        assert!(eht_embed(&k2, &Coloring::from_colors(vec![0, 0])).is_err());
    }

    #[test]
    fn verifier_flags_bad_embeddings() {
        let k4 = Graph::complete(4).unwrap();
        let (_, col) = chromatic_number(&k4).unwrap();
        assert!(verify_embedding(&k4, &eht_embed(&k4, &col).unwrap(), 1e-9).passed());

        let k2 = Graph::complete(2).unwrap();
        let far = Embedding {
            ambient_dim: 1,
            colors: vec![0, 1],
            points: vec![vec![0.0], vec![2.0]],
        };
        let chk = verify_embedding(&k2, &far, 1e-9);
        assert!(!chk.unit_edges && chk.distinct);

        let e2 = Graph::empty(2).unwrap();
        let same = Embedding {
            ambient_dim: 2,
            colors: vec![0, 0],
            points: vec![vec![0.5, 0.0], vec![0.5, 0.0]],
        };
        let chk = verify_embedding(&e2, &same, 1e-9);
        assert!(chk.unit_edges && !chk.distinct);
    }

    #[test]
    fn bound_examples() {
        let r = eht_bound_report(&Graph::cycle(5).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!((r.bound_via_chi, r.bound_via_dim), (6, 12));
        let r = eht_bound_report(&Graph::complete(4).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!((r.bound_via_chi, r.bound_via_dim), (8, 12));
        let r = eht_bound_report(&Graph::complete(2).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!((r.bound_via_chi, r.bound_via_dim), (4, 4));
        assert!(r.holds);
        assert_eq!(r.exact_embedding.ambient_dim, 4);
    }

    #[test]
    fn text_format() {
        let k2 = Graph::complete(2).unwrap();
        let emb = eht_embed(&k2, &Coloring::from_colors(vec![0, 1])).unwrap();
        let text = emb.to_text();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        let fields: Vec<_> = lines[1].split(' ').collect();
        assert_eq!(fields.len(), 2 + 4);
        assert_eq!(fields[0..2], ["1", "1"]);
        let x: f64 = fields[4].parse().unwrap();
        assert_eq!(x, FRAC_1_SQRT_2);
    }
}
