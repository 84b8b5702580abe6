//! JSON reports for the `compute` and `embed` commands.

use serde::Serialize;

use crate::coloring::{
    chromatic_number_capped, decomposition_coloring_capped, log2_ceil_rounds, Coloring,
    DecompositionTrace,
};
use crate::dimension::{dim_bounds, dim_exact_capped, subdim, DimCertificate, SubdimCertificate};
use crate::embedding::{
    eht_bound_report, eht_embed, verify_embedding, EmbeddingCheck, DEFAULT_TOL,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::encode_graph6;

/// Which quantities `compute` should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Subdim,
    Dim,
    Chi,
    All,
}

impl std::str::FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subdim" => Ok(Which::Subdim),
            "dim" => Ok(Which::Dim),
            "chi" => Ok(Which::Chi),
            "all" => Ok(Which::All),
            _ => Err(Error::domain(format!(
                "unknown quantity {s:?} (expected subdim, dim, chi or all)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiReport {
    pub value: usize,
    pub coloring: Coloring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub coloring: Coloring,
    pub trace: DecompositionTrace,
    /// `(dim + 1) * max(1, ceil(log2 n))`.
    pub palette_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddingSummary {
    pub bound_via_chi: usize,
    pub bound_via_dim: usize,
    pub holds: bool,
    pub exact: EmbeddingCheck,
    pub decomposition: EmbeddingCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComputeReport {
    pub input: String,
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subdim: Option<SubdimCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<DimCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<ChiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

/// Computes the requested quantities for `g`. Every value carries a
/// certificate that [`ComputeReport::replay`] can check.
pub fn compute(input: &str, g: &Graph, which: Which, cap: usize) -> Result<ComputeReport> {
    let mut report = ComputeReport {
        input: input.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        graph6: encode_graph6(g),
        subdim: None,
        dim: None,
        bounds: None,
        chi: None,
        decomposition: None,
        embedding: None,
        elapsed_ms: None,
    };
    let all = which == Which::All;
    if (all || which == Which::Subdim) && g.n() > 0 {
        report.subdim = Some(subdim(g, g.vertices())?);
    }
    if all || which == Which::Dim {
        report.dim = Some(dim_exact_capped(g, cap)?);
        let (lower, upper) = dim_bounds(g);
        report.bounds = Some(Bounds { lower, upper });
    }
    if all || which == Which::Chi {
        let (value, coloring) = chromatic_number_capped(g, cap)?;
        report.chi = Some(ChiReport { value, coloring });
    }
    if all && g.n() > 0 {
        let dim = report.dim.as_ref().map(|d| d.value).unwrap_or_default();
        let (coloring, trace) = decomposition_coloring_capped(g, cap)?;
        report.decomposition = Some(DecompositionReport {
            coloring,
            trace,
            palette_bound: (dim + 1) * log2_ceil_rounds(g.n()),
        });
        let eht = eht_bound_report(g, cap)?;
        report.embedding = Some(EmbeddingSummary {
            bound_via_chi: eht.bound_via_chi,
            bound_via_dim: eht.bound_via_dim,
            holds: eht.holds,
            exact: verify_embedding(g, &eht.exact_embedding, DEFAULT_TOL),
            decomposition: verify_embedding(g, &eht.decomposition_embedding, DEFAULT_TOL),
        });
    }
    Ok(report)
}

impl ComputeReport {
    /// Feeds every certificate back through the primitives.
    pub fn replay(&self, g: &Graph) -> bool {
        let subdim_ok = self.subdim.as_ref().is_none_or(|c| {
            c.host_size == g.n()
                && c.verify(g)
                && subdim(g, g.vertices()).map(|r| r.value).ok() == Some(c.value)
        });
        let dim_ok = self.dim.as_ref().is_none_or(|c| c.verify(g));
        let chi_ok = self
            .chi
            .as_ref()
            .is_none_or(|c| c.coloring.is_proper(g) && c.coloring.palette_size == c.value);
        let decomp_ok = self.decomposition.as_ref().is_none_or(|d| {
            d.coloring.is_proper(g)
                && d.trace.is_consistent(g)
                && d.coloring.palette_size <= d.palette_bound
        });
        subdim_ok && dim_ok && chi_ok && decomp_ok
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbedReport {
    pub input: String,
    pub chi: usize,
    pub ambient_dim: usize,
    pub output: String,
    pub check: EmbeddingCheck,
}

/// Builds the embedding from an optimal coloring, writes it to `out`, and
/// returns the verification summary.
pub fn embed_to_file(
    input: &str,
    g: &Graph,
    out: &std::path::Path,
    cap: usize,
) -> Result<EmbedReport> {
    let (chi, coloring) = chromatic_number_capped(g, cap)?;
    let emb = eht_embed(g, &coloring)?;
    std::fs::write(out, emb.to_text())?;
    Ok(EmbedReport {
        input: input.to_string(),
        chi,
        ambient_dim: emb.ambient_dim,
        output: out.display().to_string(),
        check: verify_embedding(g, &emb, DEFAULT_TOL),
    })
}
