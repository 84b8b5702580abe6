//! Exact sub-dimension and dimension.
//!
//! For a host set `S` of size `m`, the sub-dimension is the least maximum
//! induced degree over subsets of `S` with at least `m/2 + 1` (floor)
//! vertices. Adding vertices never lowers the induced maximum degree, so
//! it is enough to look at subsets of exactly that size. The dimension is
//! the largest sub-dimension over all nonempty vertex subsets.
//!
//! Two routes compute the sub-dimension: [`subdim_naive`] enumerates
//! every candidate subset, [`subdim`] scans the degree bound upward and
//! answers each step with the pruned search in [`subdim_exists`]. Both
//! return the minimizer with the smallest bit pattern, so their
//! certificates are directly comparable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{combinations_within, VertexSet};

/// Default vertex cap for the exponential solvers.
pub const DEFAULT_CAP: usize = 16;

/// Certificate for `subdim(G[host]) = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdimCertificate {
    pub value: usize,
    /// A subset of the host of size `host_size / 2 + 1` whose induced
    /// maximum degree is `value`.
    pub witness_min: VertexSet,
    pub host_size: usize,
}

impl SubdimCertificate {
    /// Replays the upper-bound witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.witness_min.len() == half_size(self.host_size)
            && g.max_degree_within(self.witness_min) == self.value
    }
}

/// Certificate for `dim(G) = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimCertificate {
    pub value: usize,
    /// A vertex set whose induced subgraph attains the maximum.
    pub witness_max: VertexSet,
    /// Sub-dimension certificate of `G[witness_max]`; absent only for the
    /// empty graph.
    pub inner: Option<SubdimCertificate>,
}

impl DimCertificate {
    /// Replays both witnesses: `inner` must be a valid certificate for
    /// `witness_max`, with a value matching the oracle.
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.inner {
            None => self.value == 0 && self.witness_max.is_empty(),
            Some(inner) => {
                inner.value == self.value
                    && inner.host_size == self.witness_max.len()
                    && inner.witness_min.is_subset(self.witness_max)
                    && inner.verify(g)
                    && subdim(g, self.witness_max).map(|c| c.value).ok() == Some(self.value)
            }
        }
    }
}

/// Size threshold `m / 2 + 1` for a host of size `m`.
#[inline]
pub fn half_size(m: usize) -> usize {
    m / 2 + 1
}

fn check_host(g: &Graph, host: VertexSet) -> Result<()> {
    g.check_set(host)?;
    if host.is_empty() {
        return Err(Error::domain("sub-dimension of an empty vertex set"));
    }
    Ok(())
}

/// Sub-dimension by full enumeration of the `|host|/2 + 1`-subsets.
pub fn subdim_naive(g: &Graph, host: VertexSet) -> Result<SubdimCertificate> {
    check_host(g, host)?;
    let s = half_size(host.len());
    let mut best: Option<(usize, VertexSet)> = None;
    for t in combinations_within(host, s) {
        let delta = g.max_degree_within(t);
        if best.is_none_or(|(b, _)| delta < b) {
            best = Some((delta, t));
            if delta == 0 {
                break;
            }
        }
    }
    let (value, witness_min) = best.expect("at least one subset of the threshold size");
    Ok(SubdimCertificate {
        value,
        witness_min,
        host_size: host.len(),
    })
}

/// Decides whether some `size`-subset of `host` induces maximum degree at
/// most `max_deg`, returning the one with the smallest bit pattern.
///
/// The search fixes host members from the highest id down, trying
/// exclusion before inclusion, so the first hit is the numerically least
/// witness. A branch dies when the chosen vertices plus the still-usable
/// undecided ones cannot reach `size`; an undecided vertex is unusable
/// once it has more than `max_deg` chosen neighbors or is adjacent to a
/// chosen vertex already at `max_deg`.
pub fn subdim_exists(g: &Graph, host: VertexSet, size: usize, max_deg: usize) -> Option<VertexSet> {
    let host = host.intersection(g.vertices());
    if size > host.len() {
        return None;
    }
    let mut members = host.to_vec();
    members.reverse();
    // suffix[i] = members[i..] as a set
    let mut suffix = vec![VertexSet::EMPTY; members.len() + 1];
    for i in (0..members.len()).rev() {
        suffix[i] = suffix[i + 1].with(members[i]);
    }
    let search = BoundedDegreeSearch {
        g,
        members: &members,
        suffix: &suffix,
        size,
        max_deg,
    };
    search.run(0, VertexSet::EMPTY)
}

struct BoundedDegreeSearch<'a> {
    g: &'a Graph,
    members: &'a [usize],
    suffix: &'a [VertexSet],
    size: usize,
    max_deg: usize,
}

impl BoundedDegreeSearch<'_> {
    fn run(&self, idx: usize, chosen: VertexSet) -> Option<VertexSet> {
        if chosen.len() == self.size {
            return Some(chosen);
        }
        let undecided = self.suffix[idx];
        if chosen.len() + undecided.len() < self.size {
            return None;
        }

        let mut blocked = VertexSet::EMPTY;
        for u in chosen {
            if self.g.neighbors(u).intersection(chosen).len() >= self.max_deg {
                blocked = blocked.union(self.g.neighbors(u));
            }
        }
        for w in undecided.difference(blocked) {
            if self.g.neighbors(w).intersection(chosen).len() > self.max_deg {
                blocked.insert(w);
            }
        }
        let usable = undecided.difference(blocked);
        if chosen.len() + usable.len() < self.size {
            return None;
        }

        let v = self.members[idx];
        if let Some(found) = self.run(idx + 1, chosen) {
            return Some(found);
        }
        if usable.contains(v) {
            return self.run(idx + 1, chosen.with(v));
        }
        None
    }
}

/// Sub-dimension via an ascending scan of the degree bound, each step
/// decided by [`subdim_exists`]. The witness equals the one returned by
/// [`subdim_naive`].
pub fn subdim(g: &Graph, host: VertexSet) -> Result<SubdimCertificate> {
    check_host(g, host)?;
    Ok(subdim_from(g, host, 0))
}

/// Scan starting at `lower`, which must not exceed the true value.
fn subdim_from(g: &Graph, host: VertexSet, lower: usize) -> SubdimCertificate {
    let s = half_size(host.len());
    let top = g.max_degree_within(host);
    for d in lower..=top {
        if let Some(witness_min) = subdim_exists(g, host, s, d) {
            return SubdimCertificate {
                value: d,
                witness_min,
                host_size: host.len(),
            };
        }
    }
    unreachable!("any {s}-subset of the host has induced degree at most {top}")
}

/// The minimizing half-plus-one subset behind `subdim(g, host)`.
pub fn half_witness(g: &Graph, host: VertexSet) -> Result<VertexSet> {
    subdim(g, host).map(|c| c.witness_min)
}

/// Exact dimension with the default vertex cap.
pub fn dim_exact(g: &Graph) -> Result<DimCertificate> {
    dim_exact_capped(g, DEFAULT_CAP)
}

/// Exact dimension; refuses graphs with more than `cap` vertices.
///
/// Subsets are visited by decreasing size, then increasing bit pattern,
/// and the incumbent only moves on strict improvement, so the reported
/// `witness_max` is the first maximizer in that order. A subset is
/// skipped when its induced maximum degree does not beat the incumbent,
/// or when a half-plus-one subset within the incumbent bound exists. A
/// set of size `m` has sub-dimension at most `m / 2`, which ends the
/// scan once sizes get small.
pub fn dim_exact_capped(g: &Graph, cap: usize) -> Result<DimCertificate> {
    let n = g.n();
    if n > cap {
        return Err(Error::Cap {
            what: "dim_exact",
            size: n,
            cap,
        });
    }
    if n == 0 {
        return Ok(DimCertificate {
            value: 0,
            witness_max: VertexSet::EMPTY,
            inner: None,
        });
    }

    let all = g.vertices();
    let top = g.max_degree();
    let mut best = subdim_from(g, all, 0);
    let mut best_set = all;

    'sizes: for m in (1..n).rev() {
        if best.value >= top || m / 2 <= best.value {
            break 'sizes;
        }
        let s = half_size(m);
        for set in combinations_within(all, m) {
            if g.max_degree_within(set) <= best.value {
                continue;
            }
            if subdim_exists(g, set, s, best.value).is_some() {
                continue;
            }
            best = subdim_from(g, set, best.value + 1);
            best_set = set;
            if best.value >= top || m / 2 <= best.value {
                break 'sizes;
            }
        }
    }

    Ok(DimCertificate {
        value: best.value,
        witness_max: best_set,
        inner: Some(best),
    })
}

/// Cheap sandwich `subdim(G) <= dim(G) <= Δ(G)`. The empty graph gives
/// `(0, 0)`.
pub fn dim_bounds(g: &Graph) -> (usize, usize) {
    if g.n() == 0 {
        return (0, 0);
    }
    let lower = subdim_from(g, g.vertices(), 0).value;
    (lower, g.max_degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn naive_worked_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(subdim_naive(&k5, k5.vertices()).unwrap().value, 2);

        let c5 = Graph::cycle(5).unwrap();
        let c = subdim_naive(&c5, c5.vertices()).unwrap();
        assert_eq!(c.value, 1);
        assert_eq!(c.witness_min, set(&[0, 1, 3]));

        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(subdim_naive(&k23, k23.vertices()).unwrap().value, 0);

        let k1 = Graph::complete(1).unwrap();
        let c = subdim_naive(&k1, set(&[0])).unwrap();
        assert_eq!((c.value, c.witness_min), (0, set(&[0])));
    }

    #[test]
    fn empty_host_is_domain_error() {
        let g = Graph::path(3).unwrap();
        assert!(matches!(
            subdim_naive(&g, VertexSet::EMPTY),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            subdim(&g, VertexSet::EMPTY),
            Err(Error::Domain(_))
        ));
        assert!(half_witness(&g, VertexSet::EMPTY).is_err());
        assert!(subdim(&g, set(&[0, 5])).is_err());
    }

    #[test]
    fn exists_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(subdim_exists(&c4, c4.vertices(), 3, 1), None);
        let w = subdim_exists(&c4, c4.vertices(), 3, 2).unwrap();
        assert_eq!(w.len(), 3);
        let q4 = Graph::hypercube(4).unwrap();
        assert_eq!(subdim_exists(&q4, q4.vertices(), 9, 1), None);
        let w = subdim_exists(&q4, q4.vertices(), 9, 2).unwrap();
        assert!(q4.max_degree_within(w) <= 2);
        assert_eq!(subdim_exists(&c4, c4.vertices(), 5, 4), None);
        assert_eq!(
            subdim_exists(&c4, c4.vertices(), 0, 0),
            Some(VertexSet::EMPTY)
        );
    }

    #[test]
    fn subdim_examples() {
        let q3 = Graph::hypercube(3).unwrap();
        assert_eq!(subdim(&q3, q3.vertices()).unwrap().value, 2);
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(subdim(&k33, k33.vertices()).unwrap().value, 2);
        let p6 = Graph::path(6).unwrap();
        let c = subdim(&p6, p6.vertices()).unwrap();
        assert_eq!((c.value, c.witness_min), (1, set(&[0, 1, 3, 4])));
    }

    #[test]
    fn half_witness_examples() {
        let p4 = Graph::path(4).unwrap();
        let w = half_witness(&p4, p4.vertices()).unwrap();
        assert!(w == set(&[0, 1, 3]) || w == set(&[0, 2, 3]));
        assert_eq!(p4.max_degree_within(w), 1);

        let k4 = Graph::complete(4).unwrap();
        let w = half_witness(&k4, k4.vertices()).unwrap();
        assert_eq!((w.len(), k4.max_degree_within(w)), (3, 2));

        let q3 = Graph::hypercube(3).unwrap();
        let w = half_witness(&q3, q3.vertices()).unwrap();
        assert_eq!((w.len(), q3.max_degree_within(w)), (5, 2));
    }

    #[test]
    fn dim_examples() {
        for n in 4..=10 {
            assert_eq!(
                dim_exact(&Graph::path(n).unwrap()).unwrap().value,
                1,
                "P_{n}"
            );
        }
        for n in 5..=10 {
            assert_eq!(
                dim_exact(&Graph::cycle(n).unwrap()).unwrap().value,
                1,
                "C_{n}"
            );
        }
        assert_eq!(dim_exact(&Graph::complete(6).unwrap()).unwrap().value, 3);
        assert_eq!(
            dim_exact(&Graph::complete_bipartite(2, 3).unwrap())
                .unwrap()
                .value,
            2
        );
        assert_eq!(dim_exact(&Graph::hypercube(2).unwrap()).unwrap().value, 2);
        assert_eq!(dim_exact(&Graph::hypercube(3).unwrap()).unwrap().value, 2);
        assert_eq!(dim_exact(&Graph::empty(5).unwrap()).unwrap().value, 0);
    }

    #[test]
    fn dim_of_empty_graph() {
        let c = dim_exact(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!(c.value, 0);
        assert!(c.witness_max.is_empty() && c.inner.is_none());
        assert!(c.verify(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn dim_cap() {
        let g = Graph::path(17).unwrap();
        match dim_exact(&g) {
            Err(Error::Cap { size, cap, .. }) => assert_eq!((size, cap), (17, 16)),
            other => panic!("expected cap error, got {other:?}"),
        }
        assert!(dim_exact_capped(&g, 17).is_ok());
    }

    #[test]
    fn dim_witness_is_attained_subgraph() {
        // K_{2,3}: full set has subdim 0, the maximum comes from a K_{2,2}
        let g = Graph::complete_bipartite(2, 3).unwrap();
        let c = dim_exact(&g).unwrap();
        assert_eq!(c.witness_max.len(), 4);
        assert!(c.verify(&g));
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(
            dim_bounds(&Graph::complete_bipartite(2, 3).unwrap()),
            (0, 3)
        );
        assert_eq!(dim_bounds(&Graph::complete(6).unwrap()), (3, 5));
        assert_eq!(dim_bounds(&Graph::cycle(5).unwrap()), (1, 2));
        assert_eq!(dim_bounds(&Graph::empty(0).unwrap()), (0, 0));
    }
}
