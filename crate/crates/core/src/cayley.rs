//! Cayley graphs of finite abelian groups `Z_{n_1} x .. x Z_{n_k}` and
//! translation arguments over them.
//!
//! Elements are encoded in mixed radix with component 0 as the least
//! significant digit, so `Z_2^d` with the unit vectors gives exactly
//! [`Graph::hypercube`].

use serde::Serialize;

use crate::dimension::{subdim, DimCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    orders: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::domain("group needs at least one cyclic factor"));
        }
        if orders.contains(&0) {
            return Err(Error::domain("cyclic factor orders must be >= 1"));
        }
        let size = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o))
            .filter(|&s| s <= MAX_VERTICES)
            .ok_or_else(|| Error::domain(format!("group order exceeds {MAX_VERTICES} elements")))?;
        debug_assert!(size >= 1);
        Ok(AbelianGroup { orders })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        AbelianGroup::new(vec![n])
    }

    /// `Z_2^d`.
    pub fn boolean(d: usize) -> Result<Self> {
        AbelianGroup::new(vec![2; d])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn elements(&self) -> VertexSet {
        VertexSet::full(self.size())
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Residue tuple of element `x`.
    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&o| {
                let r = x % o;
                x /= o;
                r
            })
            .collect()
    }

    /// Element id of a residue tuple; residues are reduced modulo their
    /// factor orders.
    pub fn encode(&self, residues: &[usize]) -> Result<usize> {
        if residues.len() != self.orders.len() {
            return Err(Error::domain(format!(
                "element has {} components, group has {}",
                residues.len(),
                self.orders.len()
            )));
        }
        Ok(self
            .orders
            .iter()
            .zip(residues)
            .rev()
            .fold(0, |acc, (&o, &r)| acc * o + r % o))
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let mut out = 0;
        let mut place = 1;
        let (mut x, mut y) = (x, y);
        for &o in &self.orders {
            out += ((x % o + y % o) % o) * place;
            place *= o;
            x /= o;
            y /= o;
        }
        out
    }

    pub fn neg(&self, x: usize) -> usize {
        let mut out = 0;
        let mut place = 1;
        let mut x = x;
        for &o in &self.orders {
            out += ((o - x % o) % o) * place;
            place *= o;
            x /= o;
        }
        out
    }
}

/// A symmetric generating multiset without the identity, stored as a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    elements: VertexSet,
}

impl GeneratorSet {
    /// Validates that the set avoids the identity and is closed under
    /// negation.
    pub fn new(grp: &AbelianGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let size = grp.size();
        let mut set = VertexSet::EMPTY;
        for g in elements {
            if g >= size {
                return Err(Error::domain(format!(
                    "generator {g} is not an element of a group of order {size}"
                )));
            }
            set.insert(g);
        }
        if set.contains(grp.identity()) {
            return Err(Error::domain("generator set contains the identity"));
        }
        if let Some(g) = set.iter().find(|&g| !set.contains(grp.neg(g))) {
            return Err(Error::domain(format!(
                "generator set is not closed under inverses: {g} lacks {}",
                grp.neg(g)
            )));
        }
        Ok(GeneratorSet { elements: set })
    }

    /// Unit vectors of every cyclic factor, with their inverses.
    pub fn standard(grp: &AbelianGroup) -> Self {
        let mut set = VertexSet::EMPTY;
        let mut place = 1;
        for &o in grp.orders() {
            if o > 1 {
                set.insert(place);
                set.insert(grp.neg(place));
            }
            place *= o;
        }
        GeneratorSet { elements: set }
    }

    pub fn elements(&self) -> VertexSet {
        self.elements
    }
}

/// Vertices are group elements, `x ~ x + s` for every generator `s`.
pub fn cayley_graph(grp: &AbelianGroup, gens: &GeneratorSet) -> Result<Graph> {
    let n = grp.size();
    let mut g = Graph::empty(n)?;
    for x in 0..n {
        for s in gens.elements() {
            let y = grp.add(x, s);
            if x < y {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}

/// `W + a`.
pub fn translate(grp: &AbelianGroup, set: VertexSet, a: usize) -> VertexSet {
    set.iter().map(|x| grp.add(x, a)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountingIdentity {
    /// `sum over a of |(W + a) ∩ S|`, by explicit summation.
    pub sum: usize,
    /// `|W| * |S|`.
    pub expected: usize,
}

impl CountingIdentity {
    pub fn holds(&self) -> bool {
        self.sum == self.expected
    }
}

/// Sums the overlaps of every translate of `w` with `s`. Each element of
/// `s` is hit by exactly `|w|` translates, so the sum must equal
/// `|w| * |s|`; a mismatch is reported through [`CountingIdentity::holds`].
pub fn counting_identity(grp: &AbelianGroup, w: VertexSet, s: VertexSet) -> CountingIdentity {
    let sum = (0..grp.size())
        .map(|a| translate(grp, w, a).intersection(s).len())
        .sum();
    CountingIdentity {
        sum,
        expected: w.len() * s.len(),
    }
}

/// The translate of `w` meeting `s` the most, smallest element id on
/// ties. The overlap is at least the average `|w| |s| / N`, rounded up.
pub fn best_translate(grp: &AbelianGroup, w: VertexSet, s: VertexSet) -> (usize, usize) {
    (0..grp.size())
        .map(|a| (a, translate(grp, w, a).intersection(s).len()))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best })
}

/// Dimension of a Cayley graph as the sub-dimension of the whole graph.
///
/// Translating the minimizing half-plus-one set of the whole graph covers
/// more than half of any vertex subset, and inducing on that overlap can
/// only lower degrees, so no subset beats the whole graph.
pub fn dim_via_transitivity(grp: &AbelianGroup, gens: &GeneratorSet) -> Result<DimCertificate> {
    dim_via_transitivity_capped(grp, gens, crate::dimension::DEFAULT_CAP)
}

pub fn dim_via_transitivity_capped(
    grp: &AbelianGroup,
    gens: &GeneratorSet,
    cap: usize,
) -> Result<DimCertificate> {
    let g = cayley_graph(grp, gens)?;
    if g.n() > cap {
        return Err(Error::Cap {
            what: "dim_via_transitivity",
            size: g.n(),
            cap,
        });
    }
    let inner = subdim(&g, g.vertices())?;
    Ok(DimCertificate {
        value: inner.value,
        witness_max: g.vertices(),
        inner: Some(inner),
    })
}
