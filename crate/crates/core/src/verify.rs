//! Verification sweeps behind `graphdim verify`.
//!
//! Each suite checks one family of claims against exact computation and
//! lists every instance it looked at. Sweeps fan out over rayon but
//! collect in input order, so reports are byte-for-byte reproducible.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cayley::{
    best_translate, cayley_graph, counting_identity, dim_via_transitivity_capped, translate,
    AbelianGroup, GeneratorSet,
};
use crate::coloring::{
    chromatic_number_capped, chromatic_number_within, critical_subgraph_capped,
    decomposition_coloring_capped, log2_ceil_rounds, min_degree_check,
};
use crate::dimension::{dim_exact_capped, half_size, subdim, subdim_exists, subdim_naive};
use crate::embedding::{eht_bound_report, verify_embedding, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::vertex_set::VertexSet;

/// Largest order for which all labeled graphs are enumerated.
pub const MAX_SWEEP_ORDER: usize = 6;

const SEED: u64 = 0x6772_6170_6864_696d;

/// All `2^(n(n-1)/2)` labeled graphs on `n <= 6` vertices. Bit `k` of the
/// counter is the `k`-th pair in graph6 order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_SWEEP_ORDER {
        return Err(Error::Cap {
            what: "enumerate_labeled_graphs",
            size: n,
            cap: MAX_SWEEP_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("pairs are in range")
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Examples,
    Theorem1,
    Prop1,
    Theorem2,
    Lemma2,
    Corollary1,
    Identity,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Examples,
        Suite::Theorem1,
        Suite::Prop1,
        Suite::Theorem2,
        Suite::Lemma2,
        Suite::Corollary1,
        Suite::Identity,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::Theorem1 => "theorem1",
            Suite::Prop1 => "prop1",
            Suite::Theorem2 => "theorem2",
            Suite::Lemma2 => "lemma2",
            Suite::Corollary1 => "corollary1",
            Suite::Identity => "identity",
            Suite::Oracle => "oracle",
        }
    }
}

/// Parses a suite name; `all` expands to every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Suite::from_str(s).map(|x| vec![x])
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest order in the exhaustive sweeps.
    pub sweep_order: usize,
    /// Vertex cap for the exact solvers.
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sweep_order: MAX_SWEEP_ORDER,
            cap: crate::dimension::DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub name: String,
    pub pass: bool,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checked: usize,
    pub failed: usize,
    pub instances: Vec<Instance>,
}

impl SuiteReport {
    fn new(suite: Suite, instances: Vec<Instance>) -> Self {
        let failed = instances.iter().filter(|i| !i.pass).count();
        SuiteReport {
            suite,
            pass: failed == 0,
            checked: instances.len(),
            failed,
            instances,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub sweep_order: usize,
    pub suites: Vec<SuiteReport>,
}

pub fn run_suites(suites: &[Suite], opts: VerifyOptions) -> Result<VerifyReport> {
    if opts.sweep_order > MAX_SWEEP_ORDER {
        return Err(Error::Cap {
            what: "verify sweep",
            size: opts.sweep_order,
            cap: MAX_SWEEP_ORDER,
        });
    }
    let suites = suites
        .iter()
        .map(|&s| run_suite(s, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        pass: suites.iter().all(|s| s.pass),
        sweep_order: opts.sweep_order,
        suites,
    })
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<SuiteReport> {
    let instances = match suite {
        Suite::Examples => examples(opts.cap)?,
        Suite::Theorem1 => hypercubes(opts.cap)?,
        Suite::Prop1 => transitivity(opts.cap)?,
        Suite::Theorem2 => decomposition_sweep(opts)?,
        Suite::Lemma2 => critical_sweep(opts)?,
        Suite::Corollary1 => embedding_sweep(opts)?,
        Suite::Identity => translation_identity()?,
        Suite::Oracle => oracle_equivalence()?,
    };
    Ok(SuiteReport::new(suite, instances))
}

fn instance(name: impl Into<String>, pass: bool, details: Value) -> Instance {
    Instance {
        name: name.into(),
        pass,
        details,
    }
}

/// The named families from the worked examples, with the values the
/// closed forms predict.
pub fn example_families() -> Result<Vec<(String, Graph, usize)>> {
    let mut out = Vec::new();
    for n in 4..=10 {
        out.push((format!("path:{n}"), Graph::path(n)?, 1));
    }
    for n in 5..=10 {
        out.push((format!("cycle:{n}"), Graph::cycle(n)?, 1));
    }
    for n in 2..=10 {
        out.push((format!("complete:{n}"), Graph::complete(n)?, n / 2));
    }
    for m in 1..=5 {
        for n in m..=5 {
            out.push((
                format!("kbip:{m},{n}"),
                Graph::complete_bipartite(m, n)?,
                m / 2 + 1,
            ));
        }
    }
    Ok(out)
}

fn examples(cap: usize) -> Result<Vec<Instance>> {
    let fams = example_families()?;
    fams.into_par_iter()
        .map(|(name, g, expected)| {
            let dim = dim_exact_capped(&g, cap)?;
            let sub = subdim(&g, g.vertices())?;
            // K_{m,n}: sub-dimension 0 for unequal sides, m/2+1 for equal ones
            let expected_subdim = name.strip_prefix("kbip:").map(|mn| {
                let (m, n) = mn.split_once(',').unwrap();
                if m == n {
                    m.parse::<usize>().unwrap() / 2 + 1
                } else {
                    0
                }
            });
            let pass = dim.value == expected
                && dim.verify(&g)
                && sub.verify(&g)
                && expected_subdim.is_none_or(|e| sub.value == e);
            Ok(instance(
                name,
                pass,
                json!({
                    "dim": dim.value,
                    "expected_dim": expected,
                    "subdim": sub.value,
                    "expected_subdim": expected_subdim,
                    "witness_max": dim.witness_max,
                }),
            ))
        })
        .collect()
}

fn ceil_sqrt(n: usize) -> usize {
    (0..=n).find(|r| r * r >= n).unwrap()
}

fn hypercubes(cap: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for d in 1..=3 {
        let g = Graph::hypercube(d)?;
        let dim = dim_exact_capped(&g, cap)?;
        let expected = ceil_sqrt(d);
        out.push(instance(
            format!("cube:{d} dim_exact"),
            dim.value == expected && dim.verify(&g),
            json!({ "dim": dim.value, "expected": expected }),
        ));
    }

    let grp = AbelianGroup::boolean(4)?;
    let gens = GeneratorSet::standard(&grp);
    let g = cayley_graph(&grp, &gens)?;
    let dim = dim_via_transitivity_capped(&grp, &gens, cap)?;
    let inner = dim.inner.clone().expect("nonempty");
    let w = inner.witness_min;
    let no_smaller = subdim_exists(&g, g.vertices(), 9, 1).is_none();
    let exact = dim_exact_capped(&g, cap)?;
    out.push(instance(
        "cube:4 via transitivity",
        dim.value == 2
            && w.len() == 9
            && g.max_degree_within(w) == 2
            && no_smaller
            && exact.value == dim.value,
        json!({
            "dim": dim.value,
            "dim_exact": exact.value,
            "expected": ceil_sqrt(4),
            "half_witness": w,
            "half_witness_size": w.len(),
            "half_witness_delta": g.max_degree_within(w),
            "nine_vertices_with_delta_1_exist": !no_smaller,
        }),
    ));
    Ok(out)
}

/// The vertex-transitive graphs on which the whole-graph shortcut is
/// compared with the exhaustive dimension.
pub fn transitive_families() -> Result<Vec<(String, AbelianGroup, GeneratorSet)>> {
    let mut out = Vec::new();
    for n in 5..=8 {
        let grp = AbelianGroup::cyclic(n)?;
        let gens = GeneratorSet::new(&grp, [1, n - 1])?;
        out.push((format!("cycle:{n}"), grp, gens));
    }
    for n in 4..=7 {
        let grp = AbelianGroup::cyclic(n)?;
        let gens = GeneratorSet::new(&grp, 1..n)?;
        out.push((format!("complete:{n}"), grp, gens));
    }
    for d in 2..=3 {
        let grp = AbelianGroup::boolean(d)?;
        let gens = GeneratorSet::standard(&grp);
        out.push((format!("cube:{d}"), grp, gens));
    }
    let z7 = AbelianGroup::cyclic(7)?;
    let gens = GeneratorSet::new(&z7, [1, 2, 5, 6])?;
    out.push(("cayley:z:7;gens=1,2,5,6".into(), z7, gens));
    Ok(out)
}

fn transitivity(cap: usize) -> Result<Vec<Instance>> {
    transitive_families()?
        .into_par_iter()
        .map(|(name, grp, gens)| {
            let g = cayley_graph(&grp, &gens)?;
            let fast = dim_via_transitivity_capped(&grp, &gens, cap)?;
            let exact = dim_exact_capped(&g, cap)?;
            Ok(instance(
                name,
                fast.value == exact.value && fast.verify(&g),
                json!({ "via_transitivity": fast.value, "dim_exact": exact.value }),
            ))
        })
        .collect()
}

fn sweep_graphs(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_labeled_graphs(n)?);
    }
    Ok(out)
}

fn decomposition_sweep(opts: VerifyOptions) -> Result<Vec<Instance>> {
    sweep_graphs(opts.sweep_order)?
        .par_iter()
        .map(|g| {
            let n = g.n();
            let (chi, _) = chromatic_number_capped(g, opts.cap)?;
            let dim = dim_exact_capped(g, opts.cap)?.value;
            let (col, trace) = decomposition_coloring_capped(g, opts.cap)?;
            let log = log2_ceil_rounds(n);
            let bound = (dim + 1) * log;
            let pass = chi <= bound
                && col.is_proper(g)
                && col.palette_size <= bound
                && trace.rounds.len() <= log
                && trace.is_consistent(g)
                && trace.rounds.iter().all(|r| r.chunk_delta <= dim);
            Ok(instance(
                encode_graph6(g),
                pass,
                json!({
                    "n": n,
                    "chi": chi,
                    "dim": dim,
                    "bound": bound,
                    "palette": col.palette_size,
                    "rounds": trace.rounds.len(),
                }),
            ))
        })
        .collect()
}

fn critical_sweep(opts: VerifyOptions) -> Result<Vec<Instance>> {
    sweep_graphs(opts.sweep_order)?
        .par_iter()
        .map(|g| {
            let (chi, _) = chromatic_number_capped(g, opts.cap)?;
            let crit = critical_subgraph_capped(g, opts.cap)?;
            let kept = chromatic_number_within(g, crit, opts.cap)?;
            let mut drops = true;
            for v in crit {
                drops &= chromatic_number_within(g, crit.without(v), opts.cap)? + 1 == kept;
            }
            let min_deg = crit
                .iter()
                .map(|v| g.neighbors(v).intersection(crit).len())
                .min()
                .unwrap_or(0);
            let pass = kept == chi && drops && min_degree_check(g, crit)? && min_deg + 1 >= chi;
            Ok(instance(
                encode_graph6(g),
                pass,
                json!({ "chi": chi, "critical": crit, "min_degree": min_deg }),
            ))
        })
        .collect()
}

fn embedding_sweep(opts: VerifyOptions) -> Result<Vec<Instance>> {
    let mut graphs: Vec<(String, Graph)> = example_families()?
        .into_iter()
        .map(|(name, g, _)| (name, g))
        .collect();
    for (name, grp, gens) in transitive_families()? {
        graphs.push((name, cayley_graph(&grp, &gens)?));
    }
    graphs.push(("cube:1".into(), Graph::hypercube(1)?));
    graphs.push(("cube:4".into(), Graph::hypercube(4)?));
    graphs.extend(
        sweep_graphs(opts.sweep_order)?
            .into_iter()
            .map(|g| (encode_graph6(&g), g)),
    );
    graphs
        .par_iter()
        .map(|(name, g)| {
            let r = eht_bound_report(g, opts.cap)?;
            let exact = verify_embedding(g, &r.exact_embedding, DEFAULT_TOL);
            let decomp = verify_embedding(g, &r.decomposition_embedding, DEFAULT_TOL);
            let pass = r.holds
                && exact.passed()
                && decomp.passed()
                && r.exact_embedding.ambient_dim == 2 * r.chi;
            Ok(instance(
                name.clone(),
                pass,
                json!({
                    "chi": r.chi,
                    "dim": r.dim,
                    "bound_via_chi": r.bound_via_chi,
                    "bound_via_dim": r.bound_via_dim,
                    "ambient_dim": r.exact_embedding.ambient_dim,
                    "max_edge_error": exact.max_edge_error.max(decomp.max_edge_error),
                }),
            ))
        })
        .collect()
}

/// A random group of order at most 64 with one to three cyclic factors.
fn random_group(rng: &mut ChaCha8Rng) -> AbelianGroup {
    loop {
        let k = rng.gen_range(1..=3);
        let orders: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=16)).collect();
        if let Ok(grp) = AbelianGroup::new(orders) {
            return grp;
        }
    }
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

fn translation_identity() -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for i in 0..100 {
        let grp = random_group(&mut rng);
        let n = grp.size();
        let w = random_subset(&mut rng, n);
        let s = random_subset(&mut rng, n);
        let id = counting_identity(&grp, w, s);
        let (a, overlap) = best_translate(&grp, w, s);
        let average = (w.len() * s.len()).div_ceil(n);
        out.push(instance(
            format!("random#{i}"),
            id.holds() && overlap >= average,
            json!({
                "orders": grp.orders(),
                "w": w,
                "s": s,
                "sum": id.sum,
                "expected": id.expected,
                "best_translate": a,
                "overlap": overlap,
                "average_ceil": average,
            }),
        ));
    }

    for d in 1..=3 {
        let grp = AbelianGroup::boolean(d)?;
        let g = cayley_graph(&grp, &GeneratorSet::standard(&grp))?;
        let w = subdim(&g, g.vertices())?.witness_min;
        let delta_w = g.max_degree_within(w);
        let n = grp.size();
        let mut covered = 0;
        let mut worst: Option<VertexSet> = None;
        for bits in 0..(1u64 << n) {
            let s = VertexSet::from_bits(bits);
            let (a, overlap) = best_translate(&grp, w, s);
            let cover = translate(&grp, w, a).intersection(s);
            let ok = overlap >= half_size(s.len()) || s.is_empty();
            let ok = ok && g.max_degree_within(cover) <= delta_w;
            if ok {
                covered += 1;
            } else if worst.is_none() {
                worst = Some(s);
            }
        }
        out.push(instance(
            format!("cube:{d} half-witness cover"),
            worst.is_none(),
            json!({
                "half_witness": w,
                "delta": delta_w,
                "subsets": 1u64 << n,
                "covered": covered,
                "first_failure": worst,
            }),
        ));
    }
    Ok(out)
}

fn oracle_equivalence() -> Result<Vec<Instance>> {
    let mut graphs: Vec<(String, Graph)> = example_families()?
        .into_iter()
        .map(|(name, g, _)| (name, g))
        .collect();
    for d in 1..=4 {
        graphs.push((format!("cube:{d}"), Graph::hypercube(d)?));
    }
    for (name, grp, gens) in transitive_families()? {
        graphs.push((name, cayley_graph(&grp, &gens)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for i in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = [0.2, 0.5, 0.8][i % 3];
        graphs.push((
            format!("random#{i} n={n} p={p}"),
            Graph::random(n, p, &mut rng)?,
        ));
    }
    graphs
        .par_iter()
        .map(|(name, g)| {
            let fast = subdim(g, g.vertices())?;
            let slow = subdim_naive(g, g.vertices())?;
            Ok(instance(
                name.clone(),
                fast == slow,
                json!({
                    "graph6": encode_graph6(g),
                    "subdim": fast.value,
                    "naive": slow.value,
                    "witness": fast.witness_min,
                }),
            ))
        })
        .collect()
}
