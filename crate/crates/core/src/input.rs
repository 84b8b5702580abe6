//! Graph inputs for the command line: family specs or files.

use std::path::Path;

use crate::cayley::{cayley_graph, AbelianGroup, GeneratorSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_edge_list, parse_graph6};

/// Parses a family spec such as `path:7`, `kbip:3,4`, `cube:3` or
/// `cayley:z:2,2,2;gens=1.0.0,0.1.0,0.0.1`.
///
/// Returns `Ok(None)` when `spec` does not name a known family.
pub fn parse_family(spec: &str) -> Result<Option<Graph>> {
    let Some((name, args)) = spec.split_once(':') else {
        return Ok(None);
    };
    let int = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::domain(format!("bad integer {s:?} in {spec:?}")))
    };
    let g = match name {
        "path" => Graph::path(int(args)?)?,
        "cycle" => Graph::cycle(int(args)?)?,
        "complete" => Graph::complete(int(args)?)?,
        "empty" => Graph::empty(int(args)?)?,
        "cube" => Graph::hypercube(int(args)?)?,
        "kbip" => {
            let (m, n) = args
                .split_once(',')
                .ok_or_else(|| Error::domain(format!("kbip needs `m,n`, got {args:?}")))?;
            Graph::complete_bipartite(int(m)?, int(n)?)?
        }
        "cayley" => {
            let (grp, gens) = parse_cayley(args)?;
            cayley_graph(&grp, &gens)?
        }
        _ => return Ok(None),
    };
    Ok(Some(g))
}

/// `z:n1,n2,..[;gens=t1,t2,..]` where each tuple is dot-separated, e.g.
/// `1.0.0`. A single cyclic factor also accepts plain residues. Without
/// `gens` the unit vectors and their inverses are used.
pub fn parse_cayley(args: &str) -> Result<(AbelianGroup, GeneratorSet)> {
    let (group_part, gens_part) = match args.split_once(';') {
        Some((g, rest)) => {
            let gens = rest
                .trim()
                .strip_prefix("gens=")
                .ok_or_else(|| Error::domain(format!("expected `gens=...`, got {rest:?}")))?;
            (g, Some(gens))
        }
        None => (args, None),
    };
    let orders = group_part.strip_prefix("z:").ok_or_else(|| {
        Error::domain(format!(
            "group must look like `z:n1,n2,..`, got {group_part:?}"
        ))
    })?;
    let orders = orders
        .split(',')
        .map(|o| {
            o.trim()
                .parse::<usize>()
                .map_err(|_| Error::domain(format!("bad group order {o:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let grp = AbelianGroup::new(orders)?;
    let gens = match gens_part {
        None => GeneratorSet::standard(&grp),
        Some(list) => {
            let ids = list
                .split(',')
                .map(|t| {
                    let residues = t
                        .trim()
                        .split('.')
                        .map(|r| {
                            r.parse::<usize>()
                                .map_err(|_| Error::domain(format!("bad generator {t:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    grp.encode(&residues)
                })
                .collect::<Result<Vec<_>>>()?;
            GeneratorSet::new(&grp, ids)?
        }
    };
    Ok((grp, gens))
}

/// Reads a graph from a file: an edge list when the first meaningful line
/// is a bare integer, graph6 otherwise (graph6 never contains digits).
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.bytes().all(|b| b.is_ascii_digit()) && !first.is_empty() {
        parse_edge_list(&text)
    } else {
        parse_graph6(first)
    }
}

/// Resolves a command-line input: a family spec, else a file path.
pub fn load_input(input: &str) -> Result<Graph> {
    if let Some(g) = parse_family(input)? {
        return Ok(g);
    }
    let path = Path::new(input);
    if path.exists() {
        read_graph_file(path)
    } else {
        Err(Error::domain(format!(
            "{input:?} is neither a known family spec nor an existing file"
        )))
    }
}
