//! Shared corpus, generators, and brute-force oracles for the integration
//! tests. The oracles work from the definitions directly and do not call the
//! library's own predicates.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use wlpa::algebra::{Generator, Letter, Path, Scalar};
use wlpa::fixtures;
use wlpa::{Algebra, AlgebraElement, GraphBuilder, WeightedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

/// A graph on `n` vertices `v0..` where each vertex emits `0..=max_out`
/// edges of one common weight in `1..=max_w`, to uniformly random targets.
pub fn random_vertex_weighted(
    rng: &mut impl Rng,
    n: usize,
    max_out: usize,
    max_w: u32,
) -> WeightedGraph {
    let mut b = GraphBuilder::new().vertices((0..n).map(|v| format!("v{v}")));
    let mut k = 0;
    for v in 0..n {
        let w = rng.gen_range(1..=max_w);
        for _ in 0..rng.gen_range(0..=max_out) {
            let d = rng.gen_range(0..n);
            b = b.edge(format!("e{k}"), format!("v{v}"), format!("v{d}"), w);
            k += 1;
        }
    }
    b.build().unwrap()
}

/// Like [`random_vertex_weighted`] but every edge draws its own weight, so
/// most results are not vertex weighted.
pub fn random_weighted(rng: &mut impl Rng, n: usize, max_out: usize, max_w: u32) -> WeightedGraph {
    let mut b = GraphBuilder::new().vertices((0..n).map(|v| format!("v{v}")));
    let mut k = 0;
    for v in 0..n {
        for _ in 0..rng.gen_range(0..=max_out) {
            let d = rng.gen_range(0..n);
            let w = rng.gen_range(1..=max_w);
            b = b.edge(format!("e{k}"), format!("v{v}"), format!("v{d}"), w);
            k += 1;
        }
    }
    b.build().unwrap()
}

/// Every fixture, some plain (weight-1) graphs, the matrix and hair
/// extensions from the construction examples, twelve random vertex-weighted
/// graphs (at most 6 vertices, weights at most 3) and three random graphs
/// with mixed weights.
pub fn corpus() -> Vec<(String, WeightedGraph)> {
    let mut out: Vec<(String, WeightedGraph)> = fixtures::all()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    let plain = |edges: &[(&str, &str, &str)], vs: &[&str]| {
        let mut b = GraphBuilder::new().vertices(vs.iter().copied());
        for &(id, s, d) in edges {
            b = b.edge(id, s, d, 1);
        }
        b.build().unwrap()
    };
    out.push((
        "three_cycle".into(),
        plain(
            &[("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")],
            &["x", "y", "z"],
        ),
    ));
    out.push((
        "fork".into(),
        plain(&[("a", "r", "s"), ("b", "r", "t")], &["r", "s", "t"]),
    ));
    out.push((
        "two_way".into(),
        plain(
            &[
                ("a", "p", "q"),
                ("b", "q", "p"),
                ("c", "p", "p"),
                ("d", "q", "q"),
            ],
            &["p", "q"],
        ),
    ));
    out.push((
        "matrix_ext_2".into(),
        fixtures::loop_with_exit().matrix_extension(2).unwrap(),
    ));
    let lengths: BTreeMap<String, u32> = [("v1".to_string(), 3), ("v2".to_string(), 2)].into();
    out.push((
        "hair_3_2".into(),
        fixtures::loop_with_exit_pair()
            .hair_extension(&lengths)
            .unwrap(),
    ));
    let mut r = rng(0x5eed);
    for i in 0..12 {
        let n = r.gen_range(1..=6);
        out.push((
            format!("random_vw_{i}"),
            random_vertex_weighted(&mut r, n, 3, 3),
        ));
    }
    for i in 0..3 {
        let n = r.gen_range(2..=4);
        out.push((
            format!("random_mixed_{i}"),
            random_weighted(&mut r, n, 3, 3),
        ));
    }
    out
}

/// Generators `x` with source `v`: `e_i` for edges leaving `v` and `e_i*`
/// for edges entering it.
pub fn letters_from(g: &WeightedGraph, v: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for &e in g.out_edges(v) {
        for i in 1..=g.edge(e).weight {
            out.push(Letter::new(e, i, false));
        }
    }
    for &e in g.in_edges(v) {
        for i in 1..=g.edge(e).weight {
            out.push(Letter::new(e, i, true));
        }
    }
    out
}

fn letter_dst(g: &WeightedGraph, l: Letter) -> usize {
    let e = g.edge(l.edge as usize);
    if l.star {
        e.src
    } else {
        e.dst
    }
}

/// A random composable word of `1..=max_len` letters, or a lone vertex when
/// the walk cannot start.
pub fn random_word(g: &WeightedGraph, rng: &mut impl Rng, max_len: usize) -> Vec<Generator> {
    let mut v = rng.gen_range(0..g.vertex_count());
    let len = rng.gen_range(1..=max_len);
    let mut word = Vec::new();
    for _ in 0..len {
        let options = letters_from(g, v);
        let Some(&l) = options.choose(rng) else { break };
        word.push(Generator::Letter(l));
        v = letter_dst(g, l);
    }
    if word.is_empty() {
        word.push(Generator::Vertex(v as u32));
    }
    word
}

pub fn path_generators(p: &Path) -> Vec<Generator> {
    match p {
        Path::Vertex(v) => vec![Generator::Vertex(*v)],
        Path::Word(w) => w.iter().map(|&l| Generator::Letter(l)).collect(),
    }
}

pub fn random_scalar(a: &Algebra, rng: &mut impl Rng) -> Scalar {
    loop {
        let num = rng.gen_range(-3i64..=3);
        let den = rng.gen_range(1i64..=3);
        if num != 0 {
            return a
                .field()
                .ratio(&BigInt::from(num), &BigInt::from(den))
                .unwrap();
        }
    }
}

/// Sum of up to `max_terms` random normal paths with small rational
/// coefficients, chosen from `pool`.
pub fn random_element(
    a: &Algebra,
    pool: &[Path],
    rng: &mut impl Rng,
    max_terms: usize,
) -> AlgebraElement {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<(Scalar, Vec<Generator>)> = (0..k)
        .map(|_| {
            let p = pool.choose(rng).unwrap();
            (random_scalar(a, rng), path_generators(p))
        })
        .collect();
    a.reduce(&terms).unwrap()
}

/// Hereditary: every edge leaving the set lands in it.
pub fn oracle_hereditary(g: &WeightedGraph, h: &[bool]) -> bool {
    g.edges().iter().all(|e| !h[e.src] || h[e.dst])
}

/// Saturated in the weighted sense: a regular vertex `v` belongs to `H` as
/// soon as, for some level `i ≤ w(v)`, every edge of weight at least `i`
/// leaving `v` ends in `H`.
pub fn oracle_saturated(g: &WeightedGraph, h: &[bool]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let out = g.out_edges(v);
        if h[v] || out.is_empty() {
            return true;
        }
        let wv = out.iter().map(|&e| g.edge(e).weight).max().unwrap();
        let forced = (1..=wv).any(|i| {
            out.iter()
                .filter(|&&e| g.edge(e).weight >= i)
                .all(|&e| h[g.edge(e).dst])
        });
        !forced
    })
}

/// All hereditary saturated subsets, as bit masks.
pub fn oracle_hs_sets(g: &WeightedGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0u32..1 << n)
        .map(|bits| (0..n).map(|v| bits >> v & 1 == 1).collect::<Vec<bool>>())
        .filter(|h| oracle_hereditary(g, h) && oracle_saturated(g, h))
        .collect()
}

pub fn mask_to_ids(g: &WeightedGraph, h: &[bool]) -> Vec<String> {
    let mut ids: Vec<String> = (0..g.vertex_count())
        .filter(|&v| h[v])
        .map(|v| g.vertex_id(v).to_string())
        .collect();
    ids.sort();
    ids
}

/// Runs the CLI in-process. Returns (exit code, stdout, stderr).
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["wlpa"];
    argv.extend_from_slice(args);
    let code = wlpa::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

pub fn data_arg(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}
