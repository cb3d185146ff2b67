//! Shared corpus builders for the integration suites.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use smis_core::generators;
use smis_core::graph::Graph;

/// Erdos-Renyi graph with the given seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..u {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("endpoints in range")
}

/// Uniform random labeled tree (random attachment).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::from_edges(n, &edges).expect("endpoints in range")
}

/// Random planar graph: a stacked triangulation (repeatedly split a random
/// triangular face with a new vertex), then independent edge deletions.
/// Planarity is preserved by construction.
pub fn random_planar(n: usize, delete_p: f64, seed: u64) -> Graph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    for v in 3..n {
        let f = faces.swap_remove(rng.gen_range(0..faces.len()));
        for &u in &f {
            edges.push((u, v));
        }
        faces.push([f[0], f[1], v]);
        faces.push([f[0], f[2], v]);
        faces.push([f[1], f[2], v]);
    }
    let kept: Vec<_> = edges
        .into_iter()
        .filter(|_| !rng.gen_bool(delete_p))
        .collect();
    Graph::from_edges(n, &kept).expect("endpoints in range")
}

/// The cutoff-bound corpus: structured families across sizes plus random
/// graphs kept cheap enough for the counting engine. Spans n = 1 ..= 62.
pub fn cutoff_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Graph| out.push((name, g));

    for n in 1..=20 {
        push(format!("K{n}"), Graph::complete(n).unwrap());
    }
    for n in 1..=12 {
        push(format!("E{n}"), Graph::empty(n).unwrap());
    }
    for n in 2..=45 {
        push(format!("P{n}"), generators::path(n).unwrap());
    }
    push("P62".into(), generators::path(62).unwrap());
    for n in 3..=45 {
        push(format!("C{n}"), generators::cycle(n).unwrap());
    }
    push("C62".into(), generators::cycle(62).unwrap());
    for n in 4..=20 {
        push(format!("S{n}"), generators::star(n).unwrap());
    }
    for a in 1..=8 {
        for b in a..=8 {
            push(
                format!("K{a},{b}"),
                generators::complete_bipartite(a, b).unwrap(),
            );
        }
    }
    for n in 5..=20 {
        push(format!("W{n}"), generators::wheel(n).unwrap());
    }
    for r in 2..=5 {
        for c in r..=5 {
            push(format!("G{r}x{c}"), generators::grid(r, c).unwrap());
        }
    }
    for d in 1..=4 {
        push(format!("Q{d}"), generators::hypercube(d).unwrap());
    }
    push("petersen".into(), generators::petersen().unwrap());
    for i in 2..=5 {
        push(
            format!("X{i}"),
            smis_core::gadget::build_xi(i).unwrap().graph,
        );
    }
    for n in 6..=36 {
        push(format!("T{n}"), random_tree(n, 0x7ee + n as u64));
    }
    let mut seed = 0xc0ffee;
    for n in [5usize, 6, 8, 10, 12] {
        for p in [0.1, 0.3, 0.5, 0.7, 0.9] {
            for rep in 0..2 {
                seed += 1;
                push(format!("R{n}-{p}-{rep}"), random_graph(n, p, seed));
            }
        }
    }
    for n in [20usize, 30, 40, 50, 62] {
        for rep in 0..2 {
            seed += 1;
            push(format!("sparse{n}-{rep}"), random_graph(n, 0.05, seed));
        }
    }
    for n in [16usize, 20] {
        seed += 1;
        push(format!("mid{n}"), random_graph(n, 0.1, seed));
    }
    out
}

/// The engine-vs-oracle corpus: 200 seeded random graphs with n <= 12 over
/// five edge probabilities, plus structured inputs.
pub fn agreement_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut seed = 0xabcd;
    for p in [0.1, 0.3, 0.5, 0.7, 0.9] {
        for i in 0..40 {
            seed += 1;
            let n = 1 + (i % 12);
            out.push((format!("rand-{p}-{i}"), random_graph(n, p, seed)));
        }
    }
    for n in [3usize, 7, 12] {
        out.push((format!("P{n}"), generators::path(n).unwrap()));
        out.push((
            format!("C{}", n.max(3)),
            generators::cycle(n.max(3)).unwrap(),
        ));
        out.push((format!("K{n}"), Graph::complete(n).unwrap()));
        out.push((
            format!("S{}", n.max(4)),
            generators::star(n.max(4)).unwrap(),
        ));
    }
    out.push(("Q3".into(), generators::hypercube(3).unwrap()));
    out
}

/// Reference graph6 bytes produced by an independent implementation.
pub fn graph6_reference() -> Vec<(&'static str, Graph)> {
    vec![
        ("?", Graph::empty(0).unwrap()),
        ("@", Graph::complete(1).unwrap()),
        ("A?", Graph::empty(2).unwrap()),
        ("A_", Graph::complete(2).unwrap()),
        ("Bw", Graph::complete(3).unwrap()),
        ("C?", Graph::empty(4).unwrap()),
        ("C~", Graph::complete(4).unwrap()),
        ("Ch", generators::path(4).unwrap()),
        ("D??", Graph::empty(5).unwrap()),
        ("D~{", Graph::complete(5).unwrap()),
        ("Dhc", generators::cycle(5).unwrap()),
        ("D]o", generators::complete_bipartite(2, 3).unwrap()),
        ("EhEG", generators::cycle(6).unwrap()),
        ("Esa?", generators::star(6).unwrap()),
        ("EFz_", generators::complete_bipartite(3, 3).unwrap()),
        ("E|fG", generators::wheel(6).unwrap()),
        ("Gr`HOk", generators::hypercube(3).unwrap()),
        ("HhCGGE@", generators::cycle(9).unwrap()),
        ("HkSg_SD", generators::grid(3, 3).unwrap()),
        ("IhCGGC@?G", generators::path(10).unwrap()),
        ("IheA@GUAo", generators::petersen().unwrap()),
        ("I~~~~~~~w", Graph::complete(10).unwrap()),
    ]
}
