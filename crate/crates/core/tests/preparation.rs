//! Randomized sweeps over the host-preparation pipeline and the two-sided
//! greedy embedder, checking the structural invariants on every instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramsey_core::graph::VertexPartition;
use ramsey_core::machinery::{prepare_host, two_sided_greedy_embed};
use ramsey_core::ramsey::{Color, ColoredCompleteGraph};
use ramsey_core::synth;

#[test]
fn prepare_host_invariants_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a9a);
    for round in 0..60 {
        let even = rng.gen_bool(0.5);
        let (g, d) = if even {
            let n = 2 * rng.gen_range(25..=500);
            synth::bipartite_chorded_cycle(n, (n / 50).max(1), &mut rng)
        } else {
            let k: usize = rng.gen_range(1..=3);
            let n = 2 * rng.gen_range(25 + 6 * k..=500) + 1;
            let extras = (n / 50).saturating_sub(k);
            synth::indexed_chorded_cycle(n, k, extras, &mut rng)
        };
        let z = rng.gen_range(4..=8);
        let pd = match prepare_host(&g, z, 4) {
            Ok(pd) => pd,
            Err(e) => panic!("round {round}: n={} chords={:?}: {e}", g.n(), d.chords()),
        };
        // verify() ran inside prepare_host; re-run it from the outside too
        pd.verify(&g, z, d.len()).expect("re-verification");
        for p in &pd.connectors {
            let len = p.len() - 1;
            assert_eq!(len % 2, 1);
            assert!(len + 3 >= z);
            assert_eq!(pd.partition.part_of(p[0]), Some(0));
            assert_eq!(pd.partition.part_of(*p.last().unwrap()), Some(1));
        }
        assert!(pd.stage_sizes.extracted <= 2 * z * d.len());
        assert!(pd.stage_sizes.parity_fixed <= 2 * pd.stage_sizes.extracted);
        assert!(pd.stage_sizes.core <= 3 * pd.stage_sizes.parity_fixed);
    }
}

#[test]
fn two_sided_greedy_succeeds_under_the_counting_hypothesis() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2b2b);
    let mut ran = 0;
    while ran < 200 {
        // random bipartite pattern with parts of equal size and max degree <= 3
        let half = rng.gen_range(3..=8);
        let mut pattern_edges = Vec::new();
        for x in 0..half {
            pattern_edges.push((x, half + x));
            if rng.gen_bool(0.5) {
                pattern_edges.push((x, half + (x + 1) % half));
            }
        }
        let pattern =
            ramsey_core::graph::SimpleGraph::from_edges(2 * half, pattern_edges).unwrap();
        let parts = VertexPartition::two((0..half).collect(), (half..2 * half).collect()).unwrap();
        let delta = pattern.max_degree();

        // host: K_N colored so B'-vertices miss at most `defect` red edges
        // into A'
        let defect = rng.gen_range(0usize..=2);
        let a_len = delta * defect + half + rng.gen_range(1..=4);
        let b_len = half + rng.gen_range(0..=2);
        let n = a_len + b_len;
        let a_side: Vec<usize> = (0..a_len).collect();
        let b_side: Vec<usize> = (a_len..n).collect();
        let mut red = Vec::new();
        for &b in &b_side {
            // drop exactly `defect` red edges from each B' vertex
            let mut missing: Vec<usize> = Vec::new();
            while missing.len() < defect {
                let a = rng.gen_range(0..a_len);
                if !missing.contains(&a) {
                    missing.push(a);
                }
            }
            for &a in &a_side {
                if !missing.contains(&a) {
                    red.push((a, b));
                }
            }
        }
        let host = ColoredCompleteGraph::from_red_edges(n, red).unwrap();
        let out = two_sided_greedy_embed(
            &host,
            Color::Red,
            &a_side,
            &b_side,
            &[],
            &pattern,
            &parts,
            defect,
        )
        .unwrap();
        assert!(out.guaranteed, "instance must satisfy the hypothesis");
        let emb = out.embedding.expect("guaranteed instances must embed");
        assert!(emb.is_valid(&pattern, host.red_subgraph()));
        ran += 1;
    }
}

#[test]
fn two_sided_with_independent_third_part() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7777);
    for _ in 0..40 {
        // pattern: even cycle plus an apex joined to two opposite-parity...
        // simplest faithful case: C_8 with one extra vertex adjacent to two
        // even-cycle vertices of the same side
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.push((8, 1));
        edges.push((8, 3));
        let pattern = ramsey_core::graph::SimpleGraph::from_edges(9, edges).unwrap();
        let parts = VertexPartition::three(
            vec![0, 2, 4, 6],
            vec![1, 3, 5, 7],
            vec![8],
        )
        .unwrap();
        assert!(parts.is_proper_for(&pattern));

        let a_len = 8 + rng.gen_range(0..=3);
        let b_len = 6 + rng.gen_range(0..=3);
        let s_len = 2;
        let n = a_len + b_len + s_len;
        let a_side: Vec<usize> = (0..a_len).collect();
        let b_side: Vec<usize> = (a_len..a_len + b_len).collect();
        let s_side: Vec<usize> = (a_len + b_len..n).collect();
        // color everything between the three sides red
        let mut red = Vec::new();
        for (i, &u) in a_side.iter().chain(&b_side).chain(&s_side).enumerate() {
            for &v in a_side.iter().chain(&b_side).chain(&s_side).skip(i + 1) {
                let same_a = a_side.contains(&u) && a_side.contains(&v);
                let same_b = b_side.contains(&u) && b_side.contains(&v);
                let same_s = s_side.contains(&u) && s_side.contains(&v);
                if !(same_a || same_b || same_s) {
                    red.push((u, v));
                }
            }
        }
        let host = ColoredCompleteGraph::from_red_edges(n, red).unwrap();
        let out = two_sided_greedy_embed(
            &host,
            Color::Red,
            &a_side,
            &b_side,
            &s_side,
            &pattern,
            &parts,
            0,
        )
        .unwrap();
        let emb = out.embedding.expect("complete tripartite red host");
        assert!(emb.is_valid(&pattern, host.red_subgraph()));
        // part placements: X in b_side, Y in a_side, Z in s_side
        for &x in parts.part(0) {
            assert!(b_side.contains(&emb.map[x]));
        }
        for &y in parts.part(1) {
            assert!(a_side.contains(&emb.map[y]));
        }
        for &z in parts.part(2) {
            assert!(s_side.contains(&emb.map[z]));
        }
    }
}
