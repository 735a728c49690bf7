//! Property tests for the coloring engine: orientation and shift invariance,
//! monotonicity in the lists, and the greedy guarantee.

use gtc_core::engine::*;
use gtc_core::graph::{orient, Graph, Orientation};
use gtc_core::group::{Elem, ElemSet, Group};
use gtc_core::ordering::coloring_number;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GROUPS: [&str; 6] = ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z5"];

fn random_graph(n: usize, max_edges: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(1..=max_edges.min(pairs.len()));
    Graph::new(n, &pairs[..m]).unwrap()
}

fn random_labels(g: &Graph, group: &Group, rng: &mut ChaCha8Rng) -> EdgeLabeling {
    EdgeLabeling::from_values((0..g.edge_count()).map(|_| group.elem(rng.gen_range(0..group.order())).unwrap()).collect())
}

fn random_set(group: &Group, size: usize, rng: &mut ChaCha8Rng) -> ElemSet {
    let mut all: Vec<Elem> = group.elements().collect();
    all.shuffle(rng);
    all.into_iter().take(size).collect()
}

fn random_lists(g: &Graph, group: &Group, size: impl Fn(usize) -> usize, rng: &mut ChaCha8Rng) -> ListAssignment {
    ListAssignment::from_sets((0..g.vertex_count()).map(|v| random_set(group, size(v), rng)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Reversing an arc and inverting its label keeps the constraint.
    #[test]
    fn flipping_an_arc_with_inverse_label_preserves_solutions(seed in any::<u64>(), gi in 0usize..6, n in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let group = Group::parse(GROUPS[gi]).unwrap();
        let g = random_graph(n, 8, &mut rng);
        let o = orient(&g, seed);
        let f = random_labels(&g, &group, &mut rng);
        let k = rng.gen_range(1..=group.order());
        let lists = random_lists(&g, &group, |_| k, &mut rng);
        let e = rng.gen_range(0..g.edge_count());
        let mut o2 = o.clone();
        o2.flip(e);
        let mut f2 = f.clone();
        f2.set(e, group.inverse(f.get(e)));
        let a = solve(&g, &o, &group, &f, &lists).unwrap();
        let b = solve(&g, &o2, &group, &f2, &lists).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        if let Some(c) = a {
            prop_assert!(is_valid_coloring(&g, &o2, &group, &f2, &lists, &c));
        }
    }

    /// Left-translating each vertex by `t_v` maps solutions of `(f, L)` to
    /// solutions of `(t_tail f t_head^-1, t_v L)`.
    #[test]
    fn shift_invariance(seed in any::<u64>(), gi in 0usize..6, n in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let group = Group::parse(GROUPS[gi]).unwrap();
        let g = random_graph(n, 8, &mut rng);
        let o = orient(&g, seed ^ 1);
        let f = random_labels(&g, &group, &mut rng);
        let k = rng.gen_range(1..=group.order());
        let lists = random_lists(&g, &group, |_| k, &mut rng);
        let t: Vec<Elem> = (0..n).map(|_| group.elem(rng.gen_range(0..group.order())).unwrap()).collect();
        let shifted_lists = ListAssignment::from_sets(
            (0..n).map(|v| lists.get(v).iter().map(|x| group.op(t[v], x)).collect()).collect(),
        );
        let shifted_f = EdgeLabeling::from_values(
            (0..g.edge_count())
                .map(|e| {
                    let (tail, head) = o.arc(&g, e);
                    group.op(group.op(t[tail], f.get(e)), group.inverse(t[head]))
                })
                .collect(),
        );
        let a = solve(&g, &o, &group, &f, &lists).unwrap();
        let b = solve(&g, &o, &group, &shifted_f, &shifted_lists).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        if let Some(c) = a {
            let moved = Coloring { colors: (0..n).map(|v| group.op(t[v], c.colors[v])).collect() };
            prop_assert!(is_valid_coloring(&g, &o, &group, &shifted_f, &shifted_lists, &moved));
        }
    }

    /// Enlarging lists never destroys colorability.
    #[test]
    fn larger_lists_stay_colorable(seed in any::<u64>(), gi in 0usize..6, n in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let group = Group::parse(GROUPS[gi]).unwrap();
        let g = random_graph(n, 10, &mut rng);
        let o = orient(&g, seed);
        let f = random_labels(&g, &group, &mut rng);
        let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=group.order())).collect();
        let lists = random_lists(&g, &group, |v| sizes[v], &mut rng);
        let bigger = ListAssignment::from_sets(
            lists.lists().iter().map(|&l| {
                let extra = random_set(&group, 1, &mut rng);
                ElemSet::from_bits(l.bits() | extra.bits())
            }).collect(),
        );
        if let Some(c) = solve(&g, &o, &group, &f, &lists).unwrap() {
            prop_assert!(is_valid_coloring(&g, &o, &group, &f, &bigger, &c));
            prop_assert!(solve(&g, &o, &group, &f, &bigger).unwrap().is_some());
        }
    }

    /// Every list of size at least the back-degree plus one in the
    /// certificate order lets the greedy pass succeed.
    #[test]
    fn greedy_guarantee(seed in any::<u64>(), n in 2usize..13) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, 3 * n, &mut rng);
        let cert = coloring_number(&g);
        let spec = ["Z8", "Z2xZ4", "Z3xZ3", "Z11", "Z13"]
            .into_iter()
            .find(|s| Group::parse(s).unwrap().order() >= cert.col && rng.gen_bool(0.5))
            .unwrap_or("Z13");
        let group = Group::parse(spec).unwrap();
        let o = orient(&g, seed);
        let f = random_labels(&g, &group, &mut rng);
        let lists = random_lists(
            &g,
            &group,
            |v| cert.back_degrees[v] + 1,
            &mut rng,
        );
        let c = greedy(&g, &cert.ordering, &group, &o, &f, &lists);
        prop_assert!(c.is_some());
        prop_assert!(is_valid_coloring(&g, &o, &group, &f, &lists, &c.unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The exhaustive verdict does not depend on the orientation used.
    #[test]
    fn choosability_verdict_is_orientation_free(seed in any::<u64>(), gi in 0usize..5, n in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let group = Group::parse(GROUPS[gi]).unwrap();
        let g = random_graph(n, if group.order() == 6 { 4 } else { 6 }, &mut rng);
        let k = rng.gen_range(1..=group.order());
        let a = CheckOptions { orientation_seed: seed, ..CheckOptions::default() };
        let b = CheckOptions { orientation_seed: seed.wrapping_add(17), ..CheckOptions::default() };
        let va = check_group_choosable(&g, &group, k, &a).unwrap();
        let vb = check_group_choosable(&g, &group, k, &b).unwrap();
        prop_assert_eq!(va.status, vb.status);
        if let Some(w) = &va.witness {
            prop_assert!(w.recheck(&g, &group).unwrap());
        }
    }

    /// Choosability with k colors implies choosability with k + 1.
    #[test]
    fn choosability_is_monotone_in_k(seed in any::<u64>(), gi in 0usize..5, n in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let group = Group::parse(GROUPS[gi]).unwrap();
        let g = random_graph(n, 6, &mut rng);
        let opts = CheckOptions::default();
        let mut previous = false;
        for k in 1..=group.order() {
            let now = check_group_choosable(&g, &group, k, &opts).unwrap().holds();
            prop_assert!(!previous || now, "k = {} lost choosability", k);
            previous = now;
        }
        prop_assert!(previous || g.max_degree() + 1 > group.order());
    }
}

#[test]
fn orientation_roundtrip_through_witness() {
    let g = gtc_core::graph::cycle(3).unwrap();
    let z2 = Group::parse("Z2").unwrap();
    let v = check_group_colorable(&g, &z2, &CheckOptions::default()).unwrap();
    let w = v.witness.expect("triangles are not Z2-colorable");
    let (o, f, l) = w.to_instance(&g, &z2).unwrap();
    assert_eq!(o.len(), 3);
    assert!(solve(&g, &o, &z2, &f, &l).unwrap().is_none());
    let _: &Orientation = &o;
}
