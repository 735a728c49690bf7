use gtc_core::catalog::{self, plane_catalog};
use gtc_core::graph::{self, connected_graphs, Graph};
use gtc_core::structure::*;
use proptest::prelude::*;

/// Brute-force minor oracle: every map from vertices to branch sets or
/// "unused", checked for connected non-empty branch sets that realize all edges.
fn brute_force_minor(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    let k = h.vertex_count();
    let mut assign = vec![0usize; n];
    loop {
        let sets: Vec<Vec<usize>> =
            (0..k).map(|b| (0..n).filter(|&v| assign[v] == b + 1).collect()).collect();
        let connected = |s: &Vec<usize>| {
            if s.is_empty() {
                return false;
            }
            let mut seen = vec![s[0]];
            let mut i = 0;
            while i < seen.len() {
                let v = seen[i];
                for w in g.neighbors(v) {
                    if assign[w] == assign[v] && !seen.contains(&w) {
                        seen.push(w);
                    }
                }
                i += 1;
            }
            seen.len() == s.len()
        };
        if sets.iter().all(connected)
            && h.edges().iter().all(|&(a, b)| {
                g.edges().iter().any(|&(u, v)| {
                    (assign[u] == a + 1 && assign[v] == b + 1) || (assign[u] == b + 1 && assign[v] == a + 1)
                })
            })
        {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] <= k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

const MINORS: [MinorId; 3] = [MinorId::K4, MinorId::K23, MinorId::K2barPlus];

#[test]
fn minor_test_matches_brute_force_on_small_graphs() {
    let mut positives = [0usize; 3];
    for n in 4..=6 {
        for g in connected_graphs(n) {
            for (i, h) in MINORS.iter().enumerate() {
                let fast = has_minor(&g, *h).unwrap();
                assert_eq!(fast, brute_force_minor(&g, &h.graph()), "{h:?} in {:?}", g.edges());
                positives[i] += usize::from(fast);
            }
        }
    }
    assert!(positives.iter().all(|&p| p > 0));
}

#[test]
fn wheel_has_k4_minor_by_explicit_branch_sets() {
    // W_4: rim 0..4, hub 4. Branch sets {0}, {1}, {2, 3}, {4}.
    let w = graph::wheel(4).unwrap();
    let sets: [&[usize]; 4] = [&[0], &[1], &[2, 3], &[4]];
    for i in 0..4 {
        for j in i + 1..4 {
            assert!(sets[i].iter().any(|&u| sets[j].iter().any(|&v| w.has_edge(u, v))));
        }
    }
    assert!(w.has_edge(2, 3));
    assert!(has_minor(&w, MinorId::K4).unwrap());
}

#[test]
fn k23_free_implies_k2bar_plus_free() {
    let plane = plane_catalog().into_iter().map(|e| e.plane.graph().clone());
    let small = (2..=6).flat_map(connected_graphs);
    for g in plane.chain(small).filter(|g| g.vertex_count() <= DEFAULT_MINOR_CAP) {
        if !has_minor(&g, MinorId::K23).unwrap() {
            assert!(!has_minor(&g, MinorId::K2barPlus).unwrap());
        }
    }
}

#[test]
fn euler_and_handshake_on_the_plane_catalog() {
    for e in plane_catalog() {
        let g = e.plane.graph();
        let faces = e.plane.faces().unwrap();
        let sum: usize = faces.iter().map(|f| f.degree()).sum();
        assert_eq!(sum, 2 * g.edge_count(), "{}", e.name);
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
        assert_eq!(chi, 2, "{}", e.name);
    }
}

#[test]
fn catalog_has_the_required_families() {
    let names: Vec<String> = plane_catalog().into_iter().map(|e| e.name).collect();
    for want in ["cube", "dodecahedron", "fan:5", "prism:5"] {
        assert!(names.iter().any(|n| n == want), "{want}");
    }
    assert!(names.len() >= 10);
}

#[test]
fn lemma_finders_cover_their_hypotheses() {
    let mut applied = [0usize; 5];
    for e in plane_catalog() {
        let g = e.plane.graph();
        let d = g.min_degree();
        if d >= 3 {
            applied[0] += 1;
            assert!(find_light_edge(g, LightEdgeRule::SumAtMost(13)).is_some(), "{}", e.name);
        }
        if d >= 2 && !has_cycle_len(g, 5) && !has_cycle_len(g, 6) {
            applied[1] += 1;
            let hit = find_2_alternating_cycle(g).is_some() || find_light_edge(g, LightEdgeRule::SumAtMost(9)).is_some();
            assert!(hit, "{}", e.name);
        }
        if d >= 3 && find_knet(g, 5).unwrap().is_none() {
            applied[2] += 1;
            assert!(find_light_edge(g, LightEdgeRule::SumAtMost(9)).is_some(), "{}", e.name);
        }
        if d >= 3 && !has_cycle_len(g, 5) {
            applied[3] += 1;
            assert!(find_light_edge(g, LightEdgeRule::DegreeThreeNeighborAtMost(5)).is_some(), "{}", e.name);
        }
        if e.outerplanar {
            applied[4] += 1;
            assert!(outerplanar_configuration(g).is_some(), "{}", e.name);
        }
    }
    assert!(applied.iter().all(|&a| a >= 3), "{applied:?}");
}

#[test]
fn alternating_cycle_output_is_well_formed() {
    for e in plane_catalog() {
        let g = e.plane.graph();
        if let Some(c) = find_2_alternating_cycle(g) {
            assert_eq!(c.len() % 2, 0);
            let mut sorted = c.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), c.len());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
            assert!(c.iter().skip(1).step_by(2).all(|&u| g.degree(u) == 2));
        }
    }
}

#[test]
fn girth_agrees_with_cycle_search() {
    for e in plane_catalog() {
        let g = e.plane.graph();
        let by_search = (3..=12).find(|&l| has_cycle_len(g, l));
        match girth(g) {
            Some(x) if x <= 12 => assert_eq!(by_search, Some(x), "{}", e.name),
            Some(_) => assert_eq!(by_search, None),
            None => assert_eq!(by_search, None),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_outerplanar_graphs_have_a_configuration(n in 3usize..14, seed in any::<u64>(), keep in 0.5f64..1.0) {
        let pg = catalog::random_outerplanar(n, seed, keep);
        prop_assert!(pg.is_spherical().unwrap());
        let g = pg.graph();
        prop_assert!(outerplanar_configuration(g).is_some());
        prop_assert!(!has_minor(g, MinorId::K4).unwrap());
        prop_assert!(!has_minor(g, MinorId::K23).unwrap());
    }

    #[test]
    fn trees_have_one_face(n in 1usize..20, seed in any::<u64>()) {
        let t = graph::random_tree(n, seed, 4).unwrap();
        let m = t.edge_count();
        let pg = catalog::forest(t).unwrap();
        let faces = pg.faces().unwrap();
        prop_assert_eq!(faces.len(), 1);
        prop_assert_eq!(faces[0].degree(), 2 * m);
        for v in 0..n {
            prop_assert_eq!(faces[0].multiplicity(v), pg.graph().degree(v).max(1));
        }
    }

    #[test]
    fn every_dart_lies_on_exactly_one_face(idx in 0usize..1000) {
        let cat = plane_catalog();
        let pg = &cat[idx % cat.len()].plane;
        let mut darts: Vec<(usize, usize)> = pg.faces().unwrap().into_iter().flat_map(|f| f.darts).collect();
        darts.sort_unstable();
        let before = darts.len();
        darts.dedup();
        prop_assert_eq!(before, darts.len());
        prop_assert_eq!(darts.len(), 2 * pg.graph().edge_count());
    }
}
