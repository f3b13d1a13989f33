use proptest::prelude::*;

use loopspec::edgelist::{parse_edge_list, write_edge_list};
use loopspec::graph::Graph;
use loopspec::laplacian::{degree_adjacency, incidence_matrix, laplacian_of, loop_indicator};
use loopspec::lifting::lift;
use loopspec::oracle::charpoly_eigenvalues;
use loopspec::spectral::{
    eigen_sym, lift_eigvec_residual, spectrum_subset, verify_all, Tolerances,
};

const SOLVER_TOL: f64 = 1e-12;

/// Graph on `1..=max_n` vertices with each vertex pair (loops included)
/// present independently.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges = pairs.iter().zip(mask).filter(|(_, m)| *m).map(|(p, _)| *p);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Connected graph carrying exactly one loop: a random spanning tree plus
/// extra edges.
fn arb_connected_single_loop(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
                proptest::collection::vec((1..=n, 1..=n), 0..n),
                1..=n,
            )
        })
        .prop_map(|(n, parents, extra, looped)| {
            let mut g = Graph::new(n).unwrap();
            for (k, p) in parents.iter().enumerate() {
                let child = k + 2;
                let _ = g.add_edge(p.index(child - 1) + 1, child);
            }
            for (i, j) in extra {
                if i != j {
                    let _ = g.add_edge(i, j);
                }
            }
            g.add_edge(looped, looped).unwrap();
            g
        })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn stripping_is_idempotent_and_keeps_components(g in arb_graph(8)) {
        let s = g.strip_self_loops();
        prop_assert_eq!(s.strip_self_loops(), s.clone());
        prop_assert_eq!(g.connected_components(), s.connected_components());
    }

    #[test]
    fn pseudo_connected_needs_a_loop_per_component(g in arb_graph(8)) {
        if g.is_pseudo_connected() {
            let c = g.connected_components().count();
            prop_assert!(c >= 1);
            prop_assert!(g.loop_count() >= c);
        }
        if g.is_connected() && g.loop_count() >= 1 {
            prop_assert!(g.is_pseudo_connected());
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(8)) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list(&back), text.clone());

        // reversed, flipped endpoints and comments parse to the same graph
        let mut scrambled = format!("# scrambled\nn {}\n", g.vertex_count());
        for e in g.edges().collect::<Vec<_>>().into_iter().rev() {
            scrambled.push_str(&format!("{} {}\n# noise\n", e.hi, e.lo));
        }
        prop_assert_eq!(write_edge_list(&parse_edge_list(&scrambled).unwrap()), text);
    }

    #[test]
    fn three_laplacian_assemblies_agree(g in arb_graph(8)) {
        let direct = laplacian_of(&g);
        let gram = incidence_matrix(&g).gram();
        let (d, a) = degree_adjacency(&g);
        prop_assert_eq!(&direct, &gram);
        prop_assert_eq!(&direct, &d.sub(&a));
        prop_assert!(direct.is_integral());

        let ones = vec![1.0; g.vertex_count()];
        prop_assert_eq!(direct.quadratic_form(&ones), g.loop_count() as f64);

        let q0 = direct.sub(&laplacian_of(&g.strip_self_loops()));
        prop_assert_eq!(&q0, &loop_indicator(&g));
        prop_assert!(q0.is_diagonal());
        prop_assert_eq!(q0.trace(), g.loop_count() as f64);

        if g.is_loopless() {
            prop_assert!(direct.mul_vec(&ones).iter().all(|&x| x == 0.0));
        }
    }

    #[test]
    fn incidence_rows_follow_the_sign_rule(g in arb_graph(8)) {
        let e = incidence_matrix(&g);
        for (row, edge) in e.row_iter().zip(g.edges()) {
            let plus = row.iter().filter(|&&x| x == 1).count();
            let minus = row.iter().filter(|&&x| x == -1).count();
            prop_assert_eq!(row[edge.lo - 1], 1);
            if edge.is_loop() {
                prop_assert_eq!((plus, minus), (1, 0));
            } else {
                prop_assert_eq!((plus, minus), (1, 1));
                prop_assert_eq!(row[edge.hi - 1], -1);
            }
        }
    }

    #[test]
    fn laplacian_ignores_insertion_order(g in arb_graph(7), seed in any::<u64>()) {
        let mut edges: Vec<(usize, usize)> = g.edges().map(|e| (e.hi, e.lo)).collect();
        // deterministic shuffle
        let len = edges.len();
        for k in 0..len {
            let j = (seed.wrapping_mul(k as u64 + 1) % len as u64) as usize;
            edges.swap(k, j);
        }
        let rebuilt = Graph::from_edges(g.vertex_count(), edges).unwrap();
        prop_assert_eq!(laplacian_of(&rebuilt), laplacian_of(&g));
    }

    #[test]
    fn lifted_graph_structure(g in arb_graph(8)) {
        let n = g.vertex_count();
        let q = g.loop_count();
        let lg = lift(&g);
        let lifted = lg.lifted();
        prop_assert!(lifted.is_loopless());
        prop_assert_eq!(lifted.vertex_count(), 2 * n + 1);
        prop_assert_eq!(
            lifted.edge_count(),
            2 * g.strip_self_loops().edge_count() + 2 * q
        );
        for e in lifted.edges() {
            prop_assert!(lifted.has_edge(lg.swap_copies(e.lo), lg.swap_copies(e.hi)));
        }
        prop_assert_eq!(lg.swap_copies(lg.middle()), lg.middle());

        let big = laplacian_of(lifted);
        let small = laplacian_of(&g);
        let mid = lg.middle() - 1;
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(big.get(i, j), small.get(i, j));
                prop_assert_eq!(big.get(mid + 1 + i, mid + 1 + j), small.get(i, j));
            }
            let coupling = if g.has_loop(i + 1) { -1.0 } else { 0.0 };
            prop_assert_eq!(big.get(i, mid), coupling);
            prop_assert_eq!(big.get(mid + 1 + i, mid), coupling);
        }
        prop_assert_eq!(big.get(mid, mid), 2.0 * q as f64);
        prop_assert_eq!(lg.block_incidence().gram(), big);

        if g.is_pseudo_connected() {
            prop_assert!(lifted.is_connected());
        }
    }

    #[test]
    fn eigensolver_quality(g in arb_graph(10)) {
        let lap = laplacian_of(&lift(&g).lifted().clone());
        let s = eigen_sym(&lap, SOLVER_TOL).unwrap();
        let scale = s.spectral_radius().max(1.0);
        prop_assert_eq!(s.len(), lap.dim());
        prop_assert!(s.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(s.orthonormality_defect() <= 1e-10);
        prop_assert!(s.residual() <= 1e-10 * scale);
        prop_assert!(s.reconstruction_error(&lap) <= 1e-10 * lap.frobenius_norm().max(1.0));
    }

    #[test]
    fn lifted_spectrum_contains_base_spectrum(g in arb_graph(9)) {
        let base = eigen_sym(&laplacian_of(&g), SOLVER_TOL).unwrap();
        let lifted_lap = laplacian_of(lift(&g).lifted());
        let lifted = eigen_sym(&lifted_lap, SOLVER_TOL).unwrap();
        let tol = 1e-8 * lifted.spectral_radius().max(1.0);

        let w = spectrum_subset(&base, &lifted, tol);
        prop_assert!(w.holds(), "unmatched {:?}", w.unmatched);
        let upper = 2.0 * g.strip_self_loops().max_degree() as f64 + 1.0;
        prop_assert!(base.max() <= upper + tol);
        prop_assert!(base.min() >= -tol);
        prop_assert!(lift_eigvec_residual(&base, &lifted_lap) <= tol);

        if g.is_pseudo_connected() {
            prop_assert!(w.matching.iter().all(|&(_, j)| lifted.eigenvalues()[j] > tol));
        }
    }

    #[test]
    fn loops_raise_the_top_eigenvalue_by_at_most_one(g in arb_graph(9)) {
        let with = eigen_sym(&laplacian_of(&g), SOLVER_TOL).unwrap().max();
        let without = eigen_sym(&laplacian_of(&g.strip_self_loops()), SOLVER_TOL).unwrap().max();
        prop_assert!(with <= without + 1.0 + 1e-10);
        prop_assert!(without <= 2.0 * g.strip_self_loops().max_degree() as f64 + 1e-10);
    }

    #[test]
    fn loopless_lift_doubles_the_spectrum(g in arb_graph(7)) {
        let stripped = g.strip_self_loops();
        let base = eigen_sym(&laplacian_of(&stripped), SOLVER_TOL).unwrap();
        let lg = lift(&stripped);
        prop_assert_eq!(lg.lifted().degrees()[lg.middle() - 1], 0);
        let lifted = eigen_sym(&laplacian_of(lg.lifted()), SOLVER_TOL).unwrap();
        let mut expected: Vec<f64> = base.eigenvalues().iter().flat_map(|&x| [x, x]).collect();
        expected.push(0.0);
        expected.sort_by(f64::total_cmp);
        for (a, b) in lifted.eigenvalues().iter().zip(&expected) {
            prop_assert!((a - b).abs() <= 1e-9, "{:?} vs {:?}", lifted.eigenvalues(), expected);
        }
    }

    #[test]
    fn connected_loopless_kernel_is_the_ones_vector(g in arb_graph(9)) {
        let g = g.strip_self_loops();
        prop_assume!(g.is_connected() && g.vertex_count() >= 2);
        let s = eigen_sym(&laplacian_of(&g), SOLVER_TOL).unwrap();
        prop_assert!(s.eigenvalues()[0].abs() <= 1e-10);
        prop_assert!(s.eigenvalues()[1] > 1e-8);
        let n = g.vertex_count() as f64;
        let v = s.eigenvector(0);
        prop_assert!((dot(v, &vec![1.0; v.len()]).abs() - n.sqrt()).abs() <= 1e-9);
    }

    #[test]
    fn single_loop_connected_graphs_are_positive_definite(
        g in arb_connected_single_loop(10),
        raw in proptest::collection::vec(-1.0f64..1.0, 10),
        zeta in -1.0f64..1.0,
    ) {
        let n = g.vertex_count();
        let lap = laplacian_of(&g);
        let s = eigen_sym(&lap, SOLVER_TOL).unwrap();
        prop_assert!(g.is_pseudo_connected());
        prop_assert!(s.min() > 1e-8 * s.spectral_radius().max(1.0));

        let mean = raw[..n].iter().sum::<f64>() / n as f64;
        let w: Vec<f64> = raw[..n].iter().map(|x| x - mean).collect();
        let v: Vec<f64> = w.iter().map(|x| x + zeta).collect();
        let value = lap.quadratic_form(&v);
        prop_assert!(value >= -1e-10);
        if dot(&v, &v) > 1e-12 {
            prop_assert!(value > 0.0);
        }
    }

    #[test]
    fn verify_all_passes(g in arb_graph(8)) {
        let report = verify_all(&g, &Tolerances::default()).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn charpoly_agrees_with_jacobi(g in arb_graph(6)) {
        let lap = laplacian_of(&g);
        let jacobi = eigen_sym(&lap, SOLVER_TOL).unwrap();
        let exact = charpoly_eigenvalues(&lap, 1e-13).unwrap();
        for (a, b) in jacobi.eigenvalues().iter().zip(&exact) {
            prop_assert!((a - b).abs() <= 1e-8, "{:?} vs {:?}", jacobi.eigenvalues(), exact);
        }
    }
}
