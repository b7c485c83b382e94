use proptest::prelude::*;

use totdom::families::{self, build_equality_tdset};
use totdom::harness::quotient;
use totdom::iso::{canonical_form, is_isomorphic};
use totdom::solvers::{self, naive};
use totdom::{cartesian_product, Graph};

fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn without_isolated(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(min, max).prop_filter("isolated vertex", |g| !g.has_isolated_vertex())
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let mut out = Graph::empty(g.n()).unwrap();
    for (u, v) in g.edges() {
        out.add_edge(perm[u], perm[v]).unwrap();
    }
    out
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn certificates_are_valid_and_optimal(g in graph_strategy(1, 10)) {
        let gamma = solvers::gamma(&g);
        prop_assert!(g.is_dominating(&gamma.certificate));
        prop_assert_eq!(gamma.certificate.len(), gamma.value);
        prop_assert_eq!(&gamma, &naive::gamma_naive(&g).unwrap());
        let rho = solvers::rho_2(&g);
        prop_assert_eq!(&rho, &naive::rho2_naive(&g).unwrap());
        prop_assert!(rho.value <= gamma.value);
        if !g.has_isolated_vertex() {
            let gt = solvers::gamma_t(&g).unwrap();
            prop_assert!(g.is_total_dominating(&gt.certificate));
            prop_assert!(gamma.value <= gt.value && gt.value <= 2 * gamma.value);
            prop_assert_eq!(gt, naive::gamma_t_naive(&g).unwrap());
        }
    }

    #[test]
    fn product_bounds(g in without_isolated(2, 5), h in without_isolated(2, 5)) {
        let r = quotient(&g, &h).unwrap();
        prop_assert!(r.satisfies_ho());
        prop_assert!(r.gt_g <= r.gt_product && r.gt_h <= r.gt_product);
        prop_assert!(r.gt_product >= solvers::rho_2(&g).value * r.gt_h);
        let swapped = quotient(&h, &g).unwrap();
        prop_assert_eq!(r.gt_product, swapped.gt_product);
        prop_assert_eq!(r.qt, swapped.qt);
    }

    #[test]
    fn product_commutes_up_to_isomorphism(g in graph_strategy(1, 4), h in graph_strategy(1, 4)) {
        let gh = cartesian_product(&g, &h);
        let hg = cartesian_product(&h, &g);
        prop_assert!(is_isomorphic(gh.graph(), hg.graph()));
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_strategy(1, 9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })) {
        let h = relabel(&g, &perm);
        let (a, b) = (canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(&a.code, &b.code);
        prop_assert_eq!(a.graph(&g), b.graph(&h));
    }

    #[test]
    fn invariants_ignore_labels((g, perm) in without_isolated(2, 8).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(solvers::total_domination_number(&g).unwrap(), solvers::total_domination_number(&h).unwrap());
        prop_assert_eq!(solvers::domination_number(&g), solvers::domination_number(&h));
        prop_assert_eq!(solvers::rho_2(&g).value, solvers::rho_2(&h).value);
        prop_assert_eq!(families::classify(&g).unwrap().in_any(), families::classify(&h).unwrap().in_any());
    }

    /// The characterization of `γ_t(G) = γ_t(G □ K2)` on graphs that need
    /// not be connected.
    #[test]
    fn k2_equality_matches_families(g in without_isolated(2, 8)) {
        let c = families::classify(&g).unwrap();
        prop_assert!(c.verify(&g));
        let equal = families::equality_holds(&g, &Graph::k2()).unwrap();
        prop_assert_eq!(equal, c.in_any());
        if c.in_any() {
            let d = build_equality_tdset(&g, &c).unwrap();
            let p = cartesian_product(&g, &Graph::k2());
            prop_assert!(p.graph().is_total_dominating(&d));
            prop_assert_eq!(d.len(), solvers::total_domination_number(&g).unwrap());
        }
    }

    #[test]
    fn all_min_td_sets_are_sorted_minimum_and_complete(g in without_isolated(2, 8)) {
        let sets = solvers::all_min_td_sets(&g, 100_000).unwrap();
        let gt = solvers::gamma_t(&g).unwrap();
        prop_assert_eq!(&sets[0], &gt.certificate);
        prop_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(sets.iter().all(|d| d.len() == gt.value && g.is_total_dominating(d)));
        let brute = (0u32..1 << g.n())
            .filter(|m| m.count_ones() as usize == gt.value)
            .filter(|&m| g.is_total_dominating(&totdom::VertexSet::from_mask(g.n(), m as u128)))
            .count();
        prop_assert_eq!(sets.len(), brute);
    }
}
