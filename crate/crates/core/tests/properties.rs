use broadcasts::broadcast::{
    is_dominating, is_independent, is_irredundant, is_maximal, is_maximal_exhaustive, is_minimal,
    is_minimal_exhaustive, is_packing, Broadcast, Cap, Kind,
};
use broadcasts::graph::{make_cycle, make_path, Graph};
use broadcasts::solver::{enumerate, SolverConfig};
use broadcasts::{Parameter, Solver};
use proptest::prelude::*;

fn paths_and_cycles(max: usize) -> Vec<Graph> {
    let mut gs: Vec<Graph> = (2..=max).map(|n| make_path(n).unwrap()).collect();
    gs.extend((3..=max).map(|n| make_cycle(n).unwrap()));
    gs
}

fn all(g: &Graph) -> impl Iterator<Item = Broadcast> {
    enumerate(g, Cap::Eccentricity, SolverConfig::default()).unwrap()
}

#[test]
fn packing_is_independent_and_irredundant() {
    for g in paths_and_cycles(8) {
        for f in all(&g) {
            if is_packing(&g, &f).unwrap() {
                assert!(is_independent(&g, &f).unwrap(), "{g} {f}");
                assert!(is_irredundant(&g, &f).unwrap(), "{g} {f}");
            }
        }
    }
}

#[test]
fn maximal_independent_is_dominating() {
    for g in paths_and_cycles(8) {
        for f in all(&g) {
            if is_independent(&g, &f).unwrap() && is_maximal(&g, &f, Kind::Independent, Cap::Eccentricity).unwrap() {
                assert!(is_dominating(&g, &f).unwrap(), "{g} {f}");
            }
        }
    }
}

#[test]
fn dominating_maximal_irredundant_is_minimal_dominating() {
    for g in paths_and_cycles(8) {
        for f in all(&g) {
            if is_dominating(&g, &f).unwrap()
                && is_irredundant(&g, &f).unwrap()
                && is_maximal(&g, &f, Kind::Irredundant, Cap::Eccentricity).unwrap()
            {
                assert!(is_minimal(&g, &f, Kind::Dominating, Cap::Eccentricity).unwrap(), "{g} {f}");
            }
        }
    }
}

#[test]
fn minimal_domination_three_ways() {
    for g in paths_and_cycles(7) {
        for f in all(&g) {
            if !is_dominating(&g, &f).unwrap() {
                continue;
            }
            let by_decrement = is_minimal(&g, &f, Kind::Dominating, Cap::Eccentricity).unwrap();
            let by_search = is_minimal_exhaustive(&g, &f, Kind::Dominating, Cap::Eccentricity).unwrap();
            let by_border = is_irredundant(&g, &f).unwrap();
            assert_eq!(by_decrement, by_search, "{g} {f}");
            assert_eq!(by_decrement, by_border, "{g} {f}");
        }
    }
}

#[test]
fn one_step_maximality_matches_definition() {
    for g in paths_and_cycles(6) {
        for f in all(&g) {
            for kind in [Kind::Independent, Kind::Packing] {
                if broadcasts::broadcast::is_kind(&g, &f, kind).unwrap() {
                    assert_eq!(
                        is_maximal(&g, &f, kind, Cap::Eccentricity).unwrap(),
                        is_maximal_exhaustive(&g, &f, kind, Cap::Eccentricity).unwrap(),
                        "{g} {f} {kind}"
                    );
                }
            }
        }
    }
}

#[test]
fn maximal_irredundance_matches_definition() {
    for g in paths_and_cycles(6) {
        for f in all(&g) {
            if is_irredundant(&g, &f).unwrap() {
                assert_eq!(
                    is_maximal(&g, &f, Kind::Irredundant, Cap::Eccentricity).unwrap(),
                    is_maximal_exhaustive(&g, &f, Kind::Irredundant, Cap::Eccentricity).unwrap(),
                    "{g} {f}"
                );
                assert_eq!(
                    is_minimal(&g, &f, Kind::Irredundant, Cap::Eccentricity).unwrap(),
                    is_minimal_exhaustive(&g, &f, Kind::Irredundant, Cap::Eccentricity).unwrap(),
                    "{g} {f}"
                );
            }
        }
    }
}

#[test]
fn enumeration_is_lexicographic_and_complete() {
    for g in paths_and_cycles(6) {
        let list: Vec<Broadcast> = all(&g).collect();
        let expected: usize = g.eccentricities().iter().map(|&e| e as usize + 1).product();
        assert_eq!(list.len(), expected);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn witnesses_do_not_depend_on_thread_count() {
    let graphs = [make_path(9).unwrap(), make_cycle(9).unwrap()];
    let solve_all = || -> Vec<(u32, Broadcast, u64)> {
        graphs
            .iter()
            .flat_map(|g| {
                Parameter::ALL.iter().map(move |&p| {
                    let r = Solver::new(g).solve_parameter(p).unwrap();
                    (r.value, r.witness, r.nodes_explored)
                })
            })
            .collect()
    };
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(solve_all);
    let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(solve_all);
    assert_eq!(single, many);
}

fn graph_and_pair() -> impl Strategy<Value = (Graph, Vec<u32>, Vec<u32>)> {
    (2usize..=10, any::<bool>())
        .prop_filter("cycles need three vertices", |(n, cyc)| !(*cyc && *n < 3))
        .prop_flat_map(|(n, cyc)| {
            let g = if cyc { make_cycle(n).unwrap() } else { make_path(n).unwrap() };
            let upper: Vec<_> = g.eccentricities().iter().map(|&e| 0..=e).collect();
            (Just(g), upper)
        })
        .prop_flat_map(|(g, upper)| {
            let lower: Vec<_> = upper.iter().map(|&x| 0..=x).collect();
            (Just(g), Just(upper), lower)
        })
}

proptest! {
    #[test]
    fn packing_and_independence_are_downward_closed((g, upper, lower) in graph_and_pair()) {
        let (hi, lo) = (Broadcast::new(upper), Broadcast::new(lower));
        prop_assert!(lo.le(&hi));
        if is_packing(&g, &hi).unwrap() {
            prop_assert!(is_packing(&g, &lo).unwrap());
        }
        if is_independent(&g, &hi).unwrap() {
            prop_assert!(is_independent(&g, &lo).unwrap());
        }
        if is_dominating(&g, &lo).unwrap() {
            prop_assert!(is_dominating(&g, &hi).unwrap());
        }
    }

    #[test]
    fn text_format_round_trips(values in proptest::collection::vec(0u32..40, 1..30)) {
        let f = Broadcast::new(values);
        let back: Broadcast = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }
}
