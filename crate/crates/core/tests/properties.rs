use num_bigint::BigUint;
use proptest::prelude::*;

use ufa_core::automata::{
    backward_determinize, complement_ufa, equivalent, forward_determinize, is_unambiguous,
    Direction, Nfa, Symbol,
};
use ufa_core::bounds;
use ufa_core::bridge::{extract_graph, graph_to_ufa};
use ufa_core::format::{parse_automaton, parse_graph, serialize_automaton, serialize_graph};
use ufa_core::graph::{
    clique_coclique_covers, count_cliques, count_cocliques, is_clique, is_coclique, Graph,
};
use ufa_core::StateSet;

const CAP: usize = 1 << 16;

prop_compose! {
    fn arb_nfa(max_states: usize, max_symbols: usize)
        (n in 0..=max_states, k in 1..=max_symbols)
        (mask in prop::collection::vec(prop::bool::weighted(0.3), n * k * n),
         initial in prop::collection::vec(any::<bool>(), n),
         finals in prop::collection::vec(any::<bool>(), n),
         n in Just(n), k in Just(k))
        -> Nfa
    {
        let alphabet: Vec<Symbol> = (0..k)
            .map(|i| Symbol::new(((b'a' + i as u8) as char).to_string()).unwrap())
            .collect();
        let mut transitions = Vec::new();
        for p in 0..n {
            for a in 0..k {
                for q in 0..n {
                    if mask[(p * k + a) * n + q] {
                        transitions.push((p, a, q));
                    }
                }
            }
        }
        let pick = |bits: &[bool]| -> StateSet {
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
        };
        Nfa::new(n, alphabet, transitions, pick(&initial), pick(&finals)).unwrap()
    }
}

prop_compose! {
    fn arb_graph(max_vertices: usize)
        (n in 0..=max_vertices)
        (edges in prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2), n in Just(n))
        -> Graph
    {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, pairs.zip(edges).filter(|(_, e)| *e).map(|(p, _)| p)).unwrap()
    }
}

/// All words over `0..k` of length at most `max_len`.
fn words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..k).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        all.extend(frontier.iter().cloned());
    }
    all
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn determinizations_recognize_the_same_language(nfa in arb_nfa(6, 3)) {
        let fwd = forward_determinize(&nfa, CAP).unwrap();
        let bwd = backward_determinize(&nfa, CAP).unwrap();
        let bwd_nfa = bwd.to_nfa();
        for w in words(nfa.alphabet().len(), 6) {
            let runs = nfa.count_accepting_runs_by_index(&w) >= BigUint::from(1u8);
            prop_assert_eq!(fwd.accepts_by_index(&w), runs);
            prop_assert_eq!(bwd.accepts_by_index(&w), runs);
            prop_assert_eq!(bwd_nfa.accepts_by_index(&w), runs);
        }
    }

    #[test]
    fn forward_states_are_exactly_reachable_subsets(nfa in arb_nfa(5, 2)) {
        let fwd = forward_determinize(&nfa, CAP).unwrap();
        // Every subset is reached by a word shorter than the number of subsets.
        let max_len = (fwd.len() - 1).min(10);
        let mut seen: Vec<StateSet> = words(nfa.alphabet().len(), max_len)
            .iter()
            .map(|w| nfa.reach_forward_by_index(nfa.initial(), w))
            .collect();
        seen.sort();
        seen.dedup();
        let mut states = fwd.states().to_vec();
        states.sort();
        prop_assert!(seen.iter().all(|s| states.binary_search(s).is_ok()));
        if fwd.len() - 1 <= 10 {
            prop_assert_eq!(states, seen);
        }
    }

    #[test]
    fn backward_determinization_is_backward_deterministic(nfa in arb_nfa(6, 3)) {
        let b = backward_determinize(&nfa, CAP).unwrap().to_nfa();
        prop_assert_eq!(b.final_states().len(), 1);
        for s in 0..b.state_count() {
            for a in 0..b.alphabet().len() {
                prop_assert_eq!(b.predecessors(s, a).len(), 1);
            }
        }
        prop_assert!(is_unambiguous(&b).is_unambiguous());
    }

    #[test]
    fn ambiguity_witness_has_two_runs(nfa in arb_nfa(6, 3)) {
        match is_unambiguous(&nfa).witness() {
            Some(w) => {
                prop_assert!(w.len() <= 2 * nfa.state_count().pow(2));
                prop_assert!(nfa.count_accepting_runs(w).unwrap() >= BigUint::from(2u8));
            }
            None => {
                for w in words(nfa.alphabet().len(), 5) {
                    prop_assert!(nfa.count_accepting_runs_by_index(&w) <= BigUint::from(1u8));
                }
            }
        }
    }

    #[test]
    fn complement_is_an_unambiguous_complement(nfa in arb_nfa(6, 3)) {
        prop_assume!(is_unambiguous(&nfa).is_unambiguous());
        let (c, report) = complement_ufa(&nfa, CAP).unwrap();
        prop_assert!(is_unambiguous(&c).is_unambiguous());
        let (k, l) = (report.k.unwrap(), report.l.unwrap());
        prop_assert_eq!(report.result_states, k.min(l));
        prop_assert_eq!(report.chosen == Direction::Forward, k <= l);
        prop_assert_eq!(c.state_count(), report.result_states);
        prop_assert!(report.within_bound());
        for w in words(nfa.alphabet().len(), 6) {
            let zero = BigUint::from(0u8);
            prop_assert_eq!(
                c.count_accepting_runs_by_index(&w) > zero,
                nfa.count_accepting_runs_by_index(&w) == zero
            );
        }
        // complementing twice gives the original language back
        let (cc, _) = complement_ufa(&c, CAP).unwrap();
        prop_assert_eq!(equivalent(&cc, &nfa, CAP).unwrap(), None);
    }

    #[test]
    fn extracted_graph_bounds_determinizations(nfa in arb_nfa(6, 3)) {
        prop_assume!(is_unambiguous(&nfa).is_unambiguous());
        let g = extract_graph(&nfa).unwrap();
        let fwd = forward_determinize(&nfa, CAP).unwrap();
        let bwd = backward_determinize(&nfa, CAP).unwrap();
        prop_assert!(fwd.states().iter().all(|s| is_clique(&g, s)));
        prop_assert!(bwd.states().iter().all(|s| is_coclique(&g, s)));
        prop_assert!(count_cliques(&g) >= BigUint::from(fwd.len()));
        prop_assert!(count_cocliques(&g) >= BigUint::from(bwd.len()));
    }

    #[test]
    fn equivalence_agrees_with_word_enumeration(a in arb_nfa(4, 2), b in arb_nfa(4, 2)) {
        prop_assume!(a.alphabet() == b.alphabet());
        let verdict = equivalent(&a, &b, CAP).unwrap();
        let differs = words(a.alphabet().len(), 8)
            .iter()
            .any(|w| a.accepts_by_index(w) != b.accepts_by_index(w));
        match verdict {
            Some(w) => {
                prop_assert!(a.accepts(&w).unwrap() != b.accepts(&w).unwrap());
                prop_assert!(differs || w.len() > 8);
            }
            None => prop_assert!(!differs),
        }
    }

    #[test]
    fn automaton_text_round_trip(nfa in arb_nfa(6, 3)) {
        let text = serialize_automaton(&nfa);
        let back = parse_automaton(&text).unwrap();
        prop_assert_eq!(&back, &nfa);
        prop_assert_eq!(serialize_automaton(&back), text);
    }

    #[test]
    fn graph_text_round_trip(g in arb_graph(9)) {
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn product_equals_sum_of_covers(g in arb_graph(6)) {
        let total: usize = g
            .vertices()
            .subsets()
            .map(|s| clique_coclique_covers(&g, &s).len())
            .sum();
        prop_assert_eq!(BigUint::from(total), count_cliques(&g) * count_cocliques(&g));
        let min = count_cliques(&g).min(count_cocliques(&g));
        prop_assert!(bounds::square_at_most(min, g.vertex_count()));
    }

    #[test]
    fn graph_to_ufa_is_unambiguous_with_large_determinizations(g in arb_graph(6)) {
        let ufa = graph_to_ufa(&g);
        prop_assert!(is_unambiguous(&ufa).is_unambiguous());
        prop_assert!(BigUint::from(forward_determinize(&ufa, CAP).unwrap().len()) >= count_cliques(&g));
        prop_assert!(BigUint::from(backward_determinize(&ufa, CAP).unwrap().len()) >= count_cocliques(&g));
    }
}
