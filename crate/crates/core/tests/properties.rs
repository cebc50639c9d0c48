use degcond::catalog::{
    caro_wei, clique_chromatic_lower, evaluate, murphy_alpha, welsh_powell_chi_upper, Condition, ConditionId, Params,
};
use degcond::oracles::{has_property, PropertyId};
use degcond::{DegreeSequence, Graph};
use proptest::prelude::*;

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let slots = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), on) in slots.zip(bits) {
                if on {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

/// Repeatedly connect the largest remaining degree to the next largest ones.
fn havel_hakimi(mut d: Vec<usize>) -> bool {
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        let Some(&top) = d.first() else { return true };
        if top == 0 {
            return true;
        }
        if top >= d.len() {
            return false;
        }
        d.remove(0);
        for x in d.iter_mut().take(top) {
            if *x == 0 {
                return false;
            }
            *x -= 1;
        }
    }
}

fn alpha_brute(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || g.neighbors(v) & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn omega_brute(g: &Graph) -> usize {
    alpha_brute(&g.complement())
}

fn colourable(g: &Graph, k: usize, colour: &mut Vec<usize>) -> bool {
    let v = colour.len();
    if v == g.n() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| colour[u] != c || !g.has_edge(u, v)) {
            colour.push(c);
            if colourable(g, k, colour) {
                return true;
            }
            colour.pop();
        }
    }
    false
}

fn chi_brute(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| colourable(g, k, &mut Vec::new())).unwrap()
}

const INCREASING_ROWS: [ConditionId; 6] = [
    ConditionId::Ham,
    ConditionId::Kconn,
    ConditionId::Edge2,
    ConditionId::Tough,
    ConditionId::Pancyc,
    ConditionId::Factor2,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graphicality_agrees_with_havel_hakimi(v in proptest::collection::vec(0usize..10, 1..12)) {
        let s = DegreeSequence::new(v.clone());
        prop_assert_eq!(s.is_graphical(), havel_hakimi(v));
    }

    #[test]
    fn majorization_is_a_partial_order(a in proptest::collection::vec(0usize..8, 6), b in proptest::collection::vec(0usize..8, 6), c in proptest::collection::vec(0usize..8, 6)) {
        let (a, b, c) = (DegreeSequence::new(a), DegreeSequence::new(b), DegreeSequence::new(c));
        prop_assert!(a.majorizes(&a).unwrap());
        if a.majorizes(&b).unwrap() && b.majorizes(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if a.majorizes(&b).unwrap() && b.majorizes(&c).unwrap() {
            prop_assert!(a.majorizes(&c).unwrap());
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(1, 9)) {
        let s = g.degree_sequence();
        prop_assert_eq!(s.complement().unwrap(), g.complement().degree_sequence());
        prop_assert_eq!(s.complement().unwrap().complement().unwrap(), s);
    }

    #[test]
    fn adding_an_edge_keeps_increasing_rows_declared(g in graph_strategy(2, 10), pick in any::<prop::sample::Index>()) {
        let n = g.n();
        let missing: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        if missing.is_empty() {
            return Ok(());
        }
        let (u, v) = missing[pick.index(missing.len())];
        let mut h = g.clone();
        h.add_edge(u, v);
        let (lo, hi) = (g.degree_sequence(), h.degree_sequence());
        prop_assert!(hi.majorizes(&lo).unwrap());
        for id in INCREASING_ROWS {
            for p in id.param_grid() {
                let Ok(cond) = Condition::new(id, &p, n) else { continue };
                prop_assert!(!cond.declares(&lo).unwrap() || cond.declares(&hi).unwrap(), "{} {} {}", id, lo, hi);
            }
        }
    }

    #[test]
    fn declared_sequences_give_the_property(g in graph_strategy(1, 8)) {
        let pi = g.degree_sequence();
        for id in INCREASING_ROWS {
            for p in id.param_grid() {
                let Ok(cond) = Condition::new(id, &p, g.n()) else { continue };
                if cond.declares(&pi).unwrap() {
                    let degcond::oracles::Requirement::Has { property } = cond.requirement() else { continue };
                    prop_assert!(has_property(property, &g).unwrap(), "{} {} on {:?}", id, p, g.edges());
                }
            }
        }
    }

    #[test]
    fn lazy_and_traced_verdicts_agree(g in graph_strategy(1, 9)) {
        let pi = g.degree_sequence();
        for &id in ConditionId::all() {
            for p in id.param_grid() {
                let Ok(cond) = Condition::new(id, &p, pi.len()) else { continue };
                let full = cond.evaluate(&pi).unwrap();
                prop_assert_eq!(full.declared, cond.declares(&pi).unwrap());
                prop_assert_eq!(full, evaluate(id, &p, &pi).unwrap());
            }
        }
    }

    #[test]
    fn sequence_bounds_hold_on_every_graph(g in graph_strategy(1, 8)) {
        let pi = g.degree_sequence();
        let alpha = alpha_brute(&g) as i64;
        prop_assert!(murphy_alpha(&pi).unwrap().integer <= alpha);
        prop_assert!(caro_wei(&pi).unwrap().integer <= alpha);
        prop_assert!(clique_chromatic_lower(&pi).unwrap().integer <= omega_brute(&g) as i64);
        let chi = chi_brute(&g);
        prop_assert!(welsh_powell_chi_upper(&pi).unwrap().integer >= chi as i64);
        prop_assert_eq!(has_property(PropertyId::ChiLe(chi), &g).unwrap(), true);
        prop_assert_eq!(chi == 0 || !has_property(PropertyId::ChiLe(chi - 1), &g).unwrap(), true);
    }

    #[test]
    fn ham_and_tough_one_fail_at_the_same_place(g in graph_strategy(3, 10)) {
        let pi = g.degree_sequence();
        let h = evaluate(ConditionId::Ham, &Params::none(), &pi).unwrap();
        let t = evaluate(ConditionId::Tough, &Params::t(degcond::rational::int(1)), &pi).unwrap();
        prop_assert_eq!(h.failing_clause, t.failing_clause);
    }
}
