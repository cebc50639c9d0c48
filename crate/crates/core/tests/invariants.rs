use degcond::catalog::{Condition, ConditionId, Params};
use degcond::oracles::{forcibly, OracleLimits, PropertyId, Requirement};
use degcond::sinks::{bm_mismatches, classify, sinks_from, Classified};
use degcond::witness::witness_for;
use degcond::{enumerate_graphical, DegreeSequence, Graph};
use std::collections::{BTreeMap, HashMap};

fn classified(cache: &mut HashMap<(Requirement, usize), Vec<Classified>>, req: Requirement, n: usize) -> &[Classified] {
    cache.entry((req, n)).or_insert_with(|| classify(req, n, &OracleLimits::default().raised_to(n)).unwrap())
}

#[test]
fn best_monotone_rows_declare_exactly_the_unblocked_sequences() {
    let mut cache = HashMap::new();
    for &id in ConditionId::all().iter().filter(|id| id.info().flags.best_monotone) {
        for p in id.param_grid() {
            for n in 1..=6 {
                let Ok(cond) = Condition::new(id, &p, n) else { continue };
                let req = cond.requirement();
                let report = sinks_from(req, n, classified(&mut cache, req, n));
                let off = bm_mismatches(&cond, &report).unwrap();
                assert!(off.is_empty(), "{id}({p}) n={n}: {off:?}");
            }
        }
    }
}

#[test]
fn declared_sets_are_monotone_up_to_seven() {
    let all: Vec<DegreeSequence> = enumerate_graphical(7).collect();
    for &id in ConditionId::all() {
        for p in id.param_grid() {
            let Ok(cond) = Condition::new(id, &p, 7) else { continue };
            let declared: Vec<bool> = all.iter().map(|s| cond.declares(s).unwrap()).collect();
            for (a, lo) in all.iter().enumerate() {
                for (b, hi) in all.iter().enumerate() {
                    if !hi.majorizes(lo).unwrap() {
                        continue;
                    }
                    let (from, to) = if id.is_decreasing() { (b, a) } else { (a, b) };
                    assert!(!declared[from] || declared[to], "{id}({p}): {} vs {}", all[from], all[to]);
                }
            }
        }
    }
}

#[test]
fn sinks_block_each_other() {
    let props = [
        PropertyId::Hamiltonian,
        PropertyId::Traceable,
        PropertyId::KConnected(2),
        PropertyId::KEdgeConnected(2),
        PropertyId::TwoFactor,
        PropertyId::Pancyclic,
        PropertyId::AlphaLe(2),
        PropertyId::Deficient(0),
    ];
    let mut cache = HashMap::new();
    for p in props {
        for n in 3..=6 {
            let req = Requirement::has(p);
            let r = sinks_from(req, n, classified(&mut cache, req, n));
            assert!(r.pairwise_incomparable, "{p} n={n}");
            assert!(r.pairwise_blocking, "{p} n={n}: {:?}", r.sinks);
            assert_eq!(r.certificates.len(), r.count);
            for (s, g) in r.sinks.iter().zip(&r.certificates) {
                assert_eq!(&g.degree_sequence(), s);
            }
        }
    }
}

#[test]
fn hamiltonian_witnesses_are_pairwise_incomparable() {
    for n in 3..=12 {
        let cond = Condition::new(ConditionId::Ham, &Params::none(), n).unwrap();
        let seqs: Vec<DegreeSequence> = cond
            .instances()
            .iter()
            .map(|inst| {
                witness_for(ConditionId::Ham, &Params::none(), n, inst.clause, inst.i, inst.j).unwrap().sequence
            })
            .collect();
        for (a, s) in seqs.iter().enumerate() {
            for t in &seqs[a + 1..] {
                assert!(!s.majorizes(t).unwrap() && !t.majorizes(s).unwrap(), "n={n}: {s} vs {t}");
            }
        }
    }
}

fn hamiltonian_brute(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    // reach[mask] holds the end vertices of paths from vertex 0 covering mask
    let mut reach = vec![0u64; 1 << n];
    reach[1] = 1;
    for mask in 1..1usize << n {
        for v in 0..n {
            if reach[mask] >> v & 1 == 1 {
                for u in 0..n {
                    if mask >> u & 1 == 0 && g.has_edge(v, u) {
                        reach[mask | 1 << u] |= 1 << u;
                    }
                }
            }
        }
    }
    let full = (1 << n) - 1;
    (1..n).any(|v| reach[full] >> v & 1 == 1 && g.has_edge(v, 0))
}

#[test]
fn forcibly_hamiltonian_matches_labeled_graph_sweep() {
    for n in 1..=6 {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut all_ham: BTreeMap<DegreeSequence, bool> = BTreeMap::new();
        for mask in 0u32..1 << slots.len() {
            let mut g = Graph::empty(n);
            for (b, &(u, v)) in slots.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            let h = hamiltonian_brute(&g);
            *all_ham.entry(g.degree_sequence()).or_insert(true) &= h;
        }
        assert_eq!(all_ham.len(), enumerate_graphical(n).count());
        for (pi, want) in all_ham {
            assert_eq!(forcibly(PropertyId::Hamiltonian, &pi).unwrap(), want, "{pi}");
        }
    }
}
