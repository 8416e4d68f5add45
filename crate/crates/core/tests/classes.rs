use proptest::prelude::*;
use std::collections::BTreeSet;
use trapspaces::classes::{counterexample_violations, ViolationKind};
use trapspaces::fixtures::{f_ex3, named, FIXTURES};
use trapspaces::verify::exhaustive_population;
use trapspaces::{
    check_alternate_definitions, classify_network, enumerate_trapspaces, min_trapping_extension,
    min_trapspace_equivalent, minimal_trapspaces, trapping_closure, trapspace_equivalent,
    verify_diagram, AlternateTheorem, BooleanNetwork, ClassReport, Configuration, DiagramId,
    DiagramSpec, Mask,
};

fn network(max_n: usize) -> impl Strategy<Value = BooleanNetwork> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 1 << n)
            .prop_map(move |t| BooleanNetwork::from_table(n, t).unwrap())
    })
}

fn updates(f: &BooleanNetwork) -> Vec<BooleanNetwork> {
    let n = f.dimension();
    (0u32..1 << n).map(|s| f.update(Mask::new(n, s).unwrap()).unwrap()).collect()
}

fn bijective(t: &[u32]) -> bool {
    t.iter().collect::<BTreeSet<_>>().len() == t.len()
}

fn involutive(t: &[u32]) -> bool {
    (0..t.len()).all(|x| t[t[x] as usize] == x as u32)
}

fn idempotent(t: &[u32]) -> bool {
    (0..t.len()).all(|x| t[t[x] as usize] == t[x])
}

/// Reachability in the asynchronous graph, built directly from the
/// single-coordinate updates.
fn async_reach(f: &BooleanNetwork) -> Vec<Vec<bool>> {
    let n = f.dimension();
    let v = f.size();
    let singles: Vec<BooleanNetwork> =
        (1..=n).map(|i| f.update(Mask::from_coordinates(n, &[i]).unwrap()).unwrap()).collect();
    (0..v)
        .map(|x| {
            let mut seen = vec![false; v];
            let mut stack = vec![x];
            seen[x] = true;
            while let Some(u) = stack.pop() {
                for g in &singles {
                    let w = g.table()[u] as usize;
                    if !std::mem::replace(&mut seen[w], true) {
                        stack.push(w);
                    }
                }
            }
            seen
        })
        .collect()
}

fn interval_points(f: &BooleanNetwork, x: u32) -> Vec<u32> {
    let d = x ^ f.table()[x as usize];
    (0u32..f.size() as u32).filter(|y| (x ^ y) & !d == 0).collect()
}

/// Class flags computed from update tables and explicit reachability.
fn class_oracle(f: &BooleanNetwork) -> ClassReport {
    let n = f.dimension();
    let t = f.table();
    let ups = updates(f);
    let single = |i: usize| &ups[1 << i];
    let commutative = (0..n).all(|i| {
        (0..n).all(|j| single(i).then(single(j)).unwrap() == single(j).then(single(i)).unwrap())
    });
    // GA arcs x -> f^(S)(x); transitive iff every two-step target is one step
    let ga_out: Vec<BTreeSet<u32>> =
        (0..f.size()).map(|x| ups.iter().map(|g| g.table()[x]).collect()).collect();
    let trapping = ga_out
        .iter()
        .all(|out| out.iter().all(|&y| ga_out[y as usize].is_subset(out)));
    let reach = async_reach(f);
    let fixed = |x: u32| t[x as usize] == x;
    let fixable = (0..f.size()).all(|x| {
        let terminal = (0..f.size()).all(|y| !reach[x][y] || reach[y][x]);
        !terminal || (0..f.size()).all(|y| !reach[x][y] || x == y)
    });
    let traps = enumerate_trapspaces(f).unwrap();
    let fps: Vec<usize> =
        (0..f.size() as u32).map(|x| interval_points(f, x).into_iter().filter(|&y| fixed(y)).count()).collect();
    let trapspace_fp = traps.iter().all(|c| c.members().any(|x| fixed(x.bits())));
    let principal: Vec<_> = f
        .configurations()
        .map(|x| ::trapspaces::principal_trapspace(f, x).unwrap())
        .collect();
    ClassReport {
        trapping,
        commutative,
        marseille: commutative && bijective(t),
        lille: commutative && idempotent(t),
        globally_idempotent: ups.iter().all(|g| idempotent(g.table())),
        bijective: bijective(t),
        locally_bijective: (0..n).all(|i| bijective(single(i).table())),
        globally_bijective: ups.iter().all(|g| bijective(g.table())),
        involutive: involutive(t),
        locally_involutive: (0..n).all(|i| involutive(single(i).table())),
        globally_involutive: ups.iter().all(|g| involutive(g.table())),
        idempotent: idempotent(t),
        locally_idempotent: (0..n).all(|i| idempotent(single(i).table())),
        dynamically_local: f.then(f).unwrap().then(f).unwrap() == *f,
        dpt: principal.iter().collect::<BTreeSet<_>>().len() == principal.len(),
        fixable,
        trapspace_fp,
        interval_fp: fps.iter().all(|&k| k >= 1),
        interval_ufp: fps.iter().all(|&k| k == 1),
        min_trapping: min_trapping_extension(f) == *f,
    }
}

#[test]
fn classification_matches_oracle_on_every_two_dimensional_network() {
    let population = exhaustive_population(2).unwrap();
    let mut trapping = 0;
    let mut commutative = 0;
    for f in &population {
        let r = classify_network(f).unwrap();
        assert_eq!(r, class_oracle(f), "{f:?}");
        trapping += r.trapping as usize;
        commutative += r.commutative as usize;
    }
    assert_eq!((trapping, commutative), (90, 44));
}

#[test]
fn hierarchy_on_the_running_example() {
    let f = f_ex3();
    let r = classify_network(&f).unwrap();
    assert!(!r.trapping);
    let ft = trapping_closure(&f);
    assert!(classify_network(&ft).unwrap().trapping);
    let id = classify_network(&named("examples/id").unwrap()).unwrap();
    assert!(id.lille && id.marseille && id.globally_idempotent && id.interval_ufp);
    let neg = classify_network(&named("examples/neg").unwrap()).unwrap();
    assert!(neg.marseille && neg.globally_involutive && !neg.fixable);
}

#[test]
fn trapspace_equivalence_of_fixture_pairs() {
    let f = f_ex3();
    let ft = named("examples/f_ex3_closure").unwrap();
    assert_eq!(trapspace_equivalent(&f, &ft).unwrap(), vec![true; 5]);
    let id = named("examples/id").unwrap();
    let neg = named("examples/neg").unwrap();
    assert_eq!(trapspace_equivalent(&id, &neg).unwrap(), vec![false; 5]);

    let a = named("minimal/min_pair_a").unwrap();
    let b = named("minimal/min_pair_b").unwrap();
    assert_eq!(min_trapspace_equivalent(&a, &b).unwrap(), vec![true; 4]);
    assert_eq!(trapspace_equivalent(&a, &b).unwrap(), vec![false; 5]);
    assert_eq!(minimal_trapspaces(&a), minimal_trapspaces(&b));
    assert_eq!(min_trapping_extension(&a), min_trapping_extension(&b));
    assert!(trapspace_equivalent(&a, &f).is_err());
}

#[test]
fn alternate_definitions_are_constant_on_fixtures() {
    for (label, _) in FIXTURES {
        let f = named(label).unwrap();
        for t in AlternateTheorem::ALL {
            let v = check_alternate_definitions(&f, t).unwrap();
            assert!(v.iter().all(|&b| b == v[0]), "{label} {}: {v:?}", t.name());
        }
    }
}

#[test]
fn every_fixture_refutes_its_implication() {
    for id in DiagramId::ALL {
        let d = DiagramSpec::new(id);
        assert!(!d.counterexamples.is_empty());
        let v = counterexample_violations(&d).unwrap();
        assert!(v.is_empty(), "{}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n"));
    }
}

#[test]
fn fixtures_violate_exactly_the_missing_arrows() {
    // a counterexample, read as a population member, is never an edge violation
    let population: Vec<BooleanNetwork> = FIXTURES.iter().map(|(l, _)| named(l).unwrap()).collect();
    for id in DiagramId::ALL {
        let v = verify_diagram(&DiagramSpec::new(id), &population).unwrap();
        assert!(v.iter().all(|x| !matches!(x.kind, ViolationKind::Edge(_))), "{id:?}");
    }
}

#[test]
fn diagrams_hold_on_every_two_dimensional_network() {
    let population = exhaustive_population(2).unwrap();
    for id in DiagramId::ALL {
        assert!(verify_diagram(&DiagramSpec::new(id), &population).unwrap().is_empty());
    }
}

#[test]
fn fixed_points_of_the_running_example() {
    let f = f_ex3();
    let fixed: Vec<Configuration> = f.configurations().filter(|&x| f.apply(x).unwrap() == x).collect();
    assert_eq!(fixed.iter().map(|x| x.to_string()).collect::<Vec<_>>(), ["100", "110", "101"]);
    assert!(classify_network(&f).unwrap().trapspace_fp);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn classification_matches_oracle(f in network(4)) {
        prop_assert_eq!(classify_network(&f).unwrap(), class_oracle(&f));
    }

    #[test]
    fn equivalence_conditions_agree(f in network(3), g in network(3)) {
        prop_assume!(f.dimension() == g.dimension());
        let v = trapspace_equivalent(&f, &g).unwrap();
        prop_assert!(v.iter().all(|&b| b == v[0]));
        let w = min_trapspace_equivalent(&f, &g).unwrap();
        prop_assert!(w.iter().all(|&b| b == w[0]));
        let ft = trapping_closure(&f);
        prop_assert_eq!(trapspace_equivalent(&f, &ft).unwrap(), vec![true; 5]);
    }
}
