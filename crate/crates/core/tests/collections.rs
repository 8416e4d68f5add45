use proptest::prelude::*;
use std::collections::BTreeSet;
use trapspaces::fixtures::f_ex3;
use trapspaces::{
    classify_collection, collection_at, enumerate_trapspaces, lambda_closure, minimal_trapspaces,
    mu_reduction, principal_collection, realize, BooleanNetwork, Configuration, Mask, Subcube,
    SubcubeCollection,
};

fn collection(max_n: usize, max_len: usize) -> impl Strategy<Value = SubcubeCollection> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0u32..1 << n, 0u32..1 << n), 0..=max_len).prop_map(move |raw| {
            let cubes = raw.into_iter().map(|(free, base)| {
                let base = Configuration::new(n, base & !free).unwrap();
                Subcube::new(Mask::new(n, free).unwrap(), base).unwrap()
            });
            SubcubeCollection::new(n, cubes).unwrap()
        })
    })
}

fn network(max_n: usize) -> impl Strategy<Value = BooleanNetwork> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 1 << n)
            .prop_map(move |t| BooleanNetwork::from_table(n, t).unwrap())
    })
}

fn all_subcubes(n: usize) -> impl Iterator<Item = Subcube> {
    (0u32..1 << n).flat_map(move |free| {
        (0u32..1 << n).filter(move |b| b & free == 0).map(move |base| {
            Subcube::new(Mask::new(n, free).unwrap(), Configuration::new(n, base).unwrap()).unwrap()
        })
    })
}

fn point_set(c: &Subcube) -> BTreeSet<u32> {
    c.members().map(|x| x.bits()).collect()
}

/// `λ(A)` read literally: subcubes that are unions of some subfamily of `A`.
fn lambda_oracle(a: &SubcubeCollection) -> SubcubeCollection {
    let members: Vec<Subcube> = a.iter().copied().collect();
    let mut unions: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    for pick in 1u64..1 << members.len() {
        let set: BTreeSet<u32> = members
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .flat_map(|(_, c)| point_set(c))
            .collect();
        unions.insert(set);
    }
    let n = a.dimension();
    SubcubeCollection::new(n, all_subcubes(n).filter(|c| unions.contains(&point_set(c)))).unwrap()
}

/// `A(x)`: intersection of all members containing `x`, as a point set.
fn at_oracle(a: &SubcubeCollection, x: Configuration) -> BTreeSet<u32> {
    let n = a.dimension();
    a.iter()
        .filter(|c| c.contains(x).unwrap())
        .fold((0u32..1 << n).collect(), |acc: BTreeSet<u32>, c| {
            acc.intersection(&point_set(c)).copied().collect()
        })
}

/// Literal convexity: every subcube between two nested members is a member.
fn convex_oracle(a: &SubcubeCollection) -> bool {
    let n = a.dimension();
    a.iter().all(|q| {
        a.iter().all(|r| {
            !q.is_subset(r).unwrap()
                || all_subcubes(n)
                    .filter(|s| q.is_subset(s).unwrap() && s.is_subset(r).unwrap())
                    .all(|s| a.contains(&s))
        })
    })
}

#[test]
fn principal_collection_of_the_worked_example() {
    let q = principal_collection(&f_ex3());
    let flags = classify_collection(&q).unwrap();
    assert!(flags.pre_principal);
    assert!(!flags.convex);
    // *00 lies between 100 and **0 but is not principal
    assert!(!q.contains(&"*00".parse().unwrap()));
    let j = enumerate_trapspaces(&f_ex3()).unwrap();
    assert!(classify_collection(&j).unwrap().pre_ideal);
    assert!(!classify_collection(&j).unwrap().pre_principal);
    let (mt, _) = minimal_trapspaces(&f_ex3());
    assert!(classify_collection(&mt).unwrap().min_ideal);
}

#[test]
fn parse_and_display() {
    let q = SubcubeCollection::parse("# principal\n**0\n100\n\n11*\n").unwrap();
    assert_eq!(q.len(), 3);
    assert_eq!(q.to_string().lines().collect::<Vec<_>>(), ["100", "11*", "**0"]);
    assert!(SubcubeCollection::parse("**0\n10\n").is_err());
    assert!(SubcubeCollection::parse("*x0\n").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lambda_matches_unions(a in collection(3, 6)) {
        prop_assert_eq!(lambda_closure(&a).unwrap(), lambda_oracle(&a));
    }

    #[test]
    fn pointwise_intersection_and_realization(a in collection(4, 8)) {
        let f = realize(&a);
        let n = a.dimension();
        for x in f.configurations() {
            let at = collection_at(&a, x).unwrap();
            prop_assert_eq!(point_set(&at), at_oracle(&a, x));
            prop_assert_eq!(f.interval(x).unwrap(), at);
        }
        let mu: BTreeSet<Subcube> = (0u32..1 << n)
            .map(|x| collection_at(&a, Configuration::new(n, x).unwrap()).unwrap())
            .collect();
        prop_assert_eq!(mu_reduction(&a).iter().copied().collect::<BTreeSet<_>>(), mu);
    }

    #[test]
    fn pre_principal_iff_fixed_by_mu(a in collection(3, 8)) {
        let flags = classify_collection(&a).unwrap();
        prop_assert_eq!(flags.pre_principal, mu_reduction(&a) == a);
        prop_assert_eq!(flags.convex, convex_oracle(&a));
        let disjoint = a.iter().all(|x| a.iter().all(|y| x == y || x.is_disjoint(y).unwrap()));
        prop_assert_eq!(flags.min_ideal, disjoint);
    }

    #[test]
    fn collections_of_networks(f in network(4)) {
        let q = principal_collection(&f);
        let j = enumerate_trapspaces(&f).unwrap();
        prop_assert!(classify_collection(&q).unwrap().pre_principal);
        prop_assert!(classify_collection(&j).unwrap().pre_ideal);
        prop_assert_eq!(lambda_closure(&q).unwrap(), j.clone());
        prop_assert_eq!(mu_reduction(&j), q.clone());
        prop_assert_eq!(convex_oracle(&q), classify_collection(&q).unwrap().convex);
    }
}
