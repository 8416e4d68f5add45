//! Exhaustive and sampled checking of the structural theorems on network
//! populations. Each check is evaluated from definitions and any mismatch is
//! reported with the offending network.

use crate::classes::{
    check_alternate_definitions, counterexample_violations, edge_violations,
    min_trapspace_equivalent, trapspace_equivalent, AlternateTheorem, ClassReport, DiagramId,
    DiagramSpec, NetworkFacts, MAX_SWEEP_DIMENSION,
};
use crate::collections::{classify_collection, lambda_closure, mu_reduction, realize};
use crate::error::{Error, Result};
use crate::generators::{
    long_transient_trapping, random_commutative, random_constant, random_negation, random_network,
};
use crate::network::BooleanNetwork;
use crate::trapspaces::{
    enumerate_trapspaces, min_trapping_extension, minimal_trapspaces, principal_collection,
    trapping_closure,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// Largest `n` for which every network can be enumerated.
pub const MAX_EXHAUSTIVE_DIMENSION: usize = 2;
/// Largest `n` accepted for sampled populations.
pub const MAX_SAMPLED_DIMENSION: usize = 6;
/// Generator outputs added to every sampled population.
pub const GENERATED_PER_POPULATION: usize = 240;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Theorems,
    Closure,
    Diagrams,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Theorems, Suite::Closure, Suite::Diagrams];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorems => "theorems",
            Suite::Closure => "closure",
            Suite::Diagrams => "diagrams",
        }
    }

    /// Parses `all` or a single suite name.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Finding {
    pub suite: Suite,
    pub dimension: usize,
    pub network: Vec<u32>,
    pub check: String,
}

impl Finding {
    fn new(suite: Suite, f: &BooleanNetwork, check: impl Into<String>) -> Self {
        Self {
            suite,
            dimension: f.dimension(),
            network: f.table().to_vec(),
            check: check.into(),
        }
    }

    pub fn network(&self) -> BooleanNetwork {
        BooleanNetwork::from_table(self.dimension, self.network.clone()).expect("recorded table")
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.suite.name(), self.check)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub networks: usize,
    pub checks: usize,
    pub findings: Vec<Finding>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }
}

/// All `2^(n 2^n)` networks on `B^n`.
pub fn exhaustive_population(n: usize) -> Result<Vec<BooleanNetwork>> {
    if n == 0 || n > MAX_EXHAUSTIVE_DIMENSION {
        return Err(Error::InvalidParameter(format!(
            "exhaustive populations need 1 <= n <= {MAX_EXHAUSTIVE_DIMENSION}, got {n}"
        )));
    }
    let size = 1usize << n;
    let total = 1u64 << (n * size);
    (0..total)
        .map(|code| {
            let table = (0..size)
                .map(|x| ((code >> (n * x)) as u32) & ((1 << n) - 1))
                .collect();
            BooleanNetwork::from_table(n, table)
        })
        .collect()
}

/// `samples` random networks followed by generator outputs (commutative
/// unions, negations on subcubes, constants on arrangements and the
/// long-transient network), all derived from `seed`.
pub fn sampled_population(n: usize, samples: usize, seed: u64) -> Result<Vec<BooleanNetwork>> {
    if !(1..=MAX_SAMPLED_DIMENSION).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "sampled populations need 1 <= n <= {MAX_SAMPLED_DIMENSION}, got {n}"
        )));
    }
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples + GENERATED_PER_POPULATION + 1);
    for _ in 0..samples {
        out.push(random_network(n, r.gen())?);
    }
    for k in 0..GENERATED_PER_POPULATION {
        let parts = r.gen_range(1..=3);
        let s = r.gen();
        out.push(match k % 3 {
            0 => random_commutative(n, s, parts)?,
            1 => random_negation(n, s, parts)?,
            _ => random_constant(n, s, parts)?,
        });
    }
    if n >= 3 {
        out.push(long_transient_trapping(n)?);
    }
    Ok(out)
}

/// Runs `suites` on every network of `population`. Closure monotonicity is
/// checked against `f ⊔ h` where `h` is the next member of the population.
pub fn run_suites(population: &[BooleanNetwork], suites: &[Suite]) -> Result<VerifyReport> {
    let per_network: Vec<(usize, Vec<Finding>)> = population
        .par_iter()
        .enumerate()
        .map(|(i, f)| {
            let h = &population[(i + 1) % population.len()];
            check_network(f, h, suites)
        })
        .collect::<Result<_>>()?;
    let mut report = VerifyReport {
        networks: population.len(),
        ..Default::default()
    };
    for (checks, findings) in per_network {
        report.checks += checks;
        report.findings.extend(findings);
    }
    if suites.contains(&Suite::Diagrams) {
        for id in DiagramId::ALL {
            let d = DiagramSpec::new(id);
            report.checks += d.counterexamples.len();
            for v in counterexample_violations(&d)? {
                let f = v.network();
                report.findings.push(Finding::new(Suite::Diagrams, &f, v.to_string()));
            }
        }
    }
    report.findings.sort();
    report.findings.dedup();
    Ok(report)
}

struct Checker {
    suite: Suite,
    checks: usize,
    findings: Vec<Finding>,
}

impl Checker {
    fn check(&mut self, f: &BooleanNetwork, ok: bool, name: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.findings.push(Finding::new(self.suite, f, name()));
        }
    }
}

fn check_network(
    f: &BooleanNetwork,
    h: &BooleanNetwork,
    suites: &[Suite],
) -> Result<(usize, Vec<Finding>)> {
    let facts = NetworkFacts::new(f.clone())?;
    let mut c = Checker {
        suite: Suite::Theorems,
        checks: 0,
        findings: Vec::new(),
    };
    for &suite in suites {
        c.suite = suite;
        match suite {
            Suite::Theorems => theorems(&mut c, f, &facts.report)?,
            Suite::Closure => closure(&mut c, f, h)?,
            Suite::Diagrams => {
                for id in DiagramId::ALL {
                    let d = DiagramSpec::new(id);
                    c.checks += d.edges.len();
                    for v in edge_violations(&d, &facts) {
                        c.findings.push(Finding::new(suite, f, v.to_string()));
                    }
                }
            }
        }
    }
    Ok((c.checks, c.findings))
}

fn theorems(c: &mut Checker, f: &BooleanNetwork, r: &ClassReport) -> Result<()> {
    let n = f.dimension();
    if n <= MAX_SWEEP_DIMENSION {
        for t in AlternateTheorem::ALL {
            let v = check_alternate_definitions(f, t)?;
            c.check(f, v.iter().all(|&b| b == v[0]), || {
                format!("{} conditions disagree: {v:?}", t.name())
            });
        }
    }
    let implications = [
        ("marseille => commutative", r.marseille, r.commutative),
        ("commutative => trapping", r.commutative, r.trapping),
        ("lille => commutative", r.lille, r.commutative),
        ("globally idempotent => trapping", r.globally_idempotent, r.trapping),
        ("commutative => dynamically local", r.commutative, r.dynamically_local),
        ("marseille => globally involutive", r.marseille, r.globally_involutive),
        ("globally involutive => marseille", r.globally_involutive, r.marseille),
        ("trapping and locally bijective => marseille", r.trapping && r.locally_bijective, r.marseille),
        ("trapping and trapspace-FP => fixable", r.trapping && r.trapspace_fp, r.fixable),
        ("commutative and fixable => lille", r.commutative && r.fixable, r.lille),
    ];
    for (name, p, q) in implications {
        c.check(f, !p || q, || name.to_string());
    }
    if r.commutative {
        c.check(f, r.bijective == r.locally_bijective && r.bijective == r.globally_bijective, || {
            "commutative: bijective, locally bijective, globally bijective differ".into()
        });
        c.check(
            f,
            r.idempotent == r.locally_idempotent && r.idempotent == r.globally_idempotent,
            || "commutative: idempotent, locally idempotent, globally idempotent differ".into(),
        );
        c.check(f, lemma_delta(f), || "distance lemma fails".into());
        let pt = principal_collection(f);
        c.check(f, classify_collection(&pt)?.convex, || {
            "principal collection of a commutative network is not convex".into()
        });
    }
    let pt = principal_collection(f);
    if classify_collection(&pt)?.convex {
        let g = realize(&pt);
        c.check(f, crate::classes::classify_network(&g)?.commutative, || {
            "realization of a convex principal collection is not commutative".into()
        });
    }
    if r.trapping {
        c.check(f, f.power(n + 2) == f.power(n), || "trapping: f^(n+2) != f^n".into());
        let sq = f.power(2);
        let periodic_ok = (0..f.size() as u32)
            .map(|x| f.power(n).table()[x as usize])
            .all(|y| sq.table()[y as usize] == y);
        c.check(f, periodic_ok, || "trapping: a periodic point has period > 2".into());
    }
    Ok(())
}

/// For `y ∈ [x, f(x)]`: `d(x, y) >= δ_x - δ_y >= 0`, with equality iff
/// `f(y) = f(x)`, where `δ_x = d(x, f(x))`.
fn lemma_delta(f: &BooleanNetwork) -> bool {
    let delta = |x: u32| f.delta_at(x).count_ones() as i64;
    (0..f.size() as u32).all(|x| {
        f.interval_raw(x).member_bits().all(|y| {
            let d = (x ^ y).count_ones() as i64;
            let gap = delta(x) - delta(y);
            d >= gap && gap >= 0 && ((d == gap) == (f.at(y) == f.at(x)))
        })
    })
}

fn closure(c: &mut Checker, f: &BooleanNetwork, h: &BooleanNetwork) -> Result<()> {
    let ft = trapping_closure(f);
    c.check(f, f.order_leq(&ft)?, || "f is not below its trapping closure".into());
    c.check(f, trapping_closure(&ft) == ft, || "trapping closure is not idempotent".into());
    let g = f.join(h)?;
    c.check(f, trapping_closure(f).order_leq(&trapping_closure(&g))?, || {
        "trapping closure is not monotone on f <= f join h".into()
    });
    let tf = enumerate_trapspaces(f)?;
    c.check(f, tf == enumerate_trapspaces(&ft)?, || "T(f) != T(f^T)".into());
    let eq = trapspace_equivalent(f, &ft)?;
    c.check(f, eq.iter().all(|&b| b), || format!("f, f^T not trapspace-equivalent: {eq:?}"));
    let eq = trapspace_equivalent(f, h)?;
    c.check(f, eq.iter().all(|&b| b == eq[0]), || {
        format!("trapspace-equivalence conditions disagree: {eq:?}")
    });
    let eq = min_trapspace_equivalent(f, h)?;
    c.check(f, eq.iter().all(|&b| b == eq[0]), || {
        format!("min-trapspace-equivalence conditions disagree: {eq:?}")
    });

    // collections realized by f
    let q = principal_collection(f);
    let j = tf;
    c.check(f, classify_collection(&q)?.pre_principal, || "PT(f) is not pre-principal".into());
    c.check(f, classify_collection(&j)?.pre_ideal, || "T(f) is not pre-ideal".into());
    c.check(f, realize(&q) == ft, || "F(PT(f)) != f^T".into());
    c.check(f, realize(&j) == ft, || "F(T(f)) != f^T".into());
    let rq = realize(&q);
    c.check(f, principal_collection(&rq) == q, || "PT(F(Q)) != Q".into());
    let lq = lambda_closure(&q)?;
    c.check(f, lq == enumerate_trapspaces(&rq)?, || "λ(Q) != T(F(Q))".into());
    c.check(f, mu_reduction(&lq) == q, || "μ(λ(Q)) != Q".into());
    let rj = realize(&j);
    c.check(f, enumerate_trapspaces(&rj)? == j, || "T(F(J)) != J".into());
    c.check(f, mu_reduction(&j) == principal_collection(&rj), || "μ(J) != PT(F(J))".into());
    c.check(f, lambda_closure(&mu_reduction(&j))? == j, || "λ(μ(J)) != J".into());

    // minimal trapspaces
    let (mt, _) = minimal_trapspaces(f);
    let fm = min_trapping_extension(f);
    c.check(f, classify_collection(&mt)?.min_ideal, || "MT(f) is not min-ideal".into());
    c.check(f, realize(&mt) == fm, || "F(MT(f)) != f^M".into());
    c.check(f, minimal_trapspaces(&fm).0 == mt, || "MT(f^M) != MT(f)".into());
    c.check(f, realize(&minimal_trapspaces(&fm).0) == fm, || "F(MT(f^M)) != f^M".into());
    c.check(f, min_trapping_extension(&fm) == fm, || "f^M is not min-trapping".into());
    let eq = min_trapspace_equivalent(f, &fm)?;
    c.check(f, eq.iter().all(|&b| b), || format!("f, f^M not min-equivalent: {eq:?}"));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn populations() {
        assert_eq!(exhaustive_population(1).unwrap().len(), 4);
        let all = exhaustive_population(2).unwrap();
        assert_eq!(all.len(), 256);
        let mut tables: Vec<_> = all.iter().map(|f| f.table().to_vec()).collect();
        tables.dedup();
        assert_eq!(tables.len(), 256);
        assert!(exhaustive_population(3).is_err());
        let a = sampled_population(3, 20, 7).unwrap();
        assert_eq!(a, sampled_population(3, 20, 7).unwrap());
        assert_eq!(a.len(), 20 + GENERATED_PER_POPULATION + 1);
    }

    #[test]
    fn exhaustive_one() {
        let report = run_suites(&exhaustive_population(1).unwrap(), &Suite::ALL).unwrap();
        assert!(report.passed(), "{:?}", report.findings);
    }

    #[test]
    fn detects_a_broken_law() {
        let d = BooleanNetwork::from_table(2, vec![1, 3, 0, 2]).unwrap();
        assert!(lemma_delta(&BooleanNetwork::negation(2).unwrap()));
        let _ = lemma_delta(&d);
    }
}
