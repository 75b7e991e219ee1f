//! Self-consistency report run by the `check` subcommand.

use num_bigint::BigInt;

use crate::graph::CoxeterGraph;
use crate::invariants::{homology_summary, pair_classes, profile_with_partition};
use crate::oracle::{gf2_cycle_space_dimension, naive_pair_closure, rational_cycle_rank};
use crate::words::{in_commutator_subgroup, omega_sets, project_word, Flavor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs every identity that must hold for any Coxeter graph.
pub fn run_checks(g: &CoxeterGraph) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut push = |name, passed, detail: String| {
        out.push(CheckOutcome {
            name,
            passed,
            detail,
        })
    };

    let part = pair_classes(g);
    let prof = profile_with_partition(g, &part);
    push(
        "howlett identity",
        prof.howlett_identity_holds(),
        format!(
            "-n1+n2+n3+n4 = {}, p+q = {}",
            prof.howlett_rank(),
            prof.mod2_rank()
        ),
    );

    let odd = g.odd_subgraph();
    let relations = prof.n3 == prof.p + prof.q1
        && prof.n2 == prof.q2 + odd.edge_count()
        && prof.n1 == odd.vertex_count()
        && prof.n4 == prof.h1_artin_free_rank;
    push(
        "count relations",
        relations,
        format!("n3 = {}, p+q1 = {}", prof.n3, prof.p + prof.q1),
    );

    let naive = naive_pair_closure(g);
    push(
        "pair classes vs fixed-point closure",
        naive == part,
        format!("{} classes vs {}", part.classes.len(), naive.classes.len()),
    );

    let rational = rational_cycle_rank::<BigInt>(&odd);
    let gf2 = gf2_cycle_space_dimension(&odd);
    push(
        "odd cycle rank vs rational and GF(2) ranks",
        prof.q3 == rational && prof.q3 == gf2,
        format!("q3 = {}, rational = {rational}, gf2 = {gf2}", prof.q3),
    );

    let summary = homology_summary(g);
    push(
        "mod-2 rank bookkeeping",
        summary.h2_artin_mod2_rank == summary.h2_orbit.free_rank + summary.h2_orbit.torsion2_rank
            && summary.h2_artin_mod2_rank == summary.h2_coxeter.torsion2_rank,
        format!("rank {}", summary.h2_artin_mod2_rank),
    );

    let artin = omega_sets(g, Flavor::Artin);
    let coxeter = omega_sets(g, Flavor::Coxeter);
    for (name, om) in [
        ("artin generator counts", &artin),
        ("coxeter generator counts", &coxeter),
    ] {
        let counts = om.omega1.len() == prof.p + prof.q1
            && om.omega2.len() == prof.q2
            && om.omega3.len() == prof.q3
            && om.total() == prof.mod2_rank();
        let zero = om.all_words().all(in_commutator_subgroup);
        push(
            name,
            counts && zero,
            format!(
                "|O1|={} |O2|={} |O3|={} total={} p+q={}",
                om.omega1.len(),
                om.omega2.len(),
                om.omega3.len(),
                om.total(),
                prof.mod2_rank()
            ),
        );
    }

    let verbatim = artin
        .omega1
        .iter()
        .map(project_word)
        .eq(coxeter.omega1.iter().cloned())
        && artin
            .omega2
            .iter()
            .map(project_word)
            .eq(coxeter.omega2.iter().cloned());
    let exponents_mod2 = artin.omega3_exponents.len() == coxeter.omega3_exponents.len()
        && artin
            .omega3_exponents
            .iter()
            .zip(&coxeter.omega3_exponents)
            .all(|(a, c)| a.iter().zip(c).all(|(x, y)| (x - y).rem_euclid(2) == 0));
    push(
        "projection maps artin generators onto coxeter generators",
        verbatim && exponents_mod2,
        format!("verbatim={verbatim}, exponents mod 2={exponents_mod2}"),
    );
    out
}
