mod common;

use ldk_core::balance::one_balance;
use ldk_core::linsolve::{
    assemble_system, enumerate_solutions, solve_problem, AssemblyMode,
};
use ldk_core::pbg::{set_effect, transp_content, PbgProblem};
use ldk_core::planegraph::{graph_of_term, DEFAULT_PATH_LIMIT};
use ldk_core::term::{parse_identity, parse_term, Identity, Term, Var};
use ldk_core::GroupSpec;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn arb_term(max_var: Var) -> impl Strategy<Value = Term> {
    let leaf = (1..=max_var).prop_map(Term::var);
    leaf.prop_recursive(5, 24, 2, |inner| {
        (inner.clone(), inner, any::<bool>()).prop_map(|(l, r, join)| {
            if join {
                Term::join(l, r)
            } else {
                Term::meet(l, r)
            }
        })
    })
}

/// A tree shape with exactly `n` leaves, all labelled `x1`.
fn shape(n: usize) -> BoxedStrategy<Term> {
    if n == 1 {
        return Just(Term::var(1)).boxed();
    }
    (1..n)
        .prop_flat_map(move |k| (shape(k), shape(n - k), any::<bool>()))
        .prop_map(|(l, r, join)| if join { Term::join(l, r) } else { Term::meet(l, r) })
        .boxed()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<Var>> {
    Just((1..=n as Var).collect::<Vec<Var>>()).prop_shuffle()
}

/// Repetition-free: the leaves of a random shape relabelled by a permutation.
fn free_term(n: usize) -> impl Strategy<Value = Term> {
    (shape(n), permutation(n)).prop_map(|(s, perm)| relabel(&s, &perm))
}

fn arb_free_term(max_leaves: usize) -> impl Strategy<Value = Term> {
    (1..=max_leaves).prop_flat_map(free_term)
}

fn relabel(shape: &Term, perm: &[Var]) -> Term {
    shape.map_leaves(&mut |_, k| Term::var(perm[k - 1]))
}

fn arb_balanced(max_vars: usize) -> impl Strategy<Value = Identity> {
    (1..=max_vars)
        .prop_flat_map(|n| (free_term(n), free_term(n)))
        .prop_map(|(l, r)| Identity::new(l, r))
}

fn problem(id: &Identity, m: u64) -> PbgProblem {
    PbgProblem::from_balanced_identity(id, GroupSpec::new(m), BigInt::from(1))
        .unwrap()
        .0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_parse_round_trip(t in arb_term(6)) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn identity_round_trip(l in arb_term(4), r in arb_term(4)) {
        let id = Identity::new(l, r);
        prop_assert_eq!(parse_identity(&id.to_string()).unwrap(), vec![id]);
    }

    #[test]
    fn dual_is_an_involution(l in arb_term(5), r in arb_term(5)) {
        prop_assert_eq!(l.dual().dual(), l.clone());
        let id = Identity::new(l, r);
        prop_assert_eq!(id.dual().dual(), id);
    }

    #[test]
    fn balancing_reaches_one_balanced(l in arb_term(4), r in arb_term(4)) {
        let id = Identity::new(l, r);
        let (balanced, trace) = one_balance(&id);
        prop_assert!(balanced.is_one_balanced());
        prop_assert_eq!(trace.replay(&id), balanced.clone());
        prop_assert_eq!(one_balance(&balanced).0, balanced);
    }

    #[test]
    fn effects_sum_to_zero(
        t in arb_free_term(10),
        seed in proptest::collection::vec(-20i64..20, 10),
        mask in proptest::collection::vec(any::<bool>(), 10),
        m in prop::sample::select(vec![0u64, 2, 3, 7]),
    ) {
        let (g, _) = graph_of_term(&t).unwrap();
        let n = g.num_edges();
        let a: Vec<BigInt> = seed[..n].iter().map(|&x| BigInt::from(x)).collect();
        let edges: Vec<usize> = (1..=n).filter(|&j| mask[j - 1]).collect();
        let group = GroupSpec::new(m);
        let s = set_effect(&g, group, &a, &edges).unwrap();
        prop_assert!(group.reduce(&s.total()).is_zero());
        prop_assert!(group.reduce(&transp_content(&g, group, &BigInt::from(5)).total()).is_zero());
    }

    #[test]
    fn construction_commutes_with_duality(t in arb_free_term(12)) {
        let (g, _) = graph_of_term(&t).unwrap();
        let (gd, _) = graph_of_term(&t.dual()).unwrap();
        let dual = g.dual();
        prop_assert!(dual.iso_check(&gd));
        prop_assert!(dual.dual().iso_check(&g.transpose()));
        prop_assert!(g.transpose().transpose().iso_check(&g));
        for h in [&g, &gd, &dual, &dual.dual()] {
            prop_assert_eq!(h.euler_characteristic(), 3);
            prop_assert!(h.validate().is_empty());
        }
    }

    #[test]
    fn transpose_keeps_solutions(id in arb_balanced(6), m in 2u64..=3) {
        let p = problem(&id, m);
        prop_assert_eq!(
            enumerate_solutions(&p, 1_000_000).unwrap(),
            enumerate_solutions(&p.transpose(), 1_000_000).unwrap()
        );
    }

    #[test]
    fn solve_agrees_with_enumeration(id in arb_balanced(7), m in 2u64..=3) {
        let p = problem(&id, m);
        let all = enumerate_solutions(&p, 1_000_000).unwrap();
        let report = solve_problem(&p, AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
        prop_assert_eq!(report.solvable, !all.is_empty());
        if let Some(a) = &report.particular {
            prop_assert!(all.contains(a));
            prop_assert!(p.is_solution(a, DEFAULT_PATH_LIMIT).unwrap());
        }
    }

    #[test]
    fn facet_reduced_agrees_with_full(
        id in arb_balanced(12),
        m in prop::sample::select(vec![0u64, 2, 3, 4, 6]),
    ) {
        let p = problem(&id, m);
        let full = assemble_system(&p, AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
        let reduced = assemble_system(&p, AssemblyMode::FacetReduced, DEFAULT_PATH_LIMIT).unwrap();
        prop_assert!(common::same_solution_set(&full, &reduced, p.group()));
    }

    #[test]
    fn dual_problem_same_solvability(
        id in arb_balanced(10),
        m in prop::sample::select(vec![0u64, 2, 3, 4, 6]),
    ) {
        let p = problem(&id, m);
        let a = solve_problem(&p, AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
        let b = solve_problem(&p.dual(), AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
        prop_assert_eq!(a.solvable, b.solvable);
    }
}
