#![allow(dead_code)]

use ldk_core::balance::one_balance;
use ldk_core::linsolve::{solve, LinearSystem};
use ldk_core::term::{parse_identity, Identity, Term, Var};
use ldk_core::GroupSpec;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

pub const MODULAR: &str = "x1 /\\ (x2 \\/ (x1 /\\ x3)) <= (x1 /\\ x2) \\/ (x1 /\\ x3)";
pub const DISTRIBUTIVE: &str = "x1 /\\ (x2 \\/ x3) <= (x1 /\\ x2) \\/ (x1 /\\ x3)";

/// Hand-picked inequalities: lattice laws that hold everywhere, the modular
/// and distributive laws with their duals, and a few that fail.
pub const NAMED: &[&str] = &[
    "x1 <= x1",
    "x1 /\\ x2 <= x1 \\/ x2",
    "x1 /\\ x2 <= x1",
    "x1 <= x1 \\/ x2",
    "x1 <= x2",
    "x1 \\/ x2 <= x1 /\\ x2",
    "x1 /\\ (x1 \\/ x2) <= x1",
    "x1 <= x1 /\\ (x1 \\/ x2)",
    "(x1 /\\ x2) \\/ (x1 /\\ x3) <= x1 /\\ (x2 \\/ x3)",
    "x1 \\/ (x2 /\\ x3) <= (x1 \\/ x2) /\\ (x1 \\/ x3)",
    MODULAR,
    "(x1 \\/ x2) /\\ (x1 \\/ x3) <= x1 \\/ (x2 /\\ (x1 \\/ x3))",
    DISTRIBUTIVE,
    "(x1 \\/ x2) /\\ (x1 \\/ x3) <= x1 \\/ (x2 /\\ x3)",
    "x1 /\\ (x2 \\/ x3) <= x2 \\/ (x1 /\\ x3)",
    "(x1 \\/ x2) /\\ x3 <= x1 \\/ (x2 /\\ x3)",
    "(x1 /\\ x2) \\/ (x3 /\\ x4) <= (x1 \\/ x3) /\\ (x2 \\/ x4)",
    "(x1 \\/ x3) /\\ (x2 \\/ x4) <= (x1 /\\ x2) \\/ (x3 /\\ x4)",
];

pub fn identity(text: &str) -> Identity {
    parse_identity(text).unwrap().remove(0)
}

/// A random binary tree with the given leaves, left to right.
pub fn random_tree(rng: &mut impl Rng, leaves: &[Var]) -> Term {
    if leaves.len() == 1 {
        return Term::var(leaves[0]);
    }
    let split = rng.gen_range(1..leaves.len());
    let l = random_tree(rng, &leaves[..split]);
    let r = random_tree(rng, &leaves[split..]);
    if rng.gen_bool(0.5) {
        Term::join(l, r)
    } else {
        Term::meet(l, r)
    }
}

/// A repetition-free term over `x1..=xk` for a random `k <= max_leaves`.
pub fn random_term(rng: &mut impl Rng, max_leaves: usize) -> Term {
    let k = rng.gen_range(1..=max_leaves) as Var;
    let mut vars: Vec<Var> = (1..=k).collect();
    vars.shuffle(rng);
    random_tree(rng, &vars)
}

/// A 1-balanced inequality with `n <= max_vars` variables.
pub fn random_balanced(rng: &mut impl Rng, max_vars: usize) -> Identity {
    let n = rng.gen_range(1..=max_vars) as Var;
    let mut lhs: Vec<Var> = (1..=n).collect();
    let mut rhs = lhs.clone();
    lhs.shuffle(rng);
    rhs.shuffle(rng);
    Identity::new(random_tree(rng, &lhs), random_tree(rng, &rhs))
}

/// An arbitrary inequality with at most `vars` variables and `leaves`
/// leaves per side; variables may repeat or be missing on one side.
pub fn random_identity(rng: &mut impl Rng, vars: Var, leaves: usize) -> Identity {
    let lhs = random_side(rng, vars, leaves);
    Identity::new(lhs, random_side(rng, vars, leaves))
}

fn random_side(rng: &mut impl Rng, vars: Var, leaves: usize) -> Term {
    let k: usize = rng.gen_range(1..=leaves);
    let xs: Vec<Var> = (0..k).map(|_| rng.gen_range(1..=vars)).collect();
    random_tree(rng, &xs)
}

pub fn balanced_vars(id: &Identity) -> usize {
    one_balance(id).0.variables().len()
}

/// The named identities followed by `random` 1-balanced ones with at most
/// `max_vars` variables.
pub fn corpus(rng: &mut impl Rng, random: usize, max_vars: usize) -> Vec<Identity> {
    let mut out: Vec<Identity> = NAMED.iter().map(|t| identity(t)).collect();
    out.extend((0..random).map(|_| random_balanced(rng, max_vars)));
    out
}

fn satisfied(sys: &LinearSystem, a: &[BigInt], group: GroupSpec, homogeneous: bool) -> bool {
    let lhs = sys.matrix.mul_vec(a);
    lhs.iter().zip(&sys.rhs).all(|(l, r)| {
        let r = if homogeneous { BigInt::zero() } else { r.clone() };
        group.reduce(&(l - r)).is_zero()
    })
}

/// Equal solution sets, decided through particular solutions and kernel
/// generators: each system's solution module must lie in the other's.
pub fn same_solution_set(a: &LinearSystem, b: &LinearSystem, group: GroupSpec) -> bool {
    let ra = solve(&a.matrix, &a.rhs, group).unwrap();
    let rb = solve(&b.matrix, &b.rhs, group).unwrap();
    if ra.solvable != rb.solvable {
        return false;
    }
    if !ra.solvable {
        return true;
    }
    let within = |r: &ldk_core::linsolve::SolutionReport, other: &LinearSystem| {
        satisfied(other, r.particular.as_ref().unwrap(), group, false)
            && r.kernel_generators
                .iter()
                .all(|k| satisfied(other, k, group, true))
    };
    within(&ra, b) && within(&rb, a)
}

/// Every vector of `(Z_m)^n` in lexicographic order.
pub fn all_vectors(n: usize, m: u64) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<BigInt>| {
                (0..m).map(move |x| {
                    let mut w = v.clone();
                    w.push(BigInt::from(x));
                    w
                })
            })
            .collect();
    }
    out
}
