//! Deciding inequalities over `Z_m`, the self-duality cross-check, and
//! brute-force oracles on subspace lattices of small vector spaces.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balance::{absorb_missing, one_balance, BalanceTrace};
use crate::error::{Error, Result};
use crate::int_serde;
use crate::linsolve::{solve_problem, AssemblyMode, SolutionReport};
use crate::pbg::{GroupSpec, PbgProblem};
use crate::planegraph::{PlaneGraph, DEFAULT_PATH_LIMIT};
use crate::term::{Identity, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub path_limit: usize,
    pub mode: AssemblyMode,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            path_limit: DEFAULT_PATH_LIMIT,
            mode: AssemblyMode::Full,
        }
    }
}

/// Outcome of deciding `identity` over `Z_m`; `holds == witness.solvable`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub identity: Identity,
    pub absorbed: Identity,
    pub balanced: Identity,
    pub trace: BalanceTrace,
    pub modulus: u64,
    #[serde(with = "int_serde::scalar")]
    pub b: BigInt,
    pub edges: usize,
    pub holds: bool,
    pub witness: SolutionReport,
}

struct Pipeline {
    absorbed: Identity,
    balanced: Identity,
    trace: BalanceTrace,
    problem: PbgProblem,
}

fn pipeline(id: &Identity, m: u64, b: &BigInt) -> Result<Pipeline> {
    let (absorbed, _) = absorb_missing(id);
    let (balanced, trace) = one_balance(id);
    let (problem, _) = PbgProblem::from_balanced_identity(&balanced, GroupSpec::new(m), b.clone())?;
    Ok(Pipeline {
        absorbed,
        balanced,
        trace,
        problem,
    })
}

/// Decides whether `id` holds in every submodule lattice of a `Z_m`-module
/// (`m = 0` meaning abelian groups), by solving the transport problem of
/// its balanced form with source value `b`.
pub fn check_identity(id: &Identity, m: u64, b: &BigInt, options: &CheckOptions) -> Result<Verdict> {
    let p = pipeline(id, m, b)?;
    let witness = solve_problem(&p.problem, options.mode, options.path_limit)?;
    Ok(Verdict {
        identity: id.clone(),
        absorbed: p.absorbed,
        balanced: p.balanced,
        trace: p.trace,
        modulus: m,
        b: p.problem.b().clone(),
        edges: p.problem.n(),
        holds: witness.solvable,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfDualityReport {
    pub modulus: u64,
    pub identity_holds: bool,
    pub dual_holds: bool,
    pub problem_solvable: bool,
    pub dual_problem_solvable: bool,
    pub identity: Verdict,
    pub dual: Verdict,
}

impl SelfDualityReport {
    pub fn consistent(&self) -> bool {
        self.identity_holds == self.dual_holds
            && self.problem_solvable == self.dual_problem_solvable
            && self.identity_holds == self.problem_solvable
    }
}

/// Decides `id` and its dual and solves the dual problem of the balanced
/// instance, without judging the results.
pub fn self_duality_report(
    id: &Identity,
    m: u64,
    b: &BigInt,
    options: &CheckOptions,
) -> Result<SelfDualityReport> {
    let identity = check_identity(id, m, b, options)?;
    let dual = check_identity(&id.dual(), m, b, options)?;
    let p = pipeline(id, m, b)?;
    let dual_problem = solve_problem(&p.problem.dual(), options.mode, options.path_limit)?;
    Ok(SelfDualityReport {
        modulus: m,
        identity_holds: identity.holds,
        dual_holds: dual.holds,
        problem_solvable: identity.witness.solvable,
        dual_problem_solvable: dual_problem.solvable,
        identity,
        dual,
    })
}

/// Like [`self_duality_report`], but any disagreement is an error.
pub fn check_self_duality(
    id: &Identity,
    m: u64,
    b: &BigInt,
    options: &CheckOptions,
) -> Result<SelfDualityReport> {
    let report = self_duality_report(id, m, b, options)?;
    if !report.consistent() {
        return Err(Error::AssertionFailure(format!(
            "'{id}' over {}: holds {}, dual holds {}, problem solvable {}, dual problem solvable {}",
            GroupSpec::new(m),
            report.identity_holds,
            report.dual_holds,
            report.problem_solvable,
            report.dual_problem_solvable
        )));
    }
    Ok(report)
}

/// The lattice of all subspaces of `F_p^d`.
///
/// Vectors are coded as integers in base `p`, coordinate 0 being the least
/// significant digit. Subspaces are bitmasks over vector codes and are
/// listed by dimension, then by mask.
#[derive(Clone, Debug)]
pub struct SubspaceLattice {
    p: u32,
    d: u32,
    masks: Vec<u128>,
    index: HashMap<u128, usize>,
    add: Vec<u8>,
    join: Vec<u8>,
    meet: Vec<u8>,
}

pub fn subspace_lattice(p: u32, d: u32) -> Result<SubspaceLattice> {
    SubspaceLattice::new(p, d)
}

impl SubspaceLattice {
    pub fn new(p: u32, d: u32) -> Result<Self> {
        if ![2, 3, 5].contains(&p) || !(1..=3).contains(&d) {
            return Err(Error::Unsupported(format!(
                "subspace lattices need p in {{2, 3, 5}} and d in 1..=3, got p = {p}, d = {d}"
            )));
        }
        let q = p.pow(d) as usize;
        let digits = |x: usize| -> Vec<u32> {
            (0..d).map(|i| (x as u32 / p.pow(i)) % p).collect()
        };
        let code = |ds: &[u32]| -> usize {
            ds.iter()
                .enumerate()
                .map(|(i, &c)| (c * p.pow(i as u32)) as usize)
                .sum()
        };
        let mut add = vec![0u8; q * q];
        for x in 0..q {
            for y in 0..q {
                let s: Vec<u32> = digits(x)
                    .iter()
                    .zip(digits(y))
                    .map(|(a, b)| (a + b) % p)
                    .collect();
                add[x * q + y] = code(&s) as u8;
            }
        }
        let mut lattice = SubspaceLattice {
            p,
            d,
            masks: Vec::new(),
            index: HashMap::new(),
            add,
            join: Vec::new(),
            meet: Vec::new(),
        };

        let mut found = vec![1u128];
        let mut seen: HashSet<u128> = HashSet::from([1u128]);
        let mut next = 0;
        while next < found.len() {
            let s = found[next];
            next += 1;
            for x in 0..q {
                if s >> x & 1 == 1 {
                    continue;
                }
                let t = lattice.span_with(s, x);
                if seen.insert(t) {
                    found.push(t);
                }
            }
        }
        found.sort_by_key(|&m| (m.count_ones(), m));
        lattice.index = found.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        lattice.masks = found;

        let n = lattice.masks.len();
        let mut join = vec![0u8; n * n];
        let mut meet = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                join[i * n + j] = lattice.index[&lattice.sum(lattice.masks[i], lattice.masks[j])] as u8;
                meet[i * n + j] = lattice.index[&(lattice.masks[i] & lattice.masks[j])] as u8;
            }
        }
        lattice.join = join;
        lattice.meet = meet;
        Ok(lattice)
    }

    fn q(&self) -> usize {
        self.p.pow(self.d) as usize
    }

    fn add_codes(&self, x: usize, y: usize) -> usize {
        self.add[x * self.q() + y] as usize
    }

    /// All `s + c x` with `s` in the subspace `s_mask` and `c` a scalar.
    fn span_with(&self, s_mask: u128, x: usize) -> u128 {
        let mut multiples = vec![0usize];
        for _ in 1..self.p {
            let last = *multiples.last().unwrap();
            multiples.push(self.add_codes(last, x));
        }
        let mut out = 0u128;
        for s in (0..self.q()).filter(|&s| s_mask >> s & 1 == 1) {
            for &cx in &multiples {
                out |= 1 << self.add_codes(s, cx);
            }
        }
        out
    }

    fn sum(&self, a: u128, b: u128) -> u128 {
        let mut out = 0u128;
        for x in (0..self.q()).filter(|&x| a >> x & 1 == 1) {
            for y in (0..self.q()).filter(|&y| b >> y & 1 == 1) {
                out |= 1 << self.add_codes(x, y);
            }
        }
        out
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    /// Number of subspaces.
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Number of vectors of the ambient space.
    pub fn vector_count(&self) -> usize {
        self.q()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.masks[a] & !self.masks[b] == 0
    }

    pub fn dim_of(&self, a: usize) -> u32 {
        let mut size = self.masks[a].count_ones();
        let mut dim = 0;
        while size > 1 {
            size /= self.p;
            dim += 1;
        }
        dim
    }

    /// Whether the vector with code `x` lies in subspace `a`.
    pub fn contains(&self, a: usize, x: usize) -> bool {
        self.masks[a] >> x & 1 == 1
    }

    pub fn vector_code(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .enumerate()
            .map(|(i, &c)| ((c % self.p) * self.p.pow(i as u32)) as usize)
            .sum()
    }

    pub fn coords(&self, x: usize) -> Vec<u32> {
        (0..self.d).map(|i| (x as u32 / self.p.pow(i)) % self.p).collect()
    }

    pub fn add_vectors(&self, x: usize, y: usize) -> usize {
        self.add_codes(x, y)
    }

    pub fn sub_vectors(&self, x: usize, y: usize) -> usize {
        let neg: Vec<u32> = self.coords(y).iter().map(|&c| (self.p - c) % self.p).collect();
        self.add_codes(x, self.vector_code(&neg))
    }

    /// Index of the subspace spanned by the given vectors.
    pub fn span(&self, vectors: &[usize]) -> usize {
        let mask = vectors.iter().fold(1u128, |s, &x| self.span_with(s, x));
        self.index[&mask]
    }

    /// Reduced row echelon basis of subspace `a`.
    pub fn basis(&self, a: usize) -> Vec<Vec<u32>> {
        let p = self.p;
        let inv = |x: u32| (1..p).find(|y| x * y % p == 1).expect("nonzero mod a prime");
        let mut rows: Vec<Vec<u32>> = (0..self.q())
            .filter(|&x| self.contains(a, x) && x != 0)
            .map(|x| self.coords(x))
            .collect();
        let mut basis: Vec<Vec<u32>> = Vec::new();
        for col in 0..self.d as usize {
            let Some(k) = rows.iter().position(|r| r[col] != 0) else {
                continue;
            };
            let mut pivot = rows.swap_remove(k);
            let scale = inv(pivot[col]);
            pivot.iter_mut().for_each(|c| *c = *c * scale % p);
            for r in rows.iter_mut().chain(basis.iter_mut()) {
                let f = r[col];
                for (c, pc) in r.iter_mut().zip(&pivot) {
                    *c = (*c + (p - f) * pc) % p;
                }
            }
            rows.retain(|r| r.iter().any(|&c| c != 0));
            basis.push(pivot);
        }
        basis
    }

    /// `0` for the zero space, otherwise the spanning rows, e.g. `<(1,0),(0,1)>`.
    pub fn describe(&self, a: usize) -> String {
        let basis = self.basis(a);
        if basis.is_empty() {
            return "0".into();
        }
        let rows: Vec<String> = basis
            .iter()
            .map(|r| {
                let cs: Vec<String> = r.iter().map(u32::to_string).collect();
                format!("({})", cs.join(","))
            })
            .collect();
        format!("<{}>", rows.join(","))
    }

    /// Evaluates `t` with `assign(x)` the subspace index of variable `x`.
    pub fn eval(&self, t: &Term, assign: &impl Fn(Var) -> usize) -> usize {
        t.eval(assign, &|a, b| self.join(a, b), &|a, b| self.meet(a, b))
    }
}

#[derive(Clone, Copy)]
enum Op {
    Load(usize),
    Join,
    Meet,
}

fn compile(t: &Term, slot: &impl Fn(Var) -> usize, out: &mut Vec<Op>) {
    match t {
        Term::Var(x) => out.push(Op::Load(slot(*x))),
        Term::Join(l, r) => {
            compile(l, slot, out);
            compile(r, slot, out);
            out.push(Op::Join);
        }
        Term::Meet(l, r) => {
            compile(l, slot, out);
            compile(r, slot, out);
            out.push(Op::Meet);
        }
    }
}

fn run(program: &[Op], lattice: &SubspaceLattice, values: &[usize], stack: &mut Vec<usize>) -> usize {
    stack.clear();
    for op in program {
        match *op {
            Op::Load(i) => stack.push(values[i]),
            Op::Join | Op::Meet => {
                let r = stack.pop().unwrap();
                let l = stack.pop().unwrap();
                stack.push(if matches!(op, Op::Join) {
                    lattice.join(l, r)
                } else {
                    lattice.meet(l, r)
                });
            }
        }
    }
    stack[0]
}

/// Default bound on the number of distinct variables for [`oracle_holds`].
pub const DEFAULT_VAR_CAP: usize = 5;

/// First assignment (in lexicographic order of subspace indices, variables
/// by ascending index) violating `id` in `lattice`.
pub fn oracle_counterexample(
    id: &Identity,
    lattice: &SubspaceLattice,
    var_cap: usize,
) -> Result<Option<Vec<(Var, usize)>>> {
    let vars: Vec<Var> = id.variables().into_iter().collect();
    if vars.len() > var_cap {
        return Err(Error::Unsupported(format!(
            "'{id}' has {} variables, the oracle cap is {var_cap}",
            vars.len()
        )));
    }
    let slot = |x: Var| vars.binary_search(&x).expect("variable of the identity");
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    compile(&id.lhs, &slot, &mut lhs);
    compile(&id.rhs, &slot, &mut rhs);
    let k = vars.len();
    let n = lattice.len();
    if k == 0 {
        return Ok(None);
    }

    let found = (0..n).into_par_iter().find_map_first(|first| {
        let mut values = vec![0usize; k];
        values[0] = first;
        let mut stack = Vec::new();
        loop {
            let l = run(&lhs, lattice, &values, &mut stack);
            let r = run(&rhs, lattice, &values, &mut stack);
            if !lattice.leq(l, r) {
                return Some(values);
            }
            let i = (1..k).rev().find(|&i| values[i] + 1 < n)?;
            values[i] += 1;
            values[i + 1..].iter_mut().for_each(|v| *v = 0);
        }
    });
    Ok(found.map(|values| vars.iter().copied().zip(values).collect()))
}

/// Whether `id` holds for every assignment of subspaces to its variables.
pub fn oracle_holds(id: &Identity, lattice: &SubspaceLattice, var_cap: usize) -> Result<bool> {
    Ok(oracle_counterexample(id, lattice, var_cap)?.is_none())
}

/// Maximum number of vertices for [`membership_via_contents`].
pub const MEMBERSHIP_VERTEX_CAP: usize = 5;

/// Whether some content system `S` on `g` with `S(source) = u` and
/// `S(sink) = v` moves along every edge `i` by an element of
/// `edge_subspaces[i - 1]`. Vectors are codes of `lattice`.
pub fn membership_via_contents(
    g: &PlaneGraph,
    lattice: &SubspaceLattice,
    edge_subspaces: &[usize],
    u: usize,
    v: usize,
) -> Result<bool> {
    if lattice.dimension() > 2 || g.num_vertices() > MEMBERSHIP_VERTEX_CAP {
        return Err(Error::Unsupported(format!(
            "content enumeration needs d <= 2 and at most {MEMBERSHIP_VERTEX_CAP} vertices, \
             got d = {} and {} vertices",
            lattice.dimension(),
            g.num_vertices()
        )));
    }
    if edge_subspaces.len() != g.num_edges() {
        return Err(Error::DimensionMismatch(format!(
            "{} subspaces for {} edges",
            edge_subspaces.len(),
            g.num_edges()
        )));
    }
    let free: Vec<usize> = g
        .vertices()
        .filter(|&x| x != g.source() && x != g.sink())
        .map(|x| x.0)
        .collect();
    let q = lattice.vector_count();
    let mut content = vec![0usize; g.num_vertices()];
    content[g.source().0] = u;
    content[g.sink().0] = v;
    let mut digits = vec![0usize; free.len()];
    loop {
        for (&x, &c) in free.iter().zip(&digits) {
            content[x] = c;
        }
        let ok = g.edges().all(|(i, e)| {
            let step = lattice.sub_vectors(content[e.head.0], content[e.tail.0]);
            lattice.contains(edge_subspaces[i - 1], step)
        });
        if ok {
            return Ok(true);
        }
        let Some(k) = (0..digits.len()).rev().find(|&k| digits[k] + 1 < q) else {
            return Ok(false);
        };
        digits[k] += 1;
        digits[k + 1..].iter_mut().for_each(|x| *x = 0);
    }
}

/// Whether `v - u` lies in `t` evaluated at `assign`.
pub fn membership_direct(
    t: &Term,
    lattice: &SubspaceLattice,
    assign: &impl Fn(Var) -> usize,
    u: usize,
    v: usize,
) -> bool {
    lattice.contains(lattice.eval(t, assign), lattice.sub_vectors(v, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegraph::graph_of_term;
    use crate::term::{parse_identity, parse_term};

    const MODULAR: &str = "x1 /\\ (x2 \\/ (x1 /\\ x3)) <= (x1 /\\ x2) \\/ (x1 /\\ x3)";
    const DISTRIBUTIVE: &str = "x1 /\\ (x2 \\/ x3) <= (x1 /\\ x2) \\/ (x1 /\\ x3)";

    fn id(text: &str) -> Identity {
        parse_identity(text).unwrap().remove(0)
    }

    fn holds(text: &str, m: u64) -> bool {
        check_identity(&id(text), m, &BigInt::from(1), &CheckOptions::default())
            .unwrap()
            .holds
    }

    #[test]
    fn golden_verdicts() {
        for m in [0, 2, 3, 4] {
            assert!(holds(MODULAR, m), "modular at m = {m}");
        }
        for m in [0, 2, 3] {
            assert!(!holds(DISTRIBUTIVE, m), "distributive at m = {m}");
        }
        for m in [0, 1, 2, 5, 6] {
            assert!(holds("x1 <= x1", m));
        }
        assert!(holds(DISTRIBUTIVE, 1));
    }

    #[test]
    fn verdict_contents() {
        let v = check_identity(&id(DISTRIBUTIVE), 2, &BigInt::from(1), &CheckOptions::default()).unwrap();
        assert_eq!(
            v.balanced.to_string(),
            "(x4 /\\ x5) /\\ (x2 \\/ x3) <= (x4 /\\ x2) \\/ (x5 /\\ x3)"
        );
        assert_eq!(v.edges, 4);
        assert_eq!(v.holds, v.witness.solvable);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Verdict>(&json).unwrap(), v);
    }

    #[test]
    fn self_duality_examples() {
        let opts = CheckOptions::default();
        let one = BigInt::from(1);
        let r = check_self_duality(&id(DISTRIBUTIVE), 2, &one, &opts).unwrap();
        assert!(!r.identity_holds && !r.dual_holds);
        for m in [0, 2, 3] {
            let r = check_self_duality(&id(MODULAR), m, &one, &opts).unwrap();
            assert!(r.identity_holds && r.dual_holds && r.dual_problem_solvable);
        }
        let r = check_self_duality(&id("x1 <= x1"), 0, &one, &opts).unwrap();
        assert!(r.consistent() && r.identity_holds);
    }

    #[test]
    fn subspace_counts() {
        let counts: Vec<(u32, u32, usize)> = vec![(2, 1, 2), (2, 2, 5), (2, 3, 16), (3, 2, 6), (3, 3, 28), (5, 2, 8)];
        for (p, d, n) in counts {
            let l = subspace_lattice(p, d).unwrap();
            assert_eq!(l.len(), n, "F_{p}^{d}");
            assert_eq!(l.dim_of(l.zero()), 0);
            assert_eq!(l.dim_of(l.top()), d);
        }
        assert!(subspace_lattice(4, 2).is_err());
        assert!(subspace_lattice(2, 4).is_err());
    }

    #[test]
    fn lattice_laws_on_f2_cubed() {
        let l = subspace_lattice(2, 3).unwrap();
        let n = l.len();
        for a in 0..n {
            assert_eq!(l.join(a, l.zero()), a);
            assert_eq!(l.meet(a, l.top()), a);
            for b in 0..n {
                assert_eq!(l.join(a, b), l.join(b, a));
                assert_eq!(l.meet(a, b), l.meet(b, a));
                assert_eq!(l.join(a, l.meet(a, b)), a);
                assert_eq!(l.meet(a, l.join(a, b)), a);
                assert_eq!(l.dim_of(l.join(a, b)) + l.dim_of(l.meet(a, b)), l.dim_of(a) + l.dim_of(b));
                for c in 0..n {
                    assert_eq!(l.join(a, l.join(b, c)), l.join(l.join(a, b), c));
                    assert_eq!(l.meet(a, l.meet(b, c)), l.meet(l.meet(a, b), c));
                }
            }
        }
    }

    #[test]
    fn bases_are_reduced() {
        let l = subspace_lattice(3, 2).unwrap();
        let diagonal = l.span(&[l.vector_code(&[1, 1])]);
        assert_eq!(l.describe(diagonal), "<(1,1)>");
        let anti = l.span(&[l.vector_code(&[2, 1])]);
        assert_eq!(l.describe(anti), "<(1,2)>");
        assert_eq!(l.describe(l.zero()), "0");
        assert_eq!(l.describe(l.top()), "<(1,0),(0,1)>");
    }

    #[test]
    fn oracle_examples() {
        let f22 = subspace_lattice(2, 2).unwrap();
        assert!(!oracle_holds(&id(DISTRIBUTIVE), &f22, DEFAULT_VAR_CAP).unwrap());
        assert!(oracle_holds(&id(MODULAR), &f22, DEFAULT_VAR_CAP).unwrap());
        assert!(oracle_holds(&id("x1 <= x1"), &f22, DEFAULT_VAR_CAP).unwrap());
        let witness = oracle_counterexample(&id(DISTRIBUTIVE), &f22, DEFAULT_VAR_CAP)
            .unwrap()
            .unwrap();
        let assign = |x: Var| witness.iter().find(|(y, _)| *y == x).unwrap().1;
        let d = id(DISTRIBUTIVE);
        assert!(!f22.leq(f22.eval(&d.lhs, &assign), f22.eval(&d.rhs, &assign)));
        let six = id("x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 <= x1");
        assert!(oracle_holds(&six, &f22, DEFAULT_VAR_CAP).is_err());
    }

    #[test]
    fn distributive_witness_from_three_lines() {
        let l = subspace_lattice(2, 2).unwrap();
        let b1 = l.span(&[l.vector_code(&[1, 0])]);
        let b2 = l.span(&[l.vector_code(&[0, 1])]);
        let b3 = l.span(&[l.vector_code(&[1, 1])]);
        let d = id(DISTRIBUTIVE);
        let assign = |x: Var| [b1, b2, b3][x as usize - 1];
        assert_eq!(l.eval(&d.lhs, &assign), b1);
        assert_eq!(l.eval(&d.rhs, &assign), l.zero());
    }

    #[test]
    fn membership_examples() {
        let l = subspace_lattice(2, 2).unwrap();
        let (g, _) = graph_of_term(&parse_term("x1 \\/ x2").unwrap()).unwrap();
        let b1 = l.span(&[l.vector_code(&[1, 0])]);
        let b2 = l.span(&[l.vector_code(&[0, 1])]);
        let v = l.vector_code(&[1, 1]);
        assert!(membership_via_contents(&g, &l, &[b1, b2], 0, v).unwrap());
        assert!(!membership_via_contents(&g, &l, &[b1, l.zero()], 0, v).unwrap());
        let f23 = subspace_lattice(2, 3).unwrap();
        assert!(membership_via_contents(&g, &f23, &[0, 0], 0, 0).is_err());
    }
}
