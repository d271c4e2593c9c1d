//! Exact linear algebra for transport problems: system assembly, Smith
//! normal form and solving over `Z` and `Z_m`.

mod snf;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int_serde;
use crate::pbg::{GroupSpec, PbgProblem};
use crate::planegraph::{EdgeIndex, PlaneGraph, DEFAULT_PATH_LIMIT};

pub use snf::{smith_normal_form, Smith};

/// Dense rectangular matrix of big integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// `cols` is needed to give a zero-row matrix a width.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Panics on ragged input.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntMatrix::from_rows(rows, cols).expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Panics if the inner dimensions differ.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Panics if `x` has the wrong length.
    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free elimination. Panics unless square.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, x / &prev);
                }
            }
            prev = a.get(k, k).clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// `row[dst] += k * row[src]`
    pub(crate) fn add_row_multiple(&mut self, src: usize, dst: usize, k: &BigInt) {
        for c in 0..self.cols {
            let delta = self.get(src, c) * k;
            self.data[dst * self.cols + c] += delta;
        }
    }

    /// `col[dst] += k * col[src]`
    pub(crate) fn add_col_multiple(&mut self, src: usize, dst: usize, k: &BigInt) {
        for r in 0..self.rows {
            let delta = self.get(r, src) * k;
            self.data[r * self.cols + dst] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let x = &mut self.data[i * self.cols + c];
            *x = -&*x;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssemblyMode {
    /// One block of equations per maximal control path.
    #[default]
    Full,
    /// One control path plus one block per inner control facet.
    FacetReduced,
}

/// `matrix * a = rhs`, over whatever group the caller solves in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: IntMatrix,
    pub rhs: Vec<BigInt>,
}

/// Coefficient of `a_j` in the content of `v`: +1 at the head, -1 at the tail.
fn coefficient(flow: &PlaneGraph, v: usize, j: EdgeIndex) -> i64 {
    let e = flow.edge(j);
    i64::from(e.head.0 == v) - i64::from(e.tail.0 == v)
}

struct RowSet {
    n: usize,
    seen: HashSet<(Vec<i64>, BigInt)>,
    rows: Vec<Vec<i64>>,
    rhs: Vec<BigInt>,
}

impl RowSet {
    fn new(n: usize) -> Self {
        RowSet {
            n,
            seen: HashSet::new(),
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<i64>, rhs: BigInt) {
        if row.iter().all(|&c| c == 0) && rhs.is_zero() {
            return;
        }
        if self.seen.insert((row.clone(), rhs.clone())) {
            self.rows.push(row);
            self.rhs.push(rhs);
        }
    }

    /// Content equations of the edge set `plus` minus those of `minus`.
    fn push_vertex_rows(
        &mut self,
        flow: &PlaneGraph,
        plus: &[EdgeIndex],
        minus: &[EdgeIndex],
        target: impl Fn(usize) -> BigInt,
    ) {
        for v in 0..flow.num_vertices() {
            let mut row = vec![0i64; self.n];
            for &j in plus {
                row[j - 1] += coefficient(flow, v, j);
            }
            for &j in minus {
                row[j - 1] -= coefficient(flow, v, j);
            }
            self.push(row, target(v));
        }
    }

    fn finish(self) -> LinearSystem {
        let rows = self
            .rows
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        LinearSystem {
            matrix: IntMatrix::from_rows(rows, self.n).expect("rows have width n"),
            rhs: self.rhs,
        }
    }
}

/// Builds the transport equations of `p` with duplicate and trivial rows
/// removed. Right-hand sides are reduced into the problem's group.
pub fn assemble_system(p: &PbgProblem, mode: AssemblyMode, path_limit: usize) -> Result<LinearSystem> {
    let flow = p.flow();
    let control = p.control();
    let group = p.group();
    let transp = |v: usize| {
        let mut x = BigInt::zero();
        if v == flow.source().0 {
            x -= p.b();
        }
        if v == flow.sink().0 {
            x += p.b();
        }
        group.reduce(&x)
    };
    let mut rows = RowSet::new(p.n());
    match mode {
        AssemblyMode::Full => {
            for path in control.maximal_paths(path_limit)? {
                rows.push_vertex_rows(flow, &path, &[], transp);
            }
        }
        AssemblyMode::FacetReduced => {
            rows.push_vertex_rows(flow, &control.first_path(), &[], transp);
            for f in control.inner_facets() {
                rows.push_vertex_rows(
                    flow,
                    &control.left_boundary(f),
                    &control.right_boundary(f),
                    |_| BigInt::zero(),
                );
            }
        }
    }
    Ok(rows.finish())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub solvable: bool,
    /// A solution with entries in `[0, m)`, or any integer solution for `Z`.
    #[serde(with = "int_serde::opt_vec")]
    pub particular: Option<Vec<BigInt>>,
    /// Generators of the solution set of the homogeneous system.
    #[serde(with = "int_serde::vec_vec")]
    pub kernel_generators: Vec<Vec<BigInt>>,
    #[serde(with = "int_serde::vec")]
    pub snf_diagonal: Vec<BigInt>,
}

fn reduce_vec(group: GroupSpec, xs: Vec<BigInt>) -> Vec<BigInt> {
    xs.into_iter().map(|x| group.reduce(&x)).collect()
}

/// Solves `m * a = rhs` in `group` through the Smith normal form of `m`.
pub fn solve(m: &IntMatrix, rhs: &[BigInt], group: GroupSpec) -> Result<SolutionReport> {
    if rhs.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} entries, matrix has {} rows",
            rhs.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let mut d = m.clone();
    let mut r = rhs.to_vec();
    let v = snf::reduce(&mut d, &mut r);
    let diagonal = d.diagonal();
    let diag = |i: usize| diagonal.get(i).cloned().unwrap_or_default();
    let modulus = group.modulus_big();

    if group.modulus == 1 {
        return Ok(SolutionReport {
            solvable: true,
            particular: Some(vec![BigInt::zero(); n]),
            kernel_generators: Vec::new(),
            snf_diagonal: diagonal,
        });
    }

    let mut y = vec![BigInt::zero(); n];
    let mut solvable = true;
    for (i, ri) in r.iter().enumerate() {
        let di = diag(i);
        if group.modulus == 0 {
            if di.is_zero() {
                solvable &= ri.is_zero();
            } else if ri.is_multiple_of(&di) {
                y[i] = ri / &di;
            } else {
                solvable = false;
            }
            continue;
        }
        let ri = ri.mod_floor(&modulus);
        let g = di.gcd(&modulus);
        if !ri.is_multiple_of(&g) {
            solvable = false;
            continue;
        }
        if di.is_zero() {
            continue;
        }
        let step = &modulus / &g;
        if step.is_one() {
            continue;
        }
        let unit = (&di / &g).mod_floor(&step);
        let inverse = unit.extended_gcd(&step).x.mod_floor(&step);
        y[i] = ((&ri / &g) * inverse).mod_floor(&step);
    }

    let mut kernel = Vec::new();
    for j in 0..n {
        let dj = diag(j);
        if group.modulus == 0 {
            if dj.is_zero() {
                kernel.push(v.column(j));
            }
            continue;
        }
        let g = dj.gcd(&modulus);
        if g.is_one() {
            continue;
        }
        let step = &modulus / &g;
        let gen = reduce_vec(group, v.column(j).into_iter().map(|x| x * &step).collect());
        if gen.iter().any(|x| !x.is_zero()) {
            kernel.push(gen);
        }
    }

    let particular = solvable.then(|| reduce_vec(group, v.mul_vec(&y)));
    Ok(SolutionReport {
        solvable,
        particular,
        kernel_generators: kernel,
        snf_diagonal: diagonal,
    })
}

/// Assembles and solves `p` in its own group.
pub fn solve_problem(p: &PbgProblem, mode: AssemblyMode, path_limit: usize) -> Result<SolutionReport> {
    let sys = assemble_system(p, mode, path_limit)?;
    solve(&sys.matrix, &sys.rhs, p.group())
}

/// All solutions of `p` in `(Z_m)^n`, lexicographically sorted, by brute
/// force over every capacity vector.
pub fn enumerate_solutions(p: &PbgProblem, cap: u64) -> Result<Vec<Vec<BigInt>>> {
    enumerate_solutions_with(p, cap, DEFAULT_PATH_LIMIT)
}

pub fn enumerate_solutions_with(
    p: &PbgProblem,
    cap: u64,
    path_limit: usize,
) -> Result<Vec<Vec<BigInt>>> {
    let group = p.group();
    let n = p.n();
    let m = group.modulus;
    let within_cap = m != 0
        && u32::try_from(n)
            .ok()
            .and_then(|n| u128::from(m).checked_pow(n))
            .is_some_and(|t| t <= u128::from(cap));
    if !within_cap {
        return Err(Error::CapExceeded { modulus: m, n, cap });
    }
    let m = i128::from(m);

    let flow = p.flow();
    let b = p.b().to_i128().expect("b is reduced below the modulus");
    let mut checks: HashSet<(Vec<(usize, i128)>, i128)> = HashSet::new();
    for path in p.control().maximal_paths(path_limit)? {
        let mut content = vec![Vec::new(); flow.num_vertices()];
        for &j in &path {
            let e = flow.edge(j);
            content[e.tail.0].push((j - 1, -1));
            content[e.head.0].push((j - 1, 1));
        }
        for (v, terms) in content.into_iter().enumerate() {
            let mut target = 0;
            if v == flow.source().0 {
                target -= b;
            }
            if v == flow.sink().0 {
                target += b;
            }
            checks.insert((terms, target.rem_euclid(m)));
        }
    }
    let mut checks: Vec<_> = checks.into_iter().collect();
    checks.sort();

    let mut out = Vec::new();
    let mut a = vec![0i128; n];
    loop {
        let ok = checks.iter().all(|(terms, target)| {
            terms.iter().map(|&(j, s)| s * a[j]).sum::<i128>().rem_euclid(m) == *target
        });
        if ok {
            out.push(a.iter().map(|&x| BigInt::from(x)).collect());
        }
        let Some(k) = (0..n).rev().find(|&k| a[k] + 1 < m) else {
            break;
        };
        a[k] += 1;
        for x in &mut a[k + 1..] {
            *x = 0;
        }
    }
    Ok(out)
}

/// True when `a` satisfies every equation of `sys` in `group`.
pub fn satisfies(sys: &LinearSystem, a: &[BigInt], group: GroupSpec) -> bool {
    sys.matrix
        .mul_vec(a)
        .iter()
        .zip(&sys.rhs)
        .all(|(lhs, rhs)| group.reduce(&(lhs - rhs)).is_zero())
}

/// Sum of the absolute values of the entries; a size measure for reports.
pub fn l1_norm(xs: &[BigInt]) -> BigInt {
    xs.iter().map(|x| x.abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbg::PbgProblem;
    use crate::term::parse_identity;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn problem(text: &str, m: u64, b: i64) -> PbgProblem {
        let id = parse_identity(text).unwrap().remove(0);
        PbgProblem::from_balanced_identity(&id, GroupSpec::new(m), BigInt::from(b))
            .unwrap()
            .0
    }

    /// Schoolbook product, kept apart from `IntMatrix::mul`.
    fn naive_product(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let inner = b.len();
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn random_snf_against_naive_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows: Vec<Vec<i64>> = (0..6)
                .map(|_| (0..8).map(|_| rng.gen_range(-1..=1)).collect())
                .collect();
            let m = IntMatrix::from_i64(&rows);
            let s = smith_normal_form(&m);
            let product = naive_product(&naive_product(&s.u.to_rows(), &m.to_rows()), &s.v.to_rows());
            assert_eq!(product, s.d.to_rows());
            assert!(s.d.is_diagonal());
            let diag = s.diagonal();
            assert!(diag.iter().all(|d| !d.is_negative()));
            for w in diag.windows(2) {
                assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
            }
            assert!(s.u.det().abs().is_one());
            assert!(s.v.det().abs().is_one());
        }
    }

    #[test]
    fn det_small() {
        assert_eq!(IntMatrix::from_i64(&[vec![2, 1], vec![7, 4]]).det(), BigInt::from(1));
        assert_eq!(
            IntMatrix::from_i64(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).det(),
            BigInt::from(-2)
        );
        assert_eq!(IntMatrix::identity(0).det(), BigInt::one());
    }

    #[test]
    fn one_equation_over_integers() {
        let m = IntMatrix::from_i64(&[vec![1, 1]]);
        let r = solve(&m, &big(&[1]), GroupSpec::INTEGERS).unwrap();
        assert!(r.solvable);
        assert_eq!(r.particular, Some(big(&[1, 0])));
        assert_eq!(r.kernel_generators.len(), 1);
        let k = &r.kernel_generators[0];
        assert!(k == &big(&[1, -1]) || k == &big(&[-1, 1]), "{k:?}");
    }

    #[test]
    fn two_a_equals_one() {
        let m = IntMatrix::from_i64(&[vec![2]]);
        let over_z = solve(&m, &big(&[1]), GroupSpec::INTEGERS).unwrap();
        assert!(!over_z.solvable);
        assert_eq!(over_z.particular, None);
        let over_z3 = solve(&m, &big(&[1]), GroupSpec::new(3)).unwrap();
        assert!(over_z3.solvable);
        assert_eq!(over_z3.particular, Some(big(&[2])));
        assert!(over_z3.kernel_generators.is_empty());
        let over_z4 = solve(&m, &big(&[1]), GroupSpec::new(4)).unwrap();
        assert!(!over_z4.solvable);
        let even = solve(&m, &big(&[2]), GroupSpec::new(4)).unwrap();
        assert!(even.solvable);
        assert_eq!(even.kernel_generators, vec![big(&[2])]);
    }

    #[test]
    fn trivial_group_always_solvable() {
        let m = IntMatrix::from_i64(&[vec![2, 0], vec![0, 0]]);
        let r = solve(&m, &big(&[1, 5]), GroupSpec::new(1)).unwrap();
        assert!(r.solvable);
        assert_eq!(r.particular, Some(big(&[0, 0])));
    }

    #[test]
    fn rhs_length_is_checked() {
        let m = IntMatrix::from_i64(&[vec![1, 1]]);
        assert!(matches!(
            solve(&m, &big(&[1, 2]), GroupSpec::INTEGERS),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn meet_below_join_system() {
        let p = problem("x1 /\\ x2 <= x1 \\/ x2", 0, 1);
        let sys = assemble_system(&p, AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
        // s and t rows only; the middle vertex of the chain is absent from G_p
        assert_eq!(sys.matrix.to_rows(), vec![big(&[-1, -1]), big(&[1, 1])]);
        assert_eq!(sys.rhs, big(&[-1, 1]));
        let r = solve(&sys.matrix, &sys.rhs, GroupSpec::INTEGERS).unwrap();
        assert!(r.solvable);
        assert!(p.is_solution(r.particular.as_ref().unwrap(), DEFAULT_PATH_LIMIT).unwrap());
    }

    #[test]
    fn identity_problem_system() {
        let p = problem("x1 <= x1", 0, 1);
        let sys = assemble_system(&p, AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
        assert_eq!(sys.matrix.to_rows(), vec![big(&[-1]), big(&[1])]);
        assert_eq!(sys.rhs, big(&[-1, 1]));
        let r = solve(&sys.matrix, &sys.rhs, GroupSpec::INTEGERS).unwrap();
        assert_eq!(r.particular, Some(big(&[1])));
        assert!(r.kernel_generators.is_empty());
    }

    #[test]
    fn entries_are_unit_or_zero() {
        let p = problem(
            "(x4 /\\ x5) /\\ (x2 \\/ ((x6 /\\ x7) /\\ x3)) <= ((x4 \\/ x6) /\\ x2) \\/ ((x5 \\/ x7) /\\ x3)",
            0,
            1,
        );
        for mode in [AssemblyMode::Full, AssemblyMode::FacetReduced] {
            let sys = assemble_system(&p, mode, DEFAULT_PATH_LIMIT).unwrap();
            for row in sys.matrix.to_rows() {
                for x in row {
                    assert!(x.abs() <= BigInt::one());
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let p = problem("x1 /\\ x2 <= x1 \\/ x2", 2, 1);
        assert_eq!(
            enumerate_solutions(&p, 1_000_000).unwrap(),
            vec![big(&[0, 1]), big(&[1, 0])]
        );
        let trivial = problem("x1 /\\ x2 <= x1 \\/ x2", 1, 1);
        assert_eq!(enumerate_solutions(&trivial, 10).unwrap(), vec![big(&[0, 0])]);
        let id = problem("x1 <= x1", 3, 1);
        assert_eq!(enumerate_solutions(&id, 10).unwrap(), vec![big(&[1])]);
    }

    #[test]
    fn enumeration_caps() {
        let p = problem("x1 /\\ x2 <= x1 \\/ x2", 3, 1);
        assert!(matches!(
            enumerate_solutions(&p, 8),
            Err(Error::CapExceeded { modulus: 3, n: 2, cap: 8 })
        ));
        let z = problem("x1 <= x1", 0, 1);
        assert!(matches!(enumerate_solutions(&z, 8), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn distributive_problem_is_unsolvable_unless_trivial() {
        let text = "(x4 /\\ x5) /\\ (x2 \\/ x3) <= (x4 /\\ x2) \\/ (x5 /\\ x3)";
        for m in [0, 2, 3, 4, 6] {
            let r = solve_problem(&problem(text, m, 1), AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
            assert!(!r.solvable, "m = {m}");
        }
        let r = solve_problem(&problem(text, 1, 1), AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
        assert!(r.solvable);
    }

    #[test]
    fn kernel_generators_preserve_solutions() {
        let text = "(x4 /\\ x5) /\\ (x2 \\/ ((x6 /\\ x7) /\\ x3)) <= ((x4 \\/ x6) /\\ x2) \\/ ((x5 \\/ x7) /\\ x3)";
        for m in [0, 2, 3, 4, 6] {
            let p = problem(text, m, 1);
            let r = solve_problem(&p, AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
            assert!(r.solvable, "m = {m}");
            let a = r.particular.unwrap();
            assert!(p.is_solution(&a, DEFAULT_PATH_LIMIT).unwrap());
            for k in &r.kernel_generators {
                let shifted: Vec<BigInt> = a.iter().zip(k).map(|(x, y)| x + y).collect();
                assert!(p.is_solution(&shifted, DEFAULT_PATH_LIMIT).unwrap(), "m = {m}");
            }
        }
    }

    #[test]
    fn facet_reduced_matches_full_on_small_cases() {
        let texts = [
            "x1 /\\ x2 <= x1 \\/ x2",
            "(x4 /\\ x5) /\\ (x2 \\/ x3) <= (x4 /\\ x2) \\/ (x5 /\\ x3)",
            "(x4 /\\ x5) /\\ (x2 \\/ ((x6 /\\ x7) /\\ x3)) <= ((x4 \\/ x6) /\\ x2) \\/ ((x5 \\/ x7) /\\ x3)",
        ];
        for text in texts {
            for m in [2, 3] {
                let p = problem(text, m, 1);
                let full = assemble_system(&p, AssemblyMode::Full, DEFAULT_PATH_LIMIT).unwrap();
                let reduced = assemble_system(&p, AssemblyMode::FacetReduced, DEFAULT_PATH_LIMIT).unwrap();
                for a in enumerate_all(p.n(), m) {
                    assert_eq!(
                        satisfies(&full, &a, p.group()),
                        satisfies(&reduced, &a, p.group()),
                        "{text} at {a:?}"
                    );
                }
            }
        }
    }

    fn enumerate_all(n: usize, m: u64) -> Vec<Vec<BigInt>> {
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

    #[test]
    fn serde_report() {
        let r = SolutionReport {
            solvable: true,
            particular: Some(big(&[1, 0])),
            kernel_generators: vec![big(&[1, -1])],
            snf_diagonal: big(&[1]),
        };
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"solvable":true,"particular":[1,0],"kernel_generators":[[1,-1]],"snf_diagonal":[1]}"#
        );
        assert_eq!(serde_json::from_str::<SolutionReport>(&json).unwrap(), r);
    }
}
