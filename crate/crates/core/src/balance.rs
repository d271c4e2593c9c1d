//! Rewriting inequalities into equivalent 1-balanced ones.
//!
//! Two lattice-valid rewrites are used. Absorption makes both sides use the
//! same variables: a variable `x` missing from the right side is added as
//! `q \/ (q /\ x)`, one missing from the left side as `p /\ (p \/ x)`. A
//! matrix split then removes a variable occurring `u` times on the left and
//! `v` times on the right, `(u, v) != (1, 1)`, by a `u x v` matrix of fresh
//! variables `w[i][j]`: the i-th left occurrence becomes the meet of row i,
//! the j-th right occurrence becomes the join of column j.

use serde::{Deserialize, Serialize};

use crate::term::{Identity, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lhs,
    Rhs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum BalanceStep {
    /// `variable` was missing from `side`, which was extended by absorption.
    Absorb { variable: Var, side: Side },
    /// `fresh[i][j]` replaced the variable; rows index left occurrences,
    /// columns index right occurrences.
    MatrixSplit {
        variable: Var,
        u: usize,
        v: usize,
        fresh: Vec<Vec<Var>>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceTrace {
    pub steps: Vec<BalanceStep>,
}

impl BalanceTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the recorded steps to `id`.
    pub fn replay(&self, id: &Identity) -> Identity {
        self.steps
            .iter()
            .fold(id.clone(), |acc, step| apply_step(&acc, step))
    }
}

fn apply_step(id: &Identity, step: &BalanceStep) -> Identity {
    match step {
        BalanceStep::Absorb { variable, side } => {
            let x = Term::var(*variable);
            match side {
                Side::Rhs => Identity::new(
                    id.lhs.clone(),
                    Term::join(id.rhs.clone(), Term::meet(id.rhs.clone(), x)),
                ),
                Side::Lhs => Identity::new(
                    Term::meet(id.lhs.clone(), Term::join(id.lhs.clone(), x)),
                    id.rhs.clone(),
                ),
            }
        }
        BalanceStep::MatrixSplit {
            variable, fresh, ..
        } => {
            let lhs = id.lhs.map_leaves(&mut |x, k| {
                if x == *variable {
                    Term::meet_all(fresh[k - 1].iter().map(|&w| Term::var(w)).collect())
                } else {
                    Term::Var(x)
                }
            });
            let rhs = id.rhs.map_leaves(&mut |x, k| {
                if x == *variable {
                    Term::join_all(fresh.iter().map(|row| Term::var(row[k - 1])).collect())
                } else {
                    Term::Var(x)
                }
            });
            Identity::new(lhs, rhs)
        }
    }
}

/// Makes both sides use the same set of variables.
pub fn absorb_missing(id: &Identity) -> (Identity, BalanceTrace) {
    let lhs_vars = id.lhs.variables();
    let rhs_vars = id.rhs.variables();
    let mut trace = BalanceTrace::default();
    for v in id.variables() {
        let side = match (lhs_vars.contains(&v), rhs_vars.contains(&v)) {
            (true, false) => Side::Rhs,
            (false, true) => Side::Lhs,
            _ => continue,
        };
        trace.steps.push(BalanceStep::Absorb { variable: v, side });
    }
    (trace.replay(id), trace)
}

/// Absorption followed by matrix splits until every variable occurs exactly
/// once per side.
///
/// Each split takes the smallest unbalanced variable, numbers its
/// occurrences left to right, and draws fresh indices as the smallest ones
/// unused by the current identity, filled row by row.
pub fn one_balance(id: &Identity) -> (Identity, BalanceTrace) {
    let (mut current, mut trace) = absorb_missing(id);
    loop {
        let profile = current.occurrences();
        let Some((&variable, &(u, v))) = profile.counts.iter().find(|(_, &c)| c != (1, 1)) else {
            break;
        };
        let used = current.variables();
        let mut candidates = (1..).filter(|i| !used.contains(i));
        let fresh: Vec<Vec<Var>> = (0..u)
            .map(|_| (0..v).map(|_| candidates.next().unwrap()).collect())
            .collect();
        let step = BalanceStep::MatrixSplit {
            variable,
            u,
            v,
            fresh,
        };
        current = apply_step(&current, &step);
        trace.steps.push(step);
    }
    (current, trace)
}
