use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use ldk_core::balance::{absorb_missing, one_balance};
use ldk_core::decision::{
    check_identity, oracle_counterexample, self_duality_report, subspace_lattice, CheckOptions,
};
use ldk_core::linsolve::{enumerate_solutions_with, solve_problem, AssemblyMode};
use ldk_core::pbg::{format_vector, PbgProblem};
use ldk_core::planegraph::{dot_export, graph_of_term, DotOptions, EdgeIndexMap, GraphFile, PlaneGraph};
use ldk_core::term::{parse_identity, parse_term, Identity};
use ldk_core::GroupSpec;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::report::{Failure, InputDigest, Status};
use crate::{Cli, Command, GraphSource};

pub struct Done {
    pub outputs: Value,
    pub status: Status,
    pub human: Vec<String>,
}

type Inputs = BTreeMap<String, InputDigest>;

pub fn run(cli: &Cli, inputs: &mut Inputs) -> Result<Done, Failure> {
    match &cli.command {
        Command::Normalize { identity } => normalize(identity, inputs),
        Command::Graph {
            source,
            dual,
            dot,
            facet_labels,
        } => graph(source, *dual, dot.as_deref(), *facet_labels, inputs),
        Command::Check {
            identity,
            moduli,
            self_dual,
            oracle,
            var_cap,
            b,
            facet_reduced,
        } => {
            let options = CheckOptions {
                path_limit: cli.path_limit,
                mode: mode(*facet_reduced),
            };
            check(identity, moduli, *self_dual, *oracle, *var_cap, b, &options, inputs)
        }
        Command::Solve {
            problem,
            enumerate,
            facet_reduced,
        } => solve(
            problem,
            *enumerate,
            mode(*facet_reduced),
            cli.path_limit,
            cli.enum_cap,
            inputs,
        ),
        Command::Paths { source, dual } => paths(source, *dual, cli.path_limit, inputs),
    }
}

fn mode(facet_reduced: bool) -> AssemblyMode {
    if facet_reduced {
        AssemblyMode::FacetReduced
    } else {
        AssemblyMode::Full
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(Status::IoError, format!("cannot read {}: {e}", path.display())))
}

fn ok(outputs: Value, human: Vec<String>) -> Result<Done, Failure> {
    Ok(Done {
        outputs,
        status: Status::Ok,
        human,
    })
}

fn parse_identities(text: &str, inputs: &mut Inputs) -> Result<Vec<Identity>, Failure> {
    inputs.insert("identity".into(), InputDigest::of(text, true));
    Ok(parse_identity(text).map_err(ldk_core::Error::from)?)
}

fn normalize(text: &str, inputs: &mut Inputs) -> Result<Done, Failure> {
    let mut items = Vec::new();
    let mut human = Vec::new();
    for id in parse_identities(text, inputs)? {
        let (absorbed, _) = absorb_missing(&id);
        let (balanced, trace) = one_balance(&id);
        human.push(format!("{id}  ~>  {balanced}"));
        items.push(json!({
            "identity": id,
            "absorbed": absorbed,
            "balanced": balanced,
            "unchanged": balanced == id,
            "variables": balanced.variables().len(),
            "trace": trace,
        }));
    }
    ok(json!({ "identities": items }), human)
}

/// The graph of a term (validated by construction) or of a file (validated
/// here), together with the variable of each edge when known.
fn load_graph(source: &GraphSource, inputs: &mut Inputs) -> Result<(PlaneGraph, Option<EdgeIndexMap>), Failure> {
    if let Some(path) = &source.file {
        let text = read(path)?;
        inputs.insert("graph".into(), InputDigest::of(&text, false));
        let g = PlaneGraph::from_json(&text)?;
        g.ensure_valid()?;
        return Ok((g, None));
    }
    let text = source.term.as_deref().expect("clap requires a term or a file");
    inputs.insert("term".into(), InputDigest::of(text, true));
    let term = parse_term(text).map_err(ldk_core::Error::from)?;
    let (g, map) = graph_of_term(&term)?;
    Ok((g, Some(map)))
}

fn graph(
    source: &GraphSource,
    dual: bool,
    dot: Option<&Path>,
    facet_labels: bool,
    inputs: &mut Inputs,
) -> Result<Done, Failure> {
    let (g, map) = load_graph(source, inputs)?;
    let g = if dual { g.dual() } else { g };
    let stats = g.stats();
    let mut human = vec![stats.to_string()];
    if let Some(path) = dot {
        let options = DotOptions {
            name: None,
            facet_labels,
        };
        fs::write(path, dot_export(&g, &options)).map_err(|e| {
            Failure::new(Status::IoError, format!("cannot write {}: {e}", path.display()))
        })?;
        human.push(format!("DOT written to {}", path.display()));
    }
    let edge_variables = map.map(|m| {
        m.vars()
            .iter()
            .enumerate()
            .map(|(i, v)| json!({ "edge": i + 1, "variable": format!("x{v}") }))
            .collect::<Vec<_>>()
    });
    ok(
        json!({
            "dual": dual,
            "stats": stats,
            "summary": stats.to_string(),
            "edge_variables": edge_variables,
            "graph": GraphFile::from_graph(&g),
            "dot": dot.map(|p| p.display().to_string()),
        }),
        human,
    )
}

#[allow(clippy::too_many_arguments)]
fn check(
    text: &str,
    moduli: &[u64],
    self_dual: bool,
    oracle: Option<u32>,
    var_cap: usize,
    b: &BigInt,
    options: &CheckOptions,
    inputs: &mut Inputs,
) -> Result<Done, Failure> {
    let identities = parse_identities(text, inputs)?;
    let mut status = Status::Ok;
    let mut human = Vec::new();
    let mut items = Vec::new();
    for id in &identities {
        let mut checks = Vec::new();
        for &m in moduli {
            let group = GroupSpec::new(m);
            let verdict = check_identity(id, m, b, options)?;
            let word = if verdict.holds { "holds" } else { "fails" };
            human.push(format!("{id} over {group}: {word}"));
            let mut entry = json!({
                "modulus": m,
                "group": group.to_string(),
                "holds": verdict.holds,
                "verdict": verdict,
            });

            if self_dual {
                let report = self_duality_report(id, m, b, options)?;
                if !report.consistent() {
                    status = Status::AssertionFailure;
                    human.push(format!("  inconsistent duality results over {group}"));
                } else {
                    let dual_word = if report.dual_holds { "holds" } else { "fails" };
                    human.push(format!("  dual {} over {group}: {dual_word}", id.dual()));
                }
                entry["self_duality"] = json!({
                    "consistent": report.consistent(),
                    "identity_holds": report.identity_holds,
                    "dual_holds": report.dual_holds,
                    "problem_solvable": report.problem_solvable,
                    "dual_problem_solvable": report.dual_problem_solvable,
                    "dual_identity": id.dual(),
                    "dual_verdict": report.dual,
                });
            }

            if let Some(d) = oracle {
                entry["oracle"] = match u32::try_from(m).ok().filter(|p| [2, 3, 5].contains(p)) {
                    None => json!({ "dimension": d, "skipped": format!("{group} is not a supported prime field") }),
                    Some(p) => {
                        let lattice = subspace_lattice(p, d)?;
                        let witness = oracle_counterexample(id, &lattice, var_cap)?;
                        let holds = witness.is_none();
                        if verdict.holds && !holds {
                            status = Status::AssertionFailure;
                            human.push(format!("  holds over {group} but fails in F_{p}^{d}"));
                        } else {
                            let word = if holds { "holds" } else { "fails" };
                            human.push(format!("  oracle F_{p}^{d}: {word}"));
                        }
                        let counterexample = witness.map(|w| {
                            w.iter()
                                .map(|&(x, s)| json!({ "variable": format!("x{x}"), "subspace": lattice.describe(s) }))
                                .collect::<Vec<_>>()
                        });
                        json!({
                            "dimension": d,
                            "subspaces": lattice.len(),
                            "holds": holds,
                            "counterexample": counterexample,
                        })
                    }
                };
            }
            checks.push(entry);
        }
        items.push(json!({ "identity": id, "checks": checks }));
    }
    Ok(Done {
        outputs: json!({ "b": b.to_string(), "identities": items }),
        status,
        human,
    })
}

fn solve(
    path: &Path,
    enumerate: bool,
    mode: AssemblyMode,
    path_limit: usize,
    enum_cap: u64,
    inputs: &mut Inputs,
) -> Result<Done, Failure> {
    let text = read(path)?;
    inputs.insert("problem".into(), InputDigest::of(&text, false));
    let p = PbgProblem::from_json(&text)?;
    let report = solve_problem(&p, mode, path_limit)?;
    let verified = match &report.particular {
        Some(a) => p.is_solution(a, path_limit)?,
        None => false,
    };
    let dual = solve_problem(&p.dual(), mode, path_limit)?;
    let mut status = Status::Ok;
    let mut human = vec![match &report.particular {
        Some(a) => format!("solvable over {}; particular solution {}", p.group(), format_vector(a)),
        None => format!("not solvable over {}", p.group()),
    }];
    if report.solvable && !verified {
        status = Status::AssertionFailure;
        human.push("particular solution fails the path check".into());
    }
    if dual.solvable != report.solvable {
        status = Status::AssertionFailure;
        human.push("dual problem disagrees on solvability".into());
    }
    let mut outputs = json!({
        "group": p.group().to_string(),
        "modulus": p.group().modulus,
        "b": p.b().to_string(),
        "edges": p.n(),
        "mode": mode,
        "solution": report,
        "particular_verified": verified,
        "dual_problem_solvable": dual.solvable,
    });
    if enumerate {
        let all = enumerate_solutions_with(&p, enum_cap, path_limit)?;
        human.push(format!("{} solutions by enumeration", all.len()));
        if report.solvable == all.is_empty() {
            status = Status::AssertionFailure;
            human.push("enumeration disagrees with the solver".into());
        }
        let listed: Vec<Vec<String>> = all
            .iter()
            .map(|a| a.iter().map(ToString::to_string).collect())
            .collect();
        outputs["enumeration"] = json!({ "count": all.len(), "solutions": listed });
    }
    Ok(Done {
        outputs,
        status,
        human,
    })
}

fn paths(source: &GraphSource, dual: bool, path_limit: usize, inputs: &mut Inputs) -> Result<Done, Failure> {
    let (g, _) = load_graph(source, inputs)?;
    let g = if dual { g.dual() } else { g };
    let all = g.maximal_paths(path_limit)?;
    let human = all
        .iter()
        .map(|p| {
            let ids: Vec<String> = p.iter().map(ToString::to_string).collect();
            ids.join(" ")
        })
        .collect();
    ok(json!({ "count": all.len(), "paths": all }), human)
}
