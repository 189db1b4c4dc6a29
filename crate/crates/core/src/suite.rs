//! Batch runs over the small-graph corpus, reported as JSON.
//!
//! Reports carry no timings, so identical runs serialize identically.

use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::checker::{Checker, PathFlavor};
use crate::colorers::{
    color_cartesian_near_star, color_cartesian_star, color_cartesian_traceable, color_join_general,
    color_join_with_k1, color_lexicographic, color_permutation_star, color_permutation_traceable,
    color_strong, ColorerError, ColorerOutcome, StarVariant,
};
use crate::graph::{
    enumerate_connected_graphs, enumerate_connected_graphs_capped, find_hamiltonian_path, make_complete,
    make_complete_bipartite, make_cycle, make_empty, make_path, make_spider, make_star, Graph,
};
use crate::ops::{join, lexicographic, strong, Permutation};
use crate::oracle::{
    brute_force_pc, brute_force_pvc, brute_force_tpc, verify_bridge_bound, verify_inequality_star,
    verify_monotonicity, OracleConfig,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    KnownValues,
    ColorerSweep,
    InequalitySweep,
}

impl SuiteName {
    pub const ALL: [SuiteName; 3] = [SuiteName::KnownValues, SuiteName::ColorerSweep, SuiteName::InequalitySweep];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::KnownValues => "known-values",
            SuiteName::ColorerSweep => "colorer-sweep",
            SuiteName::InequalitySweep => "inequality-sweep",
        }
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
}

type CheckResult = Result<(usize, String), String>;

fn check(name: &str, body: impl FnOnce() -> CheckResult) -> SuiteCheck {
    let started = Instant::now();
    let (passed, cases, detail) = match body() {
        Ok((cases, detail)) => (true, cases, detail),
        Err(detail) => (false, 0, detail),
    };
    SuiteCheck {
        name: name.to_string(),
        passed,
        cases,
        detail,
        elapsed: started.elapsed(),
    }
}

pub fn run_suite(name: SuiteName) -> SuiteReport {
    let checks = match name {
        SuiteName::KnownValues => known_values(),
        SuiteName::ColorerSweep => colorer_sweep(),
        SuiteName::InequalitySweep => inequality_sweep(),
    };
    SuiteReport {
        suite: name,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn oracle() -> OracleConfig {
    OracleConfig::with_cap(40)
}

fn tpc_of(g: &Graph) -> Result<u32, String> {
    brute_force_tpc(g, &oracle()).map(|r| r.value).map_err(|e| e.to_string())
}

fn expect_values(cases: Vec<(String, Graph, u32)>) -> CheckResult {
    let n = cases.len();
    for (label, g, want) in cases {
        let got = tpc_of(&g)?;
        if got != want {
            return Err(format!("tpc({label}) = {got}, expected {want}"));
        }
    }
    Ok((n, "all values match".into()))
}

fn trees(orders: std::ops::RangeInclusive<usize>) -> Result<Vec<Graph>, String> {
    let mut out = Vec::new();
    for n in orders {
        let all = enumerate_connected_graphs_capped(n, n.max(6)).map_err(|e| e.to_string())?;
        out.extend(all.into_iter().filter(Graph::is_tree));
    }
    Ok(out)
}

fn connected(orders: std::ops::RangeInclusive<usize>) -> Result<Vec<Graph>, String> {
    let mut out = Vec::new();
    for n in orders {
        out.extend(enumerate_connected_graphs(n).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn known_values() -> Vec<SuiteCheck> {
    vec![
        check("complete graphs", || {
            expect_values((3..=4).map(|n| (format!("K_{n}"), make_complete(n), 1)).collect())
        }),
        check("stars", || {
            expect_values(
                (2..=3)
                    .map(|n| (format!("K_1,{n}"), make_star(n), n as u32 + 1))
                    .collect(),
            )
        }),
        check("trees", || {
            let cases = trees(3..=7)?
                .into_iter()
                .map(|t| (format!("{:?}", t.edges()), t.clone(), t.max_degree() as u32 + 1))
                .collect();
            expect_values(cases)
        }),
        check("complete bipartite", || {
            expect_values(vec![
                ("K_2,2".into(), make_complete_bipartite(2, 2), 3),
                ("K_2,3".into(), make_complete_bipartite(2, 3), 3),
            ])
        }),
        check("pc and pvc of complete graphs", || {
            let pc = brute_force_pc(&make_complete(3), &oracle()).map_err(|e| e.to_string())?;
            let pvc = brute_force_pvc(&make_complete(4), &oracle()).map_err(|e| e.to_string())?;
            if (pc.value, pvc.value) != (1, 0) {
                return Err(format!("pc(K_3) = {}, pvc(K_4) = {}", pc.value, pvc.value));
            }
            Ok((2, "pc(K_3) = 1, pvc(K_4) = 0".into()))
        }),
        check("bridge bound", || {
            let pendant = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).map_err(|e| e.to_string())?;
            let graphs = [make_star(3), make_path(4), pendant];
            for g in &graphs {
                if !verify_bridge_bound(g, &oracle()).map_err(|e| e.to_string())? {
                    return Err(format!("bound fails on {:?}", g.edges()));
                }
            }
            Ok((graphs.len(), "tpc >= b + 1 on every case".into()))
        }),
        check("spanning monotonicity", || {
            let pairs = [
                (make_cycle(4).map_err(|e| e.to_string())?, make_path(4)),
                (make_complete(4), make_star(3)),
            ];
            for (g, h) in &pairs {
                if !verify_monotonicity(g, h, &oracle()).map_err(|e| e.to_string())? {
                    return Err(format!("tpc({:?}) > tpc({:?})", g.edges(), h.edges()));
                }
            }
            Ok((pairs.len(), "tpc(G) <= tpc(H) on every pair".into()))
        }),
        check("2-connected graphs", || {
            let graphs: Vec<_> = connected(3..=5)?.into_iter().filter(Graph::is_two_connected).collect();
            for g in &graphs {
                let v = tpc_of(g)?;
                if v > 4 {
                    return Err(format!("tpc({:?}) = {v}", g.edges()));
                }
            }
            Ok((graphs.len(), "tpc <= 4 on every graph".into()))
        }),
    ]
}

fn inequality_sweep() -> Vec<SuiteCheck> {
    vec![
        check("tpc >= max(pc, pvc)", || {
            let graphs = connected(1..=4)?;
            for g in &graphs {
                if !verify_inequality_star(g, &oracle()).map_err(|e| e.to_string())? {
                    return Err(format!("inequality fails on {:?}", g.edges()));
                }
            }
            Ok((graphs.len(), "holds on every connected graph".into()))
        }),
        check("tpc = 1 exactly for complete graphs", || {
            let graphs = connected(1..=5)?;
            for g in &graphs {
                if (tpc_of(g)? == 1) != g.is_complete() {
                    return Err(format!("fails on {:?}", g.edges()));
                }
            }
            Ok((graphs.len(), "holds on every connected graph".into()))
        }),
    ]
}

/// Runs a colorer over a grid; every outcome must use 3 colors and pass.
fn sweep(outcomes: impl IntoIterator<Item = (String, Result<ColorerOutcome, ColorerError>)>) -> CheckResult {
    let (mut cases, mut repaired) = (0, 0);
    for (label, outcome) in outcomes {
        let out = outcome.map_err(|e| format!("{label}: {e}"))?;
        let ok = Checker::new(&out.graph, &out.coloring, PathFlavor::TotalProper)
            .and_then(|c| c.all_connected())
            .map_err(|e| format!("{label}: {e}"))?;
        if !ok || out.coloring.k() != 3 {
            return Err(format!("{label}: k = {}, passes = {ok}", out.coloring.k()));
        }
        cases += 1;
        repaired += usize::from(out.repaired);
    }
    Ok((cases, format!("{repaired} repaired by search")))
}

fn pairs(orders: &[usize]) -> Result<Vec<(Graph, Graph)>, String> {
    let graphs = orders
        .iter()
        .map(|&n| enumerate_connected_graphs(n).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?
        .concat();
    Ok(graphs.iter().cartesian_product(&graphs).map(|(g, h)| (g.clone(), h.clone())).collect())
}

fn colorer_sweep() -> Vec<SuiteCheck> {
    vec![
        check("join with K_1", || {
            let gs: Vec<_> = connected(3..=5)?.into_iter().filter(|g| !g.is_complete()).collect();
            sweep(gs.iter().map(|g| (format!("{:?}", g.edges()), color_join_with_k1(g))))
        }),
        check("join", || {
            let ps = pairs(&[2, 3])?;
            let ps = ps.iter().filter(|(g, h)| !join(g, h).graph.is_complete());
            sweep(ps.map(|(g, h)| (format!("{:?} v {:?}", g.edges(), h.edges()), color_join_general(g, h))))
        }),
        check("cartesian traceable", || {
            let ps = pairs(&[2, 3, 4])?;
            let ps = ps
                .iter()
                .filter(|(g, h)| find_hamiltonian_path(g).is_some() && find_hamiltonian_path(h).is_some());
            sweep(ps.map(|(g, h)| (format!("{:?} x {:?}", g.edges(), h.edges()), color_cartesian_traceable(g, h))))
        }),
        check("cartesian star", || {
            let grid = (2..=4).cartesian_product(3..=4);
            sweep(grid.map(|(n, s)| (format!("P_{n} x K_1,{s}"), color_cartesian_star(&make_path(n), &make_star(s)))))
        }),
        check("cartesian near-star", || {
            let h = make_spider(&[2, 1, 1]);
            sweep((2..=7).map(|n| (format!("P_{n} x spider"), color_cartesian_near_star(&make_path(n), &h))))
        }),
        check("permutation traceable", || {
            let cases = (3..=4).flat_map(|n| {
                (0..n).permutations(n).map(move |image| {
                    let alpha = Permutation::new(image.clone()).expect("permutation");
                    (format!("P_{n} {image:?}"), color_permutation_traceable(&make_path(n), &alpha))
                })
            });
            sweep(cases)
        }),
        check("permutation star", || {
            let grid = (3..=5).cartesian_product([StarVariant::Identity, StarVariant::Transposition01]);
            sweep(grid.map(|(m, v)| (format!("K_1,{m} {v:?}"), color_permutation_star(m, v))))
        }),
        check("lexicographic", || {
            let hs = [make_empty(2), make_empty(3), make_path(2), make_path(3)];
            let gs = connected(2..=4)?;
            let cases = gs
                .iter()
                .cartesian_product(&hs)
                .filter(|(g, h)| !lexicographic(g, h).graph.is_complete());
            sweep(cases.map(|(g, h)| (format!("{:?} o {:?}", g.edges(), h.edges()), color_lexicographic(g, h))))
        }),
        check("strong", || {
            let mut ps = pairs(&[2, 3])?;
            ps.push((make_star(3), make_path(3)));
            let ps = ps.iter().filter(|(g, h)| !strong(g, h).graph.is_complete());
            sweep(ps.map(|(g, h)| (format!("{:?} s {:?}", g.edges(), h.edges()), color_strong(g, h))))
        }),
    ]
}
