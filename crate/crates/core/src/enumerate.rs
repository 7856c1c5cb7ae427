//! Isomorph-free generation of connected maximal triangle-free graphs and
//! the verification harness built on top of it.
//!
//! Connected triangle-free graphs of order `n + 1` are generated from those
//! of order `n` by adding a vertex joined to a nonempty independent set.
//! Every connected graph has a non-cut vertex, so every isomorphism class is
//! reached. Children are deduplicated by canonical form at each level. On the
//! last level only maximal children are kept, since nothing is built on top
//! of them.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::{FamilySpec, Special};
use crate::classify::{classify, domination_number, Classification, ClassifyError};
use crate::graph::{bit, Diameter, Graph};
use crate::iso::{canonical_graph, is_isomorphism};
use crate::minor::{verify_model, Obstruction};

/// Default enumeration cap.
pub const MAX_ENUMERATION_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("max order must be between 1 and {MAX_ENUMERATION_ORDER}, got {0}")]
    SizeBound(usize),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

fn check_cap(max_n: usize) -> Result<(), EnumerateError> {
    if max_n == 0 || max_n > MAX_ENUMERATION_ORDER {
        Err(EnumerateError::SizeBound(max_n))
    } else {
        Ok(())
    }
}

/// Calls `f` with every nonempty independent set of `g` as a bitmask.
fn for_each_independent_set(g: &Graph, mut f: impl FnMut(u64)) {
    fn rec(g: &Graph, v: usize, set: u64, blocked: u64, f: &mut impl FnMut(u64)) {
        if v == g.order() {
            if set != 0 {
                f(set);
            }
            return;
        }
        rec(g, v + 1, set, blocked, f);
        if blocked & bit(v) == 0 {
            rec(g, v + 1, set | bit(v), blocked | g.neighbors(v), f);
        }
    }
    rec(g, 0, 0, 0, &mut f);
}

fn sort_canonical(mut graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> = graphs.drain(..).map(|g| (g.to_graph6(), g)).collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// One level of generation. With `maximal_only`, children that are not
/// maximal triangle-free are dropped before canonicalization.
fn next_level(parents: &[Graph], maximal_only: bool) -> Vec<Graph> {
    let seen = parents
        .par_chunks(64)
        .map(|chunk| {
            let mut local = HashSet::new();
            for p in chunk {
                for_each_independent_set(p, |s| {
                    let child = p.with_vertex(s);
                    if maximal_only && !child.every_nonadjacent_pair_has_common_neighbor() {
                        return;
                    }
                    local.insert(canonical_graph(&child));
                });
            }
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    sort_canonical(seen.into_iter().collect())
}

/// One representative per isomorphism class of connected maximal
/// triangle-free graphs of each order up to `max_n`, canonically labelled,
/// ordered by order and then by graph6 string.
pub fn enumerate_mtf(max_n: usize) -> Result<Vec<Graph>, EnumerateError> {
    check_cap(max_n)?;
    let k1 = Graph::empty(1).unwrap();
    let mut out = vec![k1.clone()];
    let mut level = vec![k1];
    for n in 2..=max_n {
        let last = n == max_n;
        level = next_level(&level, last);
        out.extend(
            level
                .iter()
                .filter(|g| last || g.every_nonadjacent_pair_has_common_neighbor())
                .cloned(),
        );
    }
    Ok(out)
}

/// Per-order outcome of running the recognizer over the enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderReport {
    pub order: usize,
    /// Connected triangle-free graphs of diameter exactly 2.
    pub total: usize,
    pub member: usize,
    pub nonmember: usize,
    pub obstructions: BTreeMap<Obstruction, usize>,
    pub members_by_family: Vec<FamilySpec>,
    /// Graphs where neither a family nor an obstruction was found, or where
    /// the returned witness failed its independent check.
    pub anomalies: Vec<Graph>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationReport {
    pub orders: Vec<OrderReport>,
}

impl EnumerationReport {
    pub fn anomaly_count(&self) -> usize {
        self.orders.iter().map(|o| o.anomalies.len()).sum()
    }

    pub fn total(&self) -> usize {
        self.orders.iter().map(|o| o.total).sum()
    }

    pub fn obstruction_total(&self, ob: Obstruction) -> usize {
        self.orders
            .iter()
            .map(|o| o.obstructions.get(&ob).copied().unwrap_or(0))
            .sum()
    }

    /// `n=<k> total=<t> member=<m> nonmember=<x> anomalies=<a>` per order.
    pub fn machine_lines(&self) -> String {
        let mut s = String::new();
        for o in &self.orders {
            writeln!(
                s,
                "n={} total={} member={} nonmember={} anomalies={}",
                o.order,
                o.total,
                o.member,
                o.nonmember,
                o.anomalies.len()
            )
            .unwrap();
        }
        s
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "{:>3} {:>6} {:>7} {:>10} {:>5} {:>9} {:>3} {:>9}",
            "n", "total", "member", "nonmember", "K35", "K44minus", "F0", "anomalies"
        )
        .unwrap();
        for o in &self.orders {
            let h = |ob| o.obstructions.get(&ob).copied().unwrap_or(0);
            writeln!(
                s,
                "{:>3} {:>6} {:>7} {:>10} {:>5} {:>9} {:>3} {:>9}",
                o.order,
                o.total,
                o.member,
                o.nonmember,
                h(Obstruction::K35),
                h(Obstruction::K44Minus),
                h(Obstruction::F0),
                o.anomalies.len()
            )
            .unwrap();
        }
        s
    }
}

enum Outcome {
    Member(FamilySpec),
    NonMember(Obstruction),
    Anomaly,
}

fn check_one(g: &Graph) -> Result<Outcome, EnumerateError> {
    match classify(g) {
        Ok(Classification::Member { spec, iso_witness }) => {
            let h = spec.construct().expect("catalog specs construct");
            Ok(if is_isomorphism(g, &h, &iso_witness) {
                Outcome::Member(spec)
            } else {
                Outcome::Anomaly
            })
        }
        Ok(Classification::NonMember { obstruction, model }) => {
            Ok(if verify_model(&model, &obstruction.pattern(), g) {
                Outcome::NonMember(obstruction)
            } else {
                Outcome::Anomaly
            })
        }
        Ok(Classification::NotSimpleDiameter2(_)) => Ok(Outcome::Anomaly),
        Err(ClassifyError::Unresolved) => Ok(Outcome::Anomaly),
        Err(e) => Err(e.into()),
    }
}

/// Classify every enumerated graph of diameter exactly 2.
pub fn verify_theorem2(max_n: usize) -> Result<EnumerationReport, EnumerateError> {
    let graphs = enumerate_mtf(max_n)?;
    let targets: Vec<&Graph> = graphs
        .iter()
        .filter(|g| g.diameter() == Diameter::Finite(2))
        .collect();
    let outcomes: Vec<Outcome> = targets
        .par_iter()
        .map(|g| check_one(g))
        .collect::<Result<_, _>>()?;
    let mut orders: Vec<OrderReport> = (1..=max_n)
        .map(|order| OrderReport {
            order,
            ..OrderReport::default()
        })
        .collect();
    for (g, outcome) in targets.iter().zip(outcomes) {
        let o = &mut orders[g.order() - 1];
        o.total += 1;
        match outcome {
            Outcome::Member(spec) => {
                o.member += 1;
                o.members_by_family.push(spec);
            }
            Outcome::NonMember(ob) => {
                o.nonmember += 1;
                *o.obstructions.entry(ob).or_default() += 1;
            }
            Outcome::Anomaly => o.anomalies.push((*g).clone()),
        }
    }
    Ok(EnumerationReport { orders })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    pub max_n: usize,
    pub members_checked: usize,
    pub max_gamma: usize,
    /// Members with domination number above 3.
    pub violations: Vec<(FamilySpec, usize)>,
    /// Members with domination number exactly 3.
    pub gamma3: Vec<FamilySpec>,
    /// The fixed graphs of order at most `max_n`.
    pub expected_gamma3: Vec<FamilySpec>,
}

impl DominationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.gamma3 == self.expected_gamma3
    }

    pub fn summary(&self) -> String {
        let names = |v: &[FamilySpec]| {
            v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
        };
        format!(
            "max_n={} members={} max_gamma={} violations={} gamma3={{{}}} expected={{{}}} holds={}",
            self.max_n,
            self.members_checked,
            self.max_gamma,
            self.violations.len(),
            names(&self.gamma3),
            names(&self.expected_gamma3),
            self.holds()
        )
    }
}

/// Domination numbers of every enumerated member graph.
pub fn verify_domination(max_n: usize) -> Result<DominationReport, EnumerateError> {
    let graphs = enumerate_mtf(max_n)?;
    let members: Vec<(FamilySpec, usize)> = graphs
        .par_iter()
        .filter(|g| g.diameter() == Diameter::Finite(2))
        .map(|g| -> Result<Option<(FamilySpec, usize)>, EnumerateError> {
            match classify(g) {
                Ok(Classification::Member { spec, .. }) => {
                    Ok(Some((spec, domination_number(g)?.number)))
                }
                Ok(_) | Err(ClassifyError::Unresolved) => Ok(None),
                Err(e) => Err(e.into()),
            }
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_, _>>()?;
    let mut gamma3: Vec<FamilySpec> = members
        .iter()
        .filter(|(_, g)| *g == 3)
        .map(|(s, _)| *s)
        .collect();
    gamma3.sort();
    let mut expected_gamma3: Vec<FamilySpec> = Special::ALL
        .iter()
        .filter(|s| s.order() <= max_n)
        .map(|&s| FamilySpec::Special(s))
        .collect();
    expected_gamma3.sort();
    Ok(DominationReport {
        max_n,
        members_checked: members.len(),
        max_gamma: members.iter().map(|(_, g)| *g).max().unwrap_or(0),
        violations: members.iter().filter(|(_, g)| *g > 3).copied().collect(),
        gamma3,
        expected_gamma3,
    })
}
