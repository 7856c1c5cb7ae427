//! Constructors for every named graph family of the characterization.
//!
//! Parameterized families:
//!
//! * `Star(n)`: K1,n, `n >= 2`.
//! * `Biclique2(n)`: K2,n, `n >= 2`.
//! * `C5Attach(m, n)`: the 5-cycle v1..v5 plus `m` degree-2 vertices on
//!   {v1, v3} and `n` on {v1, v4}.
//! * `K33Sub(t)`, `K34Sub(t)`: K3,3 / K3,4 with one edge `ab` replaced by `t`
//!   paths of length two between `a` and `b` (the `t` parallel copies of the
//!   edge, each subdivided once).
//!
//! plus K3,3, K3,4, the seven fixed graphs of [`Special`] and the auxiliary
//! graphs F0..F3 of [`Aux`].

pub mod fixtures;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("parameter out of range for {0}")]
    ParamOutOfRange(String),
    #[error("unknown family name {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Special {
    P10,
    W8,
    W8Plus,
    M11,
    M11Minus,
    M11Eq,
    K34Star,
}

impl Special {
    pub const ALL: [Special; 7] = [
        Special::P10,
        Special::W8,
        Special::W8Plus,
        Special::M11,
        Special::M11Minus,
        Special::M11Eq,
        Special::K34Star,
    ];

    pub fn order(self) -> usize {
        match self {
            Special::P10 => 10,
            Special::W8 => 8,
            Special::W8Plus => 9,
            Special::M11 => 11,
            Special::M11Minus => 10,
            Special::M11Eq => 9,
            Special::K34Star => 8,
        }
    }

    fn size(self) -> usize {
        match self {
            Special::P10 => 15,
            Special::W8 => 12,
            Special::W8Plus => 15,
            Special::M11 => 20,
            Special::M11Minus => 17,
            Special::M11Eq => 14,
            Special::K34Star => 13,
        }
    }

    pub fn graph(self) -> Graph {
        use fixtures::*;
        match self {
            Special::P10 => from_letters(10, P10, &[]),
            Special::W8 => from_letters(8, W8, &[]),
            Special::W8Plus => from_letters(9, W8_PLUS, &[]),
            Special::M11 => from_letters(11, M11, &[]),
            Special::M11Minus => from_letters(10, M11_MINUS, &['j']),
            Special::M11Eq => from_letters(9, M11_EQ, &['i', 'j']),
            Special::K34Star => from_letters(8, K34_STAR, &[]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Aux {
    F0,
    F1,
    F2,
    F3,
}

impl Aux {
    pub const ALL: [Aux; 4] = [Aux::F0, Aux::F1, Aux::F2, Aux::F3];

    fn order_and_size(self) -> (usize, usize) {
        match self {
            Aux::F0 => (9, 15),
            Aux::F1 => (9, 16),
            Aux::F2 => (10, 17),
            Aux::F3 => (11, 18),
        }
    }

    pub fn graph(self) -> Graph {
        use fixtures::*;
        match self {
            Aux::F0 => f0(),
            Aux::F1 => from_letters(9, F1, &[]),
            Aux::F2 => from_letters(10, F2, &[]),
            Aux::F3 => from_letters(11, F3, &[]),
        }
    }
}

/// A named member of one of the graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Star(usize),
    Biclique2(usize),
    C5Attach(usize, usize),
    K33,
    K34,
    K33Sub(usize),
    K34Sub(usize),
    Special(Special),
    Aux(Aux),
}

impl FamilySpec {
    fn check(&self) -> Result<(), CatalogError> {
        let ok = match *self {
            FamilySpec::Star(n) | FamilySpec::Biclique2(n) => n >= 2,
            FamilySpec::K33Sub(t) | FamilySpec::K34Sub(t) => t >= 1,
            _ => true,
        };
        if !ok {
            return Err(CatalogError::ParamOutOfRange(self.to_string()));
        }
        let (order, _) = self.order_and_size_unchecked();
        if order > MAX_ORDER {
            return Err(CatalogError::ParamOutOfRange(self.to_string()));
        }
        Ok(())
    }

    fn order_and_size_unchecked(&self) -> (usize, usize) {
        match *self {
            FamilySpec::Star(n) => (n + 1, n),
            FamilySpec::Biclique2(n) => (n + 2, 2 * n),
            FamilySpec::C5Attach(m, n) => (5 + m + n, 5 + 2 * m + 2 * n),
            FamilySpec::K33 => (6, 9),
            FamilySpec::K34 => (7, 12),
            FamilySpec::K33Sub(t) => (6 + t, 8 + 2 * t),
            FamilySpec::K34Sub(t) => (7 + t, 11 + 2 * t),
            FamilySpec::Special(s) => (s.order(), s.size()),
            FamilySpec::Aux(a) => a.order_and_size(),
        }
    }

    pub fn order_and_size(&self) -> Result<(usize, usize), CatalogError> {
        self.check()?;
        Ok(self.order_and_size_unchecked())
    }

    pub fn construct(&self) -> Result<Graph, CatalogError> {
        self.check()?;
        let g = match *self {
            FamilySpec::Star(n) => Graph::complete_bipartite(1, n),
            FamilySpec::Biclique2(n) => Graph::complete_bipartite(2, n),
            FamilySpec::C5Attach(m, n) => {
                // v1..v5 are 0..4; attachments on {v1, v3} then {v1, v4}
                let cycle = (0..5).map(|i| (i, (i + 1) % 5));
                let on13 = (0..m).flat_map(|i| [(0, 5 + i), (2, 5 + i)]);
                let on14 = (0..n).flat_map(|i| [(0, 5 + m + i), (3, 5 + m + i)]);
                Graph::from_edge_list(5 + m + n, cycle.chain(on13).chain(on14))
            }
            FamilySpec::K33 => Graph::complete_bipartite(3, 3),
            FamilySpec::K34 => Graph::complete_bipartite(3, 4),
            FamilySpec::K33Sub(t) => subdivided_bundle(3, 3, t),
            FamilySpec::K34Sub(t) => subdivided_bundle(3, 4, t),
            FamilySpec::Special(s) => Ok(s.graph()),
            FamilySpec::Aux(a) => Ok(a.graph()),
        };
        Ok(g.expect("constructions stay within graph bounds"))
    }

    pub fn is_aux(&self) -> bool {
        matches!(self, FamilySpec::Aux(_))
    }
}

/// K_{a,b} with the edge (0, a) replaced by `t` subdivided parallel copies.
fn subdivided_bundle(a: usize, b: usize, t: usize) -> Result<Graph, crate::graph::GraphError> {
    let n = a + b + t;
    let base = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .filter(|&e| e != (0, a));
    let mids = (0..t).flat_map(|i| [(0, a + b + i), (a, a + b + i)]);
    Graph::from_edge_list(n, base.chain(mids))
}

pub fn construct(spec: &FamilySpec) -> Result<Graph, CatalogError> {
    spec.construct()
}

pub fn order_and_size(spec: &FamilySpec) -> Result<(usize, usize), CatalogError> {
    spec.order_and_size()
}

/// Every non-auxiliary spec with exactly `k` vertices, in matching
/// precedence: fixed graphs, stars, K2,n, K3,3/K3,4, K3,3(t), K3,4(t), then
/// C5(m, n) with `m <= n` by increasing `m`.
pub fn all_members_with_order(k: usize) -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = Special::ALL
        .iter()
        .filter(|s| s.order() == k)
        .map(|&s| FamilySpec::Special(s))
        .collect();
    if k >= 3 {
        out.push(FamilySpec::Star(k - 1));
    }
    if k >= 4 {
        out.push(FamilySpec::Biclique2(k - 2));
    }
    if k == 6 {
        out.push(FamilySpec::K33);
    }
    if k == 7 {
        out.push(FamilySpec::K34);
    }
    if k >= 7 {
        out.push(FamilySpec::K33Sub(k - 6));
    }
    if k >= 8 {
        out.push(FamilySpec::K34Sub(k - 7));
    }
    if k >= 5 {
        let extra = k - 5;
        for m in 0..=extra / 2 {
            out.push(FamilySpec::C5Attach(m, extra - m));
        }
    }
    out.retain(|s| s.check().is_ok());
    out
}

/// Names: `k1n:<n>`, `k2n:<n>`, `c5:<m>,<n>`, `k33`, `k34`, `k33s:<t>`,
/// `k34s:<t>`, `p10`, `w8`, `w8p`, `m11`, `m11m`, `m11e`, `k34star`,
/// `f0`..`f3`.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Star(n) => write!(f, "k1n:{n}"),
            FamilySpec::Biclique2(n) => write!(f, "k2n:{n}"),
            FamilySpec::C5Attach(m, n) => write!(f, "c5:{m},{n}"),
            FamilySpec::K33 => f.write_str("k33"),
            FamilySpec::K34 => f.write_str("k34"),
            FamilySpec::K33Sub(t) => write!(f, "k33s:{t}"),
            FamilySpec::K34Sub(t) => write!(f, "k34s:{t}"),
            FamilySpec::Special(s) => f.write_str(match s {
                Special::P10 => "p10",
                Special::W8 => "w8",
                Special::W8Plus => "w8p",
                Special::M11 => "m11",
                Special::M11Minus => "m11m",
                Special::M11Eq => "m11e",
                Special::K34Star => "k34star",
            }),
            FamilySpec::Aux(a) => write!(f, "f{}", a as u8),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CatalogError::UnknownName(s.to_string());
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| unknown());
        let spec = match s.trim().to_ascii_lowercase().as_str() {
            "k33" => FamilySpec::K33,
            "k34" => FamilySpec::K34,
            "p10" => FamilySpec::Special(Special::P10),
            "w8" => FamilySpec::Special(Special::W8),
            "w8p" => FamilySpec::Special(Special::W8Plus),
            "m11" => FamilySpec::Special(Special::M11),
            "m11m" => FamilySpec::Special(Special::M11Minus),
            "m11e" => FamilySpec::Special(Special::M11Eq),
            "k34star" => FamilySpec::Special(Special::K34Star),
            "f0" => FamilySpec::Aux(Aux::F0),
            "f1" => FamilySpec::Aux(Aux::F1),
            "f2" => FamilySpec::Aux(Aux::F2),
            "f3" => FamilySpec::Aux(Aux::F3),
            other => {
                let (head, arg) = other.split_once(':').ok_or_else(unknown)?;
                match head {
                    "k1n" => FamilySpec::Star(num(arg)?),
                    "k2n" => FamilySpec::Biclique2(num(arg)?),
                    "k33s" => FamilySpec::K33Sub(num(arg)?),
                    "k34s" => FamilySpec::K34Sub(num(arg)?),
                    "c5" => {
                        let (m, n) = arg.split_once(',').ok_or_else(unknown)?;
                        FamilySpec::C5Attach(num(m)?, num(n)?)
                    }
                    _ => return Err(unknown()),
                }
            }
        };
        spec.check()?;
        Ok(spec)
    }
}
