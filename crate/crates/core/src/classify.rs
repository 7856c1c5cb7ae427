//! Recognizer for triangle-free projective-planar graphs of diameter two,
//! and exact domination numbers.
//!
//! A connected triangle-free graph of diameter exactly 2 is either
//! isomorphic to a catalog member of its order, or contains one of the three
//! obstruction minors. [`classify`] returns whichever applies together with
//! a checkable witness: the isomorphism, or the minor model.

use std::fmt;

use thiserror::Error;

use crate::catalog::{all_members_with_order, FamilySpec};
use crate::graph::{bit, bits, Diameter, Graph};
use crate::iso::are_isomorphic;
use crate::minor::{obstruction_certificate, MinorError, MinorModel, Obstruction, SearchBounds};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("no family matched and order {order} exceeds the minor-search bound {bound}")]
    SizeBound { order: usize, bound: usize },
    #[error("no family matched and no obstruction minor was found")]
    Unresolved,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {order} exceeds the domination bound {bound}")]
    DominationBound { order: usize, bound: usize },
}

impl From<MinorError> for ClassifyError {
    fn from(e: MinorError) -> Self {
        match e {
            MinorError::SizeBound { host, max_host, .. } => ClassifyError::SizeBound {
                order: host,
                bound: max_host,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScopeReason {
    Disconnected,
    HasTriangle,
    DiameterNot2,
}

impl fmt::Display for ScopeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScopeReason::Disconnected => "disconnected",
            ScopeReason::HasTriangle => "has_triangle",
            ScopeReason::DiameterNot2 => "diameter!=2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    NotSimpleDiameter2(ScopeReason),
    /// `iso_witness[v]` is the image of input vertex `v` in `spec.construct()`.
    Member {
        spec: FamilySpec,
        iso_witness: Vec<usize>,
    },
    NonMember {
        obstruction: Obstruction,
        model: MinorModel,
    },
}

impl Classification {
    pub fn is_member(&self) -> bool {
        matches!(self, Classification::Member { .. })
    }

    /// One-line verdict: `member <family>`, `nonmember <obstruction> <model>`
    /// or `out-of-scope <reason>`.
    pub fn verdict_line(&self) -> String {
        match self {
            Classification::NotSimpleDiameter2(r) => format!("out-of-scope {r}"),
            Classification::Member { spec, .. } => format!("member {spec}"),
            Classification::NonMember { obstruction, model } => {
                format!("nonmember {obstruction} {}", model.to_inline())
            }
        }
    }
}

pub fn scope_check(g: &Graph) -> Option<ScopeReason> {
    if !g.is_connected() {
        Some(ScopeReason::Disconnected)
    } else if !g.is_triangle_free() {
        Some(ScopeReason::HasTriangle)
    } else if g.diameter() != Diameter::Finite(2) {
        Some(ScopeReason::DiameterNot2)
    } else {
        None
    }
}

/// First catalog member of the same order isomorphic to `g`.
pub fn match_family(g: &Graph) -> Option<(FamilySpec, Vec<usize>)> {
    let degrees = g.degree_sequence();
    all_members_with_order(g.order()).into_iter().find_map(|spec| {
        let (_, size) = spec.order_and_size().ok()?;
        if size != g.size() {
            return None;
        }
        let h = spec.construct().ok()?;
        if h.degree_sequence() != degrees {
            return None;
        }
        are_isomorphic(g, &h).map(|w| (spec, w))
    })
}

pub fn classify(g: &Graph) -> Result<Classification, ClassifyError> {
    if let Some(reason) = scope_check(g) {
        return Ok(Classification::NotSimpleDiameter2(reason));
    }
    if let Some((spec, iso_witness)) = match_family(g) {
        return Ok(Classification::Member { spec, iso_witness });
    }
    let bound = SearchBounds::default().max_host;
    if g.order() > bound {
        return Err(ClassifyError::SizeBound {
            order: g.order(),
            bound,
        });
    }
    match obstruction_certificate(g)? {
        Some((obstruction, model)) => Ok(Classification::NonMember { obstruction, model }),
        None => Err(ClassifyError::Unresolved),
    }
}

pub fn is_pp2_member(g: &Graph) -> Result<bool, ClassifyError> {
    Ok(classify(g)?.is_member())
}

/// Largest order accepted by [`domination_number`].
pub const MAX_DOMINATION_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub number: usize,
    /// Lexicographically least minimum dominating set, ascending.
    pub witness: Vec<usize>,
}

/// Exact domination number by trying subsets of size 1, 2, 3, ... in
/// lexicographic order.
pub fn domination_number(g: &Graph) -> Result<DominationResult, ClassifyError> {
    if g.order() > MAX_DOMINATION_ORDER {
        return Err(ClassifyError::DominationBound {
            order: g.order(),
            bound: MAX_DOMINATION_ORDER,
        });
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    let n = g.order();
    let closed: Vec<u64> = (0..n).map(|v| g.neighbors(v) | bit(v)).collect();
    let all = g.vertex_mask();
    for size in 1..=n {
        let mut chosen = Vec::with_capacity(size);
        if dominating_combination(&closed, all, size, 0, 0, &mut chosen) {
            return Ok(DominationResult {
                number: size,
                witness: chosen,
            });
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn dominating_combination(
    closed: &[u64],
    all: u64,
    size: usize,
    start: usize,
    covered: u64,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == size {
        return covered == all;
    }
    let remaining = size - chosen.len();
    for v in start..=closed.len() - remaining {
        chosen.push(v);
        if dominating_combination(closed, all, size, v + 1, covered | closed[v], chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Whether `set` dominates `g`.
pub fn dominates(g: &Graph, set: &[usize]) -> bool {
    let covered = set.iter().fold(0u64, |acc, &v| acc | g.neighbors(v) | bit(v));
    bits(g.vertex_mask()).all(|v| covered & bit(v) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Special;
    use crate::minor::verify_model;

    fn spec(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().construct().unwrap()
    }

    #[test]
    fn classify_examples() {
        match classify(&Graph::cycle(5).unwrap()).unwrap() {
            Classification::Member { spec, .. } => assert_eq!(spec, FamilySpec::C5Attach(0, 0)),
            other => panic!("{other:?}"),
        }
        let k44 = Graph::complete_bipartite(4, 4).unwrap();
        match classify(&k44).unwrap() {
            Classification::NonMember { obstruction, model } => {
                assert_eq!(obstruction, Obstruction::K44Minus);
                assert!(verify_model(&model, &obstruction.pattern(), &k44));
            }
            other => panic!("{other:?}"),
        }
        match classify(&spec("m11")).unwrap() {
            Classification::Member { spec, .. } => {
                assert_eq!(spec, FamilySpec::Special(Special::M11))
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            classify(&Graph::path(4).unwrap()).unwrap(),
            Classification::NotSimpleDiameter2(ScopeReason::DiameterNot2)
        );
    }

    #[test]
    fn out_of_scope_reasons() {
        let two = Graph::empty(2).unwrap();
        assert_eq!(
            classify(&two).unwrap(),
            Classification::NotSimpleDiameter2(ScopeReason::Disconnected)
        );
        assert_eq!(
            classify(&Graph::complete(3).unwrap()).unwrap(),
            Classification::NotSimpleDiameter2(ScopeReason::HasTriangle)
        );
        for g in [Graph::empty(1).unwrap(), Graph::complete(2).unwrap()] {
            assert_eq!(
                classify(&g).unwrap(),
                Classification::NotSimpleDiameter2(ScopeReason::DiameterNot2)
            );
        }
    }

    #[test]
    fn path_on_three_is_a_star() {
        match classify(&Graph::path(3).unwrap()).unwrap() {
            Classification::Member { spec, .. } => assert_eq!(spec, FamilySpec::Star(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn membership_examples() {
        assert!(is_pp2_member(&spec("w8p")).unwrap());
        assert!(!is_pp2_member(&Graph::complete_bipartite(3, 5).unwrap()).unwrap());
        assert!(is_pp2_member(&Graph::complete_bipartite(2, 7).unwrap()).unwrap());
    }

    #[test]
    fn member_witness_is_an_isomorphism() {
        let g = spec("k34s:2").permuted(&[8, 7, 6, 5, 4, 3, 2, 1, 0]);
        match classify(&g).unwrap() {
            Classification::Member { spec, iso_witness } => {
                assert_eq!(spec, FamilySpec::K34Sub(2));
                assert!(crate::iso::is_isomorphism(&g, &spec.construct().unwrap(), &iso_witness));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn oversized_nonmember_is_a_size_error() {
        // K5,20 is triangle-free with diameter 2 and matches no family
        let g = Graph::complete_bipartite(5, 20).unwrap();
        assert!(matches!(classify(&g), Err(ClassifyError::SizeBound { .. })));
        // but large members are still recognized
        assert!(is_pp2_member(&Graph::complete_bipartite(2, 40).unwrap()).unwrap());
    }

    #[test]
    fn domination_examples() {
        let r = domination_number(&Graph::complete_bipartite(1, 5).unwrap()).unwrap();
        assert_eq!((r.number, r.witness), (1, vec![0]));
        let r = domination_number(&Graph::complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!((r.number, r.witness), (2, vec![0, 1]));
        let r = domination_number(&spec("p10")).unwrap();
        assert_eq!(r.number, 3);
        assert!(dominates(&spec("p10"), &r.witness));
        assert_eq!(
            domination_number(&Graph::empty(3).unwrap()),
            Err(ClassifyError::Disconnected)
        );
        assert!(matches!(
            domination_number(&Graph::path(33).unwrap()),
            Err(ClassifyError::DominationBound { .. })
        ));
    }

    /// No dominating set of size `number - 1` exists (subset brute force).
    #[test]
    fn domination_is_minimum() {
        for g in [spec("w8"), spec("k34star"), spec("c5:1,2"), Graph::path(7).unwrap()] {
            let r = domination_number(&g).unwrap();
            assert!(dominates(&g, &r.witness));
            let n = g.order();
            for mask in 0u32..1 << n {
                if mask.count_ones() as usize == r.number - 1 {
                    let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    assert!(!dominates(&g, &set));
                }
            }
        }
    }
}
