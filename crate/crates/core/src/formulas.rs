//! Closed-form values and bounds for the co-even domination number of the
//! binary operations. Each evaluator checks the hypotheses of its claim and
//! returns [`Claim::NotApplicable`] when they fail.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::solver;

/// Which case of which claim produced a value. The string forms are stable
/// and appear in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    JoinIExact,
    JoinIOtherwise,
    JoinIiExact,
    JoinIiOtherwise,
    JoinIiiExact,
    JoinIiiOtherwise,
    CoronaK1,
    CoronaI,
    CoronaIiEven,
    CoronaIiOdd,
    NcoronaRange,
    HajosUpper,
    HajosConjLower,
    RegularOdd,
    RegularEven,
}

impl Branch {
    pub const ALL: [Branch; 15] = [
        Branch::JoinIExact,
        Branch::JoinIOtherwise,
        Branch::JoinIiExact,
        Branch::JoinIiOtherwise,
        Branch::JoinIiiExact,
        Branch::JoinIiiOtherwise,
        Branch::CoronaK1,
        Branch::CoronaI,
        Branch::CoronaIiEven,
        Branch::CoronaIiOdd,
        Branch::NcoronaRange,
        Branch::HajosUpper,
        Branch::HajosConjLower,
        Branch::RegularOdd,
        Branch::RegularEven,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Branch::JoinIExact => "join.i.exact",
            Branch::JoinIOtherwise => "join.i.otherwise",
            Branch::JoinIiExact => "join.ii.exact",
            Branch::JoinIiOtherwise => "join.ii.otherwise",
            Branch::JoinIiiExact => "join.iii.exact",
            Branch::JoinIiiOtherwise => "join.iii.otherwise",
            Branch::CoronaK1 => "corona.k1",
            Branch::CoronaI => "corona.i",
            Branch::CoronaIiEven => "corona.ii.even",
            Branch::CoronaIiOdd => "corona.ii.odd",
            Branch::NcoronaRange => "ncorona.range",
            Branch::HajosUpper => "hajos.upper",
            Branch::HajosConjLower => "hajos.conj_lower",
            Branch::RegularOdd => "regular.odd",
            Branch::RegularEven => "regular.even",
        }
    }

    /// Bounds with a complete proof. A violation of one of these means the
    /// software is wrong, not the claim.
    pub fn is_proven_bound(self) -> bool {
        matches!(self, Branch::NcoronaRange | Branch::HajosUpper)
    }

    pub fn is_conjectural(self) -> bool {
        self == Branch::HajosConjLower
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Exact(usize),
    UpperBound(usize),
    LowerBound(usize),
    Range { lo: usize, hi: usize },
    NotApplicable(String),
}

impl Claim {
    /// Does `value` satisfy the claim? `None` when nothing is claimed.
    pub fn admits(&self, value: usize) -> Option<bool> {
        match *self {
            Claim::Exact(v) => Some(value == v),
            Claim::UpperBound(hi) => Some(value <= hi),
            Claim::LowerBound(lo) => Some(value >= lo),
            Claim::Range { lo, hi } => Some(lo <= value && value <= hi),
            Claim::NotApplicable(_) => None,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Exact(v) => write!(f, "= {v}"),
            Claim::UpperBound(v) => write!(f, "<= {v}"),
            Claim::LowerBound(v) => write!(f, ">= {v}"),
            Claim::Range { lo, hi } => write!(f, "in [{lo}, {hi}]"),
            Claim::NotApplicable(why) => write!(f, "n/a ({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalResult {
    pub claim: Claim,
    pub branch: Option<Branch>,
}

impl EvalResult {
    fn new(claim: Claim, branch: Branch) -> Self {
        if let Claim::Range { lo, hi } = claim {
            debug_assert!(lo <= hi);
        }
        EvalResult {
            claim,
            branch: Some(branch),
        }
    }

    fn not_applicable(reason: impl Into<String>) -> Self {
        EvalResult {
            claim: Claim::NotApplicable(reason.into()),
            branch: None,
        }
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self.claim, Claim::NotApplicable(_))
    }

    pub fn conjectural(&self) -> bool {
        self.branch.is_some_and(Branch::is_conjectural)
    }
}

impl Serialize for EvalResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(None)?;
        match &self.claim {
            Claim::Exact(v) => {
                m.serialize_entry("kind", "exact")?;
                m.serialize_entry("value", v)?;
            }
            Claim::UpperBound(v) => {
                m.serialize_entry("kind", "upper_bound")?;
                m.serialize_entry("value", v)?;
            }
            Claim::LowerBound(v) => {
                m.serialize_entry("kind", "lower_bound")?;
                m.serialize_entry("value", v)?;
            }
            Claim::Range { lo, hi } => {
                m.serialize_entry("kind", "range")?;
                m.serialize_entry("lo", lo)?;
                m.serialize_entry("hi", hi)?;
            }
            Claim::NotApplicable(note) => {
                m.serialize_entry("kind", "not_applicable")?;
                m.serialize_entry("note", note)?;
            }
        }
        m.serialize_entry("branch", &self.branch)?;
        if self.conjectural() {
            m.serialize_entry("conjectural", &true)?;
        }
        m.end()
    }
}

/// Odd/even vertex counts of a graph.
#[derive(Debug, Clone, Copy)]
struct Parity {
    order: usize,
    odd: usize,
    even: usize,
}

impl Parity {
    fn of(g: &Graph) -> Self {
        let p = g.parity_profile();
        Parity {
            order: g.order(),
            odd: p.odd.len(),
            even: p.even.len(),
        }
    }
}

/// `r`-regular graphs: `n` when `r` is odd, `γ(G)` when `r` is even.
pub fn coeven_regular(g: &Graph) -> EvalResult {
    match g.regularity() {
        Some(r) if r % 2 == 1 => EvalResult::new(Claim::Exact(g.order()), Branch::RegularOdd),
        Some(_) => EvalResult::new(
            Claim::Exact(solver::domination_number(g).value),
            Branch::RegularEven,
        ),
        None => EvalResult::not_applicable("graph is not regular"),
    }
}

/// `G + H` for connected `G`, `H`, split by the parities of the two orders.
/// Operands of (odd, even) order are swapped so the even-order graph plays `G`.
pub fn coeven_join(g: &Graph, h: &Graph) -> EvalResult {
    if !g.is_connected() || !h.is_connected() {
        return EvalResult::not_applicable("join claim needs two connected graphs");
    }
    let (mut a, mut b) = (Parity::of(g), Parity::of(h));
    if a.order % 2 == 1 && b.order % 2 == 0 {
        std::mem::swap(&mut a, &mut b);
    }
    let (exact, otherwise, lhs, rhs) = match (a.order % 2, b.order % 2) {
        (0, 0) => (Branch::JoinIExact, Branch::JoinIOtherwise, a.odd, b.odd),
        (1, 1) => (Branch::JoinIiExact, Branch::JoinIiOtherwise, a.even, b.even),
        _ => (Branch::JoinIiiExact, Branch::JoinIiiOtherwise, a.even, b.odd),
    };
    if lhs > 0 && rhs > 0 {
        // The two vertex sets are disjoint, so the union is a sum.
        EvalResult::new(Claim::Exact(lhs + rhs), exact)
    } else {
        EvalResult::new(Claim::UpperBound(2), otherwise)
    }
}

/// `G ∘ H` for connected `G` (and connected `H` unless `H = K1`).
pub fn coeven_corona(g: &Graph, h: &Graph) -> EvalResult {
    if !g.is_connected() {
        return EvalResult::not_applicable("corona claim needs a connected first operand");
    }
    let pg = Parity::of(g);
    if h.order() == 1 {
        return EvalResult::new(Claim::Exact(pg.order + pg.even), Branch::CoronaK1);
    }
    if !h.is_connected() {
        return EvalResult::not_applicable("corona claim needs a connected second operand");
    }
    let ph = Parity::of(h);
    if ph.even == 0 {
        return EvalResult::new(Claim::Exact(pg.order), Branch::CoronaI);
    }
    if ph.order % 2 == 0 {
        EvalResult::new(
            Claim::Exact(pg.order * ph.even + pg.odd),
            Branch::CoronaIiEven,
        )
    } else {
        EvalResult::new(
            Claim::Exact(pg.order * ph.even + pg.even),
            Branch::CoronaIiOdd,
        )
    }
}

/// `G ⋆ H`: `lo = |O(G)||E(H)| + |E(G)||O(H)|`, `hi = |V(G)| + lo`.
/// Requires connected operands and `|V(G)| >= 2`.
pub fn coeven_ncorona_bounds(g: &Graph, h: &Graph) -> EvalResult {
    if !g.is_connected() || !h.is_connected() {
        return EvalResult::not_applicable("neighbourhood corona claim needs two connected graphs");
    }
    if g.order() < 2 {
        return EvalResult::not_applicable(
            "first operand is K1: copy vertices have no neighbours to be joined to",
        );
    }
    let (pg, ph) = (Parity::of(g), Parity::of(h));
    let lo = pg.odd * ph.even + pg.even * ph.odd;
    EvalResult::new(Claim::Range { lo, hi: pg.order + lo }, Branch::NcoronaRange)
}

/// Hajós sum upper bound from the factors' co-even domination numbers.
pub fn coeven_hajos_upper(gamma1: usize, gamma2: usize) -> EvalResult {
    EvalResult::new(Claim::UpperBound(gamma1 + gamma2 + 1), Branch::HajosUpper)
}

/// Conjectured Hajós sum lower bound `γ1 + γ2 - 2`, floored at 0.
pub fn coeven_hajos_conjectured_lower(gamma1: usize, gamma2: usize) -> EvalResult {
    EvalResult::new(
        Claim::LowerBound((gamma1 + gamma2).saturating_sub(2)),
        Branch::HajosConjLower,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(f).unwrap()
    }

    #[test]
    fn regular() {
        assert_eq!(coeven_regular(&fam(Family::Complete(4))).claim, Claim::Exact(4));
        let c6 = coeven_regular(&fam(Family::Cycle(6)));
        assert_eq!(c6.claim, Claim::Exact(2));
        assert_eq!(c6.branch, Some(Branch::RegularEven));
        assert!(!coeven_regular(&fam(Family::Path(3))).is_applicable());
    }

    #[test]
    fn join_cases() {
        let p4 = fam(Family::Path(4));
        let r = coeven_join(&p4, &p4);
        assert_eq!((r.claim, r.branch), (Claim::Exact(4), Some(Branch::JoinIExact)));

        let p3 = fam(Family::Path(3));
        let r = coeven_join(&p3, &p3);
        assert_eq!((r.claim, r.branch), (Claim::Exact(2), Some(Branch::JoinIiExact)));

        let r = coeven_join(&fam(Family::Cycle(4)), &fam(Family::Cycle(6)));
        assert_eq!((r.claim, r.branch), (Claim::UpperBound(2), Some(Branch::JoinIOtherwise)));

        // (even, odd) and (odd, even) agree.
        let a = coeven_join(&fam(Family::Cycle(4)), &fam(Family::Path(3)));
        let b = coeven_join(&fam(Family::Path(3)), &fam(Family::Cycle(4)));
        assert_eq!(a, b);
        assert_eq!(a.branch, Some(Branch::JoinIiiExact));
        assert_eq!(a.claim, Claim::Exact(4 + 2));
    }

    #[test]
    fn join_needs_connected_operands() {
        let r = coeven_join(&fam(Family::Empty(2)), &fam(Family::Path(2)));
        assert!(!r.is_applicable());
        assert_eq!(r.branch, None);
    }

    #[test]
    fn corona_cases() {
        let r = coeven_corona(&fam(Family::Path(5)), &fam(Family::Complete(1)));
        assert_eq!((r.claim, r.branch), (Claim::Exact(8), Some(Branch::CoronaK1)));
        let r = coeven_corona(&fam(Family::Cycle(4)), &fam(Family::Complete(4)));
        assert_eq!((r.claim, r.branch), (Claim::Exact(4), Some(Branch::CoronaI)));
        let r = coeven_corona(&fam(Family::Path(3)), &fam(Family::Path(3)));
        assert_eq!((r.claim, r.branch), (Claim::Exact(4), Some(Branch::CoronaIiOdd)));
        let r = coeven_corona(&fam(Family::Path(3)), &fam(Family::Path(4)));
        assert_eq!((r.claim, r.branch), (Claim::Exact(3 * 2 + 2), Some(Branch::CoronaIiEven)));
        assert!(!coeven_corona(&fam(Family::Empty(2)), &fam(Family::Complete(1))).is_applicable());
    }

    #[test]
    fn ncorona_bounds() {
        let k4 = fam(Family::Complete(4));
        assert_eq!(coeven_ncorona_bounds(&fam(Family::Path(2)), &k4).claim, Claim::Range { lo: 0, hi: 2 });
        assert_eq!(coeven_ncorona_bounds(&fam(Family::Cycle(3)), &k4).claim, Claim::Range { lo: 12, hi: 15 });
        assert_eq!(
            coeven_ncorona_bounds(&fam(Family::Path(4)), &fam(Family::Path(3))).claim,
            Claim::Range { lo: 6, hi: 10 }
        );
        assert!(!coeven_ncorona_bounds(&fam(Family::Complete(1)), &k4).is_applicable());
    }

    #[test]
    fn hajos_bounds() {
        assert_eq!(coeven_hajos_upper(4, 2).claim, Claim::UpperBound(7));
        assert_eq!(coeven_hajos_conjectured_lower(4, 4).claim, Claim::LowerBound(6));
        assert_eq!(coeven_hajos_conjectured_lower(1, 1).claim, Claim::LowerBound(0));
        assert_eq!(coeven_hajos_conjectured_lower(3, 3).claim, Claim::LowerBound(4));
        assert!(coeven_hajos_conjectured_lower(3, 3).conjectural());
    }

    #[test]
    fn admits() {
        assert_eq!(Claim::Range { lo: 2, hi: 4 }.admits(4), Some(true));
        assert_eq!(Claim::UpperBound(2).admits(3), Some(false));
        assert_eq!(Claim::NotApplicable(String::new()).admits(0), None);
    }

    #[test]
    fn branch_ids_are_unique() {
        let mut ids: Vec<_> = Branch::ALL.iter().map(|b| b.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), Branch::ALL.len());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(coeven_ncorona_bounds(&fam(Family::Cycle(3)), &fam(Family::Complete(4)))).unwrap();
        assert_eq!(v, serde_json::json!({"kind": "range", "lo": 12, "hi": 15, "branch": "ncorona.range"}));
        let v = serde_json::to_value(coeven_hajos_conjectured_lower(2, 2)).unwrap();
        assert_eq!(v["conjectural"], true);
    }
}
