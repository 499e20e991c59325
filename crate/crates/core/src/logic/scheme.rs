//! Composition of a basic problem from two generating problems.
//!
//! With premise `t`, conditions `p`, `q` and conclusion `r`, the generating
//! problems `t & p -> r` and `t & q -> r` combine into `t & (p | q) -> r`
//! (or `t & (p ^ q) -> r` when `p` and `q` are mutually exclusive), and the
//! basic problem is the inverse `t & r -> p | q` (resp. `p ^ q`).

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use super::{equivalent_in, format_assignment, parse_formula, Formula, LogicError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DisjunctionKind {
    Inclusive,
    Exclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("atoms t, p, q, r must be distinct")]
    DuplicateAtoms,
    #[error("combined formula is not equivalent to the generating pair: {0}")]
    Verification(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationScheme {
    pub t: String,
    pub p: String,
    pub q: String,
    pub r: String,
    pub kind: DisjunctionKind,
    pub generating_1: Formula,
    pub generating_2: Formula,
    pub combined: Formula,
    pub inverse: Formula,
}

impl ImplicationScheme {
    /// `!(p & q)`, under which the exclusive scheme is verified.
    pub fn exclusivity(&self) -> Formula {
        Formula::not(Formula::and(Formula::atom(&self.p), Formula::atom(&self.q)))
    }
}

pub fn compose_scheme(t: &str, p: &str, q: &str, r: &str, kind: DisjunctionKind) -> Result<ImplicationScheme, SchemeError> {
    let names: BTreeSet<&str> = [t, p, q, r].into_iter().collect();
    if names.len() != 4 {
        return Err(SchemeError::DuplicateAtoms);
    }
    let at = Formula::atom;
    let disjunction = match kind {
        DisjunctionKind::Inclusive => Formula::or(at(p), at(q)),
        DisjunctionKind::Exclusive => Formula::xor(at(p), at(q)),
    };
    let scheme = ImplicationScheme {
        t: t.into(),
        p: p.into(),
        q: q.into(),
        r: r.into(),
        kind,
        generating_1: Formula::implies(Formula::and(at(t), at(p)), at(r)),
        generating_2: Formula::implies(Formula::and(at(t), at(q)), at(r)),
        combined: Formula::implies(Formula::and(at(t), disjunction.clone()), at(r)),
        inverse: Formula::implies(Formula::and(at(t), at(r)), disjunction),
    };
    let pair = Formula::and(scheme.generating_1.clone(), scheme.generating_2.clone());
    let constraint = (kind == DisjunctionKind::Exclusive).then(|| scheme.exclusivity());
    let e = equivalent_in(&pair, &scheme.combined, constraint.as_ref(), &BTreeSet::new())?;
    if let Some(w) = e.witness {
        return Err(SchemeError::Verification(format_assignment(&w)));
    }
    Ok(scheme)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub constraint: Option<String>,
    pub pass: bool,
    pub rows: usize,
    pub satisfying: usize,
    pub witness: Option<String>,
}

/// Checks `lhs <-> rhs` over all assignments to `t, p, q, r` that satisfy
/// `constraint`.
pub fn check_equivalence(
    name: &str,
    lhs: &str,
    rhs: &str,
    constraint: Option<&str>,
) -> Result<EquivalenceReport, LogicError> {
    let universe: BTreeSet<String> = ["t", "p", "q", "r"].map(String::from).into();
    let (l, r) = (parse_formula(lhs)?, parse_formula(rhs)?);
    let c = constraint.map(parse_formula).transpose()?;
    let e = equivalent_in(&l, &r, c.as_ref(), &universe)?;
    Ok(EquivalenceReport {
        name: name.into(),
        lhs: l.to_string(),
        rhs: r.to_string(),
        constraint: c.map(|c| c.to_string()),
        pass: e.equivalent,
        rows: e.rows,
        satisfying: e.satisfying,
        witness: e.witness.as_ref().map(format_assignment),
    })
}

const EXCLUSIVE: &str = "!(p & q)";

/// `(name, lhs, rhs, constraint)` for the six composition identities.
pub const EQUIVALENCES: [(&str, &str, &str, Option<&str>); 6] = [
    ("inclusive composition", "(t & p -> r) & (t & q -> r)", "t & (p | q) -> r", None),
    ("exclusive composition", "(t & (p & !q) -> r) & (t & (!p & q) -> r)", "t & (p ^ q) -> r", None),
    ("exclusive reduction of p", "p & !q", "p", Some(EXCLUSIVE)),
    ("exclusive reduction of q", "!p & q", "q", Some(EXCLUSIVE)),
    ("negated xor expansion", "!(p ^ q)", "(p | !q) & (!p | q)", Some(EXCLUSIVE)),
    ("negated xor under exclusivity", "(p | !q) & (!p | q)", "!p & !q", Some(EXCLUSIVE)),
];

pub fn verify_composition_equivalences() -> Vec<EquivalenceReport> {
    EQUIVALENCES
        .iter()
        .map(|(name, l, r, c)| check_equivalence(name, l, r, *c).expect("built-in formulas parse"))
        .collect()
}
