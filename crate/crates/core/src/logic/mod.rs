//! Propositional formulas over named atoms, truth-table equivalence under
//! an optional constraint, and the composition templates for generating
//! and inverse problems.
//!
//! Text syntax: `!` not, `&` and, `|` or, `^` xor, `->` implies, `<->` iff.
//! Precedence from tightest: `!`, `&`, `|`/`^`, `->`, `<->`; all binary
//! connectives associate to the left.

pub mod parser;
pub mod scheme;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub use parser::parse_formula;
pub use scheme::{compose_scheme, verify_composition_equivalences, DisjunctionKind, EquivalenceReport, ImplicationScheme};

/// Largest number of distinct atoms a truth table may range over.
pub const ATOM_BUDGET: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at token {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("{count} atoms exceed the truth-table budget of {budget}")]
    AtomBudget { count: usize, budget: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Xor(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

pub type Assignment = BTreeMap<String, bool>;

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn xor(l: Formula, r: Formula) -> Formula {
        Formula::Xor(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    /// Unassigned atoms evaluate to false.
    pub fn eval(&self, env: &Assignment) -> bool {
        match self {
            Formula::Atom(a) => env.get(a).copied().unwrap_or(false),
            Formula::Not(f) => !f.eval(env),
            Formula::And(l, r) => l.eval(env) && r.eval(env),
            Formula::Or(l, r) => l.eval(env) || r.eval(env),
            Formula::Xor(l, r) => l.eval(env) != r.eval(env),
            Formula::Implies(l, r) => !l.eval(env) || r.eval(env),
            Formula::Iff(l, r) => l.eval(env) == r.eval(env),
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Xor(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) | Formula::Xor(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) => 5,
            Formula::Atom(_) => 6,
        }
    }

    fn binary(&self) -> Option<(&Formula, &'static str, &Formula)> {
        match self {
            Formula::And(l, r) => Some((l, "&", r)),
            Formula::Or(l, r) => Some((l, "|", r)),
            Formula::Xor(l, r) => Some((l, "^", r)),
            Formula::Implies(l, r) => Some((l, "->", r)),
            Formula::Iff(l, r) => Some((l, "<->", r)),
            _ => None,
        }
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, child: &Formula, parens: bool| {
            if parens {
                write!(f, "({child})")
            } else {
                write!(f, "{child}")
            }
        };
        match self {
            Formula::Atom(a) => f.write_str(a),
            Formula::Not(inner) => {
                f.write_str("!")?;
                wrap(f, inner, inner.precedence() < self.precedence())
            }
            _ => {
                let (l, op, r) = self.binary().expect("binary connective");
                let p = self.precedence();
                wrap(f, l, l.precedence() < p)?;
                write!(f, " {op} ")?;
                wrap(f, r, r.precedence() <= p)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Assignments enumerated.
    pub rows: usize,
    /// Assignments satisfying the constraint.
    pub satisfying: usize,
    /// First assignment (in enumeration order) where the formulas differ.
    pub witness: Option<Assignment>,
}

/// Truth-table equivalence over the atoms of the three formulas.
pub fn equivalent(f1: &Formula, f2: &Formula, constraint: Option<&Formula>) -> Result<Equivalence, LogicError> {
    equivalent_in(f1, f2, constraint, &BTreeSet::new())
}

/// As [`equivalent`], with the table ranging over `universe` as well.
pub fn equivalent_in(
    f1: &Formula,
    f2: &Formula,
    constraint: Option<&Formula>,
    universe: &BTreeSet<String>,
) -> Result<Equivalence, LogicError> {
    let mut atoms = universe.clone();
    atoms.extend(f1.atoms());
    atoms.extend(f2.atoms());
    if let Some(c) = constraint {
        atoms.extend(c.atoms());
    }
    if atoms.len() > ATOM_BUDGET {
        return Err(LogicError::AtomBudget {
            count: atoms.len(),
            budget: ATOM_BUDGET,
        });
    }
    let atoms: Vec<String> = atoms.into_iter().collect();
    let n = atoms.len();
    let rows = 1usize << n;
    let mut satisfying = 0;
    let mut witness = None;
    let mut env: Assignment = atoms.iter().map(|a| (a.clone(), false)).collect();
    for row in 0..rows {
        // First atom is the most significant bit, so rows run from all-false to all-true.
        for (k, a) in atoms.iter().enumerate() {
            *env.get_mut(a).expect("atom present") = row >> (n - 1 - k) & 1 == 1;
        }
        if constraint.is_some_and(|c| !c.eval(&env)) {
            continue;
        }
        satisfying += 1;
        if witness.is_none() && f1.eval(&env) != f2.eval(&env) {
            witness = Some(env.clone());
        }
    }
    Ok(Equivalence {
        equivalent: witness.is_none(),
        rows,
        satisfying,
        witness,
    })
}

pub fn format_assignment(a: &Assignment) -> String {
    a.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}
