//! Hilbert-style proof checking for RI-logics.
//!
//! An RI-logic contains every substitution instance of a propositional
//! tautology and every instance of b0, b1 and b2, and is closed under modus
//! ponens, uniform substitution and the rule bN:
//! from `phi -> psi` infer `(o phi & phi) -> (o psi & psi)`.
//! Extensions add further schemata, typically circle translations of
//! box-language axioms.
//!
//! Proofs are checked, never searched for.

mod file;
pub mod golden;
mod schema;
mod taut;

use std::fmt;

use thiserror::Error;

use crate::formula::{circ_translate, BoxFormula, Formula, RIFormula, Substitution};

pub use file::{ProofFile, ProofFileError};
pub use schema::{match_schema, Schema};
pub use taut::{atoms, taut_check, taut_check_with_limit, DEFAULT_ATOM_LIMIT};

/// Why a proof line was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("proof has no lines")]
    EmptyProof,
    #[error("not a tautology instance")]
    NotATautology,
    #[error("tautology check needs {atoms} atoms, limit is {limit}")]
    AtomLimit { atoms: usize, limit: usize },
    #[error("unknown axiom schema `{0}`")]
    UnknownSchema(String),
    #[error("not an instance of {0}")]
    NotAnInstance(String),
    #[error("no extra axiom number {0}")]
    NoSuchExtra(usize),
    #[error("cites line {0}, which is not an earlier line")]
    BadReference(usize),
    #[error("MP shape: line {0} is not an implication")]
    MpShape(usize),
    #[error("MP: line {minor} is not the antecedent of line {major}")]
    MpAntecedent { minor: usize, major: usize },
    #[error("MP: formula is not the consequent of line {0}")]
    MpConclusion(usize),
    #[error("US: formula is not the substitution instance of line {0}")]
    UsMismatch(usize),
    #[error("bN shape: line {0} is not an implication")]
    BnShape(usize),
    #[error("bN: formula does not match the rule applied to line {0}")]
    BnMismatch(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ProofError {
    /// 1-based line number; 0 for a proof without lines.
    pub line: usize,
    pub reason: Rejection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Tautology,
    /// Instance of a base schema, by name.
    Axiom(String),
    /// Instance of the n-th extra schema (1-based).
    Extra(usize),
    /// `Mp(i, j)`: line `j` is `line i -> this line`.
    Mp(usize, usize),
    Us(usize, Substitution<RIFormula>),
    Bn(usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Tautology => f.write_str("taut"),
            Justification::Axiom(name) => f.write_str(name),
            Justification::Extra(i) => write!(f, "extra {i}"),
            Justification::Mp(i, j) => write!(f, "MP {i}, {j}"),
            Justification::Us(i, map) => {
                let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k} := {v}")).collect();
                write!(f, "US {i} [{}]", parts.join(", "))
            }
            Justification::Bn(i) => write!(f, "bN {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: RIFormula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Proof {
    pub lines: Vec<ProofLine>,
}

impl Proof {
    pub fn new() -> Self {
        Proof::default()
    }

    /// Appends a line and returns its 1-based number.
    pub fn push(&mut self, formula: RIFormula, justification: Justification) -> usize {
        self.lines.push(ProofLine {
            formula,
            justification,
        });
        self.lines.len()
    }

    pub fn formula(&self, line: usize) -> &RIFormula {
        &self.lines[line - 1].formula
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn theorem(&self) -> Option<&RIFormula> {
        self.lines.last().map(|l| &l.formula)
    }

    /// Adds `taut: a -> c` and `MP` to derive `c` from line `a_line`.
    pub fn push_mp_by_tautology(&mut self, a_line: usize, c: RIFormula) -> usize {
        let glue = self.formula(a_line).clone().implies(c.clone());
        let t = self.push(glue, Justification::Tautology);
        self.push(c, Justification::Mp(a_line, t))
    }

    /// Derives `c` from two lines `a`, `b` through the tautology
    /// `a -> (b -> c)` and two MP steps.
    pub fn push_mp2_by_tautology(&mut self, a_line: usize, b_line: usize, c: RIFormula) -> usize {
        let b = self.formula(b_line).clone();
        let glue = self.formula(a_line).clone().implies(b.clone().implies(c.clone()));
        let t = self.push(glue, Justification::Tautology);
        let mid = self.push(b.implies(c.clone()), Justification::Mp(a_line, t));
        self.push(c, Justification::Mp(b_line, mid))
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, line) in self.lines.iter().enumerate() {
            writeln!(f, "{:>3}. {}    [{}]", i + 1, line.formula, line.justification)?;
        }
        Ok(())
    }
}

/// Base schemata b0, b1, b2 plus extra schemata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSystem {
    pub base: Vec<Schema>,
    pub extras: Vec<Schema>,
}

impl Default for AxiomSystem {
    fn default() -> Self {
        AxiomSystem::k_circ()
    }
}

impl AxiomSystem {
    /// The minimal RI-logic.
    pub fn k_circ() -> Self {
        AxiomSystem {
            base: vec![Schema::b0(), Schema::b1(), Schema::b2()],
            extras: Vec::new(),
        }
    }

    /// Adds extra schemata, named `A1`, `A2`, ... after any existing ones.
    pub fn with_extras(mut self, extras: impl IntoIterator<Item = RIFormula>) -> Self {
        for pattern in extras {
            let name = format!("A{}", self.extras.len() + 1);
            self.extras.push(Schema::new(name, pattern));
        }
        self
    }

    fn base_schema(&self, name: &str) -> Option<&Schema> {
        self.base.iter().find(|s| s.name == name)
    }
}

/// `K° + A°`: the base schemata plus the circle translation of each axiom,
/// whose variables become metavariables.
pub fn translate_axiomatization(axioms: &[BoxFormula]) -> AxiomSystem {
    AxiomSystem::k_circ().with_extras(axioms.iter().map(circ_translate))
}

/// `(o phi & phi) -> (o psi & psi)` from `phi -> psi`.
pub fn apply_bn(premise: &RIFormula) -> Option<RIFormula> {
    let (phi, psi) = premise.as_implication()?;
    let guard = |f: &RIFormula| f.clone().circ().and(f.clone());
    Some(guard(phi).implies(guard(psi)))
}

pub fn check_proof(p: &Proof, sys: &AxiomSystem) -> Result<RIFormula, ProofError> {
    check_proof_with_limit(p, sys, DEFAULT_ATOM_LIMIT)
}

/// Checks every line and returns the last formula.
pub fn check_proof_with_limit(
    p: &Proof,
    sys: &AxiomSystem,
    atom_limit: usize,
) -> Result<RIFormula, ProofError> {
    if p.is_empty() {
        return Err(ProofError {
            line: 0,
            reason: Rejection::EmptyProof,
        });
    }
    for (idx, line) in p.lines.iter().enumerate() {
        let n = idx + 1;
        check_line(p, sys, n, line, atom_limit).map_err(|reason| ProofError { line: n, reason })?;
    }
    Ok(p.theorem().expect("nonempty").clone())
}

fn check_line(
    p: &Proof,
    sys: &AxiomSystem,
    n: usize,
    line: &ProofLine,
    atom_limit: usize,
) -> Result<(), Rejection> {
    let earlier = |i: usize| {
        if (1..n).contains(&i) {
            Ok(p.formula(i))
        } else {
            Err(Rejection::BadReference(i))
        }
    };
    let f = &line.formula;
    match &line.justification {
        Justification::Tautology => {
            if !taut_check_with_limit(f, atom_limit)? {
                return Err(Rejection::NotATautology);
            }
        }
        Justification::Axiom(name) => {
            let schema = sys
                .base_schema(name)
                .ok_or_else(|| Rejection::UnknownSchema(name.clone()))?;
            match_schema(f, schema).ok_or_else(|| Rejection::NotAnInstance(name.clone()))?;
        }
        Justification::Extra(i) => {
            let schema = i
                .checked_sub(1)
                .and_then(|k| sys.extras.get(k))
                .ok_or(Rejection::NoSuchExtra(*i))?;
            match_schema(f, schema).ok_or_else(|| Rejection::NotAnInstance(schema.name.clone()))?;
        }
        Justification::Mp(i, j) => {
            let minor = earlier(*i)?;
            let major = earlier(*j)?;
            let (antecedent, consequent) = major.as_implication().ok_or(Rejection::MpShape(*j))?;
            if antecedent != minor {
                return Err(Rejection::MpAntecedent { minor: *i, major: *j });
            }
            if consequent != f {
                return Err(Rejection::MpConclusion(*j));
            }
        }
        Justification::Us(i, map) => {
            if earlier(*i)?.substitute(map) != *f {
                return Err(Rejection::UsMismatch(*i));
            }
        }
        Justification::Bn(i) => {
            let expected = apply_bn(earlier(*i)?).ok_or(Rejection::BnShape(*i))?;
            if expected != *f {
                return Err(Rejection::BnMismatch(*i));
            }
        }
    }
    Ok(())
}
