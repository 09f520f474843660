use std::fmt;

use crate::formula::{Formula, RIFormula, Substitution};

/// An axiom schema. Every variable of the pattern is a metavariable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub name: String,
    pub pattern: RIFormula,
}

impl Schema {
    pub fn new(name: impl Into<String>, pattern: RIFormula) -> Self {
        Schema {
            name: name.into(),
            pattern,
        }
    }

    /// `o true`
    pub fn b0() -> Self {
        Schema::new("b0", RIFormula::Top.circ())
    }

    /// `bullet phi -> phi`
    pub fn b1() -> Self {
        let phi = RIFormula::var("phi");
        Schema::new("b1", phi.clone().bullet().implies(phi))
    }

    /// `(o phi & o psi) -> o (phi & psi)`
    pub fn b2() -> Self {
        let phi = RIFormula::var("phi");
        let psi = RIFormula::var("psi");
        Schema::new(
            "b2",
            phi.clone()
                .circ()
                .and(psi.clone().circ())
                .implies(phi.and(psi).circ()),
        )
    }

    pub fn instantiate(&self, map: &Substitution<RIFormula>) -> RIFormula {
        self.pattern.substitute(map)
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.pattern)
    }
}

/// The metavariable instantiation under which `f` is an instance of `s`.
pub fn match_schema(f: &RIFormula, s: &Schema) -> Option<Substitution<RIFormula>> {
    let mut bindings = Substitution::new();
    unify(&s.pattern, f, &mut bindings).then_some(bindings)
}

fn unify(pattern: &RIFormula, f: &RIFormula, bindings: &mut Substitution<RIFormula>) -> bool {
    use RIFormula::*;
    match (pattern, f) {
        (Var(m), _) => match bindings.get(m) {
            Some(bound) => bound == f,
            None => {
                bindings.insert(m.clone(), f.clone());
                true
            }
        },
        (Top, Top) => true,
        (Neg(a), Neg(b)) | (Circ(a), Circ(b)) | (Star(a), Star(b)) => unify(a, b, bindings),
        (And(a1, a2), And(b1, b2)) => unify(a1, b1, bindings) && unify(a2, b2, bindings),
        _ => false,
    }
}
