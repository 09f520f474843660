//! Hand-checked proofs in the minimal RI-logic and a few of its extensions.
//!
//! Propositional steps are always spelled out as a tautology line followed by
//! modus ponens, so every line is checkable on its own.

use crate::formula::{Formula, RIFormula, Substitution};

use super::{AxiomSystem, Justification as J, Proof, Rejection};

fn v(name: &str) -> RIFormula {
    RIFormula::var(name)
}

/// `o f & f`
fn guard(f: RIFormula) -> RIFormula {
    f.clone().circ().and(f)
}

#[derive(Debug, Clone)]
pub struct GoldenProof {
    pub name: &'static str,
    pub system: AxiomSystem,
    pub proof: Proof,
}

impl GoldenProof {
    fn base(name: &'static str, proof: Proof) -> Self {
        GoldenProof {
            name,
            system: AxiomSystem::k_circ(),
            proof,
        }
    }

    pub fn theorem(&self) -> &RIFormula {
        self.proof.theorem().expect("golden proofs are nonempty")
    }
}

/// `o true`
pub fn b0_proof() -> Proof {
    let mut p = Proof::new();
    p.push(RIFormula::Top.circ(), J::Axiom("b0".into()));
    p
}

/// `p | o p`
pub fn excluded_circle() -> Proof {
    let mut p = Proof::new();
    let b1 = p.push(v("p").bullet().implies(v("p")), J::Axiom("b1".into()));
    p.push_mp_by_tautology(b1, v("p").or(v("p").circ()));
    p
}

/// `((o p & p) | (o q & q)) -> o (p | q)`
pub fn guarded_disjunction() -> Proof {
    let (a, b) = (v("p"), v("q"));
    let ab = a.clone().or(b.clone());
    let mut p = Proof::new();
    let t1 = p.push(a.clone().implies(ab.clone()), J::Tautology);
    let n1 = p.push(guard(a.clone()).implies(guard(ab.clone())), J::Bn(t1));
    let t2 = p.push(b.clone().implies(ab.clone()), J::Tautology);
    let n2 = p.push(guard(b.clone()).implies(guard(ab.clone())), J::Bn(t2));
    let goal = guard(a).or(guard(b)).implies(ab.circ());
    p.push_mp2_by_tautology(n1, n2, goal);
    p
}

/// `p -> (o (p -> q) -> (o p -> o q))`
pub fn circle_distribution() -> Proof {
    let (a, b) = (v("p"), v("q"));
    let imp = a.clone().implies(b.clone());
    let both = a.clone().and(imp.clone());
    let mut p = Proof::new();
    let l1 = p.push(
        a.clone()
            .circ()
            .and(imp.clone().circ())
            .implies(both.clone().circ()),
        J::Axiom("b2".into()),
    );
    let l2 = p.push(both.clone().implies(b.clone()), J::Tautology);
    let l3 = p.push(guard(both).implies(guard(b.clone())), J::Bn(l2));
    let l4 = p.push(b.clone().bullet().implies(b.clone()), J::Axiom("b1".into()));
    let goal = a.clone().implies(imp.circ().implies(a.circ().implies(b.circ())));
    // If q holds, l1 and l3 give o q; if not, b1 does.
    let glue = p.formula(l1).clone().implies(
        p.formula(l3)
            .clone()
            .implies(p.formula(l4).clone().implies(goal.clone())),
    );
    let t = p.push(glue, J::Tautology);
    let m1 = p.push(p.formula(t).as_implication().unwrap().1.clone(), J::Mp(l1, t));
    let m2 = p.push(p.formula(m1).as_implication().unwrap().1.clone(), J::Mp(l3, m1));
    p.push(goal, J::Mp(l4, m2));
    p
}

/// `p | o p` under `p := q & r`, by uniform substitution.
pub fn substituted_excluded_circle() -> Proof {
    let mut p = excluded_circle();
    let map = Substitution::from([("p".to_string(), v("q").and(v("r")))]);
    let last = p.len();
    let f = p.formula(last).substitute(&map);
    p.push(f, J::Us(last, map));
    p
}

/// From a proof of `t`, a proof of `o t`.
///
/// `t` gives `true -> t`, bN turns that into `(o true & true) -> (o t & t)`,
/// and b0 discharges the antecedent.
pub fn necessitate(proof: &Proof) -> Proof {
    let mut p = proof.clone();
    let t_line = p.len();
    let t = p.formula(t_line).clone();
    let imp = p.push_mp_by_tautology(t_line, RIFormula::Top.implies(t.clone()));
    let bn = p.push(guard(RIFormula::Top).implies(guard(t.clone())), J::Bn(imp));
    let b0 = p.push(RIFormula::Top.circ(), J::Axiom("b0".into()));
    p.push_mp2_by_tautology(b0, bn, t.circ());
    p
}

/// The congruence rule in one direction: from `p <-> q` as an extra axiom,
/// `o p -> o q`.
pub fn congruence() -> GoldenProof {
    let (a, b) = (v("p"), v("q"));
    let hyp = a.clone().iff(b.clone());
    let system = AxiomSystem::k_circ().with_extras([hyp.clone()]);
    let mut p = Proof::new();
    let h = p.push(hyp, J::Extra(1));
    let fwd = p.push_mp_by_tautology(h, a.clone().implies(b.clone()));
    let bn = p.push(guard(a.clone()).implies(guard(b.clone())), J::Bn(fwd));
    // (o p & p) -> o q
    let l2 = p.push_mp_by_tautology(bn, guard(a.clone()).implies(b.clone().circ()));
    // (o p & ~p) -> ~q
    let left_neg = a.clone().circ().and(a.clone().not());
    let l3 = p.push_mp_by_tautology(h, left_neg.clone().implies(b.clone().not()));
    // ~q -> o q
    let b1 = p.push(b.clone().bullet().implies(b.clone()), J::Axiom("b1".into()));
    let l4 = p.push_mp_by_tautology(b1, b.clone().not().implies(b.clone().circ()));
    let l5 = p.push_mp2_by_tautology(l3, l4, left_neg.clone().implies(b.clone().circ()));
    let l6 = p.push_mp2_by_tautology(l2, l5, guard(a.clone()).or(left_neg).implies(b.clone().circ()));
    let split = a.clone().circ().and(a.clone().or(a.clone().not()));
    let l7 = p.push_mp_by_tautology(l6, split.implies(b.clone().circ()));
    p.push_mp_by_tautology(l7, a.circ().implies(b.circ()));
    GoldenProof {
        name: "congruence",
        system,
        proof: p,
    }
}

/// Theorems of the minimal RI-logic, each with a proof that uses no extra
/// axioms.
pub fn golden_set() -> Vec<GoldenProof> {
    let mut out = vec![
        GoldenProof::base("b0", b0_proof()),
        GoldenProof::base("excluded-circle", excluded_circle()),
        GoldenProof::base("guarded-disjunction", guarded_disjunction()),
        GoldenProof::base("circle-distribution", circle_distribution()),
        GoldenProof::base("substitution", substituted_excluded_circle()),
    ];
    for (name, a, b) in [("b1-q", "q", ""), ("b2-pq", "p", "q"), ("b2-qp", "q", "p")] {
        let mut p = Proof::new();
        let f = if b.is_empty() {
            v(a).bullet().implies(v(a))
        } else {
            v(a).circ().and(v(b).circ()).implies(v(a).and(v(b)).circ())
        };
        let schema = if b.is_empty() { "b1" } else { "b2" };
        p.push(f, J::Axiom(schema.into()));
        out.push(GoldenProof::base(name, p));
    }
    out
}

/// Each golden theorem `t` paired with a proof of `o t`.
pub fn necessitated_set() -> Vec<GoldenProof> {
    golden_set()
        .into_iter()
        .map(|g| GoldenProof {
            proof: necessitate(&g.proof),
            ..g
        })
        .collect()
}

/// A proof that must be rejected, with the line and reason.
#[derive(Debug, Clone)]
pub struct Mutant {
    pub name: &'static str,
    pub system: AxiomSystem,
    pub proof: Proof,
    pub line: usize,
    pub reason: Rejection,
}

/// Three broken proofs: swapped MP operands, a substitution applied to only
/// some occurrences, and bN applied to a line that is not an implication.
pub fn mutants() -> Vec<Mutant> {
    let mut out = Vec::new();

    let congruence = congruence();
    let mut swapped = congruence.proof.clone();
    // Line 6 is MP(4, 5); cite the operands the wrong way round.
    assert_eq!(swapped.lines[5].justification, J::Mp(4, 5));
    swapped.lines[5].justification = J::Mp(5, 4);
    out.push(Mutant {
        name: "mp-operands-swapped",
        system: congruence.system.clone(),
        proof: swapped,
        line: 6,
        reason: Rejection::MpAntecedent { minor: 5, major: 4 },
    });

    let mut partial = substituted_excluded_circle();
    let last = partial.len();
    partial.lines[last - 1].formula = v("q").and(v("r")).or(v("p").circ());
    out.push(Mutant {
        name: "us-not-uniform",
        system: AxiomSystem::k_circ(),
        proof: partial,
        line: last,
        reason: Rejection::UsMismatch(last - 1),
    });

    let mut bad_bn = congruence.proof.clone();
    // Line 4 is bN 3; point it at the biconditional on line 1.
    assert_eq!(bad_bn.lines[3].justification, J::Bn(3));
    bad_bn.lines[3].justification = J::Bn(1);
    out.push(Mutant {
        name: "bn-on-non-implication",
        system: congruence.system,
        proof: bad_bn,
        line: 4,
        reason: Rejection::BnShape(1),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_ri;
    use crate::proof::check_proof;

    #[test]
    fn golden_proofs_check() {
        for g in golden_set().into_iter().chain(necessitated_set()) {
            check_proof(&g.proof, &g.system).unwrap_or_else(|e| panic!("{}: {e}\n{}", g.name, g.proof));
        }
    }

    #[test]
    fn theorems_are_the_advertised_ones() {
        let th = |p: Proof| p.theorem().unwrap().clone();
        assert_eq!(th(excluded_circle()), parse_ri("p | o p").unwrap());
        assert_eq!(
            th(guarded_disjunction()),
            parse_ri("((o p & p) | (o q & q)) -> o (p | q)").unwrap()
        );
        assert_eq!(
            th(circle_distribution()),
            parse_ri("p -> (o (p -> q) -> (o p -> o q))").unwrap()
        );
        assert_eq!(
            th(substituted_excluded_circle()),
            parse_ri("(q & r) | o (q & r)").unwrap()
        );
        assert_eq!(
            th(necessitate(&excluded_circle())),
            parse_ri("o (p | o p)").unwrap()
        );
    }

    #[test]
    fn congruence_derivation() {
        let g = congruence();
        assert_eq!(g.proof.len(), 21);
        assert_eq!(
            check_proof(&g.proof, &g.system),
            Ok(parse_ri("o p -> o q").unwrap())
        );
        // Without the hypothesis the first line has nothing to cite.
        assert_eq!(check_proof(&g.proof, &AxiomSystem::k_circ()).unwrap_err().line, 1);
    }

    #[test]
    fn mutants_are_rejected_where_expected() {
        for m in mutants() {
            let err = check_proof(&m.proof, &m.system).unwrap_err();
            assert_eq!((err.line, err.reason), (m.line, m.reason), "{}", m.name);
        }
    }
}
