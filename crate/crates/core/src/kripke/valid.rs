use std::collections::BTreeMap;

use serde::Serialize;

use super::{Evaluable, Frame, Model, Program};
use crate::budget::{Budget, BudgetExceeded};

/// Outcome of a validity check. A failing verdict always carries the
/// world and valuation it failed at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails { witness: Witness },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub world: String,
    /// Truth sets of the formula's variables.
    pub valuation: BTreeMap<String, Vec<String>>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails { witness } => Some(witness),
        }
    }
}

/// Truth at every world of the model. The witness is the first failing
/// world in frame order.
pub fn model_valid<F: Evaluable>(m: &Model, f: &F) -> Verdict {
    let (prog, root) = Program::single(f);
    let mut out = Vec::new();
    prog.run_on_model(m, &mut out);
    let failing = m.frame().all() & !out[root];
    if failing == 0 {
        return Verdict::Holds;
    }
    let w = failing.trailing_zeros() as usize;
    let valuation = prog
        .vars()
        .iter()
        .map(|v| (v.clone(), m.frame().names(m.truth_set(v))))
        .collect();
    Verdict::Fails {
        witness: Witness {
            world: m.frame().world(w).to_string(),
            valuation,
        },
    }
}

/// Truth in every model on the frame. Only valuations of the formula's
/// own variables are enumerated; the witness is the least failing
/// (world, valuation) pair in lexicographic order.
pub fn frame_valid<F: Evaluable>(fr: &Frame, f: &F, budget: &Budget) -> Result<Verdict, BudgetExceeded> {
    let (prog, root) = Program::single(f);
    budget.check_pow2("valuations", (fr.len() * prog.vars().len()) as u32)?;
    let mut scratch = Vec::new();
    Ok(match first_failure(&prog, root, fr, &mut scratch) {
        None => Verdict::Holds,
        Some((w, k)) => Verdict::Fails {
            witness: Witness {
                world: fr.world(w).to_string(),
                valuation: decode_valuation(fr, prog.vars(), k),
            },
        },
    })
}

/// Valuation number `k`: bit `i * n + j` says whether variable `i` is
/// true at world `j`.
pub(crate) fn valuation_masks(n: usize, nvars: usize, k: u64, out: &mut Vec<u64>) {
    let all = super::all_mask(n);
    out.clear();
    out.extend((0..nvars).map(|i| (k >> (i * n)) & all));
}

pub(crate) fn decode_valuation(fr: &Frame, vars: &[String], k: u64) -> BTreeMap<String, Vec<String>> {
    let mut masks = Vec::new();
    valuation_masks(fr.len(), vars.len(), k, &mut masks);
    vars.iter()
        .zip(masks)
        .map(|(v, m)| (v.clone(), fr.names(m)))
        .collect()
}

/// Least failing (world, valuation number) for node `root`, or `None`
/// when the node is true in every model on the frame. The caller is
/// responsible for the budget check.
pub(crate) fn first_failure(
    prog: &Program,
    root: usize,
    fr: &Frame,
    scratch: &mut Vec<u64>,
) -> Option<(usize, u64)> {
    let n = fr.len();
    let nvars = prog.vars().len();
    let count = 1u64 << (n * nvars);
    let all = fr.all();
    let mut val = Vec::with_capacity(nvars);
    let mut best: Option<(usize, u64)> = None;
    for k in 0..count {
        valuation_masks(n, nvars, k, &mut val);
        prog.run(fr, &val, scratch);
        let failing = all & !scratch[root];
        if failing != 0 {
            let w = failing.trailing_zeros() as usize;
            if best.is_none_or(|(bw, _)| w < bw) {
                best = Some((w, k));
                if w == 0 {
                    break;
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_ri, RIFormula};

    fn two_world_chain() -> Frame {
        Frame::new(["x", "y"], [("x", "y")]).unwrap()
    }

    #[test]
    fn model_validity() {
        let m = Model::new(two_world_chain(), [("p", vec!["x"])]).unwrap();
        assert!(model_valid(&m, &parse_ri("bullet p -> p").unwrap()).holds());
        let v = model_valid(&m, &parse_ri("o p").unwrap());
        assert_eq!(v.witness().unwrap().world, "x");

        let refl = Frame::new(["x"], [("x", "x")]).unwrap();
        let m = Model::new(refl, Vec::<(&str, Vec<&str>)>::new()).unwrap();
        assert!(model_valid(&m, &parse_ri("o p").unwrap()).holds());
    }

    #[test]
    fn frame_validity_witness() {
        let v = frame_valid(&two_world_chain(), &parse_ri("o p").unwrap(), &Budget::default()).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.world, "x");
        assert_eq!(
            w.valuation,
            BTreeMap::from([("p".to_string(), vec!["x".to_string()])])
        );
    }

    #[test]
    fn verdict_json() {
        let v = frame_valid(&two_world_chain(), &parse_ri("o p").unwrap(), &Budget::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"status":"fails","witness":{"world":"x","valuation":{"p":["x"]}}}"#
        );
        assert_eq!(
            serde_json::to_string(&Verdict::Holds).unwrap(),
            r#"{"status":"holds"}"#
        );
    }

    #[test]
    fn frame_validity_respects_budget() {
        let f = Frame::new(["a", "b", "c"], Vec::<(&str, &str)>::new()).unwrap();
        let phi: RIFormula = parse_ri("p & q & r").unwrap();
        assert!(frame_valid(&f, &phi, &Budget::new(256)).is_err());
        assert!(frame_valid(&f, &phi, &Budget::new(512)).is_ok());
    }

    #[test]
    fn variable_free_formulas() {
        let f = two_world_chain();
        assert!(frame_valid(&f, &parse_ri("o true").unwrap(), &Budget::default())
            .unwrap()
            .holds());
        assert!(!frame_valid(&f, &parse_ri("false").unwrap(), &Budget::default())
            .unwrap()
            .holds());
    }
}
