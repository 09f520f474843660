use std::collections::HashMap;

use super::{Frame, KripkeError, Model};
use crate::formula::{BoxFormula, Formula, RIFormula};

/// Truth of a box-language formula at a world, by the standard clauses.
pub fn eval_box(m: &Model, world: &str, f: &BoxFormula) -> Result<bool, KripkeError> {
    let w = m.frame().index_of(world)?;
    Ok(f.holds(m, w))
}

/// Truth of a circle-language formula at a world, by the
/// reflexive-insensitive clauses.
pub fn eval_ri(m: &Model, world: &str, f: &RIFormula) -> Result<bool, KripkeError> {
    let w = m.frame().index_of(world)?;
    Ok(f.holds(m, w))
}

fn every_successor(m: &Model, w: usize, pred: impl Fn(usize) -> bool) -> bool {
    let succ = m.frame().successors(w);
    (0..m.frame().len()).all(|x| succ >> x & 1 == 0 || pred(x))
}

/// A formula language with a Kripke semantics.
///
/// `holds` is the pointwise recursive truth definition. `lower` compiles
/// the formula into a [`Program`], which computes whole truth sets at
/// once and is what the exhaustive searches run.
pub trait Evaluable: Formula {
    fn holds(&self, m: &Model, w: usize) -> bool;

    /// Appends the formula's nodes to `prog` and returns its root node.
    fn lower(&self, prog: &mut Program) -> usize;
}

impl Evaluable for BoxFormula {
    fn holds(&self, m: &Model, w: usize) -> bool {
        match self {
            BoxFormula::Top => true,
            BoxFormula::Var(v) => m.truth_set(v) >> w & 1 == 1,
            BoxFormula::Neg(a) => !a.holds(m, w),
            BoxFormula::And(a, b) => a.holds(m, w) && b.holds(m, w),
            BoxFormula::Box(a) => every_successor(m, w, |x| a.holds(m, x)),
        }
    }

    fn lower(&self, prog: &mut Program) -> usize {
        let op = match self {
            BoxFormula::Top => Op::Top,
            BoxFormula::Var(v) => Op::Var(prog.var_index(v)),
            BoxFormula::Neg(a) => Op::Neg(a.lower(prog)),
            BoxFormula::And(a, b) => Op::And(a.lower(prog), b.lower(prog)),
            BoxFormula::Box(a) => Op::Box(a.lower(prog)),
        };
        prog.push(op)
    }
}

impl Evaluable for RIFormula {
    fn holds(&self, m: &Model, w: usize) -> bool {
        match self {
            RIFormula::Top => true,
            RIFormula::Var(v) => m.truth_set(v) >> w & 1 == 1,
            RIFormula::Neg(a) => !a.holds(m, w),
            RIFormula::And(a, b) => a.holds(m, w) && b.holds(m, w),
            RIFormula::Circ(a) => !a.holds(m, w) || every_successor(m, w, |x| a.holds(m, x)),
            RIFormula::Star(a) => a.holds(m, w) || every_successor(m, w, |x| a.holds(m, x)),
        }
    }

    fn lower(&self, prog: &mut Program) -> usize {
        let op = match self {
            RIFormula::Top => Op::Top,
            RIFormula::Var(v) => Op::Var(prog.var_index(v)),
            RIFormula::Neg(a) => Op::Neg(a.lower(prog)),
            RIFormula::And(a, b) => Op::And(a.lower(prog), b.lower(prog)),
            RIFormula::Circ(a) => Op::Circ(a.lower(prog)),
            RIFormula::Star(a) => Op::Star(a.lower(prog)),
        };
        prog.push(op)
    }
}

/// One node of a compiled formula DAG. Operands index earlier nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Top,
    Var(usize),
    Neg(usize),
    And(usize, usize),
    Box(usize),
    Circ(usize),
    Star(usize),
}

/// A hash-consed DAG of formula nodes over a fixed variable list.
///
/// Evaluating the program on a model yields the truth set (a world
/// bitmask) of every node, so a whole corpus of formulas sharing
/// subformulas is evaluated in one linear pass.
#[derive(Debug, Clone, Default)]
pub struct Program {
    ops: Vec<Op>,
    vars: Vec<String>,
    memo: HashMap<Op, usize>,
}

impl Program {
    /// A program whose variables are numbered in the given order.
    pub fn with_vars<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        let mut prog = Program::default();
        for v in vars {
            prog.var_index(&v.into());
        }
        prog
    }

    /// Compiles a single formula over its own variables (in name order).
    pub fn single<F: Evaluable>(f: &F) -> (Program, usize) {
        let mut prog = Program::with_vars(f.vars());
        let root = prog.add(f);
        (prog, root)
    }

    pub fn add<F: Evaluable>(&mut self, f: &F) -> usize {
        f.lower(self)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    fn var_index(&mut self, name: &str) -> usize {
        match self.vars.iter().position(|v| v == name) {
            Some(i) => i,
            None => {
                self.vars.push(name.to_string());
                self.vars.len() - 1
            }
        }
    }

    fn push(&mut self, op: Op) -> usize {
        if let Some(&i) = self.memo.get(&op) {
            return i;
        }
        self.ops.push(op);
        self.memo.insert(op, self.ops.len() - 1);
        self.ops.len() - 1
    }

    /// Truth sets of every node; `valuation[i]` is the truth set of the
    /// `i`-th program variable.
    pub fn run(&self, frame: &Frame, valuation: &[u64], out: &mut Vec<u64>) {
        let all = frame.all();
        let succ = frame.successor_masks();
        // Worlds all of whose successors lie in `set`.
        let boxed = |set: u64| {
            let missing = !set;
            succ.iter()
                .enumerate()
                .filter(|(_, &s)| s & missing == 0)
                .fold(0u64, |acc, (w, _)| acc | 1 << w)
        };
        out.clear();
        out.reserve(self.ops.len());
        for op in &self.ops {
            let v = match *op {
                Op::Top => all,
                Op::Var(i) => valuation.get(i).copied().unwrap_or(0) & all,
                Op::Neg(a) => all & !out[a],
                Op::And(a, b) => out[a] & out[b],
                Op::Box(a) => boxed(out[a]),
                Op::Circ(a) => (all & !out[a]) | boxed(out[a]),
                Op::Star(a) => out[a] | boxed(out[a]),
            };
            out.push(v);
        }
    }

    /// Truth sets on a model, reading each program variable from the
    /// model's valuation.
    pub fn run_on_model(&self, m: &Model, out: &mut Vec<u64>) {
        let val: Vec<u64> = self.vars.iter().map(|v| m.truth_set(v)).collect();
        self.run(m.frame(), &val, out);
    }
}
