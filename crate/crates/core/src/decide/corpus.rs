//! Formula corpora for the exhaustive property suites.
//!
//! Formulas are generated over a fixed variable list by increasing size,
//! where size counts AST nodes. The default corpus is every formula over
//! `{p, q}` with at most 7 nodes and modal depth at most 3, followed by the
//! instances of the base axiom schemata with atomic arguments.

use crate::formula::{BoxFormula, Formula, RIFormula};

pub const DEFAULT_VARS: [&str; 2] = ["p", "q"];
pub const DEFAULT_MAX_SIZE: usize = 7;
pub const DEFAULT_MAX_DEPTH: usize = 3;

fn generate<F: Formula>(vars: &[&str], max_size: usize, max_depth: usize, unary: &[fn(F) -> F]) -> Vec<F> {
    // by_size[s] holds every formula with exactly s nodes.
    let mut by_size: Vec<Vec<F>> = vec![Vec::new(); max_size + 1];
    if max_size >= 1 {
        by_size[1] = vars.iter().map(|v| F::var(*v)).collect();
    }
    for s in 2..=max_size {
        let mut level = Vec::new();
        for op in unary {
            for a in &by_size[s - 1] {
                let f = op(a.clone());
                if f.modal_depth() <= max_depth {
                    level.push(f);
                }
            }
        }
        for left in 1..s - 1 {
            let right = s - 1 - left;
            for a in &by_size[left] {
                for b in &by_size[right] {
                    level.push(a.clone().and(b.clone()));
                }
            }
        }
        by_size[s] = level;
    }
    by_size.into_iter().flatten().collect()
}

/// Circle-language formulas (`~`, `&`, `o`), optionally with `star`.
pub fn ri_formulas(vars: &[&str], max_size: usize, max_depth: usize, with_star: bool) -> Vec<RIFormula> {
    let mut unary: Vec<fn(RIFormula) -> RIFormula> = vec![RIFormula::not, RIFormula::circ];
    if with_star {
        unary.push(RIFormula::star);
    }
    generate(vars, max_size, max_depth, &unary)
}

/// Box-language formulas (`~`, `&`, `box`).
pub fn box_formulas(vars: &[&str], max_size: usize, max_depth: usize) -> Vec<BoxFormula> {
    generate(vars, max_size, max_depth, &[BoxFormula::not, BoxFormula::boxed])
}

/// Instances of b0, b1 and b2 whose arguments are variables from `vars`.
pub fn base_schema_instances(vars: &[&str]) -> Vec<RIFormula> {
    let v = |name: &str| RIFormula::var(name);
    let mut out = vec![RIFormula::Top.circ()];
    out.extend(vars.iter().map(|a| v(a).bullet().implies(v(a))));
    for a in vars {
        for b in vars {
            out.push(v(a).circ().and(v(b).circ()).implies(v(a).and(v(b)).circ()));
        }
    }
    out
}

/// The default circle-language corpus at the given modal depth.
pub fn ri_corpus(max_depth: usize) -> Vec<RIFormula> {
    let mut out = ri_formulas(&DEFAULT_VARS, DEFAULT_MAX_SIZE, max_depth, false);
    for f in base_schema_instances(&DEFAULT_VARS) {
        if f.modal_depth() <= max_depth && !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

/// The default box-language corpus at the given modal depth.
pub fn box_corpus(max_depth: usize) -> Vec<BoxFormula> {
    box_formulas(&DEFAULT_VARS, DEFAULT_MAX_SIZE, max_depth)
}
