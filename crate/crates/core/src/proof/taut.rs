use crate::formula::RIFormula;

use super::Rejection;

pub const DEFAULT_ATOM_LIMIT: usize = 16;

/// Classical validity, treating variables and maximal `o`/`star`
/// subformulas as propositional atoms.
pub fn taut_check(f: &RIFormula) -> Result<bool, Rejection> {
    taut_check_with_limit(f, DEFAULT_ATOM_LIMIT)
}

pub fn taut_check_with_limit(f: &RIFormula, atom_limit: usize) -> Result<bool, Rejection> {
    let mut atoms = Vec::new();
    collect_atoms(f, &mut atoms);
    if atoms.len() > atom_limit {
        return Err(Rejection::AtomLimit {
            atoms: atoms.len(),
            limit: atom_limit,
        });
    }
    Ok((0u64..1 << atoms.len()).all(|row| truth(f, &atoms, row)))
}

/// The propositional atoms of `f`, in order of first occurrence.
pub fn atoms(f: &RIFormula) -> Vec<&RIFormula> {
    let mut out = Vec::new();
    collect_atoms(f, &mut out);
    out
}

fn collect_atoms<'a>(f: &'a RIFormula, out: &mut Vec<&'a RIFormula>) {
    match f {
        RIFormula::Top => {}
        RIFormula::Neg(a) => collect_atoms(a, out),
        RIFormula::And(a, b) => {
            collect_atoms(a, out);
            collect_atoms(b, out);
        }
        RIFormula::Var(_) | RIFormula::Circ(_) | RIFormula::Star(_) => {
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
}

fn truth(f: &RIFormula, atoms: &[&RIFormula], row: u64) -> bool {
    match f {
        RIFormula::Top => true,
        RIFormula::Neg(a) => !truth(a, atoms, row),
        RIFormula::And(a, b) => truth(a, atoms, row) && truth(b, atoms, row),
        _ => {
            let i = atoms.iter().position(|a| *a == f).expect("atom was collected");
            row >> i & 1 == 1
        }
    }
}
