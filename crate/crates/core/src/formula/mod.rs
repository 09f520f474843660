//! Formula ASTs for the box language and the reflexive-insensitive
//! (circle) language, together with substitution and the translation
//! from the former into the latter.
//!
//! Both ASTs keep only a primitive basis. The derived connectives
//! (`false`, `|`, `->`, `<->`, `dia`, `bullet`) are desugared by the
//! parser and resugared by the printer.

mod parser;
mod printer;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

pub use parser::{parse_box, parse_ri, SyntaxError};
pub use printer::{print_box, print_ri, PrintStyle};

/// A simultaneous substitution from variable names to formulas.
pub type Substitution<F> = BTreeMap<String, F>;

/// Formula of the box language.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoxFormula {
    /// The verum constant. `false` is `Neg(Top)`.
    Top,
    Var(String),
    Neg(Box<BoxFormula>),
    And(Box<BoxFormula>, Box<BoxFormula>),
    Box(Box<BoxFormula>),
}

/// Formula of the circle language, extended with the star operator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RIFormula {
    Top,
    Var(String),
    Neg(Box<RIFormula>),
    And(Box<RIFormula>, Box<RIFormula>),
    /// `o φ`: φ fails here, or every successor satisfies φ.
    Circ(Box<RIFormula>),
    /// `star φ`: φ holds here, or every successor satisfies φ.
    Star(Box<RIFormula>),
}

/// Operations shared by both formula languages.
pub trait Formula:
    Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + FromStr<Err = SyntaxError> + Send + Sync
{
    fn var(name: impl Into<String>) -> Self;
    fn top() -> Self;
    fn not(self) -> Self;
    fn and(self, other: Self) -> Self;

    fn bot() -> Self {
        Self::top().not()
    }

    fn or(self, other: Self) -> Self {
        self.not().and(other.not()).not()
    }

    fn implies(self, other: Self) -> Self {
        self.and(other.not()).not()
    }

    fn iff(self, other: Self) -> Self {
        self.clone().implies(other.clone()).and(other.implies(self))
    }

    /// Splits `a -> b`, i.e. `~(a & ~b)`, into its antecedent and consequent.
    fn as_implication(&self) -> Option<(&Self, &Self)>;

    /// Variables occurring in the formula, in name order.
    fn vars(&self) -> BTreeSet<&str>;

    /// Simultaneous uniform substitution at every variable leaf.
    fn substitute(&self, map: &Substitution<Self>) -> Self;

    /// Number of AST nodes.
    fn size(&self) -> usize;

    /// Maximal nesting of modal operators.
    fn modal_depth(&self) -> usize;
}

impl BoxFormula {
    pub fn boxed(self) -> Self {
        BoxFormula::Box(Box::new(self))
    }

    /// `dia φ` is `~box ~φ`.
    pub fn dia(self) -> Self {
        self.not().boxed().not()
    }
}

impl RIFormula {
    pub fn circ(self) -> Self {
        RIFormula::Circ(Box::new(self))
    }

    /// `bullet φ` is `~o φ`.
    pub fn bullet(self) -> Self {
        self.circ().not()
    }

    pub fn star(self) -> Self {
        RIFormula::Star(Box::new(self))
    }

    /// True when the formula contains no star operator, i.e. it belongs to
    /// the plain circle language.
    pub fn is_star_free(&self) -> bool {
        match self {
            RIFormula::Top | RIFormula::Var(_) => true,
            RIFormula::Neg(a) | RIFormula::Circ(a) => a.is_star_free(),
            RIFormula::And(a, b) => a.is_star_free() && b.is_star_free(),
            RIFormula::Star(_) => false,
        }
    }
}

impl Formula for BoxFormula {
    fn var(name: impl Into<String>) -> Self {
        BoxFormula::Var(name.into())
    }

    fn top() -> Self {
        BoxFormula::Top
    }

    fn not(self) -> Self {
        BoxFormula::Neg(Box::new(self))
    }

    fn and(self, other: Self) -> Self {
        BoxFormula::And(Box::new(self), Box::new(other))
    }

    fn as_implication(&self) -> Option<(&Self, &Self)> {
        match self {
            BoxFormula::Neg(inner) => match inner.as_ref() {
                BoxFormula::And(a, b) => match b.as_ref() {
                    BoxFormula::Neg(c) => Some((a, c)),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    fn vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        fn walk<'a>(f: &'a BoxFormula, out: &mut BTreeSet<&'a str>) {
            match f {
                BoxFormula::Top => {}
                BoxFormula::Var(v) => {
                    out.insert(v.as_str());
                }
                BoxFormula::Neg(a) | BoxFormula::Box(a) => walk(a, out),
                BoxFormula::And(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        walk(self, &mut out);
        out
    }

    fn substitute(&self, map: &Substitution<Self>) -> Self {
        match self {
            BoxFormula::Top => BoxFormula::Top,
            BoxFormula::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            BoxFormula::Neg(a) => a.substitute(map).not(),
            BoxFormula::And(a, b) => a.substitute(map).and(b.substitute(map)),
            BoxFormula::Box(a) => a.substitute(map).boxed(),
        }
    }

    fn size(&self) -> usize {
        match self {
            BoxFormula::Top | BoxFormula::Var(_) => 1,
            BoxFormula::Neg(a) | BoxFormula::Box(a) => 1 + a.size(),
            BoxFormula::And(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn modal_depth(&self) -> usize {
        match self {
            BoxFormula::Top | BoxFormula::Var(_) => 0,
            BoxFormula::Neg(a) => a.modal_depth(),
            BoxFormula::And(a, b) => a.modal_depth().max(b.modal_depth()),
            BoxFormula::Box(a) => 1 + a.modal_depth(),
        }
    }
}

impl Formula for RIFormula {
    fn var(name: impl Into<String>) -> Self {
        RIFormula::Var(name.into())
    }

    fn top() -> Self {
        RIFormula::Top
    }

    fn not(self) -> Self {
        RIFormula::Neg(Box::new(self))
    }

    fn and(self, other: Self) -> Self {
        RIFormula::And(Box::new(self), Box::new(other))
    }

    fn as_implication(&self) -> Option<(&Self, &Self)> {
        match self {
            RIFormula::Neg(inner) => match inner.as_ref() {
                RIFormula::And(a, b) => match b.as_ref() {
                    RIFormula::Neg(c) => Some((a, c)),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    fn vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        fn walk<'a>(f: &'a RIFormula, out: &mut BTreeSet<&'a str>) {
            match f {
                RIFormula::Top => {}
                RIFormula::Var(v) => {
                    out.insert(v.as_str());
                }
                RIFormula::Neg(a) | RIFormula::Circ(a) | RIFormula::Star(a) => walk(a, out),
                RIFormula::And(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        walk(self, &mut out);
        out
    }

    fn substitute(&self, map: &Substitution<Self>) -> Self {
        match self {
            RIFormula::Top => RIFormula::Top,
            RIFormula::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            RIFormula::Neg(a) => a.substitute(map).not(),
            RIFormula::And(a, b) => a.substitute(map).and(b.substitute(map)),
            RIFormula::Circ(a) => a.substitute(map).circ(),
            RIFormula::Star(a) => a.substitute(map).star(),
        }
    }

    fn size(&self) -> usize {
        match self {
            RIFormula::Top | RIFormula::Var(_) => 1,
            RIFormula::Neg(a) | RIFormula::Circ(a) | RIFormula::Star(a) => 1 + a.size(),
            RIFormula::And(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn modal_depth(&self) -> usize {
        match self {
            RIFormula::Top | RIFormula::Var(_) => 0,
            RIFormula::Neg(a) => a.modal_depth(),
            RIFormula::And(a, b) => a.modal_depth().max(b.modal_depth()),
            RIFormula::Circ(a) | RIFormula::Star(a) => 1 + a.modal_depth(),
        }
    }
}

/// The circle translation: variables and Boolean structure are kept,
/// and `box φ` becomes `o φ' & φ'` where `φ'` is the translation of `φ`.
pub fn circ_translate(f: &BoxFormula) -> RIFormula {
    match f {
        BoxFormula::Top => RIFormula::Top,
        BoxFormula::Var(v) => RIFormula::Var(v.clone()),
        BoxFormula::Neg(a) => circ_translate(a).not(),
        BoxFormula::And(a, b) => circ_translate(a).and(circ_translate(b)),
        BoxFormula::Box(a) => {
            let inner = circ_translate(a);
            inner.clone().circ().and(inner)
        }
    }
}

/// Translates every image of a box-language substitution.
pub fn circ_translate_substitution(map: &Substitution<BoxFormula>) -> Substitution<RIFormula> {
    map.iter().map(|(k, v)| (k.clone(), circ_translate(v))).collect()
}

impl fmt::Display for BoxFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_box(self, PrintStyle::Plain))
    }
}

impl fmt::Display for RIFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_ri(self, PrintStyle::Plain))
    }
}

impl FromStr for BoxFormula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_box(s)
    }
}

impl FromStr for RIFormula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ri(s)
    }
}
