//! A workbench for reflexive-insensitive modal logic.
//!
//! The crate works with two propositional modal languages over the same
//! finite Kripke frames: the usual box language, and the circle language
//! whose operator `o φ` holds at a world when φ fails there or holds at
//! every successor. Around those it provides
//!
//! * parsing, printing, substitution and the circle translation ([`formula`]),
//! * finite frames, models and both truth definitions ([`kripke`]),
//! * mirror reduction, reflexive closure, frame classes, bounded morphisms
//!   and generated subframes ([`frames`]),
//! * exhaustive validity search over bounded frame classes ([`decide`]),
//! * a Hilbert-style proof checker for RI-logics ([`proof`]),
//! * bounded mechanical checks of the metatheory ([`meta`]),
//! * and a batch command-line front end ([`cli`]).

pub mod budget;
pub mod cli;
pub mod decide;
pub mod formula;
pub mod frames;
pub mod kripke;
pub mod meta;
pub mod proof;

pub use budget::{Budget, BudgetExceeded};
pub use formula::{
    circ_translate, parse_box, parse_ri, print_box, print_ri, BoxFormula, Formula, PrintStyle, RIFormula,
    Substitution, SyntaxError,
};
pub use kripke::{Frame, Model, Verdict};
