//! Parsing, printing, substitution and the circle translation.
//!
//! ```text
//! cargo run --example parse_and_translate
//! ```

use riml::formula::circ_translate_substitution;
use riml::{circ_translate, parse_box, parse_ri, print_ri, BoxFormula, Formula, PrintStyle, Substitution};

fn main() {
    // Derived connectives are desugared by the parser.
    let f = parse_ri("bullet p -> p").unwrap();
    println!("parsed:  {f:?}");
    println!("plain:   {}", print_ri(&f, PrintStyle::Plain));
    println!("sugared: {}", print_ri(&f, PrintStyle::Sugared));

    match parse_ri("o (p & ") {
        Err(e) => println!("error:   {e}"),
        Ok(_) => unreachable!(),
    }

    println!();
    for text in [
        "box p -> p",
        "box p -> box box p",
        "dia p -> box dia p",
        "box (p -> q) -> (box p -> box q)",
    ] {
        let a = parse_box(text).unwrap();
        let t = circ_translate(&a);
        println!("{text:<36} => {}", print_ri(&t, PrintStyle::Sugared));
    }

    // Translation commutes with substitution.
    let a = parse_box("box p -> p").unwrap();
    let s: Substitution<BoxFormula> = [("p".to_string(), parse_box("box q & r").unwrap())].into();
    let left = circ_translate(&a.substitute(&s));
    let right = circ_translate(&a).substitute(&circ_translate_substitution(&s));
    println!();
    println!("(a s)o  = {left}");
    println!("ao (so) = {right}");
    assert_eq!(left, right);
}
