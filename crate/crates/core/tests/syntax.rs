mod common;

use proptest::prelude::*;
use riml::formula::circ_translate_substitution;
use riml::{
    circ_translate, parse_box, parse_ri, print_box, print_ri, BoxFormula, Formula, PrintStyle, Substitution,
};

use common::{box_formula, ri_formula};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ri_round_trip(f in ri_formula(6, true)) {
        for style in [PrintStyle::Plain, PrintStyle::Sugared] {
            let text = print_ri(&f, style);
            prop_assert_eq!(parse_ri(&text).unwrap(), f.clone(), "{}", text);
        }
    }

    #[test]
    fn box_round_trip(f in box_formula(6)) {
        for style in [PrintStyle::Plain, PrintStyle::Sugared] {
            let text = print_box(&f, style);
            prop_assert_eq!(parse_box(&text).unwrap(), f.clone(), "{}", text);
        }
    }

    #[test]
    fn parser_never_panics(s in "[a-z ()~&|<>o-]{0,24}") {
        let _ = parse_ri(&s);
        let _ = parse_box(&s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn translation_commutes_with_substitution(
        f in box_formula(4),
        p in box_formula(3),
        q in box_formula(3),
    ) {
        let s: Substitution<BoxFormula> = [("p".to_string(), p), ("q".to_string(), q)].into();
        let left = circ_translate(&f.substitute(&s));
        let right = circ_translate(&f).substitute(&circ_translate_substitution(&s));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn substitution_is_simultaneous(f in ri_formula(4, false)) {
        // Swapping p and q twice is the identity; sequential replacement
        // would merge them.
        let swap: Substitution<riml::RIFormula> = [
            ("p".to_string(), riml::RIFormula::var("q")),
            ("q".to_string(), riml::RIFormula::var("p")),
        ].into();
        prop_assert_eq!(f.substitute(&swap).substitute(&swap), f);
    }

    #[test]
    fn translation_is_star_free_and_keeps_variables(f in box_formula(5)) {
        let t = circ_translate(&f);
        prop_assert!(t.is_star_free());
        prop_assert_eq!(t.vars(), f.vars());
        prop_assert_eq!(t.modal_depth(), f.modal_depth());
    }
}

#[test]
fn translation_examples() {
    let t = |s: &str| circ_translate(&parse_box(s).unwrap()).to_string();
    assert_eq!(t("box p -> p"), "(o p & p) -> p");
    assert_eq!(t("box p"), "o p & p");
    assert_eq!(t("p & ~q"), "p & ~q");
    assert_eq!(
        print_ri(&circ_translate(&parse_box("dia p").unwrap()), PrintStyle::Sugared),
        "o ~p -> p"
    );
}
