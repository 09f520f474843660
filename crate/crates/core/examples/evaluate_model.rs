//! Truth in a finite model under both truth definitions.
//!
//! ```text
//! cargo run --example evaluate_model
//! ```

use riml::frames::reflexive_closure;
use riml::kripke::{eval_box, eval_ri, model_valid};
use riml::{circ_translate, parse_box, parse_ri, Model};

fn main() {
    let text = include_str!("data/model.json");
    let m = Model::from_json(text).unwrap();
    println!("model: {}", m.to_json());

    for f in ["o p", "bullet p", "star p", "o q", "o (p | q)", "p | o p"] {
        let phi = parse_ri(f).unwrap();
        let row: Vec<String> = m
            .frame()
            .worlds()
            .iter()
            .map(|w| format!("{w}={}", eval_ri(&m, w, &phi).unwrap() as u8))
            .collect();
        println!("{f:<12} {}", row.join(" "));
    }

    // A box formula on the reflexive closure agrees with its translation on
    // the model itself.
    let closed = m.with_frame(reflexive_closure(m.frame()));
    println!();
    for f in ["box p", "box (p -> box q)", "dia q"] {
        let a = parse_box(f).unwrap();
        let t = circ_translate(&a);
        for w in m.frame().worlds() {
            let on_closure = eval_box(&closed, w, &a).unwrap();
            let translated = eval_ri(&m, w, &t).unwrap();
            assert_eq!(on_closure, translated);
        }
        println!("{f:<18} translation agrees at every world");
    }

    println!();
    println!(
        "p | o p valid in model: {:?}",
        model_valid(&m, &parse_ri("p | o p").unwrap())
    );
    println!(
        "o p valid in model:     {:?}",
        model_valid(&m, &parse_ri("o p").unwrap())
    );
}
