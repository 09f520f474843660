//! Bounded validity search over frame classes.
//!
//! ```text
//! cargo run --release --example countermodel_search
//! ```

use riml::decide::{compare_class_validity, valid_over_class, ClassQuery, SearchOptions};
use riml::frames::FrameClass;
use riml::kripke::eval_ri;
use riml::{circ_translate, parse_box, parse_ri, Model};

fn main() {
    let opts = SearchOptions::default().with_workers(2);
    let all = ClassQuery::new(FrameClass::All, 3);
    let transitive = ClassQuery::new(FrameClass::Transitive, 3);
    let euclidean = ClassQuery::new(FrameClass::Euclidean, 3);

    let k4 = parse_ri("(o p & p) -> o (o p & p)").unwrap();
    for q in [&all, &transitive] {
        let r = valid_over_class(&k4, q, &opts).unwrap();
        println!("K4 circle axiom over {}: {}", q.base, r.to_json());
    }

    let five = circ_translate(&parse_box("dia p -> box dia p").unwrap());
    let r = valid_over_class(&five, &euclidean, &opts).unwrap();
    println!("translated 5 over euclidean: {}", r.to_json());
    let c = r.countermodel.expect("euclidean countermodel");
    let m = Model::new(
        c.frame.clone(),
        c.valuation.iter().map(|(v, ws)| (v.clone(), ws.clone())),
    )
    .unwrap();
    println!(
        "re-evaluated at {}: {}",
        c.world,
        eval_ri(&m, &c.world, &five).unwrap()
    );

    // Circle formulas cannot tell all frames from reflexive ones; box
    // formulas can.
    let reflexive = ClassQuery::new(FrameClass::Reflexive, 2);
    let all2 = ClassQuery::new(FrameClass::All, 2);
    let t_box = parse_box("box p -> p").unwrap();
    let t_ri = circ_translate(&t_box);
    println!(
        "box p -> p, all vs reflexive: {:?}",
        compare_class_validity(&t_box, &all2, &reflexive, &opts).unwrap()
    );
    println!(
        "translation, all vs reflexive: {:?}",
        compare_class_validity(&t_ri, &all2, &reflexive, &opts).unwrap()
    );

    // Mirror closure of the reflexive class is every frame.
    let closure = ClassQuery::new(FrameClass::Reflexive, 2).mirror_closed();
    println!(
        "box p -> p over reflexive mirror closure valid: {}",
        valid_over_class(&t_box, &closure, &opts).unwrap().is_valid()
    );
}
