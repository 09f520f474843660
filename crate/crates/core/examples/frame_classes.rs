//! Frame classes, robustness under reflexivity, bounded morphisms and
//! generated subframes.
//!
//! ```text
//! cargo run --example frame_classes
//! ```

use riml::frames::{
    check_morphism, generated_subframe, irreflexive_part, is_generated_subframe, reflexive_closure,
    robust_under_reflexivity, FrameClass, Robustness, WorldMap,
};
use riml::{Budget, Frame};

fn main() {
    let budget = Budget::default();
    let e: Frame = include_str!("data/euclidean.json").parse().unwrap();
    println!("frame {}", e.to_json());
    for c in FrameClass::NAMED {
        println!("  {c:<12} {}", c.contains(&e));
    }
    let closure = reflexive_closure(&e);
    println!(
        "closure {} euclidean: {}",
        closure.to_json(),
        FrameClass::Euclidean.contains(&closure)
    );

    println!();
    for c in FrameClass::NAMED {
        let r = robust_under_reflexivity(&c, 3, &budget).unwrap();
        println!("robust {c:<12} {}", serde_json::to_string(&r).unwrap());
    }
    if let Ok(Robustness::Fails { witness }) = robust_under_reflexivity(&FrameClass::Euclidean, 2, &budget) {
        println!(
            "euclidean witness, irreflexive part {}",
            irreflexive_part(&witness).to_json()
        );
    }

    println!();
    let chain: Frame = include_str!("data/chain.json").parse().unwrap();
    let point: Frame = include_str!("data/collapse.json").parse().unwrap();
    let m = WorldMap::from_json(&chain, &point, include_str!("data/to-collapse.json")).unwrap();
    println!(
        "collapse chain onto a loop: {:?}",
        check_morphism(&chain, &point, &m)
    );

    let sub = generated_subframe(&chain, 0b010).unwrap();
    println!(
        "generated by b: {} (generated subframe: {})",
        sub.to_json(),
        is_generated_subframe(&sub, &chain)
    );
}
