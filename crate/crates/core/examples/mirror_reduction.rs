//! Mirror reductions leave circle-language truth unchanged.
//!
//! ```text
//! cargo run --example mirror_reduction
//! ```

use riml::decide::corpus;
use riml::frames::{is_mirror_reduction, mirror_reductions, mirror_related};
use riml::kripke::frame_valid;
use riml::{parse_box, Budget, Frame};

fn main() {
    let budget = Budget::default();
    let f: Frame = include_str!("data/chain.json").parse().unwrap();
    let reductions = mirror_reductions(&f, &budget).unwrap();
    println!("{} mirror reductions of {}", reductions.len(), f.to_json());
    for r in &reductions {
        assert!(is_mirror_reduction(r, &f).unwrap());
        assert!(mirror_related(r, &reductions[reductions.len() - 1]));
        println!("  {}", r.to_json());
    }

    // Every circle formula of modal depth <= 2 has the same frame validity
    // on all of them. Box formulas do not.
    let fs = corpus::ri_formulas(&corpus::DEFAULT_VARS, 5, 2, false);
    for phi in &fs {
        let first = frame_valid(&reductions[0], phi, &budget).unwrap().holds();
        assert!(reductions
            .iter()
            .all(|r| frame_valid(r, phi, &budget).unwrap().holds() == first));
    }
    println!(
        "{} circle formulas: frame validity identical across reductions",
        fs.len()
    );

    let t = parse_box("box p -> p").unwrap();
    for r in &reductions {
        println!(
            "box p -> p on {}: {}",
            r.to_json(),
            frame_valid(r, &t, &budget).unwrap().holds()
        );
    }
}
