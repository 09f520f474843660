//! The bounded metatheorem suites.
//!
//! ```text
//! cargo run --release --example metatheorems
//! ```

use riml::meta::{run_suite, MetaOptions, Suite};

fn main() {
    let opts = MetaOptions::default();
    for suite in Suite::ALL {
        let report = run_suite(suite, &opts).unwrap();
        println!("{report}");
    }
}
