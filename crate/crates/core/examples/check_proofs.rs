//! Checking Hilbert proofs, from code and from proof files.
//!
//! ```text
//! cargo run --example check_proofs
//! ```

use std::path::Path;

use riml::proof::{check_proof, golden, taut_check, translate_axiomatization, ProofFile};
use riml::{parse_box, parse_ri};

fn main() {
    let g = golden::congruence();
    println!("{}", g.proof);
    println!("=> {:?}\n", check_proof(&g.proof, &g.system));

    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/proofs");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    for path in files {
        let file = ProofFile::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let verdict = match check_proof(&file.proof().unwrap(), &file.system().unwrap()) {
            Ok(t) => format!("ok {t}"),
            Err(e) => format!("rejected at {e}"),
        };
        println!("{:<36} {verdict}", path.file_name().unwrap().to_string_lossy());
    }

    // From any theorem t, a proof of o t.
    let p = golden::necessitate(&golden::excluded_circle());
    println!("\nnecessitated: {:?}", check_proof(&p, &Default::default()));

    // The translated T axiom is already a tautology.
    let t = translate_axiomatization(&[parse_box("box p -> p").unwrap()]);
    println!(
        "T extra {} is a tautology: {}",
        t.extras[0],
        taut_check(&t.extras[0].pattern).unwrap()
    );
    println!(
        "o p -> p is a tautology: {}",
        taut_check(&parse_ri("o p -> p").unwrap()).unwrap()
    );
}
