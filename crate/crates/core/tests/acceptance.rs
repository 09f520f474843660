//! Acceptance checks, one line per criterion. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use riml::decide::corpus;
use riml::decide::{valid_over_class, ClassQuery, SearchOptions};
use riml::frames::{irreflexive_part, robust_under_reflexivity, FrameClass, Robustness};
use riml::kripke::{eval_ri, frame_valid};
use riml::meta::{run_suite, soundness_targets, MetaOptions, Suite};
use riml::proof::{
    check_proof, golden, taut_check, translate_axiomatization, AxiomSystem, Justification, Schema,
};
use riml::{circ_translate, parse_box, parse_ri, print_box, print_ri, Budget, Model, PrintStyle, RIFormula};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(s: Suite, opts: MetaOptions) -> Outcome {
    let r = run_suite(s, &opts).map_err(|e| e.to_string())?;
    ensure(r.instances > 0, "no instances")?;
    ensure(
        r.pass && r.violations == 0,
        format!("{} violations; first: {:?}", r.violations, r.first_violation),
    )?;
    Ok(format!(
        "{} formulas, {} instances, 0 violations",
        r.formulas, r.instances
    ))
}

fn mirror_invariance() -> Outcome {
    suite(Suite::MirrorInvariance, MetaOptions::default())
}

fn bridge() -> Outcome {
    suite(Suite::Bridge, MetaOptions::default())
}

fn comp_t() -> Outcome {
    suite(Suite::CompT, MetaOptions::default())
}

fn soundness() -> Outcome {
    let labels: Vec<String> = soundness_targets().iter().map(|(_, f)| f.to_string()).collect();
    for needed in [
        "p | o p",
        "p -> (o (p -> q) -> (o p -> o q))",
        "((o p & p) | (o q & q)) -> o (p | q)",
    ] {
        ensure(
            labels.iter().any(|l| l == needed),
            format!("missing target {needed}"),
        )?;
    }
    suite(Suite::Soundness, MetaOptions::default().with_max_worlds(4))
}

fn k4_circle() -> Outcome {
    let f = parse_ri("(o p & p) -> o (o p & p)").unwrap();
    let opts = SearchOptions::default();
    let t = valid_over_class(&f, &ClassQuery::new(FrameClass::Transitive, 3), &opts)
        .map_err(|e| e.to_string())?;
    ensure(t.is_valid(), "countermodel over transitive frames")?;
    let a = valid_over_class(&f, &ClassQuery::new(FrameClass::All, 3), &opts).map_err(|e| e.to_string())?;
    let c = a.countermodel.ok_or("no countermodel over all frames")?;
    ensure(c.frame.len() <= 3, "countermodel too large")?;
    Ok(format!(
        "valid on {} transitive frames; countermodel on {} worlds over all frames",
        t.frames_checked,
        c.frame.len()
    ))
}

fn euclidean_robustness() -> Outcome {
    let budget = Budget::default();
    let r = robust_under_reflexivity(&FrameClass::Euclidean, 2, &budget).map_err(|e| e.to_string())?;
    let Robustness::Fails { witness } = r else {
        return Err("euclidean reported robust at bound 2".into());
    };
    let irr = irreflexive_part(&witness);
    let pairs = irr.pairs();
    ensure(pairs.len() == 1, format!("irreflexive part {}", irr.to_json()))?;
    let (x, y) = pairs[0];
    ensure(x != y, "loop in irreflexive part")?;
    let all: BTreeSet<(&str, &str)> = witness.pairs().into_iter().collect();
    ensure(
        all == BTreeSet::from([(x, y), (y, y)]),
        format!("witness {} is not x->y, y->y", witness.to_json()),
    )?;
    for c in [
        FrameClass::Serial,
        FrameClass::Transitive,
        FrameClass::Symmetric,
        FrameClass::Final,
        FrameClass::Reflexive,
    ] {
        let r = robust_under_reflexivity(&c, 3, &budget).map_err(|e| e.to_string())?;
        ensure(
            r.holds(),
            format!("{c} not robust: {}", serde_json::to_string(&r).unwrap()),
        )?;
    }
    Ok(format!(
        "witness {}; serial, transitive, symmetric, final, reflexive robust at 3",
        witness.to_json()
    ))
}

fn five_fails() -> Outcome {
    let five = circ_translate(&parse_box("dia p -> box dia p").unwrap());
    let q = ClassQuery::new(FrameClass::Euclidean, 3);
    let r = valid_over_class(&five, &q, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let c = r.countermodel.ok_or("translated 5 valid over euclidean frames")?;
    ensure(
        FrameClass::Euclidean.contains(&c.frame),
        "countermodel frame not euclidean",
    )?;
    let m = Model::new(c.frame.clone(), c.valuation.clone()).map_err(|e| e.to_string())?;
    ensure(
        !eval_ri(&m, &c.world, &five).map_err(|e| e.to_string())?,
        "countermodel re-evaluates to true",
    )?;
    ensure(
        !frame_valid(&c.frame, &five, &Budget::default()).unwrap().holds(),
        "frame validates the formula",
    )?;
    Ok(format!("countermodel at {} on {}", c.world, c.frame.to_json()))
}

fn proof_golden() -> Outcome {
    let g = golden::congruence();
    let t = check_proof(&g.proof, &g.system).map_err(|e| format!("congruence: {e}"))?;
    ensure(
        t == parse_ri("o p -> o q").unwrap(),
        format!("congruence proves {t}"),
    )?;
    let b0 = check_proof(&golden::b0_proof(), &AxiomSystem::k_circ()).map_err(|e| e.to_string())?;
    ensure(b0 == RIFormula::Top.circ(), "b0 proof")?;
    let mut rejected = Vec::new();
    for m in golden::mutants() {
        match check_proof(&m.proof, &m.system) {
            Ok(_) => return Err(format!("{} accepted", m.name)),
            Err(e) if e.line == m.line && e.reason == m.reason => {
                rejected.push(format!("{} at {}", m.name, e.line))
            }
            Err(e) => return Err(format!("{} rejected at {e}, expected line {}", m.name, m.line)),
        }
    }
    Ok(format!(
        "congruence ({} lines) and b0 check; rejected {}",
        g.proof.len(),
        rejected.join(", ")
    ))
}

fn t_collapse() -> Outcome {
    let t_sys = translate_axiomatization(&[parse_box("box p -> p").unwrap()]);
    ensure(t_sys.extras.len() == 1, "one extra schema")?;
    let extra: &Schema = &t_sys.extras[0];
    ensure(
        taut_check(&extra.pattern).unwrap(),
        format!("{} is not a tautology", extra.pattern),
    )?;

    // The same golden theorems, in both systems.
    let proofs: Vec<_> = golden::golden_set()
        .into_iter()
        .chain(golden::necessitated_set())
        .collect();
    let mut k_set = BTreeSet::new();
    let mut t_set = BTreeSet::new();
    for g in &proofs {
        k_set.insert(check_proof(&g.proof, &AxiomSystem::k_circ()).map_err(|e| format!("{}: {e}", g.name))?);
        t_set.insert(check_proof(&g.proof, &t_sys).map_err(|e| format!("{}: {e}", g.name))?);
    }
    ensure(k_set == t_set, "theorem sets differ")?;

    // A proof that uses the extra schema goes through in the base system
    // once each extra line is justified as a tautology instead.
    let mut extra_uses = 0;
    for f in corpus::ri_formulas(&["p", "q"], 5, 2, false) {
        let phi = [("phi".to_string(), f.clone())].into();
        let mut p = golden::necessitate(&{
            let mut p = riml::proof::Proof::new();
            p.push(extra.instantiate(&phi), Justification::Extra(1));
            p
        });
        let in_t = check_proof(&p, &t_sys).map_err(|e| e.to_string())?;
        for line in &mut p.lines {
            if line.justification == Justification::Extra(1) {
                line.justification = Justification::Tautology;
                extra_uses += 1;
            }
        }
        let in_k = check_proof(&p, &AxiomSystem::k_circ()).map_err(|e| format!("{f}: {e}"))?;
        ensure(in_t == in_k, "different theorems")?;
    }
    Ok(format!("extra {} is a tautology; {} golden theorems in both systems; {} extra-axiom proofs replayed in the base system", extra.pattern, k_set.len(), extra_uses))
}

fn evenly<T: Clone>(xs: &[T], n: usize) -> Vec<T> {
    (0..n).map(|i| xs[i * xs.len() / n].clone()).collect()
}

fn round_trip_and_determinism() -> Outcome {
    let ri = evenly(&corpus::ri_formulas(&["p", "q", "r"], 7, 7, true), 1000);
    let bx = evenly(&corpus::box_formulas(&["p", "q", "r"], 7, 7), 1000);
    for f in &ri {
        for style in [PrintStyle::Plain, PrintStyle::Sugared] {
            let text = print_ri(f, style);
            ensure(
                parse_ri(&text).as_ref() == Ok(f),
                format!("{text} does not round-trip"),
            )?;
        }
    }
    for f in &bx {
        for style in [PrintStyle::Plain, PrintStyle::Sugared] {
            let text = print_box(f, style);
            ensure(
                parse_box(&text).as_ref() == Ok(f),
                format!("{text} does not round-trip"),
            )?;
        }
    }

    let mut reports = 0;
    for text in [
        "(o p & p) -> o (o p & p)",
        "p | o p",
        "o (p | q) -> (o p | o q)",
        "star p -> p",
    ] {
        let f = parse_ri(text).unwrap();
        for q in [
            ClassQuery::new(FrameClass::All, 3),
            ClassQuery::new(FrameClass::Euclidean, 3),
            ClassQuery::new(FrameClass::Transitive, 3).mirror_closed(),
        ] {
            let runs: Vec<String> = [1, 1, 2, 3, 4, 8]
                .iter()
                .map(|&w| {
                    valid_over_class(&f, &q, &SearchOptions::default().with_workers(w))
                        .unwrap()
                        .to_json()
                })
                .collect();
            ensure(
                runs.iter().all(|r| r == &runs[0]),
                format!("{text}: reports differ across worker counts"),
            )?;
            reports += 1;
        }
    }
    let cli = |w: &str| {
        riml::cli::run(
            [
                "riml",
                "--json",
                "--workers",
                w,
                "valid",
                "o p -> o o p",
                "--class",
                "serial",
            ],
            b"",
        )
    };
    ensure(
        cli("1") == cli("4") && cli("1") == cli("1"),
        "CLI output differs across worker counts",
    )?;
    Ok(format!("{} circle and {} box formulas round-trip in both styles; {reports} reports byte-identical over 1-8 workers", ri.len(), bx.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("mirror invariance", mirror_invariance),
        ("bridge lemma", bridge),
        ("all vs reflexive agreement", comp_t),
        ("soundness of the base system", soundness),
        ("K4 circle axiom", k4_circle),
        ("euclidean non-robustness", euclidean_robustness),
        ("translated 5 fails on euclidean frames", five_fails),
        ("proof checker golden suite", proof_golden),
        ("T collapse", t_collapse),
        ("round trip and determinism", round_trip_and_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
