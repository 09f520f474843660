//! Bounded, exhaustive checks of the main metatheorems.
//!
//! Each suite walks every frame up to a world bound and every valuation of
//! the corpus variables, and counts the instances where the theorem's
//! claim fails. A passing suite is evidence up to the bound, nothing more.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::budget::Budget;
use crate::decide::corpus::{self, DEFAULT_VARS};
use crate::decide::{self, compare_class_validity, valid_over_class, ClassQuery, DecideError, SearchOptions};
use crate::formula::{circ_translate, parse_box, parse_ri, RIFormula};
use crate::frames::{mirror_reductions, reflexive_closure, FrameClass};
use crate::kripke::{valuation_masks, Frame, Program};
use crate::proof::{check_proof, golden};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    MirrorInvariance,
    Bridge,
    CompT,
    Soundness,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::MirrorInvariance,
        Suite::Bridge,
        Suite::CompT,
        Suite::Soundness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MirrorInvariance => "mirror-invariance",
            Suite::Bridge => "bridge",
            Suite::CompT => "compT",
            Suite::Soundness => "soundness",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetaOptions {
    pub max_worlds: usize,
    pub max_depth: usize,
    pub search: SearchOptions,
}

impl Default for MetaOptions {
    fn default() -> Self {
        MetaOptions {
            max_worlds: 3,
            max_depth: corpus::DEFAULT_MAX_DEPTH,
            search: SearchOptions::default(),
        }
    }
}

impl MetaOptions {
    pub fn with_max_worlds(mut self, n: usize) -> Self {
        self.max_worlds = n;
        self
    }

    pub fn with_max_depth(mut self, d: usize) -> Self {
        self.max_depth = d;
        self
    }

    pub fn with_search(mut self, search: SearchOptions) -> Self {
        self.search = search;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_worlds: usize,
    pub max_depth: usize,
    pub formulas: usize,
    pub instances: u64,
    pub violations: u64,
    pub pass: bool,
    pub first_violation: Option<String>,
    /// Observations that are reported but not part of the verdict.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, opts: &MetaOptions, formulas: usize) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            max_worlds: opts.max_worlds,
            max_depth: opts.max_depth,
            formulas,
            instances: 0,
            violations: 0,
            pass: true,
            first_violation: None,
            notes: Vec::new(),
        }
    }

    fn violation(&mut self, describe: impl FnOnce() -> String) {
        self.violations += 1;
        self.pass = false;
        if self.first_violation.is_none() {
            self.first_violation = Some(describe());
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} formulas, {} instances, {} violations (worlds <= {}, depth <= {})",
            self.suite, self.formulas, self.instances, self.violations, self.max_worlds, self.max_depth
        )?;
        if self.pass {
            write!(f, "\n  PASS: all instances agree")?;
        } else {
            write!(
                f,
                "\n  FAIL: {} of {} instances disagree",
                self.violations, self.instances
            )?;
            if let Some(v) = &self.first_violation {
                write!(f, "\n  first violation: {v}")?;
            }
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, opts: &MetaOptions) -> Result<SuiteReport, DecideError> {
    if opts.max_worlds == 0 {
        return Err(DecideError::ZeroWorlds);
    }
    match suite {
        Suite::MirrorInvariance => mirror_invariance(opts),
        Suite::Bridge => bridge(opts),
        Suite::CompT => comp_t(opts),
        Suite::Soundness => soundness(opts),
    }
}

fn compile<F: crate::kripke::Evaluable>(fs: &[F]) -> (Program, Vec<usize>) {
    let mut prog = Program::with_vars(DEFAULT_VARS);
    let roots = fs.iter().map(|f| prog.add(f)).collect();
    (prog, roots)
}

fn check_budget(opts: &MetaOptions, budget: &Budget) -> Result<(), DecideError> {
    for n in 1..=opts.max_worlds {
        budget.check_pow2("frames", (n * n) as u32)?;
        budget.check_pow2("valuations", (n * DEFAULT_VARS.len()) as u32)?;
        budget.check_pow2("mirror reductions", n as u32)?;
    }
    Ok(())
}

fn describe_model(frame: &Frame, val: &[u64]) -> String {
    let val: Vec<String> = DEFAULT_VARS
        .iter()
        .zip(val)
        .map(|(v, m)| format!("{v}={:?}", frame_names(frame, *m)))
        .collect();
    format!("frame {} with {}", frame.to_json(), val.join(", "))
}

fn frame_names(frame: &Frame, mask: u64) -> Vec<&str> {
    (0..frame.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| frame.world(i))
        .collect()
}

/// Counts formulas whose truth sets differ between `base` and `other`
/// across every model on a mirror reduction of every frame.
struct MirrorCount {
    instances: u64,
    violations: u64,
    first: Option<String>,
}

fn mirror_count<F: crate::kripke::Evaluable + fmt::Display>(
    fs: &[F],
    opts: &MetaOptions,
) -> Result<MirrorCount, DecideError> {
    let budget = opts.search.budget;
    let (prog, roots) = compile(fs);
    let mut count = MirrorCount {
        instances: 0,
        violations: 0,
        first: None,
    };
    let (mut base, mut reduced, mut val) = (Vec::new(), Vec::new(), Vec::new());
    for n in 1..=opts.max_worlds {
        for frame in decide::enumerate_frames(n, &budget)? {
            let reductions = mirror_reductions(&frame, &budget)?;
            for k in 0..1u64 << (n * DEFAULT_VARS.len()) {
                valuation_masks(n, DEFAULT_VARS.len(), k, &mut val);
                prog.run(&frame, &val, &mut base);
                for r in &reductions[1..] {
                    prog.run(r, &val, &mut reduced);
                    count.instances += roots.len() as u64;
                    if base == reduced {
                        continue;
                    }
                    for (i, &root) in roots.iter().enumerate() {
                        if base[root] != reduced[root] {
                            count.violations += 1;
                            count.first.get_or_insert_with(|| {
                                format!(
                                    "{} on {} and its reduction {}",
                                    fs[i],
                                    describe_model(&frame, &val),
                                    r.to_json()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

/// Pointwise circle-semantics truth agrees between every frame and each of
/// its mirror reductions. `star` formulas are reported in a note.
fn mirror_invariance(opts: &MetaOptions) -> Result<SuiteReport, DecideError> {
    check_budget(opts, &opts.search.budget)?;
    let fs = corpus::ri_corpus(opts.max_depth);
    let mut report = SuiteReport::new(Suite::MirrorInvariance, opts, fs.len());
    let counted = mirror_count(&fs, opts)?;
    report.instances = counted.instances;
    report.violations = counted.violations;
    report.pass = counted.violations == 0;
    report.first_violation = counted.first;

    let star: Vec<RIFormula> = corpus::ri_formulas(&DEFAULT_VARS, 5, opts.max_depth, true)
        .into_iter()
        .filter(|f| !f.is_star_free())
        .collect();
    let star_count = mirror_count(&star, opts)?;
    report.notes.push(format!(
        "star formulas (size <= 5, not asserted): {} of {} instances differ{}",
        star_count.violations,
        star_count.instances,
        star_count
            .first
            .map(|f| format!("; first: {f}"))
            .unwrap_or_default()
    ));
    Ok(report)
}

/// Circle truth of a translation on a model equals box truth of the source
/// on the reflexive closure of that model.
fn bridge(opts: &MetaOptions) -> Result<SuiteReport, DecideError> {
    let budget = opts.search.budget;
    check_budget(opts, &budget)?;
    let fs = corpus::box_corpus(opts.max_depth);
    let translated: Vec<RIFormula> = fs.iter().map(circ_translate).collect();
    let (box_prog, box_roots) = compile(&fs);
    let (ri_prog, ri_roots) = compile(&translated);
    let mut report = SuiteReport::new(Suite::Bridge, opts, fs.len());
    let (mut on_closure, mut on_frame, mut val) = (Vec::new(), Vec::new(), Vec::new());
    for n in 1..=opts.max_worlds {
        for frame in decide::enumerate_frames(n, &budget)? {
            let closure = reflexive_closure(&frame);
            for k in 0..1u64 << (n * DEFAULT_VARS.len()) {
                valuation_masks(n, DEFAULT_VARS.len(), k, &mut val);
                box_prog.run(&closure, &val, &mut on_closure);
                ri_prog.run(&frame, &val, &mut on_frame);
                for (i, (&b, &r)) in box_roots.iter().zip(&ri_roots).enumerate() {
                    report.instances += 1;
                    if on_closure[b] != on_frame[r] {
                        report.violation(|| format!("{} on {}", fs[i], describe_model(&frame, &val)));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Validity over all frames and over reflexive frames coincide for circle
/// formulas.
fn comp_t(opts: &MetaOptions) -> Result<SuiteReport, DecideError> {
    let fs = corpus::ri_corpus(opts.max_depth);
    let all = ClassQuery::new(FrameClass::All, opts.max_worlds);
    let reflexive = ClassQuery::new(FrameClass::Reflexive, opts.max_worlds);
    let mut report = SuiteReport::new(Suite::CompT, opts, fs.len());
    let mut valid = 0;
    for f in &fs {
        let cmp = compare_class_validity(f, &all, &reflexive, &opts.search)?;
        report.instances += 1;
        match cmp {
            decide::Comparison::Agree { verdict } => {
                if verdict == decide::ReportVerdict::ValidUpToBound {
                    valid += 1;
                }
            }
            decide::Comparison::Disagree { .. } => {
                report.violation(|| format!("{f}: {}", serde_json::to_string(&cmp).unwrap_or_default()))
            }
        }
    }
    report.notes.push(format!(
        "{valid} formulas valid on both classes, the rest refuted on both"
    ));
    Ok(report)
}

/// The formulas the soundness suite checks over all frames, with labels.
pub fn soundness_targets() -> Vec<(String, RIFormula)> {
    let mut out = Vec::new();
    for f in corpus::base_schema_instances(&DEFAULT_VARS) {
        out.push((format!("instance {f}"), f));
    }
    let k = parse_box("box (p -> q) -> (box p -> box q)").expect("K schema parses");
    out.push(("translated K".to_string(), circ_translate(&k)));
    for (i, s) in [
        "((o p & p) | (o q & q)) -> o (p | q)",
        "p | o p",
        "p -> (o (p -> q) -> (o p -> o q))",
    ]
    .iter()
    .enumerate()
    {
        out.push((format!("theorem {}", i + 1), parse_ri(s).expect("theorem parses")));
    }
    out
}

/// Everything the base proof system proves in the golden set, and the
/// base schemata and theorems, hold on every frame.
fn soundness(opts: &MetaOptions) -> Result<SuiteReport, DecideError> {
    let mut targets = soundness_targets();
    let mut proof_failures = Vec::new();
    let proved = golden::golden_set().into_iter().map(|g| ("proved", g));
    let necessitated = golden::necessitated_set()
        .into_iter()
        .map(|g| ("necessitated", g));
    for (how, g) in proved.chain(necessitated) {
        match check_proof(&g.proof, &g.system) {
            Ok(t) => targets.push((format!("{how} {}", g.name), t)),
            Err(e) => proof_failures.push(format!("{how} {}: {e}", g.name)),
        }
    }
    let mut report = SuiteReport::new(Suite::Soundness, opts, targets.len());
    for failure in proof_failures {
        report.instances += 1;
        report.violation(|| format!("golden proof rejected: {failure}"));
    }
    let all = ClassQuery::new(FrameClass::All, opts.max_worlds);
    let mut frames_checked = 0;
    for (label, f) in &targets {
        let r = valid_over_class(f, &all, &opts.search)?;
        report.instances += 1;
        frames_checked += r.frames_checked;
        if !r.is_valid() {
            report.violation(|| format!("{label}: {f} has countermodel {}", r.to_json()));
        }
    }
    report
        .notes
        .push(format!("{frames_checked} frame checks over all frames"));
    Ok(report)
}
