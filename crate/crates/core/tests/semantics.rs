//! Semantic properties on random models, checked against the pointwise
//! recursive truth definition.

mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use riml::frames::{
    check_morphism, generated_subframe, irreflexive_part, is_generated_subframe, mirror_reductions,
    reflexive_closure, FrameClass, WorldMap,
};
use riml::kripke::{frame_valid, Evaluable, Program};
use riml::{circ_translate, Budget, Frame, Model};

use common::{box_formula, frame, frame_from_masks, model, ri_formula, valuation};

fn truth_set<F: Evaluable>(m: &Model, f: &F) -> u64 {
    (0..m.frame().len())
        .filter(|&w| f.holds(m, w))
        .fold(0, |acc, w| acc | 1 << w)
}

fn program_truth_set<F: Evaluable>(m: &Model, f: &F) -> u64 {
    let (prog, root) = Program::single(f);
    let mut out = Vec::new();
    prog.run_on_model(m, &mut out);
    out[root]
}

/// Restriction of a model to the worlds of `sub`, a subframe with the same
/// world names.
fn restrict(m: &Model, sub: &Frame) -> Model {
    let idx: Vec<usize> = sub
        .worlds()
        .iter()
        .map(|w| m.frame().index_of(w).unwrap())
        .collect();
    let val: BTreeMap<String, u64> = m
        .valuation()
        .keys()
        .map(|v| {
            let mask = m.truth_set(v);
            let sub_mask = idx
                .iter()
                .enumerate()
                .fold(0, |acc, (i, &j)| acc | (mask >> j & 1) << i);
            (v.clone(), sub_mask)
        })
        .collect();
    Model::from_masks(sub.clone(), val)
}

/// A bounded morphism from a frame on `n1` worlds onto `dst`: the first
/// `dst.len()` worlds map to themselves, the rest anywhere; each world's
/// successors hit every successor of its image at least once.
fn morphism_source(dst: &Frame, extra: &[usize], picks: &[u64]) -> (Frame, WorldMap) {
    let n2 = dst.len();
    let images: Vec<usize> = (0..n2).chain(extra.iter().map(|&e| e % n2)).collect();
    let n1 = images.len();
    let fibre = |z: usize| (0..n1).filter(|&x| images[x] == z).collect::<Vec<_>>();
    let succ = (0..n1)
        .map(|x| {
            let mut s = 0u64;
            for z in 0..n2 {
                if dst.related(images[x], z) {
                    let f = fibre(z);
                    let bits = picks[(x * n2 + z) % picks.len()];
                    let chosen: Vec<usize> = f
                        .iter()
                        .copied()
                        .enumerate()
                        .filter(|(i, _)| bits >> i & 1 == 1)
                        .map(|(_, y)| y)
                        .collect();
                    if chosen.is_empty() {
                        s |= 1 << f[0];
                    } else {
                        s = chosen.iter().fold(s, |acc, &y| acc | 1 << y);
                    }
                }
            }
            s
        })
        .collect();
    (frame_from_masks(succ), WorldMap::from_images(images))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn compiled_and_pointwise_evaluation_agree(m in model(5), f in ri_formula(5, true), g in box_formula(5)) {
        prop_assert_eq!(program_truth_set(&m, &f), truth_set(&m, &f));
        prop_assert_eq!(program_truth_set(&m, &g), truth_set(&m, &g));
    }

    #[test]
    fn circle_truth_survives_mirror_reduction(m in model(5), f in ri_formula(5, false)) {
        let base = truth_set(&m, &f);
        for r in mirror_reductions(m.frame(), &Budget::default()).unwrap() {
            prop_assert_eq!(truth_set(&m.with_frame(r), &f), base);
        }
    }

    #[test]
    fn bridge_on_random_models(m in model(5), f in box_formula(5)) {
        let closed = m.with_frame(reflexive_closure(m.frame()));
        prop_assert_eq!(truth_set(&m, &circ_translate(&f)), truth_set(&closed, &f));
    }

    #[test]
    fn truth_is_local_to_generated_subframes(m in model(5), roots in 1u64..32, f in ri_formula(4, true), g in box_formula(4)) {
        let sub = generated_subframe(m.frame(), roots);
        prop_assume!(sub.is_some());
        let sub = sub.unwrap();
        prop_assert!(is_generated_subframe(&sub, m.frame()));
        let small = restrict(&m, &sub);
        for (i, w) in sub.worlds().iter().enumerate() {
            let j = m.frame().index_of(w).unwrap();
            prop_assert_eq!(f.holds(&small, i), f.holds(&m, j));
            prop_assert_eq!(g.holds(&small, i), g.holds(&m, j));
        }
    }

    #[test]
    fn bounded_morphisms_preserve_truth(
        dst in frame(3),
        extra in prop::collection::vec(0usize..3, 0..3),
        picks in prop::collection::vec(0u64..16, 1..12),
        f in ri_formula(4, true),
        g in box_formula(4),
    ) {
        let (src, map) = morphism_source(&dst, &extra, &picks);
        let check = check_morphism(&src, &dst, &map);
        prop_assert!(check.forth && check.back && check.surjective);
        // Pull a valuation on the target back along the map.
        let val2: BTreeMap<String, u64> = ["p", "q", "r"].iter().enumerate()
            .map(|(i, v)| (v.to_string(), (picks[i % picks.len()] * 7 + i as u64) & dst.all()))
            .collect();
        let val1 = val2.iter()
            .map(|(v, &mask)| (v.clone(), (0..src.len()).filter(|&x| mask >> map.image(x) & 1 == 1).fold(0, |a, x| a | 1 << x)))
            .collect();
        let m1 = Model::from_masks(src.clone(), val1);
        let m2 = Model::from_masks(dst.clone(), val2);
        for x in 0..src.len() {
            prop_assert_eq!(f.holds(&m1, x), f.holds(&m2, map.image(x)));
            prop_assert_eq!(g.holds(&m1, x), g.holds(&m2, map.image(x)));
        }
    }

    #[test]
    fn class_predicates_match_first_order_definitions(f in frame(5)) {
        let n = f.len();
        let r = |a: usize, b: usize| f.related(a, b);
        let ws = || 0..n;
        let reflexive = ws().all(|x| r(x, x));
        let serial = ws().all(|x| ws().any(|y| r(x, y)));
        let transitive = ws().all(|x| ws().all(|y| ws().all(|z| !(r(x, y) && r(y, z)) || r(x, z))));
        let symmetric = ws().all(|x| ws().all(|y| !r(x, y) || r(y, x)));
        let euclidean = ws().all(|x| ws().all(|y| ws().all(|z| !(r(x, y) && r(x, z)) || r(y, z))));
        let fin = ws().all(|x| ws().any(|y| r(x, y) && ws().all(|z| !r(y, z) || z == y)));
        prop_assert_eq!(FrameClass::All.contains(&f), true);
        prop_assert_eq!(FrameClass::Reflexive.contains(&f), reflexive);
        prop_assert_eq!(FrameClass::Serial.contains(&f), serial);
        prop_assert_eq!(FrameClass::Transitive.contains(&f), transitive);
        prop_assert_eq!(FrameClass::Symmetric.contains(&f), symmetric);
        prop_assert_eq!(FrameClass::Euclidean.contains(&f), euclidean);
        prop_assert_eq!(FrameClass::Final.contains(&f), fin);
        prop_assert_eq!(FrameClass::Equivalence.contains(&f), reflexive && symmetric && transitive);
    }

    #[test]
    fn closure_and_irreflexive_part(f in frame(6)) {
        let c = reflexive_closure(&f);
        prop_assert!(FrameClass::Reflexive.contains(&c));
        prop_assert_eq!(reflexive_closure(&c), c.clone());
        prop_assert_eq!(irreflexive_part(&c), irreflexive_part(&f));
        prop_assert_eq!(irreflexive_part(&f).diagonal(), 0);
        let reductions = mirror_reductions(&f, &Budget::default()).unwrap();
        prop_assert_eq!(reductions.len(), 1 << f.diagonal().count_ones());
        prop_assert_eq!(reductions.first().unwrap(), &f);
        prop_assert_eq!(reductions.last().unwrap(), &irreflexive_part(&f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    // Frame validity transfers down to generated subframes and forward
    // along surjective bounded morphisms.
    #[test]
    fn validity_preservation(
        dst in frame(3),
        extra in prop::collection::vec(0usize..3, 0..2),
        picks in prop::collection::vec(0u64..16, 1..12),
        roots in 1u64..16,
        f in ri_formula(3, false),
        g in box_formula(3),
    ) {
        let budget = Budget::default();
        let (src, _) = morphism_source(&dst, &extra, &picks);
        if frame_valid(&src, &f, &budget).unwrap().holds() {
            prop_assert!(frame_valid(&dst, &f, &budget).unwrap().holds());
        }
        if frame_valid(&src, &g, &budget).unwrap().holds() {
            prop_assert!(frame_valid(&dst, &g, &budget).unwrap().holds());
        }
        if let Some(sub) = generated_subframe(&src, roots) {
            if frame_valid(&src, &f, &budget).unwrap().holds() {
                prop_assert!(frame_valid(&sub, &f, &budget).unwrap().holds());
            }
            if frame_valid(&src, &g, &budget).unwrap().holds() {
                prop_assert!(frame_valid(&sub, &g, &budget).unwrap().holds());
            }
        }
    }

    #[test]
    fn valuation_order_is_irrelevant_outside_variables(f in frame(4), v in valuation(4)) {
        // Extra variables in the valuation do not change truth.
        let m = Model::from_masks(f.clone(), v.clone());
        let mut more = v;
        more.insert("zz".to_string(), f.all());
        let m2 = Model::from_masks(f, more);
        let phi = riml::parse_ri("o (p -> q) & star r").unwrap();
        prop_assert_eq!(truth_set(&m, &phi), truth_set(&m2, &phi));
    }
}
