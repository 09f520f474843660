#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use riml::decide::world_names;
use riml::{BoxFormula, Formula, Frame, Model, RIFormula};

pub const VARS: [&str; 3] = ["p", "q", "r"];

pub fn ri_formula(depth: u32, with_star: bool) -> impl Strategy<Value = RIFormula> {
    let leaf = prop_oneof![
        8 => prop::sample::select(&VARS[..]).prop_map(RIFormula::var),
        1 => Just(RIFormula::Top),
    ];
    leaf.prop_recursive(depth, 24, 2, move |inner| {
        let mut ops = vec![
            inner.clone().prop_map(RIFormula::not).boxed(),
            inner.clone().prop_map(RIFormula::circ).boxed(),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)).boxed(),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| a.implies(b))
                .boxed(),
        ];
        if with_star {
            ops.push(inner.prop_map(RIFormula::star).boxed());
        }
        prop::strategy::Union::new(ops)
    })
}

pub fn box_formula(depth: u32) -> impl Strategy<Value = BoxFormula> {
    let leaf = prop_oneof![
        8 => prop::sample::select(&VARS[..]).prop_map(BoxFormula::var),
        1 => Just(BoxFormula::Top),
    ];
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(BoxFormula::not),
            inner.clone().prop_map(BoxFormula::boxed),
            inner.clone().prop_map(BoxFormula::dia),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.or(b)),
        ]
    })
}

pub fn frame_from_masks(succ: Vec<u64>) -> Frame {
    let names: Arc<[String]> = world_names(succ.len());
    Frame::from_successors(names, succ)
}

/// A frame on 1..=max_n worlds named w1..wn.
pub fn frame(max_n: usize) -> impl Strategy<Value = Frame> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(0u64..1 << n, n).prop_map(frame_from_masks))
}

pub fn valuation(n: usize) -> impl Strategy<Value = BTreeMap<String, u64>> {
    prop::collection::vec(0u64..1 << n, VARS.len())
        .prop_map(|masks| VARS.iter().map(|v| v.to_string()).zip(masks).collect())
}

pub fn model(max_n: usize) -> impl Strategy<Value = Model> {
    frame(max_n).prop_flat_map(|f| {
        let n = f.len();
        valuation(n).prop_map(move |v| Model::from_masks(f.clone(), v))
    })
}
