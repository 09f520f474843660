//! Finite Kripke frames and models, the two truth definitions, and
//! model- and frame-level validity.
//!
//! Worlds are kept in a fixed order and relations are stored as one
//! successor bitmask per world, so frames hold at most 64 worlds.

mod eval;
mod valid;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use eval::{eval_box, eval_ri, Evaluable, Op, Program};
pub(crate) use valid::{decode_valuation, first_failure, valuation_masks};
pub use valid::{frame_valid, model_valid, Verdict, Witness};

pub const MAX_WORLDS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("a frame needs at least one world")]
    EmptyFrame,
    #[error("frames hold at most {MAX_WORLDS} worlds, got {0}")]
    TooManyWorlds(usize),
    #[error("world `{0}` is listed twice")]
    DuplicateWorld(String),
    #[error("pair ({0}, {1}) is listed twice")]
    DuplicatePair(String, String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("invalid frame/model JSON: {0}")]
    Json(String),
}

/// A finite frame: an ordered, nonempty set of worlds and a relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    worlds: Arc<[String]>,
    succ: Vec<u64>,
}

impl Frame {
    pub fn new<W, S>(worlds: W, rel: impl IntoIterator<Item = (S, S)>) -> Result<Self, KripkeError>
    where
        W: IntoIterator,
        W::Item: Into<String>,
        S: AsRef<str>,
    {
        let worlds: Vec<String> = worlds.into_iter().map(Into::into).collect();
        if worlds.is_empty() {
            return Err(KripkeError::EmptyFrame);
        }
        if worlds.len() > MAX_WORLDS {
            return Err(KripkeError::TooManyWorlds(worlds.len()));
        }
        for (i, w) in worlds.iter().enumerate() {
            if worlds[..i].contains(w) {
                return Err(KripkeError::DuplicateWorld(w.clone()));
            }
        }
        let mut frame = Frame {
            succ: vec![0; worlds.len()],
            worlds: worlds.into(),
        };
        for (a, b) in rel {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = frame.index_of(a)?;
            let j = frame.index_of(b)?;
            if frame.related(i, j) {
                return Err(KripkeError::DuplicatePair(a.to_string(), b.to_string()));
            }
            frame.succ[i] |= 1 << j;
        }
        Ok(frame)
    }

    /// Builds a frame from successor masks. Bits beyond the world count
    /// are dropped.
    pub fn from_successors(worlds: Arc<[String]>, mut succ: Vec<u64>) -> Self {
        assert!(!worlds.is_empty() && worlds.len() <= MAX_WORLDS);
        assert_eq!(worlds.len(), succ.len());
        let all = all_mask(worlds.len());
        for s in &mut succ {
            *s &= all;
        }
        Frame { worlds, succ }
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub(crate) fn shared_worlds(&self) -> Arc<[String]> {
        Arc::clone(&self.worlds)
    }

    pub fn world(&self, i: usize) -> &str {
        &self.worlds[i]
    }

    pub fn index_of(&self, world: &str) -> Result<usize, KripkeError> {
        self.worlds
            .iter()
            .position(|w| w == world)
            .ok_or_else(|| KripkeError::UnknownWorld(world.to_string()))
    }

    /// Bitmask of all worlds.
    pub fn all(&self) -> u64 {
        all_mask(self.len())
    }

    pub fn successors(&self, i: usize) -> u64 {
        self.succ[i]
    }

    pub fn successor_masks(&self) -> &[u64] {
        &self.succ
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.succ[i] >> j & 1 == 1
    }

    /// Pairs of the relation in (source, target) index order.
    pub fn pairs(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.related(i, j) {
                    out.push((self.world(i), self.world(j)));
                }
            }
        }
        out
    }

    /// Bitmask of worlds carrying a reflexive arrow.
    pub fn diagonal(&self) -> u64 {
        (0..self.len())
            .filter(|&i| self.related(i, i))
            .fold(0, |acc, i| acc | 1 << i)
    }

    pub(crate) fn names(&self, mask: u64) -> Vec<String> {
        (0..self.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.worlds[i].clone())
            .collect()
    }

    pub fn to_file(&self) -> FrameFile {
        FrameFile {
            worlds: self.worlds.to_vec(),
            rel: self
                .pairs()
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            val: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("frame serializes")
    }

    /// Parses a bare frame. A `val` key, if present, is rejected.
    pub fn from_json(text: &str) -> Result<Self, KripkeError> {
        let file: FrameFile = serde_json::from_str(text).map_err(|e| KripkeError::Json(e.to_string()))?;
        if file.val.is_some() {
            return Err(KripkeError::Json("a bare frame cannot carry `val`".to_string()));
        }
        file.frame()
    }
}

pub(crate) fn all_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A model: a frame plus a valuation. Variables missing from the
/// valuation are false everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    frame: Frame,
    valuation: BTreeMap<String, u64>,
}

impl Model {
    pub fn new<S: AsRef<str>>(
        frame: Frame,
        valuation: impl IntoIterator<Item = (impl Into<String>, Vec<S>)>,
    ) -> Result<Self, KripkeError> {
        let mut masks = BTreeMap::new();
        for (var, worlds) in valuation {
            let mut mask = 0u64;
            for w in worlds {
                mask |= 1 << frame.index_of(w.as_ref())?;
            }
            masks.insert(var.into(), mask);
        }
        Ok(Model {
            frame,
            valuation: masks,
        })
    }

    pub fn from_masks(frame: Frame, valuation: BTreeMap<String, u64>) -> Self {
        let all = frame.all();
        let valuation = valuation.into_iter().map(|(k, v)| (k, v & all)).collect();
        Model { frame, valuation }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Truth set of a variable as a world bitmask.
    pub fn truth_set(&self, var: &str) -> u64 {
        self.valuation.get(var).copied().unwrap_or(0)
    }

    pub fn valuation(&self) -> BTreeMap<String, Vec<String>> {
        self.valuation
            .iter()
            .map(|(k, &v)| (k.clone(), self.frame.names(v)))
            .collect()
    }

    /// The same valuation over another frame on the same worlds.
    pub fn with_frame(&self, frame: Frame) -> Model {
        assert_eq!(
            frame.worlds(),
            self.frame.worlds(),
            "frames must share their worlds"
        );
        Model {
            frame,
            valuation: self.valuation.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut file = self.frame.to_file();
        file.val = Some(self.valuation());
        serde_json::to_string(&file).expect("model serializes")
    }

    /// Parses a model; `val` may be omitted for the empty valuation.
    pub fn from_json(text: &str) -> Result<Self, KripkeError> {
        let file: FrameFile = serde_json::from_str(text).map_err(|e| KripkeError::Json(e.to_string()))?;
        let frame = file.frame()?;
        Model::new(frame, file.val.unwrap_or_default())
    }
}

/// On-disk frame/model format:
/// `{"worlds": ["x","y"], "rel": [["x","y"]], "val": {"p": ["x"]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub worlds: Vec<String>,
    #[serde(default)]
    pub rel: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub val: Option<BTreeMap<String, Vec<String>>>,
}

impl FrameFile {
    pub fn frame(&self) -> Result<Frame, KripkeError> {
        Frame::new(self.worlds.iter().cloned(), self.rel.iter().map(|(a, b)| (a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_invariants() {
        assert_eq!(
            Frame::new(Vec::<String>::new(), Vec::<(&str, &str)>::new()),
            Err(KripkeError::EmptyFrame)
        );
        assert_eq!(
            Frame::new(["x", "x"], Vec::<(&str, &str)>::new()),
            Err(KripkeError::DuplicateWorld("x".into()))
        );
        assert_eq!(
            Frame::new(["x"], [("x", "y")]),
            Err(KripkeError::UnknownWorld("y".into()))
        );
        assert_eq!(
            Frame::new(["x"], [("x", "x"), ("x", "x")]),
            Err(KripkeError::DuplicatePair("x".into(), "x".into()))
        );
        let names: Vec<String> = (0..65).map(|i| format!("w{i}")).collect();
        assert_eq!(
            Frame::new(names, Vec::<(&str, &str)>::new()),
            Err(KripkeError::TooManyWorlds(65))
        );
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"worlds":["x","y"],"rel":[["x","y"]],"val":{"p":["x"]}}"#;
        let m = Model::from_json(text).unwrap();
        assert_eq!(m.to_json(), text);
        assert_eq!(m.truth_set("p"), 0b01);
        assert_eq!(m.truth_set("q"), 0);

        let f = Frame::from_json(r#"{"worlds":["x","y"],"rel":[["x","y"],["y","y"]]}"#).unwrap();
        assert_eq!(f.pairs(), vec![("x", "y"), ("y", "y")]);
        assert_eq!(f.diagonal(), 0b10);
    }

    #[test]
    fn json_rejects_unknown_keys_and_bad_worlds() {
        assert!(matches!(
            Frame::from_json(r#"{"worlds":["x"],"rel":[],"colour":1}"#),
            Err(KripkeError::Json(_))
        ));
        assert!(matches!(
            Model::from_json(r#"{"worlds":["x"],"val":{"p":["z"]}}"#),
            Err(KripkeError::UnknownWorld(_))
        ));
        assert!(Frame::from_json(r#"{"worlds":["x"],"val":{}}"#).is_err());
    }
}
