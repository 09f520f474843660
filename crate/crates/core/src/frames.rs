//! Frame transformations and structural predicates: reflexive closure,
//! mirror reduction, frame classes, robustness under reflexivity,
//! bounded morphisms and generated subframes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::decide::{self, DecideError};
use crate::kripke::{Frame, KripkeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("frames have different world sets")]
    WorldMismatch,
    #[error("world map is not defined on `{0}`")]
    NotTotal(String),
    #[error("world map sends `{0}` outside the target frame")]
    UnknownImage(String),
    #[error("world map mentions `{0}`, which is not a source world")]
    UnknownSource(String),
    #[error("unknown frame class `{0}`")]
    UnknownClass(String),
    #[error("invalid world map JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Kripke(#[from] KripkeError),
}

impl Serialize for Frame {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl FromStr for Frame {
    type Err = KripkeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Frame::from_json(s)
    }
}

/// `R ∪ {(x, x) : x ∈ W}`.
pub fn reflexive_closure(f: &Frame) -> Frame {
    let succ = f
        .successor_masks()
        .iter()
        .enumerate()
        .map(|(i, s)| s | 1 << i)
        .collect();
    Frame::from_successors(f.shared_worlds(), succ)
}

/// The frame with every reflexive arrow removed.
pub fn irreflexive_part(f: &Frame) -> Frame {
    let succ = f
        .successor_masks()
        .iter()
        .enumerate()
        .map(|(i, s)| s & !(1 << i))
        .collect();
    Frame::from_successors(f.shared_worlds(), succ)
}

/// Whether `reduced` arises from `original` by deleting reflexive arrows
/// only. Both frames must list the same worlds.
pub fn is_mirror_reduction(reduced: &Frame, original: &Frame) -> Result<bool, FrameError> {
    if reduced.worlds() != original.worlds() {
        return Err(FrameError::WorldMismatch);
    }
    Ok((0..original.len()).all(|i| {
        let kept = reduced.successors(i);
        let full = original.successors(i);
        kept & !full == 0 && (full & !kept) & !(1 << i) == 0
    }))
}

/// All mirror reductions of `f`. Reduction number `m` removes the
/// reflexive arrows selected by the bits of `m` over the reflexive worlds
/// in world order; the list starts with `f` and ends with its
/// irreflexive part.
pub fn mirror_reductions(f: &Frame, budget: &Budget) -> Result<Vec<Frame>, BudgetExceeded> {
    let loops: Vec<usize> = (0..f.len()).filter(|&i| f.related(i, i)).collect();
    budget.check_pow2("mirror reductions", loops.len() as u32)?;
    Ok((0u64..1 << loops.len())
        .map(|m| {
            let mut succ = f.successor_masks().to_vec();
            for (bit, &w) in loops.iter().enumerate() {
                if m >> bit & 1 == 1 {
                    succ[w] &= !(1 << w);
                }
            }
            Frame::from_successors(f.shared_worlds(), succ)
        })
        .collect())
}

/// Whether two frames are mirror reductions of a common frame: they have
/// the same worlds and agree off the diagonal. The union of the two
/// relations is then the common frame.
pub fn mirror_related(f1: &Frame, f2: &Frame) -> bool {
    let worlds1: BTreeSet<&String> = f1.worlds().iter().collect();
    let worlds2: BTreeSet<&String> = f2.worlds().iter().collect();
    if worlds1 != worlds2 {
        return false;
    }
    let off_diagonal = |f: &Frame| -> BTreeSet<(String, String)> {
        f.pairs()
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    };
    off_diagonal(f1) == off_diagonal(f2)
}

/// A decidable class of finite frames.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FrameClass {
    All,
    Reflexive,
    Serial,
    Transitive,
    Symmetric,
    Euclidean,
    /// Every world sees some world whose only possible successor is itself.
    Final,
    Equivalence,
    Intersection(Vec<FrameClass>),
}

impl FrameClass {
    /// The named (non-intersection) classes, in display order.
    pub const NAMED: [FrameClass; 8] = [
        FrameClass::All,
        FrameClass::Reflexive,
        FrameClass::Serial,
        FrameClass::Transitive,
        FrameClass::Symmetric,
        FrameClass::Euclidean,
        FrameClass::Final,
        FrameClass::Equivalence,
    ];

    pub fn contains(&self, f: &Frame) -> bool {
        self.contains_masks(f.successor_masks())
    }

    pub(crate) fn contains_masks(&self, succ: &[u64]) -> bool {
        let n = succ.len();
        let each = |pred: &dyn Fn(usize, u64) -> bool| (0..n).all(|i| pred(i, succ[i]));
        let targets = |s: u64| (0..n).filter(move |&j| s >> j & 1 == 1);
        match self {
            FrameClass::All => true,
            FrameClass::Reflexive => each(&|i, s| s >> i & 1 == 1),
            FrameClass::Serial => each(&|_, s| s != 0),
            FrameClass::Transitive => each(&|_, s| targets(s).all(|j| succ[j] & !s == 0)),
            FrameClass::Symmetric => each(&|i, s| targets(s).all(|j| succ[j] >> i & 1 == 1)),
            FrameClass::Euclidean => each(&|_, s| targets(s).all(|j| s & !succ[j] == 0)),
            FrameClass::Final => each(&|_, s| targets(s).any(|j| succ[j] & !(1 << j) == 0)),
            FrameClass::Equivalence => [
                FrameClass::Reflexive,
                FrameClass::Symmetric,
                FrameClass::Transitive,
            ]
            .iter()
            .all(|c| c.contains_masks(succ)),
            FrameClass::Intersection(parts) => parts.iter().all(|c| c.contains_masks(succ)),
        }
    }

    /// Membership in the mirror closure of the class: some frame that agrees
    /// with `succ` off the diagonal belongs to the class.
    pub(crate) fn mirror_closure_contains(&self, succ: &[u64]) -> bool {
        let n = succ.len();
        let mut candidate: Vec<u64> = succ.iter().enumerate().map(|(i, s)| s & !(1 << i)).collect();
        (0u64..1 << n).any(|diag| {
            for (i, s) in candidate.iter_mut().enumerate() {
                *s = (*s & !(1 << i)) | (diag >> i & 1) << i;
            }
            self.contains_masks(&candidate)
        })
    }
}

impl fmt::Display for FrameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FrameClass::All => "all",
            FrameClass::Reflexive => "reflexive",
            FrameClass::Serial => "serial",
            FrameClass::Transitive => "transitive",
            FrameClass::Symmetric => "symmetric",
            FrameClass::Euclidean => "euclidean",
            FrameClass::Final => "final",
            FrameClass::Equivalence => "equivalence",
            FrameClass::Intersection(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                return f.write_str(&names.join("+"));
            }
        };
        f.write_str(name)
    }
}

/// Parses a class name, or several joined by `+` for their intersection.
impl FromStr for FrameClass {
    type Err = FrameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_one = |name: &str| {
            FrameClass::NAMED
                .iter()
                .find(|c| c.to_string() == name.trim().to_ascii_lowercase())
                .cloned()
                .ok_or_else(|| FrameError::UnknownClass(name.to_string()))
        };
        let parts: Vec<&str> = s.split('+').collect();
        if parts.len() == 1 {
            return parse_one(parts[0]);
        }
        parts
            .into_iter()
            .map(parse_one)
            .collect::<Result<Vec<_>, _>>()
            .map(FrameClass::Intersection)
    }
}

/// Result of a bounded robustness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Robustness {
    /// No counterexample among frames up to the bound.
    HoldsUpToBound { max_size: usize, frames_checked: u64 },
    /// A class member whose reflexive closure leaves the class.
    Fails { witness: Frame },
}

impl Robustness {
    pub fn holds(&self) -> bool {
        matches!(self, Robustness::HoldsUpToBound { .. })
    }
}

/// Checks that the class contains the reflexive closure of each of its
/// members on at most `max_size` worlds. The witness is the first
/// violating frame in enumeration order.
pub fn robust_under_reflexivity(
    c: &FrameClass,
    max_size: usize,
    budget: &Budget,
) -> Result<Robustness, DecideError> {
    if max_size == 0 {
        return Err(DecideError::ZeroWorlds);
    }
    let mut frames_checked = 0;
    for n in 1..=max_size {
        for f in decide::enumerate_frames(n, budget)? {
            if c.contains(&f) {
                frames_checked += 1;
                if !c.contains(&reflexive_closure(&f)) {
                    return Ok(Robustness::Fails { witness: f });
                }
            }
        }
    }
    Ok(Robustness::HoldsUpToBound {
        max_size,
        frames_checked,
    })
}

/// A total map from the worlds of one frame to the worlds of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorldMap {
    images: Vec<usize>,
}

/// On-disk world map format: `{"map": {"x": "z", "y": "z"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorldMapFile {
    pub map: BTreeMap<String, String>,
}

impl WorldMap {
    pub fn new(src: &Frame, dst: &Frame, map: &BTreeMap<String, String>) -> Result<Self, FrameError> {
        if let Some(extra) = map.keys().find(|k| src.index_of(k).is_err()) {
            return Err(FrameError::UnknownSource(extra.clone()));
        }
        let images = src
            .worlds()
            .iter()
            .map(|w| {
                let image = map.get(w).ok_or_else(|| FrameError::NotTotal(w.clone()))?;
                dst.index_of(image)
                    .map_err(|_| FrameError::UnknownImage(w.clone()))
            })
            .collect::<Result<_, _>>()?;
        Ok(WorldMap { images })
    }

    pub fn from_json(src: &Frame, dst: &Frame, text: &str) -> Result<Self, FrameError> {
        let file: WorldMapFile = serde_json::from_str(text).map_err(|e| FrameError::Json(e.to_string()))?;
        WorldMap::new(src, dst, &file.map)
    }

    pub fn identity(f: &Frame) -> Self {
        WorldMap {
            images: (0..f.len()).collect(),
        }
    }

    /// A map given by world indices: world `i` goes to `images[i]`.
    pub fn from_images(images: Vec<usize>) -> Self {
        WorldMap { images }
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }
}

/// The two bounded-morphism conditions, checked separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MorphismCheck {
    pub forth: bool,
    pub back: bool,
    pub surjective: bool,
}

impl MorphismCheck {
    pub fn is_bounded_morphism(&self) -> bool {
        self.forth && self.back
    }
}

pub fn check_morphism(src: &Frame, dst: &Frame, m: &WorldMap) -> MorphismCheck {
    let n = src.len();
    let image_of = |set: u64| {
        (0..n)
            .filter(|&i| set >> i & 1 == 1)
            .fold(0u64, |acc, i| acc | 1 << m.image(i))
    };
    // forth: x R1 y implies f(x) R2 f(y)
    let forth = (0..n).all(|x| image_of(src.successors(x)) & !dst.successors(m.image(x)) == 0);
    // back: f(x) R2 z implies some x R1 w with f(w) = z
    let back = (0..n).all(|x| dst.successors(m.image(x)) & !image_of(src.successors(x)) == 0);
    let surjective = image_of(src.all()) == dst.all();
    MorphismCheck {
        forth,
        back,
        surjective,
    }
}

pub fn is_bounded_morphism(src: &Frame, dst: &Frame, m: &WorldMap) -> bool {
    check_morphism(src, dst, m).is_bounded_morphism()
}

/// Whether `sub` is a subframe of `sup` closed under `sup`'s successors.
pub fn is_generated_subframe(sub: &Frame, sup: &Frame) -> bool {
    let Ok(embed) = sub
        .worlds()
        .iter()
        .map(|w| sup.index_of(w))
        .collect::<Result<Vec<_>, _>>()
    else {
        return false;
    };
    let restriction =
        (0..sub.len()).all(|a| (0..sub.len()).all(|b| sub.related(a, b) == sup.related(embed[a], embed[b])));
    let covered = embed.iter().fold(0u64, |acc, &i| acc | 1 << i);
    let closed = embed.iter().all(|&i| sup.successors(i) & !covered == 0);
    restriction && closed
}

/// The subframe of `sup` generated by the worlds in `roots` (a bitmask),
/// keeping `sup`'s world order. `None` when no root is a world of `sup`.
pub fn generated_subframe(sup: &Frame, roots: u64) -> Option<Frame> {
    let mut reach = roots & sup.all();
    if reach == 0 {
        return None;
    }
    loop {
        let next = (0..sup.len())
            .filter(|&i| reach >> i & 1 == 1)
            .fold(reach, |acc, i| acc | sup.successors(i));
        if next == reach {
            break;
        }
        reach = next;
    }
    let kept: Vec<usize> = (0..sup.len()).filter(|&i| reach >> i & 1 == 1).collect();
    let worlds: Vec<String> = kept.iter().map(|&i| sup.world(i).to_string()).collect();
    let succ = kept
        .iter()
        .map(|&i| {
            kept.iter()
                .enumerate()
                .filter(|(_, &j)| sup.related(i, j))
                .fold(0u64, |acc, (k, _)| acc | 1 << k)
        })
        .collect();
    Some(Frame::from_successors(worlds.into(), succ))
}
