use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{parse_box, parse_ri, Substitution, SyntaxError};

use super::{translate_axiomatization, AxiomSystem, Justification, Proof};

#[derive(Debug, Error)]
pub enum ProofFileError {
    #[error("invalid proof JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{place}: {source}")]
    Syntax {
        place: String,
        #[source]
        source: SyntaxError,
    },
}

/// On-disk form of a proof and the system it is checked in.
///
/// ```json
/// {"system": {"extras": ["o p -> o o p"], "box_axioms": ["box p -> p"]},
///  "lines": [{"formula": "o true", "just": {"kind": "axiom", "schema": "b0"}}]}
/// ```
///
/// `extras` are circle-language schemata. `box_axioms` are box-language
/// axioms whose circle translations are appended after `extras`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProofFile {
    #[serde(default)]
    pub system: SystemFile,
    pub lines: Vec<LineFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    #[serde(default)]
    pub extras: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub box_axioms: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineFile {
    pub formula: String,
    pub just: JustFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum JustFile {
    Taut,
    Axiom {
        schema: String,
    },
    Extra {
        index: usize,
    },
    Mp {
        from: [usize; 2],
    },
    Us {
        from: usize,
        subst: BTreeMap<String, String>,
    },
    Bn {
        from: usize,
    },
}

impl ProofFile {
    pub fn from_json(text: &str) -> Result<Self, ProofFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("proof files serialize")
    }

    /// Extras are written out as circle-language text; box axioms are not
    /// recovered.
    pub fn new(proof: &Proof, sys: &AxiomSystem) -> Self {
        let lines = proof
            .lines
            .iter()
            .map(|l| LineFile {
                formula: l.formula.to_string(),
                just: match &l.justification {
                    Justification::Tautology => JustFile::Taut,
                    Justification::Axiom(s) => JustFile::Axiom { schema: s.clone() },
                    Justification::Extra(i) => JustFile::Extra { index: *i },
                    Justification::Mp(i, j) => JustFile::Mp { from: [*i, *j] },
                    Justification::Us(i, map) => JustFile::Us {
                        from: *i,
                        subst: map.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
                    },
                    Justification::Bn(i) => JustFile::Bn { from: *i },
                },
            })
            .collect();
        ProofFile {
            system: SystemFile {
                extras: sys.extras.iter().map(|s| s.pattern.to_string()).collect(),
                box_axioms: Vec::new(),
            },
            lines,
        }
    }

    pub fn system(&self) -> Result<AxiomSystem, ProofFileError> {
        let syntax = |place: String| move |source| ProofFileError::Syntax { place, source };
        let extras = self
            .system
            .extras
            .iter()
            .enumerate()
            .map(|(i, s)| parse_ri(s).map_err(syntax(format!("extra {}", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        let boxed = self
            .system
            .box_axioms
            .iter()
            .enumerate()
            .map(|(i, s)| parse_box(s).map_err(syntax(format!("box axiom {}", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        let translated = translate_axiomatization(&boxed)
            .extras
            .into_iter()
            .map(|s| s.pattern);
        Ok(AxiomSystem::k_circ().with_extras(extras.into_iter().chain(translated)))
    }

    pub fn proof(&self) -> Result<Proof, ProofFileError> {
        let mut proof = Proof::new();
        for (idx, line) in self.lines.iter().enumerate() {
            let n = idx + 1;
            let syntax = |source| ProofFileError::Syntax {
                place: format!("line {n}"),
                source,
            };
            let formula = parse_ri(&line.formula).map_err(syntax)?;
            let just = match &line.just {
                JustFile::Taut => Justification::Tautology,
                JustFile::Axiom { schema } => Justification::Axiom(schema.clone()),
                JustFile::Extra { index } => Justification::Extra(*index),
                JustFile::Mp { from: [i, j] } => Justification::Mp(*i, *j),
                JustFile::Bn { from } => Justification::Bn(*from),
                JustFile::Us { from, subst } => {
                    let mut map = Substitution::new();
                    for (var, text) in subst {
                        map.insert(var.clone(), parse_ri(text).map_err(syntax)?);
                    }
                    Justification::Us(*from, map)
                }
            };
            proof.push(formula, just);
        }
        Ok(proof)
    }
}
