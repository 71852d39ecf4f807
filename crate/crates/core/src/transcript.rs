//! JSON transcript documents.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{edge_count, Color, Edge, GameState, TargetSpec, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub u: usize,
    pub v: usize,
    pub c: usize,
    pub tag: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResultKind {
    Found,
    Exclusion,
    Cornered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub kind: ResultKind,
    pub color: Option<usize>,
    pub edges: Option<Vec<[usize; 2]>>,
    pub queries: usize,
}

/// Full record of a game: the instance, who played, and every exposure in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub n: usize,
    pub t: usize,
    pub variant: Variant,
    pub targets: TargetSpec,
    pub builder: String,
    pub painter: String,
    pub seed: Option<u64>,
    pub moves: Vec<Move>,
    pub result: Option<ResultRecord>,
}

impl Transcript {
    pub(crate) fn empty(n: usize, t: usize, variant: Variant, targets: TargetSpec) -> Self {
        Transcript {
            n,
            t,
            variant,
            targets,
            builder: String::new(),
            painter: String::new(),
            seed: None,
            moves: Vec::new(),
            result: None,
        }
    }

    pub fn encode(&self) -> String {
        serde_json::to_string(self).expect("transcripts always serialize")
    }

    pub fn encode_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcripts always serialize")
    }

    pub fn decode(text: &str) -> Result<Self> {
        let tr: Transcript =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        tr.validate()?;
        Ok(tr)
    }

    fn validate(&self) -> Result<()> {
        if self.targets.len() != self.t {
            return Err(Error::TargetMismatch {
                t: self.t,
                got: self.targets.len(),
            });
        }
        TargetSpec::new(self.targets.goals().to_vec())?;
        if self.moves.len() > edge_count(self.n) {
            return Err(Error::Malformed("more moves than edges".into()));
        }
        let mut seen = HashSet::new();
        for m in &self.moves {
            for x in [m.u, m.v] {
                if x >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
                }
            }
            let e = Edge::new(m.u, m.v)?;
            Color::checked(m.c, self.t)?;
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.u(), e.v()));
            }
        }
        Ok(())
    }

    /// Rebuild the board this transcript describes.
    pub fn replay(&self) -> Result<GameState> {
        let mut s = GameState::new_game(self.n, self.t, self.targets.clone(), self.variant)?;
        for m in &self.moves {
            s.set_tag(m.tag.clone());
            s.expose(Edge::new(m.u, m.v)?, Color::checked(m.c, self.t)?)?;
        }
        s.set_tag(None);
        let tr = s.transcript_mut();
        tr.builder = self.builder.clone();
        tr.painter = self.painter.clone();
        tr.seed = self.seed;
        tr.result = self.result.clone();
        Ok(s)
    }
}
