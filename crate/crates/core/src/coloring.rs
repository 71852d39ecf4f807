use serde::{Deserialize, Serialize};

use crate::detection::{self, SimpleGraph};
use crate::error::{Error, Result};
use crate::game::{edge_count, Color, Edge, Goal};

/// A complete coloring of `E(K_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    n: usize,
    t: usize,
    colors: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    u: usize,
    v: usize,
    c: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringDoc {
    n: usize,
    t: usize,
    edges: Vec<EdgeDoc>,
}

impl Coloring {
    pub fn from_fn(n: usize, t: usize, mut f: impl FnMut(Edge) -> Color) -> Result<Self> {
        let colors = Edge::all(n)
            .map(|e| Color::checked(f(e).index(), t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Coloring { n, t, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn color(&self, e: Edge) -> Color {
        self.colors[e.index(self.n)]
    }

    /// The same coloring with `e` repainted `c`.
    pub fn recolored(&self, e: Edge, c: Color) -> Coloring {
        let mut out = self.clone();
        out.colors[e.index(self.n)] = c;
        out
    }

    pub fn color_graph(&self, c: Color) -> SimpleGraph {
        SimpleGraph::from_edges(
            self.n,
            Edge::all(self.n).filter(|e| self.color(*e) == c),
        )
    }

    pub fn contains_goal(&self, c: Color, goal: Goal) -> bool {
        detection::graph_find_goal(&self.color_graph(c), goal).is_some()
    }

    pub fn to_json(&self) -> String {
        let doc = ColoringDoc {
            n: self.n,
            t: self.t,
            edges: Edge::all(self.n)
                .map(|e| EdgeDoc {
                    u: e.u(),
                    v: e.v(),
                    c: self.color(e).index(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("colorings always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ColoringDoc =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let mut slots: Vec<Option<Color>> = vec![None; edge_count(doc.n)];
        for ed in &doc.edges {
            for x in [ed.u, ed.v] {
                if x >= doc.n {
                    return Err(Error::VertexOutOfRange { vertex: x, n: doc.n });
                }
            }
            let e = Edge::new(ed.u, ed.v)?;
            let c = Color::checked(ed.c, doc.t)?;
            let slot = &mut slots[e.index(doc.n)];
            if slot.is_some() {
                return Err(Error::DuplicateEdge(e.u(), e.v()));
            }
            *slot = Some(c);
        }
        let colors = slots
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| {
                    let e = Edge::from_index(doc.n, i);
                    Error::IncompleteColoring(e.u(), e.v())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Coloring {
            n: doc.n,
            t: doc.t,
            colors,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_document_roundtrip_and_errors() {
        let c = Coloring::from_fn(4, 3, |e| Color::new(1 + e.index(4) % 3)).unwrap();
        assert_eq!(Coloring::from_json(&c.to_json()).unwrap(), c);

        let missing = r#"{"n":3,"t":2,"edges":[{"u":0,"v":1,"c":1},{"u":0,"v":2,"c":2}]}"#;
        assert_eq!(
            Coloring::from_json(missing).unwrap_err(),
            Error::IncompleteColoring(1, 2)
        );
        let zero = r#"{"n":2,"t":2,"edges":[{"u":0,"v":1,"c":0}]}"#;
        assert!(Coloring::from_json(zero).is_err());
    }
}
