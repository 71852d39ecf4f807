use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::game::{Color, Edge, GameState, Painter, Variant};

/// A vertex partition `V_1, ..., V_t` (contiguous blocks, in order) and the
/// coloring `chi(xy) = max{i : V_i meets {x, y}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionColoring {
    class: Vec<usize>,
    t: usize,
}

impl PartitionColoring {
    /// Blocks of the given sizes; empty blocks are allowed.
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::TooFewColors(sizes.len()));
        }
        let class = sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat(i + 1).take(s))
            .collect::<Vec<_>>();
        if class.len() < 2 {
            return Err(Error::BoardTooSmall(class.len()));
        }
        Ok(PartitionColoring {
            class,
            t: sizes.len(),
        })
    }

    /// `|V_1| = 2r - 1`, `|V_i| = r - 1` on `n = (t + 1) r - t` vertices.
    pub fn matching(t: usize, r: usize) -> Result<Self> {
        Self::for_matchings(&vec![r; t], None)
    }

    /// `|V_1| = 2 r_1 - 1`, `|V_i| = r_i - 1`, with any vertices beyond that
    /// (up to `n`) appended to `V_t`.
    pub fn for_matchings(rs: &[usize], n: Option<usize>) -> Result<Self> {
        if rs.len() < 2 {
            return Err(Error::TooFewColors(rs.len()));
        }
        if rs.iter().any(|&r| r < 2) {
            return Err(Error::InvalidGoal(format!(
                "the partition construction needs every r >= 2, got {rs:?}"
            )));
        }
        let mut sizes: Vec<usize> = rs.iter().map(|r| r - 1).collect();
        sizes[0] = 2 * rs[0] - 1;
        let base: usize = sizes.iter().sum();
        if let Some(n) = n {
            if n < base {
                return Err(Error::Precondition(format!(
                    "board of {n} vertices is smaller than the partition ({base})"
                )));
            }
            *sizes.last_mut().unwrap() += n - base;
        }
        Self::new(&sizes)
    }

    pub fn n(&self) -> usize {
        self.class.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// 1-based block index of `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class[v]
    }

    pub fn block(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.class[v] == i).collect()
    }

    pub fn color(&self, e: Edge) -> Color {
        Color::new(self.class[e.u()].max(self.class[e.v()]))
    }

    pub fn inside_first(&self, e: Edge) -> bool {
        self.class[e.u()] == 1 && self.class[e.v()] == 1
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::from_fn(self.n(), self.t, |e| self.color(e)).expect("block colors are in range")
    }
}

/// The partition coloring for `r K_2` in `t` colors.
pub fn matching_partition_coloring(t: usize, r: usize) -> Result<Coloring> {
    if t < 2 {
        return Err(Error::TooFewColors(t));
    }
    Ok(PartitionColoring::matching(t, r)?.coloring())
}

/// Answers the partition coloring. In the cornering game the last unexposed
/// edge is repainted so that a monochromatic matching appears: color 1 if
/// the edge leaves `V_1`, else color 2.
#[derive(Debug, Clone)]
pub struct MatchingAdversary {
    partition: PartitionColoring,
    variant: Variant,
}

impl MatchingAdversary {
    pub fn new(t: usize, r: usize, variant: Variant) -> Result<Self> {
        Ok(MatchingAdversary {
            partition: PartitionColoring::matching(t, r)?,
            variant,
        })
    }

    pub fn from_partition(partition: PartitionColoring, variant: Variant) -> Self {
        MatchingAdversary { partition, variant }
    }

    pub fn partition(&self) -> &PartitionColoring {
        &self.partition
    }
}

impl Painter for MatchingAdversary {
    fn name(&self) -> String {
        format!("match-adv:{}", self.variant)
    }

    fn color_of(&mut self, edge: Edge, view: &GameState) -> Color {
        if self.variant == Variant::Cornering && view.unexposed_count() == 1 {
            return if self.partition.inside_first(edge) {
                Color::new(2)
            } else {
                Color::new(1)
            };
        }
        self.partition.color(edge)
    }
}
