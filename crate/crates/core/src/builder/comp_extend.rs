//! Grow two monochromatic vertex sets against each other, collecting the
//! leftovers in a third color.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::game::{Color, GameState, Session};

/// Output `(X1, X2, X3)` of [`comp_extend`]; `X_i` lives in the color playing role `i`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompTriple {
    pub x1: BTreeSet<usize>,
    pub x2: BTreeSet<usize>,
    pub x3: BTreeSet<usize>,
}

#[derive(Debug, Clone)]
pub struct CompExtension {
    pub triple: CompTriple,
    pub new_queries: usize,
    pub loops: usize,
}

const IN1: u8 = 0b001;
const IN2: u8 = 0b010;
const IN3: u8 = 0b100;

/// Vertices bucketed by which of `X1, X2, X3` contain them.
struct Membership {
    mask: Vec<u8>,
    buckets: [BTreeSet<usize>; 8],
}

impl Membership {
    fn new(n: usize) -> Self {
        Membership {
            mask: vec![0; n],
            buckets: Default::default(),
        }
    }

    fn set(&mut self, v: usize, mask: u8) {
        let old = self.mask[v];
        if old == mask {
            return;
        }
        if old != 0 {
            self.buckets[old as usize].remove(&v);
        }
        if mask != 0 {
            self.buckets[mask as usize].insert(v);
        }
        self.mask[v] = mask;
    }

    fn add(&mut self, v: usize, bit: u8) {
        self.set(v, self.mask[v] | bit);
    }

    fn first(&self, mask: u8) -> Option<usize> {
        self.buckets[mask as usize].first().copied()
    }

    fn count(&self, bit: u8) -> usize {
        (1..8)
            .filter(|m| m & bit as usize != 0)
            .map(|m| self.buckets[m].len())
            .sum()
    }

    /// `2|X1| + 2|X2| + |X3 \ (X1 ∩ X2)|`.
    fn potential(&self) -> usize {
        let outside: usize = [0b100, 0b101, 0b110].iter().map(|&m| self.buckets[m].len()).sum();
        2 * self.count(IN1) + 2 * self.count(IN2) + outside
    }

    fn collect(&self, bit: u8) -> BTreeSet<usize> {
        (1..8)
            .filter(|m| m & bit as usize != 0)
            .flat_map(|m| self.buckets[m].iter().copied())
            .collect()
    }
}

/// Run the extension with `V1` in the color `roles[0]` and `V2` in `roles[1]`;
/// `roles` must be a permutation of the three colors.
pub fn comp_extend(
    session: &mut Session<'_>,
    v1: &BTreeSet<usize>,
    v2: &BTreeSet<usize>,
    roles: [Color; 3],
) -> Result<CompExtension> {
    check_preconditions(session.state(), v1, v2, roles)?;
    let n = session.state().n();
    let mut m = Membership::new(n);
    for &v in v1 {
        m.add(v, IN1);
    }
    for &v in v2 {
        m.add(v, IN2);
    }
    let budget = 2 * v1.len() + 2 * v2.len() + 1;
    let start = session.state().queries();
    let mut loops = 0;
    loop {
        loops += 1;
        if loops > budget {
            return Err(Error::Invariant(format!(
                "component extension looped {loops} times, budget {budget}"
            )));
        }
        let restartable = [0b100, 0b101, 0b110].iter().all(|&k| m.buckets[k].is_empty());
        let pick = if let (Some(u), Some(v)) = (m.first(IN1), m.first(IN2 | IN3)) {
            Some((u, v, false))
        } else if let (Some(u), Some(v)) = (m.first(IN2), m.first(IN1 | IN3)) {
            Some((u, v, false))
        } else if let (true, Some(u), Some(v)) = (restartable, m.first(IN1), m.first(IN2)) {
            Some((u, v, true))
        } else {
            None
        };
        let Some((u, v, third_case)) = pick else {
            break;
        };
        let before = m.potential();
        let c = session.query_pair(u, v)?;
        let role = roles
            .iter()
            .position(|&r| r == c)
            .ok_or_else(|| Error::Invariant(format!("color {c} is not one of the roles")))?;
        if third_case && role == 2 {
            for w in m.buckets[0b111].clone() {
                m.set(w, 0b011);
            }
            m.add(u, IN3);
            m.add(v, IN3);
        } else {
            let bit = 1u8 << role;
            m.add(u, bit);
            m.add(v, bit);
        }
        if m.potential() < before + 1 {
            return Err(Error::Invariant(format!(
                "potential did not grow: {before} -> {}",
                m.potential()
            )));
        }
    }
    let ext = CompExtension {
        triple: CompTriple {
            x1: m.collect(IN1),
            x2: m.collect(IN2),
            x3: m.collect(IN3),
        },
        new_queries: session.state().queries() - start,
        loops,
    };
    check_postconditions(session.state(), v1, v2, roles, &ext)?;
    Ok(ext)
}

fn in_one_component(state: &GameState, set: &BTreeSet<usize>, c: Color) -> bool {
    if set.len() <= 1 {
        return true;
    }
    let labels = state.color_graph(c).component_labels();
    let first = labels[*set.first().unwrap()];
    set.iter().all(|&v| labels[v] == first)
}

fn check_preconditions(
    state: &GameState,
    v1: &BTreeSet<usize>,
    v2: &BTreeSet<usize>,
    roles: [Color; 3],
) -> Result<()> {
    if state.t() != 3 {
        return Err(Error::Precondition(format!(
            "component extension needs three colors, got {}",
            state.t()
        )));
    }
    let distinct: BTreeSet<Color> = roles.iter().copied().collect();
    if distinct.len() != 3 || roles.iter().any(|c| c.index() > 3) {
        return Err(Error::Precondition(format!(
            "roles {roles:?} are not a permutation of the colors"
        )));
    }
    if let Some(&v) = v1.iter().chain(v2).find(|&&v| v >= state.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: state.n(),
        });
    }
    if !in_one_component(state, v1, roles[0]) {
        return Err(Error::Precondition(format!(
            "V1 is not inside one component of color {}",
            roles[0]
        )));
    }
    if !in_one_component(state, v2, roles[1]) {
        return Err(Error::Precondition(format!(
            "V2 is not inside one component of color {}",
            roles[1]
        )));
    }
    Ok(())
}

fn check_postconditions(
    state: &GameState,
    v1: &BTreeSet<usize>,
    v2: &BTreeSet<usize>,
    roles: [Color; 3],
    ext: &CompExtension,
) -> Result<()> {
    let CompTriple { x1, x2, x3 } = &ext.triple;
    let fail = |what: &str| Err(Error::Invariant(format!("component extension: {what}")));
    let union: BTreeSet<usize> = v1.union(v2).copied().collect();
    if !(x1.is_subset(&union) && x2.is_subset(&union) && x3.is_subset(&union)) {
        return fail("output leaves V1 ∪ V2");
    }
    if !(v1.is_subset(x1) && v2.is_subset(x2)) {
        return fail("X1 or X2 lost part of its input");
    }
    for (set, &c) in [x1, x2, x3].into_iter().zip(&roles) {
        if !in_one_component(state, set, c) {
            return fail("an output set spans two components of its color");
        }
    }
    let leftover: BTreeSet<usize> = v1
        .difference(x2)
        .chain(v2.difference(x1))
        .copied()
        .collect();
    if !(*x1 == union || *x2 == union || leftover.is_subset(x3)) {
        return fail("none of the three termination conditions holds");
    }
    if ext.new_queries > 2 * v1.len() + 2 * v2.len() {
        return fail("query budget exceeded");
    }
    Ok(())
}
