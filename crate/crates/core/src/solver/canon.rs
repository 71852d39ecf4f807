//! Keys for the solver's memo table, optionally invariant under relabeling
//! the vertices.

use super::state::{encode, SolverState};
use crate::game::Edge;

/// Largest number of cell-respecting relabelings tried before falling back
/// to the exact encoding.
const MAX_LABELINGS: usize = 5040;

/// With `canonical` off, the exact encoding. With it on, the smallest
/// encoding over the relabelings that respect a color-degree refinement of
/// the vertices, so isomorphic boards share a key. Either way the key is the
/// exact code of a board isomorphic to `s`, so equal keys mean equal values.
pub fn canonical_key(s: &SolverState, canonical: bool) -> u64 {
    if !canonical {
        return s.code();
    }
    let n = s.n();
    let colors = s.raw();
    let color = |a: usize, b: usize| colors[Edge::of(a, b).index(n)] as usize;

    let mut rank = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<(usize, usize)>)> = (0..n)
            .map(|v| {
                let mut around: Vec<(usize, usize)> = (0..n)
                    .filter(|&w| w != v)
                    .map(|w| (color(v, w), rank[w]))
                    .collect();
                around.sort_unstable();
                (rank[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            rank[v] = distinct.binary_search(&sigs[v]).unwrap();
        }
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }

    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for v in 0..n {
        cells[rank[v]].push(v);
    }
    let labelings = cells
        .iter()
        .try_fold(1usize, |acc, c| {
            (1..=c.len())
                .try_fold(acc, |a, k| a.checked_mul(k))
                .filter(|&x| x <= MAX_LABELINGS)
        });
    if labelings.is_none() {
        return s.code();
    }

    let mut order: Vec<Vec<usize>> = cells;
    let mut best = u64::MAX;
    let mut relabeled = vec![0u8; colors.len()];
    loop {
        // new label i is held by old vertex flat[i]
        let flat: Vec<usize> = order.iter().flatten().copied().collect();
        let mut i = 0;
        for a in 0..n {
            for b in a + 1..n {
                relabeled[i] = color(flat[a], flat[b]) as u8;
                i += 1;
            }
        }
        best = best.min(encode(&relabeled, s.t()));
        if !next_in_cells(&mut order) {
            return best;
        }
    }
}

/// Advance to the next combination of per-cell permutations (odometer over
/// lexicographic next-permutation); false once every combination was seen.
fn next_in_cells(cells: &mut [Vec<usize>]) -> bool {
    for cell in cells.iter_mut().rev() {
        if next_permutation(cell) {
            return true;
        }
        cell.sort_unstable();
    }
    false
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{Color, TargetSpec};

    fn m22() -> TargetSpec {
        TargetSpec::matchings(&[2, 2]).unwrap()
    }

    #[test]
    fn relabeled_boards_share_keys() {
        let a = SolverState::from_exposed(
            5,
            m22(),
            [(Edge::of(0, 1), Color::new(1)), (Edge::of(1, 2), Color::new(2))],
        )
        .unwrap();
        let b = SolverState::from_exposed(
            5,
            m22(),
            [(Edge::of(3, 4), Color::new(1)), (Edge::of(4, 0), Color::new(2))],
        )
        .unwrap();
        assert_ne!(canonical_key(&a, false), canonical_key(&b, false));
        assert_eq!(canonical_key(&a, true), canonical_key(&b, true));

        let c = SolverState::from_exposed(
            5,
            m22(),
            [(Edge::of(3, 4), Color::new(1)), (Edge::of(4, 0), Color::new(1))],
        )
        .unwrap();
        assert_ne!(canonical_key(&a, true), canonical_key(&c, true));
    }

    #[test]
    fn empty_and_count_distinctions() {
        let e1 = SolverState::empty(5, m22());
        let e2 = SolverState::empty(5, m22());
        assert_eq!(canonical_key(&e1, true), canonical_key(&e2, true));
        let one = SolverState::from_exposed(5, m22(), [(Edge::of(0, 1), Color::new(1))]).unwrap();
        assert_ne!(canonical_key(&e1, true), canonical_key(&one, true));
    }

    #[test]
    fn permutation_walk_is_complete() {
        let mut cells = vec![vec![0, 1, 2], vec![3], vec![4, 5]];
        let mut count = 1;
        while next_in_cells(&mut cells) {
            count += 1;
        }
        assert_eq!(count, 12);
        assert_eq!(cells, vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
    }
}
