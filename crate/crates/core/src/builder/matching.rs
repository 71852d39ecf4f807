//! Builder for monochromatic matchings: grow a good forest covering all but
//! at most one vertex, then read a matching off its color classes.

use super::{tree_extend, ColoredTree, GoodForest};
use crate::detection::{good_forest_matching, matching_query_bound};
use crate::error::{Error, Result};
use crate::game::{Builder, Session, Variant, WinCertificate};

/// The matching strategy. After a game, `forest` holds the final good forest.
#[derive(Debug, Default, Clone)]
pub struct MatchingBuilder {
    pub forest: Option<GoodForest>,
}

impl MatchingBuilder {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Builder for MatchingBuilder {
    fn name(&self) -> String {
        "matching".into()
    }

    fn play(&mut self, session: &mut Session<'_>) -> Result<WinCertificate> {
        let state = session.state();
        if state.variant() != Variant::Classic {
            return Err(Error::Precondition(
                "the matching strategy plays the classic game".into(),
            ));
        }
        let targets = state.targets().clone();
        if targets.matching_sizes().is_none() {
            return Err(Error::Precondition("targets must all be matchings".into()));
        }
        let forest = grow_good_forest(session)?;
        let (color, edges) = good_forest_matching(&forest, &targets)?;
        self.forest = Some(forest);
        Ok(WinCertificate::FoundCopy { color, edges })
    }
}

fn tag(id: usize) -> Option<String> {
    Some(format!("comp:{id}"))
}

/// Grow a good forest until at most one vertex is uncovered, charging every
/// query to the component it served.
pub fn grow_good_forest(session: &mut Session<'_>) -> Result<GoodForest> {
    let (n, t) = (session.state().n(), session.state().t());
    let start = session.state().queries();
    let mut forest = GoodForest::new(t);
    let mut covered = vec![false; n];
    loop {
        let mut free = (0..n).filter(|&v| !covered[v]);
        let (Some(x), Some(y)) = (free.next(), free.next()) else {
            break;
        };
        let xy = session.state().edge(x, y)?;
        let fresh = usize::from(!session.state().is_exposed(xy));
        session.set_tag(None);
        let c = session.query(xy)?;
        if forest.common_colors().contains(&c) {
            let id = forest.push(ColoredTree::from_edges(&[(xy, c)])?, fresh);
            session.retag(xy, tag(id));
            covered[x] = true;
            covered[y] = true;
            continue;
        }
        let comp = forest
            .components()
            .iter()
            .find(|comp| !comp.tree.colors().contains(&c))
            .ok_or_else(|| Error::Invariant("color missing from common set but from no component".into()))?;
        let (id, tree) = (comp.id, comp.tree.clone());
        session.retag(xy, tag(id));
        session.set_tag(tag(id));
        let ext = tree_extend(session, &tree, xy)?;
        session.set_tag(None);
        for v in tree.vertices() {
            covered[v] = false;
        }
        for v in ext.tree.vertices() {
            covered[v] = true;
        }
        let slot = forest.component_mut(id).expect("component exists");
        slot.queries += fresh + ext.new_queries;
        slot.tree = ext.tree;
        forest.validate().map_err(|e| Error::Invariant(e.to_string()))?;
    }

    forest.validate().map_err(|e| Error::Invariant(e.to_string()))?;
    forest.check_accounting()?;
    let used = session.state().queries() - start;
    if forest.charged_queries() != used {
        return Err(Error::Invariant(format!(
            "components were charged {} queries but {used} were made",
            forest.charged_queries()
        )));
    }
    let bound = matching_query_bound(t, n)?;
    if used > bound {
        return Err(Error::Invariant(format!(
            "{used} queries exceed the bound {bound} for t = {t}, n = {n}"
        )));
    }
    Ok(forest)
}
