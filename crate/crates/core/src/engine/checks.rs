use crate::graph::{orient, Graph};
use crate::group::{ElemSet, Group};

use super::frontier::{self, frontier_order};
use super::{enumerate, subsets_of_size, CheckError, CheckOptions, Engine, Verdict};

/// What the adversary may choose after normalization.
///
/// Shifting the color of each vertex `v` by `t_v` maps `(f, L)` to an
/// equivalent instance. Walking a vertex order, the shift of each non-first
/// vertex of a component is spent making the label on its first back edge
/// zero; the shift of the first vertex is spent putting zero in its list.
pub(crate) struct Adversary {
    pub(crate) list_options: Vec<Vec<ElemSet>>,
    pub(crate) free_edge: Vec<bool>,
}

impl Adversary {
    pub(crate) fn normalized(g: &Graph, group: &Group, sizes: &[usize], order: &[usize]) -> Adversary {
        let n = g.vertex_count();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut free_edge = vec![true; g.edge_count()];
        let mut list_options = vec![Vec::new(); n];
        for &v in order {
            let first_back = g.adjacency(v).iter().filter(|&&(w, _)| pos[w] < pos[v]).min_by_key(|&&(w, _)| pos[w]);
            let mut opts = subsets_of_size(group.order(), sizes[v]);
            match first_back {
                Some(&(_, e)) => free_edge[e] = false,
                None if sizes[v] > 0 => opts.retain(|l| l.contains(group.zero())),
                None => {}
            }
            list_options[v] = opts;
        }
        Adversary { list_options, free_edge }
    }

    /// Number of distinct normalized instances, saturating.
    pub(crate) fn instance_count(&self, group: &Group) -> u64 {
        let lists = self.list_options.iter().fold(1u64, |acc, o| acc.saturating_mul(o.len() as u64));
        self.free_edge
            .iter()
            .filter(|&&f| f)
            .fold(lists, |acc, _| acc.saturating_mul(group.order() as u64))
    }
}

/// Checks that every labeling and every assignment of lists with the given
/// per-vertex sizes admits a coloring.
pub fn check_list_sizes(g: &Graph, group: &Group, sizes: &[usize], opts: &CheckOptions) -> Result<Verdict, CheckError> {
    if sizes.len() != g.vertex_count() {
        return Err(CheckError::DimensionMismatch(format!("{} list sizes for {} vertices", sizes.len(), g.vertex_count())));
    }
    if let Some(&size) = sizes.iter().find(|&&s| s > group.order()) {
        return Err(CheckError::ListTooLarge { size, order: group.order() });
    }
    let o = orient(g, opts.orientation_seed);
    let order = frontier_order(g);
    let adv = Adversary::normalized(g, group, sizes, &order);
    match opts.engine {
        Engine::Frontier => frontier::run(g, &o, group, &adv, &order, opts),
        Engine::Enumerate => enumerate::run(g, &o, group, &adv, opts),
    }
}

/// Every labeling admits a coloring from the whole group.
pub fn check_group_colorable(g: &Graph, group: &Group, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    check_list_sizes(g, group, &vec![group.order(); g.vertex_count()], opts)
}

/// Every labeling and every assignment of `k`-element lists admits a coloring.
pub fn check_group_choosable(g: &Graph, group: &Group, k: usize, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    check_list_sizes(g, group, &vec![k; g.vertex_count()], opts)
}

/// Every labeling and every assignment of lists with `|L(v)| = deg(v)` admits
/// a coloring. Requires `|A| >= max degree`.
pub fn check_d_group_choosable(g: &Graph, group: &Group, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let sizes: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    check_list_sizes(g, group, &sizes, opts)
}
