use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{orient, Graph, Orientation};
use crate::group::{Elem, Group};

use super::{solve_with_budget, Budget, CheckError, EdgeLabeling, ListAssignment, Witness};

#[derive(Clone, Debug)]
pub struct RandomizedOptions {
    pub trials: usize,
    pub seed: u64,
    /// Random lists of this size; full lists when `None`.
    pub list_size: Option<usize>,
    /// Labelings tried before the random ones.
    pub planted: Vec<EdgeLabeling>,
    /// Orientation the labels refer to; the seed-0 orientation when `None`.
    pub orientation: Option<Orientation>,
    pub budget: Budget,
}

impl RandomizedOptions {
    pub fn new(trials: usize, seed: u64) -> RandomizedOptions {
        RandomizedOptions { trials, seed, list_size: None, planted: Vec::new(), orientation: None, budget: Budget::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomizedReport {
    pub trials: usize,
    pub failures: Vec<Witness>,
    pub nodes: u64,
}

/// Samples labelings (and optionally lists) and solves each one. Trial `i`
/// draws from its own ChaCha stream, so results do not depend on how many
/// trials ran before it.
pub fn randomized_colorability(g: &Graph, group: &Group, opts: &RandomizedOptions) -> Result<RandomizedReport, CheckError> {
    if opts.trials == 0 {
        return Err(CheckError::Precondition("at least one trial is required".into()));
    }
    if let Some(k) = opts.list_size.filter(|&k| k > group.order()) {
        return Err(CheckError::ListTooLarge { size: k, order: group.order() });
    }
    let o = opts.orientation.clone().unwrap_or_else(|| orient(g, 0));
    let mut report = RandomizedReport { trials: 0, failures: Vec::new(), nodes: 0 };
    let draw_lists = |rng: &mut ChaCha8Rng| match opts.list_size {
        None => ListAssignment::full(g.vertex_count(), group),
        Some(k) => ListAssignment::from_sets(
            (0..g.vertex_count())
                .map(|_| sample(rng, group.order(), k).into_iter().map(Elem::raw).collect())
                .collect(),
        ),
    };
    let run = |f: EdgeLabeling, lists: ListAssignment, report: &mut RandomizedReport| -> Result<(), CheckError> {
        let out = solve_with_budget(g, &o, group, &f, &lists, opts.budget)?;
        report.trials += 1;
        report.nodes += out.nodes;
        if out.coloring.is_none() {
            report.failures.push(Witness::new(g, &o, &f, &lists));
        }
        Ok(())
    };
    for (i, f) in opts.planted.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(u64::MAX - i as u64);
        let lists = draw_lists(&mut rng);
        run(f.clone(), lists, &mut report)?;
    }
    for i in 0..opts.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(i as u64);
        let f = EdgeLabeling::from_values((0..g.edge_count()).map(|_| Elem::raw(rng.gen_range(0..group.order()))).collect());
        let lists = draw_lists(&mut rng);
        run(f, lists, &mut report)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::c3t_hard_labeling;

    #[test]
    fn deterministic_per_seed() {
        let g = crate::graph::cycle(5).unwrap();
        let z2 = Group::parse("Z2").unwrap();
        let mut opts = RandomizedOptions::new(50, 11);
        opts.list_size = Some(2);
        let a = randomized_colorability(&g, &z2, &opts).unwrap();
        assert_eq!(a, randomized_colorability(&g, &z2, &opts).unwrap());
        assert_eq!(a.trials, 50);
        // C5 over Z2 with full lists fails for some labelings.
        assert!(!a.failures.is_empty());
        for w in &a.failures {
            assert!(w.recheck(&g, &z2).unwrap());
        }
    }

    #[test]
    fn planted_hard_labeling_fails() {
        let h = c3t_hard_labeling(1).unwrap();
        let mut opts = RandomizedOptions::new(20, 0);
        opts.planted.push(h.labeling.clone());
        opts.orientation = Some(h.orientation.clone());
        let r = randomized_colorability(&h.total.graph, &h.group, &opts).unwrap();
        assert!(!r.failures.is_empty());
        assert_eq!(r.trials, 21);
    }

    #[test]
    fn zero_trials_rejected() {
        let g = crate::graph::path(2).unwrap();
        let z2 = Group::parse("Z2").unwrap();
        assert!(randomized_colorability(&g, &z2, &RandomizedOptions::new(0, 0)).is_err());
    }
}
