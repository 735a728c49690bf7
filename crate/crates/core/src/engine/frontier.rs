//! Exhaustive check as a game against an adversary.
//!
//! Vertices are revealed in a fixed order. When vertex `v` is revealed the
//! adversary picks its list and the labels on its edges back to earlier
//! vertices. The state after a step is the set of colorings of the current
//! frontier (revealed vertices with unrevealed neighbors) that extend to a
//! valid coloring of everything revealed so far, stored as a bitset over the
//! mixed-radix index of the frontier coloring. The property fails exactly
//! when some sequence of choices empties the state. States known to survive
//! every continuation are memoized.

use std::sync::atomic::{AtomicU64, Ordering::Relaxed};

use rustc_hash::FxHashSet;

use crate::graph::{Graph, Orientation};
use crate::group::{Elem, ElemSet, Group};

use super::checks::Adversary;
use super::par::find_first;
use super::{
    forbid_multiplier, CheckError, CheckOptions, EdgeLabeling, ListAssignment, Meter, SearchStats, Status, Verdict,
    Witness,
};

/// Largest state space (colorings of one frontier) the engine accepts.
const MAX_STATE_BITS: u64 = 1 << 22;

struct BackEdge {
    neighbor: usize,
    coord: usize,
    edge: usize,
    neighbor_is_tail: bool,
    free: bool,
}

struct Step {
    vertex: usize,
    back: Vec<BackEdge>,
    /// Old coordinate and its weight in the next frontier's index, for
    /// frontier vertices that stay.
    keep: Vec<(usize, u32)>,
    /// Weight of the new vertex in the next frontier's index, if it stays.
    new_weight: Option<u32>,
    /// Vertices of the frontier after this step, by coordinate.
    frontier: Vec<usize>,
    /// Width of the frontier before this step.
    prev_width: usize,
    /// Words in a state bitset after this step.
    words: usize,
    lists: Vec<ElemSet>,
    choices: u64,
}

pub(crate) struct Game<'a> {
    group: &'a Group,
    radix: usize,
    steps: Vec<Step>,
}

type State = Vec<u64>;

/// A vertex order keeping the frontier small: grow from a minimum degree
/// vertex, always adding the vertex that leaves the fewest open vertices.
pub(crate) fn frontier_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut done = vec![false; n];
    let mut rem: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut touched = vec![0usize; n];
    let mut frontier = 0usize;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let leaving = |v: usize, rem: &[usize], done: &[bool]| g.neighbors(v).filter(|&w| done[w] && rem[w] == 1).count();
        let candidates: Vec<usize> = (0..n).filter(|&v| !done[v] && touched[v] > 0).collect();
        let v = if candidates.is_empty() {
            (0..n).filter(|&v| !done[v]).min_by_key(|&v| (g.degree(v), v)).expect("vertex left")
        } else {
            *candidates
                .iter()
                .min_by_key(|&&v| {
                    let stays = usize::from(g.degree(v) > touched[v]);
                    (frontier + stays - leaving(v, &rem, &done), std::cmp::Reverse(touched[v]), v)
                })
                .expect("candidate")
        };
        frontier = frontier + usize::from(g.degree(v) > touched[v]) - leaving(v, &rem, &done);
        done[v] = true;
        rem[v] = g.degree(v) - touched[v];
        for w in g.neighbors(v) {
            if done[w] {
                rem[w] -= 1;
            } else {
                touched[w] += 1;
            }
        }
        order.push(v);
    }
    order
}

fn bits(state: &[u64]) -> impl Iterator<Item = usize> + '_ {
    state.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + b
            })
        })
    })
}

/// 64-bit finalizer from SplitMix64.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn set_bit(state: &mut [u64], i: usize) {
    state[i / 64] |= 1 << (i % 64);
}

/// A state decoded once so that every adversary choice can be applied to it
/// cheaply: per element, its index restricted to the staying coordinates and
/// its colors at the back neighbors.
#[derive(Default)]
struct Expanded {
    bases: Vec<u32>,
    back_colors: Vec<u8>,
}

#[derive(Default)]
struct Ctx {
    labels: Vec<Elem>,
    forbid: Vec<u64>,
    digits: Vec<u8>,
    hist: Vec<u32>,
    suffix: Vec<u64>,
    prefix: Vec<u64>,
}

impl<'a> Game<'a> {
    pub(crate) fn new(
        g: &Graph,
        o: &Orientation,
        group: &'a Group,
        adv: &Adversary,
        order: &[usize],
    ) -> Result<Game<'a>, CheckError> {
        let n = g.vertex_count();
        let radix = group.order();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut rem: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut frontier: Vec<usize> = Vec::new();
        let mut steps = Vec::with_capacity(n);
        for (i, &v) in order.iter().enumerate() {
            let mut back: Vec<(usize, usize)> = g.adjacency(v).iter().copied().filter(|&(w, _)| pos[w] < i).collect();
            back.sort_by_key(|&(w, _)| pos[w]);
            let back: Vec<BackEdge> = back
                .into_iter()
                .map(|(w, e)| BackEdge {
                    neighbor: w,
                    coord: frontier.iter().position(|&x| x == w).expect("back neighbor on frontier"),
                    edge: e,
                    neighbor_is_tail: o.arc(g, e).0 == w,
                    free: adv.free_edge[e],
                })
                .collect();
            for b in &back {
                rem[b.neighbor] -= 1;
            }
            rem[v] -= back.len();
            let mut next = Vec::new();
            let mut keep = Vec::new();
            let mut weight: u64 = 1;
            for (c, &w) in frontier.iter().enumerate() {
                if rem[w] > 0 {
                    keep.push((c, weight as u32));
                    next.push(w);
                    weight *= radix as u64;
                }
            }
            let new_weight = (rem[v] > 0).then(|| {
                next.push(v);
                let w = weight as u32;
                weight *= radix as u64;
                w
            });
            if weight > MAX_STATE_BITS {
                return Err(CheckError::FrontierTooWide { coords: next.len() });
            }
            let lists = adv.list_options[v].clone();
            let choices = back
                .iter()
                .filter(|b| b.free)
                .fold(lists.len() as u64, |acc, _| acc.saturating_mul(radix as u64));
            steps.push(Step {
                vertex: v,
                back,
                keep,
                new_weight,
                prev_width: frontier.len(),
                words: (weight as usize).div_ceil(64),
                frontier: next.clone(),
                lists,
                choices,
            });
            frontier = next;
        }
        Ok(Game { group, radix, steps })
    }

    fn initial_state() -> State {
        vec![1]
    }

    fn decode(&self, step: &Step, mut choice: u64, labels: &mut Vec<Elem>) -> ElemSet {
        let nl = step.lists.len() as u64;
        let list = step.lists[(choice % nl) as usize];
        choice /= nl;
        labels.clear();
        for b in &step.back {
            if b.free {
                let k = self.radix as u64;
                labels.push(Elem::raw((choice % k) as usize));
                choice /= k;
            } else {
                labels.push(self.group.zero());
            }
        }
        list
    }

    fn digits_of(&self, mut idx: usize, width: usize, out: &mut Vec<u8>) {
        for _ in 0..width {
            out.push((idx % self.radix) as u8);
            idx /= self.radix;
        }
    }

    fn expand(&self, step: &Step, state: &[u64], ex: &mut Expanded, ctx: &mut Ctx) {
        ex.bases.clear();
        ex.back_colors.clear();
        for idx in bits(state) {
            ctx.digits.clear();
            self.digits_of(idx, step.prev_width, &mut ctx.digits);
            ex.bases.push(step.keep.iter().map(|&(c, w)| ctx.digits[c] as u32 * w).sum());
            ex.back_colors.extend(step.back.iter().map(|b| ctx.digits[b.coord]));
        }
    }

    /// Applies one adversary choice to an expanded state.
    fn apply(&self, step: &Step, ex: &Expanded, choice: u64, ctx: &mut Ctx) -> State {
        let list = self.decode(step, choice, &mut ctx.labels).bits();
        let r = self.radix;
        ctx.forbid.clear();
        for (b, &lab) in step.back.iter().zip(&ctx.labels) {
            let m = forbid_multiplier(self.group, lab, b.neighbor_is_tail);
            ctx.forbid.extend((0..r).map(|c| 1u64 << self.group.op(m, Elem::raw(c)).index()));
        }
        let nb = step.back.len();
        let mut out = vec![0u64; step.words];
        for (i, &base) in ex.bases.iter().enumerate() {
            let mut allowed = list;
            for (j, &c) in ex.back_colors[i * nb..(i + 1) * nb].iter().enumerate() {
                allowed &= !ctx.forbid[j * r + c as usize];
            }
            if allowed == 0 {
                continue;
            }
            match step.new_weight {
                Some(w) => {
                    while allowed != 0 {
                        let c = allowed.trailing_zeros();
                        allowed &= allowed - 1;
                        set_bit(&mut out, (base + c * w) as usize);
                    }
                }
                None => set_bit(&mut out, base as usize),
            }
        }
        out
    }

    /// Replaces `state` by a representative of its class under independent
    /// left translation of each coordinate, and stores the per-coordinate
    /// translation used in `shift`.
    ///
    /// The game value is the same for every member of the class: a shift of
    /// a frontier vertex's color is absorbed by the free labels on its later
    /// edges, after re-normalizing the vertices revealed after it.
    ///
    /// Coordinates are fixed one at a time, each moving its lowest-scoring
    /// value to zero. A score depends only on the colors already fixed and on
    /// value frequencies, so it is unchanged by translating the coordinates
    /// not yet fixed. Ties take the smallest value; when a tie is not a
    /// symmetry of the state this can split a class, never merge two.
    fn canonicalize(&self, step: &Step, state: &mut State, shift: &mut Vec<Elem>, ctx: &mut Ctx) {
        let w = step.frontier.len();
        shift.clear();
        if w == 0 {
            return;
        }
        let r = self.radix;
        let digits = &mut ctx.digits;
        digits.clear();
        for idx in bits(state) {
            self.digits_of(idx, w, digits);
        }
        let count = digits.len() / w;
        ctx.hist.clear();
        ctx.hist.resize(w * r, 0);
        for e in 0..count {
            for j in 0..w {
                ctx.hist[j * r + digits[e * w + j] as usize] += 1;
            }
        }
        // suffix[j * count + e]: frequencies of coloring e's values at j.., hashed.
        let suffix = &mut ctx.suffix;
        suffix.clear();
        suffix.resize((w + 1) * count, 0);
        for j in (0..w).rev() {
            for e in 0..count {
                let h = u64::from(ctx.hist[j * r + digits[e * w + j] as usize]);
                suffix[j * count + e] = mix(suffix[(j + 1) * count + e] ^ h ^ (j as u64) << 40);
            }
        }
        // prefix[e]: coloring e's already fixed colors, hashed.
        let prefix = &mut ctx.prefix;
        prefix.clear();
        prefix.resize(count, 0x9e37_79b9_7f4a_7c15);
        let mut score = [0u64; 64];
        for j in 0..w {
            score[..r].fill(0);
            let mut present = 0u64;
            for e in 0..count {
                let x = digits[e * w + j] as usize;
                score[x] = score[x].wrapping_add(mix(prefix[e] ^ suffix[j * count + e]));
                present |= 1 << x;
            }
            let x = (0..r).filter(|&x| present >> x & 1 == 1).min_by_key(|&x| score[x]).expect("nonempty state");
            let inv = self.group.inverse(Elem::raw(x));
            shift.push(inv);
            for e in 0..count {
                let c = &mut digits[e * w + j];
                *c = self.group.op(inv, Elem::raw(*c as usize)).index() as u8;
                prefix[e] = mix(prefix[e] ^ u64::from(*c) ^ (j as u64) << 48);
            }
        }
        state.iter_mut().for_each(|x| *x = 0);
        for e in 0..count {
            let idx = digits[e * w..(e + 1) * w].iter().rev().fold(0usize, |acc, &d| acc * r + d as usize);
            set_bit(state, idx);
        }
    }

    /// Successor of an expanded state under `choice`, canonicalized; `None`
    /// when the choice leaves no coloring.
    fn advance(&self, step: &Step, ex: &Expanded, choice: u64, ctx: &mut Ctx, shift: &mut Vec<Elem>) -> Option<State> {
        let mut next = self.apply(step, ex, choice, ctx);
        if next.iter().all(|&w| w == 0) {
            return None;
        }
        self.canonicalize(step, &mut next, shift, ctx);
        Some(next)
    }

    /// Replays the failing choices, undoing the translations made along the
    /// way so the labels refer to actual colors.
    fn witness(&self, g: &Graph, o: &Orientation, path: &[u64]) -> Witness {
        let mut f = EdgeLabeling::from_values(vec![self.group.zero(); g.edge_count()]);
        let mut lists = vec![ElemSet::EMPTY; g.vertex_count()];
        // Searched color of w = tr[w] * actual color of w.
        let mut tr = vec![self.group.zero(); g.vertex_count()];
        let mut labels = Vec::new();
        let mut ctx = Ctx::default();
        let mut ex = Expanded::default();
        let mut shift = Vec::new();
        let mut state = Some(Self::initial_state());
        for (i, step) in self.steps.iter().enumerate() {
            let choice = path.get(i).copied().unwrap_or(0);
            lists[step.vertex] = self.decode(step, choice, &mut labels);
            for (b, &lab) in step.back.iter().zip(&labels) {
                let t = tr[b.neighbor];
                let actual = if b.neighbor_is_tail {
                    self.group.op(self.group.inverse(t), lab)
                } else {
                    self.group.op(lab, t)
                };
                f.set(b.edge, actual);
            }
            if let Some(s) = state.take().filter(|_| i + 1 < path.len()) {
                self.expand(step, &s, &mut ex, &mut ctx);
                state = self.advance(step, &ex, choice, &mut ctx, &mut shift);
                for (&w, &s) in step.frontier.iter().zip(&shift) {
                    tr[w] = self.group.op(s, tr[w]);
                }
            }
        }
        Witness::new(g, o, &f, &ListAssignment::from_sets(lists))
    }
}

const MEMO_WORDS: usize = 1 << 25;
const CHARGE_EVERY: u64 = 256;

struct Task<'g, 'a> {
    game: &'g Game<'a>,
    meter: &'g Meter,
    memo: Vec<FxHashSet<Box<[u64]>>>,
    memo_words: usize,
    nodes: u64,
    pending: u64,
    ctx: Ctx,
    shift: Vec<Elem>,
}

impl<'g, 'a> Task<'g, 'a> {
    fn new(game: &'g Game<'a>, meter: &'g Meter) -> Self {
        Task {
            game,
            meter,
            memo: (0..game.steps.len()).map(|_| FxHashSet::default()).collect(),
            memo_words: 0,
            nodes: 0,
            pending: 0,
            ctx: Ctx::default(),
            shift: Vec::new(),
        }
    }

    fn tick(&mut self) -> Result<(), CheckError> {
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= CHARGE_EVERY {
            self.meter.charge(self.pending)?;
            self.pending = 0;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<(), CheckError> {
        let p = std::mem::take(&mut self.pending);
        self.meter.charge(p)
    }

    /// The adversary's failing choices from `step` on, in reverse, if any.
    fn explore(&mut self, step: usize, state: &[u64]) -> Result<Option<Vec<u64>>, CheckError> {
        if step == self.game.steps.len() || self.memo[step].contains(state) {
            return Ok(None);
        }
        let s = &self.game.steps[step];
        let mut ex = Expanded::default();
        self.game.expand(s, state, &mut ex, &mut self.ctx);
        for choice in 0..s.choices {
            self.tick()?;
            let Some(next) = self.game.advance(s, &ex, choice, &mut self.ctx, &mut self.shift) else {
                return Ok(Some(vec![choice]));
            };
            if let Some(mut path) = self.explore(step + 1, &next)? {
                path.push(choice);
                return Ok(Some(path));
            }
        }
        if self.memo_words + state.len() > MEMO_WORDS {
            self.memo.iter_mut().for_each(|m| m.clear());
            self.memo_words = 0;
        }
        self.memo_words += state.len();
        self.memo[step].insert(state.into());
        Ok(None)
    }
}

enum Item {
    Open(Vec<u64>, State),
    Failed(Vec<u64>),
}

const SPLIT_TARGET: usize = 16;
const SPLIT_MAX: u64 = 4096;

pub(crate) fn run(
    g: &Graph,
    o: &Orientation,
    group: &Group,
    adv: &Adversary,
    order: &[usize],
    opts: &CheckOptions,
) -> Result<Verdict, CheckError> {
    let game = Game::new(g, o, group, adv, order)?;
    let meter = Meter::new(opts.budget);
    let mut prefix_nodes = 0u64;
    let mut items = vec![Item::Open(Vec::new(), Game::initial_state())];
    let mut depth = 0;
    let mut ctx = Ctx::default();
    let mut ex = Expanded::default();
    let mut shift = Vec::new();
    // Expand the first few steps breadth-first into independent subproblems,
    // kept in the order a depth-first search would visit them.
    while depth < game.steps.len() && items.len() < SPLIT_TARGET {
        let step = &game.steps[depth];
        if (items.len() as u64).saturating_mul(step.choices) > SPLIT_MAX {
            break;
        }
        let mut next = Vec::new();
        'expand: for item in items {
            match item {
                Item::Failed(p) => {
                    next.push(Item::Failed(p));
                    break 'expand;
                }
                Item::Open(p, s) => {
                    game.expand(step, &s, &mut ex, &mut ctx);
                    prefix_nodes += step.choices;
                    meter.charge(step.choices)?;
                    for choice in 0..step.choices {
                        let mut q = p.clone();
                        q.push(choice);
                        match game.advance(step, &ex, choice, &mut ctx, &mut shift) {
                            Some(t) => next.push(Item::Open(q, t)),
                            None => {
                                next.push(Item::Failed(q));
                                break 'expand;
                            }
                        }
                    }
                }
            }
        }
        items = next;
        depth += 1;
    }

    let task_nodes: Vec<AtomicU64> = items.iter().map(|_| AtomicU64::new(0)).collect();
    let found = find_first(items.len(), opts.exec, |i| match &items[i] {
        Item::Failed(p) => Some(Ok(p.clone())),
        Item::Open(p, s) => {
            let mut task = Task::new(&game, &meter);
            let r = task.explore(depth, s).and_then(|r| task.flush().map(|_| r));
            task_nodes[i].store(task.nodes, Relaxed);
            match r {
                Ok(None) => None,
                Ok(Some(rest)) => {
                    let mut full = p.clone();
                    full.extend(rest.into_iter().rev());
                    Some(Ok(full))
                }
                Err(e) => Some(Err(e)),
            }
        }
    });
    let counted = |upto: usize| prefix_nodes + task_nodes[..upto].iter().map(|n| n.load(Relaxed)).sum::<u64>();
    match found {
        None => Ok(Verdict {
            status: Status::Holds,
            witness: None,
            stats: SearchStats { nodes: counted(items.len()), elapsed: meter.elapsed() },
        }),
        Some((_, Err(e))) => Err(e),
        Some((i, Ok(path))) => Ok(Verdict {
            status: Status::Fails,
            witness: Some(game.witness(g, o, &path)),
            stats: SearchStats { nodes: counted(i + 1), elapsed: meter.elapsed() },
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use rand::{Rng, SeedableRng};

    fn translate(game: &Game, s: &[u64], t: &[Elem]) -> State {
        let (w, r) = (t.len(), game.radix);
        let mut out = vec![0u64; s.len()];
        for i in bits(s) {
            let mut d = Vec::new();
            game.digits_of(i, w, &mut d);
            let idx = (0..w).rev().fold(0, |acc, j| acc * r + game.group.op(t[j], Elem::raw(d[j] as usize)).index());
            set_bit(&mut out, idx);
        }
        out
    }

    /// The representative is the input moved by the reported shift, and
    /// translates of a state almost always get the same representative.
    #[test]
    fn canonical_form_is_a_translate() {
        for (name, width) in [("Z5", 2usize), ("Z4", 3), ("Z2xZ2", 3), ("Z3", 4), ("S3", 2)] {
            let group = Group::parse(name).unwrap();
            let g = graph::star(width).unwrap();
            let o = graph::orient(&g, 0);
            let order: Vec<usize> = (1..=width).chain([0]).collect();
            let sizes = vec![group.order(); g.vertex_count()];
            let adv = Adversary::normalized(&g, &group, &sizes, &order);
            let game = Game::new(&g, &o, &group, &adv, &order).unwrap();
            let step = &game.steps[width - 1];
            assert_eq!(step.frontier.len(), width);
            let r = group.order();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
            let (mut ctx, mut shift) = (Ctx::default(), Vec::new());
            let mut same = 0;
            for _ in 0..200 {
                let mut s = vec![0u64; step.words];
                for i in 0..r.pow(width as u32) {
                    if rng.gen_bool(0.3) {
                        set_bit(&mut s, i);
                    }
                }
                set_bit(&mut s, 0);
                let t: Vec<Elem> = (0..width).map(|_| Elem::raw(rng.gen_range(0..r))).collect();
                let moved = translate(&game, &s, &t);
                let mut a = s.clone();
                game.canonicalize(step, &mut a, &mut shift, &mut ctx);
                assert_eq!(a, translate(&game, &s, &shift), "{name}");
                let mut b = moved.clone();
                game.canonicalize(step, &mut b, &mut shift, &mut ctx);
                assert_eq!(b, translate(&game, &moved, &shift), "{name}");
                same += usize::from(a == b);
            }
            eprintln!("{name}: {same}/200");
            assert!(same >= 150, "{name}: only {same} of 200 translates merged");
        }
    }
}
