//! Brute-force reference for the exhaustive checkers: no normalization, no
//! propagation, every labeling and every list assignment on a fixed
//! orientation. Only usable on very small graphs.

use crate::graph::{Graph, Orientation};
use crate::group::{Elem, Group};

/// True when every labeling and every assignment of lists with sizes
/// `sizes[v]` admits a coloring.
pub fn universal_naive(g: &Graph, o: &Orientation, group: &Group, sizes: &[usize]) -> bool {
    let order = group.order();
    let arcs = o.arcs(g);
    let list_choices: Vec<Vec<Vec<usize>>> = sizes
        .iter()
        .map(|&s| {
            (0u64..1 << order)
                .filter(|m| m.count_ones() as usize == s)
                .map(|m| (0..order).filter(|&i| m >> i & 1 == 1).collect())
                .collect()
        })
        .collect();
    let mut labels = vec![0usize; arcs.len()];
    loop {
        let mut pick = vec![0usize; sizes.len()];
        loop {
            let lists: Vec<&Vec<usize>> = pick.iter().enumerate().map(|(v, &i)| &list_choices[v][i]).collect();
            if !some_coloring(group, &arcs, &labels, &lists) {
                return false;
            }
            if !advance(&mut pick, |v| list_choices[v].len()) {
                break;
            }
        }
        if !advance(&mut labels, |_| order) {
            return true;
        }
    }
}

fn some_coloring(group: &Group, arcs: &[(usize, usize)], labels: &[usize], lists: &[&Vec<usize>]) -> bool {
    if lists.iter().any(|l| l.is_empty()) {
        return false;
    }
    let mut pick = vec![0usize; lists.len()];
    let el = |i: usize| group.elem(i).expect("element");
    loop {
        let c: Vec<Elem> = pick.iter().enumerate().map(|(v, &i)| el(lists[v][i])).collect();
        if arcs.iter().zip(labels).all(|(&(x, y), &f)| group.sub(c[x], c[y]).index() != f) {
            return true;
        }
        if !advance(&mut pick, |v| lists[v].len()) {
            return false;
        }
    }
}

/// Odometer step; false after the last combination.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for (i, d) in digits.iter_mut().enumerate() {
        *d += 1;
        if *d < radix(i) {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, orient};

    #[test]
    fn tiny_cases_by_hand() {
        let p2 = graph::path(2).unwrap();
        let z2 = Group::parse("Z2").unwrap();
        let o = orient(&p2, 0);
        assert!(universal_naive(&p2, &o, &z2, &[2, 2]));
        assert!(!universal_naive(&p2, &o, &z2, &[1, 1]));
        let k3 = graph::complete(3).unwrap();
        assert!(!universal_naive(&k3, &orient(&k3, 0), &z2, &[2, 2, 2]));
        assert!(universal_naive(&Graph::empty(0), &orient(&Graph::empty(0), 0), &z2, &[]));
    }
}
