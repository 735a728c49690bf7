use super::Exec;

/// Lowest index `i < n` for which `f(i)` is `Some`, evaluating in parallel
/// when asked to and the `parallel` feature is on.
pub(crate) fn find_first<T, F>(n: usize, exec: Exec, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)));
    }
    #[cfg(not(feature = "parallel"))]
    let _ = exec;
    (0..n).find_map(|i| f(i).map(|t| (i, t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_index_wins() {
        for exec in [Exec::Parallel, Exec::Sequential] {
            let r = find_first(1000, exec, |i| (i % 7 == 3 && i > 20).then_some(i * 2));
            assert_eq!(r, Some((24, 48)));
            assert_eq!(find_first(10, exec, |_| None::<u8>), None);
        }
    }
}
