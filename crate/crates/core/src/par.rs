//! Order-preserving data-parallel map.
//!
//! With the `parallel` feature the work runs on rayon; `threads = Some(1)` or a
//! build without the feature takes the sequential path. Both produce the same
//! output order.

/// How many workers a parallel operation may use. `None` means the global
/// rayon pool; `Some(1)` forces the sequential path.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Threads(pub Option<usize>);

impl Threads {
    pub const SEQUENTIAL: Threads = Threads(Some(1));
    pub const AUTO: Threads = Threads(None);

    pub fn is_sequential(self) -> bool {
        !cfg!(feature = "parallel") || self.0 == Some(1)
    }
}

pub fn map_ordered<T, R, F>(items: &[T], threads: Threads, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if threads.is_sequential() {
        return items.iter().map(f).collect();
    }
    parallel::map(items, threads, f)
}

#[cfg(feature = "parallel")]
mod parallel {
    use super::Threads;
    use rayon::prelude::*;

    pub(super) fn map<T, R, F>(items: &[T], threads: Threads, f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match threads.0 {
            None => items.par_iter().map(f).collect(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("failed to build thread pool")
                .install(|| items.par_iter().map(f).collect()),
        }
    }
}

#[cfg(not(feature = "parallel"))]
mod parallel {
    use super::Threads;

    pub(super) fn map<T, R, F>(items: &[T], _threads: Threads, f: F) -> Vec<R>
    where
        F: Fn(&T) -> R,
    {
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map_ordered(&items, Threads::SEQUENTIAL, |x| x * x);
        let par = map_ordered(&items, Threads(Some(4)), |x| x * x);
        let auto = map_ordered(&items, Threads::AUTO, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq, auto);
    }
}
