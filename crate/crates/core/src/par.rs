//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] fans work
//! out over the rayon thread pool; without it both modes run sequentially.
//! Results are always returned in input order, so output never depends on
//! the mode.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Sum of `f(i)` over the range.
    pub fn sum_range<F>(self, range: Range<usize>, f: F) -> u64
    where
        F: Fn(usize) -> u64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).sum();
        }
        range.map(f).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = Exec::Parallel.map(&xs, |x| x * x);
        let b = Exec::Sequential.map(&xs, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(
            Exec::Parallel.sum_range(0..100, |i| i as u64),
            Exec::Sequential.sum_range(0..100, |i| i as u64)
        );
    }
}
