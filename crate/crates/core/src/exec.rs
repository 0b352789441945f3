//! Evaluation strategy for the data-parallel loops (box scans, sweep cells,
//! corpus trials).
//!
//! With the `parallel` feature the `Parallel` strategy runs on the rayon
//! global pool; without it, `Parallel` degrades to the sequential path.
//! Results are always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn filter<T, F>(self, items: Vec<T>, pred: F) -> Vec<T>
    where
        T: Send + Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.into_par_iter().filter(|x| pred(x)).collect();
        }
        items.into_iter().filter(|x| pred(x)).collect()
    }

    /// The first element, in input order, satisfying `pred`.
    pub fn find_first<T, F>(self, items: &[T], pred: F) -> Option<&T>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().find_first(|x| pred(x));
        }
        items.iter().find(|x| pred(x))
    }

    pub fn any<T, F>(self, items: &[T], pred: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().any(pred);
        }
        items.iter().any(pred)
    }
}
