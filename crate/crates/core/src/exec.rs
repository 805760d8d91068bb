//! Sequential or rayon-backed evaluation of independent work items.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How data-parallel loops are run. Without the `parallel` feature both
/// variants run sequentially.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Fallible map that stops at the first error in item order.
    pub fn try_map<T, R, E, F>(self, items: &[T], f: F) -> Result<Vec<R>, E>
    where
        T: Sync,
        R: Send,
        E: Send,
        F: Fn(&T) -> Result<R, E> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Maps over `0..n`.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// First item (in order) for which `f` returns `Some`.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<(usize, R)>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items
                .par_iter()
                .enumerate()
                .filter_map(|(i, t)| f(t).map(|r| (i, r)))
                .find_first(|_| true),
            _ => items.iter().enumerate().find_map(|(i, t)| f(t).map(|r| (i, r))),
        }
    }

    /// Fallible variant of [`Execution::find_first`]; an error counts as a hit.
    pub fn try_find_first<T, R, E, F>(self, items: &[T], f: F) -> Result<Option<(usize, R)>, E>
    where
        T: Sync,
        R: Send,
        E: Send,
        F: Fn(&T) -> Result<Option<R>, E> + Sync + Send,
    {
        let hit = self.find_first(items, |t| match f(t) {
            Ok(None) => None,
            Ok(Some(r)) => Some(Ok(r)),
            Err(e) => Some(Err(e)),
        });
        match hit {
            None => Ok(None),
            Some((i, Ok(r))) => Ok(Some((i, r))),
            Some((_, Err(e))) => Err(e),
        }
    }
}
