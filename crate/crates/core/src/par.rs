//! Data-parallel helpers. With the `parallel` feature off, or with
//! [`ExecMode::Sequential`], everything runs on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    #[cfg(feature = "parallel")]
    fn parallel(self) -> bool {
        self == ExecMode::Parallel
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Map then fold with an associative `merge`; `init` builds an empty accumulator.
pub fn map_reduce<T, A, I, F, M>(mode: ExecMode, items: &[T], init: I, fold: F, merge: M) -> A
where
    T: Sync,
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &T) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.parallel() {
        return items.par_iter().fold(&init, &fold).reduce(&init, &merge);
    }
    let _ = (mode, &merge);
    items.iter().fold(init(), fold)
}

/// True iff `pred` holds for every item.
pub fn all<T, F>(mode: ExecMode, items: &[T], pred: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.parallel() {
        return items.par_iter().all(pred);
    }
    let _ = mode;
    items.iter().all(pred)
}
