//! Data-parallel helpers with a sequential fallback.
//!
//! Results never depend on the execution mode: maps return items in index
//! order and reductions combine them in a fixed pairwise tree.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Execution {
    Sequential,
    /// Runs on the rayon pool when the `parallel` feature is enabled,
    /// sequentially otherwise.
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

/// `(0..n).map(f)` collected in index order.
pub fn map_indexed<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Balanced pairwise reduction; `None` for an empty input.
pub fn pairwise_reduce<T, F>(mut items: Vec<T>, combine: F) -> Option<T>
where
    F: Fn(T, T) -> T,
{
    while items.len() > 1 {
        let mut next = Vec::with_capacity(items.len().div_ceil(2));
        let mut it = items.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(combine(a, b)),
                None => next.push(a),
            }
        }
        items = next;
    }
    items.pop()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let v = map_indexed(1000, exec, |i| i * i);
            assert!(v.iter().enumerate().all(|(i, &x)| x == i * i));
        }
    }

    #[test]
    fn reduce_is_mode_independent() {
        let xs: Vec<f64> = (0..1001).map(|i| (i as f64).sin() * 1e-3 + 1.0).collect();
        let a = pairwise_reduce(xs.clone(), |a, b| a + b).unwrap();
        let par = map_indexed(xs.len(), Execution::Parallel, |i| xs[i]);
        let b = pairwise_reduce(par, |a, b| a + b).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
        assert!(pairwise_reduce(Vec::<f64>::new(), |a, b| a + b).is_none());
    }
}
