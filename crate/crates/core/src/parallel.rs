//! Deterministic worker-pool helper.
//!
//! `TWISTKIT_WORKERS` (a positive integer) controls how many OS threads the
//! per-simplex residual checks may use. Results are merged in input order, so
//! exact-arithmetic outputs are identical at every worker count.

use std::env;

pub fn worker_count() -> usize {
    match env::var("TWISTKIT_WORKERS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => n,
            _ => 1,
        },
        Err(_) => 1,
    }
}

/// Apply `f` to each item, possibly across threads, preserving input order.
pub fn ordered_map<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    I: Send + Sync,
    O: Send,
    F: Fn(&I) -> O + Sync,
{
    let workers = worker_count().min(items.len().max(1));
    if workers <= 1 || items.len() < 2 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let slots: Vec<(usize, &[I])> = items.chunks(chunk).enumerate().collect();
    let mut results: Vec<(usize, Vec<O>)> = Vec::new();
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = slots
            .into_iter()
            .map(|(idx, part)| scope.spawn(move || (idx, part.iter().map(f).collect::<Vec<O>>())))
            .collect();
        for h in handles {
            results.push(h.join().expect("worker panicked"));
        }
    });
    results.sort_by_key(|(idx, _)| *idx);
    let mut flat = Vec::with_capacity(items.len());
    for (_, part) in results {
        flat.extend(part);
    }
    flat
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let data: Vec<u64> = (0..100).collect();
        let doubled = ordered_map(data.clone(), |x| x * 2);
        assert_eq!(doubled, data.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn worker_count_defaults_to_one() {
        // Unset in the test environment unless the caller exported it.
        if env::var("TWISTKIT_WORKERS").is_err() {
            assert_eq!(worker_count(), 1);
        }
    }
}
