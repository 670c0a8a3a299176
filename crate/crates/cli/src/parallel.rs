//! Message-space partitioning for exhaustive enumeration on a rayon pool.

use std::ops::Range;

use qrgp_core::cyccode::{PackedCode, WeightEnumerator};
use rayon::prelude::*;

/// Worker count used when neither the flag nor `QR_WORKERS` is given.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn chunks(total: u128, workers: usize) -> Vec<Range<u128>> {
    let parts = (workers.max(1) * 4) as u128;
    let step = total.div_ceil(parts).max(1);
    (0..total.div_ceil(step)).map(|i| i * step..((i + 1) * step).min(total)).collect()
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().expect("thread pool")
}

/// Weight distribution over messages `0..total`.
pub fn weight_counts(code: &PackedCode, total: u128, workers: usize) -> WeightEnumerator {
    let ranges = chunks(total, workers);
    pool(workers).install(|| {
        ranges
            .into_par_iter()
            .map(|r| code.weight_counts(r))
            .reduce(|| WeightEnumerator::zeros(code.length()), |mut a, b| {
                a.merge(&b);
                a
            })
    })
}

/// Words of weight `weight` in message order, independent of `workers`.
pub fn words_of_weight(code: &PackedCode, total: u128, weight: usize, workers: usize) -> Vec<Vec<u32>> {
    let ranges = chunks(total, workers);
    let parts: Vec<Vec<Vec<u32>>> =
        pool(workers).install(|| ranges.into_par_iter().map(|r| code.words_of_weight(r, weight)).collect());
    parts.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range() {
        for (total, w) in [(0u128, 3), (1, 8), (10, 3), (1 << 20, 8)] {
            let c = chunks(total, w);
            let covered: u128 = c.iter().map(|r| r.end - r.start).sum();
            assert_eq!(covered, total);
            for pair in c.windows(2) {
                assert_eq!(pair[0].end, pair[1].start);
            }
        }
    }
}
