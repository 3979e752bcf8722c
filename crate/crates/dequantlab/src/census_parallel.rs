//! Exhaustive census split across threads.

use std::thread;

use dequantlab_core::census::{scan_tables, table_count, CensusError, CensusReport, CensusTally};

/// Scans all `2^{2^n}` tables in `threads` contiguous chunks and merges the
/// tallies in index order, so the separable set comes out sorted.
pub fn parallel_census(n: usize, threads: usize) -> Result<CensusReport, CensusError> {
    let total = table_count(n)?;
    let threads = threads.max(1) as u64;
    let chunk = total.div_ceil(threads);
    let tallies = thread::scope(|s| {
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                let start = (t * chunk).min(total);
                let end = ((t + 1) * chunk).min(total);
                s.spawn(move || scan_tables(n, start..end))
            })
            .collect();
        workers
            .into_iter()
            .map(|w| w.join().expect("census worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let tally = tallies
        .into_iter()
        .fold(CensusTally::default(), CensusTally::merge);
    CensusReport::from_tally(n, tally)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dequantlab_core::census::brute_force_census;

    #[test]
    fn matches_single_threaded_scan() {
        for n in 1..=3 {
            for threads in [1, 3, 4, 7] {
                assert_eq!(
                    parallel_census(n, threads).unwrap(),
                    brute_force_census(n).unwrap()
                );
            }
        }
    }

    #[test]
    fn rejects_large_arity() {
        assert!(parallel_census(5, 4).is_err());
    }
}
