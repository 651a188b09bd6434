//! Data-parallel evaluation of independent candidate batches.
//!
//! The solver spends nearly all of its time on minimum-cut evaluations that
//! are independent of each other; with the `parallel` feature those batches
//! run on rayon. Every candidate carries a total order, and the batch result
//! is the Ord-minimum, so the parallel and sequential paths return
//! bit-identical answers regardless of scheduling.

/// Evaluates `eval` on every item and returns the smallest `Some` result.
#[cfg(feature = "parallel")]
pub fn min_candidate<I, C, F>(items: Vec<I>, eval: F) -> Option<C>
where
    I: Send,
    C: Ord + Send,
    F: Fn(I) -> Option<C> + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().filter_map(eval).min()
}

/// Evaluates `eval` on every item and returns the smallest `Some` result.
#[cfg(not(feature = "parallel"))]
pub fn min_candidate<I, C, F>(items: Vec<I>, eval: F) -> Option<C>
where
    I: Send,
    C: Ord + Send,
    F: Fn(I) -> Option<C> + Sync + Send,
{
    items.into_iter().filter_map(eval).min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn returns_minimum_over_all_items() {
        let got = min_candidate((0..100).collect(), |i| {
            if i % 7 == 3 {
                Some((i % 10, i))
            } else {
                None
            }
        });
        assert_eq!(got, Some((0, 10)));
    }

    #[test]
    fn empty_and_all_filtered() {
        assert_eq!(min_candidate(Vec::<u32>::new(), |i| Some(i)), None);
        assert_eq!(min_candidate(vec![1, 2, 3], |_| None::<u32>), None);
    }
}
