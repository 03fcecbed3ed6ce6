//! Sentence-level fold planning and train/test splitting, seeded for
//! reproducibility.

use super::{CorpusError, Dataset};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Assignment of every sentence to one of `k` folds; sizes differ by at
/// most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldPlan {
    pub k: usize,
    pub assignment: Vec<usize>,
    pub seed: u64,
}

impl FoldPlan {
    /// Sentence indices held out by `fold` and the complement, both in
    /// original corpus order.
    pub fn split_indices(&self, fold: usize) -> (Vec<usize>, Vec<usize>) {
        let mut train = Vec::new();
        let mut test = Vec::new();
        for (i, &f) in self.assignment.iter().enumerate() {
            if f == fold {
                test.push(i);
            } else {
                train.push(i);
            }
        }
        (train, test)
    }

    /// Materializes the train/test datasets for one fold.
    pub fn fold_datasets(&self, d: &Dataset, fold: usize) -> (Dataset, Dataset) {
        let (train, test) = self.split_indices(fold);
        (d.select(&train), d.select(&test))
    }
}

pub fn make_folds(d: &Dataset, k: usize, seed: u64) -> Result<FoldPlan, CorpusError> {
    let n = d.n_sentences();
    if k < 2 {
        return Err(CorpusError::FoldCountTooSmall(k));
    }
    if k > n {
        return Err(CorpusError::TooManyFolds { k, n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut assignment = vec![0usize; n];
    for (pos, &sent) in order.iter().enumerate() {
        assignment[sent] = pos % k;
    }
    Ok(FoldPlan { k, assignment, seed })
}

/// Splits sentences into train/test at the given test ratio. Sentences keep
/// their original relative order within each side.
pub fn train_test_split(
    d: &Dataset,
    test_ratio: f64,
    seed: u64,
) -> Result<(Dataset, Dataset), CorpusError> {
    let n = d.n_sentences();
    if !(0.0..=1.0).contains(&test_ratio) || test_ratio == 0.0 || test_ratio == 1.0 {
        return Err(CorpusError::DegenerateSplit(test_ratio));
    }
    let n_test = (n as f64 * test_ratio).round() as usize;
    if n_test == 0 || n_test == n {
        return Err(CorpusError::DegenerateSplit(test_ratio));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut test: Vec<usize> = order[..n_test].to_vec();
    let mut train: Vec<usize> = order[n_test..].to_vec();
    train.sort_unstable();
    test.sort_unstable();
    Ok((d.select(&train), d.select(&test)))
}
