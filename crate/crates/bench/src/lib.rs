//! Seeded inputs shared by the benchmarks.

use qcoset::verify::random::{self, trial_rng};
use qcoset::{Gf, Mat, Object, Window};

pub fn square(field: &Gf, n: usize, seed: u64) -> Mat {
    random::mat(&mut trial_rng(seed, 0), field, n, n)
}

/// `count` composable window pairs `(0,s) <- (0,s) <- (0,s)`.
pub fn window_pairs(
    field: &Gf,
    size: usize,
    pad: usize,
    count: usize,
    seed: u64,
) -> Vec<(Window, Window)> {
    let a = Object::new(0, size as i64).expect("size fits");
    let mut rng = trial_rng(seed, 1);
    (0..count)
        .map(|_| {
            (
                random::window(&mut rng, field, a, a, pad),
                random::window(&mut rng, field, a, a, pad),
            )
        })
        .collect()
}
