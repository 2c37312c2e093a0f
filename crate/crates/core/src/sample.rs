//! Random generators for matroids and positroids, used by tests and
//! benchmarks.

use crate::matroid::Matroid;
use crate::positroid::{permutation_to_matroid, BoundedAffinePermutation};
use crate::subset::Subset;
use rand::seq::IteratorRandom;
use rand::Rng;

/// A random bounded affine permutation of degree `k` on `[n]`, by a
/// transposition walk from `pi(i) = i + k`. Swaps that would break
/// boundedness are skipped, so the degree is preserved throughout.
pub fn random_bounded_affine_permutation<R: Rng>(
    rng: &mut R,
    n: usize,
    k: usize,
) -> BoundedAffinePermutation {
    let mut window: Vec<usize> = (1..=n).map(|i| i + k).collect();
    for _ in 0..4 * n * n {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let (va, vb) = (window[a], window[b]);
        let fits = |pos: usize, v: usize| (pos + 1..=pos + 1 + n).contains(&v);
        if fits(a, vb) && fits(b, va) {
            window.swap(a, b);
        }
    }
    BoundedAffinePermutation::new(window).expect("the walk preserves validity")
}

/// A random positroid of rank `k` on `[n]`.
pub fn random_positroid<R: Rng>(rng: &mut R, n: usize, k: usize) -> Matroid {
    permutation_to_matroid(&random_bounded_affine_permutation(rng, n, k))
        .expect("every bounded affine permutation yields a positroid")
}

/// A random matroid from a random basis family, by rejection: sample a few
/// distinct k-subsets until they satisfy the basis axioms.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize, k: usize) -> Matroid {
    let all: Vec<Subset> = Subset::all(n).filter(|s| s.len() == k).collect();
    loop {
        let count = rng.random_range(1..=all.len());
        let picks = all.iter().copied().choose_multiple(rng, count);
        if let Ok(m) = Matroid::from_bases(n, picks) {
            return m;
        }
    }
}

/// A random subset family over `[n]` with roughly `target` members.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, target: usize) -> Vec<Subset> {
    let mut out = Vec::with_capacity(target);
    for _ in 0..target {
        out.push(Subset(rng.random_range(0..1u32 << n)));
    }
    out
}
