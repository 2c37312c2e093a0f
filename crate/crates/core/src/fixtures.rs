//! Named matroids used across tests, benchmarks, and documentation.

use crate::matroid::{Matroid, RankCondition};
use crate::subset::Subset;

/// The rank-3 positroid on [8] generated by the four cyclic intervals
/// [1,3], [3,5], [5,7], [7,1], each of rank 2. Its expected codimension
/// is 4.
pub fn square_positroid() -> Matroid {
    let conds = [[1, 2, 3], [3, 4, 5], [5, 6, 7], [7, 8, 1]]
        .iter()
        .map(|line| RankCondition::new(Subset::from_elements(line.iter().copied()), 2));
    Matroid::from_rank_conditions(8, conds, Some(3)).expect("the square positroid is a matroid")
}

/// The rank-3 positroid on [6] generated by [1,3], [3,5], [5,1], each of
/// rank 2: three lines meeting pairwise in a point.
pub fn triangle_positroid() -> Matroid {
    let conds = [[1, 2, 3], [3, 4, 5], [5, 6, 1]]
        .iter()
        .map(|line| RankCondition::new(Subset::from_elements(line.iter().copied()), 2));
    Matroid::from_rank_conditions(6, conds, Some(3)).expect("the triangle positroid is a matroid")
}

/// The nine three-point lines of the Pappus configuration.
pub fn pappus_lines() -> Vec<Subset> {
    [
        [1, 2, 3],
        [4, 5, 6],
        [7, 8, 9],
        [1, 5, 7],
        [1, 6, 8],
        [2, 4, 7],
        [2, 6, 9],
        [3, 4, 8],
        [3, 5, 9],
    ]
    .iter()
    .map(|line| Subset::from_elements(line.iter().copied()))
    .collect()
}

/// The rank-3 matroid on [9] generated by the nine Pappus collinearities.
pub fn pappus_matroid() -> Matroid {
    let conds = pappus_lines().into_iter().map(|line| RankCondition::new(line, 2));
    Matroid::from_rank_conditions(9, conds, Some(3)).expect("the Pappus matroid is a matroid")
}

/// Rank-3 matroid on [5] in which {1,2,3} and {3,4,5} are the only
/// three-element non-bases.
pub fn v_matroid() -> Matroid {
    let bases = Subset::all(5).filter(|s| {
        s.len() == 3
            && *s != Subset::from_elements([1, 2, 3])
            && *s != Subset::from_elements([3, 4, 5])
    });
    Matroid::from_bases(5, bases).expect("the V matroid is a matroid")
}

/// Rank-2 matroid on [4] with {1,3} and {2,4} parallel pairs. Not a
/// positroid: the parallel classes interleave in the cyclic order.
pub fn interleaved_parallel_matroid() -> Matroid {
    Matroid::from_rank_conditions(
        4,
        [
            RankCondition::new(Subset::from_elements([1, 3]), 1),
            RankCondition::new(Subset::from_elements([2, 4]), 1),
        ],
        Some(2),
    )
    .expect("two disjoint parallel pairs form a matroid")
}
