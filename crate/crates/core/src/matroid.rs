//! Matroids on ground sets of size at most 16, represented by their full
//! rank table.
//!
//! A matroid is built either from its bases or by generating the
//! pointwise-largest pseudo-rank function compatible with a family of rank
//! upper bounds. Construction always validates the rank axioms: the whole
//! downstream machinery assumes them, so there are no unchecked constructors.

use crate::subset::{Subset, MAX_GROUND_SIZE};
use thiserror::Error;

/// An upper bound `rank(set) <= bound` used to generate a matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankCondition {
    pub set: Subset,
    pub bound: usize,
}

impl RankCondition {
    pub fn new(set: Subset, bound: usize) -> RankCondition {
        RankCondition { set, bound }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("basis collection is empty")]
    EmptyBasisSet,
    #[error("not a matroid: {0}")]
    NotAMatroid(NotAMatroidReason),
    #[error("ground set of size {0} exceeds the supported maximum of 16")]
    GroundSetTooLarge(usize),
    #[error("element {element} is out of range for ground set [{n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("rank bound {bound} exceeds the size of {set}")]
    InvalidBound { set: Subset, bound: usize },
    #[error("element {0} is a loop; parallel extension needs a non-loop")]
    LoopParallel(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAMatroidReason {
    /// Two bases of different sizes.
    MixedBasisSizes(Subset, Subset),
    /// The local exchange axiom fails: rank(F+x) = rank(F+y) = rank(F) but
    /// rank(F+x+y) > rank(F).
    RankAxiom { f: Subset, x: usize, y: usize },
}

impl std::fmt::Display for NotAMatroidReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotAMatroidReason::MixedBasisSizes(a, b) => {
                write!(f, "bases {a} and {b} have different sizes")
            }
            NotAMatroidReason::RankAxiom { f: set, x, y } => write!(
                f,
                "rank axiom fails at F={set}, x={x}, y={y}: adding x or y alone keeps the rank, adding both raises it"
            ),
        }
    }
}

/// A matroid on `[n]`, `1 <= n <= 16`, as a validated rank table.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    k: usize,
    /// `rank_table[s.0]` = rank of subset `s`; length `2^n`.
    rank_table: Vec<u8>,
    /// Cached bases in increasing mask order.
    bases: Vec<Subset>,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, k={}, bases=[", self.n, self.k)?;
        for (i, b) in self.bases.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "])")
    }
}

fn check_ground_size(n: usize) -> Result<(), MatroidError> {
    if n == 0 || n > MAX_GROUND_SIZE {
        return Err(MatroidError::GroundSetTooLarge(n));
    }
    Ok(())
}

/// Checks the three rank axioms, returning the first witness of a violation
/// of the local exchange axiom in ascending (F, x, y) order.
fn validate_rank_table(n: usize, table: &[u8]) -> Result<(), MatroidError> {
    assert_eq!(table.len(), 1 << n);
    assert_eq!(table[0], 0, "rank of the empty set must be 0");
    for s in Subset::all(n) {
        let r = table[s.0 as usize];
        for x in 1..=n {
            if s.contains(x) {
                continue;
            }
            let rx = table[s.with(x).0 as usize];
            assert!(rx == r || rx == r + 1, "unit-increment axiom broken at {s} + {x}");
        }
    }
    for f in Subset::all(n) {
        let r = table[f.0 as usize];
        for x in 1..=n {
            if f.contains(x) || table[f.with(x).0 as usize] != r {
                continue;
            }
            for y in x + 1..=n {
                if f.contains(y) || table[f.with(y).0 as usize] != r {
                    continue;
                }
                if table[f.with(x).with(y).0 as usize] != r {
                    return Err(MatroidError::NotAMatroid(NotAMatroidReason::RankAxiom {
                        f,
                        x,
                        y,
                    }));
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    fn from_validated_table(n: usize, rank_table: Vec<u8>) -> Result<Matroid, MatroidError> {
        validate_rank_table(n, &rank_table)?;
        let k = rank_table[Subset::full(n).0 as usize] as usize;
        let bases = Subset::all(n)
            .filter(|s| s.len() == k && rank_table[s.0 as usize] as usize == k)
            .collect();
        Ok(Matroid { n, k, rank_table, bases })
    }

    /// Builds a matroid from a collection of bases, rejecting families that
    /// violate the basis axioms.
    pub fn from_bases<I>(n: usize, bases: I) -> Result<Matroid, MatroidError>
    where
        I: IntoIterator<Item = Subset>,
    {
        check_ground_size(n)?;
        let mut input: Vec<Subset> = bases.into_iter().collect();
        input.sort_unstable();
        input.dedup();
        let first = *input.first().ok_or(MatroidError::EmptyBasisSet)?;
        for &b in &input {
            if !b.is_subset_of(Subset::full(n)) {
                let element = b.elements().find(|&e| e > n).unwrap();
                return Err(MatroidError::ElementOutOfRange { element, n });
            }
            if b.len() != first.len() {
                return Err(MatroidError::NotAMatroid(NotAMatroidReason::MixedBasisSizes(
                    first, b,
                )));
            }
        }

        // Downward closure: a set is independent iff it lies inside a basis.
        let mut independent = vec![false; 1 << n];
        for &b in &input {
            independent[b.0 as usize] = true;
        }
        for bits in (0..1u32 << n).rev() {
            if independent[bits as usize] {
                let s = Subset(bits);
                for e in s.elements() {
                    independent[s.without(e).0 as usize] = true;
                }
            }
        }
        let mut table = vec![0u8; 1 << n];
        for s in Subset::all(n).skip(1) {
            table[s.0 as usize] = if independent[s.0 as usize] {
                s.len() as u8
            } else {
                s.elements()
                    .map(|e| table[s.without(e).0 as usize])
                    .max()
                    .unwrap()
            };
        }

        let m = Matroid::from_validated_table(n, table)?;
        debug_assert_eq!(m.bases, input, "validated table must reproduce the input bases");
        Ok(m)
    }

    /// Builds the matroid generated by rank conditions, i.e. the
    /// pointwise-largest pseudo-rank function below all the bounds:
    /// `r(A) = min(|A|, min_i(bound_i + |A - set_i|))`.
    ///
    /// `ambient_rank` caps the rank of the full ground set.
    pub fn from_rank_conditions<I>(
        n: usize,
        conditions: I,
        ambient_rank: Option<usize>,
    ) -> Result<Matroid, MatroidError>
    where
        I: IntoIterator<Item = RankCondition>,
    {
        check_ground_size(n)?;
        let mut conds: Vec<RankCondition> = conditions.into_iter().collect();
        if let Some(k) = ambient_rank {
            conds.push(RankCondition::new(Subset::full(n), k));
        }
        for c in &conds {
            if !c.set.is_subset_of(Subset::full(n)) {
                let element = c.set.elements().find(|&e| e > n).unwrap();
                return Err(MatroidError::ElementOutOfRange { element, n });
            }
            if c.bound > c.set.len() {
                return Err(MatroidError::InvalidBound { set: c.set, bound: c.bound });
            }
        }
        let table = generated_pseudo_rank(n, &conds);
        Matroid::from_validated_table(n, table)
    }

    /// The uniform matroid `U_{k,n}`: every k-subset is a basis.
    pub fn uniform(k: usize, n: usize) -> Matroid {
        check_ground_size(n).expect("uniform matroid ground size");
        assert!(k <= n);
        let table = Subset::all(n).map(|s| s.len().min(k) as u8).collect();
        Matroid::from_validated_table(n, table).expect("uniform matroids satisfy the axioms")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the full ground set.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn rank(&self, s: Subset) -> usize {
        debug_assert!(s.is_subset_of(self.ground_set()));
        self.rank_table[s.0 as usize] as usize
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        s.len() == self.k && self.rank(s) == self.k
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank(Subset::EMPTY.with(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank(self.ground_set().without(e)) + 1 == self.k
    }

    /// `{x : rank(S + x) = rank(S)}`; contains `S` and is idempotent.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank(s);
        let mut out = s;
        for x in 1..=self.n {
            if self.rank(s.with(x)) == r {
                out = out.with(x);
            }
        }
        out
    }

    /// Restriction to `f`, re-indexed order-preservingly to `[|f|]`.
    /// Returns the matroid together with the map from new index to old
    /// element.
    pub fn restrict(&self, f: Subset) -> (Matroid, Vec<usize>) {
        let map: Vec<usize> = f.elements().collect();
        let nn = map.len();
        assert!(nn >= 1, "restriction to the empty set is not a matroid on [n]");
        let mut table = vec![0u8; 1 << nn];
        for s in Subset::all(nn) {
            let old = Subset::from_elements(s.elements().map(|i| map[i - 1]));
            table[s.0 as usize] = self.rank(old) as u8;
        }
        let m = Matroid::from_validated_table(nn, table)
            .expect("restriction of a matroid is a matroid");
        (m, map)
    }

    /// Contraction by `f`, on `E - f` re-indexed order-preservingly:
    /// `rank(A) = rank(A u f) - rank(f)`. Returns the index map as well.
    pub fn contract(&self, f: Subset) -> (Matroid, Vec<usize>) {
        let map: Vec<usize> = self.ground_set().elements().filter(|&e| !f.contains(e)).collect();
        let nn = map.len();
        assert!(nn >= 1, "contraction by the full ground set leaves nothing");
        let rf = self.rank(f) as u8;
        let mut table = vec![0u8; 1 << nn];
        for s in Subset::all(nn) {
            let old = Subset::from_elements(s.elements().map(|i| map[i - 1]));
            table[s.0 as usize] = self.rank(old | f) as u8 - rf;
        }
        let m = Matroid::from_validated_table(nn, table)
            .expect("contraction of a matroid is a matroid");
        (m, map)
    }

    /// Dual matroid: bases are the complements of bases; the rank works out
    /// to `|S| - k + rank(E - S)`.
    pub fn dual(&self) -> Matroid {
        let n = self.n;
        let full = self.ground_set();
        let mut table = vec![0u8; 1 << n];
        for s in Subset::all(n) {
            table[s.0 as usize] = (s.len() + self.rank(full - s) - self.k) as u8;
        }
        let m = Matroid::from_validated_table(n, table).expect("the dual of a matroid is a matroid");
        let mut complements: Vec<Subset> = self.bases.iter().map(|&b| full - b).collect();
        complements.sort_unstable();
        assert_eq!(m.bases, complements, "dual rank formula must complement the bases");
        m
    }

    /// Direct sum: `self` on `[m]`, `other` shifted onto `[m+1, m+n]`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let n = self.n + other.n;
        check_ground_size(n)?;
        let left = Subset::full(self.n);
        let mut table = vec![0u8; 1 << n];
        for s in Subset::all(n) {
            let a = s & left;
            let b = Subset(s.0 >> self.n);
            table[s.0 as usize] = self.rank_table[a.0 as usize] + other.rank_table[b.0 as usize];
        }
        Matroid::from_validated_table(n, table)
    }

    /// Adds a new last element of rank 0.
    pub fn loop_extension(&self) -> Result<Matroid, MatroidError> {
        let single_loop = Matroid::from_validated_table(1, vec![0, 0]).unwrap();
        self.direct_sum(&single_loop)
    }

    /// Adds a new last element lying in every basis.
    pub fn coloop_extension(&self) -> Result<Matroid, MatroidError> {
        self.direct_sum(&Matroid::uniform(1, 1))
    }

    /// Free extension: a new unconstrained element that does not raise the
    /// total rank.
    pub fn free_extension(&self) -> Result<Matroid, MatroidError> {
        let n = self.n + 1;
        check_ground_size(n)?;
        let k = self.k as u8;
        let mut table = vec![0u8; 1 << n];
        for s in Subset::all(n) {
            let inner = self.rank_table[s.without(n).0 as usize];
            table[s.0 as usize] = if !s.contains(n) {
                inner
            } else if inner < k {
                inner + 1
            } else {
                k
            };
        }
        Matroid::from_validated_table(n, table)
    }

    /// Free extension followed by making the new element parallel to `e`:
    /// `rank(S) = rank((S - {n+1}) u {e})` whenever `n+1` is in `S`.
    pub fn parallel_extension(&self, e: usize) -> Result<Matroid, MatroidError> {
        if self.is_loop(e) {
            return Err(MatroidError::LoopParallel(e));
        }
        let n = self.n + 1;
        check_ground_size(n)?;
        let mut table = vec![0u8; 1 << n];
        for s in Subset::all(n) {
            let probe = if s.contains(n) { s.without(n).with(e) } else { s };
            table[s.0 as usize] = self.rank_table[probe.0 as usize];
        }
        Matroid::from_validated_table(n, table)
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<Subset> {
        Subset::all(self.n)
            .filter(|&s| {
                !self.is_independent(s)
                    && s.elements().all(|e| self.is_independent(s.without(e)))
            })
            .collect()
    }

    /// Partition of `[n]` into connected components: the transitive closure
    /// of "some circuit contains both x and y". Elements in no circuit are
    /// singleton components.
    pub fn connected_components(&self) -> Vec<Subset> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                parent[i] = find(parent, parent[i]);
            }
            parent[i]
        }
        for c in self.circuits() {
            let mut it = c.elements();
            let first = it.next().expect("circuits are nonempty") - 1;
            for e in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, e - 1));
                parent[a] = b;
            }
        }
        let mut comps: Vec<Subset> = Vec::new();
        let mut roots: Vec<Option<usize>> = vec![None; self.n];
        for i in 0..self.n {
            let root = find(&mut parent, i);
            match roots[root] {
                Some(idx) => comps[idx] = comps[idx].with(i + 1),
                None => {
                    roots[root] = Some(comps.len());
                    comps.push(Subset::EMPTY.with(i + 1));
                }
            }
        }
        comps.sort_unstable();
        debug_assert_eq!(
            comps.iter().map(|&c| self.rank(c)).sum::<usize>(),
            self.k,
            "rank must be additive across components"
        );
        comps
    }

    /// True iff there is no proper nonempty `S` with
    /// `rank(S) + rank(E - S) = rank(E)`.
    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let full = self.ground_set();
        // checking the masks containing element 1 covers each split once
        for bits in 0..1u32 << (self.n - 1) {
            let s = Subset(bits << 1 | 1);
            if s == full {
                continue;
            }
            if self.rank(s) + self.rank(full - s) == self.k {
                return false;
            }
        }
        true
    }
}

/// The closed form for the pointwise-largest pseudo-rank function meeting
/// the given upper bounds.
pub(crate) fn generated_pseudo_rank(n: usize, conds: &[RankCondition]) -> Vec<u8> {
    let mut table = vec![0u8; 1 << n];
    for s in Subset::all(n) {
        let mut r = s.len();
        for c in conds {
            r = r.min(c.bound + (s - c.set).len());
        }
        table[s.0 as usize] = r as u8;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::fixtures::v_matroid;

    fn sets<const N: usize>(elems: [&[usize]; N]) -> Vec<Subset> {
        elems.iter().map(|e| Subset::from_elements(e.iter().copied())).collect()
    }

    #[test]
    fn from_bases_uniform() {
        let m = Matroid::from_bases(3, sets([&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!(m.rank(Subset::from_elements([1])), 1);
        assert_eq!(m.rank(Subset::from_elements([1, 2, 3])), 2);
        assert_eq!(m, Matroid::uniform(2, 3));
    }

    #[test]
    fn from_bases_two_bases_on_four() {
        let m = Matroid::from_bases(4, sets([&[1, 3, 4], &[2, 3, 4]])).unwrap();
        assert_eq!(m.rank(Subset::from_elements([1, 2])), 1);
        assert_eq!(m.rank(Subset::from_elements([1, 2, 3])), 2);
        assert_eq!(m.k(), 3);
    }

    #[test]
    fn from_bases_mixed_sizes_rejected() {
        let err = Matroid::from_bases(2, sets([&[1], &[1, 2]])).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::NotAMatroid(NotAMatroidReason::MixedBasisSizes(_, _))
        ));
    }

    #[test]
    fn from_bases_empty_rejected() {
        assert_eq!(Matroid::from_bases(3, []).unwrap_err(), MatroidError::EmptyBasisSet);
    }

    #[test]
    fn from_bases_exchange_failure_rejected() {
        // {1,2} and {3,4} cannot be the only bases of a matroid.
        let err = Matroid::from_bases(4, sets([&[1, 2], &[3, 4]])).unwrap_err();
        assert!(matches!(err, MatroidError::NotAMatroid(NotAMatroidReason::RankAxiom { .. })));
    }

    #[test]
    fn generated_conditions_match_basis_example() {
        let m = Matroid::from_rank_conditions(
            4,
            [RankCondition::new(Subset::from_elements([1, 2]), 1)],
            Some(3),
        )
        .unwrap();
        assert_eq!(m.bases(), &sets([&[1, 3, 4], &[2, 3, 4]])[..]);
    }

    #[test]
    fn generated_no_conditions_is_free() {
        let m = Matroid::from_rank_conditions(3, [], None).unwrap();
        assert_eq!(m.bases(), &[Subset::full(3)]);
    }

    #[test]
    fn generated_violation_reports_witness() {
        let err = Matroid::from_rank_conditions(
            3,
            [
                RankCondition::new(Subset::from_elements([1, 2]), 1),
                RankCondition::new(Subset::from_elements([2, 3]), 1),
            ],
            None,
        )
        .unwrap_err();
        assert_eq!(
            err,
            MatroidError::NotAMatroid(NotAMatroidReason::RankAxiom {
                f: Subset::from_elements([2]),
                x: 1,
                y: 3,
            })
        );
    }

    #[test]
    fn rank_lookups() {
        let u23 = Matroid::uniform(2, 3);
        assert_eq!(u23.rank(Subset::full(3)), 2);
        assert_eq!(u23.rank(Subset::EMPTY), 0);
        let m = Matroid::from_bases(4, sets([&[1, 3, 4], &[2, 3, 4]])).unwrap();
        assert_eq!(m.rank(Subset::from_elements([1, 2, 3])), 2);
    }

    #[test]
    fn closure_examples() {
        let v = v_matroid();
        assert_eq!(
            v.closure(Subset::from_elements([1, 2])),
            Subset::from_elements([1, 2, 3])
        );
        let u23 = Matroid::uniform(2, 3);
        assert_eq!(u23.closure(Subset::from_elements([1])), Subset::from_elements([1]));
        assert_eq!(u23.closure(u23.ground_set()), u23.ground_set());
        // idempotence
        let c = v.closure(Subset::from_elements([4, 5]));
        assert_eq!(v.closure(c), c);
    }

    #[test]
    fn restrict_and_contract() {
        let v = v_matroid();
        let (c, map) = v.contract(Subset::from_elements([3]));
        assert_eq!(map, vec![1, 2, 4, 5]);
        assert_eq!(c.k(), 2);
        // images of {1,2} and {4,5} are parallel pairs
        assert_eq!(c.rank(Subset::from_elements([1, 2])), 1);
        assert_eq!(c.rank(Subset::from_elements([3, 4])), 1);
        assert_eq!(c.rank(Subset::from_elements([1, 3])), 2);

        let (r, map) = Matroid::uniform(2, 3).restrict(Subset::from_elements([1, 2]));
        assert_eq!(map, vec![1, 2]);
        assert_eq!(r, Matroid::uniform(2, 2));

        let m = Matroid::from_bases(4, sets([&[1, 3, 4], &[2, 3, 4]])).unwrap();
        let (c, _) = m.contract(Subset::EMPTY);
        assert_eq!(c, m);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(Matroid::uniform(1, 3).dual(), Matroid::uniform(2, 3));
        assert_eq!(Matroid::uniform(1, 2).dual(), Matroid::uniform(1, 2));
        let m = Matroid::from_bases(4, sets([&[1, 3, 4], &[2, 3, 4]])).unwrap();
        assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn direct_sum_and_extensions() {
        let u12 = Matroid::uniform(1, 2);
        let s = u12.direct_sum(&u12).unwrap();
        assert_eq!(s.bases(), &sets([&[1, 3], &[2, 3], &[1, 4], &[2, 4]])[..]);

        let with_loop = Matroid::uniform(2, 3).loop_extension().unwrap();
        assert!(with_loop.is_loop(4));
        assert!(with_loop.bases().iter().all(|b| !b.contains(4)));

        let with_coloop = Matroid::uniform(2, 3).coloop_extension().unwrap();
        assert_eq!(with_coloop.k(), 3);
        assert!(with_coloop.bases().iter().all(|b| b.contains(4)));
    }

    #[test]
    fn direct_sum_overflow() {
        let big = Matroid::uniform(1, 9);
        assert!(matches!(
            big.direct_sum(&big).unwrap_err(),
            MatroidError::GroundSetTooLarge(18)
        ));
    }

    #[test]
    fn free_extension_examples() {
        assert_eq!(Matroid::uniform(2, 3).free_extension().unwrap(), Matroid::uniform(2, 4));
        // a rank-0 matroid stays rank 0: the new element is also a loop
        let zero = Matroid::from_rank_conditions(
            1,
            [RankCondition::new(Subset::from_elements([1]), 0)],
            None,
        )
        .unwrap();
        let ext = zero.free_extension().unwrap();
        assert!(ext.is_loop(1) && ext.is_loop(2));

        let twice = Matroid::uniform(1, 1)
            .free_extension()
            .unwrap()
            .free_extension()
            .unwrap();
        assert_eq!(twice, Matroid::uniform(1, 3));
    }

    #[test]
    fn parallel_extension_examples() {
        let m = Matroid::uniform(2, 3).parallel_extension(1).unwrap();
        assert_eq!(
            m.bases(),
            &sets([&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]])[..]
        );
        assert_eq!(m.rank(Subset::from_elements([1, 4])), 1);

        assert_eq!(
            Matroid::uniform(1, 1).parallel_extension(1).unwrap(),
            Matroid::uniform(1, 2)
        );

        // parallel classes of the extension: {1,4}, {2}, {3}
        let classes: Vec<Subset> = (1..=4)
            .map(|x| {
                Subset::from_elements(
                    (1..=4).filter(|&y| m.rank(Subset::from_elements([x, y])) == 1),
                )
            })
            .collect();
        assert_eq!(classes[0], Subset::from_elements([1, 4]));
        assert_eq!(classes[1], Subset::from_elements([2]));
        assert_eq!(classes[3], Subset::from_elements([1, 4]));

        let zero = Matroid::from_rank_conditions(
            1,
            [RankCondition::new(Subset::from_elements([1]), 0)],
            None,
        )
        .unwrap();
        assert_eq!(zero.parallel_extension(1).unwrap_err(), MatroidError::LoopParallel(1));
    }

    #[test]
    fn circuits_and_components() {
        assert_eq!(Matroid::uniform(2, 3).circuits(), vec![Subset::full(3)]);

        let u12 = Matroid::uniform(1, 2);
        let s = u12.direct_sum(&u12).unwrap();
        assert_eq!(
            s.connected_components(),
            vec![Subset::from_elements([1, 2]), Subset::from_elements([3, 4])]
        );
        assert!(!s.is_connected());
        assert!(Matroid::uniform(2, 4).is_connected());
    }

    #[test]
    fn square_positroid_is_one_component() {
        let square = crate::fixtures::square_positroid();
        assert_eq!(square.connected_components(), vec![Subset::full(8)]);
        assert!(square.is_connected());
    }
}
