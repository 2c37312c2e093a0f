//! Families of subsets ordered by inclusion, and their Möbius functions.

use crate::subset::Subset;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0} is not a member of the family")]
    NotInFamily(Subset),
}

/// A collection of distinct subsets of `[n]`, viewed as a poset under
/// inclusion. Members are kept sorted by (size, mask), so a proper subset
/// always precedes its supersets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    sets: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(members: I) -> SetFamily {
        let mut sets: Vec<Subset> = members.into_iter().collect();
        sets.sort_unstable_by_key(|s| (s.len(), s.0));
        sets.dedup();
        SetFamily { sets }
    }

    /// All `2^n` subsets of `[n]`.
    pub fn power_set(n: usize) -> SetFamily {
        SetFamily::new(Subset::all(n))
    }

    /// All intervals `[i, j]` with `1 <= i <= j <= n`.
    pub fn intervals(n: usize) -> SetFamily {
        SetFamily::new(
            (1..=n).flat_map(move |i| (i..=n).map(move |j| Subset::from_elements(i..=j))),
        )
    }

    /// All cyclic intervals of `[n]` as distinct subsets. The full set,
    /// reachable as `[i, i + n - 1]` from every start, appears once; in
    /// codimension sums it carries weight `k - k = 0`, so collapsing the
    /// n band positions to one member changes nothing.
    pub fn cyclic_intervals(n: usize) -> SetFamily {
        SetFamily::new((1..=n).flat_map(move |i| {
            (0..n).map(move |d| {
                Subset::from_elements((0..=d).map(move |t| (i + t - 1) % n + 1))
            })
        }))
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn get(&self, idx: usize) -> Subset {
        self.sets[idx]
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.sets.binary_search_by_key(&(s.len(), s.0), |t| (t.len(), t.0)).ok()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index_of(s).is_some()
    }

    /// The family with one member removed.
    pub fn without(&self, z: Subset) -> SetFamily {
        SetFamily::new(self.sets.iter().copied().filter(|&s| s != z))
    }

    /// Member indices of all supersets of the member at `idx` (including
    /// itself), in increasing order.
    fn superset_indices(&self, idx: usize) -> Vec<usize> {
        let t = self.sets[idx];
        (idx..self.sets.len()).filter(|&j| t.is_subset_of(self.sets[j])).collect()
    }

    /// One row of the Möbius function: `mu(T, S)` for every member `S`,
    /// where `T` is the member at `t_idx`. Entries for `S` not containing
    /// `T` are 0; `mu(T, T) = 1`; and
    /// `mu(T, S) = -sum over U in the family with T <= U < S of mu(T, U)`.
    pub fn mobius_row(&self, t_idx: usize) -> Vec<i64> {
        let mut row = vec![0i64; self.sets.len()];
        let sup = self.superset_indices(t_idx);
        for (pos, &s_idx) in sup.iter().enumerate() {
            if pos == 0 {
                row[s_idx] = 1;
                continue;
            }
            let s = self.sets[s_idx];
            let mut acc = 0i64;
            for &u_idx in &sup[..pos] {
                if self.sets[u_idx].is_subset_of(s) {
                    acc += row[u_idx];
                }
            }
            row[s_idx] = -acc;
        }
        row
    }
}

/// Möbius values memoized per family, one row per lower argument.
pub struct MobiusTable<'a> {
    family: &'a SetFamily,
    rows: Vec<Option<Vec<i64>>>,
}

impl<'a> MobiusTable<'a> {
    pub fn new(family: &'a SetFamily) -> MobiusTable<'a> {
        MobiusTable { family, rows: vec![None; family.len()] }
    }

    pub fn get(&mut self, t_idx: usize, s_idx: usize) -> i64 {
        self.row(t_idx)[s_idx]
    }

    pub fn row(&mut self, t_idx: usize) -> &[i64] {
        if self.rows[t_idx].is_none() {
            self.rows[t_idx] = Some(self.family.mobius_row(t_idx));
        }
        self.rows[t_idx].as_deref().unwrap()
    }
}

/// Möbius function of the inclusion poset of `family`, with
/// `mu(T, S) = 0` whenever `T` is not a subset of `S`.
pub fn mobius(family: &SetFamily, t: Subset, s: Subset) -> Result<i64, FamilyError> {
    let t_idx = family.index_of(t).ok_or(FamilyError::NotInFamily(t))?;
    let s_idx = family.index_of(s).ok_or(FamilyError::NotInFamily(s))?;
    Ok(family.mobius_row(t_idx)[s_idx])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice_alternates() {
        let fam = SetFamily::power_set(2);
        assert_eq!(mobius(&fam, Subset::EMPTY, Subset::from_elements([1, 2])).unwrap(), 1);
        assert_eq!(mobius(&fam, Subset::EMPTY, Subset::from_elements([1])).unwrap(), -1);
        // full Boolean check on [4]
        let fam = SetFamily::power_set(4);
        for t in Subset::all(4) {
            for s in Subset::all(4) {
                let expected = if t.is_subset_of(s) {
                    if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 }
                } else {
                    0
                };
                assert_eq!(mobius(&fam, t, s).unwrap(), expected);
            }
        }
    }

    #[test]
    fn diamond_family() {
        let fam = SetFamily::new([
            Subset::from_elements([1]),
            Subset::from_elements([1, 2]),
            Subset::from_elements([1, 3]),
            Subset::from_elements([1, 2, 3]),
        ]);
        assert_eq!(
            mobius(&fam, Subset::from_elements([1]), Subset::from_elements([1, 2, 3])).unwrap(),
            1
        );
    }

    #[test]
    fn reflexive_is_one() {
        let fam = SetFamily::new([Subset::from_elements([2]), Subset::from_elements([2, 5])]);
        for s in fam.sets() {
            assert_eq!(mobius(&fam, *s, *s).unwrap(), 1);
        }
    }

    #[test]
    fn not_in_family() {
        let fam = SetFamily::power_set(2);
        let outsider = Subset::from_elements([3]);
        assert_eq!(
            mobius(&fam, outsider, outsider).unwrap_err(),
            FamilyError::NotInFamily(outsider)
        );
    }

    #[test]
    fn incomparable_is_zero() {
        let fam = SetFamily::power_set(3);
        assert_eq!(
            mobius(&fam, Subset::from_elements([1]), Subset::from_elements([2, 3])).unwrap(),
            0
        );
    }

    #[test]
    fn cyclic_intervals_count() {
        // n(n-1) proper intervals plus the full set
        let fam = SetFamily::cyclic_intervals(6);
        assert_eq!(fam.len(), 31);
        assert!(fam.contains(Subset::from_elements([5, 6, 1])));
        assert!(fam.contains(Subset::full(6)));
    }

    #[test]
    fn intervals_count() {
        assert_eq!(SetFamily::intervals(4).len(), 10);
    }
}
