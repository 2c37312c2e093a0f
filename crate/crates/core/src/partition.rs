//! Integer partitions and multisets of Schubert classes.

use std::collections::BTreeMap;
use std::fmt;

/// A partition: weakly decreasing positive parts. The empty partition is
/// written `(0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Panics if the parts
    /// are not weakly decreasing.
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Partition {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "partition parts must weakly decrease");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (0-based), or 0 beyond the last.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// At most `rows` parts, each at most `cols`.
    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Every partition inside a `rows x cols` box, in ascending order.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = vec![Vec::new()];
        while let Some(cur) = stack.pop() {
            out.push(Partition { parts: cur.clone() });
            if cur.len() < rows {
                let cap = cur.last().copied().unwrap_or(cols);
                for next in (1..=cap).rev() {
                    let mut ext = cur.clone();
                    ext.push(next);
                    stack.push(ext);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A multiset of partitions with positive multiplicities: an expansion in
/// the Schubert basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchubertExpansion {
    terms: BTreeMap<Partition, u64>,
}

impl SchubertExpansion {
    pub fn new() -> SchubertExpansion {
        SchubertExpansion::default()
    }

    pub fn single(p: Partition) -> SchubertExpansion {
        let mut out = SchubertExpansion::new();
        out.add(p, 1);
        out
    }

    pub fn add(&mut self, p: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(p).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &m)| (p, m))
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "\u{3c3}{p}: {m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_accessors() {
        let p = Partition::new([3, 2, 0, 0]);
        assert_eq!(p.parts(), &[3, 2]);
        assert_eq!(p.size(), 5);
        assert_eq!(p.part(5), 0);
        assert!(p.contains(&Partition::new([2, 1])));
        assert!(!p.contains(&Partition::new([1, 1, 1])));
    }

    #[test]
    #[should_panic]
    fn increasing_parts_rejected() {
        Partition::new([1, 2]);
    }

    #[test]
    fn box_enumeration() {
        let all = Partition::all_in_box(2, 2);
        assert_eq!(all.len(), 6);
        assert!(all.contains(&Partition::empty()));
        assert!(all.contains(&Partition::new([2, 2])));
        assert_eq!(Partition::all_in_box(3, 3).len(), 20);
    }

    #[test]
    fn expansion_display_descending() {
        let mut e = SchubertExpansion::new();
        e.add(Partition::new([1, 1]), 1);
        e.add(Partition::new([2]), 1);
        assert_eq!(e.to_string(), "\u{3c3}(2): 1, \u{3c3}(1,1): 1");
        assert_eq!(SchubertExpansion::new().to_string(), "0");
    }

    #[test]
    fn partition_display() {
        assert_eq!(Partition::new([2, 1]).to_string(), "(2,1)");
        assert_eq!(Partition::empty().to_string(), "(0)");
    }
}
