//! Subsets of a ground set `[n] = {1, ..., n}` as bit masks.
//!
//! Element `i` lives at bit `i - 1`. Ground sets are capped at 16 elements,
//! so every subset fits in a machine word and a full rank table fits in a
//! `Vec` of length `2^n`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest supported ground-set size.
pub const MAX_GROUND_SIZE: usize = 16;

/// A subset of `[n]`, stored as a bit mask with element `i` at bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// Full ground set `[n]`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND_SIZE);
        Subset(((1u64 << n) - 1) as u32)
    }

    /// Subset from 1-based elements.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        let mut bits = 0u32;
        for e in elements {
            debug_assert!((1..=MAX_GROUND_SIZE).contains(&e));
            bits |= 1 << (e - 1);
        }
        Subset(bits)
    }

    pub fn contains(self, element: usize) -> bool {
        debug_assert!(element >= 1);
        self.0 >> (element - 1) & 1 == 1
    }

    pub fn with(self, element: usize) -> Subset {
        Subset(self.0 | 1 << (element - 1))
    }

    pub fn without(self, element: usize) -> Subset {
        Subset(self.0 & !(1 << (element - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// 1-based elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// All `2^n` subsets of `[n]` in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << n).map(|bits| Subset(bits as u32))
    }

    /// All subsets of `self`, including `EMPTY` and `self` itself.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(Subset::EMPTY);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current.0 == full {
                None
            } else {
                // standard submask stepping trick
                Some(Subset(current.0.wrapping_sub(full) & full))
            };
            Some(current)
        })
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_roundtrip() {
        let s = Subset::from_elements([1, 3, 4]);
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(2));
    }

    #[test]
    fn complement_and_ops() {
        let s = Subset::from_elements([1, 2]);
        assert_eq!(s.complement(4), Subset::from_elements([3, 4]));
        assert_eq!(s | Subset::from_elements([3]), Subset::from_elements([1, 2, 3]));
        assert_eq!(s - Subset::from_elements([2]), Subset::from_elements([1]));
        assert_eq!(s & Subset::from_elements([2, 3]), Subset::from_elements([2]));
    }

    #[test]
    fn submask_enumeration_counts() {
        let s = Subset::from_elements([2, 4, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
        assert!(subs.contains(&Subset::EMPTY));
        assert!(subs.contains(&s));
    }

    #[test]
    fn display_format() {
        assert_eq!(Subset::from_elements([1, 2, 7]).to_string(), "{1,2,7}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
    }
}
