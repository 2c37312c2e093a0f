//! Expected codimension of a matroid with respect to a set family, via the
//! a/b coefficient systems and the family's Möbius function, together with
//! the valuative polynomial `s_M` and its specializations.

use crate::family::{MobiusTable, SetFamily};
use crate::matroid::Matroid;
use crate::poly::{BivariatePoly, TrivariatePoly};
use crate::subset::Subset;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodimError {
    #[error("matroid is disconnected; decompose into components first")]
    DisconnectedInput,
}

/// The full accounting behind one expected-codimension computation.
///
/// For each member `S` of the family: `c(S) = |S| - rank(S)`,
/// `a(S) = c(S) - sum of a over proper subsets of S in the family`, and
/// `b(T) = sum over S of (k - rank(S)) mu(T, S)`. The expected codimension
/// is computed both as `sum (k - rank S) a(S)` and as `sum c(T) b(T)`; the
/// two must agree.
#[derive(Debug, Clone)]
pub struct EcReport {
    pub family: SetFamily,
    pub k: usize,
    /// Indexed by family position.
    pub c: Vec<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    /// Nonzero Möbius values over comparable index pairs.
    pub mu: BTreeMap<(usize, usize), i64>,
    pub ec: i64,
}

impl EcReport {
    pub fn a_of(&self, s: Subset) -> Option<i64> {
        self.family.index_of(s).map(|i| self.a[i])
    }

    pub fn b_of(&self, s: Subset) -> Option<i64> {
        self.family.index_of(s).map(|i| self.b[i])
    }

    pub fn mu_of(&self, t: Subset, s: Subset) -> Option<i64> {
        let ti = self.family.index_of(t)?;
        let si = self.family.index_of(s)?;
        Some(self.mu.get(&(ti, si)).copied().unwrap_or(0))
    }
}

/// Expected codimension of `m` with respect to `family`.
pub fn ec_report(m: &Matroid, family: SetFamily) -> EcReport {
    let k = m.k();
    let len = family.len();
    let sets = family.sets();
    assert!(
        sets.iter().all(|s| s.is_subset_of(m.ground_set())),
        "family members must live on the matroid's ground set"
    );

    let c: Vec<i64> = sets.iter().map(|&s| (s.len() - m.rank(s)) as i64).collect();
    let weight: Vec<i64> = sets.iter().map(|&s| (k - m.rank(s)) as i64).collect();

    // a by direct recursion; the family is sorted by size, so proper subsets
    // always come earlier
    let mut a = vec![0i64; len];
    for si in 0..len {
        let s = sets[si];
        let mut acc = c[si];
        for ti in 0..si {
            if sets[ti] != s && sets[ti].is_subset_of(s) {
                acc -= a[ti];
            }
        }
        a[si] = acc;
    }

    let mut mobius = MobiusTable::new(&family);
    let mut b = vec![0i64; len];
    let mut mu = BTreeMap::new();
    for (ti, b_slot) in b.iter_mut().enumerate() {
        let row = mobius.row(ti);
        let mut acc = 0i64;
        for si in ti..len {
            if row[si] != 0 {
                mu.insert((ti, si), row[si]);
                acc += weight[si] * row[si];
            }
        }
        *b_slot = acc;
    }

    let ec_a: i64 = (0..len).map(|i| weight[i] * a[i]).sum();
    let ec_b: i64 = (0..len).map(|i| c[i] * b[i]).sum();
    assert_eq!(ec_a, ec_b, "the a-weighted and b-weighted sums must agree");

    EcReport { family, k, c, a, b, mu, ec: ec_a }
}

/// Expected codimension over the full power set.
pub fn ec(m: &Matroid) -> i64 {
    ec_report(m, SetFamily::power_set(m.n())).ec
}

/// All proper nonempty `S` such that both the restriction to `S` and the
/// contraction by `S` are connected.
///
/// Singletons whose contraction stays connected qualify; they carry
/// `a = 0` and never move the expected codimension. Excluding the empty
/// and full sets is harmless too: `a(EMPTY) = 0` by definition and
/// `b(E) = 0` since the full set has weight `k - k`.
pub fn flacets(m: &Matroid) -> Result<SetFamily, CodimError> {
    if !m.is_connected() {
        return Err(CodimError::DisconnectedInput);
    }
    let full = m.ground_set();
    let members = Subset::all(m.n()).filter(|&s| {
        if s.is_empty() || s == full {
            return false;
        }
        m.restrict(s).0.is_connected() && m.contract(s).0.is_connected()
    });
    Ok(SetFamily::new(members))
}

/// The polynomial `s_M(x, y, z) = sum over nested pairs S <= T of
/// x^(|S| - rk S) y^(rk M - rk T) z^(|T| - |S|)`.
pub fn s_polynomial(m: &Matroid) -> TrivariatePoly {
    let k = m.k();
    let mut p = TrivariatePoly::zero();
    for t in Subset::all(m.n()) {
        let rt = m.rank(t);
        for s in t.subsets() {
            let rs = m.rank(s);
            p.add_term(
                ((s.len() - rs) as u8, (k - rt) as u8, (t.len() - s.len()) as u8),
                1,
            );
        }
    }
    p
}

/// `t_M(x, y) = s_M(x - 1, y - 1, 0)`.
pub fn tutte_polynomial(m: &Matroid) -> BivariatePoly {
    s_polynomial(m).shift_xy_kill_z()
}

/// Expected codimension read off the valuative polynomial: the mixed
/// partial of `s_M` in x and y, evaluated at `(1, 1, -1)`.
///
/// Each monomial `x^a y^b z^c` contributes `a * b * (-1)^c`, which sums
/// `c(S) * (k - rank T) * (-1)^(|T| - |S|)` over nested pairs — exactly
/// the Möbius form of the expected codimension over the power set.
pub fn ec_from_s(m: &Matroid) -> i64 {
    s_polynomial(m).partial_x().partial_y().eval(1, 1, -1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pappus_lines, pappus_matroid, square_positroid};
    use crate::matroid::RankCondition;

    #[test]
    fn square_positroid_ec_is_4() {
        let m = square_positroid();
        let report = ec_report(&m, SetFamily::power_set(8));
        assert_eq!(report.ec, 4);
        assert_eq!(ec_report(&m, SetFamily::cyclic_intervals(8)).ec, 4);
        assert_eq!(ec_from_s(&m), 4);
    }

    #[test]
    fn pappus_ec_is_9_not_8() {
        let m = pappus_matroid();
        let lines = ec_report(&m, SetFamily::new(pappus_lines()));
        assert_eq!(lines.ec, 9);
        assert_ne!(lines.ec, 8);
    }

    #[test]
    fn uniform_matroids_have_ec_zero() {
        for (k, n) in [(1, 1), (1, 3), (2, 4), (3, 5)] {
            assert_eq!(ec(&Matroid::uniform(k, n)), 0);
        }
    }

    #[test]
    fn flacets_of_square_positroid_include_sides() {
        let fam = flacets(&square_positroid()).unwrap();
        for side in [[1, 2, 3], [3, 4, 5], [5, 6, 7], [7, 8, 1]] {
            assert!(fam.contains(Subset::from_elements(side)));
        }
        assert_eq!(ec_report(&square_positroid(), fam).ec, 4);
    }

    #[test]
    fn flacets_of_pappus_include_lines() {
        let fam = flacets(&pappus_matroid()).unwrap();
        for line in pappus_lines() {
            assert!(fam.contains(line));
        }
        assert_eq!(ec_report(&pappus_matroid(), fam).ec, 9);
    }

    #[test]
    fn flacets_of_uniform_give_zero() {
        let fam = flacets(&Matroid::uniform(2, 4)).unwrap();
        assert_eq!(ec_report(&Matroid::uniform(2, 4), fam).ec, 0);
    }

    #[test]
    fn flacets_reject_disconnected() {
        let m = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2)).unwrap();
        assert_eq!(flacets(&m).unwrap_err(), CodimError::DisconnectedInput);
    }

    #[test]
    fn s_polynomial_small_cases() {
        // coloop: 1 + y + z
        let coloop = Matroid::uniform(1, 1);
        let mut expected = TrivariatePoly::zero();
        expected.add_term((0, 0, 0), 1);
        expected.add_term((0, 1, 0), 1);
        expected.add_term((0, 0, 1), 1);
        assert_eq!(s_polynomial(&coloop), expected);

        // loop: 1 + x + z
        let single_loop = Matroid::from_rank_conditions(
            1,
            [RankCondition::new(Subset::from_elements([1]), 0)],
            None,
        )
        .unwrap();
        let mut expected = TrivariatePoly::zero();
        expected.add_term((0, 0, 0), 1);
        expected.add_term((1, 0, 0), 1);
        expected.add_term((0, 0, 1), 1);
        assert_eq!(s_polynomial(&single_loop), expected);

        // U_{1,2}: x + y + z^2 + 4z + 2
        let mut expected = TrivariatePoly::zero();
        expected.add_term((1, 0, 0), 1);
        expected.add_term((0, 1, 0), 1);
        expected.add_term((0, 0, 2), 1);
        expected.add_term((0, 0, 1), 4);
        expected.add_term((0, 0, 0), 2);
        assert_eq!(s_polynomial(&Matroid::uniform(1, 2)), expected);
    }

    #[test]
    fn tutte_small_cases() {
        let t = tutte_polynomial(&Matroid::uniform(1, 2));
        assert_eq!(t.to_string(), "x + y");

        assert_eq!(tutte_polynomial(&Matroid::uniform(1, 1)).to_string(), "y");

        let single_loop = Matroid::from_rank_conditions(
            1,
            [RankCondition::new(Subset::from_elements([1]), 0)],
            None,
        )
        .unwrap();
        assert_eq!(tutte_polynomial(&single_loop).to_string(), "x");
    }

    #[test]
    fn ec_from_s_small_cases() {
        assert_eq!(ec_from_s(&Matroid::uniform(1, 2)), 0);
        assert_eq!(ec_from_s(&pappus_matroid()), 9);
    }
}
