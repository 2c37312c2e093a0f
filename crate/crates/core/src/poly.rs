//! Small exact polynomials with integer coefficients, just enough for the
//! matroid invariants: a trivariate type for `s_M(x, y, z)` and a bivariate
//! one for the Tutte specialization.

use std::collections::BTreeMap;
use std::fmt;

/// Integer polynomial in x, y, z, keyed by exponent triple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrivariatePoly {
    terms: BTreeMap<(u8, u8, u8), i64>,
}

impl TrivariatePoly {
    pub fn zero() -> TrivariatePoly {
        TrivariatePoly::default()
    }

    pub fn add_term(&mut self, exps: (u8, u8, u8), coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: (u8, u8, u8)) -> i64 {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u8, u8, u8), &i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn partial_x(&self) -> TrivariatePoly {
        let mut out = TrivariatePoly::zero();
        for (&(a, b, c), &q) in &self.terms {
            if a > 0 {
                out.add_term((a - 1, b, c), q * a as i64);
            }
        }
        out
    }

    pub fn partial_y(&self) -> TrivariatePoly {
        let mut out = TrivariatePoly::zero();
        for (&(a, b, c), &q) in &self.terms {
            if b > 0 {
                out.add_term((a, b - 1, c), q * b as i64);
            }
        }
        out
    }

    pub fn eval(&self, x: i64, y: i64, z: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&(a, b, c), &q)| q * x.pow(a as u32) * y.pow(b as u32) * z.pow(c as u32))
            .sum()
    }

    /// Substitutes `x -> x - 1`, `y -> y - 1`, `z -> 0` and expands.
    pub fn shift_xy_kill_z(&self) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a, b, c), &q) in &self.terms {
            if c > 0 {
                continue;
            }
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                    out.add_term((i, j), q * sign * binomial(a, i) * binomial(b, j));
                }
            }
        }
        out
    }
}

/// Integer polynomial in x, y.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u8, u8), i64>,
}

impl BivariatePoly {
    pub fn zero() -> BivariatePoly {
        BivariatePoly::default()
    }

    pub fn add_term(&mut self, exps: (u8, u8), coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: (u8, u8)) -> i64 {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u8, u8), &i64)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&(a, b), &q)| q * x.pow(a as u32) * y.pow(b as u32))
            .sum()
    }

    /// The same polynomial with x and y swapped.
    pub fn swap_xy(&self) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a, b), &q) in &self.terms {
            out.add_term((b, a), q);
        }
        out
    }
}

fn binomial(n: u8, k: u8) -> i64 {
    let (n, k) = (n as i64, k as i64);
    let k = k.min(n - k);
    let mut out = 1i64;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

fn write_terms<K, F>(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeMap<K, i64>,
    vars: F,
) -> fmt::Result
where
    K: Ord + Copy,
    F: Fn(K) -> Vec<(char, u8)>,
{
    if terms.is_empty() {
        return write!(f, "0");
    }
    // descending lex on exponents, matching how the invariants are usually
    // written: x-terms first, constant last
    for (pos, (&key, &q)) in terms.iter().rev().enumerate() {
        let mag = q.abs();
        if pos == 0 {
            if q < 0 {
                write!(f, "-")?;
            }
        } else if q < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let powers = vars(key);
        let is_constant = powers.iter().all(|&(_, e)| e == 0);
        if mag != 1 || is_constant {
            write!(f, "{mag}")?;
        }
        let mut first_var = mag == 1 && !is_constant;
        for (name, e) in powers {
            if e == 0 {
                continue;
            }
            if !first_var {
                write!(f, " ")?;
            }
            first_var = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for TrivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |(a, b, c)| vec![('x', a), ('y', b), ('z', c)])
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |(a, b)| vec![('x', a), ('y', b)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_and_eval() {
        let mut p = TrivariatePoly::zero();
        p.add_term((1, 1, 2), 3); // 3 x y z^2
        p.add_term((2, 0, 0), 1); // x^2
        let dx = p.partial_x();
        assert_eq!(dx.coeff((0, 1, 2)), 3);
        assert_eq!(dx.coeff((1, 0, 0)), 2);
        assert_eq!(p.eval(2, 1, -1), 3 * 2 + 4);
    }

    #[test]
    fn shift_substitution() {
        // (x-1)(y-1) = xy - x - y + 1, from the monomial x y
        let mut p = TrivariatePoly::zero();
        p.add_term((1, 1, 0), 1);
        p.add_term((0, 0, 3), 7); // dies with z -> 0
        let t = p.shift_xy_kill_z();
        assert_eq!(t.coeff((1, 1)), 1);
        assert_eq!(t.coeff((1, 0)), -1);
        assert_eq!(t.coeff((0, 1)), -1);
        assert_eq!(t.coeff((0, 0)), 1);
    }

    #[test]
    fn display_order() {
        let mut p = TrivariatePoly::zero();
        p.add_term((1, 0, 0), 1);
        p.add_term((0, 1, 0), 1);
        p.add_term((0, 0, 2), 1);
        p.add_term((0, 0, 1), 4);
        p.add_term((0, 0, 0), 2);
        assert_eq!(p.to_string(), "x + y + z^2 + 4 z + 2");
        let mut q = BivariatePoly::zero();
        q.add_term((1, 0), 1);
        q.add_term((0, 1), -1);
        assert_eq!(q.to_string(), "x - y");
    }
}
