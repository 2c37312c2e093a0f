//! Ground truth for Littlewood-Richardson coefficients, independent of the
//! shift pipeline.
//!
//! The primary route counts lattice-word skew tableaux. A second route
//! multiplies explicit Schur polynomials monomial by monomial and expands
//! the product in the Schur basis; the two are tested against each other,
//! so the oracle is self-checking.

use crate::partition::{Partition, SchubertExpansion};
use std::collections::BTreeMap;

/// `c^nu_{lambda,mu}`: the number of skew tableaux of shape `nu/lambda` and
/// content `mu` that are row-weak, column-strict, and whose reverse reading
/// word is a lattice word. Returns 0 when the shapes are incompatible.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size()
        || !nu.contains(lambda)
        || !nu.contains(mu)
    {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }

    // cells of nu/lambda in reverse reading order: rows top to bottom,
    // each row right to left
    let rows = nu.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c));
        }
    }

    let mut filling = vec![vec![0usize; nu.part(0)]; rows];
    let mut counts = vec![0usize; mu.len() + 1];
    count_fillings(&mut filling, &mut counts, &cells, 0, lambda, mu)
}

fn count_fillings(
    filling: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    cells: &[(usize, usize)],
    pos: usize,
    lambda: &Partition,
    mu: &Partition,
) -> u64 {
    if pos == cells.len() {
        return 1;
    }
    let (r, c) = cells[pos];
    let max_value = mu.len();
    let mut total = 0;
    for v in 1..=max_value {
        // content bound
        if counts[v] >= mu.part(v - 1) {
            continue;
        }
        // lattice word: after placing v, #v must not pass #(v-1)
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        // rows weakly increase left to right; the right neighbor is filled
        if c + 1 < filling[r].len() && filling[r][c + 1] != 0 && v > filling[r][c + 1] {
            continue;
        }
        // columns strictly increase top to bottom
        if r > 0 && c >= lambda.part(r - 1) {
            let above = filling[r - 1][c];
            if above != 0 && v <= above {
                continue;
            }
        }
        filling[r][c] = v;
        counts[v] += 1;
        total += count_fillings(filling, counts, cells, pos + 1, lambda, mu);
        counts[v] -= 1;
        filling[r][c] = 0;
    }
    total
}

/// All `nu` in the `k x (n-k)` box with `c^nu_{lambda,mu} > 0`, with their
/// coefficients.
pub fn schur_product_in_box(
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
) -> SchubertExpansion {
    let target = lambda.size() + mu.size();
    let mut out = SchubertExpansion::new();
    for nu in Partition::all_in_box(k, n - k) {
        if nu.size() != target {
            continue;
        }
        out.add(nu.clone(), lr_coefficient(lambda, mu, &nu));
    }
    out
}

/// Monomials of the Schur polynomial `s_lambda(x_1..x_m)`, enumerated as
/// semistandard tableau contents. Exponent vectors are length `m`.
pub fn schur_polynomial(lambda: &Partition, m: usize) -> BTreeMap<Vec<u8>, i64> {
    let mut out = BTreeMap::new();
    if lambda.len() > m {
        return out;
    }
    if lambda.is_empty() {
        out.insert(vec![0u8; m], 1);
        return out;
    }
    let rows = lambda.len();
    let mut filling = vec![vec![0usize; lambda.part(0)]; rows];
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in 0..lambda.part(r) {
            cells.push((r, c));
        }
    }
    fn fill(
        filling: &mut Vec<Vec<usize>>,
        cells: &[(usize, usize)],
        pos: usize,
        m: usize,
        out: &mut BTreeMap<Vec<u8>, i64>,
    ) {
        if pos == cells.len() {
            let mut exps = vec![0u8; m];
            for row in filling.iter() {
                for &v in row {
                    if v != 0 {
                        exps[v - 1] += 1;
                    }
                }
            }
            *out.entry(exps).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[pos];
        let min = if c > 0 { filling[r][c - 1] } else { 1 };
        let above = if r > 0 { filling[r - 1][c] } else { 0 };
        for v in min.max(above + 1)..=m {
            filling[r][c] = v;
            fill(filling, cells, pos + 1, m, out);
            filling[r][c] = 0;
        }
    }
    fill(&mut filling, &cells, 0, m, &mut out);
    out
}

/// Expands the product `s_lambda * s_mu` in the Schur basis by brute-force
/// monomial multiplication, with enough variables to see every term.
pub fn schur_product_by_monomials(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let m = (lambda.len() + mu.len()).max(1);
    let a = schur_polynomial(lambda, m);
    let b = schur_polynomial(mu, m);
    let mut product: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    for (ea, ca) in &a {
        for (eb, cb) in &b {
            let sum: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *product.entry(sum).or_insert(0) += ca * cb;
        }
    }

    product.retain(|_, c| *c != 0);

    // peel off lex-leading monomials: the leading monomial of s_nu is x^nu
    let mut expansion = BTreeMap::new();
    while let Some((exps, coeff)) = product.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
        debug_assert!(
            exps.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial of a symmetric polynomial is a partition"
        );
        let nu = Partition::new(exps.iter().map(|&e| e as usize));
        for (e, c) in schur_polynomial(&nu, m) {
            *product.entry(e).or_insert(0) -= coeff * c;
        }
        product.retain(|_, c| *c != 0);
        expansion.insert(nu, coeff);
    }
    expansion
}
