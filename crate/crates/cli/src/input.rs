//! Parsers for the text input formats.
//!
//! Matroids arrive as a header line `n=<int> k=<int>` followed by either a
//! `bases 1,2;1,3;...` line or repeated `rank 1,2 : 1` condition lines
//! (whitespace-insensitive, elements 1-based). Affine permutations arrive
//! as `perm 3,6,5,8,7,10 k=3`. Lines starting with `#` are comments.

use crate::CliError;
use ecodim::{BoundedAffinePermutation, Matroid, RankCondition, Subset};

pub enum Parsed {
    Matroid(Matroid),
    Permutation(BoundedAffinePermutation),
}

impl Parsed {
    /// The matroid described by the input, building it from the
    /// permutation when necessary.
    pub fn into_matroid(self) -> Result<Matroid, CliError> {
        match self {
            Parsed::Matroid(m) => Ok(m),
            Parsed::Permutation(pi) => ecodim::permutation_to_matroid(&pi)
                .map_err(|e| CliError::Domain(e.to_string())),
        }
    }
}

fn parse_int(s: &str, line: usize, what: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::Parse(format!("line {line}: invalid {what} `{s}`")))
}

fn parse_csv(s: &str, line: usize, what: &str) -> Result<Vec<usize>, CliError> {
    if s.is_empty() {
        return Err(CliError::Parse(format!("line {line}: empty {what}")));
    }
    s.split(',').map(|t| parse_int(t, line, what)).collect()
}

fn parse_subset(s: &str, n: usize, line: usize) -> Result<Subset, CliError> {
    let elements = parse_csv(s, line, "element")?;
    for &e in &elements {
        if !(1..=n).contains(&e) {
            return Err(CliError::Parse(format!(
                "line {line}: element {e} out of range for n={n}"
            )));
        }
    }
    Ok(Subset::from_elements(elements))
}

fn strip(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

pub fn parse_input(text: &str) -> Result<Parsed, CliError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let &(first_no, first) = lines
        .first()
        .ok_or_else(|| CliError::Parse("empty input".to_string()))?;

    if first.split_whitespace().next() == Some("perm") {
        if lines.len() > 1 {
            return Err(CliError::Parse(format!(
                "line {}: unexpected content after the perm line",
                lines[1].0
            )));
        }
        return parse_perm(&first["perm".len()..], first_no);
    }

    // header: n=<int> k=<int>
    let header = strip(first);
    let rest = header.strip_prefix("n=").ok_or_else(|| {
        CliError::Parse(format!("line {first_no}: expected header `n=<int> k=<int>`"))
    })?;
    let (n_str, k_str) = rest.split_once("k=").ok_or_else(|| {
        CliError::Parse(format!("line {first_no}: expected `k=<int>` in the header"))
    })?;
    let n = parse_int(n_str, first_no, "n")?;
    let k = parse_int(k_str, first_no, "k")?;
    if !(1..=16).contains(&n) {
        return Err(CliError::Parse(format!("line {first_no}: n must be between 1 and 16")));
    }
    if k > n {
        return Err(CliError::Parse(format!("line {first_no}: k must be at most n")));
    }

    let mut bases: Vec<Subset> = Vec::new();
    let mut conditions: Vec<RankCondition> = Vec::new();
    for &(no, line) in &lines[1..] {
        if let Some(rest) = line.strip_prefix("bases") {
            for basis in strip(rest).split(';') {
                bases.push(parse_subset(basis, n, no)?);
            }
        } else if let Some(rest) = line.strip_prefix("rank") {
            let body = strip(rest);
            let (set_str, bound_str) = body.split_once(':').ok_or_else(|| {
                CliError::Parse(format!("line {no}: expected `rank <csv> : <int>`"))
            })?;
            let set = parse_subset(set_str, n, no)?;
            let bound = parse_int(bound_str, no, "rank bound")?;
            if bound > set.len() {
                return Err(CliError::Parse(format!(
                    "line {no}: bound {bound} exceeds the size of {set}"
                )));
            }
            conditions.push(RankCondition::new(set, bound));
        } else {
            return Err(CliError::Parse(format!(
                "line {no}: expected a `bases` or `rank` line"
            )));
        }
    }

    let built = if !bases.is_empty() {
        if !conditions.is_empty() {
            return Err(CliError::Parse(
                "inputs mix `bases` and `rank` lines; use one style".to_string(),
            ));
        }
        let m = Matroid::from_bases(n, bases).map_err(|e| CliError::Domain(e.to_string()))?;
        if m.k() != k {
            return Err(CliError::Domain(format!(
                "header says k={k} but the bases have rank {}",
                m.k()
            )));
        }
        m
    } else {
        Matroid::from_rank_conditions(n, conditions, Some(k))
            .map_err(|e| CliError::Domain(e.to_string()))?
    };
    Ok(Parsed::Matroid(built))
}

fn parse_perm(rest: &str, line: usize) -> Result<Parsed, CliError> {
    let mut declared_k = None;
    let mut csv = String::new();
    for token in rest.split_whitespace() {
        if let Some(kv) = token.strip_prefix("k=") {
            declared_k = Some(parse_int(kv, line, "k")?);
        } else {
            csv.push_str(token);
        }
    }
    let window = parse_csv(&csv, line, "permutation value")?;
    let pi = BoundedAffinePermutation::new(window)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    if let Some(k) = declared_k {
        if pi.k() != k {
            return Err(CliError::Domain(format!(
                "declared k={k} but the window has degree {}",
                pi.k()
            )));
        }
    }
    Ok(Parsed::Permutation(pi))
}

/// Partition argument: comma-separated parts; `0` or `-` is the empty
/// partition.
pub fn parse_partition(arg: &str, k: usize, n: usize) -> Result<ecodim::Partition, CliError> {
    let parts: Vec<usize> = if arg == "-" || arg == "0" {
        Vec::new()
    } else {
        arg.split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| CliError::Parse(format!("invalid partition `{arg}`")))
            })
            .collect::<Result<_, _>>()?
    };
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(CliError::Parse(format!(
            "partition `{arg}` is not weakly decreasing"
        )));
    }
    let p = ecodim::Partition::new(parts);
    if !p.fits_in_box(k, n - k) {
        return Err(CliError::Parse(format!(
            "partition {p} does not fit the {k} x {} box",
            n - k
        )));
    }
    Ok(p)
}
