//! Interval rank matrices and the shift-and-split Littlewood-Richardson
//! pipeline.
//!
//! A Richardson position is encoded as rank bounds on intervals of `[n]`.
//! Repeatedly: pick the essential interval with the rightmost right (then
//! left) endpoint that does not start at 1, slide its left edge one step
//! left and its right edge one step in, regenerate, and split matrices that
//! break the corner pattern into their components. Every chain ends at a
//! matrix whose essential intervals all start at 1 — a Schubert position —
//! and the multiset of leaf partitions is the Schubert expansion.

use crate::codim::ec_report;
use crate::family::SetFamily;
use crate::matroid::{Matroid, RankCondition};
use crate::partition::{Partition, SchubertExpansion};
use crate::subset::Subset;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrmError {
    #[error("interval [{start},{end}] with bound {bound} is invalid on [{n}]")]
    InvalidBounds { start: usize, end: usize, bound: usize, n: usize },
    #[error("conditions force rank {got} < {k} on the full interval")]
    RankCollapse { got: usize, k: usize },
    #[error("operation needs a valid matrix, got one that breaks the corner pattern")]
    PendingMatrix,
    #[error("shift {from}->{to} does not isolate a unique condition")]
    AmbiguousShift { from: usize, to: usize },
    #[error("splitting produced no valid component")]
    NoValidResolution,
    #[error("essential conditions do not all start at 1; not a Schubert position")]
    NotSchubert,
    #[error("the product vanishes in this box")]
    EmptyIntersection,
    #[error("shift chain exceeded the depth bound {0}")]
    NonTermination(usize),
}

/// A rank bound on an interval: `rank([start, end]) <= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntervalCondition {
    pub start: usize,
    pub end: usize,
    pub bound: usize,
}

impl IntervalCondition {
    pub fn new(start: usize, end: usize, bound: usize) -> IntervalCondition {
        IntervalCondition { start, end, bound }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.start <= x && x <= self.end
    }

    pub fn subset(&self) -> Subset {
        Subset::from_elements(self.start..=self.end)
    }
}

/// Upper-triangular table `r_{ij}` of generated interval ranks in `G(k, n)`.
///
/// `pending` marks matrices that violate the corner condition (if
/// `r_{ij} = r_{i-1,j} = r_{i,j+1}` then `r_{i-1,j+1} = r_{ij}`); those
/// describe reducible intersections and must be split before further use.
#[derive(Clone)]
pub struct IntervalRankMatrix {
    n: usize,
    k: usize,
    /// Row-major `n x n`; entries below the diagonal are unused.
    r: Vec<u8>,
    pending: bool,
    /// The conditions this matrix was generated from, for display.
    conditions: Vec<IntervalCondition>,
}

impl PartialEq for IntervalRankMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.r == other.r
    }
}

impl Eq for IntervalRankMatrix {}

impl fmt::Debug for IntervalRankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntervalRankMatrix(n={}, k={}, {}", self.n, self.k, self.label())?;
        if self.pending {
            write!(f, " pending")?;
        }
        write!(f, ")")
    }
}

/// Generates the interval rank matrix of `G(k, n)` from rank conditions on
/// intervals: `r_{ij} = min(j - i + 1, k, min over c of bound_c + |[i,j] - I_c|)`.
pub fn irm_from_conditions(
    n: usize,
    k: usize,
    conditions: &[IntervalCondition],
) -> Result<IntervalRankMatrix, IrmError> {
    assert!((1..=crate::subset::MAX_GROUND_SIZE).contains(&n) && k <= n);
    for c in conditions {
        if !(1..=c.end).contains(&c.start) || c.end > n || c.bound > c.end - c.start + 1 {
            return Err(IrmError::InvalidBounds {
                start: c.start,
                end: c.end,
                bound: c.bound,
                n,
            });
        }
    }
    let mut r = vec![0u8; n * n];
    for i in 1..=n {
        for j in i..=n {
            let size = j - i + 1;
            let mut v = size.min(k);
            for c in conditions {
                let overlap = j.min(c.end).saturating_sub(i.max(c.start) - 1);
                v = v.min(c.bound + size - overlap);
            }
            r[(i - 1) * n + (j - 1)] = v as u8;
        }
    }
    let got = r[n - 1] as usize;
    if got < k {
        return Err(IrmError::RankCollapse { got, k });
    }
    let mut conds: Vec<IntervalCondition> = conditions.to_vec();
    conds.sort_unstable();
    conds.dedup();
    let mut irm = IntervalRankMatrix { n, k, r, pending: false, conditions: conds };
    irm.pending = irm.first_violation().is_some();
    Ok(irm)
}

impl IntervalRankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_pending(&self) -> bool {
        self.pending
    }

    pub fn conditions(&self) -> &[IntervalCondition] {
        &self.conditions
    }

    /// `r_{ij}` with the virtual values just outside the triangle:
    /// `j - i + 1` when `j < i` (0 for the empty interval, -1 one step
    /// further), so the permutation-entry test works at the edges.
    pub fn entry(&self, i: isize, j: isize) -> i64 {
        if j < i {
            debug_assert!(j - i >= -2);
            return (j - i + 1) as i64;
        }
        debug_assert!(i >= 1 && j <= self.n as isize);
        self.r[(i as usize - 1) * self.n + (j as usize - 1)] as i64
    }

    pub fn ranks(&self) -> &[u8] {
        &self.r
    }

    fn set_entry(&mut self, i: usize, j: usize, v: u8) {
        self.r[(i - 1) * self.n + (j - 1)] = v;
    }

    /// True iff the partial-permutation test fires at `(i, j)`:
    /// `r_{ij} = r_{i,j-1} = r_{i+1,j}` and `r_{i+1,j-1} = r_{ij} - 1`.
    fn is_one(&self, i: usize, j: usize) -> bool {
        let (i, j) = (i as isize, j as isize);
        let v = self.entry(i, j);
        self.entry(i, j - 1) == v
            && self.entry(i + 1, j) == v
            && self.entry(i + 1, j - 1) == v - 1
    }

    fn ones(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i..=self.n {
                if self.is_one(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// First position `(i, j)` where the corner condition fails, scanning
    /// in row-major order; the offending block spans rows `i-1, i` and
    /// columns `j, j+1`. The scan includes `j = i - 1`, where the block's
    /// bottom-left entry is the virtual 0 below the diagonal: that case is
    /// the pattern of two adjacent rank-0 singletons whose pair keeps
    /// rank 1.
    fn first_violation(&self) -> Option<(usize, usize)> {
        for i in 2..=self.n {
            for j in i - 1..self.n {
                let v = self.entry(i as isize, j as isize);
                if self.entry(i as isize - 1, j as isize) == v
                    && self.entry(i as isize, j as isize + 1) == v
                    && self.entry(i as isize - 1, j as isize + 1) != v
                {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Sum of `k - r_{ij}` over permutation entries; meaningful as a
    /// codimension for valid matrices, and used as the budget when
    /// splitting pending ones.
    pub fn codimension_raw(&self) -> i64 {
        self.ones()
            .into_iter()
            .map(|(i, j)| self.k as i64 - self.entry(i as isize, j as isize))
            .sum()
    }

    /// The matroid generated by this matrix's interval conditions.
    pub fn to_matroid(&self) -> Matroid {
        assert!(!self.pending, "pending matrices do not describe a single matroid");
        let mut conds = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for i in 1..=self.n {
            for j in i..=self.n {
                conds.push(RankCondition::new(
                    Subset::from_elements(i..=j),
                    self.entry(i as isize, j as isize) as usize,
                ));
            }
        }
        Matroid::from_rank_conditions(self.n, conds, None)
            .expect("a valid interval rank matrix generates a matroid")
    }

    fn label(&self) -> String {
        let conds: Vec<IntervalCondition> = if self.pending {
            self.conditions.clone()
        } else {
            essential_intervals(self)
        };
        if conds.is_empty() {
            return "(no conditions)".to_string();
        }
        conds
            .iter()
            .map(|c| condition_label(c, self.n))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn subscript(v: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    v.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn condition_label(c: &IntervalCondition, n: usize) -> String {
    let elements: Vec<String> = (c.start..=c.end).map(|e| e.to_string()).collect();
    let joined = if n <= 9 { elements.join("") } else { elements.join(",") };
    format!("({}){}", joined, subscript(c.bound))
}

/// The partial permutation matrix of a valid interval rank matrix, its
/// diagram, and the essential positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialSet {
    pub ones: Vec<(usize, usize)>,
    pub diagram: Vec<(usize, usize)>,
    /// Upper-right corners of the diagram's connected components.
    pub essential: Vec<(usize, usize)>,
}

/// Computes the partial permutation entries, crosses out everything
/// strictly below or left of an entry together with empty rows and columns,
/// and reads off the upper-right corners of what is left.
pub fn essential_set(irm: &IntervalRankMatrix) -> Result<EssentialSet, IrmError> {
    if irm.is_pending() {
        return Err(IrmError::PendingMatrix);
    }
    let n = irm.n();
    let ones = irm.ones();
    let mut row_one = vec![None; n + 1];
    let mut col_one = vec![None; n + 1];
    for &(i, j) in &ones {
        assert!(row_one[i].is_none() && col_one[j].is_none(), "partial permutation entries");
        row_one[i] = Some(j);
        col_one[j] = Some(i);
    }
    let in_diagram = |i: usize, j: usize| -> bool {
        match (row_one[i], col_one[j]) {
            (Some(rj), Some(ci)) => j >= rj && i <= ci,
            _ => false,
        }
    };
    let mut diagram = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if in_diagram(i, j) {
                diagram.push((i, j));
            }
        }
    }
    let essential = diagram
        .iter()
        .copied()
        .filter(|&(i, j)| !(i > 1 && in_diagram(i - 1, j)) && !(j < n && in_diagram(i, j + 1)))
        .collect();
    Ok(EssentialSet { ones, diagram, essential })
}

/// Essential positions carrying a genuine condition (`r_{ij} < k`), as
/// interval conditions sorted by position.
pub fn essential_intervals(irm: &IntervalRankMatrix) -> Vec<IntervalCondition> {
    let ess = essential_set(irm).expect("essential intervals need a valid matrix");
    ess.essential
        .into_iter()
        .filter_map(|(i, j)| {
            let r = irm.entry(i as isize, j as isize) as usize;
            (r < irm.k()).then(|| IntervalCondition::new(i, j, r))
        })
        .collect()
}

/// Codimension of a valid interval rank matrix: the sum of `k - r_{ij}`
/// over permutation entries. Checked against the expected-codimension
/// machinery on the generated matroid with the family of all intervals.
pub fn codimension(irm: &IntervalRankMatrix) -> Result<i64, IrmError> {
    if irm.is_pending() {
        return Err(IrmError::PendingMatrix);
    }
    let codim = irm.codimension_raw();
    let via_ec = ec_report(&irm.to_matroid(), SetFamily::intervals(irm.n())).ec;
    assert_eq!(codim, via_ec, "permutation-entry codimension must match the a-weight sum");
    Ok(codim)
}

/// Picks the next shift: among essential intervals starting after 1, the
/// one with the rightmost right endpoint, ties broken by the rightmost
/// left endpoint. For `[i, j]` the shift is `(i - 1, j)`. `None` means
/// every essential interval starts at 1: a Schubert position.
pub fn select_shift(irm: &IntervalRankMatrix) -> Result<Option<(usize, usize)>, IrmError> {
    if irm.is_pending() {
        return Err(IrmError::PendingMatrix);
    }
    Ok(essential_intervals(irm)
        .into_iter()
        .filter(|c| c.start > 1)
        .max_by_key(|c| (c.end, c.start))
        .map(|c| (c.start - 1, c.end)))
}

/// Applies the shift `from -> to`: the unique essential condition
/// containing `to` but not `from` — necessarily `[from + 1, to]` — is
/// replaced by the same bound on `[from, to - 1]`, and the matrix is
/// regenerated. If every condition containing `to` also contains `from`,
/// the matrix is unchanged.
pub fn apply_shift(
    irm: &IntervalRankMatrix,
    from: usize,
    to: usize,
) -> Result<IntervalRankMatrix, IrmError> {
    if irm.is_pending() {
        return Err(IrmError::PendingMatrix);
    }
    let conds = essential_intervals(irm);
    let matching: Vec<&IntervalCondition> =
        conds.iter().filter(|c| c.contains(to) && !c.contains(from)).collect();
    match matching.len() {
        0 => Ok(irm.clone()),
        1 => {
            let target = *matching[0];
            if (target.start, target.end) != (from + 1, to) {
                return Err(IrmError::AmbiguousShift { from, to });
            }
            let replaced: Vec<IntervalCondition> = conds
                .iter()
                .map(|&c| {
                    if c == target {
                        IntervalCondition::new(from, to - 1, c.bound)
                    } else {
                        c
                    }
                })
                .collect();
            irm_from_conditions(irm.n(), irm.k(), &replaced)
        }
        _ => Err(IrmError::AmbiguousShift { from, to }),
    }
}

/// Splits a matrix into the interval rank matrices of its components.
///
/// Each violating block `(r, r+1 / r, r)` is resolved both ways — top-right
/// corner lowered to `r`, or bottom-left lowered to `r - 1` — and the
/// results are regenerated and recursed. Candidates are deduplicated;
/// those whose rank function is dominated pointwise by another's (contained
/// components) or whose codimension exceeds the parent's are dropped.
pub fn split_components(
    irm: &IntervalRankMatrix,
) -> Result<Vec<IntervalRankMatrix>, IrmError> {
    split_components_with_budget(irm, irm.codimension_raw())
}

/// `split_components` with the codimension budget supplied by the caller.
/// The pipeline passes the codimension of the originating valid matrix;
/// the raw sum of a pending matrix may overcount it.
fn split_components_with_budget(
    irm: &IntervalRankMatrix,
    budget: i64,
) -> Result<Vec<IntervalRankMatrix>, IrmError> {
    if !irm.is_pending() {
        return Ok(vec![irm.clone()]);
    }
    let mut found = Vec::new();
    resolve(irm, &mut found, &|m| m.first_violation());
    finish_split(found, budget)
}

fn finish_split(
    mut found: Vec<IntervalRankMatrix>,
    parent_codim: i64,
) -> Result<Vec<IntervalRankMatrix>, IrmError> {
    found.sort_by(|a, b| a.ranks().cmp(b.ranks()));
    found.dedup();
    found.retain(|c| c.codimension_raw() <= parent_codim);
    let dominated: Vec<bool> = found
        .iter()
        .map(|c| {
            found.iter().any(|d| {
                d.ranks() != c.ranks()
                    && c.ranks().iter().zip(d.ranks()).all(|(a, b)| a <= b)
            })
        })
        .collect();
    let mut iter = dominated.into_iter();
    found.retain(|_| !iter.next().unwrap());
    if found.is_empty() {
        return Err(IrmError::NoValidResolution);
    }
    Ok(found)
}

fn resolve<F>(irm: &IntervalRankMatrix, out: &mut Vec<IntervalRankMatrix>, pick: &F)
where
    F: Fn(&IntervalRankMatrix) -> Option<(usize, usize)>,
{
    let Some((i, j)) = pick(irm) else {
        out.push(irm.clone());
        return;
    };
    let v = irm.entry(i as isize, j as isize);

    let mut top = irm.clone();
    top.set_entry(i - 1, j + 1, v as u8);
    if let Ok(re) = regenerate(&top) {
        resolve(&re, out, pick);
    }
    if v > 0 {
        let mut bottom = irm.clone();
        bottom.set_entry(i, j, v as u8 - 1);
        if let Ok(re) = regenerate(&bottom) {
            resolve(&re, out, pick);
        }
    }
}

/// Re-generates a matrix from all of its own entries taken as conditions.
fn regenerate(irm: &IntervalRankMatrix) -> Result<IntervalRankMatrix, IrmError> {
    let mut conds = Vec::with_capacity(irm.n * (irm.n + 1) / 2);
    for i in 1..=irm.n {
        for j in i..=irm.n {
            conds.push(IntervalCondition::new(i, j, irm.entry(i as isize, j as isize) as usize));
        }
    }
    irm_from_conditions(irm.n, irm.k, &conds)
}

/// Reads the leaf partition off a Schubert-position matrix: with
/// `r_{1,0} = 0`, part `k - v` is `max{m : r_{1,m} = v} - v` for each
/// rank value `v < k`.
pub fn schubert_partition(irm: &IntervalRankMatrix) -> Result<Partition, IrmError> {
    if select_shift(irm)?.is_some() {
        return Err(IrmError::NotSchubert);
    }
    let n = irm.n() as isize;
    let k = irm.k();
    let mut parts = vec![0usize; k];
    for v in 0..k {
        let m = (0..=n)
            .filter(|&m| irm.entry(1, m) == v as i64)
            .max()
            .expect("every rank value below k appears in the first row");
        parts[k - 1 - v] = m as usize - v;
    }
    let p = Partition::new(parts);
    assert!(p.fits_in_box(k, irm.n() - k), "leaf partitions live in the k x (n-k) box");
    Ok(p)
}

/// The defining conditions of the Richardson position: the inverse of the
/// Schubert partition map on initial intervals for `lambda`, mirrored onto
/// final intervals for `mu`.
fn richardson_conditions(
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
) -> Vec<IntervalCondition> {
    let mut conds = Vec::new();
    for v in 0..k {
        let lp = lambda.part(k - v - 1);
        if lp > 0 {
            conds.push(IntervalCondition::new(1, v + lp, v));
        }
        let mp = mu.part(k - v - 1);
        if mp > 0 {
            conds.push(IntervalCondition::new(n - (v + mp) + 1, n, v));
        }
    }
    conds
}

/// The interval rank matrix of the intersection of the `lambda` Schubert
/// position (conditions on initial intervals) with the `mu` one reflected
/// onto final intervals. May be pending; `EmptyIntersection` when the
/// conditions cannot coexist at rank `k`.
pub fn richardson(
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
) -> Result<IntervalRankMatrix, IrmError> {
    assert!(k >= 1 && k <= n);
    assert!(lambda.fits_in_box(k, n - k) && mu.fits_in_box(k, n - k), "partitions must fit the box");
    let conds = richardson_conditions(lambda, mu, k, n);
    let irm = match irm_from_conditions(n, k, &conds) {
        Ok(irm) => irm,
        Err(IrmError::RankCollapse { .. }) => return Err(IrmError::EmptyIntersection),
        Err(e) => return Err(e),
    };
    if irm.is_pending() {
        let budget = (lambda.size() + mu.size()) as i64;
        match split_components_with_budget(&irm, budget) {
            Ok(_) => {}
            Err(IrmError::NoValidResolution) => return Err(IrmError::EmptyIntersection),
            Err(e) => return Err(e),
        }
    }
    Ok(irm)
}

/// One node of the degeneration tree.
#[derive(Debug, Clone)]
pub struct TraceNode {
    pub matrix: IntervalRankMatrix,
    pub step: TraceStep,
    pub children: Vec<TraceNode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// One child: the matrix after the shift.
    Shift { from: usize, to: usize },
    /// Children are the split components.
    Split,
    /// Schubert position reached.
    Leaf { partition: Partition },
}

#[derive(Debug, Clone)]
pub struct ShiftTrace {
    pub root: TraceNode,
}

impl ShiftTrace {
    pub fn leaves(&self) -> Vec<&Partition> {
        let mut out = Vec::new();
        fn walk<'t>(node: &'t TraceNode, out: &mut Vec<&'t Partition>) {
            if let TraceStep::Leaf { partition } = &node.step {
                out.push(partition);
            }
            for c in &node.children {
                walk(c, out);
            }
        }
        walk(&self.root, &mut out);
        out
    }
}

fn render_node(node: &TraceNode, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let pad = "  ".repeat(depth);
    write!(f, "{pad}{}", node.matrix.label())?;
    if node.matrix.is_pending() {
        write!(f, " [pending]")?;
    }
    writeln!(f)?;
    match &node.step {
        TraceStep::Leaf { partition } => writeln!(f, "{pad}  = \u{3c3}{partition}"),
        TraceStep::Shift { from, to } => {
            writeln!(f, "{pad}  shift {from}\u{2192}{to}")?;
            render_node(&node.children[0], depth + 1, f)
        }
        TraceStep::Split => {
            for c in &node.children {
                render_node(c, depth + 1, f)?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for ShiftTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_node(&self.root, 0, f)
    }
}

/// Runs the full pipeline for `sigma_lambda * sigma_mu` in `G(k, n)`:
/// shift, split, recurse, and read the partition off every Schubert leaf.
/// The multiplicity of a partition is its number of leaves.
pub fn lr_expand(
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
) -> Result<(SchubertExpansion, ShiftTrace), IrmError> {
    let root_matrix = richardson(lambda, mu, k, n)?;
    let max_depth = n * k * (n + 1);
    let root_codim = (lambda.size() + mu.size()) as i64;
    let root = expand_node(root_matrix, root_codim, 0, max_depth)?;
    assert_codim_conserved(&root, root_codim);
    let trace = ShiftTrace { root };
    let mut expansion = SchubertExpansion::new();
    for leaf in trace.leaves() {
        expansion.add(leaf.clone(), 1);
    }
    Ok((expansion, trace))
}

fn expand_node(
    matrix: IntervalRankMatrix,
    codim: i64,
    depth: usize,
    max_depth: usize,
) -> Result<TraceNode, IrmError> {
    if matrix.is_pending() {
        let comps = split_components_with_budget(&matrix, codim)?;
        let mut children = Vec::with_capacity(comps.len());
        for c in comps {
            children.push(expand_node(c, codim, depth, max_depth)?);
        }
        return Ok(TraceNode { matrix, step: TraceStep::Split, children });
    }
    match select_shift(&matrix)? {
        None => {
            let partition = schubert_partition(&matrix)?;
            Ok(TraceNode { matrix, step: TraceStep::Leaf { partition }, children: Vec::new() })
        }
        Some((from, to)) => {
            if depth >= max_depth {
                return Err(IrmError::NonTermination(max_depth));
            }
            let next = apply_shift(&matrix, from, to)?;
            let child = expand_node(next, codim, depth + 1, max_depth)?;
            Ok(TraceNode {
                matrix,
                step: TraceStep::Shift { from, to },
                children: vec![child],
            })
        }
    }
}

/// Every valid node of the trace has the root's codimension; pending nodes
/// have no codimension of their own.
fn assert_codim_conserved(node: &TraceNode, expected: i64) {
    if !node.matrix.is_pending() {
        assert_eq!(
            node.matrix.codimension_raw(),
            expected,
            "codimension must be conserved along the trace"
        );
    }
    for c in &node.children {
        assert_codim_conserved(c, expected);
    }
}
