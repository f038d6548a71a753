//! Ground-truth engines: exhaustive verifiers for spanning and fixed
//! complete bipartite copies, the brute-force odd-Ramsey oracle at desk
//! scale, the linear-system witness finder for all-even bipartitions,
//! uniqueness checks, neighbourhood counting, and the type-vector
//! diagnostic.
//!
//! The workhorse identity: a colour meets the complete bipartite graph
//! `(A, V \ A)` oddly exactly when the XOR of the per-vertex degree-parity
//! vectors over `A` has that colour's bit set, which makes a full
//! bipartition scan O(t) per subset.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::TaskSpec;
use crate::colorings::Coloring;
use crate::gf2::{solve_linear_system, Gf2Matrix, Gf2Vec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("the oracle handles at most {max} vertices, got {n}")]
    OracleTooLarge { n: usize, max: usize },
    #[error("oracle budget of {max_nodes} nodes exhausted after {nodes}")]
    OracleBudgetExhausted { nodes: u64, max_nodes: u64 },
    #[error("clique extraction needs at most n - 2 = {max} colours, got {r}")]
    TooManyColors { r: usize, max: usize },
}

// ---------------------------------------------------------------------------
// Reports and witnesses
// ---------------------------------------------------------------------------

/// A spanning bipartition on which every colour is even.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionWitness {
    /// The smaller part (ties broken towards the part containing vertex 1).
    pub a: Vec<usize>,
    pub t: usize,
    /// Per-colour parity of the number of crossing edges, 0 or 1.
    pub parities: Vec<u8>,
}

/// A failing copy of a complete bipartite graph, with its colour histogram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// `(colour, multiplicity)` for colours present on the copy.
    pub histogram: Vec<(u32, usize)>,
}

/// A clique without a colour of multiplicity one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueWitness {
    pub vertices: Vec<usize>,
    pub histogram: Vec<(u32, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Bipartition(BipartitionWitness),
    Copy(CopyWitness),
    Clique(CliqueWitness),
}

/// Outcome of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    pub witness: Option<Witness>,
    /// Instances examined.
    pub checked: u64,
    /// False when the run was sampled rather than complete.
    pub exhaustive: bool,
    /// Part sizes skipped as vacuous (odd edge count), spanning mode only.
    #[serde(skip)]
    pub vacuous: Vec<usize>,
}

impl Report {
    fn pass(checked: u64, exhaustive: bool) -> Self {
        Report {
            pass: true,
            witness: None,
            checked,
            exhaustive,
            vacuous: Vec::new(),
        }
    }

    fn fail(witness: Witness, checked: u64, exhaustive: bool) -> Self {
        Report {
            pass: false,
            witness: Some(witness),
            checked,
            exhaustive,
            vacuous: Vec::new(),
        }
    }
}

// ---------------------------------------------------------------------------
// Subset iteration helpers (bitmask, ascending numeric = colex order)
// ---------------------------------------------------------------------------

fn gosper_next(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    r | (((v ^ r) >> 2) / c)
}

/// All `t`-subsets of `{0..n-1}` as bitmasks, ascending.
fn subsets(n: usize, t: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if t == 0 { 0 } else { (1u64 << t) - 1 };
    std::iter::successors(Some(first), move |&v| {
        if v == 0 {
            None
        } else {
            Some(gosper_next(v))
        }
    })
    .take_while(move |&v| v < limit)
}

/// Canonical spanning bipartitions with part size `t`: all `t`-subsets for
/// `2t < n`, only those containing vertex 1 for `2t = n`.
fn bipartition_sides(n: usize, t: usize) -> Vec<u64> {
    assert!(t >= 1 && 2 * t <= n);
    if 2 * t < n {
        subsets(n, t).collect()
    } else {
        subsets(n - 1, t - 1).map(|m| m << 1 | 1).collect()
    }
}

/// Subset-lex order: `a` precedes `b` when the smallest element where they
/// differ belongs to `a`.
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && d & a & d.wrapping_neg() != 0
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

fn histogram_of<I: IntoIterator<Item = u32>>(colors: I) -> Vec<(u32, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for c in colors {
        *counts.entry(c).or_insert(0usize) += 1;
    }
    counts.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Parities
// ---------------------------------------------------------------------------

/// Per-colour parity of the edges crossing `(A, V \ A)`.
///
/// Uses the degree-parity identity (the crossing count of a colour is
/// congruent to the sum of its degrees over `A`); in debug builds the
/// result is checked against a direct edge scan.
pub fn bipartite_parities(col: &Coloring, a: &Gf2Vec) -> Vec<u8> {
    let n = col.num_vertices();
    assert_eq!(a.len(), n, "part must be a vertex set over [n]");
    let t = a.weight();
    assert!(t >= 1 && t < n, "part must be nonempty and proper");
    let mut mask = 0u64;
    for v in a.support() {
        mask ^= col.degree_parity_mask(v);
    }
    let parities: Vec<u8> = (0..col.num_colors())
        .map(|c| (mask >> c & 1) as u8)
        .collect();
    debug_assert_eq!(parities, scan_parities(col, a), "degree-sum identity");
    parities
}

fn scan_parities(col: &Coloring, a: &Gf2Vec) -> Vec<u8> {
    let mut parities = vec![0u8; col.num_colors()];
    for (i, j, c) in col.edges() {
        if a.get(i) != a.get(j) {
            parities[c as usize] ^= 1;
        }
    }
    parities
}

fn witness_from_mask(col: &Coloring, mask: u64) -> BipartitionWitness {
    let n = col.num_vertices();
    let a = Gf2Vec::from_support(n, &mask_vertices(mask));
    let parities = scan_parities(col, &a);
    BipartitionWitness {
        a: a.support(),
        t: a.weight(),
        parities,
    }
}

// ---------------------------------------------------------------------------
// Spanning verification
// ---------------------------------------------------------------------------

/// Checks that for every part size in the task's normalized set, every
/// spanning complete bipartite graph has an odd colour class. Part sizes
/// dropped by normalization are reported as vacuous. The failure witness is
/// the lexicographically least part of the smallest failing size, re-checked
/// by a direct edge scan.
pub fn check_odd_ramsey_spanning(col: &Coloring, task: &TaskSpec) -> Report {
    let n = col.num_vertices();
    assert_eq!(n, task.n(), "colouring and task must agree on n");
    let types: Vec<u64> = (0..=n)
        .map(|v| if v == 0 { 0 } else { col.degree_parity_mask(v) })
        .collect();
    let mut checked = 0u64;
    let mut vacuous: Vec<usize> = task
        .requested()
        .iter()
        .filter(|t| !task.t_norm().contains(t))
        .copied()
        .collect();
    vacuous.sort_unstable();
    for &t in task.t_norm() {
        let mut failure: Option<u64> = None;
        for side in bipartition_sides(n, t) {
            checked += 1;
            let mut parity = 0u64;
            let mut m = side;
            while m != 0 {
                parity ^= types[m.trailing_zeros() as usize + 1];
                m &= m - 1;
            }
            if parity == 0 && failure.is_none_or(|best| lex_less(side, best)) {
                failure = Some(side);
            }
        }
        if let Some(side) = failure {
            let witness = witness_from_mask(col, side);
            debug_assert!(witness.parities.iter().all(|&p| p == 0));
            let mut report = Report::fail(Witness::Bipartition(witness), checked, true);
            report.vacuous = vacuous;
            return report;
        }
    }
    let mut report = Report::pass(checked, true);
    report.vacuous = vacuous;
    report
}

/// Budget for copy enumeration in [`check_odd_ramsey_fixed`].
#[derive(Clone, Debug)]
pub struct CheckBudget {
    pub max_copies: u64,
    /// Seed for the sampled fallback.
    pub seed: u64,
}

impl Default for CheckBudget {
    fn default() -> Self {
        CheckBudget {
            max_copies: 5_000_000,
            seed: 0,
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut out = 1u64;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

/// Checks that every copy of the complete bipartite graph with part sizes
/// `(s, t)` has an odd colour class. Pairs of disjoint parts are unordered
/// when `s = t`. Falls back to seeded sampling past the copy budget; a
/// sampled pass is flagged non-exhaustive.
pub fn check_odd_ramsey_fixed(col: &Coloring, s: usize, t: usize, budget: &CheckBudget) -> Report {
    let n = col.num_vertices();
    assert!(s >= 1 && s <= t && s + t <= n, "need 1 <= s <= t, s + t <= n");
    let total = binomial(n, s).saturating_mul(binomial(n - s, t));
    if total <= budget.max_copies {
        let mut checked = 0u64;
        for left in subsets(n, s) {
            for right in complement_subsets(n, left, t) {
                if s == t && !lex_less(left, right) {
                    continue;
                }
                checked += 1;
                if copy_parity_mask(col, left, right) == 0 {
                    return Report::fail(copy_witness(col, left, right), checked, true);
                }
            }
        }
        Report::pass(checked, true)
    } else {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(budget.seed);
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut checked = 0u64;
        let mut vertices: Vec<usize> = (0..n).collect();
        for _ in 0..budget.max_copies {
            vertices.shuffle(&mut rng);
            let left = vertices[..s].iter().fold(0u64, |m, &v| m | 1 << v);
            let right = vertices[s..s + t].iter().fold(0u64, |m, &v| m | 1 << v);
            checked += 1;
            if copy_parity_mask(col, left, right) == 0 {
                return Report::fail(copy_witness(col, left, right), checked, false);
            }
        }
        Report::pass(checked, false)
    }
}

/// All `t`-subsets of the complement of `used`, as masks.
fn complement_subsets(n: usize, used: u64, t: usize) -> Vec<u64> {
    let free: Vec<usize> = (0..n).filter(|&v| used >> v & 1 == 0).collect();
    subsets(free.len(), t)
        .map(|m| {
            let mut out = 0u64;
            let mut mm = m;
            while mm != 0 {
                out |= 1u64 << free[mm.trailing_zeros() as usize];
                mm &= mm - 1;
            }
            out
        })
        .collect()
}

fn copy_parity_mask(col: &Coloring, left: u64, right: u64) -> u64 {
    let mut mask = 0u64;
    let mut lm = left;
    while lm != 0 {
        let u = lm.trailing_zeros() as usize + 1;
        lm &= lm - 1;
        let mut rm = right;
        while rm != 0 {
            let v = rm.trailing_zeros() as usize + 1;
            rm &= rm - 1;
            mask ^= 1 << col.color_of(u, v);
        }
    }
    mask
}

fn copy_witness(col: &Coloring, left: u64, right: u64) -> Witness {
    let lv = mask_vertices(left);
    let rv = mask_vertices(right);
    let colors = lv
        .iter()
        .flat_map(|&u| rv.iter().map(move |&v| col.color_of(u, v)));
    Witness::Copy(CopyWitness {
        left: lv.clone(),
        right: rv.clone(),
        histogram: histogram_of(colors),
    })
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

/// Node budget for [`rodd_bruteforce`].
#[derive(Clone, Debug)]
pub struct OracleBudget {
    pub max_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_nodes: 20_000_000_000,
        }
    }
}

/// Vertex cap for the brute-force oracle.
pub const ORACLE_MAX_N: usize = 6;

struct OracleSearch {
    edge_pairs: Vec<(usize, usize)>,
    /// Bipartitions grouped by the index of their last crossing edge.
    completions: Vec<Vec<u32>>,
    crossing: Vec<u32>,
    colors: Vec<u8>,
    r_max: u8,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
}

impl OracleSearch {
    fn assign(&mut self, edge: usize, max_used: u8) -> bool {
        if edge == self.edge_pairs.len() {
            return true;
        }
        let top = (max_used + 1).min(self.r_max - 1);
        for c in 0..=top {
            self.nodes += 1;
            if self.nodes >= self.max_nodes {
                self.exhausted = true;
                return false;
            }
            self.colors[edge] = c;
            let mut viable = true;
            for bi in 0..self.completions[edge].len() {
                let cross = self.crossing[self.completions[edge][bi] as usize];
                let mut parity = 0u16;
                let mut m = cross;
                while m != 0 {
                    let e = m.trailing_zeros() as usize;
                    m &= m - 1;
                    parity ^= 1 << self.colors[e];
                }
                if parity == 0 {
                    viable = false;
                    break;
                }
            }
            if viable && self.assign(edge + 1, max_used.max(c)) {
                return true;
            }
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// The least number of colours for which some colouring of the complete
/// graph passes [`check_odd_ramsey_spanning`], by exhaustive search over
/// edge partitions (colour labels are symmetric, so partitions are
/// enumerated as restricted growth strings). A partial colouring is pruned
/// as soon as a fully-assigned bipartition has all-even parities.
pub fn rodd_bruteforce(task: &TaskSpec, budget: &OracleBudget) -> Result<usize, VerifyError> {
    let n = task.n();
    if n > ORACLE_MAX_N {
        return Err(VerifyError::OracleTooLarge {
            n,
            max: ORACLE_MAX_N,
        });
    }
    if task.t_norm().is_empty() {
        return Ok(1);
    }
    let edge_pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let m = edge_pairs.len();
    let mut crossing = Vec::new();
    let mut completions = vec![Vec::new(); m];
    for &t in task.t_norm() {
        for side in bipartition_sides(n, t) {
            let mut cross = 0u32;
            for (idx, &(i, j)) in edge_pairs.iter().enumerate() {
                if (side >> (i - 1) & 1) != (side >> (j - 1) & 1) {
                    cross |= 1 << idx;
                }
            }
            let last = 31 - cross.leading_zeros() as usize;
            completions[last].push(crossing.len() as u32);
            crossing.push(cross);
        }
    }
    let upper = if n % 2 == 1 { n } else { n - 1 };
    let mut nodes_total = 0u64;
    for r in 1..=upper {
        let mut search = OracleSearch {
            edge_pairs: edge_pairs.clone(),
            completions: completions.clone(),
            crossing: crossing.clone(),
            colors: vec![0; m],
            r_max: r as u8,
            nodes: 0,
            max_nodes: budget.max_nodes.saturating_sub(nodes_total),
            exhausted: false,
        };
        // First edge is always colour 0 (labels are canonical).
        let found = search.assign(0, 0);
        nodes_total += search.nodes;
        if search.exhausted {
            return Err(VerifyError::OracleBudgetExhausted {
                nodes: nodes_total,
                max_nodes: budget.max_nodes,
            });
        }
        if found {
            return Ok(r);
        }
    }
    unreachable!("a passing colouring exists with at most n colours");
}

// ---------------------------------------------------------------------------
// All-even bipartition witness
// ---------------------------------------------------------------------------

/// Searches for a spanning bipartition meeting every colour class evenly,
/// via the linear system whose unknowns place each vertex on a side.
///
/// Each colour contributes the equation "the sum of its odd-degree vertex
/// variables vanishes"; for odd `n` the last colour's equation is dropped
/// (its parity follows from the others since the crossing count is even).
/// The final equation sums the first `n - 1` variables (even `n`) or all
/// `n` (odd `n`), which rules out the all-one assignment. Any nonzero
/// kernel vector therefore yields a witness; existence is guaranteed for
/// `r <= n - 2` (even `n`) and `r <= n - 1` (odd `n`).
pub fn even_bipartition_witness(col: &Coloring) -> Option<BipartitionWitness> {
    let n = col.num_vertices();
    let r = col.num_colors();
    let imposed = if n.is_multiple_of(2) { r } else { r.saturating_sub(1) };
    let mut rows = Vec::with_capacity(imposed + 1);
    for c in 0..imposed {
        let mut row = Gf2Vec::zeros(n);
        for v in 1..=n {
            if col.degree_parity_mask(v) >> c & 1 == 1 {
                row.set(v, true);
            }
        }
        rows.push(row);
    }
    let sum_top = if n.is_multiple_of(2) { n - 1 } else { n };
    let mut sum_row = Gf2Vec::zeros(n);
    for v in 1..=sum_top {
        sum_row.set(v, true);
    }
    rows.push(sum_row);
    let count = rows.len();
    let system = Gf2Matrix::from_rows(n, rows).expect("rows of length n");
    let solution = solve_linear_system(&system, &Gf2Vec::zeros(count))
        .expect("homogeneous systems are consistent");
    if solution.kernel.nrows() == 0 {
        return None;
    }
    // The sum equation excludes the all-one vector, so any nonzero kernel
    // vector is a proper bipartition; take the first basis vector.
    let x = solution.kernel.row(0).clone();
    debug_assert!(!x.is_zero() && x != Gf2Vec::ones(n));
    let side = canonical_side(n, &x);
    let parities = scan_parities(col, &side);
    assert!(
        parities.iter().all(|&p| p == 0),
        "witness must be all-even by construction"
    );
    Some(BipartitionWitness {
        a: side.support(),
        t: side.weight(),
        parities,
    })
}

/// The smaller side, ties broken to the side containing vertex 1.
fn canonical_side(n: usize, x: &Gf2Vec) -> Gf2Vec {
    let w = x.weight();
    let mut complement = Gf2Vec::ones(n);
    complement.xor_assign(x);
    if 2 * w < n || (2 * w == n && x.get(1)) {
        x.clone()
    } else {
        complement
    }
}

// ---------------------------------------------------------------------------
// Uniqueness checks
// ---------------------------------------------------------------------------

/// Checks that every spanning complete bipartite graph has a colour class
/// of size exactly one.
pub fn check_unique_spanning(col: &Coloring) -> Report {
    let n = col.num_vertices();
    let mut checked = 0u64;
    for t in 1..=n / 2 {
        for side in bipartition_sides(n, t) {
            checked += 1;
            let complement = !side & ((1u64 << n) - 1);
            let lv = mask_vertices(side);
            let rv = mask_vertices(complement);
            let histogram = histogram_of(
                lv.iter()
                    .flat_map(|&u| rv.iter().map(move |&v| col.color_of(u, v))),
            );
            if !histogram.iter().any(|&(_, count)| count == 1) {
                return Report::fail(
                    Witness::Copy(CopyWitness {
                        left: lv,
                        right: rv,
                        histogram,
                    }),
                    checked,
                    true,
                );
            }
        }
    }
    Report::pass(checked, true)
}

/// Vertex cap for clique enumeration.
pub const CLIQUE_MAX_N: usize = 16;

/// Checks that every clique on at least two vertices has a colour class of
/// size exactly one.
pub fn check_unique_cliques(col: &Coloring) -> Report {
    let n = col.num_vertices();
    assert!(n <= CLIQUE_MAX_N, "clique enumeration capped at {CLIQUE_MAX_N}");
    let mut checked = 0u64;
    for size in 2..=n {
        for mask in subsets(n, size) {
            checked += 1;
            let vertices = mask_vertices(mask);
            let histogram = histogram_of(clique_edge_colors(col, &vertices));
            if !histogram.iter().any(|&(_, count)| count == 1) {
                return Report::fail(
                    Witness::Clique(CliqueWitness {
                        vertices,
                        histogram,
                    }),
                    checked,
                    true,
                );
            }
        }
    }
    Report::pass(checked, true)
}

fn clique_edge_colors<'a>(
    col: &'a Coloring,
    vertices: &'a [usize],
) -> impl Iterator<Item = u32> + 'a {
    vertices
        .iter()
        .enumerate()
        .flat_map(move |(idx, &u)| vertices[idx + 1..].iter().map(move |&v| col.color_of(u, v)))
}

/// Extracts a clique (at least a triangle) in which no colour appears
/// exactly once, for colourings with at most `n - 2` colours.
///
/// Iteratively removes the least vertex incident to a uniquely-coloured
/// edge; each step removes one vertex and at least one colour from the
/// clique, so the process stops within `n - 3` iterations.
pub fn find_clique_without_unique(col: &Coloring) -> Result<Vec<usize>, VerifyError> {
    let n = col.num_vertices();
    let r = col.num_colors();
    if r + 2 > n {
        return Err(VerifyError::TooManyColors { r, max: n - 2 });
    }
    let mut clique: Vec<usize> = (1..=n).collect();
    let mut iterations = 0usize;
    loop {
        let histogram = histogram_of(clique_edge_colors(col, &clique));
        let unique_colors: Vec<u32> = histogram
            .iter()
            .filter(|&&(_, count)| count == 1)
            .map(|&(c, _)| c)
            .collect();
        if unique_colors.is_empty() {
            debug_assert!(clique.len() >= 3);
            return Ok(clique);
        }
        let mut eligible: Option<usize> = None;
        for (idx, &u) in clique.iter().enumerate() {
            for &v in &clique[idx + 1..] {
                if unique_colors.contains(&col.color_of(u, v)) {
                    eligible = Some(eligible.map_or(u, |e| e.min(u)));
                }
            }
        }
        let victim = eligible.expect("a unique colour has an edge");
        clique.retain(|&v| v != victim);
        iterations += 1;
        assert!(iterations <= n - 3, "extraction exceeded n - 3 steps");
    }
}

// ---------------------------------------------------------------------------
// Even neighbourhood counting
// ---------------------------------------------------------------------------

/// Result of [`count_even_s_neighbourhoods`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighbourhoodCount {
    /// Number of `s`-subsets of `V \ {v}` in which at most one colour sees
    /// `v` with odd degree.
    pub count: u64,
    /// The guaranteed lower bound `(n-s)^ceil(s/2) (n-r-s)^floor(s/2) /
    /// (r^floor(s/2) s!)` as an exact fraction, when `n - r - s >= 0`.
    pub bound: Option<(u128, u128)>,
}

/// Counts the even `s`-neighbourhoods of `v` exactly, and checks the
/// counting lower bound in exact integer arithmetic whenever it applies.
pub fn count_even_s_neighbourhoods(col: &Coloring, v: usize, s: usize) -> NeighbourhoodCount {
    let n = col.num_vertices();
    let r = col.num_colors();
    assert!((1..=n).contains(&v), "vertex out of range");
    assert!(s >= 1 && s < n, "need 1 <= s <= n - 1");
    let others: Vec<usize> = (1..=n).filter(|&u| u != v).collect();
    let mut count = 0u64;
    for mask in subsets(others.len(), s) {
        let mut parity = 0u64;
        let mut m = mask;
        while m != 0 {
            let u = others[m.trailing_zeros() as usize];
            m &= m - 1;
            parity ^= 1 << col.color_of(v, u);
        }
        if parity.count_ones() <= 1 {
            count += 1;
        }
    }
    let bound = if n >= r + s {
        let half_down = s / 2;
        let half_up = s - half_down;
        let num = ((n - s) as u128).pow(half_up as u32)
            * ((n - r - s) as u128).pow(half_down as u32);
        let mut den = (r as u128).pow(half_down as u32);
        for i in 1..=s as u128 {
            den *= i;
        }
        assert!(
            count as u128 * den >= num,
            "even-neighbourhood count {count} below the bound {num}/{den}"
        );
        Some((num, den))
    } else {
        None
    };
    NeighbourhoodCount { count, bound }
}

// ---------------------------------------------------------------------------
// Type vectors
// ---------------------------------------------------------------------------

/// The per-colour degree-parity vector of every vertex.
pub fn type_vectors(col: &Coloring) -> Vec<Gf2Vec> {
    let r = col.num_colors();
    (1..=col.num_vertices())
        .map(|v| {
            let mask = col.degree_parity_mask(v);
            let mut vec = Gf2Vec::zeros(r);
            for c in 1..=r {
                if mask >> (c - 1) & 1 == 1 {
                    vec.set(c, true);
                }
            }
            vec
        })
        .collect()
}

/// First subset of `size` vectors (1-based indices, lexicographic order of
/// index lists) whose XOR vanishes, or `None`. A zero-sum set of vertex
/// types induces a spanning bipartition meeting every colour evenly.
pub fn find_zero_sum_subset(vectors: &[Gf2Vec], size: usize) -> Option<Vec<usize>> {
    let n = vectors.len();
    if size == 0 || size > n {
        return None;
    }
    let mut indices: Vec<usize> = (0..size).collect();
    loop {
        let mut acc = Gf2Vec::zeros(vectors[0].len());
        for &i in &indices {
            acc.xor_assign(&vectors[i]);
        }
        if acc.is_zero() {
            return Some(indices.iter().map(|&i| i + 1).collect());
        }
        // Next combination in lexicographic order.
        let mut pos = size;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            if indices[pos] != pos + n - size {
                break;
            }
        }
        indices[pos] += 1;
        for advance in pos + 1..size {
            indices[advance] = indices[advance - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

/// A uniformly random colouring with exactly `r` declared colours.
pub fn random_coloring<R: Rng>(n: usize, r: usize, rng: &mut R) -> Coloring {
    let assign = (0..crate::colorings::edge_count(n))
        .map(|_| rng.gen_range(0..r as u32))
        .collect();
    Coloring::from_assign(n, r, assign).expect("freshly sampled assignment is valid")
}
