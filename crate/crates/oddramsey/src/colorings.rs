//! Edge colourings of the complete graph: data model, explicit
//! constructions, and both directions of the code/colouring transformation.
//!
//! Vertices are `1..=n`, colours `0..r-1`, and edges live in the canonical
//! order `(1,2), (1,3), ..., (1,n), (2,3), ...`. Declared colours may have
//! empty classes; an absent colour meets every subgraph evenly.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::codes::TaskSpec;
use crate::gf2::{Gf2Matrix, Gf2Vec, LinearCode, ENUMERATION_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("vertex count {n} must be even")]
    OddVertexCount { n: usize },
    #[error("need at least {min} colours, got {r}")]
    TooFewColors { r: usize, min: usize },
    #[error("assignment has {found} entries but K_{n} has {expected} edges")]
    AssignmentLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("colour {color} out of range 0..{r}")]
    ColorOutOfRange { color: u32, r: usize },
    #[error("code length {code_len} does not match vertex count {n}")]
    LengthMismatch { code_len: usize, n: usize },
    #[error("code dimension {dim} must be at most n - 1 = {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("code contains the forbidden-weight codeword {word}")]
    ForbiddenCodeword { word: String },
    #[error("edge list line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },
    #[error("edge list is missing edge ({i},{j})")]
    EdgeListIncomplete { i: usize, j: usize },
    #[error("edge list repeats edge ({i},{j})")]
    EdgeListDuplicate { i: usize, j: usize },
}

/// Index of edge `(i, j)`, `i < j`, in the canonical lexicographic order.
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i) - 1
}

/// Number of edges of the complete graph on `n` vertices.
pub fn edge_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// An edge colouring of the complete graph on `n` vertices with `r`
/// declared colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    n: usize,
    r: usize,
    assign: Vec<u32>,
}

impl Coloring {
    /// All edges coloured 0.
    pub fn monochromatic(n: usize, r: usize) -> Result<Self, ColoringError> {
        Coloring::from_assign(n, r.max(1), vec![0; edge_count(n)])
    }

    pub fn from_assign(n: usize, r: usize, assign: Vec<u32>) -> Result<Self, ColoringError> {
        if r < 1 {
            return Err(ColoringError::TooFewColors { r, min: 1 });
        }
        if assign.len() != edge_count(n) {
            return Err(ColoringError::AssignmentLength {
                n,
                expected: edge_count(n),
                found: assign.len(),
            });
        }
        if let Some(&color) = assign.iter().find(|&&c| c as usize >= r) {
            return Err(ColoringError::ColorOutOfRange { color, r });
        }
        Ok(Coloring { n, r, assign })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.r
    }

    pub fn color_of(&self, i: usize, j: usize) -> u32 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.assign[edge_index(self.n, i, j)]
    }

    pub fn set_color(&mut self, i: usize, j: usize, c: u32) {
        assert!((c as usize) < self.r, "colour {c} out of range");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.assign[edge_index(self.n, i, j)] = c;
    }

    pub fn assign(&self) -> &[u32] {
        &self.assign
    }

    /// Iterates `(i, j, colour)` in canonical edge order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.n;
        (1..n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
            .zip(self.assign.iter())
            .map(|((i, j), &c)| (i, j, c))
    }

    /// Edge count per colour; sums to `C(n, 2)`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.r];
        for &c in &self.assign {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Per-colour degree parities of `v`, as a bitmask over colours.
    pub fn degree_parity_mask(&self, v: usize) -> u64 {
        assert!(self.r <= 64, "parity mask supports at most 64 colours");
        let mut mask = 0u64;
        for u in 1..=self.n {
            if u != v {
                mask ^= 1 << self.color_of(v, u);
            }
        }
        mask
    }

    /// Canonical edge-list text: one `i j c` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, j, c) in self.edges() {
            out.push_str(&format!("{i} {j} {c}\n"));
        }
        out
    }

    /// Parses the `i j c` edge-list format. The vertex count is the largest
    /// endpoint and the colour count the largest colour plus one; every edge
    /// of the complete graph must appear exactly once.
    pub fn from_edge_list(text: &str) -> Result<Self, ColoringError> {
        let mut triples = Vec::new();
        let mut n = 0usize;
        let mut r = 1usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(ColoringError::EdgeListParse {
                    line: idx + 1,
                    reason: format!("expected `i j c`, got {line:?}"),
                });
            }
            let parse = |s: &str| -> Result<usize, ColoringError> {
                s.parse().map_err(|_| ColoringError::EdgeListParse {
                    line: idx + 1,
                    reason: format!("invalid integer {s:?}"),
                })
            };
            let (i, j, c) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
            if i == 0 || j == 0 || i == j {
                return Err(ColoringError::EdgeListParse {
                    line: idx + 1,
                    reason: format!("({i},{j}) is not an edge"),
                });
            }
            n = n.max(i).max(j);
            r = r.max(c + 1);
            triples.push((i.min(j), i.max(j), c as u32));
        }
        let mut assign = vec![u32::MAX; edge_count(n)];
        for (i, j, c) in triples {
            let slot = &mut assign[edge_index(n, i, j)];
            if *slot != u32::MAX {
                return Err(ColoringError::EdgeListDuplicate { i, j });
            }
            *slot = c;
        }
        for i in 1..n {
            for j in i + 1..=n {
                if assign[edge_index(n, i, j)] == u32::MAX {
                    return Err(ColoringError::EdgeListIncomplete { i, j });
                }
            }
        }
        Coloring::from_assign(n, r, assign)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    n: usize,
    r: usize,
    assign: Vec<u32>,
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ColoringJson {
            n: self.n,
            r: self.r,
            assign: self.assign.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ColoringJson::deserialize(deserializer)?;
        Coloring::from_assign(raw.n, raw.r, raw.assign).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Explicit constructions
// ---------------------------------------------------------------------------

/// The path-based colouring handling every spanning complete bipartite
/// graph: each edge of a Hamiltonian path (odd `n`, giving `n` colours) or a
/// path on the first `n - 1` vertices (even `n`, giving `n - 1` colours)
/// gets its own colour, and all remaining edges share the final colour.
///
/// Every spanning complete bipartite graph either splits some path edge
/// across its parts (a colour of multiplicity one) or, for even `n`, is a
/// monochromatic star with an odd number of edges.
pub fn hamiltonian_path_coloring(n: usize) -> Result<Coloring, ColoringError> {
    if n < 3 {
        return Err(ColoringError::TooFewVertices { n, min: 3 });
    }
    let path_top = if n % 2 == 1 { n } else { n - 1 };
    let r = if n % 2 == 1 { n } else { n - 1 };
    let remainder = (r - 1) as u32;
    let mut coloring = Coloring::from_assign(n, r, vec![remainder; edge_count(n)])?;
    for i in 1..path_top {
        coloring.set_color(i, i + 1, (i - 1) as u32);
    }
    Ok(coloring)
}

/// A colouring built from a weight-avoiding code, together with the
/// coordinate permutation that brings the dual basis to systematic form.
#[derive(Clone, Debug)]
pub struct CodeColoring {
    pub coloring: Coloring,
    /// `sigma[i - 1]` is the position coordinate `i` takes when the pivots
    /// of the dual basis are moved to the front (non-pivots keep their
    /// relative order).
    pub sigma: Vec<usize>,
}

/// Builds an `(n - k)`-colouring of the complete graph from a length-`n`,
/// dimension-`k` code avoiding every weight in `task.weights()`; every
/// `K_{t,n-t}` with `t` in the normalized set then has an odd colour class.
///
/// Adjoins the all-one vector, dualizes, and turns each basis vector of the
/// even dual into a star centred at its pivot coordinate; the last colour
/// collects the remaining edges.
pub fn coloring_from_code(a: &LinearCode, task: &TaskSpec) -> Result<CodeColoring, ColoringError> {
    let n = task.n();
    if a.length() != n {
        return Err(ColoringError::LengthMismatch {
            code_len: a.length(),
            n,
        });
    }
    if a.dim() + 1 > n {
        return Err(ColoringError::DimensionTooLarge {
            dim: a.dim(),
            max: n - 1,
        });
    }
    // Contract check: no codeword weight may be forbidden. Enumerate when
    // feasible; otherwise check the all-one vector (needed structurally)
    // and the basis rows.
    if a.dim() <= ENUMERATION_CAP {
        for w in a.codewords().expect("dimension within cap") {
            if task.weights().is_forbidden(w.weight()) {
                return Err(ColoringError::ForbiddenCodeword {
                    word: w.to_bitstring(),
                });
            }
        }
    } else {
        if a.contains(&Gf2Vec::ones(n)) {
            return Err(ColoringError::ForbiddenCodeword {
                word: Gf2Vec::ones(n).to_bitstring(),
            });
        }
        for row in a.basis().rows() {
            if task.weights().is_forbidden(row.weight()) {
                return Err(ColoringError::ForbiddenCodeword {
                    word: row.to_bitstring(),
                });
            }
        }
    }
    let k = a.dim();
    let mut rows: Vec<Gf2Vec> = a.basis().rows().to_vec();
    rows.push(Gf2Vec::ones(n));
    let extended = LinearCode::from_span(
        &Gf2Matrix::from_rows(n, rows).expect("rows share the code length"),
    );
    debug_assert_eq!(extended.dim(), k + 1, "the all-one vector is new");
    let dual = extended.dual();
    debug_assert_eq!(dual.dim(), n - k - 1);
    debug_assert!(dual.is_even(), "dual of a code containing the all-one vector");

    let num_stars = n - k - 1;
    let r = n - k;
    let remainder = (r - 1) as u32;
    let mut coloring = Coloring::from_assign(n, r, vec![remainder; edge_count(n)])?;
    let mut pivots = Vec::with_capacity(num_stars);
    for (idx, row) in dual.basis().rows().iter().enumerate() {
        let centre = row.first_support().expect("RREF rows are nonzero");
        pivots.push(centre);
        debug_assert_eq!(row.weight() % 2, 0, "star vertex sets are even");
        for v in row.support() {
            if v != centre {
                coloring.set_color(centre, v, idx as u32);
            }
        }
    }
    let mut sigma = vec![0usize; n];
    for (idx, &p) in pivots.iter().enumerate() {
        sigma[p - 1] = idx + 1;
    }
    let mut next = num_stars + 1;
    for i in 1..=n {
        if sigma[i - 1] == 0 {
            sigma[i - 1] = next;
            next += 1;
        }
    }
    Ok(CodeColoring { coloring, sigma })
}

/// Per-colour odd-degree vertex sets of a colouring.
#[derive(Clone, Debug)]
pub struct OddDegreeProfile {
    /// `sets[c]` is the characteristic vector of the vertices with odd
    /// degree in colour `c`; each has even weight by the handshake count.
    pub sets: Vec<Gf2Vec>,
}

/// Codes extracted from a colouring.
#[derive(Clone, Debug)]
pub struct ColoringCodes {
    pub profile: OddDegreeProfile,
    /// Span of the odd-degree vectors of all colours but the last.
    pub parity_span: LinearCode,
    /// A complement of the all-one vector inside the dual of `parity_span`;
    /// it avoids the weights of any family the colouring handles, and has
    /// dimension at least `n - r`.
    pub avoiding: LinearCode,
}

/// Extracts the odd-degree profile and the derived codes from a colouring
/// with at least two colours.
pub fn code_from_coloring(col: &Coloring) -> Result<ColoringCodes, ColoringError> {
    let n = col.num_vertices();
    let r = col.num_colors();
    if r < 2 {
        return Err(ColoringError::TooFewColors { r, min: 2 });
    }
    let mut sets = vec![Gf2Vec::zeros(n); r];
    for v in 1..=n {
        let mask = col.degree_parity_mask(v);
        for (c, set) in sets.iter_mut().enumerate() {
            if mask >> c & 1 == 1 {
                set.set(v, true);
            }
        }
    }
    for set in &sets {
        debug_assert_eq!(set.weight() % 2, 0, "odd-degree sets have even size");
    }
    let parity_span = LinearCode::from_span(
        &Gf2Matrix::from_rows(n, sets[..r - 1].to_vec()).expect("rows of length n"),
    );
    let dual = parity_span.dual();
    let ones = Gf2Vec::ones(n);
    debug_assert!(dual.contains(&ones), "the parity span is an even code");
    // Reduce the all-one vector against the RREF basis, remembering which
    // rows take part; swapping the last of them for the all-one vector
    // yields a basis of the dual containing it, and the span of the rest is
    // the complement.
    let mut used = Vec::new();
    let mut rem = ones.clone();
    for (i, row) in dual.basis().rows().iter().enumerate() {
        let pivot = row.first_support().expect("RREF rows are nonzero");
        if rem.get(pivot) {
            rem.xor_assign(row);
            used.push(i);
        }
    }
    debug_assert!(rem.is_zero());
    let drop = *used.last().expect("the all-one vector is nonzero");
    let keep: Vec<Gf2Vec> = dual
        .basis()
        .rows()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != drop)
        .map(|(_, row)| row.clone())
        .collect();
    let avoiding =
        LinearCode::from_span(&Gf2Matrix::from_rows(n, keep).expect("rows of length n"));
    debug_assert_eq!(avoiding.dim(), dual.dim() - 1);
    debug_assert!(avoiding.dim() + r >= n);
    debug_assert!(!avoiding.contains(&ones));
    Ok(ColoringCodes {
        profile: OddDegreeProfile { sets },
        parity_span,
        avoiding,
    })
}

/// The `(n - 1)`-colouring of an even complete graph in which every
/// spanning complete bipartite graph has a colour of multiplicity one:
/// single edges `{i, n}` for `2 <= i <= n/2`, paired edges `{1, i}` and
/// `{1, n-i+1}` for `n/2 < i < n`, everything else in colour 0.
pub fn unique_spanning_coloring(n: usize) -> Result<Coloring, ColoringError> {
    if !n.is_multiple_of(2) {
        return Err(ColoringError::OddVertexCount { n });
    }
    if n < 4 {
        return Err(ColoringError::TooFewVertices { n, min: 4 });
    }
    let r = n - 1;
    let mut coloring = Coloring::from_assign(n, r, vec![0; edge_count(n)])?;
    for i in 2..=n / 2 {
        coloring.set_color(i, n, (i - 1) as u32);
    }
    for i in n / 2 + 1..=n - 1 {
        coloring.set_color(1, i, (i - 1) as u32);
        coloring.set_color(1, n - i + 1, (i - 1) as u32);
    }
    Ok(coloring)
}

/// The `(n - 1)`-colouring in which every clique on at least two vertices
/// has a colour of multiplicity one: colour `i - 1` holds all edges whose
/// smaller endpoint is `i`. In any clique the colour of its second-largest
/// vertex appears exactly once.
pub fn clique_unique_coloring(n: usize) -> Result<Coloring, ColoringError> {
    if n < 2 {
        return Err(ColoringError::TooFewVertices { n, min: 2 });
    }
    let r = n - 1;
    let mut coloring = Coloring::from_assign(n, r, vec![0; edge_count(n)])?;
    for i in 1..n {
        for j in i + 1..=n {
            coloring.set_color(i, j, (i - 1) as u32);
        }
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_task;

    #[test]
    fn edge_index_is_canonical() {
        let n = 6;
        let mut expected = 0;
        for i in 1..n {
            for j in i + 1..=n {
                assert_eq!(edge_index(n, i, j), expected);
                expected += 1;
            }
        }
        assert_eq!(expected, edge_count(n));
    }

    #[test]
    fn class_sizes_sum_to_edge_count() {
        let col = hamiltonian_path_coloring(8).unwrap();
        assert_eq!(col.class_sizes().iter().sum::<usize>(), edge_count(8));
    }

    #[test]
    fn hamiltonian_colour_counts() {
        assert_eq!(hamiltonian_path_coloring(5).unwrap().num_colors(), 5);
        assert_eq!(hamiltonian_path_coloring(6).unwrap().num_colors(), 5);
        assert_eq!(hamiltonian_path_coloring(3).unwrap().num_colors(), 3);
        assert!(hamiltonian_path_coloring(2).is_err());
    }

    #[test]
    fn hamiltonian_triangle_is_rainbow() {
        let col = hamiltonian_path_coloring(3).unwrap();
        assert_eq!(col.class_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn hamiltonian_even_leaves_last_vertex_off_path() {
        let col = hamiltonian_path_coloring(6).unwrap();
        // All edges at vertex 6 share the remainder colour.
        for u in 1..=5 {
            assert_eq!(col.color_of(u, 6), 4);
        }
    }

    #[test]
    fn coloring_from_zero_code_gives_stars() {
        let task = build_task(4, []).unwrap();
        let out = coloring_from_code(&LinearCode::zero(4), &task).unwrap();
        assert_eq!(out.coloring.num_colors(), 4);
        // Three stars centred at 1, 2, 3 plus a remainder class.
        assert_eq!(out.coloring.color_of(1, 4), 0);
        assert_eq!(out.coloring.color_of(2, 4), 1);
        assert_eq!(out.coloring.color_of(3, 4), 2);
        assert_eq!(out.coloring.color_of(1, 2), 3);
        assert_eq!(out.sigma, vec![1, 2, 3, 4]);
    }

    #[test]
    fn coloring_from_code_star_classes_are_disjoint_stars() {
        let task = build_task(5, [1]).unwrap();
        let a = LinearCode::from_span(
            &Gf2Matrix::from_rows(
                5,
                vec![
                    Gf2Vec::from_bitstring("11000").unwrap(),
                    Gf2Vec::from_bitstring("01100").unwrap(),
                ],
            )
            .unwrap(),
        );
        let out = coloring_from_code(&a, &task).unwrap();
        let col = &out.coloring;
        assert_eq!(col.num_colors(), 3);
        // Each star class has an even odd-degree set matching its size.
        for c in 0..col.num_colors() - 1 {
            let mut degs = [0usize; 6];
            for (i, j, color) in col.edges() {
                if color == c as u32 {
                    degs[i] += 1;
                    degs[j] += 1;
                }
            }
            let odd: Vec<usize> = (1..=5).filter(|&v| degs[v] % 2 == 1).collect();
            assert_eq!(odd.len() % 2, 0);
            assert!(!odd.is_empty());
        }
    }

    #[test]
    fn coloring_from_code_rejects_forbidden_codeword() {
        let task = build_task(4, [2]).unwrap();
        let bad = LinearCode::from_span(
            &Gf2Matrix::from_rows(4, vec![Gf2Vec::from_bitstring("1100").unwrap()]).unwrap(),
        );
        match coloring_from_code(&bad, &task) {
            Err(ColoringError::ForbiddenCodeword { word }) => assert_eq!(word, "1100"),
            other => panic!("expected forbidden-codeword error, got {other:?}"),
        }
    }

    #[test]
    fn code_from_coloring_requires_two_colors() {
        let mono = Coloring::monochromatic(4, 1).unwrap();
        assert!(matches!(
            code_from_coloring(&mono),
            Err(ColoringError::TooFewColors { .. })
        ));
    }

    #[test]
    fn code_from_coloring_on_path_coloring() {
        let col = hamiltonian_path_coloring(5).unwrap();
        let out = code_from_coloring(&col).unwrap();
        for set in &out.profile.sets {
            assert_eq!(set.weight() % 2, 0);
        }
        // Path edge (i, i+1) colour classes have odd-degree set {i, i+1}.
        assert_eq!(out.profile.sets[0].support(), vec![1, 2]);
        assert_eq!(out.profile.sets[3].support(), vec![4, 5]);
        assert_eq!(out.avoiding.dim(), 0);
        assert!(!out.avoiding.contains(&Gf2Vec::ones(5)) || out.avoiding.dim() == 0);
    }

    #[test]
    fn unique_spanning_shape() {
        let col = unique_spanning_coloring(6).unwrap();
        assert_eq!(col.num_colors(), 5);
        assert_eq!(col.color_of(2, 6), 1);
        assert_eq!(col.color_of(3, 6), 2);
        assert_eq!(col.color_of(1, 4), 3);
        assert_eq!(col.color_of(1, 3), 3);
        assert_eq!(col.color_of(1, 5), 4);
        assert_eq!(col.color_of(1, 2), 4);
        assert!(unique_spanning_coloring(5).is_err());
        assert!(unique_spanning_coloring(2).is_err());
    }

    #[test]
    fn clique_unique_shape() {
        let col = clique_unique_coloring(5).unwrap();
        assert_eq!(col.num_colors(), 4);
        for j in 2..=5 {
            assert_eq!(col.color_of(1, j), 0);
        }
        assert_eq!(col.color_of(4, 5), 3);
        let single = clique_unique_coloring(2).unwrap();
        assert_eq!(single.num_colors(), 1);
    }

    #[test]
    fn coloring_json_round_trip() {
        let col = hamiltonian_path_coloring(5).unwrap();
        let json = serde_json::to_string(&col).unwrap();
        assert!(json.starts_with(r#"{"n":5,"r":5,"assign":["#));
        let back: Coloring = serde_json::from_str(&json).unwrap();
        assert_eq!(back, col);
    }

    #[test]
    fn coloring_json_rejects_bad_color() {
        let bad = r#"{"n":3,"r":2,"assign":[0,1,2]}"#;
        assert!(serde_json::from_str::<Coloring>(bad).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let col = unique_spanning_coloring(8).unwrap();
        let text = col.to_edge_list();
        let back = Coloring::from_edge_list(&text).unwrap();
        assert_eq!(back, col);
    }

    #[test]
    fn edge_list_detects_missing_and_duplicate_edges() {
        let col = hamiltonian_path_coloring(4).unwrap();
        let text = col.to_edge_list();
        let mut lines: Vec<&str> = text.lines().collect();
        let removed = lines.pop().unwrap();
        let missing = lines.join("\n");
        assert!(matches!(
            Coloring::from_edge_list(&missing),
            Err(ColoringError::EdgeListIncomplete { .. })
        ));
        lines.push(removed);
        lines.push(removed);
        let duplicated = lines.join("\n");
        assert!(matches!(
            Coloring::from_edge_list(&duplicated),
            Err(ColoringError::EdgeListDuplicate { .. })
        ));
    }
}
