//! Pyramidal form of non-split cyclically reduced pilings, and the cyclic
//! comparison that decides conjugacy of such pilings.
//!
//! The pivot of a nonempty piling is the lowest signed bead of its first
//! supported column. The decomposition splits off everything that does not
//! lie above the pivot; repeatedly rotating that part to the top drives the
//! piling to a fixed point (a pyramid) while only conjugating the element.
//! The pyramidal normal forms of conjugate elements usually agree up to a
//! literal rotation of the words. They need not always: letters that
//! commute can straddle the cyclic seam, so the comparison falls back to
//! an exact search for a single cyclic transposition between the pilings.

use crate::graphs::DefiningGraph;
use crate::pilings::Piling;
use crate::words::{letter_rank, GroupSpec, Letter, Word};
use crate::Error;

/// Outcome of the pyramidal iteration:
/// `input = conjugator · piling · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidalResult {
    pub piling: Piling,
    pub conjugator: Word,
}

/// Splits a nonempty piling `p` into `(p0, p1)` with `p = p0 · p1`, where
/// `p1` is the pivot together with everything above it and `p0` is the
/// rest. `p0` is empty exactly when `p` is already pyramidal.
pub fn pyramidal_decomp(p: &Piling, spec: &GroupSpec) -> Result<(Piling, Piling), Error> {
    let graph = DefiningGraph::from_spec(spec);
    let (extracted, remainder) = p.split_below_pivot(&graph)?;
    Ok((
        Piling::from_letters_unchecked(&extracted, &graph),
        remainder,
    ))
}

/// Iterates the decomposition on a non-split cyclically reduced piling,
/// moving each `p0` to the top, until `p0` comes out empty. The moves are
/// cyclic permutations, so the accumulated conjugator `u` satisfies
/// `input = u · result · u⁻¹`.
///
/// Every round pushes at least one more piece above the pivot, so a
/// non-split input finishes within `signed_bead_count` rounds. Split input
/// would cycle forever and is reported as [`Error::NotNonSplit`] instead.
pub fn pyramidal(p: &Piling, spec: &GroupSpec) -> Result<PyramidalResult, Error> {
    let graph = DefiningGraph::from_spec(spec);
    pyramidal_graph(p, &graph)
}

pub(crate) fn pyramidal_graph(
    p: &Piling,
    graph: &DefiningGraph,
) -> Result<PyramidalResult, Error> {
    let round_cap = p.signed_bead_count();
    let mut current = p.clone();
    let mut conjugator = Vec::new();
    let mut rounds = 0usize;
    loop {
        let (moved, remainder) = current.split_below_pivot(graph)?;
        if moved.is_empty() {
            return Ok(PyramidalResult {
                piling: current,
                conjugator: Word::new(conjugator),
            });
        }
        rounds += 1;
        if rounds > round_cap {
            return Err(Error::NotNonSplit);
        }
        let mut rotated = remainder.normal_form_graph(graph)?.letters().to_vec();
        rotated.extend_from_slice(&moved);
        conjugator.extend_from_slice(&moved);
        current = Piling::from_letters_unchecked(&rotated, graph);
    }
}

/// Whether `w` is a cyclic permutation of `v`. On success returns the
/// shortest prefix `y` of `v` with `w = rotate(v, |y|)`; it satisfies
/// `w = y⁻¹ · v · y` in the group.
pub fn is_cyclic_permutation(w: &Word, v: &Word) -> Option<Word> {
    if w.len() != v.len() {
        return None;
    }
    if w.is_empty() {
        return Some(Word::empty());
    }
    let mut doubled = v.letters().to_vec();
    doubled.extend_from_slice(v.letters());
    let k = find_first(&doubled, w.letters())?;
    Some(Word::new(v.letters()[..k].to_vec()))
}

/// Rotation witness through the least cyclic rotation: returns `y` with
/// `a = y⁻¹ · b · y` when `a` and `b` are cyclic permutations of each
/// other. Both sides are rotated to the shortlex-least rotation, so
/// swapping the arguments yields exactly the inverse witness.
pub(crate) fn canonical_cyclic_witness(a: &Word, b: &Word) -> Option<Word> {
    if a.len() != b.len() {
        return None;
    }
    if a.is_empty() {
        return Some(Word::empty());
    }
    let ka = least_rotation_start(a.letters());
    let kb = least_rotation_start(b.letters());
    if a.rotate(ka) != b.rotate(kb) {
        return None;
    }
    let to_a = Word::new(a.letters()[..ka].to_vec());
    let to_b = Word::new(b.letters()[..kb].to_vec());
    Some(to_b.concat(&to_a.inverse()))
}

/// Booth's algorithm: the smallest index starting the lexicographically
/// least rotation, under the letter order.
pub(crate) fn least_rotation_start(letters: &[Letter]) -> usize {
    let n = letters.len();
    if n == 0 {
        return 0;
    }
    let rank: Vec<u64> = letters.iter().map(|&k| letter_rank(k)).collect();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = rank[(i + k) % n];
        let b = rank[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Conjugating word between the normal forms of two non-split cyclically
/// reduced pilings, or `None` when the elements are not conjugate. Returns
/// `y` with `nf(p) = y⁻¹ · nf(q) · y`.
///
/// Rotating the words to their least cyclic rotation settles most cases.
/// When the words are not literal rotations of each other the elements can
/// still be conjugate — commuting letters may straddle the cyclic seam —
/// so the remaining cases fall through to the exact transposition search.
/// The pair is always searched in one canonical orientation, which keeps
/// the witnesses of swapped calls mutually inverse.
pub(crate) fn cyclic_conjugacy_witness(
    p: &Piling,
    q: &Piling,
    graph: &DefiningGraph,
) -> Result<Option<Word>, Error> {
    let a = p.normal_form_graph(graph)?;
    let b = q.normal_form_graph(graph)?;
    if let Some(y) = canonical_cyclic_witness(&a, &b) {
        return Ok(Some(y));
    }
    if a.len() != b.len() {
        return Ok(None);
    }

    // Proper powers reduce to their primitive roots: the root multiplicity
    // is a conjugacy invariant (roots are unique here), and a word
    // conjugating the roots conjugates the powers.
    let (root_p, mult_p) = p.primitive_root(graph);
    let (root_q, mult_q) = q.primitive_root(graph);
    if mult_p != mult_q {
        return Ok(None);
    }
    if mult_p > 1 {
        return cyclic_conjugacy_witness(&root_p, &root_q, graph);
    }

    let y = if crate::words::shortlex_less(&a, &b) {
        transposition_witness(p, q, graph)
    } else {
        transposition_witness(q, p, graph).map(|u| u.inverse())
    };
    Ok(y)
}

/// Searches for `u` with `b = u·r` and `a = r·u` as group elements, so
/// `a = u⁻¹ · b · u`. Both inputs must be cyclically reduced.
///
/// Such a `u` rotates every column of `b` downwards by the number of beads
/// `u` leaves in it, which is `t_g + Σ_{h ~ g} t_h` in the per-generator
/// letter counts `t` of `u`. The search therefore matches each column of
/// `a` against the cyclic rotations of the corresponding column of `b`,
/// solves the resulting system for `t`, and confirms a solution by
/// extracting `u` from the bottom of `b`.
pub(crate) fn transposition_witness(
    a: &Piling,
    b: &Piling,
    graph: &DefiningGraph,
) -> Option<Word> {
    let n = graph.n_vertices() as usize;
    let a_cols = a.columns();
    let b_cols = b.columns();
    if a_cols.len() != n || b_cols.len() != n {
        return None;
    }

    let mut occupancy = vec![0usize; n + 1];
    let mut allowed = vec![None; n + 1];
    for g in 1..=n {
        let (ac, bc) = (&a_cols[g - 1], &b_cols[g - 1]);
        if ac.len() != bc.len() {
            return None;
        }
        occupancy[g] = bc.iter().filter(|&&bead| bead != 0).count();
        if ac.iter().filter(|&&bead| bead != 0).count() != occupancy[g] {
            return None;
        }
        if bc.is_empty() {
            continue;
        }
        let matches = rotation_match_offsets(ac, bc);
        if matches.is_empty() {
            return None;
        }
        allowed[g] = Some(matches);
    }

    let solver = TranspositionSolver {
        graph,
        occupancy,
        allowed,
        b,
    };
    let mut letter_counts: Vec<Option<usize>> = solver
        .occupancy
        .iter()
        .map(|&occ| (occ == 0).then_some(0))
        .collect();
    letter_counts[0] = Some(0);
    solver.search(&mut letter_counts)
}

struct TranspositionSolver<'a> {
    graph: &'a DefiningGraph,
    occupancy: Vec<usize>,
    /// Valid downward rotation offsets per column; `None` is unconstrained.
    allowed: Vec<Option<Vec<usize>>>,
    b: &'a Piling,
}

impl TranspositionSolver<'_> {
    fn column_sum(&self, counts: &[Option<usize>], g: usize) -> (usize, usize) {
        let mut sum = 0;
        let mut unassigned = 0;
        let mut tally = |value: Option<usize>| match value {
            Some(v) => sum += v,
            None => unassigned += 1,
        };
        tally(counts[g]);
        for &h in self.graph.neighbors(g as u32) {
            tally(counts[h as usize]);
        }
        (sum, unassigned)
    }

    fn sum_allowed(&self, g: usize, sum: usize) -> bool {
        match &self.allowed[g] {
            None => true,
            Some(offsets) => {
                let len = self.b.columns()[g - 1].len();
                offsets.binary_search(&(sum % len)).is_ok()
            }
        }
    }

    /// Depth-first search over letter counts with unit propagation:
    /// a constrained column whose neighbourhood has one free generator
    /// pins that generator when only one count remains feasible.
    fn search(&self, counts: &mut Vec<Option<usize>>) -> Option<Word> {
        let n = self.graph.n_vertices() as usize;
        let mut pinned = Vec::new();
        loop {
            let mut progress = false;
            for g in 1..=n {
                if self.allowed[g].is_none() {
                    continue;
                }
                let (sum, unassigned) = self.column_sum(counts, g);
                if unassigned == 0 {
                    if !self.sum_allowed(g, sum) {
                        self.unpin(counts, &pinned);
                        return None;
                    }
                } else if unassigned == 1 {
                    let free = self.free_neighbor(counts, g);
                    let candidates = self.candidates(g, sum, self.occupancy[free]);
                    match candidates.len() {
                        0 => {
                            self.unpin(counts, &pinned);
                            return None;
                        }
                        1 => {
                            counts[free] = Some(candidates[0]);
                            pinned.push(free);
                            progress = true;
                        }
                        _ => {}
                    }
                }
            }
            if !progress {
                break;
            }
        }

        match (1..=n).find(|&g| counts[g].is_none()) {
            None => {
                let witness = self.validate(counts);
                if witness.is_none() {
                    self.unpin(counts, &pinned);
                }
                witness
            }
            Some(fallback) => {
                // Branch over the narrowest constraint with a single free
                // generator; over the raw range only when none exists.
                let mut branch: Option<(usize, Vec<usize>)> = None;
                for g in 1..=n {
                    if self.allowed[g].is_none() {
                        continue;
                    }
                    let (sum, unassigned) = self.column_sum(counts, g);
                    if unassigned != 1 {
                        continue;
                    }
                    let free = self.free_neighbor(counts, g);
                    let candidates = self.candidates(g, sum, self.occupancy[free]);
                    if branch
                        .as_ref()
                        .is_none_or(|(_, best)| candidates.len() < best.len())
                    {
                        branch = Some((free, candidates));
                    }
                }
                let (var, values) = branch
                    .unwrap_or_else(|| (fallback, (0..=self.occupancy[fallback]).collect()));
                for value in values {
                    counts[var] = Some(value);
                    if let Some(witness) = self.search(counts) {
                        return Some(witness);
                    }
                }
                counts[var] = None;
                self.unpin(counts, &pinned);
                None
            }
        }
    }

    fn unpin(&self, counts: &mut [Option<usize>], pinned: &[usize]) {
        for &g in pinned {
            counts[g] = None;
        }
    }

    fn free_neighbor(&self, counts: &[Option<usize>], g: usize) -> usize {
        if counts[g].is_none() {
            return g;
        }
        self.graph
            .neighbors(g as u32)
            .iter()
            .map(|&h| h as usize)
            .find(|&h| counts[h].is_none())
            .expect("exactly one unassigned neighbour")
    }

    /// Feasible counts for the single free generator of column `g`'s
    /// constraint, given the partial sum of the assigned ones.
    fn candidates(&self, g: usize, partial_sum: usize, cap: usize) -> Vec<usize> {
        let offsets = self.allowed[g].as_ref().expect("constrained column");
        let len = self.b.columns()[g - 1].len();
        let mut out = Vec::new();
        for &offset in offsets {
            for target in [offset, offset + len] {
                if target >= partial_sum && target - partial_sum <= cap {
                    out.push(target - partial_sum);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A count assignment is real only if the first `t_g` letters of each
    /// generator form a removable prefix of `b`.
    fn validate(&self, counts: &[Option<usize>]) -> Option<Word> {
        let mut budget: Vec<usize> = counts.iter().map(|c| c.unwrap_or(0)).collect();
        self.b
            .extract_with_budget(self.graph, &mut budget)
            .map(Word::new)
    }
}

/// Offsets `s` with `rotate_left(text, s) == pattern`, ascending.
fn rotation_match_offsets(pattern: &[i8], text: &[i8]) -> Vec<usize> {
    let len = text.len();
    debug_assert_eq!(pattern.len(), len);
    let mut doubled = text.to_vec();
    doubled.extend_from_slice(&text[..len - 1]);
    kmp_matches(&doubled, pattern, usize::MAX)
}

/// First occurrence of `needle` in `haystack` (KMP).
fn find_first(haystack: &[Letter], needle: &[Letter]) -> Option<usize> {
    kmp_matches(haystack, needle, 1).first().copied()
}

/// Start indices of occurrences of `needle` in `haystack`, at most
/// `max_matches` of them, in one KMP pass.
fn kmp_matches<T: PartialEq>(haystack: &[T], needle: &[T], max_matches: usize) -> Vec<usize> {
    if needle.is_empty() || max_matches == 0 {
        return if max_matches == 0 { Vec::new() } else { vec![0] };
    }
    let mut failure = vec![0usize; needle.len()];
    let mut k = 0;
    for i in 1..needle.len() {
        while k > 0 && needle[i] != needle[k] {
            k = failure[k - 1];
        }
        if needle[i] == needle[k] {
            k += 1;
        }
        failure[i] = k;
    }
    let mut out = Vec::new();
    let mut k = 0;
    for (i, c) in haystack.iter().enumerate() {
        while k > 0 && *c != needle[k] {
            k = failure[k - 1];
        }
        if *c == needle[k] {
            k += 1;
        }
        if k == needle.len() {
            out.push(i + 1 - k);
            if out.len() == max_matches {
                return out;
            }
            k = failure[k - 1];
        }
    }
    out
}
