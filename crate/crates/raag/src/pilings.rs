//! The piling representation of group elements.
//!
//! A piling has one column of beads per generator, read bottom to top.
//! Pushing a letter `k` deposits a signed bead (`+1` or `-1`) in column
//! `|k|` and a `0` bead in the column of every generator that does not
//! commute with `|k|`; if the letter cancels against the current top of the
//! piling, those beads are removed instead. Words representing the same
//! group element always build the same piling, so pilings are canonical
//! forms and support a shortlex normal-form readout.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::graphs::DefiningGraph;
use crate::words::{GroupSpec, Letter, Word};
use crate::Error;

/// Canonical stack-of-beads form of a group element. Beads are `+1`, `0`
/// or `-1`; there is always exactly one column per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Piling {
    columns: Vec<Vec<i8>>,
}

/// Outcome of cyclic reduction: `original = conjugator · reduced · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReduction {
    pub reduced: Piling,
    pub conjugator: Word,
}

impl Piling {
    /// The piling of the identity: one empty column per generator.
    pub fn empty(spec: &GroupSpec) -> Self {
        Piling {
            columns: vec![Vec::new(); spec.n_generators() as usize],
        }
    }

    /// Wraps raw columns, checking every bead is `-1`, `0` or `+1`.
    pub fn from_columns(columns: Vec<Vec<i8>>) -> Result<Self, Error> {
        for column in &columns {
            for &bead in column {
                if !(-1..=1).contains(&bead) {
                    return Err(Error::PilingSyntax(format!("bad bead value {bead}")));
                }
            }
        }
        Ok(Piling { columns })
    }

    pub fn columns(&self) -> &[Vec<i8>] {
        &self.columns
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Number of `±1` beads; equals the geodesic length of the element.
    pub fn signed_bead_count(&self) -> usize {
        self.columns
            .iter()
            .map(|c| c.iter().filter(|&&b| b != 0).count())
            .sum()
    }

    /// Pushes one letter onto the top of the piling, cancelling when the
    /// letter's inverse is top-exposed. The letter must be nonzero with
    /// magnitude at most the column count; validate words first.
    pub fn push_letter(&mut self, k: Letter, graph: &DefiningGraph) {
        let g = k.unsigned_abs() as usize;
        debug_assert!(g >= 1 && g <= self.columns.len(), "letter out of range");
        let sign: i8 = if k > 0 { 1 } else { -1 };
        let neighbors = graph.neighbors(g as u32);
        let cancels = self.columns[g - 1].last() == Some(&-sign)
            && neighbors
                .iter()
                .all(|&j| self.columns[j as usize - 1].last() == Some(&0));
        if cancels {
            self.columns[g - 1].pop();
            for &j in neighbors {
                self.columns[j as usize - 1].pop();
            }
        } else {
            self.columns[g - 1].push(sign);
            for &j in neighbors {
                self.columns[j as usize - 1].push(0);
            }
        }
    }

    /// Builds the piling of a word by pushing its letters left to right.
    /// The input need not be reduced.
    pub fn from_word(w: &Word, spec: &GroupSpec) -> Result<Self, Error> {
        spec.validate_word(w)?;
        let graph = DefiningGraph::from_spec(spec);
        Ok(Self::from_letters_unchecked(w.letters(), &graph))
    }

    /// As [`Piling::from_word`] but without validation; letters must be in
    /// range for the graph.
    pub(crate) fn from_letters_unchecked(letters: &[Letter], graph: &DefiningGraph) -> Self {
        let mut piling = Piling {
            columns: vec![Vec::new(); graph.n_vertices() as usize],
        };
        for &k in letters {
            piling.push_letter(k, graph);
        }
        piling
    }

    /// Generators whose column contains a signed bead.
    pub fn support(&self) -> BTreeSet<u32> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().any(|&b| b != 0))
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// The shortlex-least word representing this piling, obtained by
    /// repeatedly removing the bottom-exposed letter of minimal rank.
    pub fn normal_form(&self, spec: &GroupSpec) -> Result<Word, Error> {
        self.normal_form_graph(&DefiningGraph::from_spec(spec))
    }

    pub(crate) fn normal_form_graph(&self, graph: &DefiningGraph) -> Result<Word, Error> {
        let mut window = Window::new(self);
        let mut out = Vec::with_capacity(self.signed_bead_count());
        while let Some(k) = window.pop_min_exposed(graph, None) {
            out.push(k);
        }
        if window.is_drained() {
            Ok(Word::new(out))
        } else {
            Err(Error::MalformedPiling)
        }
    }

    /// Whether no letter is bottom-exposed with its inverse top-exposed.
    pub fn is_cyclically_reduced(&self, spec: &GroupSpec) -> bool {
        let graph = DefiningGraph::from_spec(spec);
        Window::new(self).find_cancelable_pair(&graph).is_none()
    }

    /// Removes matching bottom/top-exposed inverse pairs until none remain.
    /// Each removed letter `k` is appended to the conjugator, so the
    /// original element equals `conjugator · reduced · conjugator⁻¹`.
    pub fn cyclically_reduce(&self, spec: &GroupSpec) -> CyclicReduction {
        self.cyclically_reduce_graph(&DefiningGraph::from_spec(spec))
    }

    pub(crate) fn cyclically_reduce_graph(&self, graph: &DefiningGraph) -> CyclicReduction {
        let mut window = Window::new(self);
        let mut conjugator = Vec::new();
        while let Some(k) = window.find_cancelable_pair(graph) {
            window.pop_pair(k, graph);
            conjugator.push(k);
        }
        CyclicReduction {
            reduced: window.materialize(),
            conjugator: Word::new(conjugator),
        }
    }

    /// Greedily extracts a prefix containing exactly `budget[g]` letters of
    /// each generator `g`, minimal rank first. Returns the extracted word,
    /// or `None` when no such prefix exists.
    pub(crate) fn extract_with_budget(
        &self,
        graph: &DefiningGraph,
        budget: &mut [usize],
    ) -> Option<Vec<Letter>> {
        let mut window = Window::new(self);
        let mut out = Vec::new();
        loop {
            let mut next = None;
            for g in 1..=graph.n_vertices() {
                if budget[g as usize] == 0 {
                    continue;
                }
                if let Some(k) = window.bottom_exposed(graph, g) {
                    next = Some((g, k));
                    break;
                }
            }
            let Some((g, k)) = next else { break };
            budget[g as usize] -= 1;
            window.lo[g as usize - 1] += 1;
            for &j in graph.neighbors(g) {
                window.lo[j as usize - 1] += 1;
            }
            out.push(k);
        }
        budget.iter().all(|&b| b == 0).then_some(out)
    }

    /// Largest `m` with `self = root^m`, together with that root. Returns
    /// `(self, 1)` when the element is not a proper power.
    ///
    /// `self = root^m` forces every column to be the column of the root
    /// repeated `m` times, so `m` divides the repetition count of each
    /// column string; candidate roots are confirmed by extracting one
    /// period's worth of letters from the bottom.
    pub(crate) fn primitive_root(&self, graph: &DefiningGraph) -> (Piling, usize) {
        let mut gcd = 0usize;
        for column in &self.columns {
            if column.is_empty() {
                continue;
            }
            gcd = gcd_usize(gcd, string_repetitions(column));
        }
        if gcd > 1 {
            let mut divisors: Vec<usize> = (2..=gcd).filter(|d| gcd.is_multiple_of(*d)).collect();
            divisors.sort_unstable_by(|a, b| b.cmp(a));
            for m in divisors {
                let mut budget = vec![0usize; self.columns.len() + 1];
                for (i, column) in self.columns.iter().enumerate() {
                    budget[i + 1] = column.iter().filter(|&&b| b != 0).count() / m;
                }
                if let Some(period) = self.extract_with_budget(graph, &mut budget) {
                    return (Self::from_letters_unchecked(&period, graph), m);
                }
            }
        }
        (self.clone(), 1)
    }

    /// Splits off the part of the piling not lying above the pivot, where
    /// the pivot is the lowest signed bead of the first supported column.
    /// Returns the extracted word and the remaining piling; the element
    /// factors as `extracted · remainder`.
    pub(crate) fn split_below_pivot(
        &self,
        graph: &DefiningGraph,
    ) -> Result<(Vec<Letter>, Piling), Error> {
        let pivot = match self.support().into_iter().next() {
            Some(g) => g,
            None => return Err(Error::EmptyPiling),
        };
        let mut window = Window::new(self);
        let mut extracted = Vec::new();
        while let Some(k) = window.pop_min_exposed(graph, Some(pivot)) {
            extracted.push(k);
        }
        Ok((extracted, window.materialize()))
    }
}

/// How many times a string is a repetition of its shortest period:
/// `len / p` when the shortest period `p` divides the length, else 1.
fn string_repetitions(s: &[i8]) -> usize {
    let len = s.len();
    let mut failure = vec![0usize; len];
    let mut k = 0;
    for i in 1..len {
        while k > 0 && s[i] != s[k] {
            k = failure[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        failure[i] = k;
    }
    let period = len - failure[len - 1];
    if len.is_multiple_of(period) {
        len / period
    } else {
        1
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if a == 0 {
        b
    } else {
        gcd_usize(b % a, a)
    }
}

/// A live view of a piling with beads trimmed from both ends of each
/// column. `lo..hi` delimits the remaining beads of each column.
struct Window<'a> {
    columns: &'a [Vec<i8>],
    lo: Vec<usize>,
    hi: Vec<usize>,
}

impl<'a> Window<'a> {
    fn new(p: &'a Piling) -> Self {
        Window {
            columns: &p.columns,
            lo: vec![0; p.columns.len()],
            hi: p.columns.iter().map(|c| c.len()).collect(),
        }
    }

    fn is_drained(&self) -> bool {
        self.lo == self.hi
    }

    fn bottom(&self, col: usize) -> Option<i8> {
        (self.lo[col] < self.hi[col]).then(|| self.columns[col][self.lo[col]])
    }

    fn top(&self, col: usize) -> Option<i8> {
        (self.lo[col] < self.hi[col]).then(|| self.columns[col][self.hi[col] - 1])
    }

    /// The bottom-exposed letter on generator `g`, if any: the bottom bead
    /// of column `g` is signed and every neighbour column rests on a zero.
    fn bottom_exposed(&self, graph: &DefiningGraph, g: u32) -> Option<Letter> {
        let sign = self.bottom(g as usize - 1)?;
        if sign == 0 {
            return None;
        }
        let ok = graph
            .neighbors(g)
            .iter()
            .all(|&j| self.bottom(j as usize - 1) == Some(0));
        ok.then(|| i32::from(sign) * g as i32)
    }

    /// Pops the bottom-exposed letter of minimal rank, skipping the pivot
    /// generator when one is given. Scanning generators in ascending order
    /// visits candidate letters in rank order, so the first hit wins.
    fn pop_min_exposed(&mut self, graph: &DefiningGraph, skip: Option<u32>) -> Option<Letter> {
        for g in 1..=graph.n_vertices() {
            if skip == Some(g) {
                continue;
            }
            if let Some(k) = self.bottom_exposed(graph, g) {
                self.lo[g as usize - 1] += 1;
                for &j in graph.neighbors(g) {
                    self.lo[j as usize - 1] += 1;
                }
                return Some(k);
            }
        }
        None
    }

    /// A letter `k` of minimal rank that is bottom-exposed while `-k` is
    /// top-exposed, if any. Generators are scanned in ascending order, so
    /// the first candidate already has minimal rank.
    fn find_cancelable_pair(&self, graph: &DefiningGraph) -> Option<Letter> {
        for g in 1..=graph.n_vertices() {
            let col = g as usize - 1;
            let (Some(bottom), Some(top)) = (self.bottom(col), self.top(col)) else {
                continue;
            };
            if bottom == 0 || top != -bottom {
                continue;
            }
            let neighbors_ok = graph.neighbors(g).iter().all(|&j| {
                let jc = j as usize - 1;
                self.hi[jc] - self.lo[jc] >= 2
                    && self.bottom(jc) == Some(0)
                    && self.top(jc) == Some(0)
            });
            if neighbors_ok {
                return Some(i32::from(bottom) * g as i32);
            }
        }
        None
    }

    /// Removes a bottom-exposed `k` together with the top-exposed `-k`.
    fn pop_pair(&mut self, k: Letter, graph: &DefiningGraph) {
        let g = k.unsigned_abs();
        self.lo[g as usize - 1] += 1;
        self.hi[g as usize - 1] -= 1;
        for &j in graph.neighbors(g) {
            self.lo[j as usize - 1] += 1;
            self.hi[j as usize - 1] -= 1;
        }
    }

    fn materialize(&self) -> Piling {
        Piling {
            columns: (0..self.columns.len())
                .map(|c| self.columns[c][self.lo[c]..self.hi[c]].to_vec())
                .collect(),
        }
    }
}

impl fmt::Display for Piling {
    /// Nested-bracket bead lists, e.g. `[[1,0],[0,0,-1],[-1,0]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, column) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, bead) in column.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{bead}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Piling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let columns: Vec<Vec<i8>> =
            serde_json::from_str(s).map_err(|e| Error::PilingSyntax(e.to_string()))?;
        Piling::from_columns(columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_gen_spec() -> GroupSpec {
        GroupSpec::new(4, vec![(1, 4), (2, 3), (2, 4)]).unwrap()
    }

    fn piling_of(letters: &[i32], spec: &GroupSpec) -> Piling {
        Piling::from_word(&Word::new(letters.to_vec()), spec).unwrap()
    }

    #[test]
    fn empty_piling_has_one_empty_column_per_generator() {
        assert_eq!(Piling::empty(&GroupSpec::free(3)).to_string(), "[[],[],[]]");
        assert_eq!(Piling::empty(&GroupSpec::free(1)).to_string(), "[[]]");
        assert_eq!(
            Piling::empty(&GroupSpec::free(4)).to_string(),
            "[[],[],[],[]]"
        );
    }

    #[test]
    fn push_deposits_a_signed_bead_and_neighbour_zeros() {
        let spec = GroupSpec::free(2);
        let graph = DefiningGraph::from_spec(&spec);
        let mut p = Piling::empty(&spec);
        p.push_letter(1, &graph);
        assert_eq!(p.to_string(), "[[1],[0]]");
        p.push_letter(-1, &graph);
        assert_eq!(p.to_string(), "[[],[]]");
    }

    #[test]
    fn push_cancels_only_through_commuting_letters() {
        // 1 and 3 commute, so a trailing inverse of 1 cancels through 3.
        let spec = GroupSpec::new(3, vec![(1, 3)]).unwrap();
        let graph = DefiningGraph::from_spec(&spec);
        let mut p = piling_of(&[1, 3], &spec);
        p.push_letter(-1, &graph);
        assert_eq!(p.to_string(), "[[],[0],[1]]");
        assert_eq!(p.normal_form(&spec).unwrap(), Word::new(vec![3]));
    }

    #[test]
    fn word_pilings_match_known_fixtures() {
        assert_eq!(
            piling_of(&[1, 2, 2, -1, 2], &GroupSpec::free(2)).to_string(),
            "[[1,0,0,-1,0],[0,1,1,0,1]]"
        );
        assert_eq!(
            piling_of(&[-2, -2, -4, 3, 2, 4, 1, 2, -1, 2, 2, -4], &four_gen_spec()).to_string(),
            "[[0,0,1,0,-1,0,0],[-1,0,1,0,1,1],[0,1,0,0],[-1,0]]"
        );
        assert_eq!(
            piling_of(&[1, -1], &GroupSpec::free(2)),
            Piling::empty(&GroupSpec::free(2))
        );
    }

    #[test]
    fn from_word_validates_letters() {
        assert_eq!(
            Piling::from_word(&Word::new(vec![1, 5]), &GroupSpec::free(2)),
            Err(Error::InvalidLetter { index: 1, value: 5 })
        );
    }

    #[test]
    fn normal_form_reads_off_the_shortlex_least_word() {
        let spec = GroupSpec::new(3, vec![(1, 3)]).unwrap();
        let p: Piling = "[[1,0],[0,0,-1],[-1,0]]".parse().unwrap();
        assert_eq!(p.normal_form(&spec).unwrap(), Word::new(vec![1, -3, -2]));

        assert_eq!(
            Piling::empty(&spec).normal_form(&spec).unwrap(),
            Word::empty()
        );

        let z2 = GroupSpec::abelian(2);
        let p = piling_of(&[2, 1], &z2);
        assert_eq!(p.normal_form(&z2).unwrap(), Word::new(vec![1, 2]));
    }

    #[test]
    fn normal_form_rejects_malformed_pilings() {
        let spec = GroupSpec::free(2);
        // Two signed beads facing each other with no zeros can never have
        // come from pushing a word.
        let p: Piling = "[[1],[1]]".parse().unwrap();
        assert_eq!(p.normal_form(&spec), Err(Error::MalformedPiling));
        let p: Piling = "[[1],[]]".parse().unwrap();
        assert_eq!(p.normal_form(&spec), Err(Error::MalformedPiling));
    }

    #[test]
    fn support_lists_columns_with_signed_beads() {
        let spec = four_gen_spec();
        let p = piling_of(&[2, 3, -4], &spec);
        assert_eq!(p.support(), BTreeSet::from([2, 3, 4]));
        assert!(Piling::empty(&spec).support().is_empty());
        let p: Piling = "[[0,0],[1],[1],[]]".parse().unwrap();
        assert_eq!(p.support(), BTreeSet::from([2, 3]));
    }

    #[test]
    fn cyclic_reduction_peels_conjugating_letters() {
        let spec = GroupSpec::new(3, vec![(2, 3)]).unwrap();
        let p = piling_of(&[1, 2, 3, -1], &spec);
        let r = p.cyclically_reduce(&spec);
        assert_eq!(r.reduced.normal_form(&spec).unwrap(), Word::new(vec![2, 3]));
        assert_eq!(r.conjugator, Word::new(vec![1]));

        let empty = Piling::empty(&spec);
        let r = empty.cyclically_reduce(&spec);
        assert_eq!(r.reduced, empty);
        assert!(r.conjugator.is_empty());
    }

    #[test]
    fn cyclic_reduction_reports_the_removed_prefix() {
        let spec = GroupSpec::free(2);
        let p = piling_of(&[-2, 1, 2], &spec);
        let r = p.cyclically_reduce(&spec);
        assert_eq!(r.reduced.normal_form(&spec).unwrap(), Word::new(vec![1]));
        assert_eq!(r.conjugator, Word::new(vec![-2]));
        assert!(r.reduced.is_cyclically_reduced(&spec));
        assert!(!p.is_cyclically_reduced(&spec));
    }

    #[test]
    fn primitive_roots_are_extracted_from_powers() {
        let spec = four_gen_spec();
        let graph = DefiningGraph::from_spec(&spec);
        let base = [1, 2, -1, 3];
        let cubed: Vec<i32> = base.iter().cycle().take(12).copied().collect();
        let p = piling_of(&cubed, &spec);
        let (root, multiplicity) = p.primitive_root(&graph);
        assert_eq!(multiplicity, 3);
        assert_eq!(root, piling_of(&base, &spec));

        let primitive = piling_of(&[1, 2, -1, 3, 4], &spec);
        assert_eq!(primitive.primitive_root(&graph), (primitive.clone(), 1));

        let empty = Piling::empty(&spec);
        assert_eq!(empty.primitive_root(&graph), (empty.clone(), 1));

        // Commuting letters square to a power of the product in one column
        // order only; the root search must still find it.
        let z2 = GroupSpec::abelian(2);
        let gz = DefiningGraph::from_spec(&z2);
        let p = piling_of(&[1, 2, 2, 1], &z2);
        let (root, multiplicity) = p.primitive_root(&gz);
        assert_eq!(multiplicity, 2);
        assert_eq!(root, piling_of(&[1, 2], &z2));
    }

    #[test]
    fn piling_text_round_trip() {
        let text = "[[0,0,1,0,-1,0,0],[-1,0,1,0,1,1],[0,1,0,0],[-1,0]]";
        let p: Piling = text.parse().unwrap();
        assert_eq!(p.to_string(), text);
        // Whitespace from pretty-printed fixtures is tolerated.
        let p2: Piling = "[[1, 0], [0, 1]]".parse().unwrap();
        assert_eq!(p2.to_string(), "[[1,0],[0,1]]");
        assert!("[[2]]".parse::<Piling>().is_err());
        assert!("[1,2]".parse::<Piling>().is_err());
    }
}
