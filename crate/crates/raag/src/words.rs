//! Words over the signed generator alphabet, and the group presentation.
//!
//! Generators are numbered `1..=N`. A positive letter `k` stands for the
//! generator `a_k`, a negative letter `-k` for its inverse, and the empty
//! word for the identity. Letters are ordered `1 < -1 < 2 < -2 < ...`;
//! words are compared in shortlex order (length first, then
//! lexicographically under the letter order).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A signed generator index. Zero is never a valid letter.
pub type Letter = i32;

/// A right-angled Artin group presentation: a generator count together with
/// the set of unordered pairs of generators that commute.
///
/// The commuting list is the complement of the defining graph's edge set.
/// The empty list presents the free group, the full list the free abelian
/// group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    n: u32,
    commuting: BTreeSet<(u32, u32)>,
}

impl GroupSpec {
    /// Builds a presentation, normalising each pair to `(min, max)`.
    /// Rejects self-pairs and indices outside `1..=n_generators`.
    pub fn new(
        n_generators: u32,
        commuting_pairs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, Error> {
        let mut commuting = BTreeSet::new();
        for (a, b) in commuting_pairs {
            if a == 0 || b == 0 || a == b || a > n_generators || b > n_generators {
                return Err(Error::InvalidCommutingPair {
                    a: i64::from(a),
                    b: i64::from(b),
                    n: n_generators,
                });
            }
            commuting.insert((a.min(b), a.max(b)));
        }
        Ok(GroupSpec {
            n: n_generators,
            commuting,
        })
    }

    /// The free group on `n` generators: no commuting pairs.
    pub fn free(n: u32) -> Self {
        GroupSpec {
            n,
            commuting: BTreeSet::new(),
        }
    }

    /// The free abelian group on `n` generators: every pair commutes.
    pub fn abelian(n: u32) -> Self {
        let mut commuting = BTreeSet::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                commuting.insert((a, b));
            }
        }
        GroupSpec { n, commuting }
    }

    pub fn n_generators(&self) -> u32 {
        self.n
    }

    pub fn commuting_pairs(&self) -> &BTreeSet<(u32, u32)> {
        &self.commuting
    }

    /// Whether two distinct generators commute.
    pub fn generators_commute(&self, a: u32, b: u32) -> bool {
        a != b && self.commuting.contains(&(a.min(b), a.max(b)))
    }

    /// Whether two letters may be swapped: their generators are distinct
    /// and commute.
    pub fn letters_commute(&self, k: Letter, l: Letter) -> bool {
        let (a, b) = (k.unsigned_abs(), l.unsigned_abs());
        a != b && self.generators_commute(a, b)
    }

    pub fn is_free(&self) -> bool {
        self.commuting.is_empty()
    }

    pub fn is_abelian(&self) -> bool {
        let full = u64::from(self.n) * u64::from(self.n.saturating_sub(1)) / 2;
        self.commuting.len() as u64 == full
    }

    /// Checks that every letter is nonzero and within `1..=n` in magnitude.
    /// Reports the first offending position.
    pub fn validate_word(&self, w: &Word) -> Result<(), Error> {
        for (index, &value) in w.letters().iter().enumerate() {
            if value == 0 || value.unsigned_abs() > self.n {
                return Err(Error::InvalidLetter { index, value });
            }
        }
        Ok(())
    }
}

/// A word over the signed alphabet. The empty word denotes the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The group inverse: reverse the sequence and negate every letter.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&k| -k).collect())
    }

    /// Plain concatenation; no reduction is performed.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Left rotation: for `w = y·z` with `|y| = k`, returns `z·y`.
    /// `k` is taken modulo the length; rotating the empty word is a no-op.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let k = k % self.0.len();
        let mut letters = Vec::with_capacity(self.0.len());
        letters.extend_from_slice(&self.0[k..]);
        letters.extend_from_slice(&self.0[..k]);
        Word(letters)
    }

    /// Signed occurrence counts per generator, indexed by `g - 1`.
    pub fn exponent_vector(&self, n_generators: u32) -> Vec<i64> {
        let mut counts = vec![0i64; n_generators as usize];
        for &k in &self.0 {
            let g = k.unsigned_abs() as usize;
            if g >= 1 && g <= n_generators as usize {
                counts[g - 1] += i64::from(k.signum());
            }
        }
        counts
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Position of a letter in the order `1 < -1 < 2 < -2 < ...`, starting at 1.
pub fn letter_rank(k: Letter) -> u64 {
    debug_assert!(k != 0, "letters are nonzero");
    let m = u64::from(k.unsigned_abs());
    if k > 0 {
        2 * m - 1
    } else {
        2 * m
    }
}

/// Shortlex comparison: shorter words come first, ties are broken
/// lexicographically under [`letter_rank`].
pub fn shortlex_cmp(u: &Word, v: &Word) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| {
        for (&a, &b) in u.letters().iter().zip(v.letters()) {
            match letter_rank(a).cmp(&letter_rank(b)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

pub fn shortlex_less(u: &Word, v: &Word) -> bool {
    shortlex_cmp(u, v) == Ordering::Less
}

impl fmt::Display for Word {
    /// Comma-separated signed integers; the empty word prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let k: i32 = part
                .parse()
                .map_err(|_| Error::WordSyntax(format!("bad letter {part:?}")))?;
            letters.push(k);
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validation_accepts_letters_in_range() {
        let spec = GroupSpec::free(2);
        assert!(spec.validate_word(&Word::new(vec![1, 2, -1])).is_ok());
    }

    #[test]
    fn validation_rejects_zero() {
        let spec = GroupSpec::free(2);
        assert_eq!(
            spec.validate_word(&Word::new(vec![0])),
            Err(Error::InvalidLetter { index: 0, value: 0 })
        );
    }

    #[test]
    fn validation_rejects_out_of_range() {
        let spec = GroupSpec::free(2);
        assert_eq!(
            spec.validate_word(&Word::new(vec![3])),
            Err(Error::InvalidLetter { index: 0, value: 3 })
        );
    }

    #[test]
    fn validation_reports_first_offender() {
        let spec = GroupSpec::free(3);
        assert_eq!(
            spec.validate_word(&Word::new(vec![1, -4, 0])),
            Err(Error::InvalidLetter {
                index: 1,
                value: -4
            })
        );
    }

    #[test]
    fn inverse_reverses_and_negates() {
        assert_eq!(
            Word::new(vec![1, 2, -3]).inverse(),
            Word::new(vec![3, -2, -1])
        );
        assert_eq!(Word::empty().inverse(), Word::empty());
        assert_eq!(
            Word::new(vec![-2, -2, -4, -4]).inverse(),
            Word::new(vec![4, 4, 2, 2])
        );
    }

    #[test]
    fn concat_is_plain_juxtaposition() {
        assert_eq!(
            Word::new(vec![1]).concat(&Word::new(vec![2])),
            Word::new(vec![1, 2])
        );
        assert_eq!(
            Word::empty().concat(&Word::new(vec![5])),
            Word::new(vec![5])
        );
        assert_eq!(
            Word::new(vec![1]).concat(&Word::new(vec![-1])),
            Word::new(vec![1, -1])
        );
    }

    #[test]
    fn rotate_moves_prefix_to_the_back() {
        assert_eq!(Word::new(vec![2, 3]).rotate(1), Word::new(vec![3, 2]));
        let w = Word::new(vec![1, -2, 3]);
        assert_eq!(w.rotate(0), w);
        assert_eq!(Word::new(vec![1, 2, 3]).rotate(2), Word::new(vec![3, 1, 2]));
    }

    #[test]
    fn rotate_normalises_modulo_length() {
        let w = Word::new(vec![1, 2, 3]);
        assert_eq!(w.rotate(3), w);
        assert_eq!(w.rotate(5), w.rotate(2));
        assert_eq!(Word::empty().rotate(7), Word::empty());
    }

    #[test]
    fn letter_rank_enumerates_the_letter_order() {
        assert_eq!(letter_rank(1), 1);
        assert_eq!(letter_rank(-1), 2);
        assert_eq!(letter_rank(2), 3);
        assert_eq!(letter_rank(-2), 4);
        assert_eq!(letter_rank(3), 5);
    }

    #[test]
    fn shortlex_orders_by_length_then_rank() {
        assert!(shortlex_less(
            &Word::new(vec![1, -3, -2]),
            &Word::new(vec![-3, 1, -2])
        ));
        assert!(shortlex_less(&Word::new(vec![1]), &Word::new(vec![1, 1])));
        let w = Word::new(vec![2, -1]);
        assert!(!shortlex_less(&w, &w));
    }

    #[test]
    fn spec_normalises_and_validates_pairs() {
        let spec = GroupSpec::new(4, vec![(4, 1), (2, 3), (2, 4)]).unwrap();
        let pairs: Vec<_> = spec.commuting_pairs().iter().copied().collect();
        assert_eq!(pairs, vec![(1, 4), (2, 3), (2, 4)]);
        assert!(spec.generators_commute(4, 1));
        assert!(!spec.generators_commute(1, 2));
        assert!(GroupSpec::new(2, vec![(1, 1)]).is_err());
        assert!(GroupSpec::new(2, vec![(0, 1)]).is_err());
        assert!(GroupSpec::new(2, vec![(1, 3)]).is_err());
    }

    #[test]
    fn free_and_abelian_classification() {
        assert!(GroupSpec::free(3).is_free());
        assert!(!GroupSpec::free(3).is_abelian());
        assert!(GroupSpec::abelian(3).is_abelian());
        assert!(!GroupSpec::abelian(3).is_free());
        // One generator is both.
        assert!(GroupSpec::free(1).is_free());
        assert!(GroupSpec::free(1).is_abelian());
        let partial = GroupSpec::new(3, vec![(1, 2)]).unwrap();
        assert!(!partial.is_free());
        assert!(!partial.is_abelian());
    }

    #[test]
    fn word_text_round_trip() {
        let w = Word::new(vec![-2, -2, -4, 3, 2, 4, 1, 2, -1, 2, 2, -4]);
        let text = w.to_string();
        assert_eq!(text, "-2,-2,-4,3,2,4,1,2,-1,2,2,-4");
        assert_eq!(text.parse::<Word>().unwrap(), w);
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(" 1, 2 , -3 ".parse::<Word>().unwrap(), Word::new(vec![1, 2, -3]));
        assert!("1,,2".parse::<Word>().is_err());
        assert!("a,b".parse::<Word>().is_err());
    }

    /// All words of length at most `max_len` over `±1..=±n`.
    fn all_words(n: i32, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let letters: Vec<i32> = (1..=n).flat_map(|g| [g, -g]).collect();
        let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &k in &letters {
                    let mut v = w.clone();
                    v.push(k);
                    out.push(Word::new(v.clone()));
                    next.push(v);
                }
            }
            layer = next;
        }
        out
    }

    #[test]
    fn shortlex_is_a_strict_total_order_on_small_words() {
        let words = all_words(3, 3);
        for u in &words {
            for v in &words {
                let uv = shortlex_less(u, v);
                let vu = shortlex_less(v, u);
                if u == v {
                    assert!(!uv && !vu);
                } else {
                    assert!(uv ^ vu, "exactly one of {u} < {v}, {v} < {u}");
                }
            }
        }
        // Transitivity via consistency with a sort key.
        let mut sorted = words.clone();
        sorted.sort_by(shortlex_cmp);
        for pair in sorted.windows(2) {
            assert!(!shortlex_less(&pair[1], &pair[0]));
        }
        for triple in sorted.windows(3) {
            if shortlex_less(&triple[0], &triple[1]) && shortlex_less(&triple[1], &triple[2]) {
                assert!(shortlex_less(&triple[0], &triple[2]));
            }
        }
    }

    fn word_strategy(n: i32, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(
            (1..=n, prop::bool::ANY).prop_map(|(g, neg)| if neg { -g } else { g }),
            0..=max_len,
        )
        .prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn inverse_is_an_involution(w in word_strategy(5, 12)) {
            prop_assert_eq!(w.inverse().inverse(), w);
        }

        #[test]
        fn rotation_composes_to_identity(w in word_strategy(5, 12), k in 0usize..12) {
            let n = w.len().max(1);
            let rotated = w.rotate(k % n);
            prop_assert_eq!(rotated.rotate(n - k % n), w);
        }

        #[test]
        fn concat_with_empty_is_identity(w in word_strategy(5, 12)) {
            prop_assert_eq!(Word::empty().concat(&w), w.clone());
            prop_assert_eq!(w.concat(&Word::empty()), w);
        }
    }

    #[test]
    fn letter_rank_is_injective_on_small_letters() {
        let mut seen = std::collections::BTreeSet::new();
        for g in 1..=64i32 {
            assert!(seen.insert(letter_rank(g)));
            assert!(seen.insert(letter_rank(-g)));
        }
    }
}
