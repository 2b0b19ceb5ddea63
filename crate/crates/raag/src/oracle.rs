//! Brute-force reference checkers built purely on word rewriting.
//!
//! Everything here works directly with the presentation — swapping adjacent
//! commuting letters, cancelling and inserting adjacent inverse pairs —
//! and deliberately shares no code with the piling machinery, so agreement
//! between the two is meaningful evidence. These checkers are exponential
//! and only intended for small instances.

use std::collections::{BTreeSet, VecDeque};
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::words::{shortlex_less, GroupSpec, Letter, Word};
use crate::Error;

/// Default cap on the number of states explored by [`equivalent_class`].
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// All words of length at most `max_len` reachable from `w` by swapping
/// adjacent commuting letters, deleting adjacent inverse pairs, and
/// inserting adjacent inverse pairs.
pub fn equivalent_class(
    w: &Word,
    spec: &GroupSpec,
    max_len: usize,
) -> Result<BTreeSet<Word>, Error> {
    equivalent_class_capped(w, spec, max_len, DEFAULT_STATE_CAP)
}

pub fn equivalent_class_capped(
    w: &Word,
    spec: &GroupSpec,
    max_len: usize,
    state_cap: usize,
) -> Result<BTreeSet<Word>, Error> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for next in rewrite_neighbors(&current, spec, max_len) {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= state_cap {
                return Err(Error::BudgetExceeded { states: seen.len() });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(seen)
}

/// Single rewriting steps from `w`.
fn rewrite_neighbors(w: &Word, spec: &GroupSpec, max_len: usize) -> Vec<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        if spec.letters_commute(letters[i], letters[i + 1]) {
            let mut v = letters.to_vec();
            v.swap(i, i + 1);
            out.push(Word::new(v));
        }
        if letters[i + 1] == -letters[i] {
            let mut v = letters.to_vec();
            v.drain(i..=i + 1);
            out.push(Word::new(v));
        }
    }
    if letters.len() + 2 <= max_len {
        for pos in 0..=letters.len() {
            for g in 1..=spec.n_generators() as i32 {
                for k in [g, -g] {
                    let mut v = letters.to_vec();
                    v.splice(pos..pos, [k, -k]);
                    out.push(Word::new(v));
                }
            }
        }
    }
    out
}

/// Shuffle-and-cancel reduction: repeatedly deletes a pair of mutually
/// inverse letters whose in-between letters all commute with them. A word
/// represents the identity exactly when this ends at the empty word.
pub fn reduce_word(w: &Word, spec: &GroupSpec) -> Word {
    let mut letters = w.letters().to_vec();
    'outer: loop {
        for i in 0..letters.len() {
            let g = letters[i].unsigned_abs();
            for j in (i + 1)..letters.len() {
                if letters[j] == -letters[i] {
                    letters.remove(j);
                    letters.remove(i);
                    continue 'outer;
                }
                if !spec.generators_commute(letters[j].unsigned_abs(), g) {
                    break;
                }
            }
        }
        return Word::new(letters);
    }
}

/// Shortlex-least representative, computed by reducing and then taking the
/// minimum of the swap closure. Equal words in the group get equal results.
pub fn canonical_word(w: &Word, spec: &GroupSpec) -> Word {
    let reduced = reduce_word(w, spec);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut best = reduced.clone();
    seen.insert(reduced.clone());
    queue.push_back(reduced);
    while let Some(current) = queue.pop_front() {
        let letters = current.letters();
        for i in 0..letters.len().saturating_sub(1) {
            if spec.letters_commute(letters[i], letters[i + 1]) {
                let mut v = letters.to_vec();
                v.swap(i, i + 1);
                let next = Word::new(v);
                if seen.insert(next.clone()) {
                    if shortlex_less(&next, &best) {
                        best = next.clone();
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    best
}

/// Rewriting-based equality test.
pub fn words_equal(w1: &Word, w2: &Word, spec: &GroupSpec) -> bool {
    reduce_word(&w1.concat(&w2.inverse()), spec).is_empty()
}

/// Calls `visit` with every freely reduced word of length at most
/// `max_len`, in shortlex enumeration order; stops early when `visit`
/// returns true.
fn for_each_reduced_word(
    n_generators: u32,
    max_len: usize,
    visit: &mut impl FnMut(&[Letter]) -> bool,
) -> bool {
    fn recurse(
        letters: &[Letter],
        prefix: &mut Vec<Letter>,
        max_len: usize,
        visit: &mut impl FnMut(&[Letter]) -> bool,
    ) -> bool {
        if visit(prefix) {
            return true;
        }
        if prefix.len() == max_len {
            return false;
        }
        for &k in letters {
            if prefix.last() == Some(&-k) {
                continue;
            }
            prefix.push(k);
            if recurse(letters, prefix, max_len, visit) {
                return true;
            }
            prefix.pop();
        }
        false
    }
    let letters: Vec<Letter> = (1..=n_generators as i32).flat_map(|g| [g, -g]).collect();
    recurse(&letters, &mut Vec::new(), max_len, visit)
}

/// Whether some freely reduced word `x` with `|x| ≤ max_conj_len`
/// satisfies `w1 = x⁻¹ · w2 · x`, by plain enumeration.
pub fn brute_force_is_conjugate(
    w1: &Word,
    w2: &Word,
    spec: &GroupSpec,
    max_conj_len: usize,
) -> bool {
    let target = canonical_word(w1, spec);
    for_each_reduced_word(spec.n_generators(), max_conj_len, &mut |x| {
        let x = Word::new(x.to_vec());
        let conjugated = x.inverse().concat(w2).concat(&x);
        canonical_word(&conjugated, spec) == target
    })
}

/// Canonical forms of every conjugate `x⁻¹ · w · x` over freely reduced
/// `x` of length at most `max_conj_len`. Membership of `canonical_word(v)`
/// in this set reproduces [`brute_force_is_conjugate`] verdicts in bulk.
pub fn conjugate_canon_set(w: &Word, spec: &GroupSpec, max_conj_len: usize) -> BTreeSet<Word> {
    let mut set = BTreeSet::new();
    for_each_reduced_word(spec.n_generators(), max_conj_len, &mut |x| {
        let x = Word::new(x.to_vec());
        let conjugated = x.inverse().concat(w).concat(&x);
        set.insert(canonical_word(&conjugated, spec));
        false
    });
    set
}

/// Shape of the instances produced by [`random_instance`].
#[derive(Debug, Clone)]
pub struct InstanceBounds {
    pub n_generators: RangeInclusive<u32>,
    pub word_len: RangeInclusive<usize>,
    pub conjugator_len: RangeInclusive<usize>,
    /// Probability that any given generator pair commutes.
    pub commuting_density: f64,
    /// When set, the second word is `u⁻¹ · w1 · u` for a random `u`.
    pub conjugate_pair: bool,
}

/// Deterministic pseudo-random test instance for a given seed.
pub fn random_instance(seed: u64, bounds: &InstanceBounds) -> (GroupSpec, Word, Word) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(bounds.n_generators.clone());
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            if rng.gen_bool(bounds.commuting_density) {
                pairs.push((a, b));
            }
        }
    }
    let spec = GroupSpec::new(n, pairs).expect("generated pairs are in range");
    let len1 = rng.gen_range(bounds.word_len.clone());
    let w1 = random_word(&mut rng, n, len1);
    let w2 = if bounds.conjugate_pair {
        let len = rng.gen_range(bounds.conjugator_len.clone());
        let u = random_word(&mut rng, n, len);
        u.inverse().concat(&w1).concat(&u)
    } else {
        let len = rng.gen_range(bounds.word_len.clone());
        random_word(&mut rng, n, len)
    };
    (spec, w1, w2)
}

fn random_word(rng: &mut impl Rng, n_generators: u32, len: usize) -> Word {
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=n_generators as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

/// Applies `steps` random legal rewriting moves (commuting swaps,
/// deletions and insertions of inverse pairs) to `w`. The result always
/// represents the same group element.
pub fn random_rewrite(w: &Word, spec: &GroupSpec, steps: usize, rng: &mut impl Rng) -> Word {
    let mut letters = w.letters().to_vec();
    for _ in 0..steps {
        let mut swaps = Vec::new();
        let mut deletions = Vec::new();
        for i in 0..letters.len().saturating_sub(1) {
            if spec.letters_commute(letters[i], letters[i + 1]) {
                swaps.push(i);
            }
            if letters[i + 1] == -letters[i] {
                deletions.push(i);
            }
        }
        match rng.gen_range(0..3) {
            0 if !swaps.is_empty() => {
                let i = swaps[rng.gen_range(0..swaps.len())];
                letters.swap(i, i + 1);
            }
            1 if !deletions.is_empty() => {
                let i = deletions[rng.gen_range(0..deletions.len())];
                letters.drain(i..=i + 1);
            }
            _ => {
                let pos = rng.gen_range(0..=letters.len());
                let g = rng.gen_range(1..=spec.n_generators() as i32);
                let k = if rng.gen_bool(0.5) { g } else { -g };
                letters.splice(pos..pos, [k, -k]);
            }
        }
    }
    Word::new(letters)
}
