//! Word-problem and conjugacy decisions.
//!
//! Equality reduces to comparing pilings, which are canonical. Conjugacy
//! runs the full pipeline: cyclically reduce both pilings, factorise into
//! non-split factors, bring each factor to pyramidal form, and compare the
//! factors cyclically. A positive answer comes with a conjugating element
//! `x` satisfying `w1 = x⁻¹ · w2 · x`, which is re-verified before it is
//! returned.

use crate::graphs::{factorise, non_split_factors, DefiningGraph};
use crate::pilings::Piling;
use crate::pyramidal::{cyclic_conjugacy_witness, is_cyclic_permutation, pyramidal_graph};
use crate::words::{GroupSpec, Word};
use crate::Error;

/// Verdict of a conjugacy test. When `conjugate` is true the witness is
/// present, freely reduced, and satisfies `w1 = witness⁻¹ · w2 · witness`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyResult {
    pub conjugate: bool,
    pub witness: Option<Word>,
}

impl ConjugacyResult {
    fn yes(witness: Word) -> Self {
        ConjugacyResult {
            conjugate: true,
            witness: Some(witness),
        }
    }

    fn no() -> Self {
        ConjugacyResult {
            conjugate: false,
            witness: None,
        }
    }
}

/// Whether `w` represents the identity.
pub fn is_identity(w: &Word, spec: &GroupSpec) -> Result<bool, Error> {
    Ok(Piling::from_word(w, spec)?.is_empty())
}

/// Whether `w1` and `w2` represent the same element: their pilings, and
/// hence their normal forms, coincide.
pub fn equal(w1: &Word, w2: &Word, spec: &GroupSpec) -> Result<bool, Error> {
    Ok(Piling::from_word(w1, spec)? == Piling::from_word(w2, spec)?)
}

/// Decides conjugacy, dispatching to the free or abelian shortcut when the
/// presentation allows it and to the general pipeline otherwise.
pub fn is_conjugate(w1: &Word, w2: &Word, spec: &GroupSpec) -> Result<ConjugacyResult, Error> {
    if spec.is_free() {
        is_conjugate_free(w1, w2, spec)
    } else if spec.is_abelian() {
        is_conjugate_abelian(w1, w2, spec)
    } else {
        is_conjugate_general(w1, w2, spec)
    }
}

/// The full pipeline, independent of the shape of the presentation.
///
/// Swapping the argument order yields the inverse witness: factor words are
/// compared through their least cyclic rotation, so the assembled
/// conjugators of the two directions cancel exactly.
pub fn is_conjugate_general(
    w1: &Word,
    w2: &Word,
    spec: &GroupSpec,
) -> Result<ConjugacyResult, Error> {
    spec.validate_word(w1)?;
    spec.validate_word(w2)?;
    let graph = DefiningGraph::from_spec(spec);

    let first = Piling::from_letters_unchecked(w1.letters(), &graph);
    let second = Piling::from_letters_unchecked(w2.letters(), &graph);
    let red1 = first.cyclically_reduce_graph(&graph);
    let red2 = second.cyclically_reduce_graph(&graph);

    if red1.reduced.is_empty() && red2.reduced.is_empty() {
        let witness = red2.conjugator.concat(&red1.conjugator.inverse());
        return finish(w1, w2, witness, &graph);
    }

    let components1 = factorise(&graph, &red1.reduced);
    let components2 = factorise(&graph, &red2.reduced);
    if components1 != components2 {
        return Ok(ConjugacyResult::no());
    }

    let nf1 = red1.reduced.normal_form_graph(&graph)?;
    let nf2 = red2.reduced.normal_form_graph(&graph)?;
    let factors1 = non_split_factors(&components1, &nf1, spec);
    let factors2 = non_split_factors(&components2, &nf2, spec);

    // z = ∏ zᵢ with zᵢ = tᵢ · yᵢ · sᵢ⁻¹; the zᵢ live on disjoint,
    // fully commuting supports, so the product order is immaterial.
    let mut z = Vec::new();
    for (p_factor, q_factor) in factors1.iter().zip(&factors2) {
        let pyr_p = pyramidal_graph(p_factor, &graph)?;
        let pyr_q = pyramidal_graph(q_factor, &graph)?;
        let Some(y) = cyclic_conjugacy_witness(&pyr_p.piling, &pyr_q.piling, &graph)? else {
            return Ok(ConjugacyResult::no());
        };
        z.extend_from_slice(pyr_q.conjugator.letters());
        z.extend_from_slice(y.letters());
        z.extend_from_slice(pyr_p.conjugator.inverse().letters());
    }

    let witness = red2
        .conjugator
        .concat(&Word::new(z))
        .concat(&red1.conjugator.inverse());
    finish(w1, w2, witness, &graph)
}

/// Shortcut for free groups: cyclically reduced words are conjugate
/// exactly when they are cyclic permutations of each other.
pub fn is_conjugate_free(w1: &Word, w2: &Word, spec: &GroupSpec) -> Result<ConjugacyResult, Error> {
    if !spec.is_free() {
        return Err(Error::NotFreeGroup);
    }
    spec.validate_word(w1)?;
    spec.validate_word(w2)?;
    let graph = DefiningGraph::from_spec(spec);
    let red1 = Piling::from_letters_unchecked(w1.letters(), &graph).cyclically_reduce_graph(&graph);
    let red2 = Piling::from_letters_unchecked(w2.letters(), &graph).cyclically_reduce_graph(&graph);
    let r1 = red1.reduced.normal_form_graph(&graph)?;
    let r2 = red2.reduced.normal_form_graph(&graph)?;
    let Some(y) = is_cyclic_permutation(&r1, &r2) else {
        return Ok(ConjugacyResult::no());
    };
    let witness = red2
        .conjugator
        .concat(&y)
        .concat(&red1.conjugator.inverse());
    finish(w1, w2, witness, &graph)
}

/// Shortcut for free abelian groups: conjugacy degenerates to equality,
/// i.e. to comparing signed letter counts.
pub fn is_conjugate_abelian(
    w1: &Word,
    w2: &Word,
    spec: &GroupSpec,
) -> Result<ConjugacyResult, Error> {
    if !spec.is_abelian() {
        return Err(Error::NotAbelianGroup);
    }
    spec.validate_word(w1)?;
    spec.validate_word(w2)?;
    let n = spec.n_generators();
    if w1.exponent_vector(n) != w2.exponent_vector(n) {
        return Ok(ConjugacyResult::no());
    }
    let graph = DefiningGraph::from_spec(spec);
    finish(w1, w2, Word::empty(), &graph)
}

/// Freely reduces an assembled witness and runs the mandatory self-check
/// `w1 = x⁻¹ · w2 · x` before returning a positive verdict.
fn finish(
    w1: &Word,
    w2: &Word,
    witness: Word,
    graph: &DefiningGraph,
) -> Result<ConjugacyResult, Error> {
    let reduced =
        Piling::from_letters_unchecked(witness.letters(), graph).normal_form_graph(graph)?;
    let conjugated: Vec<i32> = reduced
        .inverse()
        .letters()
        .iter()
        .chain(w2.letters())
        .chain(reduced.letters())
        .copied()
        .collect();
    let lhs = Piling::from_letters_unchecked(w1.letters(), graph);
    let rhs = Piling::from_letters_unchecked(&conjugated, graph);
    if lhs != rhs {
        return Err(Error::WitnessVerificationFailed);
    }
    Ok(ConjugacyResult::yes(reduced))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_gen_spec() -> GroupSpec {
        GroupSpec::new(4, vec![(1, 4), (2, 3), (2, 4)]).unwrap()
    }

    fn word(letters: &[i32]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn identity_recognises_trivial_words() {
        assert!(is_identity(&word(&[1, -1]), &GroupSpec::free(2)).unwrap());
        assert!(is_identity(&word(&[1, 2, -1, -2]), &GroupSpec::abelian(2)).unwrap());
        assert!(!is_identity(&word(&[1, 2, -1, -2]), &GroupSpec::free(2)).unwrap());
        assert!(is_identity(&Word::empty(), &GroupSpec::free(2)).unwrap());
    }

    #[test]
    fn equality_respects_the_relations() {
        assert!(equal(&word(&[1, 2]), &word(&[2, 1]), &GroupSpec::abelian(2)).unwrap());
        assert!(!equal(&word(&[1, 2]), &word(&[2, 1]), &GroupSpec::free(2)).unwrap());
        let spec = four_gen_spec();
        let w = word(&[-2, -2, -4, 3, 2, 4, 1, 2, -1, 2, 2, -4]);
        let nf = Piling::from_word(&w, &spec).unwrap().normal_form(&spec).unwrap();
        assert!(equal(&w, &nf, &spec).unwrap());
    }

    #[test]
    fn equality_propagates_validation_errors() {
        assert_eq!(
            equal(&word(&[0]), &word(&[1]), &GroupSpec::free(1)),
            Err(Error::InvalidLetter { index: 0, value: 0 })
        );
    }

    #[test]
    fn main_conjugacy_fixture_has_a_verified_witness() {
        let spec = four_gen_spec();
        let w1 = word(&[-2, -2, -4, 3, 2, 4, 1, 2, -1, 2, 2, -4]);
        let w2 = word(&[4, 3, -4, 2, 1, 2, -1, -4]);
        let result = is_conjugate(&w1, &w2, &spec).unwrap();
        assert!(result.conjugate);
        let x = result.witness.unwrap();
        let conjugated = x.inverse().concat(&w2).concat(&x);
        assert!(equal(&w1, &conjugated, &spec).unwrap());
    }

    #[test]
    fn every_word_is_conjugate_to_itself() {
        let spec = four_gen_spec();
        let w = word(&[3, -1, 2, 2]);
        let result = is_conjugate(&w, &w, &spec).unwrap();
        assert!(result.conjugate);
        assert_eq!(result.witness.unwrap(), Word::empty());
    }

    #[test]
    fn distinct_generators_are_not_conjugate() {
        let spec = GroupSpec::free(2);
        let result = is_conjugate(&word(&[1]), &word(&[2]), &spec).unwrap();
        assert!(!result.conjugate);
        assert_eq!(result.witness, None);
    }

    #[test]
    fn rotations_are_conjugate_with_a_valid_witness() {
        let spec = GroupSpec::free(2);
        let w1 = word(&[1, 2]);
        let w2 = word(&[2, 1]);
        for result in [
            is_conjugate(&w1, &w2, &spec).unwrap(),
            is_conjugate_general(&w1, &w2, &spec).unwrap(),
        ] {
            assert!(result.conjugate);
            let x = result.witness.unwrap();
            assert!(equal(&w1, &x.inverse().concat(&w2).concat(&x), &spec).unwrap());
        }
    }

    #[test]
    fn trivial_elements_are_conjugate() {
        let spec = GroupSpec::free(2);
        let result = is_conjugate_general(&word(&[1, -1]), &Word::empty(), &spec).unwrap();
        assert!(result.conjugate);
        assert!(result.witness.unwrap().is_empty());
    }

    #[test]
    fn free_fast_path_handles_conjugation_by_a_generator() {
        let spec = GroupSpec::free(2);
        let result = is_conjugate_free(&word(&[1, 2, -1]), &word(&[2]), &spec).unwrap();
        assert!(result.conjugate);
        let x = result.witness.unwrap();
        assert!(equal(&word(&[1, 2, -1]), &x.inverse().concat(&word(&[2])).concat(&x), &spec)
            .unwrap());

        assert!(!is_conjugate_free(&word(&[1]), &word(&[2]), &spec)
            .unwrap()
            .conjugate);

        assert_eq!(
            is_conjugate_free(&word(&[1]), &word(&[1]), &GroupSpec::abelian(2)),
            Err(Error::NotFreeGroup)
        );
    }

    #[test]
    fn abelian_fast_path_compares_exponent_vectors() {
        let z2 = GroupSpec::abelian(2);
        let result = is_conjugate_abelian(&word(&[1, 2]), &word(&[2, 1]), &z2).unwrap();
        assert!(result.conjugate);
        assert_eq!(result.witness.unwrap(), Word::empty());

        assert!(!is_conjugate_abelian(&word(&[1]), &word(&[1, 1]), &z2)
            .unwrap()
            .conjugate);

        let result = is_conjugate_abelian(&word(&[1, -1]), &Word::empty(), &z2).unwrap();
        assert!(result.conjugate);

        assert_eq!(
            is_conjugate_abelian(&word(&[1]), &word(&[1]), &GroupSpec::free(2)),
            Err(Error::NotAbelianGroup)
        );
    }

    #[test]
    fn witnesses_of_swapped_arguments_are_mutually_inverse() {
        let spec = four_gen_spec();
        let w1 = word(&[-2, -2, -4, 3, 2, 4, 1, 2, -1, 2, 2, -4]);
        let w2 = word(&[4, 3, -4, 2, 1, 2, -1, -4]);
        let x12 = is_conjugate_general(&w1, &w2, &spec).unwrap().witness.unwrap();
        let x21 = is_conjugate_general(&w2, &w1, &spec).unwrap().witness.unwrap();
        assert!(equal(&x12, &x21.inverse(), &spec).unwrap());
    }
}
