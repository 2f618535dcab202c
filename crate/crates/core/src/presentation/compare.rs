//! Comparison of generated relations against hand-transcribed fixtures.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::{Letter, Presentation, Relation, RelationKind, Word};
use crate::error::{Error, Result};

/// Outcome of comparing one generated asymptotic relation with its fixture
/// counterpart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticMatch {
    pub generator: String,
    /// Index into the fixture's relation list, when the fixture has one for
    /// this generator.
    pub fixture_relation: Option<usize>,
    pub equivalent: bool,
}

/// Rewrites `word` from `from`'s generator ids into `to`'s, matching by name.
pub fn relabel(word: &Word, from: &Presentation, to: &Presentation) -> Result<Word> {
    let map = id_map(from, to)?;
    Ok(Word(
        word.letters()
            .iter()
            .map(|l| {
                let g = map[l.generator()];
                if l.is_inverse() {
                    Letter::neg(g)
                } else {
                    Letter::pos(g)
                }
            })
            .collect(),
    ))
}

fn id_map(from: &Presentation, to: &Presentation) -> Result<Vec<usize>> {
    let target: HashMap<&str, usize> = to
        .generators
        .iter()
        .enumerate()
        .map(|(k, g)| (g.as_str(), k))
        .collect();
    from.generators
        .iter()
        .map(|g| {
            target.get(g.as_str()).copied().ok_or_else(|| {
                Error::Domain(format!("generator `{g}` has no counterpart"))
            })
        })
        .collect()
}

/// The generator a transcribed asymptotic relation is about: the only
/// inverted generator on the left (`(t_i⁻¹δ₀)^k = (δ₀t_i⁻¹)^k`), or else the
/// only generator occurring once on the left (`t_i X = X t_i`).
fn distinguished_generator(r: &Relation) -> Option<usize> {
    let inverted: BTreeSet<usize> = r
        .lhs
        .letters()
        .iter()
        .filter(|l| l.is_inverse())
        .map(|l| l.generator())
        .collect();
    if !inverted.is_empty() {
        return (inverted.len() == 1).then(|| *inverted.first().expect("nonempty"));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for l in r.lhs.letters() {
        *counts.entry(l.generator()).or_default() += 1;
    }
    let once: Vec<usize> = counts
        .into_iter()
        .filter_map(|(g, c)| (c == 1).then_some(g))
        .collect();
    match once.as_slice() {
        [g] => Some(*g),
        _ => None,
    }
}

/// Pairs every generated asymptotic relation with the fixture's asymptotic
/// relation for the same generator and tests them for equivalence up to
/// conjugation and inversion.
pub fn compare_asymptotic(
    generated: &Presentation,
    fixture: &Presentation,
) -> Result<Vec<AsymptoticMatch>> {
    let map = id_map(generated, fixture)?;
    let by_generator: HashMap<usize, usize> = fixture
        .relations
        .iter()
        .enumerate()
        .filter(|(_, r)| r.kind == Some(RelationKind::Asymptotic))
        .filter_map(|(k, r)| distinguished_generator(r).map(|g| (g, k)))
        .collect();
    let relabel_word = |w: &Word| w.map_generators(|g| map[g]);

    generated
        .relations_of(RelationKind::Asymptotic)
        .enumerate()
        .map(|(i, r)| {
            let target = map[i];
            let fixture_relation = by_generator.get(&target).copied();
            let equivalent = fixture_relation.is_some_and(|k| {
                let mine = Relation {
                    lhs: relabel_word(&r.lhs),
                    rhs: relabel_word(&r.rhs),
                    kind: r.kind,
                };
                mine.equivalent_to(&fixture.relations[k])
            });
            Ok(AsymptoticMatch {
                generator: generated.generators[i].clone(),
                fixture_relation,
                equivalent,
            })
        })
        .collect()
}
