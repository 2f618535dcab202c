//! Hand-transcribed presentations for the small cases `(n,d) = (1,1)` and
//! `(1,2)`. These are kept literal (reduced relation sets, rotated triangle
//! relations) and are compared with the generated presentations only through
//! invariants.

use super::{Letter, Meta, Presentation, Relation, RelationKind, Variant, Word};
use crate::error::{Error, Result};

pub const FIXTURE_IDS: [&str; 3] = ["n1d1", "n1d1_projective", "n1d2"];

pub fn special_fixture(case: &str) -> Result<Presentation> {
    match case {
        "n1d1" => Ok(n1d1(false)),
        "n1d1_projective" => Ok(n1d1(true)),
        "n1d2" => Ok(n1d2()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

fn meta(case: &str, d: u32, pact_exponent: Option<u32>) -> Meta {
    Meta {
        n: Some(1),
        d: Some(d),
        variant: Variant::Fixture,
        pact_exponent,
        l: None,
        fixture: Some(case.to_string()),
    }
}

/// Labels `t₁ = (1,1)`, `t₂ = (1,2)`, `t₃ = (2,1)`, `t₄ = (2,2)`, stored as ids 0..4.
fn n1d1(projective: bool) -> Presentation {
    // 1-based labels as printed.
    let w = |ls: &[usize]| Word::from_generators(ls.iter().map(|&i| i - 1));
    let mut relations = vec![Relation::new(w(&[2, 3]), w(&[3, 2]), RelationKind::Commutation)];
    for (i, j) in [(1, 2), (1, 3), (2, 4), (3, 4)] {
        relations.push(Relation::new(
            w(&[i, j, i]),
            w(&[j, i, j]),
            RelationKind::Braid,
        ));
    }
    for (i, j, k) in [(1, 2, 4), (1, 3, 4)] {
        relations.push(Relation::new(
            w(&[i, j, k, i]),
            w(&[j, k, i, j]),
            RelationKind::Triangle,
        ));
    }
    relations.push(Relation::new(
        w(&[4, 3, 2, 4, 3, 2, 1]),
        w(&[1, 4, 3, 2, 4, 3, 2]),
        RelationKind::Asymptotic,
    ));
    relations.push(Relation::new(
        w(&[3, 2, 1, 3, 2, 1, 4]),
        w(&[4, 3, 2, 1, 3, 2, 1]),
        RelationKind::Asymptotic,
    ));
    let case = if projective {
        relations.push(Relation::new(
            w(&[4, 3, 2, 1, 2, 1, 4, 3, 3, 1, 4, 2]),
            Word::empty(),
            RelationKind::CentralAction,
        ));
        "n1d1_projective"
    } else {
        "n1d1"
    };
    Presentation {
        meta: meta(case, 1, None),
        generators: ["t_1_1", "t_1_2", "t_2_1", "t_2_2"]
            .map(String::from)
            .to_vec(),
        relations,
    }
}

/// Generators `t_{1,1}, …, t_{1,5}, t_{2,1}, …, t_{2,5}` in that order.
fn n1d2() -> Presentation {
    let top = 5u32;
    let id = |i0: u32, i1: u32| ((i0 - 1) * top + (i1 - 1)) as usize;
    let labels: Vec<(u32, u32)> = (1..=2)
        .flat_map(|i0| (1..=top).map(move |i1| (i0, i1)))
        .collect();
    let generators = labels
        .iter()
        .map(|(a, b)| format!("t_{a}_{b}"))
        .collect();
    let w = |ls: &[(u32, u32)]| Word::from_generators(ls.iter().map(|&(a, b)| id(a, b)));

    let mut relations = Vec::new();
    for (p, &(i0, i1)) in labels.iter().enumerate() {
        for &(j0, j1) in &labels[p + 1..] {
            let di1 = i1 as i64 - j1 as i64;
            let di0 = i0 as i64 - j0 as i64;
            let (a, b) = ((i0, i1), (j0, j1));
            if di1.abs() <= 1 && di0 * di1 >= 0 {
                relations.push(Relation::new(
                    w(&[a, b, a]),
                    w(&[b, a, b]),
                    RelationKind::Braid,
                ));
            } else {
                relations.push(Relation::new(
                    w(&[a, b]),
                    w(&[b, a]),
                    RelationKind::Commutation,
                ));
            }
        }
    }
    for i in 1..top {
        relations.push(Relation::new(
            w(&[(1, i), (2, i + 1), (1, i + 1), (1, i)]),
            w(&[(1, i + 1), (1, i), (2, i + 1), (1, i + 1)]),
            RelationKind::Triangle,
        ));
        relations.push(Relation::new(
            w(&[(1, i), (2, i + 1), (2, i), (1, i)]),
            w(&[(2, i), (1, i), (2, i + 1), (2, i)]),
            RelationKind::Triangle,
        ));
    }

    // δ₀ = t_{2,5}⋯t_{2,1} t_{1,5}⋯t_{1,1};  δ₁ = t_{2,1}t_{1,1} t_{2,2}t_{1,2} ⋯ t_{2,5}t_{1,5}.
    let delta0: Vec<(u32, u32)> = [2, 1]
        .into_iter()
        .flat_map(|i0| (1..=top).rev().map(move |i1| (i0, i1)))
        .collect();
    let delta1: Vec<(u32, u32)> = (1..=top).flat_map(|i1| [(2, i1), (1, i1)]).collect();
    let delta0 = w(&delta0);
    let delta1 = w(&delta1);

    for &(a, b) in &labels {
        let inv = Word(vec![Letter::neg(id(a, b))]);
        relations.push(Relation::new(
            inv.concat(&delta0).pow(5),
            delta0.concat(&inv).pow(5),
            RelationKind::Asymptotic,
        ));
    }
    relations.push(Relation::new(
        delta0.pow(6),
        Word::empty(),
        RelationKind::ProjectiveAction,
    ));
    relations.push(Relation::new(
        delta1.pow(6),
        Word::empty(),
        RelationKind::CentralAction,
    ));

    Presentation {
        meta: meta("n1d2", 2, Some(6)),
        generators,
        relations,
    }
}
