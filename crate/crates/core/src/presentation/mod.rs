//! Finite presentations of the discriminant-complement, singularity-unfolding
//! and moduli-stack groups, built from the lattice graph `Γ_{n,d}`.
//!
//! Generators are the multi-indices of `I_{n,d}` in `≺₀` order, so generator
//! id `k` is the `k`-th element of [`build_index_set`]. Relations come in six
//! families:
//!
//! * i)   `t_i t_j = t_j t_i` for non-adjacent pairs,
//! * ii)  `t_i t_j t_i = t_j t_i t_j` for edges,
//! * iii) `t_i t_j t_k t_i = t_j t_k t_i t_j` for `≺₀`-ordered triangles,
//! * iv)  `t_i X = X t_i` with `X = (t_i⁻¹ δ₀)^{3d−1}`,
//! * v)   `δ₀⁶ δ₁⁶ ⋯ δ_n⁶ = 1`,
//! * vi)  `δ₀^E = 1`, `E = 3d` unless overridden.

mod compare;
mod fixtures;
mod format;
mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{build_graph, build_index_set, enumerate, OrderTag};

pub use compare::{compare_asymptotic, relabel, AsymptoticMatch};
pub use fixtures::{special_fixture, FIXTURE_IDS};
pub use format::{from_json, serialize, Format};
pub use word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Singularity,
    Discriminant,
    Moduli,
    Zariski,
    Elliptic,
    Fixture,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Singularity => "singularity",
            Variant::Discriminant => "discriminant",
            Variant::Moduli => "moduli",
            Variant::Zariski => "zariski",
            Variant::Elliptic => "elliptic",
            Variant::Fixture => "fixture",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "singularity" => Variant::Singularity,
            "discriminant" => Variant::Discriminant,
            "moduli" => Variant::Moduli,
            "zariski" => Variant::Zariski,
            "elliptic" => Variant::Elliptic,
            "fixture" => Variant::Fixture,
            other => return Err(Error::UnknownVariant(other.to_string())),
        })
    }
}

/// Which family a relation was generated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Commutation,
    Braid,
    Triangle,
    Asymptotic,
    CentralAction,
    ProjectiveAction,
    /// The `σ₁⋯σ_{l−1}σ_{l−1}⋯σ₁ = 1` relation of the ℙ¹ systems.
    Zariski,
    /// `(σ₁σ₂)⁶ = 1` and similar power relations.
    Power,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<RelationKind>,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word, kind: RelationKind) -> Self {
        Relation {
            lhs,
            rhs,
            kind: Some(kind),
        }
    }

    /// `lhs · rhs⁻¹`, unreduced.
    pub fn relator(&self) -> Word {
        self.lhs.concat(&self.rhs.invert())
    }

    /// Freely and cyclically reduced relator.
    pub fn canonical(&self) -> Word {
        self.relator().cyclic_reduce()
    }

    /// Whether two relations define the same normal closure element up to
    /// conjugation and inversion.
    pub fn equivalent_to(&self, other: &Relation) -> bool {
        let mine = self.canonical();
        let theirs = other.canonical();
        mine.is_conjugate_to(&theirs) || mine.is_conjugate_to(&theirs.invert())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub n: Option<usize>,
    pub d: Option<u32>,
    pub variant: Variant,
    pub pact_exponent: Option<u32>,
    /// Degree `l` of the ℙ¹ system, only for `zariski`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub meta: Meta,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn relators(&self) -> Vec<Word> {
        self.relations.iter().map(Relation::relator).collect()
    }

    pub fn relations_of(&self, kind: RelationKind) -> impl Iterator<Item = &Relation> {
        self.relations
            .iter()
            .filter(move |r| r.kind == Some(kind))
    }

    /// Every letter refers to a listed generator.
    pub fn validate(&self) -> Result<()> {
        let count = self.generators.len();
        for (k, r) in self.relations.iter().enumerate() {
            let top = r.lhs.max_generator().max(r.rhs.max_generator());
            if let Some(g) = top.filter(|&g| g >= count) {
                return Err(Error::Domain(format!(
                    "relation {k} refers to generator {g}, but only {count} exist"
                )));
            }
        }
        Ok(())
    }
}

/// Knobs for [`build_presentation`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Exponent `E` of relation vi; `3d` when unset.
    pub pact_exponent: Option<u32>,
    /// Build the moduli variant even when `d` is odd.
    pub allow_odd_d: bool,
}

/// `δ_κ`: product of all generators in `≺_κ`-ascending order.
pub fn delta_word(n: usize, d: u32, kappa: usize) -> Result<Word> {
    let base = build_index_set(n, d)?;
    let order = enumerate(n, d, OrderTag(kappa))?;
    // `base` is sorted by ≺₀, which is the reversed lexicographic order.
    let ids = order.iter().map(|m| {
        base.binary_search_by(|probe| m.0.cmp(&probe.0))
            .expect("enumeration is a permutation of the index set")
    });
    Ok(Word::from_generators(ids))
}

pub fn build_presentation(
    n: usize,
    d: u32,
    variant: Variant,
    options: BuildOptions,
) -> Result<Presentation> {
    match variant {
        Variant::Singularity | Variant::Discriminant | Variant::Moduli => {}
        other => {
            return Err(Error::UnknownVariant(format!(
                "{other} is not built from Γ_{{n,d}}; use its dedicated builder"
            )))
        }
    }
    if n == 0 {
        return Err(Error::Domain(
            "n = 0 has no lattice presentation; use the elliptic builder".into(),
        ));
    }
    if variant == Variant::Moduli && d % 2 == 1 && !options.allow_odd_d {
        return Err(Error::OddDegreeModuli(d));
    }
    if options.pact_exponent == Some(0) {
        return Err(Error::Domain("pact exponent must be positive".into()));
    }

    let graph = build_graph(n, d)?;
    let generators = graph
        .vertices
        .iter()
        .map(|v| v.generator_name())
        .collect();
    let t = |i: usize| Letter::pos(i);
    let word = |ls: &[usize]| Word(ls.iter().map(|&i| t(i)).collect());

    let mut relations = Vec::new();
    for (i, j) in graph.non_edges() {
        relations.push(Relation::new(
            word(&[i, j]),
            word(&[j, i]),
            RelationKind::Commutation,
        ));
    }
    for &(i, j) in &graph.edges {
        relations.push(Relation::new(
            word(&[i, j, i]),
            word(&[j, i, j]),
            RelationKind::Braid,
        ));
    }
    for [i, j, k] in graph.triangles() {
        relations.push(Relation::new(
            word(&[i, j, k, i]),
            word(&[j, k, i, j]),
            RelationKind::Triangle,
        ));
    }

    let pact_exponent = if variant == Variant::Moduli {
        Some(options.pact_exponent.unwrap_or(3 * d))
    } else {
        None
    };

    if variant != Variant::Singularity {
        let delta0 = delta_word(n, d, 0)?;
        for i in 0..graph.vertices.len() {
            let ti = Word(vec![t(i)]);
            let x = Word(vec![Letter::neg(i)])
                .concat(&delta0)
                .pow((3 * d - 1) as usize);
            relations.push(Relation::new(
                ti.concat(&x),
                x.concat(&ti),
                RelationKind::Asymptotic,
            ));
        }
    }

    if variant == Variant::Moduli {
        let mut central = Word::empty();
        for kappa in 0..=n {
            central = central.concat(&delta_word(n, d, kappa)?.pow(6));
        }
        relations.push(Relation::new(
            central,
            Word::empty(),
            RelationKind::CentralAction,
        ));
        let e = pact_exponent.expect("set for moduli");
        relations.push(Relation::new(
            delta_word(n, d, 0)?.pow(e as usize),
            Word::empty(),
            RelationKind::ProjectiveAction,
        ));
    }

    Ok(Presentation {
        meta: Meta {
            n: Some(n),
            d: Some(d),
            variant,
            pact_exponent,
            l: None,
            fixture: None,
        },
        generators,
        relations,
    })
}

/// Presentation of the discriminant complement for degree-`l` forms on ℙ¹.
pub fn build_zariski(l: u32) -> Result<Presentation> {
    if l < 2 {
        return Err(Error::Domain(format!("zariski presentation needs l ≥ 2 (got {l})")));
    }
    let m = (l - 1) as usize;
    let generators = (1..=m).map(|i| format!("s_{i}")).collect();
    let mut relations = Vec::new();
    for i in 0..m {
        for j in (i + 2)..m {
            relations.push(Relation::new(
                Word::from_generators([i, j]),
                Word::from_generators([j, i]),
                RelationKind::Commutation,
            ));
        }
    }
    for i in 0..m.saturating_sub(1) {
        relations.push(Relation::new(
            Word::from_generators([i, i + 1, i]),
            Word::from_generators([i + 1, i, i + 1]),
            RelationKind::Braid,
        ));
    }
    let up = Word::from_generators(0..m);
    let down = Word::from_generators((0..m).rev());
    relations.push(Relation::new(
        up.concat(&down),
        Word::empty(),
        RelationKind::Zariski,
    ));
    Ok(Presentation {
        meta: Meta {
            n: Some(0),
            d: None,
            variant: Variant::Zariski,
            pact_exponent: None,
            l: Some(l),
            fixture: None,
        },
        generators,
        relations,
    })
}

/// `⟨σ₁, σ₂ | σ₁σ₂σ₁ = σ₂σ₁σ₂, (σ₁σ₂)⁶ = 1⟩`.
pub fn build_elliptic() -> Presentation {
    Presentation {
        meta: Meta {
            n: Some(0),
            d: None,
            variant: Variant::Elliptic,
            pact_exponent: None,
            l: None,
            fixture: None,
        },
        generators: vec!["s_1".into(), "s_2".into()],
        relations: vec![
            Relation::new(
                Word::from_generators([0, 1, 0]),
                Word::from_generators([1, 0, 1]),
                RelationKind::Braid,
            ),
            Relation::new(
                Word::from_generators([0, 1]).pow(6),
                Word::empty(),
                RelationKind::Power,
            ),
        ],
    }
}
