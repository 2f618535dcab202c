//! Independent oracles for finite presentations: abelianization through the
//! Smith normal form, evaluation of relators on integer matrices, finite
//! matrix-group closure, and coset enumeration.

mod matrix;
mod snf;
mod todd_coxeter;

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::util::bigint_list;

pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};
pub use todd_coxeter::{todd_coxeter, CosetOutcome, CosetTable};

/// Invariant factors of a finitely generated abelian group, `0` standing for ℤ.
/// Torsion factors come first in divisibility order, then the zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AbelianInvariants {
    #[serde(with = "bigint_list")]
    pub factors: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|f| f.is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Some(k)` when the group is cyclic of order `k` (0 for infinite cyclic).
    pub fn cyclic_order(&self) -> Option<BigInt> {
        match self.factors.as_slice() {
            [] => Some(BigInt::one()),
            [f] => Some(f.clone()),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.factors
            .iter()
            .map(|f| i64::try_from(f).expect("invariant factor fits i64"))
            .collect()
    }
}

/// Exponent-sum matrix: one row per relation, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = p
        .relations
        .iter()
        .map(|r| r.relator().exponent_sums(p.generators.len()))
        .collect();
    if rows.is_empty() {
        return IntegerMatrix::zeros(0, p.generators.len());
    }
    IntegerMatrix::from_rows(&rows)
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let snf = smith_normal_form(&relation_matrix(p));
    let mut factors: Vec<BigInt> = snf
        .diagonal
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    factors.extend(std::iter::repeat_n(BigInt::zero(), p.generators.len() - snf.rank));
    AbelianInvariants { factors }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub index: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub relations: Vec<RelationCheck>,
    pub all_hold: bool,
}

struct Evaluator<'a> {
    images: &'a [IntegerMatrix],
    inverses: Vec<Option<IntegerMatrix>>,
    modulus: Option<&'a BigInt>,
    dim: usize,
}

impl<'a> Evaluator<'a> {
    fn new(images: &'a [IntegerMatrix], modulus: Option<&'a BigInt>) -> Result<Self> {
        let dim = images.first().map_or(0, IntegerMatrix::rows);
        if images.iter().any(|m| !m.is_square() || m.rows() != dim) {
            return Err(Error::DimensionMismatch(
                "generator images must be square matrices of one size".into(),
            ));
        }
        Ok(Evaluator {
            images,
            inverses: vec![None; images.len()],
            modulus,
            dim,
        })
    }

    fn inverse(&mut self, g: usize) -> Result<&IntegerMatrix> {
        if self.inverses[g].is_none() {
            let inv = match self.modulus {
                Some(m) => self.images[g].inverse_mod(m)?,
                None => self.images[g].inverse()?,
            };
            self.inverses[g] = Some(inv);
        }
        Ok(self.inverses[g].as_ref().expect("just filled"))
    }

    fn eval(&mut self, w: &Word) -> Result<IntegerMatrix> {
        let mut acc = IntegerMatrix::identity(self.dim);
        for l in w.letters() {
            let m = if l.is_inverse() {
                self.inverse(l.generator())?.clone()
            } else {
                self.images[l.generator()].clone()
            };
            acc = acc.mul(&m)?;
            if let Some(md) = self.modulus {
                acc = acc.reduce_mod(md);
            }
        }
        Ok(acc)
    }
}

/// Evaluates both sides of every relation on the given generator images,
/// exactly or modulo `modulus`.
pub fn check_representation(
    p: &Presentation,
    images: &[IntegerMatrix],
    modulus: Option<&BigInt>,
) -> Result<RepresentationReport> {
    if images.len() != p.generators.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} generators",
            images.len(),
            p.generators.len()
        )));
    }
    if let Some(m) = modulus {
        if *m < BigInt::from(2) {
            return Err(Error::Domain(format!("modulus must be at least 2 (got {m})")));
        }
    }
    let mut eval = Evaluator::new(images, modulus)?;
    let mut relations = Vec::with_capacity(p.relations.len());
    for (index, r) in p.relations.iter().enumerate() {
        let lhs = eval.eval(&r.lhs)?;
        let rhs = eval.eval(&r.rhs)?;
        relations.push(RelationCheck {
            index,
            holds: lhs == rhs,
        });
    }
    let all_hold = relations.iter().all(|c| c.holds);
    Ok(RepresentationReport {
        relations,
        all_hold,
    })
}

/// Evaluates a single word on the given images (exact arithmetic).
pub fn evaluate_word(images: &[IntegerMatrix], w: &Word) -> Result<IntegerMatrix> {
    Evaluator::new(images, None)?.eval(w)
}

/// Order of the subgroup of `GL(k, ℤ/m)` generated by the given matrices,
/// by breadth-first closure from the identity.
pub fn matrix_group_closure(generators: &[IntegerMatrix], modulus: u64, cap: usize) -> Result<usize> {
    if modulus < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2 (got {modulus})")));
    }
    let dim = generators.first().map_or(0, IntegerMatrix::rows);
    if generators.iter().any(|g| !g.is_square() || g.rows() != dim) {
        return Err(Error::DimensionMismatch(
            "closure generators must be square matrices of one size".into(),
        ));
    }
    let m = BigInt::from(modulus);
    let flat = |x: &IntegerMatrix| -> Vec<u64> {
        (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .map(|ij| u64::try_from(&x[ij]).expect("reduced entry"))
            .collect()
    };
    let gens: Vec<Vec<u64>> = generators.iter().map(|g| flat(&g.reduce_mod(&m))).collect();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let x = a[i * dim + k] as u128;
                if x == 0 {
                    continue;
                }
                for j in 0..dim {
                    let cell = &mut out[i * dim + j];
                    *cell = ((*cell as u128 + x * b[k * dim + j] as u128) % modulus as u128) as u64;
                }
            }
        }
        out
    };

    let identity = flat(&IntegerMatrix::identity(dim));
    let mut seen: HashSet<Vec<u64>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen.len())
}

/// `σ₁ ↦ [[1,1],[0,1]]`, `σ₂ ↦ [[1,0],[−1,1]]`.
pub fn sl2_images() -> Vec<IntegerMatrix> {
    vec![
        IntegerMatrix::from_rows(&[vec![1, 1], vec![0, 1]]),
        IntegerMatrix::from_rows(&[vec![1, 0], vec![-1, 1]]),
    ]
}
