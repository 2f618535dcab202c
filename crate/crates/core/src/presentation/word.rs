use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator reference with exponent `+1` or `-1`. Serializes as `[gid, ±1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, i8)", into = "(usize, i8)")]
pub struct Letter {
    generator: usize,
    inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn neg(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn generator(self) -> usize {
        self.generator
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl TryFrom<(usize, i8)> for Letter {
    type Error = String;

    fn try_from((generator, sign): (usize, i8)) -> Result<Self, Self::Error> {
        match sign {
            1 => Ok(Letter::pos(generator)),
            -1 => Ok(Letter::neg(generator)),
            other => Err(format!("letter exponent must be ±1, got {other}")),
        }
    }
}

impl From<Letter> for (usize, i8) {
    fn from(l: Letter) -> Self {
        (l.generator, l.sign())
    }
}

/// A word in a free group, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Product of the given generators, all with exponent `+1`.
    pub fn from_generators(gens: impl IntoIterator<Item = usize>) -> Self {
        Word(gens.into_iter().map(Letter::pos).collect())
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

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Freely reduces, then strips inverse pairs from the two ends.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.free_reduce().0;
        let (mut lo, mut hi) = (0, reduced.len());
        while hi - lo >= 2 && reduced[lo].cancels(reduced[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word(reduced[lo..hi].to_vec())
    }

    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; generators];
        for l in &self.0 {
            sums[l.generator] += l.sign() as i64;
        }
        sums
    }

    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter {
                    generator: f(l.generator),
                    inverse: l.inverse,
                })
                .collect(),
        )
    }

    /// Whether the two words define conjugate elements of the free group.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let a = self.cyclic_reduce().0;
        let b = other.cyclic_reduce().0;
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|shift| a[shift..].iter().chain(&a[..shift]).eq(b.iter()))
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("g{}^-1", l.generator)
                } else {
                    format!("g{}", l.generator)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
