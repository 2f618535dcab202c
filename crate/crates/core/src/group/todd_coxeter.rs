//! HLT coset enumeration with coincidence processing.

use std::collections::VecDeque;

use serde::Serialize;

use crate::presentation::{Presentation, Word};

const UNDEF: usize = usize::MAX;

/// A closed coset table on live cosets `0..index`. Column `2g` is the action
/// of generator `g`, column `2g + 1` that of its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub generators: usize,
    pub rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    /// Image of coset `c` under a word, acting on the right.
    pub fn act(&self, c: usize, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(c, |c, l| self.rows[c][column(l.generator(), l.is_inverse())])
    }

    /// Every relator fixes every coset.
    pub fn satisfies(&self, relators: &[Word]) -> bool {
        (0..self.index()).all(|c| relators.iter().all(|r| self.act(c, r) == c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CosetOutcome {
    Closed(CosetTable),
    /// Capacity was reached. Says nothing about finiteness.
    Exceeded { defined: usize },
}

impl CosetOutcome {
    pub fn index(&self) -> Option<usize> {
        match self {
            CosetOutcome::Closed(t) => Some(t.index()),
            CosetOutcome::Exceeded { .. } => None,
        }
    }
}

fn column(g: usize, inverse: bool) -> usize {
    2 * g + inverse as usize
}

fn inverse_column(x: usize) -> usize {
    x ^ 1
}

struct Overflow;

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    max_cosets: usize,
}

impl Enumerator {
    fn new(generators: usize, max_cosets: usize) -> Self {
        let cols = 2 * generators;
        Enumerator {
            cols,
            table: vec![vec![UNDEF; cols]],
            parent: vec![0],
            max_cosets,
        }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, Overflow> {
        if self.table.len() >= self.max_cosets {
            return Err(Overflow);
        }
        let b = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(b);
        self.table[c][x] = b;
        self.table[b][inverse_column(x)] = c;
        Ok(b)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (keep, kill) = (ra.min(rb), ra.max(rb));
            self.parent[kill] = keep;
            queue.push_back(kill);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for x in 0..self.cols {
                let target = self.table[dead][x];
                if target == UNDEF {
                    continue;
                }
                let xi = inverse_column(x);
                if self.table[target][xi] == dead {
                    self.table[target][xi] = UNDEF;
                }
                let mu = self.rep(dead);
                let nu = self.rep(target);
                if self.table[mu][x] != UNDEF {
                    let other = self.table[mu][x];
                    self.merge(nu, other, &mut queue);
                } else if self.table[nu][xi] != UNDEF {
                    let other = self.table[nu][xi];
                    self.merge(mu, other, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][xi] = mu;
                }
            }
        }
    }

    /// Scans `word` from coset `c`, defining new cosets where the scan stalls.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), Overflow> {
        let (mut f, mut b) = (c, c);
        let mut i = 0isize;
        let mut j = word.len() as isize - 1;
        loop {
            while i <= j && self.table[f][word[i as usize]] != UNDEF {
                f = self.table[f][word[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inverse_column(word[j as usize])] != UNDEF {
                b = self.table[b][inverse_column(word[j as usize])];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.table[f][x] = b;
                self.table[b][inverse_column(x)] = f;
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }

    fn compact(&mut self, generators: usize) -> CosetTable {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.live(c)).collect();
        let mut renumber = vec![UNDEF; self.table.len()];
        for (k, &c) in live.iter().enumerate() {
            renumber[c] = k;
        }
        let reps: Vec<usize> = (0..self.table.len()).map(|c| self.rep(c)).collect();
        let rows = live
            .iter()
            .map(|&c| self.table[c].iter().map(|&t| renumber[reps[t]]).collect())
            .collect();
        CosetTable { generators, rows }
    }
}

fn columns(w: &Word) -> Vec<usize> {
    w.letters()
        .iter()
        .map(|l| column(l.generator(), l.is_inverse()))
        .collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words`.
/// Deterministic: cosets are processed in creation order and every relator is
/// scanned from each live coset before its row is completed.
pub fn todd_coxeter(p: &Presentation, subgroup_words: &[Word], max_cosets: usize) -> CosetOutcome {
    let generators = p.generators.len();
    let relators: Vec<Vec<usize>> = p
        .relations
        .iter()
        .map(|r| columns(&r.relator().free_reduce()))
        .filter(|w| !w.is_empty())
        .collect();
    let mut e = Enumerator::new(generators, max_cosets.max(1));
    let overflow = |e: &Enumerator| CosetOutcome::Exceeded {
        defined: e.table.len(),
    };

    for w in subgroup_words {
        if e.scan_and_fill(0, &columns(&w.free_reduce())).is_err() {
            return overflow(&e);
        }
    }
    let mut c = 0;
    while c < e.table.len() {
        for r in &relators {
            if !e.live(c) {
                break;
            }
            if e.scan_and_fill(c, r).is_err() {
                return overflow(&e);
            }
        }
        for x in 0..e.cols {
            if !e.live(c) {
                break;
            }
            if e.table[c][x] == UNDEF && e.define(c, x).is_err() {
                return overflow(&e);
            }
        }
        c += 1;
    }
    CosetOutcome::Closed(e.compact(generators))
}
