//! Normal forms for groups given by generators that either commute or are
//! free of each other: free groups, right-angled Artin groups and
//! right-angled Coxeter groups.
//!
//! Reduction cancels `x ... x⁻¹` whenever everything in between commutes
//! with `x`; the canonical form is then the lexicographically least word in
//! the commutation class (greedy Foata-style choice).

use std::fmt;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self::new(self.generator, !self.inverse)
    }
}

pub type Word = Vec<Letter>;

/// Reduction and coset representatives for words over `S ∪ S⁻¹`.
pub trait NormalFormOracle {
    /// Canonical form; equal group elements get equal forms.
    fn normal_form(&self, word: &[Letter]) -> Word;

    /// Canonical shortest representative of the coset `w·A_T`.
    fn coset_representative(&self, word: &[Letter], subset: &[usize]) -> Word;
}

/// Partially commutative normal forms over a symmetric commutation relation.
#[derive(Debug, Clone)]
pub struct TraceOracle {
    commute: Vec<Vec<bool>>,
    involutive: bool,
}

impl TraceOracle {
    /// Free group on `rank` generators.
    pub fn free(rank: usize) -> Self {
        Self::new(rank, &[], false)
    }

    /// Right-angled Artin group: listed pairs commute, others are free.
    pub fn right_angled_artin(rank: usize, commuting: &[(usize, usize)]) -> Self {
        Self::new(rank, commuting, false)
    }

    /// Right-angled Coxeter group: generators are involutions.
    pub fn right_angled_coxeter(rank: usize, commuting: &[(usize, usize)]) -> Self {
        Self::new(rank, commuting, true)
    }

    fn new(rank: usize, commuting: &[(usize, usize)], involutive: bool) -> Self {
        let mut commute = vec![vec![false; rank]; rank];
        for &(a, b) in commuting {
            commute[a][b] = true;
            commute[b][a] = true;
        }
        Self {
            commute,
            involutive,
        }
    }

    fn normalize_letter(&self, l: Letter) -> Letter {
        if self.involutive {
            Letter::new(l.generator, false)
        } else {
            l
        }
    }

    fn cancels(&self, a: Letter, b: Letter) -> bool {
        a.generator == b.generator && (self.involutive || a.inverse != b.inverse)
    }

    fn commutes(&self, a: Letter, b: Letter) -> bool {
        a.generator != b.generator && self.commute[a.generator][b.generator]
    }

    /// Freely and commutatively reduced word (not yet canonical).
    pub fn reduce(&self, word: &[Letter]) -> Word {
        let mut out: Word = Vec::with_capacity(word.len());
        for &raw in word {
            let x = self.normalize_letter(raw);
            let blocker = out.iter().rposition(|&y| !self.commutes(x, y));
            match blocker {
                Some(j) if self.cancels(out[j], x) => {
                    out.remove(j);
                }
                _ => out.push(x),
            }
        }
        out
    }

    /// Lexicographically least word in the commutation class.
    fn lex_min(&self, word: &[Letter]) -> Word {
        let mut rest: Vec<Letter> = word.to_vec();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let pick = (0..rest.len())
                .filter(|&i| rest[..i].iter().all(|&y| self.commutes(rest[i], y)))
                .min_by_key(|&i| rest[i])
                .expect("first letter is always available");
            out.push(rest.remove(pick));
        }
        out
    }
}

impl NormalFormOracle for TraceOracle {
    fn normal_form(&self, word: &[Letter]) -> Word {
        self.lex_min(&self.reduce(word))
    }

    fn coset_representative(&self, word: &[Letter], subset: &[usize]) -> Word {
        let mut w = self.reduce(word);
        loop {
            let movable = (0..w.len()).rev().find(|&i| {
                subset.contains(&w[i].generator)
                    && w[i + 1..]
                        .iter()
                        .all(|&y| y.generator == w[i].generator || self.commutes(w[i], y))
            });
            match movable {
                Some(i) => {
                    w.remove(i);
                }
                None => break,
            }
        }
        self.normal_form(&w)
    }
}

/// Renders a word with generator names, `^-1` for inverses and `1` for the
/// empty word.
pub struct DisplayWord<'a> {
    pub word: &'a [Letter],
    pub names: &'a [String],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(&self.names[l.generator])?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

pub fn letter_name(l: Letter, names: &[String]) -> String {
    if l.inverse {
        format!("{}^-1", names[l.generator])
    } else {
        names[l.generator].clone()
    }
}
