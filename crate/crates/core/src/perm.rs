//! Permutations of `{1, …, r}` and their lexicographic numbering.
//!
//! Products follow function composition: `p.compose(&q)` applies `q` first.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, r}` stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images: images[i] = τ(i + 1) - 1
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds from a 1-based image vector `(τ(1), …, τ(r))`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let r = images.len();
        if r > u8::MAX as usize {
            return Err(Error::usage(format!("degree {r} too large")));
        }
        let mut seen = vec![false; r];
        let mut out = Vec::with_capacity(r);
        for &x in images {
            if x == 0 || x > r || seen[x - 1] {
                return Err(Error::usage(format!(
                    "{images:?} is not a permutation of 1..={r}"
                )));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds from disjoint cycles written 1-based, e.g. `&[&[1, 2], &[3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x > degree || y == 0 || y > degree || touched[x - 1] {
                    return Err(Error::usage(format!("bad cycle {cycle:?} in S{degree}")));
                }
                touched[x - 1] = true;
                images[x - 1] = y;
            }
        }
        Permutation::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 1-based image vector.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw_images(&self) -> &[u8] {
        &self.images
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// 1-based position in the lexicographic order of image vectors.
    pub fn lex_rank(&self) -> usize {
        let r = self.degree();
        let mut rank = 0usize;
        for i in 0..r {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank += smaller_later * factorial(r - 1 - i);
        }
        rank + 1
    }

    /// Inverse of [`Permutation::lex_rank`]; `rank` runs over `1..=r!`.
    pub fn lex_unrank(degree: usize, rank: usize) -> Result<Self> {
        let total = factorial(degree);
        if rank == 0 || rank > total {
            return Err(Error::usage(format!(
                "lex index {rank} out of range 1..={total} for S{degree}"
            )));
        }
        let mut rest = rank - 1;
        let mut pool: Vec<u8> = (0..degree as u8).collect();
        let mut images = Vec::with_capacity(degree);
        for i in (0..degree).rev() {
            let f = factorial(i);
            images.push(pool.remove(rest / f));
            rest %= f;
        }
        Ok(Permutation { images })
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() > 9 { " " } else { "" };
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
