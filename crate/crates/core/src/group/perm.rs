//! Permutations in cycle notation, as used by `perm:<path>` group specs.

use std::path::Path;

use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(pub Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `(self * other)(i) = self(other(i))`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    fn padded(mut self, degree: usize) -> Self {
        let n = self.0.len() as u32;
        self.0.extend(n..degree as u32);
        self
    }

    /// Builds from disjoint cycles over points `1..=degree`.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::Permutation(format!("point {p} outside 1..={degree}")));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::Permutation(format!("point {p} repeated")));
                }
                let next = cycle[(i + 1) % cycle.len()];
                img[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation(img))
    }
}

/// Parses one line of cycle notation, e.g. `(1 2 3)(4,5)` or `()`.
pub fn parse_cycles(line: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Permutation(format!("expected '(' in {line:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Permutation(format!("unclosed cycle in {line:?}")))?;
        let points = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Permutation(format!("bad point {t:?} in {line:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses generator lines (blank lines and `#` comments skipped); all
/// generators share the degree given by the largest point mentioned.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let lines: Vec<Vec<Vec<usize>>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_cycles)
        .collect::<Result<_>>()?;
    if lines.is_empty() {
        return Err(Error::Permutation("no generators".into()));
    }
    let degree = lines.iter().flatten().flatten().copied().max().unwrap_or(1).max(1);
    lines
        .iter()
        .map(|c| Permutation::from_cycles(c, degree).map(|p| p.padded(degree)))
        .collect()
}

pub fn parse_perm_file(path: &Path) -> Result<Vec<Permutation>> {
    parse_generators(&std::fs::read_to_string(path)?)
}
