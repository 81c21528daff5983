//! Homological equivalence classes, counted three independent ways.
//!
//! A class of order `n` corresponds to a closed lattice path of length `2n`
//! from `(1, 1)` to itself whose every point stays in the open first
//! quadrant (both coordinates >= 1). The routes:
//!
//! - [`count_good_paths_dp`]: forward dynamic programming over the confined
//!   walk, the most elementary route;
//! - [`count_good_paths_reflection`]: the four-term binomial expression
//!   obtained from the reflection principle;
//! - [`count_homology_classes`]: the closed form `C_{m+1} C_m`.

use crate::combinat::{binom, catalan};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Unit step of a lattice path, in the fixed enumeration order
/// East, North, West, South.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Step {
    East,
    North,
    West,
    South,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::East, Step::North, Step::West, Step::South];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::East => (1, 0),
            Step::North => (0, 1),
            Step::West => (-1, 0),
            Step::South => (0, -1),
        }
    }

    /// Reflection in the diagonal: E <-> N, W <-> S.
    pub fn diagonal_mirror(self) -> Step {
        match self {
            Step::East => Step::North,
            Step::North => Step::East,
            Step::West => Step::South,
            Step::South => Step::West,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
            Step::West => 'W',
            Step::South => 'S',
        }
    }
}

/// Lattice path with unit steps, anchored at a start point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Every point visited, including the start.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = vec![self.start];
        let (mut x, mut y) = self.start;
        for s in &self.steps {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            pts.push((x, y));
        }
        pts
    }

    /// A path is good when every point has both coordinates >= 1.
    pub fn is_good(&self) -> bool {
        self.points().iter().all(|&(x, y)| x >= 1 && y >= 1)
    }

    pub fn is_closed(&self) -> bool {
        *self.points().last().unwrap() == self.start
    }

    /// The path with every step reflected in the diagonal `x = y`.
    pub fn diagonal_mirror(&self) -> LatticePath {
        LatticePath {
            start: (self.start.1, self.start.0),
            steps: self.steps.iter().map(|s| s.diagonal_mirror()).collect(),
        }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// Number of closed length-`2n` paths from `(1, 1)` confined to the open
/// first quadrant, by forward dynamic programming. Positions never exceed
/// coordinate `2n + 1`, so the table is finite.
pub fn count_good_paths_dp(n: u64) -> BigInt {
    let bound = (2 * n + 1) as usize;
    let idx = |x: usize, y: usize| (x - 1) * bound + (y - 1);
    let mut cur = vec![BigInt::zero(); bound * bound];
    cur[idx(1, 1)] = BigInt::from(1);
    for _ in 0..2 * n {
        let mut next = vec![BigInt::zero(); bound * bound];
        for x in 1..=bound {
            for y in 1..=bound {
                let c = &cur[idx(x, y)];
                if c.is_zero() {
                    continue;
                }
                for s in Step::ALL {
                    let (dx, dy) = s.delta();
                    let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                    if nx >= 1 && ny >= 1 && nx <= bound as i64 && ny <= bound as i64 {
                        next[idx(nx as usize, ny as usize)] += c;
                    }
                }
            }
        }
        cur = next;
    }
    cur[idx(1, 1)].clone()
}

/// The same count through the reflection principle:
/// `a - b + 2c + d` with
/// `a = C(2m, m+2) C(2m, m)`, `b = C(2m+2, m+1) C(2m, m+1)`,
/// `c = C(2m, m) C(2m, m+1)`, `d = C(2m, m)^2`.
pub fn count_good_paths_reflection(m: u64) -> BigInt {
    let m = m as i64;
    let a = binom(2 * m, m + 2) * binom(2 * m, m);
    let b = binom(2 * m + 2, m + 1) * binom(2 * m, m + 1);
    let c = binom(2 * m, m) * binom(2 * m, m + 1);
    let d = binom(2 * m, m) * binom(2 * m, m);
    a - b + 2 * c + d
}

/// Closed form `C_{m+1} C_m` for the number of homological classes of
/// order `m`.
pub fn count_homology_classes(m: u64) -> BigInt {
    catalan(m + 1) * catalan(m)
}

/// Default cutoff for explicit path enumeration (the listing grows like
/// `C_{n+1} C_n`).
pub const ENUMERATION_CUTOFF: u64 = 6;

/// Error returned when an explicit enumeration would be too large.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTooLarge {
    pub requested: u64,
    pub cutoff: u64,
}

impl fmt::Display for EnumerationTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "enumeration of order {} exceeds the cutoff {}",
            self.requested, self.cutoff
        )
    }
}

impl std::error::Error for EnumerationTooLarge {}

/// Every good closed path of length `2n` from `(1, 1)`, in lexicographic
/// order of the step sequence (E < N < W < S).
pub fn enumerate_good_paths(n: u64) -> Result<Vec<LatticePath>, EnumerationTooLarge> {
    if n > ENUMERATION_CUTOFF {
        return Err(EnumerationTooLarge {
            requested: n,
            cutoff: ENUMERATION_CUTOFF,
        });
    }
    let len = 2 * n as usize;
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::with_capacity(len);
    fn rec(pos: (i64, i64), len: usize, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if steps.len() == len {
            if pos == (1, 1) {
                out.push(LatticePath {
                    start: (1, 1),
                    steps: steps.clone(),
                });
            }
            return;
        }
        let remaining = (len - steps.len()) as i64;
        if (pos.0 - 1).abs() + (pos.1 - 1).abs() > remaining {
            return; // cannot return to (1, 1) in time
        }
        for s in Step::ALL {
            let (dx, dy) = s.delta();
            let next = (pos.0 + dx, pos.1 + dy);
            if next.0 >= 1 && next.1 >= 1 {
                steps.push(s);
                rec(next, len, steps, out);
                steps.pop();
            }
        }
    }
    rec((1, 1), len, &mut steps, &mut out);
    Ok(out)
}

/// Number of homological classes of Morse functions on the circle with
/// `2m + 2` critical points: the Catalan number `C_{m+1}`, which also equals
/// `C(2m, m) - C(2m, m+2)` and the walk count of [`circle_walk_dp`].
pub fn count_circle_homology_classes(m: u64) -> BigInt {
    catalan(m + 1)
}

/// One-dimensional oracle for the circle count: walks of length `2m` with
/// steps of size one, from 1 to 1, confined to the nonnegative integers.
pub fn circle_walk_dp(m: u64) -> BigInt {
    let bound = (2 * m + 2) as usize;
    let mut cur = vec![BigInt::zero(); bound];
    cur[1] = BigInt::from(1);
    for _ in 0..2 * m {
        let mut next = vec![BigInt::zero(); bound];
        for x in 0..bound {
            if cur[x].is_zero() {
                continue;
            }
            if x + 1 < bound {
                next[x + 1] += &cur[x];
            }
            if x > 0 {
                next[x - 1] += &cur[x];
            }
        }
        cur = next;
    }
    cur[1].clone()
}
