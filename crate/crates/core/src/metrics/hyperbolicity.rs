use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::DistanceMatrix;

/// A non-negative multiple of one half, stored exactly as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct HalfInteger {
    times2: u64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { times2: 0 };

    pub fn from_times2(times2: u64) -> Self {
        HalfInteger { times2 }
    }

    pub fn from_integer(value: u64) -> Self {
        HalfInteger { times2: 2 * value }
    }

    pub fn times2(self) -> u64 {
        self.times2
    }

    pub fn is_integer(self) -> bool {
        self.times2.is_multiple_of(2)
    }

    pub fn floor(self) -> u64 {
        self.times2 / 2
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.times2 / 2)
        } else {
            write!(f, "{}/2", self.times2)
        }
    }
}

/// Four-point hyperbolicity: the largest gap between the two largest of the
/// three pairwise distance sums, halved, over all quadruples of distinct
/// vertices. Graphs with fewer than four vertices give 0.
pub fn hyperbolicity(dm: &DistanceMatrix) -> HalfInteger {
    let n = dm.n();
    let gap = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut best = 0u64;
            for b in a + 1..n {
                let ab = u64::from(dm.get(a, b));
                for c in b + 1..n {
                    let (ac, bc) = (u64::from(dm.get(a, c)), u64::from(dm.get(b, c)));
                    for d in c + 1..n {
                        let s1 = ab + u64::from(dm.get(c, d));
                        let s2 = ac + u64::from(dm.get(b, d));
                        let s3 = u64::from(dm.get(a, d)) + bc;
                        let mut sums = [s1, s2, s3];
                        sums.sort_unstable();
                        best = best.max(sums[2] - sums[1]);
                    }
                }
            }
            best
        })
        .max()
        .unwrap_or(0);
    HalfInteger::from_times2(gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn dm(n: usize, edges: &[(usize, usize)]) -> DistanceMatrix {
        DistanceMatrix::new(&Graph::from_edges(n, edges).unwrap()).unwrap()
    }

    fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    #[test]
    fn trees_are_zero() {
        let star = dm(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(hyperbolicity(&star), HalfInteger::ZERO);
        let path = dm(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(hyperbolicity(&path), HalfInteger::ZERO);
    }

    #[test]
    fn small_cycles() {
        // C_4: sums {2+2, 1+1, 1+1}, gap 2.
        assert_eq!(hyperbolicity(&dm(4, &cycle_edges(4))).times2(), 2);
        // C_5: every quadruple leaves one vertex out; sums {2+1, 2+1, 1+1} give gap 1.
        assert_eq!(hyperbolicity(&dm(5, &cycle_edges(5))).times2(), 1);
        assert_eq!(hyperbolicity(&dm(3, &cycle_edges(3))), HalfInteger::ZERO);
    }

    #[test]
    fn display() {
        assert_eq!(HalfInteger::from_times2(3).to_string(), "3/2");
        assert_eq!(HalfInteger::from_times2(4).to_string(), "2");
        assert_eq!(HalfInteger::from_times2(5).floor(), 2);
    }
}
