//! Relations and correspondences between two finite metric spaces,
//! distortion, the max-metric Hausdorff distance on relation space, and the
//! exhaustive correspondence enumerator used as a brute-force oracle.

use thiserror::Error;

use crate::metric::DistanceSpace;

/// Grid-cell cap for exhaustive enumeration (2^20 subsets worst case).
pub const ENUMERATION_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RelationError {
    #[error("relation is empty")]
    Empty,
    #[error("pair ({i},{j}) out of range for spaces of {n_left} and {n_right} points")]
    OutOfRange {
        i: usize,
        j: usize,
        n_left: usize,
        n_right: usize,
    },
    #[error("relation is not surjective onto the {side} space: index {index} unmatched")]
    NotSurjective { side: &'static str, index: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("enumeration grid of {cells} cells exceeds the cap of {cap}")]
pub struct CapExceeded {
    pub cells: usize,
    pub cap: usize,
}

/// A nonempty set of index pairs between two spaces, kept sorted and
/// deduplicated. The spaces themselves are passed to the operations that
/// need distances; the relation only retains their sizes for range checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n_left: usize,
    n_right: usize,
    pairs: Vec<(usize, usize)>,
}

impl Relation {
    pub fn new(
        n_left: usize,
        n_right: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, RelationError> {
        let mut v: Vec<(usize, usize)> = pairs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(RelationError::Empty);
        }
        if let Some(&(i, j)) = v.iter().find(|&&(i, j)| i >= n_left || j >= n_right) {
            return Err(RelationError::OutOfRange {
                i,
                j,
                n_left,
                n_right,
            });
        }
        Ok(Self {
            n_left,
            n_right,
            pairs: v,
        })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True iff both coordinate projections cover all indices.
    pub fn is_correspondence(&self) -> bool {
        let mut left = vec![false; self.n_left];
        let mut right = vec![false; self.n_right];
        for &(i, j) in &self.pairs {
            left[i] = true;
            right[j] = true;
        }
        left.into_iter().all(|b| b) && right.into_iter().all(|b| b)
    }
}

/// A relation whose projections onto both spaces are surjective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    rel: Relation,
}

impl Correspondence {
    pub fn new(
        n_left: usize,
        n_right: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, RelationError> {
        Self::from_relation(Relation::new(n_left, n_right, pairs)?)
    }

    pub fn from_relation(rel: Relation) -> Result<Self, RelationError> {
        let mut left = vec![false; rel.n_left];
        let mut right = vec![false; rel.n_right];
        for &(i, j) in &rel.pairs {
            left[i] = true;
            right[j] = true;
        }
        if let Some(index) = left.iter().position(|&b| !b) {
            return Err(RelationError::NotSurjective {
                side: "left",
                index,
            });
        }
        if let Some(index) = right.iter().position(|&b| !b) {
            return Err(RelationError::NotSurjective {
                side: "right",
                index,
            });
        }
        Ok(Self { rel })
    }

    /// The identity correspondence of a space with itself.
    pub fn identity(n: usize) -> Self {
        Self {
            rel: Relation {
                n_left: n,
                n_right: n,
                pairs: (0..n).map(|i| (i, i)).collect(),
            },
        }
    }

    /// The full product correspondence.
    pub fn full(n_left: usize, n_right: usize) -> Self {
        Self {
            rel: Relation {
                n_left,
                n_right,
                pairs: (0..n_left)
                    .flat_map(|i| (0..n_right).map(move |j| (i, j)))
                    .collect(),
            },
        }
    }

    pub fn transposed(&self) -> Self {
        let mut pairs: Vec<(usize, usize)> =
            self.rel.pairs.iter().map(|&(i, j)| (j, i)).collect();
        pairs.sort_unstable();
        Self {
            rel: Relation {
                n_left: self.rel.n_right,
                n_right: self.rel.n_left,
                pairs,
            },
        }
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.rel.pairs
    }

    pub fn n_left(&self) -> usize {
        self.rel.n_left
    }

    pub fn n_right(&self) -> usize {
        self.rel.n_right
    }

    pub fn len(&self) -> usize {
        self.rel.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Distortion of a relation: max over pairs of pairs of ||xx'| - |yy'||.
///
/// Zero for singleton relations. No summation occurs, so the value is an
/// exact max of exact differences of stored distances.
pub fn distortion<X: DistanceSpace, Y: DistanceSpace>(x: &X, y: &Y, rel: &Relation) -> f64 {
    debug_assert_eq!(x.len(), rel.n_left);
    debug_assert_eq!(y.len(), rel.n_right);
    let pairs = rel.pairs();
    let mut dis = 0.0f64;
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(i2, j2) in &pairs[a + 1..] {
            dis = dis.max((x.dist(i, i2) - y.dist(j, j2)).abs());
        }
    }
    dis
}

/// Hausdorff distance between two relations' pair sets under the product
/// max-metric |(x,y)(x',y')| = max(|xx'|, |yy'|).
pub fn relation_distance<X: DistanceSpace, Y: DistanceSpace>(
    x: &X,
    y: &Y,
    a: &Relation,
    b: &Relation,
) -> f64 {
    debug_assert_eq!(a.n_left, b.n_left);
    debug_assert_eq!(a.n_right, b.n_right);
    let side = |from: &Relation, to: &Relation| {
        from.pairs()
            .iter()
            .map(|&(i, j)| {
                to.pairs()
                    .iter()
                    .map(|&(i2, j2)| x.dist(i, i2).max(y.dist(j, j2)))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max)
    };
    side(a, b).max(side(b, a))
}

/// Enumerates every correspondence between spaces of `n` and `m` points,
/// each exactly once, as subsets of the n x m index grid with both
/// projections surjective. Requires n*m <= [`ENUMERATION_CAP`].
pub fn enumerate_correspondences(
    n: usize,
    m: usize,
) -> Result<CorrespondenceIter, CapExceeded> {
    let cells = n * m;
    if cells > ENUMERATION_CAP {
        return Err(CapExceeded {
            cells,
            cap: ENUMERATION_CAP,
        });
    }
    let row_masks: Vec<u32> = (0..n).map(|i| ((1u32 << m) - 1) << (i * m)).collect();
    let col_masks: Vec<u32> = (0..m)
        .map(|j| (0..n).fold(0u32, |acc, i| acc | (1 << (i * m + j))))
        .collect();
    Ok(CorrespondenceIter {
        n,
        m,
        mask: 0,
        end: 1u32 << cells,
        row_masks,
        col_masks,
    })
}

pub struct CorrespondenceIter {
    n: usize,
    m: usize,
    mask: u32,
    end: u32,
    row_masks: Vec<u32>,
    col_masks: Vec<u32>,
}

impl Iterator for CorrespondenceIter {
    type Item = Correspondence;

    fn next(&mut self) -> Option<Correspondence> {
        loop {
            self.mask += 1;
            if self.mask >= self.end {
                return None;
            }
            let mask = self.mask;
            if self.row_masks.iter().any(|&r| mask & r == 0) {
                continue;
            }
            if self.col_masks.iter().any(|&c| mask & c == 0) {
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..self.n * self.m)
                .filter(|&cell| mask & (1 << cell) != 0)
                .map(|cell| (cell / self.m, cell % self.m))
                .collect();
            return Some(Correspondence {
                rel: Relation {
                    n_left: self.n,
                    n_right: self.m,
                    pairs,
                },
            });
        }
    }
}
