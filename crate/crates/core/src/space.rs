//! Validated finite ultrametric spaces and elementary set distances.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::weight::Weight;

/// A finite ultrametric space with an exact distance matrix.
///
/// Points are identified by index; labels are display metadata. Instances
/// can only be obtained through [`UltrametricSpace::new`], which checks all
/// three axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UltrametricSpace {
    labels: Vec<String>,
    dist: Vec<Vec<Weight>>,
}

impl UltrametricSpace {
    /// Validates `matrix` and builds the space.
    ///
    /// Checks run in order: shape, symmetry, diagonal, strong triangle
    /// inequality. The error names the first violating pair `(i, j)` with
    /// `i < j` in row-major order, or the first triple `(i, j, k)` with
    /// `i < j` and `k` scanned from zero.
    pub fn new(labels: Vec<String>, matrix: Vec<Vec<Weight>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::EmptySpace);
        }
        if labels.len() != n {
            return Err(Error::LabelCount {
                expected: n,
                found: labels.len(),
            });
        }
        let mut seen = HashSet::with_capacity(n);
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        for (row, entries) in matrix.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare {
                    row,
                    expected: n,
                    found: entries.len(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                if matrix[i][j].is_zero() != (i == j) {
                    return Err(Error::BadDiagonal { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let d = matrix[i][j];
                for k in 0..n {
                    if d > matrix[i][k].max(matrix[k][j]) {
                        return Err(Error::StrongTriangleViolated { i, j, k });
                    }
                }
            }
        }
        Ok(UltrametricSpace {
            labels,
            dist: matrix,
        })
    }

    /// Builds a space with labels `x1, x2, ...`.
    pub fn with_default_labels(matrix: Vec<Vec<Weight>>) -> Result<Self> {
        let labels = (1..=matrix.len()).map(|i| format!("x{i}")).collect();
        Self::new(labels, matrix)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: empty spaces are rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a list of labels to a point set.
    pub fn point_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        let members = labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointSet::new(members))
    }

    pub fn points(&self) -> PointSet {
        PointSet::range(self.len())
    }

    pub fn d(&self, i: usize, j: usize) -> Weight {
        self.dist[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Weight>] {
        &self.dist
    }

    pub fn check_point(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                index,
                n: self.len(),
            })
        }
    }

    pub fn check_set(&self, set: &PointSet) -> Result<()> {
        match set.last() {
            None => Err(Error::EmptySet),
            Some(last) => self.check_point(last),
        }
    }

    /// Unordered pairs `(i, j, d(i, j))` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Weight)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.dist[i][j])))
    }

    /// The subspace induced by `set`, with labels carried over.
    pub fn subspace(&self, set: &PointSet) -> Result<UltrametricSpace> {
        self.check_set(set)?;
        let labels = set.iter().map(|p| self.labels[p].clone()).collect();
        let matrix = set
            .iter()
            .map(|i| set.iter().map(|j| self.dist[i][j]).collect())
            .collect();
        Ok(UltrametricSpace {
            labels,
            dist: matrix,
        })
    }

    /// Relabels points by `perm`: point `i` of the result is point
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<UltrametricSpace> {
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        let matrix = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.dist[i][j]).collect())
            .collect();
        UltrametricSpace::new(labels, matrix)
    }
}

/// The sorted set of distinct distances, including zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<Weight>,
}

impl Spectrum {
    pub fn values(&self) -> &[Weight] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.values.binary_search(w).is_ok()
    }

    /// Largest value, equal to the diameter of the space.
    pub fn max(&self) -> Weight {
        *self.values.last().expect("spectrum of a nonempty space")
    }
}

pub fn spectrum(space: &UltrametricSpace) -> Spectrum {
    let mut values: BTreeSet<Weight> = space.pairs().map(|(_, _, w)| w).collect();
    values.insert(Weight::ZERO);
    Spectrum {
        values: values.into_iter().collect(),
    }
}

/// Number of unordered point pairs at each nonzero distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multispectrum {
    pub pairs: BTreeMap<Weight, usize>,
}

impl Multispectrum {
    pub fn count(&self, w: &Weight) -> usize {
        self.pairs.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.pairs.values().sum()
    }
}

pub fn multispectrum(space: &UltrametricSpace) -> Multispectrum {
    let mut pairs = BTreeMap::new();
    for (_, _, w) in space.pairs() {
        *pairs.entry(w).or_insert(0) += 1;
    }
    Multispectrum { pairs }
}

/// A sorted, duplicate-free set of point indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet {
    members: Vec<usize>,
}

impl PointSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> PointSet {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        PointSet { members }
    }

    pub fn singleton(point: usize) -> PointSet {
        PointSet {
            members: vec![point],
        }
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn range(n: usize) -> PointSet {
        PointSet {
            members: (0..n).collect(),
        }
    }

    /// Members of `{0, ..., n - 1}` whose bit is set in `mask`.
    pub fn from_mask(mask: u64) -> PointSet {
        PointSet {
            members: (0..64).filter(|b| mask >> b & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.members.binary_search(&point).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        self.iter().any(|p| other.contains(p))
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet {
            members: self.iter().filter(|&p| !other.contains(p)).collect(),
        }
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> PointSet {
        PointSet::new(iter)
    }
}

/// `min d(a, b)` over `a` in `a_set`, `b` in `b_set`.
pub fn set_distance(space: &UltrametricSpace, a_set: &PointSet, b_set: &PointSet) -> Result<Weight> {
    space.check_set(a_set)?;
    space.check_set(b_set)?;
    let min = a_set
        .iter()
        .flat_map(|a| b_set.iter().map(move |b| space.d(a, b)))
        .min();
    Ok(min.expect("both sets are nonempty"))
}

/// `max d(a, b)` over pairs in `set`; zero for a singleton.
pub fn diameter(space: &UltrametricSpace, set: &PointSet) -> Result<Weight> {
    space.check_set(set)?;
    let pts = set.as_slice();
    let mut best = Weight::ZERO;
    for (k, &a) in pts.iter().enumerate() {
        for &b in &pts[k + 1..] {
            best = best.max(space.d(a, b));
        }
    }
    Ok(best)
}
