//! Random and hand-built ultrametric spaces.
//!
//! A space is described by a labeled rooted tree whose labels strictly
//! decrease towards the leaves; the distance between two points is the
//! label of their lowest common ancestor. Any such tree yields a valid
//! ultrametric, and its representing tree is the tree itself.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::space::UltrametricSpace;
use crate::weight::Weight;

/// Labeled rooted tree used to construct a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hierarchy {
    Leaf,
    Node { label: Weight, children: Vec<Hierarchy> },
}

impl Hierarchy {
    pub fn node(label: impl Into<Weight>, children: Vec<Hierarchy>) -> Hierarchy {
        Hierarchy::Node {
            label: label.into(),
            children,
        }
    }

    /// A node whose children are all leaves.
    pub fn star(label: impl Into<Weight>, leaves: usize) -> Hierarchy {
        Hierarchy::node(label, vec![Hierarchy::Leaf; leaves])
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Hierarchy::Leaf => 1,
            Hierarchy::Node { children, .. } => children.iter().map(Hierarchy::leaf_count).sum(),
        }
    }

    /// Builds the space with points numbered by a left-to-right walk over
    /// the leaves and labeled `x1, x2, ...`.
    pub fn to_space(&self) -> Result<UltrametricSpace> {
        let n = self.leaf_count();
        let mut matrix = vec![vec![Weight::ZERO; n]; n];
        self.fill(0, None, &mut matrix)?;
        UltrametricSpace::with_default_labels(matrix)
    }

    /// Writes the distances of this subtree, whose leaves start at `first`.
    /// Returns the number of leaves.
    fn fill(&self, first: usize, upper: Option<Weight>, matrix: &mut [Vec<Weight>]) -> Result<usize> {
        let (label, children) = match self {
            Hierarchy::Leaf => return Ok(1),
            Hierarchy::Node { label, children } => (*label, children),
        };
        if children.len() < 2 {
            return Err(Error::InvalidSpec("internal node with fewer than two children".into()));
        }
        if label.is_zero() || upper.is_some_and(|u| label >= u) {
            return Err(Error::InvalidSpec(format!(
                "label {label} must be positive and below its parent's"
            )));
        }
        let mut starts = Vec::with_capacity(children.len() + 1);
        let mut next = first;
        for child in children {
            starts.push(next);
            next += child.fill(next, Some(label), matrix)?;
        }
        starts.push(next);
        for a in 0..children.len() {
            for b in a + 1..children.len() {
                for i in starts[a]..starts[a + 1] {
                    for j in starts[b]..starts[b + 1] {
                        matrix[i][j] = label;
                        matrix[j][i] = label;
                    }
                }
            }
        }
        Ok(next - first)
    }
}

/// Parameters for [`generate_space`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub n: usize,
    /// Candidate distances; duplicates are ignored.
    pub label_pool: Vec<Weight>,
    /// Maximum number of children of an internal node.
    pub branching: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    /// Integer labels `1..=n` and branching 3.
    pub fn new(n: usize, seed: u64) -> GeneratorSpec {
        GeneratorSpec {
            n,
            label_pool: (1..=n.max(1) as u64).map(Weight::from).collect(),
            branching: 3,
            seed,
        }
    }
}

/// Smallest `h` with `branching^h >= m`: the fewest strictly decreasing
/// labels a subtree with `m` leaves can get by with.
fn levels_needed(m: usize, branching: usize) -> usize {
    let mut h = 0;
    let mut reach = 1usize;
    while reach < m {
        reach = reach.saturating_mul(branching);
        h += 1;
    }
    h
}

/// Draws a random labeled tree under `spec` and returns its space.
///
/// The same spec always produces the same space.
pub fn generate_space(spec: &GeneratorSpec) -> Result<UltrametricSpace> {
    if spec.n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    if spec.branching < 2 {
        return Err(Error::InvalidSpec("branching must be at least 2".into()));
    }
    let mut pool = spec.label_pool.clone();
    pool.sort();
    pool.dedup();
    if pool.iter().any(Weight::is_zero) {
        return Err(Error::InvalidSpec("labels must be positive".into()));
    }
    if levels_needed(spec.n, spec.branching) > pool.len() {
        return Err(Error::InvalidSpec(format!(
            "{} labels with branching {} cannot separate {} points",
            pool.len(),
            spec.branching,
            spec.n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let hierarchy = grow(spec.n, pool.len(), &pool, spec.branching, &mut rng);
    let tree_space = hierarchy.to_space()?;
    let mut perm: Vec<usize> = (0..spec.n).collect();
    perm.shuffle(&mut rng);
    let matrix = perm
        .iter()
        .map(|&i| perm.iter().map(|&j| tree_space.d(i, j)).collect())
        .collect();
    UltrametricSpace::with_default_labels(matrix)
}

/// Random subtree with `m` leaves whose labels come from `pool[..upper]`.
fn grow(m: usize, upper: usize, pool: &[Weight], branching: usize, rng: &mut ChaCha8Rng) -> Hierarchy {
    if m == 1 {
        return Hierarchy::Leaf;
    }
    let lowest = levels_needed(m, branching) - 1;
    let idx = rng.gen_range(lowest..upper);
    // children get labels from pool[..idx]
    let cap = (0..idx).fold(1usize, |acc, _| acc.saturating_mul(branching));
    let k_min = 2.max(m.div_ceil(cap));
    let k_max = branching.min(m);
    let k = rng.gen_range(k_min..=k_max);
    let mut sizes = vec![1usize; k];
    for _ in k..m {
        let open: Vec<usize> = (0..k).filter(|&c| sizes[c] < cap).collect();
        let pick = open[rng.gen_range(0..open.len())];
        sizes[pick] += 1;
    }
    let children = sizes
        .into_iter()
        .map(|s| grow(s, idx, pool, branching, rng))
        .collect();
    Hierarchy::Node {
        label: pool[idx],
        children,
    }
}
