//! Hausdorff distance between subsets of a finite ultrametric space.
//!
//! For `A != B` the distance is the largest diameter among the balls that
//! separate the two sets: balls meeting one set's private part and the
//! other set, and having some diametrical part that holds private points of
//! exactly one set and nothing of the other.

use crate::error::{Error, Result};
use crate::msp::{verify_min_spanning_path, SpanningPath};
use crate::space::{PointSet, UltrametricSpace};
use crate::tree::{Ball, RepresentingTree};
use crate::weight::Weight;

/// The separating balls of a pair of distinct subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BxySet {
    pub balls: Vec<Ball>,
}

impl BxySet {
    pub fn diameters(&self) -> Vec<Weight> {
        let mut d: Vec<Weight> = self.balls.iter().map(|b| b.diameter).collect();
        d.sort();
        d
    }

    pub fn max_diameter(&self) -> Option<Weight> {
        self.balls.iter().map(|b| b.diameter).max()
    }
}

/// What a ball contains of the two sets.
#[derive(Debug, Clone, Copy, Default)]
struct Meets {
    a: bool,
    b: bool,
    a_only: bool,
    b_only: bool,
}

impl Meets {
    fn of_point(p: usize, a: &PointSet, b: &PointSet) -> Meets {
        let (in_a, in_b) = (a.contains(p), b.contains(p));
        Meets {
            a: in_a,
            b: in_b,
            a_only: in_a && !in_b,
            b_only: in_b && !in_a,
        }
    }

    fn join(self, other: Meets) -> Meets {
        Meets {
            a: self.a || other.a,
            b: self.b || other.b,
            a_only: self.a_only || other.a_only,
            b_only: self.b_only || other.b_only,
        }
    }

    /// Meets `A \ B` and `B`, or meets `B \ A` and `A`.
    fn straddles(self) -> bool {
        (self.a_only && self.b) || (self.b_only && self.a)
    }

    /// Private points of exactly one set and nothing of the other.
    fn one_sided(self) -> bool {
        (self.a_only && !self.b) ^ (self.b_only && !self.a)
    }
}

fn check_pair(space: &UltrametricSpace, a: &PointSet, b: &PointSet) -> Result<()> {
    space.check_set(a)?;
    space.check_set(b)
}

/// Separating balls, read from the representing tree.
pub fn bxy(space: &UltrametricSpace, tree: &RepresentingTree, a: &PointSet, b: &PointSet) -> Result<BxySet> {
    check_pair(space, a, b)?;
    if a == b {
        return Err(Error::EqualSets);
    }
    let mut meets = vec![Meets::default(); tree.len()];
    // children have larger ids than their parents
    for id in (0..tree.len()).rev() {
        let node = tree.node(id);
        meets[id] = if node.is_leaf() {
            Meets::of_point(node.ball.first().expect("leaf is a singleton"), a, b)
        } else {
            node.children
                .iter()
                .fold(Meets::default(), |acc, &c| acc.join(meets[c]))
        };
    }
    let balls = tree
        .nodes()
        .iter()
        .enumerate()
        .filter(|(id, node)| {
            !node.is_leaf()
                && meets[*id].straddles()
                && node.children.iter().any(|&c| meets[c].one_sided())
        })
        .map(|(_, node)| Ball {
            points: node.ball.clone(),
            diameter: node.label,
        })
        .collect();
    Ok(BxySet { balls })
}

/// Hausdorff distance as the largest diameter of a separating ball.
pub fn hausdorff(space: &UltrametricSpace, tree: &RepresentingTree, a: &PointSet, b: &PointSet) -> Result<Weight> {
    check_pair(space, a, b)?;
    if a == b {
        return Ok(Weight::ZERO);
    }
    bxy(space, tree, a, b)?
        .max_diameter()
        .ok_or_else(|| Error::Internal("no separating ball for distinct sets".into()))
}

/// Hausdorff distance from the definition: the larger of the two directed
/// max-min distances.
pub fn hausdorff_oracle(space: &UltrametricSpace, a: &PointSet, b: &PointSet) -> Result<Weight> {
    check_pair(space, a, b)?;
    let directed = |from: &PointSet, to: &PointSet| {
        from.iter()
            .map(|x| to.iter().map(|y| space.d(x, y)).min().expect("nonempty"))
            .max()
            .expect("nonempty")
    };
    Ok(directed(a, b).max(directed(b, a)))
}

/// Hausdorff distance using only a minimum spanning path.
///
/// Balls are the windows of the path whose inner weights sit strictly below
/// both neighbouring weights; a window's diametrical parts are the runs
/// between its inner edges of maximal weight.
pub fn hausdorff_via_path(space: &UltrametricSpace, path: &SpanningPath, a: &PointSet, b: &PointSet) -> Result<Weight> {
    check_pair(space, a, b)?;
    if !verify_min_spanning_path(space, path)? {
        return Err(Error::NotMinimal);
    }
    if a == b {
        return Ok(Weight::ZERO);
    }
    let order = path.order();
    let s = path.spectrum().values();
    let n = order.len();
    let point_meets: Vec<Meets> = order.iter().map(|&p| Meets::of_point(p, a, b)).collect();
    let window = |lo: usize, hi: usize| {
        point_meets[lo..=hi]
            .iter()
            .fold(Meets::default(), |acc, &m| acc.join(m))
    };

    let mut best: Option<Weight> = None;
    for i in 0..n {
        let left = if i > 0 { Some(s[i - 1]) } else { None };
        let mut inner = Weight::ZERO;
        for j in i + 1..n {
            inner = inner.max(s[j - 1]);
            if left.is_some_and(|l| inner >= l) {
                break;
            }
            let right = if j < n - 1 { Some(s[j]) } else { None };
            if right.is_some_and(|r| inner >= r) {
                continue;
            }
            if best.is_some_and(|b| b >= inner) || !window(i, j).straddles() {
                continue;
            }
            // split [i, j] at edges of weight `inner`
            let mut part_start = i;
            let mut separated = false;
            for k in i..=j {
                if k == j || s[k] == inner {
                    if window(part_start, k).one_sided() {
                        separated = true;
                        break;
                    }
                    part_start = k + 1;
                }
            }
            if separated {
                best = Some(inner);
            }
        }
    }
    best.ok_or_else(|| Error::Internal("no separating window for distinct sets".into()))
}
