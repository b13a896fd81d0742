//! Diametrical partitions, the representing tree and the ballean.
//!
//! The representing tree of a space has the whole point set at its root.
//! Every node with positive diameter is split into the parts of its
//! diametrical graph (pairs at distance equal to the diameter), and each
//! node is labeled with the diameter of its point set. Leaves are the
//! singletons. Node ids follow a preorder walk in which siblings are
//! ordered by their smallest point index.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::space::{spectrum, PointSet, UltrametricSpace};
use crate::union_find::UnionFind;
use crate::weight::Weight;

pub type NodeId = usize;

/// Parts of the diametrical graph of a point set with at least two points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiametricalPartition {
    pub diameter: Weight,
    /// Ordered by smallest member.
    pub parts: Vec<PointSet>,
}

/// Groups `set` into classes of the relation `d(u, v) < diam`.
pub fn diametrical_partition(space: &UltrametricSpace, set: &PointSet) -> Result<DiametricalPartition> {
    space.check_set(set)?;
    if set.len() < 2 {
        return Err(Error::TooSmall(set.len()));
    }
    Ok(partition_unchecked(space, set.as_slice()))
}

fn partition_unchecked(space: &UltrametricSpace, pts: &[usize]) -> DiametricalPartition {
    let mut diameter = Weight::ZERO;
    for (a, &u) in pts.iter().enumerate() {
        for &v in &pts[a + 1..] {
            diameter = diameter.max(space.d(u, v));
        }
    }
    let mut uf = UnionFind::new(pts.len());
    for (a, &u) in pts.iter().enumerate() {
        for (b, &v) in pts.iter().enumerate().skip(a + 1) {
            if space.d(u, v) < diameter {
                uf.union(a, b);
            }
        }
    }
    // `pts` is sorted, so the first time a class shows up is at its
    // smallest member.
    let mut slot_of_root = vec![usize::MAX; pts.len()];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for (a, &u) in pts.iter().enumerate() {
        let r = uf.find(a);
        if slot_of_root[r] == usize::MAX {
            slot_of_root[r] = parts.len();
            parts.push(Vec::new());
        }
        parts[slot_of_root[r]].push(u);
    }
    DiametricalPartition {
        diameter,
        parts: parts.into_iter().map(PointSet::new).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub ball: PointSet,
    pub label: Weight,
    pub children: Vec<NodeId>,
    pub parent: Option<NodeId>,
    pub depth: usize,
}

impl Node {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// The representing tree of a space. The root has id 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentingTree {
    nodes: Vec<Node>,
    leaf_of: Vec<NodeId>,
}

impl RepresentingTree {
    pub const ROOT: NodeId = 0;

    pub fn root(&self) -> &Node {
        &self.nodes[Self::ROOT]
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Always false; a tree has at least its root.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn point_count(&self) -> usize {
        self.leaf_of.len()
    }

    /// The leaf `{point}`.
    pub fn leaf(&self, point: usize) -> NodeId {
        self.leaf_of[point]
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = (NodeId, &Node)> {
        self.nodes.iter().enumerate().filter(|(_, n)| !n.is_leaf())
    }

    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// `id` followed by its proper ancestors up to the root.
    pub fn ancestors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::successors(Some(id), move |&v| self.nodes[v].parent)
    }

    /// Nodes on the tree path between `a` and `b`, both included.
    pub fn path_between(&self, a: NodeId, b: NodeId) -> Vec<NodeId> {
        let (mut a, mut b) = (a, b);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.nodes[a].depth > self.nodes[b].depth {
            left.push(a);
            a = self.nodes[a].parent.expect("deeper node has a parent");
        }
        while self.nodes[b].depth > self.nodes[a].depth {
            right.push(b);
            b = self.nodes[b].parent.expect("deeper node has a parent");
        }
        while a != b {
            left.push(a);
            right.push(b);
            a = self.nodes[a].parent.expect("distinct nodes below the root");
            b = self.nodes[b].parent.expect("distinct nodes below the root");
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }

    pub fn lowest_common_ancestor(&self, a: NodeId, b: NodeId) -> NodeId {
        let path = self.path_between(a, b);
        *path
            .iter()
            .min_by_key(|&&v| self.nodes[v].depth)
            .expect("path is nonempty")
    }
}

/// Builds the representing tree with an explicit worklist.
pub fn build_representing_tree(space: &UltrametricSpace) -> RepresentingTree {
    let n = space.len();
    let mut nodes: Vec<Node> = Vec::with_capacity(2 * n);
    let mut leaf_of = vec![usize::MAX; n];
    let mut stack: Vec<(PointSet, Option<NodeId>, usize)> = vec![(space.points(), None, 0)];

    while let Some((ball, parent, depth)) = stack.pop() {
        let id = nodes.len();
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }
        let label = if ball.len() >= 2 {
            let partition = partition_unchecked(space, ball.as_slice());
            for part in partition.parts.into_iter().rev() {
                stack.push((part, Some(id), depth + 1));
            }
            partition.diameter
        } else {
            leaf_of[ball.first().expect("balls are nonempty")] = id;
            Weight::ZERO
        };
        nodes.push(Node {
            ball,
            label,
            children: Vec::new(),
            parent,
            depth,
        });
    }
    RepresentingTree { nodes, leaf_of }
}

/// A closed ball together with its diameter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ball {
    pub points: PointSet,
    pub diameter: Weight,
}

/// All closed balls of a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ballean {
    pub balls: Vec<Ball>,
}

impl Ballean {
    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn to_set(&self) -> BTreeSet<Ball> {
        self.balls.iter().cloned().collect()
    }

    /// Balls with at least two points.
    pub fn nonsingular(&self) -> impl Iterator<Item = &Ball> {
        self.balls.iter().filter(|b| b.points.len() > 1)
    }
}

/// One ball per tree node, in node order.
pub fn ballean(tree: &RepresentingTree) -> Ballean {
    Ballean {
        balls: tree
            .nodes()
            .iter()
            .map(|n| Ball {
                points: n.ball.clone(),
                diameter: n.label,
            })
            .collect(),
    }
}

/// Distance between points read off the tree: the largest label on the
/// path joining the leaves `{i}` and `{j}`.
pub fn tree_distance(tree: &RepresentingTree, i: usize, j: usize) -> Result<Weight> {
    let n = tree.point_count();
    for p in [i, j] {
        if p >= n {
            return Err(Error::PointOutOfRange { index: p, n });
        }
    }
    if i == j {
        return Err(Error::SamePoint);
    }
    let path = tree.path_between(tree.leaf(i), tree.leaf(j));
    Ok(path
        .iter()
        .map(|&v| tree.node(v).label)
        .max()
        .expect("path is nonempty"))
}

/// A simple undirected graph on a subset of the points of a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<usize>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// Vertices are deduplicated and sorted; edge endpoints not listed as
    /// vertices are added.
    pub fn from_edges(vertices: impl IntoIterator<Item = usize>, edges: &[(usize, usize)]) -> Graph {
        let mut all: Vec<usize> = vertices.into_iter().collect();
        all.extend(edges.iter().flat_map(|&(u, v)| [u, v]));
        all.sort_unstable();
        all.dedup();
        let m = all.len();
        let mut adj = vec![vec![false; m]; m];
        for &(u, v) in edges {
            if u == v {
                continue;
            }
            let a = all.binary_search(&u).unwrap();
            let b = all.binary_search(&v).unwrap();
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Graph { vertices: all, adj }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.vertices.binary_search(&u), self.vertices.binary_search(&v)) {
            (Ok(a), Ok(b)) => self.adj[a][b],
            _ => false,
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.vertices.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if self.adj[a][b] {
                    out.push((self.vertices[a], self.vertices[b]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().flatten().filter(|&&e| e).count() / 2
    }
}

/// Pairs at distance exactly `level`, with isolated points dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelGraph {
    pub level: Weight,
    pub graph: Graph,
}

impl LevelGraph {
    pub fn is_complete_multipartite(&self) -> Result<bool> {
        is_complete_multipartite(&self.graph)
    }
}

pub fn level_graph(space: &UltrametricSpace, level: Weight) -> Result<LevelGraph> {
    if level.is_zero() || !spectrum(space).contains(&level) {
        return Err(Error::NotInSpectrum(level.to_string()));
    }
    let edges: Vec<(usize, usize)> = space
        .pairs()
        .filter(|&(_, _, w)| w == level)
        .map(|(i, j, _)| (i, j))
        .collect();
    Ok(LevelGraph {
        level,
        graph: Graph::from_edges([], &edges),
    })
}

/// True iff non-adjacency is an equivalence relation on the vertices, i.e.
/// the complement is a disjoint union of cliques.
pub fn is_complete_multipartite(graph: &Graph) -> Result<bool> {
    let m = graph.vertices.len();
    if graph.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut uf = UnionFind::new(m);
    for a in 0..m {
        for b in a + 1..m {
            if !graph.adj[a][b] {
                uf.union(a, b);
            }
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            if graph.adj[a][b] && uf.find(a) == uf.find(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
