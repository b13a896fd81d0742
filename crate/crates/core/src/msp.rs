//! Minimum spanning paths and trees.
//!
//! In an ultrametric space a minimum spanning tree can always be chosen to
//! be a path, and on any minimum spanning structure the distance between
//! two points equals the largest edge weight on the path joining them.
//! Ties are broken towards the lowest point index throughout.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::space::{PointSet, UltrametricSpace};
use crate::tree::{Ball, Ballean, NodeId, RepresentingTree};
use crate::union_find::UnionFind;
use crate::weight::Weight;

/// An undirected weighted edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Weight,
}

impl Edge {
    pub fn new(a: usize, b: usize, weight: Weight) -> Edge {
        Edge {
            u: a.min(b),
            v: a.max(b),
            weight,
        }
    }
}

/// How many edges of each weight a spanning structure uses.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: BTreeMap<Weight, usize>,
}

impl WeightDistribution {
    pub fn from_weights<'a>(weights: impl IntoIterator<Item = &'a Weight>) -> WeightDistribution {
        let mut counts = BTreeMap::new();
        for w in weights {
            *counts.entry(*w).or_insert(0) += 1;
        }
        WeightDistribution { counts }
    }

    pub fn edge_count(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn total_weight(&self) -> Weight {
        self.counts
            .iter()
            .fold(Weight::ZERO, |acc, (w, &k)| (0..k).fold(acc, |acc, _| acc + *w))
    }
}

/// Consecutive edge weights `(s_1, ..., s_{n-1})` of a spanning path.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathSpectrum(pub Vec<Weight>);

impl PathSpectrum {
    pub fn values(&self) -> &[Weight] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn distribution(&self) -> WeightDistribution {
        WeightDistribution::from_weights(&self.0)
    }

    /// Strictly increasing or strictly decreasing. Sequences shorter than
    /// two are monotone.
    pub fn is_strictly_monotone(&self) -> bool {
        let s = &self.0;
        s.windows(2).all(|w| w[0] < w[1]) || s.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_distinct(&self) -> bool {
        let mut sorted = self.0.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// A Hamiltonian path through the space with its edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningPath {
    order: Vec<usize>,
    spectrum: PathSpectrum,
}

impl SpanningPath {
    /// Errors with `NotSpanning` unless `order` is a permutation of the
    /// space's points.
    pub fn from_order(space: &UltrametricSpace, order: Vec<usize>) -> Result<SpanningPath> {
        let n = space.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::NotSpanning);
        }
        for &p in &order {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotSpanning);
            }
        }
        let spectrum = PathSpectrum(order.windows(2).map(|w| space.d(w[0], w[1])).collect());
        Ok(SpanningPath { order, spectrum })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn spectrum(&self) -> &PathSpectrum {
        &self.spectrum
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn total_weight(&self) -> Weight {
        self.spectrum.0.iter().fold(Weight::ZERO, |a, &w| a + w)
    }

    pub fn distribution(&self) -> WeightDistribution {
        self.spectrum.distribution()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.order
            .windows(2)
            .zip(&self.spectrum.0)
            .map(|(w, &s)| Edge::new(w[0], w[1], s))
            .collect()
    }

    pub fn to_tree(&self) -> SpanningTree {
        SpanningTree {
            n: self.order.len(),
            edges: self.edges(),
        }
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (k, &p) in self.order.iter().enumerate() {
            pos[p] = k;
        }
        pos
    }

    /// Largest edge weight between points `i` and `j` along the path.
    pub fn max_edge_distance(&self, i: usize, j: usize) -> Result<Weight> {
        let n = self.order.len();
        for p in [i, j] {
            if p >= n {
                return Err(Error::PointOutOfRange { index: p, n });
            }
        }
        if i == j {
            return Err(Error::SamePoint);
        }
        let pos = self.positions();
        let (a, b) = (pos[i].min(pos[j]), pos[i].max(pos[j]));
        Ok(*self.spectrum.0[a..b].iter().max().expect("a < b"))
    }
}

/// A spanning tree given by its edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    n: usize,
    edges: Vec<Edge>,
}

impl SpanningTree {
    /// Errors with `NotSpanning` unless the edges form a tree on `0..n`.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<SpanningTree> {
        if n == 0 || edges.len() + 1 != n {
            return Err(Error::NotSpanning);
        }
        let mut uf = UnionFind::new(n);
        for e in &edges {
            if e.v >= n || !uf.union(e.u, e.v) {
                return Err(Error::NotSpanning);
            }
        }
        Ok(SpanningTree { n, edges })
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> Weight {
        self.edges.iter().fold(Weight::ZERO, |a, e| a + e.weight)
    }

    pub fn distribution(&self) -> WeightDistribution {
        WeightDistribution::from_weights(self.edges.iter().map(|e| &e.weight))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    /// Largest edge weight on the tree path between `i` and `j`.
    pub fn max_edge_distance(&self, i: usize, j: usize) -> Result<Weight> {
        let n = self.n;
        for p in [i, j] {
            if p >= n {
                return Err(Error::PointOutOfRange { index: p, n });
            }
        }
        if i == j {
            return Err(Error::SamePoint);
        }
        let mut adj: Vec<Vec<(usize, Weight)>> = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.weight));
            adj[e.v].push((e.u, e.weight));
        }
        // DFS from i carrying the running maximum.
        let mut best: Vec<Option<Weight>> = vec![None; n];
        best[i] = Some(Weight::ZERO);
        let mut stack = vec![i];
        while let Some(u) = stack.pop() {
            let here = best[u].expect("visited");
            for &(v, w) in &adj[u] {
                if best[v].is_none() {
                    best[v] = Some(here.max(w));
                    stack.push(v);
                }
            }
        }
        best[j].ok_or(Error::NotSpanning)
    }
}

/// Nearest-neighbour walk: each next point minimizes the distance to the
/// current one among unvisited points.
pub fn msp_greedy(space: &UltrametricSpace, start: usize) -> Result<SpanningPath> {
    space.check_point(start)?;
    let n = space.len();
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut current = start;
    visited[start] = true;
    order.push(start);
    for _ in 1..n {
        let next = (0..n)
            .filter(|&x| !visited[x])
            .min_by_key(|&x| (space.d(current, x), x))
            .expect("an unvisited point remains");
        visited[next] = true;
        order.push(next);
        current = next;
    }
    SpanningPath::from_order(space, order)
}

/// Tree-guided walk: from the current point, climb to the deepest ancestor
/// ball that still holds an unvisited point, then step to its lowest
/// unvisited point.
pub fn msp_tree_guided(space: &UltrametricSpace, tree: &RepresentingTree, start: usize) -> Result<SpanningPath> {
    msp_tree_guided_trace(space, tree, start).map(|(path, _)| path)
}

/// Like [`msp_tree_guided`], also returning the node chosen before each step.
pub fn msp_tree_guided_trace(
    space: &UltrametricSpace,
    tree: &RepresentingTree,
    start: usize,
) -> Result<(SpanningPath, Vec<NodeId>)> {
    space.check_point(start)?;
    let n = space.len();
    if tree.point_count() != n {
        return Err(Error::Internal("tree does not belong to this space".into()));
    }
    let mut unvisited: Vec<usize> = tree.nodes().iter().map(|node| node.ball.len()).collect();
    let mut visited = vec![false; n];
    let mut visit = |p: usize, unvisited: &mut Vec<usize>| {
        visited[p] = true;
        for a in tree.ancestors(tree.leaf(p)) {
            unvisited[a] -= 1;
        }
    };
    visit(start, &mut unvisited);
    let mut order = vec![start];
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    let mut current = start;
    for _ in 1..n {
        let node = tree
            .ancestors(tree.leaf(current))
            .find(|&a| unvisited[a] > 0)
            .expect("the root holds every unvisited point");
        let next = tree
            .node(node)
            .ball
            .iter()
            .find(|&p| unvisited[tree.leaf(p)] > 0)
            .expect("node has an unvisited point");
        visit(next, &mut unvisited);
        chosen.push(node);
        order.push(next);
        current = next;
    }
    Ok((SpanningPath::from_order(space, order)?, chosen))
}

/// Each internal node with `k` children contributes `k - 1` edges of its
/// label to every minimum spanning tree.
pub fn eq4_distribution(tree: &RepresentingTree) -> WeightDistribution {
    let mut counts = BTreeMap::new();
    for (_, node) in tree.internal_nodes() {
        *counts.entry(node.label).or_insert(0) += node.children.len() - 1;
    }
    WeightDistribution { counts }
}

/// Kruskal over all pairs sorted by `(weight, i, j)`.
pub fn kruskal_mst(space: &UltrametricSpace) -> SpanningTree {
    let mut pairs: Vec<(Weight, usize, usize)> = space.pairs().map(|(i, j, w)| (w, i, j)).collect();
    pairs.sort();
    let mut uf = UnionFind::new(space.len());
    let mut edges = Vec::with_capacity(space.len().saturating_sub(1));
    for (w, i, j) in pairs {
        if uf.union(i, j) {
            edges.push(Edge::new(i, j, w));
        }
    }
    SpanningTree {
        n: space.len(),
        edges,
    }
}

/// True iff the path reproduces every distance as its largest intermediate
/// edge weight, which in an ultrametric space holds exactly for minimum
/// spanning paths.
pub fn verify_min_spanning_path(space: &UltrametricSpace, path: &SpanningPath) -> Result<bool> {
    let rebuilt = SpanningPath::from_order(space, path.order().to_vec())?;
    if rebuilt.spectrum != path.spectrum {
        return Ok(false);
    }
    let order = path.order();
    let s = path.spectrum.values();
    for a in 0..order.len() {
        let mut running = Weight::ZERO;
        for b in a + 1..order.len() {
            running = running.max(s[b - 1]);
            if running != space.d(order[a], order[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reads the ballean off a minimum spanning path: a window of consecutive
/// points is a ball iff every weight inside it is strictly below the
/// weights on both sides of it (a missing side imposes nothing). Singletons
/// are always balls.
pub fn balls_from_path(space: &UltrametricSpace, path: &SpanningPath) -> Result<Ballean> {
    if !verify_min_spanning_path(space, path)? {
        return Err(Error::NotMinimal);
    }
    let order = path.order();
    let s = path.spectrum.values();
    let n = order.len();
    let mut balls: Vec<Ball> = order
        .iter()
        .map(|&p| Ball {
            points: PointSet::singleton(p),
            diameter: Weight::ZERO,
        })
        .collect();
    for i in 0..n {
        let left = if i > 0 { Some(s[i - 1]) } else { None };
        let mut inner = Weight::ZERO;
        for j in i + 1..n {
            inner = inner.max(s[j - 1]);
            if left.is_some_and(|l| inner >= l) {
                break;
            }
            let right = if j < n - 1 { Some(s[j]) } else { None };
            if right.is_none_or(|r| inner < r) {
                balls.push(Ball {
                    points: order[i..=j].iter().copied().collect(),
                    diameter: inner,
                });
            }
        }
    }
    Ok(Ballean { balls })
}

/// Exhaustive enumeration is limited to this many points.
pub const ENUMERATION_LIMIT: usize = 8;

/// Every minimum-weight spanning tree, found by decoding all Prüfer
/// sequences.
pub fn enumerate_all_msts(space: &UltrametricSpace) -> Result<Vec<SpanningTree>> {
    let n = space.len();
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    if n <= 2 {
        let edges = space.pairs().map(|(i, j, w)| Edge::new(i, j, w)).collect();
        return Ok(vec![SpanningTree { n, edges }]);
    }
    let cost = EdgeCost::new(space);
    let mut best: Option<i128> = None;
    let mut found: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut seq = vec![0usize; n - 2];
    let mut edges = Vec::with_capacity(n - 1);
    loop {
        decode_prufer(&seq, n, &mut edges);
        if let Some(total) = cost.total(&edges) {
            match best {
                Some(b) if total > b => {}
                Some(b) if total == b => found.push(edges.clone()),
                _ => {
                    best = Some(total);
                    found.clear();
                    found.push(edges.clone());
                }
            }
        }
        // odometer increment
        let mut k = seq.len();
        loop {
            if k == 0 {
                let trees = found
                    .into_iter()
                    .map(|es| SpanningTree {
                        n,
                        edges: es.into_iter().map(|(u, v)| Edge::new(u, v, space.d(u, v))).collect(),
                    })
                    .collect();
                return Ok(trees);
            }
            k -= 1;
            seq[k] += 1;
            if seq[k] < n {
                break;
            }
            seq[k] = 0;
        }
    }
}

fn decode_prufer(seq: &[usize], n: usize, out: &mut Vec<(usize, usize)>) {
    out.clear();
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        out.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    out.push((a, b));
}

/// Edge weights scaled to integers over a common denominator.
struct EdgeCost {
    scaled: Vec<Vec<i128>>,
}

impl EdgeCost {
    fn new(space: &UltrametricSpace) -> EdgeCost {
        let lcm = space
            .pairs()
            .try_fold(1i128, |acc, (_, _, w)| {
                let g = acc.gcd(&w.denom());
                (acc / g).checked_mul(w.denom())
            })
            .expect("common denominator of the distances overflows i128");
        let n = space.len();
        let scaled = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let w = space.d(i, j);
                        w.numer()
                            .checked_mul(lcm / w.denom())
                            .expect("scaled distance overflows i128")
                    })
                    .collect()
            })
            .collect();
        EdgeCost { scaled }
    }

    fn total(&self, edges: &[(usize, usize)]) -> Option<i128> {
        edges
            .iter()
            .try_fold(0i128, |acc, &(u, v)| acc.checked_add(self.scaled[u][v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{equilateral, random_space, z15};
    use crate::tree::{ballean, build_representing_tree};

    fn ints(values: &[u64]) -> Vec<Weight> {
        values.iter().map(|&v| Weight::from(v)).collect()
    }

    const Z15_PATH: [u64; 14] = [1, 1, 4, 4, 2, 9, 3, 5, 9, 7, 7, 8, 8, 6];

    #[test]
    fn greedy_on_two_points() {
        let space = equilateral(2, 3);
        let p = msp_greedy(&space, 0).unwrap();
        assert_eq!(p.order(), &[0, 1]);
        assert_eq!(p.spectrum().values(), &ints(&[3])[..]);
        assert!(matches!(msp_greedy(&space, 2), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn greedy_on_z15_reproduces_known_path() {
        let z = z15();
        let p = msp_greedy(&z, 0).unwrap();
        assert_eq!(p.order(), &(0..15).collect::<Vec<_>>()[..]);
        assert_eq!(p.spectrum().values(), &ints(&Z15_PATH)[..]);
        assert_eq!(p.total_weight(), Weight::from(74));
        assert!(verify_min_spanning_path(&z, &p).unwrap());
    }

    #[test]
    fn tree_guided_on_z15_follows_node_sequence() {
        let z = z15();
        let tree = build_representing_tree(&z);
        let (p, nodes) = msp_tree_guided_trace(&z, &tree, 0).unwrap();
        let labels: Vec<Weight> = nodes.iter().map(|&v| tree.node(v).label).collect();
        assert_eq!(labels, ints(&Z15_PATH));
        let mut spectrum = p.spectrum().values().to_vec();
        spectrum.sort();
        let mut expected = ints(&Z15_PATH);
        expected.sort();
        assert_eq!(spectrum, expected);
    }

    #[test]
    fn tree_guided_on_one_point() {
        let space = equilateral(1, 1);
        let tree = build_representing_tree(&space);
        let p = msp_tree_guided(&space, &tree, 0).unwrap();
        assert_eq!(p.order(), &[0]);
        assert!(p.spectrum().is_empty());
    }

    #[test]
    fn label_distribution_on_small_spaces_and_z15() {
        let eq = equilateral(3, 5);
        let d = eq4_distribution(&build_representing_tree(&eq));
        assert_eq!(d.counts.into_iter().collect::<Vec<_>>(), vec![(Weight::from(5), 2)]);

        let z = z15();
        let d = eq4_distribution(&build_representing_tree(&z));
        let expected: BTreeMap<Weight, usize> = [(1, 2), (2, 1), (3, 1), (4, 2), (5, 1), (6, 1), (7, 2), (8, 2), (9, 2)]
            .iter()
            .map(|&(w, k)| (Weight::from(w), k))
            .collect();
        assert_eq!(d.counts, expected);
        assert_eq!(d.total_weight(), Weight::from(74));
        assert_eq!(kruskal_mst(&z).total_weight(), Weight::from(74));
    }

    #[test]
    fn kruskal_is_a_tree() {
        let two = equilateral(2, 4);
        let t = kruskal_mst(&two);
        assert_eq!(t.edges(), &[Edge::new(0, 1, Weight::from(4))]);
        for seed in 0..30 {
            let s = random_space(9, seed);
            let t = kruskal_mst(&s);
            assert!(SpanningTree::new(s.len(), t.edges().to_vec()).is_ok());
        }
    }

    #[test]
    fn spanning_tree_rejects_non_trees() {
        let w = Weight::from(1);
        assert_eq!(
            SpanningTree::new(3, vec![Edge::new(0, 1, w), Edge::new(1, 0, w)]).unwrap_err(),
            Error::NotSpanning
        );
        assert_eq!(SpanningTree::new(3, vec![Edge::new(0, 1, w)]).unwrap_err(), Error::NotSpanning);
    }

    #[test]
    fn max_edge_distance_on_known_path() {
        let z = z15();
        let p = msp_greedy(&z, 0).unwrap();
        assert_eq!(p.max_edge_distance(3, 4).unwrap(), Weight::from(4));
        assert_eq!(p.max_edge_distance(0, 8).unwrap(), Weight::from(9));
        assert_eq!(p.max_edge_distance(8, 0).unwrap(), Weight::from(9));
        assert_eq!(p.max_edge_distance(2, 2).unwrap_err(), Error::SamePoint);
        let t = p.to_tree();
        assert_eq!(t.max_edge_distance(0, 8).unwrap(), Weight::from(9));
        assert_eq!(t.max_edge_distance(1, 1).unwrap_err(), Error::SamePoint);
    }

    #[test]
    fn kruskal_reconstructs_distances() {
        for seed in 0..100 {
            let s = random_space(2 + seed as usize % 9, seed);
            let t = kruskal_mst(&s);
            for (i, j, w) in s.pairs() {
                assert_eq!(t.max_edge_distance(i, j).unwrap(), w);
            }
        }
    }

    /// Orders of a 4-point space that are not minimum spanning paths,
    /// found by trying every permutation.
    #[test]
    fn verify_rejects_non_minimal_orders() {
        let s = crate::generate::Hierarchy::node(
            2,
            vec![crate::generate::Hierarchy::star(1, 2), crate::generate::Hierarchy::star(1, 2)],
        )
        .to_space()
        .unwrap();
        let mst_weight = kruskal_mst(&s).total_weight();
        let mut rejected = 0;
        for perm in permutations(4) {
            let p = SpanningPath::from_order(&s, perm.clone()).unwrap();
            let minimal = p.total_weight() == mst_weight;
            assert_eq!(verify_min_spanning_path(&s, &p).unwrap(), minimal, "{perm:?}");
            rejected += usize::from(!minimal);
        }
        assert!(rejected > 0);
        let bad = SpanningPath::from_order(&s, vec![0, 2, 1, 3]).unwrap();
        assert!(!verify_min_spanning_path(&s, &bad).unwrap());
        assert_eq!(balls_from_path(&s, &bad).unwrap_err(), Error::NotMinimal);
    }

    #[test]
    fn from_order_checks_permutation() {
        let s = equilateral(3, 1);
        assert_eq!(SpanningPath::from_order(&s, vec![0, 1]).unwrap_err(), Error::NotSpanning);
        assert_eq!(SpanningPath::from_order(&s, vec![0, 1, 1]).unwrap_err(), Error::NotSpanning);
        assert_eq!(SpanningPath::from_order(&s, vec![0, 1, 3]).unwrap_err(), Error::NotSpanning);
        let two = equilateral(2, 1);
        let p = SpanningPath::from_order(&two, vec![1, 0]).unwrap();
        assert!(verify_min_spanning_path(&two, &p).unwrap());
    }

    #[test]
    fn balls_on_known_path() {
        let z = z15();
        let p = msp_greedy(&z, 0).unwrap();
        let balls = balls_from_path(&z, &p).unwrap().to_set();
        assert!(balls.contains(&Ball {
            points: PointSet::new([0, 1, 2]),
            diameter: Weight::from(1)
        }));
        assert!(balls.contains(&Ball {
            points: PointSet::new([13, 14]),
            diameter: Weight::from(6)
        }));
        assert_eq!(balls, ballean(&build_representing_tree(&z)).to_set());
    }

    #[test]
    fn balls_from_any_greedy_path_match_tree() {
        for seed in 0..100 {
            let s = random_space(1 + seed as usize % 10, seed);
            let expected = ballean(&build_representing_tree(&s)).to_set();
            for start in 0..s.len() {
                let p = msp_greedy(&s, start).unwrap();
                let b = balls_from_path(&s, &p).unwrap();
                assert_eq!(b.len(), expected.len());
                assert_eq!(b.to_set(), expected);
            }
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let two = equilateral(2, 3);
        assert_eq!(enumerate_all_msts(&two).unwrap().len(), 1);
        let eq = equilateral(3, 5);
        let all = enumerate_all_msts(&eq).unwrap();
        assert_eq!(all.len(), 3);
        for t in &all {
            assert!(t.is_path());
            assert_eq!(t.total_weight(), Weight::from(10));
        }
        let one = equilateral(1, 1);
        let all = enumerate_all_msts(&one).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].edges().is_empty());
        assert!(matches!(
            enumerate_all_msts(&equilateral(9, 1)),
            Err(Error::TooLarge { n: 9, limit: 8 })
        ));
    }

    #[test]
    fn enumeration_counts_all_trees_of_equilateral_space() {
        // all n^(n-2) spanning trees have equal weight
        for n in 3..=6 {
            let all = enumerate_all_msts(&equilateral(n, 2)).unwrap();
            assert_eq!(all.len(), n.pow(n as u32 - 2));
        }
    }

    #[test]
    fn enumeration_with_fractional_weights() {
        let m: Vec<Vec<Weight>> = [["0", "1/3", "0.5"], ["1/3", "0", "0.5"], ["0.5", "0.5", "0"]]
            .iter()
            .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
            .collect();
        let s = UltrametricSpace::with_default_labels(m).unwrap();
        let all = enumerate_all_msts(&s).unwrap();
        assert_eq!(all.len(), 2);
        for t in all {
            assert_eq!(t.total_weight(), "5/6".parse().unwrap());
        }
    }

    #[test]
    fn path_spectrum_helpers() {
        assert!(PathSpectrum(ints(&[1, 2, 3])).is_strictly_monotone());
        assert!(PathSpectrum(ints(&[3, 2])).is_strictly_monotone());
        assert!(!PathSpectrum(ints(&[1, 3, 2])).is_strictly_monotone());
        assert!(!PathSpectrum(ints(&[1, 1])).is_strictly_monotone());
        assert!(PathSpectrum(vec![]).is_strictly_monotone());
        assert!(PathSpectrum(ints(&[1, 3, 2])).all_distinct());
        assert!(!PathSpectrum(ints(&[1, 3, 1])).all_distinct());
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
}
