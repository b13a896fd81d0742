//! Structural classes of finite ultrametric spaces.
//!
//! Each class has a criterion on the representing tree and an equivalent
//! criterion on the spectrum of any minimum spanning path. The tree side is
//! authoritative; the path side is exposed for cross-checking.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::msp::{msp_greedy, msp_tree_guided, PathSpectrum, SpanningPath};
use crate::space::{spectrum, UltrametricSpace};
use crate::tree::{ballean, level_graph, RepresentingTree};

/// Every internal node has exactly two children.
pub fn is_strictly_binary(tree: &RepresentingTree) -> bool {
    tree.internal_nodes().all(|(_, n)| n.children.len() == 2)
}

/// Distinct internal nodes carry distinct labels.
pub fn is_injective_labeling(tree: &RepresentingTree) -> bool {
    let mut labels: Vec<_> = tree.internal_nodes().map(|(_, n)| n.label).collect();
    labels.sort();
    labels.windows(2).all(|w| w[0] != w[1])
}

/// Injectivity through counting: `|Sp(X)| = |B_X| - |X| + 1`.
pub fn injective_by_ball_count(space: &UltrametricSpace, tree: &RepresentingTree) -> bool {
    spectrum(space).len() + space.len() == ballean(tree).len() + 1
}

/// Injectivity through level graphs: every nonzero distance level, with
/// isolated points dropped, is complete multipartite.
pub fn injective_by_level_graphs(space: &UltrametricSpace) -> Result<bool> {
    for &t in &spectrum(space).values()[1..] {
        if !level_graph(space, t)?.is_complete_multipartite()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Path-side test for a strictly binary tree: between any two equal
/// weights there is a strictly larger one.
pub fn path_criterion_strictly_binary(spectrum: &PathSpectrum) -> bool {
    let s = spectrum.values();
    for i in 0..s.len() {
        let mut between = None;
        for j in i + 1..s.len() {
            if s[j] == s[i] && between.is_none_or(|m| m <= s[i]) {
                return false;
            }
            between = between.max(Some(s[j]));
        }
    }
    true
}

/// Path-side test for injective labeling: no weight strictly larger than
/// two equal weights lies between them.
pub fn path_criterion_injective(spectrum: &PathSpectrum) -> bool {
    let s = spectrum.values();
    for i in 0..s.len() {
        let mut between = None;
        for j in i + 1..s.len() {
            if s[j] == s[i] && between.is_some_and(|m| m > s[i]) {
                return false;
            }
            between = between.max(Some(s[j]));
        }
    }
    true
}

/// Path-side test for class 𝔘: all path weights differ.
pub fn path_criterion_class_u(spectrum: &PathSpectrum) -> bool {
    spectrum.all_distinct()
}

/// Class 𝔘: as many distinct distances (zero included) as points.
pub fn in_class_u(space: &UltrametricSpace) -> bool {
    spectrum(space).len() == space.len()
}

/// Class ℜ: strictly binary with exactly one internal node on every level
/// but the deepest. The one-point space qualifies vacuously.
pub fn in_class_r(tree: &RepresentingTree) -> bool {
    if !is_strictly_binary(tree) {
        return false;
    }
    let height = tree.height();
    let mut per_level = vec![0usize; height + 1];
    for (_, n) in tree.internal_nodes() {
        per_level[n.depth] += 1;
    }
    per_level[..height].iter().all(|&k| k == 1)
}

/// Looks for a minimum spanning path with strictly monotone spectrum.
///
/// Starts with a greedy walk from the lowest-index deepest leaf, then falls
/// back to greedy and tree-guided walks from every point.
pub fn find_monotone_path(space: &UltrametricSpace, tree: &RepresentingTree) -> Result<Option<SpanningPath>> {
    let height = tree.height();
    let deepest = (0..space.len())
        .find(|&p| tree.node(tree.leaf(p)).depth == height)
        .expect("some leaf is deepest");
    let first = msp_greedy(space, deepest)?;
    if first.spectrum().is_strictly_monotone() {
        return Ok(Some(first));
    }
    for start in 0..space.len() {
        for path in [msp_greedy(space, start)?, msp_tree_guided(space, tree, start)?] {
            if path.spectrum().is_strictly_monotone() {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

/// Unlabeled, unordered shape of a rooted tree, stored as a canonical
/// string: a leaf is `()`, an internal node wraps its children's codes
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeShape(String);

impl TreeShape {
    pub fn leaf() -> TreeShape {
        TreeShape("()".into())
    }

    pub fn node(children: impl IntoIterator<Item = TreeShape>) -> TreeShape {
        let mut codes: Vec<String> = children.into_iter().map(|c| c.0).collect();
        codes.sort();
        TreeShape(format!("({})", codes.concat()))
    }

    pub fn of(tree: &RepresentingTree) -> TreeShape {
        // Nodes are numbered parent-first, so children precede parents in
        // reverse order.
        let mut codes: Vec<Option<TreeShape>> = vec![None; tree.len()];
        for id in (0..tree.len()).rev() {
            let node = tree.node(id);
            codes[id] = Some(if node.is_leaf() {
                TreeShape::leaf()
            } else {
                TreeShape::node(node.children.iter().map(|&c| codes[c].take().expect("child coded")))
            });
        }
        codes[RepresentingTree::ROOT].take().expect("root coded")
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The five shapes whose spaces have only path-shaped minimum spanning
    /// trees, in the order T1..T5.
    pub fn path_only_shapes() -> [TreeShape; 5] {
        let l = TreeShape::leaf;
        let cherry = || TreeShape::node([l(), l()]);
        [
            TreeShape::node([cherry(), cherry()]),
            TreeShape::node([cherry(), l()]),
            TreeShape::node([l(), l()]),
            TreeShape::node([l(), l(), l()]),
            l(),
        ]
    }
}

impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// True iff every minimum spanning tree of the space is a path, decided by
/// matching the tree shape against the five admissible shapes.
pub fn all_msts_are_paths(tree: &RepresentingTree) -> bool {
    let shape = TreeShape::of(tree);
    TreeShape::path_only_shapes().contains(&shape)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub strictly_binary: bool,
    pub injective_labeling: bool,
    pub in_class_u: bool,
    pub in_class_r: bool,
    pub all_msts_are_paths: bool,
}

/// All verdicts, computed from the tree.
pub fn classify(tree: &RepresentingTree) -> ClassReport {
    let strictly_binary = is_strictly_binary(tree);
    let injective_labeling = is_injective_labeling(tree);
    ClassReport {
        strictly_binary,
        injective_labeling,
        in_class_u: strictly_binary && injective_labeling,
        in_class_r: in_class_r(tree),
        all_msts_are_paths: all_msts_are_paths(tree),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Hierarchy;
    use crate::testing::{equilateral, random_space, z15};
    use crate::tree::build_representing_tree;
    use crate::weight::Weight;

    fn ps(values: &[u64]) -> PathSpectrum {
        PathSpectrum(values.iter().map(|&v| Weight::from(v)).collect())
    }

    fn has_equilateral_triangle(space: &UltrametricSpace) -> bool {
        let n = space.len();
        (0..n).any(|i| {
            (i + 1..n).any(|j| {
                (j + 1..n).any(|k| space.d(i, j) == space.d(j, k) && space.d(j, k) == space.d(i, k))
            })
        })
    }

    fn caterpillar() -> UltrametricSpace {
        Hierarchy::node(
            3,
            vec![Hierarchy::node(2, vec![Hierarchy::star(1, 2), Hierarchy::Leaf]), Hierarchy::Leaf],
        )
        .to_space()
        .unwrap()
    }

    #[test]
    fn z15_report() {
        let z = z15();
        let tree = build_representing_tree(&z);
        let report = classify(&tree);
        assert_eq!(
            report,
            ClassReport {
                strictly_binary: false,
                injective_labeling: true,
                in_class_u: false,
                in_class_r: false,
                all_msts_are_paths: false,
            }
        );
        assert!(!in_class_u(&z));
        assert!(injective_by_ball_count(&z, &tree));
        assert_eq!(spectrum(&z).len(), ballean(&tree).len() - z.len() + 1);
        assert!(injective_by_level_graphs(&z).unwrap());
        let from_x1 = msp_greedy(&z, 0).unwrap();
        assert!(!path_criterion_strictly_binary(from_x1.spectrum()));
        assert!(path_criterion_injective(from_x1.spectrum()));
    }

    #[test]
    fn two_points_are_in_every_class() {
        let tree = build_representing_tree(&equilateral(2, 1));
        let r = classify(&tree);
        assert!(r.strictly_binary && r.injective_labeling && r.in_class_u && r.in_class_r);
        assert!(r.all_msts_are_paths);
        assert!(in_class_u(&equilateral(2, 1)));
    }

    #[test]
    fn path_criteria_on_literal_spectra() {
        assert!(path_criterion_strictly_binary(&ps(&[1, 3, 1])));
        assert!(!path_criterion_injective(&ps(&[1, 3, 1])));
        assert!(!path_criterion_strictly_binary(&ps(&[1, 1])));
        assert!(path_criterion_injective(&ps(&[1, 1])));
        assert!(!path_criterion_strictly_binary(&ps(&[2, 1, 2])));
        assert!(path_criterion_strictly_binary(&ps(&[])));
    }

    #[test]
    fn repeated_label_is_not_injective() {
        let s = Hierarchy::node(2, vec![Hierarchy::star(1, 2), Hierarchy::star(1, 2)])
            .to_space()
            .unwrap();
        let tree = build_representing_tree(&s);
        assert!(!is_injective_labeling(&tree));
        assert!(!injective_by_ball_count(&s, &tree));
        assert!(!injective_by_level_graphs(&s).unwrap());
        assert!(is_strictly_binary(&tree));
    }

    #[test]
    fn caterpillar_is_rigid() {
        let s = caterpillar();
        let tree = build_representing_tree(&s);
        assert!(in_class_r(&tree));
        assert!(in_class_u(&s));
        let path = find_monotone_path(&s, &tree).unwrap().unwrap();
        assert_eq!(path.spectrum(), &ps(&[1, 2, 3]));
        assert!(!in_class_r(&build_representing_tree(&z15())));
        // T1 shape: strictly binary but two internal nodes on level one
        let t1 = Hierarchy::node(3, vec![Hierarchy::star(1, 2), Hierarchy::star(2, 2)])
            .to_space()
            .unwrap();
        let t1_tree = build_representing_tree(&t1);
        assert!(in_class_u(&t1));
        assert!(!in_class_r(&t1_tree));
        assert!(find_monotone_path(&t1, &t1_tree).unwrap().is_none());
    }

    #[test]
    fn one_point_space() {
        let s = equilateral(1, 1);
        let tree = build_representing_tree(&s);
        let r = classify(&tree);
        assert!(r.strictly_binary && r.injective_labeling && r.in_class_u && r.in_class_r);
        assert!(r.all_msts_are_paths);
        assert!(in_class_u(&s));
    }

    #[test]
    fn shapes() {
        let [t1, t2, t3, t4, t5] = TreeShape::path_only_shapes();
        assert_eq!(t5.as_str(), "()");
        assert_eq!(t3.as_str(), "(()())");
        assert_eq!(t4.as_str(), "(()()())");
        assert_eq!(t2.as_str(), "((()())())");
        assert_eq!(t1.as_str(), "((()())(()()))");
        assert!(all_msts_are_paths(&build_representing_tree(&equilateral(1, 1))));
        assert!(all_msts_are_paths(&build_representing_tree(&equilateral(3, 5))));
        assert!(!all_msts_are_paths(&build_representing_tree(&equilateral(4, 5))));
        assert!(!all_msts_are_paths(&build_representing_tree(&z15())));
        // child order never matters
        let a = Hierarchy::node(5, vec![Hierarchy::Leaf, Hierarchy::star(1, 2)]).to_space().unwrap();
        let b = Hierarchy::node(5, vec![Hierarchy::star(1, 2), Hierarchy::Leaf]).to_space().unwrap();
        assert_eq!(TreeShape::of(&build_representing_tree(&a)), t2);
        assert_eq!(TreeShape::of(&build_representing_tree(&b)), t2);
    }

    #[test]
    fn strictly_binary_matches_triangle_scan() {
        for seed in 0..300 {
            let s = random_space(1 + seed as usize % 9, seed);
            let tree = build_representing_tree(&s);
            assert_eq!(is_strictly_binary(&tree), !has_equilateral_triangle(&s));
        }
    }

    #[test]
    fn criteria_agree_on_random_spaces() {
        for seed in 0..300 {
            let s = random_space(1 + seed as usize % 9, seed);
            let tree = build_representing_tree(&s);
            let report = classify(&tree);
            assert_eq!(report.in_class_u, in_class_u(&s));
            assert_eq!(report.injective_labeling, injective_by_ball_count(&s, &tree));
            assert_eq!(report.injective_labeling, injective_by_level_graphs(&s).unwrap());
            for start in 0..s.len() {
                for p in [msp_greedy(&s, start).unwrap(), msp_tree_guided(&s, &tree, start).unwrap()] {
                    assert_eq!(path_criterion_strictly_binary(p.spectrum()), report.strictly_binary);
                    assert_eq!(path_criterion_injective(p.spectrum()), report.injective_labeling);
                    assert_eq!(path_criterion_class_u(p.spectrum()), report.in_class_u);
                }
            }
            assert_eq!(find_monotone_path(&s, &tree).unwrap().is_some(), report.in_class_r);
            if report.in_class_r {
                assert!(report.in_class_u);
            }
        }
    }
}
