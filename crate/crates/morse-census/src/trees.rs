//! Labelled Morse trees: validity, brute-force enumeration, duality,
//! geometric invariants, plane structure and profile extraction.
//!
//! A normalized Morse tree of order `n` is a tree on vertices `1 .. 2n+2`
//! (label = level) in which every vertex has degree one or three and every
//! degree-3 vertex (a *node*) has at least one lower and one higher
//! neighbor. The enumeration over Prüfer sequences is deliberately naive:
//! it is the independent oracle against which the counting recurrences are
//! checked.

use crate::homology::{LatticePath, Step};
use std::collections::BTreeSet;
use std::fmt;

/// Labelled tree on `1 ..= 2n + 2` satisfying the Morse conditions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MorseTree {
    order: usize,
    adj: Vec<Vec<usize>>, // 1-indexed, each list sorted ascending
}

/// Check the Morse-tree conditions on a raw edge list over `1 ..= num_vertices`:
/// connected and acyclic, every degree in `{1, 3}`, and every degree-3
/// vertex adjacent to both a smaller and a larger label.
pub fn is_normalized_morse_tree(num_vertices: usize, edges: &[(usize, usize)]) -> bool {
    if num_vertices < 2 || !num_vertices.is_multiple_of(2) || edges.len() != num_vertices - 1 {
        return false;
    }
    let mut adj = vec![Vec::new(); num_vertices + 1];
    let mut seen_edges = BTreeSet::new();
    for &(u, v) in edges {
        if u == v || u < 1 || v < 1 || u > num_vertices || v > num_vertices {
            return false;
        }
        if !seen_edges.insert((u.min(v), u.max(v))) {
            return false;
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    // connected with num_vertices - 1 distinct edges => tree
    let mut visited = vec![false; num_vertices + 1];
    let mut stack = vec![1];
    visited[1] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !visited[w] {
                visited[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    if reached != num_vertices {
        return false;
    }
    for (v, nbrs) in adj.iter().enumerate().skip(1) {
        match nbrs.len() {
            1 => {}
            3 => {
                if !nbrs.iter().any(|&w| w < v) || !nbrs.iter().any(|&w| w > v) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

impl MorseTree {
    /// Build from an edge list, validating the Morse conditions.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Option<MorseTree> {
        let nv = 2 * order + 2;
        if !is_normalized_morse_tree(nv, edges) {
            return None;
        }
        let mut adj = vec![Vec::new(); nv + 1];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Some(MorseTree { order, adj })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.order + 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_vertices() - 1);
        for u in 1..=self.num_vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree-3 vertices (saddle points), ascending.
    pub fn nodes(&self) -> Vec<usize> {
        (1..=self.num_vertices())
            .filter(|&v| self.adj[v].len() == 3)
            .collect()
    }

    pub fn is_minimum(&self, v: usize) -> bool {
        self.adj[v].len() == 1 && self.adj[v][0] > v
    }

    pub fn is_maximum(&self, v: usize) -> bool {
        self.adj[v].len() == 1 && self.adj[v][0] < v
    }

    pub fn minima(&self) -> Vec<usize> {
        (1..=self.num_vertices())
            .filter(|&v| self.is_minimum(v))
            .collect()
    }

    pub fn maxima(&self) -> Vec<usize> {
        (1..=self.num_vertices())
            .filter(|&v| self.is_maximum(v))
            .collect()
    }

    /// Level of the lowest node minus one; ranges over `1 ..= n + 1`.
    /// The order-0 tree has no node and takes the maximal value 1.
    pub fn mu(&self) -> usize {
        self.nodes().first().map_or(self.order + 1, |&v| v - 1)
    }

    /// Relabel `i -> 2n + 3 - i` (turn the tree upside down). An involution
    /// on valid Morse trees.
    pub fn poincare_dual(&self) -> MorseTree {
        let nv = self.num_vertices();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (nv + 1 - v, nv + 1 - u))
            .collect();
        MorseTree::from_edges(self.order, &edges).expect("dual of a Morse tree is a Morse tree")
    }

    /// Extremum surplus and node-type counts; the two pairs are asserted
    /// equal, which any valid Morse tree satisfies.
    pub fn handle_statistics(&self) -> HandleStats {
        let extra_minima = self.minima().len() - 1;
        let extra_maxima = self.maxima().len() - 1;
        let mut negative_nodes = 0;
        let mut positive_nodes = 0;
        for v in self.nodes() {
            let below = self.adj[v].iter().filter(|&&w| w < v).count();
            match below {
                2 => negative_nodes += 1,
                1 => positive_nodes += 1,
                _ => unreachable!("node without both kinds of neighbors"),
            }
        }
        assert_eq!(
            negative_nodes, extra_minima,
            "negative nodes must match surplus minima"
        );
        assert_eq!(
            positive_nodes, extra_maxima,
            "positive nodes must match surplus maxima"
        );
        assert_eq!(self.nodes().len(), self.order);
        assert_eq!(self.minima().len() + self.maxima().len(), self.order + 2);
        HandleStats {
            extra_minima,
            extra_maxima,
            positive_nodes,
            negative_nodes,
        }
    }

    /// Highest label on the unique path between two local minima.
    pub fn mountain_pass_level(&self, u: usize, v: usize) -> usize {
        assert!(self.is_minimum(u), "{u} is not a local minimum");
        assert!(self.is_minimum(v), "{v} is not a local minimum");
        *self.path(u, v).iter().max().unwrap()
    }

    /// Vertices of the unique `u`-`v` path, endpoints included.
    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let nv = self.num_vertices();
        let mut prev = vec![0usize; nv + 1];
        let mut queue = std::collections::VecDeque::from([u]);
        prev[u] = u;
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &w in &self.adj[x] {
                if prev[w] == 0 {
                    prev[w] = x;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = prev[x];
            path.push(x);
        }
        path.reverse();
        path
    }

    /// Total map sending every vertex to its lowest neighbor.
    pub fn lowest_neighbor_map(&self) -> Vec<usize> {
        let mut map = vec![0usize; self.num_vertices() + 1];
        for (v, slot) in map.iter_mut().enumerate().skip(1) {
            *slot = self.adj[v][0];
        }
        map
    }

    /// Discrete gradient: local minima are fixed, every other vertex moves
    /// to its lowest neighbor below itself. Iterating always reaches a
    /// local minimum.
    pub fn gradient_map(&self) -> Vec<usize> {
        let mut map = vec![0usize; self.num_vertices() + 1];
        for (v, slot) in map.iter_mut().enumerate().skip(1) {
            *slot = if self.is_minimum(v) {
                v
            } else {
                *self.adj[v].iter().filter(|&&w| w < v).min().unwrap()
            };
        }
        map
    }

    /// Plane structure: root at the global minimum (vertex 1); at every
    /// vertex the outgoing edges are ordered by the label at their other
    /// endpoint.
    pub fn plane_structure(&self) -> PlantedPlaneTree {
        fn build(tree: &MorseTree, v: usize, parent: usize) -> PlantedPlaneTree {
            let children = tree.adj[v]
                .iter()
                .filter(|&&w| w != parent)
                .map(|&w| build(tree, w, v))
                .collect();
            PlantedPlaneTree { label: v, children }
        }
        build(self, 1, 0)
    }

    /// The colored plane tree with labels forgotten. At every node the edge
    /// to the highest successor points North; the edge to the other
    /// successor points Northeast when that successor is higher than the
    /// node and Southeast otherwise.
    pub fn profile(&self) -> MorseProfile {
        fn build(tree: &MorseTree, v: usize, parent: usize) -> ProfileNode {
            let succ: Vec<usize> = tree.adj[v]
                .iter()
                .copied()
                .filter(|&w| w != parent)
                .collect();
            match succ.as_slice() {
                [] => ProfileNode::Leaf,
                &[a, b] => {
                    let (left, right) = (a.max(b), a.min(b));
                    ProfileNode::Branch {
                        north: Box::new(build(tree, left, v)),
                        right_color: if right > v {
                            RightEdgeColor::Northeast
                        } else {
                            RightEdgeColor::Southeast
                        },
                        right: Box::new(build(tree, right, v)),
                    }
                }
                _ => unreachable!("vertex with degree other than 1 or 3"),
            }
        }
        let trunk = build(self, self.adj[1][0], 1);
        MorseProfile { trunk }
    }

    /// The sequence of sublevel Betti vectors `(b_0, b_1 + 1)` read off the
    /// tree, one point per level `1 ..= 2n + 1`: a closed lattice path of
    /// length `2n` from `(1, 1)` confined to the open first quadrant.
    pub fn betti_path(&self) -> LatticePath {
        let nv = self.num_vertices();
        let mut dsu: Vec<usize> = (0..=nv).collect();
        fn find(dsu: &mut Vec<usize>, v: usize) -> usize {
            if dsu[v] != v {
                let r = find(dsu, dsu[v]);
                dsu[v] = r;
            }
            dsu[v]
        }
        let mut components = 0i64;
        let mut crossing = 0i64;
        let mut points = Vec::with_capacity(nv - 1);
        for k in 1..=nv - 1 {
            components += 1;
            for &w in &self.adj[k] {
                if w < k {
                    crossing -= 1;
                    let (a, b) = (find(&mut dsu, k), find(&mut dsu, w));
                    if a != b {
                        dsu[a] = b;
                        components -= 1;
                    }
                } else {
                    crossing += 1;
                }
            }
            points.push((components, 1 + crossing - components));
        }
        let steps = points
            .windows(2)
            .map(|w| match (w[1].0 - w[0].0, w[1].1 - w[0].1) {
                (1, 0) => Step::East,
                (0, 1) => Step::North,
                (-1, 0) => Step::West,
                (0, -1) => Step::South,
                d => panic!("Betti vector jumped by {d:?}"),
            })
            .collect();
        LatticePath {
            start: points[0],
            steps,
        }
    }

    /// Line-based edge-list form: `order n` followed by one `u v` per edge.
    pub fn to_edge_text(&self) -> String {
        let mut out = format!("order {}\n", self.order);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Counts returned by [`MorseTree::handle_statistics`]: local-but-not-global
/// extrema and the node type split.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HandleStats {
    /// Local minima other than the global one (`m`).
    pub extra_minima: usize,
    /// Local maxima other than the global one (`M`).
    pub extra_maxima: usize,
    /// Nodes with two higher neighbors; equals `extra_maxima`.
    pub positive_nodes: usize,
    /// Nodes with two lower neighbors; equals `extra_minima`.
    pub negative_nodes: usize,
}

/// Rooted plane tree with labels retained; children in ascending label
/// order (the last child is the one the profile draws North).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlantedPlaneTree {
    pub label: usize,
    pub children: Vec<PlantedPlaneTree>,
}

impl PlantedPlaneTree {
    /// Parenthesized shape with labels forgotten.
    pub fn shape(&self) -> String {
        let mut s = String::from("(");
        for c in &self.children {
            s.push_str(&c.shape());
        }
        s.push(')');
        s
    }

    /// Parenthesized form with labels.
    pub fn labelled(&self) -> String {
        let mut s = format!("{}(", self.label);
        for c in &self.children {
            s.push_str(&c.labelled());
        }
        s.push(')');
        s
    }
}

/// Color of the edge from a node to its right successor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RightEdgeColor {
    Northeast,
    Southeast,
}

/// Unlabelled colored plane tree below one trunk vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ProfileNode {
    Leaf,
    Branch {
        north: Box<ProfileNode>,
        right_color: RightEdgeColor,
        right: Box<ProfileNode>,
    },
}

/// Planar Morse profile: the root edge is always North and points to
/// `trunk`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MorseProfile {
    pub trunk: ProfileNode,
}

impl MorseProfile {
    /// Colors along the right wing: the trunk vertex, then repeatedly the
    /// right successor, until a leaf.
    pub fn right_wing_colors(&self) -> Vec<RightEdgeColor> {
        let mut colors = Vec::new();
        let mut cur = &self.trunk;
        while let ProfileNode::Branch {
            right_color, right, ..
        } = cur
        {
            colors.push(*right_color);
            cur = right;
        }
        colors
    }

    /// Number of turning points on the right wing: wing positions that are
    /// not below their predecessor yet not below their successor (the wing
    /// ends count as satisfying the missing side). On profiles of Morse
    /// trees this is always exactly one.
    pub fn right_wing_turning_points(&self) -> usize {
        let colors = self.right_wing_colors();
        let s = colors.len();
        (0..=s)
            .filter(|&i| {
                let rising = i == 0 || colors[i - 1] == RightEdgeColor::Northeast;
                let falling = i == s || colors[i] == RightEdgeColor::Southeast;
                rising && falling
            })
            .count()
    }

    /// Canonical serialized form: `*` for a leaf, `(<north>e<right>)` or
    /// `(<north>s<right>)` for a branch.
    pub fn to_text(&self) -> String {
        fn ser(node: &ProfileNode, out: &mut String) {
            match node {
                ProfileNode::Leaf => out.push('*'),
                ProfileNode::Branch {
                    north,
                    right_color,
                    right,
                } => {
                    out.push('(');
                    ser(north, out);
                    out.push(match right_color {
                        RightEdgeColor::Northeast => 'e',
                        RightEdgeColor::Southeast => 's',
                    });
                    ser(right, out);
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        ser(&self.trunk, &mut out);
        out
    }
}

impl fmt::Display for MorseProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Default order cutoff for the Prüfer enumeration; order 4 means `10^8`
/// candidate sequences and is allowed only through
/// [`enumerate_morse_trees_extended`].
pub const ENUMERATION_CUTOFF: usize = 3;

/// Hard ceiling even for the extended enumeration.
pub const ENUMERATION_CEILING: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTooLarge {
    pub requested: usize,
    pub limit: usize,
}

impl fmt::Display for OrderTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tree enumeration of order {} exceeds the limit {}",
            self.requested, self.limit
        )
    }
}

impl std::error::Error for OrderTooLarge {}

/// Decode a Prüfer sequence over `1 ..= num_vertices` into the edge list of
/// the corresponding labelled tree.
pub fn prufer_decode(seq: &[usize], num_vertices: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, num_vertices);
    let mut degree = vec![1u8; num_vertices + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(num_vertices - 1);
    let mut ptr = 1;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(num_vertices), leaf.max(num_vertices)));
    edges
}

/// All normalized Morse trees of order `n <= 3`, sorted by edge list.
///
/// Runs over all `(2n+2)^{2n}` Prüfer sequences (a bijection onto labelled
/// trees, so the output is duplicate-free by construction) and keeps those
/// passing [`is_normalized_morse_tree`].
pub fn enumerate_morse_trees(n: usize) -> Result<Vec<MorseTree>, OrderTooLarge> {
    if n > ENUMERATION_CUTOFF {
        return Err(OrderTooLarge {
            requested: n,
            limit: ENUMERATION_CUTOFF,
        });
    }
    Ok(enumerate_unchecked(n))
}

/// Like [`enumerate_morse_trees`] but additionally allows order 4
/// (about `10^8` candidates, a few seconds).
pub fn enumerate_morse_trees_extended(n: usize) -> Result<Vec<MorseTree>, OrderTooLarge> {
    if n > ENUMERATION_CEILING {
        return Err(OrderTooLarge {
            requested: n,
            limit: ENUMERATION_CEILING,
        });
    }
    Ok(enumerate_unchecked(n))
}

fn enumerate_unchecked(n: usize) -> Vec<MorseTree> {
    let nv = 2 * n + 2;
    let len = nv - 2;
    let mut out = Vec::new();
    let mut seq = vec![1usize; len];
    let mut counts = vec![0u8; nv + 1];
    counts[1] = len as u8;
    loop {
        // degree(v) = multiplicity(v) + 1, so a Morse tree needs every
        // multiplicity in {0, 2}; cheap pre-filter before decoding
        let plausible = (1..=nv).all(|v| counts[v] == 0 || counts[v] == 2);
        if plausible {
            let edges = prufer_decode(&seq, nv);
            if is_normalized_morse_tree(nv, &edges) {
                out.push(MorseTree::from_edges(n, &edges).unwrap());
            }
        }
        // odometer over sequences
        let mut pos = len;
        loop {
            if pos == 0 {
                out.sort_unstable();
                return out;
            }
            pos -= 1;
            counts[seq[pos]] -= 1;
            if seq[pos] < nv {
                seq[pos] += 1;
                counts[seq[pos]] += 1;
                break;
            }
            seq[pos] = 1;
            counts[1] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn star(center: usize) -> Vec<(usize, usize)> {
        (1..=4)
            .filter(|&v| v != center)
            .map(|v| (v.min(center), v.max(center)))
            .collect()
    }

    #[test]
    fn validity_examples() {
        assert!(is_normalized_morse_tree(4, &star(2)));
        assert!(is_normalized_morse_tree(4, &star(3)));
        assert!(!is_normalized_morse_tree(4, &star(4))); // center has no higher neighbor
        assert!(!is_normalized_morse_tree(4, &star(1)));
        assert!(is_normalized_morse_tree(2, &[(1, 2)]));
        // degree 2 is not allowed
        assert!(!is_normalized_morse_tree(4, &[(1, 2), (2, 3), (3, 4)]));
    }

    #[test]
    fn prufer_bijection_on_four_vertices() {
        let mut seen = BTreeSet::new();
        for a in 1..=4 {
            for b in 1..=4 {
                let edges = prufer_decode(&[a, b], 4);
                assert_eq!(edges.len(), 3);
                assert!(seen.insert(edges));
            }
        }
        assert_eq!(seen.len(), 16); // Cayley: 4^2 labelled trees
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_morse_trees(0).unwrap().len(), 1);
        assert_eq!(enumerate_morse_trees(1).unwrap().len(), 2);
        assert_eq!(enumerate_morse_trees(2).unwrap().len(), 19);
        assert!(enumerate_morse_trees(4).is_err());
        assert!(enumerate_morse_trees_extended(5).is_err());
    }

    #[test]
    fn order_one_trees_are_the_two_stars() {
        let trees = enumerate_morse_trees(1).unwrap();
        let expect: BTreeSet<Vec<(usize, usize)>> = [star(2), star(3)].into_iter().collect();
        let got: BTreeSet<Vec<(usize, usize)>> = trees.iter().map(|t| t.edges()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn mu_examples() {
        let t2 = MorseTree::from_edges(1, &star(2)).unwrap();
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        assert_eq!(t2.mu(), 1);
        assert_eq!(t3.mu(), 2);
        let order0 = MorseTree::from_edges(0, &[(1, 2)]).unwrap();
        assert_eq!(order0.mu(), 1);
    }

    #[test]
    fn mu_histogram_order_two() {
        let trees = enumerate_morse_trees(2).unwrap();
        let mut hist = BTreeMap::new();
        for t in &trees {
            *hist.entry(t.mu()).or_insert(0usize) += 1;
        }
        assert_eq!(hist, BTreeMap::from([(1, 8), (2, 8), (3, 3)]));
    }

    #[test]
    fn duality() {
        let t2 = MorseTree::from_edges(1, &star(2)).unwrap();
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        assert_eq!(t2.poincare_dual(), t3);
        for n in 0..=2 {
            let trees = enumerate_morse_trees(n).unwrap();
            let set: BTreeSet<_> = trees.iter().cloned().collect();
            for t in &trees {
                let d = t.poincare_dual();
                assert!(set.contains(&d), "dual left the enumerated set");
                assert_eq!(d.poincare_dual(), *t, "duality is an involution");
            }
        }
        // self-dual counts have no closed form here; values from the oracle
        let self_dual = |n: usize| {
            enumerate_morse_trees(n)
                .unwrap()
                .iter()
                .filter(|t| t.poincare_dual() == **t)
                .count()
        };
        assert_eq!(self_dual(0), 1);
        assert_eq!(self_dual(1), 0);
        assert_eq!(self_dual(2), 5);
    }

    #[test]
    fn handle_statistics_examples() {
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        let st = t3.handle_statistics();
        assert_eq!(
            (
                st.extra_minima,
                st.extra_maxima,
                st.positive_nodes,
                st.negative_nodes
            ),
            (1, 0, 0, 1)
        );
        let order0 = MorseTree::from_edges(0, &[(1, 2)]).unwrap();
        let st0 = order0.handle_statistics();
        assert_eq!(
            (
                st0.extra_minima,
                st0.extra_maxima,
                st0.positive_nodes,
                st0.negative_nodes
            ),
            (0, 0, 0, 0)
        );
        for t in enumerate_morse_trees(2).unwrap() {
            t.handle_statistics(); // asserts internally
        }
    }

    #[test]
    fn mountain_pass_examples() {
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        assert_eq!(t3.mountain_pass_level(1, 2), 3);
        assert_eq!(t3.mountain_pass_level(1, 1), 1);
        // both values 3 and 4 occur for the pair (1, 2) among order-2 trees
        let mut seen = BTreeSet::new();
        for t in enumerate_morse_trees(2).unwrap() {
            if t.is_minimum(1) && t.is_minimum(2) {
                seen.insert(t.mountain_pass_level(1, 2));
            }
        }
        assert!(
            seen.contains(&3) && seen.contains(&4),
            "values seen: {seen:?}"
        );
    }

    #[test]
    #[should_panic(expected = "not a local minimum")]
    fn mountain_pass_rejects_non_minima() {
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        t3.mountain_pass_level(1, 4);
    }

    #[test]
    fn lowest_neighbor_examples() {
        let t2 = MorseTree::from_edges(1, &star(2)).unwrap();
        assert_eq!(t2.lowest_neighbor_map()[2], 1);
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        assert_eq!(t3.lowest_neighbor_map()[4], 3);
    }

    #[test]
    fn lowest_neighbor_distinguishes_a_betti_equal_pair() {
        let trees = enumerate_morse_trees(2).unwrap();
        let found = trees.iter().enumerate().any(|(i, a)| {
            trees[i + 1..].iter().any(|b| {
                a.betti_path() == b.betti_path()
                    && a.lowest_neighbor_map() != b.lowest_neighbor_map()
            })
        });
        assert!(found);
    }

    #[test]
    fn gradient_examples() {
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        let g = t3.gradient_map();
        assert_eq!(g[3], 1); // lowest of {1, 2}
        for t in enumerate_morse_trees(2).unwrap() {
            let g = t.gradient_map();
            for v in 1..=t.num_vertices() {
                assert_eq!(
                    g[v] == v,
                    t.is_minimum(v),
                    "fixed points are exactly the minima"
                );
                // orbit reaches a minimum within num_vertices steps
                let mut x = v;
                let mut steps = 0;
                while g[x] != x {
                    x = g[x];
                    steps += 1;
                    assert!(
                        steps <= t.num_vertices(),
                        "gradient orbit failed to terminate"
                    );
                }
            }
        }
    }

    #[test]
    fn plane_structure_examples() {
        let order0 = MorseTree::from_edges(0, &[(1, 2)]).unwrap();
        let p = order0.plane_structure();
        assert_eq!(p.label, 1);
        assert_eq!(p.children.len(), 1);
        assert_eq!(p.children[0].label, 2);

        // the two order-1 stars give distinct labelled plane trees but the
        // same shape; shape counts stay within the Catalan bound
        let trees = enumerate_morse_trees(1).unwrap();
        let labelled: BTreeSet<String> = trees
            .iter()
            .map(|t| t.plane_structure().labelled())
            .collect();
        assert_eq!(labelled.len(), 2);
        for (n, catalan) in [(0usize, 1usize), (1, 1), (2, 2), (3, 5)] {
            let shapes: BTreeSet<String> = enumerate_morse_trees(n)
                .unwrap()
                .iter()
                .map(|t| t.plane_structure().shape())
                .collect();
            assert!(shapes.len() <= catalan, "n = {n}: {} shapes", shapes.len());
        }
    }

    #[test]
    fn profile_examples() {
        let order0 = MorseTree::from_edges(0, &[(1, 2)]).unwrap();
        assert_eq!(order0.profile().to_text(), "*"); // single North edge
        let t2 = MorseTree::from_edges(1, &star(2)).unwrap();
        let t3 = MorseTree::from_edges(1, &star(3)).unwrap();
        assert_eq!(t2.profile().to_text(), "(*e*)");
        assert_eq!(t3.profile().to_text(), "(*s*)");

        for (n, want) in [(1usize, 2usize), (2, 7)] {
            let profiles: BTreeSet<MorseProfile> = enumerate_morse_trees(n)
                .unwrap()
                .iter()
                .map(|t| t.profile())
                .collect();
            assert_eq!(profiles.len(), want, "n = {n}");
        }
    }

    #[test]
    fn right_wing_turning_points_always_one() {
        let order0 = MorseTree::from_edges(0, &[(1, 2)]).unwrap();
        assert_eq!(order0.profile().right_wing_turning_points(), 1);
        for n in 0..=2 {
            for t in enumerate_morse_trees(n).unwrap() {
                assert_eq!(t.profile().right_wing_turning_points(), 1);
            }
        }
    }

    #[test]
    fn betti_paths_are_good_and_collapse_to_homology_counts() {
        for (n, want) in [(1usize, 2usize), (2, 10)] {
            let mut paths = BTreeSet::new();
            for t in enumerate_morse_trees(n).unwrap() {
                let p = t.betti_path();
                assert_eq!(p.start, (1, 1));
                assert_eq!(p.steps.len(), 2 * n);
                assert!(p.is_good() && p.is_closed());
                paths.insert(p);
            }
            assert_eq!(paths.len(), want, "distinct Betti paths at n = {n}");
        }
    }

    #[test]
    fn edge_text_format() {
        let t2 = MorseTree::from_edges(1, &star(2)).unwrap();
        assert_eq!(t2.to_edge_text(), "order 1\n1 2\n2 3\n2 4\n");
    }
}
