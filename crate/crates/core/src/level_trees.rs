//! Rooted stable level trees on the markings `{0, ..., n}`.
//!
//! Trees are generated by un-pruning: a tree with `k + 1` levels on a label
//! set `L` is a tree with `k` levels on `F ∪ {b_1, ..., b_r}` in which every
//! placeholder `b_i` is replaced by a new top-level vertex carrying a block
//! `B_i` of at least two labels, where `L = F ⊔ B_1 ⊔ ... ⊔ B_r`. Labels are
//! distinguishable, so every tree is rigid and no automorphism weights occur.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::for_each_set_partition;
use crate::error::{ChowError, Result};
use crate::poly::QPoly;

#[derive(Clone, Debug)]
pub struct LevelTree {
    n: usize,
    /// `parent[v]`; the root is vertex 0 and has no parent.
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    /// `marking[i]` is the vertex carrying marking `i`, for `i` in `0..=n`.
    marking: Vec<usize>,
}

/// `(level, markings below the vertex)` for every vertex, sorted. Two trees
/// are isomorphic iff their keys agree.
pub type CanonicalKey = Vec<(usize, Vec<usize>)>;

impl LevelTree {
    /// Builds and validates a tree.
    pub fn new(n: usize, parent: Vec<Option<usize>>, level: Vec<usize>, marking: Vec<usize>) -> Result<Self> {
        let tree = LevelTree { n, parent, level, marking };
        tree.validate()?;
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn marking(&self, i: usize) -> usize {
        self.marking[i]
    }

    /// Number of levels, `k + 1`.
    pub fn length(&self) -> usize {
        self.level.iter().max().map_or(0, |m| m + 1)
    }

    pub fn vertices_at(&self, j: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.level[v] == j).collect()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&w| self.parent[w] == Some(v)).collect()
    }

    pub fn markings_on(&self, v: usize) -> Vec<usize> {
        (0..=self.n).filter(|&i| self.marking[i] == v).collect()
    }

    /// `val(v) + |m^{-1}(v)|`.
    pub fn degree(&self, v: usize) -> usize {
        let val = self.children(v).len() + usize::from(self.parent[v].is_some());
        val + self.markings_on(v).len()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(ChowError::OutOfRange(format!("invalid level tree: {msg}")));
        let nv = self.parent.len();
        if nv == 0 || self.level.len() != nv || self.marking.len() != self.n + 1 {
            return bad("inconsistent sizes".into());
        }
        if self.parent[0].is_some() || (1..nv).any(|v| self.parent[v].is_none()) {
            return bad("vertex 0 must be the unique root".into());
        }
        if self.marking[0] != 0 {
            return bad("marking 0 must sit on the root".into());
        }
        if self.marking.iter().any(|&v| v >= nv) {
            return bad("marking on a missing vertex".into());
        }
        // every vertex reaches the root, with strictly increasing levels
        for v in 1..nv {
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = self.parent[cur] {
                if p >= nv || self.level[p] >= self.level[cur] {
                    return bad(format!("level does not increase along edge {p} -> {cur}"));
                }
                cur = p;
                steps += 1;
                if steps > nv {
                    return bad("cycle".into());
                }
            }
        }
        let k = self.length();
        if (0..k).any(|j| !self.level.contains(&j)) {
            return bad("level map is not surjective".into());
        }
        if let Some(v) = (0..nv).find(|&v| self.degree(v) < 3) {
            return bad(format!("vertex {v} is unstable"));
        }
        Ok(())
    }

    fn below(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..=self.n)
            .filter(|&i| {
                let mut cur = self.marking[i];
                loop {
                    if cur == v {
                        return true;
                    }
                    match self.parent[cur] {
                        Some(p) => cur = p,
                        None => return false,
                    }
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        let mut key: CanonicalKey = (0..self.vertex_count()).map(|v| (self.level[v], self.below(v))).collect();
        key.sort();
        key
    }

    /// Deletes the top-level vertices and replaces each by a marking. New
    /// markings `1..=m` follow the lexicographic order of the subsets of
    /// `{1..n}` they stand for; the subsets are returned alongside.
    pub fn prune(&self) -> Option<(LevelTree, Vec<Vec<usize>>)> {
        let k = self.length().checked_sub(1).filter(|&k| k >= 1)?;
        let top: Vec<usize> = self.vertices_at(k);
        let mut items: Vec<(Vec<usize>, usize)> = Vec::new(); // (subset, attach vertex in old indexing)
        for i in 1..=self.n {
            let v = self.marking[i];
            if self.level[v] != k {
                items.push((vec![i], v));
            }
        }
        for &v in &top {
            let mut s = self.markings_on(v);
            s.sort_unstable();
            items.push((s, self.parent[v].expect("top vertex is not the root")));
        }
        items.sort();
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| self.level[*v] != k).collect();
        let remap: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let parent = keep.iter().map(|&v| self.parent[v].map(|p| remap[&p])).collect();
        let level = keep.iter().map(|&v| self.level[v]).collect();
        let mut marking = vec![0];
        marking.extend(items.iter().map(|(_, v)| remap[v]));
        let tree = LevelTree { n: items.len(), parent, level, marking };
        Some((tree, items.into_iter().map(|(s, _)| s).collect()))
    }

    /// Inverse of [`prune`](Self::prune): marking `j` of `self` with a subset
    /// of size at least two becomes a new top-level vertex carrying it.
    pub fn unprune(&self, subsets: &[Vec<usize>]) -> Result<LevelTree> {
        if subsets.len() != self.n {
            return Err(ChowError::OutOfRange("one subset per marking required".into()));
        }
        let n: usize = subsets.iter().map(Vec::len).sum();
        let top = self.length();
        let mut parent = self.parent.clone();
        let mut level = self.level.clone();
        let mut marking = vec![usize::MAX; n + 1];
        marking[0] = 0;
        for (j, subset) in subsets.iter().enumerate() {
            let host = self.marking[j + 1];
            let v = if subset.len() == 1 {
                host
            } else {
                parent.push(Some(host));
                level.push(top);
                parent.len() - 1
            };
            for &i in subset {
                if i == 0 || i > n || marking[i] != usize::MAX {
                    return Err(ChowError::OutOfRange("subsets must partition 1..=n".into()));
                }
                marking[i] = v;
            }
        }
        LevelTree::new(n, parent, level, marking)
    }
}

/// Builds a concrete tree from the root labels and the chosen layers.
struct Builder<'a> {
    n: usize,
    blocks: &'a [(usize, Vec<u32>)], // placeholder id - n - 1 -> (level, block)
}

impl Builder<'_> {
    fn build(&self, root_labels: &[u32]) -> LevelTree {
        let mut tree = LevelTree { n: self.n, parent: vec![None], level: vec![0], marking: vec![0; self.n + 1] };
        self.attach(&mut tree, 0, root_labels);
        tree
    }

    fn attach(&self, tree: &mut LevelTree, v: usize, labels: &[u32]) {
        for &l in labels {
            let l = l as usize;
            if l <= self.n {
                tree.marking[l] = v;
            } else {
                let (lvl, block) = &self.blocks[l - self.n - 1];
                tree.parent.push(Some(v));
                tree.level.push(*lvl);
                let w = tree.parent.len() - 1;
                self.attach(tree, w, block);
            }
        }
    }
}

/// Visits every level tree on markings `{0..n}` exactly once.
pub fn for_each_level_tree(n: usize, mut visit: impl FnMut(&LevelTree)) {
    if n < 2 {
        return;
    }
    let labels: Vec<u32> = (1..=n as u32).collect();
    let mut layers: Vec<Vec<(u32, Vec<u32>)>> = Vec::new();
    let mut next_id = n as u32 + 1;
    recurse(n, &labels, &mut layers, &mut next_id, &mut visit);
}

fn recurse(
    n: usize,
    labels: &[u32],
    layers: &mut Vec<Vec<(u32, Vec<u32>)>>,
    next_id: &mut u32,
    visit: &mut dyn FnMut(&LevelTree),
) {
    // one level: the root carries all remaining labels
    let depth = layers.len();
    let mut blocks = vec![(0usize, Vec::new()); (*next_id as usize) - n - 1];
    for (i, layer) in layers.iter().enumerate() {
        for (id, block) in layer {
            blocks[*id as usize - n - 1] = (depth - i, block.clone());
        }
    }
    visit(&Builder { n, blocks: &blocks }.build(labels));

    // add a level: split labels into kept ones and blocks of size >= 2;
    // element value 0 means kept, value b >= 1 means block b
    let m = labels.len();
    for_each_set_partition(m + 1, |rgs, parts| {
        // rgs[0] = 0 is a sentinel for the "kept" class
        let assign = &rgs[1..];
        let r = parts - 1;
        if r == 0 {
            return;
        }
        let mut sizes = vec![0usize; parts];
        for &a in assign {
            sizes[a] += 1;
        }
        if sizes[1..].iter().any(|&s| s < 2) || sizes[0] + r < 2 {
            return;
        }
        let mut layer: Vec<(u32, Vec<u32>)> = Vec::with_capacity(r);
        let base = *next_id;
        for b in 1..=r {
            let block: Vec<u32> = assign.iter().zip(labels).filter(|(a, _)| **a == b).map(|(_, l)| *l).collect();
            layer.push((base + b as u32 - 1, block));
        }
        let mut next_labels: Vec<u32> = assign.iter().zip(labels).filter(|(a, _)| **a == 0).map(|(_, l)| *l).collect();
        next_labels.extend(layer.iter().map(|(id, _)| *id));
        *next_id += r as u32;
        layers.push(layer);
        recurse(n, &next_labels, layers, next_id, visit);
        layers.pop();
        *next_id -= r as u32;
    });
}

/// Collects all trees; only sensible for small `n`.
pub fn enumerate_level_trees(n: usize) -> Vec<LevelTree> {
    let mut out = Vec::new();
    for_each_level_tree(n, |t| out.push(t.clone()));
    out
}

/// `prod_{i=2}^{m-2} (q - i)`, the point count of `M_{0,m}`.
pub fn open_stratum_count(m: usize) -> QPoly {
    (2..m.saturating_sub(1)).fold(QPoly::one(), |acc, i| &acc * &QPoly::linear(i as i64))
}

/// Class of the stratum of a level tree: per level, the product of
/// `(q-1) P_open(deg v)` over its vertices divided by one factor `q - 1`.
pub fn stratum_epoly(tree: &LevelTree) -> QPoly {
    let mut total = QPoly::one();
    for j in 0..tree.length() {
        let verts = tree.vertices_at(j);
        total = &total * &QPoly::linear(1).pow(verts.len() as u32 - 1);
        for v in verts {
            total = &total * &open_stratum_count(tree.degree(v));
        }
    }
    total
}

/// Per-length tree counts and E-polynomial contributions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrataSummary {
    pub n: usize,
    pub counts_by_length: BTreeMap<usize, u64>,
    pub epoly_by_length: BTreeMap<usize, QPoly>,
}

impl StrataSummary {
    pub fn total_count(&self) -> u64 {
        self.counts_by_length.values().sum()
    }

    pub fn epoly(&self) -> QPoly {
        self.epoly_by_length.values().fold(QPoly::zero(), |acc, p| &acc + p)
    }
}

/// Streams all trees and sums stratum classes; `count_only` skips the
/// polynomials.
pub fn strata_summary(n: usize, count_only: bool) -> StrataSummary {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    // accumulate integer coefficient vectors per length, then convert
    let mut polys: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for_each_level_tree(n, |t| {
        let len = t.length();
        *counts.entry(len).or_insert(0) += 1;
        if !count_only {
            let e = stratum_epoly(t);
            let ints = e.to_integers().expect("stratum classes have integer coefficients");
            let slot = polys.entry(len).or_default();
            if slot.len() < ints.len() {
                slot.resize(ints.len(), BigInt::zero());
            }
            for (s, c) in slot.iter_mut().zip(ints) {
                *s += c;
            }
        }
    });
    let epoly_by_length = polys
        .into_iter()
        .map(|(len, c)| (len, QPoly::from_coeffs(c.into_iter().map(num_rational::BigRational::from_integer).collect())))
        .collect();
    StrataSummary { n, counts_by_length: counts, epoly_by_length }
}

/// E-polynomial of the whole space as a sum over strata.
pub fn epoly_bn(n: usize) -> QPoly {
    strata_summary(n, false).epoly()
}

/// Chains (including the empty one) in the proper part of the partition
/// lattice of an `n`-set, by summing powers of the strict zeta matrix.
pub fn chain_count(n: usize) -> BigInt {
    let mut elems: Vec<Vec<usize>> = Vec::new();
    for_each_set_partition(n, |rgs, blocks| {
        if blocks > 1 && blocks < n {
            elems.push(rgs.to_vec());
        }
    });
    let refines = |a: &[usize], b: &[usize]| (0..n).all(|i| (0..i).all(|j| a[i] != a[j] || b[i] == b[j]));
    let m = elems.len();
    let strict: Vec<Vec<usize>> =
        (0..m).map(|x| (0..m).filter(|&y| x != y && refines(&elems[x], &elems[y])).collect()).collect();
    // v_1 = all ones; v_{k+1}[y] = sum_{x < y} v_k[x]
    let mut total = BigInt::one();
    let mut v = vec![BigInt::one(); m];
    while v.iter().any(|c| !c.is_zero()) {
        total += v.iter().sum::<BigInt>();
        let mut next = vec![BigInt::zero(); m];
        for x in 0..m {
            if v[x].is_zero() {
                continue;
            }
            for &y in &strict[x] {
                next[y] += &v[x];
            }
        }
        v = next;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_enumerations() {
        let t2 = enumerate_level_trees(2);
        assert_eq!(t2.len(), 1);
        assert_eq!(t2[0].vertex_count(), 1);
        let t3 = enumerate_level_trees(3);
        assert_eq!(t3.len(), 4);
        assert_eq!(t3.iter().filter(|t| t.length() == 2).count(), 3);
        for t in &t3 {
            if t.length() == 2 {
                assert_eq!(t.markings_on(0).len(), 2);
                assert_eq!(t.vertex_count(), 2);
            }
        }
        let s4 = strata_summary(4, true);
        assert_eq!(s4.counts_by_length, BTreeMap::from([(1, 1), (2, 13), (3, 18)]));
    }

    #[test]
    fn chain_counts() {
        assert_eq!(chain_count(2), BigInt::from(1));
        assert_eq!(chain_count(3), BigInt::from(4));
        assert_eq!(chain_count(4), BigInt::from(32));
        for n in 2..=6 {
            assert_eq!(BigInt::from(strata_summary(n, true).total_count()), chain_count(n));
        }
    }

    #[test]
    fn trees_are_valid_and_distinct() {
        for n in 2..=5 {
            let trees = enumerate_level_trees(n);
            let keys: HashSet<CanonicalKey> = trees.iter().map(LevelTree::canonical_key).collect();
            assert_eq!(keys.len(), trees.len());
            for t in &trees {
                t.validate().unwrap();
                assert_eq!(t.vertices_at(0), vec![0]);
                assert!(t.length() < n);
            }
        }
    }

    #[test]
    fn stratum_examples() {
        let one_level = LevelTree::new(4, vec![None], vec![0], vec![0; 5]).unwrap();
        assert_eq!(stratum_epoly(&one_level), QPoly::from_ints(&[6, -5, 1]));
        // root {0,1,2} -> child {3,4}
        let t = LevelTree::new(4, vec![None, Some(0)], vec![0, 1], vec![0, 0, 0, 1, 1]).unwrap();
        assert_eq!(stratum_epoly(&t), QPoly::linear(2));
        // root {0} with level-1 children {1,2} and {3,4}
        let t = LevelTree::new(4, vec![None, Some(0), Some(0)], vec![0, 1, 1], vec![0, 1, 1, 2, 2]).unwrap();
        assert_eq!(stratum_epoly(&t), QPoly::linear(1));
    }

    #[test]
    fn validation_rejects_bad_trees() {
        // unstable child with a single marking
        assert!(LevelTree::new(2, vec![None, Some(0)], vec![0, 1], vec![0, 0, 1]).is_err());
        // levels not strictly increasing
        assert!(LevelTree::new(4, vec![None, Some(0)], vec![0, 0], vec![0, 0, 0, 1, 1]).is_err());
        // level 1 skipped
        assert!(LevelTree::new(4, vec![None, Some(0)], vec![0, 2], vec![0, 0, 0, 1, 1]).is_err());
    }

    #[test]
    fn epoly_small() {
        assert_eq!(epoly_bn(3), QPoly::from_ints(&[1, 1]));
        assert_eq!(epoly_bn(4), QPoly::from_ints(&[1, 8, 1]));
        assert_eq!(epoly_bn(5), QPoly::from_ints(&[1, 41, 41, 1]));
    }

    #[test]
    fn prune_round_trip() {
        for n in 2..=5 {
            for t in enumerate_level_trees(n) {
                match t.prune() {
                    None => assert_eq!(t.length(), 1),
                    Some((pruned, subsets)) => {
                        assert_eq!(pruned.length() + 1, t.length());
                        pruned.validate().unwrap();
                        let back = pruned.unprune(&subsets).unwrap();
                        assert_eq!(back.canonical_key(), t.canonical_key());
                    }
                }
            }
        }
    }
}
