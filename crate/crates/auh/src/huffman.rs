//! Huffman tree construction with a deterministic, anti-uniform-favoring
//! tie-break.
//!
//! At each step the two lightest units merge. Among equal weights the most
//! recently created unit wins, so composite nodes beat original leaves and
//! boundary sources such as the uniform 3-symbol one come out anti-uniform.
//! Edge labels follow the spine convention: when a leaf merges with a
//! composite, the leaf takes the 0 branch and the composite descends on 1;
//! on anti-uniform chains the codewords are then exactly the canonical unary
//! set `0, 10, 110, ...`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::dist::Distribution;
use crate::profile::LengthProfile;
use crate::real::Real;

pub type NodeId = usize;

#[derive(Clone, Debug)]
pub enum NodeKind {
    /// Leaf for the symbol at 0-based sorted position `symbol`.
    Leaf { symbol: usize },
    /// Internal node; `zero` and `one` are the edge labels.
    Internal { zero: NodeId, one: NodeId },
}

#[derive(Clone, Debug)]
pub struct Node {
    pub weight: Real,
    pub kind: NodeKind,
}

/// A binary code tree; leaves carry sorted symbol positions, internal nodes
/// carry the sum of the leaf weights beneath them.
#[derive(Clone, Debug)]
pub struct CodeTree {
    nodes: Vec<Node>,
    root: NodeId,
}

struct HeapItem {
    weight: Real,
    created: u64,
    id: NodeId,
    is_leaf: bool,
}

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapItem {}
impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapItem {
    // Light weights first; among ties the most recently created unit.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then(other.created.cmp(&self.created))
    }
}

/// Builds the Huffman tree for a validated distribution.
pub fn build_huffman(dist: &Distribution) -> CodeTree {
    let n = dist.n();
    let mut nodes: Vec<Node> = Vec::with_capacity(2 * n - 1);
    let mut heap: BinaryHeap<std::cmp::Reverse<HeapItem>> = BinaryHeap::with_capacity(n);
    for (i, p) in dist.probs().iter().enumerate() {
        nodes.push(Node {
            weight: p.clone(),
            kind: NodeKind::Leaf { symbol: i },
        });
        heap.push(std::cmp::Reverse(HeapItem {
            weight: p.clone(),
            created: i as u64,
            id: i,
            is_leaf: true,
        }));
    }
    let mut created = n as u64;
    while heap.len() > 1 {
        let first = heap.pop().expect("len > 1").0;
        let second = heap.pop().expect("len > 1").0;
        // Leaf-vs-composite merges keep the leaf on the terminating 0 branch.
        let (zero, one) = match (first.is_leaf, second.is_leaf) {
            (true, false) => (first.id, second.id),
            (false, true) => (second.id, first.id),
            _ => (second.id, first.id),
        };
        let weight = &first.weight + &second.weight;
        let id = nodes.len();
        nodes.push(Node {
            weight: weight.clone(),
            kind: NodeKind::Internal { zero, one },
        });
        heap.push(std::cmp::Reverse(HeapItem {
            weight,
            created,
            id,
            is_leaf: false,
        }));
        created += 1;
    }
    let root = heap.pop().expect("nonempty").0.id;
    CodeTree { nodes, root }
}

impl CodeTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn n_leaves(&self) -> usize {
        (self.nodes.len() + 1) / 2
    }

    /// Leaf depths indexed by sorted symbol position.
    pub fn leaf_depths(&self) -> Vec<u32> {
        let mut depths = vec![0u32; self.n_leaves()];
        let mut stack = vec![(self.root, 0u32)];
        while let Some((id, depth)) = stack.pop() {
            match &self.nodes[id].kind {
                NodeKind::Leaf { symbol } => depths[*symbol] = depth,
                NodeKind::Internal { zero, one } => {
                    stack.push((*zero, depth + 1));
                    stack.push((*one, depth + 1));
                }
            }
        }
        depths
    }

    /// Codewords indexed by sorted symbol position; `false` is the 0 bit.
    pub fn codewords(&self) -> Vec<Vec<bool>> {
        let mut words = vec![Vec::new(); self.n_leaves()];
        let mut stack = vec![(self.root, Vec::new())];
        while let Some((id, prefix)) = stack.pop() {
            match &self.nodes[id].kind {
                NodeKind::Leaf { symbol } => words[*symbol] = prefix,
                NodeKind::Internal { zero, one } => {
                    let mut left = prefix.clone();
                    left.push(false);
                    stack.push((*zero, left));
                    let mut right = prefix;
                    right.push(true);
                    stack.push((*one, right));
                }
            }
        }
        words
    }

    /// Sum of leaf weights under `id`; equals the node weight by
    /// construction, re-derived here for invariant checks.
    pub fn subtree_leaf_weight(&self, id: NodeId) -> Real {
        match &self.nodes[id].kind {
            NodeKind::Leaf { .. } => self.nodes[id].weight.clone(),
            NodeKind::Internal { zero, one } => {
                &self.subtree_leaf_weight(*zero) + &self.subtree_leaf_weight(*one)
            }
        }
    }
}

/// Codeword lengths of a tree, aligned with sorted symbol order.
pub fn length_profile(tree: &CodeTree) -> LengthProfile {
    LengthProfile::new(tree.leaf_depths()).expect("trees have >= 2 leaves")
}
