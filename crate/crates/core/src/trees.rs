use std::fmt;

/// A complete binary tree: every internal node has exactly two children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn internal_nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.internal_nodes() + 1
    }

    /// Evaluate the expression formed by labelling every leaf with `leaf`
    /// and every internal node with the binary map `op`.
    pub fn evaluate<T: Clone>(&self, leaf: &T, op: &impl Fn(&T, &T) -> T) -> T {
        match self {
            BinaryTree::Leaf => leaf.clone(),
            BinaryTree::Node(l, r) => {
                let a = l.evaluate(leaf, op);
                let b = r.evaluate(leaf, op);
                op(&a, &b)
            }
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// All complete binary trees with the given number of internal nodes, in a
/// deterministic order (left subtree size increasing, then recursively).
/// There are Catalan(internal_nodes) of them.
pub fn complete_binary_trees(internal_nodes: usize) -> Vec<BinaryTree> {
    if internal_nodes == 0 {
        return vec![BinaryTree::Leaf];
    }
    let mut out = Vec::new();
    for left in 0..internal_nodes {
        let right = internal_nodes - 1 - left;
        for l in complete_binary_trees(left) {
            for r in complete_binary_trees(right) {
                out.push(BinaryTree::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> usize {
        // independent recurrence oracle
        let mut c = vec![0usize; n + 1];
        c[0] = 1;
        for m in 1..=n {
            c[m] = (0..m).map(|k| c[k] * c[m - 1 - k]).sum();
        }
        c[n]
    }

    #[test]
    fn counts_match_catalan() {
        for k in 0..=6 {
            let trees = complete_binary_trees(k);
            assert_eq!(trees.len(), catalan(k));
            assert!(trees.iter().all(|t| t.leaves() == k + 1));
        }
        assert_eq!(complete_binary_trees(2).len(), 2);
        assert_eq!(complete_binary_trees(4).len(), 14);
    }
}
