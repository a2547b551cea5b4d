//! CART-style decision tree with axis-aligned binary splits.
//!
//! Split thresholds sit at midpoints between consecutive distinct feature
//! values; the best split maximizes impurity decrease with deterministic
//! tie-breaking (lowest feature index, then lowest threshold). Zero-gain
//! splits are allowed — an XOR-shaped node has no single informative split
//! but its children do.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math;

/// Split quality measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Gini,
    Entropy,
}

impl Criterion {
    pub fn parse(s: &str) -> Option<Criterion> {
        match s {
            "gini" => Some(Criterion::Gini),
            "entropy" => Some(Criterion::Entropy),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Gini => "gini",
            Criterion::Entropy => "entropy",
        }
    }

    fn impurity(self, counts: &[usize], n: usize) -> f64 {
        if n == 0 {
            return 0.0;
        }
        let n = n as f64;
        match self {
            Criterion::Gini => {
                1.0 - counts
                    .iter()
                    .map(|&c| {
                        let p = c as f64 / n;
                        p * p
                    })
                    .sum::<f64>()
            }
            Criterion::Entropy => counts
                .iter()
                .filter(|&&c| c > 0)
                .map(|&c| {
                    let p = c as f64 / n;
                    -p * math::log2(p)
                })
                .sum(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum TreeNode {
    Leaf {
        label: usize,
    },
    Split {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionTreeModel {
    /// Flat node arena; the root is node 0.
    pub nodes: Vec<TreeNode>,
    pub n_features: usize,
    pub n_classes: usize,
    /// Impurity-decrease importances, normalized to sum 1 when any split
    /// exists.
    pub importances: Vec<f64>,
}

impl DecisionTreeModel {
    /// Grow a tree. `max_features` samples that many split candidates per
    /// node from `rng` (used by the forest); `None` considers every
    /// feature.
    pub fn fit(
        rows: &[Vec<f64>],
        labels: &[usize],
        n_classes: usize,
        criterion: Criterion,
        max_depth: Option<usize>,
        max_features: Option<usize>,
        mut rng: Option<&mut ChaCha8Rng>,
    ) -> Result<DecisionTreeModel> {
        if rows.is_empty() || rows.len() != labels.len() {
            return Err(Error::Training(alloc::format!(
                "bad training shape: {} rows, {} labels",
                rows.len(),
                labels.len()
            )));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= n_classes) {
            return Err(Error::Training(alloc::format!(
                "label {bad} out of range 0..{n_classes}"
            )));
        }
        let n_features = rows[0].len();
        let mut builder = Builder {
            rows,
            labels,
            n_classes,
            criterion,
            max_depth,
            max_features,
            rng: rng.as_deref_mut(),
            nodes: Vec::new(),
            importances: vec![0.0; n_features],
            total: rows.len() as f64,
        };
        let indices: Vec<usize> = (0..rows.len()).collect();
        builder.build(indices, 0);

        let sum: f64 = builder.importances.iter().sum();
        if sum > 0.0 {
            for v in builder.importances.iter_mut() {
                *v /= sum;
            }
        }
        Ok(DecisionTreeModel {
            nodes: builder.nodes,
            n_features,
            n_classes,
            importances: builder.importances,
        })
    }

    pub fn predict(&self, row: &[f64]) -> usize {
        let mut index = 0usize;
        loop {
            match &self.nodes[index] {
                TreeNode::Leaf { label } => return *label,
                TreeNode::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => {
                    index = if row[*feature] <= *threshold {
                        *left
                    } else {
                        *right
                    };
                }
            }
        }
    }

    pub fn depth(&self) -> usize {
        fn walk(nodes: &[TreeNode], index: usize) -> usize {
            match &nodes[index] {
                TreeNode::Leaf { .. } => 0,
                TreeNode::Split { left, right, .. } => 1 + walk(nodes, *left).max(walk(nodes, *right)),
            }
        }
        walk(&self.nodes, 0)
    }
}

struct Builder<'a> {
    rows: &'a [Vec<f64>],
    labels: &'a [usize],
    n_classes: usize,
    criterion: Criterion,
    max_depth: Option<usize>,
    max_features: Option<usize>,
    rng: Option<&'a mut ChaCha8Rng>,
    nodes: Vec<TreeNode>,
    importances: Vec<f64>,
    total: f64,
}

struct BestSplit {
    decrease: f64,
    feature: usize,
    threshold: f64,
}

impl Builder<'_> {
    fn build(&mut self, indices: Vec<usize>, depth: usize) -> usize {
        let counts = self.class_counts(&indices);
        let majority = majority_label(&counts);
        let pure = counts.iter().filter(|&&c| c > 0).count() <= 1;
        let depth_reached = self.max_depth.is_some_and(|m| depth >= m);

        if pure || depth_reached || indices.len() < 2 {
            return self.push(TreeNode::Leaf { label: majority });
        }

        let best = match self.best_split(&indices, &counts) {
            Some(best) => best,
            None => return self.push(TreeNode::Leaf { label: majority }),
        };

        let (left_indices, right_indices): (Vec<usize>, Vec<usize>) = indices
            .iter()
            .partition(|&&i| self.rows[i][best.feature] <= best.threshold);

        self.importances[best.feature] += indices.len() as f64 / self.total * best.decrease;

        let node = self.push(TreeNode::Leaf { label: majority }); // placeholder
        let left = self.build(left_indices, depth + 1);
        let right = self.build(right_indices, depth + 1);
        self.nodes[node] = TreeNode::Split {
            feature: best.feature,
            threshold: best.threshold,
            left,
            right,
        };
        node
    }

    fn push(&mut self, node: TreeNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn class_counts(&self, indices: &[usize]) -> Vec<usize> {
        let mut counts = vec![0usize; self.n_classes];
        for &i in indices {
            counts[self.labels[i]] += 1;
        }
        counts
    }

    fn candidate_features(&mut self) -> Vec<usize> {
        let d = self.rows[0].len();
        match (self.max_features, self.rng.as_deref_mut()) {
            (Some(m), Some(rng)) if m < d => {
                // Partial Fisher-Yates: m distinct features, then sorted for
                // a deterministic scan order.
                let mut pool: Vec<usize> = (0..d).collect();
                for k in 0..m {
                    let pick = rng.gen_range(k..d);
                    pool.swap(k, pick);
                }
                let mut chosen = pool[..m].to_vec();
                chosen.sort_unstable();
                chosen
            }
            _ => (0..d).collect(),
        }
    }

    fn best_split(&mut self, indices: &[usize], parent_counts: &[usize]) -> Option<BestSplit> {
        let n = indices.len();
        let parent_impurity = self.criterion.impurity(parent_counts, n);
        let mut best: Option<BestSplit> = None;

        for feature in self.candidate_features() {
            let mut order: Vec<usize> = indices.to_vec();
            order.sort_by(|&a, &b| self.rows[a][feature].total_cmp(&self.rows[b][feature]));

            let mut left_counts = vec![0usize; self.n_classes];
            for split_at in 1..n {
                left_counts[self.labels[order[split_at - 1]]] += 1;
                let previous = self.rows[order[split_at - 1]][feature];
                let value = self.rows[order[split_at]][feature];
                if value <= previous {
                    continue;
                }
                let threshold = previous + (value - previous) / 2.0;
                let right_counts: Vec<usize> = parent_counts
                    .iter()
                    .zip(&left_counts)
                    .map(|(&p, &l)| p - l)
                    .collect();
                let n_left = split_at;
                let n_right = n - split_at;
                let decrease = parent_impurity
                    - (n_left as f64 / n as f64) * self.criterion.impurity(&left_counts, n_left)
                    - (n_right as f64 / n as f64)
                        * self.criterion.impurity(&right_counts, n_right);
                if best.as_ref().is_none_or(|b| decrease > b.decrease) {
                    best = Some(BestSplit {
                        decrease,
                        feature,
                        threshold,
                    });
                }
            }
        }
        best
    }
}

/// Majority class with ties resolved to the lower label.
fn majority_label(counts: &[usize]) -> usize {
    let mut best = 0usize;
    for (label, &count) in counts.iter().enumerate().skip(1) {
        if count > counts[best] {
            best = label;
        }
    }
    best
}
