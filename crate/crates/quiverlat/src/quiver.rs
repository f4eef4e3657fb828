//! Graded symmetric quivers and the structural moves used by the tower
//! construction: mirroring, framing, unreduced doubling, unlinking, linking
//! and removal of the auxiliary node.
//!
//! All values are immutable; every operation returns a fresh quiver. The
//! node monomial convention in force throughout is
//! x_i = a^(a_i) q^(q_i - C_ii) x^(x_i), which pins down how gradings
//! compose when unlinking or linking creates a node.

use std::fmt;

/// Symmetric integer adjacency matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SymQuiver {
    entries: Vec<Vec<i64>>,
}

impl SymQuiver {
    pub fn new(entries: Vec<Vec<i64>>) -> Self {
        let m = entries.len();
        for row in &entries {
            assert_eq!(row.len(), m, "matrix must be square");
        }
        for i in 0..m {
            for j in 0..i {
                assert_eq!(
                    entries[i][j], entries[j][i],
                    "matrix must be symmetric at ({i},{j})"
                );
            }
        }
        SymQuiver { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// I - C, the adjacency matrix of the mirror knot's quiver.
    pub fn mirror(&self) -> SymQuiver {
        let m = self.size();
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| i64::from(i == j) - self.entries[i][j])
                    .collect()
            })
            .collect();
        SymQuiver { entries }
    }

    /// Entry-level unlinking of the pair (i, j): the pair coupling drops by
    /// one and a new node is appended whose couplings read off the old row
    /// sums. Grading bookkeeping lives on [`AugmentedQuiver::unlink`].
    pub fn unlink_entries(&self, i: usize, j: usize) -> SymQuiver {
        self.splice_pair(i, j, -1)
    }

    /// Entry-level linking of the pair (i, j); the +1 counterpart of
    /// [`SymQuiver::unlink_entries`].
    pub fn link_entries(&self, i: usize, j: usize) -> SymQuiver {
        self.splice_pair(i, j, 1)
    }

    fn splice_pair(&self, i: usize, j: usize, delta: i64) -> SymQuiver {
        let m = self.size();
        assert!(i < m && j < m && i != j, "node pair ({i},{j}) invalid");
        // unlinking (delta = -1) subtracts 1 from the new node's couplings
        // to i, j and from its loop; linking (delta = +1) leaves them plain
        let off = (delta - 1) / 2;
        let mut entries = self.entries.clone();
        entries[i][j] += delta;
        entries[j][i] += delta;
        let cij = self.entries[i][j];
        for (s, row) in entries.iter_mut().enumerate() {
            let v = if s == i {
                self.entries[i][i] + cij + off
            } else if s == j {
                cij + self.entries[j][j] + off
            } else {
                self.entries[s][i] + self.entries[s][j]
            };
            row.push(v);
        }
        let mut last: Vec<i64> = (0..m).map(|s| entries[s][m]).collect();
        last.push(self.entries[i][i] + self.entries[j][j] + 2 * cij + off);
        entries.push(last);
        SymQuiver { entries }
    }
}

impl fmt::Debug for SymQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymQuiver {}x{}:", self.size(), self.size())?;
        for row in &self.entries {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Per-node exponents: powers of a and q in the generator monomial, plus
/// the x-degree (0 for the auxiliary node, 1 for ordinary nodes).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NodeGrading {
    pub a_deg: i64,
    pub q_deg: i64,
    pub x_deg: u32,
}

/// A symmetric quiver together with one grading per node.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedQuiver {
    pub quiver: SymQuiver,
    pub gradings: Vec<NodeGrading>,
}

impl GradedQuiver {
    pub fn new(quiver: SymQuiver, gradings: Vec<NodeGrading>) -> Self {
        assert_eq!(
            gradings.len(),
            quiver.size(),
            "one grading required per node"
        );
        GradedQuiver { quiver, gradings }
    }

    pub fn size(&self) -> usize {
        self.quiver.size()
    }

    /// Doubling into the unreduced quiver. Each node k splits into the pair
    /// (2k-1, 2k) (1-based); entry (r, s) of the result is
    /// C[ceil(r/2)][ceil(s/2)] plus 1 exactly when max(r, s) is odd. The
    /// degree vectors split as (a_k+1, a_k-1) and (q_k+1, q_k+1).
    pub fn double_unreduced(&self) -> UnreducedQuiver {
        for (k, g) in self.gradings.iter().enumerate() {
            assert_eq!(
                g.x_deg, 1,
                "node {k} has x-degree {}; remove the auxiliary node before doubling",
                g.x_deg
            );
        }
        let k = self.size();
        let matrix = (1..=2 * k)
            .map(|r| {
                (1..=2 * k)
                    .map(|s| {
                        let base = self.quiver.entry((r + 1) / 2 - 1, (s + 1) / 2 - 1);
                        base + i64::from(r.max(s) % 2 == 1)
                    })
                    .collect()
            })
            .collect();
        let mut a_bar = Vec::with_capacity(2 * k);
        let mut q_bar = Vec::with_capacity(2 * k);
        for g in &self.gradings {
            a_bar.push(g.a_deg + 1);
            a_bar.push(g.a_deg - 1);
            q_bar.push(g.q_deg + 1);
            q_bar.push(g.q_deg + 1);
        }
        UnreducedQuiver::new(SymQuiver { entries: matrix }, a_bar, q_bar, 0)
    }
}

/// Graded quiver whose node 0 is the auxiliary node of the tower
/// construction (x-degree 0); all other nodes carry x-degree 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AugmentedQuiver {
    pub base: GradedQuiver,
}

impl AugmentedQuiver {
    pub fn new(base: GradedQuiver) -> Self {
        assert!(base.size() >= 1, "augmented quiver needs a node 0");
        assert_eq!(base.gradings[0].x_deg, 0, "node 0 must have x-degree 0");
        AugmentedQuiver { base }
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn matrix(&self) -> &SymQuiver {
        &self.base.quiver
    }

    pub fn gradings(&self) -> &[NodeGrading] {
        &self.base.gradings
    }

    /// Unlink the pair (i, j). The new node m carries the generator
    /// q^(-1) x_i x_j, so a_new = a_i + a_j, x_new = x_i + x_j and,
    /// under the node monomial convention, q_new = q_i + q_j + 2 C_ij - 2.
    pub fn unlink(&self, i: usize, j: usize) -> AugmentedQuiver {
        self.splice(i, j, -1)
    }

    /// Link the pair (i, j); the generator is x_i x_j, giving
    /// q_new = q_i + q_j + 2 C_ij.
    pub fn link(&self, i: usize, j: usize) -> AugmentedQuiver {
        self.splice(i, j, 1)
    }

    fn splice(&self, i: usize, j: usize, delta: i64) -> AugmentedQuiver {
        let c = &self.base.quiver;
        let quiver = if delta < 0 {
            c.unlink_entries(i, j)
        } else {
            c.link_entries(i, j)
        };
        let gi = self.base.gradings[i];
        let gj = self.base.gradings[j];
        let mut gradings = self.base.gradings.clone();
        gradings.push(NodeGrading {
            a_deg: gi.a_deg + gj.a_deg,
            q_deg: gi.q_deg + gj.q_deg + 2 * c.entry(i, j) + (delta - 1),
            x_deg: gi.x_deg + gj.x_deg,
        });
        AugmentedQuiver {
            base: GradedQuiver { quiver, gradings },
        }
    }

    /// Remove node 0 and re-index. Every surviving node must carry
    /// x-degree 1, otherwise the tower was built inconsistently.
    pub fn drop_auxiliary(&self) -> GradedQuiver {
        let m = self.size();
        assert!(m >= 2, "nothing left after dropping the auxiliary node");
        for (k, g) in self.base.gradings.iter().enumerate().skip(1) {
            assert_eq!(
                g.x_deg, 1,
                "node {k} has x-degree {}; cannot drop the auxiliary node",
                g.x_deg
            );
        }
        let entries = self.base.quiver.entries[1..]
            .iter()
            .map(|row| row[1..].to_vec())
            .collect();
        GradedQuiver {
            quiver: SymQuiver { entries },
            gradings: self.base.gradings[1..].to_vec(),
        }
    }
}

/// Doubled quiver with its degree vectors and the framing applied so far.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnreducedQuiver {
    pub matrix: SymQuiver,
    pub a_bar: Vec<i64>,
    pub q_bar: Vec<i64>,
    pub framing: i64,
}

impl UnreducedQuiver {
    pub fn new(matrix: SymQuiver, a_bar: Vec<i64>, q_bar: Vec<i64>, framing: i64) -> Self {
        let n = matrix.size();
        assert!(n % 2 == 0, "unreduced quiver must have even size");
        assert_eq!(a_bar.len(), n);
        assert_eq!(q_bar.len(), n);
        for j in 0..n / 2 {
            assert_eq!(
                a_bar[2 * j] - a_bar[2 * j + 1],
                2,
                "a_bar pair {j} must differ by 2"
            );
            assert_eq!(
                q_bar[2 * j],
                q_bar[2 * j + 1],
                "q_bar pair {j} must be equal"
            );
        }
        UnreducedQuiver {
            matrix,
            a_bar,
            q_bar,
            framing,
        }
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// Add framing f: every matrix entry grows by f (the all-ones rank-one
    /// shift), degree vectors are untouched, and the framing tally adjusts
    /// so that framing by f then by -f is the identity.
    pub fn frame(&self, f: i64) -> UnreducedQuiver {
        let entries = self
            .matrix
            .entries
            .iter()
            .map(|row| row.iter().map(|&e| e + f).collect())
            .collect();
        UnreducedQuiver {
            matrix: SymQuiver { entries },
            a_bar: self.a_bar.clone(),
            q_bar: self.q_bar.clone(),
            framing: self.framing + f,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(rows: &[&[i64]]) -> SymQuiver {
        SymQuiver::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    /// The 5-node reduced quiver of the figure-eight knot, as produced by
    /// dropping the auxiliary node from the shipped seed.
    fn reduced_4_1() -> GradedQuiver {
        let quiver = sq(&[
            &[0, -1, -1, 0, 0],
            &[-1, -2, -2, -1, 0],
            &[-1, -2, -1, -1, 0],
            &[0, -1, -1, 1, 1],
            &[0, 0, 0, 1, 2],
        ]);
        let a = [0, -2, 0, 0, 2];
        let q = [0, 0, -2, 2, 0];
        let gradings = a
            .iter()
            .zip(q.iter())
            .map(|(&a_deg, &q_deg)| NodeGrading {
                a_deg,
                q_deg,
                x_deg: 1,
            })
            .collect();
        GradedQuiver::new(quiver, gradings)
    }

    fn augmented_4_1() -> AugmentedQuiver {
        crate::tower::builtin_seed_4_1()
    }

    #[test]
    fn mirror_small_cases() {
        assert_eq!(sq(&[&[1]]).mirror(), sq(&[&[0]]));
        assert_eq!(
            sq(&[&[0, 1], &[1, 0]]).mirror(),
            sq(&[&[1, -1], &[-1, 1]])
        );
    }

    #[test]
    fn mirror_is_involutive_on_4_1() {
        let c = reduced_4_1().quiver;
        assert_eq!(c.mirror().mirror(), c);
    }

    #[test]
    fn framing_adds_to_every_entry() {
        let q = UnreducedQuiver::new(
            sq(&[&[1, 0], &[0, 0]]),
            vec![1, -1],
            vec![3, 3],
            0,
        );
        let framed = q.frame(1);
        assert_eq!(framed.matrix, sq(&[&[2, 1], &[1, 1]]));
        assert_eq!(framed.a_bar, q.a_bar);
        assert_eq!(framed.q_bar, q.q_bar);
        assert_eq!(framed.framing, 1);
        assert_eq!(q.frame(0).matrix, q.matrix);
        assert_eq!(framed.frame(-1), q);
    }

    #[test]
    fn doubling_one_node() {
        let g = GradedQuiver::new(
            sq(&[&[3]]),
            vec![NodeGrading {
                a_deg: 5,
                q_deg: 7,
                x_deg: 1,
            }],
        );
        let u = g.double_unreduced();
        assert_eq!(u.matrix, sq(&[&[4, 3], &[3, 3]]));
        assert_eq!(u.a_bar, vec![6, 4]);
        assert_eq!(u.q_bar, vec![8, 8]);
        assert_eq!(u.framing, 0);
    }

    #[test]
    fn doubling_additive_pattern_two_nodes() {
        // with C = 0 the result is exactly the additive max-odd pattern
        let g = GradedQuiver::new(
            sq(&[&[0, 0], &[0, 0]]),
            vec![
                NodeGrading {
                    a_deg: 0,
                    q_deg: 0,
                    x_deg: 1,
                };
                2
            ],
        );
        let u = g.double_unreduced();
        assert_eq!(
            u.matrix,
            sq(&[
                &[1, 0, 1, 0],
                &[0, 0, 1, 0],
                &[1, 1, 1, 0],
                &[0, 0, 0, 0]
            ])
        );
    }

    #[test]
    fn doubling_4_1_last_row_additive_part_vanishes() {
        let g = reduced_4_1();
        let u = g.double_unreduced();
        assert_eq!(u.size(), 10);
        // row 10 (1-based) has even max index everywhere, so it is a pure
        // copy of the underlying reduced row
        for s in 1..=10usize {
            assert_eq!(
                u.matrix.entry(9, s - 1),
                g.quiver.entry(4, (s + 1) / 2 - 1)
            );
        }
        // and the doubled matrix is symmetric
        for r in 0..10 {
            for s in 0..10 {
                assert_eq!(u.matrix.entry(r, s), u.matrix.entry(s, r));
            }
        }
    }

    #[test]
    fn unlink_two_node_example() {
        let c = sq(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            c.unlink_entries(0, 1),
            sq(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn link_small_examples() {
        let c = sq(&[&[0, 0], &[0, 0]]);
        assert_eq!(
            c.link_entries(0, 1),
            sq(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]])
        );
        let d = sq(&[&[1, 1], &[1, 1]]);
        let linked = d.link_entries(0, 1);
        assert_eq!(linked.entry(2, 2), 4);
        assert_eq!(linked.size(), 3);
    }

    #[test]
    fn unlink_augmented_4_1_frozen_entries() {
        let aug = augmented_4_1();
        let out = aug.unlink(0, 2);
        assert_eq!(out.size(), 7);
        assert_eq!(out.matrix().entry(0, 2), 0);
        assert_eq!(out.matrix().entry(6, 6), 0);
        let g = out.gradings()[6];
        assert_eq!(g.a_deg, 0);
        assert_eq!(g.x_deg, 1);
        // q_new = q_0 + q_2 + 2 C_02 - 2 = -1 + 0 + 2 - 2
        assert_eq!(g.q_deg, -1);
    }

    #[test]
    fn unlink_changes_only_the_pair_entry() {
        let aug = augmented_4_1();
        let out = aug.unlink(0, 3);
        for i in 0..6 {
            for j in 0..6 {
                let expected = if (i, j) == (0, 3) || (i, j) == (3, 0) {
                    aug.matrix().entry(i, j) - 1
                } else {
                    aug.matrix().entry(i, j)
                };
                assert_eq!(out.matrix().entry(i, j), expected, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn generator_consistency_under_unlink_and_link() {
        // q_new - C'_nn must equal (q_i - C_ii) + (q_j - C_jj) - 1 for
        // unlinking and the same without the -1 for linking, matching
        // x_new = q^(-1) x_i x_j and x_new = x_i x_j respectively.
        let aug = augmented_4_1();
        for (i, j) in [(0usize, 2usize), (0, 4), (1, 3), (2, 5)] {
            let c = aug.matrix();
            let shifted =
                |k: usize| aug.gradings()[k].q_deg - c.entry(k, k);
            for (out, offset) in [(aug.unlink(i, j), -1), (aug.link(i, j), 0)] {
                let n = out.size() - 1;
                let new_shifted = out.gradings()[n].q_deg - out.matrix().entry(n, n);
                assert_eq!(new_shifted, shifted(i) + shifted(j) + offset);
                assert_eq!(
                    out.gradings()[n].a_deg,
                    aug.gradings()[i].a_deg + aug.gradings()[j].a_deg
                );
            }
        }
    }

    #[test]
    fn drop_auxiliary_recovers_reduced_4_1() {
        let aug = augmented_4_1();
        assert_eq!(aug.drop_auxiliary(), reduced_4_1());
    }

    #[test]
    fn drop_auxiliary_after_unlink() {
        let aug = augmented_4_1().unlink(0, 2);
        let g = aug.drop_auxiliary();
        assert_eq!(g.size(), 6);
        assert!(g.gradings.iter().all(|n| n.x_deg == 1));
    }

    #[test]
    fn drop_auxiliary_two_node_toy() {
        let aug = AugmentedQuiver::new(GradedQuiver::new(
            sq(&[&[1, 0], &[0, 2]]),
            vec![
                NodeGrading {
                    a_deg: 2,
                    q_deg: -1,
                    x_deg: 0,
                },
                NodeGrading {
                    a_deg: 0,
                    q_deg: 3,
                    x_deg: 1,
                },
            ],
        ));
        let g = aug.drop_auxiliary();
        assert_eq!(g.size(), 1);
        assert_eq!(g.quiver.entry(0, 0), 2);
        assert_eq!(g.gradings[0].q_deg, 3);
    }
}
