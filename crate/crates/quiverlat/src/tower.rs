//! Tower construction: grow the augmented quiver of a knot family by
//! repeated unlinking against the auxiliary node.
//!
//! Each twist step unlinks node 0 with a fixed list of targets. The first
//! step uses the family's explicit target list; every later step targets
//! exactly the nodes the previous step created, in increasing index order
//! (the rightmost operator of the product acts first). A literal-formula
//! variant of the target selection is kept available for comparison; it
//! agrees with the explicit rule for the positive twist family and
//! diverges from the second step on for the others.

use crate::error::{Error, Result};
use crate::quiver::{AugmentedQuiver, GradedQuiver, NodeGrading, SymQuiver};

/// The knot families the pipeline knows how to drive.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KnotFamily {
    /// Twist knots 4_1, 6_1, 8_1, ... with p <= -1 full twists.
    NegTwist,
    /// Twist knots 5_2, 7_2, 9_2, ... with p >= 2.
    PosTwist,
    /// Double twist knots 7_4, 9_5, ... (second twist parameter fixed at 1).
    DoubleTwist3,
    /// Torus knots T(2, 2p+1) = 3_1, 5_1, 7_1, ...; lattice model only,
    /// no unlinking tower.
    Torus2,
}

impl KnotFamily {
    pub fn name(self) -> &'static str {
        match self {
            KnotFamily::NegTwist => "neg-twist",
            KnotFamily::PosTwist => "pos-twist",
            KnotFamily::DoubleTwist3 => "double-twist-3",
            KnotFamily::Torus2 => "torus-2",
        }
    }
}

/// A family together with its twist parameter, validated on construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct KnotFamilySpec {
    pub family: KnotFamily,
    pub p: i64,
}

impl KnotFamilySpec {
    pub fn new(family: KnotFamily, p: i64) -> Result<Self> {
        let ok = match family {
            KnotFamily::NegTwist => p <= -1,
            KnotFamily::PosTwist => p >= 2,
            KnotFamily::DoubleTwist3 | KnotFamily::Torus2 => p >= 1,
        };
        if !ok {
            let range = match family {
                KnotFamily::NegTwist => "p <= -1",
                KnotFamily::PosTwist => "p >= 2",
                KnotFamily::DoubleTwist3 | KnotFamily::Torus2 => "p >= 1",
            };
            return Err(Error::FamilyParam {
                family: family.name().to_string(),
                msg: format!("p = {p} is outside the family range {range}"),
            });
        }
        Ok(KnotFamilySpec { family, p })
    }

    /// Pretzel label (t1, t2, t3) of the knot, where defined for the family.
    pub fn pretzel_label(&self) -> Option<(i64, i64, i64)> {
        match self.family {
            KnotFamily::NegTwist => Some((2 * self.p + 1, 1, 1)),
            KnotFamily::PosTwist => Some((2 * self.p - 1, 1, 1)),
            KnotFamily::DoubleTwist3 => Some((2 * self.p + 1, 3, 1)),
            KnotFamily::Torus2 => None,
        }
    }

    /// Double twist parameters (p1, p2) of the knot, where defined.
    pub fn double_twist_params(&self) -> Option<(i64, i64)> {
        match self.family {
            KnotFamily::NegTwist | KnotFamily::PosTwist => Some((self.p, 0)),
            KnotFamily::DoubleTwist3 => Some((self.p, 1)),
            KnotFamily::Torus2 => None,
        }
    }

    /// Rolfsen-style name where the small members of the family have one;
    /// larger members fall back to a descriptive label.
    pub fn knot_name(&self) -> String {
        match (self.family, self.p) {
            (KnotFamily::NegTwist, p) if p >= -4 => format!("{}_1", 2 * (-p) + 2),
            (KnotFamily::PosTwist, p) if p <= 4 => format!("{}_2", 2 * p + 1),
            (KnotFamily::DoubleTwist3, 1) => "7_4".to_string(),
            (KnotFamily::DoubleTwist3, 2) => "9_5".to_string(),
            (KnotFamily::Torus2, p) if p <= 4 => format!("{}_1", 2 * p + 1),
            (KnotFamily::Torus2, p) => format!("T(2,{})", 2 * p + 1),
            _ => {
                let (t1, t2, t3) = self.pretzel_label().unwrap();
                format!("L({t1},{t2},{t3})")
            }
        }
    }

    /// How many tower steps separate this knot from its family's seed.
    pub fn steps_from_seed(&self) -> Result<usize> {
        match self.family {
            KnotFamily::NegTwist => Ok((-self.p - 1) as usize),
            KnotFamily::PosTwist => Ok((self.p - 2) as usize),
            KnotFamily::DoubleTwist3 => Ok((self.p - 1) as usize),
            KnotFamily::Torus2 => Err(Error::FamilyParam {
                family: "torus-2".to_string(),
                msg: "the torus family has no unlinking tower; use the lattice model".to_string(),
            }),
        }
    }

    fn first_step_targets(&self) -> &'static [usize] {
        match self.family {
            KnotFamily::NegTwist => &[2, 3, 4, 5],
            KnotFamily::PosTwist => &[4, 5, 6, 7],
            KnotFamily::DoubleTwist3 => &[9, 10, 11, 12, 13, 14, 15, 16],
            KnotFamily::Torus2 => &[],
        }
    }

    fn nodes_per_step(&self) -> usize {
        match self.family {
            KnotFamily::DoubleTwist3 => 8,
            _ => 4,
        }
    }
}

/// How the per-step unlink targets are chosen.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum TargetRule {
    /// Explicit first-step list, then the previous step's new nodes.
    #[default]
    Explicit,
    /// Literal index formulas (3i-4..3i-1, 4i-4..4i-1, 16i-7..16i for the
    /// three tower families, step k corresponding to i = k+1, k+1, k).
    Formula,
}

/// Whether the auxiliary node's generator monomial carries the usual
/// diagonal shift. Under [`Node0Rule::Plain`] the q-grading of every node
/// created by an unlink against node 0 gains an extra C_00.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Node0Rule {
    /// Node 0 follows the same monomial convention as every other node.
    #[default]
    Shifted,
    /// Node 0's monomial omits the -C_00 shift.
    Plain,
}

/// One tower step: the target indices unlinked with node 0, applied in
/// increasing order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TowerStep {
    pub targets: Vec<usize>,
}

/// The target lists for the first `steps` tower steps of a family, given
/// the seed size.
pub fn tower_steps(
    spec: &KnotFamilySpec,
    seed_size: usize,
    steps: usize,
    rule: TargetRule,
) -> Vec<TowerStep> {
    let per = spec.nodes_per_step();
    let mut out = Vec::with_capacity(steps);
    let mut size = seed_size;
    for k in 1..=steps {
        let targets: Vec<usize> = match (rule, k) {
            (_, 1) => spec.first_step_targets().to_vec(),
            (TargetRule::Explicit, _) => (size - per..size).collect(),
            (TargetRule::Formula, _) => {
                let i = match spec.family {
                    KnotFamily::DoubleTwist3 => k,
                    _ => k + 1,
                } as i64;
                let hi = match spec.family {
                    KnotFamily::NegTwist => 3 * i - 1,
                    KnotFamily::PosTwist => 4 * i - 1,
                    KnotFamily::DoubleTwist3 => 16 * i,
                    KnotFamily::Torus2 => unreachable!("no torus tower"),
                };
                ((hi + 1 - per as i64)..=hi).map(|t| t as usize).collect()
            }
        };
        size += targets.len();
        out.push(TowerStep { targets });
    }
    out
}

/// The exact augmented quiver of the figure-eight knot that seeds the
/// negative twist tower: six nodes, node 0 auxiliary.
pub fn builtin_seed_4_1() -> AugmentedQuiver {
    let matrix = SymQuiver::new(vec![
        vec![1, 0, 1, 1, 1, 1],
        vec![0, 0, -1, -1, 0, 0],
        vec![1, -1, -2, -2, -1, 0],
        vec![1, -1, -2, -1, -1, 0],
        vec![1, 0, -1, -1, 1, 1],
        vec![1, 0, 0, 0, 1, 2],
    ]);
    let a = [2, 0, -2, 0, 0, 2];
    let q = [-1, 0, 0, -2, 2, 0];
    let gradings = a
        .iter()
        .zip(q.iter())
        .enumerate()
        .map(|(idx, (&a_deg, &q_deg))| NodeGrading {
            a_deg,
            q_deg,
            x_deg: u32::from(idx > 0),
        })
        .collect();
    AugmentedQuiver::new(GradedQuiver::new(matrix, gradings))
}

/// Apply `steps` tower steps to a seed. Targets out of range surface as a
/// tower error rather than a panic, since they signal a seed that does not
/// belong to the requested family.
pub fn build_tower(
    seed: &AugmentedQuiver,
    spec: &KnotFamilySpec,
    steps: usize,
    rule: TargetRule,
    node0: Node0Rule,
) -> Result<AugmentedQuiver> {
    if spec.family == KnotFamily::Torus2 && steps > 0 {
        return Err(Error::FamilyParam {
            family: "torus-2".to_string(),
            msg: "the torus family has no unlinking tower; use the lattice model".to_string(),
        });
    }
    let plan = tower_steps(spec, seed.size(), steps, rule);
    let mut aug = seed.clone();
    for (k, step) in plan.iter().enumerate() {
        for &t in &step.targets {
            if t == 0 || t >= aug.size() {
                return Err(Error::TowerTarget {
                    step: k + 1,
                    target: t,
                    size: aug.size(),
                });
            }
            let c00 = aug.matrix().entry(0, 0);
            aug = aug.unlink(0, t);
            if node0 == Node0Rule::Plain {
                // without the diagonal shift on node 0's monomial the
                // derived q-grading of the new node picks up C_00
                let n = aug.size() - 1;
                let mut base = aug.base.clone();
                base.gradings[n].q_deg += c00;
                aug = AugmentedQuiver::new(base);
            }
        }
    }
    Ok(aug)
}
