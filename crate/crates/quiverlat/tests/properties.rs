//! Structural invariants checked over randomized inputs, plus the
//! closed-form identity between path counts and Raney numbers on a
//! deterministic grid.

use num_bigint::BigInt;
use proptest::prelude::*;
use quiverlat::quiver::{AugmentedQuiver, GradedQuiver, NodeGrading, SymQuiver};
use quiverlat::series::{
    make_substitution, partition_series, ratio_y, AMode, NodeSubst, SubstKind,
    SubstitutionAssignment,
};
use quiverlat::tower::builtin_seed_4_1;
use quiverlat::{count_paths, enumerate_paths, raney, PathModel, Steps, Strictness};

fn sym_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |upper| {
        let mut m = vec![vec![0i64; n]; n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i..n {
                let v = it.next().unwrap();
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        m
    })
}

fn augmented(n: usize) -> impl Strategy<Value = AugmentedQuiver> {
    (
        sym_matrix(n),
        proptest::collection::vec(-4i64..=4, 2 * n),
    )
        .prop_map(move |(m, grads)| {
            let gradings = (0..n)
                .map(|i| NodeGrading {
                    a_deg: grads[2 * i],
                    q_deg: grads[2 * i + 1],
                    x_deg: u32::from(i > 0),
                })
                .collect();
            AugmentedQuiver::new(GradedQuiver::new(SymQuiver::new(m), gradings))
        })
}

proptest! {
    #[test]
    fn unlink_grows_by_one_symmetric_node(aug in (3usize..=5).prop_flat_map(augmented),
                                          pick in any::<proptest::sample::Index>()) {
        let m = aug.size();
        let pairs: Vec<(usize, usize)> =
            (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
        let (i, j) = pairs[pick.index(pairs.len())];
        let next = aug.unlink(i, j);
        prop_assert_eq!(next.size(), m + 1);
        for r in 0..=m {
            for s in 0..=m {
                prop_assert_eq!(next.matrix().entry(r, s), next.matrix().entry(s, r));
            }
        }
        // old block is untouched except the unlinked pair, which drops by 1
        for r in 0..m {
            for s in 0..m {
                let expected = aug.matrix().entry(r, s)
                    - i64::from((r, s) == (i, j) || (r, s) == (j, i));
                prop_assert_eq!(next.matrix().entry(r, s), expected);
            }
        }
        let g = next.gradings()[m];
        prop_assert_eq!(g.a_deg, aug.gradings()[i].a_deg + aug.gradings()[j].a_deg);
        prop_assert_eq!(g.x_deg, aug.gradings()[i].x_deg + aug.gradings()[j].x_deg);
    }

    #[test]
    fn link_grows_by_one_and_raises_the_pair(aug in (3usize..=5).prop_flat_map(augmented),
                                             pick in any::<proptest::sample::Index>()) {
        let m = aug.size();
        let pairs: Vec<(usize, usize)> =
            (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
        let (i, j) = pairs[pick.index(pairs.len())];
        let next = aug.link(i, j);
        prop_assert_eq!(next.size(), m + 1);
        for r in 0..m {
            for s in 0..m {
                let expected = aug.matrix().entry(r, s)
                    + i64::from((r, s) == (i, j) || (r, s) == (j, i));
                prop_assert_eq!(next.matrix().entry(r, s), expected);
            }
        }
    }

    #[test]
    fn mirror_is_an_involution(m in (1usize..=6).prop_flat_map(sym_matrix)) {
        let q = SymQuiver::new(m);
        prop_assert_eq!(q.mirror().mirror(), q);
    }

    #[test]
    fn framing_is_additive(m in (1usize..=4).prop_flat_map(sym_matrix),
                           f1 in -3i64..=3, f2 in -3i64..=3) {
        let n = m.len();
        let gradings = (0..n)
            .map(|i| NodeGrading { a_deg: i as i64, q_deg: -(i as i64), x_deg: 1 })
            .collect();
        let u = GradedQuiver::new(SymQuiver::new(m), gradings).double_unreduced();
        prop_assert_eq!(u.frame(f1).frame(f2), u.frame(f1 + f2));
        prop_assert_eq!(u.frame(f1).frame(-f1), u.clone());
    }

    #[test]
    fn path_count_matches_exhaustive_enumeration(
        x in 0usize..=7,
        y in 0usize..=5,
        s_num in 0i64..=4,
        s_den in 1i64..=4,
        x0 in -3i64..=3,
        strict in any::<bool>(),
        diagonal in any::<bool>(),
    ) {
        let model = PathModel {
            x,
            y,
            s_num,
            s_den,
            x0,
            strictness: if strict { Strictness::Strict } else { Strictness::Weak },
            steps: if diagonal { Steps::END } else { Steps::EN },
        };
        let listed = enumerate_paths(&model, 200_000).unwrap();
        prop_assert_eq!(count_paths(&model), BigInt::from(listed.len()));
    }

    #[test]
    fn partition_series_is_node_permutation_invariant(
        (m, subst_data, perm) in (2usize..=3).prop_flat_map(|n| (
            sym_matrix(n),
            proptest::collection::vec((0i64..=2, -2i64..=2, any::<bool>()), n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )),
    ) {
        let n = m.len();
        let quiver = SymQuiver::new(m.clone());
        let nodes: Vec<NodeSubst> = subst_data
            .iter()
            .map(|&(a, q, neg)| NodeSubst {
                sign: if neg { -1 } else { 1 },
                a_exp: a,
                q_exp: q,
                x_exp: 1,
            })
            .collect();
        let subst = SubstitutionAssignment { nodes: nodes.clone() };
        let base = partition_series(&quiver, &subst, 3, AMode::Full).unwrap();

        let pm: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| m[perm[i]][perm[j]]).collect())
            .collect();
        let psubst = SubstitutionAssignment {
            nodes: (0..n).map(|i| nodes[perm[i]]).collect(),
        };
        let permuted =
            partition_series(&SymQuiver::new(pm), &psubst, 3, AMode::Full).unwrap();
        prop_assert_eq!(base, permuted);
    }

    #[test]
    fn a0_projection_commutes_with_the_ratio(
        m in (2usize..=3).prop_flat_map(sym_matrix),
        a_exps in proptest::collection::vec(0i64..=2, 3),
        q_exps in proptest::collection::vec(-2i64..=2, 3),
    ) {
        let n = m.len();
        let quiver = SymQuiver::new(m);
        let nodes: Vec<NodeSubst> = (0..n)
            .map(|i| NodeSubst { sign: 1, a_exp: a_exps[i], q_exp: q_exps[i], x_exp: 1 })
            .collect();
        let subst = SubstitutionAssignment { nodes };
        let full = ratio_y(&partition_series(&quiver, &subst, 3, AMode::Full).unwrap());
        let pruned = ratio_y(&partition_series(&quiver, &subst, 3, AMode::A0Only).unwrap());
        for l in 0..=3 {
            prop_assert_eq!(full.coeff(l).a0_part(), pruned.coeff(l).a0_part());
        }
    }
}

#[test]
fn path_counts_are_raney_numbers() {
    for m in 1i64..=5 {
        for s in 0i64..=4 {
            for k in 0i64..=5 {
                let model = PathModel {
                    x: (m * k + s) as usize,
                    y: k as usize,
                    s_num: 1,
                    s_den: m,
                    x0: 0,
                    strictness: Strictness::Weak,
                    steps: Steps::EN,
                };
                assert_eq!(
                    count_paths(&model),
                    raney((m + 1) as u64, (s + 1) as u64, k as u64).unwrap(),
                    "m={m} s={s} k={k}"
                );
            }
        }
    }
}

#[test]
fn expansion_is_deterministic_across_thread_counts() {
    let unreduced = builtin_seed_4_1().drop_auxiliary().double_unreduced();
    let subst = make_substitution(SubstKind::Sp2 {
        quiver: &unreduced,
        p1: -1,
        p2: 0,
        convention: Default::default(),
    });
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            partition_series(&unreduced.matrix, &subst, 4, AMode::A0Only).unwrap()
        })
    };
    let single = run(1);
    assert_eq!(single, run(4));
    assert_eq!(single, run(3));
}
