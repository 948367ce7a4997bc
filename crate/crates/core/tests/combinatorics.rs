use std::collections::HashSet;

use lk_core::garside::{b_embed, head_by_rewriting, head_l, star_act, star_act_word};
use lk_core::rootset::enumerate_closed_sets;
use lk_core::weyl::{enumerate_weyl_group, longest_element, weak_order_leq};
use lk_core::{max_inversion_subset, ClosedSet, Family, PositiveWord, RootSystem, TypeSpec};
use proptest::prelude::*;

fn system(family: Family, rank: usize) -> RootSystem {
    RootSystem::build(TypeSpec::new(family, rank).unwrap())
}

/// Dynkin diagram edges in Bourbaki numbering, 0-based.
fn edges(family: Family, n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    match family {
        Family::A => e.extend((1..n).map(|i| (i - 1, i))),
        Family::D => {
            e.extend((1..n - 1).map(|i| (i - 1, i)));
            e.push((n - 3, n - 1));
        }
        Family::E => {
            e.push((0, 2));
            e.push((1, 3));
            e.extend((3..n).map(|i| (i - 1, i)));
        }
    }
    e
}

fn cartan(family: Family, n: usize) -> Vec<Vec<i32>> {
    let mut c = vec![vec![0; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges(family, n) {
        c[i][j] = -1;
        c[j][i] = -1;
    }
    c
}

/// Positive roots as the nonnegative vectors of norm 2, by brute force.
fn brute_roots(c: &[Vec<i32>], max_coeff: i32) -> HashSet<Vec<i32>> {
    let n = c.len();
    let mut out = HashSet::new();
    let mut v = vec![0i32; n];
    loop {
        let mut i = 0;
        while i < n && v[i] == max_coeff {
            v[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        v[i] += 1;
        let q: i32 = (0..n).map(|a| (0..n).map(|b| v[a] * c[a][b] * v[b]).sum::<i32>()).sum();
        if q == 2 {
            out.insert(v.clone());
        }
    }
}

#[test]
fn roots_match_norm_two_vectors() {
    let cases = [
        (Family::A, 1, 1),
        (Family::A, 4, 1),
        (Family::A, 7, 1),
        (Family::D, 4, 2),
        (Family::D, 6, 2),
        (Family::E, 6, 3),
        (Family::E, 7, 4),
        (Family::E, 8, 6),
    ];
    for (family, n, max_coeff) in cases {
        let rs = system(family, n);
        assert_eq!(rs.cartan(), cartan(family, n).as_slice(), "{family}{n}");
        let found: HashSet<Vec<i32>> = rs.roots().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(found.len(), rs.len());
        assert_eq!(found, brute_roots(&cartan(family, n), max_coeff), "{family}{n}");
        assert_eq!(rs.len(), rs.spec().positive_root_count());
        // Heights never decrease along the ordering.
        assert!(rs.roots().windows(2).all(|w| w[0].height() <= w[1].height()));
    }
}

/// Closed under sums, checked on coordinates only.
fn closed_by_coords(rs: &RootSystem, set: &[usize]) -> bool {
    let coords: HashSet<Vec<i32>> = set.iter().map(|&b| rs.root(b).coords().to_vec()).collect();
    let all: HashSet<Vec<i32>> = rs.roots().iter().map(|r| r.coords().to_vec()).collect();
    for a in &coords {
        for b in &coords {
            let s: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if all.contains(&s) && !coords.contains(&s) {
                return false;
            }
        }
    }
    true
}

#[test]
fn closed_set_enumeration_matches_filter() {
    for (family, n) in [(Family::A, 2), (Family::A, 3)] {
        let rs = system(family, n);
        let expected: HashSet<u64> = (0u64..1 << rs.len())
            .filter(|&bits| closed_by_coords(&rs, &(0..rs.len()).filter(|&i| bits >> i & 1 == 1).collect::<Vec<_>>()))
            .collect();
        let got: HashSet<u64> = enumerate_closed_sets(&rs, 12)
            .unwrap()
            .map(|c| c.set().iter().map(|i| 1u64 << i).sum())
            .collect();
        assert_eq!(got, expected, "{family}{n}");
    }
    assert_eq!(enumerate_closed_sets(&system(Family::A, 2), 12).unwrap().count(), 7);
    assert!(enumerate_closed_sets(&system(Family::D, 5), 12).is_err());
}

#[test]
fn inversion_sets() {
    for (family, n) in [(Family::A, 3), (Family::D, 4)] {
        let rs = system(family, n);
        let group = enumerate_weyl_group(&rs, 1000).unwrap();
        assert_eq!(group.len() as u128, rs.spec().weyl_order());
        let mut sets = HashSet::new();
        for w in &group {
            let phi = w.inversion_set();
            assert_eq!(phi.len(), w.length());
            assert_eq!(w.reduced_word(&rs).len(), w.length());
            assert!(closed_by_coords(&rs, &phi.set().iter().collect::<Vec<_>>()));
            // The complement is closed as well.
            let co: Vec<usize> = (0..rs.len()).filter(|&b| !phi.contains(b)).collect();
            assert!(closed_by_coords(&rs, &co));
            assert!(sets.insert(phi.set()), "inversion sets are distinct");
            assert_eq!(max_inversion_subset(&rs, &phi), *w);
        }
        assert_eq!(longest_element(&rs).length(), rs.len());
    }
}

#[test]
fn weak_order_is_inclusion() {
    let rs = system(Family::A, 3);
    let group = enumerate_weyl_group(&rs, 1000).unwrap();
    for v in &group {
        for w in &group {
            let u = v.inverse().compose(w);
            let prefix = v.length() + u.length() == w.length();
            assert_eq!(weak_order_leq(v, w), prefix);
        }
    }
}

#[test]
fn max_inversion_subset_is_the_maximum() {
    for (family, n) in [(Family::A, 2), (Family::A, 3)] {
        let rs = system(family, n);
        let group = enumerate_weyl_group(&rs, 1000).unwrap();
        for a in enumerate_closed_sets(&rs, 12).unwrap() {
            let g = max_inversion_subset(&rs, &a);
            assert!(g.inversion_set().is_subset(a));
            for w in &group {
                if w.inversion_set().is_subset(a) {
                    assert!(w.inversion_set().is_subset(g.inversion_set()));
                }
            }
        }
    }
}

#[test]
fn star_action_on_closed_sets() {
    let rs = system(Family::A, 3);
    let sets: Vec<ClosedSet> = enumerate_closed_sets(&rs, 12).unwrap().collect();
    for k in 0..rs.rank() {
        for &a in &sets {
            let img = star_act(&rs, k, a);
            assert!(ClosedSet::new(&rs, img.set()).is_ok());
            assert!(img.contains(rs.simple(k)));
            for &b in &sets {
                if a.is_subset(b) {
                    assert!(img.is_subset(star_act(&rs, k, b)));
                }
            }
        }
    }
}

#[test]
fn head_of_simple_elements() {
    for (family, n) in [(Family::A, 3), (Family::D, 4)] {
        let rs = system(family, n);
        for w in enumerate_weyl_group(&rs, 1000).unwrap() {
            let x = b_embed(&rs, &w);
            assert_eq!(head_l(&rs, &x), w);
            assert_eq!(star_act_word(&rs, &x, ClosedSet::empty()), w.inversion_set());
        }
    }
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = PositiveWord> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(PositiveWord)
}

fn d4() -> RootSystem {
    system(Family::D, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn head_absorbs_the_right_factor(x in word(4, 6), y in word(4, 6)) {
        let rs = d4();
        let lhs = head_l(&rs, &x.concat(&y));
        let rhs = head_l(&rs, &x.concat(&b_embed(&rs, &head_l(&rs, &y))));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_action_composes(x in word(4, 5), y in word(4, 5)) {
        let rs = d4();
        let direct = star_act_word(&rs, &x.concat(&y), ClosedSet::empty());
        let nested = star_act_word(&rs, &x, star_act_word(&rs, &y, ClosedSet::empty()));
        prop_assert_eq!(direct, nested);
    }

    #[test]
    fn head_agrees_with_rewriting(x in word(3, 6)) {
        let rs = system(Family::A, 3);
        prop_assert_eq!(head_l(&rs, &x), head_by_rewriting(&rs, &x));
    }

    #[test]
    fn head_is_sandwiched(x in word(4, 7)) {
        // Φ_{L(x)} ⊆ x * ∅, and L(x) is a prefix of x up to braid moves.
        let rs = d4();
        let l = head_l(&rs, &x);
        let a = star_act_word(&rs, &x, ClosedSet::empty());
        prop_assert!(l.inversion_set().is_subset(a));
        prop_assert!(l.length() <= x.len());
    }
}
