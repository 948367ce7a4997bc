use lk_core::cone::{classify_cone, cone_check, default_r0, ConeVector, Specialized};
use lk_core::garside::{rewrite_class, star_act_word};
use lk_core::rootset::enumerate_closed_sets;
use lk_core::{
    solve_t_closed_form, ClosedSet, Family, Letter, LkRep, PolyMatrix, PositiveWord, RootSystem, SignedWord, TypeSpec,
};
use proptest::prelude::*;

fn rep(family: Family, rank: usize) -> LkRep {
    LkRep::new(&RootSystem::build(TypeSpec::new(family, rank).unwrap())).unwrap()
}

fn positive(rank: usize, max_len: usize) -> impl Strategy<Value = PositiveWord> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(PositiveWord)
}

fn signed(rank: usize, max_len: usize) -> impl Strategy<Value = SignedWord> {
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len)
        .prop_map(|ls| SignedWord(ls.into_iter().map(|(gen, inverse)| Letter { gen, inverse }).collect()))
}

#[test]
fn closed_form_table_gives_the_same_generators() {
    for (family, n) in [(Family::A, 4), (Family::D, 5), (Family::E, 6)] {
        let rs = RootSystem::build(TypeSpec::new(family, n).unwrap());
        let solved = LkRep::new(&rs).unwrap();
        let (table, _) = solve_t_closed_form(&rs).unwrap();
        let closed = LkRep::with_table(&rs, table);
        for k in 0..n {
            assert_eq!(solved.sigma(k), closed.sigma(k), "{family}{n} σ_{}", k + 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn equal_positive_words_have_equal_images(x in positive(4, 6), pick in any::<prop::sample::Index>()) {
        let rep = rep(Family::D, 4);
        let class = rewrite_class(rep.root_system(), &x);
        let y = &class[pick.index(class.len())];
        prop_assert_eq!(rep.rho_positive(&x), rep.rho_positive(y));
    }

    #[test]
    fn inverse_words_cancel(x in signed(3, 6)) {
        let rep = rep(Family::A, 3);
        let prod = rep.rho_word(&x.concat(&x.inverse()));
        prop_assert_eq!(prod, PolyMatrix::identity(rep.dim()));
    }

    #[test]
    fn positive_words_preserve_the_cone(x in positive(4, 8)) {
        let rep = rep(Family::D, 4);
        prop_assert!(cone_check(&rep, &x, &default_r0()).unwrap().is_empty());
    }

    #[test]
    fn pieces_move_by_the_star_action(x in positive(3, 6), pick in any::<prop::sample::Index>()) {
        let rep = rep(Family::A, 3);
        let rs = rep.root_system();
        let sets: Vec<ClosedSet> = enumerate_closed_sets(rs, 12).unwrap().collect();
        let a = sets[pick.index(sets.len())];
        let spec = Specialized::new(&rep, &default_r0()).unwrap();
        let v = spec.apply(&x, ConeVector::probe(rs, a.set()).coords());
        prop_assert_eq!(classify_cone(&v).unwrap(), star_act_word(rs, &x, a).set());
    }
}
