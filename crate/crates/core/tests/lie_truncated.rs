use stacktop::lie::{
    builtin_profile, builtin_profile_names, check_signed_commutativity, lie_suite, ExponentProfile, DEFAULT_TRUNCATION,
};

#[test]
fn su2_and_su3_at_degree_ten() {
    for name in ["SU(2)", "SU(3)"] {
        let p = builtin_profile(name).unwrap();
        for r in lie_suite(&p, DEFAULT_TRUNCATION).unwrap() {
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0);
        }
    }
}

#[test]
fn dimension_identity_for_every_profile() {
    for name in builtin_profile_names() {
        let p = builtin_profile(name).unwrap();
        assert_eq!(p.dimension as usize, p.rank() + 2 * p.exponents.iter().sum::<u32>() as usize);
    }
    let dims = [("SU(4)", 15), ("SU(5)", 24), ("SO(5)", 10), ("Sp(2)", 10), ("G2", 14)];
    for (name, d) in dims {
        assert_eq!(builtin_profile(name).unwrap().dimension, d, "{name}");
    }
}

#[test]
fn rank_three_profiles_pass_small_truncation() {
    for p in [builtin_profile("SU(4)").unwrap(), ExponentProfile::custom(&[3]).unwrap()] {
        for r in lie_suite(&p, 3).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn koszul_signed_symmetry_is_not_what_the_formula_gives() {
    let r = check_signed_commutativity(&builtin_profile("SU(3)").unwrap(), 2).unwrap();
    assert!(!r.passed());
}
