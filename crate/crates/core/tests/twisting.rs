use stacktop::checks::check_associativity;
use stacktop::group::{builtin_group, dw_algebra};
use stacktop::scalar::int;
use stacktop::twist::{check_cocycle, twist_product, Weights};

/// `(-1)^{a_1 b_2}` on `Z/2 × Z/2`, labels `[(a_1,a_2)]`.
fn bilinear() -> Weights {
    let bits = |l: &str| {
        let b: Vec<i64> = l.trim_matches(|c| "[()]".contains(c)).split(',').map(|s| s.parse().unwrap()).collect();
        (b[0], b[1])
    };
    let a = dw_algebra(&builtin_group("Z2xZ2").unwrap()).unwrap();
    Weights::from_fn(&a, |l, r| if bits(l).0 * bits(r).1 == 1 { int(-1) } else { int(1) })
}

#[test]
fn bilinear_cocycle_twists_associatively() {
    let a = dw_algebra(&builtin_group("Z2xZ2").unwrap()).unwrap();
    let alpha = bilinear();
    assert!(!alpha.is_flip_symmetric(&a));
    assert!(check_cocycle(&a, &alpha).unwrap().passed());
    let t = twist_product(&a, &alpha).unwrap();
    assert!(check_associativity(&t).passed());
    assert_eq!(t.product_of("[(1,0)]", "[(0,1)]").unwrap().coeff("[(1,1)]"), int(-1));
    assert_eq!(t.product_of("[(0,1)]", "[(1,0)]").unwrap().coeff("[(1,1)]"), int(1));
}

#[test]
fn non_cocycle_is_rejected_with_witness() {
    let a = dw_algebra(&builtin_group("Z2").unwrap()).unwrap();
    let alpha = Weights::trivial().with("[1]", "[1]", int(2)).with("[1]", "[0]", int(2));
    let r = check_cocycle(&a, &alpha).unwrap();
    assert!(!r.passed());
    assert_eq!(r.first_witness().unwrap().len(), 3);
    assert!(r.has_witness(&["[1]", "[1]", "[1]"]));
}
