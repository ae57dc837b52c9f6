use stacktop::group::{builtin_group, builtin_group_names, commuting_tuple_count, conjugacy_classes, dw_algebra};
use stacktop::scalar::int;
use stacktop::tqft::{closed_invariant, surface_operation, SurfaceSignature};
use stacktop::Scalar;

#[test]
fn genus_one_invariant_counts_classes() {
    for name in builtin_group_names() {
        let g = builtin_group(&name).unwrap();
        let a = dw_algebra(&g).unwrap();
        let classes = int(conjugacy_classes(&g).len() as i64);
        assert_eq!(closed_invariant(&a, 1).unwrap(), classes, "{name}");
        assert_eq!(commuting_tuple_count(&g, 1).unwrap(), classes, "{name}");
    }
}

#[test]
fn abelian_counts_are_powers_of_the_order() {
    for name in builtin_group_names() {
        let g = builtin_group(&name).unwrap();
        if !g.is_abelian() {
            continue;
        }
        let n = g.order() as i64;
        for genus in 1..=3u32 {
            let expect = Scalar::from_integer(n.pow(2 * genus - 1).into());
            assert_eq!(commuting_tuple_count(&g, genus as usize).unwrap(), expect, "{name} g={genus}");
        }
    }
}

#[test]
fn s3_commuting_pairs() {
    // 18 commuting pairs in S3, counted directly.
    let g = builtin_group("S3").unwrap();
    let pairs = (0..6)
        .flat_map(|a| (0..6).map(move |b| (a, b)))
        .filter(|&(a, b)| g.mul(a, b) == g.mul(b, a))
        .count();
    assert_eq!(pairs, 18);
    assert_eq!(commuting_tuple_count(&g, 1).unwrap(), int(3));
}

#[test]
fn pants_glue_associatively() {
    for name in ["S3", "Q8", "A4"] {
        let a = dw_algebra(&builtin_group(name).unwrap()).unwrap();
        let labels: Vec<String> = a.basis().labels().map(String::from).collect();
        for x in &labels {
            for y in &labels {
                for z in &labels {
                    let [ex, ey, ez] = [x, y, z].map(|l| a.basis_element(l).unwrap());
                    let three = surface_operation(&a, SurfaceSignature::new(3, 1, 0), &[ex.clone(), ey.clone(), ez.clone()])
                        .unwrap()
                        .to_element()
                        .unwrap();
                    let yz = a.apply_product(&ey, &ez).unwrap();
                    assert_eq!(a.apply_product(&ex, &yz).unwrap(), three);
                }
            }
        }
    }
}

#[test]
fn genus_additivity_on_all_small_algebras() {
    for name in ["Z3", "S3", "D4"] {
        let a = dw_algebra(&builtin_group(name).unwrap()).unwrap();
        for l in a.basis().labels() {
            let x = a.basis_element(l).unwrap();
            for g1 in 0..=2 {
                for g2 in 0..=2 {
                    let first = surface_operation(&a, SurfaceSignature::new(1, 1, g1), &[x.clone()]).unwrap();
                    let second = surface_operation(&a, SurfaceSignature::new(1, 1, g2), &[first.to_element().unwrap()]).unwrap();
                    let whole = surface_operation(&a, SurfaceSignature::new(1, 1, g1 + g2), &[x.clone()]).unwrap();
                    assert_eq!(second, whole);
                }
            }
        }
    }
}
