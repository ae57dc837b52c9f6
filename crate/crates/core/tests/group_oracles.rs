//! Dijkgraaf–Witten structure constants against brute force in `Q[G]`.

use std::collections::BTreeMap;

use stacktop::checks::full_suite;
use stacktop::group::{
    builtin_group, builtin_group_names, conjugacy_classes, dw_algebra, group_from_cycle_strings, transfer,
    transfer_with_representatives, CosetChoice, FiniteGroupTable, PermutationAction,
};
use stacktop::linalg::LinearMap;
use stacktop::scalar::{frac, int};
use stacktop::Scalar;

/// Group-algebra element as element-index → coefficient.
type GroupVec = BTreeMap<usize, i64>;

fn convolve(g: &FiniteGroupTable, x: &GroupVec, y: &GroupVec) -> GroupVec {
    let mut out = GroupVec::new();
    for (&a, ca) in x {
        for (&b, cb) in y {
            *out.entry(g.mul(a, b)).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Brute-force conjugation orbit, independent of the library's partition.
fn orbit(g: &FiniteGroupTable, x: usize) -> Vec<usize> {
    let mut o: Vec<usize> = (0..g.order()).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
    o.sort_unstable();
    o.dedup();
    o
}

fn class_sum(g: &FiniteGroupTable, x: usize) -> GroupVec {
    orbit(g, x).into_iter().map(|y| (y, 1)).collect()
}

#[test]
fn product_is_class_sum_convolution() {
    for name in builtin_group_names() {
        let g = builtin_group(&name).unwrap();
        let a = dw_algebra(&g).unwrap();
        let p = conjugacy_classes(&g);
        for (c, &rc) in p.representative.iter().enumerate() {
            for (d, &rd) in p.representative.iter().enumerate() {
                let z = convolve(&g, &class_sum(&g, rc), &class_sum(&g, rd));
                let got = a.product_of(&p.label(&g, c), &p.label(&g, d)).unwrap();
                for (e, &re) in p.representative.iter().enumerate() {
                    // A central element is constant on classes: read the
                    // coefficient of the class at any member.
                    let expect = z.get(&re).copied().unwrap_or(0);
                    assert_eq!(got.coeff(&p.label(&g, e)), int(expect), "{name}");
                }
            }
        }
    }
}

#[test]
fn s3_named_products() {
    let g = builtin_group("S3").unwrap();
    let a = dw_algebra(&g).unwrap();
    let (e, t, c) = ("[()]", "[(1 2)]", "[(1 2 3)]");
    let tt = a.product_of(t, t).unwrap();
    assert_eq!((tt.coeff(e), tt.coeff(c), tt.coeff(t)), (int(3), int(3), int(0)));
    let tc = a.product_of(t, c).unwrap();
    assert_eq!((tc.coeff(t), tc.len()), (int(2), 1));
    let cc = a.product_of(c, c).unwrap();
    assert_eq!((cc.coeff(e), cc.coeff(c), cc.coeff(t)), (int(2), int(1), int(0)));
}

#[test]
fn coproduct_matches_pair_enumeration() {
    // |C|/(|D||E|) · #{(h,k): hk = g_C, h ∈ D, k ∈ E}, recomputed by summing
    // over every g in C: #{(h,k): hk ∈ C, h ∈ D, k ∈ E} / (|D||E|).
    for name in builtin_group_names() {
        let g = builtin_group(&name).unwrap();
        let a = dw_algebra(&g).unwrap();
        let p = conjugacy_classes(&g);
        let label = |x: usize| p.label(&g, p.class_of(x));
        let mut counts: BTreeMap<(String, String, String), i64> = BTreeMap::new();
        for h in 0..g.order() {
            for k in 0..g.order() {
                *counts.entry((label(g.mul(h, k)), label(h), label(k))).or_default() += 1;
            }
        }
        for (c, &rc) in p.representative.iter().enumerate() {
            let delta = a.coproduct_of(&p.label(&g, c)).unwrap();
            for (d, &rd) in p.representative.iter().enumerate() {
                for (e, &re) in p.representative.iter().enumerate() {
                    let n = counts
                        .get(&(label(rc), label(rd), label(re)))
                        .copied()
                        .unwrap_or(0);
                    let sizes = (orbit(&g, rd).len() * orbit(&g, re).len()) as i64;
                    let expect = frac(n, sizes);
                    assert_eq!(delta.coeff(&p.label(&g, d), &p.label(&g, e)), expect, "{name}");
                }
            }
        }
    }
}

#[test]
fn abelian_coproduct_is_literal_pair_sum() {
    for name in ["Z5", "Z2xZ2", "Z12"] {
        let g = builtin_group(name).unwrap();
        let a = dw_algebra(&g).unwrap();
        for x in 0..g.order() {
            let delta = a.coproduct_of(&format!("[{}]", g.label(x))).unwrap();
            let mut expect = 0;
            for h in 0..g.order() {
                let k = g.mul(g.inv(h), x);
                assert_eq!(delta.coeff(&format!("[{}]", g.label(h)), &format!("[{}]", g.label(k))), int(1));
                expect += 1;
            }
            assert_eq!(delta.terms().count(), expect);
        }
    }
}

#[test]
fn every_builtin_passes_the_full_suite() {
    for name in builtin_group_names() {
        let a = dw_algebra(&builtin_group(&name).unwrap()).unwrap();
        let suite = full_suite(&a);
        assert_eq!(suite.len(), 6);
        for r in suite {
            assert!(r.passed(), "{name}: {r}");
        }
    }
}

#[test]
fn class_counts() {
    let expect = [("S3", 3), ("S4", 5), ("D4", 5), ("Q8", 5), ("A4", 4), ("Z2xZ2", 4), ("Z9", 9)];
    for (name, k) in expect {
        assert_eq!(conjugacy_classes(&builtin_group(name).unwrap()).len(), k, "{name}");
    }
}

#[test]
fn q8_from_eight_point_permutations() {
    let g = group_from_cycle_strings(8, &["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"]).unwrap();
    assert_eq!(g.order(), 8);
    let mut sizes = conjugacy_classes(&g).sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 1, 2, 2, 2]);
}

fn generated(g: &FiniteGroupTable, gens: &[&str]) -> Vec<usize> {
    let gens: Vec<usize> = gens.iter().map(|l| g.index_of(l).unwrap()).collect();
    let mut set = vec![g.identity()];
    let mut i = 0;
    while i < set.len() {
        for &s in &gens {
            let y = g.mul(set[i], s);
            if !set.contains(&y) {
                set.push(y);
            }
        }
        i += 1;
    }
    set.sort_unstable();
    set
}

#[test]
fn transfer_then_projection_is_index() {
    // Projection from G-coinvariants to H-coinvariants, [x]_G ↦ [x]_H.
    let cases = [
        ("S3", vec!["(1 2 3)"]),
        ("D4", vec!["(1 2 3 4)"]),
        ("S4", vec!["(1 2 3)", "(2 3 4)"]),
        ("Q8", vec!["(1 2 4 7)(3 6 8 5)"]),
    ];
    for (name, gens) in cases {
        let g = builtin_group(name).unwrap();
        let sub = generated(&g, &gens);
        let index = g.order() / sub.len();
        let act = PermutationAction::conjugation(&g);
        let t = transfer(&g, &sub, &act).unwrap();
        let alt = transfer_with_representatives(&g, &sub, &act, CosetChoice::LargestIndex).unwrap();
        assert_eq!(t, alt);
        // Build the projection by reading each G-orbit's representative.
        let proj_entries: Vec<(String, Vec<(String, Scalar)>)> = t
            .target()
            .labels()
            .map(|l| {
                let x = g.index_of(&l[1..l.len() - 1]).unwrap();
                let rep = orbit(&g, x)[0];
                (l.to_string(), vec![(format!("[{}]", g.label(rep)), int(1))])
            })
            .collect();
        let proj = LinearMap::from_entries(t.target(), t.source(), &proj_entries).unwrap();
        let composed = proj.compose(&t).unwrap();
        for l in t.source().labels() {
            let img = composed.image_of(l).unwrap();
            assert_eq!(img.coeff(l), int(index as i64), "{name} {l}");
            assert_eq!(img.len(), 1);
        }
    }
}
