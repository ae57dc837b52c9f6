use stacktop::checks::{check_associativity, check_frobenius, check_graded_commutativity, check_morphism};
use stacktop::sphere::{face_label, face_product_oracle, phi_map, sphere_string_algebra};

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1usize << (n + 1))
        .filter(|m| m.count_ones() as usize <= n)
        .map(|m| (0..=n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

#[test]
fn basis_counts() {
    for n in 0..=6 {
        let a = sphere_string_algebra(n).unwrap();
        let groups = a.basis().labels().filter(|l| l.starts_with('g')).count();
        let faces = a.basis().labels().filter(|l| l.starts_with('F')).count();
        let expect = (1usize << (n + 1)) - 1;
        assert_eq!((groups, faces), (expect, expect), "n={n}");
    }
}

#[test]
fn product_side_axioms() {
    for n in 1..=4 {
        let a = sphere_string_algebra(n).unwrap();
        assert!(check_associativity(&a).passed(), "n={n}");
        assert!(check_graded_commutativity(&a).passed(), "n={n}");
        assert!(check_frobenius(&a).passed(), "n={n}");
    }
}

#[test]
fn oracle_matches_table_and_degrees_add() {
    for n in 1..=4 {
        let a = sphere_string_algebra(n).unwrap();
        let shift = 2 * n as i64 + 1;
        for s in subsets(n) {
            for t in subsets(n) {
                let (ls, lt) = (face_label(mask(&s), n), face_label(mask(&t), n));
                let stored = a.product_of(&ls, &lt).unwrap();
                assert_eq!(face_product_oracle(n, &s, &t).unwrap(), stored, "n={n} {ls} {lt}");
                if let Some(target) = stored.degree() {
                    let deg = |l: &str| a.basis().degree(a.basis().index_of(l).unwrap());
                    assert_eq!(target, deg(&ls) + deg(&lt) - shift);
                }
            }
        }
    }
}

fn mask(s: &[usize]) -> usize {
    s.iter().map(|i| 1 << i).sum()
}

#[test]
fn phi_is_a_morphism() {
    for n in 1..=3 {
        for truncation in [1, 3] {
            let (s, l, f) = phi_map(n, truncation).unwrap();
            let r = check_morphism(&f, &s, &l.algebra).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
