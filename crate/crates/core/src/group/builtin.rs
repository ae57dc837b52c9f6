use crate::error::{Error, Result};

use super::table::{group_from_cycle_strings, group_from_table, FiniteGroupTable};

/// `Z/n` with elements `0..n` under addition.
pub fn cyclic_group(n: usize) -> Result<FiniteGroupTable> {
    if n == 0 {
        return Err(Error::NotAGroup("Z0 has no elements".into()));
    }
    let labels = (0..n).map(|k| k.to_string()).collect();
    let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_from_table(labels, mult)
}

pub fn builtin_group_names() -> Vec<String> {
    (1..=12)
        .map(|n| format!("Z{n}"))
        .chain(["Z2xZ2", "S3", "S4", "D4", "Q8", "A4"].map(String::from))
        .collect()
}

pub fn builtin_group(name: &str) -> Result<FiniteGroupTable> {
    if let Some(n) = name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
        if (1..=12).contains(&n) {
            return cyclic_group(n);
        }
    }
    match name {
        "Z2xZ2" => {
            let labels = ["(0,0)", "(0,1)", "(1,0)", "(1,1)"].map(String::from).to_vec();
            let mult = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
            group_from_table(labels, mult)
        }
        "S3" => group_from_cycle_strings(3, &["(1 2)", "(1 2 3)"]),
        "S4" => group_from_cycle_strings(4, &["(1 2)", "(1 2 3 4)"]),
        "D4" => group_from_cycle_strings(4, &["(1 2 3 4)", "(1 3)"]),
        "A4" => group_from_cycle_strings(4, &["(1 2 3)", "(1 2)(3 4)"]),
        // Left-regular representation of the quaternions.
        "Q8" => group_from_cycle_strings(8, &["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"]),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let expect = [("Z2xZ2", 4), ("S3", 6), ("S4", 24), ("D4", 8), ("A4", 12), ("Q8", 8), ("Z12", 12)];
        for (name, n) in expect {
            assert_eq!(builtin_group(name).unwrap().order(), n, "{name}");
        }
        assert!(builtin_group("Z13").is_err());
        assert!(builtin_group("S5").is_err());
    }

    #[test]
    fn q8_has_a_unique_involution() {
        let g = builtin_group("Q8").unwrap();
        let involutions = (0..8).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!g.is_abelian());
    }
}
