use serde::{Deserialize, Serialize};

use super::table::FiniteGroupTable;

/// Conjugacy classes in order of their smallest element; the class of the
/// identity comes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyPartition {
    pub classes: Vec<Vec<usize>>,
    /// Smallest element order, then smallest index.
    pub representative: Vec<usize>,
    class_of: Vec<usize>,
}

pub fn conjugacy_classes(g: &FiniteGroupTable) -> ConjugacyPartition {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = (0..n).map(|h| g.conjugate(h, x)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class_of[m] = classes.len();
        }
        classes.push(members);
    }
    let representative = classes
        .iter()
        .map(|c| *c.iter().min_by_key(|&&x| (g.element_order(x), x)).expect("nonempty class"))
        .collect();
    ConjugacyPartition {
        classes,
        representative,
        class_of,
    }
}

impl ConjugacyPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// `[rep]`, the basis label of a class.
    pub fn label(&self, g: &FiniteGroupTable, class: usize) -> String {
        format!("[{}]", g.label(self.representative[class]))
    }
}
