//! Finite groups and the string topology of `[*/G]`.

mod builtin;
mod classes;
mod counting;
mod dw;
mod table;
mod transfer;

pub use builtin::{builtin_group, builtin_group_names, cyclic_group};
pub use classes::{conjugacy_classes, ConjugacyPartition};
pub use counting::commuting_tuple_count;
pub use dw::{dw_algebra, dw_candidates, DwCandidate, Normalization};
pub use table::{
    format_cycles, group_from_cycle_strings, group_from_doc, group_from_permutations, group_from_table,
    parse_cycles, FiniteGroupTable, Perm, TableDoc,
};
pub use transfer::{transfer, transfer_with_representatives, CosetChoice, PermutationAction};
