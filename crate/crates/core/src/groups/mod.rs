//! Finite subgroups of SL2(C) as explicit matrix groups, their character
//! tables, and restriction and induction along cataloged normal pairs.

mod character;
mod chartab;
mod element;
mod pair;
mod spec;
mod subgroup;

pub use character::{
    fundamental_character, inner_product, symmetric_power_character, symmetric_power_characters,
    trivial_character, Character, CharacterTable,
};
pub(crate) use chartab::char_sort_key;
pub use chartab::character_table;
pub use element::GroupElement;
pub use pair::{GroupPair, PairFamily, PairSpec, MAX_NODES};
pub use spec::SubgroupSpec;
pub use subgroup::FiniteSubgroup;
