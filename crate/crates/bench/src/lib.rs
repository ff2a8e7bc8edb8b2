//! Shared fixtures for the criterion benchmarks under `benches/`.

use holrep::holgroup::DEFAULT_ENUMERATION_BUDGET;
use holrep::{CharacterTable, Holomorph};

/// Groups the benchmarks sweep over, smallest first.
pub const SIZES: [(u64, u32); 4] = [(3, 2), (2, 4), (2, 5), (5, 2)];

pub fn table(p: u64, n: u32) -> CharacterTable {
    let group = Holomorph::from_pn(p, n).expect("valid parameters");
    CharacterTable::compute(&group, DEFAULT_ENUMERATION_BUDGET).expect("within budget")
}
