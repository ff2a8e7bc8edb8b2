use std::cmp::Ordering;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Element;

/// A subgroup stored as its sorted member list plus the generators it was
/// built from. Equality and ordering use `(order, members)` only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<Element>,
    generators: Vec<Element>,
}

impl Subgroup {
    /// `members` must be sorted and closed under the group law.
    pub fn from_sorted(members: Vec<Element>, generators: Vec<Element>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members, generators }
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn contains(&self, g: Element) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<Element> = self.members.iter().copied().filter(|&g| other.contains(g)).collect();
        Subgroup::from_sorted(members.clone(), members)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subgroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut members = Vec::<Element>::deserialize(d)?;
        members.sort_unstable();
        members.dedup();
        Ok(Subgroup::from_sorted(members.clone(), members))
    }
}
