//! The holomorph `G = Hol(C_{p^n})` as pairs `(i, u)`: `i` is the
//! translation part `a^i` and `u` the unit acting by `x ↦ x^u`.
//!
//! Multiplication is `(i, u)·(j, v) = (i + u·j, u·v)` modulo `p^n`. With
//! `a = (1, 1)` and a unit generator `b = (0, r)` this law gives
//! `b·a·b⁻¹ = a^r`.
//!
//! Generators:
//! * `p` odd: `a` and `b = (0, r)` with `r` the smallest primitive root mod `p^n`;
//! * `p = 2`, `n ≥ 3`: `a`, `b = (0, 5)` and `c = (0, -1)`;
//! * `p = 2`, `n = 2`: `a` and `c = (0, 3)`; `p = 2`, `n = 1`: just `a`.

mod bitset;
mod subgroup;

use serde::{Deserialize, Serialize};

pub use bitset::BitSet;
pub use subgroup::Subgroup;

use crate::error::{Error, Result};
use crate::exactnum::arith::{euler_phi, gcd, inv_mod, is_prime, lcm, mul_mod, mult_order, pow_mod, units_mod};

/// Default cap on the group order for class and subgroup enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;

/// Largest modulus `p^n` accepted; keeps the unit lookup table small.
pub const MAX_MODULUS: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HolomorphParams {
    pub p: u64,
    pub n: u32,
}

impl HolomorphParams {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        match p.checked_pow(n) {
            Some(q) if q <= MAX_MODULUS => Ok(HolomorphParams { p, n }),
            _ => Err(Error::InvalidParams(format!(
                "modulus {p}^{n} exceeds the supported maximum {MAX_MODULUS}"
            ))),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// `p^{2n-1}(p-1)`.
    pub fn group_order(&self) -> u64 {
        self.p.pow(2 * self.n - 1) * (self.p - 1)
    }

    /// Whether the closed forms for these groups apply (`p` odd, or `p = 2` with `n ≥ 3`).
    pub fn closed_forms_apply(&self) -> bool {
        self.p != 2 || self.n >= 3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    pub i: u64,
    pub u: u64,
}

impl Element {
    pub fn new(i: u64, u: u64) -> Self {
        Element { i, u }
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.i, self.u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GenName {
    A,
    B,
    C,
}

impl GenName {
    pub fn as_str(&self) -> &'static str {
        match self {
            GenName::A => "a",
            GenName::B => "b",
            GenName::C => "c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: GenName,
    pub element: Element,
    pub order: u64,
}

/// A word `g_{k_1}^{e_1} · g_{k_2}^{e_2} ⋯` over the generator list.
pub type Word = Vec<(usize, u64)>;

/// One defining relation `lhs = rhs` of the presentation.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
}

/// Evaluates a word on generator images with the supplied product.
pub fn eval_word<T: Clone>(word: &[(usize, u64)], images: &[T], one: &T, mul: impl Fn(&T, &T) -> T) -> T {
    let mut acc = one.clone();
    for &(g, e) in word {
        let mut base = images[g].clone();
        let mut e = e;
        let mut pw = one.clone();
        while e > 0 {
            if e & 1 == 1 {
                pw = mul(&pw, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(&base, &base);
            }
        }
        acc = mul(&acc, &pw);
    }
    acc
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ConjClass {
    pub representative: Element,
    pub size: u64,
    #[serde(skip)]
    pub members: Vec<Element>,
}

/// Conjugacy classes ordered by their lexicographically least representative.
#[derive(Clone, Debug)]
pub struct ConjClasses {
    pub classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl ConjClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, group: &Holomorph, g: Element) -> usize {
        self.class_of[group.index_of(g)] as usize
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn representatives(&self) -> Vec<Element> {
        self.classes.iter().map(|c| c.representative).collect()
    }
}

/// Concrete model of `Hol(C_{p^n})`.
#[derive(Clone, Debug)]
pub struct Holomorph {
    params: HolomorphParams,
    modulus: u64,
    units: Vec<u64>,
    unit_pos: Vec<u32>,
    unit_word: Vec<(u64, u64)>,
    b_unit: Option<(u64, u64)>,
    c_unit: Option<u64>,
    generators: Vec<Generator>,
    exponent: u64,
}

/// Smallest `r > 1` of multiplicative order `φ(p^n)` modulo `p^n`.
pub fn primitive_root_mod_pn(p: u64, n: u32) -> Result<u64> {
    if p == 2 {
        return Err(Error::OutOfDomain(
            "(Z/2^n)^* is not cyclic in general; primitive roots are only taken for odd p".into(),
        ));
    }
    let params = HolomorphParams::new(p, n)?;
    let q = params.modulus();
    let target = euler_phi(q);
    (2..q)
        .find(|&r| mult_order(r, q) == Some(target))
        .ok_or_else(|| Error::Falsified(format!("no primitive root modulo {q}")))
}

/// `1 + u + … + u^{count-1}` modulo `q`, by binary splitting.
fn geometric_sum(u: u64, count: u64, q: u64) -> u64 {
    if count == 0 {
        return 0;
    }
    if count % 2 == 1 {
        let rest = geometric_sum(u, count - 1, q);
        return (1 + mul_mod(u, rest, q)) % q;
    }
    let half = geometric_sum(u, count / 2, q);
    mul_mod(half, 1 + pow_mod(u, count / 2, q), q)
}

impl Holomorph {
    pub fn new(params: HolomorphParams) -> Self {
        let (p, n) = (params.p, params.n);
        let q = params.modulus();
        let units = units_mod(q);
        let mut unit_pos = vec![u32::MAX; q as usize];
        for (k, &u) in units.iter().enumerate() {
            unit_pos[u as usize] = k as u32;
        }

        let (b_unit, c_unit) = if p == 2 {
            let five = 5 % q;
            let b = (five != 1 % q).then(|| (five, mult_order(five, q).unwrap()));
            let c = (q > 2).then_some(q - 1);
            (b, c)
        } else {
            let r = primitive_root_mod_pn(p, n).expect("odd prime");
            (Some((r % q, euler_phi(q))), None)
        };

        let mut generators = vec![Generator {
            name: GenName::A,
            element: Element::new(1 % q, 1 % q),
            order: q,
        }];
        if let Some((r, ord)) = b_unit {
            generators.push(Generator {
                name: GenName::B,
                element: Element::new(0, r),
                order: ord,
            });
        }
        if let Some(c) = c_unit {
            generators.push(Generator {
                name: GenName::C,
                element: Element::new(0, c),
                order: 2,
            });
        }

        // u = b^j c^e for every unit
        let mut unit_word = vec![(u64::MAX, u64::MAX); units.len()];
        let b_ord = b_unit.map_or(1, |(_, o)| o);
        let c_ord = if c_unit.is_some() { 2 } else { 1 };
        for j in 0..b_ord {
            let bj = b_unit.map_or(1 % q, |(r, _)| pow_mod(r, j, q));
            for e in 0..c_ord {
                let u = if e == 1 { mul_mod(bj, c_unit.unwrap(), q) } else { bj };
                unit_word[unit_pos[u as usize] as usize] = (j, e);
            }
        }
        assert!(
            unit_word.iter().all(|&(j, _)| j != u64::MAX),
            "unit generators must generate (Z/{q})^*"
        );

        let mut g = Holomorph {
            params,
            modulus: q,
            units,
            unit_pos,
            unit_word,
            b_unit,
            c_unit,
            generators,
            exponent: 1,
        };
        g.exponent = g.compute_exponent();
        g
    }

    pub fn from_pn(p: u64, n: u32) -> Result<Self> {
        Ok(Self::new(HolomorphParams::new(p, n)?))
    }

    fn compute_exponent(&self) -> u64 {
        // the largest order in the coset N·(0,u) is attained at i = 1
        self.units
            .iter()
            .map(|&u| self.element_order(Element::new(1 % self.modulus, u)))
            .fold(1, lcm)
    }

    pub fn params(&self) -> HolomorphParams {
        self.params
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn n(&self) -> u32 {
        self.params.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `|G|`.
    pub fn order(&self) -> u64 {
        self.modulus * self.units.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn units(&self) -> &[u64] {
        &self.units
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, name: GenName) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    /// `(r, order)` for the cyclic unit generator, if present.
    pub fn b_unit(&self) -> Option<(u64, u64)> {
        self.b_unit
    }

    /// `-1 mod 2^n` when it is an independent unit generator.
    pub fn c_unit(&self) -> Option<u64> {
        self.c_unit
    }

    pub fn identity(&self) -> Element {
        Element::new(0, 1 % self.modulus)
    }

    pub fn contains(&self, g: Element) -> bool {
        g.i < self.modulus && g.u < self.modulus && self.unit_pos[g.u as usize] != u32::MAX
    }

    pub fn mul(&self, g: Element, h: Element) -> Element {
        let q = self.modulus;
        Element::new((g.i + mul_mod(g.u, h.i, q)) % q, mul_mod(g.u, h.u, q))
    }

    pub fn inv(&self, g: Element) -> Element {
        let q = self.modulus;
        let u_inv = inv_mod(g.u, q).expect("unit part is invertible");
        Element::new((q - mul_mod(u_inv, g.i, q)) % q, u_inv)
    }

    pub fn pow(&self, g: Element, mut e: u64) -> Element {
        let (mut acc, mut base) = (self.identity(), g);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x · g · x⁻¹`.
    pub fn conjugate(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn element_order(&self, g: Element) -> u64 {
        let q = self.modulus;
        let unit_order = mult_order(g.u, q).expect("unit part");
        // g^{o} = (i·(1 + u + … + u^{o-1}), 1)
        let translation = mul_mod(g.i, geometric_sum(g.u, unit_order, q), q);
        unit_order * (q / gcd(translation, q))
    }

    /// Position in the lexicographic enumeration of `G`.
    pub fn index_of(&self, g: Element) -> usize {
        g.i as usize * self.units.len() + self.unit_pos[g.u as usize] as usize
    }

    pub fn element_at(&self, idx: usize) -> Element {
        let nu = self.units.len();
        Element::new((idx / nu) as u64, self.units[idx % nu])
    }

    /// All elements in lexicographic `(i, u)` order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order() as usize).map(|k| self.element_at(k))
    }

    /// Exponents `(j, e)` with `u = b^j · c^e`.
    pub fn unit_word(&self, u: u64) -> (u64, u64) {
        self.unit_word[self.unit_pos[u as usize] as usize]
    }

    /// Normal form `a^i · b^j · c^e` of `g` as a word over [`Self::generators`].
    pub fn word(&self, g: Element) -> Word {
        let (j, e) = self.unit_word(g.u);
        self.generators
            .iter()
            .enumerate()
            .filter_map(|(k, gen)| {
                let exp = match gen.name {
                    GenName::A => g.i,
                    GenName::B => j,
                    GenName::C => e,
                };
                (exp > 0).then_some((k, exp))
            })
            .collect()
    }

    /// Defining relations for the generator list, written positively:
    /// `a^{p^n} = 1`, `b^{o(b)} = 1`, `b·a = a^r·b`, `c^2 = 1`,
    /// `c·a = a^{-1}·c`, `b·c = c·b`.
    pub fn relations(&self) -> Vec<Relation> {
        let q = self.modulus;
        let find = |name| self.generators.iter().position(|g| g.name == name);
        let a = find(GenName::A).unwrap();
        let mut out = vec![Relation {
            label: format!("a^{q} = 1"),
            lhs: vec![(a, q)],
            rhs: vec![],
        }];
        if let (Some(b), Some((r, ord))) = (find(GenName::B), self.b_unit) {
            out.push(Relation {
                label: format!("b^{ord} = 1"),
                lhs: vec![(b, ord)],
                rhs: vec![],
            });
            out.push(Relation {
                label: format!("b a b^-1 = a^{r}"),
                lhs: vec![(b, 1), (a, 1)],
                rhs: vec![(a, r), (b, 1)],
            });
        }
        if let Some(c) = find(GenName::C) {
            out.push(Relation {
                label: "c^2 = 1".into(),
                lhs: vec![(c, 2)],
                rhs: vec![],
            });
            out.push(Relation {
                label: "c a c^-1 = a^-1".into(),
                lhs: vec![(c, 1), (a, 1)],
                rhs: vec![(a, q - 1), (c, 1)],
            });
            if let Some(b) = find(GenName::B) {
                out.push(Relation {
                    label: "b c = c b".into(),
                    lhs: vec![(b, 1), (c, 1)],
                    rhs: vec![(c, 1), (b, 1)],
                });
            }
        }
        out
    }

    fn check_budget(&self, what: &'static str, budget: u64) -> Result<()> {
        if self.order() > budget {
            return Err(Error::BudgetExceeded {
                what,
                size: self.order(),
                budget,
            });
        }
        Ok(())
    }

    /// Conjugacy classes by orbit closure under conjugation by the generators.
    pub fn conjugacy_classes(&self, budget: u64) -> Result<ConjClasses> {
        self.check_budget("conjugacy classes", budget)?;
        let total = self.order() as usize;
        let mut class_of = vec![u32::MAX; total];
        let gens: Vec<Element> = self.generators.iter().map(|g| g.element).collect();
        let mut classes = Vec::new();
        for start in 0..total {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut members = vec![self.element_at(start)];
            class_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &s in &gens {
                    let y = self.conjugate(s, x);
                    let k = self.index_of(y);
                    if class_of[k] == u32::MAX {
                        class_of[k] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjClass {
                representative: members[0],
                size: members.len() as u64,
                members,
            });
        }
        // enumeration runs in lexicographic order, so classes are already sorted by representative
        Ok(ConjClasses { classes, class_of })
    }

    /// Bit set of the subgroup generated by `gens` (element indices).
    pub(crate) fn closure_bits(&self, gens: &[Element]) -> BitSet {
        let mut bits = BitSet::new(self.order() as usize);
        let id = self.identity();
        bits.insert(self.index_of(id));
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if bits.insert(self.index_of(y)) {
                    queue.push(y);
                }
            }
        }
        bits
    }

    pub(crate) fn subgroup_from_bits(&self, bits: &BitSet, gens: Vec<Element>) -> Subgroup {
        Subgroup::from_sorted(bits.iter().map(|k| self.element_at(k)).collect(), gens)
    }

    pub fn subgroup_from_generators(&self, gens: &[Element]) -> Subgroup {
        let bits = self.closure_bits(gens);
        self.subgroup_from_bits(&bits, gens.to_vec())
    }

    pub fn whole(&self) -> Subgroup {
        let gens = self.generators.iter().map(|g| g.element).collect::<Vec<_>>();
        Subgroup::from_sorted(self.elements().collect(), gens)
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(vec![self.identity()], vec![])
    }

    /// `N = ⟨a⟩`.
    pub fn translation_subgroup(&self) -> Subgroup {
        self.subgroup_from_generators(&[Element::new(1 % self.modulus, 1 % self.modulus)])
    }

    /// The complement `{(0, u)}` ≅ `Aut(C_{p^n})`.
    pub fn aut_subgroup(&self) -> Subgroup {
        let gens: Vec<Element> = self.units.iter().map(|&u| Element::new(0, u)).collect();
        let members = gens.clone();
        Subgroup::from_sorted(members, gens)
    }

    pub fn center(&self) -> Subgroup {
        let gens: Vec<Element> = self.generators.iter().map(|g| g.element).collect();
        let members: Vec<Element> = self
            .elements()
            .filter(|&g| gens.iter().all(|&s| self.mul(g, s) == self.mul(s, g)))
            .collect();
        Subgroup::from_sorted(members.clone(), members)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators
            .iter()
            .all(|s| h.members().iter().all(|&x| h.contains(self.conjugate(s.element, x))))
    }

    /// Largest normal subgroup of `G` inside `h`, as the fixed point of
    /// `K ↦ K ∩ s⁻¹Ks` over the generators `s`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<Element> = self.generators.iter().map(|g| g.element).collect();
        let mut members = h.members().to_vec();
        loop {
            let current = Subgroup::from_sorted(members.clone(), vec![]);
            let next: Vec<Element> = members
                .iter()
                .copied()
                .filter(|&x| gens.iter().all(|&s| current.contains(self.conjugate(s, x))))
                .collect();
            if next.len() == members.len() {
                break;
            }
            members = next;
        }
        Subgroup::from_sorted(members.clone(), members)
    }

    pub fn is_core_free(&self, h: &Subgroup) -> bool {
        self.core(h).order() == 1
    }

    /// Normal closure of each class of prime-order elements, keeping the
    /// inclusion-minimal ones.
    pub fn minimal_normal_subgroups(&self, budget: u64) -> Result<Vec<Subgroup>> {
        let classes = self.conjugacy_classes(budget)?;
        let mut candidates: Vec<BitSet> = Vec::new();
        for class in &classes.classes {
            let ord = self.element_order(class.representative);
            if !is_prime(ord) {
                continue;
            }
            let bits = self.closure_bits(&class.members);
            if !candidates.contains(&bits) {
                candidates.push(bits);
            }
        }
        let minimal: Vec<Subgroup> = candidates
            .iter()
            .filter(|c| !candidates.iter().any(|d| d != *c && d.is_subset(c)))
            .map(|c| {
                let members: Vec<Element> = c.iter().map(|k| self.element_at(k)).collect();
                Subgroup::from_sorted(members.clone(), members)
            })
            .collect();
        let mut minimal = minimal;
        minimal.sort();
        Ok(minimal)
    }

    /// Every subgroup of `G`, found by closing generator sets of size at most 3.
    pub fn all_subgroups(&self, order_bound: u64) -> Result<Vec<Subgroup>> {
        self.all_subgroups_with_max_gens(order_bound, 3)
    }

    /// Subgroups generated by at most `max_gens` elements, in canonical order.
    pub fn all_subgroups_with_max_gens(&self, order_bound: u64, max_gens: usize) -> Result<Vec<Subgroup>> {
        self.check_budget("subgroup enumeration", order_bound)?;
        use std::collections::HashMap;
        let mut found: HashMap<BitSet, Vec<Element>> = HashMap::new();
        let trivial = self.closure_bits(&[]);
        found.insert(trivial, vec![]);
        let all: Vec<Element> = self.elements().collect();
        let mut frontier: Vec<(BitSet, Vec<Element>)> = found.iter().map(|(b, g)| (b.clone(), g.clone())).collect();
        for _ in 0..max_gens {
            let mut next = Vec::new();
            for (bits, gens) in &frontier {
                for (k, &g) in all.iter().enumerate() {
                    if bits.contains(k) {
                        continue;
                    }
                    let mut new_gens = gens.clone();
                    new_gens.push(g);
                    let closed = self.closure_bits(&new_gens);
                    if !found.contains_key(&closed) {
                        found.insert(closed.clone(), new_gens.clone());
                        next.push((closed, new_gens));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let mut subs: Vec<Subgroup> = found
            .into_iter()
            .map(|(bits, gens)| self.subgroup_from_bits(&bits, gens))
            .collect();
        subs.sort();
        Ok(subs)
    }
}

#[cfg(test)]
mod tests;
