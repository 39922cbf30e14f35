//! Hodge monodromy representations over elementary abelian 2-groups.
//!
//! Every monodromy group that shows up is `(Z/2)^k`, so its characters are
//! sign characters indexed by bit vectors: bit `j` is set when the character
//! is non-trivial around generator `j`, and the tensor product of characters
//! is XOR. A representation is a sparse map from characters to polynomial
//! coefficients in `q`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

pub const MAX_RANK: usize = 16;

/// A sign character of `(Z/2)^k`; bit `j` records non-trivial monodromy
/// around generator `j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character(pub u32);

impl Character {
    pub const TRIVIAL: Character = Character(0);

    pub fn from_bits(bits: &[bool]) -> Self {
        Character(
            bits.iter()
                .enumerate()
                .fold(0, |acc, (j, &b)| acc | (u32::from(b) << j)),
        )
    }

    pub fn bit(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    pub fn is_trivial(self) -> bool {
        self.0 == 0
    }

    /// Tensor product of characters.
    pub fn product(self, other: Character) -> Character {
        Character(self.0 ^ other.0)
    }
}

/// The monodromy group `(Z/2)^k`, with a label per generator (loop or
/// puncture) and optional display names for the characters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyGroup {
    generators: Vec<String>,
    names: Option<Vec<String>>,
}

impl MonodromyGroup {
    pub fn new<S: Into<String>>(generators: impl IntoIterator<Item = S>) -> Self {
        let generators: Vec<String> = generators.into_iter().map(Into::into).collect();
        assert!(generators.len() <= MAX_RANK, "rank above {MAX_RANK}");
        MonodromyGroup {
            generators,
            names: None,
        }
    }

    /// Attaches display names, indexed by the character's bit pattern.
    pub fn with_character_names<S: Into<String>>(
        mut self,
        names: impl IntoIterator<Item = S>,
    ) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_eq!(names.len(), self.order(), "one name per character");
        self.names = Some(names);
        self
    }

    /// Monodromy of a family over `C - {0, ±1}`: order two around the origin.
    pub fn punctured_line() -> Self {
        Self::new(["γ0"]).with_character_names(["T", "N"])
    }

    /// Monodromy over `C - {±2}`, generated by the loops around `2` and `-2`.
    /// `S_0 = S_2 ⊗ S_-2`.
    pub fn two_punctures() -> Self {
        Self::new(["γ2", "γ-2"]).with_character_names(["T", "S2", "S-2", "S0"])
    }

    /// Monodromy over `C* x C*`, order two around each coordinate axis.
    pub fn torus() -> Self {
        Self::new(["λ", "μ"]).with_character_names(["T", "N1", "N2", "N12"])
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn order(&self) -> usize {
        1 << self.rank()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn characters(&self) -> impl Iterator<Item = Character> {
        (0..self.order() as u32).map(Character)
    }

    pub fn contains(&self, c: Character) -> bool {
        (c.0 as usize) < self.order()
    }

    /// The character that is non-trivial exactly around generator `j`.
    pub fn generator_character(&self, j: usize) -> Character {
        assert!(j < self.rank());
        Character(1 << j)
    }

    /// Looks up a character by display name (or `T`).
    pub fn character(&self, name: &str) -> Option<Character> {
        if let Some(names) = &self.names {
            return names
                .iter()
                .position(|n| n == name)
                .map(|i| Character(i as u32));
        }
        self.characters().find(|&c| self.character_name(c) == name)
    }

    pub fn character_name(&self, c: Character) -> String {
        if let Some(names) = &self.names {
            return names[c.0 as usize].clone();
        }
        if c.is_trivial() {
            return "T".to_string();
        }
        let parts: Vec<&str> = (0..self.rank())
            .filter(|&j| c.bit(j))
            .map(|j| self.generators[j].as_str())
            .collect();
        format!("S[{}]", parts.join("·"))
    }

    pub(crate) fn describe(&self) -> String {
        format!("(Z/2)^{} <{}>", self.rank(), self.generators.join(", "))
    }

    fn ensure_same(&self, other: &MonodromyGroup) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.describe(),
                right: other.describe(),
            })
        }
    }
}

/// An element of `R(Γ)[q]`.
#[derive(Clone, PartialEq, Eq)]
pub struct HMRep {
    group: MonodromyGroup,
    terms: BTreeMap<Character, IntPoly>,
}

impl HMRep {
    pub fn zero(group: MonodromyGroup) -> Self {
        HMRep {
            group,
            terms: BTreeMap::new(),
        }
    }

    /// `p · T`.
    pub fn trivial(group: MonodromyGroup, p: IntPoly) -> Self {
        Self::from_terms(group, [(Character::TRIVIAL, p)])
    }

    /// Coefficients on coinciding characters are summed; zeros are dropped.
    pub fn from_terms(
        group: MonodromyGroup,
        terms: impl IntoIterator<Item = (Character, IntPoly)>,
    ) -> Self {
        let mut rep = HMRep::zero(group);
        for (c, p) in terms {
            rep.add_term(c, &p);
        }
        rep
    }

    /// Builds a representation from `(character name, coefficient)` pairs.
    pub fn from_named(group: MonodromyGroup, terms: &[(&str, IntPoly)]) -> Self {
        let resolved: Vec<(Character, IntPoly)> = terms
            .iter()
            .map(|(name, p)| {
                let c = group
                    .character(name)
                    .unwrap_or_else(|| panic!("no character named {name}"));
                (c, p.clone())
            })
            .collect();
        Self::from_terms(group, resolved)
    }

    fn add_term(&mut self, c: Character, p: &IntPoly) {
        assert!(self.group.contains(c), "character outside the group");
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(c).or_insert_with(IntPoly::zero);
        *entry += p;
        if entry.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn group(&self) -> &MonodromyGroup {
        &self.group
    }

    pub fn coeff(&self, c: Character) -> IntPoly {
        self.terms.get(&c).cloned().unwrap_or_default()
    }

    pub fn coeff_named(&self, name: &str) -> IntPoly {
        let c = self
            .group
            .character(name)
            .unwrap_or_else(|| panic!("no character named {name}"));
        self.coeff(c)
    }

    /// Nonzero terms in character order.
    pub fn terms(&self) -> impl Iterator<Item = (Character, &IntPoly)> {
        self.terms.iter().map(|(c, p)| (*c, p))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the trivial character: the E-polynomial of the
    /// invariant part of the fiber cohomology.
    pub fn invariant_part(&self) -> IntPoly {
        self.coeff(Character::TRIVIAL)
    }

    /// Sum of all coefficients: the E-polynomial of the fiber.
    pub fn fiber_total(&self) -> IntPoly {
        IntPoly::sum(self.terms.values())
    }

    pub fn scale(&self, p: &IntPoly) -> HMRep {
        HMRep::from_terms(
            self.group.clone(),
            self.terms.iter().map(|(c, a)| (*c, a * p)),
        )
    }

    pub fn add(&self, other: &HMRep) -> Result<HMRep> {
        self.group.ensure_same(&other.group)?;
        let mut out = self.clone();
        for (c, p) in &other.terms {
            out.add_term(*c, p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HMRep) -> Result<HMRep> {
        self.add(&other.scale(&IntPoly::constant(-1)))
    }

    /// Tensor product: convolution of coefficients over the character group.
    pub fn tensor(&self, other: &HMRep) -> Result<HMRep> {
        self.group.ensure_same(&other.group)?;
        let mut out = HMRep::zero(self.group.clone());
        for (c1, a1) in &self.terms {
            for (c2, a2) in &other.terms {
                out.add_term(c1.product(*c2), &(a1 * a2));
            }
        }
        Ok(out)
    }

    /// Pushes the representation along a homomorphism of character groups,
    /// e.g. `R(X̄4) = aT + bN` to `aT + bN1` on the first factor of a torus.
    pub fn pullback(&self, map: &CharMap) -> Result<HMRep> {
        map.check_source(&self.group)?;
        Ok(HMRep::from_terms(
            map.target.clone(),
            self.terms.iter().map(|(c, a)| (map.apply(*c), a.clone())),
        ))
    }

    /// Sums the coefficients of characters with the same image under a
    /// surjection of character groups.
    pub fn collapse(&self, map: &CharMap) -> Result<HMRep> {
        self.pullback(map)
    }

    /// The evaluation map `e : R(Γ)[q] -> Z[q]`.
    pub fn e_map(&self, table: &EvalTable) -> Result<IntPoly> {
        self.group.ensure_same(&table.group)?;
        Ok(self
            .terms
            .iter()
            .fold(IntPoly::zero(), |acc, (c, a)| acc + a * table.value(*c)))
    }

    /// Pushes a representation over `Γ1 x Γ2` down to `Γ1` by evaluating the
    /// `Γ2` part with `fiber`. The first `target.rank()` bits of each
    /// character belong to `Γ1`, the rest to `Γ2`.
    pub fn partial_push(&self, target: &MonodromyGroup, fiber: &EvalTable) -> Result<HMRep> {
        let k1 = target.rank();
        if self.group.rank() != k1 + fiber.group.rank() {
            return Err(Error::GroupMismatch {
                left: self.group.describe(),
                right: format!("{} x {}", target.describe(), fiber.group.describe()),
            });
        }
        let low = (1u32 << k1) - 1;
        Ok(HMRep::from_terms(
            target.clone(),
            self.terms.iter().map(|(c, a)| {
                let head = Character(c.0 & low);
                let tail = Character(c.0 >> k1);
                (head, a * fiber.value(tail))
            }),
        ))
    }
}

impl fmt::Display for HMRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, p)| format!("({p}){}", self.group.character_name(*c)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HMRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HMRep({self})")
    }
}

/// A homomorphism between character groups, given by the image of each
/// source generator character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMap {
    source_rank: usize,
    target: MonodromyGroup,
    images: Vec<Character>,
}

impl CharMap {
    pub fn new(target: MonodromyGroup, images: Vec<Character>) -> Self {
        assert!(images.iter().all(|c| target.contains(*c)));
        CharMap {
            source_rank: images.len(),
            target,
            images,
        }
    }

    pub fn identity(group: &MonodromyGroup) -> Self {
        let images = (0..group.rank())
            .map(|j| group.generator_character(j))
            .collect();
        CharMap::new(group.clone(), images)
    }

    pub fn target(&self) -> &MonodromyGroup {
        &self.target
    }

    pub fn apply(&self, c: Character) -> Character {
        self.images
            .iter()
            .enumerate()
            .filter(|(j, _)| c.bit(*j))
            .fold(Character::TRIVIAL, |acc, (_, img)| acc.product(*img))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CharMap) -> Result<CharMap> {
        next.check_source(&self.target)?;
        Ok(CharMap::new(
            next.target.clone(),
            self.images.iter().map(|c| next.apply(*c)).collect(),
        ))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for c in 0..(1u32 << self.source_rank) {
            seen[self.apply(Character(c)).0 as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }

    fn check_source(&self, group: &MonodromyGroup) -> Result<()> {
        if group.rank() == self.source_rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.source_rank,
                found: group.rank(),
            })
        }
    }
}

/// Per-character E-polynomials `s_i(q)` for a fixed base and monodromy group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalTable {
    group: MonodromyGroup,
    values: Vec<IntPoly>,
}

impl EvalTable {
    pub fn from_fn(group: MonodromyGroup, mut f: impl FnMut(Character) -> IntPoly) -> Self {
        let values = group.characters().map(&mut f).collect();
        EvalTable { group, values }
    }

    /// Table for a base `C - {ℓ points}` with rational covers: `q - ℓ` on the
    /// trivial character, `-(ℓ - 1)` elsewhere.
    pub fn punctured_line(group: MonodromyGroup, punctures: usize) -> Result<Self> {
        if punctures == 0 {
            return Err(Error::InvalidPunctureCount(punctures));
        }
        let l = punctures as i64;
        Ok(Self::from_fn(group, |c| {
            if c.is_trivial() {
                IntPoly::from_coeffs(&[-l, 1])
            } else {
                IntPoly::constant(1 - l)
            }
        }))
    }

    /// Table for a base `C* x C*`: `(q - 1)^2` on the trivial character,
    /// zero elsewhere.
    pub fn torus(group: MonodromyGroup) -> Self {
        Self::from_fn(group, |c| {
            if c.is_trivial() {
                IntPoly::q_minus_one().pow(2)
            } else {
                IntPoly::zero()
            }
        })
    }

    pub fn group(&self) -> &MonodromyGroup {
        &self.group
    }

    pub fn value(&self, c: Character) -> &IntPoly {
        &self.values[c.0 as usize]
    }
}
