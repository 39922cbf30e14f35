//! Rules turning fibrations into E-polynomials, and the evaluation table for
//! the two-dimensional base `B' = {(λ, μ) : λ, μ, λμ ≠ ±1} / Z2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::repring::{CharMap, Character, EvalTable, HMRep, MonodromyGroup};

/// Fibration over `C` minus `ℓ` points with rational cover:
/// `(q - 1) e(F)^inv - (ℓ - 1) e(F)`.
pub fn e_punctured_line(r: &HMRep, punctures: usize) -> Result<IntPoly> {
    if punctures == 0 {
        return Err(Error::InvalidPunctureCount(punctures));
    }
    let l = IntPoly::constant(punctures as i64 - 1);
    Ok(IntPoly::q_minus_one() * r.invariant_part() - l * r.fiber_total())
}

/// Fibration over `C* x C*` with finite monodromy: `(q - 1)^2 e(F)^inv`.
pub fn e_torus(r: &HMRep) -> IntPoly {
    IntPoly::q_minus_one().pow(2) * r.invariant_part()
}

/// `e((X x Y)/Z2)` from the invariant and anti-invariant parts.
pub fn e_z2_product(xp: &IntPoly, xm: &IntPoly, yp: &IntPoly, ym: &IntPoly) -> IntPoly {
    xp * yp + xm * ym
}

/// `e((Z x PGL(2,C)/D)/Z2) = (q^2 - q) e(Z/Z2) + q e(Z)`, using
/// `e(PGL(2,C)/D)^+ = q^2` and `e(PGL(2,C)/D)^- = q`.
pub fn e_pgl_d_quotient(e_quot: &IntPoly, e_tot: &IntPoly) -> IntPoly {
    let e_minus = e_tot - e_quot;
    e_z2_product(&IntPoly::monomial(1, 2), &IntPoly::q(), e_quot, &e_minus)
}

/// One tensor slot of a character of `B'`: a character of the monodromy
/// of `C - {±2}` pulled back along `λ`, `μ` or `λμ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    T,
    S2,
    SMinus2,
    S0,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::T, Slot::S2, Slot::SMinus2, Slot::S0];

    /// (loop around 2, loop around -2)
    fn bits(self) -> u32 {
        match self {
            Slot::T => 0b00,
            Slot::S2 => 0b01,
            Slot::SMinus2 => 0b10,
            Slot::S0 => 0b11,
        }
    }

    fn from_bits(b: u32) -> Slot {
        match b & 0b11 {
            0b00 => Slot::T,
            0b01 => Slot::S2,
            0b10 => Slot::SMinus2,
            _ => Slot::S0,
        }
    }

    pub fn product(self, other: Slot) -> Slot {
        Slot::from_bits(self.bits() ^ other.bits())
    }

    fn is_signed(self) -> bool {
        matches!(self, Slot::S2 | Slot::SMinus2)
    }

    fn name(self) -> &'static str {
        match self {
            Slot::T => "T",
            Slot::S2 => "S2",
            Slot::SMinus2 => "S-2",
            Slot::S0 => "S0",
        }
    }
}

const SLOT_NAMES: [&str; 3] = ["λ", "μ", "λμ"];

/// A character of the monodromy of `B'`, as a triple of slot characters
/// indexed by `(λ, μ, λμ)`.
///
/// Because `S0^λ ≅ S0^μ ≅ S0^λμ` as local systems, the 64 raw triples fall
/// into 16 classes. A class is determined by which slots carry `S±2` (the
/// mask) and by the parity of the number of `-2` loops, so each class has a
/// canonical representative: no `S0` unless the mask is empty, `S2` in every
/// masked slot, with the last masked slot flipped to `S-2` when the parity
/// is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BPrimeChar {
    pub slots: [Slot; 3],
}

impl BPrimeChar {
    pub const TRIVIAL: BPrimeChar = BPrimeChar {
        slots: [Slot::T; 3],
    };

    pub fn new(lambda: Slot, mu: Slot, lambda_mu: Slot) -> Self {
        BPrimeChar {
            slots: [lambda, mu, lambda_mu],
        }
    }

    pub fn product(self, other: BPrimeChar) -> BPrimeChar {
        BPrimeChar {
            slots: [0, 1, 2].map(|i| self.slots[i].product(other.slots[i])),
        }
    }

    fn mask(self) -> u32 {
        (0..3).fold(0, |m, i| m | u32::from(self.slots[i].is_signed()) << i)
    }

    fn parity(self) -> u32 {
        self.slots.iter().map(|s| s.bits() >> 1).sum::<u32>() & 1
    }

    /// The canonical representative of this character's class.
    pub fn normalize(self) -> BPrimeChar {
        Self::from_class(self.mask(), self.parity())
    }

    fn from_class(mask: u32, parity: u32) -> BPrimeChar {
        if mask == 0 {
            let first = if parity == 1 { Slot::S0 } else { Slot::T };
            return BPrimeChar::new(first, Slot::T, Slot::T);
        }
        let mut slots = [0, 1, 2].map(|i| {
            if mask >> i & 1 == 1 {
                Slot::S2
            } else {
                Slot::T
            }
        });
        if parity == 1 {
            let last = (0..3).rev().find(|i| mask >> i & 1 == 1).unwrap();
            slots[last] = Slot::SMinus2;
        }
        BPrimeChar { slots }
    }

    pub fn is_normal(self) -> bool {
        self.normalize() == self
    }

    /// Index of the class in the order-16 quotient: bits 0..3 hold the mask,
    /// bit 3 the parity.
    pub fn class_character(self) -> Character {
        Character(self.mask() | self.parity() << 3)
    }

    pub fn from_class_character(c: Character) -> BPrimeChar {
        Self::from_class(c.0 & 0b111, c.0 >> 3 & 1)
    }

    /// The character of the raw rank-6 group: two bits per slot.
    pub fn raw_character(self) -> Character {
        Character((0..3).fold(0, |acc, i| acc | self.slots[i].bits() << (2 * i)))
    }

    pub fn from_raw_character(c: Character) -> BPrimeChar {
        BPrimeChar {
            slots: [0, 1, 2].map(|i| Slot::from_bits(c.0 >> (2 * i))),
        }
    }

    /// All 64 raw triples.
    pub fn all_raw() -> impl Iterator<Item = BPrimeChar> {
        (0..64).map(|i| Self::from_raw_character(Character(i)))
    }

    fn signed_count(self) -> usize {
        self.slots.iter().filter(|s| s.is_signed()).count()
    }
}

impl fmt::Display for BPrimeChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .zip(SLOT_NAMES)
            .filter(|(s, _)| **s != Slot::T)
            .map(|(s, n)| format!("{}^{n}", s.name()))
            .collect();
        if parts.is_empty() {
            f.write_str("T")
        } else {
            f.write_str(&parts.join("⊗"))
        }
    }
}

/// The raw character group `(Z2 x Z2)^3` of the triple pullback.
pub fn bprime_raw_group() -> MonodromyGroup {
    let gens: Vec<String> = SLOT_NAMES
        .iter()
        .flat_map(|n| [format!("γ2^{n}"), format!("γ-2^{n}")])
        .collect();
    let names: Vec<String> = (0..64)
        .map(|i| BPrimeChar::from_raw_character(Character(i)).to_string())
        .collect();
    MonodromyGroup::new(gens).with_character_names(names)
}

/// The order-16 quotient by the identifications of the `S0` slots.
pub fn bprime_group() -> MonodromyGroup {
    let names: Vec<String> = (0..16)
        .map(|i| BPrimeChar::from_class_character(Character(i)).to_string())
        .collect();
    MonodromyGroup::new(["mask λ", "mask μ", "mask λμ", "parity"]).with_character_names(names)
}

/// Pulls back a representation over `C - {±2}` along one slot of `B'`,
/// optionally exchanging the roles of `2` and `-2` (the third slot sees the
/// fibration twisted by `x ↦ -x`).
pub fn slot_pullback(slot: usize, swap_signs: bool) -> CharMap {
    assert!(slot < 3);
    let raw = bprime_raw_group();
    let (s2, sm2) = (Character(0b01 << (2 * slot)), Character(0b10 << (2 * slot)));
    let images = if swap_signs {
        vec![sm2, s2]
    } else {
        vec![s2, sm2]
    };
    CharMap::new(raw, images)
}

/// The quotient map from the raw group onto the order-16 group.
pub fn bprime_quotient() -> CharMap {
    let images = (0..6)
        .map(|j| BPrimeChar::from_raw_character(Character(1 << j)).class_character())
        .collect();
    CharMap::new(bprime_group(), images)
}

/// Rule assigning E-polynomials to characters with `S±2` in all three slots.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TripleRule {
    /// Even number of `S-2` factors gives `q^2 - 6q + 9`, odd gives `-2q + 6`.
    /// The only rule consistent with the published `e(Z̄')`.
    #[default]
    SMinus2Parity,
    /// Even number of `S2` factors gives `q^2 - 6q + 9`.
    S2Parity,
    /// `S2` in the `λ` slot gives `q^2 - 6q + 9`, `S-2` gives `-2q + 6`.
    /// Not a class function on the quotient; only usable on raw triples.
    LambdaSlot,
}

impl TripleRule {
    pub const ALL: [TripleRule; 3] = [
        TripleRule::SMinus2Parity,
        TripleRule::S2Parity,
        TripleRule::LambdaSlot,
    ];

    fn triple_value(self, c: BPrimeChar) -> IntPoly {
        let minus = c.slots.iter().filter(|s| **s == Slot::SMinus2).count();
        let like_trivial = match self {
            TripleRule::SMinus2Parity => minus % 2 == 0,
            TripleRule::S2Parity => (3 - minus) % 2 == 0,
            TripleRule::LambdaSlot => c.slots[0] == Slot::S2,
        };
        if like_trivial {
            e_trivial()
        } else {
            e_s0()
        }
    }
}

fn e_trivial() -> IntPoly {
    IntPoly::from_coeffs(&[9, -6, 1])
}

fn e_s0() -> IntPoly {
    IntPoly::from_coeffs(&[6, -2])
}

fn e_signed() -> IntPoly {
    IntPoly::from_coeffs(&[5, -1])
}

/// E-polynomial of a single character of `B'`. Characters with `S±2` in all
/// three slots are looked up on the triple as given (the raw labels), every
/// other character by its class.
pub fn bprime_value(c: BPrimeChar, rule: TripleRule) -> IntPoly {
    if c.signed_count() == 3 {
        return rule.triple_value(c);
    }
    let n = c.normalize();
    match n.signed_count() {
        0 if n == BPrimeChar::TRIVIAL => e_trivial(),
        0 => e_s0(),
        _ => e_signed(),
    }
}

/// Evaluation table over the order-16 quotient.
pub fn bprime_table() -> EvalTable {
    EvalTable::from_fn(bprime_group(), |c| {
        bprime_value(
            BPrimeChar::from_class_character(c),
            TripleRule::SMinus2Parity,
        )
    })
}

/// Contracts a representation over the raw rank-6 group term by term; this
/// is how the rejected rules are evaluated.
pub fn contract_raw(r: &HMRep, rule: TripleRule) -> Result<IntPoly> {
    let raw = bprime_raw_group();
    if r.group() != &raw {
        return Err(Error::GroupMismatch {
            left: r.group().describe(),
            right: raw.describe(),
        });
    }
    Ok(r.terms().fold(IntPoly::zero(), |acc, (c, a)| {
        acc + a * bprime_value(BPrimeChar::from_raw_character(c), rule)
    }))
}
