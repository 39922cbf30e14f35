//! Point counts over SL(2, F_q) for small odd primes: how many tuples
//! `(A1, B1, ..., Ag, Bg)` have `∏ [Ai, Bi] = c`, by exhaustive convolution.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::Blocks;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

pub const MAX_Q: u64 = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sl2Element {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

pub fn is_supported(q: u64) -> bool {
    (3..=MAX_Q).contains(&q)
        && (2..q)
            .take_while(|k| k * k <= q)
            .all(|k| !q.is_multiple_of(k))
}

fn check_field(q: u64) -> Result<u32> {
    if is_supported(q) {
        Ok(q as u32)
    } else {
        Err(Error::UnsupportedField(q))
    }
}

/// `SL(2, F_q)` with its multiplication table; elements are numbered in
/// lexicographic order of `(a, b, c, d)`.
pub struct Sl2 {
    q: u32,
    elems: Vec<Sl2Element>,
    index: Vec<u32>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

const ABSENT: u32 = u32::MAX;

impl Sl2 {
    pub fn new(q: u64) -> Result<Self> {
        let q = check_field(q)?;
        let elems = sl2_enumerate(q as u64)?;
        let mut index = vec![ABSENT; (q as usize).pow(4)];
        for (i, e) in elems.iter().enumerate() {
            index[Self::key(q, e)] = i as u32;
        }
        let mut g = Sl2 {
            q,
            elems,
            index,
            mul: Vec::new(),
            inv: Vec::new(),
        };
        let n = g.order();
        g.mul = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let g = &g;
                (0..n).map(move |j| g.lookup(g.product(&g.elems[i], &g.elems[j])) as u16)
            })
            .collect();
        g.inv = g
            .elems
            .iter()
            .map(|e| {
                g.lookup(Sl2Element {
                    a: e.d,
                    b: (q - e.b) % q,
                    c: (q - e.c) % q,
                    d: e.a,
                }) as u16
            })
            .collect();
        Ok(g)
    }

    fn key(q: u32, e: &Sl2Element) -> usize {
        (((e.a * q + e.b) * q + e.c) * q + e.d) as usize
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Sl2Element] {
        &self.elems
    }

    fn product(&self, x: &Sl2Element, y: &Sl2Element) -> Sl2Element {
        let q = self.q;
        Sl2Element {
            a: (x.a * y.a + x.b * y.c) % q,
            b: (x.a * y.b + x.b * y.d) % q,
            c: (x.c * y.a + x.d * y.c) % q,
            d: (x.c * y.b + x.d * y.d) % q,
        }
    }

    fn lookup(&self, e: Sl2Element) -> usize {
        let i = self.index[Self::key(self.q, &e)];
        debug_assert_ne!(i, ABSENT);
        i as usize
    }

    /// Index of the matrix `(a b; c d)`, entries reduced mod `q`.
    pub fn element(&self, a: i64, b: i64, c: i64, d: i64) -> Option<usize> {
        let q = self.q as i64;
        let r = |x: i64| x.rem_euclid(q) as u32;
        let i = *self.index.get(Self::key(
            self.q,
            &Sl2Element {
                a: r(a),
                b: r(b),
                c: r(c),
                d: r(d),
            },
        ))?;
        (i != ABSENT).then_some(i as usize)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order() + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn trace(&self, i: usize) -> u32 {
        let e = &self.elems[i];
        (e.a + e.d) % self.q
    }

    pub fn identity(&self) -> usize {
        self.element(1, 0, 0, 1).expect("identity")
    }

    pub fn minus_identity(&self) -> usize {
        self.element(-1, 0, 0, -1).expect("-Id")
    }

    pub fn jordan_plus(&self) -> usize {
        self.element(1, 1, 0, 1).expect("J+")
    }

    pub fn jordan_minus(&self) -> usize {
        self.element(-1, 1, 0, -1).expect("J-")
    }

    /// `diag(λ, λ⁻¹)`.
    pub fn diagonal(&self, lambda: u32) -> Option<usize> {
        let q = self.q as u64;
        let l = lambda as u64 % q;
        if l == 0 {
            return None;
        }
        let inv = (1..q).find(|k| k * l % q == 1)?;
        self.element(l as i64, 0, 0, inv as i64)
    }
}

/// All of `SL(2, F_q)`, each element once.
pub fn sl2_enumerate(q: u64) -> Result<Vec<Sl2Element>> {
    let q = check_field(q)?;
    let mut out = Vec::with_capacity((q * q * q - q) as usize);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if (a * d + q * q - b * c % q) % q == 1 % q {
                        out.push(Sl2Element { a, b, c, d });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// An integer-valued function on the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub q: u64,
    pub values: Vec<u128>,
    pub class_constant: bool,
}

impl ClassFunction {
    pub fn at(&self, i: usize) -> u128 {
        self.values[i]
    }

    pub fn total(&self) -> u128 {
        self.values.iter().sum()
    }

    /// Invariance under conjugation by `(1 1; 0 1)` and `(1 0; 1 1)`, which
    /// generate the group.
    pub fn is_conjugation_invariant(&self, g: &Sl2) -> bool {
        let gens = [
            g.jordan_plus(),
            g.element(1, 0, 1, 1).expect("lower unipotent"),
        ];
        gens.iter().all(|&h| {
            let hi = g.inv(h);
            (0..g.order()).all(|x| self.values[x] == self.values[g.mul(g.mul(h, x), hi)])
        })
    }
}

/// `N1(c) = #{(A, B) : [A, B] = c}`.
pub fn commutator_distribution(g: &Sl2) -> ClassFunction {
    let n = g.order();
    let values = (0..n)
        .into_par_iter()
        .fold(
            || vec![0u128; n],
            |mut acc, a| {
                let ai = g.inv(a);
                for b in 0..n {
                    let c = g.mul(g.mul(a, b), g.mul(ai, g.inv(b)));
                    acc[c] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u128; n],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        );
    let mut f = ClassFunction {
        q: g.q(),
        values,
        class_constant: false,
    };
    f.class_constant = f.is_conjugation_invariant(g);
    f
}

fn convolve(g: &Sl2, x: &ClassFunction, y: &ClassFunction) -> ClassFunction {
    let n = g.order();
    let values = (0..n)
        .into_par_iter()
        .map(|c| {
            (0..n)
                .map(|s| x.values[s] * y.values[g.mul(g.inv(s), c)])
                .sum()
        })
        .collect();
    ClassFunction {
        q: g.q(),
        values,
        class_constant: x.class_constant && y.class_constant,
    }
}

/// `N_g(c) = #{∏_{i ≤ g} [Ai, Bi] = c}`.
pub fn genus_convolve(g: &Sl2, n1: &ClassFunction, genus: u32) -> Result<ClassFunction> {
    if !(1..=3).contains(&genus) {
        return Err(Error::UnsupportedGenus(genus));
    }
    let mut acc = n1.clone();
    for _ in 1..genus {
        acc = convolve(g, &acc, n1);
    }
    Ok(acc)
}

/// Where a trace triple `(t1, t2, t3)` of three commutators lies relative to
/// the planes `ti = ±2` and the quadric `t1² + t2² + t3² + t1 t2 t3 = 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceStratum {
    Points,
    Lines,
    Planes,
    Quadric,
    Generic,
}

impl TraceStratum {
    pub const ALL: [TraceStratum; 5] = [
        TraceStratum::Points,
        TraceStratum::Lines,
        TraceStratum::Planes,
        TraceStratum::Quadric,
        TraceStratum::Generic,
    ];

    pub fn classify(q: u32, t: [u32; 3]) -> TraceStratum {
        let special = t.iter().filter(|&&x| x == 2 % q || x == q - 2).count();
        let (a, b, c) = (t[0] as u64, t[1] as u64, t[2] as u64);
        let q64 = q as u64;
        let quadric = (a * a + b * b + c * c + a * b % q64 * c) % q64 == 4 % q64;
        match (special, quadric) {
            (3, _) => TraceStratum::Points,
            (2, _) | (1, true) => TraceStratum::Lines,
            (1, false) => TraceStratum::Planes,
            (_, true) => TraceStratum::Quadric,
            _ => TraceStratum::Generic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TraceStratum::Points => "points",
            TraceStratum::Lines => "lines",
            TraceStratum::Planes => "planes",
            TraceStratum::Quadric => "quadric",
            TraceStratum::Generic => "generic",
        }
    }
}

impl fmt::Display for TraceStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown trace stratum {0:?}")]
pub struct ParseStratumError(pub String);

impl FromStr for TraceStratum {
    type Err = ParseStratumError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let t = s.trim();
        TraceStratum::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| ParseStratumError(s.to_string()))
    }
}

/// Genus-3 tuples with product `center` whose commutator traces lie in a
/// stratum, for every stratum at once.
pub fn trace_stratum_counts(g: &Sl2, n1: &ClassFunction, center: usize) -> [u128; 5] {
    let n = g.order();
    let q = g.q;
    (0..n)
        .into_par_iter()
        .fold(
            || [0u128; 5],
            |mut acc, c1| {
                if n1.values[c1] == 0 {
                    return acc;
                }
                for c2 in 0..n {
                    let c3 = g.mul(g.inv(g.mul(c1, c2)), center);
                    let w = n1.values[c1] * n1.values[c2] * n1.values[c3];
                    if w != 0 {
                        let s = TraceStratum::classify(q, [g.trace(c1), g.trace(c2), g.trace(c3)]);
                        acc[s as usize] += w;
                    }
                }
                acc
            },
        )
        .reduce(
            || [0u128; 5],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        )
}

pub fn trace_stratum_count(
    g: &Sl2,
    n1: &ClassFunction,
    center: usize,
    stratum: TraceStratum,
) -> u128 {
    trace_stratum_counts(g, n1, center)[stratum as usize]
}

/// Parses a comma- or space-separated list of supported primes.
pub fn parse_q_list(s: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for tok in s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let q: u64 = tok.parse().map_err(|_| Error::UnsupportedField(0))?;
        check_field(q)?;
        if !out.contains(&q) {
            out.push(q);
        }
    }
    if out.is_empty() {
        return Err(Error::UnsupportedField(0));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// Outside the congruence class where agreement is expected; shown but
    /// not asserted.
    Recorded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleRow {
    pub name: String,
    pub q: u64,
    #[serde(with = "decimal")]
    pub polynomial: BigInt,
    #[serde(with = "decimal")]
    pub count: BigInt,
    pub status: RowStatus,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for OracleRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::Recorded => "recorded",
        };
        write!(
            f,
            "{:<14} q={:<3} e={:<22} count={:<22} {tag}",
            self.name, self.q, self.polynomial, self.count
        )
    }
}

/// A quadratic residue other than `±1`, so that `diag(λ, λ⁻¹)` is a
/// commutator class whose counts follow the `λ`-fiber polynomials.
pub fn fiber_lambda(q: u64) -> Option<u32> {
    (2..q - 1)
        .map(|x| x * x % q)
        .filter(|&l| l != 1 && l != q - 1)
        .min()
        .map(|l| l as u32)
}

struct Polys {
    blocks: Blocks,
    e_v: IntPoly,
    e_w: IntPoly,
    e_w1: IntPoly,
    e_w45: IntPoly,
    e_y4: IntPoly,
}

impl Polys {
    fn load() -> Result<Self> {
        let blocks = Blocks::load()?;
        let t = crate::twisted::TwistedPipeline::compute()?;
        let u = crate::untwisted::UntwistedPipeline::compute()?;
        Ok(Polys {
            e_v: u.e_v,
            e_w: t.e_w,
            e_w1: t.points.total,
            e_w45: &t.quadric_one.w4 + &t.quadric_two.w5,
            e_y4: crate::genus2::compute_e_y4()?,
            blocks,
        })
    }
}

/// Counts at one `q` against the polynomials, asserted where agreement is
/// expected and recorded otherwise.
pub fn oracle_rows(q: u64) -> Result<Vec<OracleRow>> {
    let polys = Polys::load()?;
    rows_with(q, &polys)
}

fn rows_with(q: u64, p: &Polys) -> Result<Vec<OracleRow>> {
    let g = Sl2::new(q)?;
    let n1 = commutator_distribution(&g);
    let n2 = genus_convolve(&g, &n1, 2)?;
    let n3 = convolve(&g, &n2, &n1);
    let good = q % 4 == 1;
    let b = &p.blocks;
    let mut rows = Vec::new();
    let mut push = |name: &str, poly: &IntPoly, count: u128, asserted: bool| {
        let polynomial = poly.eval(q as i64);
        let count = BigInt::from(count);
        let status = match (asserted, polynomial == count) {
            (false, _) => RowStatus::Recorded,
            (true, true) => RowStatus::Match,
            (true, false) => RowStatus::Mismatch,
        };
        rows.push(OracleRow {
            name: name.to_string(),
            q,
            polynomial,
            count,
            status,
        });
    };
    let (id, mid) = (g.identity(), g.minus_identity());
    push("e_X0", &b.x0, n1.at(id), true);
    push("e_Y0", &b.y0, n2.at(id), true);
    push("e_V", &p.e_v, n3.at(id), true);
    push("e_X1", &b.x1, n1.at(mid), good);
    push("e_Y1", &b.y1, n2.at(mid), good);
    push("e_W", &p.e_w, n3.at(mid), good);
    let (jp, jm) = (g.jordan_plus(), g.jordan_minus());
    push("e_X2bar", &b.x2b, n1.at(jp), good);
    push("e_X3bar", &b.x3b, n1.at(jm), good);
    push("e_Y2bar", &b.y2b, n2.at(jp), good);
    push("e_Y3bar", &b.y3b, n2.at(jm), good);
    if let Some(l) = fiber_lambda(q) {
        let xi = g.diagonal(l).expect("λ is a unit");
        push(&format!("e_X4bar[λ={l}]"), &b.x4lb, n1.at(xi), good);
        push(&format!("e_Y4bar[λ={l}]"), &b.y4lb, n2.at(xi), good);
    }
    let y4: u128 = (0..g.order())
        .filter(|&c| {
            let t = g.trace(c);
            t != 2 && t != g.q - 2
        })
        .map(|c| n2.at(c))
        .sum();
    push("e_Y4", &p.e_y4, y4, good);
    let strata = trace_stratum_counts(&g, &n1, mid);
    push("e_W1", &p.e_w1, strata[TraceStratum::Points as usize], good);
    push(
        "e_W4+e_W5",
        &p.e_w45,
        strata[TraceStratum::Quadric as usize],
        good,
    );
    Ok(rows)
}

/// The full table; rows may mismatch.
pub fn oracle_table(qs: &[u64]) -> Result<Vec<OracleRow>> {
    let polys = Polys::load()?;
    let mut out = Vec::new();
    for &q in qs {
        out.extend(rows_with(q, &polys)?);
    }
    Ok(out)
}

/// The table, failing with every asserted row that disagrees.
pub fn verify_table(qs: &[u64]) -> Result<Vec<OracleRow>> {
    let rows = oracle_table(qs)?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.status == RowStatus::Mismatch)
        .map(|r| r.to_string())
        .collect();
    if bad.is_empty() {
        Ok(rows)
    } else {
        Err(Error::VerificationFailed(bad))
    }
}
