//! Building blocks: E-polynomials of conjugacy classes, of the genus-1 and
//! genus-2 fibers, and of the genus-2 strata imported as constants.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::expected::Value;
use crate::fibcalc::{e_pgl_d_quotient, e_punctured_line};
use crate::poly::{poly, IntPoly};
use crate::repring::{CharMap, HMRep, MonodromyGroup};

#[derive(Clone, Debug)]
pub struct BlockEntry {
    pub name: &'static str,
    pub value: Value,
    pub citation: &'static str,
}

fn p(name: &'static str, value: &str, citation: &'static str) -> BlockEntry {
    BlockEntry {
        name,
        value: Value::Poly(poly(value)),
        citation,
    }
}

fn r(name: &'static str, rep: HMRep, citation: &'static str) -> BlockEntry {
    BlockEntry {
        name,
        value: Value::Rep(rep),
        citation,
    }
}

fn build() -> Vec<BlockEntry> {
    vec![
        p("e_SL2", "q^3 - q", "SL(2,C)"),
        p("e_PGL2", "q^3 - q", "PGL(2,C)"),
        p(
            "e_PGL2_over_U",
            "q^2 - 1",
            "PGL(2,C)/U, U unipotent upper triangular",
        ),
        p(
            "e_PGL2_over_D_plus",
            "q^2",
            "Z2-invariant part of PGL(2,C)/D",
        ),
        p(
            "e_PGL2_over_D_minus",
            "q",
            "Z2-anti-invariant part of PGL(2,C)/D",
        ),
        p("e_W0", "1", "conjugacy class of Id"),
        p("e_W1", "1", "conjugacy class of -Id"),
        p("e_W2", "q^2 - 1", "conjugacy class of J+"),
        p("e_W3", "q^2 - 1", "conjugacy class of J-"),
        p("e_W4λ", "q^2 + q", "conjugacy class of diag(λ, 1/λ)"),
        p("e_W4", "q^3 - 2q^2 - q", "matrices with trace != ±2"),
        p("e_X0", "q^4 + 4q^3 - q^2 - 4q", "pairs with [A,B] = Id"),
        p("e_X1", "q^3 - q", "pairs with [A,B] = -Id"),
        p("e_X2bar", "q^3 - 2q^2 - 3q", "pairs with [A,B] = J+"),
        p("e_X3bar", "q^3 + 3q^2", "pairs with [A,B] = J-"),
        p(
            "e_X4λbar",
            "q^3 + 3q^2 - 3q - 1",
            "pairs with [A,B] = diag(λ, 1/λ)",
        ),
        p(
            "e_X4bar",
            "q^4 - 3q^3 - 6q^2 + 5q + 3",
            "genus-1 family over C - {0, ±1}",
        ),
        p(
            "e_X4barZ2",
            "q^4 - 2q^3 - 3q^2 + 3q + 1",
            "genus-1 family over C - {±2}",
        ),
        p(
            "e_X4",
            "q^6 - 2q^5 - 4q^4 + 3q^2 + 2q",
            "pairs with [A,B] of trace != ±2",
        ),
        r(
            "R_X4bar",
            HMRep::from_named(
                MonodromyGroup::punctured_line(),
                &[("T", poly("q^3 - 1")), ("N", poly("3q^2 - 3q"))],
            ),
            "monodromy of the genus-1 family over C - {0, ±1}",
        ),
        r(
            "R_X4barZ2",
            HMRep::from_named(
                MonodromyGroup::two_punctures(),
                &[
                    ("T", poly("q^3")),
                    ("S2", poly("-3q")),
                    ("S-2", poly("3q^2")),
                    ("S0", poly("-1")),
                ],
            ),
            "monodromy of the genus-1 family over C - {±2}",
        ),
        p(
            "e_Y0",
            "q^9 + q^8 + 12q^7 + 2q^6 - 3q^4 - 12q^3 - q",
            "genus 2, product = Id",
        ),
        p(
            "e_Y1",
            "q^9 - 3q^7 - 30q^6 + 30q^4 + 3q^3 - q",
            "genus 2, product = -Id",
        ),
        p(
            "e_Y2bar",
            "q^9 - 3q^7 - 4q^6 - 39q^5 - 4q^4 - 15q^3",
            "genus 2, product = J+",
        ),
        p(
            "e_Y3bar",
            "q^9 - 3q^7 + 15q^6 + 6q^5 + 45q^4",
            "genus 2, product = J-",
        ),
        p(
            "e_Y4λbar",
            "q^9 - 3q^7 + 15q^6 - 39q^5 + 39q^4 - 15q^3 + 3q^2 - 1",
            "genus 2, product = diag(λ, 1/λ)",
        ),
        p(
            "e_g2_W4",
            "q^9 - 2q^8 - 7q^7 - 18q^6 + 24q^5 + 28q^4 - 17q^3 - 8q^2 - q",
            "genus 2, product = -Id, traces t2 = -t3 != ±2",
        ),
        p(
            "e_g2_Y4corr",
            "q^9 - 2q^8 + 2q^7 - 18q^6 + 6q^5 + 28q^4 - 8q^3 - 8q^2 - q",
            "genus 2, product = Id, traces t2 = t3 != ±2 (corrected value)",
        ),
        p(
            "e_g2_Z5_s12",
            "q^8 - 3q^7 - 3q^6 - 35q^5 + 69q^4 - 15q^3 - 11q^2 - 3q",
            "genus 2, product = J-, traces t2 = -t3 != ±2",
        ),
        p(
            "e_g2_Z5_s11",
            "q^8 - 3q^7 - 3q^6 - 35q^5 + 69q^4 - 15q^3 - 11q^2 - 3q",
            "genus 2, product = J+, traces t2 = t3 != ±2 (printed identical to the J- case)",
        ),
        p(
            "e_g2_Z6_s12",
            "q^9 - 5q^8 + 24q^6 + 20q^5 - 60q^4 + 6q^3 + 11q^2 + 3q",
            "genus 2, product = J-, generic traces",
        ),
        p(
            "e_g2_Z6_s11",
            "q^9 - 5q^8 + 15q^6 + 11q^5 - 51q^4 + 15q^3 + 11q^2 + 3q",
            "genus 2, product = J+, generic traces",
        ),
    ]
}

pub fn registry() -> &'static [BlockEntry] {
    static REGISTRY: OnceLock<Vec<BlockEntry>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn block(name: &str) -> Result<&'static BlockEntry> {
    registry()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownBlock(name.to_string()))
}

/// A registered polynomial block.
pub fn poly_block(name: &str) -> Result<IntPoly> {
    match &block(name)?.value {
        Value::Poly(p) => Ok(p.clone()),
        Value::Rep(_) => Err(Error::UnknownBlock(format!("{name} (not a polynomial)"))),
    }
}

/// A registered representation block.
pub fn rep_block(name: &str) -> Result<HMRep> {
    match &block(name)?.value {
        Value::Rep(r) => Ok(r.clone()),
        Value::Poly(_) => Err(Error::UnknownBlock(format!(
            "{name} (not a representation)"
        ))),
    }
}

/// The registry unpacked into typed fields, as consumed by the pipelines.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub pgl: IntPoly,
    pub pgl_u: IntPoly,
    pub x0: IntPoly,
    pub x1: IntPoly,
    pub x2b: IntPoly,
    pub x3b: IntPoly,
    pub x4lb: IntPoly,
    pub x4b: IntPoly,
    pub x4bz2: IntPoly,
    pub r_x4: HMRep,
    pub r_x4_z2: HMRep,
    pub y0: IntPoly,
    pub y1: IntPoly,
    pub y2b: IntPoly,
    pub y3b: IntPoly,
    pub y4lb: IntPoly,
    pub g2_w4: IntPoly,
    pub g2_y4: IntPoly,
    pub g2_z5_s12: IntPoly,
    pub g2_z5_s11: IntPoly,
    pub g2_z6_s12: IntPoly,
    pub g2_z6_s11: IntPoly,
}

impl Blocks {
    pub fn load() -> Result<Blocks> {
        Ok(Blocks {
            pgl: poly_block("e_PGL2")?,
            pgl_u: poly_block("e_PGL2_over_U")?,
            x0: poly_block("e_X0")?,
            x1: poly_block("e_X1")?,
            x2b: poly_block("e_X2bar")?,
            x3b: poly_block("e_X3bar")?,
            x4lb: poly_block("e_X4λbar")?,
            x4b: poly_block("e_X4bar")?,
            x4bz2: poly_block("e_X4barZ2")?,
            r_x4: rep_block("R_X4bar")?,
            r_x4_z2: rep_block("R_X4barZ2")?,
            y0: poly_block("e_Y0")?,
            y1: poly_block("e_Y1")?,
            y2b: poly_block("e_Y2bar")?,
            y3b: poly_block("e_Y3bar")?,
            y4lb: poly_block("e_Y4λbar")?,
            g2_w4: poly_block("e_g2_W4")?,
            g2_y4: poly_block("e_g2_Y4corr")?,
            g2_z5_s12: poly_block("e_g2_Z5_s12")?,
            g2_z5_s11: poly_block("e_g2_Z5_s11")?,
            g2_z6_s12: poly_block("e_g2_Z6_s12")?,
            g2_z6_s11: poly_block("e_g2_Z6_s11")?,
        })
    }
}

/// The map `S2, S-2 ↦ N`, `S0 ↦ T` from the characters over `C - {±2}` to
/// those over `C - {0, ±1}` (pulling back along `λ ↦ λ + 1/λ`).
pub fn two_punctures_to_punctured_line() -> CharMap {
    let target = MonodromyGroup::punctured_line();
    let n = target.character("N").expect("N");
    CharMap::new(target, vec![n, n])
}

fn check(
    name: &'static str,
    expected: &impl fmt::Display,
    computed: &impl fmt::Display,
    ok: bool,
) -> Result<&'static str> {
    if ok {
        Ok(name)
    } else {
        Err(Error::SelfCheckFailed {
            name: name.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
        })
    }
}

/// Internal consistency of the genus-1 blocks; returns the names of the
/// checks that passed.
pub fn blocks_selfcheck() -> Result<Vec<&'static str>> {
    let r_x4 = rep_block("R_X4bar")?;
    let r_x4_z2 = rep_block("R_X4barZ2")?;
    let e_x4bar = poly_block("e_X4bar")?;
    let e_x4bar_z2 = poly_block("e_X4barZ2")?;
    let mut passed = Vec::new();

    let c = e_punctured_line(&r_x4, 3)?;
    passed.push(check(
        "X4bar over three punctures",
        &e_x4bar,
        &c,
        c == e_x4bar,
    )?);

    let c = e_punctured_line(&r_x4_z2, 2)?;
    passed.push(check(
        "X4bar/Z2 over two punctures",
        &e_x4bar_z2,
        &c,
        c == e_x4bar_z2,
    )?);

    let c = r_x4_z2.collapse(&two_punctures_to_punctured_line())?;
    passed.push(check("collapse of R(X4bar/Z2)", &r_x4, &c, c == r_x4)?);

    let e_x4 = poly_block("e_X4")?;
    let c = e_pgl_d_quotient(&e_x4bar_z2, &e_x4bar);
    passed.push(check("X4 from the PGL/D quotient", &e_x4, &c, c == e_x4)?);

    let e_w4 = poly_block("e_W4")?;
    let c = ["e_W0", "e_W1", "e_W2", "e_W3"]
        .iter()
        .try_fold(poly_block("e_SL2")?, |acc, n| {
            Ok::<_, Error>(acc - poly_block(n)?)
        })?;
    passed.push(check(
        "conjugacy classes partition SL2",
        &e_w4,
        &c,
        c == e_w4,
    )?);

    Ok(passed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn lookups() {
        assert_eq!(poly_block("e_X0").unwrap(), poly("q^4 + 4q^3 - q^2 - 4q"));
        assert_eq!(poly_block("e_W0").unwrap(), IntPoly::one());
        assert_eq!(
            poly_block("e_g2_Z6_s11").unwrap(),
            poly("q^9 - 5q^8 + 15q^6 + 11q^5 - 51q^4 + 15q^3 + 11q^2 + 3q")
        );
        assert!(matches!(block("e_nope"), Err(Error::UnknownBlock(_))));
        assert!(poly_block("R_X4bar").is_err());
        assert!(rep_block("e_X0").is_err());
    }

    #[test]
    fn names_unique() {
        let names: HashSet<_> = registry().iter().map(|e| e.name).collect();
        assert_eq!(names.len(), registry().len());
        assert_eq!(registry().len(), 32);
    }

    #[test]
    fn fiber_products() {
        let pu = poly_block("e_PGL2_over_U").unwrap();
        assert_eq!(
            pu * poly_block("e_X2bar").unwrap(),
            poly("q^5 - 2q^4 - 4q^3 + 2q^2 + 3q")
        );
    }

    #[test]
    fn selfcheck_passes() {
        assert_eq!(blocks_selfcheck().unwrap().len(), 5);
    }
}
