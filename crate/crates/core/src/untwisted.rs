//! Genus 3, untwisted: `V = {[A1,B1][A2,B2][A3,B3] = Id}` split as genus 2
//! plus genus 1, the reducible locus, and `e(M)`.

use crate::blocks::Blocks;
use crate::error::{Error, Result};
use crate::expected::{ensure, Value};
use crate::fibcalc::e_z2_product;
use crate::genus2::diagonal_class_e;
use crate::poly::IntPoly;
use crate::repring::HMRep;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reducibles {
    pub r: [IntPoly; 4],
    pub e_v_red: IntPoly,
    pub e_m_red: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UntwistedPipeline {
    pub v: [IntPoly; 5],
    pub r_v4_z2: HMRep,
    pub e_v: IntPoly,
    pub reducibles: Reducibles,
    pub e_v_irr: IntPoly,
    pub e_m_irr: IntPoly,
    pub e_m: IntPoly,
}

fn c(n: i64) -> IntPoly {
    IntPoly::constant(n)
}

fn ensure_poly(name: &str, p: &IntPoly) -> Result<()> {
    ensure(name, &Value::Poly(p.clone()))
}

/// `e(V0)..e(V3)`: the product of the first two commutators is `Id`, `-Id`,
/// `J+` or `J-` up to conjugation.
pub fn v_strata_from(b: &Blocks) -> [IntPoly; 4] {
    [
        &b.y0 * &b.x0,
        &b.y1 * &b.x1,
        &b.pgl_u * &b.y2b * &b.x2b,
        &b.pgl_u * &b.y3b * &b.x3b,
    ]
}

pub fn v_strata() -> Result<Vec<IntPoly>> {
    let v = v_strata_from(&Blocks::load()?);
    for (i, p) in v.iter().enumerate() {
        ensure_poly(&format!("untwisted.e_V{i}"), p)?;
    }
    Ok(v.to_vec())
}

/// `R(V̄4/Z2)` and `e(V4)` from the closed formula, cross-checked against the
/// two-step fibration map.
pub fn e_v4_from(b: &Blocks, r_ybar4_z2: &HMRep) -> Result<(HMRep, IntPoly)> {
    let r = r_ybar4_z2.tensor(&b.r_x4_z2)?;
    let q = IntPoly::q();
    let [a, bb, cc, d] = ["T", "S2", "S-2", "S0"].map(|n| r.coeff_named(n));
    let closed =
        &q * (q.pow(2) - c(2) * &q - c(1)) * &a - &q * (&q + c(1)) * (&bb + &cc) - c(2) * &q * &d;
    let piped = diagonal_class_e(&r)?;
    if piped != closed {
        return Err(Error::CrossCheckFailed {
            name: "untwisted.e_V4".into(),
            first: closed.to_string(),
            second: piped.to_string(),
        });
    }
    Ok((r, closed))
}

pub fn compute_e_v4() -> Result<IntPoly> {
    let b = Blocks::load()?;
    let g2 = crate::genus2::solve_ry4z2()?;
    let (r, e) = e_v4_from(&b, &g2)?;
    ensure("untwisted.R_V4bar_Z2", &r.into())?;
    ensure_poly("untwisted.e_V4", &e)?;
    Ok(e)
}

/// `(+, -)` parts of `e` of the six-fold product of `C*` under simultaneous
/// inversion, `C*` contributing `(q, -1)`.
fn torus6_parts() -> (IntPoly, IntPoly) {
    let (p, m) = (IntPoly::q(), c(-1));
    (0..5).fold((p.clone(), m.clone()), |(xp, xm), _| {
        (
            e_z2_product(&xp, &xm, &p, &m),
            e_z2_product(&xp, &xm, &m, &p),
        )
    })
}

pub fn reducible_locus() -> Result<Reducibles> {
    let q = IntPoly::q();
    let pgl = IntPoly::q_cubed_minus_q();
    let (plus, minus) = torus6_parts();
    // diagonal representations away from the 64 with all eigenvalues ±1
    let a_plus = &plus - c(64);
    let r1 = e_z2_product(&a_plus, &minus, &q.pow(2), &q);
    let r2 = ((q.clone() - c(1)).pow(6) - c(64)) * (q.pow(5) - &q) * &pgl;
    let r2 = r2.div_exact(&IntPoly::q_squared_minus_q())?;
    let r3 = c(64);
    let p5 = (q.pow(6) - c(1)).div_exact(&IntPoly::q_minus_one())?;
    let r4 = c(64) * p5 * IntPoly::q_squared_minus_one();
    let e_v_red = &r1 + &r2 + &r3 + &r4;
    Ok(Reducibles {
        r: [r1, r2, r3, r4],
        e_v_red,
        e_m_red: plus,
    })
}

impl UntwistedPipeline {
    pub fn compute() -> Result<Self> {
        let b = Blocks::load()?;
        let (e_w, _) = crate::twisted::twisted_total()?;
        let g2 = crate::genus2::compute(&e_w)?;
        Self::compute_with(&b, &g2.r_ybar4_z2)
    }

    pub fn compute_with(b: &Blocks, r_ybar4_z2: &HMRep) -> Result<Self> {
        let [v0, v1, v2, v3] = v_strata_from(b);
        let (r_v4_z2, v4) = e_v4_from(b, r_ybar4_z2)?;
        let v = [v0, v1, v2, v3, v4];
        let e_v = IntPoly::sum(v.iter());
        let reducibles = reducible_locus()?;
        let e_v_irr = &e_v - &reducibles.e_v_red;
        let e_m_irr = e_v_irr.div_exact(&b.pgl)?;
        let e_m = &reducibles.e_m_red + &e_m_irr;
        Ok(UntwistedPipeline {
            v,
            r_v4_z2,
            e_v,
            reducibles,
            e_v_irr,
            e_m_irr,
            e_m,
        })
    }

    pub fn entries(&self) -> Vec<(&'static str, Value)> {
        const V: [&str; 5] = [
            "untwisted.e_V0",
            "untwisted.e_V1",
            "untwisted.e_V2",
            "untwisted.e_V3",
            "untwisted.e_V4",
        ];
        const R: [&str; 4] = [
            "untwisted.e_R1",
            "untwisted.e_R2",
            "untwisted.e_R3",
            "untwisted.e_R4",
        ];
        let mut out: Vec<(&'static str, Value)> =
            vec![("untwisted.R_V4bar_Z2", self.r_v4_z2.clone().into())];
        out.extend(V.iter().zip(&self.v).map(|(n, p)| (*n, p.clone().into())));
        out.push(("untwisted.e_V", self.e_v.clone().into()));
        out.extend(
            R.iter()
                .zip(&self.reducibles.r)
                .map(|(n, p)| (*n, p.clone().into())),
        );
        out.extend([
            ("untwisted.e_V_red", self.reducibles.e_v_red.clone().into()),
            ("untwisted.e_M_red", self.reducibles.e_m_red.clone().into()),
            ("untwisted.e_V_irr", self.e_v_irr.clone().into()),
            ("untwisted.e_M_irr", self.e_m_irr.clone().into()),
            ("untwisted.e_M", self.e_m.clone().into()),
        ]);
        out
    }

    pub fn verify(&self) -> Result<()> {
        self.entries().iter().try_for_each(|(n, v)| ensure(n, v))
    }
}

/// `(e(V), e(M^irr), e(M))`.
pub fn character_variety_total() -> Result<(IntPoly, IntPoly, IntPoly)> {
    let u = UntwistedPipeline::compute()?;
    u.verify()?;
    Ok((u.e_v, u.e_m_irr, u.e_m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn strata_match() {
        v_strata().unwrap();
        compute_e_v4().unwrap();
    }

    #[test]
    fn torus_parts() {
        let (p, m) = torus6_parts();
        assert_eq!(p, poly("q^6 + 15q^4 + 15q^2 + 1"));
        assert_eq!(m, poly("-6q^5 - 20q^3 - 6q"));
    }

    #[test]
    fn reducibles() {
        let r = reducible_locus().unwrap();
        assert_eq!(r.r[0], poly("q^8 + 9q^6 - 5q^4 - 69q^2"));
        assert_eq!(r.r[3], poly("64q^7 + 64q^6 - 64q - 64"));
        assert_eq!(
            r.e_v_red,
            poly("q^12 - 5q^11 + 9q^10 - 5q^9 - 5q^8 + 78q^7 - 5q^6 - 58q^5 - 9q^3 - q")
        );
    }

    #[test]
    fn character_variety() {
        let (e_v, _, e_m) = character_variety_total().unwrap();
        assert_eq!(e_m, poly("q^12 - 4q^10 + 74q^8 + 375q^6 + 16q^4 + q^2 + 1"));
        assert_eq!(e_m.eval(0), 1.into());
        assert!(e_m.is_monic());
        assert_eq!(e_v.eval(5), 28861413120i64.into());
    }
}
