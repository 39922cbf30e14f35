//! Genus 3, twisted: `W = {[A1,B1][A2,B2][A3,B3] = -Id}` stratified by the
//! traces `(t1, t2, t3)` of the three commutators, and `e(M¹) = e(W)/e(PGL2)`.

use crate::blocks::Blocks;
use crate::error::Result;
use crate::expected::{ensure, Value};
use crate::fibcalc::{
    bprime_quotient, bprime_table, e_pgl_d_quotient, e_punctured_line, e_torus, slot_pullback,
};
use crate::poly::IntPoly;
use crate::repring::{CharMap, HMRep, MonodromyGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Points {
    pub w11: IntPoly,
    pub w12_id: IntPoly,
    pub w12_jordan: IntPoly,
    pub w12: IntPoly,
    pub w13: IntPoly,
    pub w14_id: IntPoly,
    pub w14_jordan: IntPoly,
    pub w14: IntPoly,
    pub total: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lines {
    pub w2x: [IntPoly; 6],
    pub total: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planes {
    pub w31: IntPoly,
    pub w32: IntPoly,
    pub total: IntPoly,
}

/// Traces on the quadric, commutators sharing exactly one eigenvector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricOne {
    pub r_zbar: HMRep,
    pub e_extension: IntPoly,
    pub line_correction: IntPoly,
    pub point_correction: IntPoly,
    pub e_zbar: IntPoly,
    pub w4: IntPoly,
}

/// Traces on the quadric, commutators simultaneously diagonalizable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricTwo {
    pub r_zbar_prime: HMRep,
    pub e_zbar_prime: IntPoly,
    pub w5: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPipeline {
    pub points: Points,
    pub lines: Lines,
    pub planes: Planes,
    pub quadric_one: QuadricOne,
    pub quadric_two: QuadricTwo,
    pub w6: IntPoly,
    pub e_w: IntPoly,
    pub e_m1: IntPoly,
}

fn c(n: i64) -> IntPoly {
    IntPoly::constant(n)
}

pub fn points(b: &Blocks) -> Points {
    let q = IntPoly::q();
    let q2 = &q - c(2);
    let (x0, x1, x2, x3, pu) = (&b.x0, &b.x1, &b.x2b, &b.x3b, &b.pgl_u);

    // all three commutators of Jordan type J+
    let w11 = &q * x2.pow(3) * pu;
    // xi_1 = Id forces xi_2 xi_3 = -Id with traces (2, -2)
    let w12_id = c(3) * x0 * (x0 * x1 + pu * x2 * x3);
    let w12_jordan = c(3) * x2 * (&q2 * x2 * x3 + x2 * x1 + x3 * x0) * pu;
    let w12 = &w12_id + &w12_jordan;
    let w13 = c(3) * &q * x3.pow(2) * x2 * pu;
    let w14_id = x1 * (x1.pow(2) + pu * x3.pow(2));
    let w14_jordan = x3 * (&q2 * x3.pow(2) + c(2) * x3 * x1) * pu;
    let w14 = &w14_id + &w14_jordan;
    let total = &w11 + &w12 + &w13 + &w14;
    Points {
        w11,
        w12_id,
        w12_jordan,
        w12,
        w13,
        w14_id,
        w14_jordan,
        w14,
        total,
    }
}

/// Lines use the genus-2 strata imported from the companion computation;
/// `g2_y4` is passed explicitly so the effect of its correction can be
/// measured.
pub fn lines(b: &Blocks, g2_y4: &IntPoly) -> Lines {
    let q = IntPoly::q();
    let (x2, x3, pu) = (&b.x2b, &b.x3b, &b.pgl_u);
    let jordan_line = &q * (x2 + x3) * &b.x4bz2;
    let w2x = [
        x2 * pu * &jordan_line,
        x3 * pu * &jordan_line,
        &b.x0 * &b.g2_w4,
        x2 * pu * &b.g2_z5_s12,
        &b.x1 * g2_y4,
        x3 * pu * &b.g2_z5_s11,
    ];
    let total = c(3) * IntPoly::sum(w2x.iter());
    Lines { w2x, total }
}

pub fn planes(b: &Blocks) -> Planes {
    let w31 = &b.x2b * &b.pgl_u * &b.g2_z6_s12;
    let w32 = &b.x3b * &b.pgl_u * &b.g2_z6_s11;
    let total = c(3) * (&w31 + &w32);
    Planes { w31, w32, total }
}

fn torus_factor(target: &str) -> CharMap {
    let g = MonodromyGroup::torus();
    let ch = g.character(target).expect("torus character");
    CharMap::new(g, vec![ch])
}

pub fn quadric_one(b: &Blocks) -> Result<QuadricOne> {
    let r = &b.r_x4;
    let r_zbar = r
        .pullback(&torus_factor("N1"))?
        .tensor(&r.pullback(&torus_factor("N2"))?)?
        .tensor(&r.pullback(&torus_factor("N12"))?)?;
    let e_extension = e_torus(&r_zbar);
    // over λ = ±1 (and the five other lines) the fiber is X4,λ0 x the
    // self-tensor of R(X̄4) over C* - {±1}
    let line_correction = &b.x4lb * e_punctured_line(&r.tensor(r)?, 3)?;
    // the four corners (±1, ±1)
    let point_correction = c(4) * b.x4lb.pow(3);
    let e_zbar = &e_extension - c(6) * &line_correction - &point_correction;
    let w4 = &b.pgl * &e_zbar;
    Ok(QuadricOne {
        r_zbar,
        e_extension,
        line_correction,
        point_correction,
        e_zbar,
        w4,
    })
}

/// The monodromy of `Z̄' → B'` over the raw triple group: pullbacks of
/// `R(X̄4/Z2)` along `λ`, `μ` and (twisted by `x ↦ -x`) `λμ`.
pub fn zbar_prime_raw(b: &Blocks) -> Result<HMRep> {
    let r = &b.r_x4_z2;
    r.pullback(&slot_pullback(0, false))?
        .tensor(&r.pullback(&slot_pullback(1, false))?)?
        .tensor(&r.pullback(&slot_pullback(2, true))?)
}

pub fn quadric_two(b: &Blocks, e_zbar: &IntPoly) -> Result<QuadricTwo> {
    let r_zbar_prime = zbar_prime_raw(b)?.collapse(&bprime_quotient())?;
    let e_zbar_prime = r_zbar_prime.e_map(&bprime_table())?;
    let w5 = e_pgl_d_quotient(&e_zbar_prime, e_zbar);
    Ok(QuadricTwo {
        r_zbar_prime,
        e_zbar_prime,
        w5,
    })
}

pub fn generic(b: &Blocks, e_zbar_prime: &IntPoly) -> IntPoly {
    &b.pgl * (b.x4bz2.pow(3) - e_zbar_prime)
}

impl TwistedPipeline {
    pub fn compute() -> Result<Self> {
        let b = Blocks::load()?;
        Self::compute_with(&b, &b.g2_y4)
    }

    pub fn compute_with(b: &Blocks, g2_y4: &IntPoly) -> Result<Self> {
        let points = points(b);
        let lines = lines(b, g2_y4);
        let planes = planes(b);
        let quadric_one = quadric_one(b)?;
        let quadric_two = quadric_two(b, &quadric_one.e_zbar)?;
        let w6 = generic(b, &quadric_two.e_zbar_prime);
        let e_w =
            &points.total + &lines.total + &planes.total + &quadric_one.w4 + &quadric_two.w5 + &w6;
        let e_m1 = e_w.div_exact(&b.pgl)?;
        Ok(TwistedPipeline {
            points,
            lines,
            planes,
            quadric_one,
            quadric_two,
            w6,
            e_w,
            e_m1,
        })
    }

    /// Every intermediate in pipeline order, under its report name.
    pub fn entries(&self) -> Vec<(&'static str, Value)> {
        let p = &self.points;
        let l = &self.lines;
        let q1 = &self.quadric_one;
        let q2 = &self.quadric_two;
        let mut out: Vec<(&'static str, Value)> = vec![
            ("twisted.e_W11", p.w11.clone().into()),
            ("twisted.e_W12'", p.w12_id.clone().into()),
            ("twisted.e_W12''", p.w12_jordan.clone().into()),
            ("twisted.e_W12", p.w12.clone().into()),
            ("twisted.e_W13", p.w13.clone().into()),
            ("twisted.e_W14'", p.w14_id.clone().into()),
            ("twisted.e_W14''", p.w14_jordan.clone().into()),
            ("twisted.e_W14", p.w14.clone().into()),
            ("twisted.e_W1", p.total.clone().into()),
        ];
        const LINE_NAMES: [&str; 6] = [
            "twisted.e_W21",
            "twisted.e_W22",
            "twisted.e_W23",
            "twisted.e_W24",
            "twisted.e_W25",
            "twisted.e_W26",
        ];
        out.extend(
            LINE_NAMES
                .iter()
                .zip(&l.w2x)
                .map(|(n, v)| (*n, v.clone().into())),
        );
        out.extend([
            ("twisted.e_W2", l.total.clone().into()),
            ("twisted.e_W31", self.planes.w31.clone().into()),
            ("twisted.e_W32", self.planes.w32.clone().into()),
            ("twisted.e_W3", self.planes.total.clone().into()),
            ("twisted.R_Zbar", q1.r_zbar.clone().into()),
            ("twisted.e_Rtilde_Zbar", q1.e_extension.clone().into()),
            (
                "twisted.e_line_correction",
                q1.line_correction.clone().into(),
            ),
            (
                "twisted.e_point_correction",
                q1.point_correction.clone().into(),
            ),
            ("twisted.e_Zbar", q1.e_zbar.clone().into()),
            ("twisted.e_W4", q1.w4.clone().into()),
            ("twisted.R_Zbar_prime", q2.r_zbar_prime.clone().into()),
            ("twisted.e_Zbar_prime", q2.e_zbar_prime.clone().into()),
            ("twisted.e_W5", q2.w5.clone().into()),
            ("twisted.e_W6", self.w6.clone().into()),
            ("twisted.e_W", self.e_w.clone().into()),
            ("twisted.e_M1", self.e_m1.clone().into()),
        ]);
        out
    }

    /// Compares every intermediate that has a published value.
    pub fn verify(&self) -> Result<()> {
        self.entries().iter().try_for_each(|(n, v)| ensure(n, v))
    }
}

fn ensure_all(items: &[(&str, &IntPoly)]) -> Result<()> {
    items
        .iter()
        .try_for_each(|(n, p)| ensure(n, &Value::Poly((*p).clone())))
}

/// `e(W1)`, checked stratum by stratum.
pub fn stratum_points() -> Result<IntPoly> {
    let p = points(&Blocks::load()?);
    ensure_all(&[
        ("twisted.e_W11", &p.w11),
        ("twisted.e_W12'", &p.w12_id),
        ("twisted.e_W12''", &p.w12_jordan),
        ("twisted.e_W12", &p.w12),
        ("twisted.e_W13", &p.w13),
        ("twisted.e_W14'", &p.w14_id),
        ("twisted.e_W14''", &p.w14_jordan),
        ("twisted.e_W14", &p.w14),
        ("twisted.e_W1", &p.total),
    ])?;
    Ok(p.total)
}

/// `e(W2)`, checked stratum by stratum.
pub fn stratum_lines() -> Result<IntPoly> {
    let b = Blocks::load()?;
    let l = lines(&b, &b.g2_y4);
    let names = [
        "twisted.e_W21",
        "twisted.e_W22",
        "twisted.e_W23",
        "twisted.e_W24",
        "twisted.e_W25",
        "twisted.e_W26",
    ];
    let mut items: Vec<(&str, &IntPoly)> = names.iter().copied().zip(l.w2x.iter()).collect();
    items.push(("twisted.e_W2", &l.total));
    ensure_all(&items)?;
    Ok(l.total)
}

/// `e(W3)`.
pub fn stratum_planes() -> Result<IntPoly> {
    let p = planes(&Blocks::load()?);
    ensure_all(&[
        ("twisted.e_W31", &p.w31),
        ("twisted.e_W32", &p.w32),
        ("twisted.e_W3", &p.total),
    ])?;
    Ok(p.total)
}

/// `(e(Z̄), e(W4))`.
pub fn stratum_quadric_one() -> Result<(IntPoly, IntPoly)> {
    let s = quadric_one(&Blocks::load()?)?;
    ensure_all(&[
        ("twisted.e_Rtilde_Zbar", &s.e_extension),
        ("twisted.e_line_correction", &s.line_correction),
        ("twisted.e_point_correction", &s.point_correction),
        ("twisted.e_Zbar", &s.e_zbar),
        ("twisted.e_W4", &s.w4),
    ])?;
    Ok((s.e_zbar, s.w4))
}

/// `(e(Z̄'), e(W5))`.
pub fn stratum_quadric_two() -> Result<(IntPoly, IntPoly)> {
    let b = Blocks::load()?;
    let one = quadric_one(&b)?;
    let s = quadric_two(&b, &one.e_zbar)?;
    ensure_all(&[
        ("twisted.e_Zbar_prime", &s.e_zbar_prime),
        ("twisted.e_W5", &s.w5),
    ])?;
    Ok((s.e_zbar_prime, s.w5))
}

/// `e(W6)`.
pub fn stratum_generic() -> Result<IntPoly> {
    let b = Blocks::load()?;
    let one = quadric_one(&b)?;
    let two = quadric_two(&b, &one.e_zbar)?;
    let w6 = generic(&b, &two.e_zbar_prime);
    ensure_all(&[("twisted.e_W6", &w6)])?;
    Ok(w6)
}

/// `(e(W), e(M¹))`.
pub fn twisted_total() -> Result<(IntPoly, IntPoly)> {
    let t = TwistedPipeline::compute()?;
    t.verify()?;
    Ok((t.e_w, t.e_m1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::poly::poly;

    #[test]
    fn strata_match_published_values() {
        stratum_points().unwrap();
        stratum_lines().unwrap();
        stratum_planes().unwrap();
        stratum_quadric_one().unwrap();
        stratum_quadric_two().unwrap();
        stratum_generic().unwrap();
        TwistedPipeline::compute().unwrap().verify().unwrap();
    }

    #[test]
    fn twisted_character_variety() {
        let (e_w, e_m1) = twisted_total().unwrap();
        assert_eq!(
            e_m1,
            poly("q^12 - 4q^10 + 6q^8 - 252q^7 - 14q^6 - 252q^5 + 6q^4 - 4q^2 + 1")
        );
        assert!(e_m1.is_palindromic(12));
        assert!(e_m1.is_monic());
        assert_eq!(e_m1.degree(), Some(12));
        assert_eq!(e_w.eval(1), 0.into());
        assert_eq!(e_w.eval(-1), 0.into());
    }

    #[test]
    fn generic_stratum_shape() {
        let w6 = stratum_generic().unwrap();
        assert_eq!(w6.degree(), Some(15));
        assert_eq!(w6.eval(1), 0.into());
    }

    #[test]
    fn triple_tensor_over_torus() {
        let s = quadric_one(&Blocks::load().unwrap()).unwrap();
        let (a, b) = (poly("q^3 - 1"), poly("3q^2 - 3q"));
        assert_eq!(s.r_zbar.invariant_part(), a.pow(3) + b.pow(3));
        assert_eq!(
            s.line_correction,
            poly("q^3 + 3q^2 - 3q - 1")
                * ((poly("q - 3")) * (a.pow(2) + b.pow(2)) - IntPoly::constant(4) * &a * &b)
        );
    }

    #[test]
    fn y4_correction_matters() {
        let b = Blocks::load().unwrap();
        let perturbed = &b.g2_y4 + IntPoly::monomial(1, 3);
        let t = TwistedPipeline::compute_with(&b, &perturbed);
        match t {
            Ok(t) => {
                assert!(matches!(t.verify(), Err(Error::MismatchWithPaper { .. })));
                assert_ne!(
                    t.lines.w2x[4],
                    TwistedPipeline::compute().unwrap().lines.w2x[4]
                );
            }
            Err(e) => assert!(matches!(e, Error::NonzeroRemainder { .. })),
        }
    }
}
