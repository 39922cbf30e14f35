//! Genus 2: the monodromy of `Ȳ4 → C - {0, ±1}` assembled from its strata,
//! and the four-equation system that lifts it to `Ȳ4/Z2 → C - {±2}`.

use crate::blocks::{two_punctures_to_punctured_line, Blocks};
use crate::error::{Error, Result};
use crate::expected::{ensure, Value};
use crate::fibcalc::{e_pgl_d_quotient, e_punctured_line};
use crate::poly::IntPoly;
use crate::repring::{CharMap, EvalTable, HMRep, MonodromyGroup};

/// `R(Z1)..R(Z7)` and the auxiliary `R(Z̄6)`, all over `C - {0, ±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strata {
    pub z: [HMRep; 7],
    pub zbar6: HMRep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus2Monodromy {
    pub r_ybar4: HMRep,
    pub r_ybar4_z2: HMRep,
    pub r_mlambda: HMRep,
    pub e_y4: IntPoly,
}

fn c(n: i64) -> IntPoly {
    IntPoly::constant(n)
}

fn torus_factor(target: &str) -> CharMap {
    let g = MonodromyGroup::torus();
    let ch = g.character(target).expect("torus character");
    CharMap::new(g, vec![ch])
}

/// The hyperbola stratum: pairs over `(λ, μ)` pushed down to `λ`, less the
/// four points where the second trace is `±2`.
fn zbar6(b: &Blocks) -> Result<HMRep> {
    let pair = b
        .r_x4
        .pullback(&torus_factor("N2"))?
        .tensor(&b.r_x4.pullback(&torus_factor("N12"))?)?;
    let mu = MonodromyGroup::new(["μ"]);
    let fiber = EvalTable::from_fn(mu, |ch| {
        if ch.is_trivial() {
            IntPoly::q_minus_one()
        } else {
            IntPoly::zero()
        }
    });
    pair.partial_push(&MonodromyGroup::punctured_line(), &fiber)?
        .sub(&b.r_x4.scale(&(c(4) * &b.x4lb)))
}

pub fn strata(b: &Blocks) -> Result<Strata> {
    let g = MonodromyGroup::punctured_line();
    let t = |p: IntPoly| HMRep::trivial(g.clone(), p);
    let qm = IntPoly::q_minus_one();
    let off_diagonal = t(b.x4bz2.clone()).sub(&b.r_x4)?;

    let z1 = t(&qm * (&b.x2b + &b.x3b).pow(2));
    let z2 = b.r_x4.scale(&(c(2) * (&b.x0 + c(2) * &qm * &b.x2b)));
    let z3 = b.r_x4.scale(&(c(2) * (&b.x1 + c(2) * &qm * &b.x3b)));
    let z4 = off_diagonal.scale(&(c(2) * &qm * &b.x2b));
    let z5 = off_diagonal.scale(&(c(2) * &qm * &b.x3b));
    let zbar6 = zbar6(b)?;
    let z6 = zbar6.scale(&(c(2) * IntPoly::q() - c(1)));
    let z7 = t(b.x4bz2.pow(2)).sub(&zbar6)?.scale(&qm);
    Ok(Strata {
        z: [z1, z2, z3, z4, z5, z6, z7],
        zbar6,
    })
}

pub fn strata_entries(s: &Strata) -> Vec<(&'static str, Value)> {
    const NAMES: [&str; 7] = [
        "genus2.R_Z1",
        "genus2.R_Z2",
        "genus2.R_Z3",
        "genus2.R_Z4",
        "genus2.R_Z5",
        "genus2.R_Z6",
        "genus2.R_Z7",
    ];
    let mut out: Vec<(&'static str, Value)> = NAMES
        .iter()
        .zip(&s.z)
        .map(|(n, r)| (*n, r.clone().into()))
        .collect();
    out.insert(5, ("genus2.R_Zbar6", s.zbar6.clone().into()));
    out
}

/// `R(Ȳ4)` as the sum of its strata, each checked.
pub fn compute_r_ybar4() -> Result<HMRep> {
    let s = strata(&Blocks::load()?)?;
    for (n, v) in strata_entries(&s) {
        ensure(n, &v)?;
    }
    let total =
        s.z.iter()
            .skip(1)
            .try_fold(s.z[0].clone(), |acc, r| acc.add(r))?;
    ensure("genus2.R_Ybar4", &total.clone().into())?;
    Ok(total)
}

/// `R(M^λ)`: the monodromy of `Ȳ4` divided by the fiberwise `C*`.
pub fn compute_r_mlambda() -> Result<HMRep> {
    mlambda_from(&compute_r_ybar4()?)
}

fn divide_by_fiber_torus(r_ybar4: &HMRep) -> Result<HMRep> {
    let qm = IntPoly::q_minus_one();
    let terms = r_ybar4
        .terms()
        .map(|(ch, p)| Ok((ch, p.div_exact(&qm)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HMRep::from_terms(r_ybar4.group().clone(), terms))
}

fn mlambda_from(r_ybar4: &HMRep) -> Result<HMRep> {
    let r = divide_by_fiber_torus(r_ybar4)?;
    ensure("genus2.R_Mlambda", &r.clone().into())?;
    Ok(r)
}

fn e_y4_from(b: &Blocks) -> IntPoly {
    b.pgl.pow(4) - &b.y0 - &b.y1 - &b.pgl_u * &b.y2b - &b.pgl_u * &b.y3b
}

/// `e(Y4)`: pairs of commutators whose product has trace `≠ ±2`.
pub fn compute_e_y4() -> Result<IntPoly> {
    let e = e_y4_from(&Blocks::load()?);
    ensure("genus2.e_Y4", &e.clone().into())?;
    Ok(e)
}

/// `e(W0)..e(W4)` for the genus-3 twisted space split as genus 2 plus
/// genus 1 according to the conjugacy class of `ξ = [A1,B1][A2,B2]`.
pub fn split_strata(b: &Blocks, e_w_twisted: &IntPoly) -> [IntPoly; 5] {
    let w0 = &b.y0 * &b.x1;
    let w1 = &b.y1 * &b.x0;
    let w2 = &b.pgl_u * &b.y2b * &b.x3b;
    let w3 = &b.pgl_u * &b.y3b * &b.x2b;
    let w4 = e_w_twisted - &w0 - &w1 - &w2 - &w3;
    [w0, w1, w2, w3, w4]
}

pub const SPLIT_NAMES: [&str; 5] = [
    "genus2.e_W0",
    "genus2.e_W1",
    "genus2.e_W2",
    "genus2.e_W3",
    "genus2.e_W4",
];

/// `e(W4)` of the split, checked together with the four closed strata.
pub fn genus2x1_strata(e_w_twisted: &IntPoly) -> Result<IntPoly> {
    let w = split_strata(&Blocks::load()?, e_w_twisted);
    for (n, p) in SPLIT_NAMES.iter().zip(&w) {
        ensure(n, &p.clone().into())?;
    }
    let [.., w4] = w;
    Ok(w4)
}

/// `e` of a fibration over `C - {±2}` whose `Z2`-quotient has monodromy `r`,
/// with the total space a `PGL2/D`-bundle: the map used by the diagonalizable
/// strata.
pub fn diagonal_class_e(r: &HMRep) -> Result<IntPoly> {
    let quot = e_punctured_line(r, 2)?;
    let tot = e_punctured_line(&r.collapse(&two_punctures_to_punctured_line())?, 3)?;
    Ok(e_pgl_d_quotient(&quot, &tot))
}

/// `x ↦ -x` on `C - {±2}`, which exchanges the two punctures.
pub fn sign_swap() -> CharMap {
    let g = MonodromyGroup::two_punctures();
    let (s2, sm2) = (g.character("S2").unwrap(), g.character("S-2").unwrap());
    CharMap::new(g, vec![sm2, s2])
}

const UNKNOWNS: [&str; 4] = ["T", "S2", "S-2", "S0"];

fn unit(name: &str) -> HMRep {
    HMRep::from_named(MonodromyGroup::two_punctures(), &[(name, IntPoly::one())])
}

/// Coefficients of `a, b, c, d` in `e(W4)` of the split, obtained by pushing
/// each unit through `⊗ τ*R(X̄4/Z2)` and the diagonal-class map.
pub fn eq_w4_row(b: &Blocks) -> Result<[IntPoly; 4]> {
    let twisted = b.r_x4_z2.pullback(&sign_swap())?;
    let mut row: [IntPoly; 4] = Default::default();
    for (slot, name) in row.iter_mut().zip(UNKNOWNS) {
        *slot = diagonal_class_e(&unit(name).tensor(&twisted)?)?;
    }
    Ok(row)
}

/// Coefficients of `a, b, c, d` in `e(Y4)`.
pub fn eq_y4_row() -> Result<[IntPoly; 4]> {
    let mut row: [IntPoly; 4] = Default::default();
    for (slot, name) in row.iter_mut().zip(UNKNOWNS) {
        *slot = diagonal_class_e(&unit(name))?;
    }
    Ok(row)
}

/// Solves `m x = rhs` over `Z[q]` by fraction-free (Bareiss) elimination.
/// The solution must be polynomial.
pub fn solve_fraction_free(m: &[Vec<IntPoly>], rhs: &[IntPoly]) -> Result<Vec<IntPoly>> {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n) && rhs.len() == n,
        "square system"
    );
    let mut a: Vec<Vec<IntPoly>> = m
        .iter()
        .zip(rhs)
        .map(|(r, y)| r.iter().cloned().chain([y.clone()]).collect())
        .collect();
    let mut prev = IntPoly::one();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v.div_exact(&prev)?;
            }
            a[i][k] = IntPoly::zero();
        }
        prev = a[k][k].clone();
    }
    // y = det * x is polynomial by Cramer's rule
    let det = prev;
    let mut y = vec![IntPoly::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &det * &a[i][n];
        for j in i + 1..n {
            acc -= &(&a[i][j] * &y[j]);
        }
        y[i] = acc.div_exact(&a[i][i])?;
    }
    let x = y
        .iter()
        .map(|yi| {
            yi.div_exact(&det)
                .map_err(|_| Error::NonPolynomialSolution(format!("({yi}) / ({det})")))
        })
        .collect::<Result<Vec<_>>>()?;
    for (row, r) in m.iter().zip(rhs) {
        let lhs = row
            .iter()
            .zip(&x)
            .fold(IntPoly::zero(), |acc, (c, v)| acc + c * v);
        if &lhs != r {
            return Err(Error::NonPolynomialSolution(format!(
                "residual {}",
                lhs - r
            )));
        }
    }
    Ok(x)
}

/// The four equations in `(a, b, c, d)`, rows ordered so the elimination
/// removes `d` first and then `b + c`, and columns ordered `(d, b, a, c)`.
pub struct LinearSystem {
    pub rows: Vec<[IntPoly; 4]>,
    pub rhs: Vec<IntPoly>,
}

pub fn linear_system(
    b: &Blocks,
    e_w4: &IntPoly,
    e_y4: &IntPoly,
    r_ybar4: &HMRep,
) -> Result<LinearSystem> {
    let pipeline = eq_w4_row(b)?;
    for (v, x) in pipeline.iter().zip(["a", "b", "c", "d"]) {
        let name = format!("genus2.eq_W4.{x}");
        if let Some(direct) = crate::expected::expected(&name) {
            if &direct != v {
                return Err(Error::CrossCheckFailed {
                    name,
                    first: v.to_string(),
                    second: direct.to_string(),
                });
            }
        }
    }
    let one = IntPoly::one;
    let zero = IntPoly::zero;
    Ok(LinearSystem {
        rows: vec![
            [one(), zero(), zero(), one()],
            [one(), one(), one(), one()],
            eq_y4_row()?,
            pipeline,
        ],
        rhs: vec![
            r_ybar4.coeff_named("T"),
            b.y4lb.clone(),
            e_y4.clone(),
            e_w4.clone(),
        ],
    })
}

const COLUMN_ORDER: [usize; 4] = [3, 1, 0, 2];

/// Solves for `R(Ȳ4/Z2) = aT + bS2 + cS-2 + dS0`.
pub fn solve_system(sys: &LinearSystem) -> Result<HMRep> {
    let m: Vec<Vec<IntPoly>> = sys
        .rows
        .iter()
        .map(|r| COLUMN_ORDER.iter().map(|&j| r[j].clone()).collect())
        .collect();
    let x = solve_fraction_free(&m, &sys.rhs)?;
    let mut abcd: [IntPoly; 4] = Default::default();
    for (v, &j) in x.into_iter().zip(&COLUMN_ORDER) {
        abcd[j] = v;
    }
    let terms: Vec<(&str, IntPoly)> = UNKNOWNS.iter().copied().zip(abcd).collect();
    Ok(HMRep::from_named(MonodromyGroup::two_punctures(), &terms))
}

/// `R(Ȳ4/Z2)`, using the twisted genus-3 total for `e(W4)` of the split.
pub fn solve_ry4z2() -> Result<HMRep> {
    let (e_w, _) = crate::twisted::twisted_total()?;
    Ok(compute(&e_w)?.r_ybar4_z2)
}

pub fn compute(e_w_twisted: &IntPoly) -> Result<Genus2Monodromy> {
    let b = Blocks::load()?;
    let r_ybar4 = compute_r_ybar4()?;
    let r_mlambda = mlambda_from(&r_ybar4)?;
    let e_y4 = compute_e_y4()?;
    let e_w4 = genus2x1_strata(e_w_twisted)?;
    let sys = linear_system(&b, &e_w4, &e_y4, &r_ybar4)?;
    let r_ybar4_z2 = solve_system(&sys)?;
    ensure("genus2.R_Ybar4_Z2", &r_ybar4_z2.clone().into())?;
    let collapsed = r_ybar4_z2.collapse(&two_punctures_to_punctured_line())?;
    if collapsed != r_ybar4 {
        return Err(Error::CrossCheckFailed {
            name: "collapse of R(Ybar4/Z2)".into(),
            first: collapsed.to_string(),
            second: r_ybar4.to_string(),
        });
    }
    Ok(Genus2Monodromy {
        r_ybar4,
        r_ybar4_z2,
        r_mlambda,
        e_y4,
    })
}

/// Every intermediate in pipeline order, computed without comparing to the
/// published values (apart from the internal cross-checks).
pub fn entries(e_w_twisted: &IntPoly) -> Result<Vec<(&'static str, Value)>> {
    let b = Blocks::load()?;
    let s = strata(&b)?;
    let mut out = strata_entries(&s);
    let r_ybar4 =
        s.z.iter()
            .skip(1)
            .try_fold(s.z[0].clone(), |acc, r| acc.add(r))?;
    out.push(("genus2.R_Ybar4", r_ybar4.clone().into()));
    out.push(("genus2.R_Mlambda", divide_by_fiber_torus(&r_ybar4)?.into()));
    let e_y4 = e_y4_from(&b);
    out.push(("genus2.e_Y4", e_y4.clone().into()));
    let w = split_strata(&b, e_w_twisted);
    out.extend(
        SPLIT_NAMES
            .iter()
            .zip(&w)
            .map(|(n, p)| (*n, p.clone().into())),
    );
    let sys = linear_system(&b, &w[4], &e_y4, &r_ybar4)?;
    const ROW: [&str; 4] = [
        "genus2.eq_W4.a",
        "genus2.eq_W4.b",
        "genus2.eq_W4.c",
        "genus2.eq_W4.d",
    ];
    out.extend(
        ROW.iter()
            .zip(&sys.rows[3])
            .map(|(n, p)| (*n, p.clone().into())),
    );
    out.push(("genus2.R_Ybar4_Z2", solve_system(&sys)?.into()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn strata_sum_to_ybar4() {
        let r = compute_r_ybar4().unwrap();
        assert_eq!(
            r.coeff_named("T"),
            poly("q^9 - 3q^7 + 6q^5 - 6q^4 + 3q^2 - 1")
        );
        assert_eq!(r.coeff_named("N"), poly("15q^6 - 45q^5 + 45q^4 - 15q^3"));
    }

    #[test]
    fn mlambda_divides() {
        let m = compute_r_mlambda().unwrap();
        let back = m.scale(&IntPoly::q_minus_one());
        assert_eq!(back, compute_r_ybar4().unwrap());
    }

    #[test]
    fn e_y4_vanishes_at_one() {
        assert_eq!(compute_e_y4().unwrap().eval(1), 0.into());
    }

    #[test]
    fn y4_row_is_the_diagonal_map() {
        let [a, b, c, d] = eq_y4_row().unwrap();
        assert_eq!(a, poly("q^3 - 2q^2 - q"));
        assert_eq!(b, poly("-q^2 - q"));
        assert_eq!(c, poly("-q^2 - q"));
        assert_eq!(d, poly("-2q"));
    }

    #[test]
    fn solves_for_ybar4_z2() {
        let r = solve_ry4z2().unwrap();
        assert_eq!(r.coeff_named("T"), poly("q^9 - 3q^7 + 6q^5"));
        assert_eq!(r.coeff_named("S2"), poly("-45q^5 - 15q^3"));
        assert_eq!(r.coeff_named("S-2"), poly("15q^6 + 45q^4"));
        assert_eq!(r.coeff_named("S0"), poly("-6q^4 + 3q^2 - 1"));
    }

    #[test]
    fn bareiss_small_cases() {
        let p = |s: &str| poly(s);
        // (q  1; 1  q) x = (q^2 + 1, 2q)  =>  x = (q, 1)
        let m = vec![vec![p("q"), p("1")], vec![p("1"), p("q")]];
        let x = solve_fraction_free(&m, &[p("q^2 + 1"), p("2q")]).unwrap();
        assert_eq!(x, vec![p("q"), p("1")]);
        // zero leading pivot forces a swap
        let m = vec![vec![p("0"), p("1")], vec![p("1"), p("0")]];
        let x = solve_fraction_free(&m, &[p("3"), p("q")]).unwrap();
        assert_eq!(x, vec![p("q"), p("3")]);
        let m = vec![vec![p("q"), p("q")], vec![p("1"), p("1")]];
        assert_eq!(
            solve_fraction_free(&m, &[p("1"), p("1")]),
            Err(Error::SingularSystem)
        );
        // 2x = 1 has no integral solution
        let m = vec![vec![p("2")]];
        assert!(matches!(
            solve_fraction_free(&m, &[p("1")]),
            Err(Error::NonPolynomialSolution(_)) | Err(Error::NonzeroRemainder { .. })
        ));
    }
}
