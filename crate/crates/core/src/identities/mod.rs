//! A catalogue of identities, each a pair of independently computed sides on
//! a grid, and the verification reports built from them.

mod catalogue;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::hurwitz::{hurwitz_zeta, HurwitzQuery};
use crate::quad;
use crate::{Error, EvalResult, Method, Result};

pub use catalogue::registry;

/// Grid density used when none is given.
pub const DEFAULT_GRID: usize = 9;

/// Smallest accepted grid density.
pub const MIN_GRID: usize = 3;

/// Where a case is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// The density-controlled grid in (0, 1), variable x.
    XGrid,
    /// The same grid, variable u.
    UGrid,
    XValues(&'static [f64]),
    UValues(&'static [f64]),
    SValues(&'static [f64]),
    /// The listed s values crossed with the x-grid.
    SxGrid(&'static [f64]),
    Scalar,
}

impl Domain {
    pub fn points(&self, density: usize) -> Vec<GridPoint> {
        let at_x = |x| GridPoint {
            x: Some(x),
            ..GridPoint::default()
        };
        let at_u = |u| GridPoint {
            u: Some(u),
            ..GridPoint::default()
        };
        let at_s = |s| GridPoint {
            s: Some(s),
            ..GridPoint::default()
        };
        match *self {
            Domain::XGrid => x_grid(density).into_iter().map(at_x).collect(),
            Domain::UGrid => x_grid(density).into_iter().map(at_u).collect(),
            Domain::XValues(v) => v.iter().copied().map(at_x).collect(),
            Domain::UValues(v) => v.iter().copied().map(at_u).collect(),
            Domain::SValues(v) => v.iter().copied().map(at_s).collect(),
            Domain::SxGrid(ss) => {
                let xs = x_grid(density);
                ss.iter()
                    .flat_map(|&s| {
                        xs.iter().map(move |&x| GridPoint {
                            s: Some(s),
                            x: Some(x),
                            u: None,
                        })
                    })
                    .collect()
            }
            Domain::Scalar => vec![GridPoint::default()],
        }
    }
}

/// `density` uniform points i/(density+1); from the default density upward
/// the points 1/4, 1/3, 3/4 are added.
pub fn x_grid(density: usize) -> Vec<f64> {
    let step = 1.0 / (density + 1) as f64;
    let mut xs: Vec<f64> = (1..=density).map(|i| i as f64 * step).collect();
    if density >= DEFAULT_GRID {
        for extra in [0.25, 1.0 / 3.0, 0.75] {
            if xs.iter().all(|x| (x - extra).abs() > 1e-12) {
                xs.push(extra);
            }
        }
    }
    xs.sort_by(f64::total_cmp);
    xs
}

/// Coordinates of one evaluation; unused coordinates are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GridPoint {
    pub s: Option<f64>,
    pub x: Option<f64>,
    pub u: Option<f64>,
}

impl GridPoint {
    pub fn s(&self) -> f64 {
        self.s.unwrap_or(f64::NAN)
    }

    pub fn x(&self) -> f64 {
        self.x.unwrap_or(f64::NAN)
    }

    pub fn u(&self) -> f64 {
        self.u.unwrap_or(f64::NAN)
    }
}

pub type Evaluator = fn(&GridPoint) -> Result<f64>;

#[derive(Debug, Clone, Copy)]
pub struct IdentityCase {
    pub id: &'static str,
    pub title: &'static str,
    pub domain: Domain,
    pub tol: f64,
    pub notes: &'static str,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointRecord {
    pub point: GridPoint,
    pub lhs: f64,
    pub rhs: f64,
    /// |lhs − rhs|; infinite when an evaluator failed.
    pub residual: f64,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub id: &'static str,
    pub title: &'static str,
    /// Tolerance applied, after scaling.
    pub tol: f64,
    pub points: Vec<PointRecord>,
    pub max_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub cases_run: usize,
    pub cases_passed: usize,
    pub points_run: usize,
    pub points_passed: usize,
    pub max_residual: f64,
    pub wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.cases_passed == self.summary.cases_run
    }
}

/// The registry entry with this id (case-insensitive).
pub fn find(id: &str) -> Result<IdentityCase> {
    registry()
        .into_iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

fn check_grid(density: usize, tol_scale: f64) -> Result<()> {
    if density < MIN_GRID {
        return Err(Error::domain("grid density", density as f64, "at least 3"));
    }
    if !(tol_scale > 0.0 && tol_scale.is_finite()) {
        return Err(Error::domain("tolerance scale", tol_scale, "positive"));
    }
    Ok(())
}

fn run_case(case: &IdentityCase, density: usize, tol_scale: f64) -> CaseReport {
    let tol = case.tol * tol_scale;
    let points: Vec<PointRecord> = case
        .domain
        .points(density)
        .into_par_iter()
        .map(|p| match ((case.lhs)(&p), (case.rhs)(&p)) {
            (Ok(lhs), Ok(rhs)) => {
                let residual = (lhs - rhs).abs();
                PointRecord {
                    point: p,
                    lhs,
                    rhs,
                    residual,
                    pass: residual <= tol,
                    error: None,
                }
            }
            (l, r) => PointRecord {
                point: p,
                lhs: l.as_ref().copied().unwrap_or(f64::NAN),
                rhs: r.as_ref().copied().unwrap_or(f64::NAN),
                residual: f64::INFINITY,
                pass: false,
                error: l.err().or(r.err()).map(|e| e.to_string()),
            },
        })
        .collect();
    let max_residual = points.iter().map(|p| p.residual).fold(0.0, f64::max);
    CaseReport {
        id: case.id,
        title: case.title,
        tol,
        pass: points.iter().all(|p| p.pass),
        max_residual,
        points,
    }
}

fn assemble(cases: Vec<CaseReport>, started: Instant) -> VerificationReport {
    let summary = Summary {
        cases_run: cases.len(),
        cases_passed: cases.iter().filter(|c| c.pass).count(),
        points_run: cases.iter().map(|c| c.points.len()).sum(),
        points_passed: cases
            .iter()
            .map(|c| c.points.iter().filter(|p| p.pass).count())
            .sum(),
        max_residual: cases.iter().map(|c| c.max_residual).fold(0.0, f64::max),
        wall_time: started.elapsed(),
    };
    VerificationReport { cases, summary }
}

/// One case on the default grid at its own tolerance.
pub fn verify(case: &IdentityCase) -> VerificationReport {
    verify_with(case, DEFAULT_GRID, 1.0).expect("default grid is valid")
}

pub fn verify_with(
    case: &IdentityCase,
    density: usize,
    tol_scale: f64,
) -> Result<VerificationReport> {
    check_grid(density, tol_scale)?;
    let started = Instant::now();
    Ok(assemble(vec![run_case(case, density, tol_scale)], started))
}

/// Every registry case; cases run in parallel, the report keeps registry order.
pub fn verify_all(density: usize, tol_scale: f64) -> Result<VerificationReport> {
    check_grid(density, tol_scale)?;
    let started = Instant::now();
    let cases = registry()
        .par_iter()
        .map(|c| run_case(c, density, tol_scale))
        .collect();
    Ok(assemble(cases, started))
}

/// Cut-off for the endpoint tails of the ζ''(0,u) integral.
const ZETA2_DELTA: f64 = 1e-6;

/// ∫₀¹ ζ''(0,u) du.
///
/// Composite Gauss–Legendre on [δ, 1−δ] with panels graded by decades
/// toward the ln²u singularity at 0. The tails use ζ''(0,u) = ln²u +
/// ζ''(0,1+u): ∫₀^δ ≈ δ(ln²δ − 2lnδ + 2) + δζ''(0,1), and ∫_{1−δ}^1 ≈
/// δζ''(0,1). The error estimate compares against the rule on halved panels.
pub fn quadrature_zeta2_integral() -> Result<EvalResult> {
    let f = |u: f64| hurwitz_zeta(HurwitzQuery::new(0.0, u, 2)).map(|r| r.value);
    let mut edges = vec![ZETA2_DELTA];
    let mut e = ZETA2_DELTA;
    while e < 0.1 {
        e *= 10.0;
        edges.push(e.min(0.1));
    }
    edges.extend((2..10).map(|k| k as f64 / 10.0));
    edges.push(1.0 - ZETA2_DELTA);
    let halved: Vec<f64> = edges
        .windows(2)
        .flat_map(|w| [w[0], 0.5 * (w[0] + w[1])])
        .chain(std::iter::once(1.0 - ZETA2_DELTA))
        .collect();

    let coarse = quad::integrate_panels(&f, &edges)?;
    let fine = quad::integrate_panels(&f, &halved)?;
    let at_one = f(1.0)?;
    let l = ZETA2_DELTA.ln();
    let tails = ZETA2_DELTA * (l * l - 2.0 * l + 2.0) + 2.0 * ZETA2_DELTA * at_one;
    Ok(EvalResult::new(
        fine + tails,
        (fine - coarse).abs() + ZETA2_DELTA * ZETA2_DELTA * 10.0,
        20 * (edges.len() + halved.len() - 2),
        Method::Quadrature,
    ))
}
