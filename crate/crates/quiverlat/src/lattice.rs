//! Independent combinatorial verifiers: lattice paths under a line of
//! rational slope and the Raney/Fuss-Catalan closed forms, together with
//! the mapping from knot families to their path models.
//!
//! A path model fixes an endpoint (X, Y), a step set drawn from
//! E = (1,0), N = (0,1), D = (1,1), and the line y = s_num/s_den (x - x0).
//! Every visited lattice point (the origin included) must satisfy
//! y * s_den <= (x - x0) * s_num, with < instead of <= in strict mode;
//! everything is integer arithmetic, no rational comparisons.

use crate::error::{Error, Result};
use crate::tower::{KnotFamily, KnotFamilySpec};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strictness {
    #[default]
    Weak,
    Strict,
}

/// Which of the three step directions a model admits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Steps {
    pub east: bool,
    pub north: bool,
    pub diagonal: bool,
}

impl Steps {
    pub const EN: Steps = Steps {
        east: true,
        north: true,
        diagonal: false,
    };
    pub const END: Steps = Steps {
        east: true,
        north: true,
        diagonal: true,
    };
}

/// One lattice step of a concrete path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    E,
    N,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathModel {
    pub x: usize,
    pub y: usize,
    pub s_num: i64,
    pub s_den: i64,
    pub x0: i64,
    pub strictness: Strictness,
    pub steps: Steps,
}

impl PathModel {
    fn allowed(&self, x: usize, y: usize) -> bool {
        let lhs = y as i128 * self.s_den as i128;
        let rhs = (x as i128 - self.x0 as i128) * self.s_num as i128;
        match self.strictness {
            Strictness::Weak => lhs <= rhs,
            Strictness::Strict => lhs < rhs,
        }
    }
}

/// Count the admissible paths by dynamic programming, one column of the
/// grid at a time.
pub fn count_paths(model: &PathModel) -> BigInt {
    assert!(model.s_num >= 0 && model.s_den >= 1, "invalid slope");
    let (xn, yn) = (model.x, model.y);
    let mut col = vec![BigInt::zero(); yn + 1];
    for x in 0..=xn {
        let prev = col;
        col = vec![BigInt::zero(); yn + 1];
        for y in 0..=yn {
            if !model.allowed(x, y) {
                continue;
            }
            let mut ways = BigInt::zero();
            if x == 0 && y == 0 {
                ways = BigInt::one();
            }
            if model.steps.east && x > 0 {
                ways += &prev[y];
            }
            if model.steps.north && y > 0 {
                ways += &col[y - 1];
            }
            if model.steps.diagonal && x > 0 && y > 0 {
                ways += &prev[y - 1];
            }
            col[y] = ways;
        }
    }
    col[yn].clone()
}

/// List every admissible path explicitly (depth-first, trying E, N, D in
/// that order). Meant as the brute-force oracle for small endpoints; the
/// cap bounds the result size.
pub fn enumerate_paths(model: &PathModel, cap: usize) -> Result<Vec<Vec<Step>>> {
    fn go(
        model: &PathModel,
        x: usize,
        y: usize,
        path: &mut Vec<Step>,
        out: &mut Vec<Vec<Step>>,
        cap: usize,
    ) -> Result<()> {
        if x == model.x && y == model.y {
            if out.len() == cap {
                return Err(Error::EnumerationCap { cap });
            }
            out.push(path.clone());
            return Ok(());
        }
        let candidates = [
            (Step::E, model.steps.east, x + 1, y),
            (Step::N, model.steps.north, x, y + 1),
            (Step::D, model.steps.diagonal, x + 1, y + 1),
        ];
        for (step, enabled, nx, ny) in candidates {
            if enabled && nx <= model.x && ny <= model.y && model.allowed(nx, ny) {
                path.push(step);
                go(model, nx, ny, path, out, cap)?;
                path.pop();
            }
        }
        Ok(())
    }

    let mut out = Vec::new();
    if model.allowed(0, 0) {
        go(model, 0, 0, &mut Vec::new(), &mut out, cap)?;
    }
    Ok(out)
}

/// Exact binomial coefficient via the multiplicative formula; every
/// intermediate division is exact.
fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Parameters of a Raney number R_(M,N)(k) = N/(Mk+N) binomial(Mk+N, k).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RaneyParams {
    pub m: u64,
    pub n: u64,
}

/// The Raney number R_(m,n)(k); the defining division must be exact.
pub fn raney(m: u64, n: u64, k: u64) -> Result<BigInt> {
    assert!(n >= 1, "Raney numbers need n >= 1");
    let top = m * k + n;
    let num = BigInt::from(n) * binomial(top, k);
    let den = BigInt::from(top);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    if !r.is_zero() {
        return Err(Error::RaneyDivision {
            m: m as i64,
            n: n as i64,
            k: k as usize,
        });
    }
    Ok(q)
}

/// Slope base of the unframed family model: framing f lowers it by f.
fn slope_base(spec: &KnotFamilySpec) -> Option<(i64, i64)> {
    // returns (base denominator at f = 0, endpoint offset s)
    match spec.family {
        KnotFamily::NegTwist => Some((2 * (-spec.p), 2 * (-spec.p) - 2)),
        KnotFamily::PosTwist => Some((2 * spec.p + 1, 2 * spec.p - 1)),
        KnotFamily::DoubleTwist3 => Some((2 * spec.p + 5, 2 * spec.p + 1)),
        KnotFamily::Torus2 => None,
    }
}

/// The path model for one (family, p, f, k) cell: E/N paths to
/// (m k + s, k) weakly below y = (x - x0)/m with m the framed slope base.
/// At the largest tabulated framing m reaches 0 and the line degenerates;
/// the constraint is then vacuous, realized as the shifted line
/// y <= x + k.
pub fn family_path_model(spec: &KnotFamilySpec, f: i64, k: u64) -> Result<PathModel> {
    let Some((base, s)) = slope_base(spec) else {
        return Err(Error::FamilyParam {
            family: spec.family.name().to_string(),
            msg: "no twist path model; use the torus model".to_string(),
        });
    };
    let m = base - f;
    if m < 0 {
        return Err(Error::FamilyParam {
            family: spec.family.name().to_string(),
            msg: format!("framing {f} exceeds the slope base {base}; no path model exists"),
        });
    }
    let x = (m as u64 * k + s as u64) as usize;
    let y = k as usize;
    let (s_den, x0) = if m == 0 {
        (1, -(k as i64))
    } else {
        (m, 0)
    };
    Ok(PathModel {
        x,
        y,
        s_num: 1,
        s_den,
        x0,
        strictness: Strictness::Weak,
        steps: Steps::EN,
    })
}

/// The Raney parameters whose values the family's path counts equal:
/// R_(m+1, s+1) in terms of the framed slope base m and endpoint offset s.
pub fn family_raney_params(spec: &KnotFamilySpec, f: i64) -> Result<RaneyParams> {
    let Some((base, s)) = slope_base(spec) else {
        return Err(Error::FamilyParam {
            family: spec.family.name().to_string(),
            msg: "no Raney closed form for this family".to_string(),
        });
    };
    let m = base - f;
    if m < 0 {
        return Err(Error::FamilyParam {
            family: spec.family.name().to_string(),
            msg: format!("framing {f} exceeds the slope base {base}; no closed form exists"),
        });
    }
    Ok(RaneyParams {
        m: (m + 1) as u64,
        n: (s + 1) as u64,
    })
}

/// Framings with frozen cross-check data for a family member; anything
/// outside needs an explicit opt-in at the command layer.
pub fn tabulated_framings(spec: &KnotFamilySpec) -> Option<std::ops::RangeInclusive<i64>> {
    match (spec.family, spec.p) {
        (KnotFamily::NegTwist, -1) => Some(0..=1),
        (KnotFamily::NegTwist, -2) => Some(0..=4),
        (KnotFamily::NegTwist, -3) => Some(0..=5),
        (KnotFamily::PosTwist, 2) => Some(0..=4),
        (KnotFamily::PosTwist, 3 | 4) => Some(0..=5),
        (KnotFamily::DoubleTwist3, 1) => Some(0..=5),
        (KnotFamily::DoubleTwist3, 2) => Some(0..=3),
        _ => None,
    }
}

/// The torus knot T(2, 2p+1) model: paths to ((2p+1)k, 2k) below the line
/// y = 2x/(2p+1), optionally with the diagonal step.
pub fn torus_path_model(p: i64, k: u64, with_diagonal: bool) -> PathModel {
    assert!(p >= 1, "torus parameter must be at least 1");
    PathModel {
        x: ((2 * p + 1) as u64 * k) as usize,
        y: (2 * k) as usize,
        s_num: 2,
        s_den: 2 * p + 1,
        x0: 0,
        strictness: Strictness::Weak,
        steps: if with_diagonal { Steps::END } else { Steps::EN },
    }
}
