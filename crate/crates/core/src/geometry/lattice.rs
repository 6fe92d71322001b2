//! Integer classification of classes `D` on a smooth quartic surface with
//! `pH + mC + nD ~ 0`, where `C` is a smooth rational quartic (`C^2 = -2`,
//! `C.H = 4`). The intersection matrix
//!
//! ```text
//!     | 4  4  x |
//! M = | 4 -2  y |      x = H.D, y = C.D, z = D^2 = 2q
//!     | x  y  z |
//! ```
//!
//! is singular, i.e. `x^2 + 4xy - 2y^2 - 24q = 0`, and `(p, m, n)` spans its
//! kernel.

use serde::Serialize;

/// `C . D0` for the residual `D0 ~ 2H - C`.
const C_DOT_D0: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSolution {
    pub x: i64,
    pub y: i64,
    pub q: i64,
    /// Family parameter with `t = 2 + 3a`, `q = 2 - 3a^2` (only for `x = 4`).
    pub a: Option<i64>,
    pub t: i64,
    pub p: i64,
    pub m: i64,
    pub n: i64,
}

impl LatticeSolution {
    pub fn z(&self) -> i64 {
        2 * self.q
    }

    /// `x^2 + 4xy - 2y^2 - 24q`, which is `det M / 2`.
    pub fn determinant_form(&self) -> i64 {
        det_form(self.x, self.y, self.q)
    }

    /// Coordinates `(α, β)` of `D = αC + βD0`, as numerators over 24.
    pub fn cone_coordinates(&self) -> (i64, i64) {
        cone_coordinates(self.x, self.y)
    }

    pub fn is_c(&self) -> bool {
        (self.x, self.y, self.q) == (4, -2, -1)
    }
}

/// Why a candidate was discarded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    /// `D = C` itself.
    IsC,
    /// `C.D < 0` with `D != C`.
    NegativeIntersection,
    /// `m = 0` or `n = 0`.
    ZeroCoefficient,
    /// `gcd(m, n) > 1`.
    NotCoprime,
    /// `D` lies outside the cone spanned by `C` and `D0`.
    NotEffective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeCandidate {
    pub solution: LatticeSolution,
    pub rejection: Option<Rejection>,
}

pub fn det_form(x: i64, y: i64, q: i64) -> i64 {
    x * x + 4 * x * y - 2 * y * y - 24 * q
}

fn cone_coordinates(x: i64, y: i64) -> (i64, i64) {
    // 4α + 4β = x, -2α + C_DOT_D0 β = y
    debug_assert_eq!(C_DOT_D0, 10);
    (5 * x - 2 * y, 2 * y + x)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Primitive integer kernel vector of `M`, normalised to `n > 0`.
fn kernel(x: i64, y: i64) -> (i64, i64, i64) {
    // cross product of the first two rows (4, 4, x) and (4, -2, y)
    let (p, m, n) = (4 * y + 2 * x, 4 * x - 4 * y, -24);
    let g = gcd(gcd(p, m), n);
    (-p / g, -m / g, -n / g)
}

/// Every integer solution with `1 <= x <= max_deg` and `|y| <= y_window`,
/// tagged with the first filter that rejects it.
pub fn lattice_scan(max_deg: i64, y_window: i64) -> Vec<LatticeCandidate> {
    let mut out = Vec::new();
    for x in 1..=max_deg {
        for y in -y_window..=y_window {
            let num = x * x + 4 * x * y - 2 * y * y;
            if num % 24 != 0 {
                continue;
            }
            let q = num / 24;
            debug_assert_eq!(y % 2, 0);
            let t = y / 2;
            let a = (x == 4 && (t - 2) % 3 == 0).then_some((t - 2) / 3).filter(|a| q == 2 - 3 * a * a);
            let (p, m, n) = kernel(x, y);
            let solution = LatticeSolution { x, y, q, a, t, p, m, n };
            debug_assert_eq!(solution.determinant_form(), 0);
            debug_assert_eq!(x * p + y * m + 2 * q * n, 0);
            let (alpha, beta) = solution.cone_coordinates();
            let rejection = if solution.is_c() {
                Some(Rejection::IsC)
            } else if y < 0 {
                Some(Rejection::NegativeIntersection)
            } else if m == 0 || n == 0 {
                Some(Rejection::ZeroCoefficient)
            } else if gcd(m, n) != 1 {
                Some(Rejection::NotCoprime)
            } else if alpha < 0 || beta < 0 {
                Some(Rejection::NotEffective)
            } else {
                None
            };
            out.push(LatticeCandidate { solution, rejection });
        }
    }
    out
}

/// Surviving classes for `1 <= x <= max_deg`. The `y` window
/// `|y| <= 10 max_deg + 10` contains the whole effective range
/// `-x/2 <= y <= 5x/2`.
pub fn lattice_classification(max_deg: i64) -> Vec<LatticeSolution> {
    lattice_scan(max_deg, 10 * max_deg + 10)
        .into_iter()
        .filter(|c| c.rejection.is_none())
        .map(|c| c.solution)
        .collect()
}
