//! Lee-ball and ℓ_p-ball combinatorics: the ball size `k(n,e)`, the moment
//! `p(n,e)`, their exact polynomial forms, the base-3 digit invariant δ₃,
//! and brute-force point enumeration.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactarith::{binomial, factorial, to_digits};
use crate::{Error, Result};

/// `k(n,e) = #B^n(e) = Σ_i 2^i C(n,i) C(e,i)`.
///
/// Conventions: `k(0,e) = 1` for `e >= 0` (the dimension-0 ball is the empty
/// vector), `k(n,e) = 0` for `n < 0` or `e < 0`.
pub fn lee_ball_size(n: i64, e: i64) -> BigInt {
    if n < 0 || e < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    let mut pow2 = BigInt::one();
    for i in 0..=n.min(e) {
        acc += &pow2 * binomial(n, i) * binomial(e, i);
        pow2 *= 2;
    }
    acc
}

/// `p(n,e) = Σ_{i=0}^{e} 2i²·k(n−1, e−i)`, the main coefficient of the
/// order-1 Q-polynomial of the Lee ball.
pub fn p1(n: i64, e: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=e.max(0) {
        acc += BigInt::from(2 * i * i) * lee_ball_size(n - 1, e - i);
    }
    acc
}

/// `p₂(n,e) = 2·Σ_{a+b=e} a⁴ k(n−1,b) − 12·Σ_{a+b+c=e} a²b²k(n−2,c)`.
///
/// This is the explicit two-partition form, kept independent of the general
/// partition-sum engine so the two routes can check each other.
pub fn p2(n: i64, e: i64) -> BigInt {
    let mut first = BigInt::zero();
    for a in 0..=e.max(0) {
        first += BigInt::from(a).pow(4) * lee_ball_size(n - 1, e - a);
    }
    let mut second = BigInt::zero();
    for a in 0..=e.max(0) {
        for b in 0..=(e - a).max(0) {
            second += BigInt::from(a * a * b * b) * lee_ball_size(n - 2, e - a - b);
        }
    }
    first * 2 - second * 12
}

/// Position of the highest base-3 digit of `e` equal to 1, or `Infinite`
/// when no digit equals 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delta3 {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Delta3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta3::Finite(i) => write!(f, "{i}"),
            Delta3::Infinite => write!(f, "infinity"),
        }
    }
}

pub fn delta3(e: u64) -> Result<Delta3> {
    if e == 0 {
        return Err(Error::InvalidArgument("delta3 requires e >= 1".into()));
    }
    let digits = to_digits(e, 3, 0)?.digits;
    let mut best = None;
    for (i, &d) in digits.iter().enumerate() {
        if d == 1 {
            best = Some(i as u32);
        }
    }
    Ok(best.map_or(Delta3::Infinite, Delta3::Finite))
}

/// Dense univariate polynomial with exact integer coefficients.
/// `coeffs[i]` is the coefficient of degree `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
    var: String,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>, var: &str) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs, var: var.to_string() }
    }

    pub fn zero(var: &str) -> Self {
        IntPolynomial::new(vec![BigInt::zero()], var)
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    fn add_assign(&mut self, other: &IntPolynomial) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
    }

    /// JSON coefficient array (ascending degree, decimal strings).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending-degree human form, e.g. `8e^3 + 12e^2 + 16e + 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            let mag = c.abs();
            if !wrote {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "{}", self.var)?,
                1 => write!(f, "{mag}{}", self.var)?,
                _ if mag.is_one() => write!(f, "{}^{deg}", self.var)?,
                _ => write!(f, "{mag}{}^{deg}", self.var)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `n!·k(n,e)` as an exact integer polynomial of degree `n` in `e`, obtained
/// by expanding each `C(e,i)` as the falling factorial `e(e−1)…(e−i+1)/i!`.
pub fn scaled_size_polynomial_in_e(n: u32) -> IntPolynomial {
    let n = n as i64;
    let n_fact = factorial(n as u64);
    let mut total = IntPolynomial::zero("e");
    let mut pow2 = BigInt::one();
    for i in 0..=n {
        // falling factorial e(e-1)...(e-i+1) as a polynomial in e
        let mut ff = vec![BigInt::one()];
        for t in 0..i {
            let mut next = vec![BigInt::zero(); ff.len() + 1];
            for (d, c) in ff.iter().enumerate() {
                next[d + 1] += c;
                next[d] += c * BigInt::from(-t);
            }
            ff = next;
        }
        let scale = &pow2 * binomial(n, i) * &n_fact / factorial(i as u64);
        let term: Vec<BigInt> = ff.into_iter().map(|c| c * &scale).collect();
        total.add_assign(&IntPolynomial::new(term, "e"));
        pow2 *= 2;
    }
    total
}

/// Which Lee-ball quantity `polynomial_in_n` describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    K,
    P1,
    P2,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Quantity::K => "k",
            Quantity::P1 => "p1",
            Quantity::P2 => "p2",
        }
    }

    fn eval(&self, n: i64, e: i64) -> BigInt {
        match self {
            Quantity::K => lee_ball_size(n, e),
            Quantity::P1 => p1(n, e),
            Quantity::P2 => p2(n, e),
        }
    }

    fn degree(&self, e: u32) -> usize {
        match self {
            Quantity::K => e as usize,
            Quantity::P1 | Quantity::P2 => e.saturating_sub(1) as usize,
        }
    }

    // smallest n at which the quantity agrees with its polynomial extension
    fn min_n(&self) -> i64 {
        match self {
            Quantity::K | Quantity::P1 => 1,
            Quantity::P2 => 2,
        }
    }
}

/// The minimal positive integer `scale` and integer polynomial `poly` with
/// `scale·quantity(n,e) = poly(n)` for all `n >= n_min` (1 for k and p1,
/// 2 for p2), computed by exact rational interpolation and verified at three
/// extra points.
pub fn polynomial_in_n(quantity: Quantity, e: u32) -> Result<(BigInt, IntPolynomial)> {
    if e == 0 {
        return Err(Error::InvalidArgument("polynomial_in_n requires e >= 1".into()));
    }
    let deg = quantity.degree(e);
    let start = quantity.min_n();
    let nodes: Vec<i64> = (start..start + deg as i64 + 1).collect();
    let values: Vec<BigRational> = nodes
        .iter()
        .map(|&n| BigRational::from_integer(quantity.eval(n, e as i64)))
        .collect();

    // Newton divided differences
    let mut table = values;
    let mut newton = vec![table[0].clone()];
    for level in 1..=deg {
        for i in 0..table.len() - 1 {
            let dx = BigRational::from_integer(BigInt::from(nodes[i + level] - nodes[i]));
            table[i] = (&table[i + 1] - &table[i]) / dx;
        }
        table.pop();
        newton.push(table[0].clone());
    }

    // expand to monomial coefficients
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    let mut basis = vec![BigRational::one()]; // ∏_{t<i}(x - nodes[t])
    for (i, c) in newton.iter().enumerate() {
        for (d, b) in basis.iter().enumerate() {
            coeffs[d] += c * b;
        }
        if i < deg {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            let root = BigRational::from_integer(BigInt::from(nodes[i]));
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= b * &root;
            }
            basis = next;
        }
    }

    let mut scale = BigInt::one();
    for c in &coeffs {
        scale = scale.lcm(c.denom());
    }
    let int_coeffs: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    let poly = IntPolynomial::new(int_coeffs, "n");

    // guard against a wrong degree bound
    for extra in 1..=3i64 {
        let n = start + deg as i64 + extra;
        if poly.eval_i64(n) != &scale * quantity.eval(n, e as i64) {
            return Err(Error::InterpolationCheck(format!(
                "{}(n,{e}) does not match its interpolant at n={n}",
                quantity.name()
            )));
        }
    }
    Ok((scale, poly))
}

/// ℓ_p norm selector for ball enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    L(u32),
    Inf,
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Norm::L(p) => write!(f, "{p}"),
            Norm::Inf => write!(f, "inf"),
        }
    }
}

/// Default cap on the number of enumerated points.
pub const DEFAULT_MAX_POINTS: usize = 10_000_000;

/// A finite set of `n`-dimensional integer vectors, stored sorted and
/// without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl PointSet {
    pub fn new(dim: usize, mut points: Vec<Vec<i64>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::InvalidArgument(format!(
                    "point {p:?} has dimension {}, expected {dim}",
                    p.len()
                )));
            }
        }
        points.sort();
        points.dedup();
        Ok(PointSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    /// Line-oriented text form: one space-separated vector per line, sorted.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_lines(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let p = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<i64>>>()?;
            points.push(p);
        }
        if points.is_empty() {
            return Err(Error::Parse("no points found".into()));
        }
        let dim = points[0].len();
        PointSet::new(dim, points)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.points
                .iter()
                .map(|p| serde_json::Value::Array(p.iter().map(|&x| x.into()).collect()))
                .collect(),
        )
    }
}

/// Enumerates the ℓ_p ball of radius `e` in `Z^n` exactly (integer p-th
/// powers only), with the default point cap.
pub fn enumerate_ball(n: u32, e: u32, norm: Norm) -> Result<PointSet> {
    enumerate_ball_capped(n, e, norm, DEFAULT_MAX_POINTS)
}

pub fn enumerate_ball_capped(n: u32, e: u32, norm: Norm, cap: usize) -> Result<PointSet> {
    let dim = n as usize;
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut point = vec![0i64; dim];

    fn rec_lp(
        coord: usize,
        budget: &BigInt,
        e: i64,
        p: u32,
        point: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        cap: usize,
    ) -> Result<()> {
        if coord == point.len() {
            if out.len() >= cap {
                return Err(Error::EnumerationCap { cap });
            }
            out.push(point.clone());
            return Ok(());
        }
        for x in -e..=e {
            let pow = BigInt::from(x.abs()).pow(p);
            if &pow <= budget {
                point[coord] = x;
                let rest = budget - pow;
                rec_lp(coord + 1, &rest, e, p, point, out, cap)?;
            }
        }
        point[coord] = 0;
        Ok(())
    }

    match norm {
        Norm::L(p) => {
            if p == 0 {
                return Err(Error::InvalidArgument("norm exponent must be >= 1".into()));
            }
            let budget = BigInt::from(e).pow(p);
            rec_lp(0, &budget, e as i64, p, &mut point, &mut out, cap)?;
        }
        Norm::Inf => {
            fn rec_inf(
                coord: usize,
                e: i64,
                point: &mut Vec<i64>,
                out: &mut Vec<Vec<i64>>,
                cap: usize,
            ) -> Result<()> {
                if coord == point.len() {
                    if out.len() >= cap {
                        return Err(Error::EnumerationCap { cap });
                    }
                    out.push(point.clone());
                    return Ok(());
                }
                for x in -e..=e {
                    point[coord] = x;
                    rec_inf(coord + 1, e, point, out, cap)?;
                }
                point[coord] = 0;
                Ok(())
            }
            rec_inf(0, e as i64, &mut point, &mut out, cap)?;
        }
    }
    PointSet::new(dim, out)
}

/// Regularity flags of a point set: symmetry under negation, invariance
/// under coordinate permutations, and the number of non-zero coordinates
/// needed to cover every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub is_symmetric: bool,
    pub is_sn_invariant: bool,
    pub e_regularity: usize,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.is_symmetric && self.is_sn_invariant
    }
}

pub fn regularity_report(set: &PointSet) -> RegularityReport {
    let is_symmetric = set.points().iter().all(|p| {
        let neg: Vec<i64> = p.iter().map(|x| -x).collect();
        set.contains(&neg)
    });

    // S_n invariance by orbit counting: group points by the multiset of
    // their coordinates and compare group sizes with orbit sizes.
    let mut groups: HashMap<Vec<i64>, usize> = HashMap::new();
    for p in set.points() {
        let mut key = p.clone();
        key.sort_unstable();
        *groups.entry(key).or_insert(0) += 1;
    }
    let n = set.dim() as u64;
    let is_sn_invariant = groups.iter().all(|(key, &count)| {
        let mut orbit = factorial(n);
        let mut run = 1u64;
        for i in 1..key.len() {
            if key[i] == key[i - 1] {
                run += 1;
            } else {
                orbit /= factorial(run);
                run = 1;
            }
        }
        if !key.is_empty() {
            orbit /= factorial(run);
        }
        orbit == BigInt::from(count)
    });

    let e_regularity = set
        .points()
        .iter()
        .map(|p| p.iter().filter(|&&x| x != 0).count())
        .max()
        .unwrap_or(0);

    RegularityReport { is_symmetric, is_sn_invariant, e_regularity }
}
