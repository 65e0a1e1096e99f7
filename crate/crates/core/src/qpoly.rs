//! Power-sum expansions of the Q-polynomials `Q_B^k(x) = Σ_b ⟨x,b⟩^{2k}` of
//! regular lattice sets, and the closed-form main coefficients `p_k(n,e)`
//! for Lee balls.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactarith::{factorial, reduced_multinomial};
use crate::leeball::{lee_ball_size, regularity_report, PointSet};
use crate::partitions::{
    mu, partitions_of, power_sum_value, set_partitions, star, IntPartition, PowerSumPoly,
};
use crate::{Error, Result};

/// The moment `B^{(2j)} = Σ_{b∈B} b₁^{2j₁}···b_ℓ^{2j_ℓ}` by direct
/// enumeration. Zero when `j` has more parts than `B` has coordinates.
pub fn moment_sum_enumerated(set: &PointSet, j: &IntPartition) -> BigInt {
    if j.len() > set.dim() {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for b in set.points() {
        let mut term = BigInt::one();
        for (s, &part) in j.parts().iter().enumerate() {
            term *= BigInt::from(b[s]).pow(2 * part as u32);
        }
        acc += term;
    }
    acc
}

/// The same moment for the Lee ball `B^n(e)`, without enumerating it:
/// `Σ_{i₁+…+i_{ℓ+1}=e} 2^ℓ · i₁^{2j₁}···i_ℓ^{2j_ℓ} · k(n−ℓ, i_{ℓ+1})`.
pub fn lee_moment_sum(n: i64, e: i64, j: &IntPartition) -> BigInt {
    fn rec(parts: &[u64], remaining: i64, n: i64, l: i64, prod: &BigInt) -> BigInt {
        if parts.is_empty() {
            return prod * lee_ball_size(n - l, remaining);
        }
        let mut acc = BigInt::zero();
        // i_s = 0 contributes nothing since every exponent 2j_s is >= 2
        for i in 1..=remaining {
            let p = prod * BigInt::from(i).pow(2 * parts[0] as u32);
            acc += rec(&parts[1..], remaining - i, n, l, &p);
        }
        acc
    }
    let l = j.len();
    rec(j.parts(), e.max(0), n, l as i64, &BigInt::one()) << l
}

fn partition_weight_sign(j: &IntPartition) -> BigInt {
    let f = factorial(j.len() as u64 - 1);
    if j.len() % 2 == 0 {
        -f
    } else {
        f
    }
}

/// `p_k(n,e)` for the Lee ball by the composition formula: a sum over
/// partitions `j` of `k` of reduced multinomials times Lee moments.
pub fn pk_lee(k: u64, n: i64, e: i64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidArgument("pk_lee requires k >= 1".into()));
    }
    let mut total = BigInt::zero();
    for j in partitions_of(k, k as usize) {
        let c = reduced_multinomial(2 * k, &j.doubled())?;
        total += c * partition_weight_sign(&j) * lee_moment_sum(n, e, &j);
    }
    Ok(total)
}

fn check_regular(set: &PointSet) -> Result<usize> {
    let rep = regularity_report(set);
    if !rep.is_symmetric {
        return Err(Error::NonRegular("not closed under negation".into()));
    }
    if !rep.is_sn_invariant {
        return Err(Error::NonRegular("not invariant under coordinate permutations".into()));
    }
    Ok(rep.e_regularity)
}

/// `p_k(B)` for an arbitrary regular set `B`, from enumerated moments.
pub fn pk_regular(k: u64, set: &PointSet) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidArgument("pk_regular requires k >= 1".into()));
    }
    let e_reg = check_regular(set)?;
    let bound = set.dim().min(e_reg);
    let mut total = BigInt::zero();
    for j in partitions_of(k, bound) {
        let c = reduced_multinomial(2 * k, &j.doubled())?;
        total += c * partition_weight_sign(&j) * moment_sum_enumerated(set, &j);
    }
    Ok(total)
}

/// Power-sum expansion of `Q_B^k`: the coefficient of `S_{2k}` (which equals
/// `p_k(B)`) kept apart from the remaining terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    k: u64,
    main: BigInt,
    tail: PowerSumPoly,
}

impl QExpansion {
    pub fn k(&self) -> u64 {
        self.k
    }

    /// The coefficient of `S_{2k}`, i.e. `p_k(B)`.
    pub fn main_coefficient(&self) -> &BigInt {
        &self.main
    }

    /// All terms on partitions of `2k` other than `(2k)` itself.
    pub fn tail(&self) -> &PowerSumPoly {
        &self.tail
    }

    pub fn eval(&self, x: &[i64]) -> BigInt {
        let top = IntPartition::new(vec![2 * self.k]).expect("k >= 1");
        &self.main * power_sum_value(&top, x) + self.tail.eval(x)
    }

    /// Text form `p_k = <int>; Q = <int>*S[2k] + ...`.
    pub fn to_text(&self) -> String {
        let mut out = format!("p_{} = {}; Q = {}*S[{}]", self.k, self.main, self.main, 2 * self.k);
        let tail = self.tail.to_text();
        if tail != "0" {
            if tail.starts_with('-') {
                out.push_str(&format!(" - {}", &tail[1..]));
            } else {
                out.push_str(&format!(" + {tail}"));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("k".into(), self.k.into());
        map.insert("main".into(), serde_json::Value::String(self.main.to_string()));
        map.insert("tail".into(), self.tail.to_json());
        serde_json::Value::Object(map)
    }
}

fn expansion_with_bound(k: u64, set: &PointSet, bound: usize) -> Result<QExpansion> {
    let mut poly = PowerSumPoly::new(2 * k);
    for j in partitions_of(k, bound) {
        let c = reduced_multinomial(2 * k, &j.doubled())?;
        let m = moment_sum_enumerated(set, &j);
        if m.is_zero() {
            continue;
        }
        let cm = c * m;
        for nu in set_partitions(j.len()) {
            let key = star(&j, &nu)?.doubled();
            poly.add_term(key, &cm * mu(&nu));
        }
    }
    let top = IntPartition::new(vec![2 * k])?;
    let main = poly.coeff(&top);
    let mut tail = PowerSumPoly::new(2 * k);
    for (lambda, c) in poly.terms() {
        if lambda != &top {
            tail.add_term(lambda.clone(), c.clone());
        }
    }
    Ok(QExpansion { k, main, tail })
}

/// Full integer-coefficient power-sum expansion of `Q_B^k` for a regular
/// set `B`, via the Merca expansion of each augmented monomial.
pub fn q_expansion(k: u64, set: &PointSet) -> Result<QExpansion> {
    if k == 0 {
        return Err(Error::InvalidArgument("q_expansion requires k >= 1".into()));
    }
    let e_reg = check_regular(set)?;
    expansion_with_bound(k, set, set.dim().min(e_reg))
}

/// `Q_B^k(x) = Σ_{b∈B} ⟨x,b⟩^{2k}` by direct summation — the independent
/// oracle for `q_expansion`.
pub fn q_eval_direct(k: u64, set: &PointSet, x: &[i64]) -> Result<BigInt> {
    if x.len() != set.dim() {
        return Err(Error::InvalidArgument(format!(
            "vector of dimension {} against a point set of dimension {}",
            x.len(),
            set.dim()
        )));
    }
    let mut acc = BigInt::zero();
    for b in set.points() {
        let inner: i64 = b.iter().zip(x.iter()).map(|(bi, xi)| bi * xi).sum();
        acc += BigInt::from(inner).pow(2 * k as u32);
    }
    Ok(acc)
}

/// Explicit three-partition form of `p₃(n,e)`, independent of the general
/// partition-sum engine:
/// `2Σa⁶k(n−1,b) − 60Σa⁴b²k(n−2,c) + 240Σa²b²c²k(n−3,d)`.
pub fn p3(n: i64, e: i64) -> BigInt {
    let e = e.max(0);
    let mut first = BigInt::zero();
    for a in 0..=e {
        first += BigInt::from(a).pow(6) * lee_ball_size(n - 1, e - a);
    }
    let mut second = BigInt::zero();
    for a in 0..=e {
        for b in 0..=e - a {
            second += BigInt::from(a).pow(4) * BigInt::from(b).pow(2)
                * lee_ball_size(n - 2, e - a - b);
        }
    }
    let mut third = BigInt::zero();
    for a in 0..=e {
        for b in 0..=e - a {
            for c in 0..=e - a - b {
                third += BigInt::from(a * a * b * b * c * c)
                    * lee_ball_size(n - 3, e - a - b - c);
            }
        }
    }
    first * 2 - second * 60 + third * 240
}
