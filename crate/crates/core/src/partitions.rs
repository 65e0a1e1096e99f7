//! Integer partitions, set partitions, and the expansion of augmented
//! monomial symmetric functions into power sums.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A partition of a positive integer: non-increasing positive parts.
///
/// The `Ord` implementation is the canonical display order used throughout
/// the crate: descending lexicographic, so for weight 3 the order is
/// `(3) < (2,1) < (1,1,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPartition {
    parts: Vec<u64>,
}

impl IntPartition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("partition must be non-empty".into()));
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidArgument(format!(
                    "parts must be non-increasing, got {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("parts must be positive".into()));
        }
        Ok(IntPartition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid partition always has at least one part
    }

    /// Part multiplicities: `t_h = #{i : parts_i = h}`.
    pub fn multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// The partition with every part doubled.
    pub fn doubled(&self) -> IntPartition {
        IntPartition {
            parts: self.parts.iter().map(|p| p * 2).collect(),
        }
    }

    /// Parses comma-separated non-increasing positive integers, e.g. `2,1,1`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        IntPartition::new(parts)
    }
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        // descending lexicographic: (k) first, (1,...,1) last
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All partitions of `k` with at most `max_length` parts, in descending
/// lexicographic order. `max_length = 0` yields no partitions.
pub fn partitions_of(k: u64, max_length: usize) -> Vec<IntPartition> {
    fn rec(remaining: u64, max_part: u64, slots: usize, prefix: &mut Vec<u64>, out: &mut Vec<IntPartition>) {
        if remaining == 0 {
            out.push(IntPartition { parts: prefix.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        // a partition of `remaining` into `slots` parts each <= m needs m*slots >= remaining
        for part in (1..=hi).rev() {
            if part * slots as u64 >= remaining {
                prefix.push(part);
                rec(remaining - part, part, slots - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k >= 1 && max_length >= 1 {
        let mut prefix = Vec::new();
        rec(k, k, max_length, &mut prefix, &mut out);
    }
    out
}

/// A partition of the ground set `{1, ..., ground}` into disjoint non-empty
/// blocks. Blocks are stored sorted, ordered by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    ground: usize,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>, ground: usize) -> Result<Self> {
        let mut seen = vec![false; ground + 1];
        let mut count = 0usize;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x < 1 || x > ground || seen[x] {
                    return Err(Error::InvalidArgument(format!(
                        "element {x} out of range or repeated"
                    )));
                }
                seen[x] = true;
                count += 1;
            }
        }
        if count != ground {
            return Err(Error::InvalidArgument("blocks do not cover the ground set".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks, ground })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn ground(&self) -> usize {
        self.ground
    }
}

/// Iterator over all set partitions of `{1, ..., ground}` in restricted
/// growth string order. Yields `Bell(ground)` partitions.
pub struct SetPartitionIter {
    rgs: Vec<usize>,
    ground: usize,
    done: bool,
}

pub fn set_partitions(ground: usize) -> SetPartitionIter {
    SetPartitionIter {
        rgs: vec![0; ground],
        ground,
        done: ground == 0,
    }
}

impl SetPartitionIter {
    fn current(&self) -> SetPartition {
        let nblocks = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { blocks, ground: self.ground }
    }

    fn advance(&mut self) {
        // successor in restricted growth string order
        for i in (1..self.ground).rev() {
            let prefix_max = *self.rgs[..i].iter().max().unwrap();
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for j in i + 1..self.ground {
                    self.rgs[j] = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let item = self.current();
        self.advance();
        Some(item)
    }
}

/// The Möbius-type weight `μ(ν) = ∏ (−1)^{|ν_i|−1}(|ν_i|−1)!`.
pub fn mu(nu: &SetPartition) -> BigInt {
    let mut acc = BigInt::one();
    for block in nu.blocks() {
        let s = block.len() as u64;
        let f = crate::exactarith::factorial(s - 1);
        if s % 2 == 0 {
            acc *= -f;
        } else {
            acc *= f;
        }
    }
    acc
}

/// The merged partition `j * ν`: parts are the block-sums of `j`.
pub fn star(j: &IntPartition, nu: &SetPartition) -> Result<IntPartition> {
    if nu.ground() != j.len() {
        return Err(Error::InvalidArgument(format!(
            "set partition of [{}] does not match partition length {}",
            nu.ground(),
            j.len()
        )));
    }
    let sums: Vec<u64> = nu
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&i| j.parts()[i - 1]).sum())
        .collect();
    IntPartition::from_unsorted(sums)
}

/// An integer linear combination of power-sum symmetric functions `S_λ`,
/// keyed by partitions of a fixed weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumPoly {
    order: u64,
    coeffs: BTreeMap<IntPartition, BigInt>,
}

impl PowerSumPoly {
    pub fn new(order: u64) -> Self {
        PowerSumPoly { order, coeffs: BTreeMap::new() }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn add_term(&mut self, key: IntPartition, coeff: BigInt) {
        debug_assert_eq!(key.weight(), self.order);
        let entry = self.coeffs.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, key: &IntPartition) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluates at an integer vector: `Σ coeff(λ)·∏_i (Σ_j x_j^{λ_i})`.
    pub fn eval(&self, x: &[i64]) -> BigInt {
        let mut total = BigInt::zero();
        for (lambda, c) in &self.coeffs {
            total += c * power_sum_value(lambda, x);
        }
        total
    }

    /// Canonical text form, e.g. `1*S[2,2] - 1*S[4]` in partition order.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                out.push_str(&format!("{c}*S[{lambda}]"));
            } else if c.is_negative() {
                out.push_str(&format!(" - {}*S[{lambda}]", -c));
            } else {
                out.push_str(&format!(" + {c}*S[{lambda}]"));
            }
        }
        out
    }

    /// JSON object keyed by partition strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (lambda, c) in &self.coeffs {
            map.insert(lambda.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

use num_traits::Signed;

/// `S_λ(x) = ∏_i (Σ_j x_j^{λ_i})`.
pub fn power_sum_value(lambda: &IntPartition, x: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for &t in lambda.parts() {
        let mut s = BigInt::zero();
        for &xi in x {
            s += BigInt::from(xi).pow(t as u32);
        }
        acc *= s;
    }
    acc
}

/// Merca's expansion of the augmented monomial symmetric function `m̃_j`
/// into power sums: `m̃_j = Σ_{ν ∈ P_ℓ} μ(ν)·S_{j*ν}`.
pub fn merca_expand(j: &IntPartition) -> PowerSumPoly {
    let mut poly = PowerSumPoly::new(j.weight());
    for nu in set_partitions(j.len()) {
        let key = star(j, &nu).expect("ground sets match");
        poly.add_term(key, mu(&nu));
    }
    poly
}

/// Convenience wrapper matching the operation name.
pub fn power_sum_eval(poly: &PowerSumPoly, x: &[i64]) -> BigInt {
    poly.eval(x)
}
