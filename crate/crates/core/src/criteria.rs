//! Non-existence certification for linear perfect Lee codes and lattice
//! tilings: the Zhang-Ge congruence system, its classification by the base-3
//! digit invariant δ₃, the general odd-prime condition, residue-class
//! scanners, and reproducible reports for the tabulated computations.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactarith::{binomial, dw_symbol_1, dw_symbol_2, is_prime, residue};
use crate::leeball::{
    delta3, enumerate_ball, lee_ball_size, p1, polynomial_in_n, regularity_report,
    scaled_size_polynomial_in_e, Delta3, Norm, PointSet, Quantity,
};
use crate::qpoly::{moment_sum_enumerated, pk_lee, pk_regular};
use crate::partitions::IntPartition;
use crate::{Error, Result};

/// Which congruence system a certificate reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    ZhangGe,
    PCondition(u64),
    GeneralTiling(u64),
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertKind::ZhangGe => write!(f, "zhang-ge"),
            CertKind::PCondition(p) => write!(f, "{p}-condition"),
            CertKind::GeneralTiling(p) => write!(f, "tiling-{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NonExistence,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NonExistence => write!(f, "non-existence"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// One recorded quantity. `modulus = 0` marks a plain value rather than a
/// congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub quantity: String,
    pub value: BigInt,
    pub modulus: u64,
    pub residue: u64,
}

impl Evidence {
    fn congruence(quantity: impl Into<String>, value: BigInt, modulus: u64) -> Evidence {
        let r = residue(&value, modulus);
        Evidence { quantity: quantity.into(), value, modulus, residue: r }
    }

    fn plain(quantity: impl Into<String>, value: BigInt) -> Evidence {
        Evidence { quantity: quantity.into(), value, modulus: 0, residue: 0 }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{} = {}", self.quantity, self.value)
        } else {
            write!(
                f,
                "{} = {} \u{2261} {} (mod {})",
                self.quantity, self.value, self.residue, self.modulus
            )
        }
    }
}

/// A self-contained record of a non-existence check: every residue needed to
/// re-verify the verdict is listed in `evidence`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertKind,
    pub subject: String,
    pub evidence: Vec<Evidence>,
    pub verdict: Verdict,
    pub reason: Option<String>,
}

impl Certificate {
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("kind".into(), self.kind.to_string().into());
        map.insert("subject".into(), self.subject.clone().into());
        let ev: Vec<serde_json::Value> = self
            .evidence
            .iter()
            .map(|e| {
                let mut m = serde_json::Map::new();
                m.insert("quantity".into(), e.quantity.clone().into());
                m.insert("value".into(), e.value.to_string().into());
                m.insert("modulus".into(), e.modulus.into());
                m.insert("residue".into(), e.residue.into());
                serde_json::Value::Object(m)
            })
            .collect();
        map.insert("evidence".into(), serde_json::Value::Array(ev));
        map.insert("verdict".into(), self.verdict.to_string().into());
        if let Some(r) = &self.reason {
            map.insert("reason".into(), r.clone().into());
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate: {}", self.kind)?;
        writeln!(f, "subject: {}", self.subject)?;
        for e in &self.evidence {
            writeln!(f, "  {e}")?;
        }
        if let Some(r) = &self.reason {
            writeln!(f, "reason: {r}")?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

/// The Zhang-Ge condition at `(n,e)`:
/// `k(n,e) ≡ 3 or 6 (mod 9)` and `p(n,e) ≡ 0 (mod 3)`.
pub fn zhang_ge_condition(n: i64, e: i64) -> Certificate {
    let k = lee_ball_size(n, e);
    let p = p1(n, e);
    let ev_k = Evidence::congruence(format!("k({n},{e})"), k, 9);
    let ev_p = Evidence::congruence(format!("p({n},{e})"), p, 3);
    let holds = (ev_k.residue == 3 || ev_k.residue == 6) && ev_p.residue == 0;
    Certificate {
        kind: CertKind::ZhangGe,
        subject: format!("(n={n}, e={e})"),
        evidence: vec![ev_k, ev_p],
        verdict: if holds { Verdict::NonExistence } else { Verdict::Inconclusive },
        reason: None,
    }
}

/// All `n <= n_max` satisfying the Zhang-Ge condition for the given `e`.
pub fn zg_members(e: i64, n_max: i64) -> Vec<i64> {
    (1..=n_max)
        .filter(|&n| zhang_ge_condition(n, e).verdict == Verdict::NonExistence)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZGStatus {
    Empty,
    Infinite,
}

impl fmt::Display for ZGStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZGStatus::Empty => write!(f, "empty"),
            ZGStatus::Infinite => write!(f, "infinite"),
        }
    }
}

/// A residue class `n0 + 3^h·N` contained in the set of dimensions
/// satisfying the Zhang-Ge condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub n0: u64,
    pub modulus_exponent: u32,
}

impl Witness {
    pub fn modulus(&self) -> BigInt {
        BigInt::from(3).pow(self.modulus_exponent)
    }
}

/// Classification of the Zhang-Ge set of a radius `e`: empty, or infinite
/// with an explicit witness residue class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZGClassification {
    pub e: u64,
    pub status: ZGStatus,
    pub reason: String,
    pub witness: Option<Witness>,
}

impl ZGClassification {
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("e".into(), self.e.into());
        map.insert("status".into(), self.status.to_string().into());
        map.insert("reason".into(), self.reason.clone().into());
        if let Some(w) = &self.witness {
            let mut wm = serde_json::Map::new();
            wm.insert("n0".into(), w.n0.into());
            wm.insert("modulus".into(), w.modulus().to_string().into());
            map.insert("witness".into(), serde_json::Value::Object(wm));
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for ZGClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e = {}: {} ({})", self.e, self.status, self.reason)?;
        if let Some(w) = &self.witness {
            write!(f, "; witness class n \u{2261} {} (mod {})", w.n0, w.modulus())?;
        }
        Ok(())
    }
}

/// Number of base-3 digits of `e`.
fn digit_length_3(e: u64) -> u32 {
    let mut len = 0u32;
    let mut m = e;
    while m > 0 {
        len += 1;
        m /= 3;
    }
    len.max(1)
}

/// Decides whether the Zhang-Ge set of `e` is empty or infinite, keyed on
/// δ₃(e), and produces a witness residue class in the infinite case.
pub fn zg_classify(e: u64) -> Result<ZGClassification> {
    let d = delta3(e)?;
    let (status, reason, witness) = match d {
        Delta3::Infinite => (
            ZGStatus::Empty,
            "delta3(e) = infinity: k(n,e) is never 3 or 6 mod 9".to_string(),
            None,
        ),
        Delta3::Finite(0) => (
            ZGStatus::Empty,
            "delta3(e) = 0: k(n,e) is never 3 or 6 mod 9".to_string(),
            None,
        ),
        Delta3::Finite(1) => {
            let len = digit_length_3(e);
            match e % 9 {
                3 | 5 => (
                    ZGStatus::Infinite,
                    format!("delta3(e) = 1 with e \u{2261} {} (mod 9)", e % 9),
                    Some(Witness { n0: 12, modulus_exponent: len.max(4) }),
                ),
                4 => (
                    ZGStatus::Infinite,
                    "delta3(e) = 1 with e \u{2261} 4 (mod 9)".to_string(),
                    Some(Witness { n0: 3, modulus_exponent: len.max(3) }),
                ),
                _ => unreachable!("delta3(e) = 1 forces e mod 9 in {{3,4,5}}"),
            }
        }
        Delta3::Finite(2) => (
            ZGStatus::Infinite,
            "delta3(e) = 2".to_string(),
            Some(Witness { n0: 12, modulus_exponent: digit_length_3(e).max(4) }),
        ),
        Delta3::Finite(d) => {
            let m = d - 1;
            let n0 = 3u64.pow(m + 1) + 3u64.pow(m);
            (
                ZGStatus::Infinite,
                format!("delta3(e) = {d}"),
                Some(Witness { n0, modulus_exponent: digit_length_3(e).max(m + 3) }),
            )
        }
    };
    Ok(ZGClassification { e, status, reason, witness })
}

fn require_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

/// The general `p`-condition at `(n,e)` for an odd prime `p`:
/// `k(n,e) ≡ tp (mod p²)` for some `1 <= t < p`, `p_i(n,e) ≢ 0 (mod p)` for
/// `1 <= i < (p−1)/2`, and `p_{(p−1)/2}(n,e) ≡ 0 (mod p)`.
pub fn pk_condition(n: i64, e: i64, p: u64) -> Result<Certificate> {
    require_odd_prime(p)?;
    let k = lee_ball_size(n, e);
    let ev_k = Evidence::congruence(format!("k({n},{e})"), k, p * p);
    let mut holds = ev_k.residue != 0 && ev_k.residue % p == 0;
    let mut evidence = vec![ev_k];
    let half = (p - 1) / 2;
    for i in 1..=half {
        let pi = pk_lee(i, n, e)?;
        let ev = Evidence::congruence(format!("p_{i}({n},{e})"), pi, p);
        if i < half {
            holds &= ev.residue != 0;
        } else {
            holds &= ev.residue == 0;
        }
        evidence.push(ev);
    }
    Ok(Certificate {
        kind: CertKind::PCondition(p),
        subject: format!("(n={n}, e={e})"),
        evidence,
        verdict: if holds { Verdict::NonExistence } else { Verdict::Inconclusive },
        reason: None,
    })
}

/// Non-existence of a lattice tiling by an arbitrary regular set `B`:
/// `|B| = pm` with `p ∤ m`, `p_k(B) ≢ 0 (mod p)` for `1 <= k < (p−1)/2`, and
/// `p_{(p−1)/2}(B) ≡ 0 (mod p)`. Non-regular input yields `Inconclusive`.
pub fn general_tiling_criterion(set: &PointSet, p: u64) -> Result<Certificate> {
    require_odd_prime(p)?;
    let subject = format!("point set of size {} in dimension {}", set.len(), set.dim());
    let kind = CertKind::GeneralTiling(p);

    let rep = regularity_report(set);
    if !rep.is_regular() {
        return Ok(Certificate {
            kind,
            subject,
            evidence: vec![Evidence::plain("|B|", BigInt::from(set.len()))],
            verdict: Verdict::Inconclusive,
            reason: Some("the set is not regular".into()),
        });
    }

    let size = BigInt::from(set.len());
    let mut valuation = 0u64;
    let mut cofactor = size.clone();
    while (&cofactor % p).is_zero() && !cofactor.is_zero() {
        cofactor /= p;
        valuation += 1;
    }
    let mut evidence = vec![
        Evidence::congruence("|B|", size, p * p),
        Evidence::plain(format!("v_{p}(|B|)"), BigInt::from(valuation)),
    ];
    let mut holds = valuation == 1;

    let half = (p - 1) / 2;
    for k in 1..=half {
        let pk = pk_regular(k, set)?;
        let ev = Evidence::congruence(format!("p_{k}(B)"), pk, p);
        if k < half {
            holds &= ev.residue != 0;
        } else {
            holds &= ev.residue == 0;
        }
        evidence.push(ev);
    }
    Ok(Certificate {
        kind,
        subject,
        evidence,
        verdict: if holds { Verdict::NonExistence } else { Verdict::Inconclusive },
        reason: None,
    })
}

/// All residues `r` modulo `modulus` whose dimension class satisfies the
/// `p`-condition for the given `e`. Each class is checked at three
/// representatives; a verdict mismatch means the modulus is not a period and
/// is reported as an error.
pub fn residue_scan(e: i64, p: u64, modulus: u64) -> Result<BTreeSet<u64>> {
    require_odd_prime(p)?;
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let mut hits = BTreeSet::new();
    for r in 0..modulus {
        let reps: [u64; 3] = if r == 0 {
            [modulus, 2 * modulus, 3 * modulus]
        } else {
            [r, r + modulus, r + 2 * modulus]
        };
        let mut verdicts = reps
            .iter()
            .map(|&n| Ok(pk_condition(n as i64, e, p)?.verdict))
            .collect::<Result<Vec<_>>>()?;
        let first = verdicts.remove(0);
        if verdicts.iter().any(|v| *v != first) {
            return Err(Error::NonPeriodicModulus { modulus, residue: r });
        }
        if first == Verdict::NonExistence {
            hits.insert(r);
        }
    }
    Ok(hits)
}

/// `η(a,b,c)` mod 9: the contribution of a digit pattern to `C(n,i)` mod 9
/// for `n = 3^{m+1} + 3^m`, evaluated through the two-digit symbols
/// `[1,1;a,b]·[1,0;b,c]/[1;b]` with the literal value 3 for out-of-range
/// symbols.
pub fn eta(a: u64, b: u64, c: u64) -> Result<u64> {
    let s1 = dw_symbol_2(1, 1, a, b, 3)?.to_integer(3);
    let s2 = dw_symbol_2(1, 0, b, c, 3)?.to_integer(3);
    let s3 = dw_symbol_1(1, b, 3)?.to_integer(3);
    let value = BigRational::new(s1 * s2, s3);
    if !value.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "eta({a},{b},{c}) is not an integer"
        )));
    }
    Ok(residue(&value.to_integer(), 9))
}

/// The mod-9 residue of `C(756, ẽ)` as a function of the two low base-3
/// digit blocks of `ẽ`, written as a signed binomial combination.
pub fn capital_f(e_tilde: i64) -> u64 {
    let terms: [(i64, i64); 9] = [
        (1, 0),
        (-3, 3),
        (3, 6),
        (-4, 9),
        (6, 18),
        (-4, 27),
        (3, 30),
        (-3, 33),
        (1, 36),
    ];
    let mut acc = BigInt::zero();
    for (c, b) in terms {
        acc += c * binomial(e_tilde, b);
    }
    residue(&acc, 9)
}

/// One verified claim inside a reproduction report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Pass/fail record of one tabulated computation, claim by claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReproReport {
    pub case: String,
    pub claims: Vec<Claim>,
}

impl ReproReport {
    pub fn pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    fn claim(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.claims.push(Claim { name: name.into(), pass, detail: detail.into() });
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("case".into(), self.case.clone().into());
        let claims: Vec<serde_json::Value> = self
            .claims
            .iter()
            .map(|c| {
                let mut m = serde_json::Map::new();
                m.insert("name".into(), c.name.clone().into());
                m.insert("pass".into(), c.pass.into());
                m.insert("detail".into(), c.detail.clone().into());
                serde_json::Value::Object(m)
            })
            .collect();
        map.insert("claims".into(), serde_json::Value::Array(claims));
        map.insert("pass".into(), self.pass().into());
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for ReproReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {}: {}", self.case, if self.pass() { "pass" } else { "FAIL" })?;
        for (i, c) in self.claims.iter().enumerate() {
            let tick = if c.pass { "ok" } else { "FAIL" };
            write!(f, "  [{tick}] {}: {}", c.name, c.detail)?;
            if i + 1 < self.claims.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// The reproducible computations: residue tables and polynomial identities
/// behind the main non-existence results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReproCase {
    Prop5,
    Prop6,
    Prop7,
    Prop8,
    Lemma7,
    Example5,
    Prop16,
    Prop17,
}

impl ReproCase {
    pub const ALL: [ReproCase; 8] = [
        ReproCase::Prop5,
        ReproCase::Prop6,
        ReproCase::Prop7,
        ReproCase::Prop8,
        ReproCase::Lemma7,
        ReproCase::Example5,
        ReproCase::Prop16,
        ReproCase::Prop17,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ReproCase::Prop5 => "prop5",
            ReproCase::Prop6 => "prop6",
            ReproCase::Prop7 => "prop7",
            ReproCase::Prop8 => "prop8",
            ReproCase::Lemma7 => "lemma7",
            ReproCase::Example5 => "example5",
            ReproCase::Prop16 => "prop16",
            ReproCase::Prop17 => "prop17",
        }
    }

    pub fn parse(s: &str) -> Result<ReproCase> {
        ReproCase::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown case {s:?}")))
    }
}

/// checks f(e) = 12!·k(12,e) ≡ 3⁶ or 2·3⁶ (mod 3⁷) over a list of radii
fn check_f12_family(
    report: &mut ReproReport,
    name: &str,
    radii: impl Iterator<Item = i64>,
    expected_count: usize,
) {
    let f = scaled_size_polynomial_in_e(12);
    let m37 = 3u64.pow(7);
    let lo = 3u64.pow(6);
    let hi = 2 * lo;
    let mut hits = 0usize;
    let mut total = 0usize;
    let mut bad = Vec::new();
    for e in radii {
        total += 1;
        let r = residue(&f.eval_i64(e), m37);
        if r == lo || r == hi {
            hits += 1;
        } else if bad.len() < 3 {
            bad.push(format!("e={e}: {r}"));
        }
    }
    let pass = hits == expected_count && total == expected_count;
    let detail = if pass {
        format!("all {hits} values of 12!\u{b7}k(12,e) are 3^6 or 2\u{b7}3^6 mod 3^7")
    } else {
        format!("{hits}/{total} values in range, expected {expected_count}; first misses: {bad:?}")
    };
    report.claim(name, pass, detail);
}

fn check_value(report: &mut ReproReport, name: &str, got: BigInt, expect: i64) {
    let pass = got == BigInt::from(expect);
    report.claim(name, pass, format!("{name} = {got}, expected {expect}"));
}

fn check_poly(
    report: &mut ReproReport,
    name: &str,
    quantity: Quantity,
    e: u32,
    scale: i64,
    coeffs: &[i64],
) {
    match polynomial_in_n(quantity, e) {
        Ok((s, poly)) => {
            let expect: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
            let pass = s == BigInt::from(scale) && poly.coeffs() == expect.as_slice();
            report.claim(
                name,
                pass,
                format!("{scale}\u{b7}{}(n,{e}) = {poly}", quantity.name()),
            );
        }
        Err(err) => report.claim(name, false, format!("interpolation failed: {err}")),
    }
}

fn check_scan(report: &mut ReproReport, name: &str, e: i64, p: u64, modulus: u64, expect: &[u64]) {
    match residue_scan(e, p, modulus) {
        Ok(got) => {
            let want: BTreeSet<u64> = expect.iter().copied().collect();
            let pass = got == want;
            let list: Vec<String> = got.iter().map(|r| r.to_string()).collect();
            report.claim(
                name,
                pass,
                format!("residues mod {modulus}: {{{}}}", list.join(", ")),
            );
        }
        Err(err) => report.claim(name, false, format!("scan failed: {err}")),
    }
}

pub fn reproduce(case: ReproCase) -> ReproReport {
    let mut report = ReproReport { case: case.name().into(), claims: Vec::new() };
    match case {
        ReproCase::Prop5 => {
            let radii = (0..243i64).flat_map(|b| [3 + 9 * b, 5 + 9 * b]);
            check_f12_family(&mut report, "f(a+9b) residues", radii, 486);
            let p3 = p1(12, 3);
            let p5 = p1(12, 5);
            check_value(&mut report, "p(12,3)", p3.clone(), 732);
            check_value(&mut report, "p(12,5)", p5.clone(), 45870);
            report.claim(
                "divisibility by 3",
                residue(&p3, 3) == 0 && residue(&p5, 3) == 0,
                "p(12,3) and p(12,5) are multiples of 3".to_string(),
            );
        }
        ReproCase::Prop6 => {
            let f = scaled_size_polynomial_in_e(3);
            report.claim(
                "cubic polynomial",
                format!("{f}") == "8e^3 + 12e^2 + 16e + 6",
                format!("3!\u{b7}k(3,e) = {f}"),
            );
            check_value(&mut report, "f(4)", f.eval_i64(4), 774);
            check_value(&mut report, "f(22)", f.eval_i64(22), 91350);
            let p = p1(3, 4);
            check_value(&mut report, "p(3,4)", p.clone(), 276);
            report.claim(
                "divisibility by 3",
                residue(&p, 3) == 0,
                "p(3,4) is a multiple of 3".to_string(),
            );
        }
        ReproCase::Prop7 => {
            let radii = (0..27i64)
                .flat_map(|b| (9..18i64).chain(63..72).map(move |a| a + 81 * b));
            check_f12_family(&mut report, "f(a'+81b') residues", radii, 486);
            let pass = (9..18i64).all(|a| residue(&p1(12, a), 3) == 0);
            report.claim(
                "p(12,a) divisibility",
                pass,
                "p(12,a) \u{2261} 0 (mod 3) for 9 <= a < 18".to_string(),
            );
        }
        ReproCase::Prop8 => {
            let three: Vec<i64> = (27..=35).chain(207..=215).collect();
            let six: Vec<i64> = (36..=53).chain(189..=206).collect();
            let pass3 = three.iter().all(|&t| capital_f(t) == 3);
            let pass6 = six.iter().all(|&t| capital_f(t) == 6);
            report.claim(
                "F \u{2261} 3 (mod 9)",
                pass3,
                "holds on [27,35] and [207,215]".to_string(),
            );
            report.claim(
                "F \u{2261} 6 (mod 9)",
                pass6,
                "holds on [36,53] and [189,206]".to_string(),
            );
        }
        ReproCase::Lemma7 => {
            let table: [(u64, u64, u64, u64); 13] = [
                (0, 0, 0, 1),
                (0, 0, 1, 3),
                (0, 0, 2, 3),
                (0, 1, 0, 4),
                (0, 1, 1, 0),
                (0, 1, 2, 0),
                (0, 2, 0, 6),
                (0, 2, 1, 0),
                (0, 2, 2, 0),
                (1, 0, 0, 4),
                (1, 0, 1, 3),
                (1, 0, 2, 3),
                (1, 1, 0, 1),
            ];
            for (a, b, c, expect) in table {
                match eta(a, b, c) {
                    Ok(got) => report.claim(
                        format!("eta({a},{b},{c})"),
                        got == expect,
                        format!("\u{2261} {got} (mod 9), expected {expect}"),
                    ),
                    Err(err) => {
                        report.claim(format!("eta({a},{b},{c})"), false, format!("{err}"))
                    }
                }
            }
        }
        ReproCase::Example5 => match enumerate_ball(3, 8, Norm::L(2)) {
            Ok(ball) => {
                check_value(&mut report, "|B|", BigInt::from(ball.len()), 2109);
                let j1 = IntPartition::new(vec![1]).expect("non-empty");
                check_value(
                    &mut report,
                    "p_1(B)",
                    moment_sum_enumerated(&ball, &j1),
                    26688,
                );
                match general_tiling_criterion(&ball, 3) {
                    Ok(cert) => report.claim(
                        "tiling criterion",
                        cert.verdict == Verdict::NonExistence,
                        format!("verdict: {}", cert.verdict),
                    ),
                    Err(err) => report.claim("tiling criterion", false, format!("{err}")),
                }
            }
            Err(err) => report.claim("enumeration", false, format!("{err}")),
        },
        ReproCase::Prop16 => {
            check_poly(&mut report, "45\u{b7}k(n,6)", Quantity::K, 6, 45,
                &[45, 138, 196, 120, 70, 12, 4]);
            check_poly(&mut report, "15\u{b7}p_1(n,6)", Quantity::P1, 6, 15,
                &[630, 1032, 720, 280, 60, 8]);
            check_poly(&mut report, "15\u{b7}p_2(n,6)", Quantity::P2, 6, 15,
                &[13230, 14232, 6360, 1480, 180, 8]);
            check_scan(&mut report, "residue scan", 6, 5, 125, &[22, 47, 72, 97, 122]);
        }
        ReproCase::Prop17 => {
            check_poly(&mut report, "315\u{b7}k(n,7)", Quantity::K, 7, 315,
                &[315, 1056, 1372, 1232, 490, 224, 28, 8]);
            check_poly(&mut report, "45\u{b7}p_1(n,7)", Quantity::P1, 7, 45,
                &[2520, 4488, 3512, 1560, 440, 72, 8]);
            check_poly(&mut report, "45\u{b7}p_2(n,7)", Quantity::P2, 7, 45,
                &[70560, 85704, 44912, 13080, 2240, 216, 8]);
            check_scan(&mut report, "residue scan", 7, 5, 125,
                &[13, 23, 38, 48, 63, 73, 88, 98, 113, 123]);
        }
    }
    report
}
