//! Cyclic and bicyclic sieving verification.
//!
//! A triple `(X, C_n, f)` passes when, for every `d`, the number of elements
//! fixed by `g^d` equals `f(ξ^d)`. Values are compared exactly in cyclotomic
//! residue arithmetic; a value that is not a rational integer is reported as
//! its own failure mode.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::promotion::{promote, promote_pow, successor_indices};
use crate::qpoly::{kostka_foulkes, modified_kf, q_binomial, q_int, BiPoly, CycloValue, LaurentPoly};
use crate::shapes::{Composition, Partition, SkewShape};
use crate::skewrsk::{enumerate_matrices, rotate_columns};
use crate::tableaux::{enumerate_ssyt, enumerate_syt_ribbon, Tableau};
use crate::{QPoly, QTPoly};

/// A permutation of `0..len` together with a declared order `n` such that
/// applying it `n` times is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicAction {
    perm: Vec<usize>,
    order: usize,
    cycle_of: Vec<usize>,
    pos: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl CyclicAction {
    pub fn from_perm(perm: Vec<usize>, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::OutOfRange("group order must be positive".into()));
        }
        let len = perm.len();
        let mut cycle_of = vec![usize::MAX; len];
        let mut pos = vec![0; len];
        let mut cycles = Vec::new();
        for start in 0..len {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while cycle_of[i] == usize::MAX {
                cycle_of[i] = cycles.len();
                pos[i] = cyc.len();
                cyc.push(i);
                i = *perm.get(i).ok_or(Error::NotClosed(i))?;
                if i >= len {
                    return Err(Error::NotClosed(start));
                }
            }
            if i != start {
                return Err(Error::NotClosed(i));
            }
            if order % cyc.len() != 0 {
                return Err(Error::OrderMismatch { order, index: start });
            }
            cycles.push(cyc);
        }
        Ok(CyclicAction { perm, order, cycle_of, pos, cycles })
    }

    /// The action of `f` on `xs`.
    pub fn from_map<T, F>(xs: &[T], f: F, order: usize) -> Result<Self>
    where
        T: Eq + Hash + Sync,
        F: Fn(&T) -> Result<T> + Sync,
    {
        Self::from_perm(successor_indices(xs, f)?, order)
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Orbit lengths, one entry per orbit, ascending.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    /// Image of `x` under `g^k` (any integer `k`).
    pub fn apply_pow(&self, x: usize, k: i64) -> usize {
        let cyc = &self.cycles[self.cycle_of[x]];
        let len = cyc.len() as i64;
        cyc[(self.pos[x] as i64 + k).rem_euclid(len) as usize]
    }

    /// Number of elements fixed by `g^d`.
    pub fn fixed_points(&self, d: i64) -> u64 {
        self.cycles.iter().filter(|c| d.rem_euclid(c.len() as i64) == 0).map(|c| c.len() as u64).sum()
    }

    /// `g^k` as an action of order `n / gcd(n, k)`.
    pub fn power(&self, k: usize) -> CyclicAction {
        let perm = (0..self.len()).map(|x| self.apply_pow(x, k as i64)).collect();
        let order = self.order / self.order.gcd(&k);
        CyclicAction::from_perm(perm, order.max(1)).expect("powers of an action are actions")
    }

    fn commutes_with(&self, other: &CyclicAction) -> bool {
        self.len() == other.len() && (0..self.len()).all(|x| self.perm[other.perm[x]] == other.perm[self.perm[x]])
    }
}

/// `Σ_orbits [s]_{q^{n/s}}` over orbits of size `s`: the polynomial that
/// sieves any action by construction.
pub fn orbit_polynomial(act: &CyclicAction) -> QPoly {
    let n = act.order() as i64;
    let mut out = QPoly::zero();
    for s in act.orbit_sizes() {
        let step = n / s as i64;
        for k in 0..s as i64 {
            out.add_term(k * step, BigInt::from(1));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Exact value of the polynomial at a root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Integer(BigInt),
    /// Not a rational integer; holds the residue in display form.
    NonInteger(String),
}

impl Evaluation {
    fn of(v: &CycloValue<BigInt>) -> Self {
        match v.as_integer() {
            Some(c) => Evaluation::Integer(c),
            None => Evaluation::NonInteger(v.to_string()),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Evaluation::Integer(c) => Some(c),
            Evaluation::NonInteger(_) => None,
        }
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Integer(c) => write!(f, "{c}"),
            Evaluation::NonInteger(s) => write!(f, "{s}"),
        }
    }
}

/// Integers serialise as JSON numbers when they fit in an `i64`, as strings otherwise.
impl Serialize for Evaluation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Evaluation::Integer(c) => match c.to_i64() {
                Some(v) => s.serialize_i64(v),
                None => s.serialize_str(&c.to_string()),
            },
            Evaluation::NonInteger(r) => s.serialize_str(r),
        }
    }
}

/// Why a row failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Failure {
    /// The evaluation is not a rational integer.
    NonInteger,
    /// The evaluation is a negative integer.
    Negative,
    /// An integer that differs from the fixed-point count.
    Mismatch,
}

fn judge(fixed: u64, eval: &Evaluation) -> Option<Failure> {
    match eval {
        Evaluation::NonInteger(_) => Some(Failure::NonInteger),
        Evaluation::Integer(c) if c.is_negative() => Some(Failure::Negative),
        Evaluation::Integer(c) if *c != BigInt::from(fixed) => Some(Failure::Mismatch),
        Evaluation::Integer(_) => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub d: usize,
    pub fixed: u64,
    pub eval: Evaluation,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

/// Outcome of [`csp_check`], one row per exponent `d = 0..n−1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub order: usize,
    pub rows: Vec<CheckRow>,
    pub verdict: Verdict,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn fixed_counts(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.fixed).collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.order)?;
        writeln!(f, "{:>4} {:>10} {:>10}  ok", "d", "fixed", "f(xi^d)")?;
        for r in &self.rows {
            write!(f, "{:>4} {:>10} {:>10}  {}", r.d, r.fixed, r.eval.to_string(), if r.ok { "yes" } else { "no" })?;
            if let Some(fl) = r.failure {
                write!(f, " ({})", serde_json::to_value(fl).unwrap().as_str().unwrap_or(""))?;
            }
            writeln!(f)?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

/// Compares fixed points of `act^d` with `f(ξ^d)` for `d = 0..n−1`.
pub fn csp_check(act: &CyclicAction, f: &QPoly) -> CheckReport {
    let n = act.order();
    let rows: Vec<CheckRow> = (0..n)
        .into_par_iter()
        .map(|d| {
            let fixed = act.fixed_points(d as i64);
            let eval = Evaluation::of(&f.eval_at_root(n as u64, d as i64));
            let failure = judge(fixed, &eval);
            CheckRow { d, fixed, eval, ok: failure.is_none(), failure }
        })
        .collect();
    let verdict = if rows.iter().all(|r| r.ok) { Verdict::Pass } else { Verdict::Fail };
    CheckReport { order: n, rows, verdict }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiCheckRow {
    pub i: usize,
    pub j: usize,
    pub fixed: u64,
    pub eval: Evaluation,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

/// Outcome of [`bicsp_check`], one row per pair `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiCheckReport {
    pub orders: (usize, usize),
    pub rows: Vec<BiCheckRow>,
    pub verdict: Verdict,
}

impl BiCheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for BiCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "orders {} x {}", self.orders.0, self.orders.1)?;
        writeln!(f, "{:>4} {:>4} {:>10} {:>12}  ok", "i", "j", "fixed", "f(xi^i,z^j)")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>4} {:>4} {:>10} {:>12}  {}",
                r.i,
                r.j,
                r.fixed,
                r.eval.to_string(),
                if r.ok { "yes" } else { "no" }
            )?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

/// Compares fixed points of `c1^i c2^j` with `f(ξ^i, ζ^j)`; `q` pairs with
/// `c1` and `t` with `c2`.
pub fn bicsp_check(c1: &CyclicAction, c2: &CyclicAction, f: &QTPoly) -> Result<BiCheckReport> {
    if !c1.commutes_with(c2) {
        return Err(Error::Invalid { what: "bicyclic action", detail: "generators do not commute".into() });
    }
    let (k1, k2) = (c1.order(), c2.order());
    let pairs: Vec<(usize, usize)> = (0..k1).flat_map(|i| (0..k2).map(move |j| (i, j))).collect();
    let rows = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let fixed =
                (0..c1.len()).filter(|&x| c1.apply_pow(c2.apply_pow(x, j as i64), i as i64) == x).count() as u64;
            let eval = Evaluation::of(&f.eval_at_roots(k1 as u64, i as i64, k2 as u64, j as i64));
            let failure = judge(fixed, &eval);
            BiCheckRow { i, j, fixed, eval, ok: failure.is_none(), failure }
        })
        .collect::<Vec<_>>();
    let verdict = if rows.iter().all(|r| r.ok) { Verdict::Pass } else { Verdict::Fail };
    Ok(BiCheckReport { orders: (k1, k2), rows, verdict })
}

/// Smallest `E` in `0..n` such that `q^E f` is a non-negative integer at
/// every `n`-th root of unity, if any.
pub fn find_shift<C: crate::scalar::Coeff>(f: &LaurentPoly<C>, n: u64) -> Option<i64> {
    (0..n as i64).find(|&e| {
        let g = f.shift(e);
        (0..n as i64).all(|d| g.eval_at_root(n, d).as_integer().is_some_and(|v| !v.is_negative()))
    })
}

// ---------------------------------------------------------------------------
// Named instances

/// One polynomial test attached to an instance.
#[derive(Debug, Clone)]
pub enum Sieve {
    Cyclic { action: CyclicAction, poly: QPoly },
    Bicyclic { first: CyclicAction, second: CyclicAction, poly: QTPoly },
}

#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub sieve: Sieve,
    /// Reported but not part of the verdict.
    pub informational: bool,
}

/// A set with its action(s) and polynomial(s), ready to verify.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub size: usize,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Report {
    Cyclic(CheckReport),
    Bicyclic(BiCheckReport),
}

impl Report {
    pub fn passed(&self) -> bool {
        match self {
            Report::Cyclic(r) => r.passed(),
            Report::Bicyclic(r) => r.passed(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Cyclic(r) => write!(f, "{r}"),
            Report::Bicyclic(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LabeledReport {
    pub label: String,
    pub polynomial: String,
    pub informational: bool,
    pub report: Report,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub instance: String,
    pub params: BTreeMap<String, String>,
    pub size: usize,
    pub checks: Vec<LabeledReport>,
    pub verdict: Verdict,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The first report that counts towards the verdict.
    pub fn primary(&self) -> Option<&Report> {
        self.checks.iter().find(|c| !c.informational).map(|c| &c.report)
    }
}

impl fmt::Display for InstanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "{} ({}), |X| = {}", self.instance, params.join(", "), self.size)?;
        for c in &self.checks {
            let tag = if c.informational { " [informational]" } else { "" };
            writeln!(f, "\n{}{tag}\npolynomial: {}", c.label, c.polynomial)?;
            writeln!(f, "{}", c.report)?;
        }
        write!(f, "\noverall: {}", self.verdict)
    }
}

impl Instance {
    pub fn run(&self) -> Result<InstanceReport> {
        let mut checks = Vec::new();
        for c in &self.checks {
            let (report, polynomial) = match &c.sieve {
                Sieve::Cyclic { action, poly } => (Report::Cyclic(csp_check(action, poly)), poly.to_string()),
                Sieve::Bicyclic { first, second, poly } => {
                    (Report::Bicyclic(bicsp_check(first, second, poly)?), poly.to_string())
                }
            };
            checks.push(LabeledReport { label: c.label.clone(), polynomial, informational: c.informational, report });
        }
        let ok = checks.iter().filter(|c| !c.informational).all(|c| c.report.passed());
        Ok(InstanceReport {
            instance: self.name.clone(),
            params: self.params.clone(),
            size: self.size,
            checks,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        })
    }
}

/// Parameters for [`named_instance`]; each instance reads the fields it needs.
#[derive(Debug, Clone, Default)]
pub struct InstanceParams {
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub nu: Option<Partition>,
    pub gamma: Option<Composition>,
    /// Rectangles as `(width, height)`.
    pub rects: Option<Vec<(usize, usize)>>,
}

pub const INSTANCE_NAMES: &[&str] = &[
    "stretched-hooks",
    "disjoint-rows",
    "rectangle-fixed-content",
    "disjoint-rectangles",
    "two-row-ribbon",
    "three-row-ribbon",
    "binary-words",
    "rhoades-matrices",
];

fn need<T: Clone>(v: &Option<T>, name: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Invalid { what: "parameters", detail: format!("missing --{name}") })
}

fn cap(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange(what.to_string()))
    }
}

fn big(c: usize) -> QPoly {
    QPoly::constant(BigInt::from(c))
}

fn promotion_action(xs: &[Tableau], m: u32, power: usize, order: usize) -> Result<CyclicAction> {
    CyclicAction::from_map(xs, |t| promote_pow(t, m, power), order)
}

/// Builds one of the pre-packaged sieving instances (see [`INSTANCE_NAMES`]).
pub fn named_instance(name: &str, p: &InstanceParams) -> Result<Instance> {
    let mut params = BTreeMap::new();
    let mut checks = Vec::new();
    let size;
    match name {
        "stretched-hooks" => {
            let (a, b, n) = (need(&p.a, "a")?, need(&p.b, "b")?, need(&p.n, "n")?);
            cap(a + b <= 8 && n <= 4 && n >= 1, "stretched hooks need n in 1..=4 and a + b <= 8")?;
            params.extend([("a".into(), a.to_string()), ("b".into(), b.to_string()), ("n".into(), n.to_string())]);
            let fam = crate::planepart::Shst::new(a, b, n);
            let xs = fam.enumerate();
            size = xs.len();
            let m = fam.alphabet() as u32;
            let action = CyclicAction::from_map(&xs, |t| promote(t, m), (a + b).max(1))?;
            let kt: QPoly = modified_kf(&fam.shape(), &fam.content())?;
            let derived = (n * b * (b + 1) / 2) as i64;
            let stated = (n * b * b.saturating_sub(1) / 2) as i64;
            checks.push(Check {
                label: format!("promotion, q^-{derived} times the cocharge polynomial"),
                sieve: Sieve::Cyclic { action: action.clone(), poly: kt.shift(-derived) },
                informational: false,
            });
            checks.push(Check {
                label: format!("promotion, q^-{stated} times the cocharge polynomial (shift n*C(b,2))"),
                sieve: Sieve::Cyclic { action, poly: kt.shift(-stated) },
                informational: true,
            });
        }
        "disjoint-rows" => {
            let (nu, n) = (need(&p.nu, "nu")?, need(&p.n, "n")?);
            cap(
                !nu.is_empty() && n >= 1 && nu.size() * n <= 16 && nu.size() <= 8,
                "disjoint rows need 1 <= |nu| <= 8 and n|nu| <= 16",
            )?;
            params.extend([("nu".into(), nu.to_string()), ("n".into(), n.to_string())]);
            let sm = crate::skewrsk::Sm::new(nu, n);
            let xs = sm.enumerate();
            size = xs.len();
            let m = sm.m();
            let action = promotion_action(&xs, m as u32, 1, m)?;
            let charge_poly: QPoly = kostka_foulkes(&sm.shape(), &sm.content())?;
            let cocharge_poly: QPoly = modified_kf(&sm.shape(), &sm.content())?;
            checks.push(Check {
                label: "promotion, cocharge polynomial".into(),
                sieve: Sieve::Cyclic { action: action.clone(), poly: cocharge_poly },
                informational: false,
            });
            checks.push(Check {
                label: "promotion, charge polynomial".into(),
                sieve: Sieve::Cyclic { action, poly: charge_poly },
                informational: true,
            });
        }
        "rectangle-fixed-content" => {
            let (a, b, gamma) = (need(&p.a, "a")?, need(&p.b, "b")?, need(&p.gamma, "gamma")?);
            let d = p.d.unwrap_or(1);
            let m = gamma.len();
            cap(a * b <= 16 && m <= 12, "rectangles need ab <= 16 and at most 12 letters")?;
            check_rotation(&gamma, d)?;
            if gamma.size() != a * b {
                return Err(Error::ShapeMismatch(format!("content {gamma} does not fill a {a}x{b} rectangle")));
            }
            params.extend([
                ("a".into(), a.to_string()),
                ("b".into(), b.to_string()),
                ("gamma".into(), gamma.to_string()),
                ("d".into(), d.to_string()),
            ]);
            let shape = SkewShape::straight(Partition::rectangle(a, b));
            let xs = enumerate_ssyt(&shape, &gamma);
            size = xs.len();
            let action = promotion_action(&xs, m as u32, d, m / d)?;
            let k: QPoly = kostka_foulkes(&shape, &gamma.sorted().into_composition())?;
            let sq: usize = gamma.parts().iter().map(|g| g * g).sum();
            let shift = (a * a * b) as i64 - sq as i64;
            if shift % 2 != 0 {
                return Err(Error::Invalid { what: "parameters", detail: "a^2 b - sum of squares is odd".into() });
            }
            checks.push(Check {
                label: format!("promotion^{d}, q^{} times the charge polynomial", shift / 2),
                sieve: Sieve::Cyclic { action, poly: k.shift(shift / 2) },
                informational: false,
            });
        }
        "disjoint-rectangles" => {
            let (rects, gamma) = (need(&p.rects, "rects")?, need(&p.gamma, "gamma")?);
            let d = p.d.unwrap_or(1);
            let m = gamma.len();
            let cells: usize = rects.iter().map(|(w, h)| w * h).sum();
            cap(cells <= 16 && m <= 12 && !rects.is_empty(), "rectangles need at most 16 cells and 12 letters")?;
            check_rotation(&gamma, d)?;
            let shape = SkewShape::rectangles(&rects);
            if gamma.size() != cells {
                return Err(Error::ShapeMismatch(format!("content {gamma} does not fill {shape}")));
            }
            let rs: Vec<String> = rects.iter().map(|(w, h)| format!("{w}x{h}")).collect();
            params.extend([
                ("rects".into(), rs.join(",")),
                ("gamma".into(), gamma.to_string()),
                ("d".into(), d.to_string()),
            ]);
            let xs = enumerate_ssyt(&shape, &gamma);
            size = xs.len();
            let action = promotion_action(&xs, m as u32, d, m / d)?;
            let k: QPoly = kostka_foulkes(&shape, &gamma.sorted().into_composition())?;
            let e = find_shift(&k, (m / d) as u64).ok_or_else(|| Error::Invalid {
                what: "instance",
                detail: "no shift makes the charge polynomial non-negative at every root of unity".into(),
            })?;
            params.insert("shift".into(), e.to_string());
            checks.push(Check {
                label: format!("promotion^{d}, q^{e} times the charge polynomial"),
                sieve: Sieve::Cyclic { action, poly: k.shift(e) },
                informational: false,
            });
        }
        "two-row-ribbon" => {
            let (m, b) = (need(&p.m, "m")?, need(&p.b, "b")?);
            cap(m >= 2 && (1..m).contains(&b) && m <= 14, "two-row ribbons need 1 <= b < m <= 14")?;
            params.extend([("m".into(), m.to_string()), ("b".into(), b.to_string())]);
            let xs = enumerate_syt_ribbon(&Composition::new(vec![m - b, b]))?;
            size = xs.len();
            let g = CyclicAction::from_map(&xs, |t| promote(t, m as u32), m * (m - 1))?;
            let first = g.power(m).with_order(m - 1)?;
            let second = g.power(m - 1).with_order(m)?;
            let binom: usize = num_integer::binomial(m, b);
            let f1 = &big(binom - m) + &q_int(m - 1);
            let f2 = &(&q_binomial(m, b) - &q_int(m)) + &big(m - 1);
            let psi = &(&BiPoly::in_q(&q_int(m - 1)) + &BiPoly::in_t(&q_binomial(m, b))) - &BiPoly::in_t(&q_int(m));
            checks.push(Check {
                label: format!("promotion^{m}"),
                sieve: Sieve::Cyclic { action: first.clone(), poly: f1 },
                informational: false,
            });
            checks.push(Check {
                label: format!("promotion^{}", m - 1),
                sieve: Sieve::Cyclic { action: second.clone(), poly: f2 },
                informational: false,
            });
            checks.push(Check {
                label: format!("promotion^{m} (q) x promotion^{} (t)", m - 1),
                sieve: Sieve::Bicyclic { first, second, poly: psi },
                informational: false,
            });
        }
        "three-row-ribbon" => {
            let m = need(&p.m, "m")?;
            cap((4..=14).contains(&m), "three-row ribbons need 4 <= m <= 14")?;
            params.insert("m".into(), m.to_string());
            let xs = enumerate_syt_ribbon(&Composition::new(vec![1, m - 2, 1]))?;
            size = xs.len();
            let g = CyclicAction::from_map(&xs, |t| promote(t, m as u32), (m - 1) * (m - 2))?;
            let first = g.power(m - 2).with_order(m - 1)?;
            let second = g.power(m - 1).with_order(m - 2)?;
            let psi = &BiPoly::in_t(&q_int(m - 2)) + &BiPoly::in_q(&(&big(m - 3) * &q_int(m - 1)));
            checks.push(Check {
                label: format!("promotion^{} (q) x promotion^{} (t)", m - 2, m - 1),
                sieve: Sieve::Bicyclic { first, second, poly: psi },
                informational: false,
            });
        }
        "binary-words" => {
            let (n, k) = (need(&p.n, "n")?, need(&p.k, "k")?);
            cap(n >= 1 && n <= 20 && k <= n, "binary words need 1 <= n <= 20 and k <= n")?;
            params.extend([("n".into(), n.to_string()), ("k".into(), k.to_string())]);
            let xs: Vec<Vec<u8>> = (0u32..1 << n)
                .filter(|w| w.count_ones() as usize == k)
                .map(|w| (0..n).map(|i| ((w >> i) & 1) as u8).collect())
                .collect();
            size = xs.len();
            let action = CyclicAction::from_map(
                &xs,
                |w| {
                    let mut v = w.clone();
                    v.rotate_left(1);
                    Ok(v)
                },
                n,
            )?;
            checks.push(Check {
                label: "rotation, q-binomial".into(),
                sieve: Sieve::Cyclic { action, poly: q_binomial(n, k) },
                informational: false,
            });
        }
        "rhoades-matrices" => {
            let (nu, n) = (need(&p.nu, "nu")?, need(&p.n, "n")?);
            let m = nu.size();
            cap(m >= 1 && m <= 6 && n >= 1 && n * m <= 12, "matrix instances need 1 <= |nu| <= 6 and n|nu| <= 12")?;
            params.extend([("nu".into(), nu.to_string()), ("n".into(), n.to_string())]);
            let rows: Vec<usize> = nu.parts().iter().map(|&x| x * n).collect();
            let xs = enumerate_matrices(&rows, &vec![n; m]);
            size = xs.len();
            let action = CyclicAction::from_map(&xs, |x| Ok(rotate_columns(x, 1)), m)?;
            let charge_poly = rhoades_polynomial(&nu, n)?;
            let nmu = (n * m * m.saturating_sub(1) / 2) as i64;
            checks.push(Check {
                label: "column rotation, cocharge form".into(),
                sieve: Sieve::Cyclic { action: action.clone(), poly: charge_poly.invert().shift(nmu) },
                informational: false,
            });
            checks.push(Check {
                label: "column rotation, charge form".into(),
                sieve: Sieve::Cyclic { action, poly: charge_poly },
                informational: true,
            });
        }
        other => return Err(Error::UnknownInstance(other.to_string())),
    }
    Ok(Instance { name: name.to_string(), params, size, checks })
}

impl CyclicAction {
    /// The same permutation with a different declared order.
    pub fn with_order(self, order: usize) -> Result<Self> {
        CyclicAction::from_perm(self.perm, order)
    }
}

fn check_rotation(gamma: &Composition, d: usize) -> Result<()> {
    let m = gamma.len();
    if d == 0 || m == 0 || m % d != 0 {
        return Err(Error::Invalid { what: "parameters", detail: format!("d = {d} must divide the length {m}") });
    }
    if gamma.rotate_left(d) != *gamma {
        return Err(Error::Invalid {
            what: "parameters",
            detail: format!("{gamma} is not invariant under rotation by {d}"),
        });
    }
    Ok(())
}

/// `Σ_{λ ⊢ mn} K_{λ,n^m}(q) K_{λ,nν}(1)`, the charge generating function
/// of `SM(ν, n)`.
pub fn rhoades_polynomial(nu: &Partition, n: usize) -> Result<QPoly> {
    let m = nu.size();
    let rect = Composition::constant(n, m);
    let nnu = nu.stretch(n).into_composition();
    let mut out = QPoly::zero();
    for lam in Partition::all_of(m * n) {
        let shape = SkewShape::straight(lam);
        let c = enumerate_ssyt(&shape, &nnu).len();
        if c == 0 {
            continue;
        }
        let k: QPoly = kostka_foulkes(&shape, &rect)?;
        out = &out + &(&k * &big(c));
    }
    Ok(out)
}

/// `Σ_d fix(g^d)` divided by the order: the number of orbits, if integral.
pub fn burnside_orbit_count(report: &CheckReport) -> Option<u64> {
    let total: u64 = report.rows.iter().map(|r| r.fixed).sum();
    let n = report.order as u64;
    (total % n).is_zero().then(|| total / n)
}
