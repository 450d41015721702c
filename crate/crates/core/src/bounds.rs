//! Diameter recurrences, their ordered-Bell closed forms, and the
//! ρ-invariant and complexity bound constants built from them.
//!
//! Everything is exact. Decimal strings are produced only for display.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Runs `x(m) = base(m) + Σ_{k=1}^{m-1} x(k)·C(m+1, m-k)` with `x(0) = 0`
/// for `m = 0..=max`.
fn recurrence<F: Fn(usize) -> BigInt>(max: usize, base: F) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(max + 1);
    out.push(BigInt::zero());
    for m in 1..=max {
        let mut v = base(m);
        for (k, x) in out.iter().enumerate().take(m).skip(1) {
            v += x * binomial(m as u64 + 1, (m - k) as u64);
        }
        out.push(v);
    }
    out
}

/// `γ(0..=max)`: the diameter of `Ψ^m` on an `m`-simplex.
pub fn gamma_table(max: usize) -> Vec<BigInt> {
    recurrence(max, |m| pow2(m) * BigInt::from(m + 1))
}

/// `q(0..=max)`: the number of degenerate terms of `Ψ^m`.
pub fn q_table(max: usize) -> Vec<BigInt> {
    recurrence(max, |m| pow2(m) * BigInt::from(m as i64 - 1) + 1)
}

/// `c(0..=max)`: the diameter of `Φ^m`.
pub fn c_table(max: usize) -> Vec<BigInt> {
    recurrence(max, |m| pow2(m + 1) - 1)
}

pub fn gamma(m: usize) -> BigInt {
    gamma_table(m).pop().unwrap()
}

pub fn q_count(m: usize) -> BigInt {
    q_table(m).pop().unwrap()
}

pub fn c_bound(m: usize) -> BigInt {
    c_table(m).pop().unwrap()
}

/// Diameter `2^n (n+1)` of the cylinder homotopy, with `d(0) = 0`.
pub fn d(n: usize) -> BigInt {
    if n == 0 {
        BigInt::zero()
    } else {
        pow2(n) * BigInt::from(n + 1)
    }
}

/// Stored values of the earlier computer-generated control function.
pub const DELTA_BDH: [u64; 5] = [0, 6, 26, 186, 3410];

pub fn delta_bdh(m: usize) -> Result<BigInt> {
    DELTA_BDH
        .get(m)
        .map(|&v| BigInt::from(v))
        .ok_or_else(|| Error::Domain(format!("delta_bdh is tabulated only for m <= 4, got {m}")))
}

/// Ordered Bell numbers `B_0..=B_max`, from `B_k = Σ_{j=1}^k C(k,j) B_{k-j}`.
pub fn bell_table(max: usize) -> Vec<BigInt> {
    let mut b = vec![BigInt::one()];
    for k in 1..=max {
        let v = (1..=k)
            .map(|j| binomial(k as u64, j as u64) * &b[k - j])
            .sum();
        b.push(v);
    }
    b
}

pub fn bell(k: usize) -> BigInt {
    bell_table(k).pop().unwrap()
}

fn closed_form<F: Fn(usize, usize) -> BigInt>(m: usize, weight: F) -> BigInt {
    let b = bell_table(m);
    (0..m)
        .map(|k| weight(m, k) * binomial(m as u64 + 1, k as u64) * &b[k])
        .sum()
}

/// `γ(m) = Σ_{k<m} 2^{m-k}(m-k+1)·C(m+1,k)·B_k`.
pub fn gamma_closed(m: usize) -> BigInt {
    closed_form(m, |m, k| pow2(m - k) * BigInt::from(m - k + 1))
}

/// `q(m) = Σ_{k<m} (2^{m-k}(m-k-1)+1)·C(m+1,k)·B_k`.
pub fn q_closed(m: usize) -> BigInt {
    closed_form(m, |m, k| pow2(m - k) * BigInt::from(m - k - 1) + 1)
}

/// `c(m) = Σ_{k<m} (2·2^{m-k}-1)·C(m+1,k)·B_k`.
pub fn c_closed(m: usize) -> BigInt {
    closed_form(m, |m, k| pow2(m - k + 1) - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterFn {
    Gamma,
    Q,
    C,
    D,
    DeltaBdh,
}

impl DiameterFn {
    pub fn name(self) -> &'static str {
        match self {
            DiameterFn::Gamma => "gamma",
            DiameterFn::Q => "q",
            DiameterFn::C => "c",
            DiameterFn::D => "d",
            DiameterFn::DeltaBdh => "delta_bdh",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterTable {
    pub tag: DiameterFn,
    pub max: usize,
    pub values: Vec<BigInt>,
}

impl DiameterTable {
    pub fn new(tag: DiameterFn, max: usize) -> Result<Self> {
        let values = match tag {
            DiameterFn::Gamma => gamma_table(max),
            DiameterFn::Q => q_table(max),
            DiameterFn::C => c_table(max),
            DiameterFn::D => (0..=max).map(d).collect(),
            DiameterFn::DeltaBdh => (0..=max).map(delta_bdh).collect::<Result<_>>()?,
        };
        Ok(DiameterTable { tag, max, values })
    }
}

/// One row of the `tables` output. `delta_bdh` is absent past its range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub m: usize,
    pub gamma: BigInt,
    pub q: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub delta_bdh: Option<BigInt>,
}

pub fn table_rows(max: usize) -> Vec<TableRow> {
    let (g, q, c) = (gamma_table(max), q_table(max), c_table(max));
    (0..=max)
        .map(|m| TableRow {
            m,
            gamma: g[m].clone(),
            q: q[m].clone(),
            c: c[m].clone(),
            d: d(m),
            delta_bdh: delta_bdh(m).ok(),
        })
        .collect()
}

/// Renders `x` with `digits` digits after the point, truncated toward zero.
pub fn decimal(x: &BigRational, digits: usize) -> String {
    let neg = x.is_negative();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (x.numer().abs() * &scale) / x.denom();
    let (int, frac) = scaled.div_rem(&scale);
    let mut s = if neg {
        String::from("-")
    } else {
        String::new()
    };
    s.push_str(&int.to_string());
    if digits > 0 {
        s.push_str(&format!(".{:0>width$}", frac.to_string(), width = digits));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioApprox {
    pub m: usize,
    pub exact: BigRational,
    pub decimal: String,
}

/// `q(m)/γ(m)` for every `m` in `1..=max`.
pub fn ratio_sequence(max: usize) -> Vec<BigRational> {
    let (g, q) = (gamma_table(max), q_table(max));
    (1..=max)
        .map(|m| BigRational::new(q[m].clone(), g[m].clone()))
        .collect()
}

/// `q(M)/γ(M)` for `M ≥ 10`, the degenerate share of `Ψ^M`.
pub fn ratio_limit(m: usize) -> Result<RatioApprox> {
    if m < 10 {
        return Err(Error::Domain(format!("ratio_limit needs M >= 10, got {m}")));
    }
    let exact = BigRational::new(q_count(m), gamma(m));
    let decimal = decimal(&exact, 12);
    Ok(RatioApprox { m, exact, decimal })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Computed,
    Stored,
}

/// A bound constant with the inputs it was assembled from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    pub formula: String,
    pub inputs: Vec<(String, BigRational)>,
    pub value: BigRational,
    pub provenance: Provenance,
    pub reference: String,
}

impl BoundReport {
    fn computed(
        name: &str,
        formula: &str,
        inputs: Vec<(&str, BigRational)>,
        value: BigRational,
        reference: &str,
    ) -> Self {
        BoundReport {
            name: name.into(),
            formula: formula.into(),
            inputs: inputs.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            value,
            provenance: Provenance::Computed,
            reference: reference.into(),
        }
    }

    fn stored(name: &str, formula: &str, value: BigRational, reference: &str) -> Self {
        BoundReport {
            name: name.into(),
            formula: formula.into(),
            inputs: Vec::new(),
            value,
            provenance: Provenance::Stored,
            reference: reference.into(),
        }
    }

    /// The value as an integer, if it is one.
    pub fn integer(&self) -> Option<BigInt> {
        self.value.is_integer().then(|| self.value.to_integer())
    }
}

fn int<T: Into<BigInt>>(v: T) -> BigRational {
    BigRational::from_integer(v.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    General,
    PriorGeneral,
    Spherical,
    DegreeMap,
    TwoHandle,
    DuGeneral,
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "general" => BoundKind::General,
            "prior_general" => BoundKind::PriorGeneral,
            "spherical" => BoundKind::Spherical,
            "degree_map" => BoundKind::DegreeMap,
            "two_handle" => BoundKind::TwoHandle,
            "du_general" => BoundKind::DuGeneral,
            other => return Err(Error::InvalidKind(other.to_string())),
        })
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::General => "general",
            BoundKind::PriorGeneral => "prior_general",
            BoundKind::Spherical => "spherical",
            BoundKind::DegreeMap => "degree_map",
            BoundKind::TwoHandle => "two_handle",
            BoundKind::DuGeneral => "du_general",
        })
    }
}

pub const ALL_KINDS: [BoundKind; 6] = [
    BoundKind::General,
    BoundKind::PriorGeneral,
    BoundKind::Spherical,
    BoundKind::DegreeMap,
    BoundKind::TwoHandle,
    BoundKind::DuGeneral,
];

/// Parameters for [`rho_bound`]. Unused fields are ignored by each kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundParams {
    /// Simplicial complexity.
    pub n: BigInt,
    /// Order of the fundamental group, for spherical space forms.
    pub r: BigInt,
    /// Degree of the map, for the degree version.
    pub deg: BigInt,
    /// `d(ζ_M)` and `d(u)` for the 2-handle count.
    pub d_zeta: BigInt,
    pub d_u: BigInt,
}

impl Default for BoundParams {
    fn default() -> Self {
        BoundParams {
            n: BigInt::one(),
            r: BigInt::one(),
            deg: BigInt::one(),
            d_zeta: BigInt::one(),
            d_u: BigInt::one(),
        }
    }
}

impl BoundParams {
    pub fn with_n(n: i64) -> Self {
        BoundParams {
            n: n.into(),
            ..Default::default()
        }
    }
}

const HANDLE_ZETA: i64 = 195;
const HANDLE_U: i64 = 975;

/// `2(195 + 975·k)`, the universal ρ-bound coefficient for `d(u) ≤ k·n`.
pub fn rho_coefficient(k: &BigInt) -> BigInt {
    BigInt::from(2) * (BigInt::from(HANDLE_ZETA) + BigInt::from(HANDLE_U) * k)
}

pub fn rho_bound(kind: BoundKind, p: &BoundParams) -> Result<BoundReport> {
    let n = int(p.n.clone());
    if p.n.is_negative() {
        return Err(Error::Domain("n must be non-negative".into()));
    }
    let report = match kind {
        BoundKind::General => {
            let c3 = c_bound(3);
            let coeff = rho_coefficient(&c3);
            BoundReport::computed(
                "rho_general",
                "2(195 + 975*c(3))*n",
                vec![("c(3)", int(c3)), ("n", n.clone())],
                int(coeff) * n,
                "universal bound via the mitosis null-homotopy",
            )
        }
        BoundKind::PriorGeneral => {
            let d3 = delta_bdh(3)?;
            let coeff = rho_coefficient(&d3);
            BoundReport::computed(
                "rho_prior_general",
                "2(195 + 975*delta_bdh(3))*n",
                vec![("delta_bdh(3)", int(d3)), ("n", n.clone())],
                int(coeff) * n,
                "earlier universal bound via the tabulated control function",
            )
        }
        BoundKind::Spherical => {
            if !p.r.is_positive() {
                return Err(Error::Domain("r must be positive".into()));
            }
            let r = int(p.r.clone());
            let inner = int(HANDLE_ZETA) * &r * &n + int(HANDLE_U) * &r * &n;
            BoundReport::computed(
                "rho_spherical",
                "2(195*r*n + 975*r*n)/r",
                vec![("r", r.clone()), ("n", n)],
                int(2) * inner / r,
                "spherical space forms",
            )
        }
        BoundKind::DegreeMap => {
            let deg = p.deg.abs();
            BoundReport::computed(
                "rho_degree_map",
                "2(195 + 975*|deg|)*n",
                vec![("|deg|", int(deg.clone())), ("n", n.clone())],
                int(rho_coefficient(&deg)) * n,
                "maps of nonzero degree onto a space form",
            )
        }
        BoundKind::TwoHandle => BoundReport::computed(
            "two_handle_complexity",
            "195*d(zeta) + 975*d(u)",
            vec![
                ("d(zeta)", int(p.d_zeta.clone())),
                ("d(u)", int(p.d_u.clone())),
            ],
            int(BigInt::from(HANDLE_ZETA) * &p.d_zeta + BigInt::from(HANDLE_U) * &p.d_u),
            "2-handles of a bordism to a trivial end",
        ),
        BoundKind::DuGeneral => {
            let c3 = c_bound(3);
            BoundReport::computed(
                "du_general",
                "c(3)*n",
                vec![
                    ("c(3)", int(c3.clone())),
                    ("n", n.clone()),
                    ("prior c(3) analogue", int(delta_bdh(3)?)),
                ],
                int(c3) * n,
                "diameter of the 4-chain bounding the image of the fundamental class",
            )
        }
    };
    Ok(report)
}

/// Second barycentric subdivision of a 3-simplex: `(4!)^2` simplices.
pub fn subdivision_factor() -> BigInt {
    let f: BigInt = (1..=4).map(BigInt::from).product();
    &f * &f
}

/// Constant multiplying the ρ-bound in the lens-space complexity estimate.
pub const LENS_FACTOR: i64 = 1728;

/// Lower and upper bounds on the complexity of `L(n, 1)`.
pub fn lens_bounds(n: i64) -> Result<(BoundReport, BoundReport)> {
    if n <= 3 {
        return Err(Error::Domain(format!("lens bounds need n > 3, got {n}")));
    }
    let sph = rho_bound(BoundKind::Spherical, &BoundParams::default())?.value;
    let denom = &sph * int(LENS_FACTOR);
    let lower = BoundReport::computed(
        "lens_lower",
        "(n-3)/(rho_spherical(1)*1728)",
        vec![
            ("n", int(n)),
            ("rho_spherical(1)", sph),
            ("factor", int(LENS_FACTOR)),
            ("denominator", denom.clone()),
        ],
        int(n - 3) / denom,
        "complexity of L(n,1), lower",
    );
    let upper = BoundReport::computed(
        "lens_upper",
        "n-3",
        vec![("n", int(n))],
        int(n - 3),
        "complexity of L(n,1), upper",
    );
    Ok((lower, upper))
}

/// Factorization of a stored constant that holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservedIdentity {
    pub value: BigInt,
    pub expression: String,
    pub holds: bool,
}

fn observe(value: i64, expression: &str, rhs: BigInt) -> ObservedIdentity {
    ObservedIdentity {
        value: value.into(),
        expression: expression.into(),
        holds: BigInt::from(value) == rhs,
    }
}

/// Factorizations of the stored complexity constants that can be checked
/// by arithmetic alone.
pub fn observed_identities() -> Vec<ObservedIdentity> {
    let prior = rho_coefficient(&BigInt::from(DELTA_BDH[3]));
    let chained = BigInt::from(277290);
    let b = |v: i64| BigInt::from(v);
    vec![
        observe(251258280, "363090*692", &prior * 692),
        observe(69713280, "363090*192", &prior * 192),
        observe(34856640, "363090*96", &prior * 96),
        observe(191884680, "277290*692", &chained * 692),
        observe(53239680, "277290*192", &chained * 192),
        observe(26619840, "277290*96", &chained * 96),
        observe(277290, "2(195+975*142)", rho_coefficient(&b(142))),
        observe(107712, "576*187", subdivision_factor() * 187),
        observe(56448, "576*98", subdivision_factor() * 98),
        observe(191884680, "189540*692", rho_coefficient(&c_bound(3)) * 692),
    ]
}

/// Every stored and recomputed complexity constant.
pub fn complexity_table() -> Result<Vec<BoundReport>> {
    let sph = rho_bound(BoundKind::Spherical, &BoundParams::default())?.value;
    let prior = rho_bound(BoundKind::PriorGeneral, &BoundParams::default())?.value;
    let r = |v: i64| int(v);
    let third = BigRational::new(1.into(), 3.into());
    let mut rows = vec![
        BoundReport::computed(
            "lens_denominator",
            "rho_spherical(1)*1728",
            vec![
                ("rho_spherical(1)", sph.clone()),
                ("factor", r(LENS_FACTOR)),
            ],
            &sph * r(LENS_FACTOR),
            "L(n,1) lower bound denominator",
        ),
        BoundReport::computed(
            "lens_denominator_prior",
            "rho_prior_general(1)*1728",
            vec![
                ("rho_prior_general(1)", prior.clone()),
                ("factor", r(LENS_FACTOR)),
            ],
            &prior * r(LENS_FACTOR),
            "L(n,1) lower bound denominator, earlier",
        ),
        BoundReport::computed(
            "complexity_vs_rho_prior",
            "rho_prior_general(1)*(4!)^2",
            vec![
                ("rho_prior_general(1)", prior.clone()),
                ("(4!)^2", int(subdivision_factor())),
            ],
            &prior * int(subdivision_factor()),
            "c(M) >= |rho|/209139840, earlier",
        ),
        BoundReport::stored(
            "heegaard_lickorish",
            "|rho| <= K*l",
            r(191884680),
            "Heegaard-Lickorish complexity",
        ),
        BoundReport::stored(
            "heegaard_lickorish_prior",
            "|rho| <= K*l",
            r(251258280),
            "Heegaard-Lickorish, earlier",
        ),
        BoundReport::stored(
            "surgery_crossing",
            "|rho| <= K*c(L) + K'*f(L), K",
            r(53239680),
            "framed link surgery",
        ),
        BoundReport::stored(
            "surgery_framing",
            "|rho| <= K*c(L) + K'*f(L), K'",
            r(26619840),
            "framed link surgery",
        ),
        BoundReport::stored(
            "surgery_crossing_prior",
            "K",
            r(69713280),
            "framed link surgery, earlier",
        ),
        BoundReport::stored(
            "surgery_framing_prior",
            "K'",
            r(34856640),
            "framed link surgery, earlier",
        ),
        BoundReport::stored(
            "blackboard",
            "|rho| <= K*c",
            r(26619840),
            "blackboard framing",
        ),
        BoundReport::stored(
            "blackboard_prior",
            "|rho| <= K*c",
            r(34856640),
            "blackboard framing, earlier",
        ),
        BoundReport::stored(
            "limsup_hl_lower",
            "1/3 <= limsup B^HL(l)/l",
            third.clone(),
            "Heegaard-Lickorish optimum",
        ),
        BoundReport::stored(
            "limsup_hl_upper",
            "limsup B^HL(l)/l <= K",
            r(191884680),
            "Heegaard-Lickorish optimum",
        ),
        BoundReport::stored(
            "limsup_hl_upper_prior",
            "limsup B^HL(l)/l <= K",
            r(251258280),
            "earlier",
        ),
        BoundReport::stored(
            "limsup_surg_lower",
            "1/3 <= limsup B^surg(k)/k",
            third,
            "surgery optimum",
        ),
        BoundReport::stored(
            "limsup_surg_upper",
            "limsup B^surg(k)/k <= K",
            r(26619840),
            "surgery optimum",
        ),
        BoundReport::stored(
            "limsup_surg_upper_prior",
            "limsup B^surg(k)/k <= K",
            r(34856640),
            "earlier",
        ),
        BoundReport::stored(
            "b2h_lower",
            "1/K <= limsup B^2h(k)/k",
            BigRational::new(1.into(), 56448.into()),
            "2-handle optimum",
        ),
        BoundReport::stored(
            "b2h_lower_prior",
            "1/K <= limsup B^2h(k)/k",
            BigRational::new(1.into(), 107712.into()),
            "earlier",
        ),
        BoundReport::stored(
            "b2h_upper",
            "limsup B^2h(k)/k <= 975",
            r(975),
            "2-handle optimum",
        ),
        BoundReport::stored(
            "b2h_upper_prior",
            "limsup B^2h(k)/k <= 975",
            r(975),
            "earlier",
        ),
    ];
    for kind in ALL_KINDS {
        rows.push(rho_bound(kind, &BoundParams::default())?);
    }
    Ok(rows)
}

/// `k!·(log 2)^{-k-1}`, a loose upper envelope for `B_k`.
pub fn bell_envelope(k: usize) -> f64 {
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    fact * std::f64::consts::LN_2.powi(-(k as i32) - 1)
}

/// Lossy view of an exact ratio, for comparisons against tolerances.
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
