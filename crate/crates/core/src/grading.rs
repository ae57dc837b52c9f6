//! Age grading of twisted sectors for diagonal abelian actions on `C^m`.
//!
//! All dimensions are real. An element acting with eigenvalues
//! `exp(2πi k_j)` has age `Σ k_j` and a fixed locus of dimension
//! `2·#{k_j = 0}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::scalar::{self, int, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    exponents: Vec<Scalar>,
}

impl EigenData {
    pub fn new(exponents: Vec<Scalar>) -> Result<Self> {
        if let Some(k) = exponents.iter().find(|k| k.is_negative() || **k >= Scalar::one()) {
            return Err(Error::InconsistentSector(format!(
                "eigenvalue exponent {} outside [0, 1)",
                scalar::format(k)
            )));
        }
        Ok(EigenData { exponents })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let ks = text
            .split(',')
            .map(|s| scalar::parse(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ks)
    }

    pub fn exponents(&self) -> &[Scalar] {
        &self.exponents
    }

    pub fn complex_dimension(&self) -> usize {
        self.exponents.len()
    }

    /// Exponents `(1 - k_j) mod 1`.
    pub fn inverse(&self) -> EigenData {
        EigenData {
            exponents: self.exponents.iter().map(frac_part_neg).collect(),
        }
    }

    /// `g^t`, exponents `t·k_j mod 1`.
    pub fn power(&self, t: i64) -> EigenData {
        EigenData {
            exponents: self.exponents.iter().map(|k| frac_part(&(k * int(t)))).collect(),
        }
    }

    /// Componentwise product of two commuting diagonal elements.
    pub fn compose(&self, other: &EigenData) -> Result<EigenData> {
        if self.exponents.len() != other.exponents.len() {
            return Err(Error::InconsistentSector("eigen data of different dimensions".into()));
        }
        Ok(EigenData {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| frac_part(&(a + b)))
                .collect(),
        })
    }

    /// Least `t > 0` with `g^t = 1`.
    pub fn order(&self) -> BigInt {
        self.exponents
            .iter()
            .fold(BigInt::one(), |acc, k| acc.lcm(k.denom()))
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.exponents.iter().map(scalar::format).collect();
        format!("({})", parts.join(","))
    }
}

fn frac_part(x: &Scalar) -> Scalar {
    x - x.floor()
}

fn frac_part_neg(k: &Scalar) -> Scalar {
    frac_part(&-k.clone())
}

pub fn age(e: &EigenData) -> Scalar {
    e.exponents.iter().fold(Scalar::zero(), |acc, k| acc + k)
}

pub fn sector_dimension(e: &EigenData) -> i64 {
    2 * e.exponents.iter().filter(|k| k.is_zero()).count() as i64
}

/// `dim = 2m − 2·age(g) − 2·age(g⁻¹)`.
pub fn check_age_dimension(e: &EigenData) -> CheckReport {
    let mut report = CheckReport::new("age-dimension", &e.render());
    report.checked = 1;
    let m = e.complex_dimension() as i64;
    let rhs = int(2 * m) - int(2) * age(e) - int(2) * age(&e.inverse());
    let lhs = int(sector_dimension(e));
    if lhs != rhs {
        report.violation(
            vec![e.render()],
            format!(
                "dim = {}, 2m - 2age(g) - 2age(g⁻¹) = {}",
                scalar::format(&lhs),
                scalar::format(&rhs)
            ),
        );
    }
    report
}

/// `2(age_g + age_h − age_gh) + dim_2 − dim_gh`; must be an even
/// nonnegative integer.
pub fn obstruction_rank(age_g: &Scalar, age_h: &Scalar, age_gh: &Scalar, dim_double: i64, dim_gh: i64) -> Result<i64> {
    let r = int(2) * (age_g + age_h - age_gh) + int(dim_double - dim_gh);
    let bad = |why: &str| {
        Error::InconsistentSector(format!(
            "obstruction rank {} is {why} (ages {}, {}, {}; dims {dim_double}, {dim_gh})",
            scalar::format(&r),
            scalar::format(age_g),
            scalar::format(age_h),
            scalar::format(age_gh)
        ))
    };
    let n = scalar::to_i64(&r).ok_or_else(|| bad("not an integer"))?;
    if n < 0 {
        return Err(bad("negative"));
    }
    if n % 2 != 0 {
        return Err(bad("odd"));
    }
    Ok(n)
}

pub fn orbifold_degree(i: i64, age: &Scalar) -> Scalar {
    int(i) + int(2) * age
}

/// Sector data as supplied or computed: `age` and `inverse_age` are carried
/// separately so that hand-entered records can be checked against
/// `dim = d − 2·age − 2·inverse_age`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorRecord {
    pub label: String,
    pub age: Scalar,
    pub inverse_age: Scalar,
    pub fixed_dim: i64,
    pub ambient_dim: i64,
}

impl SectorRecord {
    pub fn from_eigen(label: &str, e: &EigenData) -> Self {
        SectorRecord {
            label: label.to_string(),
            age: age(e),
            inverse_age: age(&e.inverse()),
            fixed_dim: sector_dimension(e),
            ambient_dim: 2 * e.complex_dimension() as i64,
        }
    }

    fn age_identity_holds(&self) -> bool {
        int(self.fixed_dim) == int(self.ambient_dim) - int(2) * &self.age - int(2) * &self.inverse_age
    }
}

/// One step of the degree count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerLine {
    pub step: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingLedger {
    pub report: CheckReport,
    pub lines: Vec<LedgerLine>,
    /// Computed target degree minus `i + j − d`.
    pub imbalance: String,
}

/// Replays the degree count of the orbifold intersection pairing: classes of
/// orbifold degree `i` on sector `g` and `j` on sector `h` have homological
/// degrees `i − 2age_g`, `j − 2age_h`; the cross product is restricted to
/// the double sector (codimension `dim_g + dim_h − dim_2`), capped with the
/// Euler class of the obstruction bundle and pushed to sector `gh`. The
/// obstruction rank enters through the inverse ages, as the homological
/// count requires. The result must sit in orbifold degree `i + j − d`.
pub fn check_pairing_degree(
    g: &SectorRecord,
    h: &SectorRecord,
    gh: &SectorRecord,
    dim_double: i64,
    i: &Scalar,
    j: &Scalar,
) -> Result<PairingLedger> {
    let d = g.ambient_dim;
    if h.ambient_dim != d || gh.ambient_dim != d {
        return Err(Error::InconsistentSector("sector records over different ambient dimensions".into()));
    }
    for s in [g, h, gh] {
        if s.fixed_dim < 0 || s.fixed_dim % 2 != 0 || s.fixed_dim > d {
            return Err(Error::InconsistentSector(format!(
                "sector {} has fixed dimension {}",
                s.label, s.fixed_dim
            )));
        }
    }
    if dim_double < 0 || dim_double % 2 != 0 || dim_double > g.fixed_dim.min(h.fixed_dim) {
        return Err(Error::InconsistentSector(format!("double sector dimension {dim_double}")));
    }
    let rank = obstruction_rank(&g.inverse_age, &h.inverse_age, &gh.inverse_age, dim_double, gh.fixed_dim)?;

    let a = i - int(2) * &g.age;
    let b = j - int(2) * &h.age;
    let codim = g.fixed_dim + h.fixed_dim - dim_double;
    let c = &a + &b - int(codim) - int(rank);
    let result = orbifold_degree(0, &gh.age) + &c;
    let expected = i + j - int(d);
    let imbalance = &result - &expected;

    let f = scalar::format;
    let mut lines = vec![
        LedgerLine {
            step: format!("homological degree on {}", g.label),
            value: format!("{} - 2*{} = {}", f(i), f(&g.age), f(&a)),
        },
        LedgerLine {
            step: format!("homological degree on {}", h.label),
            value: format!("{} - 2*{} = {}", f(j), f(&h.age), f(&b)),
        },
        LedgerLine {
            step: "restriction to double sector".into(),
            value: format!("-({} + {} - {dim_double}) = -{codim}", g.fixed_dim, h.fixed_dim),
        },
        LedgerLine {
            step: "obstruction Euler class".into(),
            value: format!("-{rank}"),
        },
        LedgerLine {
            step: format!("homological degree on {}", gh.label),
            value: f(&c),
        },
        LedgerLine {
            step: format!("orbifold degree on {}", gh.label),
            value: format!("{} + 2*{} = {}", f(&c), f(&gh.age), f(&result)),
        },
        LedgerLine {
            step: "expected i + j - d".into(),
            value: f(&expected),
        },
    ];
    let mut report = CheckReport::new("pairing-degree", &format!("{} x {} -> {}", g.label, h.label, gh.label));
    for s in [g, h, gh] {
        report.checked += 1;
        let ok = s.age_identity_holds();
        lines.push(LedgerLine {
            step: format!("dim = d - 2age - 2age(inverse) on {}", s.label),
            value: if ok { "holds".into() } else { "fails".into() },
        });
        if !ok {
            report.violation(
                vec![s.label.clone()],
                format!(
                    "dim {} != {} - 2*{} - 2*{}",
                    s.fixed_dim,
                    d,
                    f(&s.age),
                    f(&s.inverse_age)
                ),
            );
        }
    }
    report.checked += 1;
    if !imbalance.is_zero() {
        report.violation(
            vec![g.label.clone(), h.label.clone(), gh.label.clone()],
            format!("target degree {} differs from {} by {}", f(&result), f(&expected), f(&imbalance)),
        );
    }
    Ok(PairingLedger {
        report,
        lines,
        imbalance: f(&imbalance),
    })
}

/// Row of a sector table; rationals as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorRow {
    pub element: String,
    pub exponents: String,
    pub age: String,
    pub inverse_age: String,
    pub dim: i64,
    pub degree_offset: String,
}

/// Sectors of the cyclic group generated by `generator`, labeled `g^t`.
pub fn sector_table(generator: &EigenData) -> Result<Vec<SectorRow>> {
    let order = generator.order();
    let n: i64 = order
        .try_into()
        .map_err(|_| Error::Precondition("element order too large".into()))?;
    if n > 10_000 {
        return Err(Error::Precondition(format!("element order {n} too large for a table")));
    }
    Ok((0..n)
        .map(|t| {
            let e = generator.power(t);
            let a = age(&e);
            SectorRow {
                element: format!("g^{t}"),
                exponents: e.render(),
                age: scalar::format(&a),
                inverse_age: scalar::format(&age(&e.inverse())),
                dim: sector_dimension(&e),
                degree_offset: scalar::format(&(int(2) * a)),
            }
        })
        .collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub actions: usize,
    pub elements: usize,
    pub pairs: usize,
    pub failures: Vec<String>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Nondecreasing weight vectors in `[0, m)^k`.
fn weight_multisets(m: i64, k: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                let lo = w.last().copied().unwrap_or(0);
                (lo..m).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every diagonal action of `Z/m` on `C^k` (up to reordering coordinates,
/// which leaves all quantities unchanged) for `m ≤ max_m`, `k ≤ max_k`:
/// the age-dimension identity on every element, and for every pair the
/// obstruction rank is an even nonnegative integer, symmetric in the pair,
/// zero when either factor is trivial, and balances the pairing degree.
pub fn sweep(max_m: i64, max_k: usize) -> SweepSummary {
    let mut summary = SweepSummary::default();
    for m in 1..=max_m {
        for k in 1..=max_k {
            for weights in weight_multisets(m, k) {
                summary.actions += 1;
                sweep_action(m, &weights, &mut summary);
            }
        }
    }
    summary
}

fn sweep_action(m: i64, weights: &[i64], summary: &mut SweepSummary) {
    let elems: Vec<EigenData> = (0..m)
        .map(|t| EigenData {
            exponents: weights
                .iter()
                .map(|w| Scalar::new(BigInt::from((t * w).rem_euclid(m)), BigInt::from(m)))
                .collect(),
        })
        .collect();
    let tag = format!("Z/{m} weights {weights:?}");
    let records: Vec<SectorRecord> = elems
        .iter()
        .enumerate()
        .map(|(t, e)| SectorRecord::from_eigen(&format!("g^{t}"), e))
        .collect();
    for e in &elems {
        summary.elements += 1;
        if !check_age_dimension(e).passed() {
            summary.failures.push(format!("{tag}: age-dimension fails at {}", e.render()));
        }
    }
    for s in 0..m as usize {
        for t in 0..m as usize {
            summary.pairs += 1;
            let st = (s + t) % m as usize;
            let dim_double = 2 * elems[s]
                .exponents
                .iter()
                .zip(&elems[t].exponents)
                .filter(|(a, b)| a.is_zero() && b.is_zero())
                .count() as i64;
            let rank = |x: usize, y: usize| {
                obstruction_rank(
                    &records[x].age,
                    &records[y].age,
                    &records[st].age,
                    dim_double,
                    records[st].fixed_dim,
                )
            };
            match (rank(s, t), rank(t, s)) {
                (Ok(r1), Ok(r2)) => {
                    if r1 != r2 {
                        summary.failures.push(format!("{tag}: rank not symmetric at (g^{s}, g^{t})"));
                    }
                    if (s == 0 || t == 0) && r1 != 0 {
                        summary.failures.push(format!("{tag}: rank {r1} with a trivial factor"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => summary.failures.push(format!("{tag}: {e}")),
            }
            let i = int(records[s].fixed_dim) + int(2) * &records[s].age;
            let j = int(records[t].fixed_dim) + int(2) * &records[t].age;
            match check_pairing_degree(&records[s], &records[t], &records[st], dim_double, &i, &j) {
                Ok(l) if l.report.passed() => {}
                Ok(l) => summary.failures.push(format!("{tag}: pairing imbalance {}", l.imbalance)),
                Err(e) => summary.failures.push(format!("{tag}: {e}")),
            }
        }
    }
}
