//! Ψ tables and the witness finder for slowly growing graded Radon bounds.
//!
//! A `.psi` file has a header `t0 <value>` followed by `t<TAB>Ψ(t)` rows with
//! strictly increasing `t`. A row's value holds from its `t` up to the next
//! row; the last row closes the covered range. A dense table (one row per
//! `t`) and a sparse step table therefore read the same way.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::theorems::xi::{xi_bounded, xi_log2_floor, DEFAULT_MAX_BITS};
use crate::theorems::{CheckReport, Value, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTable {
    t0: u64,
    /// (first t, value), strictly increasing in t
    steps: Vec<(u64, BigUint)>,
    end: u64,
}

impl PsiTable {
    pub fn new(t0: u64, rows: Vec<(u64, BigUint)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::input("a Psi table needs at least one row"));
        }
        if let Some(w) = rows.windows(2).find(|w| w[0].0 >= w[1].0) {
            return Err(Error::input(format!("rows must have strictly increasing t (at t = {})", w[1].0)));
        }
        if let Some((t, _)) = rows.iter().find(|(_, v)| *v < BigUint::from(2u32)) {
            return Err(Error::input(format!("Psi({t}) must be at least 2, the least possible Radon number")));
        }
        let first = rows[0].0;
        let end = rows.last().expect("nonempty").0;
        if first > t0 || end < t0 {
            return Err(Error::input(format!("table range [{first}, {end}] does not contain t0 = {t0}")));
        }
        Ok(PsiTable { t0, steps: rows, end })
    }

    /// `Ψ ≡ value` on `[t0, t_max]`.
    pub fn constant(t0: u64, value: u64, t_max: u64) -> Result<Self> {
        let mut rows = vec![(t0, BigUint::from(value))];
        if t_max > t0 {
            rows.push((t_max, BigUint::from(value)));
        }
        PsiTable::new(t0, rows)
    }

    pub fn t0(&self) -> u64 {
        self.t0
    }

    pub fn end(&self) -> u64 {
        self.end
    }

    pub fn value_at(&self, t: u64) -> Option<&BigUint> {
        if t < self.steps[0].0 || t > self.end {
            return None;
        }
        let i = self.steps.partition_point(|(s, _)| *s <= t) - 1;
        Some(&self.steps[i].1)
    }

    /// Constant runs `(lo, hi, value)` clipped to `[lo, hi]`.
    fn runs(&self, lo: u64, hi: u64) -> impl Iterator<Item = (u64, u64, &BigUint)> {
        let n = self.steps.len();
        (0..n).filter_map(move |i| {
            let start = self.steps[i].0;
            let stop = if i + 1 < n { self.steps[i + 1].0 - 1 } else { self.end };
            let (a, b) = (start.max(lo), stop.min(hi));
            (a <= b).then_some((a, b, &self.steps[i].1))
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut t0 = None;
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if t0.is_none() {
                let v = body
                    .strip_prefix("t0")
                    .map(str::trim)
                    .ok_or_else(|| Error::parse(line, "expected header `t0 <value>`"))?;
                t0 = Some(v.parse::<u64>().map_err(|_| Error::parse(line, format!("invalid t0 `{v}`")))?);
                continue;
            }
            let (t, v) = body
                .split_once('\t')
                .ok_or_else(|| Error::parse(line, "expected `t<TAB>value`"))?;
            let t: u64 = t.trim().parse().map_err(|_| Error::parse(line, format!("invalid t `{t}`")))?;
            let v: BigUint = v.trim().parse().map_err(|_| Error::parse(line, format!("invalid value `{v}`")))?;
            rows.push((t, v));
        }
        let t0 = t0.ok_or_else(|| Error::parse(0, "missing `t0` header"))?;
        PsiTable::new(t0, rows).map_err(|e| match e {
            Error::Input(m) => Error::parse(0, m),
            other => other,
        })
    }
}

/// Least `t1 ∈ [t0², t_max]` with `Ξ(Ψ(t1)) · Ψ(t0) < t1`, after checking
/// `Ψ(t) < t + 1` on `[t0, t_max]`.
pub fn rg2_witness(psi: &PsiTable, t_max: u64) -> Result<CheckReport> {
    let t0 = psi.t0;
    let mut report = CheckReport::new("rg2-witness");
    report.push("t0", Value::Int(t0));
    report.push("t_max", Value::Int(t_max));
    if t_max < t0 || t_max > psi.end {
        return Err(Error::input(format!(
            "table covers [.., {}] but t_max = {t_max} with t0 = {t0}",
            psi.end
        )));
    }
    // side condition; within a constant run the tightest t is the first
    for (lo, _, v) in psi.runs(t0, t_max) {
        if *v > BigUint::from(lo) {
            report.verdict = Verdict::NotApplicable {
                reason: format!("side condition fails: Psi({lo}) = {v} is not below {lo} + 1"),
            };
            report.push("violating_t", Value::Int(lo));
            return Ok(report);
        }
    }
    let psi_t0 = psi.value_at(t0).expect("t0 covered").clone();
    let start = t0.checked_mul(t0);
    report.push("search_from", start.map_or(Value::Text("overflow".into()), Value::Int));
    let Some(start) = start.filter(|&s| s <= t_max) else {
        report.verdict = Verdict::Fails { witness: vec![("no_witness_in_range".into(), Value::Text(format!("[t0^2, {t_max}] is empty")))] };
        return Ok(report);
    };
    for (lo, hi, v) in psi.runs(start, t_max) {
        // Ξ(v)·Ψ(t0) < t1 ≤ 2^64 needs log2 Ξ(v) < 64
        if xi_log2_floor(v).is_none_or(|b| b >= BigUint::from(64u32)) {
            continue;
        }
        let threshold = xi_bounded(v, DEFAULT_MAX_BITS)? * &psi_t0;
        let least = threshold + 1u32;
        let Some(least) = least.to_u64() else { continue };
        let t1 = least.max(lo);
        if t1 <= hi {
            report.push("t1", Value::Int(t1));
            report.push("psi_t1", Value::Big(v.clone()));
            report.push("xi_psi_t1", Value::Big(xi_bounded(v, DEFAULT_MAX_BITS)?));
            if t1 == start {
                report.notes.push("witness sits exactly at t0^2 (statement allows it; the strict reading t1 > t0^2 does not)".into());
            }
            report.verdict = Verdict::Holds;
            return Ok(report);
        }
    }
    report.verdict = Verdict::Fails {
        witness: vec![("no_witness_in_range".into(), Value::Text(format!("[{start}, {t_max}]")))],
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1(report: &CheckReport) -> Option<u64> {
        report.quantity("t1").and_then(|v| match v {
            Value::Int(t) => Some(*t),
            _ => None,
        })
    }

    #[test]
    fn constant_three() {
        let psi = PsiTable::constant(3, 3, 50_000_000).unwrap();
        let r = rg2_witness(&psi, 50_000_000).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(t1(&r), Some(43_046_722));

        let small = PsiTable::constant(3, 3, 1_000_000).unwrap();
        let r = rg2_witness(&small, 1_000_000).unwrap();
        assert!(matches!(r.verdict, Verdict::Fails { .. }));
    }

    #[test]
    fn side_condition() {
        // Ψ(5) = 6 = 5 + 1
        let psi = PsiTable::new(3, vec![(3, 3u32.into()), (5, 6u32.into()), (10, 6u32.into())]).unwrap();
        let r = rg2_witness(&psi, 10).unwrap();
        assert!(matches!(r.verdict, Verdict::NotApplicable { .. }));
        assert_eq!(r.quantity("violating_t"), Some(&Value::Int(5)));
    }

    #[test]
    fn boundary_witness_is_flagged() {
        // Ψ ≡ 2, t0 = 6: Ξ(2)·2 = 32 < 36 = t0², so t1 = 36 exactly
        let psi = PsiTable::constant(6, 2, 100).unwrap();
        let r = rg2_witness(&psi, 100).unwrap();
        assert_eq!(t1(&r), Some(36));
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn monotone_in_range() {
        let psi = PsiTable::new(3, vec![(3, 3u32.into()), (20, 2u32.into()), (100, 2u32.into())]).unwrap();
        let a = t1(&rg2_witness(&psi, 60).unwrap());
        let b = t1(&rg2_witness(&psi, 100).unwrap());
        assert_eq!(a, Some(49));
        assert_eq!(a, b);
    }

    #[test]
    fn parse_table() {
        let psi = PsiTable::parse("t0 3\n3\t3\n50000000\t3\n").unwrap();
        assert_eq!(psi, PsiTable::constant(3, 3, 50_000_000).unwrap());
        assert_eq!(psi.value_at(1234), Some(&BigUint::from(3u32)));
        assert_eq!(psi.value_at(2), None);
        assert!(PsiTable::parse("3\t3\n").is_err());
        assert!(PsiTable::parse("t0 3\n3 3\n").is_err());
        assert!(PsiTable::parse("t0 3\n3\t3\n3\t4\n").is_err());
        assert!(PsiTable::parse("t0 3\n3\t1\n").is_err());
        assert!(PsiTable::parse("t0 3\n4\t3\n").is_err());
    }
}
