use crate::error::{Error, Result};
use crate::params::{self, graded, CliqueMode, Colorful, Helly, Radon};
use crate::set_system::SetSystem;
use crate::theorems::{CheckReport, Value, Verdict};
use crate::Budget;

fn fails(witness: Vec<(&str, Value)>) -> Verdict {
    Verdict::Fails { witness: witness.into_iter().map(|(k, v)| (k.to_string(), v)).collect() }
}

/// `helly ≤ radon − 1`.
pub fn check_levi(f: &SetSystem, budget: &Budget) -> Result<CheckReport> {
    CheckReport::run("levi", |r| {
        let h = params::helly(f, budget)?;
        r.push("helly", Value::Int(h));
        let rad = params::radon(f, budget)?;
        r.push("radon", Value::Int(rad));
        if h + 1 > rad {
            r.verdict = fails(vec![("helly", Value::Int(h)), ("radon", Value::Int(rad))]);
        }
        Ok(())
    })
}

/// `rad^(mn) ≤ rad^(m) · rad^(n)`.
pub fn check_jamison(f: &SetSystem, m: usize, n: usize, budget: &Budget) -> Result<CheckReport> {
    if m < 2 || n < 2 {
        return Err(Error::input("jamison needs m >= 2 and n >= 2"));
    }
    let mn = m.checked_mul(n).filter(|&k| k <= 64).ok_or_else(|| Error::input("m*n must be at most 64"))?;
    CheckReport::run("jamison", |r| {
        let pm = params::partition_number(f, m, budget)?;
        r.push(format!("partition_{m}"), Value::Int(pm));
        let pn = if n == m { pm } else { params::partition_number(f, n, budget)? };
        r.push(format!("partition_{n}"), Value::Int(pn));
        let pmn = params::partition_number(f, mn, budget)?;
        r.push(format!("partition_{mn}"), Value::Int(pmn));
        if u128::from(pmn) > u128::from(pm) * u128::from(pn) {
            r.verdict = fails(vec![
                ("k_m", Value::Int(m as u64)),
                ("k_n", Value::Int(n as u64)),
                ("partition_m", Value::Int(pm)),
                ("partition_n", Value::Int(pn)),
                ("partition_mn", Value::Int(pmn)),
            ]);
        }
        Ok(())
    })
}

/// Graded radon profile stays below `t + 1`.
pub fn check_graded_linear(f: &SetSystem, t_max: usize, budget: &Budget) -> Result<CheckReport> {
    CheckReport::run("graded-linear", |r| {
        let prof = graded(f, &Radon, t_max, budget)?;
        r.push("graded_radon", Value::Profile(prof.0.clone()));
        if let Some(t) = (1..=t_max).find(|&t| prof.at(t) > t as u64 + 1) {
            r.verdict = fails(vec![("t", Value::Int(t as u64)), ("graded_radon", Value::Int(prof.at(t)))]);
        }
        Ok(())
    })
}

/// At every jump of graded radon, `t ≤ (2^(n−1) − 1) · h(t)` with
/// `n = rad(t − 1)`.
pub fn check_radongrowth(f: &SetSystem, t_max: usize, budget: &Budget) -> Result<CheckReport> {
    if t_max < 2 {
        return Err(Error::input("radongrowth needs t_max >= 2"));
    }
    CheckReport::run("radongrowth", |r| {
        let rad = graded(f, &Radon, t_max, budget)?;
        r.push("graded_radon", Value::Profile(rad.0.clone()));
        let h = graded(f, &Helly, t_max, budget)?;
        r.push("graded_helly", Value::Profile(h.0.clone()));
        let mut jumps = Vec::new();
        for t in 2..=t_max {
            if rad.at(t) == rad.at(t - 1) {
                continue;
            }
            let n = rad.at(t - 1);
            // n ≤ 65 because radon ≤ ground + 1
            let factor = (1u128 << (n - 1)) - 1;
            let rhs = factor * u128::from(h.at(t));
            jumps.push(format!("t={t}: {t} <= {factor}*{}", h.at(t)));
            if t as u128 > rhs {
                r.verdict = fails(vec![
                    ("t", Value::Int(t as u64)),
                    ("graded_radon_prev", Value::Int(n)),
                    ("graded_helly", Value::Int(h.at(t))),
                ]);
                break;
            }
        }
        r.push("jumps", Value::Text(if jumps.is_empty() { "none".into() } else { jumps.join("; ") }));
        Ok(())
    })
}

/// If `h(t) < t` on `(t0, t_max]` then graded helly is constant on
/// `[t0, t_max]` and at most `t0`.
///
/// When `t0 ≥ t_max` the hypothesis range is empty and the check is not
/// applicable; the report still names `t_max` if `h(t_max) ≥ t_max`.
pub fn check_hellygrowth(f: &SetSystem, t0: usize, t_max: usize, budget: &Budget) -> Result<CheckReport> {
    if t0 == 0 {
        return Err(Error::input("hellygrowth needs t0 >= 1"));
    }
    CheckReport::run("hellygrowth", |r| {
        let top = t_max.max(t0);
        let h = graded(f, &Helly, top, budget)?;
        r.push("graded_helly", Value::Profile(h.0.clone()));
        if t0 >= t_max {
            let mut reason = format!("hypothesis range ({t0}, {t_max}] is empty");
            if h.at(t_max) >= t_max as u64 {
                r.push("violating_t", Value::Int(t_max as u64));
                reason = format!("{reason}; h({t_max}) = {} is not below {t_max}", h.at(t_max));
            }
            r.verdict = Verdict::NotApplicable { reason };
            return Ok(());
        }
        if let Some(t) = (t0 + 1..=t_max).find(|&t| h.at(t) >= t as u64) {
            r.push("violating_t", Value::Int(t as u64));
            r.verdict = Verdict::NotApplicable { reason: format!("h({t}) = {} is not below {t}", h.at(t)) };
            return Ok(());
        }
        let base = h.at(t0);
        if let Some(t) = (t0 + 1..=t_max).find(|&t| h.at(t) != base) {
            r.verdict = fails(vec![
                ("t0", Value::Int(t0 as u64)),
                ("t", Value::Int(t as u64)),
                ("graded_helly_t0", Value::Int(base)),
                ("graded_helly_t", Value::Int(h.at(t))),
            ]);
        } else if base > t0 as u64 {
            r.verdict = fails(vec![("t0", Value::Int(t0 as u64)), ("graded_helly_t0", Value::Int(base))]);
        }
        Ok(())
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthEntry {
    pub t: u64,
    pub radon: u64,
    /// Sign of `rad(t) − log₂ t`, i.e. of `2^rad(t) − t`.
    pub sign: Sign,
}

pub fn growth_diagnostic(f: &SetSystem, t_max: usize, budget: &Budget) -> Result<Vec<GrowthEntry>> {
    let rad = graded(f, &Radon, t_max, budget)?;
    Ok((1..=t_max)
        .map(|t| {
            let r = rad.at(t);
            let t = t as u64;
            // 2^r vs t; r ≥ 64 always wins against a u64
            let sign = if r >= 64 {
                Sign::Positive
            } else {
                match (1u64 << r).cmp(&t) {
                    std::cmp::Ordering::Less => Sign::Negative,
                    std::cmp::Ordering::Equal => Sign::Zero,
                    std::cmp::Ordering::Greater => Sign::Positive,
                }
            };
            GrowthEntry { t, radon: r, sign }
        })
        .collect())
}

/// Whether the graded c-wise colorful Helly number at `t = c·ell` is at most
/// `ell`. Only the hypothesis is checked; when it fails the check is not
/// applicable rather than failed.
pub fn holmsen_hypothesis(f: &SetSystem, c: usize, ell: usize, budget: &Budget) -> Result<CheckReport> {
    if c == 0 || ell <= c {
        return Err(Error::input("holmsen needs ell > c >= 1"));
    }
    let t = c.checked_mul(ell).ok_or_else(|| Error::input("c*ell overflows"))?;
    CheckReport::run("holmsen", |r| {
        r.push("t", Value::Int(t as u64));
        let prof = graded(f, &Colorful(CliqueMode::CWise(c)), t, budget)?;
        let v = prof.at(t);
        r.push("graded_colorful", Value::Int(v));
        if v > ell as u64 {
            r.verdict = Verdict::NotApplicable { reason: format!("graded value {v} exceeds ell = {ell}") };
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_system::named::{intervals, star, whole};

    fn budget() -> Budget {
        Budget::default()
    }

    fn int(r: &CheckReport, k: &str) -> u64 {
        match r.quantity(k) {
            Some(Value::Int(v)) => *v,
            other => panic!("{k}: {other:?}"),
        }
    }

    #[test]
    fn levi_examples() {
        for (f, h, rad) in [(star(3), 3, 4), (whole(1), 1, 2), (intervals(3), 2, 3)] {
            let r = check_levi(&f, &budget()).unwrap();
            assert_eq!((int(&r, "helly"), int(&r, "radon")), (h, rad));
            assert!(r.holds());
        }
    }

    #[test]
    fn jamison_examples() {
        let r = check_jamison(&whole(1), 2, 2, &budget()).unwrap();
        assert_eq!((int(&r, "partition_2"), int(&r, "partition_4")), (2, 4));
        assert!(r.holds());
        let r = check_jamison(&intervals(3), 2, 2, &budget()).unwrap();
        assert_eq!(int(&r, "partition_2"), 3);
        assert!(int(&r, "partition_4") <= 9 && r.holds());
        let r = check_jamison(&star(3), 2, 2, &budget()).unwrap();
        assert_eq!(int(&r, "partition_2"), 4);
        assert!(r.holds());
    }

    #[test]
    fn radongrowth_examples() {
        let r = check_radongrowth(&star(3), 3, &budget()).unwrap();
        assert!(r.holds());
        assert_eq!(r.quantity("jumps"), Some(&Value::Text("t=3: 3 <= 1*3".into())));
        let r = check_radongrowth(&whole(1), 3, &budget()).unwrap();
        assert!(r.holds());
        assert_eq!(r.quantity("jumps"), Some(&Value::Text("none".into())));
    }

    #[test]
    fn hellygrowth_examples() {
        let r = check_hellygrowth(&intervals(4), 2, 5, &budget()).unwrap();
        assert!(r.holds(), "{r}");
        let r = check_hellygrowth(&star(3), 3, 3, &budget()).unwrap();
        assert!(matches!(r.verdict, Verdict::NotApplicable { .. }));
        assert_eq!(int(&r, "violating_t"), 3);
        let r = check_hellygrowth(&whole(1), 1, 4, &budget()).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn growth_examples() {
        let signs: Vec<(u64, u64, char)> = growth_diagnostic(&star(3), 3, &budget())
            .unwrap()
            .into_iter()
            .map(|e| (e.t, e.radon, e.sign.symbol()))
            .collect();
        assert_eq!(signs, [(1, 2, '+'), (2, 2, '+'), (3, 4, '+')]);
        let g = growth_diagnostic(&whole(1), 4, &budget()).unwrap();
        assert!(g.iter().all(|e| e.radon == 2));
        // 2^2 = 4 ties with t = 4
        let signs: Vec<Sign> = g.iter().map(|e| e.sign).collect();
        assert_eq!(signs, [Sign::Positive, Sign::Positive, Sign::Positive, Sign::Zero]);
    }

    #[test]
    fn holmsen_examples() {
        let r = holmsen_hypothesis(&whole(1), 1, 2, &budget()).unwrap();
        assert_eq!(int(&r, "graded_colorful"), 1);
        assert!(r.holds());
        let r = holmsen_hypothesis(&intervals(3), 2, 3, &budget()).unwrap();
        assert_eq!(int(&r, "graded_colorful"), 2);
        assert!(r.holds());
        let r = holmsen_hypothesis(&star(3), 3, 4, &budget()).unwrap();
        assert_eq!(int(&r, "graded_colorful"), 3);
        assert!(r.holds());
        assert!(holmsen_hypothesis(&star(3), 2, 2, &budget()).is_err());
    }

    #[test]
    fn budget_becomes_verdict() {
        let r = check_levi(&star(5), &Budget::new(3)).unwrap();
        assert!(matches!(r.verdict, Verdict::Budget { .. }));
    }
}
