//! Checks the product formulas: the generating function of a domino family on
//! `lambda` against the product of the flat generating functions on its
//! 2-quotient.

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::bijections::gamma_merge;
use crate::domino_tableaux::{for_each_domino_tableau, up_fingerprint, DominoTableau};
use crate::error::Result;
use crate::partitions::Partition;
use crate::pavings::is_shifted_pavable;
use crate::polyring::{domino_genfun, domino_sign, genfun, Monomial, Polynomial};
use crate::tableaux::{enumerate_tableaux, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstDiff {
    pub monomial: Monomial,
    pub lhs: i128,
    pub rhs: i128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: Family,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub n: usize,
    pub status: Status,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub first_diff: Option<FirstDiff>,
    pub symmetric: bool,
    pub reason: Option<String>,
    #[serde(with = "millis")]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    /// `PASS shifted [6,5,5,4] n=2 ([2,2],[3,3]) 12.3ms`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} n={} ({},{}) {:.1}ms",
            self.status,
            self.family,
            self.lambda,
            self.n,
            self.mu,
            self.nu,
            self.elapsed.as_secs_f64() * 1e3
        )?;
        if let Some(d) = &self.first_diff {
            write!(f, " first difference at {}: {} vs {}", d.monomial, d.lhs, d.rhs)?;
        }
        if let Some(r) = &self.reason {
            write!(f, " ({r})")?;
        }
        Ok(())
    }
}

mod millis {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Duration, D::Error> {
        u64::deserialize(de).map(Duration::from_millis)
    }
}

/// Elapsed wall-clock time since the call; always zero on targets without a clock.
#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
fn stopwatch() -> impl Fn() -> Duration {
    let start = std::time::Instant::now();
    move || start.elapsed()
}

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
fn stopwatch() -> impl Fn() -> Duration {
    || Duration::ZERO
}

/// Whether `lambda` is in the index set of the domino side for `family`.
pub fn admissible(family: Family, lambda: &Partition) -> bool {
    if family.is_shifted() {
        is_shifted_pavable(lambda)
    } else {
        lambda.is_pavable()
    }
}

pub fn verify_identity(family: Family, lambda: &Partition, n: usize) -> VerificationReport {
    let elapsed = stopwatch();
    let (mu, nu) = lambda.two_quotient();
    let mut report = VerificationReport {
        family,
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        n,
        status: Status::Skip,
        lhs: Polynomial::zero(n),
        rhs: Polynomial::zero(n),
        first_diff: None,
        symmetric: true,
        reason: None,
        elapsed: Duration::ZERO,
    };
    if !admissible(family, lambda) {
        report.reason = Some(if family.is_shifted() { "not shifted pavable" } else { "not pavable" }.into());
        report.elapsed = elapsed();
        return report;
    }
    let sides = (|| -> Result<(Polynomial, Polynomial)> {
        let lhs = genfun(family, &mu, n)?.checked_mul(&genfun(family, &nu, n)?)?;
        let rhs = domino_genfun(family, lambda, n)?;
        Ok((lhs, rhs))
    })();
    match sides {
        Ok((lhs, rhs)) => {
            report.first_diff = lhs
                .first_difference(&rhs)
                .map(|(monomial, lhs, rhs)| FirstDiff { monomial, lhs, rhs });
            report.symmetric = lhs.is_symmetric() && rhs.is_symmetric();
            report.status = if report.first_diff.is_none() { Status::Pass } else { Status::Fail };
            report.lhs = lhs;
            report.rhs = rhs;
        }
        Err(e) => {
            report.status = Status::Fail;
            report.reason = Some(e.to_string());
        }
    }
    report.elapsed = elapsed();
    report
}

/// One report per partition of size at most `max_size`, smallest first.
/// `jobs` bounds the worker threads; `None` lets the thread pool decide.
pub fn verify_sweep(family: Family, max_size: usize, n: usize, jobs: Option<usize>) -> Vec<VerificationReport> {
    let shapes = Partition::up_to_size(max_size);
    run_all(&shapes, |lambda| verify_identity(family, lambda, n), jobs)
}

#[cfg(feature = "parallel")]
fn run_all<F>(shapes: &[Partition], f: F, jobs: Option<usize>) -> Vec<VerificationReport>
where
    F: Fn(&Partition) -> VerificationReport + Sync + Send,
{
    use rayon::prelude::*;
    let work = || shapes.par_iter().map(&f).collect();
    match jobs {
        Some(1) => shapes.iter().map(&f).collect(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| shapes.iter().map(&f).collect()),
        None => work(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_all<F>(shapes: &[Partition], f: F, _jobs: Option<usize>) -> Vec<VerificationReport>
where
    F: Fn(&Partition) -> VerificationReport,
{
    shapes.iter().map(f).collect()
}

/// Outcome of mapping every flat pair through the merge and comparing with
/// direct enumeration of domino tableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub merged: usize,
    pub enumerated: usize,
    pub agree: bool,
}

/// Canonical key of a domino tableau: the tableau itself, or its up region for
/// shifted families.
fn key(t: &DominoTableau) -> Result<String> {
    Ok(if t.family().is_shifted() {
        up_fingerprint(t)?.to_string()
    } else {
        t.to_string()
    })
}

pub fn cross_check_bijection(family: Family, lambda: &Partition, n: usize) -> Result<CrossCheck> {
    let (mu, nu) = lambda.two_quotient();
    let left = enumerate_tableaux(family, &mu, n as u32)?;
    let right = enumerate_tableaux(family, &nu, n as u32)?;
    let mut merged = Vec::with_capacity(left.len() * right.len());
    for a in &left {
        for b in &right {
            let t = gamma_merge(family, a, b)?;
            if !crate::domino_tableaux::validate_domino_tableau(&t) {
                return Ok(CrossCheck { merged: merged.len(), enumerated: 0, agree: false });
            }
            merged.push((key(&t)?, domino_sign(&t), t.weight(n)?));
        }
    }
    let mut direct = Vec::new();
    let mut err = None;
    for_each_domino_tableau(family, lambda, n as u32, |t| match (key(t), t.weight(n)) {
        (Ok(k), Ok(w)) => direct.push((k, domino_sign(t), w)),
        (Err(e), _) | (_, Err(e)) => err = Some(e),
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    merged.sort_by(|a, b| a.0.cmp(&b.0));
    direct.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(CrossCheck { merged: merged.len(), enumerated: direct.len(), agree: merged == direct })
}
