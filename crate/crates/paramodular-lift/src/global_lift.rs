//! Global paramodular level of the lift attached to a pair of elliptic
//! newforms: local data is reconstructed prime by prime from the factored
//! levels (with explicit annotations where the local type is not forced),
//! the local level resolver is run at every ramified prime, and the results
//! are combined into an exact level or an interval with named indeterminacies.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::local_reps::{GL2LocalRep, Nu, PadicCharacter};
use crate::theta_resolver::{local_theta_level, CaseLabel, GSp4TypeLabel, Level, ResolveError};

/// Which unramified quadratic twist of Steinberg sits at a prime exactly
/// dividing the level. Determined by the local sign of the functional
/// equation; defaults to the untwisted Steinberg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SteinbergSign {
    Trivial,
    UnramQuad,
}

/// An elliptic newform described by the data the lift needs: an identifying
/// name (distinct newforms must get distinct names), an even weight, the
/// factored level, and local annotations.
///
/// At primes exactly dividing the level the local component is a Steinberg
/// twist, fixed up to the sign in `signs`. At primes whose exponent is at
/// least 2 the local component is not determined by the level and must be
/// annotated explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewformDescriptor {
    name: String,
    weight: u32,
    level: BTreeMap<u64, u32>,
    #[serde(default)]
    signs: BTreeMap<u64, SteinbergSign>,
    #[serde(default)]
    annotations: BTreeMap<u64, GL2LocalRep>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GlobalLiftError {
    #[error("invalid newform data: {0}")]
    InvalidNewform(String),
    #[error("prime {prime} divides the level with exponent >= 2; a local annotation is required")]
    MissingAnnotation { prime: u64 },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl NewformDescriptor {
    pub fn new(
        name: &str,
        weight: u32,
        level: BTreeMap<u64, u32>,
    ) -> Result<Self, GlobalLiftError> {
        if name.is_empty() {
            return Err(GlobalLiftError::InvalidNewform("empty newform name".into()));
        }
        if weight % 2 != 0 || weight < 4 {
            return Err(GlobalLiftError::InvalidNewform(format!(
                "weight must be even and >= 4, got {weight}"
            )));
        }
        for (&p, &e) in &level {
            if !is_prime(p) {
                return Err(GlobalLiftError::InvalidNewform(format!(
                    "level factor {p} is not prime"
                )));
            }
            if e == 0 {
                return Err(GlobalLiftError::InvalidNewform(format!(
                    "level exponent at {p} must be positive"
                )));
            }
        }
        Ok(NewformDescriptor {
            name: name.into(),
            weight,
            level,
            signs: BTreeMap::new(),
            annotations: BTreeMap::new(),
        })
    }

    /// Square-free level given as a plain integer.
    pub fn with_square_free_level(name: &str, weight: u32, level: u64) -> Result<Self, GlobalLiftError> {
        let mut factors = BTreeMap::new();
        let mut n = level;
        if n == 0 {
            return Err(GlobalLiftError::InvalidNewform("level must be positive".into()));
        }
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return Err(GlobalLiftError::InvalidNewform(format!(
                        "level {level} is not square-free"
                    )));
                }
                factors.insert(p, 1);
            }
            p += 1;
        }
        if n > 1 {
            factors.insert(n, 1);
        }
        Self::new(name, weight, factors)
    }

    pub fn set_sign(&mut self, prime: u64, sign: SteinbergSign) -> Result<(), GlobalLiftError> {
        if self.level.get(&prime) != Some(&1) {
            return Err(GlobalLiftError::InvalidNewform(format!(
                "sign annotations apply only to primes exactly dividing the level ({prime})"
            )));
        }
        self.signs.insert(prime, sign);
        Ok(())
    }

    /// Attaches the local component at a prime with level exponent >= 2.
    /// The annotation must live at the right prime and have the conductor the
    /// level prescribes.
    pub fn annotate(&mut self, prime: u64, rep: GL2LocalRep) -> Result<(), GlobalLiftError> {
        let e = *self.level.get(&prime).unwrap_or(&0);
        if e < 2 {
            return Err(GlobalLiftError::InvalidNewform(format!(
                "annotations apply only to primes with level exponent >= 2 ({prime})"
            )));
        }
        if rep.prime() != prime {
            return Err(GlobalLiftError::InvalidNewform(format!(
                "annotation at {prime} is a representation of GL(2, Q_{})",
                rep.prime()
            )));
        }
        let rep = crate::local_reps::revalidate(&rep)
            .map_err(|err| GlobalLiftError::InvalidNewform(format!("annotation at {prime}: {err}")))?;
        match crate::local_reps::conductor_gl2(&rep) {
            Ok(a) if a == e => {}
            Ok(a) => {
                return Err(GlobalLiftError::InvalidNewform(format!(
                    "annotation at {prime} has conductor exponent {a}, level says {e}"
                )))
            }
            Err(err) => {
                return Err(GlobalLiftError::InvalidNewform(format!(
                    "annotation at {prime} has no conductor: {err}"
                )))
            }
        }
        self.annotations.insert(prime, rep);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn level_factors(&self) -> &BTreeMap<u64, u32> {
        &self.level
    }

    pub fn level_value(&self) -> u128 {
        self.level
            .iter()
            .map(|(&p, &e)| u128::from(p).pow(e))
            .product()
    }

    /// Re-checks the constructor invariants; needed after deserializing a
    /// descriptor from a file, which bypasses the constructors.
    pub fn validate(&self) -> Result<(), GlobalLiftError> {
        let mut rebuilt = Self::new(&self.name, self.weight, self.level.clone())?;
        for (&p, &sign) in &self.signs {
            rebuilt.set_sign(p, sign)?;
        }
        for (&p, rep) in &self.annotations {
            rebuilt.annotate(p, rep.clone())?;
        }
        Ok(())
    }

    /// Local component at p, reconstructed from the descriptor.
    ///
    /// Unramified primes get the unramified principal series with the
    /// newform's opaque Satake label; primes exactly dividing the level get
    /// the (possibly twisted) Steinberg; higher exponents need an annotation.
    pub fn local_data(&self, p: u64) -> Result<GL2LocalRep, GlobalLiftError> {
        let e = *self.level.get(&p).unwrap_or(&0);
        match e {
            0 => {
                let label = format!("satake:{}", self.name);
                let chi = PadicCharacter::opaque(p, &label, 0, Nu::from_integer(0))
                    .expect("opaque unramified character is well formed");
                Ok(GL2LocalRep::principal_series(chi.clone(), chi)
                    .expect("unramified Satake pair is well formed"))
            }
            1 => {
                if let Some(rep) = self.annotations.get(&p) {
                    return Ok(rep.clone());
                }
                let chi = match self.signs.get(&p).copied().unwrap_or(SteinbergSign::Trivial) {
                    SteinbergSign::Trivial => PadicCharacter::trivial(p),
                    SteinbergSign::UnramQuad => PadicCharacter::unram_quad(p),
                };
                Ok(GL2LocalRep::steinberg_twist(chi).expect("unramified quadratic twist"))
            }
            _ => self
                .annotations
                .get(&p)
                .cloned()
                .ok_or(GlobalLiftError::MissingAnnotation { prime: p }),
        }
    }
}

/// Local outcome at one ramified prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PrimeOutcome {
    Resolved { case: CaseLabel, gsp4_type: GSp4TypeLabel, level: Level },
    Undecided { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRow {
    pub prime: u64,
    pub outcome: PrimeOutcome,
}

/// Global paramodular level: exact when every local level is exact, otherwise
/// an interval recording the proven lower bound and the primes where the
/// exact exponent is out of reach (with the reason).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TotalLevel {
    Exact { factors: BTreeMap<u64, u32>, value: u128 },
    Interval { lower_factors: BTreeMap<u64, u32>, lower_value: u128, indeterminate: BTreeMap<u64, String> },
}

/// Coefficient weight (l, m) of the Siegel threefold the lift of forms with
/// weights k1 >= k2 contributes to: l + m + 4 = k1, l - m + 2 = k2.
/// None when k1 = k2 (the would-be m is negative).
pub fn matching_coefficient_weight(k1: u32, k2: u32) -> Option<(i64, i64)> {
    let (hi, lo) = if k1 >= k2 { (k1, k2) } else { (k2, k1) };
    if hi == lo {
        return None;
    }
    // Both weights are even, so the divisions are exact.
    let l = (i64::from(hi) + i64::from(lo) - 6) / 2;
    let m = (i64::from(hi) - i64::from(lo) - 2) / 2;
    if l >= m && m >= 0 {
        Some((l, m))
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalLiftReport {
    pub f1: String,
    pub f2: String,
    pub primes: Vec<PrimeRow>,
    pub total: TotalLevel,
    /// Highest weight (l, m) of the matching coefficient system, when the
    /// two modular weights are distinct.
    pub coefficient_weight: Option<(i64, i64)>,
}

/// Runs the local level resolver at every prime ramified for f1 or f2 and
/// combines the exponents into the global paramodular level.
pub fn global_lift_level(
    f1: &NewformDescriptor,
    f2: &NewformDescriptor,
) -> Result<GlobalLiftReport, GlobalLiftError> {
    if f1.name() == f2.name() && (f1.weight() != f2.weight() || f1.level != f2.level) {
        return Err(GlobalLiftError::InvalidNewform(
            "two different newforms share a name; Satake labels would collide".into(),
        ));
    }
    let ramified: BTreeSet<u64> =
        f1.level.keys().chain(f2.level.keys()).copied().collect();

    let mut primes = Vec::new();
    let mut factors: BTreeMap<u64, u32> = BTreeMap::new();
    let mut indeterminate: BTreeMap<u64, String> = BTreeMap::new();

    for &p in &ramified {
        let outcome = match (f1.local_data(p), f2.local_data(p)) {
            (Ok(tau1), Ok(tau2)) => match local_theta_level(&tau1, &tau2) {
                Ok(result) => {
                    match result.level {
                        Level::Exact(n) => {
                            if n > 0 {
                                factors.insert(p, n);
                            }
                        }
                        Level::LowerBound(n) => {
                            if n > 0 {
                                factors.insert(p, n);
                            }
                            indeterminate
                                .insert(p, "supercuspidal lift: level only bounded below".into());
                        }
                        Level::NotParamodular => {
                            indeterminate.insert(p, "lift has no paramodular vectors".into());
                        }
                    }
                    PrimeOutcome::Resolved {
                        case: result.case,
                        gsp4_type: result.gsp4_type,
                        level: result.level,
                    }
                }
                Err(err @ ResolveError::InvalidInput(_)) => {
                    return Err(GlobalLiftError::InvalidNewform(err.to_string()))
                }
                Err(err) => {
                    indeterminate.insert(p, err.to_string());
                    PrimeOutcome::Undecided { reason: err.to_string() }
                }
            },
            (Err(GlobalLiftError::MissingAnnotation { prime }), _)
            | (_, Err(GlobalLiftError::MissingAnnotation { prime })) => {
                let reason = format!("missing local annotation at {prime}");
                indeterminate.insert(p, reason.clone());
                PrimeOutcome::Undecided { reason }
            }
            (Err(err), _) | (_, Err(err)) => return Err(err),
        };
        primes.push(PrimeRow { prime: p, outcome });
    }

    let value = factors.iter().map(|(&p, &e)| u128::from(p).pow(e)).product();
    let total = if indeterminate.is_empty() {
        TotalLevel::Exact { factors, value }
    } else {
        TotalLevel::Interval { lower_factors: factors, lower_value: value, indeterminate }
    };

    Ok(GlobalLiftReport {
        f1: f1.name().into(),
        f2: f2.name().into(),
        primes,
        total,
        coefficient_weight: matching_coefficient_weight(f1.weight(), f2.weight()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_free(name: &str, weight: u32, level: u64) -> NewformDescriptor {
        NewformDescriptor::with_square_free_level(name, weight, level).unwrap()
    }

    fn exact_value(report: &GlobalLiftReport) -> u128 {
        match &report.total {
            TotalLevel::Exact { value, .. } => *value,
            other => panic!("expected exact total, got {other:?}"),
        }
    }

    #[test]
    fn level_one_pair_lifts_to_level_one() {
        let f = square_free("12.a", 12, 1);
        let g = square_free("18.b", 18, 1);
        let report = global_lift_level(&f, &g).unwrap();
        assert_eq!(exact_value(&report), 1);
        assert!(report.primes.is_empty());
    }

    #[test]
    fn coprime_square_free_levels_multiply() {
        let f = square_free("6.a", 12, 6);
        let g = square_free("35.a", 16, 35);
        let report = global_lift_level(&f, &g).unwrap();
        assert_eq!(exact_value(&report), 210);
    }

    #[test]
    fn shared_prime_squares() {
        let f = square_free("6.a", 12, 6);
        let g = square_free("10.a", 16, 10);
        let report = global_lift_level(&f, &g).unwrap();
        // 2^2 * 3 * 5
        assert_eq!(exact_value(&report), 60);
        let row = report.primes.iter().find(|r| r.prime == 2).unwrap();
        match &row.outcome {
            PrimeOutcome::Resolved { case, level, .. } => {
                assert_eq!(*case, crate::theta_resolver::CaseLabel::Ia);
                assert_eq!(*level, Level::Exact(2));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn same_newform_squares_its_level() {
        let f = square_free("6.a", 12, 6);
        let report = global_lift_level(&f, &f.clone()).unwrap();
        assert_eq!(exact_value(&report), 36);
    }

    #[test]
    fn missing_annotation_is_reported_not_fatal() {
        let f = NewformDescriptor::new("32.a", 12, BTreeMap::from([(2, 5)])).unwrap();
        let g = square_free("3.a", 16, 3);
        let report = global_lift_level(&f, &g).unwrap();
        match &report.total {
            TotalLevel::Interval { lower_value, indeterminate, .. } => {
                assert_eq!(*lower_value, 3);
                assert!(indeterminate.contains_key(&2));
            }
            other => panic!("expected interval, got {other:?}"),
        }
    }

    #[test]
    fn supercuspidal_annotation_resolves_higher_exponent() {
        let mut f = NewformDescriptor::new("32.a", 12, BTreeMap::from([(2, 4)])).unwrap();
        f.annotate(2, GL2LocalRep::supercuspidal(2, 4, "sc:32.a").unwrap()).unwrap();
        let g = square_free("3.a", 16, 3);
        let report = global_lift_level(&f, &g).unwrap();
        assert_eq!(exact_value(&report), 16 * 3);
    }

    #[test]
    fn distinct_forms_with_shared_name_are_rejected() {
        let f = square_free("x", 12, 6);
        let g = square_free("x", 16, 35);
        assert!(global_lift_level(&f, &g).is_err());
    }

    #[test]
    fn coefficient_weight_matching() {
        assert_eq!(matching_coefficient_weight(26, 12), Some((16, 6)));
        assert_eq!(matching_coefficient_weight(12, 26), Some((16, 6)));
        assert_eq!(matching_coefficient_weight(12, 12), None);
        assert_eq!(matching_coefficient_weight(12, 4), Some((5, 3)));
    }

    #[test]
    fn annotation_conductor_must_match_level() {
        let mut f = NewformDescriptor::new("32.a", 12, BTreeMap::from([(2, 4)])).unwrap();
        let err = f.annotate(2, GL2LocalRep::supercuspidal(2, 3, "sc").unwrap());
        assert!(err.is_err());
    }
}
