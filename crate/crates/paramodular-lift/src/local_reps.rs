//! Symbolic characters of Q_p^x and local representations of GL(2, Q_p).
//!
//! A character is stored as nu^s * chi_0, where nu = |.|_p, s is an exact
//! rational exponent, and chi_0 is a finite-order part known only through a
//! label, a conductor exponent a(chi), and an order hint. Two characters with
//! distinct labels are treated as distinct; no attempt is made to decide
//! relations the labels do not express. Predicates that would need such a
//! relation report indeterminacy instead of guessing.
//!
//! Representations carry exactly the data the level formulas consume:
//! principal series are stored by their inducing pair, Steinberg twists by the
//! twisting character, supercuspidals by conductor and an opaque label.

use std::fmt;

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

/// Exact exponent of nu. Conductors and levels stay integral; only the
/// unramified twist needs denominators (half-integers in practice).
pub type Nu = Ratio<i64>;

/// What is known about the order of a finite-order character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderHint {
    /// The character is trivial.
    Trivial,
    /// chi^2 = 1, chi != 1.
    Quadratic,
    /// No information; squares of such characters are undecidable.
    Unknown,
}

/// Label of the finite-order part of a character.
///
/// `Trivial` and `UnramQuad` are the two distinguished unramified cases: the
/// trivial character and the unique nontrivial unramified quadratic character.
/// Everything else is an opaque name; `inverted` marks the formal inverse of
/// the named character (normalized away when the order is at most 2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiniteLabel {
    Trivial,
    UnramQuad,
    Opaque { name: String, inverted: bool },
}

impl fmt::Display for FiniteLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteLabel::Trivial => write!(f, "TRIVIAL"),
            FiniteLabel::UnramQuad => write!(f, "UNRAM_QUAD"),
            FiniteLabel::Opaque { name, inverted: false } => write!(f, "{name}"),
            FiniteLabel::Opaque { name, inverted: true } => write!(f, "{name}^-1"),
        }
    }
}

/// Errors from character and representation construction or arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LocalRepError {
    #[error("invalid representation data: {0}")]
    InvalidRep(String),
    #[error("conductor of a supercuspidal twisted by a ramified character is not determined by the stored data")]
    TwistIndeterminate,
    #[error("product of two ramified characters with unrelated labels has no symbolic conductor")]
    ProductIndeterminate,
    #[error("characters live over different primes: {0} vs {1}")]
    PrimeMismatch(u64, u64),
}

/// A character of Q_p^x presented as nu^s * chi_0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PadicCharacter {
    prime: u64,
    nu_exp: Nu,
    conductor_exp: u32,
    finite_label: FiniteLabel,
    order_hint: OrderHint,
}

impl PadicCharacter {
    /// Builds nu^s * chi_0 from raw parts, checking internal consistency.
    pub fn new(
        prime: u64,
        nu_exp: Nu,
        conductor_exp: u32,
        finite_label: FiniteLabel,
        order_hint: OrderHint,
    ) -> Result<Self, LocalRepError> {
        if prime < 2 {
            return Err(LocalRepError::InvalidRep(format!("prime must be >= 2, got {prime}")));
        }
        match &finite_label {
            FiniteLabel::Trivial => {
                if conductor_exp != 0 || order_hint != OrderHint::Trivial {
                    return Err(LocalRepError::InvalidRep(
                        "TRIVIAL label requires conductor 0 and trivial order".into(),
                    ));
                }
            }
            FiniteLabel::UnramQuad => {
                if conductor_exp != 0 || order_hint != OrderHint::Quadratic {
                    return Err(LocalRepError::InvalidRep(
                        "UNRAM_QUAD label requires conductor 0 and quadratic order".into(),
                    ));
                }
            }
            FiniteLabel::Opaque { name, inverted } => {
                if name.is_empty() {
                    return Err(LocalRepError::InvalidRep("empty character label".into()));
                }
                if *inverted && order_hint != OrderHint::Unknown {
                    return Err(LocalRepError::InvalidRep(
                        "inverse labels are only kept for characters of unknown order".into(),
                    ));
                }
                if order_hint == OrderHint::Trivial {
                    return Err(LocalRepError::InvalidRep(
                        "a trivial character must use the TRIVIAL label".into(),
                    ));
                }
                if conductor_exp == 0 && order_hint == OrderHint::Quadratic {
                    return Err(LocalRepError::InvalidRep(
                        "the unramified quadratic character must use the UNRAM_QUAD label".into(),
                    ));
                }
            }
        }
        Ok(PadicCharacter { prime, nu_exp, conductor_exp, finite_label, order_hint })
    }

    /// The trivial character, or a pure power nu^s of the absolute value.
    pub fn nu_pow(prime: u64, nu_exp: Nu) -> Self {
        PadicCharacter {
            prime,
            nu_exp,
            conductor_exp: 0,
            finite_label: FiniteLabel::Trivial,
            order_hint: OrderHint::Trivial,
        }
    }

    /// The trivial character of Q_p^x.
    pub fn trivial(prime: u64) -> Self {
        Self::nu_pow(prime, Nu::from_integer(0))
    }

    /// The nontrivial unramified quadratic character.
    pub fn unram_quad(prime: u64) -> Self {
        PadicCharacter {
            prime,
            nu_exp: Nu::from_integer(0),
            conductor_exp: 0,
            finite_label: FiniteLabel::UnramQuad,
            order_hint: OrderHint::Quadratic,
        }
    }

    /// A ramified quadratic character with the given conductor exponent.
    pub fn ramified_quad(prime: u64, name: &str, conductor_exp: u32) -> Result<Self, LocalRepError> {
        if conductor_exp == 0 {
            return Err(LocalRepError::InvalidRep(
                "a ramified character needs conductor exponent >= 1".into(),
            ));
        }
        Self::new(
            prime,
            Nu::from_integer(0),
            conductor_exp,
            FiniteLabel::Opaque { name: name.into(), inverted: false },
            OrderHint::Quadratic,
        )
    }

    /// An opaque character of unknown order (ramified or not).
    pub fn opaque(prime: u64, name: &str, conductor_exp: u32, nu_exp: Nu) -> Result<Self, LocalRepError> {
        Self::new(
            prime,
            nu_exp,
            conductor_exp,
            FiniteLabel::Opaque { name: name.into(), inverted: false },
            OrderHint::Unknown,
        )
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn nu_exp(&self) -> Nu {
        self.nu_exp
    }

    /// Conductor exponent a(chi) of the finite part (unramified twists do not
    /// change the conductor).
    pub fn conductor_exp(&self) -> u32 {
        self.conductor_exp
    }

    pub fn finite_label(&self) -> &FiniteLabel {
        &self.finite_label
    }

    pub fn order_hint(&self) -> OrderHint {
        self.order_hint
    }

    pub fn is_unramified(&self) -> bool {
        self.conductor_exp == 0
    }

    /// True when the finite part is literally trivial, i.e. the character is a
    /// pure nu power.
    pub fn is_pure_nu(&self) -> bool {
        self.finite_label == FiniteLabel::Trivial
    }

    /// Whether chi_0^2 = 1 can be decided from the order hint.
    pub fn finite_square_trivial(&self) -> Option<bool> {
        match self.order_hint {
            OrderHint::Trivial | OrderHint::Quadratic => Some(true),
            OrderHint::Unknown => None,
        }
    }

    /// chi^-1. Conductors are preserved; self-inverse finite parts stay fixed,
    /// other opaque labels pick up a formal inverse marker.
    pub fn inverse(&self) -> Self {
        let finite_label = match (&self.finite_label, self.order_hint) {
            (FiniteLabel::Trivial, _) => FiniteLabel::Trivial,
            (FiniteLabel::UnramQuad, _) => FiniteLabel::UnramQuad,
            (FiniteLabel::Opaque { name, inverted }, OrderHint::Unknown) => {
                FiniteLabel::Opaque { name: name.clone(), inverted: !inverted }
            }
            // quadratic: chi^-1 = chi
            (FiniteLabel::Opaque { name, inverted }, _) => {
                FiniteLabel::Opaque { name: name.clone(), inverted: *inverted }
            }
        };
        PadicCharacter {
            prime: self.prime,
            nu_exp: -self.nu_exp,
            conductor_exp: self.conductor_exp,
            finite_label,
            order_hint: self.order_hint,
        }
    }

    /// chi * psi. Defined whenever the finite parts compose to something the
    /// label algebra can name: one factor has trivial finite part, or the two
    /// finite parts cancel. Two ramified factors with unrelated labels have no
    /// symbolic conductor and are rejected.
    pub fn mul(&self, other: &PadicCharacter) -> Result<Self, LocalRepError> {
        if self.prime != other.prime {
            return Err(LocalRepError::PrimeMismatch(self.prime, other.prime));
        }
        let nu_exp = self.nu_exp + other.nu_exp;
        // Finite parts.
        let (finite_label, conductor_exp, order_hint) = if self.finite_label == FiniteLabel::Trivial
        {
            (other.finite_label.clone(), other.conductor_exp, other.order_hint)
        } else if other.finite_label == FiniteLabel::Trivial {
            (self.finite_label.clone(), self.conductor_exp, self.order_hint)
        } else if self.finite_cancels(other) {
            (FiniteLabel::Trivial, 0, OrderHint::Trivial)
        } else if self.is_unramified() || other.is_unramified() {
            // One unramified nontrivial factor: the conductor is the other
            // factor's, but the composite needs a name of its own.
            let (unram, ram) = if self.is_unramified() { (self, other) } else { (other, self) };
            let name = format!("{}*{}", ram.finite_label, unram.finite_label);
            let order_hint = match (ram.order_hint, unram.order_hint) {
                (OrderHint::Quadratic, OrderHint::Quadratic) => OrderHint::Quadratic,
                _ => OrderHint::Unknown,
            };
            (
                FiniteLabel::Opaque { name, inverted: false },
                ram.conductor_exp,
                order_hint,
            )
        } else {
            return Err(LocalRepError::ProductIndeterminate);
        };
        Ok(PadicCharacter { prime: self.prime, nu_exp, conductor_exp, finite_label, order_hint })
    }

    /// Whether the finite parts of self and other multiply to 1.
    fn finite_cancels(&self, other: &PadicCharacter) -> bool {
        match (&self.finite_label, &other.finite_label) {
            (FiniteLabel::Trivial, FiniteLabel::Trivial) => true,
            (FiniteLabel::UnramQuad, FiniteLabel::UnramQuad) => true,
            (
                FiniteLabel::Opaque { name: a, inverted: ia },
                FiniteLabel::Opaque { name: b, inverted: ib },
            ) => {
                a == b
                    && ((self.order_hint == OrderHint::Quadratic
                        && other.order_hint == OrderHint::Quadratic)
                        || ia != ib)
            }
            _ => false,
        }
    }

    /// Whether chi * psi = 1 is provable from the stored data.
    pub fn product_is_trivial(&self, other: &PadicCharacter) -> bool {
        self.prime == other.prime
            && self.nu_exp + other.nu_exp == Nu::from_integer(0)
            && self.finite_cancels(other)
    }
}

impl fmt::Display for PadicCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nu_exp == Nu::from_integer(0) {
            write!(f, "{}", self.finite_label)
        } else if self.is_pure_nu() {
            write!(f, "nu^{}", self.nu_exp)
        } else {
            write!(f, "nu^{}*{}", self.nu_exp, self.finite_label)
        }
    }
}

/// Exponent s with chi1/chi2 = nu^s, when the ratio is provably a pure nu
/// power. Returns None when the finite parts do not cancel; in the label
/// algebra that means the ratio is not a nu power.
pub fn char_ratio_nu_exponent(chi1: &PadicCharacter, chi2: &PadicCharacter) -> Option<Nu> {
    if chi1.prime != chi2.prime {
        return None;
    }
    if chi1.finite_label == chi2.finite_label && chi1.conductor_exp == chi2.conductor_exp {
        Some(chi1.nu_exp - chi2.nu_exp)
    } else {
        None
    }
}

/// An irreducible admissible representation of GL(2, Q_p), or, for principal
/// series built by [`GL2LocalRep::principal_series_embedded`], the inducing
/// data of a representation realized inside a possibly reducible induced one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GL2LocalRep {
    /// pi(chi1, chi2), induced from the Borel.
    PrincipalSeries { chi1: PadicCharacter, chi2: PadicCharacter },
    /// chi St, a twist of the Steinberg representation; chi^2 = 1.
    SteinbergTwist { chi: PadicCharacter },
    /// Supercuspidal with trivial central character, known only through its
    /// conductor exponent and an opaque label.
    Supercuspidal { prime: u64, conductor_exp: u32, label: String, trivial_central_char: bool },
}

impl GL2LocalRep {
    /// Irreducible pi(chi1, chi2) with trivial central character.
    /// Rejects chi1/chi2 = nu^{+-1}, where the induced representation is
    /// reducible.
    pub fn principal_series(
        chi1: PadicCharacter,
        chi2: PadicCharacter,
    ) -> Result<Self, LocalRepError> {
        let rep = Self::principal_series_embedded(chi1, chi2)?;
        if rep.borel_inducing_ratio_degenerate() == Some(true) {
            return Err(LocalRepError::InvalidRep(
                "chi1/chi2 = nu^{+-1}: the induced representation is reducible; \
                 use principal_series_embedded for constituent data"
                    .into(),
            ));
        }
        Ok(rep)
    }

    /// Principal-series inducing data (chi1, chi2) without the irreducibility
    /// restriction. This is the presentation tau -> pi(chi1, chi2) used for
    /// constituents of reducible induced representations; the case dispatch
    /// reads the pair, not the constituent.
    pub fn principal_series_embedded(
        chi1: PadicCharacter,
        chi2: PadicCharacter,
    ) -> Result<Self, LocalRepError> {
        if chi1.prime() != chi2.prime() {
            return Err(LocalRepError::PrimeMismatch(chi1.prime(), chi2.prime()));
        }
        if !central_char_acceptable(&chi1, &chi2) {
            return Err(LocalRepError::InvalidRep(
                "principal series requires trivial central character chi1*chi2 = 1".into(),
            ));
        }
        Ok(GL2LocalRep::PrincipalSeries { chi1, chi2 })
    }

    /// chi St with chi^2 = 1. A quadratic chi has nu-exponent 0, so a nonzero
    /// nu part or an order hint other than trivial/quadratic is rejected.
    pub fn steinberg_twist(chi: PadicCharacter) -> Result<Self, LocalRepError> {
        if chi.nu_exp() != Nu::from_integer(0) {
            return Err(LocalRepError::InvalidRep(
                "Steinberg twists need chi^2 = 1, so the nu part of chi must vanish".into(),
            ));
        }
        if chi.finite_square_trivial() != Some(true) {
            return Err(LocalRepError::InvalidRep(
                "Steinberg twists need chi^2 = 1; the order hint does not establish it".into(),
            ));
        }
        Ok(GL2LocalRep::SteinbergTwist { chi })
    }

    /// Supercuspidal with trivial central character. Conductor exponents below
    /// 2 do not occur for supercuspidals of GL(2, Q_p).
    pub fn supercuspidal(prime: u64, conductor_exp: u32, label: &str) -> Result<Self, LocalRepError> {
        if conductor_exp < 2 {
            return Err(LocalRepError::InvalidRep(format!(
                "supercuspidal conductor exponent must be >= 2, got {conductor_exp}"
            )));
        }
        if label.is_empty() {
            return Err(LocalRepError::InvalidRep("empty supercuspidal label".into()));
        }
        Ok(GL2LocalRep::Supercuspidal {
            prime,
            conductor_exp,
            label: label.into(),
            trivial_central_char: true,
        })
    }

    pub fn prime(&self) -> u64 {
        match self {
            GL2LocalRep::PrincipalSeries { chi1, .. } => chi1.prime(),
            GL2LocalRep::SteinbergTwist { chi } => chi.prime(),
            GL2LocalRep::Supercuspidal { prime, .. } => *prime,
        }
    }

    /// Steinberg twists and supercuspidals are the discrete series.
    pub fn is_discrete_series(&self) -> bool {
        matches!(self, GL2LocalRep::SteinbergTwist { .. } | GL2LocalRep::Supercuspidal { .. })
    }

    /// For principal-series data: Some(true) when chi1/chi2 = nu^{+-1} is
    /// provable, Some(false) when refutable, None for other variants.
    pub fn borel_inducing_ratio_degenerate(&self) -> Option<bool> {
        match self {
            GL2LocalRep::PrincipalSeries { chi1, chi2 } => {
                match char_ratio_nu_exponent(chi1, chi2) {
                    Some(s) => Some(s == Nu::from_integer(1) || s == Nu::from_integer(-1)),
                    // Distinct finite parts: the ratio is not a nu power.
                    None => Some(false),
                }
            }
            _ => None,
        }
    }

    pub fn is_unramified(&self) -> bool {
        self.conductor_exp().map_or(false, |a| a == 0)
    }

    fn conductor_exp(&self) -> Option<u32> {
        match self {
            GL2LocalRep::PrincipalSeries { chi1, chi2 } => {
                Some(chi1.conductor_exp() + chi2.conductor_exp())
            }
            GL2LocalRep::SteinbergTwist { chi } => {
                Some(if chi.is_unramified() { 1 } else { 2 * chi.conductor_exp() })
            }
            GL2LocalRep::Supercuspidal { conductor_exp, .. } => Some(*conductor_exp),
        }
    }
}

/// Accepts chi1*chi2 = 1 when provable, plus one deliberate looseness: a pair
/// of equal unramified opaque labels of unknown order stands for a character
/// and its inverse presented under one name (the Satake-parameter convention
/// used at good primes).
fn central_char_acceptable(chi1: &PadicCharacter, chi2: &PadicCharacter) -> bool {
    if chi1.product_is_trivial(chi2) {
        return true;
    }
    if chi1.nu_exp() + chi2.nu_exp() != Nu::from_integer(0) {
        return false;
    }
    match (chi1.finite_label(), chi2.finite_label()) {
        (FiniteLabel::Opaque { name: a, .. }, FiniteLabel::Opaque { name: b, .. }) => {
            a == b
                && chi1.is_unramified()
                && chi2.is_unramified()
                && chi1.order_hint() == OrderHint::Unknown
                && chi2.order_hint() == OrderHint::Unknown
        }
        _ => false,
    }
}

/// Conductor exponent a(tau).
///
/// Principal series: a(chi1) + a(chi2). Steinberg twists: 1 for unramified
/// chi, 2 a(chi) otherwise. Supercuspidals: the stored exponent. Degenerate
/// principal-series data (ratio nu^{+-1}) has no single conductor and is
/// rejected.
pub fn conductor_gl2(rep: &GL2LocalRep) -> Result<u32, LocalRepError> {
    if rep.borel_inducing_ratio_degenerate() == Some(true) {
        return Err(LocalRepError::InvalidRep(
            "conductor of reducible principal-series data is not defined".into(),
        ));
    }
    Ok(rep.conductor_exp().expect("all variants store a conductor"))
}

/// tau tensor chi.
///
/// Twisting principal series and Steinberg twists rewrites the character data;
/// the result may fail the constructor invariants (nontrivial central
/// character) and is returned raw, as an intermediate value for level
/// formulas. A supercuspidal twisted by a character with ramified finite part
/// has no conductor formula in terms of the stored data and surfaces
/// `TwistIndeterminate`; use [`twist_with_conductor`] when the twisted
/// conductor is known from elsewhere.
pub fn twist(rep: &GL2LocalRep, chi: &PadicCharacter) -> Result<GL2LocalRep, LocalRepError> {
    if rep.prime() != chi.prime() {
        return Err(LocalRepError::PrimeMismatch(rep.prime(), chi.prime()));
    }
    match rep {
        GL2LocalRep::PrincipalSeries { chi1, chi2 } => Ok(GL2LocalRep::PrincipalSeries {
            chi1: chi1.mul(chi)?,
            chi2: chi2.mul(chi)?,
        }),
        GL2LocalRep::SteinbergTwist { chi: chi0 } => {
            Ok(GL2LocalRep::SteinbergTwist { chi: chi0.mul(chi)? })
        }
        GL2LocalRep::Supercuspidal { prime, conductor_exp, label, trivial_central_char } => {
            if chi.conductor_exp() > 0 {
                return Err(LocalRepError::TwistIndeterminate);
            }
            // Unramified twists preserve the conductor.
            Ok(GL2LocalRep::Supercuspidal {
                prime: *prime,
                conductor_exp: *conductor_exp,
                label: format!("{label}*{}", chi.finite_label()),
                trivial_central_char: *trivial_central_char
                    && chi.finite_square_trivial() == Some(true),
            })
        }
    }
}

/// tau tensor chi for a supercuspidal tau and ramified chi, with the conductor
/// of the twist supplied externally (e.g. from tables for a known form).
pub fn twist_with_conductor(
    rep: &GL2LocalRep,
    chi: &PadicCharacter,
    twisted_conductor_exp: u32,
) -> Result<GL2LocalRep, LocalRepError> {
    match rep {
        GL2LocalRep::Supercuspidal { prime, label, trivial_central_char, .. } => {
            if *prime != chi.prime() {
                return Err(LocalRepError::PrimeMismatch(*prime, chi.prime()));
            }
            Ok(GL2LocalRep::Supercuspidal {
                prime: *prime,
                conductor_exp: twisted_conductor_exp,
                label: format!("{label}*{}", chi.finite_label()),
                trivial_central_char: *trivial_central_char
                    && chi.finite_square_trivial() == Some(true),
            })
        }
        _ => twist(rep, chi),
    }
}

/// Rebuilds a representation through the public constructors, re-checking
/// every invariant. Used for data deserialized from files, which bypasses
/// construction. Principal-series data is revalidated in the embedded sense.
pub fn revalidate(rep: &GL2LocalRep) -> Result<GL2LocalRep, LocalRepError> {
    let rebuild_char = |chi: &PadicCharacter| {
        PadicCharacter::new(
            chi.prime(),
            chi.nu_exp(),
            chi.conductor_exp(),
            chi.finite_label().clone(),
            chi.order_hint(),
        )
    };
    match rep {
        GL2LocalRep::PrincipalSeries { chi1, chi2 } => {
            GL2LocalRep::principal_series_embedded(rebuild_char(chi1)?, rebuild_char(chi2)?)
        }
        GL2LocalRep::SteinbergTwist { chi } => GL2LocalRep::steinberg_twist(rebuild_char(chi)?),
        GL2LocalRep::Supercuspidal { prime, conductor_exp, label, trivial_central_char } => {
            if !trivial_central_char {
                return Err(LocalRepError::InvalidRep(
                    "supercuspidal inputs must have trivial central character".into(),
                ));
            }
            GL2LocalRep::supercuspidal(*prime, *conductor_exp, label)
        }
    }
}

/// Unordered comparison of principal-series pairs; other variants compare
/// structurally. This is the equality the case dispatch uses for tau1 = tau2.
pub fn reps_equal(a: &GL2LocalRep, b: &GL2LocalRep) -> bool {
    match (a, b) {
        (
            GL2LocalRep::PrincipalSeries { chi1: a1, chi2: a2 },
            GL2LocalRep::PrincipalSeries { chi1: b1, chi2: b2 },
        ) => (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1),
        _ => a == b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(n: i64, d: i64) -> Nu {
        Nu::new(n, d)
    }

    #[test]
    fn conductor_of_principal_series_adds() {
        let p = 7;
        let chi1 = PadicCharacter::ramified_quad(p, "eta", 2).unwrap();
        let chi2 = chi1.clone();
        let rep = GL2LocalRep::principal_series(chi1, chi2).unwrap();
        assert_eq!(conductor_gl2(&rep).unwrap(), 4);
    }

    #[test]
    fn conductor_of_steinberg() {
        let st = GL2LocalRep::steinberg_twist(PadicCharacter::trivial(3)).unwrap();
        assert_eq!(conductor_gl2(&st).unwrap(), 1);
        let st_uq = GL2LocalRep::steinberg_twist(PadicCharacter::unram_quad(3)).unwrap();
        assert_eq!(conductor_gl2(&st_uq).unwrap(), 1);
        let chi = PadicCharacter::ramified_quad(3, "eta", 1).unwrap();
        let st_ram = GL2LocalRep::steinberg_twist(chi).unwrap();
        assert_eq!(conductor_gl2(&st_ram).unwrap(), 2);
    }

    #[test]
    fn conductor_of_supercuspidal_is_stored() {
        let sc = GL2LocalRep::supercuspidal(2, 3, "sc_a").unwrap();
        assert_eq!(conductor_gl2(&sc).unwrap(), 3);
        assert!(GL2LocalRep::supercuspidal(2, 1, "sc_a").is_err());
    }

    #[test]
    fn ratio_identity_and_shift() {
        let chi = PadicCharacter::opaque(5, "alpha", 1, nu(2, 3)).unwrap();
        assert_eq!(char_ratio_nu_exponent(&chi, &chi), Some(nu(0, 1)));
        let a = PadicCharacter::nu_pow(5, nu(1, 2));
        let b = PadicCharacter::nu_pow(5, nu(-1, 2));
        assert_eq!(char_ratio_nu_exponent(&a, &b), Some(nu(1, 1)));
    }

    #[test]
    fn ratio_of_distinct_labels_is_none() {
        let a = PadicCharacter::opaque(5, "alpha", 0, nu(1, 3)).unwrap();
        let b = PadicCharacter::opaque(5, "beta", 0, nu(1, 3)).unwrap();
        assert_eq!(char_ratio_nu_exponent(&a, &b), None);
        let c = PadicCharacter::ramified_quad(5, "eta", 1).unwrap();
        assert_eq!(char_ratio_nu_exponent(&a, &c), None);
    }

    #[test]
    fn principal_series_rejects_degenerate_ratio() {
        let chi1 = PadicCharacter::nu_pow(7, nu(1, 2));
        let chi2 = PadicCharacter::nu_pow(7, nu(-1, 2));
        assert!(matches!(
            GL2LocalRep::principal_series(chi1.clone(), chi2.clone()),
            Err(LocalRepError::InvalidRep(_))
        ));
        assert!(GL2LocalRep::principal_series_embedded(chi1, chi2).is_ok());
    }

    #[test]
    fn principal_series_requires_trivial_central_char() {
        let chi1 = PadicCharacter::nu_pow(7, nu(1, 3));
        let chi2 = PadicCharacter::nu_pow(7, nu(1, 3));
        assert!(GL2LocalRep::principal_series(chi1, chi2).is_err());
        let chi1 = PadicCharacter::nu_pow(7, nu(1, 3));
        let chi2 = PadicCharacter::nu_pow(7, nu(-1, 3));
        assert!(GL2LocalRep::principal_series(chi1, chi2).is_ok());
    }

    #[test]
    fn steinberg_requires_quadratic_twist() {
        let chi = PadicCharacter::opaque(3, "alpha", 1, nu(0, 1)).unwrap();
        assert!(GL2LocalRep::steinberg_twist(chi).is_err());
        let chi = PadicCharacter::nu_pow(3, nu(1, 2));
        assert!(GL2LocalRep::steinberg_twist(chi).is_err());
    }

    #[test]
    fn twist_supercuspidal_by_ramified_is_indeterminate() {
        let sc = GL2LocalRep::supercuspidal(5, 2, "sc_a").unwrap();
        let chi = PadicCharacter::ramified_quad(5, "eta", 1).unwrap();
        assert_eq!(twist(&sc, &chi), Err(LocalRepError::TwistIndeterminate));
        let annotated = twist_with_conductor(&sc, &chi, 4).unwrap();
        assert_eq!(conductor_gl2(&annotated).unwrap(), 4);
    }

    #[test]
    fn twist_supercuspidal_by_unramified_preserves_conductor() {
        let sc = GL2LocalRep::supercuspidal(5, 2, "sc_a").unwrap();
        let chi = PadicCharacter::unram_quad(5);
        assert_eq!(conductor_gl2(&twist(&sc, &chi).unwrap()).unwrap(), 2);
    }

    #[test]
    fn inverse_of_quadratic_is_itself() {
        let chi = PadicCharacter::ramified_quad(7, "eta", 1).unwrap();
        assert_eq!(chi.inverse(), chi);
        let alpha = PadicCharacter::opaque(7, "alpha", 0, nu(0, 1)).unwrap();
        assert_ne!(alpha.inverse(), alpha);
        assert_eq!(alpha.inverse().inverse(), alpha);
        assert!(alpha.product_is_trivial(&alpha.inverse()));
    }

    #[test]
    fn product_of_ramified_unrelated_labels_is_indeterminate() {
        let a = PadicCharacter::ramified_quad(7, "eta1", 1).unwrap();
        let b = PadicCharacter::ramified_quad(7, "eta2", 1).unwrap();
        assert_eq!(a.mul(&b), Err(LocalRepError::ProductIndeterminate));
        // Equal ramified quadratics cancel.
        assert!(a.mul(&a).unwrap().is_pure_nu());
    }

    #[test]
    fn principal_series_equality_is_unordered()  {
        let chi1 = PadicCharacter::nu_pow(7, nu(1, 3));
        let chi2 = PadicCharacter::nu_pow(7, nu(-1, 3));
        let a = GL2LocalRep::principal_series(chi1.clone(), chi2.clone()).unwrap();
        let b = GL2LocalRep::principal_series(chi2, chi1).unwrap();
        assert!(reps_equal(&a, &b));
    }
}
