//! Dimensions and motivic bookkeeping for the endoscopic part of the
//! cohomology of a Siegel modular threefold: elliptic cusp form dimensions,
//! the dimension of the strict endoscopic subspace, and a small algebra of
//! formal sums of S[k] L^j and Tate pieces.

use std::collections::BTreeMap;

use crate::archimedean::HighestWeight;

/// dim S_k(SL(2, Z)): 0 for odd k and for k < 12; otherwise floor(k/12),
/// minus one when k = 2 mod 12.
pub fn dim_cusp_forms_level1(k: u32) -> u32 {
    if k % 2 == 1 || k < 12 {
        return 0;
    }
    let q = k / 12;
    if k % 12 == 2 {
        q - 1
    } else {
        q
    }
}

/// Dimension of the strict endoscopic part of the interior cohomology for the
/// coefficient system of highest weight (l, m): 2 s_{l+m+4} s_{l-m+2}.
pub fn strict_endoscopic_dim(weight: &HighestWeight) -> u64 {
    let a = dim_cusp_forms_level1((weight.l() + weight.m() + 4) as u32) as u64;
    let b = dim_cusp_forms_level1((weight.l() - weight.m() + 2) as u32) as u64;
    2 * a * b
}

/// A formal integer combination of motives S[k] L^j (modular piece of weight
/// k twisted by j Tate steps) and pure Tate pieces L^j.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MotivicElement {
    /// (k, j) -> coefficient of S[k] L^j.
    pub terms: BTreeMap<(u32, u32), i64>,
    /// j -> coefficient of L^j.
    pub tate: BTreeMap<u32, i64>,
}

impl MotivicElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn modular(k: u32, j: u32, coeff: i64) -> Self {
        let mut e = Self::default();
        if coeff != 0 {
            e.terms.insert((k, j), coeff);
        }
        e
    }

    pub fn tate_power(j: u32, coeff: i64) -> Self {
        let mut e = Self::default();
        if coeff != 0 {
            e.tate.insert(j, coeff);
        }
        e
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&key, &c) in &other.terms {
            let entry = out.terms.entry(key).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.terms.remove(&key);
            }
        }
        for (&key, &c) in &other.tate {
            let entry = out.tate.entry(key).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.tate.remove(&key);
            }
        }
        out
    }

    /// Total Betti dimension, ignoring signs: each S[k] contributes 2 s_k per
    /// unit coefficient, each L^j contributes 1.
    pub fn betti_dim(&self) -> u64 {
        let modular: u64 = self
            .terms
            .iter()
            .map(|(&(k, _), &c)| c.unsigned_abs() * 2 * dim_cusp_forms_level1(k) as u64)
            .sum();
        let tate: u64 = self.tate.values().map(|&c| c.unsigned_abs()).sum();
        modular + tate
    }

    /// Signed Euler characteristic contribution of the element.
    pub fn euler_number(&self) -> i64 {
        let modular: i64 = self
            .terms
            .iter()
            .map(|(&(k, _), &c)| c * 2 * dim_cusp_forms_level1(k) as i64)
            .sum();
        let tate: i64 = self.tate.values().sum();
        modular + tate
    }

    /// Hodge types with multiplicities, coefficients taken by absolute value:
    /// S[k] L^j contributes s_k copies each of (k - 1 + j, j) and
    /// (j, k - 1 + j); L^j contributes (j, j).
    pub fn hodge_types(&self) -> BTreeMap<(u32, u32), u64> {
        let mut out: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for (&(k, j), &c) in &self.terms {
            let s = dim_cusp_forms_level1(k) as u64;
            if s == 0 || c == 0 {
                continue;
            }
            let mult = c.unsigned_abs() * s;
            *out.entry((k - 1 + j, j)).or_insert(0) += mult;
            *out.entry((j, k - 1 + j)).or_insert(0) += mult;
        }
        for (&j, &c) in &self.tate {
            if c != 0 {
                *out.entry((j, j)).or_insert(0) += c.unsigned_abs();
            }
        }
        out
    }

    /// Motivic weight if every term has the same one: S[k] L^j has weight
    /// k - 1 + 2j, L^j has weight 2j.
    pub fn pure_weight(&self) -> Option<i64> {
        let mut weight = None;
        let mut push = |w: i64| match weight {
            None => {
                weight = Some(w);
                true
            }
            Some(prev) => prev == w,
        };
        for &(k, j) in self.terms.keys() {
            if !push(i64::from(k) - 1 + 2 * i64::from(j)) {
                return None;
            }
        }
        for &j in self.tate.keys() {
            if !push(2 * i64::from(j)) {
                return None;
            }
        }
        weight
    }
}

/// The endoscopic contribution to the interior motive for coefficient weight
/// (l, m): minus s_{l+m+4} copies of S[l-m+2] L^{m+1}.
pub fn endoscopic_motive(weight: &HighestWeight) -> MotivicElement {
    let s_big = dim_cusp_forms_level1((weight.l() + weight.m() + 4) as u32) as i64;
    MotivicElement::modular(
        (weight.l() - weight.m() + 2) as u32,
        (weight.m() + 1) as u32,
        -s_big,
    )
}
