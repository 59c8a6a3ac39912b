//! Archimedean bookkeeping for vector-valued Siegel forms of degree 2:
//! Hodge numbers of the coefficient system, the four discrete-series
//! Harish-Chandra parameters sharing its infinitesimal character, and the
//! archimedean parameters of the lifts from GSO(2, 2).

use serde::{Deserialize, Serialize};

/// Highest weight (l, m) of an irreducible coefficient system for Sp(4),
/// l >= m >= 0, with the central weight fixed to c = -l - m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HighestWeight {
    l: i64,
    m: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("highest weight needs l >= m >= 0, got l = {0}, m = {1}")]
    NotDominant(i64, i64),
}

/// One row of the Hodge decomposition of the coefficient system: Hodge type
/// (p, q) realized in bidegree (wp, wq).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeRow {
    pub p: u8,
    pub q: u8,
    pub weight: (i64, i64),
}

/// One discrete series in the archimedean L-packet: Harish-Chandra parameter
/// before and after the rho shift, and the dimension q of the maximal
/// compact-mod-center cell it contributes to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscreteSeriesParam {
    pub packet_index: u8,
    pub lambda: (i64, i64, i64),
    pub lambda_plus_rho: (i64, i64, i64),
    pub q_harish: u8,
}

impl HighestWeight {
    pub fn new(l: i64, m: i64) -> Result<Self, WeightError> {
        if l >= m && m >= 0 {
            Ok(HighestWeight { l, m })
        } else {
            Err(WeightError::NotDominant(l, m))
        }
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Central weight; fixed by the normalization used throughout.
    pub fn c(&self) -> i64 {
        -self.l - self.m
    }

    /// Regularity margin needed for the cohomological arguments:
    /// l - m >= 2 and m >= 2.
    pub fn sufficiently_regular(&self) -> bool {
        self.l - self.m >= 2 && self.m >= 2
    }

    /// Hodge bidegrees of the local system in middle cohomology, listed from
    /// (0, 3) down to (3, 0).
    pub fn hodge_table(&self) -> [HodgeRow; 4] {
        let (l, m) = (self.l, self.m);
        [
            HodgeRow { p: 0, q: 3, weight: (-m, -l) },
            HodgeRow { p: 1, q: 2, weight: (m + 2, -l) },
            HodgeRow { p: 2, q: 1, weight: (l + 3, 1 - m) },
            HodgeRow { p: 3, q: 0, weight: (l + 3, m + 3) },
        ]
    }

    /// The four discrete series with the infinitesimal character of the
    /// coefficient system, indexed I..IV from the holomorphic corner down.
    pub fn discrete_series_params(&self) -> [DiscreteSeriesParam; 4] {
        let (l, m, c) = (self.l, self.m, self.c());
        [
            DiscreteSeriesParam {
                packet_index: 1,
                lambda: (-m, -l, c),
                lambda_plus_rho: (-m - 1, -l - 2, c),
                q_harish: 3,
            },
            DiscreteSeriesParam {
                packet_index: 2,
                lambda: (m + 2, -l, c),
                lambda_plus_rho: (m + 1, -l - 2, c),
                q_harish: 2,
            },
            DiscreteSeriesParam {
                packet_index: 3,
                lambda: (l + 3, 1 - m, -c),
                lambda_plus_rho: (l + 2, -m - 1, -c),
                q_harish: 1,
            },
            DiscreteSeriesParam {
                packet_index: 4,
                lambda: (l + 3, m + 3, -c),
                lambda_plus_rho: (l + 2, m + 1, -c),
                q_harish: 0,
            },
        ]
    }

    /// Archimedean parameters (a, b; c) of the two lifts from GSO(2, 2)
    /// matching the packet: the branch through packet member II and the one
    /// through III.
    pub fn go22_arch_params(&self) -> [(i64, i64, i64); 2] {
        let (l, m, c) = (self.l, self.m, self.c());
        [(l + m + 4, l - m + 2, c), (l + m + 4, m - l - 2, c)]
    }
}

/// Multiplicity of an elliptic-pair contribution with e sign-flipped places:
/// (1 + (-1)^e) / 2, i.e. 1 for even e and 0 for odd e.
pub fn multiplicity(e: u32) -> u32 {
    (1 + (-1i32).pow(e % 2)) as u32 / 2
}
