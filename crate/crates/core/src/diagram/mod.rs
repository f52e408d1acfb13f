//! Classification of connected Coxeter diagrams and enumeration of
//! elliptic (finite-type) generator subsets.

mod classify;
mod elliptic;

pub use classify::classify_connected;
pub use elliptic::{
    census, enumerate_elliptic_subsets, is_elliptic, Census, CensusEntry, EllipticSubset,
    DEFAULT_RANK_BOUND,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::{bracket_factors, IntPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("the diagram is not connected")]
    Disconnected,
    #[error("{0} is not spherical")]
    NotSpherical(String),
    #[error("subset {0:?} is not elliptic")]
    NotElliptic(Vec<usize>),
    #[error("rank {rank} exceeds the enumeration bound {bound}")]
    RankBoundExceeded { rank: usize, bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DiagramKind {
    Spherical,
    Affine,
    Indefinite,
}

/// Family letter. Affine families carry a tilde in their display name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2,
    AffineA,
    AffineB,
    AffineC,
    AffineD,
    AffineE6,
    AffineE7,
    AffineE8,
    AffineF4,
    AffineG2,
    None,
}

/// Type of a connected diagram. `rank` is the number of nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramType {
    pub kind: DiagramKind,
    pub family: Family,
    pub rank: usize,
    /// The `m` of `I2(m)`.
    pub parameter: Option<u32>,
}

impl DiagramType {
    pub(crate) fn spherical(family: Family, rank: usize) -> Self {
        Self {
            kind: DiagramKind::Spherical,
            family,
            rank,
            parameter: None,
        }
    }

    pub(crate) fn affine(family: Family, rank: usize) -> Self {
        Self {
            kind: DiagramKind::Affine,
            family,
            rank,
            parameter: None,
        }
    }

    pub(crate) fn indefinite(rank: usize) -> Self {
        Self {
            kind: DiagramKind::Indefinite,
            family: Family::None,
            rank,
            parameter: None,
        }
    }

    pub fn dihedral(m: u32) -> Self {
        match m {
            3 => Self::spherical(Family::A, 2),
            4 => Self::spherical(Family::B, 2),
            _ => Self {
                kind: DiagramKind::Spherical,
                family: Family::I2,
                rank: 2,
                parameter: Some(m),
            },
        }
    }

    pub fn is_spherical(&self) -> bool {
        self.kind == DiagramKind::Spherical
    }

    /// Conventional name such as `H4`, `I2(5)`, `~A2`, or `hyperbolic/indefinite`.
    pub fn name(&self) -> String {
        let n = self.rank;
        match self.family {
            Family::A => format!("A{n}"),
            Family::B => format!("B{n}"),
            Family::D => format!("D{n}"),
            Family::E6 => "E6".into(),
            Family::E7 => "E7".into(),
            Family::E8 => "E8".into(),
            Family::F4 => "F4".into(),
            Family::H3 => "H3".into(),
            Family::H4 => "H4".into(),
            Family::I2 => format!("I2({})", self.parameter.unwrap_or(0)),
            Family::AffineA => format!("~A{}", n - 1),
            Family::AffineB => format!("~B{}", n - 1),
            Family::AffineC => format!("~C{}", n - 1),
            Family::AffineD => format!("~D{}", n - 1),
            Family::AffineE6 => "~E6".into(),
            Family::AffineE7 => "~E7".into(),
            Family::AffineE8 => "~E8".into(),
            Family::AffineF4 => "~F4".into(),
            Family::AffineG2 => "~G2".into(),
            Family::None => format!("indefinite({n})"),
        }
    }

    /// Exponents `m_1 <= … <= m_n` of a spherical type.
    pub fn exponents(&self) -> Result<Vec<u32>, DiagramError> {
        if !self.is_spherical() {
            return Err(DiagramError::NotSpherical(self.name()));
        }
        let n = self.rank as u32;
        let e: Vec<u32> = match self.family {
            Family::A => (1..=n).collect(),
            Family::B => (1..=n).map(|k| 2 * k - 1).collect(),
            Family::D => {
                let mut v: Vec<u32> = (1..n).map(|k| 2 * k - 1).collect();
                v.push(n - 1);
                v.sort_unstable();
                v
            }
            Family::E6 => vec![1, 4, 5, 7, 8, 11],
            Family::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            Family::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            Family::F4 => vec![1, 5, 7, 11],
            Family::H3 => vec![1, 5, 9],
            Family::H4 => vec![1, 11, 19, 29],
            Family::I2 => vec![1, self.parameter.expect("dihedral parameter") - 1],
            _ => unreachable!("spherical families only"),
        };
        Ok(e)
    }

    /// Solomon polynomial `∏ [m_i + 1]`.
    pub fn solomon_polynomial(&self) -> Result<IntPolynomial, DiagramError> {
        let ks: Vec<usize> = self.exponents()?.iter().map(|&m| m as usize + 1).collect();
        Ok(IntPolynomial::bracket_product(&ks))
    }

    /// Group order `∏ (m_i + 1)`.
    pub fn group_order(&self) -> Result<u128, DiagramError> {
        Ok(self.exponents()?.iter().map(|&m| m as u128 + 1).product())
    }

    /// Multiplicities of cyclotomic factors `Φ_d` in the Solomon polynomial.
    pub fn cyclotomic_profile(&self) -> Result<BTreeMap<usize, u32>, DiagramError> {
        let mut out = BTreeMap::new();
        for m in self.exponents()? {
            for d in bracket_factors(m as usize + 1) {
                *out.entry(d).or_insert(0) += 1;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for DiagramType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}
