//! Exact canonical forms for group elements.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::{Deserialize, Serialize};

/// An element `a + b*phi` of the ring `Z[phi]`, where `phi^2 = phi + 1`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

impl GoldenInt {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const PHI: Self = Self { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn int(a: i64) -> Self {
        Self { a, b: 0 }
    }
}

impl Add for GoldenInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Neg for GoldenInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for GoldenInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
        Self::new(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}phi"),
            (a, b) if b < 0 => write!(f, "{a}-{}phi", -b),
            (a, b) => write!(f, "{a}+{b}phi"),
        }
    }
}

/// 3x3 matrix over `Z[phi]`, row-major.
pub type GoldenMatrix = [GoldenInt; 9];

pub(crate) fn golden_matmul(x: &GoldenMatrix, y: &GoldenMatrix) -> GoldenMatrix {
    let mut out = [GoldenInt::ZERO; 9];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = GoldenInt::ZERO;
            for k in 0..3 {
                acc = acc + x[3 * i + k] * y[3 * k + j];
            }
            out[3 * i + j] = acc;
        }
    }
    out
}

/// Canonical form of a group element. Structural equality is group equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Canonical {
    /// Signed one-line notation `w(1) ... w(n)`; unsigned for type A.
    Perm(Vec<i8>),
    /// `rho^rotation * sigma^reflection` in the dihedral group of order `2m`.
    Dihedral { rotation: u32, reflection: bool },
    /// Matrix of the geometric representation over `Z[phi]`.
    Matrix(Box<GoldenMatrix>),
    /// Element of a direct product.
    Pair(Box<Canonical>, Box<Canonical>),
}

impl Canonical {
    /// Product `self * other` (apply `other` first when read as functions).
    pub(crate) fn compose(&self, other: &Canonical, dihedral_m: u32) -> Canonical {
        match (self, other) {
            (Canonical::Perm(u), Canonical::Perm(v)) => Canonical::Perm(
                v.iter()
                    .map(|&x| {
                        let y = u[(x.unsigned_abs() - 1) as usize];
                        if x < 0 {
                            -y
                        } else {
                            y
                        }
                    })
                    .collect(),
            ),
            (
                Canonical::Dihedral {
                    rotation: a,
                    reflection: f,
                },
                Canonical::Dihedral {
                    rotation: b,
                    reflection: g,
                },
            ) => {
                // rho^a sigma^f rho^b sigma^g = rho^(a +- b) sigma^(f+g)
                let m = dihedral_m;
                let rotation = if *f { (a + m - b % m) % m } else { (a + b) % m };
                Canonical::Dihedral {
                    rotation,
                    reflection: f ^ g,
                }
            }
            (Canonical::Matrix(x), Canonical::Matrix(y)) => {
                Canonical::Matrix(Box::new(golden_matmul(x, y)))
            }
            _ => panic!(
                "compose: mismatched canonical forms (use CoxeterSystem::multiply for products)"
            ),
        }
    }

    /// The underlying signed one-line notation, if this is a permutation.
    pub fn one_line(&self) -> Option<&[i8]> {
        match self {
            Canonical::Perm(v) => Some(v),
            _ => None,
        }
    }
}
