//! Finite Coxeter systems of types A_n, B_n, D_n, H_3 and I_2(m), their
//! enumeration, Bruhat and weak orders, and parabolic factorizations.
//!
//! Generators are stored with a 0-based internal index. The printed labels
//! follow the usual diagrams: `s1..sn` for every type except D_n, which uses
//! `s0..s(n-1)` with `s0` attached to the branch vertex `s2`.
//!
//! | type  | internal 0        | internal i >= 1                      |
//! |-------|-------------------|--------------------------------------|
//! | A_n   | s1 = (1 2)        | s(i+1) = (i+1 i+2) on positions       |
//! | B_n   | s1 = sign of pos 1 | s(i+1) = swap positions i, i+1       |
//! | D_n   | s0 = swap 1,2 and negate both | s_i = swap positions i, i+1 |
//! | H_3   | s1                | s2, s3 (5-bond between s2 and s3)    |
//! | I2(m) | s = sigma         | t = rho sigma                         |

mod bruhat;
pub mod cache;
mod element;
mod group;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bruhat::{BruhatPoset, DEFAULT_POSET_LIMIT};
pub use element::{Canonical, GoldenInt, GoldenMatrix};
pub use group::{ElementId, Group, DEFAULT_ENUMERATION_LIMIT};

/// Family label of a Coxeter system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    D,
    H3,
    I2,
    Product,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::D => "D",
            TypeLabel::H3 => "H3",
            TypeLabel::I2 => "I2",
            TypeLabel::Product => "Product",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for TypeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "D" => Ok(TypeLabel::D),
            "H3" | "H" => Ok(TypeLabel::H3),
            "I2" | "I" => Ok(TypeLabel::I2),
            _ => Err(Error::InvalidSystem {
                label: s.to_string(),
                reason: "unknown type; expected one of A, B, D, H3, I2".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    A(usize),
    B(usize),
    D(usize),
    H3,
    I2(u32),
    Product(Box<CoxeterSystem>, Box<CoxeterSystem>),
}

/// A finite Coxeter system with its generator numbering and an exact
/// realization of its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    kind: Kind,
    coxeter_matrix: Vec<Vec<u32>>,
    generators: Vec<Canonical>,
    labels: Vec<u32>,
}

fn swap_positions(n: usize, i: usize) -> Vec<i8> {
    // 0-based positions i, i+1
    let mut v: Vec<i8> = (1..=n as i8).collect();
    v.swap(i, i + 1);
    v
}

fn linear_matrix(rank: usize, bond: impl Fn(usize) -> u32) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in 0..rank.saturating_sub(1) {
        m[i][i + 1] = bond(i);
        m[i + 1][i] = bond(i);
    }
    m
}

impl CoxeterSystem {
    /// Builds a system from its type, rank and (for I2) the dihedral order.
    pub fn build(label: TypeLabel, rank: usize, dihedral_m: Option<u32>) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidSystem {
            label: format!("{label}{rank}"),
            reason: reason.to_string(),
        };
        match label {
            TypeLabel::A if rank >= 1 => Ok(Self::type_a(rank)),
            TypeLabel::A => Err(bad("A_n needs n >= 1")),
            TypeLabel::B if rank >= 2 => Ok(Self::type_b(rank)),
            TypeLabel::B => Err(bad("B_n needs n >= 2")),
            TypeLabel::D if rank >= 4 => Ok(Self::type_d(rank)),
            TypeLabel::D => Err(bad("D_n needs n >= 4")),
            TypeLabel::H3 if rank == 3 || rank == 0 => Ok(Self::type_h3()),
            TypeLabel::H3 => Err(bad("H3 has rank 3")),
            TypeLabel::I2 => match dihedral_m {
                Some(m) if m >= 3 && (rank == 2 || rank == 0) => Ok(Self::type_i2(m)),
                Some(_) if rank != 2 && rank != 0 => Err(bad("I2(m) has rank 2")),
                _ => Err(bad("I2(m) needs m >= 3")),
            },
            TypeLabel::Product => Err(bad("use CoxeterSystem::product for reducible systems")),
        }
    }

    pub fn type_a(n: usize) -> Self {
        let generators = (0..n)
            .map(|i| Canonical::Perm(swap_positions(n + 1, i)))
            .collect();
        Self {
            kind: Kind::A(n),
            coxeter_matrix: linear_matrix(n, |_| 3),
            generators,
            labels: (1..=n as u32).collect(),
        }
    }

    pub fn type_b(n: usize) -> Self {
        let mut generators = Vec::with_capacity(n);
        let mut neg: Vec<i8> = (1..=n as i8).collect();
        neg[0] = -1;
        generators.push(Canonical::Perm(neg));
        for i in 1..n {
            generators.push(Canonical::Perm(swap_positions(n, i - 1)));
        }
        Self {
            kind: Kind::B(n),
            coxeter_matrix: linear_matrix(n, |i| if i == 0 { 4 } else { 3 }),
            generators,
            labels: (1..=n as u32).collect(),
        }
    }

    pub fn type_d(n: usize) -> Self {
        let mut generators = Vec::with_capacity(n);
        let mut s0: Vec<i8> = (1..=n as i8).collect();
        s0[0] = -2;
        s0[1] = -1;
        generators.push(Canonical::Perm(s0));
        for i in 1..n {
            generators.push(Canonical::Perm(swap_positions(n, i - 1)));
        }
        // index 0 = s0 attached to s2; indices 1..n-1 form the path s1 - ... - s(n-1)
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for i in 1..n - 1 {
            m[i][i + 1] = 3;
            m[i + 1][i] = 3;
        }
        m[0][2] = 3;
        m[2][0] = 3;
        Self {
            kind: Kind::D(n),
            coxeter_matrix: m,
            generators,
            labels: (0..n as u32).collect(),
        }
    }

    pub fn type_h3() -> Self {
        // sigma_s(alpha_t) = alpha_t + c(s,t) alpha_s with c = -2 B(alpha_s, alpha_t):
        // c(s,s) = -2, c(1,2) = 1, c(2,3) = phi, c(1,3) = 0.
        let c = |s: usize, t: usize| -> GoldenInt {
            match (s.min(t), s.max(t)) {
                (a, b) if a == b => GoldenInt::int(-2),
                (0, 1) => GoldenInt::ONE,
                (1, 2) => GoldenInt::PHI,
                _ => GoldenInt::ZERO,
            }
        };
        let generators = (0..3)
            .map(|s| {
                let mut m = [GoldenInt::ZERO; 9];
                for i in 0..3 {
                    for j in 0..3 {
                        let mut v = if i == j {
                            GoldenInt::ONE
                        } else {
                            GoldenInt::ZERO
                        };
                        if i == s {
                            v = v + c(s, j);
                        }
                        m[3 * i + j] = v;
                    }
                }
                Canonical::Matrix(Box::new(m))
            })
            .collect();
        Self {
            kind: Kind::H3,
            coxeter_matrix: linear_matrix(3, |i| if i == 1 { 5 } else { 3 }),
            generators,
            labels: vec![1, 2, 3],
        }
    }

    pub fn type_i2(m: u32) -> Self {
        let generators = vec![
            Canonical::Dihedral {
                rotation: 0,
                reflection: true,
            },
            Canonical::Dihedral {
                rotation: 1 % m,
                reflection: true,
            },
        ];
        Self {
            kind: Kind::I2(m),
            coxeter_matrix: vec![vec![1, m], vec![m, 1]],
            generators,
            labels: vec![1, 2],
        }
    }

    /// The reducible system `W1 x W2`; generators of `W1` come first.
    pub fn product(first: CoxeterSystem, second: CoxeterSystem) -> Self {
        let (r1, r2) = (first.rank(), second.rank());
        let mut m = vec![vec![2u32; r1 + r2]; r1 + r2];
        for (i, row) in first.coxeter_matrix.iter().enumerate() {
            m[i][..r1].copy_from_slice(row);
        }
        for (i, row) in second.coxeter_matrix.iter().enumerate() {
            m[r1 + i][r1..].copy_from_slice(row);
        }
        let e1 = first.identity();
        let e2 = second.identity();
        let mut generators = Vec::with_capacity(r1 + r2);
        for g in &first.generators {
            generators.push(Canonical::Pair(Box::new(g.clone()), Box::new(e2.clone())));
        }
        for g in &second.generators {
            generators.push(Canonical::Pair(Box::new(e1.clone()), Box::new(g.clone())));
        }
        Self {
            kind: Kind::Product(Box::new(first), Box::new(second)),
            coxeter_matrix: m,
            generators,
            labels: (1..=(r1 + r2) as u32).collect(),
        }
    }

    pub fn type_label(&self) -> TypeLabel {
        match self.kind {
            Kind::A(_) => TypeLabel::A,
            Kind::B(_) => TypeLabel::B,
            Kind::D(_) => TypeLabel::D,
            Kind::H3 => TypeLabel::H3,
            Kind::I2(_) => TypeLabel::I2,
            Kind::Product(..) => TypeLabel::Product,
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn dihedral_m(&self) -> Option<u32> {
        match self.kind {
            Kind::I2(m) => Some(m),
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<(&CoxeterSystem, &CoxeterSystem)> {
        match &self.kind {
            Kind::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    pub fn generator(&self, i: usize) -> Result<&Canonical> {
        self.generators.get(i).ok_or(Error::GeneratorOutOfRange {
            index: i,
            rank: self.rank(),
        })
    }

    /// Printed label of the generator with internal index `i` (`s<label>`).
    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    /// Internal index of the generator printed as `s<label>`.
    pub fn index_of_label(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// `|W|` from the classification.
    pub fn order(&self) -> usize {
        let fact = |n: usize| (1..=n).product::<usize>();
        match &self.kind {
            Kind::A(n) => fact(n + 1),
            Kind::B(n) => (1usize << n) * fact(*n),
            Kind::D(n) => (1usize << (n - 1)) * fact(*n),
            Kind::H3 => 120,
            Kind::I2(m) => 2 * *m as usize,
            Kind::Product(a, b) => a.order() * b.order(),
        }
    }

    pub fn identity(&self) -> Canonical {
        match &self.kind {
            Kind::A(n) => Canonical::Perm((1..=(*n as i8 + 1)).collect()),
            Kind::B(n) | Kind::D(n) => Canonical::Perm((1..=*n as i8).collect()),
            Kind::H3 => {
                let mut m = [GoldenInt::ZERO; 9];
                for i in 0..3 {
                    m[4 * i] = GoldenInt::ONE;
                }
                Canonical::Matrix(Box::new(m))
            }
            Kind::I2(_) => Canonical::Dihedral {
                rotation: 0,
                reflection: false,
            },
            Kind::Product(a, b) => Canonical::Pair(Box::new(a.identity()), Box::new(b.identity())),
        }
    }

    /// Exact product of canonical forms.
    pub fn multiply(&self, x: &Canonical, y: &Canonical) -> Canonical {
        match (&self.kind, x, y) {
            (Kind::Product(a, b), Canonical::Pair(x1, x2), Canonical::Pair(y1, y2)) => {
                Canonical::Pair(Box::new(a.multiply(x1, y1)), Box::new(b.multiply(x2, y2)))
            }
            (Kind::I2(m), _, _) => x.compose(y, *m),
            _ => x.compose(y, 0),
        }
    }

    /// Short name such as `A3`, `D5`, `I2(7)` or `A2xA1`.
    pub fn name(&self) -> String {
        match &self.kind {
            Kind::A(n) => format!("A{n}"),
            Kind::B(n) => format!("B{n}"),
            Kind::D(n) => format!("D{n}"),
            Kind::H3 => "H3".into(),
            Kind::I2(m) => format!("I2({m})"),
            Kind::Product(a, b) => format!("{}x{}", a.name(), b.name()),
        }
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
