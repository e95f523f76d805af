//! Exact arithmetic for the ring-division algebras over the rationals.
//!
//! The complex, quaternion, and octonion products are all driven by the same
//! bilinear rule `e_i.e_j = -delta_ij + eps_ijk e_k`, with the totally
//! antisymmetric structure constants held in a [`StructureTable`]. The table
//! is dense and precomputed once per algebra; multiplication only does table
//! lookups.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// The three ring-division algebras with imaginary units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algebra {
    Complex,
    Quaternion,
    Octonion,
}

impl Algebra {
    /// Real dimension: 2, 4, or 8.
    pub fn dim(self) -> usize {
        match self {
            Algebra::Complex => 2,
            Algebra::Quaternion => 4,
            Algebra::Octonion => 8,
        }
    }

    /// Number of imaginary units: `dim() - 1`.
    pub fn imaginary_count(self) -> u8 {
        (self.dim() - 1) as u8
    }

    pub fn tag(self) -> &'static str {
        match self {
            Algebra::Complex => "C",
            Algebra::Quaternion => "H",
            Algebra::Octonion => "O",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "C" | "c" | "complex" => Some(Algebra::Complex),
            "H" | "h" | "quaternion" => Some(Algebra::Quaternion),
            "O" | "o" | "octonion" => Some(Algebra::Octonion),
            _ => None,
        }
    }

    /// Checks an imaginary index against `1..=imaginary_count()`.
    pub fn check_index(self, index: u8) -> Result<()> {
        if index == 0 || index > self.imaginary_count() {
            return Err(Error::IndexOutOfRange {
                algebra: self,
                index,
                max: self.imaginary_count(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The quaternionic eps triple: the standard Levi-Civita symbol on 1..3.
const QUATERNION_TRIPLES: [(u8, u8, u8); 1] = [(1, 2, 3)];

/// The seven octonionic triples with `eps = +1`.
const OCTONION_TRIPLES: [(u8, u8, u8); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
];

/// Dense table of structure constants for one algebra.
///
/// For every ordered pair of imaginary indices `(i, j)` with `i != j` the
/// table stores the unique `(sign, k)` with `eps_ijk = sign`, or `None` when
/// `eps_ij. = 0` (possible only for octonions). Total antisymmetry is baked
/// in at construction from the positive triples.
#[derive(Debug, Clone)]
pub struct StructureTable {
    algebra: Algebra,
    entries: Vec<Option<(i8, u8)>>,
}

impl StructureTable {
    /// Builds the table for `H` or `O`. The complex algebra has no
    /// imaginary triples, so asking for its table is an error.
    pub fn for_algebra(algebra: Algebra) -> Result<&'static StructureTable> {
        match algebra {
            Algebra::Complex => Err(Error::UnsupportedAlgebra(algebra)),
            Algebra::Quaternion | Algebra::Octonion => Ok(Self::cached(algebra)),
        }
    }

    pub(crate) fn cached(algebra: Algebra) -> &'static StructureTable {
        static COMPLEX: OnceLock<StructureTable> = OnceLock::new();
        static QUATERNION: OnceLock<StructureTable> = OnceLock::new();
        static OCTONION: OnceLock<StructureTable> = OnceLock::new();
        match algebra {
            Algebra::Complex => COMPLEX.get_or_init(|| Self::build(algebra, &[])),
            Algebra::Quaternion => {
                QUATERNION.get_or_init(|| Self::build(algebra, &QUATERNION_TRIPLES))
            }
            Algebra::Octonion => OCTONION.get_or_init(|| Self::build(algebra, &OCTONION_TRIPLES)),
        }
    }

    fn build(algebra: Algebra, triples: &[(u8, u8, u8)]) -> StructureTable {
        let m = algebra.imaginary_count() as usize;
        let mut entries = vec![None; m * m];
        let mut put = |i: u8, j: u8, sign: i8, k: u8| {
            let idx = (i as usize - 1) * m + (j as usize - 1);
            debug_assert!(entries[idx].is_none(), "duplicate eps entry");
            entries[idx] = Some((sign, k));
        };
        for &(a, b, c) in triples {
            // Even permutations carry +1, odd permutations -1.
            put(a, b, 1, c);
            put(b, c, 1, a);
            put(c, a, 1, b);
            put(b, a, -1, c);
            put(c, b, -1, a);
            put(a, c, -1, b);
        }
        StructureTable { algebra, entries }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    /// The `(sign, k)` with `e_i.e_j = -delta_ij + sign e_k`, if any
    /// imaginary part survives. `i` and `j` must be in range.
    pub fn product(&self, i: u8, j: u8) -> Option<(i8, u8)> {
        let m = self.algebra.imaginary_count() as usize;
        assert!(i >= 1 && (i as usize) <= m && j >= 1 && (j as usize) <= m);
        if i == j {
            return None;
        }
        self.entries[(i as usize - 1) * m + (j as usize - 1)]
    }

    /// The structure constant `eps_ijk` for distinct in-range indices
    /// (zero when any two indices coincide).
    pub fn eps(&self, i: u8, j: u8, k: u8) -> i8 {
        if i == j || j == k || i == k {
            return 0;
        }
        match self.product(i, j) {
            Some((sign, l)) if l == k => sign,
            _ => 0,
        }
    }
}

/// Public entry point matching the table's role in the build: `H` or `O`.
pub fn structure_table(algebra: Algebra) -> Result<&'static StructureTable> {
    StructureTable::for_algebra(algebra)
}

/// Common behaviour of the three coefficient-tuple element types.
///
/// All arithmetic is exact and every method is a pure function, so values
/// can be shared across threads freely.
pub trait AlgebraElement: Sized + Clone + PartialEq + fmt::Debug {
    const ALGEBRA: Algebra;

    fn coeffs(&self) -> &[Scalar];

    /// Builds an element from coefficients in unit order `(1, e_1, ...)`.
    /// Panics if the length is wrong; use [`try_from_coeffs`] for inputs
    /// that are not statically sized.
    ///
    /// [`try_from_coeffs`]: AlgebraElement::try_from_coeffs
    fn from_coeffs(coeffs: Vec<Scalar>) -> Self;

    fn try_from_coeffs(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != Self::ALGEBRA.dim() {
            return Err(Error::DimensionMismatch {
                got: coeffs.len(),
                want: Self::ALGEBRA.dim(),
            });
        }
        Ok(Self::from_coeffs(coeffs))
    }

    fn zero() -> Self {
        Self::from_coeffs(vec![Scalar::zero(); Self::ALGEBRA.dim()])
    }

    fn one() -> Self {
        let mut c = vec![Scalar::zero(); Self::ALGEBRA.dim()];
        c[0] = int(1);
        Self::from_coeffs(c)
    }

    /// The basis unit `e_index`; index 0 is the real unit.
    fn basis(index: u8) -> Result<Self> {
        if index as usize >= Self::ALGEBRA.dim() {
            return Err(Error::IndexOutOfRange {
                algebra: Self::ALGEBRA,
                index,
                max: Self::ALGEBRA.imaginary_count(),
            });
        }
        let mut c = vec![Scalar::zero(); Self::ALGEBRA.dim()];
        c[index as usize] = int(1);
        Ok(Self::from_coeffs(c))
    }

    fn is_zero(&self) -> bool {
        self.coeffs().iter().all(Scalar::is_zero)
    }

    fn add(&self, other: &Self) -> Self {
        let c = self
            .coeffs()
            .iter()
            .zip(other.coeffs())
            .map(|(a, b)| a + b)
            .collect();
        Self::from_coeffs(c)
    }

    fn sub(&self, other: &Self) -> Self {
        let c = self
            .coeffs()
            .iter()
            .zip(other.coeffs())
            .map(|(a, b)| a - b)
            .collect();
        Self::from_coeffs(c)
    }

    fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs().iter().map(|a| -a).collect())
    }

    fn scale(&self, s: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs().iter().map(|a| a * s).collect())
    }

    /// The bilinear product induced by the structure table.
    fn mul(&self, other: &Self) -> Self {
        let dim = Self::ALGEBRA.dim();
        let table = StructureTable::cached(Self::ALGEBRA);
        let x = self.coeffs();
        let y = other.coeffs();
        let mut out = vec![Scalar::zero(); dim];

        // Real unit row and column.
        for k in 0..dim {
            out[k] += &x[0] * &y[k];
        }
        for k in 1..dim {
            out[k] += &x[k] * &y[0];
        }
        // Imaginary times imaginary: -delta_ij into the real part,
        // eps_ijk into component k.
        for i in 1..dim {
            for j in 1..dim {
                if i == j {
                    out[0] -= &x[i] * &y[i];
                } else if let Some((sign, k)) = table.product(i as u8, j as u8) {
                    let term = &x[i] * &y[j];
                    if sign > 0 {
                        out[k as usize] += term;
                    } else {
                        out[k as usize] -= term;
                    }
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Conjugation: negates every imaginary coefficient.
    fn conj(&self) -> Self {
        let mut c: Vec<Scalar> = self.coeffs().to_vec();
        for v in c.iter_mut().skip(1) {
            *v = -&*v;
        }
        Self::from_coeffs(c)
    }

    /// Squared norm: the sum of squared coefficients, equal to the real
    /// part of `x.conj(x)`.
    fn norm_sq(&self) -> Scalar {
        self.coeffs().iter().map(|a| a * a).sum()
    }

    fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    /// `(a.b).c - a.(b.c)`; identically zero on associative algebras.
    fn associator(a: &Self, b: &Self, c: &Self) -> Self {
        a.mul(b).mul(c).sub(&a.mul(&b.mul(c)))
    }
}

macro_rules! element_type {
    ($name:ident, $algebra:expr, $dim:literal, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name {
            coeffs: [Scalar; $dim],
        }

        impl $name {
            pub fn new(coeffs: [Scalar; $dim]) -> Self {
                Self { coeffs }
            }

            /// Convenience constructor from integer coefficients.
            pub fn from_ints(coeffs: [i64; $dim]) -> Self {
                Self {
                    coeffs: coeffs.map(int),
                }
            }

            pub fn coeff(&self, index: usize) -> &Scalar {
                &self.coeffs[index]
            }
        }

        impl AlgebraElement for $name {
            const ALGEBRA: Algebra = $algebra;

            fn coeffs(&self) -> &[Scalar] {
                &self.coeffs
            }

            fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
                let coeffs: [Scalar; $dim] = coeffs
                    .try_into()
                    .unwrap_or_else(|_| panic!("expected {} coefficients", $dim));
                Self { coeffs }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut wrote = false;
                for (idx, c) in self.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let s = crate::scalar::display(c);
                    if wrote {
                        if let Some(mag) = s.strip_prefix('-') {
                            write!(f, " - {}", mag)?;
                        } else {
                            write!(f, " + {}", s)?;
                        }
                    } else {
                        write!(f, "{}", s)?;
                        wrote = true;
                        if idx == 0 {
                            continue;
                        }
                    }
                    if idx > 0 {
                        write!(f, " e{}", idx)?;
                    }
                }
                if !wrote {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    };
}

element_type!(
    ComplexNum,
    Algebra::Complex,
    2,
    "A complex number as coefficients of `(1, e1)`."
);
element_type!(
    QuaternionNum,
    Algebra::Quaternion,
    4,
    "A quaternion as coefficients of `(1, e1, e2, e3)`."
);
element_type!(
    OctonionNum,
    Algebra::Octonion,
    8,
    "An octonion as coefficients of `(1, e1, ..., e7)`."
);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn e(i: u8) -> OctonionNum {
        OctonionNum::basis(i).unwrap()
    }

    #[test]
    fn table_rejects_complex() {
        assert_eq!(
            structure_table(Algebra::Complex).err(),
            Some(Error::UnsupportedAlgebra(Algebra::Complex))
        );
    }

    #[test]
    fn octonion_eps_values() {
        let t = structure_table(Algebra::Octonion).unwrap();
        assert_eq!(t.eps(1, 4, 5), 1);
        assert_eq!(t.eps(2, 1, 3), -1);
        assert_eq!(t.eps(1, 2, 4), 0);
        assert_eq!(t.eps(3, 3, 7), 0);
    }

    #[test]
    fn quaternion_eps_is_levi_civita() {
        let t = structure_table(Algebra::Quaternion).unwrap();
        assert_eq!(t.eps(1, 2, 3), 1);
        assert_eq!(t.eps(2, 1, 3), -1);
        assert_eq!(t.eps(3, 1, 2), 1);
        assert_eq!(t.eps(1, 1, 2), 0);
    }

    #[test]
    fn eps_total_antisymmetry() {
        for algebra in [Algebra::Quaternion, Algebra::Octonion] {
            let t = structure_table(algebra).unwrap();
            let m = algebra.imaginary_count();
            for i in 1..=m {
                for j in 1..=m {
                    for k in 1..=m {
                        let e = t.eps(i, j, k);
                        assert_eq!(e, -t.eps(j, i, k));
                        assert_eq!(e, -t.eps(i, k, j));
                        assert_eq!(e, t.eps(j, k, i));
                    }
                }
            }
        }
    }

    #[test]
    fn octonion_positive_triples_complete() {
        // Exactly the seven listed triples (up to cyclic order) carry +1.
        let t = structure_table(Algebra::Octonion).unwrap();
        let mut positive = Vec::new();
        for i in 1..=7 {
            for j in (i + 1)..=7 {
                for k in (j + 1)..=7 {
                    match t.eps(i, j, k) {
                        1 => positive.push((i, j, k)),
                        -1 => positive.push((i, k, j)),
                        _ => {}
                    }
                }
            }
        }
        positive.sort();
        let mut expected = vec![
            (1, 2, 3),
            (1, 4, 5),
            (1, 7, 6),
            (2, 4, 6),
            (2, 5, 7),
            (3, 4, 7),
            (3, 6, 5),
        ];
        for t in expected.iter_mut() {
            // Normalize each cycle so the smallest index leads and the
            // orientation is kept.
            let (a, b, c) = *t;
            let min = a.min(b).min(c);
            *t = if min == a {
                (a, b, c)
            } else if min == b {
                (b, c, a)
            } else {
                (c, a, b)
            };
        }
        expected.sort();
        assert_eq!(positive, expected);
    }

    #[test]
    fn basis_products_match_structure_rule() {
        // e_i.e_j = -delta_ij + eps_ijk e_k, exhaustively (7x7 for O).
        let t = structure_table(Algebra::Octonion).unwrap();
        for i in 1..=7u8 {
            for j in 1..=7u8 {
                let prod = e(i).mul(&e(j));
                let mut expected = if i == j {
                    OctonionNum::one().neg()
                } else {
                    OctonionNum::zero()
                };
                for k in 1..=7u8 {
                    let s = t.eps(i, j, k);
                    if s != 0 {
                        let term = e(k).scale(&int(s as i64));
                        expected = expected.add(&term);
                    }
                }
                assert_eq!(prod, expected, "e{} . e{}", i, j);
            }
        }
    }

    #[test]
    fn sample_products() {
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(1).mul(&e(6)), e(7).neg());
        assert_eq!(e(2).mul(&e(5)), e(7));
        let g = OctonionNum::from_ints([3, -1, 0, 2, 0, 0, 5, 7]);
        assert_eq!(OctonionNum::one().mul(&g), g);
        assert_eq!(g.mul(&OctonionNum::one()), g);
    }

    #[test]
    fn complex_unit_squares_to_minus_one() {
        let i = ComplexNum::basis(1).unwrap();
        assert_eq!(i.mul(&i), ComplexNum::one().neg());
        let z = ComplexNum::from_ints([3, 2]);
        assert_eq!(z.conj(), ComplexNum::from_ints([3, -2]));
    }

    #[test]
    fn norms() {
        assert_eq!(e(5).norm_sq(), int(1));
        let x = OctonionNum::from_ints([1, 1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(x.norm_sq(), int(3));
        let q = QuaternionNum::new([ratio(1, 2), int(0), ratio(-3, 2), int(1)]);
        assert_eq!(q.norm_sq(), ratio(14, 4));
    }

    #[test]
    fn norm_is_real_part_of_x_conj_x() {
        let x = OctonionNum::from_ints([2, -1, 3, 0, 1, 0, -2, 5]);
        let n = x.mul(&x.conj());
        assert_eq!(*n.coeff(0), x.norm_sq());
        for k in 1..8 {
            assert!(n.coeff(k).is_zero());
        }
    }

    #[test]
    fn quaternions_associate_octonions_do_not() {
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                for k in 1..=3u8 {
                    let a = QuaternionNum::basis(i).unwrap();
                    let b = QuaternionNum::basis(j).unwrap();
                    let c = QuaternionNum::basis(k).unwrap();
                    assert!(QuaternionNum::associator(&a, &b, &c).is_zero());
                }
            }
        }
        let assoc = OctonionNum::associator(&e(1), &e(2), &e(4));
        assert_eq!(assoc, e(7).scale(&int(2)));
    }

    #[test]
    fn octonions_are_alternative_on_basis_pairs() {
        for i in 0..8u8 {
            for j in 0..8u8 {
                let a = OctonionNum::basis(i).unwrap();
                let b = OctonionNum::basis(j).unwrap();
                assert!(OctonionNum::associator(&a, &a, &b).is_zero());
                assert!(OctonionNum::associator(&b, &a, &a).is_zero());
            }
        }
    }

    #[test]
    fn basis_commutators() {
        assert_eq!(OctonionNum::commutator(&e(1), &e(2)), e(3).scale(&int(2)));
        assert!(OctonionNum::commutator(&e(4), &e(4)).is_zero());
        assert_eq!(OctonionNum::commutator(&e(2), &e(5)), e(7).scale(&int(2)));
    }
}
