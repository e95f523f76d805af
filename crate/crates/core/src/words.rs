//! Words of left and right multiplications and their evaluation.
//!
//! A word is read left to right in the barred notation: `e_2.e_1(e_4`
//! becomes `[Left 2, Left 1, Right 4]`. Words carry no semantics of their
//! own; reordering happens only when a word is translated to a matrix or
//! applied to an element, where right action takes priority. Whatever its
//! position in the word, a right factor always acts next to the operand.

use std::fmt;

use crate::algebra::{Algebra, AlgebraElement, OctonionNum};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ops::{left_matrix, right_matrix};

/// One multiplication factor of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `x -> e_i . x`
    Left(u8),
    /// `x -> x . e_j`, written `1|e_j`
    Right(u8),
}

impl Factor {
    pub fn index(self) -> u8 {
        match self {
            Factor::Left(i) | Factor::Right(i) => i,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Left(i) => write!(f, "L{}", i),
            Factor::Right(j) => write!(f, "R{}", j),
        }
    }
}

/// An ordered sequence of factors; the empty word is the identity operator.
///
/// Words are plain values with structural equality. No rewriting or
/// normalization is ever applied to the sequence itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OperatorWord {
    factors: Vec<Factor>,
}

/// Ordering convention for the right-sector product when a word carries
/// more than one right factor.
///
/// `Reading` multiplies right factors in reading order (first-read factor
/// leftmost); it is the convention under which the thirteen-generator set
/// closes its Clifford algebra. `Reversed` is the mirror convention, kept
/// for experimentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RightOrder {
    #[default]
    Reading,
    Reversed,
}

impl OperatorWord {
    pub fn new(factors: Vec<Factor>) -> Self {
        OperatorWord { factors }
    }

    pub fn empty() -> Self {
        OperatorWord::default()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Word concatenation; associative as a plain sequence operation.
    pub fn concat(&self, other: &OperatorWord) -> OperatorWord {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        OperatorWord { factors }
    }

    /// Left-factor indices in reading order.
    pub fn lefts(&self) -> Vec<u8> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                Factor::Left(i) => Some(*i),
                Factor::Right(_) => None,
            })
            .collect()
    }

    /// Right-factor indices in reading order.
    pub fn rights(&self) -> Vec<u8> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                Factor::Right(j) => Some(*j),
                Factor::Left(_) => None,
            })
            .collect()
    }

    fn check_indices(&self, algebra: Algebra) -> Result<()> {
        for f in &self.factors {
            algebra.check_index(f.index())?;
        }
        Ok(())
    }

    /// Parses the literal syntax: factors `L1`..`L7`, `R1`..`R7` joined
    /// by `.`, e.g. `L2.L1.R4`.
    pub fn parse(text: &str) -> Result<OperatorWord> {
        let mut factors = Vec::new();
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::WordParse(text.into(), "empty word literal".into()));
        }
        for token in trimmed.split('.') {
            let token = token.trim();
            let err = |why: &str| Error::WordParse(text.into(), format!("{token:?}: {why}"));
            let mut chars = token.chars();
            let side = chars.next().ok_or_else(|| err("empty factor"))?;
            let index: u8 = chars
                .as_str()
                .parse()
                .map_err(|_| err("index is not a number"))?;
            if !(1..=7).contains(&index) {
                return Err(err("index outside 1..7"));
            }
            match side {
                'L' | 'l' => factors.push(Factor::Left(index)),
                'R' | 'r' => factors.push(Factor::Right(index)),
                _ => return Err(err("factor must start with L or R")),
            }
        }
        Ok(OperatorWord { factors })
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, factor) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", factor)?;
        }
        Ok(())
    }
}

/// The barred operator `e_i(e_j`, i.e. `g -> e_i.(g.e_j)`.
pub fn r_op(i: u8, j: u8) -> Result<OperatorWord> {
    Algebra::Octonion.check_index(i)?;
    Algebra::Octonion.check_index(j)?;
    Ok(OperatorWord::new(vec![Factor::Left(i), Factor::Right(j)]))
}

/// The barred operator `e_i)e_j`, i.e. `g -> (e_i.g).e_j`, spelled as the
/// composition `1|e_j . e_i`. Its defining matrix `1|E_j x E_i` puts the
/// right factor outermost, which no priority-reordered product can do, so
/// this word carries composition semantics: translate it with
/// [`compose_translate`], not [`translate`].
pub fn l_op(i: u8, j: u8) -> Result<OperatorWord> {
    Algebra::Octonion.check_index(i)?;
    Algebra::Octonion.check_index(j)?;
    Ok(OperatorWord::new(vec![Factor::Right(j), Factor::Left(i)]))
}

/// Translates a word to its matrix under right-action priority:
/// left matrices in reading order times right matrices in `right_order`.
pub fn translate_with(
    algebra: Algebra,
    word: &OperatorWord,
    right_order: RightOrder,
) -> Result<IntMatrix> {
    word.check_indices(algebra)?;
    let n = algebra.dim();
    let mut acc = IntMatrix::identity(n);
    for i in word.lefts() {
        acc = acc.matmul(&left_matrix(algebra, i)?);
    }
    let rights = word.rights();
    let mut right_acc = IntMatrix::identity(n);
    match right_order {
        RightOrder::Reading => {
            for j in rights {
                right_acc = right_acc.matmul(&right_matrix(algebra, j)?);
            }
        }
        RightOrder::Reversed => {
            for j in rights {
                right_acc = right_matrix(algebra, j)?.matmul(&right_acc);
            }
        }
    }
    Ok(acc.matmul(&right_acc))
}

/// Translation of an octonionic word under the default reading order.
pub fn translate(word: &OperatorWord) -> Result<IntMatrix> {
    translate_with(Algebra::Octonion, word, RightOrder::Reading)
}

/// Translates a word by literal function composition: factor matrices
/// multiply in reading order, first-read factor outermost, with no
/// priority reordering at all.
pub fn compose_translate(algebra: Algebra, word: &OperatorWord) -> Result<IntMatrix> {
    word.check_indices(algebra)?;
    let mut acc = IntMatrix::identity(algebra.dim());
    for f in word.factors() {
        let m = match f {
            Factor::Left(i) => left_matrix(algebra, *i)?,
            Factor::Right(j) => right_matrix(algebra, *j)?,
        };
        acc = acc.matmul(&m);
    }
    Ok(acc)
}

/// Applies a word by nested multiplication in the algebra itself: all
/// right factors multiply the operand first (innermost), then the left
/// factors wrap around. This is the evaluation route independent of the
/// matrix translation.
pub fn apply_in<T: AlgebraElement>(word: &OperatorWord, x: &T) -> Result<T> {
    word.check_indices(T::ALGEBRA)?;
    let mut acc = x.clone();
    // The right-sector matrix product in reading order applies the
    // last-read right factor to the operand first.
    for j in word.rights().into_iter().rev() {
        let unit = T::basis(j)?;
        acc = acc.mul(&unit);
    }
    for i in word.lefts().into_iter().rev() {
        let unit = T::basis(i)?;
        acc = unit.mul(&acc);
    }
    Ok(acc)
}

/// Octonionic word application.
pub fn apply(word: &OperatorWord, g: &OctonionNum) -> Result<OctonionNum> {
    apply_in(word, g)
}

/// The anticommutator under priority semantics: both products are formed
/// by word concatenation first, so the priority rule reorders across the
/// boundary between the two words.
pub fn anticommutator(wa: &OperatorWord, wb: &OperatorWord) -> Result<IntMatrix> {
    let ab = translate(&wa.concat(wb))?;
    let ba = translate(&wb.concat(wa))?;
    Ok(ab + ba)
}

/// The associative (function-composition) anticommutator the priority rule
/// replaces: plain matrix products of the separately translated words.
pub fn naive_anticommutator(wa: &OperatorWord, wb: &OperatorWord) -> Result<IntMatrix> {
    let a = translate(wa)?;
    let b = translate(wb)?;
    Ok(a.matmul(&b) + b.matmul(&a))
}

/// Degrees-of-freedom audit of the two-sided octonionic representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DofAudit {
    /// Span rank of the left-sector products of length at most three
    /// (longer products add nothing: the volume element acts as a sign).
    pub left_sector_rank: usize,
    /// Same for the right sector.
    pub right_sector_rank: usize,
    /// Span rank of `{E_i} + {1|E_j} + {translate(L_i R_j)}`, 63 matrices.
    pub two_sided_rank: usize,
}

impl DofAudit {
    /// The two-sided parameter count: 64 for left action plus 64 for
    /// right action.
    pub fn parameter_count(&self) -> usize {
        self.left_sector_rank + self.right_sector_rank
    }
}

fn sector_products(mats: &[IntMatrix]) -> Vec<IntMatrix> {
    let n = mats[0].dim();
    let mut out = vec![IntMatrix::identity(n)];
    out.extend(mats.iter().cloned());
    for i in 0..mats.len() {
        for j in (i + 1)..mats.len() {
            out.push(mats[i].matmul(&mats[j]));
            for k in (j + 1)..mats.len() {
                out.push(mats[i].matmul(&mats[j]).matmul(&mats[k]));
            }
        }
    }
    out
}

/// Computes the exact span ranks behind the 128-parameter count.
pub fn degrees_of_freedom_audit() -> DofAudit {
    use crate::ops::{octonion_left_set, octonion_right_set};
    use crate::rank::span_rank;

    let lefts = octonion_left_set();
    let rights = octonion_right_set();

    let left_sector_rank = span_rank(&sector_products(&lefts));
    let right_sector_rank = span_rank(&sector_products(&rights));

    let mut two_sided: Vec<IntMatrix> = Vec::with_capacity(63);
    two_sided.extend(lefts.iter().cloned());
    two_sided.extend(rights.iter().cloned());
    for i in 1..=7u8 {
        for j in 1..=7u8 {
            let w = OperatorWord::new(vec![Factor::Left(i), Factor::Right(j)]);
            two_sided.push(translate(&w).expect("indices in range"));
        }
    }
    let two_sided_rank = span_rank(&two_sided);

    DofAudit {
        left_sector_rank,
        right_sector_rank,
        two_sided_rank,
    }
}
