//! Boolean functions in three interchangeable representations.
//!
//! A Boolean function `f : {0,1}^k -> {0,1}` can be stored as
//!
//! * a [`TruthTable`] — its `2^k` values in point order,
//! * an [`AnfPoly`] — the unique square-free polynomial over `F_2`
//!   (algebraic normal form) with the same evaluations,
//! * an [`NnfPoly`] — the unique square-free polynomial with *integer*
//!   coefficients (numerical normal form) whose evaluations over
//!   `{0,1}^k ⊂ Z^k` equal the function's values.
//!
//! The NNF is the workhorse: sums of NNFs evaluate to sums of function
//! values, which is what turns codeword weights and distances into
//! polynomial evaluations (see the [`weight`](crate::weight) and
//! [`distance`](crate::distance) modules).
//!
//! # Index convention
//!
//! Variables are named `x1, …, xk`. Bit `b` of an index (bit 0 the least
//! significant) corresponds to variable `x_{k−b}`, so the binary expansion
//! of an index read most-significant-first is the exponent vector
//! `(u1, …, uk)` of the monomial `x1^u1 ⋯ xk^uk`. Index 0 is the constant
//! term, index `2^k − 1` is `x1⋯xk`. Evaluation points use the same
//! convention: bit `b` of a point index is the value assigned to
//! `x_{k−b}`. Truth tables, ANF/NNF coefficient vectors and hypercube
//! evaluation vectors are all laid out in this order.

mod arith;
mod repr;
mod transform;

pub use arith::{embed_variables, poly_add, poly_mul_squarefree, shift_variables};
pub use repr::{AnfPoly, NnfPoly, TruthTable};
pub use transform::{
    anf_from_nnf, anf_from_truth, eval_nnf_hypercube, nnf_coefficient_direct, nnf_from_anf,
    nnf_from_truth, nnf_of_linear, truth_from_anf,
};

use crate::error::{Error, Result};

/// Largest variable count for which dense `2^k` tables are representable.
pub const MAX_VARS: u32 = 30;

pub(crate) fn hypercube_size(k: u32) -> usize {
    assert!(k <= MAX_VARS, "k = {k} exceeds MAX_VARS = {MAX_VARS}");
    1usize << k
}

/// Index of a square-free monomial (equivalently, of an evaluation point)
/// over `k` variables. See the [module docs](self) for the bit convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIndex {
    idx: usize,
    k: u32,
}

impl MonomialIndex {
    /// Wraps a raw index. Panics if `idx >= 2^k`.
    pub fn new(idx: usize, k: u32) -> Self {
        assert!(
            idx < hypercube_size(k),
            "monomial index {idx} out of range for k = {k}"
        );
        MonomialIndex { idx, k }
    }

    /// The constant monomial (index 0).
    pub fn constant(k: u32) -> Self {
        MonomialIndex { idx: 0, k }
    }

    /// The monomial consisting of the single variable `x_var`
    /// (`var` is 1-based, `1 ..= k`).
    pub fn variable(var: usize, k: u32) -> Result<Self> {
        if var == 0 || var > k as usize {
            return Err(Error::InvalidVariableSet(format!(
                "variable x{var} out of range 1..={k}"
            )));
        }
        Ok(MonomialIndex {
            idx: 1usize << (k as usize - var),
            k,
        })
    }

    pub fn idx(self) -> usize {
        self.idx
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// Number of variables in the monomial.
    pub fn degree(self) -> u32 {
        self.idx.count_ones()
    }

    /// True if every variable of `self` also appears in `other`.
    pub fn is_submonomial_of(self, other: MonomialIndex) -> bool {
        self.idx & other.idx == self.idx
    }

    /// The 1-based variable numbers of this monomial, ascending.
    pub fn variables(self) -> impl Iterator<Item = usize> {
        let (idx, k) = (self.idx, self.k as usize);
        (1..=k).filter(move |var| idx >> (k - var) & 1 == 1)
    }
}

impl std::fmt::Display for MonomialIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.idx == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for var in self.variables() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "x{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// Tally of the logical operations performed by transforms and polynomial
/// arithmetic. Counts are deterministic functions of the inputs: they
/// count operations of the sequential algorithm, not scheduled machine
/// instructions.
///
/// Sparse sums and products count one integer addition each time two
/// coefficients are combined (a coefficient landing in an empty slot is a
/// copy, not an addition), matching pairwise sparse summation.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    /// Integer additions and subtractions.
    pub int_adds: u64,
    /// Integer multiplications.
    pub int_muls: u64,
    /// Bit XORs (the `F_2` butterfly).
    pub bit_xors: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Total integer operations (additions plus multiplications).
    pub fn int_total(&self) -> u64 {
        self.int_adds + self.int_muls
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_index_convention() {
        // k = 3: x1 is the most significant bit.
        let x1 = MonomialIndex::variable(1, 3).unwrap();
        let x3 = MonomialIndex::variable(3, 3).unwrap();
        assert_eq!(x1.idx(), 0b100);
        assert_eq!(x3.idx(), 0b001);
        assert_eq!(MonomialIndex::constant(3).idx(), 0);
        assert_eq!(MonomialIndex::new(7, 3).degree(), 3);
        assert!(x1.is_submonomial_of(MonomialIndex::new(0b110, 3)));
        assert!(!x3.is_submonomial_of(MonomialIndex::new(0b110, 3)));
    }

    #[test]
    fn monomial_display() {
        assert_eq!(MonomialIndex::constant(2).to_string(), "1");
        assert_eq!(MonomialIndex::new(0b101, 3).to_string(), "x1*x3");
        assert_eq!(
            MonomialIndex::new(0b101, 3).variables().collect::<Vec<_>>(),
            vec![1, 3]
        );
    }

    #[test]
    fn variable_out_of_range() {
        assert!(MonomialIndex::variable(0, 3).is_err());
        assert!(MonomialIndex::variable(4, 3).is_err());
    }
}
