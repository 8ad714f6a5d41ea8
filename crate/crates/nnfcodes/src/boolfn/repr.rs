use serde::Serialize;

use super::{hypercube_size, MonomialIndex};
use crate::error::{Error, Result};

/// Evaluation vector of a Boolean function: entry `p` is `f(point p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    k: u32,
    bits: Vec<bool>,
}

impl TruthTable {
    /// Wraps an evaluation vector. Panics unless `bits.len() == 2^k`.
    pub fn new(k: u32, bits: Vec<bool>) -> Self {
        assert_eq!(
            bits.len(),
            hypercube_size(k),
            "truth table for k = {k} must have 2^k entries"
        );
        TruthTable { k, bits }
    }

    /// Builds the table by evaluating `f` at every point index.
    pub fn from_fn(k: u32, f: impl FnMut(usize) -> bool) -> Self {
        TruthTable {
            k,
            bits: (0..hypercube_size(k)).map(f).collect(),
        }
    }

    /// Parses a string of '0'/'1' characters of length `2^k`
    /// (position `p` = value at point `p`).
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let bits = parse_bits(s)?;
        if !bits.len().is_power_of_two() {
            return Err(Error::parse(
                0,
                format!("truth table length {} is not a power of two", bits.len()),
            ));
        }
        Ok(TruthTable {
            k: bits.len().trailing_zeros(),
            bits,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Value at evaluation point `p`.
    pub fn get(&self, p: usize) -> bool {
        self.bits[p]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of points where the function is 1.
    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// The ANF of this function (convenience for [`anf_from_truth`](super::anf_from_truth)).
    pub fn to_anf(&self) -> AnfPoly {
        super::anf_from_truth(self, &mut super::OpCounter::new())
    }

    /// The NNF of this function (convenience for [`nnf_from_truth`](super::nnf_from_truth)).
    pub fn to_nnf(&self) -> NnfPoly {
        super::nnf_from_truth(self, &mut super::OpCounter::new())
    }
}

pub(crate) fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::parse(0, format!("expected '0' or '1', found {other:?}"))),
        })
        .collect()
}

/// Algebraic normal form: the square-free polynomial over `F_2` with the
/// same evaluations as the function. Coefficients are indexed by
/// [`MonomialIndex`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnfPoly {
    k: u32,
    coeffs: Vec<bool>,
}

impl AnfPoly {
    /// Wraps a dense coefficient vector. Panics unless `coeffs.len() == 2^k`.
    pub fn new(k: u32, coeffs: Vec<bool>) -> Self {
        assert_eq!(
            coeffs.len(),
            hypercube_size(k),
            "ANF for k = {k} must have 2^k coefficients"
        );
        AnfPoly { k, coeffs }
    }

    pub fn zero(k: u32) -> Self {
        AnfPoly {
            k,
            coeffs: vec![false; hypercube_size(k)],
        }
    }

    /// The polynomial whose monomials are exactly the given indices.
    /// Panics on an out-of-range index.
    pub fn from_support(k: u32, support: impl IntoIterator<Item = usize>) -> Self {
        let mut coeffs = vec![false; hypercube_size(k)];
        for idx in support {
            coeffs[idx] = true;
        }
        AnfPoly { k, coeffs }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coefficient(&self, idx: usize) -> bool {
        self.coeffs[idx]
    }

    pub fn coeffs(&self) -> &[bool] {
        &self.coeffs
    }

    /// Raw indices of the nonzero monomials, ascending.
    pub fn support_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(idx, &b)| b.then_some(idx))
    }

    /// Nonzero monomials, ascending by index.
    pub fn support(&self) -> impl Iterator<Item = MonomialIndex> + '_ {
        let k = self.k;
        self.support_indices().map(move |idx| MonomialIndex::new(idx, k))
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&b| !b)
    }

    /// Largest monomial degree with a nonzero coefficient; 0 for the zero
    /// polynomial and for constants.
    pub fn degree(&self) -> u32 {
        self.support_indices()
            .map(|idx| idx.count_ones())
            .max()
            .unwrap_or(0)
    }

    /// Direct evaluation at one point: XOR of the coefficients of all
    /// monomials contained in the point.
    pub fn evaluate(&self, point: usize) -> bool {
        self.support_indices()
            .filter(|&idx| idx & point == idx)
            .count()
            % 2
            == 1
    }

    /// The truth table of this polynomial (convenience for
    /// [`truth_from_anf`](super::truth_from_anf)).
    pub fn to_truth_table(&self) -> TruthTable {
        super::truth_from_anf(self, &mut super::OpCounter::new())
    }

    /// The integer lift of this polynomial (convenience for
    /// [`nnf_from_anf`](super::nnf_from_anf)).
    pub fn to_nnf(&self) -> Result<NnfPoly> {
        super::nnf_from_anf(self, &mut super::OpCounter::new())
    }
}

impl std::fmt::Display for AnfPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// Numerical normal form: a square-free polynomial with integer
/// coefficients. Stored sparsely as `(index, coefficient)` pairs, sorted
/// by index, with no zero coefficients; dense views are materialized on
/// demand with [`NnfPoly::to_dense`].
///
/// The NNF of a Boolean function takes only the values 0 and 1 on
/// `{0,1}^k`, but general integer-valued polynomials (weight and distance
/// polynomials) use the same type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NnfPoly {
    k: u32,
    terms: Vec<(usize, i64)>,
}

impl NnfPoly {
    pub fn zero(k: u32) -> Self {
        hypercube_size(k);
        NnfPoly { k, terms: Vec::new() }
    }

    pub fn constant(k: u32, value: i64) -> Self {
        hypercube_size(k);
        let terms = if value == 0 { Vec::new() } else { vec![(0, value)] };
        NnfPoly { k, terms }
    }

    /// A single monomial with the given coefficient. Panics on an
    /// out-of-range index.
    pub fn monomial(k: u32, idx: usize, coeff: i64) -> Self {
        assert!(idx < hypercube_size(k), "monomial index {idx} out of range");
        let terms = if coeff == 0 { Vec::new() } else { vec![(idx, coeff)] };
        NnfPoly { k, terms }
    }

    /// Builds a polynomial from arbitrary `(index, coefficient)` pairs:
    /// duplicates are summed, zeros dropped. Panics on an out-of-range
    /// index; returns an overflow error if duplicate coefficients overflow.
    pub fn from_terms(k: u32, terms: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        let size = hypercube_size(k);
        let mut merged = std::collections::BTreeMap::new();
        for (idx, c) in terms {
            assert!(idx < size, "monomial index {idx} out of range for k = {k}");
            let slot = merged.entry(idx).or_insert(0i64);
            *slot = slot
                .checked_add(c)
                .ok_or(Error::IntegerOverflow { phase: "building polynomial" })?;
        }
        Ok(NnfPoly {
            k,
            terms: merged.into_iter().filter(|&(_, c)| c != 0).collect(),
        })
    }

    /// Compresses a dense coefficient vector (length `2^k`).
    pub fn from_dense(k: u32, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), hypercube_size(k));
        NnfPoly {
            k,
            terms: coeffs
                .iter()
                .enumerate()
                .filter_map(|(idx, &c)| (c != 0).then_some((idx, c)))
                .collect(),
        }
    }

    /// Dense coefficient vector of length `2^k`.
    pub fn to_dense(&self) -> Vec<i64> {
        let mut coeffs = vec![0i64; hypercube_size(self.k)];
        for &(idx, c) in &self.terms {
            coeffs[idx] = c;
        }
        coeffs
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Sparse view: sorted `(index, coefficient)` pairs, all nonzero.
    pub fn terms(&self) -> &[(usize, i64)] {
        &self.terms
    }

    /// Nonzero monomials with their coefficients, ascending by index.
    pub fn sparse(&self) -> impl Iterator<Item = (MonomialIndex, i64)> + '_ {
        let k = self.k;
        self.terms.iter().map(move |&(idx, c)| (MonomialIndex::new(idx, k), c))
    }

    /// Coefficient of the monomial at `idx` (0 when absent).
    pub fn coefficient(&self, idx: usize) -> i64 {
        match self.terms.binary_search_by_key(&idx, |&(i, _)| i) {
            Ok(pos) => self.terms[pos].1,
            Err(_) => 0,
        }
    }

    pub fn nonzero_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|&(idx, _)| idx.count_ones()).max().unwrap_or(0)
    }

    /// Direct evaluation at one point: the sum of the coefficients of all
    /// monomials contained in the point. `O(nonzero_count)`.
    pub fn evaluate(&self, point: usize) -> Result<i64> {
        let mut sum = 0i64;
        for &(idx, c) in &self.terms {
            if idx & point == idx {
                sum = sum
                    .checked_add(c)
                    .ok_or(Error::IntegerOverflow { phase: "polynomial evaluation" })?;
            }
        }
        Ok(sum)
    }

    /// Evaluations at all `2^k` points (convenience for
    /// [`eval_nnf_hypercube`](super::eval_nnf_hypercube)).
    pub fn hypercube_values(&self) -> Result<Vec<i64>> {
        super::eval_nnf_hypercube(self, &mut super::OpCounter::new())
    }

    /// Reduction of the coefficients modulo 2 (convenience for
    /// [`anf_from_nnf`](super::anf_from_nnf)).
    pub fn to_anf(&self) -> AnfPoly {
        super::anf_from_nnf(self)
    }

    pub(crate) fn from_sorted_terms(k: u32, terms: Vec<(usize, i64)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|&(_, c)| c != 0));
        NnfPoly { k, terms }
    }
}

impl std::fmt::Display for NnfPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.sparse().enumerate() {
            let magnitude = c.unsigned_abs();
            if pos == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            if m.idx() == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truth_table_round_trips_bit_string() {
        let t = TruthTable::from_bit_string("0110").unwrap();
        assert_eq!(t.k(), 2);
        assert!(!t.get(0) && t.get(1) && t.get(2) && !t.get(3));
        assert_eq!(t.to_bit_string(), "0110");
        assert!(TruthTable::from_bit_string("011").is_err());
        assert!(TruthTable::from_bit_string("01x0").is_err());
    }

    #[test]
    fn nnf_from_terms_merges_and_drops_zeros() {
        let p = NnfPoly::from_terms(2, vec![(1, 2), (1, -2), (3, 5), (0, 1)]).unwrap();
        assert_eq!(p.terms(), &[(0, 1), (3, 5)]);
        assert_eq!(p.coefficient(1), 0);
        assert_eq!(p.coefficient(3), 5);
        assert_eq!(p.nonzero_count(), 2);
    }

    #[test]
    fn dense_and_sparse_views_agree() {
        let p = NnfPoly::from_terms(3, vec![(0, 2), (4, 3), (7, 8)]).unwrap();
        let dense = p.to_dense();
        assert_eq!(dense, vec![2, 0, 0, 0, 3, 0, 0, 8]);
        assert_eq!(NnfPoly::from_dense(3, &dense), p);
    }

    #[test]
    fn direct_evaluation_sums_submonomials() {
        // 2 + 3*x1 + 8*x1*x2*x3
        let p = NnfPoly::from_terms(3, vec![(0, 2), (4, 3), (7, 8)]).unwrap();
        assert_eq!(p.evaluate(0b000).unwrap(), 2);
        assert_eq!(p.evaluate(0b100).unwrap(), 5);
        assert_eq!(p.evaluate(0b111).unwrap(), 13);
    }

    #[test]
    fn display_formats() {
        let p = NnfPoly::from_terms(2, vec![(0, 1), (1, -1), (3, -2)]).unwrap();
        assert_eq!(p.to_string(), "1 - x2 - 2*x1*x2");
        assert_eq!(NnfPoly::zero(2).to_string(), "0");
        let a = AnfPoly::from_support(2, [1, 2]);
        assert_eq!(a.to_string(), "x2 + x1");
        assert_eq!(AnfPoly::zero(1).to_string(), "0");
    }

    #[test]
    fn anf_evaluate_is_xor_of_submonomials() {
        // x1 + x1*x2 over k = 2
        let a = AnfPoly::from_support(2, [0b10, 0b11]);
        assert!(!a.evaluate(0b00));
        assert!(!a.evaluate(0b01));
        assert!(a.evaluate(0b10));
        assert!(!a.evaluate(0b11)); // 1 ^ 1
    }
}
