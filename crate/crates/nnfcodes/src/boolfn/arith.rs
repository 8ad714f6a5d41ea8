//! Sparse arithmetic on [`NnfPoly`] in the square-free quotient ring
//! `Z[x1,…,xk]/⟨x_i² − x_i⟩`, where multiplying monomials ORs their index
//! masks. Sums and products walk only the nonzero terms; the dense `2^k`
//! layout is reserved for the butterfly transforms.

use super::{hypercube_size, NnfPoly, OpCounter};
use crate::error::{Error, Result};

const SUM_PHASE: &str = "polynomial sum";
const MUL_PHASE: &str = "polynomial product";

/// Coefficient-wise sum of two polynomials over the same variables.
///
/// Merging sorted supports counts one integer addition per index present
/// in both inputs; disjoint supports are concatenated for free.
pub fn poly_add(p: &NnfPoly, q: &NnfPoly, ops: &mut OpCounter) -> Result<NnfPoly> {
    assert_eq!(p.k(), q.k(), "polynomial sum needs matching variable counts");
    let (pt, qt) = (p.terms(), q.terms());
    let mut terms = Vec::with_capacity(pt.len() + qt.len());
    let (mut i, mut j) = (0, 0);
    while i < pt.len() && j < qt.len() {
        let (pi, qj) = (pt[i], qt[j]);
        match pi.0.cmp(&qj.0) {
            std::cmp::Ordering::Less => {
                terms.push(pi);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                terms.push(qj);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                ops.int_adds += 1;
                let c = pi
                    .1
                    .checked_add(qj.1)
                    .ok_or(Error::IntegerOverflow { phase: SUM_PHASE })?;
                if c != 0 {
                    terms.push((pi.0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    terms.extend_from_slice(&pt[i..]);
    terms.extend_from_slice(&qt[j..]);
    Ok(NnfPoly::from_sorted_terms(p.k(), terms))
}

/// Product of two polynomials over the same variables, with every
/// exponent reduced via `x² → x`: the index of a term product is the
/// bitwise OR of the factor indices.
///
/// Counts one multiplication per term pair and one addition per
/// coefficient merged onto an already nonzero index.
pub fn poly_mul_squarefree(p: &NnfPoly, q: &NnfPoly, ops: &mut OpCounter) -> Result<NnfPoly> {
    assert_eq!(p.k(), q.k(), "polynomial product needs matching variable counts");
    let k = p.k();
    // Dense scratch keeps the merge linear; fall back to a map when 2^k
    // would dwarf the actual term count.
    let size = hypercube_size(k);
    if size <= 1 << 22 {
        let mut scratch = vec![0i64; size];
        let mut touched = Vec::new();
        for &(pi, pc) in p.terms() {
            for &(qi, qc) in q.terms() {
                let idx = pi | qi;
                let c = pc
                    .checked_mul(qc)
                    .ok_or(Error::IntegerOverflow { phase: MUL_PHASE })?;
                ops.int_muls += 1;
                if scratch[idx] != 0 {
                    ops.int_adds += 1;
                } else {
                    touched.push(idx);
                }
                scratch[idx] = scratch[idx]
                    .checked_add(c)
                    .ok_or(Error::IntegerOverflow { phase: MUL_PHASE })?;
            }
        }
        touched.sort_unstable();
        let terms = touched
            .into_iter()
            .filter_map(|idx| (scratch[idx] != 0).then(|| (idx, scratch[idx])))
            .collect();
        Ok(NnfPoly::from_sorted_terms(k, terms))
    } else {
        let mut merged: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
        for &(pi, pc) in p.terms() {
            for &(qi, qc) in q.terms() {
                let idx = pi | qi;
                let c = pc
                    .checked_mul(qc)
                    .ok_or(Error::IntegerOverflow { phase: MUL_PHASE })?;
                ops.int_muls += 1;
                let slot = merged.entry(idx).or_insert(0);
                if *slot != 0 {
                    ops.int_adds += 1;
                }
                *slot = slot
                    .checked_add(c)
                    .ok_or(Error::IntegerOverflow { phase: MUL_PHASE })?;
            }
        }
        Ok(NnfPoly::from_sorted_terms(
            k,
            merged.into_iter().filter(|&(_, c)| c != 0).collect(),
        ))
    }
}

/// Renames every variable `x_i` to its partner `x̃_i` in the doubled
/// variable set `(x1,…,xk, x̃1,…,x̃k)`. The partners occupy the low `k`
/// index bits, so term indices are unchanged while `k` doubles: the
/// result evaluated at the point `(v, w)` equals `p` at `w`.
pub fn shift_variables(p: &NnfPoly) -> NnfPoly {
    let k2 = 2 * p.k();
    hypercube_size(k2);
    NnfPoly::from_sorted_terms(k2, p.terms().to_vec())
}

/// The same polynomial viewed over the doubled variable set: `x_i` keeps
/// its name, so term indices shift into the high `k` bits and the result
/// evaluated at `(v, w)` equals `p` at `v`.
pub fn embed_variables(p: &NnfPoly) -> NnfPoly {
    let k = p.k();
    let k2 = 2 * k;
    hypercube_size(k2);
    let terms = p.terms().iter().map(|&(idx, c)| (idx << k, c)).collect();
    NnfPoly::from_sorted_terms(k2, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(k: u32, terms: &[(usize, i64)]) -> NnfPoly {
        NnfPoly::from_terms(k, terms.iter().copied()).unwrap()
    }

    #[test]
    fn add_identity_and_doubling() {
        let p = poly(2, &[(1, 3), (2, -1)]);
        let mut ops = OpCounter::new();
        assert_eq!(poly_add(&p, &NnfPoly::zero(2), &mut ops).unwrap(), p);
        assert_eq!(ops.int_adds, 0);
        let x1 = poly(2, &[(0b10, 1)]);
        let sum = poly_add(&x1, &x1, &mut ops).unwrap();
        assert_eq!(sum.terms(), &[(0b10, 2)]);
        assert_eq!(ops.int_adds, 1);
    }

    #[test]
    fn disjoint_supports_concatenate_for_free() {
        let p = poly(3, &[(0b001, 5)]);
        let q = poly(3, &[(0b100, 7)]);
        let mut ops = OpCounter::new();
        let sum = poly_add(&p, &q, &mut ops).unwrap();
        assert_eq!(sum.terms(), &[(0b001, 5), (0b100, 7)]);
        assert_eq!(ops.int_adds, 0);
    }

    #[test]
    fn add_cancellation_drops_term() {
        let p = poly(1, &[(1, 4)]);
        let q = poly(1, &[(1, -4)]);
        let sum = poly_add(&p, &q, &mut OpCounter::new()).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn squarefree_square_of_variable() {
        let x1 = poly(1, &[(1, 1)]);
        let sq = poly_mul_squarefree(&x1, &x1, &mut OpCounter::new()).unwrap();
        assert_eq!(sq, x1);
    }

    #[test]
    fn squarefree_square_of_difference() {
        // (x1 − x2)² = x1 + x2 − 2·x1·x2 once x_i² → x_i
        let d = poly(2, &[(0b10, 1), (0b01, -1)]);
        let sq = poly_mul_squarefree(&d, &d, &mut OpCounter::new()).unwrap();
        assert_eq!(sq.terms(), &[(0b01, 1), (0b10, 1), (0b11, -2)]);
    }

    #[test]
    fn multiply_by_one_is_identity() {
        let p = poly(3, &[(0b011, 2), (0b100, -5)]);
        let one = NnfPoly::constant(3, 1);
        assert_eq!(poly_mul_squarefree(&p, &one, &mut OpCounter::new()).unwrap(), p);
    }

    #[test]
    fn mul_counts_term_pairs() {
        let p = poly(2, &[(0b01, 1), (0b10, 1)]);
        let mut ops = OpCounter::new();
        poly_mul_squarefree(&p, &p, &mut ops).unwrap();
        assert_eq!(ops.int_muls, 4);
        // cross terms x1·x2 and x2·x1 merge: one addition
        assert_eq!(ops.int_adds, 1);
    }

    #[test]
    fn shift_and_embed_evaluations() {
        let p = poly(2, &[(0, 3), (0b10, 1), (0b11, -2)]);
        let tilde = shift_variables(&p);
        let own = embed_variables(&p);
        assert_eq!(tilde.k(), 4);
        assert_eq!(own.k(), 4);
        for point in 0..16usize {
            let (v, w) = (point >> 2, point & 0b11);
            assert_eq!(tilde.evaluate(point).unwrap(), p.evaluate(w).unwrap());
            assert_eq!(own.evaluate(point).unwrap(), p.evaluate(v).unwrap());
        }
    }

    #[test]
    fn shift_of_constant_and_single_variable() {
        let c = NnfPoly::constant(1, 7);
        assert_eq!(shift_variables(&c).terms(), &[(0, 7)]);
        // x1 over k = 1 becomes x̃1, the second variable of two
        let x1 = poly(1, &[(1, 1)]);
        assert_eq!(shift_variables(&x1).terms(), &[(0b01, 1)]);
        assert_eq!(embed_variables(&x1).terms(), &[(0b10, 1)]);
    }
}
