//! Fast Möbius transforms between the three representations.
//!
//! All three directions share the same in-place butterfly over subsets of
//! the hypercube: `k` stages, each combining `2^{k−1}` pairs
//! `(e[x], e[x + step])` whose indices differ in one bit. Over `F_2` the
//! combine is XOR and the transform is its own inverse (truth table ↔
//! ANF). Over the integers, subtraction extracts NNF coefficients from a
//! truth table and addition evaluates an NNF over the whole hypercube.
//! Each direction performs exactly `k·2^{k−1}` operations on a `2^k`
//! vector.

use super::{hypercube_size, MonomialIndex, OpCounter};
use super::{AnfPoly, NnfPoly, TruthTable};
use crate::error::{Error, Result};

/// Runs the butterfly stages, calling `combine(&mut pair_hi, pair_lo)` on
/// every index pair differing in one bit, low bit first.
fn butterfly<T: Copy>(data: &mut [T], mut combine: impl FnMut(&mut T, T) -> Result<()>) -> Result<()> {
    let mut step = 1;
    while step < data.len() {
        for block in data.chunks_mut(2 * step) {
            let (lo, hi) = block.split_at_mut(step);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                combine(b, *a)?;
            }
        }
        step <<= 1;
    }
    Ok(())
}

fn stage_ops(len: usize) -> u64 {
    // k stages of len/2 combines each
    if len <= 1 {
        return 0;
    }
    (len.trailing_zeros() as u64) * (len as u64 / 2)
}

/// The ANF of a Boolean function, by the `F_2` butterfly on its truth
/// table. Performs exactly `k·2^{k−1}` bit XORs.
pub fn anf_from_truth(t: &TruthTable, ops: &mut OpCounter) -> AnfPoly {
    let mut bits = t.bits().to_vec();
    butterfly(&mut bits, |b, a| {
        *b ^= a;
        Ok(())
    })
    .expect("XOR butterfly cannot fail");
    ops.bit_xors += stage_ops(bits.len());
    AnfPoly::new(t.k(), bits)
}

/// The truth table of an ANF. The `F_2` butterfly is self-inverse, so this
/// is the same transform as [`anf_from_truth`].
pub fn truth_from_anf(a: &AnfPoly, ops: &mut OpCounter) -> TruthTable {
    let mut bits = a.coeffs().to_vec();
    butterfly(&mut bits, |b, a| {
        *b ^= a;
        Ok(())
    })
    .expect("XOR butterfly cannot fail");
    ops.bit_xors += stage_ops(bits.len());
    TruthTable::new(a.k(), bits)
}

/// The NNF of a Boolean function: the integer butterfly with subtraction
/// in place of XOR. Performs exactly `k·2^{k−1}` integer subtractions.
pub fn nnf_from_truth(t: &TruthTable, ops: &mut OpCounter) -> NnfPoly {
    let mut vals: Vec<i64> = t.bits().iter().map(|&b| b as i64).collect();
    butterfly(&mut vals, |b, a| {
        // |coefficient| <= 2^{degree} for 0/1 inputs, far below i64 range
        *b = b.checked_sub(a).expect("NNF coefficients of a Boolean function fit in i64");
        Ok(())
    })
    .expect("bounded subtraction cannot fail");
    ops.int_adds += stage_ops(vals.len());
    NnfPoly::from_dense(t.k(), &vals)
}

/// Evaluates an NNF at every point of `{0,1}^k`: the integer butterfly
/// with addition, so entry `v` of the result is the sum of the
/// coefficients of all monomials contained in `v`. Performs exactly
/// `k·2^{k−1}` checked integer additions.
pub fn eval_nnf_hypercube(p: &NnfPoly, ops: &mut OpCounter) -> Result<Vec<i64>> {
    let mut vals = p.to_dense();
    butterfly(&mut vals, |b, a| {
        *b = b
            .checked_add(a)
            .ok_or(Error::IntegerOverflow { phase: "hypercube evaluation" })?;
        Ok(())
    })?;
    ops.int_adds += stage_ops(vals.len());
    Ok(vals)
}

/// NNF coefficient at `u` computed directly from the truth table:
///
/// ```text
/// λ_u = (−1)^{w(u)} · Σ_{a ⪯ u} (−1)^{w(a)} f(a)
/// ```
///
/// where `w` is Hamming weight and `a ⪯ u` ranges over submasks of `u`.
/// Quadratic in the submask count; kept as an independent reference for
/// testing the butterfly path.
pub fn nnf_coefficient_direct(t: &TruthTable, u: MonomialIndex) -> i64 {
    assert_eq!(u.k(), t.k(), "monomial index and table must share k");
    let sign = |m: usize| if m.count_ones() % 2 == 0 { 1i64 } else { -1i64 };
    let mask = u.idx();
    let mut sum = 0i64;
    let mut a = mask;
    loop {
        if t.get(a) {
            sum += sign(a);
        }
        if a == 0 {
            break;
        }
        a = (a - 1) & mask;
    }
    sign(mask) * sum
}

/// Lifts an ANF to its NNF without going through the truth table, by
/// folding the monomials with `a ⊕ b = a + b − 2ab` in the square-free
/// quotient ring. The cost scales with the sparsity of the result rather
/// than with `2^k`.
pub fn nnf_from_anf(a: &AnfPoly, ops: &mut OpCounter) -> Result<NnfPoly> {
    let mut acc = NnfPoly::zero(a.k());
    for m in a.support_indices() {
        acc = xor_monomial(&acc, m, ops)?;
    }
    Ok(acc)
}

/// `acc ⊕ x^m` lifted to the integers: `acc + x^m − 2·acc·x^m`.
/// Multiplying by a monomial ORs `m` into every term index.
fn xor_monomial(acc: &NnfPoly, m: usize, ops: &mut OpCounter) -> Result<NnfPoly> {
    let mut merged: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
    let mut accumulate = |idx: usize, value: i64, ops: &mut OpCounter| -> Result<()> {
        let slot = merged.entry(idx).or_insert(0);
        if *slot != 0 {
            ops.int_adds += 1;
        }
        *slot = slot
            .checked_add(value)
            .ok_or(Error::IntegerOverflow { phase: "ANF to NNF lift" })?;
        Ok(())
    };
    for &(idx, c) in acc.terms() {
        accumulate(idx, c, ops)?;
        let scaled = c
            .checked_mul(-2)
            .ok_or(Error::IntegerOverflow { phase: "ANF to NNF lift" })?;
        ops.int_muls += 1;
        accumulate(idx | m, scaled, ops)?;
    }
    accumulate(m, 1, ops)?;
    Ok(NnfPoly::from_sorted_terms(
        acc.k(),
        merged.into_iter().filter(|&(_, c)| c != 0).collect(),
    ))
}

/// The ANF of a Boolean function given its NNF: coefficient-wise reduction
/// modulo 2. Inverse of [`nnf_from_anf`] when the NNF describes a Boolean
/// function.
pub fn anf_from_nnf(p: &NnfPoly) -> AnfPoly {
    AnfPoly::from_support(
        p.k(),
        p.terms().iter().filter(|&&(_, c)| c & 1 != 0).map(|&(idx, _)| idx),
    )
}

/// Closed-form NNF of the linear Boolean function `x_{i1} ⊕ … ⊕ x_{ir}`.
///
/// The support is all `2^r − 1` nonempty submonomials of the chosen
/// variables, and a submonomial of degree `w` has coefficient
/// `(−1)^{w−1}·2^{w−1}`. Agrees with [`nnf_from_anf`] on the corresponding
/// `r`-term ANF.
///
/// `vars` holds 1-based variable numbers; they must be distinct and in
/// `1..=k`, and at least one is required.
pub fn nnf_of_linear(vars: &[usize], k: u32) -> Result<NnfPoly> {
    if vars.is_empty() {
        return Err(Error::InvalidVariableSet(
            "a linear function needs at least one variable".into(),
        ));
    }
    let mut bits = Vec::with_capacity(vars.len());
    for &var in vars {
        if var == 0 || var > k as usize {
            return Err(Error::InvalidVariableSet(format!(
                "variable x{var} out of range 1..={k}"
            )));
        }
        bits.push(1usize << (k as usize - var));
    }
    {
        let mut sorted = bits.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidVariableSet("repeated variable".into()));
        }
    }
    let r = bits.len();
    assert!(r < 63, "variable set too large");
    let mut terms = Vec::with_capacity((1usize << r) - 1);
    for subset in 1usize..(1 << r) {
        let mut idx = 0usize;
        for (pos, &bit) in bits.iter().enumerate() {
            if subset >> pos & 1 == 1 {
                idx |= bit;
            }
        }
        let w = subset.count_ones();
        let magnitude = 1i64 << (w - 1);
        terms.push((idx, if w % 2 == 0 { -magnitude } else { magnitude }));
    }
    terms.sort_unstable_by_key(|&(idx, _)| idx);
    Ok(NnfPoly::from_sorted_terms(k, terms))
}
