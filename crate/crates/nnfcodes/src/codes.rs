//! Binary codes and their polynomial representation.
//!
//! A code here is an ordered list of `M` binary words of length `n`
//! (duplicates allowed; the order fixes the message ↔ codeword
//! correspondence). When `M = 2^k`, column `j` of the codeword matrix is
//! the truth table of a Boolean function over `k` variables, and those
//! `n` functions in NNF — the *defining polynomials* — form an encoder
//! `{0,1}^k → {0,1}^n` that the [`weight`](crate::weight) and
//! [`distance`](crate::distance) modules turn into distribution
//! computations. Cardinalities that are not powers of two are handled by
//! [`pad_to_power_of_two`] (extremal queries only) or
//! [`partition_power_subcodes`] (exact distributions).

use crate::boolfn::{
    eval_nnf_hypercube, nnf_from_truth, nnf_of_linear, NnfPoly, OpCounter, TruthTable,
};
use crate::error::{Error, Result};

/// An `(n, M)` binary code: `M` ordered words of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    words: Vec<Vec<bool>>,
}

impl BinaryCode {
    /// Wraps a word list, keeping the given order. Duplicate words are
    /// permitted.
    pub fn new(words: Vec<Vec<bool>>) -> Result<Self> {
        let n = match words.first() {
            Some(w) => w.len(),
            None => return Err(Error::EmptyInput),
        };
        for (index, w) in words.iter().enumerate() {
            if w.len() != n {
                return Err(Error::RaggedInput {
                    index,
                    expected: n,
                    got: w.len(),
                });
            }
        }
        Ok(BinaryCode { n, words })
    }

    /// Convenience constructor from '0'/'1' strings.
    pub fn from_strings<S: AsRef<str>>(words: impl IntoIterator<Item = S>) -> Result<Self> {
        let words = words
            .into_iter()
            .map(|s| crate::boolfn::parse_bits(s.as_ref()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        BinaryCode::new(words)
    }

    /// Word length `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cardinality `M`.
    pub fn cardinality(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Vec<bool>] {
        &self.words
    }

    pub fn word(&self, index: usize) -> &[bool] {
        &self.words[index]
    }

    /// `log2(M)` when the cardinality is a power of two.
    pub fn message_bits(&self) -> Option<u32> {
        self.words
            .len()
            .is_power_of_two()
            .then(|| self.words.len().trailing_zeros())
    }
}

/// Renders a word as a '0'/'1' string.
pub fn word_string(word: &[bool]) -> String {
    word.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// The `n` defining polynomials of a `(n, 2^k)` code: NNFs over `k`
/// variables whose joint evaluation at point `p` is word `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningPolynomials {
    k: u32,
    polys: Vec<NnfPoly>,
}

impl DefiningPolynomials {
    /// Wraps explicit column polynomials; they must all share the same
    /// variable count and there must be at least one.
    pub fn from_polynomials(polys: Vec<NnfPoly>) -> Result<Self> {
        let k = match polys.first() {
            Some(p) => p.k(),
            None => return Err(Error::EmptyInput),
        };
        for (index, p) in polys.iter().enumerate() {
            if p.k() != k {
                return Err(Error::RaggedInput {
                    index,
                    expected: k as usize,
                    got: p.k() as usize,
                });
            }
        }
        Ok(DefiningPolynomials { k, polys })
    }

    /// Message length `k`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Code length `n` (number of columns).
    pub fn n(&self) -> usize {
        self.polys.len()
    }

    pub fn columns(&self) -> &[NnfPoly] {
        &self.polys
    }

    /// Total nonzero coefficients across all columns.
    pub fn total_nonzero(&self) -> u64 {
        self.polys.iter().map(|p| p.nonzero_count() as u64).sum()
    }

    /// Mean nonzero coefficients per column (the `2^k/h` of the sparsity
    /// analyses).
    pub fn average_nonzero(&self) -> f64 {
        self.total_nonzero() as f64 / self.n() as f64
    }
}

/// Extracts the defining polynomials of a power-of-two code: column `j`
/// of the codeword matrix, read as a truth table over `k = log2(M)`
/// variables, is converted with the integer butterfly. Costs exactly
/// `n·k·2^{k−1}` integer subtractions.
pub fn defining_polynomials(c: &BinaryCode, ops: &mut OpCounter) -> Result<DefiningPolynomials> {
    let k = c
        .message_bits()
        .ok_or(Error::NotPowerOfTwo { m: c.cardinality() })?;
    let polys = (0..c.n())
        .map(|j| {
            let column = TruthTable::from_fn(k, |p| c.word(p)[j]);
            nnf_from_truth(&column, ops)
        })
        .collect();
    Ok(DefiningPolynomials { k, polys })
}

/// Rebuilds the code from its defining polynomials: word `p` is
/// `(f_1(p), …, f_n(p))`. Inverse of [`defining_polynomials`]. Fails with
/// [`Error::NotBoolean`] if any evaluation falls outside `{0, 1}`.
pub fn code_from_polynomials(d: &DefiningPolynomials) -> Result<BinaryCode> {
    let m = crate::boolfn::hypercube_size(d.k());
    let mut words = vec![Vec::with_capacity(d.n()); m];
    for (column, poly) in d.columns().iter().enumerate() {
        let values = eval_nnf_hypercube(poly, &mut OpCounter::new())?;
        for (point, &v) in values.iter().enumerate() {
            match v {
                0 => words[point].push(false),
                1 => words[point].push(true),
                value => {
                    return Err(Error::NotBoolean {
                        column,
                        point,
                        value,
                    })
                }
            }
        }
    }
    BinaryCode::new(words)
}

/// A `k × n` binary generator matrix. No rank requirement: dependent rows
/// simply produce repeated codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    k: usize,
    n: usize,
    rows: Vec<Vec<bool>>,
}

impl GeneratorMatrix {
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self> {
        let n = match rows.first() {
            Some(r) => r.len(),
            None => return Err(Error::EmptyInput),
        };
        for (index, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::RaggedInput {
                    index,
                    expected: n,
                    got: r.len(),
                });
            }
        }
        Ok(GeneratorMatrix {
            k: rows.len(),
            n,
            rows,
        })
    }

    pub fn from_strings<S: AsRef<str>>(rows: impl IntoIterator<Item = S>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|s| crate::boolfn::parse_bits(s.as_ref()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        GeneratorMatrix::new(rows)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    /// 1-based variable numbers feeding column `j`: the rows with a 1 in
    /// that column. The column's defining polynomial is the XOR of those
    /// variables.
    pub fn column_variables(&self, j: usize) -> Vec<usize> {
        (0..self.k).filter(|&i| self.rows[i][j]).map(|i| i + 1).collect()
    }
}

/// Expands a generator matrix into the full `(n, 2^k)` linear code: the
/// word at point `m` is `m·G` over `F_2`, messages enumerated in point
/// order.
pub fn code_from_generator(g: &GeneratorMatrix) -> BinaryCode {
    let k = g.k() as u32;
    let m = crate::boolfn::hypercube_size(k);
    let words = (0..m)
        .map(|point| {
            let mut word = vec![false; g.n()];
            for (i, row) in g.rows().iter().enumerate() {
                // message coordinate m_i = bit (k − 1 − i) of the point
                if point >> (g.k() - 1 - i) & 1 == 1 {
                    for (w, &r) in word.iter_mut().zip(row) {
                        *w ^= r;
                    }
                }
            }
            word
        })
        .collect();
    BinaryCode::new(words).expect("generator expansion is rectangular")
}

/// Defining polynomials of a linear code straight from its generator
/// matrix, using the closed-form NNF of each column's linear form. A
/// column with no generator bits is the zero polynomial.
pub fn linear_defining_polynomials(g: &GeneratorMatrix) -> DefiningPolynomials {
    let k = g.k() as u32;
    let polys = (0..g.n())
        .map(|j| {
            let vars = g.column_variables(j);
            if vars.is_empty() {
                NnfPoly::zero(k)
            } else {
                nnf_of_linear(&vars, k).expect("column variables are in range")
            }
        })
        .collect();
    DefiningPolynomials { k, polys }
}

/// Appends copies of the first word until the cardinality reaches the
/// next power of two. Padding preserves the minimum weight, and the
/// minimum distance over pairs of *distinct words*, but not the
/// distributions — duplicated words create artificial zero distances, so
/// callers must restrict padded codes to extremal queries.
pub fn pad_to_power_of_two(c: &BinaryCode) -> BinaryCode {
    let m = c.cardinality();
    let target = m.next_power_of_two();
    let mut words = c.words().to_vec();
    words.resize(target, c.word(0).to_vec());
    BinaryCode { n: c.n(), words }
}

/// One block of a [`SubcodePartition`]: a power-of-two subcode together
/// with the position of its first word in the original code. Blocks are
/// consecutive slices, so original index = `first_index` + local index.
#[derive(Debug, Clone)]
pub struct SubcodeBlock {
    pub code: BinaryCode,
    pub first_index: usize,
}

impl SubcodeBlock {
    pub fn original_index(&self, local: usize) -> usize {
        self.first_index + local
    }
}

/// A partition of a code into consecutive power-of-two blocks.
#[derive(Debug, Clone)]
pub struct SubcodePartition {
    blocks: Vec<SubcodeBlock>,
}

impl SubcodePartition {
    pub fn blocks(&self) -> &[SubcodeBlock] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.code.cardinality()).collect()
    }
}

/// Splits the word list into consecutive blocks sized by the binary
/// expansion of `M`, largest first. Exact weight distributions sum over
/// blocks; exact distance distributions combine per-block runs with
/// direct cross-block comparisons.
pub fn partition_power_subcodes(c: &BinaryCode) -> SubcodePartition {
    let m = c.cardinality();
    let mut blocks = Vec::new();
    let mut start = 0usize;
    for bit in (0..usize::BITS).rev() {
        let size = 1usize << bit;
        if m & size != 0 {
            let words = c.words()[start..start + size].to_vec();
            blocks.push(SubcodeBlock {
                code: BinaryCode { n: c.n(), words },
                first_index: start,
            });
            start += size;
        }
    }
    SubcodePartition { blocks }
}

/// A parsed CLI input: either an explicit word list or a generator
/// matrix.
#[derive(Debug, Clone)]
pub enum CodeInput {
    Words(BinaryCode),
    Generator(GeneratorMatrix),
}

impl CodeInput {
    /// The code described by the input, expanding generators.
    pub fn into_code(self) -> BinaryCode {
        match self {
            CodeInput::Words(c) => c,
            CodeInput::Generator(g) => code_from_generator(&g),
        }
    }
}

/// Parses either file format:
///
/// * code file — one '0'/'1' word per line, optional header
///   `# n=<n> M=<M>`;
/// * generator file — header `# generator`, then `k` rows of `n`
///   characters.
///
/// Other `#` lines are comments; blank lines are skipped.
pub fn parse_input(text: &str) -> Result<CodeInput> {
    if detect_generator(text) {
        Ok(CodeInput::Generator(parse_generator(text)?))
    } else {
        Ok(CodeInput::Words(parse_code(text)?))
    }
}

fn detect_generator(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.eq_ignore_ascii_case("# generator"))
}

/// Parses the plain code file format.
pub fn parse_code(text: &str) -> Result<BinaryCode> {
    let mut declared: Option<(usize, usize)> = None;
    let mut words = Vec::new();
    let mut first_word_line = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(header) = parse_size_header(rest) {
                declared = Some(header?);
            }
            continue;
        }
        let bits = crate::boolfn::parse_bits(line)
            .map_err(|_| Error::parse(lineno, format!("invalid codeword {line:?}")))?;
        if words.is_empty() {
            first_word_line = lineno;
        } else if bits.len() != words[0].len() {
            return Err(Error::RaggedInput {
                index: words.len(),
                expected: words[0].len(),
                got: bits.len(),
            });
        }
        words.push(bits);
    }
    let code = BinaryCode::new(words)?;
    if let Some((n, m)) = declared {
        if n != code.n() || m != code.cardinality() {
            return Err(Error::parse(
                first_word_line,
                format!(
                    "header declares n={n} M={m} but the file contains {} words of length {}",
                    code.cardinality(),
                    code.n()
                ),
            ));
        }
    }
    Ok(code)
}

fn parse_size_header(rest: &str) -> Option<Result<(usize, usize)>> {
    let mut n = None;
    let mut m = None;
    for token in rest.split_whitespace() {
        if let Some(v) = token.strip_prefix("n=") {
            n = Some(v.parse::<usize>());
        } else if let Some(v) = token.strip_prefix("M=") {
            m = Some(v.parse::<usize>());
        } else {
            return None; // an ordinary comment
        }
    }
    match (n, m) {
        (Some(Ok(n)), Some(Ok(m))) => Some(Ok((n, m))),
        (None, None) => None,
        _ => Some(Err(Error::parse(0, "malformed size header, expected `# n=<n> M=<M>`"))),
    }
}

/// Parses the generator matrix format (`# generator` header).
pub fn parse_generator(text: &str) -> Result<GeneratorMatrix> {
    let mut rows = Vec::new();
    let mut seen_header = false;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if rest.trim().eq_ignore_ascii_case("generator") {
                seen_header = true;
            }
            continue;
        }
        let bits = crate::boolfn::parse_bits(line)
            .map_err(|_| Error::parse(lineno, format!("invalid matrix row {line:?}")))?;
        if let Some(first) = rows.first() {
            let first: &Vec<bool> = first;
            if bits.len() != first.len() {
                return Err(Error::RaggedInput {
                    index: rows.len(),
                    expected: first.len(),
                    got: bits.len(),
                });
            }
        }
        rows.push(bits);
    }
    if !seen_header {
        return Err(Error::parse(0, "missing `# generator` header"));
    }
    GeneratorMatrix::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(words: &[&str]) -> BinaryCode {
        BinaryCode::from_strings(words).unwrap()
    }

    /// All `2^k` messages in point order, each encoded as its own binary
    /// expansion: the defining polynomial of column j is x_j.
    fn identity_encoder(k: u32) -> BinaryCode {
        let m = 1usize << k;
        BinaryCode::new(
            (0..m)
                .map(|p| (0..k).map(|j| p >> (k - 1 - j) & 1 == 1).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn load_checks_shape() {
        let c = code(&["000", "111"]);
        assert_eq!((c.n(), c.cardinality()), (3, 2));
        assert!(matches!(
            BinaryCode::from_strings(["01", "011"]),
            Err(Error::RaggedInput { index: 1, expected: 2, got: 3 })
        ));
        assert!(matches!(BinaryCode::new(vec![]), Err(Error::EmptyInput)));
    }

    #[test]
    fn duplicates_are_preserved_in_order() {
        let c = code(&["01", "01", "10"]);
        assert_eq!(c.cardinality(), 3);
        assert_eq!(c.word(0), c.word(1));
        assert_eq!(word_string(c.word(2)), "10");
    }

    #[test]
    fn identity_encoder_columns_are_variables() {
        let c = identity_encoder(3);
        let d = defining_polynomials(&c, &mut OpCounter::new()).unwrap();
        for (j, poly) in d.columns().iter().enumerate() {
            let var_idx = 1usize << (2 - j);
            assert_eq!(poly.terms(), &[(var_idx, 1)], "column {j}");
        }
    }

    #[test]
    fn repetition_code_columns_are_x1() {
        let d = defining_polynomials(&code(&["000", "111"]), &mut OpCounter::new()).unwrap();
        assert_eq!(d.k(), 1);
        for poly in d.columns() {
            assert_eq!(poly.terms(), &[(1, 1)]);
        }
    }

    #[test]
    fn non_power_of_two_is_rejected() {
        let c = code(&["0", "1", "0"]);
        assert!(matches!(
            defining_polynomials(&c, &mut OpCounter::new()),
            Err(Error::NotPowerOfTwo { m: 3 })
        ));
    }

    #[test]
    fn extraction_cost_is_exact() {
        let c = identity_encoder(3);
        let mut ops = OpCounter::new();
        defining_polynomials(&c, &mut ops).unwrap();
        // n = 3 columns, k·2^{k−1} = 12 subtractions each
        assert_eq!(ops.int_adds, 36);
    }

    #[test]
    fn polynomials_reproduce_the_code() {
        let c = code(&["0110", "1010", "0001", "1111"]);
        let d = defining_polynomials(&c, &mut OpCounter::new()).unwrap();
        assert_eq!(code_from_polynomials(&d).unwrap(), c);
    }

    #[test]
    fn non_boolean_polynomials_are_rejected() {
        let d = DefiningPolynomials::from_polynomials(vec![NnfPoly::monomial(1, 1, 2)]).unwrap();
        assert!(matches!(
            code_from_polynomials(&d),
            Err(Error::NotBoolean { column: 0, point: 1, value: 2 })
        ));
        let one = DefiningPolynomials::from_polynomials(vec![NnfPoly::constant(1, 1)]).unwrap();
        let c = code_from_polynomials(&one).unwrap();
        assert_eq!(c, code(&["1", "1"]));
    }

    #[test]
    fn generator_identity_and_repetition() {
        let g = GeneratorMatrix::from_strings(["100", "010", "001"]).unwrap();
        assert_eq!(code_from_generator(&g), identity_encoder(3));
        let rep = GeneratorMatrix::from_strings(["111"]).unwrap();
        assert_eq!(code_from_generator(&rep), code(&["000", "111"]));
    }

    #[test]
    fn generator_columns_match_linear_closed_form() {
        let g = GeneratorMatrix::from_strings(["1101", "0111", "1010"]).unwrap();
        let c = code_from_generator(&g);
        let extracted = defining_polynomials(&c, &mut OpCounter::new()).unwrap();
        let closed = linear_defining_polynomials(&g);
        assert_eq!(extracted, closed);
    }

    #[test]
    fn zero_generator_column_gives_zero_polynomial() {
        let g = GeneratorMatrix::from_strings(["10", "10"]).unwrap();
        // second column is all zero
        assert!(linear_defining_polynomials(&g).columns()[1].is_zero());
    }

    #[test]
    fn padding_repeats_the_first_word() {
        let c = code(&["011", "101", "110"]);
        let padded = pad_to_power_of_two(&c);
        assert_eq!(padded.cardinality(), 4);
        assert_eq!(padded.word(3), c.word(0));
        let already = code(&["01", "10", "11", "00"]);
        assert_eq!(pad_to_power_of_two(&already), already);
    }

    #[test]
    fn partition_follows_binary_expansion() {
        let words: Vec<String> = (0..6).map(|i| format!("{i:03b}")).collect();
        let c = BinaryCode::from_strings(&words).unwrap();
        let partition = partition_power_subcodes(&c);
        assert_eq!(partition.block_sizes(), vec![4, 2]);
        assert_eq!(partition.blocks()[0].first_index, 0);
        assert_eq!(partition.blocks()[1].first_index, 4);
        // blocks reassemble the original list
        let mut rebuilt = Vec::new();
        for b in partition.blocks() {
            rebuilt.extend(b.code.words().iter().cloned());
        }
        assert_eq!(rebuilt, c.words());

        let eight: Vec<String> = (0..8).map(|i| format!("{i:03b}")).collect();
        let c8 = BinaryCode::from_strings(&eight).unwrap();
        assert_eq!(partition_power_subcodes(&c8).block_sizes(), vec![8]);
    }

    #[test]
    fn parse_code_format() {
        let c = parse_code("# a comment\n# n=3 M=2\n000\n\n111\n").unwrap();
        assert_eq!((c.n(), c.cardinality()), (3, 2));
        assert!(matches!(
            parse_code("# n=3 M=4\n000\n111\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_code("00\n0x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_code(""), Err(Error::EmptyInput)));
    }

    #[test]
    fn parse_generator_format() {
        let input = "# generator\n111\n";
        match parse_input(input).unwrap() {
            CodeInput::Generator(g) => assert_eq!((g.k(), g.n()), (1, 3)),
            CodeInput::Words(_) => panic!("expected generator"),
        }
        assert!(matches!(parse_generator("111\n"), Err(Error::Parse { .. })));
    }
}
