//! Boolean functions and the quantum black-box built from them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::limits;
use crate::qstate::{StateError, StateVector};

/// Largest arity accepted for a truth table.
pub const MAX_ARITY: usize = limits::ABSOLUTE_MAX_QUBITS;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("oracle expects a {expected}-qubit state, got {found} qubits")]
    ArityMismatch { expected: usize, found: usize },
    #[error("truth table length {0} is not 2^n for some n >= 1")]
    BadTableLength(usize),
    #[error(transparent)]
    State(#[from] StateError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty truth table")]
    Empty,
    #[error("truth table length {0} is not a power of two >= 2")]
    LengthNotPowerOfTwo(usize),
    #[error("illegal character {0:?} in truth table")]
    IllegalCharacter(char),
    #[error("hex value needs more than 2^{n} bits")]
    HexTooLong { n: usize },
    #[error("declared arity {declared} disagrees with binary table of arity {found}")]
    ArityConflict { declared: usize, found: usize },
    #[error("arity {0} outside the supported range 1..={MAX_ARITY}")]
    ArityOutOfRange(usize),
}

/// Truth table of `f : {0,1}^n → {0,1}`. `table[i]` is `f(x)` for the
/// big-endian bit string `x` of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n: usize,
    table: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(table: Vec<bool>) -> Result<Self, OracleError> {
        let len = table.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(OracleError::BadTableLength(len));
        }
        Ok(BooleanFunction {
            n: len.trailing_zeros() as usize,
            table,
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        assert!((1..=MAX_ARITY).contains(&n), "arity {n} out of range");
        BooleanFunction {
            n,
            table: (0..1usize << n).map(f).collect(),
        }
    }

    pub fn constant(n: usize, value: bool) -> Self {
        Self::from_fn(n, |_| value)
    }

    /// Function whose table, read as a `2^n`-bit big-endian integer, equals
    /// `index`. `n` must be at most 6.
    pub fn from_table_index(n: usize, index: u64) -> Self {
        assert!((1..=6).contains(&n), "table index encoding needs n <= 6");
        let len = 1usize << n;
        Self::from_fn(n, |i| (index >> (len - 1 - i)) & 1 == 1)
    }

    /// Inverse of [`from_table_index`](Self::from_table_index).
    pub fn table_index(&self) -> Option<u64> {
        (self.n <= 6).then(|| {
            self.table
                .iter()
                .fold(0u64, |acc, &b| (acc << 1) | b as u64)
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn eval(&self, x: usize) -> bool {
        self.table[x]
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn ones(&self) -> usize {
        self.table.iter().filter(|&&b| b).count()
    }

    /// `'0'`/`'1'` string, one character per input in index order.
    pub fn to_bit_string(&self) -> String {
        self.table
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    /// `(-1)^{f(x)}` for every `x`.
    pub fn signs(&self) -> Vec<i8> {
        self.table.iter().map(|&b| if b { -1 } else { 1 }).collect()
    }

    /// The phase-oracle image of `|+⟩^{⊗n}`: `Σ_x (-1)^{f(x)} |x⟩ / 2^{n/2}`,
    /// held exactly.
    pub fn phase_state(&self) -> Result<StateVector, StateError> {
        StateVector::from_signs(&self.signs())
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.table {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self)
    }
}

/// Promise class of a function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionKind {
    Constant,
    Balanced,
    Invalid,
}

impl FunctionKind {
    pub fn is_valid(self) -> bool {
        self != FunctionKind::Invalid
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionKind::Constant => "constant",
            FunctionKind::Balanced => "balanced",
            FunctionKind::Invalid => "invalid",
        }
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub kind: FunctionKind,
    pub ones_count: usize,
}

pub fn classify(f: &BooleanFunction) -> Classification {
    let ones = f.ones();
    let kind = if ones == 0 || ones == f.len() {
        FunctionKind::Constant
    } else if 2 * ones == f.len() {
        FunctionKind::Balanced
    } else {
        FunctionKind::Invalid
    };
    Classification {
        kind,
        ones_count: ones,
    }
}

/// `f'(x) = f(x) ⊕ 1`.
pub fn negate(f: &BooleanFunction) -> BooleanFunction {
    BooleanFunction {
        n: f.n,
        table: f.table.iter().map(|b| !b).collect(),
    }
}

/// n-qubit phase oracle `|x⟩ → (-1)^{f(x)}|x⟩`.
pub fn apply_phase_oracle(
    f: &BooleanFunction,
    s: &StateVector,
) -> Result<StateVector, OracleError> {
    if s.n() != f.n {
        return Err(OracleError::ArityMismatch {
            expected: f.n,
            found: s.n(),
        });
    }
    Ok(s.map_signs(|i| f.table[i]))
}

/// (n+1)-qubit f-controlled-NOT `|x⟩|y⟩ → |x⟩|y ⊕ f(x)⟩`; the target is
/// the last (least significant) qubit.
pub fn apply_xor_oracle(f: &BooleanFunction, s: &StateVector) -> Result<StateVector, OracleError> {
    if s.n() != f.n + 1 {
        return Err(OracleError::ArityMismatch {
            expected: f.n + 1,
            found: s.n(),
        });
    }
    Ok(s.permute(|i| if f.table[i >> 1] { i ^ 1 } else { i }))
}

fn arity_of_len(len: usize) -> Result<usize, ParseError> {
    if len < 2 || !len.is_power_of_two() {
        return Err(ParseError::LengthNotPowerOfTwo(len));
    }
    let n = len.trailing_zeros() as usize;
    if n > MAX_ARITY {
        return Err(ParseError::ArityOutOfRange(n));
    }
    Ok(n)
}

/// Parses a truth table.
///
/// Accepts a `'0'`/`'1'` string of length `2^n` (n ≥ 1), or `0x`-prefixed
/// hex. Hex is read as a big-endian integer whose `2^n`-bit binary expansion
/// is the table; `n` comes from `declared_n` or, failing that, from the
/// digit count (`4·digits` bits).
pub fn parse_truth_table(
    text: &str,
    declared_n: Option<usize>,
) -> Result<BooleanFunction, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(n) = declared_n {
        if !(1..=MAX_ARITY).contains(&n) {
            return Err(ParseError::ArityOutOfRange(n));
        }
    }
    let hex = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X"));
    let table: Vec<bool> = match hex {
        Some(digits) => {
            if digits.is_empty() {
                return Err(ParseError::Empty);
            }
            let nibbles = digits
                .chars()
                .map(|c| c.to_digit(16).ok_or(ParseError::IllegalCharacter(c)))
                .collect::<Result<Vec<_>, _>>()?;
            let n = match declared_n {
                Some(n) => n,
                None => arity_of_len(4 * nibbles.len())?,
            };
            let len = 1usize << n;
            let bits: Vec<bool> = nibbles
                .iter()
                .flat_map(|d| (0..4).rev().map(move |k| (d >> k) & 1 == 1))
                .collect();
            // drop leading zero bits beyond the table width
            let excess = bits.len().saturating_sub(len);
            if bits[..excess].iter().any(|&b| b) {
                return Err(ParseError::HexTooLong { n });
            }
            let mut table = alloc::vec![false; len.saturating_sub(bits.len())];
            table.extend_from_slice(&bits[excess..]);
            table
        }
        None => {
            let table = text
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(ParseError::IllegalCharacter(other)),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let n = arity_of_len(table.len())?;
            if let Some(d) = declared_n {
                if d != n {
                    return Err(ParseError::ArityConflict {
                        declared: d,
                        found: n,
                    });
                }
            }
            table
        }
    };
    let n = table.len().trailing_zeros() as usize;
    Ok(BooleanFunction { n, table })
}

/// A black-box wrapper around `f` that counts how often it is queried.
///
/// The counter is atomic, so one oracle may be shared across threads.
#[derive(Debug)]
pub struct Oracle {
    f: BooleanFunction,
    queries: AtomicU64,
}

impl Oracle {
    pub fn new(f: BooleanFunction) -> Self {
        Oracle {
            f,
            queries: AtomicU64::new(0),
        }
    }

    pub fn arity(&self) -> usize {
        self.f.n
    }

    /// Phase form; one query.
    pub fn apply_phase(&self, s: &StateVector) -> Result<StateVector, OracleError> {
        self.queries.fetch_add(1, Ordering::Relaxed);
        apply_phase_oracle(&self.f, s)
    }

    /// f-cNOT form; one query.
    pub fn apply_xor(&self, s: &StateVector) -> Result<StateVector, OracleError> {
        self.queries.fetch_add(1, Ordering::Relaxed);
        apply_xor_oracle(&self.f, s)
    }

    /// Classical evaluation of `f(x)`; one query.
    pub fn evaluate(&self, x: usize) -> bool {
        self.queries.fetch_add(1, Ordering::Relaxed);
        self.f.eval(x)
    }

    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }

    /// Read access to the table for solvers that model the black-box
    /// analytically; does not count as a query.
    pub(crate) fn function(&self) -> &BooleanFunction {
        &self.f
    }

    pub(crate) fn record_query(&self) {
        self.queries.fetch_add(1, Ordering::Relaxed);
    }
}
