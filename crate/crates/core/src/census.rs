//! Counting valid and separable Deutsch-Jozsa functions.
//!
//! `b_n = C(2^n, 2^{n-1}) + 2` functions are valid; `a_n = 2^{n+1}` of them
//! give a separable oracle state. The separable family is generated
//! recursively and checked against an exhaustive scan for small `n`.

use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::oracle::{classify, BooleanFunction};
use crate::separability::{factor_product_state, SeparabilityError};

/// Largest `n` accepted by the closed-form counts.
pub const MAX_FORMULA_ARITY: usize = 30;
/// Largest `n` accepted by the recursive enumeration.
pub const MAX_ENUMERATION_ARITY: usize = 20;
/// Largest `n` for the exhaustive scan (`2^{2^4} = 65536` tables).
pub const MAX_BRUTE_FORCE_ARITY: usize = 4;

/// The balanced function used as the inline n = 3 entanglement example.
pub const ENTANGLED_EXAMPLE_N3: &str = "00011110";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CensusError {
    #[error("n must be at least {min}, got {n}")]
    ArityTooSmall { n: usize, min: usize },
    #[error("n = {n} exceeds the limit of {max} for {what}")]
    ArityTooLarge {
        n: usize,
        max: usize,
        what: &'static str,
    },
    #[error("table range {start}..{end} exceeds 2^(2^{n})")]
    BadRange { n: usize, start: u64, end: u64 },
    #[error(transparent)]
    Separability(#[from] SeparabilityError),
}

fn check_arity(n: usize, min: usize, max: usize, what: &'static str) -> Result<(), CensusError> {
    if n < min {
        return Err(CensusError::ArityTooSmall { n, min });
    }
    if n > max {
        return Err(CensusError::ArityTooLarge { n, max, what });
    }
    Ok(())
}

/// `b_n = C(2^n, 2^{n-1}) + 2`.
///
/// Exact for every accepted `n`, but the binomial has about `2^n` bits, so
/// anything past `n ≈ 16` is slow.
pub fn count_valid(n: usize) -> Result<BigUint, CensusError> {
    check_arity(n, 1, MAX_FORMULA_ARITY, "closed-form counts")?;
    let big_n = BigUint::one() << n;
    let half = BigUint::one() << (n - 1);
    Ok(num_integer::binomial(big_n, half) + 2u32)
}

/// `a_n = 2^{n+1}`, from `a_1 = 4` and `a_{n+1} = 2·a_n`.
pub fn count_separable(n: usize) -> Result<BigUint, CensusError> {
    check_arity(n, 1, MAX_FORMULA_ARITY, "closed-form counts")?;
    Ok(BigUint::one() << (n + 1))
}

/// `a_n / b_n` in lowest terms.
pub fn separable_fraction(n: usize) -> Result<Ratio<BigUint>, CensusError> {
    Ok(Ratio::new(count_separable(n)?, count_valid(n)?))
}

/// Iterator over the separable family of arity `n`.
///
/// Item `m` is built from the bits of `m`: the top two select one of the
/// four arity-1 functions (`00, 01, 10, 11`), each later bit is the free
/// choice made when extending from arity `k` to `k + 1`. Extension keeps the
/// lower half and fills the upper half so that every level-(k+1) pair
/// product matches `α_{N-1}·α_N`:
///
/// `f(N + j) = f(N - 1 - j) ⊕ f(N - 1) ⊕ free`.
///
/// Items therefore come out ordered by (parent, free bit).
#[derive(Debug, Clone)]
pub struct SeparableFunctions {
    n: usize,
    next: u64,
    end: u64,
}

impl SeparableFunctions {
    fn build(&self, m: u64) -> BooleanFunction {
        let n = self.n;
        let base = (m >> (n - 1)) & 0b11;
        let mut table = Vec::with_capacity(1 << n);
        table.push(base & 0b10 != 0);
        table.push(base & 0b01 != 0);
        for step in 1..n {
            let free = (m >> (n - 1 - step)) & 1 == 1;
            let len = table.len();
            let pivot = table[len - 1];
            for j in 0..len {
                let mirrored = table[len - 1 - j];
                table.push(mirrored ^ pivot ^ free);
            }
        }
        BooleanFunction::new(table).unwrap_or_else(|_| unreachable!("table length is 2^n"))
    }
}

impl Iterator for SeparableFunctions {
    type Item = BooleanFunction;

    fn next(&mut self) -> Option<BooleanFunction> {
        if self.next >= self.end {
            return None;
        }
        let f = self.build(self.next);
        self.next += 1;
        Some(f)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for SeparableFunctions {}

/// The `2^{n+1}` functions whose phase-oracle state is fully separable.
pub fn enumerate_separable_functions(n: usize) -> Result<SeparableFunctions, CensusError> {
    check_arity(n, 1, MAX_ENUMERATION_ARITY, "enumeration")?;
    Ok(SeparableFunctions {
        n,
        next: 0,
        end: 1u64 << (n + 1),
    })
}

/// Partial counts from scanning a range of truth-table indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusTally {
    pub scanned: u64,
    pub valid: u64,
    pub separable: u64,
    /// Table indices (see [`BooleanFunction::from_table_index`]) of the
    /// separable valid functions, ascending within each chunk.
    pub separable_tables: Vec<u64>,
}

impl CensusTally {
    /// Combines two tallies over disjoint ranges. Merging chunks in range
    /// order keeps `separable_tables` sorted.
    pub fn merge(mut self, other: CensusTally) -> CensusTally {
        self.scanned += other.scanned;
        self.valid += other.valid;
        self.separable += other.separable;
        self.separable_tables.extend(other.separable_tables);
        self
    }
}

/// Number of truth tables of arity `n`, `2^{2^n}`.
pub fn table_count(n: usize) -> Result<u64, CensusError> {
    check_arity(n, 1, MAX_BRUTE_FORCE_ARITY, "brute-force census")?;
    Ok(1u64 << (1u32 << n))
}

/// Classifies every table index in `range` and factors the oracle state of
/// each valid one.
pub fn scan_tables(n: usize, range: Range<u64>) -> Result<CensusTally, CensusError> {
    let total = table_count(n)?;
    if range.start > range.end || range.end > total {
        return Err(CensusError::BadRange {
            n,
            start: range.start,
            end: range.end,
        });
    }
    let mut tally = CensusTally::default();
    for index in range {
        tally.scanned += 1;
        let f = BooleanFunction::from_table_index(n, index);
        if !classify(&f).kind.is_valid() {
            continue;
        }
        tally.valid += 1;
        let state = f.phase_state().map_err(SeparabilityError::from)?;
        if factor_product_state(&state)?.is_product() {
            tally.separable += 1;
            tally.separable_tables.push(index);
        }
    }
    Ok(tally)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMethod {
    Formula,
    BruteForce,
}

impl CensusMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CensusMethod::Formula => "formula",
            CensusMethod::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    /// `a_n`: valid functions with a separable oracle state.
    pub separable_count: BigUint,
    /// `b_n`: valid functions.
    pub valid_count: BigUint,
    pub fraction: Ratio<BigUint>,
    pub method: CensusMethod,
    pub separable_set: Option<Vec<BooleanFunction>>,
}

impl CensusReport {
    /// Closed-form counts, optionally listing the recursive family.
    pub fn from_formulas(n: usize, list: bool) -> Result<Self, CensusError> {
        let separable_set = if list {
            Some(enumerate_separable_functions(n)?.collect())
        } else {
            None
        };
        Ok(CensusReport {
            n,
            separable_count: count_separable(n)?,
            valid_count: count_valid(n)?,
            fraction: separable_fraction(n)?,
            method: CensusMethod::Formula,
            separable_set,
        })
    }

    /// Report from a tally covering every table of arity `n`.
    pub fn from_tally(n: usize, tally: CensusTally) -> Result<Self, CensusError> {
        let total = table_count(n)?;
        if tally.scanned != total {
            return Err(CensusError::BadRange {
                n,
                start: 0,
                end: tally.scanned,
            });
        }
        let a = BigUint::from(tally.separable);
        let b = BigUint::from(tally.valid);
        let fraction = if b.is_zero() {
            Ratio::from_integer(BigUint::zero())
        } else {
            Ratio::new(a.clone(), b.clone())
        };
        Ok(CensusReport {
            n,
            separable_count: a,
            valid_count: b,
            fraction,
            method: CensusMethod::BruteForce,
            separable_set: Some(
                tally
                    .separable_tables
                    .into_iter()
                    .map(|i| BooleanFunction::from_table_index(n, i))
                    .collect(),
            ),
        })
    }
}

/// Exhaustive single-threaded census over all `2^{2^n}` tables, `n <= 4`.
pub fn brute_force_census(n: usize) -> Result<CensusReport, CensusError> {
    let tally = scan_tables(n, 0..table_count(n)?)?;
    CensusReport::from_tally(n, tally)
}

/// Valid function whose oracle state has no separable qubit, `n >= 3`:
/// `f(a) = 0` for `a ∈ {0, …, 2^{n-1} - 2} ∪ {2^n - 2}`, `1` elsewhere.
pub fn proposition_witness(n: usize) -> Result<BooleanFunction, CensusError> {
    check_arity(n, 3, crate::oracle::MAX_ARITY, "witness construction")?;
    let half = 1usize << (n - 1);
    let last_zero = (1usize << n) - 2;
    Ok(BooleanFunction::from_fn(n, |a| {
        !(a + 1 < half || a == last_zero)
    }))
}

/// The inline n = 3 example `(0,0,0,1,1,1,1,0)`.
pub fn entangled_example_n3() -> BooleanFunction {
    crate::oracle::parse_truth_table(ENTANGLED_EXAMPLE_N3, None)
        .unwrap_or_else(|_| unreachable!("constant table parses"))
}
