use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, One};

use super::state::WedgeState;
use crate::error::{Error, Result};
use crate::series::{factorial, BetaScalar, BetaVar, Rational, SymSeries, TruncationProfile};
use crate::symfun::partitions_up_to;

/// Finite Laurent row `sum_j coeffs[j] z^{low + j}` with p-free series
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentRow {
    pub low: i32,
    pub coeffs: Vec<SymSeries>,
}

impl LaurentRow {
    /// `z^k`.
    pub fn power(k: i32, profile: TruncationProfile) -> Self {
        LaurentRow {
            low: k,
            coeffs: vec![SymSeries::one(profile)],
        }
    }

    pub fn new(low: i32, coeffs: Vec<SymSeries>) -> Self {
        LaurentRow { low, coeffs }
    }

    /// Coefficient of `z^e`.
    pub fn at(&self, e: i32, profile: TruncationProfile) -> SymSeries {
        let j = e - self.low;
        if j < 0 || j as usize >= self.coeffs.len() {
            SymSeries::zero(profile)
        } else {
            self.coeffs[j as usize].clone()
        }
    }

    /// True if the row is `z^k (1 + higher)`.
    pub fn is_normalized_at(&self, k: i32) -> bool {
        self.low == k && self.coeffs.first().is_some_and(|c| c.is_one())
    }

    /// Leading exponent ignoring stored zeros.
    pub fn leading(&self) -> Option<i32> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|j| self.low + j as i32)
    }

    pub fn map(&self, f: impl Fn(i32, &SymSeries) -> SymSeries) -> LaurentRow {
        LaurentRow {
            low: self.low,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| f(self.low + j as i32, c))
                .collect(),
        }
    }
}

/// Row rule for `i > head.len()`: `(i, max_exp) -> row i` with enough terms
/// to reach `z^{max_exp}`.
pub type TailRule = Arc<dyn Fn(usize, i32) -> LaurentRow + Send + Sync>;

/// Rows `f_{N-1}, f_{N-2}, ...` of a level-`N` decomposable wedge: explicit
/// head rows, then a tail rule (default: pure powers `z^{N-i}`).
#[derive(Clone)]
pub struct Rows {
    pub level: i32,
    pub profile: TruncationProfile,
    pub head: Vec<LaurentRow>,
    pub tail: Option<TailRule>,
}

impl fmt::Debug for Rows {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rows")
            .field("level", &self.level)
            .field("head", &self.head)
            .field("tail", &self.tail.as_ref().map(|_| "rule"))
            .finish()
    }
}

impl Rows {
    pub fn new(level: i32, profile: TruncationProfile, head: Vec<LaurentRow>) -> Self {
        Rows {
            level,
            profile,
            head,
            tail: None,
        }
    }

    pub fn with_tail(mut self, tail: TailRule) -> Self {
        self.tail = Some(tail);
        self
    }

    /// Row `i` (1-based), carrying terms up to `z^{max_exp}`.
    pub fn row(&self, i: usize, max_exp: i32) -> LaurentRow {
        if i <= self.head.len() {
            return self.head[i - 1].clone();
        }
        match &self.tail {
            Some(rule) => rule(i, max_exp),
            None => LaurentRow::power(self.level - i as i32, self.profile),
        }
    }

    /// Applies `f(i, row)` to every row, head and tail alike.
    pub fn map_rows(&self, f: Arc<dyn Fn(usize, LaurentRow) -> LaurentRow + Send + Sync>) -> Rows {
        let head = self
            .head
            .iter()
            .enumerate()
            .map(|(i, r)| f(i + 1, r.clone()))
            .collect();
        let src = self.clone();
        let tail: TailRule = Arc::new(move |i, max_exp| f(i, src.row(i, max_exp)));
        Rows {
            level: self.level,
            profile: self.profile,
            head,
            tail: Some(tail),
        }
    }
}

/// Determinant of a square matrix of series by Laplace expansion along rows.
pub fn det_series(matrix: &[Vec<SymSeries>], profile: TruncationProfile) -> SymSeries {
    fn rec(
        row: usize,
        mask: u32,
        m: &[Vec<SymSeries>],
        memo: &mut HashMap<u32, SymSeries>,
        profile: TruncationProfile,
    ) -> SymSeries {
        let n = m.len();
        if row == n {
            return SymSeries::one(profile);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = SymSeries::zero(profile);
        let mut sign = 1i64;
        for col in 0..n {
            if mask & (1 << col) != 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let minor = rec(row + 1, mask | (1 << col), m, memo, profile);
                if !minor.is_zero() {
                    let term = entry * &minor;
                    acc = if sign > 0 { &acc + &term } else { &acc - &term };
                }
            }
            sign = -sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    rec(0, 0, matrix, &mut memo, profile)
}

/// Expands `f_{N-1} ^ f_{N-2} ^ ...` in the basis `v_lambda^{[N]}` for
/// `|lambda| <= cutoff`. The coefficient of `v_lambda` is the determinant of
/// the block of rows and columns that can reach the exponents
/// `lambda_j - j + N`; rows past the head must be normalized.
pub fn wedge_from_rows(rows: &Rows, cutoff: u32) -> Result<WedgeState> {
    let level = rows.level;
    let profile = rows.profile;
    let mut irregular = 0usize;
    for (idx, r) in rows.head.iter().enumerate() {
        let i = idx + 1;
        let expected = level - i as i32;
        if !r.is_normalized_at(expected) {
            irregular = irregular.max(i).max((level - r.low).max(0) as usize);
        }
    }
    let mut state = WedgeState::zero(level, cutoff, profile);
    for lambda in partitions_up_to(cutoff) {
        let n = lambda.len().max(irregular);
        if n == 0 {
            state.add(lambda, &SymSeries::one(profile));
            continue;
        }
        let exps: Vec<i32> = (1..=n)
            .map(|j| lambda.part(j) as i32 - j as i32 + level)
            .collect();
        let max_exp = exps[0];
        let mut matrix = Vec::with_capacity(n);
        for i in 1..=n {
            let row = rows.row(i, max_exp);
            if i > rows.head.len() && !row.is_normalized_at(level - i as i32) {
                return Err(Error::NonNormalizedRow {
                    index: i,
                    expected: (level - i as i32) as i64,
                });
            }
            matrix.push(exps.iter().map(|&e| row.at(e, profile)).collect());
        }
        let d = det_series(&matrix, profile);
        state.add(lambda, &d);
    }
    Ok(state)
}

/// Where the grading `q` attached to `z` is recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSlot {
    Q1,
    Q2,
}

/// `c * q^e` as a p-free series.
pub fn graded(c: BetaScalar, slot: QSlot, e: i32, profile: TruncationProfile) -> SymSeries {
    match slot {
        QSlot::Q1 if e >= 0 => SymSeries::scalar(c, e as u32, 0, profile),
        QSlot::Q1 => SymSeries::zero(profile),
        QSlot::Q2 => SymSeries::scalar(c, 0, e, profile),
    }
}

/// `z^k e^{q z}` up to `z^{max_exp}`.
pub fn exp_row(k: i32, max_exp: i32, slot: QSlot, profile: TruncationProfile) -> LaurentRow {
    let order = profile.beta_order;
    let coeffs = (0..=(max_exp - k).max(0))
        .map(|l| {
            let c = Rational::new(BigInt::one(), factorial(l as u32));
            graded(BetaScalar::constant(c, order), slot, l, profile)
        })
        .collect();
    LaurentRow::new(k, coeffs)
}

/// Replacement row for `z^{-k}` in `z^{-k} ^ (z^{-1} e^{qz}) ^ (z^{-2} e^{qz}) ^ ...`:
/// `(-q)^k sum_l q^l z^l / ((l+k)(k-1)! l!)`, terms `l <= cutoff`.
pub fn wedge_reduce_exp_row(k: i32, slot: QSlot, cutoff: u32, profile: TruncationProfile) -> Result<LaurentRow> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("reduction needs k >= 1, got {k}")));
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let coeffs = (0..=cutoff as i32)
        .map(|l| {
            let den = BigInt::from(l + k) * factorial((k - 1) as u32) * factorial(l as u32);
            let c = Rational::new(BigInt::from(sign), den);
            graded(BetaScalar::constant(c, profile.beta_order), slot, k + l, profile)
        })
        .collect();
    Ok(LaurentRow::new(0, coeffs))
}

/// Deforms rows by `f_{k,j} -> exp(v (g(k+j) - g(k))) f_{k,j}` with
/// `g(a) = (a-N)(a-N+1)/2`, where `k` is the nominal leading exponent of
/// each row. The resulting wedge is `exp(v A)` applied to the original.
pub fn cutjoin_deform_rows(rows: &Rows, var: BetaVar) -> Rows {
    let level = rows.level as i64;
    let profile = rows.profile;
    let g = move |a: i64| (a - level) * (a - level + 1) / 2;
    rows.map_rows(Arc::new(move |i, row: LaurentRow| {
        let k = level - i as i64;
        row.map(|e, c| {
            let f = BetaScalar::exp_of(var, g(e as i64) - g(k), profile.beta_order);
            c.scale_beta(&f)
        })
    }))
}
