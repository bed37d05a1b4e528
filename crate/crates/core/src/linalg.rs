//! Exact rank computations.
//!
//! Two independent kernels live here:
//!
//! * sparse column reduction ([`ColumnArithmetic`], [`ColumnReducer`]) used by the
//!   homology engine, with arithmetic over GF(2), GF(p), or fraction-free integer
//!   elimination (rank over ℚ) generic over the integer scalar;
//! * dense Gaussian elimination ([`dense_rank`]) generic over any exact field scalar,
//!   used by the Koszul oracle.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};

/// Integer arithmetic overflowed; retry with a wider scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// A sparse column: `(row, coefficient)` pairs with strictly increasing rows.
pub type Column<E> = Vec<(u32, E)>;

pub trait ColumnArithmetic {
    type Entry: Clone;

    /// The coefficient `±1`.
    fn unit(&self, negative: bool) -> Self::Entry;

    /// Replaces `target` by a combination of `target` and `pivot` whose entry at their
    /// shared lowest row vanishes. Both columns end in the same row.
    fn eliminate(
        &self,
        target: &mut Column<Self::Entry>,
        pivot: &Column<Self::Entry>,
    ) -> Result<(), Overflow>;
}

/// Merges two sorted columns. `both` returns `None` when the combined entry is zero.
fn merge<E: Clone>(
    target: &[(u32, E)],
    pivot: &[(u32, E)],
    mut both: impl FnMut(&E, &E) -> Result<Option<E>, Overflow>,
    mut only_target: impl FnMut(&E) -> Result<E, Overflow>,
    mut only_pivot: impl FnMut(&E) -> Result<E, Overflow>,
) -> Result<Column<E>, Overflow> {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        if j == pivot.len() || (i < target.len() && target[i].0 < pivot[j].0) {
            out.push((target[i].0, only_target(&target[i].1)?));
            i += 1;
        } else if i == target.len() || pivot[j].0 < target[i].0 {
            out.push((pivot[j].0, only_pivot(&pivot[j].1)?));
            j += 1;
        } else {
            if let Some(e) = both(&target[i].1, &pivot[j].1)? {
                out.push((target[i].0, e));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Characteristic two: coefficients carry no information.
#[derive(Debug, Clone, Copy, Default)]
pub struct Gf2Columns;

impl ColumnArithmetic for Gf2Columns {
    type Entry = ();

    fn unit(&self, _negative: bool) {}

    fn eliminate(&self, target: &mut Column<()>, pivot: &Column<()>) -> Result<(), Overflow> {
        *target = merge(target, pivot, |_, _| Ok(None), |_| Ok(()), |_| Ok(()))?;
        Ok(())
    }
}

/// `GF(p)` for an odd prime `p < 2^32`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeColumns {
    p: u64,
}

impl PrimeColumns {
    pub fn new(p: u32) -> Self {
        PrimeColumns { p: p as u64 }
    }

    fn inverse(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl ColumnArithmetic for PrimeColumns {
    type Entry = u64;

    fn unit(&self, negative: bool) -> u64 {
        if negative {
            self.p - 1
        } else {
            1
        }
    }

    fn eliminate(&self, target: &mut Column<u64>, pivot: &Column<u64>) -> Result<(), Overflow> {
        let p = self.p;
        let a = target.last().expect("nonzero column").1;
        let b = pivot.last().expect("nonzero column").1;
        let factor = a * self.inverse(b) % p;
        *target = merge(
            target,
            pivot,
            |t, q| {
                let v = (t + p - factor * q % p) % p;
                Ok((v != 0).then_some(v))
            },
            |t| Ok(*t),
            |q| Ok((p - factor * q % p) % p),
        )?;
        Ok(())
    }
}

/// Integer scalars usable for fraction-free elimination.
pub trait ExactInteger:
    Clone + fmt::Debug + Integer + Signed + CheckedMul + CheckedSub + Send + Sync
{
}

impl<T> ExactInteger for T where
    T: Clone + fmt::Debug + Integer + Signed + CheckedMul + CheckedSub + Send + Sync
{
}

/// Rank over ℚ by fraction-free elimination in `T`: `target ← b·target − a·pivot`,
/// then the column is divided by the gcd of its entries.
#[derive(Debug)]
pub struct FractionFree<T>(PhantomData<T>);

impl<T> Default for FractionFree<T> {
    fn default() -> Self {
        FractionFree(PhantomData)
    }
}

impl<T> Clone for FractionFree<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for FractionFree<T> {}

impl<T: ExactInteger> ColumnArithmetic for FractionFree<T> {
    type Entry = T;

    fn unit(&self, negative: bool) -> T {
        if negative {
            -T::one()
        } else {
            T::one()
        }
    }

    fn eliminate(&self, target: &mut Column<T>, pivot: &Column<T>) -> Result<(), Overflow> {
        let a = target.last().expect("nonzero column").1.clone();
        let b = pivot.last().expect("nonzero column").1.clone();
        let g = a.gcd(&b);
        let (a, b) = (a / g.clone(), b / g);
        let scale = |x: &T, k: &T| x.checked_mul(k).ok_or(Overflow);
        let mut merged = merge(
            target,
            pivot,
            |t, q| {
                let v = scale(t, &b)?.checked_sub(&scale(q, &a)?).ok_or(Overflow)?;
                Ok((!v.is_zero()).then_some(v))
            },
            |t| scale(t, &b),
            |q| Ok(-scale(q, &a)?),
        )?;
        let content = merged.iter().fold(T::zero(), |acc, (_, v)| acc.gcd(v));
        if !content.is_zero() && !content.is_one() {
            for (_, v) in merged.iter_mut() {
                *v = v.clone() / content.clone();
            }
        }
        *target = merged;
        Ok(())
    }
}

/// Rank over ℚ with machine integers; overflow falls back to [`WideRationals`].
pub type MachineRationals = FractionFree<i64>;
/// Rank over ℚ with arbitrary-precision integers.
pub type WideRationals = FractionFree<num_bigint::BigInt>;

/// Left-to-right column reduction with the pivot table kept between calls, so the
/// caller can feed columns of one boundary matrix in any order.
pub struct ColumnReducer<'a, A: ColumnArithmetic> {
    arith: &'a A,
    pivots: Vec<Option<Column<A::Entry>>>,
    rank: usize,
}

impl<'a, A: ColumnArithmetic> ColumnReducer<'a, A> {
    pub fn new(arith: &'a A, rows: usize) -> Self {
        ColumnReducer {
            arith,
            pivots: vec![None; rows],
            rank: 0,
        }
    }

    /// Reduces one column against the columns seen so far. Returns its pivot row
    /// when it is independent of them.
    pub fn push(&mut self, mut col: Column<A::Entry>) -> Result<Option<u32>, Overflow> {
        while let Some(&(low, _)) = col.last() {
            match &self.pivots[low as usize] {
                Some(pivot) => self.arith.eliminate(&mut col, pivot)?,
                None => {
                    self.pivots[low as usize] = Some(col);
                    self.rank += 1;
                    return Ok(Some(low));
                }
            }
        }
        Ok(None)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Exact field scalars for dense elimination.
pub trait ExactField:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> ExactField for T where
    T: Clone
        + fmt::Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Div<Output = Self>
{
}

/// Rank of a dense matrix given as rows, by Gaussian elimination with division.
pub fn dense_rank<F: ExactField>(mut rows: Vec<Vec<F>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = F::one() / rows[rank][col].clone();
        for x in &mut rows[rank][col..] {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Element of the prime field `GF(P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {P})", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u64 + o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp((self.0 as u64 * o.0 as u64 % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        assert!(o.0 != 0, "division by zero in GF({P})");
        self * Fp(pow_mod(o.0 as u64, P as u64 - 2, P as u64) as u32)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}
