//! Exact rank of sparse integer matrices over `Q` or `F_p`.
//!
//! Elimination is fraction-free and generic over the coefficient domain: a row
//! is reduced against the pivot row sharing its leading column by
//! `row ← a·row − b·pivot`, then normalized (made monic over `F_p`, divided
//! by its content over `Z`). The rank over the fraction field is the number
//! of rows left nonzero.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, FromPrimitive, Signed};

use crate::field::FieldSpec;

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Coefficient domain an elimination runs in.
pub trait Domain {
    type Elem: Clone + Debug;

    fn embed(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `a·x − b·y`, or `None` when the representation overflows.
    fn combine(&self, a: &Self::Elem, x: &Self::Elem, b: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem>;
    /// Rescales a nonzero row by a unit of the fraction field.
    fn normalize(&self, row: &mut SparseRow<Self::Elem>);
}

/// `Z` represented by any signed integer type; rank is taken over `Q`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegerRing<T>(std::marker::PhantomData<T>);

impl<T> IntegerRing<T> {
    pub fn new() -> Self {
        IntegerRing(std::marker::PhantomData)
    }
}

/// Machine integers with overflow detection.
pub type MachineIntegers = IntegerRing<i64>;
/// Arbitrary-precision integers.
pub type BigIntegers = IntegerRing<BigInt>;

impl<T> Domain for IntegerRing<T>
where
    T: Clone + Debug + Integer + Signed + CheckedMul + CheckedSub + FromPrimitive,
{
    type Elem = T;

    fn embed(&self, v: i64) -> T {
        T::from_i64(v).expect("every integer type holds an i64")
    }

    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }

    fn combine(&self, a: &T, x: &T, b: &T, y: &T) -> Option<T> {
        a.checked_mul(x)?.checked_sub(&b.checked_mul(y)?)
    }

    fn normalize(&self, row: &mut SparseRow<T>) {
        let mut g = T::zero();
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if row.first().is_some_and(|(_, v)| v.is_negative()) {
            g = -g;
        }
        if !g.is_one() && !g.is_zero() {
            for (_, v) in row.iter_mut() {
                *v = v.div_floor(&g);
            }
        }
    }
}

/// `F_p` for a prime `p < 2^31`, elements stored reduced in `0..p`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 31).contains(&p), "prime out of range");
        PrimeField { p }
    }

    pub fn inverse(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Domain for PrimeField {
    type Elem = u64;

    fn embed(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn combine(&self, a: &u64, x: &u64, b: &u64, y: &u64) -> Option<u64> {
        let p = self.p;
        Some((a * x % p + p - b * y % p) % p)
    }

    fn normalize(&self, row: &mut SparseRow<u64>) {
        let Some(&(_, lead)) = row.first() else { return };
        if lead != 1 {
            let inv = self.inverse(lead);
            for (_, v) in row.iter_mut() {
                *v = *v * inv % self.p;
            }
        }
    }
}

/// `a·target − b·pivot` for rows sharing their leading column.
fn reduce<D: Domain>(d: &D, target: &SparseRow<D::Elem>, pivot: &SparseRow<D::Elem>) -> Option<SparseRow<D::Elem>> {
    let a = &pivot[0].1;
    let b = &target[0].1;
    let zero = d.embed(0);
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < target.len() || j < pivot.len() {
        let ct = target.get(i).map_or(usize::MAX, |e| e.0);
        let cp = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ct < cp {
            i += 1;
            (ct, d.combine(a, &target[i - 1].1, b, &zero)?)
        } else if cp < ct {
            j += 1;
            (cp, d.combine(a, &zero, b, &pivot[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ct, d.combine(a, &target[i - 1].1, b, &pivot[j - 1].1)?)
        };
        if !d.is_zero(&v) {
            out.push((col, v));
        }
    }
    Some(out)
}

/// Rank over the fraction field of `d`, or `None` if `d` overflowed.
pub fn rank_in<D: Domain>(d: &D, rows: &[SparseRow<i64>]) -> Option<usize> {
    let mut pivots: HashMap<usize, SparseRow<D::Elem>> = HashMap::new();
    for row in rows {
        let mut r: SparseRow<D::Elem> =
            row.iter().map(|&(c, v)| (c, d.embed(v))).filter(|(_, v)| !d.is_zero(v)).collect();
        d.normalize(&mut r);
        while let Some(&(lead, _)) = r.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    r = reduce(d, &r, p)?;
                    d.normalize(&mut r);
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Exact rank of an integer matrix over the given field.
pub fn rank(rows: &[SparseRow<i64>], field: FieldSpec) -> usize {
    match field.characteristic() {
        0 => rank_in(&MachineIntegers::new(), rows)
            .or_else(|| rank_in(&BigIntegers::new(), rows))
            .expect("arbitrary-precision elimination cannot overflow"),
        p => rank_in(&PrimeField::new(p), rows).expect("modular elimination cannot overflow"),
    }
}
