//! Exact coefficient rings: the group ring ℤ[P], its q-extension, truncated
//! multivariate power series, rational series with `(1 - x_j)` denominators,
//! and Laurent polynomials in `z` over the series ring.

mod group_ring;
mod laurent;
mod qext;
mod rational;
mod series;
mod weight;

use std::collections::BTreeMap;

pub use group_ring::GroupRingElement;
pub use laurent::ZLaurentElement;
pub use qext::QExtElement;
pub use rational::RationalSeries;
pub use series::{NovikovSeries, SeriesExp, Truncation};
pub use weight::Weight;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Common interface of the exact ring types.
pub trait RingElement: Clone + PartialEq + std::fmt::Debug + Sized {
    fn rank(&self) -> usize;
    fn is_zero(&self) -> bool;
    fn checked_add(&self, other: &Self) -> Result<Self>;
    fn checked_sub(&self, other: &Self) -> Result<Self>;
    fn checked_mul(&self, other: &Self) -> Result<Self>;
    fn negated(&self) -> Self;
}

/// Binary arithmetic on two ring elements of the same type; rank or truncation
/// mismatches are reported as configuration errors.
pub fn ring_arith<R: RingElement>(a: &R, b: &R, op: ArithOp) -> Result<R> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

/// Coefficients stored in sparse term maps.
pub(crate) trait Coeff: Clone {
    fn coeff_is_zero(&self) -> bool;
    fn coeff_add_assign(&mut self, other: &Self);
}

impl Coeff for num_bigint::BigInt {
    fn coeff_is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn coeff_add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

/// Adds `c` to the coefficient of `key`, dropping the entry if it cancels.
pub(crate) fn add_term<K: Ord, C: Coeff>(map: &mut BTreeMap<K, C>, key: K, c: C) {
    if c.coeff_is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            o.get_mut().coeff_add_assign(&c);
            if o.get().coeff_is_zero() {
                o.remove();
            }
        }
    }
}

/// Implements `+`, `-`, `*` (owned and borrowed) and unary `-` in terms of the
/// checked methods of [`RingElement`]; mismatched operands panic.
macro_rules! forward_ring_ops {
    ($t:ty) => {
        impl std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $crate::rings::RingElement::checked_add(self, rhs).expect("ring operand mismatch")
            }
        }
        impl std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $crate::rings::RingElement::checked_sub(self, rhs).expect("ring operand mismatch")
            }
        }
        impl std::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $crate::rings::RingElement::checked_mul(self, rhs).expect("ring operand mismatch")
            }
        }
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::rings::RingElement::negated(self)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::rings::RingElement::negated(&self)
            }
        }
    };
}
pub(crate) use forward_ring_ops;

fn rank_mismatch(what: &str, a: usize, b: usize) -> crate::error::Error {
    crate::error::Error::Config(format!("{what} rank mismatch: {a} vs {b}"))
}

pub(crate) fn check_rank(what: &str, a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(rank_mismatch(what, a, b))
    }
}
