use std::cell::Cell;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Mode, Scalar};

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

fn tick() {
    OPS.with(|c| c.set(c.get() + 1));
}

/// Number of field operations performed by [`Counted`] values on this thread.
pub fn scalar_op_count() -> u64 {
    OPS.with(Cell::get)
}

pub fn reset_op_count() {
    OPS.with(|c| c.set(0));
}

/// Runs `f` and returns its result with the number of counted operations it
/// performed on the current thread.
pub fn count_ops<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = scalar_op_count();
    let out = f();
    (out, scalar_op_count() - before)
}

/// Instrumented scalar: every add, sub, mul, div and neg bumps a
/// thread-local counter. Constructing constants is free.
#[derive(Clone, Debug, PartialEq)]
pub struct Counted<S>(pub S);

impl<S> Counted<S> {
    pub fn into_inner(self) -> S {
        self.0
    }
}

impl<S: Scalar> Zero for Counted<S> {
    fn zero() -> Self {
        Counted(S::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<S: Scalar> One for Counted<S> {
    fn one() -> Self {
        Counted(S::one())
    }
}

macro_rules! counted_binop {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for Counted<S> {
            type Output = Self;

            fn $method(self, rhs: Self) -> Self {
                tick();
                Counted(self.0.$method(rhs.0))
            }
        }
    };
}

counted_binop!(Add, add);
counted_binop!(Sub, sub);
counted_binop!(Mul, mul);
counted_binop!(Div, div);

impl<S: Scalar> Neg for Counted<S> {
    type Output = Self;

    fn neg(self) -> Self {
        tick();
        Counted(-self.0)
    }
}

impl<S: Scalar> Scalar for Counted<S> {
    const MODE: Mode = S::MODE;

    fn from_integer(value: i64) -> Self {
        Counted(S::from_integer(value))
    }
}
