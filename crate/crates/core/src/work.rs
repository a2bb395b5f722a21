//! Per-thread work counters for the bench harness. Each benchmark case runs
//! on a single thread, so thread-locals give clean per-case numbers.

use num_bigint::BigUint;
use std::cell::{Cell, RefCell};

thread_local! {
    static DERIV_GENS: Cell<u64> = const { Cell::new(0) };
    static ATW_EXPONENTS: RefCell<BigUint> = RefCell::new(BigUint::from(0u32));
}

/// Count derivative-ideal generator polynomials produced.
pub fn count_deriv_gens(n: u64) {
    DERIV_GENS.with(|c| c.set(c.get() + n));
}

/// Accumulate coefficient-ideal exponents formed by the baseline.
pub fn count_atw_exponent(e: &BigUint) {
    ATW_EXPONENTS.with(|c| *c.borrow_mut() += e);
}

pub fn reset() {
    DERIV_GENS.with(|c| c.set(0));
    ATW_EXPONENTS.with(|c| *c.borrow_mut() = BigUint::from(0u32));
}

pub fn deriv_gens() -> u64 {
    DERIV_GENS.with(|c| c.get())
}

pub fn atw_exponents() -> BigUint {
    ATW_EXPONENTS.with(|c| c.borrow().clone())
}
