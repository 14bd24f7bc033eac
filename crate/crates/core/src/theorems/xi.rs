//! The tower bound `Ξ(r) = r^(r^⌈log₂ r⌉ + r·⌈log₂ r⌉)`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default guard on the bit length of `Ξ(r)`.
pub const DEFAULT_MAX_BITS: u64 = 1 << 24;

/// Smallest `l` with `2^l ≥ r` (`r ≥ 1`).
pub fn ceil_log2(r: &BigUint) -> u64 {
    assert!(!r.is_zero(), "log of zero");
    let bits = r.bits();
    // r is a power of two iff it has a single set bit
    if r.count_ones() == 1 {
        bits - 1
    } else {
        bits
    }
}

/// The exponent `r^⌈log₂ r⌉ + r·⌈log₂ r⌉`.
pub fn xi_exponent(r: &BigUint) -> Result<BigUint> {
    let l = ceil_log2(r);
    let l32 = u32::try_from(l).map_err(|_| Error::TooLarge("log2 r exceeds u32".into()))?;
    if r.bits().saturating_mul(l) > DEFAULT_MAX_BITS {
        return Err(Error::TooLarge(format!("exponent of Xi({r}) has more than {DEFAULT_MAX_BITS} bits")));
    }
    Ok(r.pow(l32) + r * BigUint::from(l))
}

/// Lower bound on `log₂ Ξ(r)`: `exponent · ⌊log₂ r⌋`, or `None` when the
/// exponent itself is unmanageably large.
pub fn xi_log2_floor(r: &BigUint) -> Option<BigUint> {
    let e = xi_exponent(r).ok()?;
    Some(e * BigUint::from(r.bits() - 1))
}

/// Exact `Ξ(r)` for `r ≥ 2`, refusing results longer than `max_bits` bits.
pub fn xi_bounded(r: &BigUint, max_bits: u64) -> Result<BigUint> {
    if *r < BigUint::from(2u32) {
        return Err(Error::input("Xi is defined for r >= 2"));
    }
    let e = xi_exponent(r)?;
    // bit length of r^e is at most e * bits(r)
    let too_big = || Error::TooLarge(format!("Xi({r}) would exceed {max_bits} bits"));
    let e64 = e.to_u64().ok_or_else(too_big)?;
    if e64.checked_mul(r.bits()).is_none_or(|b| b > max_bits) {
        return Err(too_big());
    }
    let e32 = u32::try_from(e64).map_err(|_| too_big())?;
    Ok(if r.is_one() { BigUint::one() } else { r.pow(e32) })
}

pub fn xi(r: u64) -> Result<BigUint> {
    xi_bounded(&BigUint::from(r), DEFAULT_MAX_BITS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_values() {
        assert_eq!(xi(2).unwrap(), BigUint::from(16u32));
        assert_eq!(xi(3).unwrap(), BigUint::from(14_348_907u64));
        assert_eq!(xi(4).unwrap(), BigUint::from(281_474_976_710_656u64));
        // r = 5: exponent 5^3 + 15 = 140
        assert_eq!(xi(5).unwrap(), BigUint::from(5u32).pow(140));
    }

    #[test]
    fn ceil_log2_by_powers() {
        let c = |r: u64| ceil_log2(&BigUint::from(r));
        assert_eq!([c(1), c(2), c(3), c(4), c(5), c(8), c(9)], [0, 1, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn guard_and_domain() {
        assert!(xi(1).is_err());
        assert!(xi(0).is_err());
        assert!(matches!(xi_bounded(&BigUint::from(16u32), 1000), Err(Error::TooLarge(_))));
        assert!(matches!(xi(1 << 20), Err(Error::TooLarge(_))));
    }

    #[test]
    fn strictly_increasing() {
        let vals: Vec<BigUint> = (2..=12).map(|r| xi(r).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]));
    }
}
