//! Compositions of `n` into a fixed number of positive parts.
//!
//! A composition of `n` into `m` parts is an ordered tuple of `m` positive
//! integers summing to `n`; there are `C(n-1, m-1)` of them. The nested
//! strictly-decreasing index chains in the explicit Bell-polynomial formula
//! are exactly these tuples, read through the change of variables
//! `c_i = alpha_{i-1} - alpha_i`, so both that formula and the
//! divisor-product expansion of the coloured partition function walk the
//! same enumeration. Keeping it in one place keeps the one exponential-cost
//! piece of machinery auditable.

/// Calls `f` once per composition of `total` into `parts` positive parts,
/// in lexicographic order. The slice is a reused buffer; callers must copy
/// it if they keep it. `(0, 0)` yields the single empty composition.
pub fn for_each_composition<F: FnMut(&[u64])>(total: u64, parts: u64, mut f: F) {
    fn walk<F: FnMut(&[u64])>(remaining: u64, parts_left: u64, buf: &mut Vec<u64>, f: &mut F) {
        if parts_left == 0 {
            if remaining == 0 {
                f(buf);
            }
            return;
        }
        if parts_left == 1 {
            if remaining >= 1 {
                buf.push(remaining);
                f(buf);
                buf.pop();
            }
            return;
        }
        // keep at least one unit for each remaining slot
        let highest = remaining.saturating_sub(parts_left - 1);
        for value in 1..=highest {
            buf.push(value);
            walk(remaining - value, parts_left - 1, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(parts as usize);
    walk(total, parts, &mut buf, &mut f);
}

/// Number of compositions of `total` into `parts` positive parts.
pub fn composition_count(total: u64, parts: u64) -> u64 {
    if parts == 0 {
        return u64::from(total == 0);
    }
    if total < parts {
        return 0;
    }
    // C(total-1, parts-1) always fits u64 at the cost guards in this crate
    let (n, k) = (total - 1, parts - 1);
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}
