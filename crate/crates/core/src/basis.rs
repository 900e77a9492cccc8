//! Basis blade bookkeeping.
//!
//! Blades are stored in binary-subset order: bit `i` of the index is set when
//! `e_i` is a factor, and factors are kept in ascending order (`e02`, never
//! `e20`). The conventional names used at the I/O boundary (`e20`, `e31`,
//! `e320`, ...) are aliases that carry a permutation sign against that
//! canonical storage.

use crate::space::Space;

/// Grade of the canonical basis blade with the given index.
#[inline]
pub const fn grade_of(index: usize) -> u32 {
    index.count_ones()
}

/// Sign picked up when multiplying canonical blades `a * b` under a metric
/// where every basis vector squares to `+1`.
pub const fn product_sign(a: usize, b: usize) -> f64 {
    let mut swaps = 0u32;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 1 {
        -1.0
    } else {
        1.0
    }
}

const fn build_sign_table() -> [[f64; 16]; 16] {
    let mut table = [[0.0; 16]; 16];
    let mut i = 0;
    while i < 16 {
        let mut j = 0;
        while j < 16 {
            table[i][j] = product_sign(i, j);
            j += 1;
        }
        i += 1;
    }
    table
}

/// `SIGNS[a][b]` is the sign of the canonical blade product `e_a * e_b`.
pub(crate) static SIGNS: [[f64; 16]; 16] = build_sign_table();

/// Reversion sign `(-1)^(k(k-1)/2)` for a grade-`k` blade.
#[inline]
pub const fn reverse_sign(grade: u32) -> f64 {
    if (grade * grade.saturating_sub(1) / 2) & 1 == 1 {
        -1.0
    } else {
        1.0
    }
}

/// A named basis blade in the conventional index order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisName {
    pub name: &'static str,
    /// Canonical storage index.
    pub index: usize,
    /// `named blade = sign * canonical blade`.
    pub sign: f64,
}

impl BasisName {
    /// Builds the alias for the ordered product of the listed basis vectors.
    const fn ordered(name: &'static str, factors: &[usize]) -> BasisName {
        let mut index = 0usize;
        let mut sign = 1.0;
        let mut k = 0;
        while k < factors.len() {
            let bit = 1usize << factors[k];
            sign *= product_sign(index, bit);
            index ^= bit;
            k += 1;
        }
        BasisName { name, index, sign }
    }
}

const EL1_NAMES: [BasisName; 4] = [
    BasisName::ordered("scalar", &[]),
    BasisName::ordered("e0", &[0]),
    BasisName::ordered("e1", &[1]),
    BasisName::ordered("e01", &[0, 1]),
];

const EL2_NAMES: [BasisName; 8] = [
    BasisName::ordered("scalar", &[]),
    BasisName::ordered("e0", &[0]),
    BasisName::ordered("e1", &[1]),
    BasisName::ordered("e2", &[2]),
    BasisName::ordered("e12", &[1, 2]),
    BasisName::ordered("e20", &[2, 0]),
    BasisName::ordered("e01", &[0, 1]),
    BasisName::ordered("e012", &[0, 1, 2]),
];

const EL3_NAMES: [BasisName; 16] = [
    BasisName::ordered("scalar", &[]),
    BasisName::ordered("e0", &[0]),
    BasisName::ordered("e1", &[1]),
    BasisName::ordered("e2", &[2]),
    BasisName::ordered("e3", &[3]),
    BasisName::ordered("e10", &[1, 0]),
    BasisName::ordered("e20", &[2, 0]),
    BasisName::ordered("e30", &[3, 0]),
    BasisName::ordered("e23", &[2, 3]),
    BasisName::ordered("e31", &[3, 1]),
    BasisName::ordered("e12", &[1, 2]),
    BasisName::ordered("e123", &[1, 2, 3]),
    BasisName::ordered("e320", &[3, 2, 0]),
    BasisName::ordered("e130", &[1, 3, 0]),
    BasisName::ordered("e210", &[2, 1, 0]),
    BasisName::ordered("e0123", &[0, 1, 2, 3]),
];

/// Conventional names for every basis blade of `space`, grouped by grade.
pub fn names(space: Space) -> &'static [BasisName] {
    match space {
        Space::El1 => &EL1_NAMES,
        Space::El2 => &EL2_NAMES,
        Space::El3 => &EL3_NAMES,
    }
}

/// Looks up a conventional name.
pub fn lookup(space: Space, name: &str) -> Option<BasisName> {
    names(space).iter().copied().find(|b| b.name == name)
}

/// Conventional alias of a canonical index.
pub fn alias_of(space: Space, index: usize) -> Option<BasisName> {
    names(space).iter().copied().find(|b| b.index == index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_canonical_blade_has_one_alias() {
        for space in Space::ALL {
            let table = names(space);
            assert_eq!(table.len(), space.blade_count());
            for index in 0..space.blade_count() {
                assert_eq!(table.iter().filter(|b| b.index == index).count(), 1);
            }
        }
    }

    #[test]
    fn aliases_carry_permutation_signs() {
        let e20 = lookup(Space::El3, "e20").unwrap();
        assert_eq!((e20.index, e20.sign), (0b0101, -1.0));
        let e31 = lookup(Space::El3, "e31").unwrap();
        assert_eq!((e31.index, e31.sign), (0b1010, -1.0));
        let e320 = lookup(Space::El3, "e320").unwrap();
        assert_eq!((e320.index, e320.sign), (0b1101, -1.0));
        let e130 = lookup(Space::El3, "e130").unwrap();
        assert_eq!((e130.index, e130.sign), (0b1011, 1.0));
        let e210 = lookup(Space::El3, "e210").unwrap();
        assert_eq!((e210.index, e210.sign), (0b0111, -1.0));
        let e20_plane = lookup(Space::El2, "e20").unwrap();
        assert_eq!((e20_plane.index, e20_plane.sign), (0b101, -1.0));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn sign_table_matches_brute_force_permutation() {
        // Oracle: expand both blades into factor lists and bubble sort,
        // cancelling equal neighbours (each squares to +1).
        fn brute(a: usize, b: usize) -> f64 {
            let mut factors: std::vec::Vec<usize> = (0..4).filter(|k| a >> k & 1 == 1).collect();
            factors.extend((0..4).filter(|k| b >> k & 1 == 1));
            let mut sign = 1.0;
            loop {
                let mut changed = false;
                let mut i = 0;
                while i + 1 < factors.len() {
                    if factors[i] > factors[i + 1] {
                        factors.swap(i, i + 1);
                        sign = -sign;
                        changed = true;
                    } else if factors[i] == factors[i + 1] {
                        factors.drain(i..i + 2);
                        changed = true;
                        continue;
                    }
                    i += 1;
                }
                if !changed {
                    return sign;
                }
            }
        }
        for a in 0..16 {
            for b in 0..16 {
                assert_eq!(SIGNS[a][b], brute(a, b), "e{a:04b} * e{b:04b}");
            }
        }
    }

    #[test]
    fn reverse_signs_by_grade() {
        let expected = [1.0, 1.0, -1.0, -1.0, 1.0];
        for (k, s) in expected.iter().enumerate() {
            assert_eq!(reverse_sign(k as u32), *s);
        }
    }
}
