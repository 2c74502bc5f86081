//! Closed-form expectations for class sizes and orbit structure.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::cubic::LineClass;
use crate::gf::centered_mod3;

/// Odd q for which the external non-Γ orbit formulas were established by computer.
pub const TESTED_ODD: [u32; 13] = [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37];
/// Even q with the same status.
pub const TESTED_EVEN: [u32; 4] = [8, 16, 32, 64];

pub fn in_tested_range(q: u32) -> bool {
    TESTED_ODD.contains(&q) || TESTED_EVEN.contains(&q)
}

/// Expected orbit sizes of a class, ascending, for every class except the
/// external non-Γ lines.
pub fn class_pattern(q: u32, class: LineClass) -> Option<Vec<u64>> {
    use LineClass::*;
    let n = class.expected_size(q)?;
    let odd = q % 2 == 1;
    let q = u64::from(q);
    let g = q * q * q - q;
    Some(match class {
        RealChord | RealAxis | Tangent | ImaginaryChord | ImaginaryAxis | Axis => vec![n],
        UnisecantGamma if odd => vec![n],
        UnisecantGamma => vec![q + 1, q * q - 1],
        UnisecantNonGamma | ExternalGamma if odd => vec![g / 2, g / 2],
        UnisecantNonGamma | ExternalGamma => vec![g],
        ExternalAxis => vec![(q * q - 1) / 2, (q * q - 1) / 2, g],
        ExternalNonGamma => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("orbit count {numer}/{denom} for size {size} is not an integer")]
pub struct NotIntegral {
    pub size: u64,
    pub numer: i64,
    pub denom: i64,
}

/// Orbit-size multiset of the external non-Γ lines: size → count.
pub fn external_non_gamma(q: u32) -> Result<BTreeMap<u64, u64>, NotIntegral> {
    let xi = i64::from(centered_mod3(q));
    let g = u64::from(q).pow(3) - u64::from(q);
    let qi = i64::from(q);
    let mut out = BTreeMap::new();
    let mut put = |count: Ratio<i64>, size_div: u64| -> Result<(), NotIntegral> {
        let size = g / size_div;
        if !count.is_integer() || *count.numer() < 0 {
            return Err(NotIntegral { size, numer: *count.numer(), denom: *count.denom() });
        }
        if *count.numer() > 0 {
            *out.entry(size).or_insert(0) += *count.numer() as u64;
        }
        Ok(())
    };
    let r = |n: i64, d: i64| Ratio::new(n, d);
    if q % 2 == 1 {
        // (2q - 6 - 4.5 xi^2 - 0.5 xi) / 3
        let quarter = (r(2 * qi - 6, 1) - r(9, 2) * xi * xi - r(1, 2) * xi) / 3;
        put(quarter, 4)?;
        put(r(qi - 1, 1), 2)?;
        put(r(qi - xi, 3), 1)?;
        if xi == 1 {
            put(r(1, 1), 12)?;
            put(r(2, 1), 3)?;
        }
    } else {
        put(r(2 + xi, 1), (2 + xi) as u64)?;
        put(r(2 * qi - 4, 1), 2)?;
    }
    Ok(out)
}

/// Number of external non-Γ orbits.
pub fn external_non_gamma_orbits(q: u32) -> i64 {
    let xi = i64::from(centered_mod3(q));
    let q = i64::from(q);
    if q % 2 == 1 {
        2 * q - 3 + xi
    } else {
        2 * q - 2 + xi
    }
}

/// Total number of line orbits.
pub fn total_line_orbits(q: u32) -> i64 {
    2 * i64::from(q) + 7 + i64::from(centered_mod3(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(q: u64) -> u64 {
        (q * q + 1) * (q * q + q + 1)
    }

    #[test]
    fn known_small_censuses() {
        // q = 7: 84×1, 168×6, 336×2, 28×1, 112×2
        let m = external_non_gamma(7).unwrap();
        assert_eq!(m, BTreeMap::from([(28, 1), (84, 1), (112, 2), (168, 6), (336, 2)]));
        assert_eq!(external_non_gamma_orbits(7), 12);
        assert_eq!(total_line_orbits(7), 22);
        let m9 = external_non_gamma(9).unwrap();
        assert_eq!(m9, BTreeMap::from([(180, 4), (360, 8), (720, 3)]));
        let m8 = external_non_gamma(8).unwrap();
        assert_eq!(m8, BTreeMap::from([(252, 12), (504, 1)]));
        assert_eq!(external_non_gamma_orbits(8), 13);
        assert_eq!(total_line_orbits(8), 22);
        assert_eq!(total_line_orbits(9), 25);
    }

    #[test]
    fn formulas_are_consistent() {
        for q in (2..=64u32).filter(|&q| crate::gf::prime_power(q).is_some()) {
            let m = external_non_gamma(q).unwrap();
            let lines_total: u64 = m.iter().map(|(s, c)| s * c).sum();
            assert_eq!(Some(lines_total), LineClass::ExternalNonGamma.expected_size(q), "q={q}");
            let count: u64 = m.values().sum();
            assert_eq!(count as i64, external_non_gamma_orbits(q), "q={q}");

            let xi = centered_mod3(q);
            let mut total_lines = 0;
            let mut orbits = count as i64;
            for class in LineClass::for_xi(xi) {
                total_lines += class.expected_size(q).unwrap();
                if let Some(p) = class_pattern(q, class) {
                    assert_eq!(p.iter().sum::<u64>(), class.expected_size(q).unwrap());
                    orbits += p.len() as i64;
                }
            }
            assert_eq!(total_lines, lines(u64::from(q)));
            assert_eq!(orbits, total_line_orbits(q), "q={q}");
        }
    }
}
