//! Shipped Conway polynomials.
//!
//! Coefficients are stored low-to-high and include the leading one.

/// Conway polynomial for `(p, h)`, when shipped.
pub fn conway_polynomial(p: u32, h: u32) -> Option<&'static [u16]> {
    let poly: &'static [u16] = match (p, h) {
        (2, 1) => &[1, 1],
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 1, 1, 0, 1],
        (3, 1) => &[1, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (5, 1) => &[3, 1],
        (5, 2) => &[2, 4, 1],
        (7, 1) => &[4, 1],
        (7, 2) => &[3, 6, 1],
        (11, 1) => &[9, 1],
        (13, 1) => &[11, 1],
        (17, 1) => &[14, 1],
        (19, 1) => &[17, 1],
        (23, 1) => &[18, 1],
        (29, 1) => &[27, 1],
        (31, 1) => &[28, 1],
        (37, 1) => &[35, 1],
        (41, 1) => &[35, 1],
        (43, 1) => &[40, 1],
        (47, 1) => &[42, 1],
        (53, 1) => &[51, 1],
        (59, 1) => &[57, 1],
        (61, 1) => &[59, 1],
        _ => return None,
    };
    Some(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_prime_power_up_to_64_is_shipped() {
        for q in 2u32..=64 {
            let Some((p, h)) = crate::gf::prime_power(q) else {
                continue;
            };
            let poly = conway_polynomial(p, h).unwrap_or_else(|| panic!("missing ({p},{h})"));
            assert_eq!(poly.len() as u32, h + 1);
            assert_eq!(*poly.last().unwrap(), 1);
            assert!(poly.iter().all(|&c| u32::from(c) < p));
        }
    }
}
