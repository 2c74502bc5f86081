//! 4×4 matrices over GF(q).

use crate::gf::{Elem, FieldSpec};
use crate::pg3::Vec4;

pub type Mat4 = [[Elem; 4]; 4];

pub fn identity() -> Mat4 {
    let mut m = [[Elem::ZERO; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Elem::ONE;
    }
    m
}

/// Row vector times matrix.
#[inline]
pub fn row_times(f: &FieldSpec, v: &Vec4, m: &Mat4) -> Vec4 {
    let mut out = [Elem::ZERO; 4];
    for (k, &x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for j in 0..4 {
            out[j] = f.add(out[j], f.mul(x, m[k][j]));
        }
    }
    out
}

/// Matrix times column vector.
#[inline]
pub fn times_column(f: &FieldSpec, m: &Mat4, v: &Vec4) -> Vec4 {
    [0, 1, 2, 3].map(|i| {
        let mut acc = Elem::ZERO;
        for k in 0..4 {
            acc = f.add(acc, f.mul(m[i][k], v[k]));
        }
        acc
    })
}

pub fn mul(f: &FieldSpec, a: &Mat4, b: &Mat4) -> Mat4 {
    [0, 1, 2, 3].map(|i| row_times(f, &a[i], b))
}

pub fn scale(f: &FieldSpec, s: Elem, m: &Mat4) -> Mat4 {
    m.map(|row| row.map(|x| f.mul(s, x)))
}

/// Gauss–Jordan inverse; `None` for singular matrices.
pub fn inverse(f: &FieldSpec, m: &Mat4) -> Option<Mat4> {
    let mut a = *m;
    let mut inv = identity();
    for col in 0..4 {
        let pivot = (col..4).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let s = f.inv(a[col][col]);
        a[col] = a[col].map(|x| f.mul(s, x));
        inv[col] = inv[col].map(|x| f.mul(s, x));
        for r in 0..4 {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let c = a[r][col];
            for k in 0..4 {
                a[r][k] = f.sub(a[r][k], f.mul(c, a[col][k]));
                inv[r][k] = f.sub(inv[r][k], f.mul(c, inv[col][k]));
            }
        }
    }
    Some(inv)
}

pub fn determinant(f: &FieldSpec, m: &Mat4) -> Elem {
    let mut a = *m;
    let mut det = Elem::ONE;
    for col in 0..4 {
        let Some(pivot) = (col..4).find(|&r| !a[r][col].is_zero()) else {
            return Elem::ZERO;
        };
        if pivot != col {
            a.swap(col, pivot);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        let s = f.inv(a[col][col]);
        for r in col + 1..4 {
            let c = f.mul(a[r][col], s);
            for k in col..4 {
                a[r][k] = f.sub(a[r][k], f.mul(c, a[col][k]));
            }
        }
    }
    det
}

/// Whether `a = λ b` for some nonzero λ.
pub fn proportional(f: &FieldSpec, a: &Mat4, b: &Mat4) -> bool {
    let flat = |m: &Mat4| -> [Elem; 16] {
        let mut v = [Elem::ZERO; 16];
        for (i, row) in m.iter().enumerate() {
            v[4 * i..4 * i + 4].copy_from_slice(row);
        }
        v
    };
    crate::pg3::normalize(f, flat(a)) == crate::pg3::normalize(f, flat(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for q in [2, 5, 9, 16] {
            let f = FieldSpec::with_order(q).unwrap();
            for _ in 0..200 {
                let m: Mat4 = [[0; 4]; 4].map(|r| r.map(|_| Elem(rng.gen_range(0..q) as u16)));
                match inverse(&f, &m) {
                    Some(inv) => {
                        assert_eq!(mul(&f, &m, &inv), identity());
                        assert!(!determinant(&f, &m).is_zero());
                    }
                    None => assert!(determinant(&f, &m).is_zero()),
                }
            }
        }
    }
}
