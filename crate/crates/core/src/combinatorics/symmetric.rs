use crate::qcore::Scalar;

/// Elementary symmetric function `e_k(z)`; `e_0 = 1` and `e_k = 0` for `k > #z`.
pub fn elem_sym<T: Scalar>(k: usize, z: &[T]) -> T {
    if k > z.len() {
        return T::zero();
    }
    let mut e = vec![T::zero(); k + 1];
    e[0] = T::one();
    for (m, zi) in z.iter().enumerate() {
        for j in (1..=k.min(m + 1)).rev() {
            e[j] = e[j].clone() + zi.clone() * e[j - 1].clone();
        }
    }
    e[k].clone()
}

/// Complete homogeneous symmetric function `h_k(y)`; `h_0 = 1`.
pub fn complete_sym<T: Scalar>(k: usize, y: &[T]) -> T {
    let mut h = vec![T::zero(); k + 1];
    h[0] = T::one();
    for yi in y {
        for j in 1..=k {
            h[j] = h[j].clone() + yi.clone() * h[j - 1].clone();
        }
    }
    h[k].clone()
}
