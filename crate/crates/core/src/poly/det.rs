/// Integral-domain operations needed by fraction-free elimination.
pub trait DetRing: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Quotient when `other` divides `self` exactly.
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

/// Determinant by Bareiss elimination with row pivoting. Every division is
/// exact (Sylvester's identity), so no fractions appear.
pub fn bareiss_det<R: DetRing>(mut m: Vec<Vec<R>>, one: R) -> R {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix expected");
    if n == 0 {
        return one;
    }
    let zero = one.sub(&one);
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate { d.neg() } else { d }
}
