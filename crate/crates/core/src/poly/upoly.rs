use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `Z[t]`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<BigInt>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides out the content, sign chosen so the leading coefficient is positive.
    pub fn primitive_part(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().unwrap().is_negative() {
            c = -c;
        }
        UPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigInt::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &UPoly) -> UPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.lead().unwrap().clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return r };
        if da < dd {
            return r;
        }
        let mut steps = da - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = r.lead().unwrap().clone();
            let mut shifted = vec![BigInt::zero(); dr - dd];
            shifted.extend(d.coeffs.iter().map(|x| x * &c));
            r = r.scale(&lc).sub(&UPoly::new(shifted));
            steps -= 1;
        }
        r.scale(&num_traits::pow(lc, steps))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[t]`.
    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        let dd = d.degree().expect("division by zero");
        let lc = d.lead().unwrap();
        let mut r = self.coeffs.clone();
        if self.is_zero() {
            return Some(UPoly::default());
        }
        if r.len() <= dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (quot, rem) = r[k + dd].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k + j] -= &quot * c;
            }
            q[k] = quot;
        }
        if r.iter().all(Zero::is_zero) { Some(UPoly::new(q)) } else { None }
    }

    /// gcd in `Z[t]` via the primitive remainder sequence; positive leading coefficient.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}
