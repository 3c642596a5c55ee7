use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{int_matvec, IntMatrix, RatMatrix};
use crate::error::{Error, Result};

/// Polynomial with big-integer coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x - r`.
    pub fn linear(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    /// Long division over the rationals. Returns `None` for a zero divisor.
    pub fn div_rem(&self, divisor: &IntPoly) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
        let dd = divisor.degree()?;
        let lead = BigRational::from_integer(divisor.leading()?.clone());
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let Some(pd) = self.degree() else {
            return Some((Vec::new(), Vec::new()));
        };
        if pd < dd {
            return Some((Vec::new(), rem));
        }
        let mut quot = vec![BigRational::zero(); pd - dd + 1];
        for k in (0..=pd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * BigRational::from_integer(c.clone());
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        Some((quot, rem))
    }

    /// Exact quotient when `divisor` divides `self` with an integral result.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(IntPoly::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }

    /// Coefficients as decimal strings, ascending degree.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// `det(xI - M)` by the Faddeev-LeVerrier recurrence.
///
/// Every division by the step index is exact over the integers; a non-zero
/// remainder would mean corrupted arithmetic and is reported as an error.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let d = m.rows();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    // A * M_{k-1}; M_0 = 0
    let mut am = IntMatrix::zeros(d, d);
    for k in 1..=d {
        let mut mk = am;
        mk.add_scaled_identity(&coeffs[d - k + 1]);
        am = m.mul(&mk)?;
        let (q, r) = am.trace().div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::Invalid(format!(
                "Faddeev-LeVerrier step {k} produced a non-integral coefficient"
            )));
        }
        coeffs[d - k] = -q;
    }
    Ok(IntPoly::new(coeffs))
}

/// Monic polynomial of least degree annihilating `A` on the Krylov space
/// `span{j, Aj, A^2 j, ...}`.
///
/// With `j` the all-ones vector this is the main characteristic polynomial,
/// which must have integer coefficients. A fractional coefficient is
/// returned as an error rather than rounded.
pub fn main_poly(a: &IntMatrix, j: &[BigInt]) -> Result<IntPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let d = a.rows();
    if j.len() != d {
        return Err(Error::Dimension {
            expected: format!("vector of length {d}"),
            got: format!("length {}", j.len()),
        });
    }
    if j.iter().all(Zero::is_zero) {
        return Ok(IntPoly::one());
    }
    let mut krylov: Vec<Vec<BigInt>> = vec![j.to_vec()];
    loop {
        let next = int_matvec(a, krylov.last().expect("non-empty"))?;
        let p = krylov.len();
        let mut sys = RatMatrix::zeros(d, p + 1);
        for (c, v) in krylov.iter().chain(std::iter::once(&next)).enumerate() {
            for (r, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    sys.set(r, c, BigRational::from_integer(x.clone()));
                }
            }
        }
        let pivots = sys.rref();
        if pivots.contains(&p) {
            krylov.push(next);
            continue;
        }
        // next = sum_i c_i A^i j, so the polynomial is x^p - sum_i c_i x^i.
        let mut coeffs = Vec::with_capacity(p + 1);
        for i in 0..p {
            let c = -sys.get(i, p).clone();
            if !c.is_integer() {
                return Err(Error::NonIntegralMainPoly {
                    degree: i,
                    coeff: c.to_string(),
                });
            }
            coeffs.push(c.to_integer());
        }
        coeffs.push(BigInt::one());
        return Ok(IntPoly::new(coeffs));
    }
}

/// Whether `d` divides `p` exactly over the rationals. A zero divisor
/// divides nothing.
pub fn poly_divides(d: &IntPoly, p: &IntPoly) -> bool {
    match p.div_rem(d) {
        Some((_, r)) => r.is_empty(),
        None => false,
    }
}

fn log2_abs(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.abs().to_f64().unwrap_or(f64::INFINITY).log2()
    } else {
        let shift = bits - 64;
        let top: BigInt = x.abs() >> shift;
        top.to_f64().unwrap_or(f64::INFINITY).log2() + shift as f64
    }
}

/// Fujiwara's bound on the modulus of every complex root, rounded up.
fn root_bound(p: &IntPoly) -> u64 {
    let c = p.coeffs();
    let d = c.len() - 1;
    let lead = log2_abs(&c[d]);
    let mut best = f64::NEG_INFINITY;
    for k in 1..=d {
        let a = &c[d - k];
        if a.is_zero() {
            continue;
        }
        let mut l = log2_abs(a) - lead;
        if k == d {
            l -= 1.0;
        }
        best = best.max(l / k as f64);
    }
    if best == f64::NEG_INFINITY {
        return 0;
    }
    let bound = 2.0 * best.exp2();
    if bound > 1e15 {
        u64::MAX
    } else {
        // generous slack for the float evaluation of the logarithms
        (bound * (1.0 + 1e-9)).ceil() as u64 + 1
    }
}

/// Synthetic division by `x - r`; returns the quotient when the remainder is zero.
fn deflate(p: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let d = p.len() - 1;
    let mut q = vec![BigInt::zero(); d];
    let mut acc = BigInt::zero();
    for k in (0..=d).rev() {
        acc = acc * r + &p[k];
        if k > 0 {
            q[k - 1] = acc.clone();
        }
    }
    acc.is_zero().then_some(q)
}

/// All integer roots with their multiplicities, largest root first.
///
/// Zero is split off as a power of `x`; every other integer root divides the
/// trailing non-zero coefficient, and candidates are limited to a root-modulus
/// bound before trial division. The zero polynomial has no well-defined root
/// set and yields an empty list.
pub fn integer_roots(p: &IntPoly) -> Vec<(i64, usize)> {
    if p.is_zero() {
        return Vec::new();
    }
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut work: Vec<BigInt> = p.coeffs()[zeros..].to_vec();
    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push((0, zeros));
    }
    if work.len() > 1 {
        let trailing = work[0].abs();
        let mut bound = root_bound(&IntPoly::new(work.clone()));
        if let Some(t) = trailing.to_u64() {
            bound = bound.min(t);
        }
        let mut r = 1u64;
        while r <= bound && work.len() > 1 {
            let rb = BigInt::from(r);
            if (&trailing % &rb).is_zero() {
                for cand in [rb.clone(), -rb.clone()] {
                    let mut mult = 0;
                    while work.len() > 1 {
                        match deflate(&work, &cand) {
                            Some(q) => {
                                work = q;
                                mult += 1;
                            }
                            None => break,
                        }
                    }
                    if mult > 0 {
                        roots.push((cand.to_i64().expect("bounded root"), mult));
                    }
                }
            }
            r += 1;
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    roots
}
