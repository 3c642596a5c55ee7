use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of big integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Exact product. Zero entries of `self` are skipped, which makes
    /// products with 0/1 adjacency matrices cost one addition per edge.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                expected: format!("{} rows", self.cols),
                got: format!("{} rows", other.rows),
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let src = other.row(l);
                if a.is_one() {
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d += s;
                    }
                } else {
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d += a * s;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add_scaled_identity(&mut self, c: &BigInt) {
        for i in 0..self.rows.min(self.cols) {
            self.data[i * self.cols + i] += c;
        }
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Exact `M x`.
pub fn int_matvec(m: &IntMatrix, x: &[BigInt]) -> Result<Vec<BigInt>> {
    if m.cols != x.len() {
        return Err(Error::Dimension {
            expected: format!("vector of length {}", m.cols),
            got: format!("length {}", x.len()),
        });
    }
    Ok((0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .zip(x)
                .filter(|(a, _)| !a.is_zero())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect())
}

/// Dense matrix of rationals; `BigRational` keeps every entry reduced with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        IntMatrix::from_rows(rows).to_rat()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Appends a row of small integers.
    pub fn push_row(&mut self, row: &[i64]) {
        assert_eq!(row.len(), self.cols, "row length");
        self.data
            .extend(row.iter().map(|&x| BigRational::from_integer(x.into())));
        self.rows += 1;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = &self.data[r * self.cols + j] * &inv;
                self.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let delta = &factor * &self.data[r * self.cols + j];
                    if !delta.is_zero() {
                        self.data[i * self.cols + j] -= delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// Exact rank by rational Gauss-Jordan elimination.
pub fn rat_rank(m: &RatMatrix) -> usize {
    m.clone().rref().len()
}

/// A basis of the right null space, scaled to primitive integer vectors.
pub fn rat_kernel(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    use num_integer::Integer;
    let mut r = m.clone();
    let pivots = r.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f).clone();
            }
            let lcm = v
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            ints.into_iter().map(|x| x / &g).collect()
        })
        .collect()
}

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn int_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pivot = a[r * cols + c].clone();
        for i in (r + 1)..rows {
            let lead = a[i * cols + c].clone();
            for j in (c + 1)..cols {
                let v = (&pivot * &a[i * cols + j] - &lead * &a[r * cols + j]) / &prev;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_basics() {
        let id = RatMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(rat_rank(&id), 3);
        let ones = RatMatrix::from_rows(&[[1i64; 4]; 4]);
        assert_eq!(rat_rank(&ones), 1);
        assert_eq!(rat_rank(&RatMatrix::zeros(3, 5)), 0);
        assert_eq!(int_rank(&IntMatrix::from_rows(&[[1i64; 4]; 4])), 1);
        assert_eq!(int_rank(&IntMatrix::identity(5)), 5);
    }

    #[test]
    fn bareiss_matches_rational_rank() {
        let m = IntMatrix::from_rows(&[
            [2, 4, 1, 3],
            [1, 2, 0, 1],
            [3, 6, 1, 4],
            [0, 0, 5, 5],
        ]);
        assert_eq!(int_rank(&m), rat_rank(&m.to_rat()));
        assert_eq!(int_rank(&m), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = RatMatrix::from_rows(&[[1, 1, 0, 0], [0, 1, 1, 0]]);
        let k = rat_kernel(&m);
        assert_eq!(k.len(), 2);
        let im = IntMatrix::from_rows(&[[1, 1, 0, 0], [0, 1, 1, 0]]);
        for v in &k {
            assert!(int_matvec(&im, v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn matvec_identity_and_mismatch() {
        let x: Vec<BigInt> = [3, -1, 7].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(int_matvec(&IntMatrix::identity(3), &x).unwrap(), x);
        assert!(int_matvec(&IntMatrix::identity(2), &x).is_err());
    }

    #[test]
    fn product_skips_zero_rows() {
        let a = IntMatrix::from_rows(&[[0, 1], [2, 0]]);
        let b = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        assert_eq!(a.mul(&b).unwrap(), IntMatrix::from_rows(&[[3, 4], [2, 4]]));
        assert!(a.mul(&IntMatrix::zeros(3, 1)).is_err());
    }
}
