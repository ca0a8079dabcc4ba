use num_complex::Complex64;

use super::{ComplexMatrix, LinalgError};

/// LU factorization with partial pivoting, `P A = L U`, packed in one matrix.
#[derive(Debug, Clone)]
pub struct Lu {
    packed: ComplexMatrix,
    perm: Vec<usize>,
    sign: f64,
    singular: bool,
}

impl Lu {
    pub fn new(m: &ComplexMatrix) -> Result<Self, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut a = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut singular = false;
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))
                .unwrap_or(k);
            if a[(pivot, k)].norm() == 0.0 {
                singular = true;
                continue;
            }
            if pivot != k {
                for j in 0..n {
                    let tmp = a[(k, j)];
                    a[(k, j)] = a[(pivot, j)];
                    a[(pivot, j)] = tmp;
                }
                perm.swap(k, pivot);
                sign = -sign;
            }
            let akk = a[(k, k)];
            for i in (k + 1)..n {
                let factor = a[(i, k)] / akk;
                a[(i, k)] = factor;
                for j in (k + 1)..n {
                    let akj = a[(k, j)];
                    a[(i, j)] -= factor * akj;
                }
            }
        }
        Ok(Self {
            packed: a,
            perm,
            sign,
            singular,
        })
    }

    pub fn determinant(&self) -> Complex64 {
        if self.singular {
            return Complex64::new(0.0, 0.0);
        }
        let n = self.packed.rows();
        (0..n).fold(Complex64::new(self.sign, 0.0), |acc, i| acc * self.packed[(i, i)])
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[Complex64]) -> Result<Vec<Complex64>, LinalgError> {
        if self.singular {
            return Err(LinalgError::Singular);
        }
        let n = self.packed.rows();
        if b.len() != n {
            return Err(LinalgError::Shape(format!(
                "right-hand side has length {}, expected {n}",
                b.len()
            )));
        }
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let lij = self.packed[(i, j)];
                let xj = x[j];
                x[i] -= lij * xj;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let uij = self.packed[(i, j)];
                let xj = x[j];
                x[i] -= uij * xj;
            }
            x[i] /= self.packed[(i, i)];
        }
        Ok(x)
    }
}

/// Determinant via partial-pivoting LU.
pub fn determinant(m: &ComplexMatrix) -> Result<Complex64, LinalgError> {
    Ok(Lu::new(m)?.determinant())
}
