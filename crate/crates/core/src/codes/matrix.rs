//! Dense matrices over `GF(q)` with Gaussian elimination in the log domain.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, LOG_ZERO};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<FieldElement>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(alloc::format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if data.iter().any(|&a| !field.contains(a)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(alloc::format!("row of length {} in a {cols}-column matrix", r.len())));
        }
        let n = rows.len();
        Matrix::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElement::ONE;
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// `sum_r coeffs[r] * row(r)`.
    pub fn combine(&self, coeffs: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (r, &c) in coeffs.iter().enumerate().take(self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(c, a));
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(alloc::format!(
                "{}x{} times {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            data.extend(other.combine(self.row(r)));
        }
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: other.cols, data })
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(alloc::format!(
                "stacking {} columns on {} columns",
                other.cols,
                self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn rank(&self) -> usize {
        Elimination::run(self, false).pivots.len()
    }

    /// Reduced row echelon form without zero rows.
    pub fn echelon(&self) -> Matrix {
        let e = Elimination::run(self, true);
        let rank = e.pivots.len();
        let data = e.logs[..rank * self.cols].iter().map(|&l| e.to_element(l)).collect();
        Matrix { field: self.field.clone(), rows: rank, cols: self.cols, data }
    }

    /// A basis of `{v : self * v = 0}`.
    pub fn null_space(&self) -> Vec<Vec<FieldElement>> {
        let e = Elimination::run(self, true);
        let f = &self.field;
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in e.pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[free] = FieldElement::ONE;
            for (r, &pc) in e.pivots.iter().enumerate() {
                let a = e.to_element(e.logs[r * self.cols + free]);
                v[pc] = f.neg(a);
            }
            out.push(v);
        }
        out
    }
}

pub fn stack_rank(a: &Matrix, b: &Matrix) -> Result<usize> {
    Ok(a.stack(b)?.rank())
}

/// Row reduction state with entries stored as discrete logarithms.
struct Elimination<'f> {
    field: &'f Field,
    logs: Vec<u32>,
    pivots: Vec<usize>,
}

impl<'f> Elimination<'f> {
    fn to_element(&self, l: u32) -> FieldElement {
        if l == LOG_ZERO {
            FieldElement::ZERO
        } else {
            self.field.exp(l as u64)
        }
    }

    /// Forward elimination with the first nonzero entry of each column as
    /// pivot; with `reduce`, also clears above pivots.
    fn run(m: &'f Matrix, reduce: bool) -> Elimination<'f> {
        let field = &m.field;
        let log = field.log_table();
        let order = field.size() - 1;
        let lm1 = field.log_minus_one();
        // zech3[d] = Zech log of d mod order, for d in [0, 3 order)
        let zech = field.zech_table();
        let zech3: Vec<u32> = (0..3 * order as usize).map(|d| zech[d % order as usize]).collect();
        let cols = m.cols;
        let mut logs: Vec<u32> = m.data.iter().map(|a| log[a.encoding() as usize]).collect();
        let mut pivots = Vec::new();
        let mut nz: Vec<(usize, u32)> = Vec::with_capacity(cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| logs[r * cols + c] != LOG_ZERO) else {
                continue;
            };
            if p != rank {
                for k in c..cols {
                    logs.swap(p * cols + k, rank * cols + k);
                }
            }
            // normalize the pivot row so the pivot is 1
            let inv = (order - logs[rank * cols + c]) % order;
            nz.clear();
            for k in c..cols {
                let v = &mut logs[rank * cols + k];
                if *v != LOG_ZERO {
                    *v = (*v + inv) % order;
                    nz.push((k, *v));
                }
            }
            let targets = if reduce { 0..m.rows } else { rank + 1..m.rows };
            for r in targets {
                if r == rank {
                    continue;
                }
                let e = logs[r * cols + c];
                if e == LOG_ZERO {
                    continue;
                }
                // row_r += (-e) * pivot_row; t = log of the added term, in [0, 2 order)
                let shift = (e + lm1) % order;
                let row = &mut logs[r * cols..(r + 1) * cols];
                for &(k, pv) in &nz {
                    let t = pv + shift;
                    let a = row[k];
                    row[k] = if a == LOG_ZERO {
                        if t >= order {
                            t - order
                        } else {
                            t
                        }
                    } else {
                        let z = zech3[(t + order - a) as usize];
                        if z == LOG_ZERO {
                            LOG_ZERO
                        } else {
                            let s = a + z;
                            if s >= order {
                                s - order
                            } else {
                                s
                            }
                        }
                    };
                }
            }
            pivots.push(c);
            rank += 1;
        }
        Elimination { field, logs, pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(field: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let data = (0..rows * cols).map(|_| FieldElement::from_encoding(rng.gen_range(0..field.size()))).collect();
        Matrix::new(field.clone(), rows, cols, data).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(Matrix::identity(f.clone(), 5).rank(), 5);
        assert_eq!(Matrix::zero(f, 4, 6).rank(), 0);
    }

    #[test]
    fn echelon_is_idempotent() {
        let f = Field::new(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random(&f, 50, 80, &mut rng);
        let e = m.echelon();
        assert_eq!(m.rank(), e.rank());
        assert_eq!(e.echelon(), e);
    }

    #[test]
    fn null_space_is_annihilated() {
        for (p, e) in [(2, 3), (3, 2), (5, 1)] {
            let f = Field::new(p, e).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
            let mut m = random(&f, 4, 9, &mut rng);
            // force a dependency
            let dup = m.row(0).to_vec();
            for (c, v) in dup.into_iter().enumerate() {
                m.set(3, c, v);
            }
            let ns = m.null_space();
            assert_eq!(ns.len(), 9 - m.rank());
            for v in ns {
                for r in 0..m.rows() {
                    let s = m.row(r).iter().zip(&v).fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn shape_and_field_errors() {
        let f9 = Field::new(3, 2).unwrap();
        let f4 = Field::new(2, 2).unwrap();
        let a = Matrix::zero(f9.clone(), 2, 3);
        assert!(matches!(a.stack(&Matrix::zero(f9.clone(), 2, 4)), Err(Error::ShapeMismatch(_))));
        assert_eq!(a.stack(&Matrix::zero(f4, 2, 3)), Err(Error::FieldMismatch));
        assert_eq!(Matrix::new(f9, 1, 1, vec![FieldElement::from_encoding(9)]), Err(Error::FieldMismatch));
    }
}
