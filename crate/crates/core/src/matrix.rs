//! Sparse matrices over an exact field, stored by column.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::field::{Field, Scalar};

/// A sparse column vector: row index to nonzero entry.
pub type SparseVec<S> = BTreeMap<usize, S>;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<S: Scalar> {
    rows: usize,
    zero: S,
    one: S,
    cols: Vec<SparseVec<S>>,
}

impl<S: Scalar> fmt::Debug for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols.len())?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols.len()).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn axpy<S: Scalar>(y: &mut SparseVec<S>, a: &S, x: &SparseVec<S>) {
    for (&i, v) in x {
        let add = a.clone() * v.clone();
        match y.remove(&i) {
            Some(old) => {
                let s = old + add;
                if !s.is_zero() {
                    y.insert(i, s);
                }
            }
            None => {
                if !add.is_zero() {
                    y.insert(i, add);
                }
            }
        }
    }
}

/// Result of column elimination: kernel vectors and the rank.
struct Elimination<S: Scalar> {
    rank: usize,
    kernel: Vec<SparseVec<S>>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zeros<F: Field<Elem = S>>(field: &F, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            zero: field.zero(),
            one: field.one(),
            cols: vec![SparseVec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        self.cols[c].get(&r).unwrap_or(&self.zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        assert!(r < self.rows, "row {r} out of range");
        if v.is_zero() {
            self.cols[c].remove(&r);
        } else {
            self.cols[c].insert(r, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: S) {
        let cur = self.get(r, c).clone();
        self.set(r, c, cur + v);
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn nonzeros(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn column(&self, c: usize) -> &SparseVec<S> {
        &self.cols[c]
    }

    /// `self · x` for a sparse vector `x`.
    pub fn apply(&self, x: &SparseVec<S>) -> SparseVec<S> {
        let mut out = SparseVec::new();
        for (&j, a) in x {
            axpy(&mut out, a, &self.cols[j]);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols.len(), other.rows, "dimension mismatch");
        ExactMatrix {
            rows: self.rows,
            zero: self.zero.clone(),
            one: self.one.clone(),
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols.len(), v.len());
        let x: SparseVec<S> = v
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (i, a.clone()))
            .collect();
        self.densify(&self.apply(&x), self.rows)
    }

    fn densify(&self, v: &SparseVec<S>, len: usize) -> Vec<S> {
        let mut out = vec![self.zero.clone(); len];
        for (&i, a) in v {
            out[i] = a.clone();
        }
        out
    }

    /// Column-by-column elimination keyed on the largest row index; a column
    /// that reduces to zero yields a kernel vector.
    fn eliminate(&self, want_kernel: bool) -> Elimination<S> {
        let mut pivots: HashMap<usize, (SparseVec<S>, SparseVec<S>)> = HashMap::new();
        let mut kernel = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            let mut v = col.clone();
            let mut comb = SparseVec::new();
            if want_kernel {
                comb.insert(j, self.one.clone());
            }
            loop {
                let Some((&r, lead)) = v.iter().next_back() else {
                    if want_kernel {
                        kernel.push(comb);
                    }
                    break;
                };
                match pivots.get(&r) {
                    Some((pv, pc)) => {
                        let f = -(lead.clone() * pv[&r].inverse().expect("pivot is nonzero"));
                        axpy(&mut v, &f, pv);
                        if want_kernel {
                            axpy(&mut comb, &f, pc);
                        }
                    }
                    None => {
                        pivots.insert(r, (v, comb));
                        break;
                    }
                }
            }
        }
        Elimination {
            rank: pivots.len(),
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.eliminate(false).rank
    }

    pub fn nullity(&self) -> usize {
        self.cols.len() - self.rank()
    }

    /// A basis of the right kernel `{x : self · x = 0}` as sparse vectors.
    pub fn kernel_sparse(&self) -> Vec<SparseVec<S>> {
        self.eliminate(true).kernel
    }

    /// A basis of the right kernel as dense vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        self.kernel_sparse()
            .iter()
            .map(|v| self.densify(v, self.cols.len()))
            .collect()
    }

    /// Whether `v` lies in the column space.
    pub fn column_space_contains(&self, v: &[S]) -> bool {
        let mut aug = self.clone();
        aug.cols.push(
            v.iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (i, a.clone()))
                .collect(),
        );
        aug.rank() == self.rank()
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![SparseVec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, a) in col {
                cols[i].insert(j, a.clone());
            }
        }
        ExactMatrix {
            rows: self.cols.len(),
            zero: self.zero.clone(),
            one: self.one.clone(),
            cols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn from_rows<F: Field>(f: &F, rows: &[&[i64]]) -> ExactMatrix<F::Elem> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = ExactMatrix::zeros(f, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, f.from_i64(v));
            }
        }
        m
    }

    #[test]
    fn rank_over_q_and_gf2_differs() {
        let rows: &[&[i64]] = &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]];
        assert_eq!(from_rows(&Rationals, rows).rank(), 3);
        assert_eq!(from_rows(&PrimeField::new(2).unwrap(), rows).rank(), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = from_rows(&Rationals, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 1]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), m.nullity());
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn product_and_transpose() {
        let a = from_rows(&Rationals, &[&[1, 2], &[3, 4]]);
        let b = from_rows(&Rationals, &[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), from_rows(&Rationals, &[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), from_rows(&Rationals, &[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn column_space_membership() {
        let a = from_rows(&Rationals, &[&[1, 0], &[1, 0], &[0, 1]]);
        let q = |v: &[i64]| v.iter().map(|&x| Rationals.from_i64(x)).collect::<Vec<_>>();
        assert!(a.column_space_contains(&q(&[2, 2, 5])));
        assert!(!a.column_space_contains(&q(&[1, 0, 0])));
    }
}
