//! Exact dense linear algebra over a coefficient field, just enough for
//! minimal polynomials, subfield membership and division in monogenic
//! rings: Gaussian elimination with exact pivoting.

use alloc::vec::Vec;

use crate::arith::Field;
use crate::error::Result;

/// Solves `A x = b` for one solution, columns of `a` being the columns of
/// the matrix (each of length `rows`). Returns `None` when inconsistent;
/// free variables, if any, are set to zero.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve<F: Field>(
    field: &F,
    columns: &[Vec<F::Elem>],
    rhs: &[F::Elem],
) -> Result<Option<Vec<F::Elem>>> {
    let rows = rhs.len();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));

    // Augmented row-major matrix.
    let mut m: Vec<Vec<F::Elem>> = (0..rows)
        .map(|r| {
            let mut row: Vec<F::Elem> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivot_in_col: Vec<Option<usize>> = alloc::vec![None; cols];
    let mut row = 0usize;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(row, pr);
        let inv = field.inv(&m[row][col])?;
        for c in col..=cols {
            m[row][c] = field.mul(&m[row][c], &inv);
        }
        for r in 0..rows {
            if r != row && !field.is_zero(&m[r][col]) {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = field.mul(&factor, &m[row][c]);
                    m[r][c] = field.sub(&m[r][c], &delta);
                }
            }
        }
        pivot_in_col[col] = Some(row);
        row += 1;
        if row == rows {
            break;
        }
    }

    // Inconsistent if a zero row has nonzero rhs.
    for r in row..rows {
        if !field.is_zero(&m[r][cols]) {
            return Ok(None);
        }
    }

    let mut x = alloc::vec![field.zero(); cols];
    for col in 0..cols {
        if let Some(r) = pivot_in_col[col] {
            x[col] = m[r][cols].clone();
        }
    }
    Ok(Some(x))
}

/// Incremental search for the first linear dependence in a sequence of
/// vectors. Feed vectors one at a time; `push` returns the dependence
/// coefficients (expressing the new vector in terms of the previously
/// accepted ones) as soon as one exists, or `None` if the vector is
/// independent and was added to the basis.
pub(crate) struct DependencyFinder<F: Field> {
    field: F,
    dim: usize,
    /// Reduced basis rows together with the combination of original
    /// vectors that produced them.
    rows: Vec<(Vec<F::Elem>, Vec<F::Elem>)>,
    accepted: usize,
}

impl<F: Field> DependencyFinder<F> {
    pub fn new(field: F, dim: usize) -> Self {
        DependencyFinder { field, dim, rows: Vec::new(), accepted: 0 }
    }

    pub fn push(&mut self, v: Vec<F::Elem>) -> Result<Option<Vec<F::Elem>>> {
        debug_assert_eq!(v.len(), self.dim);
        let f = &self.field;
        let mut v = v;
        // Combination starts as the unit vector for this new input.
        let mut comb = alloc::vec![f.zero(); self.accepted + 1];
        comb[self.accepted] = f.one();

        for (row, row_comb) in &self.rows {
            let lead = row
                .iter()
                .position(|c| !f.is_zero(c))
                .expect("basis rows are nonzero");
            if f.is_zero(&v[lead]) {
                continue;
            }
            let factor = v[lead].clone();
            for (a, b) in v.iter_mut().zip(row.iter()) {
                let delta = f.mul(&factor, b);
                *a = f.sub(a, &delta);
            }
            for (i, b) in row_comb.iter().enumerate() {
                let delta = f.mul(&factor, b);
                comb[i] = f.sub(&comb[i], &delta);
            }
        }

        if v.iter().all(|c| f.is_zero(c)) {
            // Dependence found: new = -sum(comb[i] * original_i) / comb[last].
            let last = comb.pop().expect("nonempty");
            debug_assert!(f.is_one(&last));
            let out = comb.iter().map(|c| f.neg(c)).collect();
            return Ok(Some(out));
        }

        // Normalize to a leading one and keep sorted insertion-order rows.
        let lead = v.iter().position(|c| !f.is_zero(c)).expect("nonzero");
        let inv = f.inv(&v[lead])?;
        for a in v.iter_mut() {
            *a = f.mul(a, &inv);
        }
        let comb: Vec<F::Elem> = comb.iter().map(|c| f.mul(c, &inv)).collect();
        self.rows.push((v, comb));
        self.accepted += 1;
        Ok(None)
    }
}
