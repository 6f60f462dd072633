use crate::error::Result;
use crate::exact::Scalar;
use crate::liealg::StructureConstants;
use crate::manin::mixed_jacobi_residual;

/// Unknown components `f~^ij_k`, `i < j`, in column order (0-based).
pub const COLUMNS: [(usize, usize, usize); 9] = [
    (0, 1, 0),
    (0, 1, 1),
    (0, 1, 2),
    (0, 2, 0),
    (0, 2, 1),
    (0, 2, 2),
    (1, 2, 0),
    (1, 2, 1),
    (1, 2, 2),
];

/// Name of a dual component, e.g. `f12_3` for `f~^12_3`.
pub fn component_name(col: usize) -> String {
    let (i, j, k) = COLUMNS[col];
    format!("f{}{}_{}", i + 1, j + 1, k + 1)
}

/// Dual tensor with the given values of the nine independent components.
pub fn dual_from_components<S: Scalar>(values: &[S]) -> StructureConstants<S> {
    assert_eq!(values.len(), 9, "nine components");
    StructureConstants::from_brackets(
        3,
        COLUMNS
            .iter()
            .zip(values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(&(i, j, k), v)| (i, j, k, v.clone())),
    )
}

pub fn dual_components<S: Scalar>(fd: &StructureConstants<S>) -> Vec<S> {
    COLUMNS.iter().map(|&(i, j, k)| fd.get(i, j, k).clone()).collect()
}

/// Mixed identities as a linear system in the nine dual components: one
/// row per `(j<k, m, i)`, identically zero rows dropped.
#[derive(Clone, Debug)]
pub struct LinearSystem<S: Scalar> {
    pub matrix: Vec<Vec<S>>,
    /// `(j, k, m, i)` of each row (0-based).
    pub row_labels: Vec<[usize; 4]>,
}

impl<S: Scalar> LinearSystem<S> {
    pub fn columns(&self) -> &'static [(usize, usize, usize); 9] {
        &COLUMNS
    }
}

pub fn mixed_jacobi_system<S: Scalar>(f: &StructureConstants<S>) -> LinearSystem<S> {
    let per_column: Vec<_> = (0..9)
        .map(|c| {
            let mut unit = vec![S::zero(); 9];
            unit[c] = S::one();
            mixed_jacobi_residual(f, &dual_from_components(&unit))
        })
        .collect();
    let mut matrix = Vec::new();
    let mut row_labels = Vec::new();
    for j in 0..3 {
        for k in j + 1..3 {
            for m in 0..3 {
                for i in 0..3 {
                    let row: Vec<S> = per_column.iter().map(|r| r.get(&[j, k, m, i]).clone()).collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        matrix.push(row);
                        row_labels.push([j, k, m, i]);
                    }
                }
            }
        }
    }
    LinearSystem { matrix, row_labels }
}

/// Reduced row echelon form with the pivots met during elimination.
#[derive(Clone, Debug)]
pub struct Rref<S: Scalar> {
    /// Nonzero rows, each with a unit entry in its pivot column.
    pub rows: Vec<Vec<S>>,
    pub pivot_columns: Vec<usize>,
    /// Fraction-free pivots; all must be nonzero for the form to be valid.
    pub pivots: Vec<S>,
}

/// Fraction-free (Bareiss) forward elimination, pivoting on the first
/// nonzero entry of the leftmost remaining column (ties by row order),
/// followed by back substitution to reduced row echelon form.
pub fn bareiss_rref<S: Scalar>(mut m: Vec<Vec<S>>, ncols: usize) -> Result<Rref<S>> {
    let nrows = m.len();
    let mut prev = S::one();
    let mut r = 0;
    let mut pivot_columns = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&p| !m[p][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..nrows {
            let lead = m[i][c].clone();
            for j in c + 1..ncols {
                let v = piv.mul_ref(&m[i][j]).sub_ref(&lead.mul_ref(&m[r][j]));
                m[i][j] = v.try_div(&prev)?;
            }
            m[i][c] = S::zero();
        }
        pivots.push(piv.clone());
        pivot_columns.push(c);
        prev = piv;
        r += 1;
    }
    m.truncate(r);
    for (row, &c) in m.iter_mut().zip(&pivot_columns) {
        let p = row[c].clone();
        for x in row.iter_mut() {
            *x = x.try_div(&p)?;
        }
    }
    for k in (0..r).rev() {
        let c = pivot_columns[k];
        for i in 0..k {
            let factor = m[i][c].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..ncols {
                let v = m[i][j].sub_ref(&factor.mul_ref(&m[k][j]));
                m[i][j] = v;
            }
        }
    }
    Ok(Rref {
        rows: m,
        pivot_columns,
        pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::liealg::BianchiClass;

    fn rank(c: BianchiClass) -> usize {
        let sys = mixed_jacobi_system(&c.form_at(Rational::from(2)));
        bareiss_rref(sys.matrix, 9).unwrap().pivot_columns.len()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(BianchiClass::I), 0);
        assert_eq!(rank(BianchiClass::IX), 6);
        assert_eq!(rank(BianchiClass::V), 3);
        let sys = mixed_jacobi_system(&BianchiClass::I.standard_form().unwrap());
        assert!(sys.matrix.is_empty());
    }

    #[test]
    fn rref_small() {
        let q = |n: i64| Rational::from(n);
        let m = vec![vec![q(0), q(2), q(4)], vec![q(1), q(1), q(1)], vec![q(2), q(4), q(6)]];
        let r = bareiss_rref(m, 3).unwrap();
        assert_eq!(r.pivot_columns, vec![0, 1]);
        assert_eq!(r.rows, vec![vec![q(1), q(0), q(-1)], vec![q(0), q(1), q(2)]]);
    }

    #[test]
    fn names() {
        assert_eq!(component_name(0), "f12_1");
        assert_eq!(component_name(5), "f13_3");
        assert_eq!(component_name(8), "f23_3");
    }
}
