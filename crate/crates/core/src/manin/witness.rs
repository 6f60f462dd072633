use num_traits::ToPrimitive;

use super::ManinTriple;
use crate::error::Result;
use crate::exact::Rational;
use crate::liealg::Matrix3;

/// True when `transform(t1, A)` equals `t2` entrywise.
pub fn verify_witness(t1: &ManinTriple, t2: &ManinTriple, a: &Matrix3) -> Result<bool> {
    Ok(&t1.transform(a)? == t2)
}

/// One polynomial equation `Σ coef · B[v1] · B[v2] = 0` (with `v2` absent
/// for linear terms) in the entries of `B = L·A`.
#[derive(Clone, Debug)]
struct Equation {
    terms: Vec<(i128, usize, Option<usize>)>,
}

impl Equation {
    fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().flat_map(|&(_, a, b)| std::iter::once(a).chain(b))
    }

    fn eval(&self, b: &[i64; 9]) -> i128 {
        self.terms
            .iter()
            .map(|&(c, x, y)| c * b[x] as i128 * y.map_or(1, |y| b[y] as i128))
            .sum()
    }
}

fn scaled(values: impl IntoIterator<Item = Rational> + Clone) -> Option<Vec<i128>> {
    let l = Rational::from(Rational::lcm_denominators(
        values.clone().into_iter().collect::<Vec<_>>().iter(),
    ));
    values
        .into_iter()
        .map(|v| {
            let s = &v * &l;
            s.numer().to_i128()
        })
        .collect()
}

fn cell(r: usize, c: usize) -> usize {
    r * 3 + c
}

/// Equations for `transform(t1, A) = t2`, multiplied through by `A` so they
/// are polynomial, written in `B = L·A`:
/// `Σ f1_mn^p B^m_i B^n_j − L Σ_k B^p_k f2_ij^k = 0` and
/// `Σ f~2^ij_k B^a_i B^b_j − L Σ_p f~1^ab_p B^p_k = 0`.
fn equations(t1: &ManinTriple, t2: &ManinTriple, l: i128) -> Option<Vec<Equation>> {
    let all = |x: &ManinTriple, y: &ManinTriple, dual: bool| {
        let (u, v) = if dual { (x.f_dual(), y.f_dual()) } else { (x.f(), y.f()) };
        let mut vals = Vec::with_capacity(54);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    vals.push(u.get(i, j, k).clone());
                }
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    vals.push(v.get(i, j, k).clone());
                }
            }
        }
        scaled(vals)
    };
    let g = all(t1, t2, false)?;
    let gd = all(t1, t2, true)?;
    let at =
        |v: &[i128], second: bool, i: usize, j: usize, k: usize| v[if second { 27 } else { 0 } + (i * 3 + j) * 3 + k];
    let mut eqs = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            for p in 0..3 {
                let mut terms = Vec::new();
                for m in 0..3 {
                    for n in 0..3 {
                        let c = at(&g, false, m, n, p);
                        if c != 0 {
                            terms.push((c, cell(m, i), Some(cell(n, j))));
                        }
                    }
                }
                for k in 0..3 {
                    let c = at(&g, true, i, j, k);
                    if c != 0 {
                        terms.push((-l * c, cell(p, k), None));
                    }
                }
                eqs.push(Equation { terms });
            }
        }
    }
    for a in 0..3 {
        for b in a + 1..3 {
            for k in 0..3 {
                let mut terms = Vec::new();
                for i in 0..3 {
                    for j in 0..3 {
                        let c = at(&gd, true, i, j, k);
                        if c != 0 {
                            terms.push((c, cell(a, i), Some(cell(b, j))));
                        }
                    }
                }
                for p in 0..3 {
                    let c = at(&gd, false, a, b, p);
                    if c != 0 {
                        terms.push((-l * c, cell(p, k), None));
                    }
                }
                eqs.push(Equation { terms });
            }
        }
    }
    Some(eqs)
}

/// Candidate values of `B = L·A` for entries `p/q`, `|p| ≤ bound`, `q` in
/// `denominators`, ordered by absolute value of the entry (positive first).
fn candidate_values(bound: i64, denominators: &[i64], l: i64) -> Vec<i64> {
    let mut entries: Vec<Rational> = vec![Rational::zero()];
    for &q in denominators {
        for p in 1..=bound {
            entries.push(Rational::frac(p, q));
        }
    }
    entries.sort();
    entries.dedup();
    let mut vals = vec![0];
    for e in entries.iter().filter(|e| !e.is_zero()) {
        let v = (e * &Rational::from(l)).to_i64().expect("integral by construction");
        vals.push(v);
        vals.push(-v);
    }
    vals
}

struct Search<'a> {
    eqs: &'a [Equation],
    order: Vec<usize>,
    /// Equations whose last variable is assigned at each depth.
    checks: Vec<Vec<usize>>,
    values: Vec<i64>,
    b: [i64; 9],
    assigned: [bool; 9],
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Option<[i64; 9]> {
        if depth == 9 {
            let a = to_matrix(&self.b, 1);
            return (!a.det().is_zero()).then_some(self.b);
        }
        let v = self.order[depth];
        for idx in 0..self.values.len() {
            self.b[v] = self.values[idx];
            self.assigned[v] = true;
            if self.consistent(depth, v) {
                if let Some(found) = self.run(depth + 1) {
                    return Some(found);
                }
            }
        }
        self.assigned[v] = false;
        self.b[v] = 0;
        None
    }

    fn consistent(&self, depth: usize, v: usize) -> bool {
        if self.checks[depth].iter().any(|&e| self.eqs[e].eval(&self.b) != 0) {
            return false;
        }
        // A fully assigned zero row or column makes A singular.
        let (r, c) = (v / 3, v % 3);
        let line_zero = |cells: [usize; 3]| cells.iter().all(|&x| self.assigned[x] && self.b[x] == 0);
        !(line_zero([cell(r, 0), cell(r, 1), cell(r, 2)]) || line_zero([cell(0, c), cell(1, c), cell(2, c)]))
    }
}

fn to_matrix(b: &[i64; 9], l: i64) -> Matrix3 {
    Matrix3::from_fn(|r, c| Rational::frac(b[cell(r, c)], l))
}

/// Bounded search for `A` with entries `p/q`, `|p| ≤ bound`, `q ∈ {1,2}`,
/// such that `transform(t1, A) = t2`. Candidates are enumerated
/// deterministically (identity first) and the first witness is returned;
/// `None` only means that no witness exists within the bound.
pub fn search_witness(t1: &ManinTriple, t2: &ManinTriple, bound: u32) -> Option<Matrix3> {
    search_witness_with(t1, t2, bound, &[1, 2])
}

/// As [`search_witness`], with entries `p/q` for `q` in `denominators`.
pub fn search_witness_with(t1: &ManinTriple, t2: &ManinTriple, bound: u32, denominators: &[u32]) -> Option<Matrix3> {
    let id = Matrix3::identity();
    if verify_witness(t1, t2, &id).unwrap_or(false) {
        return Some(id);
    }
    let dens: Vec<i64> = denominators.iter().map(|&q| i64::from(q.max(1))).collect();
    let l = dens.iter().fold(1i64, |acc, &q| num_integer::lcm(acc, q));
    let eqs = equations(t1, t2, i128::from(l))?;
    let eqs: Vec<Equation> = eqs.into_iter().filter(|e| !e.terms.is_empty()).collect();
    // Greedy static order: repeatedly take the variable that completes the
    // most equations, breaking ties by occurrence count, then by index.
    let mut order = Vec::with_capacity(9);
    let mut placed = [false; 9];
    for _ in 0..9 {
        let best = (0..9)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let completes = eqs
                    .iter()
                    .filter(|e| e.vars().any(|x| x == v) && e.vars().all(|x| x == v || placed[x]))
                    .count();
                let occurs = eqs.iter().filter(|e| e.vars().any(|x| x == v)).count();
                (completes, occurs, std::cmp::Reverse(v))
            })
            .expect("unplaced variable");
        placed[best] = true;
        order.push(best);
    }
    let pos: Vec<usize> = (0..9).map(|v| order.iter().position(|&x| x == v).unwrap()).collect();
    let mut checks = vec![Vec::new(); 9];
    for (n, e) in eqs.iter().enumerate() {
        let last = e.vars().map(|v| pos[v]).max().unwrap_or(0);
        checks[last].push(n);
    }
    let mut search = Search {
        eqs: &eqs,
        order,
        checks,
        values: candidate_values(bound as i64, &dens, l),
        b: [0; 9],
        assigned: [false; 9],
    };
    let b = search.run(0)?;
    let a = to_matrix(&b, l);
    // Exact re-verification in rational arithmetic.
    verify_witness(t1, t2, &a).ok()?.then_some(a)
}
