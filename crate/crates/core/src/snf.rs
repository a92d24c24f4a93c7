//! Integer matrices and their invariant factors.
//!
//! Smith normal form is computed by unimodular row and column elimination.
//! The pivot is always the nonzero entry of least absolute value, ties broken
//! by smallest row and then smallest column. Elimination runs on a sparse
//! row-map representation and switches to a dense array once the active
//! block is more than 30% full. Entries are machine integers with checked
//! arithmetic; on overflow the computation restarts over big integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix, one sorted `(column, value)` list per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1,
            Err(_) => 0,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) if v == 0 => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = v,
            Err(k) if v != 0 => row.insert(k, (j, v)),
            Err(_) => {}
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: i64) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                t.data[j].push((i, v));
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, a) in row {
                for &(j, b) in &rhs.data[k] {
                    *acc.entry(j).or_insert(0) += a * b;
                }
            }
            out.data[i] = acc.into_iter().filter(|e| e.1 != 0).collect();
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_r`, all positive.
    pub invariant_factors: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let diagonal = match eliminate::<i64>(m) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => eliminate::<BigInt>(m).expect("big integer elimination cannot overflow"),
    };
    Snf { invariant_factors: divisor_chain(diagonal) }
}

/// Turns a diagonal into the equivalent divisibility chain by repeatedly
/// replacing pairs with their gcd and lcm.
fn divisor_chain(diagonal: Vec<BigInt>) -> Vec<BigInt> {
    let mut ones = 0usize;
    let mut rest: Vec<BigInt> = Vec::new();
    for d in diagonal {
        let d = d.abs();
        if d.is_one() { ones += 1 } else { rest.push(d) }
    }
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            let l = &rest[i] / &g * &rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigInt::one(); ones];
    for d in rest {
        if d.is_one() { out.insert(0, d) } else { out.push(d) }
    }
    out
}

/// Ring element used during elimination; `None` signals overflow.
trait Entry: Clone + PartialEq + fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// Truncated quotient `self / p`.
    fn quot(&self, p: &Self) -> Option<Self>;
    /// `self - q * x`.
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quot(&self, p: &Self) -> Option<Self> {
        self.checked_div(*p)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn quot(&self, p: &Self) -> Option<Self> {
        Some(self / p)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
}

const DENSE_FILL: f64 = 0.30;

/// Diagonalizes `m`; returns the pivots in elimination order.
fn eliminate<T: Entry>(m: &IntMatrix) -> Option<Vec<T>> {
    let mut sparse = Sparse::<T>::new(m);
    let mut pivots = Vec::new();
    loop {
        if sparse.fill() > DENSE_FILL {
            let mut dense = sparse.into_dense();
            dense.run(&mut pivots)?;
            return Some(pivots);
        }
        let Some((r, c)) = sparse.pivot() else {
            return Some(pivots);
        };
        if sparse.reduce(r, c)? {
            pivots.push(sparse.take(r, c));
        }
    }
}

struct Sparse<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
    active_rows: usize,
    active_cols: usize,
    nnz: usize,
}

impl<T: Entry> Sparse<T> {
    fn new(m: &IntMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.rows];
        let mut cols = vec![BTreeSet::new(); m.cols];
        for (i, row) in m.data.iter().enumerate() {
            for &(j, v) in row {
                rows[i].insert(j, T::from_i64(v));
                cols[j].insert(i);
            }
        }
        let nnz = m.nnz();
        Sparse { rows, cols, active_rows: m.rows, active_cols: m.cols, nnz }
    }

    fn fill(&self) -> f64 {
        let area = self.active_rows * self.active_cols;
        if area == 0 { 0.0 } else { self.nnz as f64 / area as f64 }
    }

    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &T)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                if v.is_unit() {
                    return Some((i, j));
                }
                if best.is_none_or(|b| v.abs_lt(b.2)) {
                    best = Some((i, j, v));
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        if v.is_zero() {
            if self.rows[i].remove(&j).is_some() {
                self.cols[j].remove(&i);
                self.nnz -= 1;
            }
        } else if self.rows[i].insert(j, v).is_none() {
            self.cols[j].insert(i);
            self.nnz += 1;
        }
    }

    /// Clears column `c` and row `r` around the pivot as far as division
    /// allows. Returns true when only the pivot is left in both.
    fn reduce(&mut self, r: usize, c: usize) -> Option<bool> {
        let p = self.rows[r][&c].clone();
        let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != r).collect();
        let pivot_row: Vec<(usize, T)> = self.rows[r].iter().map(|(j, v)| (*j, v.clone())).collect();
        for i in others {
            let q = self.rows[i][&c].quot(&p)?;
            if q.is_zero() {
                continue;
            }
            for (j, v) in &pivot_row {
                let cur = self.rows[i].get(j).cloned().unwrap_or_else(|| T::from_i64(0));
                let next = cur.sub_mul(&q, v)?;
                self.set(i, *j, next);
            }
        }
        let others: Vec<usize> = self.rows[r].keys().copied().filter(|&j| j != c).collect();
        let pivot_col: Vec<(usize, T)> = self.cols[c].iter().map(|&i| (i, self.rows[i][&c].clone())).collect();
        for j in others {
            let q = self.rows[r][&j].quot(&p)?;
            if q.is_zero() {
                continue;
            }
            for (i, v) in &pivot_col {
                let cur = self.rows[*i].get(&j).cloned().unwrap_or_else(|| T::from_i64(0));
                let next = cur.sub_mul(&q, v)?;
                self.set(*i, j, next);
            }
        }
        Some(self.rows[r].len() == 1 && self.cols[c].len() == 1)
    }

    fn take(&mut self, r: usize, c: usize) -> T {
        let p = self.rows[r].remove(&c).expect("pivot present");
        self.cols[c].remove(&r);
        self.nnz -= 1;
        self.active_rows -= 1;
        self.active_cols -= 1;
        p
    }

    fn into_dense(self) -> Dense<T> {
        let live_rows: Vec<usize> = (0..self.rows.len()).filter(|&i| !self.rows[i].is_empty()).collect();
        let live_cols: Vec<usize> = (0..self.cols.len()).filter(|&j| !self.cols[j].is_empty()).collect();
        let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut a = vec![vec![None; live_cols.len()]; live_rows.len()];
        for (k, &i) in live_rows.iter().enumerate() {
            for (j, v) in &self.rows[i] {
                a[k][col_pos[j]] = Some(v.clone());
            }
        }
        Dense { a }
    }
}

struct Dense<T> {
    a: Vec<Vec<Option<T>>>,
}

impl<T: Entry> Dense<T> {
    fn run(&mut self, pivots: &mut Vec<T>) -> Option<()> {
        let mut rows: Vec<usize> = (0..self.a.len()).collect();
        let mut cols: Vec<usize> = (0..self.a.first().map_or(0, Vec::len)).collect();
        loop {
            let Some((r, c)) = self.pivot(&rows, &cols) else {
                return Some(());
            };
            let p = self.a[r][c].clone().expect("pivot present");
            for &i in &rows {
                if i == r {
                    continue;
                }
                let Some(x) = &self.a[i][c] else { continue };
                let q = x.quot(&p)?;
                if q.is_zero() {
                    continue;
                }
                for &j in &cols {
                    if let Some(v) = self.a[r][j].clone() {
                        let cur = self.a[i][j].clone().unwrap_or_else(|| T::from_i64(0));
                        let next = cur.sub_mul(&q, &v)?;
                        self.a[i][j] = (!next.is_zero()).then_some(next);
                    }
                }
            }
            for &j in &cols {
                if j == c {
                    continue;
                }
                let Some(x) = &self.a[r][j] else { continue };
                let q = x.quot(&p)?;
                if q.is_zero() {
                    continue;
                }
                for &i in &rows {
                    if let Some(v) = self.a[i][c].clone() {
                        let cur = self.a[i][j].clone().unwrap_or_else(|| T::from_i64(0));
                        let next = cur.sub_mul(&q, &v)?;
                        self.a[i][j] = (!next.is_zero()).then_some(next);
                    }
                }
            }
            let row_clear = cols.iter().all(|&j| j == c || self.a[r][j].is_none());
            let col_clear = rows.iter().all(|&i| i == r || self.a[i][c].is_none());
            if row_clear && col_clear {
                pivots.push(self.a[r][c].take().expect("pivot present"));
                rows.retain(|&i| i != r);
                cols.retain(|&j| j != c);
            }
        }
    }

    fn pivot(&self, rows: &[usize], cols: &[usize]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &T)> = None;
        for &i in rows {
            for &j in cols {
                if let Some(v) = &self.a[i][j] {
                    if v.is_unit() {
                        return Some((i, j));
                    }
                    if best.is_none_or(|b| v.abs_lt(b.2)) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }
}
