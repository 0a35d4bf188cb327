//! Dense matrices over T_max and S_max.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{balances, Semiring, SScalar, Sign, TScalar};
use crate::value::ValueGroup;

/// Default largest size accepted by [`SMatrix::determinant`].
pub const DEFAULT_SIZE_LIMIT: usize = 10;

/// Environment variable overriding [`DEFAULT_SIZE_LIMIT`].
pub const SIZE_LIMIT_VAR: &str = "TROPLECTRA_SIZE_LIMIT";

pub fn size_limit() -> usize {
    std::env::var(SIZE_LIMIT_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_LIMIT)
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type SMatrix<G> = Matrix<SScalar<G>>;
pub type TMatrix<G> = Matrix<TScalar<G>>;
pub type SVector<G> = Vec<SScalar<G>>;

impl<T: Semiring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
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

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Semiring>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)]);
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    /// Drops row `i` and column `j`.
    pub fn minor_matrix(&self, i: usize, j: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(x).fold(T::zero(), |acc, (&a, &b)| acc.add(a.mul(b)))
            })
            .collect())
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|x| s.mul(x))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut result = Self::identity(n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Arc list of the weighted digraph: one arc `i -> j` per non-zero entry.
    pub fn graph_edges(&self) -> Vec<(usize, usize, T)> {
        let mut edges = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let w = self[(i, j)];
                if !w.is_zero() {
                    edges.push((i, j, w));
                }
            }
        }
        edges
    }

    /// Strong connectivity of the support graph. A 1x1 matrix counts as
    /// irreducible.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = self.require_square()?;
        if n <= 1 {
            return Ok(true);
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    let w = if forward { self[(u, v)] } else { self[(v, u)] };
                    if !seen[v] && !w.is_zero() {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        Ok(reach(true) && reach(false))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// assignment problem

/// Maximum-weight perfect assignment on a square weight table where `None`
/// marks a forbidden pair. Returns the optimal total and the column chosen
/// for each row, or `None` when every assignment uses a forbidden pair.
pub fn max_assignment<G: ValueGroup>(w: &[Vec<Option<G>>]) -> Option<(G, Vec<usize>)> {
    let n = w.len();
    if n == 0 {
        return Some((G::zero(), Vec::new()));
    }
    // Forbidden pairs get a cost no feasible assignment can reach.
    let spread = w
        .iter()
        .flatten()
        .flatten()
        .fold(G::one(), |acc, &x| acc + x.abs());
    let big = spread * G::from_int(n as i64 + 1);
    let cost = |i: usize, j: usize| -> G { w[i][j].map_or(big, |x| -x) };

    // Potentials-based Hungarian method, 1-indexed with a dummy column 0.
    let mut u = vec![G::zero(); n + 1];
    let mut v = vec![G::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<G>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<G> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if minv[j].map_or(true, |m| cur < m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].expect("set above");
                if delta.map_or(true, |d| mj < d) {
                    delta = Some(mj);
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] = u[p[j]] + delta;
                    v[j] = v[j] - delta;
                } else if let Some(m) = minv[j] {
                    minv[j] = Some(m - delta);
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; n];
    for j in 1..=n {
        assign[p[j] - 1] = j - 1;
    }
    let mut total = G::zero();
    for (i, &j) in assign.iter().enumerate() {
        total = total + w[i][j]?;
    }
    Some((total, assign))
}

impl<G: ValueGroup> TMatrix<G> {
    fn weight_table(&self) -> Vec<Vec<Option<G>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(TScalar::value).collect()).collect()
    }

    /// Tropical permanent: the best permutation weight.
    pub fn permanent(&self) -> Result<TScalar<G>> {
        self.require_square()?;
        Ok(max_assignment(&self.weight_table()).map_or(TScalar::Bottom, |(v, _)| TScalar::Val(v)))
    }

    /// Largest cycle mean of the weighted digraph, `Bottom` when acyclic.
    pub fn max_cycle_mean(&self) -> Result<TScalar<G>> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(TScalar::Bottom);
        }
        // d[k][v]: heaviest walk of exactly k arcs ending at v, from any start.
        let mut d: Vec<Vec<Option<G>>> = vec![vec![Some(G::zero()); n]];
        for k in 1..=n {
            let prev = &d[k - 1];
            let mut cur = vec![None; n];
            for u in 0..n {
                let Some(du) = prev[u] else { continue };
                for v in 0..n {
                    if let TScalar::Val(w) = self[(u, v)] {
                        let cand = du + w;
                        if cur[v].map_or(true, |c: G| cand > c) {
                            cur[v] = Some(cand);
                        }
                    }
                }
            }
            d.push(cur);
        }
        let mut best: Option<G> = None;
        for v in 0..n {
            let Some(dn) = d[n][v] else { continue };
            let worst = (0..n)
                .filter_map(|k| d[k][v].map(|dk| (dn - dk) / G::from_int((n - k) as i64)))
                .fold(None, |acc: Option<G>, x| Some(acc.map_or(x, |a| if x < a { x } else { a })));
            if let Some(x) = worst {
                if best.map_or(true, |b| x > b) {
                    best = Some(x);
                }
            }
        }
        Ok(best.map_or(TScalar::Bottom, TScalar::Val))
    }

    pub fn to_s(&self) -> SMatrix<G> {
        self.map(|x| x.to_s())
    }
}

// ---------------------------------------------------------------------------
// S_max specifics

impl<G: ValueGroup> SMatrix<G> {
    /// Entrywise modulus `|A|`.
    pub fn modulus(&self) -> TMatrix<G> {
        self.map(|x| x.modulus())
    }

    pub fn negate(&self) -> Self {
        self.map(|x| x.negate())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub fn all_signed(&self) -> bool {
        self.data.iter().all(SScalar::is_signed)
    }

    /// Signed tropical determinant by permutation expansion, with branches
    /// cut when even an optimal completion cannot reach the current sum.
    pub fn determinant(&self) -> Result<SScalar<G>> {
        self.determinant_with_limit(size_limit())
    }

    pub fn determinant_with_limit(&self, limit: usize) -> Result<SScalar<G>> {
        let n = self.require_square()?;
        if n > limit {
            return Err(Error::SizeLimitExceeded { n, limit });
        }
        Ok(self.det_unchecked())
    }

    fn det_unchecked(&self) -> SScalar<G> {
        let n = self.rows;
        match n {
            0 => return SScalar::one(),
            1 => return self.data[0],
            2 => {
                let a = self.data[0].mul(self.data[3]);
                let b = self.data[1].mul(self.data[2]);
                return a.sub(b);
            }
            _ => {}
        }
        let weights: Vec<Vec<Option<G>>> =
            (0..n).map(|i| self.row(i).iter().map(SScalar::magnitude).collect()).collect();
        let Some((per, _)) = max_assignment(&weights) else {
            return SScalar::Zero;
        };
        // Columns of each row, heaviest first.
        let order: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut cs: Vec<usize> = (0..n).filter(|&j| weights[i][j].is_some()).collect();
                cs.sort_by(|&a, &b| {
                    weights[i][b].partial_cmp(&weights[i][a]).unwrap_or(Ordering::Equal)
                });
                cs
            })
            .collect();
        let mut search = DetSearch {
            n,
            weights: &weights,
            order: &order,
            signs: (0..n)
                .map(|i| self.row(i).iter().map(|x| x.sign().unwrap_or(Sign::Pos)).collect())
                .collect(),
            per,
            acc: SScalar::Zero,
            used: vec![false; n],
            done: false,
        };
        search.descend(0, Sign::Pos, G::zero(), false);
        search.acc
    }

    /// `adj(A)[i][j] = (⊖𝟙)^{i+j} det(A with row j and column i removed)`.
    pub fn adjugate(&self) -> Result<Self> {
        let n = self.require_square()?;
        let limit = size_limit();
        if n > limit + 1 {
            return Err(Error::SizeLimitExceeded { n: n - 1, limit });
        }
        let mut adj = Self::zeros(n, n);
        if n == 1 {
            adj[(0, 0)] = SScalar::one();
            return Ok(adj);
        }
        for j in 0..n {
            let col = self.adjugate_column(j)?;
            for i in 0..n {
                adj[(i, j)] = col[i];
            }
        }
        Ok(adj)
    }

    /// Column `j` of the adjugate, without computing the rest.
    pub fn adjugate_column(&self, j: usize) -> Result<SVector<G>> {
        let n = self.require_square()?;
        if j >= n {
            return Err(Error::BadK { k: j + 1, n });
        }
        if n == 1 {
            return Ok(vec![SScalar::one()]);
        }
        let limit = size_limit();
        (0..n)
            .map(|i| {
                let d = self.minor_matrix(j, i).determinant_with_limit(limit)?;
                Ok(SScalar::minus_one_pow(i + j).mul(d))
            })
            .collect()
    }

    /// k-th compound: all k×k minors, rows and columns indexed by the
    /// k-subsets of `0..n` in lexicographic order.
    pub fn compound(&self, k: usize) -> Result<Self> {
        let n = self.require_square()?;
        if k > n {
            return Err(Error::BadK { k, n });
        }
        let subsets = k_subsets(n, k);
        let m = subsets.len();
        let mut out = Self::zeros(m, m);
        for (a, rows) in subsets.iter().enumerate() {
            for (b, cols) in subsets.iter().enumerate() {
                out[(a, b)] = self.submatrix(rows, cols).determinant()?;
            }
        }
        Ok(out)
    }

    /// `tr_k A`: sum of the principal k×k minors.
    pub fn trace_k(&self, k: usize) -> Result<SScalar<G>> {
        let n = self.require_square()?;
        if k > n {
            return Err(Error::BadK { k, n });
        }
        let mut acc = SScalar::Zero;
        for s in k_subsets(n, k) {
            acc = acc.add(self.submatrix(&s, &s).determinant()?);
        }
        Ok(acc)
    }

    /// `A* = I ⊕ A ⊕ A² ⊕ …`, obtained by squaring `I ⊕ A` until it stops
    /// changing. Requires every cycle mean of `|A|` to be at most `𝟙`.
    pub fn kleene_star(&self) -> Result<Self> {
        let n = self.require_square()?;
        let mcm = self.modulus().max_cycle_mean()?;
        if mcm.compare(&TScalar::one()) == Ordering::Greater {
            return Err(Error::StarDiverges(mcm.to_string()));
        }
        let distinct: BTreeSet<String> =
            self.data.iter().filter_map(|x| x.magnitude()).map(|m| m.to_string()).collect();
        let cap = n * distinct.len() + n + 1;
        let mut s = Self::identity(n).add(self)?;
        for _ in 0..cap {
            let next = s.mul(&s)?;
            if next == s {
                return Ok(s);
            }
            s = next;
        }
        Err(Error::NoStabilization(cap))
    }

    /// Signed solution of `A x ∇ b` through Cramer's formula. Requires an
    /// invertible determinant and a fully signed `A^adj b`.
    pub fn cramer_solve(&self, b: &[SScalar<G>]) -> Result<SVector<G>> {
        let n = self.require_square()?;
        if b.len() != n {
            return Err(Error::ShapeMismatch(format!("rhs of length {} for n = {n}", b.len())));
        }
        let d = self.determinant()?;
        let dinv = d.inverse().map_err(|_| Error::SingularOrBalanced)?;
        let y = self.adjugate()?.mul_vec(b)?;
        if y.iter().any(SScalar::is_balanced) {
            return Err(Error::UnsignedRHS);
        }
        Ok(y.into_iter().map(|v| dinv.mul(v)).collect())
    }

    /// A signed `x` with `A x ∇ b` and `|x| = |det A|^{-1} |A^adj b|`.
    ///
    /// Coordinates whose sign is not forced are tried in index order,
    /// positive first, so the result is deterministic.
    pub fn signed_solution(&self, b: &[SScalar<G>]) -> Result<SVector<G>> {
        let n = self.require_square()?;
        if b.len() != n {
            return Err(Error::ShapeMismatch(format!("rhs of length {} for n = {n}", b.len())));
        }
        let d = self.determinant()?;
        let Some(dmag) = d.magnitude() else {
            return Err(Error::ZeroDeterminant);
        };
        let y = self.adjugate()?.mul_vec(b)?;
        let mut x: SVector<G> = vec![SScalar::Zero; n];
        let mut free = Vec::new();
        for i in 0..n {
            match y[i] {
                SScalar::Zero => {}
                SScalar::Val(s, m) => {
                    let mag = m - dmag;
                    match (d.sign(), s) {
                        (Some(Sign::Bal), _) | (_, Sign::Bal) => {
                            x[i] = SScalar::pos(mag);
                            free.push(i);
                        }
                        _ => x[i] = d.inverse().expect("signed").mul(SScalar::Val(s, m)),
                    }
                }
            }
        }
        let k = free.len();
        if k >= 63 {
            return Err(Error::UnsupportedCase(format!("{k} free signs")));
        }
        for mask in 0u64..(1u64 << k) {
            for (bit, &i) in free.iter().enumerate() {
                // The first free coordinate is the most significant bit.
                let negative = mask >> (k - 1 - bit) & 1 == 1;
                let m = x[i].magnitude().expect("free coordinates are non-zero");
                x[i] = if negative { SScalar::neg(m) } else { SScalar::pos(m) };
            }
            if solves(self, &x, b)? {
                return Ok(x);
            }
        }
        Err(Error::SearchExhausted)
    }
}

/// `A x ∇ b` coordinatewise.
pub fn solves<G: ValueGroup>(a: &SMatrix<G>, x: &[SScalar<G>], b: &[SScalar<G>]) -> Result<bool> {
    Ok(a.mul_vec(x)?.iter().zip(b).all(|(&l, &r)| balances(l, r)))
}

/// Lexicographically ordered k-subsets of `0..n`.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

struct DetSearch<'a, G> {
    n: usize,
    weights: &'a [Vec<Option<G>>],
    order: &'a [Vec<usize>],
    signs: Vec<Vec<Sign>>,
    per: G,
    acc: SScalar<G>,
    used: Vec<bool>,
    done: bool,
}

impl<G: ValueGroup> DetSearch<'_, G> {
    fn descend(&mut self, row: usize, sign: Sign, mag: G, odd: bool) {
        if self.done {
            return;
        }
        if row == self.n {
            let s = if odd { sign.flip() } else { sign };
            self.acc = self.acc.add(SScalar::Val(s, mag));
            // A balanced sum at the permanent can no longer change.
            if self.acc.is_balanced() && self.acc.magnitude().expect("non-zero").approx_eq(&self.per)
            {
                self.done = true;
            }
            return;
        }
        for idx in 0..self.order[row].len() {
            let c = self.order[row][idx];
            if self.used[c] {
                continue;
            }
            let w = self.weights[row][c].expect("ordered columns are non-zero");
            let new_mag = mag + w;
            self.used[c] = true;
            let bound = self.completion_bound(row + 1);
            let keep = match bound {
                None => false,
                Some(b) => match self.acc.magnitude() {
                    None => true,
                    Some(am) => (new_mag + b).compare(&am) != Ordering::Less,
                },
            };
            if keep {
                let inversions = self.used[c + 1..].iter().filter(|&&u| u).count();
                let entry_sign = self.signs[row][c];
                self.descend(row + 1, sign.times(entry_sign), new_mag, odd ^ (inversions % 2 == 1));
            }
            self.used[c] = false;
            if self.done {
                return;
            }
        }
    }

    /// Best weight of any completion of rows `row..` on the unused columns.
    fn completion_bound(&self, row: usize) -> Option<G> {
        let cols: Vec<usize> = (0..self.n).filter(|&c| !self.used[c]).collect();
        match self.n - row {
            0 => Some(G::zero()),
            1 => self.weights[row][cols[0]],
            _ => {
                let table: Vec<Vec<Option<G>>> =
                    (row..self.n).map(|i| cols.iter().map(|&c| self.weights[i][c]).collect()).collect();
                max_assignment(&table).map(|(v, _)| v)
            }
        }
    }

}
