//! Bideterminants of a generic matrix, labeled by bitableaux, and the modules `D_λ`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::tableau::colex_cmp;
use crate::combinat::{enumerate_snct, enumerate_ssyt, is_semi_noncrossing, Partition, Tableau};
use crate::error::{Error, Result};
use crate::exactmath::{rank_of, LinComb, Monomial, SpanBasis};
use crate::{ExactPoly, Rational};

/// Multiset of indices, value to multiplicity.
pub type Content = BTreeMap<u32, usize>;

/// Largest matrix side handled by [`minor`]; Leibniz expansion is factorial.
pub const MAX_MINOR: usize = 8;

/// The matrix of independent symbols `x_{ij}`; `x_{ij}` is the variable `(i-1)*cols + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericMatrix {
    pub rows: u32,
    pub cols: u32,
}

impl GenericMatrix {
    pub fn new(rows: u32, cols: u32) -> Self {
        GenericMatrix { rows, cols }
    }

    pub fn var(&self, i: u32, j: u32) -> Result<u32> {
        if i == 0 || j == 0 || i > self.rows || j > self.cols {
            return Err(Error::OutOfRange(format!("x_{{{i},{j}}} outside a {}x{} matrix", self.rows, self.cols)));
        }
        Ok((i - 1) * self.cols + j)
    }

    /// Inverse of [`GenericMatrix::var`].
    pub fn position(&self, var: u32) -> (u32, u32) {
        ((var - 1) / self.cols + 1, (var - 1) % self.cols + 1)
    }

    pub fn entry(&self, i: u32, j: u32) -> Result<ExactPoly> {
        Ok(ExactPoly::var(self.var(i, j)?))
    }
}

/// Determinant of the submatrix on rows `rows` and columns `cols`, in the given orders.
pub fn minor(x: &GenericMatrix, rows: &[u32], cols: &[u32]) -> Result<ExactPoly> {
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch(format!("{} rows against {} columns", rows.len(), cols.len())));
    }
    if rows.len() > MAX_MINOR {
        return Err(Error::OutOfRange(format!("minor of size {} exceeds {MAX_MINOR}", rows.len())));
    }
    let vars: Vec<Vec<u32>> =
        rows.iter().map(|&i| cols.iter().map(|&j| x.var(i, j)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let mut out = ExactPoly::zero();
    let mut perm: Vec<usize> = (0..rows.len()).collect();
    let mut sign = 1i64;
    // Heap's algorithm flips the sign on every swap
    let mut c = vec![0usize; perm.len()];
    let mut add = |perm: &[usize], sign: i64| {
        let m = Monomial::from_pairs(perm.iter().enumerate().map(|(r, &k)| (vars[r][k], 1)));
        out.add_term(m, Rational::from_integer(sign.into()));
    };
    add(&perm, sign);
    let mut i = 1;
    while i < perm.len() {
        if c[i] < i {
            let k = if i % 2 == 0 { 0 } else { c[i] };
            perm.swap(k, i);
            sign = -sign;
            add(&perm, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

/// A pair of tableaux with matching columns; column `k` of the left tableau holds the row
/// indices and column `k` of the right one the column indices of one minor. Columns are
/// kept sorted by length (longest first), then left column, then right column, both colex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "BitableauJson", into = "BitableauJson")]
pub struct Bitableau {
    left: Tableau,
    right: Tableau,
}

#[derive(Serialize, Deserialize)]
struct BitableauJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shape: Option<Vec<usize>>,
    #[serde(rename = "T")]
    left: Vec<Vec<u32>>,
    #[serde(rename = "Tprime")]
    right: Vec<Vec<u32>>,
}

impl TryFrom<BitableauJson> for Bitableau {
    type Error = Error;

    fn try_from(j: BitableauJson) -> Result<Self> {
        let b = Bitableau::new(Tableau::new(j.left)?, Tableau::new(j.right)?)?;
        if let Some(shape) = j.shape {
            if Partition::new(shape.clone())? != b.shape() {
                return Err(Error::MalformedTableau(format!("declared shape {shape:?} does not match columns")));
            }
        }
        Ok(b)
    }
}

impl From<Bitableau> for BitableauJson {
    fn from(b: Bitableau) -> Self {
        BitableauJson {
            shape: Some(b.shape().parts().to_vec()),
            left: b.left.columns().to_vec(),
            right: b.right.columns().to_vec(),
        }
    }
}

fn pair_cmp(a: &(Vec<u32>, Vec<u32>), b: &(Vec<u32>, Vec<u32>)) -> Ordering {
    b.0.len().cmp(&a.0.len()).then_with(|| colex_cmp(&a.0, &b.0)).then_with(|| colex_cmp(&a.1, &b.1))
}

impl Bitableau {
    pub fn new(left: Tableau, right: Tableau) -> Result<Self> {
        if left.column_lengths() != right.column_lengths() {
            return Err(Error::DimensionMismatch(format!("{left} and {right} have different column lengths")));
        }
        let mut pairs: Vec<(Vec<u32>, Vec<u32>)> =
            left.columns().iter().cloned().zip(right.columns().iter().cloned()).collect();
        pairs.sort_by(pair_cmp);
        let (l, r): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        Ok(Bitableau { left: Tableau::new(l)?, right: Tableau::new(r)? })
    }

    /// Minors `(I, J)` listed as columns.
    pub fn from_pairs(pairs: &[(Vec<u32>, Vec<u32>)]) -> Result<Self> {
        let (l, r): (Vec<_>, Vec<_>) = pairs.iter().cloned().unzip();
        Bitableau::new(Tableau::new(l)?, Tableau::new(r)?)
    }

    pub fn left(&self) -> &Tableau {
        &self.left
    }

    pub fn right(&self) -> &Tableau {
        &self.right
    }

    pub fn shape(&self) -> Partition {
        self.left.shape()
    }

    pub fn size(&self) -> usize {
        self.left.size()
    }

    /// `(α, β)`: the row indices and the column indices used, with multiplicity.
    pub fn content(&self) -> (Content, Content) {
        (content_of(&self.left), content_of(&self.right))
    }

    /// Both sides semistandard in the stored column order.
    pub fn is_standard(&self) -> bool {
        self.left.is_semistandard() && self.right.is_semistandard()
    }

    /// Both sides semi-non-crossing, each in its canonical column order.
    pub fn is_noncrossing(&self) -> bool {
        self.left.is_canonical()
            && self.right.is_canonical()
            && is_semi_noncrossing(&self.left)
            && is_semi_noncrossing(&self.right)
    }

    /// Product of the column minors.
    pub fn bideterminant(&self, x: &GenericMatrix) -> Result<ExactPoly> {
        let mut out = ExactPoly::constant(Rational::from_integer(1.into()));
        for (i, j) in self.left.columns().iter().zip(self.right.columns()) {
            out = out * minor(x, i, j)?;
        }
        Ok(out)
    }

    /// The smallest matrix carrying every index.
    pub fn fitting_matrix(&self) -> GenericMatrix {
        GenericMatrix::new(self.left.max_entry().max(1), self.right.max_entry().max(1))
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .left
            .columns()
            .iter()
            .zip(self.right.columns())
            .map(|(i, j)| {
                let s = |c: &[u32]| c.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                format!("({}|{})", s(i), s(j))
            })
            .collect();
        write!(f, "[{}]", cols.join(""))
    }
}

fn content_of(t: &Tableau) -> Content {
    let mut c = Content::new();
    for &v in t.columns().iter().flatten() {
        *c.entry(v).or_default() += 1;
    }
    c
}

/// Multiplicities of `1..=max` as a weight vector.
pub fn weight_of(c: &Content) -> Vec<usize> {
    let max = c.keys().next_back().copied().unwrap_or(0);
    (1..=max).map(|v| c.get(&v).copied().unwrap_or(0)).collect()
}

pub fn content_from_values(values: &[u32]) -> Result<Content> {
    let mut c = Content::new();
    for &v in values {
        if v == 0 {
            return Err(Error::OutOfRange("indices start at 1".into()));
        }
        *c.entry(v).or_default() += 1;
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BitableauKind {
    Standard,
    Noncrossing,
}

fn fit_weight(w: &[usize], size: usize) -> Option<Vec<usize>> {
    (w.iter().sum::<usize>() == size).then(|| w.to_vec())
}

/// Bitableaux of shape `lambda` and content `(alpha, beta)` of the given kind, built from
/// semistandard or semi-non-crossing tableaux of each content.
pub fn enumerate_bitableaux(
    lambda: &Partition,
    alpha: &Content,
    beta: &Content,
    kind: BitableauKind,
) -> Result<Vec<Bitableau>> {
    let (Some(wa), Some(wb)) = (fit_weight(&weight_of(alpha), lambda.size()), fit_weight(&weight_of(beta), lambda.size()))
    else {
        return Ok(Vec::new());
    };
    let side = |w: &[usize]| -> Result<Vec<Tableau>> {
        match kind {
            BitableauKind::Standard => enumerate_ssyt(lambda, w),
            BitableauKind::Noncrossing => Ok(enumerate_snct(lambda, w)?.iter().map(Tableau::canonical).collect()),
        }
    };
    let (ls, rs) = (side(&wa)?, side(&wb)?);
    let mut out = Vec::with_capacity(ls.len() * rs.len());
    for l in &ls {
        for r in &rs {
            out.push(Bitableau::new(l.clone(), r.clone())?);
        }
    }
    Ok(out)
}

pub fn count_bitableaux(lambda: &Partition, alpha: &Content, beta: &Content, kind: BitableauKind) -> Result<usize> {
    Ok(enumerate_bitableaux(lambda, alpha, beta, kind)?.len())
}

/// Every bitableau of content `(alpha, beta)` of the given kind, over all shapes.
pub fn bitableaux_of_content(alpha: &Content, beta: &Content, kind: BitableauKind) -> Result<Vec<Bitableau>> {
    let n: usize = alpha.values().sum();
    if beta.values().sum::<usize>() != n {
        return Err(Error::WeightMismatch { weight: weight_of(beta), size: n });
    }
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        out.extend(enumerate_bitableaux(&lambda, alpha, beta, kind)?);
    }
    Ok(out)
}

/// Coordinates of a bideterminant in the bideterminants of the non-crossing bitableaux of
/// its content, by exact linear solve on the monomial expansion.
pub fn decompose_bideterminant(b: &Bitableau) -> Result<LinComb<Bitableau, Rational>> {
    let (alpha, beta) = b.content();
    let x = b.fitting_matrix();
    let family = bitableaux_of_content(&alpha, &beta, BitableauKind::Noncrossing)?;
    let vectors = family.iter().map(|f| Ok(f.bideterminant(&x)?.into_terms())).collect::<Result<Vec<_>>>()?;
    let span = SpanBasis::new(vectors)?;
    let coords = span.coordinates(b.bideterminant(&x)?.as_map()).ok_or(Error::NotInSpan)?;
    Ok(family.into_iter().zip(coords).collect())
}

pub fn realize(combo: &LinComb<Bitableau, Rational>, x: &GenericMatrix) -> Result<ExactPoly> {
    let mut out = ExactPoly::zero();
    for (b, c) in combo {
        out = out + b.bideterminant(x)?.scale(c);
    }
    Ok(out)
}

/// Exact rank of the bideterminants of a family.
pub fn bideterminant_rank(family: &[Bitableau], x: &GenericMatrix) -> Result<usize> {
    let vectors = family.iter().map(|f| Ok(f.bideterminant(x)?.into_terms())).collect::<Result<Vec<_>>>()?;
    Ok(rank_of(&vectors))
}

/// A matrix with repeated rows and columns so that a content becomes multiplicity free:
/// row `i` is taken `max(α(i), 1)` times and column `j` `max(β(j), 1)` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cloning {
    pub original: GenericMatrix,
    pub matrix: GenericMatrix,
    row_of: Vec<u32>,
    col_of: Vec<u32>,
    first_row: Vec<u32>,
    first_col: Vec<u32>,
}

impl Cloning {
    pub fn new(x: &GenericMatrix, alpha: &Content, beta: &Content) -> Result<Self> {
        let expand = |n: u32, c: &Content| -> Result<(Vec<u32>, Vec<u32>)> {
            if let Some((&v, _)) = c.range(n + 1..).next() {
                return Err(Error::OutOfRange(format!("index {v} outside the matrix")));
            }
            let (mut of, mut first) = (Vec::new(), Vec::new());
            for i in 1..=n {
                first.push(of.len() as u32 + 1);
                of.extend(std::iter::repeat_n(i, c.get(&i).copied().unwrap_or(0).max(1)));
            }
            Ok((of, first))
        };
        let (row_of, first_row) = expand(x.rows, alpha)?;
        let (col_of, first_col) = expand(x.cols, beta)?;
        let matrix = GenericMatrix::new(row_of.len() as u32, col_of.len() as u32);
        Ok(Cloning { original: *x, matrix, row_of, col_of, first_row, first_col })
    }

    /// Original row of every row of the clone.
    pub fn row_of(&self) -> &[u32] {
        &self.row_of
    }

    pub fn col_of(&self) -> &[u32] {
        &self.col_of
    }

    /// Writes `b` on the clone, the `k`-th occurrence of an index (in column order) going to
    /// its `k`-th copy.
    pub fn lift(&self, b: &Bitableau) -> Result<Bitableau> {
        let relabel = |t: &Tableau, first: &[u32]| -> Result<Tableau> {
            let mut used: BTreeMap<u32, u32> = BTreeMap::new();
            let cols = t
                .columns()
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&v| {
                            let k = used.entry(v).or_default();
                            *k += 1;
                            first.get(v as usize - 1).map(|f| f + *k - 1).ok_or_else(|| {
                                Error::OutOfRange(format!("index {v} outside the matrix"))
                            })
                        })
                        .collect::<Result<Vec<u32>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Tableau::new(cols)
        };
        Bitableau::new(relabel(&b.left, &self.first_row)?, relabel(&b.right, &self.first_col)?)
    }

    /// Identifies cloned indices; `None` when a minor would repeat a row or a column. Copies
    /// are numbered in the order of their originals, so no column gets re-sorted.
    pub fn specialize(&self, b: &Bitableau) -> Option<Bitableau> {
        let (l, _) = b.left.relabel(|v| self.row_of[v as usize - 1]).ok()?;
        let (r, _) = b.right.relabel(|v| self.col_of[v as usize - 1]).ok()?;
        Bitableau::new(l, r).ok()
    }

    /// Substitutes every cloned symbol by its original.
    pub fn specialize_poly(&self, p: &ExactPoly) -> ExactPoly {
        p.map_vars(|v| {
            let (i, j) = self.matrix.position(v);
            self.original.var(self.row_of[i as usize - 1], self.col_of[j as usize - 1]).expect("inside")
        })
    }
}

/// `T_λ`: row `i` filled with `i`.
pub fn row_filled(lambda: &Partition) -> Tableau {
    Tableau::new(lambda.column_lengths().iter().map(|&k| (1..=k as u32).collect()).collect()).expect("columns 1..k")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlReport {
    pub lambda: Partition,
    pub n: u32,
    pub r: u32,
    pub ssyt_count: usize,
    pub ssyt_rank: usize,
    pub noncrossing_count: usize,
    pub noncrossing_rank: usize,
    /// Rank of both families together; equal to the counts when they span the same space.
    pub joint_rank: usize,
}

impl GlReport {
    pub fn holds(&self) -> bool {
        self.ssyt_rank == self.ssyt_count
            && self.noncrossing_rank == self.noncrossing_count
            && self.noncrossing_count == self.ssyt_count
            && self.joint_rank == self.ssyt_count
    }
}

/// Weights of length `parts` with nonnegative entries summing to `total`.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The `M_T = (T_λ | T)` with `T` semistandard, respectively semi-non-crossing, with entries
/// at most `r`.
pub fn gl_families(lambda: &Partition, r: u32) -> Result<(Vec<Bitableau>, Vec<Bitableau>)> {
    let top = row_filled(lambda);
    let (mut ssyt, mut nc) = (Vec::new(), Vec::new());
    for w in weak_compositions(lambda.size(), r as usize) {
        for t in enumerate_ssyt(lambda, &w)? {
            ssyt.push(Bitableau::new(top.clone(), t)?);
        }
        for t in enumerate_snct(lambda, &w)? {
            nc.push(Bitableau::new(top.clone(), t.canonical())?);
        }
    }
    Ok((ssyt, nc))
}

/// Ranks of both labelings of `D_λ` inside the polynomials on an `n x r` matrix.
pub fn gl_module_basis(lambda: &Partition, n: u32, r: u32) -> Result<GlReport> {
    if lambda.num_rows() > n as usize {
        return Err(Error::TooTall { shape: lambda.parts().to_vec(), rows: n as usize });
    }
    let x = GenericMatrix::new(n, r);
    let (ssyt, nc) = gl_families(lambda, r)?;
    let mut both = ssyt.clone();
    both.extend(nc.iter().cloned());
    Ok(GlReport {
        lambda: lambda.clone(),
        n,
        r,
        ssyt_count: ssyt.len(),
        ssyt_rank: bideterminant_rank(&ssyt, &x)?,
        noncrossing_count: nc.len(),
        noncrossing_rank: bideterminant_rank(&nc, &x)?,
        joint_rank: bideterminant_rank(&both, &x)?,
    })
}

#[cfg(test)]
mod tests;
