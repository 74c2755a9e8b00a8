//! Superspaces, the parity-reversal functor, subspaces, linear maps, and
//! homogeneous bilinear forms.
//!
//! The Gram convention is `B[i][j] = (-1)^{|w||v_i|} w(v_i, v_j)` for a
//! homogeneous form `w`, and the wedge of dual basis vectors is
//! `a ^ b := a (x) b - (-1)^{|a||b|} b (x) a` paired through
//! `<e_i* (x) e_j*, e_k (x) e_l> = (-1)^{|e_k||e_j|} d_ik d_jl`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Z_2 degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Mod-2 addition of degrees.
    pub fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// `(-1)^{|a||b|}` as a sign.
pub fn sign(a: Parity, b: Parity) -> i8 {
    if a == Parity::Odd && b == Parity::Odd {
        -1
    } else {
        1
    }
}

pub fn apply_sign(s: i8, x: &Scalar) -> Scalar {
    if s < 0 {
        x.neg_ref()
    } else {
        x.clone()
    }
}

/// A finite ordered basis with parities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperSpace {
    pub name: String,
    pub basis: Vec<(String, Parity)>,
}

impl SuperSpace {
    pub fn new(name: impl Into<String>, basis: Vec<(String, Parity)>) -> Self {
        let space = SuperSpace {
            name: name.into(),
            basis,
        };
        let mut labels: Vec<&String> = space.basis.iter().map(|(l, _)| l).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), space.basis.len(), "duplicate basis labels");
        space
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Superdimension (count even, count odd).
    pub fn sdim(&self) -> (usize, usize) {
        let even = self
            .basis
            .iter()
            .filter(|(_, p)| *p == Parity::Even)
            .count();
        (even, self.dim() - even)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].0
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|(l, _)| l == label)
    }

    /// The dual space; dual basis vectors inherit the parity of their
    /// originals and are labelled with a trailing `*`.
    pub fn dual(&self) -> SuperSpace {
        SuperSpace {
            name: format!("{}*", self.name),
            basis: self
                .basis
                .iter()
                .map(|(l, p)| (format!("{l}*"), *p))
                .collect(),
        }
    }
}

/// Parity reversal. Applying it twice returns a space identified with the
/// original: labels `Pi(x)` unwrap back to `x`.
pub fn parity_shift(space: &SuperSpace) -> SuperSpace {
    let unwrap = |l: &str| -> Option<String> {
        l.strip_prefix("Pi(")
            .and_then(|r| r.strip_suffix(')'))
            .map(|r| r.to_string())
    };
    SuperSpace {
        name: match unwrap(&space.name) {
            Some(n) => n,
            None => format!("Pi({})", space.name),
        },
        basis: space
            .basis
            .iter()
            .map(|(l, p)| {
                (
                    match unwrap(l) {
                        Some(inner) => inner,
                        None => format!("Pi({l})"),
                    },
                    p.flip(),
                )
            })
            .collect(),
    }
}

/// Coordinates of a vector in the basis of some superspace.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    pub coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Scalar::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(dim);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a.neg_ref()).collect(),
        }
    }

    /// Homogeneous iff all nonzero coordinates sit on one parity; returns
    /// that parity (zero vectors report as even).
    pub fn homogeneous_parity(&self, space: &SuperSpace) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                match found {
                    None => found = Some(space.parity(i)),
                    Some(p) if p != space.parity(i) => return None,
                    _ => {}
                }
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn describe(&self, space: &SuperSpace) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({})*{}", c, space.label(i)));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// exact linear algebra over the scalar field
// ---------------------------------------------------------------------------

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form; returns (rows without zero rows, pivot columns).
pub fn rref(matrix: &[Vec<Scalar>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = m[r][j].mul_ref(&f);
                    m[i][j] = m[i][j].sub_ref(&delta);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(matrix: &[Vec<Scalar>]) -> usize {
    rref(matrix).0.len()
}

/// Basis of the right nullspace of `matrix` (solutions of Ax = 0).
pub fn nullspace(matrix: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(matrix);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = row[f].neg_ref();
        }
        basis.push(v);
    }
    basis
}

/// Solves Ax = b exactly; `None` when inconsistent. Free variables are zero.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    if a.is_empty() {
        return Some(vec![]);
    }
    let (r, pivots) = {
        let (m, p) = rref(&aug);
        aug = m;
        (aug, p)
    };
    // inconsistent iff a pivot lands in the augmented column
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

/// Determinant by Gaussian elimination over the scalar field.
pub fn determinant(matrix: &[Vec<Scalar>]) -> Scalar {
    let n = matrix.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut m: Matrix = matrix.to_vec();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if pr != c {
            m.swap(c, pr);
            det = det.neg_ref();
        }
        det = det.mul_ref(&m[c][c]);
        let inv = m[c][c].recip().expect("pivot is nonzero");
        for i in (c + 1)..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].mul_ref(&inv);
                for j in c..n {
                    let delta = m[c][j].mul_ref(&f);
                    m[i][j] = m[i][j].sub_ref(&delta);
                }
            }
        }
    }
    det
}

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for t in 0..k {
                        acc = acc.add_ref(&a[i][t].mul_ref(&b[t][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// subspaces
// ---------------------------------------------------------------------------

/// A subspace stored as exact reduced-row-echelon coefficient rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SubSpace {
    pub ambient: Arc<SuperSpace>,
    pub rows: Matrix,
}

impl SubSpace {
    pub fn from_rows(ambient: Arc<SuperSpace>, rows: &[Vec<Scalar>]) -> Self {
        let (rows, _) = rref(rows);
        SubSpace { ambient, rows }
    }

    pub fn from_vectors(ambient: Arc<SuperSpace>, vectors: &[Vector]) -> Self {
        let rows: Matrix = vectors.iter().map(|v| v.coords.clone()).collect();
        SubSpace::from_rows(ambient, &rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut stacked = self.rows.clone();
        stacked.push(v.coords.clone());
        rank(&stacked) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &SubSpace) -> bool {
        self.rows
            .iter()
            .all(|r| other.contains(&Vector::from_coords(r.clone())))
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|r| Vector::from_coords(r.clone()))
            .collect()
    }
}

impl fmt::Debug for SubSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let descr: Vec<String> = self
            .row_vectors()
            .iter()
            .map(|v| v.describe(&self.ambient))
            .collect();
        write!(f, "span{{{}}}", descr.join(", "))
    }
}

// ---------------------------------------------------------------------------
// linear maps
// ---------------------------------------------------------------------------

/// A homogeneous linear map; `matrix` is codomain-dim x domain-dim, columns
/// are images of domain basis vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub domain: Arc<SuperSpace>,
    pub codomain: Arc<SuperSpace>,
    pub matrix: Matrix,
    pub parity: Parity,
}

impl LinearMap {
    /// Validates the parity pattern: an even map sends each basis vector into
    /// the span of its own parity, an odd map into the opposite one.
    pub fn new(
        domain: Arc<SuperSpace>,
        codomain: Arc<SuperSpace>,
        matrix: Matrix,
        parity: Parity,
    ) -> Result<Self> {
        if matrix.len() != codomain.dim() || matrix.iter().any(|r| r.len() != domain.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "map matrix must be {}x{}",
                codomain.dim(),
                domain.dim()
            )));
        }
        for (r, row) in matrix.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                if !entry.is_zero() && codomain.parity(r) != domain.parity(c).plus(parity) {
                    return Err(Error::DimensionMismatch(format!(
                        "entry ({r},{c}) violates the declared map parity"
                    )));
                }
            }
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
            parity,
        })
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.codomain.dim());
        for (c, coeff) in v.coords.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for r in 0..self.codomain.dim() {
                let delta = self.matrix[r][c].mul_ref(coeff);
                out.coords[r] = out.coords[r].add_ref(&delta);
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::from_coords((0..self.codomain.dim()).map(|r| self.matrix[r][c].clone()).collect())
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: mat_mul(&self.matrix, &inner.matrix),
            parity: self.parity.plus(inner.parity),
        }
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.dim() == self.codomain.dim() && !determinant(&self.matrix).is_zero()
    }

    pub fn add(&self, rhs: &LinearMap) -> LinearMap {
        let matrix = self
            .matrix
            .iter()
            .zip(&rhs.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect())
            .collect();
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix,
            parity: self.parity,
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| x.mul_ref(c)).collect())
                .collect(),
            parity: self.parity,
        }
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {} -> {}:", self.domain.name, self.codomain.name)?;
        for row in &self.matrix {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// bilinear forms
// ---------------------------------------------------------------------------

/// Symmetry classification of a homogeneous bilinear form under upsetting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    Symmetric,
    AntiSymmetric,
    Neither,
}

/// A homogeneous bilinear form stored through its Gram matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct BilForm {
    pub space: Arc<SuperSpace>,
    pub parity: Parity,
    pub gram: Matrix,
}

impl BilForm {
    pub fn new(space: Arc<SuperSpace>, parity: Parity, gram: Matrix) -> Result<Self> {
        let n = space.dim();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "gram matrix must be {n}x{n}"
            )));
        }
        for (i, row) in gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if !entry.is_zero() && space.parity(i).plus(space.parity(j)) != parity {
                    return Err(Error::MixedParityTerm { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(BilForm { space, parity, gram })
    }

    pub fn zero(space: Arc<SuperSpace>, parity: Parity) -> Self {
        let n = space.dim();
        BilForm {
            space,
            parity,
            gram: vec![vec![Scalar::zero(); n]; n],
        }
    }

    /// `w(v_i, v_j)`, undoing the Gram prefactor.
    pub fn omega(&self, i: usize, j: usize) -> Scalar {
        let s = if self.parity == Parity::Odd && self.space.parity(i) == Parity::Odd {
            -1
        } else {
            1
        };
        apply_sign(s, &self.gram[i][j])
    }

    /// Bilinear extension of `w` to coordinate vectors.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        let n = self.space.dim();
        if x.dim() != n || y.dim() != n {
            return Err(Error::DimensionMismatch(
                "vectors must live in the form's space".into(),
            ));
        }
        let mut acc = Scalar::zero();
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.coords[j].is_zero() {
                    continue;
                }
                let term = x.coords[i].mul_ref(&y.coords[j]).mul_ref(&self.omega(i, j));
                acc = acc.add_ref(&term);
            }
        }
        Ok(acc)
    }

    /// The upsetting u(w)(u, v) = (-1)^{|u||v|} w(v, u), computed on Gram
    /// matrices entrywise.
    pub fn upsetting(&self) -> BilForm {
        let n = self.space.dim();
        let mut gram = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let pi = self.space.parity(i);
                let pj = self.space.parity(j);
                let mut exp = sign(pi, pj) < 0;
                if self.parity == Parity::Odd && pi.plus(pj) == Parity::Odd {
                    exp = !exp;
                }
                gram[i][j] = apply_sign(if exp { -1 } else { 1 }, &self.gram[j][i]);
            }
        }
        BilForm {
            space: self.space.clone(),
            parity: self.parity,
            gram,
        }
    }

    pub fn symmetry_class(&self) -> SymmetryClass {
        let u = self.upsetting();
        let neg: Matrix = self
            .gram
            .iter()
            .map(|r| r.iter().map(|x| x.neg_ref()).collect())
            .collect();
        if u.gram == neg {
            SymmetryClass::AntiSymmetric
        } else if u.gram == self.gram {
            SymmetryClass::Symmetric
        } else {
            SymmetryClass::Neither
        }
    }

    pub fn add(&self, rhs: &BilForm) -> BilForm {
        BilForm {
            space: self.space.clone(),
            parity: self.parity,
            gram: self
                .gram
                .iter()
                .zip(&rhs.gram)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BilForm {
        BilForm {
            space: self.space.clone(),
            parity: self.parity,
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().map(|x| x.mul_ref(c)).collect())
                .collect(),
        }
    }

    pub fn det(&self) -> Scalar {
        determinant(&self.gram)
    }

    /// Non-degenerate iff the Gram determinant is not identically zero.
    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    /// Superdimension constraints for anti-symmetric non-degenerate forms on
    /// spaces with a nonzero odd part: an even form forces dim V_even to be
    /// even, an odd form forces dim V_even = dim V_odd.
    pub fn check_superdim_constraints(&self) -> Result<bool> {
        if !self.is_nondegenerate() {
            return Err(Error::PreconditionViolated(
                "superdimension constraints require a non-degenerate form".into(),
            ));
        }
        let (even, odd) = self.space.sdim();
        if odd == 0 {
            return Err(Error::PreconditionViolated(
                "superdimension constraints require a nonzero odd part".into(),
            ));
        }
        Ok(match self.parity {
            Parity::Even => even % 2 == 0,
            Parity::Odd => even == odd,
        })
    }
}

impl fmt::Debug for BilForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BilForm ({}) on {}:", self.parity, self.space.name)?;
        for row in &self.gram {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// One `coeff * e_i* ^ e_j*` summand of a form specification (1-based
/// indices, as printed in the tables).
#[derive(Debug, Clone)]
pub struct WedgeTerm {
    pub coeff: Scalar,
    pub i: usize,
    pub j: usize,
}

/// Builds the form `sum coeff * e_i* ^ e_j*` on `space`. Every term must be
/// homogeneous of the declared parity.
pub fn wedge_form(space: &Arc<SuperSpace>, parity: Parity, terms: &[WedgeTerm]) -> Result<BilForm> {
    let n = space.dim();
    let mut omega = vec![vec![Scalar::zero(); n]; n];
    for t in terms {
        if t.i == 0 || t.i > n || t.j == 0 || t.j > n {
            return Err(Error::DimensionMismatch(format!(
                "wedge index ({}, {}) out of range",
                t.i, t.j
            )));
        }
        let (i, j) = (t.i - 1, t.j - 1);
        if space.parity(i).plus(space.parity(j)) != parity {
            return Err(Error::MixedParityTerm { i: t.i, j: t.j });
        }
        // (e_i* ^ e_j*)(e_i, e_j) = (-1)^{|e_i||e_j|} and
        // (e_i* ^ e_j*)(e_j, e_i) = -1; everything else vanishes.
        let sij = sign(space.parity(i), space.parity(j));
        omega[i][j] = omega[i][j].add_ref(&apply_sign(sij, &t.coeff));
        omega[j][i] = omega[j][i].sub_ref(&t.coeff);
    }
    // transcribe w-values into the Gram convention
    let mut gram = vec![vec![Scalar::zero(); n]; n];
    for (i, row) in omega.iter().enumerate() {
        let s = if parity == Parity::Odd && space.parity(i) == Parity::Odd {
            -1
        } else {
            1
        };
        for (j, v) in row.iter().enumerate() {
            gram[i][j] = apply_sign(s, v);
        }
    }
    BilForm::new(space.clone(), parity, gram)
}

/// The exact solution space of `w(v, s) = 0` for all `s` in the row space.
pub fn orthogonal_complement(sub: &SubSpace, form: &BilForm) -> Result<SubSpace> {
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let n = form.space.dim();
    // rows of the linear system: v -> w(v, s_r)
    let mut system: Matrix = Vec::new();
    for s in &sub.rows {
        let mut row = vec![Scalar::zero(); n];
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            let mut acc = Scalar::zero();
            for (j, sj) in s.iter().enumerate() {
                if !sj.is_zero() {
                    acc = acc.add_ref(&form.omega(i, j).mul_ref(sj));
                }
            }
            row[i] = acc;
        }
        system.push(row);
    }
    let basis = nullspace(&system, n);
    Ok(SubSpace::from_rows(sub.ambient.clone(), &basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn space_2_2() -> Arc<SuperSpace> {
        Arc::new(SuperSpace::new(
            "g",
            vec![
                ("e1".into(), Parity::Even),
                ("e2".into(), Parity::Even),
                ("e3".into(), Parity::Odd),
                ("e4".into(), Parity::Odd),
            ],
        ))
    }

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// The D^6 form e3*^e1* + e4*^e2*.
    fn d6_form(space: &Arc<SuperSpace>) -> BilForm {
        wedge_form(
            space,
            Parity::Odd,
            &[
                WedgeTerm { coeff: sc(1), i: 3, j: 1 },
                WedgeTerm { coeff: sc(1), i: 4, j: 2 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn parity_shift_is_involutive() {
        let v = space_2_2();
        let pi = parity_shift(&v);
        assert_eq!(pi.sdim(), (2, 2));
        assert_eq!(pi.parity(0), Parity::Odd);
        assert_eq!(pi.parity(2), Parity::Even);
        let back = parity_shift(&pi);
        assert_eq!(back, *v);
    }

    #[test]
    fn wedge_convention_d6() {
        // paper's worked value: w(v, e3) = -l1, i.e. w(e1, e3) = -1 and the
        // other basis pairings with e3 vanish
        let space = space_2_2();
        let w = d6_form(&space);
        assert_eq!(w.omega(0, 2), sc(-1));
        assert_eq!(w.omega(1, 2), sc(0));
        assert_eq!(w.omega(2, 2), sc(0));
        assert_eq!(w.omega(3, 2), sc(0));
        // and w(v, e4) = -l2
        assert_eq!(w.omega(1, 3), sc(-1));
        assert_eq!(w.omega(0, 3), sc(0));
    }

    #[test]
    fn wedge_convention_odd_self_pairing() {
        // e4*^e4*(e4, e4) = -2
        let space = space_2_2();
        let w = wedge_form(
            &space,
            Parity::Even,
            &[WedgeTerm { coeff: sc(1), i: 4, j: 4 }],
        )
        .unwrap();
        assert_eq!(w.omega(3, 3), sc(-2));
    }

    #[test]
    fn wedge_convention_d7_half_half() {
        // w = e1*^e2* - 1/2 e3*^e3* - 1/2 e4*^e4*: w(Y,Y) = z3^2 + z4^2 for
        // Y = z3 e3 + z4 e4, i.e. the restricted quadratic form is diag(1,1)
        let space = space_2_2();
        let w = wedge_form(
            &space,
            Parity::Even,
            &[
                WedgeTerm { coeff: sc(1), i: 1, j: 2 },
                WedgeTerm { coeff: Scalar::from_frac(-1, 2), i: 3, j: 3 },
                WedgeTerm { coeff: Scalar::from_frac(-1, 2), i: 4, j: 4 },
            ],
        )
        .unwrap();
        assert_eq!(w.omega(2, 2), sc(1));
        assert_eq!(w.omega(3, 3), sc(1));
        assert_eq!(w.omega(2, 3).add_ref(&w.omega(3, 2)), sc(0));
        // and w(e4, e4) = 1, the case (b) witness
        assert_eq!(w.omega(3, 3), sc(1));
    }

    #[test]
    fn upsetting_classifies() {
        let space = space_2_2();
        let w = d6_form(&space);
        assert_eq!(w.symmetry_class(), SymmetryClass::AntiSymmetric);
        // upsetting is an involution
        assert_eq!(w.upsetting().upsetting().gram, w.gram);

        // identity Gram on an all-even space is symmetric
        let flat = Arc::new(SuperSpace::new(
            "v",
            vec![("a".into(), Parity::Even), ("b".into(), Parity::Even)],
        ));
        let id = BilForm::new(flat, Parity::Even, identity_matrix(2)).unwrap();
        assert_eq!(id.symmetry_class(), SymmetryClass::Symmetric);

        // a bare e3* (x) e1* term (unwedged) is neither
        let mut gram = vec![vec![Scalar::zero(); 4]; 4];
        gram[2][0] = sc(1);
        let bare = BilForm::new(space, Parity::Odd, gram).unwrap();
        assert_eq!(bare.symmetry_class(), SymmetryClass::Neither);
    }

    #[test]
    fn nondegeneracy_and_det_oracle() {
        let space = space_2_2();
        let w = d6_form(&space);
        assert!(w.is_nondegenerate());
        // independent cofactor-expansion oracle for the 4x4 determinant
        fn cofactor_det(m: &[Vec<Scalar>]) -> Scalar {
            let n = m.len();
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = Scalar::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Scalar>> = (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|c| *c != j)
                            .map(|c| m[i][c].clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul_ref(&cofactor_det(&minor));
                acc = acc.add_ref(&apply_sign(if j % 2 == 0 { 1 } else { -1 }, &term));
            }
            acc
        }
        assert_eq!(w.det(), cofactor_det(&w.gram));
        assert_eq!(w.det(), sc(1));

        let zero = BilForm::zero(space, Parity::Odd);
        assert!(!zero.is_nondegenerate());
    }

    #[test]
    fn d10_degenerates_exactly_at_q_minus_one() {
        let space = space_2_2();
        let q1 = Scalar::parse("1+q").unwrap();
        let w = wedge_form(
            &space,
            Parity::Odd,
            &[
                WedgeTerm { coeff: q1, i: 1, j: 3 },
                WedgeTerm { coeff: sc(1), i: 2, j: 4 },
            ],
        )
        .unwrap();
        let det = w.det();
        assert!(!det.is_zero());
        let mut at_m1 = crate::scalar::ParamAssignment::empty();
        at_m1.set_named("q", Rational::from_int(-1)).unwrap();
        assert!(det.evaluate(&at_m1).unwrap().is_zero());
        let mut at_2 = crate::scalar::ParamAssignment::empty();
        at_2.set_named("q", Rational::from_int(2)).unwrap();
        assert!(!det.evaluate(&at_2).unwrap().is_zero());
    }

    #[test]
    fn superdim_constraints() {
        let space = space_2_2();
        let w = d6_form(&space);
        assert!(w.check_superdim_constraints().unwrap());

        let even = wedge_form(
            &space,
            Parity::Even,
            &[
                WedgeTerm { coeff: sc(1), i: 1, j: 2 },
                WedgeTerm { coeff: Scalar::from_frac(-1, 2), i: 3, j: 3 },
                WedgeTerm { coeff: Scalar::from_frac(-1, 2), i: 4, j: 4 },
            ],
        )
        .unwrap();
        assert!(even.check_superdim_constraints().unwrap());

        let zero = BilForm::zero(space, Parity::Odd);
        assert_eq!(
            zero.check_superdim_constraints(),
            Err(Error::PreconditionViolated(
                "superdimension constraints require a non-degenerate form".into()
            ))
        );
    }

    #[test]
    fn orthogonal_complement_d6() {
        let space = space_2_2();
        let w = d6_form(&space);
        let a = SubSpace::from_vectors(
            space.clone(),
            &[Vector::basis(4, 2), Vector::basis(4, 3)],
        );
        let perp = orthogonal_complement(&a, &w).unwrap();
        assert_eq!(perp, a);

        let whole = SubSpace::from_vectors(
            space.clone(),
            &(0..4).map(|i| Vector::basis(4, i)).collect::<Vec<_>>(),
        );
        let trivial = orthogonal_complement(&whole, &w).unwrap();
        assert_eq!(trivial.dim(), 0);
    }

    #[test]
    fn orthogonal_complement_needs_nondegenerate() {
        let space = space_2_2();
        let zero = BilForm::zero(space.clone(), Parity::Odd);
        let a = SubSpace::from_vectors(space, &[Vector::basis(4, 0)]);
        assert_eq!(orthogonal_complement(&a, &zero), Err(Error::DegenerateForm));
    }

    #[test]
    fn wedge_rejects_mixed_parity() {
        let space = space_2_2();
        let r = wedge_form(
            &space,
            Parity::Even,
            &[WedgeTerm { coeff: sc(1), i: 1, j: 3 }],
        );
        assert_eq!(r, Err(Error::MixedParityTerm { i: 1, j: 3 }));
    }
}
