//! Lie superalgebra structures: axiom checking, ideals, scalar 2-cocycle
//! spaces, exactness, and the quasi-Frobenius classification.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linear::{
    self, apply_sign, nullspace, orthogonal_complement, sign, BilForm, Parity, SubSpace,
    SuperSpace, Vector,
};
use crate::scalar::{MultiPoly, ParamAssignment, Scalar};

/// A structure-constant tensor `[e_i, e_j] = sum_k c(i,j,k) e_k` on a
/// superspace.
#[derive(Clone, PartialEq, Eq)]
pub struct LieSuperStructure {
    pub space: Arc<SuperSpace>,
    /// c[i][j] holds the coordinates of [e_i, e_j].
    pub c: Vec<Vec<Vector>>,
}

impl LieSuperStructure {
    pub fn abelian(space: Arc<SuperSpace>) -> Self {
        let n = space.dim();
        LieSuperStructure {
            space,
            c: vec![vec![Vector::zero(n); n]; n],
        }
    }

    /// Builds the tensor from the listed brackets (0-based indices), deriving
    /// the mirrored entries by super anti-commutativity. Listing both (i,j)
    /// and (j,i) inconsistently, or violating parity compatibility, fails.
    pub fn from_brackets(
        space: Arc<SuperSpace>,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        let n = space.dim();
        let mut c = vec![vec![Vector::zero(n); n]; n];
        let mut given = vec![vec![false; n]; n];
        for (i, j, rhs) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || rhs.dim() != n {
                return Err(Error::DimensionMismatch(
                    "bracket index out of range".into(),
                ));
            }
            for (k, coord) in rhs.coords.iter().enumerate() {
                if !coord.is_zero() && space.parity(k) != space.parity(i).plus(space.parity(j)) {
                    return Err(Error::PreconditionViolated(format!(
                        "bracket [{}, {}] has a component off its parity",
                        space.label(i),
                        space.label(j)
                    )));
                }
            }
            let mirror = rhs.scale(&apply_sign(
                -sign(space.parity(i), space.parity(j)),
                &Scalar::one(),
            ));
            for ((a, b), value) in [((i, j), rhs.clone()), ((j, i), mirror)] {
                if a == b && space.parity(a) == Parity::Even && !value.is_zero() {
                    return Err(Error::PreconditionViolated(format!(
                        "[{0}, {0}] must vanish for even {0}",
                        space.label(a)
                    )));
                }
                if given[a][b] && c[a][b] != value {
                    return Err(Error::PreconditionViolated(format!(
                        "conflicting entries for bracket [{}, {}]",
                        space.label(a),
                        space.label(b)
                    )));
                }
                c[a][b] = value;
                given[a][b] = true;
            }
        }
        Ok(LieSuperStructure { space, c })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.dim();
        if x.dim() != n || y.dim() != n {
            return Err(Error::DimensionMismatch(
                "bracket arguments must live in the algebra".into(),
            ));
        }
        let mut out = Vector::zero(n);
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.coords[j].is_zero() {
                    continue;
                }
                let f = x.coords[i].mul_ref(&y.coords[j]);
                out = out.add(&self.c[i][j].scale(&f));
            }
        }
        Ok(out)
    }

    /// The matrix of ad(e_i); column j holds [e_i, e_j].
    pub fn ad_matrix(&self, i: usize) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        (0..n)
            .map(|r| (0..n).map(|j| self.c[i][j].coords[r].clone()).collect())
            .collect()
    }

    /// True when any structure constant mentions a parameter.
    pub fn is_parametric(&self) -> bool {
        self.c
            .iter()
            .flatten()
            .any(|v| v.coords.iter().any(|s| s.uses_any_param()))
    }

    /// Substitutes a (partial) parameter assignment into every constant.
    pub fn substitute(&self, assignment: &ParamAssignment) -> Result<LieSuperStructure> {
        let mut c = self.c.clone();
        for row in &mut c {
            for v in row {
                for s in &mut v.coords {
                    *s = s.substitute(assignment)?;
                }
            }
        }
        Ok(LieSuperStructure {
            space: self.space.clone(),
            c,
        })
    }

    /// Checks `c(j,i,.) = -(-1)^{|e_i||e_j|} c(i,j,.)` for all pairs.
    pub fn check_anticommutativity(&self) -> Vec<AxiomFailure> {
        let n = self.dim();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let expected = self.c[i][j].scale(&apply_sign(
                    -sign(self.space.parity(i), self.space.parity(j)),
                    &Scalar::one(),
                ));
                if self.c[j][i] != expected {
                    failures.push(AxiomFailure {
                        triple: (j, i, usize::MAX),
                        residual: self.c[j][i].sub(&expected),
                    });
                }
            }
        }
        failures
    }

    /// Super Jacobi residuals `[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]`
    /// over all basis triples; an empty report means the identity holds.
    pub fn check_jacobi(&self) -> Vec<AxiomFailure> {
        let n = self.dim();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = self.jacobi_residual(i, j, k);
                    if !r.is_zero() {
                        failures.push(AxiomFailure {
                            triple: (i, j, k),
                            residual: r,
                        });
                    }
                }
            }
        }
        failures
    }

    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let ei = Vector::basis(self.dim(), i);
        let ej = Vector::basis(self.dim(), j);
        let ek = Vector::basis(self.dim(), k);
        let t1 = self.bracket(&ei, &self.c[j][k]).expect("dims agree");
        let t2 = self.bracket(&self.c[i][j], &ek).expect("dims agree");
        let t3 = self.bracket(&ej, &self.c[i][k]).expect("dims agree");
        let s = sign(self.space.parity(i), self.space.parity(j));
        t1.sub(&t2).sub(&t3.scale(&apply_sign(s, &Scalar::one())))
    }

    /// The signed cyclic cocycle sum
    /// `(-1)^{|x||z|} w(x,[y,z]) + (-1)^{|z||y|} w(z,[x,y]) + (-1)^{|y||x|} w(y,[z,x])`
    /// at a basis triple.
    pub fn closedness_residual(&self, form: &BilForm, i: usize, j: usize, k: usize) -> Scalar {
        let (pi, pj, pk) = (
            self.space.parity(i),
            self.space.parity(j),
            self.space.parity(k),
        );
        let term = |a: usize, bc: &Vector, s: i8| -> Scalar {
            let mut acc = Scalar::zero();
            for (l, coeff) in bc.coords.iter().enumerate() {
                if !coeff.is_zero() {
                    acc = acc.add_ref(&form.omega(a, l).mul_ref(coeff));
                }
            }
            apply_sign(s, &acc)
        };
        let t1 = term(i, &self.c[j][k], sign(pi, pk));
        let t2 = term(k, &self.c[i][j], sign(pk, pj));
        let t3 = term(j, &self.c[k][i], sign(pj, pi));
        t1.add_ref(&t2).add_ref(&t3)
    }

    /// True iff the cyclic sum vanishes on all basis triples.
    pub fn is_closed(&self, form: &BilForm) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.closedness_residual(form, i, j, k).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff `[e_i, s]` stays in the row space for every basis vector and
    /// every row.
    pub fn is_ideal(&self, sub: &SubSpace) -> bool {
        for i in 0..self.dim() {
            for s in sub.row_vectors() {
                let b = self
                    .bracket(&Vector::basis(self.dim(), i), &s)
                    .expect("dims agree");
                if !sub.contains(&b) {
                    return false;
                }
            }
        }
        true
    }

    /// Lagrangian ideal: an ideal equal to its own orthogonal complement.
    pub fn is_lagrangian_ideal(&self, sub: &SubSpace, form: &BilForm) -> Result<bool> {
        if !form.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        if !self.is_ideal(sub) {
            return Ok(false);
        }
        let perp = orthogonal_complement(sub, form)?;
        Ok(perp == *sub)
    }

    /// Solves `w(x, y) = f([x, y])` for a functional `f`; returns the witness
    /// coordinates (on the dual basis) or `None`.
    pub fn is_exact(&self, form: &BilForm) -> Option<Vector> {
        let n = self.dim();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                rows.push(self.c[i][j].coords.clone());
                rhs.push(form.omega(i, j));
            }
        }
        linear::solve(&rows, &rhs).map(Vector::from_coords)
    }
}

impl fmt::Debug for LieSuperStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieSuperStructure on {}:", self.space.name)?;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.c[i][j].is_zero() {
                    writeln!(
                        f,
                        "  [{}, {}] = {}",
                        self.space.label(i),
                        self.space.label(j),
                        self.c[i][j].describe(&self.space)
                    )?;
                }
            }
        }
        Ok(())
    }
}

/// A failing axiom instance: the basis triple (pairs use k = usize::MAX) and
/// the nonzero residual.
#[derive(Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

impl fmt::Debug for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "triple {:?} residual {:?}", self.triple, self.residual)
    }
}

/// An exact basis of the space of closed anti-symmetric homogeneous forms of
/// one parity.
#[derive(Clone)]
pub struct CocycleSpace {
    pub parity: Parity,
    pub basis: Vec<BilForm>,
}

impl CocycleSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Basis of all anti-symmetric homogeneous forms of the given parity: an
/// antisymmetric even-even block plus a symmetric odd-odd block for even
/// parity, and a mixed block with its super-transpose for odd parity.
pub fn antisymmetric_form_basis(space: &Arc<SuperSpace>, parity: Parity) -> Vec<BilForm> {
    let n = space.dim();
    let mut out = Vec::new();
    let mut push = |entries: &[(usize, usize, i64)]| {
        let mut gram = vec![vec![Scalar::zero(); n]; n];
        for (i, j, v) in entries {
            gram[*i][*j] = Scalar::from_int(*v);
        }
        out.push(BilForm::new(space.clone(), parity, gram).expect("parity pattern is valid"));
    };
    match parity {
        Parity::Even => {
            for i in 0..n {
                for j in i..n {
                    if space.parity(i) == Parity::Even && space.parity(j) == Parity::Even && i < j {
                        push(&[(i, j, 1), (j, i, -1)]);
                    }
                    if space.parity(i) == Parity::Odd && space.parity(j) == Parity::Odd {
                        if i == j {
                            push(&[(i, i, 1)]);
                        } else {
                            push(&[(i, j, 1), (j, i, 1)]);
                        }
                    }
                }
            }
        }
        Parity::Odd => {
            // Gram entries of an odd anti-symmetric form satisfy B_ij = B_ji
            // on the mixed blocks
            for i in 0..n {
                for j in 0..n {
                    if space.parity(i) == Parity::Even && space.parity(j) == Parity::Odd {
                        push(&[(i, j, 1), (j, i, 1)]);
                    }
                }
            }
        }
    }
    out
}

/// Exact basis of the solution space of the closedness system within
/// anti-symmetric homogeneous forms of the given parity. The structure must
/// be parameter-free; substitute a sample point first otherwise.
pub fn closed_form_space(algebra: &LieSuperStructure, parity: Parity) -> Result<CocycleSpace> {
    if algebra.is_parametric() {
        return Err(Error::ParametricUnsupported);
    }
    let candidates = antisymmetric_form_basis(&algebra.space, parity);
    let n = algebra.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row: Vec<Scalar> = candidates
                    .iter()
                    .map(|f| algebra.closedness_residual(f, i, j, k))
                    .collect();
                if row.iter().any(|s| !s.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let coeffs = nullspace(&rows, candidates.len());
    let basis = coeffs
        .into_iter()
        .map(|cs| {
            let mut acc = BilForm::zero(algebra.space.clone(), parity);
            for (c, f) in cs.iter().zip(&candidates) {
                if !c.is_zero() {
                    acc = acc.add(&f.scale(c));
                }
            }
            acc
        })
        .collect();
    Ok(CocycleSpace { parity, basis })
}

/// Determinant of the generic element `sum t_a F_a` of a cocycle space, as a
/// polynomial in the coefficient variables. Identically zero iff every member
/// of the span is degenerate (the ground field is infinite).
pub fn generic_member_determinant(space: &CocycleSpace) -> MultiPoly {
    let d = space.dim();
    let n = space.basis.first().map_or(0, |f| f.space.dim());
    if d == 0 || n == 0 {
        return MultiPoly::zero(d.max(1));
    }
    // entries are linear polynomials in t_0..t_{d-1}
    let mut entries = vec![vec![MultiPoly::zero(d); n]; n];
    for (a, f) in space.basis.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let c = &f.gram[i][j];
                if !c.is_zero() {
                    let r = c
                        .as_rational()
                        .expect("cocycle basis over a sampled algebra is constant");
                    let t = MultiPoly::var(d, a).scale(&r);
                    entries[i][j] = entries[i][j].add_ref(&t);
                }
            }
        }
    }
    poly_det(&entries, d)
}

fn poly_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|c| *c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let mut term = m[0][j].mul_ref(&poly_det(&minor, nvars));
        if j % 2 == 1 {
            term = term.neg_ref();
        }
        acc = acc.add_ref(&term);
    }
    acc
}

/// True iff some member of the cocycle space is non-degenerate.
pub fn has_nondegenerate_member(space: &CocycleSpace) -> bool {
    !generic_member_determinant(space).is_zero()
}

/// Verdict of the quasi-Frobenius classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QfVerdict {
    Even,
    Odd,
    Both,
    NhOnly,
    None,
}

impl fmt::Display for QfVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QfVerdict::Even => write!(f, "even"),
            QfVerdict::Odd => write!(f, "odd"),
            QfVerdict::Both => write!(f, "both"),
            QfVerdict::NhOnly => write!(f, "NH-only"),
            QfVerdict::None => write!(f, "none"),
        }
    }
}

/// A non-homogeneous closed family: an even part plus an odd part with shared
/// coefficient parameters.
#[derive(Clone)]
pub struct NhFamily {
    pub even_part: BilForm,
    pub odd_part: BilForm,
}

impl NhFamily {
    /// Sum of the two Gram matrices: the parity prefactors only rescale rows
    /// by signs, so this decides non-degeneracy of the sum form.
    pub fn total_gram(&self) -> Vec<Vec<Scalar>> {
        self.even_part
            .gram
            .iter()
            .zip(&self.odd_part.gram)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect())
            .collect()
    }

    pub fn substitute(&self, assignment: &ParamAssignment) -> Result<NhFamily> {
        let sub = |f: &BilForm| -> Result<BilForm> {
            let mut gram = f.gram.clone();
            for row in &mut gram {
                for s in row {
                    *s = s.substitute(assignment)?;
                }
            }
            BilForm::new(f.space.clone(), f.parity, gram)
        };
        Ok(NhFamily {
            even_part: sub(&self.even_part)?,
            odd_part: sub(&self.odd_part)?,
        })
    }
}

/// Classification of one parameter-free algebra instance: which parities
/// admit a closed anti-symmetric non-degenerate form, with the NH family
/// decided from catalog data when neither parity does.
pub fn quasi_frobenius_classify(
    algebra: &LieSuperStructure,
    nh: Option<&NhFamily>,
    nh_samples: &[ParamAssignment],
) -> Result<QfVerdict> {
    let even = closed_form_space(algebra, Parity::Even)?;
    let odd = closed_form_space(algebra, Parity::Odd)?;
    let has_even = has_nondegenerate_member(&even);
    let has_odd = has_nondegenerate_member(&odd);
    Ok(match (has_even, has_odd) {
        (true, true) => QfVerdict::Both,
        (true, false) => QfVerdict::Even,
        (false, true) => QfVerdict::Odd,
        (false, false) => {
            if let Some(family) = nh {
                if verify_nh_family(algebra, family, nh_samples)? {
                    QfVerdict::NhOnly
                } else {
                    QfVerdict::None
                }
            } else {
                QfVerdict::None
            }
        }
    })
}

/// Both homogeneous parts must be anti-symmetric and closed (symbolically in
/// the coefficient parameters), and the total Gram matrix must be invertible
/// at every sample coefficient choice.
pub fn verify_nh_family(
    algebra: &LieSuperStructure,
    family: &NhFamily,
    samples: &[ParamAssignment],
) -> Result<bool> {
    use crate::linear::SymmetryClass;
    if samples.is_empty() {
        return Err(Error::EmptyRegion);
    }
    for part in [&family.even_part, &family.odd_part] {
        if !part.is_zero() && part.symmetry_class() != SymmetryClass::AntiSymmetric {
            return Ok(false);
        }
        if !algebra.is_closed(part) {
            return Ok(false);
        }
    }
    for sample in samples {
        let inst = family.substitute(sample)?;
        if linear::determinant(&inst.total_gram()).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{wedge_form, WedgeTerm};
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

    fn ei(i: usize, c: i64) -> Vector {
        Vector::basis(4, i).scale(&sc(c))
    }

    /// D^6: [e1,e3]=e3, [e1,e4]=e4, [e2,e3]=-e4, [e2,e4]=e3.
    fn d6() -> LieSuperStructure {
        LieSuperStructure::from_brackets(
            space_2_2(),
            &[
                (0, 2, ei(2, 1)),
                (0, 3, ei(3, 1)),
                (1, 2, ei(3, -1)),
                (1, 3, ei(2, 1)),
            ],
        )
        .unwrap()
    }

    fn d6_form(space: &Arc<SuperSpace>) -> BilForm {
        wedge_form(
            space,
            Parity::Odd,
            &[
                WedgeTerm {
                    coeff: sc(1),
                    i: 3,
                    j: 1,
                },
                WedgeTerm {
                    coeff: sc(1),
                    i: 4,
                    j: 2,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn bracket_examples() {
        let algebra = d6();
        // [e1, e3] = e3
        let b = algebra
            .bracket(&Vector::basis(4, 0), &Vector::basis(4, 2))
            .unwrap();
        assert_eq!(b, Vector::basis(4, 2));
        // [x, x] = 0 for even x
        let x = Vector::from_coords(vec![sc(2), sc(-3), sc(0), sc(0)]);
        assert!(algebra.bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn odd_square_bracket() {
        // (D_0^10)^1 has [e4, e4] = e1
        let algebra = LieSuperStructure::from_brackets(
            space_2_2(),
            &[
                (0, 1, ei(1, 1)),
                (0, 2, ei(2, 1)),
                (1, 3, ei(2, 1)),
                (
                    2,
                    3,
                    Vector::from_coords(vec![sc(0), Scalar::from_frac(-1, 2), sc(0), sc(0)]),
                ),
                (3, 3, ei(0, 1)),
            ],
        )
        .unwrap();
        let b = algebra
            .bracket(&Vector::basis(4, 3), &Vector::basis(4, 3))
            .unwrap();
        assert_eq!(b, Vector::basis(4, 0));
        assert!(algebra.check_jacobi().is_empty());
        assert!(algebra.check_anticommutativity().is_empty());
    }

    #[test]
    fn jacobi_passes_and_mutation_fails() {
        let algebra = d6();
        assert!(algebra.check_jacobi().is_empty());

        // flipping [e2,e3] to +e4 still satisfies Jacobi, since ad(e1) is the
        // identity on the odd part and commutes with anything
        let sign_flip = LieSuperStructure::from_brackets(
            space_2_2(),
            &[
                (0, 2, ei(2, 1)),
                (0, 3, ei(3, 1)),
                (1, 2, ei(3, 1)),
                (1, 3, ei(2, 1)),
            ],
        )
        .unwrap();
        assert!(sign_flip.check_jacobi().is_empty());

        // mutating [e1,e3] to e3+e4 breaks commutativity of the odd actions
        // and must fail with an explicit residual
        let mutated = LieSuperStructure::from_brackets(
            space_2_2(),
            &[
                (0, 2, ei(2, 1).add(&ei(3, 1))),
                (0, 3, ei(3, 1)),
                (1, 2, ei(3, -1)),
                (1, 3, ei(2, 1)),
            ],
        )
        .unwrap();
        let failures = mutated.check_jacobi();
        assert!(!failures.is_empty());
        assert!(failures.iter().all(|f| !f.residual.is_zero()));
    }

    #[test]
    fn closedness_of_table_form() {
        let algebra = d6();
        let w = d6_form(&algebra.space);
        assert!(algebra.is_closed(&w));

        // any anti-symmetric form on an abelian algebra is closed
        let abelian = LieSuperStructure::abelian(space_2_2());
        assert!(abelian.is_closed(&w));
    }

    #[test]
    fn closed_space_of_abelian_2_2() {
        let abelian = LieSuperStructure::abelian(space_2_2());
        let even = closed_form_space(&abelian, Parity::Even).unwrap();
        assert_eq!(even.dim(), 4);
        let odd = closed_form_space(&abelian, Parity::Odd).unwrap();
        assert_eq!(odd.dim(), 4);
    }

    #[test]
    fn closed_space_brute_force_oracle() {
        // members of the returned span are closed; combinations of all
        // anti-symmetric forms are closed exactly when they lie in the span
        let algebra = d6();
        let even = closed_form_space(&algebra, Parity::Even).unwrap();
        let all = antisymmetric_form_basis(&algebra.space, Parity::Even);
        let mut seed = 0x9e3779b9u64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 13) as i64 - 6
        };
        for _ in 0..100 {
            let mut member = BilForm::zero(algebra.space.clone(), Parity::Even);
            for f in &even.basis {
                member = member.add(&f.scale(&sc(next())));
            }
            assert!(algebra.is_closed(&member));
        }
        let span = SubSpace::from_rows(
            algebra.space.clone(),
            &even
                .basis
                .iter()
                .map(|f| flatten(&f.gram))
                .collect::<Vec<_>>(),
        );
        let mut outside = 0;
        for _ in 0..100 {
            let mut member = BilForm::zero(algebra.space.clone(), Parity::Even);
            for f in &all {
                member = member.add(&f.scale(&sc(next())));
            }
            let closed = algebra.is_closed(&member);
            let inside = span.contains(&Vector::from_coords(flatten(&member.gram)));
            assert_eq!(closed, inside);
            if !inside {
                outside += 1;
            }
        }
        assert!(outside > 0, "sampling never left the span");
    }

    fn flatten(gram: &[Vec<Scalar>]) -> Vec<Scalar> {
        gram.iter().flatten().cloned().collect()
    }

    #[test]
    fn d6_ideal_and_lagrangian() {
        let algebra = d6();
        let w = d6_form(&algebra.space);
        let a = SubSpace::from_vectors(
            algebra.space.clone(),
            &[Vector::basis(4, 2), Vector::basis(4, 3)],
        );
        assert!(algebra.is_ideal(&a));
        assert!(algebra.is_lagrangian_ideal(&a, &w).unwrap());

        // the whole space is an ideal but not Lagrangian
        let whole = SubSpace::from_vectors(
            algebra.space.clone(),
            &(0..4).map(|i| Vector::basis(4, i)).collect::<Vec<_>>(),
        );
        assert!(algebra.is_ideal(&whole));
        assert!(!algebra.is_lagrangian_ideal(&whole, &w).unwrap());

        // {0} is an ideal whose complement is everything
        let zero = SubSpace::from_rows(algebra.space.clone(), &[]);
        assert!(!algebra.is_lagrangian_ideal(&zero, &w).unwrap());
    }

    #[test]
    fn exactness() {
        let algebra = d6();
        let w = d6_form(&algebra.space);
        // D^6's odd form is exact with witness f = -e3*
        let f = algebra.is_exact(&w).expect("solvable");
        assert_eq!(f, Vector::from_coords(vec![sc(0), sc(0), sc(-1), sc(0)]));

        // a nonzero form on an abelian algebra is never exact
        let abelian = LieSuperStructure::abelian(space_2_2());
        assert!(abelian.is_exact(&w).is_none());

        // the zero form always is
        let zero = BilForm::zero(algebra.space.clone(), Parity::Odd);
        assert!(algebra.is_exact(&zero).is_some());
    }

    #[test]
    fn classify_d6_is_odd() {
        let algebra = d6();
        let verdict = quasi_frobenius_classify(&algebra, None, &[]).unwrap();
        assert_eq!(verdict, QfVerdict::Odd);
        // and the even cocycle space has no non-degenerate member
        let even = closed_form_space(&algebra, Parity::Even).unwrap();
        assert!(!has_nondegenerate_member(&even));
    }

    #[test]
    fn parametric_requires_sampling() {
        let q = Scalar::param_named("q").unwrap();
        let algebra = LieSuperStructure::from_brackets(
            space_2_2(),
            &[(0, 3, Vector::basis(4, 3).scale(&q))],
        )
        .unwrap();
        assert!(matches!(
            closed_form_space(&algebra, Parity::Odd),
            Err(Error::ParametricUnsupported)
        ));
        let mut at_two = ParamAssignment::empty();
        at_two.set_named("q", Rational::from_int(2)).unwrap();
        let inst = algebra.substitute(&at_two).unwrap();
        assert!(closed_form_space(&inst, Parity::Odd).is_ok());
    }
}
