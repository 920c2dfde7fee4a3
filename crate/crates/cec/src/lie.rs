//! Finite-dimensional Lie algebras over the rationals: structure constants,
//! invariant bilinear forms, subalgebras, linear representations.
//!
//! Everything is exact. The complexified setting of compact groups is modeled
//! entirely through rational structure constants; no real forms appear.

use crate::error::{Error, Result};
use crate::linalg::{dense, SparseMat, Q, Z};
use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Exact rational that reads from JSON as an integer or a "p/q" string.
#[derive(Clone, Debug, PartialEq)]
pub struct Rat(pub Q);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.denom().is_one() {
            if let Ok(v) = i64::try_from(self.0.numer().clone()) {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        parse_rat(&v).map(Rat).map_err(|e| D::Error::custom(e.to_string()))
    }
}

pub fn parse_rat(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Q::from_integer(Z::from(i)))
            } else {
                Err(Error::Parse(format!("non-integer number {n}; use \"p/q\"")))
            }
        }
        serde_json::Value::String(s) => {
            let s = s.trim();
            if let Some((p, q)) = s.split_once('/') {
                let p: Z = p.trim().parse().map_err(|_| Error::Parse(s.into()))?;
                let q: Z = q.trim().parse().map_err(|_| Error::Parse(s.into()))?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s}")));
                }
                Ok(Q::new(p, q))
            } else {
                let p: Z = s.parse().map_err(|_| Error::Parse(s.into()))?;
                Ok(Q::from_integer(p))
            }
        }
        _ => Err(Error::Parse(format!("expected rational, got {v}"))),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default)]
    pub abelian: bool,
    #[serde(default)]
    pub simple: bool,
    #[serde(default)]
    pub semisimple: bool,
    #[serde(default)]
    pub nondegenerate: bool,
}

/// A finite-dimensional Lie algebra with a chosen basis, structure constants
/// `[xi_i, xi_j] = sum_k f[i][j][k] xi_k`, and a symmetric invariant form.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub name: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    f: Vec<Q>, // dense [i*dim*dim + j*dim + k]
    pub form: Vec<Vec<Q>>,
    pub flags: Flags,
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{} (dim {})", self.name, self.dim)
    }
}

impl LieAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        brackets: &[(usize, usize, usize, Q)],
        form: Vec<Vec<Q>>,
        flags: Flags,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        let mut f = vec![Q::zero(); dim * dim * dim];
        for (i, j, k, v) in brackets {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Parse(format!("bracket index out of range ({i},{j},{k})")));
            }
            f[i * dim * dim + j * dim + k] = v.clone();
        }
        let alg = LieAlgebra { name: name.into(), dim, basis_labels, f, form, flags };
        alg.verify()?;
        Ok(alg)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.f[i * self.dim * self.dim + j * self.dim + k]
    }

    fn verify(&self) -> Result<()> {
        let n = self.dim;
        // antisymmetry
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.c(i, j, k) + self.c(j, i, k) != Q::zero() {
                        return Err(Error::AntisymmetryViolation { i, j, k });
                    }
                }
            }
        }
        // Jacobi on all basis triples
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![Q::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [[xi_a, xi_b], xi_c]
                        for l in 0..n {
                            let cab = self.c(a, b, l).clone();
                            if cab.is_zero() {
                                continue;
                            }
                            for m in 0..n {
                                let v = &cab * self.c(l, c, m);
                                acc[m] += v;
                            }
                        }
                    }
                    if acc.iter().any(|v| !v.is_zero()) {
                        return Err(Error::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        // form: symmetric, ad-invariant
        if self.form.len() != n || self.form.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidForm);
        }
        for i in 0..n {
            for j in 0..n {
                if self.form[i][j] != self.form[j][i] {
                    return Err(Error::InvalidForm);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // <[xi_i,xi_j], xi_k> + <xi_j, [xi_i,xi_k]> = 0
                    let mut acc = Q::zero();
                    for l in 0..n {
                        acc += self.c(i, j, l) * &self.form[l][k];
                        acc += self.c(i, k, l) * &self.form[j][l];
                    }
                    if !acc.is_zero() {
                        return Err(Error::InvalidForm);
                    }
                }
            }
        }
        if self.flags.nondegenerate && !self.form_nondegenerate() {
            return Err(Error::SingularFormWhenNondegenerateRequired);
        }
        Ok(())
    }

    pub fn form_nondegenerate(&self) -> bool {
        let m = SparseMat::from_q_rows(
            self.dim,
            self.form.iter().map(|r| r.iter().cloned().enumerate().collect()).collect(),
        );
        m.rank() == self.dim
    }

    /// Bracket of coefficient vectors.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Bracket of two basis elements, as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Q> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Matrix of ad(xi_i): column j holds [xi_i, xi_j].
    pub fn ad(&self, i: usize) -> Vec<Vec<Q>> {
        let n = self.dim;
        let mut m = vec![vec![Q::zero(); n]; n];
        for j in 0..n {
            for k in 0..n {
                m[k][j] = self.c(i, j, k).clone();
            }
        }
        m
    }

    /// Killing form kappa(i,j) = tr(ad_i ad_j).
    pub fn killing_form(&self) -> Vec<Vec<Q>> {
        let n = self.dim;
        let ads: Vec<_> = (0..n).map(|i| self.ad(i)).collect();
        let mut out = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let t = dense::trace(&dense::mat_mul(&ads[i], &ads[j]));
                out[i][j] = t.clone();
                out[j][i] = t;
            }
        }
        out
    }

    /// Coordinates of ad*_{xi_i} xi'_j in the dual basis:
    /// coefficient of xi'_k is -f[i][k][j].
    pub fn coadjoint(&self, i: usize, j: usize) -> Vec<Q> {
        (0..self.dim).map(|k| -self.c(i, k, j).clone()).collect()
    }

    /// Dual basis vectors with respect to a symmetric matrix: row i of the
    /// inverse gives the coordinates of the vector pairing to delta_{ij}.
    pub fn dual_basis_for(&self, form: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
        dense::invert(form).ok_or(Error::DegenerateForm)
    }

    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra, name: impl Into<String>) -> Result<LieAlgebra> {
        let dim = a.dim + b.dim;
        let mut labels = Vec::with_capacity(dim);
        for l in &a.basis_labels {
            labels.push(format!("{l}1"));
        }
        for l in &b.basis_labels {
            labels.push(format!("{l}2"));
        }
        let mut brackets = Vec::new();
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    let c = a.c(i, j, k);
                    if !c.is_zero() {
                        brackets.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                for k in 0..b.dim {
                    let c = b.c(i, j, k);
                    if !c.is_zero() {
                        brackets.push((a.dim + i, a.dim + j, a.dim + k, c.clone()));
                    }
                }
            }
        }
        let mut form = vec![vec![Q::zero(); dim]; dim];
        for i in 0..a.dim {
            for j in 0..a.dim {
                form[i][j] = a.form[i][j].clone();
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                form[a.dim + i][a.dim + j] = b.form[i][j].clone();
            }
        }
        let flags = Flags {
            abelian: a.flags.abelian && b.flags.abelian,
            simple: false,
            semisimple: a.flags.semisimple && b.flags.semisimple,
            nondegenerate: a.flags.nondegenerate && b.flags.nondegenerate,
        };
        LieAlgebra::new(name, labels, &brackets, form, flags)
    }

    /// Abelian algebra of rank `n` with the identity form.
    pub fn abelian(n: usize) -> LieAlgebra {
        let labels = (1..=n).map(|i| format!("t{i}")).collect();
        let mut form = vec![vec![Q::zero(); n]; n];
        for (i, row) in form.iter_mut().enumerate() {
            row[i] = Q::one();
        }
        LieAlgebra::new(
            format!("abelian{n}"),
            labels,
            &[],
            form,
            Flags { abelian: true, simple: false, semisimple: false, nondegenerate: true },
        )
        .expect("abelian data is consistent")
    }

    /// sl2 in the basis (e, h, f) with [h,e]=2e, [h,f]=-2f, [e,f]=h,
    /// carrying its Killing form.
    pub fn sl2() -> LieAlgebra {
        let two = Q::from_integer(Z::from(2));
        let brackets = vec![
            (1usize, 0usize, 0usize, two.clone()),
            (0, 1, 0, -two.clone()),
            (1, 2, 2, -two.clone()),
            (2, 1, 2, two.clone()),
            (0, 2, 1, Q::one()),
            (2, 0, 1, -Q::one()),
        ];
        // Killing form of sl2 in this basis: k(h,h)=8, k(e,f)=k(f,e)=4.
        let z = Q::zero;
        let four = Q::from_integer(Z::from(4));
        let eight = Q::from_integer(Z::from(8));
        let form = vec![
            vec![z(), z(), four.clone()],
            vec![z(), eight, z()],
            vec![four, z(), z()],
        ];
        LieAlgebra::new(
            "sl2",
            vec!["e".into(), "h".into(), "f".into()],
            &brackets,
            form,
            Flags { abelian: false, simple: true, semisimple: true, nondegenerate: true },
        )
        .expect("sl2 data is consistent")
    }

    pub fn sl2_sl2() -> LieAlgebra {
        let s = Self::sl2();
        Self::direct_sum(&s, &s, "sl2+sl2").expect("direct sum is consistent")
    }

    /// sl3 built from its defining 3x3 matrices, with the Killing form.
    pub fn sl3() -> LieAlgebra {
        let e = |i: usize, j: usize| -> Vec<Vec<Q>> {
            let mut m = vec![vec![Q::zero(); 3]; 3];
            m[i][j] = Q::one();
            m
        };
        let h = |i: usize| -> Vec<Vec<Q>> {
            let mut m = vec![vec![Q::zero(); 3]; 3];
            m[i][i] = Q::one();
            m[i + 1][i + 1] = -Q::one();
            m
        };
        let basis = vec![
            ("e12", e(0, 1)),
            ("e13", e(0, 2)),
            ("e23", e(1, 2)),
            ("f12", e(1, 0)),
            ("f13", e(2, 0)),
            ("f23", e(2, 1)),
            ("h1", h(0)),
            ("h2", h(1)),
        ];
        let labels: Vec<String> = basis.iter().map(|(l, _)| (*l).into()).collect();
        let mats: Vec<_> = basis.into_iter().map(|(_, m)| m).collect();
        let mut alg = Self::from_matrices("sl3", labels, &mats, Flags {
            abelian: false,
            simple: true,
            semisimple: true,
            nondegenerate: true,
        })
        .expect("sl3 matrices close under the bracket");
        alg.form = alg.killing_form();
        alg.verify().expect("sl3 Killing form is invariant");
        alg
    }

    /// Structure constants from a list of matrices closed under commutators.
    /// The form is initially the trace form of these matrices.
    pub fn from_matrices(
        name: impl Into<String>,
        labels: Vec<String>,
        mats: &[Vec<Vec<Q>>],
        flags: Flags,
    ) -> Result<LieAlgebra> {
        let dim = mats.len();
        let n = mats[0].len();
        let vecm = |m: &[Vec<Q>]| -> Vec<Q> { m.iter().flatten().cloned().collect() };
        let span = SparseMat::from_q_rows(
            dim,
            (0..n * n)
                .map(|r| (0..dim).map(|k| (k, vecm(&mats[k])[r].clone())).collect())
                .collect(),
        );
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let comm = dense::mat_sub(
                    &dense::mat_mul(&mats[i], &mats[j]),
                    &dense::mat_mul(&mats[j], &mats[i]),
                );
                let coords = span.solve(&vecm(&comm)).ok_or(Error::NotASubalgebra)?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        brackets.push((i, j, k, c));
                    }
                }
            }
        }
        let mut form = vec![vec![Q::zero(); dim]; dim];
        for i in 0..dim {
            for j in i..dim {
                let t = dense::trace(&dense::mat_mul(&mats[i], &mats[j]));
                form[i][j] = t.clone();
                form[j][i] = t;
            }
        }
        LieAlgebra::new(name, labels, &brackets, form, flags)
    }
}

/// A linear representation given by the matrices of the basis elements.
#[derive(Clone, Debug)]
pub struct Representation {
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<Q>>>,
    pub labels: Vec<String>,
}

impl Representation {
    pub fn new(matrices: Vec<Vec<Vec<Q>>>, labels: Vec<String>) -> Self {
        let dim = matrices.first().map_or(0, |m| m.len());
        Representation { dim, matrices, labels }
    }

    /// Check rho([x,y]) = [rho(x), rho(y)] on all basis pairs.
    pub fn verify_homomorphism(&self, alg: &LieAlgebra) -> Result<()> {
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let comm = dense::mat_sub(
                    &dense::mat_mul(&self.matrices[i], &self.matrices[j]),
                    &dense::mat_mul(&self.matrices[j], &self.matrices[i]),
                );
                let mut expect = vec![vec![Q::zero(); self.dim]; self.dim];
                for k in 0..alg.dim {
                    let c = alg.c(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..self.dim {
                        for b in 0..self.dim {
                            let v = c * &self.matrices[k][a][b];
                            expect[a][b] += v;
                        }
                    }
                }
                if comm != expect {
                    return Err(Error::NotARepresentation { i, j });
                }
            }
        }
        Ok(())
    }

    /// The map xi -> rho(xi) has zero kernel.
    pub fn is_faithful(&self, alg: &LieAlgebra) -> bool {
        let rows = (0..self.dim * self.dim)
            .map(|r| {
                (0..alg.dim)
                    .map(|i| (i, self.matrices[i][r / self.dim][r % self.dim].clone()))
                    .collect()
            })
            .collect();
        SparseMat::from_q_rows(alg.dim, rows).rank() == alg.dim
    }

    /// Trace form T(x,y) = tr(rho(x) rho(y)).
    pub fn trace_form(&self, alg: &LieAlgebra) -> Vec<Vec<Q>> {
        let n = alg.dim;
        let mut out = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let t = dense::trace(&dense::mat_mul(&self.matrices[i], &self.matrices[j]));
                out[i][j] = t.clone();
                out[j][i] = t;
            }
        }
        out
    }

    /// rho(xi_i) applied to the k-th coordinate vector, as coordinates.
    pub fn apply_basis(&self, i: usize, k: usize) -> Vec<Q> {
        (0..self.dim).map(|l| self.matrices[i][l][k].clone()).collect()
    }

    /// The 2-dimensional defining representation of sl2 in the (e,h,f) basis.
    pub fn sl2_fundamental() -> Representation {
        let z = Q::zero;
        let o = Q::one;
        let e = vec![vec![z(), o()], vec![z(), z()]];
        let h = vec![vec![o(), z()], vec![z(), -o()]];
        let f = vec![vec![z(), z()], vec![o(), z()]];
        Representation::new(vec![e, h, f], vec!["x1".into(), "x2".into()])
    }
}

/// A subalgebra presented by the columns spanning it inside the ambient basis.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub columns: Vec<Vec<Q>>,
}

impl Subalgebra {
    pub fn from_basis_indices(alg: &LieAlgebra, idx: &[usize]) -> Subalgebra {
        let columns = idx
            .iter()
            .map(|&i| {
                let mut v = vec![Q::zero(); alg.dim];
                v[i] = Q::one();
                v
            })
            .collect();
        Subalgebra { columns }
    }

    pub fn verify_closed(&self, alg: &LieAlgebra) -> Result<()> {
        if self.columns.is_empty() {
            return Ok(());
        }
        let span = SparseMat::from_q_rows(
            self.columns.len(),
            (0..alg.dim)
                .map(|r| self.columns.iter().enumerate().map(|(k, c)| (k, c[r].clone())).collect())
                .collect(),
        );
        for u in &self.columns {
            for v in &self.columns {
                let b = alg.bracket(u, v);
                if span.solve(&b).is_none() {
                    return Err(Error::NotASubalgebra);
                }
            }
        }
        Ok(())
    }
}

/// Whether { ad*_xi(eta') : xi in g, eta' annihilating h } spans all of g*.
pub fn coadjoint_span(alg: &LieAlgebra, sub: &Subalgebra) -> Result<bool> {
    if !alg.form_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    sub.verify_closed(alg)?;
    let n = alg.dim;
    // functionals eta with eta(col) = 0 for every subalgebra column
    let ann = if sub.columns.is_empty() {
        let mut basis = Vec::new();
        for k in 0..n {
            let mut v = vec![Q::zero(); n];
            v[k] = Q::one();
            basis.push(v);
        }
        basis
    } else {
        SparseMat::from_q_rows(
            n,
            sub.columns.iter().map(|c| c.iter().cloned().enumerate().collect()).collect(),
        )
        .nullspace()
    };
    let mut images = Vec::new();
    for i in 0..n {
        for eta in &ann {
            // coefficient of xi'_k in ad*_i(eta) is -sum_j f[i][k][j] eta_j
            let w: Vec<(usize, Q)> = (0..n)
                .map(|k| {
                    let mut acc = Q::zero();
                    for (j, ej) in eta.iter().enumerate() {
                        if !ej.is_zero() {
                            acc -= alg.c(i, k, j) * ej;
                        }
                    }
                    (k, acc)
                })
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if !w.is_empty() {
                images.push(w);
            }
        }
    }
    Ok(SparseMat::from_q_rows(n, images).rank() == n)
}

// ---------------------------------------------------------------------------
// JSON loading

#[derive(Deserialize)]
struct AlgebraJson {
    name: String,
    dim: usize,
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<(usize, usize, usize, Rat)>,
    form: serde_json::Value,
    #[serde(default)]
    flags: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<Rat>>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

pub fn representation_from_json(text: &str) -> Result<Representation> {
    let rj: RepresentationJson = serde_json::from_str(text)?;
    let matrices: Vec<Vec<Vec<Q>>> = rj
        .matrices
        .into_iter()
        .map(|m| m.into_iter().map(|r| r.into_iter().map(|v| v.0).collect()).collect())
        .collect();
    let labels = if rj.labels.is_empty() {
        (1..=rj.dim).map(|k| format!("x{k}")).collect()
    } else {
        rj.labels
    };
    Ok(Representation { dim: rj.dim, matrices, labels })
}

/// Load an algebra from its JSON descriptor. The form is either an explicit
/// matrix or `{"from_representation": {...}}`.
pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    let aj: AlgebraJson = serde_json::from_str(text)?;
    if aj.basis.len() != aj.dim {
        return Err(Error::Parse(format!(
            "dim {} does not match basis length {}",
            aj.dim,
            aj.basis.len()
        )));
    }
    let brackets: Vec<(usize, usize, usize, Q)> =
        aj.brackets.into_iter().map(|(i, j, k, v)| (i, j, k, v.0)).collect();
    let flags = Flags {
        abelian: aj.flags.iter().any(|f| f == "abelian"),
        simple: aj.flags.iter().any(|f| f == "simple"),
        semisimple: aj.flags.iter().any(|f| f == "semisimple" || f == "simple"),
        nondegenerate: aj.flags.iter().any(|f| f == "nondegenerate"),
    };
    let form: Vec<Vec<Q>> = match &aj.form {
        serde_json::Value::Array(rows) => rows
            .iter()
            .map(|row| match row {
                serde_json::Value::Array(vals) => vals.iter().map(parse_rat).collect(),
                _ => Err(Error::Parse("form rows must be arrays".into())),
            })
            .collect::<Result<_>>()?,
        serde_json::Value::Object(obj) => {
            let rep_val = obj
                .get("from_representation")
                .ok_or_else(|| Error::Parse("form object needs from_representation".into()))?;
            let rep = representation_from_json(&rep_val.to_string())?;
            // build a provisional algebra to call trace_form
            let tmp = LieAlgebra::new(
                aj.name.clone(),
                aj.basis.clone(),
                &brackets,
                vec![vec![Q::zero(); aj.dim]; aj.dim],
                Flags::default(),
            )?;
            rep.verify_homomorphism(&tmp)?;
            rep.trace_form(&tmp)
        }
        _ => return Err(Error::Parse("unsupported form field".into())),
    };
    LieAlgebra::new(aj.name, aj.basis, &brackets, form, flags)
}

/// Resolve a builtin name or a path to a JSON file.
pub fn load_algebra(spec: &str) -> Result<LieAlgebra> {
    match spec {
        "sl2" => Ok(LieAlgebra::sl2()),
        "sl2sl2" | "sl2+sl2" => Ok(LieAlgebra::sl2_sl2()),
        "sl3" => Ok(LieAlgebra::sl3()),
        _ => {
            if let Some(r) = spec.strip_prefix("abelian") {
                if let Ok(n) = r.parse::<usize>() {
                    return Ok(LieAlgebra::abelian(n));
                }
            }
            let text = std::fs::read_to_string(spec)?;
            algebra_from_json(&text)
        }
    }
}

pub fn load_representation(spec: &str) -> Result<Representation> {
    match spec {
        "sl2-fundamental" | "fundamental" => Ok(Representation::sl2_fundamental()),
        _ => {
            let text = std::fs::read_to_string(spec)?;
            representation_from_json(&text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qz;

    #[test]
    fn abelian_brackets_vanish() {
        let a = LieAlgebra::abelian(1);
        assert_eq!(a.dim, 1);
        assert!(a.bracket_basis(0, 0).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn sl2_verifies_and_killing_matches() {
        let s = LieAlgebra::sl2();
        let k = s.killing_form();
        assert_eq!(k[1][1], qz(8));
        assert_eq!(k[0][2], qz(4));
        assert_eq!(k[2][0], qz(4));
        assert_eq!(k[0][0], qz(0));
        assert_eq!(k[0][1], qz(0));
        // the builtin form is the Killing form
        assert_eq!(s.form, k);
    }

    #[test]
    fn antisymmetry_violation_detected() {
        // f_{12}^1 = f_{21}^1 = 1 forces a violation
        let r = LieAlgebra::new(
            "bad",
            vec!["a".into(), "b".into()],
            &[(0, 1, 0, Q::one()), (1, 0, 0, Q::one())],
            vec![vec![Q::one(), Q::zero()], vec![Q::zero(), Q::one()]],
            Flags::default(),
        );
        assert!(matches!(r, Err(Error::AntisymmetryViolation { .. })));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [a,b]=c, [b,c]=a, [c,a]=a is not a Lie algebra
        let r = LieAlgebra::new(
            "bad3",
            vec!["a".into(), "b".into(), "c".into()],
            &[
                (0, 1, 2, Q::one()),
                (1, 0, 2, -Q::one()),
                (1, 2, 0, Q::one()),
                (2, 1, 0, -Q::one()),
                (2, 0, 0, Q::one()),
                (0, 2, 0, -Q::one()),
            ],
            vec![vec![Q::zero(); 3]; 3],
            Flags::default(),
        );
        assert!(matches!(r, Err(Error::JacobiViolation { .. }) | Err(Error::InvalidForm)));
    }

    #[test]
    fn direct_sum_killing_is_block_diagonal() {
        let d = LieAlgebra::sl2_sl2();
        let k = d.killing_form();
        let s = LieAlgebra::sl2().killing_form();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k[i][j], s[i][j]);
                assert_eq!(k[3 + i][3 + j], s[i][j]);
                assert_eq!(k[i][3 + j], qz(0));
            }
        }
    }

    #[test]
    fn sl3_is_consistent() {
        let s = LieAlgebra::sl3();
        assert_eq!(s.dim, 8);
        assert!(s.form_nondegenerate());
    }

    #[test]
    fn sl2_fundamental_is_a_faithful_representation() {
        let s = LieAlgebra::sl2();
        let v = Representation::sl2_fundamental();
        v.verify_homomorphism(&s).unwrap();
        assert!(v.is_faithful(&s));
        let t = v.trace_form(&s);
        assert_eq!(t[1][1], qz(2));
        assert_eq!(t[0][2], qz(1));
    }

    #[test]
    fn coadjoint_span_cases() {
        let s = LieAlgebra::sl2();
        let cartan = Subalgebra::from_basis_indices(&s, &[1]);
        assert!(coadjoint_span(&s, &cartan).unwrap());

        let a = LieAlgebra::abelian(1);
        let zero = Subalgebra { columns: vec![] };
        assert!(!coadjoint_span(&a, &zero).unwrap());

        let d = LieAlgebra::sl2_sl2();
        let factor = Subalgebra::from_basis_indices(&d, &[0, 1, 2]);
        assert!(!coadjoint_span(&d, &factor).unwrap());
    }

    #[test]
    fn dual_basis_contract() {
        let s = LieAlgebra::sl2();
        let dual = s.dual_basis_for(&s.form).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Q::zero();
                for l in 0..3 {
                    acc += &dual[i][l] * &s.form[l][j];
                }
                assert_eq!(acc, if i == j { Q::one() } else { Q::zero() });
            }
        }
    }

    #[test]
    fn algebra_json_roundtrip() {
        let text = r#"{
            "name": "sl2j", "dim": 3, "basis": ["e","h","f"],
            "brackets": [[1,0,0,2],[0,1,0,-2],[1,2,2,-2],[2,1,2,2],[0,2,1,1],[2,0,1,-1]],
            "form": {"from_representation": {"dim":2,
                "matrices": [[[0,1],[0,0]],[[1,0],[0,-1]],[[0,0],[1,0]]],
                "labels": ["x1","x2"]}},
            "flags": ["simple","nondegenerate"]
        }"#;
        let a = algebra_from_json(text).unwrap();
        assert_eq!(a.form[1][1], qz(2));
        assert!(a.flags.simple && a.flags.semisimple);
    }
}
