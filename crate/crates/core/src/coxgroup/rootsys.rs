//! Root systems in Bourbaki coordinates and the reflection action on positive
//! roots.

use std::collections::{HashMap, VecDeque};
use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use super::element::GroupElement;
use super::rootset::{RootSet, MAX_POSITIVE_ROOTS};
use super::types::CoxeterType;
use crate::exactnum::{
    inner_product, unit_vector, vec_neg, vec_scale, vec_sub, MatrixQ, NumError, QNum, VectorQ,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("root closure exceeded {0} roots; the simple roots do not span a finite system")]
    Infinite(usize),
    #[error("too many positive roots ({0}) for the bit-set representation")]
    TooLarge(usize),
    #[error("{0} has no exact coordinates")]
    NoCoordinates(String),
    #[error("arithmetic: {0}")]
    Num(#[from] NumError),
}

/// Where one irreducible factor lives inside a product.
#[derive(Debug, Clone)]
pub struct FactorInfo {
    pub ty: CoxeterType,
    /// Positive-root indices of this factor.
    pub roots: Range<usize>,
    /// Positions within [`RootSystem::simple`].
    pub simple: Range<usize>,
    /// Ambient coordinates (empty for dihedral factors).
    pub ambient: Range<usize>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CoxeterType,
    factors: Vec<FactorInfo>,
    ambient_dim: usize,
    /// Positive-root indices of the simple roots, in Bourbaki order.
    simple: Vec<usize>,
    /// Coordinates of the positive roots, if every factor has them.
    coords: Option<Vec<VectorQ>>,
    /// Coefficients of each positive root in the simple roots.
    coeffs: Option<Vec<VectorQ>>,
    reflections: Vec<GroupElement>,
    ortho: Vec<RootSet>,
    root_class: Vec<usize>,
}

/// Simple roots of an irreducible type in Bourbaki's coordinates.
fn simple_roots(ty: &CoxeterType) -> Option<(usize, Vec<VectorQ>)> {
    use CoxeterType::*;
    let q = QNum::int;
    let e = unit_vector;
    let diff = |n: usize, i: usize, j: usize| vec_sub(&e(n, i), &e(n, j));
    let from = |v: &[QNum]| v.to_vec();
    let roots = match ty {
        A(n) => (*n + 1, (0..*n).map(|i| diff(n + 1, i, i + 1)).collect()),
        B(n) => {
            let mut r: Vec<VectorQ> = (0..n - 1).map(|i| diff(*n, i, i + 1)).collect();
            r.push(e(*n, n - 1));
            (*n, r)
        }
        D(n) => {
            let mut r: Vec<VectorQ> = (0..n - 1).map(|i| diff(*n, i, i + 1)).collect();
            let mut last = e(*n, n - 2);
            last[n - 1] = q(1);
            r.push(last);
            (*n, r)
        }
        E6 | E7 | E8 => {
            let h = QNum::frac(1, 2);
            let mh = QNum::frac(-1, 2);
            let mut a1 = vec![mh.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut a2 = e(8, 0);
            a2[1] = q(1);
            let mut r = vec![a1, a2];
            for i in 0..6 {
                r.push(diff(8, i + 1, i));
            }
            r.truncate(ty.rank());
            (8, r)
        }
        F4 => {
            let h = QNum::frac(1, 2);
            let mh = QNum::frac(-1, 2);
            (4, vec![diff(4, 1, 2), diff(4, 2, 3), e(4, 3), from(&[h, mh.clone(), mh.clone(), mh])])
        }
        G2 => (3, vec![from(&[q(1), q(-1), q(0)]), from(&[q(-2), q(1), q(1)])]),
        H3 | H4 => {
            // (√5−1)/4 = 1/(2τ) and (1+√5)/4 = τ/2.
            let a = &QNum::frac(-1, 4) + &(&QNum::sqrt5() * &QNum::frac(1, 4));
            let b = -&(&QNum::frac(1, 4) + &(&QNum::sqrt5() * &QNum::frac(1, 4)));
            let mh = QNum::frac(-1, 2);
            if *ty == H3 {
                (3, vec![e(3, 1), from(&[a, b, mh]), e(3, 2)])
            } else {
                (
                    4,
                    vec![
                        e(4, 2),
                        from(&[q(0), a.clone(), b.clone(), mh.clone()]),
                        e(4, 3),
                        from(&[a, b, q(0), mh]),
                    ],
                )
            }
        }
        I2(_) | Product(_) => return None,
    };
    Some(roots)
}

/// Data for one irreducible factor before assembly.
struct FactorData {
    npos: usize,
    simple: Vec<usize>,
    dim: usize,
    coords: Option<Vec<VectorQ>>,
    coeffs: Option<Vec<VectorQ>>,
    /// `simple_images[i][β] = s_i(β)`.
    simple_images: Vec<Vec<(usize, bool)>>,
}

const ROOT_CAP: usize = 10_000;

fn build_geometric(ty: &CoxeterType) -> Result<FactorData, RootSystemError> {
    let (dim, simple) = simple_roots(ty).ok_or_else(|| RootSystemError::NoCoordinates(ty.to_string()))?;
    let n = simple.len();
    let norms: Vec<QNum> = simple.iter().map(|a| inner_product(a, a)).collect::<Result<_, _>>()?;
    // Closure of the simple roots under simple reflections, tracking the
    // coefficients in the simple-root basis alongside the coordinates.
    let reflect = |i: usize, v: &VectorQ, c: &VectorQ| -> Result<(VectorQ, VectorQ), NumError> {
        let k = &(&inner_product(&simple[i], v)? * &QNum::int(2)) / &norms[i];
        let mut c2 = c.clone();
        c2[i] -= &k;
        Ok((vec_sub(v, &vec_scale(&simple[i], &k)), c2))
    };
    let mut seen: HashMap<VectorQ, usize> = HashMap::new();
    let mut all: Vec<(VectorQ, VectorQ)> = Vec::new();
    let mut queue = VecDeque::new();
    for (i, a) in simple.iter().enumerate() {
        seen.insert(a.clone(), all.len());
        all.push((a.clone(), unit_vector(n, i)));
        queue.push_back(all.len() - 1);
    }
    while let Some(k) = queue.pop_front() {
        for i in 0..n {
            let (v, c) = reflect(i, &all[k].0, &all[k].1)?;
            if !seen.contains_key(&v) {
                if all.len() >= ROOT_CAP {
                    return Err(RootSystemError::Infinite(ROOT_CAP));
                }
                seen.insert(v.clone(), all.len());
                all.push((v, c));
                queue.push_back(all.len() - 1);
            }
        }
    }
    let is_positive = |c: &VectorQ| c.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive());
    let mut pos: Vec<(VectorQ, VectorQ)> = all.into_iter().filter(|(_, c)| is_positive(c)).collect();
    if pos.len() > MAX_POSITIVE_ROOTS {
        return Err(RootSystemError::TooLarge(pos.len()));
    }
    let height = |c: &VectorQ| c.iter().fold(QNum::zero(), |acc, x| &acc + x);
    pos.sort_by(|(_, c1), (_, c2)| height(c1).cmp(&height(c2)).then_with(|| c2.cmp(c1)));
    let index: HashMap<&VectorQ, usize> = pos.iter().enumerate().map(|(i, (v, _))| (v, i)).collect();
    let lookup = |v: &VectorQ| -> (usize, bool) {
        match index.get(v) {
            Some(&j) => (j, false),
            None => (index[&vec_neg(v)], true),
        }
    };
    let mut simple_images = Vec::with_capacity(n);
    for i in 0..n {
        let mut img = Vec::with_capacity(pos.len());
        for (v, c) in &pos {
            img.push(lookup(&reflect(i, v, c)?.0));
        }
        simple_images.push(img);
    }
    let npos = pos.len();
    let (coords, coeffs): (Vec<_>, Vec<_>) = pos.into_iter().unzip();
    Ok(FactorData {
        npos,
        simple: (0..n).collect(),
        dim,
        coords: Some(coords),
        coeffs: Some(coeffs),
        simple_images,
    })
}

/// `I2(m)` as a combinatorial root system: positive root `k` is the direction
/// at angle `kπ/m`, the simple roots are directions `0` and `m−1`, and the
/// reflection in direction `j` sends direction `φ` to `2j + m − φ (mod 2m)`.
fn build_dihedral(m: usize) -> FactorData {
    let refl = |j: usize| -> Vec<(usize, bool)> {
        (0..m)
            .map(|phi| {
                let d = (2 * j + m + 2 * m - phi) % (2 * m);
                (d % m, d >= m)
            })
            .collect()
    };
    FactorData {
        npos: m,
        simple: vec![0, m - 1],
        dim: 0,
        coords: None,
        coeffs: None,
        simple_images: vec![refl(0), refl(m - 1)],
    }
}

impl RootSystem {
    pub fn build(ty: &CoxeterType) -> Result<RootSystem, RootSystemError> {
        let mut factors = Vec::new();
        let mut datas = Vec::new();
        let (mut npos, mut nsimple, mut dim) = (0, 0, 0);
        for f in ty.factors() {
            let d = match f {
                CoxeterType::I2(m) => build_dihedral(m),
                ref t => build_geometric(t)?,
            };
            factors.push(FactorInfo {
                ty: f,
                roots: npos..npos + d.npos,
                simple: nsimple..nsimple + d.simple.len(),
                ambient: dim..dim + d.dim,
            });
            npos += d.npos;
            nsimple += d.simple.len();
            dim += d.dim;
            datas.push(d);
        }
        if npos > MAX_POSITIVE_ROOTS {
            return Err(RootSystemError::TooLarge(npos));
        }
        let geometric = datas.iter().all(|d| d.coords.is_some());
        let mut simple = Vec::new();
        let mut simple_elems = Vec::new();
        let mut coords = geometric.then(Vec::new);
        let mut coeffs = geometric.then(Vec::new);
        for (f, d) in factors.iter().zip(&datas) {
            let off = f.roots.start;
            simple.extend(d.simple.iter().map(|s| s + off));
            for img in &d.simple_images {
                let mut full: Vec<(usize, bool)> = (0..npos).map(|i| (i, false)).collect();
                for (k, &(j, neg)) in img.iter().enumerate() {
                    full[off + k] = (off + j, neg);
                }
                simple_elems.push(GroupElement::from_images(&full));
            }
            if let (Some(cs), Some(fc)) = (coords.as_mut(), d.coords.as_ref()) {
                for v in fc {
                    let mut w = vec![QNum::zero(); dim];
                    for (k, x) in v.iter().enumerate() {
                        w[f.ambient.start + k] = x.clone();
                    }
                    cs.push(w);
                }
            }
            if let (Some(cs), Some(fc)) = (coeffs.as_mut(), d.coeffs.as_ref()) {
                for v in fc {
                    let mut w = vec![QNum::zero(); nsimple];
                    for (k, x) in v.iter().enumerate() {
                        w[f.simple.start + k] = x.clone();
                    }
                    cs.push(w);
                }
            }
        }
        let reflections = reflections_from_simple(npos, &simple, &simple_elems);
        let ortho = (0..npos)
            .map(|a| {
                (0..npos).filter(|&b| b != a && reflections[a].apply(b) == (b, false)).collect()
            })
            .collect();
        let root_class = root_classes(npos, &simple_elems);
        Ok(RootSystem {
            ty: ty.clone(),
            factors,
            ambient_dim: dim,
            simple,
            coords,
            coeffs,
            reflections,
            ortho,
            root_class,
        })
    }

    pub fn ty(&self) -> &CoxeterType {
        &self.ty
    }

    pub fn factors(&self) -> &[FactorInfo] {
        &self.factors
    }

    pub fn npos(&self) -> usize {
        self.reflections.len()
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn has_coordinates(&self) -> bool {
        self.coords.is_some()
    }

    pub fn coords(&self) -> Option<&[VectorQ]> {
        self.coords.as_deref()
    }

    pub fn root(&self, i: usize) -> Option<&VectorQ> {
        self.coords.as_ref().map(|c| &c[i])
    }

    /// Coefficients of positive root `i` in the simple roots.
    pub fn coefficients(&self, i: usize) -> Option<&VectorQ> {
        self.coeffs.as_ref().map(|c| &c[i])
    }

    /// Coordinates of all `2·npos` roots: positives, then their negatives.
    pub fn all_roots(&self) -> Option<Vec<VectorQ>> {
        let c = self.coords.as_ref()?;
        Some(c.iter().cloned().chain(c.iter().map(|v| vec_neg(v))).collect())
    }

    pub fn simple_roots(&self) -> Option<Vec<VectorQ>> {
        let c = self.coords.as_ref()?;
        Some(self.simple.iter().map(|&i| c[i].clone()).collect())
    }

    /// Pairwise inner products of the simple roots.
    pub fn cartan_products(&self) -> Option<MatrixQ> {
        let s = self.simple_roots()?;
        let rows: Vec<VectorQ> =
            s.iter().map(|a| s.iter().map(|b| inner_product(a, b).expect("same dim")).collect()).collect();
        Some(MatrixQ::from_rows(&rows))
    }

    /// Reflection `s_α` for positive root `α = β_r`.
    pub fn reflection(&self, r: usize) -> &GroupElement {
        &self.reflections[r]
    }

    pub fn reflections(&self) -> &[GroupElement] {
        &self.reflections
    }

    pub fn simple_reflection(&self, i: usize) -> &GroupElement {
        &self.reflections[self.simple[i]]
    }

    /// Copy whose reflection table maps `β_r` to the identity. Used to check
    /// that the verification suite notices a broken table.
    #[doc(hidden)]
    pub fn with_corrupted_reflection(&self, r: usize) -> RootSystem {
        let mut out = self.clone();
        out.reflections[r] = self.identity();
        out
    }

    pub fn simple_reflections(&self) -> Vec<GroupElement> {
        self.simple.iter().map(|&r| self.reflections[r].clone()).collect()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.npos())
    }

    /// Positive roots orthogonal to `β_a` (excluding `a`).
    pub fn orthogonal(&self, a: usize) -> &RootSet {
        &self.ortho[a]
    }

    pub fn is_orthogonal(&self, a: usize, b: usize) -> bool {
        self.ortho[a].contains(b)
    }

    /// Index of the W-orbit of `±β_i`; reflections are conjugate iff their
    /// roots have the same class.
    pub fn root_class(&self, i: usize) -> usize {
        self.root_class[i]
    }

    pub fn root_class_count(&self) -> usize {
        let mut v = self.root_class.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    /// Which factor a positive root belongs to.
    pub fn factor_of(&self, r: usize) -> usize {
        self.factors.iter().position(|f| f.roots.contains(&r)).expect("root index in range")
    }

    /// Product of simple reflections `s_{w[0]} s_{w[1]} ...`.
    pub fn word(&self, w: &[usize]) -> GroupElement {
        w.iter().fold(self.identity(), |acc, &i| acc.compose(self.simple_reflection(i)))
    }

    /// The element sending every positive root to a negative root.
    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        loop {
            let next = (0..self.rank()).find(|&i| !w.apply(self.simple[i]).1);
            match next {
                Some(i) => w = w.compose(self.simple_reflection(i)),
                None => return w,
            }
        }
    }

    /// Coxeter element `s_1 s_2 ... s_n`.
    pub fn coxeter_element(&self) -> GroupElement {
        self.word(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Matrix of `g` on V in the ambient coordinates: agrees with `g` on the
    /// simple roots and is the identity on their orthogonal complement.
    pub fn element_matrix(&self, g: &GroupElement) -> Result<MatrixQ, RootSystemError> {
        let coords = self.coords.as_ref().ok_or_else(|| RootSystemError::NoCoordinates(self.ty.to_string()))?;
        let simple: Vec<VectorQ> = self.simple.iter().map(|&i| coords[i].clone()).collect();
        let complement = if simple.is_empty() {
            (0..self.ambient_dim).map(|i| unit_vector(self.ambient_dim, i)).collect()
        } else {
            MatrixQ::from_rows(&simple).kernel()
        };
        let images: Vec<VectorQ> = self
            .simple
            .iter()
            .map(|&i| {
                let (j, neg) = g.apply(i);
                if neg {
                    vec_neg(&coords[j])
                } else {
                    coords[j].clone()
                }
            })
            .collect();
        let b = MatrixQ::from_columns(&[simple, complement.clone()].concat());
        let b2 = MatrixQ::from_columns(&[images, complement].concat());
        Ok(b2.mul(&b.inverse()?)?)
    }

    /// Fundamental weights `ω_i`, dual to the simple coroots.
    pub fn fundamental_weights(&self) -> Option<Vec<VectorQ>> {
        let s = self.simple_roots()?;
        let n = s.len();
        // Cartan matrix C_kj = 2⟨α_k, α_j⟩/⟨α_j, α_j⟩; ω_i = Σ_k (C⁻¹)_ik α_k.
        let mut c = MatrixQ::zeros(n, n);
        for k in 0..n {
            for j in 0..n {
                let num = &inner_product(&s[k], &s[j]).ok()? * &QNum::int(2);
                c[(k, j)] = &num / &inner_product(&s[j], &s[j]).ok()?;
            }
        }
        let ci = c.inverse().ok()?;
        Some(
            (0..n)
                .map(|i| {
                    (0..n).fold(vec![QNum::zero(); self.ambient_dim], |acc, k| {
                        crate::exactnum::vec_add(&acc, &vec_scale(&s[k], &ci[(i, k)]))
                    })
                })
                .collect(),
        )
    }

    /// Float Gram matrix `−cos(π/m_ij)` of the geometric representation.
    pub fn gram_f64(&self) -> Vec<Vec<f64>> {
        self.ty
            .coxeter_matrix()
            .iter()
            .map(|row| row.iter().map(|&m| -(std::f64::consts::PI / m as f64).cos()).collect())
            .collect()
    }

    /// JSON export of the root data.
    pub fn to_export(&self) -> RootSystemExport {
        let enc = |v: &VectorQ| v.iter().map(|x| x.coefficient_strings()).collect();
        RootSystemExport {
            r#type: self.ty.to_string(),
            ambient_dim: self.ambient_dim,
            positive_roots: self.npos(),
            simple_roots: self.simple_roots().map(|s| s.iter().map(enc).collect()),
            roots: self.all_roots().map(|s| s.iter().map(enc).collect()),
            coxeter_matrix: self.ty.coxeter_matrix(),
        }
    }
}

/// Serializable view of a root system; each coordinate is the rational
/// quadruple `[a, b, c, d]` of `a + b√2 + c√5 + d√10`.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemExport {
    pub r#type: String,
    pub ambient_dim: usize,
    pub positive_roots: usize,
    pub simple_roots: Option<Vec<Vec<[String; 4]>>>,
    pub roots: Option<Vec<Vec<[String; 4]>>>,
    pub coxeter_matrix: Vec<Vec<u32>>,
}

/// Reflections in all positive roots from the simple ones: if `s_j β = γ` is
/// positive then `s_β = s_j s_γ s_j`. Processing roots so that `γ` is always
/// handled before `β` needs only a BFS from the simple roots.
fn reflections_from_simple(npos: usize, simple: &[usize], simple_elems: &[GroupElement]) -> Vec<GroupElement> {
    let mut refl: Vec<Option<GroupElement>> = vec![None; npos];
    let mut queue = VecDeque::new();
    for (k, &r) in simple.iter().enumerate() {
        refl[r] = Some(simple_elems[k].clone());
        queue.push_back(r);
    }
    while let Some(g) = queue.pop_front() {
        for (k, s) in simple_elems.iter().enumerate() {
            if simple[k] == g {
                continue;
            }
            let (b, neg) = s.apply(g);
            debug_assert!(!neg);
            if refl[b].is_none() {
                let sg = refl[g].as_ref().unwrap();
                refl[b] = Some(s.compose(sg).compose(s));
                queue.push_back(b);
            }
        }
    }
    refl.into_iter().map(|r| r.expect("every positive root is reached from a simple root")).collect()
}

fn root_classes(npos: usize, simple_elems: &[GroupElement]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..npos).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    for s in simple_elems {
        for i in 0..npos {
            let (a, b) = (find(&mut parent, i), find(&mut parent, s.apply(i).0));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..npos).map(|i| find(&mut parent, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (s, n) in [("A1", 1), ("A4", 10), ("B3", 9), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120),
            ("F4", 24), ("G2", 6), ("H3", 15), ("H4", 60), ("I2(7)", 7), ("A2xB2", 7)]
        {
            let rs = build(s);
            assert_eq!(rs.npos(), n, "{s}");
            assert_eq!(rs.npos(), rs.ty().reflection_count());
        }
    }

    #[test]
    fn simple_roots_first_and_coxeter_matrix() {
        for s in ["A3", "B4", "D5", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(5)", "A1xI2(8)"] {
            let rs = build(s);
            let n = rs.rank();
            let m = rs.ty().coxeter_matrix();
            for i in 0..n {
                for j in 0..n {
                    let g = rs.simple_reflection(i).compose(rs.simple_reflection(j));
                    assert_eq!(g.order(), m[i][j] as u64, "{s} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn reflections_negate_their_root() {
        let rs = build("H4");
        for r in 0..rs.npos() {
            let s = rs.reflection(r);
            assert_eq!(s.apply(r), (r, true));
            assert!(s.is_involution());
            assert_eq!(s.negated_roots().len(), 1);
        }
    }

    #[test]
    fn short_reflection_in_b() {
        let rs = build("B4");
        let e1 = rs.coords().unwrap().iter().position(|v| *v == unit_vector(4, 0)).unwrap();
        let m = rs.element_matrix(rs.reflection(e1)).unwrap();
        let mut d = vec![QNum::one(); 4];
        d[0] = QNum::int(-1);
        assert_eq!(m, MatrixQ::diagonal(&d));
    }

    #[test]
    fn longest_element_of_e8_is_minus_one() {
        let rs = build("E8");
        let w0 = rs.longest_element();
        assert_eq!(w0.negated_roots().len(), 120);
        assert_eq!(rs.element_matrix(&w0).unwrap(), MatrixQ::identity(8).scale(&QNum::int(-1)));
        assert_eq!(rs.coxeter_element().order(), 30);
    }

    #[test]
    fn dihedral_longest_element() {
        let rs = build("I2(6)");
        assert_eq!(rs.longest_element().negated_roots().len(), 6);
        let rs = build("I2(5)");
        assert!(rs.longest_element().is_involution());
        assert_eq!(rs.longest_element().negated_roots().len(), 1);
    }
}
