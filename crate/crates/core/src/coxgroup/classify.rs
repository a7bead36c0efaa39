//! Recognising Coxeter types from Coxeter matrices and root subsystems.

use thiserror::Error;

use super::element::GroupElement;
use super::rootset::RootSet;
use super::rootsys::RootSystem;
use super::types::CoxeterType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("Coxeter matrix is not symmetric with unit diagonal")]
    Malformed,
    #[error("Coxeter graph component is not a finite type")]
    NotFinite,
    #[error("generator {0} is not an involution")]
    NotInvolution(usize),
}

/// Entry `(i, j)` is the order of `g_i g_j`.
pub fn coxeter_matrix_of(gens: &[GroupElement]) -> Result<Vec<Vec<u32>>, ClassifyError> {
    for (i, g) in gens.iter().enumerate() {
        if g.is_identity() || !g.is_involution() {
            return Err(ClassifyError::NotInvolution(i));
        }
    }
    Ok(gens.iter().map(|a| gens.iter().map(|b| a.compose(b).order() as u32).collect()).collect())
}

/// Finite type of a Coxeter matrix, in canonical names (`A2`, `B2`, `G2`
/// rather than `I2(3)`, `I2(4)`, `I2(6)`). An empty matrix is the trivial
/// product.
pub fn classify_coxeter_matrix(m: &[Vec<u32>]) -> Result<CoxeterType, ClassifyError> {
    let n = m.len();
    for i in 0..n {
        if m[i].len() != n || m[i][i] != 1 {
            return Err(ClassifyError::Malformed);
        }
        for j in 0..n {
            if m[i][j] != m[j][i] || (i != j && m[i][j] < 2) {
                return Err(ClassifyError::Malformed);
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut factors = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..n {
                if j != i && m[i][j] > 2 && comp[j] == usize::MAX {
                    comp[j] = start;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        let sub: Vec<Vec<u32>> = nodes.iter().map(|&i| nodes.iter().map(|&j| m[i][j]).collect()).collect();
        factors.push(classify_connected(&sub)?);
    }
    let mut factors: Vec<CoxeterType> = factors.into_iter().map(|t| t.canonical()).collect();
    factors.sort();
    Ok(CoxeterType::Product(factors).canonical_product())
}

fn classify_connected(m: &[Vec<u32>]) -> Result<CoxeterType, ClassifyError> {
    use CoxeterType::*;
    let n = m.len();
    let nbrs = |i: usize| (0..n).filter(move |&j| j != i && m[i][j] > 2);
    let edges: usize = (0..n).map(|i| nbrs(i).count()).sum::<usize>() / 2;
    if edges + 1 != n {
        return Err(ClassifyError::NotFinite);
    }
    match n {
        1 => return Ok(A(1)),
        2 => return Ok(I2(m[0][1] as usize).canonical()),
        _ => {}
    }
    let degrees: Vec<usize> = (0..n).map(|i| nbrs(i).count()).collect();
    let branch: Vec<usize> = (0..n).filter(|&i| degrees[i] >= 3).collect();
    if branch.is_empty() {
        // A path: read the labels from one end.
        let end = (0..n).find(|&i| degrees[i] == 1).ok_or(ClassifyError::NotFinite)?;
        let (mut prev, mut cur) = (usize::MAX, end);
        let mut labels = Vec::new();
        loop {
            let Some(next) = nbrs(cur).find(|&j| j != prev) else { break };
            labels.push(m[cur][next]);
            prev = cur;
            cur = next;
        }
        let rev: Vec<u32> = labels.iter().rev().copied().collect();
        let is = |pat: &[u32]| labels == pat || rev == pat;
        if labels.iter().all(|&l| l == 3) {
            return Ok(A(n));
        }
        let mut b = vec![3; n - 1];
        b[n - 2] = 4;
        if is(&b) {
            return Ok(B(n));
        }
        if is(&[3, 4, 3]) {
            return Ok(F4);
        }
        if is(&[5, 3]) {
            return Ok(H3);
        }
        if is(&[5, 3, 3]) {
            return Ok(H4);
        }
        return Err(ClassifyError::NotFinite);
    }
    if branch.len() != 1 || degrees[branch[0]] != 3 || (0..n).any(|i| (0..n).any(|j| m[i][j] > 3)) {
        return Err(ClassifyError::NotFinite);
    }
    let c = branch[0];
    let mut arms: Vec<usize> = nbrs(c)
        .map(|start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            while let Some(next) = nbrs(cur).find(|&j| j != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, k] => Ok(D(k + 3)),
        [1, 2, 2] => Ok(E6),
        [1, 2, 3] => Ok(E7),
        [1, 2, 4] => Ok(E8),
        _ => Err(ClassifyError::NotFinite),
    }
}

impl CoxeterType {
    /// Unwraps one-factor products; the empty product stays as `Product([])`.
    fn canonical_product(self) -> CoxeterType {
        match self {
            CoxeterType::Product(mut v) if v.len() == 1 => v.pop().unwrap(),
            t => t,
        }
    }
}

/// Simple roots of the root subsystem whose positive roots are `psi`: those
/// `α` for which `s_α` permutes `psi ∖ {α}`. The set must be closed under its
/// own reflections.
pub fn subsystem_simple_roots(rs: &RootSystem, psi: &RootSet) -> Vec<usize> {
    psi.iter()
        .filter(|&a| {
            let s = rs.reflection(a);
            psi.iter().filter(|&b| b != a).all(|b| {
                let (c, neg) = s.apply(b);
                !neg && psi.contains(c)
            })
        })
        .collect()
}

/// Abstract type of the reflection subgroup generated by the reflections in
/// the closed root subset `psi`.
pub fn subsystem_type(rs: &RootSystem, psi: &RootSet) -> Result<CoxeterType, ClassifyError> {
    let simple = subsystem_simple_roots(rs, psi);
    let gens: Vec<GroupElement> = simple.iter().map(|&a| rs.reflection(a).clone()).collect();
    classify_coxeter_matrix(&coxeter_matrix_of(&gens)?)
}

/// Smallest root subset containing `seed` and closed under the reflections in
/// its own members.
pub fn reflection_closure(rs: &RootSystem, seed: &RootSet) -> RootSet {
    let mut set = *seed;
    loop {
        let mut next = set;
        for a in set.iter() {
            for b in set.iter() {
                next.insert(rs.reflection(a).apply(b).0);
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_catalog_matrices() {
        for s in ["A5", "B3", "D4", "D7", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(7)", "A2xB3", "A1xA1"] {
            let t: CoxeterType = s.parse().unwrap();
            let got = classify_coxeter_matrix(&t.coxeter_matrix()).unwrap();
            assert!(got.is_isomorphic(&t), "{s}: {got}");
        }
    }

    #[test]
    fn rejects_affine() {
        // Ã2: a triangle of 3s.
        let m = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        assert!(classify_coxeter_matrix(&m).is_err());
    }

    #[test]
    fn whole_system_is_its_own_subsystem() {
        for s in ["D5", "H3", "F4"] {
            let rs = RootSystem::build(&s.parse().unwrap()).unwrap();
            let all = RootSet::full(rs.npos());
            assert_eq!(subsystem_simple_roots(&rs, &all), (0..rs.rank()).collect::<Vec<_>>());
            assert!(subsystem_type(&rs, &all).unwrap().is_isomorphic(rs.ty()));
        }
    }
}
