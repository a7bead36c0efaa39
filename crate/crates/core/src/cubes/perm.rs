//! Permutations of a few points, enough for groups acting on a cube base.

use std::collections::HashSet;
use std::fmt;

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// From cycles written on points `1..=n`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Perm {
        let mut v: Vec<u8> = (0..n as u8).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                v[x - 1] = (c[(k + 1) % c.len()] - 1) as u8;
            }
        }
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j as usize] = i as u8;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn order(&self) -> u64 {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Image of a subset given as a bitmask.
    pub fn apply_mask(&self, mask: u32) -> u32 {
        self.0.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, &j)| acc | 1 << j)
    }

    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for s in 0..n {
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }

    /// Cycle notation on points `1..=n`, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i + 1);
                i = self.0[i] as usize;
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.cycles();
        if c.is_empty() {
            return write!(f, "()");
        }
        for cyc in c {
            let s: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Group generated by `gens` on `n` points.
pub fn generate(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let h = out[k].compose(g);
            if seen.insert(h.clone()) {
                out.push(h);
            }
        }
        k += 1;
    }
    out
}

/// Commutator subgroup of the finite group `elements`.
pub fn derived_subgroup(elements: &[Perm]) -> Vec<Perm> {
    let n = elements.first().map_or(0, Perm::degree);
    let comms: HashSet<Perm> = elements
        .iter()
        .flat_map(|a| elements.iter().map(move |b| a.inverse().compose(&b.inverse()).compose(a).compose(b)))
        .collect();
    generate(n, &comms.into_iter().collect::<Vec<_>>())
}

/// Orbits of the group on subsets of `0..n`, as representative bitmasks.
pub fn subset_orbits(n: usize, elements: &[Perm]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; 1 << n];
    let mut orbits = Vec::new();
    for m in 0..1u32 << n {
        if seen[m as usize] {
            continue;
        }
        let mut orbit: Vec<u32> = elements.iter().map(|p| p.apply_mask(m)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            seen[x as usize] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_on_four() {
        let g = generate(4, &[Perm(vec![1, 0, 2, 3]), Perm(vec![1, 2, 3, 0])]);
        assert_eq!(g.len(), 24);
        assert_eq!(derived_subgroup(&g).len(), 12);
        assert_eq!(subset_orbits(4, &g).len(), 5);
        assert_eq!(g.iter().filter(|p| p.is_even()).count(), 12);
    }

    #[test]
    fn cycle_display() {
        assert_eq!(format!("{:?}", Perm(vec![1, 0, 3, 4, 2])), "(1 2)(3 4 5)");
        assert_eq!(Perm::from_cycles(5, &[&[1, 2], &[3, 4, 5]]), Perm(vec![1, 0, 3, 4, 2]));
        assert_eq!(Perm(vec![1, 2, 0]).order(), 3);
        assert_eq!(Perm(vec![1, 0, 2]).apply_mask(0b101), 0b110);
    }
}
