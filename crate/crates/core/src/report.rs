//! Per-type reports and the summary tables printed by the command-line tool.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::coxgroup::{CoxeterType, RootSystem, RootSystemError};
use crate::cubes::{census, cubes_with_extremity, involutions_by_cubes, phi_group};
use crate::involutions::{
    characteristic_degrees, class_key, classes_by_orbit, h_polynomial, h_polynomial_formula, orbit_of, HMethod,
    HPolynomial, Involution,
};

/// Types with more positive roots than this get no class table or census,
/// unless they are of odd type (where cubes stay few).
const CLASS_TABLE_ROOT_LIMIT: usize = 64;

#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    pub degree: usize,
    pub class_key: String,
    pub size: usize,
    /// Orthogonal base of a representative, as positive-root indices.
    pub representative: Vec<usize>,
    /// Cubes whose extremity is this representative.
    pub cubes_with_extremity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub rank: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub r#type: String,
    pub order: String,
    pub reflections: usize,
    pub reduced_rank: usize,
    pub h_formula: Vec<u64>,
    /// Counted from the group; `None` with a reason in `notes` when out of
    /// reach.
    pub h_enumerated: Option<Vec<u64>>,
    /// Set when the two h-polynomials disagree.
    pub h_mismatch: bool,
    pub classes: Option<Vec<ClassEntry>>,
    pub cubes_by_rank: Option<Vec<CensusEntry>>,
    pub maximal_cubes: Option<usize>,
    pub phi_order: Option<usize>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub fn build_report(ty: &CoxeterType, limit: u128, timing: bool) -> Result<Report, RootSystemError> {
    let start = Instant::now();
    let rs = RootSystem::build(ty)?;
    let mut notes = Vec::new();
    let formula = h_polynomial_formula(ty);
    let enumerated = match h_polynomial(&rs, HMethod::Enumeration { limit }) {
        Ok(p) => Some(p),
        Err(e) => {
            notes.push(format!("h-polynomial not enumerated: {e}"));
            None
        }
    };
    let h_mismatch = enumerated.as_ref().is_some_and(|p| *p != formula);
    let small = rs.npos() <= CLASS_TABLE_ROOT_LIMIT || ty.is_odd_type();
    let (classes, cubes_by_rank, maximal_cubes) = if small {
        let cen = census(&rs);
        let by_rank = cen.by_rank.iter().enumerate().map(|(rank, &count)| CensusEntry { rank, count }).collect();
        (Some(class_entries(&rs)), Some(by_rank), Some(cen.maximal_count()))
    } else {
        notes.push(format!("class table and cube census skipped above {CLASS_TABLE_ROOT_LIMIT} positive roots"));
        (None, None, None)
    };
    let phi_order = match phi_group(&rs) {
        Ok(phi) => Some(phi.order()),
        Err(e) => {
            notes.push(format!("phi group unavailable: {e}"));
            None
        }
    };
    Ok(Report {
        r#type: ty.to_string(),
        order: ty.order().to_string(),
        reflections: rs.npos(),
        reduced_rank: ty.reduced_rank(),
        h_formula: formula.coeffs,
        h_enumerated: enumerated.map(|p| p.coeffs),
        h_mismatch,
        classes,
        cubes_by_rank,
        maximal_cubes,
        phi_order,
        notes,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Conjugacy classes of involutions by orbit computation, sorted by degree
/// then key.
pub fn class_entries(rs: &RootSystem) -> Vec<ClassEntry> {
    let mut out: Vec<ClassEntry> = classes_by_orbit(rs, &involutions_by_cubes(rs))
        .into_iter()
        .map(|class| {
            let u = Involution::from_minus_roots(rs, class[0]);
            let representative = crate::involutions::greedy_base(rs, &u.minus_roots);
            ClassEntry {
                degree: u.degree,
                class_key: class_key(rs, &u.minus_roots).to_string(),
                size: class.len(),
                cubes_with_extremity: cubes_with_extremity(rs, &u.element),
                representative,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.degree, &a.class_key, &a.representative).cmp(&(b.degree, &b.class_key, &b.representative)));
    out
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let poly = |c: &[u64]| HPolynomial::new(c.to_vec()).to_string();
        let _ = writeln!(s, "type            {}", self.r#type);
        let _ = writeln!(s, "order           {}", self.order);
        let _ = writeln!(s, "reflections     {}", self.reflections);
        let _ = writeln!(s, "reduced rank    {}", self.reduced_rank);
        let _ = writeln!(s, "h (closed form) {}", poly(&self.h_formula));
        if let Some(h) = &self.h_enumerated {
            let flag = if self.h_mismatch { "  MISMATCH" } else { "" };
            let _ = writeln!(s, "h (enumerated)  {}{flag}", poly(h));
        }
        if let Some(m) = self.maximal_cubes {
            let _ = writeln!(s, "maximal cubes   {m}");
        }
        if let Some(p) = self.phi_order {
            let _ = writeln!(s, "phi order       {p}");
        }
        if let Some(c) = &self.cubes_by_rank {
            let counts: Vec<String> = c.iter().map(|e| e.count.to_string()).collect();
            let _ = writeln!(s, "cubes by rank   {}", counts.join(" "));
        }
        if let Some(classes) = &self.classes {
            let _ = writeln!(s, "involution classes:");
            let _ = writeln!(s, "  {:>6}  {:>8}  {:>6}  key", "degree", "size", "cubes");
            for c in classes {
                let _ = writeln!(s, "  {:>6}  {:>8}  {:>6}  {}", c.degree, c.size, c.cubes_with_extremity, c.class_key);
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(s, "elapsed         {ms} ms");
        }
        s
    }
}

/// A header and string rows, printable as CSV or aligned text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Table {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.header.join(",") + "\n";
        for r in &self.rows {
            s += &r.join(",");
            s.push('\n');
        }
        s
    }

    pub fn to_text(&self) -> String {
        let cols = self.header.len();
        let width: Vec<usize> = (0..cols)
            .map(|i| self.rows.iter().map(|r| r.get(i).map_or(0, |x| x.len())).chain([self.header[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |r: &[String]| {
            let cells: Vec<String> = r.iter().enumerate().map(|(i, x)| format!("{x:<w$}", w = width.get(i).copied().unwrap_or(0))).collect();
            cells.join("  ").trim_end().to_string() + "\n"
        };
        let mut s = line(&self.header);
        for r in &self.rows {
            s += &line(r);
        }
        s
    }
}

fn types(names: &[&str]) -> Vec<CoxeterType> {
    names.iter().map(|s| s.parse().expect("built-in type string")).collect()
}

/// Closed-form h-polynomials. The coefficients occupy the trailing
/// columns, so rows have different lengths.
pub fn h_poly_table() -> Table {
    let mut t = Table::new(&["type", "coefficients"]);
    let list = types(&[
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10", "D4",
        "D5", "D6", "D7", "D8", "D9", "D10", "D11", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(5)", "I2(8)",
    ]);
    for ty in list {
        let mut row = vec![ty.to_string()];
        row.extend(h_polynomial_formula(&ty).coeffs.iter().map(|c| c.to_string()));
        t.rows.push(row);
    }
    t
}

/// Maximal cubes and cubes with extremity −1, counted by clique
/// enumeration.
pub fn cube_count_table() -> Result<Table, RootSystemError> {
    let mut t = Table::new(&["type", "maximal_cubes", "cubes_with_extremity_minus_one"]);
    for ty in types(&["A1", "B2", "G2", "D4", "D6", "D8", "H3", "H4", "E7", "E8"]) {
        let rs = RootSystem::build(&ty)?;
        let maximal = crate::cubes::maximal_cubes(&rs).len();
        let minus_one = cubes_with_extremity(&rs, &rs.longest_element());
        t.rows.push(vec![ty.to_string(), maximal.to_string(), minus_one.to_string()]);
    }
    Ok(t)
}

/// Characteristic degrees with the identities they satisfy.
pub fn degree_table() -> Result<Table, String> {
    let mut t = Table::new(&[
        "type",
        "degrees",
        "product",
        "order",
        "exponent_sum",
        "reflections",
        "even_count",
        "reduced_rank",
        "odd_product",
        "maximal_involutions",
    ]);
    for ty in crate::verify::irreducible_up_to_rank_8() {
        let rs = RootSystem::build(&ty).map_err(|e| e.to_string())?;
        let d = characteristic_degrees(&rs).map_err(|e| format!("{ty}: {e}"))?;
        let product: u128 = d.iter().map(|&x| x as u128).product();
        let odd: u128 = d.iter().filter(|&&x| x % 2 == 1).map(|&x| x as u128).product();
        let maximal = orbit_of(&rs, &rs.longest_element().negated_roots()).len();
        let ds: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        t.rows.push(vec![
            ty.to_string(),
            ds.join(" "),
            product.to_string(),
            ty.order().to_string(),
            d.iter().map(|&x| x as usize - 1).sum::<usize>().to_string(),
            rs.npos().to_string(),
            d.iter().filter(|&&x| x % 2 == 0).count().to_string(),
            ty.reduced_rank().to_string(),
            odd.to_string(),
            maximal.to_string(),
        ]);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_rows() {
        let csv = h_poly_table().to_csv();
        assert!(csv.contains("\nB9,1,2,3,4,5,5,4,3,2,1\n"));
        let t = degree_table().unwrap();
        let e6 = t.rows.iter().find(|r| r[0] == "E6").unwrap();
        assert_eq!(e6[6], "4");
        assert_eq!(e6[9], "45");
    }

    #[test]
    fn report_for_d4() {
        let r = build_report(&"D4".parse().unwrap(), crate::coxgroup::DEFAULT_LIMIT, false).unwrap();
        assert_eq!(r.h_formula, vec![1, 1, 3, 1, 1]);
        assert_eq!(r.h_enumerated.as_deref(), Some(&[1, 1, 3, 1, 1][..]));
        assert!(!r.h_mismatch);
        assert_eq!(r.classes.as_ref().unwrap().len(), 7);
        assert_eq!(r.maximal_cubes, Some(3));
    }

    #[test]
    fn text_table_alignment() {
        let mut t = Table::new(&["a", "bb"]);
        t.rows.push(vec!["xyz".into(), "1".into()]);
        assert_eq!(t.to_text(), "a    bb\nxyz  1\n");
    }
}
