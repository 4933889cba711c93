//! One-stop verification of every delta-matroid property for a single map.

use std::fmt;

use crate::delta::{
    check_basis_exchange, check_symmetric_exchange, cotree_bases, extreme_matroid, parity_uniform,
    spanning_tree_bases, Matroid, RankGap,
};
use crate::edgeset::SetFamily;
use crate::map::CombinatorialMap;
use crate::selection::{enumerate_feasible_gamma_with_limit, enumerate_feasible_k_with_limit, EnumError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Counterexample or mismatch description when the check fails.
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &'static str, failure: Option<String>) -> Self {
        Check {
            name,
            passed: failure.is_none(),
            detail: failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub edges: usize,
    pub vertices: usize,
    pub faces: usize,
    pub euler: i64,
    pub orientable: bool,
    pub gamma: SetFamily,
    pub k: SetFamily,
    pub lower_rank: usize,
    pub upper_rank: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Names of the checks, in report order.
pub const CHECKS: [&str; 8] = [
    "gamma-symmetric-exchange",
    "lower-is-cycle-matroid",
    "upper-is-cocycle-matroid",
    "k-symmetric-exchange",
    "k-matroids-equal-gamma",
    "rank-gap",
    "parity-matches-orientability",
    "extracted-bases-exchange",
];

fn extremes(family: &SetFamily) -> Option<(Matroid, Matroid)> {
    Some((
        extreme_matroid(family, family.min_size()?),
        extreme_matroid(family, family.max_size()?),
    ))
}

fn exchange_failure(family: &SetFamily, what: &str) -> Option<String> {
    match check_symmetric_exchange(family) {
        Ok(None) => None,
        Ok(Some(v)) => Some(v.to_string()),
        Err(e) => Some(format!("{what}: {e}")),
    }
}

fn family_mismatch(got: &SetFamily, want: &SetFamily, what: &str) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got}, expected {want}"))
}

/// Enumerates both feasible families and runs every check.
pub fn verify_all(name: &str, map: &CombinatorialMap, limit: usize) -> Result<Report, EnumError> {
    let gamma = enumerate_feasible_gamma_with_limit(map, limit)?;
    let k = enumerate_feasible_k_with_limit(map, limit)?;
    let graph = map.underlying_graph();
    let dual = map.dual_graph();
    let euler = map.euler_characteristic();
    let orientable = map.is_orientable();

    let mut checks = vec![Check::new("gamma-symmetric-exchange", exchange_failure(&gamma, "F_gamma"))];
    let gamma_m = extremes(&gamma);
    let k_m = extremes(&k);

    let trees = spanning_tree_bases(&graph).expect("graph of a map is connected");
    let cotrees = cotree_bases(&dual).expect("dual of a map is connected");
    let (lower_rank, upper_rank) = gamma_m
        .as_ref()
        .map_or((0, 0), |(lo, up)| (lo.rank(), up.rank()));
    match &gamma_m {
        Some((lo, up)) => {
            checks.push(Check::new("lower-is-cycle-matroid", family_mismatch(lo.bases(), &trees, "lower bases")));
            checks.push(Check::new("upper-is-cocycle-matroid", family_mismatch(up.bases(), &cotrees, "upper bases")));
        }
        None => {
            checks.push(Check::new("lower-is-cycle-matroid", Some("F_gamma is empty".into())));
            checks.push(Check::new("upper-is-cocycle-matroid", Some("F_gamma is empty".into())));
        }
    }

    checks.push(Check::new("k-symmetric-exchange", exchange_failure(&k, "F_K")));
    let same = match (&gamma_m, &k_m) {
        (Some((gl, gu)), Some((kl, ku))) => family_mismatch(kl.bases(), gl.bases(), "lower bases of D_K")
            .or_else(|| family_mismatch(ku.bases(), gu.bases(), "upper bases of D_K")),
        _ => Some("a feasible family is empty".into()),
    };
    checks.push(Check::new("k-matroids-equal-gamma", same));

    let gap = RankGap {
        upper: upper_rank,
        lower: lower_rank,
        euler,
    };
    checks.push(Check::new(
        "rank-gap",
        (gamma_m.is_none() || !gap.holds()).then(|| format!("{upper_rank} - {lower_rank} != 2 - ({euler})")),
    ));

    let parity = parity_uniform(&gamma).map_err(|e| e.to_string());
    checks.push(Check::new(
        "parity-matches-orientability",
        match parity {
            Ok(uniform) if uniform == orientable => None,
            Ok(uniform) => Some(format!("parity uniform = {uniform}, orientable = {orientable}")),
            Err(e) => Some(e),
        },
    ));

    let basis_failure = gamma_m
        .iter()
        .chain(k_m.iter())
        .flat_map(|(lo, up)| [lo, up])
        .find_map(|m| match check_basis_exchange(m.bases()) {
            Ok(None) => None,
            Ok(Some(v)) => Some(v.to_string()),
            Err(e) => Some(e.to_string()),
        });
    checks.push(Check::new("extracted-bases-exchange", basis_failure));
    debug_assert_eq!(checks.iter().map(|c| c.name).collect::<Vec<_>>(), CHECKS);

    Ok(Report {
        name: name.to_string(),
        edges: map.edge_count(),
        vertices: map.vertex_count(),
        faces: map.face_count(),
        euler,
        orientable,
        gamma,
        k,
        lower_rank,
        upper_rank,
        checks,
    })
}

/// Families longer than this are summarized by their size.
const LIST_LIMIT: usize = 32;

fn write_family(f: &mut fmt::Formatter<'_>, label: &str, family: &SetFamily) -> fmt::Result {
    if family.len() <= LIST_LIMIT {
        writeln!(f, "{label} ({}): {family}", family.len())
    } else {
        writeln!(f, "{label} ({}): [not listed]", family.len())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "map {}", self.name)?;
        writeln!(
            f,
            "edges {}  vertices {}  faces {}  euler {}  orientable {}",
            self.edges,
            self.vertices,
            self.faces,
            self.euler,
            if self.orientable { "yes" } else { "no" }
        )?;
        write_family(f, "F_gamma", &self.gamma)?;
        write_family(f, "F_K", &self.k)?;
        writeln!(f, "lower rank {}  upper rank {}", self.lower_rank, self.upper_rank)?;
        for c in &self.checks {
            match &c.detail {
                None => writeln!(f, "[pass] {}", c.name)?,
                Some(d) => writeln!(f, "[FAIL] {}: {d}", c.name)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::selection::MAX_ENUM_EDGES;

    #[test]
    fn torus_report() {
        let report = verify_all("torus1v", &fixtures::get("torus1v").unwrap(), MAX_ENUM_EDGES).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.gamma.to_string(), "{{}, {1,2}}");
        assert_eq!(report.k.len(), 4);
        assert_eq!((report.lower_rank, report.upper_rank), (0, 2));
        let text = report.to_string();
        assert!(text.contains("F_gamma (2): {{}, {1,2}}"), "{text}");
        assert_eq!(text.matches("[pass]").count(), CHECKS.len());
    }

    #[test]
    fn every_fixture_passes() {
        for (name, map) in fixtures::all() {
            let report = verify_all(name, &map, MAX_ENUM_EDGES).unwrap();
            assert!(report.all_passed(), "{report}");
        }
    }
}
