use super::entries::CatalogEntry;
use super::verify::{default_samples, fingerprint, killing_signs, Fingerprint};
use crate::error::Result;
use crate::exact::{Assignment, RatFunc, Rational};
use crate::liealg::Matrix3;
use crate::manin::{search_witness_with, ManinTriple};

/// Entries `p/q` of a candidate transformation: `|p| ≤ bound`, `q` in
/// `denominators`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WitnessGrid {
    pub bound: u32,
    pub denominators: &'static [u32],
}

/// Grids tried in order: the small one first, then one wide enough for the
/// `a`-dependent entries of the VI_a self-dualities.
pub const WITNESS_GRIDS: [WitnessGrid; 2] = [
    WitnessGrid {
        bound: 2,
        denominators: &[1, 2],
    },
    WitnessGrid {
        bound: 4,
        denominators: &[1, 2, 3, 4, 6],
    },
];

/// Values of `b` tried on the target side of a witness search.
const B_CANDIDATES: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];

/// How two entries with equal fingerprints were told apart.
#[derive(Clone, Debug, PartialEq)]
pub enum Separation {
    /// A further invariant differs (named, with both values).
    Invariant(String),
    /// Nothing separates them, and no witness exists on the search grids.
    NoWitnessWithinBound,
    /// An equivalence was found: the two entries are the same class.
    Witness {
        from: Assignment,
        to: Assignment,
        matrix: Matrix3,
    },
}

#[derive(Clone, Debug)]
pub struct PairResult {
    pub first: String,
    pub second: String,
    pub separation: Separation,
}

#[derive(Clone, Debug)]
pub struct FingerprintGroup {
    pub fingerprint: Fingerprint,
    pub ids: Vec<String>,
    pub pairs: Vec<PairResult>,
}

#[derive(Clone, Debug)]
pub struct DistinctnessReport {
    pub groups: Vec<FingerprintGroup>,
}

impl DistinctnessReport {
    /// Pairs claimed distinct for which an equivalence was found.
    pub fn contradictions(&self) -> Vec<&PairResult> {
        self.groups
            .iter()
            .flat_map(|g| &g.pairs)
            .filter(|p| matches!(p.separation, Separation::Witness { .. }))
            .collect()
    }
}

fn b_targets(e: &CatalogEntry, base: &Assignment) -> Vec<Assignment> {
    if !e.parameters().iter().any(|p| p == "b") {
        return vec![base.clone()];
    }
    B_CANDIDATES
        .iter()
        .map(|&(n, d)| {
            let mut v = base.clone();
            v.insert("b".into(), Rational::frac(n, d));
            v
        })
        .filter(|v| e.param_constraints().iter().all(|c| c.check(v).is_ok()))
        .collect()
}

/// Searches for a witness from `t` to `target` at any candidate `b`, with
/// the remaining target parameters taken from `base`.
fn witness_to(t: &ManinTriple<Rational>, target: &CatalogEntry, base: &Assignment) -> Option<(Assignment, Matrix3)> {
    let targets: Vec<_> = b_targets(target, base)
        .into_iter()
        .filter_map(|v| target.instantiate(&v).ok().map(|t2| (v, t2)))
        .collect();
    for grid in WITNESS_GRIDS {
        for (values, t2) in &targets {
            if let Some(m) = search_witness_with(t, t2, grid.bound, grid.denominators) {
                return Some((values.clone(), m));
            }
        }
    }
    None
}

fn a_only(values: &Assignment) -> Assignment {
    values
        .iter()
        .filter(|(k, _)| k.as_str() == "a")
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect()
}

fn compare(e1: &CatalogEntry, e2: &CatalogEntry) -> Result<Separation> {
    let samples: Vec<Assignment> = default_samples(e1)
        .into_iter()
        .filter(|s| s.get("b").is_none_or(|b| b.is_one()))
        .collect();
    for s in &samples {
        let t1 = e1.instantiate(s)?;
        let base = a_only(s);
        let targets = b_targets(e2, &base);
        let t2 = e2.instantiate(&targets[0])?;
        let (k1, k2) = (killing_signs(&t1), killing_signs(&t2));
        if k1 != k2 {
            return Ok(Separation::Invariant(format!(
                "signs of K(ã,ã), K~(a,a): {k1:?} vs {k2:?} at {}",
                crate::manin::format_assignment(&base)
            )));
        }
        if let Some((to, matrix)) = witness_to(&t1, e2, &base) {
            return Ok(Separation::Witness {
                from: s.clone(),
                to,
                matrix,
            });
        }
    }
    Ok(Separation::NoWitnessWithinBound)
}

/// Groups entries by fingerprint and, within each group, tries to separate
/// every pair by further invariants or else by an exhaustive bounded
/// witness search.
pub fn pairwise_distinctness(list: &[CatalogEntry]) -> Result<DistinctnessReport> {
    let mut groups: Vec<FingerprintGroup> = Vec::new();
    for e in list {
        let fp = fingerprint(e)?;
        match groups.iter_mut().find(|g| g.fingerprint == fp) {
            Some(g) => g.ids.push(e.id.clone()),
            None => groups.push(FingerprintGroup {
                fingerprint: fp,
                ids: vec![e.id.clone()],
                pairs: vec![],
            }),
        }
    }
    let by_id = |id: &str| list.iter().find(|e| e.id == id).expect("listed id");
    for g in &mut groups {
        for i in 0..g.ids.len() {
            for j in i + 1..g.ids.len() {
                let separation = compare(by_id(&g.ids[i]), by_id(&g.ids[j]))?;
                g.pairs.push(PairResult {
                    first: g.ids[i].clone(),
                    second: g.ids[j].clone(),
                    separation,
                });
            }
        }
    }
    Ok(DistinctnessReport { groups })
}

/// How the dual link of an entry was confirmed.
#[derive(Clone, Debug, PartialEq)]
pub enum DualLinkCheck {
    /// The linked entry stores exactly the swapped triple.
    Exact,
    /// The swapped triple at `from` maps onto the linked entry at `to`.
    Witness {
        from: Assignment,
        to: Assignment,
        matrix: Matrix3,
    },
    NotConfirmed,
}

/// Confirms `dual_of` for one entry, exactly when the linked entry stores
/// the swapped triple and otherwise by witness search at the default
/// samples with `b = 1`. The linked entry is evaluated at the `a` implied
/// by the dual type claim (e.g. `1/a`).
pub fn check_dual_link(e: &CatalogEntry, list: &[CatalogEntry]) -> Result<DualLinkCheck> {
    let Some(d) = e.dual_of.as_ref().and_then(|id| list.iter().find(|x| &x.id == id)) else {
        return Ok(DualLinkCheck::NotConfirmed);
    };
    if e.triple.dual() == d.triple {
        return Ok(DualLinkCheck::Exact);
    }
    for s in default_samples(e)
        .into_iter()
        .filter(|s| s.get("b").is_none_or(|b| b.is_one()))
    {
        let swapped = e.instantiate(&s)?.dual();
        let mut base = Assignment::new();
        if let (Some(p), Some(_)) = (&e.g_dual_type.param, &d.g_type.param) {
            base.insert("a".into(), RatFunc::eval(p, &s)?);
        }
        if let Some((to, matrix)) = witness_to(&swapped, d, &base) {
            return Ok(DualLinkCheck::Witness { from: s, to, matrix });
        }
    }
    Ok(DualLinkCheck::NotConfirmed)
}

/// Entries whose dual triple is confirmed to lie in the same class. Only
/// entries whose two subalgebras share a class can qualify.
pub fn fixed_points(list: &[CatalogEntry]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for e in list {
        if e.g_type.class != e.g_dual_type.class {
            continue;
        }
        let mut probe = e.clone();
        probe.dual_of = Some(e.id.clone());
        if check_dual_link(&probe, list)? != DualLinkCheck::NotConfirmed {
            out.push(e.id.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entries::{entries, entry, SELF_DUAL};

    #[test]
    fn self_dual_set_is_computed() {
        let list = entries();
        let found = fixed_points(&list).unwrap();
        let mut found = found;
        found.sort();
        let mut expected: Vec<String> = SELF_DUAL.iter().map(|s| s.to_string()).collect();
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn all_dual_links_confirmed() {
        let list = entries();
        for e in &list {
            assert_ne!(
                check_dual_link(e, &list).unwrap(),
                DualLinkCheck::NotConfirmed,
                "{}",
                e.id
            );
        }
    }

    #[test]
    fn entry_equivalent_to_itself() {
        let e = entry("VIII.b.i").unwrap();
        assert!(matches!(compare(&e, &e).unwrap(), Separation::Witness { .. }));
    }

    #[test]
    fn no_contradictions() {
        let report = pairwise_distinctness(&entries()).unwrap();
        assert!(report.contradictions().is_empty(), "{:?}", report.contradictions());
        let viii = report
            .groups
            .iter()
            .find(|g| g.ids.contains(&"VIII.b.i".to_string()))
            .unwrap();
        assert_eq!(viii.ids.len(), 3);
        assert!(viii
            .pairs
            .iter()
            .all(|p| matches!(p.separation, Separation::Invariant(_))));
    }
}
