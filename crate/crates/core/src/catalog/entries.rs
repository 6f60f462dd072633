use std::fmt;

use crate::error::Result;
use crate::exact::{Assignment, RatFunc, Rational};
use crate::liealg::{BianchiClass, BianchiType, StructureConstants};
use crate::manin::{Constraint, ManinTriple};

/// Claimed Bianchi type of one subalgebra. For VIa and VIIa, `param` gives
/// the Bianchi parameter as an expression in the entry's parameters, e.g.
/// `1/a` for the dual of a `VI_a` algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeClaim {
    pub class: BianchiClass,
    pub param: Option<RatFunc>,
}

impl TypeClaim {
    pub fn fixed(class: BianchiClass) -> Self {
        TypeClaim { class, param: None }
    }

    pub fn with_param(class: BianchiClass, param: &str) -> Self {
        TypeClaim {
            class,
            param: Some(param.parse().expect("valid parameter expression")),
        }
    }

    /// Square of the Bianchi parameter, kept symbolic.
    pub fn a_squared(&self) -> Option<RatFunc> {
        self.param.as_ref().map(|p| p.pow(2))
    }

    /// The claimed type at concrete parameter values.
    pub fn at(&self, values: &Assignment) -> Result<BianchiType> {
        Ok(match &self.param {
            Some(p) => BianchiType::with_a_squared(self.class, p.eval(values)?.pow(2)),
            None => BianchiType::fixed(self.class),
        })
    }
}

impl fmt::Display for TypeClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param {
            Some(p) => write!(f, "{}(a^2={})", self.class.name(), p.pow(2)),
            None => write!(f, "{}", self.class.name()),
        }
    }
}

/// One class of Manin triples: a first algebra in Bianchi form with one
/// representative second algebra, possibly depending on `a` and `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub g_type: TypeClaim,
    pub g_dual_type: TypeClaim,
    /// Parametric triple; its constraints are the admissible parameter range.
    pub triple: ManinTriple<RatFunc>,
    /// Entry holding the dual triple (itself for self-dual classes).
    pub dual_of: Option<String>,
    pub self_dual: bool,
}

impl CatalogEntry {
    pub fn param_constraints(&self) -> &[Constraint] {
        self.triple.constraints()
    }

    pub fn parameters(&self) -> Vec<String> {
        self.triple.parameters()
    }

    /// Numeric triple at `values`; fails with a constraint violation
    /// outside the admissible range or a Jacobi violation.
    pub fn instantiate(&self, values: &Assignment) -> Result<ManinTriple<Rational>> {
        self.triple.instantiate(values)
    }

    /// True for entries produced by dualizing another entry.
    pub fn is_generated_dual(&self) -> bool {
        self.id.contains(".dual.")
    }
}

/// Class name as used in entry ids (`VI_0`, `VII_a`, …).
pub fn id_name(class: BianchiClass) -> &'static str {
    use BianchiClass::*;
    match class {
        VI0 => "VI_0",
        VIa => "VI_a",
        VII0 => "VII_0",
        VIIa => "VII_a",
        other => other.name(),
    }
}

type Rows = [[&'static str; 3]; 3];

const ZERO: Rows = [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]];

fn range(class: BianchiClass) -> Vec<Constraint> {
    let c = |p: &str, r: &str| Constraint::parse(p, r).expect("valid constraint");
    match class {
        BianchiClass::VIa => vec![c("a", ">0"), c("a-1", "!=0")],
        BianchiClass::VIIa => vec![c("a", ">0")],
        _ => vec![],
    }
}

fn first_claim(class: BianchiClass) -> TypeClaim {
    if class.is_parametric() {
        TypeClaim::with_param(class, "a")
    } else {
        TypeClaim::fixed(class)
    }
}

/// Entry with first algebra `class` in Bianchi form and second algebra
/// given by the rows `[X~1,X~2]`, `[X~2,X~3]`, `[X~3,X~1]`.
fn explicit(id: &str, class: BianchiClass, dual: TypeClaim, rows: Rows, b_range: Option<&str>) -> CatalogEntry {
    let parse = |s: &str| s.parse::<RatFunc>().expect("valid coefficient");
    let fd = StructureConstants::from_cyclic(rows.map(|r| r.map(parse)));
    let mut constraints = range(class);
    if let Some(rel) = b_range {
        constraints.push(Constraint::parse("b", rel).expect("valid constraint"));
    }
    CatalogEntry {
        id: id.to_string(),
        g_type: first_claim(class),
        g_dual_type: dual,
        triple: ManinTriple::unchecked(class.symbolic_form(), fd, constraints),
        dual_of: None,
        self_dual: false,
    }
}

fn explicit_entries() -> Vec<CatalogEntry> {
    use BianchiClass::*;
    let fixed = TypeClaim::fixed;
    let inv = |c| TypeClaim::with_param(c, "1/a");
    let mut out = vec![
        explicit("IX.a", IX, fixed(I), ZERO, None),
        explicit(
            "IX.b",
            IX,
            fixed(V),
            [["0", "-b", "0"], ["0", "0", "0"], ["0", "0", "b"]],
            Some(">0"),
        ),
        explicit("VIII.a", VIII, fixed(I), ZERO, None),
        explicit(
            "VIII.b.i",
            VIII,
            fixed(V),
            [["0", "-b", "0"], ["0", "0", "0"], ["0", "0", "b"]],
            Some(">0"),
        ),
        explicit(
            "VIII.b.ii",
            VIII,
            fixed(V),
            [["0", "0", "0"], ["0", "b", "0"], ["-b", "0", "0"]],
            Some(">0"),
        ),
        explicit(
            "VIII.b.iii",
            VIII,
            fixed(V),
            [["0", "1", "0"], ["0", "1", "0"], ["-1", "0", "-1"]],
            None,
        ),
        explicit("VII_a.a", VIIa, fixed(I), ZERO, None),
        explicit(
            "VII_a.b.i",
            VIIa,
            fixed(II),
            [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "VII_a.b.ii",
            VIIa,
            fixed(II),
            [["0", "0", "0"], ["-1", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "VII_a.c",
            VIIa,
            inv(VIIa),
            [["0", "-b/a", "b"], ["0", "0", "0"], ["0", "b", "b/a"]],
            Some("!=0"),
        ),
        explicit("VII_0.a", VII0, fixed(I), ZERO, None),
        explicit(
            "VII_0.b.i",
            VII0,
            fixed(II),
            [["0", "0", "1"], ["0", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "VII_0.b.ii",
            VII0,
            fixed(II),
            [["0", "0", "-1"], ["0", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "VII_0.c",
            VII0,
            fixed(IV),
            [["0", "-b", "b"], ["0", "0", "0"], ["0", "0", "b"]],
            Some("!=0"),
        ),
        explicit(
            "VII_0.d.i",
            VII0,
            fixed(V),
            [["0", "-1", "0"], ["0", "0", "0"], ["0", "0", "1"]],
            None,
        ),
        explicit(
            "VII_0.d.ii",
            VII0,
            fixed(V),
            [["0", "0", "0"], ["0", "b", "0"], ["-b", "0", "0"]],
            Some(">0"),
        ),
        explicit("VI_a.a", VIa, fixed(I), ZERO, None),
        explicit(
            "VI_a.b",
            VIa,
            fixed(II),
            [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "VI_a.c.i",
            VIa,
            inv(VIa),
            [["0", "-b/a", "-b"], ["0", "0", "0"], ["0", "b", "b/a"]],
            Some("!=0"),
        ),
        explicit(
            "VI_a.c.ii",
            VIa,
            inv(VIa),
            [["1", "0", "0"], ["0", "(a+1)/(a-1)", "(a+1)/(a-1)"], ["1", "0", "0"]],
            None,
        ),
        explicit(
            "VI_a.c.iii",
            VIa,
            inv(VIa),
            [["1", "0", "0"], ["0", "-(a-1)/(a+1)", "(a-1)/(a+1)"], ["-1", "0", "0"]],
            None,
        ),
        explicit("VI_0.a", VI0, fixed(I), ZERO, None),
        explicit(
            "VI_0.b",
            VI0,
            fixed(II),
            [["0", "0", "1"], ["0", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "VI_0.c.i",
            VI0,
            fixed(IV),
            [["0", "-b", "b"], ["0", "0", "0"], ["0", "0", "b"]],
            Some("!=0"),
        ),
        explicit(
            "VI_0.c.ii",
            VI0,
            fixed(IV),
            [["-1", "1", "1"], ["0", "0", "1"], ["0", "0", "-1"]],
            None,
        ),
        explicit(
            "VI_0.d.i",
            VI0,
            fixed(V),
            [["0", "-1", "0"], ["0", "0", "0"], ["0", "0", "1"]],
            None,
        ),
        explicit(
            "VI_0.d.ii",
            VI0,
            fixed(V),
            [["-1", "1", "0"], ["0", "0", "1"], ["0", "0", "-1"]],
            None,
        ),
        explicit(
            "VI_0.d.iii",
            VI0,
            fixed(V),
            [["0", "0", "0"], ["0", "-1", "0"], ["1", "0", "0"]],
            None,
        ),
        explicit("V.a", V, fixed(I), ZERO, None),
        explicit(
            "V.b.i",
            V,
            fixed(II),
            [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "V.b.ii",
            V,
            fixed(II),
            [["0", "0", "1"], ["0", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit("IV.a", IV, fixed(I), ZERO, None),
        explicit(
            "IV.b.i",
            IV,
            fixed(II),
            [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "IV.b.ii",
            IV,
            fixed(II),
            [["0", "0", "0"], ["-1", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "IV.b.iii",
            IV,
            fixed(II),
            [["0", "0", "0"], ["0", "0", "0"], ["0", "b", "0"]],
            Some("!=0"),
        ),
        explicit("III.a", III, fixed(I), ZERO, None),
        explicit(
            "III.b",
            III,
            fixed(II),
            [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "III.c.i",
            III,
            fixed(III),
            [["0", "-b", "-b"], ["0", "0", "0"], ["0", "b", "b"]],
            Some("!=0"),
        ),
        explicit(
            "III.c.ii",
            III,
            fixed(III),
            [["0", "0", "0"], ["0", "1", "1"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "III.c.iii",
            III,
            fixed(III),
            [["1", "0", "0"], ["0", "0", "0"], ["-1", "0", "0"]],
            None,
        ),
        explicit("II.a", II, fixed(I), ZERO, None),
        explicit(
            "II.b.i",
            II,
            fixed(II),
            [["0", "0", "1"], ["0", "0", "0"], ["0", "0", "0"]],
            None,
        ),
        explicit(
            "II.b.ii",
            II,
            fixed(II),
            [["0", "0", "-1"], ["0", "0", "0"], ["0", "0", "0"]],
            None,
        ),
    ];
    // Abelian first algebra: every Bianchi algebra in its standard form.
    for class in BianchiClass::ALL {
        out.push(CatalogEntry {
            id: format!("I.{}", id_name(class)),
            g_type: TypeClaim::fixed(I),
            g_dual_type: first_claim(class),
            triple: ManinTriple::unchecked(StructureConstants::zero(3), class.symbolic_form(), range(class)),
            dual_of: None,
            self_dual: false,
        });
    }
    out
}

/// Sources of the entries listed only as "duals of algebras given above",
/// grouped by the first algebra they belong to.
const GENERATED_DUALS: [(&str, &[&str]); 3] = [
    (
        "V",
        &[
            "IX.b",
            "VIII.b.i",
            "VIII.b.ii",
            "VIII.b.iii",
            "VII_0.d.i",
            "VII_0.d.ii",
            "VI_0.d.i",
            "VI_0.d.ii",
            "VI_0.d.iii",
        ],
    ),
    ("IV", &["VI_0.c.i", "VI_0.c.ii", "VII_0.c"]),
    (
        "II",
        &[
            "III.b",
            "IV.b.i",
            "IV.b.ii",
            "IV.b.iii",
            "VI_0.b",
            "VI_a.b",
            "VII_0.b.i",
            "VII_0.b.ii",
            "VII_a.b.i",
            "VII_a.b.ii",
            "V.b.i",
            "V.b.ii",
        ],
    ),
];

/// Classes whose dual triple lies in the same class.
pub const SELF_DUAL: [&str; 10] = [
    "I.I",
    "II.b.i",
    "II.b.ii",
    "III.c.i",
    "III.c.ii",
    "III.c.iii",
    "VI_a.c.i",
    "VI_a.c.ii",
    "VI_a.c.iii",
    "VII_a.c",
];

/// The complete list of classes, ordered as listed by first algebra, with
/// generated duals after the explicit entries of their first algebra.
pub fn entries() -> Vec<CatalogEntry> {
    let mut explicit = explicit_entries();
    let find = |list: &[CatalogEntry], id: &str| list.iter().position(|e| e.id == id).expect("known id");
    let mut generated: Vec<CatalogEntry> = Vec::new();
    for (target, sources) in GENERATED_DUALS {
        for &src in sources {
            let i = find(&explicit, src);
            let s = &mut explicit[i];
            let id = format!("{target}.dual.{src}");
            s.dual_of = Some(id.clone());
            generated.push(CatalogEntry {
                id,
                g_type: s.g_dual_type.clone(),
                g_dual_type: s.g_type.clone(),
                triple: s.triple.dual(),
                dual_of: Some(src.to_string()),
                self_dual: false,
            });
        }
    }
    // `X.a` (abelian dual) pairs with `I.X`.
    for class in BianchiClass::ALL.into_iter().filter(|&c| c != BianchiClass::I) {
        let a = format!("{}.a", id_name(class));
        let i = format!("I.{}", id_name(class));
        let (ia, ii) = (find(&explicit, &a), find(&explicit, &i));
        explicit[ia].dual_of = Some(i);
        explicit[ii].dual_of = Some(a);
    }
    for id in SELF_DUAL {
        let i = find(&explicit, id);
        explicit[i].dual_of = Some(id.to_string());
        explicit[i].self_dual = true;
    }
    // Order: by first algebra as listed, generated duals after explicit ones.
    let mut out = Vec::with_capacity(explicit.len() + generated.len());
    let order = [
        "IX", "VIII", "VII_a", "VII_0", "VI_a", "VI_0", "V", "IV", "III", "II", "I",
    ];
    for prefix in order {
        let head = |e: &&CatalogEntry| e.id.split('.').next() == Some(prefix);
        out.extend(explicit.iter().filter(head).cloned());
        out.extend(generated.iter().filter(head).cloned());
    }
    out
}

pub fn entry(id: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.id == id)
}

/// Numbers of classes: all, up to duality, and fixed by duality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCounts {
    pub total: usize,
    pub up_to_duality: usize,
    pub self_dual: usize,
}

/// Counts classes from the dual links: each entry is one class and duality
/// pairs them up, fixing the self-dual ones.
pub fn count_classes(list: &[CatalogEntry]) -> ClassCounts {
    let total = list.len();
    let self_dual = list
        .iter()
        .filter(|e| e.dual_of.as_deref() == Some(e.id.as_str()))
        .count();
    ClassCounts {
        total,
        up_to_duality: self_dual + (total - self_dual) / 2,
        self_dual,
    }
}

/// Dual links that are missing, dangling or not involutive.
pub fn broken_dual_links(list: &[CatalogEntry]) -> Vec<String> {
    let mut out = Vec::new();
    for e in list {
        let Some(d) = &e.dual_of else {
            out.push(format!("{}: no dual link", e.id));
            continue;
        };
        match list.iter().find(|x| &x.id == d) {
            None => out.push(format!("{}: dual {d} not found", e.id)),
            Some(x) if x.dual_of.as_deref() != Some(e.id.as_str()) => {
                out.push(format!("{}: dual {d} does not link back", e.id))
            }
            Some(_) => {}
        }
        if e.self_dual != (d == &e.id) {
            out.push(format!("{}: self-dual flag disagrees with its link", e.id));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_links() {
        let list = entries();
        assert_eq!(
            count_classes(&list),
            ClassCounts {
                total: 78,
                up_to_duality: 44,
                self_dual: 10
            }
        );
        assert!(broken_dual_links(&list).is_empty(), "{:?}", broken_dual_links(&list));
        let mut ids: Vec<&str> = list.iter().map(|e| e.id.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 78);
    }

    #[test]
    fn ix_b_and_constraints() {
        let e = entry("IX.b").unwrap();
        assert_eq!(e.g_dual_type, TypeClaim::fixed(BianchiClass::V));
        let ok = e
            .instantiate(&Assignment::from([("b".into(), Rational::one())]))
            .unwrap();
        assert_eq!(ok.f_dual().get(0, 1, 1), &Rational::from(-1));
        let err = e.instantiate(&Assignment::from([("b".into(), Rational::zero())]));
        assert!(matches!(err, Err(crate::Error::ConstraintViolation { .. })));
    }

    #[test]
    fn generated_duals_are_swapped_triples() {
        let list = entries();
        for e in list.iter().filter(|e| e.is_generated_dual()) {
            let src = list.iter().find(|x| Some(&x.id) == e.dual_of.as_ref()).unwrap();
            assert_eq!(e.triple, src.triple.dual());
        }
    }
}
