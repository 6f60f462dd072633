//! General dual brackets as published for a few first algebras, stored
//! verbatim together with a minimal correction where the printed form does
//! not satisfy the identities. Rows are `[X~1,X~2]`, `[X~2,X~3]`,
//! `[X~3,X~1]`, each a coefficient vector in `X~1, X~2, X~3`.

use crate::error::Result;
use crate::exact::RatFunc;
use crate::liealg::{BianchiClass, StructureConstants};
use crate::manin::{dual_jacobi_residual, mixed_jacobi_residual};

type Rows = [[&'static str; 3]; 3];

pub struct PrintedSolution {
    pub class: BianchiClass,
    pub label: &'static str,
    pub printed: Rows,
    /// Replacement rows and a description of the change.
    pub correction: Option<(Rows, &'static str)>,
}

pub const PRINTED_SOLUTIONS: [PrintedSolution; 7] = [
    PrintedSolution {
        class: BianchiClass::VIII,
        label: "VIII general solution",
        printed: [
            ["-alpha", "beta", "0"],
            ["0", "gamma", "alpha"],
            ["-gamma", "0", "-beta"],
        ],
        correction: None,
    },
    PrintedSolution {
        class: BianchiClass::VIa,
        label: "VI_a solution 1",
        printed: [
            ["alpha", "beta", "a*beta"],
            [
                "-(a^2*alpha^2-2*alpha*gamma*a^2-2*alpha*gamma-alpha^2+gamma^2*a^2-gamma^2)/(4*a*beta)",
                "(-a^2*alpha+gamma*a^2+gamma+alpha)/(2*a)",
                "gamma",
            ],
            ["(-a^2*alpha+gamma*a^2-gamma-alpha)/(2*a)", "-a*beta", "-beta"],
        ],
        correction: None,
    },
    PrintedSolution {
        class: BianchiClass::VIa,
        label: "VI_a solution 2",
        printed: [
            ["alpha", "0", "0"],
            ["beta+alpha*(a+1)/(a-1)", "alpha*(a+1)/(a-1)", "0"],
            ["alpha", "0", "0"],
        ],
        correction: Some((
            [
                ["alpha", "0", "0"],
                ["beta", "alpha*(a+1)/(a-1)", "alpha*(a+1)/(a-1)"],
                ["alpha", "0", "0"],
            ],
            "last term of [X~2,X~3] multiplies X~3, not X~1",
        )),
    },
    PrintedSolution {
        class: BianchiClass::VIa,
        label: "VI_a solution 3",
        printed: [
            ["alpha", "0", "0"],
            ["beta", "-alpha*(a-1)/(a+1)", "alpha*(a-1)/(a+1)"],
            ["-alpha", "0", "0"],
        ],
        correction: None,
    },
    PrintedSolution {
        class: BianchiClass::II,
        label: "II solution 1",
        printed: [
            ["-alpha", "-(2*beta*alpha-gamma*delta)/gamma", "-alpha^2*beta/gamma^2"],
            ["0", "gamma", "alpha"],
            ["-gamma", "-beta", "-delta"],
        ],
        correction: None,
    },
    PrintedSolution {
        class: BianchiClass::II,
        label: "II solution 2",
        printed: [["0", "alpha", "beta"], ["0", "0", "0"], ["0", "-gamma", "-delta"]],
        correction: None,
    },
    PrintedSolution {
        class: BianchiClass::II,
        label: "II solution 3",
        printed: [["-alpha+gamma", "beta", "0"], ["0", "0", "alpha"], ["0", "0", "-beta"]],
        correction: Some((
            [["-alpha", "beta", "gamma"], ["0", "0", "alpha"], ["0", "0", "-beta"]],
            "gamma term of [X~1,X~2] multiplies X~3, not X~1",
        )),
    },
];

/// Dual tensor from the three cyclic bracket rows.
pub fn dual_from_rows(rows: &Rows) -> Result<StructureConstants<RatFunc>> {
    let parsed = rows
        .iter()
        .map(|r| {
            let v = r.iter().map(|s| s.parse::<RatFunc>()).collect::<Result<Vec<_>>>()?;
            Ok([v[0].clone(), v[1].clone(), v[2].clone()])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StructureConstants::from_cyclic([
        parsed[0].clone(),
        parsed[1].clone(),
        parsed[2].clone(),
    ]))
}

/// Whether the rows satisfy the mixed and dual Jacobi identities
/// identically in all parameters.
pub fn rows_are_valid(class: BianchiClass, rows: &Rows) -> Result<bool> {
    let fd = dual_from_rows(rows)?;
    let f = class.symbolic_form();
    Ok(mixed_jacobi_residual(&f, &fd).is_zero() && dual_jacobi_residual(&fd).is_zero())
}

#[derive(Clone, Debug)]
pub struct PrintedCheck {
    pub label: &'static str,
    pub printed_valid: bool,
    /// `Some((valid, description))` when a correction is recorded.
    pub corrected: Option<(bool, &'static str)>,
}

impl PrintedCheck {
    /// Valid as printed, or invalid as printed but valid once corrected.
    pub fn resolved(&self) -> bool {
        self.printed_valid || matches!(self.corrected, Some((true, _)))
    }
}

pub fn check_printed_solutions() -> Result<Vec<PrintedCheck>> {
    PRINTED_SOLUTIONS
        .iter()
        .map(|s| {
            Ok(PrintedCheck {
                label: s.label,
                printed_valid: rows_are_valid(s.class, &s.printed)?,
                corrected: match &s.correction {
                    Some((rows, what)) => Some((rows_are_valid(s.class, rows)?, *what)),
                    None => None,
                },
            })
        })
        .collect()
}
