use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfspin::{build_spinor_basis, FourMomentum, PhaseConvention};
use crate::linalg::CVector;
use crate::spin1::{mr_spinors, Spin1Helicity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Lambda,
    Rho,
    Dirac,
    Mr,
}

impl std::str::FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lambda" => Ok(TableKind::Lambda),
            "rho" => Ok(TableKind::Rho),
            "dirac" => Ok(TableKind::Dirac),
            "mr" => Ok(TableKind::Mr),
            _ => Err(Error::InvalidConfig(format!("unknown table {s:?}"))),
        }
    }
}

/// One spinor per row, `re im` per component at 12 significant digits.
pub fn tabulate(p: &FourMomentum<f64>, conv: &PhaseConvention<f64>, what: TableKind) -> Result<String> {
    let rows: Vec<(String, CVector<f64>)> = match what {
        TableKind::Lambda | TableKind::Rho | TableKind::Dirac => {
            let b = build_spinor_basis(p, conv)?;
            let (names, stack) = match what {
                TableKind::Lambda => {
                    (["lambda_s_up", "lambda_s_down", "lambda_a_up", "lambda_a_down"], b.lambda_stack())
                }
                TableKind::Rho => (["rho_s_up", "rho_s_down", "rho_a_up", "rho_a_down"], b.rho_stack()),
                _ => (["u_up", "u_down", "v_up", "v_down"], b.dirac_stack()),
            };
            names.iter().zip(stack).map(|(n, v)| (n.to_string(), v.clone())).collect()
        }
        TableKind::Mr => {
            let mut rows = Vec::new();
            for h in Spin1Helicity::ALL {
                let s = mr_spinors(p, conv, h)?;
                for (tag, v) in [("U+", s.u_plus), ("V+", s.v_plus), ("U-", s.u_minus), ("V-", s.v_minus)] {
                    rows.push((format!("{tag}_{}", h.name()), v));
                }
            }
            rows
        }
    };
    let n = rows.first().map(|r| r.1.len()).unwrap_or(0);
    let mut out = String::from("name");
    for k in 0..n {
        out.push_str(&format!(" re{k} im{k}"));
    }
    out.push('\n');
    for (name, v) in rows {
        out.push_str(&name);
        for c in v.iter() {
            out.push_str(&format!(" {} {}", sig12(c.re), sig12(c.im)));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Scientific notation with 12 significant digits; signed zero prints as 0.
fn sig12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}
