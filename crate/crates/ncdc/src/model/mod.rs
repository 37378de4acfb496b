//! Model files: the parser, the canonical printer, and the assembled
//! model pieces the CLI operates on.

use std::collections::BTreeMap;

use crate::algebra::{AlgElement, AlgebraPresentation};
use crate::bimodule::BimodulePresentation;
use crate::calculus::{CalculusModel, Differential};
use crate::cartan::RightCartanPair;
use crate::error::{Error, Result};

pub mod emit;
pub mod parse;

pub use parse::{parse, parse_alg_expr, parse_dual_expr, parse_mod_expr};

/// A parsed model file. The algebra is always present; the bimodule,
/// differential and Cartan action matrix appear when the corresponding
/// sections do. Declaration line numbers are kept for diagnostics.
#[derive(Clone, Debug)]
pub struct ModelFile {
    pub algebra: AlgebraPresentation,
    pub bimodule: Option<BimodulePresentation>,
    pub differential: Option<Differential>,
    pub action: Option<Vec<Vec<AlgElement>>>,
    pub decl_lines: BTreeMap<String, usize>,
}

// Line numbers are bookkeeping, not content.
impl PartialEq for ModelFile {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.bimodule == other.bimodule
            && self.differential == other.differential
            && self.action == other.action
    }
}

impl Eq for ModelFile {}

impl ModelFile {
    pub fn bimodule(&self) -> Result<&BimodulePresentation> {
        self.bimodule
            .as_ref()
            .ok_or_else(|| Error::invalid("this command needs a `basis:`/`left:` section"))
    }

    /// Assemble the calculus; requires the differential section.
    pub fn calculus(&self) -> Result<CalculusModel> {
        let m = self.bimodule()?.clone();
        let d = self
            .differential
            .clone()
            .ok_or_else(|| Error::invalid("this command needs a `d:` section"))?;
        CalculusModel::new(m, d)
    }

    /// The model's right Cartan pair: taken from the `rho:` section when
    /// present, otherwise derived from the differential.
    pub fn pair(&self) -> Result<RightCartanPair> {
        if let Some(action) = &self.action {
            return RightCartanPair::new(self.bimodule()?.clone(), action.clone());
        }
        if self.differential.is_some() {
            return Ok(RightCartanPair::from_calculus(&self.calculus()?));
        }
        Err(Error::invalid(
            "this command needs either a `rho:` or a `d:` section",
        ))
    }
}
