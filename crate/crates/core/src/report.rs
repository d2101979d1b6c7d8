//! Per-axiom verdicts with failure witnesses.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactcore::{LinearMap, Vector};

/// Default number of witnesses printed per axiom.
pub const DEFAULT_MAX_WITNESSES: usize = 16;

macro_rules! axioms {
    ($($variant:ident => $id:literal,)*) => {
        /// Identifier of a checked identity (or an aggregate of several).
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum Axiom {
            $(#[serde(rename = $id)] $variant,)*
        }

        impl Axiom {
            pub const ALL: &'static [Axiom] = &[$(Axiom::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Axiom::$variant => $id,)*
                }
            }
        }

        impl FromStr for Axiom {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($id => Ok(Axiom::$variant),)*
                    _ => Err(Error::UnknownAxiom(s.to_string())),
                }
            }
        }
    };
}

axioms! {
    // algebras
    LeftHomAlternative => "LEFT_HOM_ALT",
    RightHomAlternative => "RIGHT_HOM_ALT",
    HomAssociative => "HOM_ASSOC",
    Endomorphism => "ENDOMORPHISM",
    Morphism => "MORPHISM",
    MorphismProduct => "MORPHISM_PRODUCT",
    MorphismTwist => "MORPHISM_TWIST",
    // modules
    LeftModule => "LEFT_MODULE",
    RightModule => "RIGHT_MODULE",
    ModuleMorphism => "MODULE_MORPHISM",
    ModuleIntertwine => "MODULE_INTERTWINE",
    BetaCommute => "BETA_COMMUTE",
    // coalgebras
    Cocommutativity => "COCOMMUTATIVITY",
    Comultiplicativity => "COMULTIPLICATIVITY",
    HomCoassociativity => "HOM_COASSOC",
    HomCoassociativeCoalgebra => "HOM_COASSOC_COALGEBRA",
    SkewCosymmetry => "SKEW_COSYMMETRY",
    CobracketComultiplicativity => "COBRACKET_COMULTIPLICATIVITY",
    HomCoJacobi => "HOM_COJACOBI",
    HomLieCoalgebra => "HOM_LIE_COALGEBRA",
    HomCoLeibniz => "HOM_COLEIBNIZ",
    HomPoissonCoalgebra => "HOM_POISSON_COALGEBRA",
    Coendomorphism => "COENDOMORPHISM",
    CoalgebraMorphism => "COALGEBRA_MORPHISM",
    ComultiplicationIntertwine => "COMUL_INTERTWINE",
    CobracketIntertwine => "COBRACKET_INTERTWINE",
    AlphaCommute => "ALPHA_COMMUTE",
    // comodules
    CoactionCompat => "COACTION_COMPAT",
    CoactionCoassoc => "COACTION_COASSOC",
    CoassociativeComodule => "COASSOC_COMODULE",
    LieCoactionCompat => "LIE_COACTION_COMPAT",
    LieCoactionJacobi => "LIE_COACTION_JACOBI",
    LieComodule => "LIE_COMODULE",
    PoissonCoactionFirst => "POISSON_COACTION_1",
    PoissonCoactionSecond => "POISSON_COACTION_2",
    PoissonComodule => "POISSON_COMODULE",
    ComoduleMorphism => "COMODULE_MORPHISM",
    CoactionIntertwine => "COACTION_INTERTWINE",
    LieCoactionIntertwine => "LIE_COACTION_INTERTWINE",
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A basis index tuple at which an identity fails, with its nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub residual: Vector,
}

/// Verdict for one axiom.
///
/// `holds` is true exactly when `witnesses` is empty. Witnesses are kept in
/// row-major index order; aggregate reports concatenate the witnesses of their
/// sub-reports in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub sub_reports: Vec<AxiomReport>,
}

impl AxiomReport {
    pub fn passing(axiom: Axiom) -> Self {
        AxiomReport { axiom, holds: true, witnesses: Vec::new(), sub_reports: Vec::new() }
    }

    pub fn from_witnesses(axiom: Axiom, witnesses: Vec<Witness>) -> Self {
        AxiomReport { axiom, holds: witnesses.is_empty(), witnesses, sub_reports: Vec::new() }
    }

    pub fn aggregate(axiom: Axiom, sub_reports: Vec<AxiomReport>) -> Self {
        let witnesses: Vec<Witness> = sub_reports.iter().flat_map(|r| r.witnesses.iter().cloned()).collect();
        AxiomReport { axiom, holds: sub_reports.iter().all(|r| r.holds), witnesses, sub_reports }
    }

    pub fn failure_count(&self) -> usize {
        self.witnesses.len()
    }

    /// Finds this report or a nested sub-report for `axiom`.
    pub fn find(&self, axiom: Axiom) -> Option<&AxiomReport> {
        if self.axiom == axiom {
            return Some(self);
        }
        self.sub_reports.iter().find_map(|r| r.find(axiom))
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    /// Text rendering with at most `max_witnesses` witnesses per axiom.
    pub fn render(&self, max_witnesses: usize) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0, max_witnesses);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize, max_witnesses: usize) {
        use fmt::Write;
        let pad = "  ".repeat(depth);
        if self.holds {
            let _ = writeln!(out, "{pad}{}: PASS", self.axiom);
        } else {
            let _ = writeln!(out, "{pad}{}: FAIL ({} failing index tuples)", self.axiom, self.failure_count());
        }
        if self.sub_reports.is_empty() {
            for w in self.witnesses.iter().take(max_witnesses) {
                let idx: Vec<String> = w.indices.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(out, "{pad}  at ({}): residual {}", idx.join(","), w.residual);
            }
            if self.failure_count() > max_witnesses {
                let _ = writeln!(out, "{pad}  ... {} more not shown", self.failure_count() - max_witnesses);
            }
        } else {
            for r in &self.sub_reports {
                r.render_into(out, depth + 1, max_witnesses);
            }
        }
    }
}

/// Accumulates witnesses for a single axiom; zero residuals are dropped.
#[derive(Default)]
pub(crate) struct Witnesses(Vec<Witness>);

impl Witnesses {
    pub(crate) fn record(&mut self, indices: &[usize], residual: Vector) {
        if !residual.is_zero() {
            self.0.push(Witness { indices: indices.to_vec(), residual });
        }
    }

    pub(crate) fn finish(self, axiom: Axiom) -> AxiomReport {
        AxiomReport::from_witnesses(axiom, self.0)
    }
}

/// Compares two maps column by column; witness `(k)` carries `lhs(e_k) − rhs(e_k)`.
pub(crate) fn column_report(axiom: Axiom, lhs: &LinearMap, rhs: &LinearMap) -> AxiomReport {
    debug_assert_eq!((lhs.dim_out(), lhs.dim_in()), (rhs.dim_out(), rhs.dim_in()));
    let diff = lhs.sub(rhs).expect("shapes agree");
    let mut w = Witnesses::default();
    for k in 0..diff.dim_in() {
        w.record(&[k], diff.column(k));
    }
    w.finish(axiom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for a in Axiom::ALL {
            assert_eq!(a.id().parse::<Axiom>().unwrap(), *a);
        }
        assert!("NOT_AN_AXIOM".parse::<Axiom>().is_err());
    }

    #[test]
    fn zero_residuals_are_not_witnesses() {
        let mut w = Witnesses::default();
        w.record(&[0, 1], Vector::zeros(3));
        let r = w.finish(Axiom::HomAssociative);
        assert!(r.holds && r.witnesses.is_empty());
    }

    #[test]
    fn aggregate_holds_iff_all_subs_hold() {
        let mut w = Witnesses::default();
        w.record(&[2], Vector::from_ints(&[1]));
        let bad = w.finish(Axiom::SkewCosymmetry);
        let good = AxiomReport::passing(Axiom::HomCoJacobi);
        let agg = AxiomReport::aggregate(Axiom::HomLieCoalgebra, vec![good.clone(), bad]);
        assert!(!agg.holds);
        assert_eq!(agg.witnesses.len(), 1);
        assert_eq!(agg.find(Axiom::HomCoJacobi), Some(&good));
        let text = agg.render(16);
        assert!(text.contains("SKEW_COSYMMETRY: FAIL"));
        assert!(text.contains("at (2): residual [1]"));
    }

    #[test]
    fn render_truncates() {
        let mut w = Witnesses::default();
        for i in 0..20 {
            w.record(&[i], Vector::from_ints(&[1]));
        }
        let text = w.finish(Axiom::LeftHomAlternative).render(16);
        assert!(text.contains("4 more not shown"));
        assert_eq!(text.matches("at (").count(), 16);
    }
}
