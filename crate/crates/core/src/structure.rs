//! A tagged union over every structure kind, with its full axiom suite.

use std::collections::BTreeMap;

use crate::exactcore::LinearMap;
use crate::homalg::{self, HomAlgebra};
use crate::homcoalg::{check_hom_poisson_coalgebra, HomPoissonCoalgebra};
use crate::homcomod::{check_comodule, HomComodule};
use crate::hommod::{check_module, HomModule};
use crate::report::{Axiom, AxiomReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(HomAlgebra),
    Coalgebra(HomPoissonCoalgebra),
    Module(HomModule),
    Comodule(HomComodule),
    Map(LinearMap),
}

impl Structure {
    /// Kind tag used by the structure file.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "hom_algebra",
            Structure::Coalgebra(_) => "hom_poisson_coalgebra",
            Structure::Module(_) => "hom_module",
            Structure::Comodule(_) => "hom_comodule",
            Structure::Map(_) => "linear_map",
        }
    }

    /// Every axiom report that applies to this kind; empty for a bare map.
    pub fn full_suite(&self) -> Vec<AxiomReport> {
        match self {
            Structure::Algebra(a) => vec![
                homalg::check_left_hom_alternative(a),
                homalg::check_right_hom_alternative(a),
                homalg::check_hom_associative(a),
            ],
            Structure::Coalgebra(c) => vec![check_hom_poisson_coalgebra(c)],
            Structure::Module(m) => vec![check_module(m)],
            Structure::Comodule(c) => vec![check_comodule(c)],
            Structure::Map(_) => Vec::new(),
        }
    }

    /// Verdict of every report in the suite, sub-reports included.
    pub fn verdicts(&self) -> BTreeMap<Axiom, bool> {
        fn walk(r: &AxiomReport, out: &mut BTreeMap<Axiom, bool>) {
            out.insert(r.axiom, r.holds);
            for s in &r.sub_reports {
                walk(s, out);
            }
        }
        let mut out = BTreeMap::new();
        for r in self.full_suite() {
            walk(&r, &mut out);
        }
        out
    }
}
