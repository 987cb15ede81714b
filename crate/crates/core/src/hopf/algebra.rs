use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{compose_chain, id, index_to_tuple, LinearMap};
use crate::scalar::FieldSpec;
use crate::stage;

/// Unvalidated structure maps. Feed to [`HopfAlgebra::new`] or inspect with
/// [`check_hopf_axioms`].
#[derive(Clone, Debug)]
pub struct HopfData {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    /// `H⊗H → H`
    pub mu: LinearMap,
    /// `H → H⊗H`
    pub delta: LinearMap,
    /// `k → H`
    pub unit: LinearMap,
    /// `H → k`
    pub counit: LinearMap,
    pub antipode: LinearMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Associativity,
    Coassociativity,
    Unit,
    Counit,
    CoproductMultiplicative,
    CounitMultiplicative,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Associativity,
        Axiom::Coassociativity,
        Axiom::Unit,
        Axiom::Counit,
        Axiom::CoproductMultiplicative,
        Axiom::CounitMultiplicative,
        Axiom::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Unit => "unit",
            Axiom::Counit => "counit",
            Axiom::CoproductMultiplicative => "coproduct-multiplicative",
            Axiom::CounitMultiplicative => "counit-multiplicative",
            Axiom::Antipode => "antipode",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub holds: bool,
    /// First basis input (as labels) on which the two sides differ.
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks.iter().find(|c| c.axiom == axiom).expect("every axiom is checked")
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.checks
                .iter()
                .map(|c| {
                    (
                        c.axiom.name().to_string(),
                        serde_json::json!({ "holds": c.holds, "witness": c.witness }),
                    )
                })
                .collect(),
        )
    }
}

fn check_shape(data: &HopfData) -> Result<()> {
    let d = data.labels.len();
    if d == 0 {
        return Err(Error::MalformedAlgebra("dimension 0".into()));
    }
    let maps = [
        ("mu", &data.mu, 2, 1),
        ("delta", &data.delta, 1, 2),
        ("unit", &data.unit, 0, 1),
        ("counit", &data.counit, 1, 0),
        ("antipode", &data.antipode, 1, 1),
    ];
    for (name, m, a, b) in maps {
        if m.field() != data.field {
            return Err(Error::MalformedAlgebra(format!("{name} is over {}, algebra over {}", m.field(), data.field)));
        }
        if m.base_dim() != d {
            return Err(Error::MalformedAlgebra(format!("{name} has base dimension {}, expected {d}", m.base_dim())));
        }
        if (m.in_arity(), m.out_arity()) != (a, b) {
            return Err(Error::MalformedAlgebra(format!(
                "{name} has arity {}→{}, expected {a}→{b}",
                m.in_arity(),
                m.out_arity()
            )));
        }
    }
    Ok(())
}

fn compare(data: &HopfData, axiom: Axiom, pairs: &[(LinearMap, LinearMap)]) -> AxiomCheck {
    let d = data.labels.len();
    for (lhs, rhs) in pairs {
        if let Some(j) = lhs.first_difference(rhs) {
            let witness = index_to_tuple(j, d, lhs.in_arity()).into_iter().map(|i| data.labels[i].clone()).collect();
            return AxiomCheck { axiom, holds: false, witness: Some(witness) };
        }
    }
    AxiomCheck { axiom, holds: true, witness: None }
}

/// Verifies all seven Hopf axioms as exact matrix identities.
pub fn check_hopf_axioms(data: &HopfData) -> Result<AxiomReport> {
    check_shape(data)?;
    let (f, d) = (data.field, data.labels.len());
    let (mu, delta, eta, eps, s) = (&data.mu, &data.delta, &data.unit, &data.counit, &data.antipode);
    let tau = LinearMap::swap(f, d);
    let one = LinearMap::identity(f, d, 1);
    let c = |stages| compose_chain(f, d, stages).expect("shapes checked");

    let assoc = vec![(c(vec![stage![mu], stage![mu, id(1)]]), c(vec![stage![mu], stage![id(1), mu]]))];
    let coassoc = vec![(c(vec![stage![delta, id(1)], stage![delta]]), c(vec![stage![id(1), delta], stage![delta]]))];
    let unit = vec![
        (c(vec![stage![mu], stage![eta, id(1)]]), one.clone()),
        (c(vec![stage![mu], stage![id(1), eta]]), one.clone()),
    ];
    let counit = vec![
        (c(vec![stage![eps, id(1)], stage![delta]]), one.clone()),
        (c(vec![stage![id(1), eps], stage![delta]]), one.clone()),
    ];
    let delta_hom = vec![
        (
            c(vec![stage![delta], stage![mu]]),
            c(vec![stage![mu, mu], stage![id(1), &tau, id(1)], stage![delta, delta]]),
        ),
        (c(vec![stage![delta], stage![eta]]), c(vec![stage![eta, eta]])),
    ];
    let eps_hom = vec![
        (c(vec![stage![eps], stage![mu]]), c(vec![stage![eps, eps]])),
        (c(vec![stage![eps], stage![eta]]), LinearMap::identity(f, d, 0)),
    ];
    let eta_eps = c(vec![stage![eta], stage![eps]]);
    let antipode = vec![
        (c(vec![stage![mu], stage![s, id(1)], stage![delta]]), eta_eps.clone()),
        (c(vec![stage![mu], stage![id(1), s], stage![delta]]), eta_eps),
    ];
    let checks = vec![
        compare(data, Axiom::Associativity, &assoc),
        compare(data, Axiom::Coassociativity, &coassoc),
        compare(data, Axiom::Unit, &unit),
        compare(data, Axiom::Counit, &counit),
        compare(data, Axiom::CoproductMultiplicative, &delta_hom),
        compare(data, Axiom::CounitMultiplicative, &eps_hom),
        compare(data, Axiom::Antipode, &antipode),
    ];
    Ok(AxiomReport { checks })
}

/// A validated finite-dimensional Hopf algebra.
#[derive(Debug)]
pub struct HopfAlgebra {
    data: HopfData,
    ad: OnceLock<LinearMap>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra { data: self.data.clone(), ad: self.ad.clone() }
    }
}

impl HopfAlgebra {
    /// Validates eagerly; the first failing axiom becomes `AxiomViolation`.
    pub fn new(data: HopfData) -> Result<Self> {
        let report = check_hopf_axioms(&data)?;
        if let Some(fail) = report.first_failure() {
            return Err(Error::AxiomViolation(format!(
                "{} fails on input {}",
                fail.axiom.name(),
                fail.witness.as_deref().unwrap_or_default().join("⊗")
            )));
        }
        Ok(HopfAlgebra { data, ad: OnceLock::new() })
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn field(&self) -> FieldSpec {
        self.data.field
    }

    pub fn dim(&self) -> usize {
        self.data.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn mu(&self) -> &LinearMap {
        &self.data.mu
    }

    pub fn delta(&self) -> &LinearMap {
        &self.data.delta
    }

    pub fn unit(&self) -> &LinearMap {
        &self.data.unit
    }

    pub fn counit(&self) -> &LinearMap {
        &self.data.counit
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.data.antipode
    }

    pub fn tau(&self) -> LinearMap {
        LinearMap::swap(self.field(), self.dim())
    }

    /// `ad = μ(μ⊗1)(S⊗1⊗1)(τ⊗1)(1⊗Δ)`, computed once.
    pub fn ad(&self) -> &LinearMap {
        self.ad.get_or_init(|| super::adjoint::adjoint_from_structure(self))
    }

    /// Label of a basis tensor, e.g. `g⊗x`.
    pub fn tuple_label(&self, index: usize, arity: usize) -> String {
        if arity == 0 {
            return "1_k".into();
        }
        index_to_tuple(index, self.dim(), arity)
            .into_iter()
            .map(|i| self.data.labels[i].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::superline;

    #[test]
    fn singular_antipode_has_no_r_inverse() {
        // bypasses validation: only the inverse formula is under test
        let mut data = superline(FieldSpec::Rationals).unwrap().data().clone();
        data.antipode = LinearMap::zero(data.field, 4, 1, 1);
        let h = HopfAlgebra { data, ad: OnceLock::new() };
        assert!(matches!(crate::hopf::r_matrix_inverse(&h), Err(Error::AntipodeNotInvertible)));
    }
}
