//! Python bindings: exact cyclic/Hochschild (co)homology from Python.
//!
//! Exactness is preserved across the boundary by passing every rational
//! as a `"p/q"` string (integers may omit the denominator). Dimensions
//! travel as plain ints.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use cychom::input::{parse_action_str, parse_algebra_str};
use cychom::lambda::{verify_relations, LambdaMorphism};
use cychom::module::{canonical_cyclic_module, cocyclic_coalgebra_module, AlgebraPresentation};
use cychom::pairing::{
    characteristic_map, gated_cocycles as gated, phi_map, well_definedness_probe, EquivarianceMode,
    EquivariantAction,
};
use cychom::qmat::{format_q, parse_q};
use cychom::theories::{hc, hochschild_dims as hh_dims, Method};
use cychom::Q;

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_fractions(v: &[String]) -> PyResult<Vec<Q>> {
    v.iter().map(|t| parse_q(t).map_err(value_err)).collect()
}

fn format_fractions(v: &[Q]) -> Vec<String> {
    v.iter().map(format_q).collect()
}

/// A finite-dimensional associative unital algebra over the rationals.
#[pyclass(frozen)]
struct Algebra {
    inner: AlgebraPresentation,
}

#[pymethods]
impl Algebra {
    /// The ground field as a one-dimensional algebra.
    #[staticmethod]
    fn scalar() -> Self {
        Algebra {
            inner: AlgebraPresentation::scalar(),
        }
    }

    /// Dual numbers k[x]/(x^2).
    #[staticmethod]
    fn dual_numbers() -> Self {
        Algebra {
            inner: AlgebraPresentation::dual_numbers(),
        }
    }

    /// Group algebra of a product of cyclic groups.
    #[staticmethod]
    fn group(orders: Vec<usize>) -> PyResult<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(value_err("orders must be positive"));
        }
        Ok(Algebra {
            inner: AlgebraPresentation::group_algebra(&orders),
        })
    }

    /// Direct product of two algebras.
    #[staticmethod]
    fn product(a: &Algebra, b: &Algebra) -> Self {
        Algebra {
            inner: AlgebraPresentation::product(&a.inner, &b.inner),
        }
    }

    /// n-by-n matrices.
    #[staticmethod]
    fn matrices(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(value_err("n must be positive"));
        }
        Ok(Algebra {
            inner: AlgebraPresentation::matrix_algebra(n),
        })
    }

    /// Parse a TOML description (kind = "algebra" or "group_algebra");
    /// validates associativity and the unit laws.
    #[staticmethod]
    fn from_toml(text: &str) -> PyResult<Self> {
        Ok(Algebra {
            inner: parse_algebra_str(text).map_err(value_err)?.algebra,
        })
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(dim={}, labels={:?})",
            self.inner.dim(),
            self.inner.labels()
        )
    }
}

/// A validated Hopf-algebra action on an algebra, plus an optional trace.
#[pyclass(frozen)]
struct Action {
    inner: EquivariantAction,
    trace: Option<Vec<Q>>,
}

#[pymethods]
impl Action {
    /// The order-2 group swapping the idempotents of k x k.
    #[staticmethod]
    fn swap_example() -> Self {
        Action {
            inner: EquivariantAction::swap_example(),
            trace: Some(vec![Q::from_integer(1.into()), Q::from_integer(1.into())]),
        }
    }

    /// The trivial group acting on the ground field.
    #[staticmethod]
    fn trivial_example() -> Self {
        Action {
            inner: EquivariantAction::trivial_example(),
            trace: Some(vec![Q::from_integer(1.into())]),
        }
    }

    /// Parse a TOML action file (kind = "action"); validates the Hopf
    /// axioms, the measuring identities, and the equivariance mode.
    #[staticmethod]
    fn from_toml(text: &str) -> PyResult<Self> {
        let loaded = parse_action_str(text).map_err(value_err)?;
        Ok(Action {
            inner: loaded.action,
            trace: loaded.trace,
        })
    }

    fn hopf_dim(&self) -> usize {
        self.inner.hopf().dim()
    }

    fn algebra_dim(&self) -> usize {
        self.inner.measuring().algebra().dim()
    }

    fn mode(&self) -> &'static str {
        match self.inner.mode() {
            EquivarianceMode::Verbatim => "verbatim",
            EquivarianceMode::Diagonal => "diagonal",
        }
    }

    /// The file's default trace, as fraction strings (or None).
    fn trace(&self) -> Option<Vec<String>> {
        self.trace.as_deref().map(format_fractions)
    }

    fn __repr__(&self) -> String {
        format!(
            "Action(hopf_dim={}, algebra_dim={}, mode={:?})",
            self.hopf_dim(),
            self.algebra_dim(),
            self.mode()
        )
    }
}

/// Hochschild dimensions of `algebra` in degrees 0..=max_degree.
#[pyfunction]
#[pyo3(signature = (algebra, max_degree, truncation = None))]
fn hochschild_dims(
    algebra: &Algebra,
    max_degree: usize,
    truncation: Option<usize>,
) -> PyResult<Vec<usize>> {
    let rep = canonical_cyclic_module(&algebra.inner, truncation.unwrap_or(max_degree + 1));
    hh_dims(&rep, max_degree).map_err(value_err)
}

/// Cyclic dimensions by one method: "connes", "bicomplex", or "mixed".
#[pyfunction]
#[pyo3(signature = (algebra, method, max_degree, truncation = None))]
fn cyclic_dims(
    algebra: &Algebra,
    method: &str,
    max_degree: usize,
    truncation: Option<usize>,
) -> PyResult<Vec<usize>> {
    let method: Method = method.parse().map_err(value_err)?;
    let rep = canonical_cyclic_module(&algebra.inner, truncation.unwrap_or(max_degree + 1));
    hc(&rep, method, max_degree).map_err(value_err)
}

/// All three methods at once, as {"connes": [...], "bicomplex": [...],
/// "mixed": [...]}. They agree whenever the engine is correct.
#[pyfunction]
#[pyo3(signature = (algebra, max_degree, truncation = None))]
fn cyclic_dims_all(
    algebra: &Algebra,
    max_degree: usize,
    truncation: Option<usize>,
) -> PyResult<std::collections::BTreeMap<&'static str, Vec<usize>>> {
    let rep = canonical_cyclic_module(&algebra.inner, truncation.unwrap_or(max_degree + 1));
    let mut out = std::collections::BTreeMap::new();
    for method in Method::ALL {
        out.insert(
            method.name(),
            hc(&rep, method, max_degree).map_err(value_err)?,
        );
    }
    Ok(out)
}

/// Normalize a composite like "s1_1 . d1_0 . t1^1" (rightmost applies
/// first); returns the normal form.
#[pyfunction]
fn compose(expression: &str) -> PyResult<String> {
    Ok(LambdaMorphism::parse(expression)
        .map_err(value_err)?
        .to_string())
}

/// The underlying set map of a composite, as the image list of 0..=source.
#[pyfunction]
fn underlying_map(expression: &str) -> PyResult<Vec<usize>> {
    Ok(LambdaMorphism::parse(expression)
        .map_err(value_err)?
        .underlying_map())
}

/// Check every defining relation of the index category with objects up to
/// max_level; returns (instances_checked, violations).
#[pyfunction]
fn verify_category(max_level: usize) -> (usize, Vec<String>) {
    let report = verify_relations(max_level);
    (report.checked, report.violations)
}

/// Basis of the degree-p cocycles that are rotation-invariant and closed,
/// as lists of fraction strings.
#[pyfunction]
fn gated_cocycles(action: &Action, degree: usize) -> PyResult<Vec<Vec<String>>> {
    let c_side = cocyclic_coalgebra_module(action.inner.hopf().coalgebra(), degree + 1);
    let basis = gated(&c_side, degree).map_err(value_err)?;
    Ok(basis.iter().map(|v| format_fractions(v)).collect())
}

/// Pair the gated cocycle `xi` against the trace `nu` (both fraction-string
/// lists; nu defaults to the action's stored trace). Gates and output
/// certificates are enforced; returns the paired functional's coefficients.
#[pyfunction]
#[pyo3(signature = (action, degree, xi, nu = None))]
fn charmap(
    action: &Action,
    degree: usize,
    xi: Vec<String>,
    nu: Option<Vec<String>>,
) -> PyResult<Vec<String>> {
    let xi = parse_fractions(&xi)?;
    let nu = match nu {
        Some(v) => parse_fractions(&v)?,
        None => action
            .trace
            .clone()
            .ok_or_else(|| value_err("action has no stored trace; pass nu"))?,
    };
    let chi = characteristic_map(action.inner.measuring(), degree, &xi, &nu).map_err(value_err)?;
    Ok(format_fractions(&chi))
}

/// Certify the pairing transformation against every structure map up to
/// the truncation; returns the number of generators checked.
#[pyfunction]
fn certify_pairing(action: &Action, truncation: usize) -> PyResult<usize> {
    let phi = phi_map(action.inner.measuring(), truncation).map_err(value_err)?;
    Ok(phi.checked_generators)
}

/// Perturb `xi` by seeded random coboundaries and re-pair; returns
/// (trials, passes, vacuous). A pass means the paired class is unchanged.
#[pyfunction]
#[pyo3(signature = (action, degree, xi, nu = None, trials = 20, seed = 0xC0FFEE))]
fn probe(
    action: &Action,
    degree: usize,
    xi: Vec<String>,
    nu: Option<Vec<String>>,
    trials: usize,
    seed: u64,
) -> PyResult<(usize, usize, bool)> {
    let xi = parse_fractions(&xi)?;
    let nu = match nu {
        Some(v) => parse_fractions(&v)?,
        None => action
            .trace
            .clone()
            .ok_or_else(|| value_err("action has no stored trace; pass nu"))?,
    };
    let outcome = well_definedness_probe(action.inner.measuring(), degree, &xi, &nu, trials, seed)
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok((outcome.trials, outcome.passes, outcome.vacuous))
}

#[pymodule]
fn cychom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Algebra>()?;
    m.add_class::<Action>()?;
    m.add_function(wrap_pyfunction!(hochschild_dims, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_dims, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_dims_all, m)?)?;
    m.add_function(wrap_pyfunction!(compose, m)?)?;
    m.add_function(wrap_pyfunction!(underlying_map, m)?)?;
    m.add_function(wrap_pyfunction!(verify_category, m)?)?;
    m.add_function(wrap_pyfunction!(gated_cocycles, m)?)?;
    m.add_function(wrap_pyfunction!(charmap, m)?)?;
    m.add_function(wrap_pyfunction!(certify_pairing, m)?)?;
    m.add_function(wrap_pyfunction!(probe, m)?)?;
    Ok(())
}
