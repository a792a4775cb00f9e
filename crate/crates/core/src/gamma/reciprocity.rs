use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{gamma_vector, GammaVector, Method};
use crate::error::{Error, Result};
use crate::graphs::SubgraphPoset;
use crate::groups::AllowedSet;
use crate::limits::Limits;
use crate::posetlin::{PolyMatrix, PosetAlgebra, RationalPoly};
use crate::Rational;

/// `Gamma^A_+ = J_alpha^{-1} Gamma^A`, so that `Gamma^A = J_alpha Gamma^A_+`.
pub fn gamma_plus(alg: &PosetAlgebra, gamma: &GammaVector, alpha: &Rational) -> Vec<Rational> {
    alg.apply_j_inverse(alpha, gamma.values())
}

/// Coordinatewise comparison of `J_alpha^{-1} Gamma^A` with `(-1)^e J_abar^{-1} Gamma^Abar`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub alpha: Rational,
    pub alpha_bar: Rational,
    pub gamma: Vec<Rational>,
    pub gamma_bar: Vec<Rational>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
    pub agree: Vec<bool>,
}

impl ReciprocityReport {
    pub fn passed(&self) -> bool {
        self.agree.iter().all(|&b| b)
    }

    pub fn failures(&self) -> Vec<usize> {
        self.agree
            .iter()
            .enumerate()
            .filter(|(_, &ok)| !ok)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn agreeing(&self) -> usize {
        self.agree.iter().filter(|&&b| b).count()
    }
}

pub fn verify_reciprocity_vectors(
    alg: &PosetAlgebra,
    alpha: &Rational,
    gamma: &[Rational],
    gamma_bar: &[Rational],
) -> ReciprocityReport {
    let alpha_bar = Rational::one() - alpha;
    let lhs = alg.apply_j_inverse(alpha, gamma);
    let rhs = alg.apply_sign(&alg.apply_j_inverse(&alpha_bar, gamma_bar));
    let agree = lhs.iter().zip(&rhs).map(|(a, b)| a == b).collect();
    ReciprocityReport {
        alpha: alpha.clone(),
        alpha_bar,
        gamma: gamma.to_vec(),
        gamma_bar: gamma_bar.to_vec(),
        lhs,
        rhs,
        agree,
    }
}

/// Computes `Gamma^A` and `Gamma^Abar` exactly and compares both sides of the
/// reciprocity identity. A mismatch is reported, not raised.
pub fn verify_reciprocity(
    poset: &SubgraphPoset,
    a: &AllowedSet,
    method: Method,
    limits: &Limits,
) -> Result<ReciprocityReport> {
    let alg = PosetAlgebra::new(poset);
    let gamma = gamma_vector(poset, a, method, limits)?;
    let gamma_bar = gamma_vector(poset, &a.complement(), method, limits)?;
    Ok(verify_reciprocity_vectors(
        &alg,
        &a.alpha(),
        gamma.values(),
        gamma_bar.values(),
    ))
}

/// `Gamma^A = M_abar Gamma^Abar`.
pub fn apply_m(alg: &PosetAlgebra, alpha_bar: &Rational, gamma_bar: &[Rational]) -> Vec<Rational> {
    alg.apply_m(alpha_bar, gamma_bar)
}

/// `[M_abar]` at `(E, empty)`: the group-independent approximation of `[Gamma^A]_E`.
pub fn main_term(alg: &PosetAlgebra, e: usize, alpha_bar: &Rational) -> Rational {
    let mut unit = alloc::vec![Rational::zero(); alg.len()];
    unit[0] = Rational::one();
    alg.apply_m(alpha_bar, &unit).swap_remove(e)
}

pub fn residual(
    alg: &PosetAlgebra,
    e: usize,
    gamma_value: &Rational,
    alpha_bar: &Rational,
) -> Rational {
    gamma_value - main_term(alg, e, alpha_bar)
}

/// Chromatic polynomial of member `e` as row `e` of `M_{1/f}` applied to `f^{c(H)}`.
/// `m` must be the symbolic transfer matrix of `poset`.
pub fn chromatic_via_m(poset: &SubgraphPoset, m: &PolyMatrix, e: usize) -> Result<RationalPoly> {
    // sum_H sum_k m_k f^{c(H) - k}, collected by exponent of f
    let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
    for (h, entry) in m.row(e).iter().enumerate() {
        let c = poset.member(h).components() as i64;
        for (k, coeff) in entry.coeffs().iter().enumerate() {
            *terms.entry(c - k as i64).or_insert_with(Rational::zero) += coeff;
        }
    }
    let mut coeffs = Vec::new();
    for (&exp, coeff) in &terms {
        if coeff.is_zero() {
            continue;
        }
        if exp < 0 {
            return Err(Error::NonPolynomial(format!(
                "term {coeff} f^{exp} in row {e}"
            )));
        }
        if !coeff.is_integer() {
            return Err(Error::NonPolynomial(format!(
                "coefficient {coeff} of f^{exp} in row {e}"
            )));
        }
        let exp = exp as usize;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Rational::zero());
        }
        coeffs[exp] = coeff.clone();
    }
    Ok(RationalPoly::new(coeffs))
}
