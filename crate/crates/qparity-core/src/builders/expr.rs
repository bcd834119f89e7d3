//! Builder expressions: the sides of a catalog identity.

use super::{build_product, build_slater_sum, build_theta, BuildError, GFTermSpec, ProductSpec, ThetaSpec};
use crate::series::SeriesRing;

/// A closed expression over the builder vocabulary, evaluated at any order in
/// either coefficient ring. Addition and multiplication cover the combined
/// right-hand sides of the mod-2 proof steps (theta splits and products).
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Product(ProductSpec),
    Theta(ThetaSpec),
    Sum {
        prefactor: ProductSpec,
        terms: Vec<GFTermSpec>,
    },
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    // constructor names mirror the combinators; operator traits do not fit
    // a by-value tree-building API
    #[allow(clippy::should_implement_trait)]
    pub fn add(lhs: Expr, rhs: Expr) -> Expr {
        Expr::Add(Box::new(lhs), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(lhs: Expr, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(lhs), Box::new(rhs))
    }

    /// Expand the expression exactly at the given order.
    pub fn eval<R: SeriesRing>(&self, order: usize) -> Result<R, BuildError> {
        match self {
            Expr::Product(spec) => build_product(spec, order),
            Expr::Theta(spec) => Ok(build_theta(spec, order)),
            Expr::Sum { prefactor, terms } => build_slater_sum(prefactor, terms, order),
            Expr::Add(a, b) => {
                let mut l: R = a.eval(order)?;
                let r: R = b.eval(order)?;
                l.accumulate(&r);
                Ok(l)
            }
            Expr::Mul(a, b) => {
                let l: R = a.eval(order)?;
                let r: R = b.eval(order)?;
                Ok(l.mul_trunc(&r))
            }
        }
    }
}
