use super::{rat, BivariatePoly, SeriesError, TruncatedSeries, Variable};

/// Sign with which a coefficient enters the alternating sum `Pi = sum (-1)^n Pi^(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`
    pub fn alternating(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointSolution {
    /// `q_c = 2d * p_c` as a series in `t`.
    pub q: TruncatedSeries,
    /// `p_c = t * q_c`, known one order further.
    pub pc: TruncatedSeries,
    /// Iteration rounds used, including the confirming round.
    pub rounds: usize,
}

/// The three coefficient expansions `Pi^(0)`, `Pi^(1)`, `Pi^(2)` at `p_c`,
/// written in `q = 2d p_c` and `t = 1/(2d)`, each `+ O(t^2)`.
pub fn lace_coefficient_inputs() -> Vec<(Sign, BivariatePoly)> {
    vec![
        (Sign::Plus, BivariatePoly::from_terms(2, [(2, 0, rat(1, 2)), (0, 1, rat(5, 2))])),
        (Sign::Minus, BivariatePoly::from_terms(2, [(1, 0, rat(1, 1)), (2, 0, rat(2, 1)), (0, 1, rat(4, 1))])),
        (Sign::Plus, BivariatePoly::from_terms(2, [(0, 1, rat(10, 1))])),
    ]
}

fn pi_hat(inputs: &[(Sign, BivariatePoly)], q: &TruncatedSeries) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(Variable::T, q.order());
    for (sign, poly) in inputs {
        let term = poly.substitute(q).expect("error orders were validated");
        let term = match sign {
            Sign::Plus => term,
            Sign::Minus => term.neg(),
        };
        acc = acc.add(&term).expect("same variable");
    }
    acc
}

/// Solve `q = 1 / (1 + t * Pi(q, t))` for `q` through `t^order`.
///
/// Starts from `q = 1` and iterates; each round fixes one more coefficient.
/// Since `Pi` only enters as `t * Pi`, an input trusted below `t^k` determines
/// `q` through `t^k`, so `order` may not exceed the smallest declared error order.
pub fn solve_pc_fixed_point(inputs: &[(Sign, BivariatePoly)], order: usize) -> Result<FixedPointSolution, SeriesError> {
    if let Some(justified) = inputs.iter().map(|(_, p)| p.error_order() as usize).min() {
        if order > justified {
            return Err(SeriesError::OrderNotJustified { requested: order, justified });
        }
    }
    let max_rounds = order + 2;
    let mut q = TruncatedSeries::one(Variable::T, order);
    for round in 1..=max_rounds {
        let t_pi = pi_hat(inputs, &q).shift().truncate(order);
        let denominator = TruncatedSeries::one(Variable::T, order).add(&t_pi)?;
        let next = denominator.inverse()?;
        if next == q {
            let pc = q.shift();
            return Ok(FixedPointSolution { q, pc, rounds: round });
        }
        q = next;
    }
    Err(SeriesError::NoConvergence(max_rounds))
}

/// Residual `q (1 + t Pi(q, t)) - 1`, which vanishes through `t^order` at a solution.
pub fn fixed_point_residual(inputs: &[(Sign, BivariatePoly)], q: &TruncatedSeries) -> TruncatedSeries {
    let order = q.order();
    let t_pi = pi_hat(inputs, q).shift().truncate(order);
    let one = TruncatedSeries::one(Variable::T, order);
    q.mul(&one.add(&t_pi).unwrap()).unwrap().sub(&one).unwrap()
}
