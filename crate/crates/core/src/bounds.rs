//! Closed-form spectral thresholds as pure functions of the graph
//! parameters `(n, δ, Δ, g, r, k)`.
//!
//! Each threshold is the right-hand side of a sufficient condition of the
//! form "if `μ_{n−1}(G)` clears this value (or the `μ₁/μ_{n−1}` ratio
//! stays under it), then the connectivity is at least `k`". Thresholds
//! silently presume the order is large enough for their denominators to be
//! positive; the exact applicability regions are encoded here as explicit
//! [`Applicability::Inapplicable`] values — never NaN or infinity — and
//! certification falls through to the small-order rule where they end.
//!
//! Rational quantities such as `rδ/(r−1)` are kept as exact integer
//! numerator/denominator pairs inside squared terms; only the final
//! threshold is converted to floating point, avoiding double rounding.

use crate::graph::Graph;
use crate::invariants::{self, Girth};
use crate::math;
use core::fmt;

/// Errors from threshold construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsError {
    /// A parameter lies outside the defining domain of the quantity.
    Domain,
    /// The minimum degree must exceed `(k−1)(r−1)` for this condition.
    PreconditionDelta,
    /// The pencil parameters must satisfy `b > 0` and `a ≥ −b`.
    PencilDomain,
    /// A Moore-bound style quantity exceeded the integer range.
    Overflow,
    /// The parameter set violates its own invariants.
    InvalidParams(&'static str),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain => write!(f, "parameters outside the defining domain"),
            Self::PreconditionDelta => {
                write!(f, "minimum degree must exceed (k-1)(r-1)")
            }
            Self::PencilDomain => write!(f, "pencil needs b > 0 and a >= -b"),
            Self::Overflow => write!(f, "quantity exceeds the integer range"),
            Self::InvalidParams(what) => write!(f, "invalid parameters: {what}"),
        }
    }
}

impl core::error::Error for BoundsError {}

/// Certification target: edge-connectivity `κ'` or vertex-connectivity `κ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Target {
    Edge,
    Vertex,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Edge => "edge",
            Self::Vertex => "vertex",
        }
    }
}

/// Stable identifiers for every certified condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremId {
    /// `μ_{n−1} ≥ (k−1)n/(N(δ,g)(n−N(δ,g))) ⇒ κ' ≥ k`
    EdgeGirth,
    /// `μ_{n−1} ≥ (k−1)n/(φ(δ,r)(n−φ(δ,r))) ⇒ κ' ≥ k`
    EdgeClique,
    /// `μ_{n−1} > n(k−1)Δ/(n(n−k+1)−(n−2N+k−1)²) ⇒ κ ≥ k`
    VertexGirth,
    /// The `φ(δ,k,r)` two-case clique threshold for `κ ≥ k`, `r ≥ 3`.
    VertexClique,
    /// The single-case clique threshold under `δ > (k−1)(r−1)`.
    VertexClique2,
    /// `μ₁/μ_{n−1} < s + √(s²−1)` with the Moore-bound `s`.
    RatioGirth,
    /// `μ₁/μ_{n−1} < s + √(s²−1)` with the clique-based `s`.
    RatioClique,
    /// `n < 2N(δ,g)` forces `κ' = δ`.
    SmallOrderEdge,
    /// `n < 2N(δ,g) − κ` forces `κ = δ` (conservatively `κ ≤ δ−1`).
    SmallOrderVertex,
    /// Prior threshold over `(δ+1)(n−δ−1)`.
    PriorEdgeDelta,
    /// Prior threshold over `(4/9)N(δ,g)`, needs `δ ≥ 3`.
    PriorEdgeMoore49,
    /// Prior threshold over `f(δ,g)`.
    PriorEdgeF,
    /// Prior vertex threshold over `2ν(δ,g,k)(n−ν(δ,g,k))`.
    PriorVertexNu,
    /// `q₂ ≤ 2δ − p` transfer of the edge girth threshold `p`.
    TransferQ2Girth,
    /// `λ₂ ≤ δ − p` transfer of the edge girth threshold `p`.
    TransferLambda2Girth,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::EdgeGirth => "edge-girth",
            Self::EdgeClique => "edge-clique",
            Self::VertexGirth => "vertex-girth",
            Self::VertexClique => "vertex-clique",
            Self::VertexClique2 => "vertex-clique2",
            Self::RatioGirth => "ratio-girth",
            Self::RatioClique => "ratio-clique",
            Self::SmallOrderEdge => "small-order-edge",
            Self::SmallOrderVertex => "small-order-vertex",
            Self::PriorEdgeDelta => "prior-edge-delta",
            Self::PriorEdgeMoore49 => "prior-edge-moore49",
            Self::PriorEdgeF => "prior-edge-f",
            Self::PriorVertexNu => "prior-vertex-nu",
            Self::TransferQ2Girth => "transfer-q2-girth",
            Self::TransferLambda2Girth => "transfer-lambda2-girth",
        }
    }

    /// Which connectivity the condition certifies.
    pub fn target(self) -> Target {
        match self {
            Self::EdgeGirth
            | Self::EdgeClique
            | Self::SmallOrderEdge
            | Self::PriorEdgeDelta
            | Self::PriorEdgeMoore49
            | Self::PriorEdgeF
            | Self::TransferQ2Girth
            | Self::TransferLambda2Girth => Target::Edge,
            _ => Target::Vertex,
        }
    }

    /// Whether the hypothesis is a strict inequality. The edge conditions
    /// tolerate equality (their proofs carry an equality analysis); the
    /// vertex and ratio conditions do not.
    pub fn strict(self) -> bool {
        matches!(
            self,
            Self::VertexGirth
                | Self::VertexClique
                | Self::VertexClique2
                | Self::RatioGirth
                | Self::RatioClique
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why a threshold does not apply to the given parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InapplicableReason {
    /// The condition needs `δ ≥ k`.
    DegreeBelowK,
    /// The condition needs a finite girth (the graph is a forest).
    InfiniteGirth,
    /// The order is too small for the denominator region (the small-order
    /// rule governs instead).
    OrderTooSmall,
    /// A squared base term would be negative.
    NegativeBase,
    /// The denominator is nonpositive.
    NonpositiveDenominator,
    /// The clique bound `r` is below the condition's minimum.
    CliqueBoundBelowMin,
    /// The condition needs `δ > (k−1)(r−1)`.
    MinDegreeTooSmall,
    /// Every condition presumes a connected graph.
    Disconnected,
}

impl InapplicableReason {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::DegreeBelowK => "degree-below-k",
            Self::InfiniteGirth => "infinite-girth",
            Self::OrderTooSmall => "order-too-small",
            Self::NegativeBase => "negative-base",
            Self::NonpositiveDenominator => "nonpositive-denominator",
            Self::CliqueBoundBelowMin => "clique-bound-below-min",
            Self::MinDegreeTooSmall => "min-degree-too-small",
            Self::Disconnected => "disconnected",
        }
    }
}

/// A threshold value, or the reason it does not apply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Applicability {
    Applicable(f64),
    Inapplicable(InapplicableReason),
}

impl Applicability {
    pub fn value(self) -> Option<f64> {
        match self {
            Self::Applicable(v) => Some(v),
            Self::Inapplicable(_) => None,
        }
    }
}

/// An evaluated spectral threshold for one condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub theorem: TheoremId,
    /// Whether the hypothesis comparison is strict.
    pub strict: bool,
    pub value: Applicability,
}

impl Threshold {
    fn applicable(theorem: TheoremId, value: f64) -> Self {
        Self {
            theorem,
            strict: theorem.strict(),
            value: Applicability::Applicable(value),
        }
    }

    fn inapplicable(theorem: TheoremId, reason: InapplicableReason) -> Self {
        Self {
            theorem,
            strict: theorem.strict(),
            value: Applicability::Inapplicable(reason),
        }
    }
}

/// The parameter tuple every threshold consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSet {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub girth: Girth,
    /// Clique-number upper bound `r ≥ ω(G)`.
    pub clique_bound: usize,
    /// Target connectivity.
    pub k: usize,
}

impl ParamSet {
    pub fn new(
        n: usize,
        min_degree: usize,
        max_degree: usize,
        girth: Girth,
        clique_bound: usize,
        k: usize,
    ) -> Result<Self, BoundsError> {
        if n < 2 {
            return Err(BoundsError::InvalidParams("order must be at least 2"));
        }
        if min_degree < 1 || min_degree > max_degree || max_degree > n - 1 {
            return Err(BoundsError::InvalidParams(
                "need 1 <= min degree <= max degree <= n-1",
            ));
        }
        if clique_bound < 1 {
            return Err(BoundsError::InvalidParams(
                "clique bound must be at least 1",
            ));
        }
        if k < 2 {
            return Err(BoundsError::InvalidParams(
                "target connectivity must be at least 2",
            ));
        }
        if let Girth::Finite(g) = girth {
            if g < 3 {
                return Err(BoundsError::InvalidParams(
                    "finite girth must be at least 3",
                ));
            }
        }
        Ok(Self {
            n,
            min_degree,
            max_degree,
            girth,
            clique_bound,
            k,
        })
    }

    /// Measures a graph and pairs it with a target `k`. The clique bound is
    /// the exact clique number, which yields the tightest clique-based
    /// thresholds.
    pub fn from_graph(g: &Graph, k: usize) -> Result<Self, BoundsError> {
        Self::new(
            g.order(),
            g.min_degree(),
            g.max_degree(),
            invariants::girth(g),
            invariants::clique_number(g),
            k,
        )
    }

    /// Replaces the clique bound by a caller-chosen `r` (must dominate the
    /// true clique number for the clique conditions to be sound).
    pub fn with_clique_bound(mut self, r: usize) -> Self {
        self.clique_bound = r;
        self
    }
}

/// The Moore bound `N(δ, g)`: with `t = ⌊(g−1)/2⌋`, equals
/// `1 + δ·Σ_{i=0}^{t−1}(δ−1)^i` for odd `g` and `2·Σ_{i=0}^{t}(δ−1)^i`
/// for even `g`. Requires `δ ≥ 2` and `g ≥ 3`.
pub fn moore_bound(delta: usize, girth: usize) -> Result<u64, BoundsError> {
    if delta < 2 || girth < 3 {
        return Err(BoundsError::Domain);
    }
    let t = (girth - 1) / 2;
    let geometric = |terms: usize| -> Option<u64> {
        let mut sum = 0u64;
        let mut power = 1u64;
        for i in 0..terms {
            sum = sum.checked_add(power)?;
            if i + 1 < terms {
                power = power.checked_mul(delta as u64 - 1)?;
            }
        }
        Some(sum)
    };
    let value = if girth % 2 == 1 {
        geometric(t)
            .and_then(|s| (delta as u64).checked_mul(s))
            .and_then(|x| x.checked_add(1))
    } else {
        geometric(t + 1).and_then(|s| s.checked_mul(2))
    };
    value.ok_or(BoundsError::Overflow)
}

/// `φ(δ, r) = max{δ+1, ⌊rδ/(r−1)⌋}` for `r ≥ 2`, `δ ≥ 1`.
pub fn phi(delta: usize, r: usize) -> Result<u64, BoundsError> {
    if r < 2 || delta < 1 {
        return Err(BoundsError::Domain);
    }
    let floor = (r as u64 * delta as u64) / (r as u64 - 1);
    Ok((delta as u64 + 1).max(floor))
}

/// The prior-work quantity `f(δ, g)`: `g` when `δ = 2`, otherwise
/// `N(δ,g) − Σ_{i=1}^{t−1}(δ−1)^i`.
pub fn f_prior(delta: usize, girth: usize) -> Result<u64, BoundsError> {
    if delta < 2 || girth < 3 {
        return Err(BoundsError::Domain);
    }
    if delta == 2 {
        return Ok(girth as u64);
    }
    let t = (girth - 1) / 2;
    let n = moore_bound(delta, girth)?;
    let mut subtract = 0u64;
    let mut power = delta as u64 - 1;
    for _ in 1..t {
        subtract = subtract.checked_add(power).ok_or(BoundsError::Overflow)?;
        power = power
            .checked_mul(delta as u64 - 1)
            .ok_or(BoundsError::Overflow)?;
    }
    n.checked_sub(subtract).ok_or(BoundsError::Overflow)
}

/// The prior-work quantity `ν(δ, g, k)`:
/// `N(δ,g) − (k−1)·Σ_{i=0}^{t−1}(δ−1)^i` (with the special value `2t+1`
/// for even girth at `δ = 2`). Requires `δ ≥ k ≥ 2`.
pub fn nu_prior(delta: usize, girth: usize, k: usize) -> Result<u64, BoundsError> {
    if k < 2 || delta < k || girth < 3 {
        return Err(BoundsError::Domain);
    }
    let t = (girth - 1) / 2;
    if girth.is_multiple_of(2) && delta == 2 {
        return Ok(2 * t as u64 + 1);
    }
    let n = moore_bound(delta, girth)?;
    let mut sum = 0u64;
    let mut power = 1u64;
    for i in 0..t {
        sum = sum.checked_add(power).ok_or(BoundsError::Overflow)?;
        if i + 1 < t {
            power = power
                .checked_mul(delta as u64 - 1)
                .ok_or(BoundsError::Overflow)?;
        }
    }
    n.checked_sub(
        (k as u64 - 1)
            .checked_mul(sum)
            .ok_or(BoundsError::Overflow)?,
    )
    .ok_or(BoundsError::Overflow)
}

/// Threshold of the form `(k−1)·n / (q·(n−q))` for an integer block size
/// `q`; inapplicable when `n ≤ q`.
fn block_threshold(theorem: TheoremId, p: &ParamSet, q: Result<u64, BoundsError>) -> Threshold {
    let q = match q {
        Ok(q) => u128::from(q),
        // An overflowing block size certainly exceeds any real order.
        Err(BoundsError::Overflow) => {
            return Threshold::inapplicable(theorem, InapplicableReason::OrderTooSmall)
        }
        Err(_) => unreachable!("callers validate the domain"),
    };
    let n = p.n as u128;
    if n <= q {
        return Threshold::inapplicable(theorem, InapplicableReason::OrderTooSmall);
    }
    let numerator = (p.k as u128 - 1) * n;
    let denominator = q * (n - q);
    Threshold::applicable(theorem, numerator as f64 / denominator as f64)
}

/// `μ_{n−1}(G) ≥ (k−1)n/(N(δ,g)(n−N(δ,g))) ⇒ κ'(G) ≥ k` for connected `G`
/// with `δ ≥ k ≥ 2` and finite girth.
pub fn edge_girth_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::EdgeGirth;
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    let Girth::Finite(g) = p.girth else {
        return Threshold::inapplicable(id, InapplicableReason::InfiniteGirth);
    };
    block_threshold(id, p, moore_bound(p.min_degree, g))
}

/// `μ_{n−1}(G) ≥ (k−1)n/(φ(δ,r)(n−φ(δ,r))) ⇒ κ'(G) ≥ k` for connected `G`
/// with `δ ≥ k ≥ 2` and clique number at most `r`.
pub fn edge_clique_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::EdgeClique;
    if p.clique_bound < 2 {
        return Threshold::inapplicable(id, InapplicableReason::CliqueBoundBelowMin);
    }
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    block_threshold(id, p, phi(p.min_degree, p.clique_bound))
}

/// Prior edge threshold over `(δ+1)(n−δ−1)`.
pub fn prior_edge_delta_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::PriorEdgeDelta;
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    block_threshold(id, p, Ok(p.min_degree as u64 + 1))
}

/// Prior edge threshold over `(4/9)N(δ,g)(n−(4/9)N(δ,g))`, for `δ ≥ 3`.
pub fn prior_edge_moore49_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::PriorEdgeMoore49;
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    if p.min_degree < 3 {
        return Threshold::inapplicable(id, InapplicableReason::MinDegreeTooSmall);
    }
    let Girth::Finite(g) = p.girth else {
        return Threshold::inapplicable(id, InapplicableReason::InfiniteGirth);
    };
    let big_n = match moore_bound(p.min_degree, g) {
        Ok(v) => v as u128,
        Err(_) => return Threshold::inapplicable(id, InapplicableReason::OrderTooSmall),
    };
    let n = p.n as u128;
    // (4N/9)(n − 4N/9) > 0  ⇔  9n > 4N
    if 9 * n <= 4 * big_n {
        return Threshold::inapplicable(id, InapplicableReason::OrderTooSmall);
    }
    let numerator = 81 * (p.k as u128 - 1) * n;
    let denominator = 4 * big_n * (9 * n - 4 * big_n);
    Threshold::applicable(id, numerator as f64 / denominator as f64)
}

/// Prior edge threshold over `f(δ,g)(n−f(δ,g))`.
pub fn prior_edge_f_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::PriorEdgeF;
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    let Girth::Finite(g) = p.girth else {
        return Threshold::inapplicable(id, InapplicableReason::InfiniteGirth);
    };
    block_threshold(id, p, f_prior(p.min_degree, g))
}

/// Prior vertex threshold `(k−1)nΔ/(2ν(n−ν))`.
pub fn prior_vertex_nu_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::PriorVertexNu;
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    let Girth::Finite(g) = p.girth else {
        return Threshold::inapplicable(id, InapplicableReason::InfiniteGirth);
    };
    let nu = match nu_prior(p.min_degree, g, p.k) {
        Ok(v) => v as u128,
        Err(_) => return Threshold::inapplicable(id, InapplicableReason::OrderTooSmall),
    };
    let n = p.n as u128;
    if n <= nu {
        return Threshold::inapplicable(id, InapplicableReason::OrderTooSmall);
    }
    let numerator = (p.k as u128 - 1) * n * p.max_degree as u128;
    let denominator = 2 * nu * (n - nu);
    Threshold::applicable(id, numerator as f64 / denominator as f64)
}

/// `μ_{n−1}(G) > n(k−1)Δ/(n(n−k+1)−(n−2N(δ,g)+k−1)²) ⇒ κ(G) ≥ k`.
/// Inapplicable when `n < 2N−k+1` (the derivation needs the squared base
/// nonnegative; below that the small-order rule already decides).
pub fn vertex_girth_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::VertexGirth;
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    let Girth::Finite(g) = p.girth else {
        return Threshold::inapplicable(id, InapplicableReason::InfiniteGirth);
    };
    let big_n = match moore_bound(p.min_degree, g) {
        Ok(v) => v as i128,
        Err(_) => return Threshold::inapplicable(id, InapplicableReason::OrderTooSmall),
    };
    let n = p.n as i128;
    let k = p.k as i128;
    let base = n - 2 * big_n + k - 1;
    if base < 0 {
        return Threshold::inapplicable(id, InapplicableReason::OrderTooSmall);
    }
    let denominator = n * (n - k + 1) - base * base;
    if denominator <= 0 {
        return Threshold::inapplicable(id, InapplicableReason::NonpositiveDenominator);
    }
    let numerator = n * (k - 1) * p.max_degree as i128;
    Threshold::applicable(id, numerator as f64 / denominator as f64)
}

/// `μ_{n−1}(G) > n(k−1)Δ/(n(n−k+1)−φ(δ,k,r)) ⇒ κ(G) ≥ k` where
/// `φ(δ,k,r) = max{(n−2(r−1)δ/(r−2)+r(k−1)/(r−2))², (n−2rδ/(r−1)+k−1)²}`,
/// for `r ≥ 3`. The whole threshold is inapplicable when either squared
/// base is negative.
pub fn vertex_clique_threshold(p: &ParamSet) -> Threshold {
    let id = TheoremId::VertexClique;
    if p.clique_bound < 3 {
        return Threshold::inapplicable(id, InapplicableReason::CliqueBoundBelowMin);
    }
    if p.min_degree < p.k {
        return Threshold::inapplicable(id, InapplicableReason::DegreeBelowK);
    }
    let (n, delta, r, k) = (
        p.n as i128,
        p.min_degree as i128,
        p.clique_bound as i128,
        p.k as i128,
    );
    // base1 = (n(r−2) − 2(r−1)δ + r(k−1)) / (r−2)
    let num1 = n * (r - 2) - 2 * (r - 1) * delta + r * (k - 1);
    let den1 = r - 2;
    // base2 = ((n+k−1)(r−1) − 2rδ) / (r−1)
    let num2 = (n + k - 1) * (r - 1) - 2 * r * delta;
    let den2 = r - 1;
    if num1 < 0 || num2 < 0 {
        return Threshold::inapplicable(id, InapplicableReason::NegativeBase);
    }
    // φ = max(num1²/den1², num2²/den2²), compared exactly.
    let (phi_num, phi_den) = if num1 * num1 * den2 * den2 >= num2 * num2 * den1 * den1 {
        (num1 * num1, den1 * den1)
    } else {
        (num2 * num2, den2 * den2)
    };
    let lhs = n * (n - k + 1) * phi_den;
    if lhs <= phi_num {
        return Threshold::inapplicable(id, InapplicableReason::NonpositiveDenominator);
    }
    let numerator = n * (k - 1) * p.max_degree as i128 * phi_den;
    Threshold::applicable(id, numerator as f64 / (lhs - phi_num) as f64)
}

/// `μ_{n−1}(G) > n(k−1)Δ/(n(n−k+1)−(n−2rδ/(r−1)+k−1)²) ⇒ κ(G) ≥ k` under
/// `δ > (k−1)(r−1)`, `r ≥ 2`. For `r = 2` this is exactly the girth
/// threshold evaluated with `N = 2δ`.
pub fn vertex_clique2_threshold(p: &ParamSet) -> Result<Threshold, BoundsError> {
    let id = TheoremId::VertexClique2;
    if p.clique_bound < 2 {
        return Ok(Threshold::inapplicable(
            id,
            InapplicableReason::CliqueBoundBelowMin,
        ));
    }
    let (n, delta, r, k) = (
        p.n as i128,
        p.min_degree as i128,
        p.clique_bound as i128,
        p.k as i128,
    );
    if delta <= (k - 1) * (r - 1) {
        return Err(BoundsError::PreconditionDelta);
    }
    // base = ((n+k−1)(r−1) − 2rδ) / (r−1)
    let num = (n + k - 1) * (r - 1) - 2 * r * delta;
    let den = r - 1;
    if num < 0 {
        return Ok(Threshold::inapplicable(
            id,
            InapplicableReason::NegativeBase,
        ));
    }
    let lhs = n * (n - k + 1) * den * den;
    if lhs <= num * num {
        return Ok(Threshold::inapplicable(
            id,
            InapplicableReason::NonpositiveDenominator,
        ));
    }
    let numerator = n * (k - 1) * p.max_degree as i128 * den * den;
    Ok(Threshold::applicable(
        id,
        numerator as f64 / (lhs - num * num) as f64,
    ))
}

/// The eigenvalue-ratio condition: `κ(G) ≥ k` whenever
/// `μ₁/μ_{n−1} < s + √(s²−1)`, equivalently `μ_{n−1}/μ₁ > s − √(s²−1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioCondition {
    pub s: f64,
    /// `s + √(s²−1)`, the cap on `μ₁/μ_{n−1}`.
    pub ratio_cap: f64,
    /// `s − √(s²−1) = 1/ratio_cap`, the floor on `μ_{n−1}/μ₁`.
    pub ratio_floor: f64,
}

impl RatioCondition {
    fn from_s(s: f64) -> Self {
        let cap = s + math::sqrt(s * s - 1.0);
        Self {
            s,
            ratio_cap: cap,
            ratio_floor: 1.0 / cap,
        }
    }
}

/// Ratio condition with `s = 2(N(δ,g)−k+1)(n−N(δ,g))/(n(k−1)) + 1`.
/// Requires `δ ≥ k ≥ 2`, finite girth, and `n > N(δ,g)`.
pub fn ratio_girth_condition(p: &ParamSet) -> Result<RatioCondition, BoundsError> {
    if p.k < 2 || p.min_degree < p.k {
        return Err(BoundsError::Domain);
    }
    let Girth::Finite(g) = p.girth else {
        return Err(BoundsError::Domain);
    };
    let big_n = moore_bound(p.min_degree, g)? as u128;
    let n = p.n as u128;
    if n <= big_n {
        return Err(BoundsError::Domain);
    }
    // N ≥ δ+1 > k, so N−k+1 > 0
    let numerator = 2 * (big_n - (p.k as u128 - 1)) * (n - big_n);
    let denominator = n * (p.k as u128 - 1);
    Ok(RatioCondition::from_s(
        1.0 + numerator as f64 / denominator as f64,
    ))
}

/// Ratio condition with `s = 2(rδ/(r−1)−k+1)(n−rδ/(r−1))/(n(k−1)) + 1`
/// under `δ > (k−1)(r−1)`, `r ≥ 2`, `n > rδ/(r−1)`.
pub fn ratio_clique_condition(p: &ParamSet) -> Result<RatioCondition, BoundsError> {
    let (n, delta, r, k) = (
        p.n as i128,
        p.min_degree as i128,
        p.clique_bound as i128,
        p.k as i128,
    );
    if r < 2 || k < 2 {
        return Err(BoundsError::Domain);
    }
    if delta <= (k - 1) * (r - 1) {
        return Err(BoundsError::PreconditionDelta);
    }
    // m = rδ/(r−1) as an exact rational
    let m_num = r * delta;
    let m_den = r - 1;
    if n * m_den <= m_num {
        return Err(BoundsError::Domain);
    }
    // first factor m−k+1 must be positive (guaranteed by the δ precondition)
    let first = m_num - (k - 1) * m_den;
    if first <= 0 {
        return Err(BoundsError::Domain);
    }
    let numerator = 2 * first * (n * m_den - m_num);
    let denominator = n * (k - 1) * m_den * m_den;
    Ok(RatioCondition::from_s(
        1.0 + numerator as f64 / denominator as f64,
    ))
}

/// Verdict of the small-order rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SmallOrderVerdict {
    /// `n < 2N − κ`: the vertex-connectivity equals δ (and hence so does
    /// the edge-connectivity).
    VertexForced,
    /// `n < 2N`: the edge-connectivity equals δ.
    EdgeForced,
    NoForce,
}

/// Outcome of the small-order rule, with the order bounds that were
/// tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallOrderRule {
    pub verdict: SmallOrderVerdict,
    /// `κ' = δ` whenever `n` is strictly below this.
    pub edge_bound: u64,
    /// `κ = δ` whenever `n` is strictly below this.
    pub vertex_bound: u64,
}

/// The small-order corollary: `n < 2N(δ,g)` forces `κ' = δ`, and
/// `n < 2N(δ,g) − κ(G)` forces `κ = δ`. When the true `κ` is unknown the
/// vertex test conservatively uses `κ ≤ δ−1` (the contrapositive branch).
/// Requires `δ ≥ 2` and finite girth.
pub fn small_order_rule(
    p: &ParamSet,
    kappa_hint: Option<usize>,
) -> Result<SmallOrderRule, BoundsError> {
    if p.min_degree < 2 {
        return Err(BoundsError::Domain);
    }
    let Girth::Finite(g) = p.girth else {
        return Err(BoundsError::Domain);
    };
    let big_n = moore_bound(p.min_degree, g)?;
    let edge_bound = big_n.checked_mul(2).ok_or(BoundsError::Overflow)?;
    let slack = match kappa_hint {
        Some(kappa) => kappa as u64,
        None => p.min_degree as u64 - 1,
    };
    let vertex_bound = edge_bound.saturating_sub(slack);
    let n = p.n as u64;
    let verdict = if n < vertex_bound {
        SmallOrderVerdict::VertexForced
    } else if n < edge_bound {
        SmallOrderVerdict::EdgeForced
    } else {
        SmallOrderVerdict::NoForce
    };
    Ok(SmallOrderRule {
        verdict,
        edge_bound,
        vertex_bound,
    })
}

/// Eigenvalue transfer: if `λ₂(G,a,b) < (a+b)δ − bp` then `μ_{n−1} > p`
/// (non-strict variant with `≤` and `≥`). Returns whether the stated
/// inequality on `λ₂(G,a,b)` holds.
pub fn courant_weyl_transfer(
    lambda2_ab: f64,
    a: f64,
    b: f64,
    delta: usize,
    p: f64,
    strict: bool,
) -> Result<bool, BoundsError> {
    if !(b > 0.0 && a >= -b) {
        return Err(BoundsError::PencilDomain);
    }
    if p < 0.0 {
        return Err(BoundsError::Domain);
    }
    let rhs = (a + b) * delta as f64 - b * p;
    Ok(if strict {
        lambda2_ab < rhs
    } else {
        lambda2_ab <= rhs
    })
}

/// Exact comparison behind the improvement remark: for `n ≥ 2N(δ,g)` and
/// `δ ≥ 3`, whether the girth threshold strictly beats the `(4/9)N` prior
/// one, i.e. `N(n−N) > (4N/9)(n−4N/9)`.
pub fn remark_edge_beats_moore49(
    delta: usize,
    girth: usize,
    n: usize,
) -> Result<bool, BoundsError> {
    if delta < 3 {
        return Err(BoundsError::Domain);
    }
    let big_n = moore_bound(delta, girth)? as u128;
    let n = n as u128;
    if n < 2 * big_n {
        return Err(BoundsError::Domain);
    }
    // Compare N(n−N) against (4N/9)(n−4N/9), both scaled by 81.
    Ok(81 * big_n * (n - big_n) > 4 * big_n * (9 * n - 4 * big_n))
}

/// Exact comparison behind the improvement remark: for `n ≥ 2N(δ,g)`,
/// whether `N(n−N) > f(n−f)` (strict exactly when `f < N`, i.e. `δ ≥ 3`
/// and `g ≥ 5`).
pub fn remark_edge_beats_f(delta: usize, girth: usize, n: usize) -> Result<bool, BoundsError> {
    let big_n = moore_bound(delta, girth)? as u128;
    let f = f_prior(delta, girth)? as u128;
    let n = n as u128;
    if n < 2 * big_n {
        return Err(BoundsError::Domain);
    }
    Ok(big_n * (n - big_n) > f * (n - f))
}

/// Exact comparison behind the vertex improvement remark: for
/// `n ≥ 2N(δ,g) − k + 1`, whether
/// `n(n−k+1) − (n−2N+k−1)² > 2ν(n−ν)` with `ν = ν(δ,g,k)`.
pub fn remark_vertex_beats_nu(
    delta: usize,
    girth: usize,
    k: usize,
    n: usize,
) -> Result<bool, BoundsError> {
    let big_n = moore_bound(delta, girth)? as i128;
    let nu = nu_prior(delta, girth, k)? as i128;
    let (n, k) = (n as i128, k as i128);
    let base = n - 2 * big_n + k - 1;
    if base < 0 {
        return Err(BoundsError::Domain);
    }
    Ok(n * (n - k + 1) - base * base > 2 * nu * (n - nu))
}
