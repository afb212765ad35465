//! Concurrence-based entanglement quantities for three-qubit pure states.
//!
//! For each one-vs-pair bipartition the squared Schmidt coefficients
//! (lambda1, lambda2) of the 2x4 coefficient matrix give the Schmidt weight
//! `Y = 1 - sqrt(2(l1^2 + l2^2) - 1)` and the concurrence
//! `C = sqrt(Y(2 - Y))`, which also equals `sqrt(2(1 - Tr rho_i^2))` for the
//! single-qubit reduced density matrix. The three squared concurrences form
//! the sides of the concurrence triangle; the concurrence fill is
//! `sqrt((4/sqrt(3)) * Heron_area)` and vanishes exactly on product and
//! biseparable states.
//!
//! Closed forms for the tritter family (`family_*`) are provided alongside
//! the generic pipeline so either can serve as an oracle for the other.

use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::qstate::{Qubit, StateParams, ThreeQubitPureState};

/// Normalization factor `4/sqrt(3)` relating Heron area to squared fill.
pub const FILL_AREA_COEFF: f64 = 2.3094010767585034;

/// Round-off allowance on Heron factors for degenerate (line) triangles;
/// anything more negative signals a non-state input.
pub const HERON_NEG_TOL: f64 = 1e-9;

/// Errors from the concurrence pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntanglementError {
    /// Schmidt weight outside [0, 1] beyond round-off.
    DomainError { weight: f64 },
    /// A squared-concurrence triangle inequality failed beyond `HERON_NEG_TOL`.
    TriangleViolation { deficit: f64 },
    /// Squared Schmidt coefficients must be nonnegative and sum to 1.
    InvalidSchmidtPair { lambda1: f64, lambda2: f64 },
}

impl fmt::Display for EntanglementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntanglementError::DomainError { weight } => {
                write!(f, "Schmidt weight {weight} outside [0, 1]")
            }
            EntanglementError::TriangleViolation { deficit } => {
                write!(f, "squared-concurrence triangle inequality violated by {deficit}")
            }
            EntanglementError::InvalidSchmidtPair { lambda1, lambda2 } => {
                write!(f, "invalid Schmidt pair ({lambda1}, {lambda2})")
            }
        }
    }
}

impl core::error::Error for EntanglementError {}

/// Squared Schmidt coefficients of a one-vs-pair bipartition,
/// ordered `lambda1 >= lambda2`, summing to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtPair {
    lambda1: f64,
    lambda2: f64,
}

impl SchmidtPair {
    pub fn new(lambda1: f64, lambda2: f64) -> Result<Self, EntanglementError> {
        let err = EntanglementError::InvalidSchmidtPair { lambda1, lambda2 };
        if !(lambda1.is_finite() && lambda2.is_finite()) {
            return Err(err);
        }
        if lambda1 < lambda2 || lambda2 < -1e-12 || (lambda1 + lambda2 - 1.0).abs() > 1e-12 {
            return Err(err);
        }
        Ok(Self { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }
}

/// Concurrence triangle with sides `s_i = C_i(jk)^2`, its perimeter,
/// Heron area and the concurrence fill.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceTriangle {
    sides: [f64; 3],
    perimeter: f64,
    area: f64,
    fill: f64,
}

impl ConcurrenceTriangle {
    /// Sides `[s1, s2, s3]` for partitions 1(23), 2(31), 3(12).
    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn fill(&self) -> f64 {
        self.fill
    }
}

/// Reduced density matrix of one qubit, by explicit partial trace over the
/// 8-amplitude vector.
pub fn reduced_density(state: &ThreeQubitPureState, qubit: Qubit) -> [[Complex64; 2]; 2] {
    let mask = qubit.mask();
    let mut rho = [[Complex64::ZERO; 2]; 2];
    for rest in 0..8usize {
        if rest & mask != 0 {
            continue;
        }
        let c0 = state.amplitude(rest);
        let c1 = state.amplitude(rest | mask);
        rho[0][0] += c0 * c0.conj();
        rho[0][1] += c0 * c1.conj();
        rho[1][0] += c1 * c0.conj();
        rho[1][1] += c1 * c1.conj();
    }
    rho
}

/// Eigenvalues of a 2x2 Hermitian matrix in closed form (trace/determinant),
/// returned in decreasing order.
fn hermitian2_eigenvalues(m: &[[Complex64; 2]; 2]) -> (f64, f64) {
    let tr = m[0][0].re + m[1][1].re;
    let det = m[0][0].re * m[1][1].re - m[0][1].norm_sqr();
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    ((tr + disc) / 2.0, (tr - disc) / 2.0)
}

/// Squared Schmidt coefficients of the bipartition separating `single_qubit`
/// from the remaining pair. They are the eigenvalues of `M M^dag` for the
/// 2x4 coefficient matrix `M` of the bipartition, equivalently of the
/// single-qubit reduced density matrix.
pub fn schmidt_pair(state: &ThreeQubitPureState, single_qubit: Qubit) -> SchmidtPair {
    let rho = reduced_density(state, single_qubit);
    let (l1, l2) = hermitian2_eigenvalues(&rho);
    SchmidtPair {
        lambda1: l1,
        lambda2: l2.max(0.0),
    }
}

/// Schmidt weight `Y = 1 - sqrt(2(l1^2 + l2^2) - 1)`, in [0, 1].
pub fn schmidt_weight(pair: SchmidtPair) -> f64 {
    let radicand = 2.0 * (pair.lambda1 * pair.lambda1 + pair.lambda2 * pair.lambda2) - 1.0;
    1.0 - radicand.max(0.0).sqrt()
}

/// Concurrence `C = sqrt(Y(2 - Y))` from a Schmidt weight.
pub fn concurrence_from_weight(weight: f64) -> Result<f64, EntanglementError> {
    if !(-1e-12..=1.0 + 1e-12).contains(&weight) {
        return Err(EntanglementError::DomainError { weight });
    }
    let y = weight.clamp(0.0, 1.0);
    Ok((y * (2.0 - y)).sqrt())
}

/// One-vs-pair concurrence via reduced-density purity,
/// `C = sqrt(2(1 - Tr rho_i^2))`.
pub fn concurrence_one_vs_pair(state: &ThreeQubitPureState, single_qubit: Qubit) -> f64 {
    let rho = reduced_density(state, single_qubit);
    let purity = rho[0][0].re * rho[0][0].re
        + rho[1][1].re * rho[1][1].re
        + 2.0 * rho[0][1].norm_sqr();
    (2.0 * (1.0 - purity)).max(0.0).sqrt()
}

/// Build the triangle from squared-concurrence sides, checking the triangle
/// inequalities and clamping the Heron radicand against round-off.
pub fn triangle_from_sides(sides: [f64; 3]) -> Result<ConcurrenceTriangle, EntanglementError> {
    let perimeter = sides[0] + sides[1] + sides[2];
    let mut radicand = perimeter;
    for s in sides {
        let factor = perimeter - 2.0 * s;
        if factor < -HERON_NEG_TOL {
            return Err(EntanglementError::TriangleViolation { deficit: -factor });
        }
        radicand *= factor;
    }
    let area = 0.25 * radicand.max(0.0).sqrt();
    let fill = (FILL_AREA_COEFF * area).sqrt();
    Ok(ConcurrenceTriangle {
        sides,
        perimeter,
        area,
        fill,
    })
}

/// Concurrence triangle of an arbitrary normalized three-qubit pure state.
pub fn concurrence_triangle(
    state: &ThreeQubitPureState,
) -> Result<ConcurrenceTriangle, EntanglementError> {
    let mut sides = [0.0; 3];
    for (i, q) in Qubit::ALL.into_iter().enumerate() {
        let c = concurrence_one_vs_pair(state, q);
        sides[i] = c * c;
    }
    triangle_from_sides(sides)
}

/// `Omega = |alpha|^2 / (1 + |alpha|^2)`, the 1(23) concurrence of the family.
pub fn family_omega(params: StateParams) -> f64 {
    let a2 = params.alpha_mag() * params.alpha_mag();
    a2 / (1.0 + a2)
}

/// Closed-form one-vs-pair concurrence of the family:
/// `C_1(23) = Omega`, `C_2(31) = Omega*sqrt(T(2-T))`,
/// `C_3(12) = Omega*sqrt(1-T^2)`.
pub fn family_concurrence(params: StateParams, single_qubit: Qubit) -> f64 {
    let omega = family_omega(params);
    let t = params.transmissivity();
    match single_qubit {
        Qubit::Q1 => omega,
        Qubit::Q2 => omega * (t * (2.0 - t)).sqrt(),
        Qubit::Q3 => omega * (1.0 - t * t).max(0.0).sqrt(),
    }
}

/// Closed-form squared Schmidt coefficients of the family,
/// `1/2 +- sqrt(r)/(2(1+|alpha|^2))` with the bipartition-specific radicand
/// `r = 2a^2+1`, `(1-T)^2 a^4 + 2a^2 + 1` or `T^2 a^4 + 2a^2 + 1` (a = |alpha|).
pub fn family_schmidt_pair(params: StateParams, single_qubit: Qubit) -> SchmidtPair {
    let a2 = params.alpha_mag() * params.alpha_mag();
    let t = params.transmissivity();
    let radicand = match single_qubit {
        Qubit::Q1 => 2.0 * a2 + 1.0,
        Qubit::Q2 => (1.0 - t) * (1.0 - t) * a2 * a2 + 2.0 * a2 + 1.0,
        Qubit::Q3 => t * t * a2 * a2 + 2.0 * a2 + 1.0,
    };
    let half_spread = radicand.sqrt() / (2.0 * (1.0 + a2));
    SchmidtPair {
        lambda1: 0.5 + half_spread,
        lambda2: (0.5 - half_spread).max(0.0),
    }
}

/// Closed-form Heron area of the family triangle:
/// `Omega^4 * T(1-T) * sqrt(1 + T(1-T))`.
pub fn family_triangle_area(params: StateParams) -> f64 {
    let omega = family_omega(params);
    let t = params.transmissivity();
    let tt = t * (1.0 - t);
    omega.powi(4) * tt * (1.0 + tt).sqrt()
}

/// Closed-form concurrence fill of the family.
pub fn family_fill(params: StateParams) -> f64 {
    (FILL_AREA_COEFF * family_triangle_area(params)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::prepare_state;
    use approx::assert_abs_diff_eq;

    fn params(a: f64, phi: f64, t: f64) -> StateParams {
        StateParams::new(a, phi, t).unwrap()
    }

    #[test]
    fn product_state_schmidt_trivial() {
        let s = prepare_state(params(0.0, 0.0, 0.5));
        for q in Qubit::ALL {
            let pair = schmidt_pair(&s, q);
            assert_abs_diff_eq!(pair.lambda1(), 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(pair.lambda2(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn schmidt_family_unit_alpha() {
        // partition 1(23) at |alpha| = 1: lambda = 1/2 +- sqrt(3)/4
        let s = prepare_state(params(1.0, 0.0, 0.5));
        let pair = schmidt_pair(&s, Qubit::Q1);
        assert_abs_diff_eq!(pair.lambda1(), 0.5 + 3.0_f64.sqrt() / 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pair.lambda2(), 0.5 - 3.0_f64.sqrt() / 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pair.lambda1(), 0.9330127, epsilon = 5e-8);
        assert_abs_diff_eq!(pair.lambda2(), 0.0669873, epsilon = 5e-8);
    }

    #[test]
    fn schmidt_family_partition3_matches_closed_form() {
        // (|alpha|, T) = (2, 0.3), partition 3(12): radicand
        // T^2 a^4 + 2a^2 + 1 = 0.09*16 + 8 + 1 = 10.44
        let p = params(2.0, 0.0, 0.3);
        let s = prepare_state(p);
        let numeric = schmidt_pair(&s, Qubit::Q3);
        let closed = family_schmidt_pair(p, Qubit::Q3);
        assert_abs_diff_eq!(numeric.lambda1(), closed.lambda1(), epsilon = 1e-12);
        assert_abs_diff_eq!(numeric.lambda2(), closed.lambda2(), epsilon = 1e-12);
        let expect = 0.5 + 10.44_f64.sqrt() / 10.0;
        assert_abs_diff_eq!(numeric.lambda1(), expect, epsilon = 1e-12);
    }

    #[test]
    fn weight_limits() {
        let balanced = SchmidtPair::new(0.5, 0.5).unwrap();
        assert_abs_diff_eq!(schmidt_weight(balanced), 1.0, epsilon = 1e-15);
        let pure = SchmidtPair::new(1.0, 0.0).unwrap();
        assert_abs_diff_eq!(schmidt_weight(pure), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn weight_family_unit_alpha() {
        // Y_1(23) = 1 - sqrt(2a^2+1)/(a^2+1) at |alpha| = 1 is 1 - sqrt(3)/2;
        // cross-checked through the eigenvalue route.
        let s = prepare_state(params(1.0, 0.0, 0.5));
        let y = schmidt_weight(schmidt_pair(&s, Qubit::Q1));
        assert_abs_diff_eq!(y, 1.0 - 3.0_f64.sqrt() / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(y, 0.1339746, epsilon = 5e-8);
    }

    #[test]
    fn concurrence_from_weight_domain() {
        assert_abs_diff_eq!(concurrence_from_weight(0.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(concurrence_from_weight(1.0).unwrap(), 1.0, epsilon = 1e-15);
        // Y = 1 - sqrt(3)/2 gives C = 1/2 = Omega(|alpha|=1)
        let c = concurrence_from_weight(1.0 - 3.0_f64.sqrt() / 2.0).unwrap();
        assert_abs_diff_eq!(c, 0.5, epsilon = 1e-12);
        assert!(concurrence_from_weight(-0.01).is_err());
        assert!(concurrence_from_weight(1.01).is_err());
    }

    #[test]
    fn purity_concurrence_family() {
        let p = params(5.5, 0.0, 0.4);
        let s = prepare_state(p);
        // Omega = 30.25/31.25 = 0.968
        assert_abs_diff_eq!(concurrence_one_vs_pair(&s, Qubit::Q1), 0.968, epsilon = 1e-12);
        for q in Qubit::ALL {
            assert_abs_diff_eq!(
                concurrence_one_vs_pair(&s, q),
                family_concurrence(p, q),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn concurrence_ratio_symmetric_at_half_transmissivity() {
        // T(2-T) = 1-T^2 at T = 0.5, so C_2(31) = C_3(12) regardless of alpha.
        let s = prepare_state(params(1.0e6, 0.0, 0.5));
        let c2 = concurrence_one_vs_pair(&s, Qubit::Q2);
        let c3 = concurrence_one_vs_pair(&s, Qubit::Q3);
        assert_abs_diff_eq!(c2 / c3, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn fill_reference_points() {
        let cases = [
            (5.5, 0.5, 0.752832),
            (5.5, 0.3, 0.684394),
            (1.5, 0.5, 0.3851),
            (2.5, 0.5, 0.5971),
            (3.5, 0.5, 0.6867),
        ];
        for (a, t, expect) in cases {
            let tri = concurrence_triangle(&prepare_state(params(a, 0.0, t))).unwrap();
            assert_abs_diff_eq!(tri.fill(), expect, epsilon = 1e-4);
            assert_abs_diff_eq!(family_fill(params(a, 0.0, t)), expect, epsilon = 1e-4);
        }
    }

    #[test]
    fn degenerate_line_triangle() {
        let tri = concurrence_triangle(&prepare_state(params(3.0, 0.0, 0.0))).unwrap();
        assert_eq!(tri.area(), 0.0);
        assert_eq!(tri.fill(), 0.0);
        // sides s1 = s3 = Omega^2, s2 = 0
        let om2 = family_omega(params(3.0, 0.0, 0.0)).powi(2);
        assert_abs_diff_eq!(tri.sides()[0], om2, epsilon = 1e-12);
        assert_abs_diff_eq!(tri.sides()[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(tri.sides()[2], om2, epsilon = 1e-12);
    }

    #[test]
    fn ghz_and_w_fills() {
        let ghz = concurrence_triangle(&ThreeQubitPureState::ghz()).unwrap();
        assert_abs_diff_eq!(ghz.fill(), 1.0, epsilon = 1e-12);
        let w = concurrence_triangle(&ThreeQubitPureState::w()).unwrap();
        assert_abs_diff_eq!(w.fill(), 8.0 / 9.0, epsilon = 1e-12);
    }

    #[test]
    fn triangle_violation_detected() {
        // s1 > s2 + s3 cannot come from a pure state; must be rejected.
        assert!(matches!(
            triangle_from_sides([1.0, 0.2, 0.2]),
            Err(EntanglementError::TriangleViolation { .. })
        ));
    }

    #[test]
    fn fill_area_relation() {
        let tri = concurrence_triangle(&prepare_state(params(2.0, 0.3, 0.6))).unwrap();
        assert_abs_diff_eq!(tri.fill(), (FILL_AREA_COEFF * tri.area()).sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(
            tri.perimeter(),
            tri.sides().iter().sum::<f64>(),
            epsilon = 1e-15
        );
    }
}
