//! The three-qubit state family and its preparation map.
//!
//! States of interest have the form
//!
//! ```text
//! |psi> = c0|000> + c1|100> + c2|010> + c3|001>
//! ```
//!
//! with coefficients controlled by three interaction parameters: the
//! magnitude |alpha| and phase phi of a coherent amplitude, and the
//! transmissivity T of a variable beam splitter. Amplitudes are stored over
//! the full 8-dimensional computational basis in the ordering
//! `{|000>, |001>, |010>, |011>, |100>, |101>, |110>, |111>}`, i.e. basis
//! index `4*q1 + 2*q2 + q3`, so general states (GHZ, W, post-measurement
//! states) use the same representation.

use core::f64::consts::TAU;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

/// Tolerance for normalization checks on constructed states.
pub const NORM_TOL: f64 = 1e-12;

/// Threshold below which a parameter counts as exactly degenerate
/// (parameters are exact inputs, not measurements).
pub const EPS_ZERO: f64 = 1e-12;

/// One of the three qubits, labelled 1..3 as in the party assignment
/// (qubit 1 is Alice's, 2 Bob's, 3 Charlie's).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qubit {
    Q1,
    Q2,
    Q3,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::Q1, Qubit::Q2, Qubit::Q3];

    /// 0-based position, `Q1 -> 0`.
    pub fn position(self) -> usize {
        match self {
            Qubit::Q1 => 0,
            Qubit::Q2 => 1,
            Qubit::Q3 => 2,
        }
    }

    /// Bit mask of this qubit inside a basis index (`Q1` is the most
    /// significant bit).
    pub fn mask(self) -> usize {
        match self {
            Qubit::Q1 => 4,
            Qubit::Q2 => 2,
            Qubit::Q3 => 1,
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.position() + 1)
    }
}

/// Basis index of `|q1 q2 q3>`.
pub fn basis_index(q1: usize, q2: usize, q3: usize) -> usize {
    debug_assert!(q1 < 2 && q2 < 2 && q3 < 2);
    4 * q1 + 2 * q2 + q3
}

/// Errors from constructing the domain types in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QStateError {
    /// |alpha| must be a finite nonnegative real.
    InvalidAlphaMagnitude(f64),
    /// phi must be finite.
    NonFinitePhase(f64),
    /// T must lie in [0, 1].
    TransmissivityOutOfRange(f64),
    /// Squared norm differed from 1 by more than `NORM_TOL`.
    NotNormalized { norm_sq: f64 },
    /// Cannot normalize a (numerically) zero vector.
    ZeroVector,
}

impl fmt::Display for QStateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QStateError::InvalidAlphaMagnitude(a) => {
                write!(f, "coherent amplitude magnitude must be finite and >= 0, got {a}")
            }
            QStateError::NonFinitePhase(p) => write!(f, "phase must be finite, got {p}"),
            QStateError::TransmissivityOutOfRange(t) => {
                write!(f, "transmissivity must lie in [0, 1], got {t}")
            }
            QStateError::NotNormalized { norm_sq } => {
                write!(f, "state not normalized: |psi|^2 = {norm_sq}")
            }
            QStateError::ZeroVector => write!(f, "cannot normalize a zero vector"),
        }
    }
}

impl core::error::Error for QStateError {}

/// The interaction triple (|alpha|, phi, T) indexing the state family.
///
/// The phase is reduced modulo 2*pi on construction; every derived quantity
/// is periodic in phi so nothing is lost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateParams {
    alpha_mag: f64,
    phi: f64,
    transmissivity: f64,
}

impl StateParams {
    pub fn new(alpha_mag: f64, phi: f64, transmissivity: f64) -> Result<Self, QStateError> {
        if !alpha_mag.is_finite() || alpha_mag < 0.0 {
            return Err(QStateError::InvalidAlphaMagnitude(alpha_mag));
        }
        if !phi.is_finite() {
            return Err(QStateError::NonFinitePhase(phi));
        }
        if !transmissivity.is_finite() || !(0.0..=1.0).contains(&transmissivity) {
            return Err(QStateError::TransmissivityOutOfRange(transmissivity));
        }
        Ok(Self {
            alpha_mag,
            phi: phi.rem_euclid(TAU),
            transmissivity,
        })
    }

    pub fn alpha_mag(&self) -> f64 {
        self.alpha_mag
    }

    /// Phase, reduced to [0, 2*pi).
    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn transmissivity(&self) -> f64 {
        self.transmissivity
    }

    /// The complex amplitude alpha = |alpha| e^{i phi}.
    pub fn alpha(&self) -> Complex64 {
        Complex64::from_polar(self.alpha_mag, self.phi)
    }
}

/// Normalized vacuum--one-photon superposition `omega0|0> + omega1|1>`,
/// with the global phase fixed so that omega0 is real and nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VopsAmplitudes {
    omega0: Complex64,
    omega1: Complex64,
}

impl VopsAmplitudes {
    /// Checked constructor: requires normalization within `NORM_TOL` and a
    /// real nonnegative omega0.
    pub fn new(omega0: Complex64, omega1: Complex64) -> Result<Self, QStateError> {
        let norm_sq = omega0.norm_sqr() + omega1.norm_sqr();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(QStateError::NotNormalized { norm_sq });
        }
        if omega0.im.abs() > NORM_TOL || omega0.re < -NORM_TOL {
            return Err(QStateError::NotNormalized { norm_sq });
        }
        Ok(Self { omega0, omega1 })
    }

    /// Normalize a raw amplitude pair and rotate out the global phase so
    /// that omega0 (or omega1 if omega0 vanishes) becomes real positive.
    pub fn from_unnormalized(a0: Complex64, a1: Complex64) -> Result<Self, QStateError> {
        let norm = (a0.norm_sqr() + a1.norm_sqr()).sqrt();
        if norm < 1e-150 {
            return Err(QStateError::ZeroVector);
        }
        let (a0, a1) = (a0 / norm, a1 / norm);
        let reference = if a0.norm() > 1e-15 { a0 } else { a1 };
        let phase = reference / reference.norm();
        let rot = phase.conj();
        let mut omega0 = a0 * rot;
        omega0.im = 0.0;
        Ok(Self {
            omega0,
            omega1: a1 * rot,
        })
    }

    pub fn omega0(&self) -> Complex64 {
        self.omega0
    }

    pub fn omega1(&self) -> Complex64 {
        self.omega1
    }
}

/// A pure state of three qubits: 8 amplitudes in the basis ordering
/// `index = 4*q1 + 2*q2 + q3`, normalized within `NORM_TOL`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeQubitPureState {
    amps: [Complex64; 8],
}

impl ThreeQubitPureState {
    pub fn new(amps: [Complex64; 8]) -> Result<Self, QStateError> {
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(QStateError::NotNormalized { norm_sq });
        }
        Ok(Self { amps })
    }

    /// Rescale an arbitrary nonzero vector to unit norm.
    pub fn from_unnormalized(amps: [Complex64; 8]) -> Result<Self, QStateError> {
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq < 1e-300 {
            return Err(QStateError::ZeroVector);
        }
        let inv = 1.0 / norm_sq.sqrt();
        Ok(Self {
            amps: amps.map(|a| a * inv),
        })
    }

    pub fn amplitudes(&self) -> &[Complex64; 8] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Fidelity `|<self|other>|^2` (global phases drop out).
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// The GHZ state `(|000> + |111>)/sqrt(2)`.
    pub fn ghz() -> Self {
        let mut amps = [Complex64::ZERO; 8];
        let x = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        amps[0] = x;
        amps[7] = x;
        Self { amps }
    }

    /// The W state `(|100> + |010> + |001>)/sqrt(3)`.
    pub fn w() -> Self {
        let mut amps = [Complex64::ZERO; 8];
        let x = Complex64::new(1.0 / 3.0_f64.sqrt(), 0.0);
        amps[basis_index(1, 0, 0)] = x;
        amps[basis_index(0, 1, 0)] = x;
        amps[basis_index(0, 0, 1)] = x;
        Self { amps }
    }
}

/// Taxonomy of the family states by separability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateClass {
    /// |alpha| = 0: the product state |000>.
    Product,
    /// T = 0: qubit 2 factors out.
    BiseparableQubit2,
    /// T = 1: qubit 3 factors out.
    BiseparableQubit3,
    /// Genuinely tripartite-entangled region.
    Nonbiseparable,
}

impl fmt::Display for StateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StateClass::Product => "product",
            StateClass::BiseparableQubit2 => "biseparable_q2",
            StateClass::BiseparableQubit3 => "biseparable_q3",
            StateClass::Nonbiseparable => "nonbiseparable",
        };
        write!(f, "{s}")
    }
}

/// Normalized amplitudes of the heralded vacuum--one-photon superposition:
/// `omega0 = 1/sqrt(1+|alpha|^2)`, `omega1 = alpha/sqrt(1+|alpha|^2)`.
pub fn vops_amplitudes(params: StateParams) -> VopsAmplitudes {
    let inv = 1.0 / (1.0 + params.alpha_mag() * params.alpha_mag()).sqrt();
    VopsAmplitudes {
        omega0: Complex64::new(inv, 0.0),
        omega1: params.alpha() * inv,
    }
}

/// Closed-form preparation map of the family:
/// `c0 = omega0`, `c1 = omega1/sqrt(2)`, `c2 = -omega1*sqrt(T/2)`,
/// `c3 = omega1*sqrt((1-T)/2)`; all other amplitudes are exactly zero.
pub fn prepare_state(params: StateParams) -> ThreeQubitPureState {
    let vops = vops_amplitudes(params);
    let t = params.transmissivity();
    let mut amps = [Complex64::ZERO; 8];
    amps[basis_index(0, 0, 0)] = vops.omega0();
    amps[basis_index(1, 0, 0)] = vops.omega1() * core::f64::consts::FRAC_1_SQRT_2;
    amps[basis_index(0, 1, 0)] = -vops.omega1() * (t / 2.0).sqrt();
    amps[basis_index(0, 0, 1)] = vops.omega1() * ((1.0 - t) / 2.0).sqrt();
    ThreeQubitPureState { amps }
}

/// Degenerate-case taxonomy of the family at the given parameters.
pub fn classify_state(params: StateParams) -> StateClass {
    if params.alpha_mag() <= EPS_ZERO {
        StateClass::Product
    } else if params.transmissivity() <= EPS_ZERO {
        StateClass::BiseparableQubit2
    } else if params.transmissivity() >= 1.0 - EPS_ZERO {
        StateClass::BiseparableQubit3
    } else {
        StateClass::Nonbiseparable
    }
}
