//! Phase-covariant qubit maps and their membership predicates.
//!
//! A map is parameterized by `(lambda1, lambda3, lambda_star)` and acts on an
//! operator `X` as
//!
//! ```text
//! Λ[X] = ½ [ (I + λ★σ₃) Tr X + λ₁σ₁ Tr(σ₁X) + λ₁σ₂ Tr(σ₂X) + λ₃σ₃ Tr(σ₃X) ]
//! ```
//!
//! No range restriction is imposed at construction: raw maps may fail to be
//! positive, and the predicates below classify them.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::ChannelError;

/// Tolerance for treating `lambda3` as equal to one in [`PhaseCovChannel::invariant_state`].
pub const FIXED_POINT_TOL: f64 = 1e-12;

/// Slack allowed on `|x| <= 1` when validating Bloch vectors.
pub const BLOCH_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn sigma1() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, ONE, ONE, ZERO)
}

pub fn sigma2() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, -I, I, ZERO)
}

pub fn sigma3() -> Matrix2<Complex64> {
    Matrix2::new(ONE, ZERO, ZERO, -ONE)
}

/// `U(φ) = exp(-i σ₃ φ)`.
pub fn phase_rotation(phi: f64) -> Matrix2<Complex64> {
    Matrix2::new(
        Complex64::from_polar(1.0, -phi),
        ZERO,
        ZERO,
        Complex64::from_polar(1.0, phi),
    )
}

/// Trace-preserving phase-covariant qubit map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseCovChannel {
    pub lambda1: f64,
    pub lambda3: f64,
    #[serde(rename = "lambdaStar")]
    pub lambda_star: f64,
}

/// Bloch vector of a qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitState {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl QubitState {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self, ChannelError> {
        let norm_sq = x1 * x1 + x2 * x2 + x3 * x3;
        if !norm_sq.is_finite() || norm_sq.sqrt() > 1.0 + BLOCH_TOL {
            return Err(ChannelError::InvalidState(x1, x2, x3));
        }
        Ok(Self { x1, x2, x3 })
    }

    /// Builds a Bloch vector without the ball check. Used for outputs of maps
    /// that are not positive, whose images can leave the ball.
    pub fn unchecked(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn maximally_mixed() -> Self {
        Self::unchecked(0.0, 0.0, 0.0)
    }

    pub fn norm(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// `ρ = ½ (I + x·σ)`.
    pub fn density_matrix(&self) -> Matrix2<Complex64> {
        let half = 0.5;
        Matrix2::new(
            Complex64::new(half * (1.0 + self.x3), 0.0),
            Complex64::new(half * self.x1, -half * self.x2),
            Complex64::new(half * self.x1, half * self.x2),
            Complex64::new(half * (1.0 - self.x3), 0.0),
        )
    }
}

/// Normalized Choi matrix `½ Σ_{kℓ} |k⟩⟨ℓ| ⊗ Λ[|k⟩⟨ℓ|]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix(Matrix4<Complex64>);

impl ChoiMatrix {
    pub fn entries(&self) -> &Matrix4<Complex64> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix4<Complex64> {
        self.0
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    /// Largest entry of `|ρ - ρ†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        (self.0 - self.0.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

/// Closed-form eigenvalues of the Choi matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChoiSpectrum {
    pub alpha_plus: f64,
    pub alpha_minus: f64,
    pub beta_plus: f64,
    pub beta_minus: f64,
}

impl ChoiSpectrum {
    pub fn as_array(&self) -> [f64; 4] {
        [
            self.alpha_plus,
            self.alpha_minus,
            self.beta_plus,
            self.beta_minus,
        ]
    }

    /// Eigenvalues in ascending order.
    pub fn sorted(&self) -> [f64; 4] {
        let mut v = self.as_array();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn min(&self) -> f64 {
        self.sorted()[0]
    }

    pub fn max(&self) -> f64 {
        self.sorted()[3]
    }

    pub fn sum(&self) -> f64 {
        self.as_array().iter().sum()
    }
}

impl PhaseCovChannel {
    pub const fn new(lambda1: f64, lambda3: f64, lambda_star: f64) -> Self {
        Self {
            lambda1,
            lambda3,
            lambda_star,
        }
    }

    pub const fn identity() -> Self {
        Self::new(1.0, 1.0, 0.0)
    }

    pub fn is_unital(&self, tol: f64) -> bool {
        self.lambda_star.abs() <= tol
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.lambda1, self.lambda3, self.lambda_star]
    }

    /// Max-abs distance between parameter triples.
    pub fn distance(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn apply(&self, state: &QubitState) -> QubitState {
        QubitState::unchecked(
            self.lambda1 * state.x1,
            self.lambda1 * state.x2,
            self.lambda_star + self.lambda3 * state.x3,
        )
    }

    /// Eigenvalues `(μ₊, μ₋)` of the output density matrix.
    pub fn output_eigenvalues(&self, state: &QubitState) -> (f64, f64) {
        let transverse = state.x1 * state.x1 + state.x2 * state.x2;
        let axial = self.lambda_star + self.lambda3 * state.x3;
        let r = (self.lambda1 * self.lambda1 * transverse + axial * axial).sqrt();
        (0.5 * (1.0 + r), 0.5 * (1.0 - r))
    }

    pub fn invariant_state(&self) -> Result<QubitState, ChannelError> {
        let gap = 1.0 - self.lambda3;
        if gap.abs() < FIXED_POINT_TOL {
            return Err(ChannelError::DegenerateFixedPoint(gap.abs()));
        }
        Ok(QubitState::unchecked(0.0, 0.0, self.lambda_star / gap))
    }

    /// Action on an arbitrary 2×2 operator, extended linearly to
    /// non-Hermitian inputs.
    pub fn apply_operator(&self, x: &Matrix2<Complex64>) -> Matrix2<Complex64> {
        let (s1, s2, s3) = (sigma1(), sigma2(), sigma3());
        let tr = x.trace();
        let t1 = (s1 * x).trace();
        let t2 = (s2 * x).trace();
        let t3 = (s3 * x).trace();
        let id = Matrix2::<Complex64>::identity();
        let l1 = Complex64::from(self.lambda1);
        let l3 = Complex64::from(self.lambda3);
        let ls = Complex64::from(self.lambda_star);
        ((id + s3 * ls) * tr + s1 * (l1 * t1) + s2 * (l1 * t2) + s3 * (l3 * t3))
            * Complex64::from(0.5)
    }

    pub fn choi(&self) -> ChoiMatrix {
        let q = 0.25;
        let (l1, l3, ls) = (self.lambda1, self.lambda3, self.lambda_star);
        let mut m = Matrix4::<Complex64>::zeros();
        m[(0, 0)] = (q * (1.0 + ls + l3)).into();
        m[(1, 1)] = (q * (1.0 - ls - l3)).into();
        m[(2, 2)] = (q * (1.0 + ls - l3)).into();
        m[(3, 3)] = (q * (1.0 - ls + l3)).into();
        m[(0, 3)] = (q * 2.0 * l1).into();
        m[(3, 0)] = (q * 2.0 * l1).into();
        ChoiMatrix(m)
    }

    pub fn choi_spectrum(&self) -> ChoiSpectrum {
        let (l1, l3, ls) = (self.lambda1, self.lambda3, self.lambda_star);
        let root = (ls * ls + 4.0 * l1 * l1).sqrt();
        ChoiSpectrum {
            alpha_plus: 0.25 * (1.0 - l3 + ls),
            alpha_minus: 0.25 * (1.0 - l3 - ls),
            beta_plus: 0.25 * (1.0 + l3 + root),
            beta_minus: 0.25 * (1.0 + l3 - root),
        }
    }

    /// Squared radius of the image of the pure state at height `z` on the
    /// Bloch sphere (`x₁² + x₂² = 1 - z²`).
    fn image_radius_sq(&self, z: f64) -> f64 {
        let axial = self.lambda_star + self.lambda3 * z;
        self.lambda1 * self.lambda1 * (1.0 - z * z) + axial * axial
    }

    /// Height `z` of the pure input state whose image lies furthest from the
    /// centre of the Bloch ball.
    ///
    /// The squared image radius is quadratic in `z`; it peaks at a pole
    /// unless it is concave with its vertex strictly inside `(-1, 1)`.
    pub fn worst_case_height(&self) -> f64 {
        let l_sq = self.lambda1 * self.lambda1;
        let b_sq = self.lambda3 * self.lambda3;
        let pole = if self.lambda_star * self.lambda3 >= 0.0 {
            1.0
        } else {
            -1.0
        };
        if l_sq > b_sq {
            let vertex = self.lambda_star * self.lambda3 / (l_sq - b_sq);
            if vertex.abs() < 1.0 && self.image_radius_sq(vertex) > self.image_radius_sq(pole) {
                return vertex;
            }
        }
        pole
    }

    /// Pure input state with the smallest output eigenvalue.
    pub fn worst_case_state(&self) -> QubitState {
        let z = self.worst_case_height();
        QubitState::unchecked((1.0 - z * z).max(0.0).sqrt(), 0.0, z)
    }

    /// Smallest output eigenvalue `μ₋` over all input states.
    pub fn min_output_eigenvalue(&self) -> f64 {
        let r = self.image_radius_sq(self.worst_case_height()).sqrt();
        0.5 * (1.0 - r)
    }

    /// Exact positivity: every input state is mapped to a state, i.e. the
    /// image of the Bloch ball stays inside it.
    pub fn is_positive(&self, eps: f64) -> bool {
        self.image_radius_sq(self.worst_case_height()).sqrt() <= 1.0 + eps
    }

    /// Membership in the positivity region `|λ₁| ≤ 1, |λ₃| + |λ★| ≤ 1`.
    ///
    /// This is the region the PT volumes are integrated over. It contains
    /// every positive map but also some maps that are not positive, e.g.
    /// `(1, 0, 1)`; use [`Self::is_positive`] to classify a single map.
    pub fn in_positivity_region(&self, eps: f64) -> bool {
        self.lambda1.abs() <= 1.0 + eps && self.lambda3.abs() + self.lambda_star.abs() <= 1.0 + eps
    }

    pub fn is_cpt(&self, eps: f64) -> bool {
        let (l1, l3, ls) = (self.lambda1, self.lambda3, self.lambda_star);
        l3.abs() + ls.abs() <= 1.0 + eps && 4.0 * l1 * l1 + ls * ls <= (1.0 + l3) * (1.0 + l3) + eps
    }

    pub fn is_ebc(&self, eps: f64) -> bool {
        let (l1, l3, ls) = (self.lambda1, self.lambda3, self.lambda_star);
        self.is_cpt(eps) && 4.0 * l1 * l1 + ls * ls <= (1.0 - l3) * (1.0 - l3) + eps
    }

    /// Reachable as a time slice of a dynamical map with a regular
    /// time-local generator: both eigenvalues strictly positive.
    pub fn is_tlg(&self) -> bool {
        self.lambda1 > 0.0 && self.lambda3 > 0.0 && self.lambda_star.abs() <= 1.0
    }

    /// `‖Λ[U X U†] − U Λ[X] U†‖` in the max-abs entry norm, `U = exp(-iσ₃φ)`.
    pub fn covariance_check(&self, phi: f64, operator: &Matrix2<Complex64>) -> f64 {
        let u = phase_rotation(phi);
        let ud = u.adjoint();
        let lhs = self.apply_operator(&(u * operator * ud));
        let rhs = u * self.apply_operator(operator) * ud;
        (lhs - rhs).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::SymmetricEigen;
    use proptest::prelude::*;

    fn dense_spectrum(m: &Matrix4<Complex64>) -> [f64; 4] {
        let eig = SymmetricEigen::new(*m);
        let mut v = [0.0; 4];
        for (slot, e) in v.iter_mut().zip(eig.eigenvalues.iter()) {
            *slot = *e;
        }
        v.sort_by(f64::total_cmp);
        v
    }

    fn dense_output_eigenvalues(c: &PhaseCovChannel, s: &QubitState) -> (f64, f64) {
        let out = c.apply_operator(&s.density_matrix());
        let eig = SymmetricEigen::new(out);
        let (a, b) = (eig.eigenvalues[0], eig.eigenvalues[1]);
        (a.max(b), a.min(b))
    }

    /// `½ Σ |k⟩⟨ℓ| ⊗ Λ[|k⟩⟨ℓ|]` assembled from the operator action.
    fn choi_from_action(c: &PhaseCovChannel) -> Matrix4<Complex64> {
        let mut m = Matrix4::<Complex64>::zeros();
        for k in 0..2 {
            for l in 0..2 {
                let mut e = Matrix2::<Complex64>::zeros();
                e[(k, l)] = ONE;
                let img = c.apply_operator(&e);
                for a in 0..2 {
                    for b in 0..2 {
                        m[(2 * k + a, 2 * l + b)] = img[(a, b)] * 0.5;
                    }
                }
            }
        }
        m
    }

    #[test]
    fn apply_examples() {
        let s = QubitState::new(0.3, -0.2, 0.5).unwrap();
        assert_eq!(PhaseCovChannel::identity().apply(&s), s);
        let out = PhaseCovChannel::new(0.0, 0.0, 0.0).apply(&s);
        assert_eq!(out, QubitState::maximally_mixed());

        let c = PhaseCovChannel::new(0.5, 0.5, 0.25);
        let north = QubitState::new(0.0, 0.0, 1.0).unwrap();
        assert_eq!(c.apply(&north), QubitState::unchecked(0.0, 0.0, 0.75));
        let (hi, lo) = c.output_eigenvalues(&north);
        let (dhi, dlo) = dense_output_eigenvalues(&c, &north);
        assert!((hi - 0.875).abs() < 1e-15 && (lo - 0.125).abs() < 1e-15);
        assert!((hi - dhi).abs() < 1e-12 && (lo - dlo).abs() < 1e-12);
    }

    #[test]
    fn output_eigenvalue_examples() {
        let north = QubitState::new(0.0, 0.0, 1.0).unwrap();
        assert_eq!(
            PhaseCovChannel::identity().output_eigenvalues(&north),
            (1.0, 0.0)
        );
        let s = QubitState::new(0.1, 0.4, -0.7).unwrap();
        assert_eq!(
            PhaseCovChannel::new(0.0, 0.0, 0.0).output_eigenvalues(&s),
            (0.5, 0.5)
        );
    }

    #[test]
    fn state_outside_ball_is_rejected() {
        assert!(matches!(
            QubitState::new(1.0, 0.1, 0.0),
            Err(ChannelError::InvalidState(..))
        ));
        assert!(QubitState::new(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn invariant_state_examples() {
        let unital = PhaseCovChannel::new(0.4, -0.3, 0.0);
        assert_eq!(unital.invariant_state().unwrap().x3, 0.0);
        let c = PhaseCovChannel::new(0.5, 0.5, 0.25);
        assert_eq!(
            c.invariant_state().unwrap(),
            QubitState::unchecked(0.0, 0.0, 0.5)
        );
        let degenerate = PhaseCovChannel::new(0.3, 0.999_999_999_999_9, 0.1);
        assert!(matches!(
            degenerate.invariant_state(),
            Err(ChannelError::DegenerateFixedPoint(_))
        ));
        assert!(PhaseCovChannel::identity().invariant_state().is_err());
    }

    #[test]
    fn choi_examples() {
        let id = PhaseCovChannel::identity().choi();
        let dense = dense_spectrum(id.entries());
        for (a, b) in dense.iter().zip([0.0, 0.0, 0.0, 1.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(id.entries()[(0, 3)], Complex64::new(0.5, 0.0));

        let depol = PhaseCovChannel::new(0.0, 0.0, 0.0).choi();
        assert_eq!(
            *depol.entries(),
            Matrix4::<Complex64>::identity() * Complex64::from(0.25)
        );

        let c = PhaseCovChannel::new(0.5, 0.25, 0.125);
        let dense = dense_spectrum(c.choi().entries());
        let closed = c.choi_spectrum().sorted();
        for (a, b) in dense.iter().zip(closed) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn choi_closed_form_matches_operator_action() {
        for c in [
            PhaseCovChannel::new(0.5, 0.25, 0.125),
            PhaseCovChannel::new(-0.7, 0.1, -0.6),
            PhaseCovChannel::new(1.3, -2.0, 0.4),
        ] {
            let diff = (c.choi().into_inner() - choi_from_action(&c))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(diff < 1e-15, "{c:?}: {diff}");
        }
    }

    #[test]
    fn choi_spectrum_examples() {
        let s = PhaseCovChannel::identity().choi_spectrum();
        assert_eq!(s.as_array(), [0.0, 0.0, 1.0, 0.0]);
        let s = PhaseCovChannel::new(0.0, 0.0, 1.0).choi_spectrum();
        assert_eq!(s.as_array(), [0.5, 0.0, 0.5, 0.0]);
    }

    #[test]
    fn positivity_examples() {
        let c = PhaseCovChannel::new(1.0, 0.5, 0.5);
        assert!(c.in_positivity_region(0.0));
        // The equatorial state is mapped to radius sqrt(1.25).
        assert!(!c.is_positive(0.0));
        assert!(!PhaseCovChannel::new(1.01, 0.0, 0.0).in_positivity_region(0.0));
        assert!(!PhaseCovChannel::new(1.01, 0.0, 0.0).is_positive(0.0));
        assert!(!PhaseCovChannel::new(1.0, 0.0, 1.0).is_positive(0.0));
        assert!(PhaseCovChannel::new(0.0, 0.0, 1.0).is_positive(0.0));
        assert!(PhaseCovChannel::new(1.0, 1.0, 0.0).is_positive(0.0));
    }

    #[test]
    fn worst_case_interior_latitude() {
        // λ₁² > λ₃² with vertex inside (-1, 1): worst state is off the poles.
        let c = PhaseCovChannel::new(0.9, 0.3, 0.2);
        let z = c.worst_case_height();
        assert!((z - 0.2 * 0.3 / (0.81 - 0.09)).abs() < 1e-15);
        let mut best = f64::INFINITY;
        for i in 0..=20_000 {
            let z = -1.0 + 2.0 * i as f64 / 20_000.0;
            let s = QubitState::unchecked((1.0 - z * z).max(0.0).sqrt(), 0.0, z);
            best = best.min(c.output_eigenvalues(&s).1);
        }
        assert!(c.min_output_eigenvalue() <= best + 1e-15);
        assert!(best - c.min_output_eigenvalue() < 1e-8);
    }

    #[test]
    fn cpt_ebc_tlg_examples() {
        assert!(PhaseCovChannel::identity().is_cpt(0.0));
        assert!(!PhaseCovChannel::new(1.0, 0.0, 0.0).is_cpt(0.0));
        assert!(PhaseCovChannel::new(0.0, 0.0, 0.0).is_ebc(0.0));
        assert!(!PhaseCovChannel::identity().is_ebc(0.0));
        assert!(PhaseCovChannel::new(0.5, 0.5, 0.9).is_tlg());
        assert!(!PhaseCovChannel::new(0.0, 0.5, 0.0).is_tlg());
        assert!(!PhaseCovChannel::new(0.5, -0.1, 0.0).is_tlg());

        let c = PhaseCovChannel::new(0.5, 0.25, 0.125);
        assert!(c.is_cpt(0.0));
        assert!(!c.is_ebc(0.0));
    }

    #[test]
    fn covariance_examples() {
        let x = Matrix2::new(
            Complex64::new(0.3, 0.1),
            Complex64::new(-1.2, 0.4),
            Complex64::new(0.7, -0.9),
            Complex64::new(0.05, 2.0),
        );
        assert_eq!(
            PhaseCovChannel::new(0.8, -0.1, 0.3).covariance_check(0.0, &x),
            0.0
        );
        let c = PhaseCovChannel::new(0.5, 0.25, 0.125);
        assert!(c.covariance_check(0.7, &sigma1()) < 1e-12);
        assert!(c.covariance_check(2.3, &x) < 1e-12);
    }

    fn triple() -> impl Strategy<Value = PhaseCovChannel> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
            .prop_map(|(a, b, c)| PhaseCovChannel::new(a, b, c))
    }

    fn bloch() -> impl Strategy<Value = QubitState> {
        (0.0..1.0f64, -1.0..1.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, z, phi)| {
            let rho = (1.0 - z * z).sqrt();
            QubitState::unchecked(r * rho * phi.cos(), r * rho * phi.sin(), r * z)
        })
    }

    proptest! {
        #[test]
        fn spectrum_matches_dense_solver(c in triple()) {
            let dense = dense_spectrum(c.choi().entries());
            let closed = c.choi_spectrum().sorted();
            for (a, b) in dense.iter().zip(closed) {
                prop_assert!((a - b).abs() < 1e-12);
            }
            prop_assert!((c.choi_spectrum().sum() - 1.0).abs() < 1e-14);
            prop_assert!((c.choi().trace().re - 1.0).abs() < 1e-15);
            prop_assert_eq!(c.choi().hermiticity_defect(), 0.0);
        }

        #[test]
        fn output_eigenvalues_match_dense_solver(c in triple(), s in bloch()) {
            let (hi, lo) = c.output_eigenvalues(&s);
            let (dhi, dlo) = dense_output_eigenvalues(&c, &s);
            prop_assert!((hi - dhi).abs() < 1e-12 && (lo - dlo).abs() < 1e-12);
            prop_assert!((hi + lo - 1.0).abs() < 1e-15);
        }

        #[test]
        fn fixed_point_is_invariant(c in triple()) {
            let rho = c.invariant_state().unwrap();
            let image = c.apply(&rho);
            prop_assert!((image.x3 - rho.x3).abs() <= 1e-14 * (1.0 + rho.x3.abs()));
            prop_assert_eq!(image.x1, 0.0);
        }

        #[test]
        fn nesting(c in triple()) {
            if c.is_ebc(0.0) { prop_assert!(c.is_cpt(0.0)); }
            if c.is_cpt(0.0) {
                prop_assert!(c.is_positive(0.0));
                prop_assert!(c.in_positivity_region(0.0));
            }
            if c.is_positive(0.0) { prop_assert!(c.in_positivity_region(0.0)); }
        }

        #[test]
        fn covariance_holds(c in triple(), phi in -10.0..10.0f64,
                            re in prop::array::uniform4(-2.0..2.0f64),
                            im in prop::array::uniform4(-2.0..2.0f64)) {
            let x = Matrix2::from_fn(|i, j| Complex64::new(re[2 * i + j], im[2 * i + j]));
            prop_assert!(c.covariance_check(phi, &x) <= 1e-12);
        }
    }
}
