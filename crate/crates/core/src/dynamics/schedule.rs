//! Time-dependent decay rates of a phase-covariant time-local generator.

use serde::{Deserialize, Serialize};

use super::quadrature::integrate_piecewise;
use crate::error::DynamicsError;

/// One decay rate `γ(t)`, `t ≥ 0`. Rates may be negative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Rate {
    Constant {
        value: f64,
    },
    /// `a·exp(-b t)`
    Exp {
        a: f64,
        b: f64,
    },
    /// `a·(1 + cos ωt)/2`
    DampedCosine {
        a: f64,
        omega: f64,
    },
    /// `values[i]` on `[breakpoints[i], breakpoints[i+1])`; the last value
    /// holds forever.
    Piecewise {
        breakpoints: Vec<f64>,
        values: Vec<f64>,
    },
}

impl Rate {
    pub fn constant(value: f64) -> Self {
        Rate::Constant { value }
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Rate::Constant { value } => *value,
            Rate::Exp { a, b } => a * (-b * t).exp(),
            Rate::DampedCosine { a, omega } => 0.5 * a * (1.0 + (omega * t).cos()),
            Rate::Piecewise {
                breakpoints,
                values,
            } => {
                let idx = breakpoints.partition_point(|&b| b <= t);
                values[idx.saturating_sub(1)]
            }
        }
    }

    /// Points where the rate may jump.
    pub fn breakpoints(&self) -> &[f64] {
        match self {
            Rate::Piecewise { breakpoints, .. } => breakpoints,
            _ => &[],
        }
    }

    pub fn validate(&self) -> Result<(), DynamicsError> {
        let bad = |msg: String| Err(DynamicsError::InvalidSchedule(msg));
        let params: Vec<f64> = match self {
            Rate::Constant { value } => vec![*value],
            Rate::Exp { a, b } => vec![*a, *b],
            Rate::DampedCosine { a, omega } => vec![*a, *omega],
            Rate::Piecewise {
                breakpoints,
                values,
            } => {
                if breakpoints.is_empty() || breakpoints.len() != values.len() {
                    return bad(format!(
                        "piecewise table needs equal, non-zero numbers of breakpoints and values (got {} and {})",
                        breakpoints.len(),
                        values.len()
                    ));
                }
                if breakpoints[0] != 0.0 {
                    return bad(format!(
                        "first breakpoint must be 0, got {}",
                        breakpoints[0]
                    ));
                }
                if breakpoints
                    .windows(2)
                    .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
                {
                    return bad("breakpoints must be strictly increasing".into());
                }
                breakpoints.iter().chain(values).copied().collect()
            }
        };
        if params.iter().any(|p| !p.is_finite()) {
            return bad("rate parameters must be finite".into());
        }
        Ok(())
    }
}

/// Rates `(γ₊, γ₋, γ₃)` of the generator `γ₊L₊ + γ₋L₋ + γ₃L₃`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RateSchedule {
    pub gamma_plus: Rate,
    pub gamma_minus: Rate,
    pub gamma_3: Rate,
}

impl RateSchedule {
    pub fn new(gamma_plus: Rate, gamma_minus: Rate, gamma_3: Rate) -> Self {
        Self {
            gamma_plus,
            gamma_minus,
            gamma_3,
        }
    }

    pub fn constant(plus: f64, minus: f64, three: f64) -> Self {
        Self::new(
            Rate::constant(plus),
            Rate::constant(minus),
            Rate::constant(three),
        )
    }

    pub fn zero() -> Self {
        Self::constant(0.0, 0.0, 0.0)
    }

    pub fn from_json(text: &str) -> Result<Self, DynamicsError> {
        let s: Self = serde_json::from_str(text)
            .map_err(|e| DynamicsError::InvalidSchedule(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("schedule serializes")
    }

    pub fn validate(&self) -> Result<(), DynamicsError> {
        self.gamma_plus.validate()?;
        self.gamma_minus.validate()?;
        self.gamma_3.validate()
    }

    pub fn rates(&self) -> [&Rate; 3] {
        [&self.gamma_plus, &self.gamma_minus, &self.gamma_3]
    }

    /// Union of all breakpoints, sorted.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .rates()
            .iter()
            .flat_map(|r| r.breakpoints().to_vec())
            .collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }

    /// `γ₊(t) + γ₋(t)`, the rate that sets `λ₃`.
    pub fn total_population_rate(&self, t: f64) -> f64 {
        self.gamma_plus.eval(t) + self.gamma_minus.eval(t)
    }

    /// `γ₊(t) - γ₋(t)`, the source term of `λ★`.
    pub fn imbalance(&self, t: f64) -> f64 {
        self.gamma_plus.eval(t) - self.gamma_minus.eval(t)
    }

    /// `∫_a^b γ(τ) dτ` for one rate.
    pub fn integrate_rate(
        &self,
        rate: &Rate,
        a: f64,
        b: f64,
        tol: f64,
    ) -> Result<f64, DynamicsError> {
        integrate_piecewise(|t| rate.eval(t), a, b, rate.breakpoints(), tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piecewise_eval() {
        let r = Rate::Piecewise {
            breakpoints: vec![0.0, 1.0, 2.5],
            values: vec![1.0, -0.5, 2.0],
        };
        r.validate().unwrap();
        assert_eq!(r.eval(0.0), 1.0);
        assert_eq!(r.eval(0.999), 1.0);
        assert_eq!(r.eval(1.0), -0.5);
        assert_eq!(r.eval(100.0), 2.0);
    }

    #[test]
    fn presets_eval() {
        assert!((Rate::Exp { a: 2.0, b: 0.5 }.eval(2.0) - 2.0 * (-1f64).exp()).abs() < 1e-15);
        assert_eq!(Rate::DampedCosine { a: 2.0, omega: 1.0 }.eval(0.0), 2.0);
        assert!(
            Rate::DampedCosine { a: 2.0, omega: 1.0 }
                .eval(std::f64::consts::PI)
                .abs()
                < 1e-15
        );
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "gamma_plus": {"type": "constant", "value": 1.0},
            "gamma_minus": {"type": "exp", "a": -0.2, "b": 3.0},
            "gamma_3": {"type": "piecewise", "breakpoints": [0, 1], "values": [0.5, 0.0]}
        }"#;
        let s = RateSchedule::from_json(text).unwrap();
        assert_eq!(s.gamma_minus, Rate::Exp { a: -0.2, b: 3.0 });
        assert_eq!(RateSchedule::from_json(&s.to_json()).unwrap(), s);
        assert_eq!(s.breakpoints(), vec![0.0, 1.0]);
    }

    #[test]
    fn schema_violations() {
        let cases = [
            r#"{"gamma_plus": {"type": "constant", "value": 1.0}}"#,
            r#"{"gamma_plus": {"type": "linear", "value": 1.0},
                "gamma_minus": {"type": "constant", "value": 1.0},
                "gamma_3": {"type": "constant", "value": 1.0}}"#,
            r#"{"gamma_plus": {"type": "piecewise", "breakpoints": [0.5, 1], "values": [1, 2]},
                "gamma_minus": {"type": "constant", "value": 1.0},
                "gamma_3": {"type": "constant", "value": 1.0}}"#,
            r#"{"gamma_plus": {"type": "piecewise", "breakpoints": [0, 1, 1], "values": [1, 2, 3]},
                "gamma_minus": {"type": "constant", "value": 1.0},
                "gamma_3": {"type": "constant", "value": 1.0}}"#,
            r#"{"gamma_plus": {"type": "piecewise", "breakpoints": [0, 1], "values": [1]},
                "gamma_minus": {"type": "constant", "value": 1.0},
                "gamma_3": {"type": "constant", "value": 1.0}}"#,
            r#"{"gamma_plus": {"type": "constant", "value": 1.0, "extra": 2},
                "gamma_minus": {"type": "constant", "value": 1.0},
                "gamma_3": {"type": "constant", "value": 1.0}}"#,
            "not json",
        ];
        for c in cases {
            assert!(
                matches!(
                    RateSchedule::from_json(c),
                    Err(DynamicsError::InvalidSchedule(_))
                ),
                "{c}"
            );
        }
    }

    #[test]
    fn piecewise_integral_is_exact() {
        let s = RateSchedule::new(
            Rate::Piecewise {
                breakpoints: vec![0.0, 0.7, 1.3],
                values: vec![1.0, -2.0, 0.25],
            },
            Rate::constant(0.0),
            Rate::constant(0.0),
        );
        let v = s.integrate_rate(&s.gamma_plus, 0.2, 2.0, 1e-12).unwrap();
        let exact = 0.5 * 1.0 + 0.6 * -2.0 + 0.7 * 0.25;
        assert!((v - exact).abs() < 1e-15);
    }
}
