//! Refractive index, wavenumber and group-slope data, quasi-phase-matching
//! mismatch, and the JSI tilt angle for periodically poled lithium niobate
//! (and any material described by a Sellmeier file).
//!
//! The shipped default is the temperature-dependent Sellmeier fit for
//! 5% MgO-doped congruent LiNbO3; alternative materials load from TOML
//! files with the same schema (see `data/linbo3_mgo5.toml`).

use serde::Deserialize;
use thiserror::Error;

use crate::units::{wavelength_to_omega, C, TWO_PI};

/// Default relative frequency step for the central-difference group slope.
pub const GROUP_SLOPE_REL_STEP: f64 = 1e-6;

/// Poling-period solver converges to |Δk| below this (rad/m).
pub const QPM_TOLERANCE: f64 = 1e-9;

const BUILTIN_MGO_PPLN: &str = include_str!("../data/linbo3_mgo5.toml");

/// Errors from dispersion evaluation and the QPM solver.
#[derive(Debug, Error)]
pub enum DispersionError {
    #[error(
        "wavelength {lambda_um} um is outside the validity window [{lo}, {hi}] um of {material}"
    )]
    WavelengthOutOfWindow {
        lambda_um: f64,
        lo: f64,
        hi: f64,
        material: String,
    },

    #[error(
        "temperature {temp_c} degC is outside the validity window [{lo}, {hi}] degC of {material}"
    )]
    TemperatureOutOfWindow {
        temp_c: f64,
        lo: f64,
        hi: f64,
        material: String,
    },

    #[error("wavelength must be positive, got {0} um")]
    NonPositiveWavelength(f64),

    #[error("refractive index must be at least 1, got {0}")]
    IndexBelowOne(f64),

    #[error("Sellmeier evaluation produced a non-physical index (n^2 = {n_squared}) at {lambda_um} um")]
    NonPhysicalIndex { n_squared: f64, lambda_um: f64 },

    #[error("no QPM solution in range [{lo_um}, {hi_um}] um: mismatch does not change sign")]
    NoQpmSolution { lo_um: f64, hi_um: f64 },

    #[error("invalid material file: {0}")]
    MaterialFile(String),

    #[error("invalid crystal: {0}")]
    InvalidCrystal(String),
}

type Result<T> = std::result::Result<T, DispersionError>;

/// Principal axis of a uniaxial crystal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Ordinary,
    Extraordinary,
}

#[derive(Debug, Clone, Deserialize)]
struct AxisCoefficients {
    a: Vec<f64>,
    b: Vec<f64>,
}

#[derive(Debug, Clone, Deserialize)]
struct Validity {
    wavelength_um: [f64; 2],
    temperature_c: [f64; 2],
}

#[derive(Debug, Clone, Deserialize)]
struct MaterialFile {
    name: String,
    form: String,
    provenance: String,
    validity: Validity,
    ordinary: AxisCoefficients,
    extraordinary: AxisCoefficients,
}

/// Functional form of the index fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SellmeierForm {
    /// n² = a1 + b1 f + (a2 + b2 f)/(λ² − (a3 + b3 f)²) + (a4 + b4 f)/(λ² − a5²) − a6 λ²,
    /// f = (T − 24.5)(T + 570.82), λ in µm, T in °C.
    Gayer2008,
    /// n ≡ a1, temperature- and wavelength-independent. Test/toy medium.
    Constant,
}

/// Sellmeier coefficient set for one material, with validity window and
/// provenance. Evaluation outside the window is an error, never an
/// extrapolation.
#[derive(Debug, Clone)]
pub struct SellmeierSet {
    name: String,
    form: SellmeierForm,
    provenance: String,
    wavelength_window_um: (f64, f64),
    temperature_window_c: (f64, f64),
    ordinary: AxisCoefficients,
    extraordinary: AxisCoefficients,
}

impl SellmeierSet {
    /// The shipped 5% MgO-doped congruent lithium niobate data
    /// (Gayer et al. 2008).
    pub fn mgo_doped_lithium_niobate() -> Self {
        Self::from_toml_str(BUILTIN_MGO_PPLN).expect("builtin material data is valid")
    }

    /// Constant-index toy medium: n_o ≡ `n_ordinary`, n_e ≡ `n_extraordinary`
    /// over a wide validity window. Dispersionless by construction.
    pub fn constant_index(n_ordinary: f64, n_extraordinary: f64) -> Self {
        Self {
            name: format!("constant(n_o={n_ordinary}, n_e={n_extraordinary})"),
            form: SellmeierForm::Constant,
            provenance: "toy medium".into(),
            wavelength_window_um: (0.1, 20.0),
            temperature_window_c: (-273.0, 1000.0),
            ordinary: AxisCoefficients {
                a: vec![n_ordinary],
                b: vec![],
            },
            extraordinary: AxisCoefficients {
                a: vec![n_extraordinary],
                b: vec![],
            },
        }
    }

    /// Parse a material definition from TOML text.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: MaterialFile =
            toml::from_str(text).map_err(|e| DispersionError::MaterialFile(e.to_string()))?;
        let form = match file.form.as_str() {
            "gayer2008" => SellmeierForm::Gayer2008,
            "constant" => SellmeierForm::Constant,
            other => {
                return Err(DispersionError::MaterialFile(format!(
                    "unknown functional form {other:?} (supported: gayer2008, constant)"
                )))
            }
        };
        let check = |axis: &AxisCoefficients, label: &str| -> Result<()> {
            let (na, nb) = match form {
                SellmeierForm::Gayer2008 => (6, 4),
                SellmeierForm::Constant => (1, 0),
            };
            if axis.a.len() != na || axis.b.len() != nb {
                return Err(DispersionError::MaterialFile(format!(
                    "{label} axis of form {:?} needs {na} `a` and {nb} `b` coefficients, got {} and {}",
                    file.form,
                    axis.a.len(),
                    axis.b.len()
                )));
            }
            Ok(())
        };
        check(&file.ordinary, "ordinary")?;
        check(&file.extraordinary, "extraordinary")?;
        let [wlo, whi] = file.validity.wavelength_um;
        let [tlo, thi] = file.validity.temperature_c;
        if !(wlo > 0.0 && whi > wlo && thi > tlo) {
            return Err(DispersionError::MaterialFile(
                "validity windows must be non-empty with positive wavelengths".into(),
            ));
        }
        Ok(Self {
            name: file.name,
            form,
            provenance: file.provenance,
            wavelength_window_um: (wlo, whi),
            temperature_window_c: (tlo, thi),
            ordinary: file.ordinary,
            extraordinary: file.extraordinary,
        })
    }

    /// Parse a material definition from a file on disk.
    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| DispersionError::MaterialFile(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Wavelength validity window in µm.
    pub fn wavelength_window_um(&self) -> (f64, f64) {
        self.wavelength_window_um
    }

    /// Temperature validity window in °C.
    pub fn temperature_window_c(&self) -> (f64, f64) {
        self.temperature_window_c
    }

    fn check_wavelength(&self, lambda_um: f64) -> Result<()> {
        if lambda_um <= 0.0 {
            return Err(DispersionError::NonPositiveWavelength(lambda_um));
        }
        let (lo, hi) = self.wavelength_window_um;
        if lambda_um < lo || lambda_um > hi {
            return Err(DispersionError::WavelengthOutOfWindow {
                lambda_um,
                lo,
                hi,
                material: self.name.clone(),
            });
        }
        Ok(())
    }

    fn check_temperature(&self, temp_c: f64) -> Result<()> {
        let (lo, hi) = self.temperature_window_c;
        if temp_c < lo || temp_c > hi {
            return Err(DispersionError::TemperatureOutOfWindow {
                temp_c,
                lo,
                hi,
                material: self.name.clone(),
            });
        }
        Ok(())
    }

    fn coefficients(&self, axis: Axis) -> &AxisCoefficients {
        match axis {
            Axis::Ordinary => &self.ordinary,
            Axis::Extraordinary => &self.extraordinary,
        }
    }
}

/// Refractive index n(λ, T) on the given axis. λ in µm, T in °C.
pub fn refractive_index(s: &SellmeierSet, axis: Axis, lambda_um: f64, temp_c: f64) -> Result<f64> {
    s.check_wavelength(lambda_um)?;
    s.check_temperature(temp_c)?;
    let c = s.coefficients(axis);
    let n2 = match s.form {
        SellmeierForm::Constant => c.a[0] * c.a[0],
        SellmeierForm::Gayer2008 => {
            let f = (temp_c - 24.5) * (temp_c + 570.82);
            let l2 = lambda_um * lambda_um;
            let a = &c.a;
            let b = &c.b;
            let res3 = a[2] + b[2] * f;
            a[0] + b[0] * f + (a[1] + b[1] * f) / (l2 - res3 * res3)
                + (a[3] + b[3] * f) / (l2 - a[4] * a[4])
                - a[5] * l2
        }
    };
    if !(n2 > 1.0) {
        return Err(DispersionError::NonPhysicalIndex {
            n_squared: n2,
            lambda_um,
        });
    }
    Ok(n2.sqrt())
}

/// Wavenumber k = 2πn/λ in rad/m. λ in µm.
pub fn wavenumber(n: f64, lambda_um: f64) -> Result<f64> {
    if lambda_um <= 0.0 {
        return Err(DispersionError::NonPositiveWavelength(lambda_um));
    }
    if n < 1.0 {
        return Err(DispersionError::IndexBelowOne(n));
    }
    Ok(TWO_PI * n / (lambda_um * 1e-6))
}

/// Wavenumber on an axis at angular frequency ω (rad/s).
pub fn wavenumber_at_omega(
    s: &SellmeierSet,
    axis: Axis,
    omega: f64,
    temp_c: f64,
) -> Result<f64> {
    let lambda_um = TWO_PI * C / omega * 1e6;
    let n = refractive_index(s, axis, lambda_um, temp_c)?;
    wavenumber(n, lambda_um)
}

/// Group slope k' = dk/dω (s/m) via central finite difference with the
/// default relative step [`GROUP_SLOPE_REL_STEP`].
pub fn group_slope(s: &SellmeierSet, axis: Axis, lambda_um: f64, temp_c: f64) -> Result<f64> {
    group_slope_with_step(s, axis, lambda_um, temp_c, GROUP_SLOPE_REL_STEP)
}

/// Group slope with a caller-chosen relative frequency step. Halving the
/// step must change the result by less than ~h² relative (convergence is
/// unit-tested); both stencil points must stay inside the validity window.
pub fn group_slope_with_step(
    s: &SellmeierSet,
    axis: Axis,
    lambda_um: f64,
    temp_c: f64,
    rel_step: f64,
) -> Result<f64> {
    let omega = wavelength_to_omega(lambda_um * 1e-6);
    let h = omega * rel_step;
    let k_hi = wavenumber_at_omega(s, axis, omega + h, temp_c)?;
    let k_lo = wavenumber_at_omega(s, axis, omega - h, temp_c)?;
    Ok((k_hi - k_lo) / (2.0 * h))
}

/// Crystal description: material data, length, poling period, operating
/// temperature, and the type-II axis assignment (pump, H photon, V photon).
#[derive(Debug, Clone)]
pub struct CrystalSpec {
    pub material: SellmeierSet,
    /// Crystal length L in meters.
    pub length_m: f64,
    /// Poling period Λ in meters. `f64::INFINITY` means unpoled.
    pub poling_period_m: f64,
    pub temperature_c: f64,
    /// Axis carrying the pump field.
    pub pump_axis: Axis,
    /// Axis carrying the H-polarized (signal) photon.
    pub signal_axis: Axis,
    /// Axis carrying the V-polarized (idler) photon.
    pub idler_axis: Axis,
}

impl CrystalSpec {
    /// Validate the type-II invariants: positive L and Λ, temperature inside
    /// the material window, signal and idler on different axes.
    pub fn validate(&self) -> Result<()> {
        if !(self.length_m > 0.0) {
            return Err(DispersionError::InvalidCrystal(format!(
                "crystal length must be positive, got {} m",
                self.length_m
            )));
        }
        if !(self.poling_period_m > 0.0) {
            return Err(DispersionError::InvalidCrystal(format!(
                "poling period must be positive, got {} m",
                self.poling_period_m
            )));
        }
        self.material.check_temperature(self.temperature_c)?;
        if self.signal_axis == self.idler_axis {
            return Err(DispersionError::InvalidCrystal(
                "type-II requires signal and idler on different axes".into(),
            ));
        }
        Ok(())
    }

    /// QPM momentum contribution 2π/Λ (rad/m); zero for an unpoled crystal.
    pub fn qpm_term(&self) -> f64 {
        if self.poling_period_m.is_infinite() {
            0.0
        } else {
            TWO_PI / self.poling_period_m
        }
    }
}

/// Collinear scalar phase mismatch Δk = k_p − k_s − k_i − 2π/Λ with its
/// components.
#[derive(Debug, Clone, Copy)]
pub struct PhaseMismatch {
    pub delta_k: f64,
    pub k_pump: f64,
    pub k_signal: f64,
    pub k_idler: f64,
    pub qpm_term: f64,
}

/// Phase mismatch at signal/idler angular frequencies, with the pump index
/// evaluated at ω_s + ω_i on the pump axis.
pub fn phase_mismatch(c: &CrystalSpec, omega_s: f64, omega_i: f64) -> Result<PhaseMismatch> {
    let k_pump = wavenumber_at_omega(
        &c.material,
        c.pump_axis,
        omega_s + omega_i,
        c.temperature_c,
    )?;
    let k_signal = wavenumber_at_omega(&c.material, c.signal_axis, omega_s, c.temperature_c)?;
    let k_idler = wavenumber_at_omega(&c.material, c.idler_axis, omega_i, c.temperature_c)?;
    let qpm_term = c.qpm_term();
    Ok(PhaseMismatch {
        delta_k: k_pump - k_signal - k_idler - qpm_term,
        k_pump,
        k_signal,
        k_idler,
        qpm_term,
    })
}

/// Solve for the poling period Λ that phase-matches degenerate emission at
/// λ_deg (bisection over Λ ∈ [1 µm, 1 mm], |Δk| < [`QPM_TOLERANCE`]).
///
/// The pump leg is evaluated at 2·ω(λ_deg) on the pump axis, so for the
/// degenerate case λ_deg = 2 λ_pump the two inputs are consistent; λ_pump
/// is taken as documentation of the intended pump line.
pub fn poling_period_for_degeneracy(
    c: &CrystalSpec,
    _lambda_pump_um: f64,
    lambda_deg_um: f64,
) -> Result<f64> {
    let omega_deg = wavelength_to_omega(lambda_deg_um * 1e-6);
    let k_pump = wavenumber_at_omega(&c.material, c.pump_axis, 2.0 * omega_deg, c.temperature_c)?;
    let k_signal = wavenumber_at_omega(&c.material, c.signal_axis, omega_deg, c.temperature_c)?;
    let k_idler = wavenumber_at_omega(&c.material, c.idler_axis, omega_deg, c.temperature_c)?;
    let unpoled = k_pump - k_signal - k_idler;

    let f = |period: f64| unpoled - TWO_PI / period;
    let (mut lo, mut hi) = (1e-6, 1e-3);
    let (f_lo, f_hi) = (f(lo), f(hi));
    if f_lo.signum() == f_hi.signum() {
        return Err(DispersionError::NoQpmSolution {
            lo_um: lo * 1e6,
            hi_um: hi * 1e6,
        });
    }
    // f is monotone in the period, so plain bisection converges.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid.abs() < QPM_TOLERANCE || mid == lo || mid == hi {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Tilt angle from the three group slopes: atan2(−(k′p − k′s), k′p − k′i)
/// folded to (−90°, 90°]. Negative values mean an anticorrelated ridge
/// (the usual SPDC case).
pub fn tilt_angle_from_slopes(kp_pump: f64, kp_signal: f64, kp_idler: f64) -> f64 {
    let mut theta = (-(kp_pump - kp_signal))
        .atan2(kp_pump - kp_idler)
        .to_degrees();
    if theta > 90.0 {
        theta -= 180.0;
    }
    if theta <= -90.0 {
        theta += 180.0;
    }
    theta
}

/// Signed tilt angle of the phase-matching ridge in (−90°, 90°].
pub fn tilt_angle_signed(c: &CrystalSpec, lambda_pump_um: f64, lambda_deg_um: f64) -> Result<f64> {
    let kp_pump = group_slope(&c.material, c.pump_axis, lambda_pump_um, c.temperature_c)?;
    let kp_signal = group_slope(&c.material, c.signal_axis, lambda_deg_um, c.temperature_c)?;
    let kp_idler = group_slope(&c.material, c.idler_axis, lambda_deg_um, c.temperature_c)?;
    Ok(tilt_angle_from_slopes(kp_pump, kp_signal, kp_idler))
}

/// Tilt angle magnitude in [0°, 90°]: the inclination of the phase-matching
/// ridge to the signal-frequency axis, in the convention where the CW
/// anticorrelation line reads 45°. A vanishing k′p − k′i denominator gives
/// 90° rather than an error.
pub fn tilt_angle(c: &CrystalSpec, lambda_pump_um: f64, lambda_deg_um: f64) -> Result<f64> {
    Ok(tilt_angle_signed(c, lambda_pump_um, lambda_deg_um)?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn paper_crystal() -> CrystalSpec {
        CrystalSpec {
            material: SellmeierSet::mgo_doped_lithium_niobate(),
            length_m: 0.02,
            poling_period_m: f64::INFINITY,
            temperature_c: 90.0,
            pump_axis: Axis::Ordinary,
            signal_axis: Axis::Extraordinary,
            idler_axis: Axis::Ordinary,
        }
    }

    #[test]
    fn index_extraordinary_1560nm_25c_pinned() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        let n = refractive_index(&s, Axis::Extraordinary, 1.560, 25.0).unwrap();
        assert!(n > 2.0 && n < 2.3);
        // Independent evaluation of the published polynomial at this point.
        assert_relative_eq!(n, 2.130421688528525, epsilon = 1e-12);
    }

    #[test]
    fn index_is_deterministic() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        let a = refractive_index(&s, Axis::Extraordinary, 1.234, 73.0).unwrap();
        let b = refractive_index(&s, Axis::Extraordinary, 1.234, 73.0).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn index_outside_window_is_error() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        let err = refractive_index(&s, Axis::Extraordinary, 0.2, 25.0).unwrap_err();
        match err {
            DispersionError::WavelengthOutOfWindow { lo, hi, .. } => {
                assert_eq!((lo, hi), (0.5, 4.0));
            }
            other => panic!("expected window error, got {other}"),
        }
    }

    #[test]
    fn index_exceeds_one_across_window() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        for i in 0..50 {
            let lam = 0.5 + 3.5 * i as f64 / 49.0;
            for axis in [Axis::Ordinary, Axis::Extraordinary] {
                assert!(refractive_index(&s, axis, lam, 25.0).unwrap() > 1.0);
            }
        }
    }

    #[test]
    fn wavenumber_definition_and_linearity() {
        // n = 1 at lambda = 2π µm gives exactly 1e6 rad/m
        let k = wavenumber(1.0, TWO_PI).unwrap();
        assert_relative_eq!(k, 1e6, epsilon = 1e-12);
        let k2 = wavenumber(2.0, TWO_PI).unwrap();
        assert_relative_eq!(k2, 2.0 * k, epsilon = 1e-15);
        assert!(wavenumber(1.5, -1.0).is_err());
        assert!(wavenumber(0.5, 1.0).is_err());
    }

    #[test]
    fn wavenumber_at_1560nm_matches_hand_computation() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        let n = refractive_index(&s, Axis::Extraordinary, 1.560, 25.0).unwrap();
        let k = wavenumber(n, 1.560).unwrap();
        // 2π · 2.130421688528525 / 1.560e-6
        assert_relative_eq!(k, 8_580_662.981705, epsilon = 1e-9);
    }

    #[test]
    fn group_slope_constant_medium_is_n_over_c() {
        let s = SellmeierSet::constant_index(1.7, 1.7);
        let kp = group_slope(&s, Axis::Ordinary, 1.56, 25.0).unwrap();
        assert_relative_eq!(kp, 1.7 / C, epsilon = 1e-12);
    }

    #[test]
    fn group_slope_step_halving_converges() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        let coarse =
            group_slope_with_step(&s, Axis::Extraordinary, 1.560, 25.0, GROUP_SLOPE_REL_STEP)
                .unwrap();
        let fine = group_slope_with_step(
            &s,
            Axis::Extraordinary,
            1.560,
            25.0,
            GROUP_SLOPE_REL_STEP / 2.0,
        )
        .unwrap();
        assert!(((coarse - fine) / fine).abs() < 1e-6);
    }

    #[test]
    fn group_slopes_positive_in_transparency_window() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        for lam in [0.78, 1.56] {
            for axis in [Axis::Ordinary, Axis::Extraordinary] {
                assert!(group_slope(&s, axis, lam, 25.0).unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn group_slope_neighbourhood_outside_window_is_error() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        // 0.5 µm sits on the window edge; the ω+h point exceeds it.
        assert!(group_slope(&s, Axis::Ordinary, 0.5, 25.0).is_err());
    }

    #[test]
    fn poling_period_pinned_against_independent_bisection() {
        let mut c = paper_crystal();
        let period = poling_period_for_degeneracy(&c, 0.780, 1.560).unwrap();
        assert!(period > 5e-6 && period < 40e-6);
        // Brute-force bisection over the same dispersion data, written
        // independently of the solver above.
        let omega_deg = wavelength_to_omega(1.560e-6);
        let mismatch_for = |p: f64| {
            let k_p =
                wavenumber_at_omega(&c.material, Axis::Ordinary, 2.0 * omega_deg, 90.0).unwrap();
            let k_s =
                wavenumber_at_omega(&c.material, Axis::Extraordinary, omega_deg, 90.0).unwrap();
            let k_i = wavenumber_at_omega(&c.material, Axis::Ordinary, omega_deg, 90.0).unwrap();
            k_p - k_s - k_i - TWO_PI / p
        };
        let (mut lo, mut hi) = (5e-6, 40e-6);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if mismatch_for(mid).signum() == mismatch_for(lo).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert_relative_eq!(period, 0.5 * (lo + hi), epsilon = 1e-9);
        // Frozen from the oracle evaluation of the same polynomial.
        assert_relative_eq!(period, 9.696257795770e-6, epsilon = 1e-9);

        // Round trip: the solved period phase-matches degeneracy.
        c.poling_period_m = period;
        let pm = phase_mismatch(&c, omega_deg, omega_deg).unwrap();
        assert!((pm.delta_k * c.length_m).abs() < 1e-6);
    }

    #[test]
    fn poling_period_shifts_with_temperature() {
        let mut c = paper_crystal();
        let p90 = poling_period_for_degeneracy(&c, 0.780, 1.560).unwrap();
        c.temperature_c = 100.0;
        let p100 = poling_period_for_degeneracy(&c, 0.780, 1.560).unwrap();
        assert!((p90 - p100).abs() > 1e-9);
    }

    #[test]
    fn phase_mismatch_is_asymmetric_for_type_ii() {
        let mut c = paper_crystal();
        c.poling_period_m = poling_period_for_degeneracy(&c, 0.780, 1.560).unwrap();
        let omega_deg = wavelength_to_omega(1.560e-6);
        let detune = 0.002 * omega_deg;
        let a = phase_mismatch(&c, omega_deg + detune, omega_deg - detune).unwrap();
        let b = phase_mismatch(&c, omega_deg - detune, omega_deg + detune).unwrap();
        assert!((a.delta_k - b.delta_k).abs() > 1.0);
    }

    #[test]
    fn unpoled_crystal_has_zero_qpm_term() {
        let c = paper_crystal();
        let omega_deg = wavelength_to_omega(1.560e-6);
        let pm = phase_mismatch(&c, omega_deg, omega_deg).unwrap();
        assert_eq!(pm.qpm_term, 0.0);
        assert_relative_eq!(
            pm.delta_k,
            pm.k_pump - pm.k_signal - pm.k_idler,
            epsilon = 1e-15
        );
    }

    #[test]
    fn mismatch_composes_from_its_fields() {
        let mut c = paper_crystal();
        c.poling_period_m = 9.7e-6;
        let pm = phase_mismatch(&c, wavelength_to_omega(1.55e-6), wavelength_to_omega(1.57e-6))
            .unwrap();
        assert_relative_eq!(
            pm.delta_k,
            pm.k_pump - pm.k_signal - pm.k_idler - pm.qpm_term,
            epsilon = 1e-15
        );
    }

    #[test]
    fn tilt_angle_reproduces_paper_value() {
        let c = paper_crystal();
        let theta = tilt_angle(&c, 0.780, 1.560).unwrap();
        assert_abs_diff_eq!(theta, 59.96, epsilon = 0.5);
        // The signed orientation is anticorrelated.
        assert!(tilt_angle_signed(&c, 0.780, 1.560).unwrap() < 0.0);
    }

    #[test]
    fn tilt_angle_toy_cases() {
        // k's = k'i with k'p distinct: 45 degree magnitude.
        let theta = tilt_angle_from_slopes(2.0 / C, 1.5 / C, 1.5 / C);
        assert_abs_diff_eq!(theta.abs(), 45.0, epsilon = 1e-12);
        // Degenerate denominator folds to 90 degrees, not an error.
        let theta = tilt_angle_from_slopes(2.0 / C, 1.5 / C, 2.0 / C);
        assert_abs_diff_eq!(theta.abs(), 90.0, epsilon = 1e-12);
    }

    #[test]
    fn crystal_validation_rejects_type_i_assignment() {
        let mut c = paper_crystal();
        c.poling_period_m = 9.7e-6;
        assert!(c.validate().is_ok());
        c.idler_axis = Axis::Extraordinary;
        c.signal_axis = Axis::Extraordinary;
        assert!(c.validate().is_err());
    }

    #[test]
    fn material_file_round_trips_builtin() {
        let s = SellmeierSet::mgo_doped_lithium_niobate();
        assert_eq!(s.wavelength_window_um(), (0.5, 4.0));
        assert!(s.provenance().contains("Gayer"));
    }

    #[test]
    fn material_file_rejects_bad_form() {
        let text = r#"
name = "x"
form = "unknown"
provenance = "y"
[validity]
wavelength_um = [0.5, 4.0]
temperature_c = [20.0, 200.0]
[ordinary]
a = [1.0]
b = []
[extraordinary]
a = [1.0]
b = []
"#;
        assert!(SellmeierSet::from_toml_str(text).is_err());
    }
}
