//! Physical constants and wavelength/frequency conversions shared across
//! the crate.

/// Speed of light in vacuum (m/s).
pub const C: f64 = 299_792_458.0;

/// 2π, spelled out once.
pub const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Vacuum wavelength (m) to angular frequency (rad/s).
pub fn wavelength_to_omega(lambda_m: f64) -> f64 {
    TWO_PI * C / lambda_m
}

/// Angular frequency (rad/s) to vacuum wavelength (m).
pub fn omega_to_wavelength(omega: f64) -> f64 {
    TWO_PI * C / omega
}

/// Angular frequency (rad/s) to vacuum wavelength (nm).
pub fn omega_to_nm(omega: f64) -> f64 {
    omega_to_wavelength(omega) * 1e9
}

/// Vacuum wavelength (nm) to angular frequency (rad/s).
pub fn nm_to_omega(lambda_nm: f64) -> f64 {
    wavelength_to_omega(lambda_nm * 1e-9)
}

/// Frequency bandwidth (Hz) to the equivalent wavelength bandwidth (nm) at
/// a given center wavelength. Uses |dλ| = λ²·Δν/c.
pub fn hz_bandwidth_to_nm(delta_nu_hz: f64, center_nm: f64) -> f64 {
    let lambda_m = center_nm * 1e-9;
    lambda_m * lambda_m * delta_nu_hz / C * 1e9
}

/// sinc(x) = sin(x)/x with sinc(0) = 1.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-9 {
        // sin(x)/x = 1 - x²/6 + O(x⁴); below 1e-9 the quadratic term is
        // beyond f64 resolution.
        1.0
    } else {
        x.sin() / x
    }
}
