//! Principal-branch complex arithmetic with a configurable argument range
//! `[phi, phi + 2pi)`, plus membership predicates for the cut sets and
//! domains on which the continued Lerch function is single-valued.
//!
//! All cut tests use an absolute distance tolerance of [`CUT_TOL`]; a point
//! within tolerance of a cut is classified as on the cut, so evaluation
//! deterministically follows the on-cut branch.

use num::complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{LerchError, Result};

/// Absolute geometric tolerance for all cut-membership and coincidence tests.
pub const CUT_TOL: f64 = 1e-12;

/// The pair `(phi, phi_prime)` fixing the argument range `[phi, phi+2pi)`
/// in the `w`-plane and the cut ray `1 + e^{i phi'} R_{>=0}` in the `z`-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchConfig {
    phi: f64,
    phi_prime: f64,
}

impl BranchConfig {
    /// Build a configuration, checking `phi` is not a multiple of `2pi` and
    /// `Re(e^{i phi'}) >= 0`.
    pub fn new(phi: f64, phi_prime: f64) -> Result<Self> {
        let k = (phi / TAU).round();
        if (phi - TAU * k).abs() <= CUT_TOL {
            return Err(LerchError::BranchConfigInvalid(format!(
                "phi = {phi} is a multiple of 2pi"
            )));
        }
        if phi_prime.cos() < -CUT_TOL {
            return Err(LerchError::BranchConfigInvalid(format!(
                "Re(e^(i phi')) < 0 for phi' = {phi_prime}"
            )));
        }
        Ok(Self { phi, phi_prime })
    }

    /// The classical convention `phi = -pi`, `phi' = 0`: argument in
    /// `[-pi, pi)`, `w`-cuts along `(-inf, -n]`, `z`-cut along `[1, inf)`.
    pub fn standard() -> Self {
        Self {
            phi: -std::f64::consts::PI,
            phi_prime: 0.0,
        }
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn phi_prime(&self) -> f64 {
        self.phi_prime
    }

    /// True when `phi'` is a multiple of `2pi`, i.e. the `z`-cut is `[1, inf)`.
    pub fn phi_prime_is_trivial(&self) -> bool {
        let k = (self.phi_prime / TAU).round();
        (self.phi_prime - TAU * k).abs() <= CUT_TOL
    }
}

/// The unique integer `nu` with `2 pi nu` inside `[phi, phi+2pi)`, so that
/// `log r = ln r + 2 pi i nu` for positive real `r`.
pub fn nu(cfg: &BranchConfig) -> i32 {
    (cfg.phi() / TAU).ceil() as i32
}

/// Argument of `lambda` reduced into `[phi, phi+2pi)`.
pub fn principal_arg(lambda: Complex64, cfg: &BranchConfig) -> Result<f64> {
    if lambda.norm() == 0.0 {
        return Err(LerchError::ArgumentExcluded(
            "argument of zero is undefined".into(),
        ));
    }
    let theta = lambda.arg();
    let k = ((cfg.phi - theta) / TAU).ceil();
    let mut out = theta + TAU * k;
    // guard against rounding right at the window edges
    if out < cfg.phi {
        out += TAU;
    } else if out >= cfg.phi + TAU {
        out -= TAU;
    }
    Ok(out)
}

/// `ln|lambda| + i arg(lambda)` with the argument in `[phi, phi+2pi)`.
pub fn principal_log(lambda: Complex64, cfg: &BranchConfig) -> Result<Complex64> {
    let arg = principal_arg(lambda, cfg)?;
    Ok(Complex64::new(lambda.norm().ln(), arg))
}

/// `base^exponent = exp(exponent * principal_log(base))`.
pub fn cpow(base: Complex64, exponent: Complex64, cfg: &BranchConfig) -> Result<Complex64> {
    if exponent.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok((exponent * principal_log(base, cfg)?).exp())
}

/// Branch logarithm of a positive real: `ln x + 2 pi i nu`.
pub(crate) fn log_positive_real(x: f64, cfg: &BranchConfig) -> Complex64 {
    Complex64::new(x.ln(), TAU * f64::from(nu(cfg)))
}

/// Distance from `p` to the ray `base + dir * R_{>=0}` (`dir` unit length).
fn ray_distance(p: Complex64, base: Complex64, dir: Complex64) -> f64 {
    let v = (p - base) * dir.conj();
    if v.re >= 0.0 {
        v.im.abs()
    } else {
        v.norm()
    }
}

/// Candidate integer offsets where a family of parallel rays with bases
/// `sign * n + offset` can come closest to `p`.
fn ray_family_hits(p: Complex64, dir: Complex64, bases: impl Iterator<Item = f64>) -> bool {
    for b in bases {
        if ray_distance(p, Complex64::new(b, 0.0), dir) <= CUT_TOL {
            return true;
        }
    }
    false
}

/// Integer candidates `n >= n_min` minimizing distance from `p` to the ray
/// family `{ base(n) + dir R_{>=0} }` with `base(n) = base_sign * n + base_off`.
fn family_candidates(
    p: Complex64,
    dir: Complex64,
    base_sign: f64,
    base_off: f64,
    n_min: i64,
) -> Vec<f64> {
    let mut cands: Vec<i64> = vec![n_min, n_min + 1, n_min + 2];
    // perpendicular offset is linear in n: perp(n) = Im((p - base(n)) conj(dir))
    let a = ((p - Complex64::new(base_off, 0.0)) * dir.conj()).im;
    let b = -(base_sign * dir.conj()).im; // d perp / d n
    if b.abs() > 1e-300 {
        let n_star = a / -b;
        if n_star.is_finite() && n_star.abs() < 1e15 {
            let n0 = n_star.floor() as i64;
            cands.extend_from_slice(&[n0 - 1, n0, n0 + 1, n0 + 2]);
        }
    }
    // endpoint-nearest candidate: |p - base(n)| minimal at n ~ sign*(Re p - off)
    let n_end = (base_sign * (p.re - base_off)).round();
    if n_end.is_finite() && n_end.abs() < 1e15 {
        let n0 = n_end as i64;
        cands.extend_from_slice(&[n0 - 1, n0, n0 + 1]);
    }
    cands.sort_unstable();
    cands.dedup();
    cands
        .into_iter()
        .filter(|&n| n >= n_min)
        .map(|n| base_sign * n as f64 + base_off)
        .collect()
}

/// Membership in the `w`-plane cut set: `w = -n + r e^{i phi}` for some
/// integer `n >= 0` and real `r >= 0`, within [`CUT_TOL`].
pub fn on_cut_w(w: Complex64, cfg: &BranchConfig) -> bool {
    let dir = Complex64::from_polar(1.0, cfg.phi());
    let bases = family_candidates(w, dir, -1.0, 0.0, 0);
    ray_family_hits(w, dir, bases.into_iter())
}

/// Membership in the `z`-plane cut: `z = 1 + r e^{i phi'}`, `r >= 0`.
pub fn on_cut_z(z: Complex64, cfg: &BranchConfig) -> bool {
    let dir = Complex64::from_polar(1.0, cfg.phi_prime());
    ray_distance(z, Complex64::new(1.0, 0.0), dir) <= CUT_TOL
}

/// Membership in the symmetrized cut set used by the functional equations:
/// the union of the `w`-cuts with the reflected rays
/// `n + 1 + r e^{i(phi+pi)}`, `n >= 0`, `r >= 0`.
pub fn on_cut_sym(w: Complex64, cfg: &BranchConfig) -> bool {
    if on_cut_w(w, cfg) {
        return true;
    }
    let dir = -Complex64::from_polar(1.0, cfg.phi());
    let bases = family_candidates(w, dir, 1.0, 0.0, 1);
    ray_family_hits(w, dir, bases.into_iter())
}

/// Which of the four single-valuedness domains a point `(z, s, w)` inhabits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainVariant {
    /// `z` off the `z`-cut, `w` off the `w`-cuts.
    Full,
    /// `w` on a `w`-cut (continuation in `(z, s)` with fixed `w`).
    WOnCut,
    /// `z` on the `z`-cut (continuation in `(s, w)` with fixed `z`).
    ZOnCut,
    /// Both on their cuts (continuation in `s` only).
    BothOnCut,
}

impl DomainVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            DomainVariant::Full => "d1_full",
            DomainVariant::WOnCut => "d1_w_on_cut",
            DomainVariant::ZOnCut => "d1_z_on_cut",
            DomainVariant::BothOnCut => "d1_both_on_cut",
        }
    }
}

/// Domain classification of an evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainClass {
    pub variant: DomainVariant,
    /// `w` is a non-positive integer (the series terms divide by zero).
    pub excluded: bool,
    /// `z = 1` and `s = 1`: the simple pole of the Hurwitz specialization.
    pub pole: bool,
}

/// True when `w` is within [`CUT_TOL`] of a non-positive integer.
pub fn is_excluded_w(w: Complex64) -> bool {
    let k = w.re.round();
    k <= 0.5 && (w - Complex64::new(k, 0.0)).norm() <= CUT_TOL && k <= 0.0
}

/// Classify `(z, s, w)` by cut membership, exclusion, and the `s = 1` pole.
pub fn classify(z: Complex64, s: Complex64, w: Complex64, cfg: &BranchConfig) -> DomainClass {
    let w_cut = on_cut_w(w, cfg);
    let z_cut = on_cut_z(z, cfg);
    let variant = match (z_cut, w_cut) {
        (false, false) => DomainVariant::Full,
        (false, true) => DomainVariant::WOnCut,
        (true, false) => DomainVariant::ZOnCut,
        (true, true) => DomainVariant::BothOnCut,
    };
    let excluded = is_excluded_w(w);
    let pole = (z - Complex64::new(1.0, 0.0)).norm() <= CUT_TOL
        && (s - Complex64::new(1.0, 0.0)).norm() <= CUT_TOL;
    DomainClass {
        variant,
        excluded,
        pole,
    }
}

fn require_trivial_phi_prime(cfg: &BranchConfig) -> Result<()> {
    if !cfg.phi_prime_is_trivial() {
        return Err(LerchError::BranchConfigInvalid(format!(
            "phi' = {} must be a multiple of 2pi for the functional-equation domains",
            cfg.phi_prime()
        )));
    }
    Ok(())
}

/// Membership in the connected component `U` of
/// `C \ (sym-cut  U  (Z + iR))` containing the interval `(0, 1)`.
///
/// The removed set is the union of the vertical integer lines with the rays
/// of the symmetrized cut. When `cos(phi) <= 0` none of the rays enters the
/// open strip `0 < Re < 1`, so `U` is the whole strip; when `cos(phi) > 0`
/// the rays from `0` and from `1` cross the strip along `y = x tan(phi)` and
/// `y = (x - 1) tan(phi)`, and `U` is the region strictly between them.
fn in_strip_component(p: Complex64, phi: f64) -> bool {
    let (x, y) = (p.re, p.im);
    if !(x > 0.0 && x < 1.0) {
        return false;
    }
    let c = phi.cos();
    if c <= 1e-15 {
        return true;
    }
    let t = phi.sin() / c;
    let (lo, hi) = if t > 0.0 {
        ((x - 1.0) * t, x * t)
    } else {
        (x * t, (x - 1.0) * t)
    };
    y > lo && y < hi
}

/// True iff both `a` and `w` lie in the component `U` of
/// `C \ (sym-cut U (Z + iR))` containing `(0, 1)` (the domain on which the
/// symmetric functional equation is proved). Requires `phi'` in `2 pi Z`.
pub fn in_domain_eq(a: Complex64, w: Complex64, cfg: &BranchConfig) -> Result<bool> {
    require_trivial_phi_prime(cfg)?;
    Ok(in_strip_component(a, cfg.phi()) && in_strip_component(w, cfg.phi()))
}

/// The open-set condition of the extended Lerch transformation formula:
/// `a` off `sym-cut U (Z + iR_{<=0})` and `w` off `w-cut U (Z + iR)`.
/// Requires `phi'` in `2 pi Z`.
pub fn in_domain_lerch(a: Complex64, w: Complex64, cfg: &BranchConfig) -> Result<bool> {
    require_trivial_phi_prime(cfg)?;
    let a_int_ray = {
        let k = a.re.round();
        (a.re - k).abs() <= CUT_TOL && a.im <= CUT_TOL
    };
    let w_int_line = (w.re - w.re.round()).abs() <= CUT_TOL;
    Ok(!on_cut_sym(a, cfg) && !a_int_ray && !on_cut_w(w, cfg) && !w_int_line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg(phi: f64) -> BranchConfig {
        BranchConfig::new(phi, 0.0).unwrap()
    }

    #[test]
    fn config_rejects_bad_angles() {
        assert!(BranchConfig::new(0.0, 0.0).is_err());
        assert!(BranchConfig::new(TAU, 0.0).is_err());
        assert!(BranchConfig::new(-2.0 * TAU, 0.0).is_err());
        // Re(e^{i phi'}) < 0
        assert!(BranchConfig::new(-PI, PI).is_err());
        // boundary phi' = pi/2 allowed
        assert!(BranchConfig::new(-PI, PI / 2.0).is_ok());
    }

    #[test]
    fn principal_arg_examples() {
        assert_eq!(principal_arg(c(1.0, 0.0), &cfg(-PI)).unwrap(), 0.0);
        assert_eq!(principal_arg(c(-1.0, 0.0), &cfg(-PI)).unwrap(), -PI);
        assert!((principal_arg(c(1.0, 0.0), &cfg(PI / 2.0)).unwrap() - TAU).abs() < 1e-15);
        assert!(principal_arg(c(0.0, 0.0), &cfg(-PI)).is_err());
    }

    #[test]
    fn principal_log_examples() {
        let e = c(std::f64::consts::E, 0.0);
        let l = principal_log(e, &cfg(-PI)).unwrap();
        assert!((l - c(1.0, 0.0)).norm() < 1e-15);

        let l = principal_log(c(-2.0, 0.0), &cfg(-PI)).unwrap();
        assert!((l - c(2.0f64.ln(), -PI)).norm() < 1e-15);

        let l = principal_log(c(3.0, 0.0), &cfg(PI / 2.0)).unwrap();
        assert!((l - c(3.0f64.ln(), TAU)).norm() < 1e-14);
    }

    #[test]
    fn cpow_examples() {
        let p = cpow(c(2.0, 0.0), c(2.0, 0.0), &cfg(-PI)).unwrap();
        assert!((p - c(4.0, 0.0)).norm() < 1e-14);

        let p = cpow(c(-1.0, 0.0), c(0.5, 0.0), &cfg(-PI)).unwrap();
        assert!((p - c(0.0, -1.0)).norm() < 1e-14);

        let s = c(0.3, 0.7);
        let p = cpow(c(1.0, 0.0), s, &cfg(PI / 2.0)).unwrap();
        let expected = (Complex64::new(0.0, TAU) * s).exp();
        assert!((p - expected).norm() < 1e-13 * expected.norm());
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu(&cfg(-PI)), 0);
        assert_eq!(nu(&cfg(PI / 2.0)), 1);
        assert_eq!(nu(&cfg(-3.0 * PI)), -1);
    }

    #[test]
    fn cut_w_examples() {
        for phi in [-PI, PI / 2.0, 0.75 * PI, -2.3] {
            assert!(on_cut_w(c(-2.0, 0.0), &cfg(phi)), "phi={phi}");
        }
        assert!(on_cut_w(c(-0.5, 0.0), &cfg(-PI)));
        assert!(!on_cut_w(c(0.5, 1.0), &cfg(-PI)));
        // on the ray from -3 with phi = pi/2 (straight up)
        assert!(on_cut_w(c(-3.0, 2.5), &cfg(PI / 2.0)));
        assert!(!on_cut_w(c(-3.0, -2.5), &cfg(PI / 2.0)));
    }

    #[test]
    fn cut_z_examples() {
        assert!(on_cut_z(c(3.0, 0.0), &cfg(-PI)));
        assert!(on_cut_z(c(1.0, 0.0), &BranchConfig::new(-PI, PI / 2.0).unwrap()));
        assert!(!on_cut_z(c(0.5, 0.0), &cfg(-PI)));
        let up = BranchConfig::new(-PI, PI / 2.0).unwrap();
        assert!(on_cut_z(c(1.0, 2.0), &up));
        assert!(!on_cut_z(c(3.0, 0.0), &up));
    }

    #[test]
    fn cut_sym_examples() {
        assert!(on_cut_sym(c(2.0, 0.0), &cfg(-PI)));
        assert!(!on_cut_sym(c(0.5, 0.0), &cfg(-PI)));
        assert!(on_cut_sym(c(-1.0, 0.0), &cfg(0.75 * PI)));
        // reflected ray from 1 for phi = pi/2 points straight down
        assert!(on_cut_sym(c(1.0, -4.0), &cfg(PI / 2.0)));
        assert!(!on_cut_sym(c(1.5, -4.0), &cfg(PI / 2.0)));
    }

    #[test]
    fn classify_examples() {
        let d = classify(c(0.3, 0.0), c(5.0, 0.0), c(2.0, 1.0), &cfg(-PI));
        assert_eq!(d.variant, DomainVariant::Full);
        assert!(!d.excluded && !d.pole);

        let d = classify(c(1.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), &cfg(-PI));
        assert!(d.pole);
        assert_eq!(d.variant, DomainVariant::ZOnCut);

        let d = classify(c(0.5, 0.0), c(2.0, 0.0), c(-3.0, 0.0), &cfg(-PI));
        assert!(d.excluded);
    }

    #[test]
    fn domain_eq_examples() {
        let k = cfg(-PI);
        assert!(in_domain_eq(c(0.5, 0.0), c(0.5, 0.0), &k).unwrap());
        assert!(in_domain_eq(c(0.5, 5.0), c(0.3, 0.0), &k).unwrap());
        assert!(!in_domain_eq(c(1.5, 0.0), c(0.5, 0.0), &k).unwrap());
        // phi' not a multiple of 2pi is rejected
        let bad = BranchConfig::new(-PI, PI / 2.0).unwrap();
        assert!(in_domain_eq(c(0.5, 0.0), c(0.5, 0.0), &bad).is_err());
    }

    #[test]
    fn domain_eq_slanted_cuts() {
        // phi = pi/4: rays from 0 and 1 cross the strip; points beyond them
        // are outside the component containing (0, 1)
        let k = cfg(PI / 4.0);
        assert!(in_domain_eq(c(0.5, 0.0), c(0.5, 0.0), &k).unwrap());
        assert!(!in_domain_eq(c(0.5, 0.6), c(0.5, 0.0), &k).unwrap()); // above y = x
        assert!(!in_domain_eq(c(0.5, -0.6), c(0.5, 0.0), &k).unwrap()); // below y = x-1
        assert!(in_domain_eq(c(0.5, 0.4), c(0.5, -0.4), &k).unwrap());
    }

    #[test]
    fn domain_lerch_examples() {
        let k = cfg(-PI);
        assert!(in_domain_lerch(c(0.25, 0.0), c(0.75, 0.0), &k).unwrap());
        assert!(!in_domain_lerch(c(1.0, 0.0), c(0.5, 0.0), &k).unwrap());
        assert!(!in_domain_lerch(c(0.5, 0.0), c(2.0, 0.0), &k).unwrap());
        // a on the integer ray going down is excluded, going up is fine
        assert!(!in_domain_lerch(c(1.0, -2.0), c(0.5, 0.0), &k).unwrap());
        assert!(in_domain_lerch(c(1.0, 2.0), c(0.5, 0.5), &k).unwrap());
    }

    #[test]
    fn classify_is_pure() {
        let k = cfg(0.75 * PI);
        let (z, s, w) = (c(1.1, 0.3), c(0.2, -1.0), c(-0.7, 0.4));
        let a = classify(z, s, w, &k);
        for _ in 0..10 {
            assert_eq!(classify(z, s, w, &k), a);
        }
    }
}
