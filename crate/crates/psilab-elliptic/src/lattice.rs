//! Numeric Weierstrass layer over a period lattice, via Jacobi theta series.
//!
//! Conventions, used everywhere: `omega1`, `omega2` are FULL lattice
//! generators, τ = ω₂/ω₁ with Im τ > 0, and the nome is q = exp(iπτ).
//! The classical half-period formulas are applied with ω₁/2, ω₂/2.
//! Theta series are truncated once terms fall below 1e−18 relative, which
//! converges geometrically for |q| < 1.

use num_complex::Complex64;
use thiserror::Error;

type C = Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error("invalid lattice: Im(omega2/omega1) must be positive")]
    BadOrientation,
    #[error("nome |q| = {0} too close to 1 for the theta series to converge")]
    NomeOutOfRange(f64),
    #[error("argument lies on the lattice; wp has a pole there")]
    LatticePoint,
}

const TAIL_EPS: f64 = 1e-18;
const MAX_TERMS: usize = 64;

#[derive(Clone, Debug)]
pub struct PeriodLattice {
    omega1: C,
    omega2: C,
    tau: C,
    q: C,
}

impl PeriodLattice {
    pub fn new(omega1: C, omega2: C) -> Result<Self, LatticeError> {
        let tau = omega2 / omega1;
        if tau.im <= 0.0 {
            return Err(LatticeError::BadOrientation);
        }
        let q = (C::i() * std::f64::consts::PI * tau).exp();
        if q.norm() >= 0.995 {
            return Err(LatticeError::NomeOutOfRange(q.norm()));
        }
        Ok(PeriodLattice {
            omega1,
            omega2,
            tau,
            q,
        })
    }

    pub fn omega1(&self) -> C {
        self.omega1
    }

    pub fn omega2(&self) -> C {
        self.omega2
    }

    pub fn tau(&self) -> C {
        self.tau
    }

    pub fn nome(&self) -> C {
        self.q
    }

    /// Reduces u modulo the lattice to the fundamental cell around 0 and
    /// reports whether it is (numerically) a lattice point.
    fn is_lattice_point(&self, u: C) -> bool {
        // Solve u = a·ω₁ + b·ω₂ over the reals.
        let det = self.omega1.re * self.omega2.im - self.omega1.im * self.omega2.re;
        let a = (u.re * self.omega2.im - u.im * self.omega2.re) / det;
        let b = (self.omega1.re * u.im - self.omega1.im * u.re) / det;
        let frac = |t: f64| (t - t.round()).abs();
        frac(a) < 1e-12 && frac(b) < 1e-12
    }

    fn theta1(&self, v: C) -> C {
        let mut sum = C::new(0.0, 0.0);
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            let exponent = (nf + 0.5) * (nf + 0.5);
            let coeff = self.q.powf(exponent) * if n % 2 == 0 { 1.0 } else { -1.0 };
            let term = coeff * ((2.0 * nf + 1.0) * v).sin();
            sum += term;
            if coeff.norm() < TAIL_EPS && n > 2 {
                break;
            }
        }
        2.0 * sum
    }

    fn theta2(&self, v: C) -> C {
        let mut sum = C::new(0.0, 0.0);
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            let coeff = self.q.powf((nf + 0.5) * (nf + 0.5));
            sum += coeff * ((2.0 * nf + 1.0) * v).cos();
            if coeff.norm() < TAIL_EPS && n > 2 {
                break;
            }
        }
        2.0 * sum
    }

    fn theta3(&self, v: C) -> C {
        let mut sum = C::new(1.0, 0.0);
        for n in 1..MAX_TERMS {
            let nf = n as f64;
            let coeff = self.q.powf(nf * nf);
            sum += 2.0 * coeff * (2.0 * nf * v).cos();
            if coeff.norm() < TAIL_EPS && n > 2 {
                break;
            }
        }
        sum
    }

    fn theta4(&self, v: C) -> C {
        let mut sum = C::new(1.0, 0.0);
        for n in 1..MAX_TERMS {
            let nf = n as f64;
            let coeff = self.q.powf(nf * nf) * if n % 2 == 0 { 1.0 } else { -1.0 };
            sum += 2.0 * coeff * (2.0 * nf * v).cos();
            if coeff.norm() < TAIL_EPS && n > 2 {
                break;
            }
        }
        sum
    }

    fn theta1_prime0(&self) -> C {
        let mut sum = C::new(0.0, 0.0);
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            let coeff = self.q.powf((nf + 0.5) * (nf + 0.5)) * if n % 2 == 0 { 1.0 } else { -1.0 };
            sum += coeff * (2.0 * nf + 1.0);
            if coeff.norm() < TAIL_EPS && n > 2 {
                break;
            }
        }
        2.0 * sum
    }

    fn theta1_triple_prime0(&self) -> C {
        let mut sum = C::new(0.0, 0.0);
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            let m = 2.0 * nf + 1.0;
            let coeff = self.q.powf((nf + 0.5) * (nf + 0.5)) * if n % 2 == 0 { 1.0 } else { -1.0 };
            sum += coeff * m * m * m;
            if coeff.norm() < TAIL_EPS && n > 2 {
                break;
            }
        }
        -2.0 * sum
    }

    /// The three branch values e₁, e₂, e₃ of 4x³ − g₂x − g₃.
    pub fn e_values(&self) -> (C, C, C) {
        let h1 = self.omega1 / 2.0;
        let a = (std::f64::consts::PI / (2.0 * h1)).powu(2);
        let zero = C::new(0.0, 0.0);
        let t2 = self.theta2(zero).powu(4);
        let t3 = self.theta3(zero).powu(4);
        let t4 = self.theta4(zero).powu(4);
        let e1 = a * (t3 + t4) / 3.0;
        let e2 = a * (t2 - t4) / 3.0;
        let e3 = -a * (t2 + t3) / 3.0;
        (e1, e2, e3)
    }

    /// Eisenstein invariants (g₂, g₃) of the lattice.
    pub fn invariants(&self) -> (C, C) {
        let (e1, e2, e3) = self.e_values();
        let g2 = -4.0 * (e1 * e2 + e1 * e3 + e2 * e3);
        let g3 = 4.0 * e1 * e2 * e3;
        (g2, g3)
    }

    /// ζ(ω₁/2), the half-period zeta value driving σ quasi-periodicity.
    pub fn eta_half(&self) -> C {
        let h1 = self.omega1 / 2.0;
        let pi = std::f64::consts::PI;
        -(pi * pi) / (12.0 * h1) * (self.theta1_triple_prime0() / self.theta1_prime0())
    }

    /// Weierstrass σ via the theta quotient with quadratic prefactor.
    pub fn sigma(&self, u: C) -> C {
        let h1 = self.omega1 / 2.0;
        let pi = std::f64::consts::PI;
        let v = pi * u / (2.0 * h1);
        let eta = self.eta_half();
        let prefactor = (eta * u * u / (2.0 * h1)).exp();
        prefactor * (2.0 * h1 / pi) * self.theta1(v) / self.theta1_prime0()
    }

    /// Weierstrass ℘ via the θ₂ quotient anchored at e₁.
    pub fn wp(&self, u: C) -> Result<C, LatticeError> {
        if self.is_lattice_point(u) {
            return Err(LatticeError::LatticePoint);
        }
        let h1 = self.omega1 / 2.0;
        let pi = std::f64::consts::PI;
        let v = pi * u / (2.0 * h1);
        let (e1, _, _) = self.e_values();
        let quotient = pi * self.theta1_prime0() * self.theta2(v)
            / (2.0 * h1 * self.theta2(C::new(0.0, 0.0)) * self.theta1(v));
        Ok(e1 + quotient * quotient)
    }

    /// ℘′(u) through the classical duplication identity ℘′ = −σ(2u)/σ(u)⁴.
    pub fn wp_prime(&self, u: C) -> Result<C, LatticeError> {
        if self.is_lattice_point(u) {
            return Err(LatticeError::LatticePoint);
        }
        let s = self.sigma(u);
        Ok(-self.sigma(2.0 * u) / (s * s * s * s))
    }
}
