//! Product quadrature on the unit sphere `S^{2m+1}` and the Cauchy-type
//! boundary reconstruction of holomorphic Cliffordian polynomials.
//!
//! The rule is a product of one-dimensional rules in hyperspherical angles:
//! Gauss-Legendre in `cos θ` where the `sin`-power weight is an even
//! polynomial, Chebyshev (second kind) where it carries a square root, and a
//! uniform rule in the azimuth. All weights are positive and the rule
//! integrates polynomials up to the declared exactness order.

use num_traits::ToPrimitive;

use crate::algebra::{AlgebraConfig, FMultivector, FParavector};
use crate::basisfun::MultiIndex;
use crate::kernels::{laplacian_inverse_coefficient, KernelConstants, PiScaled};
use crate::numutil::factorial;
use crate::polycalc::{CompiledPoly, DiracCalculus, MvPolynomial, RadialRational};
use crate::{Error, Result, Scalar};

/// Hard cap on node counts; product rules in six dimensions grow fast.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// Nodes and positive weights on `S^{2m+1}` with a declared polynomial
/// exactness order. Node order is deterministic, so sequential accumulation
/// reproduces bit-identical results for a fixed configuration.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    config: AlgebraConfig,
    nodes: Vec<FParavector>,
    weights: Vec<f64>,
    exactness_order: u32,
}

impl QuadratureRule {
    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn nodes(&self) -> &[FParavector] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn exactness_order(&self) -> u32 {
        self.exactness_order
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Integrate a compiled scalar-or-multivector polynomial over the sphere.
    pub fn integrate_poly(&self, poly: &CompiledPoly) -> FMultivector {
        let mut acc = FMultivector::zero(self.config);
        for (node, &w) in self.nodes.iter().zip(&self.weights) {
            acc.add_scaled(&poly.eval(node.coords()), w);
        }
        acc
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on the
/// three-term recurrence.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut t = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = t;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * t * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (t * p1 - p0) / (t * t - 1.0);
            let step = p1 / dp;
            t -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = t;
        weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

/// Gauss-Chebyshev rule of the second kind: exact for
/// `∫ f(t) sqrt(1-t²) dt` with `deg f <= 2n-1`. Closed form.
fn chebyshev_second_kind(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for k in (1..=n).rev() {
        let angle = k as f64 * std::f64::consts::PI / (n as f64 + 1.0);
        nodes.push(angle.cos());
        weights.push(std::f64::consts::PI / (n as f64 + 1.0) * angle.sin().powi(2));
    }
    (nodes, weights)
}

/// 1D rule in `t = cos θ` for `∫_0^π f(cos θ) sin^K θ dθ` with `deg f <= order`,
/// returned as `(t, w, sin θ)` triples; the `sin`-power weight is folded into
/// the returned weights.
fn polar_rule(order: u32, sin_power: u32) -> Vec<(f64, f64, f64)> {
    let k = sin_power;
    let (nodes, weights, fold) = if k % 2 == 1 {
        // (1-t²)^{(K-1)/2} is a polynomial: plain Gauss-Legendre
        let n = ((order + k) as usize).div_ceil(2).max(1);
        let (t, w) = gauss_legendre(n);
        (t, w, (k - 1) / 2)
    } else {
        // (1-t²)^{(K-1)/2} = (1-t²)^{(K-2)/2} sqrt(1-t²): Chebyshev-U
        let n = ((order + k).saturating_sub(1) as usize).div_ceil(2).max(1);
        let (t, w) = chebyshev_second_kind(n);
        (t, w, (k.saturating_sub(2)) / 2)
    };
    nodes
        .into_iter()
        .zip(weights)
        .map(|(t, w)| {
            let s2 = 1.0 - t * t;
            (t, w * s2.powi(fold as i32), s2.max(0.0).sqrt())
        })
        .collect()
}

/// Product Gauss rule on the unit sphere `S^{2m+1}` integrating all
/// polynomials of total degree `<= order`. Errors if the node count would
/// exceed [`DEFAULT_NODE_CAP`].
pub fn sphere_rule(m: u32, order: u32) -> Result<QuadratureRule> {
    sphere_rule_capped(m, order, DEFAULT_NODE_CAP)
}

pub fn sphere_rule_capped(m: u32, order: u32, cap: usize) -> Result<QuadratureRule> {
    if order < 1 {
        return Err(Error::InvalidInput("rule order must be >= 1".into()));
    }
    let config = AlgebraConfig::new(m)?;
    let dim = config.coord_count(); // sphere lives in R^dim
    let polar_count = dim - 2;

    // polar angle j (1-based) carries sin^{dim-1-j}
    let polar: Vec<Vec<(f64, f64, f64)>> = (1..=polar_count)
        .map(|j| polar_rule(order, (dim - 1 - j) as u32))
        .collect();
    let azimuth_count = (order as usize + 2).max(4);
    let node_estimate: usize = polar
        .iter()
        .map(Vec::len)
        .product::<usize>()
        .saturating_mul(azimuth_count);
    if node_estimate > cap {
        return Err(Error::NodeCap {
            nodes: node_estimate,
            cap,
        });
    }

    let azimuth: Vec<(f64, f64)> = (0..azimuth_count)
        .map(|i| {
            let phi = 2.0 * std::f64::consts::PI * (i as f64 + 0.5) / azimuth_count as f64;
            (phi, 2.0 * std::f64::consts::PI / azimuth_count as f64)
        })
        .collect();

    let mut nodes = Vec::with_capacity(node_estimate);
    let mut weights = Vec::with_capacity(node_estimate);
    let mut indices = vec![0usize; polar_count];
    'outer: loop {
        // prefix products of sines along the chosen polar angles
        let mut coords = vec![0.0; dim];
        let mut sin_prod = 1.0;
        let mut weight = 1.0;
        for (j, &idx) in indices.iter().enumerate() {
            let (t, w, s) = polar[j][idx];
            coords[j] = sin_prod * t;
            sin_prod *= s;
            weight *= w;
        }
        for &(phi, w_phi) in &azimuth {
            let mut c = coords.clone();
            c[dim - 2] = sin_prod * phi.cos();
            c[dim - 1] = sin_prod * phi.sin();
            nodes.push(FParavector::new(config, c)?);
            weights.push(weight * w_phi);
        }
        // advance the mixed-radix polar index
        if polar_count == 0 {
            break;
        }
        let mut j = polar_count - 1;
        loop {
            indices[j] += 1;
            if indices[j] < polar[j].len() {
                break;
            }
            indices[j] = 0;
            if j == 0 {
                break 'outer;
            }
            j -= 1;
        }
    }

    Ok(QuadratureRule {
        config,
        nodes,
        weights,
        exactness_order: order,
    })
}

/// Closed-form surface moment `∫_{S^{2m+1}} Π y_i^{b_i} dσ` as an exact
/// rational multiple of `π^{m+1}`; zero when any exponent is odd.
pub fn sphere_moment(config: AlgebraConfig, exponents: &[u32]) -> PiScaled {
    if exponents.iter().any(|&b| b % 2 == 1) {
        return PiScaled::new(Scalar::from_integer(0.into()), 0);
    }
    let halves: Vec<u32> = exponents.iter().map(|&b| b / 2).collect();
    let total: u32 = halves.iter().sum();
    // 2 Π Γ(b_i + 1/2) / Γ(Σ b_i + d/2) with Γ(k + 1/2) = (2k)! sqrt(π)/(4^k k!)
    let mut coef = Scalar::from_integer(2.into());
    for &h in &halves {
        coef = coef * Scalar::from_integer(factorial(2 * h))
            / (Scalar::from_integer(num_bigint::BigInt::from(1) << (2 * h))
                * Scalar::from_integer(factorial(h)));
    }
    coef /= Scalar::from_integer(factorial(total + config.m()));
    PiScaled::new(coef, config.m() as i32 + 1)
}

/// Boundary fields of a polynomial needed by the reconstruction: `f`,
/// `D Δ^{k-1} f` and `∂_n D Δ^{k-1} f` for `k = 1..m`, all produced
/// symbolically from the same source polynomial and then evaluated at the
/// rule nodes.
#[derive(Debug)]
pub struct BoundaryData {
    config: AlgebraConfig,
    f_values: Vec<FMultivector>,
    /// `[k-1][node]` for `k = 1..m`
    d_values: Vec<Vec<FMultivector>>,
    dn_values: Vec<Vec<FMultivector>>,
}

/// `∂_n g = Σ_i x_i ∂_i g`, the radial directional derivative, symbolically.
fn radial_directional(g: &MvPolynomial) -> MvPolynomial {
    let config = g.config();
    let mut out = MvPolynomial::zero_with_vars(config, g.nvars());
    for i in 0..config.coord_count() {
        out = &out + &g.partial(i).expect("coordinate index").mul_var(i, 1);
    }
    out
}

pub fn boundary_data(f: &MvPolynomial, rule: &QuadratureRule) -> Result<BoundaryData> {
    let config = f.config();
    config.check_same(&rule.config)?;
    if f.nvars() != config.coord_count() {
        return Err(Error::InvalidInput(
            "boundary data expects a polynomial in the coordinates only".into(),
        ));
    }
    let m = config.m();
    let eval_all = |p: &MvPolynomial| -> Vec<FMultivector> {
        let compiled = p.compile();
        rule.nodes.iter().map(|y| compiled.eval(y.coords())).collect()
    };
    let f_values = eval_all(f);
    let mut d_values = Vec::new();
    let mut dn_values = Vec::new();
    for k in 1..=m {
        let field = f.laplacian(k - 1).dirac();
        dn_values.push(eval_all(&radial_directional(&field)));
        d_values.push(eval_all(&field));
    }
    Ok(BoundaryData {
        config,
        f_values,
        d_values,
        dn_values,
    })
}

/// Evaluate the boundary expression of the reconstruction formula at an
/// arbitrary point (no domain check): `∫ (Δ^m N(y-x)) n(y) f(y) dσ`
/// `- Σ_k ∫ (∂_n Δ^{m-k} N(y-x)) DΔ^{k-1}f dσ`
/// `+ Σ_k ∫ (Δ^{m-k} N(y-x)) ∂_n DΔ^{k-1}f dσ` with `n(y) = y`.
pub fn boundary_integral(
    data: &BoundaryData,
    rule: &QuadratureRule,
    x: &FParavector,
) -> Result<FMultivector> {
    let config = data.config;
    config.check_same(&rule.config)?;
    let m = config.m();
    let constants = KernelConstants::new(m);
    let eps = constants.epsilon_f64();
    let a: Vec<f64> = (0..=m)
        .map(|j| {
            laplacian_inverse_coefficient(m, j)
                .to_f64()
                .expect("small integer")
        })
        .collect();

    let mut acc = FMultivector::zero(config);
    for (i, (y, &w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let z = y.sub(x);
        let z2 = z.norm_sq();
        if z2 == 0.0 {
            return Err(Error::KernelSingularity);
        }
        let z_conj = z.conjugate();

        // (Δ^m N(y-x)) · y · f(y)
        let e_kernel = z_conj.scale(eps * a[m as usize] / z2.powi(m as i32 + 1));
        let term = e_kernel
            .to_multivector()
            .mul(&y.to_multivector())
            .mul(&data.f_values[i]);
        acc.add_scaled(&term, w);

        for k in 1..=m {
            let j = (m - k) as usize;
            let scale = eps * a[j] / z2.powi(j as i32 + 1);
            // ∂_n Δ^j N(y-x) = ε a_j [ y*/|z|^{2j+2} - (2j+2) <y,z> z*/|z|^{2j+4} ]
            let mut dn_kernel = y.conjugate().scale(scale);
            let dot = y.dot(&z);
            dn_kernel = FParavector::new(
                config,
                dn_kernel
                    .coords()
                    .iter()
                    .zip(z_conj.coords())
                    .map(|(a_c, b_c)| {
                        a_c - eps
                            * a[j]
                            * (2.0 * j as f64 + 2.0)
                            * dot
                            * b_c
                            / z2.powi(j as i32 + 2)
                    })
                    .collect(),
            )?;
            let term2 = dn_kernel
                .to_multivector()
                .mul(&data.d_values[(k - 1) as usize][i]);
            acc.add_scaled(&term2, -w);

            let n_kernel = z_conj.scale(scale);
            let term3 = n_kernel
                .to_multivector()
                .mul(&data.dn_values[(k - 1) as usize][i]);
            acc.add_scaled(&term3, w);
        }
    }
    Ok(acc)
}

/// Reconstruct `f(x)` for a holomorphic Cliffordian polynomial `f` and an
/// interior point `|x| < 1` from its boundary fields on the unit sphere.
pub fn cauchy_reconstruct(
    f: &MvPolynomial,
    x: &FParavector,
    rule: &QuadratureRule,
) -> Result<FMultivector> {
    if !f.is_holomorphic_cliffordian() {
        let residual = f.laplacian(f.config().m()).dirac();
        return Err(Error::NotHolomorphic {
            residual: residual.to_string(),
        });
    }
    let norm = x.norm();
    if norm >= 1.0 {
        return Err(Error::OutsideDomain { norm });
    }
    let data = boundary_data(f, rule)?;
    boundary_integral(&data, rule, x)
}

/// Scalar radial kernels `Δ_y^{j}(Y^α/|y|^{2|α|})` and their radial
/// directional derivatives, compiled for evaluation at unit-sphere nodes.
struct AlphaKernels {
    /// index j = 0..=m: Δ^j of the base kernel
    laplacians: Vec<CompiledPoly>,
    /// index j: ∂_n Δ^j of the base kernel (numerators; |y| = 1 at nodes)
    normal_derivs: Vec<CompiledPoly>,
    rho_powers: Vec<u32>,
    dn_rho_powers: Vec<u32>,
}

fn alpha_kernels(config: AlgebraConfig, alpha: &MultiIndex) -> Result<AlphaKernels> {
    let cc = config.coord_count();
    if alpha.entries().len() != cc {
        return Err(Error::MultiIndexLength {
            got: alpha.entries().len(),
            want: cc,
        });
    }
    // Y^α = y_0^{α_0} Π_{i>=1} (-y_i)^{α_i}
    let mut sign = Scalar::from_integer(1.into());
    let mut exps = vec![0u16; cc];
    for (i, &a_i) in alpha.entries().iter().enumerate() {
        exps[i] = a_i as u16;
        if i > 0 && a_i % 2 == 1 {
            sign = -sign;
        }
    }
    let numerator = MvPolynomial::monomial(
        config,
        exps,
        crate::algebra::Multivector::scalar(config, sign),
    );
    let base = RadialRational::new(numerator, alpha.total());

    let m = config.m();
    let mut laplacians = Vec::with_capacity(m as usize + 1);
    let mut normal_derivs = Vec::with_capacity(m as usize + 1);
    let mut rho_powers = Vec::new();
    let mut dn_rho_powers = Vec::new();
    let mut current = base;
    for _ in 0..=m {
        laplacians.push(current.numerator().compile());
        rho_powers.push(current.rho_power());
        let dn = radial_directional_rr(&current);
        normal_derivs.push(dn.numerator().compile());
        dn_rho_powers.push(dn.rho_power());
        current = current.laplacian(1);
    }
    Ok(AlphaKernels {
        laplacians,
        normal_derivs,
        rho_powers,
        dn_rho_powers,
    })
}

fn radial_directional_rr(r: &RadialRational) -> RadialRational {
    let config = r.config();
    let mut out: Option<RadialRational> = None;
    for i in 0..config.coord_count() {
        let mut exps = vec![0u16; r.nvars()];
        exps[i] = 1;
        let var = MvPolynomial::monomial(
            config,
            exps,
            crate::algebra::Multivector::scalar(config, Scalar::from_integer(1.into())),
        );
        let term = r.partial(i).expect("coordinate index").mul_poly(&var);
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term),
        });
    }
    out.expect("at least one coordinate")
}

/// Taylor coefficient `C_α` of a holomorphic Cliffordian polynomial by
/// boundary quadrature:
/// `C_α = A_α^{(0)} - Σ_j A_α^{(j)} + Σ_ℓ A_α^{(ℓ+m)}` with the scalar
/// kernels `Δ_y^{m-j}(Y^α/|y|^{2|α|})` handled by exact radial-rational
/// calculus before evaluation. The signs mirror the reconstruction formula
/// the coefficients are read from.
pub fn taylor_coefficient(
    data: &BoundaryData,
    rule: &QuadratureRule,
    alpha: &MultiIndex,
) -> Result<FMultivector> {
    let config = data.config;
    let m = config.m();
    let kernels = alpha_kernels(config, alpha)?;
    let eps = KernelConstants::new(m).epsilon_f64();

    let mut acc = FMultivector::zero(config);
    for (i, (y, &w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let coords = y.coords();
        let n2 = y.norm_sq();
        // A^{(0)}: Δ^m kernel times n(y) f(y)
        let k_m = kernels.laplacians[m as usize].eval(coords).scalar_part()
            / n2.powi(kernels.rho_powers[m as usize] as i32);
        let term = y.to_multivector().mul(&data.f_values[i]);
        acc.add_scaled(&term, w * eps * k_m);

        for k in 1..=m {
            let j = (m - k) as usize;
            let dn_k = kernels.normal_derivs[j].eval(coords).scalar_part()
                / n2.powi(kernels.dn_rho_powers[j] as i32);
            acc.add_scaled(&data.d_values[(k - 1) as usize][i], -w * eps * dn_k);
            let k_j = kernels.laplacians[j].eval(coords).scalar_part()
                / n2.powi(kernels.rho_powers[j] as i32);
            acc.add_scaled(&data.dn_values[(k - 1) as usize][i], w * eps * k_j);
        }
    }
    Ok(acc)
}

/// All Taylor coefficients with `1 <= |α| <= max_total`, sharing one set of
/// boundary fields.
pub fn taylor_coefficients_up_to(
    f: &MvPolynomial,
    max_total: u32,
    rule: &QuadratureRule,
) -> Result<Vec<(MultiIndex, FMultivector)>> {
    if !f.is_holomorphic_cliffordian() {
        let residual = f.laplacian(f.config().m()).dirac();
        return Err(Error::NotHolomorphic {
            residual: residual.to_string(),
        });
    }
    let data = boundary_data(f, rule)?;
    let mut out = Vec::new();
    for total in 1..=max_total {
        for alpha in crate::basisfun::multi_indices(f.config(), total) {
            let c = taylor_coefficient(&data, rule, &alpha)?;
            out.push((alpha, c));
        }
    }
    Ok(out)
}
