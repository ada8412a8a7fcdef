//! The permutational solution families `P_α` and `S_β`, the generating
//! function check, and exact expansion of polynomial solutions in the `P_α`
//! family.
//!
//! `P_α(x) = Σ_σ Π_{ν<|α|} (e_{σ(ν)} x) e_{σ(|α|)}`, the sum running over the
//! distinct multiset permutations of the multiset that contains `e_i` with
//! multiplicity `α_i`. `S_β` is the singular analogue built from `x^{-1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraConfig, Blade, Multivector, Paravector};
use crate::numutil::{binomial, factorial};
use crate::polycalc::{DiracCalculus, MvPolynomial, RadialRational};
use crate::{Error, Result, Scalar};

/// Multi-index `α = (α_0, ..., α_{2m+1})` over the paravector directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn checked(config: AlgebraConfig, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != config.coord_count() {
            return Err(Error::MultiIndexLength {
                got: entries.len(),
                want: config.coord_count(),
            });
        }
        Ok(Self(entries))
    }

    /// `|α| = Σ α_i`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Number of distinct multiset permutations, `|α|! / Π α_i!`.
    pub fn permutation_count(&self) -> num_bigint::BigInt {
        let mut n = factorial(self.total());
        for &a in &self.0 {
            n /= factorial(a);
        }
        n
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// All multi-indices of the given total over the coordinate slots, in
/// lexicographic order.
pub fn multi_indices(config: AlgebraConfig, total: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0u32; config.coord_count()];
    fill_indices(&mut out, &mut current, 0, total);
    out
}

fn fill_indices(out: &mut Vec<MultiIndex>, current: &mut Vec<u32>, slot: usize, remaining: u32) {
    if slot + 1 == current.len() {
        current[slot] = remaining;
        out.push(MultiIndex(current.clone()));
        current[slot] = 0;
        return;
    }
    for v in 0..=remaining {
        current[slot] = v;
        fill_indices(out, current, slot + 1, remaining - v);
    }
    current[slot] = 0;
}

/// Distinct permutations of the multiset `{i with multiplicity counts[i]}`,
/// each a sequence of direction indices, in lexicographic order.
pub fn multiset_permutations(counts: &[u32]) -> Vec<Vec<usize>> {
    let len: u32 = counts.iter().sum();
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(len as usize);
    let mut remaining = counts.to_vec();
    fill_permutations(&mut out, &mut seq, &mut remaining, len as usize);
    out
}

fn fill_permutations(
    out: &mut Vec<Vec<usize>>,
    seq: &mut Vec<usize>,
    remaining: &mut [u32],
    len: usize,
) {
    if seq.len() == len {
        out.push(seq.clone());
        return;
    }
    for i in 0..remaining.len() {
        if remaining[i] == 0 {
            continue;
        }
        remaining[i] -= 1;
        seq.push(i);
        fill_permutations(out, seq, remaining, len);
        seq.pop();
        remaining[i] += 1;
    }
}

/// The polynomial `P_α`, homogeneous of degree `|α| - 1`. Errors when
/// `|α| = 0`.
pub fn p_alpha(config: AlgebraConfig, alpha: &MultiIndex) -> Result<MvPolynomial> {
    let alpha = MultiIndex::checked(config, alpha.0.clone())?;
    if alpha.total() == 0 {
        return Err(Error::EmptyMultiIndex);
    }
    let x = MvPolynomial::identity(config);
    let mut acc = MvPolynomial::zero(config);
    for perm in multiset_permutations(alpha.entries()) {
        let last = perm[perm.len() - 1];
        let mut term = MvPolynomial::scalar_constant(config, Scalar::one());
        for &idx in &perm[..perm.len() - 1] {
            let unit = Multivector::unit(config, idx as u32)?;
            term = &term.right_mul(&unit) * &x;
        }
        let unit = Multivector::unit(config, last as u32)?;
        acc = &acc + &term.right_mul(&unit);
    }
    Ok(acc)
}

/// `D^α (x^{2|α|-1})` divided by the stated constant (`1` when `α_0 = 0`,
/// `α_0! C(2|α|-1, α_0)` otherwise).
///
/// This matches [`p_alpha`] whenever every vector index has multiplicity at
/// most one (`α_i <= 1` for `i >= 1`; `α_0` is unrestricted because `e_0`
/// commutes). When a vector index repeats, the mixed derivative picks up
/// contraction terms `e_i ... e_i = -1` that the permutational sum does not
/// contain, and the two constructions genuinely differ; the unit tests pin
/// the exact discrepancy on a small case.
pub fn p_alpha_via_derivative(config: AlgebraConfig, alpha: &MultiIndex) -> Result<MvPolynomial> {
    let alpha = MultiIndex::checked(config, alpha.0.clone())?;
    let total = alpha.total();
    if total == 0 {
        return Err(Error::EmptyMultiIndex);
    }
    let mut p = MvPolynomial::identity_power(config, 2 * total - 1);
    for (i, &a) in alpha.entries().iter().enumerate() {
        for _ in 0..a {
            p = p.partial(i)?;
        }
    }
    let a0 = alpha.entries()[0];
    if a0 > 0 {
        let constant = Scalar::from_integer(factorial(a0) * binomial(2 * total - 1, a0));
        p = p.scale(&(Scalar::one() / constant));
    }
    Ok(p)
}

/// The degree-`n` family `P^n_{→α} = (1/|→α|!) D^{→α} x^{n+|→α|}` where `→α`
/// ranges over the vector directions only (length `2m+1`).
///
/// With this normalization the derivative recurrences carry the factors
/// `∂_0 P^n_{→α} = (n+|→α|) P^{n-1}_{→α}` and
/// `∂_k P^n_{→α} = (|→α|+1) P^{n-1}_{→α+e_k}`; see the unit tests.
pub fn p_vec(config: AlgebraConfig, n: u32, vec_alpha: &[u32]) -> Result<MvPolynomial> {
    if vec_alpha.len() != config.generator_count() as usize {
        return Err(Error::MultiIndexLength {
            got: vec_alpha.len(),
            want: config.generator_count() as usize,
        });
    }
    let total: u32 = vec_alpha.iter().sum();
    let mut p = MvPolynomial::identity_power(config, n + total);
    for (k, &a) in vec_alpha.iter().enumerate() {
        for _ in 0..a {
            p = p.partial(k + 1)?;
        }
    }
    Ok(p.scale(&(Scalar::one() / Scalar::from_integer(factorial(total)))))
}

/// The singular family `S_β(x) = Σ_σ Π_{ν<=|β|} (x^{-1} e_{σ(ν)}) x^{-1}`,
/// a radial rational with denominator power exactly `|β| + 1`. `|β| = 0` is
/// allowed and gives `x^{-1}`.
pub fn s_beta(config: AlgebraConfig, beta: &MultiIndex) -> Result<RadialRational> {
    let beta = MultiIndex::checked(config, beta.0.clone())?;
    let inv = RadialRational::x_inverse(config);
    let mut acc: Option<RadialRational> = None;
    for perm in multiset_permutations(beta.entries()) {
        let mut term = inv.clone();
        for &idx in &perm {
            let unit = Multivector::unit(config, idx as u32)?;
            term = term.right_mul(&unit).mul(&inv);
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    Ok(acc.expect("at least the empty permutation"))
}

/// One row of the generating-function match table.
#[derive(Debug, Clone)]
pub struct GeneratingMatchRow {
    pub alpha: MultiIndex,
    pub matches: bool,
    /// Constant `c` with `coefficient = c · P_α` when the group is
    /// proportional to `P_α`. Groups are keyed by the full monomial
    /// `Π λ_i^{α_i}` including `λ_0`; the factor records any normalization
    /// mismatch of the `λ_α` convention instead of hard-coding one.
    pub factor: Option<Scalar>,
}

/// Expand the Neumann partial sum `Σ_{k<=N} (λx)^k λ` over formal variables
/// `λ_0..λ_{2m+1}`, group by λ-multidegree, and compare each group against
/// `P_α`. Rows cover `1 <= |α| <= N`.
pub fn generating_series_check(config: AlgebraConfig, n: u32) -> Result<Vec<GeneratingMatchRow>> {
    if n < 1 {
        return Err(Error::InvalidInput("truncation must be >= 1".into()));
    }
    let cc = config.coord_count();
    let nvars = 2 * cc;
    let x = MvPolynomial::identity_with_vars(config, nvars);
    let mut lambda = MvPolynomial::zero_with_vars(config, nvars);
    for i in 0..cc {
        let mut exps = vec![0u16; nvars];
        exps[cc + i] = 1;
        lambda =
            &lambda + &MvPolynomial::monomial(config, exps, Multivector::unit(config, i as u32)?);
    }

    let mut sum = lambda.clone();
    let mut power = lambda.clone();
    for _ in 1..=n {
        power = &(&power * &x) * &lambda;
        sum = &sum + &power;
    }

    // group terms by the λ exponent block
    let mut groups: BTreeMap<Vec<u16>, MvPolynomial> = BTreeMap::new();
    for (exps, coeff) in sum.terms() {
        let (x_part, l_part) = exps.split_at(cc);
        groups
            .entry(l_part.to_vec())
            .or_insert_with(|| MvPolynomial::zero(config))
            .add_term(x_part.to_vec(), coeff.clone());
    }

    let mut rows = Vec::new();
    for total in 1..=n {
        for alpha in multi_indices(config, total) {
            let key: Vec<u16> = alpha.entries().iter().map(|&a| a as u16).collect();
            let group = groups
                .get(&key)
                .cloned()
                .unwrap_or_else(|| MvPolynomial::zero(config));
            let target = p_alpha(config, &alpha)?;
            let (matches, factor) = proportionality(&group, &target);
            rows.push(GeneratingMatchRow {
                alpha,
                matches,
                factor,
            });
        }
    }
    Ok(rows)
}

/// If `lhs = c · rhs` for a single rational `c != 0`, report `(true, c)`.
fn proportionality(lhs: &MvPolynomial, rhs: &MvPolynomial) -> (bool, Option<Scalar>) {
    if rhs.is_zero() || lhs.is_zero() {
        let both = rhs.is_zero() && lhs.is_zero();
        return (both, both.then(Scalar::one));
    }
    let (exps, coeff) = rhs.terms().next().expect("nonzero");
    let (blade, value) = coeff.terms().next().expect("canonical form");
    let lhs_value = match lhs.terms().find(|(e, _)| *e == exps) {
        Some((_, c)) => c.coefficient(*blade),
        None => return (false, None),
    };
    if lhs_value.is_zero() {
        return (false, None);
    }
    let factor = lhs_value / value;
    if lhs == &rhs.scale(&factor) {
        (true, Some(factor))
    } else {
        (false, None)
    }
}

/// Right-coefficient certificate for the expansion `p = Σ P_α C_α`.
#[derive(Debug, Clone)]
pub struct PBasisExpansion {
    config: AlgebraConfig,
    pub coefficients: BTreeMap<MultiIndex, Multivector>,
}

impl PBasisExpansion {
    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    /// Re-evaluate `Σ P_α C_α` exactly.
    pub fn evaluate(&self) -> Result<MvPolynomial> {
        let mut acc = MvPolynomial::zero(self.config);
        for (alpha, coeff) in &self.coefficients {
            acc = &acc + &p_alpha(self.config, alpha)?.right_mul(coeff);
        }
        Ok(acc)
    }
}

/// Expand a holomorphic Cliffordian polynomial as a right linear combination
/// of the `P_α`, `1 <= |α| <= deg(p) + 1`.
///
/// Each `P_α` is homogeneous of degree `|α| - 1`, so the problem splits by
/// degree: the degree-`s` part of `p` is matched against `{P_α : |α| = s+1}`
/// by exact Gaussian elimination over the rationals. Columns are ordered
/// lexicographically by `α` and then by blade, and free variables are set to
/// zero, so the certificate is deterministic. The family may be linearly
/// dependent; that only affects which certificate comes back, not whether
/// one exists. An inconsistent system would falsify the spanning property
/// and aborts loudly.
pub fn expand_in_p_basis(p: &MvPolynomial) -> Result<PBasisExpansion> {
    let config = p.config();
    if p.nvars() != config.coord_count() {
        return Err(Error::InvalidInput(
            "expansion expects a polynomial in the coordinates only".into(),
        ));
    }
    if !p.is_holomorphic_cliffordian() {
        let residual = p.laplacian(config.m()).dirac();
        return Err(Error::NotHolomorphic {
            residual: residual.to_string(),
        });
    }
    let mut coefficients = BTreeMap::new();
    for degree in 0..=p.total_degree() {
        let part = p.homogeneous_part(degree);
        if part.is_zero() {
            continue;
        }
        let alphas = multi_indices(config, degree as u32 + 1);
        solve_homogeneous(&part, degree, &alphas, &mut coefficients)?;
    }
    let expansion = PBasisExpansion {
        config,
        coefficients,
    };
    if &expansion.evaluate()? != p {
        return Err(Error::InconsistentExpansion);
    }
    Ok(expansion)
}

fn solve_homogeneous(
    part: &MvPolynomial,
    degree: usize,
    alphas: &[MultiIndex],
    out: &mut BTreeMap<MultiIndex, Multivector>,
) -> Result<()> {
    let config = part.config();
    let blade_count = config.blade_count();

    let mut row_of: BTreeMap<(Vec<u16>, u32), usize> = BTreeMap::new();
    let mut rows = 0usize;
    let mut row_key = |key: (Vec<u16>, u32), rows: &mut usize| -> usize {
        *row_of.entry(key).or_insert_with(|| {
            let r = *rows;
            *rows += 1;
            r
        })
    };

    let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(alphas.len() * blade_count);
    for alpha in alphas {
        let poly = p_alpha(config, alpha)?;
        debug_assert_eq!(poly.total_degree(), degree);
        for d in 0..blade_count {
            let unit = Multivector::from_blade(config, Blade::from_mask(d as u32), Scalar::one());
            let col_poly = poly.right_mul(&unit);
            let mut entries = Vec::new();
            for (exps, coeff) in col_poly.terms() {
                for (blade, c) in coeff.terms() {
                    let r = row_key((exps.clone(), blade.mask()), &mut rows);
                    entries.push((r, c.clone()));
                }
            }
            columns.push(entries);
        }
    }

    let mut rhs_entries = Vec::new();
    for (exps, coeff) in part.terms() {
        for (blade, c) in coeff.terms() {
            let r = row_key((exps.clone(), blade.mask()), &mut rows);
            rhs_entries.push((r, c.clone()));
        }
    }

    let ncols = columns.len();
    let mut matrix = vec![vec![Scalar::zero(); ncols + 1]; rows];
    for (c, entries) in columns.iter().enumerate() {
        for (r, v) in entries {
            matrix[*r][c] = v.clone();
        }
    }
    for (r, v) in rhs_entries {
        matrix[r][ncols] = v;
    }

    let solution = solve_rref(&mut matrix, ncols)?;

    for (ai, alpha) in alphas.iter().enumerate() {
        let mut coeff = Multivector::zero(config);
        for d in 0..blade_count {
            let v = &solution[ai * blade_count + d];
            if !v.is_zero() {
                coeff =
                    &coeff + &Multivector::from_blade(config, Blade::from_mask(d as u32), v.clone());
            }
        }
        if !coeff.is_zero() {
            out.insert(alpha.clone(), coeff);
        }
    }
    Ok(())
}

/// Reduced row echelon form in exact arithmetic: pivot columns in order,
/// first nonzero row below the frontier as pivot, free variables set to
/// zero. Errors when a zero row carries a nonzero right-hand side.
fn solve_rref(matrix: &mut [Vec<Scalar>], ncols: usize) -> Result<Vec<Scalar>> {
    let nrows = matrix.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut next_row = 0usize;
    for col in 0..ncols {
        if next_row == nrows {
            break;
        }
        let Some(pivot) = (next_row..nrows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(next_row, pivot);
        let inv = Scalar::one() / matrix[next_row][col].clone();
        for c in col..=ncols {
            matrix[next_row][c] = &matrix[next_row][c] * &inv;
        }
        for r in 0..nrows {
            if r != next_row && !matrix[r][col].is_zero() {
                let f = matrix[r][col].clone();
                for c in col..=ncols {
                    let delta = &matrix[next_row][c] * &f;
                    matrix[r][c] = &matrix[r][c] - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
    }
    for row in matrix.iter().skip(next_row) {
        if row[..ncols].iter().all(Scalar::is_zero) && !row[ncols].is_zero() {
            return Err(Error::InconsistentExpansion);
        }
    }
    let mut solution = vec![Scalar::zero(); ncols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            solution[col] = matrix[*r][ncols].clone();
        }
    }
    Ok(solution)
}

/// Number of `P_α` with `|α| = total` and the exact rank of their span as
/// vectors of (monomial, blade) coefficients. Spanning of the solution space
/// is verified elsewhere; independence is not assumed, it is measured.
pub fn p_family_rank(config: AlgebraConfig, total: u32) -> Result<(usize, usize)> {
    let alphas = multi_indices(config, total);
    let mut row_of: BTreeMap<(Vec<u16>, u32), usize> = BTreeMap::new();
    let mut rows = 0usize;
    let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(alphas.len());
    for alpha in &alphas {
        let poly = p_alpha(config, alpha)?;
        let mut entries = Vec::new();
        for (exps, coeff) in poly.terms() {
            for (blade, c) in coeff.terms() {
                let key = (exps.clone(), blade.mask());
                let r = *row_of.entry(key).or_insert_with(|| {
                    let r = rows;
                    rows += 1;
                    r
                });
                entries.push((r, c.clone()));
            }
        }
        columns.push(entries);
    }
    let ncols = columns.len();
    let mut matrix = vec![vec![Scalar::zero(); ncols + 1]; rows];
    for (c, entries) in columns.iter().enumerate() {
        for (r, v) in entries {
            matrix[*r][c] = v.clone();
        }
    }
    let rank = rref_rank(&mut matrix, ncols);
    Ok((alphas.len(), rank))
}

fn rref_rank(matrix: &mut [Vec<Scalar>], ncols: usize) -> usize {
    let nrows = matrix.len();
    let mut next_row = 0usize;
    for col in 0..ncols {
        if next_row == nrows {
            break;
        }
        let Some(pivot) = (next_row..nrows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(next_row, pivot);
        let inv = Scalar::one() / matrix[next_row][col].clone();
        for c in col..ncols {
            matrix[next_row][c] = &matrix[next_row][c] * &inv;
        }
        for r in 0..nrows {
            if r != next_row && !matrix[r][col].is_zero() {
                let f = matrix[r][col].clone();
                for c in col..ncols {
                    let delta = &matrix[next_row][c] * &f;
                    matrix[r][c] = &matrix[r][c] - &delta;
                }
            }
        }
        next_row += 1;
    }
    next_row
}

/// Truncated exponential series `Σ_{n<=N} (λx)^n / n!` for a constant
/// rational paravector `λ`.
pub fn exp_series(lambda: &Paravector, n: u32) -> MvPolynomial {
    let config = lambda.config();
    let x = MvPolynomial::identity(config);
    let lam_x = &MvPolynomial::constant(lambda.to_multivector()) * &x;
    let mut acc = MvPolynomial::scalar_constant(config, Scalar::one());
    let mut power = MvPolynomial::scalar_constant(config, Scalar::one());
    for k in 1..=n {
        power = &power * &lam_x;
        acc = &acc + &power.scale(&(Scalar::one() / Scalar::from_integer(factorial(k))));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::{integer, rational};
    use num_bigint::BigInt;

    fn cfg() -> AlgebraConfig {
        AlgebraConfig::new(1).unwrap()
    }

    fn mi(entries: [u32; 4]) -> MultiIndex {
        MultiIndex::new(entries.to_vec())
    }

    fn e(i: u32) -> Multivector {
        Multivector::unit(cfg(), i).unwrap()
    }

    #[test]
    fn worked_examples_alpha_two() {
        let x = MvPolynomial::identity(cfg());
        // P_(0,1,1,0) = e1 x e2 + e2 x e1
        let want = &x.left_mul(&e(1)).right_mul(&e(2)) + &x.left_mul(&e(2)).right_mul(&e(1));
        assert_eq!(p_alpha(cfg(), &mi([0, 1, 1, 0])).unwrap(), want);
        // P_(2,0,0,0) = e0 x e0 = x
        assert_eq!(p_alpha(cfg(), &mi([2, 0, 0, 0])).unwrap(), x);
    }

    #[test]
    fn singleton_alpha_gives_units() {
        for i in 0..4u32 {
            let mut a = [0u32; 4];
            a[i as usize] = 1;
            assert_eq!(p_alpha(cfg(), &mi(a)).unwrap(), MvPolynomial::constant(e(i)));
        }
    }

    #[test]
    fn empty_alpha_rejected() {
        assert!(matches!(
            p_alpha(cfg(), &mi([0, 0, 0, 0])),
            Err(Error::EmptyMultiIndex)
        ));
    }

    #[test]
    fn permutation_count_matches_enumeration() {
        for alpha in [[1, 2, 1, 0], [2, 2, 0, 0], [0, 1, 1, 1], [4, 0, 0, 0]] {
            let a = mi(alpha);
            let perms = multiset_permutations(a.entries());
            assert_eq!(BigInt::from(perms.len()), a.permutation_count());
            let mut dedup = perms.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), perms.len(), "permutations must be distinct");
        }
    }

    #[test]
    fn derivative_route_worked_examples() {
        // the three |α| = 2 mixed derivatives of x^3, with their constants
        let x3 = MvPolynomial::identity_power(cfg(), 3);
        let d12 = x3.partial(1).unwrap().partial(2).unwrap();
        assert_eq!(d12, p_alpha(cfg(), &mi([0, 1, 1, 0])).unwrap());
        let d01 = x3.partial(0).unwrap().partial(1).unwrap();
        assert_eq!(
            d01,
            p_alpha(cfg(), &mi([1, 1, 0, 0])).unwrap().scale(&integer(3))
        );
        let d00 = x3.partial(0).unwrap().partial(0).unwrap();
        assert_eq!(
            d00,
            p_alpha(cfg(), &mi([2, 0, 0, 0])).unwrap().scale(&integer(6))
        );
        for alpha in [[0, 1, 1, 0], [1, 1, 0, 0], [2, 0, 0, 0]] {
            let a = mi(alpha);
            assert_eq!(
                p_alpha_via_derivative(cfg(), &a).unwrap(),
                p_alpha(cfg(), &a).unwrap()
            );
        }
    }

    #[test]
    fn derivative_route_matches_for_multiplicity_free_vector_indices() {
        for total in 1..=4u32 {
            for alpha in multi_indices(cfg(), total) {
                if alpha.entries()[1..].iter().any(|&a| a > 1) {
                    continue;
                }
                assert_eq!(
                    p_alpha_via_derivative(cfg(), &alpha).unwrap(),
                    p_alpha(cfg(), &alpha).unwrap(),
                    "alpha = {alpha}"
                );
            }
        }
    }

    #[test]
    fn derivative_route_discrepancy_for_repeated_vector_index() {
        // ∂_1² x³ = 2 e1 x e1 - 4 x: when a vector index repeats, the
        // contraction terms e1 e1 = -1 survive instead of cancelling by
        // anticommutation, so the derivative route yields a combination and
        // not a multiple of P_(0,2,0,0). Frozen from the hand expansion of
        // ∂_1(x³) = e1 x² + x e1 x + x² e1.
        let got = p_alpha_via_derivative(cfg(), &mi([0, 2, 0, 0])).unwrap();
        let p020 = p_alpha(cfg(), &mi([0, 2, 0, 0])).unwrap();
        let p200 = p_alpha(cfg(), &mi([2, 0, 0, 0])).unwrap();
        let want = &p020.scale(&integer(2)) + &p200.scale(&integer(-4));
        assert_eq!(got, want);
        assert_ne!(got, p020);
    }

    #[test]
    fn p_alpha_left_and_right_holomorphic() {
        for total in 1..=4u32 {
            for alpha in multi_indices(cfg(), total) {
                let p = p_alpha(cfg(), &alpha).unwrap();
                assert_eq!(p.total_degree() as u32, total - 1);
                assert!(
                    p.laplacian(1).dirac().is_zero(),
                    "P_{alpha} not left holomorphic"
                );
                assert!(
                    p.laplacian(1).dirac_right().is_zero(),
                    "P_{alpha} not right holomorphic"
                );
            }
        }
    }

    #[test]
    fn p_vec_base_case_is_power() {
        for n in 0..=4u32 {
            assert_eq!(
                p_vec(cfg(), n, &[0, 0, 0]).unwrap(),
                MvPolynomial::identity_power(cfg(), n)
            );
        }
    }

    #[test]
    fn p_vec_recurrences_with_exact_factors() {
        for (n, va) in [
            (3u32, [1u32, 0, 0]),
            (4, [1, 1, 0]),
            (5, [0, 2, 0]),
            (2, [0, 0, 1]),
        ] {
            let total: u32 = va.iter().sum();
            let p = p_vec(cfg(), n, &va).unwrap();
            let d0 = p.partial(0).unwrap();
            let want0 = p_vec(cfg(), n - 1, &va)
                .unwrap()
                .scale(&integer(i64::from(n + total)));
            assert_eq!(d0, want0, "d0 recurrence at n={n}, va={va:?}");
            for k in 0..3usize {
                let dk = p.partial(k + 1).unwrap();
                let mut bumped = va;
                bumped[k] += 1;
                let want = p_vec(cfg(), n - 1, &bumped)
                    .unwrap()
                    .scale(&integer(i64::from(total + 1)));
                assert_eq!(dk, want, "dk recurrence at n={n}, va={va:?}, k={k}");
            }
        }
        // the factor-free statements hold where the factor is 1
        let p = p_vec(cfg(), 5, &[0, 0, 0]).unwrap();
        assert_eq!(
            p.partial(0).unwrap(),
            p_vec(cfg(), 4, &[0, 0, 0]).unwrap().scale(&integer(5))
        );
        assert_eq!(p.partial(1).unwrap(), p_vec(cfg(), 4, &[1, 0, 0]).unwrap());
    }

    #[test]
    fn p_vec_recovers_p_alpha_for_zero_alpha0() {
        // |α|! P^{|α|-1}_{→α} = P_α when α_0 = 0 and →α is multiplicity-free
        // (repeated vector indices inherit the derivative-route discrepancy).
        for alpha in [[0u32, 1, 1, 0], [0, 1, 0, 1], [0, 1, 1, 1]] {
            let a = mi(alpha);
            let total = a.total();
            let got = p_vec(cfg(), total - 1, &alpha[1..])
                .unwrap()
                .scale(&Scalar::from_integer(factorial(total)));
            assert_eq!(got, p_alpha(cfg(), &a).unwrap(), "alpha={a}");
        }
    }

    #[test]
    fn s_beta_base_case() {
        let s0 = s_beta(cfg(), &mi([0, 0, 0, 0])).unwrap();
        assert!(s0.eq_cross(&RadialRational::x_inverse(cfg())));
        assert_eq!(s0.rho_power(), 1);
    }

    #[test]
    fn s_beta_first_order() {
        // S_(1,0,0,0) = x^{-1} e_0 x^{-1}
        let s = s_beta(cfg(), &mi([1, 0, 0, 0])).unwrap();
        let inv = RadialRational::x_inverse(cfg());
        assert!(s.eq_cross(&inv.mul(&inv)));
        assert_eq!(s.rho_power(), 2);
    }

    #[test]
    fn s_beta_two_distinct_indices() {
        // S_(0,1,1,0) = x^{-1} e1 x^{-1} e2 x^{-1} + x^{-1} e2 x^{-1} e1 x^{-1}
        let s = s_beta(cfg(), &mi([0, 1, 1, 0])).unwrap();
        let inv = RadialRational::x_inverse(cfg());
        let t1 = inv.right_mul(&e(1)).mul(&inv).right_mul(&e(2)).mul(&inv);
        let t2 = inv.right_mul(&e(2)).mul(&inv).right_mul(&e(1)).mul(&inv);
        assert!(s.eq_cross(&t1.add(&t2)));
        assert_eq!(s.rho_power(), 3);
    }

    #[test]
    fn s_beta_left_right_holomorphic() {
        for total in 0..=2u32 {
            for beta in multi_indices(cfg(), total) {
                let s = s_beta(cfg(), &beta).unwrap();
                assert_eq!(s.rho_power(), total + 1);
                assert!(
                    s.laplacian(1).dirac().is_identically_zero(),
                    "S_{beta} not left holomorphic"
                );
                let right = right_dirac_radial(&s.laplacian(1));
                assert!(right.is_identically_zero(), "S_{beta} not right holomorphic");
            }
        }
    }

    fn right_dirac_radial(r: &RadialRational) -> RadialRational {
        let config = r.config();
        let mut out = r.partial(0).unwrap();
        for i in 1..config.coord_count() {
            let unit = Multivector::unit(config, i as u32).unwrap();
            out = out.add(&r.partial(i).unwrap().right_mul(&unit));
        }
        out
    }

    #[test]
    fn generating_function_rows_all_match_with_unit_factor() {
        let rows = generating_series_check(cfg(), 3).unwrap();
        assert_eq!(
            rows.len(),
            (1..=3u32)
                .map(|t| multi_indices(cfg(), t).len())
                .sum::<usize>()
        );
        for row in &rows {
            assert!(row.matches, "mismatch at {}", row.alpha);
            assert_eq!(row.factor, Some(Scalar::one()), "factor at {}", row.alpha);
        }
    }

    #[test]
    fn expansion_of_identity() {
        let x = MvPolynomial::identity(cfg());
        let exp = expand_in_p_basis(&x).unwrap();
        assert_eq!(&exp.evaluate().unwrap(), &x);
    }

    #[test]
    fn expansion_of_cube_reevaluates() {
        let x3 = MvPolynomial::identity_power(cfg(), 3);
        let exp = expand_in_p_basis(&x3).unwrap();
        for alpha in exp.coefficients.keys() {
            assert!(alpha.total() <= 4);
        }
        assert_eq!(&exp.evaluate().unwrap(), &x3);
    }

    #[test]
    fn expansion_rejects_non_holomorphic() {
        let c = cfg();
        let mut exps = vec![0u16; 4];
        exps[0] = 3;
        let p = MvPolynomial::monomial(c, exps, Multivector::scalar(c, integer(1)));
        assert!(matches!(
            expand_in_p_basis(&p),
            Err(Error::NotHolomorphic { .. })
        ));
    }

    #[test]
    fn expansion_of_low_degree_polynomial() {
        // degree <= 2m is always holomorphic Cliffordian and must expand
        let c = cfg();
        let mut p = MvPolynomial::zero(c);
        let mut exps = vec![0u16; 4];
        exps[1] = 1;
        exps[3] = 1;
        p.add_term(
            exps,
            Multivector::from_blade(
                c,
                Blade::from_generators(&c, &[1, 2]).unwrap(),
                rational(7, 2),
            ),
        );
        let mut exps = vec![0u16; 4];
        exps[2] = 2;
        p.add_term(exps, Multivector::unit(c, 3).unwrap());
        assert!(p.is_holomorphic_cliffordian());
        let exp = expand_in_p_basis(&p).unwrap();
        assert_eq!(&exp.evaluate().unwrap(), &p);
    }

    #[test]
    fn exp_series_small_cases() {
        let c = cfg();
        let zero = Paravector::zero(c);
        assert_eq!(
            exp_series(&zero, 0),
            MvPolynomial::scalar_constant(c, integer(1))
        );
        let mut coords = vec![integer(0); 4];
        coords[0] = rational(1, 2);
        let lam = Paravector::new(c, coords).unwrap();
        let got = exp_series(&lam, 1);
        let want = &MvPolynomial::scalar_constant(c, integer(1))
            + &MvPolynomial::identity(c).scale(&rational(1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn exp_series_is_holomorphic_for_scalar_lambda() {
        let c = cfg();
        let mut coords = vec![integer(0); 4];
        coords[0] = rational(-2, 3);
        let lam = Paravector::new(c, coords).unwrap();
        assert!(exp_series(&lam, 6).is_holomorphic_cliffordian());
    }

    #[test]
    fn exp_series_accepts_non_scalar_lambda() {
        // non-scalar λ is computed but carries no termwise holomorphy claim
        let c = cfg();
        let lam = Paravector::new(c, vec![integer(1), integer(1), integer(0), integer(0)])
            .unwrap();
        let series = exp_series(&lam, 4);
        assert_eq!(series.total_degree(), 4);
        assert!(!series.is_zero());
    }

    #[test]
    fn multi_index_enumeration_is_stars_and_bars() {
        for s in 1..=4u32 {
            let n = multi_indices(cfg(), s).len();
            assert_eq!(BigInt::from(n), binomial(s + 3, 3));
        }
    }

    #[test]
    fn family_rank_is_measured_not_assumed() {
        // The family is genuinely dependent at |α| = 4: 35 members, rank 34.
        // One relation among the P_α exists there, which is why the
        // expansion solver treats dependence as normal (free variables set
        // to zero) and why certificates are not unique.
        let mut observed = Vec::new();
        for total in 1..=4u32 {
            let (count, rank) = p_family_rank(cfg(), total).unwrap();
            assert!(rank <= count);
            observed.push((total, count, rank));
        }
        assert_eq!(
            observed,
            vec![(1, 4, 4), (2, 10, 10), (3, 20, 20), (4, 35, 34)]
        );
    }
}
