//! Truncated formal power series in the monomial symmetric basis.
//!
//! Two shapes are used: [`SymmetricSeries`], symmetric in every variable,
//! with coefficients indexed by partitions; and [`AxialSeries`], symmetric
//! in every variable except one distinguished axis, with coefficients
//! `c[d, nu]` indexed by the axis degree `d` and a partition `nu` over the
//! remaining variables.
//!
//! A series carries a variable count that is either `Finite(n)` or the
//! `Limit` marker. Limit mode stores the per-coefficient limits of a family
//! of finite series directly; it is a distinct variant rather than
//! arithmetic with a symbolic `n`.
//!
//! Everything is truncated: a series with degree cap `D` promises correct
//! coefficients for all keys of total degree at most `D`, with absent keys
//! meaning zero. The transfer operator reads one degree above its target,
//! so each application lowers the usable cap by one.

mod spec;

pub use spec::CumulantSpec;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::combinatorics::partition::{partitions_up_to_weight, split_pairs, Partition};
use crate::error::{Error, Result};
use crate::rational::{ratio_int, Ratio};

/// Number of variables a series lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarCount {
    Finite(usize),
    Limit,
}

impl VarCount {
    fn describe(&self) -> String {
        match self {
            VarCount::Finite(n) => format!("{n} variables"),
            VarCount::Limit => "limit".to_string(),
        }
    }

    /// Maximum partition length representable over the non-axis variables.
    fn axial_len_bound(&self) -> Option<usize> {
        match self {
            VarCount::Finite(n) => Some(n.saturating_sub(1)),
            VarCount::Limit => None,
        }
    }

    fn symmetric_len_bound(&self) -> Option<usize> {
        match self {
            VarCount::Finite(n) => Some(*n),
            VarCount::Limit => None,
        }
    }
}

/// Formal series symmetric in all variables, truncated at a degree cap.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSeries {
    vars: VarCount,
    cap: usize,
    coeffs: BTreeMap<Partition, Ratio>,
}

impl SymmetricSeries {
    pub fn new(vars: VarCount, cap: usize) -> Self {
        SymmetricSeries {
            vars,
            cap,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> VarCount {
        self.vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Set the coefficient of the monomial symmetric function for `nu`.
    /// Keys whose length exceeds the variable count denote the zero
    /// function and are dropped; keys above the degree cap are an error.
    pub fn set(&mut self, nu: Partition, value: Ratio) -> Result<()> {
        if nu.weight() > self.cap {
            return Err(Error::Truncation {
                needed: nu.weight(),
                cap: self.cap,
            });
        }
        if let Some(bound) = self.vars.symmetric_len_bound() {
            if nu.length() > bound {
                return Ok(());
            }
        }
        if value.is_zero() {
            self.coeffs.remove(&nu);
        } else {
            self.coeffs.insert(nu, value);
        }
        Ok(())
    }

    pub fn coeff(&self, nu: &Partition) -> Ratio {
        self.coeffs.get(nu).cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn constant_term(&self) -> Ratio {
        self.coeff(&Partition::empty())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Ratio)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drop every key above the new, smaller cap.
    pub fn truncated(&self, cap: usize) -> SymmetricSeries {
        let mut out = SymmetricSeries::new(self.vars, cap);
        for (nu, c) in &self.coeffs {
            if nu.weight() <= cap {
                out.coeffs.insert(nu.clone(), c.clone());
            }
        }
        out
    }

    /// View along a distinguished axis: the coefficient of `x_axis^d` times
    /// the monomial type `nu` in the remaining variables is the symmetric
    /// coefficient of the joined partition `nu + (d)`.
    pub fn to_axial(&self, axis: usize) -> AxialSeries {
        let mut out = AxialSeries::new(axis, self.vars, self.cap);
        for (lambda, c) in &self.coeffs {
            out.coeffs.insert((0, lambda.clone()), c.clone());
            for p in lambda.distinct_parts() {
                let nu = lambda.without_part(p).expect("part present");
                out.coeffs.insert((p as usize, nu), c.clone());
            }
        }
        out
    }
}

/// Formal series symmetric outside one distinguished axis.
#[derive(Debug, Clone, PartialEq)]
pub struct AxialSeries {
    axis: usize,
    vars: VarCount,
    cap: usize,
    coeffs: BTreeMap<(usize, Partition), Ratio>,
}

impl AxialSeries {
    pub fn new(axis: usize, vars: VarCount, cap: usize) -> Self {
        if let VarCount::Finite(n) = vars {
            assert!(axis < n, "axis {axis} out of range for {n} variables");
        }
        AxialSeries {
            axis,
            vars,
            cap,
            coeffs: BTreeMap::new(),
        }
    }

    /// The multiplicative unit: constant coefficient one.
    pub fn unit(axis: usize, vars: VarCount, cap: usize) -> Self {
        let mut s = AxialSeries::new(axis, vars, cap);
        s.coeffs.insert((0, Partition::empty()), ratio_int(1));
        s
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn vars(&self) -> VarCount {
        self.vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Set `c[d, nu]`. Keys longer than the remaining variables denote the
    /// zero function and are dropped; keys above the cap are an error.
    pub fn set(&mut self, d: usize, nu: Partition, value: Ratio) -> Result<()> {
        if d + nu.weight() > self.cap {
            return Err(Error::Truncation {
                needed: d + nu.weight(),
                cap: self.cap,
            });
        }
        if let Some(bound) = self.vars.axial_len_bound() {
            if nu.length() > bound {
                return Ok(());
            }
        }
        if value.is_zero() {
            self.coeffs.remove(&(d, nu));
        } else {
            self.coeffs.insert((d, nu), value);
        }
        Ok(())
    }

    pub fn coeff(&self, d: usize, nu: &Partition) -> Ratio {
        self.coeffs
            .get(&(d, nu.clone()))
            .cloned()
            .unwrap_or_else(Ratio::zero)
    }

    pub fn constant_term(&self) -> Ratio {
        self.coeff(0, &Partition::empty())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, Partition), &Ratio)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncated(&self, cap: usize) -> AxialSeries {
        let mut out = AxialSeries::new(self.axis, self.vars, cap);
        for ((d, nu), c) in &self.coeffs {
            if d + nu.weight() <= cap {
                out.coeffs.insert((*d, nu.clone()), c.clone());
            }
        }
        out
    }

    /// Restriction at `x_axis = 0`: the `d = 0` slice, reinterpreted as a
    /// fully symmetric series over the remaining variables.
    pub fn restrict(&self) -> SymmetricSeries {
        let vars = match self.vars {
            VarCount::Finite(n) => VarCount::Finite(n - 1),
            VarCount::Limit => VarCount::Limit,
        };
        let mut out = SymmetricSeries::new(vars, self.cap);
        for ((d, nu), c) in &self.coeffs {
            if *d == 0 {
                out.coeffs.insert(nu.clone(), c.clone());
            }
        }
        out
    }

    fn check_compatible(&self, other: &AxialSeries) -> Result<()> {
        if self.axis != other.axis {
            return Err(Error::AxisMismatch(self.axis, other.axis));
        }
        if self.vars != other.vars {
            return Err(Error::VarCountMismatch(
                self.vars.describe(),
                other.vars.describe(),
            ));
        }
        Ok(())
    }
}

fn axial_output_keys(vars: VarCount, cap: usize) -> Vec<(usize, Partition)> {
    let mut keys = Vec::new();
    for d in 0..=cap {
        for nu in partitions_up_to_weight(cap - d) {
            if let Some(bound) = vars.axial_len_bound() {
                if nu.length() > bound {
                    continue;
                }
            }
            keys.push((d, nu));
        }
    }
    keys
}

/// Product of two axial series over the same axis, truncated at `cap`:
/// the coefficient of `(d, nu)` convolves axis degrees and componentwise
/// splittings of `nu`.
pub fn axial_mul(f: &AxialSeries, g: &AxialSeries, cap: usize) -> Result<AxialSeries> {
    f.check_compatible(g)?;
    if f.cap < cap || g.cap < cap {
        return Err(Error::Truncation {
            needed: cap,
            cap: f.cap.min(g.cap),
        });
    }
    let mut out = AxialSeries::new(f.axis, f.vars, cap);
    for (d, nu) in axial_output_keys(f.vars, cap) {
        let mut total = Ratio::zero();
        for pair in split_pairs(&nu) {
            let (p1, p2) = pair.partitions();
            for a in 0..=d {
                let cf = f.coeff(a, &p1);
                if cf.is_zero() {
                    continue;
                }
                let cg = g.coeff(d - a, &p2);
                if cg.is_zero() {
                    continue;
                }
                total += cf * cg;
            }
        }
        if !total.is_zero() {
            out.coeffs.insert((d, nu), total);
        }
    }
    Ok(out)
}

/// One application of the transfer operator: shift the axis degree down,
/// subtract the change contribution, and add the product with `f`. In
/// finite mode the exact `1/n` correction is included; in limit mode it is
/// dropped. The result is truncated at `cap`, which must be at least one
/// below the cap of `g`.
pub fn apply_transfer(
    f: &AxialSeries,
    g: &AxialSeries,
    theta: &Ratio,
    cap: usize,
) -> Result<AxialSeries> {
    f.check_compatible(g)?;
    if g.cap < cap + 1 {
        return Err(Error::Truncation {
            needed: cap + 1,
            cap: g.cap,
        });
    }
    if f.cap < cap {
        return Err(Error::Truncation { needed: cap, cap: f.cap });
    }
    let mut out = AxialSeries::new(f.axis, f.vars, cap);
    for (d, nu) in axial_output_keys(f.vars, cap) {
        let shifted = g.coeff(d + 1, &nu);
        let joined = g.coeff(0, &nu.with_part(d as u32 + 1));
        let mut total = theta.clone() * &shifted - theta.clone() * &joined;
        for pair in split_pairs(&nu) {
            let (p1, p2) = pair.partitions();
            for a in 0..=d {
                let cf = f.coeff(a, &p1);
                if cf.is_zero() {
                    continue;
                }
                let cg = g.coeff(d - a, &p2);
                if cg.is_zero() {
                    continue;
                }
                total += cf * cg;
            }
        }
        if let VarCount::Finite(n) = f.vars {
            let n_ratio = ratio_int(n as i64);
            let correction = -shifted + ratio_int(nu.length() as i64 + 1) * &joined;
            total += theta.clone() / n_ratio * correction;
        }
        if !total.is_zero() {
            out.coeffs.insert((d, nu), total);
        }
    }
    Ok(out)
}

/// `k` transfer applications followed by restriction at the axis: the
/// `d = 0` slice over the remaining variables, truncated at `cap`. `g` must
/// carry `k` degrees of headroom above `cap`.
pub fn transfer_power_restrict(
    f: &AxialSeries,
    g: &AxialSeries,
    k: usize,
    theta: &Ratio,
    cap: usize,
) -> Result<SymmetricSeries> {
    let mut acc = g.clone();
    for step in 1..=k {
        acc = apply_transfer(f, &acc, theta, cap + k - step)?;
    }
    Ok(acc.restrict())
}

/// Axial expansion of `scale * d/dx_axis F` for a symmetric series `F`:
/// the coefficient of `(d, nu)` is `scale * (d+1) * c_F[nu + (d+1)]`.
pub fn axial_from_symmetric_derivative(
    f: &SymmetricSeries,
    axis: usize,
    scale: &Ratio,
) -> AxialSeries {
    let cap = f.cap.saturating_sub(1);
    let mut out = AxialSeries::new(axis, f.vars, cap);
    for (lambda, c) in f.iter() {
        for p in lambda.distinct_parts() {
            let nu = lambda.without_part(p).expect("part present");
            let d = p as usize - 1;
            let add = scale.clone() * ratio_int(p as i64) * c;
            *out.coeffs.entry((d, nu)).or_insert_with(Ratio::zero) += add;
        }
    }
    out.coeffs.retain(|_, v| !v.is_zero());
    out
}

/// The limiting sequence of the scaled axis derivative determined by a
/// cumulant spec: `c[d, nu] = (d+1) (l(nu)+1) c_{nu+(d+1)} / (|nu|+d+1)`.
pub fn scaled_derivative_limit(spec: &CumulantSpec, cap: usize) -> AxialSeries {
    let mut out = AxialSeries::new(0, VarCount::Limit, cap);
    for (lambda, c) in spec.entries() {
        if c.is_zero() || lambda.weight() == 0 {
            continue;
        }
        for p in lambda.distinct_parts() {
            let nu = lambda.without_part(p).expect("part present");
            let d = p as usize - 1;
            if d + nu.weight() > cap {
                continue;
            }
            let value = ratio_int(p as i64) * ratio_int(nu.length() as i64 + 1) * c
                / ratio_int(lambda.weight() as i64);
            let entry = out.coeffs.entry((d, nu)).or_insert_with(Ratio::zero);
            *entry += value;
        }
    }
    out.coeffs.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    pub(crate) fn random_axial(
        rng: &mut ChaCha8Rng,
        vars: VarCount,
        support: usize,
        cap: usize,
    ) -> AxialSeries {
        let mut s = AxialSeries::new(0, vars, cap);
        for (d, nu) in axial_output_keys(vars, support.min(cap)) {
            if rng.gen_bool(0.6) {
                let v = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9));
                s.set(d, nu, v).unwrap();
            }
        }
        s
    }

    #[test]
    fn axial_mul_unit_and_powers() {
        let unit = AxialSeries::unit(0, VarCount::Limit, 6);
        let prod = axial_mul(&unit, &unit, 6).unwrap();
        assert_eq!(prod, unit);

        // x * x = x^2 along the axis.
        let mut x = AxialSeries::new(0, VarCount::Limit, 6);
        x.set(1, Partition::empty(), ratio_int(1)).unwrap();
        let sq = axial_mul(&x, &x, 6).unwrap();
        assert_eq!(sq.coeff(2, &Partition::empty()), ratio_int(1));
        assert_eq!(sq.iter().count(), 1);

        // (sum of the other variables)^2 = M_(2) + 2 M_(1,1).
        let mut e1 = AxialSeries::new(0, VarCount::Limit, 6);
        e1.set(0, pt(&[1]), ratio_int(1)).unwrap();
        let sq = axial_mul(&e1, &e1, 6).unwrap();
        assert_eq!(sq.coeff(0, &pt(&[2])), ratio_int(1));
        assert_eq!(sq.coeff(0, &pt(&[1, 1])), ratio_int(2));
        assert_eq!(sq.iter().count(), 2);
    }

    #[test]
    fn transfer_on_pure_axis_degree() {
        // g = x_axis, f = 0: the constant picks up theta, with the exact
        // (n-1)/n factor in finite mode.
        let theta = ratio(1, 2);
        for (vars, expected) in [
            (VarCount::Finite(4), ratio(1, 2) * ratio(3, 4)),
            (VarCount::Limit, ratio(1, 2)),
        ] {
            let f = AxialSeries::new(0, vars, 3);
            let mut g = AxialSeries::new(0, vars, 4);
            g.set(1, Partition::empty(), ratio_int(1)).unwrap();
            let out = apply_transfer(&f, &g, &theta, 3).unwrap();
            assert_eq!(out.constant_term(), expected);
        }
    }

    #[test]
    fn transfer_zero_inputs() {
        let f = AxialSeries::new(0, VarCount::Limit, 3);
        let g = AxialSeries::new(0, VarCount::Limit, 4);
        let out = apply_transfer(&f, &g, &ratio_int(1), 3).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn transfer_requires_headroom() {
        let f = AxialSeries::new(0, VarCount::Limit, 4);
        let g = AxialSeries::new(0, VarCount::Limit, 4);
        assert!(matches!(
            apply_transfer(&f, &g, &ratio_int(1), 4),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn transfer_axis_mismatch_rejected() {
        let f = AxialSeries::new(0, VarCount::Limit, 4);
        let g = AxialSeries::new(1, VarCount::Limit, 4);
        assert!(matches!(
            apply_transfer(&f, &g, &ratio_int(1), 3),
            Err(Error::AxisMismatch(0, 1))
        ));
        let g = AxialSeries::new(0, VarCount::Finite(3), 4);
        assert!(apply_transfer(&f, &g, &ratio_int(1), 3).is_err());
    }

    #[test]
    fn limit_mode_is_finite_mode_without_correction() {
        // Over enough variables that no key is length-limited, the finite
        // result minus the explicit correction equals the limit result.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let theta = ratio(2, 3);
        for _ in 0..10 {
            let n = 12;
            let lf = random_axial(&mut rng, VarCount::Limit, 3, 3);
            let lg = random_axial(&mut rng, VarCount::Limit, 4, 4);
            let mut ff = AxialSeries::new(0, VarCount::Finite(n), 3);
            for ((d, nu), c) in lf.iter() {
                ff.set(*d, nu.clone(), c.clone()).unwrap();
            }
            let mut fg = AxialSeries::new(0, VarCount::Finite(n), 4);
            for ((d, nu), c) in lg.iter() {
                fg.set(*d, nu.clone(), c.clone()).unwrap();
            }

            let limit_out = apply_transfer(&lf, &lg, &theta, 3).unwrap();
            let finite_out = apply_transfer(&ff, &fg, &theta, 3).unwrap();

            for (d, nu) in axial_output_keys(VarCount::Limit, 3) {
                let correction = theta.clone() / ratio_int(n as i64)
                    * (-fg.coeff(d + 1, &nu)
                        + ratio_int(nu.length() as i64 + 1)
                            * fg.coeff(0, &nu.with_part(d as u32 + 1)));
                assert_eq!(
                    finite_out.coeff(d, &nu) - correction,
                    limit_out.coeff(d, &nu),
                    "key ({d}, {nu})"
                );
            }
        }
    }

    #[test]
    fn truncation_monotonicity() {
        // Computing with a larger cap and truncating equals computing with
        // the smaller cap directly.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..10 {
            let f = random_axial(&mut rng, VarCount::Limit, 4, 8);
            let g = random_axial(&mut rng, VarCount::Limit, 4, 8);
            let theta = ratio(rng.gen_range(1..=5), rng.gen_range(1..=5));

            let wide = apply_transfer(&f, &g, &theta, 5).unwrap();
            let narrow = apply_transfer(&f, &g, &theta, 3).unwrap();
            assert_eq!(wide.truncated(3), narrow);

            let wide = axial_mul(&f, &g, 6).unwrap();
            let narrow = axial_mul(&f, &g, 2).unwrap();
            assert_eq!(wide.truncated(2), narrow);
        }
    }

    #[test]
    fn derivative_view_examples() {
        let mut f = SymmetricSeries::new(VarCount::Limit, 4);
        f.set(pt(&[2]), ratio_int(1)).unwrap();
        let ax = axial_from_symmetric_derivative(&f, 0, &ratio_int(1));
        assert_eq!(ax.coeff(1, &Partition::empty()), ratio_int(2));
        assert_eq!(ax.iter().count(), 1);

        let zero = SymmetricSeries::new(VarCount::Limit, 4);
        assert!(axial_from_symmetric_derivative(&zero, 0, &ratio_int(1)).is_zero());

        let mut f = SymmetricSeries::new(VarCount::Limit, 4);
        f.set(pt(&[2, 1]), ratio_int(1)).unwrap();
        let ax = axial_from_symmetric_derivative(&f, 0, &ratio_int(1));
        assert_eq!(ax.coeff(1, &pt(&[1])), ratio_int(2));
        assert_eq!(ax.coeff(0, &pt(&[2])), ratio_int(1));
        assert_eq!(ax.iter().count(), 2);
    }

    #[test]
    fn scaled_derivative_limit_examples() {
        let theta = ratio(1, 3);
        let spec = CumulantSpec::new(
            theta.clone(),
            vec![(pt(&[2]), ratio_int(3))], // 1/theta with theta = 1/3
        )
        .unwrap();
        let ax = scaled_derivative_limit(&spec, 4);
        assert_eq!(ax.coeff(1, &Partition::empty()), ratio_int(3));
        assert_eq!(ax.iter().count(), 1);

        let spec = CumulantSpec::new(ratio_int(1), vec![(pt(&[1]), ratio(5, 7))]).unwrap();
        let ax = scaled_derivative_limit(&spec, 4);
        assert_eq!(ax.coeff(0, &Partition::empty()), ratio(5, 7));

        let empty = CumulantSpec::new(ratio_int(1), vec![]).unwrap();
        assert!(scaled_derivative_limit(&empty, 4).is_zero());
    }

    #[test]
    fn restrict_and_reaxialize_round_trip_symmetric() {
        // A symmetric series viewed axially and restricted comes back as
        // itself over one fewer variable.
        let mut f = SymmetricSeries::new(VarCount::Finite(5), 4);
        f.set(pt(&[2, 1]), ratio(3, 2)).unwrap();
        f.set(pt(&[1]), ratio_int(-2)).unwrap();
        let ax = f.to_axial(0);
        let back = ax.restrict();
        assert_eq!(back.coeff(&pt(&[2, 1])), ratio(3, 2));
        assert_eq!(back.coeff(&pt(&[1])), ratio_int(-2));
        assert_eq!(back.vars(), VarCount::Finite(4));
    }
}
