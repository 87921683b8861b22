use std::collections::BTreeMap;

use crate::error::Result;
use crate::series::{Rational, SymSeries, TruncationProfile};
use crate::symfun::{partitions_up_to, schur_p, Partition};

/// Truncated level-`N` semi-infinite wedge in the basis `v_lambda^{[N]}`,
/// i.e. `z^{a_1} ^ z^{a_2} ^ ...` with `a_j = lambda_j - j + N`.
/// Coefficients are p-free series (rationals in `beta`, graded by `q1`,
/// `q2`); only `|lambda| <= cutoff` is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeState {
    level: i32,
    cutoff: u32,
    profile: TruncationProfile,
    coeffs: BTreeMap<Partition, SymSeries>,
}

/// Which fermion to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fermion {
    /// Wedge `z^a` in front.
    Theta,
    /// Contract `z^a` out of slot `j` with sign `(-1)^{j-1}`.
    ThetaDagger,
}

impl WedgeState {
    pub fn zero(level: i32, cutoff: u32, profile: TruncationProfile) -> Self {
        WedgeState {
            level,
            cutoff,
            profile,
            coeffs: BTreeMap::new(),
        }
    }

    /// The vacuum `|N>`.
    pub fn vacuum(level: i32, cutoff: u32, profile: TruncationProfile) -> Self {
        Self::basis(&Partition::empty(), level, cutoff, profile)
    }

    pub fn basis(lambda: &Partition, level: i32, cutoff: u32, profile: TruncationProfile) -> Self {
        let mut s = Self::zero(level, cutoff, profile);
        s.add(lambda.clone(), &SymSeries::one(profile));
        s
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn profile(&self) -> &TruncationProfile {
        &self.profile
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &SymSeries)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> SymSeries {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| SymSeries::zero(self.profile))
    }

    /// Adds `c * v_lambda`; dropped beyond the cutoff.
    pub fn add(&mut self, lambda: Partition, c: &SymSeries) {
        if lambda.weight() > self.cutoff || c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&lambda) {
            Some(prev) => prev + c,
            None => c.reprofile(self.profile),
        };
        if sum.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, sum);
        }
    }

    pub fn plus(&self, other: &WedgeState) -> WedgeState {
        assert_eq!(self.level, other.level, "levels differ");
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add(l.clone(), c);
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> WedgeState {
        let mut out = WedgeState::zero(self.level, self.cutoff, self.profile);
        for (l, c) in &self.coeffs {
            out.add(l.clone(), &c.scale(r));
        }
        out
    }

    pub fn neg(&self) -> WedgeState {
        self.scale(&Rational::from_integer((-1).into()))
    }

    /// Same state with a different cutoff (dropping terms if it shrinks).
    pub fn with_cutoff(&self, cutoff: u32) -> WedgeState {
        let mut out = WedgeState::zero(self.level, cutoff, self.profile);
        for (l, c) in &self.coeffs {
            out.add(l.clone(), c);
        }
        out
    }
}

/// Exponents `a_1 > ... > a_len` of `v_lambda^{[level]}`.
pub fn exponents(lambda: &Partition, level: i32, len: usize) -> Vec<i32> {
    (1..=len)
        .map(|j| lambda.part(j) as i32 - j as i32 + level)
        .collect()
}

/// Brings a prefix `b_1, ..., b_L` followed by the tail `level - j` (`j > L`)
/// into basis form. Returns the sign and partition, or `None` if the
/// wedge vanishes.
pub fn canonicalize(prefix: &[i32], level: i32) -> Option<(i32, Partition)> {
    let len = prefix.len() as i32;
    let mut v = prefix.to_vec();
    if v.iter().any(|&b| b <= level - len - 1) {
        return None;
    }
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] < v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts: Vec<u32> = v
        .iter()
        .enumerate()
        .map(|(j, &b)| (b + j as i32 + 1 - level) as u32)
        .filter(|&p| p > 0)
        .collect();
    Some((sign, Partition::new(parts).expect("descending exponents give a partition")))
}

/// `theta_a` or `theta^dagger_a`; the level moves by `+1` or `-1`.
pub fn fermion_apply(state: &WedgeState, kind: Fermion, a: i32) -> WedgeState {
    let n = state.level;
    let new_level = match kind {
        Fermion::Theta => n + 1,
        Fermion::ThetaDagger => n - 1,
    };
    let mut out = WedgeState::zero(new_level, state.cutoff, state.profile);
    for (lambda, c) in &state.coeffs {
        let len = lambda.len().max((n - a).max(0) as usize) + 1;
        let exps = exponents(lambda, n, len);
        let result = match kind {
            Fermion::Theta => {
                let mut prefix = vec![a];
                prefix.extend(&exps);
                canonicalize(&prefix, new_level)
            }
            Fermion::ThetaDagger => match exps.iter().position(|&e| e == a) {
                None => None,
                Some(pos) => {
                    let mut prefix = exps.clone();
                    prefix.remove(pos);
                    canonicalize(&prefix, new_level).map(|(s, l)| (if pos % 2 == 0 { s } else { -s }, l))
                }
            },
        };
        if let Some((sign, mu)) = result {
            out.add(mu, &c.scale(&Rational::from_integer(sign.into())));
        }
    }
    out
}

/// `alpha_n`, acting by lowering one exponent by `n` summed over slots.
pub fn alpha_apply(state: &WedgeState, n: i32) -> WedgeState {
    assert_ne!(n, 0, "alpha_0 is not used");
    let level = state.level;
    let mut out = WedgeState::zero(level, state.cutoff, state.profile);
    for (lambda, c) in &state.coeffs {
        let len = lambda.len() + n.unsigned_abs() as usize + 1;
        let exps = exponents(lambda, level, len);
        for j in 0..len {
            let mut prefix = exps.clone();
            prefix[j] -= n;
            if let Some((sign, mu)) = canonicalize(&prefix, level) {
                out.add(mu, &c.scale(&Rational::from_integer(sign.into())));
            }
        }
    }
    out
}

/// `alpha_n = sum_i theta_i theta^dagger_{i+n}`, summed over the finitely
/// many `i` that can contribute.
pub fn alpha_apply_fermionic(state: &WedgeState, n: i32) -> WedgeState {
    assert_ne!(n, 0, "alpha_0 is not used");
    let level = state.level;
    let reach = state.coeffs.keys().map(|l| l.len()).max().unwrap_or(0) as i32 + n.abs() + 1;
    let top = state
        .coeffs
        .keys()
        .map(|l| l.part(1) as i32 - 1 + level)
        .max()
        .unwrap_or(level - 1);
    let wide = state.with_cutoff(state.cutoff + 2 * (reach as u32 + 2) + top.unsigned_abs());
    let mut out = WedgeState::zero(level, wide.cutoff, state.profile);
    for e in (level - reach - 1)..=(top + n.abs()) {
        let removed = fermion_apply(&wide, Fermion::ThetaDagger, e);
        if removed.is_zero() {
            continue;
        }
        out = out.plus(&fermion_apply(&removed, Fermion::Theta, e - n));
    }
    out.with_cutoff(state.cutoff)
}

/// Boson-fermion map `Psi_N`, Schur route: `sum c_lambda s_lambda`.
pub fn boson_fermion(state: &WedgeState) -> SymSeries {
    let mut out = SymSeries::zero(state.profile);
    for (lambda, c) in &state.coeffs {
        if lambda.weight() > state.profile.max_p_weight {
            continue;
        }
        out = &out + &c.checked_mul(&schur_p(lambda, state.profile)).expect("same profile");
    }
    out
}

/// Boson-fermion map through `<N| e^{Gamma(t)}`: the coefficient of `p_mu`
/// is `<N| alpha_mu u> / z_mu`.
pub fn boson_fermion_vertex(state: &WedgeState) -> Result<SymSeries> {
    let profile = state.profile;
    let mut out = SymSeries::zero(profile);
    let top = profile.max_p_weight.min(state.cutoff);
    for mu in partitions_up_to(top) {
        let mut v = state.clone();
        for &part in mu.parts() {
            v = alpha_apply(&v, part as i32);
            if v.is_zero() {
                break;
            }
        }
        let c = v.coeff(&Partition::empty());
        if c.is_zero() {
            continue;
        }
        let z = Rational::from_integer(mu.z());
        out = out.checked_add(&c.scale(&z.recip()).times_p(&mu))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr() -> TruncationProfile {
        TruncationProfile::closed(6, 0)
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn all_basis(level: i32, w: u32) -> Vec<WedgeState> {
        partitions_up_to(w)
            .iter()
            .map(|l| WedgeState::basis(l, level, 12, pr()))
            .collect()
    }

    #[test]
    fn vacuum_moves() {
        for n in -2..=2 {
            let v = WedgeState::vacuum(n, 4, pr());
            assert_eq!(fermion_apply(&v, Fermion::Theta, n), WedgeState::vacuum(n + 1, 4, pr()));
            assert_eq!(fermion_apply(&v, Fermion::ThetaDagger, n - 1), WedgeState::vacuum(n - 1, 4, pr()));
            assert!(fermion_apply(&v, Fermion::Theta, n - 1).is_zero());
        }
    }

    #[test]
    fn theta_squares_to_zero() {
        for s in all_basis(0, 3) {
            for a in -5..5 {
                let t = fermion_apply(&s, Fermion::Theta, a);
                assert!(fermion_apply(&t, Fermion::Theta, a).is_zero());
            }
        }
    }

    #[test]
    fn anticommutation() {
        for level in [-1, 0, 2] {
            for s in all_basis(level, 4) {
                for a in (level - 6)..(level + 5) {
                    let x = fermion_apply(&fermion_apply(&s, Fermion::ThetaDagger, a), Fermion::Theta, a);
                    let y = fermion_apply(&fermion_apply(&s, Fermion::Theta, a), Fermion::ThetaDagger, a);
                    assert_eq!(x.plus(&y), s);
                    for b in (level - 4)..(level + 4) {
                        if a == b {
                            continue;
                        }
                        let ab = fermion_apply(&fermion_apply(&s, Fermion::Theta, b), Fermion::Theta, a);
                        let ba = fermion_apply(&fermion_apply(&s, Fermion::Theta, a), Fermion::Theta, b);
                        assert_eq!(ab, ba.neg());
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_examples() {
        let v1 = WedgeState::basis(&part(&[1]), 0, 4, pr());
        let vac = WedgeState::vacuum(0, 4, pr());
        assert_eq!(alpha_apply(&v1, 1), vac);
        assert_eq!(alpha_apply(&vac, -1), v1);
        assert!(alpha_apply(&vac, 2).is_zero());
    }

    #[test]
    fn alpha_routes_agree() {
        for level in [-2, 0, 1] {
            for s in all_basis(level, 4) {
                let s = s.with_cutoff(7);
                for n in [-3, -2, -1, 1, 2, 3] {
                    assert_eq!(alpha_apply(&s, n), alpha_apply_fermionic(&s, n), "n = {n}");
                }
            }
        }
    }

    #[test]
    fn schur_image_is_level_independent() {
        for level in -2..=2 {
            for lambda in partitions_up_to(5) {
                let v = WedgeState::basis(&lambda, level, 6, pr());
                let s = schur_p(&lambda, pr());
                assert_eq!(boson_fermion(&v), s);
                assert_eq!(boson_fermion_vertex(&v).unwrap(), s, "lambda = {lambda}, N = {level}");
            }
        }
    }

    #[test]
    fn small_boson_images() {
        let v2 = WedgeState::basis(&part(&[2]), 0, 4, pr());
        let expected = (&(&SymSeries::p(1, pr()) * &SymSeries::p(1, pr())) + &SymSeries::p(2, pr())).scale(&crate::series::rat(1, 2));
        assert_eq!(boson_fermion_vertex(&v2).unwrap(), expected);
        assert!(boson_fermion(&WedgeState::vacuum(3, 4, pr())).is_one());
    }
}
