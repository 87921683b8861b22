use num::Zero;

use super::tau::{bd_coef, BdSeries, Direction};
use crate::error::{Error, Result};
use crate::fock::det_series;
use crate::series::{rat_pow, BetaScalar, Key, Rational, SymSeries, TruncationProfile};
use crate::symfun::Partition;

/// Parameters of `y_i = e^{xi(t, alpha_i)} + a_i e^{xi(t, beta_i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonParams {
    alphas: Vec<Rational>,
    betas: Vec<Rational>,
    amps: Vec<Rational>,
}

fn jet_matrix(alphas: &[Rational], betas: &[Rational], amps: &[Rational], k: usize) -> Vec<Vec<Rational>> {
    (0..k)
        .map(|j| {
            (0..k)
                .map(|i| rat_pow(&alphas[i], j as u32) + &amps[i] * rat_pow(&betas[i], j as u32))
                .collect()
        })
        .collect()
}

fn rational_det(m: &[Vec<Rational>]) -> Rational {
    let profile = TruncationProfile::closed(0, 0);
    let lifted: Vec<Vec<SymSeries>> = m
        .iter()
        .map(|r| r.iter().map(|c| SymSeries::constant(c.clone(), profile)).collect())
        .collect();
    det_series(&lifted, profile).constant_rational()
}

impl SolitonParams {
    /// Checks `Delta_k(0) != 0` for every `k`.
    pub fn new(alphas: Vec<Rational>, betas: Vec<Rational>, amps: Vec<Rational>) -> Result<Self> {
        if alphas.len() != betas.len() || alphas.len() != amps.len() {
            return Err(Error::InvalidArgument(format!(
                "parameter lists differ in length: {}, {}, {}",
                alphas.len(),
                betas.len(),
                amps.len()
            )));
        }
        for k in 1..=alphas.len() {
            if rational_det(&jet_matrix(&alphas, &betas, &amps, k)).is_zero() {
                return Err(Error::DegenerateSoliton(k));
            }
        }
        Ok(SolitonParams { alphas, betas, amps })
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }
}

/// `exp(xi(t, c)) = exp(sum_n p_n c^n / n)`.
pub fn exp_xi_at(c: &Rational, profile: TruncationProfile) -> Result<SymSeries> {
    let mut xi = SymSeries::zero(profile);
    for n in 1..=profile.max_p_weight {
        let coef = rat_pow(c, n) / Rational::from_integer((n as i64).into());
        xi.add_term(Key::new(Partition::row(n), 0, 0), BetaScalar::constant(coef, profile.beta_order));
    }
    xi.exp()
}

/// `d^j y_i / dt_1^j = alpha_i^j e^{xi(t, alpha_i)} + a_i beta_i^j e^{xi(t, beta_i)}`.
pub fn soliton_entry(params: &SolitonParams, i: usize, j: u32, profile: TruncationProfile) -> Result<SymSeries> {
    let a = exp_xi_at(&params.alphas[i], profile)?.scale(&rat_pow(&params.alphas[i], j));
    let b = exp_xi_at(&params.betas[i], profile)?.scale(&(&params.amps[i] * rat_pow(&params.betas[i], j)));
    a.checked_add(&b)
}

/// Wronskian `Delta_k` of `y_1, ..., y_k` in `t_1`; `Delta_0 = 1`.
pub fn soliton_tau(params: &SolitonParams, k: usize, profile: TruncationProfile) -> Result<SymSeries> {
    if k > params.len() {
        return Err(Error::InvalidArgument(format!("only {} solitons", params.len())));
    }
    let mut m = Vec::with_capacity(k);
    for j in 0..k {
        let row = (0..k)
            .map(|i| soliton_entry(params, i, j as u32, profile))
            .collect::<Result<Vec<_>>>()?;
        m.push(row);
    }
    Ok(det_series(&m, profile))
}

/// `gamma_k(x) = 1/(1 - alpha_k x^{-1}) + a_k/(1 - beta_k x^{-1})`, coefficients
/// up to `x^{-depth}`.
pub fn soliton_gamma(params: &SolitonParams, k: usize, depth: usize, profile: TruncationProfile) -> Result<BdSeries> {
    if k == 0 || k > params.len() {
        return Err(Error::InvalidArgument(format!("gamma index {k} out of range")));
    }
    let (a, b, amp) = (&params.alphas[k - 1], &params.betas[k - 1], &params.amps[k - 1]);
    let coeffs = (0..=depth as u32)
        .map(|i| SymSeries::constant(rat_pow(a, i) + amp * rat_pow(b, i), profile))
        .collect();
    BdSeries::new(coeffs).map_err(|_| Error::DegenerateSoliton(k))
}

/// `Coef_{x^0}(gamma_k(x) Delta_{k-1}(t - [x^{-1}]) x^{k-1} e^{xi})`. The
/// factor `x^{k-1}` pulls in `Delta_{k-1}` up to weight `weight + k - 1`.
pub fn soliton_chain_step(params: &SolitonParams, k: usize, profile: TruncationProfile) -> Result<SymSeries> {
    let w = profile.max_p_weight + k as u32 - 1;
    let wide = profile
        .with_weight(w)
        .with_x_window(profile.x_low.min(-(w as i32) - 2), profile.x_high.max(w as i32 + 2));
    let prev = soliton_tau(params, k - 1, wide)?;
    let gamma = soliton_gamma(params, k, w as usize + k, wide)?;
    bd_coef(&prev, &gamma, Direction::Forward, -(k as i32 - 1))?.restrict(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kp::fay_residual;
    use crate::series::{int, rat};

    fn pr() -> TruncationProfile {
        TruncationProfile::closed(4, 0)
    }

    fn three() -> SolitonParams {
        SolitonParams::new(
            vec![int(1), int(2), rat(1, 2)],
            vec![int(-1), int(3), rat(-2, 3)],
            vec![int(1), rat(2, 5), int(-3)],
        )
        .unwrap()
    }

    #[test]
    fn one_soliton() {
        let p = SolitonParams::new(vec![int(1)], vec![int(-1)], vec![int(1)]).unwrap();
        let d1 = soliton_tau(&p, 1, pr()).unwrap();
        let expected = &exp_xi_at(&int(1), pr()).unwrap() + &exp_xi_at(&int(-1), pr()).unwrap();
        assert_eq!(d1, expected);
        assert_eq!(d1.constant_rational(), int(2));
        assert!(fay_residual(&d1.scale(&rat(1, 2))).unwrap().is_zero());
        assert_eq!(soliton_chain_step(&p, 1, pr()).unwrap(), d1);
    }

    #[test]
    fn derivative_entry() {
        let p = three();
        let e = soliton_entry(&p, 0, 1, pr()).unwrap();
        let y = soliton_entry(&p, 0, 0, pr()).unwrap();
        let w3 = pr().with_weight(3);
        assert_eq!(y.derive_t(1).restrict(w3).unwrap(), e.restrict(w3).unwrap());
    }

    #[test]
    fn three_soliton_chain() {
        let p = three();
        for k in 1..=3 {
            let dk = soliton_tau(&p, k, pr()).unwrap();
            assert!(fay_residual(&dk).unwrap().is_zero(), "k = {k}");
            assert_eq!(soliton_chain_step(&p, k, pr()).unwrap(), dk, "k = {k}");
        }
    }

    #[test]
    fn degenerate_parameters() {
        let r = SolitonParams::new(vec![int(1), int(1)], vec![int(2), int(2)], vec![int(1), int(1)]);
        assert_eq!(r, Err(Error::DegenerateSoliton(2)));
        assert_eq!(SolitonParams::new(vec![int(1)], vec![int(2)], vec![int(-1)]), Err(Error::DegenerateSoliton(1)));
    }
}
