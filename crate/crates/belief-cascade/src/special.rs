//! Standard-normal tail functions.
//!
//! Everything downstream divides by Gaussian tails, so `q_tail` must keep
//! relative accuracy deep into the tail and `inverse_mills_ratio` must not
//! degenerate into 0/0 where both the density and the tail underflow.

use std::f64::consts::SQRT_2;

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// Standard-normal density `phi(x)`.
pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / SQRT_2PI
}

/// Upper-tail probability `Q(x)` of the standard normal.
///
/// Backed by the complementary error function, which keeps full relative
/// accuracy until the tail underflows near `x = 37.5`.
pub fn q_tail(x: f64) -> f64 {
    0.5 * libm::erfc(x / SQRT_2)
}

/// `ln Q(x)`, finite for every finite `x`.
///
/// For `x > 8` the identity `Q = phi / eta` avoids taking the log of a
/// number that is about to underflow.
pub fn ln_q_tail(x: f64) -> f64 {
    if x <= 8.0 {
        q_tail(x).ln()
    } else {
        -0.5 * x * x - LN_SQRT_2PI - inverse_mills_ratio(x).ln()
    }
}

/// Inverse Mills ratio `eta(x) = phi(x) / Q(x)`.
///
/// The direct ratio is exact while both factors are normal numbers; past
/// `x = 30` both head for the underflow boundary, so the Laplace continued
/// fraction of the Mills ratio takes over.
pub fn inverse_mills_ratio(x: f64) -> f64 {
    if x <= 30.0 {
        normal_pdf(x) / q_tail(x)
    } else {
        // eta(x) = x + 1/(x + 2/(x + 3/(x + ...))), evaluated backwards.
        let mut tail = 0.0;
        for k in (1..=12u32).rev() {
            tail = f64::from(k) / (x + tail);
        }
        x + tail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle for Q(x): Gauss-Legendre quadrature of the density
    /// near the origin, Laplace continued fraction in the tail. Shares no
    /// code path with the erfc-backed implementation.
    pub(crate) fn oracle_q(x: f64) -> f64 {
        if x < 0.0 {
            return 1.0 - oracle_q(-x);
        }
        if x <= 2.0 {
            0.5 - gauss_legendre_pdf(0.0, x)
        } else {
            normal_pdf(x) * mills_cf(x)
        }
    }

    /// 64-node Gauss-Legendre integral of phi over [a, b] via 8 panels of
    /// the 8-point rule.
    fn gauss_legendre_pdf(a: f64, b: f64) -> f64 {
        const NODES: [f64; 4] = [
            0.183_434_642_495_649_8,
            0.525_532_409_916_329_0,
            0.796_666_477_413_626_7,
            0.960_289_856_497_536_2,
        ];
        const WEIGHTS: [f64; 4] = [
            0.362_683_783_378_362_0,
            0.313_706_645_877_887_3,
            0.222_381_034_453_374_5,
            0.101_228_536_290_376_3,
        ];
        let panels = 8;
        let h = (b - a) / panels as f64;
        let mut total = 0.0;
        for p in 0..panels {
            let mid = a + (p as f64 + 0.5) * h;
            let half = 0.5 * h;
            for i in 0..4 {
                total += WEIGHTS[i]
                    * half
                    * (normal_pdf(mid - half * NODES[i]) + normal_pdf(mid + half * NODES[i]));
            }
        }
        total
    }

    /// Mills ratio Q(x)/phi(x) by Lentz evaluation of the Laplace continued
    /// fraction; converges for x >= 2.
    fn mills_cf(x: f64) -> f64 {
        let tiny = 1e-300;
        let mut f = tiny;
        let mut c = f;
        let mut d = 0.0;
        for k in 0..500 {
            let (num, den) = if k == 0 { (1.0, x) } else { (k as f64, x) };
            d = den + num * d;
            if d == 0.0 {
                d = tiny;
            }
            c = den + num / c;
            if c == 0.0 {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-17 {
                break;
            }
        }
        f
    }

    #[test]
    fn q_tail_matches_oracle() {
        // frozen from a 40-digit evaluation of erfc(x/sqrt 2)/2
        assert!((q_tail(0.5) - 0.308_537_538_725_986_9).abs() < 1e-15);
        assert!((q_tail(1.0) - 0.158_655_253_931_457_05).abs() < 1e-15);
        assert!((q_tail(2.0) - 0.022_750_131_948_179_207).abs() < 1e-16);
        assert!((q_tail(8.0) - 6.220_960_574_271_784e-16).abs() < 1e-28);

        let mut x = -8.0;
        while x <= 8.0 {
            let q = q_tail(x);
            let reference = oracle_q(x);
            assert!(
                (q - reference).abs() <= 1e-12 * reference.abs().max(1e-300),
                "x={x}: q={q:e} oracle={reference:e}"
            );
            x += 0.0625;
        }
    }

    #[test]
    fn q_tail_trivial_points() {
        assert_eq!(q_tail(0.0), 0.5);
        assert!(q_tail(8.0) < 1e-15);
        assert!(q_tail(-8.0) > 1.0 - 1e-15);
    }

    #[test]
    fn q_tail_symmetry() {
        let mut x = -8.0;
        while x <= 8.0 {
            assert!((q_tail(x) + q_tail(-x) - 1.0).abs() <= 1e-14, "x={x}");
            x += 1.0 / 64.0;
        }
    }

    #[test]
    fn ln_q_tail_consistent_across_switchover() {
        for &x in &[-30.0, -5.0, 0.0, 3.0, 7.999, 8.001, 12.0, 20.0, 29.0, 31.0, 37.0, 80.0] {
            let lq = ln_q_tail(x);
            assert!(lq.is_finite(), "x={x}");
            if x <= 35.0 {
                let direct = q_tail(x).ln();
                assert!(
                    (lq - direct).abs() <= 1e-11 * direct.abs().max(1.0),
                    "x={x}: {lq} vs {direct}"
                );
            }
        }
        // far past tail underflow the log must still be usable
        assert!(ln_q_tail(60.0) < -1800.0 && ln_q_tail(60.0).is_finite());
    }

    #[test]
    fn mills_values() {
        // phi(0)/Q(0) = 2/sqrt(2 pi)
        assert!((inverse_mills_ratio(0.0) - 0.797_884_560_802_865_4).abs() < 1e-15);
        // phi(-6)/Q(-6), dominated by the density
        assert!((inverse_mills_ratio(-6.0) - 6.075_882_855_817_676e-9).abs() < 1e-22);
        assert!((inverse_mills_ratio(5.0) - 5.186_503_967_125_842).abs() < 1e-12);
        // continued-fraction branch against a frozen 40-digit value
        assert!((inverse_mills_ratio(35.0) - 35.028_524_970_596_69).abs() < 1e-10);
    }

    #[test]
    fn mills_branch_agreement() {
        // the two evaluation strategies must agree where both are healthy
        for &x in &[25.0, 28.0, 29.9, 30.1, 32.0, 34.0] {
            let direct = normal_pdf(x) / q_tail(x);
            let mut tail = 0.0;
            for k in (1..=12u32).rev() {
                tail = f64::from(k) / (x + tail);
            }
            let cf = x + tail;
            assert!(
                ((direct - cf) / cf).abs() < 1e-12,
                "x={x}: direct={direct} cf={cf}"
            );
        }
    }

    #[test]
    fn mills_slope_and_convexity() {
        // forward differences in (0, h), second differences positive
        let h = 1e-3;
        let mut x = -8.0;
        let mut prev = inverse_mills_ratio(x);
        let mut prev_diff: Option<f64> = None;
        while x < 8.0 {
            let next = inverse_mills_ratio(x + h);
            let diff = next - prev;
            assert!(diff > 0.0 && diff < h, "x={x}: diff={diff}");
            if let Some(pd) = prev_diff {
                assert!(diff - pd > 0.0, "x={x}: second difference not positive");
            }
            prev_diff = Some(diff);
            prev = next;
            x += h;
        }
    }
}
