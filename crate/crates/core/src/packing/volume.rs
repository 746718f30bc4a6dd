use statrs::function::gamma::ln_gamma;
use std::f64::consts::{E, LN_2, PI};

/// log2 of the volume of the unit ball in R^N, from log-gamma.
pub fn log2_ball_volume(dim: usize) -> f64 {
    let n = dim as f64;
    (0.5 * n * PI.ln() - ln_gamma(0.5 * n + 1.0)) / LN_2
}

/// Leading Stirling form −(N/2)·log2(N/(2πe)) − ½·log2(Nπ); it exceeds the
/// exact value by less than log2(e)/(6N).
pub fn log2_ball_volume_stirling(dim: usize) -> f64 {
    let n = dim as f64;
    -0.5 * n * (n / (2.0 * PI * E)).log2() - 0.5 * (n * PI).log2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert!((log2_ball_volume(2) - PI.log2()).abs() < 1e-13);
        assert!((log2_ball_volume(3) - (4.0 * PI / 3.0).log2()).abs() < 1e-13);
        assert!((log2_ball_volume(8) - (PI.powi(4) / 24.0).log2()).abs() < 1e-12);
    }

    #[test]
    fn stirling_gap() {
        for n in [180usize, 192, 255, 256, 400, 512] {
            let gap = log2_ball_volume_stirling(n) - log2_ball_volume(n);
            assert!(gap > 0.0 && gap < std::f64::consts::LOG2_E / (6.0 * n as f64) + 1e-9);
        }
    }
}
