use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use spincorr::measures::*;
use spincorr::spin_core::SpinNumber;

fn pair_strategy() -> impl Strategy<Value = PairConfig> {
    (1u32..12, 0u32..12).prop_map(|(a, extra)| {
        PairConfig::new(SpinNumber::from_twice(a), SpinNumber::from_twice(a + extra)).unwrap()
    })
}

proptest! {
    #[test]
    fn povm_information_is_bounded_by_total(cfg in pair_strategy(), tau in 0.0..TAU) {
        let (i, j) = (mutual_info_quantum(&cfg, tau), mutual_info_povm(&cfg, tau));
        prop_assert!(j >= -1e-12 && j <= i + 1e-12);
        for s in [cfg.s1(), cfg.s2()] {
            let (fv, gv) = (f(s, tau), g(s, tau));
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&fv));
            prop_assert!(gv * gv <= fv + 1e-12);
        }
    }

    #[test]
    fn quantum_measures_have_period_two_pi(cfg in pair_strategy(), tau in 0.0..TAU) {
        for m in [Measure::I, Measure::Jgg, Measure::Qgg, Measure::Cg, Measure::Qg] {
            let (a, b) = (m.evaluate(&cfg, tau).unwrap(), m.evaluate(&cfg, tau + TAU).unwrap());
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn decompositions(cfg in pair_strategy(), tau in 0.0..TAU) {
        let i = mutual_info_quantum(&cfg, tau);
        prop_assert!((q_povm_both(&cfg, tau) - (i - mutual_info_povm(&cfg, tau))).abs() <= 1e-14 * i.max(1.0));
        prop_assert!((q_povm_one(&cfg, tau) - (i - c_povm_one(&cfg, tau))).abs() <= 1e-14 * i.max(1.0));
    }
}

#[test]
fn revival_after_one_period() {
    for twice in [3, 9] {
        let cfg = PairConfig::symmetric(SpinNumber::from_twice(twice)).unwrap();
        let s = cfg.s2().value();
        let tau = DimensionlessTime::from_tj(&cfg, 2.0 * PI * s).tau;
        for m in [Measure::I, Measure::Jgg, Measure::Qgg, Measure::Qg] {
            assert!(
                m.evaluate(&cfg, tau).unwrap().abs() < 1e-12,
                "{m} at S = {s}"
            );
        }
    }
}

#[test]
fn midpoint_f_values() {
    for twice in [1, 2, 3, 9] {
        let s = SpinNumber::from_twice(twice);
        assert!((f(s, PI) - 1.0 / (4.0 * s.value() + 1.0)).abs() < 1e-12);
    }
}

#[test]
fn two_spin_halves_split_evenly_at_half_period() {
    let cfg = PairConfig::symmetric(SpinNumber::HALF).unwrap();
    let r = midpoint_ratios(&cfg);
    assert!((r.c_orth - 0.5).abs() < 1e-12 && (r.q_orth - 0.5).abs() < 1e-12);
    for k in 1..20 {
        let tau = TAU * k as f64 / 20.0;
        let i = mutual_info_quantum(&cfg, tau);
        assert!((c_orth(&cfg, tau).unwrap() - i / 2.0).abs() < 1e-14);
        assert!((q_orth(&cfg, tau).unwrap() - i / 2.0).abs() < 1e-14);
    }
}

#[test]
fn short_time_coefficients() {
    for (a, b) in [(1, 1), (3, 3), (1, 9), (9, 9)] {
        let cfg = PairConfig::new(SpinNumber::from_twice(a), SpinNumber::from_twice(b)).unwrap();
        let c = short_time_asymptotics(&cfg);
        let h = 1e-4;
        let fd = |m: fn(&PairConfig, f64) -> f64| quadratic_coefficient(|t| m(&cfg, t), h);
        assert!((fd(mutual_info_quantum) / c.mutual_info_quantum - 1.0).abs() < 1e-6);
        assert!((fd(mutual_info_classical) / c.mutual_info_classical - 1.0).abs() < 1e-6);
        assert!((fd(mutual_info_povm) / c.mutual_info_povm - 1.0).abs() < 1e-6);
    }
}

#[test]
fn classical_information_flattens_out() {
    let cfg = PairConfig::new(SpinNumber::from_twice(3), SpinNumber::from_twice(9)).unwrap();
    let plateau = 1.5f64.powi(2) + 4.5f64.powi(2);
    assert!((mutual_info_classical(&cfg, 500.0) / plateau - 1.0).abs() < 1e-4);
    assert!(mutual_info_classical(&cfg, TAU) > 0.5 * plateau);
}
