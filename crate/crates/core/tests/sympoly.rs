use std::collections::BTreeMap;

use num_rational::BigRational;
use vertexpoly::lattice::{sample_point, symbolic_us, wavefunction, Config, ParamSet};
use vertexpoly::ring::{rng_for, RatFunc, Var};
use vertexpoly::sympoly::*;

fn u(j: usize) -> RatFunc {
    RatFunc::var(Var::u(j))
}

fn cfg(m: usize, s: &[usize]) -> Config {
    Config::new(m, s.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn g_two_particles_matches_y_form() {
    let p = ParamSet::symbolic();
    let lin = |x: &RatFunc| (p.a.clone() * x + &p.b, p.e.clone() * x + &p.f);
    let ((a1, e1), (a2, e2)) = (lin(&u(1)), lin(&u(2)));
    let t = &p.t;
    let y = (a1.pow(2) * &e2.pow(2) * &(t.clone() * &u(1) - &u(2)) + &(e1.pow(2) * &a2.pow(2) * &(u(1) - &(t.clone() * &u(2)))))
        .try_div(&(u(1) - &u(2)))
        .unwrap();
    let omt = RatFunc::one() - t;
    let expected = e1 * &e2 * &omt.pow(2) * &p.c.pow(2) * &u(1) * &u(2) * &y;
    assert_eq!(family_poly(Family::G, &cfg(4, &[2, 4]), &[u(1), u(2)], &p).unwrap(), expected);
}

#[test]
fn one_particle_forms() {
    let p = ParamSet::symbolic();
    let omt = RatFunc::one() - &p.t;
    let (au_b, eu_f) = (p.a.clone() * &u(1) + &p.b, p.e.clone() * &u(1) + &p.f);
    let atu_b = p.a.clone() * &p.t * &u(1) + &p.b;
    let eu_tf = p.e.clone() * &u(1) + &(p.t.clone() * &p.f);
    let m = 4;
    for x1 in 1..=m {
        let x = cfg(m, &[x1]);
        let g = omt.clone() * &p.c * &u(1) * &au_b.pow(m as u32 - x1 as u32) * &eu_f.pow(x1 as u32 - 1);
        assert_eq!(family_poly(Family::G, &x, &[u(1)], &p).unwrap(), g);
        let hbar = omt.clone() * &p.d * &eu_tf.pow(m as u32 - x1 as u32) * &atu_b.pow(x1 as u32 - 1);
        assert_eq!(family_poly(Family::Hbar, &x, &[u(1)], &p).unwrap(), hbar);
    }
}

#[test]
fn families_are_symmetric() {
    let mut rng = rng_for(5);
    let (p, us) = sample_point(&mut rng, 4, None).unwrap();
    for kind in Family::ALL {
        for n in 2..=4 {
            for x in Config::all(6, n).into_iter().step_by(3) {
                let base = family_poly(kind, &x, &us[..n], &p).unwrap();
                for j in 1..n {
                    let mut swapped = us[..n].to_vec();
                    swapped.swap(0, j);
                    assert_eq!(family_poly(kind, &x, &swapped, &p).unwrap(), base, "{kind} x={x}");
                }
            }
        }
    }
}

#[test]
fn families_match_wavefunctions_symbolically() {
    let p = ParamSet::symbolic();
    for kind in Family::ALL {
        for m in 1..=3 {
            for n in 0..=m.min(2) {
                let us = symbolic_us(n);
                for x in Config::all(m, n) {
                    let lhs = wavefunction(kind.wave_kind(), &x, &us, &p).unwrap();
                    assert_eq!(lhs, family_poly(kind, &x, &us, &p).unwrap(), "{kind} x={x}");
                }
            }
        }
    }
}

#[test]
fn family_is_polynomial() {
    let p = ParamSet::symbolic();
    let us = symbolic_us(2);
    // e and f carry a and b in their denominators; nothing else may remain
    for kind in Family::ALL {
        for x in Config::all(4, 2) {
            let g = family_poly(kind, &x, &us, &p).unwrap();
            assert!(g.denom().vars().iter().all(|v| [Var::A, Var::B].contains(v)), "{kind} x={x}: {}", g.to_text());
        }
    }
}

#[test]
fn coincident_parameters_rejected() {
    let p = ParamSet::sample(1);
    let us = [q(1, 2), q(1, 2)];
    assert!(family_poly(Family::G, &cfg(3, &[1, 3]), &us, &p).is_err());
}

#[test]
fn skew_worked_example() {
    let p = ParamSet::symbolic();
    let x = cfg(10, &[2, 4, 5, 6, 8, 10]);
    let y = cfg(10, &[2, 3, 4, 5, 7, 8, 10]);
    let omt = RatFunc::one() - &p.t;
    let uu = u(1);
    let expected = (omt.clone() * &p.c * &uu).pow(2)
        * &omt
        * &p.d
        * &(p.a.clone() * &p.t * &uu + &p.b).pow(4)
        * &(p.a.clone() * &uu + &p.b)
        * &(p.e.clone() * &uu + &(p.t.clone() * &p.f))
        * &(p.e.clone() * &uu + &p.f);
    assert_eq!(skew_factor(Family::G, &y, &x, &uu, &p).unwrap(), expected);
}

#[test]
fn skew_edge_cases() {
    let p = ParamSet::symbolic();
    assert!(skew_factor(Family::G, &cfg(3, &[1, 2]), &cfg(3, &[3]), &u(1), &p).unwrap().is_zero());
    let single = skew_factor(Family::G, &cfg(1, &[1]), &Config::empty(1), &u(1), &p).unwrap();
    assert_eq!(single, (RatFunc::one() - &p.t) * &p.c * &u(1));
}

#[test]
fn skew_factors_match_row_operators() {
    let mut rng = rng_for(9);
    let (p, us) = sample_point(&mut rng, 1, None).unwrap();
    for kind in Family::ALL {
        for m in 1..=6 {
            for n in 0..m {
                for x in Config::all(m, n) {
                    for y in Config::all(m, n + 1) {
                        let closed = skew_factor(kind, &y, &x, &us[0], &p).unwrap();
                        let lattice = skew_from_lattice(kind, &y, &x, &us[0], &p).unwrap();
                        assert_eq!(closed, lattice, "{kind} y={y} x={x}");
                    }
                }
            }
        }
    }
}

#[test]
fn translation_round_trips() {
    for m in 0..=8 {
        for n in 0..=m {
            for x in Config::all(m, n) {
                let lambda = YoungDiagram::from_config(&x);
                assert!(lambda.parts().windows(2).all(|w| w[0] >= w[1]));
                assert_eq!(lambda.to_config(m).unwrap(), x);
            }
        }
    }
    assert_eq!(YoungDiagram::from_config(&cfg(5, &[2, 5])).parts(), &[3, 1]);
    assert!(YoungDiagram::new(vec![1, 2]).is_err());
}

#[test]
fn grothendieck_small_cases() {
    let z = [RatFunc::var(Var::u(1)), RatFunc::var(Var::u(2)), RatFunc::var(Var::u(3))];
    let beta = RatFunc::var(Var::BETA);
    for n in 1..=3 {
        let empty = YoungDiagram::new(vec![0; n]).unwrap();
        assert_eq!(grothendieck_det(&empty, &z[..n], &beta).unwrap(), RatFunc::one());
    }
    for k in 0..4 {
        let row = YoungDiagram::new(vec![k]).unwrap();
        assert_eq!(grothendieck_det(&row, &z[..1], &beta).unwrap(), z[0].pow(k as u32));
    }
    let schur = grothendieck_det(&YoungDiagram::new(vec![1, 0]).unwrap(), &z[..2], &RatFunc::zero()).unwrap();
    assert_eq!(schur, z[0].clone() + &z[1]);
    // G_(1)(z1,z2) = z1 + z2 + β z1 z2
    let g1 = grothendieck_det(&YoungDiagram::new(vec![1, 0]).unwrap(), &z[..2], &beta).unwrap();
    assert_eq!(g1, z[0].clone() + &z[1] + &(beta.clone() * &z[0] * &z[1]));
}

#[test]
fn degeneration_one_particle() {
    let beta = RatFunc::var(Var::BETA);
    let m = 4;
    for x1 in 1..=m {
        let z = -(RatFunc::one().try_div(&beta).unwrap()) - &RatFunc::one().try_div(&u(1)).unwrap();
        let expected = u(1).pow(m as u32) * &z.pow(x1 as u32 - 1);
        assert_eq!(degeneration_rhs(&cfg(m, &[x1]), &[u(1)], &beta).unwrap(), expected);
    }
    assert!(degeneration_rhs(&cfg(2, &[1]), &[RatFunc::zero()], &beta).is_err());
    assert!(degeneration_rhs(&cfg(2, &[1]), &[u(1)], &RatFunc::zero()).is_err());
}

#[test]
fn degeneration_at_t_zero() {
    let p = ParamSet::grothendieck();
    let beta = RatFunc::var(Var::BETA);
    let mut at_zero = BTreeMap::new();
    at_zero.insert(Var::T, RatFunc::zero());
    for m in 1..=4 {
        for n in 1..=m.min(2) {
            let us = symbolic_us(n);
            for x in Config::all(m, n) {
                let g = family_poly(Family::G, &x, &us, &p).unwrap().substitute(&at_zero).unwrap();
                assert_eq!(g, degeneration_rhs(&x, &us, &beta).unwrap(), "x={x}");
            }
        }
    }
}
