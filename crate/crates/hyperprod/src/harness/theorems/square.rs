use hyperprod_core::invariant::{
    chromatic_number, covering_number, discrepancy, fractional_covering_number, has_helly_property,
    independence_number, is_conformal, matching_number, partition_number, Rational,
};
use hyperprod_core::iso::is_isomorphic;
use hyperprod_core::product::{square, ProductKind};
use hyperprod_core::{ExtNat, Hypergraph};
use rand::Rng;
use serde_json::json;

use super::cartesian::covering_check;
use super::{attempt, draw, pair_witness, random, verdict};
use crate::harness::{GenParams, TheoremCheck, Trial, TrialRng};
use crate::json::rational_value;

const GROUP: &str = "square";

fn pair(rng: &mut TrialRng, params: &GenParams) -> Option<(Hypergraph<usize>, Hypergraph<usize>)> {
    Some((draw(rng, params, 200, |_| true)?, draw(rng, params, 200, |_| true)?))
}

fn small() -> GenParams {
    GenParams::new(1..=4, 0..=4, 1..=3)
}

fn dual() -> TheoremCheck {
    random("dual-square", GROUP, "the dual of a square product is the square product of the duals", |rng, _| {
        let Some((h1, h2)) = pair(rng, &small().no_isolated()) else {
            return Trial::Vacuous;
        };
        let left = attempt!(square(&h1, &h2).hypergraph.dual());
        let right = square(&attempt!(h1.dual()), &attempt!(h2.dual())).hypergraph;
        verdict(is_isomorphic(&left, &right), || pair_witness(&h1, &h2, json!("duals not isomorphic")))
    })
}

fn conformal() -> TheoremCheck {
    random("conformal-square", GROUP, "a square product of factors with edges is conformal iff both factors are", |rng, budget| {
        let Some((h1, h2)) = pair(rng, &GenParams { edges: 1..=4, ..small() }) else {
            return Trial::Vacuous;
        };
        let p = square(&h1, &h2).hypergraph;
        let (a, b, c) = (attempt!(is_conformal(&h1, budget)), attempt!(is_conformal(&h2, budget)), attempt!(is_conformal(&p, budget)));
        verdict(c == (a && b), || pair_witness(&h1, &h2, json!({ "factors": [a, b], "product": c })))
    })
}

fn helly() -> TheoremCheck {
    random("helly-square", GROUP, "a square product of factors with edges has the Helly property iff both factors do", |rng, budget| {
        let Some((h1, h2)) = pair(rng, &GenParams { edges: 1..=4, ..small() }) else {
            return Trial::Vacuous;
        };
        let p = square(&h1, &h2).hypergraph;
        let (a, b, c) =
            (attempt!(has_helly_property(&h1, budget)), attempt!(has_helly_property(&h2, budget)), attempt!(has_helly_property(&p, budget)));
        verdict(c == (a && b), || pair_witness(&h1, &h2, json!({ "factors": [a, b], "product": c })))
    })
}

fn stability() -> TheoremCheck {
    random(
        "stability-square",
        GROUP,
        "|V'|b + |V|b' - bb' <= b(H square H') <= |V'|b + |E|b'",
        |rng, budget| {
            let Some((h1, h2)) = pair(rng, &small()) else {
                return Trial::Vacuous;
            };
            let p = square(&h1, &h2).hypergraph;
            let b1 = attempt!(independence_number(&h1, budget)).value;
            let b2 = attempt!(independence_number(&h2, budget)).value;
            let bp = attempt!(independence_number(&p, budget)).value;
            let (n1, n2, m1) = (h1.vertex_count(), h2.vertex_count(), h1.edge_count());
            let lower = n2 * b1 + n1 * b2 - b1 * b2;
            let upper = n2 * b1 + m1 * b2;
            verdict(lower <= bp && bp <= upper, || {
                pair_witness(&h1, &h2, json!({ "beta": [b1, b2, bp], "lower": lower, "upper": upper }))
            })
        },
    )
}

fn chain() -> TheoremCheck {
    random(
        "matching-covering-chain",
        GROUP,
        "nu nu' <= nu(sq) <= tau* nu' <= tau* tau*' = tau*(sq) <= tau* tau' <= tau(sq) <= tau tau'",
        |rng, budget| {
            let Some((h1, h2)) = pair(rng, &GenParams::new(1..=4, 0..=3, 1..=3)) else {
                return Trial::Vacuous;
            };
            let p = square(&h1, &h2).hypergraph;
            let r = |n: usize| Rational::from(n as i128);
            let nu = [attempt!(matching_number(&h1, budget)).value, attempt!(matching_number(&h2, budget)).value];
            let tau = [attempt!(covering_number(&h1, budget)).value, attempt!(covering_number(&h2, budget)).value];
            let ts1 = attempt!(fractional_covering_number(&h1, budget)).value;
            let ts2 = attempt!(fractional_covering_number(&h2, budget)).value;
            let nu_p = attempt!(matching_number(&p, budget)).value;
            let tau_p = attempt!(covering_number(&p, budget)).value;
            let ts_p = attempt!(fractional_covering_number(&p, budget)).value;
            let links = [
                r(nu[0] * nu[1]) <= r(nu_p),
                r(nu_p) <= ts1 * r(nu[1]),
                ts1 * r(nu[1]) <= ts1 * ts2,
                ts1 * ts2 == ts_p,
                ts_p <= ts1 * r(tau[1]),
                ts1 * r(tau[1]) <= r(tau_p),
                tau_p <= tau[0] * tau[1],
            ];
            verdict(links.iter().all(|&ok| ok), || {
                pair_witness(
                    &h1,
                    &h2,
                    json!({
                        "nu": [nu[0], nu[1], nu_p],
                        "tau": [tau[0], tau[1], tau_p],
                        "tau_star": [rational_value(&ts1), rational_value(&ts2), rational_value(&ts_p)],
                        "links": links,
                    }),
                )
            })
        },
    )
}

fn tau_lower() -> TheoremCheck {
    random("tau-lower-square", GROUP, "tau(H square H') >= tau(H) + tau(H') - 1", |rng, budget| {
        let Some((h1, h2)) = pair(rng, &GenParams::new(1..=4, 1..=4, 1..=3)) else {
            return Trial::Vacuous;
        };
        let p = square(&h1, &h2).hypergraph;
        let (t1, t2) = (attempt!(covering_number(&h1, budget)).value, attempt!(covering_number(&h2, budget)).value);
        let tp = attempt!(covering_number(&p, budget)).value;
        verdict(tp + 1 >= t1 + t2, || pair_witness(&h1, &h2, json!({ "tau": [t1, t2, tp] })))
    })
}

fn tau_common_point() -> TheoremCheck {
    random(
        "tau-common-point-square",
        GROUP,
        "if all edges of H share a vertex then tau(H square H') = tau(H) + tau(H') - 1",
        |rng, budget| {
            let params = GenParams::new(1..=4, 1..=4, 1..=3);
            let Some((base, h2)) = pair(rng, &params) else {
                return Trial::Vacuous;
            };
            let pin = rng.gen_range(0..base.vertex_count());
            let edges: Vec<Vec<usize>> = base.edge_sets().map(|mut e| {
                e.push(pin);
                e
            }).collect();
            let h1 = attempt!(Hypergraph::new(base.vertices().iter().copied(), edges));
            let p = square(&h1, &h2).hypergraph;
            let (t1, t2) = (attempt!(covering_number(&h1, budget)).value, attempt!(covering_number(&h2, budget)).value);
            let tp = attempt!(covering_number(&p, budget)).value;
            verdict(tp + 1 == t1 + t2, || pair_witness(&h1, &h2, json!({ "tau": [t1, t2, tp] })))
        },
    )
}

fn tau_multiplicative() -> TheoremCheck {
    random(
        "tau-multiplicative-square",
        GROUP,
        "if tau(H) = tau*(H) then tau(H square H') = tau(H) tau(H') for sampled H'",
        |rng, budget| {
            let params = GenParams::new(1..=4, 1..=4, 1..=3);
            let integral = |h: &Hypergraph<usize>| match (covering_number(h, budget), fractional_covering_number(h, budget)) {
                (Ok(t), Ok(f)) => Rational::from(t.value as i128) == f.value,
                _ => false,
            };
            let Some(h1) = draw(rng, &params, 50, integral) else {
                return Trial::Vacuous;
            };
            let Some(h2) = draw(rng, &params, 200, |_| true) else {
                return Trial::Vacuous;
            };
            let p = square(&h1, &h2).hypergraph;
            let (t1, t2) = (attempt!(covering_number(&h1, budget)).value, attempt!(covering_number(&h2, budget)).value);
            let tp = attempt!(covering_number(&p, budget)).value;
            verdict(tp == t1 * t2, || pair_witness(&h1, &h2, json!({ "tau": [t1, t2, tp] })))
        },
    )
}

fn chromatic() -> TheoremCheck {
    random("chromatic-square", GROUP, "chi(H square H') <= min(chi(H), chi(H'))", |rng, budget| {
        let Some((h1, h2)) = pair(rng, &small().loop_free()) else {
            return Trial::Vacuous;
        };
        let p = square(&h1, &h2).hypergraph;
        let (c1, c2, cp) =
            (attempt!(chromatic_number(&h1, budget)), attempt!(chromatic_number(&h2, budget)), attempt!(chromatic_number(&p, budget)));
        verdict(cp <= c1.min(c2), || pair_witness(&h1, &h2, json!({ "chi": [c1, c2, cp] })))
    })
}

fn discrepancy_check(k: usize) -> TheoremCheck {
    random(
        format!("discrepancy-square-{k}"),
        GROUP,
        "disc(H square H', k) <= k disc(H, k) disc(H', k)",
        move |rng, budget| {
            let max_n = if k == 2 { 4 } else { 3 };
            let Some((h1, h2)) = pair(rng, &GenParams::new(1..=max_n, 0..=3, 1..=3)) else {
                return Trial::Vacuous;
            };
            let p = square(&h1, &h2).hypergraph;
            let d1 = attempt!(discrepancy(&h1, k, budget));
            let d2 = attempt!(discrepancy(&h2, k, budget));
            let dp = attempt!(discrepancy(&p, k, budget));
            let bound = Rational::from(k as i128) * d1 * d2;
            verdict(dp <= bound, || {
                pair_witness(&h1, &h2, json!({ "disc": [rational_value(&d1), rational_value(&d2), rational_value(&dp)] }))
            })
        },
    )
}

/// All `d`-subsets of `0..n` plus every singleton.
fn partition_family(n: usize, d: usize) -> Hypergraph<usize> {
    let mut edges: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        edges.push(subset.clone());
        let Some(i) = (0..d).rev().find(|&i| subset[i] < n - d + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..d {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Hypergraph::new(0..n, edges).expect("indices in range")
}

fn partition() -> TheoremCheck {
    random(
        "partition-square",
        GROUP,
        "for d-subset-plus-singleton factors with d > prod of nonzero |V_i| mod d, rho is multiplicative",
        |rng, budget| {
            let d = rng.gen_range(2..=3);
            let (n1, n2) = (rng.gen_range(d..=4), rng.gen_range(d..=4));
            let residue: usize = [n1 % d, n2 % d].iter().filter(|&&r| r != 0).product();
            if d <= residue {
                return Trial::Vacuous;
            }
            let (h1, h2) = (partition_family(n1, d), partition_family(n2, d));
            let p = square(&h1, &h2).hypergraph;
            let (r1, r2, rp) =
                (attempt!(partition_number(&h1, budget)), attempt!(partition_number(&h2, budget)), attempt!(partition_number(&p, budget)));
            let expected = match (r1, r2) {
                (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a * b),
                _ => ExtNat::Infinite,
            };
            verdict(rp == expected, || {
                pair_witness(&h1, &h2, json!({ "d": d, "rho": [r1.to_string(), r2.to_string(), rp.to_string()] }))
            })
        },
    )
}

pub(super) fn register(out: &mut Vec<TheoremCheck>) {
    out.push(dual());
    out.push(conformal());
    out.push(helly());
    out.push(stability());
    out.push(chain());
    out.push(tau_lower());
    out.push(tau_common_point());
    out.push(tau_multiplicative());
    out.push(chromatic());
    out.push(discrepancy_check(2));
    out.push(discrepancy_check(3));
    out.push(partition());
    out.push(covering_check(ProductKind::Square));
}
