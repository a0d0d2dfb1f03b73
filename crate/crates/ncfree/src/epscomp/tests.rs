use super::Marker::{P, Q};
use super::*;
use crate::freespace::{random_tracial_series, FreeSpace};
use crate::ncpart::enumerate_nc;
use crate::rdiagonal::random_r_diagonal_pair;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn eps(s: &str) -> EpsString {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn eps_strings() {
    assert!(EpsString::new(vec![2, 1]).is_err());
    assert!(EpsString::new(vec![1, 3]).is_err());
    assert!("".parse::<EpsString>().is_err());
    assert_eq!(eps("1,2,2").to_string(), "122");
    assert_eq!(EpsString::all(4).count(), 8);
    assert_eq!(EpsString::balanced(4).count(), 3);
    assert_eq!(eps("1212").lambdas(), vec![-1, 1, -1, 1]);
}

#[test]
fn layouts() {
    assert_eq!(build_layout(&eps("12")).order(), &[P(1), Q(1), Q(2), P(2)]);
    let l = build_layout(&eps("1212"));
    assert!(l.arc(2).is_empty() && l.arc(4).is_empty());
    let l = build_layout(&eps("11"));
    assert_eq!((l.arc(1), l.arc(2)), (vec![1], vec![2]));
    let l = build_layout(&eps("12211212"));
    assert_eq!(l.red(), &[1, 4, 5, 7]);
}

#[test]
fn arcs_follow_neighbouring_letters() {
    for m in 1..=6 {
        for e in EpsString::all(m) {
            let l = build_layout(&e);
            for i in 1..=m {
                let j = i % m + 1;
                let want: Vec<usize> = match (e.letters()[i - 1], e.letters()[j - 1]) {
                    (1, 1) => vec![i],
                    (2, 2) => vec![j],
                    (1, 2) => vec![i, j],
                    _ => vec![],
                };
                // with m = 1 both letters are l_1 and the lone Q follows P_1
                let want = if m == 1 { vec![1] } else { want };
                assert_eq!(l.arc(i), want, "ε = {e}, arc {i}");
            }
        }
    }
}

#[test]
fn complement_examples() {
    let e = eps("1212");
    assert_eq!(cq(&Partition::singletons(4), &e).unwrap(), Partition::full(4));
    assert_eq!(cq(&Partition::full(4), &e).unwrap(), part("{1,2}{3,4}"));
    assert_eq!(cq(&part("{1,2}"), &eps("12")).unwrap(), part("{1,2}"));
    assert_eq!(cr(&Partition::singletons(4), &e).unwrap(), Partition::full(2));
    assert_eq!(cr(&Partition::full(4), &e).unwrap(), part("{1}{2}"));
    for sigma in enumerate_nc(3).unwrap() {
        assert_eq!(cr(&sigma, &eps("122")).unwrap(), Partition::full(1));
    }
    assert!(cq(&part("{1,2}"), &e).is_err());
}

#[test]
fn cq_is_the_largest_compatible_partition() {
    for m in 1..=5 {
        let all = enumerate_nc(m).unwrap();
        for e in EpsString::all(m) {
            let l = build_layout(&e);
            for sigma in &all {
                let c = l.cq(sigma).unwrap();
                for tau in &all {
                    assert_eq!(l.compatible(sigma, tau), tau.refines(&c).unwrap(), "σ = {sigma}, τ = {tau}, ε = {e}");
                }
            }
        }
    }
}

#[test]
fn alternation_examples() {
    assert!(is_eps_alternating(&part("{1,4}{2,3}"), &eps("1212")));
    assert!(!is_eps_alternating(&Partition::full(4), &eps("1122")));
    assert!(!is_eps_alternating(&part("{1,2,3}{4}"), &eps("1212")));
    assert!(is_eps_alternating(&Partition::full(4), &eps("1212")));
}

#[test]
fn closure_and_size_doubling() {
    for m in (2..=6).step_by(2) {
        let all = enumerate_nc(m).unwrap();
        for e in EpsString::balanced(m) {
            let l = build_layout(&e);
            for sigma in all.iter().filter(|s| is_eps_alternating(s, &e)) {
                let q = l.cq(sigma).unwrap();
                assert!(is_eps_alternating(&q, &e), "C_Q({sigma}) = {q} for ε = {e}");
                let r = l.cr(sigma).unwrap();
                assert_eq!(q.num_blocks(), r.num_blocks());
                for a in r.blocks() {
                    let b = q.block_of(l.red()[a[0] - 1]).unwrap();
                    assert_eq!(b.len(), 2 * a.len());
                    assert!(a.iter().all(|&j| b.contains(&l.red()[j - 1])));
                }
            }
        }
    }
}

#[test]
fn eps_alternation_characterized() {
    for e in EpsString::balanced(4) {
        for sigma in enumerate_nc(4).unwrap() {
            assert!(verify_prop_811(&sigma, &e).unwrap(), "σ = {sigma}, ε = {e}");
        }
    }
    assert!(verify_prop_811(&Partition::full(4), &eps("1212")).unwrap());
    assert!(verify_prop_811(&Partition::full(3), &eps("112")).is_err());
}

fn instance(seed: u64, cap: usize) -> FreeSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ra = random_r_diagonal_pair(&mut rng, cap, 4).unwrap().into_series();
    let rp = random_tracial_series(&mut rng, 2, cap, 3, |_| true).unwrap();
    FreeSpace::builder(cap).family(&["a1", "a2"], ra).family(&["p1", "p2"], rp).tracial(true).build().unwrap()
}

#[test]
fn product_moment_formulas() {
    let s = instance(7, 12);
    for m in 1..=4 {
        for e in EpsString::all(m) {
            let pm = verify_eq72_73(&e, &s, ["a1", "a2", "p1", "p2"]).unwrap();
            assert!(pm.holds(), "ε = {e}: {pm:?}");
            if !e.is_balanced() {
                assert!(pm.x_lhs.is_zero() && pm.y_lhs.is_zero());
            } else {
                assert_eq!(pm.x_lhs, pm.y_lhs);
            }
        }
    }
    assert!(verify_eq72_73(&eps("1111"), &instance(7, 8), ["a1", "a2", "p1", "p2"]).is_err());
}

use num_traits::Zero;
