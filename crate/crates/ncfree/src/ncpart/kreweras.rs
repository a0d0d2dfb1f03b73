use super::{Partition, Permutation};
use crate::error::{domain, Result};

/// The Kreweras complement, via `Perm(K(pi)) = Perm(pi)^{-1} ∘ γ` with `γ`
/// the long cycle.
///
/// ```
/// use ncfree::ncpart::{kreweras, Partition};
/// let pi: Partition = "{1,4,5}{2,3}{6,8}{7}".parse().unwrap();
/// assert_eq!(kreweras(&pi).to_string(), "{1,3}{2}{4}{5,8}{6,7}");
/// ```
pub fn kreweras(pi: &Partition) -> Partition {
    let k = pi.perm().inverse().compose(&Permutation::long_cycle(pi.n()));
    Partition::from_canonical(pi.n(), k.cycle_blocks())
}

/// The inverse of [`kreweras`]: `Perm(K^{-1}(rho)) = γ ∘ Perm(rho)^{-1}`.
pub fn kreweras_inverse(rho: &Partition) -> Partition {
    let k = Permutation::long_cycle(rho.n()).compose(&rho.perm().inverse());
    Partition::from_canonical(rho.n(), k.cycle_blocks())
}

/// The relative complement `K_rho(pi)` for `pi <= rho`: inside every block of
/// `rho`, the Kreweras complement of the restriction of `pi`.
pub fn relative_kreweras(pi: &Partition, rho: &Partition) -> Result<Partition> {
    if !pi.refines(rho)? {
        return domain(format!("{pi} is not below {rho}"));
    }
    let mut blocks = Vec::new();
    for b in rho.blocks() {
        let local = kreweras(&pi.restrict(b));
        blocks.extend(local.blocks().iter().map(|lb| lb.iter().map(|&x| b[x - 1]).collect()));
    }
    blocks.sort_unstable_by_key(|b: &Vec<usize>| b[0]);
    Ok(Partition::from_canonical(pi.n(), blocks))
}

/// Interlaces `pi` on the even positions and `rho` on the odd positions of
/// `{1..2n}` and reports whether the result is non-crossing.
pub fn interlace_noncrossing(pi: &Partition, rho: &Partition) -> Result<bool> {
    if pi.n() != rho.n() {
        return domain(format!("ground sets differ: {} vs {}", pi.n(), rho.n()));
    }
    let mut blocks: Vec<Vec<usize>> = pi.blocks().iter().map(|b| b.iter().map(|&x| 2 * x).collect()).collect();
    blocks.extend(rho.blocks().iter().map(|b| b.iter().map(|&x| 2 * x - 1).collect()));
    super::is_noncrossing(&blocks, 2 * pi.n())
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_nc;
    use super::*;

    /// Circle picture: P_i at slot 2i, Q_i (between P_i and P_{i+1}) at slot
    /// 2i+1. Two Q's are related when no chord of pi separates them.
    fn geometric_kreweras(pi: &Partition) -> Partition {
        let n = pi.n();
        let separated = |qi: usize, qj: usize, h: usize, k: usize| {
            let (lo, hi) = (2 * h.min(k), 2 * h.max(k));
            let inside = |q: usize| lo < 2 * q + 1 && 2 * q + 1 < hi;
            inside(qi) != inside(qj)
        };
        let related =
            |i: usize, j: usize| pi.blocks().iter().all(|b| b.iter().all(|&h| b.iter().all(|&k| h == k || !separated(i, j, h, k))));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 1..=n {
            match blocks.iter_mut().find(|b| related(b[0], i)) {
                Some(b) => b.push(i),
                None => blocks.push(vec![i]),
            }
        }
        Partition::new(n, blocks).unwrap()
    }

    #[test]
    fn golden_example() {
        let pi: Partition = "{1,4,5}{2,3}{6,8}{7}".parse().unwrap();
        assert_eq!(kreweras(&pi).to_string(), "{1,3}{2}{4}{5,8}{6,7}");
    }

    #[test]
    fn extremes() {
        for n in 1..=6 {
            assert_eq!(kreweras(&Partition::full(n)), Partition::singletons(n));
            assert_eq!(kreweras(&Partition::singletons(n)), Partition::full(n));
        }
    }

    #[test]
    fn perm_route_matches_circle_picture() {
        for n in 1..=6 {
            for pi in enumerate_nc(n).unwrap() {
                assert_eq!(kreweras(&pi), geometric_kreweras(&pi), "{pi}");
            }
        }
    }

    #[test]
    fn square_is_rotation_and_inverse_inverts() {
        for n in 1..=8 {
            for pi in enumerate_nc(n).unwrap() {
                let k = kreweras(&pi);
                // i -> i-1: conjugating Perm(pi) by the long cycle
                assert_eq!(kreweras(&k), pi.rotate(n - 1), "{pi}");
                assert_eq!(kreweras_inverse(&k), pi);
            }
        }
    }

    #[test]
    fn order_reversing() {
        for n in 1..=6 {
            let all = enumerate_nc(n).unwrap();
            let ks: Vec<Partition> = all.iter().map(kreweras).collect();
            for (a, ka) in all.iter().zip(&ks) {
                for (b, kb) in all.iter().zip(&ks) {
                    assert_eq!(a.refines(b).unwrap(), kb.refines(ka).unwrap());
                }
            }
        }
    }

    #[test]
    fn relative_complement_examples_and_perm_identity() {
        let full = Partition::full(2);
        assert_eq!(relative_kreweras(&full, &full).unwrap(), Partition::singletons(2));
        assert_eq!(relative_kreweras(&Partition::singletons(4), &Partition::full(4)).unwrap(), Partition::full(4));
        for n in 1..=6 {
            let all = enumerate_nc(n).unwrap();
            for rho in &all {
                for pi in all.iter().filter(|p| p.refines(rho).unwrap()) {
                    let k = relative_kreweras(pi, rho).unwrap();
                    assert!(k.refines(rho).unwrap());
                    assert_eq!(k.perm(), pi.perm().inverse().compose(&rho.perm()), "{pi} {rho}");
                }
                if *rho == Partition::full(n) {
                    for pi in &all {
                        assert_eq!(relative_kreweras(pi, rho).unwrap(), kreweras(pi));
                    }
                }
            }
        }
        let a: Partition = "{1,2}{3}".parse().unwrap();
        let b: Partition = "{1}{2,3}".parse().unwrap();
        assert!(relative_kreweras(&a, &b).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let rho: Partition = "{1,4,5}{2,3}{6,8}{7}".parse().unwrap();
        let pi: Partition = "{1,3}{2}{4}{5,8}{6,7}".parse().unwrap();
        assert!(interlace_noncrossing(&pi, &rho).unwrap());
        let full = Partition::full(2);
        assert!(!interlace_noncrossing(&full, &full).unwrap());
        assert!(interlace_noncrossing(&Partition::singletons(3), &Partition::full(3)).unwrap());
        assert!(interlace_noncrossing(&full, &Partition::full(3)).is_err());
    }

    #[test]
    fn interlacing_iff_below_complement() {
        for n in 1..=6 {
            let all = enumerate_nc(n).unwrap();
            for rho in &all {
                let k = kreweras(rho);
                for pi in &all {
                    assert_eq!(interlace_noncrossing(pi, rho).unwrap(), pi.refines(&k).unwrap());
                }
            }
        }
    }
}
