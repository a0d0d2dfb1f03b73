//! Seeded, named verification suites. Each suite sweeps a statement
//! exhaustively or over random exact instances and reports every mismatch.

mod combinatorics;
mod pairs;
mod products;
mod report;
mod series;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Result};
use report::Recorder;
pub use report::{Failure, Params, VerificationReport};

type Runner = fn(&Params, &mut Recorder) -> Result<()>;

/// A named suite with its parameter defaults.
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub default_degree: usize,
    pub max_degree: usize,
    pub default_instances: usize,
    run: Runner,
}

macro_rules! suite {
    ($name:expr, $about:expr, $d:expr, $max:expr, $n:expr, $run:path) => {
        Suite { name: $name, about: $about, default_degree: $d, max_degree: $max, default_instances: $n, run: $run }
    };
}

/// Every suite, in a fixed order.
pub static SUITES: &[Suite] = &[
    suite!(
        "zetamoeb",
        "Zeta ⋆ Moeb = Moeb ⋆ Zeta = Sum, plus ⋆ associativity, one-variable commutativity and centrality",
        8,
        10,
        10,
        series::zetamoeb
    ),
    suite!("prop2.4", "interlacing π with ρ is non-crossing iff π ≤ K(ρ)", 6, 8, 1, combinatorics::interlacing),
    suite!(
        "prop4.4",
        "intervals of NC(n) against parity-preserving NC(2n), and K_ρ(π) through NC(2n)",
        5,
        6,
        1,
        combinatorics::intervals_through_2n
    ),
    suite!(
        "cor4.5",
        "interval count = (3n)!/(n!(2n+1)!) = parity-alternating = parity-preserving counts",
        5,
        6,
        1,
        combinatorics::interval_counts
    ),
    suite!("lemma4.7", "an odd block exists iff a singleton or odd block with odd gaps exists", 10, 12, 1, combinatorics::odd_blocks),
    suite!(
        "thm1.5",
        "(a1p1, p2a2) is R-diagonal with determining series f ⋆ R(μ_{p1p2}); (a1p1, a2p2) need not be",
        8,
        10,
        20,
        pairs::conjugated_pairs
    ),
    suite!("cor1.8", "determining series of (a1p1, p2a2) equals f ⋆ R(μ_{p1p2})", 8, 10, 20, pairs::conjugated_determining),
    suite!(
        "prop1.7",
        "determining series equals R(μ_{a1a2}) ⋆ Moeb; circular and Haar specializations",
        8,
        10,
        20,
        pairs::determining_from_moments
    ),
    suite!("prop5.3", "same checks as prop1.7", 8, 10, 20, pairs::determining_from_moments),
    suite!(
        "prop5.1",
        "moment and cumulant forms of diagonal balance agree; odd alternating rotations vanish",
        8,
        10,
        20,
        pairs::balance_forms
    ),
    suite!("app1.10", "Re and Im of up are free exactly when R(μ_{pp*}) = z/(1-z)", 10, 12, 10, series::free_re_im),
    suite!("prop7.3", "product moments of x and y against the C_Q and C_R sums", 6, 6, 5, products::layout_sums),
    suite!("cor7.4", "unbalanced ε give vanishing x and y moments for R-diagonal a", 5, 6, 5, products::unbalanced_vanish),
    suite!(
        "prop7.7",
        "C_Q preserves ε-alternation; the complement relation is transitive; C_Q is the largest compatible partition",
        8,
        10,
        1,
        combinatorics::complement_structure
    ),
    suite!("cor7.8", "C_Q blocks are twice the C_R blocks under a size-respecting matching", 8, 10, 1, combinatorics::complement_doubling),
    suite!("prop7.9", "x and y moments agree for R-diagonal a", 6, 6, 5, products::x_y_agree),
    suite!("thm1.13", "{u p_j1, p_j2 u⁻¹} are free over j, by cumulants and by the free-copy moments", 6, 6, 5, products::haar_conjugates),
    suite!(
        "prop8.8",
        "moments of the a_{j,l} against the C_Q sum with Haar moments and the free-copy sum",
        4,
        4,
        2,
        products::haar_product_sums
    ),
    suite!("cor8.9", "all-2 and unbalanced words in the a_{j,l} have vanishing moments", 6, 6, 2, products::haar_vanishing),
    suite!(
        "prop8.11",
        "ε-alternation iff no singletons, no odd rotated alternating block, and even C_Q blocks",
        8,
        10,
        1,
        combinatorics::eps_alternation
    ),
    suite!("thm1.14", "{b'a_ib''} is free from {a_i}; the product-moment criterion holds", 6, 6, 10, products::sandwich_freeness),
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs `name` with optional overrides of its degree and instance count.
///
/// ```
/// let r = ncfree::verify::run("lemma4.7", Some(6), None, 0).unwrap();
/// assert!(r.passed());
/// ```
pub fn run(name: &str, degree: Option<usize>, instances: Option<usize>, seed: u64) -> Result<VerificationReport> {
    let Some(s) = suite(name) else {
        return domain(format!("unknown suite {name:?}"));
    };
    let degree = degree.unwrap_or(s.default_degree);
    if degree == 0 || degree > s.max_degree {
        return domain(format!("{name} takes a degree in 1..={}", s.max_degree));
    }
    let instances = instances.unwrap_or(s.default_instances);
    if instances == 0 {
        return domain("need at least one instance");
    }
    let params = Params { degree, instances, seed };
    let start = Instant::now();
    let mut rec = Recorder::default();
    (s.run)(&params, &mut rec)?;
    let mut failures = rec.failures;
    failures.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(VerificationReport { suite: name.to_string(), params, cases: rec.cases, failures, wall_time: start.elapsed() })
}

/// Generator for instance `i`: one ChaCha stream per instance.
pub(crate) fn instance_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}
