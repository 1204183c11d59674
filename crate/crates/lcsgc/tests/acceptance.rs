//! End-to-end acceptance gate: one test per release criterion, each printing
//! a single pass/fail line (visible with `--nocapture`).
//!
//! The timing criterion warns instead of failing when `CI` is set, since
//! shared runners make wall-clock ratios unreliable.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lcsgc::oracle::{oracle_solve, verify_witness};
use lcsgc::solvers::br::{lcs_br_approx, lcs_br_exact, lcs_classic, BrStrategy};
use lcsgc::solvers::constant::lcs_1c;
use lcsgc::solvers::mc::lcs_mc;
use lcsgc::structures::{Grid, SegmentTree2d, SquareRmq, Window, WindowedMaxGrid};
use lcsgc::{
    solve, Algorithm, GapConstraint, GapTuple, ProblemInstance, SigmaConstraints, Variant, Word,
};

fn criterion(number: u32, name: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let verdict = if outcome.is_ok() { "pass" } else { "FAIL" };
    println!("criterion {number} ({name}): {verdict}");
    if let Err(cause) = outcome {
        resume_unwind(cause);
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_word(rng: &mut ChaCha8Rng, len: usize, sigma: u32) -> Word {
    Word::from_symbols((0..len).map(|_| rng.gen_range(1..=sigma.max(1))).collect()).unwrap()
}

fn rand_constraint(rng: &mut ChaCha8Rng, max_bound: u32) -> GapConstraint {
    let l = rng.gen_range(0..=max_bound);
    GapConstraint::new(l, rng.gen_range(l..=max_bound)).unwrap()
}

fn increasing_tuple(rng: &mut ChaCha8Rng, len: usize, max_bound: u32) -> GapTuple {
    let pivot = rng.gen_range(0..=max_bound);
    let mut lowers: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=pivot)).collect();
    let mut uppers: Vec<u32> = (0..len).map(|_| rng.gen_range(pivot..=max_bound)).collect();
    lowers.sort_unstable_by(|a, b| b.cmp(a));
    uppers.sort_unstable();
    let t = GapTuple::new(
        lowers
            .into_iter()
            .zip(uppers)
            .map(|(l, u)| GapConstraint::new(l, u).unwrap())
            .collect(),
    );
    assert!(t.is_increasing());
    t
}

fn synchronized_tuple(rng: &mut ChaCha8Rng, len: usize, max_bound: u32) -> GapTuple {
    let distinct = rng.gen_range(1..=3usize);
    let base = increasing_tuple(rng, distinct, max_bound);
    let mut picks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..distinct)).collect();
    picks.sort_unstable();
    let t = GapTuple::new(picks.into_iter().map(|p| base.get(p + 1)).collect());
    assert!(t.is_synchronized());
    t
}

/// Random instance with word lengths already ordered so tuple lengths match
/// the shorter word after validation.
fn rand_instance(
    rng: &mut ChaCha8Rng,
    variant: Variant,
    max_len: usize,
    sigma: u32,
    max_bound: u32,
    max_b: u32,
) -> ProblemInstance {
    let a = rng.gen_range(1..=max_len);
    let b = rng.gen_range(1..=max_len);
    let (m, n) = (a.min(b), a.max(b));
    let v = rand_word(rng, m, sigma);
    let w = rand_word(rng, n, sigma);
    let gap_len = m - 1;
    let gaps = match variant {
        Variant::Mc => Some(GapTuple::new(
            (0..gap_len)
                .map(|_| rand_constraint(rng, max_bound))
                .collect(),
        )),
        Variant::McInc => Some(increasing_tuple(rng, gap_len, max_bound)),
        Variant::OneC => Some(GapTuple::constant(rand_constraint(rng, max_bound), 1)),
        Variant::O1cSync => Some(synchronized_tuple(rng, gap_len, max_bound)),
        _ => None,
    };
    let sigma_constraints = variant.needs_sigma().then(|| {
        SigmaConstraints::new(
            (0..sigma)
                .map(|_| rand_constraint(rng, max_bound))
                .collect(),
            (0..sigma)
                .map(|_| rand_constraint(rng, max_bound))
                .collect(),
        )
        .unwrap()
    });
    let range_bound = (variant == Variant::Br).then(|| rng.gen_range(1..=max_b.min(n as u32)));
    ProblemInstance::new(v, w, variant, gaps, sigma_constraints, range_bound)
        .validate()
        .unwrap()
}

const ALL_VARIANTS: [Variant; 8] = [
    Variant::Mc,
    Variant::McInc,
    Variant::OneC,
    Variant::O1cSync,
    Variant::SigmaR,
    Variant::SigmaL,
    Variant::Sigma,
    Variant::Br,
];

#[test]
fn criterion_1_oracle_equivalence() {
    criterion(1, "oracle equivalence, 500 instances per variant", || {
        let start = Instant::now();
        for (vi, &variant) in ALL_VARIANTS.iter().enumerate() {
            let mut r = rng(0xACC1 + vi as u64);
            for _ in 0..500 {
                let sigma = r.gen_range(1..=3);
                let inst = rand_instance(&mut r, variant, 9, sigma, 4, 5);
                let fast = solve(&inst, Algorithm::Auto, false).unwrap().length;
                let slow = oracle_solve(&inst, 12).unwrap().length;
                assert_eq!(fast, slow, "variant {variant}, instance {inst:?}");
            }
        }
        assert!(start.elapsed() < Duration::from_secs(300));
    });
}

#[test]
fn criterion_2_cross_algorithm_agreement() {
    criterion(
        2,
        "cross-algorithm agreement, 300 mid-size instances",
        || {
            let mut r = rng(0xACC2);
            for round in 0..300u32 {
                let sigma = r.gen_range(2..=6);
                let (variant, pair): (Variant, [Algorithm; 2]) = match round % 4 {
                    0 => (Variant::SigmaR, [Algorithm::Deque, Algorithm::Rmq]),
                    1 => (Variant::Sigma, [Algorithm::Deque, Algorithm::Rmq]),
                    2 => (Variant::McInc, [Algorithm::Layered, Algorithm::Segtree]),
                    _ => (Variant::Br, [Algorithm::Naive, Algorithm::Blocked]),
                };
                let inst = rand_instance(&mut r, variant, 100, sigma, 8, 16);
                let a = solve(&inst, pair[0], false).unwrap().length;
                let b = solve(&inst, pair[1], false).unwrap().length;
                assert_eq!(a, b, "{variant}: {:?} vs {:?}", pair[0], pair[1]);
            }
        },
    );
}

#[test]
fn criterion_3_trivial_constraint_reduction() {
    criterion(3, "trivial constraints reduce to classic LCS", || {
        let mut r = rng(0xACC3);
        for _ in 0..200 {
            let m = r.gen_range(1..=80);
            let n = r.gen_range(m..=80);
            let sigma = r.gen_range(1..=5);
            let v = rand_word(&mut r, m, sigma);
            let w = rand_word(&mut r, n, sigma);
            let expected = lcs_classic(&v, &w, false).length;
            let trivial = GapConstraint::trivial(n as u32);
            for variant in ALL_VARIANTS {
                let gaps = variant.needs_gap_tuple().then(|| {
                    if variant == Variant::OneC {
                        GapTuple::constant(trivial, 1)
                    } else {
                        GapTuple::constant(trivial, m - 1)
                    }
                });
                let sc = variant
                    .needs_sigma()
                    .then(|| SigmaConstraints::trivial(sigma, n as u32));
                let b = (variant == Variant::Br).then_some(n as u32);
                let inst = ProblemInstance::new(v.clone(), w.clone(), variant, gaps, sc, b)
                    .validate()
                    .unwrap();
                let got = solve(&inst, Algorithm::Auto, false).unwrap().length;
                assert_eq!(got, expected, "variant {variant}");
            }
        }
    });
}

#[test]
fn criterion_4_synchronized_anchor_tuple() {
    criterion(
        4,
        "synchronized check accepts/rejects the anchor tuple",
        || {
            let bounds = [
                (0, 5),
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 1),
                (0, 5),
                (0, 3),
                (0, 4),
            ];
            let tuple = GapTuple::new(
                bounds
                    .iter()
                    .map(|&(l, u)| GapConstraint::new(l, u).unwrap())
                    .collect(),
            );
            assert!(tuple.is_synchronized());

            // swapping entries 7 and 2 (1-based) breaks shifted containment
            let mut swapped = bounds;
            swapped.swap(6, 1);
            let tuple = GapTuple::new(
                swapped
                    .iter()
                    .map(|&(l, u)| GapConstraint::new(l, u).unwrap())
                    .collect(),
            );
            assert!(!tuple.is_synchronized());
        },
    );
}

#[test]
fn criterion_5_approximation_sandwich() {
    criterion(5, "approximation sandwich lower <= exact <= upper", || {
        let mut r = rng(0xACC5);
        for round in 0..200u32 {
            let m = r.gen_range(1..=128);
            let n = r.gen_range(1..=128);
            let sigma = r.gen_range(1..=6);
            let v = rand_word(&mut r, m, sigma);
            let w = rand_word(&mut r, n, sigma);
            let b = [2u32, 4, 8, 16][round as usize % 4].min(m.min(n) as u32);
            let exact = lcs_br_exact(&v, &w, b, BrStrategy::Blocked).unwrap().length;
            let (lower, upper) = lcs_br_approx(&v, &w, b).unwrap();
            assert!(
                lower <= exact && exact <= upper,
                "B={b}: {lower} <= {exact} <= {upper} violated"
            );
        }
    });
}

#[test]
fn criterion_6_structure_shadow_suites() {
    criterion(6, "data structures match brute-force shadows", || {
        windowed_grid_shadow();
        segment_tree_shadow();
        square_rmq_shadow();
    });
}

fn windowed_grid_shadow() {
    let mut r = rng(0xACC6);
    for _ in 0..150 {
        let m = r.gen_range(1..=25);
        let n = r.gen_range(1..=25);
        let rl = r.gen_range(1..=4);
        let cl = r.gen_range(1..=4);
        let window = Window::new(rl, r.gen_range(rl..=6), cl, r.gen_range(cl..=6)).unwrap();
        let hit: Vec<Vec<bool>> = (0..m)
            .map(|_| (0..n).map(|_| r.gen_bool(0.6)).collect())
            .collect();
        let bump: Vec<Vec<u32>> = (0..m)
            .map(|_| (0..n).map(|_| r.gen_range(0..5)).collect())
            .collect();

        let fast = WindowedMaxGrid::new(m, n, window).run_scan(
            |i, j| hit[i - 1][j - 1],
            |i, j, wmax| wmax + bump[i - 1][j - 1],
        );

        let mut shadow = Grid::new(m, n);
        for i in 1..=m {
            for j in 1..=n {
                if hit[i - 1][j - 1] {
                    let wmax = shadow.naive_window_max(
                        i as i64 - window.row_upper as i64,
                        i as i64 - window.row_lower as i64,
                        j as i64 - window.col_upper as i64,
                        j as i64 - window.col_lower as i64,
                    );
                    shadow.set(i, j, wmax + bump[i - 1][j - 1]);
                }
            }
        }
        for i in 1..=m {
            for j in 1..=n {
                assert_eq!(fast.get(i, j), shadow.get(i, j), "cell ({i},{j})");
            }
        }
    }
}

fn segment_tree_shadow() {
    let mut r = rng(0xACC7);
    for _ in 0..60 {
        let m = r.gen_range(1..=40);
        let n = r.gen_range(1..=40);
        let mut tree = SegmentTree2d::new(m, n);
        let mut shadow = vec![vec![0u32; n + 1]; m + 1];
        for _ in 0..300 {
            if r.gen_bool(0.5) {
                // rectangle max-update, deliberately allowed to run off-grid
                let i1 = r.gen_range(-3..=m as i64 + 3);
                let j1 = r.gen_range(-3..=n as i64 + 3);
                let i2 = i1 + r.gen_range(0..=6);
                let j2 = j1 + r.gen_range(0..=6);
                let x = r.gen_range(0..100);
                tree.update(i1, i2, j1, j2, x);
                for i in i1.max(1)..=i2.min(m as i64) {
                    for j in j1.max(1)..=j2.min(n as i64) {
                        let cell = &mut shadow[i as usize][j as usize];
                        *cell = (*cell).max(x);
                    }
                }
            } else {
                let i = r.gen_range(1..=m);
                let j = r.gen_range(1..=n);
                assert_eq!(tree.query(i, j).unwrap(), shadow[i][j], "point ({i},{j})");
            }
        }
    }
}

fn square_rmq_shadow() {
    let mut r = rng(0xACC8);
    for _ in 0..40 {
        let m = r.gen_range(1..=25);
        let n = r.gen_range(1..=25);
        let mut rmq = SquareRmq::new(m, n);
        let mut shadow = Grid::new(m, n);
        for i in 1..=m {
            for j in 1..=n {
                let x = r.gen_range(0..100);
                rmq.insert(i, j, x);
                shadow.set(i, j, x);
            }
            // queries over fully inserted rows, corners allowed off-grid low
            for _ in 0..8 {
                let side = r.gen_range(0..=6i64);
                let i2 = r.gen_range(1..=i as i64);
                let j2 = r.gen_range(1..=n as i64);
                let got = rmq.query_square(i2 - side, i2, j2 - side, j2).unwrap();
                let want = shadow.naive_window_max(i2 - side, i2, j2 - side, j2);
                assert_eq!(
                    got,
                    want,
                    "square [{},{i2}]x[{},{j2}]",
                    i2 - side,
                    j2 - side
                );
            }
        }
    }
}

#[test]
fn criterion_7_witness_validity() {
    criterion(7, "every produced witness verifies", || {
        let mut r = rng(0xACC9);
        for _ in 0..200 {
            // classic LCS witnesses on mid-size words
            let m = r.gen_range(1..=60);
            let n = r.gen_range(m..=60);
            let sigma = r.gen_range(1..=4);
            let v = rand_word(&mut r, m, sigma);
            let w = rand_word(&mut r, n, sigma);
            let inst =
                ProblemInstance::new(v.clone(), w.clone(), Variant::Classic, None, None, None)
                    .validate()
                    .unwrap();
            let res = lcs_classic(&inst.v, &inst.w, true);
            assert!(res.witness.is_some());
            assert!(verify_witness(&inst, &res), "classic witness rejected");
        }
        for _ in 0..200 {
            // layered solver witnesses under random gap tuples
            let sigma = r.gen_range(1..=4);
            let mut inst = rand_instance(&mut r, Variant::Mc, 40, sigma, 5, 1);
            let res = lcs_mc(&inst.v, &inst.w, inst.gaps.as_ref().unwrap(), true).unwrap();
            assert!(res.witness.is_some());
            assert!(verify_witness(&inst, &res), "layered witness rejected");
            // oracle witnesses on a truncated copy of the same instance
            let sigma = r.gen_range(1..=3);
            inst = rand_instance(&mut r, Variant::Mc, 8, sigma, 4, 1);
            let res = oracle_solve(&inst, 12).unwrap();
            assert!(res.witness.is_some());
            assert!(verify_witness(&inst, &res), "oracle witness rejected");
        }
    });
}

fn time_best_of<T>(runs: u32, mut f: impl FnMut() -> T) -> Duration {
    (0..runs)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .min()
        .unwrap()
}

#[test]
fn criterion_8_complexity_smoke() {
    criterion(
        8,
        "complexity smoke: linear-in-N scan, linear-in-k layers",
        || {
            let warn_only = std::env::var_os("CI").is_some();
            let check = |label: &str, ratio: f64, limit: f64| {
                if ratio <= limit {
                    return;
                }
                let msg = format!("{label}: time ratio {ratio:.2} exceeds {limit}");
                if warn_only {
                    eprintln!("warning (CI): {msg}");
                } else {
                    panic!("{msg}");
                }
            };

            // one scan per size; N grows 4x, the scan is amortized O(N)
            let mut r = rng(0xACCA);
            let c = GapConstraint::new(1, 4).unwrap();
            let words: Vec<(Word, Word)> = [2048usize, 4096]
                .iter()
                .map(|&s| (rand_word(&mut r, s, 4), rand_word(&mut r, s, 4)))
                .collect();
            let small = time_best_of(3, || lcs_1c(&words[0].0, &words[0].1, c).length);
            let large = time_best_of(3, || lcs_1c(&words[1].0, &words[1].1, c).length);
            check(
                "windowed scan 2048 -> 4096",
                large.as_secs_f64() / small.as_secs_f64().max(1e-9),
                6.0,
            );

            // fixed N, achievable subsequence length doubles: layer count doubles
            let n = 256usize;
            let w = rand_word(&mut r, n, 1);
            let mut half = w.symbols().to_vec();
            for s in half.iter_mut().skip(n / 2) {
                *s = 2; // second half mismatches, halving the best length
            }
            let v_half = Word::from_symbols(half).unwrap();
            let gaps = GapTuple::constant(GapConstraint::trivial(n as u32), n - 1);
            let t_half = time_best_of(3, || lcs_mc(&v_half, &w, &gaps, false).unwrap().length);
            let t_full = time_best_of(3, || lcs_mc(&w, &w, &gaps, false).unwrap().length);
            assert_eq!(lcs_mc(&v_half, &w, &gaps, false).unwrap().length, n / 2);
            assert_eq!(lcs_mc(&w, &w, &gaps, false).unwrap().length, n);
            check(
                "layered solver k -> 2k at fixed N",
                t_full.as_secs_f64() / t_half.as_secs_f64().max(1e-9),
                2.5,
            );
        },
    );
}
