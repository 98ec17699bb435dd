//! The release gate: one check per advertised guarantee, each printed as a
//! pass/fail line.  Run with `--nocapture` to see the report on success.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use decmin::canonical::{canonical_decomposition, decomposition_from_decmin};
use decmin::core::{IntVector, Subset, SupermodularInstance};
use decmin::duality;
use decmin::instances::orientation_instance;
use decmin::matroid::DecMinMatroid;
use decmin::reference::{
    brute_dec_min, brute_inc_max, brute_min_sqsum, enumerate_members, EnumerationBudget,
};
use decmin::solver::{self, DecMinWitness};
use decmin_cli::VerifyDocument;
use decmin_testkit as kit;
use kit::{ChaCha8Rng, SeedableRng};

const CORPUS_SEED: u64 = 6011;
const CORPUS_SIZE: usize = 200;

struct Entry {
    label: String,
    inst: SupermodularInstance,
    members: Vec<IntVector>,
    dec: Vec<IntVector>,
}

fn build_corpus() -> Vec<Entry> {
    kit::corpus(CORPUS_SEED, CORPUS_SIZE)
        .into_iter()
        .map(|e| {
            let budget = EnumerationBudget::auto(&e.instance).unwrap();
            let members = enumerate_members(&e.instance, &budget).unwrap();
            assert!(!members.is_empty(), "{}: no members", e.label);
            let dec = brute_dec_min(&e.instance, &budget).unwrap();
            Entry { label: e.label, inst: e.instance, members, dec }
        })
        .collect()
}

fn vec4(v: [i64; 4]) -> IntVector {
    IntVector::from(v)
}

fn criterion_01_triangle_census() {
    let start = Instant::now();
    let inst = orientation_instance(&kit::triangle_with_parallel());
    let budget = EnumerationBudget::auto(&inst).unwrap();
    let members = enumerate_members(&inst, &budget).unwrap();
    let expected: Vec<IntVector> = [
        [0, 1, 3], [0, 2, 2], [0, 3, 1], [1, 0, 3], [1, 1, 2],
        [1, 2, 1], [1, 3, 0], [2, 0, 2], [2, 1, 1], [2, 2, 0],
    ]
    .into_iter()
    .map(IntVector::from)
    .collect();
    assert_eq!(members, expected, "member census");
    let dec = brute_dec_min(&inst, &budget).unwrap();
    let perms: Vec<IntVector> =
        [[1, 1, 2], [1, 2, 1], [2, 1, 1]].into_iter().map(IntVector::from).collect();
    assert_eq!(dec, perms, "dec-min permutations");
    let (w, _) = brute_min_sqsum(&inst, &budget).unwrap();
    assert_eq!(w, 6, "minimum square-sum");
    assert!(start.elapsed() < Duration::from_secs(1), "too slow: {:.2?}", start.elapsed());
}

fn criterion_02_heavy_cycle_structure() {
    let start = Instant::now();
    let inst = orientation_instance(&kit::heavy_four_cycle());
    match solver::is_dec_min(&inst, &vec4([3, 2, 2, 1])).unwrap() {
        DecMinWitness::DecMin { chain } => {
            assert_eq!(chain, vec![Subset::from_mask(0b0011), Subset::from_mask(0b1111)]);
        }
        DecMinWitness::NotDecMin { .. } => panic!("(3,2,2,1) must be dec-min"),
    }
    let budget = EnumerationBudget::auto(&inst).unwrap();
    let dec = brute_dec_min(&inst, &budget).unwrap();
    let expected: Vec<IntVector> =
        [[2, 3, 1, 2], [2, 3, 2, 1], [3, 2, 1, 2], [3, 2, 2, 1]]
            .into_iter()
            .map(IntVector::from)
            .collect();
    assert_eq!(dec, expected, "dec-min set");
    let d = canonical_decomposition(&inst).unwrap();
    assert_eq!(d.betas(), &[3, 2], "value levels");
    assert_eq!(
        d.partition(),
        &[Subset::from_mask(0b0011), Subset::from_mask(0b1100)],
        "partition"
    );
    assert!(start.elapsed() < Duration::from_secs(1), "too slow: {:.2?}", start.elapsed());
}

fn criterion_03_degenerate_block_long_chain() {
    let start = Instant::now();
    let inst = orientation_instance(&kit::bridged_bundles());
    let d = canonical_decomposition(&inst).unwrap();
    assert_eq!(d.chain(), &[inst.full()], "canonical chain is the full set alone");
    let uniform = IntVector::new(vec![2; 6]);
    match solver::is_dec_min(&inst, &uniform).unwrap() {
        DecMinWitness::NotDecMin { .. } => panic!("the uniform vector must be dec-min"),
        DecMinWitness::DecMin { chain } => {
            assert_eq!(chain.len(), 4, "witness chain length");
            assert_eq!(*chain.last().unwrap(), inst.full());
            for w in chain.windows(2) {
                assert!(w[0].is_subset_of(w[1]) && w[0] != w[1], "chain must increase");
            }
            for &c in &chain {
                assert!(inst.is_tight(&uniform, c), "chain sets must be tight");
                assert!(solver::is_top_set(&uniform, c), "chain sets must be top");
            }
        }
    }
    assert!(start.elapsed() < Duration::from_secs(1), "too slow: {:.2?}", start.elapsed());
}

fn criterion_04_four_point_ordering() {
    let inst = kit::four_point_table();
    let z1 = vec4([2, 3, 3, 1]);
    let z2 = vec4([3, 3, 3, 0]);
    let z3 = vec4([2, 2, 4, 1]);
    let z4 = vec4([3, 2, 4, 0]);
    for (a, b) in [(&z1, &z2), (&z2, &z3), (&z3, &z4)] {
        assert_eq!(solver::dec_compare(a, b).unwrap(), std::cmp::Ordering::Less);
    }
    assert_eq!([&z1, &z2, &z3, &z4].map(duality::square_sum), [23, 27, 25, 29]);
    let budget = EnumerationBudget::uniform(4, -1, 5);
    assert_eq!(brute_dec_min(&inst, &budget).unwrap(), vec![z1]);
}

fn criterion_05_duality(corpus: &[Entry]) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let fixtures = [
        orientation_instance(&kit::triangle_with_parallel()),
        orientation_instance(&kit::heavy_four_cycle()),
    ];
    let all: Vec<(&str, &SupermodularInstance)> = fixtures
        .iter()
        .map(|inst| ("fixture", inst))
        .chain(corpus.iter().map(|e| (e.label.as_str(), &e.inst)))
        .collect();
    for (label, inst) in all {
        let budget = EnumerationBudget::auto(inst).unwrap();
        let (w_min, _) = brute_min_sqsum(inst, &budget).unwrap();
        let d = canonical_decomposition(inst).unwrap();
        let pi_star = duality::canonical_dual(&d);
        let dual = duality::dual_value(inst, &pi_star).unwrap();
        assert_eq!(dual, w_min, "{label}: duality gap {}", w_min - dual);
        for _ in 0..50 {
            let pi = kit::random_vector(&mut rng, inst.n(), -7, 7);
            assert!(
                duality::dual_value(inst, &pi).unwrap() <= w_min,
                "{label}: weak duality broken by {pi:?}"
            );
        }
    }
    assert!(start.elapsed() < Duration::from_secs(60), "too slow: {:.2?}", start.elapsed());
}

fn criterion_06_five_way_equivalence(corpus: &[Entry]) {
    for e in corpus {
        let budget = EnumerationBudget::auto(&e.inst).unwrap();
        assert_eq!(brute_inc_max(&e.inst, &budget).unwrap(), e.dec, "{}: inc-max", e.label);
        let (_, sq) = brute_min_sqsum(&e.inst, &budget).unwrap();
        assert_eq!(sq, e.dec, "{}: square-sum", e.label);

        let best_diff = e.members.iter().map(duality::difference_sum).min().unwrap();
        let diff: Vec<&IntVector> = e
            .members
            .iter()
            .filter(|m| duality::difference_sum(m) == best_diff)
            .collect();
        assert_eq!(diff, e.dec.iter().collect::<Vec<_>>(), "{}: difference-sum", e.label);

        let n = e.inst.n();
        let minima: Vec<i64> = (1..=n)
            .map(|k| e.members.iter().map(|m| solver::k_largest_sum(m, k).unwrap()).min().unwrap())
            .collect();
        let simultaneous: Vec<&IntVector> = e
            .members
            .iter()
            .filter(|m| (1..=n).all(|k| solver::k_largest_sum(m, k).unwrap() == minima[k - 1]))
            .collect();
        assert_eq!(
            simultaneous,
            e.dec.iter().collect::<Vec<_>>(),
            "{}: k-largest sums",
            e.label
        );
    }
}

fn criterion_07_matroid_structure(corpus: &[Entry]) {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for e in corpus {
        let d = canonical_decomposition(&e.inst).unwrap();
        let matroid = DecMinMatroid::new(d);
        assert_eq!(matroid.enumerate_dec_min().unwrap(), e.dec, "{}: enumeration", e.label);

        for i in 0..matroid.q() {
            let bases = matroid.block_bases(i);
            for &b1 in bases {
                for &b2 in bases {
                    for x in (b1 - b2).iter() {
                        assert!(
                            (b2 - b1).iter().any(|y| bases.contains(&b1.without(x).with(y))),
                            "{}: basis exchange fails in block {i}",
                            e.label
                        );
                    }
                }
            }
        }

        let mut constant = e.inst.full();
        for m in &e.dec {
            for s in 0..e.inst.n() {
                if m.get(s) != e.dec[0].get(s) {
                    constant = constant.without(s);
                }
            }
        }
        assert_eq!(matroid.value_fixed_all(), constant, "{}: value-fixed", e.label);

        for _ in 0..20 {
            let cost = kit::random_costs(&mut rng, e.inst.n());
            let pick = matroid.cheapest_dec_min(&cost).unwrap();
            let price = |m: &IntVector| -> f64 {
                m.iter().zip(&cost).map(|(&v, c)| v as f64 * c).sum()
            };
            let best = e.dec.iter().map(&price).fold(f64::INFINITY, f64::min);
            assert!(
                e.dec.contains(&pick) && (price(&pick) - best).abs() < 1e-9,
                "{}: cheapest pick {:?} at {} vs {}",
                e.label,
                pick,
                price(&pick),
                best
            );
        }
    }
}

fn criterion_08_canonical_agreement(corpus: &[Entry]) {
    for e in corpus {
        let d = canonical_decomposition(&e.inst).unwrap();
        for m in &e.dec {
            assert_eq!(
                decomposition_from_decmin(&e.inst, m).unwrap(),
                d,
                "{}: recovery from {m:?}",
                e.label
            );
        }
    }
}

fn criterion_09_local_exchange_test(corpus: &[Entry]) {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for e in corpus {
        let budget = EnumerationBudget::auto(&e.inst).unwrap();
        let phis: Vec<duality::PhiTable> = budget
            .lo()
            .iter()
            .zip(budget.hi())
            .map(|(&lo, &hi)| kit::random_convex_phi(&mut rng, lo - 1, hi + 1))
            .collect();
        let total = |m: &IntVector| -> i64 {
            m.iter().enumerate().map(|(s, &v)| phis[s].value(v).unwrap()).sum()
        };
        let best = e.members.iter().map(&total).min().unwrap();
        for m in &e.members {
            assert_eq!(
                duality::groenevelt_check(&e.inst, m, &phis).unwrap(),
                total(m) == best,
                "{}: local test at {m:?}",
                e.label
            );
        }
    }
}

fn criterion_10_intersections_break_the_equivalences() {
    // crossing two of these sets, the objectives part ways: the library
    // documents that none of its guarantees survive the intersection
    let (dec, inc) = kit::decmin_vs_incmax_pair();
    assert_eq!(solver::dec_compare(&dec, &inc).unwrap(), std::cmp::Ordering::Less);
    assert_eq!(solver::inc_compare(&inc, &dec).unwrap(), std::cmp::Ordering::Greater);
    let (dec2, sq2) = kit::decmin_vs_sqsum_pair();
    assert_eq!(solver::dec_compare(&dec2, &sq2).unwrap(), std::cmp::Ordering::Less);
    assert!(duality::square_sum(&sq2) < duality::square_sum(&dec2));
}

fn criterion_11_cli_round_trip() {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/heavy4.json");
    let solve = |()| {
        let out = Command::new(env!("CARGO_BIN_EXE_decmin"))
            .args(["solve", data.to_str().unwrap(), "--json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "solve failed: {}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let first = solve(());
    let second = solve(());
    assert_eq!(first, second, "solve output must be byte-identical across runs");

    let mut child = Command::new(env!("CARGO_BIN_EXE_decmin"))
        .args(["verify", data.to_str().unwrap(), "--from-solve", "-", "--json"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary runs");
    use std::io::Write;
    child.stdin.take().unwrap().write_all(&first).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "verify failed: {}", String::from_utf8_lossy(&out.stderr));
    let doc: VerifyDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc.is_member, "member verdict");
    assert!(doc.is_dec_min, "dec-min verdict");
    assert!(doc.chain.is_some(), "witness chain present");
    let dual = doc.dual.expect("dual block present");
    assert_eq!(dual.gap, 0, "duality gap");
    assert!(dual.o1 && dual.o2, "optimality criteria");
}

#[test]
fn acceptance_gate() {
    let corpus = build_corpus();
    let mut failures: Vec<String> = Vec::new();
    let previous_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));

    let mut run = |slug: &str, check: Box<dyn FnOnce() + '_>| {
        let start = Instant::now();
        match catch_unwind(AssertUnwindSafe(check)) {
            Ok(()) => println!("criterion {slug} ... PASS ({:.2?})", start.elapsed()),
            Err(payload) => {
                let message = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "non-string panic".into());
                println!("criterion {slug} ... FAIL");
                failures.push(format!("{slug}: {message}"));
            }
        }
    };

    run("01 triangle-orientation-census", Box::new(criterion_01_triangle_census));
    run("02 heavy-cycle-structure", Box::new(criterion_02_heavy_cycle_structure));
    run("03 degenerate-block-long-chain", Box::new(criterion_03_degenerate_block_long_chain));
    run("04 four-point-ordering", Box::new(criterion_04_four_point_ordering));
    run("05 strong-and-weak-duality", Box::new(|| criterion_05_duality(&corpus)));
    run("06 five-way-equivalence", Box::new(|| criterion_06_five_way_equivalence(&corpus)));
    run("07 matroid-structure", Box::new(|| criterion_07_matroid_structure(&corpus)));
    run("08 canonical-agreement", Box::new(|| criterion_08_canonical_agreement(&corpus)));
    run("09 local-exchange-test", Box::new(|| criterion_09_local_exchange_test(&corpus)));
    run("10 intersection-limitations", Box::new(criterion_10_intersections_break_the_equivalences));
    run("11 cli-round-trip", Box::new(criterion_11_cli_round_trip));

    std::panic::set_hook(previous_hook);
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
