//! Acceptance suite: one test per release criterion, each printing a
//! pass line (visible with `--nocapture`). Tolerances are pinned in the
//! assertions themselves.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use num_rational::Rational64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pairscore::ingest::parse_results;
use pairscore::report::Report;
use pairscore_core::{
    aggregate_total, assess_group, rank_groups, BandScheme, BoardField, Direction, EventRecord,
    FieldEntry, GroupAssessment, LabelCounts, Percentage, Rule,
};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn pass(number: u32, what: &str) {
    println!("acceptance criterion {number} ({what}): PASS");
}

fn ratio(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn assessments_from_fixture(name: &str) -> Vec<GroupAssessment> {
    let path = fixture(name);
    let rows = parse_results(
        &path.display().to_string(),
        std::fs::File::open(&path).expect("fixture exists"),
    )
    .expect("fixture parses");
    let scheme = BandScheme::default();
    let mut groups: Vec<(String, Vec<Percentage>)> = Vec::new();
    for row in rows {
        match groups.iter_mut().find(|(id, _)| *id == row.group) {
            Some((_, scores)) => scores.push(row.percentage),
            None => groups.push((row.group, vec![row.percentage])),
        }
    }
    groups
        .iter()
        .map(|(id, scores)| assess_group(id, scores, &scheme).expect("group assesses"))
        .collect()
}

#[test]
fn criterion_1_first_application_reproduction() {
    let started = Instant::now();
    let assessments = assessments_from_fixture("patras.csv");
    let outcome = rank_groups(&assessments).unwrap();
    let elapsed = started.elapsed();

    assert_eq!(assessments.len(), 2);
    let (c1, c2) = (&assessments[0], &assessments[1]);
    assert_eq!(c1.counts.n() + c2.counts.n(), 17);

    assert_eq!(
        c1.membership.values(),
        [ratio(2, 9), ratio(2, 9), ratio(1, 9), ratio(4, 9), ratio(0, 1)]
    );
    assert_eq!(
        c2.membership.values(),
        [ratio(1, 8), ratio(2, 8), ratio(2, 8), ratio(3, 8), ratio(0, 1)]
    );
    assert_eq!(c1.centroid.x(), ratio(41, 18));
    assert_eq!(c2.centroid.x(), ratio(38, 16));
    assert!((c1.centroid.x_f64() - 2.278).abs() < 0.001);
    assert!((c2.centroid.x_f64() - 2.375).abs() < 0.001);
    assert!((c1.mean_f64() - 49.909).abs() < 0.001);
    assert!((c2.mean_f64() - 49.995).abs() < 0.001);

    assert_eq!(outcome.classes, vec![vec!["C2".to_string()], vec!["C1".to_string()]]);
    assert!(elapsed.as_secs_f64() < 1.0, "pipeline took {elapsed:?}");
    pass(1, "first application reproduced");
}

#[test]
fn criterion_2_second_application_reproduction() {
    let assessments = assessments_from_fixture("menwomen.csv");
    let (men, women) = (&assessments[0], &assessments[1]);

    assert_eq!(
        men.membership.values(),
        [ratio(0, 1), ratio(1, 9), ratio(7, 9), ratio(1, 9), ratio(0, 1)]
    );
    assert_eq!(
        women.membership.values(),
        [ratio(0, 1), ratio(1, 5), ratio(3, 5), ratio(1, 5), ratio(0, 1)]
    );
    assert_eq!(men.centroid.x(), ratio(5, 2));
    assert_eq!(women.centroid.x(), ratio(5, 2));
    assert_eq!(men.centroid.y(), ratio(51, 162));
    assert_eq!(women.centroid.y(), ratio(11, 50));
    assert!((men.mean_f64() - 52.696).abs() < 0.001);
    assert!((women.mean_f64() - 53.57).abs() < 0.001);

    let outcome = rank_groups(&assessments).unwrap();
    let report = Report::build(assessments.clone(), outcome);
    assert_eq!(
        report.outcome.classes,
        vec![vec!["men".to_string()], vec!["women".to_string()]]
    );
    assert_eq!(report.outcome.rules, vec![Rule::HigherYcHighXc]);
    assert_eq!(
        report.mean_ranking,
        vec![vec!["women".to_string()], vec!["men".to_string()]]
    );
    assert!(report.divergence);
    pass(2, "second application reproduced, divergence flagged");
}

#[test]
fn criterion_3_extreme_points() {
    let worst = LabelCounts::new(1, 0, 0, 0, 0).unwrap().membership().centroid();
    assert_eq!((worst.x(), worst.y()), (ratio(1, 2), ratio(1, 2)));

    let uniform = LabelCounts::new(1, 1, 1, 1, 1).unwrap().membership().centroid();
    assert_eq!((uniform.x(), uniform.y()), (ratio(5, 2), ratio(1, 10)));

    let ideal = LabelCounts::new(0, 0, 0, 0, 1).unwrap().membership().centroid();
    assert_eq!((ideal.x(), ideal.y()), (ratio(9, 2), ratio(1, 2)));
    pass(3, "extreme points exact");
}

/// Quadrature of the bar-graph moment integrals, independent of the closed
/// forms.
fn centroid_by_quadrature(heights: [f64; 5]) -> (f64, f64) {
    const STEPS: usize = 256;
    let mut moment_x = 0.0;
    let mut moment_y = 0.0;
    let mut area = 0.0;
    for (i, &h) in heights.iter().enumerate() {
        let dx = 1.0 / STEPS as f64;
        let mut x_integral = 0.0;
        for k in 0..STEPS {
            x_integral += (i as f64 + (k as f64 + 0.5) * dx) * dx;
        }
        moment_x += h * x_integral;
        let dy = h / STEPS as f64;
        let mut y_integral = 0.0;
        for k in 0..STEPS {
            y_integral += (k as f64 + 0.5) * dy * dy;
        }
        moment_y += y_integral;
        area += h;
    }
    (moment_x / area, moment_y / area)
}

#[test]
fn criterion_4_membership_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7061697273636f72);
    let mut sampled = 0;
    let mut uniform_seen = 0;
    while sampled < 10_000 {
        let weights: [u32; 5] = std::array::from_fn(|_| rng.random_range(0..=1_000));
        if weights.iter().all(|&w| w == 0) {
            continue;
        }
        let counts =
            LabelCounts::new(weights[0], weights[1], weights[2], weights[3], weights[4]).unwrap();
        let membership = counts.membership();

        // normalization, exact
        let sum: Rational64 = membership.values().iter().sum();
        assert_eq!(sum, Rational64::from_integer(1));

        // rectangle bounds, exact
        let centroid = membership.centroid();
        assert!(centroid.x() >= ratio(1, 2) && centroid.x() <= ratio(9, 2));
        assert!(centroid.y() >= ratio(1, 10) && centroid.y() <= ratio(1, 2));

        // the y_c minimum is attained only at the uniform vector
        if membership.is_uniform() {
            assert_eq!(centroid.y(), ratio(1, 10));
            uniform_seen += 1;
        } else {
            assert!(centroid.y() > ratio(1, 10));
        }

        // closed form against the quadrature oracle
        let heights = membership.values().map(|v| v.to_f64().unwrap());
        let (x_ref, y_ref) = centroid_by_quadrature(heights);
        assert!((centroid.x_f64() - x_ref).abs() < 1e-9);
        assert!((centroid.y_f64() - y_ref).abs() < 1e-9);

        sampled += 1;
    }

    // the uniform vector itself, in case sampling never produced one
    let uniform = LabelCounts::new(7, 7, 7, 7, 7).unwrap().membership();
    assert!(uniform.is_uniform());
    assert_eq!(uniform.centroid().y(), ratio(1, 10));
    assert_eq!(uniform.centroid().x(), ratio(5, 2));
    // and any perturbation of it leaves the minimum
    let perturbed = LabelCounts::new(8, 7, 7, 7, 6).unwrap().membership();
    assert!(perturbed.centroid().y() > ratio(1, 10));

    pass(
        4,
        &format!("10000 random vectors checked ({uniform_seen} uniform)"),
    );
}

/// Direct reading of the matchpoint rule, used as the oracle.
fn matchpoints_by_pairwise_comparison(scores: &[i64]) -> Vec<u32> {
    scores
        .iter()
        .enumerate()
        .map(|(i, &mine)| {
            let mut mp = 0;
            for (j, &theirs) in scores.iter().enumerate() {
                if i != j && mine > theirs {
                    mp += 2;
                } else if i != j && mine == theirs {
                    mp += 1;
                }
            }
            mp
        })
        .collect()
}

#[test]
fn criterion_5_matchpoint_conservation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x626f61726473);
    for trial in 0..1_000 {
        let n = rng.random_range(2..=12usize);
        // a narrow score range keeps ties frequent
        let scores: Vec<i64> = (0..n).map(|_| rng.random_range(-6..=6)).collect();
        let field = BoardField {
            board_id: format!("t{trial}"),
            direction: Direction::NS,
            entries: scores
                .iter()
                .enumerate()
                .map(|(i, &s)| FieldEntry {
                    pair_id: format!("P{i}"),
                    comparable_score: s,
                })
                .collect(),
        };
        let awards = field.matchpoints();

        let earned: Vec<u32> = awards.iter().map(|a| a.matchpoints).collect();
        assert_eq!(earned, matchpoints_by_pairwise_comparison(&scores));

        let total: u64 = earned.iter().map(|&mp| u64::from(mp)).sum();
        assert_eq!(total, (n * (n - 1)) as u64);

        // field-average percentage is exactly 50%: total over n * 2(n-1)
        let possible: u64 = awards.iter().map(|a| u64::from(a.max_matchpoints)).sum();
        assert_eq!(
            Rational64::new(total as i64, possible as i64),
            Rational64::new(1, 2)
        );
    }
    pass(5, "1000 random fields conserve n(n-1) and average 50%");
}

#[test]
fn criterion_6_aggregation_rule() {
    let records = |scores: &[&str]| -> Vec<EventRecord> {
        scores
            .iter()
            .enumerate()
            .map(|(i, s)| EventRecord {
                player_id: "p".to_string(),
                event_index: i as u32 + 1,
                percentage: s.parse().unwrap(),
            })
            .collect()
    };

    // six events: exactly one worst dropped
    let six = aggregate_total(&records(&["60", "55", "50", "45", "40", "58"]), 6, 5)
        .unwrap()
        .unwrap();
    assert_eq!(six, ratio(268, 5)); // 53.6

    // six events with duplicated minima: exactly one instance dropped
    let tied = aggregate_total(&records(&["42", "42", "50", "50", "50", "50"]), 6, 5)
        .unwrap()
        .unwrap();
    assert_eq!(tied, ratio(242, 5)); // (42 + 200) / 5

    // five events: every score counts
    let five = aggregate_total(&records(&["60", "55", "50", "45", "40"]), 6, 5)
        .unwrap()
        .unwrap();
    assert_eq!(five, Rational64::from_integer(50));

    // four events: excluded
    assert_eq!(
        aggregate_total(&records(&["60", "55", "50", "45"]), 6, 5).unwrap(),
        None
    );
    pass(6, "best-five-of-six aggregation verified");
}

fn run_command(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairscore"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_7_cli_determinism() {
    let patras = fixture("patras.csv");
    let menwomen = fixture("menwomen.csv");
    let boards = fixture("boards.csv");
    let events = fixture("events.csv");
    let bands = fixture("bands_default.csv");
    let commands: Vec<Vec<&str>> = vec![
        vec!["assess", patras.to_str().unwrap()],
        vec!["assess", patras.to_str().unwrap(), "--format", "json"],
        vec![
            "assess",
            menwomen.to_str().unwrap(),
            "--bands",
            bands.to_str().unwrap(),
        ],
        vec!["compare", menwomen.to_str().unwrap(), "--format", "json"],
        vec!["score", boards.to_str().unwrap()],
        vec!["score", boards.to_str().unwrap(), "--format", "json"],
        vec!["aggregate", events.to_str().unwrap()],
        vec!["aggregate", events.to_str().unwrap(), "--format", "json"],
    ];
    for args in &commands {
        let first = run_command(args);
        let second = run_command(args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "stdout differs for {args:?}");
        assert_eq!(first.stderr, second.stderr, "stderr differs for {args:?}");
    }

    // plot twice into separate directories; the files must match byte for byte
    let read_outputs = |dir: &Path| -> Vec<(String, Vec<u8>)> {
        let bars = dir.join("bars.svg");
        let centroids = dir.join("centroids.svg");
        let status = run_command(&[
            "plot",
            patras.to_str().unwrap(),
            "--bars",
            bars.to_str().unwrap(),
            "--centroids",
            centroids.to_str().unwrap(),
        ]);
        assert_eq!(status.status.code(), Some(0));
        let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
            .unwrap()
            .map(|entry| {
                let entry = entry.unwrap();
                (
                    entry.file_name().to_string_lossy().into_owned(),
                    std::fs::read(entry.path()).unwrap(),
                )
            })
            .collect();
        files.sort();
        files
    };
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let first = read_outputs(dir_a.path());
    let second = read_outputs(dir_b.path());
    assert_eq!(
        first.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>(),
        vec!["bars-C1.svg", "bars-C2.svg", "centroids.svg"]
    );
    assert_eq!(first, second, "plot outputs differ between runs");

    pass(7, "every command byte-identical across consecutive runs");
}
