//! End-to-end behavior of the binary: exit codes, report shapes, and file
//! round-trips.

use std::path::{Path, PathBuf};
use std::process::Command;

use hcolor_cli::format::{InstanceFile, SpecFile};
use hcolor_cli::report::{CampaignReport, CheckReport};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hcolor"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(dir).unwrap();
    dir.join(name)
}

fn rainbow_k5_file() -> PathBuf {
    let path = tmp("rainbow_k5.json");
    let g = hcolor::model::SimpleGraph::complete(5).unwrap();
    let h = hcolor::model::PatternGraph::complete_loopless(10).unwrap();
    let entries: Vec<_> =
        g.edges().iter().enumerate().map(|(i, &(u, v))| (u, v, i)).collect();
    let inst = hcolor::model::HColoredGraph::from_parts(g, h, entries);
    std::fs::write(&path, InstanceFile::from_instance(&inst, None).to_json()).unwrap();
    path
}

#[test]
fn check_clean_instance_exits_zero() {
    let path = rainbow_k5_file();
    let out = tmp("rainbow_check.json");
    let status = bin().args(["check"]).arg(&path).arg("--out").arg(&out).status().unwrap();
    assert_eq!(status.code(), Some(0));
    let report: CheckReport =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(report.clean());
    let hyp = report.hypotheses.unwrap();
    assert!(hyp.degree.holds && hyp.no_c4_exactly3.holds && hyp.no_c3_exactly2.holds);
    assert!(report
        .cycles
        .iter()
        .all(|c| c.on_c3 == Some(true) && c.on_c4 == Some(true)));
}

#[test]
fn check_malformed_exits_two() {
    let path = tmp("malformed.json");
    std::fs::write(&path, "{\"n\": 3,").unwrap();
    let output = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("line"), "no position info: {stderr}");

    // structurally broken coloring entries are also input errors
    let path = tmp("loop_entry.json");
    std::fs::write(
        &path,
        r#"{"n": 3, "h": {"colors": 1, "edges": []}, "coloring": [[1,1,0]]}"#,
    )
    .unwrap();
    let status = bin().args(["check"]).arg(&path).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn check_instance_with_violations_exits_two() {
    let path = tmp("unknown_color.json");
    std::fs::write(
        &path,
        r#"{"n": 3, "h": {"colors": 1, "edges": []}, "coloring": [[0,1,0],[0,2,9],[1,2,0]]}"#,
    )
    .unwrap();
    let out = tmp("unknown_color_report.json");
    let status = bin().args(["check"]).arg(&path).arg("--out").arg(&out).status().unwrap();
    assert_eq!(status.code(), Some(2));
    let report: CheckReport =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].code, "unknown_color");
}

#[test]
fn verify_report_round_trips_and_is_seed_stable() {
    let out1 = tmp("verify1.json");
    let out2 = tmp("verify2.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args([
                "verify", "--which", "T3cycle", "--n", "6", "--samples", "40", "--seed", "9",
                "--mode", "pc", "--threads", "2", "--out",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    let a: CampaignReport =
        serde_json::from_str(&std::fs::read_to_string(&out1).unwrap()).unwrap();
    let b: CampaignReport =
        serde_json::from_str(&std::fs::read_to_string(&out2).unwrap()).unwrap();
    assert_eq!(a.verdicts, b.verdicts);
    assert_eq!(a.aggregate, b.aggregate);
    assert_eq!(a.aggregate.violations, 0);

    // re-parse equality for the report document
    let json = hcolor_cli::format::pretty_json(&a);
    let reparsed: CampaignReport = serde_json::from_str(&json).unwrap();
    assert_eq!(reparsed, a);
}

#[test]
fn verify_out_of_range_exits_two() {
    let status =
        bin().args(["verify", "--which", "T4small", "--n", "3", "--samples", "2"]).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn search_exhausted_exits_three() {
    let spec = tmp("contradictory_spec.json");
    std::fs::write(
        &spec,
        r#"{"spec": {"n": 4, "budget": 10000000, "seed": 0, "constraints": [
            {"part_count": {"vertex": 0, "k": 2}},
            {"part_count": {"vertex": 0, "k": 3}},
            {"part_count": {"vertex": 1, "k": 2}},
            {"part_count": {"vertex": 2, "k": 2}},
            {"part_count": {"vertex": 3, "k": 2}}
        ]}}"#,
    )
    .unwrap();
    let status = bin().args(["search", "--spec"]).arg(&spec).status().unwrap();
    assert_eq!(status.code(), Some(3));
}

#[test]
fn search_spec_file_round_trip() {
    let spec = hcolor::factory::figure1_spec();
    let path = tmp("figure1_spec.json");
    std::fs::write(&path, SpecFile::from_spec(&spec).to_json()).unwrap();
    let parsed = SpecFile::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed.to_spec(), spec);

    let out = tmp("from_spec_file.json");
    let status = bin()
        .args(["search", "--spec"])
        .arg(&path)
        .arg("--out")
        .arg(&out)
        .arg("--report-out")
        .arg(tmp("from_spec_report.json"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let file = InstanceFile::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let inst = file.to_instance().unwrap();
    assert!(hcolor::factory::check_spec(&inst, &spec).is_empty());
}

#[test]
fn search_is_deterministic() {
    let out1 = tmp("fig1_a.json");
    let out2 = tmp("fig1_b.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args(["search", "--figure", "1", "--out"])
            .arg(out)
            .arg("--report-out")
            .arg(tmp("fig1_det_report.json"))
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read_to_string(&out1).unwrap(),
        std::fs::read_to_string(&out2).unwrap()
    );
}

#[test]
fn written_instances_round_trip() {
    // instance documents rebuild to structurally equal instances
    for seed in 0..30u64 {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let n = rand::Rng::random_range(&mut rng, 3usize..=8);
        let colors = rand::Rng::random_range(&mut rng, 1usize..=4);
        let mut h = hcolor::model::PatternGraph::new(colors).unwrap();
        for a in 0..colors {
            for b in a..colors {
                if rand::Rng::random_range(&mut rng, 0..2u8) == 0 {
                    h.add_pair(a, b).unwrap();
                }
            }
        }
        let inst = hcolor::factory::random_instance(n, &h, seed).unwrap();
        let doc = InstanceFile::from_instance(&inst, None);
        let text = doc.to_json();
        let rebuilt = InstanceFile::parse(&text).unwrap().to_instance().unwrap();
        assert_eq!(rebuilt, inst, "seed {seed}");
    }
}
