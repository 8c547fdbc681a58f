use staride_core::harness::{run_example_3_1, run_example_3_2, RunOptions, Status};

#[test]
fn example_3_1_passes() {
    let r = run_example_3_1(&RunOptions::default()).unwrap();
    println!("{}", r.to_text());
    assert_eq!(r.outcome, Status::Pass);
}

#[test]
fn example_3_2_passes() {
    let r = run_example_3_2(&RunOptions::default()).unwrap();
    println!("{}", r.to_text());
    assert_eq!(r.outcome, Status::Pass);
}

fn run_file(path: &str) -> staride_core::harness::ScenarioReport {
    let src = std::fs::read_to_string(path).unwrap();
    let mut r = staride_core::harness::run_source(path, &src, &RunOptions { timings: true, ..RunOptions::default() }).unwrap();
    r.remove(0)
}

#[test]
fn negative_controls_fail() {
    for p in ["scenarios/negative/ex3_2_without_rule_a.stide", "scenarios/negative/ex3_1_weakened.stide"] {
        let r = run_file(p);
        println!("{}", r.to_text());
        assert_eq!(r.outcome, Status::Fail);
    }
}
