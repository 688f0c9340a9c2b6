//! Acceptance battery: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use shifted_crystal::crystal::sigma;
use shifted_crystal::involutions::evacuate;
use shifted_crystal::verify::{self, Check};
use shifted_crystal::{PrimedWord, ShiftedTableau, SkewShape};

fn t(shape: &str, filling: &str, n: u8) -> ShiftedTableau {
    ShiftedTableau::parse(shape, filling, n).unwrap()
}

fn shape(s: &str) -> SkewShape {
    s.parse().unwrap()
}

fn golden_canonical() -> Result<String, String> {
    let w = PrimedWord::parse("1 2' 2' 1 1 2 3' 2' 2", 3).map_err(|e| e.to_string())?;
    if w.to_string() != "1 2 2' 1 1 2 3 2' 2" {
        return Err(format!("canonical form {w}"));
    }
    let x = t("6,4,2/3,1", "1 1 2' / 2 3' 3 / 3 3", 3);
    if x.weight().counts() != [2, 2, 4] {
        return Err(format!("weight {}", x.weight()));
    }
    Ok(format!("{w}, weight {}", x.weight()))
}

fn golden_evacuation() -> Result<String, String> {
    let e = evacuate(&t("4,2", "1 1 2' 2 / 2 3", 3)).map_err(|e| e.to_string())?;
    let want = t("4,2", "1 2' 2 3 / 2 3", 3);
    if e != want {
        return Err(format!("got {e}, want {want}"));
    }
    Ok(format!("evacuation gives {e}"))
}

fn golden_braid() -> Result<String, String> {
    let x = t("5,3,1", "1 1 1 1 3' / 2 2 3' / 3", 3);
    let run = |word: [usize; 3]| -> ShiftedTableau {
        word.iter().rev().fold(x.clone(), |cur, &i| sigma(&cur, i).unwrap())
    };
    let a = run([1, 2, 1]);
    let b = run([2, 1, 2]);
    let (wa, wb) = (t("5,3,1", "1 1 1 2 3 / 2 3' 3 / 3", 3), t("5,3,1", "1 1 1 2' 3' / 2 3' 3 / 3", 3));
    if a != wa || b != wb || a == b {
        return Err(format!("s1s2s1 = {a}, s2s1s2 = {b}"));
    }
    Ok(format!("s1s2s1 = {a}; s2s1s2 = {b}"))
}

type Criterion<'a> = (&'a str, Box<dyn Fn() -> Result<String, String> + 'a>);

fn all_pass(checks: Vec<Check>) -> Result<String, String> {
    let details: Vec<String> = checks.iter().map(|c| c.detail.clone()).collect();
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
        None => Ok(details.join("; ")),
    }
}

fn main() -> ExitCode {
    let desk = verify::desk_graphs();
    let stair = verify::skew_shapes_within(4);
    let criteria: Vec<Criterion> = vec![
        ("canonical form and weight", Box::new(golden_canonical)),
        ("evacuation worked example", Box::new(golden_evacuation)),
        ("sigma braid failure example", Box::new(golden_braid)),
        (
            "cactus relations",
            Box::new(|| all_pass(desk.iter().map(|(s, n)| verify::check_cactus(s, *n)).collect())),
        ),
        (
            "sigma properties",
            Box::new(|| all_pass(desk.iter().map(|(s, n)| verify::check_sigma(s, *n)).collect())),
        ),
        (
            "sigma is the restricted reversal",
            Box::new(|| {
                all_pass(
                    ["2,1", "3,1", "3,2"]
                        .iter()
                        .map(|s| verify::check_sigma_is_restricted_reversal(&shape(s), 3))
                        .collect(),
                )
            }),
        ),
        (
            "long element",
            Box::new(|| {
                all_pass(
                    [3u8, 4]
                        .iter()
                        .map(|&n| verify::check_long_element(&stair, n, &verify::reduced_words_of_longest(n as usize)))
                        .collect(),
                )
            }),
        ),
        (
            "eta axioms",
            Box::new(|| all_pass(vec![verify::check_eta_axioms(&shape("2,1"), 4)])),
        ),
        (
            "Knuth equivalence and rectification",
            Box::new(|| {
                all_pass(vec![
                    verify::check_knuth_words(6, 3),
                    verify::check_random_rectification(&stair, 3, 50, 2024),
                ])
            }),
        ),
        (
            "LR symmetry and component counts",
            Box::new(|| all_pass(vec![verify::check_lr_symmetry(4), verify::check_component_counts(&stair, 3)])),
        ),
        (
            "crystal structure",
            Box::new(|| {
                let mut checks = vec![verify::check_structure(&stair, 3)];
                checks.extend(desk.iter().map(|(s, n)| verify::check_structure(std::slice::from_ref(s), *n)));
                checks.push(verify::check_straight_connected(4, 3));
                checks.push(verify::check_straight_connected(4, 4));
                all_pass(checks)
            }),
        ),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({ms} ms): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
