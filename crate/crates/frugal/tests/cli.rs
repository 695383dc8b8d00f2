use std::io::Write;
use std::process::{Command, Output, Stdio};

use frugal::{oracle_bcc, parse_graph, write_graph};
use frugal_core::oracle::{gen_connected, gen_gnm};

fn frugal(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_frugal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = frugal(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const P3: &str = "3 2\n1 2\n2 3\n";
const C4: &str = "4 4\n1 2\n2 3\n3 4\n4 1\n";
const BOWTIE: &str = "5 6\n1 2\n2 3\n1 3\n3 4\n4 5\n3 5\n";
const K4: &str = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const FAN5: &str = "5 7\n1 2\n1 3\n1 4\n1 5\n2 3\n3 4\n4 5\n";
const C5: &str = "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";

#[test]
fn cut() {
    assert_eq!(stdout(&["cut", "--engine", "dense", "-"], P3), "2\n");
    assert_eq!(stdout(&["cut", "-"], C4), "");
    assert_eq!(stdout(&["cut", "--engine", "sparse", "-"], BOWTIE), "3\n");
}

#[test]
fn meter_goes_to_stderr() {
    let out = frugal(&["cut", "--meter", "-"], P3);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2\n");
    let err = String::from_utf8(out.stderr).unwrap();
    let line = err.lines().last().unwrap();
    let keys: Vec<_> = line.split(' ').map(|kv| kv.split_once('=').unwrap()).collect();
    assert_eq!(keys.iter().map(|k| k.0).collect::<Vec<_>>(), ["bits_peak", "n", "m"]);
    assert!(keys[0].1.parse::<u64>().unwrap() > 0);
    assert_eq!((keys[1].1, keys[2].1), ("3", "2"));
}

#[test]
fn engines_agree_on_random_files() {
    for seed in 0..20 {
        let text = write_graph(&gen_gnm(40, 30 + 3 * seed as usize, seed).unwrap());
        let dense = stdout(&["cut", "--engine", "dense", "-"], &text);
        assert_eq!(dense, stdout(&["cut", "--engine", "sparse", "-"], &text));
        assert_eq!(dense, stdout(&["oracle", "cut", "-"], &text));
    }
}

#[test]
fn bcc() {
    assert_eq!(
        stdout(&["bcc", "--edge", "1", "2", "-"], BOWTIE),
        "component 1:\nv 1\nv 2\nv 3\ne 1 2\ne 1 3\ne 2 3\n"
    );
    assert_eq!(stdout(&["bcc", "--all", "-"], P3), "component 1:\nv 1\nv 2\ne 1 2\ncomponent 2:\nv 2\nv 3\ne 2 3\n");
    assert_eq!(frugal(&["bcc", "--edge", "1", "3", "-"], P3).status.code(), Some(2));
    assert_eq!(frugal(&["bcc", "--edge", "1", "9", "-"], P3).status.code(), Some(2));
}

#[test]
fn bcc_all_matches_oracle_subcommand() {
    for seed in 0..10 {
        let g = gen_connected(60, 75, seed).unwrap();
        let text = write_graph(&g);
        let ours = stdout(&["bcc", "--all", "-"], &text);
        assert_eq!(ours, stdout(&["oracle", "bcc", "-"], &text));
        assert_eq!(ours, oracle_bcc(&g));
    }
}

#[test]
fn outerplanar() {
    assert_eq!(stdout(&["outerplanar", "-"], K4), "NOT_OUTERPLANAR\n");
    assert_eq!(stdout(&["outerplanar", "-"], FAN5), "MAXIMAL_OUTERPLANAR\n");
    assert_eq!(stdout(&["outerplanar", "-"], C5), "OUTERPLANAR\n");
}

#[test]
fn gen_round_trips() {
    let mop = stdout(&["gen", "mop", "--n", "5", "--seed", "1"], "");
    assert!(mop.starts_with("5 7\n"));
    assert_eq!(stdout(&["oracle", "outerplanar", "-"], &mop), "MAXIMAL_OUTERPLANAR\n");
    assert_eq!(stdout(&["outerplanar", "-"], &mop), "MAXIMAL_OUTERPLANAR\n");
    let gnm = stdout(&["gen", "gnm", "--n", "10", "--m", "45", "--seed", "3"], "");
    assert_eq!(write_graph(&parse_graph(&gnm).unwrap()), gnm);
    assert_eq!(frugal(&["gen", "gnm", "--n", "10", "--m", "50"], "").status.code(), Some(2));
    assert_eq!(frugal(&["gen", "connected", "--n", "10", "--m", "5"], "").status.code(), Some(2));
    // Same seed, same bytes.
    assert_eq!(stdout(&["gen", "connected", "--n", "30", "--m", "40", "--seed", "9"], ""), stdout(&["gen", "connected", "--n", "30", "--m", "40", "--seed", "9"], ""));
}

#[test]
fn bad_input_exits_2() {
    for text in ["2 1\n1 1\n", "2 1\n1 3\n", "3 2\n1 2\n", "3 2\n1 2\n2 1\n", "x"] {
        for cmd in [&["cut", "-"][..], &["bcc", "--all", "-"], &["outerplanar", "-"], &["oracle", "cut", "-"]] {
            let out = frugal(cmd, text);
            assert_eq!(out.status.code(), Some(2), "{cmd:?} on {text:?}");
            assert!(out.stdout.is_empty());
        }
    }
    assert_eq!(frugal(&["cut", "/nonexistent/graph.txt"], "").status.code(), Some(2));
}
