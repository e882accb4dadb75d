use std::process::{Command, Output};

/// Runs the built `cparts` binary with the given arguments.
pub fn cparts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cparts"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal termination")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}
