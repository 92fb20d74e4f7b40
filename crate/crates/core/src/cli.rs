//! Command-line front end (wired up after the engines).

pub fn run_from_args(_args: Vec<String>) -> i32 {
    2
}
