//! Recomputes the acceptance table: `cargo run --release --example acceptance_table [suite]`.

use hopf_adjoint::acceptance::{run_one, select};
use hopf_adjoint::cohomology::Mutation;

fn main() {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let ids = select(&suite).unwrap_or_else(|| panic!("unknown suite {suite}"));
    for id in ids {
        match run_one(id, Mutation::None) {
            Ok(row) => println!("{}", row.line()),
            Err(e) => println!("FAIL {id:>2}: error {e}"),
        }
    }
}
