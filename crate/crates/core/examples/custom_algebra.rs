//! Structure constants from JSON: the group algebra of ℤ₂ written by hand,
//! validated, and run through the cohomology pipeline.

use hopf_adjoint::cohomology::{cohomology, CohomologyOptions};
use hopf_adjoint::hopf::schema::{from_json_str, to_json};
use hopf_adjoint::hopf::{check_ybe, r_matrix};

const KZ2: &str = r#"{
  "field": "Fp:5",
  "dim": 2,
  "labels": ["1", "g"],
  "mu": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
  "delta": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
  "unit": [1, 0],
  "counit": [1, 1],
  "antipode": [[1, 0], [0, 1]]
}"#;

fn main() -> hopf_adjoint::Result<()> {
    let h = from_json_str(KZ2)?;
    println!("loaded {} over {}: ybe {}", h.labels().join(","), h.field(), check_ybe(&r_matrix(&h))?);
    for n in 1..=3 {
        println!("H{n} = {}", cohomology(&h, n, CohomologyOptions::default())?.dim_h);
    }
    // a broken antipode is rejected with a witness
    let broken = KZ2.replace(r#""antipode": [[1, 0], [0, 1]]"#, r#""antipode": [[1, 0], [0, 2]]"#);
    println!("broken antipode: {}", from_json_str(&broken).unwrap_err());
    println!("{}", serde_json::to_string(&to_json(&h))?);
    Ok(())
}
