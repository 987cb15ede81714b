//! Exact scalars: ℚ, 𝔽_p and dual numbers k[t]/(t²).

use hopf_adjoint::scalar::dual_mul;
use hopf_adjoint::{DualScalar, FieldSpec};

fn main() {
    let q: FieldSpec = "Q".parse().unwrap();
    let f7: FieldSpec = "Fp:7".parse().unwrap();

    let a = q.parse_scalar("3/4").unwrap();
    let b = q.parse_scalar("-5/6").unwrap();
    println!("over Q: ({a}) + ({b}) = {}, ({a})·({b}) = {}", &a + &b, &a * &b);
    println!("over Fp:7: 3⁻¹ = {}", f7.from_i64(3).inv().unwrap());
    println!("mixing fields: {:?}", a.checked_add(&f7.one()).unwrap_err().code());

    // (1 + 2t)(3 − t) = 3 + 5t
    let x = DualScalar::new(q.one(), q.from_i64(2)).unwrap();
    let y = DualScalar::new(q.from_i64(3), q.from_i64(-1)).unwrap();
    println!("dual numbers: ({x})·({y}) = {}", dual_mul(&x, &y).unwrap());
    let t = DualScalar::t(q);
    println!("t² = {}", dual_mul(&t, &t).unwrap());
}
