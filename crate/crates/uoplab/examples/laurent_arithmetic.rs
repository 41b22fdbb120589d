//! Exact arithmetic in `Z[v, v^-1]` with `q = v²`, and in the group algebra
//! of a coweight lattice.

use uoplab::coeffs::{Coweight, GroupAlgElt, LaurentPoly};

fn main() -> uoplab::Result<()> {
    let q = LaurentPoly::q();
    let one = LaurentPoly::one();
    let poincare = &one + &q;
    println!("1 + q         = {poincare}");
    println!("(q - 1)^3     = {}", (&q - &one).pow(3));
    println!("v^-3 * (1+q)  = {}", poincare.shift(-3));

    let big = LaurentPoly::from(i64::MAX).pow(3);
    println!("(2^63-1)^3    = {big}");
    println!(
        "exact quotient: {}",
        big.div_exact(&LaurentPoly::from(i64::MAX)).unwrap()
    );

    let f: LaurentPoly = "-1*v^0 + 1*v^4".parse()?;
    println!("{f} at q = 3: {}", f.eval_q(3)?);
    match LaurentPoly::v_pow(1).eval_q(2) {
        Ok(x) => println!("v at q = 2: {x}"),
        Err(e) => println!("v at q = 2: {e}"),
    }

    let e =
        |s: &str| -> uoplab::Result<GroupAlgElt> { Ok(GroupAlgElt::basis(s.parse::<Coweight>()?)) };
    let x = &e("1,0")? + &e("0,1")?.scale(&q);
    println!("x             = {x}");
    println!("x^2           = {}", x.pow(2));
    println!("x * e[-1,-1]  = {}", x.try_mul(&e("-1,-1")?)?);
    Ok(())
}
