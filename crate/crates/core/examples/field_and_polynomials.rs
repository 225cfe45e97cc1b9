//! Prime-field arithmetic, interpolation and the `x^s g^t` basis.

use convertible_codes::field::find_modulus;
use convertible_codes::poly::{annihilator, interpolate, EvaluationSet, Polynomial, XGBasis};
use convertible_codes::{PrimeField, Result};

fn main() -> Result<()> {
    let f = PrimeField::new(19)?;
    let g = f.primitive_root();
    println!("primitive root of F_19: {g}, order {:?}", g.multiplicative_order());
    println!("subgroup of order 6 generated by {}", f.subgroup_generator(6)?);
    println!("smallest prime = 1 mod 12 above 60: {}", find_modulus(12, 60)?.modulus());

    let pts = EvaluationSet::from_u64(f, &[1, 8, 7, 18])?;
    println!("annihilator of {:?}: {}", pts.values(), annihilator(&pts));
    let p = Polynomial::from_u64(f, &[3, 0, 5, 1]);
    let pairs: Vec<_> = pts.points().iter().map(|&x| (x, p.eval(x))).collect();
    println!("{p} recovered by interpolation: {}", interpolate(f, &pairs)?);

    let basis = XGBasis::power(f, 2, 2)?;
    println!("good polynomial g = {}", basis.g());
    let v = basis.from_monomial(&Polynomial::from_u64(f, &[1, 2, 0, 3, 4]))?;
    println!("1 + 2x + 3x^3 + 4x^4 in the basis 1, x, g, xg: {:?}", v.iter().map(|e| e.value()).collect::<Vec<_>>());
    Ok(())
}
