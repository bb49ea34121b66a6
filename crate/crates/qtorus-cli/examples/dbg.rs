use qtorus::scalar::{Context, ScalarConfig};
use qtorus::verma::{MMonomial, MVector, Weight};
use qtorus::heis::{HeisMonomial, Letter, SupportBox};
use qtorus::lattice::LatticeVector;

fn main() {
    let ctx = Context::new(ScalarConfig::rational(1)).unwrap();
    let lambda = Weight::from_i64(&ctx, 1, &[1]).unwrap();
    let b = SupportBox::new(2, 2).unwrap();
    let heis = HeisMonomial::new(&ctx, vec![(Letter::U, LatticeVector::new(vec![-1]))]).unwrap();
    let mut gen = MVector::new();
    gen.insert(MMonomial::new(vec![], heis), ctx.one());
    let slots = ctx.submodule_closure(&gen, &lambda, &b).unwrap();
    for ((m, beta), e) in &slots {
        println!("slot ({m}, {beta}): dim {} / cap {}", e.dim(), ctx.weight_dimension_m(*m, beta, &b));
    }
}
