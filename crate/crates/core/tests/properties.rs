//! Property tests: step-function operations against pointwise evaluation,
//! literal round trips, and semiring laws of `Cu(G)`.

use proptest::prelude::*;
use rand::SeedableRng;

use cuntz::concrete::step::frac;
use cuntz::concrete::{FnSemigroup, StepFn, StepLsc, UhfCu};
use cuntz::literal::{int, rat, Rational};
use cuntz::rep::{direct_sum, load_group, tensor, CuGElem, RepSemiring};
use cuntz::{CaseRng, CuSemigroup, ExtNats, ExtRats};

/// Every breakpoint of `fs`, the midpoints between consecutive ones and
/// the origin: enough points to decide any pointwise relation.
fn probes<E>(fs: &[&StepFn<E>]) -> Vec<Rational> {
    let mut pts: Vec<Rational> = fs.iter().flat_map(|f| f.breaks().iter().cloned()).collect();
    pts.push(rat(0, 1));
    pts.sort();
    pts.dedup();
    let mut out = pts.clone();
    for (i, p) in pts.iter().enumerate() {
        let next = pts.get(i + 1).cloned().unwrap_or_else(|| &pts[0] + int(1));
        out.push((p + next) / int(2));
    }
    out
}

fn step_pointwise<S: CuSemigroup + Clone>(base: S, seed: u64, p: i64, q: i64) {
    let steps = StepLsc::new(base.clone());
    let mut rng = CaseRng::seed_from_u64(seed);
    let (f, g) = (steps.sample(&mut rng), steps.sample(&mut rng));
    let shift = rat(p, q);

    let r = steps.rotate(&f, &shift);
    steps.check(&r).unwrap();
    let shifted: Vec<Rational> = probes(&[&f]).iter().map(|x| frac(&(x - &shift))).collect();
    for x in probes(&[&r]).iter().chain(&shifted) {
        assert_eq!(steps.eval(&r, x), steps.eval(&f, &(x + &shift)));
    }

    let sum = steps.add(&f, &g).unwrap();
    steps.check(&sum).unwrap();
    for x in probes(&[&f, &g]) {
        assert_eq!(steps.eval(&sum, &x), base.add(&steps.eval(&f, &x), &steps.eval(&g, &x)).unwrap());
    }

    for (a, b) in [(&f, &g), (&g, &f), (&f, &sum)] {
        let pointwise = probes(&[a, b]).iter().all(|x| base.leq(&steps.eval(a, x), &steps.eval(b, x)).unwrap());
        assert_eq!(steps.leq(a, b).unwrap(), pointwise);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn step_nat_operations_are_pointwise(seed in any::<u64>(), p in -20i64..20, q in 1i64..12) {
        step_pointwise(ExtNats, seed, p, q);
    }

    #[test]
    fn step_uhf_operations_are_pointwise(seed in any::<u64>(), p in -20i64..20, q in 1i64..12) {
        step_pointwise(UhfCu::new(2).unwrap(), seed, p, q);
    }

    #[test]
    fn rotations_compose(seed in any::<u64>(), a in 0i64..12, b in 0i64..12) {
        let steps = StepLsc::new(ExtRats);
        let mut rng = CaseRng::seed_from_u64(seed);
        let f = steps.sample(&mut rng);
        let twice = steps.rotate(&steps.rotate(&f, &rat(a, 12)), &rat(b, 12));
        prop_assert_eq!(twice, steps.rotate(&f, &rat(a + b, 12)));
        prop_assert_eq!(steps.rotate(&f, &int(1)), f);
    }

    #[test]
    fn literals_round_trip(seed in any::<u64>()) {
        let mut rng = CaseRng::seed_from_u64(seed);
        fn round<S: CuSemigroup>(s: &S, rng: &mut CaseRng) {
            let x = s.sample(rng);
            assert_eq!(s.parse(&s.format(&x)).unwrap(), x, "{}", s.format(&x));
        }
        round(&ExtNats, &mut rng);
        round(&ExtRats, &mut rng);
        round(&UhfCu::new(3).unwrap(), &mut rng);
        round(&StepLsc::new(UhfCu::new(2).unwrap()), &mut rng);
        round(&FnSemigroup::over_group(ExtRats, &[2, 2]).unwrap(), &mut rng);
    }

    #[test]
    fn representation_semiring_laws(seed in any::<u64>(), spec in prop::sample::select(vec!["cyclic:3", "product:2,2", "s3", "d4"])) {
        let group = load_group(spec, None).unwrap();
        let ring = RepSemiring::new(group.clone());
        let mut rng = CaseRng::seed_from_u64(seed);
        let (a, b, c) = (ring.sample(&mut rng), ring.sample(&mut rng), ring.sample(&mut rng));
        prop_assert_eq!(tensor(&a, &b).unwrap(), tensor(&b, &a).unwrap());
        prop_assert_eq!(
            tensor(&tensor(&a, &b).unwrap(), &c).unwrap(),
            tensor(&a, &tensor(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            tensor(&a, &direct_sum(&b, &c).unwrap()).unwrap(),
            direct_sum(&tensor(&a, &b).unwrap(), &tensor(&a, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(tensor(&CuGElem::trivial(&group), &a).unwrap(), a.clone());
        prop_assert_eq!(tensor(&a, &b).unwrap().dimension(), a.dimension() * b.dimension());
    }
}
