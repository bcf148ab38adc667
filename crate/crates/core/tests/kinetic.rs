use bichrome::harness::{gen_instance, GenParams, Problem};
use bichrome::mrr_rotating::{KineticOrder, RotatingInstance, RotatingSweep, StepOutcome};

#[test]
fn maintained_orders_equal_fresh_sorts() {
    for seed in 0..40 {
        let m = 2 + seed as usize % 12;
        let f = gen_instance(GenParams::new(Problem::Mrr, seed, 3, m, 500)).unwrap();
        let f = f.as_mrr().unwrap();
        let inst = RotatingInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        let mut sweep = RotatingSweep::new(&inst);
        let mut swaps = 0;
        while let Some(step) = sweep.step() {
            let (event, outcome) = step.unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            if matches!(outcome, StepOutcome::Swapped(..)) {
                swaps += 1;
            }
            let fresh = KineticOrder::after(inst.blue(), event.dir);
            assert_eq!(sweep.order(), &fresh, "seed {seed} after {event:?}");
        }
        // every blue pair swaps twice on each list over a full turn
        assert_eq!(swaps, 2 * m * (m - 1));
    }
}
