use cbnef::hassett::is_contracted_by_weight;
use cbnef::{
    is_contracted, minimal_hassett, theorem_a_check, ModuliContext, Sample, SetPartition4,
    WeightVector,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SAMPLES: u64 = 100_000;

fn weights_for(n: u32) -> Vec<WeightVector> {
    let mut out: Vec<WeightVector> = (2..=n / 2)
        .map(|j| WeightVector::symmetric(n, j).unwrap())
        .collect();
    // A few mixed vectors: a seeded shuffle of a descending ramp, lifted
    // until the sum reaches 2n.
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    for _ in 0..3 {
        let mut idx: Vec<u32> = (0..n).map(|i| 1 + i % (n / 2)).collect();
        while idx.iter().sum::<u32>() < 2 * n {
            let k = idx.iter().position(|&x| x < n / 2).unwrap();
            idx[k] += 1;
        }
        idx.shuffle(&mut rng);
        out.push(WeightVector::new(n, idx).unwrap());
    }
    out
}

#[test]
fn sampled_theorem_a_up_to_twenty() {
    for n in 11..=20u32 {
        for (t, w) in weights_for(n).iter().enumerate() {
            let sample = Sample::Random {
                count: SAMPLES,
                seed: (n as u64) << 8 | t as u64,
            };
            let rep = theorem_a_check(n, w, sample).unwrap();
            assert_eq!(rep.checked, SAMPLES);
            assert!(rep.passed(), "n={n} w=({w}): {:?}", &rep.violations[..1]);
            if w.symmetric_index().is_some() {
                assert_eq!(rep.cross_checked, rep.contracted);
            }
        }
    }
}

#[test]
fn sampling_is_reproducible() {
    let w = WeightVector::symmetric(16, 5).unwrap();
    let s = Sample::Random {
        count: 500,
        seed: 9,
    };
    assert_eq!(
        theorem_a_check(16, &w, s).unwrap(),
        theorem_a_check(16, &w, s).unwrap()
    );
}

#[test]
fn exhaustive_cap_applies() {
    let w = WeightVector::symmetric(14, 3).unwrap();
    assert!(theorem_a_check(14, &w, Sample::Exhaustive).is_err());
}

fn relabel(p: &SetPartition4, perm: &[u32]) -> SetPartition4 {
    let blocks = p
        .blocks()
        .clone()
        .map(|b| b.iter().map(|&i| perm[i as usize - 1]).collect());
    SetPartition4::new(p.n(), blocks).unwrap()
}

proptest! {
    #[test]
    fn lowering_a_weight_keeps_contraction(n in 6u32..=16, seed in any::<u64>(), who in 0usize..16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = ModuliContext::new(n).unwrap();
        let p = ctx.random_set_partition(&mut rng);
        let who = who % n as usize;
        let high = WeightVector::symmetric(n, n / 2).unwrap();
        let mut idx = high.indices().to_vec();
        idx[who] -= 1;
        // Still a valid weight vector since n/2 * n - 1 >= 2n for n >= 6.
        let low = WeightVector::new(n, idx).unwrap();
        let a_high = minimal_hassett(n, &high).unwrap();
        let a_low = minimal_hassett(n, &low).unwrap();
        if is_contracted(&a_high, &p).unwrap() {
            prop_assert!(is_contracted(&a_low, &p).unwrap());
        }
        if is_contracted_by_weight(&a_high, &p).unwrap() {
            prop_assert!(is_contracted_by_weight(&a_low, &p).unwrap());
        }
    }

    #[test]
    fn symmetric_contraction_sees_only_the_shape(n in 6u32..=18, j_off in 0u32..9, seed in any::<u64>()) {
        let j = 2 + j_off % (n / 2 - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = ModuliContext::new(n).unwrap();
        let a = minimal_hassett(n, &WeightVector::symmetric(n, j).unwrap()).unwrap();
        let p = ctx.random_set_partition(&mut rng);
        let mut perm: Vec<u32> = (1..=n).collect();
        perm.shuffle(&mut rng);
        let q = relabel(&p, &perm);
        prop_assert_eq!(q.shape(), p.shape());
        prop_assert_eq!(is_contracted(&a, &q).unwrap(), is_contracted(&a, &p).unwrap());
    }
}

#[test]
fn lower_weights_contract_more() {
    let n = 10;
    let parts: Vec<SetPartition4> = ModuliContext::new(n)
        .unwrap()
        .set_partitions()
        .unwrap()
        .collect();
    let count = |j: u32| {
        let a = minimal_hassett(n, &WeightVector::symmetric(n, j).unwrap()).unwrap();
        parts
            .iter()
            .filter(|p| is_contracted(&a, p).unwrap())
            .count()
    };
    let counts: Vec<usize> = (2..=5).map(count).collect();
    assert!(counts.windows(2).all(|w| w[0] >= w[1]), "{counts:?}");
}
