//! End-to-end acceptance checks. Run with
//! `cargo test -p decomp-core --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use decomp_core::engine::{
    class_dim, closure_leq, enumerate_classes, hasse, pgl_transport, sheet_nilpotent, ClassPoset,
    GLDecompDatum,
};
use decomp_core::field::rat;
use decomp_core::oracle::{class_closure_member_oracle, generic_induced_type, pgl2_micro, DEFAULT_TRIALS};
use decomp_core::partition::{dominance_leq, induce, partitions_of, Partition};
use decomp_core::root_datum::{build_gl, build_sl, is_stabiliser_type, Characteristic, LeviDescriptor};
use decomp_core::verify::{dimension_law_holds, partition_tuples, transitivity_holds, verify_closure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dims(classes: &[GLDecompDatum]) -> BTreeSet<usize> {
    classes.iter().map(class_dim).collect()
}

fn gl2_census() -> Check {
    let classes = enumerate_classes(2);
    ensure(classes.len() == 3, || format!("{} classes", classes.len()))?;
    ensure(dims(&classes) == BTreeSet::from([4, 3, 1]), || format!("dims {:?}", dims(&classes)))?;
    let mut by_dim = classes.clone();
    by_dim.sort_by_key(class_dim);
    for w in by_dim.windows(2) {
        let engine = closure_leq(&w[0], &w[1]).map_err(|e| e.to_string())?;
        let oracle = class_closure_member_oracle(&w[0], &w[1], SEED).map_err(|e| e.to_string())?;
        ensure(engine && oracle, || format!("{} not below {} (engine {engine}, oracle {oracle})", w[0], w[1]))?;
    }
    Ok(())
}

fn gl3_census() -> Check {
    let poset = ClassPoset::build(3);
    let classes: Vec<_> = poset.classes().iter().map(|c| c.datum.clone()).collect();
    ensure(classes.len() == 6, || format!("{} classes", classes.len()))?;
    let want = BTreeSet::from([9, 8, 7, 6, 5, 1]);
    ensure(dims(&classes) == want, || format!("dims {:?}", dims(&classes)))?;

    let dense: Vec<usize> = (0..classes.len()).filter(|&i| poset.classes()[i].is_sheet_dense).collect();
    let nilpotents: BTreeSet<Partition> = dense.iter().map(|&i| sheet_nilpotent(&classes[i])).collect();
    let want: BTreeSet<Partition> =
        [vec![3], vec![2, 1], vec![1, 1, 1]].into_iter().map(|p| Partition::new(p).unwrap()).collect();
    ensure(dense.len() == 3 && nilpotents == want, || format!("sheets {dense:?}, nilpotents {nilpotents:?}"))?;

    for &d in &dense {
        let level = poset.classes()[d].level;
        let nilpotent_members: Vec<&GLDecompDatum> = (0..classes.len())
            .filter(|&i| poset.classes()[i].level == level && poset.leq(i, d) && classes[i].num_blocks() == 1)
            .map(|i| &classes[i])
            .collect();
        ensure(
            nilpotent_members.len() == 1 && nilpotent_members[0].blocks()[0].1 == sheet_nilpotent(&classes[d]),
            || format!("sheet {} holds nilpotent classes {nilpotent_members:?}", classes[d]),
        )?;
    }
    Ok(())
}

fn sheet_count_law() -> Check {
    for n in 1..=6 {
        let poset = ClassPoset::build(n);
        let dense: Vec<_> = poset.classes().iter().filter(|c| c.is_sheet_dense).collect();
        let images: BTreeSet<Partition> = dense.iter().map(|c| sheet_nilpotent(&c.datum)).collect();
        let partitions = partitions_of(n).len();
        ensure(dense.len() == partitions && images.len() == partitions, || {
            format!("n={n}: {} sheets, {} distinct nilpotents, p(n)={partitions}", dense.len(), images.len())
        })?;
        if n <= 4 {
            // The sheet nilpotent is the orbit induced from zero on the sheet's Levi.
            for (idx, c) in dense.iter().enumerate() {
                let labelled: Vec<_> = c.datum.blocks().iter().map(|(s, _)| (rat(0), Partition::trivial(*s))).collect();
                let sampled = generic_induced_type(&labelled, DEFAULT_TRIALS, SEED + idx as u64)
                    .map_err(|e| e.to_string())?;
                let oracle = sampled.get(&rat(0)).cloned();
                ensure(oracle.as_ref() == Some(&sheet_nilpotent(&c.datum)), || {
                    format!("n={n}: sheet {} oracle nilpotent {oracle:?}", c.datum)
                })?;
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    for n in 1..=4 {
        let report = verify_closure(n, SEED).map_err(|e| e.to_string())?;
        ensure(n != 4 || (report.classes, report.pairs) == (14, 196), || {
            format!("n=4: {} classes, {} pairs", report.classes, report.pairs)
        })?;
        ensure(report.ok(), || format!("n={n}: {} mismatches, first {:?}", report.mismatches.len(), report.mismatches[0]))?;
    }
    Ok(())
}

fn induction_dimension_identity() -> Check {
    for n in 1..=8 {
        for shape in partitions_of(n) {
            for (idx, parts) in partition_tuples(shape.parts()).iter().enumerate() {
                let formula = induce(parts).map_err(|e| e.to_string())?;
                ensure(dimension_law_holds(parts, &formula), || format!("formula fails law for {parts:?}"))?;
                let labelled: Vec<_> = parts.iter().map(|p| (rat(0), p.clone())).collect();
                let sampled = generic_induced_type(&labelled, DEFAULT_TRIALS, SEED ^ idx as u64)
                    .map_err(|e| e.to_string())?;
                let oracle = sampled.get(&rat(0)).cloned();
                ensure(oracle.as_ref().is_some_and(|o| dimension_law_holds(parts, o) && *o == formula), || {
                    format!("{parts:?}: formula {formula}, oracle {oracle:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn random_partition(rng: &mut impl Rng, n: usize) -> Partition {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    Partition::from_unsorted(parts)
}

fn permutations(items: &[Partition]) -> Vec<Vec<Partition>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Every ordering and every split into consecutive groups.
fn all_groupings_agree(parts: &[Partition]) -> Result<bool, String> {
    let flat = induce(parts).map_err(|e| e.to_string())?;
    for order in permutations(parts) {
        for mask in 0u32..(1 << order.len().saturating_sub(1)) {
            let mut groups: Vec<Vec<Partition>> = vec![vec![order[0].clone()]];
            for (i, p) in order.iter().enumerate().skip(1) {
                if mask & (1 << (i - 1)) != 0 {
                    groups.push(Vec::new());
                }
                groups.last_mut().unwrap().push(p.clone());
            }
            let staged: Vec<Partition> = groups.iter().map(|g| induce(g)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
            if induce(&staged).map_err(|e| e.to_string())? != flat {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn transitivity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for instance in 0..500 {
        let n = rng.gen_range(1..=8);
        let shape = random_partition(&mut rng, n);
        let parts: Vec<Partition> = shape.parts().iter().map(|&s| random_partition(&mut rng, s)).collect();
        ensure(transitivity_holds(&parts, &mut rng), || format!("random instance {instance}: {parts:?}"))?;
    }
    for n in 1..=5 {
        for shape in partitions_of(n) {
            for parts in partition_tuples(shape.parts()) {
                ensure(all_groupings_agree(&parts)?, || format!("exhaustive: {parts:?}"))?;
            }
        }
    }
    Ok(())
}

fn nilpotent_restriction() -> Check {
    for n in 1..=7 {
        let ps = partitions_of(n);
        for a in &ps {
            for b in &ps {
                let da = GLDecompDatum::new(vec![(n, a.clone())]).map_err(|e| e.to_string())?;
                let db = GLDecompDatum::new(vec![(n, b.clone())]).map_err(|e| e.to_string())?;
                let engine = closure_leq(&da, &db).map_err(|e| e.to_string())?;
                let dominance = dominance_leq(a, b).map_err(|e| e.to_string())?;
                ensure(engine == dominance, || format!("n={n}: {a} vs {b}: engine {engine}, dominance {dominance}"))?;
            }
        }
    }
    Ok(())
}

fn pgl_transport_check() -> Check {
    for n in 1..=6 {
        let gl = hasse(n);
        let pgl = pgl_transport(&gl).map_err(|e| e.to_string())?;
        ensure(pgl.covers == gl.covers, || format!("n={n}: covers differ"))?;
        ensure(pgl.nodes.len() == gl.nodes.len(), || format!("n={n}: node counts differ"))?;
        for (a, b) in gl.nodes.iter().zip(&pgl.nodes) {
            ensure(a.datum == b.datum && a.dim == b.dim + 1, || format!("n={n}: {} dim {} vs {}", a.datum, a.dim, b.dim))?;
        }
    }
    Ok(())
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << (n - 1)))
        .map(|mask| {
            let mut out = vec![1];
            for i in 1..n {
                if mask & (1 << (i - 1)) != 0 {
                    out.push(1);
                } else {
                    *out.last_mut().unwrap() += 1;
                }
            }
            out
        })
        .collect()
}

fn stabiliser_type_verdicts() -> Check {
    let sl2 = build_sl(2).map_err(|e| e.to_string())?;
    for (p, want) in [(2, false), (3, true), (5, true)] {
        let ch = Characteristic::new(p).map_err(|e| e.to_string())?;
        let got = is_stabiliser_type(&sl2, ch, &LeviDescriptor::torus());
        ensure(got == want, || format!("SL2 torus at p={p}: {got}"))?;
    }
    for n in 1..=6 {
        let gl = build_gl(n).map_err(|e| e.to_string())?;
        for p in [0, 2, 3, 5] {
            let ch = Characteristic::new(p).map_err(|e| e.to_string())?;
            for blocks in compositions(n) {
                let levi = LeviDescriptor::type_a(&gl, &blocks).map_err(|e| e.to_string())?;
                ensure(is_stabiliser_type(&gl, ch, &levi), || format!("GL{n} Levi {blocks:?} at p={p}"))?;
            }
        }
    }
    Ok(())
}

fn pgl2_micro_model() -> Check {
    for k in 1..=3 {
        let r = pgl2_micro(2, k).map_err(|e| e.to_string())?;
        let s = &r.summary;
        ensure((s.centraliser_zero, s.centraliser_e11, s.centraliser_e12) == (3, 1, 2), || {
            format!("k={k}: centralisers {:?}", (s.centraliser_zero, s.centraliser_e11, s.centraliser_e12))
        })?;
        ensure(s.stabiliser_e12 == 1, || format!("k={k}: stabiliser of pi(E12) is {}", s.stabiliser_e12))?;
        ensure(s.centraliser_level_1_nonempty && !s.centraliser_level_1_has_nilpotent, || {
            format!("k={k}: level-1 nilpotent check {s:?}")
        })?;
    }
    let control = pgl2_micro(3, 1).map_err(|e| e.to_string())?;
    ensure(control.summary.all_dimensions_agree, || format!("p=3 control: {:?}", control.rows))
}

fn poset_sanity() -> Check {
    for n in 1..=6 {
        let d = hasse(n);
        for &(lo, hi) in &d.covers {
            ensure(d.nodes[lo].dim < d.nodes[hi].dim, || format!("n={n}: cover {lo}->{hi} does not raise dim"))?;
        }
        let centre = GLDecompDatum::center(n);
        let c = d.nodes.iter().find(|c| c.datum == centre).ok_or_else(|| format!("n={n}: no centre class"))?;
        let level_mates = d.nodes.iter().filter(|o| o.level == c.level).count();
        ensure(c.is_isolated && c.is_sheet_dense && level_mates == 1, || {
            format!("n={n}: centre isolated={} dense={} level mates={level_mates}", c.is_isolated, c.is_sheet_dense)
        })?;
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Check,
}

#[test]
fn acceptance_criteria() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "gl2 census", limit: secs(1), check: gl2_census },
        Criterion { id: 2, name: "gl3 census", limit: secs(1), check: gl3_census },
        Criterion { id: 3, name: "sheet count law n<=6", limit: secs(30), check: sheet_count_law },
        Criterion { id: 4, name: "closure oracle equivalence n<=4", limit: secs(300), check: oracle_equivalence },
        Criterion { id: 5, name: "induction dimension identity n<=8", limit: secs(60), check: induction_dimension_identity },
        Criterion { id: 6, name: "transitivity of induction", limit: None, check: transitivity },
        Criterion { id: 7, name: "nilpotent order restriction n<=7", limit: None, check: nilpotent_restriction },
        Criterion { id: 8, name: "PGL transport n<=6", limit: None, check: pgl_transport_check },
        Criterion { id: 9, name: "stabiliser-type verdicts", limit: None, check: stabiliser_type_verdicts },
        Criterion { id: 10, name: "PGL2 p=2 micro-model", limit: secs(1), check: pgl2_micro_model },
        Criterion { id: 11, name: "poset sanity n<=6", limit: None, check: poset_sanity },
    ];

    let mut failures = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(()), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (r, _) => r,
        };
        match &result {
            Ok(()) => println!("PASS {:>2} {} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                println!("FAIL {:>2} {} ({elapsed:.2?}): {why}", c.id, c.name);
                failures.push(c.id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
