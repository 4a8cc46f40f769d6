//! Acceptance suite: one PASS/FAIL line per criterion, then a single
//! assertion that every criterion passed.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use zmono_core::map::{
    bipyramid_map, cube_map, is_isomorphic, tetrahedron_map, trace_zigzags, FlagMap,
};
use zmono_core::monodromy::{
    check_lemma1, count_candidates, enumerate_candidates, z_monodromy, MonodromyCandidate,
};
use zmono_core::planar::quad::marks;
use zmono_core::planar::{
    arrange_chords, closed_curves, extract_radial, matching_from_sigma, medial, realize_planar,
    zigzags_match_central_circuits, Color, Point, Realization,
};
use zmono_core::surface::{borromean_augment, realize_on_surface, zigzags_avoid, SurfaceSpec};

const EXAMPLE: &str = "(1,-6,-4,2)(3,-5)(5,-3)(-2,4,6,-1)";

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Vertex-label edge sequence of every zigzag, one per reversal pair.
fn labelled_zigzags(m: &FlagMap) -> Result<Vec<Vec<(String, String)>>, String> {
    let pairs = trace_zigzags(m).map_err(|r| r.to_string())?;
    Ok(pairs
        .iter()
        .map(|p| {
            p.forward
                .oriented_edges(m)
                .iter()
                .map(|e| {
                    let l = |v| m.vertex_label(v).unwrap_or("?").to_string();
                    (l(e.tail), l(e.head))
                })
                .collect()
        })
        .collect())
}

fn contains_cycle(zigzags: &[Vec<(String, String)>], labels: &[&str]) -> bool {
    let n = labels.len();
    let want: Vec<BTreeSet<&str>> =
        (0..n).map(|i| [labels[i], labels[(i + 1) % n]].into_iter().collect()).collect();
    zigzags.iter().filter(|z| z.len() == n).any(|z| {
        let have: Vec<BTreeSet<&str>> =
            z.iter().map(|(a, b)| [a.as_str(), b.as_str()].into_iter().collect()).collect();
        (0..n).any(|s| {
            (0..n).all(|i| have[(i + s) % n] == want[i])
                || (0..n).all(|i| have[(s + n - i) % n] == want[i])
        })
    })
}

fn zigzag_fixtures() -> Outcome {
    let q3 = labelled_zigzags(&cube_map())?;
    ensure(q3.len() == 4 && q3.iter().all(|z| z.len() == 6), || {
        format!("Q3 has {} zigzags", q3.len())
    })?;
    ensure(contains_cycle(&q3, &["1", "2", "3", "7", "8", "5"]), || {
        "Q3 misses 12,23,37,78,85,51".into()
    })?;
    let mut counts = Vec::new();
    for n in 3..=6 {
        let z = labelled_zigzags(&bipyramid_map(n).unwrap())?;
        counts.push(z.len());
        match n {
            3 => ensure(z.len() == 1 && z[0].len() == 18, || format!("BP3: {z:?}"))?,
            5 => ensure(z.len() == 1, || format!("BP5 has {} zigzags", z.len()))?,
            _ => ensure(matches!(z.len(), 2 | 4), || format!("BP{n} has {} zigzags", z.len()))?,
        }
    }
    Ok(format!("Q3: 4 x 6; BP3..BP6: {counts:?}"))
}

fn random_candidates(k: usize, count: usize, seed: u64) -> Vec<MonodromyCandidate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| MonodromyCandidate::random(k, &mut rng).unwrap()).collect()
}

fn monodromy_conditions_suite() -> Outcome {
    let mut maps: Vec<(String, FlagMap)> = vec![
        ("Q3".into(), cube_map()),
        ("tetrahedron".into(), tetrahedron_map()),
    ];
    for n in 3..=6 {
        maps.push((format!("BP{n}"), bipyramid_map(n).unwrap()));
    }
    for i in 0..50 {
        let k = 3 + i % 6;
        let s = &random_candidates(k, 1, 1000 + i as u64)[0];
        let r = realize_planar(s, i as u64).map_err(|e| format!("{s}: {e}"))?;
        maps.push((format!("pipeline {s}"), r.map));
    }
    let mut frames = 0;
    for (name, m) in &maps {
        let report = check_lemma1(m).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.passed(), || format!("{name}: {:?}", report.violations))?;
        frames += report.frames_checked;
    }
    Ok(format!("{} maps, {frames} framed faces, 0 violations", maps.len()))
}

/// Every permutation of the 2k symbols, filtered by (M1) and (M2).
fn brute_force_candidates(k: usize) -> BTreeSet<Vec<i32>> {
    let symbols: Vec<i32> = (1..=k as i32).chain((1..=k as i32).map(|i| -i)).collect();
    let pos = |x: i32| symbols.iter().position(|&y| y == x).unwrap();
    let mut out = BTreeSet::new();
    let mut img = symbols.clone();
    let mut permute = |img: &[i32]| {
        let m1 = symbols.iter().all(|&i| {
            let j = img[pos(i)];
            img[pos(-j)] == -i
        });
        let m2 = symbols.iter().all(|&i| img[pos(i)] != -i);
        if m1 && m2 {
            out.insert(img.to_vec());
        }
    };
    heap_permutations(&mut img, &mut permute);
    out
}

fn heap_permutations(a: &mut [i32], visit: &mut impl FnMut(&[i32])) {
    let n = a.len();
    let mut c = vec![0; n];
    visit(a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn candidate_counts() -> Outcome {
    for k in [3usize, 4] {
        let brute = brute_force_candidates(k);
        let listed: BTreeSet<Vec<i32>> = enumerate_candidates(k)
            .unwrap()
            .map(|s| (1..=k as i32).chain((1..=k as i32).map(|i| -i)).map(|x| s.apply(x)).collect())
            .collect();
        ensure(brute.len() as u128 == count_candidates(k), || {
            format!("k={k}: brute force {} vs count {}", brute.len(), count_candidates(k))
        })?;
        ensure(brute == listed, || format!("k={k}: enumeration differs from brute force"))?;
    }
    for k in 3..=6usize {
        let double_factorial: u128 = (1..=2 * k as u128 - 1).step_by(2).product();
        let listed = enumerate_candidates(k).unwrap().count() as u128;
        ensure(count_candidates(k) == double_factorial && listed == double_factorial, || {
            format!("k={k}: {listed} listed, (2k-1)!! = {double_factorial}")
        })?;
    }
    Ok("15 and 105 match the brute force; (2k-1)!! for k=3..6".into())
}

fn example_regression() -> Outcome {
    use Point::{L, R};
    let s = MonodromyCandidate::parse(EXAMPLE, 6).map_err(|e| e.to_string())?;
    let m = matching_from_sigma(&s);
    for (a, b) in [(L(1), L(6)), (R(6), L(4)), (R(4), R(2)), (L(2), R(1)), (L(3), L(5)), (R(5), R(3))] {
        ensure(m.contains(a, b), || format!("{a} and {b} are not matched"))?;
    }
    let curves = closed_curves(&m).len();
    ensure(curves == 3, || format!("{curves} closed curves"))?;
    let crossings = arrange_chords(&m, 0).crossing_count();
    ensure(crossings == 5, || format!("{crossings} chord crossings"))?;
    let r = realize_planar(&s, 0).map_err(|e| e.to_string())?;
    let points = r.quad.map.vertex_count();
    ensure(points == 17, || format!("{points} vertices in the construction"))?;
    let found = r.monodromy();
    ensure(&found == s.perm(), || format!("M_F = {found}"))?;
    Ok(format!("6 pairs, 3 curves, |V| = 17, M_F = {found}"))
}

fn check_realization(s: &MonodromyCandidate, r: &Realization) -> Result<(), String> {
    ensure(r.map.satisfies_ss(), || format!("{s}: not (SS)"))?;
    let found = z_monodromy(&r.map, &r.frame).map_err(|e| e.to_string())?;
    ensure(&found == s.perm(), || format!("{s}: found {found}"))
}

/// Planar runs of criteria 5 and 6, keyed by (σ, seed).
struct SphereRuns {
    runs: Vec<(MonodromyCandidate, u64, Result<Realization, String>)>,
}

impl SphereRuns {
    fn collect() -> SphereRuns {
        let mut runs = Vec::new();
        for k in [3, 4] {
            for s in enumerate_candidates(k).unwrap() {
                let r = realize_planar(&s, 0).map_err(|e| e.to_string());
                runs.push((s, 0, r));
            }
        }
        for k in 5..=8 {
            for (i, s) in random_candidates(k, 25, 500 + k as u64).into_iter().enumerate() {
                let r = realize_planar(&s, i as u64).map_err(|e| e.to_string());
                runs.push((s, i as u64, r));
            }
        }
        SphereRuns { runs }
    }

    fn exhaustive(&self) -> impl Iterator<Item = &(MonodromyCandidate, u64, Result<Realization, String>)> {
        self.runs.iter().filter(|(s, _, _)| s.k() <= 4)
    }

    fn randomized(&self) -> impl Iterator<Item = &(MonodromyCandidate, u64, Result<Realization, String>)> {
        self.runs.iter().filter(|(s, _, _)| s.k() >= 5)
    }
}

fn sphere_exhaustive(runs: &SphereRuns) -> Outcome {
    let mut n = 0;
    for (s, _, r) in runs.exhaustive() {
        check_realization(s, r.as_ref().map_err(|e| format!("{s}: {e}"))?)?;
        n += 1;
    }
    ensure(n == 120, || format!("{n} runs"))?;
    Ok("15 + 105 realizations verified".into())
}

fn sphere_randomized(runs: &SphereRuns) -> Outcome {
    let mut per_k = [0usize; 9];
    for (s, _, r) in runs.randomized() {
        check_realization(s, r.as_ref().map_err(|e| format!("{s}: {e}"))?)?;
        per_k[s.k()] += 1;
    }
    ensure(per_k[5..].iter().all(|&c| c >= 25), || format!("{per_k:?}"))?;
    Ok(format!("{:?} realizations for k = 5..8", &per_k[5..]))
}

fn repair_invariance(runs: &SphereRuns) -> Outcome {
    let mut steps = 0;
    for (s, _, r) in &runs.runs {
        let r = r.as_ref().map_err(|e| format!("{s}: {e}"))?;
        for t in &r.trace {
            ensure(t.monodromy_ok, || format!("{s}: step {} changed the monodromy", t.step))?;
            steps += 1;
        }
    }
    Ok(format!("{steps} repair steps, all monodromy_ok, no budget failures"))
}

fn medial_radial() -> Outcome {
    for (name, m) in [
        ("Q3", cube_map()),
        ("BP3", bipyramid_map(3).unwrap()),
        ("tetrahedron", tetrahedron_map()),
    ] {
        let m = m.without_marks();
        let (g, col) = medial(&m);
        let rb = extract_radial(&g, &col, Color::B).map.without_marks();
        let rw = extract_radial(&g, &col, Color::W).map.without_marks();
        ensure(is_isomorphic(&rb, &m), || format!("R_b(medial({name})) differs"))?;
        ensure(is_isomorphic(&rw, &m.dual()), || format!("R_w(medial({name})) differs"))?;
        ensure(zigzags_match_central_circuits(&g, &col), || format!("{name}: circuits"))?;
    }
    let mut n = 0;
    for k in 3..=7 {
        for s in random_candidates(k, 3, 70 + k as u64) {
            let r = realize_planar(&s, 0).map_err(|e| e.to_string())?;
            ensure(zigzags_match_central_circuits(&r.quad.map, &r.quad.coloring), || {
                format!("{s}: construction circuits")
            })?;
            let (g, col) = medial(&r.map);
            ensure(zigzags_match_central_circuits(&g, &col), || format!("{s}: medial circuits"))?;
            n += 1;
        }
    }
    Ok(format!("Q3, BP3, tetrahedron; circuits on {n} pipeline outputs"))
}

/// Whether the zigzags through the protected face avoid the Borromean
/// triangle in the augmented radial map of a planar realization.
fn triangle_isolated(r: &Realization) -> Result<bool, String> {
    let (g, col) = medial(&r.map);
    let protected = g.cells().face_of(r.map.flag_count() + r.frame.base_flag());
    let aug = borromean_augment(&g, &col, protected, None).map_err(|e| e.to_string())?;
    let radial = extract_radial(&aug.map, &aug.coloring, Color::B);
    let gamma = &radial.map;
    let t = gamma.cells().face_of(radial.from_parent[aug.triangle_flag].ok_or("T lost")?);
    let f = gamma.cells().face_of(gamma.mark(marks::E1).ok_or("frame lost")?);
    Ok(zigzags_avoid(gamma, f, t))
}

fn surfaces() -> Outcome {
    let mut n = 0;
    for k in 3..=5 {
        for (i, s) in random_candidates(k, 5, 900 + k as u64).into_iter().enumerate() {
            for spec in [SurfaceSpec::Orientable(1), SurfaceSpec::NonOrientable(1)] {
                let r = realize_on_surface(&s, spec, i as u64).map_err(|e| format!("{s} on {spec}: {e}"))?;
                let m = &r.map;
                ensure(m.satisfies_ss(), || format!("{s} on {spec}: not (SS)"))?;
                ensure(m.euler_characteristic() == spec.euler_characteristic(), || {
                    format!("{s} on {spec}: chi = {}", m.euler_characteristic())
                })?;
                ensure(m.is_orientable() == spec.is_orientable(), || {
                    format!("{s} on {spec}: wrong orientability")
                })?;
                let found = z_monodromy(m, &r.frame).map_err(|e| e.to_string())?;
                ensure(&found == s.perm(), || format!("{s} on {spec}: found {found}"))?;
                ensure(triangle_isolated(&r.planar)?, || format!("{s}: a zigzag through F meets T"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} surface realizations (torus and projective plane, k = 3..5)"))
}

fn digest(text: &str) -> Vec<u8> {
    Sha256::digest(text.as_bytes()).to_vec()
}

fn determinism(runs: &SphereRuns) -> Outcome {
    let ex = MonodromyCandidate::parse(EXAMPLE, 6).map_err(|e| e.to_string())?;
    let first = realize_planar(&ex, 0).map_err(|e| e.to_string())?.map.to_json();
    let again = realize_planar(&ex, 0).map_err(|e| e.to_string())?.map.to_json();
    ensure(digest(&first) == digest(&again), || "worked example map differs between runs".into())?;
    let mut n = 1;
    for (s, seed, r) in &runs.runs {
        let r = r.as_ref().map_err(|e| e.clone())?;
        let again = realize_planar(s, *seed).map_err(|e| e.to_string())?;
        ensure(digest(&r.map.to_json()) == digest(&again.map.to_json()), || {
            format!("{s} (seed {seed}) differs between runs")
        })?;
        n += 1;
    }
    Ok(format!("{n} map files hash-identical on re-run"))
}

#[test]
fn acceptance_criteria() {
    let mut failures = Vec::new();
    let mut run = |n: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                println!("FAIL {n:>2} {name}: {why} ({secs:.2}s)");
                failures.push(n);
            }
        }
    };
    run(1, "zigzag fixtures", &mut zigzag_fixtures);
    run(2, "monodromy conditions on every face", &mut monodromy_conditions_suite);
    run(3, "candidate counts", &mut candidate_counts);
    run(4, "worked example regression", &mut example_regression);
    let start = Instant::now();
    let runs = SphereRuns::collect();
    let collect_secs = start.elapsed().as_secs_f64();
    run(5, "sphere, exhaustive k = 3, 4", &mut || {
        sphere_exhaustive(&runs).map(|d| format!("{d}; all planar runs took {collect_secs:.2}s"))
    });
    run(6, "sphere, randomized k = 5..8", &mut || sphere_randomized(&runs));
    run(7, "repair invariance", &mut || repair_invariance(&runs));
    run(8, "medial and radial identities", &mut medial_radial);
    run(9, "torus and projective plane", &mut surfaces);
    run(10, "determinism", &mut || determinism(&runs));
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
