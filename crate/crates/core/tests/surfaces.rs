//! Realizations on closed surfaces other than the sphere.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zmono_core::map::{k6_projective_map, k7_torus_map, petrie_orbits, FaceId, VertexId};
use zmono_core::monodromy::{z_monodromy, MonodromyCandidate};
use zmono_core::planar::quad::marks;
use zmono_core::planar::{extract_radial, medial, realize_planar, Color};
use zmono_core::surface::{
    base_map, borromean_augment, realize_on_surface, realize_with_base_map, zigzags_avoid,
    SurfaceError, SurfaceSpec, BASE_TRIANGLE,
};

const EXAMPLE: &str = "(1,-6,-4,2)(3,-5)(5,-3)(-2,4,6,-1)";

fn check(sigma: &MonodromyCandidate, spec: SurfaceSpec, seed: u64) {
    let r = realize_on_surface(sigma, spec, seed).unwrap();
    let m = &r.map;
    assert!(m.satisfies_ss(), "{sigma} on {spec}");
    assert_eq!(m.euler_characteristic(), spec.euler_characteristic(), "{sigma} on {spec}");
    assert_eq!(m.is_orientable(), spec.is_orientable(), "{sigma} on {spec}");
    assert_eq!(m.cells().face_size(r.frame.face()), sigma.k());
    assert_eq!(&z_monodromy(m, &r.frame).unwrap(), sigma.perm(), "{sigma} on {spec}");
}

#[test]
fn example_on_the_torus() {
    let s = MonodromyCandidate::parse(EXAMPLE, 6).unwrap();
    check(&s, SurfaceSpec::Orientable(1), 0);
}

#[test]
fn identity_on_the_projective_plane() {
    let s = MonodromyCandidate::identity(3).unwrap();
    let r = realize_on_surface(&s, SurfaceSpec::NonOrientable(1), 0).unwrap();
    assert_eq!(r.map.euler_characteristic(), 1);
    assert!(z_monodromy(&r.map, &r.frame).unwrap().is_identity());
}

#[test]
fn the_sphere_delegates_to_the_planar_pipeline() {
    let s = MonodromyCandidate::parse(EXAMPLE, 6).unwrap();
    let r = realize_on_surface(&s, SurfaceSpec::Sphere, 3).unwrap();
    assert_eq!(r.map, realize_planar(&s, 3).unwrap().map);
}

#[test]
fn higher_genus_and_more_crosscaps() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in ["genus:2", "genus:3", "cross:2", "cross:3"] {
        let spec: SurfaceSpec = spec.parse().unwrap();
        for k in [3, 5] {
            let s = MonodromyCandidate::random(k, &mut rng).unwrap();
            check(&s, spec, 0);
        }
    }
}

#[test]
fn surface_names_parse() {
    assert_eq!("sphere".parse::<SurfaceSpec>().unwrap(), SurfaceSpec::Sphere);
    assert_eq!("genus:0".parse::<SurfaceSpec>().unwrap(), SurfaceSpec::Sphere);
    assert_eq!("genus:2".parse::<SurfaceSpec>().unwrap(), SurfaceSpec::Orientable(2));
    assert_eq!("cross:1".parse::<SurfaceSpec>().unwrap(), SurfaceSpec::NonOrientable(1));
    for bad in ["torus", "cross:0", "genus:-1", "genus"] {
        assert!(matches!(bad.parse::<SurfaceSpec>(), Err(SurfaceError::Parse(_))), "{bad}");
    }
}

/// The zigzags of R_b(G′) meeting T are the three ring circuits, which use
/// only the ten crossings of the gadget and avoid the protected face.
#[test]
fn zigzags_through_the_triangle_are_the_rings() {
    let s = MonodromyCandidate::parse(EXAMPLE, 6).unwrap();
    let planar = realize_planar(&s, 0).unwrap();
    let (g, coloring) = medial(&planar.map);
    let protected = g.cells().face_of(planar.map.flag_count() + planar.frame.base_flag());
    let aug = borromean_augment(&g, &coloring, protected, None).unwrap();
    assert_eq!(aug.map.vertex_count(), g.vertex_count() + 10);
    let radial = extract_radial(&aug.map, &aug.coloring, Color::B);
    let gamma = &radial.map;
    let c = gamma.cells();
    let t = c.face_of(radial.from_parent[aug.triangle_flag].unwrap());
    assert_eq!(c.face_size(t), 3);
    let f = c.face_of(gamma.mark(marks::E1).unwrap());
    let t_edges: BTreeSet<_> = c.face_flags(t).iter().map(|&x| c.edge_of(x)).collect();
    let f_edges: BTreeSet<_> = c.face_flags(f).iter().map(|&x| c.edge_of(x)).collect();

    let mut rings: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    for z in petrie_orbits(gamma) {
        if !z.edges().iter().any(|e| t_edges.contains(e)) {
            continue;
        }
        assert!(z.edges().iter().all(|e| !f_edges.contains(e)));
        let mut vs: Vec<VertexId> = z
            .edges()
            .iter()
            .map(|&e| radial.parent_vertex_of_edge(&aug.map, e))
            .collect();
        vs.sort();
        vs.dedup();
        rings.insert(vs);
    }
    let mut sizes: Vec<usize> = rings.iter().map(Vec::len).collect();
    sizes.sort();
    assert_eq!(sizes, vec![4, 6, 6]);
    let union: BTreeSet<VertexId> = rings.iter().flatten().copied().collect();
    assert_eq!(union.len(), 10);
    assert!(zigzags_avoid(gamma, f, t));
}

#[test]
fn user_base_maps_are_accepted() {
    let s = MonodromyCandidate::parse("(1,-3)(3,-1)", 4).unwrap();
    let k7 = k7_torus_map().without_marks().with_mark(BASE_TRIANGLE, 5).unwrap();
    let r = realize_with_base_map(&s, &k7, 0).unwrap();
    assert_eq!(r.spec, SurfaceSpec::Orientable(1));
    assert_eq!(r.map.euler_characteristic(), 0);
    assert_eq!(&z_monodromy(&r.map, &r.frame).unwrap(), s.perm());

    let k6 = k6_projective_map().without_marks().with_mark(BASE_TRIANGLE, 0).unwrap();
    let r = realize_with_base_map(&s, &k6, 0).unwrap();
    assert_eq!(r.spec, SurfaceSpec::NonOrientable(1));
    assert!(!r.map.is_orientable());
}

#[test]
fn unusable_base_maps_are_rejected() {
    let s = MonodromyCandidate::identity(3).unwrap();
    let unmarked = k7_torus_map().without_marks();
    assert!(matches!(
        realize_with_base_map(&s, &unmarked, 0),
        Err(SurfaceError::BadBaseMap(_))
    ));
    let square = zmono_core::map::cube_map().with_mark(BASE_TRIANGLE, 0).unwrap();
    assert!(matches!(
        realize_with_base_map(&s, &square, 0),
        Err(SurfaceError::FaceNotTriangular { size: 4, .. })
    ));
    // two triangles glued along their boundary: a sphere whose graph has no (SS)
    let pillow = zmono_core::map::from_polygons(&[vec![1, 2, 3], vec![1, 3, 2]])
        .unwrap()
        .with_mark(BASE_TRIANGLE, 0)
        .unwrap();
    assert!(matches!(
        realize_with_base_map(&s, &pillow, 0),
        Err(SurfaceError::BadBaseMap(_))
    ));
}

#[test]
fn base_maps_have_a_marked_triangle() {
    for spec in ["genus:1", "genus:2", "cross:1", "cross:2", "cross:3"] {
        let spec: SurfaceSpec = spec.parse().unwrap();
        let b = base_map(spec).unwrap();
        let t: FaceId = b.cells().face_of(b.mark(BASE_TRIANGLE).unwrap());
        assert_eq!(b.cells().face_size(t), 3);
        assert!(b.satisfies_ss());
        assert_eq!(SurfaceSpec::of_map(&b), spec);
    }
    assert!(matches!(base_map(SurfaceSpec::Sphere), Err(SurfaceError::NoBaseForSphere)));
}
