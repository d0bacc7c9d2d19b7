//! Fixture-level checks of the worked arrangements: cocircuit counts,
//! minors, strata, order filters, cochain cohomology and the
//! Stanley-Reisner dictionary.

use omx_core::cw::{bounded_cell_complex, Strata};
use omx_core::linalg::{AbelianGroup, Field, IntMatrix};
use omx_core::nps;
use omx_core::om::{check_covector_axioms, cocircuits_by_order, span_from_cocircuits, OmFile};
use omx_core::realize::Arrangement;
use omx_core::sign::Sign;
use omx_core::sr::complex_from_ideal;
use omx_core::AffineOrientedMatroid;

fn fixture(name: &str) -> Arrangement {
    let path = format!("{}/../../fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    Arrangement::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn realize(name: &str) -> AffineOrientedMatroid {
    fixture(name).realize(false).unwrap()
}

const ALL_FIXTURES: [&str; 7] = [
    "cm-arr-1",
    "cm-arr-2",
    "nongp-cm-arr",
    "square",
    "four-generic-lines",
    "single-vertex",
    "simplex-3d",
];

#[test]
fn cocircuits_of_cm_arr_1_form_eight_antipodal_pairs() {
    let aom = realize("cm-arr-1");
    let cocircuits = aom.om().cocircuits();
    assert_eq!(cocircuits.len(), 16);
    for c in cocircuits {
        assert!(cocircuits.contains(&c.opposite()));
    }
    assert_eq!(aom.positive_cocircuits().len(), 4);
}

#[test]
fn support_minimal_and_order_minimal_cocircuits_coincide() {
    for name in ALL_FIXTURES {
        let aom = realize(name);
        let by_order = cocircuits_by_order(aom.om().covectors());
        assert_eq!(aom.om().cocircuits(), &by_order[..], "{name}");
    }
}

#[test]
fn span_of_cocircuits_recovers_the_covector_set() {
    for name in ALL_FIXTURES {
        let aom = realize(name);
        let mut spanned = span_from_cocircuits(aom.om().cocircuits()).unwrap();
        spanned.sort();
        let mut covectors = aom.om().covectors().to_vec();
        covectors.sort();
        assert_eq!(spanned, covectors, "{name}");
        assert!(check_covector_axioms(&covectors).pass(), "{name}");
    }
}

#[test]
fn covector_antipodal_symmetry_and_sampled_points() {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    for name in ALL_FIXTURES {
        let arr = fixture(name);
        let aom = arr.realize(false).unwrap();
        for v in aom.om().covectors() {
            assert!(aom.om().contains(&v.opposite()), "{name}");
        }
        // Every sampled lattice point lands on a realized covector.
        let dim = arr.dimension;
        let mut points = vec![vec![0i64; dim]];
        for c in 0..dim {
            let mut next = Vec::new();
            for p in &points {
                for val in -2..=2 {
                    let mut q = p.clone();
                    q[c] = val;
                    next.push(q);
                }
            }
            points = next;
        }
        for p in points {
            let rat: Vec<BigRational> =
                p.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
            let v = arr.sign_vector_of_point(&rat);
            assert!(aom.om().contains(&v), "{name}: point {p:?}");
        }
    }
}

#[test]
fn realized_rank_equals_matrix_rank() {
    for name in ALL_FIXTURES {
        let arr = fixture(name);
        let aom = arr.realize(false).unwrap();
        let mut rows = arr.vectors.clone();
        rows.push(arr.g.clone());
        let rank = IntMatrix::from_i64_rows(&rows).rank(Field::Q);
        assert_eq!(aom.om().rank(), rank, "{name}");
    }
}

#[test]
fn general_position_for_lines_means_no_parallels() {
    // For arrangements of lines in the plane (ambient dimension 3),
    // general position of g is equivalent to no two normals being parallel
    // in the chart.
    for name in ["cm-arr-1", "cm-arr-2", "square", "four-generic-lines"] {
        let arr = fixture(name);
        let aom = arr.realize(false).unwrap();
        let n = arr.vectors.len();
        let mut has_parallel = false;
        for i in 0..n {
            for j in i + 1..n {
                let m = IntMatrix::from_i64_rows(&[
                    arr.vectors[i].clone(),
                    arr.vectors[j].clone(),
                    arr.g.clone(),
                ]);
                // Lines i and j are parallel iff the three normals stay
                // rank two (the pair meets only at infinity).
                if m.rank(Field::Q) == 2
                    && IntMatrix::from_i64_rows(&[
                        arr.vectors[i].clone(),
                        arr.vectors[j].clone(),
                    ])
                    .rank(Field::Q)
                        == 2
                {
                    has_parallel = true;
                }
            }
        }
        assert_eq!(aom.is_general_position(), !has_parallel, "{name}");
    }
}

#[test]
fn restriction_to_hyperplanes_keeps_rank() {
    for name in ALL_FIXTURES {
        let aom = realize(name);
        if aom.g_is_coloop() {
            continue;
        }
        let restricted = aom.om().restriction(&aom.hyperplane_elements()).unwrap();
        assert_eq!(restricted.rank(), aom.om().rank(), "{name}");
        // The cocircuits of the restriction match the restricted cocircuits.
        let expected = aom.om().restricted_cocircuits(&aom.hyperplane_elements());
        assert_eq!(restricted.cocircuits(), &expected[..], "{name}");
    }
}

#[test]
fn contraction_by_loop_only_shrinks_the_ground() {
    // Add an intentional loop to the first example and contract it away.
    let mut arr = fixture("cm-arr-1");
    arr.vectors.push(vec![0, 0, 0]);
    let aom = arr.realize(false).unwrap();
    assert!(aom.om().is_loop(4));
    let contracted = aom.om().contraction(&[4]).unwrap();
    let baseline = realize("cm-arr-1");
    assert_eq!(contracted.covectors().len(), baseline.om().covectors().len());
    assert_eq!(contracted.rank(), baseline.om().rank());
}

#[test]
fn contraction_drops_bounded_rank_when_it_touches_the_complex() {
    let aom = realize("cm-arr-1");
    let before = aom.full_rank().bounded_poset_rank.unwrap();
    // Element 4 (index 3) meets the bounded complex in its support.
    let touched = aom
        .bounded_complex()
        .iter()
        .any(|v| v.get(3) != Sign::Zero);
    assert!(touched);
    let contracted = aom.contraction(3).unwrap();
    let after = contracted.full_rank().bounded_poset_rank.unwrap();
    assert!(after < before, "bounded rank must drop: {after} vs {before}");
}

#[test]
fn restricted_circuit_families_of_the_examples() {
    let aom = realize("cm-arr-1");
    let positive = aom.underlying_restricted_circuits(true);
    assert_eq!(
        positive.circuits(),
        vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![3]]
    );
    let full = aom.underlying_restricted_circuits(false);
    assert_eq!(positive, full);

    let aom = realize("nongp-cm-arr");
    let positive = aom.underlying_restricted_circuits(true);
    assert_eq!(positive.circuits(), vec![vec![0], vec![1]]);
    let full = aom.underlying_restricted_circuits(false);
    assert_eq!(full.circuits(), vec![vec![0], vec![1], vec![2]]);
    assert_ne!(positive, full);
}

#[test]
fn bounded_complex_is_downward_closed_and_contractible() {
    for name in ALL_FIXTURES {
        let aom = realize(name);
        let bounded = aom.bounded_complex();
        for v in &bounded {
            for w in aom.om().covectors() {
                if !w.is_zero() && w.lt(v) {
                    assert!(bounded.contains(w), "{name}: {w} below {v}");
                }
            }
        }
        let complex = bounded_cell_complex(&aom).unwrap();
        let homology = complex.reduced_homology_z().unwrap();
        assert!(
            homology.iter().all(AbelianGroup::is_zero),
            "{name}: bounded complex must be Z-acyclic"
        );
    }
}

#[test]
fn full_rank_bounded_complexes_are_pure_with_ambient_maximal_topes() {
    for name in ["cm-arr-1", "cm-arr-2", "square", "four-generic-lines", "simplex-3d"] {
        let aom = realize(name);
        assert!(aom.full_rank().full_rank, "{name}");
        let complex = bounded_cell_complex(&aom).unwrap();
        let strata = Strata::compute(&aom, &complex);
        let d = complex.dim();
        for &t in &strata.topes {
            assert_eq!(complex.cell(t).dim, d, "{name}: bounded complex must be pure");
            let v = complex.cell(t).covector.unwrap();
            assert!(
                strata.ambient_topes.contains(&v),
                "{name}: maximal bounded cells are maximal in the covector set"
            );
        }
    }
}

#[test]
fn cell_counts_of_the_bounded_complexes() {
    let cases = [
        ("cm-arr-1", vec![1, 4, 5, 2]),
        ("four-generic-lines", vec![1, 6, 8, 3]),
        ("single-vertex", vec![1, 1]),
        ("simplex-3d", vec![1, 4, 6, 4, 1]),
    ];
    for (name, expected) in cases {
        let complex = bounded_cell_complex(&realize(name)).unwrap();
        assert_eq!(complex.f_vector(), expected, "{name}");
        assert_eq!(complex.n_cells(), expected.iter().sum::<usize>(), "{name}");
    }
}

#[test]
fn incidence_is_plus_minus_one_exactly_on_covers() {
    for name in ALL_FIXTURES {
        let complex = bounded_cell_complex(&realize(name)).unwrap();
        for upper in 0..complex.n_cells() {
            for lower in 0..complex.n_cells() {
                let c = complex.incidence(upper, lower);
                let is_cover = complex.covers().contains(&(upper, lower));
                assert_eq!(c != 0, is_cover, "{name}: ({upper},{lower})");
                if is_cover {
                    assert_eq!(c.abs(), 1, "{name}");
                }
            }
        }
    }
}

#[test]
fn strata_of_the_examples() {
    let aom = realize("cm-arr-1");
    let complex = bounded_cell_complex(&aom).unwrap();
    let strata = Strata::compute(&aom, &complex);
    assert_eq!(strata.topes.len(), 2);
    assert_eq!(strata.subtopes.len(), 5);
    let boundary_subtopes =
        strata.subtopes.iter().filter(|s| strata.is_boundary_cell(**s)).count();
    assert_eq!(boundary_subtopes, 4);

    let aom = realize("four-generic-lines");
    let complex = bounded_cell_complex(&aom).unwrap();
    let strata = Strata::compute(&aom, &complex);
    assert_eq!(strata.topes.len(), 3);

    let aom = realize("single-vertex");
    let complex = bounded_cell_complex(&aom).unwrap();
    let strata = Strata::compute(&aom, &complex);
    assert_eq!(strata.topes.len(), 1);
    assert_eq!(complex.cell(strata.topes[0]).dim, 0);
    assert!(strata.boundary.is_empty());
}

#[test]
fn subtopes_sit_in_at_most_two_bounded_topes_and_exactly_two_ambient_topes() {
    for name in ["cm-arr-1", "cm-arr-2", "square", "four-generic-lines", "simplex-3d"] {
        let aom = realize(name);
        let complex = bounded_cell_complex(&aom).unwrap();
        let strata = Strata::compute(&aom, &complex);
        for &s in &strata.subtopes {
            let in_bounded = strata
                .topes
                .iter()
                .filter(|&&t| complex.leq(s, t) && s != t)
                .count();
            assert!(in_bounded <= 2, "{name}");
            let v = complex.cell(s).covector.unwrap();
            let in_ambient = strata
                .ambient_topes
                .iter()
                .filter(|t| v.lt(t))
                .count();
            assert_eq!(in_ambient, 2, "{name}: subtope {v}");
        }
    }
}

#[test]
fn order_filters_from_labels_and_cells() {
    let aom = realize("cm-arr-1");
    let res = nps::cellular_resolution(&aom).unwrap();
    let complex = &res.complex;
    // Degree zero keeps everything, including the empty cell.
    assert_eq!(complex.filter_of_degree(0).unwrap(), complex.full_mask());
    // The filter of a tope label is that tope alone.
    let strata = Strata::compute(&aom, complex);
    for &t in &strata.topes {
        let label = complex.labels().unwrap()[t];
        assert_eq!(complex.filter_of_degree(label).unwrap(), 1u128 << t);
        assert_eq!(complex.up_set(t), 1u128 << t);
    }
    // The up-set of the interior subtope is itself plus both topes.
    let interior: Vec<usize> = strata
        .subtopes
        .iter()
        .copied()
        .filter(|&s| !strata.is_boundary_cell(s))
        .collect();
    assert_eq!(interior.len(), 1);
    let expected =
        (1u128 << interior[0]) | strata.topes.iter().fold(0u128, |m, &t| m | 1 << t);
    assert_eq!(complex.up_set(interior[0]), expected);
    // Faithful labels: the degree filter of any cell label is its up-set.
    for i in 0..complex.n_cells() {
        let label = complex.labels().unwrap()[i];
        assert_eq!(complex.filter_of_degree(label).unwrap(), complex.up_set(i));
    }
}

#[test]
fn cochain_cohomology_of_interior_and_boundary_cells() {
    let aom = realize("cm-arr-1");
    let complex = bounded_cell_complex(&aom).unwrap();
    let strata = Strata::compute(&aom, &complex);
    // Whole complex: reduced cohomology vanishes everywhere.
    let whole = complex.cochain_complex(complex.full_mask()).unwrap();
    assert!(whole.is_complex());
    assert!(whole.betti(Field::Q).iter().all(|&b| b == 0));
    // Interior cells carry one-dimensional top cohomology, boundary cells
    // none at all.
    for i in 1..complex.n_cells() {
        let betti = complex.cochain_complex(complex.up_set(i)).unwrap().betti(Field::Q);
        let top = (complex.dim() + 1) as usize;
        if strata.is_boundary_cell(i) {
            assert!(betti.iter().all(|&b| b == 0), "boundary cell {i}");
        } else {
            for (j, &b) in betti.iter().enumerate() {
                assert_eq!(b, usize::from(j == top), "interior cell {i}");
            }
        }
    }
}

#[test]
fn stanley_reisner_complex_of_the_nongp_example() {
    let aom = realize("nongp-cm-arr");
    let ideal = nps::matroid_ideal(&aom);
    let delta = complex_from_ideal(&ideal);
    // One facet: every variable except x1 and x2.
    let facets: Vec<u64> = delta.facet_masks().collect();
    assert_eq!(facets.len(), 1);
    assert_eq!(facets[0].count_ones(), 4);
    // Krull dimension of the quotient is 4 (the theorem's 2n - r formula
    // needs full rank, which fails here).
    assert_eq!(delta.dim(), Some(3));
    assert!(!aom.full_rank().full_rank);
}

#[test]
fn om_file_round_trip_preserves_the_pipeline() {
    for name in ALL_FIXTURES {
        let aom = realize(name);
        let file = OmFile::from_affine(&aom);
        let rebuilt = file.to_json();
        let reparsed = OmFile::from_json(&rebuilt).unwrap();
        let (_, affine) = reparsed.build(false).unwrap();
        let aom2 = affine.expect("g is named");
        assert_eq!(aom.om().covectors(), aom2.om().covectors(), "{name}");
        assert_eq!(
            nps::matroid_ideal(&aom).generator_strings(),
            nps::matroid_ideal(&aom2).generator_strings(),
            "{name}"
        );
    }
}

#[test]
fn canonical_ideals_of_the_examples() {
    assert_eq!(nps::canonical_ideal(&realize("cm-arr-1")).unwrap().n_generators(), 2);
    assert_eq!(
        nps::canonical_ideal(&realize("four-generic-lines")).unwrap().n_generators(),
        3
    );
    let single = nps::canonical_ideal(&realize("single-vertex")).unwrap();
    assert_eq!(single.generator_strings(), vec!["x1*y1*y2"]);
}

#[test]
fn preconditions_hold_for_every_fixture_ideal() {
    for name in ALL_FIXTURES {
        let ideal = nps::matroid_ideal(&realize(name));
        assert!(nps::regularity_precondition_check(&ideal).pass(), "{name}");
    }
}

#[test]
fn resolutions_are_faithful_and_acyclic_on_every_fixture() {
    for name in ALL_FIXTURES {
        let res = nps::cellular_resolution(&realize(name)).unwrap();
        assert!(nps::check_faithful(&res), "{name}");
        for field in nps::FIELD_BATTERY {
            assert!(nps::check_acyclic(&res, field), "{name} over {field}");
        }
    }
}

#[test]
fn nongp_fails_full_rank_because_of_its_third_element() {
    let aom = realize("nongp-cm-arr");
    // Element 3 (index 2) is not a loop yet appears in no bounded support.
    assert!(!aom.om().is_loop(2));
    assert!(aom
        .bounded_complex()
        .iter()
        .all(|v| v.get(2) == Sign::Zero));
    assert!(!aom.full_rank().full_rank);
}

#[test]
fn reorienting_any_single_cell_preserves_cohomology() {
    let aom = realize("cm-arr-1");
    let complex = bounded_cell_complex(&aom).unwrap();
    let reference: Vec<Vec<usize>> = (1..complex.n_cells())
        .map(|i| complex.cochain_complex(complex.up_set(i)).unwrap().betti(Field::Q))
        .collect();
    for flip in 1..complex.n_cells() {
        let mut flipped = complex.clone();
        flipped.flip_orientation(flip);
        for (k, i) in (1..flipped.n_cells()).enumerate() {
            let betti =
                flipped.cochain_complex(flipped.up_set(i)).unwrap().betti(Field::Q);
            assert_eq!(betti, reference[k], "flip {flip}, cell {i}");
        }
    }
}

#[test]
fn euler_characteristic_matches_rational_betti_numbers() {
    for name in ALL_FIXTURES {
        let delta = complex_from_ideal(&nps::matroid_ideal(&realize(name)));
        let betti = delta.reduced_betti(Field::Q);
        let reduced_euler: i64 = betti
            .iter()
            .enumerate()
            .map(|(k, &b)| {
                // index k is degree k-1
                if (k as i64 - 1).rem_euclid(2) == 0 { b as i64 } else { -(b as i64) }
            })
            .sum();
        assert_eq!(
            delta.euler_characteristic() - 1,
            reduced_euler,
            "{name}: Euler characteristic vs Betti numbers"
        );
    }
}

#[test]
fn integral_vanishing_matches_field_vanishing_on_links() {
    // Vanishing below a degree over Z is the same as vanishing there over
    // the rationals and every prime field in the battery; and a free rank
    // one group looks one-dimensional over every field.
    for name in ALL_FIXTURES {
        let delta = complex_from_ideal(&nps::matroid_ideal(&realize(name)));
        for face in delta.faces() {
            let link = delta.link(face).unwrap();
            let integral = link.reduced_homology_z();
            let tables: Vec<Vec<usize>> = [Field::Q, Field::Fp(2), Field::Fp(3), Field::Fp(5)]
                .iter()
                .map(|&f| link.reduced_betti(f))
                .collect();
            for below in 0..=integral.len() {
                let z_vanishes = integral[..below].iter().all(AbelianGroup::is_zero);
                let fields_vanish = tables
                    .iter()
                    .all(|t| t[..below].iter().all(|&b| b == 0));
                assert_eq!(z_vanishes, fields_vanish, "{name}: face {face:#b}");
            }
        }
    }
}

#[test]
fn matroid_complexes_are_cohen_macaulay_over_every_field() {
    for name in ALL_FIXTURES {
        let bar = nps::matroid_ideal(&realize(name)).specialize();
        let delta = complex_from_ideal(&bar);
        if delta.is_matroid_complex() {
            for field in nps::FIELD_BATTERY {
                assert!(delta.is_cm_reisner(field).is_cm(), "{name} over {field}");
            }
        }
    }
}
