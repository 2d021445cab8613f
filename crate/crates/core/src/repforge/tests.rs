use super::*;
use crate::exact::rat_int;
use crate::hermcat::SpaceTag;
use num_traits::Signed;

fn algebra(tag: SpaceTag) -> Algebra {
    Algebra::new(Space::new(tag).unwrap()).unwrap()
}

#[test]
fn su_rho_phi_matrix_is_block_scalar() {
    // ρ_{α_k} = (i/n)·diag((n−k)·1_k, −k·1_{n−k})
    for (n, k) in [(4usize, 2usize), (5, 2), (6, 1)] {
        let alg = algebra(SpaceTag::AIII { n, k });
        let rho = alg.torus_element(&alg.fundamental, &alg.space.omega);
        for a in 0..n {
            let want = if a < k {
                CRat::new(Rat::zero(), rat(n as i64 - k as i64, n as i64))
            } else {
                CRat::new(Rat::zero(), rat(-(k as i64), n as i64))
            };
            assert_eq!(rho.get(a, a), want, "su({n}) k={k} slot {a}");
        }
    }
}

#[test]
fn so_sigma_rho_phi_sits_in_last_plane() {
    // BDI: ρ_φ = diag(0_n, σ) with eigenvalues {0, ±i}.
    for n in [4usize, 5] {
        let alg = algebra(SpaceTag::BDI { n });
        let rho = alg.torus_element(&alg.fundamental, &alg.space.omega);
        let m = n + 2;
        let mut expect = SparseMat::zero(m);
        expect.set(m - 2, m - 1, CRat::one());
        expect.set(m - 1, m - 2, -CRat::one());
        assert_eq!(rho, expect, "so({m})");
    }
}

#[test]
fn so_split_rho_phi_is_half_rotation() {
    // DIII: ρ_φ = [[0, ½·1],[−½·1, 0]].
    let alg = algebra(SpaceTag::DIII { n: 4 });
    let rho = alg.torus_element(&alg.fundamental, &alg.space.omega);
    let mut expect = SparseMat::zero(8);
    for a in 0..4 {
        expect.set(a, 4 + a, CRat::from_rat(rat(1, 2)));
        expect.set(4 + a, a, CRat::from_rat(rat(-1, 2)));
    }
    assert_eq!(rho, expect);
}

#[test]
fn sp_rho_phi_is_half_diagonal() {
    // CI: ρ_φ = i·diag(½·1_n, −½·1_n).
    let alg = algebra(SpaceTag::CI { n: 3 });
    let rho = alg.torus_element(&alg.fundamental, &alg.space.omega);
    let mut expect = SparseMat::zero(6);
    for a in 0..3 {
        expect.set(a, a, CRat::new(Rat::zero(), rat(1, 2)));
        expect.set(3 + a, 3 + a, CRat::new(Rat::zero(), rat(-1, 2)));
    }
    assert_eq!(rho, expect);
}

#[test]
fn spin_rho_phi_matches_occupation_form() {
    // S(ρ_φ) = i(Γ_m̄ Γ_m − ½) in the last plane, eigenvalues ±i/2.
    for n in [4usize, 5, 6] {
        let alg = algebra(SpaceTag::BDI { n });
        let spin = alg.spin.as_ref().unwrap();
        let rho = alg.torus_element(spin, &alg.space.omega);
        let m = n + 2;
        let blocks = m / 2;
        let gammas = gamma_matrices(m);
        let (cre, ann) = (&gammas[m - 2], &gammas[m - 1]);
        // Γ_last = ½(γ_{m−2} − i·γ_{m−1}), Γ_last-bar likewise; recombine.
        let gamma_last = cre
            .sub(&ann.scale(&CRat::i()))
            .scale(&CRat::from_rat(rat(1, 2)));
        let gamma_last_bar = cre
            .add(&ann.scale(&CRat::i()))
            .scale(&CRat::from_rat(rat(1, 2)));
        let expect = gamma_last_bar
            .mul(&gamma_last)
            .sub(&SparseMat::identity(1 << blocks).scale(&CRat::from_rat(rat(1, 2))))
            .scale(&CRat::i());
        assert_eq!(rho, expect, "so({m}) spin");
        // Eigenvalues ±i/2 on the occupation basis.
        for s in 0..(1usize << blocks) {
            let v = rho.get(s, s);
            assert_eq!(v.re, Rat::zero());
            assert_eq!(v.im.abs(), rat(1, 2));
        }
    }
}

#[test]
fn spin_dimension_and_so4_split() {
    let alg = algebra(SpaceTag::BDI { n: 4 }); // so(6), blocks 3
    assert_eq!(alg.spin.as_ref().unwrap().dim, 8);
    let alg = algebra(SpaceTag::BDI { n: 5 }); // so(7)
    assert_eq!(alg.spin.as_ref().unwrap().dim, 8);
    // so(4) splits into two half-spinors of dimension 2: oracle for the
    // summand bookkeeping, via the gamma construction directly.
    let gammas = gamma_matrices(4);
    assert_eq!(gammas[0].dim, 4);
    let even: Vec<usize> = (0..4u32)
        .filter(|s| s.count_ones() % 2 == 0)
        .map(|s| s as usize)
        .collect();
    assert_eq!(even.len(), 2);
}

#[test]
fn all_slots_anti_hermitian_and_weights_exact() {
    for tag in [
        SpaceTag::AIII { n: 4, k: 1 },
        SpaceTag::BDI { n: 4 },
        SpaceTag::BDI { n: 5 },
        SpaceTag::DIII { n: 3 },
        SpaceTag::CI { n: 2 },
    ] {
        let alg = algebra(tag);
        for rep in alg.reps() {
            for m in &rep.slots {
                assert!(m.is_anti_hermitian(), "{tag} {}", rep.label);
            }
            // R(i·h_s)·v_λ = i·⟨λ, α_s∨⟩·v_λ exactly.
            for s in 0..alg.space.system.rank {
                for wv in &rep.weights {
                    let got = rep.slots[s].apply(&wv.vec);
                    let pairing = alg
                        .space
                        .system
                        .coroot_pairing(&wv.weight, alg.space.system.simple_root(s));
                    let want: Vec<CRat> = wv
                        .vec
                        .iter()
                        .map(|c| c * &CRat::new(Rat::zero(), pairing.clone()))
                        .collect();
                    assert_eq!(got, want, "{tag} {} torus {s}", rep.label);
                }
            }
        }
    }
}

#[test]
fn su2_root_vector_is_elementary() {
    let alg = algebra(SpaceTag::AIII { n: 2, k: 1 });
    let e = alg.fundamental.e_plus(&alg.layout, 0);
    let mut want = SparseMat::zero(2);
    want.set(0, 1, CRat::one());
    assert_eq!(e, want);
    let h = e.commutator(&alg.fundamental.e_minus(&alg.layout, 0));
    let mut hw = SparseMat::zero(2);
    hw.set(0, 0, CRat::one());
    hw.set(1, 1, -CRat::one());
    assert_eq!(h, hw);
}

#[test]
fn root_vectors_have_torus_eigenvalues() {
    // [i·h_s, e_α] = i⟨α, α_s∨⟩ e_α for every positive root.
    for tag in [
        SpaceTag::CI { n: 3 },
        SpaceTag::BDI { n: 5 },
        SpaceTag::DIII { n: 4 },
    ] {
        let alg = algebra(tag);
        for rep in alg.reps() {
            for p in 0..alg.layout.positives {
                let e = rep.e_plus(&alg.layout, p);
                for s in 0..alg.space.system.rank {
                    let lhs = rep.slots[s].commutator(&e);
                    let pairing = alg.space.system.coroot_pairing(
                        &alg.space.system.positive[p],
                        alg.space.system.simple_root(s),
                    );
                    let rhs = e.scale(&CRat::new(Rat::zero(), pairing));
                    assert_eq!(lhs, rhs, "{tag} {} root {p} torus {s}", rep.label);
                }
            }
        }
    }
}

#[test]
fn bracket_closure_all_pairs() {
    // [R(a), R(b)] == R([a,b]) exactly, for every slot pair,
    // in both the fundamental and (for BDI) the spin representation.
    for tag in [
        SpaceTag::AIII { n: 4, k: 2 },
        SpaceTag::BDI { n: 4 },
        SpaceTag::BDI { n: 5 },
        SpaceTag::DIII { n: 3 },
        SpaceTag::CI { n: 2 },
    ] {
        let alg = algebra(tag);
        let dim = alg.layout.dim();
        for rep in alg.reps() {
            for i in 0..dim {
                for j in 0..dim {
                    let lhs = rep.slots[i].commutator(&rep.slots[j]);
                    let mut rhs = SparseMat::zero(rep.dim);
                    for (k, c) in &alg.structure.brackets[i][j] {
                        rhs = rhs.add(&rep.slots[*k].scale(&CRat::from_rat(c.clone())));
                    }
                    assert_eq!(lhs, rhs, "{tag} {} pair ({i},{j})", rep.label);
                }
            }
        }
    }
}

#[test]
fn structure_constants_are_real_by_construction() {
    // The constants are stored as rationals; verify a nontrivial sample
    // reproduces the hand bracket [ρ_φ-slot, x_α] relations: for the
    // noncompact φ root, [i·h, x] = ⟨…⟩ y.
    let alg = algebra(SpaceTag::CI { n: 2 });
    let p = alg.space.phi;
    let xs = alg.layout.x_slot(p);
    // J on the perp equals ad_{ρ_φ}: bracket of T(ω)-combination with x_φ is y_φ.
    let t = alg.structure.torus_coeffs(&alg.space, &alg.space.omega);
    let mut x = vec![Rat::zero(); alg.layout.dim()];
    x[xs] = Rat::one();
    let mut lie_t = vec![Rat::zero(); alg.layout.dim()];
    lie_t[..t.len()].clone_from_slice(&t);
    let br = alg.structure.bracket(&lie_t, &x);
    let ys = alg.layout.y_slot(p);
    for (k, c) in br.iter().enumerate() {
        let want = if k == ys { Rat::one() } else { Rat::zero() };
        assert_eq!(*c, want, "slot {k}");
    }
}

#[test]
fn j_squares_to_minus_one_and_projections_split() {
    let alg = algebra(SpaceTag::CI { n: 3 });
    let dim = alg.layout.dim();
    let mut v = LieElement::zeros(dim);
    // Populate an arbitrary exact element.
    for i in 0..dim {
        v.0[i] = rat(i as i64 % 5 - 2, 3);
    }
    // J kills the torus and squares to −1 on the root part.
    let jv = v.j_apply(&alg.layout);
    let jjv = jv.j_apply(&alg.layout);
    for i in 0..dim {
        match alg.layout.slot(i) {
            Slot::Torus(_) => assert_eq!(jv.0[i], Rat::zero()),
            _ => assert_eq!(jjv.0[i], -v.0[i].clone()),
        }
    }
    // Projection onto a subalgebra and its complement reassembles v
    // (the torus belongs to the subalgebra side only).
    let chain = alg.space.thimm_chain().unwrap();
    let mask = alg.layout.mask(&chain.levels[0].roots);
    let co_mask: Vec<bool> = mask.iter().map(|b| !b).collect();
    let p = v.project(&mask);
    let q = v.project(&co_mask);
    assert_eq!(p.add(&q), v);
    assert_eq!(p.project(&mask), p, "idempotence");
    for i in 0..dim {
        if !mask[i] {
            assert_eq!(p.0[i], Rat::zero());
        }
    }
}

#[test]
fn killing_ratio_is_twice_dual_coxeter() {
    // Killing = 2h∨ · b0: su(n) → 2n, so(m) → 2(m−2), sp(2n) → 2(n+1).
    let su = algebra(SpaceTag::AIII { n: 4, k: 2 });
    assert_eq!(su.structure.killing_to_b0, rat_int(8));
    let so7 = algebra(SpaceTag::BDI { n: 5 });
    assert_eq!(so7.structure.killing_to_b0, rat_int(10));
    let so8 = algebra(SpaceTag::DIII { n: 4 });
    assert_eq!(so8.structure.killing_to_b0, rat_int(12));
    let sp6 = algebra(SpaceTag::CI { n: 3 });
    assert_eq!(sp6.structure.killing_to_b0, rat_int(8));
}

#[test]
fn normalization_certificates() {
    // (e_α, e_{−α})·(α,α) = 2 under the normalized form, by construction;
    // the recorded trace/Killing ratios must be constant across simple
    // roots, and the fundamental Dynkin indices match the classics.
    let expectations = [
        (SpaceTag::AIII { n: 4, k: 2 }, rat_int(1)),
        (SpaceTag::BDI { n: 5 }, rat_int(2)), // so(7) vector: index 2 with long-root normalization
        (SpaceTag::CI { n: 3 }, rat_int(1)),
        (SpaceTag::DIII { n: 4 }, rat_int(2)),
    ];
    for (tag, want_index) in expectations {
        let alg = algebra(tag);
        let cert = alg.normalization_certificate(&alg.fundamental).unwrap();
        assert_eq!(cert.dynkin_index, want_index, "{tag}");
        for (s, _tr, _kil, ratio) in &cert.per_simple {
            assert_eq!(
                ratio,
                &(&cert.dynkin_index / &alg.structure.killing_to_b0),
                "{tag} simple {s}"
            );
        }
    }
}

#[test]
fn exceptional_spaces_have_no_matrix_rep() {
    assert!(Algebra::new(Space::new(SpaceTag::EIII).unwrap()).is_err());
}
