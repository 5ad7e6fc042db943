//! Regenerates the bundled fixture corpus under `fixtures/`.
//!
//! Each orbit fixture pins one generating vector per table row: the search
//! enumerates conjugation classes deterministically and the first class whose
//! orbit decomposition equals the expected row is frozen into the JSON file.
//! Rows where no class matches abort the run, so a transcription error in an
//! expected table cannot silently produce a fixture.
//!
//! Usage: `cargo run --release -p theta-orbits --example regen_fixtures [DIR]`

use serde_json::json;
use theta_orbits::cover::{
    build_symplectic_rep, find_generating_vectors, RamificationData,
};
use theta_orbits::perm::{standard, Perm, PermGroup};
use theta_orbits::ramification::Signature;
use theta_orbits::theta::orbit_decomposition;

struct Row {
    name: &'static str,
    description: &'static str,
    gens: Vec<Perm>,
    g0: usize,
    orders: Vec<u64>,
    genus: u64,
    odd: Vec<(u64, u64)>,
    even: Vec<(u64, u64)>,
    invariant: u64,
}

#[allow(clippy::too_many_arguments)]
fn row(
    name: &'static str,
    description: &'static str,
    gens: Vec<Perm>,
    g0: usize,
    orders: Vec<u64>,
    genus: u64,
    odd: &[(u64, u64)],
    even: &[(u64, u64)],
    invariant: u64,
) -> Row {
    Row {
        name,
        description,
        gens,
        g0,
        orders,
        genus,
        odd: odd.to_vec(),
        even: even.to_vec(),
        invariant,
    }
}

fn rows() -> Vec<Row> {
    use standard::*;
    vec![
        // ----- genus 2, all reduced-automorphism-group classes -----
        row(
            "g2_c2",
            "generic genus-2 curve with an extra involution; C2 with signature (1; 2, 2)",
            cyclic(2), 1, vec![2, 2], 2,
            &[(2, 3)], &[(1, 4), (2, 3)], 4,
        ),
        row(
            "g2_d4",
            "genus-2 curve with reduced group V4; built from the full order-8 group, (0; 2,2,2,4)",
            dihedral(4), 0, vec![2, 2, 2, 4], 2,
            &[(2, 1), (4, 1)], &[(1, 2), (2, 2), (4, 1)], 2,
        ),
        row(
            "g2_c5",
            "the order-5 cyclic action on a genus-2 curve, (0; 5,5,5)",
            cyclic(5), 0, vec![5, 5, 5], 2,
            &[(1, 1), (5, 1)], &[(5, 2)], 1,
        ),
        row(
            "g2_s3",
            "S3 acting on a genus-2 curve with (0; 2,2,3,3)",
            symmetric(3), 0, vec![2, 2, 3, 3], 2,
            &[(6, 1)], &[(1, 1), (3, 3)], 1,
        ),
        row(
            "g2_d6",
            "genus-2 curve with reduced group D6 (order 12); built from the full order-24 group, (0; 2, 4, 6)",
            extended_dihedral_24(), 0, vec![2, 4, 6], 2,
            &[(6, 1)], &[(1, 1), (3, 1), (6, 1)], 1,
        ),
        row(
            "g2_gl23",
            "genus-2 curve with reduced group S4; built from the full order-48 group, (0; 2,3,8)",
            gl2_3(), 0, vec![2, 3, 8], 2,
            &[(6, 1)], &[(4, 1), (6, 1)], 0,
        ),
        // ----- genus 3 -----
        row(
            "g3_c2",
            "generic genus-3 curve with an involution, C2 with (1; 2,2,2,2)",
            cyclic(2), 1, vec![2, 2, 2, 2], 3,
            &[(1, 4), (2, 12)], &[(1, 12), (2, 12)], 16,
        ),
        row(
            "g3_c3",
            "C3 with (0; 3^5) on a genus-3 curve",
            cyclic(3), 0, vec![3; 5], 3,
            &[(1, 1), (3, 9)], &[(3, 12)], 1,
        ),
        row(
            "g3_v4",
            "V4 with (0; 2^6) on a genus-3 curve (faithful class)",
            klein_four(), 0, vec![2; 6], 3,
            &[(2, 6), (4, 4)], &[(1, 8), (2, 6), (4, 4)], 8,
        ),
        row(
            "g3_s3",
            "S3 with (0; 2^4, 3) on a genus-3 curve",
            symmetric(3), 0, vec![2, 2, 2, 2, 3], 3,
            &[(1, 1), (3, 3), (6, 3)], &[(1, 3), (3, 9), (6, 1)], 4,
        ),
        row(
            "g3_c6",
            "C6 with (0; 2, 3, 3, 6) on a genus-3 curve",
            cyclic(6), 0, vec![2, 3, 3, 6], 3,
            &[(1, 1), (3, 1), (6, 4)], &[(3, 4), (6, 4)], 1,
        ),
        row(
            "g3_d4",
            "the order-8 dihedral group with (0; 2^5) on a genus-3 curve",
            dihedral(4), 0, vec![2; 5], 3,
            &[(4, 5), (8, 1)], &[(1, 4), (2, 4), (4, 4), (8, 1)], 4,
        ),
        row(
            "g3_c9",
            "C9 with (0; 3, 9, 9) on a genus-3 curve",
            cyclic(9), 0, vec![3, 9, 9], 3,
            &[(1, 1), (9, 3)], &[(9, 4)], 1,
        ),
        row(
            "g3_pauli16",
            "the order-16 central product (SmallGroup(16,13)) with (0; 2,2,2,4)",
            pauli_16(), 0, vec![2, 2, 2, 4], 3,
            &[(4, 1), (8, 3)], &[(2, 6), (8, 3)], 0,
        ),
        row(
            "g3_s4",
            "S4 with (0; 2,2,2,3) on a genus-3 curve",
            symmetric(4), 0, vec![2, 2, 2, 3], 3,
            &[(4, 1), (12, 2)], &[(1, 2), (3, 2), (4, 1), (6, 2), (12, 1)], 2,
        ),
        row(
            "g3_fermat96",
            "the order-96 reduced group of the Fermat quartic, (0; 2, 3, 8)",
            fermat_96(), 0, vec![2, 3, 8], 3,
            &[(12, 1), (16, 1)], &[(4, 2), (12, 1), (16, 1)], 0,
        ),
        row(
            "g3_klein",
            "the Klein quartic: PSL(2,7) with (0; 2, 3, 7)",
            psl2(7), 0, vec![2, 3, 7], 3,
            &[(28, 1)], &[(1, 1), (7, 2), (21, 1)], 1,
        ),
        row(
            "g3_c7_hyp",
            "hyperelliptic genus-3 curve with C7, (0; 7, 7, 7)",
            cyclic(7), 0, vec![7, 7, 7], 3,
            &[(7, 4)], &[(1, 1), (7, 5)], 1,
        ),
        row(
            "g3_d4_hyp",
            "hyperelliptic genus-3 curve with the order-8 dihedral group, (0; 2, 2, 4, 4)",
            dihedral(4), 0, vec![2, 2, 4, 4], 3,
            &[(4, 5), (8, 1)], &[(1, 4), (2, 4), (4, 4), (8, 1)], 4,
        ),
        row(
            "g3_s4_hyp",
            "hyperelliptic genus-3 curve with S4, (0; 3, 4, 4)",
            symmetric(4), 0, vec![3, 4, 4], 3,
            &[(4, 1), (12, 2)], &[(1, 2), (3, 2), (4, 1), (6, 2), (12, 1)], 2,
        ),
        // ----- genus 4 -----
        row(
            "g4_c2_handles1",
            "C2 with (1; 2^6) on a genus-4 curve",
            cyclic(2), 1, vec![2; 6], 4,
            &[(1, 24), (2, 48)], &[(1, 40), (2, 48)], 64,
        ),
        row(
            "g4_c2_handles2",
            "C2 with (2; 2, 2) on a genus-4 curve",
            cyclic(2), 2, vec![2, 2], 4,
            &[(2, 60)], &[(1, 16), (2, 60)], 16,
        ),
        row(
            "g4_v4_flat",
            "V4 with (0; 2^7) on a genus-4 curve (the larger invariant class)",
            klein_four(), 0, vec![2; 7], 4,
            &[(2, 24), (4, 18)], &[(1, 16), (2, 24), (4, 18)], 16,
        ),
        row(
            "g4_v4_handle",
            "V4 with (1; 2^3) on a genus-4 curve",
            klein_four(), 1, vec![2, 2, 2], 4,
            &[(4, 30)], &[(1, 4), (2, 18), (4, 24)], 4,
        ),
        row(
            "g4_d4",
            "the order-8 dihedral group with (0; 2^4, 4) on a genus-4 curve",
            dihedral(4), 0, vec![2, 2, 2, 2, 4], 4,
            &[(4, 12), (8, 9)], &[(1, 4), (2, 6), (4, 18), (8, 6)], 4,
        ),
        row(
            "g4_c4",
            "C4 with (0; 2, 4^4) on a genus-4 curve",
            cyclic(4), 0, vec![2, 4, 4, 4, 4], 4,
            &[(1, 4), (2, 10), (4, 24)], &[(1, 4), (2, 18), (4, 24)], 8,
        ),
        row(
            "g4_s3",
            "S3 with (0; 2^6) on a genus-4 curve",
            symmetric(3), 0, vec![2; 6], 4,
            &[(1, 6), (3, 18), (6, 10)], &[(1, 10), (3, 30), (6, 6)], 16,
        ),
        row(
            "g4_d6",
            "the order-12 dihedral group with (0; 2^5) on a genus-4 curve",
            dihedral(6), 0, vec![2; 5], 4,
            &[(2, 3), (6, 13), (12, 3)], &[(1, 4), (2, 3), (3, 12), (6, 9), (12, 3)], 4,
        ),
        row(
            "g4_c3",
            "C3 with (0; 3^6) on a genus-4 curve",
            cyclic(3), 0, vec![3; 6], 4,
            &[(3, 40)], &[(1, 1), (3, 45)], 1,
        ),
        row(
            "g4_c3_handle",
            "C3 with (1; 3^3) on a genus-4 curve",
            cyclic(3), 1, vec![3, 3, 3], 4,
            &[(1, 3), (3, 39)], &[(1, 1), (3, 45)], 4,
        ),
        row(
            "g4_a4",
            "A4 with (0; 2, 3^3) on a genus-4 curve (unique invariant without SOC)",
            alternating(4), 0, vec![2, 3, 3, 3], 4,
            &[(4, 3), (12, 9)], &[(1, 1), (3, 1), (6, 6), (12, 8)], 1,
        ),
        row(
            "g4_c6",
            "C6 with (0; 2, 6^3) on a genus-4 curve",
            cyclic(6), 0, vec![2, 6, 6, 6], 4,
            &[(1, 3), (3, 7), (6, 16)], &[(1, 1), (3, 13), (6, 16)], 4,
        ),
        row(
            "g4_c12",
            "C12 with (0; 4, 6, 12) on a genus-4 curve",
            cyclic(12), 0, vec![4, 6, 12], 4,
            &[(1, 1), (2, 1), (3, 1), (6, 3), (12, 8)], &[(1, 1), (3, 1), (6, 6), (12, 8)], 2,
        ),
        row(
            "g4_c5",
            "C5 with (0; 5^4) on a genus-4 curve",
            cyclic(5), 0, vec![5; 4], 4,
            &[(5, 24)], &[(1, 1), (5, 27)], 1,
        ),
        row(
            "g4_c10",
            "C10 with (0; 5, 10, 10) on a genus-4 curve",
            cyclic(10), 0, vec![5, 10, 10], 4,
            &[(10, 12)], &[(1, 1), (5, 3), (10, 12)], 1,
        ),
        row(
            "g4_c15",
            "C15 with (0; 3, 5, 15) on a genus-4 curve",
            cyclic(15), 0, vec![3, 5, 15], 4,
            &[(15, 8)], &[(1, 1), (15, 9)], 1,
        ),
        row(
            "g4_c6xc2",
            "C6 x C2 with (0; 2, 2, 3, 6) on a genus-4 curve",
            standard::direct_product(&cyclic(6), &cyclic(2)), 0, vec![2, 2, 3, 6], 4,
            &[(6, 8), (12, 6)], &[(1, 1), (3, 5), (6, 8), (12, 6)], 1,
        ),
        row(
            "g4_c3xs3",
            "C3 x S3 with (0; 2, 2, 3, 3) on a genus-4 curve",
            standard::direct_product(&cyclic(3), &symmetric(3)), 0, vec![2, 2, 3, 3], 4,
            &[(3, 2), (6, 1), (9, 6), (18, 3)], &[(1, 1), (3, 3), (9, 10), (18, 2)], 1,
        ),
        row(
            "g4_s3xs3",
            "S3 x S3 with (0; 2, 2, 2, 3) on a genus-4 curve",
            standard::direct_product(&symmetric(3), &symmetric(3)), 0, vec![2, 2, 2, 3], 4,
            &[(6, 2), (18, 6)], &[(1, 1), (3, 6), (9, 9), (36, 1)], 1,
        ),
        row(
            "g4_s3wrc2",
            "S3 wr C2 (order 72) with (0; 2, 4, 6) on a genus-4 curve",
            s3_wreath_c2(), 0, vec![2, 4, 6], 4,
            &[(12, 1), (36, 3)], &[(1, 1), (6, 3), (9, 3), (18, 3), (36, 1)], 1,
        ),
        row(
            "g4_c3xs4",
            "C3 x S4 with (0; 2, 3, 12) on a genus-4 curve",
            standard::direct_product(&cyclic(3), &symmetric(4)), 0, vec![2, 3, 12], 4,
            &[(12, 2), (24, 1), (36, 2)], &[(1, 1), (3, 1), (12, 2), (18, 2), (36, 2)], 1,
        ),
        row(
            "g4_d5",
            "the order-10 dihedral group with (0; 2, 2, 5, 5) on a genus-4 curve",
            dihedral(5), 0, vec![2, 2, 5, 5], 4,
            &[(10, 12)], &[(1, 1), (5, 15), (10, 6)], 1,
        ),
        row(
            "g4_d6_quot",
            "the order-12 dihedral group with (0; 2, 2, 3, 6) on a genus-4 curve",
            dihedral(6), 0, vec![2, 2, 3, 6], 4,
            &[(12, 10)], &[(1, 1), (3, 3), (6, 13), (12, 4)], 1,
        ),
        row(
            "g4_c6xs3",
            "C6 x S3 with (0; 2, 6, 6) on a genus-4 curve",
            standard::direct_product(&cyclic(6), &symmetric(3)), 0, vec![2, 6, 6], 4,
            &[(6, 2), (18, 4), (36, 1)], &[(1, 1), (3, 1), (6, 1), (9, 4), (18, 3), (36, 1)], 1,
        ),
        row(
            "g4_c9_hyp",
            "hyperelliptic genus-4 curve with C9, (0; 9, 9, 9)",
            cyclic(9), 0, vec![9, 9, 9], 4,
            &[(3, 1), (9, 13)], &[(1, 1), (9, 15)], 1,
        ),
        row(
            "g4_s5_bring",
            "Bring's curve: S5 with (0; 2, 4, 5)",
            symmetric(5), 0, vec![2, 4, 5], 4,
            &[(20, 3), (60, 1)], &[(1, 1), (5, 3), (10, 3), (30, 3)], 1,
        ),
        // ----- Wiman curves y^2 = x^p - 1 for p = 11, 13 (5 and 7 above) -----
        row(
            "g5_c11_wiman",
            "hyperelliptic genus-5 curve with C11, (0; 11, 11, 11)",
            cyclic(11), 0, vec![11, 11, 11], 5,
            &[(1, 1), (11, 45)], &[(11, 48)], 1,
        ),
        row(
            "g6_c13_wiman",
            "hyperelliptic genus-6 curve with C13, (0; 13, 13, 13)",
            cyclic(13), 0, vec![13, 13, 13], 6,
            &[(1, 1), (13, 155)], &[(13, 160)], 1,
        ),
        // ----- higher-genus spot checks -----
        row(
            "g7_c15_hyp",
            "hyperelliptic genus-7 curve with C15, (0; 15, 15, 15)",
            cyclic(15), 0, vec![15, 15, 15], 7,
            &[(3, 1), (5, 2), (15, 541)], &[(1, 1), (5, 1), (15, 550)], 1,
        ),
        row(
            "g7_psl28",
            "the genus-7 Hurwitz curve: PSL(2,8) with (0; 2, 3, 7)",
            psl2_8(), 0, vec![2, 3, 7], 7,
            &[(28, 1), (36, 1), (252, 14), (504, 9)],
            &[(28, 3), (36, 3), (126, 16), (252, 18), (504, 3)], 0,
        ),
        row(
            "g8_c17_hyp",
            "hyperelliptic genus-8 curve with C17, (0; 17, 17, 17)",
            cyclic(17), 0, vec![17, 17, 17], 8,
            &[(17, 1920)], &[(1, 1), (17, 1935)], 1,
        ),
        row(
            "g9_frob57",
            "genus-9 curve with the order-57 Frobenius group, (0; 3, 3, 19)",
            frobenius(19, 7), 0, vec![3, 3, 19], 9,
            &[(1, 1), (19, 27), (57, 2286)], &[(19, 36), (57, 2292)], 1,
        ),
        row(
            "g9_c19_hyp",
            "hyperelliptic genus-9 curve with C19, (0; 19, 19, 19)",
            cyclic(19), 0, vec![19, 19, 19], 9,
            &[(1, 1), (19, 6885)], &[(19, 6912)], 1,
        ),
    ]
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    std::fs::create_dir_all(&dir).expect("fixture directory");

    for r in rows() {
        let group = PermGroup::from_generators(&r.gens).expect("group closes");
        let sig = Signature::new(r.g0, r.orders.clone()).expect("valid signature");
        let classes =
            find_generating_vectors(&group, &sig, 200_000_000).expect("search in range");
        assert!(!classes.is_empty(), "{}: no generating vectors", r.name);
        let mut chosen = None;
        for v in &classes {
            let data = RamificationData::new(group.clone(), sig.clone(), v.clone());
            let rep = build_symplectic_rep(&data).expect("rep builds");
            let maps = rep.affine_maps_of(&data.vector.entries()).expect("maps");
            let table = orbit_decomposition(&maps, rep.genus() as usize).expect("orbits");
            if rep.genus() == r.genus
                && table.odd == r.odd
                && table.even == r.even
                && table.invariant_count == r.invariant
            {
                chosen = Some(v.clone());
                break;
            }
        }
        let vector = chosen.unwrap_or_else(|| {
            panic!("{}: no class matches the expected table", r.name)
        });
        let mut gv: Vec<Vec<usize>> = Vec::new();
        for (a, b) in &vector.handles {
            gv.push(a.images());
            gv.push(b.images());
        }
        for g in &vector.branch {
            gv.push(g.images());
        }
        let doc = json!({
            "kind": "orbits",
            "name": r.name,
            "description": r.description,
            "input": {
                "degree": group.degree(),
                "group_generators": r.gens.iter().map(Perm::images).collect::<Vec<_>>(),
                "signature": r.orders,
                "quotient_genus": r.g0,
                "generating_vector": gv,
            },
            "expected": {
                "genus": r.genus,
                "odd": r.odd,
                "even": r.even,
                "I": r.invariant,
            },
        });
        let path = format!("{dir}/{}.json", r.name);
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap() + "\n").unwrap();
        println!("wrote {path}");
    }
}
