//! Basis changes: the chiral splitting of the doubly extended table,
//! round trips through inverse maps, and the anisotropic family that a
//! linear map straightens onto the isotropic algebra.

mod common;

use algebra_core::{catalog_load, change_basis, AlgebraError, BasisMap, Generator};
use common::{num, p, rat, two_frequency_table};
use symbolic_core::ParamScalar;

fn even_gens(names: &[&str]) -> Vec<Generator> {
    names.iter().map(|n| Generator::even(n)).collect()
}

fn zero_rows(n: usize) -> Vec<Vec<ParamScalar>> {
    vec![vec![ParamScalar::zero(); n]; n]
}

/// Map writing the chiral generators over the covariant basis; rows
/// follow the chiral table's generator order Jp, Jp1, Jp2, Jm, Jm1,
/// Jm2, Zp, Zm, columns the covariant order H, J, P1, P2, K1, K2, Z, Zt.
fn chiral_to_covariant() -> BasisMap {
    let half = rat(1, 2);
    let half_r = &rat(1, 2) * &p("R");
    let mut rows = zero_rows(8);
    rows[0][1] = half.clone(); //  Jp  =  J/2 + (R/2) H
    rows[0][0] = half_r.clone();
    rows[1][5] = half.clone(); //  Jp1 =  K2/2 - (R/2) P1
    rows[1][2] = -&half_r;
    rows[2][4] = -&half; //        Jp2 = -K1/2 - (R/2) P2
    rows[2][3] = -&half_r;
    rows[3][1] = half.clone(); //  Jm  =  J/2 - (R/2) H
    rows[3][0] = -&half_r;
    rows[4][5] = half.clone(); //  Jm1 =  K2/2 + (R/2) P1
    rows[4][2] = half_r.clone();
    rows[5][4] = -&half; //        Jm2 = -K1/2 + (R/2) P2
    rows[5][3] = half_r.clone();
    rows[6][7] = -&half; //        Zp  = -Zt/2 - (R/2) Z
    rows[6][6] = -&half_r;
    rows[7][7] = -&half; //        Zm  = -Zt/2 + (R/2) Z
    rows[7][6] = half_r;
    BasisMap {
        new_generators: even_gens(&["H", "J", "P1", "P2", "K1", "K2", "Z", "Zt"]),
        rows,
    }
}

#[test]
fn chiral_splitting_matches_the_covariant_table() {
    let chiral = catalog_load("ENH_chiral").unwrap();
    let covariant = catalog_load("ENH_cov").unwrap();
    let rebased = change_basis(&chiral, &chiral_to_covariant()).unwrap();
    assert!(
        rebased.structure_eq(&covariant),
        "rebased chiral table:\n{rebased}\nexpected:\n{covariant}"
    );
    // Both chiral extensions land inside the covariant central pair.
    let centrals: Vec<String> = rebased
        .central_elements()
        .into_iter()
        .map(|g| g.name)
        .collect();
    assert_eq!(centrals, ["Z", "Zt"]);
}

#[test]
fn identity_change_of_basis_is_inert() {
    for name in ["ENH_cov", "Galileo_exotic", "NCLP_NH_super"] {
        let table = catalog_load(name).unwrap();
        let map = BasisMap::identity(table.generators());
        let rebased = change_basis(&table, &map).unwrap();
        assert!(rebased.structure_eq(&table), "{name} changed under identity");
    }
}

#[test]
fn a_map_followed_by_its_inverse_restores_the_table() {
    let chiral = catalog_load("ENH_chiral").unwrap();
    let map = chiral_to_covariant();
    let forward = change_basis(&chiral, &map).unwrap();
    let back = map.inverted(chiral.generators()).unwrap();
    let restored = change_basis(&forward, &back).unwrap();
    assert!(restored.structure_eq(&chiral));
}

#[test]
fn the_frequency_split_family_straightens_onto_the_isotropic_table() {
    let ap = p("alpha_p");
    let am = p("alpha_m");
    let aniso = two_frequency_table(&ap, &am);
    assert!(aniso.check_graded_jacobi().pass);

    // mean = (ap + am)/2, skew = (ap - am)/2; the map keeps J, K and Zt
    // fixed and shears H, P and Z by skew/R.
    let mean = &rat(1, 2) * &(&ap + &am);
    let skew_r = &(&rat(1, 2) * &(&ap - &am)) * &p("R").recip().unwrap();
    let mut rows = zero_rows(8);
    rows[0][0] = mean.clone(); //  H_a  = mean H + (skew/R) J
    rows[0][1] = skew_r.clone();
    rows[1][1] = num(1); //        J_a  = J
    rows[2][2] = mean.clone(); //  P_a1 = mean P1 + (skew/R) K2
    rows[2][5] = skew_r.clone();
    rows[3][3] = mean.clone(); //  P_a2 = mean P2 - (skew/R) K1
    rows[3][4] = -&skew_r;
    rows[4][4] = num(1);
    rows[5][5] = num(1);
    rows[6][6] = mean; //          Z_a  = mean Z - (skew/R) Zt
    rows[6][7] = -&skew_r;
    rows[7][7] = num(1);
    let map = BasisMap {
        new_generators: even_gens(&["H", "J", "P1", "P2", "K1", "K2", "Z", "Zt"]),
        rows,
    };

    let one = num(1);
    let iso = two_frequency_table(&one, &one);
    let straightened = change_basis(&aniso, &map).unwrap();
    assert!(
        straightened.structure_eq(&iso),
        "straightened table:\n{straightened}\nexpected:\n{iso}"
    );
}

#[test]
fn parity_mixing_maps_are_rejected() {
    let table = catalog_load("NCLP_NH_super").unwrap();
    let mut map = BasisMap::identity(table.generators());
    let q1 = table.generator_index("Q1").unwrap();
    let h = table.generator_index("H").unwrap();
    map.rows[q1][h] = num(1);
    match change_basis(&table, &map) {
        Err(AlgebraError::ParityMixedMap { old, new }) => {
            assert_eq!(old, "Q1");
            assert_eq!(new, "H");
        }
        other => panic!("expected a parity-mixing rejection, got {other:?}"),
    }
}

#[test]
fn singular_maps_are_rejected() {
    let table = catalog_load("ENH_cov").unwrap();
    let mut map = BasisMap::identity(table.generators());
    for entry in map.rows[3].iter_mut() {
        *entry = ParamScalar::zero();
    }
    assert!(matches!(
        change_basis(&table, &map),
        Err(AlgebraError::SingularBasisMap)
    ));
}
