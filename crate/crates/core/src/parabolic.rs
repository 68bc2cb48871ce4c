//! Parabolic subalgebras indexed by sets of simple roots, the Lagrangian
//! fiber products and stabilizer algebras attached to boundary basepoints,
//! and the orbit combinatorics of the wonderful compactification.
//!
//! For a subset `J` of the simple roots, the parabolic `p_J` is generated by
//! the Borel together with the negative simple root spaces indexed by `J`;
//! its opposite, Levi `l_J = p_J intersect p_J^-`, and nilradicals are all
//! coordinate subspaces in the basis-adapted models, and the orbit indexed by
//! `J` fibers over `G/P_J x G/P_J^-` with fiber the adjoint quotient of the
//! Levi. Orbit closures order by inclusion of index sets, a Boolean lattice.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::{unit_vector, vector_concat, zero_vector, Vector};
use crate::subspace::Subspace;

#[derive(Clone)]
pub struct ParabolicData {
    /// 1-based simple-root indices, matching Dynkin labels.
    pub j: BTreeSet<usize>,
    pub p: Subspace,
    pub p_minus: Subspace,
    pub u: Subspace,
    pub u_minus: Subspace,
    pub levi: Subspace,
    pub levi_center: Subspace,
}

/// Positive Borel: Cartan plus the bracket closure of the positive simple
/// root spaces.
pub fn borel(g: &LieAlgebra) -> Result<Subspace> {
    borel_from(g, true)
}

pub fn borel_minus(g: &LieAlgebra) -> Result<Subspace> {
    borel_from(g, false)
}

fn borel_from(g: &LieAlgebra, positive: bool) -> Result<Subspace> {
    let datum = g.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
    let mut rows = datum.cartan_subalgebra.basis_rows();
    for (pos, neg) in &datum.simple_root_spaces {
        let side = if positive { pos } else { neg };
        rows.extend(side.basis_rows());
    }
    let seed = Subspace::span(&rows, g.dim())?;
    g.subalgebra_closure(&seed)
}

fn check_indices(g: &LieAlgebra, j: &BTreeSet<usize>) -> Result<usize> {
    let datum = g.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
    for &index in j {
        if index == 0 || index > datum.rank {
            return Err(Error::RootIndexOutOfRange {
                index,
                rank: datum.rank,
            });
        }
    }
    Ok(datum.rank)
}

/// Parabolic data for a subset of simple roots: `p_J` is the bracket closure
/// of the Borel and the selected negative simple root spaces, `p_J^-` its
/// opposite, and the rest is read off from the pair.
pub fn parabolic_data(g: &LieAlgebra, j: &BTreeSet<usize>) -> Result<ParabolicData> {
    check_indices(g, j)?;
    let datum = g.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
    let dim = g.dim();

    let mut p_rows = borel(g)?.basis_rows();
    let mut pm_rows = borel_minus(g)?.basis_rows();
    for &index in j {
        let (pos, neg) = &datum.simple_root_spaces[index - 1];
        p_rows.extend(neg.basis_rows());
        pm_rows.extend(pos.basis_rows());
    }
    let p = g.subalgebra_closure(&Subspace::span(&p_rows, dim)?)?;
    let p_minus = g.subalgebra_closure(&Subspace::span(&pm_rows, dim)?)?;
    let levi = p.intersect(&p_minus)?;

    // nilradicals: basis root vectors on one side of the Levi
    let mut u_rows = Vec::new();
    let mut um_rows = Vec::new();
    for k in 0..dim {
        let e = unit_vector(dim, k);
        let in_p = p.contains(&e);
        let in_pm = p_minus.contains(&e);
        if in_p && !in_pm {
            u_rows.push(e);
        } else if in_pm && !in_p {
            um_rows.push(e);
        }
    }
    let u = Subspace::span(&u_rows, dim)?;
    let u_minus = Subspace::span(&um_rows, dim)?;

    // Levi decomposition sanity: p = u (+) levi, and the three parts tile g
    debug_assert_eq!(u.dim() + levi.dim(), p.dim());
    debug_assert_eq!(um_rows.len() + levi.dim(), p_minus.dim());
    debug_assert_eq!(u.dim() + u_minus.dim() + levi.dim(), dim);

    // center of the Levi, computed inside the Levi
    let levi_center = center_within(g, &levi)?;

    Ok(ParabolicData {
        j: j.clone(),
        p,
        p_minus,
        u,
        u_minus,
        levi,
        levi_center,
    })
}

/// `{x in s : [x, s] = 0}`.
fn center_within(g: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
    let gens = s.basis_rows();
    if gens.is_empty() {
        return Ok(Subspace::zero(g.dim()));
    }
    let mut constraint_rows: Vec<Vector> = Vec::new();
    for srow in &gens {
        let images: Vec<Vector> = gens
            .iter()
            .map(|gen| g.bracket(gen, srow))
            .collect::<Result<_>>()?;
        for coord in 0..g.dim() {
            let row: Vector = images.iter().map(|im| im[coord].clone()).collect();
            if !crate::matrix::vector_is_zero(&row) {
                constraint_rows.push(row);
            }
        }
    }
    if constraint_rows.is_empty() {
        return Ok(s.clone());
    }
    let kernel = crate::matrix::Matrix::from_rows(constraint_rows)?.nullspace();
    let mut rows = Vec::new();
    for coeffs in kernel.rows_iter() {
        let mut v = zero_vector(g.dim());
        for (c, gen) in coeffs.iter().zip(&gens) {
            if !num_traits::Zero::is_zero(c) {
                for (vi, gi) in v.iter_mut().zip(gen) {
                    *vi = &*vi + &(c * gi);
                }
            }
        }
        rows.push(v);
    }
    Subspace::span(&rows, g.dim())
}

/// The Lagrangian fiber product `p_J x_(l_J) p_J^-` inside `g (+) g`:
/// pairs whose Levi components are equal. This is the kernel of the
/// log-action map above the distinguished basepoint of the `J`-orbit.
pub fn fiber_product_lagrangian(g: &LieAlgebra, j: &BTreeSet<usize>) -> Result<Subspace> {
    let data = parabolic_data(g, j)?;
    let n = g.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for r in data.u.basis_rows() {
        rows.push(vector_concat(&r, &zero_vector(n)));
    }
    for r in data.u_minus.basis_rows() {
        rows.push(vector_concat(&zero_vector(n), &r));
    }
    for r in data.levi.basis_rows() {
        rows.push(vector_concat(&r, &r));
    }
    Subspace::span(&rows, 2 * n)
}

/// Stabilizer algebra of the distinguished basepoint of the `J`-orbit:
/// pairs in `p_J x p_J^-` whose Levi components agree up to the center of
/// the Levi. Contains the fiber product with codimension `dim z(l_J)`.
pub fn stabilizer_algebra(g: &LieAlgebra, j: &BTreeSet<usize>) -> Result<Subspace> {
    let data = parabolic_data(g, j)?;
    let n = g.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for r in data.u.basis_rows() {
        rows.push(vector_concat(&r, &zero_vector(n)));
    }
    for r in data.u_minus.basis_rows() {
        rows.push(vector_concat(&zero_vector(n), &r));
    }
    for r in data.levi.basis_rows() {
        rows.push(vector_concat(&r, &r));
    }
    for r in data.levi_center.basis_rows() {
        rows.push(vector_concat(&r, &zero_vector(n)));
    }
    Subspace::span(&rows, 2 * n)
}

/// One orbit of `G x G` on the wonderful compactification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// 1-based simple-root indices.
    pub j: Vec<usize>,
    pub dim_orbit: usize,
    pub dim_closure: usize,
    pub codim: usize,
    /// Boundary divisors containing the orbit: the complement of `j`.
    pub divisors: Vec<usize>,
    pub dim_flag_base: usize,
    pub dim_fiber_group: usize,
}

/// Orbit records for every subset of the simple roots, ordered by subset
/// size then lexicographically. The full set is the open orbit; the empty
/// set is the unique closed orbit `G/B x G/B^-`.
pub fn orbit_table(g: &LieAlgebra) -> Result<Vec<OrbitRecord>> {
    let datum = g.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
    if !g.is_semisimple() {
        return Err(Error::DegenerateForm);
    }
    let l = datum.rank;
    let mut subsets: Vec<Vec<usize>> = (0..(1u32 << l))
        .map(|mask| {
            (1..=l)
                .filter(|i| mask & (1 << (i - 1)) != 0)
                .collect::<Vec<usize>>()
        })
        .collect();
    subsets.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));

    let mut records = Vec::new();
    for j_sorted in subsets {
        let j: BTreeSet<usize> = j_sorted.iter().copied().collect();
        let data = parabolic_data(g, &j)?;
        let dim_flag_base = 2 * (g.dim() - data.p.dim());
        let dim_fiber_group = data.levi.dim() - data.levi_center.dim();
        let dim_orbit = dim_flag_base + dim_fiber_group;
        let divisors: Vec<usize> = (1..=l).filter(|i| !j.contains(i)).collect();
        records.push(OrbitRecord {
            codim: l - j.len(),
            divisors,
            dim_orbit,
            dim_closure: dim_orbit,
            dim_flag_base,
            dim_fiber_group,
            j: j_sorted,
        });
    }
    Ok(records)
}

/// Orbit closure order: the `J1`-orbit lies in the closure of the
/// `J2`-orbit exactly when `J1` is a subset of `J2`.
pub fn closure_relation(r1: &OrbitRecord, r2: &OrbitRecord) -> bool {
    let j2: BTreeSet<usize> = r2.j.iter().copied().collect();
    r1.j.iter().all(|i| j2.contains(i))
}

/// A generalized Belavin-Drinfeld triple: subsets of simple roots with an
/// inner-product-preserving bijection between them.
#[derive(Clone, Debug)]
pub struct BDTriple {
    pub i: Vec<usize>,
    pub jset: Vec<usize>,
    /// eta as parallel images: `eta(i[k]) = eta_images[k]`.
    pub eta_images: Vec<usize>,
}

/// eta must be a bijection I -> J preserving the Cartan integers.
pub fn bd_validate(rd: &crate::lie::RootDatum, t: &BDTriple) -> bool {
    if t.i.len() != t.jset.len() || t.i.len() != t.eta_images.len() {
        return false;
    }
    let in_range = |v: &[usize]| v.iter().all(|&x| x >= 1 && x <= rd.rank);
    if !in_range(&t.i) || !in_range(&t.jset) || !in_range(&t.eta_images) {
        return false;
    }
    let mut image_sorted = t.eta_images.clone();
    image_sorted.sort_unstable();
    image_sorted.dedup();
    let mut jset_sorted = t.jset.clone();
    jset_sorted.sort_unstable();
    if image_sorted != jset_sorted {
        return false; // not a bijection onto J
    }
    let a = &rd.cartan_matrix;
    for (p, &ip) in t.i.iter().enumerate() {
        for (q, &iq) in t.i.iter().enumerate() {
            let lhs = a[t.eta_images[p] - 1][t.eta_images[q] - 1];
            let rhs = a[ip - 1][iq - 1];
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Dimension of the `G x G`-orbit on the Lagrangian variety attached to a
/// Belavin-Drinfeld triple: base `G/P_I x G/P_J^-` plus the adjoint group of
/// the Levi of `I`.
pub fn bd_orbit_dimension(g: &LieAlgebra, t: &BDTriple) -> Result<usize> {
    let datum = g.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
    if !bd_validate(datum, t) {
        return Err(Error::InvalidArgument(
            "not a valid Belavin-Drinfeld triple".into(),
        ));
    }
    let i_set: BTreeSet<usize> = t.i.iter().copied().collect();
    let j_set: BTreeSet<usize> = t.jset.iter().copied().collect();
    let data_i = parabolic_data(g, &i_set)?;
    let data_j = parabolic_data(g, &j_set)?;
    Ok((g.dim() - data_i.p.dim())
        + (g.dim() - data_j.p.dim())
        + (data_i.levi.dim() - data_i.levi_center.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::{direct_sum_double, is_lagrangian};
    use crate::lie::{make_sl, Series};

    fn set(indices: &[usize]) -> BTreeSet<usize> {
        indices.iter().copied().collect()
    }

    #[test]
    fn empty_set_gives_borel_and_cartan() {
        let g = make_sl(3).unwrap();
        let data = parabolic_data(&g, &set(&[])).unwrap();
        assert_eq!(data.p, borel(&g).unwrap());
        assert_eq!(data.levi, g.root_datum.as_ref().unwrap().cartan_subalgebra);
        assert_eq!(data.levi_center, data.levi);
    }

    #[test]
    fn full_set_gives_whole_algebra() {
        let g = make_sl(3).unwrap();
        let data = parabolic_data(&g, &set(&[1, 2])).unwrap();
        assert_eq!(data.p.dim(), g.dim());
        assert_eq!(data.u.dim(), 0);
        assert_eq!(data.levi.dim(), g.dim());
        assert_eq!(data.levi_center.dim(), 0);
    }

    #[test]
    fn sl4_block_parabolic_dimensions() {
        // J = {1,3} in sl4: block sizes (2,2)
        let g = make_sl(4).unwrap();
        let data = parabolic_data(&g, &set(&[1, 3])).unwrap();
        assert_eq!(data.p.dim(), 11);
        assert_eq!(data.u.dim(), 4);
        assert_eq!(data.levi.dim(), 7);
        assert_eq!(data.levi_center.dim(), 1);
        assert_eq!(data.p_minus.dim(), 11);
        assert_eq!(data.u_minus.dim(), 4);
    }

    #[test]
    fn parabolic_rejects_bad_index() {
        let g = make_sl(3).unwrap();
        assert!(matches!(
            parabolic_data(&g, &set(&[3])),
            Err(Error::RootIndexOutOfRange { .. })
        ));
        assert!(parabolic_data(&g, &set(&[0])).is_err());
    }

    #[test]
    fn parabolic_parts_are_subalgebras() {
        let g = make_sl(3).unwrap();
        for j in [set(&[]), set(&[1]), set(&[2]), set(&[1, 2])] {
            let data = parabolic_data(&g, &j).unwrap();
            for s in [&data.p, &data.p_minus, &data.u, &data.u_minus, &data.levi] {
                assert!(g.is_subalgebra(s).unwrap());
            }
            assert_eq!(data.u.intersect(&data.u_minus).unwrap().dim(), 0);
            assert_eq!(data.levi, data.p.intersect(&data.p_minus).unwrap());
        }
    }

    #[test]
    fn fiber_product_for_full_set_is_diagonal() {
        let g = make_sl(2).unwrap();
        let fp = fiber_product_lagrangian(&g, &set(&[1])).unwrap();
        let n = g.dim();
        let rows: Vec<Vector> = (0..n)
            .map(|k| vector_concat(&unit_vector(n, k), &unit_vector(n, k)))
            .collect();
        assert_eq!(fp, Subspace::span(&rows, 2 * n).unwrap());
    }

    #[test]
    fn sl2_empty_fiber_product_is_three_dimensional_lagrangian() {
        let g = make_sl(2).unwrap();
        let fp = fiber_product_lagrangian(&g, &set(&[])).unwrap();
        assert_eq!(fp.dim(), 3);
        let d = direct_sum_double(&g).unwrap();
        assert!(is_lagrangian(&d, &fp).unwrap());
        // explicit span: (E,0), (H,H), (0,F) in coordinates E,H,F per factor
        let rows = vec![
            vector_concat(&unit_vector(3, 0), &zero_vector(3)),
            vector_concat(&unit_vector(3, 1), &unit_vector(3, 1)),
            vector_concat(&zero_vector(3), &unit_vector(3, 2)),
        ];
        assert_eq!(fp, Subspace::span(&rows, 6).unwrap());
    }

    #[test]
    fn sl4_selected_fiber_product_is_lagrangian() {
        let g = make_sl(4).unwrap();
        let fp = fiber_product_lagrangian(&g, &set(&[1, 3])).unwrap();
        assert_eq!(fp.dim(), 15);
        let d = direct_sum_double(&g).unwrap();
        assert!(is_lagrangian(&d, &fp).unwrap());
    }

    #[test]
    fn stabilizer_contains_fiber_product_with_center_codimension() {
        let g = make_sl(4).unwrap();
        for j in [set(&[]), set(&[1, 3]), set(&[1, 2, 3])] {
            let data = parabolic_data(&g, &j).unwrap();
            let fp = fiber_product_lagrangian(&g, &j).unwrap();
            let st = stabilizer_algebra(&g, &j).unwrap();
            assert!(st.contains_subspace(&fp));
            assert_eq!(st.dim() - fp.dim(), data.levi_center.dim());
            assert_eq!(st.dim(), g.dim() + data.levi_center.dim());
            let d = direct_sum_double(&g).unwrap();
            assert!(d.algebra.is_subalgebra(&st).unwrap());
        }
    }

    #[test]
    fn sl4_stabilizer_dimension_for_block_parabolic() {
        let g = make_sl(4).unwrap();
        let st = stabilizer_algebra(&g, &set(&[1, 3])).unwrap();
        assert_eq!(st.dim(), 16);
    }

    #[test]
    fn sl2_orbit_table_reproduces_projective_space_picture() {
        let g = make_sl(2).unwrap();
        let table = orbit_table(&g).unwrap();
        assert_eq!(table.len(), 2);
        let closed = &table[0];
        assert_eq!(closed.j, Vec::<usize>::new());
        assert_eq!(closed.dim_orbit, 2);
        assert_eq!(closed.divisors, vec![1]);
        let open = &table[1];
        assert_eq!(open.j, vec![1]);
        assert_eq!(open.dim_orbit, 3);
        assert!(open.divisors.is_empty());
    }

    #[test]
    fn orbit_count_is_two_to_the_rank() {
        for n in [2usize, 3, 4] {
            let g = make_sl(n).unwrap();
            let table = orbit_table(&g).unwrap();
            assert_eq!(table.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn sl4_block_orbit_dimension_and_divisors() {
        let g = make_sl(4).unwrap();
        let table = orbit_table(&g).unwrap();
        let rec = table.iter().find(|r| r.j == vec![1, 3]).unwrap();
        assert_eq!(rec.dim_orbit, 14);
        assert_eq!(rec.codim, 1);
        assert_eq!(rec.divisors, vec![2]);
        assert_eq!(rec.dim_flag_base, 8);
        assert_eq!(rec.dim_fiber_group, 6);
    }

    #[test]
    fn closure_relation_is_subset_order() {
        let g = make_sl(3).unwrap();
        let table = orbit_table(&g).unwrap();
        let open = table.iter().find(|r| r.j.len() == 2).unwrap();
        let closed = table.iter().find(|r| r.j.is_empty()).unwrap();
        let mid1 = table.iter().find(|r| r.j == vec![1]).unwrap();
        let mid2 = table.iter().find(|r| r.j == vec![2]).unwrap();
        for r in &table {
            assert!(closure_relation(r, open));
            assert!(closure_relation(closed, r));
        }
        assert!(!closure_relation(mid1, mid2));
        assert!(!closure_relation(mid2, mid1));
    }

    #[test]
    fn bd_identity_triple_on_full_set_recovers_algebra_dimension() {
        let g = make_sl(3).unwrap();
        let t = BDTriple {
            i: vec![1, 2],
            jset: vec![1, 2],
            eta_images: vec![1, 2],
        };
        assert!(bd_validate(g.root_datum.as_ref().unwrap(), &t));
        assert_eq!(bd_orbit_dimension(&g, &t).unwrap(), g.dim());
    }

    #[test]
    fn bd_empty_triple_gives_double_flag_dimension() {
        let g = make_sl(3).unwrap();
        let t = BDTriple {
            i: vec![],
            jset: vec![],
            eta_images: vec![],
        };
        let b = borel(&g).unwrap();
        assert_eq!(
            bd_orbit_dimension(&g, &t).unwrap(),
            2 * (g.dim() - b.dim())
        );
    }

    #[test]
    fn bd_cross_node_triple_in_a3() {
        // I = {1}, J = {3}, eta(1) = 3: valid since A[1][1] = A[3][3] = 2.
        // G/P_{1} and G/P_{3} each have dimension 5 and the Levi of {1} is
        // gl2-like: dim 5 with 2-dimensional center, so the orbit dimension
        // is 5 + 5 + 3 = 13.
        let g = make_sl(4).unwrap();
        let t = BDTriple {
            i: vec![1],
            jset: vec![3],
            eta_images: vec![3],
        };
        assert!(bd_validate(g.root_datum.as_ref().unwrap(), &t));
        let data1 = parabolic_data(&g, &set(&[1])).unwrap();
        assert_eq!(data1.p.dim(), 10);
        assert_eq!(data1.levi.dim(), 5);
        assert_eq!(data1.levi_center.dim(), 2);
        assert_eq!(bd_orbit_dimension(&g, &t).unwrap(), 13);
    }

    #[test]
    fn bd_rejects_non_isometry() {
        // eta: {1,2} -> {2,3} with eta(1)=2, eta(2)=3 preserves the A3 chain,
        // but eta(1)=3, eta(2)=2 reverses adjacency only if the matrix is
        // symmetric under that relabeling; both are actually isometries in
        // type A. A genuine failure: map adjacent nodes to non-adjacent ones.
        let g = make_sl(4).unwrap();
        let rd = g.root_datum.as_ref().unwrap();
        let bad = BDTriple {
            i: vec![1, 2],
            jset: vec![1, 3],
            eta_images: vec![1, 3],
        };
        assert!(!bd_validate(rd, &bad));
        let good = BDTriple {
            i: vec![1, 2],
            jset: vec![2, 3],
            eta_images: vec![2, 3],
        };
        assert!(bd_validate(rd, &good));
        // non-bijective eta
        let dup = BDTriple {
            i: vec![1, 2],
            jset: vec![2, 3],
            eta_images: vec![2, 2],
        };
        assert!(!bd_validate(rd, &dup));
    }

    #[test]
    fn orbit_table_works_for_type_b() {
        let g = crate::lie::make_classical(Series::B, 2).unwrap();
        let table = orbit_table(&g).unwrap();
        assert_eq!(table.len(), 4);
        // closed orbit: G/B x G/B^-, dim = 2 * #positive roots = 8
        assert_eq!(table[0].dim_orbit, 8);
        // open orbit: dim g = 10
        assert_eq!(table[3].dim_orbit, 10);
    }
}
