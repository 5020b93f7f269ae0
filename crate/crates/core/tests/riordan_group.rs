mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use riordan::rational::int;
use riordan::sequences::g_from_b;
use riordan::{is_pseudo_involution, MuPoly, RiordanArray, Series};

use common::{naive_pow, pick, random_b};

fn random_series(rng: &mut ChaCha8Rng, order: usize, nonzero_head: bool) -> Series {
    Series::from_fn(order, |n| loop {
        let c = pick(rng);
        if n > 0 || !nonzero_head || c != int(0) {
            break c;
        }
    })
}

fn random_array(rng: &mut ChaCha8Rng, order: usize) -> RiordanArray {
    let f = random_series(rng, order, true);
    let g = random_series(rng, order, true);
    RiordanArray::new(f, g).unwrap()
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<riordan::Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| int(v)).collect())
        .collect()
}

#[test]
fn pascal_and_odd_number_rows() {
    let geo = Series::from_ints(&[1; 8]);
    let pascal = RiordanArray::new(geo.clone(), geo).unwrap();
    let rows: Vec<_> = (0..4).map(|n| pascal.row(n).unwrap()).collect();
    assert_eq!(rows, ints(&[&[1], &[1, 1], &[1, 2, 1], &[1, 3, 3, 1]]));

    // ((1+x)/(1-x)^2, x/(1-x)^2), built from products rather than closed forms
    let one_minus = Series::from_poly(vec![int(1), int(-1)], 8);
    let inv_sq = one_minus.mul(&one_minus).mul_inverse().unwrap();
    let f = Series::from_poly(vec![int(1), int(1)], 8).mul(&inv_sq);
    let ex4 = RiordanArray::new(f, inv_sq).unwrap();
    let rows: Vec<_> = (0..4).map(|n| ex4.row(n).unwrap()).collect();
    assert_eq!(rows, ints(&[&[1], &[3, 1], &[5, 5, 1], &[7, 14, 7, 1]]));
}

#[test]
fn group_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..12 {
        let (a, b, c) = (
            random_array(&mut rng, 10),
            random_array(&mut rng, 10),
            random_array(&mut rng, 10),
        );
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        let inv = a.inverse().unwrap();
        assert_eq!(a.multiply(&inv).unwrap(), RiordanArray::identity(10));
        assert_eq!(inv.multiply(&a).unwrap(), RiordanArray::identity(10));
    }
}

#[test]
fn product_entries_are_matrix_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (a, b) = (random_array(&mut rng, 8), random_array(&mut rng, 8));
    let ab = a.multiply(&b).unwrap();
    for n in 0..=8 {
        for m in 0..=n {
            let mut dot = int(0);
            for j in m..=n {
                dot += a.entry(n, j).unwrap() * b.entry(j, m).unwrap();
            }
            assert_eq!(ab.entry(n, m).unwrap(), dot, "({n},{m})");
        }
    }
}

#[test]
fn column_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5 {
        let r = random_array(&mut rng, 12);
        let xg = r.g().shift_up(1).truncate(12);
        for m in 0..=12 {
            let column = r.f().mul(&naive_pow(&xg, m as i64));
            for n in 0..=12 {
                assert_eq!(r.entry(n, m).unwrap(), column.coeffs()[n].clone());
            }
        }
    }
}

#[test]
fn action_is_the_matrix_vector_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let r = random_array(&mut rng, 9);
    let a = random_series(&mut rng, 9, false);
    let got = r.apply(&a).unwrap();
    for n in 0..=9 {
        let mut dot = int(0);
        for m in 0..=n {
            dot += r.entry(n, m).unwrap() * &a.coeffs()[m];
        }
        assert_eq!(got.coeffs()[n], dot);
    }
}

#[test]
fn inverse_of_x_over_a() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases = vec![Series::from_ints(&[1; 11])];
    cases.extend((0..6).map(|_| random_series(&mut rng, 10, true)));
    for a in cases {
        let order = a.order();
        // (1, x b) = inverse of (1, x / a)
        let inv = RiordanArray::new(Series::one(order), a.mul_inverse().unwrap())
            .unwrap()
            .inverse()
            .unwrap();
        let b = inv.g().clone();
        let xb = RiordanArray::new(Series::one(order), b.clone()).unwrap();
        assert_eq!(xb.apply(&a).unwrap(), b);
        let xa = RiordanArray::new(Series::one(order), a.clone()).unwrap();
        let b_squared = RiordanArray::new(Series::one(order), b.mul(&b)).unwrap();
        assert_eq!(xb.multiply(&xa).unwrap(), b_squared);
    }
}

#[test]
fn pseudo_involution_closure_and_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        let b = random_b(&mut rng, 5);
        let g = g_from_b(&b, 14).unwrap();
        assert!(is_pseudo_involution(&g).unwrap());
        // reversion(x g) = x g(-x)
        let xg = g.shift_up(1).truncate(14);
        assert_eq!(
            xg.reversion().unwrap(),
            g.subst_neg().shift_up(1).truncate(14)
        );
        let inv = RiordanArray::new(Series::one(14), g.clone())
            .unwrap()
            .inverse()
            .unwrap();
        assert!(is_pseudo_involution(inv.g()).unwrap());
        // inverse is M R M
        assert_eq!(inv.g(), &g.subst_neg().truncate(inv.g().order()));
    }
}

#[test]
fn chebyshev_like_row_polynomials() {
    let order = 12;
    let one_minus_sq = Series::from_poly(vec![int(1), int(0), int(-1)], order);
    let inv = one_minus_sq.mul_inverse().unwrap();
    let c_f = Series::from_poly(vec![int(1), int(0), int(1)], order).mul(&inv);
    let c = RiordanArray::new(c_f, inv.clone()).unwrap();
    let s = RiordanArray::new(inv.clone(), inv).unwrap();
    assert_eq!(
        s.row_poly(5).unwrap(),
        MuPoly::from_ints(&[0, 3, 0, 4, 0, 1])
    );
    assert_eq!(c.row_poly(4).unwrap(), MuPoly::from_ints(&[2, 0, 4, 0, 1]));
    let mu2_plus_4 = MuPoly::from_ints(&[4, 0, 1]);
    let four = MuPoly::from_ints(&[4]);
    for m in 0..=4 {
        let c_odd = c.row_poly(2 * m + 1).unwrap();
        let s_even = s.row_poly(2 * m).unwrap();
        assert_eq!(
            &c_odd * &c_odd + four.clone(),
            &(&s_even * &s_even) * &mu2_plus_4
        );
        if m >= 1 {
            let c_even = c.row_poly(2 * m).unwrap();
            let s_odd = s.row_poly(2 * m - 1).unwrap();
            assert_eq!(
                &c_even * &c_even,
                &(&s_odd * &s_odd) * &mu2_plus_4 + four.clone()
            );
        }
    }
}
