//! Checks `colength` against an independent count by linear algebra: the affine
//! Hilbert function `dim V_D / (I ∩ V_D)`, with `I ∩ V_D` computed from all multiples
//! of the generators up to degree `D + k` and projected away from degrees above `D`.

use bidisk::polyalg::{colength, gcd, Colength, Monomial, Poly2, Rat};
use proptest::prelude::*;

fn monomials(max_deg: u32) -> Vec<Monomial> {
    (0..=max_deg)
        .flat_map(|d| (0..=d).map(move |e1| Monomial::new(e1, d - e1)))
        .collect()
}

fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().unwrap();
        let pivot: Vec<Rat> = rows[r].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

fn affine_hilbert(beta: &Poly2, gamma: &Poly2, d: u32, k: u32) -> usize {
    let top = d + k;
    let cols = monomials(top);
    let index = |m: Monomial| cols.iter().position(|&c| c == m).unwrap();
    let mut rows = Vec::new();
    for g in [beta, gamma] {
        let Some(gd) = g.degree() else { continue };
        for m in monomials(top.saturating_sub(gd)) {
            let mut row = vec![Rat::zero(); cols.len()];
            for (mon, c) in g.mul_term(&Rat::one(), m).terms() {
                row[index(mon)] = c.clone();
            }
            rows.push(row);
        }
    }
    let high: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .zip(&cols)
                .filter(|(_, m)| m.degree() > d)
                .map(|(x, _)| x.clone())
                .collect()
        })
        .collect();
    let in_low = rank(rows) - rank(high);
    monomials(d).len() - in_low
}

fn oracle(beta: &Poly2, gamma: &Poly2) -> usize {
    let bound = beta.degree().unwrap_or(0) * gamma.degree().unwrap_or(0);
    affine_hilbert(beta, gamma, bound, bound + 4)
}

fn poly(max_deg: u32) -> impl Strategy<Value = Poly2> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -3i64..=3), 1..=4).prop_map(move |terms| {
        Poly2::from_terms(
            terms
                .into_iter()
                .filter(|(a, b, _)| a + b <= max_deg)
                .map(|(a, b, c)| (Monomial::new(a, b), Rat::from_int(c))),
        )
    })
}

fn p(s: &str) -> Poly2 {
    s.parse().unwrap()
}

#[test]
fn oracle_on_known_cases() {
    for (b, g, n) in [
        ("z1", "z2", 1),
        ("z1^2", "z2^3", 6),
        ("z1", "z1 - 1", 0),
        ("z1*z2 - 1", "z2 - 1", 1),
        ("z1^2 + z2^2 - 1", "z1", 2),
        ("z2 - z1^2", "z2", 2),
    ] {
        let (b, g) = (p(b), p(g));
        assert_eq!(oracle(&b, &g), n, "{b}, {g}");
        assert_eq!(colength(&b, &g), Colength::Finite(n), "{b}, {g}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn colength_matches_linear_algebra(b in poly(2), g in poly(2)) {
        prop_assume!(!b.is_zero() && !g.is_zero());
        prop_assume!(gcd(&b, &g).is_constant());
        prop_assert_eq!(colength(&b, &g), Colength::Finite(oracle(&b, &g)));
    }

    #[test]
    fn common_factor_is_not_finite(b in poly(2), g in poly(2)) {
        let f = p("z1 + z2 + 1");
        prop_assert_eq!(colength(&(&b * &f), &(&g * &f)), Colength::NotFinite);
    }
}
