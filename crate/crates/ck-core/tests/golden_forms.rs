//! Frozen canonical forms of the invariants for N = 2..5, transcribed
//! term by term, compared against the engine output with zero tolerance.

mod common;

use common::*;

use ck_core::casimirs::{casimir_extra, casimir_s, CasimirSet};
use ck_core::enveloping::multiply;
use ck_core::wsymbols::WIndexSet;
use ck_core::{EnvelopingElement, OmegaPoly, OmegaSpec, WTable};

fn w(t: &mut WTable, ix: &[usize], n: usize) -> EnvelopingElement {
    t.w(&WIndexSet::new(ix.to_vec(), n).unwrap()).unwrap()
}

#[test]
fn c1_n2() {
    let spec = symbolic(2);
    let mut t = WTable::new(&spec);
    let expected = elem(
        2,
        &[
            (&[(0, 1, 2)], om(2, &[2])),
            (&[(0, 2, 2)], OmegaPoly::one(2)),
            (&[(1, 2, 2)], om(2, &[1])),
        ],
    );
    assert_eq!(casimir_s(&mut t, 1).unwrap(), expected);
}

#[test]
fn c1_n3() {
    let spec = symbolic(3);
    let mut t = WTable::new(&spec);
    let expected = elem(
        3,
        &[
            (&[(0, 1, 2)], om(3, &[2, 3])),
            (&[(0, 2, 2)], om(3, &[3])),
            (&[(0, 3, 2)], OmegaPoly::one(3)),
            (&[(1, 2, 2)], om(3, &[1, 3])),
            (&[(1, 3, 2)], om(3, &[1])),
            (&[(2, 3, 2)], om(3, &[1, 2])),
        ],
    );
    assert_eq!(casimir_s(&mut t, 1).unwrap(), expected);
}

#[test]
fn extra_n3_is_w0123() {
    // W_0123 = w2 O23 O01 - O13 O02 + O03 O12, all factor pairs commuting
    let spec = symbolic(3);
    let mut t = WTable::new(&spec);
    let expected = elem(
        3,
        &[
            (&[(0, 1, 1), (2, 3, 1)], om(3, &[2])),
            (&[(0, 2, 1), (1, 3, 1)], om(3, &[]).neg()),
            (&[(0, 3, 1), (1, 2, 1)], OmegaPoly::one(3)),
        ],
    );
    let c = casimir_extra(&mut t).unwrap();
    assert_eq!(c, expected);
    assert_eq!(c, w(&mut t, &[0, 1, 2, 3], 3));
}

#[test]
fn c1_n4() {
    let spec = symbolic(4);
    let mut t = WTable::new(&spec);
    let expected = elem(
        4,
        &[
            (&[(0, 1, 2)], om(4, &[2, 3, 4])),
            (&[(0, 2, 2)], om(4, &[3, 4])),
            (&[(0, 3, 2)], om(4, &[4])),
            (&[(0, 4, 2)], OmegaPoly::one(4)),
            (&[(1, 2, 2)], om(4, &[1, 3, 4])),
            (&[(1, 3, 2)], om(4, &[1, 4])),
            (&[(1, 4, 2)], om(4, &[1])),
            (&[(2, 3, 2)], om(4, &[1, 2, 4])),
            (&[(2, 4, 2)], om(4, &[1, 2])),
            (&[(3, 4, 2)], om(4, &[1, 2, 3])),
        ],
    );
    assert_eq!(casimir_s(&mut t, 1).unwrap(), expected);
}

/// The five order-two W-symbols at N=4, written out.
fn expected_w4(n4: &OmegaSpec) -> Vec<(Vec<usize>, EnvelopingElement)> {
    assert_eq!(n4.n(), 4);
    let n = 4;
    let mk = |hi: (usize, usize),
              lo: (usize, usize),
              coeff: OmegaPoly,
              mid: [(usize, usize); 2],
              last: [(usize, usize); 2]| {
        // coeff * O_hi O_lo - O_mid0 O_mid1 + O_last0 O_last1 in PBW order
        elem(
            n,
            &[
                (&[(lo.0, lo.1, 1), (hi.0, hi.1, 1)], coeff),
                (
                    &[(mid[0].0, mid[0].1, 1), (mid[1].0, mid[1].1, 1)],
                    OmegaPoly::one(n).neg(),
                ),
                (
                    &[(last[0].0, last[0].1, 1), (last[1].0, last[1].1, 1)],
                    OmegaPoly::one(n),
                ),
            ],
        )
    };
    vec![
        // W_0123 = w_12 O23 O01 - O13 O02 + O03 O12
        (
            vec![0, 1, 2, 3],
            mk((2, 3), (0, 1), omrange(n, 1, 2), [(0, 2), (1, 3)], [(0, 3), (1, 2)]),
        ),
        // W_0124 = w_12 O24 O01 - O14 O02 + O04 O12
        (
            vec![0, 1, 2, 4],
            mk((2, 4), (0, 1), omrange(n, 1, 2), [(0, 2), (1, 4)], [(0, 4), (1, 2)]),
        ),
        // W_0134 = w_13 O34 O01 - O14 O03 + O04 O13
        (
            vec![0, 1, 3, 4],
            mk((3, 4), (0, 1), omrange(n, 1, 3), [(0, 3), (1, 4)], [(0, 4), (1, 3)]),
        ),
        // W_0234 = w_23 O34 O02 - O24 O03 + O04 O23
        (
            vec![0, 2, 3, 4],
            mk((3, 4), (0, 2), omrange(n, 2, 3), [(0, 3), (2, 4)], [(0, 4), (2, 3)]),
        ),
        // W_1234 = w_23 O34 O12 - O24 O13 + O14 O23
        (
            vec![1, 2, 3, 4],
            mk((3, 4), (1, 2), omrange(n, 2, 3), [(1, 3), (2, 4)], [(1, 4), (2, 3)]),
        ),
    ]
}

#[test]
fn w_symbols_n4() {
    let spec = symbolic(4);
    let mut t = WTable::new(&spec);
    for (ix, expected) in expected_w4(&spec) {
        assert_eq!(w(&mut t, &ix, 4), expected, "W_{ix:?}");
    }
}

#[test]
fn c2_n4() {
    // C_2 = w_24 W_0123^2 + w_23 W_0124^2 + W_0134^2 + w_12 W_0234^2 + w_02 W_1234^2
    let spec = symbolic(4);
    let n = 4;
    let ws = expected_w4(&spec);
    let coeffs = [
        omrange(n, 2, 4),
        omrange(n, 2, 3),
        OmegaPoly::one(n),
        omrange(n, 1, 2),
        omrange(n, 0, 2),
    ];
    let mut expected = EnvelopingElement::zero(n);
    for ((_, wi), c) in ws.iter().zip(&coeffs) {
        let sq = multiply(&spec, wi, wi).unwrap();
        expected = expected.add(&sq.scale_poly(c));
    }
    let mut t = WTable::new(&spec);
    assert_eq!(casimir_s(&mut t, 2).unwrap(), expected);
}

#[test]
fn c1_n5() {
    let spec = symbolic(5);
    let mut t = WTable::new(&spec);
    let n = 5;
    // coefficient of O_ab^2 is w_{0a} w_{b5}
    let rows: &[((usize, usize), (usize, usize), (usize, usize))] = &[
        ((0, 1), (0, 0), (1, 5)),
        ((0, 2), (0, 0), (2, 5)),
        ((0, 3), (0, 0), (3, 5)),
        ((0, 4), (0, 0), (4, 5)),
        ((0, 5), (0, 0), (5, 5)),
        ((1, 2), (0, 1), (2, 5)),
        ((1, 3), (0, 1), (3, 5)),
        ((1, 4), (0, 1), (4, 5)),
        ((1, 5), (0, 1), (5, 5)),
        ((2, 3), (0, 2), (3, 5)),
        ((2, 4), (0, 2), (4, 5)),
        ((2, 5), (0, 2), (5, 5)),
        ((3, 4), (0, 3), (4, 5)),
        ((3, 5), (0, 3), (5, 5)),
        ((4, 5), (0, 4), (5, 5)),
    ];
    let mut expected = EnvelopingElement::zero(n);
    for &((a, b), lo1, lo2) in rows {
        let coeff = omrange(n, lo1.0, lo1.1).mul(&omrange(n, lo2.0, lo2.1));
        expected = expected.add(&elem(n, &[(&[(a, b, 2)], coeff)]));
    }
    assert_eq!(casimir_s(&mut t, 1).unwrap(), expected);
}

#[test]
fn c2_n5() {
    let spec = symbolic(5);
    let n = 5;
    let mut t = WTable::new(&spec);
    // transcribed prefactor of each W^2, as w_{ab} range products
    let rows: &[(&[usize], &[(usize, usize)])] = &[
        (&[0, 1, 2, 3], &[(3, 5), (2, 4)]),
        (&[0, 1, 2, 4], &[(2, 5)]),
        (&[0, 1, 2, 5], &[(2, 4)]),
        (&[0, 1, 3, 4], &[(3, 5)]),
        (&[0, 1, 3, 5], &[(3, 4)]),
        (&[0, 1, 4, 5], &[]),
        (&[0, 2, 3, 4], &[(1, 2), (3, 5)]),
        (&[0, 2, 3, 5], &[(1, 2), (3, 4)]),
        (&[0, 2, 4, 5], &[(1, 2)]),
        (&[0, 3, 4, 5], &[(1, 3)]),
        (&[1, 2, 3, 4], &[(0, 2), (3, 5)]),
        (&[1, 2, 3, 5], &[(0, 2), (3, 4)]),
        (&[1, 2, 4, 5], &[(0, 2)]),
        (&[1, 3, 4, 5], &[(0, 3)]),
        (&[2, 3, 4, 5], &[(0, 2), (1, 3)]),
    ];
    let mut expected = EnvelopingElement::zero(n);
    for (ix, ranges) in rows {
        let mut coeff = OmegaPoly::one(n);
        for &(lo, hi) in *ranges {
            coeff = coeff.mul(&omrange(n, lo, hi));
        }
        let wi = w(&mut t, ix, n);
        let sq = multiply(&spec, &wi, &wi).unwrap();
        expected = expected.add(&sq.scale_poly(&coeff));
    }
    assert_eq!(casimir_s(&mut t, 2).unwrap(), expected);
}

#[test]
fn extra_n5_recursion_display() {
    // W_012345 = w_24 O45 W_0123 - w_23 O35 W_0124 + O25 W_0134
    //            - O15 W_0234 + O05 W_1234
    let spec = symbolic(5);
    let n = 5;
    let mut t = WTable::new(&spec);
    let rows: &[((usize, usize), &[usize], OmegaPoly)] = &[
        ((4, 5), &[0, 1, 2, 3], omrange(n, 2, 4)),
        ((3, 5), &[0, 1, 2, 4], omrange(n, 2, 3).neg()),
        ((2, 5), &[0, 1, 3, 4], OmegaPoly::one(n)),
        ((1, 5), &[0, 2, 3, 4], OmegaPoly::one(n).neg()),
        ((0, 5), &[1, 2, 3, 4], OmegaPoly::one(n)),
    ];
    let mut expected = EnvelopingElement::zero(n);
    for ((a, b), ix, coeff) in rows {
        let og = EnvelopingElement::generator(n, gen(*a, *b, n));
        let wi = w(&mut t, ix, n);
        let prod = multiply(&spec, &og, &wi).unwrap();
        expected = expected.add(&prod.scale_poly(coeff));
    }
    assert_eq!(casimir_extra(&mut t).unwrap(), expected);
}

#[test]
fn flag_limits_all_n() {
    // with every omega zero only the designated survivor remains
    for n in 1..=5 {
        let flag = OmegaSpec::fixed_ints(&vec![0i64; n]);
        let set = CasimirSet::generate(&flag).unwrap();
        let mut t = WTable::new(&flag);
        for (s, c) in set.even_order.iter().enumerate() {
            let survivor = ck_core::casimirs::flag_survivor(n, s + 1).unwrap();
            let ws = t.w(&survivor).unwrap();
            let expected = multiply(&flag, &ws, &ws).unwrap();
            assert_eq!(c, &expected, "N={n} s={}", s + 1);
        }
        if n % 2 == 1 {
            let full = t.w(&WIndexSet::full(n).unwrap()).unwrap();
            assert_eq!(set.extra.as_ref().unwrap(), &full);
        }
    }
}

#[test]
fn runtime_sanity_generate_all() {
    // everything above regenerates quickly from scratch
    for n in 2..=5 {
        let spec = symbolic(n);
        let set = CasimirSet::generate(&spec).unwrap();
        assert_eq!(set.count(), (n + 1) / 2);
    }
}
