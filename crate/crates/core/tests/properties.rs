use dominotab::polyring::tableau_sign;
use dominotab::*;
use proptest::prelude::*;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Number of semistandard tableaux of shape `lambda` with entries at most `n`,
/// by the hook-content formula.
fn hook_content(lambda: &Partition, n: i64) -> i128 {
    let col_len = |c: usize| lambda.parts().iter().filter(|&&p| p >= c).count();
    let (mut num, mut den) = (1i128, 1i128);
    for cell in lambda.cells() {
        let arm = lambda.row_len(cell.row) - cell.col;
        let leg = col_len(cell.col) - cell.row;
        num *= (n + cell.content()) as i128;
        den *= (arm + leg + 1) as i128;
    }
    num / den
}

fn shapes_for(family: Family, max_size: usize) -> Vec<Partition> {
    Partition::up_to_size(max_size)
        .into_iter()
        .filter(|p| !family.is_shifted() || p.is_shifted_shape())
        .collect()
}

#[test]
fn semistandard_counts_match_hook_content() {
    for lambda in Partition::up_to_size(7) {
        for n in 1..=3 {
            let count = enumerate_tableaux(Family::Plain, &lambda, n).unwrap().len() as i128;
            assert_eq!(count, hook_content(&lambda, n as i64), "{lambda} n={n}");
        }
    }
}

#[test]
fn plain_domino_counts_are_products_of_quotient_counts() {
    for lambda in Partition::up_to_size(10).into_iter().filter(is_pavable) {
        let (mu, nu) = two_quotient(&lambda);
        let count = enumerate_domino_tableaux(Family::Plain, &lambda, 2).unwrap().len() as i128;
        assert_eq!(count, hook_content(&mu, 2) * hook_content(&nu, 2), "{lambda}");
    }
}

#[test]
fn reading_words_round_trip_exhaustively() {
    for family in Family::ALL {
        let n = if family.is_shifted() && family.is_set_valued() { 2 } else { 3 };
        for lambda in shapes_for(family, 6) {
            for t in enumerate_tableaux(family, &lambda, n).unwrap() {
                let w = reading_word(&t);
                assert_eq!(tableau_from_reading_word(family, &w).unwrap(), t, "{family} {t}");
            }
        }
    }
}

#[test]
fn pavability_test_agrees_with_exhaustive_paving() {
    for lambda in Partition::up_to_size(14) {
        assert_eq!(is_pavable(&lambda), !enumerate_pavings(&lambda).is_empty(), "{lambda}");
    }
}

#[test]
fn quotient_inverse_round_trips() {
    for lambda in Partition::up_to_size(16).into_iter().filter(is_pavable) {
        let (mu, nu) = two_quotient(&lambda);
        assert_eq!(mu.size() + nu.size(), lambda.size() / 2);
        assert_eq!(inverse_two_quotient(&mu, &nu), lambda);
    }
    for total in 0..=6 {
        for k in 0..=total {
            for mu in Partition::of_size(k) {
                for nu in Partition::of_size(total - k) {
                    let lambda = inverse_two_quotient(&mu, &nu);
                    assert!(is_pavable(&lambda));
                    assert_eq!(two_quotient(&lambda), (mu.clone(), nu.clone()));
                }
            }
        }
    }
}

#[test]
fn paving_types_match_quotient_sizes() {
    for lambda in Partition::up_to_size(10).into_iter().filter(is_pavable) {
        let (mu, nu) = two_quotient(&lambda);
        for p in enumerate_pavings(&lambda) {
            assert_eq!(p.count_type(DominoType::One), mu.size(), "{lambda}");
            assert_eq!(p.count_type(DominoType::Two), nu.size(), "{lambda}");
        }
    }
}

#[test]
fn generating_functions_are_symmetric() {
    for family in Family::ALL {
        for lambda in shapes_for(family, 5) {
            let p = genfun(family, &lambda, 3).unwrap();
            assert!(p.is_symmetric(), "{family} {lambda}");
        }
    }
}

#[test]
fn lowest_degree_terms() {
    for lambda in Partition::up_to_size(6) {
        let g = genfun(Family::SetValued, &lambda, 3).unwrap();
        let s = genfun(Family::Plain, &lambda, 3).unwrap();
        assert_eq!(g.homogeneous_component(lambda.size() as u32), s, "{lambda}");
    }
    let shifted = (0..=12).flat_map(Partition::of_size).filter(|p| p.is_shifted_shape() && p.up_size() <= 6);
    for lambda in shifted {
        let gq = genfun(Family::ShiftedSetValued, &lambda, 3).unwrap();
        let q = genfun(Family::Shifted, &lambda, 3).unwrap();
        assert_eq!(gq.homogeneous_component(lambda.up_size() as u32), q, "{lambda}");
    }
}

#[test]
fn grothendieck_signs_follow_degree() {
    for lambda in Partition::up_to_size(5) {
        let g = genfun(Family::SetValued, &lambda, 3).unwrap();
        for (m, c) in g.terms() {
            let expected = if (m.degree() as usize - lambda.size()).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(c.signum(), expected, "{lambda} {m}");
        }
        for t in enumerate_tableaux(Family::SetValued, &lambda, 2).unwrap() {
            assert_eq!(tableau_sign(&t) == 1, (t.cardinality() - lambda.size()) % 2 == 0);
        }
    }
}

#[test]
fn split_and_merge_are_inverse_on_all_small_tableaux() {
    for family in Family::ALL {
        for lambda in Partition::up_to_size(8) {
            if !verify::admissible(family, &lambda) {
                continue;
            }
            for t in enumerate_domino_tableaux(family, &lambda, 2).unwrap() {
                let (a, b) = gamma_split(&t).unwrap();
                assert!(validate_tableau(&a) && validate_tableau(&b));
                let back = gamma_merge(family, &a, &b).unwrap();
                assert!(validate_domino_tableau(&back));
                if family.is_shifted() {
                    assert_eq!(up_fingerprint(&back).unwrap(), up_fingerprint(&t).unwrap(), "{t}");
                } else {
                    assert_eq!(back, t);
                }
            }
        }
    }
}

/// Every flat tableau with at most four boxes, per family.
fn flat_pool(family: Family) -> Vec<Tableau> {
    let n = if family.is_set_valued() { 2 } else { 3 };
    shapes_for(family, 4)
        .iter()
        .flat_map(|lambda| enumerate_tableaux(family, lambda, n).unwrap())
        .collect()
}

fn flat_pair() -> impl Strategy<Value = (Family, Tableau, Tableau)> {
    let pools: Vec<Vec<Tableau>> = Family::ALL.iter().map(|&f| flat_pool(f)).collect();
    (0..4usize, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(move |(f, i, j)| {
        let pool = &pools[f];
        (Family::ALL[f], i.get(pool).clone(), j.get(pool).clone())
    })
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i128..=5), 0..5).prop_map(|terms| {
        let mut p = Polynomial::zero(3);
        for (e, c) in terms {
            p.add_term(Monomial::new(e), c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn merged_pairs_split_back((family, a, b) in flat_pair()) {
        let t = gamma_merge(family, &a, &b).unwrap();
        prop_assert!(validate_domino_tableau(&t));
        prop_assert_eq!(t.shape(), &inverse_two_quotient(a.shape(), b.shape()));
        prop_assert_eq!(gamma_split(&t).unwrap(), (a, b));
    }

    #[test]
    fn canonical_form_is_stable((family, a, b) in flat_pair()) {
        let t = gamma_merge(family, &a, &b).unwrap();
        for doc in [Document::DominoTableau { tableau: t }, Document::Pair { t1: a, t2: b }] {
            let text = to_canonical(&doc);
            let back = from_canonical(&text).unwrap();
            prop_assert_eq!(to_canonical(&back), text);
            prop_assert_eq!(back, doc);
        }
    }

    #[test]
    fn ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn first_difference_is_minimal(p in small_poly(), q in small_poly()) {
        match p.first_difference(&q) {
            None => prop_assert_eq!(p, q),
            Some((m, a, b)) => {
                prop_assert_ne!(a, b);
                let d = &p - &q;
                prop_assert_eq!(d.terms().next().map(|(k, _)| k.clone()), Some(m));
            }
        }
    }

    #[test]
    fn shape_strings_round_trip(parts in prop::collection::vec(1usize..6, 0..6)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = part(&parts);
        prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
    }
}
