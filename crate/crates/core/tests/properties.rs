use proptest::prelude::*;

use wonderful_core::catalog::Catalog;
use wonderful_core::expr::{Env, Expr};
use wonderful_core::names::{Factor, SpaceName, Style};
use wonderful_core::record::Record;
use wonderful_core::{CartanType, RootSystem, Weight};

fn cartan_type() -> impl Strategy<Value = CartanType> {
    prop_oneof![
        (1usize..=7).prop_map(|r| format!("A{r}")),
        (2usize..=6).prop_map(|r| format!("B{r}")),
        (3usize..=6).prop_map(|r| format!("C{r}")),
        (4usize..=6).prop_map(|r| format!("D{r}")),
        Just("E6".to_string()),
        Just("E7".to_string()),
        Just("F4".to_string()),
        Just("G2".to_string()),
    ]
    .prop_map(|s| s.parse().unwrap())
}

fn instance_count() -> usize {
    Catalog::embedded().enumerate(6).unwrap().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_closed_under_reflections(ty in cartan_type(), seed in any::<u64>()) {
        let rs = RootSystem::simple(ty).unwrap();
        let pos = rs.positive_roots();
        let root = &pos[(seed as usize) % pos.len()];
        for i in 0..rs.rank() {
            prop_assert!(rs.is_root(&rs.reflect(i, root)));
        }
        prop_assert!(rs.is_root(&-root));
        let h = rs.highest_root();
        prop_assert!(pos.iter().all(|r| (&h - r).is_nonnegative()));
    }

    #[test]
    fn sigma_is_an_involution_of_roots(idx in 0..instance_count()) {
        let inst = Catalog::embedded().enumerate(6).unwrap().swap_remove(idx);
        let rec = Record::build(inst).unwrap();
        let inv = &rec.involution;
        let rs = inv.root_system();
        for r in rs.positive_roots() {
            let s = inv.sigma(r);
            prop_assert!(rs.is_root(&s));
            prop_assert_eq!(&inv.sigma(&s), r);
        }
    }

    #[test]
    fn minimal_classes_map_to_theta_bar(idx in 0..instance_count()) {
        let inst = Catalog::embedded().enumerate(6).unwrap().swap_remove(idx);
        let rec = Record::build(inst).unwrap();
        for class in rec.curves.minimal_classes() {
            prop_assert_eq!(&rec.curves.psi(&rec.restricted, class), rec.restricted.theta_bar_coweight());
        }
    }

    #[test]
    fn names_round_trip(ty in cartan_type(), mask in 1u32..256, ascii in any::<bool>()) {
        let crossed: Vec<usize> = (1..=ty.rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        prop_assume!(!crossed.is_empty());
        let name = SpaceName::new(vec![Factor::new(ty, &crossed).unwrap()]);
        let style = if ascii { Style::Ascii } else { Style::Unicode };
        let back = SpaceName::parse(&name.render(style)).unwrap();
        prop_assert!(back.isomorphic(&name), "{} vs {}", name, back);
        prop_assert_eq!(back.dimension(), name.dimension());
    }

    #[test]
    fn expressions_match_arithmetic(a in -50i64..50, b in 1i64..20, c in -50i64..50) {
        let env: Env = [("a", a), ("b", b), ("c", c)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let eval = |s: &str| Expr::parse(s).unwrap().eval(&env).unwrap();
        prop_assert_eq!(eval("a + b * c"), a + b * c);
        prop_assert_eq!(eval("(a - c) / b"), (a - c).div_euclid(b));
        prop_assert_eq!(eval("-a + 2 * (b - c)"), -a + 2 * (b - c));
        prop_assert_eq!(eval("a < c && b >= 1"), i64::from(a < c));
        prop_assert_eq!(eval("a == c || b != b"), i64::from(a == c));
    }

    #[test]
    fn weights_form_a_group(x in prop::collection::vec(-9i64..9, 4), y in prop::collection::vec(-9i64..9, 4)) {
        let (x, y) = (Weight(x), Weight(y));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(-&(-&x), x);
    }
}
