use proptest::prelude::*;

use latin_djokovic::{
    decipher, divide_in_groups, encipher, generate_key, key_schedule, shift_char, AlphabetMode,
    Direction, LatinKey,
};

fn any_key() -> impl Strategy<Value = LatinKey> {
    (1u32..=47, 0u32..=3, any::<bool>()).prop_map(|(a, off, unified)| {
        let mode = if unified {
            AlphabetMode::Unified52
        } else {
            AlphabetMode::CasePreserving
        };
        LatinKey::new(a, a + off, mode).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn round_trip_and_fixpoints(text in "\\PC{0,100}", key in any_key()) {
        let ct = encipher(&text, &key).unwrap();
        prop_assert_eq!(decipher(&ct, &key).unwrap(), text.clone());
        prop_assert_eq!(ct.chars().count(), text.chars().count());
        for (p, c) in text.chars().zip(ct.chars()) {
            if !p.is_ascii_alphabetic() {
                prop_assert_eq!(p, c);
            } else if key.mode() == AlphabetMode::CasePreserving {
                prop_assert_eq!(p.is_ascii_uppercase(), c.is_ascii_uppercase());
            }
        }
    }

    #[test]
    fn each_group_uses_its_scheduled_shift(text in "[ -~]{0,100}", key in any_key()) {
        let ct = encipher(&text, &key).unwrap();
        let k = key.k_init() as usize;
        let plain_groups = divide_in_groups(&text, k).unwrap();
        let cipher_groups = divide_in_groups(&ct, k).unwrap();
        prop_assert_eq!(plain_groups.len(), cipher_groups.len());
        for (i, (p, c)) in plain_groups.iter().zip(cipher_groups.iter()).enumerate() {
            let shift = key_schedule(&key, i);
            let expected: String = p
                .chars()
                .map(|ch| shift_char(ch, shift, Direction::Right, key.mode()))
                .collect();
            prop_assert_eq!(expected.as_str(), c);
        }
    }

    #[test]
    fn groups_concatenate_back(text in "\\PC{0,100}", k in 1usize..=60) {
        let groups = divide_in_groups(&text, k).unwrap();
        prop_assert_eq!(groups.concat(), text.clone());
        let n = text.chars().count();
        prop_assert_eq!(groups.len(), n.div_ceil(k));
        if let Some((last, rest)) = groups.groups().split_last() {
            prop_assert!(rest.iter().all(|g| g.chars().count() == k));
            let tail = last.chars().count();
            prop_assert!(tail >= 1 && tail <= k);
        }
    }

    #[test]
    fn keys_survive_serialization(a in 1u32..=47, seed in any::<u64>()) {
        let key = generate_key(a, Some(seed), AlphabetMode::Unified52).unwrap();
        let line = key.to_line();
        prop_assert!(line.ends_with('\n'));
        prop_assert_eq!(line.parse::<LatinKey>().unwrap(), key);
    }
}

#[test]
fn key_line_is_exact() {
    let key = LatinKey::new(12, 14, AlphabetMode::CasePreserving).unwrap();
    assert_eq!(key.to_line(), "latin-djokovic v1 a=12 k=14 mode=case\n");
    assert_eq!(key.b(), 15);
}
