//! The Latin Djokovic secret `(a, k_init, mode)` and its per-group shift schedule.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::AlphabetMode;
use crate::error::{Error, Result};

/// Smallest accepted lower bound `a`.
pub const MIN_A: u32 = 1;
/// Largest accepted lower bound `a` (`a < 48`).
pub const MAX_A: u32 = 47;
/// Width of the key range: `b = a + 3`.
pub const RANGE_WIDTH: u32 = 3;

const KEY_LINE_TAG: &str = "latin-djokovic";
const KEY_LINE_VERSION: &str = "v1";

/// Everything needed to encipher or decipher a message.
///
/// `b` is never stored; it is always `a + 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatinKey {
    a: u32,
    k_init: u32,
    mode: AlphabetMode,
}

impl LatinKey {
    pub fn new(a: u32, k_init: u32, mode: AlphabetMode) -> Result<Self> {
        check_a(i64::from(a))?;
        let b = a + RANGE_WIDTH;
        if !(a..=b).contains(&k_init) {
            return Err(Error::InitialKeyRange {
                a,
                b,
                k_init: i64::from(k_init),
            });
        }
        Ok(LatinKey { a, k_init, mode })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.a + RANGE_WIDTH
    }

    pub fn k_init(&self) -> u32 {
        self.k_init
    }

    pub fn mode(&self) -> AlphabetMode {
        self.mode
    }

    /// Same `(a, k_init)` over a different alphabet.
    pub fn with_mode(self, mode: AlphabetMode) -> Self {
        LatinKey { mode, ..self }
    }

    /// Number of distinct shifts the schedule cycles through: `k_init ..= b + 1`.
    pub fn cycle_len(&self) -> u32 {
        self.b() + 2 - self.k_init
    }

    /// Shift applied to group `group_index`.
    #[inline]
    pub fn shift_for_group(&self, group_index: usize) -> u32 {
        let offset = group_index % self.cycle_len() as usize;
        self.k_init + offset as u32
    }

    /// Infinite iterator over the schedule, starting at group 0.
    pub fn schedule(&self) -> impl Iterator<Item = u32> + '_ {
        (0..).map(move |i| self.shift_for_group(i))
    }

    /// The one-line text form, newline included.
    pub fn to_line(&self) -> String {
        format!("{self}\n")
    }
}

/// Shift used for group `group_index`; see [`LatinKey::shift_for_group`].
pub fn key_schedule(key: &LatinKey, group_index: usize) -> u32 {
    key.shift_for_group(group_index)
}

fn check_a(a: i64) -> Result<()> {
    if (i64::from(MIN_A)..=i64::from(MAX_A)).contains(&a) {
        Ok(())
    } else {
        Err(Error::KeyRange(a))
    }
}

/// Draws `k_init` uniformly from `[a, a + 3]`.
///
/// With a seed the result is reproducible; without one the generator is
/// seeded from operating-system entropy.
pub fn generate_key(a: u32, seed: Option<u64>, mode: AlphabetMode) -> Result<LatinKey> {
    check_a(i64::from(a))?;
    let mut rng = match seed {
        Some(seed) => ChaCha8Rng::seed_from_u64(seed),
        None => ChaCha8Rng::from_os_rng(),
    };
    let k_init = rng.random_range(a..=a + RANGE_WIDTH);
    LatinKey::new(a, k_init, mode)
}

impl fmt::Display for LatinKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{KEY_LINE_TAG} {KEY_LINE_VERSION} a={} k={} mode={}",
            self.a, self.k_init, self.mode
        )
    }
}

impl FromStr for LatinKey {
    type Err = Error;

    /// Parses `latin-djokovic v1 a=<int> k=<int> mode=<case|unified52>`,
    /// with at most one trailing newline.
    fn from_str(line: &str) -> Result<Self> {
        let line = line
            .strip_suffix('\n')
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .unwrap_or(line);
        let fields: Vec<&str> = line.split(' ').collect();
        let [tag, version, a, k, mode] = fields.as_slice() else {
            return Err(Error::KeyParse(format!(
                "expected 5 space-separated fields, got {}",
                fields.len()
            )));
        };
        if *tag != KEY_LINE_TAG {
            return Err(Error::KeyParse(format!("unknown tag `{tag}`")));
        }
        if *version != KEY_LINE_VERSION {
            return Err(Error::KeyParse(format!("unsupported version `{version}`")));
        }
        let a = parse_int_field(a, "a")?;
        let k = parse_int_field(k, "k")?;
        let mode: AlphabetMode = field_value(mode, "mode")?.parse()?;
        check_a(a)?;
        let a = a as u32;
        let b = a + RANGE_WIDTH;
        if k < i64::from(a) || k > i64::from(b) {
            return Err(Error::InitialKeyRange { a, b, k_init: k });
        }
        LatinKey::new(a, k as u32, mode)
    }
}

fn field_value<'a>(field: &'a str, name: &str) -> Result<&'a str> {
    field
        .strip_prefix(name)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::KeyParse(format!("expected `{name}=...`, got `{field}`")))
}

fn parse_int_field(field: &str, name: &str) -> Result<i64> {
    let value = field_value(field, name)?;
    value
        .parse()
        .map_err(|_| Error::KeyParse(format!("`{name}` is not an integer: `{value}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Literal trace of the increment-and-reset loop.
    fn loop_trace(key: &LatinKey, groups: usize) -> Vec<u32> {
        let b = key.a() + 3;
        let mut k = key.k_init();
        let mut out = Vec::with_capacity(groups);
        for _ in 0..groups {
            out.push(k);
            k += 1;
            if b + 1 < k {
                k = key.k_init();
            }
        }
        out
    }

    fn case_key(a: u32, k: u32) -> LatinKey {
        LatinKey::new(a, k, AlphabetMode::CasePreserving).unwrap()
    }

    #[test]
    fn worked_example_schedule() {
        let key = case_key(1, 3);
        let got: Vec<u32> = (0..6).map(|i| key_schedule(&key, i)).collect();
        assert_eq!(got, [3, 4, 5, 3, 4, 5]);
    }

    #[test]
    fn schedule_starting_at_b() {
        let key = case_key(1, 4);
        assert_eq!(key.schedule().take(4).collect::<Vec<_>>(), [4, 5, 4, 5]);
        assert_eq!(key.cycle_len(), 2);
    }

    #[test]
    fn schedule_matches_loop_for_every_key() {
        for a in MIN_A..=MAX_A {
            for k in a..=a + 3 {
                let key = case_key(a, k);
                assert_eq!(key_schedule(&key, 0), k);
                let closed: Vec<u32> = (0..=40).map(|i| key_schedule(&key, i)).collect();
                assert_eq!(closed, loop_trace(&key, 41), "a={a} k={k}");
            }
        }
    }

    #[test]
    fn generate_key_bounds() {
        let low = generate_key(1, Some(9), AlphabetMode::CasePreserving).unwrap();
        assert_eq!((low.a(), low.b()), (1, 4));
        assert!((1..=4).contains(&low.k_init()));

        let high = generate_key(47, Some(9), AlphabetMode::CasePreserving).unwrap();
        assert_eq!(high.b(), 50);
        assert!(high.k_init() <= 50);

        assert_eq!(
            generate_key(48, Some(1), AlphabetMode::CasePreserving),
            Err(Error::KeyRange(48))
        );
        assert_eq!(
            generate_key(0, None, AlphabetMode::Unified52),
            Err(Error::KeyRange(0))
        );
    }

    #[test]
    fn generate_key_covers_whole_range() {
        let mut seen = [false; 4];
        for seed in 0..200 {
            let key = generate_key(10, Some(seed), AlphabetMode::CasePreserving).unwrap();
            seen[(key.k_init() - 10) as usize] = true;
        }
        assert_eq!(seen, [true; 4]);
        // unseeded path draws from the OS and still respects the range
        let key = generate_key(20, None, AlphabetMode::CasePreserving).unwrap();
        assert!((20..=23).contains(&key.k_init()));
    }

    #[test]
    fn new_rejects_k_outside_range() {
        assert!(matches!(
            LatinKey::new(5, 9, AlphabetMode::CasePreserving),
            Err(Error::InitialKeyRange { k_init: 9, .. })
        ));
        assert!(LatinKey::new(5, 4, AlphabetMode::CasePreserving).is_err());
    }

    #[test]
    fn key_line_format() {
        let key = case_key(1, 3);
        assert_eq!(key.to_line(), "latin-djokovic v1 a=1 k=3 mode=case\n");
        let uni = LatinKey::new(47, 50, AlphabetMode::Unified52).unwrap();
        assert_eq!(
            uni.to_string(),
            "latin-djokovic v1 a=47 k=50 mode=unified52"
        );
    }

    #[test]
    fn key_line_rejections() {
        for bad in [
            "",
            "latin-djokovic v2 a=1 k=3 mode=case",
            "latin-djokovic v1 a=1 k=3 mode=rot",
            "latin-djokovic v1 a=48 k=49 mode=case",
            "latin-djokovic v1 a=0 k=1 mode=case",
            "latin-djokovic v1 a=-3 k=0 mode=case",
            "latin-djokovic v1 a=1 k=5 mode=case",
            "latin-djokovic v1 a=1 k=x mode=case",
            "latin-djokovic v1 a=1 b=4 k=3 mode=case",
            "latin-djokovic v1 k=3 a=1 mode=case",
            "caesar v1 a=1 k=3 mode=case",
            "latin-djokovic v1 a=1 k=3 mode=case\n\n",
        ] {
            assert!(bad.parse::<LatinKey>().is_err(), "accepted {bad:?}");
        }
        assert!("latin-djokovic v1 a=1 k=3 mode=case\r\n"
            .parse::<LatinKey>()
            .is_ok());
    }

    proptest! {
        #[test]
        fn key_line_round_trips(a in MIN_A..=MAX_A, off in 0u32..=3, unified in any::<bool>()) {
            let mode = if unified { AlphabetMode::Unified52 } else { AlphabetMode::CasePreserving };
            let key = LatinKey::new(a, a + off, mode).unwrap();
            prop_assert_eq!(key.to_line().parse::<LatinKey>().unwrap(), key);
        }

        #[test]
        fn seeded_generation_is_deterministic(a in MIN_A..=MAX_A, seed in any::<u64>()) {
            let first = generate_key(a, Some(seed), AlphabetMode::CasePreserving).unwrap();
            let second = generate_key(a, Some(seed), AlphabetMode::CasePreserving).unwrap();
            prop_assert_eq!(first, second);
            prop_assert!(first.k_init() >= a && first.k_init() <= a + 3);
        }
    }
}
