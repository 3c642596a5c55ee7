use std::ops::RangeInclusive;
use std::str::FromStr;

/// A board size or an inclusive range of sizes: `7` or `3..10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl NRange {
    pub fn sizes(&self) -> Vec<usize> {
        self.0.clone().collect()
    }

    pub fn max(&self) -> usize {
        *self.0.end()
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a board size"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo == 0 {
            return Err("board sizes start at 1".into());
        }
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange(lo..=hi))
    }
}
