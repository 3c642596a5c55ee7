use std::time::{Duration, Instant};

/// Node and wall-clock budget shared by the exact search routines.
///
/// A search that runs out of budget reports what it has found and clears its
/// `optimal` flag; it never guesses.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    pub node_cap: Option<u64>,
    pub time_cap: Option<Duration>,
}

impl SearchLimits {
    pub const UNLIMITED: SearchLimits = SearchLimits {
        node_cap: None,
        time_cap: None,
    };

    pub fn nodes(cap: u64) -> Self {
        SearchLimits {
            node_cap: Some(cap),
            time_cap: None,
        }
    }

    pub fn with_time(mut self, cap: Duration) -> Self {
        self.time_cap = Some(cap);
        self
    }

    pub(crate) fn start(&self) -> Budget {
        Budget {
            limits: *self,
            started: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }
}

/// Running counter for one search.
#[derive(Debug)]
pub(crate) struct Budget {
    limits: SearchLimits,
    started: Instant,
    pub nodes: u64,
    pub exhausted: bool,
}

impl Budget {
    /// Counts one node. Returns `false` once the budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(cap) = self.limits.node_cap {
            if self.nodes > cap {
                self.exhausted = true;
                return false;
            }
        }
        // clock is sampled every 4096 nodes
        if self.nodes & 0xfff == 0 {
            if let Some(cap) = self.limits.time_cap {
                if self.started.elapsed() > cap {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }

    pub fn millis(&self) -> u128 {
        self.started.elapsed().as_millis()
    }
}
