use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Default search budget for the exact solvers.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

/// Wall-clock budget shared by a single solver run.
///
/// Checking the clock is cheap but not free, so [`Budget::tick`] only looks at
/// it on the first call and then every few thousand calls.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Duration,
    deadline: Instant,
    ticks: u32,
}

impl Budget {
    pub fn new(limit: Duration) -> Self {
        Budget {
            limit,
            deadline: Instant::now() + limit,
            ticks: 0,
        }
    }

    pub fn limit(&self) -> Duration {
        self.limit
    }

    pub fn check(&self) -> Result<()> {
        if Instant::now() >= self.deadline {
            Err(Error::Timeout(self.limit))
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 4096 == 1 {
            self.check()
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_TIMEOUT)
    }
}
