use crate::MAX_WITNESSES;

/// Accumulates the outcome of an exhaustive check.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub violations: usize,
    pub witnesses: Vec<Vec<String>>,
    pub skipped: usize,
}

impl Tally {
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        if !ok {
            self.violations += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}
