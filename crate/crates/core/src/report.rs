use serde::{Deserialize, Serialize};

/// Outcome of one axiom family or named check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A concrete failing instantiation, rendered canonically so that reports
/// are byte-stable and the instance can be re-run by key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Canonical key of the instantiation within its check family.
    pub key: String,
    /// Rendering of the two sides (or the violated condition).
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    /// Number of instantiations evaluated.
    pub instances: u64,
    /// Number of instantiations that failed (witnesses may be capped).
    pub failures: u64,
    pub witnesses: Vec<Witness>,
}

/// Aggregate of named checks, ordered deterministically by insertion.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckReport>,
}

/// Witnesses kept per check; failures beyond this are only counted.
pub const WITNESS_CAP: usize = 4;

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Render as plain text, one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!(
                "[{tag}] {} ({} instances, {} failures)\n",
                c.name, c.instances, c.failures
            ));
            for w in &c.witnesses {
                out.push_str(&format!("       witness {}: {}\n", w.key, w.detail));
            }
        }
        out
    }
}

/// Builder that tallies instances of one axiom family.
pub struct Family {
    name: String,
    instances: u64,
    failures: u64,
    witnesses: Vec<Witness>,
    /// When set, only instantiations whose key equals the filter run.
    pub filter: Option<String>,
}

impl Family {
    pub fn new(name: impl Into<String>) -> Self {
        Family {
            name: name.into(),
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
            filter: None,
        }
    }

    pub fn with_filter(name: impl Into<String>, filter: Option<String>) -> Self {
        let mut f = Self::new(name);
        f.filter = filter;
        f
    }

    /// Should the instantiation with this key run under the current filter?
    pub fn admits(&self, key: &str) -> bool {
        match &self.filter {
            None => true,
            Some(f) => f == key,
        }
    }

    /// Record an evaluated instantiation. Witness details are truncated
    /// deterministically so reports stay readable.
    pub fn record(&mut self, key: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < WITNESS_CAP {
                let mut d = detail();
                const DETAIL_CAP: usize = 600;
                if d.len() > DETAIL_CAP {
                    let mut cut = DETAIL_CAP;
                    while !d.is_char_boundary(cut) {
                        cut -= 1;
                    }
                    d.truncate(cut);
                    d.push_str("…");
                }
                self.witnesses.push(Witness {
                    key: key.to_string(),
                    detail: d,
                });
            }
        }
    }

    pub fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            instances: self.instances,
            failures: self.failures,
            witnesses: self.witnesses,
        }
    }
}

/// Run a closure on a thread with a large stack. Checks over deeply
/// nested instances (quotient bimodules of tensors) build stack frames
/// far beyond the default test-thread stack in debug builds.
pub fn with_big_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    std::thread::Builder::new()
        .stack_size(512 * 1024 * 1024)
        .spawn(f)
        .expect("spawn checker thread")
        .join()
        .expect("checker thread panicked")
}
