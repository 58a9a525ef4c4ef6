//! Check results as data. A report is a list of named clauses, each
//! passing or carrying a rendered witness; callers decide what failure
//! means (exit codes, test assertions, logging).

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub id: String,
    /// `None` means the clause passed; otherwise the least witness
    /// found, rendered like `x=c y=d`.
    pub witness: Option<String>,
}

impl Clause {
    pub fn pass(id: impl Into<String>) -> Self {
        Clause { id: id.into(), witness: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Clause { id: id.into(), witness: Some(witness.into()) }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn render(&self) -> String {
        match &self.witness {
            None => format!("{} PASS", self.id),
            Some(w) if w.is_empty() => format!("{} FAIL", self.id),
            Some(w) => format!("{} FAIL {}", self.id, w),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub clauses: Vec<Clause>,
}

/// Reports from the axiom scanners; same shape, clause ids are axiom tags.
pub type AxiomReport = CheckReport;

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { clauses: Vec::new() }
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(Clause::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.clauses {
            out.push_str(&c.render());
            out.push('\n');
        }
        out
    }

    pub fn merged(reports: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut out = CheckReport::new();
        for r in reports {
            out.clauses.extend(r.clauses);
        }
        out
    }
}
