use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Item {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A list of named pass/fail checks.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub items: Vec<Item>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), items: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> bool {
        self.items.push(Item { name: name.into(), pass, detail: detail.into() });
        pass
    }

    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for it in other.items {
            self.items.push(Item { name: format!("{prefix}{}", it.name), ..it });
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> Vec<&Item> {
        self.items.iter().filter(|i| !i.pass).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for it in &self.items {
            let tag = if it.pass { "PASS" } else { "FAIL" };
            if it.detail.is_empty() {
                writeln!(f, "  [{tag}] {}", it.name)?;
            } else {
                writeln!(f, "  [{tag}] {}: {}", it.name, it.detail)?;
            }
        }
        Ok(())
    }
}
