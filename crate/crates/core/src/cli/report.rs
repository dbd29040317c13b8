use std::fmt::Display;

/// An ordered list of key/value lines. Keys keep insertion order so the
/// rendering is byte-identical across runs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunReport {
    entries: Vec<(String, String)>,
}

impl RunReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        let value = value.to_string().replace('\n', " ");
        self.entries.push((key.into(), value));
    }

    /// `key.count` followed by `key.0`, `key.1`, ...
    pub fn push_list<T: Display>(&mut self, key: &str, items: impl IntoIterator<Item = T>) {
        let items: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
        self.push(format!("{key}.count"), items.len());
        for (i, x) in items.into_iter().enumerate() {
            self.push(format!("{key}.{i}"), x);
        }
    }

    pub fn extend(&mut self, prefix: &str, other: RunReport) {
        for (k, v) in other.entries {
            self.entries.push((format!("{prefix}.{k}"), v));
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// Aligned `key  value` lines.
    pub fn render_text(&self) -> String {
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        self.entries
            .iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }

    /// `key=value` lines.
    pub fn render_machine(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

/// `[3, 3]` as `3,3`.
pub fn join_dims(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_rendering() {
        let mut r = RunReport::new();
        r.push("hh1", 3);
        r.push_list("rep", ["(x, 1)", "(x, x)"]);
        assert_eq!(r.render_machine(), "hh1=3\nrep.count=2\nrep.0=(x, 1)\nrep.1=(x, x)\n");
        assert_eq!(r.render_text().lines().next(), Some("hh1        3"));
        assert_eq!(r.get("rep.1"), Some("(x, x)"));
    }
}
