use super::config::Format;
use std::fmt::Display;

/// Output of one command: ordered `key=value` pairs for machine use and a
/// prose rendering for people.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub command: &'static str,
    pub entries: Vec<(String, String)>,
    pub human: String,
    /// Printed on stderr in both formats.
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            ..Default::default()
        }
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<String> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.clone())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => format!("{}\n", self.human),
            Format::Kv => {
                let mut out = format!("command={}\n", self.command);
                for (k, v) in &self.entries {
                    out.push_str(&format!("{k}={v}\n"));
                }
                out
            }
        }
    }
}
