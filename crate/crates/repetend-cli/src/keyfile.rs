//! The on-disk key descriptor format: a fixed four-line ASCII file,
//! rendered and parsed bit-exactly.
//!
//! ```text
//! REPETEND-KEY v1
//! numerator=<decimal>
//! denominator=<decimal>
//! offset=<decimal>
//! ```

use std::fmt;

use repetend::keystream::{KeyDescriptor, KeyError};

pub const MAGIC: &str = "REPETEND-KEY v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeyFileError {
    /// The first line is not the expected magic string.
    BadMagic { found: String },
    /// The file ended before this field's line.
    MissingField(&'static str),
    /// A line did not start with the expected `field=` prefix.
    WrongField { expected: &'static str, found: String },
    /// The field's value is not an unsigned decimal in range.
    BadValue { field: &'static str, found: String },
    /// Content after the offset line.
    TrailingContent(String),
    /// The fields parse but violate a key invariant.
    Invalid(KeyError),
}

impl fmt::Display for KeyFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeyFileError::BadMagic { found } => {
                write!(f, "first line must be {MAGIC:?}, found {found:?}")
            }
            KeyFileError::MissingField(field) => write!(f, "missing line {field}=<decimal>"),
            KeyFileError::WrongField { expected, found } => {
                write!(f, "expected line {expected}=<decimal>, found {found:?}")
            }
            KeyFileError::BadValue { field, found } => {
                write!(f, "field {field} has invalid value {found:?}")
            }
            KeyFileError::TrailingContent(line) => {
                write!(f, "unexpected content after offset line: {line:?}")
            }
            KeyFileError::Invalid(e) => write!(f, "invalid key: {e}"),
        }
    }
}

impl std::error::Error for KeyFileError {}

impl From<KeyError> for KeyFileError {
    fn from(e: KeyError) -> Self {
        KeyFileError::Invalid(e)
    }
}

/// Serializes a key to the four-line file text, trailing newline included.
pub fn render(key: &KeyDescriptor) -> String {
    format!(
        "{MAGIC}\nnumerator={}\ndenominator={}\noffset={}\n",
        key.numerator(),
        key.denominator(),
        key.offset()
    )
}

fn field(line: Option<&str>, name: &'static str) -> Result<u64, KeyFileError> {
    let line = line.ok_or(KeyFileError::MissingField(name))?;
    let value = line
        .strip_prefix(name)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| KeyFileError::WrongField {
            expected: name,
            found: line.to_string(),
        })?;
    // leading '+' and internal whitespace are not part of the format
    if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) {
        return Err(KeyFileError::BadValue {
            field: name,
            found: value.to_string(),
        });
    }
    value.parse().map_err(|_| KeyFileError::BadValue {
        field: name,
        found: value.to_string(),
    })
}

/// Parses and validates key file text. The final newline may be absent, but
/// every other deviation from the format is an error.
pub fn parse(text: &str) -> Result<KeyDescriptor, KeyFileError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(MAGIC) => {}
        other => {
            return Err(KeyFileError::BadMagic {
                found: other.unwrap_or("").to_string(),
            })
        }
    }
    let numerator = field(lines.next(), "numerator")?;
    let denominator = field(lines.next(), "denominator")?;
    let offset = field(lines.next(), "offset")?;
    if let Some(extra) = lines.next() {
        return Err(KeyFileError::TrailingContent(extra.to_string()));
    }
    Ok(KeyDescriptor::new(numerator, denominator, offset)?)
}
