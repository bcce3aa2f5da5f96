//! Digit-keyed shift cipher over the repetend keystream.
//!
//! Each letter is shifted by the next keystream digit, Gronsfeld style:
//! letters fold to uppercase and move `digit` places through the alphabet,
//! everything else passes through untouched and consumes no key digit. The
//! construction demonstrates keystream use end to end; a 10-symbol shift
//! cipher offers no real secrecy and none is claimed.

use alloc::string::String;
use core::fmt;

use crate::keystream::{self, KeyDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CipherError {
    /// Input is restricted to ASCII; the offending byte offset is reported.
    NonAscii { index: usize },
}

impl fmt::Display for CipherError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CipherError::NonAscii { index } => {
                write!(f, "non-ASCII character at byte {index}")
            }
        }
    }
}

impl core::error::Error for CipherError {}

/// ASCII text with every letter uppercase, the output form of [`encrypt`]
/// and the input form of [`decrypt`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherText {
    body: String,
}

impl CipherText {
    /// Normalizes arbitrary ASCII text into ciphertext form, folding letters
    /// to uppercase. Non-ASCII input is rejected.
    pub fn new(text: impl Into<String>) -> Result<Self, CipherError> {
        let mut body = text.into();
        if let Some(index) = body.bytes().position(|b| !b.is_ascii()) {
            return Err(CipherError::NonAscii { index });
        }
        body.make_ascii_uppercase();
        Ok(CipherText { body })
    }

    pub fn as_str(&self) -> &str {
        &self.body
    }

    pub fn into_string(self) -> String {
        self.body
    }
}

impl fmt::Display for CipherText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.body)
    }
}

fn shift_text(text: &str, key: &KeyDescriptor, forward: bool) -> Result<String, CipherError> {
    if let Some(index) = text.bytes().position(|b| !b.is_ascii()) {
        return Err(CipherError::NonAscii { index });
    }
    let letters = text.bytes().filter(|b| b.is_ascii_alphabetic()).count();
    let mut digits = keystream::keystream_digits(key, letters)
        .into_bytes()
        .into_iter()
        .map(|b| b - b'0');
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        if ch.is_ascii_alphabetic() {
            let idx = ch.to_ascii_uppercase() as u8 - b'A';
            let digit = digits.next().expect("one keystream digit per letter");
            let moved = if forward {
                (idx + digit) % 26
            } else {
                (idx + 26 - digit) % 26
            };
            out.push(char::from(b'A' + moved));
        } else {
            out.push(ch);
        }
    }
    Ok(out)
}

/// Shifts each letter of `plaintext` forward by the next keystream digit.
///
/// Letters are folded to uppercase first; non-letter ASCII passes through
/// and consumes no digits, so punctuation never disturbs the alignment of
/// letters to key digits.
pub fn encrypt(plaintext: &str, key: &KeyDescriptor) -> Result<CipherText, CipherError> {
    Ok(CipherText {
        body: shift_text(plaintext, key, true)?,
    })
}

/// Exact inverse of [`encrypt`] under the same key.
pub fn decrypt(ciphertext: &CipherText, key: &KeyDescriptor) -> String {
    shift_text(&ciphertext.body, key, false).expect("ciphertext is validated ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(n: u64, d: u64) -> KeyDescriptor {
        KeyDescriptor::new(n, d, 0).unwrap()
    }

    #[test]
    fn encrypt_examples() {
        let k = key(1, 7);
        assert_eq!(encrypt("ATTACK", &k).unwrap().as_str(), "BXVIHR");
        assert_eq!(encrypt("", &k).unwrap().as_str(), "");
        assert_eq!(encrypt("AT TACK", &k).unwrap().as_str(), "BX VIHR");
        assert_eq!(encrypt("attack", &k).unwrap().as_str(), "BXVIHR");
        assert_eq!(
            encrypt("attack at dawn!", &k).unwrap().as_str(),
            encrypt("ATTACK AT DAWN!", &k).unwrap().as_str()
        );
    }

    #[test]
    fn decrypt_examples() {
        let k = key(1, 7);
        let ct = CipherText::new("BXVIHR").unwrap();
        assert_eq!(decrypt(&ct, &k), "ATTACK");
        let ct = CipherText::new("").unwrap();
        assert_eq!(decrypt(&ct, &k), "");
        let ct = CipherText::new("BX VIHR").unwrap();
        assert_eq!(decrypt(&ct, &k), "AT TACK");
    }

    #[test]
    fn round_trips() {
        let keys = [key(1, 7), key(5, 13), key(64, 2431).with_offset(11)];
        let messages = [
            "HELLO, WORLD",
            "a1b2c3",
            "THE QUICK BROWN FOX JUMPS OVER THE LAZY DOG",
            "   ",
            "punctuation; stays? (yes)",
        ];
        for k in &keys {
            for msg in messages {
                let ct = encrypt(msg, k).unwrap();
                assert_eq!(decrypt(&ct, k), msg.to_ascii_uppercase());
            }
        }
    }

    #[test]
    fn zero_digit_fixes_letter() {
        // 1/13 begins 0.076923, so the first letter is unshifted
        let k = key(1, 13);
        assert_eq!(encrypt("AB", &k).unwrap().as_str(), "AI");
    }

    #[test]
    fn non_ascii_is_rejected() {
        let k = key(1, 7);
        assert_eq!(
            encrypt("naïve", &k),
            Err(CipherError::NonAscii { index: 2 })
        );
        assert_eq!(
            CipherText::new("héllo"),
            Err(CipherError::NonAscii { index: 1 })
        );
    }

    #[test]
    fn passthrough_preserves_positions() {
        let k = key(3, 7);
        let msg = "A-B C.D";
        let ct = encrypt(msg, &k).unwrap();
        let body = ct.as_str();
        assert_eq!(body.len(), msg.len());
        for (a, b) in msg.chars().zip(body.chars()) {
            assert_eq!(a.is_ascii_alphabetic(), b.is_ascii_alphabetic());
            if !a.is_ascii_alphabetic() {
                assert_eq!(a, b);
            }
        }
    }
}
