//! Polynomial sets transcribed verbatim (LaTeX spelling, line breaks
//! removed) and the checksum that pins the transcription.

use sha2::{Digest, Sha256};

pub const G67_I: &str = "y_0 y_2 + 2 y_0 - y_1 y_2 - 2 y_1, y_0 y_3 - 2 y_0 - 4 y_3 + 5, y_0 y_4 - 2 y_0 - 4 y_4 + 5, 3 y_0 - 3 y_1, 2 y_1 y_2 - 2 y_1 - y_2 - 3 y_4 + 4, y_1 y_3 - 2 y_1 - 4 y_3 + 5, y_1 y_4 - 2 y_1 - 4 y_4 + 5, y_2 y_3 + 6 y_2 y_4 - 8 y_2 + 2 y_3 - 3 y_4^2 + 2, 7 y_2 y_4 - 8 y_2 - 3 y_4^2 + 2 y_4 + 2, 3 y_3 - 3 y_4";

pub const G67_J: &str = "x_0 - 2y_2y_4 + 2y_2 + y_3y_4 - 2y_3, x_1x_2 - 5x_1 - 5x_2 + 9, x_1x_3 - 2x_1 - x_3 + 2, x_1y_0 - x_1 - 2y_0 + y_1 + 1, x_1y_2 - x_1 - y_2 + 1, x_1y_3 - 2x_1 - 8y_3 + 7y_4 + 2, 3x_1 - 3, x_2x_3 - 2x_2 - x_3 + 2, x_2y_1 - x_2 + y_0 - 2y_1 + 1, x_2y_2 - x_2 - y_2 + 1, x_2y_4 - 2x_2 + 7y_3 - 8y_4 + 2, 3x_2 - 3, x_3y_0 - 2x_3 - 2y_0 + 7, x_3y_1 - 2x_3 - 2y_1 + 7, x_3y_2 - x_3y_4 - 4y_2 + 2y_4 + 2, x_3y_3 - x_3y_4 - 2y_3 + 2y_4, 2x_3y_4 - x_3 - y_4 - 4, x_4 + y_0y_1 - y_0 - 4y_1 + 2, x_5 - 3y_1y_2 + 3y_1 - 2y_2 + 6y_4 - 6";

pub const COTWIN_I: &str = "y_0y_1 - 2y_0 - 2y_1 + 3, y_2 - 5";

pub const COTWIN_J: &str = "x_0 + y_1 - 6, x_1 + y_0 - 6, x_2x_3 - 2x_2 - 2x_3 + 3, x_2y_0 - x_2 - y_0 + 1, x_2y_1 - x_2 - y_1 + 1, 3x_2 - 3, x_3y_0 - x_3 - y_0 + 1, x_3y_1 - x_3 - y_1 + 1, 3x_3 - 3, x_4 + y_1 - 3, x_5 + y_0 - 3";

pub const COTWIN_332: &str = "x_0, x_1, x_2 + 2, x_3 + 2, x_4, x_5, c + 1, d + 1, e + 1, f + 1, x_u + 2, 3";

pub const G615_I: &str = "x_0 x_1 + x_0 + x_1, x_0 y_0 + 2 x_0 + y_0 + y_2 + 1, x_0 y_1 + 2 x_0 + y_1 + y_3 + 1, x_1 y_2 + 2 x_1 + y_0 + y_2 + 1, x_1 y_3 + 2 x_1 + y_1 + y_3 + 1, x_2 + y_1 y_3 + 2 y_1 + 2 y_3 + 2, x_3 + y_0 y_2 + 2 y_0 + 2 y_2 + 2, x_4 + 1, x_5 + 1, x_6 + 1";

pub const G615_J: &str = "y_0 y_1 + 2 y_0 + 2 y_1 + 1, y_0 y_3 + 2 y_0 + 2 y_3 + 1, y_1 y_2 + 2 y_1 + 2 y_2 + 1, y_2 y_3 + 2 y_2 + 2 y_3 + 1, 3";

/// All transcribed sets, in checksum order.
pub const ALL: [(&str, &str); 7] = [
    ("G67_I", G67_I),
    ("G67_J", G67_J),
    ("COTWIN_I", COTWIN_I),
    ("COTWIN_J", COTWIN_J),
    ("COTWIN_332", COTWIN_332),
    ("G615_I", G615_I),
    ("G615_J", G615_J),
];

/// SHA-256 of the sets above joined by newlines.
pub const CHECKSUM: &str = "4143a89b0a60af93939bea1fbba67c8bc866c9ca90608b487210884eb3370945";

/// SHA-256 of the current transcription, as lowercase hex.
pub fn transcription_checksum() -> String {
    let joined: Vec<&str> = ALL.iter().map(|(_, t)| *t).collect();
    let digest = Sha256::digest(joined.join("\n").as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Splits a transcribed set at its top-level commas.
pub fn split_set(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}
