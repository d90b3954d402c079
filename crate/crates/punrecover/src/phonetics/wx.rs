//! Devanagari to WX conversion with schwa handling, plus WX unit classes.
//!
//! WX is a deterministic roman mapping for Indian scripts: every Devanagari
//! letter maps to one ASCII letter, aspirated consonants to the uppercase of
//! their unaspirated pair, long vowels to the uppercase of the short vowel.
//! An inherent schwa is inserted after a consonant with no vowel sign unless
//! a virama suppresses it; the word-final schwa is dropped, matching
//! standard Hindi pronunciation.

use crate::error::{Error, Result};

/// The closed unit inventory: every [`super::PhoneticForm`] is a sequence of
/// these characters.
pub const WX_UNITS: &[char] = &[
    // vowels (uppercase = long / diphthong counterpart)
    'a', 'A', 'i', 'I', 'u', 'U', 'q', 'e', 'E', 'o', 'O',
    // velar .. labial stops (uppercase = aspirated)
    'k', 'K', 'g', 'G', 'f', 'c', 'C', 'j', 'J', 'F', 't', 'T', 'd', 'D', 'N', 'w', 'W', 'x', 'X',
    'n', 'p', 'P', 'b', 'B', 'm', // sonorants and fricatives
    'y', 'r', 'l', 'v', 'S', 'R', 's', 'h', // anusvara and visarga
    'M', 'H',
];

pub fn is_wx_unit(c: char) -> bool {
    WX_UNITS.contains(&c)
}

pub fn is_wx_vowel(c: char) -> bool {
    matches!(
        c,
        'a' | 'A' | 'i' | 'I' | 'u' | 'U' | 'q' | 'e' | 'E' | 'o' | 'O'
    )
}

/// Short/long pairs of the same vowel.
pub fn is_length_pair(a: char, b: char) -> bool {
    matches!(
        (a, b),
        ('a', 'A') | ('A', 'a') | ('i', 'I') | ('I', 'i') | ('u', 'U') | ('U', 'u')
    )
}

/// Aspirated/unaspirated consonant pairs, e.g. /p/ and /ph/.
pub fn is_aspiration_pair(a: char, b: char) -> bool {
    let ordered = |x: char, y: char| {
        matches!(
            (x, y),
            ('k', 'K')
                | ('g', 'G')
                | ('c', 'C')
                | ('j', 'J')
                | ('t', 'T')
                | ('d', 'D')
                | ('w', 'W')
                | ('x', 'X')
                | ('p', 'P')
                | ('b', 'B')
        )
    };
    ordered(a, b) || ordered(b, a)
}

fn independent_vowel(c: char) -> Option<char> {
    Some(match c {
        'अ' => 'a',
        'आ' => 'A',
        'इ' => 'i',
        'ई' => 'I',
        'उ' => 'u',
        'ऊ' => 'U',
        'ऋ' => 'q',
        'ए' => 'e',
        'ऐ' => 'E',
        'ओ' => 'o',
        'औ' => 'O',
        'ऍ' => 'e',
        'ऑ' => 'o',
        _ => return None,
    })
}

fn vowel_sign(c: char) -> Option<char> {
    Some(match c {
        '\u{093E}' => 'A', // ा
        '\u{093F}' => 'i', // ि
        '\u{0940}' => 'I', // ी
        '\u{0941}' => 'u', // ु
        '\u{0942}' => 'U', // ू
        '\u{0943}' => 'q', // ृ
        '\u{0947}' => 'e', // े
        '\u{0948}' => 'E', // ै
        '\u{094B}' => 'o', // ो
        '\u{094C}' => 'O', // ौ
        '\u{0945}' => 'e', // ॅ
        '\u{0949}' => 'o', // ॉ
        _ => return None,
    })
}

fn consonant(c: char) -> Option<char> {
    Some(match c {
        'क' | '\u{0958}' => 'k',
        'ख' | '\u{0959}' => 'K',
        'ग' | '\u{095A}' => 'g',
        'घ' => 'G',
        'ङ' => 'f',
        'च' => 'c',
        'छ' => 'C',
        'ज' | '\u{095B}' => 'j',
        'झ' => 'J',
        'ञ' => 'F',
        'ट' => 't',
        'ठ' => 'T',
        'ड' | '\u{095C}' => 'd',
        'ढ' | '\u{095D}' => 'D',
        'ण' => 'N',
        'त' => 'w',
        'थ' => 'W',
        'द' => 'x',
        'ध' => 'X',
        'न' | '\u{0929}' => 'n',
        'प' => 'p',
        'फ' | '\u{095E}' => 'P',
        'ब' => 'b',
        'भ' => 'B',
        'म' => 'm',
        'य' | '\u{095F}' => 'y',
        'र' | '\u{0931}' => 'r',
        'ल' | 'ळ' | '\u{0934}' => 'l',
        'व' => 'v',
        'श' => 'S',
        'ष' => 'R',
        'स' => 's',
        'ह' => 'h',
        _ => return None,
    })
}

const VIRAMA: char = '\u{094D}';
const NUKTA: char = '\u{093C}';
const ANUSVARA: char = '\u{0902}';
const CHANDRABINDU: char = '\u{0901}';
const VISARGA: char = '\u{0903}';

/// Converts one NFC Devanagari word to its WX unit sequence.
///
/// Errors on any character that is not a supported Devanagari letter or
/// sign, naming the character.
pub fn devanagari_to_wx(word: &str) -> Result<Vec<char>> {
    let mut units: Vec<char> = Vec::new();
    // A consonant whose vowel has not been decided yet.
    let mut pending_schwa = false;
    for c in word.chars() {
        if let Some(v) = independent_vowel(c) {
            if pending_schwa {
                units.push('a');
                pending_schwa = false;
            }
            units.push(v);
        } else if let Some(k) = consonant(c) {
            if pending_schwa {
                units.push('a');
            }
            units.push(k);
            pending_schwa = true;
        } else if let Some(v) = vowel_sign(c) {
            units.push(v);
            pending_schwa = false;
        } else if c == VIRAMA {
            pending_schwa = false;
        } else if c == NUKTA || c == '\u{200C}' || c == '\u{200D}' {
            // The base consonant already mapped; joiners carry no sound.
        } else if c == ANUSVARA || c == CHANDRABINDU {
            if pending_schwa {
                units.push('a');
                pending_schwa = false;
            }
            units.push('M');
        } else if c == VISARGA {
            if pending_schwa {
                units.push('a');
                pending_schwa = false;
            }
            units.push('H');
        } else {
            return Err(Error::NotDevanagari(c));
        }
    }
    // Word-final schwa deletion: a trailing inherent vowel is not spoken.
    if units.is_empty() {
        return Err(Error::NotDevanagari(
            word.chars().next().unwrap_or('\u{0000}'),
        ));
    }
    Ok(units)
}

/// Renders WX units as an ordinary reader-facing romanization ("dil",
/// "doodh"). Used for display and for orthographic comparisons when only a
/// Devanagari spelling is known.
pub fn wx_to_roman(units: &[char]) -> String {
    let mut out = String::new();
    for &u in units {
        out.push_str(match u {
            'a' => "a",
            'A' => "aa",
            'i' => "i",
            'I' => "ee",
            'u' => "u",
            'U' => "oo",
            'q' => "ri",
            'e' => "e",
            'E' => "ai",
            'o' => "o",
            'O' => "au",
            'k' => "k",
            'K' => "kh",
            'g' => "g",
            'G' => "gh",
            'f' => "ng",
            'c' => "ch",
            'C' => "chh",
            'j' => "j",
            'J' => "jh",
            'F' => "n",
            't' => "t",
            'T' => "th",
            'd' => "d",
            'D' => "dh",
            'N' => "n",
            'w' => "t",
            'W' => "th",
            'x' => "d",
            'X' => "dh",
            'n' => "n",
            'p' => "p",
            'P' => "ph",
            'b' => "b",
            'B' => "bh",
            'm' => "m",
            'y' => "y",
            'r' => "r",
            'l' => "l",
            'v' => "v",
            'S' => "sh",
            'R' => "sh",
            's' => "s",
            'h' => "h",
            'M' => "n",
            'H' => "h",
            other => {
                out.push(other);
                continue;
            }
        });
    }
    out
}
