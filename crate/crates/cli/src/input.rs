//! Plain-text and FASTA ingestion.

use palwild::{Result, WildcardString};

/// Id given to the single record of a plain-text input.
pub const PLAIN_ID: &str = "input";

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub id: String,
    pub parsed: Result<WildcardString>,
}

/// Splits `bytes` into records. Input starting with `>` is FASTA; anything
/// else is one string, the whole stream minus its trailing line break.
pub fn parse_input(bytes: &[u8], wildcard: u8, map_n: bool) -> Vec<Record> {
    let is_wildcard = |b: u8| b == wildcard || (map_n && (b == b'N' || b == b'n'));
    let encode = |text: &[u8]| WildcardString::from_text_with(text, is_wildcard);
    if bytes.first() != Some(&b'>') {
        let text = bytes.strip_suffix(b"\n").unwrap_or(bytes);
        let text = text.strip_suffix(b"\r").unwrap_or(text);
        return vec![Record {
            id: PLAIN_ID.to_string(),
            parsed: encode(text),
        }];
    }

    let mut records = Vec::new();
    let mut current: Option<(String, Vec<u8>)> = None;
    for line in bytes.split(|&b| b == b'\n') {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if let Some(header) = line.strip_prefix(b">") {
            records.extend(current.take());
            let id = header
                .split(|b| b.is_ascii_whitespace())
                .next()
                .unwrap_or_default();
            current = Some((String::from_utf8_lossy(id).into_owned(), Vec::new()));
        } else if let Some((_, seq)) = current.as_mut() {
            seq.extend_from_slice(line.trim_ascii_end());
        }
    }
    records.extend(current);
    records
        .into_iter()
        .map(|(id, seq)| Record {
            id,
            parsed: encode(&seq),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use palwild::Error;

    #[test]
    fn fasta_record() {
        let r = parse_input(b">r1\nAB?BA\n", b'?', false);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].id, "r1");
        let s = r[0].parsed.as_ref().unwrap();
        assert_eq!((s.len(), s.fragment_count()), (5, 1));
    }

    #[test]
    fn plain_text_keeps_other_bytes() {
        let r = parse_input("abφ?\n".as_bytes(), b'?', false);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].id, PLAIN_ID);
        let s = r[0].parsed.as_ref().unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.fragment_count(), 1);
        let r = parse_input(b"ab\r\n", b'?', false);
        assert_eq!(r[0].parsed.as_ref().unwrap().len(), 2);
    }

    #[test]
    fn empty_record_is_isolated() {
        let r = parse_input(b">r1\n\n>r2\nA\n", b'?', false);
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].parsed, Err(Error::EmptyInput));
        assert_eq!(r[1].id, "r2");
        assert_eq!(r[1].parsed.as_ref().unwrap().len(), 1);
        assert_eq!(parse_input(b"", b'?', false)[0].parsed, Err(Error::EmptyInput));
    }

    #[test]
    fn multi_line_fasta_and_map_n() {
        let r = parse_input(b">chr1 description\r\nACGN\r\nnnTT \n>x\nN\n", b'?', true);
        assert_eq!(r[0].id, "chr1");
        let s = r[0].parsed.as_ref().unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s.fragment_count(), 1);
        assert!(r[1].parsed.as_ref().unwrap()[0].is_wildcard());
        let plain = parse_input(b"ACGN", b'?', false);
        assert!(!plain[0].parsed.as_ref().unwrap()[3].is_wildcard());
    }
}
