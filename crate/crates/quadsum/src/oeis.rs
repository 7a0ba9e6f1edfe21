//! OEIS b-files: parsing, an on-disk cache, a rate-limited fetcher and
//! comparison against computed counting sequences.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use quadsum_core::statements::{sequence_of, Convention, StatementRecord};
use quadsum_core::Error as CoreError;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Network,
    Cache,
    Fixture,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub a_number: String,
    pub entries: Vec<(i64, i64)>,
    pub source: Source,
}

pub fn is_well_formed(a: &str) -> bool {
    let b = a.as_bytes();
    b.len() == 7 && b[0] == b'A' && b[1..].iter().all(u8::is_ascii_digit)
}

fn check(a: &str) -> Result<()> {
    if is_well_formed(a) {
        Ok(())
    } else {
        Err(Error::MalformedANumber(a.to_string()))
    }
}

/// `b281494.txt` for `A281494`.
pub fn file_name(a: &str) -> String {
    format!("b{}.txt", &a[1..])
}

pub fn parse(a_number: &str, text: &str, source: Source) -> Result<BFile> {
    check(a_number)?;
    let err = |line: usize, msg: &str| Error::Parse {
        a_number: a_number.to_string(),
        line,
        msg: msg.to_string(),
    };
    let mut entries: Vec<(i64, i64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(err(i + 1, "expected `<index> <value>`"));
        };
        let idx: i64 = a
            .parse()
            .map_err(|_| err(i + 1, "index is not an integer"))?;
        let val: i64 = b
            .parse()
            .map_err(|_| err(i + 1, "value is not an integer in range"))?;
        if entries.last().is_some_and(|&(p, _)| p >= idx) {
            return Err(err(i + 1, "indices must increase strictly"));
        }
        entries.push((idx, val));
    }
    Ok(BFile {
        a_number: a_number.to_string(),
        entries,
        source,
    })
}

pub fn render(b: &BFile) -> String {
    let mut s = String::new();
    for (i, v) in &b.entries {
        s.push_str(&format!("{i} {v}\n"));
    }
    s
}

const FIXTURES: [(&str, &str); 3] = [
    ("A281494", include_str!("../fixtures/b281494.txt")),
    ("A275344", include_str!("../fixtures/b275344.txt")),
    ("A299924", include_str!("../fixtures/b299924.txt")),
];

/// A-numbers with an offline snapshot bundled in the binary.
pub fn fixture_numbers() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.0).collect()
}

pub fn fixture(a: &str) -> Option<Result<BFile>> {
    FIXTURES
        .iter()
        .find(|f| f.0 == a)
        .map(|f| parse(a, f.1, Source::Fixture))
}

pub fn default_cache_dir() -> PathBuf {
    match std::env::var_os("OEIS_CACHE_DIR") {
        Some(d) if !d.is_empty() => PathBuf::from(d),
        _ => dirs::cache_dir()
            .unwrap_or_else(std::env::temp_dir)
            .join("quadsum")
            .join("oeis"),
    }
}

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

pub struct Client {
    pub cache_dir: PathBuf,
    pub base_url: String,
    pub offline: bool,
    /// least spacing between two requests
    pub min_interval: Duration,
    /// retries after the first failed attempt
    pub retries: u32,
    /// first retry delay; doubled each time
    pub backoff: Duration,
    last_request: Mutex<Option<Instant>>,
    agent: ureq::Agent,
}

impl Client {
    pub fn new(cache_dir: PathBuf, offline: bool) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(Duration::from_secs(30)))
            .build()
            .into();
        Client {
            cache_dir,
            base_url: DEFAULT_BASE_URL.to_string(),
            offline,
            min_interval: Duration::from_secs(1),
            retries: 3,
            backoff: Duration::from_secs(1),
            last_request: Mutex::new(None),
            agent,
        }
    }

    pub fn cache_path(&self, a: &str) -> PathBuf {
        self.cache_dir.join(file_name(a))
    }

    /// Cache first; then the network, or the bundled snapshot when offline.
    pub fn fetch_bfile(&self, a: &str) -> Result<BFile> {
        check(a)?;
        let path = self.cache_path(a);
        if let Ok(text) = fs::read_to_string(&path) {
            return parse(a, &text, Source::Cache);
        }
        if self.offline {
            return fixture(a).unwrap_or_else(|| {
                Err(Error::Unavailable {
                    a_number: a.to_string(),
                    reason: "offline, not cached, no bundled snapshot".into(),
                })
            });
        }
        let text = self.download(a)?;
        let b = parse(a, &text, Source::Network)?;
        write_atomic(&path, &text)?;
        Ok(b)
    }

    fn download(&self, a: &str) -> Result<String> {
        let url = format!(
            "{}/{}/{}",
            self.base_url.trim_end_matches('/'),
            a,
            file_name(a)
        );
        let mut delay = self.backoff;
        let mut last = String::new();
        for attempt in 0..=self.retries {
            if attempt > 0 {
                thread::sleep(delay);
                delay *= 2;
            }
            self.wait_turn();
            match self.agent.get(&url).call() {
                Ok(mut resp) => match resp.body_mut().read_to_string() {
                    Ok(t) => return Ok(t),
                    Err(e) => last = e.to_string(),
                },
                Err(ureq::Error::StatusCode(404)) => {
                    return Err(Error::Unavailable {
                        a_number: a.to_string(),
                        reason: format!("{url}: not found"),
                    });
                }
                Err(e) => last = e.to_string(),
            }
        }
        Err(Error::Unavailable {
            a_number: a.to_string(),
            reason: format!("{url}: {last}"),
        })
    }

    fn wait_turn(&self) {
        let mut last = self.last_request.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(t) = *last {
            let since = t.elapsed();
            if since < self.min_interval {
                thread::sleep(self.min_interval - since);
            }
        }
        *last = Some(Instant::now());
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().and_then(|f| f.to_str()).unwrap_or("bfile"),
        std::process::id()
    ));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub matched: u64,
    /// (index, expected from the b-file, computed)
    pub first_mismatch: Option<(i64, i64, i64)>,
}

/// Compares the first `limit` b-file entries whose index was computed.
pub fn compare(computed: &[(i64, u64)], b: &BFile, limit: usize) -> Result<CompareReport> {
    if limit == 0 {
        return Err(CoreError::InvalidArgument("limit must be at least 1".into()).into());
    }
    let got: BTreeMap<i64, u64> = computed.iter().copied().collect();
    let mut matched = 0;
    let mut seen = 0;
    for &(i, expected) in &b.entries {
        let Some(&g) = got.get(&i) else { continue };
        seen += 1;
        if g as i128 != expected as i128 {
            return Ok(CompareReport {
                matched,
                first_mismatch: Some((i, expected, g as i64)),
            });
        }
        matched += 1;
        if seen == limit {
            break;
        }
    }
    if seen == 0 {
        return Err(Error::NoOverlap);
    }
    Ok(CompareReport {
        matched,
        first_mismatch: None,
    })
}

/// Whether `a` counts `rec`'s representations canonically (`true`) or as
/// ordered tuples (`false`).
pub fn convention(rec: &StatementRecord, a: &str) -> Result<bool> {
    let r = rec
        .oeis_refs
        .iter()
        .find(|r| r.a_number == a)
        .ok_or_else(|| {
            CoreError::InvalidArgument(format!("{a} is not attached to {}", rec.id()))
        })?;
    match r.convention {
        Convention::Canonical => Ok(true),
        Convention::Ordered => Ok(false),
        Convention::Unknown => Err(CoreError::UnknownConvention(rec.id().to_string()).into()),
    }
}

/// Computes `rec`'s counts over the first `limit` applicable b-file indices
/// and compares them.
pub fn check_statement(rec: &StatementRecord, b: &BFile, limit: usize) -> Result<CompareReport> {
    let canonical = convention(rec, &b.a_number)?;
    let window: Vec<i64> = b
        .entries
        .iter()
        .map(|e| e.0)
        .filter(|&n| rec.statement.applies(n))
        .take(limit)
        .collect();
    let (Some(&lo), Some(&hi)) = (window.first(), window.last()) else {
        return Err(Error::NoOverlap);
    };
    let computed = sequence_of(&rec.statement, canonical, lo, hi)?;
    compare(&computed, b, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let b = parse(
            "A000001",
            "# header\n\n0 1\r\n1 1\n  2 2\n",
            Source::Fixture,
        )
        .unwrap();
        assert_eq!(b.entries, [(0, 1), (1, 1), (2, 2)]);
        assert_eq!(parse("A000001", &render(&b), Source::Fixture).unwrap(), b);
        match parse("A000001", "1 1\n1 2\n", Source::Cache) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("A000001", "1 x\n", Source::Cache),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("A000001", "1 2 3\n", Source::Cache),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("A28149", "", Source::Cache),
            Err(Error::MalformedANumber(_))
        ));
    }

    #[test]
    fn fixtures_round_trip() {
        for a in fixture_numbers() {
            let b = fixture(a).unwrap().unwrap();
            assert!(b.entries.len() >= 50);
            assert_eq!(parse(a, &render(&b), Source::Fixture).unwrap(), b);
        }
    }

    #[test]
    fn compare_cases() {
        let b = parse("A000001", "1 5\n2 6\n3 7\n", Source::Fixture).unwrap();
        let c = [(0, 9), (1, 5), (2, 6), (3, 7)];
        assert_eq!(
            compare(&c, &b, 10).unwrap(),
            CompareReport {
                matched: 3,
                first_mismatch: None
            }
        );
        assert_eq!(compare(&c, &b, 2).unwrap().matched, 2);
        let bad = [(1, 5), (2, 8), (3, 7)];
        assert_eq!(
            compare(&bad, &b, 10).unwrap().first_mismatch,
            Some((2, 6, 8))
        );
        assert!(matches!(compare(&[(9, 1)], &b, 10), Err(Error::NoOverlap)));
        assert!(compare(&c, &b, 0).is_err());
    }

    #[test]
    fn offline_cache_then_fixture() {
        let dir = tempfile::tempdir().unwrap();
        let client = Client::new(dir.path().to_path_buf(), true);
        let b = client.fetch_bfile("A281494").unwrap();
        assert_eq!(b.source, Source::Fixture);
        assert!(matches!(
            client.fetch_bfile("A000045"),
            Err(Error::Unavailable { .. })
        ));
        assert!(matches!(
            client.fetch_bfile("A28149"),
            Err(Error::MalformedANumber(_))
        ));
        write_atomic(&client.cache_path("A000045"), "0 0\n1 1\n2 1\n").unwrap();
        let c = client.fetch_bfile("A000045").unwrap();
        assert_eq!(c.source, Source::Cache);
        assert_eq!(c.entries.len(), 3);
    }
}
