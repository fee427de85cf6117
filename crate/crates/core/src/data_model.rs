//! Dataset schema, splits, class statistics, and manifest ingestion.
//!
//! A corpus is a flat list of [`MultimodalSample`]s stored as either TSV
//! (fixed column order) or JSON-Lines (fixed keys). Both carry the same
//! seven fields. Image files are referenced by path relative to the
//! manifest location and are never embedded.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The five humanitarian categories, in fixed index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HumanitarianLabel {
    AffectedIndividuals,
    InfrastructureDamage,
    NotHumanitarian,
    OtherRelevant,
    RescueVolunteering,
}

impl HumanitarianLabel {
    pub const ALL: [HumanitarianLabel; 5] = [
        HumanitarianLabel::AffectedIndividuals,
        HumanitarianLabel::InfrastructureDamage,
        HumanitarianLabel::NotHumanitarian,
        HumanitarianLabel::OtherRelevant,
        HumanitarianLabel::RescueVolunteering,
    ];

    pub const COUNT: usize = 5;

    pub fn index(self) -> usize {
        match self {
            HumanitarianLabel::AffectedIndividuals => 0,
            HumanitarianLabel::InfrastructureDamage => 1,
            HumanitarianLabel::NotHumanitarian => 2,
            HumanitarianLabel::OtherRelevant => 3,
            HumanitarianLabel::RescueVolunteering => 4,
        }
    }

    pub fn from_index(i: usize) -> Option<HumanitarianLabel> {
        Self::ALL.get(i).copied()
    }

    /// Canonical manifest spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            HumanitarianLabel::AffectedIndividuals => "affected_individuals",
            HumanitarianLabel::InfrastructureDamage => "infrastructure_damage",
            HumanitarianLabel::NotHumanitarian => "not_humanitarian",
            HumanitarianLabel::OtherRelevant => "other_relevant",
            HumanitarianLabel::RescueVolunteering => "rescue_volunteering",
        }
    }

    /// Human-readable phrase, used in generation prompt templates.
    pub fn phrase(self) -> &'static str {
        match self {
            HumanitarianLabel::AffectedIndividuals => "affected individuals",
            HumanitarianLabel::InfrastructureDamage => "infrastructure and utility damage",
            HumanitarianLabel::NotHumanitarian => "a scene unrelated to humanitarian aid",
            HumanitarianLabel::OtherRelevant => "other relevant information",
            HumanitarianLabel::RescueVolunteering => "rescue volunteering or donation effort",
        }
    }
}

impl fmt::Display for HumanitarianLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Case-insensitive; spaces and underscores are interchangeable.
fn normalize_token(s: &str) -> String {
    s.trim().to_lowercase().replace(' ', "_")
}

impl FromStr for HumanitarianLabel {
    type Err = DataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match normalize_token(s).as_str() {
            "affected_individuals" => Ok(HumanitarianLabel::AffectedIndividuals),
            "infrastructure_damage" => Ok(HumanitarianLabel::InfrastructureDamage),
            "not_humanitarian" => Ok(HumanitarianLabel::NotHumanitarian),
            "other_relevant" => Ok(HumanitarianLabel::OtherRelevant),
            "rescue_volunteering" => Ok(HumanitarianLabel::RescueVolunteering),
            _ => Err(DataError::UnknownLabel(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Dev,
    Test,
}

impl Split {
    pub const ALL: [Split; 3] = [Split::Train, Split::Dev, Split::Test];

    pub fn index(self) -> usize {
        match self {
            Split::Train => 0,
            Split::Dev => 1,
            Split::Test => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Dev => "dev",
            Split::Test => "test",
        }
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Split {
    type Err = DataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match normalize_token(s).as_str() {
            "train" => Ok(Split::Train),
            "dev" | "val" | "validation" => Ok(Split::Dev),
            "test" => Ok(Split::Test),
            _ => Err(DataError::UnknownSplit(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Original,
    Augmented,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Original => "original",
            Provenance::Augmented => "augmented",
        }
    }
}

impl FromStr for Provenance {
    type Err = DataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match normalize_token(s).as_str() {
            "" | "original" => Ok(Provenance::Original),
            "augmented" => Ok(Provenance::Augmented),
            _ => Err(DataError::UnknownProvenance(s.to_string())),
        }
    }
}

/// One tweet with its image reference and annotations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultimodalSample {
    pub sample_id: String,
    pub tweet_text: String,
    pub image_ref: String,
    pub label: HumanitarianLabel,
    pub split: Split,
    pub provenance: Provenance,
    pub parent_id: Option<String>,
}

impl MultimodalSample {
    pub fn original(
        sample_id: impl Into<String>,
        tweet_text: impl Into<String>,
        image_ref: impl Into<String>,
        label: HumanitarianLabel,
        split: Split,
    ) -> Self {
        MultimodalSample {
            sample_id: sample_id.into(),
            tweet_text: tweet_text.into(),
            image_ref: image_ref.into(),
            label,
            split,
            provenance: Provenance::Original,
            parent_id: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum DataError {
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("tsv error at {path}: {source}")]
    Tsv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("unknown label '{0}'")]
    UnknownLabel(String),
    #[error("unknown split '{0}'")]
    UnknownSplit(String),
    #[error("unknown provenance '{0}'")]
    UnknownProvenance(String),
    #[error("duplicate sample_id '{0}'")]
    DuplicateSampleId(String),
    #[error("unsupported manifest format for {0}")]
    UnsupportedFormat(PathBuf),
    #[error("empty train split")]
    EmptyTrainSplit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ManifestFormat {
    Tsv,
    Jsonl,
}

impl ManifestFormat {
    pub fn from_path(path: &Path) -> Result<ManifestFormat, DataError> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("tsv") => Ok(ManifestFormat::Tsv),
            Some("jsonl") | Some("ndjson") => Ok(ManifestFormat::Jsonl),
            _ => Err(DataError::UnsupportedFormat(path.to_path_buf())),
        }
    }
}

impl FromStr for ManifestFormat {
    type Err = DataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match normalize_token(s).as_str() {
            "tsv" => Ok(ManifestFormat::Tsv),
            "jsonl" | "ndjson" => Ok(ManifestFormat::Jsonl),
            _ => Err(DataError::UnsupportedFormat(PathBuf::from(s))),
        }
    }
}

/// Diagnostic for a manifest row that was rejected without aborting the load.
#[derive(Debug, Clone, Serialize)]
pub struct RowError {
    /// 1-based data row number (header excluded for TSV).
    pub row: usize,
    pub sample_id: Option<String>,
    pub message: String,
}

/// Result of loading one manifest: accepted samples, rejected rows, warnings.
#[derive(Debug)]
pub struct ManifestLoad {
    pub samples: Vec<MultimodalSample>,
    pub row_errors: Vec<RowError>,
    pub warnings: Vec<String>,
    pub base_dir: PathBuf,
}

const TSV_COLUMNS: [&str; 7] = [
    "sample_id",
    "tweet_text",
    "image_ref",
    "label",
    "split",
    "provenance",
    "parent_id",
];

#[derive(Debug, Deserialize)]
struct RawRow {
    sample_id: String,
    tweet_text: String,
    image_ref: String,
    label: String,
    split: String,
    #[serde(default)]
    provenance: Option<String>,
    #[serde(default)]
    parent_id: Option<String>,
}

fn parse_row(raw: RawRow, row: usize, errors: &mut Vec<RowError>) -> Option<MultimodalSample> {
    let mut fail = |msg: String, id: &str| {
        errors.push(RowError {
            row,
            sample_id: if id.is_empty() { None } else { Some(id.to_string()) },
            message: msg,
        });
        None
    };
    if raw.sample_id.trim().is_empty() {
        return fail("empty sample_id".into(), "");
    }
    if raw.tweet_text.is_empty() {
        return fail("empty tweet_text".into(), &raw.sample_id);
    }
    let label = match raw.label.parse::<HumanitarianLabel>() {
        Ok(l) => l,
        Err(e) => return fail(e.to_string(), &raw.sample_id),
    };
    let split = match raw.split.parse::<Split>() {
        Ok(s) => s,
        Err(e) => return fail(e.to_string(), &raw.sample_id),
    };
    let provenance = match raw.provenance.as_deref().unwrap_or("").parse::<Provenance>() {
        Ok(p) => p,
        Err(e) => return fail(e.to_string(), &raw.sample_id),
    };
    let parent_id = raw.parent_id.filter(|p| !p.trim().is_empty());
    Some(MultimodalSample {
        sample_id: raw.sample_id,
        tweet_text: raw.tweet_text,
        image_ref: raw.image_ref,
        label,
        split,
        provenance,
        parent_id,
    })
}

/// Load and validate a manifest. Rows with bad enum values or broken
/// provenance links are rejected with a diagnostic; a duplicate
/// `sample_id` aborts the load. Missing image files are warnings here
/// (they become hard errors when a training run tries to read them).
pub fn load_manifest(path: &Path, format: ManifestFormat) -> Result<ManifestLoad, DataError> {
    let mut row_errors = Vec::new();
    let mut parsed: Vec<(usize, MultimodalSample)> = Vec::new();

    match format {
        ManifestFormat::Tsv => {
            let mut reader = csv::ReaderBuilder::new()
                .delimiter(b'\t')
                .flexible(true)
                .from_path(path)
                .map_err(|source| DataError::Tsv { path: path.to_path_buf(), source })?;
            for (i, record) in reader.deserialize::<RawRow>().enumerate() {
                let row = i + 1;
                match record {
                    Ok(raw) => {
                        if let Some(s) = parse_row(raw, row, &mut row_errors) {
                            parsed.push((row, s));
                        }
                    }
                    Err(e) => row_errors.push(RowError {
                        row,
                        sample_id: None,
                        message: format!("malformed tsv row: {e}"),
                    }),
                }
            }
        }
        ManifestFormat::Jsonl => {
            let file = File::open(path)
                .map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let row = i + 1;
                let line = line.map_err(|source| DataError::Io {
                    path: path.to_path_buf(),
                    source,
                })?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<RawRow>(&line) {
                    Ok(raw) => {
                        if let Some(s) = parse_row(raw, row, &mut row_errors) {
                            parsed.push((row, s));
                        }
                    }
                    Err(e) => row_errors.push(RowError {
                        row,
                        sample_id: None,
                        message: format!("malformed json row: {e}"),
                    }),
                }
            }
        }
    }

    // Duplicate ids are fatal: downstream provenance links would be ambiguous.
    let mut seen = HashSet::new();
    for (_, s) in &parsed {
        if !seen.insert(s.sample_id.clone()) {
            return Err(DataError::DuplicateSampleId(s.sample_id.clone()));
        }
    }

    // Provenance links are resolved against the whole manifest, so parents
    // may appear after their children.
    let by_id: HashMap<String, (Split, Provenance)> = parsed
        .iter()
        .map(|(_, s)| (s.sample_id.clone(), (s.split, s.provenance)))
        .collect();

    let mut samples = Vec::with_capacity(parsed.len());
    for (row, s) in parsed {
        let mut reject = |msg: String, id: &str| {
            row_errors.push(RowError {
                row,
                sample_id: Some(id.to_string()),
                message: msg,
            });
        };
        match (s.provenance, &s.parent_id) {
            (Provenance::Original, Some(p)) => {
                reject(format!("original sample carries parent_id '{p}'"), &s.sample_id);
                continue;
            }
            (Provenance::Augmented, None) => {
                reject("augmented sample without parent_id".into(), &s.sample_id);
                continue;
            }
            (Provenance::Augmented, Some(p)) => match by_id.get(p) {
                None => {
                    reject(format!("parent_id '{p}' not found in manifest"), &s.sample_id);
                    continue;
                }
                Some((parent_split, _)) => {
                    if *parent_split != s.split {
                        reject(
                            format!(
                                "augmented sample split '{}' differs from parent split '{}'",
                                s.split, parent_split
                            ),
                            &s.sample_id,
                        );
                        continue;
                    }
                }
            },
            (Provenance::Original, None) => {}
        }
        samples.push(s);
    }

    let base_dir = path.parent().unwrap_or_else(|| Path::new(".")).to_path_buf();
    let mut warnings = Vec::new();
    for s in &samples {
        if !s.image_ref.is_empty() && !resolve_image_path(&base_dir, &s.image_ref).exists() {
            warnings.push(format!(
                "sample '{}': image file '{}' not found",
                s.sample_id, s.image_ref
            ));
        }
    }

    Ok(ManifestLoad { samples, row_errors, warnings, base_dir })
}

/// Resolve an `image_ref` relative to the directory holding the manifest.
pub fn resolve_image_path(base_dir: &Path, image_ref: &str) -> PathBuf {
    let p = Path::new(image_ref);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base_dir.join(p)
    }
}

pub fn write_manifest(
    samples: &[MultimodalSample],
    path: &Path,
    format: ManifestFormat,
) -> Result<(), DataError> {
    match format {
        ManifestFormat::Tsv => {
            let mut writer = csv::WriterBuilder::new()
                .delimiter(b'\t')
                .from_path(path)
                .map_err(|source| DataError::Tsv { path: path.to_path_buf(), source })?;
            writer
                .write_record(TSV_COLUMNS)
                .map_err(|source| DataError::Tsv { path: path.to_path_buf(), source })?;
            for s in samples {
                writer
                    .write_record([
                        s.sample_id.as_str(),
                        s.tweet_text.as_str(),
                        s.image_ref.as_str(),
                        s.label.as_str(),
                        s.split.as_str(),
                        s.provenance.as_str(),
                        s.parent_id.as_deref().unwrap_or(""),
                    ])
                    .map_err(|source| DataError::Tsv { path: path.to_path_buf(), source })?;
            }
            writer
                .flush()
                .map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
        }
        ManifestFormat::Jsonl => {
            let file = File::create(path)
                .map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
            let mut w = BufWriter::new(file);
            for s in samples {
                let line = serde_json::to_string(s).expect("sample serializes");
                writeln!(w, "{line}")
                    .map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
            }
            w.flush()
                .map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
        }
    }
    Ok(())
}

/// Per-split, per-class sample counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassDistribution {
    counts: [[u64; HumanitarianLabel::COUNT]; 3],
}

impl ClassDistribution {
    pub fn count(&self, split: Split, label: HumanitarianLabel) -> u64 {
        self.counts[split.index()][label.index()]
    }

    pub fn total(&self, split: Split) -> u64 {
        self.counts[split.index()].iter().sum()
    }

    pub fn set(&mut self, split: Split, label: HumanitarianLabel, n: u64) {
        self.counts[split.index()][label.index()] = n;
    }

    pub fn add(&mut self, split: Split, label: HumanitarianLabel, n: u64) {
        self.counts[split.index()][label.index()] += n;
    }
}

impl Serialize for ClassDistribution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(3))?;
        for split in Split::ALL {
            let mut inner = serde_json::Map::new();
            for label in HumanitarianLabel::ALL {
                inner.insert(
                    label.as_str().to_string(),
                    serde_json::Value::from(self.count(split, label)),
                );
            }
            inner.insert("total".to_string(), serde_json::Value::from(self.total(split)));
            map.serialize_entry(split.as_str(), &inner)?;
        }
        map.end()
    }
}

pub fn class_distribution(samples: &[MultimodalSample]) -> ClassDistribution {
    let mut dist = ClassDistribution::default();
    for s in samples {
        dist.add(s.split, s.label, 1);
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImbalanceEntry {
    pub label: HumanitarianLabel,
    pub count: u64,
    pub fraction: f64,
}

/// Train-split class ranking, largest class first. Ties break on label index.
pub fn imbalance_report(dist: &ClassDistribution) -> Result<Vec<ImbalanceEntry>, DataError> {
    let total = dist.total(Split::Train);
    if total == 0 {
        return Err(DataError::EmptyTrainSplit);
    }
    let mut entries: Vec<ImbalanceEntry> = HumanitarianLabel::ALL
        .iter()
        .map(|&label| {
            let count = dist.count(Split::Train, label);
            ImbalanceEntry { label, count, fraction: count as f64 / total as f64 }
        })
        .collect();
    entries.sort_by(|a, b| b.count.cmp(&a.count).then(a.label.index().cmp(&b.label.index())));
    Ok(entries)
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;
    use std::io::Write as _;

    fn sample(id: &str, label: HumanitarianLabel, split: Split) -> MultimodalSample {
        MultimodalSample::original(id, format!("text {id}"), format!("{id}.png"), label, split)
    }

    #[test]
    fn label_index_mapping_is_total_and_fixed() {
        for (i, label) in HumanitarianLabel::ALL.iter().enumerate() {
            assert_eq!(label.index(), i);
            assert_eq!(HumanitarianLabel::from_index(i), Some(*label));
        }
        assert_eq!(HumanitarianLabel::from_index(5), None);
    }

    #[test]
    fn label_normalization_accepts_case_and_space_variants() {
        for raw in ["Affected Individuals", "AFFECTED_INDIVIDUALS", " affected individuals "] {
            assert_eq!(
                raw.parse::<HumanitarianLabel>().unwrap(),
                HumanitarianLabel::AffectedIndividuals
            );
        }
        assert!("flood_damage".parse::<HumanitarianLabel>().is_err());
    }

    #[test]
    fn tsv_identity_parse_one_sample_per_class() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.tsv");
        let mut f = File::create(&path).unwrap();
        writeln!(f, "sample_id\ttweet_text\timage_ref\tlabel\tsplit\tprovenance\tparent_id")
            .unwrap();
        for (i, label) in HumanitarianLabel::ALL.iter().enumerate() {
            writeln!(f, "s{i}\ttext {i}\timg{i}.png\t{}\ttrain\t\t", label.as_str()).unwrap();
        }
        drop(f);
        let load = load_manifest(&path, ManifestFormat::Tsv).unwrap();
        assert_eq!(load.samples.len(), 5);
        assert!(load.row_errors.is_empty());
        let labels: Vec<_> = load.samples.iter().map(|s| s.label).collect();
        assert_eq!(labels, HumanitarianLabel::ALL.to_vec());
        // images do not exist on disk: warning, not error
        assert_eq!(load.warnings.len(), 5);
    }

    #[test]
    fn unknown_label_rejects_row_with_diagnostic() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.tsv");
        let mut f = File::create(&path).unwrap();
        writeln!(f, "sample_id\ttweet_text\timage_ref\tlabel\tsplit\tprovenance\tparent_id")
            .unwrap();
        writeln!(f, "a\tok\ta.png\tnot_humanitarian\ttrain\t\t").unwrap();
        writeln!(f, "b\tbad\tb.png\tflood_damage\ttrain\t\t").unwrap();
        drop(f);
        let load = load_manifest(&path, ManifestFormat::Tsv).unwrap();
        assert_eq!(load.samples.len(), 1);
        assert_eq!(load.row_errors.len(), 1);
        assert!(load.row_errors[0].message.contains("unknown label"));
        assert_eq!(load.row_errors[0].row, 2);
    }

    #[test]
    fn duplicate_sample_id_is_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.jsonl");
        let mut f = File::create(&path).unwrap();
        for _ in 0..2 {
            writeln!(
                f,
                r#"{{"sample_id":"x","tweet_text":"t","image_ref":"x.png","label":"not_humanitarian","split":"train"}}"#
            )
            .unwrap();
        }
        drop(f);
        let err = load_manifest(&path, ManifestFormat::Jsonl).unwrap_err();
        assert!(matches!(err, DataError::DuplicateSampleId(id) if id == "x"));
    }

    #[test]
    fn provenance_links_validated_on_ingestion() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.jsonl");
        let mut f = File::create(&path).unwrap();
        let rows = [
            r#"{"sample_id":"p","tweet_text":"t","image_ref":"p.png","label":"not_humanitarian","split":"train"}"#,
            // valid augmented child
            r#"{"sample_id":"p#aug0","tweet_text":"t2","image_ref":"p.png","label":"not_humanitarian","split":"train","provenance":"augmented","parent_id":"p"}"#,
            // split differs from parent -> rejected
            r#"{"sample_id":"bad1","tweet_text":"t","image_ref":"p.png","label":"not_humanitarian","split":"dev","provenance":"augmented","parent_id":"p"}"#,
            // dangling parent -> rejected
            r#"{"sample_id":"bad2","tweet_text":"t","image_ref":"p.png","label":"not_humanitarian","split":"train","provenance":"augmented","parent_id":"ghost"}"#,
            // augmented without parent -> rejected
            r#"{"sample_id":"bad3","tweet_text":"t","image_ref":"p.png","label":"not_humanitarian","split":"train","provenance":"augmented"}"#,
            // original with parent -> rejected
            r#"{"sample_id":"bad4","tweet_text":"t","image_ref":"p.png","label":"not_humanitarian","split":"train","parent_id":"p"}"#,
        ];
        for r in rows {
            writeln!(f, "{r}").unwrap();
        }
        drop(f);
        let load = load_manifest(&path, ManifestFormat::Jsonl).unwrap();
        let ids: Vec<_> = load.samples.iter().map(|s| s.sample_id.as_str()).collect();
        assert_eq!(ids, ["p", "p#aug0"]);
        assert_eq!(load.row_errors.len(), 4);
    }

    #[test]
    fn manifest_round_trip_is_field_exact() {
        let dir = tempfile::tempdir().unwrap();
        let mut samples = crisis_shaped_samples();
        samples.truncate(20);
        samples.push(MultimodalSample {
            sample_id: "p#aug0".into(),
            tweet_text: "augmented \"quoted\" text with #tag".into(),
            image_ref: "img/0.png".into(),
            label: HumanitarianLabel::AffectedIndividuals,
            split: Split::Train,
            provenance: Provenance::Augmented,
            parent_id: Some(samples[0].sample_id.clone()),
        });
        for format in [ManifestFormat::Tsv, ManifestFormat::Jsonl] {
            let path = dir.path().join(match format {
                ManifestFormat::Tsv => "m.tsv",
                ManifestFormat::Jsonl => "m.jsonl",
            });
            write_manifest(&samples, &path, format).unwrap();
            let load = load_manifest(&path, format).unwrap();
            assert!(load.row_errors.is_empty());
            assert_eq!(load.samples, samples);
        }
    }

    #[test]
    fn empty_input_gives_all_zero_counts() {
        let dist = class_distribution(&[]);
        for split in Split::ALL {
            assert_eq!(dist.total(split), 0);
        }
    }

    #[test]
    fn crisis_shape_distribution_matches_published_counts() {
        let dist = class_distribution(&crisis_shaped_samples());
        assert_eq!(dist.total(Split::Train), 6126);
        assert_eq!(dist.total(Split::Dev), 998);
        assert_eq!(dist.total(Split::Test), 955);
        for (label, train, dev, test) in CRISIS_COUNTS {
            assert_eq!(dist.count(Split::Train, label), train);
            assert_eq!(dist.count(Split::Dev, label), dev);
            assert_eq!(dist.count(Split::Test, label), test);
        }
    }

    #[test]
    fn distribution_totals_match_brute_force_recount() {
        let samples = crisis_shaped_samples();
        let dist = class_distribution(&samples);
        // independent counting pass
        for split in Split::ALL {
            for label in HumanitarianLabel::ALL {
                let brute = samples.iter().filter(|s| s.split == split && s.label == label).count();
                assert_eq!(dist.count(split, label), brute as u64);
            }
            let brute_total = samples.iter().filter(|s| s.split == split).count();
            assert_eq!(dist.total(split), brute_total as u64);
        }
    }

    #[test]
    fn distribution_is_permutation_invariant() {
        let samples = crisis_shaped_samples();
        let mut reversed = samples.clone();
        reversed.reverse();
        assert_eq!(class_distribution(&samples), class_distribution(&reversed));
    }

    #[test]
    fn imbalance_report_ranks_descending_and_fractions_sum_to_one() {
        let dist = class_distribution(&crisis_shaped_samples());
        let report = imbalance_report(&dist).unwrap();
        assert_eq!(report[0].label, HumanitarianLabel::NotHumanitarian);
        assert_eq!(report[0].count, 3252);
        for w in report.windows(2) {
            assert!(w[0].count >= w[1].count);
        }
        let sum: f64 = report.iter().map(|e| e.fraction).sum();
        assert!((sum - 1.0).abs() < 1e-9);
        // direct division oracle
        for e in &report {
            assert!((e.fraction - e.count as f64 / 6126.0).abs() < 1e-12);
        }
    }

    #[test]
    fn imbalance_report_uniform_counts_gives_equal_fractions() {
        let mut samples = Vec::new();
        for label in HumanitarianLabel::ALL {
            for i in 0..4 {
                samples.push(sample(&format!("{label}{i}"), label, Split::Train));
            }
        }
        let report = imbalance_report(&class_distribution(&samples)).unwrap();
        for e in report {
            assert!((e.fraction - 0.2).abs() < 1e-12);
        }
    }

    #[test]
    fn imbalance_report_empty_train_split_errors() {
        let samples = vec![sample("a", HumanitarianLabel::NotHumanitarian, Split::Test)];
        let err = imbalance_report(&class_distribution(&samples)).unwrap_err();
        assert!(matches!(err, DataError::EmptyTrainSplit));
    }
}
