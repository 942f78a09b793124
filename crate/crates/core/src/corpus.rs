//! Corpus file I/O.
//!
//! Accounts live in a UTF-8 JSON-lines file, one record per line; labels in
//! a two-column CSV with header `id,label`. Accounts without a label are
//! skipped (scoring-only corpora are legal inputs elsewhere), labels without
//! an account are reported back to the caller.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::account::{Account, Label, LabeledCorpus};
use crate::error::{Error, Result};

/// Outcome of [`load_corpus`]: the corpus plus everything that did not line up.
#[derive(Debug, Clone)]
pub struct CorpusLoad {
    pub corpus: LabeledCorpus,
    /// Ids present in the accounts file but absent from the labels file.
    pub unlabeled_account_ids: Vec<String>,
    /// Ids present in the labels file but absent from the accounts file.
    pub labels_without_account: Vec<String>,
}

/// Reads the accounts file (JSON lines) and labels file (CSV `id,label`) and
/// joins them into a [`LabeledCorpus`] named after the accounts file stem.
pub fn load_corpus(accounts_path: &Path, labels_path: &Path) -> Result<CorpusLoad> {
    let accounts = read_accounts(accounts_path)?;
    let labels = read_labels(labels_path)?;

    let mut remaining: BTreeMap<&str, Label> =
        labels.iter().map(|(id, l)| (id.as_str(), *l)).collect();
    let mut entries = Vec::new();
    let mut unlabeled = Vec::new();
    for account in accounts {
        match remaining.remove(account.id.as_str()) {
            Some(label) => entries.push((account, label)),
            None => unlabeled.push(account.id),
        }
    }
    let labels_without_account: Vec<String> = remaining.keys().map(|s| s.to_string()).collect();

    let name = accounts_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "corpus".to_string());
    Ok(CorpusLoad {
        corpus: LabeledCorpus::new(name, entries)?,
        unlabeled_account_ids: unlabeled,
        labels_without_account,
    })
}

/// Reads and validates a JSON-lines accounts file.
pub fn read_accounts(path: &Path) -> Result<Vec<Account>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let reader = BufReader::new(file);
    let display = path.display().to_string();

    let mut accounts = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let account: Account = serde_json::from_str(&line)
            .map_err(|e| Error::parse(&display, lineno, e.to_string()))?;
        account
            .validate()
            .map_err(|e| Error::parse(&display, lineno, e.to_string()))?;
        if !seen.insert(account.id.clone()) {
            return Err(Error::parse(
                &display,
                lineno,
                format!("duplicate account id {:?}", account.id),
            ));
        }
        accounts.push(account);
    }
    Ok(accounts)
}

/// Reads a labels CSV with header `id,label`.
pub fn read_labels(path: &Path) -> Result<Vec<(String, Label)>> {
    let display = path.display().to_string();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(|e| Error::parse(&display, 0, e.to_string()))?;

    {
        let headers = reader
            .headers()
            .map_err(|e| Error::parse(&display, 1, e.to_string()))?;
        let got: Vec<String> = headers.iter().map(|h| h.trim().to_ascii_lowercase()).collect();
        if got != ["id", "label"] {
            return Err(Error::parse(
                &display,
                1,
                format!("expected header \"id,label\", found {:?}", got.join(",")),
            ));
        }
    }

    let mut labels = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (idx, record) in reader.records().enumerate() {
        // +2: one for the header row, one for 1-based numbering.
        let lineno = idx + 2;
        let record = record.map_err(|e| Error::parse(&display, lineno, e.to_string()))?;
        if record.len() != 2 {
            return Err(Error::parse(
                &display,
                lineno,
                format!("expected 2 columns, found {}", record.len()),
            ));
        }
        let id = record[0].trim().to_string();
        let label: Label = record[1]
            .parse()
            .map_err(|e| Error::parse(&display, lineno, format!("{e}")))?;
        if !seen.insert(id.clone()) {
            return Err(Error::parse(
                &display,
                lineno,
                format!("duplicate label row for id {id:?}"),
            ));
        }
        labels.push((id, label));
    }
    Ok(labels)
}

/// Writes accounts as JSON lines.
pub fn write_accounts(accounts: &[Account], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    for account in accounts {
        let line = serde_json::to_string(account).expect("account serializes");
        writeln!(out, "{line}").map_err(|e| Error::io(path, e))?;
    }
    out.flush().map_err(|e| Error::io(path, e))
}

/// Writes a labels CSV with header `id,label`.
pub fn write_labels(labels: &[(String, Label)], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    writeln!(out, "id,label").map_err(|e| Error::io(path, e))?;
    for (id, label) in labels {
        writeln!(out, "{id},{label}").map_err(|e| Error::io(path, e))?;
    }
    out.flush().map_err(|e| Error::io(path, e))
}

/// Writes a corpus as an accounts file plus a labels file.
pub fn write_corpus(corpus: &LabeledCorpus, accounts_path: &Path, labels_path: &Path) -> Result<()> {
    let accounts: Vec<Account> = corpus.entries.iter().map(|(a, _)| a.clone()).collect();
    let labels: Vec<(String, Label)> = corpus
        .entries
        .iter()
        .map(|(a, l)| (a.id.clone(), *l))
        .collect();
    write_accounts(&accounts, accounts_path)?;
    write_labels(&labels, labels_path)
}
