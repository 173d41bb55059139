use std::path::Path;

use serde_json::Value;
use thiserror::Error;

use crate::script::normalize_str;

pub const DEFAULT_ENDPOINT: &str = "https://query.wikidata.org/sparql";
pub const ENDPOINT_ENV: &str = "CKB_SPELL_SPARQL_ENDPOINT";
pub const DEFAULT_LIMIT: usize = 100;

const LABEL_VAR: &str = "itemLabel";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QueryError {
    #[error("`{0}` is not a concept identifier (Q followed by digits)")]
    BadConceptId(String),
}

#[derive(Debug, Error)]
pub enum FetchError {
    #[error("endpoint {endpoint} unreachable: {reason}")]
    EndpointUnreachable { endpoint: String, reason: String },
    #[error("malformed response: {0}")]
    MalformedResponse(String),
}

fn is_concept_id(id: &str) -> bool {
    id.strip_prefix('Q')
        .is_some_and(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
}

/// Sorani labels of the items that are instances of `concept_id` and have an
/// article on the Sorani Wikipedia. `Q515` city, `Q6256` country, `Q5` human.
pub fn build_sparql_query(concept_id: &str, limit: usize) -> Result<String, QueryError> {
    if !is_concept_id(concept_id) {
        return Err(QueryError::BadConceptId(concept_id.to_string()));
    }
    Ok(format!(
        r#"SELECT ?itemLabel
{{
  ?item wdt:P31 wd:{concept_id} .
  ?article schema:about ?item .
  ?article schema:isPartOf <https://ckb.wikipedia.org/> .
  SERVICE wikibase:label {{ bd:serviceParam wikibase:language "ckb" . }}
  FILTER(EXISTS {{
    ?item rdfs:label ?lang_label.
    FILTER(LANG(?lang_label) = "ckb")
  }})
}} LIMIT {limit}
"#
    ))
}

/// Runs a query and returns the raw JSON result body.
pub trait Transport {
    fn execute(&self, endpoint: &str, query: &str) -> Result<String, FetchError>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct HttpTransport;

impl Transport for HttpTransport {
    fn execute(&self, endpoint: &str, query: &str) -> Result<String, FetchError> {
        let unreachable = |reason: String| FetchError::EndpointUnreachable {
            endpoint: endpoint.to_string(),
            reason,
        };
        let mut response = ureq::get(endpoint)
            .query("query", query)
            .query("format", "json")
            .header("Accept", "application/sparql-results+json")
            .header(
                "User-Agent",
                concat!("ckb-spell/", env!("CARGO_PKG_VERSION")),
            )
            .call()
            .map_err(|e| unreachable(e.to_string()))?;
        response
            .body_mut()
            .read_to_string()
            .map_err(|e| unreachable(e.to_string()))
    }
}

/// Replays a recorded response regardless of the query.
#[derive(Debug, Clone)]
pub struct FixtureTransport {
    body: String,
}

impl FixtureTransport {
    pub fn new(body: impl Into<String>) -> Self {
        FixtureTransport { body: body.into() }
    }

    pub fn from_file(path: &Path) -> std::io::Result<Self> {
        Ok(FixtureTransport::new(std::fs::read_to_string(path)?))
    }
}

impl Transport for FixtureTransport {
    fn execute(&self, _endpoint: &str, _query: &str) -> Result<String, FetchError> {
        Ok(self.body.clone())
    }
}

/// Extracts and normalizes the `itemLabel` column of a SPARQL JSON result.
pub fn parse_label_response(body: &str) -> Result<Vec<String>, FetchError> {
    let malformed = |m: &str| FetchError::MalformedResponse(m.to_string());
    let json: Value = serde_json::from_str(body).map_err(|e| malformed(&e.to_string()))?;
    let bindings = json
        .pointer("/results/bindings")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("no results.bindings array"))?;
    bindings
        .iter()
        .map(|b| {
            b.get(LABEL_VAR)
                .and_then(|l| l.get("value"))
                .and_then(Value::as_str)
                .map(normalize_str)
                .ok_or_else(|| malformed("binding without itemLabel value"))
        })
        .collect()
}

pub fn fetch_labels(
    transport: &dyn Transport,
    endpoint: &str,
    query: &str,
) -> Result<Vec<String>, FetchError> {
    parse_label_response(&transport.execute(endpoint, query)?)
}
