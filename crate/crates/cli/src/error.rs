use serde::Serialize;
use sitepc::enumeration::EnumerationError;
use sitepc::lace::LaceError;
use sitepc::lattice::GeometryError;
use sitepc::series::SeriesError;

#[derive(Debug)]
pub enum CliError {
    /// Invalid arguments or input; exit status 2.
    Usage(String),
    /// A size or resource limit would be exceeded; exit status 4.
    Budget(String),
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    schema: &'static str,
    kind: &'static str,
    message: &'a str,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 4,
        }
    }

    /// One-line JSON description for stderr.
    pub fn to_json(&self) -> String {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Budget(m) => ("budget", m),
        };
        serde_json::to_string(&ErrorJson { schema: "sitepc/error/v1", kind, message }).expect("plain strings")
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::TooLarge { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::WalkBudget { .. }
            | EnumerationError::TooManySites { .. }
            | EnumerationError::UnionBudget(_) => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LaceError> for CliError {
    fn from(e: LaceError) -> Self {
        CliError::Usage(e.to_string())
    }
}
